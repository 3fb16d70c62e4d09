//! Fundamental-group presentations of Seifert manifolds, their
//! abelianization, and the base orbifold.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{self, smith_normal_form, Int};
use crate::error::Result;
use crate::seifert::SeifertFibration;

pub type Generator = usize;

/// Word in the generators as a list of `(generator, exponent)` syllables.
pub type Word = Vec<(Generator, Int)>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relator {
    /// The generator commutes with every other generator.
    Central(Generator),
    Commutator(Generator, Generator),
    Word(Word),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Relator>,
}

/// Invariant factors `d1 | d2 | ...` of `H_1`, trivial factors dropped and
/// `0` standing for a free `Z` summand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianInvariants(pub Vec<Int>);

impl AbelianInvariants {
    pub fn factors(&self) -> &[Int] {
        &self.0
    }

    pub fn free_rank(&self) -> usize {
        self.0.iter().filter(|&&d| d == 0).count()
    }

    /// Order of the group, `None` if infinite.
    pub fn order(&self) -> Option<Int> {
        if self.free_rank() > 0 {
            None
        } else {
            self.0.iter().try_fold(1, |acc, &d| arith::mul(acc, d).ok())
        }
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&d| if d == 0 { "Z".to_string() } else { format!("Z/{d}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseSurface {
    Sphere,
    ProjectivePlane,
    Orientable(Int),
    NonOrientable(Int),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseOrbifold {
    pub surface: BaseSurface,
    /// Cone point orders, largest first.
    pub cone_orders: Vec<Int>,
}

impl fmt::Display for BaseOrbifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.surface {
            BaseSurface::Sphere => f.write_str("S2")?,
            BaseSurface::ProjectivePlane => f.write_str("RP2")?,
            BaseSurface::Orientable(g) => write!(f, "Sigma_{g}")?,
            BaseSurface::NonOrientable(k) => write!(f, "N_{k}")?,
        }
        if !self.cone_orders.is_empty() {
            let orders: Vec<String> = self.cone_orders.iter().map(Int::to_string).collect();
            write!(f, "({})", orders.join(","))?;
        }
        Ok(())
    }
}

impl GroupPresentation {
    fn render_word(&self, word: &Word) -> String {
        let parts: Vec<String> = word
            .iter()
            .filter(|&&(_, e)| e != 0)
            .map(|&(g, e)| {
                let name = &self.generators[g];
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }

    pub fn render_relator(&self, r: &Relator) -> String {
        match r {
            Relator::Central(g) => format!("{} central", self.generators[*g]),
            Relator::Commutator(x, y) => format!("[{},{}]", self.generators[*x], self.generators[*y]),
            Relator::Word(w) => self.render_word(w),
        }
    }

    /// Exponent-sum matrix of the relators; commutator-type relators vanish.
    pub fn relation_matrix(&self) -> Result<Vec<Vec<Int>>> {
        let n = self.generators.len();
        let mut rows = Vec::new();
        for r in &self.relators {
            if let Relator::Word(w) = r {
                let mut row = vec![0; n];
                for &(g, e) in w {
                    row[g] = arith::add(row[g], e)?;
                }
                rows.push(row);
            }
        }
        Ok(rows)
    }

    pub fn abelianize(&self) -> Result<AbelianInvariants> {
        let matrix = self.relation_matrix()?;
        let cols = self.generators.len();
        let mut factors = if matrix.is_empty() {
            Vec::new()
        } else {
            smith_normal_form(&matrix)?
        };
        factors.resize(cols, 0);
        let mut torsion: Vec<Int> = factors.iter().copied().filter(|&d| d > 1).collect();
        torsion.sort_unstable();
        let free = factors.iter().filter(|&&d| d == 0).count();
        torsion.extend(std::iter::repeat_n(0, free));
        Ok(AbelianInvariants(torsion))
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.render_relator(r)).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))
    }
}

/// The standard presentation of `pi_1` of the total space.
pub fn presentation(f: &SeifertFibration) -> Result<GroupPresentation> {
    f.validate()?;
    let n = f.pairs.len();
    let mut generators = Vec::new();
    let mut relators = Vec::new();
    let g = f.genus.unsigned_abs() as usize;
    if f.genus >= 0 {
        for j in 1..=g {
            generators.push(format!("a{j}"));
            generators.push(format!("b{j}"));
        }
    } else {
        generators.extend((1..=g).map(|j| format!("a{j}")));
    }
    let q0 = generators.len();
    generators.extend((1..=n).map(|i| format!("q{i}")));
    let h = generators.len();
    generators.push("h".to_string());

    let mut product: Word = (0..n).map(|i| (q0 + i, 1)).collect();
    if f.genus >= 0 {
        relators.push(Relator::Central(h));
        for (i, pair) in f.pairs.iter().enumerate() {
            relators.push(Relator::Word(vec![(q0 + i, pair.alpha), (h, pair.beta)]));
        }
        for j in 0..g {
            let (a, b) = (2 * j, 2 * j + 1);
            product.extend([(a, 1), (b, 1), (a, -1), (b, -1)]);
        }
    } else {
        for a in 0..g {
            relators.push(Relator::Word(vec![(a, -1), (h, 1), (a, 1), (h, 1)]));
        }
        for i in 0..n {
            relators.push(Relator::Commutator(h, q0 + i));
        }
        for (i, pair) in f.pairs.iter().enumerate() {
            relators.push(Relator::Word(vec![(q0 + i, pair.alpha), (h, pair.beta)]));
        }
        product.extend((0..g).map(|a| (a, 2)));
    }
    if !product.is_empty() {
        relators.push(Relator::Word(product));
    }
    Ok(GroupPresentation { generators, relators })
}

pub fn first_homology(f: &SeifertFibration) -> Result<AbelianInvariants> {
    presentation(f)?.abelianize()
}

pub fn base_orbifold(f: &SeifertFibration) -> Result<BaseOrbifold> {
    f.validate()?;
    let surface = match f.genus {
        0 => BaseSurface::Sphere,
        -1 => BaseSurface::ProjectivePlane,
        g if g > 0 => BaseSurface::Orientable(g),
        g => BaseSurface::NonOrientable(-g),
    };
    let mut cone_orders: Vec<Int> = f
        .pairs
        .iter()
        .map(|p| p.alpha.abs())
        .filter(|&a| a >= 2)
        .collect();
    cone_orders.sort_unstable_by(|a, b| b.cmp(a));
    Ok(BaseOrbifold { surface, cone_orders })
}
