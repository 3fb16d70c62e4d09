//! Enumeration and classification of the Seifert fibrations of a lens space.
//!
//! For a coprime weight pair `(a10, a20)` the four orderings/signs
//! `e = (a10, a20)`, `a = (a10, -a20)`, `b = (a20, a10)`, `c = (a20, -a10)`
//! exhaust the fibrations with those coprime parts; which of them coincide
//! (or are mirror images) depends only on `q^2 mod p` and whether both
//! weights are 1.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{gcd_nonneg, Int};
use crate::construct::{construct_fibration, construct_s2xs1, ConstructionTrace};
use crate::error::{Error, Result};
use crate::recognize::LensSpace;
use crate::seifert::{fib, CanonicalForm, SeifertFibration, SeifertPair};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Variant {
    pub label: char,
    pub weights: (Int, Int),
    pub fibration: SeifertFibration,
    pub trace: ConstructionTrace,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariantSet {
    pub e: Variant,
    pub a: Variant,
    pub b: Variant,
    pub c: Variant,
}

impl VariantSet {
    pub fn iter(&self) -> impl Iterator<Item = &Variant> {
        [&self.e, &self.a, &self.b, &self.c].into_iter()
    }
}

/// The clauses of the classification for a fixed pair of coprime parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    /// Both weights 1, `q^2 ≢ -1`: two fibrations, not mirror images.
    EqualSplit,
    /// Both weights 1, `q^2 ≡ -1`: two fibrations, mirror images of each other.
    EqualReversingPair,
    /// `q^2 ≢ ±1`: four distinct.
    FourDistinct,
    /// `q^2 ≡ 1`, `q^2 ≢ -1`: two distinct.
    TwoDistinct,
    /// `q^2 ≡ -1`, `q^2 ≢ 1`: four, forming two mirror pairs.
    TwoReversingPairs,
    /// `q^2 ≡ ±1` (`p` is 1 or 2): two, mirror images of each other.
    OneReversingPair,
}

impl CaseTag {
    pub fn class_count(self) -> usize {
        match self {
            CaseTag::FourDistinct | CaseTag::TwoReversingPairs => 4,
            _ => 2,
        }
    }

    pub fn reversing_pair_count(self) -> usize {
        match self {
            CaseTag::EqualReversingPair | CaseTag::OneReversingPair => 1,
            CaseTag::TwoReversingPairs => 2,
            _ => 0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CaseTag::EqualSplit => "(i) distinct",
            CaseTag::EqualReversingPair => "(i) reversing pair",
            CaseTag::FourDistinct => "(1)",
            CaseTag::TwoDistinct => "(2)",
            CaseTag::TwoReversingPairs => "(3)",
            CaseTag::OneReversingPair => "(4)",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Predicted isomorphisms between `e` and the other three variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub case: CaseTag,
    /// `e` and `a` are mirror images (never oriented-isomorphic).
    pub a_reversing: bool,
    /// `e` and `b` are isomorphic (never mirror images).
    pub b_oriented: bool,
    /// `e` and `c` are mirror images (never oriented-isomorphic).
    pub c_reversing: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub canonical: CanonicalForm,
    pub weights: (Int, Int),
    pub variants: Vec<char>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub lens: LensSpace,
    pub classes: Vec<ClassEntry>,
    /// Index pairs `(i, j)`, `i < j`, of classes that are mirror images.
    pub reversing_pairs: Vec<(usize, usize)>,
    pub prediction: Prediction,
}

fn require_positive_p(lens: &LensSpace) -> Result<()> {
    if lens.p() == 0 {
        Err(Error::ZeroP)
    } else {
        Ok(())
    }
}

pub fn variants(lens: &LensSpace, a10: Int, a20: Int) -> Result<VariantSet> {
    let build = |label, x: Int, y: Int| -> Result<Variant> {
        let (fibration, trace) = construct_fibration(lens, x, y)?;
        Ok(Variant {
            label,
            weights: (x, y),
            fibration,
            trace,
        })
    };
    Ok(VariantSet {
        e: build('e', a10, a20)?,
        a: build('a', a10, -a20)?,
        b: build('b', a20, a10)?,
        c: build('c', a20, -a10)?,
    })
}

pub fn predicted_case(lens: &LensSpace, m1: Int, m2: Int) -> Result<Prediction> {
    require_positive_p(lens)?;
    if m1 < 1 || m2 < 1 {
        return Err(Error::InvalidRange(format!("multiplicities must be positive, got {m1}, {m2}")));
    }
    if gcd_nonneg(m1, m2) != 1 {
        return Err(Error::WeightsNotCoprime(m1, m2));
    }
    let p = lens.p() as i128;
    let sq = (lens.q() as i128).pow(2);
    let plus = (sq - 1) % p == 0;
    let minus = (sq + 1) % p == 0;
    let equal = m1 == m2;
    let case = match (equal, plus, minus) {
        (true, _, false) => CaseTag::EqualSplit,
        (true, _, true) => CaseTag::EqualReversingPair,
        (false, false, false) => CaseTag::FourDistinct,
        (false, true, false) => CaseTag::TwoDistinct,
        (false, false, true) => CaseTag::TwoReversingPairs,
        (false, true, true) => CaseTag::OneReversingPair,
    };
    let small_p = lens.p() <= 2;
    Ok(Prediction {
        case,
        a_reversing: if equal { minus } else { small_p },
        b_oriented: equal || plus,
        c_reversing: minus,
    })
}

pub fn classify_pair(lens: &LensSpace, m1: Int, m2: Int) -> Result<ClassificationReport> {
    let prediction = predicted_case(lens, m1, m2)?;
    let set = variants(lens, m1, m2)?;
    let mut classes: Vec<ClassEntry> = Vec::new();
    for v in set.iter() {
        let canonical = v.fibration.normalize()?;
        match classes.iter_mut().find(|c| c.canonical == canonical) {
            Some(entry) => entry.variants.push(v.label),
            None => classes.push(ClassEntry {
                canonical,
                weights: v.weights,
                variants: vec![v.label],
            }),
        }
    }
    let mirrors = classes
        .iter()
        .map(|c| c.canonical.reverse_orientation())
        .collect::<Result<Vec<_>>>()?;
    let mut reversing_pairs = Vec::new();
    for (i, class) in classes.iter().enumerate() {
        for (j, mirror) in mirrors.iter().enumerate().skip(i + 1) {
            if class.canonical == *mirror {
                reversing_pairs.push((i, j));
            }
        }
    }
    let case = prediction.case;
    if classes.len() != case.class_count() {
        return Err(Error::PredictionMismatch {
            case: format!("{lens} {{{m1},{m2}}} case {case}: classes"),
            expected: case.class_count(),
            found: classes.len(),
        });
    }
    if reversing_pairs.len() != case.reversing_pair_count() {
        return Err(Error::PredictionMismatch {
            case: format!("{lens} {{{m1},{m2}}} case {case}: reversing pairs"),
            expected: case.reversing_pair_count(),
            found: reversing_pairs.len(),
        });
    }
    Ok(ClassificationReport {
        lens: *lens,
        classes,
        reversing_pairs,
        prediction,
    })
}

/// All `M(0; (a2, p))` with `0 < |a2| <= bound` and `a2 ≡ q` or `a2*q ≡ 1 (mod p)`,
/// in increasing order of `a2`.
pub fn one_singular_list(lens: &LensSpace, bound: Int) -> Result<Vec<SeifertFibration>> {
    require_positive_p(lens)?;
    if bound < 1 {
        return Err(Error::InvalidRange(format!("bound must be positive, got {bound}")));
    }
    let p = lens.p() as i128;
    let q = lens.q() as i128;
    Ok((-bound..=bound)
        .filter(|&a| a != 0)
        .filter(|&a| {
            let a = a as i128;
            (a - q).rem_euclid(p) == 0 || (a * q - 1).rem_euclid(p) == 0
        })
        .map(|a| SeifertFibration::new(0, vec![SeifertPair::new(a, lens.p())]))
        .collect())
}

/// Canonical forms of all Seifert fibrations of `lens` whose singular fibres
/// have multiplicity at most `max_mult`, sorted by `(genus, b, pairs)`.
///
/// For `p >= 1` this runs the construction over every coprime weight pair;
/// the projective-plane fibration is added for `L(4,1)` and `L(4,3)`. For
/// `S^2 x S^1` it lists `M(0; (a,b), (a,-b))` with `0 <= b < a`, larger `b`
/// giving the same canonical forms.
pub fn enumerate_fibrations(lens: &LensSpace, max_mult: Int) -> Result<Vec<CanonicalForm>> {
    if max_mult < 1 {
        return Err(Error::InvalidRange(format!("max_mult must be positive, got {max_mult}")));
    }
    let mut found = BTreeSet::new();
    if lens.p() == 0 {
        for alpha in 1..=max_mult {
            for beta in 0..alpha {
                if gcd_nonneg(alpha, beta) == 1 {
                    found.insert(construct_s2xs1(alpha, beta)?.normalize()?);
                }
            }
        }
        return Ok(found.into_iter().collect());
    }

    let weights: Vec<Int> = (-max_mult..=max_mult).filter(|&w| w != 0).collect();
    let per_first: Vec<BTreeSet<CanonicalForm>> = weights
        .par_iter()
        .map(|&a10| {
            let mut local = BTreeSet::new();
            for &a20 in &weights {
                if gcd_nonneg(a10, a20) != 1 {
                    continue;
                }
                let (_, trace) = construct_fibration(lens, a10, a20)?;
                if trace.alpha1.abs() <= max_mult && trace.alpha2.abs() <= max_mult {
                    local.insert(trace.fibration().normalize()?);
                }
            }
            Ok(local)
        })
        .collect::<Result<_>>()?;
    found.extend(per_first.into_iter().flatten());

    if lens.p() == 4 {
        let b = if lens.q() == 1 { 1 } else { -1 };
        found.insert(fib(-1, &[(1, b)]).normalize()?);
    }
    Ok(found.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognize::recognize;
    use crate::seifert::IsoType;

    fn lens(p: Int, q: Int) -> LensSpace {
        LensSpace::new(p, q).unwrap()
    }

    fn canon(pairs: &[(Int, Int)]) -> CanonicalForm {
        fib(0, pairs).normalize().unwrap()
    }

    #[test]
    fn variants_of_l52() {
        let v = variants(&lens(5, 2), 3, 2).unwrap();
        assert_eq!(v.e.fibration.normalize().unwrap(), canon(&[(15, 2), (10, -1)]));
        assert_eq!(v.a.fibration.normalize().unwrap(), canon(&[(15, 4), (10, -3)]));
        assert_eq!(
            v.c.fibration.normalize().unwrap(),
            v.e.fibration.reverse_orientation().unwrap().normalize().unwrap()
        );
        assert_eq!(
            v.b.fibration.normalize().unwrap(),
            v.a.fibration.reverse_orientation().unwrap().normalize().unwrap()
        );
    }

    #[test]
    fn variants_of_l32_and_s3() {
        let v = variants(&lens(3, 2), 1, 1).unwrap();
        assert_eq!(v.e.fibration.normalize().unwrap(), canon(&[(3, -1), (3, 2)]));
        assert_eq!(v.a.fibration.normalize().unwrap(), canon(&[(1, -3)]));
        let v = variants(&LensSpace::S3, 1, 1).unwrap();
        for variant in v.iter() {
            assert_eq!(recognize(&variant.fibration).unwrap(), LensSpace::S3);
        }
    }

    #[test]
    fn predicted_case_examples() {
        assert_eq!(predicted_case(&lens(7, 2), 5, 2).unwrap().case, CaseTag::FourDistinct);
        assert_eq!(predicted_case(&lens(3, 2), 5, 3).unwrap().case, CaseTag::TwoDistinct);
        assert_eq!(predicted_case(&lens(5, 2), 3, 2).unwrap().case, CaseTag::TwoReversingPairs);
        assert_eq!(predicted_case(&lens(2, 1), 5, 3).unwrap().case, CaseTag::OneReversingPair);
        assert_eq!(predicted_case(&lens(3, 2), 1, 1).unwrap().case, CaseTag::EqualSplit);
        assert_eq!(predicted_case(&lens(5, 2), 1, 1).unwrap().case, CaseTag::EqualReversingPair);
        assert_eq!(predicted_case(&LensSpace::S3, 3, 2).unwrap().case, CaseTag::OneReversingPair);
        let pred = predicted_case(&lens(5, 2), 3, 2).unwrap();
        assert!(!pred.a_reversing && !pred.b_oriented && pred.c_reversing);
        assert!(predicted_case(&lens(5, 2), 4, 2).is_err());
        assert!(predicted_case(&lens(5, 2), 0, 1).is_err());
        assert_eq!(predicted_case(&LensSpace::S2_X_S1, 1, 1).unwrap_err(), Error::ZeroP);
    }

    #[test]
    fn classify_examples() {
        let r = classify_pair(&lens(7, 2), 5, 2).unwrap();
        assert_eq!((r.classes.len(), r.reversing_pairs.len()), (4, 0));
        let expected: BTreeSet<_> = [
            canon(&[(35, -2), (14, 1)]),
            canon(&[(35, -8), (14, 3)]),
            canon(&[(35, -22), (14, 9)]),
            canon(&[(35, -3), (14, 1)]),
        ]
        .into();
        let got: BTreeSet<_> = r.classes.iter().map(|c| c.canonical.clone()).collect();
        assert_eq!(got, expected);

        let r = classify_pair(&lens(5, 2), 1, 1).unwrap();
        assert_eq!((r.classes.len(), r.reversing_pairs.len()), (2, 1));
        let r = classify_pair(&lens(3, 2), 1, 1).unwrap();
        assert_eq!((r.classes.len(), r.reversing_pairs.len()), (2, 0));
        let r = classify_pair(&lens(2, 1), 5, 3).unwrap();
        assert_eq!((r.classes.len(), r.reversing_pairs.len()), (2, 1));
        assert_eq!(r.prediction.case, CaseTag::OneReversingPair);
    }

    #[test]
    fn prop_predicates_hold_on_small_lenses() {
        for p in 1..=13 {
            for q in 0..p {
                let Ok(l) = LensSpace::new(p, q) else { continue };
                for (m1, m2) in [(1, 1), (2, 1), (3, 2), (5, 3), (1, 4)] {
                    let pred = predicted_case(&l, m1, m2).unwrap();
                    let v = variants(&l, m1, m2).unwrap();
                    let e = &v.e.fibration;
                    let ea = e.isomorphism_type(&v.a.fibration).unwrap();
                    let eb = e.isomorphism_type(&v.b.fibration).unwrap();
                    let ec = e.isomorphism_type(&v.c.fibration).unwrap();
                    assert!(!ea.is_oriented());
                    assert_eq!(ea.is_reversing(), pred.a_reversing, "{l} {m1},{m2}");
                    assert_eq!(eb.is_oriented(), pred.b_oriented, "{l} {m1},{m2}");
                    assert_ne!(eb, IsoType::ReversingIso);
                    assert!(!ec.is_oriented());
                    assert_eq!(ec.is_reversing(), pred.c_reversing, "{l} {m1},{m2}");
                }
            }
        }
    }

    #[test]
    fn one_singular_examples() {
        let list = one_singular_list(&LensSpace::S3, 3).unwrap();
        let alphas: Vec<Int> = list.iter().map(|f| f.pairs[0].alpha).collect();
        assert_eq!(alphas, [-3, -2, -1, 1, 2, 3]);
        assert!(list.iter().all(|f| f.pairs[0].beta == 1));

        let alphas: BTreeSet<Int> = one_singular_list(&lens(5, 2), 10)
            .unwrap()
            .iter()
            .map(|f| f.pairs[0].alpha)
            .collect();
        assert_eq!(alphas, [2, 7, -3, -8, 3, 8, -2, -7].into());

        let alphas: Vec<Int> = one_singular_list(&lens(4, 1), 5)
            .unwrap()
            .iter()
            .map(|f| f.pairs[0].alpha)
            .collect();
        assert_eq!(alphas, [-3, 1, 5]);
        for f in one_singular_list(&lens(9, 2), 30).unwrap() {
            assert!(recognize(&f).unwrap().equal_oriented(&lens(9, 2)));
        }
        assert!(one_singular_list(&lens(4, 1), 0).is_err());
    }

    #[test]
    fn enumerate_small_cases() {
        let s3 = enumerate_fibrations(&LensSpace::S3, 3).unwrap();
        let prop_list: BTreeSet<_> = [(1, 1), (2, 1), (3, 1), (3, 2)]
            .iter()
            .map(|&(a, b)| crate::construct::s3_fibration(a, b).unwrap().normalize().unwrap())
            .collect();
        let with_mirrors: BTreeSet<_> = prop_list
            .iter()
            .flat_map(|c| [c.clone(), c.reverse_orientation().unwrap()])
            .collect();
        let got: BTreeSet<_> = s3.iter().cloned().collect();
        assert!(prop_list.is_subset(&got));
        assert_eq!(got, with_mirrors);

        let l41 = enumerate_fibrations(&lens(4, 1), 3).unwrap();
        assert_eq!(l41.iter().filter(|c| c.genus == -1).count(), 1);
        assert_eq!(l41[0], fib(-1, &[(1, 1)]).normalize().unwrap());

        let s2s1 = enumerate_fibrations(&LensSpace::S2_X_S1, 2).unwrap();
        assert_eq!(s2s1, vec![canon(&[(2, 1), (2, -1)]), canon(&[(1, 0), (1, 0)])]);
        assert!(enumerate_fibrations(&LensSpace::S3, 0).is_err());
    }

    #[test]
    fn enumeration_contains_one_singular_list() {
        for (p, q) in [(7, 2), (5, 2), (1, 0), (12, 5)] {
            let l = lens(p, q);
            let all: BTreeSet<_> = enumerate_fibrations(&l, 9).unwrap().into_iter().collect();
            for f in one_singular_list(&l, 9).unwrap() {
                assert!(all.contains(&f.normalize().unwrap()), "{l}: {f}");
            }
            for cf in &all {
                assert!(recognize(&cf.to_fibration()).unwrap().equal_oriented(&l));
            }
        }
    }
}
