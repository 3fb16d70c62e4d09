//! Lens spaces and recognition of the lens space carrying a Seifert fibration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{self, gcd_nonneg, unimodular_complement, Int};
use crate::error::{Error, Result};
use crate::seifert::{SeifertFibration, SeifertPair};

/// Oriented lens space `L(p,q)`, normalized so that `0 <= q < p` for
/// `p >= 1` and `(p,q) = (0,1)` for `S^2 x S^1`. `L(1,0)` is `S^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LensSpace {
    p: Int,
    q: Int,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NotLensReason {
    TooManySingularFibres,
    BadBase,
    NonCyclic,
}

impl fmt::Display for NotLensReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotLensReason::TooManySingularFibres => "more than two singular fibres",
            NotLensReason::BadBase => "base is neither S2 nor RP2",
            NotLensReason::NonCyclic => "fundamental group is not cyclic",
        })
    }
}

impl LensSpace {
    pub const S3: LensSpace = LensSpace { p: 1, q: 0 };
    pub const S2_X_S1: LensSpace = LensSpace { p: 0, q: 1 };

    /// `L(p,q)` for any coprime pair, using `L(p,q) = L(-p,-q)` and reducing
    /// `q` modulo `p`.
    pub fn new(p: Int, q: Int) -> Result<Self> {
        arith::check(p)?;
        arith::check(q)?;
        if gcd_nonneg(p, q) != 1 {
            return Err(Error::NotCoprime { a: p, b: q });
        }
        let (p, q) = if p < 0 { (-p, -q) } else { (p, q) };
        if p == 0 {
            return Ok(LensSpace::S2_X_S1);
        }
        Ok(LensSpace { p, q: q.rem_euclid(p) })
    }

    pub fn p(&self) -> Int {
        self.p
    }

    pub fn q(&self) -> Int {
        self.q
    }

    /// `-L(p,q) = L(p,-q)`.
    pub fn reversed(&self) -> LensSpace {
        LensSpace::new(self.p, -self.q).expect("reversal keeps p, q coprime")
    }

    /// Orientation-preserving diffeomorphism: `q ≡ q'` or `qq' ≡ 1 (mod p)`.
    pub fn equal_oriented(&self, other: &LensSpace) -> bool {
        if self.p != other.p {
            return false;
        }
        if self.p == 0 {
            return true;
        }
        let p = self.p as i128;
        let (a, b) = (self.q as i128, other.q as i128);
        (a - b).rem_euclid(p) == 0 || (a * b - 1).rem_euclid(p) == 0
    }

    /// Orientation-reversing diffeomorphism: `q ≡ -q'` or `qq' ≡ -1 (mod p)`.
    pub fn equal_reversing(&self, other: &LensSpace) -> bool {
        self.equal_oriented(&other.reversed())
    }

    /// Diffeomorphic ignoring orientation.
    pub fn equal_unoriented(&self, other: &LensSpace) -> bool {
        self.equal_oriented(other) || self.equal_reversing(other)
    }
}

pub fn lens_normalize(p: Int, q: Int) -> Result<LensSpace> {
    LensSpace::new(p, q)
}

pub fn lens_equal_oriented(a: &LensSpace, b: &LensSpace) -> bool {
    a.equal_oriented(b)
}

pub fn lens_equal_unoriented(a: &LensSpace, b: &LensSpace) -> bool {
    a.equal_unoriented(b)
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// Accepts `p,q` or `L(p,q)`.
impl FromStr for LensSpace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix("L(")
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body);
        let bad = || Error::Syntax {
            pos: 0,
            msg: format!("expected 'p,q', got {s:?}"),
        };
        let (p, q) = body.split_once(',').ok_or_else(bad)?;
        let p = p.trim().parse().map_err(|_| bad())?;
        let q = q.trim().parse().map_err(|_| bad())?;
        LensSpace::new(p, q)
    }
}

/// Pads the canonical form to exactly two pairs and folds `b` into the first.
pub(crate) fn two_pair_form(f: &SeifertFibration) -> Result<(SeifertPair, SeifertPair)> {
    let cf = f.normalize()?;
    if cf.pairs.len() > 2 {
        return Err(Error::NotLensSpace(NotLensReason::TooManySingularFibres));
    }
    let mut pairs = cf.pairs;
    pairs.resize(2, SeifertPair::TRIVIAL);
    let first = SeifertPair::new(pairs[0].alpha, arith::add(pairs[0].beta, arith::mul(cf.b, pairs[0].alpha)?)?);
    Ok((first, pairs[1]))
}

/// The oriented lens space `M(0; (a1,b1), (a2,b2))` is diffeomorphic to:
/// `p = a1*b2 + b1*a2`, `q = a1*b2' + b1*a2'` with `a2*b2' - b2*a2' = 1`.
pub fn lens_of_two_pairs(first: SeifertPair, second: SeifertPair) -> Result<LensSpace> {
    let p = arith::mul_add(first.alpha, second.beta, first.beta, second.alpha)?;
    let (alpha2_prime, beta2_prime) = unimodular_complement(second.alpha, second.beta)?;
    let q = arith::mul_add(first.alpha, beta2_prime, first.beta, alpha2_prime)?;
    LensSpace::new(p, q).map_err(|e| Error::Internal(format!("gluing matrix not unimodular: {e}")))
}

pub fn recognize(f: &SeifertFibration) -> Result<LensSpace> {
    f.validate()?;
    match f.genus {
        0 => {
            let (first, second) = two_pair_form(f)?;
            lens_of_two_pairs(first, second)
        }
        -1 => {
            if f.pairs.iter().any(|p| p.alpha.abs() != 1) {
                return Err(Error::NotLensSpace(NotLensReason::NonCyclic));
            }
            match f.normalize()?.b {
                1 => Ok(LensSpace { p: 4, q: 1 }),
                -1 => Ok(LensSpace { p: 4, q: 3 }),
                _ => Err(Error::NotLensSpace(NotLensReason::NonCyclic)),
            }
        }
        _ => Err(Error::NotLensSpace(NotLensReason::BadBase)),
    }
}
