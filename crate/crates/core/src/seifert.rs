//! Seifert invariants, the equivalence moves on them, and the canonical form
//! used as an isomorphism fingerprint.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{self, gcd_nonneg, Int, Rational};
use crate::error::{Error, Result};

/// One distinguished fibre: multiplicity `alpha` and twist `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SeifertPair {
    pub alpha: Int,
    pub beta: Int,
}

impl SeifertPair {
    pub const TRIVIAL: SeifertPair = SeifertPair { alpha: 1, beta: 0 };

    pub const fn new(alpha: Int, beta: Int) -> Self {
        SeifertPair { alpha, beta }
    }
}

impl fmt::Display for SeifertPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.beta)
    }
}

/// `M(g; (a1,b1), ..., (an,bn))`. Negative genus denotes a non-orientable
/// base, `-1` being the projective plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeifertFibration {
    pub genus: Int,
    pub pairs: Vec<SeifertPair>,
}

/// Shorthand for building fibrations from literal pairs.
pub fn fib(genus: Int, pairs: &[(Int, Int)]) -> SeifertFibration {
    SeifertFibration::new(genus, pairs.iter().map(|&(a, b)| SeifertPair::new(a, b)).collect())
}

/// Normal form `(g, b, sorted pairs with 2 <= alpha, 0 < beta < alpha)`.
///
/// Two fibrations are isomorphic as oriented fibrations iff their canonical
/// forms are equal. Field order gives the lexicographic sort used for
/// deterministic listings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub genus: Int,
    pub b: Int,
    pub pairs: Vec<SeifertPair>,
}

/// A single rewrite of an invariant list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Move {
    /// S0: the new list is `old[perm[0]], old[perm[1]], ...`.
    Permute(Vec<usize>),
    /// S1: insert `(1,0)` before position `index`.
    Insert(usize),
    /// S1: delete the pair at `index`, which must be `(±1, 0)`.
    Delete(usize),
    /// S2: `beta_i += k_i * alpha_i` with `sum k_i = 0`.
    Twist(Vec<Int>),
    /// S3: `(alpha, beta) -> (-alpha, -beta)` at `index`.
    Flip(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoType {
    OrientedIso,
    ReversingIso,
    BothIso,
    NotIso,
}

impl IsoType {
    pub fn as_str(self) -> &'static str {
        match self {
            IsoType::OrientedIso => "oriented",
            IsoType::ReversingIso => "reversing",
            IsoType::BothIso => "both",
            IsoType::NotIso => "none",
        }
    }

    pub fn is_oriented(self) -> bool {
        matches!(self, IsoType::OrientedIso | IsoType::BothIso)
    }

    pub fn is_reversing(self) -> bool {
        matches!(self, IsoType::ReversingIso | IsoType::BothIso)
    }
}

impl SeifertFibration {
    pub fn new(genus: Int, pairs: Vec<SeifertPair>) -> Self {
        SeifertFibration { genus, pairs }
    }

    pub fn validate(&self) -> Result<()> {
        arith::check(self.genus)?;
        for (index, p) in self.pairs.iter().enumerate() {
            arith::check(p.alpha)?;
            arith::check(p.beta)?;
            if p.alpha == 0 {
                return Err(Error::ZeroAlpha { index });
            }
            if gcd_nonneg(p.alpha, p.beta) != 1 {
                return Err(Error::NotCoprimePair {
                    index,
                    alpha: p.alpha,
                    beta: p.beta,
                });
            }
        }
        Ok(())
    }

    pub fn apply_move(&self, m: &Move) -> Result<SeifertFibration> {
        let n = self.pairs.len();
        let mut pairs = self.pairs.clone();
        match m {
            Move::Permute(perm) => {
                let mut seen = vec![false; n];
                if perm.len() != n || perm.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
                    return Err(Error::InapplicableMove(format!(
                        "{perm:?} is not a permutation of {n} pairs"
                    )));
                }
                pairs = perm.iter().map(|&i| self.pairs[i]).collect();
            }
            Move::Insert(index) => {
                if *index > n {
                    return Err(Error::InapplicableMove(format!("insert position {index} > {n}")));
                }
                pairs.insert(*index, SeifertPair::TRIVIAL);
            }
            Move::Delete(index) => match pairs.get(*index) {
                Some(p) if p.beta == 0 && p.alpha.abs() == 1 => {
                    pairs.remove(*index);
                }
                Some(p) => {
                    return Err(Error::InapplicableMove(format!("cannot delete {p}")));
                }
                None => {
                    return Err(Error::InapplicableMove(format!("no pair at index {index}")));
                }
            },
            Move::Twist(offsets) => {
                if offsets.len() != n {
                    return Err(Error::InapplicableMove(format!(
                        "{} offsets for {n} pairs",
                        offsets.len()
                    )));
                }
                if offsets.iter().try_fold(0, |s: Int, &k| arith::add(s, k))? != 0 {
                    return Err(Error::InapplicableMove("twist offsets must sum to zero".into()));
                }
                for (p, &k) in pairs.iter_mut().zip(offsets) {
                    p.beta = arith::add(p.beta, arith::mul(k, p.alpha)?)?;
                }
            }
            Move::Flip(index) => match pairs.get_mut(*index) {
                Some(p) => {
                    p.alpha = arith::neg(p.alpha)?;
                    p.beta = arith::neg(p.beta)?;
                }
                None => {
                    return Err(Error::InapplicableMove(format!("no pair at index {index}")));
                }
            },
        }
        Ok(SeifertFibration::new(self.genus, pairs))
    }

    pub fn normalize(&self) -> Result<CanonicalForm> {
        self.validate()?;
        let mut b: Int = 0;
        let mut pairs = Vec::with_capacity(self.pairs.len());
        for p in &self.pairs {
            let (alpha, beta) = if p.alpha < 0 {
                (arith::neg(p.alpha)?, arith::neg(p.beta)?)
            } else {
                (p.alpha, p.beta)
            };
            b = arith::add(b, beta.div_euclid(alpha))?;
            let r = beta.rem_euclid(alpha);
            if alpha > 1 {
                pairs.push(SeifertPair::new(alpha, r));
            }
        }
        pairs.sort_unstable();
        Ok(CanonicalForm {
            genus: self.genus,
            b,
            pairs,
        })
    }

    pub fn reverse_orientation(&self) -> Result<SeifertFibration> {
        let pairs = self
            .pairs
            .iter()
            .map(|p| Ok(SeifertPair::new(p.alpha, arith::neg(p.beta)?)))
            .collect::<Result<_>>()?;
        Ok(SeifertFibration::new(self.genus, pairs))
    }

    /// `-sum beta_i / alpha_i`.
    pub fn euler_number(&self) -> Result<Rational> {
        self.validate()?;
        self.pairs
            .iter()
            .try_fold(Rational::ZERO, |acc, p| acc.checked_sub(Rational::new(p.beta, p.alpha)?))
    }

    pub fn isomorphism_type(&self, other: &SeifertFibration) -> Result<IsoType> {
        let lhs = self.normalize()?;
        let oriented = lhs == other.normalize()?;
        let reversing = lhs == other.reverse_orientation()?.normalize()?;
        Ok(match (oriented, reversing) {
            (true, true) => IsoType::BothIso,
            (true, false) => IsoType::OrientedIso,
            (false, true) => IsoType::ReversingIso,
            (false, false) => IsoType::NotIso,
        })
    }

    pub fn parse(text: &str) -> Result<SeifertFibration> {
        Parser::new(text).fibration()
    }
}

impl CanonicalForm {
    /// The fibration `M(g; pairs..., (1,b))`, omitting `(1,b)` when `b = 0`.
    pub fn to_fibration(&self) -> SeifertFibration {
        let mut pairs = self.pairs.clone();
        if self.b != 0 {
            pairs.push(SeifertPair::new(1, self.b));
        }
        SeifertFibration::new(self.genus, pairs)
    }

    pub fn euler_number(&self) -> Result<Rational> {
        let frac = self
            .pairs
            .iter()
            .try_fold(Rational::from_int(self.b), |acc, p| acc.checked_add(Rational::new(p.beta, p.alpha)?))?;
        frac.checked_neg()
    }

    pub fn reverse_orientation(&self) -> Result<CanonicalForm> {
        self.to_fibration().reverse_orientation()?.normalize()
    }

    /// Multiplicities of the singular fibres.
    pub fn cone_orders(&self) -> Vec<Int> {
        self.pairs.iter().map(|p| p.alpha).collect()
    }
}

impl fmt::Display for SeifertFibration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({};", self.genus)?;
        for (i, p) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_fibration().fmt(f)
    }
}

impl FromStr for SeifertFibration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeifertFibration::parse(s)
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(found) if found == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(found) => self.err(format!("expected '{c}', found '{found}'")),
            None => self.err(format!("expected '{c}', found end of input")),
        }
    }

    fn integer(&mut self) -> Result<Int> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.text.as_bytes();
        let mut end = start;
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits {
            return self.err("expected an integer");
        }
        match self.text[start..end].parse::<Int>().ok().and_then(|v| arith::check(v).ok()) {
            Some(v) => {
                self.pos = end;
                Ok(v)
            }
            None => self.err("integer out of range"),
        }
    }

    fn pair(&mut self) -> Result<SeifertPair> {
        self.expect('(')?;
        let alpha = self.integer()?;
        self.expect(',')?;
        let beta = self.integer()?;
        self.expect(')')?;
        Ok(SeifertPair::new(alpha, beta))
    }

    fn fibration(&mut self) -> Result<SeifertFibration> {
        self.expect('M')?;
        self.expect('(')?;
        let genus = self.integer()?;
        self.expect(';')?;
        let mut pairs = Vec::new();
        if self.peek() == Some('(') {
            pairs.push(self.pair()?);
            while self.peek() == Some(',') {
                self.pos += 1;
                pairs.push(self.pair()?);
            }
        }
        self.expect(')')?;
        if let Some(c) = self.peek() {
            return self.err(format!("trailing input starting with '{c}'"));
        }
        Ok(SeifertFibration::new(genus, pairs))
    }
}
