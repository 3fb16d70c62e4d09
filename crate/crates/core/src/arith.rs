//! Exact signed-integer number theory on `i64`.
//!
//! Every operation either returns the exact result or fails with
//! [`Error::Overflow`]. The magnitude ceiling defaults to `i64::MAX` and can be
//! lowered through the `SEIFERT_MAX_INT_GUARD` environment variable, which is
//! read once per process.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Int = i64;

pub const GUARD_ENV: &str = "SEIFERT_MAX_INT_GUARD";

/// Largest magnitude any intermediate value may take.
pub fn int_guard() -> Int {
    static GUARD: OnceLock<Int> = OnceLock::new();
    *GUARD.get_or_init(|| {
        std::env::var(GUARD_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<Int>().ok())
            .filter(|&g| g > 0)
            .unwrap_or(Int::MAX)
    })
}

#[inline]
fn guarded(v: Option<Int>, what: &'static str) -> Result<Int> {
    match v {
        Some(x) if x != Int::MIN && x.abs() <= int_guard() => Ok(x),
        _ => Err(Error::Overflow(what)),
    }
}

/// Rejects values outside the guarded range.
pub fn check(x: Int) -> Result<Int> {
    guarded(Some(x), "input")
}

pub fn add(a: Int, b: Int) -> Result<Int> {
    guarded(a.checked_add(b), "addition")
}

pub fn sub(a: Int, b: Int) -> Result<Int> {
    guarded(a.checked_sub(b), "subtraction")
}

pub fn mul(a: Int, b: Int) -> Result<Int> {
    guarded(a.checked_mul(b), "multiplication")
}

pub fn neg(a: Int) -> Result<Int> {
    guarded(a.checked_neg(), "negation")
}

/// `a*b + c*d`, the shape of every determinant in this crate.
pub fn mul_add(a: Int, b: Int, c: Int, d: Int) -> Result<Int> {
    add(mul(a, b)?, mul(c, d)?)
}

/// Non-negative gcd with `gcd(0, 0) = 0` and `gcd(x, 0) = |x|`.
pub fn gcd_nonneg(a: Int, b: Int) -> Int {
    let (mut x, mut y) = (a.unsigned_abs(), b.unsigned_abs());
    while y != 0 {
        (x, y) = (y, x % y);
    }
    Int::try_from(x).expect("gcd of i64::MIN with 0 does not fit in i64")
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd_nonneg(a, b)`.
pub fn ext_gcd(a: Int, b: Int) -> Result<(Int, Int, Int)> {
    let (mut old_r, mut r) = (check(a)?, check(b)?);
    let (mut old_s, mut s) = (1, 0);
    let (mut old_t, mut t) = (0, 1);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, sub(old_r, mul(q, r)?)?);
        (old_s, s) = (s, sub(old_s, mul(q, s)?)?);
        (old_t, t) = (t, sub(old_t, mul(q, t)?)?);
    }
    if old_r < 0 {
        Ok((neg(old_r)?, neg(old_s)?, neg(old_t)?))
    } else {
        Ok((old_r, old_s, old_t))
    }
}

/// Inverse of `a` modulo `m` in `[0, m)`; by convention the inverse modulo 1 is 0.
pub fn mod_inverse(a: Int, m: Int) -> Result<Int> {
    if m < 1 {
        return Err(Error::InvalidModulus(m));
    }
    if m == 1 {
        return Ok(0);
    }
    let (g, x, _) = ext_gcd(a.rem_euclid(m), m)?;
    if g != 1 {
        return Err(Error::NotCoprime { a, b: m });
    }
    Ok(x.rem_euclid(m))
}

/// Completes the column `(alpha, alpha_prime)` to a determinant-one matrix:
/// returns `(beta, beta_prime)` with `alpha*beta_prime - alpha_prime*beta = 1`.
///
/// Solutions differ by multiples of `(alpha, alpha_prime)`; the one returned
/// has `0 <= beta < |alpha|` (so `beta = 0` when `alpha = ±1`). For
/// `alpha = 0` the free coordinate is `beta_prime`, which is set to 0.
pub fn unimodular_complement(alpha: Int, alpha_prime: Int) -> Result<(Int, Int)> {
    let (g, x, y) = ext_gcd(alpha, neg(alpha_prime)?)?;
    if g != 1 {
        return Err(Error::NotCoprime {
            a: alpha,
            b: alpha_prime,
        });
    }
    // alpha*x - alpha_prime*y = 1
    let (mut beta, mut beta_prime) = (y, x);
    if alpha == 0 {
        return Ok((beta, 0));
    }
    let reduced = beta.rem_euclid(alpha.abs());
    let k = (reduced - beta) / alpha;
    beta = reduced;
    beta_prime = add(beta_prime, mul(k, alpha_prime)?)?;
    Ok((beta, beta_prime))
}

pub const SNF_MAX_DIM: usize = 8;

/// Invariant factors `d1 | d2 | ...` of a small integer matrix.
///
/// The result has `min(rows, cols)` entries; zeros (rank deficiency) come
/// last. Rows must have equal length.
pub fn smith_normal_form(matrix: &[Vec<Int>]) -> Result<Vec<Int>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    if rows > SNF_MAX_DIM || cols > SNF_MAX_DIM {
        return Err(Error::InvalidRange(format!(
            "matrix is {rows}x{cols}, at most {SNF_MAX_DIM}x{SNF_MAX_DIM} supported"
        )));
    }
    if matrix.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidRange("ragged matrix".into()));
    }
    let mut a: Vec<Vec<Int>> = matrix.to_vec();
    for row in &a {
        for &x in row {
            check(x)?;
        }
    }
    let n = rows.min(cols);
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        let Some((pi, pj)) = min_nonzero(&a, t) else {
            diag.resize(n, 0);
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let q = a[i][t] / a[t][t];
                    row_axpy(&mut a, i, t, q, t)?;
                    dirty |= a[i][t] != 0;
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let q = a[t][j] / a[t][t];
                    for row in a.iter_mut().skip(t) {
                        row[j] = sub(row[j], mul(q, row[t])?)?;
                    }
                    dirty |= a[t][j] != 0;
                }
            }
            if dirty {
                let (pi, pj) = min_nonzero(&a, t).expect("pivot block is non-zero");
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                continue;
            }
            let pivot = a[t][t];
            let bad_row = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % pivot != 0));
            match bad_row {
                Some(i) => {
                    let donor = a[i].clone();
                    for (x, &d) in a[t].iter_mut().zip(&donor).skip(t) {
                        *x = add(*x, d)?;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    Ok(diag)
}

fn min_nonzero(a: &[Vec<Int>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, &x) in row.iter().enumerate().skip(t) {
            if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

// row[target] -= q * row[source], columns from `from` on
fn row_axpy(a: &mut [Vec<Int>], target: usize, source: usize, q: Int, from: usize) -> Result<()> {
    for j in from..a[target].len() {
        a[target][j] = sub(a[target][j], mul(q, a[source][j])?)?;
    }
    Ok(())
}

/// Reduced fraction with positive denominator; zero is `0/1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rational {
    num: Int,
    den: Int,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };

    pub fn new(num: Int, den: Int) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidRange("zero denominator".into()));
        }
        let (num, den) = if den < 0 {
            (neg(num)?, neg(den)?)
        } else {
            (check(num)?, den)
        };
        let g = gcd_nonneg(num, den);
        Ok(Rational {
            num: num / g,
            den: den / g,
        })
    }

    pub fn from_int(n: Int) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn num(&self) -> Int {
        self.num
    }

    pub fn den(&self) -> Int {
        self.den
    }

    pub fn checked_add(self, other: Rational) -> Result<Rational> {
        let g = gcd_nonneg(self.den, other.den);
        let l = mul(self.den / g, other.den)?;
        let n = mul_add(self.num, l / self.den, other.num, l / other.den)?;
        Rational::new(n, l)
    }

    pub fn checked_neg(self) -> Result<Rational> {
        Ok(Rational {
            num: neg(self.num)?,
            den: self.den,
        })
    }

    pub fn checked_sub(self, other: Rational) -> Result<Rational> {
        self.checked_add(other.checked_neg()?)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
