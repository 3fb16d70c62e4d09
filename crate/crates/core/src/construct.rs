//! Construction of Seifert fibrations of `L(p,q)` with prescribed coprime
//! parts of the two multiplicities, plus the `S^3` and `S^2 x S^1` families
//! and the quotient models of weighted circle actions on `S^3`.

use serde::{Deserialize, Serialize};

use crate::arith::{self, gcd_nonneg, mod_inverse, unimodular_complement, Int};
use crate::error::{Error, Result};
use crate::recognize::LensSpace;
use crate::seifert::{SeifertFibration, SeifertPair};

/// Longitude data `(r, s)` of the surgery gluing
/// `mu1 = -q mu2 + p lambda2`, `lambda1 = r mu2 + s lambda2`,
/// subject to `q*s + p*r = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingChoice {
    pub r: Int,
    pub s: Int,
}

impl GluingChoice {
    /// Shifts `s` by `k*p`, adjusting `r` so the determinant is preserved.
    pub fn shifted(&self, lens: &LensSpace, k: Int) -> Result<GluingChoice> {
        Ok(GluingChoice {
            r: arith::sub(self.r, arith::mul(k, lens.q())?)?,
            s: arith::add(self.s, arith::mul(k, lens.p())?)?,
        })
    }

    pub fn is_valid_for(&self, lens: &LensSpace) -> bool {
        arith::mul_add(lens.q(), self.s, lens.p(), self.r) == Ok(1)
    }
}

/// Every intermediate quantity of one run of the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub u: Int,
    pub alpha: Int,
    pub alpha1: Int,
    pub alpha2: Int,
    pub alpha1_prime: Int,
    pub beta1: Int,
    pub beta1_prime: Int,
    pub beta2: Int,
    pub choice: GluingChoice,
}

impl ConstructionTrace {
    pub fn fibration(&self) -> SeifertFibration {
        SeifertFibration::new(
            0,
            vec![
                SeifertPair::new(self.alpha1, self.beta1),
                SeifertPair::new(self.alpha2, self.beta2),
            ],
        )
    }
}

/// Weights `(k1, k2)` of the circle action `(e^{i k1 t} z1, e^{i k2 t} z2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelWeights {
    k1: Int,
    k2: Int,
}

impl ModelWeights {
    pub fn new(k1: Int, k2: Int) -> Result<Self> {
        check_weights(k1, k2)?;
        Ok(ModelWeights { k1, k2 })
    }

    pub fn k1(&self) -> Int {
        self.k1
    }

    pub fn k2(&self) -> Int {
        self.k2
    }
}

fn check_weights(a: Int, b: Int) -> Result<()> {
    arith::check(a)?;
    arith::check(b)?;
    if a == 0 || b == 0 {
        return Err(Error::ZeroWeight);
    }
    if gcd_nonneg(a, b) != 1 {
        return Err(Error::WeightsNotCoprime(a, b));
    }
    Ok(())
}

fn require_positive_p(lens: &LensSpace) -> Result<()> {
    if lens.p() == 0 {
        Err(Error::ZeroP)
    } else {
        Ok(())
    }
}

/// The gluing choice with `0 <= s < p` (and `s = 0` for `p = 1`).
pub fn gluing_choice(p: Int, q: Int) -> Result<GluingChoice> {
    if p < 1 {
        return Err(Error::InvalidRange(format!("p must be positive, got {p}")));
    }
    if gcd_nonneg(p, q) != 1 {
        return Err(Error::NotCoprime { a: p, b: q });
    }
    let s = mod_inverse(q.rem_euclid(p), p)?;
    let r = arith::sub(1, arith::mul(q, s)?)? / p;
    Ok(GluingChoice { r, s })
}

/// Runs the construction with explicit choices of `(r, s)` and of the shift
/// `k` applied to `(beta1, beta1')` by multiples of `(alpha1, alpha1')`.
pub fn construct_with_choices(
    lens: &LensSpace,
    a10: Int,
    a20: Int,
    choice: GluingChoice,
    beta_shift: Int,
) -> Result<ConstructionTrace> {
    require_positive_p(lens)?;
    check_weights(a10, a20)?;
    if !choice.is_valid_for(lens) {
        return Err(Error::InvalidRange(format!("{choice:?} does not glue {lens}")));
    }
    let p = lens.p();
    let s = choice.s;
    let twisted = arith::sub(arith::mul(s, a10)?, a20)?;
    let u = gcd_nonneg(p, twisted);
    let alpha = p / u;
    let alpha1 = arith::mul(alpha, a10)?;
    let alpha2 = arith::mul(alpha, a20)?;
    let alpha1_prime = twisted / u;
    let (beta1, beta1_prime) = unimodular_complement(alpha1, alpha1_prime)?;
    let beta1 = arith::add(beta1, arith::mul(beta_shift, alpha1)?)?;
    let beta1_prime = arith::add(beta1_prime, arith::mul(beta_shift, alpha1_prime)?)?;
    let beta2 = arith::mul_add(-s, beta1, p, beta1_prime)?;

    let trace = ConstructionTrace {
        u,
        alpha,
        alpha1,
        alpha2,
        alpha1_prime,
        beta1,
        beta1_prime,
        beta2,
        choice,
    };
    if arith::mul_add(alpha1, beta2, beta1, alpha2)? != p {
        return Err(Error::Internal(format!("a1*b2 + b1*a2 != p in {trace:?}")));
    }
    if gcd_nonneg(alpha2, beta2) != 1 {
        return Err(Error::Internal(format!("(a2, b2) not coprime in {trace:?}")));
    }
    Ok(trace)
}

/// Seifert fibration `M(0; (a1,b1), (a2,b2))` of `lens` over
/// `S^2(|a1|, |a2|)` whose multiplicities have coprime parts `a10`, `a20`.
pub fn construct_fibration(lens: &LensSpace, a10: Int, a20: Int) -> Result<(SeifertFibration, ConstructionTrace)> {
    require_positive_p(lens)?;
    let choice = gluing_choice(lens.p(), lens.q())?;
    let trace = construct_with_choices(lens, a10, a20, choice, 0)?;
    Ok((trace.fibration(), trace))
}

/// `M(0; (alpha,beta), (alpha,-beta))`, a fibration of `S^2 x S^1`.
pub fn construct_s2xs1(alpha: Int, beta: Int) -> Result<SeifertFibration> {
    if alpha < 1 || beta < 0 {
        return Err(Error::InvalidRange(format!(
            "need alpha >= 1 and beta >= 0, got ({alpha},{beta})"
        )));
    }
    if gcd_nonneg(alpha, beta) != 1 {
        return Err(Error::NotCoprime { a: alpha, b: beta });
    }
    Ok(SeifertFibration::new(
        0,
        vec![SeifertPair::new(alpha, beta), SeifertPair::new(alpha, arith::neg(beta)?)],
    ))
}

/// `M(0; (a1,b1), (a2,b2))` with `a1*b2 + b1*a2 = 1` and `0 <= b1 < a1`.
pub fn s3_fibration(a1: Int, a2: Int) -> Result<SeifertFibration> {
    if a2 < 1 || a1 < a2 {
        return Err(Error::InvalidRange(format!("need a1 >= a2 >= 1, got ({a1},{a2})")));
    }
    if gcd_nonneg(a1, a2) != 1 {
        return Err(Error::NotCoprime { a: a1, b: a2 });
    }
    let b1 = mod_inverse(a2, a1)?;
    let b2 = arith::sub(1, arith::mul(b1, a2)?)? / a1;
    Ok(SeifertFibration::new(
        0,
        vec![SeifertPair::new(a1, b1), SeifertPair::new(a2, b2)],
    ))
}

/// Seifert invariants of the quotient of the weighted circle action on
/// `S^3` by the cyclic action defining `lens`. The spine of each solid torus
/// carries the other coordinate's weight, hence the swap.
pub fn model_fibration(lens: &LensSpace, w: ModelWeights) -> Result<SeifertFibration> {
    Ok(construct_fibration(lens, w.k2, w.k1)?.0)
}

/// Number of deck transformations preserving a regular fibre: `gcd(p, s*k2 - k1)`.
pub fn isotropy_order(lens: &LensSpace, w: ModelWeights) -> Result<Int> {
    require_positive_p(lens)?;
    let choice = gluing_choice(lens.p(), lens.q())?;
    Ok(gcd_nonneg(lens.p(), arith::sub(arith::mul(choice.s, w.k2)?, w.k1)?))
}

/// Counts the `l` in `1..=p` whose translate `(l/p, l*q/p)` of the origin lies
/// on a lift of the regular fibre, i.e. `p | l*(q*k1 - k2)`.
pub fn isotropy_order_oracle(lens: &LensSpace, w: ModelWeights) -> Result<Int> {
    require_positive_p(lens)?;
    let p = lens.p() as i128;
    let slope = lens.q() as i128 * w.k1 as i128 - w.k2 as i128;
    Ok((1..=p).filter(|&l| (l * slope) % p == 0).count() as Int)
}
