//! Seifert fibrations of lens spaces with exact integer arithmetic.
//!
//! Fibrations are written `M(g; (a1,b1), ..., (an,bn))`. The crate builds
//! the fibrations of a given `L(p,q)` from a coprime weight pair
//! ([`construct`]), reads off the lens space of a fibration ([`recognize`]),
//! decides isomorphism through a canonical form ([`seifert`]), classifies the
//! fibrations sharing a pair of multiplicities ([`classify`]) and computes
//! group-theoretic invariants ([`pi1`]).

pub mod arith;
pub mod classify;
pub mod cli;
pub mod construct;
pub mod error;
pub mod pi1;
pub mod recognize;
pub mod seifert;

pub use arith::{Int, Rational};
pub use classify::{classify_pair, enumerate_fibrations, one_singular_list, predicted_case, variants, CaseTag, ClassificationReport, Prediction, VariantSet};
pub use construct::{construct_fibration, construct_s2xs1, gluing_choice, isotropy_order, isotropy_order_oracle, model_fibration, s3_fibration, ConstructionTrace, GluingChoice, ModelWeights};
pub use error::{Error, Result};
pub use pi1::{base_orbifold, first_homology, presentation, AbelianInvariants, BaseOrbifold, GroupPresentation};
pub use recognize::{lens_equal_oriented, lens_equal_unoriented, lens_normalize, recognize, LensSpace, NotLensReason};
pub use seifert::{CanonicalForm, IsoType, Move, SeifertFibration, SeifertPair};
