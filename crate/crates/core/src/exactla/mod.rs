//! Exact linear algebra over `Q`.
//!
//! Vectors and matrices are sparse with [`BigRational`] entries. Rank has a
//! two-prime modular fast path (see [`RankConfig`]); kernels, subspaces and
//! cohomology representatives always come from exact elimination.

mod complex;
mod elim;
mod lincomb;
mod modular;
mod sparse;
mod subspace;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use complex::{CochainComplex, CohomologyDims};
pub use elim::{
    exact_rank, image_basis, kernel_basis, rank, rank_stats, reset_rank_stats, row_echelon,
    set_rank_config, with_rank_config, Backend, RankConfig, RankStats, Rref,
};
pub use lincomb::LinComb;
pub use modular::{modular_rank, random_prime};
pub use sparse::{SparseMatrix, SparseVec};
pub use subspace::{QuotientSpace, Subspace};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parse `"a"`, `"-a/b"` or a JSON integer into an exact rational.
pub fn parse_scalar(text: &str) -> crate::Result<Scalar> {
    let t = text.trim();
    t.parse::<BigRational>()
        .map_err(|_| crate::Error::InvalidSpec(format!("not an exact rational: {text:?}")))
        .and_then(|q| {
            if q.denom().is_zero() {
                Err(crate::Error::InvalidSpec(format!(
                    "zero denominator: {text:?}"
                )))
            } else {
                Ok(q)
            }
        })
}

/// Render as `a` or `a/b`.
pub fn format_scalar(q: &Scalar) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
