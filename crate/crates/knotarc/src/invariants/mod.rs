//! Knot invariants and arc index bounds.

mod bounds;
mod kauffman;
mod laurent;

pub use bounds::{arc_index_bounds, BoundsOptions, BoundsReport, LowerBound, LowerReason, UpperBound, UpperReason};
pub use kauffman::{budget_from_env, kauffman_polynomial, kauffman_polynomial_with_budget, DEFAULT_BUDGET};
pub use laurent::LaurentPoly2;

use crate::error::{Error, Result};

/// Width of the `v`-degree range.
pub fn v_spread(f: &LaurentPoly2) -> Result<u32> {
    let (lo, hi) = f.v_range().ok_or_else(|| Error::InvalidArgument("zero polynomial".into()))?;
    Ok((hi - lo) as u32)
}
