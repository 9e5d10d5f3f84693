use serde::Serialize;

use super::{kauffman_polynomial, v_spread};
use crate::diagram::{detect_tangle_structure, PlanarKnotDiagram};
use crate::error::Result;
use crate::filtered::{check_theorem_conditions, construct_minus_one};

/// Facts the caller vouches for about the diagram.
#[derive(Clone, Debug, Default)]
pub struct BoundsOptions {
    pub prime: bool,
    pub minimal: bool,
    /// Size of a grid diagram already known to present the knot.
    pub grid: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerReason {
    Spread,
    /// Minimal alternating diagram, where the spread bound is attained.
    AlternatingEquality,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UpperReason {
    CrossingsPlusTwo,
    Crossings,
    Construction,
    Grid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub value: usize,
    pub reason: LowerReason,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UpperBound {
    pub value: usize,
    pub reason: UpperReason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub crossings: usize,
    pub spread: u32,
    pub lower: LowerBound,
    pub upper: UpperBound,
    pub exact: Option<usize>,
}

/// Lower bound from the v-spread of the Kauffman polynomial, upper bound
/// from the crossing number and whatever constructions the flags permit.
pub fn arc_index_bounds(d: &PlanarKnotDiagram, opts: &BoundsOptions) -> Result<BoundsReport> {
    let f = kauffman_polynomial(d)?;
    let spread = v_spread(&f)?;
    let c = d.crossing_count();
    let alternating = d.is_alternating();
    let lower = LowerBound {
        value: spread as usize + 2,
        reason: if alternating && opts.minimal && c > 0 {
            LowerReason::AlternatingEquality
        } else {
            LowerReason::Spread
        },
    };
    let mut upper = UpperBound { value: c + 2, reason: UpperReason::CrossingsPlusTwo };
    if opts.prime && !alternating && c > 0 {
        upper = UpperBound { value: c, reason: UpperReason::Crossings };
        if opts.minimal {
            let tc = detect_tangle_structure(d);
            if let Ok(report) = check_theorem_conditions(d, &tc) {
                if let Ok(built) = construct_minus_one(d, &tc, &report) {
                    if built.arc_count() < upper.value {
                        upper = UpperBound { value: built.arc_count(), reason: UpperReason::Construction };
                    }
                }
            }
        }
    }
    if let Some(n) = opts.grid {
        if n < upper.value {
            upper = UpperBound { value: n, reason: UpperReason::Grid };
        }
    }
    let exact = (lower.value == upper.value).then_some(upper.value);
    Ok(BoundsReport { crossings: c, spread, lower, upper, exact })
}
