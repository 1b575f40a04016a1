//! Chains of tangent horocycles centered at dyadic rationals.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{invalid, Error, Result};
use crate::model::boundary::BoundaryPoint;
use crate::model::curve::{make_horocycle, Curve};
use crate::model::number::Rational;
use crate::model::point::UhpPoint;
use crate::predicates::pattern::intersection_pattern;

#[derive(Clone, Debug)]
pub struct DyadicFamily {
    pub level: u32,
    pub range: (i64, i64),
    pub horocycles: Vec<Curve>,
    /// `tangency_points[i]` is where horocycles `i` and `i + 1` touch.
    pub tangency_points: Vec<UhpPoint>,
}

/// `n / 2^k`.
pub fn dyadic(n: i64, k: u32) -> Rational {
    Rational::new(BigInt::from(n), BigInt::one() << k)
}

/// Horocycles centered at `n/2^k` with radius `1/2^(k+1)` for
/// `n_min ≤ n ≤ n_max`, with the tangency points of consecutive members.
pub fn dyadic_family(k: u32, n_min: i64, n_max: i64) -> Result<DyadicFamily> {
    if n_min >= n_max {
        return invalid(format!("empty range {n_min}..{n_max}"));
    }
    let radius = dyadic(1, k + 1);
    let horocycles = (n_min..=n_max)
        .map(|n| make_horocycle(&BoundaryPoint::Finite(dyadic(n, k)), &radius))
        .collect::<Result<Vec<_>>>()?;
    let mut tangency_points = Vec::with_capacity(horocycles.len() - 1);
    for w in horocycles.windows(2) {
        let (x, y) = intersection_pattern(&w[0], &w[1])
            .tangency_point()
            .ok_or_else(|| Error::Degenerate(format!("{} and {} are not tangent", w[0], w[1])))?;
        tangency_points.push(UhpPoint::Exact { x, y });
    }
    Ok(DyadicFamily {
        level: k,
        range: (n_min, n_max),
        horocycles,
        tangency_points,
    })
}
