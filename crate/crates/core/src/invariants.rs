//! Closed-form numerical invariants of a surface of bidegree `(a, b)` in the
//! flag threefold: Chern numbers, Miyaoka-type bounds on disjoint conics and
//! on ruling curves, Chow-ring products and adjunction data.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// An exact upper bound together with its integer floor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: BigRational,
    pub floor: BigInt,
}

impl Bound {
    fn new(num: i128, den: i128) -> Self {
        let value = BigRational::new(num.into(), den.into());
        let floor = value.floor().to_integer();
        Self { value, floor }
    }
}

fn require_general_type(a: i64, b: i64) -> Result<()> {
    if a < 3 || b < 3 {
        return Err(Error::OutOfHypothesis { a, b });
    }
    Ok(())
}

/// Maximum number of pairwise disjoint smooth conics on a smooth surface of
/// bidegree `(a, b)`, `a, b >= 3`:
///
/// `2 (a+b-2) (3a^2 b - a^2 + 3ab^2 - 4ab + 3a - b^2 + 3b) / (a+b-1)^2`.
pub fn miyaoka_conic_bound(a: i64, b: i64) -> Result<Bound> {
    require_general_type(a, b)?;
    let (a, b) = (a as i128, b as i128);
    let num = 2 * (a + b - 2) * (3 * a * a * b - a * a + 3 * a * b * b - 4 * a * b + 3 * a - b * b + 3 * b);
    Ok(Bound::new(num, (a + b - 1) * (a + b - 1)))
}

/// Maximum number of curves of bidegree `(1,0)` on a smooth surface of
/// bidegree `(a, b)`, `a, b >= 3` (such a curve has self-intersection `-a`):
///
/// `2a (a^2 (3b-1) + a (3b^2 - 4b + 3) - (b-3) b) / (a+1)^2`.
///
/// The bound for `(0,1)` curves is `ruling_curve_bound(b, a)`.
pub fn ruling_curve_bound(a: i64, b: i64) -> Result<Bound> {
    require_general_type(a, b)?;
    let (a, b) = (a as i128, b as i128);
    let num = 2 * a * (a * a * (3 * b - 1) + a * (3 * b * b - 4 * b + 3) - (b - 3) * b);
    Ok(Bound::new(num, (a + 1) * (a + 1)))
}

/// `c_1^2(S) = 3a^2 b + 3ab^2 - 4a^2 - 4b^2 - 16ab + 12a + 12b`.
pub fn c1_squared(a: i64, b: i64) -> i64 {
    3 * a * a * b + 3 * a * b * b - 4 * a * a - 4 * b * b - 16 * a * b + 12 * a + 12 * b
}

/// `c_2(S) = 6a + 6b + 3a^2 b - 2a^2 + 3ab^2 - 8ab - 2b^2`.
pub fn c2(a: i64, b: i64) -> i64 {
    6 * a + 6 * b + 3 * a * a * b - 2 * a * a + 3 * a * b * b - 8 * a * b - 2 * b * b
}

/// Generators `H1 = O(1,0)` and `H2 = O(0,1)` of the Picard group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hyperplane {
    H1,
    H2,
}

impl std::str::FromStr for Hyperplane {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "H1" | "h1" => Ok(Hyperplane::H1),
            "H2" | "h2" => Ok(Hyperplane::H2),
            other => Err(format!("unknown class {other:?}; expected H1 or H2")),
        }
    }
}

/// Triple intersection on the threefold: zero for `H1^3` and `H2^3`, one for
/// every mixed product.
pub fn chow_triple(x: Hyperplane, y: Hyperplane, z: Hyperplane) -> i64 {
    if x == y && y == z {
        0
    } else {
        1
    }
}

/// Bidegree `(C.H1, C.H2)` of the curve class cut by surfaces of bidegrees
/// `(a, b)` and `(a2, b2)`.
pub fn surface_pair_intersection_bidegree((a, b): (i64, i64), (a2, b2): (i64, i64)) -> (i64, i64) {
    use Hyperplane::{H1, H2};
    let first = [(a, H1), (b, H2)];
    let second = [(a2, H1), (b2, H2)];
    let against = |h: Hyperplane| -> i64 {
        first
            .iter()
            .flat_map(|&(c1, x)| second.iter().map(move |&(c2, y)| c1 * c2 * chow_triple(x, y, h)))
            .sum()
    };
    (against(H1), against(H2))
}

/// Numerical data of a surface of bidegree `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceInvariants {
    pub a: i64,
    pub b: i64,
    /// `omega_S = O_S(a-2, b-2)`.
    pub canonical_bidegree: (i64, i64),
    /// Self-intersection `2 - a - b` of a smooth conic on `S`.
    pub conic_self_intersection: i64,
    /// Self-intersection `-a` of a `(1,0)` curve on `S`.
    pub curve_10_self_intersection: i64,
    /// Self-intersection `-b` of a `(0,1)` curve on `S`.
    pub curve_01_self_intersection: i64,
    pub c1_squared: i64,
    pub c2: i64,
    /// Holomorphic Euler characteristic `(c1^2 + c2) / 12`.
    pub chi: i64,
    pub general_type: bool,
}

pub fn surface_invariant_report(a: i64, b: i64) -> SurfaceInvariants {
    let c1s = c1_squared(a, b);
    let c2v = c2(a, b);
    debug_assert_eq!((c1s + c2v) % 12, 0);
    SurfaceInvariants {
        a,
        b,
        canonical_bidegree: (a - 2, b - 2),
        conic_self_intersection: 2 - a - b,
        curve_10_self_intersection: -a,
        curve_01_self_intersection: -b,
        c1_squared: c1s,
        c2: c2v,
        chi: (c1s + c2v).div_euclid(12),
        general_type: a >= 3 && b >= 3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Hyperplane::{H1, H2};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn conic_bound_values() {
        let b = miyaoka_conic_bound(3, 3).unwrap();
        assert_eq!((b.value, b.floor), (q(1008, 25), 40.into()));
        let b = miyaoka_conic_bound(3, 4).unwrap();
        assert_eq!((b.value, b.floor), (q(500, 9), 55.into()));
        assert_eq!(miyaoka_conic_bound(4, 7), miyaoka_conic_bound(7, 4));
    }

    #[test]
    fn ruling_bound_values() {
        let b = ruling_curve_bound(3, 3).unwrap();
        assert_eq!((b.value, b.floor), (q(189, 4), 47.into()));
        let b = ruling_curve_bound(3, 4).unwrap();
        assert_eq!((b.value, b.floor), (q(75, 1), 75.into()));
    }

    #[test]
    fn bounds_refuse_small_bidegrees() {
        assert_eq!(miyaoka_conic_bound(2, 5), Err(Error::OutOfHypothesis { a: 2, b: 5 }));
        assert!(ruling_curve_bound(3, 1).is_err());
    }

    #[test]
    fn chern_numbers() {
        assert_eq!((c1_squared(1, 1), c2(1, 1)), (6, 6));
        assert_eq!((c1_squared(3, 3), c2(3, 3)), (18, 90));
        assert_eq!(c1_squared(2, 5), c1_squared(5, 2));
    }

    #[test]
    fn chow_products() {
        assert_eq!(chow_triple(H1, H1, H1), 0);
        assert_eq!(chow_triple(H1, H2, H1), 1);
        assert_eq!(chow_triple(H2, H2, H2), 0);
        assert_eq!(surface_pair_intersection_bidegree((1, 0), (1, 0)), (0, 1));
        assert_eq!(surface_pair_intersection_bidegree((1, 0), (0, 1)), (1, 1));
        assert_eq!(surface_pair_intersection_bidegree((2, 2), (2, 2)), (12, 12));
    }

    #[test]
    fn reports() {
        let r = surface_invariant_report(1, 1);
        assert_eq!((r.conic_self_intersection, r.canonical_bidegree, r.chi), (0, (-1, -1), 1));
        let r = surface_invariant_report(3, 3);
        assert_eq!((r.conic_self_intersection, r.canonical_bidegree, r.chi), (-4, (1, 1), 9));
        assert!(r.general_type);
        assert_eq!(surface_invariant_report(3, 4).curve_10_self_intersection, -3);
    }
}
