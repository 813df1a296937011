//! The single branch-cut policy of the crate: every angle normalization
//! goes through [`wrap`].

/// Wrap `x` into `[0, period)`.
pub fn wrap(x: f64, period: f64) -> f64 {
    debug_assert!(period > 0.0);
    let r = x.rem_euclid(period);
    // rem_euclid can round up to `period` for tiny negative inputs.
    if r >= period {
        r - period
    } else {
        r
    }
}

/// Shortest signed distance from `a` to `b` on a circle of the given period,
/// in `[-period/2, period/2)`.
pub fn angle_distance(a: f64, b: f64, period: f64) -> f64 {
    let d = wrap(a - b, period);
    if d >= period / 2.0 {
        d - period
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::TAU;

    #[test]
    fn wrap_basics() {
        assert_eq!(wrap(0.0, TAU), 0.0);
        assert!((wrap(-0.5, TAU) - (TAU - 0.5)).abs() < 1e-15);
        assert!((wrap(3.0 * TAU + 1.0, TAU) - 1.0).abs() < 1e-12);
        // The rounding edge: a tiny negative input must stay below the period.
        assert!(wrap(-1e-17, TAU) < TAU);
    }

    #[test]
    fn distance_is_signed_and_short() {
        assert!((angle_distance(0.1, TAU - 0.1, TAU) - 0.2).abs() < 1e-12);
        assert!((angle_distance(TAU - 0.1, 0.1, TAU) + 0.2).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn wrap_lands_in_range(x in -1e6f64..1e6, p in 0.1f64..100.0) {
            let r = wrap(x, p);
            prop_assert!((0.0..p).contains(&r));
        }

        #[test]
        fn wrap_is_periodic(x in -1e3f64..1e3, k in -5i32..5) {
            let p = TAU;
            let a = wrap(x, p);
            let b = wrap(x + k as f64 * p, p);
            prop_assert!(angle_distance(a, b, p).abs() < 1e-9);
        }
    }
}
