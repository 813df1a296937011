//! One-dimensional quadrature rules and the deterministic reduction used by
//! every integral in the crate.

use num_complex::Complex64;

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on the
/// Legendre recurrence.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 1, "quadrature order must be at least 1");
    let mut out = Vec::with_capacity(n);
    let m = n.div_ceil(2);
    for k in 0..m {
        // Evaluate P_n and P_n' via the three-term recurrence.
        let legendre = |x: f64| -> (f64, f64) {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let jf = j as f64;
                let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
                p0 = p1;
                p1 = p2;
            }
            if n == 1 {
                (x, 1.0)
            } else {
                (p1, n as f64 * (x * p1 - p0) / (x * x - 1.0))
            }
        };
        // Tricomi-style initial guess, then Newton.
        let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre(x);
            dp = d;
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((-x, w));
    }
    // Mirror to the positive half; the middle node of odd rules is x = 0.
    for k in (0..n - m).rev() {
        let (x, w) = out[k];
        out.push((-x, w));
    }
    out
}

/// Gauss-Legendre rule mapped onto `[a, b]`.
pub fn gauss_legendre_on(n: usize, a: f64, b: f64) -> Vec<(f64, f64)> {
    let half = (b - a) / 2.0;
    let mid = (a + b) / 2.0;
    gauss_legendre(n)
        .into_iter()
        .map(|(x, w)| (mid + half * x, half * w))
        .collect()
}

/// Equispaced nodes with uniform weight `period / n`: the trapezoid rule for
/// periodic integrands over `[0, period)`.
pub fn periodic_nodes(n: usize, period: f64) -> Vec<(f64, f64)> {
    assert!(n >= 1);
    let w = period / n as f64;
    (0..n).map(|k| (k as f64 * w, w)).collect()
}

/// Uniform (composite trapezoid) nodes on `[a, b]` including both endpoints.
pub fn trapezoid_on(n: usize, a: f64, b: f64) -> Vec<(f64, f64)> {
    assert!(n >= 2);
    let h = (b - a) / (n - 1) as f64;
    (0..n)
        .map(|k| {
            let w = if k == 0 || k == n - 1 { h / 2.0 } else { h };
            (a + k as f64 * h, w)
        })
        .collect()
}

/// Pairwise (tree) summation in a fixed traversal order. Deterministic
/// regardless of how the contributions were produced.
pub fn tree_sum(values: &[Complex64]) -> Complex64 {
    match values.len() {
        0 => Complex64::new(0.0, 0.0),
        n if n <= 8 => values.iter().sum(),
        n => {
            let (lo, hi) = values.split_at(n / 2);
            tree_sum(lo) + tree_sum(hi)
        }
    }
}
