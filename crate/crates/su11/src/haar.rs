//! Left-invariant Haar integration on SU(1,1).
//!
//! Two coordinate forms of the same measure are provided: the Iwasawa form
//! with density `e^t d(theta) dt d(xi)` and prefactor `hbar/(4*pi)`, and the
//! Cartan form `2*pi*hbar * sinh t dk dt dk'` with `dk = d(theta)/(4*pi)`
//! normalized. The noncompact directions are truncated, so integrands must
//! be compactly supported; a boundary-decay check reports violations as a
//! truncation warning rather than silently returning garbage.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::group::GroupElement;
use crate::quad::{gauss_legendre_on, periodic_nodes, trapezoid_on, tree_sum};

const FOUR_PI: f64 = 2.0 * std::f64::consts::TAU;

/// Quadrature rule for the noncompact axes; the periodic angle axes always
/// use the trapezoid rule, which is spectrally accurate there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    GaussLegendre,
    Trapezoid,
}

/// Tensor-grid quadrature specification.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub order_theta: usize,
    pub order_t: usize,
    pub order_xi: usize,
    pub t_max: f64,
    pub xi_max: f64,
    pub rule: Rule,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            order_theta: 64,
            order_t: 64,
            order_xi: 64,
            t_max: 8.0,
            xi_max: 40.0,
            rule: Rule::GaussLegendre,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<(), Error> {
        if self.order_theta < 2 || self.order_t < 2 || self.order_xi < 2 {
            return Err(Error::InvalidConfig("quadrature orders must be >= 2"));
        }
        if self.t_max <= 0.0 || self.xi_max <= 0.0 {
            return Err(Error::InvalidConfig("t_max and xi_max must be positive"));
        }
        Ok(())
    }

    fn noncompact_nodes(&self, order: usize, a: f64, b: f64) -> Vec<(f64, f64)> {
        match self.rule {
            Rule::GaussLegendre => gauss_legendre_on(order, a, b),
            Rule::Trapezoid => trapezoid_on(order, a, b),
        }
    }
}

/// A function on the group: a shareable evaluator plus an optional promise
/// that the function vanishes outside Cartan radius `support_hint`.
#[derive(Clone)]
pub struct GroupFunction {
    eval: Arc<dyn Fn(&GroupElement) -> Complex64 + Send + Sync>,
    support_hint: Option<f64>,
}

impl GroupFunction {
    pub fn new(f: impl Fn(&GroupElement) -> Complex64 + Send + Sync + 'static) -> Self {
        Self {
            eval: Arc::new(f),
            support_hint: None,
        }
    }

    pub fn with_support_hint(mut self, t_support: f64) -> Self {
        self.support_hint = Some(t_support);
        self
    }

    pub fn support_hint(&self) -> Option<f64> {
        self.support_hint
    }

    pub fn eval(&self, g: &GroupElement) -> Complex64 {
        (self.eval)(g)
    }
}

impl fmt::Debug for GroupFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupFunction")
            .field("support_hint", &self.support_hint)
            .finish_non_exhaustive()
    }
}

/// The integrand did not decay at the truncation boundary.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncationWarning {
    pub boundary_max: f64,
    pub interior_max: f64,
}

impl fmt::Display for TruncationWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "integrand magnitude {:.3e} at the truncation boundary exceeds 1e-8 of the interior maximum {:.3e}",
            self.boundary_max, self.interior_max
        )
    }
}

/// Value of a truncated integral together with the boundary-decay audit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrationOutput {
    pub value: Complex64,
    pub warning: Option<TruncationWarning>,
}

fn warning_from(boundary_max: f64, interior_max: f64) -> Option<TruncationWarning> {
    if boundary_max > 1e-8 * interior_max {
        Some(TruncationWarning {
            boundary_max,
            interior_max,
        })
    } else {
        None
    }
}

/// Haar integral in Iwasawa coordinates:
/// `(hbar / 4*pi) * triple integral of f(k_theta d_t^{1/2} n_xi) e^t`.
pub fn integrate_iwasawa(f: &GroupFunction, q: &QuadratureSpec, hbar: f64) -> IntegrationOutput {
    let theta_nodes = periodic_nodes(q.order_theta, FOUR_PI);
    let t_nodes = q.noncompact_nodes(q.order_t, -q.t_max, q.t_max);
    let xi_nodes = q.noncompact_nodes(q.order_xi, -q.xi_max, q.xi_max);

    let mut contributions = Vec::with_capacity(theta_nodes.len() * t_nodes.len() * xi_nodes.len());
    let mut interior_max: f64 = 0.0;
    for &(theta, w_theta) in &theta_nodes {
        let k = GroupElement::rotation(theta);
        for &(t, w_t) in &t_nodes {
            let kd = k * GroupElement::boost(t);
            let weight = w_theta * w_t * t.exp();
            for &(xi, w_xi) in &xi_nodes {
                let g = kd * GroupElement::parabolic(xi);
                let v = f.eval(&g);
                interior_max = interior_max.max(v.norm());
                contributions.push(v * (weight * w_xi));
            }
        }
    }
    let value = tree_sum(&contributions) * (hbar / FOUR_PI);

    // Scan |f| on the four truncation faces t = +-t_max, xi = +-xi_max.
    let mut boundary_max: f64 = 0.0;
    for &(theta, _) in &theta_nodes {
        let k = GroupElement::rotation(theta);
        for &t in &[-q.t_max, q.t_max] {
            let kd = k * GroupElement::boost(t);
            for &(xi, _) in &xi_nodes {
                boundary_max = boundary_max.max(f.eval(&(kd * GroupElement::parabolic(xi))).norm());
            }
        }
        for &(t, _) in &t_nodes {
            let kd = k * GroupElement::boost(t);
            for &xi in &[-q.xi_max, q.xi_max] {
                boundary_max = boundary_max.max(f.eval(&(kd * GroupElement::parabolic(xi))).norm());
            }
        }
    }

    IntegrationOutput {
        value,
        warning: warning_from(boundary_max, interior_max),
    }
}

/// Haar integral in Cartan coordinates:
/// `2*pi*hbar * int_K int_0^inf int_K f(k d_t^{1/2} k') sinh t dk dt dk'`
/// with both `dk` factors normalized to total mass one.
pub fn integrate_cartan(f: &GroupFunction, q: &QuadratureSpec, hbar: f64) -> IntegrationOutput {
    let k_nodes = periodic_nodes(q.order_theta, FOUR_PI);
    let t_nodes = q.noncompact_nodes(q.order_t, 0.0, q.t_max);

    let mut contributions = Vec::with_capacity(k_nodes.len() * t_nodes.len() * k_nodes.len());
    let mut interior_max: f64 = 0.0;
    for &(theta, w_theta) in &k_nodes {
        let k = GroupElement::rotation(theta);
        for &(t, w_t) in &t_nodes {
            let kd = k * GroupElement::boost(t);
            let weight = (w_theta / FOUR_PI) * w_t * t.sinh();
            for &(psi, w_psi) in &k_nodes {
                let g = kd * GroupElement::rotation(psi);
                let v = f.eval(&g);
                interior_max = interior_max.max(v.norm());
                contributions.push(v * (weight * (w_psi / FOUR_PI)));
            }
        }
    }
    let value = tree_sum(&contributions) * (2.0 * std::f64::consts::PI * hbar);

    let mut boundary_max: f64 = 0.0;
    for &(theta, _) in &k_nodes {
        let kd = GroupElement::rotation(theta) * GroupElement::boost(q.t_max);
        for &(psi, _) in &k_nodes {
            boundary_max = boundary_max.max(f.eval(&(kd * GroupElement::rotation(psi))).norm());
        }
    }

    IntegrationOutput {
        value,
        warning: warning_from(boundary_max, interior_max),
    }
}

/// Relative left-invariance defect
/// `| int f(g0 g) dg - int f(g) dg | / | int f(g) dg |` in the Iwasawa form.
///
/// Both `f` and its left translate must be supported inside the truncation
/// box; any truncation warning from either integral is propagated.
pub fn audit_left_invariance(
    f: &GroupFunction,
    g0: &GroupElement,
    q: &QuadratureSpec,
) -> Result<(f64, Option<TruncationWarning>), Error> {
    let base = integrate_iwasawa(f, q, 1.0);
    if base.value.norm() < 1e-14 {
        return Err(Error::DivisionByZero(base.value.norm()));
    }
    let g0 = *g0;
    let inner = f.clone();
    let translated = GroupFunction::new(move |g| inner.eval(&(g0 * *g)));
    let shifted = integrate_iwasawa(&translated, q, 1.0);
    let warning = base.warning.or(shifted.warning);
    Ok((
        (shifted.value - base.value).norm() / base.value.norm(),
        warning,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{cartan, iwasawa};
    use std::f64::consts::PI;

    /// Smooth window supported on [-1, 1]: cos^8(pi x / 2), seven continuous
    /// derivatives at the support edge.
    pub fn window(x: f64) -> f64 {
        if x.abs() >= 1.0 {
            0.0
        } else {
            (PI * x / 2.0).cos().powi(8)
        }
    }

    /// Separable test function in Iwasawa coordinates, compactly supported.
    fn separable(theta_c: f64, t_half: f64, xi_half: f64) -> GroupFunction {
        GroupFunction::new(move |g| {
            let f = match iwasawa(g) {
                Ok(f) => f,
                Err(_) => return Complex64::new(0.0, 0.0),
            };
            // Center the angular bump away from the wrap point.
            let v =
                window((f.theta - theta_c) / 5.0) * window(f.t / t_half) * window(f.xi / xi_half);
            Complex64::new(v, 0.0)
        })
    }

    #[test]
    fn separable_matches_product_of_1d_oracles() {
        // Independent oracle: the integral factorizes into three 1-D
        // quadratures computed directly.
        let q = QuadratureSpec::default();
        let f = separable(2.0 * PI, 2.0, 20.0);
        let got = integrate_iwasawa(&f, &q, 1.0);
        assert!(got.warning.is_none());

        let th: f64 = gauss_legendre_on(200, 0.0, FOUR_PI)
            .iter()
            .map(|(x, w)| w * window((x - 2.0 * PI) / 5.0))
            .sum();
        let tt: f64 = gauss_legendre_on(200, -2.0, 2.0)
            .iter()
            .map(|(x, w)| w * window(x / 2.0) * x.exp())
            .sum();
        let xx: f64 = gauss_legendre_on(200, -20.0, 20.0)
            .iter()
            .map(|(x, w)| w * window(x / 20.0))
            .sum();
        let expected = th * tt * xx / FOUR_PI;
        assert!(
            (got.value.re - expected).abs() < 1e-6 * expected.abs(),
            "got {}, expected {expected}",
            got.value.re
        );
        assert!(got.value.im.abs() < 1e-12);
    }

    #[test]
    fn hbar_prefactor_is_linear_and_exact() {
        let q = QuadratureSpec {
            order_theta: 16,
            order_t: 24,
            order_xi: 24,
            ..QuadratureSpec::default()
        };
        let f = separable(2.0 * PI, 2.0, 20.0);
        let one = integrate_iwasawa(&f, &q, 1.0).value;
        let two = integrate_iwasawa(&f, &q, 2.0).value;
        // hbar written as h / (2*pi) with h = 2*pi gives identical bits.
        let h = std::f64::consts::TAU;
        let h_over_2pi = integrate_iwasawa(&f, &q, h / std::f64::consts::TAU).value;
        assert_eq!(one, h_over_2pi);
        assert_eq!(two, one * 2.0);

        let c1 = integrate_cartan(&f, &q, 1.0).value;
        let c2 = integrate_cartan(&f, &q, 2.0).value;
        assert_eq!(c2, c1 * 2.0);
    }

    #[test]
    fn cartan_form_matches_radial_oracle() {
        // Bi-K-invariant f: the Cartan integral collapses to
        // 2*pi * int p(t) sinh t dt.
        let q = QuadratureSpec::default();
        let f = GroupFunction::new(|g| {
            let c = cartan(g);
            Complex64::new(window(c.t / 3.5), 0.0)
        });
        let got = integrate_cartan(&f, &q, 1.0);
        assert!(got.warning.is_none());
        let expected: f64 = gauss_legendre_on(400, 0.0, 3.5)
            .iter()
            .map(|(x, w)| w * window(x / 3.5) * x.sinh())
            .sum::<f64>()
            * 2.0
            * PI;
        assert!(
            (got.value.re - expected).abs() < 1e-6 * expected,
            "got {}, expected {expected}",
            got.value.re
        );
    }

    #[test]
    fn forms_agree_on_shared_function() {
        // A bi-K-invariant window: smooth in both coordinate charts. The
        // Iwasawa-side truncation box is fitted to the support (a Cartan
        // radius of T confines the Iwasawa t to [-T, T] and xi to
        // [-sinh T, sinh T]) so the default orders keep their resolution.
        let f = GroupFunction::new(|g| {
            let c = cartan(g);
            Complex64::new(window(c.t / 2.5), 0.0)
        });
        let fitted = QuadratureSpec {
            t_max: 2.7,
            xi_max: 2.5f64.sinh() + 0.5,
            ..QuadratureSpec::default()
        };
        let a = integrate_iwasawa(&f, &fitted, 1.0);
        let b = integrate_cartan(&f, &QuadratureSpec::default(), 1.0);
        assert!(a.warning.is_none() && b.warning.is_none());
        let rel = (a.value - b.value).norm() / a.value.norm();
        assert!(rel < 1e-4, "form disagreement: {rel:e}");
    }

    #[test]
    fn linearity_and_positivity() {
        let q = QuadratureSpec {
            order_theta: 16,
            order_t: 24,
            order_xi: 24,
            ..QuadratureSpec::default()
        };
        let f = separable(2.0 * PI, 2.0, 20.0);
        let g = separable(2.0 * PI, 1.5, 12.0);
        let fv = integrate_iwasawa(&f, &q, 1.0).value;
        let gv = integrate_iwasawa(&g, &q, 1.0).value;
        let (fa, ga) = (f.clone(), g.clone());
        let combo = GroupFunction::new(move |x| 2.0 * fa.eval(x) + 3.0 * ga.eval(x));
        let cv = integrate_iwasawa(&combo, &q, 1.0).value;
        assert!((cv - (2.0 * fv + 3.0 * gv)).norm() < 1e-12 * (fv.norm() + gv.norm()));
        assert!(fv.re >= 0.0 && gv.re >= 0.0);
    }

    #[test]
    fn invariance_under_rotation_is_tight() {
        let q = QuadratureSpec::default();
        let f = separable(2.0 * PI, 2.0, 20.0);
        let (err, warn) = audit_left_invariance(&f, &GroupElement::rotation(PI / 3.0), &q).unwrap();
        assert!(warn.is_none());
        assert!(err < 1e-8, "rotation invariance error {err:e}");
    }

    #[test]
    fn invariance_under_boost_within_budget() {
        let q = QuadratureSpec::default();
        let f = separable(2.0 * PI, 2.0, 20.0);
        let (err, warn) = audit_left_invariance(&f, &GroupElement::boost(0.5), &q).unwrap();
        assert!(warn.is_none());
        assert!(err < 1e-5, "boost invariance error {err:e}");
    }

    #[test]
    fn identity_translation_is_exact() {
        let q = QuadratureSpec {
            order_theta: 16,
            order_t: 24,
            order_xi: 24,
            ..QuadratureSpec::default()
        };
        let f = separable(2.0 * PI, 2.0, 20.0);
        let (err, _) = audit_left_invariance(&f, &GroupElement::identity(), &q).unwrap();
        assert_eq!(err, 0.0);
    }

    #[test]
    fn truncation_warning_on_unsupported_function() {
        let q = QuadratureSpec {
            order_theta: 8,
            order_t: 16,
            order_xi: 16,
            t_max: 1.0,
            xi_max: 4.0,
            ..QuadratureSpec::default()
        };
        // Support radius 3 does not fit a box truncated at t_max = 1.
        let f = GroupFunction::new(|g| {
            let c = cartan(g);
            Complex64::new(window(c.t / 3.0), 0.0)
        });
        let out = integrate_iwasawa(&f, &q, 1.0);
        assert!(out.warning.is_some());
    }

    #[test]
    fn zero_function_audit_is_an_error() {
        let q = QuadratureSpec {
            order_theta: 4,
            order_t: 4,
            order_xi: 4,
            ..QuadratureSpec::default()
        };
        let f = GroupFunction::new(|_| Complex64::new(0.0, 0.0));
        assert!(matches!(
            audit_left_invariance(&f, &GroupElement::identity(), &q),
            Err(Error::DivisionByZero(_))
        ));
    }

    #[test]
    fn trapezoid_rule_converges_to_the_same_integral() {
        let f = separable(2.0 * PI, 2.0, 20.0);
        let gl = integrate_iwasawa(&f, &QuadratureSpec::default(), 1.0).value;
        let tz = integrate_iwasawa(
            &f,
            &QuadratureSpec {
                order_t: 257,
                order_xi: 257,
                rule: Rule::Trapezoid,
                ..QuadratureSpec::default()
            },
            1.0,
        )
        .value;
        assert!(
            (gl - tz).norm() < 1e-4 * gl.norm(),
            "rules disagree: {gl} vs {tz}"
        );
    }
}
