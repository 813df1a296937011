//! Character-typed function spaces and the spherical Fourier transforms.
//!
//! A type-`chi_n` function transforms by the character `chi_n(u_theta) =
//! e^{i n theta}` of the compact subgroup on both sides and is therefore
//! determined by a radial profile on the Cartan axis. The Abel transform
//! integrates such a function over the horocycle directions with an
//! `e^{t/2}` weight; a further one-dimensional Mellin-type integral against
//! `h^{mu+rho}` yields the spherical Fourier transform of type `chi_n`
//! (the Kangni-type transform at unit prefactor).

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::f64::consts::TAU;

use crate::decomp::{cartan, iwasawa, recompose_cartan, CartanFactors};
use crate::error::Error;
use crate::group::{CirclePoint, GroupElement};
use crate::haar::{GroupFunction, IntegrationOutput, QuadratureSpec, TruncationWarning};
use crate::quad::{gauss_legendre_on, periodic_nodes, tree_sum};

const FOUR_PI: f64 = 2.0 * TAU;

/// Compactly supported even radial profile: the values of `f[cosh t]` on a
/// uniform grid over `[0, t_support]`, interpolated by a C^1 cubic. The last
/// sample must vanish; evaluation beyond the support returns exactly zero,
/// and evaluation is even in `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    t_support: f64,
    values: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct RadialProfileRepr {
    t_support: f64,
    dt: f64,
    values: Vec<[f64; 2]>,
}

impl Serialize for RadialProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RadialProfileRepr {
            t_support: self.t_support,
            dt: self.dt(),
            values: self.values.iter().map(|v| [v.re, v.im]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RadialProfile {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = RadialProfileRepr::deserialize(deserializer)?;
        let expected_dt = repr.t_support / (repr.values.len().max(2) - 1) as f64;
        if (repr.dt - expected_dt).abs() > 1e-9 * (1.0 + expected_dt) {
            return Err(D::Error::custom(
                "dt inconsistent with t_support and grid size",
            ));
        }
        RadialProfile::new(
            repr.t_support,
            repr.values
                .iter()
                .map(|v| Complex64::new(v[0], v[1]))
                .collect(),
        )
        .map_err(D::Error::custom)
    }
}

impl RadialProfile {
    /// Build from samples on the uniform grid `0, dt, ..., t_support`.
    pub fn new(t_support: f64, values: Vec<Complex64>) -> Result<Self, Error> {
        if t_support <= 0.0 || values.len() < 2 {
            return Err(Error::InvalidConfig(
                "profile needs positive support and at least two samples",
            ));
        }
        let last = values[values.len() - 1].norm();
        if last != 0.0 {
            return Err(Error::NonCompactSupport(t_support, last));
        }
        Ok(Self { t_support, values })
    }

    /// Sample a closed-form profile; `f(t_support)` must be negligible and is
    /// clamped to exactly zero.
    pub fn from_fn(
        t_support: f64,
        samples: usize,
        f: impl Fn(f64) -> Complex64,
    ) -> Result<Self, Error> {
        if samples < 2 {
            return Err(Error::InvalidConfig("need at least two samples"));
        }
        let dt = t_support / (samples - 1) as f64;
        let mut values: Vec<Complex64> = (0..samples).map(|k| f(k as f64 * dt)).collect();
        let peak = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
        let last = values[samples - 1].norm();
        if last > 1e-10 * peak.max(1e-300) {
            return Err(Error::NonCompactSupport(t_support, last));
        }
        values[samples - 1] = Complex64::new(0.0, 0.0);
        Self::new(t_support, values)
    }

    pub fn t_support(&self) -> f64 {
        self.t_support
    }

    pub fn dt(&self) -> f64 {
        self.t_support / (self.values.len() - 1) as f64
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Evaluate at `t` (even extension, exact zero beyond the support) by
    /// cubic Hermite interpolation with centered-difference tangents.
    pub fn eval(&self, t: f64) -> Complex64 {
        let t = t.abs();
        if t >= self.t_support {
            return Complex64::new(0.0, 0.0);
        }
        let dt = self.dt();
        let n = self.values.len();
        let i = ((t / dt).floor() as usize).min(n - 2);
        let u = (t - i as f64 * dt) / dt;
        let v = |k: i64| -> Complex64 {
            // Even reflection below zero keeps the interpolant smooth at t = 0.
            let k = k.unsigned_abs() as usize;
            if k >= n {
                Complex64::new(0.0, 0.0)
            } else {
                self.values[k]
            }
        };
        let i = i as i64;
        let p0 = v(i);
        let p1 = v(i + 1);
        let m0 = (v(i + 1) - v(i - 1)) * 0.5;
        let m1 = (v(i + 2) - v(i)) * 0.5;
        let u2 = u * u;
        let u3 = u2 * u;
        p0 * (2.0 * u3 - 3.0 * u2 + 1.0)
            + m0 * (u3 - 2.0 * u2 + u)
            + p1 * (-2.0 * u3 + 3.0 * u2)
            + m1 * (u3 - u2)
    }
}

/// A function of type `chi_n`: `f(u_theta d_t^{1/2} u_phi) =
/// e^{i n (theta+phi)} profile(t)`, evaluated anywhere on the group through
/// the Cartan decomposition.
#[derive(Debug, Clone)]
pub struct TypeChiFunction {
    pub n: i64,
    pub profile: RadialProfile,
}

impl TypeChiFunction {
    pub fn new(n: i64, profile: RadialProfile) -> Self {
        Self { n, profile }
    }

    pub fn evaluate(&self, g: &GroupElement) -> Complex64 {
        let c = cartan(g);
        Complex64::from_polar(1.0, self.n as f64 * (c.phi + c.psi)) * self.profile.eval(c.t)
    }

    /// View as a generic group function (for Haar integrals and projections).
    pub fn as_group_function(&self) -> GroupFunction {
        let f = self.clone();
        GroupFunction::new(move |g| f.evaluate(g)).with_support_hint(self.profile.t_support())
    }
}

/// Left projection onto the `chi_n` type:
/// `x -> (1/4pi) int_0^{4pi} chi_n(u_theta)^{-1} f(u_theta x) d theta`.
///
/// With the inverse character weight this fixes functions already of left
/// type `chi_n`, annihilates every other pure type, and is idempotent.
pub fn project_left(n: i64, f: &GroupFunction, order: usize) -> GroupFunction {
    let nodes = periodic_nodes(order, FOUR_PI);
    let f = f.clone();
    GroupFunction::new(move |x| {
        let vals: Vec<Complex64> = nodes
            .iter()
            .map(|&(theta, w)| {
                let k = GroupElement::rotation(theta);
                f.eval(&(k * *x)) * Complex64::from_polar(w / FOUR_PI, -(n as f64) * theta)
            })
            .collect();
        tree_sum(&vals)
    })
}

/// Spherical function of type `chi_n`:
/// `zeta_{n,s}(g) = int_K a_{n,s}(k^{-1} g k) dk` where `a_{n,s}` evaluates
/// `e^{-i n theta} e^{-s t}` on the Iwasawa coordinates of its argument.
pub fn spherical_zeta(
    n: i64,
    s: Complex64,
    g: &GroupElement,
    quad: &QuadratureSpec,
) -> Result<Complex64, Error> {
    let nodes = periodic_nodes(quad.order_theta, FOUR_PI);
    let mut vals = Vec::with_capacity(nodes.len());
    for &(kappa, w) in &nodes {
        let k = GroupElement::rotation(kappa);
        let conj = k.inverse() * *g * k;
        let f = iwasawa(&conj)?;
        let a = Complex64::from_polar(1.0, -(n as f64) * f.theta) * (-s * f.t).exp();
        vals.push(a * (w / FOUR_PI));
    }
    Ok(tree_sum(&vals))
}

/// Parameters of the spherical Fourier transform of type `chi_n`.
///
/// `mu` represents the linear form on the (one-dimensional) Cartan algebra
/// through `mu(log d_t^{1/2}) = mu * t`; `rho` is the half-sum weight
/// realized by the `e^{t/2}` factors and defaults to 1/2.
#[derive(Debug, Clone)]
pub struct TransformParams {
    pub n: i64,
    pub mu: Complex64,
    pub rho: f64,
    pub hbar: f64,
    pub quad: QuadratureSpec,
}

impl TransformParams {
    pub fn new(n: i64, mu: Complex64) -> Self {
        Self {
            n,
            mu,
            rho: 0.5,
            hbar: 1.0,
            quad: QuadratureSpec::default(),
        }
    }

    pub fn with_hbar(mut self, hbar: f64) -> Self {
        assert!(hbar > 0.0);
        self.hbar = hbar;
        self
    }

    pub fn with_quad(mut self, quad: QuadratureSpec) -> Self {
        self.quad = quad;
        self
    }
}

/// Transform value together with any truncation warning picked up along the
/// way.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformOutput {
    pub value: Complex64,
    pub warning: Option<TruncationWarning>,
}

/// Abel transform of type `chi_n` at horocyclic parameter `t`:
/// `(hbar e^{rho t} / 4pi) * int_0^{4pi} int f(u_theta d_t^{1/2} n_xi)
/// e^{-i n theta} d xi d theta`.
///
/// The `xi` integral is truncated automatically: the Cartan radius of
/// `d_t^{1/2} n_xi` exceeds the profile support once
/// `sinh t + (xi^2/2) e^t > sinh T`, so beyond that cap the integrand
/// vanishes identically.
pub fn abel_transform(f: &TypeChiFunction, t: f64, params: &TransformParams) -> TransformOutput {
    let closure = |g: &GroupElement| f.evaluate(g);
    abel_of(&closure, f.profile.t_support(), t, params)
}

fn xi_cap(t: f64, t_support: f64) -> f64 {
    let slack = 2.0 * (-t).exp() * (t_support.sinh() - t.sinh());
    if slack <= 0.0 {
        0.0
    } else {
        slack.sqrt()
    }
}

fn abel_of(
    fun: &dyn Fn(&GroupElement) -> Complex64,
    t_support: f64,
    t: f64,
    params: &TransformParams,
) -> TransformOutput {
    if t.abs() >= t_support {
        // The Cartan radius of u_theta d_t n_xi is at least |t|.
        return TransformOutput {
            value: Complex64::new(0.0, 0.0),
            warning: None,
        };
    }
    let cap = xi_cap(t, t_support);
    let theta_nodes = periodic_nodes(params.quad.order_theta, FOUR_PI);
    let xi_nodes = gauss_legendre_on(params.quad.order_xi, -cap, cap);
    let n = params.n as f64;
    let mut vals = Vec::with_capacity(theta_nodes.len() * xi_nodes.len());
    let mut interior_max: f64 = 0.0;
    let mut boundary_max: f64 = 0.0;
    for &(theta, w_theta) in &theta_nodes {
        let kd = GroupElement::rotation(theta) * GroupElement::boost(t);
        for &(xi, w_xi) in &xi_nodes {
            let v = fun(&(kd * GroupElement::parabolic(xi)));
            interior_max = interior_max.max(v.norm());
            vals.push(v * Complex64::from_polar(w_theta * w_xi, -n * theta));
        }
        for &xi in &[-cap, cap] {
            boundary_max = boundary_max.max(fun(&(kd * GroupElement::parabolic(xi))).norm());
        }
    }
    let prefactor = params.hbar * (params.rho * t).exp() / FOUR_PI;
    let warning = if boundary_max > 1e-8 * interior_max {
        Some(TruncationWarning {
            boundary_max,
            interior_max,
        })
    } else {
        None
    };
    TransformOutput {
        value: tree_sum(&vals) * prefactor,
        warning,
    }
}

/// Spherical Fourier transform of type `chi_n` by the Abel-then-1D route:
/// `int F_f(t) e^{rho t} exp(mu t) dt` over the (exactly supported)
/// symmetric window `[-T, T]`.
pub fn kangni_transform(f: &TypeChiFunction, params: &TransformParams) -> TransformOutput {
    let closure = |g: &GroupElement| f.evaluate(g);
    kangni_of(&closure, f.profile.t_support(), params)
}

/// As [`kangni_transform`] for an arbitrary evaluator supported inside
/// Cartan radius `t_support` (left translates of typed functions, for
/// instance, are no longer typed but remain compactly supported).
pub fn kangni_of(
    fun: &dyn Fn(&GroupElement) -> Complex64,
    t_support: f64,
    params: &TransformParams,
) -> TransformOutput {
    let t_nodes = gauss_legendre_on(params.quad.order_t, -t_support, t_support);
    let mut warning = None;
    let mut vals = Vec::with_capacity(t_nodes.len());
    for &(t, w) in &t_nodes {
        let inner = abel_of(fun, t_support, t, params);
        warning = warning.or(inner.warning);
        let weight = ((params.mu + params.rho) * t).exp();
        vals.push(inner.value * weight * w);
    }
    TransformOutput {
        value: tree_sum(&vals),
        warning,
    }
}

/// The same transform computed without the Abel intermediate step, as the
/// group-side double integral
/// `(1/4pi) int_0^{4pi} int_G conj(u(g^{-1}, zeta_theta))^{2n}
/// exp(mu t(g^{-1}, theta)) f(g) dg d theta`
/// with `dg` the Iwasawa-form Haar integral. Used as an independent route
/// for cross-checking [`kangni_transform`].
pub fn kangni_group_integral_form(
    f: &TypeChiFunction,
    params: &TransformParams,
    outer_nodes: usize,
) -> IntegrationOutput {
    // Match the truncation box to the integrand support: the Cartan radius
    // bounds both the Iwasawa t and xi, so a box sized to the profile keeps
    // the grid resolution where the mass is.
    let support = f.profile.t_support();
    let spec = QuadratureSpec {
        t_max: support + 0.5,
        xi_max: support.sinh() + 1.0,
        ..params.quad
    };
    let nodes = periodic_nodes(outer_nodes, FOUR_PI);
    let mut vals = Vec::with_capacity(nodes.len());
    let mut warning = None;
    for &(theta, w) in &nodes {
        let point = CirclePoint::new(theta);
        let f = f.clone();
        let mu = params.mu;
        let two_n = 2 * params.n as i32;
        let weighted = GroupFunction::new(move |g| {
            let gi = g.inverse();
            let u = gi.cocycle_u(point).expect("valid group element");
            let t = gi.cocycle_t(point).expect("valid group element");
            f.evaluate(g) * u.conj().powi(two_n) * (mu * t).exp()
        });
        let inner = crate::haar::integrate_iwasawa(&weighted, &spec, params.hbar);
        warning = warning.or(inner.warning);
        vals.push(inner.value * (w / FOUR_PI));
    }
    IntegrationOutput {
        value: tree_sum(&vals),
        warning,
    }
}

/// Report of the translation-property check.
#[derive(Debug, Clone, Copy)]
pub struct TranslationReport {
    /// Transform of the left translate `x -> f(omega^{-1} x)`.
    pub lhs: Complex64,
    /// Transform of `f` itself.
    pub base: Complex64,
    /// The claimed factor `exp(-(i n (alpha + d_s . beta) + s/2))`.
    pub predicted_factor: Complex64,
    /// The observed ratio `lhs / base`.
    pub measured_factor: Complex64,
    /// `|lhs - base * predicted| / |base * predicted|`.
    pub relative_discrepancy: f64,
    pub warning: Option<TruncationWarning>,
}

/// Check the translation rule
/// `phi_n^mu(f(omega^{-1} .)) = phi_n^mu(f) / exp(i n (alpha + d_s . beta) + s/2)`
/// for `omega = u_alpha d_s^{1/2} u_beta`, where `d_s . beta` is the
/// double-cover boundary action of the hyperbolic factor on the angle
/// `beta`. Returns the measured discrepancy; nothing is asserted here.
pub fn verify_translation_property(
    f: &TypeChiFunction,
    omega: &CartanFactors,
    params: &TransformParams,
) -> Result<TranslationReport, Error> {
    let omega_g = recompose_cartan(omega)?;
    let omega_inv = omega_g.inverse();

    let base = kangni_transform(f, params);
    if base.value.norm() < 1e-14 {
        return Err(Error::DivisionByZero(base.value.norm()));
    }

    let translated_support = f.profile.t_support() + omega.t;
    let inner = f.clone();
    let translate = move |x: &GroupElement| inner.evaluate(&(omega_inv * *x));
    let lhs = kangni_of(&translate, translated_support, params);

    let rotated = GroupElement::boost(omega.t).mobius_double(omega.psi)?;
    let exponent = Complex64::new(0.0, params.n as f64 * (omega.phi + rotated))
        + Complex64::new(omega.t / 2.0, 0.0);
    let predicted_factor = (-exponent).exp();

    let rhs = base.value * predicted_factor;
    Ok(TranslationReport {
        lhs: lhs.value,
        base: base.value,
        predicted_factor,
        measured_factor: lhs.value / base.value,
        relative_discrepancy: (lhs.value - rhs).norm() / rhs.norm(),
        warning: base.warning.or(lhs.warning),
    })
}
