//! Principal-series operators on truncated Fourier series over the circle.
//!
//! Functions on the boundary are carried in the basis `phi_p(zeta) = zeta^{-p}`,
//! `|p| <= P`. The group acts pointwise through
//!
//! ```text
//! (V_g phi)(zeta) = exp(-s t(g^{-1}, zeta)) u(g^{-1}, zeta)^{2j} phi(g^{-1}.zeta)
//! ```
//!
//! which is evaluated on a uniform angular grid and projected back to
//! coefficients; the derived representation acts by the band-limited
//! coefficient recurrences of the ladder operators, and a central-difference
//! bridge connects the two routes.

use num_complex::Complex64;
use std::f64::consts::TAU;
use std::ops::{Add, Sub};

use crate::group::{CirclePoint, GroupElement, RealMatrix2};

/// Compact-weight index `j`, restricted to the two values the boundary
/// representation supports without a branch policy for complex powers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfSpin {
    Zero,
    Half,
}

impl HalfSpin {
    pub fn value(self) -> f64 {
        match self {
            HalfSpin::Zero => 0.0,
            HalfSpin::Half => 0.5,
        }
    }
}

/// Parameters `(j, s)` of the boundary representation. The operator family
/// is unitary exactly on the critical line `Re(s) = 1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepParams {
    pub j: HalfSpin,
    pub s: Complex64,
}

impl RepParams {
    pub fn new(j: HalfSpin, s: Complex64) -> Self {
        Self { j, s }
    }

    pub fn on_critical_line(&self) -> bool {
        (self.s.re - 0.5).abs() < 1e-12
    }
}

/// Ladder directions of the derived representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Sx,
    Sy,
    SPlus,
    SMinus,
}

/// The sl(2, R) tangent matrix whose one-parameter group Cayley-conjugates
/// onto the hyperbolic family `d_t^{1/2}`.
pub fn sx_generator() -> RealMatrix2 {
    RealMatrix2::new(0.5, 0.0, 0.0, -0.5)
}

/// The sl(2, R) tangent matrix for the second noncompact direction.
pub fn sy_generator() -> RealMatrix2 {
    RealMatrix2::new(0.0, 0.5, 0.5, 0.0)
}

/// Truncated Fourier series `sum_p c_p zeta^{-p}`, `|p| <= p_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierFunction {
    p_max: i64,
    coeffs: Vec<Complex64>,
}

impl FourierFunction {
    pub fn zero(p_max: i64) -> Self {
        assert!(p_max >= 0);
        Self {
            p_max,
            coeffs: vec![Complex64::new(0.0, 0.0); (2 * p_max + 1) as usize],
        }
    }

    /// The basis function `phi_p`.
    pub fn basis(p: i64, p_max: i64) -> Self {
        assert!(p.abs() <= p_max, "basis index outside truncation");
        let mut f = Self::zero(p_max);
        f.set_coeff(p, Complex64::new(1.0, 0.0));
        f
    }

    pub fn p_max(&self) -> i64 {
        self.p_max
    }

    pub fn coeff(&self, p: i64) -> Complex64 {
        if p.abs() > self.p_max {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[(p + self.p_max) as usize]
        }
    }

    pub fn set_coeff(&mut self, p: i64, v: Complex64) {
        assert!(p.abs() <= self.p_max);
        self.coeffs[(p + self.p_max) as usize] = v;
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as i64 - self.p_max, c))
    }

    /// Pointwise value at `zeta = e^{i theta}`.
    pub fn evaluate(&self, theta: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (p, c) in self.iter() {
            acc += c * Complex64::from_polar(1.0, -(p as f64) * theta);
        }
        acc
    }

    /// Recover coefficients `|p| <= p_max` from `samples` on the uniform grid
    /// `theta_k = 2 pi k / N`; exact for series band-limited within `p_max`
    /// when `N >= 2 p_max + 1`.
    pub fn from_samples(samples: &[Complex64], p_max: i64) -> Self {
        let n = samples.len();
        assert!(n as i64 > 2 * p_max, "grid too coarse for band");
        let mut f = Self::zero(p_max);
        for p in -p_max..=p_max {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, &v) in samples.iter().enumerate() {
                let th = TAU * k as f64 / n as f64;
                acc += v * Complex64::from_polar(1.0, p as f64 * th);
            }
            f.set_coeff(p, acc / n as f64);
        }
        f
    }

    /// L2 norm under the normalized circle measure (Parseval).
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scaled(&self, k: Complex64) -> Self {
        Self {
            p_max: self.p_max,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Copy into a (usually wider) band.
    pub fn reband(&self, p_max: i64) -> Self {
        let mut out = Self::zero(p_max);
        for (p, c) in self.iter() {
            if p.abs() <= p_max {
                out.set_coeff(p, c);
            }
        }
        out
    }

    /// Greatest distance between coefficients, treating out-of-band entries
    /// as zero.
    pub fn max_coeff_distance(&self, other: &Self) -> f64 {
        let p_max = self.p_max.max(other.p_max);
        (-p_max..=p_max)
            .map(|p| (self.coeff(p) - other.coeff(p)).norm())
            .fold(0.0, f64::max)
    }
}

impl Add for &FourierFunction {
    type Output = FourierFunction;

    fn add(self, rhs: &FourierFunction) -> FourierFunction {
        let p_max = self.p_max.max(rhs.p_max);
        let mut out = FourierFunction::zero(p_max);
        for p in -p_max..=p_max {
            out.set_coeff(p, self.coeff(p) + rhs.coeff(p));
        }
        out
    }
}

impl Sub for &FourierFunction {
    type Output = FourierFunction;

    fn sub(self, rhs: &FourierFunction) -> FourierFunction {
        let p_max = self.p_max.max(rhs.p_max);
        let mut out = FourierFunction::zero(p_max);
        for p in -p_max..=p_max {
            out.set_coeff(p, self.coeff(p) - rhs.coeff(p));
        }
        out
    }
}

/// Scalar product `(phi, psi) = int phi conj(psi) d zeta = sum c_p conj(d_p)`.
pub fn inner_product(phi: &FourierFunction, psi: &FourierFunction) -> Complex64 {
    let p_max = phi.p_max.max(psi.p_max);
    (-p_max..=p_max)
        .map(|p| phi.coeff(p) * psi.coeff(p).conj())
        .sum()
}

/// The spectral tail discarded by the band truncation was not negligible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralTailWarning {
    pub tail_norm: f64,
    pub total_norm: f64,
}

/// Result of applying a pointwise operator and projecting back to the band.
#[derive(Debug, Clone, PartialEq)]
pub struct RepOutput {
    pub fun: FourierFunction,
    pub warning: Option<SpectralTailWarning>,
}

/// Apply the boundary operator `V_g^{j,s}` by evaluation on an oversampled
/// angular grid and projection onto `|p| <= p_out`.
///
/// The grid resolves the band `|p| <= 2 p_out + 1`; coefficients beyond
/// `p_out` are discarded and reported through the tail warning when they
/// carry more than `1e-8` of the total norm.
pub fn apply_v(
    params: &RepParams,
    g: &GroupElement,
    phi: &FourierFunction,
    p_out: i64,
) -> RepOutput {
    assert!(p_out >= phi.p_max());
    let gi = g.inverse();
    let wide = 2 * p_out + 1;
    let n = (2 * wide + 1) as usize;
    let mut samples = Vec::with_capacity(n);
    for k in 0..n {
        let theta = TAU * k as f64 / n as f64;
        let z = CirclePoint::new(theta);
        let t = gi.cocycle_t(z).expect("valid group element");
        let u = gi.cocycle_u(z).expect("valid group element");
        let moved = gi.mobius(z).expect("valid group element");
        let mult = (-params.s * t).exp()
            * match params.j {
                HalfSpin::Zero => Complex64::new(1.0, 0.0),
                HalfSpin::Half => u,
            };
        samples.push(mult * phi.evaluate(moved.theta()));
    }
    let full = FourierFunction::from_samples(&samples, wide);
    let mut out = FourierFunction::zero(p_out);
    let mut tail_sq = 0.0;
    let mut total_sq = 0.0;
    for (p, c) in full.iter() {
        total_sq += c.norm_sqr();
        if p.abs() <= p_out {
            out.set_coeff(p, c);
        } else {
            tail_sq += c.norm_sqr();
        }
    }
    let (tail_norm, total_norm) = (tail_sq.sqrt(), total_sq.sqrt());
    let warning = if tail_norm > 1e-8 * total_norm {
        Some(SpectralTailWarning {
            tail_norm,
            total_norm,
        })
    } else {
        None
    };
    RepOutput { fun: out, warning }
}

/// The rotation generator on the circle: coefficientwise `c_p -> -i p c_p`.
pub fn apply_d(phi: &FourierFunction) -> FourierFunction {
    let mut out = FourierFunction::zero(phi.p_max());
    for (p, c) in phi.iter() {
        out.set_coeff(p, c * Complex64::new(0.0, -(p as f64)));
    }
    out
}

/// Derived representation in a ladder direction; the output band grows by
/// one. `SPlus`/`SMinus` are computed as the complex combinations
/// `dV_{Sx} +- i dV_{Sy}`, which collapse to the single-term ladder forms.
pub fn apply_dv(
    params: &RepParams,
    direction: Direction,
    phi: &FourierFunction,
) -> FourierFunction {
    let j = params.j.value();
    let s = params.s;
    match direction {
        Direction::Sx => {
            let mut out = FourierFunction::zero(phi.p_max() + 1);
            for (p, c) in phi.iter() {
                let pj = p as f64 + j;
                out.set_coeff(p - 1, out.coeff(p - 1) + (s - pj) / 2.0 * c);
                out.set_coeff(p + 1, out.coeff(p + 1) + (s + pj) / 2.0 * c);
            }
            out
        }
        Direction::Sy => {
            let i = Complex64::i();
            let mut out = FourierFunction::zero(phi.p_max() + 1);
            for (p, c) in phi.iter() {
                let pj = p as f64 + j;
                out.set_coeff(p - 1, out.coeff(p - 1) + i * (s - pj) / 2.0 * c);
                out.set_coeff(p + 1, out.coeff(p + 1) - i * (s + pj) / 2.0 * c);
            }
            out
        }
        Direction::SPlus => {
            let x = apply_dv(params, Direction::Sx, phi);
            let y = apply_dv(params, Direction::Sy, phi);
            &x + &y.scaled(Complex64::i())
        }
        Direction::SMinus => {
            let x = apply_dv(params, Direction::Sx, phi);
            let y = apply_dv(params, Direction::Sy, phi);
            &x - &y.scaled(Complex64::i())
        }
    }
}

/// Central-difference realization of the derived representation along an
/// arbitrary real traceless tangent matrix:
/// `(V_{exp(h S)} phi - V_{exp(-h S)} phi) / (2 h)`.
///
/// `h` must lie in `[1e-6, 1e-2]`.
pub fn finite_difference_dv(
    params: &RepParams,
    tangent: &RealMatrix2,
    phi: &FourierFunction,
    h: f64,
) -> FourierFunction {
    assert!((1e-6..=1e-2).contains(&h), "step size outside [1e-6, 1e-2]");
    let p_out = phi.p_max() + 2;
    let forward = crate::group::cayley_to_su11(&tangent.scaled(h).exp_traceless())
        .expect("exp of traceless matrix is unimodular");
    let backward = crate::group::cayley_to_su11(&tangent.scaled(-h).exp_traceless())
        .expect("exp of traceless matrix is unimodular");
    let vf = apply_v(params, &forward, phi, p_out).fun;
    let vb = apply_v(params, &backward, phi, p_out).fun;
    (&vf - &vb).scaled(Complex64::new(1.0 / (2.0 * h), 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{random_group_element, SplitMix64};

    fn params(j: HalfSpin, re: f64, im: f64) -> RepParams {
        RepParams::new(j, Complex64::new(re, im))
    }

    #[test]
    fn basis_orthonormal_and_sampling_round_trip() {
        let p = FourierFunction::basis(3, 8);
        let q = FourierFunction::basis(-2, 8);
        assert_eq!(inner_product(&p, &p), Complex64::new(1.0, 0.0));
        assert_eq!(inner_product(&p, &q), Complex64::new(0.0, 0.0));

        // Coefficients -> samples -> coefficients is the identity.
        let mut rng = SplitMix64::new(5);
        let mut f = FourierFunction::zero(8);
        for p in -8i64..=8 {
            f.set_coeff(
                p,
                Complex64::new(rng.range(-1.0, 1.0), rng.range(-1.0, 1.0)),
            );
        }
        let n = 2 * 8 + 1;
        let samples: Vec<Complex64> = (0..n)
            .map(|k| f.evaluate(TAU * k as f64 / n as f64))
            .collect();
        let back = FourierFunction::from_samples(&samples, 8);
        assert!(f.max_coeff_distance(&back) < 1e-12);
    }

    #[test]
    fn identity_acts_trivially() {
        let p = params(HalfSpin::Half, 0.5, 0.3);
        let phi = FourierFunction::basis(2, 6);
        let out = apply_v(&p, &GroupElement::identity(), &phi, 6);
        assert!(out.warning.is_none());
        assert!(out.fun.max_coeff_distance(&phi) < 1e-12);
    }

    #[test]
    fn weight_relation_on_rotations() {
        // V_{u_theta} phi_p = e^{i (p+j) theta} phi_p, exactly per mode.
        for (j, jval) in [(HalfSpin::Zero, 0.0), (HalfSpin::Half, 0.5)] {
            let pars = params(j, 0.5, -0.7);
            let theta = 1.234;
            let g = GroupElement::rotation(theta);
            for p in [-5i64, 0, 3] {
                let phi = FourierFunction::basis(p, 8);
                let out = apply_v(&pars, &g, &phi, 8).fun;
                let expected = phi.scaled(Complex64::from_polar(1.0, (p as f64 + jval) * theta));
                assert!(
                    out.max_coeff_distance(&expected) < 1e-12,
                    "weight relation failed at p = {p}"
                );
            }
        }
    }

    #[test]
    fn homomorphism_on_moderate_elements() {
        let pars = params(HalfSpin::Half, 0.5, 0.4);
        let mut rng = SplitMix64::new(17);
        for _ in 0..5 {
            let g = random_group_element(&mut rng, 0.3, 0.3);
            let h = random_group_element(&mut rng, 0.3, 0.3);
            let phi = FourierFunction::basis(1, 24);
            let p_out = 64;
            let via_h = apply_v(&pars, &h, &phi, p_out).fun;
            let lhs = apply_v(&pars, &g, &via_h, p_out).fun;
            let rhs = apply_v(&pars, &(g * h), &phi, p_out).fun;
            assert!(
                lhs.max_coeff_distance(&rhs) < 1e-8,
                "homomorphism defect {:e}",
                lhs.max_coeff_distance(&rhs)
            );
        }
    }

    #[test]
    fn d_operator_is_diagonal() {
        let phi0 = FourierFunction::basis(0, 4);
        assert!(apply_d(&phi0).norm() < 1e-15);
        let phi = FourierFunction::basis(3, 4);
        let out = apply_d(&phi);
        assert!((out.coeff(3) - Complex64::new(0.0, -3.0)).norm() < 1e-15);

        // Linearity on a random element.
        let mut rng = SplitMix64::new(29);
        let mut f = FourierFunction::zero(4);
        for p in -4i64..=4 {
            f.set_coeff(
                p,
                Complex64::new(rng.range(-1.0, 1.0), rng.range(-1.0, 1.0)),
            );
        }
        let lhs = apply_d(&f.scaled(Complex64::new(2.0, 1.0)));
        let rhs = apply_d(&f).scaled(Complex64::new(2.0, 1.0));
        assert!(lhs.max_coeff_distance(&rhs) < 1e-15);
    }

    #[test]
    fn ladder_closed_forms() {
        // S+ on phi_0 at j=0, s=1/2 gives phi_1 / 2.
        let pars = params(HalfSpin::Zero, 0.5, 0.0);
        let out = apply_dv(&pars, Direction::SPlus, &FourierFunction::basis(0, 4));
        assert!((out.coeff(1) - Complex64::new(0.5, 0.0)).norm() < 1e-15);
        assert!(out.coeff(-1).norm() < 1e-15);

        // S- on phi_0 at j=1/2, s=1/2 annihilates.
        let pars = params(HalfSpin::Half, 0.5, 0.0);
        let out = apply_dv(&pars, Direction::SMinus, &FourierFunction::basis(0, 4));
        assert!(out.norm() < 1e-15);

        // Sx on phi_1 at j=0, s=1: coefficients (0, 1) on (phi_0, phi_2).
        let pars = params(HalfSpin::Zero, 1.0, 0.0);
        let out = apply_dv(&pars, Direction::Sx, &FourierFunction::basis(1, 4));
        assert!(out.coeff(0).norm() < 1e-15);
        assert!((out.coeff(2) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn ladder_composition_collapses_exactly() {
        // dV_{S+-} via Sx, Sy equals the single-term forms (s +- (p+j)) phi_{p+-1}
        // coefficientwise, with no tolerance.
        let pars = params(HalfSpin::Half, 0.5, 1.3);
        let mut rng = SplitMix64::new(31);
        let mut phi = FourierFunction::zero(16);
        for p in -16i64..=16 {
            phi.set_coeff(
                p,
                Complex64::new(rng.range(-1.0, 1.0), rng.range(-1.0, 1.0)),
            );
        }
        let plus = apply_dv(&pars, Direction::SPlus, &phi);
        let minus = apply_dv(&pars, Direction::SMinus, &phi);
        let mut plus_expected = FourierFunction::zero(17);
        let mut minus_expected = FourierFunction::zero(17);
        for (p, c) in phi.iter() {
            let pj = p as f64 + 0.5;
            plus_expected.set_coeff(p + 1, plus_expected.coeff(p + 1) + (pars.s + pj) * c);
            minus_expected.set_coeff(p - 1, minus_expected.coeff(p - 1) + (pars.s - pj) * c);
        }
        assert!(plus.max_coeff_distance(&plus_expected) < 1e-12);
        assert!(minus.max_coeff_distance(&minus_expected) < 1e-12);
    }

    #[test]
    fn finite_difference_matches_derived_rep() {
        let pars = params(HalfSpin::Zero, 0.5, 0.8);
        let h = 1e-4;

        let fd = finite_difference_dv(&pars, &sx_generator(), &FourierFunction::basis(0, 32), h);
        let an = apply_dv(&pars, Direction::Sx, &FourierFunction::basis(0, 32));
        assert!(fd.max_coeff_distance(&an) < 1e-6, "Sx bridge");

        // A smooth test vector: the central-difference error carries the
        // third h-derivative, which grows like p^3 per mode, so spread the
        // energy the way an analytic vector does.
        let mut rng = SplitMix64::new(37);
        let mut phi = FourierFunction::zero(16);
        for p in -16i64..=16 {
            let decay = 1.0 / (1.0 + (p * p) as f64);
            phi.set_coeff(
                p,
                Complex64::new(rng.range(-0.5, 0.5) * decay, rng.range(-0.5, 0.5) * decay),
            );
        }
        let fd = finite_difference_dv(&pars, &sy_generator(), &phi, h);
        let an = apply_dv(&pars, Direction::Sy, &phi);
        assert!(
            fd.max_coeff_distance(&an) < 1e-6,
            "Sy bridge defect {:e}",
            fd.max_coeff_distance(&an)
        );

        // Zero direction.
        let z = finite_difference_dv(&pars, &RealMatrix2::new(0.0, 0.0, 0.0, 0.0), &phi, h);
        assert!(z.norm() < 1e-12);
    }

    #[test]
    fn finite_difference_is_second_order() {
        let pars = params(HalfSpin::Half, 0.5, -0.6);
        let phi = FourierFunction::basis(2, 24);
        let an = apply_dv(&pars, Direction::Sx, &phi);
        let err =
            |h: f64| finite_difference_dv(&pars, &sx_generator(), &phi, h).max_coeff_distance(&an);
        let ratio = err(2e-3) / err(1e-3);
        assert!(
            (ratio - 4.0).abs() < 0.8,
            "halving the step should quarter the error, ratio {ratio}"
        );
    }

    #[test]
    fn unitary_on_critical_line_only() {
        let mut rng = SplitMix64::new(41);
        let g = random_group_element(&mut rng, 0.4, 0.4);
        let phi = FourierFunction::basis(1, 64);
        let psi = FourierFunction::basis(-2, 64);

        let unitary = params(HalfSpin::Half, 0.5, 0.9);
        let vphi = apply_v(&unitary, &g, &phi, 64).fun;
        let vpsi = apply_v(&unitary, &g, &psi, 64).fun;
        let drift = (inner_product(&vphi, &vpsi) - inner_product(&phi, &psi)).norm();
        assert!(
            drift < 1e-6,
            "unitarity drift {drift:e} on the critical line"
        );

        // Negative control: off the critical line the norm moves measurably.
        let non_unitary = params(HalfSpin::Half, 1.0, 0.0);
        let g = GroupElement::boost(0.5);
        let vphi = apply_v(&non_unitary, &g, &phi, 64).fun;
        let drift = (inner_product(&vphi, &vphi) - inner_product(&phi, &phi)).norm();
        assert!(
            drift > 1e-3,
            "expected measurable non-unitarity, got {drift:e}"
        );
    }

    #[test]
    fn tail_warning_fires_when_band_too_small() {
        // A strong boost spreads phi_0 across many modes; a tiny band must warn.
        let pars = params(HalfSpin::Zero, 0.5, 0.0);
        let out = apply_v(
            &pars,
            &GroupElement::boost(2.0),
            &FourierFunction::basis(0, 2),
            2,
        );
        assert!(out.warning.is_some());
    }
}
