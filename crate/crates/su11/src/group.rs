//! The SU(1,1) group kernel.
//!
//! Elements are stored as the pair (alpha, beta) of the matrix
//! `(alpha, beta; conj(beta), conj(alpha))` with `|alpha|^2 - |beta|^2 = 1`;
//! the conjugate symmetry is structural and never stored. The kernel also
//! provides the Cayley conjugation identifying real unimodular 2x2 matrices
//! with SU(1,1), the Möbius action on the boundary circle, and the two
//! cocycles attached to that action.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::f64::consts::TAU;
use std::ops::Mul;

use crate::angle::wrap;
use crate::error::Error;

/// Default tolerance for the pseudo-unitarity constraint.
pub const GROUP_EPS: f64 = 1e-12;

/// Denominators below this magnitude are treated as singular.
pub const SINGULAR_EPS: f64 = 1e-14;

/// A point `zeta = exp(i theta)` on the unit circle, stored by its angle in
/// `[0, 2*pi)` so that `|zeta| = 1` holds exactly by construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CirclePoint {
    theta: f64,
}

impl CirclePoint {
    pub fn new(theta: f64) -> Self {
        Self {
            theta: wrap(theta, TAU),
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// The complex number `exp(i theta)`.
    pub fn unit(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.theta)
    }
}

impl From<f64> for CirclePoint {
    fn from(theta: f64) -> Self {
        Self::new(theta)
    }
}

/// An element of SU(1,1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    alpha: Complex64,
    beta: Complex64,
}

#[derive(Serialize, Deserialize)]
struct GroupElementRepr {
    alpha: [f64; 2],
    beta: [f64; 2],
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GroupElementRepr {
            alpha: [self.alpha.re, self.alpha.im],
            beta: [self.beta.re, self.beta.im],
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GroupElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = GroupElementRepr::deserialize(deserializer)?;
        GroupElement::new(
            Complex64::new(repr.alpha[0], repr.alpha[1]),
            Complex64::new(repr.beta[0], repr.beta[1]),
        )
        .map_err(D::Error::custom)
    }
}

impl GroupElement {
    /// Build an element, rejecting pairs that violate
    /// `|alpha|^2 - |beta|^2 = 1` beyond [`GROUP_EPS`].
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self, Error> {
        Self::new_with_tolerance(alpha, beta, GROUP_EPS)
    }

    /// As [`GroupElement::new`] with a caller-chosen tolerance.
    pub fn new_with_tolerance(
        alpha: Complex64,
        beta: Complex64,
        tolerance: f64,
    ) -> Result<Self, Error> {
        let g = Self { alpha, beta };
        let residual = g.constraint_residual();
        if residual > tolerance {
            return Err(Error::Constraint {
                residual,
                tolerance,
            });
        }
        Ok(g)
    }

    pub fn identity() -> Self {
        Self {
            alpha: Complex64::new(1.0, 0.0),
            beta: Complex64::new(0.0, 0.0),
        }
    }

    /// The compact factor `k_theta = diag(e^{i theta/2}, e^{-i theta/2})`.
    /// `theta` lives on the double cover, period `4*pi`.
    pub fn rotation(theta: f64) -> Self {
        Self {
            alpha: Complex64::from_polar(1.0, theta / 2.0),
            beta: Complex64::new(0.0, 0.0),
        }
    }

    /// The hyperbolic factor `(cosh t/2, sinh t/2; sinh t/2, cosh t/2)`.
    pub fn boost(t: f64) -> Self {
        Self {
            alpha: Complex64::new((t / 2.0).cosh(), 0.0),
            beta: Complex64::new((t / 2.0).sinh(), 0.0),
        }
    }

    /// The parabolic factor `(1 + i xi/2, -i xi/2; i xi/2, 1 - i xi/2)`.
    pub fn parabolic(xi: f64) -> Self {
        Self {
            alpha: Complex64::new(1.0, xi / 2.0),
            beta: Complex64::new(0.0, -xi / 2.0),
        }
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    /// `| |alpha|^2 - |beta|^2 - 1 |`.
    pub fn constraint_residual(&self) -> f64 {
        (self.alpha.norm_sqr() - self.beta.norm_sqr() - 1.0).abs()
    }

    /// Rescale onto the constraint surface. Products are never silently
    /// renormalized; drift correction is always an explicit call.
    pub fn renormalize(&self) -> Result<Self, Error> {
        let r = self.alpha.norm_sqr() - self.beta.norm_sqr();
        if r <= SINGULAR_EPS {
            return Err(Error::DegenerateInput(
                "cannot renormalize: |alpha|^2 - |beta|^2 is not positive",
            ));
        }
        let s = 1.0 / r.sqrt();
        Ok(Self {
            alpha: self.alpha * s,
            beta: self.beta * s,
        })
    }

    /// Group inverse `(conj(alpha), -beta)`.
    pub fn inverse(&self) -> Self {
        Self {
            alpha: self.alpha.conj(),
            beta: -self.beta,
        }
    }

    /// Möbius action `g . zeta = (alpha zeta + beta) / (conj(beta) zeta + conj(alpha))`
    /// on the boundary circle.
    pub fn mobius(&self, z: CirclePoint) -> Result<CirclePoint, Error> {
        let zeta = z.unit();
        let den = self.beta.conj() * zeta + self.alpha.conj();
        if den.norm() < SINGULAR_EPS {
            return Err(Error::SingularAction);
        }
        let w = (self.alpha * zeta + self.beta) / den;
        debug_assert!((w.norm() - 1.0).abs() < 1e-12);
        Ok(CirclePoint::new(w.arg()))
    }

    /// The action on the double cover: the angle `g . theta` in `[0, 4*pi)`
    /// defined by `e^{i (g.theta)/2} = (alpha e^{i theta/2} + beta e^{-i theta/2}) / | ... |`.
    pub fn mobius_double(&self, theta: f64) -> Result<f64, Error> {
        let half = Complex64::from_polar(1.0, theta / 2.0);
        let num = self.alpha * half + self.beta * half.conj();
        if num.norm() < SINGULAR_EPS {
            return Err(Error::SingularAction);
        }
        Ok(wrap(2.0 * num.arg(), 2.0 * TAU))
    }

    /// Additive cocycle `t(g, zeta) = 2 ln |conj(beta) zeta + conj(alpha)|`.
    pub fn cocycle_t(&self, z: CirclePoint) -> Result<f64, Error> {
        let den = self.beta.conj() * z.unit() + self.alpha.conj();
        if den.norm() < SINGULAR_EPS {
            return Err(Error::SingularAction);
        }
        Ok(2.0 * den.norm().ln())
    }

    /// Multiplicative cocycle
    /// `u(g, zeta) = (conj(beta) zeta + conj(alpha)) / |conj(beta) zeta + conj(alpha)|`,
    /// a unit-modulus complex number.
    pub fn cocycle_u(&self, z: CirclePoint) -> Result<Complex64, Error> {
        let den = self.beta.conj() * z.unit() + self.alpha.conj();
        let norm = den.norm();
        if norm < SINGULAR_EPS {
            return Err(Error::SingularAction);
        }
        Ok(den / norm)
    }

    /// Derivative of the boundary action,
    /// `d(g.theta)/d theta = |conj(alpha) + conj(beta) e^{i theta}|^{-2} = exp(-t(g, theta))`.
    pub fn action_derivative(&self, theta: f64) -> f64 {
        let den = self.beta.conj() * Complex64::from_polar(1.0, theta) + self.alpha.conj();
        1.0 / den.norm_sqr()
    }
}

impl Mul for GroupElement {
    type Output = GroupElement;

    fn mul(self, rhs: GroupElement) -> GroupElement {
        // (a1, b1; ~b1, ~a1)(a2, b2; ~b2, ~a2): the product keeps the
        // conjugate-symmetric shape exactly; the constraint may drift and is
        // not silently corrected.
        GroupElement {
            alpha: self.alpha * rhs.alpha + self.beta * rhs.beta.conj(),
            beta: self.alpha * rhs.beta + self.beta * rhs.alpha.conj(),
        }
    }
}

impl Mul for &GroupElement {
    type Output = GroupElement;

    fn mul(self, rhs: &GroupElement) -> GroupElement {
        *self * *rhs
    }
}

/// A real 2x2 matrix `(a, b; c, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RealMatrix2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl RealMatrix2 {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::new(1.0, 0.0, 0.0, 1.0)
    }

    pub fn determinant(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self::new(k * self.a, k * self.b, k * self.c, k * self.d)
    }

    /// Matrix exponential of a traceless matrix, by the closed form
    /// `exp(M) = cosh(r) I + sinh(r)/r M` with `r^2 = a^2 + b c`
    /// (trigonometric branch when `r^2 < 0`).
    pub fn exp_traceless(&self) -> Self {
        debug_assert!(self.trace().abs() < 1e-12 * (1.0 + self.a.abs()));
        let delta = self.a * self.a + self.b * self.c;
        let (cosh_r, sinhc_r) = if delta > 1e-30 {
            let r = delta.sqrt();
            (r.cosh(), r.sinh() / r)
        } else if delta < -1e-30 {
            let r = (-delta).sqrt();
            (r.cos(), r.sin() / r)
        } else {
            (1.0, 1.0)
        };
        Self::new(
            cosh_r + sinhc_r * self.a,
            sinhc_r * self.b,
            sinhc_r * self.c,
            cosh_r - sinhc_r * self.a,
        )
    }
}

impl Mul for RealMatrix2 {
    type Output = RealMatrix2;

    fn mul(self, rhs: RealMatrix2) -> RealMatrix2 {
        RealMatrix2::new(
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        )
    }
}

/// Cayley conjugation `m -> C m C^{-1}` with `C = (1, -i; 1, i)/sqrt(2)`,
/// mapping real unimodular matrices onto SU(1,1):
/// `alpha = ((a+d) + i(b-c))/2`, `beta = ((a-d) - i(b+c))/2`.
pub fn cayley_to_su11(m: &RealMatrix2) -> Result<GroupElement, Error> {
    cayley_to_su11_with_tolerance(m, GROUP_EPS)
}

pub fn cayley_to_su11_with_tolerance(
    m: &RealMatrix2,
    tolerance: f64,
) -> Result<GroupElement, Error> {
    let residual = (m.determinant() - 1.0).abs();
    if residual > tolerance {
        return Err(Error::Determinant {
            residual,
            tolerance,
        });
    }
    let alpha = Complex64::new((m.a + m.d) / 2.0, (m.b - m.c) / 2.0);
    let beta = Complex64::new((m.a - m.d) / 2.0, -(m.b + m.c) / 2.0);
    // |alpha|^2 - |beta|^2 equals det(m) identically, so this cannot fail
    // once the determinant check has passed.
    GroupElement::new_with_tolerance(alpha, beta, tolerance)
}
