//! Closed-form Iwasawa (KAN) and Cartan (KAK) decompositions and their
//! recompositions.
//!
//! The compact angles live on the double cover: `theta`, `phi` in `[0, 4*pi)`
//! and the Cartan `psi` in `[0, 2*pi)`. The optional `scale` field carries
//! the positive prefactor some applications attach to a decomposition; it is
//! metadata only and is never multiplied into the matrix factors, which
//! would leave the group.

use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::angle::wrap;
use crate::error::Error;
use crate::group::GroupElement;

/// Degeneracy threshold: below this |beta| an element is treated as lying in
/// the compact subgroup, where the Cartan angles are not separately defined.
pub const DEGENERATE_EPS: f64 = 1e-12;

const FOUR_PI: f64 = 2.0 * TAU;

/// Coordinates of `g = k_theta d_t^{1/2} n_xi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IwasawaFactors {
    pub theta: f64,
    pub t: f64,
    pub xi: f64,
    pub scale: f64,
}

impl IwasawaFactors {
    pub fn new(theta: f64, t: f64, xi: f64) -> Self {
        Self {
            theta: wrap(theta, FOUR_PI),
            t,
            xi,
            scale: 1.0,
        }
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        assert!(scale > 0.0, "scale must be positive");
        self.scale = scale;
        self
    }
}

/// Coordinates of `g = k_phi d_t^{1/2} k_psi` with `t >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartanFactors {
    pub phi: f64,
    pub t: f64,
    pub psi: f64,
    pub scale: f64,
}

impl CartanFactors {
    pub fn new(phi: f64, t: f64, psi: f64) -> Self {
        Self {
            phi: wrap(phi, FOUR_PI),
            t,
            psi: wrap(psi, TAU),
            scale: 1.0,
        }
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        assert!(scale > 0.0, "scale must be positive");
        self.scale = scale;
        self
    }
}

/// JSON schema shared by both coordinate records:
/// `{"form": "iwasawa"|"cartan", ...}`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "lowercase")]
pub enum Factors {
    Iwasawa {
        theta: f64,
        t: f64,
        xi: f64,
        scale: f64,
    },
    Cartan {
        phi: f64,
        t: f64,
        psi: f64,
        scale: f64,
    },
}

impl From<IwasawaFactors> for Factors {
    fn from(f: IwasawaFactors) -> Self {
        Factors::Iwasawa {
            theta: f.theta,
            t: f.t,
            xi: f.xi,
            scale: f.scale,
        }
    }
}

impl From<CartanFactors> for Factors {
    fn from(f: CartanFactors) -> Self {
        Factors::Cartan {
            phi: f.phi,
            t: f.t,
            psi: f.psi,
            scale: f.scale,
        }
    }
}

/// Iwasawa coordinates of `g`, from the closed forms
/// `e^{i theta/2} = (alpha+beta)/|alpha+beta|`, `e^t = |alpha+beta|^2`,
/// `xi = Im((alpha-beta)/(alpha+beta))`.
pub fn iwasawa(g: &GroupElement) -> Result<IwasawaFactors, Error> {
    let s = g.alpha() + g.beta();
    let norm = s.norm();
    if norm < 1e-14 {
        // |alpha + beta| >= |alpha| - |beta| > 0 on the group; reaching this
        // means the input is corrupted.
        return Err(Error::DegenerateInput("alpha + beta vanishes"));
    }
    let theta = wrap(2.0 * s.arg(), FOUR_PI);
    let t = 2.0 * norm.ln();
    let xi = ((g.alpha() - g.beta()) / s).im;
    Ok(IwasawaFactors::new(theta, t, xi))
}

/// Rebuild `k_theta d_t^{1/2} n_xi` from Iwasawa coordinates. The stored
/// `scale` is not applied to the matrix.
pub fn recompose_iwasawa(f: &IwasawaFactors) -> GroupElement {
    GroupElement::rotation(f.theta) * GroupElement::boost(f.t) * GroupElement::parabolic(f.xi)
}

/// Cartan (KAK) coordinates of `g`: `sinh(t/2) = |beta|`, angles from
/// `e^{i(phi+psi)/2} = alpha/|alpha|` and `e^{i(phi-psi)/2} = beta/|beta|`.
///
/// For `g` in the compact subgroup (`|beta| <= DEGENERATE_EPS`) only the
/// combination `phi + psi` is determined; the convention here is `t = 0`,
/// `psi = 0`, `phi = 2 arg(alpha) mod 4*pi`.
pub fn cartan(g: &GroupElement) -> CartanFactors {
    let b = g.beta().norm();
    if b <= DEGENERATE_EPS {
        let phi = wrap(2.0 * g.alpha().arg(), FOUR_PI);
        return CartanFactors::new(phi, 0.0, 0.0);
    }
    let t = 2.0 * b.asinh();
    let s_plus = g.alpha().arg();
    let s_minus = g.beta().arg();
    let mut phi = wrap(s_plus + s_minus, FOUR_PI);
    let psi = wrap(s_plus - s_minus, TAU);
    // Half-angle two-fold ambiguity: the two wraps can land on the sheet
    // where both recomposed entries flip sign; one global 2*pi shift of phi
    // fixes both at once.
    let alpha_back = num_complex::Complex64::from_polar((t / 2.0).cosh(), (phi + psi) / 2.0);
    if (alpha_back - g.alpha()).norm() > (alpha_back + g.alpha()).norm() {
        phi = wrap(phi + TAU, FOUR_PI);
    }
    CartanFactors::new(phi, t, psi)
}

/// Rebuild `(alpha, beta)` from Cartan coordinates via
/// `alpha = e^{i(phi+psi)/2} cosh(t/2)`, `beta = e^{i(phi-psi)/2} sinh(t/2)`.
pub fn recompose_cartan(f: &CartanFactors) -> Result<GroupElement, Error> {
    if f.t < 0.0 {
        return Err(Error::NegativeT(f.t));
    }
    let alpha = num_complex::Complex64::from_polar((f.t / 2.0).cosh(), (f.phi + f.psi) / 2.0);
    let beta = num_complex::Complex64::from_polar((f.t / 2.0).sinh(), (f.phi - f.psi) / 2.0);
    GroupElement::new(alpha, beta)
}
