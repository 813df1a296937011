//! Parsing of matrices, complex scalars, and coefficient files.

use anyhow::{bail, Context, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use su11::group::{cayley_to_su11_with_tolerance, GroupElement, RealMatrix2};
use su11::rep::FourierFunction;

/// Parse a comma-separated list of reals.
pub fn parse_reals(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .with_context(|| format!("not a number: {p:?}"))
        })
        .collect()
}

/// Parse "re" or "re,im" into a complex scalar.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let parts = parse_reals(s)?;
    match parts.as_slice() {
        [re] => Ok(Complex64::new(*re, 0.0)),
        [re, im] => Ok(Complex64::new(*re, *im)),
        _ => bail!("expected RE or RE,IM, got {s:?}"),
    }
}

/// Parse a group element from 2, 4, or 8 comma-separated reals:
///
/// * 2 reals: real `(alpha, beta)` pair,
/// * 4 reals: a real unimodular matrix `(a, b, c, d)`, mapped through the
///   Cayley conjugation,
/// * 8 reals: the full complex matrix row-major as `re,im` pairs, with the
///   conjugate symmetry validated.
pub fn parse_group_element(s: &str, tolerance: f64) -> Result<GroupElement> {
    let v = parse_reals(s)?;
    match v.as_slice() {
        [a, b] => GroupElement::new_with_tolerance(
            Complex64::new(*a, 0.0),
            Complex64::new(*b, 0.0),
            tolerance,
        )
        .map_err(anyhow::Error::from),
        [a, b, c, d] => cayley_to_su11_with_tolerance(&RealMatrix2::new(*a, *b, *c, *d), tolerance)
            .map_err(anyhow::Error::from),
        [m11r, m11i, m12r, m12i, m21r, m21i, m22r, m22i] => {
            let alpha = Complex64::new(*m11r, *m11i);
            let beta = Complex64::new(*m12r, *m12i);
            let m21 = Complex64::new(*m21r, *m21i);
            let m22 = Complex64::new(*m22r, *m22i);
            if (m21 - beta.conj()).norm() > tolerance || (m22 - alpha.conj()).norm() > tolerance {
                bail!("matrix lacks the (alpha, beta; conj beta, conj alpha) symmetry");
            }
            GroupElement::new_with_tolerance(alpha, beta, tolerance).map_err(anyhow::Error::from)
        }
        _ => bail!("expected 2, 4, or 8 comma-separated reals, got {}", v.len()),
    }
}

/// JSON schema for Fourier coefficient vectors:
/// `{"p_max": N, "coeffs": [[re, im], ...]}` with `2N+1` entries ordered
/// from `p = -N` to `p = N`.
#[derive(Debug, Serialize, Deserialize)]
pub struct FourierFile {
    pub p_max: i64,
    pub coeffs: Vec<[f64; 2]>,
}

impl FourierFile {
    pub fn to_function(&self) -> Result<FourierFunction> {
        if self.coeffs.len() as i64 != 2 * self.p_max + 1 {
            bail!(
                "expected {} coefficients for p_max = {}, got {}",
                2 * self.p_max + 1,
                self.p_max,
                self.coeffs.len()
            );
        }
        let mut f = FourierFunction::zero(self.p_max);
        for (i, c) in self.coeffs.iter().enumerate() {
            f.set_coeff(i as i64 - self.p_max, Complex64::new(c[0], c[1]));
        }
        Ok(f)
    }

    pub fn from_function(f: &FourierFunction) -> Self {
        Self {
            p_max: f.p_max(),
            coeffs: f.iter().map(|(_, c)| [c.re, c.im]).collect(),
        }
    }
}
