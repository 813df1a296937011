//! Numeric substitution into the two-dimensional fundamental representation.
//!
//! `K -> diag(q, q^{-1})`, `S+ -> E12`, `S- -> E21`, with coefficients
//! evaluated at a complex `q`. The substitution satisfies all four defining
//! relations at any admissible `q`, so it serves as an independent numeric
//! oracle for the rewriting engine. A single finite-dimensional image cannot
//! certify identities of the full Q(q)-algebra, so this stays a diagnostic,
//! never part of the exact contracts.

use num_complex::Complex64;

use crate::error::Error;
use crate::pbw::{commutator, PbwElement};
use crate::ratfunc::RatFuncQ;

pub type Mat2 = [[Complex64; 2]; 2];

pub fn mat_zero() -> Mat2 {
    [[Complex64::new(0.0, 0.0); 2]; 2]
}

pub fn mat_identity() -> Mat2 {
    let mut m = mat_zero();
    m[0][0] = Complex64::new(1.0, 0.0);
    m[1][1] = Complex64::new(1.0, 0.0);
    m
}

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = mat_zero();
    for i in 0..2 {
        for j in 0..2 {
            for (k, bk) in b.iter().enumerate() {
                out[i][j] += a[i][k] * bk[j];
            }
        }
    }
    out
}

pub fn mat_sub(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = mat_zero();
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][j] - b[i][j];
        }
    }
    out
}

pub fn mat_max_norm(a: &Mat2) -> f64 {
    a.iter().flatten().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Evaluate an element in the fundamental representation at `q`.
///
/// `q` must be nonzero and bounded away from the poles of the coefficients
/// (in particular `q != +-1` whenever a `(q - q^{-1})` denominator occurs).
pub fn matrix_eval(x: &PbwElement, q: Complex64) -> Result<Mat2, Error> {
    if q.norm() < 1e-12 {
        return Err(Error::Pole { at: q });
    }
    let mut out = mat_zero();
    for (m, c) in x.terms() {
        // E21^r E12^m vanish beyond first powers.
        if m.s_minus > 1 || m.s_plus > 1 {
            continue;
        }
        let coeff = c.eval(q)?;
        let k_diag = [q.powi(m.k_pow as i32), q.powi(-m.k_pow as i32)];
        // The monomial S-^r K^l S+^m in the fundamental:
        // r = m = 0 -> diag(k);  r = 1, m = 0 -> coeff at (2,1)
        // r = 0, m = 1 -> (1,2); r = m = 1 -> E21 K E12 hits only (2,2).
        match (m.s_minus, m.s_plus) {
            (0, 0) => {
                out[0][0] += coeff * k_diag[0];
                out[1][1] += coeff * k_diag[1];
            }
            (0, 1) => out[0][1] += coeff * k_diag[0],
            (1, 0) => out[1][0] += coeff * k_diag[0],
            (1, 1) => out[1][1] += coeff * k_diag[0],
            _ => unreachable!(),
        }
    }
    Ok(out)
}

/// Residual of the deformed commutation relation in the fundamental at `q`:
/// `|| [S+, S-] - (K - K^{-1})/(q - q^{-1}) ||` after substitution. Reported,
/// not asserted.
pub fn relation_residual(q: Complex64) -> Result<f64, Error> {
    let lhs = matrix_eval(
        &commutator(&PbwElement::s_plus(), &PbwElement::s_minus()),
        q,
    )?;
    let k_term = (&PbwElement::k() - &PbwElement::k_inv()).scaled(&RatFuncQ::inv_q_minus_q_inv());
    let rhs = matrix_eval(&k_term, q)?;
    Ok(mat_max_norm(&mat_sub(&lhs, &rhs)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::pbw_multiply;

    #[test]
    fn generator_images() {
        let q = Complex64::new(2.0, 0.0);
        let k = matrix_eval(&PbwElement::k(), q).unwrap();
        assert!(
            (k[0][0] - q).norm() < 1e-15 && (k[1][1] - Complex64::new(0.5, 0.0)).norm() < 1e-15
        );
        assert!(k[0][1].norm() == 0.0 && k[1][0].norm() == 0.0);

        let id = matrix_eval(&PbwElement::one(), q).unwrap();
        assert_eq!(mat_max_norm(&mat_sub(&id, &mat_identity())), 0.0);
    }

    #[test]
    fn relation_residual_vanishes_in_the_fundamental() {
        let q = Complex64::new(0.3f64.exp(), 0.0);
        assert!(relation_residual(q).unwrap() < 1e-12);
    }

    #[test]
    fn substitution_is_multiplicative_on_random_products() {
        // matrix(xy) = matrix(x) matrix(y): an independent check that the
        // rewrite engine computed xy correctly.
        let q = Complex64::new(1.7, 0.4);
        let mut rng = crate::rng::SplitMix64::new(99);
        for _ in 0..50 {
            let x = crate::rng::random_element(&mut rng, 3);
            let y = crate::rng::random_element(&mut rng, 3);
            let lhs = matrix_eval(&pbw_multiply(&x, &y), q).unwrap();
            let rhs = mat_mul(&matrix_eval(&x, q).unwrap(), &matrix_eval(&y, q).unwrap());
            assert!(
                mat_max_norm(&mat_sub(&lhs, &rhs)) < 1e-9,
                "fundamental image not multiplicative"
            );
        }
    }

    #[test]
    fn pole_detection() {
        let x = PbwElement::one().scaled(&RatFuncQ::inv_q_minus_q_inv());
        assert!(matches!(
            matrix_eval(&x, Complex64::new(1.0, 0.0)),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            matrix_eval(&PbwElement::k(), Complex64::new(0.0, 0.0)),
            Err(Error::Pole { .. })
        ));
    }
}
