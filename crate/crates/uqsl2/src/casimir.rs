//! The Casimir element and its centrality.

use crate::pbw::{commutator, pbw_multiply, Monomial, PbwElement};
use crate::ratfunc::RatFuncQ;

fn k_combination(plus_coeff_exp: i64, denominator_exponent: u32) -> PbwElement {
    // (q^a K + q^{-a} K^{-1}) / (q - q^{-1})^e with a = plus_coeff_exp.
    let inv = RatFuncQ::inv_q_minus_q_inv();
    let mut denom = RatFuncQ::one();
    for _ in 0..denominator_exponent {
        denom = &denom * &inv;
    }
    let mut out = PbwElement::monomial(
        Monomial::new(0, 1, 0),
        &RatFuncQ::q_pow(plus_coeff_exp) * &denom,
    );
    out.insert_add(
        Monomial::new(0, -1, 0),
        &(&RatFuncQ::q_pow(-plus_coeff_exp) * &denom),
    );
    out
}

/// The Casimir element
/// `omega = S+ S- + (q^{-1} K + q K^{-1}) / (q - q^{-1})^2`,
/// central in the algebra. The squared denominator is forced by centrality;
/// see [`casimir_linear_denominator`] for the rejected reading.
pub fn casimir() -> PbwElement {
    &pbw_multiply(&PbwElement::s_plus(), &PbwElement::s_minus()) + &k_combination(-1, 2)
}

/// The equivalent normal-ordered presentation
/// `omega = S- S+ + (q K + q^{-1} K^{-1}) / (q - q^{-1})^2`.
pub fn casimir_second_form() -> PbwElement {
    &pbw_multiply(&PbwElement::s_minus(), &PbwElement::s_plus()) + &k_combination(1, 2)
}

/// Fault-injection control: the same expression with a first-power
/// denominator. It is not central, which is how the squared reading is
/// certified.
pub fn casimir_linear_denominator() -> PbwElement {
    &pbw_multiply(&PbwElement::s_plus(), &PbwElement::s_minus()) + &k_combination(-1, 1)
}

/// Commutators of `x` with the three generators, as (label, residual) pairs;
/// all residuals are zero exactly when `x` is central.
pub fn centrality_residuals(x: &PbwElement) -> Vec<(&'static str, PbwElement)> {
    vec![
        ("K", commutator(x, &PbwElement::k())),
        ("S+", commutator(x, &PbwElement::s_plus())),
        ("S-", commutator(x, &PbwElement::s_minus())),
    ]
}

/// True iff `x` commutes with `K`, `S+`, and `S-` exactly.
pub fn is_central(x: &PbwElement) -> bool {
    centrality_residuals(x).iter().all(|(_, r)| r.is_zero())
}
