//! Seeded random PBW elements for the axiom verifier.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::pbw::{Monomial, PbwElement};
use crate::ratfunc::RatFuncQ;

/// SplitMix64, for platform-independent reproducible sampling.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

/// Random element: one to three monomials of ladder degree at most
/// `max_degree`, with small rational or `q`-power coefficients.
pub fn random_element(rng: &mut SplitMix64, max_degree: u32) -> PbwElement {
    let mut out = PbwElement::zero();
    let monomials = 1 + rng.below(3);
    for _ in 0..monomials {
        let r = rng.below(max_degree as u64 + 1) as u32;
        let m = rng.below((max_degree - r) as u64 + 1) as u32;
        let l = rng.below(5) as i64 - 2;
        let coeff = match rng.below(5) {
            0 => RatFuncQ::from_int(1),
            1 => RatFuncQ::from_int(-2),
            2 => RatFuncQ::from_rational(BigRational::new(BigInt::from(1), BigInt::from(2))),
            3 => RatFuncQ::q_pow(1),
            _ => RatFuncQ::q_pow(-1),
        };
        out.insert_add(Monomial::new(r, l, m), &coeff);
    }
    if out.is_zero() {
        PbwElement::one()
    } else {
        out
    }
}
