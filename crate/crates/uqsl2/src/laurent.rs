//! Laurent polynomials in `q` with exact rational coefficients.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `sum c_k q^k` over a finite set of integer exponents; zero coefficients
/// are never stored, so structural equality is semantic equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigRational::one())
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, BigRational::one())
    }

    pub fn q_pow(k: i64) -> Self {
        Self::monomial(k, BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn monomial(exp: i64, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// `q - q^{-1}`, the ubiquitous deformation denominator.
    pub fn q_minus_q_inv() -> Self {
        &Self::q() - &Self::q_pow(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms
            .get(&exp)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// When the polynomial is a single monomial, its exponent and
    /// coefficient.
    pub fn single_term(&self) -> Option<(i64, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&e, c)| (e, c))
        } else {
            None
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub(crate) fn insert_add(&mut self, exp: i64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiply by `q^k`.
    pub fn shifted(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, k)| (e, k * c)).collect(),
        }
    }

    /// Evaluate at a nonzero complex point.
    pub fn eval(&self, q: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(&e, c)| {
                let cf = Complex64::new(rational_to_f64(c), 0.0);
                cf * q.powi(e as i32)
            })
            .sum()
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    // Good enough for diagnostic evaluation; exact arithmetic never routes
    // through here.
    let num = r.numer();
    let den = r.denom();
    let fnum: f64 = num.to_string().parse().unwrap_or(f64::NAN);
    let fden: f64 = den.to_string().parse().unwrap_or(f64::NAN);
    fnum / fden
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.insert_add(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.insert_add(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.insert_add(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Ascending powers of q, every coefficient written explicitly.
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

// ---- polynomial helpers (nonnegative exponents) ----

/// Euclidean division `a = q b + r` for polynomials with `min_exp >= 0`;
/// panics if `b` is zero.
pub(crate) fn poly_div_rem(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    assert!(!b.is_zero(), "division by the zero polynomial");
    debug_assert!(a.min_exp().unwrap_or(0) >= 0 && b.min_exp().unwrap_or(0) >= 0);
    let db = b.max_exp().unwrap();
    let lead_b = b.coeff(db);
    let mut rem = a.clone();
    let mut quot = LaurentPoly::zero();
    while !rem.is_zero() && rem.max_exp().unwrap() >= db {
        let dr = rem.max_exp().unwrap();
        let factor = rem.coeff(dr) / lead_b.clone();
        let shift = dr - db;
        quot.insert_add(shift, factor.clone());
        let sub = b.shifted(shift).scaled(&factor);
        rem = &rem - &sub;
    }
    (quot, rem)
}

/// Monic gcd of two polynomials with `min_exp >= 0` (Euclid).
pub(crate) fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = poly_div_rem(&x, &y);
        x = y;
        y = r;
    }
    if x.is_zero() {
        return x;
    }
    // Normalize to a monic leading coefficient.
    let lead = x.coeff(x.max_exp().unwrap());
    x.scaled(&lead.recip())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = &LaurentPoly::q() + &LaurentPoly::q_pow(-1);
        let b = &LaurentPoly::q() - &LaurentPoly::q_pow(-1);
        let prod = &a * &b;
        // (q + q^-1)(q - q^-1) = q^2 - q^-2.
        assert_eq!(prod, &LaurentPoly::q_pow(2) - &LaurentPoly::q_pow(-2));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn no_zero_terms_stored() {
        let a = &LaurentPoly::q() + &(-&LaurentPoly::q());
        assert!(a.is_zero());
        let b = LaurentPoly::monomial(3, BigRational::zero());
        assert!(b.is_zero());
    }

    #[test]
    fn division_and_gcd() {
        // (q^2 - 1) / (q - 1) = q + 1 exactly.
        let num = &LaurentPoly::q_pow(2) - &LaurentPoly::one();
        let den = &LaurentPoly::q() - &LaurentPoly::one();
        let (quot, rem) = poly_div_rem(&num, &den);
        assert!(rem.is_zero());
        assert_eq!(quot, &LaurentPoly::q() + &LaurentPoly::one());

        // gcd(q^2 - 1, q^2 - 2q + 1) = q - 1.
        let a = &LaurentPoly::q_pow(2) - &LaurentPoly::one();
        let q21 =
            &(&LaurentPoly::q_pow(2) - &LaurentPoly::q().scaled(&rat(2, 1))) + &LaurentPoly::one();
        let g = poly_gcd(&a, &q21);
        assert_eq!(g, &LaurentPoly::q() - &LaurentPoly::one());
    }

    #[test]
    fn display_grammar() {
        let p = &(&LaurentPoly::q_pow(-2).scaled(&rat(-1, 2)) + &LaurentPoly::from_int(3))
            + &LaurentPoly::q();
        assert_eq!(p.to_string(), "-1/2*q^-2 + 3 + q");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn eval_matches_horner_by_hand() {
        let p = &LaurentPoly::q_pow(2) - &LaurentPoly::q_pow(-1);
        let q = Complex64::new(2.0, 0.0);
        assert!((p.eval(q) - Complex64::new(3.5, 0.0)).norm() < 1e-15);
    }
}
