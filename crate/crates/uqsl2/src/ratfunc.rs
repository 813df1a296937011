//! The coefficient field Q(q), as reduced fractions of Laurent polynomials.
//!
//! Canonical form: after every operation the denominator is an honest
//! polynomial with nonzero constant term, coprime to the numerator, and its
//! lowest-degree coefficient is normalized to 1 (any unit `c q^k` is folded
//! into the numerator). Structural equality is then field equality.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::Error;
use crate::laurent::{poly_div_rem, poly_gcd, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFuncQ {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFuncQ {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_int(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_laurent(LaurentPoly::constant(r))
    }

    /// `q^k` as a field element.
    pub fn q_pow(k: i64) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(k))
    }

    /// `1 / (q - q^{-1})`.
    pub fn inv_q_minus_q_inv() -> Self {
        Self::new(LaurentPoly::one(), LaurentPoly::q_minus_q_inv()).expect("q - q^-1 is not zero")
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut out = Self { num, den };
        out.reduce();
        Ok(out)
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        // A monomial denominator is a unit of the Laurent ring: fold it into
        // the numerator.
        if let Some((e, c)) = self.den.single_term() {
            let inv = c.recip();
            self.num = self.num.shifted(-e).scaled(&inv);
            self.den = LaurentPoly::one();
            return;
        }
        // Split the Laurent unit q^k off both parts, reduce honest
        // polynomials, then put the unit back on the numerator.
        let a = self.num.min_exp().unwrap();
        let b = self.den.min_exp().unwrap();
        let n = self.num.shifted(-a);
        let d = self.den.shifted(-b);
        let g = poly_gcd(&n, &d);
        let (n, rn) = poly_div_rem(&n, &g);
        let (d, rd) = poly_div_rem(&d, &g);
        debug_assert!(rn.is_zero() && rd.is_zero());
        // Normalize the denominator's lowest-degree coefficient to 1.
        let c = d.coeff(d.min_exp().unwrap());
        self.num = n.shifted(a - b).scaled(&c.recip());
        self.den = d.scaled(&c.recip());
    }

    pub fn inv(&self) -> Result<Self, Error> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Evaluate at a complex point; a vanishing denominator is a pole.
    pub fn eval(&self, q: Complex64) -> Result<Complex64, Error> {
        let d = self.den.eval(q);
        if d.norm() < 1e-12 {
            return Err(Error::Pole { at: q });
        }
        Ok(self.num.eval(q) / d)
    }
}

impl Add for &RatFuncQ {
    type Output = RatFuncQ;

    fn add(self, rhs: &RatFuncQ) -> RatFuncQ {
        if self.den == rhs.den {
            return RatFuncQ::new(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFuncQ::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Sub for &RatFuncQ {
    type Output = RatFuncQ;

    fn sub(self, rhs: &RatFuncQ) -> RatFuncQ {
        if self.den == rhs.den {
            return RatFuncQ::new(&self.num - &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RatFuncQ::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Mul for &RatFuncQ {
    type Output = RatFuncQ;

    fn mul(self, rhs: &RatFuncQ) -> RatFuncQ {
        // Canonical inputs with trivial denominators multiply without any
        // reduction work, which is the overwhelmingly common case.
        if self.den.is_one() && rhs.den.is_one() {
            return RatFuncQ {
                num: &self.num * &rhs.num,
                den: LaurentPoly::one(),
            };
        }
        RatFuncQ::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Div for &RatFuncQ {
    type Output = RatFuncQ;

    fn div(self, rhs: &RatFuncQ) -> RatFuncQ {
        assert!(!rhs.is_zero(), "division by zero in Q(q)");
        RatFuncQ::new(&self.num * &rhs.den, &self.den * &rhs.num).expect("nonzero denominators")
    }
}

impl Neg for &RatFuncQ {
    type Output = RatFuncQ;

    fn neg(self) -> RatFuncQ {
        RatFuncQ {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFuncQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl One for RatFuncQ {
    fn one() -> Self {
        RatFuncQ::one()
    }
}

impl Mul for RatFuncQ {
    type Output = RatFuncQ;

    fn mul(self, rhs: RatFuncQ) -> RatFuncQ {
        &self * &rhs
    }
}
