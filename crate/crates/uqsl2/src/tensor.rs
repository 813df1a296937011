//! Two- and three-fold tensor powers of the algebra, with both legs kept in
//! PBW normal form and the componentwise product rule
//! `(a (x) b)(c (x) d) = ac (x) bd`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::pbw::{pbw_multiply, Monomial, PbwElement};
use crate::ratfunc::RatFuncQ;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(Monomial, Monomial), RatFuncQ>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::tensor(&PbwElement::one(), &PbwElement::one())
    }

    /// Outer product `a (x) b`.
    pub fn tensor(a: &PbwElement, b: &PbwElement) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                out.insert_add((*ma, *mb), &(ca * cb));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &RatFuncQ)> {
        self.terms.iter()
    }

    pub fn insert_add(&mut self, key: (Monomial, Monomial), coeff: &RatFuncQ) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(RatFuncQ::zero);
        *entry = &*entry + coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scaled(&self, c: &RatFuncQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Apply the counit to the left leg, leaving an algebra element.
    pub fn counit_left(&self) -> PbwElement {
        let mut out = PbwElement::zero();
        for (&(l, r), c) in &self.terms {
            let eps = PbwElement::monomial(l, RatFuncQ::one()).counit();
            if !eps.is_zero() {
                out.insert_add(r, &(&eps * c));
            }
        }
        out
    }

    /// Apply the counit to the right leg.
    pub fn counit_right(&self) -> PbwElement {
        let mut out = PbwElement::zero();
        for (&(l, r), c) in &self.terms {
            let eps = PbwElement::monomial(r, RatFuncQ::one()).counit();
            if !eps.is_zero() {
                out.insert_add(l, &(&eps * c));
            }
        }
        out
    }

    /// Multiply the two legs together after applying `f` to the left leg:
    /// the `m (f (x) id)` step of the antipode axiom.
    pub fn map_left_then_multiply(&self, f: impl Fn(&PbwElement) -> PbwElement) -> PbwElement {
        let mut out = PbwElement::zero();
        for (&(l, r), c) in &self.terms {
            let mapped = f(&PbwElement::monomial(l, RatFuncQ::one()));
            let prod = pbw_multiply(&mapped, &PbwElement::monomial(r, RatFuncQ::one()));
            for (m, k) in prod.terms() {
                out.insert_add(*m, &(k * c));
            }
        }
        out
    }

    /// As [`Self::map_left_then_multiply`] on the right leg.
    pub fn map_right_then_multiply(&self, f: impl Fn(&PbwElement) -> PbwElement) -> PbwElement {
        let mut out = PbwElement::zero();
        for (&(l, r), c) in &self.terms {
            let mapped = f(&PbwElement::monomial(r, RatFuncQ::one()));
            let prod = pbw_multiply(&PbwElement::monomial(l, RatFuncQ::one()), &mapped);
            for (m, k) in prod.terms() {
                out.insert_add(*m, &(k * c));
            }
        }
        out
    }

    /// Expand a leg map `Monomial -> TensorElement` on the left leg,
    /// producing a three-fold tensor: the `(f (x) id)` step of
    /// coassociativity.
    pub fn expand_left(&self, f: impl Fn(&Monomial) -> TensorElement) -> Tensor3 {
        let mut out = Tensor3::zero();
        for (&(l, r), c) in &self.terms {
            for (&(a, b), k) in f(&l).terms() {
                out.insert_add((a, b, r), &(k * c));
            }
        }
        out
    }

    /// As [`Self::expand_left`] on the right leg.
    pub fn expand_right(&self, f: impl Fn(&Monomial) -> TensorElement) -> Tensor3 {
        let mut out = Tensor3::zero();
        for (&(l, r), c) in &self.terms {
            for (&(a, b), k) in f(&r).terms() {
                out.insert_add((l, a, b), &(k * c));
            }
        }
        out
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;

    fn add(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.insert_add(k, c);
        }
        out
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;

    fn sub(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.insert_add(k, &-c);
        }
        out
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;

    fn neg(self) -> TensorElement {
        TensorElement {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for &TensorElement {
    type Output = TensorElement;

    fn mul(self, rhs: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (&(l1, r1), c1) in &self.terms {
            for (&(l2, r2), c2) in &rhs.terms {
                let left = pbw_multiply(
                    &PbwElement::monomial(l1, RatFuncQ::one()),
                    &PbwElement::monomial(l2, RatFuncQ::one()),
                );
                let right = pbw_multiply(
                    &PbwElement::monomial(r1, RatFuncQ::one()),
                    &PbwElement::monomial(r2, RatFuncQ::one()),
                );
                let c = c1 * c2;
                for (ml, kl) in left.terms() {
                    for (mr, kr) in right.terms() {
                        out.insert_add((*ml, *mr), &(&(kl * kr) * &c));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(l, r), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{l} (x) {r}")?;
            } else {
                write!(f, "{c} * {l} (x) {r}")?;
            }
        }
        Ok(())
    }
}

/// Three-fold tensors, needed only to state coassociativity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tensor3 {
    terms: BTreeMap<(Monomial, Monomial, Monomial), RatFuncQ>,
}

impl Tensor3 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn insert_add(&mut self, key: (Monomial, Monomial, Monomial), coeff: &RatFuncQ) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(RatFuncQ::zero);
        *entry = &*entry + coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial, Monomial), &RatFuncQ)> {
        self.terms.iter()
    }
}

impl Sub for &Tensor3 {
    type Output = Tensor3;

    fn sub(self, rhs: &Tensor3) -> Tensor3 {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.insert_add(k, &-c);
        }
        out
    }
}

impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(a, b, c), k)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{k} * {a} (x) {b} (x) {c}")?;
        }
        Ok(())
    }
}
