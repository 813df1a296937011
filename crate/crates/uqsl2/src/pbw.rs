//! Elements of the q-deformed enveloping algebra in the PBW basis.
//!
//! The algebra is generated by `S+`, `S-`, `K`, `K^{-1}` subject to
//!
//! ```text
//! K K^{-1} = K^{-1} K = 1
//! K S+ K^{-1} = q^2  S+
//! K S- K^{-1} = q^-2 S-
//! S+ S- - S- S+ = (K - K^{-1}) / (q - q^{-1})
//! ```
//!
//! and is spanned by the normal-ordered monomials `S-^r K^l S+^m`
//! (`r, m >= 0`, `l` any integer, with `K^{-1}` encoded as negative `l`).
//! Products are normal-ordered by a confluent rewrite system applied to
//! exhaustion, with exact coefficients in Q(q) throughout.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ratfunc::RatFuncQ;

/// A PBW basis monomial `S-^r K^l S+^m`. The derived ordering (by `r`, then
/// `l`, then `m`) fixes the display and iteration order everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub s_minus: u32,
    pub k_pow: i64,
    pub s_plus: u32,
}

impl Monomial {
    pub fn new(s_minus: u32, k_pow: i64, s_plus: u32) -> Self {
        Self {
            s_minus,
            k_pow,
            s_plus,
        }
    }

    pub fn unit() -> Self {
        Self::new(0, 0, 0)
    }

    /// Total ladder degree `r + m`.
    pub fn degree(&self) -> u32 {
        self.s_minus + self.s_plus
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::unit() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if first {
                first = false;
                Ok(())
            } else {
                write!(f, " ")
            }
        };
        if self.s_minus > 0 {
            sep(f)?;
            if self.s_minus == 1 {
                write!(f, "S-")?;
            } else {
                write!(f, "S-^{}", self.s_minus)?;
            }
        }
        if self.k_pow != 0 {
            sep(f)?;
            if self.k_pow == 1 {
                write!(f, "K")?;
            } else {
                write!(f, "K^{}", self.k_pow)?;
            }
        }
        if self.s_plus > 0 {
            sep(f)?;
            if self.s_plus == 1 {
                write!(f, "S+")?;
            } else {
                write!(f, "S+^{}", self.s_plus)?;
            }
        }
        Ok(())
    }
}

/// Exact element of the algebra: a finite Q(q)-combination of PBW monomials
/// in canonical (normal) form. Equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PbwElement {
    terms: BTreeMap<Monomial, RatFuncQ>,
}

impl PbwElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::unit(), RatFuncQ::one())
    }

    pub fn s_plus() -> Self {
        Self::monomial(Monomial::new(0, 0, 1), RatFuncQ::one())
    }

    pub fn s_minus() -> Self {
        Self::monomial(Monomial::new(1, 0, 0), RatFuncQ::one())
    }

    pub fn k() -> Self {
        Self::monomial(Monomial::new(0, 1, 0), RatFuncQ::one())
    }

    pub fn k_inv() -> Self {
        Self::monomial(Monomial::new(0, -1, 0), RatFuncQ::one())
    }

    pub fn monomial(m: Monomial, coeff: RatFuncQ) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RatFuncQ)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> RatFuncQ {
        self.terms.get(m).cloned().unwrap_or_else(RatFuncQ::zero)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Largest ladder degree among the monomials.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn insert_add(&mut self, m: Monomial, coeff: &RatFuncQ) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(RatFuncQ::zero);
        *entry = &*entry + coeff;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scaled(&self, c: &RatFuncQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&m, k)| (m, k * c)).collect(),
        }
    }

    /// Counit: the homomorphism sending `S+`, `S-` to 0 and `K` to 1, so a
    /// monomial survives exactly when it has no ladder factors.
    pub fn counit(&self) -> RatFuncQ {
        let mut out = RatFuncQ::zero();
        for (m, c) in &self.terms {
            if m.degree() == 0 {
                out = &out + c;
            }
        }
        out
    }

    /// Antipode: the anti-homomorphism with `S(S+) = -K^{-1} S+`,
    /// `S(S-) = -S- K`, `S(K) = K^{-1}`, extended by reversing products and
    /// normal-ordering the result.
    pub fn antipode(&self) -> Self {
        let s_plus_img = pbw_multiply(&Self::k_inv().scaled(&(-&RatFuncQ::one())), &Self::s_plus());
        let s_minus_img = pbw_multiply(&Self::s_minus().scaled(&(-&RatFuncQ::one())), &Self::k());
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            // Reverse the monomial: S(S-^r K^l S+^m) = S(S+)^m S(K)^l S(S-)^r.
            let mut acc = Self::one();
            for _ in 0..m.s_plus {
                acc = pbw_multiply(&acc, &s_plus_img);
            }
            acc = pbw_multiply(
                &acc,
                &Self::monomial(Monomial::new(0, -m.k_pow, 0), RatFuncQ::one()),
            );
            for _ in 0..m.s_minus {
                acc = pbw_multiply(&acc, &s_minus_img);
            }
            for (mm, cc) in acc.terms {
                out.insert_add(mm, &(&cc * c));
            }
        }
        out
    }
}

impl Add for &PbwElement {
    type Output = PbwElement;

    fn add(self, rhs: &PbwElement) -> PbwElement {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.insert_add(m, c);
        }
        out
    }
}

impl Sub for &PbwElement {
    type Output = PbwElement;

    fn sub(self, rhs: &PbwElement) -> PbwElement {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.insert_add(m, &-c);
        }
        out
    }
}

impl Neg for &PbwElement {
    type Output = PbwElement;

    fn neg(self) -> PbwElement {
        PbwElement {
            terms: self.terms.iter().map(|(&m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for &PbwElement {
    type Output = PbwElement;

    fn mul(self, rhs: &PbwElement) -> PbwElement {
        pbw_multiply(self, rhs)
    }
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *m == Monomial::unit() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c} * {m}")?;
            }
        }
        Ok(())
    }
}

// ---- the rewrite engine ----

/// Letters of the free word; `K` carries its full power so commuting it
/// through a ladder letter is one rule application.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Letter {
    SMinus,
    K(i64),
    SPlus,
}

/// Iteration cap for one product. The system is terminating, so hitting the
/// cap means a corrupted word and is a hard bug.
const REWRITE_BUDGET: usize = 1_000_000;

fn rank(l: &Letter) -> u8 {
    match l {
        Letter::SMinus => 0,
        Letter::K(_) => 1,
        Letter::SPlus => 2,
    }
}

/// Locate the first adjacent pair violating the `S- < K < S+` order (or a
/// mergeable `K K` pair).
fn first_violation(word: &[Letter]) -> Option<usize> {
    word.windows(2).position(|w| {
        rank(&w[0]) > rank(&w[1]) || matches!((&w[0], &w[1]), (Letter::K(_), Letter::K(_)))
    })
}

fn collapse(word: &[Letter]) -> Monomial {
    let mut m = Monomial::unit();
    for l in word {
        match l {
            Letter::SMinus => m.s_minus += 1,
            Letter::K(p) => m.k_pow += p,
            Letter::SPlus => m.s_plus += 1,
        }
    }
    m
}

/// Normal-order `coeff * word` into `out`, by exhaustively applying
///
/// ```text
/// S+ S-  ->  S- S+ + (K - K^{-1}) / (q - q^{-1})
/// S+ K^l ->  q^{-2l} K^l S+        K^l S-  ->  q^{-2l} S- K^l
/// ```
fn normal_order_into(coeff: RatFuncQ, word: Vec<Letter>, out: &mut PbwElement) {
    let mut stack = vec![(coeff, word)];
    let mut budget = REWRITE_BUDGET;
    while let Some((c, w)) = stack.pop() {
        match first_violation(&w) {
            None => out.insert_add(collapse(&w), &c),
            Some(i) => {
                budget = budget.checked_sub(1).unwrap_or_else(|| {
                    panic!("normal ordering exceeded {REWRITE_BUDGET} rewrite steps")
                });
                match (w[i], w[i + 1]) {
                    (Letter::SPlus, Letter::SMinus) => {
                        // Swap plus the two K correction terms.
                        let mut swapped = w.clone();
                        swapped[i] = Letter::SMinus;
                        swapped[i + 1] = Letter::SPlus;
                        stack.push((c.clone(), swapped));

                        let inv = RatFuncQ::inv_q_minus_q_inv();
                        let mut with_k = w.clone();
                        with_k.splice(i..=i + 1, [Letter::K(1)]);
                        stack.push((&c * &inv, with_k));

                        let mut with_k_inv = w;
                        with_k_inv.splice(i..=i + 1, [Letter::K(-1)]);
                        stack.push((&(-&c) * &inv, with_k_inv));
                    }
                    (Letter::SPlus, Letter::K(l)) => {
                        let mut swapped = w;
                        swapped[i] = Letter::K(l);
                        swapped[i + 1] = Letter::SPlus;
                        stack.push((&c * &RatFuncQ::q_pow(-2 * l), swapped));
                    }
                    (Letter::K(l), Letter::SMinus) => {
                        let mut swapped = w;
                        swapped[i] = Letter::SMinus;
                        swapped[i + 1] = Letter::K(l);
                        stack.push((&c * &RatFuncQ::q_pow(-2 * l), swapped));
                    }
                    (Letter::K(a), Letter::K(b)) => {
                        let mut merged = w;
                        if a + b == 0 {
                            merged.splice(i..=i + 1, []);
                        } else {
                            merged.splice(i..=i + 1, [Letter::K(a + b)]);
                        }
                        stack.push((c, merged));
                    }
                    _ => unreachable!("no rule matches an ordered pair"),
                }
            }
        }
    }
}

fn monomial_word(m: &Monomial) -> Vec<Letter> {
    let mut w = Vec::with_capacity((m.s_minus + m.s_plus) as usize + 1);
    w.extend(std::iter::repeat_n(Letter::SMinus, m.s_minus as usize));
    if m.k_pow != 0 {
        w.push(Letter::K(m.k_pow));
    }
    w.extend(std::iter::repeat_n(Letter::SPlus, m.s_plus as usize));
    w
}

/// Product of two elements in PBW normal form.
pub fn pbw_multiply(x: &PbwElement, y: &PbwElement) -> PbwElement {
    let mut out = PbwElement::zero();
    for (mx, cx) in x.terms() {
        for (my, cy) in y.terms() {
            let mut word = monomial_word(mx);
            word.extend(monomial_word(my));
            normal_order_into(cx * cy, word, &mut out);
        }
    }
    out
}

/// `x y - y x`.
pub fn commutator(x: &PbwElement, y: &PbwElement) -> PbwElement {
    &pbw_multiply(x, y) - &pbw_multiply(y, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations_in_normal_form() {
        // S+ S- -> S- S+ + (q - q^-1)^{-1} K - (q - q^-1)^{-1} K^{-1}.
        let prod = pbw_multiply(&PbwElement::s_plus(), &PbwElement::s_minus());
        let inv = RatFuncQ::inv_q_minus_q_inv();
        let mut expected = PbwElement::monomial(Monomial::new(1, 0, 1), RatFuncQ::one());
        expected.insert_add(Monomial::new(0, 1, 0), &inv);
        expected.insert_add(Monomial::new(0, -1, 0), &-&inv);
        assert_eq!(prod, expected);

        // K K^{-1} = 1 structurally.
        assert_eq!(
            pbw_multiply(&PbwElement::k(), &PbwElement::k_inv()),
            PbwElement::one()
        );

        // S+ K = q^{-2} K S+ two ways.
        let direct = pbw_multiply(&PbwElement::s_plus(), &PbwElement::k());
        let expected = PbwElement::monomial(Monomial::new(0, 1, 1), RatFuncQ::q_pow(-2));
        assert_eq!(direct, expected);

        // K S- = q^{-2} S- K.
        let ks = pbw_multiply(&PbwElement::k(), &PbwElement::s_minus());
        assert_eq!(
            ks,
            PbwElement::monomial(Monomial::new(1, 1, 0), RatFuncQ::q_pow(-2))
        );
    }

    #[test]
    fn conjugation_relations() {
        // K S+ K^{-1} = q^2 S+ and K S- K^{-1} = q^{-2} S-.
        let conj_plus = pbw_multiply(
            &pbw_multiply(&PbwElement::k(), &PbwElement::s_plus()),
            &PbwElement::k_inv(),
        );
        assert_eq!(conj_plus, PbwElement::s_plus().scaled(&RatFuncQ::q_pow(2)));
        let conj_minus = pbw_multiply(
            &pbw_multiply(&PbwElement::k(), &PbwElement::s_minus()),
            &PbwElement::k_inv(),
        );
        assert_eq!(
            conj_minus,
            PbwElement::s_minus().scaled(&RatFuncQ::q_pow(-2))
        );
    }

    #[test]
    fn commutator_is_the_deformed_cartan() {
        let lhs = commutator(&PbwElement::s_plus(), &PbwElement::s_minus());
        let k_term = &PbwElement::k() - &PbwElement::k_inv();
        let rhs = k_term.scaled(&RatFuncQ::inv_q_minus_q_inv());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn associativity_on_random_triples() {
        let mut rng = crate::rng::SplitMix64::new(7);
        for _ in 0..200 {
            let x = crate::rng::random_element(&mut rng, 3);
            let y = crate::rng::random_element(&mut rng, 3);
            let z = crate::rng::random_element(&mut rng, 3);
            let left = pbw_multiply(&pbw_multiply(&x, &y), &z);
            let right = pbw_multiply(&x, &pbw_multiply(&y, &z));
            assert_eq!(left, right, "associativity failed for\n{x}\n{y}\n{z}");
        }
    }

    #[test]
    fn counit_examples() {
        assert!(PbwElement::one().counit().is_one());
        assert!(PbwElement::s_plus().counit().is_zero());
        // eps(K^3 + 2 S- S+) = 1.
        let mut x = PbwElement::monomial(Monomial::new(0, 3, 0), RatFuncQ::one());
        x.insert_add(Monomial::new(1, 0, 1), &RatFuncQ::from_int(2));
        assert!(x.counit().is_one());
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(PbwElement::one().antipode(), PbwElement::one());
        assert_eq!(PbwElement::k().antipode(), PbwElement::k_inv());
        // S(S+ S-) = S(S-) S(A+) = (-S- K)(-K^{-1} S+) = S- S+.
        let x = pbw_multiply(&PbwElement::s_plus(), &PbwElement::s_minus());
        assert_eq!(
            x.antipode(),
            PbwElement::monomial(Monomial::new(1, 0, 1), RatFuncQ::one())
        );
    }

    #[test]
    fn display_grammar_is_stable() {
        // 1/(q - q^-1) in canonical form is (-q)/(1 - q^2): the denominator
        // becomes a polynomial with constant coefficient 1 and the unit
        // power of q moves to the numerator.
        let mut x = PbwElement::monomial(Monomial::new(1, -2, 3), RatFuncQ::inv_q_minus_q_inv());
        x.insert_add(Monomial::unit(), &RatFuncQ::from_int(2));
        assert_eq!(x.to_string(), "2 + (-q)/(1 - q^2) * S- K^-2 S+^3");
    }
}
