//! The Hopf structure: coproduct, counit, antipode, and an exact axiom
//! verifier over Q(q).
//!
//! On generators,
//!
//! ```text
//! Delta(S+) = S+ (x) 1 + K (x) S+       Delta(S-) = S- (x) K^{-1} + 1 (x) S-
//! Delta(K)  = K (x) K
//! eps(S+) = eps(S-) = 0, eps(K) = 1
//! S(S+) = -K^{-1} S+,  S(S-) = -S- K,  S(K) = K^{-1}
//! ```
//!
//! extended multiplicatively (anti-multiplicatively for the antipode). All
//! checks are structural identities in normal form; nothing is floating
//! point.

use crate::pbw::{pbw_multiply, Monomial, PbwElement};
use crate::ratfunc::RatFuncQ;
use crate::rng::SplitMix64;
use crate::tensor::{Tensor3, TensorElement};

/// Coproduct images of the generators. The standard table is the Hopf
/// structure; the mutated table is a deliberate fault injection used as a
/// negative control.
#[derive(Debug, Clone)]
pub struct GeneratorCoproducts {
    s_plus: TensorElement,
    s_minus: TensorElement,
    k: TensorElement,
    k_inv: TensorElement,
}

impl GeneratorCoproducts {
    pub fn standard() -> Self {
        let one = PbwElement::one();
        Self {
            s_plus: &TensorElement::tensor(&PbwElement::s_plus(), &one)
                + &TensorElement::tensor(&PbwElement::k(), &PbwElement::s_plus()),
            s_minus: &TensorElement::tensor(&PbwElement::s_minus(), &PbwElement::k_inv())
                + &TensorElement::tensor(&one, &PbwElement::s_minus()),
            k: TensorElement::tensor(&PbwElement::k(), &PbwElement::k()),
            k_inv: TensorElement::tensor(&PbwElement::k_inv(), &PbwElement::k_inv()),
        }
    }

    /// The broken table `Delta'(S+) = S+ (x) 1 + 1 (x) S+` (undeformed
    /// primitive coproduct); every other generator keeps the standard image.
    pub fn mutated() -> Self {
        let one = PbwElement::one();
        Self {
            s_plus: &TensorElement::tensor(&PbwElement::s_plus(), &one)
                + &TensorElement::tensor(&one, &PbwElement::s_plus()),
            ..Self::standard()
        }
    }
}

/// Coproduct of a monomial under the given generator table:
/// `Delta(S-)^r Delta(K)^l Delta(S+)^m` in the tensor algebra.
fn coproduct_monomial(rules: &GeneratorCoproducts, m: &Monomial) -> TensorElement {
    let mut acc = TensorElement::one();
    for _ in 0..m.s_minus {
        acc = &acc * &rules.s_minus;
    }
    let k_image = if m.k_pow >= 0 { &rules.k } else { &rules.k_inv };
    for _ in 0..m.k_pow.abs() {
        acc = &acc * k_image;
    }
    for _ in 0..m.s_plus {
        acc = &acc * &rules.s_plus;
    }
    acc
}

pub fn coproduct_with(rules: &GeneratorCoproducts, x: &PbwElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (m, c) in x.terms() {
        let t = coproduct_monomial(rules, m);
        for (&key, k) in t.terms() {
            out.insert_add(key, &(k * c));
        }
    }
    out
}

/// The coproduct.
pub fn coproduct(x: &PbwElement) -> TensorElement {
    coproduct_with(&GeneratorCoproducts::standard(), x)
}

/// Fault-injected coproduct for negative controls.
pub fn coproduct_mutated(x: &PbwElement) -> TensorElement {
    coproduct_with(&GeneratorCoproducts::mutated(), x)
}

/// The counit.
pub fn counit(x: &PbwElement) -> RatFuncQ {
    x.counit()
}

/// The antipode.
pub fn antipode(x: &PbwElement) -> PbwElement {
    x.antipode()
}

/// `(Delta (x) id) Delta x - (id (x) Delta) Delta x`.
pub fn coassociativity_residual(rules: &GeneratorCoproducts, x: &PbwElement) -> Tensor3 {
    let d = coproduct_with(rules, x);
    let left = d.expand_left(|m| coproduct_monomial(rules, m));
    let right = d.expand_right(|m| coproduct_monomial(rules, m));
    &left - &right
}

/// Residuals of `(eps (x) id) Delta = id = (id (x) eps) Delta`.
pub fn counit_residuals(rules: &GeneratorCoproducts, x: &PbwElement) -> (PbwElement, PbwElement) {
    let d = coproduct_with(rules, x);
    (&d.counit_left() - x, &d.counit_right() - x)
}

/// Residuals of `m (S (x) id) Delta = eps(.) 1 = m (id (x) S) Delta`.
pub fn antipode_residuals(rules: &GeneratorCoproducts, x: &PbwElement) -> (PbwElement, PbwElement) {
    let d = coproduct_with(rules, x);
    let target = PbwElement::one().scaled(&x.counit());
    let left = d.map_left_then_multiply(|e| e.antipode());
    let right = d.map_right_then_multiply(|e| e.antipode());
    (&left - &target, &right - &target)
}

/// One axiom line of the verification report.
#[derive(Debug, Clone)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl AxiomCheck {
    fn pass(axiom: &str) -> Self {
        Self {
            axiom: axiom.to_string(),
            passed: true,
            counterexample: None,
        }
    }

    fn fail(axiom: &str, witness: String) -> Self {
        Self {
            axiom: axiom.to_string(),
            passed: false,
            counterexample: Some(witness),
        }
    }
}

/// Result of [`verify_hopf_axioms`].
#[derive(Debug, Clone)]
pub struct HopfReport {
    pub elements_tested: usize,
    pub pairs_tested: usize,
    pub checks: Vec<AxiomCheck>,
    pub all_passed: bool,
}

/// Exactly verify, over Q(q), the Hopf axioms on all four generators plus
/// `trials` seeded random elements of ladder degree at most `max_degree`:
/// coassociativity, both counit laws, both antipode laws, and the
/// (anti-)homomorphism properties of the three structure maps on element
/// pairs. Every check is a structural identity; a failure reports the
/// offending element.
pub fn verify_hopf_axioms(max_degree: u32, trials: usize, seed: u64) -> HopfReport {
    assert!(max_degree <= 6, "combinatorial growth beyond degree 6");
    let rules = GeneratorCoproducts::standard();
    let mut rng = SplitMix64::new(seed);

    let mut elements = vec![
        PbwElement::s_plus(),
        PbwElement::s_minus(),
        PbwElement::k(),
        PbwElement::k_inv(),
    ];
    for _ in 0..trials {
        elements.push(crate::rng::random_element(&mut rng, max_degree));
    }

    let mut checks = Vec::new();

    let mut coassoc = AxiomCheck::pass("coassociativity");
    let mut counit_l = AxiomCheck::pass("counit law (left)");
    let mut counit_r = AxiomCheck::pass("counit law (right)");
    let mut antipode_l = AxiomCheck::pass("antipode law (left)");
    let mut antipode_r = AxiomCheck::pass("antipode law (right)");
    for x in &elements {
        if coassoc.passed && !coassociativity_residual(&rules, x).is_zero() {
            coassoc = AxiomCheck::fail("coassociativity", x.to_string());
        }
        let (cl, cr) = counit_residuals(&rules, x);
        if counit_l.passed && !cl.is_zero() {
            counit_l = AxiomCheck::fail("counit law (left)", x.to_string());
        }
        if counit_r.passed && !cr.is_zero() {
            counit_r = AxiomCheck::fail("counit law (right)", x.to_string());
        }
        let (al, ar) = antipode_residuals(&rules, x);
        if antipode_l.passed && !al.is_zero() {
            antipode_l = AxiomCheck::fail("antipode law (left)", x.to_string());
        }
        if antipode_r.passed && !ar.is_zero() {
            antipode_r = AxiomCheck::fail("antipode law (right)", x.to_string());
        }
    }
    checks.extend([coassoc, counit_l, counit_r, antipode_l, antipode_r]);

    // Homomorphism properties on consecutive pairs.
    let mut delta_hom = AxiomCheck::pass("coproduct is an algebra homomorphism");
    let mut eps_hom = AxiomCheck::pass("counit is an algebra homomorphism");
    let mut antipode_antihom = AxiomCheck::pass("antipode is an anti-homomorphism");
    let mut pairs = 0;
    for pair in elements.windows(2) {
        let (x, y) = (&pair[0], &pair[1]);
        pairs += 1;
        let xy = pbw_multiply(x, y);
        if delta_hom.passed {
            let lhs = coproduct_with(&rules, &xy);
            let rhs = &coproduct_with(&rules, x) * &coproduct_with(&rules, y);
            if !(&lhs - &rhs).is_zero() {
                delta_hom = AxiomCheck::fail(
                    "coproduct is an algebra homomorphism",
                    format!("x = {x}, y = {y}"),
                );
            }
        }
        if eps_hom.passed && !(&xy.counit() - &(&x.counit() * &y.counit())).is_zero() {
            eps_hom = AxiomCheck::fail(
                "counit is an algebra homomorphism",
                format!("x = {x}, y = {y}"),
            );
        }
        if antipode_antihom.passed {
            let lhs = xy.antipode();
            let rhs = pbw_multiply(&y.antipode(), &x.antipode());
            if !(&lhs - &rhs).is_zero() {
                antipode_antihom = AxiomCheck::fail(
                    "antipode is an anti-homomorphism",
                    format!("x = {x}, y = {y}"),
                );
            }
        }
    }
    checks.extend([delta_hom, eps_hom, antipode_antihom]);

    let all_passed = checks.iter().all(|c| c.passed);
    HopfReport {
        elements_tested: elements.len(),
        pairs_tested: pairs,
        checks,
        all_passed,
    }
}
