//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with the measured value against the pinned threshold.
//!
//! Criterion 7's translation checks include two configurations that measure
//! a known analytical defect of the claimed translation rule for boost
//! factors (see the suite notes printed on failure); they are asserted at
//! the stated threshold regardless, so this suite reports the defect as an
//! honest failure rather than hiding it.

use num_complex::Complex64;
use std::f64::consts::PI;
use std::process::Command;
use std::time::Instant;

use su11::angle::angle_distance;
use su11::decomp::{cartan, iwasawa, recompose_cartan, recompose_iwasawa};
use su11::group::{cayley_to_su11, cayley_to_su11_with_tolerance, CirclePoint, GroupElement};
use su11::rng::{random_group_element, random_unimodular, SplitMix64};

const SEED: u64 = 42;

fn line(criterion: &str, pass: bool, detail: &str) {
    println!(
        "[{criterion}] {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
}

fn element_distance(a: &GroupElement, b: &GroupElement) -> f64 {
    ((a.alpha() - b.alpha()).norm_sqr() + (a.beta() - b.beta()).norm_sqr()).sqrt()
}

#[test]
fn criterion_1_cayley_homomorphism() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(SEED);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let m1 = random_unimodular(&mut rng, 1.0);
        let m2 = random_unimodular(&mut rng, 1.0);
        let lhs = cayley_to_su11_with_tolerance(&(m1 * m2), 1e-9).unwrap();
        let rhs = cayley_to_su11(&m1).unwrap() * cayley_to_su11(&m2).unwrap();
        worst = worst.max(element_distance(&lhs, &rhs));
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = worst < 1e-12 && elapsed < 1.0;
    line(
        "criterion 1: Cayley homomorphism",
        pass,
        &format!("max defect {worst:.3e} (< 1e-12), {elapsed:.2} s (< 1 s)"),
    );
    assert!(pass);
}

#[test]
fn criterion_2_decomposition_round_trips() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(SEED + 1);
    let mut worst_iw = 0.0f64;
    let mut worst_ct = 0.0f64;
    let mut worst_coord = 0.0f64;
    let mut count = 0;
    while count < 1000 {
        let g = random_group_element(&mut rng, 3.0, 3.0);
        if g.alpha().norm() > 4.0f64.cosh() {
            continue;
        }
        count += 1;
        let fi = iwasawa(&g).unwrap();
        worst_iw = worst_iw.max(element_distance(&recompose_iwasawa(&fi), &g));
        let fc = cartan(&g);
        worst_ct = worst_ct.max(element_distance(&recompose_cartan(&fc).unwrap(), &g));

        // Closed coordinate formulas.
        let s = g.alpha() + g.beta();
        let half_angle = Complex64::from_polar(1.0, fi.theta / 2.0);
        worst_coord = worst_coord.max((half_angle - s / s.norm()).norm());
        worst_coord = worst_coord.max(((fc.t / 2.0).sinh() - g.beta().norm()).abs());
        worst_coord =
            worst_coord.max(((fc.t / 2.0).exp() - (g.alpha().norm() + g.beta().norm())).abs());
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = worst_iw < 1e-10 && worst_ct < 1e-10 && worst_coord < 1e-12 && elapsed < 1.0;
    line(
        "criterion 2: decomposition round trips",
        pass,
        &format!(
            "recomposition {worst_iw:.3e}/{worst_ct:.3e} (< 1e-10), coordinates {worst_coord:.3e} (< 1e-12), {elapsed:.2} s (< 1 s)"
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_3_cocycle_identities() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(SEED + 2);
    let mut worst_u = 0.0f64;
    let mut worst_t = 0.0f64;
    for _ in 0..1000 {
        let g = random_group_element(&mut rng, 1.5, 1.5);
        let h = random_group_element(&mut rng, 1.5, 1.5);
        let z = CirclePoint::new(rng.range(0.0, 2.0 * PI));
        let hu = h.mobius(z).unwrap();
        worst_u = worst_u.max(
            ((g * h).cocycle_u(z).unwrap() - g.cocycle_u(hu).unwrap() * h.cocycle_u(z).unwrap())
                .norm(),
        );
        worst_t = worst_t.max(
            ((g * h).cocycle_t(z).unwrap() - (g.cocycle_t(hu).unwrap() + h.cocycle_t(z).unwrap()))
                .abs(),
        );
    }
    // Central finite difference of the boundary action.
    let mut worst_fd = 0.0f64;
    let h_step = 1e-4;
    for _ in 0..300 {
        let g = random_group_element(&mut rng, 1.5, 1.5);
        let th = rng.range(0.0, 2.0 * PI);
        let fwd = g.mobius(CirclePoint::new(th + h_step)).unwrap().theta();
        let bwd = g.mobius(CirclePoint::new(th - h_step)).unwrap().theta();
        let fd = angle_distance(fwd, bwd, 2.0 * PI) / (2.0 * h_step);
        worst_fd = worst_fd.max((fd - g.action_derivative(th)).abs());
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = worst_u < 1e-12 && worst_t < 1e-12 && worst_fd < 1e-6 && elapsed < 1.0;
    line(
        "criterion 3: cocycle identities",
        pass,
        &format!(
            "multiplicative {worst_u:.3e}, additive {worst_t:.3e} (< 1e-12), derivative {worst_fd:.3e} (< 1e-6), {elapsed:.2} s (< 1 s)"
        ),
    );
    assert!(pass);
}

mod common {
    pub fn config() -> su11_cli::config::Config {
        su11_cli::config::Config::default()
    }
}

use su11_cli::suites;

fn assert_suite(criterion: &str, checks: &[suites::CheckLine], budget_s: f64, elapsed: f64) {
    let mut pass = elapsed < budget_s;
    for c in checks {
        line(
            &format!("{criterion} / {}", c.name),
            c.pass,
            &format!(
                "measured {:.3e} vs threshold {:.1e}{}",
                c.measured,
                c.threshold,
                c.note
                    .as_deref()
                    .map(|n| format!(" ({n})"))
                    .unwrap_or_default()
            ),
        );
        pass &= c.pass;
    }
    line(criterion, pass, &format!("{elapsed:.2} s (< {budget_s} s)"));
    assert!(pass, "{criterion} failed; see the lines above");
}

#[test]
fn criterion_4_haar_left_invariance() {
    let start = Instant::now();
    let checks = suites::haar_suite(&common::config(), SEED);
    let elapsed = start.elapsed().as_secs_f64();
    assert_suite("criterion 4: Haar invariance", &checks, 60.0, elapsed);
}

#[test]
fn criterion_5_principal_series() {
    let start = Instant::now();
    let checks = suites::rep_suite(&common::config(), SEED);
    let elapsed = start.elapsed().as_secs_f64();
    assert_suite("criterion 5: principal series", &checks, 30.0, elapsed);
}

#[test]
fn criterion_6_hopf_suite() {
    let start = Instant::now();
    let checks = suites::hopf_suite(4, 100, SEED);
    let elapsed = start.elapsed().as_secs_f64();
    assert_suite("criterion 6: Hopf structure", &checks, 120.0, elapsed);
}

#[test]
fn criterion_7_spherical_transform_suite() {
    let start = Instant::now();
    let checks: Vec<_> = suites::transform_suite(&common::config(), SEED)
        .into_iter()
        .filter(|c| !c.name.starts_with("translation_"))
        .collect();
    let elapsed = start.elapsed().as_secs_f64();
    assert_suite("criterion 7: spherical transforms", &checks, 120.0, elapsed);
}

/// The translation-rule items of criterion 7, asserted at the stated 1e-3
/// threshold for the fixed omega set. The rotation entry holds exactly; the
/// two boost entries measure a genuine defect of the claimed factor
/// exp(-in(alpha + d_s.beta) - s/2) (at n = 0, mu = 0 the transform is the
/// plain left-invariant Haar integral, forcing factor 1, not e^{-s/2}), so
/// they fail at any quadrature resolution. The failure below is the honest
/// outcome; the printed lines carry the measured against predicted factors.
#[test]
fn criterion_7_translation_property() {
    let start = Instant::now();
    let checks: Vec<_> = suites::transform_suite(&common::config(), SEED)
        .into_iter()
        .filter(|c| c.name.starts_with("translation_"))
        .collect();
    let elapsed = start.elapsed().as_secs_f64();
    assert_suite("criterion 7: translation property", &checks, 120.0, elapsed);
}

#[test]
fn criterion_8_deterministic_reports() {
    let start = Instant::now();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_su11"))
            .args(["suite", "all", "--seed", "42", "--no-timestamp"])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    let identical = first.stdout == second.stdout && !first.stdout.is_empty();

    // With the timestamp left in, the field must be present.
    let stamped = Command::new(env!("CARGO_BIN_EXE_su11"))
        .args(["suite", "hopf", "--seed", "42"])
        .output()
        .expect("binary runs");
    let has_timestamp = String::from_utf8_lossy(&stamped.stdout).contains("\"timestamp\"");

    let elapsed = start.elapsed().as_secs_f64();
    let pass = identical && has_timestamp;
    line(
        "criterion 8: determinism",
        pass,
        &format!(
            "byte-identical reports: {identical}, timestamp present without --no-timestamp: {has_timestamp}, {elapsed:.1} s"
        ),
    );
    assert!(pass);
}
