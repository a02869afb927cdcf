//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! All checks are exact (zero tolerance): polynomial identities compared
//! term by term, rational functions by cross-multiplication. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines and
//! timings.

use std::time::Instant;

use shalika_core::verify::{
    check_collapse_fibers, check_cross_identity, check_divisibility, check_gamma_independence,
    check_hecke_independence, check_length_parity, check_poincare_product, check_t_zero_degeneration,
    check_vanishing, check_whittaker_proportionality,
};

fn criterion(index: usize, label: &str, outcome: Result<String, String>) {
    let (status, detail) = match &outcome {
        Ok(d) => ("PASS", d.clone()),
        Err(d) => ("FAIL", d.clone()),
    };
    println!("criterion {index} [{status}] {label}: {detail}");
    if outcome.is_err() {
        panic!("criterion {index} failed: {detail}");
    }
}

#[test]
fn criterion_1_three_path_agreement() {
    let start = Instant::now();
    let gamma = check_gamma_independence(2, 3);
    let hecke = check_hecke_independence(2, 3);
    let outcome = gamma.and_then(|g| hecke.map(|h| format!("{g}; {h}")));
    criterion(
        1,
        "three-path agreement, n ≤ 2, λ_1 ≤ 3, exact",
        outcome.map(|d| format!("{d} ({:.1}s)", start.elapsed().as_secs_f64())),
    );
}

#[test]
fn criterion_2_closed_vs_gamma_rank_three() {
    let start = Instant::now();
    let outcome = check_gamma_independence(3, 2);
    criterion(
        2,
        "closed vs Γ-sum at n = 3, λ_1 ≤ 2, exact",
        outcome.map(|d| format!("{d} ({:.1}s)", start.elapsed().as_secs_f64())),
    );
}

#[test]
fn criterion_3_casselman_identity_up_to_sign() {
    let start = Instant::now();
    let outcome = check_cross_identity(2, 3).map(|signs| {
        format!(
            "assembled expression = closed/normalization with per-rank signs {signs:?} ({:.1}s)",
            start.elapsed().as_secs_f64()
        )
    });
    criterion(3, "Casselman-basis identity, n ≤ 2, λ_1 ≤ 3", outcome);
}

#[test]
fn criterion_4_t_zero_degeneration() {
    let outcome = check_t_zero_degeneration(3, 3);
    criterion(
        4,
        "t = 0 degeneration to δ^{1/2}·char·𝒜(e^ρ), n ≤ 3, λ_1 ≤ 3",
        outcome,
    );
}

#[test]
fn criterion_5_weyl_denominator_divisibility() {
    let outcome = check_divisibility(3, 3);
    criterion(
        5,
        "Weyl-denominator divisibility with Γ-invariant integral quotient, n ≤ 3, λ_1 ≤ 3",
        outcome,
    );
}

#[test]
fn criterion_6_vanishing_locus() {
    let outcome = check_vanishing(3);
    criterion(
        6,
        "Ω(g_λ) = 0 for λ_n < 0, n ≤ 3, entries in [−2, 2]",
        outcome,
    );
}

#[test]
fn criterion_7_whittaker_specialization() {
    let outcome = check_whittaker_proportionality(5);
    criterion(7, "GL(2) Whittaker specialization, λ ≤ 5", outcome);
}

#[test]
fn criterion_8_group_theory_invariants() {
    let start = Instant::now();
    let outcome = check_length_parity(4)
        .and_then(|a| check_poincare_product(3).map(|b| format!("{a}; {b}")))
        .and_then(|ab| check_collapse_fibers(6).map(|c| format!("{ab}; {c}")));
    criterion(
        8,
        "length/parity (n ≤ 4), Poincaré product (2n ≤ 6), collapse fibers (n ≤ 6)",
        outcome.map(|d| format!("{d} ({:.1}s)", start.elapsed().as_secs_f64())),
    );
}
