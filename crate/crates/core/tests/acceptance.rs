//! One line per acceptance criterion; exits nonzero if any criterion fails.

use std::time::Instant;

use raag_depth::depth::ExactCohomology;
use raag_depth::verify::{self, CheckOutcome, ToggledCohomology};

fn line(n: usize, name: &str, outcome: &CheckOutcome, started: Instant) -> bool {
    let status = if outcome.passed { "PASS" } else { "FAIL" };
    println!(
        "criterion {n} [{status}] {name}: {} cases, {} ({:.1}s)",
        outcome.cases,
        outcome.summary,
        started.elapsed().as_secs_f64()
    );
    if let Some(w) = &outcome.witness {
        println!("    witness: {} {}", w.graph.as_ref().map_or(String::new(), |g| format!("{g:?}")), w.detail);
    }
    outcome.passed
}

fn negative_controls() -> CheckOutcome {
    let froberg = verify::froberg_exactness(5, 6, true);
    let cohomology = verify::method_equivalence(6, &ToggledCohomology);
    let caught = |o: &CheckOutcome| !o.passed && o.witness.as_ref().is_some_and(|w| w.graph.is_some());
    let detail = |o: &CheckOutcome| o.witness.as_ref().map_or("no witness".to_string(), |w| w.detail.clone());
    CheckOutcome {
        id: "negative-controls".into(),
        passed: caught(&froberg) && caught(&cohomology),
        cases: 2,
        summary: format!(
            "flipped Fröberg sign -> {}; toggled H̃⁰ -> {}",
            detail(&froberg),
            detail(&cohomology)
        ),
        witness: None,
    }
}

fn main() {
    let exact = ExactCohomology;
    let checks: Vec<(&str, Box<dyn Fn() -> CheckOutcome>)> = vec![
        ("method equivalence, graphs ≤ 6 vertices", Box::new(|| verify::method_equivalence(6, &exact))),
        ("worked examples", Box::new(|| verify::worked_examples(6, 2024, &exact))),
        ("star/link shift, graphs ≤ 6 vertices", Box::new(|| verify::star_link_shift(6, &exact))),
        ("Fröberg exactness, graphs ≤ 5 vertices, weights ≤ 6", Box::new(|| verify::froberg_exactness(5, 6, false))),
        ("Hilbert series agreement, graphs ≤ 5 vertices", Box::new(|| verify::hilbert_agreement(5, 8, 6))),
        ("surface groups g = 1..4", Box::new(|| verify::surface_results(&[1, 2, 3, 4], 6, &[1, 2], 3))),
        ("nilpotency, graphs ≤ 6 vertices, weights ≤ 6", Box::new(|| verify::nilpotency(6, 6))),
        ("negative controls", Box::new(negative_controls)),
    ];
    let mut all = true;
    for (i, (name, run)) in checks.iter().enumerate() {
        let started = Instant::now();
        all &= line(i + 1, name, &run(), started);
    }
    if !all {
        eprintln!("some acceptance criteria failed");
        std::process::exit(1);
    }
}
