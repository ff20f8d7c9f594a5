//! Acceptance matrix. Prints one PASS/FAIL line per criterion and exits 1 if
//! any criterion fails. Run with `cargo test -p qelectric --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use qelectric::verify::{self, Report, TensorWindow};

const SEED: u64 = 0x5eed_0001;

fn both_eps(suite: &str, statement: &str, f: impl Fn(i64) -> Report) -> Report {
    Report::merge(suite, statement, vec![f(1), f(-1)])
}

type Criterion = (&'static str, Box<dyn Fn() -> Report>);

fn criteria() -> Vec<Criterion> {
    let tensor = || TensorWindow::all(4, 3);
    vec![
        (
            "Hecke quadratic and braid relations",
            Box::new(move || verify::hecke_suite(&tensor())),
        ),
        (
            "Hecke operators commute with E_i, F_i, K_λ",
            Box::new(move || verify::hecke_commute_suite(&tensor())),
        ),
        (
            "presented quantum group relations",
            Box::new(move || verify::uqg_suite(&tensor())),
        ),
        (
            "coideal relations",
            Box::new(move || {
                both_eps("coideal", "coideal relations, ε = ±1", |e| {
                    verify::coideal_suite(&tensor(), e)
                })
            }),
        ),
        (
            "Fock relations",
            Box::new(|| {
                both_eps("fock-relations", "Fock relations, ε = ±1", |e| {
                    verify::fock_relations_suite(6, 5, e)
                })
            }),
        ),
        (
            "Fock support and monomiality",
            Box::new(|| {
                both_eps("fock-support", "support, ε = ±1", |e| {
                    verify::fock_support_suite(6, e)
                })
            }),
        ),
        (
            "Fock truncation stability",
            Box::new(|| {
                both_eps("fock-stability", "stability, ε = ±1", |e| {
                    verify::fock_stability_suite(6, e)
                })
            }),
        ),
        (
            "KLR action degrees match Fock exponents",
            Box::new(|| {
                both_eps("categorification", "cross-check, ε = ±1", |e| {
                    verify::categorification_suite(5, e)
                })
            }),
        ),
        (
            "up-down tableaux dimension count",
            Box::new(|| {
                Report::merge(
                    "dimensions",
                    "levels 1 and 2",
                    vec![
                        verify::dimensions_suite(1, 6),
                        verify::dimensions_suite(2, 4),
                    ],
                )
            }),
        ),
        (
            "Grothendieck group relations on graded dimensions",
            Box::new(|| both_eps("k0", "K0 relations, ε = ±1", |e| verify::k0_suite(5, e))),
        ),
        (
            "bar involution",
            Box::new(|| both_eps("bar", "bar, ε = ±1", |e| verify::bar_suite(4, e))),
        ),
        (
            "transpose map",
            Box::new(|| both_eps("tau", "tau, ε = ±1", |e| verify::tau_suite(5, e))),
        ),
        (
            "pairing adjointness",
            Box::new(|| {
                Report::merge(
                    "adjoint",
                    "adjointness, ε = ±1",
                    vec![
                        verify::adjoint_suite(100, 4, 4, SEED, 1),
                        verify::adjoint_suite(100, 4, 4, SEED + 1, -1),
                    ],
                )
            }),
        ),
        (
            "degree well-definedness",
            Box::new(|| verify::degree_suite(500, 6, SEED)),
        ),
        (
            "b_ij pairing identities",
            Box::new(|| verify::beta_b_suite(5)),
        ),
        (
            "level-2 Fock space",
            Box::new(|| {
                both_eps("multi-fock", "level 2, ε = ±1", |e| {
                    verify::multi_fock_suite(3, e)
                })
            }),
        ),
    ]
}

fn main() -> ExitCode {
    let mut all_ok = true;
    for (n, (name, run)) in criteria().into_iter().enumerate() {
        let start = Instant::now();
        let rep = run();
        let ok = rep.passed();
        all_ok &= ok;
        println!(
            "{} {:>2} {name}: {} checked, {} failed ({:.1}s)",
            if ok { "PASS" } else { "FAIL" },
            n + 1,
            rep.checked,
            rep.failed,
            start.elapsed().as_secs_f64()
        );
        for c in rep.counterexamples.iter().take(5) {
            println!("       {} at {}: {}", c.relation, c.input, c.detail);
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
