//! Top-level acceptance gate. Each test certifies one numbered criterion and
//! prints a single `ACCEPT cNN PASS/FAIL` line (visible with
//! `cargo test -- --nocapture`); the assertions carry the same condition.
//! Criteria c01..c09 drive the library suites directly with the default run
//! configuration; c10 runs the installed binary twice and compares bytes.

use diracsv::report::CheckReport;
use diracsv::suites::{run_suite, RunConfig};
use std::process::Command;
use std::time::Instant;

fn gate(label: &str, passed: bool, detail: String) {
    let tag = if passed { "PASS" } else { "FAIL" };
    println!("ACCEPT {} {} - {}", label, tag, detail);
    assert!(passed, "{} - {}", label, detail);
}

fn suite(name: &str) -> Vec<CheckReport> {
    run_suite(name, &RunConfig::default()).expect("known suite")
}

fn find<'r>(reports: &'r [CheckReport], name: &str) -> &'r CheckReport {
    reports
        .iter()
        .find(|r| r.name == name)
        .unwrap_or_else(|| panic!("missing check {}", name))
}

#[test]
fn c01_clifford_identities_under_1e12_within_one_second() {
    let t0 = Instant::now();
    let reports = suite("clifford");
    let elapsed = t0.elapsed().as_secs_f64();
    let worst = reports.iter().map(|r| r.residual).fold(0.0f64, f64::max);
    let ok = reports.iter().all(|r| r.passed && r.residual < 1e-12) && elapsed < 1.0;
    gate(
        "c01",
        ok,
        format!(
            "clifford algebra identities: worst residual {:.3e} (< 1e-12) in {:.3} s (< 1 s)",
            worst, elapsed
        ),
    );
}

#[test]
fn c02_lorentz_pairing_and_current_transport_within_five_seconds() {
    let t0 = Instant::now();
    let reports = suite("lorentz");
    let elapsed = t0.elapsed().as_secs_f64();
    let finite = find(&reports, "pairing_finite_boosts_2d");
    let infinitesimal = find(&reports, "pairing_infinitesimal_4d");
    let current = find(&reports, "current_transforms_both_ways");
    let ok = finite.passed
        && finite.residual < 1e-10
        && infinitesimal.passed
        && infinitesimal.residual < 10.0
        && current.passed
        && current.residual < 1e-12
        && elapsed < 5.0;
    gate(
        "c02",
        ok,
        format!(
            "matrix/spinor pairing: finite {:.3e} (< 1e-10), infinitesimal ratio {:.3e} (< 10), current {:.3e} (< 1e-12), {:.3} s (< 5 s)",
            finite.residual, infinitesimal.residual, current.residual, elapsed
        ),
    );
}

#[test]
fn c03_wave_operator_solves_first_order_system_at_second_order() {
    let reports = suite("lorentz");
    let analytic = find(&reports, "wave_to_solution_analytic");
    let fd = find(&reports, "wave_to_solution_fd_order");
    let ok = analytic.passed && analytic.residual < 1e-10 && fd.passed && fd.residual < 0.1;
    gate(
        "c03",
        ok,
        format!(
            "operator output: analytic residual {:.3e} (< 1e-10), slope gap {:.3e} (< 0.1); {}",
            analytic.residual, fd.residual, fd.notes
        ),
    );
}

#[test]
fn c04_two_dimensional_density_chain_holds_pointwise() {
    let reports = suite("dirac2d");
    let chain = find(&reports, "lagrangian_chain_pointwise");
    let ok = chain.passed && chain.residual < 1e-8 && chain.notes.contains("pointwise");
    gate(
        "c04",
        ok,
        format!(
            "four density forms agree pointwise: worst {:.3e} (< 1e-8); {}",
            chain.residual, chain.notes
        ),
    );
}

#[test]
fn c05_two_dimensional_roundtrips_invert() {
    let reports = suite("dirac2d");
    let params = find(&reports, "roundtrip_params_observables");
    let q = find(&reports, "roundtrip_current_q");
    let ok = params.passed && params.residual < 1e-10 && q.passed && q.residual < 1e-10;
    gate(
        "c05",
        ok,
        format!(
            "500-sample round trips: parametrization {:.3e}, current/unit-combination {:.3e} (both < 1e-10)",
            params.residual, q.residual
        ),
    );
}

#[test]
fn c06_four_dimensional_identities_and_roundtrips() {
    let reports = suite("dirac4d");
    let ids = find(&reports, "spin_identities");
    let spin = find(&reports, "roundtrip_spin_direction");
    let rap = find(&reports, "roundtrip_amplitude_rapidity");
    let aux = find(&reports, "auxiliary_normalization");
    let ok = ids.passed
        && ids.residual < 1e-12
        && spin.passed
        && spin.residual < 1e-10
        && rap.passed
        && rap.residual < 1e-10
        && aux.passed
        && aux.residual < 1e-12;
    gate(
        "c06",
        ok,
        format!(
            "bilinear identities {:.3e} (< 1e-12 rel, 1000 spinors); round trips {:.3e} / {:.3e} (< 1e-10); normalizations {:.3e} (< 1e-12)",
            ids.residual, spin.residual, rap.residual, aux.residual
        ),
    );
}

#[test]
fn c07_four_dimensional_action_equality_with_axis_sweep() {
    let reports = suite("dirac4d");
    let action = find(&reports, "action_equality");
    let sweep = find(&reports, "axis_sweep");
    let ok = action.passed
        && action.residual < 1e-6
        && sweep.passed
        && sweep.notes.matches('/').count() == 4;
    gate(
        "c07",
        ok,
        format!(
            "grid-summed equality: relative gap {:.3e} (< 1e-6, 5 configurations); axis sweep {:.3e} with {}",
            action.residual, sweep.residual, sweep.notes
        ),
    );
}

#[test]
fn c08_covariance_with_and_without_transporting_the_constants() {
    let two = suite("dirac2d");
    let four = suite("dirac4d");
    let t2 = find(&two, "covariance_transformed_frame");
    let f2 = find(&two, "covariance_fixed_frame_deviation");
    let t4 = find(&four, "covariance_transformed_frame");
    let f4 = find(&four, "covariance_fixed_frame_deviation");
    let ok = t2.passed
        && t2.residual < 1e-6
        && t4.passed
        && t4.residual < 1e-6
        && f2.informational
        && f2.residual > 1e-6
        && f4.informational
        && f4.residual > 1e-6;
    gate(
        "c08",
        ok,
        format!(
            "transported constants: residuals {:.3e} / {:.3e} (< 1e-6); fixed constants deviate by {:.3e} / {:.3e} (informational)",
            t2.residual, t4.residual, f2.residual, f4.residual
        ),
    );
}

#[test]
fn c09_particle_reduction_frame_trip_and_fixed_covector_probe() {
    let reports = suite("particle");
    let reduction = find(&reports, "reduction_matches_newtonian");
    let trip = find(&reports, "frame_round_trip");
    let fixed = find(&reports, "fixed_covector_deviation");
    let ok = reduction.passed
        && reduction.residual < 1.0
        && trip.passed
        && fixed.informational
        && fixed.residual > 1e-6;
    gate(
        "c09",
        ok,
        format!(
            "rest-gauge reduction within 10x integrator estimate across 5 fields (ratio {:.3e}); frame round trip {:.3e}; fixed covector deviates by {:.3e}",
            reduction.residual, trip.residual, fixed.residual
        ),
    );
}

#[test]
fn c10_json_output_is_byte_identical_across_runs() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_verify"))
            .args(["--suite", "all", "--seed", "7", "--format", "json"])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    let ok = first.status.success()
        && second.status.success()
        && !first.stdout.is_empty()
        && first.stdout == second.stdout;
    gate(
        "c10",
        ok,
        format!(
            "two identical-seed runs produced {} identical bytes",
            first.stdout.len()
        ),
    );
}
