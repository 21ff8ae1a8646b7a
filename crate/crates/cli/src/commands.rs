//! The four subcommands.

use bethe_core::algebraic_bethe::{build_state, eigen_residuals, qubit_density_matrices};
use bethe_core::checks::run_all;
use bethe_core::heisenberg::{eigen_decompose, hamiltonian_wavelet};
use bethe_core::inverse_bethe::{
    classify_strings, compute_riggings, solve_qubit_phases, verify_bethe_system, PhaseTuple,
    SpectralTuple,
};
use bethe_core::lattice::{fourier_project, wavelet_basis, RingSector};
use bethe_core::serde_complex::{matrix_rows, pair};
use bethe_core::Complex64;
use serde_json::json;

use crate::report::{CheckFlag, Report};
use crate::{CliError, Options};

const RESIDUAL_TOL: f64 = 1e-9;
const IDENTITY_TOL: f64 = 1e-10;
const STATE_TOL: f64 = 1e-8;

fn pairs(v: &[Complex64]) -> Vec<[f64; 2]> {
    v.iter().map(|z| pair(*z)).collect()
}

fn sector(n: usize, r: usize, k: i64) -> Result<RingSector, CliError> {
    RingSector::new(n, r, k).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn spectrum(opts: &Options) -> Result<Report, CliError> {
    let (n, r, k) = (
        opts.n.unwrap_or(7),
        opts.r.unwrap_or(3),
        opts.k.unwrap_or(0),
    );
    let s = sector(n, r, k)?;
    let mut report = Report::new(
        "spectrum",
        json!({"n": n, "r": r, "k": s.k(), "tol": opts.tol}),
    );
    let h = hamiltonian_wavelet(s)?;
    report.result("basis", &h.labels);
    report.result("hamiltonian", matrix_rows(&h.entries));
    if let Some(exact) = h.integer_entries() {
        report.result("hamiltonian_integer", exact);
    }
    report.line(format!(
        "sector (N, r, k) = ({n}, {r}, {}), dimension {}",
        s.k(),
        h.dim()
    ));
    if h.dim() == 0 {
        report.line("empty sector".to_string());
        report.result("eigenvalues", Vec::<f64>::new());
        return Ok(report);
    }
    report.line(format!("basis {}", h.labels.join(" ")));
    for i in 0..h.dim() {
        let row: Vec<String> = (0..h.dim()).map(|j| fmt_entry(h.entries[(i, j)])).collect();
        report.line(format!("  [{}]", row.join(", ")));
    }
    let tol = opts.tol.unwrap_or(RESIDUAL_TOL);
    let eig = eigen_decompose(&h.entries, tol)?;
    match eig.characteristic.exact_i64() {
        Some(c) => {
            report.line(format!("characteristic polynomial (ascending) {c:?}"));
            report.result("characteristic_polynomial", c);
        }
        None => {
            report.line(format!(
                "characteristic polynomial {}",
                eig.characteristic.polynomial
            ));
            report.result("characteristic_polynomial", &eig.characteristic.polynomial);
        }
    }
    report.result("characteristic_exact", eig.characteristic.is_exact());
    let levels: Vec<String> = eig
        .levels
        .iter()
        .map(|l| format!("{:.10} (x{})", l.energy, l.multiplicity))
        .collect();
    report.line(format!("levels {}", levels.join(", ")));
    report.result("eigenvalues", &eig.eigenvalues);
    report.result("levels", &eig.levels);
    report.result("residuals", &eig.residuals);
    report.check(CheckFlag::at_most(
        "max ||H v - E v||",
        eig.max_residual(),
        tol,
    ));
    Ok(report)
}

fn fmt_entry(z: Complex64) -> String {
    if z.im.abs() < 1e-12 {
        format!("{:.6}", z.re)
    } else {
        format!("{:.6}{:+.6}i", z.re, z.im)
    }
}

pub fn qubit_report(opts: &Options) -> Result<Report, CliError> {
    let (n, r, k) = (
        opts.n.unwrap_or(7),
        opts.r.unwrap_or(3),
        opts.k.unwrap_or(0),
    );
    if (n, r, k) != (7, 3, 0) {
        return Err(CliError::Usage(format!(
            "qubit-report is defined for the (7, 3, 0) sector only, got ({n}, {r}, {k})"
        )));
    }
    let res_tol = opts.tol.unwrap_or(RESIDUAL_TOL);
    let id_tol = opts.tol.unwrap_or(IDENTITY_TOL);
    let mut report = Report::new(
        "qubit-report",
        json!({"n": n, "r": r, "k": k, "tol": opts.tol}),
    );
    let sol = solve_qubit_phases()?;
    report.result("f", &sol.f);
    report.result("g", &sol.g);
    report.result("roots", pairs(&sol.roots()));
    report.result("phase_triples", &sol.states);
    report.result("spectral_triples", &sol.spectral);
    report.result("u", &sol.u);
    report.line(format!("f(t) = {}", sol.f));
    report.line(format!("g(x) = {}", sol.g));

    let strings = classify_strings(&sol.spectral[0], 1e-9);
    let one = strings.string_of_length(1);
    let two = strings.string_of_length(2);
    if let (Some(one), Some(two)) = (one, two) {
        report.result(
            "string_parameters",
            json!({"lambda0": one.center, "mu0": two.center, "m": two.half_width}),
        );
        report.line(format!(
            "lambda_0 = {:.12}, mu_0 = {:.12}, m = {:.12}",
            one.center, two.center, two.half_width
        ));
    }

    let mut riggings = Vec::new();
    for (v, state) in sol.states.iter().enumerate() {
        let res = verify_bethe_system(state, n)?;
        report.check(CheckFlag::at_most(
            format!("state {}: |abc - 1|", v + 1),
            res.quasimomentum_residual,
            id_tol,
        ));
        report.check(CheckFlag::at_most(
            format!("state {}: energy sum", v + 1),
            res.energy_residual(-5.0),
            res_tol,
        ));
        report.check(CheckFlag::at_most(
            format!("state {}: Bethe residual", v + 1),
            res.max_bethe(),
            res_tol,
        ));
        let cfg = compute_riggings(state, n)?;
        let rig = cfg.riggings().unwrap_or_default();
        report.line(format!(
            "state {}: phases {:?}, riggings {:?}",
            v + 1,
            pairs(state.phases()),
            rig
        ));
        riggings.push(rig);
    }
    report.result("riggings", &riggings);

    let dens = qubit_density_matrices()?;
    report.result("basis", &dens.rho[0].labels);
    report.result(
        "rho",
        [
            matrix_rows(&dens.rho[0].matrix),
            matrix_rows(&dens.rho[1].matrix),
        ],
    );
    for v in 0..2 {
        let tag = v + 1;
        report.check(CheckFlag::at_most(
            format!("state {tag}: ||H v + 5 v||"),
            dens.hamiltonian_residual[v],
            STATE_TOL.min(opts.tol.unwrap_or(STATE_TOL)),
        ));
        report.check(CheckFlag::at_most(
            format!("state {tag}: ||S^2 v - 3/4 v||"),
            dens.spin_residual[v],
            STATE_TOL.min(opts.tol.unwrap_or(STATE_TOL)),
        ));
    }
    report.check(CheckFlag::at_most(
        "rho_1 + rho_2 - P",
        dens.sum_rule,
        id_tol,
    ));
    report.check(CheckFlag::at_most(
        "rho_1 rho_2",
        dens.orthogonality,
        id_tol,
    ));
    report.check(CheckFlag::at_most(
        "pi rho_1 pi - rho_2",
        dens.parity_swap,
        id_tol,
    ));
    report.check(CheckFlag::at_most(
        "rho_2 - rho_1*",
        dens.conjugation,
        id_tol,
    ));
    Ok(report)
}

pub fn verify(opts: &Options) -> Result<Report, CliError> {
    let mut report = Report::new("verify-paper", json!({"tol": opts.tol}));
    let outcomes = run_all(opts.tol);
    for out in &outcomes {
        report.line(out.summary());
        if !out.passed {
            for m in out.measures.iter().filter(|m| !m.passed) {
                report.line(format!(
                    "      {}: {:.3e} (tol {:.1e})",
                    m.what, m.value, m.tolerance
                ));
            }
            for note in &out.notes {
                report.line(format!("      note: {note}"));
            }
        }
        let worst = out.worst();
        report.check(CheckFlag {
            name: format!("criterion {}: {}", out.id, out.name),
            value: worst.map_or(f64::NAN, |m| m.value),
            tolerance: worst.map_or(f64::NAN, |m| m.tolerance),
            passed: out.passed,
        });
    }
    report.result("criteria", &outcomes);
    Ok(report)
}

pub fn state(opts: &Options, params: &[Complex64]) -> Result<Report, CliError> {
    let n = opts.n.unwrap_or(7);
    let spectral =
        SpectralTuple::new(params.to_vec()).map_err(|e| CliError::Usage(e.to_string()))?;
    let r = spectral.r();
    if let Some(given) = opts.r {
        if given != r {
            return Err(CliError::Usage(format!(
                "--r {given} but {r} parameters were given"
            )));
        }
    }
    sector(n, r, 0)?;
    let tol = opts.tol.unwrap_or(STATE_TOL);
    let mut report = Report::new(
        "state",
        json!({"n": n, "params": pairs(params), "tol": opts.tol}),
    );
    let phases: PhaseTuple = spectral.to_phases()?;
    let bethe = verify_bethe_system(&phases, n)?;
    let k = bethe.quasimomentum;
    let v = build_state(params, n)?;
    if v.norm() == 0.0 {
        return Err(CliError::Compute("the B-operator product vanishes".into()));
    }
    let energy = bethe.energy;
    let spin = n as f64 / 2.0 - r as f64;
    let (h_res, s_res) = eigen_residuals(&v, n, energy.re, spin)?;
    let basis = wavelet_basis(sector(n, r, k)?)?;
    let w = fourier_project(&v, &basis)?;
    let strings = classify_strings(&spectral, 1e-9);

    report.result("sector", json!({"n": n, "r": r, "k": k}));
    report.result("phases", &phases);
    report.result("energy", pair(energy));
    report.result("bethe", &bethe);
    report.result("state_norm", v.norm());
    report.result("state", pairs(v.as_slice()));
    report.result("wavelet_basis", basis.labels());
    report.result("wavelet_projection", pairs(w.as_slice()));
    report.result("strings", &strings);
    match compute_riggings(&phases, n) {
        Ok(cfg) => report.result("riggings", cfg.riggings()),
        Err(e) => report.result("riggings_error", e.to_string()),
    }
    report.line(format!(
        "sector (N, r, k) = ({n}, {r}, {k}), |v| = {:.6e}",
        v.norm()
    ));
    report.line(format!(
        "energy sum(a + 1/a) - 2r = {:.12}{:+.12}i",
        energy.re, energy.im
    ));
    report.line(format!("wavelets {}", basis.labels().join(" ")));
    report.line(format!(
        "projection {}",
        w.iter()
            .map(|z| fmt_entry(*z))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    report.line(format!(
        "strings: partition {:?}, unclassified {:?}",
        strings.partition(),
        strings.unclassified
    ));
    report.check(CheckFlag::at_most("||H v - E v|| / ||v||", h_res, tol));
    report.check(CheckFlag::at_most(
        "||S^2 v - s(s+1) v|| / ||v||",
        s_res,
        tol,
    ));
    let outside = (&v - basis.matrix() * &w).norm() / v.norm();
    report.check(CheckFlag::at_most("||v - P_k v|| / ||v||", outside, tol));
    Ok(report)
}
