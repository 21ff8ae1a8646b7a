//! End-to-end values for the three-magnon sector of the seven-site ring.

use bethe_core::algebraic_bethe::{
    build_state, build_state_reduced, eigen_residuals, qubit_density_matrices,
};
use bethe_core::inverse_bethe::{
    compute_riggings, qubit_seed, solve_bethe_newton, solve_qubit_phases, verify_bethe_system,
};
use bethe_core::Complex64;

#[test]
fn string_parameters() {
    let sol = solve_qubit_phases().unwrap();
    let s = sol.spectral[0].params();
    let real = s.iter().find(|z| z.im.abs() < 1e-12).unwrap();
    assert!((real.re + 0.21990357430657).abs() < 1e-12);
    let upper = s.iter().find(|z| z.im > 0.0).unwrap();
    assert!((upper - Complex64::new(0.4327003993372, 0.5030656947652)).norm() < 1e-12);
}

#[test]
fn u_factor_has_sqrt15_constant() {
    let sol = solve_qubit_phases().unwrap();
    let u1 = &sol.u[0];
    assert!((u1.coeff(0).re - 3.0 / (8.0 * 15f64.sqrt())).abs() < 1e-12);
    assert!((u1.coeff(1).re - 0.25).abs() < 1e-12);
    assert!((u1.coeff(2).re + 5.0 / (2.0 * 15f64.sqrt())).abs() < 1e-12);
}

#[test]
fn density_off_diagonal_uses_sqrt15() {
    let report = qubit_density_matrices().unwrap();
    let b = report.rho[0].matrix[(0, 3)];
    assert!((b - Complex64::new(-3.0, 15f64.sqrt()) / 30.0).norm() < 1e-12);
    let c = report.rho[0].matrix[(3, 4)];
    assert!((c - Complex64::new(-1.0, 15f64.sqrt()) / 10.0).norm() < 1e-12);
}

#[test]
fn reduced_state_matches_direct_state() {
    let sol = solve_qubit_phases().unwrap();
    let params = sol.spectral[0].params();
    let direct = build_state(params, 7).unwrap();
    let reduced = build_state_reduced(params, 7, &sol.u[0]).unwrap();
    let scale = direct.norm();
    assert!((&direct - &reduced).norm() < 1e-10 * scale);
    let (h, s2) = eigen_residuals(&reduced, 7, -5.0, 0.5).unwrap();
    assert!(h < 1e-10 && s2 < 1e-10);
}

#[test]
fn newton_recovers_the_radical_solution() {
    let newton = solve_bethe_newton(7, 3, 0, &qubit_seed(), 1e-12).unwrap();
    assert!(newton.relative_residual < 1e-10);
    let sol = solve_qubit_phases().unwrap();
    let mut found: Vec<Complex64> = newton.spectral.params().to_vec();
    for target in sol
        .spectral
        .iter()
        .find(|s| {
            s.params()
                .iter()
                .all(|z| found.iter().any(|w| (w - z).norm() < 1e-8))
        })
        .expect("Newton landed on a qubit state")
        .params()
    {
        let i = found
            .iter()
            .position(|w| (w - target).norm() < 1e-8)
            .unwrap();
        found.remove(i);
    }
    assert!(found.is_empty());
    let res = verify_bethe_system(&newton.phases, 7).unwrap();
    assert!(res.max_bethe() < 1e-9);
    let cfg = compute_riggings(&newton.phases, 7).unwrap();
    assert_eq!(cfg.partition(), vec![2, 1]);
}
