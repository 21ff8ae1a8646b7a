//! Reference checks for the seven-site ring.
//!
//! Each check compares computed quantities against reference
//! values at a pinned tolerance and records every comparison it makes. A
//! global tolerance override replaces every numeric tolerance except lower
//! bounds and exact (integer or set) comparisons.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::algebraic_bethe::{
    b_block, commutator_norm, max_abs, qubit_density_matrices, two_magnon_parity_check,
};
use crate::heisenberg::{degenerate_projector, eigen_decompose, hamiltonian_wavelet};
use crate::inverse_bethe::{
    classify_strings, compute_riggings, heptagon_qubit_polynomial, solve_qubit_phases,
    verify_bethe_system, QubitSolution,
};
use crate::lattice::{parity_matrix, wavelet_basis, RingSector};
use crate::polynomials::{palindromic_fold, reduce_mod_cubic, ComplexPolynomial};
use crate::{CMatrix, Complex64, Result};

/// Identifiers of the checks, in order.
pub const CHECK_IDS: [u8; 14] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14];

const SEED: u64 = 0x5eed_0007;

/// Wavelet Hamiltonian of the `(7, 3, 0)` sector.
pub const REFERENCE_HAMILTONIAN: [[i64; 5]; 5] = [
    [-2, 0, 0, 1, 1],
    [0, -4, 2, 1, 1],
    [0, 2, -4, 1, 1],
    [1, 1, 1, -4, 1],
    [1, 1, 1, 1, -4],
];

/// Numerators of the `E = -5` projector over 15.
pub const REFERENCE_PROJECTOR: [[i64; 5]; 5] = [
    [2, 2, 2, -3, -3],
    [2, 2, 2, -3, -3],
    [2, 2, 2, -3, -3],
    [-3, -3, -3, 12, -3],
    [-3, -3, -3, -3, 12],
];

pub const REFERENCE_PARITY: [[i64; 5]; 5] = [
    [1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1],
    [0, 0, 0, 1, 0],
];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn integer_matrix(m: &[[i64; 5]; 5], scale: f64) -> CMatrix {
    CMatrix::from_fn(5, 5, |i, j| c(m[i][j] as f64 / scale, 0.0))
}

/// Printed coefficients of the cubic `w_1(t)`, lowest degree first.
pub fn reference_w1() -> ComplexPolynomial {
    let s = 15f64.sqrt() / 2.0;
    ComplexPolynomial::new(vec![c(-1.0, 0.0), c(0.5, -s), c(-0.5, -s), c(1.0, 0.0)])
}

/// Printed coefficients of `u_1(lambda)`, lowest degree first.
pub fn reference_u1() -> ComplexPolynomial {
    ComplexPolynomial::from_real(&[
        3.0 / (8.0 * 5f64.sqrt()),
        0.25,
        -5.0 / (2.0 * 15f64.sqrt()),
        1.0,
    ])
}

/// Printed residue of `p^3 q^3` modulo `u_1`, lowest degree first.
pub fn reference_p3q3_residue() -> ComplexPolynomial {
    let (r3, r5, r15) = (3f64.sqrt(), 5f64.sqrt(), 15f64.sqrt());
    ComplexPolynomial::from_real(&[
        7.0 / 160.0 - r3 / 24.0,
        -(r5 / 20.0 - r15 / 36.0),
        17.0 / 72.0 - r3 / 8.0,
    ])
}

/// Conjugate of a polynomial's coefficients.
fn conj_poly(p: &ComplexPolynomial) -> ComplexPolynomial {
    ComplexPolynomial::new(p.coeffs().iter().map(|z| z.conj()).collect())
}

/// `u_2(lambda) = -u_1(-lambda)`.
fn mirror(p: &ComplexPolynomial) -> ComplexPolynomial {
    ComplexPolynomial::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, z)| if (p.degree() - i) % 2 == 0 { *z } else { -z })
            .collect(),
    )
}

fn coeff_distance(a: &ComplexPolynomial, b: &ComplexPolynomial) -> f64 {
    let n = a.coeffs().len().max(b.coeffs().len());
    (0..n)
        .map(|i| (a.coeff(i) - b.coeff(i)).norm())
        .fold(0.0, f64::max)
}

/// Printed density matrix pattern for the first Bethe state.
pub fn reference_rho1(a: f64, b: Complex64, cc: Complex64) -> CMatrix {
    let a = c(a, 0.0);
    let mut m = CMatrix::zeros(5, 5);
    for i in 0..3 {
        for j in 0..3 {
            m[(i, j)] = a;
        }
        m[(i, 3)] = b;
        m[(i, 4)] = b.conj();
        m[(3, i)] = b.conj();
        m[(4, i)] = b;
    }
    m[(3, 3)] = a * 6.0;
    m[(4, 4)] = a * 6.0;
    m[(3, 4)] = cc;
    m[(4, 3)] = cc.conj();
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    /// `value <= tolerance`.
    AtMost,
    /// `value > tolerance`.
    Exceeds,
    /// Exact agreement; `value` is 0 or 1.
    Exact,
}

/// One recorded comparison.
#[derive(Debug, Clone, Serialize)]
pub struct Measure {
    pub what: String,
    pub value: f64,
    pub tolerance: f64,
    pub comparison: Comparison,
    pub passed: bool,
}

impl Measure {
    fn badness(&self) -> f64 {
        match self.comparison {
            Comparison::AtMost if self.tolerance > 0.0 => self.value / self.tolerance,
            _ if self.passed => 0.0,
            _ => f64::INFINITY,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub measures: Vec<Measure>,
    pub notes: Vec<String>,
}

impl CheckOutcome {
    /// The measure closest to (or furthest past) its tolerance.
    pub fn worst(&self) -> Option<&Measure> {
        self.measures
            .iter()
            .max_by(|a, b| a.badness().total_cmp(&b.badness()))
    }

    /// One-line summary.
    pub fn summary(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        match self.worst() {
            Some(m) => format!(
                "criterion {:>2} {status}  {}  [{}: {:.3e} vs {:.1e}]",
                self.id, self.name, m.what, m.value, m.tolerance
            ),
            None => format!("criterion {:>2} {status}  {}", self.id, self.name),
        }
    }
}

struct Recorder {
    override_tol: Option<f64>,
    measures: Vec<Measure>,
    notes: Vec<String>,
}

impl Recorder {
    fn new(override_tol: Option<f64>) -> Self {
        Self {
            override_tol,
            measures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn at_most(&mut self, what: impl Into<String>, value: f64, tol: f64) {
        let tolerance = self.override_tol.unwrap_or(tol);
        self.measures.push(Measure {
            what: what.into(),
            value,
            tolerance,
            comparison: Comparison::AtMost,
            passed: value <= tolerance,
        });
    }

    fn exceeds(&mut self, what: impl Into<String>, value: f64, bound: f64) {
        self.measures.push(Measure {
            what: what.into(),
            value,
            tolerance: bound,
            comparison: Comparison::Exceeds,
            passed: value > bound,
        });
    }

    fn exact(&mut self, what: impl Into<String>, ok: bool) {
        self.measures.push(Measure {
            what: what.into(),
            value: if ok { 0.0 } else { 1.0 },
            tolerance: 0.0,
            comparison: Comparison::Exact,
            passed: ok,
        });
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn finish(self, id: u8, name: &str) -> CheckOutcome {
        CheckOutcome {
            id,
            name: name.into(),
            passed: !self.measures.is_empty() && self.measures.iter().all(|m| m.passed),
            measures: self.measures,
            notes: self.notes,
        }
    }
}

pub fn check_name(id: u8) -> &'static str {
    match id {
        1 => "wavelet Hamiltonian of (7,3,0)",
        2 => "characteristic polynomial and spectrum",
        3 => "projector onto the E = -5 level",
        4 => "parity on the (7,3,0) wavelets",
        5 => "folded cubic and its real root",
        6 => "root geometry and the w, u factorizations",
        7 => "Bethe equations of both qubit states",
        8 => "string parameters",
        9 => "riggings of the qubit states",
        10 => "B block and B commutativity",
        11 => "qubit states are H and S^2 eigenvectors",
        12 => "density matrices",
        13 => "reduction of p^3 q^3 modulo u_1",
        14 => "two-magnon riggings and parity",
        _ => "unknown",
    }
}

/// Run one check; `override_tol` replaces the pinned tolerances.
pub fn run_check(id: u8, override_tol: Option<f64>) -> CheckOutcome {
    let mut rec = Recorder::new(override_tol);
    let result = match id {
        1 => check_hamiltonian(&mut rec),
        2 => check_characteristic(&mut rec),
        3 => check_projector(&mut rec),
        4 => check_parity(&mut rec),
        5 => check_fold(&mut rec),
        6 => check_roots(&mut rec),
        7 => check_bethe(&mut rec),
        8 => check_strings(&mut rec),
        9 => check_riggings(&mut rec),
        10 => check_b_operator(&mut rec),
        11 => check_eigenstates(&mut rec),
        12 => check_density(&mut rec),
        13 => check_reduction(&mut rec),
        14 => check_two_magnons(&mut rec),
        _ => Err(crate::Error::domain(format!("no check with id {id}"))),
    };
    if let Err(e) = result {
        rec.exact(format!("pipeline error: {e}"), false);
    }
    rec.finish(id, check_name(id))
}

pub fn run_all(override_tol: Option<f64>) -> Vec<CheckOutcome> {
    CHECK_IDS
        .iter()
        .map(|&id| run_check(id, override_tol))
        .collect()
}

fn qubit_h() -> Result<CMatrix> {
    Ok(hamiltonian_wavelet(RingSector::new(7, 3, 0)?)?.entries)
}

fn check_hamiltonian(rec: &mut Recorder) -> Result<()> {
    let h = hamiltonian_wavelet(RingSector::new(7, 3, 0)?)?;
    let reference = REFERENCE_HAMILTONIAN
        .iter()
        .map(|r| r.to_vec())
        .collect::<Vec<_>>();
    rec.exact(
        "integer entries equal the reference",
        h.integer_entries() == Some(reference),
    );
    rec.at_most(
        "max entry deviation",
        max_abs(&(&h.entries - integer_matrix(&REFERENCE_HAMILTONIAN, 1.0))),
        1e-12,
    );
    rec.note(format!("basis {:?}", h.labels));
    Ok(())
}

fn check_characteristic(rec: &mut Recorder) -> Result<()> {
    let report = eigen_decompose(&qubit_h()?, 1e-9)?;
    let exact = report.characteristic.exact_i64();
    rec.exact(
        "exact coefficients of x(x+2)(x+6)(x+5)^2",
        exact.as_deref() == Some(&[0, 300, 320, 117, 18, 1][..]),
    );
    let expected = [-6.0, -5.0, -5.0, -2.0, 0.0];
    let dev = report
        .eigenvalues
        .iter()
        .zip(expected)
        .map(|(e, x)| (e - x).abs())
        .fold(0.0, f64::max);
    rec.at_most("spectrum deviation", dev, 1e-10);
    rec.note(format!("eigenvalues {:?}", report.eigenvalues));
    Ok(())
}

fn check_projector(rec: &mut Recorder) -> Result<()> {
    let p = degenerate_projector(&qubit_h()?, -5.0, 1e-9)?;
    rec.at_most(
        "max entry deviation",
        max_abs(&(&p.matrix - integer_matrix(&REFERENCE_PROJECTOR, 15.0))),
        1e-10,
    );
    rec.at_most("|trace - 2|", (p.rank() - 2.0).abs(), 1e-10);
    if let Some(exact) = &p.exact {
        rec.note(format!(
            "exact form: numerators {:?} over {}",
            exact.numerators, exact.denominator
        ));
    }
    Ok(())
}

fn check_parity(rec: &mut Recorder) -> Result<()> {
    let basis = wavelet_basis(RingSector::new(7, 3, 0)?)?;
    let pi = parity_matrix(&basis)?;
    let h = qubit_h()?;
    rec.at_most(
        "max deviation from the reference parity",
        max_abs(&(&pi - integer_matrix(&REFERENCE_PARITY, 1.0))),
        1e-12,
    );
    rec.at_most("max |pi H - H pi|", max_abs(&(&pi * &h - &h * &pi)), 1e-12);
    Ok(())
}

fn bisect(g: &ComplexPolynomial, mut lo: f64, mut hi: f64) -> f64 {
    let f = |x: f64| g.eval(c(x, 0.0)).re;
    let flo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0) == (flo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn check_fold(rec: &mut Recorder) -> Result<()> {
    let g = palindromic_fold(&heptagon_qubit_polynomial())?;
    let expected = ComplexPolynomial::from_real_descending(&[1.0, -1.0, 2.0, 7.0]);
    rec.at_most(
        "coefficients of g vs x^3 - x^2 + 2x + 7",
        coeff_distance(&g, &expected),
        1e-12,
    );
    let sol = solve_qubit_phases()?;
    let xa = sol.fibers[0].x;
    rec.at_most("|Im x_a|", xa.im.abs(), 1e-12);
    rec.exact("x_a in (-2, -1)", xa.re > -2.0 && xa.re < -1.0);
    rec.at_most("|x_a + 1.35170|", (xa.re + 1.35170).abs(), 1e-4);
    let oracle = bisect(&g, -2.0, -1.0);
    rec.at_most("|x_a - bisection root|", (xa.re - oracle).abs(), 1e-10);
    rec.note(format!("x_a = {:.12}, bisection {:.12}", xa.re, oracle));
    Ok(())
}

fn check_roots(rec: &mut Recorder) -> Result<()> {
    let sol = solve_qubit_phases()?;
    let roots = sol.roots();
    let f = &sol.f;
    let worst = roots.iter().map(|&t| f.eval(t).norm()).fold(0.0, f64::max);
    rec.at_most("max |f(t)| over the six roots", worst, 1e-10);
    let on_circle: Vec<_> = roots
        .iter()
        .filter(|t| (t.norm() - 1.0).abs() < 1e-10)
        .collect();
    rec.exact("exactly two roots on the unit circle", on_circle.len() == 2);
    let off: Vec<Complex64> = roots
        .iter()
        .copied()
        .filter(|t| (t.norm() - 1.0).abs() >= 1e-10)
        .collect();
    let has = |z: Complex64| {
        off.iter()
            .map(|t| (t - z).norm())
            .fold(f64::INFINITY, f64::min)
    };
    let pairing = off
        .iter()
        .map(|&t| has(t.conj()).max(has(1.0 / t.conj())))
        .fold(0.0, f64::max);
    rec.exact("four off-circle roots", off.len() == 4);
    rec.at_most(
        "conjugate and reciprocal pairing of the off-circle roots",
        pairing,
        1e-10,
    );

    let w1 = reference_w1();
    rec.at_most("w_1 coefficients", coeff_distance(&sol.w[0], &w1), 1e-10);
    rec.at_most(
        "w_2 coefficients",
        coeff_distance(&sol.w[1], &conj_poly(&w1)),
        1e-10,
    );
    rec.at_most(
        "f - w_1 w_2",
        coeff_distance(&(&sol.w[0] * &sol.w[1]), f),
        1e-10,
    );

    let u1 = reference_u1();
    let u2 = mirror(&u1);
    let d1 = coeff_distance(&sol.u[0], &u1);
    let d2 = coeff_distance(&sol.u[1], &u2);
    rec.at_most("u_1 coefficients", d1, 1e-10);
    rec.at_most("u_2 coefficients", d2, 1e-10);
    let derived = 3.0 / (8.0 * 15f64.sqrt());
    rec.note(format!(
        "computed u_1 = {}; its constant term {:.15} equals 3/(8 sqrt 15) = {:.15}, \
         the reference 3/(8 sqrt 5) = {:.15}",
        sol.u[0],
        sol.u[0].coeff(0).re,
        derived,
        3.0 / (8.0 * 5f64.sqrt())
    ));
    Ok(())
}

fn check_bethe(rec: &mut Recorder) -> Result<()> {
    let sol = solve_qubit_phases()?;
    for (v, state) in sol.states.iter().enumerate() {
        let res = verify_bethe_system(state, 7)?;
        rec.at_most(
            format!("state {}: |abc - 1|", v + 1),
            res.quasimomentum_residual,
            1e-10,
        );
        rec.at_most(
            format!("state {}: |sum(a + 1/a) - 1|", v + 1),
            res.energy_residual(-5.0),
            1e-9,
        );
        rec.at_most(
            format!("state {}: max Bethe residual", v + 1),
            res.max_bethe(),
            1e-9,
        );
    }
    Ok(())
}

fn check_strings(rec: &mut Recorder) -> Result<()> {
    let sol = solve_qubit_phases()?;
    let cfg = classify_strings(&sol.spectral[0], 1e-9);
    rec.exact("partition (2,1)", cfg.partition() == vec![2, 1]);
    let (one, two) = match (cfg.string_of_length(1), cfg.string_of_length(2)) {
        (Some(a), Some(b)) => (a.clone(), b.clone()),
        _ => return Ok(()),
    };
    let m = two.half_width;
    rec.at_most("|m - 0.5031|", (m - 0.5031).abs(), 5e-4);
    rec.exceeds("|m - 1/2|", (m - 0.5).abs(), 1e-3);
    rec.at_most("|lambda_0 + 0.2199|", (one.center + 0.2199).abs(), 1e-3);
    rec.at_most("|mu_0 - 0.4327|", (two.center - 0.4327).abs(), 1e-3);
    let formula = |x: Complex64| (x + 0.5) / 15f64.sqrt();
    let lambda0 = formula(sol.fibers[0].x);
    let mu = formula(sol.fibers[1].x);
    rec.at_most(
        "lambda_0 vs (1/2 + x_a)/sqrt 15",
        (c(one.center, 0.0) - lambda0).norm(),
        1e-10,
    );
    rec.at_most(
        "mu_0 + i m vs (1/2 + x_b)/sqrt 15",
        (c(two.center, m) - mu).norm(),
        1e-10,
    );
    rec.note(format!(
        "lambda_0 = {:.6}, mu_0 = {:.6}, m = {:.6}",
        one.center, two.center, m
    ));
    Ok(())
}

fn riggings_of(sol: &QubitSolution, v: usize) -> Result<(Vec<i64>, f64)> {
    let cfg = compute_riggings(&sol.states[v], 7)?;
    let residue = cfg
        .strings
        .iter()
        .filter_map(|s| s.residue)
        .fold(0.0, f64::max);
    Ok((cfg.riggings().unwrap_or_default(), residue))
}

fn check_riggings(rec: &mut Recorder) -> Result<()> {
    let sol = solve_qubit_phases()?;
    let mut found = BTreeSet::new();
    for v in 0..2 {
        let (r, residue) = riggings_of(&sol, v)?;
        rec.at_most(format!("state {}: rounding residue", v + 1), residue, 1e-6);
        rec.note(format!("state {}: (L_1, L_2) = {:?}", v + 1, r));
        found.insert(r);
    }
    let expected = BTreeSet::from([vec![3, -3], vec![-3, 3]]);
    rec.exact("riggings {(3,-3), (-3,3)}", found == expected);
    Ok(())
}

fn random_lambda(rng: &mut StdRng) -> Complex64 {
    c(rng.random_range(-1.5..1.5), rng.random_range(-1.0..1.0))
}

fn check_b_operator(rec: &mut Recorder) -> Result<()> {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut worst: f64 = 0.0;
    for _ in 0..5 {
        let lambda = random_lambda(&mut rng);
        let b = b_block(lambda, 1, 7)?.matrix;
        let (p, q) = (lambda + c(0.0, 0.5), lambda - c(0.0, 0.5));
        for j in 1..=7u32 {
            let expect = c(0.0, 1.0) * p.powu(7 - j) * q.powu(j - 1);
            worst = worst.max((b[(j as usize - 1, 0)] - expect).norm() / expect.norm());
        }
    }
    rec.at_most("B^{10} relative deviation (5 samples)", worst, 1e-12);
    for n in [7, 5] {
        let mut rel: f64 = 0.0;
        for _ in 0..10 {
            let r = commutator_norm(random_lambda(&mut rng), random_lambda(&mut rng), n)?;
            rel = rel.max(r.relative());
        }
        rec.at_most(
            format!("N = {n}: max ||[B(l), B(m)]|| / scale (10 pairs)"),
            rel,
            1e-10,
        );
    }
    Ok(())
}

fn check_eigenstates(rec: &mut Recorder) -> Result<()> {
    let report = qubit_density_matrices()?;
    for v in 0..2 {
        rec.at_most(
            format!("state {}: ||H v + 5 v||", v + 1),
            report.hamiltonian_residual[v],
            1e-8,
        );
        rec.at_most(
            format!("state {}: ||S^2 v - 3/4 v||", v + 1),
            report.spin_residual[v],
            1e-8,
        );
    }
    Ok(())
}

fn check_density(rec: &mut Recorder) -> Result<()> {
    let report = qubit_density_matrices()?;
    let a = 2.0 / 30.0;
    let b = c(-3.0, 5f64.sqrt()) / 30.0;
    let cc = c(-1.0, 15f64.sqrt()) / 10.0;
    let rho1 = &report.rho[0].matrix;
    rec.at_most(
        "rho_1 vs the reference pattern",
        max_abs(&(rho1 - reference_rho1(a, b, cc))),
        1e-9,
    );
    rec.at_most("rho_2 - rho_1*", report.conjugation, 1e-10);
    rec.at_most("rho_1 + rho_2 - P", report.sum_rule, 1e-10);
    rec.at_most("rho_1 rho_2", report.orthogonality, 1e-10);
    rec.at_most("pi rho_1 pi - rho_2", report.parity_swap, 1e-10);
    for v in 0..2 {
        rec.at_most(format!("|tr rho_{} - 1|", v + 1), report.trace[v], 1e-12);
        rec.at_most(
            format!("rho_{0}^2 - rho_{0}", v + 1),
            report.idempotency[v],
            1e-12,
        );
    }
    let derived_b = c(-3.0, 15f64.sqrt()) / 30.0;
    rec.note(format!(
        "computed A = {:.15}, B = {:.15}, C = {:.15}; (-3 + i sqrt 15)/30 = {:.15}; \
         pattern deviation with that B = {:.3e}",
        rho1[(0, 0)].re,
        rho1[(0, 3)],
        rho1[(3, 4)],
        derived_b,
        max_abs(&(rho1 - reference_rho1(a, derived_b, cc)))
    ));
    Ok(())
}

/// `p^3 q^3 = (lambda^2 + 1/4)^3`.
pub fn p3q3() -> ComplexPolynomial {
    ComplexPolynomial::from_real(&[1.0 / 64.0, 0.0, 3.0 / 16.0, 0.0, 0.75, 0.0, 1.0])
}

fn check_reduction(rec: &mut Recorder) -> Result<()> {
    let sol = solve_qubit_phases()?;
    let target = p3q3();
    for (name, u) in [
        ("computed u_1", sol.u[0].clone()),
        ("reference u_1", reference_u1()),
    ] {
        let residue = reduce_mod_cubic(&target, &u)?;
        let roots = crate::polynomials::root_multiset(&u, 1e-12)?;
        let worst = roots
            .iter()
            .map(|&l| (residue.eval(l) - target.eval(l)).norm() / target.eval(l).norm())
            .fold(0.0, f64::max);
        rec.at_most(
            format!("{name}: residue vs direct evaluation at its roots"),
            worst,
            1e-10,
        );
        rec.note(format!("residue of p^3 q^3 modulo {name}: {residue}"));
    }
    let residue = reduce_mod_cubic(&target, &reference_u1())?;
    let expected = reference_p3q3_residue();
    let labels = ["constant", "linear", "quadratic"];
    let matches: Vec<String> = (0..3)
        .map(|i| {
            let ok = (residue.coeff(i) - expected.coeff(i)).norm() < 1e-12;
            format!("{} {}", labels[i], if ok { "matches" } else { "differs" })
        })
        .collect();
    rec.note(format!(
        "reference residue {expected} against reduction modulo the reference u_1: {}",
        matches.join(", ")
    ));
    Ok(())
}

fn check_two_magnons(rec: &mut Recorder) -> Result<()> {
    let report = two_magnon_parity_check()?;
    let mut found = BTreeSet::new();
    for (v, s) in report.states.iter().enumerate() {
        let mut r = s.riggings.clone();
        r.sort_unstable_by(|a, b| b.cmp(a));
        rec.at_most(
            format!("state {}: parity deviation", v + 1),
            s.parity_deviation,
            1e-8,
        );
        rec.note(format!(
            "state {}: lambda = {:?}, energy = {:.6}, riggings {:?}",
            v + 1,
            s.spectral.params().iter().map(|z| z.re).collect::<Vec<_>>(),
            s.energy.re,
            r
        ));
        found.insert(r);
    }
    let expected = BTreeSet::from([vec![2, -2], vec![3, -3]]);
    rec.exact("riggings {(2,-2), (3,-3)}", found == expected);
    let momenta: Vec<f64> = report
        .states
        .iter()
        .map(|s| {
            let a =
                crate::inverse_bethe::phase_from_lambda(s.spectral.params()[1]).unwrap_or_default();
            a.arg() / PI
        })
        .collect();
    rec.note(format!("pseudomomenta / pi: {momenta:?}"));
    Ok(())
}
