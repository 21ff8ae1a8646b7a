//! Inverse Bethe Ansatz: phases and rapidities from conserved quantities.
//!
//! A portion of phase `a = e^{ip}` and its spectral parameter `lambda` are
//! related by `a = (lambda + i/2) / (lambda - i/2)`. For `r` deviations on an
//! `N`-ring the Bethe equations read `a_j^N = prod_{l != j} (-V(a_j, a_l))`
//! with `V(a, b) = (ab - 2a + 1) / (ab - 2b + 1)`; the energy is
//! `sum_j (a_j + 1/a_j) - 2r` and the total quasimomentum is `prod_j a_j`.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::lattice::reduce_zone;
use crate::polynomials::{
    cardano_cubic, from_roots, lift_root, palindromic_fold, ComplexPolynomial, CubicRoots,
    LiftedPair,
};
use crate::{serde_complex, Complex64, Error, Result, I};

/// Default separation below which two parameters count as equal.
pub const DISTINCT_TOL: f64 = 1e-12;
/// Largest admissible distance of a rigging from the nearest integer.
pub const RIGGING_THRESHOLD: f64 = 1e-6;

const NEWTON_MAX_ITER: usize = 200;
const NEWTON_MAX_HALVINGS: usize = 40;
const STRING_OFFSET: f64 = 5e-3;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn near(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm()).max(1.0)
}

/// `lambda = (i/2)(a + 1)/(a - 1)`.
pub fn cayley_to_lambda(a: Complex64) -> Result<Complex64> {
    let den = a - 1.0;
    if den.norm() == 0.0 {
        return Err(Error::Pole("a = 1 maps to lambda = infinity".into()));
    }
    Ok(c(0.0, 0.5) * (a + 1.0) / den)
}

/// `a = (lambda + i/2)/(lambda - i/2)`.
pub fn phase_from_lambda(lambda: Complex64) -> Result<Complex64> {
    let den = lambda - c(0.0, 0.5);
    if den.norm() == 0.0 {
        return Err(Error::Pole(
            "lambda = i/2 has no finite portion of phase".into(),
        ));
    }
    Ok((lambda + c(0.0, 0.5)) / den)
}

fn check_distinct(values: &[Complex64], what: &str) -> Result<()> {
    for (i, &x) in values.iter().enumerate() {
        for &y in &values[i + 1..] {
            if near(x, y, DISTINCT_TOL) {
                return Err(Error::domain(format!("repeated {what} {x}")));
            }
        }
    }
    Ok(())
}

/// Portions of phase of one Bethe state, one per deviation.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct PhaseTuple {
    #[serde(serialize_with = "serde_complex::serialize_complex_slice")]
    phases: Vec<Complex64>,
}

impl PhaseTuple {
    pub fn new(phases: Vec<Complex64>) -> Result<Self> {
        if phases.is_empty() {
            return Err(Error::domain("a Bethe state needs at least one phase"));
        }
        check_distinct(&phases, "portion of phase")?;
        if let Some(a) = phases.iter().find(|a| **a == c(1.0, 0.0)) {
            return Err(Error::Pole(format!(
                "portion of phase {a} has infinite rapidity"
            )));
        }
        Ok(Self { phases })
    }

    pub fn phases(&self) -> &[Complex64] {
        &self.phases
    }

    pub fn r(&self) -> usize {
        self.phases.len()
    }

    pub fn product(&self) -> Complex64 {
        self.phases.iter().product()
    }

    pub fn conj(&self) -> Self {
        Self {
            phases: self.phases.iter().map(|a| a.conj()).collect(),
        }
    }

    pub fn to_spectral(&self) -> Result<SpectralTuple> {
        SpectralTuple::new(
            self.phases
                .iter()
                .map(|&a| cayley_to_lambda(a))
                .collect::<Result<_>>()?,
        )
    }
}

/// Spectral parameters (rapidities) of one Bethe state.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct SpectralTuple {
    #[serde(serialize_with = "serde_complex::serialize_complex_slice")]
    params: Vec<Complex64>,
}

impl SpectralTuple {
    pub fn new(params: Vec<Complex64>) -> Result<Self> {
        if params.is_empty() {
            return Err(Error::domain(
                "a Bethe state needs at least one spectral parameter",
            ));
        }
        check_distinct(&params, "spectral parameter")?;
        for &l in &params {
            if near(l, c(0.0, 0.5), DISTINCT_TOL) || near(l, c(0.0, -0.5), DISTINCT_TOL) {
                return Err(Error::Pole(format!(
                    "spectral parameter {l} sits on the pole +-i/2"
                )));
            }
        }
        Ok(Self { params })
    }

    pub fn params(&self) -> &[Complex64] {
        &self.params
    }

    pub fn r(&self) -> usize {
        self.params.len()
    }

    pub fn to_phases(&self) -> Result<PhaseTuple> {
        PhaseTuple::new(
            self.params
                .iter()
                .map(|&l| phase_from_lambda(l))
                .collect::<Result<_>>()?,
        )
    }
}

/// `f(t) = t^6 - t^5 + 5t^4 + 5t^3 + 5t^2 - t + 1`, whose roots are the
/// portions of phase of the `(7, 3, 0, E = -5)` Bethe states.
pub fn heptagon_qubit_polynomial() -> ComplexPolynomial {
    ComplexPolynomial::from_real_descending(&[1.0, -1.0, 5.0, 5.0, 5.0, -1.0, 1.0])
}

/// Everything produced on the way from `f` to the two qubit Bethe states.
#[derive(Debug, Clone, Serialize)]
pub struct QubitSolution {
    pub f: ComplexPolynomial,
    /// `f(t) = t^3 g(t + 1/t)`.
    pub g: ComplexPolynomial,
    pub cubic: CubicRoots,
    /// Fibers over `x_a` (real), `x_b` (upper half plane) and `x_c = x_b*`.
    pub fibers: [LiftedPair; 3],
    /// State 1 is the one whose 2-string member from the `x_b` fiber has
    /// positive imaginary rapidity; state 2 is its complex conjugate.
    pub states: [PhaseTuple; 2],
    pub spectral: [SpectralTuple; 2],
    /// `w_v(t) = prod (t - a)` over the phases of state `v`.
    pub w: [ComplexPolynomial; 2],
    /// `u_v(lambda) = prod (lambda - lambda_j)` over the rapidities of state `v`.
    pub u: [ComplexPolynomial; 2],
}

impl QubitSolution {
    pub fn roots(&self) -> Vec<Complex64> {
        self.fibers.iter().flat_map(|f| f.members()).collect()
    }
}

/// Fold, Cardano, lift, and group the six roots of `f` into the two phase
/// triples with `abc = 1`.
pub fn solve_qubit_phases() -> Result<QubitSolution> {
    let f = heptagon_qubit_polynomial();
    let g = palindromic_fold(&f)?;
    let gc: Vec<f64> = g.coeffs().iter().map(|z| z.re).collect();
    if (gc[3] - 1.0).abs() > 1e-14 {
        return Err(Error::Internal("folded polynomial is not monic".into()));
    }
    let cubic = cardano_cubic(gc[0], gc[1], gc[2]);
    let mut xs = cubic.roots;
    xs.sort_by(|a, b| rank(a).total_cmp(&rank(b)));
    let fibers = xs.map(lift_root);

    let mut found: Vec<PhaseTuple> = Vec::new();
    for sel in 0..8u32 {
        let pick = |f: usize| fibers[f].members()[((sel >> f) & 1) as usize];
        let triple = [pick(0), pick(1), pick(2)];
        let prod: Complex64 = triple.iter().product();
        if (prod - 1.0).norm() < 1e-8 {
            found.push(PhaseTuple::new(triple.to_vec())?);
        }
    }
    if found.len() != 2 {
        return Err(Error::Internal(format!(
            "expected two fiber selections with abc = 1, found {}",
            found.len()
        )));
    }
    let spectral_of = |t: &PhaseTuple| t.to_spectral();
    let (s0, s1) = (spectral_of(&found[0])?, spectral_of(&found[1])?);
    let first_is_one = s0.params()[1].im > 0.0;
    let (states, spectral) = if first_is_one {
        ([found[0].clone(), found[1].clone()], [s0, s1])
    } else {
        ([found[1].clone(), found[0].clone()], [s1, s0])
    };
    let w = [
        from_roots(states[0].phases()),
        from_roots(states[1].phases()),
    ];
    let u = [
        from_roots(spectral[0].params()),
        from_roots(spectral[1].params()),
    ];
    Ok(QubitSolution {
        f,
        g,
        cubic,
        fibers,
        states,
        spectral,
        w,
        u,
    })
}

// Real root first, then upper half plane, then lower.
fn rank(x: &Complex64) -> f64 {
    if x.im.abs() < 1e-9 {
        0.0
    } else if x.im > 0.0 {
        1.0
    } else {
        2.0
    }
}

/// `V(a, b) = (ab - 2a + 1)/(ab - 2b + 1)`.
pub fn scattering(a: Complex64, b: Complex64) -> Result<Complex64> {
    let den = a * b - 2.0 * b + 1.0;
    if den.norm() <= 1e-300 {
        return Err(Error::Pole(format!(
            "V({a}, {b}) has a vanishing denominator"
        )));
    }
    Ok((a * b - 2.0 * a + 1.0) / den)
}

/// Residuals of the Bethe system for one phase tuple.
#[derive(Debug, Clone, Serialize)]
pub struct BetheResidual {
    pub n: usize,
    pub r: usize,
    /// `|prod a - 1|`.
    pub quasimomentum_residual: f64,
    /// `k` with `prod a` closest to `exp(2 pi i k / N)`, reduced to the zone.
    pub quasimomentum: i64,
    /// `|prod a - exp(2 pi i k / N)|` for that `k`.
    pub zone_residual: f64,
    /// `sum (a + 1/a)`.
    #[serde(serialize_with = "serde_complex::serialize_complex")]
    pub energy_sum: Complex64,
    /// `sum (a + 1/a) - 2r`.
    #[serde(serialize_with = "serde_complex::serialize_complex")]
    pub energy: Complex64,
    /// `|a_j^N - prod_{l != j} (-V(a_j, a_l))|` per parameter.
    pub bethe: Vec<f64>,
    /// Principal argument of `prod_{l != j} (-V(a_j, a_l))` per parameter.
    pub scattering_phases: Vec<f64>,
}

impl BetheResidual {
    pub fn max_bethe(&self) -> f64 {
        self.bethe.iter().copied().fold(0.0, f64::max)
    }

    /// `|sum (a + 1/a) - (E + 2r)|`.
    pub fn energy_residual(&self, energy: f64) -> f64 {
        (self.energy - energy).norm()
    }
}

pub fn verify_bethe_system(t: &PhaseTuple, n: usize) -> Result<BetheResidual> {
    let a = t.phases();
    let r = a.len();
    let prod = t.product();
    let k = reduce_zone((prod.arg() * n as f64 / (2.0 * PI)).round() as i64, n);
    let zone = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64);
    let energy_sum: Complex64 = a.iter().map(|&x| x + 1.0 / x).sum();
    let mut bethe = Vec::with_capacity(r);
    let mut scattering_phases = Vec::with_capacity(r);
    for j in 0..r {
        let mut rhs = c(1.0, 0.0);
        for l in 0..r {
            if l != j {
                rhs *= -scattering(a[j], a[l])?;
            }
        }
        bethe.push((a[j].powu(n as u32) - rhs).norm());
        scattering_phases.push(rhs.arg());
    }
    Ok(BetheResidual {
        n,
        r,
        quasimomentum_residual: (prod - 1.0).norm(),
        quasimomentum: k,
        zone_residual: (prod - zone).norm(),
        energy_sum,
        energy: energy_sum - 2.0 * r as f64,
        bethe,
        scattering_phases,
    })
}

/// One string: parameters sharing a real centre with imaginary parts placed
/// symmetrically about it.
#[derive(Debug, Clone, Serialize)]
pub struct BetheString {
    pub length: usize,
    /// Indices into the classified tuple.
    pub members: Vec<usize>,
    pub center: f64,
    /// Largest imaginary offset; `m` for a 2-string `mu0 +- i m`.
    pub half_width: f64,
    pub rigging: Option<i64>,
    /// Distance of the unrounded rigging from its integer.
    pub residue: Option<f64>,
}

/// A string configuration, optionally rigged.
#[derive(Debug, Clone, Serialize)]
pub struct StringConfiguration {
    /// Ordered by length, then centre, both ascending.
    pub strings: Vec<BetheString>,
    /// Indices of parameters that fit no string.
    pub unclassified: Vec<usize>,
}

impl StringConfiguration {
    /// String lengths in non-increasing order.
    pub fn partition(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.strings.iter().map(|s| s.length).collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }

    /// Riggings in the order of [`Self::strings`].
    pub fn riggings(&self) -> Option<Vec<i64>> {
        self.strings.iter().map(|s| s.rigging).collect()
    }

    pub fn string_of_length(&self, length: usize) -> Option<&BetheString> {
        self.strings.iter().find(|s| s.length == length)
    }
}

/// Group spectral parameters by real centre; each group whose imaginary parts
/// are symmetric about zero is a string.
pub fn classify_strings(s: &SpectralTuple, tol: f64) -> StringConfiguration {
    let params = s.params();
    let mut used = vec![false; params.len()];
    let mut strings = Vec::new();
    let mut unclassified = Vec::new();
    for i in 0..params.len() {
        if used[i] {
            continue;
        }
        let group: Vec<usize> = (i..params.len())
            .filter(|&j| !used[j] && (params[j].re - params[i].re).abs() <= tol)
            .collect();
        let mut ims: Vec<f64> = group.iter().map(|&j| params[j].im).collect();
        ims.sort_by(f64::total_cmp);
        let symmetric = (0..ims.len()).all(|l| (ims[l] + ims[ims.len() - 1 - l]).abs() <= tol);
        let has_real_member = ims.len() % 2 == 0 || ims[ims.len() / 2].abs() <= tol;
        for &j in &group {
            used[j] = true;
        }
        if symmetric && has_real_member {
            let center = group.iter().map(|&j| params[j].re).sum::<f64>() / group.len() as f64;
            strings.push(BetheString {
                length: group.len(),
                members: group,
                center,
                half_width: ims.last().copied().unwrap_or(0.0).abs(),
                rigging: None,
                residue: None,
            });
        } else {
            unclassified.extend(group);
        }
    }
    strings.sort_by(|a, b| a.length.cmp(&b.length).then(a.center.total_cmp(&b.center)));
    StringConfiguration {
        strings,
        unclassified,
    }
}

/// Classify the rapidities of `t` into strings and attach to each string `s`
/// the integer `L_s = (N P_s - Phi_s) / 2 pi`, with `P_s` the principal
/// argument of `prod_{x in s} a_x` and `Phi_s` that of
/// `prod_{x in s, y not in s} (-V(x, y))`.
pub fn compute_riggings(t: &PhaseTuple, n: usize) -> Result<StringConfiguration> {
    let spectral = t.to_spectral()?;
    let scale = spectral
        .params()
        .iter()
        .map(|z| z.norm())
        .fold(1.0, f64::max);
    let mut config = classify_strings(&spectral, 1e-7 * scale);
    if !config.unclassified.is_empty() {
        return Err(Error::domain(format!(
            "{} spectral parameters fit no string",
            config.unclassified.len()
        )));
    }
    let a = t.phases();
    for s in &mut config.strings {
        let momentum = s.members.iter().map(|&x| a[x]).product::<Complex64>().arg();
        let mut scatter = c(1.0, 0.0);
        for &x in &s.members {
            for y in (0..a.len()).filter(|y| !s.members.contains(y)) {
                scatter *= -scattering(a[x], a[y])?;
            }
        }
        let value = (n as f64 * momentum - scatter.arg()) / (2.0 * PI);
        let rounded = value.round();
        let residue = (value - rounded).abs();
        if residue > RIGGING_THRESHOLD {
            return Err(Error::BranchResolution {
                residue,
                threshold: RIGGING_THRESHOLD,
            });
        }
        s.rigging = Some(rounded as i64);
        s.residue = Some(residue);
    }
    Ok(config)
}

/// Output of [`solve_bethe_newton`].
#[derive(Debug, Clone, Serialize)]
pub struct NewtonSolution {
    pub spectral: SpectralTuple,
    pub phases: PhaseTuple,
    pub residual: BetheResidual,
    pub iterations: usize,
    /// Largest scaled residual of the Bethe and quasimomentum equations.
    pub relative_residual: f64,
}

// Rows 0..r: R_j = a_j^N - prod_{l != j} W(a_j, a_l) with W = -V.
// Row r: prod_j a_j - exp(2 pi i k / N).
// Returns the residual, its Jacobian, and per-row scales.
fn bethe_system(
    a: &[Complex64],
    n: usize,
    zone: Complex64,
) -> Result<(Vec<Complex64>, DMatrix<Complex64>, Vec<f64>)> {
    let r = a.len();
    let mut f = vec![Complex64::default(); r + 1];
    let mut jac = DMatrix::<Complex64>::zeros(r + 1, r);
    let mut scale = vec![0.0; r + 1];
    for j in 0..r {
        let power = a[j].powu(n as u32);
        let others: Vec<usize> = (0..r).filter(|&l| l != j).collect();
        let w: Vec<Complex64> = others
            .iter()
            .map(|&l| scattering(a[j], a[l]).map(|v| -v))
            .collect::<Result<_>>()?;
        let prod: Complex64 = w.iter().product();
        f[j] = power - prod;
        scale[j] = power.norm() + prod.norm();
        jac[(j, j)] += a[j].powu(n as u32 - 1) * n as f64;
        for (idx, &l) in others.iter().enumerate() {
            let loo: Complex64 = w
                .iter()
                .enumerate()
                .filter(|(m, _)| *m != idx)
                .map(|(_, z)| *z)
                .product();
            let den = a[j] * a[l] - 2.0 * a[l] + 1.0;
            let den2 = den * den;
            // dV/da = -2(b-1)^2/den^2, dV/db = 2(a-1)^2/den^2, and W = -V.
            let dw_da = 2.0 * (a[l] - 1.0).powu(2) / den2;
            let dw_db = -2.0 * (a[j] - 1.0).powu(2) / den2;
            jac[(j, j)] -= loo * dw_da;
            jac[(j, l)] -= loo * dw_db;
        }
    }
    let total: Complex64 = a.iter().product();
    f[r] = total - zone;
    scale[r] = 1.0 + total.norm();
    for j in 0..r {
        jac[(r, j)] = a
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != j)
            .map(|(_, z)| *z)
            .product();
    }
    Ok((f, jac, scale))
}

fn weighted_norm(f: &[Complex64], weights: &[f64]) -> f64 {
    f.iter()
        .zip(weights)
        .map(|(z, w)| (z * w).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

fn relative(f: &[Complex64], scale: &[f64]) -> f64 {
    f.iter()
        .zip(scale)
        .map(|(fj, s)| fj.norm() / s.max(f64::MIN_POSITIVE))
        .fold(0.0, f64::max)
}

/// Damped Gauss-Newton iteration on the Bethe equations
/// `a_j^N = prod_{l != j} (-V(a_j, a_l))` together with the quasimomentum
/// condition `prod_j a_j = exp(2 pi i k / N)`, in the portions of phase and
/// started from the phases of `seed`. The step is halved while it fails to
/// decrease the scaled residual.
pub fn solve_bethe_newton(
    n: usize,
    r: usize,
    k: i64,
    seed: &SpectralTuple,
    tol: f64,
) -> Result<NewtonSolution> {
    crate::lattice::check_ring_size(n)?;
    if seed.r() != r {
        return Err(Error::domain(format!(
            "seed has {} parameters, expected {r}",
            seed.r()
        )));
    }
    if r == 0 || r > n / 2 {
        return Err(Error::UnsupportedSector(format!(
            "r = {r} on a ring of {n}"
        )));
    }
    let target_k = reduce_zone(k, n);
    let zone = Complex64::from_polar(1.0, 2.0 * PI * target_k as f64 / n as f64);
    let mut a = regularize_seed(seed.params())?;
    let mut iterations = 0;
    let (f, _, scale) = bethe_system(&a, n, zone)?;
    let mut res = relative(&f, &scale);
    while res >= tol {
        if iterations == NEWTON_MAX_ITER {
            return Err(Error::Convergence {
                iterations,
                residual: res,
                reason: "iteration limit reached".into(),
            });
        }
        iterations += 1;
        let (f, jac, scale) = bethe_system(&a, n, zone)?;
        let weights: Vec<f64> = scale
            .iter()
            .map(|s| 1.0 / s.max(f64::MIN_POSITIVE))
            .collect();
        let merit = weighted_norm(&f, &weights);
        let w = DMatrix::from_fn(r + 1, r, |i, j| jac[(i, j)] * weights[i]);
        let rhs =
            nalgebra::DVector::from_iterator(r + 1, f.iter().zip(&weights).map(|(z, w)| -z * *w));
        let step = w
            .svd(true, true)
            .solve(&rhs, 1e-14)
            .map_err(|reason| Error::Convergence {
                iterations,
                residual: res,
                reason: reason.into(),
            })?;
        let mut damping = 1.0;
        let mut accepted = false;
        for _ in 0..NEWTON_MAX_HALVINGS {
            let trial: Vec<Complex64> = a
                .iter()
                .zip(step.iter())
                .map(|(x, d)| x + d * damping)
                .collect();
            if let Ok((tf, _, ts)) = bethe_system(&trial, n, zone) {
                let trial_merit = weighted_norm(&tf, &weights);
                if trial_merit.is_finite() && trial_merit < merit {
                    a = trial;
                    res = relative(&tf, &ts);
                    accepted = true;
                    break;
                }
            }
            damping *= 0.5;
        }
        if !accepted {
            return Err(Error::Convergence {
                iterations,
                residual: res,
                reason: "no step reduces the residual".into(),
            });
        }
    }
    let phases = PhaseTuple::new(a)?;
    let spectral = phases.to_spectral()?;
    let residual = verify_bethe_system(&phases, n)?;
    Ok(NewtonSolution {
        spectral,
        phases,
        residual,
        iterations,
        relative_residual: res,
    })
}

/// Exact strings (`lambda_j - lambda_l = i`) sit on a pole of `V`; widen such
/// pairs by `STRING_OFFSET` before iterating.
fn regularize_seed(params: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut lambda = params.to_vec();
    for j in 0..lambda.len() {
        for l in 0..lambda.len() {
            if j != l && (params[j] - params[l] - I).norm() < 1e-9 {
                lambda[j] += I * STRING_OFFSET;
                lambda[l] -= I * STRING_OFFSET;
            }
        }
    }
    lambda.iter().map(|&x| phase_from_lambda(x)).collect()
}

/// String-hypothesis seed `(lambda0, mu0 + i/2, mu0 - i/2)` for the
/// `(7, 3, 0)` qubit.
pub fn qubit_seed() -> SpectralTuple {
    SpectralTuple::new(vec![c(-0.25, 0.0), c(0.45, 0.5), c(0.45, -0.5)])
        .expect("seed parameters are distinct")
}

/// Symmetric real seeds `(-x, x)` for the two `(7, 2, 0)` states.
pub fn two_magnon_seeds() -> [SpectralTuple; 2] {
    [0.9, 0.3].map(|x| {
        SpectralTuple::new(vec![c(-x, 0.0), c(x, 0.0)]).expect("seed parameters are distinct")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_examples() {
        assert!(cayley_to_lambda(c(-1.0, 0.0)).unwrap().norm() < 1e-15);
        let a = Complex64::from_polar(1.0, 2.0 * PI / 7.0);
        let l = cayley_to_lambda(a).unwrap();
        assert!((l - 0.5 / (PI / 7.0).tan()).norm() < 1e-12);
        assert!((l.re - 1.03826).abs() < 1e-5);
        assert!(matches!(cayley_to_lambda(c(1.0, 0.0)), Err(Error::Pole(_))));
        assert!(matches!(
            phase_from_lambda(c(0.0, 0.5)),
            Err(Error::Pole(_))
        ));
        assert!((phase_from_lambda(c(0.0, 0.0)).unwrap() + 1.0).norm() < 1e-15);
        assert!((phase_from_lambda(c(0.7, 0.0)).unwrap().norm() - 1.0).abs() < 1e-15);
        assert!(phase_from_lambda(c(0.3, 0.6)).unwrap().norm() > 1.0);
        for z in [c(0.3, -1.2), c(-2.0, 0.1), c(0.5, 0.5)] {
            let back = phase_from_lambda(cayley_to_lambda(z).unwrap()).unwrap();
            assert!((back - z).norm() < 1e-14);
        }
    }

    #[test]
    fn qubit_polynomial_is_palindromic() {
        let f = heptagon_qubit_polynomial();
        assert!(f.is_palindromic(0.0));
        let desc: Vec<f64> = f.coeffs().iter().rev().map(|z| z.re).collect();
        assert_eq!(desc, vec![1.0, -1.0, 5.0, 5.0, 5.0, -1.0, 1.0]);
    }

    #[test]
    fn qubit_states() {
        let sol = solve_qubit_phases().unwrap();
        assert!(
            (sol.cubic.roots[0].re + 1.35168288).abs() < 1e-7
                || (sol.fibers[0].x.re + 1.35168288).abs() < 1e-7
        );
        for (v, state) in sol.states.iter().enumerate() {
            assert!((state.product() - 1.0).norm() < 1e-12);
            let res = verify_bethe_system(state, 7).unwrap();
            assert!(res.max_bethe() < 1e-9, "state {v}: {:?}", res.bethe);
            assert!(res.energy_residual(-5.0) < 1e-9);
            assert_eq!(res.quasimomentum, 0);
        }
        let conj = sol.states[0].conj();
        for x in conj.phases() {
            assert!(sol.states[1]
                .phases()
                .iter()
                .any(|y| (x - y).norm() < 1e-12));
        }
        let b = sol.states[0].phases()[1];
        assert!((b.norm() - 2.52458).abs() < 1e-4);
        assert!((b.arg() - 1.15645).abs() < 1e-4);
        assert!(sol.spectral[0].params()[1].im > 0.0);
    }

    #[test]
    fn scattering_is_reciprocal() {
        let pairs = [(c(0.3, 0.4), c(-1.2, 0.5)), (c(2.0, -1.0), c(0.1, 0.9))];
        for (a, b) in pairs {
            let vv = scattering(a, b).unwrap() * scattering(b, a).unwrap();
            assert!((vv - 1.0).norm() < 1e-13);
        }
        let sol = solve_qubit_phases().unwrap();
        let [a, b, cc] = [0, 1, 2].map(|i| sol.states[0].phases()[i]);
        let v = scattering(a, b).unwrap() * scattering(a, cc).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn generic_triple_is_not_a_solution() {
        let t = PhaseTuple::new(vec![c(2.0, 0.0), c(-0.5, 0.0), c(-1.0, 0.0)]).unwrap();
        let res = verify_bethe_system(&t, 7).unwrap();
        assert!(res.quasimomentum_residual < 1e-15);
        assert!(res.max_bethe() > 1e-3);
    }

    #[test]
    fn single_magnon_has_empty_scattering() {
        for k in 1..7 {
            let t = PhaseTuple::new(vec![Complex64::from_polar(1.0, 2.0 * PI * k as f64 / 7.0)])
                .unwrap();
            let res = verify_bethe_system(&t, 7).unwrap();
            assert!(res.max_bethe() < 1e-12);
            assert_eq!(res.quasimomentum, reduce_zone(k, 7));
        }
    }

    #[test]
    fn strings_of_the_qubit() {
        let sol = solve_qubit_phases().unwrap();
        let cfg = classify_strings(&sol.spectral[0], 1e-9);
        assert_eq!(cfg.partition(), vec![2, 1]);
        let one = cfg.string_of_length(1).unwrap();
        let two = cfg.string_of_length(2).unwrap();
        assert!((one.center + 0.21993).abs() < 1e-4);
        assert!((two.center - 0.43272).abs() < 1e-4);
        assert!((two.half_width - 0.5031).abs() < 1e-4);
        let real = SpectralTuple::new(vec![c(0.1, 0.0), c(-0.4, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(classify_strings(&real, 1e-9).partition(), vec![1, 1, 1]);
        let odd = SpectralTuple::new(vec![c(0.1, 0.3), c(-0.4, 0.0)]).unwrap();
        assert_eq!(classify_strings(&odd, 1e-9).unclassified, vec![0]);
    }

    #[test]
    fn qubit_riggings_are_opposite() {
        let sol = solve_qubit_phases().unwrap();
        let r1 = compute_riggings(&sol.states[0], 7)
            .unwrap()
            .riggings()
            .unwrap();
        let r2 = compute_riggings(&sol.states[1], 7)
            .unwrap()
            .riggings()
            .unwrap();
        assert_eq!(r1, vec![-3, 3]);
        assert_eq!(r2, vec![3, -3]);
        let a = sol.states[0].phases()[0];
        assert!((2.0 * (a.arg()).cos() - sol.fibers[0].x.re).abs() < 1e-12);
    }

    #[test]
    fn newton_finds_qubit_state() {
        let sol = solve_qubit_phases().unwrap();
        let out = solve_bethe_newton(7, 3, 0, &qubit_seed(), 1e-13).unwrap();
        for (x, y) in out.spectral.params().iter().zip(sol.spectral[0].params()) {
            assert!((x - y).norm() < 1e-8);
        }
        let again = solve_bethe_newton(7, 3, 0, &out.spectral, 1e-13).unwrap();
        assert!(again.iterations <= 2);
    }

    #[test]
    fn newton_two_magnons() {
        for (seed, p) in two_magnon_seeds().iter().zip([PI / 3.0, 2.0 * PI / 3.0]) {
            let out = solve_bethe_newton(7, 2, 0, seed, 1e-13).unwrap();
            let a = out.phases.phases()[1];
            assert!((a.arg().abs() - p).abs() < 1e-9);
            assert!(out.residual.max_bethe() < 1e-9);
        }
    }

    #[test]
    fn newton_rejects_bad_input() {
        let seed = SpectralTuple::new(vec![c(0.1, 0.0)]).unwrap();
        assert!(solve_bethe_newton(7, 2, 0, &seed, 1e-12).is_err());
        assert!(SpectralTuple::new(vec![c(0.1, 0.0), c(0.1, 0.0)]).is_err());
    }
}
