//! Algebraic Bethe Ansatz on the `N`-ring.
//!
//! The Lax operator at node `j` is the 2x2 matrix (in auxiliary space)
//! `[[a_j, b_j], [c_j, d_j]]` with
//!
//! * `a_j`: `p` on spin up, `q` on spin down,
//! * `d_j`: `q` on spin up, `p` on spin down,
//! * `b_j = i s_j^-` (creates a deviation), `c_j = i s_j^+`,
//!
//! where `p = lambda + i/2` and `q = lambda - i/2`. The monodromy is the
//! ordered product `M = L_N ... L_1 = [[A, B], [C, D]]`; `B(lambda)` raises
//! the number of deviations by one and its sector blocks have monomial
//! entries `i^c p^alpha q^beta`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::heisenberg::{
    degenerate_projector, hamiltonian_configuration, total_spin_squared_configuration,
};
use crate::inverse_bethe::{
    compute_riggings, solve_bethe_newton, solve_qubit_phases, two_magnon_seeds, SpectralTuple,
};
use crate::lattice::{
    fourier_project, parity_matrix, wavelet_basis, ConfigurationSpace, RingSector,
};
use crate::polynomials::{reduce_mod_cubic, ComplexPolynomial};
use crate::{serde_complex, CMatrix, CVector, Complex64, Error, Result, I, MAX_NODES};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub(crate) fn i_pow(k: u32) -> Complex64 {
    match k % 4 {
        0 => c(1.0, 0.0),
        1 => I,
        2 => c(-1.0, 0.0),
        _ => -I,
    }
}

/// Largest entry modulus.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn check_nodes(n: usize) -> Result<()> {
    if n > MAX_NODES {
        return Err(Error::Resource(format!(
            "a ring of {n} nodes exceeds the {MAX_NODES}-node limit"
        )));
    }
    crate::lattice::check_ring_size(n)
}

/// One entry of a 2x2 operator-valued matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Entry {
    A,
    B,
    C,
    D,
}

impl Entry {
    /// (output, input) auxiliary components.
    fn aux(self) -> (usize, usize) {
        match self {
            Entry::A => (0, 0),
            Entry::B => (0, 1),
            Entry::C => (1, 0),
            Entry::D => (1, 1),
        }
    }

    /// Change in the number of deviations.
    pub fn shift(self) -> i64 {
        match self {
            Entry::A | Entry::D => 0,
            Entry::B => 1,
            Entry::C => -1,
        }
    }
}

/// The Lax operator at one node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaxOperator {
    pub node: usize,
    pub lambda: Complex64,
}

impl LaxOperator {
    pub fn p(&self) -> Complex64 {
        self.lambda + c(0.0, 0.5)
    }

    pub fn q(&self) -> Complex64 {
        self.lambda - c(0.0, 0.5)
    }

    /// Action of one entry on a configuration mask: the image mask and its
    /// coefficient, or `None` when the entry annihilates the configuration.
    pub fn apply(&self, entry: Entry, mask: u32) -> Option<(u32, Complex64)> {
        let bit = 1u32 << (self.node - 1);
        let down = mask & bit != 0;
        match entry {
            Entry::A => Some((mask, if down { self.q() } else { self.p() })),
            Entry::D => Some((mask, if down { self.p() } else { self.q() })),
            Entry::B => (!down).then_some((mask | bit, I)),
            Entry::C => down.then_some((mask & !bit, I)),
        }
    }
}

pub fn lax_apply(j: usize, lambda: Complex64, n: usize) -> Result<LaxOperator> {
    if j == 0 || j > n {
        return Err(Error::domain(format!("node {j} is outside 1..={n}")));
    }
    Ok(LaxOperator { node: j, lambda })
}

type Sparse = BTreeMap<u32, Complex64>;

fn accumulate(map: &mut Sparse, mask: u32, z: Complex64) {
    *map.entry(mask).or_default() += z;
}

/// `M(lambda) = L_N ... L_1`, applied matrix-free on the `2^N` chain space.
#[derive(Debug, Clone, PartialEq)]
pub struct MonodromyBlocks {
    lambda: Complex64,
    n: usize,
}

pub fn monodromy(lambda: Complex64, n: usize) -> Result<MonodromyBlocks> {
    check_nodes(n)?;
    Ok(MonodromyBlocks { lambda, n })
}

impl MonodromyBlocks {
    pub fn lambda(&self) -> Complex64 {
        self.lambda
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `M_{entry} v` for a sparse chain vector.
    fn apply_sparse(&self, entry: Entry, v: &Sparse) -> Sparse {
        let (out, inp) = entry.aux();
        let mut aux: [Sparse; 2] = Default::default();
        aux[inp] = v.clone();
        for j in 1..=self.n {
            let lax = LaxOperator {
                node: j,
                lambda: self.lambda,
            };
            let mut next: [Sparse; 2] = Default::default();
            for (from, entries) in [(0, [Entry::A, Entry::C]), (1, [Entry::B, Entry::D])] {
                for (&mask, &z) in &aux[from] {
                    for e in entries {
                        if let Some((m, f)) = lax.apply(e, mask) {
                            accumulate(&mut next[e.aux().0], m, f * z);
                        }
                    }
                }
            }
            aux = next;
        }
        std::mem::take(&mut aux[out])
    }

    /// Sector block of one entry, mapping `source_r` deviations to
    /// `source_r + entry.shift()`.
    pub fn block(&self, entry: Entry, source_r: usize) -> Result<CMatrix> {
        let target = source_r as i64 + entry.shift();
        if target < 0 || target as usize > self.n || source_r > self.n {
            return Err(Error::domain(format!(
                "{entry:?} has no block from sector {source_r} on {} nodes",
                self.n
            )));
        }
        let from = ConfigurationSpace::new(self.n, source_r)?;
        let to = ConfigurationSpace::new(self.n, target as usize)?;
        let mut m = CMatrix::zeros(to.dim(), from.dim());
        for (col, config) in from.configs().iter().enumerate() {
            let image = self.apply_sparse(entry, &Sparse::from([(config.mask(), c(1.0, 0.0))]));
            for (mask, z) in image {
                let row = to
                    .position(mask)
                    .ok_or_else(|| Error::Internal(format!("{entry:?} left the target sector")))?;
                m[(row, col)] += z;
            }
        }
        Ok(m)
    }

    /// `M_{entry}` applied to a vector of the `source_r` sector.
    pub fn apply(&self, entry: Entry, source_r: usize, v: &CVector) -> Result<CVector> {
        let from = ConfigurationSpace::new(self.n, source_r)?;
        if v.len() != from.dim() {
            return Err(Error::domain("vector does not match the source sector"));
        }
        let target = source_r as i64 + entry.shift();
        if target < 0 {
            return Err(Error::domain("C annihilates the vacuum sector"));
        }
        let to = ConfigurationSpace::new(self.n, target as usize)?;
        let sparse: Sparse = from
            .configs()
            .iter()
            .zip(v.iter())
            .filter(|(_, z)| z.norm() != 0.0)
            .map(|(cfg, z)| (cfg.mask(), *z))
            .collect();
        let mut out = CVector::zeros(to.dim());
        for (mask, z) in self.apply_sparse(entry, &sparse) {
            out[to.position(mask).expect("entry preserves its sector shift")] += z;
        }
        Ok(out)
    }
}

/// `B^{r, r-1}(lambda)`: maps `r - 1` deviations to `r`.
#[derive(Debug, Clone, Serialize)]
pub struct BBlock {
    pub r: usize,
    pub n: usize,
    #[serde(serialize_with = "serde_complex::serialize_complex")]
    pub lambda: Complex64,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    #[serde(serialize_with = "serde_complex::serialize_matrix")]
    pub matrix: CMatrix,
}

fn check_block_sector(r: usize, n: usize) -> Result<()> {
    check_nodes(n)?;
    if r == 0 || r > n / 2 {
        return Err(Error::UnsupportedSector(format!(
            "B blocks are defined for 1 <= r <= {}, got {r}",
            n / 2
        )));
    }
    Ok(())
}

pub fn b_block(lambda: Complex64, r: usize, n: usize) -> Result<BBlock> {
    check_block_sector(r, n)?;
    let matrix = monodromy(lambda, n)?.block(Entry::B, r - 1)?;
    Ok(BBlock {
        r,
        n,
        lambda,
        row_labels: ConfigurationSpace::new(n, r)?.labels(),
        col_labels: ConfigurationSpace::new(n, r - 1)?.labels(),
        matrix,
    })
}

/// `i^{i_power} p^{p_power} q^{q_power}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Monomial {
    pub i_power: u32,
    pub p_power: u32,
    pub q_power: u32,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.p_power + self.q_power
    }

    pub fn eval(&self, lambda: Complex64) -> Complex64 {
        let p = lambda + c(0.0, 0.5);
        let q = lambda - c(0.0, 0.5);
        i_pow(self.i_power) * p.powu(self.p_power) * q.powu(self.q_power)
    }

    /// Expansion in powers of `lambda`.
    pub fn polynomial(&self) -> ComplexPolynomial {
        let p = ComplexPolynomial::linear(c(0.0, -0.5));
        let q = ComplexPolynomial::linear(c(0.0, 0.5));
        (&p.pow(self.p_power) * &q.pow(self.q_power)).scale(i_pow(self.i_power))
    }
}

/// `B^{r, r-1}` entry by entry, from the path of the auxiliary index.
///
/// Reading nodes `1..N`, the auxiliary index starts in component 2 and must
/// end in component 1. A node where the spin flips is passed by `b` (2 to 1,
/// creation) or `c` (1 to 2, annihilation), contributing `i`; every other
/// node contributes `a` (component 1) or `d` (component 2).
#[derive(Debug, Clone, Serialize)]
pub struct MonomialBlock {
    pub r: usize,
    pub n: usize,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub entries: Vec<Vec<Option<Monomial>>>,
}

fn path_monomial(n: usize, source: u32, target: u32) -> Option<Monomial> {
    let mut aux = 2;
    let mut m = Monomial {
        i_power: 0,
        p_power: 0,
        q_power: 0,
    };
    for j in 0..n {
        let bit = 1u32 << j;
        let (s, t) = (source & bit != 0, target & bit != 0);
        match (s, t, aux) {
            (false, true, 2) => {
                aux = 1;
                m.i_power += 1;
            }
            (true, false, 1) => {
                aux = 2;
                m.i_power += 1;
            }
            (x, y, _) if x != y => return None,
            // a: up -> p, down -> q; d: up -> q, down -> p
            (down, _, 1) | (down, _, 2) => {
                if down == (aux == 1) {
                    m.q_power += 1;
                } else {
                    m.p_power += 1;
                }
            }
            _ => unreachable!(),
        }
    }
    (aux == 1).then_some(m)
}

pub fn b_block_monomials(r: usize, n: usize) -> Result<MonomialBlock> {
    check_block_sector(r, n)?;
    let rows = ConfigurationSpace::new(n, r)?;
    let cols = ConfigurationSpace::new(n, r - 1)?;
    let entries = rows
        .configs()
        .iter()
        .map(|t| {
            cols.configs()
                .iter()
                .map(|s| path_monomial(n, s.mask(), t.mask()))
                .collect()
        })
        .collect();
    Ok(MonomialBlock {
        r,
        n,
        row_labels: rows.labels(),
        col_labels: cols.labels(),
        entries,
    })
}

impl MonomialBlock {
    pub fn evaluate(&self, lambda: Complex64) -> CMatrix {
        CMatrix::from_fn(self.entries.len(), self.col_labels.len(), |i, j| {
            self.entries[i][j].map_or(Complex64::default(), |m| m.eval(lambda))
        })
    }

    /// Distinct degrees in `lambda` of the nonzero entries.
    pub fn degrees(&self) -> BTreeSet<u32> {
        self.entries
            .iter()
            .flatten()
            .flatten()
            .map(|m| m.degree())
            .collect()
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries
            .iter()
            .flatten()
            .filter(|m| m.is_some())
            .count()
    }

    pub fn polynomial_entries(&self) -> Vec<Vec<ComplexPolynomial>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|m| m.map_or_else(ComplexPolynomial::zero, |m| m.polynomial()))
                    .collect()
            })
            .collect()
    }

    /// Entries reduced modulo a monic cubic `u`.
    pub fn reduced_entries(&self, u: &ComplexPolynomial) -> Result<Vec<Vec<ComplexPolynomial>>> {
        self.polynomial_entries()
            .iter()
            .map(|row| row.iter().map(|p| reduce_mod_cubic(p, u)).collect())
            .collect()
    }
}

fn validate_params(params: &[Complex64], n: usize) -> Result<()> {
    check_nodes(n)?;
    if params.len() > n / 2 {
        return Err(Error::UnsupportedSector(format!(
            "{} parameters exceed the {} deviations allowed below the equator",
            params.len(),
            n / 2
        )));
    }
    if !params.is_empty() {
        SpectralTuple::new(params.to_vec())?;
    }
    Ok(())
}

/// `B(lambda_1) ... B(lambda_r) |0>` in the `r`-deviation configuration
/// basis, unnormalized. The rightmost operator acts first.
pub fn build_state(params: &[Complex64], n: usize) -> Result<CVector> {
    validate_params(params, n)?;
    let mut v = Sparse::from([(0u32, c(1.0, 0.0))]);
    for &lambda in params.iter().rev() {
        v = monodromy(lambda, n)?.apply_sparse(Entry::B, &v);
    }
    let space = ConfigurationSpace::new(n, params.len())?;
    let mut out = CVector::zeros(space.dim());
    for (mask, z) in v {
        out[space.position(mask).expect("B adds one deviation")] += z;
    }
    Ok(out)
}

/// [`build_state`] with every block entry replaced by its residue modulo
/// the monic cubic `u`. Agrees with [`build_state`] when the parameters are
/// roots of `u`.
pub fn build_state_reduced(
    params: &[Complex64],
    n: usize,
    u: &ComplexPolynomial,
) -> Result<CVector> {
    validate_params(params, n)?;
    let r = params.len();
    let mut v = CVector::from_element(1, c(1.0, 0.0));
    for s in 1..=r {
        let lambda = params[r - s];
        let block = b_block_monomials(s, n)?.reduced_entries(u)?;
        let m = CMatrix::from_fn(block.len(), v.len(), |i, j| block[i][j].eval(lambda));
        v = m * v;
    }
    Ok(v)
}

/// Spectral norm of `[B(lambda), B(mu)]` over sources with up to `N/2`
/// deviations, and the matching scale `max ||B(x) B(y)||`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CommutatorNorm {
    pub norm: f64,
    pub scale: f64,
}

impl CommutatorNorm {
    pub fn relative(&self) -> f64 {
        if self.scale == 0.0 {
            0.0
        } else {
            self.norm / self.scale
        }
    }
}

fn spectral_norm(m: &CMatrix) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.clone()
        .singular_values()
        .iter()
        .copied()
        .fold(0.0, f64::max)
}

pub fn commutator_norm(lambda: Complex64, mu: Complex64, n: usize) -> Result<CommutatorNorm> {
    let ml = monodromy(lambda, n)?;
    let mm = monodromy(mu, n)?;
    let mut norm: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for s in 0..=(n / 2).min(n - 2) {
        let (l1, l2) = (ml.block(Entry::B, s)?, ml.block(Entry::B, s + 1)?);
        let (m1, m2) = (mm.block(Entry::B, s)?, mm.block(Entry::B, s + 1)?);
        let lm = &l2 * &m1;
        let mlm = &m2 * &l1;
        norm = norm.max(spectral_norm(&(&lm - &mlm)));
        scale = scale.max(spectral_norm(&lm)).max(spectral_norm(&mlm));
    }
    Ok(CommutatorNorm { norm, scale })
}

/// `A(lambda) + D(lambda)` on the `r`-deviation sector.
pub fn transfer_matrix(lambda: Complex64, n: usize, r: usize) -> Result<CMatrix> {
    let m = monodromy(lambda, n)?;
    Ok(m.block(Entry::A, r)? + m.block(Entry::D, r)?)
}

/// A density matrix over a labelled basis.
#[derive(Debug, Clone, Serialize)]
pub struct DensityMatrix {
    pub labels: Vec<String>,
    #[serde(serialize_with = "serde_complex::serialize_matrix")]
    pub matrix: CMatrix,
}

impl DensityMatrix {
    /// `|v><v| / <v|v>`.
    pub fn pure(v: &CVector, labels: Vec<String>) -> Result<Self> {
        let norm = v.norm();
        if norm == 0.0 {
            return Err(Error::domain("the zero vector has no density matrix"));
        }
        let u = v / c(norm, 0.0);
        Ok(Self {
            labels,
            matrix: &u * u.adjoint(),
        })
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    pub fn hermitian_deviation(&self) -> f64 {
        max_abs(&(&self.matrix - self.matrix.adjoint()))
    }

    /// `max |rho^2 - rho|`.
    pub fn idempotency_deviation(&self) -> f64 {
        max_abs(&(&self.matrix * &self.matrix - &self.matrix))
    }

    /// Smallest and largest eigenvalue.
    pub fn eigenvalue_range(&self) -> (f64, f64) {
        let h = (&self.matrix + self.matrix.adjoint()) * c(0.5, 0.0);
        let e = h.symmetric_eigenvalues();
        (e.min(), e.max())
    }

    pub fn conj(&self) -> Self {
        Self {
            labels: self.labels.clone(),
            matrix: self.matrix.map(|z| z.conj()),
        }
    }
}

/// The two qubit density matrices and their consistency checks. Deviations
/// are largest entry moduli.
#[derive(Debug, Clone, Serialize)]
pub struct QubitDensityReport {
    pub rho: [DensityMatrix; 2],
    /// Normalized wavelet coefficients of the two states.
    #[serde(serialize_with = "serialize_vectors")]
    pub states: [CVector; 2],
    /// `rho_1 + rho_2 - P` with `P` the `E = -5` projector.
    pub sum_rule: f64,
    /// `rho_1 rho_2`.
    pub orthogonality: f64,
    /// `pi rho_1 pi - rho_2`.
    pub parity_swap: f64,
    /// `rho_2 - rho_1*`.
    pub conjugation: f64,
    /// `|tr rho - 1|` per state.
    pub trace: [f64; 2],
    pub idempotency: [f64; 2],
    /// `||H v + 5 v||` for the normalized configuration-basis state.
    pub hamiltonian_residual: [f64; 2],
    /// `||S^2 v - (3/4) v||` likewise.
    pub spin_residual: [f64; 2],
}

fn serialize_vectors<S: serde::Serializer>(
    v: &[CVector; 2],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| {
        x.iter()
            .map(|z| serde_complex::pair(*z))
            .collect::<Vec<_>>()
    }))
}

/// Normalized `H` and `S^2` residuals of a configuration-basis state.
pub fn eigen_residuals(v: &CVector, n: usize, energy: f64, spin: f64) -> Result<(f64, f64)> {
    let space_r = (0..=n)
        .find(|&r| crate::lattice::binomial(n, r) == v.len())
        .ok_or_else(|| Error::domain("vector length matches no sector"))?;
    let h = hamiltonian_configuration(n, space_r)?.entries;
    let s2 = total_spin_squared_configuration(n, space_r)?.entries;
    let u = v / c(v.norm(), 0.0);
    let s = spin * (spin + 1.0);
    Ok((
        (&h * &u - &u * c(energy, 0.0)).norm(),
        (&s2 * &u - &u * c(s, 0.0)).norm(),
    ))
}

pub fn qubit_density_matrices() -> Result<QubitDensityReport> {
    let n = 7;
    let solution = solve_qubit_phases()?;
    let basis = wavelet_basis(RingSector::new(n, 3, 0)?)?;
    let labels = basis.labels();
    let mut rho = Vec::new();
    let mut states = Vec::new();
    let mut hamiltonian_residual = [0.0; 2];
    let mut spin_residual = [0.0; 2];
    for (v, spectral) in solution.spectral.iter().enumerate() {
        let full = build_state(spectral.params(), n)?;
        let (h, s) = eigen_residuals(&full, n, -5.0, 0.5)?;
        hamiltonian_residual[v] = h;
        spin_residual[v] = s;
        let w = fourier_project(&full, &basis)?;
        rho.push(DensityMatrix::pure(&w, labels.clone())?);
        states.push(&w / c(w.norm(), 0.0));
    }
    let [r1, r2]: [DensityMatrix; 2] = rho.try_into().expect("two states");
    let h = crate::heisenberg::hamiltonian_in_basis(&basis)?.entries;
    let projector = degenerate_projector(&h, -5.0, 1e-9)?.matrix;
    let pi = parity_matrix(&basis)?;
    Ok(QubitDensityReport {
        sum_rule: max_abs(&(&r1.matrix + &r2.matrix - projector)),
        orthogonality: max_abs(&(&r1.matrix * &r2.matrix)),
        parity_swap: max_abs(&(&pi * &r1.matrix * &pi - &r2.matrix)),
        conjugation: max_abs(&(&r2.matrix - r1.conj().matrix)),
        trace: [(r1.trace() - 1.0).norm(), (r2.trace() - 1.0).norm()],
        idempotency: [r1.idempotency_deviation(), r2.idempotency_deviation()],
        hamiltonian_residual,
        spin_residual,
        states: states.try_into().expect("two states"),
        rho: [r1, r2],
    })
}

/// One `(7, 2, 0)` Bethe state.
#[derive(Debug, Clone, Serialize)]
pub struct TwoMagnonState {
    pub spectral: SpectralTuple,
    /// Riggings ordered by string centre.
    pub riggings: Vec<i64>,
    pub quasimomentum: i64,
    #[serde(serialize_with = "serde_complex::serialize_complex")]
    pub energy: Complex64,
    /// `min_theta ||pi v - e^{i theta} v|| / ||v||` in the wavelet basis.
    pub parity_deviation: f64,
    pub hamiltonian_residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TwoMagnonReport {
    pub states: Vec<TwoMagnonState>,
}

/// Distance of `w` from the ray of `v`: `min_theta ||w - e^{i theta} v|| / ||v||`.
pub fn phase_distance(w: &CVector, v: &CVector) -> f64 {
    let overlap = v.dotc(w);
    let phase = if overlap.norm() == 0.0 {
        c(1.0, 0.0)
    } else {
        overlap / overlap.norm()
    };
    (w - v * phase).norm() / v.norm()
}

pub fn two_magnon_parity_check() -> Result<TwoMagnonReport> {
    let n = 7;
    let basis = wavelet_basis(RingSector::new(n, 2, 0)?)?;
    let pi = parity_matrix(&basis)?;
    let mut states = Vec::new();
    for seed in two_magnon_seeds() {
        let solution = solve_bethe_newton(n, 2, 0, &seed, 1e-13)?;
        let full = build_state(solution.spectral.params(), n)?;
        let energy = solution.residual.energy;
        let (hamiltonian_residual, _) = eigen_residuals(&full, n, energy.re, 2.5)?;
        let w = fourier_project(&full, &basis)?;
        let riggings = compute_riggings(&solution.phases, n)?
            .riggings()
            .ok_or_else(|| Error::Internal("unrigged string".into()))?;
        states.push(TwoMagnonState {
            parity_deviation: phase_distance(&(&pi * &w), &w),
            riggings,
            quasimomentum: solution.residual.quasimomentum,
            energy,
            hamiltonian_residual,
            spectral: solution.spectral,
        });
    }
    Ok(TwoMagnonReport { states })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heisenberg::hamiltonian_configuration;
    use std::f64::consts::PI;

    fn samples() -> Vec<Complex64> {
        vec![c(0.3, 0.0), c(-0.7, 0.2), c(1.1, -0.4), c(0.05, 0.9)]
    }

    #[test]
    fn lax_actions() {
        let lax = lax_apply(2, c(0.3, 0.0), 7).unwrap();
        assert_eq!(lax.apply(Entry::A, 0), Some((0, c(0.3, 0.5))));
        assert_eq!(lax.apply(Entry::A, 0b10), Some((0b10, c(0.3, -0.5))));
        assert_eq!(lax.apply(Entry::D, 0), Some((0, c(0.3, -0.5))));
        assert_eq!(lax.apply(Entry::B, 0), Some((0b10, I)));
        assert_eq!(lax.apply(Entry::B, 0b10), None);
        assert_eq!(lax.apply(Entry::C, 0b10), Some((0, I)));
        assert_eq!(lax.apply(Entry::C, 0), None);
        assert!(lax_apply(0, c(0.0, 0.0), 7).is_err());
        assert!(lax_apply(8, c(0.0, 0.0), 7).is_err());
    }

    #[test]
    fn single_creation_column() {
        for lambda in samples() {
            let b = b_block(lambda, 1, 7).unwrap().matrix;
            let p = lambda + c(0.0, 0.5);
            let q = lambda - c(0.0, 0.5);
            for j in 1..=7u32 {
                let expect = I * p.powu(7 - j) * q.powu(j - 1);
                assert!((b[(j as usize - 1, 0)] - expect).norm() <= 1e-12 * expect.norm());
            }
        }
    }

    #[test]
    fn vacuum_is_annihilated_by_c() {
        let m = monodromy(c(0.4, 0.1), 7).unwrap();
        let v = CVector::from_element(1, c(1.0, 0.0));
        assert!(m.block(Entry::C, 0).is_err());
        let a = m.apply(Entry::A, 0, &v).unwrap();
        assert!((a[0] - c(0.4, 0.6).powu(7)).norm() < 1e-12);
        let c1 = m.block(Entry::C, 1).unwrap();
        let b1 = m.block(Entry::B, 0).unwrap();
        assert_eq!(c1.shape(), (1, 7));
        assert_eq!(b1.shape(), (7, 1));
    }

    #[test]
    fn monomials_match_products() {
        for r in 1..=3 {
            let mono = b_block_monomials(r, 7).unwrap();
            for lambda in samples() {
                let direct = b_block(lambda, r, 7).unwrap().matrix;
                let diff = max_abs(&(mono.evaluate(lambda) - &direct));
                assert!(diff <= 1e-12 * max_abs(&direct).max(1.0));
            }
        }
        let degrees = |r| b_block_monomials(r, 7).unwrap().degrees();
        assert_eq!(degrees(1), BTreeSet::from([6]));
        assert_eq!(degrees(2), BTreeSet::from([4, 6]));
        assert_eq!(degrees(3), BTreeSet::from([2, 4, 6]));
    }

    #[test]
    fn b_block_guards() {
        assert!(matches!(
            b_block(c(0.0, 0.0), 4, 7),
            Err(Error::UnsupportedSector(_))
        ));
        assert!(matches!(
            b_block(c(0.0, 0.0), 0, 7),
            Err(Error::UnsupportedSector(_))
        ));
        assert!(matches!(
            monodromy(c(0.0, 0.0), 15),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn one_magnon_plane_wave() {
        for k in 1..7 {
            let a = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / 7.0);
            let lambda = crate::inverse_bethe::cayley_to_lambda(a).unwrap();
            let v = build_state(&[lambda], 7).unwrap();
            let h = hamiltonian_configuration(7, 1).unwrap().entries;
            let e = 2.0 * (2.0 * PI * k as f64 / 7.0).cos() - 2.0;
            assert!((&h * &v - &v * c(e, 0.0)).norm() < 1e-10 * v.norm());
        }
    }

    #[test]
    fn state_is_symmetric() {
        let params = [c(0.2, 0.1), c(-0.5, 0.0), c(0.9, -0.3)];
        let base = build_state(&params, 7).unwrap();
        for perm in [[1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]] {
            let p: Vec<_> = perm.iter().map(|&i| params[i]).collect();
            let v = build_state(&p, 7).unwrap();
            assert!((v - &base).norm() < 1e-10 * base.norm());
        }
        assert!(build_state(&[c(0.2, 0.0), c(0.2, 0.0)], 7).is_err());
        assert!(build_state(&[c(0.0, 0.5)], 7).is_err());
        assert!(build_state(&[c(0.1, 0.0), c(0.2, 0.0), c(0.3, 0.0), c(0.4, 0.0)], 7).is_err());
    }

    #[test]
    fn commutator_vanishes() {
        let r = commutator_norm(c(0.3, 0.1), c(-0.6, 0.4), 7).unwrap();
        assert!(r.norm < 1e-10 * r.scale, "{r:?}");
        let same = commutator_norm(c(0.3, 0.1), c(0.3, 0.1), 5).unwrap();
        assert_eq!(same.norm, 0.0);
    }

    #[test]
    fn transfer_matrix_commutes_with_h() {
        for r in 0..=3 {
            let t = transfer_matrix(c(0.37, -0.21), 7, r).unwrap();
            let h = hamiltonian_configuration(7, r).unwrap().entries;
            assert!(max_abs(&(&t * &h - &h * &t)) < 1e-9 * max_abs(&t).max(1.0));
        }
    }

    #[test]
    fn reduced_blocks_agree_at_roots() {
        let sol = solve_qubit_phases().unwrap();
        for v in 0..2 {
            let params = sol.spectral[v].params();
            let direct = build_state(params, 7).unwrap();
            let reduced = build_state_reduced(params, 7, &sol.u[v]).unwrap();
            assert!((&direct - reduced).norm() < 1e-10 * direct.norm());
        }
    }

    #[test]
    fn qubit_density_report() {
        let rep = qubit_density_matrices().unwrap();
        assert!(rep.sum_rule < 1e-10);
        assert!(rep.orthogonality < 1e-10);
        assert!(rep.parity_swap < 1e-10);
        assert!(rep.conjugation < 1e-10);
        for v in 0..2 {
            assert!(rep.trace[v] < 1e-12);
            assert!(rep.idempotency[v] < 1e-12);
            assert!(rep.hamiltonian_residual[v] < 1e-8);
            assert!(rep.spin_residual[v] < 1e-8);
        }
        let a = 2.0 / 30.0;
        let rho = &rep.rho[0].matrix;
        assert!((rho[(0, 0)] - a).norm() < 1e-12);
        assert!((rho[(3, 3)] - 6.0 * a).norm() < 1e-12);
        let cc = c(-1.0, 15f64.sqrt()) / 10.0;
        assert!((rho[(3, 4)] - cc).norm() < 1e-12);
        let b = c(-3.0, 15f64.sqrt()) / 30.0;
        assert!((rho[(0, 3)] - b).norm() < 1e-12);
    }

    #[test]
    fn two_magnon_states_are_parity_invariant() {
        let rep = two_magnon_parity_check().unwrap();
        assert_eq!(rep.states.len(), 2);
        for s in &rep.states {
            assert!(s.parity_deviation < 1e-8);
            assert_eq!(s.quasimomentum, 0);
            assert!(s.hamiltonian_residual < 1e-8);
        }
    }
}
