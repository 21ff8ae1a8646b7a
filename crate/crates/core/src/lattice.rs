//! Ring combinatorics: spin-deviation configurations, translation orbits,
//! symmetry-adapted bases and the parity reflection.
//!
//! Nodes are numbered `1..=N`, with node `N` identified with `0 mod N`.
//! A configuration is stored both as its sorted node list and as a bit mask
//! (bit `j - 1` set when node `j` carries a deviation).

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::{CMatrix, CVector, Complex64, Error, Result, MAX_NODES, MIN_NODES};

/// Fixed orbit order of the three-deviation heptagon sector. Everything else
/// is ordered lexicographically.
const HEPTAGON_THREE_ORDER: [[usize; 3]; 5] =
    [[1, 1, 5], [1, 3, 3], [2, 2, 3], [1, 2, 4], [1, 4, 2]];

pub(crate) fn check_ring_size(n: usize) -> Result<()> {
    if !(MIN_NODES..=MAX_NODES).contains(&n) {
        return Err(Error::domain(format!(
            "ring size {n} outside [{MIN_NODES}, {MAX_NODES}]"
        )));
    }
    Ok(())
}

/// Reduce a quasimomentum label into the symmetric zone `(-N/2, N/2]`.
pub fn reduce_zone(k: i64, n: usize) -> i64 {
    let n = n as i64;
    let mut k = k.rem_euclid(n);
    if 2 * k > n {
        k -= n;
    }
    k
}

/// `exp(2 pi i / N)`.
pub fn root_of_unity(n: usize) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI / n as f64)
}

/// Sector `H^r_k` of an `N`-node ring: `r` deviations, quasimomentum `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RingSector {
    n: usize,
    r: usize,
    k: i64,
}

impl RingSector {
    pub fn new(n: usize, r: usize, k: i64) -> Result<Self> {
        check_ring_size(n)?;
        if r > n / 2 {
            return Err(Error::domain(format!(
                "deviation count {r} above the equator of a {n}-node ring"
            )));
        }
        Ok(Self {
            n,
            r,
            k: reduce_zone(k, n),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// Dimension of the full `r`-deviation space, `binomial(N, r)`.
    pub fn full_dimension(&self) -> usize {
        binomial(self.n, self.r)
    }

    /// Total magnetization `N/2 - r`.
    pub fn magnetization(&self) -> f64 {
        self.n as f64 / 2.0 - self.r as f64
    }
}

pub fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Positions of the spin deviations on an `N`-node ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpinConfiguration {
    n: usize,
    deviations: Vec<usize>,
}

impl SpinConfiguration {
    pub fn new(n: usize, mut deviations: Vec<usize>) -> Result<Self> {
        check_ring_size(n)?;
        deviations.sort_unstable();
        if deviations.iter().any(|&j| j == 0 || j > n) {
            return Err(Error::domain(format!(
                "deviation nodes {deviations:?} outside 1..={n}"
            )));
        }
        if deviations.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::domain(format!(
                "repeated deviation node in {deviations:?}"
            )));
        }
        Ok(Self { n, deviations })
    }

    pub fn from_mask(n: usize, mask: u32) -> Self {
        let deviations = (1..=n).filter(|j| mask & (1 << (j - 1)) != 0).collect();
        Self { n, deviations }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn deviations(&self) -> &[usize] {
        &self.deviations
    }

    pub fn r(&self) -> usize {
        self.deviations.len()
    }

    pub fn mask(&self) -> u32 {
        self.deviations.iter().fold(0, |m, &j| m | (1 << (j - 1)))
    }

    pub fn is_occupied(&self, node: usize) -> bool {
        self.deviations.binary_search(&node).is_ok()
    }

    /// Translate every deviation by `shift` nodes (`j -> j + shift mod N`).
    pub fn translate(&self, shift: i64) -> Self {
        let n = self.n as i64;
        let mut deviations: Vec<usize> = self
            .deviations
            .iter()
            .map(|&j| ((j as i64 - 1 + shift).rem_euclid(n) + 1) as usize)
            .collect();
        deviations.sort_unstable();
        Self {
            n: self.n,
            deviations,
        }
    }

    pub fn permute(&self, perm: &NodePermutation) -> Self {
        let mut deviations: Vec<usize> = self.deviations.iter().map(|&j| perm.image(j)).collect();
        deviations.sort_unstable();
        Self {
            n: self.n,
            deviations,
        }
    }
}

impl fmt::Display for SpinConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}>", self.deviations.iter().join(","))
    }
}

/// All `binomial(N, r)` configurations in lexicographic order of their node lists.
pub fn enumerate_configurations(n: usize, r: usize) -> Result<Vec<SpinConfiguration>> {
    check_ring_size(n)?;
    if r > n {
        return Err(Error::domain(format!("{r} deviations on a {n}-node ring")));
    }
    Ok((1..=n)
        .combinations(r)
        .map(|deviations| SpinConfiguration { n, deviations })
        .collect())
}

/// Configurations of one `(N, r)` sector with a mask-to-position lookup.
#[derive(Debug, Clone)]
pub struct ConfigurationSpace {
    n: usize,
    r: usize,
    configs: Vec<SpinConfiguration>,
    index: HashMap<u32, usize>,
}

impl ConfigurationSpace {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        let configs = enumerate_configurations(n, r)?;
        let index = configs
            .iter()
            .enumerate()
            .map(|(i, c)| (c.mask(), i))
            .collect();
        Ok(Self {
            n,
            r,
            configs,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.configs.len()
    }

    pub fn configs(&self) -> &[SpinConfiguration] {
        &self.configs
    }

    pub fn position(&self, mask: u32) -> Option<usize> {
        self.index.get(&mask).copied()
    }

    pub fn position_of(&self, config: &SpinConfiguration) -> Option<usize> {
        self.position(config.mask())
    }

    pub fn labels(&self) -> Vec<String> {
        self.configs.iter().map(|c| c.to_string()).collect()
    }
}

fn lexicographic_min_rotation(t: &[usize]) -> Vec<usize> {
    (0..t.len())
        .map(|s| t[s..].iter().chain(&t[..s]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// Distances between consecutive deviations, rotated to the lexicographically
/// smallest representative.
pub fn relative_positions(config: &SpinConfiguration) -> Result<Vec<usize>> {
    let j = config.deviations();
    let r = j.len();
    if r == 0 {
        return Err(Error::domain("the vacuum has no relative positions"));
    }
    let n = config.n();
    let t: Vec<usize> = (0..r)
        .map(|a| {
            let next = j[(a + 1) % r];
            (next + n - j[a]) % n
        })
        .map(|d| if d == 0 { n } else { d })
        .collect();
    Ok(lexicographic_min_rotation(&t))
}

/// One translation orbit, identified by its canonical relative-position tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicOrbit {
    triad: Vec<usize>,
    /// `members[j]` is the representative translated by `j` nodes.
    members: Vec<SpinConfiguration>,
}

impl CyclicOrbit {
    fn from_triad(n: usize, triad: Vec<usize>) -> Self {
        let mut node = 1;
        let mut deviations = Vec::with_capacity(triad.len());
        for &t in &triad {
            deviations.push(node);
            node += t;
        }
        deviations.sort_unstable();
        let representative = SpinConfiguration { n, deviations };
        let mut members = vec![representative.clone()];
        loop {
            let next = members.last().unwrap().translate(1);
            if next == representative {
                break;
            }
            members.push(next);
        }
        Self { triad, members }
    }

    pub fn triad(&self) -> &[usize] {
        &self.triad
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[SpinConfiguration] {
        &self.members
    }

    pub fn representative(&self) -> &SpinConfiguration {
        &self.members[0]
    }

    pub fn is_regular(&self) -> bool {
        self.members[0].n() == self.size()
    }

    /// An orbit of size `d` carries quasimomentum `k` only if `N | k d`.
    pub fn supports(&self, k: i64) -> bool {
        let n = self.members[0].n() as i64;
        (k * self.size() as i64).rem_euclid(n) == 0
    }

    pub fn label(&self) -> String {
        format!("({})", self.triad.iter().join(","))
    }
}

/// Partition the `(N, r)` configurations into translation orbits.
pub fn orbit_decompose(n: usize, r: usize) -> Result<Vec<CyclicOrbit>> {
    check_ring_size(n)?;
    if r > n {
        return Err(Error::domain(format!(
            "orbit decomposition needs r <= N, got r = {r}"
        )));
    }
    if r == 0 {
        return Ok(vec![CyclicOrbit::from_triad(n, Vec::new())]);
    }
    let mut triads: Vec<Vec<usize>> = enumerate_configurations(n, r)?
        .iter()
        .map(relative_positions)
        .collect::<Result<_>>()?;
    triads.sort();
    triads.dedup();
    if (n, r) == (7, 3) {
        triads = HEPTAGON_THREE_ORDER.iter().map(|t| t.to_vec()).collect();
    }
    Ok(triads
        .into_iter()
        .map(|t| CyclicOrbit::from_triad(n, t))
        .collect())
}

/// One symmetry-adapted basis vector.
#[derive(Debug, Clone)]
pub struct Wavelet {
    pub orbit: CyclicOrbit,
    pub vector: CVector,
}

/// Orthonormal translation-adapted basis of the `(N, r, k)` sector.
#[derive(Debug, Clone)]
pub struct WaveletBasis {
    sector: RingSector,
    space: ConfigurationSpace,
    wavelets: Vec<Wavelet>,
    /// Orbits whose stabilizer is incompatible with `k`; they carry no vector.
    excluded: Vec<CyclicOrbit>,
}

/// Build `|orbit|^{-1/2} sum_j w^{-k j} T^j |representative>` for every orbit
/// compatible with `k`.
pub fn wavelet_basis(sector: RingSector) -> Result<WaveletBasis> {
    let (n, r, k) = (sector.n(), sector.r(), sector.k());
    let space = ConfigurationSpace::new(n, r)?;
    let omega = root_of_unity(n);
    let mut wavelets = Vec::new();
    let mut excluded = Vec::new();
    for orbit in orbit_decompose(n, r)? {
        if !orbit.supports(k) {
            excluded.push(orbit);
            continue;
        }
        let norm = (orbit.size() as f64).sqrt().recip();
        let mut vector = CVector::zeros(space.dim());
        for (j, member) in orbit.members().iter().enumerate() {
            let pos = space.position_of(member).expect("orbit member in sector");
            vector[pos] = omega.powi(-(k as i32) * j as i32) * norm;
        }
        wavelets.push(Wavelet { orbit, vector });
    }
    Ok(WaveletBasis {
        sector,
        space,
        wavelets,
        excluded,
    })
}

impl WaveletBasis {
    pub fn sector(&self) -> RingSector {
        self.sector
    }

    pub fn space(&self) -> &ConfigurationSpace {
        &self.space
    }

    pub fn wavelets(&self) -> &[Wavelet] {
        &self.wavelets
    }

    pub fn excluded(&self) -> &[CyclicOrbit] {
        &self.excluded
    }

    pub fn len(&self) -> usize {
        self.wavelets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.wavelets.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.wavelets.iter().map(|w| w.orbit.label()).collect()
    }

    /// Columns are the wavelet vectors (`dim x len`).
    pub fn matrix(&self) -> CMatrix {
        CMatrix::from_columns(
            &self
                .wavelets
                .iter()
                .map(|w| w.vector.clone())
                .collect::<Vec<_>>(),
        )
    }

    /// `W^dagger X W` for an operator given in the configuration basis.
    pub fn restrict(&self, op: &CMatrix) -> Result<CMatrix> {
        if op.nrows() != self.space.dim() || op.ncols() != self.space.dim() {
            return Err(Error::domain(format!(
                "operator is {}x{}, sector dimension is {}",
                op.nrows(),
                op.ncols(),
                self.space.dim()
            )));
        }
        let w = self.matrix();
        Ok(w.adjoint() * op * w)
    }
}

/// Coefficients `<wavelet_a | v>` of a full-sector vector.
pub fn fourier_project(v: &CVector, basis: &WaveletBasis) -> Result<CVector> {
    if v.len() != basis.space().dim() {
        return Err(Error::domain(format!(
            "vector length {} does not match sector dimension {}",
            v.len(),
            basis.space().dim()
        )));
    }
    Ok(CVector::from_iterator(
        basis.len(),
        basis.wavelets().iter().map(|w| w.vector.dotc(v)),
    ))
}

/// A permutation of ring nodes, `image[j - 1] = pi(j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodePermutation {
    image: Vec<usize>,
}

impl NodePermutation {
    pub fn image(&self, node: usize) -> usize {
        self.image[node - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn compose(&self, other: &NodePermutation) -> NodePermutation {
        NodePermutation {
            image: (1..=self.image.len())
                .map(|j| self.image(other.image(j)))
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| j == i + 1)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.image.len())
            .filter(|&j| self.image(j) == j)
            .collect()
    }

    /// The induced permutation matrix on the `(N, r)` configuration space.
    pub fn configuration_matrix(&self, space: &ConfigurationSpace) -> CMatrix {
        let mut m = CMatrix::zeros(space.dim(), space.dim());
        for (col, config) in space.configs().iter().enumerate() {
            let row = space
                .position_of(&config.permute(self))
                .expect("permutation preserves deviation count");
            m[(row, col)] = Complex64::new(1.0, 0.0);
        }
        m
    }
}

/// Reflection through node `N`: `j -> (N - j) mod N`, node `N` fixed.
pub fn parity_permutation(n: usize) -> NodePermutation {
    NodePermutation {
        image: (1..=n).map(|j| if j == n { n } else { n - j }).collect(),
    }
}

/// Parity restricted to a wavelet basis. Parity maps `k` to `-k`, so only
/// sectors with `2k = 0 mod N` are closed under it.
pub fn parity_matrix(basis: &WaveletBasis) -> Result<CMatrix> {
    let sector = basis.sector();
    if (2 * sector.k()).rem_euclid(sector.n() as i64) != 0 {
        return Err(Error::UnsupportedSector(format!(
            "parity maps k = {} to {}; use parity_cross_sector",
            sector.k(),
            reduce_zone(-sector.k(), sector.n())
        )));
    }
    parity_cross_sector(basis, basis)
}

/// Matrix elements `<to_a | pi | from_b>` between two wavelet bases of the
/// same `(N, r)`; the natural pairing is `from = k`, `to = -k`.
pub fn parity_cross_sector(from: &WaveletBasis, to: &WaveletBasis) -> Result<CMatrix> {
    let (a, b) = (from.sector(), to.sector());
    if a.n() != b.n() || a.r() != b.r() {
        return Err(Error::domain("parity pairs bases of one (N, r) only"));
    }
    let pi = parity_permutation(a.n()).configuration_matrix(from.space());
    Ok(to.matrix().adjoint() * pi * from.matrix())
}
