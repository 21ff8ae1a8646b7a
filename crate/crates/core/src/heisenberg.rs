//! Sector Hamiltonians of the isotropic Heisenberg ring and their spectral
//! data.
//!
//! The Hamiltonian acts on a configuration as `H|j> = sum_j' (|j'> - |j>)`,
//! summed over the configurations reachable by moving one deviation to a free
//! neighbouring node. The ferromagnetic vacuum has energy 0 and a single
//! magnon of quasimomentum `k` has energy `2 cos(2 pi k / N) - 2`.

use nalgebra::SymmetricEigen;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::lattice::{wavelet_basis, ConfigurationSpace, RingSector, WaveletBasis};
use crate::polynomials::{from_roots, ComplexPolynomial};
use crate::{serde_complex, CMatrix, Complex64, Error, Result};

/// Default tolerance for eigenvalue matching and clustering.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Largest matrix handed to the dense eigensolver.
pub const MAX_DENSE_DIM: usize = 1 << 14;
/// Largest matrix for which the exact integer characteristic polynomial is formed.
pub const MAX_EXACT_DIM: usize = 64;

const INTEGER_TOL: f64 = 1e-9;

/// Which basis a [`SectorMatrix`] is written in.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Basis {
    Configuration { n: usize, r: usize },
    Wavelet { n: usize, r: usize, k: i64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct SectorMatrix {
    pub basis: Basis,
    pub labels: Vec<String>,
    #[serde(serialize_with = "serde_complex::serialize_matrix")]
    pub entries: CMatrix,
}

impl SectorMatrix {
    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    /// Entries rounded to integers, when every entry is an integer.
    pub fn integer_entries(&self) -> Option<Vec<Vec<i64>>> {
        integer_matrix(&self.entries)
    }
}

fn integer_matrix(m: &CMatrix) -> Option<Vec<Vec<i64>>> {
    let mut rows = Vec::with_capacity(m.nrows());
    for i in 0..m.nrows() {
        let mut row = Vec::with_capacity(m.ncols());
        for j in 0..m.ncols() {
            let z = m[(i, j)];
            let r = z.re.round();
            if z.im.abs() > INTEGER_TOL || (z.re - r).abs() > INTEGER_TOL {
                return None;
            }
            row.push(r as i64);
        }
        rows.push(row);
    }
    Some(rows)
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// `H` in the basis of all `r`-deviation configurations.
pub fn hamiltonian_configuration(n: usize, r: usize) -> Result<SectorMatrix> {
    let space = ConfigurationSpace::new(n, r)?;
    let mut h = CMatrix::zeros(space.dim(), space.dim());
    for (col, config) in space.configs().iter().enumerate() {
        let mask = config.mask();
        for &j in config.deviations() {
            let from = 1u32 << (j - 1);
            for step in [1, n - 1] {
                let target = (j - 1 + step) % n;
                let to = 1u32 << target;
                if mask & to != 0 {
                    continue;
                }
                let row = space
                    .position(mask ^ from ^ to)
                    .expect("hop stays in sector");
                h[(row, col)] += one();
                h[(col, col)] -= one();
            }
        }
    }
    Ok(SectorMatrix {
        basis: Basis::Configuration { n, r },
        labels: space.labels(),
        entries: h,
    })
}

fn restrict_to_wavelets(basis: &WaveletBasis, op: &SectorMatrix) -> Result<SectorMatrix> {
    let sector = basis.sector();
    Ok(SectorMatrix {
        basis: Basis::Wavelet {
            n: sector.n(),
            r: sector.r(),
            k: sector.k(),
        },
        labels: basis.labels(),
        entries: basis.restrict(&op.entries)?,
    })
}

/// `H` restricted to the `(N, r, k)` wavelet basis.
pub fn hamiltonian_wavelet(sector: RingSector) -> Result<SectorMatrix> {
    let basis = wavelet_basis(sector)?;
    hamiltonian_in_basis(&basis)
}

pub fn hamiltonian_in_basis(basis: &WaveletBasis) -> Result<SectorMatrix> {
    let sector = basis.sector();
    let h = hamiltonian_configuration(sector.n(), sector.r())?;
    restrict_to_wavelets(basis, &h)
}

/// `S^2 = 3N/4 - N(N-1)/4 + sum_{i<j} P_ij` on the configuration basis, where
/// `P_ij` exchanges the spins at nodes `i` and `j`.
pub fn total_spin_squared_configuration(n: usize, r: usize) -> Result<SectorMatrix> {
    let space = ConfigurationSpace::new(n, r)?;
    let nf = n as f64;
    let shift = 3.0 * nf / 4.0 - nf * (nf - 1.0) / 4.0;
    let mut s2 = CMatrix::identity(space.dim(), space.dim()) * Complex64::new(shift, 0.0);
    for (col, config) in space.configs().iter().enumerate() {
        let mask = config.mask();
        for i in 0..n {
            for j in i + 1..n {
                let bi = (mask >> i) & 1;
                let bj = (mask >> j) & 1;
                let swapped = if bi == bj {
                    mask
                } else {
                    mask ^ (1 << i) ^ (1 << j)
                };
                let row = space.position(swapped).expect("exchange preserves sector");
                s2[(row, col)] += one();
            }
        }
    }
    Ok(SectorMatrix {
        basis: Basis::Configuration { n, r },
        labels: space.labels(),
        entries: s2,
    })
}

/// `S^2` restricted to the `(N, r, k)` wavelet basis.
pub fn total_spin_squared(sector: RingSector) -> Result<SectorMatrix> {
    let basis = wavelet_basis(sector)?;
    let s2 = total_spin_squared_configuration(sector.n(), sector.r())?;
    restrict_to_wavelets(&basis, &s2)
}

/// Characteristic polynomial `det(x I - M)`.
#[derive(Debug, Clone, Serialize)]
pub struct CharacteristicPolynomial {
    /// Exact integer coefficients, lowest degree first, when `M` is integral.
    #[serde(serialize_with = "serialize_bigints")]
    pub exact: Option<Vec<BigInt>>,
    /// Floating coefficients (always present).
    pub polynomial: ComplexPolynomial,
}

fn serialize_bigints<S: serde::Serializer>(
    v: &Option<Vec<BigInt>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_seq(v.iter().map(|c| c.to_string())),
        None => s.serialize_none(),
    }
}

impl CharacteristicPolynomial {
    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn exact_i64(&self) -> Option<Vec<i64>> {
        self.exact
            .as_ref()
            .and_then(|c| c.iter().map(|x| x.to_i64()).collect())
    }
}

/// Faddeev-LeVerrier in exact integers; every division is exact.
fn faddeev_leverrier(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = m.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // A M_k with M_1 = I.
    let mut amk: Vec<Vec<BigInt>> = m.to_vec();
    for k in 1..=n {
        let trace: BigInt = (0..n).map(|i| amk[i][i].clone()).sum();
        coeffs[n - k] = -trace / BigInt::from(k);
        if k < n {
            // M_{k+1} = A M_k + c_{n-k} I
            for (i, row) in amk.iter_mut().enumerate() {
                row[i] += &coeffs[n - k];
            }
            amk = matmul(m, &amk);
        }
    }
    coeffs
}

fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for (l, a_il) in a[i].iter().enumerate() {
            if a_il.is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[l][j].is_zero() {
                    out[i][j] += a_il * &b[l][j];
                }
            }
        }
    }
    out
}

fn to_bigint_matrix(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Exact integer coefficients for integer-valued `M` (up to
/// [`MAX_EXACT_DIM`]); otherwise floating coefficients from the spectrum.
pub fn characteristic_polynomial(m: &CMatrix) -> Result<CharacteristicPolynomial> {
    characteristic_with_spectrum(m, None)
}

fn characteristic_with_spectrum(
    m: &CMatrix,
    spectrum: Option<&[f64]>,
) -> Result<CharacteristicPolynomial> {
    if !m.is_square() {
        return Err(Error::domain(
            "characteristic polynomial of a non-square matrix",
        ));
    }
    if m.nrows() <= MAX_EXACT_DIM {
        if let Some(rows) = integer_matrix(m) {
            let exact = faddeev_leverrier(&to_bigint_matrix(&rows));
            let polynomial = ComplexPolynomial::new(
                exact
                    .iter()
                    .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0))
                    .collect(),
            );
            return Ok(CharacteristicPolynomial {
                exact: Some(exact),
                polynomial,
            });
        }
    }
    if let Some(values) = spectrum {
        let values: Vec<Complex64> = values.iter().map(|&e| Complex64::new(e, 0.0)).collect();
        return Ok(CharacteristicPolynomial {
            exact: None,
            polynomial: from_roots(&values),
        });
    }
    let values: Vec<Complex64> = m
        .clone()
        .schur()
        .eigenvalues()
        .ok_or_else(|| Error::Internal("Schur decomposition did not triangularize".into()))?
        .iter()
        .copied()
        .collect();
    Ok(CharacteristicPolynomial {
        exact: None,
        polynomial: from_roots(&values),
    })
}

/// An energy level and its degeneracy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Level {
    pub energy: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenReport {
    /// Ascending, repeated according to multiplicity.
    pub eigenvalues: Vec<f64>,
    /// Column `i` belongs to `eigenvalues[i]`.
    #[serde(serialize_with = "serde_complex::serialize_matrix")]
    pub eigenvectors: CMatrix,
    pub levels: Vec<Level>,
    /// `|| M v_i - e_i v_i ||` per pair.
    pub residuals: Vec<f64>,
    pub characteristic: CharacteristicPolynomial,
}

impl EigenReport {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    pub fn multiplicity_of(&self, energy: f64, tol: f64) -> usize {
        self.eigenvalues
            .iter()
            .filter(|&&e| (e - energy).abs() <= tol)
            .count()
    }
}

fn hermitian_deviation(m: &CMatrix) -> f64 {
    (m - m.adjoint()).norm() / m.norm().max(1.0)
}

/// Spectrum, eigenvectors and multiplicities of a Hermitian matrix.
pub fn eigen_decompose(m: &CMatrix, tol: f64) -> Result<EigenReport> {
    if !m.is_square() {
        return Err(Error::domain("eigendecomposition of a non-square matrix"));
    }
    if m.nrows() > MAX_DENSE_DIM {
        return Err(Error::Resource(format!(
            "dimension {} exceeds the dense limit {MAX_DENSE_DIM}",
            m.nrows()
        )));
    }
    let deviation = hermitian_deviation(m);
    if deviation > tol.max(1e-12) {
        return Err(Error::NotHermitian { deviation });
    }
    let sym = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(sym);
    let mut order: Vec<usize> = (0..m.nrows()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let eigenvectors = CMatrix::from_columns(
        &order
            .iter()
            .map(|&i| eig.eigenvectors.column(i).into_owned())
            .collect::<Vec<_>>(),
    );
    let residuals = (0..eigenvalues.len())
        .map(|i| {
            let v = eigenvectors.column(i);
            (m * v - v * Complex64::new(eigenvalues[i], 0.0)).norm()
        })
        .collect();
    let scale = eigenvalues.iter().map(|e| e.abs()).fold(1.0, f64::max);
    let mut levels: Vec<Level> = Vec::new();
    for &e in &eigenvalues {
        match levels.last_mut() {
            Some(l) if (e - l.energy).abs() <= tol * scale => {
                let m = l.multiplicity as f64;
                l.energy = (l.energy * m + e) / (m + 1.0);
                l.multiplicity += 1;
            }
            _ => levels.push(Level {
                energy: e,
                multiplicity: 1,
            }),
        }
    }
    let characteristic = characteristic_with_spectrum(m, Some(&eigenvalues))?;
    Ok(EigenReport {
        eigenvalues,
        eigenvectors,
        levels,
        residuals,
        characteristic,
    })
}

/// Orthogonal projector onto one eigenspace.
#[derive(Debug, Clone, Serialize)]
pub struct Projector {
    pub energy: f64,
    #[serde(serialize_with = "serde_complex::serialize_matrix")]
    pub matrix: CMatrix,
    /// Exact rational form `numerators / denominator`, when available.
    pub exact: Option<RationalMatrix>,
}

impl Projector {
    pub fn rank(&self) -> f64 {
        self.matrix.trace().re
    }
}

/// A rational matrix over a common positive denominator.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RationalMatrix {
    pub denominator: i64,
    pub numerators: Vec<Vec<i64>>,
}

impl RationalMatrix {
    pub fn entry(&self, i: usize, j: usize) -> BigRational {
        BigRational::new(
            BigInt::from(self.numerators[i][j]),
            BigInt::from(self.denominator),
        )
    }

    pub fn to_complex(&self) -> CMatrix {
        let n = self.numerators.len();
        let d = self.denominator as f64;
        CMatrix::from_fn(n, n, |i, j| {
            Complex64::new(self.numerators[i][j] as f64 / d, 0.0)
        })
    }
}

/// Projector onto the `E`-eigenspace of Hermitian `M`.
///
/// For integral `M` and integral `E` the projector is `q(M) / q(E)`, where
/// `q` is the exact characteristic polynomial with every `(x - E)` factor
/// removed; the entries are then exact rationals. Otherwise the eigenvectors
/// with `|e - E| <= tol` are summed as outer products.
pub fn degenerate_projector(m: &CMatrix, energy: f64, tol: f64) -> Result<Projector> {
    let report = eigen_decompose(m, tol)?;
    let scale = report
        .eigenvalues
        .iter()
        .map(|e| e.abs())
        .fold(1.0, f64::max);
    let members: Vec<usize> = (0..report.eigenvalues.len())
        .filter(|&i| (report.eigenvalues[i] - energy).abs() <= tol * scale)
        .collect();
    if members.is_empty() {
        return Err(Error::EigenvalueNotFound {
            target: energy,
            tol,
        });
    }
    let rounded = energy.round();
    if (energy - rounded).abs() <= tol {
        if let (Some(coeffs), Some(rows)) = (&report.characteristic.exact, integer_matrix(m)) {
            if let Some(exact) = exact_projector(coeffs, &rows, rounded as i64) {
                return Ok(Projector {
                    energy: rounded,
                    matrix: exact.to_complex(),
                    exact: Some(exact),
                });
            }
        }
    }
    let n = m.nrows();
    let mut p = CMatrix::zeros(n, n);
    for &i in &members {
        let v = report.eigenvectors.column(i);
        p += v * v.adjoint();
    }
    Ok(Projector {
        energy,
        matrix: p,
        exact: None,
    })
}

fn exact_projector(coeffs: &[BigInt], rows: &[Vec<i64>], energy: i64) -> Option<RationalMatrix> {
    let e = BigInt::from(energy);
    // Strip every factor (x - E) by synthetic division.
    let mut q: Vec<BigInt> = coeffs.to_vec();
    let mut stripped = 0;
    loop {
        let (quot, rem) = synthetic_division(&q, &e);
        if !rem.is_zero() {
            break;
        }
        q = quot;
        stripped += 1;
    }
    if stripped == 0 {
        return None;
    }
    let q_at_e = q.iter().rev().fold(BigInt::zero(), |acc, c| acc * &e + c);
    // Horner on matrices: q(M).
    let a = to_bigint_matrix(rows);
    let n = a.len();
    let mut acc = vec![vec![BigInt::zero(); n]; n];
    for c in q.iter().rev() {
        acc = matmul(&acc, &a);
        for (i, row) in acc.iter_mut().enumerate() {
            row[i] += c;
        }
    }
    let mut g = q_at_e.abs();
    for row in &acc {
        for x in row {
            g = num_integer_gcd(&g, x);
        }
    }
    let sign = if q_at_e.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let denominator = (&q_at_e / &g * &sign).to_i64()?;
    let numerators = acc
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| (x / &g * &sign).to_i64())
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    Some(RationalMatrix {
        denominator,
        numerators,
    })
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let t = &a % &b;
        a = b;
        b = t;
    }
    a
}

/// Divide `sum c_i x^i` by `(x - e)`; returns quotient and remainder.
fn synthetic_division(c: &[BigInt], e: &BigInt) -> (Vec<BigInt>, BigInt) {
    let n = c.len() - 1;
    if n == 0 {
        return (vec![BigInt::zero()], c[0].clone());
    }
    let mut quot = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (0..=n).rev() {
        let v = &c[i] + &carry * e;
        if i == 0 {
            return (quot, v);
        }
        quot[i - 1] = v.clone();
        carry = v;
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(rows: &[&[f64]]) -> CMatrix {
        CMatrix::from_fn(rows.len(), rows[0].len(), |i, j| {
            Complex64::new(rows[i][j], 0.0)
        })
    }

    fn heptagon_block() -> CMatrix {
        real(&[
            &[-2.0, 0.0, 0.0, 1.0, 1.0],
            &[0.0, -4.0, 2.0, 1.0, 1.0],
            &[0.0, 2.0, -4.0, 1.0, 1.0],
            &[1.0, 1.0, 1.0, -4.0, 1.0],
            &[1.0, 1.0, 1.0, 1.0, -4.0],
        ])
    }

    #[test]
    fn single_magnon_is_circulant() {
        let h = hamiltonian_configuration(7, 1)
            .unwrap()
            .integer_entries()
            .unwrap();
        for i in 0..7 {
            for j in 0..7 {
                let d = (i as i64 - j as i64).rem_euclid(7);
                let expect = match d {
                    0 => -2,
                    1 | 6 => 1,
                    _ => 0,
                };
                assert_eq!(h[i][j], expect);
            }
        }
    }

    #[test]
    fn vacuum_block_is_zero() {
        let h = hamiltonian_configuration(7, 0).unwrap();
        assert_eq!(h.integer_entries().unwrap(), vec![vec![0]]);
    }

    #[test]
    fn three_deviation_channels() {
        let h = hamiltonian_configuration(7, 3).unwrap();
        assert_eq!(h.dim(), 35);
        let e = h.integer_entries().unwrap();
        for j in 0..35 {
            assert_eq!((0..35).map(|i| e[i][j]).sum::<i64>(), 0);
            assert!([-2, -4, -6].contains(&e[j][j]));
        }
    }

    #[test]
    fn single_magnon_wavelet_energy() {
        for k in -3..=3 {
            let h = hamiltonian_wavelet(RingSector::new(7, 1, k).unwrap()).unwrap();
            let expect = 2.0 * (2.0 * std::f64::consts::PI * k as f64 / 7.0).cos() - 2.0;
            assert!((h.entries[(0, 0)] - expect).norm() < 1e-12);
        }
    }

    #[test]
    fn characteristic_polynomial_examples() {
        let cp = characteristic_polynomial(&heptagon_block()).unwrap();
        // x (x+2) (x+6) (x+5)^2 = x^5 + 18x^4 + 117x^3 + 320x^2 + 300x
        assert_eq!(cp.exact_i64().unwrap(), vec![0, 300, 320, 117, 18, 1]);
        let zero = characteristic_polynomial(&CMatrix::zeros(1, 1)).unwrap();
        assert_eq!(zero.exact_i64().unwrap(), vec![0, 1]);
        let fractional = real(&[&[0.5, 0.0], &[0.0, 1.5]]);
        let cp = characteristic_polynomial(&fractional).unwrap();
        assert!(!cp.is_exact());
        let expect = [0.75, -2.0, 1.0];
        for (c, e) in cp.polynomial.coeffs().iter().zip(expect) {
            assert!((c - e).norm() < 1e-12);
        }
    }

    #[test]
    fn eigen_examples() {
        let report = eigen_decompose(&heptagon_block(), DEFAULT_TOL).unwrap();
        let levels: Vec<_> = report
            .levels
            .iter()
            .map(|l| (l.energy.round() as i64, l.multiplicity))
            .collect();
        assert_eq!(levels, vec![(-6, 1), (-5, 2), (-2, 1), (0, 1)]);
        assert!(report.max_residual() < 1e-12);
        let id = eigen_decompose(&CMatrix::identity(2, 2), DEFAULT_TOL).unwrap();
        assert_eq!(
            id.levels,
            vec![Level {
                energy: 1.0,
                multiplicity: 2
            }]
        );
        let bad = real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert!(matches!(
            eigen_decompose(&bad, DEFAULT_TOL),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn exact_projector_of_degenerate_level() {
        let p = degenerate_projector(&heptagon_block(), -5.0, DEFAULT_TOL).unwrap();
        let exact = p.exact.clone().unwrap();
        assert_eq!(exact.denominator, 15);
        assert_eq!(
            exact.numerators,
            vec![
                vec![2, 2, 2, -3, -3],
                vec![2, 2, 2, -3, -3],
                vec![2, 2, 2, -3, -3],
                vec![-3, -3, -3, 12, -3],
                vec![-3, -3, -3, -3, 12],
            ]
        );
        assert!((p.rank() - 2.0).abs() < 1e-12);
        let id = degenerate_projector(&CMatrix::identity(3, 3), 1.0, DEFAULT_TOL).unwrap();
        assert!((id.matrix - CMatrix::identity(3, 3)).norm() < 1e-14);
        assert!(matches!(
            degenerate_projector(&heptagon_block(), -3.0, DEFAULT_TOL),
            Err(Error::EigenvalueNotFound { .. })
        ));
    }

    #[test]
    fn numeric_projector_for_irrational_level() {
        // One-magnon levels of a 5-ring are doubly degenerate and irrational.
        let h = hamiltonian_configuration(5, 1).unwrap().entries;
        let e = 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos() - 2.0;
        let p = degenerate_projector(&h, e, 1e-9).unwrap();
        assert!(p.exact.is_none());
        assert!((p.rank() - 2.0).abs() < 1e-10);
        assert!((&p.matrix * &p.matrix - &p.matrix).norm() < 1e-10);
        assert!((&h * &p.matrix - &p.matrix * Complex64::new(e, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn vacuum_has_maximal_spin() {
        let s2 = total_spin_squared_configuration(7, 0).unwrap();
        assert!((s2.entries[(0, 0)] - 63.0 / 4.0).norm() < 1e-12);
    }

    #[test]
    fn spin_commutes_with_hamiltonian() {
        let h = hamiltonian_configuration(7, 3).unwrap().entries;
        let s2 = total_spin_squared_configuration(7, 3).unwrap().entries;
        assert!((&h * &s2 - &s2 * &h).norm() < 1e-10);
    }
}
