//! Structural invariants over small rings.

use bethe_core::algebraic_bethe::{
    b_block, b_block_monomials, commutator_norm, max_abs, transfer_matrix,
};
use bethe_core::heisenberg::{eigen_decompose, hamiltonian_configuration, hamiltonian_wavelet};
use bethe_core::lattice::{binomial, wavelet_basis, RingSector};
use bethe_core::polynomials::{from_roots, reduce_mod_cubic, root_multiset, ComplexPolynomial};
use bethe_core::Complex64;
use proptest::prelude::*;

fn complex() -> impl Strategy<Value = Complex64> {
    (-1.5f64..1.5, -1.0f64..1.0).prop_map(|(re, im)| Complex64::new(re, im))
}

#[test]
fn wavelet_blocks_partition_the_spectrum() {
    for (n, r) in [(5, 2), (6, 2), (7, 3), (8, 3)] {
        let full =
            eigen_decompose(&hamiltonian_configuration(n, r).unwrap().entries, 1e-9).unwrap();
        let mut blocks = Vec::new();
        let mut dim = 0;
        for k in 0..n as i64 {
            let h = hamiltonian_wavelet(RingSector::new(n, r, k).unwrap()).unwrap();
            dim += h.dim();
            if h.dim() > 0 {
                blocks.extend(eigen_decompose(&h.entries, 1e-9).unwrap().eigenvalues);
            }
        }
        assert_eq!(dim, binomial(n, r));
        blocks.sort_by(f64::total_cmp);
        for (a, b) in full.eigenvalues.iter().zip(&blocks) {
            assert!((a - b).abs() < 1e-9, "N={n} r={r}: {a} vs {b}");
        }
    }
}

#[test]
fn wavelets_are_orthonormal() {
    for k in 0..7 {
        let basis = wavelet_basis(RingSector::new(7, 3, k).unwrap()).unwrap();
        let w = basis.matrix();
        let gram = w.adjoint() * &w;
        let id = bethe_core::CMatrix::identity(gram.nrows(), gram.ncols());
        assert!(max_abs(&(gram - id)) < 1e-12);
    }
}

#[test]
fn monomial_block_matches_numeric_block() {
    for r in 1..=3 {
        let m = b_block_monomials(r, 7).unwrap();
        let lambda = Complex64::new(0.3, -0.7);
        let numeric = b_block(lambda, r, 7).unwrap().matrix;
        assert!(max_abs(&(m.evaluate(lambda) - numeric)) < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn b_operators_commute(l in complex(), m in complex(), n in 3usize..8) {
        let c = commutator_norm(l, m, n).unwrap();
        prop_assert!(c.relative() < 1e-10);
    }

    #[test]
    fn transfer_matrices_commute(l in complex(), m in complex()) {
        let t1 = transfer_matrix(l, 6, 3).unwrap();
        let t2 = transfer_matrix(m, 6, 3).unwrap();
        let scale = max_abs(&t1) * max_abs(&t2);
        prop_assert!(max_abs(&(&t1 * &t2 - &t2 * &t1)) <= 1e-10 * scale);
    }

    #[test]
    fn roots_round_trip(zs in proptest::collection::vec(complex(), 1..7)) {
        let p = from_roots(&zs);
        let found = root_multiset(&p, 1e-9).unwrap();
        prop_assert_eq!(found.len(), zs.len());
        for z in &zs {
            let d = found.iter().map(|w| (w - z).norm()).fold(f64::INFINITY, f64::min);
            prop_assert!(d < 1e-5, "root {} missing", z);
        }
    }

    #[test]
    fn cubic_reduction_agrees_at_roots(
        zs in proptest::collection::vec(complex(), 3),
        coeffs in proptest::collection::vec(-2.0f64..2.0, 1..8),
    ) {
        let u = from_roots(&zs);
        let p = ComplexPolynomial::from_real(&coeffs);
        let rem = reduce_mod_cubic(&p, &u).unwrap();
        prop_assert!(rem.degree() <= 2);
        for z in &zs {
            prop_assert!((rem.eval(*z) - p.eval(*z)).norm() <= 1e-9 * (1.0 + p.eval(*z).norm()));
        }
    }
}
