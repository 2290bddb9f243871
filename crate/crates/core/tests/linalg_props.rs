use proptest::prelude::*;
use symqudit::linalg::{
    anticommutator, cluster_eigenvalues, commutator, frobenius_inner, hermitian_eig, kron, real_inner,
    ComplexMatrix, OrthonormalSpan, C64, RANK_TOL,
};

fn matrix(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), dim * dim).prop_map(move |v| {
        ComplexMatrix::from_entries(dim, v.into_iter().map(|(re, im)| C64::new(re, im)).collect()).unwrap()
    })
}

fn hermitian(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    matrix(dim).prop_map(|a| (&a + &a.adjoint()).scale_real(0.5))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jacobi_identity(a in matrix(4), b in matrix(4), c in matrix(4)) {
        let t1 = commutator(&a, &commutator(&b, &c).unwrap()).unwrap();
        let t2 = commutator(&b, &commutator(&c, &a).unwrap()).unwrap();
        let t3 = commutator(&c, &commutator(&a, &b).unwrap()).unwrap();
        prop_assert!((&(&t1 + &t2) + &t3).max_abs() < 1e-10);
    }

    #[test]
    fn commutator_antisymmetric_and_bilinear(a in matrix(3), b in matrix(3), c in matrix(3), s in -3.0f64..3.0) {
        let ab = commutator(&a, &b).unwrap();
        let ba = commutator(&b, &a).unwrap();
        prop_assert!((&ab + &ba).max_abs() < 1e-12);
        let lhs = commutator(&(&a.scale_real(s) + &c), &b).unwrap();
        let rhs = &ab.scale_real(s) + &commutator(&c, &b).unwrap();
        prop_assert!((&lhs - &rhs).max_abs() < 1e-10);
    }

    #[test]
    fn ad_invariance(a in matrix(3), b in matrix(3), c in matrix(3)) {
        // ad_A is adjoint to ad_{A†} under Tr(XY†).
        let lhs = frobenius_inner(&commutator(&a, &b).unwrap(), &c).unwrap();
        let rhs = frobenius_inner(&b, &commutator(&a.adjoint(), &c).unwrap()).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-10);
        // For skew-Hermitian X, ad_X is skew under the same inner product.
        let x = (&a - &a.adjoint()).scale_real(0.5);
        let l2 = frobenius_inner(&commutator(&x, &b).unwrap(), &c).unwrap();
        let r2 = frobenius_inner(&b, &commutator(&x, &c).unwrap()).unwrap();
        prop_assert!((l2 + r2).norm() < 1e-10);
    }

    #[test]
    fn eig_reconstructs(h in hermitian(5)) {
        let eig = hermitian_eig(&h).unwrap();
        let mut rebuilt = ComplexMatrix::zeros(5);
        for (lambda, v) in eig.values.iter().zip(&eig.vectors) {
            rebuilt.axpy(*lambda, &ComplexMatrix::outer(v, v));
        }
        prop_assert!((&h - &rebuilt).frobenius_norm() <= 1e-10 * h.frobenius_norm().max(1.0));
        prop_assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn kron_mixed_product(a in matrix(2), b in matrix(3), c in matrix(2), d in matrix(3)) {
        let lhs = &kron(&a, &b) * &kron(&c, &d);
        let rhs = kron(&(&a * &c), &(&b * &d));
        prop_assert!((&lhs - &rhs).max_abs() < 1e-10);
    }

    #[test]
    fn extend_is_idempotent(ms in prop::collection::vec(matrix(3), 1..8)) {
        let mut span = OrthonormalSpan::new(3, RANK_TOL);
        for m in &ms {
            span.orthonormal_extend(m).unwrap();
        }
        let dim = span.dim();
        for b in span.basis().to_vec() {
            prop_assert!(!span.orthonormal_extend(&b).unwrap());
        }
        for m in &ms {
            prop_assert!(!span.orthonormal_extend(m).unwrap());
        }
        prop_assert_eq!(span.dim(), dim);
        for (i, x) in span.basis().iter().enumerate() {
            for (j, y) in span.basis().iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                prop_assert!((real_inner(x, y) - expected).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn clustering_partitions_sorted_values(vals in prop::collection::vec(-10.0f64..10.0, 0..30)) {
        let c = cluster_eigenvalues(&vals, 1e-3);
        let total: usize = c.sizes().iter().sum();
        prop_assert_eq!(total, vals.len());
        let scale = vals.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        for pair in c.clusters.windows(2) {
            let gap = c.eigenvalues[pair[1][0]] - c.eigenvalues[*pair[0].last().unwrap()];
            prop_assert!(gap > 1e-3 * scale);
        }
    }
}

#[test]
fn anticommutator_examples() {
    let i = C64::new(0.0, 1.0);
    let sx = ComplexMatrix::from_real_rows(&[&[0., 1.], &[1., 0.]]);
    let sy = ComplexMatrix::from_fn(2, |r, c| match (r, c) {
        (0, 1) => -i,
        (1, 0) => i,
        _ => C64::new(0.0, 0.0),
    });
    assert!(anticommutator(&sx, &sy).unwrap().max_abs() < 1e-15);
    let id = ComplexMatrix::identity(2);
    assert_eq!(anticommutator(&id, &sy).unwrap(), sy.scale_real(2.0));
    assert!(anticommutator(&id, &ComplexMatrix::identity(3)).is_err());
}

#[test]
fn cluster_examples() {
    let c = cluster_eigenvalues(&[1.0, 1.0 + 1e-12, 5.0], 1e-9);
    assert_eq!(c.clusters, vec![vec![0, 1], vec![2]]);
    assert_eq!(cluster_eigenvalues(&[2.0; 4], 1e-9).sizes(), vec![4]);
}

#[test]
fn eig_rejects_non_hermitian() {
    let m = ComplexMatrix::from_real_rows(&[&[0., 1.], &[0., 0.]]);
    assert!(hermitian_eig(&m).is_err());
}
