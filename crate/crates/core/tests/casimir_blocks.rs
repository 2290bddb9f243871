use symqudit::casimir::{
    build_c2, build_c3, c2_eigenvalue, c2_is_injective, center_basis, center_component_dim, center_project,
    degeneracy_disc_scan, degeneracy_search, isotypic_blocks, qubit_center_element, CasimirSet,
};
use symqudit::closure::restrict_to_block;
use symqudit::generators::{
    all_permutations, collective, gell_mann_basis, permutation_operator, symmetric_sum, two_body_hamiltonian,
    SymmetricMultiIndex,
};
use symqudit::linalg::{commutator, ComplexMatrix, OrthonormalSpan, I};
use symqudit::rep_theory::IWeight;

#[test]
fn casimirs_commute_with_symmetries() {
    for (d, n) in [(2usize, 3usize), (3, 2), (3, 3)] {
        let set = CasimirSet::new(d, n).unwrap();
        let basis = gell_mann_basis(d).unwrap();
        let mut ops: Vec<ComplexMatrix> = basis.traceless().iter().map(|e| collective(e, n)).collect();
        ops.extend(all_permutations(n).iter().map(|p| permutation_operator(p, d)));
        for op in &ops {
            assert!(commutator(&set.c2, op).unwrap().max_abs() < 1e-9);
            if let Some(c3) = &set.c3 {
                assert!(commutator(c3, op).unwrap().max_abs() < 1e-9);
            }
        }
        if let Some(c3) = &set.c3 {
            assert!(commutator(&set.c2, c3).unwrap().max_abs() < 1e-9);
            assert!(c3.is_hermitian(1e-10));
        }
    }
    assert!(build_c3(2, 3).is_err());
}

#[test]
fn casimirs_are_scalar_on_blocks() {
    for (d, n) in [(2usize, 4usize), (3, 3)] {
        let blocks = isotypic_blocks(d, n).unwrap();
        let mut ops = vec![build_c2(d, n).unwrap()];
        if d == 3 {
            ops.push(build_c3(d, n).unwrap());
        }
        for b in &blocks {
            for op in &ops {
                let r = restrict_to_block(op, b).unwrap();
                let lambda = r[(0, 0)];
                let scalar = ComplexMatrix::identity(r.dim()).scale(lambda);
                assert!((&r - &scalar).max_abs() < 1e-9, "block {}", b.label);
            }
        }
    }
}

#[test]
fn block_structure() {
    for (d, n) in [(2usize, 2usize), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)] {
        let blocks = isotypic_blocks(d, n).unwrap();
        let total: usize = blocks.iter().map(|b| b.block_dim).sum();
        assert_eq!(total, d.pow(n as u32));
        for b in &blocks {
            assert_eq!(b.block_dim, b.irrep_dim * b.multiplicity);
            assert_eq!(b.label.size() as usize, n);
        }
        // Mutual orthogonality of the projectors.
        let ps: Vec<ComplexMatrix> = blocks.iter().map(|b| b.projector()).collect();
        for (i, p) in ps.iter().enumerate() {
            assert!((&(p * p) - p).max_abs() < 1e-10);
            for q in &ps[i + 1..] {
                assert!((p * q).max_abs() < 1e-10);
            }
        }
    }
}

#[test]
fn center_basis_dimensions_and_centrality() {
    assert_eq!(center_basis(2, 3).unwrap().dim(), 2);
    assert_eq!(center_basis(3, 3).unwrap().dim(), 3);
    assert_eq!(center_basis(4, 4).unwrap().dim(), 5);
    for (d, n) in [(2usize, 3usize), (3, 3)] {
        let cb = center_basis(d, n).unwrap();
        let basis = gell_mann_basis(d).unwrap();
        for idx in SymmetricMultiIndex::all(d, n) {
            let f = symmetric_sum(&basis, &idx, n).unwrap();
            for z in &cb.elements {
                assert!(commutator(z, &f).unwrap().max_abs() < 1e-9);
            }
        }
    }
}

#[test]
fn qubit_center_elements_are_central() {
    for n in 2..=5 {
        let cb = center_basis(2, n).unwrap();
        let mut span = OrthonormalSpan::new(1 << n, 1e-9);
        for z in &cb.elements {
            span.orthonormal_extend(z).unwrap();
        }
        for k in 0..=n / 2 {
            let b = qubit_center_element(n, k).unwrap();
            assert!(span.relative_residual(&b) < 1e-9, "n={n}, k={k}");
        }
        assert!(qubit_center_element(n, n / 2 + 1).is_err());
    }
}

#[test]
fn center_projection_examples() {
    let cb = center_basis(3, 3).unwrap();
    let basis = gell_mann_basis(3).unwrap();
    let local = collective(basis.get(3), 3);
    let (c, s) = center_project(&local, &cb).unwrap();
    assert!(c.max_abs() < 1e-10);
    assert!((&s - &local).max_abs() < 1e-10);

    let h = two_body_hamiltonian(3, 3).unwrap().scale(I);
    let (c, s) = center_project(&h, &cb).unwrap();
    assert!(c.max_abs() > 1e-3);
    assert!((&(&c + &s) - &h).max_abs() < 1e-12);
    assert_eq!(center_component_dim(&[h, local.scale(I)], &cb).unwrap(), 1);
    // The remainder is orthogonal to every center element.
    for z in &cb.elements {
        assert!((&s * z).trace().norm() < 1e-10);
    }
    assert!(center_project(&ComplexMatrix::identity(9), &cb).is_err());
}

#[test]
fn c2_equality_pattern_matches_formula() {
    // Blocks share a C2 cluster exactly when their (p, q) share c2(p, q).
    let blocks = isotypic_blocks(3, 4).unwrap();
    for a in &blocks {
        for b in &blocks {
            let pa = a.label.quantum_numbers();
            let pb = b.label.quantum_numbers();
            let same_formula = c2_eigenvalue(pa[0] as i64, pa[1] as i64).unwrap()
                == c2_eigenvalue(pb[0] as i64, pb[1] as i64).unwrap();
            assert_eq!(same_formula, a.c2_cluster_index == b.c2_cluster_index);
        }
    }
}

#[test]
fn injectivity_is_checked() {
    assert!(c2_is_injective(3, 3).unwrap());
    // (5,2) and (2,5) both occur in twelve qutrits and share c2 = 60.
    assert!(!c2_is_injective(3, 12).unwrap());
    let a = IWeight::from_quantum_numbers(&[5, 2]);
    let b = IWeight::from_quantum_numbers(&[2, 5]);
    assert_eq!(a.with_size(12).unwrap().entries(), &[8, 3, 1]);
    assert_eq!(b.with_size(12).unwrap().entries(), &[7, 5, 0]);
    assert_eq!(c2_eigenvalue(5, 2).unwrap(), c2_eigenvalue(2, 5).unwrap());
}

#[test]
fn search_matches_disc_scan() {
    for p in 0..=30 {
        for q in 0..=30 {
            assert_eq!(degeneracy_search(p, q), degeneracy_disc_scan(p, q), "seed ({p},{q})");
        }
    }
    assert!(degeneracy_search(5, 2).contains(&(2, 5)));
}
