use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::exactlin::{rank, same_span, Field, Mat, Qi};
use crate::rootsys::{CartanElement, Family, Limits, RootSystem, Weight};

fn q(n: i64) -> Qi {
    Qi::from_i64(n)
}

fn chev(family: Family, r: usize) -> GradedLieAlgebra<Qi> {
    build_chevalley_of_type(family, r, &Limits::default()).unwrap()
}

fn sl2() -> GradedLieAlgebra<Qi> {
    chev(Family::A, 1)
}

fn sl2_ltimes_c2() -> GradedLieAlgebra<Qi> {
    let g = sl2();
    let action = g.natural_representation().unwrap().to_vec();
    build_abelian_extension(&g, &action).unwrap()
}

fn x_of(coords: &[i64]) -> CartanElement {
    CartanElement::from_integers(coords)
}

#[test]
fn sl2_relations() {
    let g = sl2();
    assert_eq!(g.dim(), 3);
    assert_eq!(g.labels(), &["e", "h", "f"]);
    let (e, h, f) = (0, 1, 2);
    assert_eq!(g.bracket_basis(h, e), &[(e, q(2))]);
    assert_eq!(g.bracket_basis(h, f), &[(f, q(-2))]);
    assert_eq!(g.bracket_basis(e, f), &[(h, q(1))]);
    assert_eq!(validate(&g).grading, Grading::Graded);
}

/// The table must agree with matrix commutators of the realization.
fn check_natural_is_hom(g: &GradedLieAlgebra<Qi>) {
    let mats = g.natural_representation().unwrap();
    let flat: Vec<Vec<Qi>> = mats.iter().map(|m| m.entries().to_vec()).collect();
    assert_eq!(rank(&Mat::from_rows(flat).unwrap()), g.dim(), "{} natural rep not faithful", g.name());
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let mut rhs = Mat::zeros(mats[0].nrows(), mats[0].ncols());
            for (k, c) in g.bracket_basis(i, j) {
                rhs = rhs.add(&mats[*k].scale(c));
            }
            assert_eq!(mats[i].commutator(&mats[j]), rhs, "{} ({i},{j})", g.name());
        }
    }
}

fn form(family: Family, r: usize) -> Option<Mat<Qi>> {
    let m = match family {
        Family::A => return None,
        Family::B => 2 * r + 1,
        _ => 2 * r,
    };
    let mut j = Mat::zeros(m, m);
    for i in 0..r {
        j[(i, r + i)] = q(1);
        j[(r + i, i)] = if family == Family::C { q(-1) } else { q(1) };
    }
    if family == Family::B {
        j[(2 * r, 2 * r)] = q(1);
    }
    Some(j)
}

#[test]
fn chevalley_algebras_for_all_types() {
    let cases = [
        (Family::A, 1, 3),
        (Family::A, 2, 8),
        (Family::A, 3, 15),
        (Family::A, 4, 24),
        (Family::B, 2, 10),
        (Family::B, 3, 21),
        (Family::B, 4, 36),
        (Family::C, 2, 10),
        (Family::C, 3, 21),
        (Family::C, 4, 36),
        (Family::D, 3, 15),
        (Family::D, 4, 28),
    ];
    for (family, r, dim) in cases {
        let g = chev(family, r);
        assert_eq!(g.dim(), dim, "{family}{r}");
        let report = validate(&g);
        assert!(report.is_valid(), "{family}{r}: {:?}", report.failures);
        assert_eq!(report.grading, Grading::Graded);
        assert_eq!(g.ambient_roots().len(), g.root_system().roots().len());
        check_natural_is_hom(&g);
        let mats = g.natural_representation().unwrap();
        match form(family, r) {
            None => assert!(mats.iter().all(|m| (0..m.nrows()).fold(q(0), |a, i| a + &m[(i, i)]) == q(0))),
            Some(j) => {
                for m in mats {
                    assert!(m.transpose().mul(&j).add(&j.mul(m)).is_zero(), "{family}{r} form");
                }
            }
        }
    }
}

#[test]
fn tensor_examples() {
    let g = sl2();
    let t1 = build_tensor(&CoordinateAlgebra::rationals(), &g).unwrap();
    assert_eq!(t1.dim(), 3);
    assert_eq!(t1.bracket_basis(0, 2), g.bracket_basis(0, 2));

    let t = build_tensor(&CoordinateAlgebra::dual_numbers(), &g).unwrap();
    assert_eq!(t.dim(), 6);
    assert_eq!(t.indices_of_weight(&Weight(vec![2])), vec![0, 3]);
    assert_eq!(t.label(3), "ε⊗e");
    // [ε⊗e, ε⊗f] = ε²⊗h = 0, [1⊗e, ε⊗f] = ε⊗h
    assert!(t.bracket_basis(3, 5).is_empty());
    assert_eq!(t.bracket_basis(0, 5), &[(4, q(1))]);
    let report = validate(&t);
    assert!(report.is_valid());
    assert_eq!(report.grading, Grading::Graded);
    check_natural_is_hom(&t);
}

#[test]
fn split_tensor_is_two_copies_of_sl2() {
    let g = sl2();
    let t = build_tensor(&CoordinateAlgebra::split(2), &g).unwrap();
    assert_eq!(t.dim(), 6);
    // unit-first basis {1, p2}; p1 = 1 − p2
    let copy = |first: bool, j: usize| {
        let mut v = vec![q(0); 6];
        if first {
            v[j] = q(1);
            v[3 + j] = q(-1);
        } else {
            v[3 + j] = q(1);
        }
        v
    };
    for a in [true, false] {
        for i in 0..3 {
            for j in 0..3 {
                assert!(t.bracket(&copy(a, i), &copy(!a, j)).iter().all(|x| x == &q(0)));
                let mut expected = vec![q(0); 6];
                for (k, c) in g.bracket_basis(i, j) {
                    crate::exactlin::add_scaled(&mut expected, c, &copy(a, *k));
                }
                assert_eq!(t.bracket(&copy(a, i), &copy(a, j)), expected);
            }
        }
    }
}

#[test]
fn gln_examples() {
    let lim = Limits::default();
    let gl2 = build_gln(&CoordinateAlgebra::<Qi>::rationals(), 2, &lim).unwrap();
    assert_eq!(gl2.dim(), 4);
    let report = validate(&gl2);
    assert!(report.is_valid(), "{:?}", report.failures);
    assert_eq!(report.g0_dim, 2);
    assert_eq!(report.grading, Grading::WeaklyGraded);
    check_natural_is_hom(&gl2);

    let gl2e = build_gln(&CoordinateAlgebra::<Qi>::dual_numbers(), 2, &lim).unwrap();
    assert_eq!(gl2e.dim(), 8);
    assert!(validate(&gl2e).is_valid());
    check_natural_is_hom(&gl2e);

    let gl3 = build_gln(&CoordinateAlgebra::<Qi>::rationals(), 3, &lim).unwrap();
    assert_eq!(gl3.dim(), 9);
    assert_eq!(gl3.ambient_roots().len(), 6);
    assert_eq!(validate(&gl3).grading, Grading::WeaklyGraded);
    assert!(build_gln(&CoordinateAlgebra::<Qi>::rationals(), 1, &lim).is_err());
}

#[test]
fn abelian_extensions() {
    let g = sl2_ltimes_c2();
    assert_eq!(g.dim(), 5);
    let r: Vec<i64> = g.ambient_roots().iter().map(|w| w.0[0]).collect();
    assert_eq!(r, vec![-2, -1, 1, 2]);
    let report = validate(&g);
    assert!(report.is_valid(), "{:?}", report.failures);
    assert_eq!(report.grading, Grading::WeaklyGraded);
    check_natural_is_hom(&g);

    let sl = sl2();
    let trivial: Vec<Mat<Qi>> = (0..3).map(|_| Mat::zeros(1, 1)).collect();
    let c = build_abelian_extension(&sl, &trivial).unwrap();
    assert_eq!(c.dim(), 4);
    assert_eq!(c.indices_of_weight(&Weight(vec![0])).len(), 2);

    let adjoint: Vec<Mat<Qi>> = (0..3).map(|i| sl.ad_basis(i)).collect();
    let a = build_abelian_extension(&sl, &adjoint).unwrap();
    assert_eq!(a.dim(), 6);
    assert_eq!(a.ambient_roots(), sl.ambient_roots());

    let mut bad = adjoint.clone();
    bad[0] = bad[0].scale(&q(2));
    assert!(matches!(build_abelian_extension(&sl, &bad), Err(LieAlgebraError::NotAModule { .. })));
}

#[test]
fn parabolic_examples() {
    let g = sl2();
    let p = parabolic_subalgebra(&g, &x_of(&[1])).unwrap();
    assert_eq!(p.u_indices, vec![0]);
    assert_eq!(p.n_indices, vec![2]);
    assert_eq!(p.l_indices, vec![1]);
    assert_eq!(p.p_indices, vec![0, 1]);
    assert_eq!((p.k_u, p.k_n), (2, 2));

    let ext = sl2_ltimes_c2();
    let half = CartanElement(vec![BigRational::new(1.into(), 2.into())]);
    let p = parabolic_subalgebra(&ext, &half).unwrap();
    assert_eq!(p.u_indices.len(), 2);
    // sorted by decreasing value on x_Σ: g_{2α} before g_α
    assert_eq!(ext.weight(p.u_indices[0]).0, vec![2]);
    assert_eq!(p.k_u, 2);

    let t = build_tensor(&CoordinateAlgebra::dual_numbers(), &g).unwrap();
    let p = parabolic_subalgebra(&t, &x_of(&[1])).unwrap();
    assert_eq!(p.u_indices.len(), 2);
    assert_eq!(p.l_indices, vec![1, 4]);

    let p0 = parabolic_subalgebra(&g, &x_of(&[0])).unwrap();
    assert!(p0.n_indices.is_empty());
    assert_eq!(p0.p_indices.len(), 3);
    assert_eq!(p0.k_n, 1);
    assert!(parabolic_subalgebra(&g, &x_of(&[1, 0])).is_err());
}

#[test]
fn normalizer_examples() {
    let ext = sl2_ltimes_c2();
    let p = parabolic_subalgebra(&ext, &x_of(&[1])).unwrap();
    let nu = normalizer_of_indices(&ext, &p.u_indices);
    assert_eq!(nu.len(), 4);
    let expected: Vec<usize> = (0..5).filter(|&i| ext.weight(i).0 != vec![-2]).collect();
    assert!(same_span(5, &nu, &ext.indicator_basis(&expected)));

    let g = chev(Family::B, 2);
    let all: Vec<usize> = (0..g.dim()).collect();
    assert_eq!(normalizer_of_indices(&g, &all).len(), g.dim());
}

#[test]
fn corrupted_table_reports_jacobi_witness() {
    let g = sl2();
    let mut table: Vec<Vec<SparseVec<Qi>>> =
        (0..3).map(|i| (0..3).map(|j| g.bracket_basis(i, j).to_vec()).collect()).collect();
    table[0][2] = vec![(0, q(1)), (1, q(1))];
    table[2][0] = vec![(0, q(-1)), (1, q(-1))];
    let bad = GradedLieAlgebra::from_raw_parts(
        "corrupt",
        g.labels().to_vec(),
        table,
        g.weights().to_vec(),
        g.root_system().clone(),
        g.g_delta().clone(),
        None,
    );
    let report = validate(&bad);
    match report.jacobi_witness() {
        Some(ValidationFailure::Jacobi { i, j, k, residual }) => {
            assert_eq!((*i, *j, *k), (0, 1, 2));
            assert_eq!(residual, "(-2)*e");
        }
        other => panic!("expected a Jacobi witness, got {other:?}"),
    }
}

fn algebras() -> Vec<GradedLieAlgebra<Qi>> {
    let lim = Limits::default();
    vec![
        sl2(),
        chev(Family::A, 2),
        chev(Family::B, 2),
        chev(Family::C, 3),
        sl2_ltimes_c2(),
        build_tensor(&CoordinateAlgebra::dual_numbers(), &chev(Family::A, 2)).unwrap(),
        build_gln(&CoordinateAlgebra::<Qi>::dual_numbers(), 3, &lim).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn parabolic_decomposition_and_normalizers(which in 0usize..7, coords in proptest::collection::vec(-3i64..=3, 3)) {
        let g = &algebras()[which];
        let x = x_of(&coords[..g.rank()]);
        let p = parabolic_subalgebra(g, &x).unwrap();
        let n = g.dim();
        prop_assert_eq!(p.n_indices.len() + p.l_indices.len() + p.u_indices.len(), n);
        let mut all: Vec<usize> = p.n_indices.iter().chain(&p.l_indices).chain(&p.u_indices).copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..n).collect::<Vec<_>>());
        prop_assert!(same_span(n, &normalizer_of_indices(g, &p.p_indices), &g.indicator_basis(&p.p_indices)));
        prop_assert!(same_span(n, &normalizer_of_indices(g, &p.l_indices), &g.indicator_basis(&p.l_indices)));
        let max = p.u_indices.iter().map(|&i| p.eval(i).clone()).max();
        if let Some(m) = max {
            prop_assert!(BigRational::from_integer((p.k_u as i64).into()) <= m + BigRational::from_integer(1.into()));
        }
        prop_assert!(p.system.check_closure_relations().is_ok());
    }
}

#[test]
fn root_system_used_is_delta() {
    let g = chev(Family::C, 2);
    assert_eq!(g.root_system(), &RootSystem::build(Family::C, 2, &Limits::default()).unwrap());
}
