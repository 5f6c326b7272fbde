use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::coinduce::{g_delta_finite_part, minimal_submodule, PModule};
use crate::exactlin::{rank, Field, Mat, One, Qi, Zero};
use crate::liealg::{build_chevalley_of_type, build_tensor, parabolic_subalgebra, CoordinateAlgebra};
use crate::rootsys::{Family, Limits, Weight, WeylGroup};

fn chev(family: Family, r: usize) -> GradedLieAlgebra<Qi> {
    build_chevalley_of_type(family, r, &Limits::default()).unwrap()
}

fn borel(g: &GradedLieAlgebra<Qi>) -> ParabolicSubalgebra {
    parabolic_subalgebra(g, &g.root_system().borel_element()).unwrap()
}

fn weyl(g: &GradedLieAlgebra<Qi>) -> WeylGroup {
    WeylGroup::build(g.root_system(), &Limits::default()).unwrap()
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn injective_beta_g(g: &GradedLieAlgebra<Qi>, par: &ParabolicSubalgebra, e: &PModule<Qi>, beta: &Mat<Qi>, v: &GModule<Qi>) -> bool {
    element_rank(&beta_g(g, par, e, beta, v).unwrap()) == v.dim()
}

#[test]
fn lowest_slices() {
    let g = chev(Family::A, 1);
    let par = borel(&g);
    let std = GModule::natural(&g).unwrap();
    let s = lowest_slice(&par, &std).unwrap();
    // x_Σ = ȟ/2 after normalization, so λ(ȟ) = −1 reads as −1/2
    assert_eq!(s.lambda, rat(-1) / rat(2));
    assert_eq!(s.basis.len(), 1);
    let k = s.basis[0].iter().position(|c| !c.is_zero()).unwrap();
    assert_eq!(std.weights()[k], Weight(vec![-1]));
    assert!(s.n_invariant);

    let adj = lowest_slice(&par, &GModule::adjoint(&g)).unwrap();
    assert_eq!((adj.lambda, adj.basis.len()), (rat(-1), 1));
    let triv = lowest_slice(&par, &GModule::trivial(&g)).unwrap();
    assert_eq!((triv.lambda, triv.basis.len()), (rat(0), 1));
}

#[test]
fn quotients() {
    let g = chev(Family::A, 1);
    let par = borel(&g);
    let q = quotient_e(&g, &par, &GModule::natural(&g).unwrap()).unwrap();
    assert_eq!(q.module.dim(), 1);
    assert_eq!(q.module.weights(), &[Weight(vec![-1])]);
    assert_eq!(q.u_v.len(), 1);
    assert!(q.u_v_is_upper);

    let q = quotient_e(&g, &par, &GModule::trivial(&g)).unwrap();
    assert_eq!(q.beta, Mat::identity(1));

    let g3 = chev(Family::A, 2);
    let par3 = borel(&g3);
    let q = quotient_e(&g3, &par3, &GModule::adjoint(&g3)).unwrap();
    assert_eq!(q.u_v.len(), 7);
    assert_eq!(q.module.weights(), &[Weight(vec![-1, -1])]);
    assert!(q.u_v_is_upper);
}

#[test]
fn beta_g_standard() {
    let g = chev(Family::A, 1);
    let par = borel(&g);
    let std = GModule::natural(&g).unwrap();
    let q = quotient_e(&g, &par, &std).unwrap();
    let els = beta_g(&g, &par, &q.module, &q.beta, &std).unwrap();
    assert_eq!(element_rank(&els), 2);
    let slice = lowest_slice(&par, &std).unwrap();
    let k = slice.basis[0].iter().position(|c| !c.is_zero()).unwrap();
    assert_eq!(els[k].value_at(&[]), Some(&q.beta.column(k)));
    let section = g_delta_finite_part(&g, &par, &q.module, &weyl(&g)).unwrap();
    let minimal = minimal_submodule(&section).unwrap();
    assert_eq!(minimal.dim(), 2);
}

#[test]
fn trivial_maps_to_constants() {
    let g = chev(Family::B, 2);
    let par = borel(&g);
    let triv = GModule::trivial(&g);
    let q = quotient_e(&g, &par, &triv).unwrap();
    let els = beta_g(&g, &par, &q.module, &q.beta, &triv).unwrap();
    assert_eq!(els[0].terms.len(), 1);
    assert_eq!(els[0].value_at(&[]), Some(&vec![Qi::one()]));
    let report = verify_realization(&g, &par, &triv, &weyl(&g)).unwrap();
    assert!(report.passed(), "{report:?}");
    assert_eq!(report.image_dim, 1);
}

#[test]
fn realizations_pass() {
    let g = chev(Family::A, 1);
    let report = verify_realization(&g, &borel(&g), &GModule::natural(&g).unwrap(), &weyl(&g)).unwrap();
    assert!(report.passed(), "{report:?}");
    assert_eq!((report.image_dim, report.minimal_dim), (2, 2));

    let g3 = chev(Family::A, 2);
    let report = verify_realization(&g3, &borel(&g3), &GModule::adjoint(&g3), &weyl(&g3)).unwrap();
    assert!(report.passed(), "{report:?}");
    assert_eq!(report.image_dim, 8);

    let b2 = chev(Family::B, 2);
    let report = verify_realization(&b2, &borel(&b2), &GModule::natural(&b2).unwrap(), &weyl(&b2)).unwrap();
    assert!(report.passed(), "{report:?}");
    assert_eq!(report.image_dim, 5);
}

#[test]
fn realization_of_current_algebra_module() {
    // Q[ε]⊗sl₂ acting on C² through ε ↦ 0.
    let g = chev(Family::A, 1);
    let t = build_tensor(&CoordinateAlgebra::dual_numbers(), &g).unwrap();
    let nat = GModule::natural(&g).unwrap();
    let zero = Mat::zeros(2, 2);
    let action: Vec<Mat<Qi>> = (0..t.dim())
        .map(|k| if k < 3 { nat.action(k).clone() } else { zero.clone() })
        .collect();
    let v = GModule::from_action(&t, action).unwrap();
    let report = verify_realization(&t, &borel(&t), &v, &weyl(&t)).unwrap();
    assert!(report.passed(), "{report:?}");
    assert_eq!(report.image_dim, 2);
}

#[test]
fn reducible_input_is_flagged() {
    let g = chev(Family::A, 1);
    let nat = GModule::natural(&g).unwrap();
    let v = nat.direct_sum(&nat);
    assert!(matches!(v.irreducibility(&g), ModuleIrreducibility::Reducible { .. }));
    let report = verify_realization(&g, &borel(&g), &v, &weyl(&g)).unwrap();
    assert!(!report.passed());
    assert!(report.injective);
    assert_eq!(report.equivariance_witness, None);
    assert!(report.evaluation_matches);
}

#[test]
fn frobenius_examples() {
    let g = chev(Family::A, 1);
    let par = borel(&g);
    let w = weyl(&g);
    let nat = GModule::natural(&g).unwrap();
    let run = |wm: &GModule<Qi>, lambda: i64| {
        let e = PModule::character(&g, &par, &Weight(vec![lambda]), &[]).unwrap();
        let s = g_delta_finite_part(&g, &par, &e, &w).unwrap();
        frobenius_dims(wm, &e, &s)
    };
    let r = run(&nat, -1);
    assert_eq!((r.hom_g_dim, r.hom_p_dim), (1, 1));
    assert!(r.bijective());
    let r = run(&GModule::trivial(&g), 0);
    assert_eq!((r.hom_g_dim, r.hom_p_dim), (1, 1));
    assert!(r.bijective());
    let r = run(&nat, -2);
    assert_eq!((r.hom_g_dim, r.hom_p_dim), (0, 0));
    assert!(r.bijective());
}

#[test]
fn cyclic_checks() {
    let g = chev(Family::A, 2);
    let par = borel(&g);
    let adj = GModule::adjoint(&g);
    let q = quotient_e(&g, &par, &adj).unwrap();
    assert!(check_cyclic(&adj, &q.module, &q.beta).unwrap());
    assert!(injective_beta_g(&g, &par, &q.module, &q.beta, &adj));
    let zero = Mat::zeros(1, 8);
    assert!(!check_cyclic(&adj, &q.module, &zero).unwrap());
    assert!(!injective_beta_g(&g, &par, &q.module, &zero, &adj));

    let mut bad = Mat::zeros(1, 8);
    for k in 0..8 {
        bad[(0, k)] = Qi::one();
    }
    assert!(matches!(
        check_cyclic(&adj, &q.module, &bad),
        Err(RealizeError::NotEquivariant { .. })
    ));
    assert!(matches!(check_cyclic(&adj, &q.module, &Mat::zeros(2, 8)), Err(RealizeError::Shape(_))));
}

fn sl2_irreducible(g: &GradedLieAlgebra<Qi>, n: usize) -> GModule<Qi> {
    match n {
        0 => GModule::trivial(g),
        1 => GModule::natural(g).unwrap(),
        _ => GModule::adjoint(g),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn frobenius_dims_agree(parts in prop::collection::vec(0usize..3, 1..3), lambda in -3i64..2) {
        let g = chev(Family::A, 1);
        let par = borel(&g);
        let mut w = sl2_irreducible(&g, parts[0]);
        for &p in &parts[1..] {
            w = w.direct_sum(&sl2_irreducible(&g, p));
        }
        let e = PModule::character(&g, &par, &Weight(vec![lambda]), &[]).unwrap();
        let s = g_delta_finite_part(&g, &par, &e, &weyl(&g)).unwrap();
        let r = frobenius_dims(&w, &e, &s);
        prop_assert_eq!(r.hom_g_dim, r.hom_p_dim);
        prop_assert!(r.bijective());
        // each summand with lowest weight −λ contributes one dimension
        let expected = parts.iter().filter(|&&p| p as i64 == -lambda).count();
        prop_assert_eq!(r.hom_p_dim, expected);
    }

    #[test]
    fn cyclic_matches_injectivity(parts in prop::collection::vec(0usize..3, 1..3), coeffs in prop::collection::vec(-2i64..3, 4)) {
        let g = chev(Family::A, 1);
        let par = borel(&g);
        let mut w = sl2_irreducible(&g, parts[0]);
        for &p in &parts[1..] {
            w = w.direct_sum(&sl2_irreducible(&g, p));
        }
        // E = C_{-1} ⊕ C_0 ⊕ ... realized as the quotient of a fixed module
        let target = GModule::natural(&g).unwrap().direct_sum(&GModule::trivial(&g));
        let q = quotient_e(&g, &par, &target).unwrap();
        let homs = hom_p(&w, &q.module);
        let mut beta = Mat::zeros(q.module.dim(), w.dim());
        for (h, c) in homs.iter().zip(&coeffs) {
            beta = beta.add(&h.scale(&Qi::from_i64(*c)));
        }
        let cyclic = check_cyclic(&w, &q.module, &beta).unwrap();
        prop_assert_eq!(cyclic, injective_beta_g(&g, &par, &q.module, &beta, &w));
        prop_assert!(rank(&beta) <= q.module.dim());
    }

    #[test]
    fn realization_invariants_hold(n in 0usize..3) {
        let g = chev(Family::A, 1);
        let v = sl2_irreducible(&g, n);
        let r = verify_realization(&g, &borel(&g), &v, &weyl(&g)).unwrap();
        prop_assert!(r.passed());
        prop_assert!(r.slice_in_n_invariants && r.u_v_is_upper);
    }
}
