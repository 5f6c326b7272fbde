use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::exactlin::{Mat, Qi, Zero};

fn q(n: i64) -> Qi {
    Qi::from_i64(n)
}

fn alg(kind: usize) -> Arc<CoordinateAlgebra<Qi>> {
    Arc::new(match kind {
        0 => CoordinateAlgebra::rationals(),
        1 => CoordinateAlgebra::dual_numbers(),
        _ => CoordinateAlgebra::split(2),
    })
}

fn el(a: &CoordinateAlgebra<Qi>, coords: &[i64]) -> Vec<Qi> {
    assert_eq!(coords.len(), a.dim());
    coords.iter().map(|&c| q(c)).collect()
}

fn random_element(a: &CoordinateAlgebra<Qi>, rng: &mut ChaCha8Rng) -> Vec<Qi> {
    (0..a.dim()).map(|_| q(rng.gen_range(-3..=3))).collect()
}

fn random_matrix(
    a: &Arc<CoordinateAlgebra<Qi>>,
    bp: &BlockProfile,
    rng: &mut ChaCha8Rng,
    keep: impl Fn(usize, usize) -> bool,
) -> MatrixOverA<Qi> {
    let b = bp.block_of();
    let size = bp.size();
    let mut m = MatrixOverA::zero(a.clone(), size);
    for i in 0..size {
        for j in 0..size {
            if keep(b[i], b[j]) {
                m.set(i, j, random_element(a, rng));
            }
        }
    }
    m
}

#[test]
fn element_inverses() {
    let r = alg(0);
    assert_eq!(invert_element(&r, &el(&r, &[1])), Some(el(&r, &[1])));
    let d = alg(1);
    assert!(!is_invertible(&d, &el(&d, &[0, 1])));
    assert_eq!(invert_element(&d, &el(&d, &[1, 1])), Some(el(&d, &[1, -1])));
    let s = alg(2);
    assert!(!is_invertible(&s, &el(&s, &[1, 0])));
    assert_eq!(invert_element(&s, &el(&s, &[2, -1])), Some(vec![q(1) / q(2), q(-1)]));
}

#[test]
fn exponential_examples() {
    let r = alg(0);
    assert!(exp_nilpotent(&MatrixOverA::zero(r.clone(), 3)).unwrap().is_identity());
    let e21 = MatrixOverA::from_scalar(r.clone(), &Mat::from_i64_rows(&[&[0, 0], &[1, 0]]).unwrap()).unwrap();
    let expected = MatrixOverA::from_scalar(r, &Mat::from_i64_rows(&[&[1, 0], &[1, 1]]).unwrap()).unwrap();
    assert_eq!(exp_nilpotent(&e21).unwrap(), expected);

    // ε·E12 + E21: x² = ε·I, x⁴ = 0
    let d = alg(1);
    let mut x = MatrixOverA::zero(d.clone(), 2);
    x.set(0, 1, el(&d, &[0, 1]));
    x.set(1, 0, el(&d, &[1, 0]));
    let sq = x.pow(2);
    assert_eq!(sq.entry(0, 0), el(&d, &[0, 1]).as_slice());
    assert_eq!(sq.entry(1, 1), el(&d, &[0, 1]).as_slice());
    assert!(sq.entry(0, 1).iter().all(|c| c.is_zero()));
    assert!(x.pow(4).is_zero());
    assert_eq!(exp_nilpotent(&x), Err(GroupError::NotNilpotent { power: 2 }));
}

#[test]
fn big_cell_examples() {
    let r = alg(0);
    let bp = BlockProfile::full(2);
    let id = MatrixOverA::identity(r.clone(), 2);
    let f = nlu_factor(&id, &bp).unwrap();
    assert!(f.n.is_identity() && f.l.is_identity() && f.u.is_identity());

    let swap = MatrixOverA::from_scalar(r, &Mat::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap()).unwrap();
    assert_eq!(nlu_factor(&swap, &bp), Err(GroupError::NotInBigCell { block: 0 }));

    // [[a,b],[0,d]] over Q[ε]
    let d = alg(1);
    let (a, b, dd) = (el(&d, &[2, 1]), el(&d, &[3, -1]), el(&d, &[1, 5]));
    let mut g = MatrixOverA::zero(d.clone(), 2);
    g.set(0, 0, a.clone());
    g.set(0, 1, b.clone());
    g.set(1, 1, dd.clone());
    let f = nlu_factor(&g, &bp).unwrap();
    assert!(f.n.is_identity());
    assert_eq!((f.l.entry(0, 0), f.l.entry(1, 1)), (a.as_slice(), dd.as_slice()));
    let ainv_b = d.mul(&invert_element(&d, &a).unwrap(), &b);
    assert_eq!(f.u.entry(0, 1), ainv_b.as_slice());
    assert_eq!(f.product(), g);

    // pivot ε is a zero divisor
    let mut h = MatrixOverA::identity(d.clone(), 2);
    h.set(0, 0, el(&d, &[0, 1]));
    h.set(0, 1, el(&d, &[1, 0]));
    h.set(1, 0, el(&d, &[1, 0]));
    assert_eq!(nlu_factor(&h, &bp), Err(GroupError::NotInBigCell { block: 0 }));

    let singular = MatrixOverA::zero(d, 2);
    assert_eq!(nlu_factor(&singular, &bp), Err(GroupError::NotInvertible));
    assert!(BlockProfile::new(vec![1, 0]).is_err());
    assert!(matches!(
        nlu_factor(&id, &BlockProfile::new(vec![3]).unwrap()),
        Err(GroupError::ProfileMismatch { .. })
    ));
}

#[test]
fn inverse_matches_operator() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for kind in 0..3 {
        let a = alg(kind);
        let bp = BlockProfile::full(3);
        for _ in 0..10 {
            let g = random_matrix(&a, &bp, &mut rng, |_, _| true);
            match g.inverse() {
                Some(inv) => {
                    assert!(g.mul(&inv).is_identity());
                    assert!(inv.mul(&g).is_identity());
                }
                None => assert!(crate::exactlin::rank(&g.operator()) < 3 * a.dim()),
            }
        }
    }
}

#[test]
fn unipotent_upper_and_block_diagonal_is_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let bp = BlockProfile::new(vec![1, 1]).unwrap();
    let mut hits = 0;
    for kind in 0..3 {
        let a = alg(kind);
        for _ in 0..30 {
            let mut g = MatrixOverA::identity(a.clone(), 2);
            g.set(0, 1, (0..a.dim()).map(|_| q(rng.gen_range(-1..=1))).collect());
            if rng.gen_bool(0.2) {
                g.set(1, 1, random_element(&a, &mut rng));
            }
            assert!(is_unipotent_upper(&g, &bp) || g.entry(1, 1) != a.unit());
            if is_unipotent_upper(&g, &bp) && is_block_diagonal(&g, &bp) {
                assert!(g.is_identity());
                hits += 1;
            }
        }
    }
    assert!(hits > 0);
}

fn profile(idx: usize) -> BlockProfile {
    BlockProfile::new(match idx {
        0 => vec![1, 1],
        1 => vec![1, 2],
        2 => vec![2, 1],
        _ => vec![1, 1, 1],
    })
    .unwrap()
}

fn random_invertible_block_diagonal(a: &Arc<CoordinateAlgebra<Qi>>, bp: &BlockProfile, rng: &mut ChaCha8Rng) -> MatrixOverA<Qi> {
    loop {
        let l = random_matrix(a, bp, rng, |bi, bj| bi == bj);
        if l.is_invertible() {
            return l;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn round_trip(seed in any::<u64>(), kind in 0usize..3, p in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = alg(kind);
        let bp = profile(p);
        let size = bp.size();
        let id = MatrixOverA::identity(a.clone(), size);
        let x = random_matrix(&a, &bp, &mut rng, |bi, bj| bi > bj);
        let y = random_matrix(&a, &bp, &mut rng, |bi, bj| bi < bj);
        let n = exp_nilpotent(&x).unwrap();
        let u = exp_nilpotent(&y).unwrap();
        let l = random_invertible_block_diagonal(&a, &bp, &mut rng);
        let f = nlu_factor(&n.mul(&l).mul(&u), &bp).unwrap();
        prop_assert!(is_unipotent_lower(&f.n, &bp) && is_unipotent_upper(&f.u, &bp) && is_block_diagonal(&f.l, &bp));
        prop_assert_eq!(&f.n, &n);
        prop_assert_eq!(&f.l, &l);
        prop_assert_eq!(&f.u, &u);
        prop_assert!(id.add(&x).sub(&x).is_identity());
    }

    #[test]
    fn exp_log_inverse(seed in any::<u64>(), kind in 0usize..3, p in 0usize..4, lower in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = alg(kind);
        let bp = profile(p);
        let x = random_matrix(&a, &bp, &mut rng, |bi, bj| if lower { bi > bj } else { bi < bj });
        prop_assert!(is_strictly_block_triangular(&x, &bp, lower));
        let e = exp_nilpotent(&x).unwrap();
        prop_assert!(e.mul(&exp_nilpotent(&x.neg()).unwrap()).is_identity());
        prop_assert_eq!(log_unipotent(&e).unwrap(), x);
    }

    #[test]
    fn product_is_associative(seed in any::<u64>(), kind in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = alg(kind);
        let bp = BlockProfile::full(3);
        let m: Vec<_> = (0..3).map(|_| random_matrix(&a, &bp, &mut rng, |_, _| true)).collect();
        prop_assert_eq!(m[0].mul(&m[1]).mul(&m[2]), m[0].mul(&m[1].mul(&m[2])));
    }
}
