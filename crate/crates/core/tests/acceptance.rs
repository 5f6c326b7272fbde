//! Acceptance criteria. Runs as a plain binary so each criterion prints one
//! PASS/FAIL line; exits nonzero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rootgrade_core::coinduce::{
    check_representation, g_delta_finite_part, g_delta_finite_part_with, FinitePartOptions, PModule, SectionModule,
};
use rootgrade_core::exactlin::{span_basis, Mat, Vector};
use rootgrade_core::groupfact::{exp_nilpotent, nlu_factor, BlockProfile, GroupError, MatrixOverA};
use rootgrade_core::liealg::{
    build_abelian_extension, build_chevalley_of_type, build_gln, build_tensor, normalizer_of_indices,
    parabolic_subalgebra, validate, CoordinateAlgebra, GradedLieAlgebra, ParabolicSubalgebra, SparseVec,
    ValidationFailure,
};
use rootgrade_core::realize::{element_rank, frobenius_dims, verify_realization, GModule};
use rootgrade_core::rootsys::weyl_dim_oracle;
use rootgrade_core::{CartanElement, Family, Field, Limits, Scalar, Weight, WeylGroup};

type G = GradedLieAlgebra<Scalar>;
type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn chev(family: Family, rank: usize) -> G {
    build_chevalley_of_type(family, rank, &Limits::default()).unwrap()
}

fn borel(g: &G) -> ParabolicSubalgebra {
    parabolic_subalgebra(g, &g.root_system().borel_element()).unwrap()
}

fn weyl(g: &G) -> WeylGroup {
    WeylGroup::build(g.root_system(), &Limits::default()).unwrap()
}

fn character_sections(g: &G, par: &ParabolicSubalgebra, lambda: &[i64]) -> Result<SectionModule<Scalar>, String> {
    let e = PModule::character(g, par, &Weight(lambda.to_vec()), &[]).map_err(|e| e.to_string())?;
    g_delta_finite_part(g, par, &e, &weyl(g)).map_err(|e| e.to_string())
}

fn weyl_invariant(c: &BTreeMap<Weight, usize>, w: &WeylGroup) -> bool {
    c.iter().all(|(mu, m)| w.generators().iter().all(|s| c.get(&s.apply(mu)) == Some(m)))
}

fn criterion_1() -> Check {
    let g = chev(Family::A, 1);
    let par = borel(&g);
    for n in 0..=6i64 {
        let v = character_sections(&g, &par, &[-n])?;
        let oracle = weyl_dim_oracle(g.root_system(), &Weight(vec![n])).map_err(|e| e.to_string())?;
        ensure(v.dim() as u64 == oracle && v.dim() == n as usize + 1, || {
            format!("n={n}: dim {} vs oracle {oracle}", v.dim())
        })?;
        let c = v.character().map_err(|e| e.to_string())?;
        let expected: BTreeMap<Weight, usize> = (0..=n).map(|k| (Weight(vec![-n + 2 * k]), 1)).collect();
        ensure(c == expected, || format!("n={n}: character {c:?}"))?;
    }
    for lambda in [1, 2] {
        let v = character_sections(&g, &par, &[lambda])?;
        ensure(v.dim() == 0, || format!("λ={lambda}: dim {}", v.dim()))?;
    }
    Ok("n = 0..6 match the oracle, λ = +1, +2 give 0".into())
}

fn criterion_2() -> Check {
    let g = chev(Family::A, 2);
    let v = character_sections(&g, &borel(&g), &[-1, -1])?;
    let c = v.character().map_err(|e| e.to_string())?;
    let brute = GModule::adjoint(&g).character();
    ensure(v.dim() == 8, || format!("dim {}", v.dim()))?;
    ensure(c.get(&Weight(vec![0, 0])) == Some(&2), || format!("zero weight multiplicity {:?}", c.get(&Weight(vec![0, 0]))))?;
    ensure(weyl_invariant(&c, &weyl(&g)), || "character not Weyl-invariant".into())?;
    ensure(c == brute, || format!("character {c:?} differs from adjoint weights {brute:?}"))?;
    Ok("dim 8, zero weight multiplicity 2, Weyl-invariant, equals adjoint weights".into())
}

fn parabolics(g: &G) -> Vec<CartanElement> {
    let r = g.rank();
    let mut xs = vec![g.root_system().borel_element(), CartanElement::zero(r)];
    xs.push(g.root_system().borel_element().scale(&(-num_rational::BigRational::from_integer(1.into()))));
    if r >= 2 {
        xs.push(CartanElement::coroot(r, 0));
    }
    xs
}

fn criterion_3() -> Check {
    let a1 = chev(Family::A, 1);
    let instances = vec![
        ("sl2", a1.clone()),
        ("sl3", chev(Family::A, 2)),
        ("Q[ε]⊗sl2", build_tensor(&CoordinateAlgebra::dual_numbers(), &a1).unwrap()),
        ("(Q×Q)⊗sl2", build_tensor(&CoordinateAlgebra::split(2), &a1).unwrap()),
    ];
    let mut count = 0;
    for (name, g) in &instances {
        for x in parabolics(g) {
            let par = parabolic_subalgebra(g, &x).map_err(|e| e.to_string())?;
            let e = PModule::trivial(g, &par).map_err(|e| e.to_string())?;
            let v = g_delta_finite_part(g, &par, &e, &weyl(g)).map_err(|e| e.to_string())?;
            ensure(v.dim() == 1, || format!("{name}, x={x}: dim {}", v.dim()))?;
            ensure(v.actions().iter().all(Mat::is_zero), || format!("{name}, x={x}: nonzero action"))?;
            count += 1;
        }
    }
    Ok(format!("{count} (instance, parabolic) pairs give the constants"))
}

/// One randomized finiteness case.
struct SuiteCase {
    label: String,
    g: G,
    par: ParabolicSubalgebra,
    e: PModule<Scalar>,
    v: SectionModule<Scalar>,
}

fn constructors() -> Vec<(String, G)> {
    let lim = Limits::default();
    let a1 = chev(Family::A, 1);
    let nat = GModule::natural(&a1).unwrap();
    vec![
        ("sl2".into(), a1.clone()),
        ("sl3".into(), chev(Family::A, 2)),
        ("so5".into(), chev(Family::B, 2)),
        ("sp4".into(), chev(Family::C, 2)),
        ("Q[ε]⊗sl2".into(), build_tensor(&CoordinateAlgebra::dual_numbers(), &a1).unwrap()),
        ("(Q×Q)⊗sl2".into(), build_tensor(&CoordinateAlgebra::split(2), &a1).unwrap()),
        ("Q[t]/t³⊗sl2".into(), build_tensor(&CoordinateAlgebra::truncated_polynomials(3), &a1).unwrap()),
        ("gl2(Q)".into(), build_gln(&CoordinateAlgebra::rationals(), 2, &lim).unwrap()),
        ("gl2(Q[ε])".into(), build_gln(&CoordinateAlgebra::dual_numbers(), 2, &lim).unwrap()),
        ("gl2(Q×Q)".into(), build_gln(&CoordinateAlgebra::split(2), 2, &lim).unwrap()),
        ("gl3(Q)".into(), build_gln(&CoordinateAlgebra::rationals(), 3, &lim).unwrap()),
        ("sl2⋉C²".into(), build_abelian_extension(&a1, nat.actions()).unwrap()),
    ]
}

fn suite() -> Vec<SuiteCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(20261015);
    let ctors = constructors();
    let mut cases = Vec::new();
    let mut i = 0;
    while cases.len() < 24 {
        let (name, g) = &ctors[i % ctors.len()];
        i += 1;
        let r = g.rank();
        let x = if rng.gen_bool(0.5) {
            g.root_system().borel_element()
        } else {
            CartanElement::from_integers(&(0..r).map(|_| rng.gen_range(-2..=2)).collect::<Vec<_>>())
        };
        let Ok(par) = parabolic_subalgebra(g, &x) else { continue };
        let lambda: Vec<i64> = (0..r).map(|_| rng.gen_range(-2..=1)).collect();
        let e = if rng.gen_bool(0.2) {
            PModule::trivial(g, &par)
        } else {
            PModule::character(g, &par, &Weight(lambda.clone()), &[])
        };
        let Ok(e) = e else { continue };
        let v = match g_delta_finite_part(g, &par, &e, &weyl(g)) {
            Ok(v) => v,
            Err(err) => panic!("{name}, x={x}, λ={lambda:?}: {err}"),
        };
        cases.push(SuiteCase {
            label: format!("{name}, x=({x}), E weight {}", e.weights()[0]),
            g: g.clone(),
            par,
            e,
            v,
        });
    }
    cases
}

fn n_acts_nilpotently(v: &SectionModule<Scalar>) -> bool {
    let d = v.dim();
    let mut current: Vec<Vector<Scalar>> = (0..d).map(|k| rootgrade_core::exactlin::unit_vec(d, k)).collect();
    for _ in 0..=d {
        if current.is_empty() {
            return true;
        }
        let next: Vec<Vector<Scalar>> = v
            .n_indices()
            .iter()
            .flat_map(|&y| current.iter().map(move |s| v.action(y).mul_vec(s)))
            .collect();
        current = span_basis(d, &next);
    }
    current.is_empty()
}

fn criterion_4(cases: &[SuiteCase]) -> Check {
    let mut gl = 0;
    let mut nonzero = 0;
    for c in cases {
        let v = &c.v;
        let w = weyl(&c.g);
        ensure(v.weights().iter().all(|mu| v.window().contains(mu)), || format!("{}: weight outside window", c.label))?;
        let ch = v.character().map_err(|e| e.to_string())?;
        ensure(weyl_invariant(&ch, &w), || format!("{}: character not Weyl-invariant", c.label))?;
        ensure(n_acts_nilpotently(v), || format!("{}: n does not act nilpotently", c.label))?;
        ensure(check_representation(&c.g, v.actions()).is_ok(), || format!("{}: representation axiom fails", c.label))?;
        if v.e_certified() && v.dim() > 0 {
            for (mu, m) in c.e.weights().iter().fold(BTreeMap::new(), |mut acc, mu| {
                *acc.entry(mu.clone()).or_insert(0usize) += 1;
                acc
            }) {
                ensure(ch.get(&mu).copied().unwrap_or(0) == m, || format!("{}: V_f at {mu} differs from E", c.label))?;
            }
        }
        if c.label.starts_with("gl") {
            gl += 1;
        }
        if v.dim() > 0 {
            nonzero += 1;
        }
    }
    ensure(gl >= 3, || format!("only {gl} gl_n cases"))?;
    Ok(format!("{} cases ({gl} gl_n, {nonzero} with V_f ≠ 0)", cases.len()))
}

fn criterion_5() -> Check {
    let sl2 = chev(Family::A, 1);
    let sl3 = chev(Family::A, 2);
    let m = |g: &G, name: &str| -> GModule<Scalar> {
        match name {
            "triv" => GModule::trivial(g),
            "nat" => GModule::natural(g).unwrap(),
            "dual" => GModule::natural(g).unwrap().dual(),
            _ => GModule::adjoint(g),
        }
    };
    let pairs: Vec<(&G, GModule<Scalar>, Vec<i64>, usize)> = vec![
        (&sl2, m(&sl2, "nat"), vec![-1], 1),
        (&sl2, m(&sl2, "triv"), vec![0], 1),
        (&sl2, m(&sl2, "nat"), vec![-2], 0),
        (&sl2, m(&sl2, "adj"), vec![-2], 1),
        (&sl2, m(&sl2, "nat").direct_sum(&m(&sl2, "nat")), vec![-1], 2),
        (&sl2, m(&sl2, "nat").direct_sum(&m(&sl2, "adj")), vec![-2], 1),
        (&sl2, m(&sl2, "triv").direct_sum(&m(&sl2, "adj")), vec![0], 1),
        (&sl2, m(&sl2, "adj"), vec![1], 0),
        (&sl3, m(&sl3, "nat"), vec![0, -1], 1),
        (&sl3, m(&sl3, "dual"), vec![-1, 0], 1),
        (&sl3, m(&sl3, "nat"), vec![-1, 0], 0),
        (&sl3, m(&sl3, "adj"), vec![-1, -1], 1),
        (&sl3, m(&sl3, "nat").direct_sum(&m(&sl3, "triv")), vec![0, 0], 1),
    ];
    for (k, (g, w, lambda, expected)) in pairs.iter().enumerate() {
        let par = borel(g);
        let e = PModule::character(g, &par, &Weight(lambda.clone()), &[]).map_err(|e| e.to_string())?;
        let v = g_delta_finite_part(g, &par, &e, &weyl(g)).map_err(|e| e.to_string())?;
        let r = frobenius_dims(w, &e, &v);
        ensure(r.hom_g_dim == r.hom_p_dim && r.bijective(), || format!("pair {k}: {r:?}"))?;
        ensure(r.hom_p_dim == *expected, || format!("pair {k}: expected {expected}, got {r:?}"))?;
    }
    Ok(format!("{} pairs, d1 = d2 and ev-composition bijective", pairs.len()))
}

fn criterion_6() -> Check {
    let sl2 = chev(Family::A, 1);
    let sl3 = chev(Family::A, 2);
    let cases = [
        ("sl2 standard", &sl2, GModule::natural(&sl2).unwrap(), 2),
        ("sl2 adjoint", &sl2, GModule::adjoint(&sl2), 3),
        ("sl3 standard", &sl3, GModule::natural(&sl3).unwrap(), 3),
        ("sl3 adjoint", &sl3, GModule::adjoint(&sl3), 8),
    ];
    for (name, g, v, dim) in &cases {
        let r = verify_realization(g, &borel(g), v, &weyl(g)).map_err(|e| e.to_string())?;
        ensure(r.passed() && r.image_dim == *dim, || format!("{name}: {r:?}"))?;
    }
    Ok("4 modules realized: injective, equivariant, image minimal, slice and u·V conditions hold".into())
}

fn criterion_7(cases: &[SuiteCase]) -> Check {
    for c in cases {
        let p = normalizer_of_indices(&c.g, &c.par.p_indices).len();
        let l = normalizer_of_indices(&c.g, &c.par.l_indices).len();
        ensure(p == c.par.p_indices.len(), || format!("{}: n_g(p) has dim {p}", c.label))?;
        ensure(l == c.par.l_indices.len(), || format!("{}: n_g(l) has dim {l}", c.label))?;
    }
    let a1 = chev(Family::A, 1);
    let ext = build_abelian_extension(&a1, GModule::natural(&a1).unwrap().actions()).unwrap();
    let par = borel(&ext);
    let norm = normalizer_of_indices(&ext, &par.u_indices);
    let allowed: BTreeSet<Weight> = [-1, 0, 1, 2].into_iter().map(|k| Weight(vec![k])).collect();
    let expected: Vec<usize> = (0..ext.dim()).filter(|&i| allowed.contains(ext.weight(i))).collect();
    let expected_span = span_basis(ext.dim(), &ext.indicator_basis(&expected));
    let mut joined = norm.clone();
    joined.extend(expected_span.iter().cloned());
    ensure(norm.len() == 4 && expected_span.len() == 4 && span_basis(ext.dim(), &joined).len() == 4, || {
        format!("n_g(u) has dim {}", norm.len())
    })?;
    Ok(format!("{} parabolics self-normalizing; sl2⋉C² gives n_g(u) = g_-α ⊕ h ⊕ g_α ⊕ g_2α", cases.len()))
}

fn random_el(a: &CoordinateAlgebra<Scalar>, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    (0..a.dim()).map(|_| Scalar::from_i64(rng.gen_range(-3..=3))).collect()
}

fn random_blocks(
    a: &Arc<CoordinateAlgebra<Scalar>>,
    bp: &BlockProfile,
    rng: &mut ChaCha8Rng,
    keep: impl Fn(usize, usize) -> bool,
) -> MatrixOverA<Scalar> {
    let b = bp.block_of();
    let mut m = MatrixOverA::zero(a.clone(), bp.size());
    for i in 0..bp.size() {
        for j in 0..bp.size() {
            if keep(b[i], b[j]) {
                m.set(i, j, random_el(a, rng));
            }
        }
    }
    m
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let algebras = [
        Arc::new(CoordinateAlgebra::rationals()),
        Arc::new(CoordinateAlgebra::dual_numbers()),
        Arc::new(CoordinateAlgebra::split(2)),
    ];
    let profiles = [vec![1, 1], vec![1, 2], vec![2, 1]];
    for t in 0..200 {
        let a = &algebras[t % 3];
        let bp = BlockProfile::new(profiles[(t / 3) % 3].clone()).unwrap();
        let n = exp_nilpotent(&random_blocks(a, &bp, &mut rng, |i, j| i > j)).unwrap();
        let u = exp_nilpotent(&random_blocks(a, &bp, &mut rng, |i, j| i < j)).unwrap();
        let l = loop {
            let l = random_blocks(a, &bp, &mut rng, |i, j| i == j);
            if l.is_invertible() {
                break l;
            }
        };
        let f = nlu_factor(&n.mul(&l).mul(&u), &bp).map_err(|e| format!("trial {t}: {e}"))?;
        ensure(f.n == n && f.l == l && f.u == u, || format!("trial {t}: factors differ"))?;
    }
    let swap = MatrixOverA::from_scalar(algebras[0].clone(), &Mat::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap()).unwrap();
    ensure(
        nlu_factor(&swap, &BlockProfile::full(2)) == Err(GroupError::NotInBigCell { block: 0 }),
        || "permutation matrix accepted".into(),
    )?;
    Ok("200 round trips exact; [[0,1],[1,0]] rejected".into())
}

fn criterion_9() -> Check {
    let mut all: Vec<(String, G)> = constructors();
    for (fam, r) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4)] {
        all.push((format!("{fam}{r}"), chev(fam, r)));
    }
    for (name, g) in &all {
        let report = validate(g);
        ensure(report.is_valid(), || format!("{name}: {:?}", report.first_failure()))?;
    }
    let g = chev(Family::A, 1);
    let mut table: Vec<Vec<SparseVec<Scalar>>> =
        (0..3).map(|i| (0..3).map(|j| g.bracket_basis(i, j).to_vec()).collect()).collect();
    let one = Scalar::from_i64(1);
    table[0][2] = vec![(0, one.clone()), (1, one.clone())];
    table[2][0] = vec![(0, -one.clone()), (1, -one)];
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
        Some(ValidationFailure::Jacobi { i, j, k, .. }) => {
            Ok(format!("{} algebras valid; corrupted table rejected at ({i},{j},{k})", all.len()))
        }
        other => Err(format!("corrupted table not rejected with a witness: {other:?}")),
    }
}

fn criterion_10(cases: &[SuiteCase]) -> Check {
    for c in cases {
        let b = c.v.window().bound;
        let doubled = (2 * b).max(b + 1);
        let opts = FinitePartOptions {
            bound_override: Some(doubled),
        };
        let w = g_delta_finite_part_with(&c.g, &c.par, &c.e, &weyl(&c.g), opts).map_err(|e| e.to_string())?;
        let same_char = w.character().ok() == c.v.character().ok();
        let mut joined = c.v.elements().to_vec();
        joined.extend(w.elements().iter().cloned());
        ensure(
            same_char && w.dim() == c.v.dim() && element_rank(&joined) == c.v.dim(),
            || format!("{}: V_f changed from dim {} to {} at bound {doubled}", c.label, c.v.dim(), w.dim()),
        )?;
    }
    Ok(format!("{} cases stable under the enlarged bound", cases.len()))
}

fn main() {
    let start = Instant::now();
    let cases = suite();
    let suite_time = start.elapsed();
    let criteria: Vec<(&str, Option<Duration>, Box<dyn Fn() -> Check + '_>)> = vec![
        ("Borel–Weil dimensions", Some(Duration::from_secs(5)), Box::new(criterion_1)),
        ("sl3 adjoint", Some(Duration::from_secs(30)), Box::new(criterion_2)),
        ("constants on G/P", None, Box::new(criterion_3)),
        ("finiteness invariants", None, Box::new(|| criterion_4(&cases))),
        ("Frobenius reciprocity", None, Box::new(criterion_5)),
        ("realization", None, Box::new(criterion_6)),
        ("normalizers", None, Box::new(|| criterion_7(&cases))),
        ("big cell", Some(Duration::from_secs(10)), Box::new(criterion_8)),
        ("algebra validity", None, Box::new(criterion_9)),
        ("window-bound soundness", None, Box::new(|| criterion_10(&cases))),
    ];
    println!("acceptance suite ({} randomized cases built in {:.2?})", cases.len(), suite_time);
    let mut failed = 0;
    for (k, (name, limit, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = t.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(l)) if elapsed > *l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}; {elapsed:.2?})", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why}; {elapsed:.2?})", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
