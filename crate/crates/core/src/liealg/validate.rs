use std::collections::BTreeSet;
use std::fmt;

use crate::exactlin::{rank, Field, Mat};
use crate::rootsys::Weight;

use super::algebra::GradedLieAlgebra;

/// Whether `Σ_{α∈Δ} [g_α, g_{−α}]` spans `g_0` and `R = Δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    Graded,
    WeaklyGraded,
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Grading::Graded => write!(f, "Δ-graded"),
            Grading::WeaklyGraded => write!(f, "weakly graded"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationFailure {
    Antisymmetry { i: usize, j: usize },
    Jacobi { i: usize, j: usize, k: usize, residual: String },
    NotWeightVector { coroot: usize, basis: usize },
    NonIntegral { weight: Weight, positive_root: usize },
    Gradation { i: usize, j: usize },
    Chevalley(String),
    RootsNotSymmetric(Weight),
}

impl fmt::Display for ValidationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationFailure::Antisymmetry { i, j } => write!(f, "antisymmetry fails on ({i},{j})"),
            ValidationFailure::Jacobi { i, j, k, residual } => {
                write!(f, "Jacobi identity fails on ({i},{j},{k}): cyclic sum = {residual}")
            }
            ValidationFailure::NotWeightVector { coroot, basis } => {
                write!(f, "basis vector {basis} is not an eigenvector of coroot {coroot}")
            }
            ValidationFailure::NonIntegral { weight, positive_root } => {
                write!(f, "weight {weight} is not integral on coroot {positive_root}")
            }
            ValidationFailure::Gradation { i, j } => write!(f, "[b_{i}, b_{j}] leaves the weight space"),
            ValidationFailure::Chevalley(msg) => write!(f, "Chevalley relation fails: {msg}"),
            ValidationFailure::RootsNotSymmetric(w) => write!(f, "R contains {w} but not its negative"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub dim: usize,
    pub failures: Vec<ValidationFailure>,
    pub grading: Grading,
    /// Dimension of `g_0` and of the span of `[g_α, g_{−α}]`, `α ∈ Δ`.
    pub g0_dim: usize,
    pub g0_spanned: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<String> {
        self.failures.first().map(|f| f.to_string())
    }

    pub fn jacobi_witness(&self) -> Option<&ValidationFailure> {
        self.failures.iter().find(|f| matches!(f, ValidationFailure::Jacobi { .. }))
    }
}

const MAX_WITNESSES: usize = 8;

fn render<F: Field>(g: &GradedLieAlgebra<F>, v: &[F]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| format!("({})*{}", c.to_exact_string(), g.label(k)))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn push(failures: &mut Vec<ValidationFailure>, count: &mut usize, f: ValidationFailure) {
    if *count < MAX_WITNESSES {
        failures.push(f);
    }
    *count += 1;
}

/// Runs every structural check on `g` and classifies its grading.
pub fn validate<F: Field>(g: &GradedLieAlgebra<F>) -> ValidationReport {
    let n = g.dim();
    let table = g.sparse_table();
    let mut failures = Vec::new();

    let mut c = 0;
    for i in 0..n {
        for j in i..n {
            let neg: Vec<(usize, F)> = table[j][i].iter().map(|(k, x)| (*k, -x.clone())).collect();
            if table[i][j] != neg {
                push(&mut failures, &mut c, ValidationFailure::Antisymmetry { i, j });
            }
        }
    }

    let mut c = 0;
    let mut acc = vec![F::zero(); n];
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for x in acc.iter_mut() {
                    *x = F::zero();
                }
                for (a, b, cc) in [(i, j, k), (j, k, i), (k, i, j)] {
                    for (m, coeff) in &table[b][cc] {
                        g.accumulate_bracket(&mut acc, coeff, a, *m);
                    }
                }
                if acc.iter().any(|x| !x.is_zero()) {
                    let residual = render(g, &acc);
                    push(&mut failures, &mut c, ValidationFailure::Jacobi { i, j, k, residual });
                }
            }
        }
    }

    let mut c = 0;
    for (ci, &h) in g.g_delta().h.iter().enumerate() {
        for b in 0..n {
            let expected: Vec<(usize, F)> = match g.weight(b).0.get(ci) {
                Some(0) => vec![],
                Some(&w) => vec![(b, F::from_i64(w))],
                None => vec![(usize::MAX, F::zero())],
            };
            if table[h][b] != expected {
                push(&mut failures, &mut c, ValidationFailure::NotWeightVector { coroot: ci, basis: b });
            }
        }
    }

    let rs = g.root_system();
    let mut c = 0;
    for w in g.ambient_roots() {
        if w.rank() != rs.rank() {
            continue;
        }
        for k in 0..rs.positive_roots().len() {
            if !rs.coroot_value(w, k).is_integer() {
                push(
                    &mut failures,
                    &mut c,
                    ValidationFailure::NonIntegral {
                        weight: w.clone(),
                        positive_root: k,
                    },
                );
            }
        }
    }

    let mut c = 0;
    for i in 0..n {
        for j in 0..n {
            let target = g.weight(i) + g.weight(j);
            if table[i][j].iter().any(|(k, _)| g.weight(*k) != &target) {
                push(&mut failures, &mut c, ValidationFailure::Gradation { i, j });
            }
        }
    }

    let roots: BTreeSet<&Weight> = g.ambient_roots().iter().collect();
    for w in &roots {
        if !roots.contains(&-*w) {
            failures.push(ValidationFailure::RootsNotSymmetric((*w).clone()));
            break;
        }
    }

    check_chevalley(g, &mut failures);

    let zero = Weight::zero(rs.rank());
    let g0: Vec<usize> = g.indices_of_weight(&zero);
    let mut spanning = Vec::new();
    for a in rs.roots() {
        for &i in &g.indices_of_weight(a) {
            for &j in &g.indices_of_weight(&-a) {
                let mut v = vec![F::zero(); n];
                g.accumulate_bracket(&mut v, &F::one(), i, j);
                spanning.push(g0.iter().map(|&k| v[k].clone()).collect::<Vec<F>>());
            }
        }
    }
    let g0_spanned = if spanning.is_empty() {
        0
    } else {
        rank(&Mat::from_rows(spanning).expect("rows have equal length"))
    };
    let r_is_delta = roots.len() == rs.roots().len() && rs.roots().iter().all(|a| roots.contains(a));
    let grading = if r_is_delta && g0_spanned == g0.len() {
        Grading::Graded
    } else {
        Grading::WeaklyGraded
    };
    ValidationReport {
        dim: n,
        failures,
        grading,
        g0_dim: g0.len(),
        g0_spanned,
    }
}

fn check_chevalley<F: Field>(g: &GradedLieAlgebra<F>, failures: &mut Vec<ValidationFailure>) {
    let emb = g.g_delta();
    let cartan = g.root_system().cartan();
    let r = emb.h.len();
    let table = g.sparse_table();
    let mut fail = |msg: String| {
        if failures.len() < 64 {
            failures.push(ValidationFailure::Chevalley(msg));
        }
    };
    for i in 0..r {
        for j in 0..r {
            if !table[emb.h[i]][emb.h[j]].is_empty() {
                fail(format!("[h{i}, h{j}] ≠ 0"));
            }
            let a = cartan[i][j];
            let expect = |b: usize, c: i64| if c == 0 { vec![] } else { vec![(b, F::from_i64(c))] };
            if table[emb.h[i]][emb.e[j]] != expect(emb.e[j], a) {
                fail(format!("[h{i}, e{j}] ≠ {a}·e{j}"));
            }
            if table[emb.h[i]][emb.f[j]] != expect(emb.f[j], -a) {
                fail(format!("[h{i}, f{j}] ≠ {}·f{j}", -a));
            }
            let ef = &table[emb.e[i]][emb.f[j]];
            let ok = if i == j {
                ef == &vec![(emb.h[i], F::one())]
            } else {
                ef.is_empty()
            };
            if !ok {
                fail(format!("[e{i}, f{j}] ≠ δ·h"));
            }
        }
    }
    let inside: BTreeSet<usize> = emb.basis.iter().copied().collect();
    'outer: for &a in &emb.basis {
        for &b in &emb.basis {
            if table[a][b].iter().any(|(k, _)| !inside.contains(k)) {
                fail(format!("g_Δ is not closed: [b{a}, b{b}]"));
                break 'outer;
            }
        }
    }
}
