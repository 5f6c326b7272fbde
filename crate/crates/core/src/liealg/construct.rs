use std::collections::HashMap;

use crate::exactlin::{inverse, BasisCoordinates, Field, Mat, Vector};
use crate::rootsys::{Family, Limits, RootSystem, Weight};

use super::algebra::{GDeltaEmbedding, GradedLieAlgebra};
use super::coord::CoordinateAlgebra;
use super::validate::validate;
use super::LieAlgebraError;

fn flatten<F: Field>(m: &Mat<F>) -> Vector<F> {
    m.entries().to_vec()
}

/// Structure constants of a family of linearly independent matrices closed
/// under commutators.
pub(crate) fn structure_from_matrices<F: Field>(mats: &[Mat<F>]) -> Result<Vec<Vec<Vector<F>>>, LieAlgebraError> {
    let (r, c) = mats[0].shape();
    let flat: Vec<Vector<F>> = mats.iter().map(flatten).collect();
    let coords = BasisCoordinates::new(r * c, &flat)
        .map_err(|e| LieAlgebraError::Inconsistent(format!("matrix basis: {e}")))?;
    let mut table = Vec::with_capacity(mats.len());
    for a in mats {
        let mut row = Vec::with_capacity(mats.len());
        for b in mats {
            let v = coords
                .coords(&flatten(&a.commutator(b)))
                .ok_or_else(|| LieAlgebraError::Inconsistent("matrix span is not closed under brackets".into()))?;
            row.push(v);
        }
        table.push(row);
    }
    Ok(table)
}

/// Simple root vectors `e_i` of the defining matrix realization.
fn simple_root_matrices<F: Field>(family: Family, r: usize) -> (usize, Vec<Mat<F>>) {
    let pair = |m: usize, a: usize, b: usize, c: usize, d: usize| {
        Mat::unit(m, m, a, b).sub(&Mat::unit(m, m, c, d))
    };
    match family {
        Family::A => {
            let m = r + 1;
            (m, (0..r).map(|i| Mat::unit(m, m, i, i + 1)).collect())
        }
        Family::B => {
            let m = 2 * r + 1;
            let mut es: Vec<Mat<F>> = (0..r - 1).map(|i| pair(m, i, i + 1, r + i + 1, r + i)).collect();
            es.push(pair(m, r - 1, 2 * r, 2 * r, 2 * r - 1));
            (m, es)
        }
        Family::C => {
            let m = 2 * r;
            let mut es: Vec<Mat<F>> = (0..r - 1).map(|i| pair(m, i, i + 1, r + i + 1, r + i)).collect();
            es.push(Mat::unit(m, m, r - 1, 2 * r - 1));
            (m, es)
        }
        Family::D => {
            let m = 2 * r;
            let mut es: Vec<Mat<F>> = (0..r - 1).map(|i| pair(m, i, i + 1, r + i + 1, r + i)).collect();
            es.push(pair(m, r - 2, 2 * r - 1, r - 1, 2 * r - 2));
            (m, es)
        }
    }
}

/// Weight of a matrix `X` with `[h_j, X] = c_j X`, or `None` if `X` is not
/// a common eigenvector with integer eigenvalues.
fn matrix_weight<F: Field>(hs: &[Mat<F>], x: &Mat<F>) -> Option<Weight> {
    let pos = x.entries().iter().position(|v| !v.is_zero())?;
    let mut coords = Vec::with_capacity(hs.len());
    for h in hs {
        let hx = h.commutator(x);
        let c = hx.entries()[pos].clone() / &x.entries()[pos];
        if hx != x.scale(&c) {
            return None;
        }
        coords.push(c.as_integer()?);
    }
    Some(Weight(coords))
}

fn root_label(prefix: &str, rank: usize, levels: &[i64]) -> String {
    if rank == 1 {
        return prefix.to_string();
    }
    if levels.iter().sum::<i64>() == 1 {
        let i = levels.iter().position(|&l| l == 1).unwrap_or(0);
        return format!("{prefix}{}", i + 1);
    }
    let joined: Vec<String> = levels.iter().map(|l| l.to_string()).collect();
    format!("{prefix}[{}]", joined.join(","))
}

fn matrix_algebra_name(family: Family, r: usize) -> String {
    match family {
        Family::A => format!("sl{}", r + 1),
        Family::B => format!("so{}", 2 * r + 1),
        Family::C => format!("sp{}", 2 * r),
        Family::D => format!("so{}", 2 * r),
    }
}

/// The split simple Lie algebra of type `rs`, realized by matrices.
///
/// Basis order: positive root vectors (in the order of
/// `rs.positive_roots()`), then `ȟ_1, …, ȟ_r`, then negative root vectors.
pub fn build_chevalley<F: Field>(rs: &RootSystem) -> Result<GradedLieAlgebra<F>, LieAlgebraError> {
    let r = rs.rank();
    let (_, es) = simple_root_matrices::<F>(rs.family(), r);
    let mut fs: Vec<Mat<F>> = es.iter().map(|e| e.transpose()).collect();
    let mut hs: Vec<Mat<F>> = Vec::with_capacity(r);
    for i in 0..r {
        let h = es[i].commutator(&fs[i]);
        let he = h.commutator(&es[i]);
        let pos = es[i].entries().iter().position(|v| !v.is_zero()).expect("nonzero generator");
        let c = he.entries()[pos].clone() / &es[i].entries()[pos];
        if c.is_zero() {
            return Err(LieAlgebraError::Inconsistent(format!("degenerate sl2 triple {i}")));
        }
        let s = F::from_i64(2) / &c;
        fs[i] = fs[i].scale(&s);
        hs.push(h.scale(&s));
    }

    let mut by_weight: HashMap<Weight, Mat<F>> = HashMap::new();
    for gens in [&es, &fs] {
        let mut queue: Vec<Mat<F>> = gens.clone();
        for g in gens.iter() {
            let w = matrix_weight(&hs, g).ok_or_else(|| LieAlgebraError::Inconsistent("generator is not a weight vector".into()))?;
            by_weight.insert(w, g.clone());
        }
        while let Some(x) = queue.pop() {
            for g in gens.iter() {
                let y = g.commutator(&x);
                if y.is_zero() {
                    continue;
                }
                let w = matrix_weight(&hs, &y)
                    .ok_or_else(|| LieAlgebraError::Inconsistent("bracket is not a weight vector".into()))?;
                if let std::collections::hash_map::Entry::Vacant(slot) = by_weight.entry(w) {
                    slot.insert(y.clone());
                    queue.push(y);
                }
            }
        }
    }
    if by_weight.len() != rs.roots().len() {
        return Err(LieAlgebraError::Inconsistent(format!(
            "found {} root vectors, expected {}",
            by_weight.len(),
            rs.roots().len()
        )));
    }

    let npos = rs.positive_roots().len();
    let mut mats = Vec::with_capacity(2 * npos + r);
    let mut labels = Vec::with_capacity(2 * npos + r);
    for (k, a) in rs.positive_roots().iter().enumerate() {
        let m = by_weight
            .get(a)
            .ok_or_else(|| LieAlgebraError::Inconsistent(format!("no root vector for {a}")))?;
        mats.push(m.clone());
        labels.push(root_label("e", r, rs.simple_levels(k)));
    }
    for (i, h) in hs.iter().enumerate() {
        mats.push(h.clone());
        labels.push(if r == 1 { "h".to_string() } else { format!("h{}", i + 1) });
    }
    for (k, a) in rs.positive_roots().iter().enumerate() {
        let m = by_weight
            .get(&-a)
            .ok_or_else(|| LieAlgebraError::Inconsistent(format!("no root vector for -{a}")))?;
        mats.push(m.clone());
        labels.push(root_label("f", r, rs.simple_levels(k)));
    }
    let simple_pos = |j: usize| rs.positive_roots().iter().position(|a| a == &rs.simple_roots()[j]);
    let e: Vec<usize> = (0..r).map(|j| simple_pos(j).expect("simple roots are positive")).collect();
    let f: Vec<usize> = e.iter().map(|&k| npos + r + k).collect();
    let h: Vec<usize> = (npos..npos + r).collect();
    // Use the normalized generators themselves for the simple root spaces.
    for j in 0..r {
        mats[e[j]] = es[j].clone();
        mats[f[j]] = fs[j].clone();
    }
    let table = structure_from_matrices(&mats)?;
    let g_delta = GDeltaEmbedding {
        e,
        f,
        h,
        basis: (0..mats.len()).collect(),
    };
    let g = GradedLieAlgebra::from_table(
        matrix_algebra_name(rs.family(), r),
        labels,
        table,
        rs.clone(),
        g_delta,
        Some(mats),
    )?;
    finish(g)
}

/// Convenience wrapper building the root system first.
pub fn build_chevalley_of_type<F: Field>(
    family: Family,
    rank: usize,
    limits: &Limits,
) -> Result<GradedLieAlgebra<F>, LieAlgebraError> {
    let rs = RootSystem::build(family, rank, limits)?;
    build_chevalley(&rs)
}

fn finish<F: Field>(g: GradedLieAlgebra<F>) -> Result<GradedLieAlgebra<F>, LieAlgebraError> {
    let report = validate(&g);
    if !report.is_valid() {
        return Err(LieAlgebraError::Invalid(report.first_failure().unwrap_or_default()));
    }
    Ok(g)
}

/// `A ⊗ g_Δ` with `[a⊗x, a'⊗x'] = aa'⊗[x,x']`. Basis `a_k ⊗ b_j` sits at
/// index `k·dim(g_Δ) + j`, with `a_0 = 1`.
pub fn build_tensor<F: Field>(
    a: &CoordinateAlgebra<F>,
    gd: &GradedLieAlgebra<F>,
) -> Result<GradedLieAlgebra<F>, LieAlgebraError> {
    let a = a.with_unit_first();
    let d = a.dim();
    let n = gd.dim();
    if d == 1 {
        return Ok(gd.clone());
    }
    let idx = |k: usize, j: usize| k * n + j;
    let mut table = vec![vec![Vec::new(); d * n]; d * n];
    for k in 0..d {
        for l in 0..d {
            for i in 0..n {
                for j in 0..n {
                    let br = gd.bracket_basis(i, j);
                    if br.is_empty() {
                        continue;
                    }
                    let mut acc: Vec<(usize, F)> = Vec::new();
                    for m in 0..d {
                        let c = a.structure_constant(k, l, m);
                        if c.is_zero() {
                            continue;
                        }
                        for (p, s) in br {
                            acc.push((idx(m, *p), c.clone() * s));
                        }
                    }
                    acc.sort_by_key(|t| t.0);
                    acc.retain(|t| !t.1.is_zero());
                    table[idx(k, i)][idx(l, j)] = acc;
                }
            }
        }
    }
    let labels = (0..d)
        .flat_map(|k| gd.labels().iter().map(move |lab| (k, lab)))
        .map(|(k, lab)| format!("{}⊗{}", a.labels()[k], lab))
        .collect();
    let natural = gd.natural_representation().map(|mats| {
        (0..d)
            .flat_map(|k| {
                let lk = a.left_mul_matrix(&crate::exactlin::unit_vec(d, k));
                mats.iter().map(move |m| lk.kron(m)).collect::<Vec<_>>()
            })
            .collect()
    });
    let src = gd.g_delta();
    let g = GradedLieAlgebra::from_sparse_table(
        format!("A[dim {d}]⊗{}", gd.name()),
        labels,
        table,
        gd.root_system().clone(),
        src.clone(),
        natural,
    )?;
    finish(g)
}

/// `gl_n(A) = A ⊗ M_n` with the commutator bracket. The diagonal units
/// `1⊗E_ii` (`i < n`) are replaced by the coroots `1⊗(E_ii − E_{i+1,i+1})`.
pub fn build_gln<F: Field>(
    a: &CoordinateAlgebra<F>,
    n: usize,
    limits: &Limits,
) -> Result<GradedLieAlgebra<F>, LieAlgebraError> {
    if n < 2 {
        return Err(LieAlgebraError::Shape("gl_n needs n ≥ 2".into()));
    }
    let rs = RootSystem::build(Family::A, n - 1, limits)?;
    let a = a.with_unit_first();
    let d = a.dim();
    let n2 = n * n;
    let dim = d * n2;
    let idx = |k: usize, i: usize, j: usize| k * n2 + i * n + j;

    // Raw table on a_k ⊗ E_ij.
    let mut raw = vec![vec![vec![F::zero(); dim]; dim]; dim];
    for k in 0..d {
        for l in 0..d {
            for (i, j, p, q) in (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).flat_map(move |p| (0..n).map(move |q| (i, j, p, q))))) {
                let out = &mut raw[idx(k, i, j)][idx(l, p, q)];
                for m in 0..d {
                    let c = a.structure_constant(k, l, m);
                    if c.is_zero() {
                        continue;
                    }
                    if j == p {
                        let s = &mut out[idx(m, i, q)];
                        *s = std::mem::replace(s, F::zero()) + c;
                    }
                    if q == i {
                        let s = &mut out[idx(m, p, j)];
                        *s = std::mem::replace(s, F::zero()) - c.clone();
                    }
                }
            }
        }
    }

    let mut p = Mat::identity(dim);
    for i in 0..n - 1 {
        p[(idx(0, i + 1, i + 1), idx(0, i, i))] = -F::one();
    }
    let p_inv = inverse(&p)
        .map_err(|e| LieAlgebraError::Inconsistent(e.to_string()))?
        .ok_or_else(|| LieAlgebraError::Inconsistent("singular basis change".into()))?;
    let cols = p.columns();
    let bracket_raw = |x: &[F], y: &[F]| {
        let mut out = vec![F::zero(); dim];
        for (s, xs) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (t, yt) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                crate::exactlin::add_scaled(&mut out, &(xs.clone() * yt), &raw[s][t]);
            }
        }
        out
    };
    let table: Vec<Vec<Vector<F>>> = (0..dim)
        .map(|s| (0..dim).map(|t| p_inv.mul_vec(&bracket_raw(&cols[s], &cols[t]))).collect())
        .collect();

    let mut labels = Vec::with_capacity(dim);
    for k in 0..d {
        for i in 0..n {
            for j in 0..n {
                let core = if k == 0 && i == j && i < n - 1 {
                    format!("h{}", i + 1)
                } else {
                    format!("E{}{}", i + 1, j + 1)
                };
                labels.push(if k == 0 { core } else { format!("{}⊗{}", a.labels()[k], core) });
            }
        }
    }
    let natural: Vec<Mat<F>> = cols
        .iter()
        .map(|c| {
            let mut acc = Mat::zeros(n * d, n * d);
            for (s, x) in c.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let (k, rest) = (s / n2, s % n2);
                let (i, j) = (rest / n, rest % n);
                let lk = a.left_mul_matrix(&crate::exactlin::unit_vec(d, k));
                acc = acc.add(&Mat::unit(n, n, i, j).kron(&lk).scale(x));
            }
            acc
        })
        .collect();
    let g_delta = GDeltaEmbedding {
        e: (0..n - 1).map(|i| idx(0, i, i + 1)).collect(),
        f: (0..n - 1).map(|i| idx(0, i + 1, i)).collect(),
        h: (0..n - 1).map(|i| idx(0, i, i)).collect(),
        basis: (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j || i < n - 1)
            .map(|(i, j)| idx(0, i, j))
            .collect(),
    };
    let name = if d == 1 { format!("gl{n}") } else { format!("gl{n}(A[dim {d}])") };
    let g = GradedLieAlgebra::from_table(name, labels, table, rs, g_delta, Some(natural))?;
    finish(g)
}

/// `V ⋊ g` for a `g`-module `V` given by one action matrix per basis vector
/// of `g`. Basis: `g` first, then `V`.
pub fn build_abelian_extension<F: Field>(
    gd: &GradedLieAlgebra<F>,
    action: &[Mat<F>],
) -> Result<GradedLieAlgebra<F>, LieAlgebraError> {
    let n = gd.dim();
    if action.len() != n {
        return Err(LieAlgebraError::Shape(format!("expected {n} action matrices, got {}", action.len())));
    }
    let m = action.first().map(|a| a.nrows()).unwrap_or(0);
    if action.iter().any(|a| a.shape() != (m, m)) {
        return Err(LieAlgebraError::Shape(format!("action matrices must all be {m}x{m}")));
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut lhs = Mat::zeros(m, m);
            for (k, c) in gd.bracket_basis(i, j) {
                lhs = lhs.add(&action[*k].scale(c));
            }
            if lhs != action[i].commutator(&action[j]) {
                return Err(LieAlgebraError::NotAModule { left: i, right: j });
            }
        }
    }
    let dim = n + m;
    let mut table = vec![vec![Vec::new(); dim]; dim];
    for i in 0..n {
        for j in 0..n {
            table[i][j] = gd.bracket_basis(i, j).to_vec();
        }
        for k in 0..m {
            let col: Vec<(usize, F)> = (0..m)
                .filter(|&r| !action[i][(r, k)].is_zero())
                .map(|r| (n + r, action[i][(r, k)].clone()))
                .collect();
            table[n + k][i] = col.iter().map(|(r, c)| (*r, -c.clone())).collect();
            table[i][n + k] = col;
        }
    }
    let mut labels = gd.labels().to_vec();
    labels.extend((1..=m).map(|k| format!("v{k}")));
    let natural = gd.natural_representation().map(|nat| {
        let w = nat[0].nrows();
        let size = m + 1 + w;
        let mut out = Vec::with_capacity(dim);
        for (i, x) in nat.iter().enumerate() {
            let mut b = Mat::zeros(size, size);
            for r in 0..m {
                for c in 0..m {
                    b[(r, c)] = action[i][(r, c)].clone();
                }
            }
            for r in 0..w {
                for c in 0..w {
                    b[(m + 1 + r, m + 1 + c)] = x[(r, c)].clone();
                }
            }
            out.push(b);
        }
        for k in 0..m {
            out.push(Mat::unit(size, size, k, m));
        }
        out
    });
    let g = GradedLieAlgebra::from_sparse_table(
        format!("{}⋉V{m}", gd.name()),
        labels,
        table,
        gd.root_system().clone(),
        gd.g_delta().clone(),
        natural,
    )?;
    finish(g)
}
