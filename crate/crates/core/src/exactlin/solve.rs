use super::field::Field;
use super::matrix::{add_scaled, is_zero_vec, Mat, Vector};
use super::LinAlgError;

/// Reduced row echelon form together with the pivot columns.
pub fn rref<F: Field>(m: &Mat<F>) -> (Mat<F>, Vec<usize>) {
    let mut rows = m.rows_vec();
    let ncols = m.ncols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = F::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = -row[c].clone();
                add_scaled(row, &f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let out = if rows.is_empty() {
        Mat::zeros(0, ncols)
    } else {
        Mat::from_rows(rows).expect("rows keep their width")
    };
    (out, pivots)
}

/// Rank over the field.
pub fn rank<F: Field>(m: &Mat<F>) -> usize {
    let mut basis = EchelonBasis::new(m.ncols());
    for i in 0..m.nrows() {
        basis.insert(m.row(i));
    }
    basis.len()
}

/// Basis of the right null space `{k : m·k = 0}`.
pub fn kernel_basis<F: Field>(m: &Mat<F>) -> Vec<Vector<F>> {
    let (r, pivots) = rref(m);
    let n = m.ncols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![F::zero(); n];
        v[free] = F::one();
        for (row, &p) in pivots.iter().enumerate() {
            let x = &r[(row, free)];
            if !x.is_zero() {
                v[p] = -x.clone();
            }
        }
        out.push(v);
    }
    out
}

/// One solution of `a·x = b`, or `None` if the system is inconsistent.
pub fn solve<F: Field>(a: &Mat<F>, b: &[F]) -> Result<Option<Vector<F>>, LinAlgError> {
    if b.len() != a.nrows() {
        return Err(LinAlgError::DimensionMismatch {
            op: "solve",
            left: a.shape(),
            right: (b.len(), 1),
        });
    }
    let aug = a.hstack(&Mat::from_columns(a.nrows(), &[b.to_vec()])?)?;
    let (r, pivots) = rref(&aug);
    let n = a.ncols();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![F::zero(); n];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, n)].clone();
    }
    Ok(Some(x))
}

/// Incrementally maintained reduced echelon basis of a subspace of `F^n`.
///
/// Keeps both the reduced rows (for membership tests) and the original
/// independent vectors in insertion order.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F> {
    dim: usize,
    reduced: Vec<(usize, Vector<F>)>,
    originals: Vec<Vector<F>>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            reduced: Vec::new(),
            originals: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.originals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.originals.is_empty()
    }

    fn reduce(&self, v: &[F]) -> Vector<F> {
        let mut w = v.to_vec();
        for (p, r) in &self.reduced {
            if !w[*p].is_zero() {
                let f = -w[*p].clone();
                add_scaled(&mut w, &f, r);
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length does not match ambient dimension");
        is_zero_vec(&self.reduce(v))
    }

    /// Inserts `v`; returns `true` iff it was independent of the current span.
    pub fn insert(&mut self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length does not match ambient dimension");
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = F::one() / &w[p];
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * &inv;
            }
        }
        for (_, r) in self.reduced.iter_mut() {
            if !r[p].is_zero() {
                let f = -r[p].clone();
                add_scaled(r, &f, &w);
            }
        }
        self.reduced.push((p, w));
        self.originals.push(v.to_vec());
        true
    }

    /// Independent vectors as inserted.
    pub fn basis(&self) -> &[Vector<F>] {
        &self.originals
    }

    pub fn into_basis(self) -> Vec<Vector<F>> {
        self.originals
    }
}

/// Extracts a basis of the span of `vectors` (a subset, order preserved).
pub fn span_basis<F: Field>(dim: usize, vectors: &[Vector<F>]) -> Vec<Vector<F>> {
    let mut eb = EchelonBasis::new(dim);
    for v in vectors {
        eb.insert(v);
    }
    eb.into_basis()
}

/// Whether two families span the same subspace.
pub fn same_span<F: Field>(dim: usize, a: &[Vector<F>], b: &[Vector<F>]) -> bool {
    let ea = {
        let mut e = EchelonBasis::new(dim);
        a.iter().for_each(|v| {
            e.insert(v);
        });
        e
    };
    let eb = {
        let mut e = EchelonBasis::new(dim);
        b.iter().for_each(|v| {
            e.insert(v);
        });
        e
    };
    ea.len() == eb.len() && b.iter().all(|v| ea.contains(v))
}

/// Coordinates with respect to a fixed linearly independent family.
///
/// Precomputes an invertible square minor so that each lookup is a single
/// matrix-vector product followed by an exact membership check.
#[derive(Clone, Debug)]
pub struct BasisCoordinates<F> {
    basis: Mat<F>,
    pivot_rows: Vec<usize>,
    inverse: Mat<F>,
}

impl<F: Field> BasisCoordinates<F> {
    /// `basis` columns must be independent.
    pub fn new(dim: usize, basis: &[Vector<F>]) -> Result<Self, LinAlgError> {
        let b = Mat::from_columns(dim, basis)?;
        let (_, pivot_rows) = rref(&b.transpose());
        if pivot_rows.len() != basis.len() {
            return Err(LinAlgError::Dependent);
        }
        let all_cols: Vec<usize> = (0..basis.len()).collect();
        let minor = b.select(&pivot_rows, &all_cols);
        let inverse = inverse(&minor)?.ok_or(LinAlgError::Dependent)?;
        Ok(Self {
            basis: b,
            pivot_rows,
            inverse,
        })
    }

    pub fn len(&self) -> usize {
        self.basis.ncols()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.ncols() == 0
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[F]) -> Option<Vector<F>> {
        if v.len() != self.basis.nrows() {
            return None;
        }
        let picked: Vec<F> = self.pivot_rows.iter().map(|&i| v[i].clone()).collect();
        let c = self.inverse.mul_vec(&picked);
        if self.basis.mul_vec(&c) == v {
            Some(c)
        } else {
            None
        }
    }
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse<F: Field>(m: &Mat<F>) -> Result<Option<Mat<F>>, LinAlgError> {
    if !m.is_square() {
        return Err(LinAlgError::NotSquare(m.shape()));
    }
    let n = m.nrows();
    let aug = m.hstack(&Mat::identity(n))?;
    let (r, pivots) = rref(&aug);
    if pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) || pivots.len() < n {
        return Ok(None);
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    let rows: Vec<usize> = (0..n).collect();
    Ok(Some(r.select(&rows, &cols)))
}

/// Basis of the intersection of the spans of several families.
pub fn intersect_subspaces<F: Field>(dim: usize, bases: &[Vec<Vector<F>>]) -> Result<Vec<Vector<F>>, LinAlgError> {
    let Some((first, rest)) = bases.split_first() else {
        return Ok((0..dim).map(|i| super::matrix::unit_vec(dim, i)).collect());
    };
    let mut current = span_basis(dim, first);
    for other in rest {
        if other.iter().any(|v| v.len() != dim) || current.iter().any(|v| v.len() != dim) {
            return Err(LinAlgError::DimensionMismatch {
                op: "intersect_subspaces",
                left: (dim, 0),
                right: (other.first().map_or(0, Vec::len), 0),
            });
        }
        if current.is_empty() {
            break;
        }
        let other = span_basis(dim, other);
        // Solve A x = B y, i.e. kernel of [A | -B].
        let a = Mat::from_columns(dim, &current)?;
        let b = Mat::from_columns(dim, &other)?.neg();
        let ker = kernel_basis(&a.hstack(&b)?);
        let k = current.len();
        let vectors: Vec<Vector<F>> = ker.iter().map(|z| a.mul_vec(&z[..k])).collect();
        current = span_basis(dim, &vectors);
    }
    Ok(current)
}

/// Rows spanning the annihilator of `span(basis)`: a matrix `q` with
/// `ker q = span(basis)`.
pub fn annihilator<F: Field>(dim: usize, basis: &[Vector<F>]) -> Result<Mat<F>, LinAlgError> {
    if basis.is_empty() {
        return Ok(Mat::identity(dim));
    }
    let bt = Mat::from_columns(dim, basis)?.transpose();
    let rows = kernel_basis(&bt);
    if rows.is_empty() {
        return Ok(Mat::zeros(0, dim));
    }
    Mat::from_rows(rows)
}

/// Largest subspace `S ⊆ span(start)` with `m·S ⊆ S` for every `m` in `maps`.
///
/// Runs the decreasing iteration `S ← {v ∈ S : m v ∈ S ∀m}`, which stabilises
/// after at most `dim` rounds.
pub fn greatest_invariant_subspace<F: Field>(
    dim: usize,
    start: &[Vector<F>],
    maps: &[Mat<F>],
) -> Result<Vec<Vector<F>>, LinAlgError> {
    for m in maps {
        if m.shape() != (dim, dim) {
            return Err(LinAlgError::DimensionMismatch {
                op: "greatest_invariant_subspace",
                left: (dim, dim),
                right: m.shape(),
            });
        }
    }
    let mut current = span_basis(dim, start);
    loop {
        if current.is_empty() {
            return Ok(current);
        }
        let basis = Mat::from_columns(dim, &current)?;
        let q = annihilator(dim, &current)?;
        let mut constraints = Mat::zeros(0, current.len());
        for m in maps {
            constraints = constraints.vstack(&q.mul(&m.mul(&basis)))?;
        }
        let ker = kernel_basis(&constraints);
        if ker.len() == current.len() {
            return Ok(current);
        }
        current = ker.iter().map(|c| basis.mul_vec(c)).collect();
    }
}

/// Smallest subspace containing `start` and stable under `maps`.
pub fn orbit_closure<F: Field>(dim: usize, start: &[Vector<F>], maps: &[Mat<F>]) -> Vec<Vector<F>> {
    let mut eb = EchelonBasis::new(dim);
    let mut queue: Vec<Vector<F>> = Vec::new();
    for v in start {
        if eb.insert(v) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for m in maps {
            let w = m.mul_vec(&v);
            if eb.insert(&w) {
                queue.push(w);
            }
        }
    }
    eb.into_basis()
}
