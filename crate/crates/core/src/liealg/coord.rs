use crate::exactlin::{inverse, rank, solve, unit_vec, Field, Mat, Vector};

use super::LieAlgebraError;

/// Finite-dimensional commutative unital associative algebra, given by its
/// structure tensor `e_i·e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateAlgebra<F> {
    dim: usize,
    structure: Vec<F>,
    unit: Vector<F>,
    labels: Vec<String>,
}

impl<F: Field> CoordinateAlgebra<F> {
    /// Validates commutativity, associativity and the unit law.
    pub fn new(structure: Vec<Vec<Vec<F>>>, unit: Vector<F>) -> Result<Self, LieAlgebraError> {
        let dim = unit.len();
        if dim == 0 {
            return Err(LieAlgebraError::InvalidCoordinateAlgebra("dimension must be positive".into()));
        }
        if structure.len() != dim
            || structure.iter().any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim))
        {
            return Err(LieAlgebraError::InvalidCoordinateAlgebra(format!(
                "structure tensor must have shape {dim}x{dim}x{dim}"
            )));
        }
        let flat: Vec<F> = structure.into_iter().flatten().flatten().collect();
        let labels = (0..dim).map(|i| format!("a{i}")).collect();
        let alg = Self {
            dim,
            structure: flat,
            unit,
            labels,
        };
        alg.check_axioms()?;
        Ok(alg)
    }

    fn check_axioms(&self) -> Result<(), LieAlgebraError> {
        let d = self.dim;
        let basis: Vec<Vector<F>> = (0..d).map(|i| unit_vec(d, i)).collect();
        for i in 0..d {
            for j in 0..d {
                if self.mul(&basis[i], &basis[j]) != self.mul(&basis[j], &basis[i]) {
                    return Err(LieAlgebraError::InvalidCoordinateAlgebra(format!(
                        "not commutative on basis pair ({i},{j})"
                    )));
                }
                for k in 0..d {
                    let left = self.mul(&self.mul(&basis[i], &basis[j]), &basis[k]);
                    let right = self.mul(&basis[i], &self.mul(&basis[j], &basis[k]));
                    if left != right {
                        return Err(LieAlgebraError::InvalidCoordinateAlgebra(format!(
                            "not associative on basis triple ({i},{j},{k})"
                        )));
                    }
                }
            }
            if self.mul(&self.unit, &basis[i]) != basis[i] {
                return Err(LieAlgebraError::InvalidCoordinateAlgebra(format!(
                    "unit law fails on basis vector {i}"
                )));
            }
        }
        Ok(())
    }

    fn from_parts(dim: usize, structure: Vec<F>, unit: Vector<F>, labels: &[&str]) -> Self {
        Self {
            dim,
            structure,
            unit,
            labels: labels.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// The ground field itself.
    pub fn rationals() -> Self {
        Self::from_parts(1, vec![F::one()], vec![F::one()], &["1"])
    }

    /// `Q[ε]/(ε²)`.
    pub fn dual_numbers() -> Self {
        let (o, z) = (F::one(), F::zero());
        // 1·1 = 1, 1·ε = ε, ε·ε = 0
        let structure = vec![o.clone(), z.clone(), z.clone(), o.clone(), z.clone(), o, z.clone(), z.clone()];
        Self::from_parts(2, structure, vec![F::one(), F::zero()], &["1", "ε"])
    }

    /// `Q × ⋯ × Q` with `copies` orthogonal idempotents as basis.
    pub fn split(copies: usize) -> Self {
        let d = copies;
        let mut structure = vec![F::zero(); d * d * d];
        for i in 0..d {
            structure[(i * d + i) * d + i] = F::one();
        }
        let labels: Vec<String> = (1..=d).map(|i| format!("p{i}")).collect();
        Self {
            dim: d,
            structure,
            unit: vec![F::one(); d],
            labels,
        }
    }

    /// `Q[t]/(t^m)`.
    pub fn truncated_polynomials(m: usize) -> Self {
        let mut structure = vec![F::zero(); m * m * m];
        for i in 0..m {
            for j in 0..m {
                if i + j < m {
                    structure[(i * m + j) * m + i + j] = F::one();
                }
            }
        }
        let labels: Vec<String> = (0..m)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            })
            .collect();
        Self {
            dim: m,
            structure,
            unit: unit_vec(m, 0),
            labels,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `c[i][j][k]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &F {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn structure_tensor(&self) -> Vec<Vec<Vec<F>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| (0..self.dim).map(|k| self.structure_constant(i, j, k).clone()).collect())
                    .collect()
            })
            .collect()
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vector<F> {
        let d = self.dim;
        let mut out = vec![F::zero(); d];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.clone() * y;
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.structure_constant(i, j, k);
                    if !c.is_zero() {
                        *slot = std::mem::replace(slot, F::zero()) + &(xy.clone() * c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `L_a : x ↦ a·x`.
    pub fn left_mul_matrix(&self, a: &[F]) -> Mat<F> {
        let d = self.dim;
        let cols: Vec<Vector<F>> = (0..d).map(|k| self.mul(a, &unit_vec(d, k))).collect();
        Mat::from_columns(d, &cols).expect("square by construction")
    }

    /// `Some(a⁻¹)` iff `L_a` is invertible.
    pub fn inverse_of(&self, a: &[F]) -> Option<Vector<F>> {
        let l = self.left_mul_matrix(a);
        if rank(&l) < self.dim {
            return None;
        }
        solve(&l, &self.unit).ok().flatten()
    }

    pub fn is_invertible(&self, a: &[F]) -> bool {
        self.inverse_of(a).is_some()
    }

    pub fn zero(&self) -> Vector<F> {
        vec![F::zero(); self.dim]
    }

    pub fn scalar(&self, c: F) -> Vector<F> {
        self.unit.iter().map(|u| u.clone() * &c).collect()
    }

    /// An isomorphic copy whose first basis vector is the unit.
    pub fn with_unit_first(&self) -> Self {
        let d = self.dim;
        if self.unit == unit_vec::<F>(d, 0) {
            return self.clone();
        }
        let drop = self.unit.iter().position(|x| !x.is_zero()).expect("unit is nonzero");
        let mut new_basis = vec![self.unit.clone()];
        let mut labels = vec!["1".to_string()];
        for j in (0..d).filter(|&j| j != drop) {
            new_basis.push(unit_vec(d, j));
            labels.push(self.labels[j].clone());
        }
        let p = Mat::from_columns(d, &new_basis).expect("square");
        let p_inv = inverse(&p).expect("square").expect("unit completes to a basis");
        let mut structure = vec![F::zero(); d * d * d];
        for a in 0..d {
            for b in 0..d {
                let coords = p_inv.mul_vec(&self.mul(&new_basis[a], &new_basis[b]));
                for (c, x) in coords.into_iter().enumerate() {
                    structure[(a * d + b) * d + c] = x;
                }
            }
        }
        Self {
            dim: d,
            structure,
            unit: unit_vec(d, 0),
            labels,
        }
    }
}
