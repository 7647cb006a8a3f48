use super::matrix::dot;
use super::{FieldSpec, LinalgError, Matrix, Scalar};

/// A subspace of `F^m`, stored as the nonzero rows of its reduced row-echelon basis.
///
/// Equal subspaces compare equal: the RREF basis is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_spanning(field: FieldSpec, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let m = Matrix::from_rows(field, ambient_dim, vectors).expect("spanning vectors have ambient length");
        let (r, pivots) = m.rref();
        let mut basis = Matrix::zeros(field, 0, ambient_dim);
        for i in 0..pivots.len() {
            basis.push_row(r.row(i).to_vec());
        }
        Subspace {
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Self::from_spanning(field, ambient_dim, Vec::new())
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Self::from_spanning(field, ambient_dim, Matrix::identity(field, ambient_dim).row_vecs())
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim - self.dim()
    }

    /// RREF basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is outside the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient_dim);
        // In RREF the coordinate on basis row i is the entry of v at pivot i.
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let field = self.field();
        for c in 0..self.ambient_dim {
            let recon = (0..self.dim()).fold(field.zero(), |acc, i| &acc + &(&coords[i] * &self.basis[(i, c)]));
            if recon != v[c] {
                return None;
            }
        }
        Some(coords)
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(other.vectors().iter().all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let mut vs = self.vectors();
        vs.extend(other.vectors());
        Ok(Subspace::from_spanning(self.field(), self.ambient_dim, vs))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let field = self.field();
        let (k, l) = (self.dim(), other.dim());
        // Solve a·U = b·W through the kernel of [Uᵀ | -Wᵀ].
        let mut sys = Matrix::zeros(field, self.ambient_dim, k + l);
        for c in 0..self.ambient_dim {
            for i in 0..k {
                sys[(c, i)] = self.basis[(i, c)].clone();
            }
            for j in 0..l {
                sys[(c, k + j)] = -&other.basis[(j, c)];
            }
        }
        let vectors = sys
            .kernel_basis()
            .vectors()
            .into_iter()
            .map(|sol| {
                (0..self.ambient_dim)
                    .map(|c| dot(field, &sol[..k], &self.basis.column(c)))
                    .collect()
            })
            .collect();
        Ok(Subspace::from_spanning(field, self.ambient_dim, vectors))
    }

    /// Standard basis vectors at the non-pivot coordinates; a complement of `self` in `F^m`.
    pub fn complement(&self) -> Subspace {
        let field = self.field();
        let vectors = (0..self.ambient_dim)
            .filter(|c| !self.pivots.contains(c))
            .map(|c| unit(field, self.ambient_dim, c))
            .collect();
        Subspace::from_spanning(field, self.ambient_dim, vectors)
    }

    /// A complement of `self` inside `outer`, built greedily from `outer`'s RREF rows.
    pub fn complement_within(&self, outer: &Subspace) -> Result<Subspace, LinalgError> {
        if !outer.contains(self)? {
            return Err(LinalgError::NotASubspace);
        }
        let mut acc = self.vectors();
        let mut picked = Vec::new();
        let mut rank = self.dim();
        for v in outer.vectors() {
            acc.push(v.clone());
            let r = Subspace::from_spanning(self.field(), self.ambient_dim, acc.clone()).dim();
            if r > rank {
                rank = r;
                picked.push(v);
            } else {
                acc.pop();
            }
        }
        Ok(Subspace::from_spanning(self.field(), self.ambient_dim, picked))
    }

    /// Image of the subspace under `m` (acting on column vectors).
    pub fn map(&self, m: &Matrix) -> Subspace {
        let vectors = self.vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::from_spanning(self.field(), m.rows(), vectors)
    }

    /// Quotient coordinates `F^m → F^m / self`, taken along the pivot-completion complement.
    pub fn quotient_map(&self) -> Decomposition {
        Decomposition::new(self, &self.complement()).expect("pivot completion is a complement")
    }
}

pub(crate) fn unit(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// A direct-sum splitting `F^m = U ⊕ C` with coordinates against the RREF bases of both parts.
#[derive(Clone, Debug)]
pub struct Decomposition {
    first: Subspace,
    second: Subspace,
    // Row i of `to_coords` is the i-th coordinate functional; the first `first.dim()` belong to U.
    to_coords: Matrix,
}

impl Decomposition {
    pub fn new(first: &Subspace, second: &Subspace) -> Result<Self, LinalgError> {
        first.check(second)?;
        let m = first.ambient_dim;
        if first.dim() + second.dim() != m {
            return Err(LinalgError::NotComplementary);
        }
        let basis = first.basis.vstack(&second.basis);
        // v = coordsᵀ · basis, so coords = (basisᵀ)⁻¹ v.
        let to_coords = basis
            .transpose()
            .inverse()
            .ok_or(LinalgError::NotComplementary)?;
        Ok(Decomposition {
            first: first.clone(),
            second: second.clone(),
            to_coords,
        })
    }

    pub fn first(&self) -> &Subspace {
        &self.first
    }

    pub fn second(&self) -> &Subspace {
        &self.second
    }

    /// Coordinates of `v` along the first summand.
    pub fn first_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        let all = self.to_coords.mul_vec(v);
        all[..self.first.dim()].to_vec()
    }

    /// Coordinates of `v` along the second summand, i.e. quotient coordinates of `v + U`.
    pub fn second_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        let all = self.to_coords.mul_vec(v);
        all[self.first.dim()..].to_vec()
    }

    /// Matrix whose rows are the coordinate functionals for the first summand.
    pub fn first_functionals(&self) -> Matrix {
        let mut m = Matrix::zeros(self.to_coords.field(), 0, self.to_coords.cols());
        for i in 0..self.first.dim() {
            m.push_row(self.to_coords.row(i).to_vec());
        }
        m
    }

    /// Matrix whose rows are the coordinate functionals for the second summand.
    pub fn second_functionals(&self) -> Matrix {
        let mut m = Matrix::zeros(self.to_coords.field(), 0, self.to_coords.cols());
        for i in self.first.dim()..self.to_coords.rows() {
            m.push_row(self.to_coords.row(i).to_vec());
        }
        m
    }

    /// Projection onto the first summand along the second.
    pub fn project_first(&self, v: &[Scalar]) -> Vec<Scalar> {
        let coords = self.first_coords(v);
        let field = self.first.field();
        (0..self.first.ambient_dim)
            .map(|c| dot(field, &coords, &self.first.basis.column(c)))
            .collect()
    }
}
