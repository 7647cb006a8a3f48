//! Cyclic matrix groups and the per-element geometry the cohomology computations consume.

use thiserror::Error;

use crate::exec::Execution;
use crate::linalg::{Decomposition, FieldSpec, LinalgError, Matrix, Scalar, Subspace};

/// Default cap on the order search in [`CyclicGroup::from_generator`].
pub const DEFAULT_MAX_ORDER: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("generator must be a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("generator must be nonempty")]
    Empty,
    #[error("generator is not invertible")]
    NotInvertible,
    #[error("generator has no finite order up to {bound}")]
    OrderExceedsBound { bound: usize },
    #[error("characteristic 2 is not supported")]
    CharTwo,
    #[error("element index {index} out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("subspace is not preserved by the group")]
    NotGStable,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Basis pairs `(a, b)` with `a < b` indexing `Λ²F^n`, in lexicographic order.
pub fn wedge_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

/// Coordinates of `u ∧ v` in the basis `e_a ∧ e_b`, `a < b`.
pub fn wedge(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    wedge_pairs(u.len())
        .into_iter()
        .map(|(a, b)| &(&u[a] * &v[b]) - &(&u[b] * &v[a]))
        .collect()
}

/// Matrix of `Λ²m` on the basis `e_a ∧ e_b`, `a < b` (2×2 minors).
pub fn wedge2_matrix(m: &Matrix) -> Matrix {
    let n = m.rows();
    let pairs = wedge_pairs(n);
    let mut w = Matrix::zeros(m.field(), pairs.len(), pairs.len());
    for (q, &(a, b)) in pairs.iter().enumerate() {
        for (r, &(s, t)) in pairs.iter().enumerate() {
            w[(r, q)] = &(&m[(s, a)] * &m[(t, b)]) - &(&m[(t, a)] * &m[(s, b)]);
        }
    }
    w
}

/// The modules on which [`CyclicGroup::induced_action`] can represent an element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Module {
    V,
    DualV,
    Wedge2V,
    /// `V ⊗ Λ²V* ≅ Hom(Λ²V, V)`, flattened row-major as an `n × C(n,2)` grid.
    VTensorWedge2Dual,
    /// `V / U`, in coordinates of the pivot-completion complement of `U`.
    QuotientBy(Subspace),
    /// `U*`, dual to the RREF basis of `U`.
    DualRestrictedTo(Subspace),
}

/// A finite cyclic subgroup of `GL_n(F)` with all of its elements cached as powers of the generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicGroup {
    field: FieldSpec,
    n: usize,
    powers: Vec<Matrix>,
}

impl CyclicGroup {
    pub fn from_generator(field: FieldSpec, generator: Matrix) -> Result<Self, GroupError> {
        Self::from_generator_with_bound(field, generator, DEFAULT_MAX_ORDER)
    }

    pub fn from_generator_with_bound(
        field: FieldSpec,
        generator: Matrix,
        max_order: usize,
    ) -> Result<Self, GroupError> {
        if field.characteristic() == 2 {
            return Err(GroupError::CharTwo);
        }
        if generator.field() != field {
            return Err(LinalgError::FieldMismatch.into());
        }
        if !generator.is_square() {
            return Err(GroupError::NotSquare {
                rows: generator.rows(),
                cols: generator.cols(),
            });
        }
        let n = generator.rows();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if generator.inverse().is_none() {
            return Err(GroupError::NotInvertible);
        }
        let identity = Matrix::identity(field, n);
        let mut powers = vec![identity.clone()];
        let mut current = generator.clone();
        while current != identity {
            if powers.len() >= max_order {
                return Err(GroupError::OrderExceedsBound { bound: max_order });
            }
            powers.push(current.clone());
            current = current.mul(&generator);
        }
        Ok(CyclicGroup { field, n, powers })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// `dim V`.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.powers.len()
    }

    pub fn generator(&self) -> &Matrix {
        if self.powers.len() > 1 {
            &self.powers[1]
        } else {
            &self.powers[0]
        }
    }

    /// `g^i`, exponent taken mod the order.
    pub fn element(&self, i: usize) -> &Matrix {
        &self.powers[i % self.order()]
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.powers
    }

    /// Index of `g^i · g^j`.
    pub fn mul_index(&self, i: usize, j: usize) -> usize {
        (i + j) % self.order()
    }

    fn check_index(&self, i: usize) -> Result<(), GroupError> {
        if i >= self.order() {
            return Err(GroupError::IndexOutOfRange {
                index: i,
                order: self.order(),
            });
        }
        Ok(())
    }

    /// The transfer `T = Σ_h h` on `V` and its image.
    pub fn transfer(&self) -> TransferData {
        let matrix = self
            .powers
            .iter()
            .skip(1)
            .fold(self.powers[0].clone(), |acc, h| acc.add(h));
        let image = matrix.image_basis();
        TransferData { matrix, image }
    }

    /// `V^G`, which equals the fixed space of the generator.
    pub fn invariants(&self) -> Subspace {
        Matrix::identity(self.field, self.n)
            .sub(self.generator())
            .kernel_basis()
    }

    pub fn element_data(&self, i: usize) -> Result<ElementData, GroupError> {
        self.check_index(i)?;
        let h = &self.powers[i];
        let one_minus_h = Matrix::identity(self.field, self.n).sub(h);
        let fixed_space = one_minus_h.kernel_basis();
        let moved_space = one_minus_h.image_basis();
        let fixed_complement = fixed_space.complement();
        let moved_complement = moved_space.complement();
        let fixed_split = Decomposition::new(&fixed_space, &fixed_complement)?;
        self.check_stable(&fixed_space)?;
        self.check_stable(&moved_space)?;
        let chi_of_generator = self.quotient_action(self.generator(), &fixed_split).det();
        Ok(ElementData {
            index: i,
            codim: fixed_space.codim(),
            fixed_space,
            moved_space,
            fixed_complement,
            moved_complement,
            chi_of_generator,
        })
    }

    /// Element data for every element, in power order.
    pub fn all_element_data(&self, exec: Execution) -> Result<Vec<ElementData>, GroupError> {
        exec.map_range(self.order(), |i| self.element_data(i))
            .into_iter()
            .collect()
    }

    /// Errors unless the generator maps `u` onto itself.
    pub fn check_stable(&self, u: &Subspace) -> Result<(), GroupError> {
        if u.map(self.generator()) != *u {
            return Err(GroupError::NotGStable);
        }
        Ok(())
    }

    fn quotient_action(&self, a: &Matrix, split: &Decomposition) -> Matrix {
        let reps = split.second().vectors();
        let k = reps.len();
        let mut q = Matrix::zeros(self.field, k, k);
        for (s, c) in reps.iter().enumerate() {
            let coords = split.second_coords(&a.mul_vec(c));
            for (j, x) in coords.into_iter().enumerate() {
                q[(j, s)] = x;
            }
        }
        q
    }

    fn restricted_action(&self, a: &Matrix, u: &Subspace) -> Matrix {
        let k = u.dim();
        let mut r = Matrix::zeros(self.field, k, k);
        for (s, v) in u.vectors().iter().enumerate() {
            let coords = u.coordinates(&a.mul_vec(v)).expect("subspace is stable");
            for (t, x) in coords.into_iter().enumerate() {
                r[(t, s)] = x;
            }
        }
        r
    }

    /// Matrix of `g^i` on `module`. Dual actions are contragredient: `(ʰf)(m) = f(h⁻¹m)`.
    pub fn induced_action(&self, i: usize, module: &Module) -> Result<Matrix, GroupError> {
        self.check_index(i)?;
        let h = &self.powers[i];
        let h_inv = &self.powers[(self.order() - i) % self.order()];
        Ok(match module {
            Module::V => h.clone(),
            Module::DualV => h_inv.transpose(),
            Module::Wedge2V => wedge2_matrix(h),
            Module::VTensorWedge2Dual => h.kron(&wedge2_matrix(h_inv).transpose()),
            Module::QuotientBy(u) => {
                self.check_stable(u)?;
                self.quotient_action(h, &u.quotient_map())
            }
            Module::DualRestrictedTo(u) => {
                self.check_stable(u)?;
                self.restricted_action(h_inv, u).transpose()
            }
        })
    }

    /// `χ(g^a)` for the character `χ_h` of `data`, computed as a determinant on `V/V^h`.
    pub fn chi_value(&self, data: &ElementData, a: usize) -> Scalar {
        let split = Decomposition::new(&data.fixed_space, &data.fixed_complement)
            .expect("fixed space and its complement");
        self.quotient_action(self.element(a), &split).det()
    }

    pub fn is_nondiagonalizable_reflection(&self, data: &ElementData) -> bool {
        let h = &self.powers[data.index];
        let n = Matrix::identity(self.field, self.n).sub(h);
        data.is_reflection() && !n.is_zero() && n.mul(&n).is_zero()
    }

    /// Whether the characteristic polynomial of the generator splits into linear factors over `F`.
    ///
    /// Eigenvalues of a finite-order rational matrix are roots of unity, so `±1` are the only
    /// rational candidates; over `F_p` every nonzero residue is tried.
    pub fn generator_splits(&self) -> bool {
        let candidates = match self.field.elements() {
            Some(all) => all.into_iter().filter(|x| !x.is_zero()).collect(),
            None => vec![self.field.one(), self.field.from_i64(-1)],
        };
        let g = self.generator();
        let algebraic: usize = candidates
            .iter()
            .map(|c| {
                let shifted = g.sub(&Matrix::scalar(self.field, self.n, c));
                shifted.pow(self.n as u64).kernel_basis().dim()
            })
            .sum();
        algebraic == self.n
    }
}

/// Per-element geometry for `h = g^index`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementData {
    pub index: usize,
    /// `V^h = ker(1 - h)`.
    pub fixed_space: Subspace,
    /// `V_h = im(1 - h)`.
    pub moved_space: Subspace,
    pub codim: usize,
    pub fixed_complement: Subspace,
    pub moved_complement: Subspace,
    /// `χ_h(g) = det(g on V/V^h)`.
    pub chi_of_generator: Scalar,
}

impl ElementData {
    pub fn is_reflection(&self) -> bool {
        self.codim == 1
    }

    pub fn chi_is_trivial(&self) -> bool {
        self.chi_of_generator.is_one()
    }

    /// Splitting `V = V_h ⊕ (V_h)^⊥`; projection onto the first summand is `π_h`.
    pub fn moved_split(&self) -> Decomposition {
        Decomposition::new(&self.moved_space, &self.moved_complement).expect("moved complement")
    }

    /// Splitting `V = V^h ⊕ (V^h)^⊥`.
    pub fn fixed_split(&self) -> Decomposition {
        Decomposition::new(&self.fixed_space, &self.fixed_complement).expect("fixed complement")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferData {
    pub matrix: Matrix,
    pub image: Subspace,
}

#[cfg(test)]
mod tests {
    use super::*;

    const F3: FieldSpec = FieldSpec::Prime(3);
    const F5: FieldSpec = FieldSpec::Prime(5);

    fn transvection(p: u64) -> CyclicGroup {
        let f = FieldSpec::Prime(p);
        CyclicGroup::from_generator(f, Matrix::from_i64(f, &[&[1, 1], &[0, 1]])).unwrap()
    }

    fn span(f: FieldSpec, v: &[i64]) -> Subspace {
        Subspace::from_spanning(f, v.len(), vec![v.iter().map(|&x| f.from_i64(x)).collect()])
    }

    #[test]
    fn orders() {
        assert_eq!(transvection(3).order(), 3);
        let q = FieldSpec::Rational;
        assert_eq!(CyclicGroup::from_generator(q, Matrix::identity(q, 2)).unwrap().order(), 1);
        let d = CyclicGroup::from_generator(F5, Matrix::diagonal(F5, &[2, 3])).unwrap();
        assert_eq!(d.order(), 4);
    }

    #[test]
    fn generator_errors() {
        let q = FieldSpec::Rational;
        assert_eq!(
            CyclicGroup::from_generator(q, Matrix::from_i64(q, &[&[1, 1], &[0, 1]])).unwrap_err(),
            GroupError::OrderExceedsBound { bound: DEFAULT_MAX_ORDER }
        );
        assert_eq!(
            CyclicGroup::from_generator(F5, Matrix::zeros(F5, 2, 2)).unwrap_err(),
            GroupError::NotInvertible
        );
        assert!(matches!(
            CyclicGroup::from_generator(F5, Matrix::zeros(F5, 2, 3)),
            Err(GroupError::NotSquare { .. })
        ));
        let f2 = FieldSpec::Prime(2);
        assert_eq!(
            CyclicGroup::from_generator(f2, Matrix::identity(f2, 2)).unwrap_err(),
            GroupError::CharTwo
        );
        assert_eq!(
            CyclicGroup::from_generator_with_bound(F5, Matrix::diagonal(F5, &[2, 3]), 3).unwrap_err(),
            GroupError::OrderExceedsBound { bound: 3 }
        );
    }

    #[test]
    fn transfer_examples() {
        let t = transvection(3).transfer();
        assert!(t.matrix.is_zero());
        assert_eq!(t.image.dim(), 0);
        let q = FieldSpec::Rational;
        let triv = CyclicGroup::from_generator(q, Matrix::identity(q, 2)).unwrap();
        assert_eq!(triv.transfer().image, Subspace::full(q, 2));
        let g4 = Matrix::from_i64(F3, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]]);
        let gr = CyclicGroup::from_generator(F3, g4).unwrap();
        assert_eq!(gr.order(), 6);
        assert!(gr.transfer().image.dim() > 0);
    }

    #[test]
    fn element_data_examples() {
        let gr = transvection(3);
        let d = gr.element_data(1).unwrap();
        assert_eq!(d.fixed_space, span(F3, &[1, 0]));
        assert_eq!(d.moved_space, span(F3, &[1, 0]));
        assert_eq!(d.codim, 1);
        assert!(d.chi_of_generator.is_one());

        let id = gr.element_data(0).unwrap();
        assert_eq!(id.fixed_space, Subspace::full(F3, 2));
        assert_eq!(id.moved_space.dim(), 0);
        assert_eq!(id.codim, 0);
        assert!(id.chi_of_generator.is_one());

        let gr = CyclicGroup::from_generator(F5, Matrix::diagonal(F5, &[1, -1])).unwrap();
        let d = gr.element_data(1).unwrap();
        assert_eq!(d.fixed_space, span(F5, &[1, 0]));
        assert_eq!(d.moved_space, span(F5, &[0, 1]));
        assert_eq!(d.chi_of_generator, F5.from_i64(-1));
        assert!(gr.element_data(2).is_err());
    }

    #[test]
    fn induced_action_examples() {
        let d = CyclicGroup::from_generator(F5, Matrix::diagonal(F5, &[2, 3])).unwrap();
        assert_eq!(d.induced_action(1, &Module::Wedge2V).unwrap(), Matrix::identity(F5, 1));
        let gr = transvection(3);
        assert_eq!(
            gr.induced_action(1, &Module::DualV).unwrap(),
            Matrix::from_i64(F3, &[&[1, 0], &[-1, 1]])
        );
        let moved = gr.element_data(1).unwrap().moved_space;
        assert_eq!(gr.induced_action(1, &Module::QuotientBy(moved)).unwrap(), Matrix::identity(F3, 1));
        assert_eq!(
            gr.induced_action(1, &Module::QuotientBy(span(F3, &[0, 1]))).unwrap_err(),
            GroupError::NotGStable
        );
    }

    #[test]
    fn chi_invariant_examples() {
        let q = FieldSpec::Rational;
        assert_eq!(Matrix::identity(q, 3).eigenspace(&q.one()).dim(), 3);
        let d = Matrix::diagonal(F5, &[1, -1]);
        assert_eq!(d.eigenspace(&F5.from_i64(-1)), span(F5, &[0, 1]));
        let g = transvection(3).generator().clone();
        assert_eq!(g.eigenspace(&F3.from_i64(-1)).dim(), 0);
    }

    #[test]
    fn reflections() {
        let gr = transvection(3);
        let d = gr.element_data(1).unwrap();
        assert!(d.is_reflection());
        assert!(gr.is_nondiagonalizable_reflection(&d));
        let id = gr.element_data(0).unwrap();
        assert!(!id.is_reflection() && !gr.is_nondiagonalizable_reflection(&id));
        let gr = CyclicGroup::from_generator(F5, Matrix::diagonal(F5, &[1, -1])).unwrap();
        let d = gr.element_data(1).unwrap();
        assert!(d.is_reflection() && !gr.is_nondiagonalizable_reflection(&d));
    }

    #[test]
    fn splitting() {
        assert!(transvection(5).generator_splits());
        let q = FieldSpec::Rational;
        let rot = Matrix::from_i64(q, &[&[0, -1], &[1, 0]]);
        assert!(!CyclicGroup::from_generator(q, rot).unwrap().generator_splits());
        let rot5 = Matrix::from_i64(F5, &[&[0, -1], &[1, 0]]);
        assert!(CyclicGroup::from_generator(F5, rot5).unwrap().generator_splits());
        let rot3 = Matrix::from_i64(F3, &[&[0, -1], &[1, 0]]);
        assert!(!CyclicGroup::from_generator(F3, rot3).unwrap().generator_splits());
    }
}
