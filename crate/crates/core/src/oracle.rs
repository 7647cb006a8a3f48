//! Brute-force `Z²₋₁(h)`, `B²₋₁(h)` and `HH²₋₁(h)` from the explicit cocycle and coboundary
//! conditions, plus the distinguished representatives of each cohomology class.
//!
//! A cochain at `h` is a pair `(λ, α)` with `λ: V → F` carrying the group tag `hg` and
//! `α: Λ²V → V` carrying the tag `h`. Flat coordinates are `λ_0..λ_{n-1}` followed by the
//! `n × C(n,2)` grid of `α`, row-major (`α[m][q]` is the `e_m` component of `α(pair q)`).
//!
//! `assembled` rebuilds the whole complex on `C²₋₁(A)` from products in `S(V) ⋊ G` without
//! splitting by group element; it exists to cross-check the per-element bookkeeping.

use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::exec::Execution;
use crate::group::{wedge, wedge2_matrix, wedge_pairs, CyclicGroup, ElementData, GroupError};
use crate::linalg::{unit, FieldSpec, Matrix, Scalar, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("cochain is not a cocycle at g^{index}")]
    NotACocycle { index: usize },
    #[error("cochain shape does not match the group (expected {expected} coordinates, found {found})")]
    BadShape { expected: usize, found: usize },
    #[error("representative space at g^{index} has dimension {found}, cohomology has {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("distinguished representative at g^{index} is not unique")]
    NotUnique { index: usize },
    #[error("a coboundary at g^{index} violates the cocycle conditions")]
    CoboundaryNotCocycle { index: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// `(λ ⊗ hg) ⊕ (α ⊗ h)` for `h = g^element_index`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainTwo {
    pub element_index: usize,
    pub lambda: Vec<Scalar>,
    /// `n × C(n,2)`: column `q` is `α(e_a ∧ e_b)` for the `q`-th pair `a < b`.
    pub alpha: Matrix,
}

impl CochainTwo {
    pub fn zero(field: FieldSpec, n: usize, element_index: usize) -> Self {
        CochainTwo {
            element_index,
            lambda: vec![field.zero(); n],
            alpha: Matrix::zeros(field, n, wedge_pairs(n).len()),
        }
    }

    pub fn from_flat(n: usize, element_index: usize, flat: &[Scalar]) -> Result<Self, OracleError> {
        let pairs = wedge_pairs(n).len();
        let expected = n + n * pairs;
        if flat.len() != expected {
            return Err(OracleError::BadShape {
                expected,
                found: flat.len(),
            });
        }
        let field = flat.first().map_or(FieldSpec::Rational, Scalar::field);
        let rows = (0..n).map(|m| flat[n + m * pairs..n + (m + 1) * pairs].to_vec()).collect();
        Ok(CochainTwo {
            element_index,
            lambda: flat[..n].to_vec(),
            alpha: Matrix::from_rows(field, pairs, rows).expect("alpha grid"),
        })
    }

    pub fn to_flat(&self) -> Vec<Scalar> {
        let mut v = self.lambda.clone();
        for r in 0..self.alpha.rows() {
            v.extend_from_slice(self.alpha.row(r));
        }
        v
    }

    /// `α(u ∧ v)` for arbitrary vectors.
    pub fn alpha_on(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.alpha.mul_vec(&wedge(u, v))
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.iter().all(Scalar::is_zero) && self.alpha.is_zero()
    }
}

impl fmt::Display for CochainTwo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ = [")?;
        for (i, x) in self.lambda.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "], α = {}", self.alpha)
    }
}

/// The `f_h` component of a 1-cochain: a functional on `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainOne {
    pub element_index: usize,
    pub f: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerElementComplex {
    pub element_index: usize,
    pub cocycle_condition_matrix: Matrix,
    /// Columns are the images of the dual basis `e_k*` under the coboundary.
    pub coboundary_matrix: Matrix,
    pub z_dim: usize,
    pub b_dim: usize,
    pub hh_dim: usize,
    pub distinguished_constraints: Matrix,
}

impl PerElementComplex {
    pub fn cocycle_space(&self) -> Subspace {
        self.cocycle_condition_matrix.kernel_basis()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub per_element: Vec<PerElementComplex>,
    pub total_dim: usize,
}

fn cochain_len(n: usize) -> usize {
    n + n * wedge_pairs(n).len()
}

fn alpha_col(n: usize, pairs: usize, m: usize, q: usize) -> usize {
    n + m * pairs + q
}

/// Linear conditions cutting `Z²₋₁(h)` out of `C²₋₁(h)`:
/// (1) `λ(im T) = 0`;
/// (2) `(α - ^{g⁻¹}α)(u∧v) - λ(v)(u - ʰu) + λ(u)(v - ʰv) = 0` in `V`;
/// (3) `α(u∧v)ŵ + α(v∧w)û + α(w∧u)v̂ = 0` in `Sym²V`, with `x̂ = x - ʰx`.
pub fn cocycle_conditions(gr: &CyclicGroup, i: usize) -> Matrix {
    let field = gr.field();
    let n = gr.dim();
    let pairs = wedge_pairs(n);
    let np = pairs.len();
    let cols = cochain_len(n);
    let h = gr.element(i);
    let g = gr.generator();
    let g_inv = gr.element(gr.order() - 1);
    let w = wedge2_matrix(g);
    let hat = |a: usize| -> Vec<Scalar> {
        let e = unit(field, n, a);
        let he = h.mul_vec(&e);
        e.iter().zip(&he).map(|(x, y)| x - y).collect()
    };
    let mut rows = Matrix::zeros(field, 0, cols);

    for t in gr.transfer().image.vectors() {
        let mut row = vec![field.zero(); cols];
        row[..n].clone_from_slice(&t);
        rows.push_row(row);
    }

    for (q, &(a, b)) in pairs.iter().enumerate() {
        let (hat_a, hat_b) = (hat(a), hat(b));
        for m in 0..n {
            let mut row = vec![field.zero(); cols];
            row[alpha_col(n, np, m, q)] = field.one();
            // ^{g⁻¹}α(e_a∧e_b) = g⁻¹ · α(Λ²g (e_a∧e_b))
            for r in 0..n {
                for qq in 0..np {
                    let c = &g_inv[(m, r)] * &w[(qq, q)];
                    if !c.is_zero() {
                        let k = alpha_col(n, np, r, qq);
                        row[k] = &row[k] - &c;
                    }
                }
            }
            row[b] = &row[b] - &hat_a[m];
            row[a] = &row[a] + &hat_b[m];
            rows.push_row(row);
        }
    }

    let monomials = sym2_monomials(n);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                // (pair, sign, hat vector): α(a∧b)ĉ + α(b∧c)â - α(a∧c)b̂
                let terms = [
                    (pair_index(&pairs, a, b), field.one(), hat(c)),
                    (pair_index(&pairs, b, c), field.one(), hat(a)),
                    (pair_index(&pairs, a, c), field.from_i64(-1), hat(b)),
                ];
                for &(r, s) in &monomials {
                    let mut row = vec![field.zero(); cols];
                    for (q, sign, y) in &terms {
                        // coefficient of e_r e_s in x · y, x = α(pair q)
                        let mut add = |m: usize, coeff: &Scalar| {
                            let k = alpha_col(n, np, m, *q);
                            row[k] = &row[k] + &(sign * coeff);
                        };
                        if r == s {
                            add(r, &y[r]);
                        } else {
                            add(r, &y[s]);
                            add(s, &y[r]);
                        }
                    }
                    rows.push_row(row);
                }
            }
        }
    }
    rows
}

fn pair_index(pairs: &[(usize, usize)], a: usize, b: usize) -> usize {
    pairs.iter().position(|&p| p == (a, b)).expect("pair exists")
}

/// Monomials `e_r e_s`, `r ≤ s`, lexicographic.
fn sym2_monomials(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|r| (r..n).map(move |s| (r, s))).collect()
}

/// `f ↦ d(f ⊗ h)` landing in `C²₋₁(h)`: `λ(u) = f(u - ᵍu)`, `α(u∧v) = f(v)û - f(u)v̂`.
pub fn coboundary_matrix(gr: &CyclicGroup, i: usize) -> Matrix {
    let field = gr.field();
    let n = gr.dim();
    let pairs = wedge_pairs(n);
    let np = pairs.len();
    let h = gr.element(i);
    let g = gr.generator();
    let mut m = Matrix::zeros(field, cochain_len(n), n);
    for k in 0..n {
        let f = unit(field, n, k);
        let mut image = vec![field.zero(); cochain_len(n)];
        for u in 0..n {
            let e = unit(field, n, u);
            let moved: Vec<Scalar> = g.mul_vec(&e).iter().zip(&e).map(|(ge, x)| x - ge).collect();
            image[u] = crate::linalg::dot(field, &f, &moved);
        }
        let hat = |a: usize| -> Vec<Scalar> {
            let e = unit(field, n, a);
            let he = h.mul_vec(&e);
            e.iter().zip(&he).map(|(x, y)| x - y).collect()
        };
        for (q, &(a, b)) in pairs.iter().enumerate() {
            let (ha, hb) = (hat(a), hat(b));
            for r in 0..n {
                image[alpha_col(n, np, r, q)] = &(&f[b] * &ha[r]) - &(&f[a] * &hb[r]);
            }
        }
        for (row, x) in image.into_iter().enumerate() {
            m[(row, k)] = x;
        }
    }
    m
}

/// Coboundary matrices for every element, in power order.
pub fn coboundary_map(gr: &CyclicGroup) -> Vec<Matrix> {
    (0..gr.order()).map(|i| coboundary_matrix(gr, i)).collect()
}

/// Normalization constraints selecting one representative per class in `HH²₋₁(h)`.
///
/// Always `π_h ∘ α = 0`, then by codimension of `V^h`: (0) `λ = 0` on `(V^G)^⊥`;
/// (1) `α = 0` on `Λ²V^h`, and `λ = 0` on `(V^h)^⊥` when `χ_h` is nontrivial;
/// (2) `α(u ∧ ·) = 0` and `λ(u) = 0` for `u ∈ V^h`; (>2) everything vanishes.
pub fn distinguished_constraints(gr: &CyclicGroup, data: &ElementData) -> Matrix {
    let field = gr.field();
    let n = gr.dim();
    let pairs = wedge_pairs(n);
    let np = pairs.len();
    let cols = cochain_len(n);
    let mut rows = Matrix::zeros(field, 0, cols);
    if data.codim > 2 {
        return Matrix::identity(field, cols);
    }

    let proj = data.moved_split().first_functionals();
    for q in 0..np {
        for j in 0..proj.rows() {
            let mut row = vec![field.zero(); cols];
            for m in 0..n {
                row[alpha_col(n, np, m, q)] = proj[(j, m)].clone();
            }
            rows.push_row(row);
        }
    }

    let lambda_zero_on = |rows: &mut Matrix, space: &Subspace| {
        for v in space.vectors() {
            let mut row = vec![field.zero(); cols];
            row[..n].clone_from_slice(&v);
            rows.push_row(row);
        }
    };
    let alpha_zero_on = |rows: &mut Matrix, u: &[Scalar], v: &[Scalar]| {
        let w = wedge(u, v);
        for m in 0..n {
            let mut row = vec![field.zero(); cols];
            for (q, x) in w.iter().enumerate() {
                row[alpha_col(n, np, m, q)] = x.clone();
            }
            rows.push_row(row);
        }
    };

    match data.codim {
        0 => lambda_zero_on(&mut rows, &gr.invariants().complement()),
        1 => {
            let fixed = data.fixed_space.vectors();
            for s in 0..fixed.len() {
                for t in s + 1..fixed.len() {
                    alpha_zero_on(&mut rows, &fixed[s], &fixed[t]);
                }
            }
            if !data.chi_is_trivial() {
                lambda_zero_on(&mut rows, &data.fixed_complement);
            }
        }
        _ => {
            for u in data.fixed_space.vectors() {
                for v in 0..n {
                    alpha_zero_on(&mut rows, &u, &unit(field, n, v));
                }
            }
            lambda_zero_on(&mut rows, &data.fixed_space);
        }
    }
    rows
}

pub fn per_element_cohomology(gr: &CyclicGroup, i: usize) -> Result<PerElementComplex, OracleError> {
    let data = gr.element_data(i)?;
    let conditions = cocycle_conditions(gr, i);
    let coboundary = coboundary_matrix(gr, i);
    if !conditions.mul(&coboundary).is_zero() {
        return Err(OracleError::CoboundaryNotCocycle { index: i });
    }
    let z_dim = conditions.kernel_basis().dim();
    let b_dim = coboundary.rank();
    Ok(PerElementComplex {
        element_index: i,
        distinguished_constraints: distinguished_constraints(gr, &data),
        cocycle_condition_matrix: conditions,
        coboundary_matrix: coboundary,
        z_dim,
        b_dim,
        hh_dim: z_dim - b_dim,
    })
}

pub fn oracle_report(gr: &CyclicGroup) -> Result<OracleReport, OracleError> {
    oracle_report_with(gr, Execution::default())
}

pub fn oracle_report_with(gr: &CyclicGroup, exec: Execution) -> Result<OracleReport, OracleError> {
    let per_element = exec
        .map_range(gr.order(), |i| per_element_cohomology(gr, i))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let total_dim = per_element.iter().map(|c| c.hh_dim).sum();
    Ok(OracleReport {
        per_element,
        total_dim,
    })
}

/// Basis of the distinguished cocycles at `g^i`; its size must equal `hh_dim`.
pub fn representative_basis(gr: &CyclicGroup, complex: &PerElementComplex) -> Result<Vec<CochainTwo>, OracleError> {
    let system = complex
        .cocycle_condition_matrix
        .vstack(&complex.distinguished_constraints);
    let reps = system.kernel_basis().vectors();
    if reps.len() != complex.hh_dim {
        return Err(OracleError::DimensionMismatch {
            index: complex.element_index,
            expected: complex.hh_dim,
            found: reps.len(),
        });
    }
    reps.iter()
        .map(|v| CochainTwo::from_flat(gr.dim(), complex.element_index, v))
        .collect()
}

pub fn is_cocycle(gr: &CyclicGroup, gamma: &CochainTwo) -> bool {
    cocycle_conditions(gr, gamma.element_index)
        .mul_vec(&gamma.to_flat())
        .iter()
        .all(Scalar::is_zero)
}

/// Subtracts a coboundary `d(f ⊗ h)` so that `γ - df` is the distinguished representative.
pub fn reduce_to_representative(
    gr: &CyclicGroup,
    complex: &PerElementComplex,
    gamma: &CochainTwo,
) -> Result<(CochainTwo, CochainOne), OracleError> {
    let i = complex.element_index;
    let flat = gamma.to_flat();
    if gamma.element_index != i {
        return Err(OracleError::NotACocycle { index: gamma.element_index });
    }
    if flat.len() != complex.cocycle_condition_matrix.cols() {
        return Err(OracleError::BadShape {
            expected: complex.cocycle_condition_matrix.cols(),
            found: flat.len(),
        });
    }
    if !complex
        .cocycle_condition_matrix
        .mul_vec(&flat)
        .iter()
        .all(Scalar::is_zero)
    {
        return Err(OracleError::NotACocycle { index: i });
    }
    let d = &complex.distinguished_constraints;
    let b = &complex.coboundary_matrix;
    let db = d.mul(b);
    let f = db
        .solve(&d.mul_vec(&flat))
        .ok_or(OracleError::DimensionMismatch {
            index: i,
            expected: complex.hh_dim,
            found: 0,
        })?;
    // Every solution must give the same cochain: B · ker(DB) = 0.
    for k in db.kernel_basis().vectors() {
        if !b.mul_vec(&k).iter().all(Scalar::is_zero) {
            return Err(OracleError::NotUnique { index: i });
        }
    }
    let df = b.mul_vec(&f);
    let rep: Vec<Scalar> = flat.iter().zip(&df).map(|(x, y)| x - y).collect();
    Ok((
        CochainTwo::from_flat(gr.dim(), i, &rep)?,
        CochainOne { element_index: i, f },
    ))
}

pub fn random_scalar<R: Rng + ?Sized>(field: FieldSpec, rng: &mut R) -> Scalar {
    match field {
        FieldSpec::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
        FieldSpec::Rational => field.from_i64(rng.gen_range(-5..=5)),
    }
}

/// A random element of `Z²₋₁(h)`.
pub fn random_cocycle<R: Rng + ?Sized>(gr: &CyclicGroup, complex: &PerElementComplex, rng: &mut R) -> CochainTwo {
    let field = gr.field();
    let basis = complex.cocycle_space().vectors();
    let mut flat = vec![field.zero(); complex.cocycle_condition_matrix.cols()];
    for v in &basis {
        let c = random_scalar(field, rng);
        for (x, y) in flat.iter_mut().zip(v) {
            *x = &*x + &(&c * y);
        }
    }
    CochainTwo::from_flat(gr.dim(), complex.element_index, &flat).expect("flat length")
}

/// The complex on all of `C²₋₁(A)` built from products in `S(V) ⋊ G`, without splitting by element.
pub mod assembled {
    use super::*;

    /// Dimensions of the full cocycle and coboundary spaces.
    #[derive(Clone, Copy, Debug, PartialEq, Eq)]
    pub struct AssembledDims {
        pub z_dim: usize,
        pub b_dim: usize,
    }

    // Degree-one elements of S(V) ⋊ G are n × N grids: entry (m, j) is the coefficient of e_m ⊗ g^j.
    // Degree-two elements use Sym²V monomials as rows.
    struct Skew<'a> {
        gr: &'a CyclicGroup,
        n: usize,
        order: usize,
        field: FieldSpec,
    }

    impl<'a> Skew<'a> {
        fn new(gr: &'a CyclicGroup) -> Self {
            Skew {
                gr,
                n: gr.dim(),
                order: gr.order(),
                field: gr.field(),
            }
        }

        fn zero1(&self) -> Matrix {
            Matrix::zeros(self.field, self.n, self.order)
        }

        /// `x · c` for `x ∈ V`, `c ∈ FG`.
        fn vec_times_group(&self, x: &[Scalar], c: &[Scalar]) -> Matrix {
            let mut out = self.zero1();
            for j in 0..self.order {
                for m in 0..self.n {
                    out[(m, j)] = &x[m] * &c[j];
                }
            }
            out
        }

        /// `c · x = Σ c_j (g^j x) ⊗ g^j`.
        fn group_times_vec(&self, c: &[Scalar], x: &[Scalar]) -> Matrix {
            let mut out = self.zero1();
            for j in 0..self.order {
                if c[j].is_zero() {
                    continue;
                }
                let moved = self.gr.element(j).mul_vec(x);
                for m in 0..self.n {
                    out[(m, j)] = &c[j] * &moved[m];
                }
            }
            out
        }

        /// `g^k · a`.
        fn left_group(&self, k: usize, a: &Matrix) -> Matrix {
            let mut out = self.zero1();
            for j in 0..self.order {
                let moved = self.gr.element(k).mul_vec(&a.column(j));
                let t = self.gr.mul_index(k, j);
                for m in 0..self.n {
                    out[(m, t)] = &out[(m, t)] + &moved[m];
                }
            }
            out
        }

        /// `a · g^k`.
        fn right_group(&self, a: &Matrix, k: usize) -> Matrix {
            let mut out = self.zero1();
            for j in 0..self.order {
                let t = self.gr.mul_index(j, k);
                for m in 0..self.n {
                    out[(m, t)] = &out[(m, t)] + &a[(m, j)];
                }
            }
            out
        }

        /// `[x, a]` for `x ∈ V` and degree-one `a`, landing in `Sym²V ⊗ FG`.
        fn commutator(&self, x: &[Scalar], a: &Matrix) -> Matrix {
            let monomials = sym2_monomials(self.n);
            let mut out = Matrix::zeros(self.field, monomials.len(), self.order);
            for j in 0..self.order {
                let y = a.column(j);
                if y.iter().all(Scalar::is_zero) {
                    continue;
                }
                // x·(y ⊗ g^j) - (y ⊗ g^j)·x = (x y - y (g^j x)) ⊗ g^j
                let gx = self.gr.element(j).mul_vec(x);
                let p1 = sym_product(self.field, &monomials, x, &y);
                let p2 = sym_product(self.field, &monomials, &y, &gx);
                for (r, (s, t)) in p1.iter().zip(&p2).enumerate() {
                    out[(r, j)] = s - t;
                }
            }
            out
        }
    }

    fn sym_product(field: FieldSpec, monomials: &[(usize, usize)], x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        monomials
            .iter()
            .map(|&(r, s)| {
                if r == s {
                    &x[r] * &y[r]
                } else {
                    &(&x[r] * &y[s]) + &(&x[s] * &y[r])
                }
            })
            .fold(Vec::new(), |mut acc, v| {
                acc.push(v);
                acc
            })
            .into_iter()
            .map(|v| v + field.zero())
            .collect()
    }

    struct FullCochain {
        // lambda[k] = λ(e_k) ∈ FG
        lambda: Vec<Vec<Scalar>>,
        // alpha[q] = α(pair q) ∈ V ⊗ FG
        alpha: Vec<Matrix>,
    }

    fn full_len(gr: &CyclicGroup) -> usize {
        let n = gr.dim();
        gr.order() * (n + n * wedge_pairs(n).len())
    }

    fn decode(gr: &CyclicGroup, flat: &[Scalar]) -> FullCochain {
        let (n, order, field) = (gr.dim(), gr.order(), gr.field());
        let np = wedge_pairs(n).len();
        let lambda = (0..n).map(|k| flat[k * order..(k + 1) * order].to_vec()).collect();
        let base = n * order;
        let alpha = (0..np)
            .map(|q| {
                let mut a = Matrix::zeros(field, n, order);
                for m in 0..n {
                    for j in 0..order {
                        a[(m, j)] = flat[base + (m * np + q) * order + j].clone();
                    }
                }
                a
            })
            .collect();
        FullCochain { lambda, alpha }
    }

    fn encode(gr: &CyclicGroup, c: &FullCochain) -> Vec<Scalar> {
        let (n, order) = (gr.dim(), gr.order());
        let np = wedge_pairs(n).len();
        let mut flat = vec![gr.field().zero(); full_len(gr)];
        for k in 0..n {
            flat[k * order..(k + 1) * order].clone_from_slice(&c.lambda[k]);
        }
        let base = n * order;
        for q in 0..np {
            for m in 0..n {
                for j in 0..order {
                    flat[base + (m * np + q) * order + j] = c.alpha[q][(m, j)].clone();
                }
            }
        }
        flat
    }

    fn lambda_on(sk: &Skew, c: &FullCochain, u: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![sk.field.zero(); sk.order];
        for (k, uk) in u.iter().enumerate() {
            if uk.is_zero() {
                continue;
            }
            for j in 0..sk.order {
                out[j] = &out[j] + &(uk * &c.lambda[k][j]);
            }
        }
        out
    }

    fn alpha_on(sk: &Skew, c: &FullCochain, u: &[Scalar], v: &[Scalar]) -> Matrix {
        let w = wedge(u, v);
        let mut out = sk.zero1();
        for (q, x) in w.iter().enumerate() {
            if !x.is_zero() {
                out = out.add(&c.alpha[q].scale(x));
            }
        }
        out
    }

    fn flatten(ms: &[Matrix]) -> Vec<Scalar> {
        ms.iter().flat_map(|m| m.row_vecs().into_iter().flatten()).collect()
    }

    /// All condition values of a full cochain, concatenated.
    fn condition_values(gr: &CyclicGroup, c: &FullCochain) -> Vec<Scalar> {
        let sk = Skew::new(gr);
        let n = sk.n;
        let g = gr.generator();
        let mut out = Vec::new();
        for t in gr.transfer().image.vectors() {
            out.extend(lambda_on(&sk, c, &t));
        }
        let mut second = Vec::new();
        for (a, b) in wedge_pairs(n) {
            let (u, v) = (unit(sk.field, n, a), unit(sk.field, n, b));
            let (gu, gv) = (g.mul_vec(&u), g.mul_vec(&v));
            let (lu, lv) = (lambda_on(&sk, c, &u), lambda_on(&sk, c, &v));
            // g α(u∧v) - α(gu∧gv) g - (gu) λ(v) + λ(v) u + (gv) λ(u) - λ(u) v
            let total = sk
                .left_group(1 % sk.order, &alpha_on(&sk, c, &u, &v))
                .sub(&sk.right_group(&alpha_on(&sk, c, &gu, &gv), 1 % sk.order))
                .sub(&sk.vec_times_group(&gu, &lv))
                .add(&sk.group_times_vec(&lv, &u))
                .add(&sk.vec_times_group(&gv, &lu))
                .sub(&sk.group_times_vec(&lu, &v));
            second.push(total);
        }
        out.extend(flatten(&second));
        let mut third = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for d in b + 1..n {
                    let (u, v, w) = (unit(sk.field, n, a), unit(sk.field, n, b), unit(sk.field, n, d));
                    let total = sk
                        .commutator(&u, &alpha_on(&sk, c, &v, &w))
                        .add(&sk.commutator(&v, &alpha_on(&sk, c, &w, &u)))
                        .add(&sk.commutator(&w, &alpha_on(&sk, c, &u, &v)));
                    third.push(total);
                }
            }
        }
        out.extend(flatten(&third));
        out
    }

    /// `d f'` for a 1-cochain `f': V → FG` given as `n` group-algebra vectors.
    fn coboundary(gr: &CyclicGroup, f: &[Vec<Scalar>]) -> FullCochain {
        let sk = Skew::new(gr);
        let n = sk.n;
        let g = gr.generator();
        let f_on = |u: &[Scalar]| -> Vec<Scalar> {
            let mut out = vec![sk.field.zero(); sk.order];
            for (k, uk) in u.iter().enumerate() {
                for j in 0..sk.order {
                    out[j] = &out[j] + &(uk * &f[k][j]);
                }
            }
            out
        };
        // λ(u) = (f(u) - f(gu)) · g
        let lambda = (0..n)
            .map(|k| {
                let u = unit(sk.field, n, k);
                let diff: Vec<Scalar> = f_on(&u)
                    .iter()
                    .zip(f_on(&g.mul_vec(&u)))
                    .map(|(x, y)| x - &y)
                    .collect();
                let mut shifted = vec![sk.field.zero(); sk.order];
                for (j, x) in diff.into_iter().enumerate() {
                    shifted[gr.mul_index(j, 1 % sk.order)] = x;
                }
                shifted
            })
            .collect();
        // α(u∧v) = [u, f(v)] - [v, f(u)], with [x, c] = x·c - c·x
        let bracket = |x: &[Scalar], c: &[Scalar]| sk.vec_times_group(x, c).sub(&sk.group_times_vec(c, x));
        let alpha = wedge_pairs(n)
            .into_iter()
            .map(|(a, b)| {
                let (u, v) = (unit(sk.field, n, a), unit(sk.field, n, b));
                bracket(&u, &f_on(&v)).sub(&bracket(&v, &f_on(&u)))
            })
            .collect();
        FullCochain { lambda, alpha }
    }

    /// Matrix of all cocycle conditions on the full cochain space.
    pub fn cocycle_matrix(gr: &CyclicGroup) -> Matrix {
        let len = full_len(gr);
        let field = gr.field();
        let columns: Vec<Vec<Scalar>> = (0..len)
            .map(|col| condition_values(gr, &decode(gr, &unit(field, len, col))))
            .collect();
        from_columns(field, &columns)
    }

    /// Matrix of the coboundary `C¹₋₁(A) = V* ⊗ FG → C²₋₁(A)`.
    pub fn coboundary_matrix(gr: &CyclicGroup) -> Matrix {
        let (n, order, field) = (gr.dim(), gr.order(), gr.field());
        let columns: Vec<Vec<Scalar>> = (0..n * order)
            .map(|col| {
                let f: Vec<Vec<Scalar>> = (0..n)
                    .map(|k| (0..order).map(|j| if k * order + j == col { field.one() } else { field.zero() }).collect())
                    .collect();
                encode(gr, &coboundary(gr, &f))
            })
            .collect();
        from_columns(field, &columns)
    }

    fn from_columns(field: FieldSpec, columns: &[Vec<Scalar>]) -> Matrix {
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            for (r, x) in col.iter().enumerate() {
                m[(r, c)] = x.clone();
            }
        }
        m
    }

    pub fn dims(gr: &CyclicGroup) -> AssembledDims {
        let cond = cocycle_matrix(gr);
        AssembledDims {
            z_dim: cond.cols() - cond.rank(),
            b_dim: coboundary_matrix(gr).rank(),
        }
    }
}
