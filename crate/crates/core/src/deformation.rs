//! Graded deformations of `F[v₁,v₂] ⋊ G` for a two-dimensional cyclic `G`.
//!
//! A deformation is given by `λ: FG ⊗ V → FG` and `κ: Λ²V → V ⊗ FG`. The associated algebra
//! `H_{λ,κ}` is generated by `FG` and `v₁, v₂` with
//! `h v - ʰv h = λ(h ⊗ v)` and `v₂ v₁ - v₁ v₂ = -κ(v₁ ∧ v₂)`.
//! PBW is certified by rewriting every word of bounded length along every available first
//! step and checking the normal forms agree.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exec::Execution;
use crate::group::{CyclicGroup, GroupError};
use crate::linalg::{FieldSpec, Matrix, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeformationError {
    #[error("deformations are only handled for dim V = 2 (got {0})")]
    NotTwoDimensional(usize),
    #[error("square bracket needs κ(v₁∧v₂) = c·v₂⊗g")]
    UnsupportedKappaShape,
    #[error("square bracket needs a transvection-shaped generator: g ≠ 1, (g - 1)² = 0")]
    UnsupportedGroup,
    #[error("{0} has the wrong shape")]
    BadTable(&'static str),
    #[error("hilbert count requires a confluent rewrite system")]
    PrerequisiteFailed,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// `λ(g^i ⊗ v_k)` for every `i`, `k`, and `κ(v₁ ∧ v₂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationParams {
    group: CyclicGroup,
    /// `lambda[i][k]` is `λ(g^i ⊗ v_{k+1})` as `N` group-algebra coefficients.
    lambda: Vec<[Vec<Scalar>; 2]>,
    /// `2 × N`: entry `(m, j)` is the coefficient of `v_{m+1} ⊗ g^j` in `κ(v₁ ∧ v₂)`.
    kappa_v1v2: Matrix,
}

impl DeformationParams {
    pub fn new(group: CyclicGroup, lambda: Vec<[Vec<Scalar>; 2]>, kappa_v1v2: Matrix) -> Result<Self, DeformationError> {
        if group.dim() != 2 {
            return Err(DeformationError::NotTwoDimensional(group.dim()));
        }
        let n = group.order();
        if lambda.len() != n || lambda.iter().any(|l| l.iter().any(|c| c.len() != n)) {
            return Err(DeformationError::BadTable("lambda"));
        }
        if kappa_v1v2.rows() != 2 || kappa_v1v2.cols() != n {
            return Err(DeformationError::BadTable("kappa"));
        }
        Ok(DeformationParams {
            group,
            lambda,
            kappa_v1v2,
        })
    }

    /// `λ = 0`, `κ = 0`: the undeformed skew group algebra.
    pub fn zero(group: CyclicGroup) -> Result<Self, DeformationError> {
        let (f, n) = (group.field(), group.order());
        let lambda = vec![[vec![f.zero(); n], vec![f.zero(); n]]; n];
        let kappa = Matrix::zeros(f, 2, n);
        Self::new(group, lambda, kappa)
    }

    pub fn group(&self) -> &CyclicGroup {
        &self.group
    }

    pub fn field(&self) -> FieldSpec {
        self.group.field()
    }

    /// `λ(g^i ⊗ v_{k+1})`.
    pub fn lambda(&self, i: usize, k: usize) -> &[Scalar] {
        &self.lambda[i % self.group.order()][k]
    }

    pub fn set_lambda(&mut self, i: usize, k: usize, value: Vec<Scalar>) -> Result<(), DeformationError> {
        if value.len() != self.group.order() || k > 1 {
            return Err(DeformationError::BadTable("lambda"));
        }
        let i = i % self.group.order();
        self.lambda[i][k] = value;
        Ok(())
    }

    pub fn kappa_v1v2(&self) -> &Matrix {
        &self.kappa_v1v2
    }

    /// `λ(a ⊗ v_{k+1})` extended linearly in `a ∈ FG`.
    pub fn lambda_linear(&self, a: &[Scalar], k: usize) -> Vec<Scalar> {
        let f = self.field();
        let n = self.group.order();
        let mut out = vec![f.zero(); n];
        for (j, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(self.lambda(j, k)) {
                *o = &*o + &(c * x);
            }
        }
        out
    }
}

fn transvection(p: u64) -> Result<CyclicGroup, DeformationError> {
    let f = FieldSpec::prime(p).map_err(GroupError::from)?;
    Ok(CyclicGroup::from_generator(f, Matrix::from_i64(f, &[&[1, 1], &[0, 1]]))?)
}

fn binom2(m: u64) -> BigInt {
    BigInt::from(m) * BigInt::from(m.saturating_sub(1)) / 2
}

/// The lifted cocycle on the transvection group over `F_p`:
/// `λ(g^i ⊗ v₁) = i·g^{i+1}`, `λ(g^i ⊗ v₂) = C(i+1,2)·g^{i+1}`, `κ(v₁ ∧ v₂) = v₂ ⊗ g`.
pub fn builtin_transvection_gamma(p: u64) -> Result<DeformationParams, DeformationError> {
    let group = transvection(p)?;
    let f = group.field();
    let n = group.order();
    let lambda = (0..n)
        .map(|i| {
            let mut v1 = vec![f.zero(); n];
            let mut v2 = vec![f.zero(); n];
            let target = (i + 1) % n;
            v1[target] = f.from_bigint(&BigInt::from(i));
            v2[target] = f.from_bigint(&binom2(i as u64 + 1));
            [v1, v2]
        })
        .collect();
    let mut kappa = Matrix::zeros(f, 2, n);
    kappa[(1, 1 % n)] = f.one();
    DeformationParams::new(group, lambda, kappa)
}

/// Builtin parameters with `λ(g ⊗ v₁)` replaced by `1_G`; not PBW.
pub fn adversarial_params(p: u64) -> Result<DeformationParams, DeformationError> {
    let mut params = builtin_transvection_gamma(p)?;
    let f = params.field();
    let mut one = vec![f.zero(); params.group.order()];
    one[0] = f.one();
    params.set_lambda(1, 0, one)?;
    Ok(params)
}

/// `[γ,γ](g^i ⊗ v₁∧v₂) = λ(λ(g^i⊗v₂)⊗v₁) - λ(λ(g^i⊗v₁)⊗v₂) + c·λ(g^i⊗v₂)·g` for each `i`,
/// where `κ(v₁∧v₂) = c·v₂⊗g`.
pub fn square_bracket_transvection(params: &DeformationParams) -> Result<Vec<Vec<Scalar>>, DeformationError> {
    square_bracket_transvection_with(params, Execution::default())
}

pub fn square_bracket_transvection_with(
    params: &DeformationParams,
    exec: Execution,
) -> Result<Vec<Vec<Scalar>>, DeformationError> {
    let gr = &params.group;
    let f = gr.field();
    let n = gr.order();
    let g = gr.generator();
    let id = Matrix::identity(f, 2);
    let nil = g.sub(&id);
    if *g == id || !nil.mul(&nil).is_zero() {
        return Err(DeformationError::UnsupportedGroup);
    }
    let k = &params.kappa_v1v2;
    let c = k[(1, 1)].clone();
    for m in 0..2 {
        for j in 0..n {
            if (m, j) != (1, 1) && !k[(m, j)].is_zero() {
                return Err(DeformationError::UnsupportedKappaShape);
            }
        }
    }
    Ok(exec.map_range(n, |i| {
        let a = params.lambda_linear(params.lambda(i, 1), 0);
        let b = params.lambda_linear(params.lambda(i, 0), 1);
        let mut out: Vec<Scalar> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
        for (j, x) in params.lambda(i, 1).iter().enumerate() {
            let t = gr.mul_index(j, 1);
            out[t] = &out[t] + &(&c * x);
        }
        out
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// `v₁` or `v₂` (index 0 or 1).
    V(usize),
    /// `g^c`.
    G(usize),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::V(k) => write!(f, "v{}", k + 1),
            Letter::G(c) => write!(f, "g^{c}"),
        }
    }
}

pub type Word = Vec<Letter>;

pub fn format_word(w: &[Letter]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(Letter::to_string).collect::<Vec<_>>().join("·")
}

/// `v₁^a v₂^b g^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl Monomial {
    pub fn word(&self) -> Word {
        let mut w = vec![Letter::V(0); self.a];
        w.extend(std::iter::repeat_n(Letter::V(1), self.b));
        if self.c != 0 {
            w.push(Letter::G(self.c));
        }
        w
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (e, name) in [(self.a, "v1"), (self.b, "v2")] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        match self.c {
            0 => {}
            1 => parts.push("g".into()),
            c => parts.push(format!("g^{c}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(""))
        }
    }
}

/// A combination of PBW monomials with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&m) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| if c.is_one() { m.to_string() } else { format!("{c}·{m}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A rule `lhs → Σ c·word`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: [Letter; 2],
    pub rhs: Vec<(Scalar, Word)>,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rhs: Vec<String> = self
            .rhs
            .iter()
            .map(|(c, w)| if c.is_one() { format_word(w) } else { format!("{c}·{}", format_word(w)) })
            .collect();
        let rhs = if rhs.is_empty() { "0".to_string() } else { rhs.join(" + ") };
        write!(f, "{} → {rhs}", format_word(&self.lhs))
    }
}

/// Reductions stop with a panic after this many single steps; the order guarantees far fewer.
pub const STEP_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    params: DeformationParams,
}

/// Rewrite rules from the defining relations.
pub fn orbifold_algebra(params: &DeformationParams) -> RewriteSystem {
    RewriteSystem { params: params.clone() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceWitness {
    pub word: Word,
    pub left: AlgebraElement,
    pub right: AlgebraElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub words_checked: usize,
    pub witness: Option<ConfluenceWitness>,
}

impl ConfluenceReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HilbertReport {
    pub degree_bound: usize,
    pub count: usize,
    pub expected: usize,
}

impl HilbertReport {
    pub fn passed(&self) -> bool {
        self.count == self.expected
    }
}

impl RewriteSystem {
    pub fn params(&self) -> &DeformationParams {
        &self.params
    }

    fn order(&self) -> usize {
        self.params.group.order()
    }

    fn field(&self) -> FieldSpec {
        self.params.field()
    }

    fn group_word(c: usize) -> Word {
        if c == 0 {
            Vec::new()
        } else {
            vec![Letter::G(c)]
        }
    }

    /// Right side for a reducible pair, `None` if the pair is already normal.
    fn rewrite_pair(&self, x: Letter, y: Letter) -> Option<Vec<(Scalar, Word)>> {
        let f = self.field();
        let n = self.order();
        match (x, y) {
            (Letter::V(1), Letter::V(0)) => {
                let mut rhs = vec![(f.one(), vec![Letter::V(0), Letter::V(1)])];
                for m in 0..2 {
                    for j in 0..n {
                        let c = &self.params.kappa_v1v2[(m, j)];
                        if !c.is_zero() {
                            let mut w = vec![Letter::V(m)];
                            w.extend(Self::group_word(j));
                            rhs.push((-c, w));
                        }
                    }
                }
                Some(rhs)
            }
            (Letter::G(c), Letter::V(k)) => {
                let h = self.params.group.element(c);
                let mut rhs = Vec::new();
                for m in 0..2 {
                    let coeff = &h[(m, k)];
                    if !coeff.is_zero() {
                        let mut w = vec![Letter::V(m)];
                        w.extend(Self::group_word(c));
                        rhs.push((coeff.clone(), w));
                    }
                }
                for (j, coeff) in self.params.lambda(c, k).iter().enumerate() {
                    if !coeff.is_zero() {
                        rhs.push((coeff.clone(), Self::group_word(j)));
                    }
                }
                Some(rhs)
            }
            (Letter::G(a), Letter::G(b)) => Some(vec![(f.one(), Self::group_word((a + b) % n))]),
            _ => None,
        }
    }

    pub fn rules(&self) -> Vec<Rule> {
        let n = self.order();
        let mut lhs = vec![[Letter::V(1), Letter::V(0)]];
        for c in 1..n {
            lhs.push([Letter::G(c), Letter::V(0)]);
            lhs.push([Letter::G(c), Letter::V(1)]);
        }
        for a in 1..n {
            for b in 1..n {
                lhs.push([Letter::G(a), Letter::G(b)]);
            }
        }
        lhs.into_iter()
            .map(|l| Rule {
                lhs: l,
                rhs: self.rewrite_pair(l[0], l[1]).expect("listed pairs are reducible"),
            })
            .collect()
    }

    fn clean(&self, word: &[Letter]) -> Word {
        let n = self.order();
        word.iter()
            .filter_map(|&l| match l {
                Letter::G(c) if c % n == 0 => None,
                Letter::G(c) => Some(Letter::G(c % n)),
                v => Some(v),
            })
            .collect()
    }

    /// One rewrite of `word` at position `i`, if a rule applies there.
    pub fn rewrite_at(&self, word: &[Letter], i: usize) -> Option<Vec<(Scalar, Word)>> {
        if i + 1 >= word.len() {
            return None;
        }
        let rhs = self.rewrite_pair(word[i], word[i + 1])?;
        Some(
            rhs.into_iter()
                .map(|(c, mid)| {
                    let mut w = word[..i].to_vec();
                    w.extend(mid);
                    w.extend_from_slice(&word[i + 2..]);
                    (c, w)
                })
                .collect(),
        )
    }

    fn leftmost_redex(&self, word: &[Letter]) -> Option<usize> {
        (0..word.len().saturating_sub(1)).find(|&i| self.rewrite_pair(word[i], word[i + 1]).is_some())
    }

    fn as_monomial(word: &[Letter]) -> Monomial {
        let mut m = Monomial { a: 0, b: 0, c: 0 };
        for l in word {
            match l {
                Letter::V(0) => m.a += 1,
                Letter::V(_) => m.b += 1,
                Letter::G(c) => m.c = *c,
            }
        }
        m
    }

    /// Fully reduces a combination of words, leftmost redex first.
    pub fn reduce(&self, combination: Vec<(Scalar, Word)>) -> AlgebraElement {
        let mut pending: BTreeMap<Word, Scalar> = BTreeMap::new();
        let push = |pending: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar| {
            let sum = match pending.remove(&w) {
                Some(old) => &old + &c,
                None => c,
            };
            if !sum.is_zero() {
                pending.insert(w, sum);
            }
        };
        for (c, w) in combination {
            push(&mut pending, self.clean(&w), c);
        }
        let mut out = AlgebraElement::zero();
        let mut steps = 0usize;
        // Longest words first keeps merging effective: rewrites never lengthen a word.
        while let Some((w, c)) = pending.pop_last() {
            match self.leftmost_redex(&w) {
                None => out.add_term(Self::as_monomial(&w), c),
                Some(i) => {
                    steps += 1;
                    assert!(steps <= STEP_BUDGET, "rewriting exceeded the step budget");
                    for (d, next) in self.rewrite_at(&w, i).expect("redex") {
                        push(&mut pending, next, &c * &d);
                    }
                }
            }
        }
        out
    }

    pub fn normal_form(&self, word: &[Letter]) -> AlgebraElement {
        self.reduce(vec![(self.field().one(), word.to_vec())])
    }

    pub fn normal_form_element(&self, e: &AlgebraElement) -> AlgebraElement {
        self.reduce(e.terms.iter().map(|(m, c)| (c.clone(), m.word())).collect())
    }

    /// Every word over `v₁, v₂, g, …, g^{N-1}` of length at most `max_len`.
    fn all_words(&self, max_len: usize) -> Vec<Word> {
        let mut letters = vec![Letter::V(0), Letter::V(1)];
        letters.extend((1..self.order()).map(Letter::G));
        let mut words = vec![Vec::new()];
        let mut frontier = vec![Vec::new()];
        for _ in 0..max_len {
            let next: Vec<Word> = frontier
                .iter()
                .flat_map(|w: &Word| {
                    letters.iter().map(move |&l| {
                        let mut w = w.clone();
                        w.push(l);
                        w
                    })
                })
                .collect();
            words.extend(next.iter().cloned());
            frontier = next;
        }
        words
    }

    /// Checks that every first rewrite of every word leads to the same normal form.
    pub fn confluence_check(&self, max_len: usize) -> ConfluenceReport {
        self.confluence_check_with(max_len, Execution::default())
    }

    pub fn confluence_check_with(&self, max_len: usize, exec: Execution) -> ConfluenceReport {
        let words = self.all_words(max_len);
        let results = exec.map_slice(&words, |w| self.check_word(w));
        ConfluenceReport {
            words_checked: words.len(),
            witness: results.into_iter().flatten().next(),
        }
    }

    fn check_word(&self, word: &[Letter]) -> Option<ConfluenceWitness> {
        let mut first: Option<AlgebraElement> = None;
        for i in 0..word.len().saturating_sub(1) {
            if let Some(step) = self.rewrite_at(word, i) {
                let nf = self.reduce(step);
                match &first {
                    None => first = Some(nf),
                    Some(f) if *f != nf => {
                        return Some(ConfluenceWitness {
                            word: word.to_vec(),
                            left: f.clone(),
                            right: nf,
                        })
                    }
                    _ => {}
                }
            }
        }
        None
    }

    /// Counts irreducible words of `v`-degree at most `d`; should be `N·C(d+2,2)`.
    pub fn hilbert_check(&self, d: usize, confluence: &ConfluenceReport) -> Result<HilbertReport, DeformationError> {
        if !confluence.passed() {
            return Err(DeformationError::PrerequisiteFailed);
        }
        let mut letters = vec![Letter::V(0), Letter::V(1)];
        letters.extend((1..self.order()).map(Letter::G));
        let mut count = 0;
        let mut stack: Vec<(Word, usize)> = vec![(Vec::new(), 0)];
        while let Some((w, deg)) = stack.pop() {
            count += 1;
            for &l in &letters {
                let deg = deg + usize::from(matches!(l, Letter::V(_)));
                if deg > d {
                    continue;
                }
                if let Some(&last) = w.last() {
                    if self.rewrite_pair(last, l).is_some() {
                        continue;
                    }
                }
                let mut next = w.clone();
                next.push(l);
                stack.push((next, deg));
            }
        }
        Ok(HilbertReport {
            degree_bound: d,
            count,
            expected: self.order() * (d + 1) * (d + 2) / 2,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g_elem(f: FieldSpec, n: usize, entries: &[(usize, i64)]) -> Vec<Scalar> {
        let mut v = vec![f.zero(); n];
        for &(j, c) in entries {
            v[j] = f.from_i64(c);
        }
        v
    }

    fn mono(a: usize, b: usize, c: usize) -> Monomial {
        Monomial { a, b, c }
    }

    #[test]
    fn builtin_tables() {
        let p = builtin_transvection_gamma(3).unwrap();
        let f = p.field();
        assert_eq!(p.lambda(0, 0), g_elem(f, 3, &[]).as_slice());
        assert_eq!(p.lambda(1, 0), g_elem(f, 3, &[(2, 1)]).as_slice());
        assert_eq!(p.lambda(2, 0), g_elem(f, 3, &[(0, 2)]).as_slice());
        assert_eq!(p.lambda(2, 1), g_elem(f, 3, &[]).as_slice());
        assert_eq!(p.lambda(1, 1), g_elem(f, 3, &[(2, 1)]).as_slice());
        for q in [3, 5, 7] {
            let p = builtin_transvection_gamma(q).unwrap();
            let k = p.kappa_v1v2();
            assert!(k[(1, 1)].is_one());
            assert_eq!((0..2).flat_map(|m| k.row(m).to_vec()).filter(|x| !x.is_zero()).count(), 1);
        }
        assert!(builtin_transvection_gamma(2).is_err());
    }

    #[test]
    fn bracket_vanishes() {
        for q in [3, 5, 7] {
            let p = builtin_transvection_gamma(q).unwrap();
            let vals = square_bracket_transvection(&p).unwrap();
            assert_eq!(vals.len(), q as usize);
            assert!(vals.iter().all(|v| v.iter().all(Scalar::is_zero)));
        }
        let z = DeformationParams::zero(transvection(5).unwrap()).unwrap();
        assert!(square_bracket_transvection(&z).unwrap().iter().flatten().all(Scalar::is_zero));
    }

    #[test]
    fn bracket_detects_wrong_kappa_scale() {
        let mut p = builtin_transvection_gamma(5).unwrap();
        let f = p.field();
        p.kappa_v1v2[(1, 1)] = f.from_i64(2);
        assert!(square_bracket_transvection(&p).unwrap().iter().flatten().any(|x| !x.is_zero()));
    }

    #[test]
    fn bracket_guards() {
        let mut p = builtin_transvection_gamma(3).unwrap();
        p.kappa_v1v2[(0, 1)] = p.field().one();
        assert_eq!(square_bracket_transvection(&p).unwrap_err(), DeformationError::UnsupportedKappaShape);
        let f = FieldSpec::Prime(5);
        let d = CyclicGroup::from_generator(f, Matrix::from_i64(f, &[&[1, 0], &[0, -1]])).unwrap();
        let z = DeformationParams::zero(d).unwrap();
        assert_eq!(square_bracket_transvection(&z).unwrap_err(), DeformationError::UnsupportedGroup);
        let three = CyclicGroup::from_generator(f, Matrix::identity(f, 3)).unwrap();
        assert!(matches!(DeformationParams::zero(three), Err(DeformationError::NotTwoDimensional(3))));
    }

    #[test]
    fn rules_and_normal_forms() {
        let p = builtin_transvection_gamma(3).unwrap();
        let f = p.field();
        let rs = orbifold_algebra(&p);
        let rules = rs.rules();
        assert_eq!(rules.len(), 1 + 2 * 2 + 4);
        let gv1 = rs.normal_form(&[Letter::G(1), Letter::V(0)]);
        assert_eq!(gv1, AlgebraElement::from_terms([(mono(1, 0, 1), f.one()), (mono(0, 0, 2), f.one())]));
        let v1v2 = rs.normal_form(&[Letter::V(0), Letter::V(1)]);
        assert_eq!(v1v2, AlgebraElement::from_terms([(mono(1, 1, 0), f.one())]));
        let v2v1g = rs.normal_form(&[Letter::V(1), Letter::V(0), Letter::G(1)]);
        assert_eq!(
            v2v1g,
            AlgebraElement::from_terms([(mono(1, 1, 1), f.one()), (mono(0, 1, 2), f.from_i64(-1))])
        );
        // g·v₂ = v₁g + v₂g + g²
        let gv2 = rs.normal_form(&[Letter::G(1), Letter::V(1)]);
        assert_eq!(
            gv2,
            AlgebraElement::from_terms([(mono(1, 0, 1), f.one()), (mono(0, 1, 1), f.one()), (mono(0, 0, 2), f.one())])
        );
        assert_eq!(rs.normal_form(&[Letter::G(2), Letter::G(1)]), AlgebraElement::from_terms([(mono(0, 0, 0), f.one())]));
    }

    #[test]
    fn zero_params_rules_are_skew() {
        let z = DeformationParams::zero(transvection(3).unwrap()).unwrap();
        let rs = orbifold_algebra(&z);
        let f = z.field();
        let swap = &rs.rules()[0];
        assert_eq!(swap.rhs, vec![(f.one(), vec![Letter::V(0), Letter::V(1)])]);
        for r in rs.rules().iter().filter(|r| matches!(r.lhs, [Letter::G(_), Letter::V(_)])) {
            assert!(r.rhs.iter().all(|(_, w)| w.iter().any(|l| matches!(l, Letter::V(_)))));
        }
    }

    #[test]
    fn confluence_examples() {
        for q in [3, 5, 7] {
            let rs = orbifold_algebra(&builtin_transvection_gamma(q).unwrap());
            let c = rs.confluence_check(3);
            assert!(c.passed(), "p = {q}: {:?}", c.witness);
            let h = rs.hilbert_check(4, &c).unwrap();
            assert_eq!(h.count, q as usize * 15);
        }
        let zero = orbifold_algebra(&DeformationParams::zero(transvection(3).unwrap()).unwrap());
        assert!(zero.confluence_check(3).passed());

        let bad = orbifold_algebra(&adversarial_params(3).unwrap());
        let c = bad.confluence_check(3);
        let w = c.witness.clone().expect("adversarial fixture must fail");
        assert_ne!(w.left, w.right);
        // regression fixture: first failing word in enumeration order
        assert_eq!(w.word, vec![Letter::G(1), Letter::V(1), Letter::V(0)]);
        let f = bad.params().field();
        let mut diff = w.left.clone();
        for (m, c) in w.right.terms() {
            diff.add_term(*m, -c);
        }
        assert_eq!(diff, AlgebraElement::from_terms([(mono(1, 0, 0), f.one()), (mono(1, 0, 2), f.one())]));
        assert_eq!(bad.hilbert_check(2, &c).unwrap_err(), DeformationError::PrerequisiteFailed);
    }

    #[test]
    fn literal_sign_is_not_pbw() {
        // v₂v₁ - v₁v₂ = v₂g taken at face value, i.e. κ(v₁∧v₂) = -v₂ ⊗ g
        for q in [3, 5, 7] {
            let mut p = builtin_transvection_gamma(q).unwrap();
            let f = p.field();
            p.kappa_v1v2[(1, 1)] = f.from_i64(-1);
            assert!(!orbifold_algebra(&p).confluence_check(3).passed());
        }
    }

    #[test]
    fn hilbert_counts() {
        let rs = orbifold_algebra(&builtin_transvection_gamma(3).unwrap());
        let c = rs.confluence_check(3);
        assert_eq!(rs.hilbert_check(0, &c).unwrap().count, 3);
        let rs5 = orbifold_algebra(&builtin_transvection_gamma(5).unwrap());
        let c5 = rs5.confluence_check(3);
        assert_eq!(rs5.hilbert_check(2, &c5).unwrap().count, 30);
        for d in 0..=5 {
            assert!(rs.hilbert_check(d, &c).unwrap().passed());
        }
    }

    #[test]
    fn normal_form_is_idempotent() {
        let rs = orbifold_algebra(&builtin_transvection_gamma(5).unwrap());
        for w in rs.all_words(3) {
            let once = rs.normal_form(&w);
            assert_eq!(rs.normal_form_element(&once), once);
        }
    }

    /// Commutative product in `F[v₁, v₂]`, keyed by exponents.
    fn poly_mul(f: FieldSpec, x: &BTreeMap<(usize, usize), Scalar>, y: &BTreeMap<(usize, usize), Scalar>) -> BTreeMap<(usize, usize), Scalar> {
        let mut out: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (&(a, b), c) in x {
            for (&(a2, b2), d) in y {
                let e = out.entry((a + a2, b + b2)).or_insert_with(|| f.zero());
                *e = &*e + &(c * d);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `^h(v₁^a v₂^b)`.
    fn act(f: FieldSpec, h: &Matrix, a: usize, b: usize) -> BTreeMap<(usize, usize), Scalar> {
        let image = |k: usize| -> BTreeMap<(usize, usize), Scalar> {
            let mut m = BTreeMap::new();
            for (r, key) in [(0, (1, 0)), (1, (0, 1))] {
                if !h[(r, k)].is_zero() {
                    m.insert(key, h[(r, k)].clone());
                }
            }
            m
        };
        let mut out = BTreeMap::from([((0, 0), f.one())]);
        for _ in 0..a {
            out = poly_mul(f, &out, &image(0));
        }
        for _ in 0..b {
            out = poly_mul(f, &out, &image(1));
        }
        out
    }

    #[test]
    fn zero_params_recover_skew_product() {
        for gr in [
            transvection(3).unwrap(),
            CyclicGroup::from_generator(FieldSpec::Prime(5), Matrix::from_i64(FieldSpec::Prime(5), &[&[0, -1], &[1, 0]])).unwrap(),
        ] {
            let f = gr.field();
            let n = gr.order();
            let rs = orbifold_algebra(&DeformationParams::zero(gr.clone()).unwrap());
            let monos: Vec<Monomial> = (0..=2)
                .flat_map(|deg| (0..=deg).map(move |a| (a, deg - a)))
                .flat_map(|(a, b)| (0..n).map(move |c| mono(a, b, c)))
                .collect();
            for s in &monos {
                for t in &monos {
                    let mut w = s.word();
                    w.extend(t.word());
                    let lhs = rs.normal_form(&w);
                    let moved = act(f, gr.element(s.c), t.a, t.b);
                    let prod = poly_mul(f, &BTreeMap::from([((s.a, s.b), f.one())]), &moved);
                    let rhs = AlgebraElement::from_terms(
                        prod.into_iter().map(|((a, b), c)| (mono(a, b, gr.mul_index(s.c, t.c)), c)),
                    );
                    assert_eq!(lhs, rhs, "{s} * {t}");
                }
            }
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let rs = orbifold_algebra(&adversarial_params(5).unwrap());
        assert_eq!(rs.confluence_check_with(3, Execution::Sequential), rs.confluence_check_with(3, Execution::Parallel));
    }
}
