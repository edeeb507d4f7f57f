//! Chevalley–Eilenberg cochains with trivial coefficients in degrees 1–3.
//!
//! Cochain indices are 1-based and strictly increasing, stored in
//! lexicographic order: `e^{1,2}, e^{1,3}, …, e^{2,3}, …` for C² and likewise
//! for C³. Each differential exists twice: `*_generic` evaluates the
//! Chevalley–Eilenberg formula on the structure constants of any algebra,
//! `*_closed` transcribes the closed formulas for m₂(p), which use the
//! convention that `e^{i,j} = 0` unless `i < j` (and `e^{s,t,u} = 0` unless
//! `s < t < u`).

use std::fmt;

use serde::Serialize;

use crate::algebra::{LieElement, RestrictedLieAlgebra};
use crate::error::AlgebraError;
use crate::field::{Fe, Field};
use crate::linalg::{is_zero_vector, Matrix};

/// Position of `e^{i,j}` (1-based, `i < j ≤ n`) in C².
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    (i - 1) * n - (i - 1) * i / 2 + (j - i - 1)
}

/// Position of `e^{s,t,u}` (1-based, `s < t < u ≤ n`) in C³.
pub fn triple_index(n: usize, s: usize, t: usize, u: usize) -> usize {
    debug_assert!(1 <= s && s < t && t < u && u <= n);
    let before_s: usize = (1..s).map(|a| (n - a) * (n - a - 1) / 2).sum();
    let before_t: usize = (s + 1..t).map(|b| n - b).sum();
    before_s + before_t + (u - t - 1)
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

pub fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    (1..=n)
        .flat_map(|s| (s + 1..=n).flat_map(move |t| (t + 1..=n).map(move |u| (s, t, u))))
        .collect()
}

pub fn c2_dim(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn c3_dim(n: usize) -> usize {
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairConvention {
    /// `e^{i,j} = 0` whenever `j ≤ i`.
    ClosedForm,
    /// `e^{j,i} = −e^{i,j}`, `e^{i,i} = 0`.
    Antisymmetric,
}

/// `(sign, position)` of `e^{i,j}` in C², or `None` when it vanishes.
pub fn normalize_pair(n: usize, i: usize, j: usize, convention: PairConvention) -> Option<(i8, usize)> {
    use std::cmp::Ordering::*;
    match (i.cmp(&j), convention) {
        (Equal, _) => None,
        (Less, _) => Some((1, pair_index(n, i, j))),
        (Greater, PairConvention::ClosedForm) => None,
        (Greater, PairConvention::Antisymmetric) => Some((-1, pair_index(n, j, i))),
    }
}

fn signed(field: Field, sign: i8) -> Fe {
    field.int(sign as i64)
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Cochain1 {
    #[serde(skip)]
    field: Field,
    #[serde(serialize_with = "ser_coeffs")]
    coeffs: Vec<Fe>,
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Cochain2 {
    #[serde(skip)]
    field: Field,
    n: usize,
    #[serde(serialize_with = "ser_coeffs")]
    coeffs: Vec<Fe>,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cochain3 {
    field: Field,
    n: usize,
    coeffs: Vec<Fe>,
}

fn ser_coeffs<S: serde::Serializer>(v: &[Fe], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl Cochain1 {
    pub fn zero(field: Field, n: usize) -> Self {
        Self {
            field,
            coeffs: vec![field.zero(); n],
        }
    }

    pub fn from_coeffs(field: Field, coeffs: Vec<Fe>) -> Self {
        Self { field, coeffs }
    }

    /// `e^k`
    pub fn basis(field: Field, n: usize, k: usize) -> Self {
        let mut c = Self::zero(field, n);
        c.coeffs[k - 1] = field.one();
        c
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    /// `μ_k`
    pub fn get(&self, k: usize) -> Fe {
        self.coeffs[k - 1]
    }

    pub fn eval(&self, g: &LieElement) -> Fe {
        self.coeffs.iter().zip(g.coeffs()).fold(self.field.zero(), |acc, (a, b)| acc + *a * *b)
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coeffs)
    }
}

impl Cochain2 {
    pub fn zero(field: Field, n: usize) -> Self {
        Self {
            field,
            n,
            coeffs: vec![field.zero(); c2_dim(n)],
        }
    }

    pub fn from_coeffs(field: Field, n: usize, coeffs: Vec<Fe>) -> Self {
        assert_eq!(coeffs.len(), c2_dim(n));
        Self { field, n, coeffs }
    }

    /// `e^{i,j}`, `i < j`.
    pub fn basis(field: Field, n: usize, i: usize, j: usize) -> Self {
        Self::from_terms(field, n, &[(i, j, 1)])
    }

    /// `Σ c·e^{i,j}`, with antisymmetric normalization of each pair.
    pub fn from_terms(field: Field, n: usize, terms: &[(usize, usize, i64)]) -> Self {
        let mut c = Self::zero(field, n);
        for &(i, j, v) in terms {
            if let Some((s, idx)) = normalize_pair(n, i, j, PairConvention::Antisymmetric) {
                c.coeffs[idx] += field.int(v) * signed(field, s);
            }
        }
        c
    }

    /// `φ_k = d¹(e^k) = e^{1,k−1} + e^{2,k−2}` (terms with `j ≤ i` dropped).
    pub fn phi(field: Field, n: usize, k: usize) -> Self {
        let mut c = Self::zero(field, n);
        for (i, j) in [(1, k.wrapping_sub(1)), (2, k.wrapping_sub(2))] {
            if j <= n {
                if let Some((s, idx)) = normalize_pair(n, i, j, PairConvention::ClosedForm) {
                    c.coeffs[idx] += signed(field, s);
                }
            }
        }
        c
    }

    /// `η = e^{1,6} + e^{3,4}`
    pub fn eta(field: Field, n: usize) -> Self {
        Self::from_terms(field, n, &[(1, 6, 1), (3, 4, 1)])
    }

    /// `ξ = e^{2,5} − e^{3,4}`
    pub fn xi(field: Field, n: usize) -> Self {
        Self::from_terms(field, n, &[(2, 5, 1), (3, 4, -1)])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.coeffs
    }

    /// `σ_{ij}` for `i < j`.
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.coeffs[pair_index(self.n, i, j)]
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coeffs)
    }

    /// `φ(g ∧ h) = Σ_{i<j} σ_{ij} (g_i h_j − g_j h_i)`
    pub fn eval(&self, g: &LieElement, h: &LieElement) -> Fe {
        let mut acc = self.field.zero();
        let mut idx = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                let s = self.coeffs[idx];
                idx += 1;
                if s.is_zero() {
                    continue;
                }
                acc += s * (g.coeff(i) * h.coeff(j) - g.coeff(j) * h.coeff(i));
            }
        }
        acc
    }

    /// Nonzero terms `(i, j, σ_{ij})`.
    pub fn terms(&self) -> Vec<(usize, usize, Fe)> {
        pairs(self.n)
            .into_iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|((i, j), c)| (i, j, *c))
            .collect()
    }

    /// Graded components, by `deg(i) + deg(j)`.
    pub fn homogeneous_parts(&self, degrees: &[usize]) -> Vec<(usize, Cochain2)> {
        let mut parts: Vec<(usize, Cochain2)> = Vec::new();
        for (i, j, c) in self.terms() {
            let k = degrees[i - 1] + degrees[j - 1];
            let pos = match parts.iter().position(|(g, _)| *g == k) {
                Some(pos) => pos,
                None => {
                    parts.push((k, Cochain2::zero(self.field, self.n)));
                    parts.len() - 1
                }
            };
            parts[pos].1.coeffs[pair_index(self.n, i, j)] = c;
        }
        parts.sort_by_key(|(k, _)| *k);
        parts
    }
}

impl std::ops::Add for &Cochain2 {
    type Output = Cochain2;
    fn add(self, rhs: &Cochain2) -> Cochain2 {
        Cochain2 {
            field: self.field,
            n: self.n,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| *a + *b).collect(),
        }
    }
}

impl Cochain2 {
    pub fn scale(&self, a: Fe) -> Cochain2 {
        Cochain2 {
            field: self.field,
            n: self.n,
            coeffs: self.coeffs.iter().map(|x| a * *x).collect(),
        }
    }
}

impl Cochain3 {
    pub fn zero(field: Field, n: usize) -> Self {
        Self {
            field,
            n,
            coeffs: vec![field.zero(); c3_dim(n)],
        }
    }

    pub fn from_coeffs(field: Field, n: usize, coeffs: Vec<Fe>) -> Self {
        assert_eq!(coeffs.len(), c3_dim(n));
        Self { field, n, coeffs }
    }

    pub fn basis(field: Field, n: usize, s: usize, t: usize, u: usize) -> Self {
        let mut c = Self::zero(field, n);
        c.coeffs[triple_index(n, s, t, u)] = field.one();
        c
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.coeffs
    }

    pub fn get(&self, s: usize, t: usize, u: usize) -> Fe {
        self.coeffs[triple_index(self.n, s, t, u)]
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coeffs)
    }

    /// Adds `c·e^{s,t,u}` if `s < t < u`, otherwise nothing.
    fn add_closed(&mut self, s: usize, t: usize, u: usize, c: Fe) {
        if s >= 1 && s < t && t < u && u <= self.n {
            self.coeffs[triple_index(self.n, s, t, u)] += c;
        }
    }
}

fn fmt_terms<I: Iterator<Item = (String, Fe)>>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result {
    let mut first = true;
    for (name, c) in terms {
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        if c.is_one() {
            write!(f, "{name}")?;
        } else {
            write!(f, "({c}){name}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Debug for Cochain1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cochain1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.coeffs.iter().enumerate().map(|(k, c)| (format!("e^{}", k + 1), *c)))
    }
}

impl fmt::Debug for Cochain2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cochain2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, pairs(self.n).into_iter().zip(&self.coeffs).map(|((i, j), c)| (format!("e^{{{i},{j}}}"), *c)))
    }
}

impl fmt::Debug for Cochain3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            triples(self.n).into_iter().zip(&self.coeffs).map(|((s, t, u), c)| (format!("e^{{{s},{t},{u}}}"), *c)),
        )
    }
}

/// `(d¹ψ)(e_i ∧ e_j) = ψ([e_i, e_j])`
pub fn d1_generic(a: &RestrictedLieAlgebra, psi: &Cochain1) -> Cochain2 {
    let n = a.dim();
    let mut out = Cochain2::zero(a.field(), n);
    for (&(i, j), v) in a.structure_constants() {
        out.coeffs[pair_index(n, i + 1, j + 1)] = psi.eval(v);
    }
    out
}

/// `d¹(e^k) = e^{1,k−1} + e^{2,k−2}` for m₂(p).
pub fn d1_closed(p: usize, psi: &Cochain1) -> Cochain2 {
    let field = psi.field();
    let mut out = Cochain2::zero(field, p);
    for k in 1..=p {
        let mu = psi.get(k);
        if mu.is_zero() {
            continue;
        }
        out = &out + &Cochain2::phi(field, p, k).scale(mu);
    }
    out
}

/// `d²φ(g, h, f) = φ([g,h] ∧ f) − φ([g,f] ∧ h) + φ([h,f] ∧ g)` on every
/// basis triple.
pub fn d2_generic(a: &RestrictedLieAlgebra, phi: &Cochain2) -> Cochain3 {
    let n = a.dim();
    let mut out = Cochain3::zero(a.field(), n);
    for (idx, (s, t, u)) in triples(n).into_iter().enumerate() {
        let (es, et, eu) = (a.e(s), a.e(t), a.e(u));
        let v = phi.eval(&a.basis_bracket(s - 1, t - 1), &eu) - phi.eval(&a.basis_bracket(s - 1, u - 1), &et)
            + phi.eval(&a.basis_bracket(t - 1, u - 1), &es);
        out.coeffs[idx] = v;
    }
    out
}

/// `d²(e^{1,j}) = −e^{1,2,j−2}`,
/// `d²(e^{i,j}) = e^{1,i−1,j} + e^{1,i,j−1} + e^{2,i−2,j} + e^{2,i,j−2}` for
/// `2 ≤ i < j ≤ p`, with symbols that are not strictly increasing set to zero.
///
/// One exception to the zero convention: for `j = i + 1` the last symbol is
/// `e^{2,i,i−1}`, which comes from `[e₂, e_{i−1}] = e_{i+1}` and is read as
/// `−e^{2,i−1,i}` whenever that bracket exists (`i ≥ 4`). See
/// [`d2_closed_strict`] for the version without it.
pub fn d2_closed(p: usize, phi: &Cochain2) -> Cochain3 {
    let mut out = d2_closed_strict(p, phi);
    for (i, j, s) in phi.terms() {
        if i >= 4 && j == i + 1 {
            out.add_closed(2, i - 1, i, -s);
        }
    }
    out
}

/// [`d2_closed`] with every non-increasing symbol set to zero, including
/// `e^{2,i,i−1}`. Disagrees with [`d2_generic`] exactly on `e^{i,i+1}`,
/// `4 ≤ i ≤ p−1`.
pub fn d2_closed_strict(p: usize, phi: &Cochain2) -> Cochain3 {
    let field = phi.field();
    let mut out = Cochain3::zero(field, p);
    for (i, j, s) in phi.terms() {
        if i == 1 {
            if j >= 4 {
                out.add_closed(1, 2, j - 2, -s);
            }
        } else {
            out.add_closed(1, i - 1, j, s);
            out.add_closed(1, i, j - 1, s);
            if i > 2 {
                out.add_closed(2, i - 2, j, s);
            }
            out.add_closed(2, i, j - 2, s);
        }
    }
    out
}

pub fn d1_matrix(a: &RestrictedLieAlgebra) -> Matrix {
    let n = a.dim();
    let cols: Vec<Vec<Fe>> = (1..=n).map(|k| d1_generic(a, &Cochain1::basis(a.field(), n, k)).into_coeffs()).collect();
    Matrix::from_columns(a.field(), c2_dim(n), &cols).expect("shape")
}

pub fn d2_matrix(a: &RestrictedLieAlgebra) -> Matrix {
    let n = a.dim();
    let cols: Vec<Vec<Fe>> = pairs(n)
        .into_iter()
        .map(|(i, j)| d2_generic(a, &Cochain2::basis(a.field(), n, i, j)).into_coeffs())
        .collect();
    Matrix::from_columns(a.field(), c3_dim(n), &cols).expect("shape")
}

/// Block of a differential between the grade-`k` components.
#[derive(Clone, Debug)]
pub struct GradedBlock {
    pub grade: usize,
    /// Positions in the full domain basis, ascending.
    pub domain: Vec<usize>,
    /// Positions in the full codomain basis, ascending.
    pub codomain: Vec<usize>,
    pub matrix: Matrix,
}

impl GradedBlock {
    /// Embeds a vector of the block's domain into the full cochain space.
    pub fn embed(&self, v: &[Fe], full_dim: usize) -> Vec<Fe> {
        let field = self.matrix.field();
        let mut out = vec![field.zero(); full_dim];
        for (x, &pos) in v.iter().zip(&self.domain) {
            out[pos] = *x;
        }
        out
    }
}

/// Grades of the basis vectors of C¹, C², C³ (`None` without grading).
pub fn cochain_grades(a: &RestrictedLieAlgebra, degree: usize) -> Option<Vec<usize>> {
    let d = a.degrees()?;
    let n = a.dim();
    Some(match degree {
        1 => d.to_vec(),
        2 => pairs(n).into_iter().map(|(i, j)| d[i - 1] + d[j - 1]).collect(),
        3 => triples(n).into_iter().map(|(s, t, u)| d[s - 1] + d[t - 1] + d[u - 1]).collect(),
        _ => return None,
    })
}

/// The range of grades present in C^degree.
pub fn grade_range(a: &RestrictedLieAlgebra, degree: usize) -> Option<(usize, usize)> {
    let g = cochain_grades(a, degree)?;
    Some((*g.iter().min()?, *g.iter().max()?))
}

/// `d^degree` restricted to the grade-`k` component (`degree` ∈ {1, 2}).
pub fn graded_matrix(a: &RestrictedLieAlgebra, degree: usize, k: usize) -> Result<GradedBlock, AlgebraError> {
    let (min, max) = grade_range(a, degree).ok_or(AlgebraError::GradeOutOfRange { grade: k, min: 0, max: 0 })?;
    if k < min || k > max || !(degree == 1 || degree == 2) {
        return Err(AlgebraError::GradeOutOfRange { grade: k, min, max });
    }
    let full = if degree == 1 { d1_matrix(a) } else { d2_matrix(a) };
    Ok(graded_block(a, &full, degree, k))
}

/// Grade-`k` block of an already built `d^degree` matrix.
pub(crate) fn graded_block(a: &RestrictedLieAlgebra, full: &Matrix, degree: usize, k: usize) -> GradedBlock {
    let dom_grades = cochain_grades(a, degree).expect("graded");
    let cod_grades = cochain_grades(a, degree + 1).expect("graded");
    let domain: Vec<usize> = (0..dom_grades.len()).filter(|&i| dom_grades[i] == k).collect();
    let codomain: Vec<usize> = (0..cod_grades.len()).filter(|&i| cod_grades[i] == k).collect();
    let mut m = Matrix::zero(a.field(), codomain.len(), domain.len());
    for (r, &row) in codomain.iter().enumerate() {
        for (c, &col) in domain.iter().enumerate() {
            m[(r, c)] = full[(row, col)];
        }
    }
    GradedBlock {
        grade: k,
        domain,
        codomain,
        matrix: m,
    }
}
