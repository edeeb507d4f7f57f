//! Restricted Lie algebras given by structure constants, and the family
//! m₂^λ(p).
//!
//! Basis vectors are indexed from 0 in storage: position `i` holds the
//! coefficient of `e_{i+1}`. [`RestrictedLieAlgebra::e`] takes the usual
//! 1-based index.
//!
//! The [p]-map is stored only on the basis. On arbitrary elements it is
//! computed from that table with `(αx)^[p] = α^p x^[p]` and Jacobson's
//! formula `(x+y)^[p] = x^[p] + y^[p] + Σ s_i(x, y)`, folding over the support
//! of the element in ascending order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::field::{parse_element, Fe, Field};
use crate::linalg::{is_zero_vector, Matrix};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieElement {
    coeffs: Vec<Fe>,
}

impl LieElement {
    pub fn new(coeffs: Vec<Fe>) -> Self {
        Self { coeffs }
    }

    pub fn zero(field: Field, dim: usize) -> Self {
        Self {
            coeffs: vec![field.zero(); dim],
        }
    }

    /// `e_{i+1}`
    pub fn basis(field: Field, dim: usize, i: usize) -> Self {
        let mut v = Self::zero(field, dim);
        v.coeffs[i] = field.one();
        v
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `e_{i+1}`.
    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coeffs)
    }

    pub fn scale(&self, a: Fe) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| a * *x).collect(),
        }
    }

    /// Indices with nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i)
    }

    /// Decomposition into single-term summands `α_i e_{i+1}` over the support.
    pub fn terms(&self) -> Vec<LieElement> {
        let field = self.coeffs[0].field();
        self.support()
            .map(|i| LieElement::basis(field, self.dim(), i).scale(self.coeffs[i]))
            .collect()
    }

    fn add_scaled(&mut self, a: Fe, other: &LieElement) {
        for (x, y) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !y.is_zero() {
                *x += a * *y;
            }
        }
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .support()
            .map(|i| {
                let c = self.coeffs[i];
                if c.is_one() {
                    format!("e{}", i + 1)
                } else {
                    format!("({c})e{}", i + 1)
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Add for &LieElement {
    type Output = LieElement;
    fn add(self, rhs: &LieElement) -> LieElement {
        LieElement {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| *a + *b).collect(),
        }
    }
}

impl Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, rhs: &LieElement) -> LieElement {
        LieElement {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| *a - *b).collect(),
        }
    }
}

impl Neg for &LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        LieElement {
            coeffs: self.coeffs.iter().map(|a| -*a).collect(),
        }
    }
}

/// The parameter `(λ₁, …, λ_p)` of m₂^λ(p).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LambdaVector(Vec<Fe>);

impl LambdaVector {
    pub fn new(values: Vec<Fe>) -> Self {
        Self(values)
    }

    pub fn zero(field: Field) -> Self {
        Self(vec![field.zero(); field.characteristic() as usize])
    }

    /// The `k`-th standard basis vector (1-based).
    pub fn standard(field: Field, k: usize) -> Self {
        let mut v = Self::zero(field);
        v.0[k - 1] = field.one();
        v
    }

    pub fn random<R: Rng + ?Sized>(field: Field, rng: &mut R) -> Self {
        Self((0..field.characteristic()).map(|_| field.random(rng)).collect())
    }

    /// Comma-separated field elements; the length must be `p`.
    pub fn parse(field: Field, text: &str) -> Result<Self, AlgebraError> {
        let values = text
            .split(',')
            .map(|s| parse_element(&field, s))
            .collect::<Result<Vec<_>, _>>()?;
        let p = field.characteristic() as usize;
        if values.len() != p {
            return Err(AlgebraError::LambdaLength {
                expected: p,
                got: values.len(),
            });
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[Fe] {
        &self.0
    }

    /// `λ_k`, 1-based.
    pub fn get(&self, k: usize) -> Fe {
        self.0[k - 1]
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.0)
    }
}

impl fmt::Display for LambdaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedLieAlgebra {
    field: Field,
    dim: usize,
    /// `[e_i, e_j]` for `i < j`, nonzero entries only.
    brackets: BTreeMap<(usize, usize), LieElement>,
    /// `brackets` flattened to sparse form for the inner loops.
    sparse: Vec<(usize, usize, Vec<(usize, Fe)>)>,
    p_map: Vec<LieElement>,
    degrees: Option<Vec<usize>>,
    lambda: Option<LambdaVector>,
}

impl RestrictedLieAlgebra {
    /// Builds an algebra from the brackets `[e_{i+1}, e_{j+1}]` with `i < j`
    /// and the [p]-images of the basis. Laws are not checked here; see
    /// [`verify_restricted`].
    pub fn new(
        field: Field,
        dim: usize,
        brackets: impl IntoIterator<Item = ((usize, usize), LieElement)>,
        p_map: Vec<LieElement>,
        degrees: Option<Vec<usize>>,
    ) -> Result<Self, AlgebraError> {
        let mut table = BTreeMap::new();
        for ((i, j), v) in brackets {
            if i >= j || j >= dim {
                return Err(AlgebraError::IndexOutOfRange { index: j + 1, dim });
            }
            if v.dim() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: dim,
                    got: v.dim(),
                });
            }
            if !v.is_zero() {
                table.insert((i, j), v);
            }
        }
        if p_map.len() != dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: dim,
                got: p_map.len(),
            });
        }
        if let Some(v) = p_map.iter().find(|v| v.dim() != dim) {
            return Err(AlgebraError::DimensionMismatch {
                expected: dim,
                got: v.dim(),
            });
        }
        if let Some(d) = &degrees {
            if d.len() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: dim,
                    got: d.len(),
                });
            }
        }
        let sparse = table
            .iter()
            .map(|(&(i, j), v)| (i, j, v.support().map(|k| (k, v.coeffs[k])).collect()))
            .collect();
        Ok(Self {
            field,
            dim,
            brackets: table,
            sparse,
            p_map,
            degrees,
            lambda: None,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degrees(&self) -> Option<&[usize]> {
        self.degrees.as_deref()
    }

    /// The λ parameter, for algebras built by [`make_m2`].
    pub fn lambda(&self) -> Option<&LambdaVector> {
        self.lambda.as_ref()
    }

    /// Nonzero brackets `[e_{i+1}, e_{j+1}]`, `i < j`.
    pub fn structure_constants(&self) -> &BTreeMap<(usize, usize), LieElement> {
        &self.brackets
    }

    pub fn p_map(&self) -> &[LieElement] {
        &self.p_map
    }

    pub fn zero(&self) -> LieElement {
        LieElement::zero(self.field, self.dim)
    }

    /// `e_{i+1}`
    pub fn basis(&self, i: usize) -> LieElement {
        LieElement::basis(self.field, self.dim, i)
    }

    /// `e_k` with the 1-based index `k`.
    pub fn e(&self, k: usize) -> LieElement {
        self.basis(k - 1)
    }

    pub fn element(&self, coeffs: Vec<Fe>) -> Result<LieElement, AlgebraError> {
        if coeffs.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                got: coeffs.len(),
            });
        }
        Ok(LieElement::new(coeffs))
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> LieElement {
        LieElement::new((0..self.dim).map(|_| self.field.random(rng)).collect())
    }

    /// `[e_{i+1}, e_{j+1}]` for any `i, j`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> LieElement {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => self.zero(),
            Less => self.brackets.get(&(i, j)).cloned().unwrap_or_else(|| self.zero()),
            Greater => self.brackets.get(&(j, i)).map(|v| -v).unwrap_or_else(|| self.zero()),
        }
    }

    fn check_dim(&self, g: &LieElement) -> Result<(), AlgebraError> {
        if g.dim() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                got: g.dim(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, g: &LieElement, h: &LieElement) -> Result<LieElement, AlgebraError> {
        self.check_dim(g)?;
        self.check_dim(h)?;
        Ok(self.bracket_unchecked(g, h))
    }

    pub(crate) fn bracket_unchecked(&self, g: &LieElement, h: &LieElement) -> LieElement {
        let mut out = self.zero();
        self.bracket_into(&g.coeffs, &h.coeffs, &mut out.coeffs);
        out
    }

    /// Writes `[g, h]` into `out` (overwriting it).
    pub(crate) fn bracket_into(&self, g: &[Fe], h: &[Fe], out: &mut [Fe]) {
        let zero = self.field.zero();
        out.iter_mut().for_each(|x| *x = zero);
        for (i, j, v) in &self.sparse {
            let c = g[*i] * h[*j] - g[*j] * h[*i];
            if c.is_zero() {
                continue;
            }
            for &(k, s) in v {
                out[k] += c * s;
            }
        }
    }

    /// Left-nested `[[…[[g₁, g₂], g₃], …], g_j]`.
    pub fn nfold_bracket(&self, elements: &[LieElement]) -> Result<LieElement, AlgebraError> {
        if elements.len() < 2 {
            return Err(AlgebraError::TooFewElements);
        }
        for g in elements {
            self.check_dim(g)?;
        }
        let mut acc = self.bracket_unchecked(&elements[0], &elements[1]);
        for g in &elements[2..] {
            acc = self.bracket_unchecked(&acc, g);
        }
        Ok(acc)
    }

    /// Matrix of `h ↦ [g, h]`.
    pub fn adjoint_matrix(&self, g: &LieElement) -> Result<Matrix, AlgebraError> {
        self.check_dim(g)?;
        let columns: Vec<Vec<Fe>> = (0..self.dim)
            .map(|j| self.bracket_unchecked(g, &self.basis(j)).into_coeffs())
            .collect();
        Ok(Matrix::from_columns(self.field, self.dim, &columns).expect("square"))
    }

    /// Jacobson's `s_1(g, h), …, s_{p−1}(g, h)`, where `i·s_i` is the
    /// coefficient of `t^{i−1}` in `ad(tg + h)^{p−1}(g)`.
    pub fn jacobson_terms(&self, g: &LieElement, h: &LieElement) -> Result<Vec<LieElement>, AlgebraError> {
        self.check_dim(g)?;
        self.check_dim(h)?;
        Ok(self.jacobson_terms_unchecked(g, h))
    }

    fn jacobson_terms_unchecked(&self, g: &LieElement, h: &LieElement) -> Vec<LieElement> {
        let p = self.characteristic() as usize;
        // coeffs[d] = coefficient of t^d in the operator power applied so far
        let mut poly = vec![g.clone()];
        for _ in 0..p - 1 {
            let mut next = vec![self.zero(); poly.len() + 1];
            for (d, v) in poly.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                next[d] = &next[d] + &self.bracket_unchecked(h, v);
                next[d + 1] = &next[d + 1] + &self.bracket_unchecked(g, v);
            }
            poly = next;
        }
        (1..p)
            .map(|i| {
                let inv = self.field.int(i as i64).inv().expect("i < p");
                poly[i - 1].scale(inv)
            })
            .collect()
    }

    /// `g^[p]`.
    pub fn p_power(&self, g: &LieElement) -> Result<LieElement, AlgebraError> {
        self.check_dim(g)?;
        Ok(self.p_power_unchecked(g))
    }

    pub(crate) fn p_power_unchecked(&self, g: &LieElement) -> LieElement {
        let p = self.characteristic();
        let mut partial = self.zero();
        let mut power = self.zero();
        for i in g.support() {
            let term = self.basis(i).scale(g.coeffs[i]);
            power.add_scaled(g.coeffs[i].pow(p), &self.p_map[i]);
            if !partial.is_zero() {
                for s in self.jacobson_terms_unchecked(&partial, &term) {
                    power = &power + &s;
                }
            }
            partial = &partial + &term;
        }
        power
    }
}

/// m₂^λ(p): `[e₁, e_i] = e_{i+1}` for `1 < i < p`, `[e₂, e_i] = e_{i+2}` for
/// `2 < i < p−1`, and `e_k^[p] = λ_k e_p`.
pub fn make_m2(field: Field, lambda: LambdaVector) -> Result<RestrictedLieAlgebra, AlgebraError> {
    let p64 = field.characteristic();
    if p64 < 5 {
        return Err(AlgebraError::CharTooSmall(p64));
    }
    let p = p64 as usize;
    if lambda.values().len() != p {
        return Err(AlgebraError::LambdaLength {
            expected: p,
            got: lambda.values().len(),
        });
    }
    if lambda.values().iter().any(|x| x.field() != field) {
        return Err(AlgebraError::Field(crate::error::FieldError::NotInField));
    }
    let e = |k: usize| LieElement::basis(field, p, k - 1);
    let mut brackets = Vec::new();
    for i in 2..p {
        brackets.push(((0, i - 1), e(i + 1)));
    }
    for i in 3..p - 1 {
        brackets.push(((1, i - 1), e(i + 2)));
    }
    let p_map = (1..=p).map(|k| e(p).scale(lambda.get(k))).collect();
    let degrees = (1..=p).collect();
    let mut a = RestrictedLieAlgebra::new(field, p, brackets, p_map, Some(degrees))?;
    a.lambda = Some(lambda);
    Ok(a)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &str, cases: usize, failure: Option<String>) {
        self.checks.push(AxiomCheck {
            name: name.to_string(),
            passed: failure.is_none(),
            cases,
            detail: failure,
        });
    }
}

/// Checks the Lie and restricted Lie axioms on the basis and on
/// `samples` random elements drawn from `rng`.
pub fn verify_restricted<R: Rng + ?Sized>(a: &RestrictedLieAlgebra, samples: usize, rng: &mut R) -> AxiomReport {
    let n = a.dim();
    let p = a.characteristic();
    let mut report = AxiomReport::default();

    let mut failure = None;
    let mut cases = 0;
    'jacobi: for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                cases += 1;
                let (x, y, z) = (a.basis(i), a.basis(j), a.basis(k));
                let t1 = a.bracket_unchecked(&x, &a.bracket_unchecked(&y, &z));
                let t2 = a.bracket_unchecked(&y, &a.bracket_unchecked(&z, &x));
                let t3 = a.bracket_unchecked(&z, &a.bracket_unchecked(&x, &y));
                if !(&(&t1 + &t2) + &t3).is_zero() {
                    failure = Some(format!("triple (e{}, e{}, e{})", i + 1, j + 1, k + 1));
                    break 'jacobi;
                }
            }
        }
    }
    report.push("jacobi", cases, failure);

    match a.degrees() {
        Some(deg) => {
            let mut failure = None;
            for (&(i, j), v) in a.structure_constants() {
                if v.support().any(|k| deg[k] != deg[i] + deg[j]) {
                    failure = Some(format!("[e{}, e{}] = {v}", i + 1, j + 1));
                    break;
                }
            }
            report.push("grading", a.structure_constants().len(), failure);
        }
        None => report.push("grading", 0, None),
    }

    let field = a.field();
    let pairs: Vec<(LieElement, LieElement)> = (0..samples).map(|_| (a.random_element(rng), a.random_element(rng))).collect();
    let scalars: Vec<Fe> = (0..samples).map(|_| field.random(rng)).collect();

    let mut failure = None;
    for ((g, _), alpha) in pairs.iter().zip(&scalars) {
        let lhs = a.p_power_unchecked(&g.scale(*alpha));
        let rhs = a.p_power_unchecked(g).scale(alpha.pow(p));
        if lhs != rhs {
            failure = Some(format!("alpha = {alpha}, g = {g}"));
            break;
        }
    }
    report.push("scalar_semilinearity", samples, failure);

    let ad_p_holds = |g: &LieElement| -> bool {
        let lhs = a.adjoint_matrix(&a.p_power_unchecked(g)).expect("dim");
        let rhs = a.adjoint_matrix(g).expect("dim").pow(p).expect("square");
        lhs == rhs
    };
    let failure = (0..n).find(|&i| !ad_p_holds(&a.basis(i))).map(|i| format!("e{}", i + 1));
    report.push("ad_p_basis", n, failure);
    let failure = pairs.iter().find(|(g, _)| !ad_p_holds(g)).map(|(g, _)| format!("g = {g}"));
    report.push("ad_p_random", samples, failure);

    let mut failure = None;
    for (g, h) in &pairs {
        let lhs = a.p_power_unchecked(&(g + h));
        let mut rhs = &a.p_power_unchecked(g) + &a.p_power_unchecked(h);
        for s in a.jacobson_terms_unchecked(g, h) {
            rhs = &rhs + &s;
        }
        if lhs != rhs {
            failure = Some(format!("g = {g}, h = {h}"));
            break;
        }
    }
    report.push("jacobson_additivity", samples, failure);

    report
}

/// A nonzero `μ` with `λ_k = μ^{(k−1)p} λ'_k` for every `k`, searching the
/// nonzero field elements in order starting from 1.
pub fn iso_classify(lambda: &LambdaVector, lambda_prime: &LambdaVector) -> Option<Fe> {
    let values = lambda.values();
    if values.len() != lambda_prime.values().len() || values.is_empty() {
        return None;
    }
    let field = values[0].field();
    let p = field.characteristic();
    field.nonzero_elements().find(|mu| {
        (1..=values.len()).all(|k| lambda.get(k) == mu.pow((k as u64 - 1) * p) * lambda_prime.get(k))
    })
}
