//! Restricted cochains in degrees 1–3.
//!
//! A restricted 2-cochain is a pair `(φ, ω)` where `ω` has the *-property
//! with respect to `φ`:
//!
//! ```text
//! ω(αg) = α^p ω(g)
//! ω(g + h) = ω(g) + ω(h) + Σ 1/#(g) · φ([g₁, g₂, …, g_{p−1}] ∧ g_p)
//! ```
//!
//! with the sum over `g₁ = g`, `g₂ = h` and `g₃, …, g_p ∈ {g, h}`, and
//! `#(g)` the number of slots holding `g`. Such an `ω` is determined by `φ`
//! and its values on a basis, which is how [`OmegaMap`] stores it.
//! Evaluation folds the support of the argument in ascending order and sums
//! the correction over every slot sequence.
//!
//! Coordinates on C²* are `(σ_{ij}; ω(e₁), …, ω(e_n))`, i.e. coefficients in
//! the basis `(e^{i,j}, ẽ^{i,j})`, `(0, ē^k)`.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{LieElement, RestrictedLieAlgebra};
use crate::cochain::{c2_dim, c3_dim, d1_generic, d2_generic, pairs, Cochain1, Cochain2, Cochain3};
use crate::error::AlgebraError;
use crate::field::{small_fraction, Fe, Field};
use crate::linalg::{is_zero_vector, rref, Matrix};

/// `ω`, stored as its reference 2-cochain and its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaMap {
    reference: Cochain2,
    basis_values: Vec<Fe>,
}

impl OmegaMap {
    pub fn new(reference: Cochain2, basis_values: Vec<Fe>) -> Result<Self, AlgebraError> {
        if basis_values.len() != reference.n() {
            return Err(AlgebraError::DimensionMismatch {
                expected: reference.n(),
                got: basis_values.len(),
            });
        }
        Ok(Self {
            reference,
            basis_values,
        })
    }

    pub fn reference(&self) -> &Cochain2 {
        &self.reference
    }

    pub fn basis_values(&self) -> &[Fe] {
        &self.basis_values
    }

    /// `ω(e_k)`, 1-based.
    pub fn basis_value(&self, k: usize) -> Fe {
        self.basis_values[k - 1]
    }

    /// Whether the map vanishes on the basis (as `φ̃` does).
    pub fn vanishes_on_basis(&self) -> bool {
        is_zero_vector(&self.basis_values)
    }
}

/// `(φ, ω)` with `ω` referring to `φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedCochain2 {
    phi: Cochain2,
    omega: OmegaMap,
}

impl RestrictedCochain2 {
    pub fn new(phi: Cochain2, omega: OmegaMap) -> Result<Self, AlgebraError> {
        if omega.reference != phi {
            return Err(AlgebraError::InconsistentCochain);
        }
        Ok(Self { phi, omega })
    }

    /// `(φ, ω)` with `ω(e_k) = basis_values[k−1]`.
    pub fn with_values(phi: Cochain2, basis_values: Vec<Fe>) -> Result<Self, AlgebraError> {
        let omega = OmegaMap::new(phi.clone(), basis_values)?;
        Ok(Self { phi, omega })
    }

    /// `(φ, φ̃)`
    pub fn tilde_pair(phi: Cochain2) -> Self {
        let omega = tilde(&phi);
        Self { phi, omega }
    }

    /// `(0, ē^k)`
    pub fn bar(field: Field, n: usize, k: usize) -> Result<Self, AlgebraError> {
        let omega = bar_e(field, n, k)?;
        Ok(Self {
            phi: Cochain2::zero(field, n),
            omega,
        })
    }

    pub fn phi(&self) -> &Cochain2 {
        &self.phi
    }

    pub fn omega(&self) -> &OmegaMap {
        &self.omega
    }

    pub fn n(&self) -> usize {
        self.phi.n()
    }

    /// `(σ_{ij}; ω(e₁), …, ω(e_n))`
    pub fn coordinates(&self) -> Vec<Fe> {
        let mut v = self.phi.coeffs().to_vec();
        v.extend_from_slice(&self.omega.basis_values);
        v
    }

    pub fn from_coordinates(field: Field, n: usize, coords: &[Fe]) -> Result<Self, AlgebraError> {
        let m = c2_dim(n);
        if coords.len() != m + n {
            return Err(AlgebraError::DimensionMismatch {
                expected: m + n,
                got: coords.len(),
            });
        }
        let phi = Cochain2::from_coeffs(field, n, coords[..m].to_vec());
        Self::with_values(phi, coords[m..].to_vec())
    }
}

/// A map `η(g, h) = Σ α_i β_j^p M(i, j)`, linear in `g` and
/// Frobenius-semilinear in `h`. Every `ind²` image has this form.
#[derive(Clone, PartialEq, Eq)]
pub struct SemiBilinearMap {
    field: Field,
    n: usize,
    values: Vec<Fe>,
}

impl SemiBilinearMap {
    pub fn zero(field: Field, n: usize) -> Self {
        Self {
            field,
            n,
            values: vec![field.zero(); n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `M(i, j) = η(e_i, e_j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.values[(i - 1) * self.n + (j - 1)]
    }

    /// The grid in row-major order.
    pub fn values(&self) -> &[Fe] {
        &self.values
    }

    pub fn eval(&self, g: &LieElement, h: &LieElement) -> Fe {
        let mut acc = self.field.zero();
        let frob: Vec<Fe> = h.coeffs().iter().map(|b| b.frobenius()).collect();
        for i in 0..self.n {
            let a = g.coeff(i);
            if a.is_zero() {
                continue;
            }
            for (j, b) in frob.iter().enumerate() {
                acc += a * *b * self.values[i * self.n + j];
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.values)
    }
}

impl fmt::Debug for SemiBilinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in 1..=self.n {
            for j in 1..=self.n {
                let v = self.get(i, j);
                if v.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "M({i},{j})={v}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Repeated evaluation of one [`OmegaMap`] on one algebra.
pub struct OmegaEvaluator<'a> {
    algebra: &'a RestrictedLieAlgebra,
    omega: &'a OmegaMap,
    /// Nonzero `σ_{ij}`, 0-based.
    terms: Vec<(usize, usize, Fe)>,
    /// `inv[k] = 1/k` for `1 ≤ k < p`.
    inv: Vec<Fe>,
    p: usize,
}

impl<'a> OmegaEvaluator<'a> {
    pub fn new(algebra: &'a RestrictedLieAlgebra, omega: &'a OmegaMap) -> Result<Self, AlgebraError> {
        if omega.reference.n() != algebra.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: algebra.dim(),
                got: omega.reference.n(),
            });
        }
        let field = algebra.field();
        let p = algebra.characteristic() as usize;
        let terms = omega.reference.terms().into_iter().map(|(i, j, s)| (i - 1, j - 1, s)).collect();
        let mut inv = vec![field.zero()];
        inv.extend((1..p).map(|k| field.int(k as i64).inv().expect("k < p")));
        Ok(Self {
            algebra,
            omega,
            terms,
            inv,
            p,
        })
    }

    /// `ω(g)`, folding the support in ascending order.
    pub fn eval(&self, g: &LieElement) -> Result<Fe, AlgebraError> {
        let order: Vec<usize> = g.support().collect();
        self.eval_ordered(g, &order)
    }

    /// `ω(g)`, folding the support terms in the given order (0-based
    /// positions, each support position exactly once).
    pub fn eval_ordered(&self, g: &LieElement, order: &[usize]) -> Result<Fe, AlgebraError> {
        let n = self.algebra.dim();
        if g.dim() != n {
            return Err(AlgebraError::DimensionMismatch { expected: n, got: g.dim() });
        }
        let field = self.algebra.field();
        let mut partial = vec![field.zero(); n];
        let mut term = vec![field.zero(); n];
        let mut value = field.zero();
        let mut scratch = vec![vec![field.zero(); n]; self.p];
        for (step, &i) in order.iter().enumerate() {
            if i >= n {
                return Err(AlgebraError::IndexOutOfRange { index: i + 1, dim: n });
            }
            let alpha = g.coeff(i);
            value += alpha.frobenius() * self.omega.basis_values[i];
            if step > 0 && !self.terms.is_empty() {
                term.iter_mut().for_each(|x| *x = field.zero());
                term[i] = alpha;
                value += self.correction_into(&partial, &term, &mut scratch);
            }
            partial[i] += alpha;
        }
        Ok(value)
    }

    /// `Σ 1/#(g) · φ([g₁, …, g_{p−1}] ∧ g_p)` over all `2^{p−2}` sequences.
    pub fn correction(&self, g: &LieElement, h: &LieElement) -> Fe {
        let field = self.algebra.field();
        let mut scratch = vec![vec![field.zero(); self.algebra.dim()]; self.p];
        self.correction_into(g.coeffs(), h.coeffs(), &mut scratch)
    }

    fn correction_into(&self, g: &[Fe], h: &[Fe], scratch: &mut [Vec<Fe>]) -> Fe {
        let (first, rest) = scratch.split_first_mut().expect("p ≥ 2");
        self.algebra.bracket_into(g, h, first);
        if is_zero_vector(first) {
            return self.algebra.field().zero();
        }
        self.walk(first, 2, 1, g, h, rest)
    }

    /// `x = [g₁, …, g_len]` with `count` slots equal to `g` so far.
    fn walk(&self, x: &[Fe], len: usize, count: usize, g: &[Fe], h: &[Fe], scratch: &mut [Vec<Fe>]) -> Fe {
        let zero = self.algebra.field().zero();
        if len == self.p - 1 {
            let mut acc = zero;
            let a = self.phi_eval(x, g);
            if !a.is_zero() {
                acc += a * self.inv[count + 1];
            }
            let b = self.phi_eval(x, h);
            if !b.is_zero() {
                acc += b * self.inv[count];
            }
            return acc;
        }
        let (next, rest) = scratch.split_first_mut().expect("depth < p");
        let mut acc = zero;
        for (y, c) in [(g, count + 1), (h, count)] {
            self.algebra.bracket_into(x, y, next);
            if !is_zero_vector(next) {
                acc += self.walk(next, len + 1, c, g, h, rest);
            }
        }
        acc
    }

    fn phi_eval(&self, x: &[Fe], y: &[Fe]) -> Fe {
        let mut acc = self.algebra.field().zero();
        for &(i, j, s) in &self.terms {
            let v = x[i] * y[j] - x[j] * y[i];
            if !v.is_zero() {
                acc += s * v;
            }
        }
        acc
    }
}

/// `ω(g)` via the *-property.
pub fn eval_omega(a: &RestrictedLieAlgebra, omega: &OmegaMap, g: &LieElement) -> Result<Fe, AlgebraError> {
    OmegaEvaluator::new(a, omega)?.eval(g)
}

/// `φ̃`: vanishes on the basis, *-property with respect to `φ`.
pub fn tilde(phi: &Cochain2) -> OmegaMap {
    OmegaMap {
        reference: phi.clone(),
        basis_values: vec![phi.field().zero(); phi.n()],
    }
}

/// `ē^k(Σ α_i e_i) = α_k^p`, 1-based.
pub fn bar_e(field: Field, n: usize, k: usize) -> Result<OmegaMap, AlgebraError> {
    if k == 0 || k > n {
        return Err(AlgebraError::IndexOutOfRange { index: k, dim: n });
    }
    let mut values = vec![field.zero(); n];
    values[k - 1] = field.one();
    Ok(OmegaMap {
        reference: Cochain2::zero(field, n),
        basis_values: values,
    })
}

/// `ind¹(ψ)(g) = ψ(g^[p])`, as a map with the *-property with respect to
/// `d¹ψ`.
pub fn ind1(a: &RestrictedLieAlgebra, psi: &Cochain1) -> OmegaMap {
    OmegaMap {
        reference: d1_generic(a, psi),
        basis_values: a.p_map().iter().map(|v| psi.eval(v)).collect(),
    }
}

/// `ind²(φ, ω)(g, h) = φ(g ∧ h^[p])`, which does not depend on `ω`.
/// The grid is `M(i, j) = φ(e_i ∧ e_j^[p])`; it represents the map exactly
/// when the [p]-map is semilinear, as in m₂^λ(p).
pub fn ind2(a: &RestrictedLieAlgebra, phi: &Cochain2) -> SemiBilinearMap {
    let n = a.dim();
    let mut m = SemiBilinearMap::zero(a.field(), n);
    for i in 0..n {
        let ei = a.basis(i);
        for (j, pj) in a.p_map().iter().enumerate() {
            m.values[i * n + j] = phi.eval(&ei, pj);
        }
    }
    m
}

/// `d¹*(ψ) = (d¹ψ, ind¹ψ)`
pub fn d1_star(a: &RestrictedLieAlgebra, psi: &Cochain1) -> RestrictedCochain2 {
    let omega = ind1(a, psi);
    RestrictedCochain2 {
        phi: omega.reference.clone(),
        omega,
    }
}

/// `d²*(φ, ω) = (d²φ, ind²(φ, ω))`
pub fn d2_star(a: &RestrictedLieAlgebra, c: &RestrictedCochain2) -> (Cochain3, SemiBilinearMap) {
    (d2_generic(a, &c.phi), ind2(a, &c.phi))
}

/// Matrix of d¹* from C¹ to C²* coordinates, `(c₂ + n) × n`.
pub fn d1_star_matrix(a: &RestrictedLieAlgebra) -> Matrix {
    let n = a.dim();
    let cols: Vec<Vec<Fe>> = (1..=n)
        .map(|k| d1_star(a, &Cochain1::basis(a.field(), n, k)).coordinates())
        .collect();
    Matrix::from_columns(a.field(), c2_dim(n) + n, &cols).expect("shape")
}

/// Matrix of d²* from C²* coordinates to `(d²φ; M)`, with `M` flattened
/// row-major. Size `(c₃ + n²) × (c₂ + n)`; the ω columns are zero.
pub fn d2_star_matrix(a: &RestrictedLieAlgebra) -> Matrix {
    let n = a.dim();
    let field = a.field();
    let rows = c3_dim(n) + n * n;
    let mut cols: Vec<Vec<Fe>> = pairs(n)
        .into_iter()
        .map(|(i, j)| {
            let c = RestrictedCochain2::tilde_pair(Cochain2::basis(field, n, i, j));
            let (z, eta) = d2_star(a, &c);
            let mut v = z.into_coeffs();
            v.extend_from_slice(eta.values());
            v
        })
        .collect();
    cols.extend((0..n).map(|_| vec![field.zero(); rows]));
    Matrix::from_columns(field, rows, &cols).expect("shape")
}

/// One term `c · Π α_i^{e_i}` of a closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Monomial {
    #[serde(serialize_with = "ser_fe")]
    pub coeff: Fe,
    /// Exponent of `α_{i+1}` at position `i`.
    pub exponents: Vec<u32>,
}

fn ser_fe<S: serde::Serializer>(x: &Fe, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl Monomial {
    pub fn eval(&self, g: &LieElement) -> Fe {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .fold(self.coeff, |acc, (i, e)| acc * g.coeff(i).pow(*e as u64))
    }

    /// `α_1^{4}α_2` style, with the coefficient as a small fraction.
    pub fn latex(&self) -> String {
        let (num, den) = small_fraction(self.coeff).unwrap_or((0, 1));
        let mut s = String::new();
        let (sign, num) = if num < 0 { ("-", -num) } else { ("", num) };
        s.push_str(sign);
        match (num, den) {
            (1, 1) => {}
            (n, 1) => s.push_str(&n.to_string()),
            (n, d) => s.push_str(&format!("\\frac{{{n}}}{{{d}}}")),
        }
        for (i, &e) in self.exponents.iter().enumerate() {
            match e {
                0 => {}
                1 => s.push_str(&format!("\\alpha_{}", i + 1)),
                e => s.push_str(&format!("\\alpha_{}^{}", i + 1, brace(e))),
            }
        }
        s
    }
}

fn brace(e: u32) -> String {
    if e < 10 {
        e.to_string()
    } else {
        format!("{{{e}}}")
    }
}

/// `ω` as a polynomial in the coordinates `α_i` of its argument.
///
/// Over GF(p), `φ̃` for a grade-`k` cochain is a combination of monomials of
/// total degree `p`, weighted degree `k` and exponents below `p`; the basis
/// values contribute `ω(e_k)·α_k^p`. The coefficients are found by solving
/// on random points and then confirmed on further points.
pub fn omega_closed_form(a: &RestrictedLieAlgebra, omega: &OmegaMap, seed: u64) -> Result<Vec<Monomial>, AlgebraError> {
    let field = a.field();
    if field.extension_degree() != 1 {
        return Err(AlgebraError::NotPrimeField);
    }
    let degrees = a.degrees().ok_or(AlgebraError::NoClosedForm)?;
    let n = a.dim();
    let p = a.characteristic() as u32;
    let bare = tilde(&omega.reference);
    let eval = OmegaEvaluator::new(a, &bare)?;

    let mut monomials: Vec<Vec<u32>> = Vec::new();
    for (k, _) in omega.reference.homogeneous_parts(degrees) {
        let mut current = vec![0; n];
        weighted_monomials(degrees, 0, p, k, p - 1, &mut current, &mut monomials);
    }
    monomials.sort();
    monomials.dedup();

    let mut out = Vec::new();
    if !monomials.is_empty() {
        let m = monomials.len();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rows: Vec<Vec<Fe>> = Vec::new();
        let mut solution = None;
        for _ in 0..8 {
            for _ in 0..m + 8 {
                let g = a.random_element(&mut rng);
                let mut row: Vec<Fe> = monomials.iter().map(|e| monomial_value(field, e, &g)).collect();
                row.push(eval.eval(&g)?);
                rows.push(row);
            }
            let r = rref(&Matrix::from_rows(field, m + 1, &rows).expect("shape"));
            if r.pivots.contains(&m) {
                return Err(AlgebraError::NoClosedForm);
            }
            if r.rank == m {
                let mut x = vec![field.zero(); m];
                for (row, &col) in r.pivots.iter().enumerate() {
                    x[col] = r.matrix[(row, m)];
                }
                solution = Some(x);
                break;
            }
        }
        let x = solution.ok_or(AlgebraError::NoClosedForm)?;
        for (e, c) in monomials.into_iter().zip(x) {
            if !c.is_zero() {
                out.push(Monomial { coeff: c, exponents: e });
            }
        }
    }
    for (k, v) in omega.basis_values.iter().enumerate() {
        if !v.is_zero() {
            let mut e = vec![0; n];
            e[k] = p;
            out.push(Monomial { coeff: *v, exponents: e });
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let full = OmegaEvaluator::new(a, omega)?;
    for _ in 0..64 {
        let g = a.random_element(&mut rng);
        let poly = out.iter().fold(field.zero(), |acc, t| acc + t.eval(&g));
        if poly != full.eval(&g)? {
            return Err(AlgebraError::NoClosedForm);
        }
    }
    Ok(out)
}

fn monomial_value(field: Field, exponents: &[u32], g: &LieElement) -> Fe {
    exponents
        .iter()
        .enumerate()
        .filter(|(_, e)| **e > 0)
        .fold(field.one(), |acc, (i, e)| acc * g.coeff(i).pow(*e as u64))
}

fn weighted_monomials(
    degrees: &[usize],
    i: usize,
    total: u32,
    weight: usize,
    cap: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if i == degrees.len() {
        if total == 0 && weight == 0 {
            out.push(current.clone());
        }
        return;
    }
    let d = degrees[i];
    let mut e = 0;
    while e <= cap.min(total) && e as usize * d <= weight {
        current[i] = e;
        weighted_monomials(degrees, i + 1, total - e, weight - e as usize * d, cap, current, out);
        e += 1;
    }
    current[i] = 0;
}
