//! H¹, H¹*, H², H²* as kernel modulo image, with representative bases.
//!
//! Ordinary cochains use the coordinates of [`crate::cochain`]; restricted
//! 2-cochains use `(σ_{ij}; ω(e₁), …, ω(e_n))` as in [`crate::restricted`].
//! Representatives are the kernel basis vectors (free columns of the reduced
//! matrix, ascending) that are new modulo the coboundaries and the earlier
//! representatives.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::RestrictedLieAlgebra;
use crate::cochain::{c2_dim, d1_matrix, d2_matrix, grade_range, graded_block, pairs, Cochain1, Cochain2};
use crate::error::CohomologyError;
use crate::field::Fe;
use crate::linalg::{complement_representatives, image_basis, kernel_basis, Echelon, Subspace};
use crate::restricted::{d1_star_matrix, d2_star_matrix};

#[derive(Clone, Debug)]
pub struct CohomologyResult {
    pub degree: usize,
    pub restricted: bool,
    pub dimension: usize,
    pub representatives: Vec<Vec<Fe>>,
    pub kernel: Subspace,
    pub coboundaries: Subspace,
    /// Grade `k` ↦ dim of the grade-`k` part of the cocycles (H² only).
    pub grade_table: Option<BTreeMap<usize, usize>>,
}

impl CohomologyResult {
    fn build(
        degree: usize,
        restricted: bool,
        kernel: Subspace,
        coboundaries: Subspace,
        grade_table: Option<BTreeMap<usize, usize>>,
    ) -> Result<Self, CohomologyError> {
        let representatives = complement_representatives(&kernel, &coboundaries)?;
        Ok(Self {
            degree,
            restricted,
            dimension: kernel.dim() - coboundaries.dim(),
            representatives,
            kernel,
            coboundaries,
            grade_table,
        })
    }

    /// Representatives written out in cochain notation.
    pub fn describe(&self, n: usize) -> Vec<String> {
        self.representatives.iter().map(|v| describe_vector(self.degree, self.restricted, n, v)).collect()
    }
}

/// `v` in cochain notation: `e^k`, `e^{i,j}`, or for restricted 2-cochains
/// `(e^{i,j},~e^{i,j})` and `(0,ē^k)`.
pub fn describe_vector(degree: usize, restricted: bool, n: usize, v: &[Fe]) -> String {
    let field = v[0].field();
    match (degree, restricted) {
        (1, _) => Cochain1::from_coeffs(field, v.to_vec()).to_string(),
        (_, false) => Cochain2::from_coeffs(field, n, v.to_vec()).to_string(),
        _ => {
            let names = pairs(n)
                .into_iter()
                .map(|(i, j)| format!("(e^{{{i},{j}}},~e^{{{i},{j}}})"))
                .chain((1..=n).map(|k| format!("(0,ē^{k})")));
            let mut s = String::new();
            for (name, c) in names.zip(v) {
                if c.is_zero() {
                    continue;
                }
                if !s.is_empty() {
                    s.push_str(" + ");
                }
                if c.is_one() {
                    s.push_str(&name);
                } else {
                    let _ = write!(s, "({c}){name}");
                }
            }
            if s.is_empty() {
                s.push('0');
            }
            s
        }
    }
}

/// H¹ = ker d¹ (d⁰ = 0).
pub fn h1(a: &RestrictedLieAlgebra) -> Result<CohomologyResult, CohomologyError> {
    let kernel = kernel_basis(&d1_matrix(a));
    CohomologyResult::build(1, false, kernel, Subspace::zero(a.field(), a.dim()), None)
}

/// H¹* = ker d¹*.
pub fn h1_star(a: &RestrictedLieAlgebra) -> Result<CohomologyResult, CohomologyError> {
    let kernel = kernel_basis(&d1_star_matrix(a));
    CohomologyResult::build(1, true, kernel, Subspace::zero(a.field(), a.dim()), None)
}

/// H² = ker d² / im d¹, with the per-grade kernel dimensions.
pub fn h2(a: &RestrictedLieAlgebra) -> Result<CohomologyResult, CohomologyError> {
    let d2 = d2_matrix(a);
    let kernel = kernel_basis(&d2);
    let image = image_basis(&d1_matrix(a));
    let grade_table = match grade_range(a, 2) {
        Some((lo, hi)) => {
            let mut t = BTreeMap::new();
            for k in lo..=hi {
                let block = graded_block(a, &d2, 2, k);
                t.insert(k, block.matrix.cols() - block.matrix.rank());
            }
            Some(t)
        }
        None => None,
    };
    CohomologyResult::build(2, false, kernel, image, grade_table)
}

/// H²* = ker d²* / im d¹* on restricted coordinates.
pub fn h2_star(a: &RestrictedLieAlgebra) -> Result<CohomologyResult, CohomologyError> {
    let kernel = kernel_basis(&d2_star_matrix(a));
    let image = image_basis(&d1_star_matrix(a));
    CohomologyResult::build(2, true, kernel, image, None)
}

/// The dimensions the theory predicts for m₂^λ(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedDimensions {
    pub h1: usize,
    pub h1_star: usize,
    pub h2: usize,
    pub h2_star: usize,
}

pub fn expected_dimensions(p: usize, lambda_is_zero: bool) -> ExpectedDimensions {
    let h2_star = match (p == 5, lambda_is_zero) {
        (true, true) => 8,
        (true, false) => 6,
        (false, true) => p + 3,
        (false, false) => p + 2,
    };
    ExpectedDimensions {
        h1: 2,
        h1_star: 2,
        h2: 3,
        h2_star,
    }
}

/// Kernel dimensions of d² by grade, k = 3…2p−1, as predicted for m₂^λ(p).
pub fn expected_grade_table(p: usize) -> BTreeMap<usize, usize> {
    (3..2 * p).map(|k| (k, expected_grade_dim(p, k))).collect()
}

fn expected_grade_dim(p: usize, k: usize) -> usize {
    match k {
        3 | 4 | 6 => 1,
        5 => 2,
        7 if p == 5 => 1,
        7 => 2,
        k if k <= p + 1 => 1,
        _ => 0,
    }
}

/// Outcome of checking a proposed basis of a cohomology group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub claim: String,
    pub names: Vec<String>,
    /// Per element: lies in the kernel.
    pub cocycles: Vec<bool>,
    /// Independent modulo coboundaries.
    pub independent: bool,
    /// Together with the coboundaries, spans the kernel.
    pub spans: bool,
}

impl BasisReport {
    pub fn passed(&self) -> bool {
        self.cocycles.iter().all(|c| *c) && self.independent && self.spans
    }
}

/// Checks `vectors` against `result`.
pub fn verify_basis(
    result: &CohomologyResult,
    claim: &str,
    names: Vec<String>,
    vectors: &[Vec<Fe>],
) -> Result<BasisReport, CohomologyError> {
    let mut cocycles = Vec::with_capacity(vectors.len());
    for v in vectors {
        cocycles.push(result.kernel.contains(v)?);
    }
    let mut ech = Echelon::new(result.kernel.ambient_dim());
    for b in result.coboundaries.basis() {
        ech.insert(b);
    }
    let mut independent = true;
    for v in vectors {
        if ech.insert(v).is_none() {
            independent = false;
        }
    }
    let spans = result.kernel.basis().iter().all(|b| ech.contains(b));
    Ok(BasisReport {
        claim: claim.to_string(),
        names,
        cocycles,
        independent,
        spans,
    })
}

/// A named cocycle together with its coordinates.
#[derive(Clone, Debug)]
pub struct NamedCocycle {
    pub name: String,
    pub coordinates: Vec<Fe>,
}

/// The built-in basis claims: `h1`, `h1_star`, `h2`, `h2_star`, chosen by
/// `p` and by whether λ vanishes.
pub fn claimed_basis(a: &RestrictedLieAlgebra, claim: &str) -> Result<Vec<NamedCocycle>, CohomologyError> {
    let field = a.field();
    let n = a.dim();
    let p = n;
    let lambda_zero = a.lambda().is_none_or(|l| l.is_zero());
    let c2 = |name: &str, phi: Cochain2| NamedCocycle {
        name: name.to_string(),
        coordinates: phi.into_coeffs(),
    };
    let star = |name: &str, phi: Cochain2| {
        let mut v = phi.into_coeffs();
        v.extend(std::iter::repeat_n(field.zero(), n));
        NamedCocycle {
            name: name.to_string(),
            coordinates: v,
        }
    };
    let e = |i, j| Cochain2::basis(field, n, i, j);
    Ok(match claim {
        "h1" | "h1_star" => (1..=2)
            .map(|k| NamedCocycle {
                name: format!("e^{k}"),
                coordinates: Cochain1::basis(field, n, k).coeffs().to_vec(),
            })
            .collect(),
        "h2" if p == 5 => vec![
            c2("e^{1,4}", e(1, 4)),
            c2("e^{1,5}+e^{2,4}", &e(1, 5) + &e(2, 4)),
            c2("e^{2,5}-e^{3,4}", Cochain2::xi(field, n)),
        ],
        "h2" => vec![
            c2("e^{1,4}", e(1, 4)),
            c2("e^{1,6}+e^{3,4}", Cochain2::eta(field, n)),
            c2(&format!("e^{{1,{p}}}+e^{{2,{}}}", p - 1), &e(1, p) + &e(2, p - 1)),
        ],
        "h2_star" => {
            let mut v: Vec<NamedCocycle> = (1..=n)
                .map(|k| {
                    let mut c = vec![field.zero(); c2_dim(n) + n];
                    c[c2_dim(n) + k - 1] = field.one();
                    NamedCocycle {
                        name: format!("(0,ē^{k})"),
                        coordinates: c,
                    }
                })
                .collect();
            v.push(star("(e^{1,4},~e^{1,4})", e(1, 4)));
            match (p == 5, lambda_zero) {
                (true, true) => {
                    v.push(star("(φ_6,~φ_6)", Cochain2::phi(field, n, 6)));
                    v.push(star("(ξ,~ξ)", Cochain2::xi(field, n)));
                }
                (false, true) => {
                    v.push(star("(η,~η)", Cochain2::eta(field, n)));
                    v.push(star(&format!("(φ_{},~φ_{})", p + 1, p + 1), Cochain2::phi(field, n, p + 1)));
                }
                (true, false) => {}
                (false, false) => v.push(star("(η,~η)", Cochain2::eta(field, n))),
            }
            v
        }
        other => return Err(CohomologyError::UnknownClaim(other.to_string())),
    })
}

/// Checks one of the built-in claims (see [`claimed_basis`]).
pub fn verify_claimed_basis(a: &RestrictedLieAlgebra, claim: &str) -> Result<BasisReport, CohomologyError> {
    let basis = claimed_basis(a, claim)?;
    let result = match claim {
        "h1" => h1(a)?,
        "h1_star" => h1_star(a)?,
        "h2" => h2(a)?,
        _ => h2_star(a)?,
    };
    let names = basis.iter().map(|b| b.name.clone()).collect();
    let vectors: Vec<Vec<Fe>> = basis.into_iter().map(|b| b.coordinates).collect();
    verify_basis(&result, claim, names, &vectors)
}
