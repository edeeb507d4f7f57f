//! One-dimensional restricted central extensions `E = 𝔤 ⊕ 𝔽c`.
//!
//! A restricted 2-cocycle `(φ, ω)` gives
//!
//! ```text
//! [g, h]_E = [g, h] + φ(g ∧ h) c      [g, c]_E = 0
//! g^[p]_E  = g^[p]  + ω(g) c          c^[p]_E  = 0
//! ```
//!
//! The extension is stored as an ordinary structure-constant algebra whose
//! last basis vector is `c`. Its [p]-map is only tabulated on the basis;
//! everywhere else it comes from Jacobson's formula in `E` itself, so
//! comparing it with the right-hand side above is a real check.

use serde::{Deserialize, Serialize};

use crate::algebra::{LieElement, RestrictedLieAlgebra};
use crate::cochain::Cochain2;
use crate::error::{AlgebraError, ExtensionError};
use crate::field::{small_fraction, Fe};
use crate::restricted::{d2_star, eval_omega, omega_closed_form, Monomial, RestrictedCochain2};

/// Display names of an extension or of its cocycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Label {
    pub name: String,
    pub latex: String,
    /// Definition of a named cochain, e.g. `ξ=e^{2,5}-e^{3,4}`.
    pub definition: Option<String>,
    pub definition_latex: Option<String>,
}

impl Label {
    fn plain(name: String, latex: String) -> Self {
        Self {
            name,
            latex,
            definition: None,
            definition_latex: None,
        }
    }

    fn defined(name: &str, latex: &str, definition: &str, definition_latex: &str) -> Self {
        Self {
            name: name.into(),
            latex: latex.into(),
            definition: Some(definition.into()),
            definition_latex: Some(definition_latex.into()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CentralExtension {
    pub label: Label,
    pub base: RestrictedLieAlgebra,
    pub cocycle: RestrictedCochain2,
    pub total: RestrictedLieAlgebra,
}

impl CentralExtension {
    /// Index of `c` in the total algebra (0-based).
    pub fn c_index(&self) -> usize {
        self.base.dim()
    }

    /// `g ↦ (g, 0)`
    pub fn lift(&self, g: &LieElement) -> LieElement {
        let mut v = g.coeffs().to_vec();
        v.push(self.base.field().zero());
        LieElement::new(v)
    }

    /// `(g, γ) ↦ g`
    pub fn project(&self, x: &LieElement) -> LieElement {
        LieElement::new(x.coeffs()[..self.base.dim()].to_vec())
    }

    /// `g^[p] + ω(g) c` computed in the base.
    pub fn p_power_formula(&self, x: &LieElement) -> Result<LieElement, AlgebraError> {
        let g = self.project(x);
        let mut v = self.base.p_power(&g)?.into_coeffs();
        v.push(eval_omega(&self.base, self.cocycle.omega(), &g)?);
        Ok(LieElement::new(v))
    }

    /// `[g, h] + φ(g ∧ h) c` computed in the base.
    pub fn bracket_formula(&self, x: &LieElement, y: &LieElement) -> Result<LieElement, AlgebraError> {
        let (g, h) = (self.project(x), self.project(y));
        let mut v = self.base.bracket(&g, &h)?.into_coeffs();
        v.push(self.cocycle.phi().eval(&g, &h));
        Ok(LieElement::new(v))
    }
}

/// Builds the extension; `c` must be a restricted cocycle.
pub fn extend(a: &RestrictedLieAlgebra, c: &RestrictedCochain2, label: Label) -> Result<CentralExtension, ExtensionError> {
    let (zeta, eta) = d2_star(a, c);
    if !zeta.is_zero() || !eta.is_zero() {
        return Err(ExtensionError::NotACocycle);
    }
    let n = a.dim();
    let field = a.field();
    let widen = |v: &LieElement, extra: Fe| {
        let mut w = v.coeffs().to_vec();
        w.push(extra);
        LieElement::new(w)
    };
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let base = a.basis_bracket(i, j);
            let twist = c.phi().get(i + 1, j + 1);
            if !base.is_zero() || !twist.is_zero() {
                brackets.push(((i, j), widen(&base, twist)));
            }
        }
    }
    let mut p_map: Vec<LieElement> = a
        .p_map()
        .iter()
        .zip(c.omega().basis_values())
        .map(|(v, w)| widen(v, *w))
        .collect();
    p_map.push(LieElement::zero(field, n + 1));

    let degrees = match (a.degrees(), c.phi().is_zero()) {
        (Some(d), false) => {
            let parts = c.phi().homogeneous_parts(d);
            (parts.len() == 1).then(|| {
                let mut d = d.to_vec();
                d.push(parts[0].0);
                d
            })
        }
        _ => None,
    };
    let total = RestrictedLieAlgebra::new(field, n + 1, brackets, p_map, degrees)?;
    Ok(CentralExtension {
        label,
        base: a.clone(),
        cocycle: c.clone(),
        total,
    })
}

/// The named restricted cocycles `(φ, φ̃)` with `φ ≠ 0` that complete the
/// `(0, ē^k)` to a basis of H²* for m₂^λ(p).
pub fn named_cocycles(a: &RestrictedLieAlgebra) -> Vec<(Label, Cochain2)> {
    let field = a.field();
    let p = a.dim();
    let lambda_zero = a.lambda().is_none_or(|l| l.is_zero());
    let e14 = Label::plain("(e^{1,4},0)".into(), "\\big(e^{1,4},0\\big)".into());
    let eta = || {
        Label::defined("(η,0)", "(\\eta,0)", "η=e^{1,6}+e^{3,4}", "\\eta=e^{1,6}+e^{3,4}")
    };
    let mut out = vec![(e14, Cochain2::basis(field, p, 1, 4))];
    match (p == 5, lambda_zero) {
        (true, true) => {
            let xi = Label::defined("(ξ,~ξ)", "\\big(\\xi,\\tilde\\xi\\big)", "ξ=e^{2,5}-e^{3,4}", "\\xi=e^{2,5}-e^{3,4}");
            out.push((xi, Cochain2::xi(field, p)));
            let phi6 = Label::plain("(φ_6,~φ_6)".into(), "(\\varphi_6,\\tilde\\varphi_6)".into());
            out.push((phi6, Cochain2::phi(field, p, 6)));
        }
        (false, true) => {
            out.push((eta(), Cochain2::eta(field, p)));
            let k = p + 1;
            let top = Label::plain(
                format!("(φ_{k},~φ_{k})"),
                format!("(\\varphi_{{{k}}},\\tilde\\varphi_{{{k}}})"),
            );
            out.push((top, Cochain2::phi(field, p, k)));
        }
        (true, false) => {}
        (false, false) => out.push((eta(), Cochain2::eta(field, p))),
    }
    out
}

/// `E_1, …, E_p` from `(0, ē^k)`, then the extensions of
/// [`named_cocycles`].
pub fn extension_catalog(a: &RestrictedLieAlgebra) -> Result<Vec<CentralExtension>, ExtensionError> {
    let n = a.dim();
    let mut out = Vec::new();
    for k in 1..=n {
        let c = RestrictedCochain2::bar(a.field(), n, k)?;
        out.push(extend(a, &c, Label::plain(format!("E_{k}"), format!("E_{{{k}}}")))?);
    }
    for (label, phi) in named_cocycles(a) {
        out.push(extend(a, &RestrictedCochain2::tilde_pair(phi), label)?);
    }
    Ok(out)
}

/// The first left-nested bracket `[e_{i₁}, …, e_{i_p}]` of basis vectors of
/// the total algebra that is nonzero, with its value. Indices are 1-based;
/// `c` is `n + 1`.
pub fn pfold_bracket_witness(e: &CentralExtension) -> Option<(Vec<usize>, LieElement)> {
    let t = &e.total;
    let p = t.characteristic() as usize;
    let mut seq = Vec::with_capacity(p);
    for i in 0..t.dim() {
        seq.push(i);
        if let Some(v) = witness_from(t, &t.basis(i), 1, p, &mut seq) {
            return Some((seq.iter().map(|i| i + 1).collect(), v));
        }
        seq.pop();
    }
    None
}

fn witness_from(t: &RestrictedLieAlgebra, x: &LieElement, len: usize, p: usize, seq: &mut Vec<usize>) -> Option<LieElement> {
    if len == p {
        return Some(x.clone());
    }
    for j in 0..t.dim() {
        let y = t.bracket(x, &t.basis(j)).expect("dim");
        if y.is_zero() {
            continue;
        }
        seq.push(j);
        if let Some(v) = witness_from(t, &y, len + 1, p, seq) {
            return Some(v);
        }
        seq.pop();
    }
    None
}

/// A bracket-correction term `coeff · (α_i β_j − α_j β_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketTerm {
    pub i: usize,
    pub j: usize,
    pub coeff: String,
}

/// The formulas of one extension in table form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionFormula {
    pub label: Label,
    pub bracket_terms: Vec<BracketTerm>,
    /// Whether `g^[p]` includes the base [p]-map (zero when λ = 0).
    pub base_p_map: bool,
    pub p_terms: Vec<Monomial>,
}

impl ExtensionFormula {
    /// `(α_1β_4-α_4β_1)` style; empty when the bracket is untwisted.
    pub fn bracket_latex(&self) -> String {
        let mut s = String::new();
        for t in &self.bracket_terms {
            let (sign, body) = match t.coeff.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", t.coeff.clone()),
            };
            let c = if body == "1" { String::new() } else { body };
            let pos = format!("{c}\\alpha_{}\\beta_{}", t.i, t.j);
            let neg = format!("{c}\\alpha_{}\\beta_{}", t.j, t.i);
            let (first, second) = if sign == "+" { ("+", "-") } else { ("-", "+") };
            s.push_str(&format!("{first}{pos}{second}{neg}"));
        }
        s.strip_prefix('+').map(str::to_string).unwrap_or(s)
    }

    /// `\alpha_1^{p-1}\alpha_2` style, without the trailing `c`.
    pub fn p_latex(&self) -> String {
        let terms: Vec<String> = self.p_terms.iter().map(|m| m.latex()).collect();
        let mut s = terms.join("+").replace("+-", "-");
        if s.is_empty() && !self.base_p_map {
            s.push('0');
        }
        s
    }
}

/// Formulas for `e`, with the [p]-correction as a polynomial (prime fields).
pub fn describe(e: &CentralExtension) -> Result<ExtensionFormula, AlgebraError> {
    let bracket_terms = e
        .cocycle
        .phi()
        .terms()
        .into_iter()
        .map(|(i, j, c)| BracketTerm {
            i,
            j,
            coeff: fraction_string(c),
        })
        .collect();
    let base_p_map = e.base.p_map().iter().any(|v| !v.is_zero());
    Ok(ExtensionFormula {
        label: e.label.clone(),
        bracket_terms,
        base_p_map,
        p_terms: omega_closed_form(&e.base, e.cocycle.omega(), 1)?,
    })
}

pub(crate) fn fraction_string(c: Fe) -> String {
    match small_fraction(c) {
        Some((n, 1)) => n.to_string(),
        Some((n, d)) => format!("{n}/{d}"),
        None => c.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_m2, verify_restricted, LambdaVector};
    use crate::cochain::Cochain1;
    use crate::field::Field;
    use crate::restricted::d1_star;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn m2(p: u64, lambda: &[i64]) -> RestrictedLieAlgebra {
        let f = Field::prime(p).unwrap();
        let l = if lambda.is_empty() {
            LambdaVector::zero(f)
        } else {
            LambdaVector::new(lambda.iter().map(|&x| f.int(x)).collect())
        };
        make_m2(f, l).unwrap()
    }

    #[test]
    fn non_cocycles_are_rejected() {
        let a = m2(5, &[]);
        let c = RestrictedCochain2::tilde_pair(Cochain2::basis(a.field(), 5, 3, 4));
        assert_eq!(extend(&a, &c, Label::plain("x".into(), "x".into())).unwrap_err(), ExtensionError::NotACocycle);
        let b = m2(5, &[1, 0, 0, 0, 0]);
        let c = RestrictedCochain2::tilde_pair(Cochain2::phi(b.field(), 5, 6));
        assert_eq!(extend(&b, &c, Label::plain("x".into(), "x".into())).unwrap_err(), ExtensionError::NotACocycle);
    }

    #[test]
    fn formulas_hold_in_the_total_algebra() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for (p, l) in [(5u64, vec![]), (7, vec![]), (5, vec![1, 2, 0, 0, 3]), (7, vec![0, 0, 0, 0, 0, 0, 1])] {
            let a = m2(p, &l);
            for e in extension_catalog(&a).unwrap() {
                let c = e.total.basis(e.c_index());
                assert!(e.total.p_power(&c).unwrap().is_zero());
                for _ in 0..10 {
                    let x = e.total.random_element(&mut rng);
                    let y = e.total.random_element(&mut rng);
                    assert!(e.total.bracket(&x, &c).unwrap().is_zero());
                    assert_eq!(e.total.bracket(&x, &y).unwrap(), e.bracket_formula(&x, &y).unwrap());
                    assert_eq!(e.total.p_power(&x).unwrap(), e.p_power_formula(&x).unwrap(), "{}", e.label.name);
                }
            }
        }
    }

    #[test]
    fn bar_extension_only_changes_the_p_map() {
        let a = m2(5, &[1, 0, 0, 0, 0]);
        let e = &extension_catalog(&a).unwrap()[2];
        assert_eq!(e.label.name, "E_3");
        let f = a.field();
        let g = LieElement::new((1..=5).map(|k| f.int(k)).collect());
        let lifted = e.lift(&g);
        let mut expected = a.p_power(&g).unwrap().into_coeffs();
        expected.push(f.int(3).frobenius());
        assert_eq!(e.total.p_power(&lifted).unwrap().into_coeffs(), expected);
        assert!(pfold_bracket_witness(e).is_none());
    }

    #[test]
    fn catalog_passes_the_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for (p, l) in [(5u64, vec![]), (7, vec![]), (5, vec![0, 0, 0, 0, 1]), (7, vec![1, 0, 0, 0, 0, 0, 0])] {
            let a = m2(p, &l);
            let catalog = extension_catalog(&a).unwrap();
            let zero = l.is_empty();
            let expected = crate::cohomology::expected_dimensions(p as usize, zero).h2_star;
            assert_eq!(catalog.len(), expected);
            for e in &catalog {
                let r = verify_restricted(&e.total, 8, &mut rng);
                assert!(r.all_passed(), "{} {:?}", e.label.name, r);
            }
        }
    }

    #[test]
    fn witnesses() {
        for p in [5u64, 7] {
            let a = m2(p, &[]);
            let catalog = extension_catalog(&a).unwrap();
            let top = catalog.last().unwrap();
            let (seq, v) = pfold_bracket_witness(top).unwrap();
            assert_eq!(seq.len(), p as usize);
            assert!(!v.is_zero());
            assert!(v.coeffs()[..p as usize].iter().all(|x| x.is_zero()));
            assert!(pfold_bracket_witness(&catalog[p as usize]).is_none(), "(e^{{1,4}},0)");

            let f = a.field();
            let mut seq = vec![2];
            seq.extend(std::iter::repeat_n(1, p as usize - 1));
            let elems: Vec<LieElement> = seq.iter().map(|&k| top.total.basis(k - 1)).collect();
            let v = top.total.nfold_bracket(&elems).unwrap();
            assert!(!v.coeff(p as usize).is_zero());
            assert_eq!(v.coeffs()[..p as usize], vec![f.zero(); p as usize][..]);
        }
    }

    #[test]
    fn cohomologous_cocycles_give_isomorphic_extensions() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for (p, l) in [(5u64, vec![]), (7, vec![]), (7, vec![1, 0, 3, 0, 0, 0, 2])] {
            let a = m2(p, &l);
            let n = a.dim();
            let f = a.field();
            for e in extension_catalog(&a).unwrap() {
                let psi = Cochain1::from_coeffs(f, (0..n).map(|_| f.random(&mut rng)).collect());
                let shift = d1_star(&a, &psi).coordinates();
                let coords: Vec<Fe> = e.cocycle.coordinates().iter().zip(&shift).map(|(x, y)| *x + *y).collect();
                let c2 = RestrictedCochain2::from_coordinates(f, n, &coords).unwrap();
                let e2 = extend(&a, &c2, e.label.clone()).unwrap();
                let map = |x: &LieElement| {
                    let mut v = x.coeffs().to_vec();
                    v[n] += psi.eval(&e.project(x));
                    LieElement::new(v)
                };
                for _ in 0..6 {
                    let x = e.total.random_element(&mut rng);
                    let y = e.total.random_element(&mut rng);
                    assert_eq!(map(&e.total.bracket(&x, &y).unwrap()), e2.total.bracket(&map(&x), &map(&y)).unwrap());
                    assert_eq!(map(&e.total.p_power(&x).unwrap()), e2.total.p_power(&map(&x)).unwrap());
                }
            }
        }
    }

    #[test]
    fn table_formulas() {
        let a = m2(5, &[]);
        let catalog = extension_catalog(&a).unwrap();
        let xi = describe(&catalog[6]).unwrap();
        assert_eq!(xi.bracket_latex(), "\\alpha_2\\beta_5-\\alpha_5\\beta_2-\\alpha_3\\beta_4+\\alpha_4\\beta_3");
        assert_eq!(xi.p_latex(), "\\frac{1}{2}\\alpha_1^3\\alpha_2^2");
        let phi6 = describe(&catalog[7]).unwrap();
        assert_eq!(phi6.bracket_latex(), "\\alpha_1\\beta_5-\\alpha_5\\beta_1+\\alpha_2\\beta_4-\\alpha_4\\beta_2");
        assert_eq!(phi6.p_latex(), "\\alpha_1^4\\alpha_2");
        let e14 = describe(&catalog[5]).unwrap();
        assert_eq!(e14.p_latex(), "0");

        let b = m2(7, &[0, 0, 0, 0, 0, 0, 1]);
        let catalog = extension_catalog(&b).unwrap();
        let eta = describe(&catalog[8]).unwrap();
        assert!(eta.base_p_map && eta.p_terms.is_empty());
        assert_eq!(eta.bracket_latex(), "\\alpha_1\\beta_6-\\alpha_6\\beta_1+\\alpha_3\\beta_4-\\alpha_4\\beta_3");
    }
}
