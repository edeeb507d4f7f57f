//! Run configuration, report documents and the `verify`, `cohomology`,
//! `extensions` and `iso` commands. The binary only parses arguments and
//! prints what these functions return.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{iso_classify, make_m2, verify_restricted, AxiomCheck, AxiomReport, LambdaVector, RestrictedLieAlgebra};
use crate::cochain::{c2_dim, d1_closed, d1_generic, d1_matrix, d2_closed, d2_generic, d2_matrix, pairs, Cochain1, Cochain2};
use crate::cohomology::{
    expected_dimensions, expected_grade_table, h1, h1_star, h2, h2_star, verify_claimed_basis, BasisReport, CohomologyResult,
};
use crate::error::{AlgebraError, CohomologyError, ExtensionError, FieldError};
use crate::extensions::{describe, extension_catalog, pfold_bracket_witness, BracketTerm, CentralExtension, Label};
use crate::field::{Field, QuadraticModulus};
use crate::restricted::{d1_star_matrix, d2_star_matrix};

/// Random samples per axiom check.
pub const AXIOM_SAMPLES: usize = 16;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{p} exceeds the maximum prime {max} (raise it with --max-prime)")]
    PrimeTooLarge { p: u64, max: u64 },
    #[error("cannot parse lambda {0:?}: expected zero, random:SEED or a comma-separated list")]
    Lambda(String),
    #[error("cannot parse field extension {0:?}: expected \"c0,c1\"")]
    FieldExt(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaSpec {
    Zero,
    /// λ drawn from ChaCha8 seeded with the value, one field element per slot.
    Random(u64),
    List(String),
}

impl LambdaSpec {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let t = text.trim();
        if t == "zero" {
            return Ok(Self::Zero);
        }
        if let Some(seed) = t.strip_prefix("random:") {
            return seed.trim().parse().map(Self::Random).map_err(|_| InputError::Lambda(text.to_string()));
        }
        if t.is_empty() {
            return Err(InputError::Lambda(text.to_string()));
        }
        Ok(Self::List(t.to_string()))
    }

    pub fn resolve(&self, field: Field) -> Result<LambdaVector, InputError> {
        Ok(match self {
            Self::Zero => LambdaVector::zero(field),
            Self::Random(seed) => LambdaVector::random(field, &mut ChaCha8Rng::seed_from_u64(*seed)),
            Self::List(s) => LambdaVector::parse(field, s)?,
        })
    }
}

pub fn parse_field_ext(text: &str) -> Result<QuadraticModulus, InputError> {
    let bad = || InputError::FieldExt(text.to_string());
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(bad());
    }
    let c0 = parts[0].parse().map_err(|_| bad())?;
    let c1 = parts[1].parse().map_err(|_| bad())?;
    Ok(QuadraticModulus { c0, c1 })
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub field: Field,
    pub lambda: LambdaVector,
    pub seed: u64,
    /// Doubles `[e₁, e₃]`; used to check that verification can fail.
    pub tamper: bool,
}

impl RunConfig {
    pub fn new(
        p: u64,
        lambda: &LambdaSpec,
        field_ext: Option<QuadraticModulus>,
        max_prime: u64,
        seed: u64,
    ) -> Result<Self, InputError> {
        let field = Field::new(p, field_ext)?;
        if p > max_prime {
            return Err(InputError::PrimeTooLarge { p, max: max_prime });
        }
        if p < 5 {
            return Err(AlgebraError::CharTooSmall(p).into());
        }
        let lambda = lambda.resolve(field)?;
        Ok(Self {
            field,
            lambda,
            seed,
            tamper: false,
        })
    }

    pub fn p(&self) -> usize {
        self.field.characteristic() as usize
    }

    pub fn algebra(&self) -> Result<RestrictedLieAlgebra, AlgebraError> {
        let a = make_m2(self.field, self.lambda.clone())?;
        if self.tamper {
            Ok(tampered(&a)?)
        } else {
            Ok(a)
        }
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

fn tampered(a: &RestrictedLieAlgebra) -> Result<RestrictedLieAlgebra, AlgebraError> {
    let mut brackets = a.structure_constants().clone();
    if let Some(v) = brackets.get_mut(&(0, 2)) {
        *v = v.scale(a.field().int(2));
    }
    RestrictedLieAlgebra::new(a.field(), a.dim(), brackets, a.p_map().to_vec(), a.degrees().map(<[usize]>::to_vec))
}

/// The report document; the JSON form is `{p, lambda, results}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub p: usize,
    pub field: String,
    pub lambda: Vec<String>,
    pub results: Results,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Results {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h1: Option<GroupReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h1_star: Option<GroupReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h2: Option<GroupReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h2_star: Option<GroupReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extensions: Option<Vec<ExtensionReport>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifyReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iso: Option<IsoReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub dimension: usize,
    pub expected_dimension: usize,
    pub kernel_dimension: usize,
    pub coboundary_dimension: usize,
    pub representatives: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grade_table: Option<BTreeMap<usize, usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_grade_table: Option<BTreeMap<usize, usize>>,
    pub claimed_basis: BasisReport,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PTerm {
    pub coeff: String,
    pub exponents: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionReport {
    pub label: Label,
    pub bracket_terms: Vec<BracketTerm>,
    pub base_p_map: bool,
    /// The [p]-correction `ω(g)` as a polynomial; absent over GF(p²).
    pub p_terms: Option<Vec<PTerm>>,
    pub bracket_latex: String,
    pub p_latex: Option<String>,
    pub axioms: AxiomReport,
    /// The [p]-map computed in the extension agrees with `g^[p] + ω(g)c`.
    pub p_formula_holds: bool,
    pub c_central: bool,
    pub c_p_zero: bool,
    /// 1-based basis indices of a nonzero p-fold bracket (`c` is `p + 1`).
    pub pfold_witness: Option<Vec<usize>>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub axioms: AxiomReport,
    pub cross_checks: Vec<AxiomCheck>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoReport {
    pub lambda: Vec<String>,
    pub lambda_prime: Vec<String>,
    pub isomorphic: bool,
    pub mu: Option<String>,
}

impl Report {
    fn new(cfg: &RunConfig) -> Self {
        Self {
            p: cfg.p(),
            field: cfg.field.to_string(),
            lambda: cfg.lambda.values().iter().map(|x| x.to_string()).collect(),
            results: Results::default(),
        }
    }

    /// Whether every check in the report passed.
    pub fn passed(&self) -> bool {
        let r = &self.results;
        [&r.h1, &r.h1_star, &r.h2, &r.h2_star].iter().all(|g| g.as_ref().is_none_or(|g| g.passed))
            && r.extensions.as_ref().is_none_or(|e| e.iter().all(|x| x.passed))
            && r.verify.as_ref().is_none_or(|v| v.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

fn check(name: &str, cases: usize, ok: bool, detail: &str) -> AxiomCheck {
    AxiomCheck {
        name: name.to_string(),
        passed: ok,
        cases,
        detail: (!ok).then(|| detail.to_string()),
    }
}

/// Closed-form vs generic differentials and the complex properties, on full bases.
pub fn cross_checks(a: &RestrictedLieAlgebra) -> Vec<AxiomCheck> {
    let n = a.dim();
    let f = a.field();
    let d1_ok = (1..=n).all(|k| {
        let psi = Cochain1::basis(f, n, k);
        d1_generic(a, &psi) == d1_closed(n, &psi)
    });
    let d2_ok = pairs(n).into_iter().all(|(i, j)| {
        let phi = Cochain2::basis(f, n, i, j);
        d2_generic(a, &phi) == d2_closed(n, &phi)
    });
    let dd = d2_matrix(a).mul(&d1_matrix(a)).expect("shapes").is_zero();
    let dd_star = d2_star_matrix(a).mul(&d1_star_matrix(a)).expect("shapes").is_zero();
    vec![
        check("d1_closed_equals_generic", n, d1_ok, "closed d1 differs"),
        check("d2_closed_equals_generic", c2_dim(n), d2_ok, "closed d2 differs"),
        check("d2_d1_zero", n, dd, "d2 d1 != 0"),
        check("d2star_d1star_zero", n, dd_star, "d2* d1* != 0"),
    ]
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Report, RunError> {
    let a = cfg.algebra()?;
    let mut rng = cfg.rng();
    let axioms = verify_restricted(&a, AXIOM_SAMPLES, &mut rng);
    let cross = cross_checks(&a);
    let passed = axioms.all_passed() && cross.iter().all(|c| c.passed);
    let mut r = Report::new(cfg);
    r.results.verify = Some(VerifyReport {
        axioms,
        cross_checks: cross,
        passed,
    });
    Ok(r)
}

fn group_report(a: &RestrictedLieAlgebra, result: &CohomologyResult, claim: &str, expected: usize) -> Result<GroupReport, RunError> {
    let basis = verify_claimed_basis(a, claim)?;
    let expected_grade_table = result.grade_table.as_ref().map(|_| expected_grade_table(a.dim()));
    let passed = result.dimension == expected && basis.passed() && result.grade_table == expected_grade_table;
    Ok(GroupReport {
        dimension: result.dimension,
        expected_dimension: expected,
        kernel_dimension: result.kernel.dim(),
        coboundary_dimension: result.coboundaries.dim(),
        representatives: result.describe(a.dim()),
        grade_table: result.grade_table.clone(),
        expected_grade_table,
        claimed_basis: basis,
        passed,
    })
}

pub fn cmd_cohomology(cfg: &RunConfig) -> Result<Report, RunError> {
    let a = cfg.algebra()?;
    let e = expected_dimensions(cfg.p(), cfg.lambda.is_zero());
    let mut r = Report::new(cfg);
    r.results.h1 = Some(group_report(&a, &h1(&a)?, "h1", e.h1)?);
    r.results.h1_star = Some(group_report(&a, &h1_star(&a)?, "h1_star", e.h1_star)?);
    r.results.h2 = Some(group_report(&a, &h2(&a)?, "h2", e.h2)?);
    r.results.h2_star = Some(group_report(&a, &h2_star(&a)?, "h2_star", e.h2_star)?);
    Ok(r)
}

fn extension_report(e: &CentralExtension, rng: &mut ChaCha8Rng) -> Result<ExtensionReport, RunError> {
    let t = &e.total;
    let axioms = verify_restricted(t, AXIOM_SAMPLES, rng);
    let mut p_formula_holds = true;
    for _ in 0..AXIOM_SAMPLES {
        let x = t.random_element(rng);
        if t.p_power(&x)? != e.p_power_formula(&x)? {
            p_formula_holds = false;
        }
    }
    let c = t.basis(e.c_index());
    let c_central = (0..t.dim()).all(|i| t.basis_bracket(i, e.c_index()).is_zero());
    let c_p_zero = t.p_power(&c)?.is_zero();
    let formula = match describe(e) {
        Ok(f) => Some(f),
        Err(AlgebraError::NotPrimeField) => None,
        Err(err) => return Err(err.into()),
    };
    let bracket_terms = e
        .cocycle
        .phi()
        .terms()
        .into_iter()
        .map(|(i, j, c)| BracketTerm {
            i,
            j,
            coeff: crate::extensions::fraction_string(c),
        })
        .collect();
    let base_p_map = e.base.p_map().iter().any(|v| !v.is_zero());
    let passed = axioms.all_passed() && p_formula_holds && c_central && c_p_zero;
    Ok(ExtensionReport {
        label: e.label.clone(),
        bracket_terms,
        base_p_map,
        p_terms: formula.as_ref().map(|f| {
            f.p_terms
                .iter()
                .map(|m| PTerm {
                    coeff: crate::extensions::fraction_string(m.coeff),
                    exponents: m.exponents.clone(),
                })
                .collect()
        }),
        bracket_latex: formula.as_ref().map(|f| f.bracket_latex()).unwrap_or_default(),
        p_latex: formula.as_ref().map(|f| f.p_latex()),
        axioms,
        p_formula_holds,
        c_central,
        c_p_zero,
        pfold_witness: pfold_bracket_witness(e).map(|(s, _)| s),
        passed,
    })
}

pub fn cmd_extensions(cfg: &RunConfig) -> Result<Report, RunError> {
    let a = cfg.algebra()?;
    let mut rng = cfg.rng();
    let catalog = extension_catalog(&a)?;
    let reports = catalog.iter().map(|e| extension_report(e, &mut rng)).collect::<Result<Vec<_>, _>>()?;
    let mut r = Report::new(cfg);
    r.results.extensions = Some(reports);
    Ok(r)
}

pub fn cmd_iso(cfg: &RunConfig, lambda_prime: &LambdaVector) -> Report {
    let mu = iso_classify(&cfg.lambda, lambda_prime);
    let mut r = Report::new(cfg);
    r.results.iso = Some(IsoReport {
        lambda: cfg.lambda.values().iter().map(|x| x.to_string()).collect(),
        lambda_prime: lambda_prime.values().iter().map(|x| x.to_string()).collect(),
        isomorphic: mu.is_some(),
        mu: mu.map(|m| m.to_string()),
    });
    r
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

/// Human-readable rendering.
pub fn render_text(r: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "m2^lambda({}) over {}, lambda = ({})", r.p, r.field, r.lambda.join(","));
    let groups = [("H^1", &r.results.h1), ("H^1*", &r.results.h1_star), ("H^2", &r.results.h2), ("H^2*", &r.results.h2_star)];
    for (name, g) in groups {
        let Some(g) = g else { continue };
        let _ = writeln!(
            s,
            "{name}: dim {} (expected {}; kernel {}, coboundaries {}) [{}]",
            g.dimension,
            g.expected_dimension,
            g.kernel_dimension,
            g.coboundary_dimension,
            verdict(g.passed)
        );
        for rep in &g.representatives {
            let _ = writeln!(s, "  rep {rep}");
        }
        let _ = writeln!(
            s,
            "  claimed basis {{{}}}: cocycles {}, independent {}, spans {}",
            g.claimed_basis.names.join(", "),
            verdict(g.claimed_basis.cocycles.iter().all(|c| *c)),
            verdict(g.claimed_basis.independent),
            verdict(g.claimed_basis.spans)
        );
        if let Some(t) = &g.grade_table {
            let cells: Vec<String> = t.iter().map(|(k, d)| format!("{k}:{d}")).collect();
            let _ = writeln!(s, "  ker d2 by grade: {}", cells.join(" "));
        }
    }
    if let Some(v) = &r.results.verify {
        for c in v.axioms.checks.iter().chain(&v.cross_checks) {
            let _ = write!(s, "{}: {} ({} cases)", c.name, verdict(c.passed), c.cases);
            if let Some(d) = &c.detail {
                let _ = write!(s, " {d}");
            }
            s.push('\n');
        }
    }
    if let Some(exts) = &r.results.extensions {
        for e in exts {
            let _ = writeln!(s, "{} [{}]", e.label.name, verdict(e.passed));
            if let Some(d) = &e.label.definition {
                let _ = writeln!(s, "  {d}");
            }
            if !e.bracket_latex.is_empty() {
                let _ = writeln!(s, "  [g,h] = [g,h] + ({})c", e.bracket_latex);
            }
            let _ = writeln!(s, "  g^[p] = {}", text_p_rule(e));
            if let Some(w) = &e.pfold_witness {
                let idx: Vec<String> = w.iter().map(|i| i.to_string()).collect();
                let _ = writeln!(s, "  nonzero p-fold bracket on basis indices [{}]", idx.join(","));
            }
        }
    }
    if let Some(i) = &r.results.iso {
        match &i.mu {
            Some(mu) => {
                let _ = writeln!(s, "isomorphic: mu = {mu}");
            }
            None => {
                let _ = writeln!(s, "not isomorphic");
            }
        }
    }
    s
}

fn text_p_rule(e: &ExtensionReport) -> String {
    let base = if e.base_p_map { "g^[p]_base" } else { "" };
    match &e.p_latex {
        Some(p) if p != "0" && !p.is_empty() => {
            if base.is_empty() {
                format!("({p})c")
            } else {
                format!("{base} + ({p})c")
            }
        }
        Some(_) if !base.is_empty() => base.to_string(),
        Some(_) => "0".to_string(),
        None => format!("{} + omega(g)c", if base.is_empty() { "0" } else { base }),
    }
}

const BASE_BRACKET: &str = "[g,h]_{\\mathfrak m_2^\\lambda(p)}";
const BASE_P: &str = "g^{[p]_{\\mathfrak m_2^\\lambda(p)}}";

/// LaTeX rendering: cohomology as a small tabular, extensions with `φ ≠ 0`
/// in the two-column layout of the extension tables.
pub fn render_latex(r: &Report) -> String {
    let mut s = String::new();
    let groups = [("H^1", &r.results.h1), ("H^1_*", &r.results.h1_star), ("H^2", &r.results.h2), ("H^2_*", &r.results.h2_star)];
    if groups.iter().any(|(_, g)| g.is_some()) {
        s.push_str("\\begin{tabular}{|l|r|}\n\\hline\n");
        for (name, g) in groups {
            if let Some(g) = g {
                let _ = writeln!(s, "${name}$ & {}\\\\", g.dimension);
            }
        }
        s.push_str("\\hline\n\\end{tabular}\n");
    }
    if let Some(exts) = &r.results.extensions {
        let p_label = if r.p == 5 { "p=5".to_string() } else { format!("p={}", r.p) };
        s.push_str("\\begin{tabular}{|l|l|}\n\\hline\n");
        let _ = writeln!(s, "\\multicolumn{{2}}{{|c|}}{{${p_label}$}}\\\\");
        s.push_str("\\hline\n");
        for e in exts.iter().filter(|e| !e.bracket_terms.is_empty()) {
            let _ = writeln!(s, "${}$ &", e.label.latex);
            let _ = writeln!(s, " $[g,h]={BASE_BRACKET}+({}) c$\\\\", e.bracket_latex);
            let def = e.label.definition_latex.as_ref().map(|d| format!("${d}$")).unwrap_or_default();
            let _ = writeln!(s, "{def} & $g^{{[p]}} = {}$\\\\", latex_p_rule(e));
            s.push_str("\\hline\n");
        }
        s.push_str("\\end{tabular}\n");
    }
    if let Some(i) = &r.results.iso {
        let _ = writeln!(
            s,
            "$\\lambda=({})$, $\\lambda'=({})$: {}",
            i.lambda.join(","),
            i.lambda_prime.join(","),
            i.mu.as_ref().map_or("not isomorphic".to_string(), |m| format!("$\\mu={m}$"))
        );
    }
    if let Some(v) = &r.results.verify {
        s.push_str("\\begin{tabular}{|l|l|}\n\\hline\n");
        for c in v.axioms.checks.iter().chain(&v.cross_checks) {
            let _ = writeln!(s, "\\texttt{{{}}} & {}\\\\", c.name.replace('_', "\\_"), verdict(c.passed));
        }
        s.push_str("\\hline\n\\end{tabular}\n");
    }
    s
}

fn latex_p_rule(e: &ExtensionReport) -> String {
    let poly = e.p_latex.clone().unwrap_or_else(|| "\\omega(g)".to_string());
    match (e.base_p_map, poly.as_str()) {
        (true, "") | (true, "0") => BASE_P.to_string(),
        (true, p) => format!("{BASE_P}+{p}c"),
        (false, "") | (false, "0") => "0".to_string(),
        (false, p) => format!("{p}c"),
    }
}

/// Used by the CLI for `iso`: parse the second λ in the configured field.
pub fn parse_lambda(field: Field, text: &str) -> Result<LambdaVector, InputError> {
    LambdaSpec::parse(text)?.resolve(field)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(p: u64, lambda: &str) -> RunConfig {
        RunConfig::new(p, &LambdaSpec::parse(lambda).unwrap(), None, 13, 0).unwrap()
    }

    #[test]
    fn lambda_specs() {
        assert_eq!(LambdaSpec::parse("zero").unwrap(), LambdaSpec::Zero);
        assert_eq!(LambdaSpec::parse("random:42").unwrap(), LambdaSpec::Random(42));
        assert!(LambdaSpec::parse("random:x").is_err());
        let f = Field::prime(5).unwrap();
        let a = LambdaSpec::Random(7).resolve(f).unwrap();
        assert_eq!(a, LambdaSpec::Random(7).resolve(f).unwrap());
        assert!(LambdaSpec::parse("1,2,3").unwrap().resolve(f).is_err());
    }

    #[test]
    fn input_validation() {
        let z = LambdaSpec::Zero;
        assert!(matches!(RunConfig::new(4, &z, None, 13, 0), Err(InputError::Field(FieldError::NotPrime(4)))));
        assert!(matches!(RunConfig::new(17, &z, None, 13, 0), Err(InputError::PrimeTooLarge { .. })));
        assert!(RunConfig::new(17, &z, None, 17, 0).is_ok());
        assert!(matches!(RunConfig::new(3, &z, None, 13, 0), Err(InputError::Algebra(AlgebraError::CharTooSmall(3)))));
        assert!(parse_field_ext("2,0").is_ok());
        assert!(parse_field_ext("2").is_err());
        assert!(RunConfig::new(5, &z, Some(parse_field_ext("1,0").unwrap()), 13, 0).is_err());
    }

    #[test]
    fn verify_passes_and_tamper_fails() {
        let c = cfg(7, "0,0,0,0,0,0,1");
        assert!(cmd_verify(&c).unwrap().passed());
        let mut t = c.clone();
        t.tamper = true;
        let r = cmd_verify(&t).unwrap();
        assert!(!r.passed());
        let jacobi = r.results.verify.unwrap().axioms.checks.into_iter().find(|c| c.name == "jacobi").unwrap();
        assert!(!jacobi.passed);
    }

    #[test]
    fn cohomology_reports() {
        let r = cmd_cohomology(&cfg(5, "zero")).unwrap();
        let dims: Vec<usize> = [&r.results.h1, &r.results.h1_star, &r.results.h2, &r.results.h2_star]
            .iter()
            .map(|g| g.as_ref().unwrap().dimension)
            .collect();
        assert_eq!(dims, vec![2, 2, 3, 8]);
        assert!(r.passed());
        let r = cmd_cohomology(&cfg(7, "zero")).unwrap();
        assert_eq!(r.results.h2_star.as_ref().unwrap().dimension, 10);
    }

    #[test]
    fn json_round_trip_and_determinism() {
        let c = cfg(5, "random:3");
        let r = cmd_extensions(&c).unwrap();
        let json = r.to_json();
        assert_eq!(Report::from_json(&json).unwrap(), r);
        assert_eq!(cmd_extensions(&c).unwrap().to_json(), json);
        let v = cmd_verify(&c).unwrap();
        assert_eq!(Report::from_json(&v.to_json()).unwrap(), v);
    }

    #[test]
    fn latex_rows() {
        let r = cmd_extensions(&cfg(7, "0,0,0,0,0,0,1")).unwrap();
        let tex = render_latex(&r);
        assert!(tex.contains("$(\\eta,0)$ &"));
        assert!(tex.contains("(\\alpha_1\\beta_6-\\alpha_6\\beta_1+\\alpha_3\\beta_4-\\alpha_4\\beta_3) c"));
        assert!(tex.contains("g^{[p]} = g^{[p]_{\\mathfrak m_2^\\lambda(p)}}"));
        assert_eq!(tex.matches("\\hline").count(), 4);
    }

    #[test]
    fn iso_reports() {
        let c = cfg(5, "1,2,4,3,1");
        let f = c.field;
        let r = cmd_iso(&c, &parse_lambda(f, "1,1,1,1,1").unwrap());
        assert_eq!(r.results.iso.unwrap().mu.as_deref(), Some("2"));
        let c = cfg(5, "zero");
        let r = cmd_iso(&c, &parse_lambda(f, "1,0,0,0,0").unwrap());
        assert!(!r.results.iso.as_ref().unwrap().isomorphic);
        assert!(render_text(&r).contains("not isomorphic"));
    }
}
