//! The structured input document and the machine-readable report, both
//! JSON-compatible with scalar strings as the exact interchange format.

use crate::algebroid::LieAlgebra;
use crate::courant;
use crate::error::{Error, Result};
use crate::hst::{
    check_hst, contravariant_check, matrix_from_strings, matrix_strings, theorem_suite, HstInput,
    SuiteItem, Witness,
};
use crate::scalar::{parse_scalar, QuadField, DEFAULT_D};
use crate::superalgebra::Superfunction;
use serde::{Deserialize, Serialize};
use std::time::Instant;

fn default_d() -> u32 {
    DEFAULT_D
}

fn default_strict() -> bool {
    true
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldSection {
    #[serde(default = "default_d")]
    pub d: u32,
}

impl Default for FieldSection {
    fn default() -> Self {
        FieldSection { d: DEFAULT_D }
    }
}

/// One entry [i, j, k, scalar] meaning [e_i, e_j] = ... + scalar e_k + ...,
/// 1-based; the antisymmetric completion is automatic and duplicates are
/// rejected.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketRecord(pub usize, pub usize, pub usize, pub String);

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraSection {
    pub labels: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteKind {
    Basic,
    Full,
}

impl Default for SuiteKind {
    fn default() -> Self {
        SuiteKind::Basic
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Options {
    #[serde(default = "default_strict")]
    pub strict: bool,
    #[serde(default)]
    pub suite: SuiteKind,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            strict: true,
            suite: SuiteKind::Basic,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InputDocument {
    #[serde(default)]
    pub field: FieldSection,
    pub algebra: AlgebraSection,
    /// Three Gram matrices as row-major scalar strings.
    pub forms: [Vec<Vec<String>>; 3],
    pub eps: [i64; 3],
    #[serde(default)]
    pub options: Options,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: e.column(),
            msg: format!("line {}: {}", e.line(), e),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn quad_field(&self) -> Result<QuadField> {
        QuadField::new(self.field.d)
    }

    pub fn lie_algebra(&self) -> Result<LieAlgebra> {
        let field = self.quad_field()?;
        let n = self.algebra.labels.len();
        let mut entries = Vec::with_capacity(self.algebra.brackets.len());
        for BracketRecord(i, j, k, v) in &self.algebra.brackets {
            if *i == 0 || *j == 0 || *k == 0 || *i > n || *j > n || *k > n {
                return Err(Error::Invalid(format!(
                    "bracket indices ({i}, {j}, {k}) out of range 1..={n}"
                )));
            }
            entries.push((i - 1, j - 1, k - 1, parse_scalar(v, field.d)?));
        }
        LieAlgebra::new(field, self.algebra.labels.clone(), &entries)
    }

    pub fn to_hst_input(&self) -> Result<HstInput> {
        let algebra = self.lie_algebra()?;
        let d = self.field.d;
        let mut forms = Vec::with_capacity(3);
        for rows in &self.forms {
            forms.push(matrix_from_strings(rows, d)?);
        }
        HstInput::new(
            algebra,
            forms.try_into().unwrap(),
            self.eps,
            self.options.strict,
        )
    }
}

pub type SuperfunctionDoc = Vec<(Vec<String>, String)>;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AxiomsDoc {
    pub nondegenerate: bool,
    pub squares: [bool; 3],
    pub pullback_equality: bool,
    pub jacobi: bool,
    pub torsion_free: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ContravariantDoc {
    pub squares: [bool; 3],
    pub brackets_equal: bool,
    pub verdict: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CourantDoc {
    pub s_squares: [bool; 3],
    pub anticommute: bool,
    pub theta_deformations: [bool; 3],
    pub verdict: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ReportDocument {
    pub verdict: String,
    pub eps: [i64; 3],
    pub axioms: AxiomsDoc,
    #[serde(rename = "H")]
    pub h: SuperfunctionDoc,
    pub g: Vec<Vec<String>>,
    pub psi: SuperfunctionDoc,
    pub suite: Vec<SuiteItem>,
    pub witnesses: Vec<Witness>,
    pub pis: Vec<Vec<Vec<String>>>,
    pub ns: Vec<Vec<Vec<String>>>,
    pub g_inv: Vec<Vec<String>>,
    pub contravariant: Option<ContravariantDoc>,
    pub courant: Option<CourantDoc>,
    pub d_omegas: Vec<SuperfunctionDoc>,
    pub pullback: SuperfunctionDoc,
    pub timing_ms: u64,
}

impl ReportDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: e.column(),
            msg: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn passed(&self) -> bool {
        self.verdict == "hst"
    }
}

fn sf_doc(f: &Superfunction, labels: &[String]) -> SuperfunctionDoc {
    f.serialize(labels)
}

/// Runs the full evaluation pipeline on a parsed document. Mathematical
/// failures (degenerate forms, failed axioms, non-Jacobi constants in strict
/// mode) become a "not-hst" report with witnesses; only malformed input is an
/// error.
pub fn evaluate_document(doc: &InputDocument) -> Result<ReportDocument> {
    let start = Instant::now();
    let input = doc.to_hst_input()?;
    let labels = input.algebra.labels.clone();
    let suite_kind = doc.options.suite;

    let empty_axioms = |jacobi: bool| AxiomsDoc {
        nondegenerate: false,
        squares: [false; 3],
        pullback_equality: false,
        jacobi,
        torsion_free: false,
    };

    // strict-mode Jacobi gate
    if input.strict && !input.algebra.jacobi_ok {
        let (i, j, k) = input.algebra.jacobi_witness().unwrap_or((0, 0, 0));
        return Ok(ReportDocument {
            verdict: "not-hst".into(),
            eps: input.eps,
            axioms: empty_axioms(false),
            h: vec![],
            g: vec![],
            psi: vec![],
            suite: vec![],
            witnesses: vec![Witness::JacobiTriple {
                triple: [labels[i].clone(), labels[j].clone(), labels[k].clone()],
            }],
            pis: vec![],
            ns: vec![],
            g_inv: vec![],
            contravariant: None,
            courant: None,
            d_omegas: vec![],
            pullback: vec![],
            timing_ms: start.elapsed().as_millis() as u64,
        });
    }

    let report = match check_hst(&input) {
        Ok(r) => r,
        Err(Error::Singular { form, kernel }) => {
            return Ok(ReportDocument {
                verdict: "not-hst".into(),
                eps: input.eps,
                axioms: empty_axioms(input.algebra.jacobi_ok),
                h: vec![],
                g: vec![],
                psi: vec![],
                suite: vec![],
                witnesses: vec![Witness::Kernel {
                    form: form.unwrap_or(0),
                    kernel,
                }],
                pis: vec![],
                ns: vec![],
                g_inv: vec![],
                contravariant: None,
                courant: None,
                d_omegas: vec![],
                pullback: vec![],
                timing_ms: start.elapsed().as_millis() as u64,
            })
        }
        Err(e) => return Err(e),
    };

    let contravariant = contravariant_check(&input).ok();
    let courant_report = courant::hs_on_courant_check(&input).ok();

    let suite = if report.verdict && suite_kind == SuiteKind::Full {
        theorem_suite(&input)?.items
    } else {
        vec![]
    };

    let verdict_pass =
        report.verdict && (suite_kind != SuiteKind::Full || suite.iter().all(|it| it.pass));

    let psi_doc = contravariant
        .as_ref()
        .map(|c| sf_doc(&c.psi, &labels))
        .unwrap_or_default();

    Ok(ReportDocument {
        verdict: if verdict_pass { "hst" } else { "not-hst" }.into(),
        eps: report.eps,
        axioms: AxiomsDoc {
            nondegenerate: true,
            squares: report.squares_ok,
            pullback_equality: report.pullback_equal,
            jacobi: report.jacobi_ok,
            torsion_free: report.torsion_free,
        },
        h: report
            .h
            .as_ref()
            .map(|h| sf_doc(h, &labels))
            .unwrap_or_default(),
        g: report
            .metric
            .as_ref()
            .map(|m| matrix_strings(&m.g))
            .unwrap_or_default(),
        psi: psi_doc,
        suite,
        witnesses: report.witnesses.clone(),
        pis: report.pis.iter().map(matrix_strings).collect(),
        ns: report.ns.iter().map(|e| matrix_strings(&e.mat)).collect(),
        g_inv: report
            .metric
            .as_ref()
            .map(|m| matrix_strings(&m.g_inv))
            .unwrap_or_default(),
        contravariant: contravariant.map(|c| ContravariantDoc {
            squares: c.squares_ok,
            brackets_equal: c.brackets_equal,
            verdict: if c.verdict { "hst" } else { "not-hst" }.into(),
        }),
        courant: courant_report.map(|c| CourantDoc {
            s_squares: c.s_squares_ok,
            anticommute: c.anticommute_ok,
            theta_deformations: c.theta_deformations_ok,
            verdict: c.verdict,
        }),
        d_omegas: report
            .d_omegas
            .iter()
            .map(|f| sf_doc(f, &labels))
            .collect(),
        pullback: report
            .h
            .as_ref()
            .map(|h| {
                // the common value d omega_i(N_i ., N_i ., N_i .) = eps_2 H
                sf_doc(
                    &h.scale(&crate::scalar::Scalar::from_int(input.eps[1])),
                    &labels,
                )
            })
            .unwrap_or_default(),
        timing_ms: start.elapsed().as_millis() as u64,
    })
}
