//! Report documents for the command-line front end, with markdown and JSON
//! renderers.
//!
//! Every number crosses the wire as a string: rationals as `p/q`, Gaussian
//! rationals as `{"re": "p/q", "im": "p/q"}`. Output depends only on the
//! inputs, so repeated runs are byte-identical.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::sl3::{K_NAMES, ROOT_NAMES};
use crate::algebra::UeaElement;
use crate::exec::Execution;
use crate::kflat::display_sl2;
use crate::kflat::to_sl2;
use crate::pipeline::{
    build_operators, infer_pattern, select_operators, solution_sweep, KTypeTable, OperatorRecord, Pattern,
};
use crate::qmchar::{MIrrep, Multiset};
use crate::scalar::GaussRational;
use crate::su2model::PolyVector;
use crate::weight::Weight;
use crate::Result;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// One term `coeff · word` of an enveloping-algebra element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub word: Vec<String>,
    pub coeff: GaussRational,
}

fn terms(u: &UeaElement, names: &[&str]) -> Vec<Term> {
    u.terms()
        .map(|(w, c)| Term { word: w.iter().map(|&g| names[g as usize].to_string()).collect(), coeff: c.clone() })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OperatorEntry {
    pub label: String,
    pub nu_target: Weight,
    pub order: usize,
    pub character: MIrrep,
    pub u_bar: String,
    pub u_bar_terms: Vec<Term>,
    pub u_flat: String,
    pub u_flat_terms: Vec<Term>,
    pub u_flat_sl2: String,
    pub differential_operator: String,
}

impl From<&OperatorRecord> for OperatorEntry {
    fn from(r: &OperatorRecord) -> Self {
        let sl2 = to_sl2(&r.u_flat);
        OperatorEntry {
            label: r.label.clone(),
            nu_target: r.nu_target.clone(),
            order: r.order,
            character: r.chi,
            u_bar: r.u_bar.display_with(&ROOT_NAMES),
            u_bar_terms: terms(&r.u_bar, &ROOT_NAMES),
            u_flat: r.u_flat.to_string(),
            u_flat_terms: terms(r.u_flat.element(), &K_NAMES),
            u_flat_sl2: display_sl2(&sl2),
            differential_operator: r.right_translation(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct KTypeRowEntry {
    pub n: usize,
    pub multiplicity: u32,
    pub kernel_dim: usize,
    pub m_structure: Multiset,
    pub kernel_basis: Vec<String>,
    pub kernel_coefficients: Vec<PolyVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct KTypeTableEntry {
    pub operator_label: String,
    pub sigma: MIrrep,
    pub n_max: usize,
    /// `dim Sol(n)` for every `n = 0..=n_max`.
    pub kernel_dims: Vec<usize>,
    /// Only rows with nonzero multiplicity.
    pub rows: Vec<KTypeRowEntry>,
}

impl From<&KTypeTable> for KTypeTableEntry {
    fn from(t: &KTypeTable) -> Self {
        KTypeTableEntry {
            operator_label: t.operator_label.clone(),
            sigma: t.sigma,
            n_max: t.n_max,
            kernel_dims: t.rows.iter().map(|r| r.kernel_basis.len()).collect(),
            rows: t
                .rows
                .iter()
                .filter(|r| r.multiplicity > 0)
                .map(|r| KTypeRowEntry {
                    n: r.n,
                    multiplicity: r.multiplicity,
                    kernel_dim: r.kernel_basis.len(),
                    m_structure: r.mrep.clone(),
                    kernel_basis: r.kernel_basis.iter().map(ToString::to_string).collect(),
                    kernel_coefficients: r.kernel_basis.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ProgressionEntry {
    pub residue: usize,
    pub modulus: usize,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PatternEntry {
    pub operator_label: String,
    pub sigma: MIrrep,
    pub summary: String,
    pub progressions: Vec<ProgressionEntry>,
    pub exceptions: Vec<usize>,
    pub irregular: bool,
    pub low_confidence: bool,
    pub verified_up_to: usize,
}

impl PatternEntry {
    fn new(table: &KTypeTable, p: &Pattern) -> Self {
        PatternEntry {
            operator_label: table.operator_label.clone(),
            sigma: table.sigma,
            summary: p.describe(),
            progressions: p
                .progressions
                .iter()
                .map(|q| ProgressionEntry { residue: q.residue, modulus: q.modulus, multiplicity: q.multiplicity })
                .collect(),
            exceptions: p.exceptions.clone(),
            irregular: p.irregular,
            low_confidence: p.low_confidence,
            verified_up_to: p.verified_up_to,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Metadata {
    pub command: String,
    pub lambda_ps: Weight,
    /// Highest weight label of the Verma module, `-λ_ps`.
    pub verma_label: Weight,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub operator_selector: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sigma: Option<MIrrep>,
    pub tool_version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportDocument {
    pub metadata: Metadata,
    pub operators: Vec<OperatorEntry>,
    pub ktype_tables: Vec<KTypeTableEntry>,
    pub patterns: Vec<PatternEntry>,
}

fn metadata(command: &str, lambda_ps: &Weight) -> Metadata {
    Metadata {
        command: command.to_string(),
        lambda_ps: lambda_ps.clone(),
        verma_label: -lambda_ps,
        n_max: None,
        operator_selector: None,
        sigma: None,
        tool_version: TOOL_VERSION.to_string(),
    }
}

/// Classification of the operators at `lambda` (principal-series parameter).
pub fn cmd_classify(lambda: &str) -> Result<ReportDocument> {
    let lambda_ps = Weight::parse(lambda)?;
    let ops = build_operators(&lambda_ps)?;
    Ok(ReportDocument {
        metadata: metadata("classify", &lambda_ps),
        operators: ops.iter().map(OperatorEntry::from).collect(),
        ktype_tables: Vec::new(),
        patterns: Vec::new(),
    })
}

/// K-type table of the selected operator (or common system) twisted by `sigma`.
pub fn cmd_ktypes(lambda: &str, selector: &str, sigma: &str, n_max: usize) -> Result<ReportDocument> {
    cmd_ktypes_with(lambda, selector, sigma, n_max, Execution::default())
}

pub fn cmd_ktypes_with(
    lambda: &str,
    selector: &str,
    sigma: &str,
    n_max: usize,
    exec: Execution,
) -> Result<ReportDocument> {
    let lambda_ps = Weight::parse(lambda)?;
    let sigma: MIrrep = sigma.parse()?;
    let ops = build_operators(&lambda_ps)?;
    let chosen = select_operators(&ops, selector)?;
    let label = chosen.iter().map(|r| r.label.as_str()).collect::<Vec<_>>().join(",");
    let flats: Vec<_> = chosen.iter().map(|r| r.u_flat.clone()).collect();
    let sweep = solution_sweep(&flats, n_max, exec)?;
    let table = KTypeTable::from_sweep(&label, &lambda_ps, sigma, &sweep);
    let pattern = infer_pattern(&table);
    let mut meta = metadata("ktypes", &lambda_ps);
    meta.n_max = Some(n_max);
    meta.operator_selector = Some(label);
    meta.sigma = Some(sigma);
    Ok(ReportDocument {
        metadata: meta,
        operators: chosen.iter().map(|r| OperatorEntry::from(*r)).collect(),
        ktype_tables: vec![KTypeTableEntry::from(&table)],
        patterns: vec![PatternEntry::new(&table, &pattern)],
    })
}

/// Pretty-printed JSON with a trailing newline.
pub fn render_json(doc: &ReportDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
    s.push('\n');
    s
}

pub fn parse_json(s: &str) -> Result<ReportDocument> {
    serde_json::from_str(s).map_err(|e| crate::Error::Parse(format!("report JSON: {e}")))
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|").replace('*', "·")
}

pub fn render_markdown(doc: &ReportDocument) -> String {
    let m = &doc.metadata;
    let mut out = String::new();
    let _ = writeln!(out, "# {} at λ = {}", m.command, m.lambda_ps);
    let _ = writeln!(out);
    let _ = writeln!(out, "- principal-series parameter: `{}`", m.lambda_ps.to_wire());
    let _ = writeln!(out, "- Verma module: M({})", m.verma_label);
    if let Some(sel) = &m.operator_selector {
        let _ = writeln!(out, "- operators: {sel}");
    }
    if let Some(s) = m.sigma {
        let _ = writeln!(out, "- σ: {s}");
    }
    if let Some(n) = m.n_max {
        let _ = writeln!(out, "- nMax: {n}");
    }
    let _ = writeln!(out, "- tool version: {}", m.tool_version);
    let _ = writeln!(out);

    let _ = writeln!(out, "## Operators");
    let _ = writeln!(out);
    if doc.operators.is_empty() {
        let _ = writeln!(out, "No singular vectors: the classification is empty.");
    } else {
        let _ = writeln!(out, "| label | ν | order | singular vector | character | flattened |");
        let _ = writeln!(out, "|---|---|---|---|---|---|");
        for op in &doc.operators {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} |",
                op.label,
                op.nu_target,
                op.order,
                md_escape(&op.u_bar),
                op.character,
                md_escape(&op.u_flat)
            );
        }
    }

    for table in &doc.ktype_tables {
        let _ = writeln!(out);
        let _ = writeln!(out, "## K-types of Sol({}) against σ = {}", table.operator_label, table.sigma);
        let _ = writeln!(out);
        if table.rows.is_empty() {
            let _ = writeln!(out, "No n ≤ {} has nonzero multiplicity.", table.n_max);
        } else {
            let _ = writeln!(out, "| n | multiplicity | dim Sol | M̃-structure | kernel basis |");
            let _ = writeln!(out, "|---|---|---|---|---|");
            for r in &table.rows {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} |",
                    r.n,
                    r.multiplicity,
                    r.kernel_dim,
                    r.m_structure,
                    md_escape(&r.kernel_basis.join("; "))
                );
            }
        }
        let dims: Vec<String> = table.kernel_dims.iter().map(ToString::to_string).collect();
        let _ = writeln!(out);
        let _ = writeln!(out, "dim Sol(n) for n = 0..{}: {}", table.n_max, dims.join(" "));
    }

    for p in &doc.patterns {
        let _ = writeln!(out);
        let _ = writeln!(out, "## Pattern for {} against σ = {}", p.operator_label, p.sigma);
        let _ = writeln!(out);
        let _ = writeln!(out, "{}", p.summary);
    }
    out
}
