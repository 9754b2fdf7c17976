//! From a principal-series parameter to classified operators and K-type
//! tables.
//!
//! A principal-series parameter `λ_ps` corresponds to the Verma module
//! `M(-λ_ps)`. Each singular vector `ū` of weight `ν - (-λ_ps)` gives an
//! intertwining operator, realized as the right translation `R(ū)`; only
//! its algebraic data is kept here.

use serde::Serialize;

use crate::algebra::sl3::{self, ROOT_NAMES, X, Y};
use crate::algebra::UeaElement;
use crate::exec::Execution;
use crate::kflat::{flatten, to_sl2, KElement};
use crate::qmchar::{ad_character, decompose_mrep, hom_multiplicity, MIrrep, Multiset};
use crate::su2model::{common_sol, restricted_action, PolyVector};
use crate::verma::{classify_targets, normalize_singular, singular_vectors};
use crate::weight::Weight;
use crate::{Error, Result};

/// One classified operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorRecord {
    /// Short name (`X`, `Y2X`, `XcY`, ...) or `u[ν]` for anything unnamed.
    pub label: String,
    pub nu_target: Weight,
    /// Singular vector in `U(n̄)` normal form.
    pub u_bar: UeaElement,
    pub chi: MIrrep,
    pub u_flat: KElement,
    /// Degree of `u_bar`.
    pub order: usize,
}

impl OperatorRecord {
    /// The right-translation operator attached to `u_bar`, as text.
    pub fn right_translation(&self) -> String {
        format!("R({})", self.u_bar.display_with(&ROOT_NAMES))
    }
}

/// Named singular vectors, compared after [`normalize_singular`].
fn named_vectors() -> Vec<(&'static str, UeaElement)> {
    let w = |s: &[u8]| sl3::normalize_nbar(&UeaElement::word(s));
    vec![
        ("X", w(&[X])),
        ("Y", w(&[Y])),
        ("Y2X", w(&[Y, Y, X])),
        ("X2Y", w(&[X, X, Y])),
        ("XY2X", w(&[X, Y, Y, X])),
        ("XcY", &w(&[X, Y]) + &w(&[Y, X])),
    ]
}

pub fn operator_label(u_bar: &UeaElement, nu: &Weight) -> String {
    let target = normalize_singular(u_bar);
    named_vectors()
        .into_iter()
        .find(|(_, v)| normalize_singular(v) == target)
        .map(|(name, _)| name.to_string())
        .unwrap_or_else(|| format!("u[{}]", nu.to_wire()))
}

/// Steps H1 to H3: targets, singular vectors, characters and flattenings,
/// sorted by `(order, ν)`.
pub fn build_operators(lambda_ps: &Weight) -> Result<Vec<OperatorRecord>> {
    let lambda = -lambda_ps;
    let mut out = Vec::new();
    for nu in classify_targets(&lambda) {
        for v in singular_vectors(&lambda, &nu) {
            let u_bar = v.element().clone();
            let chi = ad_character(&u_bar)?;
            out.push(OperatorRecord {
                label: operator_label(&u_bar, &nu),
                nu_target: nu.clone(),
                order: u_bar.degree(),
                u_flat: flatten(&u_bar, lambda_ps),
                chi,
                u_bar,
            });
        }
    }
    out.sort_by(|a, b| (a.order, &a.nu_target).cmp(&(b.order, &b.nu_target)));
    Ok(out)
}

/// Resolves a selector such as `X`, `XcY` or `X,Y` against classified
/// operators.
pub fn select_operators<'a>(records: &'a [OperatorRecord], selector: &str) -> Result<Vec<&'a OperatorRecord>> {
    let valid = || {
        let mut names: Vec<&str> = records.iter().map(|r| r.label.as_str()).collect();
        if names.contains(&"X") && names.contains(&"Y") {
            names.push("X,Y");
        }
        if names.is_empty() {
            "none (no operators at this parameter)".to_string()
        } else {
            names.join(", ")
        }
    };
    let mut out = Vec::new();
    for part in selector.split(',').map(str::trim) {
        let rec = records
            .iter()
            .find(|r| r.label == part)
            .ok_or_else(|| Error::UnknownLabel { label: part.to_string(), valid: valid() })?;
        if !out.contains(&rec) {
            out.push(rec);
        }
    }
    Ok(out)
}

/// Solution space at one `n` together with its `M̃`-structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionRow {
    pub n: usize,
    pub kernel_basis: Vec<PolyVector>,
    pub mrep: Multiset,
}

/// Kernels and `M̃`-decompositions for `n = 0..=n_max`, in ascending `n`.
pub fn solution_sweep(u_flats: &[KElement], n_max: usize, exec: Execution) -> Result<Vec<SolutionRow>> {
    assert!(!u_flats.is_empty(), "need at least one operator");
    let ops: Vec<UeaElement> = u_flats.iter().map(to_sl2).collect();
    let rows = exec.map((0..=n_max).collect(), |n| -> Result<SolutionRow> {
        let kernel_basis = common_sol(&ops, n);
        let mrep = decompose_mrep(&restricted_action(&kernel_basis, n)?)?;
        Ok(SolutionRow { n, kernel_basis, mrep })
    });
    rows.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTypeRow {
    pub n: usize,
    pub multiplicity: u32,
    pub kernel_basis: Vec<PolyVector>,
    pub mrep: Multiset,
}

/// Multiplicity of `Pol_n` in the solution space twisted by `sigma`, for
/// `n ≤ n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTypeTable {
    pub operator_label: String,
    pub lambda_ps: Weight,
    pub sigma: MIrrep,
    pub n_max: usize,
    pub rows: Vec<KTypeRow>,
}

impl KTypeTable {
    pub fn from_sweep(label: &str, lambda_ps: &Weight, sigma: MIrrep, sweep: &[SolutionRow]) -> Self {
        KTypeTable {
            operator_label: label.to_string(),
            lambda_ps: lambda_ps.clone(),
            sigma,
            n_max: sweep.last().map_or(0, |r| r.n),
            rows: sweep
                .iter()
                .map(|r| KTypeRow {
                    n: r.n,
                    multiplicity: hom_multiplicity(&r.mrep, sigma),
                    kernel_basis: r.kernel_basis.clone(),
                    mrep: r.mrep.clone(),
                })
                .collect(),
        }
    }

    /// `n` values with nonzero multiplicity.
    pub fn support(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| r.multiplicity > 0).map(|r| r.n).collect()
    }
}

/// Builds the K-type table of the common solution space of `u_flats`.
pub fn ktype_table(
    u_flats: &[KElement],
    lambda_ps: &Weight,
    sigma: MIrrep,
    n_max: usize,
    label: &str,
) -> Result<KTypeTable> {
    let sweep = solution_sweep(u_flats, n_max, Execution::default())?;
    Ok(KTypeTable::from_sweep(label, lambda_ps, sigma, &sweep))
}

/// Smallest `n_max` for which [`infer_pattern`] commits to an answer.
pub const PATTERN_MIN_NMAX: usize = 16;

/// `n ≡ residue (mod modulus)` with constant multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Progression {
    pub residue: usize,
    pub modulus: usize,
    pub multiplicity: u32,
}

/// Summary of a table by residue classes mod 4.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Pattern {
    pub progressions: Vec<Progression>,
    /// Rows whose multiplicity differs from the value fitted to their class.
    pub exceptions: Vec<usize>,
    pub irregular: bool,
    pub low_confidence: bool,
    pub verified_up_to: usize,
}

impl Pattern {
    pub fn describe(&self) -> String {
        let scope = format!("verified for n ≤ {}", self.verified_up_to);
        if self.irregular {
            let why = if self.low_confidence {
                format!("too few rows, need nMax ≥ {PATTERN_MIN_NMAX}")
            } else {
                "no consistent fit".to_string()
            };
            return format!("irregular ({why}); {scope}");
        }
        let mut body = if self.progressions.is_empty() {
            "all multiplicities zero".to_string()
        } else {
            self.progressions
                .iter()
                .map(|p| format!("n ≡ {} (mod {}) with multiplicity {}", p.residue, p.modulus, p.multiplicity))
                .collect::<Vec<_>>()
                .join("; ")
        };
        if !self.exceptions.is_empty() {
            let ns: Vec<String> = self.exceptions.iter().map(|n| n.to_string()).collect();
            body.push_str(&format!("; exceptions at n = {}", ns.join(", ")));
        }
        format!("{body}; {scope}")
    }
}

/// Fits each residue class mod 4 by its majority multiplicity.
pub fn infer_pattern(table: &KTypeTable) -> Pattern {
    const MODULUS: usize = 4;
    let mut pattern = Pattern {
        progressions: Vec::new(),
        exceptions: Vec::new(),
        irregular: false,
        low_confidence: table.n_max < PATTERN_MIN_NMAX,
        verified_up_to: table.n_max,
    };
    if pattern.low_confidence {
        pattern.irregular = true;
        return pattern;
    }
    for r in 0..MODULUS {
        let class: Vec<&KTypeRow> = table.rows.iter().filter(|row| row.n % MODULUS == r).collect();
        let mut counts: Vec<(u32, usize)> = Vec::new();
        for row in &class {
            match counts.iter_mut().find(|(m, _)| *m == row.multiplicity) {
                Some(entry) => entry.1 += 1,
                None => counts.push((row.multiplicity, 1)),
            }
        }
        counts.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let Some(&(fit, top)) = counts.first() else { continue };
        if counts.get(1).is_some_and(|c| c.1 == top) {
            pattern.irregular = true;
        }
        if fit > 0 {
            pattern.progressions.push(Progression { residue: r, modulus: MODULUS, multiplicity: fit });
        }
        pattern.exceptions.extend(class.iter().filter(|row| row.multiplicity != fit).map(|row| row.n));
    }
    pattern.exceptions.sort_unstable();
    pattern
}
