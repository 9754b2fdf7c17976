//! Built-in golden tables and property checks, run by `sl3ido selftest`.
//!
//! The character table is a parameter so that the checks can be pointed at
//! a deliberately broken table and seen to fail.

use std::fmt::Write as _;

use num_traits::Zero;

use crate::algebra::sl3::{self, root_algebra, K_MINUS, K_PLUS, K_ZERO, X, Y, Z};
use crate::algebra::{cartan_theta, commutator, GElement, UeaElement};
use crate::exec::Execution;
use crate::hypergeo::{
    euler_apply, fundamental_polynomials, gamma_ratio_terminating, gauss_at_one, t_operator_check,
    t_operator_via_euler, u_n, u_params, v_n, v_params, F21Params,
};
use crate::kflat::{flatten, flatten_residual, to_sl2};
use crate::linalg::Matrix;
use crate::pipeline::{build_operators, select_operators, solution_sweep, KTypeTable, OperatorRecord};
use crate::qmchar::{ad_m, CharacterTable, MIrrep, Multiset, Q8Element};
use crate::scalar::{rat, GaussRational};
use crate::su2model::{
    common_sol, differential_operator, dpi_matrix, group_action_matrix, restricted_action, sol_space, PolyVector,
};
use crate::verma::{classify_targets, is_singular, singular_vectors};
use crate::weight::Weight;

/// Range of `n` for kernel and K-type checks.
pub const SELFTEST_NMAX: usize = 60;
/// Range of `n` for matrix identities.
pub const MATRIX_NMAX: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub outcome: Result<(), String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelftestReport {
    pub checks: Vec<CheckResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome.is_ok())
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.outcome.is_err())
    }

    /// `{"passed": .., "checks": [{"name", "ok", "detail"}]}` with a trailing newline.
    pub fn render_json(&self) -> String {
        let checks: Vec<serde_json::Value> = self
            .checks
            .iter()
            .map(|c| {
                serde_json::json!({
                    "name": c.name,
                    "ok": c.outcome.is_ok(),
                    "detail": c.outcome.as_ref().err(),
                })
            })
            .collect();
        let doc = serde_json::json!({ "passed": self.passed(), "checks": checks });
        let mut s = serde_json::to_string_pretty(&doc).expect("selftest report serializes");
        s.push('\n');
        s
    }

    /// One line per check, then a summary line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            match &c.outcome {
                Ok(()) => {
                    let _ = writeln!(out, "ok   {}", c.name);
                }
                Err(e) => {
                    let _ = writeln!(out, "FAIL {}: {e}", c.name);
                }
            }
        }
        let failed = self.checks.iter().filter(|c| c.outcome.is_err()).count();
        match self.first_failure() {
            None => {
                let _ = writeln!(out, "selftest passed: {} checks", self.checks.len());
            }
            Some(f) => {
                let _ = writeln!(
                    out,
                    "selftest failed: {failed} of {} checks, first failure: {}",
                    self.checks.len(),
                    f.name
                );
            }
        }
        out
    }
}

type Check = Result<(), String>;
type NamedCheck<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn word(w: &[u8]) -> UeaElement {
    UeaElement::word(w)
}

fn int(n: i64) -> GaussRational {
    GaussRational::from_int(n)
}

fn check_character_table(table: &CharacterTable) -> Check {
    table.check().map_err(|e| e.to_string())
}

/// The sign of `Ad(m_j)` on each line must agree with the table entry of
/// the expected character.
fn check_ad_characters(table: &CharacterTable) -> Check {
    let two_xy_z = &word(&[X, Y]).scale(&int(2)) + &word(&[Z]);
    let cases = [
        ("X", word(&[X]), MIrrep::PlusMinus),
        ("Y", word(&[Y]), MIrrep::MinusPlus),
        ("2XY+Z", two_xy_z, MIrrep::MinusMinus),
        ("XY2X", sl3::normalize_nbar(&word(&[X, Y, Y, X])), MIrrep::PlusPlus),
    ];
    for (name, u, sigma) in cases {
        for j in 1..=3u8 {
            let g = Q8Element::m(j);
            let image = ad_m(&g.matrix3(), &u);
            let want = table.value(sigma, g);
            ensure(image == u.scale(want), || format!("Ad(m{j}) on {name} is not {want} (table row {sigma})"))?;
        }
    }
    Ok(())
}

fn check_pbw() -> Check {
    let n = sl3::normalize_nbar(&word(&[Y, X]));
    ensure(n == &word(&[X, Y]) + &word(&[Z]), || format!("YX normalizes to {n:?}"))?;
    let d = sl3::normalize_nbar(&(&word(&[X, Y, Y, X]) - &word(&[Y, X, X, Y])));
    ensure(d.is_zero(), || "XY²X - YX²Y does not vanish".into())?;
    // Two orders agree after converting back.
    let rev = crate::algebra::BasisOrder::from_sequence(&[7, 6, 5, 4, 3, 2, 1, 0]).map_err(|e| e.to_string())?;
    let alg = root_algebra();
    for w in [vec![5u8, 0, 6, 1], vec![7, 2, 3, 0], vec![1, 5, 0, 6, 4]] {
        let a = alg.normalize(&word(&w), &sl3::verma_order());
        let b = alg.normalize(&alg.normalize(&word(&w), &rev), &sl3::verma_order());
        ensure(a == b, || format!("orders disagree on word {w:?}"))?;
    }
    Ok(())
}

fn check_jacobi_and_theta() -> Check {
    let alg = root_algebra();
    let basis: Vec<GElement> =
        (0..8u8).map(|i| GElement::new(alg.basis_matrix(i).clone()).expect("trace-free")).collect();
    for a in &basis {
        ensure(cartan_theta(&cartan_theta(a)) == *a, || "θ is not an involution".into())?;
        for b in &basis {
            ensure(cartan_theta(&commutator(a, b)) == commutator(&cartan_theta(a), &cartan_theta(b)), || {
                "θ does not preserve brackets".into()
            })?;
            for c in &basis {
                let j = &(&commutator(a, &commutator(b, c)) + &commutator(b, &commutator(c, a)))
                    + &commutator(c, &commutator(a, b));
                ensure(j.is_zero(), || "Jacobi identity fails".into())?;
            }
        }
    }
    Ok(())
}

fn summary(recs: &[OperatorRecord]) -> Vec<(String, MIrrep)> {
    recs.iter().map(|r| (r.label.clone(), r.chi)).collect()
}

fn check_classification(table: &CharacterTable) -> Check {
    let recs = build_operators(&-Weight::rho()).map_err(|e| e.to_string())?;
    let want = [
        ("X", MIrrep::PlusMinus),
        ("Y", MIrrep::MinusPlus),
        ("X2Y", MIrrep::MinusPlus),
        ("Y2X", MIrrep::PlusMinus),
        ("XY2X", MIrrep::PlusPlus),
    ];
    let got = summary(&recs);
    let want: Vec<(String, MIrrep)> = want.iter().map(|(l, s)| (l.to_string(), *s)).collect();
    ensure(got == want, || format!("at -ρ got {got:?}"))?;
    for r in &recs {
        let v = singular_vectors(&Weight::rho(), &r.nu_target);
        ensure(v.len() == 1 && is_singular(&v[0]), || format!("{} is not a singular vector", r.label))?;
        for j in 1..=3u8 {
            let g = Q8Element::m(j);
            ensure(ad_m(&g.matrix3(), &r.u_bar) == r.u_bar.scale(table.value(r.chi, g)), || {
                format!("character of {} disagrees with the table at m{j}", r.label)
            })?;
        }
    }
    let recs = build_operators(&-Weight::rho_half()).map_err(|e| e.to_string())?;
    let got = summary(&recs);
    ensure(got == vec![("XcY".to_string(), MIrrep::MinusMinus)], || format!("at -ρ/2 got {got:?}"))?;
    let two_xy_z = &word(&[X, Y]).scale(&int(2)) + &word(&[Z]);
    ensure(recs[0].u_bar == two_xy_z, || "the -ρ/2 vector is not 2XY + Z".into())?;
    let generic = classify_targets(&Weight::from_ratios((1, 3), (1, 5)));
    ensure(generic.is_empty(), || format!("generic weight has targets {generic:?}"))
}

fn check_flattening() -> Check {
    let half_i = GaussRational::complex((0, 1), (1, 2));
    let half = GaussRational::from_ratio(1, 2);
    let xf = UeaElement::from_terms([(vec![K_PLUS], half_i.clone()), (vec![K_MINUS], half_i.clone())]);
    let yf = UeaElement::from_terms([(vec![K_PLUS], half.clone()), (vec![K_MINUS], -half)]);
    let xyf = UeaElement::from_terms([(vec![K_PLUS, K_PLUS], half_i.clone()), (vec![K_MINUS, K_MINUS], -half_i)]);
    let lams = [Weight::zero(), -Weight::rho(), -Weight::rho_half(), Weight::from_ratios((1, 3), (-2, 5))];
    for lam in &lams {
        ensure(*flatten(&word(&[X]), lam).element() == xf, || format!("X♭ wrong at {lam}"))?;
        ensure(*flatten(&word(&[Y]), lam).element() == yf, || format!("Y♭ wrong at {lam}"))?;
    }
    let two_xy_z = &word(&[X, Y]).scale(&int(2)) + &word(&[Z]);
    ensure(*flatten(&two_xy_z, &-Weight::rho_half()).element() == xyf, || "(X∘Y)♭ wrong".into())?;
    // Every word of length ≤ 3 re-expands to itself.
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    let mut frontier = words.clone();
    for _ in 0..3 {
        frontier = frontier.iter().flat_map(|w| (0..3u8).map(move |g| [w.clone(), vec![g]].concat())).collect();
        words.extend(frontier.iter().cloned());
    }
    for lam in &lams {
        for w in &words {
            ensure(flatten_residual(&word(w), lam).is_zero(), || format!("flattening of {w:?} at {lam} is wrong"))?;
        }
    }
    Ok(())
}

/// Closed forms of `dπ_n` on the flattened first- and second-order vectors.
pub fn closed_form_operators(n: usize) -> [crate::su2model::PolyOpMatrix; 3] {
    let ni = n as i64;
    let one = GaussRational::from_int(1);
    // -(i/2)((1 - t²) d/dt + n t)
    let x = differential_operator(&[(one.clone(), 0, 1), (-one.clone(), 2, 1), (int(ni), 1, 0)], n)
        .expect("preserves Pol_n")
        .scale(&GaussRational::complex((0, 1), (-1, 2)));
    // -(1/2)((1 + t²) d/dt - n t)
    let y = differential_operator(&[(one.clone(), 0, 1), (one.clone(), 2, 1), (int(-ni), 1, 0)], n)
        .expect("preserves Pol_n")
        .scale(&GaussRational::from_ratio(-1, 2));
    // (i/2)((1 - t⁴) d²/dt² + 2(n-1) t³ d/dt - n(n-1) t²)
    let xy = differential_operator(
        &[(one.clone(), 0, 2), (-one, 4, 2), (int(2 * (ni - 1)), 3, 1), (int(-ni * (ni - 1)), 2, 0)],
        n,
    )
    .expect("preserves Pol_n")
    .scale(&GaussRational::complex((0, 1), (1, 2)));
    [x, y, xy]
}

fn flats() -> [UeaElement; 3] {
    let two_xy_z = &word(&[X, Y]).scale(&int(2)) + &word(&[Z]);
    [
        to_sl2(&flatten(&word(&[X]), &-Weight::rho())),
        to_sl2(&flatten(&word(&[Y]), &-Weight::rho())),
        to_sl2(&flatten(&two_xy_z, &-Weight::rho_half())),
    ]
}

fn check_operator_matrices() -> Check {
    let flats = flats();
    for n in 0..=MATRIX_NMAX {
        let closed = closed_form_operators(n);
        for (k, (u, c)) in flats.iter().zip(closed.iter()).enumerate() {
            ensure(dpi_matrix(u, n) == *c, || format!("operator {k} differs from its closed form at n = {n}"))?;
        }
        let e = |g| dpi_matrix(&UeaElement::generator(g), n);
        let (p, m, z) = (e(K_PLUS), e(K_MINUS), e(K_ZERO));
        ensure(p.commutator(&m) == z, || format!("[E+, E-] ≠ E0 at n = {n}"))?;
        ensure(z.commutator(&p) == p.scale(&int(2)), || format!("[E0, E+] ≠ 2E+ at n = {n}"))?;
        ensure(z.commutator(&m) == m.scale(&int(-2)), || format!("[E0, E-] ≠ -2E- at n = {n}"))?;
        let mats: Vec<_> = Q8Element::ALL.iter().map(|&g| group_action_matrix(g, n)).collect();
        for &g in &Q8Element::ALL {
            for &h in &Q8Element::ALL {
                ensure(mats[g.index()].compose(&mats[h.index()]) == mats[(g * h).index()], || {
                    format!("π_n({g})π_n({h}) ≠ π_n({g}{h}) at n = {n}")
                })?;
            }
        }
    }
    Ok(())
}

fn one_minus_t2_power(n: usize) -> PolyVector {
    let k = n / 2;
    let mut c = vec![GaussRational::zero(); n + 1];
    let mut binom: i64 = 1;
    for j in 0..=k {
        c[2 * j] = int(if j % 2 == 0 { binom } else { -binom });
        binom = binom * (k - j) as i64 / (j + 1) as i64;
    }
    PolyVector::new(c, n).expect("degree n")
}

fn check_kernels() -> Check {
    let [xf, yf, xyf] = flats();
    for n in 0..=SELFTEST_NMAX {
        let sx = sol_space(&xf, n);
        if n % 2 == 0 {
            ensure(sx == vec![one_minus_t2_power(n)], || format!("Sol_X({n}) is not spanned by (1-t²)^(n/2)"))?;
        } else {
            ensure(sx.is_empty(), || format!("Sol_X({n}) is nonzero"))?;
        }
        let sxy = sol_space(&xyf, n);
        let want = [1, 2, 1, 0][n % 4];
        ensure(sxy.len() == want, || format!("dim Sol_XcY({n}) = {}, expected {want}", sxy.len()))?;
        let common = common_sol(&[xf.clone(), yf.clone()], n);
        ensure(common.len() == usize::from(n == 0), || format!("common Sol_(X,Y)({n}) has dim {}", common.len()))?;
    }
    Ok(())
}

fn check_m_structure(table: &CharacterTable) -> Check {
    let [xf, _, xyf] = flats();
    let decompose = |basis: &[PolyVector], n: usize| -> Result<Multiset, String> {
        let rep = restricted_action(basis, n).map_err(|e| e.to_string())?;
        table.decompose(&rep).map_err(|e| e.to_string())
    };
    ensure(decompose(&sol_space(&xf, 2), 2)? == Multiset::single(MIrrep::PlusMinus), || {
        "Sol_X(2) is not (+,-)".into()
    })?;
    ensure(decompose(&sol_space(&xyf, 5), 5)? == Multiset::single(MIrrep::H), || "Sol_XcY(5) is not H".into())?;
    ensure(decompose(&sol_space(&xyf, 4), 4)? == Multiset::single(MIrrep::PlusPlus), || {
        "Sol_XcY(4) is not (+,+)".into()
    })?;
    ensure(decompose(&sol_space(&xyf, 6), 6)? == Multiset::single(MIrrep::MinusMinus), || {
        "Sol_XcY(6) is not (-,-)".into()
    })
}

/// `(selector, λ_ps, σ, residue)`; a residue of `None` means the table is all zero.
fn ktype_cases() -> Vec<(&'static str, Weight, MIrrep, Option<Vec<usize>>)> {
    let rho = -Weight::rho();
    let rho_t = -Weight::rho_half();
    let mut cases = Vec::new();
    for sigma in MIrrep::ALL {
        let x = match sigma {
            MIrrep::PlusPlus => Some(vec![0]),
            MIrrep::PlusMinus => Some(vec![2]),
            _ => None,
        };
        let y = match sigma {
            MIrrep::PlusPlus => Some(vec![0]),
            MIrrep::MinusPlus => Some(vec![2]),
            _ => None,
        };
        let xy = match sigma {
            MIrrep::PlusPlus => Some(vec![0]),
            MIrrep::H => Some(vec![1]),
            MIrrep::MinusMinus => Some(vec![2]),
            _ => None,
        };
        cases.push(("X", rho.clone(), sigma, x));
        cases.push(("Y", rho.clone(), sigma, y));
        cases.push(("XcY", rho_t.clone(), sigma, xy));
    }
    cases
}

fn check_ktype_tables() -> Check {
    let mut sweeps = std::collections::BTreeMap::new();
    for (sel, lam) in
        [("X", -Weight::rho()), ("Y", -Weight::rho()), ("X,Y", -Weight::rho()), ("XcY", -Weight::rho_half())]
    {
        let recs = build_operators(&lam).map_err(|e| e.to_string())?;
        let chosen = select_operators(&recs, sel).map_err(|e| e.to_string())?;
        let flats: Vec<_> = chosen.iter().map(|r| r.u_flat.clone()).collect();
        let sweep = solution_sweep(&flats, SELFTEST_NMAX, Execution::default()).map_err(|e| e.to_string())?;
        sweeps.insert(sel, (lam, sweep));
    }
    for (sel, _, sigma, residues) in ktype_cases() {
        let (lam, sweep) = &sweeps[sel];
        let t = KTypeTable::from_sweep(sel, lam, sigma, sweep);
        let want: Vec<usize> = match &residues {
            None => Vec::new(),
            Some(rs) => (0..=SELFTEST_NMAX).filter(|n| rs.contains(&(n % 4))).collect(),
        };
        ensure(t.support() == want, || format!("{sel} against {sigma}: support {:?}", t.support()))?;
        ensure(t.rows.iter().all(|r| r.multiplicity <= 1), || format!("{sel} against {sigma}: multiplicity above 1"))?;
    }
    let (lam, sweep) = &sweeps["X,Y"];
    for sigma in MIrrep::ALL {
        let t = KTypeTable::from_sweep("X,Y", lam, sigma, sweep);
        let want = if sigma == MIrrep::PlusPlus { vec![0] } else { Vec::new() };
        ensure(t.support() == want, || format!("X,Y against {sigma}: support {:?}", t.support()))?;
    }
    Ok(())
}

fn check_hypergeometric() -> Check {
    let xyf = flats()[2].clone();
    for n in 0..=40usize {
        let u_poly = u_n(n).polynomial().is_some();
        let v_poly = v_n(n).polynomial().is_some();
        let want = match n % 4 {
            0 => (true, false),
            1 => (true, true),
            2 => (false, true),
            _ => (false, false),
        };
        ensure((u_poly, v_poly) == want, || format!("polynomial status of u_{n}, v_{n} is {:?}", (u_poly, v_poly)))?;
        for (t, p) in [(u_n(n), u_params(n)), (v_n(n), v_params(n))] {
            let Some(poly) = t.polynomial() else { continue };
            ensure(t_operator_check(n, poly).is_zero(), || format!("T[{n};t] does not kill a fundamental solution"))?;
            // Strip the t-shift and read the remaining series in x = t⁴.
            let shift = if p == u_params(n) { 0 } else { 1 };
            let xs: Vec<GaussRational> = poly.coeffs().iter().skip(shift).step_by(4).cloned().collect();
            let len = xs.len();
            let in_x = PolyVector::new(xs, len.saturating_sub(1)).expect("fits");
            ensure(euler_apply(&p, &in_x).is_zero(), || format!("Euler operator does not kill the series at n = {n}"))?;
        }
        let fund = fundamental_polynomials(n);
        let kernel = sol_space(&xyf, n);
        ensure(fund.len() == kernel.len(), || format!("fundamental pair and kernel differ in size at n = {n}"))?;
        if !fund.is_empty() {
            let rows: Vec<Vec<GaussRational>> = fund.iter().chain(kernel.iter()).map(|p| p.coeffs().to_vec()).collect();
            let rank = Matrix::from_rows(rows).rank();
            ensure(rank == kernel.len(), || format!("fundamental pair does not span the kernel at n = {n}"))?;
        }
        let probe = PolyVector::new((0..=n).map(|k| int((k * k) as i64 - 3)).collect(), n).expect("fits");
        ensure(t_operator_check(n, &probe) == t_operator_via_euler(n, &probe), || format!("T[{n};t] ≠ 16t²D"))?;
    }
    for k in 0..=25i64 {
        let p = F21Params::new(rat(-k, 1), rat(-4 * k + 1, 4), rat(3, 4)).map_err(|e| e.to_string())?;
        let s = gauss_at_one(&p).map_err(|e| e.to_string())?;
        ensure(!s.is_zero(), || format!("gauss_at_one vanishes at k = {k}"))?;
        ensure(s == gamma_ratio_terminating(&p).map_err(|e| e.to_string())?, || {
            format!("Γ-ratio mismatch at k = {k}")
        })?;
    }
    Ok(())
}

fn check_solution_equivariance() -> Check {
    let [xf, yf, xyf] = flats();
    for n in 0..=MATRIX_NMAX {
        for u in [&xf, &yf, &xyf] {
            let basis = sol_space(u, n);
            let op = dpi_matrix(u, n);
            ensure(basis.iter().all(|p| op.apply(p).is_zero()), || {
                format!("kernel vector not annihilated at n = {n}")
            })?;
            restricted_action(&basis, n).map_err(|e| format!("n = {n}: {e}"))?;
        }
    }
    Ok(())
}

fn check_containments() -> Check {
    let lam = -Weight::rho();
    let recs = build_operators(&lam).map_err(|e| e.to_string())?;
    let get = |l: &str| select_operators(&recs, l).map(|v| to_sl2(&v[0].u_flat)).map_err(|e| e.to_string());
    let (x, y, y2x, x2y, xy2x) = (get("X")?, get("Y")?, get("Y2X")?, get("X2Y")?, get("XY2X")?);
    for n in 0..=40 {
        for (small, bigs) in [(&x, [&y2x, &xy2x]), (&y, [&x2y, &xy2x])] {
            for p in sol_space(small, n) {
                for big in bigs {
                    ensure(dpi_matrix(big, n).apply(&p).is_zero(), || format!("containment fails at n = {n}"))?;
                }
            }
        }
    }
    Ok(())
}

/// Runs every check against the given character table.
pub fn run_selftest(table: &CharacterTable) -> SelftestReport {
    let checks: Vec<NamedCheck<'_>> = vec![
        ("character table orthonormality", Box::new(|| check_character_table(table))),
        ("adjoint characters of singular vectors", Box::new(|| check_ad_characters(table))),
        ("PBW normal ordering", Box::new(check_pbw)),
        ("Jacobi identity and Cartan involution", Box::new(check_jacobi_and_theta)),
        ("classification at -ρ, -ρ/2 and a generic weight", Box::new(|| check_classification(table))),
        ("flattening goldens and re-expansion", Box::new(check_flattening)),
        ("operator matrices, sl(2) relations, π_n multiplicativity", Box::new(check_operator_matrices)),
        ("solution spaces mod 4", Box::new(check_kernels)),
        ("M̃-structure of solution spaces", Box::new(|| check_m_structure(table))),
        ("K-type tables", Box::new(check_ktype_tables)),
        ("hypergeometric appendix", Box::new(check_hypergeometric)),
        ("kernel annihilation and Q8-equivariance", Box::new(check_solution_equivariance)),
        ("solution-space containments at -ρ", Box::new(check_containments)),
    ];
    SelftestReport { checks: checks.into_iter().map(|(name, f)| CheckResult { name, outcome: f() }).collect() }
}

pub fn cmd_selftest() -> SelftestReport {
    run_selftest(&CharacterTable::standard())
}

/// The standard table with the value of `(+,-)` at `m3` flipped.
pub fn corrupted_table() -> CharacterTable {
    CharacterTable::standard().with_entry(MIrrep::PlusMinus, Q8Element::m(3), int(-1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_table_passes() {
        let report = cmd_selftest();
        assert!(report.passed(), "{}", report.render());
        assert!(report.render().ends_with(&format!("selftest passed: {} checks\n", report.checks.len())));
    }

    #[test]
    fn corrupted_table_fails_on_orthonormality_first() {
        let report = run_selftest(&corrupted_table());
        assert!(!report.passed());
        assert_eq!(report.first_failure().unwrap().name, "character table orthonormality");
        assert!(report.render().contains("FAIL adjoint characters"));
    }
}
