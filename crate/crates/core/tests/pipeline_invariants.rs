use std::sync::OnceLock;

use sl3ido::exec::Execution;
use sl3ido::kflat::to_sl2;
use sl3ido::pipeline::{build_operators, infer_pattern, select_operators, solution_sweep, KTypeTable, SolutionRow};
use sl3ido::qmchar::MIrrep;
use sl3ido::su2model::{dpi_matrix, sol_space};
use sl3ido::Weight;

const N_MAX: usize = 60;

fn sweep(lambda: Weight, selector: &str) -> Vec<SolutionRow> {
    let ops = build_operators(&lambda).unwrap();
    let flats: Vec<_> = select_operators(&ops, selector).unwrap().iter().map(|r| r.u_flat.clone()).collect();
    solution_sweep(&flats, N_MAX, Execution::default()).unwrap()
}

fn xcy() -> &'static [SolutionRow] {
    static S: OnceLock<Vec<SolutionRow>> = OnceLock::new();
    S.get_or_init(|| sweep(-Weight::rho_half(), "XcY"))
}

fn x() -> &'static [SolutionRow] {
    static S: OnceLock<Vec<SolutionRow>> = OnceLock::new();
    S.get_or_init(|| sweep(-Weight::rho(), "X"))
}

#[test]
fn multiplicities_account_for_the_whole_kernel() {
    for rows in [xcy(), x()] {
        for r in rows {
            let total: usize = MIrrep::ALL.iter().map(|&s| s.dim() * r.mrep.count(s) as usize).sum();
            assert_eq!(total, r.kernel_basis.len(), "n = {}", r.n);
        }
    }
}

#[test]
fn genuine_irrep_only_on_odd_rows() {
    for r in xcy() {
        let h = r.mrep.count(MIrrep::H);
        let signs: u32 = MIrrep::SIGNS.iter().map(|&s| r.mrep.count(s)).sum();
        if r.n % 2 == 1 {
            assert_eq!(signs, 0, "n = {}", r.n);
            assert_eq!(h > 0, r.n % 4 == 1, "n = {}", r.n);
        } else {
            assert_eq!(h, 0, "n = {}", r.n);
        }
    }
}

#[test]
fn residue_three_family_is_missing() {
    for sigma in MIrrep::ALL {
        let t = KTypeTable::from_sweep("XcY", &-Weight::rho_half(), sigma, xcy());
        assert!(t.support().iter().all(|n| n % 4 != 3), "{sigma}: {:?}", t.support());
    }
    assert!(xcy().iter().filter(|r| r.n % 4 == 3).all(|r| r.kernel_basis.is_empty()));
}

#[test]
fn solution_spaces_are_nested_at_minus_rho() {
    let ops = build_operators(&-Weight::rho()).unwrap();
    let op = |l: &str| to_sl2(&select_operators(&ops, l).unwrap()[0].u_flat);
    let pairs = [("X", ["Y2X", "XY2X"]), ("Y", ["X2Y", "XY2X"])];
    for n in 0..=40 {
        for (small, bigs) in pairs {
            let basis = sol_space(&op(small), n);
            for big in bigs {
                let m = dpi_matrix(&op(big), n);
                assert!(basis.iter().all(|p| m.apply(p).is_zero()), "Sol_{small}({n}) ⊄ Sol_{big}({n})");
            }
        }
    }
}

#[test]
fn sequential_and_parallel_sweeps_agree() {
    let ops = build_operators(&-Weight::rho()).unwrap();
    let flats: Vec<_> = select_operators(&ops, "X,Y").unwrap().iter().map(|r| r.u_flat.clone()).collect();
    let a = solution_sweep(&flats, 24, Execution::Sequential).unwrap();
    let b = solution_sweep(&flats, 24, Execution::Parallel).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.iter().map(|r| r.n).collect::<Vec<_>>(), (0..=24).collect::<Vec<_>>());
}

#[test]
fn inferred_patterns() {
    let t = KTypeTable::from_sweep("X", &-Weight::rho(), MIrrep::PlusMinus, x());
    let p = infer_pattern(&t);
    assert_eq!((p.progressions.len(), p.progressions[0].residue, p.progressions[0].modulus), (1, 2, 4));
    assert!(p.exceptions.is_empty() && !p.irregular && !p.low_confidence);
    assert!(p.describe().contains("verified for n ≤ 60"));

    let t = KTypeTable::from_sweep("XcY", &-Weight::rho_half(), MIrrep::MinusPlus, xcy());
    let p = infer_pattern(&t);
    assert!(p.progressions.is_empty() && !p.irregular);

    let short = KTypeTable::from_sweep("XcY", &-Weight::rho_half(), MIrrep::H, &xcy()[..=10]);
    let p = infer_pattern(&short);
    assert!(p.low_confidence);
}
