use num_traits::Zero;

use sl3ido::hypergeo::{
    euler_apply, f21_truncate, fundamental_polynomials, gamma_ratio_terminating, gauss_at_one, pochhammer,
    t_operator_check, t_operator_via_euler, u_n, v_n, F21Params, Truncation,
};
use sl3ido::kflat::{flatten, to_sl2};
use sl3ido::linalg::Matrix;
use sl3ido::scalar::rat;
use sl3ido::su2model::{sol_space, PolyVector};
use sl3ido::{GaussRational, Weight};

fn xcy_flat() -> sl3ido::algebra::UeaElement {
    let two_xy_z = sl3ido::algebra::UeaElement::from_terms([
        (vec![0, 1], GaussRational::from_int(2)),
        (vec![2], GaussRational::from_int(1)),
    ]);
    to_sl2(&flatten(&two_xy_z, &-Weight::rho_half()))
}

#[test]
fn fundamental_pair_spans_the_kernel() {
    let op = xcy_flat();
    for n in 0..=40usize {
        let fund = fundamental_polynomials(n);
        let kernel = sol_space(&op, n);
        assert_eq!(fund.len(), kernel.len(), "n = {n}");
        for p in &fund {
            assert!(t_operator_check(n, p).is_zero(), "n = {n}");
        }
        if !kernel.is_empty() {
            let rows: Vec<_> = fund.iter().chain(&kernel).map(|p| p.coeffs().to_vec()).collect();
            assert_eq!(Matrix::from_rows(rows).rank(), kernel.len(), "n = {n}");
        }
    }
}

#[test]
fn polynomial_status_follows_n_mod_4() {
    for n in 0..=40usize {
        let status = (u_n(n).polynomial().is_some(), v_n(n).polynomial().is_some());
        let want = [(true, false), (true, true), (false, true), (false, false)][n % 4];
        assert_eq!(status, want, "n = {n}");
    }
}

#[test]
fn u4_and_v1_closed_forms() {
    // u_4 = F(-1, -3/4; 3/4; t⁴) = 1 + t⁴, v_1 = t.
    assert_eq!(u_n(4).polynomial().unwrap(), &PolyVector::from_ints(&[1, 0, 0, 0, 1], 4).unwrap());
    assert_eq!(v_n(1).polynomial().unwrap(), &PolyVector::from_ints(&[0, 1], 1).unwrap());
}

#[test]
fn euler_operator_kills_terminating_series() {
    for k in 0..=12i64 {
        for (b, c) in [((1, 3), (3, 4)), ((-5, 2), (5, 4)), ((7, 1), (1, 2))] {
            let p = F21Params::new(rat(-k, 1), rat(b.0, b.1), rat(c.0, c.1)).unwrap();
            let Truncation::Polynomial(f) = f21_truncate(&p, 1, 40).unwrap() else {
                panic!("a = -{k} terminates");
            };
            assert_eq!(f.coeff(0), &GaussRational::from_int(1));
            assert!(f.degree().unwrap() <= k as usize);
            assert!(euler_apply(&p, &f).is_zero(), "k = {k}");
        }
    }
}

#[test]
fn non_terminating_series_is_reported() {
    let p = F21Params::new(rat(1, 3), rat(1, 5), rat(1, 2)).unwrap();
    assert_eq!(f21_truncate(&p, 1, 30).unwrap(), Truncation::NonTerminating);
    assert!(F21Params::new(rat(1, 1), rat(1, 1), rat(-2, 1)).is_err());
}

#[test]
fn t_operator_agrees_with_substituted_euler_operator() {
    for n in 0..=24usize {
        for k in 0..=n {
            let p = PolyVector::monomial(k, n);
            assert_eq!(t_operator_check(n, &p), t_operator_via_euler(n, &p), "n = {n}, t^{k}");
        }
    }
}

#[test]
fn gauss_sum_matches_gamma_ratio() {
    for k in 0..=25i64 {
        let p = F21Params::new(rat(-k, 1), rat(-4 * k + 1, 4), rat(3, 4)).unwrap();
        let s = gauss_at_one(&p).unwrap();
        assert!(!s.is_zero(), "k = {k}");
        assert_eq!(s, gamma_ratio_terminating(&p).unwrap(), "k = {k}");
        let direct = &pochhammer(&(rat(3, 4) - rat(-4 * k + 1, 4)), k as usize) / &pochhammer(&rat(3, 4), k as usize);
        assert_eq!(s, GaussRational::from_rational(direct));
    }
    let p = F21Params::new(rat(1, 2), rat(1, 1), rat(3, 1)).unwrap();
    assert!(gauss_at_one(&p).is_err());
}
