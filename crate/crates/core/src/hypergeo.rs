//! Terminating Gauss hypergeometric series, Euler's operator, the
//! substitution `x = t⁴` behind the second-order kernel, and evaluation at
//! `x = 1`.

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::scalar::{rat, rat_int, GaussRational, Rational};
use crate::su2model::PolyVector;
use crate::{Error, Result};

/// Parameters of `₂F₁[a, b, c; x]` with `c ∉ Z≤0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct F21Params {
    #[serde(with = "crate::scalar::rational_string")]
    a: Rational,
    #[serde(with = "crate::scalar::rational_string")]
    b: Rational,
    #[serde(with = "crate::scalar::rational_string")]
    c: Rational,
}

fn nonpositive_integer(q: &Rational) -> bool {
    q.is_integer() && !q.is_positive()
}

/// `k` when `-q = k ∈ Z≥0`.
fn negated_natural(q: &Rational) -> Option<usize> {
    if nonpositive_integer(q) {
        (-q).to_integer().to_usize()
    } else {
        None
    }
}

/// Rising factorial `(q)_k`.
pub fn pochhammer(q: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, j| acc * (q + rat_int(j as i64)))
}

impl F21Params {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if nonpositive_integer(&c) {
            return Err(Error::Hypergeometric(format!("c = {c} is a nonpositive integer")));
        }
        Ok(F21Params { a, b, c })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    /// Degree in `x` of the polynomial when the series terminates.
    pub fn terminating_degree(&self) -> Option<usize> {
        match (negated_natural(&self.a), negated_natural(&self.b)) {
            (Some(p), Some(q)) => Some(p.min(q)),
            (p, q) => p.or(q),
        }
    }

    /// Coefficients `(a)_k (b)_k / ((c)_k k!)` for `k = 0..=deg`.
    pub fn coefficients(&self, deg: usize) -> Vec<Rational> {
        let mut out = Vec::with_capacity(deg + 1);
        let mut term = Rational::one();
        for k in 0..=deg {
            out.push(term.clone());
            let kk = rat_int(k as i64);
            term = term * (&self.a + &kk) * (&self.b + &kk) / ((&self.c + &kk) * (kk + Rational::one()));
        }
        out
    }
}

/// Result of [`f21_truncate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Truncation {
    Polynomial(PolyVector),
    NonTerminating,
}

impl Truncation {
    pub fn polynomial(&self) -> Option<&PolyVector> {
        match self {
            Truncation::Polynomial(p) => Some(p),
            Truncation::NonTerminating => None,
        }
    }
}

/// `t^shift · ₂F₁[a, b, c; t^power]` in `Pol_{max_deg}[t]`, if the series
/// terminates. Fails if the polynomial does not fit.
fn truncate_shifted(p: &F21Params, power: usize, shift: usize, max_deg: usize) -> Result<Truncation> {
    assert!(power > 0, "substitution power must be positive");
    let Some(deg) = p.terminating_degree() else {
        return Ok(Truncation::NonTerminating);
    };
    let mut coeffs = vec![GaussRational::zero(); max_deg + 1];
    for (k, q) in p.coefficients(deg).into_iter().enumerate() {
        let e = shift + power * k;
        if e > max_deg {
            return Err(Error::Hypergeometric(format!("term x^{k} has degree {e} > {max_deg}")));
        }
        coeffs[e] = GaussRational::from_rational(q);
    }
    Ok(Truncation::Polynomial(PolyVector::new(coeffs, max_deg)?))
}

/// `₂F₁[a, b, c; t^power]` when `-a` or `-b` is a nonnegative integer.
pub fn f21_truncate(p: &F21Params, power: usize, max_deg: usize) -> Result<Truncation> {
    truncate_shifted(p, power, 0, max_deg)
}

/// Parameters of `u_n = ₂F₁[-n/4, -(n-1)/4, 3/4; t⁴]`.
pub fn u_params(n: usize) -> F21Params {
    let n = n as i64;
    F21Params::new(rat(-n, 4), rat(1 - n, 4), rat(3, 4)).expect("c = 3/4")
}

/// Parameters of the series in `v_n = t · ₂F₁[-(n-1)/4, -(n-2)/4, 5/4; t⁴]`.
pub fn v_params(n: usize) -> F21Params {
    let n = n as i64;
    F21Params::new(rat(1 - n, 4), rat(2 - n, 4), rat(5, 4)).expect("c = 5/4")
}

pub fn u_n(n: usize) -> Truncation {
    truncate_shifted(&u_params(n), 4, 0, n).expect("u_n has degree at most n")
}

pub fn v_n(n: usize) -> Truncation {
    truncate_shifted(&v_params(n), 4, 1, n).expect("v_n has degree at most n")
}

/// The polynomial members of `{u_n, v_n}`.
pub fn fundamental_polynomials(n: usize) -> Vec<PolyVector> {
    [u_n(n), v_n(n)].into_iter().filter_map(|t| t.polynomial().cloned()).collect()
}

/// `D[a,b,c;x] f = x(1-x) f'' + (c - (a+b+1)x) f' - ab f` on a polynomial
/// in `x`.
pub fn euler_apply(p: &F21Params, f: &PolyVector) -> PolyVector {
    let n = f.degree_bound();
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let ab = GaussRational::from_rational(a * b);
    let s = GaussRational::from_rational(a + b + Rational::one());
    let c = GaussRational::from_rational(c.clone());
    let mut out = vec![GaussRational::zero(); n + 1];
    for (m, coeff) in f.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let mi = GaussRational::from_int(m as i64);
        // x^m -> m(m - 1 + c) x^(m-1) - ((m)(m-1) + (a+b+1)m + ab) x^m
        if m > 0 {
            let lower = &mi * &(&(&mi - &GaussRational::one()) + &c);
            out[m - 1] += &(coeff * &lower);
        }
        let same = &(&(&mi * &(&mi - &GaussRational::one())) + &(&s * &mi)) + &ab;
        out[m] -= &(coeff * &same);
    }
    PolyVector::new(out, n).expect("degree does not grow")
}

/// `T[n;t] f = (1 - t⁴) f'' + 2(n-1) t³ f' - n(n-1) t² f`. The result lives in
/// `Pol_{N+2}[t]` where `N` is the bound of `f`.
pub fn t_operator_check(n: usize, f: &PolyVector) -> PolyVector {
    let bound = f.degree_bound() + 2;
    let n = n as i64;
    let mut out = vec![GaussRational::zero(); bound + 1];
    for (m, coeff) in f.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let mi = m as i64;
        if m >= 2 {
            out[m - 2] += &(coeff * &GaussRational::from_int(mi * (mi - 1)));
        }
        let up = -(mi - 1) * mi + 2 * (n - 1) * mi - n * (n - 1);
        out[m + 2] += &(coeff * &GaussRational::from_int(up));
    }
    PolyVector::new(out, bound).expect("bound includes the shift")
}

/// `16 t² · D[-n/4, -(n-1)/4, 3/4; x]` with `x = t⁴`, applied to a polynomial
/// in `t` by reading `t^m` as `x^(m/4)` and using
/// `D x^e = e(e + c - 1) x^(e-1) - (e + a)(e + b) x^e`.
pub fn t_operator_via_euler(n: usize, f: &PolyVector) -> PolyVector {
    let p = u_params(n);
    let bound = f.degree_bound() + 2;
    let sixteen = rat_int(16);
    let mut out = vec![GaussRational::zero(); bound + 1];
    for (m, coeff) in f.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let e = rat(m as i64, 4);
        let lower = &e * (&e + &p.c - Rational::one()) * &sixteen;
        let same = (&e + &p.a) * (&e + &p.b) * &sixteen;
        if !lower.is_zero() {
            out[m - 2] += &(coeff * &GaussRational::from_rational(lower));
        }
        out[m + 2] -= &(coeff * &GaussRational::from_rational(same));
    }
    PolyVector::new(out, bound).expect("bound includes the shift")
}

/// `₂F₁[a, b, c; 1]` as a finite sum; requires `-a ∈ Z≥0`.
pub fn gauss_at_one(p: &F21Params) -> Result<GaussRational> {
    let k = negated_natural(&p.a)
        .ok_or_else(|| Error::Hypergeometric(format!("a = {} is not a nonpositive integer", p.a)))?;
    let s: Rational = p.coefficients(k).into_iter().sum();
    Ok(GaussRational::from_rational(s))
}

/// `Γ(c)Γ(c-a-b) / (Γ(c-a)Γ(c-b))` for `a = -k`, telescoped to
/// `(c-b)_k / (c)_k`.
pub fn gamma_ratio_terminating(p: &F21Params) -> Result<GaussRational> {
    let k = negated_natural(&p.a)
        .ok_or_else(|| Error::Hypergeometric(format!("a = {} is not a nonpositive integer", p.a)))?;
    let den = pochhammer(&p.c, k);
    if den.is_zero() {
        return Err(Error::Hypergeometric("(c)_k vanishes".into()));
    }
    Ok(GaussRational::from_rational(pochhammer(&(&p.c - &p.b), k) / den))
}
