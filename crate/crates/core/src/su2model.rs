//! The polynomial model `(π_n, Pol_n[t])` of the irreducible representations
//! of `SU(2)`: exact matrices of `dπ_n(u)`, solution spaces, the action of
//! `M̃ ≅ Q8`, and common solution spaces.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::sl3::{K_MINUS, K_PLUS, K_ZERO};
use crate::algebra::UeaElement;
use crate::linalg::Matrix;
use crate::qmchar::{MRep, Q8Element};
use crate::scalar::GaussRational;
use crate::{Error, Result};

/// A polynomial of degree at most `degree_bound`, stored as its full
/// coefficient list (index `k` holds the coefficient of `t^k`).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PolyVector {
    coeffs: Vec<GaussRational>,
    degree_bound: usize,
}

impl PolyVector {
    /// Zero-pads `coeffs` to length `n + 1`; fails if it is longer.
    pub fn new(mut coeffs: Vec<GaussRational>, n: usize) -> Result<Self> {
        if coeffs.len() > n + 1 {
            if coeffs[n + 1..].iter().any(|c| !c.is_zero()) {
                return Err(Error::Invalid(format!("polynomial has degree above {n}")));
            }
            coeffs.truncate(n + 1);
        }
        coeffs.resize(n + 1, GaussRational::zero());
        Ok(PolyVector { coeffs, degree_bound: n })
    }

    pub fn from_ints(coeffs: &[i64], n: usize) -> Result<Self> {
        PolyVector::new(coeffs.iter().map(|&c| GaussRational::from_int(c)).collect(), n)
    }

    pub fn zero(n: usize) -> Self {
        PolyVector { coeffs: vec![GaussRational::zero(); n + 1], degree_bound: n }
    }

    pub fn monomial(k: usize, n: usize) -> Self {
        let mut p = PolyVector::zero(n);
        p.coeffs[k] = GaussRational::one();
        p
    }

    pub fn coeffs(&self) -> &[GaussRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &GaussRational {
        &self.coeffs[k]
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Actual degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// `p(x)` at a scalar.
    pub fn eval(&self, x: &GaussRational) -> GaussRational {
        self.coeffs.iter().rev().fold(GaussRational::zero(), |acc, c| &(&acc * x) + c)
    }

    /// True if only powers `t^k` with `k ≡ r (mod m)` occur.
    pub fn supported_on_residue(&self, r: usize, m: usize) -> bool {
        self.coeffs.iter().enumerate().all(|(k, c)| c.is_zero() || k % m == r)
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, coeffs: &[GaussRational], var: &str) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if c.is_real() {
            let neg = c.re.is_negative();
            let abs = c.re.abs();
            let body = if abs.is_one() && k > 0 {
                mono
            } else if abs.is_integer() {
                format!("{}{mono}", abs.numer())
            } else if k == 0 {
                format!("{}/{}", abs.numer(), abs.denom())
            } else {
                format!("({}/{}){mono}", abs.numer(), abs.denom())
            };
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
        } else {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){mono}")?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs, "t")
    }
}

impl fmt::Debug for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyVector[n={}]({self})", self.degree_bound)
    }
}

/// Formats a coefficient list as a polynomial in `var`.
pub fn format_poly(coeffs: &[GaussRational], var: &str) -> String {
    struct P<'a>(&'a [GaussRational], &'a str);
    impl fmt::Display for P<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_poly(f, self.0, self.1)
        }
    }
    P(coeffs, var).to_string()
}

/// An operator on `Pol_n[t]` in the monomial basis.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyOpMatrix {
    entries: Matrix,
    degree_bound: usize,
}

impl PolyOpMatrix {
    pub fn new(entries: Matrix, n: usize) -> Self {
        assert!(entries.rows() == n + 1 && entries.cols() == n + 1, "matrix must be (n+1)x(n+1)");
        PolyOpMatrix { entries, degree_bound: n }
    }

    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn apply(&self, p: &PolyVector) -> PolyVector {
        assert_eq!(p.degree_bound, self.degree_bound);
        PolyVector { coeffs: self.entries.apply(&p.coeffs), degree_bound: self.degree_bound }
    }

    pub fn compose(&self, other: &PolyOpMatrix) -> PolyOpMatrix {
        PolyOpMatrix::new(&self.entries * &other.entries, self.degree_bound)
    }

    pub fn commutator(&self, other: &PolyOpMatrix) -> PolyOpMatrix {
        PolyOpMatrix::new(self.entries.commutator(&other.entries), self.degree_bound)
    }

    pub fn scale(&self, c: &GaussRational) -> PolyOpMatrix {
        PolyOpMatrix::new(self.entries.scale(c), self.degree_bound)
    }
}

impl fmt::Debug for PolyOpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyOpMatrix[n={}]{:?}", self.degree_bound, self.entries)
    }
}

/// `dπ_n(E)` applied to `t^k`, as a single term `(c, k')` (or none).
fn generator_on_monomial(g: u8, k: usize, n: usize) -> Option<(GaussRational, usize)> {
    let (k_i, n_i) = (k as i64, n as i64);
    match g {
        K_PLUS if k > 0 => Some((GaussRational::from_int(-k_i), k - 1)),
        K_PLUS => None,
        K_MINUS if k < n => Some((GaussRational::from_int(k_i - n_i), k + 1)),
        K_MINUS => None,
        K_ZERO => Some((GaussRational::from_int(n_i - 2 * k_i), k)),
        _ => panic!("sl(2) generator index {g} out of range"),
    }
}

/// Matrix of `dπ_n(u)` for `u ∈ U(sl2)` over `E+, E-, E0`:
/// `E+ = -d/dt`, `E- = -nt + t² d/dt`, `E0 = n - 2t d/dt`.
/// A word `g1 g2 … gr` acts as `dπ(g1) ∘ dπ(g2) ∘ … ∘ dπ(gr)`.
pub fn dpi_matrix(u: &UeaElement, n: usize) -> PolyOpMatrix {
    let mut m = Matrix::zeros(n + 1, n + 1);
    for k in 0..=n {
        for (w, c) in u.terms() {
            let mut term = Some((c.clone(), k));
            for &g in w.iter().rev() {
                term = term.and_then(|(c, j)| generator_on_monomial(g, j, n).map(|(s, j2)| (&c * &s, j2)));
            }
            if let Some((c, j)) = term {
                m[(j, k)] += &c;
            }
        }
    }
    PolyOpMatrix::new(m, n)
}

/// Matrix of `Σ c · t^p (d/dt)^q` on `Pol_n[t]`. Fails unless the sum maps
/// `Pol_n[t]` into itself (individual terms may overshoot and cancel).
pub fn differential_operator(terms: &[(GaussRational, usize, usize)], n: usize) -> Result<PolyOpMatrix> {
    let top = n + terms.iter().map(|t| t.1).max().unwrap_or(0);
    let mut m = Matrix::zeros(top + 1, n + 1);
    for k in 0..=n {
        for (c, p, q) in terms {
            if k < *q {
                continue;
            }
            let falling: i64 = (0..*q).map(|i| (k - i) as i64).product();
            m[(k - q + p, k)] += &(c * &GaussRational::from_int(falling));
        }
    }
    let mut out = Matrix::zeros(n + 1, n + 1);
    for i in 0..=top {
        for k in 0..=n {
            if i > n && !m[(i, k)].is_zero() {
                return Err(Error::Invalid(format!("operator maps t^{k} outside Pol_{n}")));
            }
            if i <= n {
                out[(i, k)] = m[(i, k)].clone();
            }
        }
    }
    Ok(PolyOpMatrix::new(out, n))
}

/// `(x t + y)^e` as a coefficient list.
fn linear_power(x: &GaussRational, y: &GaussRational, e: usize) -> Vec<GaussRational> {
    let mut out = vec![GaussRational::zero(); e + 1];
    if x.is_zero() {
        out[0] = y.pow(e as i64);
        return out;
    }
    if y.is_zero() {
        out[e] = x.pow(e as i64);
        return out;
    }
    let mut binom = GaussRational::one();
    for (i, c) in out.iter_mut().enumerate() {
        *c = &(&binom * &x.pow(i as i64)) * &y.pow((e - i) as i64);
        binom = &(&binom * &GaussRational::from_int((e - i) as i64)) / &GaussRational::from_int(i as i64 + 1);
    }
    out
}

/// `(at + b)^k (ct + d)^{n-k}` with `g⁻¹ = [[a, b], [c, d]]`, the image of `t^k`
/// under `π_n(g)`, added into `out` with weight `w`.
fn add_group_image(inv: &Matrix, k: usize, n: usize, w: &GaussRational, out: &mut [GaussRational]) {
    let (a, b, c, d) = (&inv[(0, 0)], &inv[(0, 1)], &inv[(1, 0)], &inv[(1, 1)]);
    let p = linear_power(a, b, k);
    let q = linear_power(c, d, n - k);
    for (i, x) in p.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let wx = w * x;
        for (j, y) in q.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += &(&wx * y);
            }
        }
    }
}

/// Matrix of `π_n(g)`, `(π_n(g)p)(t) = (ct + d)^n p((at + b)/(ct + d))` with
/// `g⁻¹ = [[a, b], [c, d]]`. Column `k` is `(at + b)^k (ct + d)^{n-k}`.
pub fn group_action_matrix(g: Q8Element, n: usize) -> PolyOpMatrix {
    let inv = g.inverse().matrix2();
    let mut m = Matrix::zeros(n + 1, n + 1);
    let one = GaussRational::one();
    for k in 0..=n {
        let mut col = vec![GaussRational::zero(); n + 1];
        add_group_image(&inv, k, n, &one, &mut col);
        for (i, x) in col.into_iter().enumerate() {
            m[(i, k)] = x;
        }
    }
    PolyOpMatrix::new(m, n)
}

/// `π_n(g) p` without forming the matrix.
pub fn group_apply(g: Q8Element, p: &PolyVector) -> PolyVector {
    let inv = g.inverse().matrix2();
    let n = p.degree_bound;
    let mut out = vec![GaussRational::zero(); n + 1];
    for (k, w) in p.coeffs.iter().enumerate() {
        if !w.is_zero() {
            add_group_image(&inv, k, n, w, &mut out);
        }
    }
    PolyVector { coeffs: out, degree_bound: n }
}

fn kernel_vectors(m: &Matrix, n: usize) -> Vec<PolyVector> {
    m.kernel().into_iter().map(|coeffs| PolyVector { coeffs, degree_bound: n }).collect()
}

/// `{p ∈ Pol_n[t] : dπ_n(u) p = 0}` in reduced echelon form.
pub fn sol_space(u_flat: &UeaElement, n: usize) -> Vec<PolyVector> {
    kernel_vectors(dpi_matrix(u_flat, n).entries(), n)
}

/// Common kernel of several operators.
pub fn common_sol(u_flats: &[UeaElement], n: usize) -> Vec<PolyVector> {
    assert!(!u_flats.is_empty(), "common_sol needs at least one operator");
    let stacked =
        u_flats.iter().map(|u| dpi_matrix(u, n).entries().clone()).reduce(|acc, m| acc.vstack(&m)).expect("nonempty");
    kernel_vectors(&stacked, n)
}

/// Index of the first nonzero coefficient of each basis vector.
fn pivots(basis: &[PolyVector]) -> Vec<usize> {
    basis.iter().map(|v| v.coeffs.iter().position(|c| !c.is_zero()).expect("nonzero basis vector")).collect()
}

/// Matrix of an operator restricted to the span of an echelon basis. Fails
/// if the span is not invariant.
pub fn restrict(op: &PolyOpMatrix, basis: &[PolyVector]) -> Result<Matrix> {
    restrict_map(|v| op.apply(v), basis)
}

fn restrict_map(op: impl Fn(&PolyVector) -> PolyVector, basis: &[PolyVector]) -> Result<Matrix> {
    let piv = pivots(basis);
    let mut m = Matrix::zeros(basis.len(), basis.len());
    for (col, v) in basis.iter().enumerate() {
        let image = op(v);
        let coords: Vec<GaussRational> = piv.iter().map(|&p| image.coeffs[p].clone()).collect();
        let mut rebuilt = PolyVector::zero(v.degree_bound);
        for (c, b) in coords.iter().zip(basis) {
            for (k, x) in b.coeffs.iter().enumerate() {
                if !x.is_zero() {
                    rebuilt.coeffs[k] += &(c * x);
                }
            }
        }
        if rebuilt != image {
            return Err(Error::Invalid("subspace is not invariant under the operator".into()));
        }
        for (row, c) in coords.into_iter().enumerate() {
            m[(row, col)] = c;
        }
    }
    Ok(m)
}

/// The `Q8` action on a solution space given by an echelon basis.
pub fn restricted_action(basis: &[PolyVector], n: usize) -> Result<MRep> {
    if let Some(b) = basis.iter().find(|b| b.degree_bound != n) {
        return Err(Error::Invalid(format!("basis vector lives in Pol_{}, not Pol_{n}", b.degree_bound)));
    }
    if basis.is_empty() {
        return Ok(MRep::from_fn(|_| Matrix::zeros(0, 0)));
    }
    let mats: Vec<Result<Matrix>> =
        Q8Element::ALL.iter().map(|&g| restrict_map(|v| group_apply(g, v), basis)).collect();
    let mut mats = mats.into_iter().collect::<Result<Vec<_>>>()?.into_iter();
    Ok(MRep::from_fn(|_| mats.next().expect("one matrix per element")))
}
