//! Universal enveloping algebra elements over a fixed ordered basis, and the
//! PBW normal-ordering engine.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::linalg::Matrix;
use crate::scalar::GaussRational;
use crate::Error;

/// A word in basis indices; the monomial `e_{w[0]} e_{w[1]} ...`.
pub type Word = Vec<u8>;

/// Finite linear combination of words. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UeaElement {
    terms: BTreeMap<Word, GaussRational>,
}

impl UeaElement {
    pub fn zero() -> Self {
        UeaElement::default()
    }

    pub fn one() -> Self {
        UeaElement::monomial(Vec::new(), GaussRational::one())
    }

    pub fn scalar(c: GaussRational) -> Self {
        UeaElement::monomial(Vec::new(), c)
    }

    pub fn generator(i: u8) -> Self {
        UeaElement::monomial(vec![i], GaussRational::one())
    }

    pub fn word(w: &[u8]) -> Self {
        UeaElement::monomial(w.to_vec(), GaussRational::one())
    }

    pub fn monomial(w: Word, c: GaussRational) -> Self {
        let mut e = UeaElement::zero();
        e.add_term(w, c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, GaussRational)>>(terms: I) -> Self {
        let mut e = UeaElement::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    /// Adds `c * w`, dropping the entry if it cancels.
    pub fn add_term(&mut self, w: Word, c: GaussRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &GaussRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &[u8]) -> GaussRational {
        self.terms.get(w).cloned().unwrap_or_else(GaussRational::zero)
    }

    /// Longest word length (0 for scalars and for zero).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        if c.is_zero() {
            return UeaElement::zero();
        }
        UeaElement { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    /// True when every generator index lies in `allowed`.
    pub fn uses_only(&self, allowed: &[u8]) -> bool {
        self.terms.keys().all(|w| w.iter().all(|g| allowed.contains(g)))
    }

    /// Renames generators via `map[i]`.
    pub fn relabel(&self, map: &[u8]) -> Self {
        UeaElement::from_terms(
            self.terms.iter().map(|(w, c)| (w.iter().map(|&g| map[g as usize]).collect(), c.clone())),
        )
    }

    /// Substitutes each generator by an element and multiplies out (no
    /// normalization).
    pub fn substitute(&self, images: &[UeaElement]) -> Self {
        let mut out = UeaElement::zero();
        for (w, c) in &self.terms {
            let mut acc = UeaElement::scalar(c.clone());
            for &g in w {
                acc = &acc * &images[g as usize];
            }
            out = &out + &acc;
        }
        out
    }

    /// Formats with the given generator names, collapsing runs into powers.
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (w, c) in &self.terms {
            let mono = render_word(w, names);
            let (neg, coeff) = render_coefficient(c);
            let body = match (coeff.as_str(), mono.is_empty()) {
                ("1", true) => "1".to_string(),
                ("1", false) => mono,
                (_, true) => coeff,
                (_, false) => format!("{coeff}*{mono}"),
            };
            parts.push((neg, body));
        }
        let mut out = String::new();
        for (k, (neg, body)) in parts.into_iter().enumerate() {
            match (k == 0, neg) {
                (true, false) => {}
                (true, true) => out.push('-'),
                (false, false) => out.push_str(" + "),
                (false, true) => out.push_str(" - "),
            }
            out.push_str(&body);
        }
        out
    }
}

fn render_word(w: &[u8], names: &[&str]) -> String {
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let name = names[w[i] as usize];
        if j - i == 1 {
            out.push(name.to_string());
        } else {
            out.push(format!("{name}^{}", j - i));
        }
        i = j;
    }
    out.join("*")
}

/// Splits a coefficient into a sign and a magnitude string when the sign is
/// unambiguous (real, or purely imaginary).
fn render_coefficient(c: &GaussRational) -> (bool, String) {
    use num_traits::Signed;
    if c.im.is_zero() {
        let neg = c.re.is_negative();
        return (neg, GaussRational::from_rational(c.re.abs()).to_string());
    }
    if c.re.is_zero() {
        let neg = c.im.is_negative();
        let mag = GaussRational::new(c.re.clone(), c.im.abs());
        return (neg, mag.to_string());
    }
    (false, format!("({c})"))
}

impl Add<&UeaElement> for &UeaElement {
    type Output = UeaElement;
    fn add(self, rhs: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub<&UeaElement> for &UeaElement {
    type Output = UeaElement;
    fn sub(self, rhs: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &UeaElement {
    type Output = UeaElement;
    fn neg(self) -> UeaElement {
        self.scale(&-GaussRational::one())
    }
}

/// Concatenation product (free algebra); normalize afterwards to compute in
/// the enveloping algebra.
impl Mul<&UeaElement> for &UeaElement {
    type Output = UeaElement;
    fn mul(self, rhs: &UeaElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x * y);
            }
        }
        out
    }
}

impl fmt::Debug for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..=u8::MAX).map(|i| format!("e{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.display_with(&refs))
    }
}

/// A total order on basis indices, stored as ranks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisOrder {
    rank: Vec<u8>,
}

impl BasisOrder {
    /// `sequence` lists basis indices from smallest to largest.
    pub fn from_sequence(sequence: &[u8]) -> Result<Self, Error> {
        let n = sequence.len();
        let mut rank = vec![u8::MAX; n];
        for (r, &i) in sequence.iter().enumerate() {
            let slot =
                rank.get_mut(i as usize).ok_or_else(|| Error::Invalid(format!("basis index {i} out of range")))?;
            if *slot != u8::MAX {
                return Err(Error::Invalid(format!("basis index {i} repeated in order")));
            }
            *slot = r as u8;
        }
        Ok(BasisOrder { rank })
    }

    pub fn natural(n: usize) -> Self {
        BasisOrder { rank: (0..n as u8).collect() }
    }

    pub fn rank(&self, i: u8) -> u8 {
        self.rank[i as usize]
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn is_normal(&self, w: &[u8]) -> bool {
        w.windows(2).all(|p| self.rank(p[0]) <= self.rank(p[1]))
    }

    fn inversions(&self, w: &[u8]) -> usize {
        let mut n = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if self.rank(w[i]) > self.rank(w[j]) {
                    n += 1;
                }
            }
        }
        n
    }
}

/// A finite-dimensional Lie algebra given by a basis of square matrices,
/// with structure constants computed from the matrix commutator.
#[derive(Clone)]
pub struct LieAlgebra {
    names: Vec<String>,
    basis: Vec<Matrix>,
    /// Flattened basis vectors as columns, for coordinate solves.
    coordinate_system: Matrix,
    /// `brackets[i][j]` = sparse expansion of `[e_i, e_j]`.
    brackets: Vec<Vec<Vec<(u8, GaussRational)>>>,
}

fn flatten(m: &Matrix) -> Vec<GaussRational> {
    (0..m.rows()).flat_map(|i| (0..m.cols()).map(move |j| (i, j))).map(|ij| m[ij].clone()).collect()
}

impl LieAlgebra {
    /// Fails if the matrices are dependent or not closed under the bracket.
    pub fn from_matrices(names: &[&str], basis: Vec<Matrix>) -> Result<Self, Error> {
        if names.len() != basis.len() || basis.is_empty() || basis.len() > u8::MAX as usize {
            return Err(Error::Invalid("basis/name length mismatch".into()));
        }
        let size = basis[0].rows();
        if basis.iter().any(|m| m.rows() != size || m.cols() != size) {
            return Err(Error::Invalid("basis matrices must share one square shape".into()));
        }
        let cols: Vec<Vec<GaussRational>> = basis.iter().map(flatten).collect();
        let coordinate_system = Matrix::from_columns(&cols, size * size);
        if coordinate_system.rank() != basis.len() {
            return Err(Error::Invalid("basis matrices are linearly dependent".into()));
        }
        let mut alg = LieAlgebra {
            names: names.iter().map(|s| s.to_string()).collect(),
            basis,
            coordinate_system,
            brackets: Vec::new(),
        };
        let n = alg.basis.len();
        let mut brackets = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let c = alg.basis[i].commutator(&alg.basis[j]);
                let coords = alg
                    .coordinates(&c)
                    .ok_or_else(|| Error::Invalid(format!("[{}, {}] leaves the span", names[i], names[j])))?;
                brackets[i][j] =
                    coords.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k as u8, x)).collect();
            }
        }
        alg.brackets = brackets;
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn names(&self) -> Vec<&str> {
        self.names.iter().map(String::as_str).collect()
    }

    pub fn basis_matrix(&self, i: u8) -> &Matrix {
        &self.basis[i as usize]
    }

    /// Coordinates of a matrix in this basis, if it lies in the span.
    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<GaussRational>> {
        self.coordinate_system.solve(&flatten(m))
    }

    /// Degree-one element with the given coordinates.
    pub fn linear_element(&self, coords: &[GaussRational]) -> UeaElement {
        UeaElement::from_terms(coords.iter().enumerate().map(|(i, c)| (vec![i as u8], c.clone())))
    }

    /// `Σ c_i e_i` as a matrix.
    pub fn matrix_of(&self, coords: &[GaussRational]) -> Matrix {
        let n = self.basis[0].rows();
        coords.iter().zip(&self.basis).fold(Matrix::zeros(n, n), |acc, (c, b)| &acc + &b.scale(c))
    }

    pub fn bracket(&self, i: u8, j: u8) -> &[(u8, GaussRational)] {
        &self.brackets[i as usize][j as usize]
    }

    pub fn display(&self, e: &UeaElement) -> String {
        e.display_with(&self.names())
    }

    /// PBW normal ordering: rewrites `expr` so that every word is
    /// nondecreasing in `order`, using `ab = ba + [a,b]` at the first
    /// descent. Words are processed longest first and most-inverted first, so
    /// equal intermediate words merge before they are expanded.
    pub fn normalize(&self, expr: &UeaElement, order: &BasisOrder) -> UeaElement {
        assert_eq!(order.len(), self.dim(), "order does not match algebra dimension");
        let mut pending: BTreeMap<(usize, usize, Word), GaussRational> = BTreeMap::new();
        let push = |pending: &mut BTreeMap<(usize, usize, Word), GaussRational>, w: Word, c: GaussRational| {
            if c.is_zero() {
                return;
            }
            let key = (w.len(), order.inversions(&w), w);
            match pending.entry(key) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() += &c;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        };
        for (w, c) in expr.terms() {
            push(&mut pending, w.clone(), c.clone());
        }
        let mut out = UeaElement::zero();
        while let Some(((_, inv, w), c)) = pending.pop_last() {
            if inv == 0 {
                out.add_term(w, c);
                continue;
            }
            let p =
                (0..w.len() - 1).find(|&p| order.rank(w[p]) > order.rank(w[p + 1])).expect("inversion count positive");
            let (a, b) = (w[p], w[p + 1]);
            let mut swapped = w.clone();
            swapped.swap(p, p + 1);
            push(&mut pending, swapped, c.clone());
            for (k, s) in self.bracket(a, b) {
                let mut shorter = Vec::with_capacity(w.len() - 1);
                shorter.extend_from_slice(&w[..p]);
                shorter.push(*k);
                shorter.extend_from_slice(&w[p + 2..]);
                push(&mut pending, shorter, &c * s);
            }
        }
        out
    }

    /// `normalize(a * b)`.
    pub fn product(&self, a: &UeaElement, b: &UeaElement, order: &BasisOrder) -> UeaElement {
        self.normalize(&(a * b), order)
    }

    /// Applies a Lie algebra automorphism given on generators (as degree-one
    /// coordinate vectors) multiplicatively to every word.
    pub fn apply_automorphism(&self, e: &UeaElement, images: &[Vec<GaussRational>]) -> UeaElement {
        let imgs: Vec<UeaElement> = images.iter().map(|c| self.linear_element(c)).collect();
        e.substitute(&imgs)
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra{:?}", self.names)
    }
}
