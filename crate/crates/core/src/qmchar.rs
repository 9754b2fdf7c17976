//! The quaternion group `M̃ ≅ Q8`, its five irreducible characters, the
//! adjoint action of `M` on weight lines of `U(n̄)`, and decomposition of
//! finite-dimensional `Q8`-representations by character orthogonality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::sl3::{root_algebra, NBAR};
use crate::algebra::UeaElement;
use crate::linalg::Matrix;
use crate::scalar::GaussRational;
use crate::{Error, Result};

/// `±m̃_j` for `j = 0..3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Q8Element {
    pub negative: bool,
    pub j: u8,
}

impl Q8Element {
    /// The order used everywhere: `m̃0, m̃1, m̃2, m̃3, -m̃0, -m̃1, -m̃2, -m̃3`.
    pub const ALL: [Q8Element; 8] = [
        Q8Element { negative: false, j: 0 },
        Q8Element { negative: false, j: 1 },
        Q8Element { negative: false, j: 2 },
        Q8Element { negative: false, j: 3 },
        Q8Element { negative: true, j: 0 },
        Q8Element { negative: true, j: 1 },
        Q8Element { negative: true, j: 2 },
        Q8Element { negative: true, j: 3 },
    ];

    pub const IDENTITY: Q8Element = Q8Element { negative: false, j: 0 };
    pub const MINUS_ONE: Q8Element = Q8Element { negative: true, j: 0 };

    pub fn m(j: u8) -> Q8Element {
        assert!(j < 4, "m̃_{j} does not exist");
        Q8Element { negative: false, j }
    }

    /// Position in [`Q8Element::ALL`].
    pub fn index(self) -> usize {
        self.j as usize + if self.negative { 4 } else { 0 }
    }

    pub fn label(self) -> String {
        format!("{}m{}", if self.negative { "-" } else { "" }, self.j)
    }

    /// The 2x2 matrix in `SU(2)`.
    pub fn matrix2(self) -> Matrix {
        let i = GaussRational::i();
        let one = GaussRational::one();
        let zero = GaussRational::zero();
        let m = match self.j {
            0 => Matrix::identity(2),
            1 => Matrix::from_rows(vec![vec![i.clone(), zero.clone()], vec![zero, -i]]),
            2 => Matrix::from_int_rows(&[&[0, 1], &[-1, 0]]),
            _ => Matrix::from_rows(vec![vec![zero.clone(), i.clone()], vec![i, zero]]),
        };
        if self.negative {
            m.scale(&-one)
        } else {
            m
        }
    }

    /// The image `m_j` in `SO(3)`; the sign is forgotten.
    pub fn matrix3(self) -> Matrix {
        let d: [i64; 3] = match self.j {
            0 => [1, 1, 1],
            1 => [-1, 1, -1],
            2 => [1, -1, -1],
            _ => [-1, -1, 1],
        };
        Matrix::from_int_rows(&[&[d[0], 0, 0], &[0, d[1], 0], &[0, 0, d[2]]])
    }

    pub fn inverse(self) -> Q8Element {
        *Q8Element::ALL.iter().find(|&&g| self * g == Q8Element::IDENTITY).expect("Q8 is a group")
    }
}

/// Group law, read off from the 2x2 model.
impl Mul for Q8Element {
    type Output = Q8Element;
    fn mul(self, other: Q8Element) -> Q8Element {
        let p = &self.matrix2() * &other.matrix2();
        *Q8Element::ALL.iter().find(|g| g.matrix2() == p).expect("Q8 is closed")
    }
}

impl Neg for Q8Element {
    type Output = Q8Element;
    fn neg(self) -> Q8Element {
        Q8Element { negative: !self.negative, j: self.j }
    }
}

impl fmt::Debug for Q8Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl fmt::Display for Q8Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// The irreducible representations of `M̃`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MIrrep {
    #[serde(rename = "++")]
    PlusPlus,
    #[serde(rename = "+-")]
    PlusMinus,
    #[serde(rename = "-+")]
    MinusPlus,
    #[serde(rename = "--")]
    MinusMinus,
    H,
}

impl MIrrep {
    pub const ALL: [MIrrep; 5] =
        [MIrrep::PlusPlus, MIrrep::PlusMinus, MIrrep::MinusPlus, MIrrep::MinusMinus, MIrrep::H];

    pub const SIGNS: [MIrrep; 4] = [MIrrep::PlusPlus, MIrrep::PlusMinus, MIrrep::MinusPlus, MIrrep::MinusMinus];

    pub fn dim(self) -> usize {
        match self {
            MIrrep::H => 2,
            _ => 1,
        }
    }

    /// Short selector form: `++`, `+-`, `-+`, `--`, `H`.
    pub fn code(self) -> &'static str {
        match self {
            MIrrep::PlusPlus => "++",
            MIrrep::PlusMinus => "+-",
            MIrrep::MinusPlus => "-+",
            MIrrep::MinusMinus => "--",
            MIrrep::H => "H",
        }
    }

    /// Display form: `(+,+)` or `H`.
    pub fn label(self) -> &'static str {
        match self {
            MIrrep::PlusPlus => "(+,+)",
            MIrrep::PlusMinus => "(+,-)",
            MIrrep::MinusPlus => "(-,+)",
            MIrrep::MinusMinus => "(-,-)",
            MIrrep::H => "H",
        }
    }

    /// Values of a sign character at `m1, m2, m3`.
    fn signs(self) -> Option<[i64; 3]> {
        match self {
            MIrrep::PlusPlus => Some([1, 1, 1]),
            MIrrep::PlusMinus => Some([-1, -1, 1]),
            MIrrep::MinusPlus => Some([-1, 1, -1]),
            MIrrep::MinusMinus => Some([1, -1, -1]),
            MIrrep::H => None,
        }
    }

    /// Character value from the standard table.
    pub fn character(self, g: Q8Element) -> GaussRational {
        match self.signs() {
            Some(s) => GaussRational::from_int(if g.j == 0 { 1 } else { s[g.j as usize - 1] }),
            None if g.j == 0 => GaussRational::from_int(if g.negative { -2 } else { 2 }),
            None => GaussRational::zero(),
        }
    }

    /// The sign character taking the given values on `m1, m2, m3`.
    pub fn from_signs(values: [i64; 3]) -> Option<MIrrep> {
        MIrrep::SIGNS.into_iter().find(|s| s.signs() == Some(values))
    }

    pub fn valid_codes() -> String {
        MIrrep::ALL.iter().map(|s| s.code()).collect::<Vec<_>>().join(", ")
    }
}

impl FromStr for MIrrep {
    type Err = Error;
    fn from_str(s: &str) -> Result<MIrrep> {
        let t = s.trim();
        MIrrep::ALL
            .into_iter()
            .find(|r| r.code() == t || r.label() == t)
            .ok_or_else(|| Error::UnknownLabel { label: t.to_string(), valid: MIrrep::valid_codes() })
    }
}

impl fmt::Debug for MIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl fmt::Display for MIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A 5x8 character table. [`CharacterTable::standard`] is the only correct
/// one; other tables exist so that checks can be exercised against a
/// deliberately broken input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    values: BTreeMap<MIrrep, Vec<GaussRational>>,
}

impl CharacterTable {
    pub fn standard() -> Self {
        let values =
            MIrrep::ALL.into_iter().map(|s| (s, Q8Element::ALL.iter().map(|&g| s.character(g)).collect())).collect();
        CharacterTable { values }
    }

    pub fn value(&self, sigma: MIrrep, g: Q8Element) -> &GaussRational {
        &self.values[&sigma][g.index()]
    }

    /// Returns a copy with one entry replaced.
    pub fn with_entry(&self, sigma: MIrrep, g: Q8Element, v: GaussRational) -> Self {
        let mut t = self.clone();
        t.values.get_mut(&sigma).expect("every irrep has a row")[g.index()] = v;
        t
    }

    /// `(1/8) Σ_g χ(g) conj(χ'(g))`.
    pub fn inner(&self, a: MIrrep, b: MIrrep) -> GaussRational {
        let s: GaussRational = Q8Element::ALL.iter().map(|&g| self.value(a, g) * &self.value(b, g).conj()).sum();
        &s / &GaussRational::from_int(8)
    }

    /// Row orthonormality and `Σ dim² = 8` (dimensions read at the identity).
    pub fn check(&self) -> Result<()> {
        for a in MIrrep::ALL {
            for b in MIrrep::ALL {
                let want = GaussRational::from_int(if a == b { 1 } else { 0 });
                if self.inner(a, b) != want {
                    return Err(Error::Invalid(format!("character rows {a} and {b} are not orthonormal")));
                }
            }
        }
        let dims: GaussRational = MIrrep::ALL
            .iter()
            .map(|&s| {
                let d = self.value(s, Q8Element::IDENTITY);
                d * d
            })
            .sum();
        if dims != GaussRational::from_int(8) {
            return Err(Error::Invalid(format!("sum of squared dimensions is {dims}, not 8")));
        }
        Ok(())
    }

    /// Multiplicities by character orthogonality. The action is checked to be
    /// a representation first.
    pub fn decompose(&self, rep: &MRep) -> Result<Multiset> {
        rep.check()?;
        let dim = rep.dim();
        let mut out = Multiset::default();
        let mut covered = 0usize;
        for sigma in MIrrep::ALL {
            let s: GaussRational =
                Q8Element::ALL.iter().map(|&g| &rep.matrix(g).trace() * &self.value(sigma, g).conj()).sum();
            let m = &s / &GaussRational::from_int(8);
            let k = m
                .as_integer()
                .filter(|k| *k >= 0)
                .ok_or_else(|| Error::NotARepresentation(format!("multiplicity of {sigma} is {m}")))?;
            let d = self.value(sigma, Q8Element::IDENTITY).as_integer().unwrap_or(0);
            covered += (k * d) as usize;
            out.insert(sigma, k as u32);
        }
        if covered != dim {
            return Err(Error::NotARepresentation(format!(
                "irreducible constituents account for dimension {covered}, not {dim}"
            )));
        }
        Ok(out)
    }
}

/// Matrices of a `Q8` action, one per group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MRep {
    matrices: Vec<Matrix>,
}

impl MRep {
    /// `f` gives the matrix of each group element.
    pub fn from_fn(mut f: impl FnMut(Q8Element) -> Matrix) -> Self {
        MRep { matrices: Q8Element::ALL.iter().map(|&g| f(g)).collect() }
    }

    /// Every group element acts by the 1x1 matrix `[1]`.
    pub fn trivial() -> Self {
        MRep::from_fn(|_| Matrix::identity(1))
    }

    pub fn dim(&self) -> usize {
        self.matrices[0].rows()
    }

    pub fn matrix(&self, g: Q8Element) -> &Matrix {
        &self.matrices[g.index()]
    }

    /// Verifies the multiplication table on all 64 pairs.
    pub fn check(&self) -> Result<()> {
        let n = self.dim();
        if self.matrices.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::NotARepresentation("matrices have inconsistent shapes".into()));
        }
        if *self.matrix(Q8Element::IDENTITY) != Matrix::identity(n) {
            return Err(Error::NotARepresentation("identity does not act trivially".into()));
        }
        for &g in &Q8Element::ALL {
            for &h in &Q8Element::ALL {
                if self.matrix(g) * self.matrix(h) != *self.matrix(g * h) {
                    return Err(Error::NotARepresentation(format!("ρ({g})ρ({h}) ≠ ρ({})", g * h)));
                }
            }
        }
        Ok(())
    }
}

/// Multiplicities of irreducible constituents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multiset(BTreeMap<MIrrep, u32>);

impl Multiset {
    pub fn insert(&mut self, sigma: MIrrep, k: u32) {
        if k > 0 {
            *self.0.entry(sigma).or_insert(0) += k;
        }
    }

    pub fn count(&self, sigma: MIrrep) -> u32 {
        self.0.get(&sigma).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.0.iter().map(|(s, k)| s.dim() * *k as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (MIrrep, u32)> + '_ {
        self.0.iter().map(|(s, k)| (*s, *k))
    }

    pub fn single(sigma: MIrrep) -> Self {
        let mut m = Multiset::default();
        m.insert(sigma, 1);
        m
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(s, k)| if *k == 1 { s.label().to_string() } else { format!("{k}{}", s.label()) })
            .collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// Decomposition against the standard character table.
pub fn decompose_mrep(rep: &MRep) -> Result<Multiset> {
    CharacterTable::standard().decompose(rep)
}

/// Multiplicity of `sigma` in `rep`.
pub fn hom_multiplicity(rep: &Multiset, sigma: MIrrep) -> u32 {
    rep.count(sigma)
}

/// `Ad(m)` on `U(n̄)`: conjugation by the 3x3 matrix on each generator,
/// extended multiplicatively.
pub fn ad_m(m: &Matrix, u: &UeaElement) -> UeaElement {
    let alg = root_algebra();
    let m_inv = m.inverse().expect("m is invertible");
    let images: Vec<UeaElement> = (0..alg.dim() as u8)
        .map(|g| {
            let conj = &(m * alg.basis_matrix(g)) * &m_inv;
            alg.linear_element(&alg.coordinates(&conj).expect("Ad preserves sl(3)"))
        })
        .collect();
    u.substitute(&images)
}

/// The sign character by which `M` acts on the line spanned by `line`.
pub fn ad_character(line: &UeaElement) -> Result<MIrrep> {
    if line.is_zero() {
        return Err(Error::NotAdStable("the zero vector spans no line".into()));
    }
    if !line.uses_only(&NBAR) {
        return Err(Error::NotAdStable("element does not lie in U(n̄)".into()));
    }
    let mut values = [0i64; 3];
    for j in 1..=3u8 {
        let image = ad_m(&Q8Element::m(j).matrix3(), line);
        values[j as usize - 1] = if image == *line {
            1
        } else if image == -line {
            -1
        } else {
            return Err(Error::NotAdStable(format!("Ad(m{j}) does not act by ±1")));
        };
    }
    MIrrep::from_signs(values)
        .ok_or_else(|| Error::NotARepresentation(format!("signs {values:?} match no row of the table")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::sl3::{self, X, Y, Z};
    use proptest::prelude::*;

    #[test]
    fn q8_relations() {
        let (m1, m2, m3) = (Q8Element::m(1), Q8Element::m(2), Q8Element::m(3));
        assert_eq!(m1 * m2, m3);
        for m in [m1, m2, m3] {
            assert_eq!(m * m, Q8Element::MINUS_ONE);
            assert_eq!(m.inverse(), -m);
        }
        assert_eq!(m2 * m1, -m3);
    }

    #[test]
    fn covering_map_is_a_homomorphism() {
        for g in Q8Element::ALL {
            for h in Q8Element::ALL {
                assert_eq!(&g.matrix3() * &h.matrix3(), (g * h).matrix3());
            }
            assert_eq!(g.matrix3(), (-g).matrix3());
        }
    }

    #[test]
    fn standard_table_is_orthonormal() {
        CharacterTable::standard().check().unwrap();
    }

    #[test]
    fn column_orthogonality() {
        let t = CharacterTable::standard();
        // Conjugacy classes: {1}, {-1}, {±m1}, {±m2}, {±m3}.
        let reps = [0usize, 4, 1, 2, 3];
        let sizes = [1i64, 1, 2, 2, 2];
        for (a, &ga) in reps.iter().enumerate() {
            for (b, &gb) in reps.iter().enumerate() {
                let s: GaussRational = MIrrep::ALL
                    .iter()
                    .map(|&x| t.value(x, Q8Element::ALL[ga]) * &t.value(x, Q8Element::ALL[gb]).conj())
                    .sum();
                let want = if a == b { 8 / sizes[a] } else { 0 };
                assert_eq!(s, GaussRational::from_int(want));
            }
        }
    }

    #[test]
    fn corrupted_table_fails() {
        let t = CharacterTable::standard().with_entry(MIrrep::PlusMinus, Q8Element::m(3), GaussRational::from_int(-1));
        assert!(t.check().is_err());
    }

    #[test]
    fn ad_characters() {
        let x = UeaElement::generator(X);
        assert_eq!(ad_character(&x).unwrap(), MIrrep::PlusMinus);
        assert_eq!(ad_character(&UeaElement::generator(Y)).unwrap(), MIrrep::MinusPlus);
        let xy = UeaElement::word(&[X, Y]).scale(&GaussRational::from_int(2));
        assert_eq!(ad_character(&(&xy + &UeaElement::generator(Z))).unwrap(), MIrrep::MinusMinus);
        let xyyx = sl3::normalize_nbar(&UeaElement::word(&[X, Y, Y, X]));
        assert_eq!(ad_character(&xyyx).unwrap(), MIrrep::PlusPlus);
    }

    #[test]
    fn ad_character_rejects_mixed_lines() {
        let mixed = &UeaElement::generator(X) + &UeaElement::generator(Y);
        assert!(matches!(ad_character(&mixed), Err(Error::NotAdStable(_))));
    }

    #[test]
    fn decompositions() {
        assert_eq!(decompose_mrep(&MRep::trivial()).unwrap(), Multiset::single(MIrrep::PlusPlus));
        let h = MRep::from_fn(|g| g.matrix2());
        assert_eq!(decompose_mrep(&h).unwrap(), Multiset::single(MIrrep::H));
        let empty = MRep::from_fn(|_| Matrix::zeros(0, 0));
        assert!(decompose_mrep(&empty).unwrap().is_empty());
        let bogus =
            MRep::from_fn(
                |g| if g.j == 1 { Matrix::scalar(1, &GaussRational::from_int(-1)) } else { Matrix::identity(1) },
            );
        assert!(matches!(decompose_mrep(&bogus), Err(Error::NotARepresentation(_))));
    }

    #[test]
    fn hom_multiplicity_counts() {
        assert_eq!(hom_multiplicity(&Multiset::single(MIrrep::PlusMinus), MIrrep::PlusMinus), 1);
        assert_eq!(hom_multiplicity(&Multiset::single(MIrrep::H), MIrrep::PlusPlus), 0);
        assert_eq!(hom_multiplicity(&Multiset::default(), MIrrep::H), 0);
    }

    #[test]
    fn omega_intertwines_adjoint_actions() {
        let k = sl3::k_algebra();
        let sl2 = sl3::sl2_algebra();
        for j in 1..=3u8 {
            let g = Q8Element::m(j);
            let (m3, m2) = (g.matrix3(), g.matrix2());
            let (m3i, m2i) = (m3.inverse().unwrap(), m2.inverse().unwrap());
            for b in 0..3u8 {
                let lhs = k.coordinates(&(&(&m3 * k.basis_matrix(b)) * &m3i)).unwrap();
                let rhs = sl2.coordinates(&(&(&m2 * sl2.basis_matrix(b)) * &m2i)).unwrap();
                assert_eq!(lhs, rhs, "m{j} on basis element {b}");
            }
        }
    }

    fn arb_word() -> impl Strategy<Value = Vec<u8>> {
        proptest::collection::vec(0u8..3, 0..6)
    }

    proptest! {
        #[test]
        fn monomial_characters_are_multiplicative(w in arb_word()) {
            let line = UeaElement::word(&w);
            let chi = ad_character(&line).unwrap();
            let v = |j: u8| chi.character(Q8Element::m(j));
            prop_assert_eq!(v(3), &v(1) * &v(2));
        }
    }
}
