//! The concrete bases of sl(3) used throughout: the root basis for Verma
//! modules, the Iwasawa basis `k < a < n` for flattening, and the compact
//! sl(2) triples.

use std::sync::OnceLock;

use super::gelement::GElement;
use super::uea::{BasisOrder, LieAlgebra, UeaElement, Word};
use crate::linalg::Matrix;
use crate::scalar::GaussRational;
use crate::weight::Weight;

/// Indices into the root basis `{X, Y, Z, Hα, Hβ, E12, E23, E13}`.
pub const X: u8 = 0;
pub const Y: u8 = 1;
pub const Z: u8 = 2;
pub const H_ALPHA: u8 = 3;
pub const H_BETA: u8 = 4;
pub const E12: u8 = 5;
pub const E23: u8 = 6;
pub const E13: u8 = 7;

pub const ROOT_NAMES: [&str; 8] = ["X", "Y", "Z", "Ha", "Hb", "E12", "E23", "E13"];
pub const NBAR: [u8; 3] = [X, Y, Z];

/// Indices into the Iwasawa basis `{Z+, Z-, Z0, Hα, Hβ, E12, E23, E13}`.
pub const IW_ZP: u8 = 0;
pub const IW_ZM: u8 = 1;
pub const IW_Z0: u8 = 2;
pub const IW_H_ALPHA: u8 = 3;
pub const IW_H_BETA: u8 = 4;

pub const IWASAWA_NAMES: [&str; 8] = ["Z+", "Z-", "Z0", "Ha", "Hb", "E12", "E23", "E13"];

/// Indices shared by the compact triple `{Z+, Z-, Z0}` and `{E+, E-, E0}`.
pub const K_PLUS: u8 = 0;
pub const K_MINUS: u8 = 1;
pub const K_ZERO: u8 = 2;

pub const K_NAMES: [&str; 3] = ["Z+", "Z-", "Z0"];
pub const SL2_NAMES: [&str; 3] = ["E+", "E-", "E0"];

fn root_basis_matrices() -> Vec<Matrix> {
    [
        GElement::x(),
        GElement::y(),
        GElement::z(),
        GElement::h_alpha(),
        GElement::h_beta(),
        GElement::e12(),
        GElement::e23(),
        GElement::e13(),
    ]
    .iter()
    .map(|g| g.matrix().clone())
    .collect()
}

/// sl(3) in the root basis.
pub fn root_algebra() -> &'static LieAlgebra {
    static ALG: OnceLock<LieAlgebra> = OnceLock::new();
    ALG.get_or_init(|| LieAlgebra::from_matrices(&ROOT_NAMES, root_basis_matrices()).expect("sl(3) root basis"))
}

/// sl(3) in the Iwasawa basis; its natural order puts `k` before `a` before `n`.
pub fn iwasawa_algebra() -> &'static LieAlgebra {
    static ALG: OnceLock<LieAlgebra> = OnceLock::new();
    ALG.get_or_init(|| {
        let mats: Vec<Matrix> = [
            GElement::z_plus(),
            GElement::z_minus(),
            GElement::z_zero(),
            GElement::h_alpha(),
            GElement::h_beta(),
            GElement::e12(),
            GElement::e23(),
            GElement::e13(),
        ]
        .iter()
        .map(|g| g.matrix().clone())
        .collect();
        LieAlgebra::from_matrices(&IWASAWA_NAMES, mats).expect("Iwasawa basis")
    })
}

/// `k = so(3, C)` with basis `{Z+, Z-, Z0}`.
pub fn k_algebra() -> &'static LieAlgebra {
    static ALG: OnceLock<LieAlgebra> = OnceLock::new();
    ALG.get_or_init(|| {
        let mats =
            [GElement::z_plus(), GElement::z_minus(), GElement::z_zero()].iter().map(|g| g.matrix().clone()).collect();
        LieAlgebra::from_matrices(&K_NAMES, mats).expect("k basis")
    })
}

pub fn e_plus() -> Matrix {
    Matrix::from_int_rows(&[&[0, 1], &[0, 0]])
}

pub fn e_minus() -> Matrix {
    Matrix::from_int_rows(&[&[0, 0], &[1, 0]])
}

pub fn e_zero() -> Matrix {
    Matrix::from_int_rows(&[&[1, 0], &[0, -1]])
}

/// sl(2, C) with basis `{E+, E-, E0}`.
pub fn sl2_algebra() -> &'static LieAlgebra {
    static ALG: OnceLock<LieAlgebra> = OnceLock::new();
    ALG.get_or_init(|| LieAlgebra::from_matrices(&SL2_NAMES, vec![e_plus(), e_minus(), e_zero()]).expect("sl(2) basis"))
}

/// The order `X < Y < Z < Hα < Hβ < E12 < E23 < E13` (n̄ < a < n).
pub fn verma_order() -> BasisOrder {
    BasisOrder::natural(8)
}

/// `k < a < n` on the Iwasawa basis.
pub fn iwasawa_order() -> BasisOrder {
    BasisOrder::natural(8)
}

/// Determinant of the change of coordinates from the root basis to the
/// compact/Cartan/nilpotent basis `{B1, B2, B3, Hα, Hβ, E12, E23, E13}`.
pub fn mixed_basis_determinant() -> GaussRational {
    let alg = root_algebra();
    let mixed = [
        GElement::b1(),
        GElement::b2(),
        GElement::b3(),
        GElement::h_alpha(),
        GElement::h_beta(),
        GElement::e12(),
        GElement::e23(),
        GElement::e13(),
    ];
    let cols: Vec<Vec<GaussRational>> = mixed.iter().map(|g| alg.coordinates(g.matrix()).expect("in sl(3)")).collect();
    Matrix::from_columns(&cols, 8).determinant()
}

/// Root-space weight of a root-basis generator.
pub fn generator_weight(i: u8) -> Weight {
    match i {
        X => -Weight::alpha(),
        Y => -Weight::beta(),
        Z => -Weight::rho(),
        H_ALPHA | H_BETA => Weight::zero(),
        E12 => Weight::alpha(),
        E23 => Weight::beta(),
        E13 => Weight::rho(),
        _ => panic!("root basis index {i} out of range"),
    }
}

/// Sum of the weights of the factors of a root-basis word.
pub fn monomial_weight(w: &[u8]) -> Weight {
    w.iter().fold(Weight::zero(), |acc, &g| &acc + &generator_weight(g))
}

/// `X^i Y^j Z^k` as a word.
pub fn nbar_word(i: usize, j: usize, k: usize) -> Word {
    let mut w = vec![X; i];
    w.extend(std::iter::repeat_n(Y, j));
    w.extend(std::iter::repeat_n(Z, k));
    w
}

/// Exponent triple `(i, j, k)` of a normal-ordered word `X^i Y^j Z^k`.
pub fn nbar_exponents(w: &[u8]) -> (usize, usize, usize) {
    let count = |g: u8| w.iter().filter(|&&x| x == g).count();
    (count(X), count(Y), count(Z))
}

/// Evaluates a Cartan-weight character on the two Cartan generators.
pub fn cartan_values(chi: &Weight) -> [GaussRational; 2] {
    [GaussRational::from_rational(chi.pair_alpha()), GaussRational::from_rational(chi.pair_beta())]
}

/// Reduces `u ⊗ 1` in `U(g) ⊗_{U(b)} C_chi` to its `U(n̄)` normal form: the
/// PBW normal form with `n̄ < a < n`, with `n` factors acting by zero and
/// `Hα, Hβ` by the pairings of `chi`.
pub fn reduce_induced(u: &UeaElement, chi: &Weight) -> UeaElement {
    let alg = root_algebra();
    let normal = alg.normalize(u, &verma_order());
    let values = cartan_values(chi);
    let mut out = UeaElement::zero();
    for (w, c) in normal.terms() {
        if w.iter().any(|&g| g >= E12) {
            continue;
        }
        let mut coeff = c.clone();
        let mut rest = Vec::with_capacity(w.len());
        for &g in w {
            match g {
                H_ALPHA => coeff = &coeff * &values[0],
                H_BETA => coeff = &coeff * &values[1],
                _ => rest.push(g),
            }
        }
        out.add_term(rest, coeff);
    }
    out
}

/// Normal form in `U(n̄)` for the order `X < Y < Z`.
pub fn normalize_nbar(u: &UeaElement) -> UeaElement {
    root_algebra().normalize(u, &verma_order())
}

/// Root-basis word → element of the Iwasawa basis (degree one per factor).
pub fn to_iwasawa(u: &UeaElement) -> UeaElement {
    static IMAGES: OnceLock<Vec<UeaElement>> = OnceLock::new();
    let images = IMAGES.get_or_init(|| {
        let root = root_algebra();
        let iw = iwasawa_algebra();
        (0..8u8).map(|i| iw.linear_element(&iw.coordinates(root.basis_matrix(i)).expect("same algebra"))).collect()
    });
    u.substitute(images)
}

/// Iwasawa-basis element → root basis.
pub fn iwasawa_to_root(u: &UeaElement) -> UeaElement {
    static IMAGES: OnceLock<Vec<UeaElement>> = OnceLock::new();
    let images = IMAGES.get_or_init(|| {
        let root = root_algebra();
        let iw = iwasawa_algebra();
        (0..8u8).map(|i| root.linear_element(&root.coordinates(iw.basis_matrix(i)).expect("same algebra"))).collect()
    });
    u.substitute(images)
}

/// `Σ c_w w` evaluated with every generator replaced by a fixed matrix.
pub fn represent(u: &UeaElement, gens: &[Matrix]) -> Matrix {
    let n = gens[0].rows();
    let mut out = Matrix::zeros(n, n);
    for (w, c) in u.terms() {
        let mut m = Matrix::identity(n);
        for &g in w {
            m = &m * &gens[g as usize];
        }
        out = &out + &m.scale(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gelement::{cartan_theta, commutator};
    use num_traits::Zero;

    fn w(word: &[u8]) -> UeaElement {
        UeaElement::word(word)
    }

    #[test]
    fn yx_normal_form() {
        let n = normalize_nbar(&w(&[Y, X]));
        assert_eq!(n, &w(&[X, Y]) + &w(&[Z]));
    }

    #[test]
    fn xyyx_equals_yxxy() {
        let d = &w(&[X, Y, Y, X]) - &w(&[Y, X, X, Y]);
        assert!(normalize_nbar(&d).is_zero());
    }

    #[test]
    fn ordered_word_is_fixed() {
        assert_eq!(normalize_nbar(&w(&[X, X])), w(&[X, X]));
    }

    #[test]
    fn weights() {
        assert_eq!(monomial_weight(&[X]), -Weight::alpha());
        assert_eq!(monomial_weight(&[X, Y, Y, X]), -(&Weight::rho() * 2));
        assert_eq!(monomial_weight(&[]), Weight::zero());
    }

    #[test]
    fn generator_weights_match_adjoint_action() {
        // [H, e] = <wt(e), H> e for both Cartan generators
        let alg = root_algebra();
        for g in 0..8u8 {
            let wt = generator_weight(g);
            let e = alg.basis_matrix(g);
            for (h, val) in [(H_ALPHA, wt.pair_alpha()), (H_BETA, wt.pair_beta())] {
                let lhs = alg.basis_matrix(h).commutator(e);
                assert_eq!(lhs, e.scale(&GaussRational::from_rational(val)));
            }
        }
    }

    #[test]
    fn mixed_basis_is_a_basis() {
        assert!(!mixed_basis_determinant().is_zero());
    }

    #[test]
    fn jacobi_identity() {
        let alg = root_algebra();
        for a in 0..8u8 {
            for b in 0..8u8 {
                for c in 0..8u8 {
                    let (ma, mb, mc) = (alg.basis_matrix(a), alg.basis_matrix(b), alg.basis_matrix(c));
                    let s = &(&ma.commutator(&mb.commutator(mc)) + &mb.commutator(&mc.commutator(ma)))
                        + &mc.commutator(&ma.commutator(mb));
                    assert!(s.is_zero());
                }
            }
        }
    }

    #[test]
    fn theta_is_an_involutive_automorphism() {
        let basis = root_basis_matrices();
        for a in &basis {
            let ga = GElement::new(a.clone()).unwrap();
            assert_eq!(cartan_theta(&cartan_theta(&ga)), ga);
            for b in &basis {
                let gb = GElement::new(b.clone()).unwrap();
                assert_eq!(cartan_theta(&commutator(&ga, &gb)), commutator(&cartan_theta(&ga), &cartan_theta(&gb)));
            }
        }
    }

    #[test]
    fn induced_reduction_evaluates_cartan() {
        // E12 X ⊗ 1 = Hα ⊗ 1 = <chi, α∨>
        let chi = Weight::from_ratios((1, 3), (1, 5));
        let r = reduce_induced(&w(&[E12, X]), &chi);
        assert_eq!(r, UeaElement::scalar(GaussRational::from_rational(chi.pair_alpha())));
    }

    #[test]
    fn iwasawa_round_trip() {
        let u = &w(&[X, Y, Z]) + &w(&[E13, H_BETA]);
        let back = iwasawa_to_root(&to_iwasawa(&u));
        let root = root_algebra();
        let o = verma_order();
        assert_eq!(root.normalize(&back, &o), root.normalize(&u, &o));
    }
}
