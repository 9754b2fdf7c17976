//! Flattening `u ↦ u♭`: rewriting `u ∈ U(n̄)` modulo the induced-module
//! relations of `U(g) ⊗_{U(p)} C_{-(λ+ρ)}` so that it lies in `U(k)`, and the
//! identification `Z± ↦ E±`, `Z0 ↦ E0` of `U(k)` with `U(sl2)`.

use std::fmt;

use crate::algebra::sl3::{
    self, iwasawa_algebra, iwasawa_order, k_algebra, IW_H_ALPHA, IW_H_BETA, K_NAMES, NBAR, SL2_NAMES,
};
use crate::algebra::UeaElement;
use crate::weight::Weight;

/// An element of `U(k)` in PBW normal form over `Z+ < Z- < Z0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KElement(UeaElement);

impl KElement {
    /// Normal-orders an expression in the generators `Z+, Z-, Z0`.
    pub fn new(u: &UeaElement) -> Self {
        KElement(k_algebra().normalize(u, &crate::algebra::BasisOrder::natural(3)))
    }

    pub fn element(&self) -> &UeaElement {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Product in `U(k)`, normal-ordered.
    pub fn mul(&self, other: &KElement) -> KElement {
        KElement::new(&(&self.0 * &other.0))
    }

    pub fn add(&self, other: &KElement) -> KElement {
        KElement(&self.0 + &other.0)
    }
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.display_with(&K_NAMES))
    }
}

impl fmt::Debug for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KElement({self})")
    }
}

/// The character of `a` on the induced module attached to `lambda_ps`.
pub fn flattening_character(lambda_ps: &Weight) -> Weight {
    -(lambda_ps + &Weight::rho())
}

/// `u♭` for `u ∈ U(n̄)`.
///
/// The real form is split, so the conjugation `τ` fixes `u♭` and no
/// correction is applied.
pub fn flatten(u: &UeaElement, lambda_ps: &Weight) -> KElement {
    assert!(u.uses_only(&NBAR), "flatten expects an element of U(n̄)");
    let chi = flattening_character(lambda_ps);
    let values = sl3::cartan_values(&chi);
    let normal = iwasawa_algebra().normalize(&sl3::to_iwasawa(u), &iwasawa_order());
    let mut out = UeaElement::zero();
    for (w, c) in normal.terms() {
        if w.iter().any(|&g| g > IW_H_BETA) {
            continue;
        }
        let mut coeff = c.clone();
        let mut rest = Vec::with_capacity(w.len());
        for &g in w {
            match g {
                IW_H_ALPHA => coeff = &coeff * &values[0],
                IW_H_BETA => coeff = &coeff * &values[1],
                _ => rest.push(g),
            }
        }
        out.add_term(rest, coeff);
    }
    KElement(out)
}

/// `u♭ ⊗ 1 - u ⊗ 1`, re-expanded in the Verma-side normal form. Zero exactly
/// when the flattening is correct.
pub fn flatten_residual(u: &UeaElement, lambda_ps: &Weight) -> UeaElement {
    let flat = flatten(u, lambda_ps);
    let back = sl3::iwasawa_to_root(flat.element());
    sl3::reduce_induced(&(&back - u), &flattening_character(lambda_ps))
}

/// `Z_j ↦ E_j`. The two triples share indices, so only the names change.
pub fn to_sl2(k: &KElement) -> UeaElement {
    k.0.clone()
}

/// Formats an element of `U(sl2)`.
pub fn display_sl2(u: &UeaElement) -> String {
    u.display_with(&SL2_NAMES)
}
