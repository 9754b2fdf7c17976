//! Exact sl(3): the matrix model, enveloping-algebra elements and PBW normal
//! ordering.

pub mod gelement;
pub mod sl3;
pub mod uea;

pub use gelement::{cartan_theta, commutator, GElement};
pub use sl3::monomial_weight;
pub use uea::{BasisOrder, LieAlgebra, UeaElement, Word};

/// PBW normal form of `expr` (words in the root basis of sl(3)) with respect
/// to `order`.
pub fn pbw_normalize(expr: &UeaElement, order: &BasisOrder) -> UeaElement {
    sl3::root_algebra().normalize(expr, order)
}
