//! The 3x3 matrix model of sl(3) and the Cartan involution.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::linalg::Matrix;
use crate::scalar::GaussRational;
use crate::Error;

/// A trace-free 3x3 matrix over Q(i).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GElement(Matrix);

/// Matrix unit `E_{ij}` with 1-based indices.
pub fn unit(i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(3, 3);
    m[(i - 1, j - 1)] = GaussRational::from_int(1);
    m
}

impl GElement {
    pub fn new(m: Matrix) -> Result<Self, Error> {
        if m.rows() != 3 || m.cols() != 3 {
            return Err(Error::Invalid(format!("expected a 3x3 matrix, got {}x{}", m.rows(), m.cols())));
        }
        if !m.trace().is_zero() {
            return Err(Error::Invalid("sl(3) element must be trace-free".into()));
        }
        Ok(GElement(m))
    }

    fn trusted(m: Matrix) -> Self {
        debug_assert!(m.trace().is_zero());
        GElement(m)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn zero() -> Self {
        GElement(Matrix::zeros(3, 3))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `E21`, root vector of `-α`.
    pub fn x() -> Self {
        GElement(unit(2, 1))
    }

    /// `E32`, root vector of `-β`.
    pub fn y() -> Self {
        GElement(unit(3, 2))
    }

    /// `E31`, root vector of `-α-β`.
    pub fn z() -> Self {
        GElement(unit(3, 1))
    }

    pub fn h_alpha() -> Self {
        GElement(&unit(1, 1) - &unit(2, 2))
    }

    pub fn h_beta() -> Self {
        GElement(&unit(2, 2) - &unit(3, 3))
    }

    pub fn e12() -> Self {
        GElement(unit(1, 2))
    }

    pub fn e23() -> Self {
        GElement(unit(2, 3))
    }

    pub fn e13() -> Self {
        GElement(unit(1, 3))
    }

    /// `E31 - E13`.
    pub fn b1() -> Self {
        GElement(&unit(3, 1) - &unit(1, 3))
    }

    /// `E32 - E23`.
    pub fn b2() -> Self {
        GElement(&unit(3, 2) - &unit(2, 3))
    }

    /// `E21 - E12`.
    pub fn b3() -> Self {
        GElement(&unit(2, 1) - &unit(1, 2))
    }

    /// `Z+ = B2 - i B3`.
    pub fn z_plus() -> Self {
        &Self::b2() - &Self::b3().scale(&GaussRational::i())
    }

    /// `Z- = -(B2 + i B3)`.
    pub fn z_minus() -> Self {
        -(&Self::b2() + &Self::b3().scale(&GaussRational::i()))
    }

    /// `Z0 = [Z+, Z-]`.
    pub fn z_zero() -> Self {
        commutator(&Self::z_plus(), &Self::z_minus())
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        GElement(self.0.scale(c))
    }
}

/// `[a, b] = ab - ba`.
pub fn commutator(a: &GElement, b: &GElement) -> GElement {
    GElement::trusted(a.0.commutator(&b.0))
}

/// The Cartan involution `θ(U) = -U^t`.
pub fn cartan_theta(a: &GElement) -> GElement {
    GElement::trusted(-&a.0.transpose())
}

impl Add<&GElement> for &GElement {
    type Output = GElement;
    fn add(self, rhs: &GElement) -> GElement {
        GElement(&self.0 + &rhs.0)
    }
}

impl Sub<&GElement> for &GElement {
    type Output = GElement;
    fn sub(self, rhs: &GElement) -> GElement {
        GElement(&self.0 - &rhs.0)
    }
}

impl Neg for GElement {
    type Output = GElement;
    fn neg(self) -> GElement {
        GElement(-&self.0)
    }
}

impl fmt::Debug for GElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GElement{:?}", self.0)
    }
}
