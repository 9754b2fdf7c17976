//! Weights of the split Cartan of sl(3), in the simple-root basis {α, β}.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::scalar::{format_rational, parse_rational, rat, rat_int, Rational};
use crate::Error;

/// `c_alpha * α + c_beta * β`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Weight {
    #[serde(with = "crate::scalar::rational_string")]
    pub c_alpha: Rational,
    #[serde(with = "crate::scalar::rational_string")]
    pub c_beta: Rational,
}

/// The three positive roots of A2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PositiveRoot {
    Alpha,
    Beta,
    AlphaBeta,
}

impl PositiveRoot {
    pub const ALL: [PositiveRoot; 3] = [PositiveRoot::Alpha, PositiveRoot::Beta, PositiveRoot::AlphaBeta];

    pub fn weight(self) -> Weight {
        match self {
            PositiveRoot::Alpha => Weight::alpha(),
            PositiveRoot::Beta => Weight::beta(),
            PositiveRoot::AlphaBeta => Weight::rho(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PositiveRoot::Alpha => "alpha",
            PositiveRoot::Beta => "beta",
            PositiveRoot::AlphaBeta => "alpha+beta",
        }
    }
}

impl Weight {
    pub fn new(c_alpha: Rational, c_beta: Rational) -> Self {
        Weight { c_alpha, c_beta }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Weight::new(rat_int(a), rat_int(b))
    }

    pub fn from_ratios(a: (i64, i64), b: (i64, i64)) -> Self {
        Weight::new(rat(a.0, a.1), rat(b.0, b.1))
    }

    pub fn zero() -> Self {
        Weight::from_ints(0, 0)
    }

    pub fn alpha() -> Self {
        Weight::from_ints(1, 0)
    }

    pub fn beta() -> Self {
        Weight::from_ints(0, 1)
    }

    /// Half the sum of the positive roots, `α + β`.
    pub fn rho() -> Self {
        Weight::from_ints(1, 1)
    }

    /// `ρ/2`.
    pub fn rho_half() -> Self {
        Weight::from_ratios((1, 2), (1, 2))
    }

    pub fn is_zero(&self) -> bool {
        self.c_alpha.is_zero() && self.c_beta.is_zero()
    }

    pub fn scale(&self, s: &Rational) -> Weight {
        Weight::new(&self.c_alpha * s, &self.c_beta * s)
    }

    /// `<self, α∨>`, i.e. the value on `Hα = E11 - E22`.
    pub fn pair_alpha(&self) -> Rational {
        &self.c_alpha * rat_int(2) - &self.c_beta
    }

    /// `<self, β∨>`, i.e. the value on `Hβ = E22 - E33`.
    pub fn pair_beta(&self) -> Rational {
        &self.c_beta * rat_int(2) - &self.c_alpha
    }

    /// Pairing with the coroot of a positive root (A2 is simply laced, so
    /// `(α+β)∨ = α∨ + β∨`).
    pub fn pair(&self, root: PositiveRoot) -> Rational {
        match root {
            PositiveRoot::Alpha => self.pair_alpha(),
            PositiveRoot::Beta => self.pair_beta(),
            PositiveRoot::AlphaBeta => self.pair_alpha() + self.pair_beta(),
        }
    }

    /// Reflection `s_γ(λ) = λ - <λ, γ∨> γ`.
    pub fn reflect(&self, root: PositiveRoot) -> Weight {
        self - &root.weight().scale(&self.pair(root))
    }

    /// Writes `self = -(a α + b β)` with `a, b` nonnegative integers, if possible.
    pub fn as_negative_cone(&self) -> Option<(u32, u32)> {
        let a = -&self.c_alpha;
        let b = -&self.c_beta;
        if !a.is_integer() || !b.is_integer() {
            return None;
        }
        let a = u32::try_from(a.to_integer()).ok()?;
        let b = u32::try_from(b.to_integer()).ok()?;
        Some((a, b))
    }

    /// Parses `"a/b,c/d"` or one of the aliases `rho`, `-rho`, `rho/2`, `-rho/2`.
    pub fn parse(s: &str) -> Result<Weight, Error> {
        let t = s.trim();
        match t {
            "rho" => return Ok(Weight::rho()),
            "-rho" => return Ok(-Weight::rho()),
            "rho/2" => return Ok(Weight::rho_half()),
            "-rho/2" => return Ok(-Weight::rho_half()),
            _ => {}
        }
        let (a, b) = t
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("weight `{t}`: expected `a/b,c/d` or -rho, -rho/2")))?;
        let ca = parse_rational(a).map_err(|_| Error::Parse(format!("weight coefficient `{}`", a.trim())))?;
        let cb = parse_rational(b).map_err(|_| Error::Parse(format!("weight coefficient `{}`", b.trim())))?;
        Ok(Weight::new(ca, cb))
    }

    /// Canonical textual form `p/q,r/s`.
    pub fn to_wire(&self) -> String {
        format!("{},{}", format_rational(&self.c_alpha), format_rational(&self.c_beta))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = |c: &Rational, name: &str| -> String {
            let c = c.abs();
            if c.is_one() {
                name.to_string()
            } else if c.is_integer() {
                format!("{}{name}", c.numer())
            } else {
                format!("({}/{}){name}", c.numer(), c.denom())
            }
        };
        let mut out = String::new();
        for (c, name) in [(&self.c_alpha, "α"), (&self.c_beta, "β")] {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (out.is_empty(), neg) {
                (true, false) => {}
                (true, true) => out.push('-'),
                (false, false) => out.push_str(" + "),
                (false, true) => out.push_str(" - "),
            }
            out.push_str(&body(c, name));
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight({})", self.to_wire())
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight::new(&self.c_alpha + &rhs.c_alpha, &self.c_beta + &rhs.c_beta)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight::new(&self.c_alpha - &rhs.c_alpha, &self.c_beta - &rhs.c_beta)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.c_alpha, -self.c_beta)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-&self.c_alpha, -&self.c_beta)
    }
}

impl Mul<i64> for &Weight {
    type Output = Weight;
    fn mul(self, k: i64) -> Weight {
        self.scale(&rat_int(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_pairings() {
        assert_eq!(Weight::alpha().pair_alpha(), rat_int(2));
        assert_eq!(Weight::beta().pair_alpha(), rat_int(-1));
        assert_eq!(Weight::rho().pair_alpha(), rat_int(1));
        assert_eq!(Weight::rho().pair_beta(), rat_int(1));
        assert_eq!(Weight::rho_half().pair(PositiveRoot::AlphaBeta), rat_int(1));
    }

    #[test]
    fn reflections_are_involutions() {
        let w = Weight::from_ratios((1, 3), (-5, 7));
        for r in PositiveRoot::ALL {
            assert_eq!(w.reflect(r).reflect(r), w);
            assert_eq!(r.weight().reflect(r), -r.weight());
        }
    }

    #[test]
    fn parse_aliases_and_fractions() {
        assert_eq!(Weight::parse("-rho").unwrap(), Weight::from_ints(-1, -1));
        assert_eq!(Weight::parse("-rho/2").unwrap(), Weight::from_ratios((-1, 2), (-1, 2)));
        assert_eq!(Weight::parse("1/3, 1/5").unwrap(), Weight::from_ratios((1, 3), (1, 5)));
        let err = Weight::parse("1/3,x").unwrap_err().to_string();
        assert!(err.contains("`x`"), "{err}");
        assert!(Weight::parse("rhoo").is_err());
    }

    #[test]
    fn negative_cone() {
        assert_eq!((-Weight::rho()).as_negative_cone(), Some((1, 1)));
        assert_eq!(Weight::alpha().as_negative_cone(), None);
        assert_eq!((-Weight::rho_half()).as_negative_cone(), None);
    }

    #[test]
    fn display() {
        assert_eq!(Weight::rho().to_string(), "α + β");
        assert_eq!((-Weight::rho_half()).to_string(), "-(1/2)α - (1/2)β");
        assert_eq!(Weight::zero().to_string(), "0");
    }
}
