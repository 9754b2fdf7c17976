//! Verma modules `M(λ) = U(g) ⊗_{U(b)} C_{λ-ρ}` of sl(3), singular vectors
//! and BGG linkage.
//!
//! `M(λ)` is identified with `U(n̄)` through `u ↦ u ⊗ 1`. A singular vector of
//! weight `ν - λ` is a `u` with that weight killed by `E12` and `E23`, and
//! spans `Hom(M(ν), M(λ))`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::sl3::{self, nbar_exponents, nbar_word, reduce_induced, E12, E23, NBAR, ROOT_NAMES};
use crate::algebra::UeaElement;
use crate::exec::Execution;
use crate::linalg::Matrix;
use crate::qmchar::MIrrep;
use crate::scalar::{GaussRational, Rational};
use crate::weight::{PositiveRoot, Weight};
use crate::{Error, Result};

/// `element ⊗ 1_{λ-ρ}` in `M(λ)`, with `λ = hw_param`.
#[derive(Clone, PartialEq, Eq)]
pub struct VermaVector {
    element: UeaElement,
    hw_param: Weight,
}

impl VermaVector {
    /// Brings `element` to normal form; fails unless it lies in `U(n̄)`.
    pub fn new(element: UeaElement, hw_param: Weight) -> Result<Self> {
        if !element.uses_only(&NBAR) {
            return Err(Error::Invalid("Verma vectors are represented by elements of U(n̄)".into()));
        }
        Ok(VermaVector { element: sl3::normalize_nbar(&element), hw_param })
    }

    /// `1 ⊗ 1_{λ-ρ}`.
    pub fn vacuum(hw_param: Weight) -> Self {
        VermaVector { element: UeaElement::one(), hw_param }
    }

    pub fn element(&self) -> &UeaElement {
        &self.element
    }

    pub fn hw_param(&self) -> &Weight {
        &self.hw_param
    }

    pub fn is_zero(&self) -> bool {
        self.element.is_zero()
    }

    /// The highest weight `λ - ρ`.
    pub fn highest_weight(&self) -> Weight {
        &self.hw_param - &Weight::rho()
    }
}

impl fmt::Debug for VermaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ 1[{}]", self.element.display_with(&ROOT_NAMES), self.highest_weight())
    }
}

/// `u · v` for any `u ∈ U(g)` written in the root basis.
pub fn verma_act(u: &UeaElement, v: &VermaVector) -> VermaVector {
    VermaVector { element: reduce_induced(&(u * &v.element), &v.highest_weight()), hw_param: v.hw_param.clone() }
}

/// Scales so that the coefficient of the lexicographically largest exponent
/// triple `(i, j, k)` is 1, then clears denominators.
///
/// `XY + (1/2)Z` therefore becomes `2XY + Z`.
pub fn normalize_singular(u: &UeaElement) -> UeaElement {
    let lead = u.terms().max_by_key(|(w, _)| nbar_exponents(w)).map(|(_, c)| c.clone()).expect("nonzero element");
    let monic = u.scale(&lead.inv().expect("nonzero coefficient"));
    let lcm = monic.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(&c.denominator_lcm()));
    monic.scale(&GaussRational::from_rational(Rational::from_integer(lcm)))
}

/// Basis of the singular vectors of weight `nu - lambda` in `M(lambda)`,
/// each normalized by [`normalize_singular`]. Empty when `nu - lambda` is
/// not in the negative integral cone or no singular vector exists.
pub fn singular_vectors(lambda: &Weight, nu: &Weight) -> Vec<VermaVector> {
    let Some((a, b)) = (nu - lambda).as_negative_cone() else {
        return Vec::new();
    };
    let (a, b) = (a as usize, b as usize);
    let monomials: Vec<Vec<u8>> = (0..=a.min(b)).map(|k| nbar_word(a - k, b - k, k)).collect();
    let hw = lambda - &Weight::rho();
    let raised: Vec<[UeaElement; 2]> = monomials
        .iter()
        .map(|m| {
            let m = UeaElement::word(m);
            [E12, E23].map(|e| reduce_induced(&(&UeaElement::generator(e) * &m), &hw))
        })
        .collect();
    // One row per (raising operator, output word), one column per monomial.
    let mut rows: BTreeSet<(usize, Vec<u8>)> = BTreeSet::new();
    for r in &raised {
        for (s, img) in r.iter().enumerate() {
            rows.extend(img.terms().map(|(w, _)| (s, w.clone())));
        }
    }
    let mut system = Matrix::zeros(rows.len(), monomials.len());
    for (row, (s, w)) in rows.iter().enumerate() {
        for (col, r) in raised.iter().enumerate() {
            system[(row, col)] = r[*s].coefficient(w);
        }
    }
    system
        .kernel()
        .into_iter()
        .map(|coeffs| {
            let u = UeaElement::from_terms(monomials.iter().cloned().zip(coeffs));
            VermaVector { element: normalize_singular(&u), hw_param: lambda.clone() }
        })
        .collect()
}

/// True when `v` is killed by both simple raising operators.
pub fn is_singular(v: &VermaVector) -> bool {
    [E12, E23].iter().all(|&e| verma_act(&UeaElement::generator(e), v).is_zero())
}

/// The source twist `σ ⊗ (ν - ρ)` admits nonzero homomorphisms into a
/// Verma module induced from a sign character only when `σ` is itself a
/// sign character: the genuine two-dimensional `H` has no `M`-fixed vectors
/// against a one-dimensional target. Searches for `H` are skipped.
pub fn source_twist_searchable(sigma: MIrrep) -> bool {
    sigma.dim() == 1
}

/// A sequence of positive-root reflections, each with a nonnegative
/// integral pairing, carrying `start` to the last intermediate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkageChain {
    pub start: Weight,
    pub steps: Vec<PositiveRoot>,
    /// `intermediates[i]` is the weight after `steps[i]`.
    pub intermediates: Vec<Weight>,
}

impl LinkageChain {
    pub fn end(&self) -> &Weight {
        self.intermediates.last().unwrap_or(&self.start)
    }

    /// Rechecks the reflection and integrality conditions.
    pub fn is_valid(&self) -> bool {
        if self.steps.len() != self.intermediates.len() {
            return false;
        }
        let mut prev = &self.start;
        for (root, next) in self.steps.iter().zip(&self.intermediates) {
            let k = prev.pair(*root);
            if !k.is_integer() || k.is_negative() || prev.reflect(*root) != *next {
                return false;
            }
            prev = next;
        }
        true
    }
}

/// Longest chain explored by [`linked`].
pub const LINKAGE_DEPTH: usize = 6;

fn nonnegative_integer(q: &Rational) -> bool {
    q.is_integer() && !q.is_negative()
}

/// Breadth-first search for a shortest chain from `lambda` to `nu`. Steps
/// with pairing zero fix the weight and are never taken.
pub fn linked(lambda: &Weight, nu: &Weight) -> Option<LinkageChain> {
    reachable(lambda).into_iter().find(|c| c.end() == nu)
}

/// All weights reachable from `lambda` by chains of length at most
/// [`LINKAGE_DEPTH`], each with one shortest chain, in BFS order.
pub fn reachable(lambda: &Weight) -> Vec<LinkageChain> {
    let root = LinkageChain { start: lambda.clone(), steps: Vec::new(), intermediates: Vec::new() };
    let mut seen: BTreeSet<Weight> = BTreeSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([root]);
    let mut out = Vec::new();
    while let Some(chain) = queue.pop_front() {
        let here = chain.end().clone();
        if chain.steps.len() < LINKAGE_DEPTH {
            for r in PositiveRoot::ALL {
                let k = here.pair(r);
                if !nonnegative_integer(&k) || k.is_zero() {
                    continue;
                }
                let next = here.reflect(r);
                if seen.insert(next.clone()) {
                    let mut c = chain.clone();
                    c.steps.push(r);
                    c.intermediates.push(next);
                    queue.push_back(c);
                }
            }
        }
        out.push(chain);
    }
    out
}

/// Sweep radius used by [`classify_targets`].
pub fn sweep_bound(lambda: &Weight) -> u32 {
    let m = [lambda.pair_alpha(), lambda.pair_beta()]
        .iter()
        .map(|q| q.abs().ceil().to_integer())
        .fold(BigInt::one(), |acc, q| acc.max(q));
    let bound: BigInt = m * 2 + 2;
    bound.to_u32().expect("sweep bound fits in u32")
}

/// Every `ν ≠ λ` admitting a nonzero singular vector of weight `ν - λ`, sorted.
pub fn classify_targets(lambda: &Weight) -> Vec<Weight> {
    classify_targets_with(lambda, Execution::default())
}

pub fn classify_targets_with(lambda: &Weight, exec: Execution) -> Vec<Weight> {
    let bound = sweep_bound(lambda) as i64;
    let mut candidates: BTreeSet<Weight> = BTreeSet::new();
    for a in 0..=bound {
        for b in 0..=bound {
            if (a, b) != (0, 0) {
                candidates.insert(lambda - &Weight::from_ints(a, b));
            }
        }
    }
    candidates.extend(reachable(lambda).into_iter().skip(1).map(|c| c.end().clone()));
    let candidates: Vec<Weight> = candidates.into_iter().collect();
    let found = exec.map(candidates, |nu| (!singular_vectors(lambda, &nu).is_empty()).then_some(nu));
    found.into_iter().flatten().collect()
}
