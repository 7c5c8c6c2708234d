//! Bounded searches for the two quartic diophantine equations governing the
//! diagonals, and per-triple irrationality certificates.
//!
//! `d1 = δr1·√(r1²+4r2²)` and `d2 = δr2·√(4r1²+r2²)` are irrational exactly
//! when their radicands are non-squares. Through the (m, n) parametrization
//! the radicands become `m⁴+14m²n²+n⁴` (odd leg first) or `4(m⁴−m²n²+n⁴)`
//! (even leg first), so square radicands would be solutions of one of two
//! quartic equations that are known to have none (respectively only the
//! trivial `x = y = z = 1`). The searches here are the desk-scale shadow of
//! those theorems: exhaustive, exact, and expected to come back empty.

use crate::scalar::{exact_sqrt, small, sq, ExactInt};
use crate::triples::PythTriple;
use std::fmt;

/// Which quartic was searched.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuarticEquation {
    /// `x⁴ + 14x²y² + y⁴ = z²`
    Plus14,
    /// `x⁴ − x²y² + y⁴ = z²`
    MinusMixed,
}

impl fmt::Display for QuarticEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Plus14 => f.write_str("x^4 + 14x^2y^2 + y^4 = z^2"),
            Self::MinusMixed => f.write_str("x^4 - x^2y^2 + y^4 = z^2"),
        }
    }
}

/// A solution found by a bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticHit<T: ExactInt> {
    pub x: T,
    pub y: T,
    pub z: T,
    pub equation: QuarticEquation,
}

/// Exhaustive scan of `x⁴+14x²y²+y⁴ = z²` over `1 ≤ x, y ≤ bound` with
/// `gcd(x, y) = 1` and `x + y` odd, the case relevant to the diagonals.
/// Expected empty at any bound; a hit is a valid return value, not an
/// error.
pub fn search_plus14<T: ExactInt>(bound: &T) -> Vec<QuarticHit<T>> {
    scan(bound, QuarticEquation::Plus14, true)
}

/// [`search_plus14`] without the opposite-parity filter, for exploration:
/// both-odd solutions such as `(1, 1, 4)` are then admitted.
pub fn search_plus14_any_parity<T: ExactInt>(bound: &T) -> Vec<QuarticHit<T>> {
    scan(bound, QuarticEquation::Plus14, false)
}

/// Exhaustive scan of `x⁴−x²y²+y⁴ = z²` over coprime `1 ≤ x, y ≤ bound`.
/// Expected to return exactly `(1, 1, 1)`.
pub fn search_minus_mixed<T: ExactInt>(bound: &T) -> Vec<QuarticHit<T>> {
    scan(bound, QuarticEquation::MinusMixed, false)
}

fn scan<T: ExactInt>(
    bound: &T,
    equation: QuarticEquation,
    opposite_parity: bool,
) -> Vec<QuarticHit<T>> {
    let mut hits = Vec::new();
    let mut x = T::one();
    while &x <= bound {
        let x2 = sq(&x);
        let x4 = sq(&x2);
        let mut y = T::one();
        while &y <= bound {
            if x.gcd(&y).is_one() && (!opposite_parity || x.is_even() != y.is_even()) {
                let y2 = sq(&y);
                let y4 = sq(&y2);
                let cross = x2.clone() * y2;
                let value = match equation {
                    QuarticEquation::Plus14 => {
                        x4.clone() + small::<T>(14) * cross + y4
                    }
                    // x⁴ + y⁴ ≥ 2x²y², so the subtraction stays positive
                    QuarticEquation::MinusMixed => x4.clone() + y4 - cross,
                };
                if let Some(z) = exact_sqrt(&value) {
                    hits.push(QuarticHit {
                        x: x.clone(),
                        y: y.clone(),
                        z,
                        equation,
                    });
                }
            }
            y = y + T::one();
        }
        x = x + T::one();
    }
    hits
}

/// Irrationality certificate for the diagonals of a primitive triple.
/// The raw radicands are kept unreduced so the parity identities can be
/// checked against them directly; the booleans are per-instance
/// non-square tests independent of δ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrationalityCertificate<T: ExactInt> {
    pub d1_radicand_raw: T,
    pub d2_radicand_raw: T,
    pub d1_irrational: bool,
    pub d2_irrational: bool,
}

pub fn certify_irrational<T: ExactInt>(triple: &PythTriple<T>) -> IrrationalityCertificate<T> {
    let four = small::<T>(4);
    let d1_radicand_raw = sq(triple.r1()) + four.clone() * sq(triple.r2());
    let d2_radicand_raw = four * sq(triple.r1()) + sq(triple.r2());
    IrrationalityCertificate {
        d1_irrational: exact_sqrt(&d1_radicand_raw).is_none(),
        d2_irrational: exact_sqrt(&d2_radicand_raw).is_none(),
        d1_radicand_raw,
        d2_radicand_raw,
    }
}
