//! Single-term quadratic surds `q·√s` with exact arithmetic.
//!
//! Every length of the tangent-circle figure reduces to this form, so the
//! representation is deliberately narrow: a nonnegative rational coefficient
//! and a squarefree radicand. Canonical form is unique, which makes equality
//! componentwise and ordering decidable by squaring. Sums of unlike surds
//! are a hard error rather than a silent float fallback.

use crate::error::{Error, Result};
use crate::scalar::{small, squarefree_decompose, ExactInt};
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// `coef · √radicand` with `coef ≥ 0` and `radicand` squarefree ≥ 1.
/// Zero is canonically `0·√1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd<T: ExactInt> {
    coef: Ratio<T>,
    radicand: T,
}

impl<T: ExactInt> Surd<T> {
    /// Canonicalizing constructor: extracts the square part of `radicand`
    /// into the coefficient. Rejects negative coefficients and nonpositive
    /// radicands.
    pub fn new(coef: Ratio<T>, radicand: T) -> Result<Self> {
        if coef.is_negative() {
            return Err(Error::InvalidInput(format!(
                "surd coefficient must be nonnegative, got {coef}"
            )));
        }
        let (s, k) = squarefree_decompose(&radicand)?;
        Ok(Self::canonical(coef * Ratio::from_integer(k), s))
    }

    /// A rational value, i.e. radicand 1.
    pub fn rational(q: Ratio<T>) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::InvalidInput(format!(
                "surd value must be nonnegative, got {q}"
            )));
        }
        Ok(Self::canonical(q, T::one()))
    }

    pub fn from_integer(n: T) -> Result<Self> {
        Self::rational(Ratio::from_integer(n))
    }

    pub fn zero() -> Self {
        Self::canonical(Ratio::zero(), T::one())
    }

    /// `√q` for a nonnegative rational `q`, in canonical form.
    ///
    /// `√(a/b) = √(ab)/b`; numerator and denominator are decomposed
    /// separately and merged by gcd so that no oversized product is ever
    /// factored.
    pub fn from_sqrt(q: &Ratio<T>) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::InvalidInput(format!(
                "cannot take a real square root of {q}"
            )));
        }
        if q.is_zero() {
            return Ok(Self::zero());
        }
        let (sa, ka) = squarefree_decompose(q.numer())?;
        let (sb, kb) = squarefree_decompose(q.denom())?;
        let g = sa.gcd(&sb);
        let radicand = (sa / g.clone()) * (sb.clone() / g.clone());
        let coef = Ratio::new(g * ka, sb * kb);
        Ok(Self::canonical(coef, radicand))
    }

    /// Trusted constructor for values already in canonical form.
    fn canonical(coef: Ratio<T>, radicand: T) -> Self {
        if coef.is_zero() {
            return Self {
                coef,
                radicand: T::one(),
            };
        }
        debug_assert!(!coef.is_negative());
        debug_assert!(radicand >= T::one());
        debug_assert_eq!(
            squarefree_decompose(&radicand).unwrap().1,
            T::one(),
            "radicand must be squarefree"
        );
        Self { coef, radicand }
    }

    pub fn coef(&self) -> &Ratio<T> {
        &self.coef
    }

    pub fn radicand(&self) -> &T {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coef.is_zero()
    }

    /// Radicand 1, i.e. the value is rational.
    pub fn is_rational(&self) -> bool {
        self.radicand.is_one()
    }

    /// Exact product. The merged radicand `s₁s₂` loses its square part
    /// `gcd(s₁,s₂)²` to the coefficient; the cofactors are coprime and
    /// squarefree, so no factorization is needed.
    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let g = self.radicand.gcd(&rhs.radicand);
        let radicand = (self.radicand.clone() / g.clone()) * (rhs.radicand.clone() / g.clone());
        let coef = &self.coef * &rhs.coef * Ratio::from_integer(g);
        Self::canonical(coef, radicand)
    }

    /// Exact quotient; `rhs` must be nonzero. Rationalizing gives
    /// `(q₁√s₁)/(q₂√s₂) = (q₁/(q₂s₂))·√(s₁s₂)`, merged by gcd as in `mul`.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::InvalidInput("division of surd by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let g = self.radicand.gcd(&rhs.radicand);
        let radicand = (self.radicand.clone() / g.clone()) * (rhs.radicand.clone() / g.clone());
        let coef = &self.coef / &rhs.coef * Ratio::new(g, rhs.radicand.clone());
        Ok(Self::canonical(coef, radicand))
    }

    /// `coef²·radicand`, the exact square.
    pub fn square(&self) -> Ratio<T> {
        &self.coef * &self.coef * Ratio::from_integer(self.radicand.clone())
    }

    /// Sum, defined only when the radicands agree or one side is zero.
    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.radicand != rhs.radicand {
            return Err(Error::IncompatibleRadicands(
                self.radicand.to_string(),
                rhs.radicand.to_string(),
            ));
        }
        Ok(Self::canonical(
            &self.coef + &rhs.coef,
            self.radicand.clone(),
        ))
    }

    /// Difference under the same compatibility rule; the result must be
    /// nonnegative.
    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.radicand != rhs.radicand {
            return Err(Error::IncompatibleRadicands(
                self.radicand.to_string(),
                rhs.radicand.to_string(),
            ));
        }
        if self.coef < rhs.coef {
            return Err(Error::InvalidInput(format!(
                "surd difference {self} - {rhs} is negative"
            )));
        }
        Ok(Self::canonical(
            &self.coef - &rhs.coef,
            self.radicand.clone(),
        ))
    }

    /// Scale by a nonnegative rational; exact.
    pub fn scale(&self, q: &Ratio<T>) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::InvalidInput(format!(
                "surd scale factor must be nonnegative, got {q}"
            )));
        }
        Ok(Self::canonical(&self.coef * q, self.radicand.clone()))
    }

    /// Exact half: halve the coefficient.
    pub fn halved(&self) -> Self {
        Self::canonical(&self.coef / Ratio::from_integer(small::<T>(2)), self.radicand.clone())
    }

    pub fn doubled(&self) -> Self {
        Self::canonical(&self.coef * Ratio::from_integer(small::<T>(2)), self.radicand.clone())
    }

    /// Total order; both operands are nonnegative, so comparing squares is
    /// exact and agrees with the real values.
    pub fn cmp_exact(&self, rhs: &Self) -> Ordering {
        self.square().cmp(&rhs.square())
    }

    /// Binary64 approximation, correctly rounded to within about 2 ulp
    /// (one rounding each for numerator, denominator, quotient, square
    /// root, and product).
    pub fn to_f64(&self) -> f64 {
        let numer = self.coef.numer().to_f64().unwrap_or(f64::NAN);
        let denom = self.coef.denom().to_f64().unwrap_or(f64::NAN);
        let rad = self.radicand.to_f64().unwrap_or(f64::NAN);
        numer / denom * rad.sqrt()
    }
}

impl<T: ExactInt> PartialOrd for Surd<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: ExactInt> Ord for Surd<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

/// `"a/b"` when the radicand is 1 (just `"a"` for integers), otherwise
/// `"a/b*sqrt(s)"`.
impl<T: ExactInt> fmt::Display for Surd<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.coef)
        } else {
            write!(f, "{}*sqrt({})", self.coef, self.radicand)
        }
    }
}

impl<T: ExactInt> FromStr for Surd<T> {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let parse_ratio = |part: &str| -> Result<Ratio<T>> {
            part.trim()
                .parse::<Ratio<T>>()
                .map_err(|_| Error::InvalidInput(format!("unreadable rational {part:?}")))
        };
        match text.split_once("*sqrt(") {
            None => Self::rational(parse_ratio(text)?),
            Some((coef_part, rest)) => {
                let radicand_part = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::InvalidInput(format!("unterminated sqrt in {text:?}")))?;
                let radicand = radicand_part
                    .trim()
                    .parse::<T>()
                    .map_err(|_| Error::InvalidInput(format!("unreadable radicand {radicand_part:?}")))?;
                if radicand < T::one() {
                    return Err(Error::InvalidInput(format!(
                        "radicand must be positive in {text:?}"
                    )));
                }
                Self::new(parse_ratio(coef_part)?, radicand)
            }
        }
    }
}
