//! The integer scalar abstraction and squarefree machinery.
//!
//! Every formula module is generic over [`ExactInt`], so the same code runs
//! over `i64`, `i128`, or the arbitrary-precision [`crate::Int`] chosen as
//! the crate-root default. Fixed-width instantiations are the caller's
//! responsibility to size; the `BigInt` default never overflows.

use crate::error::{Error, Result};
use num_integer::{Integer, Roots};
use num_traits::{FromPrimitive, Signed, ToPrimitive};
use std::fmt::{Debug, Display};
use std::str::FromStr;

/// Everything the exact engines need from an integer type.
pub trait ExactInt:
    Integer + Roots + Signed + Clone + FromPrimitive + ToPrimitive + FromStr + Display + Debug
{
}

impl<T> ExactInt for T where
    T: Integer + Roots + Signed + Clone + FromPrimitive + ToPrimitive + FromStr + Display + Debug
{
}

/// Lift a small constant into `T`.
pub(crate) fn small<T: ExactInt>(v: u32) -> T {
    T::from_u32(v).expect("small constant fits every scalar")
}

pub(crate) fn sq<T: ExactInt>(x: &T) -> T {
    x.clone() * x.clone()
}

pub(crate) fn cube<T: ExactInt>(x: &T) -> T {
    x.clone() * x.clone() * x.clone()
}

/// `true` iff `n = k²` for some integer `k`. Negative inputs are not
/// squares. Uses integer square roots only; no floating point.
pub fn is_perfect_square<T: ExactInt>(n: &T) -> bool {
    exact_sqrt(n).is_some()
}

/// The integer `k` with `k² = n`, when one exists.
pub fn exact_sqrt<T: ExactInt>(n: &T) -> Option<T> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &sq(&r) == n {
        Some(r)
    } else {
        None
    }
}

/// Decompose `n = s·k²` with `s` squarefree.
///
/// Trial division runs only up to the cube root of the unfactored cofactor:
/// once every prime below that bound is stripped, at most two prime factors
/// remain, and a perfect-square test settles whether they are equal. Inputs
/// that fit in `u64` take a native fast path.
pub fn squarefree_decompose<T: ExactInt>(n: &T) -> Result<(T, T)> {
    if n < &T::one() {
        return Err(Error::InvalidInput(format!(
            "squarefree decomposition requires n >= 1, got {n}"
        )));
    }
    if let Some(v) = n.to_u64() {
        let (s, k) = squarefree_decompose_u64(v);
        return Ok((
            T::from_u64(s).expect("squarefree part fits"),
            T::from_u64(k).expect("square part fits"),
        ));
    }

    let mut m = n.clone();
    let mut s = T::one();
    let mut k = T::one();
    let mut d: T = small(2);
    while sq(&d) <= m {
        if cube(&d) > m {
            break;
        }
        if m.is_multiple_of(&d) {
            let mut exp = 0u32;
            while m.is_multiple_of(&d) {
                m = m / d.clone();
                exp += 1;
            }
            for _ in 0..exp / 2 {
                k = k * d.clone();
            }
            if exp % 2 == 1 {
                s = s * d.clone();
            }
        }
        d = d + T::one();
    }
    let (ts, tk) = split_rough_part(&m);
    Ok((s * ts, k * tk))
}

/// Tail step: `m` has no prime factor below its cube root, so it is 1, a
/// prime, a prime square, or a product of two distinct primes.
fn split_rough_part<T: ExactInt>(m: &T) -> (T, T) {
    if m.is_one() {
        return (T::one(), T::one());
    }
    match exact_sqrt(m) {
        Some(r) => (T::one(), r),
        None => (m.clone(), T::one()),
    }
}

fn squarefree_decompose_u64(n: u64) -> (u64, u64) {
    let mut m = n;
    let mut s = 1u64;
    let mut k = 1u64;
    let mut d = 2u64;
    while d * d <= m {
        if (d as u128) * (d as u128) * (d as u128) > m as u128 {
            break;
        }
        if m.is_multiple_of(d) {
            let mut exp = 0u32;
            while m.is_multiple_of(d) {
                m /= d;
                exp += 1;
            }
            k *= d.pow(exp / 2);
            if exp % 2 == 1 {
                s *= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        let r = m.sqrt();
        if r * r == m {
            k *= r;
        } else {
            s *= m;
        }
    }
    (s, k)
}

/// JSON number when the value fits `i64`, decimal string otherwise.
pub(crate) fn json_int<T: ExactInt>(v: &T) -> serde_json::Value {
    match v.to_i64() {
        Some(n) => n.into(),
        None => v.to_string().into(),
    }
}
