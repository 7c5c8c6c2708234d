//! Integrality classification for integer radii.
//!
//! With `R1 = δr1²`, `R2 = δr2²` (coprime `r1, r2`), the tangent and its
//! half become integers; if `(r1, r2, r3)` is moreover a Pythagorean triple
//! the cevians `x1, x2` join them and the remaining ten lengths are at least
//! rational; and all fourteen are integers exactly when `r3·(r1²−r2²)`
//! divides δ. The tiers below name those four rungs.

use crate::error::{Error, Result};
use crate::scalar::{cube, exact_sqrt, json_int, small, sq, ExactInt};
use crate::triples::{square_product_decompose, PythTriple};
use num_rational::Ratio;
use serde_json::{json, Value};
use std::fmt;

/// Serialized names of the fourteen derived lengths, in canonical order.
pub const LENGTH_NAMES: [&str; 14] = [
    "T1T2", "x1", "x2", "a1", "a2", "h1", "h2", "x1mh1", "x2mh2", "IM", "C2K", "T2K", "C1K",
    "T1K",
];

/// The fourteen derived lengths of a configuration, generic in the value
/// type: exact rationals here, plain integers in the generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthTable<V> {
    pub t1t2: V,
    pub x1: V,
    pub x2: V,
    pub a1: V,
    pub a2: V,
    pub h1: V,
    pub h2: V,
    pub x1mh1: V,
    pub x2mh2: V,
    pub im: V,
    pub c2k: V,
    pub t2k: V,
    pub c1k: V,
    pub t1k: V,
}

impl<V> LengthTable<V> {
    /// Entries in [`LENGTH_NAMES`] order.
    pub fn named(&self) -> [(&'static str, &V); 14] {
        [
            ("T1T2", &self.t1t2),
            ("x1", &self.x1),
            ("x2", &self.x2),
            ("a1", &self.a1),
            ("a2", &self.a2),
            ("h1", &self.h1),
            ("h2", &self.h2),
            ("x1mh1", &self.x1mh1),
            ("x2mh2", &self.x2mh2),
            ("IM", &self.im),
            ("C2K", &self.c2k),
            ("T2K", &self.t2k),
            ("C1K", &self.c1k),
            ("T1K", &self.t1k),
        ]
    }

    pub fn get(&self, name: &str) -> Option<&V> {
        self.named().into_iter().find(|(n, _)| *n == name).map(|(_, v)| v)
    }
}

pub type RationalLengths<T> = LengthTable<Ratio<T>>;
pub type IntegerLengths<T> = LengthTable<T>;

/// The integrality ladder, bottom to top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tier {
    /// `R1·R2` is not a perfect square: the tangent length is irrational.
    NonSquareProduct,
    /// Tangent-related lengths (`T1T2`, `IM`) are integers; `r1²+r2²` is not
    /// a square, so the cevians are irrational.
    TangentIntegral,
    /// The cevians `x1, x2` are integers too and the remaining lengths are
    /// rational.
    CevianIntegral,
    /// All fourteen derived lengths are integers.
    FullyIntegral,
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self {
            Tier::NonSquareProduct => "NonSquareProduct",
            Tier::TangentIntegral => "TangentIntegral",
            Tier::CevianIntegral => "CevianIntegral",
            Tier::FullyIntegral => "FullyIntegral",
        };
        f.write_str(label)
    }
}

/// Classification result: the tier plus whatever structure exists at that
/// tier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegralityReport<T: ExactInt> {
    NonSquareProduct,
    TangentIntegral {
        delta: T,
        r1: T,
        r2: T,
    },
    CevianIntegral {
        delta: T,
        triple: PythTriple<T>,
        lengths: RationalLengths<T>,
    },
    FullyIntegral {
        delta: T,
        triple: PythTriple<T>,
        t: T,
        lengths: RationalLengths<T>,
    },
}

impl<T: ExactInt> IntegralityReport<T> {
    pub fn tier(&self) -> Tier {
        match self {
            Self::NonSquareProduct => Tier::NonSquareProduct,
            Self::TangentIntegral { .. } => Tier::TangentIntegral,
            Self::CevianIntegral { .. } => Tier::CevianIntegral,
            Self::FullyIntegral { .. } => Tier::FullyIntegral,
        }
    }

    pub fn delta(&self) -> Option<&T> {
        match self {
            Self::NonSquareProduct => None,
            Self::TangentIntegral { delta, .. }
            | Self::CevianIntegral { delta, .. }
            | Self::FullyIntegral { delta, .. } => Some(delta),
        }
    }

    pub fn triple(&self) -> Option<&PythTriple<T>> {
        match self {
            Self::CevianIntegral { triple, .. } | Self::FullyIntegral { triple, .. } => {
                Some(triple)
            }
            _ => None,
        }
    }

    pub fn scale(&self) -> Option<&T> {
        match self {
            Self::FullyIntegral { t, .. } => Some(t),
            _ => None,
        }
    }

    pub fn lengths(&self) -> Option<&RationalLengths<T>> {
        match self {
            Self::CevianIntegral { lengths, .. } | Self::FullyIntegral { lengths, .. } => {
                Some(lengths)
            }
            _ => None,
        }
    }

    /// `{"tier": ..., "delta": ..., "r": [...], "t": ..., "lengths": {...}}`
    /// with absent rungs omitted. Length values are rendered `"p/q"`.
    pub fn to_json(&self) -> Value {
        let mut map = serde_json::Map::new();
        map.insert("tier".into(), json!(self.tier().to_string()));
        if let Some(delta) = self.delta() {
            map.insert("delta".into(), json_int(delta));
        }
        match self {
            Self::TangentIntegral { r1, r2, .. } => {
                map.insert("r".into(), Value::Array(vec![json_int(r1), json_int(r2)]));
            }
            Self::CevianIntegral { triple, .. } | Self::FullyIntegral { triple, .. } => {
                map.insert(
                    "r".into(),
                    Value::Array(vec![
                        json_int(triple.r1()),
                        json_int(triple.r2()),
                        json_int(triple.r3()),
                    ]),
                );
            }
            Self::NonSquareProduct => {}
        }
        if let Some(t) = self.scale() {
            map.insert("t".into(), json_int(t));
        }
        if let Some(lengths) = self.lengths() {
            let mut table = serde_json::Map::new();
            for (name, value) in lengths.named() {
                table.insert(name.to_string(), json!(value.to_string()));
            }
            map.insert("lengths".into(), Value::Object(table));
        }
        Value::Object(map)
    }
}

/// Classify an integer radii pair into its tier.
pub fn classify<T: ExactInt>(radius1: &T, radius2: &T) -> Result<IntegralityReport<T>> {
    if radius2 < &T::one() {
        return Err(Error::InvalidInput(format!(
            "radii must be positive integers, got ({radius1}, {radius2})"
        )));
    }
    if radius1 <= radius2 {
        return Err(Error::InvalidRadii(format!(
            "require R1 > R2, got R1 = {radius1}, R2 = {radius2}"
        )));
    }
    let Some((delta, r1, r2)) = square_product_decompose(radius1, radius2)? else {
        return Ok(IntegralityReport::NonSquareProduct);
    };
    let Some(r3) = exact_sqrt(&(sq(&r1) + sq(&r2))) else {
        return Ok(IntegralityReport::TangentIntegral { delta, r1, r2 });
    };
    let triple = PythTriple::new(r1, r2, r3).expect("decomposition yields a primitive triple");
    let lengths = rational_lengths(&delta, &triple);
    let modulus = triple.r3().clone() * triple.leg_square_diff();
    if delta.is_multiple_of(&modulus) {
        let t = delta.clone() / modulus;
        Ok(IntegralityReport::FullyIntegral {
            delta,
            triple,
            t,
            lengths,
        })
    } else {
        Ok(IntegralityReport::CevianIntegral {
            delta,
            triple,
            lengths,
        })
    }
}

/// The fourteen lengths as exact rationals in `δ, r1, r2, r3`.
pub fn rational_lengths<T: ExactInt>(delta: &T, triple: &PythTriple<T>) -> RationalLengths<T> {
    let two = small::<T>(2);
    let (r1, r2, r3) = (triple.r1(), triple.r2(), triple.r3());
    let diff = triple.leg_square_diff();
    let int = |v: T| Ratio::from_integer(v);
    let over = |num: T, den: T| Ratio::new(num, den);

    LengthTable {
        t1t2: int(two.clone() * delta.clone() * r1.clone() * r2.clone()),
        x1: int(delta.clone() * r1.clone() * r3.clone()),
        x2: int(delta.clone() * r2.clone() * r3.clone()),
        a1: over(two.clone() * delta.clone() * r2.clone() * sq(r1), r3.clone()),
        a2: over(two.clone() * delta.clone() * r1.clone() * sq(r2), r3.clone()),
        h1: over(delta.clone() * cube(r1), r3.clone()),
        h2: over(delta.clone() * cube(r2), r3.clone()),
        x1mh1: over(delta.clone() * r1.clone() * sq(r2), r3.clone()),
        x2mh2: over(delta.clone() * r2.clone() * sq(r1), r3.clone()),
        im: int(delta.clone() * r1.clone() * r2.clone()),
        c2k: over(delta.clone() * sq(r2) * sq(r3), diff.clone()),
        t2k: over(two.clone() * delta.clone() * cube(r2) * r1.clone(), diff.clone()),
        c1k: over(delta.clone() * sq(r1) * sq(r3), diff.clone()),
        t1k: over(two * delta.clone() * cube(r1) * r2.clone(), diff),
    }
}

/// `true` iff all fourteen lengths are integers for this `(triple, δ)`.
///
/// Checked by direct integrality of each length (denominator divides
/// numerator), not via the divisibility shortcut `r3(r1²−r2²) | δ` — the
/// equivalence of the two is exactly what the test suite pins down.
pub fn necessity_check<T: ExactInt>(triple: &PythTriple<T>, delta: &T) -> bool {
    rational_lengths(delta, triple)
        .named()
        .into_iter()
        .all(|(_, value)| value.denom().is_one())
}
