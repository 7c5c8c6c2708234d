//! Exact lengths of the two-tangent-circle figure.
//!
//! Two circles of radii `R1 > R2` touch externally at `I`. A common external
//! tangent touches them at `T1` and `T2`, `M` is its midpoint, `M1`/`M2` are
//! the chord midpoints of `T1I`/`IT2`, and `K` is the external homothety
//! center where the tangent meets the line of centers. Every one of the
//! sixteen named lengths is a single-term surd in the radii, computed here
//! without any floating point. The sixteen right triangles of the figure are
//! assembled and checked against the Pythagorean identity exactly.

use crate::error::{Error, Result};
use crate::scalar::{small, ExactInt};
use crate::surd::Surd;
use num_rational::Ratio;
use num_traits::Signed;
use serde_json::{json, Value};

/// Radii with `R1 > R2 > 0`; the figure degenerates (no homothety center)
/// when the radii agree, so equality is rejected up front.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadiiPair<T: ExactInt> {
    r1: Ratio<T>,
    r2: Ratio<T>,
}

impl<T: ExactInt> RadiiPair<T> {
    pub fn new(r1: Ratio<T>, r2: Ratio<T>) -> Result<Self> {
        if !r2.is_positive() {
            return Err(Error::InvalidRadii(format!(
                "radii must be positive, got R1 = {r1}, R2 = {r2}"
            )));
        }
        if r1 <= r2 {
            return Err(Error::InvalidRadii(format!(
                "require R1 > R2, got R1 = {r1}, R2 = {r2}"
            )));
        }
        Ok(Self { r1, r2 })
    }

    pub fn from_integers(r1: T, r2: T) -> Result<Self> {
        Self::new(Ratio::from_integer(r1), Ratio::from_integer(r2))
    }

    pub fn r1(&self) -> &Ratio<T> {
        &self.r1
    }

    pub fn r2(&self) -> &Ratio<T> {
        &self.r2
    }
}

/// The sixteen named lengths, all canonical surds.
///
/// `d1`/`d2` are the diagonals `C1T2`/`C2T1`; they do not belong to any of
/// the sixteen right triangles but the oracle measures them, so they ride
/// along.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthSet<T: ExactInt> {
    pub t1t2: Surd<T>,
    pub x1: Surd<T>,
    pub x2: Surd<T>,
    pub a1: Surd<T>,
    pub a2: Surd<T>,
    pub h1: Surd<T>,
    pub h2: Surd<T>,
    pub m1m: Surd<T>,
    pub m2m: Surd<T>,
    pub im: Surd<T>,
    pub c2k: Surd<T>,
    pub c1k: Surd<T>,
    pub t2k: Surd<T>,
    pub t1k: Surd<T>,
    pub d1: Surd<T>,
    pub d2: Surd<T>,
}

impl<T: ExactInt> LengthSet<T> {
    /// Field view in declaration order, under the serialized names.
    pub fn named(&self) -> [(&'static str, &Surd<T>); 16] {
        [
            ("t1t2", &self.t1t2),
            ("x1", &self.x1),
            ("x2", &self.x2),
            ("a1", &self.a1),
            ("a2", &self.a2),
            ("h1", &self.h1),
            ("h2", &self.h2),
            ("m1m", &self.m1m),
            ("m2m", &self.m2m),
            ("im", &self.im),
            ("c2k", &self.c2k),
            ("c1k", &self.c1k),
            ("t2k", &self.t2k),
            ("t1k", &self.t1k),
            ("d1", &self.d1),
            ("d2", &self.d2),
        ]
    }

    /// Flat JSON object, each length in the textual surd format.
    pub fn to_json(&self) -> Value {
        let mut map = serde_json::Map::new();
        for (name, value) in self.named() {
            map.insert(name.to_string(), json!(value.to_string()));
        }
        Value::Object(map)
    }
}

/// Compute all sixteen lengths for a valid radii pair.
///
/// Everything is derived from three primitive square roots — `√R1`, `√R2`,
/// `√(R1+R2)` (plus `√(R1+4R2)`, `√(4R1+R2)` for the diagonals) — via
/// gcd-merging surd products and quotients, so radicands stay small and
/// like lengths automatically share radicands.
pub fn compute_lengths<T: ExactInt>(r: &RadiiPair<T>) -> LengthSet<T> {
    let (r1, r2) = (r.r1(), r.r2());
    let two = Ratio::from_integer(small::<T>(2));
    let four = Ratio::from_integer(small::<T>(4));
    let sum = r1 + r2;
    let diff = r1 - r2; // positive by construction

    let sqrt_r1 = Surd::from_sqrt(r1).expect("R1 > 0");
    let sqrt_r2 = Surd::from_sqrt(r2).expect("R2 > 0");
    let sqrt_sum = Surd::from_sqrt(&sum).expect("R1 + R2 > 0");

    let im = sqrt_r1.mul(&sqrt_r2); // √(R1R2)
    let t1t2 = im.doubled(); // 2√(R1R2)
    let x1 = sqrt_r1.mul(&sqrt_sum); // √(R1(R1+R2))
    let x2 = sqrt_r2.mul(&sqrt_sum); // √(R2(R1+R2))

    // a1 = 2R1·√(R2/(R1+R2)), h1 = R1·√(R1/(R1+R2)); same shape for a2, h2
    let root_r2_over_sum = sqrt_r2.div(&sqrt_sum).expect("sum > 0");
    let root_r1_over_sum = sqrt_r1.div(&sqrt_sum).expect("sum > 0");
    let a1 = root_r2_over_sum.scale(&(&two * r1)).expect("positive scale");
    let a2 = root_r1_over_sum.scale(&(&two * r2)).expect("positive scale");
    let h1 = root_r1_over_sum.scale(r1).expect("positive scale");
    let h2 = root_r2_over_sum.scale(r2).expect("positive scale");

    // x1 and h1 are rational multiples of √(R1(R1+R2)), so the differences
    // below are same-radicand by construction
    let m1m = x1.sub(&h1).expect("x1 >= h1 with matching radicands");
    let m2m = x2.sub(&h2).expect("x2 >= h2 with matching radicands");

    let c2k = Surd::rational(r2 * &sum / &diff).expect("positive");
    let c1k = Surd::rational(r1 * &sum / &diff).expect("positive");
    let t2k = im.scale(&(&two * r2 / &diff)).expect("positive scale");
    let t1k = im.scale(&(&two * r1 / &diff)).expect("positive scale");

    // diagonals: d1² = R1(R1+4R2), d2² = R2(4R1+R2)
    let d1 = sqrt_r1.mul(&Surd::from_sqrt(&(r1 + &four * r2)).expect("positive"));
    let d2 = sqrt_r2.mul(&Surd::from_sqrt(&(&four * r1 + r2)).expect("positive"));

    LengthSet {
        t1t2,
        x1,
        x2,
        a1,
        a2,
        h1,
        h2,
        m1m,
        m2m,
        im,
        c2k,
        c1k,
        t2k,
        t1k,
        d1,
        d2,
    }
}

/// One of the sixteen right triangles, named by its vertices and carrying
/// its group index (1–9) in the figure's catalogue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleRecord<T: ExactInt> {
    pub name: &'static str,
    pub group: u8,
    pub leg_a: Surd<T>,
    pub leg_b: Surd<T>,
    pub hyp: Surd<T>,
}

/// Human-readable description of each triangle group, indexed by `group - 1`.
pub const GROUP_SUMMARIES: [&str; 9] = [
    "hypotenuse R1, legs h1 and a1/2",
    "hypotenuse R2, legs h2 and a2/2",
    "hypotenuse T1T2/2, legs a1/2 and a2/2",
    "hypotenuse x1, legs R1 and T1T2/2",
    "hypotenuse x2, legs R2 and T1T2/2",
    "hypotenuse R1+R2, legs x1 and x2",
    "hypotenuse T1T2, legs a1 and a2",
    "hypotenuse C2K, legs R2 and T2K",
    "hypotenuse C1K, legs R1 and T1K",
];

/// Assemble the sixteen right triangles from a computed length set.
/// Grouping and order follow the figure's catalogue; congruent triangles
/// repeat their side lengths under their own vertex names.
pub fn assemble_triangles<T: ExactInt>(
    lengths: &LengthSet<T>,
    radii: &RadiiPair<T>,
) -> Vec<TriangleRecord<T>> {
    let big = Surd::rational(radii.r1().clone()).expect("R1 > 0");
    let small_r = Surd::rational(radii.r2().clone()).expect("R2 > 0");
    let center_span = Surd::rational(radii.r1() + radii.r2()).expect("positive");
    let half_a1 = lengths.a1.halved();
    let half_a2 = lengths.a2.halved();
    let half_tangent = lengths.t1t2.halved(); // = IM

    let mut out = Vec::with_capacity(16);
    let mut push = |name: &'static str, group: u8, leg_a: &Surd<T>, leg_b: &Surd<T>, hyp: &Surd<T>| {
        out.push(TriangleRecord {
            name,
            group,
            leg_a: leg_a.clone(),
            leg_b: leg_b.clone(),
            hyp: hyp.clone(),
        });
    };

    push("C1T1M1", 1, &lengths.h1, &half_a1, &big);
    push("C1M1I", 1, &lengths.h1, &half_a1, &big);
    push("C2T2M2", 2, &lengths.h2, &half_a2, &small_r);
    push("C2M2I", 2, &lengths.h2, &half_a2, &small_r);
    push("T1M1M", 3, &half_a1, &half_a2, &half_tangent);
    push("MM1I", 3, &half_a1, &half_a2, &half_tangent);
    push("IM2M", 3, &half_a1, &half_a2, &half_tangent);
    push("MM2T2", 3, &half_a1, &half_a2, &half_tangent);
    push("C1T1M", 4, &big, &half_tangent, &lengths.x1);
    push("C1IM", 4, &big, &half_tangent, &lengths.x1);
    push("C2T2M", 5, &small_r, &half_tangent, &lengths.x2);
    push("C2IM", 5, &small_r, &half_tangent, &lengths.x2);
    push("C1MC2", 6, &lengths.x1, &lengths.x2, &center_span);
    push("T1IT2", 7, &lengths.a1, &lengths.a2, &lengths.t1t2);
    push("C2T2K", 8, &small_r, &lengths.t2k, &lengths.c2k);
    push("C1T1K", 9, &big, &lengths.t1k, &lengths.c1k);
    out
}

/// Exact check of `leg_a² + leg_b² = hyp²`.
pub fn verify_pythagorean<T: ExactInt>(t: &TriangleRecord<T>) -> bool {
    t.leg_a.square() + t.leg_b.square() == t.hyp.square()
}
