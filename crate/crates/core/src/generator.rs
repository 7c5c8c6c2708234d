//! Fully integral configurations from `(m, n, t)`.
//!
//! Setting `δ = t·r3·(r1²−r2²)` turns every one of the fourteen derived
//! lengths into an integer, and the closed forms below give them directly.
//! The smallest instance is `(m, n, t) = (2, 1, 1)`: radii 560 and 315.

use crate::error::{Error, Result};
use crate::integrality::IntegerLengths;
use crate::lengths::{LengthSet, RadiiPair};
use crate::scalar::{cube, exact_sqrt, json_int, small, sq, squarefree_decompose, ExactInt};
use crate::surd::Surd;
use crate::triples::{triple_from_params, PythTriple, TripleParams};
use num_rational::Ratio;
use serde_json::Value;

/// A configuration in which all fourteen derived lengths are integers,
/// self-describing: generator parameters, triple, scale, radii, lengths,
/// and the squarefree radicands of the two irrational diagonals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullConfig<T: ExactInt> {
    pub params: TripleParams<T>,
    pub t: T,
    pub triple: PythTriple<T>,
    pub delta: T,
    pub radius1: T,
    pub radius2: T,
    pub lengths: IntegerLengths<T>,
    pub d1_radicand: T,
    pub d2_radicand: T,
}

/// Column order of the CSV serialization.
pub const CSV_HEADER: &str = "m,n,t,r1,r2,r3,delta,R1,R2,T1T2,x1,x2,a1,a2,h1,h2,x1mh1,x2mh2,IM,C2K,T2K,C1K,T1K,d1_radicand,d2_radicand";

impl<T: ExactInt> FullConfig<T> {
    pub fn radii(&self) -> RadiiPair<T> {
        RadiiPair::from_integers(self.radius1.clone(), self.radius2.clone())
            .expect("generated radii satisfy R1 > R2 > 0")
    }

    /// The sixteen-length view of this configuration: the fourteen integer
    /// lengths as radicand-1 surds plus the two irrational diagonals,
    /// suitable for triangle assembly and verification.
    pub fn length_set(&self) -> LengthSet<T> {
        let int_surd =
            |v: &T| Surd::from_integer(v.clone()).expect("generated lengths are positive");
        let ls = &self.lengths;
        let d1_coef = self.delta.clone() * self.triple.r1().clone();
        let d2_coef = self.delta.clone() * self.triple.r2().clone();
        LengthSet {
            t1t2: int_surd(&ls.t1t2),
            x1: int_surd(&ls.x1),
            x2: int_surd(&ls.x2),
            a1: int_surd(&ls.a1),
            a2: int_surd(&ls.a2),
            h1: int_surd(&ls.h1),
            h2: int_surd(&ls.h2),
            m1m: int_surd(&ls.x1mh1),
            m2m: int_surd(&ls.x2mh2),
            im: int_surd(&ls.im),
            c2k: int_surd(&ls.c2k),
            c1k: int_surd(&ls.c1k),
            t2k: int_surd(&ls.t2k),
            t1k: int_surd(&ls.t1k),
            d1: Surd::new(
                Ratio::from_integer(d1_coef),
                sq(self.triple.r1()) + small::<T>(4) * sq(self.triple.r2()),
            )
            .expect("positive radicand"),
            d2: Surd::new(
                Ratio::from_integer(d2_coef),
                small::<T>(4) * sq(self.triple.r1()) + sq(self.triple.r2()),
            )
            .expect("positive radicand"),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut map = serde_json::Map::new();
        map.insert("m".into(), json_int(self.params.m()));
        map.insert("n".into(), json_int(self.params.n()));
        map.insert("t".into(), json_int(&self.t));
        map.insert(
            "r".into(),
            Value::Array(vec![
                json_int(self.triple.r1()),
                json_int(self.triple.r2()),
                json_int(self.triple.r3()),
            ]),
        );
        map.insert("delta".into(), json_int(&self.delta));
        map.insert("R1".into(), json_int(&self.radius1));
        map.insert("R2".into(), json_int(&self.radius2));
        let mut table = serde_json::Map::new();
        for (name, value) in self.lengths.named() {
            table.insert(name.to_string(), json_int(value));
        }
        map.insert("lengths".into(), Value::Object(table));
        map.insert("d1_radicand".into(), json_int(&self.d1_radicand));
        map.insert("d2_radicand".into(), json_int(&self.d2_radicand));
        Value::Object(map)
    }

    /// One CSV row matching [`CSV_HEADER`].
    pub fn csv_row(&self) -> String {
        let mut fields: Vec<String> = vec![
            self.params.m().to_string(),
            self.params.n().to_string(),
            self.t.to_string(),
            self.triple.r1().to_string(),
            self.triple.r2().to_string(),
            self.triple.r3().to_string(),
            self.delta.to_string(),
            self.radius1.to_string(),
            self.radius2.to_string(),
        ];
        fields.extend(self.lengths.named().into_iter().map(|(_, v)| v.to_string()));
        fields.push(self.d1_radicand.to_string());
        fields.push(self.d2_radicand.to_string());
        fields.join(",")
    }
}

/// Build the fully integral configuration for `(m, n, t)`.
pub fn generate<T: ExactInt>(params: &TripleParams<T>, t: &T) -> Result<FullConfig<T>> {
    if t < &T::one() {
        return Err(Error::InvalidParams(format!("require t >= 1, got t = {t}")));
    }
    let triple = triple_from_params(params);
    Ok(config_from_triple(params.clone(), triple, t.clone()))
}

/// Same as [`generate`] but starting from a known primitive triple; the
/// generator pair is recovered from `m² = (r3 + odd leg)/2`.
pub fn generate_from_triple<T: ExactInt>(triple: &PythTriple<T>, t: &T) -> Result<FullConfig<T>> {
    if t < &T::one() {
        return Err(Error::InvalidParams(format!("require t >= 1, got t = {t}")));
    }
    let params = params_from_triple(triple)?;
    Ok(config_from_triple(params, triple.clone(), t.clone()))
}

fn params_from_triple<T: ExactInt>(triple: &PythTriple<T>) -> Result<TripleParams<T>> {
    let two = small::<T>(2);
    let odd = triple.odd_leg().clone();
    let m2 = (triple.r3().clone() + odd.clone()) / two.clone();
    let n2 = (triple.r3().clone() - odd) / two;
    match (exact_sqrt(&m2), exact_sqrt(&n2)) {
        (Some(m), Some(n)) => TripleParams::new(m, n),
        _ => Err(Error::InvalidTriple(format!(
            "no generator pair for {:?}",
            triple
        ))),
    }
}

fn config_from_triple<T: ExactInt>(
    params: TripleParams<T>,
    triple: PythTriple<T>,
    t: T,
) -> FullConfig<T> {
    let two = small::<T>(2);
    let (r1, r2, r3) = (triple.r1(), triple.r2(), triple.r3());
    let w = triple.leg_square_diff();
    let delta = t.clone() * r3.clone() * w.clone();
    let radius1 = delta.clone() * sq(r1);
    let radius2 = delta.clone() * sq(r2);

    let lengths = IntegerLengths {
        t1t2: two.clone() * t.clone() * r1.clone() * r2.clone() * r3.clone() * w.clone(),
        x1: t.clone() * r1.clone() * sq(r3) * w.clone(),
        x2: t.clone() * r2.clone() * sq(r3) * w.clone(),
        a1: two.clone() * t.clone() * r2.clone() * sq(r1) * w.clone(),
        a2: two.clone() * t.clone() * r1.clone() * sq(r2) * w.clone(),
        h1: t.clone() * cube(r1) * w.clone(),
        h2: t.clone() * cube(r2) * w.clone(),
        x1mh1: t.clone() * r1.clone() * sq(r2) * w.clone(),
        x2mh2: t.clone() * r2.clone() * sq(r1) * w.clone(),
        im: t.clone() * r1.clone() * r2.clone() * r3.clone() * w.clone(),
        c2k: t.clone() * sq(r2) * cube(r3),
        t2k: two.clone() * t.clone() * r1.clone() * r3.clone() * cube(r2),
        c1k: t.clone() * sq(r1) * cube(r3),
        t1k: two * t.clone() * r2.clone() * r3.clone() * cube(r1),
    };

    let d1_radicand = squarefree_decompose(&(sq(r1) + small::<T>(4) * sq(r2)))
        .expect("positive")
        .0;
    let d2_radicand = squarefree_decompose(&(small::<T>(4) * sq(r1) + sq(r2)))
        .expect("positive")
        .0;

    FullConfig {
        params,
        t,
        triple,
        delta,
        radius1,
        radius2,
        lengths,
        d1_radicand,
        d2_radicand,
    }
}

/// All fully integral configurations with `R1 ≤ max_radius1`, sorted by
/// `(R1, R2)`.
///
/// The sweep bound comes from `R1 = t·r3·r1²·(r1²−r2²) > r3⁴/2 > m⁸/2`
/// (using `r1² > r3²/2` and `r1²−r2² ≥ r1+r2 > r3`), so `m` stops once
/// `m⁸ > 2·max_radius1`; below 560 the list is empty.
pub fn enumerate_configs<T: ExactInt>(max_radius1: &T) -> Vec<FullConfig<T>> {
    let mut out = Vec::new();
    let two = small::<T>(2);
    let mut m = two.clone();
    while pow8(&m) <= two.clone() * max_radius1.clone() {
        let mut n = T::one();
        while n < m {
            if m.gcd(&n).is_one() && m.is_even() != n.is_even() {
                let params = TripleParams::new(m.clone(), n.clone()).expect("screened");
                let triple = triple_from_params(&params);
                let base = triple.r3().clone() * sq(triple.r1()) * triple.leg_square_diff();
                if &base <= max_radius1 {
                    let t_max = max_radius1.clone() / base;
                    let mut t = T::one();
                    while t <= t_max {
                        out.push(config_from_triple(params.clone(), triple.clone(), t.clone()));
                        t = t + T::one();
                    }
                }
            }
            n = n + T::one();
        }
        m = m + T::one();
    }
    out.sort_by(|a, b| (&a.radius1, &a.radius2).cmp(&(&b.radius1, &b.radius2)));
    out.dedup_by(|a, b| a.radius1 == b.radius1 && a.radius2 == b.radius2);
    out
}

fn pow8<T: ExactInt>(v: &T) -> T {
    let s = sq(v);
    let q = sq(&s);
    sq(&q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lengths::{assemble_triangles, verify_pythagorean};
    use crate::Int;

    fn params(m: i64, n: i64) -> TripleParams<Int> {
        TripleParams::new(Int::from(m), Int::from(n)).unwrap()
    }

    fn gen(m: i64, n: i64, t: i64) -> FullConfig<Int> {
        generate(&params(m, n), &Int::from(t)).unwrap()
    }

    #[test]
    fn smallest_configuration() {
        let c = gen(2, 1, 1);
        assert_eq!(c.delta, Int::from(35));
        assert_eq!(c.radius1, Int::from(560));
        assert_eq!(c.radius2, Int::from(315));
        let expected: [(&str, i64); 14] = [
            ("T1T2", 840),
            ("x1", 700),
            ("x2", 525),
            ("a1", 672),
            ("a2", 504),
            ("h1", 448),
            ("h2", 189),
            ("x1mh1", 252),
            ("x2mh2", 336),
            ("IM", 420),
            ("C2K", 1125),
            ("T2K", 1080),
            ("C1K", 2000),
            ("T1K", 1920),
        ];
        for (name, want) in expected {
            assert_eq!(c.lengths.get(name).unwrap(), &Int::from(want), "{name}");
        }
        // 52 = 4·13 and 73 squarefree
        assert_eq!(c.d1_radicand, Int::from(13));
        assert_eq!(c.d2_radicand, Int::from(73));
    }

    #[test]
    fn t2k_value_is_consistent_across_routes() {
        // closed form: 2·1·4·5·3³ = 1080
        assert_eq!(2 * 4 * 5 * 27, 1080);
        let c = gen(2, 1, 1);
        assert_eq!(c.lengths.t2k, Int::from(1080));
        // segment additivity: T1K − T2K = T1T2
        assert_eq!(&c.lengths.t1k - &c.lengths.t2k, c.lengths.t1t2);
        // independent route through the surd engine's 2R2√(R1R2)/(R1−R2)
        let ls = crate::lengths::compute_lengths(&c.radii());
        assert_eq!(ls.t2k, Surd::from_integer(Int::from(1080)).unwrap());
        // the hypotenuse check the misprinted 360 would fail
        assert_eq!(315 * 315 + 1080 * 1080, 1125 * 1125);
        assert_ne!(315 * 315 + 360 * 360, 1125 * 1125);
    }

    #[test]
    fn linear_in_t() {
        let base = gen(2, 1, 1);
        let doubled = gen(2, 1, 2);
        assert_eq!(doubled.radius1, Int::from(2) * &base.radius1);
        assert_eq!(doubled.radius2, Int::from(2) * &base.radius2);
        for ((name, a), (_, b)) in base
            .lengths
            .named()
            .into_iter()
            .zip(doubled.lengths.named())
        {
            assert_eq!(&(Int::from(2) * a), b, "{name}");
        }
        // radicands do not scale with t
        assert_eq!(base.d1_radicand, doubled.d1_radicand);
    }

    #[test]
    fn from_triple_recovers_parameters() {
        let triple = PythTriple::new(Int::from(4), Int::from(3), Int::from(5)).unwrap();
        let via_triple = generate_from_triple(&triple, &Int::from(1)).unwrap();
        assert_eq!(via_triple, gen(2, 1, 1));

        let triple = PythTriple::new(Int::from(12), Int::from(5), Int::from(13)).unwrap();
        let c = generate_from_triple(&triple, &Int::from(1)).unwrap();
        assert_eq!(c.radius1, Int::from(222_768)); // 13·144·119
        assert_eq!(c.params, params(3, 2));

        let c = generate_from_triple(
            &PythTriple::new(Int::from(4), Int::from(3), Int::from(5)).unwrap(),
            &Int::from(3),
        )
        .unwrap();
        assert_eq!(c.radius1, Int::from(1680));
    }

    #[test]
    fn rejects_invalid_t() {
        assert!(generate(&params(2, 1), &Int::from(0)).is_err());
    }

    #[test]
    fn enumeration_bounds() {
        let configs = enumerate_configs(&Int::from(560));
        assert_eq!(configs.len(), 1);
        assert_eq!(configs[0], gen(2, 1, 1));

        assert!(enumerate_configs(&Int::from(559)).is_empty());

        let configs = enumerate_configs(&Int::from(1120));
        assert_eq!(configs.len(), 2);
        assert_eq!(configs[0], gen(2, 1, 1));
        assert_eq!(configs[1], gen(2, 1, 2));
    }

    #[test]
    fn generated_triangles_verify_exactly() {
        let c = gen(3, 2, 1);
        let triangles = assemble_triangles(&c.length_set(), &c.radii());
        assert_eq!(triangles.len(), 16);
        assert!(triangles.iter().all(verify_pythagorean));
    }

    #[test]
    fn half_tangent_is_im_is_delta_r1_r2() {
        for (m, n, t) in [(2, 1, 1), (3, 2, 2), (4, 1, 3), (5, 2, 1)] {
            let c = gen(m, n, t);
            assert_eq!(&c.lengths.t1t2, &(Int::from(2) * &c.lengths.im));
            assert_eq!(c.lengths.im, &c.delta * c.triple.r1() * c.triple.r2());
        }
    }

    #[test]
    fn csv_row_matches_header() {
        let c = gen(2, 1, 1);
        let header_fields = CSV_HEADER.split(',').count();
        let row = c.csv_row();
        assert_eq!(row.split(',').count(), header_fields);
        assert_eq!(
            row,
            "2,1,1,4,3,5,35,560,315,840,700,525,672,504,448,189,252,336,420,1125,1080,2000,1920,13,73"
        );
    }

    #[test]
    fn json_mirrors_fields() {
        let c = gen(3, 2, 1);
        let v = c.to_json();
        assert_eq!(v["r"], serde_json::json!([12, 5, 13]));
        assert_eq!(v["m"], 3);
        assert_eq!(v["R1"], 222_768);
        assert_eq!(v["lengths"]["T1T2"], serde_json::json!(2 * 12 * 5 * 13 * 119));
    }
}
