//! Primitive Pythagorean triples: the (m, n) parametrization, bounded
//! enumeration, the square-product decomposition, and the coprimeness
//! conditions the integrality argument leans on.

use crate::error::{Error, Result};
use crate::scalar::{cube, exact_sqrt, sq, ExactInt};

/// Generator pair for a primitive triple: `m > n ≥ 1`, coprime, opposite
/// parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleParams<T: ExactInt> {
    m: T,
    n: T,
}

impl<T: ExactInt> TripleParams<T> {
    pub fn new(m: T, n: T) -> Result<Self> {
        if n < T::one() || m < T::one() {
            return Err(Error::InvalidParams(format!(
                "require m > n >= 1, got m = {m}, n = {n}"
            )));
        }
        if !m.gcd(&n).is_one() || m.is_even() == n.is_even() {
            return Err(Error::InvalidParams(format!(
                "m and n must be coprime with opposite parity, got m = {m}, n = {n}"
            )));
        }
        if m <= n {
            return Err(Error::InvalidParams(format!(
                "require m > n >= 1, got m = {m}, n = {n}"
            )));
        }
        Ok(Self { m, n })
    }

    pub fn m(&self) -> &T {
        &self.m
    }

    pub fn n(&self) -> &T {
        &self.n
    }
}

/// A primitive Pythagorean triple ordered `r1 > r2` (legs) with hypotenuse
/// `r3`. Exactly one leg is even and `r3` is odd; both facts follow from
/// primitivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PythTriple<T: ExactInt> {
    r1: T,
    r2: T,
    r3: T,
}

impl<T: ExactInt> PythTriple<T> {
    pub fn new(r1: T, r2: T, r3: T) -> Result<Self> {
        if r2 < T::one() || r3 < T::one() {
            return Err(Error::InvalidTriple(format!(
                "entries must be positive, got ({r1}, {r2}, {r3})"
            )));
        }
        if r1 <= r2 {
            return Err(Error::InvalidTriple(format!(
                "legs must satisfy r1 > r2, got ({r1}, {r2}, {r3})"
            )));
        }
        if sq(&r1) + sq(&r2) != sq(&r3) {
            return Err(Error::InvalidTriple(format!(
                "{r1}^2 + {r2}^2 != {r3}^2"
            )));
        }
        if !r1.gcd(&r2).is_one() {
            return Err(Error::InvalidTriple(format!(
                "triple ({r1}, {r2}, {r3}) is not primitive"
            )));
        }
        Ok(Self { r1, r2, r3 })
    }

    pub fn r1(&self) -> &T {
        &self.r1
    }

    pub fn r2(&self) -> &T {
        &self.r2
    }

    pub fn r3(&self) -> &T {
        &self.r3
    }

    /// The odd leg (`m² − n²` in the parametrization).
    pub fn odd_leg(&self) -> &T {
        if self.r1.is_odd() {
            &self.r1
        } else {
            &self.r2
        }
    }

    /// `r1² − r2²`, the denominator of the homothety-center lengths.
    pub fn leg_square_diff(&self) -> T {
        sq(&self.r1) - sq(&self.r2)
    }
}

/// `(m² − n², 2mn, m² + n²)` with the legs sorted so `r1 > r2`.
pub fn triple_from_params<T: ExactInt>(params: &TripleParams<T>) -> PythTriple<T> {
    let (m, n) = (params.m(), params.n());
    let odd = sq(m) - sq(n);
    let even = T::from_u8(2).unwrap() * m.clone() * n.clone();
    let r3 = sq(m) + sq(n);
    let (r1, r2) = if odd > even { (odd, even) } else { (even, odd) };
    debug_assert!(r1.gcd(&r2).is_one());
    PythTriple { r1, r2, r3 }
}

/// All primitive triples with `r3 ≤ max_r3`, sorted by `(r3, r1)`.
/// Below the smallest triple (hypotenuse 5) the list is empty.
pub fn enumerate_primitive_triples<T: ExactInt>(max_r3: &T) -> Vec<PythTriple<T>> {
    let mut out = Vec::new();
    let mut m = T::from_u8(2).unwrap();
    while &(sq(&m) + T::one()) <= max_r3 {
        let mut n = T::one();
        while n < m {
            if m.gcd(&n).is_one() && m.is_even() != n.is_even() && &(sq(&m) + sq(&n)) <= max_r3 {
                let params = TripleParams {
                    m: m.clone(),
                    n: n.clone(),
                };
                out.push(triple_from_params(&params));
            }
            n = n + T::one();
        }
        m = m + T::one();
    }
    out.sort_by(|a, b| (a.r3(), a.r1()).cmp(&(b.r3(), b.r1())));
    out.dedup();
    out
}

/// Decompose `a = δ·r1²`, `b = δ·r2²` with `δ = gcd(a, b)` and coprime
/// `r1, r2`. Possible precisely when `a·b` is a perfect square; returns
/// `None` otherwise.
pub fn square_product_decompose<T: ExactInt>(a: &T, b: &T) -> Result<Option<(T, T, T)>> {
    if a < &T::one() || b < &T::one() {
        return Err(Error::InvalidInput(format!(
            "square-product decomposition requires positive integers, got ({a}, {b})"
        )));
    }
    let delta = a.gcd(b);
    let qa = a.clone() / delta.clone();
    let qb = b.clone() / delta.clone();
    match (exact_sqrt(&qa), exact_sqrt(&qb)) {
        (Some(r1), Some(r2)) => Ok(Some((delta, r1, r2))),
        _ => Ok(None),
    }
}

/// One of the ten coprimeness conditions guaranteeing that the cevian and
/// homothety denominators never share a factor with their numerators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimenessCheck {
    pub condition: &'static str,
    pub holds: bool,
}

/// Evaluate all ten coprimeness conditions for a primitive triple. Every
/// one holds for every primitive triple; returning the booleans keeps the
/// claim checkable rather than assumed.
pub fn verify_coprimeness<T: ExactInt>(t: &PythTriple<T>) -> Vec<CoprimenessCheck> {
    let two = T::from_u8(2).unwrap();
    let (r1, r2, r3) = (t.r1(), t.r2(), t.r3());
    let diff = t.leg_square_diff();
    let checks: [(&'static str, T, T); 10] = [
        ("gcd(r3, 2*r2*r1^2) = 1", r3.clone(), two.clone() * r2.clone() * sq(r1)),
        ("gcd(r3, 2*r1*r2^2) = 1", r3.clone(), two.clone() * r1.clone() * sq(r2)),
        ("gcd(r3, r1^3) = 1", r3.clone(), cube(r1)),
        ("gcd(r3, r2^3) = 1", r3.clone(), cube(r2)),
        ("gcd(r3, r1*r2^2) = 1", r3.clone(), r1.clone() * sq(r2)),
        ("gcd(r3, r2*r1^2) = 1", r3.clone(), r2.clone() * sq(r1)),
        ("gcd(r1^2 - r2^2, r2^2*r3^2) = 1", diff.clone(), sq(r2) * sq(r3)),
        ("gcd(r1^2 - r2^2, 2*r2^3*r1) = 1", diff.clone(), two.clone() * cube(r2) * r1.clone()),
        ("gcd(r1^2 - r2^2, r1^2*r3^2) = 1", diff.clone(), sq(r1) * sq(r3)),
        ("gcd(r1^2 - r2^2, 2*r1^3*r2) = 1", diff, two * cube(r1) * r2.clone()),
    ];
    checks
        .into_iter()
        .map(|(condition, x, y)| CoprimenessCheck {
            condition,
            holds: x.gcd(&y).is_one(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;
    use num_integer::Integer;
    use num_traits::One;
    use proptest::prelude::*;

    fn params(m: i64, n: i64) -> TripleParams<Int> {
        TripleParams::new(Int::from(m), Int::from(n)).unwrap()
    }

    #[test]
    fn generator_examples() {
        let t = triple_from_params(&params(2, 1));
        assert_eq!((t.r1(), t.r2(), t.r3()), (&4.into(), &3.into(), &5.into()));

        let t = triple_from_params(&params(3, 2));
        assert_eq!((t.r1(), t.r2(), t.r3()), (&12.into(), &5.into(), &13.into()));

        // brute force: 15² + 8² = 289 = 17²
        let t = triple_from_params(&params(4, 1));
        assert_eq!((t.r1(), t.r2(), t.r3()), (&15.into(), &8.into(), &17.into()));
        assert_eq!(15 * 15 + 8 * 8, 17 * 17);
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(TripleParams::new(Int::from(2), Int::from(2)).is_err());
        assert!(TripleParams::new(Int::from(3), Int::from(1)).is_err()); // both odd
        assert!(TripleParams::new(Int::from(6), Int::from(3)).is_err()); // gcd 3
        assert!(TripleParams::new(Int::from(1), Int::from(1)).is_err());
        assert!(TripleParams::new(Int::from(2), Int::from(0)).is_err());
    }

    #[test]
    fn enumeration_matches_exhaustive_scan() {
        // independent oracle: scan all (a, b, c) with a² + b² = c², gcd = 1
        let max = 13i64;
        let mut oracle = Vec::new();
        for c in 1..=max {
            for b in 1..c {
                for a in (b + 1)..c {
                    if a * a + b * b == c * c && num_integer::gcd(a, b) == 1 {
                        oracle.push((a, b, c));
                    }
                }
            }
        }
        assert_eq!(oracle, vec![(4, 3, 5), (12, 5, 13)]);

        let got: Vec<_> = enumerate_primitive_triples(&Int::from(max))
            .into_iter()
            .map(|t| (t.r1().clone(), t.r2().clone(), t.r3().clone()))
            .collect();
        assert_eq!(
            got,
            vec![
                (4.into(), 3.into(), 5.into()),
                (12.into(), 5.into(), 13.into())
            ]
        );

        assert_eq!(enumerate_primitive_triples(&Int::from(5)).len(), 1);
        assert!(enumerate_primitive_triples(&Int::from(4)).is_empty());
    }

    #[test]
    fn square_product_examples() {
        // gcd = 35, 560/35 = 16 = 4², 315/35 = 9 = 3²
        assert_eq!(
            square_product_decompose(&Int::from(560), &Int::from(315)).unwrap(),
            Some((35.into(), 4.into(), 3.into()))
        );
        assert_eq!(
            square_product_decompose(&Int::from(42), &Int::from(42)).unwrap(),
            Some((42.into(), 1.into(), 1.into()))
        );
        // 3·2 = 6 is not a perfect square
        assert_eq!(square_product_decompose(&Int::from(3), &Int::from(2)).unwrap(), None);
        assert!(square_product_decompose(&Int::from(0), &Int::from(3)).is_err());
    }

    #[test]
    fn decomposition_exists_iff_product_is_square() {
        // both directions of the square-product equivalence, exhaustively
        use crate::scalar::{exact_sqrt, is_perfect_square};
        for a in 1i64..=200 {
            for b in 1..=200 {
                let decomposed = square_product_decompose(&a, &b).unwrap();
                assert_eq!(
                    decomposed.is_some(),
                    is_perfect_square(&(a * b)),
                    "(a, b) = ({a}, {b})"
                );
                if let Some((delta, r1, r2)) = decomposed {
                    assert_eq!(delta * r1 * r1, a);
                    assert_eq!(delta * r2 * r2, b);
                    assert_eq!(num_integer::gcd(r1, r2), 1);
                    // and then δ·r1·r2 = √(ab)
                    assert_eq!(Some(delta * r1 * r2), exact_sqrt(&(a * b)));
                }
            }
        }
    }

    #[test]
    fn coprimeness_examples() {
        let t = triple_from_params(&params(2, 1));
        let checks = verify_coprimeness(&t);
        assert_eq!(checks.len(), 10);
        assert!(checks.iter().all(|c| c.holds), "{checks:?}");
        // spot values: gcd(5, 96) and gcd(7, 384)
        assert_eq!(num_integer::gcd(5i64, 2 * 3 * 16), 1);
        assert_eq!(num_integer::gcd(16i64 - 9, 2 * 64 * 3), 1);

        let t = triple_from_params(&params(3, 2));
        assert!(verify_coprimeness(&t).iter().all(|c| c.holds));
    }

    #[test]
    fn coprimeness_holds_exhaustively_to_1000() {
        for t in enumerate_primitive_triples(&Int::from(1000)) {
            assert!(
                verify_coprimeness(&t).iter().all(|c| c.holds),
                "failed for {t:?}"
            );
        }
    }

    /// Pick a valid generator pair from unconstrained randomness: `m` as
    /// given, `n` as the `pick`-th coprime opposite-parity candidate.
    fn valid_pair(m: i64, pick: usize) -> (i64, i64) {
        let candidates: Vec<i64> = (1..m)
            .filter(|n| num_integer::gcd(m, *n) == 1 && (m + n) % 2 == 1)
            .collect();
        (m, candidates[pick % candidates.len()])
    }

    proptest! {
        // generated triples satisfy every PythTriple invariant
        #[test]
        fn generated_triples_are_primitive(m_raw in 2i64..=60, pick in 0usize..64) {
            let (m, n) = valid_pair(m_raw, pick);
            let t = triple_from_params(&params(m, n));
            let (r1, r2, r3) = (t.r1().clone(), t.r2().clone(), t.r3().clone());
            prop_assert!(r1 > r2);
            prop_assert_eq!(&r1 * &r1 + &r2 * &r2, &r3 * &r3);
            prop_assert!(r1.gcd(&r2).is_one());
            prop_assert!(r3.is_odd());
            // exactly one even leg, and r1² − r2² is odd
            prop_assert!(r1.is_even() != r2.is_even());
            prop_assert!(t.leg_square_diff().is_odd());
            // re-validation through the checked constructor agrees
            prop_assert!(PythTriple::new(r1, r2, r3).is_ok());
        }

        // decomposition inverts δ-scaling of squared coprime pairs
        #[test]
        fn square_product_round_trip(m_raw in 2i64..=40, pick in 0usize..64, delta in 1i64..=20) {
            let (m, n) = valid_pair(m_raw, pick);
            let t = triple_from_params(&params(m, n));
            let a = Int::from(delta) * t.r1() * t.r1();
            let b = Int::from(delta) * t.r2() * t.r2();
            let got = square_product_decompose(&a, &b).unwrap();
            prop_assert_eq!(got, Some((Int::from(delta), t.r1().clone(), t.r2().clone())));
        }
    }
}
