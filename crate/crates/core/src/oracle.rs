//! Floating-point coordinate reconstruction of the figure.
//!
//! Deliberately independent of the surd engine: the scene is built from
//! tangent-point geometry in binary64 (external homothety center, tangent
//! construction from an external point, midpoints, a projection) and every
//! length is then re-measured as a euclidean distance. Agreement between
//! the two paths at 1e-9 relative is the crate's main cross-check.
//!
//! Binary64 carries 15–16 digits and the construction spends only a square
//! root and a handful of multiplications, so 1e-9 leaves several digits of
//! headroom. Radii pairs with `R1/R2` extremely close to 1 push the
//! homothety center toward infinity and can consume that headroom; the
//! construction is exact in the ratio regime the tests exercise (≥ 1.1).

use crate::error::{Error, Result};
use crate::lengths::{compute_lengths, LengthSet, RadiiPair};
use crate::scalar::ExactInt;
use serde_json::{json, Value};
use std::f64::consts::FRAC_PI_2;

/// Default relative tolerance for oracle comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dist(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    fn to(self, other: Point) -> Vec2 {
        Vec2 {
            x: other.x - self.x,
            y: other.y - self.y,
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Vec2 {
    x: f64,
    y: f64,
}

impl Vec2 {
    fn dot(&self, other: &Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    fn cross(&self, other: &Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    fn unit(&self) -> Vec2 {
        let n = self.norm();
        Vec2 {
            x: self.x / n,
            y: self.y / n,
        }
    }
}

/// Angle at `vertex` between the rays toward `p` and `q`, in `[0, π]`.
fn angle_at(vertex: Point, p: Point, q: Point) -> f64 {
    let u = vertex.to(p);
    let v = vertex.to(q);
    u.cross(&v).abs().atan2(u.dot(&v))
}

/// `|cos θ|` of the angle between two segments; zero iff perpendicular.
fn perp_deviation(a: (Point, Point), b: (Point, Point)) -> f64 {
    a.0.to(a.1).unit().dot(&b.0.to(b.1).unit()).abs()
}

/// The reconstructed figure. Tangency point `I` sits at the origin, the
/// centers on the x-axis, tangent points in the upper half-plane, and the
/// homothety center `K` on the positive x-axis.
#[derive(Clone, Debug)]
pub struct Scene {
    pub i: Point,
    pub c1: Point,
    pub c2: Point,
    pub t1: Point,
    pub t2: Point,
    pub m: Point,
    pub m1: Point,
    pub m2: Point,
    pub f: Point,
    pub k: Point,
    /// Half-angle at the large center: `∠MC1I`.
    pub omega: f64,
    /// Half-angle at the small center: `∠MC2I`.
    pub phi: f64,
}

/// Build the scene from binary64 radii.
pub fn build_scene(r1: f64, r2: f64) -> Result<Scene> {
    if r2.is_nan() || r2 <= 0.0 || !r1.is_finite() {
        return Err(Error::InvalidRadii(format!(
            "radii must be positive and finite, got R1 = {r1}, R2 = {r2}"
        )));
    }
    if r1 <= r2 {
        return Err(Error::InvalidRadii(format!(
            "require R1 > R2, got R1 = {r1}, R2 = {r2}"
        )));
    }

    let i = Point::new(0.0, 0.0);
    let c1 = Point::new(-r1, 0.0);
    let c2 = Point::new(r2, 0.0);
    // external homothety center: the external tangents meet the center line
    // at the point dividing C1C2 externally in ratio R1 : R2
    let k = Point::new(2.0 * r1 * r2 / (r1 - r2), 0.0);

    let t1 = tangent_point(c1, r1, k);
    let t2 = tangent_point(c2, r2, k);
    let m = midpoint(t1, t2);
    // chord midpoints: C1M1 ⊥ chord T1I, C2M2 ⊥ chord IT2
    let m1 = midpoint(t1, i);
    let m2 = midpoint(i, t2);
    // foot of the perpendicular from C2 onto line C1–T1
    let u = c1.to(t1).unit();
    let along = c1.to(c2).dot(&u);
    let f = Point::new(c1.x + along * u.x, c1.y + along * u.y);

    let omega = angle_at(c1, m, i);
    let phi = angle_at(c2, m, i);
    debug_assert!((omega + phi - FRAC_PI_2).abs() < 1e-12);

    Ok(Scene {
        i,
        c1,
        c2,
        t1,
        t2,
        m,
        m1,
        m2,
        f,
        k,
        omega,
        phi,
    })
}

/// Upper tangent point from external point `p` to the circle `(center, r)`:
/// at angle `arccos(r/d)` off the center-to-point direction, toward the
/// positive half-plane.
fn tangent_point(center: Point, r: f64, p: Point) -> Point {
    let to_p = center.to(p);
    let d = to_p.norm();
    debug_assert!(d > r, "tangent construction needs an external point");
    let tangent_len = (d * d - r * r).sqrt();
    let u = to_p.unit();
    let n = Vec2 { x: -u.y, y: u.x }; // CCW normal; upward for both centers
    let (cos_a, sin_a) = (r / d, tangent_len / d);
    Point::new(
        center.x + r * (cos_a * u.x + sin_a * n.x),
        center.y + r * (cos_a * u.y + sin_a * n.y),
    )
}

fn midpoint(a: Point, b: Point) -> Point {
    Point::new(0.5 * (a.x + b.x), 0.5 * (a.y + b.y))
}

impl Scene {
    /// Build from an exact radii pair, evaluated as binary64.
    pub fn from_radii<T: ExactInt>(radii: &RadiiPair<T>) -> Result<Scene> {
        build_scene(ratio_to_f64(radii.r1()), ratio_to_f64(radii.r2()))
    }

    /// Re-measure all sixteen lengths as euclidean distances, keyed by the
    /// length-set field names.
    pub fn measure(&self) -> [(&'static str, f64); 16] {
        [
            ("t1t2", self.t1.dist(&self.t2)),
            ("x1", self.c1.dist(&self.m)),
            ("x2", self.c2.dist(&self.m)),
            ("a1", self.t1.dist(&self.i)),
            ("a2", self.t2.dist(&self.i)),
            ("h1", self.c1.dist(&self.m1)),
            ("h2", self.c2.dist(&self.m2)),
            ("m1m", self.m1.dist(&self.m)),
            ("m2m", self.m2.dist(&self.m)),
            ("im", self.i.dist(&self.m)),
            ("c2k", self.c2.dist(&self.k)),
            ("c1k", self.c1.dist(&self.k)),
            ("t2k", self.t2.dist(&self.k)),
            ("t1k", self.t1.dist(&self.k)),
            ("d1", self.c1.dist(&self.t2)),
            ("d2", self.c2.dist(&self.t1)),
        ]
    }

    /// Point map for the figure emitter.
    pub fn points_json(&self) -> Value {
        json!({
            "I": [self.i.x, self.i.y],
            "C1": [self.c1.x, self.c1.y],
            "C2": [self.c2.x, self.c2.y],
            "T1": [self.t1.x, self.t1.y],
            "T2": [self.t2.x, self.t2.y],
            "M": [self.m.x, self.m.y],
            "M1": [self.m1.x, self.m1.y],
            "M2": [self.m2.x, self.m2.y],
            "F": [self.f.x, self.f.y],
            "K": [self.k.x, self.k.y],
            "omega": self.omega,
            "phi": self.phi,
        })
    }
}

fn ratio_to_f64<T: ExactInt>(q: &num_rational::Ratio<T>) -> f64 {
    let numer = q.numer().to_f64().unwrap_or(f64::NAN);
    let denom = q.denom().to_f64().unwrap_or(f64::NAN);
    numer / denom
}

/// One measured-vs-computed length comparison.
#[derive(Clone, Debug)]
pub struct LengthDeviation {
    pub name: &'static str,
    pub formula: f64,
    pub measured: f64,
    pub rel_dev: f64,
}

/// Outcome of [`cross_check`]: the per-length deviations and their maximum.
#[derive(Clone, Debug)]
pub struct CrossCheckReport {
    pub deviations: Vec<LengthDeviation>,
    pub max_rel_dev: f64,
}

/// Compare the surd engine against the coordinate reconstruction on all
/// sixteen lengths. Errs with the offending lengths if any relative
/// deviation exceeds `rel_tol`.
pub fn cross_check<T: ExactInt>(radii: &RadiiPair<T>, rel_tol: f64) -> Result<CrossCheckReport> {
    if rel_tol.is_nan() || rel_tol <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "relative tolerance must be positive, got {rel_tol}"
        )));
    }
    let lengths = compute_lengths(radii);
    let scene = Scene::from_radii(radii)?;
    compare(&lengths, &scene, rel_tol)
}

fn compare<T: ExactInt>(
    lengths: &LengthSet<T>,
    scene: &Scene,
    rel_tol: f64,
) -> Result<CrossCheckReport> {
    let formula = lengths.named();
    let measured = scene.measure();
    let mut deviations = Vec::with_capacity(16);
    for ((name, surd), (name_m, dist)) in formula.iter().zip(measured.iter()) {
        debug_assert_eq!(name, name_m);
        let f = surd.to_f64();
        let scale = f.abs().max(dist.abs());
        let rel_dev = if scale == 0.0 {
            0.0
        } else {
            (f - dist).abs() / scale
        };
        deviations.push(LengthDeviation {
            name,
            formula: f,
            measured: *dist,
            rel_dev,
        });
    }
    let max_rel_dev = deviations.iter().map(|d| d.rel_dev).fold(0.0, f64::max);
    if max_rel_dev > rel_tol {
        let offenders: Vec<String> = deviations
            .iter()
            .filter(|d| d.rel_dev > rel_tol)
            .map(|d| format!("{} (formula {}, measured {}, rel dev {:.3e})", d.name, d.formula, d.measured, d.rel_dev))
            .collect();
        return Err(Error::VerificationFailure(format!(
            "lengths beyond rel tol {rel_tol}: {}",
            offenders.join("; ")
        )));
    }
    Ok(CrossCheckReport {
        deviations,
        max_rel_dev,
    })
}

/// One named angle/perpendicularity/rectangle check.
#[derive(Clone, Debug)]
pub struct AngleCheck {
    pub name: &'static str,
    pub deviation: f64,
}

#[derive(Clone, Debug)]
pub struct AngleReport {
    pub checks: Vec<AngleCheck>,
    pub max_deviation: f64,
}

/// Verify the angle structure of the scene within `tol`:
/// the six perpendicularities, the two eight-way angle equalities, the
/// complementarity `ω + φ = π/2`, the sine relations, and the rectangle
/// `I M1 M M2` (right corners and equal opposite sides).
pub fn check_angles(scene: &Scene, tol: f64) -> Result<AngleReport> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let s = scene;
    let mut checks = Vec::new();

    let perpendicular = [
        ("MI perp C1C2", (s.m, s.i), (s.c1, s.c2)),
        ("C1M perp MC2", (s.c1, s.m), (s.m, s.c2)),
        ("T1I perp IT2", (s.t1, s.i), (s.i, s.t2)),
        ("MC1 perp T1I", (s.m, s.c1), (s.t1, s.i)),
        ("T1C1 perp T1T2", (s.t1, s.c1), (s.t1, s.t2)),
        ("T2C2 perp T1T2", (s.t2, s.c2), (s.t1, s.t2)),
    ];
    for (name, a, b) in perpendicular {
        checks.push(AngleCheck {
            name,
            deviation: perp_deviation(a, b),
        });
    }

    // the eight angles equal to φ
    let phi_angles = [
        angle_at(s.t1, s.c1, s.i),
        angle_at(s.i, s.t1, s.c1),
        angle_at(s.m, s.t1, s.c1),
        angle_at(s.m, s.c1, s.i),
        angle_at(s.i, s.m, s.t2),
        angle_at(s.t2, s.m, s.i),
        angle_at(s.c2, s.i, s.m),
        angle_at(s.c2, s.m, s.t2),
    ];
    checks.push(AngleCheck {
        name: "eight phi angles agree",
        deviation: spread(&phi_angles),
    });

    // the eight angles equal to ω
    let omega_angles = [
        angle_at(s.c1, s.t1, s.m),
        angle_at(s.c1, s.i, s.m),
        angle_at(s.t1, s.m, s.i),
        angle_at(s.i, s.t1, s.m),
        angle_at(s.m, s.i, s.c2),
        angle_at(s.m, s.c2, s.t2),
        angle_at(s.i, s.c2, s.t2),
        angle_at(s.t2, s.i, s.c2),
    ];
    checks.push(AngleCheck {
        name: "eight omega angles agree",
        deviation: spread(&omega_angles),
    });

    checks.push(AngleCheck {
        name: "omega + phi = pi/2",
        deviation: (s.omega + s.phi - FRAC_PI_2).abs(),
    });

    // sine relations against measured chords and radii
    let r1 = s.c1.dist(&s.i);
    let r2 = s.c2.dist(&s.i);
    let a1 = s.t1.dist(&s.i);
    let a2 = s.t2.dist(&s.i);
    checks.push(AngleCheck {
        name: "sin(omega) = a1/(2R1)",
        deviation: (s.omega.sin() - a1 / (2.0 * r1)).abs(),
    });
    checks.push(AngleCheck {
        name: "sin(phi) = a2/(2R2)",
        deviation: (s.phi.sin() - a2 / (2.0 * r2)).abs(),
    });

    // rectangle I M1 M M2: four right corners, opposite sides equal
    let corners: [(&'static str, Point, Point, Point); 4] = [
        ("rectangle corner I", s.m2, s.i, s.m1),
        ("rectangle corner M1", s.i, s.m1, s.m),
        ("rectangle corner M", s.m1, s.m, s.m2),
        ("rectangle corner M2", s.m, s.m2, s.i),
    ];
    for (name, prev, at, next) in corners {
        checks.push(AngleCheck {
            name,
            deviation: perp_deviation((at, prev), (at, next)),
        });
    }
    let im1 = s.i.dist(&s.m1);
    let mm2 = s.m.dist(&s.m2);
    let im2 = s.i.dist(&s.m2);
    let mm1 = s.m.dist(&s.m1);
    checks.push(AngleCheck {
        name: "IM1 = MM2",
        deviation: (im1 - mm2).abs() / im1.max(mm2),
    });
    checks.push(AngleCheck {
        name: "IM2 = MM1",
        deviation: (im2 - mm1).abs() / im2.max(mm1),
    });

    let max_deviation = checks.iter().map(|c| c.deviation).fold(0.0, f64::max);
    if max_deviation > tol {
        let offenders: Vec<String> = checks
            .iter()
            .filter(|c| c.deviation > tol)
            .map(|c| format!("{} (deviation {:.3e})", c.name, c.deviation))
            .collect();
        return Err(Error::VerificationFailure(format!(
            "angle checks beyond tolerance {tol}: {}",
            offenders.join("; ")
        )));
    }
    Ok(AngleReport {
        checks,
        max_deviation,
    })
}

fn spread(values: &[f64]) -> f64 {
    let max = values.iter().cloned().fold(f64::MIN, f64::max);
    let min = values.iter().cloned().fold(f64::MAX, f64::min);
    max - min
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Int, Rational};

    fn pair(r1: i64, r2: i64) -> RadiiPair<Int> {
        RadiiPair::from_integers(Int::from(r1), Int::from(r2)).unwrap()
    }

    #[test]
    fn example_scene_geometry() {
        let s = build_scene(560.0, 315.0).unwrap();
        // K = 2·560·315/245 = 1440
        assert!((s.k.x - 1440.0).abs() < 1e-9);
        assert_eq!(s.k.y, 0.0);
        // |K − C2| = 1125 = C2K
        assert!((s.c2.dist(&s.k) - 1125.0).abs() < 1e-6);
        // |F − C1| = R1 − R2, |F − C2| = T1T2
        assert!((s.f.dist(&s.c1) - 245.0).abs() < 1e-6);
        assert!((s.f.dist(&s.c2) - 840.0).abs() < 1e-6);
        // tangent points lie on their circles
        assert!((s.t1.dist(&s.c1) / 560.0 - 1.0).abs() < 1e-12);
        assert!((s.t2.dist(&s.c2) / 315.0 - 1.0).abs() < 1e-12);
        // measured tangent and the corrected T2K
        let measured: std::collections::HashMap<_, _> = s.measure().into_iter().collect();
        assert!((measured["t1t2"] / 840.0 - 1.0).abs() < 1e-9);
        assert!((measured["t2k"] / 1080.0 - 1.0).abs() < 1e-9);
        // orientation invariants
        for p in [s.t1, s.t2, s.m, s.m1, s.m2] {
            assert!(p.y > 0.0);
        }
        assert!(s.k.x > 0.0);
    }

    #[test]
    fn small_scene_diagonal() {
        let s = build_scene(2.0, 1.0).unwrap();
        let measured: std::collections::HashMap<_, _> = s.measure().into_iter().collect();
        // d1 = 2√3 ≈ 3.4641016
        assert!((measured["d1"] - 12f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn rejects_degenerate_radii() {
        assert!(build_scene(1.0, 1.0).is_err());
        assert!(build_scene(1.0, 2.0).is_err());
        assert!(build_scene(1.0, 0.0).is_err());
        assert!(build_scene(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn cross_check_examples() {
        for (r1, r2) in [(560, 315), (2, 1), (16, 9)] {
            let report = cross_check(&pair(r1, r2), DEFAULT_TOL).unwrap();
            assert_eq!(report.deviations.len(), 16);
            assert!(report.max_rel_dev <= DEFAULT_TOL);
        }
        let report = cross_check(&pair(16, 9), DEFAULT_TOL).unwrap();
        let x1 = report
            .deviations
            .iter()
            .find(|d| d.name == "x1")
            .unwrap();
        assert!((x1.measured - 20.0).abs() < 1e-9);
    }

    #[test]
    fn cross_check_on_rational_radii() {
        let radii = RadiiPair::new(
            Rational::new(Int::from(22), Int::from(7)),
            Rational::new(Int::from(5), Int::from(3)),
        )
        .unwrap();
        let report = cross_check(&radii, DEFAULT_TOL).unwrap();
        assert!(report.max_rel_dev <= DEFAULT_TOL);
    }

    #[test]
    fn cross_check_rejects_nonpositive_tolerance() {
        assert!(cross_check(&pair(2, 1), 0.0).is_err());
        assert!(cross_check(&pair(2, 1), -1.0).is_err());
    }

    #[test]
    fn cross_check_fails_at_an_impossible_tolerance() {
        // deviations are nonzero in general, so an absurd tolerance trips
        let result = cross_check(&pair(560, 315), 1e-30);
        assert!(matches!(result, Err(Error::VerificationFailure(_))));
    }

    #[test]
    fn angle_checks_pass_for_examples() {
        for (r1, r2) in [(560, 315), (2, 1)] {
            let scene = Scene::from_radii(&pair(r1, r2)).unwrap();
            let report = check_angles(&scene, DEFAULT_TOL).unwrap();
            assert!(report.max_deviation <= DEFAULT_TOL);
            assert_eq!(report.checks.len(), 6 + 2 + 1 + 2 + 4 + 2);
        }
    }

    #[test]
    fn omega_phi_complementary_tightly() {
        let s = build_scene(560.0, 315.0).unwrap();
        assert!((s.omega + s.phi - FRAC_PI_2).abs() < 1e-12);
        // sin ω = a1/(2R1) = 672/1120 = 0.6
        assert!((s.omega.sin() - 0.6).abs() < 1e-12);
    }

    #[test]
    fn points_json_names() {
        let s = build_scene(2.0, 1.0).unwrap();
        let v = s.points_json();
        for key in ["I", "C1", "C2", "T1", "T2", "M", "M1", "M2", "F", "K"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
    }
}
