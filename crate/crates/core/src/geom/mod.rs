//! Exact planar primitives over Q[√3].
//!
//! Points, lines, rigid motions and polygons, plus the predicates the
//! congruence and similarity arguments rely on. Every angle that occurs in
//! the constructions is an integer multiple of 30°, whose cosine and sine
//! lie in Q[√3]; anything else is rejected rather than approximated.

mod polygon;
mod signature;

pub use polygon::{convex_interiors_intersect, segments_intersect, Polygon};
pub use signature::{
    canonical_signature, interior_angles, similarity_between, Signature, SignatureMode,
    SimilarityCheck, SimilarityWitness,
};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::Error;
use crate::numeric::QS3;
use crate::Result;

/// Exact planar vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vec2 {
    pub x: QS3,
    pub y: QS3,
}

impl Vec2 {
    pub fn new(x: QS3, y: QS3) -> Self {
        Vec2 { x, y }
    }

    pub fn zero() -> Self {
        Vec2::new(QS3::zero(), QS3::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn dot(&self, other: &Vec2) -> QS3 {
        &(&self.x * &other.x) + &(&self.y * &other.y)
    }

    pub fn cross(&self, other: &Vec2) -> QS3 {
        &(&self.x * &other.y) - &(&self.y * &other.x)
    }

    pub fn norm2(&self) -> QS3 {
        self.dot(self)
    }

    pub fn scaled(&self, k: &QS3) -> Vec2 {
        Vec2::new(&self.x * k, &self.y * k)
    }

    /// Counter-clockwise perpendicular (rotation by +90°).
    pub fn perp(&self) -> Vec2 {
        Vec2::new(-&self.y, self.x.clone())
    }
}

impl Add for &Vec2 {
    type Output = Vec2;
    fn add(self, rhs: &Vec2) -> Vec2 {
        Vec2::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: &Vec2) -> Vec2 {
        Vec2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-&self.x, -&self.y)
    }
}

/// Exact planar point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: QS3,
    pub y: QS3,
}

impl Point {
    pub fn new(x: QS3, y: QS3) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point::new(QS3::zero(), QS3::zero())
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(QS3::from_int(x), QS3::from_int(y))
    }

    pub fn to_vec(&self) -> Vec2 {
        Vec2::new(self.x.clone(), self.y.clone())
    }

    pub fn dist2(&self, other: &Point) -> QS3 {
        (other - self).norm2()
    }
}

impl Sub for &Point {
    type Output = Vec2;
    fn sub(self, rhs: &Point) -> Vec2 {
        Vec2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Add<&Vec2> for &Point {
    type Output = Point;
    fn add(self, rhs: &Vec2) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Line given by an anchor point and a non-zero direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    anchor: Point,
    dir: Vec2,
}

impl Line {
    pub fn new(anchor: Point, dir: Vec2) -> Result<Line> {
        if dir.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Line { anchor, dir })
    }

    pub fn through(a: &Point, b: &Point) -> Result<Line> {
        Line::new(a.clone(), b - a)
    }

    /// The perpendicular to this line passing through `p`.
    pub fn perpendicular_through(&self, p: &Point) -> Line {
        Line {
            anchor: p.clone(),
            dir: self.dir.perp(),
        }
    }

    pub fn anchor(&self) -> &Point {
        &self.anchor
    }

    pub fn dir(&self) -> &Vec2 {
        &self.dir
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.dir.cross(&(p - &self.anchor)).is_zero()
    }
}

/// Interior or turning angle as an exact multiple of 30°.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AngleClass(u8);

impl AngleClass {
    /// `k` in 0..=11, meaning `k·30°`. Class 0 is the identity; interior
    /// angles of normalized polygons use 1..=11, with 6 (a straight angle)
    /// legal only in raw, un-normalized boundaries.
    pub fn new(k: u8) -> Option<AngleClass> {
        (k < 12).then_some(AngleClass(k))
    }

    pub fn k(&self) -> u8 {
        self.0
    }

    pub fn degrees(&self) -> u32 {
        self.0 as u32 * 30
    }
}

/// Exact unit vector at heading `k·30°`; `k` taken modulo 12.
pub fn unit_vector(k: i32) -> Vec2 {
    let k = k.rem_euclid(12);
    // cos/sin of multiples of 30°: components in {0, ±1/2, ±√3/2, ±1}
    let half = QS3::from_ratio(1, 2);
    let hs3 = QS3::from_parts(0, 1, 2);
    let (c, s) = match k {
        0 => (QS3::one(), QS3::zero()),
        1 => (hs3.clone(), half.clone()),
        2 => (half.clone(), hs3.clone()),
        3 => (QS3::zero(), QS3::one()),
        4 => (-&half, hs3.clone()),
        5 => (-&hs3, half.clone()),
        6 => (-&QS3::one(), QS3::zero()),
        7 => (-&hs3, -&half),
        8 => (-&half, -&hs3),
        9 => (QS3::zero(), -&QS3::one()),
        10 => (half.clone(), -&hs3),
        11 => (hs3.clone(), -&half),
        _ => unreachable!(),
    };
    Vec2::new(c, s)
}

/// Rotate a vector by `k·30°` (positive counter-clockwise).
pub fn rotate_vec(v: &Vec2, k: i32) -> Vec2 {
    let u = unit_vector(k);
    Vec2::new(
        &(&u.x * &v.x) - &(&u.y * &v.y),
        &(&u.y * &v.x) + &(&u.x * &v.y),
    )
}

/// Rotate `p` about `center` by `k·30°`, exactly.
pub fn rotate_about(p: &Point, center: &Point, k: i32) -> Point {
    center + &rotate_vec(&(p - center), k)
}

/// Mirror image of `p` across `l`, exactly.
pub fn reflect_across(p: &Point, l: &Line) -> Point {
    let v = p - l.anchor();
    let d = l.dir();
    let coeff = v.dot(d) / d.norm2();
    let proj = d.scaled(&coeff);
    let two = QS3::from_int(2);
    l.anchor() + &(&proj.scaled(&two) - &v)
}

/// Unique intersection point of two lines; `None` if parallel or coincident.
pub fn line_intersection(l1: &Line, l2: &Line) -> Option<Point> {
    let denom = l1.dir().cross(l2.dir());
    if denom.is_zero() {
        return None;
    }
    let t = (l2.anchor() - l1.anchor()).cross(l2.dir()) / denom;
    Some(l1.anchor() + &l1.dir().scaled(&t))
}

/// `start + dist·dir` where `dir` must be an exact unit vector.
pub fn point_along(start: &Point, dir: &Vec2, dist: &QS3) -> Result<Point> {
    if dir.norm2() != QS3::one() {
        return Err(Error::NonUnitDirection);
    }
    Ok(start + &dir.scaled(dist))
}

/// The class `k` such that rotating `u` by `k·30°` yields a positive
/// multiple of `v`; `None` if the angle between them is not a multiple
/// of 30°. Errors on zero vectors.
pub fn angle_class(u: &Vec2, v: &Vec2) -> Result<Option<AngleClass>> {
    if u.is_zero() || v.is_zero() {
        return Err(Error::ZeroVector);
    }
    for k in 0..12 {
        let w = rotate_vec(u, k);
        if w.cross(v).is_zero() && w.dot(v).is_positive() {
            return Ok(AngleClass::new(k as u8).map(Some).unwrap());
        }
    }
    Ok(None)
}

/// Signed turn from `u` to `v` in classes of 30°, in `-5..=6`.
pub fn turn_class(u: &Vec2, v: &Vec2) -> Result<Option<i8>> {
    Ok(angle_class(u, v)?.map(|c| {
        let k = c.k() as i8;
        if k <= 6 {
            k
        } else {
            k - 12
        }
    }))
}

/// Total order on non-zero vectors by angle in [0°, 360°), with ties
/// (same ray) equal. Exact; used to sort fans around a vertex.
pub fn angular_cmp(a: &Vec2, b: &Vec2) -> Ordering {
    fn half(v: &Vec2) -> u8 {
        // 0: upper half-plane including the positive x-axis
        if v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()) {
            0
        } else {
            1
        }
    }
    half(a).cmp(&half(b)).then_with(|| {
        let c = a.cross(b);
        match c.signum() {
            s if s > 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    })
}

/// Rigid motion: exact orthogonal 2×2 matrix plus translation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Isometry {
    // row-major linear part
    m: [QS3; 4],
    t: Vec2,
}

impl Isometry {
    /// Build from raw entries, verifying `MᵀM = I` exactly.
    pub fn new(m00: QS3, m01: QS3, m10: QS3, m11: QS3, t: Vec2) -> Result<Isometry> {
        let iso = Isometry {
            m: [m00, m01, m10, m11],
            t,
        };
        if !iso.is_orthogonal() {
            return Err(Error::NonOrthogonal);
        }
        Ok(iso)
    }

    pub fn identity() -> Isometry {
        Isometry {
            m: [QS3::one(), QS3::zero(), QS3::zero(), QS3::one()],
            t: Vec2::zero(),
        }
    }

    pub fn translation(v: Vec2) -> Isometry {
        Isometry {
            m: [QS3::one(), QS3::zero(), QS3::zero(), QS3::one()],
            t: v,
        }
    }

    /// Rotation by `k·30°` about `center`.
    pub fn rotation_about(center: &Point, k: i32) -> Isometry {
        let u = unit_vector(k);
        let m = [u.x.clone(), -&u.y, u.y.clone(), u.x.clone()];
        // t = c - M c
        let mc = Vec2::new(
            &(&m[0] * &center.x) + &(&m[1] * &center.y),
            &(&m[2] * &center.x) + &(&m[3] * &center.y),
        );
        Isometry {
            m,
            t: &center.to_vec() - &mc,
        }
    }

    /// Reflection across a line.
    pub fn reflection_across(l: &Line) -> Isometry {
        let d = l.dir();
        let n = d.norm2();
        let dx2 = &d.x * &d.x;
        let dy2 = &d.y * &d.y;
        let dxy2 = &(&d.x * &d.y) * &QS3::from_int(2);
        let m = [
            (&dx2 - &dy2) / &n,
            &dxy2 / &n,
            &dxy2 / &n,
            (&dy2 - &dx2) / &n,
        ];
        let a = l.anchor();
        let ma = Vec2::new(
            &(&m[0] * &a.x) + &(&m[1] * &a.y),
            &(&m[2] * &a.x) + &(&m[3] * &a.y),
        );
        Isometry {
            m,
            t: &a.to_vec() - &ma,
        }
    }

    /// Point reflection (rotation by 180°) about `center`.
    pub fn point_reflection(center: &Point) -> Isometry {
        Isometry::rotation_about(center, 6)
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point::new(
            &(&(&self.m[0] * &p.x) + &(&self.m[1] * &p.y)) + &self.t.x,
            &(&(&self.m[2] * &p.x) + &(&self.m[3] * &p.y)) + &self.t.y,
        )
    }

    /// Apply only the linear part (directions, not positions).
    pub fn apply_vec(&self, v: &Vec2) -> Vec2 {
        Vec2::new(
            &(&self.m[0] * &v.x) + &(&self.m[1] * &v.y),
            &(&self.m[2] * &v.x) + &(&self.m[3] * &v.y),
        )
    }

    /// `self ∘ inner`: applies `inner` first.
    pub fn compose(&self, inner: &Isometry) -> Isometry {
        let m = [
            &(&self.m[0] * &inner.m[0]) + &(&self.m[1] * &inner.m[2]),
            &(&self.m[0] * &inner.m[1]) + &(&self.m[1] * &inner.m[3]),
            &(&self.m[2] * &inner.m[0]) + &(&self.m[3] * &inner.m[2]),
            &(&self.m[2] * &inner.m[1]) + &(&self.m[3] * &inner.m[3]),
        ];
        let t = Vec2::new(
            &(&(&self.m[0] * &inner.t.x) + &(&self.m[1] * &inner.t.y)) + &self.t.x,
            &(&(&self.m[2] * &inner.t.x) + &(&self.m[3] * &inner.t.y)) + &self.t.y,
        );
        Isometry { m, t }
    }

    /// Inverse; exact because the linear part is orthogonal (`M⁻¹ = Mᵀ`).
    pub fn inverse(&self) -> Isometry {
        let mt = [
            self.m[0].clone(),
            self.m[2].clone(),
            self.m[1].clone(),
            self.m[3].clone(),
        ];
        let t = Vec2::new(
            -&(&(&mt[0] * &self.t.x) + &(&mt[1] * &self.t.y)),
            -&(&(&mt[2] * &self.t.x) + &(&mt[3] * &self.t.y)),
        );
        Isometry { m: mt, t }
    }

    pub fn det_sign(&self) -> i32 {
        (&(&self.m[0] * &self.m[3]) - &(&self.m[1] * &self.m[2])).signum()
    }

    pub fn is_orthogonal(&self) -> bool {
        let [a, b, c, d] = &self.m;
        let one = QS3::one();
        (&(a * a) + &(c * c)) == one
            && (&(b * b) + &(d * d)) == one
            && (&(a * b) + &(c * d)).is_zero()
    }

    pub fn matrix(&self) -> &[QS3; 4] {
        &self.m
    }

    pub fn translation_part(&self) -> &Vec2 {
        &self.t
    }
}
