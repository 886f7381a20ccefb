//! Exact integer geometry.
//!
//! Every predicate is decided over integers. Quantities involving the
//! irrational slopes of the six cone boundaries are carried as [`Rt3`]
//! values and compared through [`Rt3::sign`].

mod frame;
mod rt3;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use frame::{ConeIndex, Frame, SubconeRef, ANGLE30};
pub use rt3::{exact_sign, Rt3, RT3_COMPONENT_LIMIT};

/// Absolute coordinate bound that the kernel can evaluate without overflow.
pub const HARD_COORD_LIMIT: i64 = 1 << 40;

/// Default coordinate bound enforced when reading instances.
pub const DEFAULT_COORD_MAX: i64 = 1 << 20;

/// Bound on each component of a frame direction.
pub const FRAME_COMPONENT_LIMIT: i64 = 1 << 16;

/// Coordinate bound for parsed input. `VISROUTE_COORD_MAX` overrides the
/// default, clamped to [`HARD_COORD_LIMIT`].
pub fn coord_max() -> i64 {
    std::env::var("VISROUTE_COORD_MAX")
        .ok()
        .and_then(|v| v.trim().parse::<i64>().ok())
        .filter(|&v| v > 0)
        .map(|v| v.min(HARD_COORD_LIMIT))
        .unwrap_or(DEFAULT_COORD_MAX)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("general position violation: {0}")]
    GeneralPosition(String),
    #[error("input range error: {0}")]
    Range(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(v: i128) -> Sign {
        match v.cmp(&0) {
            std::cmp::Ordering::Less => Sign::Negative,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Positive,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Cw,
    Collinear,
    Ccw,
}

impl Orientation {
    pub fn reversed(self) -> Orientation {
        match self {
            Orientation::Cw => Orientation::Ccw,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::Ccw => Orientation::Cw,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, o: Point) -> i128 {
        self.x as i128 * o.x as i128 + self.y as i128 * o.y as i128
    }

    pub fn cross(self, o: Point) -> i128 {
        self.x as i128 * o.y as i128 - self.y as i128 * o.x as i128
    }

    pub fn norm2(self) -> i128 {
        self.dot(self)
    }

    pub fn dist2(self, o: Point) -> i128 {
        (o - self).norm2()
    }

    pub fn in_range(self, bound: i64) -> bool {
        self.x.abs() <= bound && self.y.abs() <= bound
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub const fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    pub fn has_endpoint(&self, p: Point) -> bool {
        self.a == p || self.b == p
    }

    /// The endpoint that is not `p`. Assumes `p` is an endpoint.
    pub fn other(&self, p: Point) -> Point {
        if self.a == p {
            self.b
        } else {
            self.a
        }
    }
}

pub fn orient_sign(p: Point, q: Point, r: Point) -> Sign {
    Sign::of((q - p).cross(r - p))
}

/// Sign of the cross product `(q − p) × (r − p)`.
pub fn orientation(p: Point, q: Point, r: Point) -> Orientation {
    match orient_sign(p, q, r) {
        Sign::Negative => Orientation::Cw,
        Sign::Zero => Orientation::Collinear,
        Sign::Positive => Orientation::Ccw,
    }
}

/// True iff the open interiors of the two segments share a point.
///
/// Segments that only touch at an endpoint, or where an endpoint of one lies
/// on the other, do not intersect properly.
pub fn properly_intersects(s1: Segment, s2: Segment) -> bool {
    let d1 = orient_sign(s1.a, s1.b, s2.a);
    let d2 = orient_sign(s1.a, s1.b, s2.b);
    let d3 = orient_sign(s2.a, s2.b, s1.a);
    let d4 = orient_sign(s2.a, s2.b, s1.b);
    d1 != Sign::Zero
        && d2 != Sign::Zero
        && d3 != Sign::Zero
        && d4 != Sign::Zero
        && d1 != d2
        && d3 != d4
}

/// True iff `p` lies in the relative interior of segment `s`.
pub fn strictly_on_segment(p: Point, s: Segment) -> bool {
    if p == s.a || p == s.b || orient_sign(s.a, s.b, p) != Sign::Zero {
        return false;
    }
    (p - s.a).dot(s.b - s.a) > 0 && (p - s.b).dot(s.a - s.b) > 0
}

/// True iff `p` lies strictly inside triangle `abc` (either orientation).
pub fn strictly_inside_triangle(p: Point, a: Point, b: Point, c: Point) -> bool {
    let s1 = orient_sign(a, b, p);
    let s2 = orient_sign(b, c, p);
    let s3 = orient_sign(c, a, p);
    s1 != Sign::Zero && s1 == s2 && s2 == s3
}

/// Given two non-crossing segments that both meet the ray leaving `apex`
/// along some common direction, decide whether `s1` is met first.
///
/// Only orientation tests are used: if one segment lies entirely on one side
/// of the other's supporting line, that side decides.
pub fn closer_along_ray(apex: Point, s1: Segment, s2: Segment) -> bool {
    let side_of = |s: Segment, p: Point| orient_sign(s.a, s.b, p);
    let a1 = side_of(s2, s1.a);
    let b1 = side_of(s2, s1.b);
    let apex_vs_s2 = side_of(s2, apex);
    let straddles = a1 != Sign::Zero && a1 == b1.flip();
    if !straddles {
        let side = if a1 != Sign::Zero { a1 } else { b1 };
        if side != Sign::Zero {
            return side == apex_vs_s2;
        }
    }
    let a2 = side_of(s1, s2.a);
    let b2 = side_of(s1, s2.b);
    let side = if a2 != Sign::Zero { a2 } else { b2 };
    side != side_of(s1, apex)
}

/// Lowest-common-denominator direction: divides out the gcd of both
/// components.
pub fn reduce_direction(p: Point) -> Point {
    let g = num_integer::gcd(p.x, p.y);
    if g == 0 {
        p
    } else {
        Point::new(p.x / g, p.y / g)
    }
}

/// Unsigned-angle comparison: is the angle between `a` and `dir` smaller
/// than the angle between `b` and `dir`? Decided exactly with big integers.
pub fn smaller_angle_to(dir: Point, a: Point, b: Point) -> bool {
    use num_bigint::BigInt;
    // cos θ = a·dir / |a||dir|; compare cos θa > cos θb.
    let da = BigInt::from(a.dot(dir));
    let db = BigInt::from(b.dot(dir));
    let na = BigInt::from(a.norm2());
    let nb = BigInt::from(b.norm2());
    let zero = BigInt::from(0);
    match (da > zero, db > zero) {
        (true, false) => return true,
        (false, true) => return false,
        _ => {}
    }
    let lhs = &da * &da * &nb;
    let rhs = &db * &db * &na;
    if da > zero {
        lhs > rhs
    } else {
        lhs < rhs
    }
}
