use std::fmt;

use serde::{Deserialize, Serialize};

use super::{
    orient_sign, reduce_direction, GeomError, Point, Rt3, Segment, Sign, FRAME_COMPONENT_LIMIT,
};

/// Doubled cosine and sine of the angles `30°·m`, `m = 0..12`, as
/// `(2cos, 2sin)` pairs. Angles run clockwise from the frame direction.
pub const ANGLE30: [(Rt3, Rt3); 12] = [
    (Rt3::new(2, 0), Rt3::new(0, 0)),
    (Rt3::new(0, 1), Rt3::new(1, 0)),
    (Rt3::new(1, 0), Rt3::new(0, 1)),
    (Rt3::new(0, 0), Rt3::new(2, 0)),
    (Rt3::new(-1, 0), Rt3::new(0, 1)),
    (Rt3::new(0, -1), Rt3::new(1, 0)),
    (Rt3::new(-2, 0), Rt3::new(0, 0)),
    (Rt3::new(0, -1), Rt3::new(-1, 0)),
    (Rt3::new(-1, 0), Rt3::new(0, -1)),
    (Rt3::new(0, 0), Rt3::new(-2, 0)),
    (Rt3::new(1, 0), Rt3::new(0, -1)),
    (Rt3::new(0, 1), Rt3::new(-1, 0)),
];

/// One of the six cones around an apex, numbered clockwise with `C0`
/// bisected by the frame direction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConeIndex(u8);

impl ConeIndex {
    pub const fn new(i: u8) -> Self {
        ConeIndex(i % 6)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// The cone `k` steps clockwise from this one.
    pub fn offset(self, k: i32) -> ConeIndex {
        ConeIndex((self.0 as i32 + k).rem_euclid(6) as u8)
    }

    pub fn all() -> impl Iterator<Item = ConeIndex> {
        (0..6).map(ConeIndex)
    }

    /// Index into [`ANGLE30`] of this cone's bisector.
    fn bisector_angle(self) -> usize {
        2 * self.0 as usize
    }
}

impl fmt::Debug for ConeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.0)
    }
}

/// Index into [`ANGLE30`] of boundary ray `k`, the ray separating cone
/// `k − 1` from cone `k`.
fn ray_angle(k: usize) -> usize {
    (2 * k + 11) % 12
}

/// Subcone membership of a point: `index`, and also `index + 1` when the
/// point is the far endpoint of a constraint splitting the cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SubconeRef {
    pub cone: ConeIndex,
    pub index: usize,
    pub also_next: bool,
}

impl SubconeRef {
    pub fn contains(&self, j: usize) -> bool {
        j == self.index || (self.also_next && j == self.index + 1)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> {
        let n = if self.also_next { 2 } else { 1 };
        (self.index..).take(n)
    }
}

/// A cone orientation. `d` is the direction of the `C0` bisector; `r` is `d`
/// turned 90° clockwise. Local coordinates of a vector `w` are
/// `(w·d, w·r)`, i.e. scaled by `|d|`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Frame {
    d: Point,
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Frame({},{})", self.d.x, self.d.y)
    }
}

impl Default for Frame {
    fn default() -> Self {
        Frame::canonical()
    }
}

impl Frame {
    /// `C0` bisected by the upward vertical ray.
    pub const fn canonical() -> Self {
        Frame {
            d: Point::new(0, 1),
        }
    }

    pub fn new(dx: i64, dy: i64) -> Result<Self, GeomError> {
        if dx == 0 && dy == 0 {
            return Err(GeomError::Range("frame direction must be nonzero".into()));
        }
        let d = reduce_direction(Point::new(dx, dy));
        if d.x.abs() > FRAME_COMPONENT_LIMIT || d.y.abs() > FRAME_COMPONENT_LIMIT {
            return Err(GeomError::Range(format!(
                "frame direction ({dx},{dy}) exceeds component bound {FRAME_COMPONENT_LIMIT}"
            )));
        }
        Ok(Frame { d })
    }

    pub fn direction(&self) -> Point {
        self.d
    }

    fn right(&self) -> Point {
        Point::new(self.d.y, -self.d.x)
    }

    fn local(&self, w: Point) -> (i128, i128) {
        (w.dot(self.d), w.dot(self.right()))
    }

    /// `2·|d|·(w · unit(30°·m))`.
    pub fn dot_angle(&self, w: Point, m: usize) -> Rt3 {
        let (along, side) = self.local(w);
        let (c, s) = ANGLE30[m % 12];
        c * along + s * side
    }

    /// `2·|d|·|w|·sin(θw − 30°·m)`: positive when `w` lies clockwise of the
    /// direction at `30°·m`, within half a turn.
    pub fn side_of_angle(&self, w: Point, m: usize) -> Rt3 {
        let (along, side) = self.local(w);
        let (c, s) = ANGLE30[m % 12];
        c * side - s * along
    }

    /// World-space direction of boundary ray `k`, scaled by `2`, as
    /// `(x, y)` components.
    pub fn boundary_direction(&self, k: usize) -> (Rt3, Rt3) {
        self.angle_direction(ray_angle(k % 6))
    }

    pub fn bisector_direction(&self, cone: ConeIndex) -> (Rt3, Rt3) {
        self.angle_direction(cone.bisector_angle())
    }

    fn angle_direction(&self, m: usize) -> (Rt3, Rt3) {
        let (c, s) = ANGLE30[m];
        let r = self.right();
        (
            c * self.d.x as i128 + s * r.x as i128,
            c * self.d.y as i128 + s * r.y as i128,
        )
    }

    /// Sign of the position of `w` relative to boundary ray `k`: positive
    /// when `w` is clockwise of the ray.
    pub fn side_of_ray(&self, w: Point, k: usize) -> Sign {
        self.side_of_angle(w, ray_angle(k % 6)).sign()
    }

    /// Cone of `apex` containing `q`.
    pub fn cone_of(&self, apex: Point, q: Point) -> Result<ConeIndex, GeomError> {
        if apex == q {
            return Err(GeomError::GeneralPosition(format!(
                "cone query with q equal to apex {apex:?}"
            )));
        }
        let w = q - apex;
        let sides: [Sign; 6] = std::array::from_fn(|k| self.side_of_ray(w, k));
        if sides.contains(&Sign::Zero) {
            return Err(GeomError::GeneralPosition(format!(
                "{q:?} lies on a cone boundary of {apex:?} under {self:?}"
            )));
        }
        for i in 0..6 {
            if sides[i] == Sign::Positive && sides[(i + 1) % 6] == Sign::Negative {
                return Ok(ConeIndex::new(i as u8));
            }
        }
        unreachable!("six boundary rays partition the plane")
    }

    /// Doubled, `|d|`-scaled projection of `w` onto the bisector of `cone`.
    pub fn projection(&self, w: Point, cone: ConeIndex) -> Rt3 {
        self.dot_angle(w, cone.bisector_angle())
    }

    /// True iff `|ua'| < |ub'|` where `'` is projection onto the bisector of
    /// `cone` at `u`.
    pub fn closer_by_bisector_projection(
        &self,
        u: Point,
        a: Point,
        b: Point,
        cone: ConeIndex,
    ) -> Result<bool, GeomError> {
        match self.projection(b - a, cone).sign() {
            Sign::Positive => Ok(true),
            Sign::Negative => Ok(false),
            Sign::Zero => Err(GeomError::GeneralPosition(format!(
                "{a:?} and {b:?} project to the same point on the {cone:?} bisector of {u:?}"
            ))),
        }
    }

    /// True iff `v` lies strictly inside the canonical triangle of `u` with
    /// respect to `t`: the cone of `u` containing `t`, cut by the line
    /// through `t` perpendicular to that cone's bisector.
    pub fn in_canonical_triangle(&self, u: Point, t: Point, v: Point) -> Result<bool, GeomError> {
        let cone = self.cone_of(u, t)?;
        if v == u {
            return Ok(false);
        }
        self.in_cone_triangle(u, cone, self.projection(t - u, cone), v)
    }

    /// Strict membership in the triangle with apex `u`, bounded by `cone`
    /// and by the bisector-perpendicular line at doubled projection `depth`.
    pub fn in_cone_triangle(
        &self,
        u: Point,
        cone: ConeIndex,
        depth: Rt3,
        v: Point,
    ) -> Result<bool, GeomError> {
        let w = v - u;
        let k = cone.index();
        let s0 = self.side_of_ray(w, k);
        let s1 = self.side_of_ray(w, k + 1);
        let below = (depth - self.projection(w, cone)).sign();
        if s0 == Sign::Negative || s1 == Sign::Positive || below == Sign::Negative {
            return Ok(false);
        }
        if s0 == Sign::Zero || s1 == Sign::Zero || below == Sign::Zero {
            return Err(GeomError::GeneralPosition(format!(
                "{v:?} lies on the boundary of a canonical triangle of {u:?}"
            )));
        }
        Ok(true)
    }

    /// Subcone of `apex`'s cone containing `q`. `incident` are the
    /// constraints with `apex` as an endpoint.
    pub fn subcone_of(
        &self,
        apex: Point,
        q: Point,
        incident: &[Segment],
    ) -> Result<SubconeRef, GeomError> {
        let cone = self.cone_of(apex, q)?;
        let mut index = 0;
        let mut also_next = false;
        for far in self.splitting_endpoints(apex, cone, incident) {
            if far == q {
                also_next = true;
                continue;
            }
            match orient_sign(apex, far, q) {
                Sign::Negative => index += 1,
                Sign::Positive => {}
                Sign::Zero => {
                    return Err(GeomError::GeneralPosition(format!(
                        "{q:?} is collinear with constraint {apex:?}-{far:?}"
                    )))
                }
            }
        }
        Ok(SubconeRef {
            cone,
            index,
            also_next,
        })
    }

    /// Far endpoints of the constraints at `apex` that split `cone`.
    pub fn splitting_endpoints<'a>(
        &'a self,
        apex: Point,
        cone: ConeIndex,
        incident: &'a [Segment],
    ) -> impl Iterator<Item = Point> + 'a {
        incident
            .iter()
            .filter(move |s| s.has_endpoint(apex))
            .map(move |s| s.other(apex))
            .filter(move |&far| self.cone_of(apex, far).ok() == Some(cone))
    }

    pub fn subcone_count(&self, apex: Point, cone: ConeIndex, incident: &[Segment]) -> usize {
        self.splitting_endpoints(apex, cone, incident).count() + 1
    }
}
