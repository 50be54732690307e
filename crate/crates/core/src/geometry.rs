//! Exact plane geometry on a fixed 1/20 grid.
//!
//! Every coordinate is an integer count of twentieths of a mesh unit, so
//! halves, quarters and fifths are all exact. Squared distances are integers
//! in units of 1/400 and all predicates are integer comparisons; nothing here
//! touches floating point.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Internal units per mesh unit.
pub const SCALE: i64 = 20;

/// Largest coordinate magnitude accepted, in internal units. Keeps every
/// product formed by the predicates well inside `i128`.
pub const MAX_COORD: i64 = 1 << 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("coordinate {0} exceeds the supported magnitude {MAX_COORD}")]
    OutOfRange(i64),
    #[error("segment endpoints coincide at {0}")]
    DegenerateSegment(Point),
    #[error("collinear segments {0} and {1} overlap")]
    DegenerateOverlap(Segment, Segment),
}

/// A point with coordinates in 1/20 mesh units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    /// Point from raw internal units.
    ///
    /// Panics if a coordinate exceeds [`MAX_COORD`]; use [`Point::try_new`]
    /// for untrusted input.
    pub fn new(x: i64, y: i64) -> Self {
        Self::try_new(x, y).expect("coordinate in range")
    }

    pub fn try_new(x: i64, y: i64) -> Result<Self, GeometryError> {
        for c in [x, y] {
            if c.abs() > MAX_COORD {
                return Err(GeometryError::OutOfRange(c));
            }
        }
        Ok(Self { x, y })
    }

    /// Point at integer mesh coordinates.
    pub fn mesh(x: i64, y: i64) -> Self {
        Self::new(x * SCALE, y * SCALE)
    }

    pub fn origin() -> Self {
        Self { x: 0, y: 0 }
    }

    pub fn translate(self, dx: i64, dy: i64) -> Self {
        Self::new(self.x + dx, self.y + dy)
    }

    /// True when both coordinates are integral in mesh units.
    pub fn is_mesh_cross(self) -> bool {
        self.x % SCALE == 0 && self.y % SCALE == 0
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            fmt_ratio(Ratio::new(self.x as i128, SCALE as i128)),
            fmt_ratio(Ratio::new(self.y as i128, SCALE as i128))
        )
    }
}

fn fmt_ratio(r: Ratio<i128>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Squared Euclidean distance in units of 1/400 mesh unit squared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SquaredDistance(i128);

impl SquaredDistance {
    /// One mesh unit squared: the adjacency threshold.
    pub const ONE: Self = Self((SCALE * SCALE) as i128);
    /// One half: the squared precision bound `(1/sqrt 2)^2`.
    pub const HALF: Self = Self((SCALE * SCALE / 2) as i128);

    pub fn from_raw(raw: i128) -> Self {
        Self(raw)
    }

    pub fn raw(self) -> i128 {
        self.0
    }

    /// Exact value in squared mesh units.
    pub fn to_ratio(self) -> Ratio<i128> {
        Ratio::new(self.0, (SCALE * SCALE) as i128)
    }

    /// Squared distance equal to the rational `num/den` (mesh units squared).
    /// Panics if the value is not a multiple of 1/400.
    pub fn from_ratio(num: i128, den: i128) -> Self {
        let r = Ratio::new(num * (SCALE * SCALE) as i128, den);
        assert!(r.is_integer(), "{num}/{den} is not a multiple of 1/400");
        Self(r.to_integer())
    }
}

impl fmt::Display for SquaredDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_ratio(self.to_ratio()))
    }
}

/// Exact squared distance between two points.
pub fn dist2(p: Point, q: Point) -> SquaredDistance {
    let dx = (p.x - q.x) as i128;
    let dy = (p.y - q.y) as i128;
    SquaredDistance(dx * dx + dy * dy)
}

/// A closed segment with distinct endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self, GeometryError> {
        if a == b {
            return Err(GeometryError::DegenerateSegment(a));
        }
        Ok(Self { a, b })
    }

    /// True when `p` lies on the closed segment.
    pub fn contains(&self, p: Point) -> bool {
        orient(self.a, self.b, p) == Ordering::Equal && within_box(self.a, self.b, p)
    }

    /// True when `p` lies on the segment but is not one of its endpoints.
    pub fn contains_in_interior(&self, p: Point) -> bool {
        p != self.a && p != self.b && self.contains(p)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// A point with exact rational coordinates in mesh units. Intersections of
/// arbitrary segments need not land on the 1/20 grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    pub x: Ratio<i128>,
    pub y: Ratio<i128>,
}

impl RationalPoint {
    /// The grid point this equals, if it lies on the 1/20 grid.
    pub fn to_grid(self) -> Option<Point> {
        let sx = self.x * Ratio::from_integer(SCALE as i128);
        let sy = self.y * Ratio::from_integer(SCALE as i128);
        if sx.is_integer() && sy.is_integer() {
            Point::try_new(sx.to_integer() as i64, sy.to_integer() as i64).ok()
        } else {
            None
        }
    }
}

impl From<Point> for RationalPoint {
    fn from(p: Point) -> Self {
        Self {
            x: Ratio::new(p.x as i128, SCALE as i128),
            y: Ratio::new(p.y as i128, SCALE as i128),
        }
    }
}

fn cross(o: Point, a: Point, b: Point) -> i128 {
    let (ax, ay) = ((a.x - o.x) as i128, (a.y - o.y) as i128);
    let (bx, by) = ((b.x - o.x) as i128, (b.y - o.y) as i128);
    ax * by - ay * bx
}

/// Orientation of `c` relative to the directed line `a -> b`.
pub fn orient(a: Point, b: Point, c: Point) -> Ordering {
    cross(a, b, c).cmp(&0)
}

fn within_box(a: Point, b: Point, p: Point) -> bool {
    a.x.min(b.x) <= p.x && p.x <= a.x.max(b.x) && a.y.min(b.y) <= p.y && p.y <= a.y.max(b.y)
}

/// True when the closed segments share at least one point.
pub fn segments_intersect(s: &Segment, t: &Segment) -> bool {
    let o1 = orient(s.a, s.b, t.a);
    let o2 = orient(s.a, s.b, t.b);
    let o3 = orient(t.a, t.b, s.a);
    let o4 = orient(t.a, t.b, s.b);
    if o1 != o2 && o3 != o4 && o1 != Ordering::Equal && o2 != Ordering::Equal
        && o3 != Ordering::Equal && o4 != Ordering::Equal
    {
        return true;
    }
    s.contains(t.a) || s.contains(t.b) || t.contains(s.a) || t.contains(s.b)
}

/// Transversal crossing of the open segments.
///
/// Returns the intersection point when the segments cross at a point interior
/// to both. Disjoint segments, endpoint touches and T-junctions give `None`.
/// Collinear segments sharing more than a single point are an error.
pub fn segments_properly_cross(
    s: &Segment,
    t: &Segment,
) -> Result<Option<RationalPoint>, GeometryError> {
    let o1 = orient(s.a, s.b, t.a);
    let o2 = orient(s.a, s.b, t.b);
    let o3 = orient(t.a, t.b, s.a);
    let o4 = orient(t.a, t.b, s.b);
    use Ordering::Equal;
    if o1 == Equal && o2 == Equal {
        // Collinear: overlapping in more than one point is degenerate.
        if collinear_overlap_len_positive(s, t) {
            return Err(GeometryError::DegenerateOverlap(*s, *t));
        }
        return Ok(None);
    }
    if [o1, o2, o3, o4].contains(&Equal) || o1 == o2 || o3 == o4 {
        return Ok(None);
    }
    // s.a + lambda (s.b - s.a), lambda = cross(t.a - s.a, t.b - t.a) / cross(s.b - s.a, t.b - t.a)
    let (dx, dy) = ((s.b.x - s.a.x) as i128, (s.b.y - s.a.y) as i128);
    let (ex, ey) = ((t.b.x - t.a.x) as i128, (t.b.y - t.a.y) as i128);
    let (fx, fy) = ((t.a.x - s.a.x) as i128, (t.a.y - s.a.y) as i128);
    let denom = dx * ey - dy * ex;
    let lambda = Ratio::new(fx * ey - fy * ex, denom);
    let scale = Ratio::from_integer(SCALE as i128);
    let x = (Ratio::from_integer(s.a.x as i128) + lambda * dx) / scale;
    let y = (Ratio::from_integer(s.a.y as i128) + lambda * dy) / scale;
    Ok(Some(RationalPoint { x, y }))
}

fn collinear_overlap_len_positive(s: &Segment, t: &Segment) -> bool {
    // Project on the dominant axis of s.
    let key = |p: Point| {
        if s.a.x != s.b.x {
            p.x
        } else {
            p.y
        }
    };
    let (s0, s1) = (key(s.a).min(key(s.b)), key(s.a).max(key(s.b)));
    let (t0, t1) = (key(t.a).min(key(t.b)), key(t.a).max(key(t.b)));
    s0.max(t0) < s1.min(t1)
}
