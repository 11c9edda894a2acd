//! Exact planar primitives: points, segments, elbows, and the predicates
//! every higher layer is built on.
//!
//! The crossing predicate follows the open-interior rule: two segments cross
//! iff they share a point interior to both. Touching at an endpoint, a
//! T-contact, and shared endpoints are all non-crossings. Collinear segments
//! cross iff their open 1D intervals overlap.

use serde::{Deserialize, Serialize};

use crate::numeric::{rat, Rat};
use crate::{Error, Result};

/// A point with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }
}

/// Integer-coordinate point, mostly for fixtures and construction lattices.
pub fn pt(x: i64, y: i64) -> Point {
    Point::new(rat(x), rat(y))
}

/// Squared Euclidean distance, exact.
pub fn dist2(p: &Point, q: &Point) -> Rat {
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    &dx * &dx + &dy * &dy
}

/// Turn direction of the triple (p, q, r).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    Ccw,
    Cw,
    Collinear,
}

/// Exact cross product (q - p) x (r - p).
pub fn cross(p: &Point, q: &Point, r: &Point) -> Rat {
    let ux = &q.x - &p.x;
    let uy = &q.y - &p.y;
    let vx = &r.x - &p.x;
    let vy = &r.y - &p.y;
    &ux * &vy - &uy * &vx
}

/// Sign of the exact determinant (q - p) x (r - p); no tolerance.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    let c = cross(p, q, r);
    if c > Rat::default() {
        Orientation::Ccw
    } else if c < Rat::default() {
        Orientation::Cw
    } else {
        Orientation::Collinear
    }
}

/// A straight closed segment with distinct endpoints.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }
}

/// Open-interval overlap test for two collinear segments.
fn collinear_open_overlap(s1: &Segment, s2: &Segment) -> bool {
    // Order endpoints lexicographically along the common line; the open
    // segments overlap iff the larger of the lower ends is strictly below
    // the smaller of the upper ends.
    let (lo1, hi1) = if s1.a <= s1.b { (&s1.a, &s1.b) } else { (&s1.b, &s1.a) };
    let (lo2, hi2) = if s2.a <= s2.b { (&s2.a, &s2.b) } else { (&s2.b, &s2.a) };
    let lo = if lo1 >= lo2 { lo1 } else { lo2 };
    let hi = if hi1 <= hi2 { hi1 } else { hi2 };
    lo < hi
}

/// True iff the open segments share a point: proper transversal crossings
/// and collinear interior overlaps count; endpoint contacts do not.
pub fn segments_cross(s1: &Segment, s2: &Segment) -> Result<bool> {
    if s1.a == s1.b || s2.a == s2.b {
        return Err(Error::DegenerateInput("zero-length segment".into()));
    }
    let d1 = orientation(&s1.a, &s1.b, &s2.a);
    let d2 = orientation(&s1.a, &s1.b, &s2.b);
    if d1 == Orientation::Collinear && d2 == Orientation::Collinear {
        return Ok(collinear_open_overlap(s1, s2));
    }
    let d3 = orientation(&s2.a, &s2.b, &s1.a);
    let d4 = orientation(&s2.a, &s2.b, &s1.b);
    // A point interior to both requires strictly opposite orientations on
    // both sides; any collinear endpoint makes the contact an endpoint of
    // one segment, which the open rule rejects.
    Ok(strictly_opposite(d1, d2) && strictly_opposite(d3, d4))
}

fn strictly_opposite(a: Orientation, b: Orientation) -> bool {
    matches!(
        (a, b),
        (Orientation::Ccw, Orientation::Cw) | (Orientation::Cw, Orientation::Ccw)
    )
}

/// An orthogonal edge: a vertical leg at `anchor_vertical` joined at the
/// corner `(anchor_vertical.x, anchor_horizontal.y)` to a horizontal leg
/// ending at `anchor_horizontal`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Elbow {
    pub anchor_vertical: Point,
    pub anchor_horizontal: Point,
}

impl Elbow {
    pub fn new(anchor_vertical: Point, anchor_horizontal: Point) -> Self {
        Elbow {
            anchor_vertical,
            anchor_horizontal,
        }
    }

    /// The right-angle corner shared by the two legs.
    pub fn corner(&self) -> Point {
        Point::new(self.anchor_vertical.x.clone(), self.anchor_horizontal.y.clone())
    }

    pub fn vertical_leg(&self) -> Segment {
        Segment::new(self.anchor_vertical.clone(), self.corner())
    }

    pub fn horizontal_leg(&self) -> Segment {
        Segment::new(self.corner(), self.anchor_horizontal.clone())
    }

    fn check_nondegenerate(&self) -> Result<()> {
        if self.anchor_vertical.x == self.anchor_horizontal.x
            || self.anchor_vertical.y == self.anchor_horizontal.y
        {
            return Err(Error::DegenerateInput(
                "elbow with a zero-length leg (anchors share a coordinate)".into(),
            ));
        }
        Ok(())
    }
}

/// True iff a leg of one elbow crosses a leg of the other in the interior of
/// both legs. Corners count as leg endpoints, so corner contacts are
/// non-crossings (they cannot occur at all once the four anchors have
/// pairwise distinct coordinates).
///
/// Preconditions enforced: nonzero legs (`DegenerateInput`), four distinct
/// anchors (`SharedVertex`), pairwise distinct x and y coordinates among the
/// anchors (`GeneralPositionViolation`).
pub fn elbows_cross(e1: &Elbow, e2: &Elbow) -> Result<bool> {
    e1.check_nondegenerate()?;
    e2.check_nondegenerate()?;
    let anchors = [
        &e1.anchor_vertical,
        &e1.anchor_horizontal,
        &e2.anchor_vertical,
        &e2.anchor_horizontal,
    ];
    for i in 0..4 {
        for j in i + 1..4 {
            if anchors[i] == anchors[j] {
                return Err(Error::SharedVertex(
                    "elbows share an anchor point".into(),
                ));
            }
        }
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if anchors[i].x == anchors[j].x || anchors[i].y == anchors[j].y {
                return Err(Error::GeneralPositionViolation(
                    "elbow anchors share an x or y coordinate".into(),
                ));
            }
        }
    }
    let legs1 = [e1.vertical_leg(), e1.horizontal_leg()];
    let legs2 = [e2.vertical_leg(), e2.horizontal_leg()];
    for l1 in &legs1 {
        for l2 in &legs2 {
            if segments_cross(l1, l2)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// General-position flavors.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum GpMode {
    /// No three points collinear.
    Strict,
    /// Strict, plus no two points share an x or a y coordinate.
    Orthogonal,
}

/// An ordered sequence of pairwise distinct points with optional labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointSet {
    points: Vec<Point>,
    labels: Option<Vec<String>>,
}

impl PointSet {
    /// Builds a point set, rejecting duplicate points.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let mut sorted: Vec<&Point> = points.iter().collect();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DegenerateInput(
                    "point set contains a duplicate point".into(),
                ));
            }
        }
        Ok(PointSet {
            points,
            labels: None,
        })
    }

    /// Attaches one label per point.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.points.len() {
            return Err(Error::DegenerateInput(
                "label count differs from point count".into(),
            ));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn point(&self, i: usize) -> Result<&Point> {
        self.points
            .get(i)
            .ok_or_else(|| Error::IndexOutOfRange(format!("point index {i} of {}", self.len())))
    }
}

/// True iff the set satisfies the requested general-position mode. The
/// collinearity scan is the exhaustive O(n^3) one; coordinate duplicates are
/// found by sorting.
pub fn check_general_position(s: &PointSet, mode: GpMode) -> bool {
    let pts = s.points();
    let n = pts.len();
    if mode == GpMode::Orthogonal {
        let mut xs: Vec<&Rat> = pts.iter().map(|p| &p.x).collect();
        let mut ys: Vec<&Rat> = pts.iter().map(|p| &p.y).collect();
        xs.sort();
        ys.sort();
        if xs.windows(2).any(|w| w[0] == w[1]) || ys.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orientation(&pts[i], &pts[j], &pts[k]) == Orientation::Collinear {
                    return false;
                }
            }
        }
    }
    true
}

/// Convex hull in counterclockwise order (Andrew's monotone chain),
/// returning indices into `pts`. Collinear boundary points are kept off the
/// hull (strict turns only).
pub fn convex_hull(pts: &[Point]) -> Vec<usize> {
    let n = pts.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| pts[i].cmp(&pts[j]));
    let mut hull: Vec<usize> = Vec::with_capacity(2 * n);
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(idx.iter())
        } else {
            Box::new(idx.iter().rev())
        };
        for &i in iter {
            while hull.len() >= start + 2 {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                if orientation(&pts[a], &pts[b], &pts[i]) == Orientation::Ccw {
                    break;
                }
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

/// True iff the ordered sequence traces a convex polygon: all points are
/// hull vertices and the given cyclic order equals the hull's cyclic order
/// (in either rotation direction).
pub fn is_convex_cycle(pts: &[Point]) -> bool {
    let n = pts.len();
    if n < 3 {
        return false;
    }
    let hull = convex_hull(pts);
    if hull.len() != n {
        return false;
    }
    // Compare (0..n in input order) against the hull cycle both ways.
    let pos_of = {
        let mut pos = vec![0usize; n];
        for (rank, &i) in hull.iter().enumerate() {
            pos[i] = rank;
        }
        pos
    };
    let forward = (0..n).all(|t| {
        let a = pos_of[t % n];
        let b = pos_of[(t + 1) % n];
        (a + 1) % n == b
    });
    let backward = (0..n).all(|t| {
        let a = pos_of[t % n];
        let b = pos_of[(t + 1) % n];
        (b + 1) % n == a
    });
    forward || backward
}

/// True iff `p` is strictly inside triangle `(a, b, c)`.
pub fn strictly_inside_triangle(p: &Point, a: &Point, b: &Point, c: &Point) -> bool {
    let o1 = orientation(a, b, p);
    let o2 = orientation(b, c, p);
    let o3 = orientation(c, a, p);
    o1 == o2 && o2 == o3 && o1 != Orientation::Collinear
}

/// Seeded random point set with integer coordinates, rejection-sampled into
/// the requested general-position mode. Deterministic for a fixed
/// `(n, seed, mode)` triple.
pub fn random_point_set(n: usize, seed: u64, mode: GpMode) -> Result<PointSet> {
    use rand::{Rng, SeedableRng};
    if n == 0 {
        return Err(Error::InvalidSize("need at least one point".into()));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let span = (n.max(4) as i64).pow(2) * 8;
    let mut pts: Vec<(i64, i64)> = Vec::with_capacity(n);
    let mut attempts: u64 = 0;
    while pts.len() < n {
        attempts += 1;
        if attempts > 500_000 {
            return Err(Error::SearchExhausted(format!(
                "random sampling failed to reach {n} points in general position"
            )));
        }
        let x = rng.gen_range(-span..=span);
        let y = rng.gen_range(-span..=span);
        if pts.iter().any(|&(px, py)| px == x && py == y) {
            continue;
        }
        if mode == GpMode::Orthogonal && pts.iter().any(|&(px, py)| px == x || py == y) {
            continue;
        }
        let collinear = (0..pts.len()).any(|i| {
            (i + 1..pts.len()).any(|j| {
                let (x1, y1) = pts[i];
                let (x2, y2) = pts[j];
                let c = (x2 - x1) as i128 * (y - y1) as i128
                    - (y2 - y1) as i128 * (x - x1) as i128;
                c == 0
            })
        });
        if collinear {
            continue;
        }
        pts.push((x, y));
    }
    PointSet::new(pts.into_iter().map(|(x, y)| pt(x, y)).collect())
}
