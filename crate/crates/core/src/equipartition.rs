//! Six-wedge equipartition: three concurrent lines whose six open wedges
//! each contain at least ⌊n/6⌋ points of the input set.
//!
//! The search fixes a first line as a halving line of a candidate direction,
//! then sweeps an apex along it. Between consecutive apex positions at which
//! the apex is collinear with some point pair, every angular relation among
//! the points is constant, so testing one apex per interval is a complete
//! search over apex placements for that line.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::geom::{check_general_position, GpMode, Point, PointSet};
use crate::numeric::{rat, Rat};
use crate::{Error, Result};

/// Direction vector with exact rational components.
type V2 = (Rat, Rat);

fn vcross(u: &V2, v: &V2) -> Rat {
    &u.0 * &v.1 - &u.1 * &v.0
}

fn vdot(u: &V2, v: &V2) -> Rat {
    &u.0 * &v.0 + &u.1 * &v.1
}

fn vneg(u: &V2) -> V2 {
    (-u.0.clone(), -u.1.clone())
}

fn vadd(u: &V2, v: &V2) -> V2 {
    (&u.0 + &v.0, &u.1 + &v.1)
}

fn dir(from: &Point, to: &Point) -> V2 {
    (&to.x - &from.x, &to.y - &from.y)
}

/// A line ax + by = c with (a, b) ≠ (0, 0). Stored normalized: integer
/// coefficients in lowest terms, leading nonzero of (a, b) positive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Line {
    a: Rat,
    b: Rat,
    c: Rat,
}

impl Line {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Result<Line> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegenerateInput(
                "a line needs (a, b) != (0, 0)".into(),
            ));
        }
        let l = a
            .denom()
            .lcm(b.denom())
            .lcm(c.denom());
        let ai = a.numer() * (&l / a.denom());
        let bi = b.numer() * (&l / b.denom());
        let ci = c.numer() * (&l / c.denom());
        let g = ai.gcd(&bi).gcd(&ci);
        let (mut ai, mut bi, mut ci) = (ai / &g, bi / &g, ci / &g);
        let lead_negative = if !ai.is_zero() {
            ai.is_negative()
        } else {
            bi.is_negative()
        };
        if lead_negative {
            ai = -ai;
            bi = -bi;
            ci = -ci;
        }
        Ok(Line {
            a: Rat::from(ai),
            b: Rat::from(bi),
            c: Rat::from(ci),
        })
    }

    /// Line through two distinct points.
    pub fn through(p: &Point, q: &Point) -> Result<Line> {
        if p == q {
            return Err(Error::DegenerateInput(
                "a line through two points needs them distinct".into(),
            ));
        }
        Line::through_dir(p, &dir(p, q))
    }

    fn through_dir(p: &Point, d: &V2) -> Result<Line> {
        let a = d.1.clone();
        let b = -d.0.clone();
        let c = &a * &p.x + &b * &p.y;
        Line::new(a, b, c)
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn c(&self) -> &Rat {
        &self.c
    }

    /// Signed evaluation a·x + b·y − c; zero iff the point is on the line.
    pub fn eval(&self, p: &Point) -> Rat {
        &self.a * &p.x + &self.b * &p.y - &self.c
    }

    /// Squared distance from `p` to the line, exact.
    pub fn dist2(&self, p: &Point) -> Rat {
        let e = self.eval(p);
        let n2 = &self.a * &self.a + &self.b * &self.b;
        &e * &e / n2
    }
}

/// Apex, three concurrent lines, and the six induced open wedges, listed
/// counterclockwise. Wedge 1 is the wedge whose angular interval contains
/// the direction (1, 0) from the apex; line j borders wedges j and j+3.
#[derive(Clone, Debug)]
pub struct WedgePartition {
    apex: Point,
    lines: [Line; 3],
    patterns: [[i8; 3]; 6],
    wedges: [Vec<usize>; 6],
}

impl WedgePartition {
    pub fn apex(&self) -> &Point {
        &self.apex
    }

    pub fn lines(&self) -> &[Line; 3] {
        &self.lines
    }

    /// Point indices per wedge, in input order.
    pub fn wedges(&self) -> &[Vec<usize>; 6] {
        &self.wedges
    }
}

/// Wedge index (1..=6) of a point by the sign pattern of the three line
/// evaluations. Errors with OnBoundary if the point lies on any line.
pub fn wedge_membership(p: &Point, w: &WedgePartition) -> Result<usize> {
    let mut pattern = [0i8; 3];
    for (k, line) in w.lines.iter().enumerate() {
        let e = line.eval(p);
        if e.is_zero() {
            return Err(Error::OnBoundary(format!(
                "point lies on partition line {}",
                k + 1
            )));
        }
        pattern[k] = if e.is_positive() { 1 } else { -1 };
    }
    let idx = w
        .patterns
        .iter()
        .position(|q| *q == pattern)
        .expect("every off-line sign pattern belongs to a wedge");
    Ok(idx + 1)
}

/// Canonical primitive integer form of a nonzero rational direction, mapped
/// into the upper half (y > 0, or y = 0 and x > 0).
fn canonical_dir(v: &V2) -> (BigInt, BigInt) {
    let l = v.0.denom().lcm(v.1.denom());
    let xi = v.0.numer() * (&l / v.0.denom());
    let yi = v.1.numer() * (&l / v.1.denom());
    let g = xi.gcd(&yi);
    let (mut xi, mut yi) = (xi / &g, yi / &g);
    if yi.is_negative() || (yi.is_zero() && xi.is_negative()) {
        xi = -xi;
        yi = -yi;
    }
    (xi, yi)
}

/// Candidate directions for the first line: a fixed primer list, then every
/// point-pair direction, then directions strictly between angularly adjacent
/// pair directions (exact stand-ins for infinitesimal rotations).
fn candidate_directions(pts: &[Point]) -> Vec<V2> {
    let mut out: Vec<V2> = Vec::new();
    let mut seen: HashSet<(BigInt, BigInt)> = HashSet::new();
    let push = |v: V2, out: &mut Vec<V2>, seen: &mut HashSet<(BigInt, BigInt)>| {
        if v.0.is_zero() && v.1.is_zero() {
            return;
        }
        let key = canonical_dir(&v);
        if seen.insert(key.clone()) {
            out.push((Rat::from(key.0), Rat::from(key.1)));
        }
    };
    for (x, y) in [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2), (3, 1), (1, 3)] {
        push((rat(x), rat(y)), &mut out, &mut seen);
    }
    let mut criticals: Vec<V2> = Vec::new();
    let mut crit_seen: HashSet<(BigInt, BigInt)> = HashSet::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let d = dir(&pts[i], &pts[j]);
            let key = canonical_dir(&d);
            if crit_seen.insert(key.clone()) {
                criticals.push((Rat::from(key.0), Rat::from(key.1)));
            }
        }
    }
    // Angular order within the closed upper half-plane.
    criticals.sort_by(|u, v| {
        let c = vcross(u, v);
        if c.is_positive() {
            std::cmp::Ordering::Less
        } else if c.is_negative() {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    });
    for c in &criticals {
        push(c.clone(), &mut out, &mut seen);
    }
    for w in criticals.windows(2) {
        push(vadd(&w[0], &w[1]), &mut out, &mut seen);
    }
    if criticals.len() >= 2 {
        let wrap = vadd(criticals.last().unwrap(), &vneg(&criticals[0]));
        push(wrap, &mut out, &mut seen);
    }
    out
}

/// Open angular cone (start, end), both bounds in a common open half-plane.
struct Cone<'a> {
    start: &'a V2,
    end: &'a V2,
}

/// Intersection of two open cones whose four bounds share an open
/// half-plane; `None` when empty. The witness is interior to both.
fn cone_intersection(a: &Cone, b: &Cone) -> Option<V2> {
    let start = if vcross(a.start, b.start).is_positive() {
        b.start
    } else {
        a.start
    };
    let end = if vcross(a.end, b.end).is_positive() {
        a.end
    } else {
        b.end
    };
    if vcross(start, end).is_positive() {
        Some(vadd(start, end))
    } else {
        None
    }
}

/// Finds three concurrent lines whose six open wedges each hold at least
/// ⌊n/6⌋ points. For |S| = 6m every wedge holds exactly m.
pub fn six_wedge_partition(s: &PointSet) -> Result<WedgePartition> {
    let n = s.len();
    if n < 6 {
        return Err(Error::InvalidSize(format!(
            "six-wedge partition needs at least 6 points, got {n}"
        )));
    }
    if !check_general_position(s, GpMode::Strict) {
        return Err(Error::GeneralPositionViolation(
            "six-wedge partition needs strict general position".into(),
        ));
    }
    let q = n / 6;
    let pts = s.points();
    let mut directions_tried = 0u64;
    let mut apexes_tried = 0u64;

    for d in candidate_directions(pts) {
        directions_tried += 1;
        // Normal so that eval = cross(d, p - base) = proj(p) - offset.
        let u: V2 = (-d.1.clone(), d.0.clone());
        let proj: Vec<Rat> = pts.iter().map(|p| vdot(&u, &(p.x.clone(), p.y.clone()))).collect();
        let mut sorted = proj.clone();
        sorted.sort();

        for k in 3 * q..=(n - 3 * q) {
            if k == 0 || k == n || sorted[k - 1] == sorted[k] {
                continue;
            }
            let c_mid = (&sorted[k - 1] + &sorted[k]) / rat(2);
            let n_low = k;
            let n_up = n - k;
            let norm2 = vdot(&u, &u);
            let x0 = Point::new(&c_mid * &u.0 / &norm2, &c_mid * &u.1 / &norm2);

            // Apex positions where some point pair is collinear with the
            // apex; linear in the sweep parameter.
            let mut events: Vec<Rat> = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let w = dir(&pts[i], &pts[j]);
                    let den = vcross(&d, &w);
                    if den.is_zero() {
                        continue;
                    }
                    let num = vcross(&dir(&x0, &pts[i]), &w);
                    events.push(num / den);
                }
            }
            events.sort();
            events.dedup();
            let mut candidates: Vec<Rat> = Vec::new();
            if events.is_empty() {
                candidates.push(rat(0));
            } else {
                candidates.push(&events[0] - rat(1));
                for w in events.windows(2) {
                    candidates.push((&w[0] + &w[1]) / rat(2));
                }
                candidates.push(events.last().unwrap() + rat(1));
            }

            for t in candidates {
                apexes_tried += 1;
                let apex = Point::new(&x0.x + &t * &d.0, &x0.y + &t * &d.1);
                let mut upper: Vec<V2> = Vec::with_capacity(n_up);
                let mut lower: Vec<V2> = Vec::with_capacity(n_low);
                for (i, p) in pts.iter().enumerate() {
                    let v = dir(&apex, p);
                    if proj[i] > c_mid {
                        upper.push(v);
                    } else {
                        lower.push(v);
                    }
                }
                let ccw = |a: &V2, b: &V2| {
                    let c = vcross(a, b);
                    if c.is_positive() {
                        std::cmp::Ordering::Less
                    } else if c.is_negative() {
                        std::cmp::Ordering::Greater
                    } else {
                        std::cmp::Ordering::Equal
                    }
                };
                upper.sort_by(|a, b| ccw(a, b));
                lower.sort_by(|a, b| ccw(a, b));

                for s1 in q..=(n_up - 2 * q) {
                    for s2 in q..=(n_up - s1 - q) {
                        let ug1 = Cone { start: &upper[s1 - 1], end: &upper[s1] };
                        let ug2 = Cone {
                            start: &upper[s1 + s2 - 1],
                            end: &upper[s1 + s2],
                        };
                        for t1 in q..=(n_low - 2 * q) {
                            for t2 in q..=(n_low - t1 - q) {
                                let nl1s = vneg(&lower[t1 - 1]);
                                let nl1e = vneg(&lower[t1]);
                                let nl2s = vneg(&lower[t1 + t2 - 1]);
                                let nl2e = vneg(&lower[t1 + t2]);
                                let lg1 = Cone { start: &nl1s, end: &nl1e };
                                let lg2 = Cone { start: &nl2s, end: &nl2e };
                                let ra = match cone_intersection(&ug1, &lg1) {
                                    Some(v) => v,
                                    None => continue,
                                };
                                let rb = match cone_intersection(&ug2, &lg2) {
                                    Some(v) => v,
                                    None => continue,
                                };
                                assert!(vcross(&ra, &rb).is_positive());
                                return assemble(s, apex, [
                                    d.clone(),
                                    ra,
                                    rb,
                                    vneg(&d),
                                ], q);
                            }
                        }
                    }
                }
            }
        }
    }
    Err(Error::SearchExhausted(format!(
        "no six-wedge partition found after {directions_tried} directions and \
         {apexes_tried} apex positions (n = {n}, floor = {q})"
    )))
}

/// Builds the labeled partition from the apex and the first four rays
/// (d, r_a, r_b, -d); the remaining two are the negations of r_a and r_b.
fn assemble(s: &PointSet, apex: Point, four: [V2; 4], floor: usize) -> Result<WedgePartition> {
    let [d, ra, rb, nd] = four;
    let rays: [V2; 6] = [d, ra.clone(), rb.clone(), nd, vneg(&ra), vneg(&rb)];

    // Wedge 1 contains direction (1, 0); if (1, 0) is a ray, wedge 1 starts
    // at it.
    let e0: V2 = (rat(1), rat(0));
    let mut anchor = 6usize;
    for i in 0..6 {
        let c1 = vcross(&rays[i], &e0);
        if c1.is_zero() {
            if vdot(&rays[i], &e0).is_positive() {
                anchor = i;
                break;
            }
            continue;
        }
        if c1.is_positive() && vcross(&e0, &rays[(i + 1) % 6]).is_positive() {
            anchor = i;
            break;
        }
    }
    assert!(anchor < 6, "direction (1, 0) lies in some wedge");
    let rays: Vec<V2> = (0..6).map(|i| rays[(anchor + i) % 6].clone()).collect();

    let lines = [
        Line::through_dir(&apex, &rays[0])?,
        Line::through_dir(&apex, &rays[1])?,
        Line::through_dir(&apex, &rays[2])?,
    ];

    let mut patterns = [[0i8; 3]; 6];
    for i in 0..6 {
        let rep = vadd(&rays[i], &rays[(i + 1) % 6]);
        for (k, line) in lines.iter().enumerate() {
            let e = line.a() * &rep.0 + line.b() * &rep.1;
            assert!(!e.is_zero(), "wedge representative avoids all lines");
            patterns[i][k] = if e.is_positive() { 1 } else { -1 };
        }
    }

    let mut wedges: [Vec<usize>; 6] = Default::default();
    for (idx, p) in s.points().iter().enumerate() {
        let v = dir(&apex, p);
        let sector = (0..6)
            .find(|&i| {
                vcross(&rays[i], &v).is_positive()
                    && vcross(&v, &rays[(i + 1) % 6]).is_positive()
            })
            .expect("no input point lies on a partition line");
        wedges[sector].push(idx);
    }
    for w in &wedges {
        assert!(w.len() >= floor, "wedge count honors the floor");
    }

    Ok(WedgePartition {
        apex,
        lines,
        patterns,
        wedges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{pt, random_point_set};

    fn hexagonish() -> PointSet {
        PointSet::new(vec![
            pt(5, 0),
            pt(2, 4),
            pt(-3, 4),
            pt(-5, 1),
            pt(-2, -4),
            pt(3, -5),
        ])
        .unwrap()
    }

    #[test]
    fn line_normalization() {
        let l = Line::through(&pt(0, 0), &pt(2, 2)).unwrap();
        assert_eq!((l.a(), l.b(), l.c()), (&rat(1), &rat(-1), &rat(0)));
        let scaled = Line::through(&pt(0, 0), &pt(7, 7)).unwrap();
        assert_eq!(l, scaled);
        let vertical = Line::through(&pt(3, 0), &pt(3, 9)).unwrap();
        assert_eq!((vertical.a(), vertical.b(), vertical.c()), (&rat(1), &rat(0), &rat(3)));
        assert!(Line::new(rat(0), rat(0), rat(1)).is_err());
    }

    #[test]
    fn line_eval_and_distance() {
        let l = Line::new(rat(3), rat(4), rat(0)).unwrap();
        assert_eq!(l.eval(&pt(0, 0)), rat(0));
        assert_eq!(l.dist2(&pt(3, 4)), rat(25));
    }

    #[test]
    fn hexagon_gets_one_point_per_wedge() {
        let s = hexagonish();
        let w = six_wedge_partition(&s).unwrap();
        for wedge in w.wedges() {
            assert_eq!(wedge.len(), 1);
        }
    }

    #[test]
    fn lines_are_concurrent_and_normalized() {
        let s = hexagonish();
        let w = six_wedge_partition(&s).unwrap();
        for line in w.lines() {
            assert_eq!(line.eval(w.apex()), rat(0));
            let renorm = Line::new(line.a().clone(), line.b().clone(), line.c().clone()).unwrap();
            assert_eq!(&renorm, line);
        }
        let [l1, l2, l3] = w.lines();
        let det = l1.a() * (l2.b() * l3.c() - l3.b() * l2.c())
            - l1.b() * (l2.a() * l3.c() - l3.a() * l2.c())
            + l1.c() * (l2.a() * l3.b() - l3.a() * l2.b());
        assert_eq!(det, rat(0));
    }

    #[test]
    fn twelve_points_two_per_wedge() {
        let s = random_point_set(12, 7, GpMode::Strict).unwrap();
        let w = six_wedge_partition(&s).unwrap();
        let total: usize = w.wedges().iter().map(|v| v.len()).sum();
        assert_eq!(total, 12);
        for wedge in w.wedges() {
            assert_eq!(wedge.len(), 2);
        }
    }

    #[test]
    fn seven_points_floor_one() {
        let s = random_point_set(7, 3, GpMode::Strict).unwrap();
        let w = six_wedge_partition(&s).unwrap();
        let total: usize = w.wedges().iter().map(|v| v.len()).sum();
        assert_eq!(total, 7);
        for wedge in w.wedges() {
            assert!(!wedge.is_empty());
        }
    }

    #[test]
    fn membership_matches_stored_lists() {
        let s = random_point_set(13, 11, GpMode::Strict).unwrap();
        let w = six_wedge_partition(&s).unwrap();
        for (i, wedge) in w.wedges().iter().enumerate() {
            for &idx in wedge {
                assert_eq!(wedge_membership(s.point(idx).unwrap(), &w).unwrap(), i + 1);
            }
        }
    }

    #[test]
    fn reflection_maps_to_opposite_wedge() {
        let s = hexagonish();
        let w = six_wedge_partition(&s).unwrap();
        for p in s.points() {
            let side = wedge_membership(p, &w).unwrap();
            let reflected = Point::new(
                &w.apex().x * rat(2) - &p.x,
                &w.apex().y * rat(2) - &p.y,
            );
            let opposite = wedge_membership(&reflected, &w).unwrap();
            assert_eq!((side - 1 + 3) % 6 + 1, opposite);
        }
    }

    #[test]
    fn apex_is_on_boundary() {
        let s = hexagonish();
        let w = six_wedge_partition(&s).unwrap();
        assert!(matches!(
            wedge_membership(w.apex(), &w),
            Err(Error::OnBoundary(_))
        ));
    }

    #[test]
    fn too_few_points_rejected() {
        let s = PointSet::new(vec![pt(0, 0), pt(1, 0), pt(0, 1)]).unwrap();
        assert!(matches!(
            six_wedge_partition(&s),
            Err(Error::InvalidSize(_))
        ));
    }

    #[test]
    fn collinear_input_rejected() {
        let s = PointSet::new(vec![
            pt(0, 0),
            pt(1, 1),
            pt(2, 2),
            pt(5, 0),
            pt(0, 7),
            pt(9, 4),
        ])
        .unwrap();
        assert!(matches!(
            six_wedge_partition(&s),
            Err(Error::GeneralPositionViolation(_))
        ));
    }
}
