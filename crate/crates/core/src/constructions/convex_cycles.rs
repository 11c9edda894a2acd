//! Pairwise-crossing convex cycles over line-separated point classes.
//!
//! Take k >= 4 classes of s points each, every class cut off from the rest
//! by its own line and every class transversal in convex position. Sorting
//! each class by distance to its line and threading the i-th cycle through
//! the i-th nearest point of every class (with the first class walked in
//! reverse) yields s vertex-disjoint convex k-cycles that pairwise cross.

use num_traits::Zero;

use crate::equipartition::Line;
use crate::geom::{is_convex_cycle, Point, PointSet};
use crate::graphs::{is_crossing_family, Family, FamilyKind, GeomGraph};
use crate::numeric::{rat, ratio, Rat};
use crate::{Error, Result};

use super::{Claim, Instance, Relation, Verifier};

/// Most transversals the convexity sweep will enumerate (s^k).
const MAX_TRANSVERSALS: u64 = 200_000;

/// Point classes with their separating lines.
///
/// `parts[i]` indexes into `points`, and `lines[i]` must leave part i
/// strictly on one side and every other point strictly on the other.
#[derive(Clone, Debug)]
pub struct SeparatedSets {
    pub points: PointSet,
    pub parts: Vec<Vec<usize>>,
    pub lines: Vec<Line>,
}

/// A family of s pairwise-crossing convex k-cycles on a separated family.
///
/// Verifies the separation certificate and the convexity of all s^k
/// transversals before building anything, then orders each class by exact
/// distance to its line and assembles the cycles. The family is checked to
/// be pairwise crossing and the size claim is attached.
pub fn convex_cycles_family(sets: &SeparatedSets, k: usize) -> Result<Instance> {
    if k < 4 {
        return Err(Error::InvalidSize(format!(
            "convex_cycles_family needs k >= 4 classes, got {k}"
        )));
    }
    if sets.parts.len() != k || sets.lines.len() != k {
        return Err(Error::InvalidSize(format!(
            "expected {k} parts and {k} lines, got {} and {}",
            sets.parts.len(),
            sets.lines.len()
        )));
    }
    let s = sets.parts[0].len();
    if s == 0 || sets.parts.iter().any(|p| p.len() != s) {
        return Err(Error::InvalidSize(
            "all parts must share one positive size".into(),
        ));
    }
    let pts = sets.points.points();
    let total: usize = sets.parts.iter().map(|p| p.len()).sum();
    if total != pts.len() {
        return Err(Error::InvalidSize(format!(
            "parts cover {total} indices but the set has {} points",
            pts.len()
        )));
    }

    for (i, part) in sets.parts.iter().enumerate() {
        let line = &sets.lines[i];
        let inside = line.eval(&pts[part[0]]);
        if inside.is_zero() {
            return Err(Error::SeparationViolation(format!(
                "point {} lies on its own class line {i}",
                part[0]
            )));
        }
        let positive = inside > rat(0);
        for (j, p) in pts.iter().enumerate() {
            let v = line.eval(p);
            if v.is_zero() {
                return Err(Error::SeparationViolation(format!(
                    "point {j} lies on class line {i}"
                )));
            }
            let same = (v > rat(0)) == positive;
            if part.contains(&j) != same {
                return Err(Error::SeparationViolation(format!(
                    "class line {i} fails to separate point {j}"
                )));
            }
        }
    }

    let count = (s as u64).checked_pow(k as u32).unwrap_or(u64::MAX);
    if count > MAX_TRANSVERSALS {
        return Err(Error::ResourceLimit(format!(
            "{count} transversals exceed the convexity sweep cap {MAX_TRANSVERSALS}"
        )));
    }
    let mut choice = vec![0usize; k];
    loop {
        let transversal: Vec<Point> = (0..k)
            .map(|i| pts[sets.parts[i][choice[i]]].clone())
            .collect();
        if !is_convex_cycle(&transversal) {
            return Err(Error::TransversalNotConvex(format!(
                "transversal {choice:?} is not a convex {k}-gon"
            )));
        }
        let mut carry = k;
        for d in (0..k).rev() {
            choice[d] += 1;
            if choice[d] < s {
                carry = d;
                break;
            }
            choice[d] = 0;
        }
        if carry == k {
            break;
        }
    }

    let mut ordered = Vec::with_capacity(k);
    for (i, part) in sets.parts.iter().enumerate() {
        let line = &sets.lines[i];
        let mut by_dist: Vec<usize> = part.clone();
        by_dist.sort_by(|&u, &v| line.dist2(&pts[u]).cmp(&line.dist2(&pts[v])));
        for w in by_dist.windows(2) {
            if line.dist2(&pts[w[0]]) == line.dist2(&pts[w[1]]) {
                return Err(Error::TieUnresolved(format!(
                    "points {} and {} are equidistant from class line {i}",
                    w[0], w[1]
                )));
            }
        }
        ordered.push(by_dist);
    }

    let mut members = Vec::with_capacity(s);
    for i in 1..=s {
        let mut vertices = Vec::with_capacity(k);
        vertices.push(pts[ordered[0][s - i]].clone());
        for part in ordered.iter().skip(1) {
            vertices.push(pts[part[i - 1]].clone());
        }
        members.push(GeomGraph::cycle(vertices)?);
    }
    let family = Family::new(FamilyKind::Crossing, members);
    assert!(
        is_crossing_family(&family)?,
        "separated convex cycles must pairwise cross"
    );

    let mut inst = Instance::new(format!("convex-cycles-k{k}-s{s}"), sets.points.clone());
    inst.families.push(family);
    inst.set_parameter("k", k);
    inst.set_parameter("s", s);
    inst.set_parameter("n", total);
    inst.claims.push(
        Claim::new(
            "the s distance-threaded convex cycles pairwise cross",
            Verifier::CrossingFamilySize,
            Relation::Eq,
            s as i64,
        )
        .on_family(0),
    );
    Ok(inst)
}

/// Ready-made separated classes on k rays from the origin.
///
/// Each class marches outward along its own ray with radial steps of R/64,
/// and its line sits at three quarters of the base radius. Exact direction
/// tables exist for k = 4 and k = 5; other k are rejected.
pub fn separated_sets_on_rays(k: usize, s: usize) -> Result<SeparatedSets> {
    if s == 0 {
        return Err(Error::InvalidSize("need at least one point per class".into()));
    }
    let dirs: Vec<(Rat, Rat)> = match k {
        4 => vec![
            (rat(1), rat(0)),
            (rat(0), rat(1)),
            (rat(-1), rat(0)),
            (rat(0), rat(-1)),
        ],
        5 => vec![
            (rat(1), rat(0)),
            (rat(0), rat(1)),
            (ratio(-4, 5), ratio(3, 5)),
            (ratio(-4, 5), ratio(-3, 5)),
            (rat(0), rat(-1)),
        ],
        _ => {
            return Err(Error::InvalidSize(format!(
                "ray tables cover k = 4 and k = 5, got {k}"
            )))
        }
    };
    let radius = rat(100);
    let mut points = Vec::with_capacity(k * s);
    let mut parts = Vec::with_capacity(k);
    let mut lines = Vec::with_capacity(k);
    for (dx, dy) in &dirs {
        let mut part = Vec::with_capacity(s);
        for step in 0..s {
            let r = &radius * (rat(1) + ratio(step as i64, 64));
            part.push(points.len());
            points.push(Point::new(&r * dx, &r * dy));
        }
        parts.push(part);
        // The class line <dir, x> = 3R/4, i.e. dx*x + dy*y = 75.
        lines.push(Line::new(dx.clone(), dy.clone(), rat(75))?);
    }
    Ok(SeparatedSets {
        points: PointSet::new(points)?,
        parts,
        lines,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ray_classes_give_pairwise_crossing_cycles() {
        for (k, s) in [(4usize, 2usize), (4, 3), (5, 2), (5, 3)] {
            let sets = separated_sets_on_rays(k, s).unwrap();
            let inst = convex_cycles_family(&sets, k).unwrap();
            assert_eq!(inst.families[0].len(), s);
            assert_eq!(inst.claims[0].value, s as i64);
            assert!(is_crossing_family(&inst.families[0]).unwrap());
            assert_eq!(inst.name, format!("convex-cycles-k{k}-s{s}"));
        }
    }

    #[test]
    fn unsupported_shapes_are_rejected() {
        assert!(matches!(
            separated_sets_on_rays(9, 2),
            Err(Error::InvalidSize(_))
        ));
        let sets = separated_sets_on_rays(4, 2).unwrap();
        assert!(matches!(
            convex_cycles_family(&sets, 5),
            Err(Error::InvalidSize(_))
        ));
    }

    #[test]
    fn broken_separation_is_reported() {
        let mut sets = separated_sets_on_rays(4, 2).unwrap();
        // A vertical line through the origin leaves the +y class point on
        // the line itself.
        sets.lines[0] = Line::new(rat(1), rat(0), rat(0)).unwrap();
        assert!(matches!(
            convex_cycles_family(&sets, 4),
            Err(Error::SeparationViolation(_))
        ));
    }

    #[test]
    fn nonconvex_transversal_is_reported() {
        // Four well-separated classes strung along a shallow zigzag: each
        // class is extreme in some direction, yet the nearest transversal
        // bends the wrong way at its second vertex.
        let coords: [(i64, i64); 8] = [
            (0, 0),
            (1, 0),
            (10, 5),
            (11, 5),
            (20, -5),
            (21, -5),
            (30, 0),
            (31, 0),
        ];
        let points: Vec<Point> = coords
            .iter()
            .map(|&(x, y)| Point::new(rat(x), rat(y)))
            .collect();
        let sets = SeparatedSets {
            points: PointSet::new(points).unwrap(),
            parts: vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7]],
            lines: vec![
                Line::new(rat(1), rat(0), rat(5)).unwrap(),
                Line::new(rat(0), rat(1), rat(3)).unwrap(),
                Line::new(rat(0), rat(1), rat(-3)).unwrap(),
                Line::new(rat(1), rat(0), rat(25)).unwrap(),
            ],
        };
        assert!(matches!(
            convex_cycles_family(&sets, 4),
            Err(Error::TransversalNotConvex(_))
        ));
    }

    #[test]
    fn distance_ties_are_refused() {
        let coords: [(i64, i64); 8] = [
            (80, 10),
            (80, -10),
            (0, 100),
            (0, 101),
            (-100, 0),
            (-101, 0),
            (0, -100),
            (0, -101),
        ];
        let points: Vec<Point> = coords
            .iter()
            .map(|&(x, y)| Point::new(rat(x), rat(y)))
            .collect();
        let sets = SeparatedSets {
            points: PointSet::new(points).unwrap(),
            parts: vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7]],
            lines: vec![
                Line::new(rat(1), rat(0), rat(50)).unwrap(),
                Line::new(rat(0), rat(1), rat(50)).unwrap(),
                Line::new(rat(1), rat(0), rat(-50)).unwrap(),
                Line::new(rat(0), rat(1), rat(-50)).unwrap(),
            ],
        };
        assert!(matches!(
            convex_cycles_family(&sets, 4),
            Err(Error::TieUnresolved(_))
        ));
    }
}
