//! Intersecting families of triangles: members are pairwise edge-disjoint
//! and every pair has a crossing pair of non-incident edges.
//!
//! Three generators live here. `intersecting_triangles` works on an
//! arbitrary point set in strict general position whose size is a multiple
//! of six: it splits the set into six equal wedges around a common apex and
//! spans triangles over every other wedge. `three_ray_pointset` places the
//! points itself, on three concurrent rays, where the same index scheme is
//! governed by a dominance law. `convex_intersecting_family` handles convex
//! position, where a quadratic-size family exists.

use super::ham_cycles::circle_point;
use super::{Claim, Instance, Relation, Verifier};
use crate::equipartition::{six_wedge_partition, Line};
use crate::geom::{is_convex_cycle, Point, PointSet};
use crate::graphs::{
    crossing_nonincident_edges, is_intersecting_family, Family, FamilyKind, GeomGraph,
};
use crate::numeric::{rat, ratio};
use crate::{Error, Result};

/// Largest `n` accepted by `three_ray_pointset`.
pub const MAX_RAY_N: u64 = 16;

/// Largest arc size accepted by `convex_intersecting_family`.
pub const MAX_CONVEX_N: usize = 12;

/// Ascending order of `idxs` by squared distance to `line`. Exact ties make
/// the construction ill-defined, so they are rejected.
fn sorted_by_line(pts: &[Point], idxs: &[usize], line: &Line) -> Result<Vec<usize>> {
    let mut out = idxs.to_vec();
    out.sort_by(|&u, &v| line.dist2(&pts[u]).cmp(&line.dist2(&pts[v])));
    for w in out.windows(2) {
        if line.dist2(&pts[w[0]]) == line.dist2(&pts[w[1]]) {
            return Err(Error::GeneralPositionViolation(
                "two wedge points are equidistant from a partition line".into(),
            ));
        }
    }
    Ok(out)
}

/// Intersecting family of `ceil(3m^2 / 4)` triangles on any `6m` points in
/// strict general position.
///
/// A six-wedge partition splits the set into wedges of exactly `m` points.
/// Taking every other wedge and ranking each one by distance from the one
/// partition line that does not bound it gives index sequences `a`, `b`,
/// `c`; the family consists of the triangles `(a_i, b_j, c_k)` whose
/// 1-based ranks satisfy `i + j + k = ceil(3(m + 1) / 2)`.
pub fn intersecting_triangles(s: &PointSet) -> Result<Instance> {
    let n = s.len();
    if n == 0 || n % 6 != 0 {
        return Err(Error::InvalidSize(format!(
            "the wedge construction needs 6m points, got {n}"
        )));
    }
    let m = n / 6;
    let w = match six_wedge_partition(s) {
        Ok(w) => w,
        Err(Error::SearchExhausted(msg)) => return Err(Error::PartitionFailure(msg)),
        Err(e) => return Err(e),
    };
    for wedge in w.wedges() {
        assert_eq!(wedge.len(), m, "six-wedge counts are exact on 6m points");
    }

    let pts = s.points();
    let lines = w.lines();
    let a = sorted_by_line(pts, &w.wedges()[0], &lines[2])?;
    let b = sorted_by_line(pts, &w.wedges()[2], &lines[1])?;
    let c = sorted_by_line(pts, &w.wedges()[4], &lines[0])?;

    let target = (3 * (m + 1)).div_ceil(2);
    let mut members = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            let k = target as i64 - i as i64 - j as i64;
            if k < 1 || k > m as i64 {
                continue;
            }
            members.push(GeomGraph::triangle(
                pts[a[i - 1]].clone(),
                pts[b[j - 1]].clone(),
                pts[c[k as usize - 1]].clone(),
            )?);
        }
    }
    let expected = (3 * m * m).div_ceil(4);
    assert_eq!(
        members.len(),
        expected,
        "equal-sum rank triples match the closed form"
    );
    let family = Family::new(FamilyKind::Intersecting, members);
    assert!(
        is_intersecting_family(&family)?,
        "wedge triangles pairwise intersect"
    );

    let mut inst = Instance::new(format!("intersecting-triangles-n{n}"), s.clone());
    inst.set_parameter("m", m);
    inst.set_parameter("n", n);
    inst.families.push(family);
    inst.claims.push(
        Claim::new(
            "triangle family size",
            Verifier::IntersectingFamilySize,
            Relation::Eq,
            expected as i64,
        )
        .on_family(0),
    );
    Ok(inst)
}

/// Checks, over all ordered rank triples on the three rays, that a pair of
/// transversal triangles is edge-disjoint and crossing exactly when the
/// triples are incomparable under componentwise order.
fn assert_dominance_law(pts: &[Point], n: usize) -> Result<()> {
    let mut triples: Vec<[usize; 3]> = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                triples.push([i, j, k]);
            }
        }
    }
    let tri = |t: &[usize; 3]| -> Result<GeomGraph> {
        GeomGraph::triangle(
            pts[t[0] - 1].clone(),
            pts[n + t[1] - 1].clone(),
            pts[2 * n + t[2] - 1].clone(),
        )
    };
    let le = |p: &[usize; 3], q: &[usize; 3]| p.iter().zip(q).all(|(x, y)| x <= y);
    for (x, t) in triples.iter().enumerate() {
        let g1 = tri(t)?;
        for u in triples.iter().skip(x + 1) {
            let comparable = le(t, u) || le(u, t);
            let shares_edge = t.iter().zip(u).filter(|(p, q)| p == q).count() >= 2;
            let compatible = !shares_edge && crossing_nonincident_edges(&g1, &tri(u)?)?;
            assert_eq!(
                compatible, !comparable,
                "triangles {t:?} and {u:?} break the dominance law"
            );
        }
    }
    Ok(())
}

/// `3n` points on three concurrent rays, with the equal-sum intersecting
/// family of `ceil(3n^2 / 4)` transversal triangles attached.
///
/// Two vertex-disjoint transversal triangles cross exactly when their rank
/// triples are incomparable, so the family realizes the largest antichain
/// of the `n x n x n` grid order; for small `n` the generator checks that
/// law exhaustively.
pub fn three_ray_pointset(n: u64) -> Result<Instance> {
    if n == 0 {
        return Err(Error::InvalidSize(
            "the three-ray construction needs n >= 1".into(),
        ));
    }
    if n > MAX_RAY_N {
        return Err(Error::ResourceLimit(format!(
            "the three-ray construction is capped at n = {MAX_RAY_N}, got {n}"
        )));
    }

    let dirs = [
        (rat(1), rat(0)),
        (ratio(-33, 65), ratio(56, 65)),
        (ratio(-33, 65), ratio(-56, 65)),
    ];
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for (ray, tag) in dirs.iter().zip(["a", "b", "c"]) {
        for i in 1..=n {
            let r = ratio(8 + i as i64, 8);
            points.push(Point::new(&r * &ray.0, r * &ray.1));
            labels.push(format!("{tag}{i}"));
        }
    }
    let set = PointSet::new(points)?.with_labels(labels)?;
    let pts = set.points();
    let nn = n as usize;

    if n <= 4 {
        assert_dominance_law(pts, nn)?;
    }

    let target = (3 * (nn + 1)).div_ceil(2);
    let mut members = Vec::new();
    for i in 1..=nn {
        for j in 1..=nn {
            let k = target as i64 - i as i64 - j as i64;
            if k < 1 || k > nn as i64 {
                continue;
            }
            members.push(GeomGraph::triangle(
                pts[i - 1].clone(),
                pts[nn + j - 1].clone(),
                pts[2 * nn + k as usize - 1].clone(),
            )?);
        }
    }
    let size = (3 * n * n).div_ceil(4);
    assert_eq!(members.len() as u64, size, "equal-sum triples match the closed form");
    let family = Family::new(FamilyKind::Intersecting, members);
    assert!(
        is_intersecting_family(&family)?,
        "equal-sum transversal triangles pairwise intersect"
    );

    let mut inst = Instance::new(format!("three-ray-n{n}"), set);
    inst.set_parameter("n", n);
    inst.families.push(family);
    inst.claims.push(
        Claim::new(
            "triangle family size",
            Verifier::IntersectingFamilySize,
            Relation::Eq,
            size as i64,
        )
        .on_family(0),
    );
    if n <= 3 {
        inst.claims.push(Claim::new(
            "no larger pairwise-crossing set of transversal triangles",
            Verifier::MaxTransversalTriangles,
            Relation::Eq,
            size as i64,
        ));
    }
    inst.claims.push(Claim::new(
        "largest antichain of the rank grid",
        Verifier::Antichain,
        Relation::Eq,
        size as i64,
    ));
    Ok(inst)
}

/// Intersecting family of `n^2` triangles on `3n` points in convex
/// position, given as three consecutive arcs of the convex cycle.
///
/// The members are the triangles `(a_i, b_j, c_{(i+j) mod n})` over all
/// 0-based `i, j`; the wrap-around third index makes them edge-disjoint.
pub fn convex_intersecting_family(s: &PointSet) -> Result<Instance> {
    let total = s.len();
    if total == 0 || total % 3 != 0 {
        return Err(Error::InvalidSize(format!(
            "the convex construction needs 3n points, got {total}"
        )));
    }
    let n = total / 3;
    if n > MAX_CONVEX_N {
        return Err(Error::ResourceLimit(format!(
            "the convex construction is capped at n = {MAX_CONVEX_N}, got {n}"
        )));
    }
    if !is_convex_cycle(s.points()) {
        return Err(Error::NotConvexPosition(
            "the points must be in convex position in the given cyclic order".into(),
        ));
    }

    let pts = s.points();
    let mut members = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            members.push(GeomGraph::triangle(
                pts[i].clone(),
                pts[n + j].clone(),
                pts[2 * n + (i + j) % n].clone(),
            )?);
        }
    }
    let family = Family::new(FamilyKind::Intersecting, members);
    assert!(
        is_intersecting_family(&family)?,
        "arc-indexed triangles pairwise intersect"
    );

    let mut inst = Instance::new(format!("convex-intersecting-n{n}"), s.clone());
    inst.set_parameter("n", n);
    inst.families.push(family);
    inst.claims.push(
        Claim::new(
            "triangle family size",
            Verifier::IntersectingFamilySize,
            Relation::Eq,
            (n * n) as i64,
        )
        .on_family(0),
    );
    Ok(inst)
}

/// `3n` points on a circle in three labeled arcs, the standard input for
/// `convex_intersecting_family`.
pub fn circle_arcs_pointset(n: u64) -> Result<PointSet> {
    if n == 0 {
        return Err(Error::InvalidSize("the arcs need n >= 1 points each".into()));
    }
    let nn = n as i64;
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for i in 0..nn {
        points.push(circle_point(&ratio(i, 2 * nn)));
        labels.push(format!("a{}", i + 1));
    }
    for i in 0..nn {
        points.push(circle_point(&rat(2 + i)));
        labels.push(format!("b{}", i + 1));
    }
    for i in 0..nn {
        points.push(circle_point(&(ratio(-3, 2) + ratio(i, 2 * nn))));
        labels.push(format!("c{}", i + 1));
    }
    PointSet::new(points)?.with_labels(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{pt, random_point_set, GpMode};

    #[test]
    fn wedge_triangles_on_random_sets() {
        for seed in [1, 2, 3] {
            let s = random_point_set(12, seed, GpMode::Strict).unwrap();
            let inst = intersecting_triangles(&s).unwrap();
            assert_eq!(inst.families[0].len(), 3);
            assert_eq!(inst.claims[0].value, 3);
        }
        let s = random_point_set(18, 5, GpMode::Strict).unwrap();
        let inst = intersecting_triangles(&s).unwrap();
        assert_eq!(inst.families[0].len(), 7);
    }

    #[test]
    fn wedge_input_errors_are_reported() {
        let s = random_point_set(10, 1, GpMode::Strict).unwrap();
        assert!(matches!(
            intersecting_triangles(&s),
            Err(Error::InvalidSize(_))
        ));

        let mut pts: Vec<Point> = (0..9)
            .map(|i| pt(3 + 7 * i, 5 + 11 * (i * i % 13)))
            .collect();
        pts.push(pt(0, 0));
        pts.push(pt(1, 1));
        pts.push(pt(2, 2));
        let s = PointSet::new(pts).unwrap();
        assert!(matches!(
            intersecting_triangles(&s),
            Err(Error::GeneralPositionViolation(_))
        ));
    }

    #[test]
    fn three_ray_counts_match_the_antichain_formula() {
        for (n, want) in [(1u64, 1usize), (2, 3), (3, 7), (4, 12)] {
            let inst = three_ray_pointset(n).unwrap();
            assert_eq!(inst.families[0].len(), want);
            assert_eq!(inst.claims[0].value, want as i64);
        }
    }

    #[test]
    fn three_ray_claims_depend_on_size() {
        let small = three_ray_pointset(3).unwrap();
        assert!(small
            .claims
            .iter()
            .any(|c| c.verifier == Verifier::MaxTransversalTriangles));
        let large = three_ray_pointset(5).unwrap();
        assert!(!large
            .claims
            .iter()
            .any(|c| c.verifier == Verifier::MaxTransversalTriangles));
        assert!(large
            .claims
            .iter()
            .any(|c| c.verifier == Verifier::Antichain));
    }

    #[test]
    fn three_ray_limits_are_enforced() {
        assert!(matches!(three_ray_pointset(0), Err(Error::InvalidSize(_))));
        assert!(matches!(
            three_ray_pointset(17),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn convex_arcs_give_a_quadratic_family() {
        for n in 2..=5u64 {
            let s = circle_arcs_pointset(n).unwrap();
            let inst = convex_intersecting_family(&s).unwrap();
            assert_eq!(inst.families[0].len(), (n * n) as usize);
        }
    }

    #[test]
    fn convex_input_errors_are_reported() {
        let s = circle_arcs_pointset(2).unwrap();
        let four = PointSet::new(s.points()[..4].to_vec()).unwrap();
        assert!(matches!(
            convex_intersecting_family(&four),
            Err(Error::InvalidSize(_))
        ));

        let dented = PointSet::new(vec![
            pt(0, 0),
            pt(4, 0),
            pt(1, 1),
            pt(4, 4),
            pt(0, 4),
            pt(-1, 2),
        ])
        .unwrap();
        assert!(matches!(
            convex_intersecting_family(&dented),
            Err(Error::NotConvexPosition(_))
        ));

        let big = circle_arcs_pointset(13).unwrap();
        assert!(matches!(
            convex_intersecting_family(&big),
            Err(Error::ResourceLimit(_))
        ));
    }
}
