//! The m³ crossing family of near-equilateral triangles built by three
//! nesting steps, and the left/right/bottom edge labeling of triangle pairs
//! used to extract crossing 2-path subfamilies.

use serde::{Deserialize, Serialize};

use crate::constructions::{Claim, Instance, Relation, Verifier};
use crate::geom::{cross, orientation, Orientation, Point, PointSet};
use crate::graphs::{graphs_cross, is_crossing_family, Family, FamilyKind, GeomGraph, GraphKind};
use crate::numeric::{rat, ratio};
use crate::{Error, Result};

/// Largest m accepted; m³ triangles with 3m³ vertices stay tractable for the
/// exact pairwise crossing check.
pub const MAX_GRID_M: u64 = 6;

/// Builds the m³ pairwise crossing triangles T_{i,j,k}.
///
/// Each triangle is a translate of the base (0,0), (4,τ), (2,-4) with a
/// slightly tilted top edge (τ keeps all y-coordinates distinct). The first
/// index shifts right-down so each T_i contains the left vertices of its
/// successors; the second shifts left-down at scale 1/(4m) so each T_{i,j}
/// contains the right vertices of its successors; the third shifts straight
/// up at scale 1/(16m²) so each T_{i,j,k} contains the bottom vertices of
/// its successors. Members are ordered lexicographically by (i,j,k).
pub fn crossing_triangles_grid(m: u64) -> Result<Instance> {
    if m < 1 {
        return Err(Error::InvalidSize("need m >= 1".into()));
    }
    if m > MAX_GRID_M {
        return Err(Error::ResourceLimit(format!(
            "m = {m} gives {} triangles, cap is {}",
            m * m * m,
            MAX_GRID_M.pow(3)
        )));
    }
    let mi = m as i64;
    let tau = ratio(1, 256 * mi * mi * mi);
    let base = [
        (rat(0), rat(0)),
        (rat(4), tau),
        (rat(2), rat(-4)),
    ];
    let d1 = (ratio(3, mi), ratio(-2, mi));
    let d2 = (ratio(-3, 4 * mi * mi), ratio(-2, 4 * mi * mi));
    let d3 = (rat(0), ratio(1, 8 * mi * mi * mi));

    let mut points = Vec::with_capacity(3 * (m * m * m) as usize);
    let mut members = Vec::with_capacity((m * m * m) as usize);
    for i in 0..mi {
        for j in 0..mi {
            for k in 0..mi {
                let off_x = rat(i) * &d1.0 + rat(j) * &d2.0 + rat(k) * &d3.0;
                let off_y = rat(i) * &d1.1 + rat(j) * &d2.1 + rat(k) * &d3.1;
                let verts: Vec<Point> = base
                    .iter()
                    .map(|(x, y)| Point::new(x + &off_x, y + &off_y))
                    .collect();
                points.extend(verts.iter().cloned());
                members.push(GeomGraph::triangle(
                    verts[0].clone(),
                    verts[1].clone(),
                    verts[2].clone(),
                )?);
            }
        }
    }
    let family = Family::new(FamilyKind::Crossing, members);
    assert!(
        is_crossing_family(&family)?,
        "grid triangles pairwise cross"
    );

    let n = m * m * m;
    let mut inst = Instance::new(format!("triangles-grid-m{m}"), PointSet::new(points)?);
    inst.families.push(family);
    inst.set_parameter("m", m);
    inst.set_parameter("n", n);
    inst.claims.push(
        Claim::new(
            "the m^3 grid triangles form a crossing family",
            Verifier::CrossingFamilySize,
            Relation::Eq,
            n as i64,
        )
        .on_family(0),
    );
    if n <= 12 {
        inst.claims.push(
            Claim::new(
                "no one-edge-per-triangle removal leaves more than 3m^2 mutually crossing 2-paths",
                Verifier::Best2PathRemoval,
                Relation::Le,
                (3 * m * m) as i64,
            )
            .on_family(0),
        );
    }
    Ok(inst)
}

/// Member index of T_{i,j,k} (1-based indices) in the grid family.
pub fn grid_member_index(m: u64, i: u64, j: u64, k: u64) -> usize {
    ((i - 1) * m * m + (j - 1) * m + (k - 1)) as usize
}

/// Edge of a triangle relative to its topmost vertex: `L` and `R` are the
/// edges incident to it with `L` to the left, `B` is the opposite edge.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeLabel {
    L,
    R,
    B,
}

/// Topmost vertex p and the other two ordered so u is left of v seen from p.
fn split_triangle(t: &GeomGraph) -> Result<(Point, Point, Point)> {
    let v = t.vertices();
    if orientation(&v[0], &v[1], &v[2]) == Orientation::Collinear {
        return Err(Error::DegenerateInput(
            "cannot label a collinear triangle".into(),
        ));
    }
    let mut idx = [0usize, 1, 2];
    idx.sort_by(|&a, &b| v[b].y.cmp(&v[a].y));
    let p = v[idx[0]].clone();
    let (q1, q2) = (v[idx[1]].clone(), v[idx[2]].clone());
    if cross(&p, &q1, &q2) > rat(0) {
        Ok((p, q1, q2))
    } else {
        Ok((p, q2, q1))
    }
}

/// Labels a pair of vertex-disjoint triangles: label x is in the result iff
/// removing the x edge from both leaves two crossing 2-paths. Crossing pairs
/// always receive at least one label.
pub fn label_triangle_pair(t1: &GeomGraph, t2: &GeomGraph) -> Result<Vec<EdgeLabel>> {
    for t in [t1, t2] {
        if t.kind() != GraphKind::Triangle {
            return Err(Error::KindMismatch(format!(
                "labeling needs two triangles, got {:?}",
                t.kind()
            )));
        }
        if orientation(&t.vertices()[0], &t.vertices()[1], &t.vertices()[2])
            == Orientation::Collinear
        {
            return Err(Error::DegenerateInput(
                "cannot label a collinear triangle".into(),
            ));
        }
    }
    for a in t1.vertices() {
        for b in t2.vertices() {
            if a == b {
                return Err(Error::SharedVertex(
                    "labeled triangles must be vertex-disjoint".into(),
                ));
            }
        }
    }
    let all: Vec<&Point> = t1.vertices().iter().chain(t2.vertices()).collect();
    for a in 0..all.len() {
        for b in a + 1..all.len() {
            if all[a].y == all[b].y {
                return Err(Error::DegenerateLabeling(format!(
                    "two vertices share the y-coordinate {}",
                    all[a].y
                )));
            }
        }
    }

    let (p1, u1, v1) = split_triangle(t1)?;
    let (p2, u2, v2) = split_triangle(t2)?;
    let paths = |p: &Point, u: &Point, v: &Point| -> Result<[GeomGraph; 3]> {
        Ok([
            GeomGraph::path(vec![p.clone(), v.clone(), u.clone()])?,
            GeomGraph::path(vec![v.clone(), u.clone(), p.clone()])?,
            GeomGraph::path(vec![u.clone(), p.clone(), v.clone()])?,
        ])
    };
    let paths1 = paths(&p1, &u1, &v1)?;
    let paths2 = paths(&p2, &u2, &v2)?;

    let mut labels = Vec::new();
    for (i, label) in [EdgeLabel::L, EdgeLabel::R, EdgeLabel::B].into_iter().enumerate() {
        if graphs_cross(&paths1[i], &paths2[i])? {
            labels.push(label);
        }
    }
    Ok(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::pt;
    use crate::oracles::best_2path_removal;

    fn grid_triangle(inst: &Instance, m: u64, i: u64, j: u64, k: u64) -> GeomGraph {
        inst.families[0].members[grid_member_index(m, i, j, k)].clone()
    }

    #[test]
    fn one_triangle_when_m_is_one() {
        let inst = crossing_triangles_grid(1).unwrap();
        assert_eq!(inst.families[0].members.len(), 1);
        assert_eq!(inst.points.len(), 3);
        let (best, _) = best_2path_removal(&inst.families[0]).unwrap();
        assert_eq!(best, 1);
    }

    #[test]
    fn eight_crossing_triangles_at_m_two() {
        let inst = crossing_triangles_grid(2).unwrap();
        assert_eq!(inst.name, "triangles-grid-m2");
        assert_eq!(inst.families[0].members.len(), 8);
        assert!(is_crossing_family(&inst.families[0]).unwrap());
        assert_eq!(inst.claims[1].value, 12);
    }

    #[test]
    fn grid_size_limits() {
        assert!(matches!(
            crossing_triangles_grid(0),
            Err(Error::InvalidSize(_))
        ));
        assert!(matches!(
            crossing_triangles_grid(7),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn index_classes_forbid_their_label() {
        let m = 2;
        let inst = crossing_triangles_grid(m).unwrap();
        let coords: Vec<(u64, u64, u64)> = (1..=m)
            .flat_map(|i| (1..=m).flat_map(move |j| (1..=m).map(move |k| (i, j, k))))
            .collect();
        for (a, &(i1, j1, k1)) in coords.iter().enumerate() {
            for &(i2, j2, k2) in &coords[a + 1..] {
                let t1 = grid_triangle(&inst, m, i1, j1, k1);
                let t2 = grid_triangle(&inst, m, i2, j2, k2);
                let labels = label_triangle_pair(&t1, &t2).unwrap();
                assert!(!labels.is_empty(), "crossing pairs get at least one label");
                if i1 != i2 {
                    assert!(!labels.contains(&EdgeLabel::R));
                } else if j1 != j2 {
                    assert!(!labels.contains(&EdgeLabel::B));
                } else if k1 != k2 {
                    assert!(!labels.contains(&EdgeLabel::L));
                }
            }
        }
    }

    #[test]
    fn same_column_pair_excludes_the_top_edge() {
        let m = 2;
        let inst = crossing_triangles_grid(m).unwrap();
        let t111 = grid_triangle(&inst, m, 1, 1, 1);
        let t112 = grid_triangle(&inst, m, 1, 1, 2);
        let labels = label_triangle_pair(&t111, &t112).unwrap();
        assert!(!labels.is_empty());
        assert!(!labels.contains(&EdgeLabel::L));

        let t211 = grid_triangle(&inst, m, 2, 1, 1);
        assert!(!label_triangle_pair(&t111, &t211).unwrap().is_empty());
    }

    #[test]
    fn disjoint_hulls_get_no_label() {
        let t1 = GeomGraph::triangle(pt(0, 0), pt(4, 1), pt(2, -4)).unwrap();
        let t2 = GeomGraph::triangle(pt(100, 2), pt(104, 3), pt(102, -2)).unwrap();
        assert_eq!(label_triangle_pair(&t1, &t2).unwrap(), vec![]);
    }

    #[test]
    fn labeling_error_ladder() {
        let t1 = GeomGraph::triangle(pt(0, 0), pt(4, 1), pt(2, -4)).unwrap();
        let shared = GeomGraph::triangle(pt(0, 0), pt(5, 3), pt(3, -6)).unwrap();
        assert!(matches!(
            label_triangle_pair(&t1, &shared),
            Err(Error::SharedVertex(_))
        ));

        let tied = GeomGraph::triangle(pt(10, 1), pt(14, 2), pt(12, -3)).unwrap();
        assert!(matches!(
            label_triangle_pair(&t1, &tied),
            Err(Error::DegenerateLabeling(_))
        ));

        let flat = GeomGraph::triangle(pt(0, 0), pt(1, 1), pt(2, 2)).unwrap();
        assert!(matches!(
            label_triangle_pair(&flat, &t1),
            Err(Error::DegenerateInput(_))
        ));

        let path = GeomGraph::path(vec![pt(0, 0), pt(1, 5), pt(2, 0)]).unwrap();
        assert!(matches!(
            label_triangle_pair(&path, &t1),
            Err(Error::KindMismatch(_))
        ));
    }
}
