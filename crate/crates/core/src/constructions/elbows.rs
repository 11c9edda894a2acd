//! Crossing families of orthogonal elbows: the sweep construction that
//! extracts ⌊n/4⌋ pairwise crossing elbows from any point set in orthogonal
//! general position, and the three-group point set on which no elbow
//! family beats n/3.

use crate::constructions::{Claim, Instance, Relation, Verifier};
use crate::geom::{check_general_position, GpMode, Point, PointSet};
use crate::graphs::{is_crossing_family, Family, FamilyKind, GeomGraph};
use crate::numeric::{rat, ratio};
use crate::{Error, Result};

/// Builds a crossing family of ⌊n/4⌋ vertex-disjoint elbows.
///
/// A horizontal line `L` is placed with 2⌊n/4⌋ points below it; a vertical
/// sweep from the right stops as soon as one quadrant to its right holds
/// ⌊n/4⌋ points (set B). Set A is the ⌊n/4⌋ rightmost points on the other
/// side of `L` left of the sweep line. Elbow i rises (or drops) from a_i to
/// the height of b_i and runs right to b_i; anchors are ordered so every
/// pair crosses.
pub fn elbow_family(s: &PointSet) -> Result<Instance> {
    let n = s.len();
    if n < 4 {
        return Err(Error::InvalidSize(format!(
            "elbow family needs at least 4 points, got {n}"
        )));
    }
    if !check_general_position(s, GpMode::Orthogonal) {
        return Err(Error::GeneralPositionViolation(
            "elbow family needs orthogonal general position".into(),
        ));
    }
    let m = n / 4;
    let pts = s.points();

    let mut ys: Vec<&crate::numeric::Rat> = pts.iter().map(|p| &p.y).collect();
    ys.sort();
    let l_y = (ys[2 * m - 1] + ys[2 * m]) / rat(2);

    let mut by_x: Vec<usize> = (0..n).collect();
    by_x.sort_by(|&i, &j| pts[j].x.cmp(&pts[i].x));

    let mut above: Vec<usize> = Vec::new();
    let mut below: Vec<usize> = Vec::new();
    let mut stop = None;
    for (t, &i) in by_x.iter().enumerate() {
        if pts[i].y > l_y {
            above.push(i);
        } else {
            below.push(i);
        }
        if above.len() == m {
            stop = Some((t, true));
            break;
        }
        if below.len() == m {
            stop = Some((t, false));
            break;
        }
    }
    let (t_stop, b_is_above) = stop.expect("one right quadrant reaches m within 2m-1 steps");

    let mut b_set = if b_is_above { above } else { below };
    let a_set: Vec<usize> = by_x[t_stop + 1..]
        .iter()
        .copied()
        .filter(|&i| {
            if b_is_above {
                pts[i].y < l_y
            } else {
                pts[i].y > l_y
            }
        })
        .take(m)
        .collect();
    assert_eq!(a_set.len(), m, "the far side keeps at least m points left of the sweep");

    if b_is_above {
        b_set.sort_by(|&i, &j| pts[j].y.cmp(&pts[i].y));
    } else {
        b_set.sort_by(|&i, &j| pts[i].y.cmp(&pts[j].y));
    }

    let members = a_set
        .iter()
        .zip(&b_set)
        .map(|(&ai, &bi)| GeomGraph::elbow_graph(pts[ai].clone(), pts[bi].clone()))
        .collect::<Result<Vec<_>>>()?;
    let family = Family::new(FamilyKind::Crossing, members);
    assert!(is_crossing_family(&family)?, "constructed elbows pairwise cross");

    let mut inst = Instance::new(format!("elbow-family-n{n}"), s.clone());
    inst.families.push(family);
    inst.set_parameter("n", n);
    inst.set_parameter("m", m);
    inst.claims.push(
        Claim::new(
            "the constructed elbows form a crossing family of size floor(n/4)",
            Verifier::CrossingFamilySize,
            Relation::Eq,
            m as i64,
        )
        .on_family(0),
    );
    Ok(inst)
}

/// 3m points in three descending arcs whose x- and y-ranks agree as groups
/// (A left of and below B, B left of and below C). Any crossing elbow
/// family on this set has at most m members: elbows between A and B never
/// cross elbows between B and C, and an elbow inside one group never
/// crosses an elbow joining the other two, so every crossing family pins a
/// point of one group per member.
pub fn elbow_hard_pointset(m: u64) -> Result<Instance> {
    if m < 1 {
        return Err(Error::InvalidSize("need m >= 1".into()));
    }
    let mi = m as i64;
    // Per-group curvature with distinct denominators so no three points,
    // within or across groups, are collinear. The quadratic term stays
    // below 1/2, which keeps the groups in disjoint coordinate bands.
    let group = |x0: i64, y0: i64, den: i64| -> Vec<Point> {
        (0..mi)
            .map(|i| {
                let sag = ratio(i * (i - 1), den);
                Point::new(rat(x0 + i), rat(y0 - i) - sag)
            })
            .collect()
    };
    let den = 2 * mi * mi;
    let a = group(0, 0, den);
    let b = group(2 * mi, mi + 1, den + 1);
    let c = group(4 * mi + 3, 2 * (mi + 1) + 1, den + 3);

    let mut points = Vec::with_capacity(3 * m as usize);
    let mut labels = Vec::with_capacity(3 * m as usize);
    for (tag, grp) in [("a", a), ("b", b), ("c", c)] {
        for (i, p) in grp.into_iter().enumerate() {
            points.push(p);
            labels.push(format!("{tag}{}", i + 1));
        }
    }
    let s = PointSet::new(points)?.with_labels(labels)?;
    assert!(check_general_position(&s, GpMode::Orthogonal));

    let mut inst = Instance::new(format!("elbow-hard-m{m}"), s);
    inst.set_parameter("m", m);
    inst.set_parameter("n", 3 * m);
    if m <= 2 {
        inst.claims.push(Claim::new(
            "the largest crossing elbow family on this set has exactly m members",
            Verifier::MaxElbowFamily,
            Relation::Eq,
            m as i64,
        ));
    } else if m == 3 {
        inst.claims.push(Claim::new(
            "no crossing elbow family on this set exceeds m members",
            Verifier::MaxElbowFamily,
            Relation::Le,
            m as i64,
        ));
    }
    Ok(inst)
}

/// Every elbow over a point set: both bends for every ordered point pair.
pub fn all_elbows(s: &PointSet) -> Result<Vec<GeomGraph>> {
    let pts = s.points();
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in 0..pts.len() {
            if i == j {
                continue;
            }
            out.push(GeomGraph::elbow_graph(pts[i].clone(), pts[j].clone())?);
        }
    }
    Ok(out)
}
