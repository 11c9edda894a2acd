//! Three-blade point sets with class-separated crossings.
//!
//! The 3m points form three slightly curved, nearly parallel "blades" A, B,
//! C arranged around a triangle. Straight edges fall into six classes by
//! the blades their endpoints touch, and the blades are placed so that a
//! crossing can only happen inside one of the groups {AA, AB}, {BB, BC},
//! {CC, CA}. Charging each crossing to its group is what keeps every
//! Hamiltonian cycle on such a set near 5n^2/18 crossings instead of the
//! unrestricted n(n-3)/2.

use crate::geom::{segments_cross, Point, PointSet, Segment};
use crate::graphs::{count_crossings, HamiltonianCycle};
use crate::numeric::{rat, ratio, Rat};
use crate::oracles::sweep_hamiltonian_cycles;
use crate::{Error, Result};

use super::{Claim, Instance, Relation, Verifier};

/// Largest m for which the generator exhaustively certifies the class
/// separation; beyond this the blades are taken on faith.
pub const MAX_SEPARATION_CHECK_M: u64 = 6;

fn blade_parameter(i: u64, m: u64) -> Rat {
    ratio(2 * (i as i64 + 1) - m as i64 - 1, m as i64)
}

/// Which blade a point index belongs to: 0 = A, 1 = B, 2 = C.
fn blade_of(idx: usize, m: usize) -> usize {
    idx / m
}

/// Crossing group of the edge {u, v}: AA and AB charge to blade A's group,
/// BB and BC to B's, CC and CA to C's.
fn edge_group(u: usize, v: usize, m: usize) -> usize {
    match (blade_of(u, m).min(blade_of(v, m)), blade_of(u, m).max(blade_of(v, m))) {
        (0, 0) | (0, 1) => 0,
        (1, 1) | (1, 2) => 1,
        (2, 2) | (0, 2) => 2,
        _ => unreachable!("blade indices are 0..3"),
    }
}

/// 3m points in three blades, a candidate heavy cycle, and the crossing
/// bound that the class separation forces.
///
/// For m <= MAX_SEPARATION_CHECK_M the generator checks every
/// vertex-disjoint pair of edges from different groups and rejects the set
/// with SeparationViolation if any such pair crosses. The candidate cycle
/// zigzags between A and B through 2m - 1 mutually crossing edges, then
/// walks C in a half-interleaved order, taking the best of the eight
/// orientation variants; for n <= 9 it is replaced by an exhaustive-sweep
/// optimum when that is strictly heavier. Its exact crossing count is
/// recorded, and for n <= 9 a sweep claim caps every Hamiltonian cycle at
/// floor(5 n^2 / 18).
pub fn blades_pointset(m: u64) -> Result<Instance> {
    if m < 2 {
        return Err(Error::InvalidSize(format!(
            "blades_pointset needs m >= 2, got {m}"
        )));
    }
    let kappa = ratio(1, 100);
    let mut points = Vec::with_capacity(3 * m as usize);
    let mut labels = Vec::with_capacity(3 * m as usize);
    for i in 0..m {
        let s = blade_parameter(i, m);
        let s2 = &s * &s;
        points.push(Point::new(-(&kappa * &s2), rat(20) + &s));
        labels.push(format!("a{}", i + 1));
    }
    for i in 0..m {
        let s = blade_parameter(i, m);
        let s2 = &s * &s;
        points.push(Point::new(
            rat(-18) + &s + &kappa * &s2,
            rat(-10) + &s - &kappa * &s2,
        ));
        labels.push(format!("b{}", i + 1));
    }
    for i in 0..m {
        let s = blade_parameter(i, m);
        let s2 = &s * &s;
        points.push(Point::new(
            rat(18) + &s + &kappa * &s2,
            rat(-10) - &s + &kappa * &s2,
        ));
        labels.push(format!("c{}", i + 1));
    }
    let s = PointSet::new(points)?.with_labels(labels)?;

    let mu = m as usize;
    let n = 3 * mu;
    if m <= MAX_SEPARATION_CHECK_M {
        certify_separation(&s, mu)?;
    }

    let (cycle, crossings) = candidate_cycle(&s, mu)?;
    let cap = 5 * (n as u64) * (n as u64) / 18;
    assert!(
        crossings <= cap,
        "candidate cycle must respect the group bound"
    );

    let mut inst = Instance::new(format!("blades-m{m}"), s);
    inst.cycles.push(cycle);
    inst.set_parameter("m", m);
    inst.set_parameter("n", n);
    inst.claims.push(
        Claim::new(
            "the candidate cycle has the recorded crossing count",
            Verifier::CycleCrossings,
            Relation::Eq,
            crossings as i64,
        )
        .on_cycle(0),
    );
    if n <= 9 {
        inst.claims.push(
            Claim::new(
                "no Hamiltonian cycle on the blades beats floor(5n^2/18) crossings",
                Verifier::HamMaxCrossings,
                Relation::Le,
                cap as i64,
            ),
        );
    }
    Ok(inst)
}

/// Visits a blade so that consecutive path edges span its two halves;
/// along a convex arc this makes every non-adjacent pair of them cross.
fn half_interleaved(mu: usize) -> Vec<usize> {
    let h = mu.div_ceil(2);
    let mut out = Vec::with_capacity(mu);
    for t in 0..h {
        out.push(t);
        if h + t < mu {
            out.push(h + t);
        }
    }
    out
}

/// The heaviest of the eight oriented zigzag candidates, upgraded to the
/// exhaustive-sweep optimum when the set is small enough to sweep.
fn candidate_cycle(s: &PointSet, mu: usize) -> Result<(HamiltonianCycle, u64)> {
    let n = 3 * mu;
    let mut best: Option<(u64, HamiltonianCycle)> = None;
    for flips in 0..8u8 {
        let mut order = Vec::with_capacity(n);
        for t in 0..mu {
            let at = if flips & 1 != 0 { mu - 1 - t } else { t };
            let bt = if flips & 2 != 0 { mu - 1 - t } else { t };
            order.push(at);
            order.push(mu + bt);
        }
        let mut walk = half_interleaved(mu);
        if flips & 4 != 0 {
            walk.reverse();
        }
        order.extend(walk.into_iter().map(|t| 2 * mu + t));
        let cycle = HamiltonianCycle::new(order, n)?;
        let count = count_crossings(s, &cycle)?;
        if best.as_ref().is_none_or(|(c, _)| count > *c) {
            best = Some((count, cycle));
        }
    }
    let (mut count, mut cycle) = best.expect("eight variants were tried");
    if n <= 9 {
        let sweep = sweep_hamiltonian_cycles(s)?;
        if sweep.max_crossings > count {
            count = sweep.max_crossings;
            cycle = sweep.max_witness;
        }
    }
    Ok((cycle, count))
}

/// Every vertex-disjoint pair of edges from different groups must avoid
/// each other; one crossing is enough to reject the whole set.
fn certify_separation(s: &PointSet, m: usize) -> Result<()> {
    let pts = s.points();
    let n = pts.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v, edge_group(u, v, m)));
        }
    }
    for (x, &(u1, v1, g1)) in edges.iter().enumerate() {
        for &(u2, v2, g2) in &edges[x + 1..] {
            if g1 == g2 || u2 == u1 || u2 == v1 || v2 == u1 || v2 == v1 {
                continue;
            }
            let e1 = Segment::new(pts[u1].clone(), pts[v1].clone());
            let e2 = Segment::new(pts[u2].clone(), pts[v2].clone());
            if segments_cross(&e1, &e2)? {
                return Err(Error::SeparationViolation(format!(
                    "edges ({u1},{v1}) and ({u2},{v2}) cross across groups {g1}/{g2}"
                )));
            }
        }
    }
    Ok(())
}
