//! Hamiltonian cycles that meet the crossing maximum for their parity.
//!
//! On n points in convex position a Hamiltonian cycle can cross itself at
//! most n(n-3)/2 times when n is odd and n(n-4)/2 + 1 times when n is even,
//! and both bounds are tight. The odd witness is the star polygon that
//! always jumps m positions along the circle. The even witness is grown by
//! induction from a quadrilateral: every round inserts two fresh points
//! flanking the current distinguished edge and re-routes the cycle so the
//! new middle edge again crosses every edge it is not adjacent to.

use crate::geom::{orientation, Orientation, Point, PointSet};
use crate::graphs::{
    count_crossings, count_crossings_of_edge, max_crossings_bound, HamiltonianCycle,
};
use crate::numeric::{rat, Rat};
use crate::{Error, Result};

use super::{Claim, Instance, Relation, Verifier};

/// Rational point on the unit circle with tangent half-angle `t`.
pub(crate) fn circle_point(t: &Rat) -> Point {
    let one = rat(1);
    let t2 = t * t;
    let den = &one + &t2;
    Point::new((&one - &t2) / &den, (t + t) / den)
}

fn circle_set(ts: &[Rat]) -> Result<PointSet> {
    PointSet::new(ts.iter().map(circle_point).collect())
}

/// Hamiltonian cycle with n(n-3)/2 crossings on n = 2m+1 points.
///
/// The points sit on the unit circle and the cycle visits every m-th one,
/// so each edge skips the maximum arc its parity allows. Needs m >= 2; the
/// crossing count is asserted exactly before the instance is returned.
pub fn ham_cycle_max_odd(m: u64) -> Result<Instance> {
    if m < 2 {
        return Err(Error::InvalidSize(format!(
            "ham_cycle_max_odd needs m >= 2, got {m}"
        )));
    }
    let n = 2 * m + 1;
    let mi = m as i64;
    let ts: Vec<Rat> = (0..n as i64).map(|k| rat(k - mi)).collect();
    let s = circle_set(&ts)?;
    let order: Vec<usize> = (0..n).map(|i| (i * m % n) as usize).collect();
    let cycle = HamiltonianCycle::new(order, n as usize)?;
    let crossings = count_crossings(&s, &cycle)?;
    let want = n * (n - 3) / 2;
    assert_eq!(crossings, want, "star polygon must cross n(n-3)/2 times");
    assert_eq!(want, max_crossings_bound(n)?);

    let mut inst = Instance::new(format!("ham-odd-n{n}"), s);
    inst.cycles.push(cycle);
    inst.set_parameter("m", m);
    inst.set_parameter("n", n);
    inst.claims.push(
        Claim::new(
            "the star polygon cycle attains the odd-n crossing maximum n(n-3)/2",
            Verifier::CycleCrossings,
            Relation::Eq,
            want as i64,
        )
        .on_cycle(0),
    );
    Ok(inst)
}

/// Where to insert a new point next to `from`: the circular gap on the side
/// whose walk from `from` meets point `meet` before point `avoid`. Gaps are
/// intervals of the half-angle parameter; the wrap gap between the largest
/// and smallest parameter gets `t_max + 1`, every other gap its midpoint.
fn insertion_parameter(ts: &[Rat], ang: &[usize], from: usize, meet: usize, avoid: usize) -> Rat {
    let len = ang.len();
    let pos = ang
        .iter()
        .position(|&i| i == from)
        .expect("point is in the angular order");
    let mut forward = true;
    for step in 1..len {
        let idx = ang[(pos + step) % len];
        if idx == meet {
            break;
        }
        if idx == avoid {
            forward = false;
            break;
        }
    }
    if forward {
        if pos == len - 1 {
            return &ts[from] + rat(1);
        }
        (&ts[from] + &ts[ang[pos + 1]]) / rat(2)
    } else {
        if pos == 0 {
            return &ts[ang[len - 1]] + rat(1);
        }
        (&ts[ang[pos - 1]] + &ts[from]) / rat(2)
    }
}

fn assert_distinguished(
    s: &PointSet,
    cycle: &HamiltonianCycle,
    a: usize,
    b: usize,
    far_a: usize,
    far_b: usize,
) -> Result<()> {
    let n = cycle.len() as u64;
    let hits = count_crossings_of_edge(s, cycle, a, b)?;
    assert_eq!(hits, n - 3, "distinguished edge must cross all n-3 others");
    let pa = s.point(a)?;
    let pb = s.point(b)?;
    let oa = orientation(pa, pb, s.point(far_a)?);
    let ob = orientation(pa, pb, s.point(far_b)?);
    assert!(
        oa != Orientation::Collinear && ob != Orientation::Collinear && oa != ob,
        "incident edges must leave the distinguished edge on opposite sides"
    );
    Ok(())
}

/// Hamiltonian cycle with n(n-4)/2 + 1 crossings on n = 2m points.
///
/// Starts from a quadrilateral whose single crossing already meets the
/// bound, then repeats the doubling step m-2 times: insert one point in the
/// circular gap next to each endpoint of the distinguished edge (on the
/// side of that endpoint's own incident edge), and replace the
/// distinguished edge by a three-edge detour through the new points. After
/// every round the new middle edge crosses exactly n-3 edges and its
/// incident edges leave it on opposite sides; both facts are asserted, as
/// is the final total. Needs m >= 2.
pub fn ham_cycle_max_even(m: u64) -> Result<Instance> {
    if m < 2 {
        return Err(Error::InvalidSize(format!(
            "ham_cycle_max_even needs m >= 2, got {m}"
        )));
    }
    let mut ts: Vec<Rat> = vec![rat(0), rat(1), rat(3), rat(-1)];
    let mut order: Vec<usize> = vec![0, 2, 1, 3];
    let (mut a, mut b) = (0usize, 2usize);
    let (mut far_a, mut far_b) = (3usize, 1usize);

    let mut s = circle_set(&ts)?;
    let mut cycle = HamiltonianCycle::new(order.clone(), ts.len())?;
    assert_distinguished(&s, &cycle, a, b, far_a, far_b)?;

    for _ in 2..m {
        let mut ang: Vec<usize> = (0..ts.len()).collect();
        ang.sort_by(|&i, &j| ts[i].cmp(&ts[j]));
        let tp = insertion_parameter(&ts, &ang, b, far_b, a);
        let tq = insertion_parameter(&ts, &ang, a, far_a, b);
        let p = ts.len();
        ts.push(tp);
        let q = ts.len();
        ts.push(tq);

        let ia = order.iter().position(|&x| x == a).expect("a is on the cycle");
        let len = order.len();
        if order[(ia + 1) % len] == b {
            order.splice(ia + 1..ia + 1, [p, q]);
        } else {
            assert_eq!(order[(ia + len - 1) % len], b, "distinguished edge on cycle");
            order.splice(ia..ia, [q, p]);
        }

        far_a = a;
        far_b = b;
        a = p;
        b = q;
        s = circle_set(&ts)?;
        cycle = HamiltonianCycle::new(order.clone(), ts.len())?;
        assert_distinguished(&s, &cycle, a, b, far_a, far_b)?;
    }

    let n = 2 * m;
    assert_eq!(ts.len() as u64, n);
    let crossings = count_crossings(&s, &cycle)?;
    let want = n * (n - 4) / 2 + 1;
    assert_eq!(crossings, want, "even cycle must cross n(n-4)/2 + 1 times");
    assert_eq!(want, max_crossings_bound(n)?);

    let mut inst = Instance::new(format!("ham-even-n{n}"), s);
    inst.cycles.push(cycle);
    inst.set_parameter("m", m);
    inst.set_parameter("n", n);
    inst.claims.push(
        Claim::new(
            "the doubled cycle attains the even-n crossing maximum n(n-4)/2 + 1",
            Verifier::CycleCrossings,
            Relation::Eq,
            want as i64,
        )
        .on_cycle(0),
    );
    inst.claims.push(
        Claim::new(
            "the distinguished middle edge crosses every edge it is not adjacent to",
            Verifier::DistinguishedEdgeCrossings,
            Relation::Eq,
            (n - 3) as i64,
        )
        .on_cycle(0)
        .on_edge(a, b),
    );
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::count_avoiding_pairs;

    #[test]
    fn odd_counts_match_the_closed_form() {
        for (m, want) in [(2u64, 5u64), (3, 14), (4, 27)] {
            let inst = ham_cycle_max_odd(m).unwrap();
            let n = 2 * m + 1;
            assert_eq!(inst.points.len() as u64, n);
            assert_eq!(inst.claims[0].value, want as i64);
            let got = count_crossings(&inst.points, &inst.cycles[0]).unwrap();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn odd_cycle_has_no_avoiding_slack() {
        let inst = ham_cycle_max_odd(3).unwrap();
        let avoiding = count_avoiding_pairs(&inst.points, &inst.cycles[0]).unwrap();
        assert_eq!(avoiding, 0, "every nonadjacent pair of edges must cross");
    }

    #[test]
    fn even_counts_match_the_closed_form() {
        for (m, want) in [(2u64, 1u64), (3, 7), (4, 17), (5, 31)] {
            let inst = ham_cycle_max_even(m).unwrap();
            assert_eq!(inst.points.len() as u64, 2 * m);
            assert_eq!(inst.claims[0].value, want as i64);
            let got = count_crossings(&inst.points, &inst.cycles[0]).unwrap();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn even_distinguished_edge_is_recorded() {
        let inst = ham_cycle_max_even(4).unwrap();
        let claim = &inst.claims[1];
        assert_eq!(claim.value, 5);
        let [i, j] = claim.edge.expect("edge endpoints recorded");
        let got = count_crossings_of_edge(&inst.points, &inst.cycles[0], i, j).unwrap();
        assert_eq!(got, 5);
    }

    #[test]
    fn tiny_sizes_are_rejected() {
        assert!(matches!(ham_cycle_max_odd(1), Err(Error::InvalidSize(_))));
        assert!(matches!(ham_cycle_max_even(0), Err(Error::InvalidSize(_))));
    }
}
