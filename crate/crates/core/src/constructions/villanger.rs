//! Long-matching configurations whose longest matching is crossing-free.
//!
//! Generically the longest perfect matching between two point classes is
//! forced to cross itself; this module builds the classical
//! counterexample family. The left endpoints sit in a tight cluster, the
//! right endpoints far away on a near-vertical wall, and the identity
//! matching a_i -> b_i fans out with strictly increasing slopes. Distances
//! are tuned so that for every focus pair a_p, a_q the difference
//! d(., a_p) - d(., a_q) strictly drops as the wall point climbs: swapping
//! any two matched partners can then only shorten the matching, so the
//! crossing-free identity matching is the unique longest one.
//!
//! The drop is a sum-of-square-roots inequality, so the generator does not
//! trust the construction: it certifies every instance of the inequality
//! with interval arithmetic at a configurable margin before returning.

use std::cmp::Ordering;

use num_traits::Signed;

use crate::geom::{dist2, segments_cross, Point, PointSet, Segment};
use crate::graphs::{Family, FamilyKind, GeomGraph};
use crate::numeric::{certify_sqrt_sum_gap, compare_sqrt_sums, format_rat, rat, ratio, Rat};
use crate::{Error, Result};

use super::{Claim, Instance, Relation, Verifier};

/// Largest supported class size; the verifying oracle enumerates all m!
/// bipartite matchings, so the generator refuses anything bigger.
pub const MAX_MATCHING_M: u64 = 7;

/// Horizontal distance from the left cluster to the right wall.
const WALL: i64 = 1 << 50;
/// Horizontal step between consecutive left endpoints.
const STEP: i64 = 1 << 20;

/// Slope of the i-th matched segment (1-based): 0 for the first, then a
/// geometric ramp 3/4^(m-i+1) so each slope more than doubles the angle of
/// the one before. The wide angular gaps are what give the certified
/// inequalities room.
fn slope(i: u64, m: u64) -> Rat {
    if i <= 1 {
        rat(0)
    } else {
        ratio(3, 4i64.pow((m - i + 1) as u32))
    }
}

/// How a transposition of two matched partners relates to the length order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TranspositionClass {
    /// The swapped-in partner of the left point crosses the focus gap:
    /// sigma_i < j <= sigma_j in 1-based terms.
    TypeI,
    /// Both swapped values sit right of the left index: i < sigma_i < sigma_j.
    TypeII,
    /// Neither certified pattern applies; the swap need not shorten.
    NotReducing,
}

/// 2m labeled points whose longest perfect a-b matching is the
/// crossing-free identity matching.
///
/// `margin` is the certified slack demanded from every supporting
/// inequality (default 1/1000). The generator verifies three facts
/// exactly before returning: the identity matching has no crossings, every
/// cross-class distance exceeds every intra-class distance, and each
/// hyperbola inequality holds with at least the requested margin.
pub fn villanger_pointset(m: u64, margin: Option<Rat>) -> Result<Instance> {
    if m < 2 {
        return Err(Error::InvalidSize(format!(
            "villanger_pointset needs m >= 2, got {m}"
        )));
    }
    if m > MAX_MATCHING_M {
        return Err(Error::ResourceLimit(format!(
            "villanger_pointset verifies via an m! sweep; m = {m} exceeds {MAX_MATCHING_M}"
        )));
    }
    let margin = margin.unwrap_or_else(|| ratio(1, 1000));
    if margin.is_negative() {
        return Err(Error::DegenerateInput(
            "certification margin must be nonnegative".into(),
        ));
    }

    let mu = m as usize;
    let mut a = Vec::with_capacity(mu);
    let (mut x, mut y) = (rat(0), rat(0));
    for i in 1..=m {
        a.push(Point::new(x.clone(), y.clone()));
        if i < m {
            // Slope of the cluster step from a_i to a_{i+1}: strictly above
            // the i-th segment slope (keeps the fan crossing-free) and
            // strictly below the half-angle of the next slope (keeps the
            // distance differences dropping along the wall).
            let t_next = slope(i + 1, m);
            let half = (rat(2) * &t_next) / (rat(4) + &t_next * &t_next);
            let rho = (slope(i, m) + half) / rat(2);
            x += rat(STEP);
            y += rat(STEP) * rho;
        }
    }
    let mut b = Vec::with_capacity(mu);
    for i in 1..=m {
        let run = rat(WALL + i as i64) - &a[i as usize - 1].x;
        b.push(Point::new(
            &a[i as usize - 1].x + &run,
            &a[i as usize - 1].y + run * slope(i, m),
        ));
    }

    for p in 0..mu {
        for q in p + 1..mu {
            let sp = Segment::new(a[p].clone(), b[p].clone());
            let sq = Segment::new(a[q].clone(), b[q].clone());
            assert!(
                !segments_cross(&sp, &sq)?,
                "identity matching must be crossing-free"
            );
        }
    }

    let mut max_intra = rat(0);
    for side in [&a, &b] {
        for p in 0..mu {
            for q in p + 1..mu {
                max_intra = max_intra.max(dist2(&side[p], &side[q]));
            }
        }
    }
    for ap in &a {
        for bq in &b {
            assert!(
                dist2(ap, bq) > max_intra,
                "cross-class distances must dominate intra-class distances"
            );
        }
    }

    for s in 2..=mu {
        for q in 2..=s {
            for p in 1..q {
                for r in 1..s {
                    let smaller = [dist2(&b[s - 1], &a[p - 1]), dist2(&b[r - 1], &a[q - 1])];
                    let larger = [dist2(&b[s - 1], &a[q - 1]), dist2(&b[r - 1], &a[p - 1])];
                    certify_sqrt_sum_gap(&smaller, &larger, &margin).map_err(|e| match e {
                        Error::PrecisionExhausted(msg) => Error::PrecisionExhausted(format!(
                            "wall point {s} against foci ({p},{q}) and wall point {r}: {msg}"
                        )),
                        other => other,
                    })?;
                }
            }
        }
    }

    let mut points = a.clone();
    points.extend(b.iter().cloned());
    let labels = (1..=m)
        .map(|i| format!("a{i}"))
        .chain((1..=m).map(|i| format!("b{i}")))
        .collect();
    let set = PointSet::new(points)?.with_labels(labels)?;

    let members = (0..mu)
        .map(|i| GeomGraph::matching_edge(a[i].clone(), b[i].clone()))
        .collect::<Result<Vec<_>>>()?;
    let family = Family::new(FamilyKind::Crossing, members);

    let mut inst = Instance::new(format!("villanger-m{m}"), set);
    inst.families.push(family);
    inst.set_parameter("m", m);
    inst.set_parameter("n", 2 * m);
    inst.set_parameter("margin", format_rat(&margin));
    inst.claims.push(
        Claim::new(
            "the longest perfect matching is the attached identity matching and it has zero crossings",
            Verifier::LongestMatching,
            Relation::Eq,
            0,
        )
        .on_family(0),
    );
    Ok(inst)
}

/// Classifies the swap of `sigma[i]` and `sigma[j]` on a long-matching
/// instance and verifies the certified shortening when it applies.
///
/// `sigma` is the current assignment (0-based: left point `t` is matched to
/// right point `sigma[t]`). With 1-based values k = sigma_i, l = sigma_j,
/// the swap is TypeI when k < j <= l and TypeII when i < k < l; in both
/// cases the swapped matching is strictly shorter, which is re-verified
/// with exact square-root comparison before the class is returned.
pub fn transposition_reduces(
    inst: &Instance,
    sigma: &[usize],
    i: usize,
    j: usize,
) -> Result<TranspositionClass> {
    let m = sigma.len();
    if inst.points.len() != 2 * m {
        return Err(Error::DegenerateInput(format!(
            "sigma has {m} entries but the instance has {} points",
            inst.points.len()
        )));
    }
    let labels = inst.points.labels().ok_or_else(|| {
        Error::DegenerateInput("instance has no point labels; expected a1..am, b1..bm".into())
    })?;
    if i >= j || j >= m {
        return Err(Error::IndexOutOfRange(format!(
            "need positions i < j < {m}, got ({i}, {j})"
        )));
    }
    let mut seen = vec![false; m];
    for &v in sigma {
        if v >= m || seen[v] {
            return Err(Error::DegenerateInput(
                "sigma is not a permutation of 0..m".into(),
            ));
        }
        seen[v] = true;
    }
    let lookup = |name: String| -> Result<&Point> {
        let idx = labels
            .iter()
            .position(|l| *l == name)
            .ok_or_else(|| Error::DegenerateInput(format!("missing labeled point {name}")))?;
        inst.points.point(idx)
    };

    let k = sigma[i];
    let l = sigma[j];
    let class = if k + 1 < j + 1 && j + 1 <= l + 1 {
        TranspositionClass::TypeI
    } else if i + 1 < k + 1 && k + 1 < l + 1 {
        TranspositionClass::TypeII
    } else {
        TranspositionClass::NotReducing
    };
    if class == TranspositionClass::NotReducing {
        return Ok(class);
    }

    let ai = lookup(format!("a{}", i + 1))?;
    let aj = lookup(format!("a{}", j + 1))?;
    let bk = lookup(format!("b{}", k + 1))?;
    let bl = lookup(format!("b{}", l + 1))?;
    let swapped = [dist2(ai, bl), dist2(aj, bk)];
    let current = [dist2(ai, bk), dist2(aj, bl)];
    match compare_sqrt_sums(&swapped, &current)? {
        Ordering::Less => Ok(class),
        Ordering::Equal => Err(Error::TieUnresolved(
            "swap leaves the matching length exactly unchanged".into(),
        )),
        Ordering::Greater => {
            panic!("classified transposition failed to shorten; not a long-matching instance")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{longest_perfect_matching_bruteforce, MatchingMode};

    #[test]
    fn identity_is_the_longest_matching_and_has_no_crossings() {
        for m in [2usize, 3, 4] {
            let inst = villanger_pointset(m as u64, None).unwrap();
            let best =
                longest_perfect_matching_bruteforce(&inst.points, MatchingMode::BipartiteAB)
                    .unwrap();
            let identity: Vec<(usize, usize)> = (0..m).map(|i| (i, m + i)).collect();
            assert_eq!(best.pairs, identity);
            assert!(best.is_crossing_free);
        }
    }

    #[test]
    fn size_limits_are_enforced() {
        assert!(matches!(
            villanger_pointset(1, None),
            Err(Error::InvalidSize(_))
        ));
        assert!(matches!(
            villanger_pointset(8, None),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn absurd_margin_cannot_be_certified() {
        assert!(matches!(
            villanger_pointset(3, Some(rat(1_000_000))),
            Err(Error::PrecisionExhausted(_))
        ));
    }

    #[test]
    fn every_swap_away_from_identity_reduces() {
        let inst = villanger_pointset(3, None).unwrap();
        let identity = [0usize, 1, 2];
        for i in 0..3 {
            for j in i + 1..3 {
                let class = transposition_reduces(&inst, &identity, i, j).unwrap();
                assert_eq!(class, TranspositionClass::TypeI);
            }
        }
    }

    #[test]
    fn exhaustive_m3_classification_is_consistent() {
        let inst = villanger_pointset(3, None).unwrap();
        let perms = [
            [0usize, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for sigma in perms {
            for i in 0..3 {
                for j in i + 1..3 {
                    // Classification must never panic or mis-verify; the
                    // shortening check runs inside for TypeI and TypeII.
                    let class = transposition_reduces(&inst, &sigma, i, j).unwrap();
                    let k = sigma[i] + 1;
                    let l = sigma[j] + 1;
                    match class {
                        TranspositionClass::TypeI => assert!(k < j + 1 && j + 1 <= l),
                        TranspositionClass::TypeII => assert!(i + 1 < k && k < l),
                        TranspositionClass::NotReducing => {
                            assert!(!(k < j + 1 && j + 1 <= l) && !(i + 1 < k && k < l))
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sorted_pairs_on_a_reversed_permutation_do_not_reduce() {
        let inst = villanger_pointset(3, None).unwrap();
        // (2,1,3) in 1-based terms: positions 0 and 1 hold a descending
        // pair, so the swap back toward identity lengthens, not shortens.
        let sigma = [1usize, 0, 2];
        let class = transposition_reduces(&inst, &sigma, 0, 1).unwrap();
        assert_eq!(class, TranspositionClass::NotReducing);
    }

    #[test]
    fn placement_route_to_a_target_permutation_classifies_every_step() {
        let inst = villanger_pointset(3, None).unwrap();
        // Reaching (3,1,2) from the identity: swap values 1,2 then 2,3;
        // both steps must certify as reducing.
        let first = transposition_reduces(&inst, &[0, 1, 2], 0, 1).unwrap();
        let second = transposition_reduces(&inst, &[1, 0, 2], 0, 2).unwrap();
        assert_eq!(first, TranspositionClass::TypeI);
        assert_eq!(second, TranspositionClass::TypeI);
    }

    #[test]
    fn bad_indices_and_bad_sigma_are_rejected() {
        let inst = villanger_pointset(2, None).unwrap();
        assert!(matches!(
            transposition_reduces(&inst, &[0, 1], 1, 1),
            Err(Error::IndexOutOfRange(_))
        ));
        assert!(matches!(
            transposition_reduces(&inst, &[0, 1], 0, 2),
            Err(Error::IndexOutOfRange(_))
        ));
        assert!(matches!(
            transposition_reduces(&inst, &[0, 0], 0, 1),
            Err(Error::DegenerateInput(_))
        ));
    }
}
