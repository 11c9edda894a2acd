//! Independent brute-force oracles.
//!
//! Each oracle establishes ground truth at desk scale by exhaustive search
//! over the full candidate space, using only the exact predicates of
//! [`crate::geom`] and [`crate::graphs`]. Constructions are tested against
//! these oracles, never against themselves.

use std::cmp::Ordering;

use crate::geom::{dist2, segments_cross, PointSet, Segment};
use crate::graphs::{
    crossing_nonincident_edges, graphs_cross, GeomGraph, GraphKind, HamiltonianCycle,
};
use crate::numeric::{compare_sqrt_sums, sum_sqrt_interval, Rat};
use crate::{Error, Result};

/// Pairwise-compatibility contract for subfamily search.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Disjointness {
    /// Members must be pairwise vertex-disjoint (crossing families).
    Vertex,
    /// Members must be pairwise edge-disjoint; vertices may be shared
    /// (intersecting families).
    Edge,
}

/// Conflict/crossing structure over a candidate member list: `adjacency[i][j]`
/// holds iff members i and j are disjoint (per the mode) and cross.
#[derive(Clone, Debug)]
pub struct CrossingGraph {
    pub nodes: usize,
    pub adjacency: Vec<Vec<bool>>,
}

/// Largest member count the clique-based searches accept.
pub const MAX_SUBFAMILY_MEMBERS: usize = 128;

/// Builds the crossing graph for the requested disjointness mode.
pub fn build_crossing_graph(graphs: &[GeomGraph], disjointness: Disjointness) -> Result<CrossingGraph> {
    let n = graphs.len();
    if n > MAX_SUBFAMILY_MEMBERS {
        return Err(Error::ResourceLimit(format!(
            "{n} members exceeds the subfamily-search cap of {MAX_SUBFAMILY_MEMBERS}"
        )));
    }
    if disjointness == Disjointness::Edge
        && graphs.iter().any(|g| g.kind() == GraphKind::Elbow)
    {
        return Err(Error::KindMismatch(
            "edge-disjoint subfamily search is straight-edge only".into(),
        ));
    }
    let mut adjacency = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let (gi, gj) = (&graphs[i], &graphs[j]);
            let linked = match disjointness {
                Disjointness::Vertex => {
                    let disjoint = !gi
                        .vertices()
                        .iter()
                        .any(|v| gj.vertices().iter().any(|w| v == w));
                    disjoint && graphs_cross(gi, gj)?
                }
                Disjointness::Edge => {
                    let e1 = gi.edge_point_pairs();
                    let e2 = gj.edge_point_pairs();
                    let edge_disjoint = !e1.iter().any(|e| e2.contains(e));
                    edge_disjoint && crossing_nonincident_edges(gi, gj)?
                }
            };
            adjacency[i][j] = linked;
            adjacency[j][i] = linked;
        }
    }
    Ok(CrossingGraph { nodes: n, adjacency })
}

/// Bitmask over up to 128 vertices.
type Mask = u128;

/// Exact maximum clique via branch-and-bound with greedy coloring bounds
/// (Tomita-style). Deterministic: vertices are processed in index order and
/// the first maximum found in that order is returned.
fn max_clique(n: usize, adj: &[Mask]) -> (usize, Vec<usize>) {
    fn expand(adj: &[Mask], r: &mut Vec<usize>, p: Mask, best: &mut Vec<usize>) {
        if p == 0 {
            if r.len() > best.len() {
                *best = r.clone();
            }
            return;
        }
        // Greedy coloring: vertices of one color class are pairwise
        // non-adjacent, so |R| + color is an upper bound for any extension.
        let mut order: Vec<(usize, usize)> = Vec::new();
        let mut uncolored = p;
        let mut color = 0usize;
        while uncolored != 0 {
            color += 1;
            let mut avail = uncolored;
            while avail != 0 {
                let v = avail.trailing_zeros() as usize;
                order.push((v, color));
                uncolored &= !(1 << v);
                avail &= !(1 << v);
                avail &= !adj[v];
            }
        }
        for i in (0..order.len()).rev() {
            let (v, c) = order[i];
            if r.len() + c <= best.len() {
                return;
            }
            r.push(v);
            let mut newp: Mask = 0;
            for &(u, _) in &order[..i] {
                if adj[v] & (1 << u) != 0 {
                    newp |= 1 << u;
                }
            }
            expand(adj, r, newp, best);
            r.pop();
        }
    }

    if n == 0 {
        return (0, Vec::new());
    }
    let mut best = Vec::new();
    let mut r = Vec::new();
    let all: Mask = if n == 128 { !0 } else { (1u128 << n) - 1 };
    expand(adj, &mut r, all, &mut best);
    best.sort_unstable();
    (best.len(), best)
}

/// Exact maximum crossing subfamily: the largest subset of `graphs` that is
/// pairwise disjoint (per mode) with every pair crossing. Returns the size
/// and the member indices (sorted).
pub fn max_crossing_subfamily(
    graphs: &[GeomGraph],
    disjointness: Disjointness,
) -> Result<(usize, Vec<usize>)> {
    let cg = build_crossing_graph(graphs, disjointness)?;
    let masks: Vec<Mask> = (0..cg.nodes)
        .map(|i| {
            let mut m: Mask = 0;
            for j in 0..cg.nodes {
                if cg.adjacency[i][j] {
                    m |= 1 << j;
                }
            }
            m
        })
        .collect();
    Ok(max_clique(cg.nodes, &masks))
}

/// Everything one exhaustive pass over the Hamiltonian cycles of a point
/// set yields: the crossing maximum, the avoiding minimum, their first
/// (lexicographically smallest canonical) witnesses, and the per-cycle
/// pair-identity violation count, which must be zero.
#[derive(Clone, Debug)]
pub struct CycleSweep {
    pub cycles_enumerated: u64,
    pub max_crossings: u64,
    pub max_witness: HamiltonianCycle,
    pub min_avoiding: u64,
    pub min_witness: HamiltonianCycle,
    /// Cycles whose crossing + avoiding counts missed n(n-3)/2.
    pub identity_violations: u64,
}

/// Enumerates every Hamiltonian cycle (canonical form: starts at vertex 0,
/// oriented so the second vertex is smaller than the last) and tracks
/// extreme crossing/avoiding counts. Enumeration order is lexicographic, so
/// witnesses are the lexicographically smallest maximizer/minimizer.
pub fn sweep_hamiltonian_cycles(s: &PointSet) -> Result<CycleSweep> {
    let n = s.len();
    if !(4..=10).contains(&n) {
        return Err(Error::ResourceLimit(format!(
            "cycle enumeration supports 4..=10 points, got {n}"
        )));
    }
    let pts = s.points();
    // Crossing table over all C(n,2) candidate edges; incident pairs are
    // stored false and never counted.
    let eid = |i: usize, j: usize| -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        i * (2 * n - i - 1) / 2 + (j - i - 1)
    };
    let edge_count = n * (n - 1) / 2;
    let mut ends = vec![(0usize, 0usize); edge_count];
    for i in 0..n {
        for j in i + 1..n {
            ends[eid(i, j)] = (i, j);
        }
    }
    let mut table = vec![vec![false; edge_count]; edge_count];
    for e in 0..edge_count {
        for f in e + 1..edge_count {
            let (a, b) = ends[e];
            let (c, d) = ends[f];
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let s1 = Segment::new(pts[a].clone(), pts[b].clone());
            let s2 = Segment::new(pts[c].clone(), pts[d].clone());
            let x = segments_cross(&s1, &s2)?;
            table[e][f] = x;
            table[f][e] = x;
        }
    }

    let nonincident_pairs = (n as u64) * (n as u64 - 3) / 2;
    let mut sweep = CycleSweep {
        cycles_enumerated: 0,
        max_crossings: 0,
        max_witness: HamiltonianCycle::new((0..n).collect(), n)?,
        min_avoiding: u64::MAX,
        min_witness: HamiltonianCycle::new((0..n).collect(), n)?,
        identity_violations: 0,
    };

    let mut order: Vec<usize> = vec![0; n];
    let mut used = vec![false; n];
    used[0] = true;
    let mut eids = vec![0usize; n];

    fn recurse(
        depth: usize,
        n: usize,
        order: &mut Vec<usize>,
        used: &mut Vec<bool>,
        eids: &mut Vec<usize>,
        table: &[Vec<bool>],
        eid: &dyn Fn(usize, usize) -> usize,
        nonincident_pairs: u64,
        sweep: &mut CycleSweep,
    ) {
        if depth == n {
            if order[1] > order[n - 1] {
                return; // orientation canonicalization
            }
            for t in 0..n {
                eids[t] = eid(order[t], order[(t + 1) % n]);
            }
            let mut crossing = 0u64;
            let mut avoiding = 0u64;
            for t in 0..n {
                for u in t + 1..n {
                    if u == t + 1 || (t == 0 && u == n - 1) {
                        continue;
                    }
                    if table[eids[t]][eids[u]] {
                        crossing += 1;
                    } else {
                        avoiding += 1;
                    }
                }
            }
            sweep.cycles_enumerated += 1;
            if crossing + avoiding != nonincident_pairs {
                sweep.identity_violations += 1;
            }
            if crossing > sweep.max_crossings || sweep.cycles_enumerated == 1 {
                sweep.max_crossings = crossing;
                sweep.max_witness = HamiltonianCycle::new(order.clone(), n).expect("permutation");
            }
            if avoiding < sweep.min_avoiding {
                sweep.min_avoiding = avoiding;
                sweep.min_witness = HamiltonianCycle::new(order.clone(), n).expect("permutation");
            }
            return;
        }
        for v in 1..n {
            if !used[v] {
                used[v] = true;
                order[depth] = v;
                recurse(depth + 1, n, order, used, eids, table, eid, nonincident_pairs, sweep);
                used[v] = false;
            }
        }
    }

    recurse(
        1,
        n,
        &mut order,
        &mut used,
        &mut eids,
        &table,
        &eid,
        nonincident_pairs,
        &mut sweep,
    );
    Ok(sweep)
}

/// Exact maximum of `count_crossings` over all Hamiltonian cycles, with the
/// lexicographically smallest canonical witness.
pub fn enumerate_hamiltonian_max_crossings(s: &PointSet) -> Result<(u64, HamiltonianCycle)> {
    let sweep = sweep_hamiltonian_cycles(s)?;
    Ok((sweep.max_crossings, sweep.max_witness))
}

/// Exact minimum of `count_avoiding_pairs` over all Hamiltonian cycles.
pub fn min_avoiding_pairs(s: &PointSet) -> Result<u64> {
    if s.len() % 2 != 0 {
        return Err(Error::InvalidSize(
            "minimum-avoiding sweep is defined for even point counts".into(),
        ));
    }
    Ok(sweep_hamiltonian_cycles(s)?.min_avoiding)
}

/// Matching search mode.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatchingMode {
    /// Match label-"a…" points to label-"b…" points (m! candidates).
    BipartiteAB,
    /// All perfect matchings on the whole set ((n-1)!! candidates).
    General,
}

/// Result of the longest-perfect-matching search.
#[derive(Clone, Debug)]
pub struct LongestMatching {
    /// Matched index pairs, each sorted, list sorted.
    pub pairs: Vec<(usize, usize)>,
    /// Exact squared lengths of the matched edges.
    pub squared_lengths: Vec<Rat>,
    /// Certified enclosure of the total length at 128-bit precision.
    pub length_bounds: (Rat, Rat),
    /// True iff no two matching edges cross.
    pub is_crossing_free: bool,
}

const GENERAL_MATCHING_CAP: usize = 12;

/// Exact argmax of total edge length over all perfect matchings. Length
/// comparisons are certified (interval arithmetic with exact-equality
/// detection); a tie at the maximum is an error, never an arbitrary pick.
pub fn longest_perfect_matching_bruteforce(
    s: &PointSet,
    mode: MatchingMode,
) -> Result<LongestMatching> {
    let n = s.len();
    if n == 0 || n % 2 != 0 {
        return Err(Error::InvalidSize(format!(
            "perfect matching needs a positive even point count, got {n}"
        )));
    }
    let pts = s.points();

    // Candidate matchings as index-pair lists, enumerated lexicographically.
    let mut candidates: Vec<Vec<(usize, usize)>> = Vec::new();
    match mode {
        MatchingMode::BipartiteAB => {
            let labels = s.labels().ok_or_else(|| {
                Error::DegenerateInput("bipartite matching needs point labels".into())
            })?;
            let a_idx: Vec<usize> = (0..n).filter(|&i| labels[i].starts_with('a')).collect();
            let b_idx: Vec<usize> = (0..n).filter(|&i| labels[i].starts_with('b')).collect();
            if a_idx.len() != b_idx.len() || a_idx.len() + b_idx.len() != n {
                return Err(Error::DegenerateInput(
                    "bipartite matching needs equal a-/b-labeled classes covering the set".into(),
                ));
            }
            let m = a_idx.len();
            if m > 7 {
                return Err(Error::ResourceLimit(format!(
                    "bipartite matching search capped at 7 pairs, got {m}"
                )));
            }
            let mut perm: Vec<usize> = Vec::with_capacity(m);
            let mut used = vec![false; m];
            fn gen(
                m: usize,
                a_idx: &[usize],
                b_idx: &[usize],
                perm: &mut Vec<usize>,
                used: &mut Vec<bool>,
                out: &mut Vec<Vec<(usize, usize)>>,
            ) {
                if perm.len() == m {
                    out.push(
                        perm.iter()
                            .enumerate()
                            .map(|(i, &j)| {
                                let (a, b) = (a_idx[i], b_idx[j]);
                                if a < b { (a, b) } else { (b, a) }
                            })
                            .collect(),
                    );
                    return;
                }
                for j in 0..m {
                    if !used[j] {
                        used[j] = true;
                        perm.push(j);
                        gen(m, a_idx, b_idx, perm, used, out);
                        perm.pop();
                        used[j] = false;
                    }
                }
            }
            gen(m, &a_idx, &b_idx, &mut perm, &mut used, &mut candidates);
        }
        MatchingMode::General => {
            if n > GENERAL_MATCHING_CAP {
                return Err(Error::ResourceLimit(format!(
                    "general matching search capped at {GENERAL_MATCHING_CAP} points, got {n}"
                )));
            }
            let mut current: Vec<(usize, usize)> = Vec::new();
            let mut used = vec![false; n];
            fn gen(
                n: usize,
                used: &mut Vec<bool>,
                current: &mut Vec<(usize, usize)>,
                out: &mut Vec<Vec<(usize, usize)>>,
            ) {
                let first = match (0..n).find(|&i| !used[i]) {
                    Some(i) => i,
                    None => {
                        out.push(current.clone());
                        return;
                    }
                };
                used[first] = true;
                for j in first + 1..n {
                    if !used[j] {
                        used[j] = true;
                        current.push((first, j));
                        gen(n, used, current, out);
                        current.pop();
                        used[j] = false;
                    }
                }
                used[first] = false;
            }
            gen(n, &mut used, &mut current, &mut candidates);
        }
    }

    let mut best: Option<(Vec<(usize, usize)>, Vec<Rat>)> = None;
    let mut tied_with_best = false;
    for cand in candidates {
        let d2s: Vec<Rat> = cand
            .iter()
            .map(|&(i, j)| dist2(&pts[i], &pts[j]))
            .collect();
        match &best {
            None => best = Some((cand, d2s)),
            Some((_, best_d2s)) => match compare_sqrt_sums(&d2s, best_d2s)? {
                Ordering::Greater => {
                    best = Some((cand, d2s));
                    tied_with_best = false;
                }
                Ordering::Equal => tied_with_best = true,
                Ordering::Less => {}
            },
        }
    }
    let (mut pairs, squared_lengths) = best.expect("at least one matching");
    if tied_with_best {
        return Err(Error::TieUnresolved(
            "two distinct perfect matchings share the maximum total length".into(),
        ));
    }
    pairs.sort_unstable();

    let mut is_crossing_free = true;
    'outer: for x in 0..pairs.len() {
        for y in x + 1..pairs.len() {
            let (a, b) = pairs[x];
            let (c, d) = pairs[y];
            let s1 = Segment::new(pts[a].clone(), pts[b].clone());
            let s2 = Segment::new(pts[c].clone(), pts[d].clone());
            if segments_cross(&s1, &s2)? {
                is_crossing_free = false;
                break 'outer;
            }
        }
    }
    let length_bounds = sum_sqrt_interval(&squared_lengths, 128)?;
    Ok(LongestMatching {
        pairs,
        squared_lengths,
        length_bounds,
        is_crossing_free,
    })
}

/// `ceil(3 n^2 / 4)`: the exact maximum antichain size in the dominance
/// order on triplets from [n], and the paper-facing family sizes built on it.
pub fn antichain_formula(n: u64) -> u64 {
    (3 * n * n).div_ceil(4)
}

const ANTICHAIN_CAP: u64 = 12;

/// Exact maximum antichain in [n]^3 under coordinatewise dominance, via
/// Dilworth: minimum chain cover = N - maximum bipartite matching on the
/// strict-dominance relation (Hopcroft-Karp).
pub fn max_antichain_3d(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidSize("antichain needs n >= 1".into()));
    }
    if n > ANTICHAIN_CAP {
        return Err(Error::ResourceLimit(format!(
            "antichain search capped at n = {ANTICHAIN_CAP}, got {n}"
        )));
    }
    let n = n as usize;
    let count = n * n * n;
    let decode = |v: usize| (v / (n * n), (v / n) % n, v % n);
    // adjacency: u -> v iff u strictly dominated by v
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); count];
    for u in 0..count {
        let (a, b, c) = decode(u);
        for v in 0..count {
            if u == v {
                continue;
            }
            let (d, e, f) = decode(v);
            if a <= d && b <= e && c <= f {
                adj[u].push(v);
            }
        }
    }
    let matching = hopcroft_karp(count, count, &adj);
    Ok((count - matching) as u64)
}

/// Maximum bipartite matching (Hopcroft-Karp). `adj[u]` lists right-side
/// neighbors of left vertex u.
fn hopcroft_karp(left: usize, right: usize, adj: &[Vec<usize>]) -> usize {
    const NIL: usize = usize::MAX;
    let mut match_l = vec![NIL; left];
    let mut match_r = vec![NIL; right];
    let mut dist = vec![0u32; left];
    let mut result = 0;

    loop {
        // BFS layering from free left vertices.
        let mut queue = std::collections::VecDeque::new();
        let mut reachable_free_right = false;
        for u in 0..left {
            if match_l[u] == NIL {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = u32::MAX;
            }
        }
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = match_r[v];
                if w == NIL {
                    reachable_free_right = true;
                } else if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !reachable_free_right {
            break;
        }
        // DFS augmenting along the layering.
        fn try_augment(
            u: usize,
            adj: &[Vec<usize>],
            match_l: &mut [usize],
            match_r: &mut [usize],
            dist: &mut [u32],
        ) -> bool {
            for idx in 0..adj[u].len() {
                let v = adj[u][idx];
                let w = match_r[v];
                let ok = if w == usize::MAX {
                    true
                } else if dist[w] == dist[u] + 1 {
                    try_augment(w, adj, match_l, match_r, dist)
                } else {
                    false
                };
                if ok {
                    match_l[u] = v;
                    match_r[v] = u;
                    return true;
                }
            }
            dist[u] = u32::MAX;
            false
        }
        for u in 0..left {
            if match_l[u] == NIL && try_augment(u, adj, &mut match_l, &mut match_r, &mut dist) {
                result += 1;
            }
        }
    }
    result
}

const TWO_PATH_REMOVAL_CAP: usize = 12;

/// For a verified crossing family of triangles: the exact maximum, over all
/// one-edge-per-triangle removal assignments, of the largest mutually
/// crossing subfamily of the resulting 2-paths. Returns the maximum and the
/// first removal assignment achieving it (edge choice index per triangle:
/// choice c removes the edge between vertices c and c+1 mod 3).
pub fn best_2path_removal(f: &crate::graphs::Family) -> Result<(usize, Vec<usize>)> {
    use crate::graphs::{is_crossing_family, FamilyKind};
    if f.kind != FamilyKind::Crossing
        || f.members.iter().any(|g| g.kind() != GraphKind::Triangle)
    {
        return Err(Error::KindMismatch(
            "best_2path_removal needs a crossing family of triangles".into(),
        ));
    }
    if !is_crossing_family(f)? {
        return Err(Error::DegenerateInput(
            "family is not mutually crossing".into(),
        ));
    }
    let k = f.members.len();
    if k > TWO_PATH_REMOVAL_CAP {
        return Err(Error::ResourceLimit(format!(
            "removal search capped at {TWO_PATH_REMOVAL_CAP} triangles, got {k}"
        )));
    }
    if k == 0 {
        return Ok((0, Vec::new()));
    }

    // paths[i][c]: triangle i with edge (c, c+1) removed, leaving the
    // 2-path (c, c+2, c+1).
    let mut paths: Vec<Vec<GeomGraph>> = Vec::with_capacity(k);
    for g in &f.members {
        let v = g.vertices();
        let mut row = Vec::with_capacity(3);
        for c in 0..3 {
            row.push(GeomGraph::path(vec![
                v[c].clone(),
                v[(c + 2) % 3].clone(),
                v[(c + 1) % 3].clone(),
            ])?);
        }
        paths.push(row);
    }
    // cross[i][c][j][c']: do the chosen 2-paths cross?
    let mut cross = vec![[[[false; 3]; TWO_PATH_REMOVAL_CAP]; 3]; k];
    for i in 0..k {
        for j in i + 1..k {
            for c in 0..3 {
                for d in 0..3 {
                    let x = graphs_cross(&paths[i][c], &paths[j][d])?;
                    cross[i][c][j][d] = x;
                    cross[j][d][i][c] = x;
                }
            }
        }
    }

    let mut best_size = 0usize;
    let mut best_assign = vec![0usize; k];
    let mut assign = vec![0usize; k];
    loop {
        // max clique among the k chosen paths under the fixed assignment
        let masks: Vec<Mask> = (0..k)
            .map(|i| {
                let mut m: Mask = 0;
                for j in 0..k {
                    if j != i && cross[i][assign[i]][j][assign[j]] {
                        m |= 1 << j;
                    }
                }
                m
            })
            .collect();
        let (size, _) = max_clique(k, &masks);
        if size > best_size {
            best_size = size;
            best_assign = assign.clone();
            if best_size == k {
                break; // cannot exceed the family size
            }
        }
        // next assignment in base-3 counting order
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if assign[pos] < 2 {
                assign[pos] += 1;
                for a in assign.iter_mut().skip(pos + 1) {
                    *a = 0;
                }
                break;
            }
            if pos == 0 {
                return Ok((best_size, best_assign));
            }
        }
        if assign.iter().all(|&a| a == 0) {
            break;
        }
    }
    Ok((best_size, best_assign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::pt;
    use crate::graphs::{Family, FamilyKind};

    fn convex(n: usize) -> PointSet {
        // convex position via points on a parabola-like arc
        let pts = match n {
            4 => vec![pt(0, 0), pt(10, 1), pt(9, 9), pt(-1, 8)],
            5 => vec![pt(0, 0), pt(10, 0), pt(13, 9), pt(5, 15), pt(-3, 9)],
            6 => vec![pt(0, 0), pt(8, 1), pt(11, 6), pt(7, 12), pt(-1, 11), pt(-3, 5)],
            _ => unreachable!(),
        };
        PointSet::new(pts).unwrap()
    }

    #[test]
    fn convex_position_cycle_maxima() {
        let (m5, _) = enumerate_hamiltonian_max_crossings(&convex(5)).unwrap();
        assert_eq!(m5, 5);
        let (m6, w6) = enumerate_hamiltonian_max_crossings(&convex(6)).unwrap();
        assert_eq!(m6, 7);
        assert_eq!(crate::graphs::count_crossings(&convex(6), &w6).unwrap(), 7);
    }

    #[test]
    fn sweep_counts_and_identity() {
        let sweep = sweep_hamiltonian_cycles(&convex(5)).unwrap();
        assert_eq!(sweep.cycles_enumerated, 12); // 4!/2
        assert_eq!(sweep.identity_violations, 0);
        let sweep = sweep_hamiltonian_cycles(&convex(6)).unwrap();
        assert_eq!(sweep.cycles_enumerated, 60); // 5!/2
        assert_eq!(sweep.identity_violations, 0);
    }

    #[test]
    fn min_avoiding_on_small_convex_sets() {
        assert_eq!(min_avoiding_pairs(&convex(4)).unwrap(), 1);
        assert_eq!(min_avoiding_pairs(&convex(6)).unwrap(), 2);
        assert!(min_avoiding_pairs(&convex(5)).is_err());
    }

    #[test]
    fn clique_on_disjoint_hull_triangles_is_one() {
        let t1 = GeomGraph::triangle(pt(0, 0), pt(2, 0), pt(1, 2)).unwrap();
        let t2 = GeomGraph::triangle(pt(10, 0), pt(12, 0), pt(11, 2)).unwrap();
        let (size, witness) = max_crossing_subfamily(&[t1, t2], Disjointness::Vertex).unwrap();
        assert_eq!(size, 1);
        assert_eq!(witness.len(), 1);
    }

    #[test]
    fn diagonal_matching_is_longest_on_a_square() {
        let s = PointSet::new(vec![pt(0, 0), pt(10, 0), pt(10, 10), pt(0, 10)]).unwrap();
        let res = longest_perfect_matching_bruteforce(&s, MatchingMode::General).unwrap();
        assert_eq!(res.pairs, vec![(0, 2), (1, 3)]);
        assert!(!res.is_crossing_free);
    }

    #[test]
    fn square_with_labels_ties_in_bipartite_mode() {
        // a-points on one diagonal of a square, b-points on the other:
        // both bipartite matchings use two sides, equal total length.
        let s = PointSet::new(vec![pt(0, 0), pt(10, 10), pt(10, 0), pt(0, 10)])
            .unwrap()
            .with_labels(vec!["a1".into(), "a2".into(), "b1".into(), "b2".into()])
            .unwrap();
        assert!(matches!(
            longest_perfect_matching_bruteforce(&s, MatchingMode::BipartiteAB),
            Err(Error::TieUnresolved(_))
        ));
    }

    #[test]
    fn antichain_small_values() {
        assert_eq!(max_antichain_3d(1).unwrap(), 1);
        assert_eq!(max_antichain_3d(2).unwrap(), 3);
        assert_eq!(max_antichain_3d(3).unwrap(), 7);
        assert_eq!(antichain_formula(2), 3);
        assert_eq!(antichain_formula(3), 7);
        assert_eq!(antichain_formula(4), 12);
    }

    #[test]
    fn single_triangle_removal_is_one() {
        let f = Family::new(
            FamilyKind::Crossing,
            vec![GeomGraph::triangle(pt(0, 0), pt(4, 0), pt(2, 3)).unwrap()],
        );
        let (size, assign) = best_2path_removal(&f).unwrap();
        assert_eq!(size, 1);
        assert_eq!(assign.len(), 1);
    }

    /// Three mutually crossing 2-paths whose six edges contain no three
    /// mutually crossing edges: the path-level family beats the edge level.
    #[test]
    fn three_lambda_paths_beat_their_edges() {
        let p1 = GeomGraph::path(vec![pt(9, -1), pt(-4, 8), pt(1, 1)]).unwrap();
        let p2 = GeomGraph::path(vec![pt(-2, 0), pt(0, 4), pt(8, -1)]).unwrap();
        let p3 = GeomGraph::path(vec![pt(3, 4), pt(5, 3), pt(7, -2)]).unwrap();
        let paths = [p1.clone(), p2.clone(), p3.clone()];
        let (path_level, _) = max_crossing_subfamily(&paths, Disjointness::Vertex).unwrap();
        assert_eq!(path_level, 3);

        let mut edges = Vec::new();
        for p in [&p1, &p2, &p3] {
            for s in p.straight_edges() {
                edges.push(GeomGraph::matching_edge(s.a, s.b).unwrap());
            }
        }
        let (edge_level, _) = max_crossing_subfamily(&edges, Disjointness::Vertex).unwrap();
        assert_eq!(edge_level, 2);
    }
}
