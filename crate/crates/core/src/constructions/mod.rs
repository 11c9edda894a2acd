//! Generators for the point-set constructions. Each one returns an
//! [`Instance`]: exact coordinates, the distinguished families or cycles,
//! and claims that an independent verifier can re-check from the data alone.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::geom::PointSet;
use crate::graphs::{Family, HamiltonianCycle};

pub mod blades;
pub mod convex_cycles;
pub mod elbows;
pub mod ham_cycles;
pub mod intersecting;
pub mod triangles_grid;
pub mod villanger;

pub use blades::blades_pointset;
pub use convex_cycles::{convex_cycles_family, separated_sets_on_rays, SeparatedSets};
pub use elbows::{all_elbows, elbow_family, elbow_hard_pointset};
pub use ham_cycles::{ham_cycle_max_even, ham_cycle_max_odd};
pub use intersecting::{
    circle_arcs_pointset, convex_intersecting_family, intersecting_triangles, three_ray_pointset,
};
pub use triangles_grid::{crossing_triangles_grid, label_triangle_pair, EdgeLabel};
pub use villanger::{transposition_reduces, villanger_pointset, TranspositionClass};

/// Direction of a claim's comparison against the verifier's computed value.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Eq,
    Le,
    Ge,
}

/// The independent procedure that re-checks a claim.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verifier {
    /// The referenced family is a valid crossing family; value = its size.
    CrossingFamilySize,
    /// The referenced family is a valid intersecting family; value = size.
    IntersectingFamilySize,
    /// Exact crossing count of the referenced cycle.
    CycleCrossings,
    /// Crossing count of one cycle edge, named by the claim's `edge`.
    DistinguishedEdgeCrossings,
    /// Exhaustive maximum crossing count over all Hamiltonian cycles.
    HamMaxCrossings,
    /// Crossing count of the longest perfect matching between labeled
    /// classes; the matching itself must equal the referenced family.
    LongestMatching,
    /// Exhaustive maximum crossing family over all elbows on the point set.
    MaxElbowFamily,
    /// Exhaustive best one-edge-per-triangle removal of the referenced
    /// family, scored by the largest mutually crossing 2-path subfamily.
    #[serde(rename = "best-2path-removal")]
    Best2PathRemoval,
    /// Exhaustive maximum crossing subfamily (edge-disjoint mode) over all
    /// transversal triangles of the three labeled classes.
    MaxTransversalTriangles,
    /// Maximum antichain in the triple dominance order, side read from the
    /// `n` parameter.
    Antichain,
}

/// One machine-checkable assertion about an instance.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Claim {
    pub description: String,
    pub verifier: Verifier,
    pub relation: Relation,
    pub value: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cycle: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub edge: Option<[usize; 2]>,
}

impl Claim {
    pub fn new(
        description: &str,
        verifier: Verifier,
        relation: Relation,
        value: i64,
    ) -> Self {
        Claim {
            description: description.to_string(),
            verifier,
            relation,
            value,
            family: None,
            cycle: None,
            edge: None,
        }
    }

    pub fn on_family(mut self, index: usize) -> Self {
        self.family = Some(index);
        self
    }

    pub fn on_cycle(mut self, index: usize) -> Self {
        self.cycle = Some(index);
        self
    }

    pub fn on_edge(mut self, i: usize, j: usize) -> Self {
        self.edge = Some([i, j]);
        self
    }
}

/// A generated configuration plus everything needed to re-verify it.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub points: PointSet,
    pub families: Vec<Family>,
    pub cycles: Vec<HamiltonianCycle>,
    pub claims: Vec<Claim>,
    pub parameters: BTreeMap<String, String>,
}

impl Instance {
    pub fn new(name: String, points: PointSet) -> Self {
        Instance {
            name,
            points,
            families: Vec::new(),
            cycles: Vec::new(),
            claims: Vec::new(),
            parameters: BTreeMap::new(),
        }
    }

    pub fn set_parameter(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.to_string(), value.to_string());
    }
}
