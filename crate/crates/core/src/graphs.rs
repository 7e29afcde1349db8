//! Graph families under study, realized as explicit simple graphs with
//! structured vertex identities.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::mis;

/// Identity of a vertex inside one of the supported families.
///
/// Petersen-type graphs use an outer cycle `v_1..v_n` and an inner ring
/// `u_1..u_n`; stacked prisms use grid coordinates (layer along the
/// path, position around the cycle). Indices are 1-based to match the
/// construction tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VertexId {
    Outer(u32),
    Inner(u32),
    Grid { layer: u32, pos: u32 },
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::Outer(i) => write!(f, "v{i}"),
            VertexId::Inner(i) => write!(f, "u{i}"),
            VertexId::Grid { layer, pos } => write!(f, "x{layer}_{pos}"),
        }
    }
}

/// Parametrized graph family.
///
/// `Petersen(n, k)` materializes a general `GP(n, k)`; it exists for the
/// conjecture-check harness, which is its only caller in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphFamily {
    /// Prism `GP(n, 1)`, the cycle `C_n` joined to a second copy by a
    /// perfect matching. Requires `n >= 3`.
    Prism(u64),
    /// Generalized Petersen graph `GP(n, 2)`. Requires `n >= 5`.
    Gp2(u64),
    /// Stacked prism `Y(m, n) = C_m x P_n`: `n` layers of an `m`-cycle.
    /// Requires `m >= 3`, `n >= 1`.
    StackedPrism(u64, u64),
    /// The variant `GP*(2k, k)` on `4k` vertices where each inner edge
    /// `u_i ~ u_{i+k}` is kept simple, so inner vertices have degree 2.
    /// Requires `k >= 2`.
    GpStar(u64),
    /// General `GP(n, k)` with `1 <= k <= (n-1)/2`.
    Petersen(u64, u64),
}

impl GraphFamily {
    /// Short name used in JSON output and the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            GraphFamily::Prism(_) => "prism",
            GraphFamily::Gp2(_) => "gp2",
            GraphFamily::StackedPrism(_, _) => "stacked_prism",
            GraphFamily::GpStar(_) => "gpstar",
            GraphFamily::Petersen(_, _) => "gp",
        }
    }

    pub fn vertex_count(&self) -> u64 {
        match *self {
            GraphFamily::Prism(n) | GraphFamily::Gp2(n) | GraphFamily::Petersen(n, _) => 2 * n,
            GraphFamily::StackedPrism(m, n) => m * n,
            GraphFamily::GpStar(k) => 4 * k,
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphFamily::Prism(n) => write!(f, "prism(n={n})"),
            GraphFamily::Gp2(n) => write!(f, "gp2(n={n})"),
            GraphFamily::StackedPrism(m, n) => write!(f, "stacked_prism(m={m},n={n})"),
            GraphFamily::GpStar(k) => write!(f, "gpstar(k={k})"),
            GraphFamily::Petersen(n, k) => write!(f, "gp(n={n},k={k})"),
        }
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("{family}: parameter out of range: {reason}")]
    ParamOutOfRange {
        family: &'static str,
        reason: String,
    },
    #[error("graph too large for exact independence search: {vertices} vertices (limit 64)")]
    TooLarge { vertices: usize },
    #[error("node budget exhausted after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
}

/// A concrete simple graph: vertex list plus edges as index pairs into
/// that list. Vertices are listed outer ring first then inner ring
/// (layer-major for stacked prisms), and edges reference positions in
/// `vertices`.
#[derive(Debug, Clone)]
pub struct GraphInstance {
    pub family: GraphFamily,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<(u32, u32)>,
}

impl GraphInstance {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Position of `id` in the vertex list.
    pub fn index_of(&self, id: VertexId) -> Option<usize> {
        // Vertex lists are sorted by construction.
        self.vertices.binary_search(&id).ok()
    }

    /// Adjacency lists by vertex index.
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.vertices.len()];
        for &(a, b) in &self.edges {
            deg[a as usize] += 1;
            deg[b as usize] += 1;
        }
        deg
    }
}

fn err(family: &'static str, reason: impl Into<String>) -> GraphError {
    GraphError::ParamOutOfRange {
        family,
        reason: reason.into(),
    }
}

/// Construct the explicit graph for a family instance.
///
/// Cycle indices wrap modulo the cycle length; the path direction of
/// stacked prisms does not wrap.
pub fn build(family: GraphFamily) -> Result<GraphInstance, GraphError> {
    match family {
        GraphFamily::Prism(n) => {
            if n < 3 {
                return Err(err("prism", format!("n = {n}, need n >= 3")));
            }
            Ok(petersen_like(family, n, 1, true))
        }
        GraphFamily::Gp2(n) => {
            if n < 5 {
                return Err(err("gp2", format!("n = {n}, need n >= 5")));
            }
            Ok(petersen_like(family, n, 2, true))
        }
        GraphFamily::Petersen(n, k) => {
            if n < 3 {
                return Err(err("gp", format!("n = {n}, need n >= 3")));
            }
            if k < 1 || 2 * k > n - 1 {
                return Err(err("gp", format!("k = {k}, need 1 <= k <= (n-1)/2")));
            }
            Ok(petersen_like(family, n, k, true))
        }
        GraphFamily::GpStar(k) => {
            if k < 2 {
                return Err(err("gpstar", format!("k = {k}, need k >= 2")));
            }
            // Inner edges u_i ~ u_{i+k} are generated once per unordered
            // pair (i in 1..=k), which deduplicates the doubled pairs.
            Ok(petersen_like(family, 2 * k, k, false))
        }
        GraphFamily::StackedPrism(m, n) => {
            if m < 3 {
                return Err(err("stacked_prism", format!("m = {m}, need m >= 3")));
            }
            if n < 1 {
                return Err(err("stacked_prism", format!("n = {n}, need n >= 1")));
            }
            let (m, n) = (m as u32, n as u32);
            let mut vertices = Vec::with_capacity((m * n) as usize);
            for layer in 1..=n {
                for pos in 1..=m {
                    vertices.push(VertexId::Grid { layer, pos });
                }
            }
            let idx = |layer: u32, pos: u32| -> u32 { (layer - 1) * m + (pos - 1) };
            let mut edges = Vec::with_capacity((m * (2 * n - 1)) as usize);
            for layer in 1..=n {
                for pos in 1..=m {
                    let next = if pos == m { 1 } else { pos + 1 };
                    edges.push((idx(layer, pos), idx(layer, next)));
                    if layer < n {
                        edges.push((idx(layer, pos), idx(layer + 1, pos)));
                    }
                }
            }
            Ok(GraphInstance {
                family,
                vertices,
                edges,
            })
        }
    }
}

/// Common builder for the outer-cycle / spokes / inner-ring families.
/// With `full_inner` the inner edges are `u_i ~ u_{i+k}` for all `i`;
/// otherwise only for `i <= k` (the `GP*(2k, k)` dedup).
fn petersen_like(family: GraphFamily, n: u64, k: u64, full_inner: bool) -> GraphInstance {
    let n = n as u32;
    let k = k as u32;
    let mut vertices = Vec::with_capacity(2 * n as usize);
    for i in 1..=n {
        vertices.push(VertexId::Outer(i));
    }
    for i in 1..=n {
        vertices.push(VertexId::Inner(i));
    }
    let outer = |i: u32| i - 1;
    let inner = |i: u32| n + i - 1;
    let mut edges = Vec::new();
    for i in 1..=n {
        let next = if i == n { 1 } else { i + 1 };
        edges.push((outer(i), outer(next)));
        edges.push((outer(i), inner(i)));
    }
    let inner_range = if full_inner { 1..=n } else { 1..=k };
    for i in inner_range {
        let j = (i - 1 + k) % n + 1;
        edges.push((inner(i), inner(j)));
    }
    GraphInstance {
        family,
        vertices,
        edges,
    }
}

/// Where the independence number came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlphaSource {
    Formula,
    Exact,
}

/// Independence number together with the odd-label lower bound it
/// induces: at most `alpha` even labels can appear in any coprime
/// labeling, so at least `|V| - alpha` odd labels are needed, forcing a
/// label of at least `2(|V| - alpha) - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundInfo {
    pub alpha: u64,
    pub alpha_source: AlphaSource,
    pub odd_label_lower_bound: u64,
}

impl BoundInfo {
    fn new(alpha: u64, alpha_source: AlphaSource, vertex_count: u64) -> Self {
        let odd_label_lower_bound = if vertex_count > alpha {
            2 * (vertex_count - alpha) - 1
        } else {
            1
        };
        BoundInfo {
            alpha,
            alpha_source,
            odd_label_lower_bound,
        }
    }
}

/// Closed-form independence number, where one is known for the
/// family and parity:
///
/// * prisms with odd `n`: `n - 1`
/// * `GP(n, 2)`: `floor(4n / 5)`
/// * stacked prisms with odd `m`: `((m - 1) / 2) * n`
///
/// Everything else (notably `GP*(2k, k)`, which has no known closed
/// form for either parity) returns `None`; use [`independence_exact`].
pub fn independence_formula(family: GraphFamily) -> Option<BoundInfo> {
    let alpha = match family {
        GraphFamily::Prism(n) if n % 2 == 1 => n - 1,
        GraphFamily::Gp2(n) => 4 * n / 5,
        GraphFamily::StackedPrism(m, n) if m % 2 == 1 => (m - 1) / 2 * n,
        _ => return None,
    };
    Some(BoundInfo::new(
        alpha,
        AlphaSource::Formula,
        family.vertex_count(),
    ))
}

/// Exact independence number by branch and bound (see [`mis`]).
///
/// Limited to 64 vertices; aborts with `BudgetExceeded` if the node
/// budget runs out.
pub fn independence_exact(g: &GraphInstance, node_budget: u64) -> Result<BoundInfo, GraphError> {
    let alpha = mis::max_independent_set(g, node_budget)?;
    Ok(BoundInfo::new(
        alpha,
        AlphaSource::Exact,
        g.vertex_count() as u64,
    ))
}

/// DOT rendering of the bare graph, one edge per line.
pub fn to_dot(g: &GraphInstance) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "graph {{");
    for &(a, b) in &g.edges {
        let _ = writeln!(
            out,
            "  {} -- {};",
            g.vertices[a as usize], g.vertices[b as usize]
        );
    }
    out.push_str("}\n");
    out
}
