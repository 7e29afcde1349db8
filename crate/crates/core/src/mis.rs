//! Exact maximum independent set for small graphs (up to 64 vertices),
//! by branch and bound over bitmask vertex sets.

use crate::graphs::{GraphError, GraphInstance};

struct Search {
    adj: Vec<u64>,
    best: u64,
    nodes: u64,
    budget: u64,
}

impl Search {
    /// Upper bound on the independence number of the subgraph induced by
    /// `avail`: a greedy clique cover, since an independent set meets
    /// each clique at most once.
    fn clique_cover_bound(&self, mut avail: u64) -> u64 {
        let mut cliques = 0;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= avail - 1;
            let mut common = self.adj[v] & avail;
            while common != 0 {
                let u = common.trailing_zeros() as usize;
                avail &= !(1u64 << u);
                common &= self.adj[u] & avail;
            }
            cliques += 1;
        }
        cliques
    }

    fn branch(&mut self, avail: u64, size: u64) -> Result<(), GraphError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(GraphError::BudgetExceeded { nodes: self.nodes });
        }
        if avail == 0 {
            self.best = self.best.max(size);
            return Ok(());
        }
        if size + self.clique_cover_bound(avail) <= self.best {
            return Ok(());
        }
        // Branch on a max-degree vertex within the remaining set: include
        // it or discard it.
        let mut pick = avail.trailing_zeros() as usize;
        let mut pick_deg = 0u32;
        let mut scan = avail;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let d = (self.adj[v] & avail).count_ones();
            if d > pick_deg {
                pick_deg = d;
                pick = v;
            }
        }
        let bit = 1u64 << pick;
        self.branch(avail & !bit & !self.adj[pick], size + 1)?;
        self.branch(avail & !bit, size)
    }
}

/// Size of a maximum independent set of `g`, or an error if `g` exceeds
/// 64 vertices or the node budget runs out.
pub fn max_independent_set(g: &GraphInstance, node_budget: u64) -> Result<u64, GraphError> {
    let n = g.vertex_count();
    if n > 64 {
        return Err(GraphError::TooLarge { vertices: n });
    }
    let mut adj = vec![0u64; n];
    for &(a, b) in &g.edges {
        adj[a as usize] |= 1u64 << b;
        adj[b as usize] |= 1u64 << a;
    }
    let mut search = Search {
        adj,
        best: 0,
        nodes: 0,
        budget: node_budget,
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    search.branch(all, 0)?;
    Ok(search.best)
}
