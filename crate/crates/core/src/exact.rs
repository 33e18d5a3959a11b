//! Exact oracles for small graphs: maximum independent set, treewidth and
//! minimum balanced separator. Over budget they fail with
//! [`Error::BudgetExceeded`] instead of returning a guess.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BitSet, Graph};
use crate::treedec::{balanced_separator_check, TreeDecomposition};

/// Limits for an exact search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveBudget {
    pub max_vertices: usize,
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
}

impl SolveBudget {
    pub const fn vertices(max_vertices: usize) -> Self {
        SolveBudget { max_vertices, time_limit: None, node_limit: None }
    }

    /// Defaults for [`mis_exact`].
    pub const MIS: SolveBudget = SolveBudget::vertices(200);
    /// Defaults for [`treewidth_exact`]; the subset table holds `2^n` bytes.
    pub const TREEWIDTH: SolveBudget = SolveBudget::vertices(18);
    /// Defaults for [`min_balanced_separator`].
    pub const SEPARATOR: SolveBudget = SolveBudget::vertices(20);

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn with_node_limit(mut self, limit: u64) -> Self {
        self.node_limit = Some(limit);
        self
    }

    fn check_size(&self, n: usize, what: &str) -> Result<()> {
        if n > self.max_vertices {
            return Err(Error::BudgetExceeded(format!("{what}: {n} vertices, limit {}", self.max_vertices)));
        }
        Ok(())
    }
}

struct Meter {
    start: Instant,
    nodes: u64,
    budget: SolveBudget,
}

impl Meter {
    fn new(budget: SolveBudget) -> Self {
        Meter { start: Instant::now(), nodes: 0, budget }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if let Some(limit) = self.budget.node_limit {
            if self.nodes > limit {
                return Err(Error::BudgetExceeded(format!("search node limit {limit} reached")));
            }
        }
        if self.nodes.is_multiple_of(4096) {
            if let Some(limit) = self.budget.time_limit {
                if self.start.elapsed() > limit {
                    return Err(Error::BudgetExceeded(format!("time limit {limit:?} reached")));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MisResult {
    pub size: usize,
    /// Ascending vertex indices.
    pub witness: Vec<usize>,
    pub search_nodes: u64,
}

/// Maximum independent set as a maximum clique of the complement, by
/// branch and bound with a greedy colouring bound. Vertices are coloured in
/// index order, so the witness is deterministic.
pub fn mis_exact(g: &Graph, budget: SolveBudget) -> Result<MisResult> {
    let n = g.vertex_count();
    budget.check_size(n, "maximum independent set")?;
    let comp: Vec<BitSet> = (0..n)
        .map(|v| {
            let mut row = BitSet::full(n);
            row.difference_with(g.neighbors(v));
            row.remove(v);
            row
        })
        .collect();
    let mut search = CliqueSearch { adj: &comp, best: Vec::new(), current: Vec::new(), meter: Meter::new(budget) };
    search.expand(BitSet::full(n))?;
    let mut witness = search.best;
    witness.sort_unstable();
    Ok(MisResult { size: witness.len(), witness, search_nodes: search.meter.nodes })
}

struct CliqueSearch<'a> {
    adj: &'a [BitSet],
    best: Vec<usize>,
    current: Vec<usize>,
    meter: Meter,
}

impl CliqueSearch<'_> {
    /// Greedy sequential colouring of `p`; returns vertices with their colour
    /// numbers, colours non-decreasing.
    fn colour(&self, p: &BitSet) -> Vec<(usize, usize)> {
        let mut order = Vec::with_capacity(p.count());
        let mut uncoloured = p.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut avail = uncoloured.clone();
            while let Some(v) = avail.first() {
                avail.remove(v);
                avail.difference_with(&self.adj[v]);
                uncoloured.remove(v);
                order.push((v, colour));
            }
        }
        order
    }

    fn expand(&mut self, mut p: BitSet) -> Result<()> {
        self.meter.tick()?;
        let order = self.colour(&p);
        for &(v, c) in order.iter().rev() {
            if self.current.len() + c <= self.best.len() {
                return Ok(());
            }
            self.current.push(v);
            let next = p.intersection(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next)?;
            }
            self.current.pop();
            p.remove(v);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreewidthResult {
    pub treewidth: usize,
    /// An optimal elimination ordering.
    pub ordering: Vec<usize>,
    pub decomposition: TreeDecomposition,
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.vertex_count()).map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w)).collect()
}

/// Vertices outside `s ∪ {v}` reachable from `v` through `s`.
fn q_value(adj: &[u32], s: u32, v: usize) -> u32 {
    let mut reach = 1u32 << v;
    let mut frontier = reach;
    let mut outside = 0u32;
    while frontier != 0 {
        let u = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let nb = adj[u];
        outside |= nb & !s;
        let inner = nb & s & !reach;
        reach |= inner;
        frontier |= inner;
    }
    outside & !(1u32 << v)
}

/// Exact treewidth by dynamic programming over vertex subsets:
/// `TW(S) = min_{v ∈ S} max(TW(S ∖ v), |Q(S ∖ v, v)|)`, where `Q(S, v)` is the
/// set of vertices outside `S ∪ {v}` joined to `v` by a path through `S`.
pub fn treewidth_exact(g: &Graph, budget: SolveBudget) -> Result<TreewidthResult> {
    let n = g.vertex_count();
    budget.check_size(n, "exact treewidth")?;
    if n == 0 {
        return Err(Error::DegenerateInput("the empty graph has no tree decomposition".into()));
    }
    if n > 30 {
        return Err(Error::BudgetExceeded(format!("exact treewidth: {n} vertices exceeds the 30-vertex table")));
    }
    let adj = masks(g);
    let full = (1u32 << n) - 1;
    let mut meter = Meter::new(budget);
    // tw[s] = TW(s) + 1, so that TW(∅) = -1 is stored as 0
    let mut tw = vec![0u8; 1usize << n];
    for s in 1..=full {
        meter.tick()?;
        let mut best = u8::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            let here = (q_value(&adj, rest, v).count_ones() as u8 + 1).max(tw[rest as usize]);
            best = best.min(here);
        }
        tw[s as usize] = best;
    }
    let treewidth = tw[full as usize] as usize - 1;

    // peel off the last vertex of each optimal subproblem
    let mut ordering = vec![0; n];
    let mut s = full;
    for pos in (0..n).rev() {
        let target = tw[s as usize];
        let mut bits = s;
        let v = loop {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            if (q_value(&adj, rest, v).count_ones() as u8 + 1).max(tw[rest as usize]) == target {
                break v;
            }
        };
        ordering[pos] = v;
        s &= !(1 << v);
    }
    let decomposition = elimination_decomposition(g, &ordering);
    Ok(TreewidthResult { treewidth, ordering, decomposition })
}

/// Width of the elimination ordering: the largest number of later neighbours
/// a vertex has in the fill-in graph when it is eliminated.
pub fn elimination_width(g: &Graph, ordering: &[usize]) -> usize {
    let n = g.vertex_count();
    let mut adj: Vec<BitSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut gone = BitSet::new(n);
    let mut width = 0;
    for &v in ordering {
        let mut later = adj[v].clone();
        later.difference_with(&gone);
        width = width.max(later.count());
        let nb: Vec<usize> = later.iter().collect();
        for &a in &nb {
            for &b in &nb {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        gone.insert(v);
    }
    width
}

/// Tree decomposition of an elimination ordering: vertex `v` gets the bag
/// `{v} ∪ N⁺(v)`, attached to the bag of the first-eliminated vertex of
/// `N⁺(v)`, or to the final vertex's bag when `N⁺(v)` is empty.
pub fn elimination_decomposition(g: &Graph, ordering: &[usize]) -> TreeDecomposition {
    let n = g.vertex_count();
    let mut position = vec![0; n];
    for (i, &v) in ordering.iter().enumerate() {
        position[v] = i;
    }
    let mut adj: Vec<BitSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut gone = BitSet::new(n);
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for (i, &v) in ordering.iter().enumerate() {
        let mut later = adj[v].clone();
        later.difference_with(&gone);
        let nb: Vec<usize> = later.iter().collect();
        for &a in &nb {
            for &b in &nb {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        gone.insert(v);
        if i + 1 < n {
            let parent = nb.iter().map(|&w| position[w]).min().unwrap_or(n - 1);
            edges.push((i, parent));
        }
        let mut bag = nb;
        bag.push(v);
        bags.push(bag);
    }
    TreeDecomposition::new(bags, &edges).expect("elimination tree edges are in range")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatorResult {
    pub size: usize,
    pub witness: Vec<usize>,
    /// `size - 1`: every graph has a balanced separator of at most `tw + 1` vertices.
    pub implied_treewidth_lower_bound: usize,
}

/// Smallest `P` such that every component of `G ∖ P` has at most
/// `|V ∖ P| / 2` vertices, by exhaustive search in order of increasing size
/// (lexicographically first witness).
pub fn min_balanced_separator(g: &Graph, budget: SolveBudget) -> Result<SeparatorResult> {
    let n = g.vertex_count();
    budget.check_size(n, "minimum balanced separator")?;
    let mut meter = Meter::new(budget);
    for size in 0..=n {
        for p in crate::subspace::combinations(n, size) {
            meter.tick()?;
            if balanced_separator_check(g, &p).balanced {
                return Ok(SeparatorResult { size, witness: p, implied_treewidth_lower_bound: size.saturating_sub(1) });
            }
        }
    }
    unreachable!("P = V is always balanced")
}
