//! Tree decompositions: validation, width, the star construction,
//! normalization, balanced separators and PACE 2017 text formats.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{parse, Error, Result};
use crate::graph::{BitSet, Graph};

/// A tree on nodes `0..bags.len()` with a bag of graph vertices per node.
/// Bags are sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    adj: Vec<Vec<usize>>,
}

impl TreeDecomposition {
    /// Bags are sorted and deduplicated; edges are unordered node pairs.
    pub fn new(bags: Vec<Vec<usize>>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = bags.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::InvalidArgs(format!("bad tree edge ({a}, {b}) for {n} nodes")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        let bags = bags
            .into_iter()
            .map(|b| {
                let mut b = b;
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        Ok(TreeDecomposition { bags, adj })
    }

    /// One node whose bag is every vertex.
    pub fn trivial(vertex_count: usize) -> Self {
        TreeDecomposition { bags: vec![(0..vertex_count).collect()], adj: vec![Vec::new()] }
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn bag(&self, node: usize) -> &[usize] {
        &self.bags[node]
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adj[node]
    }

    /// Tree edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> =
            self.adj.iter().enumerate().flat_map(|(a, row)| row.iter().filter(move |&&b| b > a).map(move |&b| (a, b))).collect();
        out.sort_unstable();
        out
    }

    pub fn width(&self) -> Result<usize> {
        width(self)
    }

    fn max_bag(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn is_tree(&self) -> bool {
        let n = self.node_count();
        if n == 0 || self.edges().len() != n - 1 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(a) = stack.pop() {
            for &b in &self.adj[a] {
                if !seen[b] {
                    seen[b] = true;
                    reached += 1;
                    stack.push(b);
                }
            }
        }
        reached == n
    }
}

/// Largest bag size minus one.
pub fn width(td: &TreeDecomposition) -> Result<usize> {
    if td.node_count() == 0 {
        return Err(Error::EmptyTree);
    }
    Ok(td.max_bag().saturating_sub(1))
}

/// Outcome of [`validate_td`]. Every violation is listed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TdValidation {
    pub is_tree: bool,
    /// Bag entries that are not vertices of the graph, as `(node, vertex)`.
    pub bad_vertices: Vec<(usize, usize)>,
    /// Graph edges contained in no bag.
    pub uncovered_edges: Vec<(usize, usize)>,
    /// Vertices in no bag, or whose bags do not form a connected subtree.
    pub disconnected_vertices: Vec<usize>,
    pub width: Option<usize>,
    pub valid: bool,
}

pub fn validate_td(g: &Graph, td: &TreeDecomposition) -> TdValidation {
    let n = g.vertex_count();
    let is_tree = td.is_tree();
    let bad_vertices: Vec<(usize, usize)> =
        td.bags.iter().enumerate().flat_map(|(i, b)| b.iter().filter(|&&v| v >= n).map(move |&v| (i, v))).collect();

    // nodes containing each vertex
    let mut occ: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut bag_sets = Vec::with_capacity(td.node_count());
    for (i, bag) in td.bags.iter().enumerate() {
        let mut set = BitSet::new(n);
        for &v in bag.iter().filter(|&&v| v < n) {
            occ[v].push(i);
            set.insert(v);
        }
        bag_sets.push(set);
    }

    let uncovered_edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| !occ[u].iter().any(|&i| bag_sets[i].contains(v)))
        .collect();

    let disconnected_vertices: Vec<usize> = (0..n)
        .into_par_iter()
        .filter(|&v| {
            let nodes = &occ[v];
            if nodes.is_empty() {
                return true;
            }
            let mut seen = vec![false; td.node_count()];
            seen[nodes[0]] = true;
            let mut stack = vec![nodes[0]];
            let mut reached = 1;
            while let Some(a) = stack.pop() {
                for &b in &td.adj[a] {
                    if !seen[b] && bag_sets[b].contains(v) {
                        seen[b] = true;
                        reached += 1;
                        stack.push(b);
                    }
                }
            }
            reached != nodes.len()
        })
        .collect();

    let valid = is_tree && bad_vertices.is_empty() && uncovered_edges.is_empty() && disconnected_vertices.is_empty();
    TdValidation { is_tree, bad_vertices, uncovered_edges, disconnected_vertices, width: width(td).ok(), valid }
}

/// Realizes `tw <= max{Δ, |V| - |A| - 1}` for an independent set `A`:
/// node 0 carries `V ∖ A`, and each `a ∈ A` (ascending) gets a leaf with
/// bag `{a} ∪ N(a)`.
pub fn star_decomposition(g: &Graph, independent: &[usize]) -> Result<TreeDecomposition> {
    let n = g.vertex_count();
    let mut set: Vec<usize> = independent.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.is_empty() || set.len() >= n {
        return Err(Error::DegenerateInput(format!("independent set of size {} in a graph on {n} vertices", set.len())));
    }
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidArgs(format!("vertex {v} out of range")));
    }
    for (i, &a) in set.iter().enumerate() {
        if let Some(&b) = set[i + 1..].iter().find(|&&b| g.has_edge(a, b)) {
            return Err(Error::NotIndependent(a, b));
        }
    }
    let mut in_set = BitSet::new(n);
    for &a in &set {
        in_set.insert(a);
    }
    let mut bags = vec![(0..n).filter(|&v| !in_set.contains(v)).collect::<Vec<_>>()];
    let mut edges = Vec::with_capacity(set.len());
    for (i, &a) in set.iter().enumerate() {
        let mut bag: Vec<usize> = g.neighbors(a).iter().collect();
        bag.push(a);
        bags.push(bag);
        edges.push((0, i + 1));
    }
    TreeDecomposition::new(bags, &edges)
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    // both sorted
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
    }
    true
}

/// Contracts tree edges `{x, y}` with `B_x ⊆ B_y` into `y` until no adjacent
/// bags are nested. Surviving nodes keep their relative order.
pub fn normalize_td(td: &TreeDecomposition) -> TreeDecomposition {
    let n = td.node_count();
    let mut alive = vec![true; n];
    let mut adj: Vec<BTreeSet<usize>> = td.adj.iter().map(|r| r.iter().copied().collect()).collect();
    loop {
        let mut merged = None;
        'scan: for x in 0..n {
            if !alive[x] {
                continue;
            }
            for &y in &adj[x] {
                if is_subset(&td.bags[x], &td.bags[y]) {
                    merged = Some((x, y));
                    break 'scan;
                }
            }
        }
        let Some((x, y)) = merged else { break };
        alive[x] = false;
        let nbrs: Vec<usize> = std::mem::take(&mut adj[x]).into_iter().collect();
        for z in nbrs {
            adj[z].remove(&x);
            if z != y {
                adj[z].insert(y);
                adj[y].insert(z);
            }
        }
    }
    let mut new_index = vec![usize::MAX; n];
    let mut bags = Vec::new();
    for x in (0..n).filter(|&x| alive[x]) {
        new_index[x] = bags.len();
        bags.push(td.bags[x].clone());
    }
    let mut edges = Vec::new();
    for x in (0..n).filter(|&x| alive[x]) {
        for &y in adj[x].iter().filter(|&&y| y > x) {
            edges.push((new_index[x], new_index[y]));
        }
    }
    TreeDecomposition::new(bags, &edges).expect("contraction keeps a tree")
}

/// Whether each component of `G ∖ P` has at most `|V ∖ P| / 2` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatorReport {
    pub separator_size: usize,
    pub remaining: usize,
    pub component_sizes: Vec<usize>,
    pub balanced: bool,
}

pub fn balanced_separator_check(g: &Graph, separator: &[usize]) -> SeparatorReport {
    let n = g.vertex_count();
    let mut removed = BitSet::new(n);
    for &v in separator {
        removed.insert(v);
    }
    let separator_size = removed.count();
    let remaining = n - separator_size;
    let component_sizes: Vec<usize> = g.components_without(&removed).iter().map(Vec::len).collect();
    let balanced = component_sizes.iter().all(|&c| 2 * c <= remaining);
    SeparatorReport { separator_size, remaining, component_sizes, balanced }
}

fn tokens(line: &str) -> Vec<&str> {
    line.split_whitespace().collect()
}

fn number(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| parse(line, format!("expected a number, found '{tok}'")))
}

/// Data lines of a PACE file with 1-based line numbers, comments and blanks skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

/// Parses `p tw <n> <m>` followed by `m` edge lines `u v` (1-indexed).
pub fn read_gr(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| parse(1, "missing header"))?;
    let h = tokens(header);
    if h.len() != 4 || h[0] != "p" || h[1] != "tw" {
        return Err(parse(ln, format!("expected 'p tw <n> <m>', found '{header}'")));
    }
    let n = number(h[2], ln)?;
    let m = number(h[3], ln)?;
    let mut g = Graph::new(n);
    let mut seen = 0;
    for (ln, line) in lines {
        let t = tokens(line);
        if t.len() != 2 {
            return Err(parse(ln, format!("expected an edge 'u v', found '{line}'")));
        }
        let (u, v) = (number(t[0], ln)?, number(t[1], ln)?);
        if u == 0 || v == 0 || u > n || v > n {
            return Err(parse(ln, format!("vertex out of range 1..={n}")));
        }
        if u == v {
            return Err(parse(ln, format!("loop at vertex {u}")));
        }
        g.add_edge(u - 1, v - 1);
        seen += 1;
    }
    if seen != m {
        return Err(parse(text.lines().count().max(1), format!("header declares {m} edges, found {seen}")));
    }
    Ok(g)
}

pub fn write_gr(g: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Parses `s td <bags> <max bag size> <n>`, bag lines `b i v...` and tree
/// edges `i j`, all 1-indexed. Returns the decomposition and `n`.
pub fn read_td(text: &str) -> Result<(TreeDecomposition, usize)> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| parse(1, "missing header"))?;
    let h = tokens(header);
    if h.len() != 5 || h[0] != "s" || h[1] != "td" {
        return Err(parse(ln, format!("expected 's td <bags> <width+1> <n>', found '{header}'")));
    }
    let nb = number(h[2], ln)?;
    let declared = number(h[3], ln)?;
    let n = number(h[4], ln)?;
    let mut bags: Vec<Option<Vec<usize>>> = vec![None; nb];
    let mut edges = Vec::new();
    let mut last = ln;
    for (ln, line) in lines {
        last = ln;
        let t = tokens(line);
        if t[0] == "b" {
            let id = number(t.get(1).ok_or_else(|| parse(ln, "bag line without id"))?, ln)?;
            if id == 0 || id > nb {
                return Err(parse(ln, format!("bag id {id} out of range 1..={nb}")));
            }
            if bags[id - 1].is_some() {
                return Err(parse(ln, format!("bag {id} defined twice")));
            }
            let verts = t[2..]
                .iter()
                .map(|s| {
                    let v = number(s, ln)?;
                    if v == 0 || v > n {
                        return Err(parse(ln, format!("vertex {v} out of range 1..={n}")));
                    }
                    Ok(v - 1)
                })
                .collect::<Result<Vec<_>>>()?;
            bags[id - 1] = Some(verts);
        } else {
            if t.len() != 2 {
                return Err(parse(ln, format!("expected a tree edge 'i j', found '{line}'")));
            }
            let (a, b) = (number(t[0], ln)?, number(t[1], ln)?);
            if a == 0 || b == 0 || a > nb || b > nb || a == b {
                return Err(parse(ln, format!("bad tree edge '{line}'")));
            }
            edges.push((a - 1, b - 1));
        }
    }
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| parse(last, format!("bag {} missing", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    let td = TreeDecomposition::new(bags, &edges)?;
    if td.max_bag() != declared {
        return Err(parse(1, format!("header declares max bag size {declared}, found {}", td.max_bag())));
    }
    Ok((td, n))
}

pub fn write_td(td: &TreeDecomposition, vertex_count: usize) -> String {
    let mut out = format!("s td {} {} {}\n", td.node_count(), td.max_bag(), vertex_count);
    for (i, bag) in td.bags.iter().enumerate() {
        write!(out, "b {}", i + 1).unwrap();
        for v in bag {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    for (a, b) in td.edges() {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}
