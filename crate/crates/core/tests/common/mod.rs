//! Independent brute-force oracles shared by the integration tests.

/// Treewidth as the minimum over all elimination orderings of the largest
/// number of later neighbours, with fill-in kept as adjacency matrices.
pub fn brute_treewidth(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    permute(&mut order, 0, &mut |ord| {
        let mut a = adj.clone();
        let mut gone = vec![false; n];
        let mut width = 0;
        for &v in ord {
            let later: Vec<usize> = (0..n).filter(|&w| a[v][w] && !gone[w]).collect();
            width = width.max(later.len());
            for &x in &later {
                for &y in &later {
                    if x != y {
                        a[x][y] = true;
                    }
                }
            }
            gone[v] = true;
        }
        best = best.min(width);
    });
    best
}

fn permute(v: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i == v.len() {
        f(v);
        return;
    }
    for j in i..v.len() {
        v.swap(i, j);
        permute(v, i + 1, f);
        v.swap(i, j);
    }
}
