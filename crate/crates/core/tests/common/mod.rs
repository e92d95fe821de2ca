//! Brute-force oracles. Each one follows a definition directly and uses
//! nothing from the library beyond adjacency queries.
#![allow(dead_code)]

use packlab::Graph;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Every labeled graph on `n` vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let ps = pairs(n);
    (0u64..1 << ps.len()).map(move |mask| {
        let mut g = Graph::new(n);
        for (i, &(u, v)) in ps.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn edges(g: &Graph) -> Vec<(usize, usize)> {
    pairs(g.order()).into_iter().filter(|&(u, v)| g.has_edge(u, v)).collect()
}

pub fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.order()).map(|v| (0..g.order()).filter(|&u| g.has_edge(u, v)).count()).collect();
    d.sort_unstable();
    d
}

fn shares_edge(a: &Graph, b: &Graph) -> bool {
    edges(a).into_iter().any(|(u, v)| b.has_edge(u, v))
}

/// `map[v]` is the image of `v`.
pub fn is_embedding(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    edges(g).into_iter().all(|(u, v)| h.has_edge(map[u], map[v]))
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && sorted_degrees(a) == sorted_degrees(b)
        && edges(a).len() == edges(b).len()
        && permutations(a.order()).iter().any(|p| is_embedding(a, b, p))
}

/// Some copy of `g1` avoids every edge of `g2`.
pub fn embed_packs(g1: &Graph, g2: &Graph) -> bool {
    let g2c = complement(g2);
    permutations(g1.order()).iter().any(|p| is_embedding(g1, &g2c, p))
}

/// Some graph with `g1`'s degree multiset avoids every edge of `g2`.
pub fn sequence_packs(g1: &Graph, g2: &Graph) -> bool {
    let target = sorted_degrees(g1);
    labeled_graphs(g1.order()).any(|h| sorted_degrees(&h) == target && !shares_edge(&h, g2))
}

pub fn complement(g: &Graph) -> Graph {
    let mut c = Graph::new(g.order());
    for (u, v) in pairs(g.order()) {
        if !g.has_edge(u, v) {
            c.add_edge(u, v);
        }
    }
    c
}

/// A spanning subgraph of `g` with degree `f[v]` at each `v`.
pub fn has_f_factor(g: &Graph, f: &[usize]) -> bool {
    let es = edges(g);
    (0u64..1 << es.len()).any(|mask| {
        let mut deg = vec![0; g.order()];
        for (i, &(u, v)) in es.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg == f
    })
}

/// A vertex partition into a clique and an independent set.
pub fn is_split(g: &Graph) -> bool {
    let n = g.order();
    (0u64..1 << n).any(|k| {
        pairs(n).into_iter().all(|(u, v)| {
            let (ku, kv) = (k >> u & 1 == 1, k >> v & 1 == 1);
            if ku && kv {
                g.has_edge(u, v)
            } else if !ku && !kv {
                !g.has_edge(u, v)
            } else {
                true
            }
        })
    })
}

/// Every labeled graph with `g`'s degree sequence is isomorphic to `g`.
pub fn is_unigraph(g: &Graph) -> bool {
    let target = sorted_degrees(g);
    labeled_graphs(g.order()).filter(|h| sorted_degrees(h) == target).all(|h| isomorphic(&h, g))
}

/// Some vertex set, pairwise adjacent, that every vertex meets or neighbors.
pub fn has_dominating_clique(g: &Graph) -> bool {
    let n = g.order();
    (0u64..1 << n).any(|k| {
        let members: Vec<usize> = (0..n).filter(|&v| k >> v & 1 == 1).collect();
        members.iter().all(|&u| members.iter().all(|&v| u == v || g.has_edge(u, v)))
            && (0..n).all(|v| k >> v & 1 == 1 || members.iter().any(|&u| g.has_edge(u, v)))
    })
}

pub fn max_degree(g: &Graph) -> usize {
    sorted_degrees(g).last().copied().unwrap_or(0)
}

pub fn min_degree(g: &Graph) -> usize {
    sorted_degrees(g).first().copied().unwrap_or(0)
}

pub fn is_forest(g: &Graph) -> bool {
    // Union-find: a forest never closes a cycle.
    let mut parent: Vec<usize> = (0..g.order()).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    edges(g).into_iter().all(|(u, v)| {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
        a != b
    })
}

/// Proper and balanced: classes partition the vertices, are independent,
/// and differ in size by at most one.
pub fn is_equitable(g: &Graph, classes: &[Vec<usize>]) -> bool {
    let mut all: Vec<usize> = classes.concat();
    all.sort_unstable();
    let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
    all == (0..g.order()).collect::<Vec<_>>()
        && classes.iter().all(|c| c.iter().all(|&u| c.iter().all(|&v| !g.has_edge(u, v))))
        && sizes.iter().max().unwrap_or(&0) - sizes.iter().min().unwrap_or(&0) <= 1
}
