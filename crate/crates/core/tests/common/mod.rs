//! Brute-force references that share no code with the library's search paths.
#![allow(dead_code)]

use clique_isolation::Graph;

/// Adjacency matrix built straight from the edge list.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

fn subsets_of_size(n: usize, k: usize) -> Vec<u32> {
    (0u32..1 << n).filter(|s| s.count_ones() as usize == k).collect()
}

fn is_clique(m: &[Vec<bool>], s: u32) -> bool {
    let vs: Vec<usize> = (0..m.len()).filter(|&i| s >> i & 1 == 1).collect();
    vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| m[a][b]))
}

/// All k-cliques as sorted member lists, sorted lexicographically.
pub fn naive_cliques(m: &[Vec<bool>], k: usize) -> Vec<Vec<usize>> {
    let n = m.len();
    let mut out: Vec<Vec<usize>> = subsets_of_size(n, k)
        .into_iter()
        .filter(|&s| is_clique(m, s))
        .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// Vertices outside `N[d]` (bitmask).
fn residual(m: &[Vec<bool>], d: u32) -> u32 {
    let n = m.len();
    let mut covered = 0u32;
    for v in 0..n {
        if d >> v & 1 == 1 {
            covered |= 1 << v;
            for w in 0..n {
                if m[v][w] {
                    covered |= 1 << w;
                }
            }
        }
    }
    !covered & ((1u64 << n) - 1) as u32
}

pub fn naive_isolates(m: &[Vec<bool>], k: usize, d: u32) -> bool {
    let r = residual(m, d);
    !subsets_of_size(m.len(), k).into_iter().any(|s| s & !r == 0 && is_clique(m, s))
}

pub fn naive_iota(m: &[Vec<bool>], k: usize) -> usize {
    let n = m.len();
    (0..=n)
        .find(|&size| subsets_of_size(n, size).into_iter().any(|d| naive_isolates(m, k, d)))
        .unwrap()
}

/// Smallest dominating set size by exhaustive search.
pub fn naive_domination(m: &[Vec<bool>]) -> usize {
    let n = m.len();
    let full = ((1u64 << n) - 1) as u32;
    (0..=n)
        .find(|&size| {
            subsets_of_size(n, size).into_iter().any(|d| {
                let mut dom = 0u32;
                for v in 0..n {
                    if d >> v & 1 == 1 {
                        dom |= 1 << v;
                        for w in 0..n {
                            if m[v][w] {
                                dom |= 1 << w;
                            }
                        }
                    }
                }
                dom == full
            })
        })
        .unwrap()
}

/// Union-find connectivity.
pub fn naive_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let root = find(&mut parent, 0);
    (0..n).all(|v| find(&mut parent, v) == root)
}

/// Counts connected labeled graphs on `n` vertices by direct enumeration.
pub fn count_connected_labeled(n: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..a).map(move |b| (b, a))).collect();
    let mut count = 0;
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        if naive_connected(n, &edges) {
            count += 1;
        }
    }
    count
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .zip(bits.iter())
        .filter(|(_, &b)| b)
        .map(|(e, _)| e);
    Graph::from_edges(n, edges).unwrap()
}
