//! Brute-force reference implementations used to cross-check the fast paths.
//!
//! Everything here recomputes from raw ring tables or raw adjacency and
//! shares no code with the modules it validates: ideal enumeration by
//! exhaustive subset scan, the annihilator-ideal adjacency straight from its
//! set-theoretic definition, and graph metrics by Floyd–Warshall and simple
//! cycle enumeration. Only usable at small orders.

use crate::graph::{ExtNat, IdealGraph};
use crate::ideal::Ideal;
use crate::ring::FiniteRing;

/// Every ideal of `ring`, found by scanning all subsets containing zero for
/// the ideal axioms. Exponential in the order; intended for order <= 16 or so.
pub fn all_ideals_subset_scan(ring: &FiniteRing) -> Vec<Vec<usize>> {
    let n = ring.order();
    assert!(n <= 24, "subset scan is exponential; order {n} is too large");
    let mut found = Vec::new();
    'mask: for mask in 0u32..(1u32 << n) {
        if mask & (1 << ring.zero()) == 0 {
            continue;
        }
        let elems: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        for &a in &elems {
            for &b in &elems {
                if mask & (1 << ring.add(a, b)) == 0 {
                    continue 'mask;
                }
            }
            for r in 0..n {
                if mask & (1 << ring.mul(r, a)) == 0 {
                    continue 'mask;
                }
            }
        }
        found.push(elems);
    }
    found.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    found
}

/// The annihilator-ideal adjacency computed from its definition: materialize
/// the product ideal `IJ`, take annihilators as element sets, and compare
/// `Ann(IJ)` with the set union `Ann(I) ∪ Ann(J)`.
pub fn ai_adjacent_by_definition(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> bool {
    assert_ne!(i, j, "adjacency is defined on distinct ideals");
    let prod = closure_of_products(ring, i.elements(), j.elements());
    let ann_ij = ann_set(ring, &prod);
    let mut union = ann_set(ring, i.elements());
    union.extend(ann_set(ring, j.elements()));
    union.sort_unstable();
    union.dedup();
    ann_ij != union
}

fn ann_set(ring: &FiniteRing, elems: &[usize]) -> Vec<usize> {
    (0..ring.order())
        .filter(|&r| elems.iter().all(|&a| ring.mul(r, a) == ring.zero()))
        .collect()
}

fn closure_of_products(ring: &FiniteRing, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut in_set = vec![false; ring.order()];
    in_set[ring.zero()] = true;
    let mut queue: Vec<usize> = vec![ring.zero()];
    for &x in a {
        for &y in b {
            let p = ring.mul(x, y);
            if !in_set[p] {
                in_set[p] = true;
                queue.push(p);
            }
        }
    }
    // close under addition, worklist style
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for k in 0..queue.len() {
            let s = ring.add(x, queue[k]);
            if !in_set[s] {
                in_set[s] = true;
                queue.push(s);
            }
        }
    }
    queue.sort_unstable();
    queue
}

/// All-pairs shortest paths by Floyd–Warshall; the diameter contract matches
/// the fast path (None for the empty graph, infinite when disconnected).
pub fn diameter_floyd_warshall(g: &IdealGraph) -> Option<ExtNat> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    const INF: usize = usize::MAX / 4;
    let mut d = vec![INF; n * n];
    for i in 0..n {
        d[i * n + i] = 0;
        for j in 0..n {
            if g.adjacent(i, j) {
                d[i * n + j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i * n + k].saturating_add(d[k * n + j]);
                if via < d[i * n + j] {
                    d[i * n + j] = via;
                }
            }
        }
    }
    let max = d.iter().max().copied().unwrap();
    if max >= INF {
        Some(ExtNat::Infinite)
    } else {
        Some(ExtNat::Finite(max))
    }
}

/// Girth by exhaustive simple-cycle search (DFS over paths from each root).
/// Factorial in the vertex count; for small synthetic graphs only.
pub fn girth_by_cycle_enumeration(g: &IdealGraph) -> ExtNat {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut path = Vec::new();
    let mut on_path = vec![false; n];
    fn dfs(
        g: &IdealGraph,
        root: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        best: &mut usize,
    ) {
        let last = *path.last().unwrap();
        for next in 0..g.vertex_count() {
            if !g.adjacent(last, next) || next < root {
                continue;
            }
            if next == root && path.len() >= 3 {
                *best = (*best).min(path.len());
            } else if !on_path[next] && path.len() + 1 < *best {
                path.push(next);
                on_path[next] = true;
                dfs(g, root, path, on_path, best);
                on_path[next] = false;
                path.pop();
            }
        }
    }
    for root in 0..n {
        path.clear();
        path.push(root);
        on_path.fill(false);
        on_path[root] = true;
        dfs(g, root, &mut path, &mut on_path, &mut best);
    }
    if best == usize::MAX {
        ExtNat::Infinite
    } else {
        ExtNat::Finite(best)
    }
}

/// Number of divisors of `n`; the ideal count of `Z_n`.
pub fn divisor_count(n: usize) -> usize {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count()
}
