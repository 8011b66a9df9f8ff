//! Exhaustive enumeration of small graphs up to isomorphism, by vertex
//! augmentation with canonical-form deduplication. Intended for n <= 8 or so.

use std::collections::HashSet;

use crate::graph::{Graph, Labeling};

/// Edge `{i, j}` (0-based, i < j) packed at a position independent of n.
fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

fn mask_of(g: &Graph) -> u64 {
    let mut mask = 0u64;
    for (u, v) in g.edges() {
        mask |= 1 << pair_index(u - 1, v - 1);
    }
    mask
}

fn graph_of(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if mask >> pair_index(i, j) & 1 == 1 {
                edges.push((i + 1, j + 1));
            }
        }
    }
    Graph::new(n, &edges).expect("mask encodes a valid graph")
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(cur, k + 1, out);
            cur.swap(k, i);
        }
    }
    rec(&mut cur, 0, &mut out);
    out
}

/// Per-permutation tables mapping each packed edge slot to its image.
fn remap_tables(n: usize) -> Vec<Vec<usize>> {
    all_perms(n)
        .into_iter()
        .map(|p| {
            let mut table = vec![0; n * (n - 1) / 2];
            for j in 1..n {
                for i in 0..j {
                    let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
                    table[pair_index(i, j)] = pair_index(a, b);
                }
            }
            table
        })
        .collect()
}

fn remap(mask: u64, table: &[usize]) -> u64 {
    let mut out = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let bit = rest.trailing_zeros() as usize;
        out |= 1 << table[bit];
        rest &= rest - 1;
    }
    out
}

fn canonical(mask: u64, tables: &[Vec<usize>]) -> u64 {
    tables.iter().map(|t| remap(mask, t)).min().unwrap()
}

/// All connected graphs on exactly `n` vertices, one per isomorphism class.
/// Built level by level: every connected graph keeps a non-cut vertex, so it
/// arises from a connected graph on one fewer vertex by attaching a new
/// vertex along a nonempty neighbor set.
pub fn connected_graphs_upto_iso(n: usize) -> Vec<Graph> {
    assert!((1..=8).contains(&n), "enumeration is meant for 1..=8 vertices");
    let mut level: Vec<u64> = vec![0]; // the single vertex
    for k in 2..=n {
        let tables = remap_tables(k);
        let mut seen: HashSet<u64> = HashSet::new();
        for &mask in &level {
            for subset in 1u64..(1 << (k - 1)) {
                let mut candidate = mask;
                let mut rest = subset;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    candidate |= 1 << pair_index(v, k - 1);
                    rest &= rest - 1;
                }
                seen.insert(canonical(candidate, &tables));
            }
        }
        let mut next: Vec<u64> = seen.into_iter().collect();
        next.sort_unstable();
        level = next;
    }
    level.into_iter().map(|mask| graph_of(n, mask)).collect()
}

/// The distinct labeled graphs isomorphic to `g`: all relabelings, deduped.
/// Their count is `n! / |Aut(g)|`.
pub fn labeled_copies(g: &Graph) -> Vec<Graph> {
    let n = g.n();
    let tables = remap_tables(n);
    let mask = mask_of(g);
    let mut seen: Vec<u64> = tables.iter().map(|t| remap(mask, t)).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.into_iter().map(|m| graph_of(n, m)).collect()
}

/// All `n!` labelings of `1..=n` in lexicographic order.
pub fn all_labelings(n: usize) -> Vec<Labeling> {
    all_perms(n)
        .into_iter()
        .map(|p| Labeling::new(p.into_iter().map(|v| v + 1).collect()).unwrap())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_counts() {
        // classical counts of connected graphs up to isomorphism
        let expected = [1usize, 1, 2, 6, 21, 112];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(connected_graphs_upto_iso(i + 1).len(), count, "n = {}", i + 1);
        }
    }

    #[test]
    fn copies_counts() {
        // C4 has 8 automorphisms: 4!/8 = 3 labeled copies
        assert_eq!(labeled_copies(&Graph::cycle(4)).len(), 3);
        // P4 has 2: 12 copies
        assert_eq!(labeled_copies(&Graph::path(4)).len(), 12);
        // complete graphs have a single labeled copy
        assert_eq!(labeled_copies(&Graph::complete(5)).len(), 1);
    }
}
