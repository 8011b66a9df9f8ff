//! Closed-graph recognition (equivalently, proper interval graphs).
//!
//! A labeling of a graph is *closed* when for any `i<j<k` or `i>j>k`, if
//! `{i,j}` and `{i,k}` are edges then so is `{j,k}`. A graph is closed when
//! some labeling is. Recognition goes through the forbidden-structure
//! characterization: a graph is closed iff every component is chordal,
//! claw-free, and contains no induced net or 3-sun. A closed labeling is
//! built constructively by peeling a simplicial vertex and reinserting it
//! into the interval-facet structure of the rest.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{Graph, Labeling};

/// Default vertex cap for the factorial brute-force oracle.
pub const BRUTE_FORCE_DEFAULT_CAP: usize = 8;

/// A vertex order where each vertex's earlier neighbors form a clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Peo {
    pub order: Vec<usize>,
}

/// Maximal cliques as integer intervals `[a, b]` under some labeling,
/// with strictly increasing minima.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalFacetList {
    pub facets: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClawWitness {
    pub center: usize,
    pub leaves: [usize; 3],
}

/// Triangle with one pendant vertex per corner; `pendants[k]` is attached to
/// `triangle[k]` and to nothing else among the six.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetWitness {
    pub triangle: [usize; 3],
    pub pendants: [usize; 3],
}

/// Inner triangle plus three outer vertices; `outer[k]` is adjacent to the
/// two inner vertices other than `inner[k]`, and the outer vertices are
/// pairwise non-adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SunWitness {
    pub inner: [usize; 3],
    pub outer: [usize; 3],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SixPattern {
    Net,
    Sun,
}

/// Outcome of the closedness decision: either a closed labeling with its
/// interval facets, or the first obstruction found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ClosednessCertificate {
    ClosedLabeling {
        labeling: Labeling,
        facets: IntervalFacetList,
    },
    InducedCycle {
        vertices: Vec<usize>,
    },
    Claw(ClawWitness),
    Net(NetWitness),
    Sun(SunWitness),
}

impl ClosednessCertificate {
    pub fn is_closed(&self) -> bool {
        matches!(self, ClosednessCertificate::ClosedLabeling { .. })
    }

    /// Checks that the witness actually induces the claimed pattern.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            ClosednessCertificate::ClosedLabeling { labeling, facets } => {
                verify_closed_labeling(g, labeling)
                    && interval_facets(g, labeling).as_ref() == Some(facets)
            }
            ClosednessCertificate::InducedCycle { vertices } => verify_cycle(g, vertices),
            ClosednessCertificate::Claw(w) => w.verify(g),
            ClosednessCertificate::Net(w) => w.verify(g),
            ClosednessCertificate::Sun(w) => w.verify(g),
        }
    }
}

impl ClawWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        let [a, b, c] = self.leaves;
        let mut all = vec![self.center, a, b, c];
        all.sort_unstable();
        all.dedup();
        all.len() == 4
            && g.has_edge(self.center, a)
            && g.has_edge(self.center, b)
            && g.has_edge(self.center, c)
            && !g.has_edge(a, b)
            && !g.has_edge(a, c)
            && !g.has_edge(b, c)
    }
}

impl NetWitness {
    pub fn vertices(&self) -> [usize; 6] {
        let [t1, t2, t3] = self.triangle;
        let [p1, p2, p3] = self.pendants;
        [t1, t2, t3, p1, p2, p3]
    }

    pub fn verify(&self, g: &Graph) -> bool {
        let vs = self.vertices();
        let mut sorted = vs.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != 6 {
            return false;
        }
        let t = self.triangle;
        let p = self.pendants;
        // exactly the triangle edges plus one pendant edge per corner
        for i in 0..3 {
            for j in (i + 1)..3 {
                if !g.has_edge(t[i], t[j]) || g.has_edge(p[i], p[j]) {
                    return false;
                }
            }
            for j in 0..3 {
                if (i == j) != g.has_edge(t[j], p[i]) {
                    return false;
                }
            }
        }
        true
    }
}

impl SunWitness {
    pub fn vertices(&self) -> [usize; 6] {
        let [t1, t2, t3] = self.inner;
        let [w1, w2, w3] = self.outer;
        [t1, t2, t3, w1, w2, w3]
    }

    pub fn verify(&self, g: &Graph) -> bool {
        let vs = self.vertices();
        let mut sorted = vs.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != 6 {
            return false;
        }
        let t = self.inner;
        let w = self.outer;
        for i in 0..3 {
            for j in (i + 1)..3 {
                if !g.has_edge(t[i], t[j]) || g.has_edge(w[i], w[j]) {
                    return false;
                }
            }
            // outer k is adjacent to exactly the inner vertices other than k
            for j in 0..3 {
                if (i != j) != g.has_edge(w[i], t[j]) {
                    return false;
                }
            }
        }
        true
    }
}

fn verify_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return false;
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if consecutive != g.has_edge(cycle[i], cycle[j]) {
                return false;
            }
        }
    }
    true
}

/// Maximum-cardinality search visit order, ties broken by lowest vertex.
/// Visits components one after another.
fn mcs_order(g: &Graph, verts: &[usize]) -> Vec<usize> {
    let in_set: BTreeSet<usize> = verts.iter().copied().collect();
    let mut weight: HashMap<usize, usize> = verts.iter().map(|&v| (v, 0)).collect();
    let mut visited: BTreeSet<usize> = BTreeSet::new();
    let mut order = Vec::with_capacity(verts.len());
    for _ in 0..verts.len() {
        let mut best: Option<(usize, usize)> = None; // (weight, vertex)
        for (&v, &w) in &weight {
            if visited.contains(&v) {
                continue;
            }
            let better = match best {
                None => true,
                Some((bw, bv)) => w > bw || (w == bw && v < bv),
            };
            if better {
                best = Some((w, v));
            }
        }
        let v = best.expect("nonempty").1;
        visited.insert(v);
        order.push(v);
        for u in g.neighbors(v) {
            if in_set.contains(&u) && !visited.contains(&u) {
                *weight.get_mut(&u).unwrap() += 1;
            }
        }
    }
    order
}

/// True iff each vertex's earlier neighbors (within `order`) form a clique.
fn dirac_ok(g: &Graph, order: &[usize]) -> bool {
    let mut pos: HashMap<usize, usize> = HashMap::new();
    for (i, &v) in order.iter().enumerate() {
        pos.insert(v, i);
    }
    for (i, &v) in order.iter().enumerate() {
        let earlier: Vec<usize> = g
            .neighbors(v)
            .filter(|u| pos.get(u).is_some_and(|&p| p < i))
            .collect();
        for (ai, &a) in earlier.iter().enumerate() {
            for &b in &earlier[ai + 1..] {
                if !g.has_edge(a, b) {
                    return false;
                }
            }
        }
    }
    true
}

/// Finds an induced cycle of length >= 4, if one exists.
///
/// For every vertex `v` and non-adjacent pair `a, b` of its neighbors, a
/// shortest `a`-`b` path avoiding the rest of `N[v]` closes to a chordless
/// cycle through `v`; conversely any hole yields such a triple.
fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    for v in g.vertices() {
        let nb: Vec<usize> = g.neighbors(v).collect();
        for (ai, &a) in nb.iter().enumerate() {
            for &b in &nb[ai + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut blocked = vec![false; g.n() + 1];
                blocked[v] = true;
                for w in g.neighbors(v) {
                    if w != a && w != b {
                        blocked[w] = true;
                    }
                }
                if let Some(path) = bfs_path(g, a, b, &blocked) {
                    let mut cycle = Vec::with_capacity(path.len() + 1);
                    cycle.push(v);
                    cycle.extend(path);
                    debug_assert!(verify_cycle(g, &cycle));
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn bfs_path(g: &Graph, from: usize, to: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let mut prev: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    queue.push_back(from);
    prev.insert(from, from);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[&cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for u in g.neighbors(v) {
            if !blocked[u] && !prev.contains_key(&u) {
                prev.insert(u, v);
                queue.push_back(u);
            }
        }
    }
    None
}

/// Returns a perfect elimination order if the graph is chordal, otherwise an
/// induced cycle of length >= 4. Works component by component.
pub fn perfect_elimination_order(g: &Graph) -> Result<Peo, Vec<usize>> {
    let all: Vec<usize> = g.vertices().collect();
    let order = mcs_order(g, &all);
    if dirac_ok(g, &order) {
        Ok(Peo { order })
    } else {
        Err(find_hole(g).expect("MCS order failed the clique check, so a hole exists"))
    }
}

/// Finds an induced `K_{1,3}`, if any.
pub fn find_claw(g: &Graph) -> Option<ClawWitness> {
    for c in g.vertices() {
        if g.degree(c) < 3 {
            continue;
        }
        let nb: Vec<usize> = g.neighbors(c).collect();
        for i in 0..nb.len() {
            for j in (i + 1)..nb.len() {
                if g.has_edge(nb[i], nb[j]) {
                    continue;
                }
                for k in (j + 1)..nb.len() {
                    if !g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]) {
                        return Some(ClawWitness {
                            center: c,
                            leaves: [nb[i], nb[j], nb[k]],
                        });
                    }
                }
            }
        }
    }
    None
}

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for t1 in g.vertices() {
        for t2 in g.neighbors(t1).filter(|&t2| t2 > t1) {
            for t3 in g.neighbors(t1).filter(|&t3| t3 > t2) {
                if g.has_edge(t2, t3) {
                    out.push([t1, t2, t3]);
                }
            }
        }
    }
    out
}

/// Finds an induced net, if any.
pub fn find_net(g: &Graph) -> Option<NetWitness> {
    for tri in triangles(g) {
        let cand = |k: usize| -> Vec<usize> {
            g.neighbors(tri[k])
                .filter(|&p| {
                    !tri.contains(&p) && (0..3).all(|j| j == k || !g.has_edge(p, tri[j]))
                })
                .collect()
        };
        let (c1, c2, c3) = (cand(0), cand(1), cand(2));
        for &p1 in &c1 {
            for &p2 in &c2 {
                if p2 == p1 || g.has_edge(p1, p2) {
                    continue;
                }
                for &p3 in &c3 {
                    if p3 != p1 && p3 != p2 && !g.has_edge(p1, p3) && !g.has_edge(p2, p3) {
                        return Some(NetWitness {
                            triangle: tri,
                            pendants: [p1, p2, p3],
                        });
                    }
                }
            }
        }
    }
    None
}

/// Finds an induced 3-sun, if any.
pub fn find_sun(g: &Graph) -> Option<SunWitness> {
    for tri in triangles(g) {
        // outer k: adjacent to both inner vertices other than k, not to k
        let cand = |k: usize| -> Vec<usize> {
            g.vertices()
                .filter(|&w| {
                    !tri.contains(&w) && (0..3).all(|j| (j != k) == g.has_edge(w, tri[j]))
                })
                .collect()
        };
        let (c1, c2, c3) = (cand(0), cand(1), cand(2));
        for &w1 in &c1 {
            for &w2 in &c2 {
                if w2 == w1 || g.has_edge(w1, w2) {
                    continue;
                }
                for &w3 in &c3 {
                    if w3 != w1 && w3 != w2 && !g.has_edge(w1, w3) && !g.has_edge(w2, w3) {
                        return Some(SunWitness {
                            inner: tri,
                            outer: [w1, w2, w3],
                        });
                    }
                }
            }
        }
    }
    None
}

/// Six vertices inducing the requested pattern, in canonical order
/// (triangle then attachments), or `None`.
pub fn find_forbidden_six(g: &Graph, pattern: SixPattern) -> Option<[usize; 6]> {
    match pattern {
        SixPattern::Net => find_net(g).map(|w| w.vertices()),
        SixPattern::Sun => find_sun(g).map(|w| w.vertices()),
    }
}

/// Literal check of the defining condition over all ordered triples of the
/// relabeled graph.
pub fn verify_closed_labeling(g: &Graph, lab: &Labeling) -> bool {
    let h = g.relabel(lab);
    let n = h.n();
    for a in 1..=n {
        for b in (a + 1)..=n {
            for c in (b + 1)..=n {
                // i < j < k with i = a
                if h.has_edge(a, b) && h.has_edge(a, c) && !h.has_edge(b, c) {
                    return false;
                }
                // i > j > k with i = c
                if h.has_edge(c, b) && h.has_edge(c, a) && !h.has_edge(b, a) {
                    return false;
                }
            }
        }
    }
    true
}

/// All maximal cliques (Bron-Kerbosch with pivoting), sorted.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    fn bk(
        g: &Graph,
        r: &mut Vec<usize>,
        p: Vec<usize>,
        x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            let mut clique = r.clone();
            clique.sort_unstable();
            out.push(clique);
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| g.has_edge(u, v)).count())
            .unwrap();
        let mut p = p;
        let mut x = x;
        let branch: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
        for v in branch {
            let np: Vec<usize> = p.iter().copied().filter(|&u| g.has_edge(u, v)).collect();
            let nx: Vec<usize> = x.iter().copied().filter(|&u| g.has_edge(u, v)).collect();
            r.push(v);
            bk(g, r, np, nx, out);
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    bk(g, &mut Vec::new(), g.vertices().collect(), Vec::new(), &mut out);
    out.sort();
    out
}

/// Relabels and returns the maximal cliques as intervals sorted by minimum,
/// provided every one of them is an interval.
pub fn interval_facets(g: &Graph, lab: &Labeling) -> Option<IntervalFacetList> {
    let h = g.relabel(lab);
    let mut facets = Vec::new();
    for clique in maximal_cliques(&h) {
        let lo = *clique.first().unwrap();
        let hi = *clique.last().unwrap();
        if hi - lo + 1 != clique.len() {
            return None;
        }
        facets.push((lo, hi));
    }
    facets.sort_unstable();
    Some(IntervalFacetList { facets })
}

// --- constructive closed labeling -----------------------------------------

/// Per-component labeling state: original vertex -> label in `1..=s`, and the
/// facet intervals under that labeling (minima strictly increasing).
struct PartialLabeling {
    labels: HashMap<usize, usize>,
    facets: Vec<(usize, usize)>,
}

fn set_equals_interval(set: &BTreeSet<usize>, (a, b): (usize, usize)) -> bool {
    set.len() == b - a + 1
        && *set.iter().next().unwrap() == a
        && *set.iter().next_back().unwrap() == b
}

fn set_within_interval(set: &BTreeSet<usize>, (a, b): (usize, usize)) -> bool {
    *set.iter().next().unwrap() >= a && *set.iter().next_back().unwrap() <= b
}

impl PartialLabeling {
    fn singleton(v: usize) -> Self {
        PartialLabeling {
            labels: HashMap::from([(v, 1)]),
            facets: vec![(1, 1)],
        }
    }

    fn size(&self) -> usize {
        self.labels.len()
    }

    /// Mirror the labeling: label `l` becomes `s + 1 - l`.
    fn reverse(&mut self) {
        let s = self.size();
        for l in self.labels.values_mut() {
            *l = s + 1 - *l;
        }
        for f in self.facets.iter_mut() {
            *f = (s + 1 - f.1, s + 1 - f.0);
        }
        self.facets.reverse();
    }

    /// Within the label window `[lo, hi]`, move the labels in `top` above the
    /// rest, preserving relative order inside both groups. The window must be
    /// contained in every facet it meets, so facets are unchanged as sets.
    fn permute_window(&mut self, lo: usize, hi: usize, top: &BTreeSet<usize>) {
        let mut window: Vec<(usize, usize)> = self
            .labels
            .iter()
            .filter(|&(_, &l)| lo <= l && l <= hi)
            .map(|(&v, &l)| (l, v))
            .collect();
        window.sort_unstable();
        let mut next = lo;
        for &(l, v) in window.iter().filter(|(l, _)| !top.contains(l)) {
            debug_assert!(!top.contains(&l));
            self.labels.insert(v, next);
            next += 1;
        }
        for &(_, v) in window.iter().filter(|(l, _)| top.contains(l)) {
            self.labels.insert(v, next);
            next += 1;
        }
        debug_assert_eq!(next, hi + 1);
    }

    /// Insert `z`, whose neighbors carry the labels `nbrs` (a nonempty clique
    /// contained in the last facet). Returns false when the insertion rules
    /// admit no closed extension.
    fn insert_into_last(&mut self, z: usize, nbrs: &BTreeSet<usize>) -> bool {
        let s = self.size();
        let r = self.facets.len();
        let (a_r, b_r) = self.facets[r - 1];
        debug_assert_eq!(b_r, s);
        let prev_top = if r >= 2 { self.facets[r - 2].1 } else { 0 };
        let l_min = *nbrs.iter().next().unwrap();
        let ell = nbrs.len();
        if l_min > prev_top {
            // all neighbors are free vertices of the last facet
            self.permute_window(prev_top + 1, s, nbrs);
        } else {
            // first facet meeting the neighbor set
            let j = self
                .facets
                .iter()
                .position(|&(a, b)| nbrs.iter().any(|&l| a <= l && l <= b))
                .unwrap();
            let (_, b_j) = self.facets[j];
            // every vertex of the last facet beyond that one must be a neighbor,
            // else the graph has an induced claw
            if !((b_j + 1)..=s).all(|l| nbrs.contains(&l)) {
                return false;
            }
            let w_lo = if j >= 1 {
                (self.facets[j - 1].1 + 1).max(a_r)
            } else {
                a_r
            };
            let in_window: BTreeSet<usize> = nbrs.iter().copied().filter(|&l| l <= b_j).collect();
            debug_assert!(in_window.iter().all(|&l| l >= w_lo));
            self.permute_window(w_lo, b_j, &in_window);
        }
        self.labels.insert(z, s + 1);
        self.facets.push((s + 1 - ell, s + 1));
        true
    }

    /// Insert `z` with neighbor labels `nbrs`, following the case analysis on
    /// where the neighbor clique sits in the facet structure. Preference:
    /// extend a facet in place, then relabel free vertices, then relabel an
    /// intersection window.
    fn insert(&mut self, z: usize, nbrs: &BTreeSet<usize>) -> bool {
        let s = self.size();
        debug_assert!(!nbrs.is_empty());
        let r = self.facets.len();
        if let Some(t) = self
            .facets
            .iter()
            .position(|&f| set_equals_interval(nbrs, f))
        {
            if t == r - 1 {
                self.labels.insert(z, s + 1);
                self.facets[t].1 = s + 1;
                return true;
            }
            if t == 0 {
                self.reverse();
                self.labels.insert(z, s + 1);
                self.facets.last_mut().unwrap().1 = s + 1;
                return true;
            }
            // interior facet: insertion is only possible when the flanking
            // facets are disjoint
            if self.facets[t - 1].1 >= self.facets[t + 1].0 {
                return false;
            }
            let c = self.facets[t + 1].0;
            for l in self.labels.values_mut() {
                if *l >= c {
                    *l += 1;
                }
            }
            self.labels.insert(z, c);
            self.facets[t].1 += 1;
            for f in self.facets[(t + 1)..].iter_mut() {
                f.0 += 1;
                f.1 += 1;
            }
            return true;
        }
        if set_within_interval(nbrs, self.facets[r - 1]) {
            return self.insert_into_last(z, nbrs);
        }
        if set_within_interval(nbrs, self.facets[0]) {
            self.reverse();
            let mirrored: BTreeSet<usize> = nbrs.iter().map(|&l| s + 1 - l).collect();
            return self.insert_into_last(z, &mirrored);
        }
        // neighbor clique fits only inside interior facets, properly: the
        // graph then contains a claw or a net
        false
    }
}

fn label_component(g: &Graph, verts: &[usize]) -> Option<PartialLabeling> {
    if verts.len() == 1 {
        return Some(PartialLabeling::singleton(verts[0]));
    }
    let order = mcs_order(g, verts);
    if !dirac_ok(g, &order) {
        return None;
    }
    // the last vertex of the search order is simplicial, so removing it
    // keeps the component connected
    let z = *order.last().unwrap();
    let rest: Vec<usize> = verts.iter().copied().filter(|&v| v != z).collect();
    let mut partial = label_component(g, &rest)?;
    let nbrs: BTreeSet<usize> = g
        .neighbors(z)
        .filter(|w| partial.labels.contains_key(w))
        .map(|w| partial.labels[&w])
        .collect();
    if partial.insert(z, &nbrs) {
        Some(partial)
    } else {
        None
    }
}

/// Builds a labeling under which every maximal clique is an interval, with
/// facet minima strictly increasing inside each component. Components are
/// labeled in consecutive blocks, ordered by smallest original vertex.
/// Returns `None` exactly when no closed labeling exists.
pub fn closed_labeling(g: &Graph) -> Option<(Labeling, IntervalFacetList)> {
    let mut perm = vec![0usize; g.n()];
    let mut facets = Vec::new();
    let mut offset = 0;
    for comp in g.components() {
        let partial = label_component(g, &comp)?;
        for (&v, &l) in &partial.labels {
            perm[v - 1] = offset + l;
        }
        for &(a, b) in &partial.facets {
            facets.push((offset + a, offset + b));
        }
        offset += comp.len();
    }
    let lab = Labeling::new(perm).expect("component labels form a permutation");
    debug_assert!(verify_closed_labeling(g, &lab));
    facets.sort_unstable();
    Some((lab, IntervalFacetList { facets }))
}

/// Decides closedness, returning a closed labeling or the first obstruction
/// (hole, then claw, then net, then sun).
pub fn is_closed(g: &Graph) -> ClosednessCertificate {
    if let Err(cycle) = perfect_elimination_order(g) {
        return ClosednessCertificate::InducedCycle { vertices: cycle };
    }
    if let Some(claw) = find_claw(g) {
        return ClosednessCertificate::Claw(claw);
    }
    if let Some(net) = find_net(g) {
        return ClosednessCertificate::Net(net);
    }
    if let Some(sun) = find_sun(g) {
        return ClosednessCertificate::Sun(sun);
    }
    let (labeling, facets) =
        closed_labeling(g).expect("obstruction-free graph must admit a closed labeling");
    ClosednessCertificate::ClosedLabeling { labeling, facets }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Exhaustive oracle: tries all `n!` labelings in lexicographic order and
/// returns the first closed one.
pub fn brute_force_closed(g: &Graph) -> Result<Option<Labeling>, GraphError> {
    brute_force_closed_with_cap(g, BRUTE_FORCE_DEFAULT_CAP)
}

pub fn brute_force_closed_with_cap(
    g: &Graph,
    cap: usize,
) -> Result<Option<Labeling>, GraphError> {
    if g.n() > cap {
        return Err(GraphError::CapExceeded(g.n(), cap));
    }
    let mut perm: Vec<usize> = (1..=g.n()).collect();
    loop {
        let lab = Labeling::new(perm.clone()).unwrap();
        if verify_closed_labeling(g, &lab) {
            return Ok(Some(lab));
        }
        if !next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{h1_net, h2_sun};

    #[test]
    fn peo_outputs() {
        assert!(matches!(
            perfect_elimination_order(&Graph::cycle(4)),
            Err(c) if c.len() == 4
        ));
        assert!(perfect_elimination_order(&h1_net()).is_ok());
        let k5 = Graph::complete(5);
        let peo = perfect_elimination_order(&k5).unwrap();
        assert_eq!(peo.order.len(), 5);
    }

    #[test]
    fn claw_detection() {
        let star = Graph::new(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        let w = find_claw(&star).unwrap();
        assert_eq!(w.center, 1);
        assert_eq!(w.leaves, [2, 3, 4]);
        assert!(w.verify(&star));
        assert!(find_claw(&Graph::complete(4)).is_none());
        assert!(find_claw(&h2_sun()).is_none());
    }

    #[test]
    fn forbidden_six() {
        let h1 = h1_net();
        let w = find_net(&h1).unwrap();
        assert!(w.verify(&h1));
        assert!(find_sun(&h1).is_none());
        let h2 = h2_sun();
        let w = find_sun(&h2).unwrap();
        assert!(w.verify(&h2));
        assert!(find_net(&h2).is_none());
        let k6 = Graph::complete(6);
        assert!(find_forbidden_six(&k6, SixPattern::Net).is_none());
        assert!(find_forbidden_six(&k6, SixPattern::Sun).is_none());
    }

    #[test]
    fn verify_labeling_definition_instances() {
        let g = Graph::new(3, &[(1, 2), (1, 3)]).unwrap();
        assert!(!verify_closed_labeling(&g, &Labeling::identity(3)));
        let swapped = Labeling::new(vec![2, 1, 3]).unwrap();
        assert!(verify_closed_labeling(&g, &swapped));
    }

    #[test]
    fn h1_closed_under_no_labeling() {
        let h1 = h1_net();
        let mut perm: Vec<usize> = (1..=6).collect();
        loop {
            assert!(!verify_closed_labeling(&h1, &Labeling::new(perm.clone()).unwrap()));
            if !next_permutation(&mut perm) {
                break;
            }
        }
        assert_eq!(brute_force_closed(&h1).unwrap(), None);
    }

    #[test]
    fn interval_facets_examples() {
        let p3 = Graph::path(3);
        let f = interval_facets(&p3, &Labeling::identity(3)).unwrap();
        assert_eq!(f.facets, vec![(1, 2), (2, 3)]);
        let k4 = Graph::complete(4);
        let f = interval_facets(&k4, &Labeling::identity(4)).unwrap();
        assert_eq!(f.facets, vec![(1, 4)]);
        let cherry = Graph::new(3, &[(1, 2), (1, 3)]).unwrap();
        assert!(interval_facets(&cherry, &Labeling::identity(3)).is_none());
    }

    #[test]
    fn closed_labeling_examples() {
        // complete graph: single facet
        let (lab, facets) = closed_labeling(&Graph::complete(4)).unwrap();
        assert!(verify_closed_labeling(&Graph::complete(4), &lab));
        assert_eq!(facets.facets, vec![(1, 4)]);

        // triangle with a pendant edge
        let paw = Graph::new(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let (lab, facets) = closed_labeling(&paw).unwrap();
        assert!(verify_closed_labeling(&paw, &lab));
        assert_eq!(facets.facets.len(), 2);
        assert_eq!(interval_facets(&paw, &lab).unwrap(), facets);

        assert!(closed_labeling(&h2_sun()).is_none());

        // path labeled out of order
        let p4_scrambled = Graph::new(4, &[(1, 3), (3, 2), (2, 4)]).unwrap();
        let cert = is_closed(&p4_scrambled);
        assert!(cert.is_closed());
        assert!(cert.verify(&p4_scrambled));
        assert!(brute_force_closed(&p4_scrambled).unwrap().is_some());
    }

    #[test]
    fn is_closed_obstructions() {
        match is_closed(&Graph::cycle(5)) {
            ClosednessCertificate::InducedCycle { vertices } => assert_eq!(vertices.len(), 5),
            other => panic!("expected a hole, got {other:?}"),
        }
        match is_closed(&h1_net()) {
            ClosednessCertificate::Net(w) => assert!(w.verify(&h1_net())),
            other => panic!("expected a net, got {other:?}"),
        }
    }

    #[test]
    fn disconnected_components_labeled_in_blocks() {
        // triangle plus a far-away edge
        let g = Graph::new(5, &[(1, 4), (1, 5), (4, 5), (2, 3)]).unwrap();
        let cert = is_closed(&g);
        assert!(cert.is_closed());
        assert!(cert.verify(&g));
    }
}
