//! Unrooted binary trees with labeled boundary (leaf) vertices.
//!
//! A [`Topology`] is the combinatorial type of a tree filling: `n` labeled
//! leaves of degree 1 and `n - 2` internal vertices of degree 3, hence
//! `m = 2n - 3` edges. The module provides deterministic enumeration of all
//! labeled topologies, grouping into isomorphism classes with automorphism
//! counts, canonical codes, and the center/level/subtree-count decomposition
//! the determinant formulas are built on.

use std::collections::HashMap;

use thiserror::Error;

use crate::rational::labeled_topology_count;

/// Errors from constructing or querying topologies.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TopologyError {
    /// Binary boundary trees require at least 3 leaves.
    #[error("a binary boundary tree needs at least 3 leaves, got {0}")]
    TooFewLeaves(usize),
    /// The edge list has the wrong number of edges for the leaf count.
    #[error("expected {expected} edges for {n} leaves, got {got}")]
    EdgeCount { n: usize, expected: usize, got: usize },
    /// An edge endpoint does not name a vertex.
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    /// An edge connects a vertex to itself.
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    /// The same edge appears twice.
    #[error("duplicate edge between {0} and {1}")]
    DuplicateEdge(usize, usize),
    /// A vertex violates the degree-1 (leaf) / degree-3 (internal) rule.
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    WrongDegree { vertex: usize, degree: usize, expected: usize },
    /// The edges do not form a single connected tree.
    #[error("edge list does not form a connected tree")]
    NotATree,
    /// An operation required an internal vertex.
    #[error("vertex {0} is not an internal vertex")]
    NotInternal(usize),
}

/// An unrooted binary tree with `n` labeled leaves.
///
/// Vertices are `0..2n-2`: ids `0..n` are leaves carrying labels `1..=n`
/// (label = id + 1), ids `n..2n-2` are internal. Edges are indexed by their
/// position in the edge list; the enumeration order fixes this indexing
/// deterministically.
#[derive(Clone, Debug)]
pub struct Topology {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>, // vertex -> (neighbor, edge index)
}

impl PartialEq for Topology {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}
impl Eq for Topology {}

impl Topology {
    /// Builds and validates a topology from its leaf count and edge list.
    pub fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, TopologyError> {
        if n < 3 {
            return Err(TopologyError::TooFewLeaves(n));
        }
        let m = 2 * n - 3;
        if edges.len() != m {
            return Err(TopologyError::EdgeCount { n, expected: m, got: edges.len() });
        }
        let vertex_count = 2 * n - 2;
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut seen = HashMap::new();
        for (idx, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count {
                return Err(TopologyError::VertexOutOfRange(u));
            }
            if v >= vertex_count {
                return Err(TopologyError::VertexOutOfRange(v));
            }
            if u == v {
                return Err(TopologyError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if seen.insert(key, idx).is_some() {
                return Err(TopologyError::DuplicateEdge(key.0, key.1));
            }
            adjacency[u].push((v, idx));
            adjacency[v].push((u, idx));
        }
        for (v, nbrs) in adjacency.iter().enumerate() {
            let expected = if v < n { 1 } else { 3 };
            if nbrs.len() != expected {
                return Err(TopologyError::WrongDegree { vertex: v, degree: nbrs.len(), expected });
            }
        }
        let t = Topology { n, edges, adjacency };
        // m = |V| - 1 and degrees checked; connectivity is the remaining tree condition.
        if t.reachable_count(0) != vertex_count {
            return Err(TopologyError::NotATree);
        }
        Ok(t)
    }

    /// Construction fast path for internally generated edge lists.
    pub(crate) fn from_parts(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let vertex_count = 2 * n - 2;
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push((v, idx));
            adjacency[v].push((u, idx));
        }
        let t = Topology { n, edges, adjacency };
        debug_assert!(Topology::from_edges(n, t.edges.clone()).is_ok());
        t
    }

    fn reachable_count(&self, start: usize) -> usize {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 0;
        while let Some(v) = stack.pop() {
            count += 1;
            for &(w, _) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        count
    }

    /// Number of boundary (leaf) vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges, `2n - 3`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Total number of vertices, `2n - 2`.
    pub fn vertex_count(&self) -> usize {
        2 * self.n - 2
    }

    /// Edge list in index order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// True if `v` is a boundary vertex.
    pub fn is_leaf(&self, v: usize) -> bool {
        v < self.n
    }

    /// 1-based boundary label of a leaf vertex.
    pub fn leaf_label(&self, v: usize) -> usize {
        debug_assert!(self.is_leaf(v));
        v + 1
    }

    /// Internal vertex ids.
    pub fn internal_vertices(&self) -> std::ops::Range<usize> {
        self.n..self.vertex_count()
    }

    /// Neighbors of `v` as `(vertex, edge index)` pairs.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Number of leaves in the component of `side` after removing `edge`.
    pub fn leaves_on_side(&self, edge: usize, side: usize) -> usize {
        let (u, v) = self.edges[edge];
        debug_assert!(side == u || side == v);
        let other = if side == u { v } else { u };
        let mut count = 0;
        let mut stack = vec![(side, other)];
        while let Some((x, parent)) = stack.pop() {
            if self.is_leaf(x) {
                count += 1;
            }
            for &(w, _) in &self.adjacency[x] {
                if w != parent {
                    stack.push((w, x));
                }
            }
        }
        count
    }

    /// Edge indices along the unique path between two vertices.
    pub fn path_edges(&self, from: usize, to: usize) -> Vec<usize> {
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.vertex_count()];
        let mut stack = vec![from];
        let mut seen = vec![false; self.vertex_count()];
        seen[from] = true;
        while let Some(v) = stack.pop() {
            if v == to {
                break;
            }
            for &(w, e) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((v, e));
                    stack.push(w);
                }
            }
        }
        let mut path = Vec::new();
        let mut cur = to;
        while cur != from {
            let (p, e) = parent[cur].expect("tree is connected");
            path.push(e);
            cur = p;
        }
        path.reverse();
        path
    }

    /// Counts internal vertices adjacent to exactly two boundary vertices.
    pub fn mustache_count(&self) -> usize {
        self.internal_vertices()
            .filter(|&v| self.adjacency[v].iter().filter(|&&(w, _)| self.is_leaf(w)).count() == 2)
            .count()
    }

    /// Returns a copy with leaf `i` relabeled to `perm[i]` (a permutation of
    /// `0..n`); internal vertices and edge indexing are unchanged.
    pub fn relabel_leaves(&self, perm: &[usize]) -> Topology {
        debug_assert_eq!(perm.len(), self.n);
        let map = |v: usize| if v < self.n { perm[v] } else { v };
        let edges = self.edges.iter().map(|&(u, v)| (map(u), map(v))).collect();
        Topology::from_parts(self.n, edges)
    }

    /// The one or two centroid vertices (vertices minimizing the largest
    /// component left by their removal). Two centroids are always adjacent.
    pub fn centroid(&self) -> (usize, Option<usize>) {
        let vc = self.vertex_count();
        // subtree sizes rooted at 0
        let mut order = Vec::with_capacity(vc);
        let mut parent = vec![usize::MAX; vc];
        let mut stack = vec![0usize];
        let mut seen = vec![false; vc];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            order.push(v);
            for &(w, _) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
        let mut size = vec![1usize; vc];
        for &v in order.iter().rev() {
            if parent[v] != usize::MAX {
                size[parent[v]] += size[v];
            }
        }
        let mut best = usize::MAX;
        let mut arg: Vec<usize> = Vec::new();
        for v in 0..vc {
            let mut max_comp = if v == 0 { 0 } else { vc - size[v] };
            for &(w, _) in &self.adjacency[v] {
                if parent[w] == v {
                    max_comp = max_comp.max(size[w]);
                }
            }
            match max_comp.cmp(&best) {
                std::cmp::Ordering::Less => {
                    best = max_comp;
                    arg = vec![v];
                }
                std::cmp::Ordering::Equal => arg.push(v),
                std::cmp::Ordering::Greater => {}
            }
        }
        arg.sort_unstable();
        (arg[0], arg.get(1).copied())
    }

    /// Deterministic internal vertex used where a formula needs some center:
    /// the smallest-id centroid.
    pub fn default_center(&self) -> usize {
        self.centroid().0
    }

    fn rooted_code(&self, v: usize, parent: usize) -> Vec<u8> {
        if self.is_leaf(v) {
            return b"()".to_vec();
        }
        let mut children: Vec<Vec<u8>> = self
            .adjacency[v]
            .iter()
            .filter(|&&(w, _)| w != parent)
            .map(|&(w, _)| self.rooted_code(w, v))
            .collect();
        children.sort();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in children {
            code.extend_from_slice(&c);
        }
        code.push(b')');
        code
    }

    fn rooted_code_aut(&self, v: usize, parent: usize) -> (Vec<u8>, u128) {
        if self.is_leaf(v) {
            return (b"()".to_vec(), 1);
        }
        let mut children: Vec<(Vec<u8>, u128)> = self
            .adjacency[v]
            .iter()
            .filter(|&&(w, _)| w != parent)
            .map(|&(w, _)| self.rooted_code_aut(w, v))
            .collect();
        children.sort();
        let mut aut: u128 = 1;
        let mut run = 1u128;
        for i in 0..children.len() {
            aut *= children[i].1;
            if i > 0 && children[i].0 == children[i - 1].0 {
                run += 1;
                aut *= run;
            } else {
                run = 1;
            }
        }
        let mut code = Vec::new();
        code.push(b'(');
        for (c, _) in children {
            code.extend_from_slice(&c);
        }
        code.push(b')');
        (code, aut)
    }

    /// Canonical code of the unlabeled tree shape; two topologies have equal
    /// codes exactly when they are isomorphic as abstract trees.
    pub fn canonical_code(&self) -> Vec<u8> {
        let (c1, c2) = self.centroid();
        match c2 {
            None => self.rooted_code(c1, usize::MAX),
            Some(c2) => {
                let a = self.rooted_code(c1, c2);
                let b = self.rooted_code(c2, c1);
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                let mut code = Vec::with_capacity(lo.len() + hi.len() + 2);
                code.push(b'(');
                code.extend_from_slice(&lo);
                code.extend_from_slice(&hi);
                code.push(b')');
                code
            }
        }
    }

    fn labeled_rooted_code(&self, v: usize, parent: usize) -> Vec<u8> {
        if self.is_leaf(v) {
            let mut code = self.leaf_label(v).to_string().into_bytes();
            code.push(b';');
            return code;
        }
        let mut children: Vec<Vec<u8>> = self
            .adjacency[v]
            .iter()
            .filter(|&&(w, _)| w != parent)
            .map(|&(w, _)| self.labeled_rooted_code(w, v))
            .collect();
        children.sort();
        let mut code = Vec::new();
        code.push(b'(');
        for c in children {
            code.extend_from_slice(&c);
        }
        code.push(b')');
        code
    }

    /// Canonical code respecting leaf labels: equal codes exactly when there
    /// is a label-preserving isomorphism. Rooted at the neighbor of leaf 1,
    /// which every label-preserving map must fix.
    pub fn labeled_code(&self) -> Vec<u8> {
        let (anchor, _) = self.adjacency[0][0];
        self.labeled_rooted_code(anchor, 0)
    }

    /// Tree isomorphism; with `respect_labels` the isomorphism must map
    /// equal leaf labels to each other.
    pub fn is_isomorphic(&self, other: &Topology, respect_labels: bool) -> bool {
        if self.n != other.n {
            return false;
        }
        if respect_labels {
            self.labeled_code() == other.labeled_code()
        } else {
            self.canonical_code() == other.canonical_code()
        }
    }

    /// Order of the automorphism group of the underlying unlabeled tree.
    pub fn automorphism_order(&self) -> u64 {
        let (c1, c2) = self.centroid();
        let aut = match c2 {
            None => self.rooted_code_aut(c1, usize::MAX).1,
            Some(c2) => {
                let (code_a, aut_a) = self.rooted_code_aut(c1, c2);
                let (code_b, aut_b) = self.rooted_code_aut(c2, c1);
                aut_a * aut_b * if code_a == code_b { 2 } else { 1 }
            }
        };
        u64::try_from(aut).expect("automorphism order fits u64 for supported n")
    }

    /// Decomposition of the tree relative to an internal `center`.
    pub fn center_view(&self, center: usize) -> Result<CenterView, TopologyError> {
        if self.is_leaf(center) || center >= self.vertex_count() {
            return Err(TopologyError::NotInternal(center));
        }
        let vc = self.vertex_count();
        let m = self.edge_count();
        let mut depth = vec![usize::MAX; vc];
        let mut parent_edge = vec![usize::MAX; vc];
        let mut branch_of = vec![usize::MAX; vc];
        let mut order = Vec::with_capacity(vc);
        depth[center] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(center);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &(w, e) in &self.adjacency[v] {
                if depth[w] == usize::MAX && w != center {
                    depth[w] = depth[v] + 1;
                    parent_edge[w] = e;
                    branch_of[w] = if v == center { w } else { branch_of[v] };
                    queue.push_back(w);
                }
            }
        }
        // leaves beyond each vertex, looking away from the center
        let mut leaves_below = vec![0usize; vc];
        for &v in order.iter().rev() {
            if self.is_leaf(v) {
                leaves_below[v] = 1;
            }
            if v != center {
                let e = parent_edge[v];
                let (a, b) = self.edges[e];
                let p = if depth[a] < depth[b] { a } else { b };
                if p != center {
                    leaves_below[p] += leaves_below[v];
                }
            }
        }
        let mut level = vec![0usize; m];
        let mut subtree_count = vec![0usize; m];
        let mut branches: [Vec<usize>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        let branch_roots: Vec<usize> =
            self.adjacency[center].iter().map(|&(w, _)| w).collect();
        for e in 0..m {
            let (a, b) = self.edges[e];
            let (near, far) = if depth[a] < depth[b] { (a, b) } else { (b, a) };
            level[e] = depth[near];
            subtree_count[e] = leaves_below[far];
            let root = branch_of[far];
            let slot = branch_roots.iter().position(|&r| r == root).expect("branch root");
            branches[slot].push(e);
        }
        // sibling pairs: the two outward edges of each non-center internal vertex
        let mut sibling_pairs = Vec::new();
        for v in self.internal_vertices() {
            if v == center {
                continue;
            }
            let mut outward: Vec<usize> = self.adjacency[v]
                .iter()
                .filter(|&&(_, e)| {
                    let (a, b) = self.edges[e];
                    let near = if depth[a] < depth[b] { a } else { b };
                    near == v
                })
                .map(|&(_, e)| e)
                .collect();
            outward.sort_unstable();
            debug_assert_eq!(outward.len(), 2);
            sibling_pairs.push((outward[0], outward[1]));
        }
        sibling_pairs.sort_unstable();
        Ok(CenterView { center, level, subtree_count, branches, sibling_pairs })
    }
}

/// Levels, subtree leaf counts and main branches of a topology relative to a
/// chosen internal center vertex.
#[derive(Clone, Debug)]
pub struct CenterView {
    /// The chosen internal vertex.
    pub center: usize,
    /// Per edge: number of edges between the center and the edge's nearer
    /// endpoint. The three center-incident edges have level 0.
    pub level: Vec<usize>,
    /// Per edge `i`: the number of boundary vertices whose path from the
    /// center passes through the edge (`n(i)`).
    pub subtree_count: Vec<usize>,
    /// Edge indices of the three maximal subtrees hanging off the center.
    pub branches: [Vec<usize>; 3],
    /// Adjacent edge pairs `(j, k)` with equal nonzero level: the two
    /// outward edges at each internal vertex other than the center.
    pub sibling_pairs: Vec<(usize, usize)>,
}

/// An isomorphism class of labeled topologies for fixed `n`.
#[derive(Clone, Debug)]
pub struct TopologyClass {
    /// First labeled member in enumeration order.
    pub representative: Topology,
    /// Automorphism group order of the unlabeled shape.
    pub simm: u64,
    /// Number of labeled topologies in the class, `n!/simm`.
    pub labeled_count: u64,
}

/// Calls `f` for every labeled topology on `n` leaves, in the deterministic
/// leaf-insertion order: leaf `k+1` is inserted into every edge (in index
/// order) of every `k`-leaf topology (in enumeration order).
pub fn for_each_labeled_topology<F: FnMut(&Topology)>(
    n: usize,
    mut f: F,
) -> Result<(), TopologyError> {
    if n < 3 {
        return Err(TopologyError::TooFewLeaves(n));
    }
    let mut edges = vec![(0, n), (1, n), (2, n)];
    fn rec<F: FnMut(&Topology)>(n: usize, k: usize, edges: &mut Vec<(usize, usize)>, f: &mut F) {
        if k == n {
            let t = Topology::from_parts(n, edges.clone());
            f(&t);
            return;
        }
        let m = edges.len();
        let w = n + k - 2; // next internal vertex id
        for i in 0..m {
            let (u, v) = edges[i];
            edges[i] = (u, w);
            edges.push((w, v));
            edges.push((w, k));
            rec(n, k + 1, edges, f);
            edges.pop();
            edges.pop();
            edges[i] = (u, v);
        }
    }
    rec(n, 3, &mut edges, &mut f);
    Ok(())
}

/// All labeled topologies on `n` leaves; exactly `(2n-5)!!` of them.
pub fn enumerate_labeled_topologies(n: usize) -> Result<Vec<Topology>, TopologyError> {
    let mut out = Vec::new();
    for_each_labeled_topology(n, |t| out.push(t.clone()))?;
    debug_assert_eq!(out.len() as u128, labeled_topology_count(n));
    Ok(out)
}

/// Groups the labeled enumeration into unlabeled-isomorphism classes, in
/// first-occurrence order.
pub fn enumerate_topology_classes(n: usize) -> Result<Vec<TopologyClass>, TopologyError> {
    let mut slots: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut classes: Vec<(Topology, u64)> = Vec::new();
    for_each_labeled_topology(n, |t| {
        let code = t.canonical_code();
        match slots.get(&code) {
            Some(&i) => classes[i].1 += 1,
            None => {
                slots.insert(code, classes.len());
                classes.push((t.clone(), 1));
            }
        }
    })?;
    Ok(classes
        .into_iter()
        .map(|(representative, labeled_count)| {
            let simm = representative.automorphism_order();
            TopologyClass { representative, simm, labeled_count }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{caterpillar6, snowflake6, star3};
    use crate::rational::factorial;
    use num_bigint::BigInt;

    #[test]
    fn construction_validates() {
        assert!(matches!(
            Topology::from_edges(2, vec![(0, 1)]),
            Err(TopologyError::TooFewLeaves(2))
        ));
        assert!(matches!(
            Topology::from_edges(3, vec![(0, 3), (1, 3)]),
            Err(TopologyError::EdgeCount { .. })
        ));
        // degree violation: a leaf with two edges
        assert!(matches!(
            Topology::from_edges(4, vec![(0, 4), (0, 5), (1, 4), (2, 5), (4, 5)]),
            Err(TopologyError::WrongDegree { vertex: 0, .. })
        ));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_topologies(3).unwrap().len(), 1);
        assert_eq!(enumerate_labeled_topologies(4).unwrap().len(), 3);
        assert_eq!(enumerate_labeled_topologies(6).unwrap().len(), 105);
    }

    #[test]
    fn four_leaf_trees_are_the_three_splits() {
        // independent listing: the three quartet splits 12|34, 13|24, 14|23
        let split = |a: usize, b: usize, c: usize, d: usize| {
            Topology::from_edges(4, vec![(a, 4), (b, 4), (4, 5), (c, 5), (d, 5)]).unwrap()
        };
        let expected = [split(0, 1, 2, 3), split(0, 2, 1, 3), split(0, 3, 1, 2)];
        let got = enumerate_labeled_topologies(4).unwrap();
        for e in &expected {
            assert_eq!(
                got.iter().filter(|t| t.is_isomorphic(e, true)).count(),
                1,
                "each split appears exactly once"
            );
        }
        // pairwise non-identical as labeled trees
        assert!(!got[0].is_isomorphic(&got[1], true));
        assert!(!got[1].is_isomorphic(&got[2], true));
        assert!(!got[0].is_isomorphic(&got[2], true));
    }

    #[test]
    fn six_leaf_classes() {
        let classes = enumerate_topology_classes(6).unwrap();
        assert_eq!(classes.len(), 2);
        let cat = classes.iter().find(|c| c.representative.mustache_count() == 2).unwrap();
        let snow = classes.iter().find(|c| c.representative.mustache_count() == 3).unwrap();
        assert_eq!(cat.simm, 8);
        assert_eq!(snow.simm, 48);
        assert_eq!(cat.labeled_count, 90);
        assert_eq!(snow.labeled_count, 15);
    }

    #[test]
    fn three_leaf_class() {
        let classes = enumerate_topology_classes(3).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].simm, 6);
        assert_eq!(classes[0].labeled_count, 1);
    }

    #[test]
    fn automorphism_orders() {
        assert_eq!(caterpillar6().automorphism_order(), 8);
        assert_eq!(snowflake6().automorphism_order(), 48);
        // brute force over all 3! leaf permutations of the star: every one
        // extends to a tree map fixing the hub.
        let star = star3();
        let mut count = 0;
        let perms3 = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for p in perms3 {
            if star.relabel_leaves(&p).is_isomorphic(&star, true) {
                count += 1;
            }
        }
        assert_eq!(count, 6);
        assert_eq!(star.automorphism_order(), 6);
    }

    #[test]
    fn class_sizes_sum_to_labeled_count() {
        for n in 3..=7 {
            let classes = enumerate_topology_classes(n).unwrap();
            let total: u64 = classes.iter().map(|c| c.labeled_count).sum();
            assert_eq!(total as u128, labeled_topology_count(n));
            for c in &classes {
                let expected =
                    factorial(n as u64) / BigInt::from(c.simm);
                assert_eq!(BigInt::from(c.labeled_count), expected, "n!/simm");
            }
        }
    }

    #[test]
    fn mustache_counts() {
        assert_eq!(snowflake6().mustache_count(), 3);
        assert_eq!(caterpillar6().mustache_count(), 2);
        // the 3-star hub has three boundary neighbors, not two
        assert_eq!(star3().mustache_count(), 0);
    }

    #[test]
    fn center_view_snowflake() {
        let t = snowflake6();
        let view = t.center_view(9).unwrap();
        let mut center_edges = 0;
        for e in 0..t.edge_count() {
            if view.level[e] == 0 {
                center_edges += 1;
                assert_eq!(view.subtree_count[e], 2);
            } else {
                assert_eq!(view.level[e], 1);
                assert_eq!(view.subtree_count[e], 1);
            }
        }
        assert_eq!(center_edges, 3);
        let total: usize =
            (0..t.edge_count()).filter(|&e| view.level[e] == 0).map(|e| view.subtree_count[e]).sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn center_view_star_and_caterpillar() {
        let star = star3();
        let view = star.center_view(3).unwrap();
        assert!(view.level.iter().all(|&l| l == 0));
        assert!(view.subtree_count.iter().all(|&c| c == 1));
        assert!(view.sibling_pairs.is_empty());

        // second internal vertex of the caterpillar: branch leaf counts 2, 1, 3
        let cat = caterpillar6();
        let view = cat.center_view(7).unwrap();
        let mut branch_sizes: Vec<usize> = view
            .branches
            .iter()
            .map(|edges| {
                edges
                    .iter()
                    .filter(|&&e| view.level[e] == 0)
                    .map(|&e| view.subtree_count[e])
                    .sum()
            })
            .collect();
        branch_sizes.sort_unstable();
        assert_eq!(branch_sizes, vec![1, 2, 3]);

        assert!(star.center_view(0).is_err());
    }

    #[test]
    fn center_view_child_count_invariant() {
        // internal edge: n(i) = n(j) + n(k) over its outward children
        let t = caterpillar6();
        for center in t.internal_vertices() {
            let view = t.center_view(center).unwrap();
            for &(j, k) in &view.sibling_pairs {
                assert_eq!(view.level[j], view.level[k]);
                assert!(view.level[j] >= 1);
                // parent edge shares the nearer vertex of j and k
                let (a1, b1) = t.edges()[j];
                let shared = if t.edges()[k].0 == a1 || t.edges()[k].1 == a1 { a1 } else { b1 };
                let parent = t
                    .neighbors(shared)
                    .iter()
                    .map(|&(_, e)| e)
                    .find(|&e| e != j && e != k)
                    .unwrap();
                assert_eq!(
                    view.subtree_count[parent],
                    view.subtree_count[j] + view.subtree_count[k]
                );
            }
        }
    }

    #[test]
    fn labeled_isomorphism_within_mustache_swap() {
        let t = snowflake6();
        // swapping the two labels of one cherry is an automorphism
        let perm = [1, 0, 2, 3, 4, 5];
        assert!(t.relabel_leaves(&perm).is_isomorphic(&t, true));
        // swapping labels across cherries is not
        let perm = [0, 2, 1, 3, 4, 5];
        assert!(!t.relabel_leaves(&perm).is_isomorphic(&t, true));
    }

    #[test]
    fn caterpillar_and_snowflake_not_isomorphic() {
        assert!(!caterpillar6().is_isomorphic(&snowflake6(), false));
        assert!(caterpillar6().is_isomorphic(&caterpillar6(), true));
    }
}
