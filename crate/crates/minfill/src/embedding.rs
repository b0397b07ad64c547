//! The linear map from edge weight distributions to leaf distance matrices,
//! and the exact Gram matrix of its unit-simplex vertex images.
//!
//! For a topology with edges `1..=m`, edge `i` lies on the paths of
//! `q_i = n(i) (n - n(i))` leaf pairs. The simplex vertex `w^i` puts weight
//! `1/q_i` on edge `i` alone, so its distance-matrix image has unit l1 norm
//! on the upper triangle. `W` stacks those images as rows (columns in
//! lexicographic leaf-pair order) and `Q = W Wᵀ` has entries
//! `Q_ij = (#pairs whose path uses both edges) / (q_i q_j)`.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::rational::Rat;
use crate::topology::Topology;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("weight distribution has {got} entries, topology has {expected} edges")]
    WeightCount { expected: usize, got: usize },
    #[error("negative weight on edge {edge}")]
    NegativeWeight { edge: usize },
    #[error("distance matrix needs {expected} upper-triangle entries for n={n}, got {got}")]
    UpperLength { n: usize, expected: usize, got: usize },
    #[error("negative distance between {p} and {q}")]
    NegativeDistance { p: usize, q: usize },
    #[error("distance matrix needs at least 3 points, got {0}")]
    TooFewPoints(usize),
}

/// Nonnegative exact-rational weight per edge of a topology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    weights: Vec<Rat>,
}

impl WeightDistribution {
    pub fn new(weights: Vec<Rat>) -> Result<Self, EmbeddingError> {
        if let Some(edge) = weights.iter().position(|w| w.is_negative()) {
            return Err(EmbeddingError::NegativeWeight { edge });
        }
        Ok(WeightDistribution { weights })
    }

    /// The all-zero distribution on `m` edges.
    pub fn zeros(m: usize) -> Self {
        WeightDistribution { weights: vec![Rat::zero(); m] }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, edge: usize) -> &Rat {
        &self.weights[edge]
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.weights.iter()
    }
}

/// Number of unordered leaf pairs for `n` leaves.
pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Index of the pair `(p, q)`, `p < q` (0-based), in lexicographic order.
pub fn pair_index(n: usize, p: usize, q: usize) -> usize {
    debug_assert!(p < q && q < n);
    p * (2 * n - p - 1) / 2 + (q - p - 1)
}

/// Lexicographic unordered pairs `(0,1), (0,2), ..., (n-2, n-1)`.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |p| (p + 1..n).map(move |q| (p, q)))
}

/// Symmetric exact-rational distance matrix with zero diagonal, stored as
/// the upper triangle in lexicographic pair order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    upper: Vec<Rat>,
}

impl DistanceMatrix {
    pub fn from_upper(n: usize, upper: Vec<Rat>) -> Result<Self, EmbeddingError> {
        if n < 3 {
            return Err(EmbeddingError::TooFewPoints(n));
        }
        if upper.len() != pair_count(n) {
            return Err(EmbeddingError::UpperLength {
                n,
                expected: pair_count(n),
                got: upper.len(),
            });
        }
        for (idx, value) in upper.iter().enumerate() {
            if value.is_negative() {
                let (p, q) = pairs(n).nth(idx).unwrap();
                return Err(EmbeddingError::NegativeDistance { p: p + 1, q: q + 1 });
            }
        }
        Ok(DistanceMatrix { n, upper })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance between points `p` and `q` (0-based).
    pub fn get(&self, p: usize, q: usize) -> Rat {
        if p == q {
            return Rat::zero();
        }
        let (a, b) = (p.min(q), p.max(q));
        self.upper[pair_index(self.n, a, b)].clone()
    }

    pub fn upper(&self) -> &[Rat] {
        &self.upper
    }

    /// Sum of the entries above the diagonal: the selected norm.
    pub fn norm_l1(&self) -> Rat {
        self.upper.iter().sum()
    }

    /// Applies a relabeling of points: entry `(perm[p], perm[q])` of the
    /// result equals entry `(p, q)` of `self`.
    pub fn relabel(&self, perm: &[usize]) -> DistanceMatrix {
        let mut upper = vec![Rat::zero(); self.upper.len()];
        for (p, q) in pairs(self.n) {
            let (a, b) = (perm[p].min(perm[q]), perm[p].max(perm[q]));
            upper[pair_index(self.n, a, b)] = self.upper[pair_index(self.n, p, q)].clone();
        }
        DistanceMatrix { n: self.n, upper }
    }
}

/// Per-edge path pair counts `q_i = n(i) (n - n(i))`.
pub fn path_counts(t: &Topology) -> Vec<u64> {
    let n = t.n();
    (0..t.edge_count())
        .map(|e| {
            let (u, _) = t.edges()[e];
            let side = t.leaves_on_side(e, u);
            (side * (n - side)) as u64
        })
        .collect()
}

/// Evaluates the weight-to-distance linear map: entry `(p, q)` is the sum of
/// the edge weights along the unique tree path from leaf `p` to leaf `q`.
pub fn distance_matrix(
    t: &Topology,
    w: &WeightDistribution,
) -> Result<DistanceMatrix, EmbeddingError> {
    if w.len() != t.edge_count() {
        return Err(EmbeddingError::WeightCount { expected: t.edge_count(), got: w.len() });
    }
    let n = t.n();
    let mut upper = Vec::with_capacity(pair_count(n));
    for (p, q) in pairs(n) {
        let sum: Rat = t.path_edges(p, q).into_iter().map(|e| w.get(e).clone()).sum();
        upper.push(sum);
    }
    Ok(DistanceMatrix { n, upper })
}

/// The `m` unit-simplex vertex distributions: `w^i` has `1/q_i` on edge `i`
/// and zero elsewhere, so each image has l1 norm exactly 1. Together with
/// the all-zero distribution they span the unit-ball intersection.
pub fn simplex_vertex_weights(t: &Topology) -> Vec<WeightDistribution> {
    let q = path_counts(t);
    let m = t.edge_count();
    (0..m)
        .map(|i| {
            let mut weights = vec![Rat::zero(); m];
            weights[i] = Rat::new(1.into(), (q[i] as i64).into());
            WeightDistribution { weights }
        })
        .collect()
}

/// Dense exact-rational matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rat) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// `self · selfᵀ` as a Gram matrix.
    pub fn gram_product(&self) -> GramMatrix {
        let m = self.rows;
        let mut entries = vec![vec![Rat::zero(); m]; m];
        for i in 0..m {
            for j in i..m {
                let mut acc = Rat::zero();
                for c in 0..self.cols {
                    let a = self.get(i, c);
                    if !a.is_zero() {
                        let b = self.get(j, c);
                        if !b.is_zero() {
                            acc += a * b;
                        }
                    }
                }
                entries[i][j] = acc.clone();
                entries[j][i] = acc;
            }
        }
        GramMatrix { entries }
    }
}

/// Rows are the vectorized distance-matrix images of the simplex vertex
/// distributions; columns follow lexicographic leaf-pair order. The matrix
/// has full row rank `m` for every binary topology.
pub fn build_w(t: &Topology) -> RatMatrix {
    let n = t.n();
    let m = t.edge_count();
    let q = path_counts(t);
    let mut w = RatMatrix::zeros(m, pair_count(n));
    for (col, (p, qq)) in pairs(n).enumerate() {
        for e in t.path_edges(p, qq) {
            w.set(e, col, Rat::new(1.into(), (q[e] as i64).into()));
        }
    }
    w
}

/// Exact symmetric Gram matrix `Q` with
/// `Q_ij = #\{pairs whose path uses edges i and j\} / (q_i q_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    entries: Vec<Vec<Rat>>,
}

impl GramMatrix {
    pub fn from_entries(entries: Vec<Vec<Rat>>) -> Self {
        debug_assert!(entries.iter().all(|r| r.len() == entries.len()));
        GramMatrix { entries }
    }

    pub fn m(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.entries
    }
}

/// Builds `Q` combinatorially from shared path-pair counts, without forming
/// `W`. Agrees entrywise with `build_w(t).gram_product()`.
pub fn gram_matrix(t: &Topology) -> GramMatrix {
    let n = t.n();
    let m = t.edge_count();
    let q = path_counts(t);
    let mut shared = vec![vec![0u64; m]; m];
    for (p, qq) in pairs(n) {
        let path = t.path_edges(p, qq);
        for (a, &i) in path.iter().enumerate() {
            for &j in &path[a..] {
                shared[i.min(j)][i.max(j)] += 1;
            }
        }
    }
    let mut entries = vec![vec![Rat::zero(); m]; m];
    for i in 0..m {
        for j in i..m {
            let value = Rat::new(
                (shared[i][j] as i64).into(),
                ((q[i] * q[j]) as i64).into(),
            );
            entries[i][j] = value.clone();
            entries[j][i] = value;
        }
    }
    GramMatrix { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{caterpillar6, snowflake6, star3};
    use crate::rational::{rat, rat_int};
    use num_traits::One;

    #[test]
    fn star_distances() {
        let t = star3();
        let w = WeightDistribution::new(vec![rat_int(1), rat_int(2), rat_int(3)]).unwrap();
        let rho = distance_matrix(&t, &w).unwrap();
        assert_eq!(rho.get(0, 1), rat_int(3));
        assert_eq!(rho.get(0, 2), rat_int(4));
        assert_eq!(rho.get(1, 2), rat_int(5));
        assert_eq!(rho.get(1, 0), rat_int(3));
        assert_eq!(rho.get(2, 2), rat_int(0));
    }

    #[test]
    fn zero_weights_zero_matrix() {
        let t = caterpillar6();
        let rho = distance_matrix(&t, &WeightDistribution::zeros(9)).unwrap();
        assert!(rho.upper().iter().all(|d| d.is_zero()));
        assert!(rho.norm_l1().is_zero());
    }

    #[test]
    fn weight_count_mismatch() {
        let t = star3();
        let w = WeightDistribution::zeros(5);
        assert!(matches!(
            distance_matrix(&t, &w),
            Err(EmbeddingError::WeightCount { expected: 3, got: 5 })
        ));
    }

    #[test]
    fn pinned_path_count_vectors() {
        let expect =
            |v: &[u64]| v.iter().map(|&x| x).collect::<Vec<_>>();
        assert_eq!(path_counts(&caterpillar6()), expect(&[5, 5, 8, 5, 9, 5, 8, 5, 5]));
        assert_eq!(path_counts(&snowflake6()), expect(&[5, 5, 5, 8, 8, 5, 8, 5, 5]));
        assert_eq!(path_counts(&star3()), expect(&[2, 2, 2]));
    }

    #[test]
    fn simplex_vertices_have_unit_norm_images() {
        for t in [star3(), caterpillar6(), snowflake6()] {
            for w in simplex_vertex_weights(&t) {
                let rho = distance_matrix(&t, &w).unwrap();
                assert!(rho.norm_l1().is_one());
            }
        }
        // caterpillar edge 4 has q = 9
        let t = caterpillar6();
        let vertices = simplex_vertex_weights(&t);
        assert_eq!(*vertices[4].get(4), rat(1, 9));
    }

    #[test]
    fn star_w_matrix_rows() {
        let w = build_w(&star3());
        assert_eq!(w.rows, 3);
        assert_eq!(w.cols, 3);
        // columns are pairs (1,2), (1,3), (2,3); rows are leaf edges 1,2,3
        let half = rat(1, 2);
        let zero = rat_int(0);
        assert_eq!(w.row(0), &[half.clone(), half.clone(), zero.clone()]);
        assert_eq!(w.row(1), &[half.clone(), zero.clone(), half.clone()]);
        assert_eq!(w.row(2), &[zero, half.clone(), half]);
    }

    #[test]
    fn w_rows_sum_to_one_and_are_nonzero() {
        let t = caterpillar6();
        let w = build_w(&t);
        assert_eq!(w.rows, 9);
        assert_eq!(w.cols, 15);
        for r in 0..w.rows {
            let sum: Rat = w.row(r).iter().sum();
            assert!(sum.is_one());
            assert!(w.row(r).iter().any(|x| !x.is_zero()));
        }
    }

    #[test]
    fn gram_matches_w_product() {
        for t in [star3(), caterpillar6(), snowflake6()] {
            assert_eq!(gram_matrix(&t), build_w(&t).gram_product());
        }
    }

    #[test]
    fn gram_star() {
        let q = gram_matrix(&star3());
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { rat(1, 2) } else { rat(1, 4) };
                assert_eq!(*q.get(i, j), expected);
            }
        }
    }

    #[test]
    fn gram_pinned_entries() {
        // caterpillar, pinned edge order
        let q1 = gram_matrix(&caterpillar6());
        assert_eq!(*q1.get(0, 1), rat(1, 25));
        assert_eq!(*q1.get(0, 2), rat(1, 10));
        assert_eq!(*q1.get(2, 2), rat(1, 8));
        assert_eq!(*q1.get(4, 4), rat(1, 9));
        // snowflake, pinned edge order
        let q2 = gram_matrix(&snowflake6());
        assert_eq!(*q2.get(0, 3), rat(1, 10));
        assert_eq!(*q2.get(3, 3), rat(1, 8));
        assert_eq!(*q2.get(3, 4), rat(1, 16));
    }

    #[test]
    fn diagonal_is_reciprocal_path_count() {
        for t in [caterpillar6(), snowflake6()] {
            let q = path_counts(&t);
            let g = gram_matrix(&t);
            for i in 0..t.edge_count() {
                assert_eq!(*g.get(i, i), Rat::new(1.into(), (q[i] as i64).into()));
            }
        }
    }
}
