//! Exact Gram determinants, two independent ways, and the simplex volume.
//!
//! [`det_exact`] runs fraction-free (Bareiss) elimination on the Gram matrix
//! after clearing denominators row by row. [`det_closed_form`] instead
//! evaluates the product formula over a center decomposition:
//!
//! ```text
//! det Q = 4 / prod_i (n - n(i))^2  *  prod_(j,k) 4 (n/(n(j)+n(k)) - 1)
//! ```
//!
//! where the first product runs over all edges and the second over adjacent
//! edge pairs of equal nonzero level. The two routes agree exactly on every
//! binary topology, and the value does not depend on the chosen center.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::embedding::GramMatrix;
use crate::radical::Radical;
use crate::rational::{factorial, Rat};
use crate::topology::{Topology, TopologyError};

#[derive(Error, Debug, Clone, PartialEq)]
pub enum DeterminantError {
    #[error("center {center_b} gives determinant {value_b}, center {center_a} gave {value_a}")]
    CenterMismatch { center_a: usize, value_a: Rat, center_b: usize, value_b: Rat },
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

/// Exact determinant of a square rational matrix via Bareiss elimination on
/// an integer-scaled copy. Returns 0 for singular input.
pub fn det_rational(rows: &[Vec<Rat>]) -> Rat {
    let m = rows.len();
    if m == 0 {
        return Rat::one();
    }
    debug_assert!(rows.iter().all(|r| r.len() == m));
    // clear denominators per row, tracking the total scale
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(m);
    for row in rows {
        let lcm = row
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        a.push(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
        scale *= &lcm;
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..m {
        if a[k][k].is_zero() {
            match (k + 1..m).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Rat::zero(),
            }
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Rat::new(sign * a[m - 1][m - 1].clone(), scale)
}

/// Exact determinant of a Gram matrix.
pub fn det_exact(q: &GramMatrix) -> Rat {
    det_rational(q.rows())
}

/// Leading principal minors `det Q[..k, ..k]` for `k = 1..=m`. All strictly
/// positive exactly when `Q` is positive definite.
pub fn leading_principal_minors(q: &GramMatrix) -> Vec<Rat> {
    (1..=q.m())
        .map(|k| {
            let sub: Vec<Vec<Rat>> =
                q.rows()[..k].iter().map(|row| row[..k].to_vec()).collect();
            det_rational(&sub)
        })
        .collect()
}

/// Evaluates the closed-form determinant product for a given internal
/// center vertex.
pub fn det_closed_form(t: &Topology, center: usize) -> Result<Rat, TopologyError> {
    let view = t.center_view(center)?;
    let n = BigInt::from(t.n());
    let mut denom = BigInt::one();
    for e in 0..t.edge_count() {
        let d = &n - BigInt::from(view.subtree_count[e]);
        denom *= &d * &d;
    }
    let mut det = Rat::new(BigInt::from(4), denom);
    for &(j, k) in &view.sibling_pairs {
        let s = BigInt::from(view.subtree_count[j] + view.subtree_count[k]);
        // 4 (n/s - 1) = 4 (n - s) / s
        det *= Rat::new(4 * (&n - &s), s);
    }
    Ok(det)
}

/// Closed-form determinant at the deterministic default center (the
/// smallest-id centroid vertex).
pub fn det_closed_form_any_center(t: &Topology) -> Rat {
    det_closed_form(t, t.default_center()).expect("centroid of a binary tree is internal")
}

/// Verification mode: evaluates the closed form at every internal vertex and
/// checks that all centers give the same value.
pub fn det_closed_form_verified(t: &Topology) -> Result<Rat, DeterminantError> {
    let mut first: Option<(usize, Rat)> = None;
    for center in t.internal_vertices() {
        let value = det_closed_form(t, center)?;
        match &first {
            None => first = Some((center, value)),
            Some((center_a, value_a)) => {
                if *value_a != value {
                    return Err(DeterminantError::CenterMismatch {
                        center_a: *center_a,
                        value_a: value_a.clone(),
                        center_b: center,
                        value_b: value,
                    });
                }
            }
        }
    }
    Ok(first.expect("n >= 3 implies at least one internal vertex").1)
}

/// Simplex volume data: `volume = sqrt(det) / m!`. The determinant and edge
/// count are kept exact so downstream ratios stay exact.
#[derive(Clone, Debug, PartialEq)]
pub struct VolumeValue {
    /// Exact Gram determinant, strictly positive for binary topologies.
    pub det: Rat,
    /// Number of edges (simplex dimension).
    pub m: usize,
}

impl VolumeValue {
    /// `volume^2 = det / (m!)^2`, exact.
    pub fn volume_squared(&self) -> Rat {
        let f = factorial(self.m as u64);
        &self.det / Rat::from_integer(&f * &f)
    }

    /// Exact volume as `coeff * sqrt(kernel)`.
    pub fn volume_radical(&self) -> Radical {
        Radical::sqrt_of(&self.det).scale(&Rat::new(BigInt::one(), factorial(self.m as u64)))
    }

    /// Volume as a float.
    pub fn volume_f64(&self) -> f64 {
        self.volume_radical().to_f64()
    }
}

/// Volume of the image simplex of a topology.
pub fn simplex_volume(t: &Topology) -> VolumeValue {
    VolumeValue { det: det_closed_form_any_center(t), m: t.edge_count() }
}
