//! Bilateral structures: a ray subset forming a lattice basis with every other
//! ray in the closed negative orthant of that basis. A complete toric variety
//! is radiant exactly when its fan has one.

use num_traits::{Signed, Zero};

use crate::fan::Fan;
use crate::linalg::{invert_unimodular, IntMat, IntVec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilateralStructure {
    /// ε₁,…,εₙ in ascending ray index; position fixes ε ordering.
    pub positive: Vec<usize>,
    /// τ₁,…,τ_k in ascending ray index.
    pub negative: Vec<usize>,
    /// Rows are the dual basis e¹,…,eⁿ.
    pub dual_basis: IntMat,
}

impl BilateralStructure {
    /// Tries `positive` (any order; it is sorted) as the positive rays.
    pub fn from_positive(fan: &Fan, mut positive: Vec<usize>) -> Option<Self> {
        positive.sort_unstable();
        positive.dedup();
        if positive.len() != fan.dim() {
            return None;
        }
        let cols: Vec<IntVec> = positive.iter().map(|&r| fan.ray(r).clone()).collect();
        let basis = IntMat::from_columns(&cols, fan.dim());
        let dual_basis = invert_unimodular(&basis).ok()?;
        let negative: Vec<usize> = (0..fan.ray_count())
            .filter(|r| !positive.contains(r))
            .collect();
        let all_nonpositive = negative
            .iter()
            .all(|&r| dual_basis.mul_vec(fan.ray(r)).iter().all(|x| !x.is_positive()));
        all_nonpositive.then_some(BilateralStructure {
            positive,
            negative,
            dual_basis,
        })
    }

    pub fn dim(&self) -> usize {
        self.positive.len()
    }

    /// Coordinates of `v` in the positive-ray basis: (⟨e¹,v⟩, …, ⟨eⁿ,v⟩).
    pub fn coords(&self, v: &[num_bigint::BigInt]) -> IntVec {
        self.dual_basis.mul_vec(v)
    }

    /// Dual basis vector eⁱ (0-based).
    pub fn dual(&self, i: usize) -> IntVec {
        self.dual_basis.row(i).to_vec()
    }

    /// 0-based ε-position of a positive ray.
    pub fn position(&self, ray: usize) -> Option<usize> {
        self.positive.iter().position(|&r| r == ray)
    }

    pub fn is_positive(&self, ray: usize) -> bool {
        self.position(ray).is_some()
    }

    pub fn negative_position(&self, ray: usize) -> Option<usize> {
        self.negative.iter().position(|&r| r == ray)
    }

    /// The standard-coordinate vector with the given positive-basis coordinates.
    pub fn from_coords(&self, fan: &Fan, coords: &[num_bigint::BigInt]) -> IntVec {
        let mut out = vec![num_bigint::BigInt::zero(); fan.dim()];
        for (c, &r) in coords.iter().zip(&self.positive) {
            for (o, x) in out.iter_mut().zip(fan.ray(r)) {
                *o += c * x;
            }
        }
        out
    }
}

/// Calls `f` on every k-subset of 0..n in lexicographic order until it returns
/// `Some`.
fn first_combination<T>(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> Option<T>) -> Option<T> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if let Some(t) = f(&idx) {
            return Some(t);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// First bilateral witness in lexicographic order of positive index sets.
pub fn find_bilateral(fan: &Fan) -> Option<BilateralStructure> {
    first_combination(fan.ray_count(), fan.dim(), |subset| {
        BilateralStructure::from_positive(fan, subset.to_vec())
    })
}

/// Every bilateral witness, in lexicographic order.
pub fn bilateral_witnesses(fan: &Fan) -> Vec<BilateralStructure> {
    let mut out = Vec::new();
    first_combination(fan.ray_count(), fan.dim(), |subset| {
        if let Some(b) = BilateralStructure::from_positive(fan, subset.to_vec()) {
            out.push(b);
        }
        None::<()>
    });
    out
}
