//! The divisor class group as the cokernel of M → Div_T(X), and the ray
//! classes in the basis of negative-ray classes of a bilateral fan.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::fan::Fan;
use crate::linalg::{smith_normal_form, IntMat, IntVec};
use crate::radiance::BilateralStructure;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGroupInfo {
    pub free_rank: usize,
    /// Invariant factors greater than one.
    pub torsion_invariants: Vec<BigInt>,
}

impl ClassGroupInfo {
    pub fn is_free(&self) -> bool {
        self.torsion_invariants.is_empty()
    }
}

/// Smith form of the d×n matrix whose rows are the primitive ray vectors.
pub fn class_group(fan: &Fan) -> ClassGroupInfo {
    let m = IntMat::from_rows(&fan.ray_vectors(), fan.dim());
    let snf = smith_normal_form(&m);
    let factors = snf.invariant_factors();
    ClassGroupInfo {
        free_rank: fan.ray_count() - factors.len(),
        torsion_invariants: factors.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// Class of every ray as a vector in the basis [D_τ₁],…,[D_τ_k].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTable {
    k: usize,
    class_of: Vec<IntVec>,
}

impl ClassTable {
    /// Builds a table directly. Every class must have length `k`.
    pub fn from_classes(k: usize, class_of: Vec<IntVec>) -> Self {
        assert!(class_of.iter().all(|c| c.len() == k));
        ClassTable { k, class_of }
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn ray_count(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self, ray: usize) -> &IntVec {
        &self.class_of[ray]
    }

    pub fn classes(&self) -> &[IntVec] {
        &self.class_of
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }
}

/// [D_εᵢ] = −Σⱼ ⟨eⁱ, nⱼ⟩ [D_τⱼ]; [D_τⱼ] is the j-th unit vector.
pub fn radiant_classes(fan: &Fan, bilateral: &BilateralStructure) -> ClassTable {
    let k = bilateral.negative.len();
    let mut class_of = vec![vec![BigInt::zero(); k]; fan.ray_count()];
    for (j, &t) in bilateral.negative.iter().enumerate() {
        class_of[t][j] = BigInt::one();
    }
    for (i, &e) in bilateral.positive.iter().enumerate() {
        let dual = bilateral.dual(i);
        class_of[e] = bilateral
            .negative
            .iter()
            .map(|&t| -crate::linalg::dot(&dual, fan.ray(t)))
            .collect();
    }
    debug_assert!(class_of.iter().flatten().all(|x| !x.is_negative()));
    ClassTable { k, class_of }
}

/// Σ_ρ ⟨m, n_ρ⟩ · class(ρ) for the standard basis vector m = e_i of M. Zero
/// for every i exactly when the table is consistent with the class group.
pub fn relation_residual(fan: &Fan, classes: &ClassTable, i: usize) -> IntVec {
    let mut acc = vec![BigInt::zero(); classes.rank()];
    for (r, ray) in fan.rays().iter().enumerate() {
        let w = &ray.primitive[i];
        for (a, c) in acc.iter_mut().zip(classes.class_of(r)) {
            *a += w * c;
        }
    }
    acc
}
