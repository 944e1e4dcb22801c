//! Demazure roots, the vector v selecting a maximal unipotent subgroup U, and
//! the precedence order ≺ on rays.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::class_group::ClassTable;
use crate::fan::Fan;
use crate::linalg::{dot, lattice_points, IntVec, LinalgError, LinearSystem};
use crate::radiance::BilateralStructure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootKind {
    Semisimple,
    Unipotent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemazureRoot {
    pub e: IntVec,
    pub distinguished_ray: usize,
    pub kind: RootKind,
    /// Whether the root subgroup U_e lies in the chosen U.
    pub in_u: bool,
}

impl DemazureRoot {
    pub fn pairing(&self, fan: &Fan, ray: usize) -> BigInt {
        dot(&self.e, fan.ray(ray))
    }

    pub fn is_semisimple(&self) -> bool {
        self.kind == RootKind::Semisimple
    }
}

/// The lattice points e with ⟨e, n_ρ⟩ = −1 and ⟨e, n_ρ'⟩ ≥ 0 for ρ' ≠ ρ.
pub fn roots_at(fan: &Fan, ray: usize) -> Result<Vec<IntVec>, LinalgError> {
    let mut sys = LinearSystem::new(fan.dim()).equal(fan.ray(ray).clone(), -1);
    for r in (0..fan.ray_count()).filter(|&r| r != ray) {
        sys = sys.at_least(fan.ray(r).clone(), 0);
    }
    lattice_points(&sys)
}

/// All Demazure roots sorted by (distinguished ray, e). Semisimple roots come
/// back with `in_u = false` until [`mark_unipotent_subgroup`] runs; unipotent
/// roots always lie in U.
pub fn enumerate_roots(fan: &Fan) -> Result<Vec<DemazureRoot>, LinalgError> {
    let mut raw = Vec::new();
    for ray in 0..fan.ray_count() {
        for e in roots_at(fan, ray)? {
            raw.push((ray, e));
        }
    }
    let all: HashSet<&IntVec> = raw.iter().map(|(_, e)| e).collect();
    let kinds: Vec<RootKind> = raw
        .iter()
        .map(|(_, e)| {
            let neg: IntVec = e.iter().map(|x| -x).collect();
            if all.contains(&neg) {
                RootKind::Semisimple
            } else {
                RootKind::Unipotent
            }
        })
        .collect();
    Ok(raw
        .into_iter()
        .zip(kinds)
        .map(|((ray, e), kind)| DemazureRoot {
            e,
            distinguished_ray: ray,
            kind,
            in_u: kind == RootKind::Unipotent,
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnipotentChoice {
    /// v in standard coordinates of N.
    pub v: IntVec,
    /// v in the positive-ray basis: (−1, −c, −c², …).
    pub basis_coords: IntVec,
    pub spacing: u64,
}

impl UnipotentChoice {
    pub fn pairing(&self, e: &[BigInt]) -> BigInt {
        dot(e, &self.v)
    }
}

/// First c = 2, 3, … for which v = (−1, −c, …, −c^{n−1}) in the positive basis
/// pairs nonzero with every semisimple root.
pub fn choose_v(fan: &Fan, bilateral: &BilateralStructure, roots: &[DemazureRoot]) -> UnipotentChoice {
    let n = bilateral.dim();
    for c in 2u64.. {
        let mut coords = Vec::with_capacity(n);
        let mut p = BigInt::from(1);
        for _ in 0..n {
            coords.push(-p.clone());
            p *= c;
        }
        let v = bilateral.from_coords(fan, &coords);
        let ok = roots
            .iter()
            .filter(|r| r.is_semisimple())
            .all(|r| !dot(&r.e, &v).is_zero());
        if ok {
            return UnipotentChoice {
                v,
                basis_coords: coords,
                spacing: c,
            };
        }
    }
    unreachable!("each vanishing condition is a nonzero polynomial in c")
}

/// Sets `in_u` for semisimple roots: in U iff ⟨e, v⟩ > 0.
pub fn mark_unipotent_subgroup(roots: &mut [DemazureRoot], choice: &UnipotentChoice) {
    for r in roots.iter_mut() {
        r.in_u = match r.kind {
            RootKind::Unipotent => true,
            RootKind::Semisimple => choice.pairing(&r.e).is_positive(),
        };
    }
}

/// ρ ≺ ρ' as a set of ordered pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrecedenceRelation {
    pairs: BTreeSet<(usize, usize)>,
}

impl PrecedenceRelation {
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a, b))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

pub fn compute_precedence(bilateral: &BilateralStructure, classes: &ClassTable) -> PrecedenceRelation {
    let mut pairs = BTreeSet::new();
    for a in 0..classes.ray_count() {
        for b in 0..classes.ray_count() {
            if a == b || !classes.same_class(a, b) {
                continue;
            }
            let holds = match (bilateral.position(a), bilateral.position(b)) {
                (Some(pa), Some(pb)) => pa < pb,
                (None, Some(_)) => true,
                _ => false,
            };
            if holds {
                pairs.insert((a, b));
            }
        }
    }
    PrecedenceRelation { pairs }
}

/// Among rays carrying `class`, the ≺-least one: the negative ray if there is
/// one, else the positive ray of lowest ε-position.
pub fn least_ray_of_class(bilateral: &BilateralStructure, classes: &ClassTable, class: &IntVec) -> Option<usize> {
    bilateral
        .negative
        .iter()
        .chain(&bilateral.positive)
        .copied()
        .find(|&r| classes.class_of(r) == class)
}
