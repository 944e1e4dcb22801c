//! Finitely generated submonoids of Cl⁺(X) ≅ ℤ≥0^k.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::class_group::ClassTable;
use crate::fan::Cone;
use crate::linalg::{q_independent, solve_nonneg, IntVec};

/// Submonoid generated by a set of ray classes. Generators are distinct and
/// sorted; each remembers the rays that carry it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMonoid {
    ambient_rank: usize,
    generators: Vec<IntVec>,
    origins: Vec<Vec<usize>>,
}

impl ClassMonoid {
    pub fn new(ambient_rank: usize, gens: impl IntoIterator<Item = (IntVec, usize)>) -> Self {
        let mut by_class: BTreeMap<IntVec, Vec<usize>> = BTreeMap::new();
        for (g, ray) in gens {
            assert_eq!(g.len(), ambient_rank, "generator rank mismatch");
            assert!(
                g.iter().all(|x| !x.is_negative()) && !g.iter().all(Zero::is_zero),
                "generators must be nonzero and nonnegative"
            );
            by_class.entry(g).or_default().push(ray);
        }
        let (generators, origins) = by_class.into_iter().unzip();
        ClassMonoid {
            ambient_rank,
            generators,
            origins,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn generators(&self) -> &[IntVec] {
        &self.generators
    }

    /// Rays carrying each generator, parallel to [`generators`](Self::generators).
    pub fn origins(&self) -> &[Vec<usize>] {
        &self.origins
    }

    pub fn contains(&self, c: &IntVec) -> bool {
        solve_nonneg(c, &self.generators)
            .expect("generators are validated at construction")
            .is_some()
    }

    /// Generators that are not a sum of two or more generators. Since
    /// generators are distinct and nonzero, that is the same as not lying in
    /// the monoid of the remaining generators.
    pub fn irreducibles(&self) -> Vec<IntVec> {
        (0..self.generators.len())
            .filter(|&i| {
                let others: Vec<IntVec> = self
                    .generators
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, g)| g.clone())
                    .collect();
                solve_nonneg(&self.generators[i], &others)
                    .expect("validated generators")
                    .is_none()
            })
            .map(|i| self.generators[i].clone())
            .collect()
    }

    /// Free iff the irreducible elements are Q-linearly independent.
    pub fn is_free(&self) -> bool {
        q_independent(&self.irreducibles())
    }
}

/// Γ(A): generated by the classes of the rays in `rays`.
pub fn gamma_of_rayset(classes: &ClassTable, rays: impl IntoIterator<Item = usize>) -> ClassMonoid {
    ClassMonoid::new(
        classes.rank(),
        rays.into_iter().map(|r| (classes.class_of(r).clone(), r)),
    )
}

/// Γ(σ): generated by the classes of the rays outside σ.
pub fn gamma_of_cone(classes: &ClassTable, cone: &Cone) -> ClassMonoid {
    gamma_of_rayset(
        classes,
        (0..classes.ray_count()).filter(|&r| !cone.contains(r)),
    )
}
