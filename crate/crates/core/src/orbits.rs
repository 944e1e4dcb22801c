//! Basic subsets, hats, the finite-orbit verdict and the orbit catalog.
//!
//! A ray set A is basic when no class [D_ρ], ρ ∈ A, lies in the monoid
//! generated by the other classes of A. Its hat Â collects the rays whose
//! class is outside Γ(A) together with the rays that share a class with a
//! member of A and precede it. The stratum Z_A (coordinates of A nonzero,
//! coordinates of Â zero) meets the total coordinate space of X exactly when
//! Â lies in a cone; such strata are the U-orbits when there are finitely many.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::class_group::{radiant_classes, ClassTable};
use crate::demazure::{compute_precedence, least_ray_of_class, PrecedenceRelation};
use crate::fan::{Cone, Fan};
use crate::linalg::{in_monoid, q_independent, IntVec};
use crate::monoid::{gamma_of_cone, gamma_of_rayset, ClassMonoid};
use crate::radiance::{find_bilateral, BilateralStructure};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicSubset {
    /// A, ascending.
    pub rays: Vec<usize>,
    /// Â, ascending.
    pub hat: Vec<usize>,
    pub classes_independent: bool,
    pub in_x_hat: bool,
}

impl BasicSubset {
    /// Whether a point with zero set `zeros` lies in Z_A.
    pub fn contains_pattern(&self, zeros: &[usize]) -> bool {
        self.rays.iter().all(|r| !zeros.contains(r)) && self.hat.iter().all(|r| zeros.contains(r))
    }
}

/// The data of a bilateral fan that the stratification depends on.
#[derive(Debug, Clone)]
pub struct RadiantData {
    pub bilateral: BilateralStructure,
    pub classes: ClassTable,
    pub precedence: PrecedenceRelation,
}

impl RadiantData {
    pub fn new(fan: &Fan, bilateral: BilateralStructure) -> Self {
        let classes = radiant_classes(fan, &bilateral);
        let precedence = compute_precedence(&bilateral, &classes);
        RadiantData {
            bilateral,
            classes,
            precedence,
        }
    }

    /// Uses the first bilateral witness.
    pub fn find(fan: &Fan) -> Option<Self> {
        find_bilateral(fan).map(|b| Self::new(fan, b))
    }
}

pub fn is_basic(classes: &ClassTable, rays: &[usize]) -> bool {
    rays.iter().all(|&r| {
        let rest = gamma_of_rayset(classes, rays.iter().copied().filter(|&x| x != r));
        !rest.contains(classes.class_of(r))
    })
}

pub fn hat_of(classes: &ClassTable, precedence: &PrecedenceRelation, rays: &[usize]) -> Vec<usize> {
    let table = Table(classes.classes().to_vec());
    hat_from_membership(classes, precedence, rays, &table.membership(rays))
}

/// Classes as plain vectors, on i64 when every entry fits.
struct Table<T>(Vec<Vec<T>>);

impl<T: Integer + Signed + Clone> Table<T> {
    fn gens(&self, rays: impl Iterator<Item = usize>) -> Vec<Vec<T>> {
        rays.map(|r| self.0[r].clone()).collect()
    }

    /// Whether each ray's class lies in Γ(A).
    fn membership(&self, rays: &[usize]) -> Vec<bool> {
        let gens = self.gens(rays.iter().copied());
        (0..self.0.len())
            .map(|r| rays.contains(&r) || in_monoid(&self.0[r], &gens))
            .collect()
    }

    /// For basic A and a ray r whose class is outside Γ(A): whether A ∪ {r}
    /// is basic. A member a can only become redundant through a
    /// representation using r, which needs [D_a] − [D_r] ≥ 0.
    fn extends_basic(&self, rays: &[usize], r: usize) -> bool {
        let cr = &self.0[r];
        rays.iter().all(|&a| {
            let ca = &self.0[a];
            if ca.iter().zip(cr).any(|(x, y)| x < y) {
                return true;
            }
            let others = self.gens(rays.iter().copied().filter(|&x| x != a).chain([r]));
            !in_monoid(ca, &others)
        })
    }
}

fn hat_from_membership(
    classes: &ClassTable,
    precedence: &PrecedenceRelation,
    rays: &[usize],
    in_gamma: &[bool],
) -> Vec<usize> {
    (0..classes.ray_count())
        .filter(|&r| {
            !in_gamma[r]
                || rays
                    .iter()
                    .any(|&a| classes.same_class(a, r) && precedence.precedes(r, a))
        })
        .collect()
}

/// True iff some maximal cone contains every ray of `hat`.
pub fn in_x_hat(fan: &Fan, hat: &[usize]) -> bool {
    fan.max_cones().iter().any(|c| c.contains_all(hat))
}

/// All basic subsets in depth-first order (rays added in ascending index).
/// Supersets of non-basic sets are never visited since Γ only grows.
pub fn enumerate_basic_subsets(fan: &Fan, data: &RadiantData) -> Vec<BasicSubset> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let small: Option<Vec<Vec<i64>>> = data
        .classes
        .classes()
        .iter()
        .map(|c| c.iter().map(ToPrimitive::to_i64).collect())
        .collect();
    match small {
        Some(t) => visit(fan, data, &Table(t), &mut current, 0, &mut out),
        None => visit(fan, data, &Table(data.classes.classes().to_vec()), &mut current, 0, &mut out),
    }
    out
}

fn visit<T: Integer + Signed + Clone>(
    fan: &Fan,
    data: &RadiantData,
    table: &Table<T>,
    current: &mut Vec<usize>,
    next: usize,
    out: &mut Vec<BasicSubset>,
) {
    let in_gamma = table.membership(current);
    let hat = hat_from_membership(&data.classes, &data.precedence, current, &in_gamma);
    let class_vecs: Vec<IntVec> = current.iter().map(|&r| data.classes.class_of(r).clone()).collect();
    out.push(BasicSubset {
        rays: current.clone(),
        in_x_hat: in_x_hat(fan, &hat),
        hat,
        classes_independent: q_independent(&class_vecs),
    });
    for (r, &inside) in in_gamma.iter().enumerate().skip(next) {
        if inside || !table.extends_basic(current, r) {
            continue;
        }
        current.push(r);
        visit(fan, data, table, current, r + 1, out);
        current.pop();
    }
}

/// For each irreducible class of `gens`, the ≺-least ray carrying it.
pub fn minimal_basic(data: &RadiantData, gens: &ClassMonoid) -> Vec<usize> {
    let mut out: Vec<usize> = gens
        .irreducibles()
        .iter()
        .filter_map(|c| least_ray_of_class(&data.bilateral, &data.classes, c))
        .collect();
    out.sort_unstable();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InfiniteReason {
    NotRadiant,
    NonFreeMonoid { cone: Cone, irreducibles: Vec<IntVec> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Finite { count: usize },
    Infinite(InfiniteReason),
}

impl Verdict {
    pub fn is_finite(&self) -> bool {
        matches!(self, Verdict::Finite { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Finite { count } => write!(f, "finite ({count} orbits)"),
            Verdict::Infinite(InfiniteReason::NotRadiant) => write!(f, "infinite (not radiant)"),
            Verdict::Infinite(InfiniteReason::NonFreeMonoid { cone, .. }) => {
                write!(f, "infinite (monoid at cone {cone} is not free)")
            }
        }
    }
}

/// The verdict for a complete simplicial fan, using the first bilateral
/// witness.
pub fn finiteness_verdict(fan: &Fan) -> Verdict {
    match RadiantData::find(fan) {
        None => Verdict::Infinite(InfiniteReason::NotRadiant),
        Some(data) => verdict_with(fan, &data),
    }
}

/// The verdict relative to a given bilateral witness.
pub fn verdict_with(fan: &Fan, data: &RadiantData) -> Verdict {
    if let Some((cone, irreducibles)) = first_non_free_cone(fan, &data.classes) {
        return Verdict::Infinite(InfiniteReason::NonFreeMonoid { cone, irreducibles });
    }
    let strata: Vec<BasicSubset> = enumerate_basic_subsets(fan, data)
        .into_iter()
        .filter(|b| b.in_x_hat)
        .collect();
    for b in &strata {
        assert!(
            b.classes_independent,
            "free monoids but dependent classes on A = {:?}",
            b.rays
        );
    }
    Verdict::Finite { count: strata.len() }
}

/// First cone in size-then-lex order whose monoid Γ(σ) is not free.
pub fn first_non_free_cone(fan: &Fan, classes: &ClassTable) -> Option<(Cone, Vec<IntVec>)> {
    fan.all_cones().iter().find_map(|cone| {
        let m = gamma_of_cone(classes, cone);
        let irr = m.irreducibles();
        (!q_independent(&irr)).then(|| (cone.clone(), irr))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRecord {
    pub basic: BasicSubset,
    /// n − |Â|.
    pub dimension: usize,
    /// Cones σ with Â ⊆ σ(1) and σ(1) ∩ A = ∅.
    pub t_orbit_cones: Vec<Cone>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("orbit catalog requested but the verdict is {0}")]
pub struct NotFinite(pub Verdict);

pub fn orbit_catalog(fan: &Fan) -> Result<Vec<OrbitRecord>, NotFinite> {
    match RadiantData::find(fan) {
        None => Err(NotFinite(Verdict::Infinite(InfiniteReason::NotRadiant))),
        Some(data) => orbit_catalog_with(fan, &data),
    }
}

/// Sorted by descending dimension, then A.
pub fn orbit_catalog_with(fan: &Fan, data: &RadiantData) -> Result<Vec<OrbitRecord>, NotFinite> {
    let verdict = verdict_with(fan, data);
    if !verdict.is_finite() {
        return Err(NotFinite(verdict));
    }
    let mut records: Vec<OrbitRecord> = enumerate_basic_subsets(fan, data)
        .into_iter()
        .filter(|b| b.in_x_hat)
        .map(|basic| {
            let t_orbit_cones = fan
                .all_cones()
                .iter()
                .filter(|c| c.contains_all(&basic.hat) && basic.rays.iter().all(|&r| !c.contains(r)))
                .cloned()
                .collect();
            OrbitRecord {
                dimension: fan.dim() - basic.hat.len(),
                basic,
                t_orbit_cones,
            }
        })
        .collect();
    records.sort_by(|a, b| {
        b.dimension
            .cmp(&a.dimension)
            .then_with(|| a.basic.rays.cmp(&b.basic.rays))
    });
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::validate_fan;
    use crate::linalg::ivec;

    fn fan(rays: &[&[i64]], cones: &[&[usize]]) -> Fan {
        validate_fan(
            rays[0].len(),
            rays.iter().map(|r| ivec(r)).collect(),
            cones.iter().map(|c| c.to_vec()).collect(),
        )
        .unwrap()
    }

    fn cycle(rays: &[&[i64]]) -> Fan {
        let n = rays.len();
        let cones: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        let cones: Vec<&[usize]> = cones.iter().map(|c| c.as_slice()).collect();
        fan(rays, &cones)
    }

    fn f2() -> Fan {
        cycle(&[&[1, 0], &[0, 1], &[-1, -2], &[0, -1]])
    }

    fn p112() -> Fan {
        cycle(&[&[1, 0], &[0, 1], &[-1, -2]])
    }

    fn p1p1() -> Fan {
        cycle(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]])
    }

    fn sets(bs: &[BasicSubset]) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = bs.iter().map(|b| b.rays.clone()).collect();
        v.sort();
        v
    }

    #[test]
    fn basic_subsets_of_f2() {
        let f = f2();
        let data = RadiantData::find(&f).unwrap();
        let bs = enumerate_basic_subsets(&f, &data);
        assert_eq!(bs.len(), 10);
        let s = sets(&bs);
        assert!(!s.contains(&vec![0, 2]));
        assert_eq!(s.iter().filter(|a| a.len() == 2).count(), 5);
        assert!(s.iter().all(|a| a.len() <= 2));
        for b in &bs {
            assert!(b.rays.iter().all(|r| !b.hat.contains(r)));
        }
    }

    #[test]
    fn basic_subsets_small_examples() {
        let f = p112();
        let data = RadiantData::find(&f).unwrap();
        assert_eq!(
            sets(&enumerate_basic_subsets(&f, &data)),
            vec![vec![], vec![0], vec![1], vec![2]]
        );
        let f = p1p1();
        let data = RadiantData::find(&f).unwrap();
        assert_eq!(enumerate_basic_subsets(&f, &data).len(), 9);
    }

    #[test]
    fn x_hat_membership() {
        let f = f2();
        assert!(in_x_hat(&f, &[2, 3]));
        assert!(!in_x_hat(&f, &[1, 3]));
        assert!(in_x_hat(&f, &[]));
    }

    #[test]
    fn minimal_basic_examples() {
        let f = f2();
        let data = RadiantData::find(&f).unwrap();
        let m = |a: &[usize]| minimal_basic(&data, &gamma_of_rayset(&data.classes, a.iter().copied()));
        assert_eq!(m(&[0, 1]), vec![1, 2]);
        assert_eq!(m(&[0, 3]), vec![2, 3]);
        let f = p112();
        let data = RadiantData::find(&f).unwrap();
        assert_eq!(minimal_basic(&data, &gamma_of_rayset(&data.classes, [2])), vec![2]);
    }

    #[test]
    fn verdict_examples() {
        assert_eq!(finiteness_verdict(&p112()), Verdict::Finite { count: 3 });
        assert_eq!(finiteness_verdict(&f2()), Verdict::Finite { count: 4 });

        let v = finiteness_verdict(&cycle(&[&[1, 0], &[0, 1], &[-2, -3]]));
        assert_eq!(
            v,
            Verdict::Infinite(InfiniteReason::NonFreeMonoid {
                cone: Cone::new(vec![2]),
                irreducibles: vec![ivec(&[2]), ivec(&[3])],
            })
        );

        let v = finiteness_verdict(&fan(
            &[&[1, 0], &[0, 1], &[-1, -2], &[-1, 0]],
            &[&[0, 1], &[1, 3], &[3, 2], &[2, 0]],
        ));
        assert_eq!(
            v,
            Verdict::Infinite(InfiniteReason::NonFreeMonoid {
                cone: Cone::new(vec![2]),
                irreducibles: vec![ivec(&[0, 1]), ivec(&[1, 1]), ivec(&[2, 0])],
            })
        );

        let dp6 = cycle(&[&[1, 0], &[1, 1], &[0, 1], &[-1, 0], &[-1, -1], &[0, -1]]);
        assert_eq!(
            finiteness_verdict(&dp6),
            Verdict::Infinite(InfiniteReason::NotRadiant)
        );
    }

    fn summary(records: &[OrbitRecord]) -> Vec<(Vec<usize>, Vec<usize>, usize, usize)> {
        records
            .iter()
            .map(|r| (r.basic.rays.clone(), r.basic.hat.clone(), r.dimension, r.t_orbit_cones.len()))
            .collect()
    }

    #[test]
    fn catalog_of_p112() {
        let records = orbit_catalog(&p112()).unwrap();
        assert_eq!(
            summary(&records),
            vec![
                (vec![2], vec![], 2, 4),
                (vec![0], vec![2], 1, 2),
                (vec![1], vec![0, 2], 0, 1),
            ]
        );
    }

    #[test]
    fn catalog_of_f2() {
        let records = orbit_catalog(&f2()).unwrap();
        assert_eq!(
            summary(&records),
            vec![
                (vec![2, 3], vec![], 2, 4),
                (vec![0, 3], vec![2], 1, 2),
                (vec![1, 2], vec![3], 1, 2),
                (vec![0, 1], vec![2, 3], 0, 1),
            ]
        );
        let total: usize = records.iter().map(|r| r.t_orbit_cones.len()).sum();
        assert_eq!(total, f2().all_cones().len());
    }

    #[test]
    fn catalog_of_p1p1() {
        let records = orbit_catalog(&p1p1()).unwrap();
        let mut a: Vec<Vec<usize>> = records.iter().map(|r| r.basic.rays.clone()).collect();
        a.sort();
        assert_eq!(a, vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
        assert_eq!(records[0].basic.rays, vec![2, 3]);
        assert!(records[0].basic.hat.is_empty());
    }

    #[test]
    fn catalog_refuses_infinite() {
        let f = cycle(&[&[1, 0], &[0, 1], &[-2, -3]]);
        assert!(matches!(orbit_catalog(&f), Err(NotFinite(Verdict::Infinite(_)))));
    }
}
