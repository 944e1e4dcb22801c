//! Simplicial fans: validation, face enumeration and completeness.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{gcd_of, rank, IntVec, LinearSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanError {
    #[error("dimension must be at least 1")]
    InvalidDimension,
    #[error("ray {ray} has {found} coordinates, expected {expected}")]
    RayDimension {
        ray: usize,
        expected: usize,
        found: usize,
    },
    #[error("ray {0} is the zero vector")]
    ZeroRay(usize),
    #[error("ray {0} is not primitive")]
    NonPrimitiveRay(usize),
    #[error("rays {0} and {1} coincide")]
    DuplicateRay(usize, usize),
    #[error("cone {cone} refers to missing ray {ray}")]
    RayIndexOutOfRange { cone: usize, ray: usize },
    #[error("cone {0} lists a ray twice")]
    RepeatedRayInCone(usize),
    #[error("ray {0} belongs to no cone")]
    UnusedRay(usize),
    #[error("cone {0} is not simplicial")]
    NonSimplicialCone(Cone),
    #[error("cones {0} and {1} do not meet in a common face")]
    FanConditionViolated(Cone, Cone),
    #[error("fan is not complete")]
    NotComplete,
}

impl FanError {
    /// Stable machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            FanError::InvalidDimension => "InvalidDimension",
            FanError::RayDimension { .. } => "RayDimension",
            FanError::ZeroRay(_) => "ZeroRay",
            FanError::NonPrimitiveRay(_) => "NonPrimitiveRay",
            FanError::DuplicateRay(..) => "DuplicateRay",
            FanError::RayIndexOutOfRange { .. } => "RayIndexOutOfRange",
            FanError::RepeatedRayInCone(_) => "RepeatedRayInCone",
            FanError::UnusedRay(_) => "UnusedRay",
            FanError::NonSimplicialCone(_) => "NonSimplicialCone",
            FanError::FanConditionViolated(..) => "FanConditionViolated",
            FanError::NotComplete => "NotComplete",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ray {
    pub index: usize,
    pub primitive: IntVec,
}

/// A simplicial cone, stored as its sorted set of ray indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Cone {
    ray_indices: Vec<usize>,
}

impl Cone {
    pub fn new(mut ray_indices: Vec<usize>) -> Self {
        ray_indices.sort_unstable();
        ray_indices.dedup();
        Cone { ray_indices }
    }

    pub fn zero() -> Self {
        Cone::default()
    }

    pub fn rays(&self) -> &[usize] {
        &self.ray_indices
    }

    pub fn len(&self) -> usize {
        self.ray_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ray_indices.is_empty()
    }

    pub fn contains(&self, ray: usize) -> bool {
        self.ray_indices.binary_search(&ray).is_ok()
    }

    pub fn contains_all(&self, rays: &[usize]) -> bool {
        rays.iter().all(|&r| self.contains(r))
    }

    pub fn is_face_of(&self, other: &Cone) -> bool {
        other.contains_all(&self.ray_indices)
    }

    pub fn intersection(&self, other: &Cone) -> Cone {
        Cone {
            ray_indices: self
                .ray_indices
                .iter()
                .copied()
                .filter(|&r| other.contains(r))
                .collect(),
        }
    }
}

/// Size first, then lexicographic on ray indices.
impl Ord for Cone {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.ray_indices.cmp(&other.ray_indices))
    }
}

impl PartialOrd for Cone {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, r) in self.ray_indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

/// A validated simplicial fan. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<Ray>,
    max_cones: Vec<Cone>,
    all_cones: Vec<Cone>,
}

/// Checks the fan axioms and builds the face lattice. Listed cones that are
/// faces of other listed cones are absorbed. Completeness is not required;
/// see [`Fan::require_complete`].
pub fn validate_fan(dim: usize, rays: Vec<IntVec>, max_cones: Vec<Vec<usize>>) -> Result<Fan, FanError> {
    if dim == 0 {
        return Err(FanError::InvalidDimension);
    }
    for (i, r) in rays.iter().enumerate() {
        if r.len() != dim {
            return Err(FanError::RayDimension {
                ray: i,
                expected: dim,
                found: r.len(),
            });
        }
        if r.iter().all(Zero::is_zero) {
            return Err(FanError::ZeroRay(i));
        }
        if !gcd_of(r).is_one() {
            return Err(FanError::NonPrimitiveRay(i));
        }
    }
    let mut seen: BTreeMap<&IntVec, usize> = BTreeMap::new();
    for (i, r) in rays.iter().enumerate() {
        if let Some(&j) = seen.get(r) {
            return Err(FanError::DuplicateRay(j, i));
        }
        seen.insert(r, i);
    }

    let mut cones = Vec::with_capacity(max_cones.len());
    for (ci, raw) in max_cones.into_iter().enumerate() {
        if let Some(&bad) = raw.iter().find(|&&r| r >= rays.len()) {
            return Err(FanError::RayIndexOutOfRange { cone: ci, ray: bad });
        }
        let n = raw.len();
        let cone = Cone::new(raw);
        if cone.len() != n {
            return Err(FanError::RepeatedRayInCone(ci));
        }
        let vectors: Vec<IntVec> = cone.rays().iter().map(|&r| rays[r].clone()).collect();
        if rank(&vectors) != cone.len() {
            return Err(FanError::NonSimplicialCone(cone));
        }
        cones.push(cone);
    }
    let cones: BTreeSet<Cone> = cones.into_iter().collect();
    let maximal: Vec<Cone> = cones
        .iter()
        .filter(|c| !cones.iter().any(|o| o != *c && c.is_face_of(o)))
        .cloned()
        .collect();

    let used: BTreeSet<usize> = maximal.iter().flat_map(|c| c.rays().iter().copied()).collect();
    if let Some(unused) = (0..rays.len()).find(|r| !used.contains(r)) {
        return Err(FanError::UnusedRay(unused));
    }

    for (i, a) in maximal.iter().enumerate() {
        for b in &maximal[i + 1..] {
            if !meet_in_common_face(&rays, a, b) {
                return Err(FanError::FanConditionViolated(a.clone(), b.clone()));
            }
        }
    }

    let mut faces: BTreeSet<Cone> = BTreeSet::new();
    for c in &maximal {
        let r = c.rays();
        for mask in 0u64..(1u64 << r.len()) {
            let sub = (0..r.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| r[i])
                .collect();
            faces.insert(Cone::new(sub));
        }
    }

    Ok(Fan {
        dim,
        rays: rays
            .into_iter()
            .enumerate()
            .map(|(index, primitive)| Ray { index, primitive })
            .collect(),
        max_cones: maximal,
        all_cones: faces.into_iter().collect(),
    })
}

/// For simplicial cones with common rays C, the intersection is the face
/// cone(C) iff no point of both cones has a positive coefficient outside C.
fn meet_in_common_face(rays: &[IntVec], a: &Cone, b: &Cone) -> bool {
    let common = a.intersection(b);
    let (ra, rb) = (a.rays(), b.rays());
    let dim = rays[0].len();
    let vars = ra.len() + rb.len();
    let mut sys = LinearSystem::new(vars);
    #[allow(clippy::needless_range_loop)]
    for k in 0..dim {
        let mut coeffs = vec![BigInt::zero(); vars];
        for (i, &r) in ra.iter().enumerate() {
            coeffs[i] = rays[r][k].clone();
        }
        for (j, &r) in rb.iter().enumerate() {
            coeffs[ra.len() + j] = -rays[r][k].clone();
        }
        sys = sys.equal(coeffs, 0);
    }
    let mut outside = vec![BigInt::zero(); vars];
    for v in 0..vars {
        let mut unit = vec![BigInt::zero(); vars];
        unit[v] = BigInt::one();
        sys = sys.at_least(unit, 0);
        let ray = if v < ra.len() { ra[v] } else { rb[v - ra.len()] };
        if !common.contains(ray) {
            outside[v] = BigInt::one();
        }
    }
    if outside.iter().all(Zero::is_zero) {
        // one cone is a face of the other
        return true;
    }
    !sys.equal(outside, 1).is_feasible()
}

impl Fan {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    pub fn ray(&self, i: usize) -> &IntVec {
        &self.rays[i].primitive
    }

    pub fn ray_vectors(&self) -> Vec<IntVec> {
        self.rays.iter().map(|r| r.primitive.clone()).collect()
    }

    pub fn max_cones(&self) -> &[Cone] {
        &self.max_cones
    }

    /// Every face, zero cone included, sorted by size then lexicographically.
    pub fn all_cones(&self) -> &[Cone] {
        &self.all_cones
    }

    pub fn has_cone(&self, rays: &[usize]) -> bool {
        self.all_cones.binary_search(&Cone::new(rays.to_vec())).is_ok()
    }

    /// Every ridge of every maximal cone lies in exactly two maximal cones, all
    /// maximal cones are full-dimensional, and the ridge graph is connected.
    pub fn is_complete(&self) -> bool {
        let n = self.dim;
        if n == 1 {
            let mut rs: Vec<&IntVec> = self.rays.iter().map(|r| &r.primitive).collect();
            rs.sort();
            return rs == [&vec![BigInt::from(-1)], &vec![BigInt::from(1)]]
                && self.max_cones.len() == 2;
        }
        if self.max_cones.is_empty() || self.max_cones.iter().any(|c| c.len() != n) {
            return false;
        }
        let mut ridges: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (ci, c) in self.max_cones.iter().enumerate() {
            for skip in 0..n {
                let ridge: Vec<usize> = c
                    .rays()
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &r)| r)
                    .collect();
                ridges.entry(ridge).or_default().push(ci);
            }
        }
        if ridges.values().any(|owners| owners.len() != 2) {
            return false;
        }
        // connectivity of the facet adjacency graph
        let m = self.max_cones.len();
        let mut adj = vec![Vec::new(); m];
        for owners in ridges.values() {
            adj[owners[0]].push(owners[1]);
            adj[owners[1]].push(owners[0]);
        }
        let mut seen = vec![false; m];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(c) = stack.pop() {
            for &o in &adj[c] {
                if !seen[o] {
                    seen[o] = true;
                    stack.push(o);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn require_complete(self) -> Result<Fan, FanError> {
        if self.is_complete() {
            Ok(self)
        } else {
            Err(FanError::NotComplete)
        }
    }

    /// All cones whose ray set contains `rays`, by size then lexicographically.
    pub fn cones_with_rayset(&self, rays: &[usize]) -> Vec<Cone> {
        self.all_cones
            .iter()
            .filter(|c| c.contains_all(rays))
            .cloned()
            .collect()
    }

    /// True iff some maximal cone contains all of `rays`.
    pub fn rays_span_cone(&self, rays: &[usize]) -> bool {
        self.max_cones.iter().any(|c| c.contains_all(rays))
    }
}
