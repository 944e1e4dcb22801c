//! Exact simulation of the torus G_X and of root subgroups acting on total
//! coordinate space, over ℚ.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::class_group::ClassTable;
use crate::demazure::DemazureRoot;
use crate::fan::{Cone, Fan};
use crate::orbits::{BasicSubset, OrbitRecord};

/// A point of 𝔸^d, one coordinate per ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxPoint {
    pub coords: Vec<BigRational>,
}

impl CoxPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        CoxPoint { coords }
    }

    pub fn from_i64(xs: &[i64]) -> Self {
        CoxPoint::new(xs.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    pub fn zero_pattern(&self) -> Vec<usize> {
        (0..self.coords.len()).filter(|&i| self.coords[i].is_zero()).collect()
    }

    /// ∏ x_ρ^{b_ρ}; negative exponents need nonzero coordinates.
    pub fn laurent_monomial(&self, exponents: &[(usize, BigInt)]) -> BigRational {
        exponents
            .iter()
            .fold(BigRational::one(), |acc, (r, b)| acc * power(&self.coords[*r], b))
    }
}

fn power(x: &BigRational, e: &BigInt) -> BigRational {
    let n = e.abs().to_u32().expect("exponent out of range");
    let mut acc = BigRational::one();
    for _ in 0..n {
        acc *= x;
    }
    if e.is_negative() {
        assert!(!x.is_zero(), "negative power of zero");
        acc.recip()
    } else {
        acc
    }
}

/// x_ρ ↦ x_ρ + s·X_e on the distinguished ray ρ, X_e = ∏_{ρ'≠ρ} x_{ρ'}^{⟨e,n_{ρ'}⟩}.
pub fn apply_root(p: &CoxPoint, fan: &Fan, root: &DemazureRoot, s: &BigRational) -> CoxPoint {
    let rho = root.distinguished_ray;
    let exps: Vec<(usize, BigInt)> = (0..fan.ray_count())
        .filter(|&r| r != rho)
        .map(|r| (r, root.pairing(fan, r)))
        .collect();
    debug_assert!(exps.iter().all(|(_, b)| !b.is_negative()));
    let mut out = p.clone();
    out.coords[rho] += s * p.laurent_monomial(&exps);
    out
}

/// x_ρ ↦ ∏ⱼ tⱼ^{class(ρ)ⱼ} · x_ρ.
pub fn apply_torus(p: &CoxPoint, t: &[BigRational], classes: &ClassTable) -> CoxPoint {
    assert_eq!(t.len(), classes.rank());
    let coords = p
        .coords
        .iter()
        .enumerate()
        .map(|(r, x)| {
            let scale = t
                .iter()
                .zip(classes.class_of(r))
                .fold(BigRational::one(), |acc, (tj, c)| acc * power(tj, c));
            x * scale
        })
        .collect();
    CoxPoint::new(coords)
}

/// The cone whose ray set is the zero pattern, if it is one.
pub fn t_orbit_of(p: &CoxPoint, fan: &Fan) -> Option<Cone> {
    let zeros = p.zero_pattern();
    fan.has_cone(&zeros).then(|| Cone::new(zeros))
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero rational with numerator in ±[1,7] and denominator in [1,5].
pub fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    let num: i64 = rng.gen_range(1..=7) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let den: i64 = rng.gen_range(1..=5);
    BigRational::new(num.into(), den.into())
}

/// Rational with numerator in [−7,7] and denominator in [1,5].
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    let num: i64 = rng.gen_range(-7..=7);
    let den: i64 = rng.gen_range(1..=5);
    BigRational::new(num.into(), den.into())
}

pub fn random_torus<R: Rng + ?Sized>(rng: &mut R, k: usize) -> Vec<BigRational> {
    (0..k).map(|_| random_nonzero(rng)).collect()
}

/// A random point of Z_A: A-coordinates nonzero, Â-coordinates zero, the rest
/// zero with probability `zero_prob`.
pub fn sample_stratum_point<R: Rng + ?Sized>(
    rng: &mut R,
    ray_count: usize,
    basic: &BasicSubset,
    zero_prob: f64,
) -> CoxPoint {
    let coords = (0..ray_count)
        .map(|r| {
            if basic.hat.contains(&r) {
                BigRational::zero()
            } else if basic.rays.contains(&r) || !rng.gen_bool(zero_prob) {
                random_nonzero(rng)
            } else {
                BigRational::zero()
            }
        })
        .collect();
    CoxPoint::new(coords)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleReport {
    pub points: usize,
    /// Points that left their stratum, or whose torus orbit is not listed.
    pub mismatches: usize,
}

/// Samples points of each orbit stratum, moves them by random elements of
/// G_X and of root subgroups in U, and checks that they stay in their stratum
/// and that every torus orbit they hit is listed in the record.
pub fn check_catalog(
    fan: &Fan,
    classes: &ClassTable,
    roots: &[DemazureRoot],
    records: &[OrbitRecord],
    seed: u64,
    trials: usize,
) -> SampleReport {
    let mut rng = seeded_rng(seed);
    let in_u: Vec<&DemazureRoot> = roots.iter().filter(|r| r.in_u).collect();
    let mut report = SampleReport {
        points: 0,
        mismatches: 0,
    };
    for rec in records {
        for _ in 0..trials {
            let mut p = sample_stratum_point(&mut rng, fan.ray_count(), &rec.basic, 0.5);
            let t = random_torus(&mut rng, classes.rank());
            p = apply_torus(&p, &t, classes);
            for _ in 0..3 {
                if in_u.is_empty() {
                    break;
                }
                let root = in_u[rng.gen_range(0..in_u.len())];
                p = apply_root(&p, fan, root, &random_rational(&mut rng));
            }
            report.points += 1;
            let stays = rec.basic.contains_pattern(&p.zero_pattern());
            let listed = match t_orbit_of(&p, fan) {
                Some(c) => rec.t_orbit_cones.contains(&c),
                None => true,
            };
            if !(stays && listed) {
                report.mismatches += 1;
            }
        }
    }
    report
}
