//! Named fan families and the classification cross-checks for weighted
//! projective spaces and surfaces.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::class_group::class_group;
use crate::fan::{validate_fan, Fan};
use crate::linalg::{gcd_of, IntVec};
use crate::orbits::Verdict;
use crate::radiance::find_bilateral;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Weights (1, d₁, …, dₙ); the leading 1 is included.
    WeightedProjective(Vec<u64>),
    Hirzebruch(u64),
    P1xP1,
    Projective(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid family spec: {0}")]
pub struct InvalidSpec(pub String);

impl FromStr for FamilySpec {
    type Err = InvalidSpec;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |why: &str| InvalidSpec(format!("{s:?}: {why}"));
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n.trim(), Some(a.trim())),
            None => (s.trim(), None),
        };
        let spec = match (name.to_ascii_lowercase().as_str(), arg) {
            ("wps", Some(a)) => {
                let weights = a
                    .split(',')
                    .map(|w| w.trim().parse::<u64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| bad("weights must be positive integers"))?;
                FamilySpec::WeightedProjective(weights)
            }
            ("hirzebruch", Some(a)) => {
                FamilySpec::Hirzebruch(a.parse().map_err(|_| bad("expected a nonnegative integer"))?)
            }
            ("p1xp1", None) => FamilySpec::P1xP1,
            ("pn", Some(a)) => FamilySpec::Projective(a.parse().map_err(|_| bad("expected a dimension"))?),
            _ => return Err(bad("expected wps:1,d1,..,dn | hirzebruch:d | p1xp1 | pn:n")),
        };
        spec.check()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::WeightedProjective(w) => {
                let w: Vec<String> = w.iter().map(u64::to_string).collect();
                write!(f, "wps:{}", w.join(","))
            }
            FamilySpec::Hirzebruch(d) => write!(f, "hirzebruch:{d}"),
            FamilySpec::P1xP1 => write!(f, "p1xp1"),
            FamilySpec::Projective(n) => write!(f, "pn:{n}"),
        }
    }
}

impl FamilySpec {
    fn check(&self) -> Result<(), InvalidSpec> {
        match self {
            FamilySpec::WeightedProjective(w) => {
                if w.len() < 2 {
                    return Err(InvalidSpec(format!("{self}: need at least two weights")));
                }
                if w[0] != 1 {
                    return Err(InvalidSpec(format!("{self}: first weight must be 1")));
                }
                if w.contains(&0) {
                    return Err(InvalidSpec(format!("{self}: weights must be positive")));
                }
            }
            FamilySpec::Projective(0) => return Err(InvalidSpec(format!("{self}: dimension must be positive"))),
            _ => {}
        }
        Ok(())
    }
}

fn v(xs: &[i64]) -> IntVec {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out.sort();
    out
}

/// The fan of a family member. A weighted projective negative ray −(d₁,…,dₙ)
/// is divided by gcd(dᵢ) so that it is primitive.
pub fn build(spec: &FamilySpec) -> Result<Fan, InvalidSpec> {
    spec.check()?;
    let (dim, rays, cones) = match spec {
        FamilySpec::WeightedProjective(w) => {
            let n = w.len() - 1;
            let d: IntVec = w[1..].iter().map(|&x| BigInt::from(x)).collect();
            let g = gcd_of(&d);
            let mut rays: Vec<IntVec> = (0..n)
                .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
                .collect();
            rays.push(d.iter().map(|x| -(x / &g)).collect());
            (n, rays, combinations(n + 1, n))
        }
        FamilySpec::Projective(n) => return build(&FamilySpec::WeightedProjective(vec![1; n + 1])),
        FamilySpec::Hirzebruch(d) => {
            let d = i64::try_from(*d).map_err(|_| InvalidSpec(format!("{spec}: d too large")))?;
            (
                2,
                vec![v(&[1, 0]), v(&[0, 1]), v(&[-1, -d]), v(&[0, -1])],
                vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
            )
        }
        FamilySpec::P1xP1 => (
            2,
            vec![v(&[1, 0]), v(&[0, 1]), v(&[-1, 0]), v(&[0, -1])],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        ),
    };
    validate_fan(dim, rays, cones).map_err(|e| InvalidSpec(format!("{spec}: {e}")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognizer {
    /// Class group of rank one; weights read off the bilateral structure.
    WeightedProjective { weights: Option<Vec<BigInt>> },
    /// Surfaces; negative rays in positive-basis coordinates.
    Surface { negative_coords: Option<Vec<IntVec>> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognizerCheck {
    pub recognizer: Recognizer,
    pub predicted_finite: bool,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: Vec<RecognizerCheck>,
}

impl CheckReport {
    pub fn agrees(&self) -> bool {
        self.checks.iter().all(|c| c.agrees)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("no classification recognizer applies (dimension {dim}, class group rank {free_rank})")]
pub struct NotApplicable {
    pub dim: usize,
    pub free_rank: usize,
}

/// Sorted weights 1, 1, d₂, … with each dividing the next.
pub fn weights_predict_finite(weights: &[BigInt]) -> bool {
    let mut w = weights.to_vec();
    w.sort();
    w.len() >= 2
        && w[0].is_one()
        && w[1].is_one()
        && w.windows(2).all(|p| (&p[1] % &p[0]).is_zero())
}

/// Negative rays match, up to swapping coordinates, −(1,d); −(1,0),−(0,1); or
/// −(1,d),−(0,1).
pub fn surface_predicts_finite(negative_coords: &[IntVec]) -> bool {
    let matches = |neg: &[IntVec]| {
        let mut rays: Vec<(BigInt, BigInt)> = neg.iter().map(|c| (-&c[0], -&c[1])).collect();
        rays.sort();
        let one = BigInt::one();
        let zero = BigInt::zero();
        match rays.as_slice() {
            [(a, d)] => a == &one && !d.is_negative(),
            [(a, b), (c, d)] => a == &zero && b == &one && c == &one && !d.is_negative(),
            _ => false,
        }
    };
    if negative_coords.iter().any(|c| c.len() != 2) {
        return false;
    }
    let swapped: Vec<IntVec> = negative_coords.iter().map(|c| vec![c[1].clone(), c[0].clone()]).collect();
    matches(negative_coords) || matches(&swapped)
}

/// Compares a verdict against the classifications of finite-orbit weighted
/// projective spaces and surfaces.
pub fn cross_check(fan: &Fan, verdict: &Verdict) -> Result<CheckReport, NotApplicable> {
    let free_rank = class_group(fan).free_rank;
    let bilateral = find_bilateral(fan);
    let actual = verdict.is_finite();
    let mut checks = Vec::new();
    if free_rank == 1 {
        let weights = bilateral.as_ref().map(|b| {
            let tau = b.negative[0];
            let mut w: Vec<BigInt> = b.coords(fan.ray(tau)).iter().map(|x| -x).collect();
            w.push(BigInt::one());
            w.sort();
            w
        });
        let predicted = weights.as_deref().is_some_and(weights_predict_finite);
        checks.push(RecognizerCheck {
            recognizer: Recognizer::WeightedProjective { weights },
            predicted_finite: predicted,
            agrees: predicted == actual,
        });
    }
    if fan.dim() == 2 {
        let negative_coords = bilateral
            .as_ref()
            .map(|b| b.negative.iter().map(|&t| b.coords(fan.ray(t))).collect::<Vec<_>>());
        let predicted = negative_coords.as_deref().is_some_and(surface_predicts_finite);
        checks.push(RecognizerCheck {
            recognizer: Recognizer::Surface { negative_coords },
            predicted_finite: predicted,
            agrees: predicted == actual,
        });
    }
    if checks.is_empty() {
        Err(NotApplicable {
            dim: fan.dim(),
            free_rank,
        })
    } else {
        Ok(CheckReport { checks })
    }
}
