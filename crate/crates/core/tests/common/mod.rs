#![allow(dead_code)]

pub mod oracles;

use num_bigint::BigInt;
use rand::Rng;
use toric_orbits::catalog::{build, FamilySpec};
use toric_orbits::linalg::IntVec;
use toric_orbits::{validate_fan, Fan};

pub fn iv(xs: &[i64]) -> IntVec {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn fan(rays: &[&[i64]], cones: &[&[usize]]) -> Fan {
    validate_fan(
        rays[0].len(),
        rays.iter().map(|r| iv(r)).collect(),
        cones.iter().map(|c| c.to_vec()).collect(),
    )
    .unwrap()
}

pub fn family(s: &str) -> Fan {
    build(&s.parse::<FamilySpec>().unwrap()).unwrap()
}

/// Rays (1,0), (0,1), (−1,−d), (−1,0).
pub fn negative_surface(d: i64) -> Fan {
    fan(
        &[&[1, 0], &[0, 1], &[-1, -d], &[-1, 0]],
        &[&[0, 1], &[1, 3], &[3, 2], &[2, 0]],
    )
}

pub fn del_pezzo_six() -> Fan {
    fan(
        &[&[1, 0], &[1, 1], &[0, 1], &[-1, 0], &[-1, -1], &[0, -1]],
        &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 0]],
    )
}

pub fn p1_cubed() -> Fan {
    let mut cones = Vec::new();
    for a in [0, 3] {
        for b in [1, 4] {
            for c in [2, 5] {
                cones.push(vec![a, b, c]);
            }
        }
    }
    validate_fan(
        3,
        vec![
            iv(&[1, 0, 0]),
            iv(&[0, 1, 0]),
            iv(&[0, 0, 1]),
            iv(&[-1, 0, 0]),
            iv(&[0, -1, 0]),
            iv(&[0, 0, -1]),
        ],
        cones,
    )
    .unwrap()
}

pub fn p1_x_p2() -> Fan {
    let mut cones = Vec::new();
    for a in [0, 3] {
        for bc in [[1, 2], [1, 4], [2, 4]] {
            cones.push(vec![a, bc[0], bc[1]]);
        }
    }
    validate_fan(
        3,
        vec![iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1]), iv(&[-1, 0, 0]), iv(&[0, -1, -1])],
        cones,
    )
    .unwrap()
}

/// Complete surface with rays e₁, e₂ followed by `negatives`, each of which
/// must be primitive with both coordinates ≤ 0.
pub fn bilateral_surface(negatives: &[(i64, i64)]) -> Fan {
    let mut neg = negatives.to_vec();
    // counterclockwise from (−1,0) to (0,−1)
    neg.sort_by(|&(a1, b1), &(a2, b2)| (b1 * a2).cmp(&(b2 * a1)));
    let mut rays = vec![iv(&[1, 0]), iv(&[0, 1])];
    rays.extend(neg.iter().map(|&(a, b)| iv(&[a, b])));
    let d = rays.len();
    let mut cones = vec![vec![0, 1]];
    for i in 1..d - 1 {
        cones.push(vec![i, i + 1]);
    }
    cones.push(vec![d - 1, 0]);
    validate_fan(2, rays, cones).unwrap()
}

/// A random complete bilateral surface with up to `max_neg` negative rays.
pub fn random_bilateral_surface<R: Rng>(rng: &mut R, max_neg: usize) -> Fan {
    let mut pool: Vec<(i64, i64)> = Vec::new();
    for a in 0..=4i64 {
        for b in 0..=4i64 {
            if (a, b) != (0, 0) && num_integer::gcd(a, b) == 1 {
                pool.push((-a, -b));
            }
        }
    }
    loop {
        let count = rng.gen_range(1..=max_neg);
        let mut chosen = Vec::new();
        while chosen.len() < count {
            let c = pool[rng.gen_range(0..pool.len())];
            if !chosen.contains(&c) {
                chosen.push(c);
            }
        }
        if chosen == [(-1, 0)] || chosen == [(0, -1)] {
            continue;
        }
        return bilateral_surface(&chosen);
    }
}

/// Named fixtures that admit a bilateral structure.
pub fn bilateral_fixtures() -> Vec<(String, Fan)> {
    let mut out: Vec<(String, Fan)> = [
        "pn:1",
        "pn:2",
        "pn:3",
        "p1xp1",
        "hirzebruch:0",
        "hirzebruch:1",
        "hirzebruch:2",
        "hirzebruch:3",
        "hirzebruch:5",
        "wps:1,1,2",
        "wps:1,1,3",
        "wps:1,2,3",
        "wps:1,1,2,4",
        "wps:1,1,2,3",
        "wps:1,1,1,2",
        "wps:1,2,3,5",
    ]
    .iter()
    .map(|s| (s.to_string(), family(s)))
    .collect();
    out.push(("negative surface d=2".into(), negative_surface(2)));
    out.push(("negative surface d=3".into(), negative_surface(3)));
    out.push(("P1xP1xP1".into(), p1_cubed()));
    out.push(("P1xP2".into(), p1_x_p2()));
    out.push((
        "surface with 7 rays".into(),
        bilateral_surface(&[(-1, 0), (-2, -1), (-1, -1), (-1, -2), (0, -1)]),
    ));
    out.push((
        "surface with 14 rays".into(),
        bilateral_surface(&[
            (-1, 0),
            (-4, -1),
            (-3, -1),
            (-2, -1),
            (-3, -2),
            (-1, -1),
            (-3, -4),
            (-2, -3),
            (-1, -2),
            (-1, -3),
            (-1, -4),
            (0, -1),
        ]),
    ));
    out
}

/// Every (1, 1, d₂, …, dₙ) with 1 ≤ dᵢ ≤ `max_weight` and 1 ≤ n ≤ `max_dim`,
/// in every order.
pub fn weighted_sweep(max_dim: usize, max_weight: u64) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    let mut layer = vec![vec![1u64, 1]];
    for _ in 1..=max_dim {
        out.extend(layer.iter().cloned().map(FamilySpec::WeightedProjective));
        layer = layer
            .iter()
            .flat_map(|w| {
                (1..=max_weight).map(move |d| {
                    let mut next = w.clone();
                    next.push(d);
                    next
                })
            })
            .collect();
    }
    out
}
