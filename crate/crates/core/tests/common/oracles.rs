use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use toric_orbits::cox::{apply_root, apply_torus, random_rational, random_torus, sample_stratum_point, seeded_rng, t_orbit_of};
use toric_orbits::demazure::{choose_v, enumerate_roots, mark_unipotent_subgroup, DemazureRoot};
use toric_orbits::linalg::{dot, rank, IntVec};
use toric_orbits::orbits::{enumerate_basic_subsets, RadiantData};
use toric_orbits::Fan;

use super::iv;

pub fn radiant(f: &Fan) -> RadiantData {
    RadiantData::find(f).expect("bilateral fixture")
}

pub fn roots_in_u(f: &Fan, data: &RadiantData) -> Vec<DemazureRoot> {
    let mut roots = enumerate_roots(f).unwrap();
    let choice = choose_v(f, &data.bilateral, &roots);
    mark_unipotent_subgroup(&mut roots, &choice);
    roots
}

pub fn subsets(d: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << d).map(move |mask| (0..d).filter(|i| mask >> i & 1 == 1).collect())
}

pub fn mask(rays: &[usize]) -> u32 {
    rays.iter().fold(0, |m, &r| m | 1 << r)
}

pub fn check_partition(f: &Fan, data: &RadiantData) {
    let basic: Vec<(u32, u32)> = enumerate_basic_subsets(f, data)
        .iter()
        .map(|b| (mask(&b.rays), mask(&b.hat)))
        .collect();
    for zeros in 0u32..1 << f.ray_count() {
        let hits = basic.iter().filter(|&&(a, h)| a & zeros == 0 && h & !zeros == 0).count();
        assert_eq!(hits, 1, "zero pattern {zeros:b}");
    }
}

pub fn check_gale(f: &Fan, data: &RadiantData) {
    for b in enumerate_basic_subsets(f, data) {
        let outside: Vec<IntVec> = (0..f.ray_count())
            .filter(|r| !b.rays.contains(r))
            .map(|r| f.ray(r).clone())
            .collect();
        assert_eq!(b.classes_independent, rank(&outside) == f.dim(), "A = {:?}", b.rays);
    }
}

pub fn check_precedence_roots(f: &Fan, data: &RadiantData, roots: &[DemazureRoot]) {
    let d = f.ray_count();
    let prec = &data.precedence;
    for a in 0..d {
        for b in (0..d).filter(|&b| b != a) {
            let witnesses = roots
                .iter()
                .filter(|r| {
                    r.distinguished_ray == b
                        && r.in_u
                        && r.is_semisimple()
                        && (0..d).all(|x| {
                            let p = r.pairing(f, x);
                            if x == a {
                                p.is_one()
                            } else if x == b {
                                p == -BigInt::one()
                            } else {
                                p.is_zero()
                            }
                        })
                })
                .count();
            assert!(witnesses <= 1);
            assert_eq!(prec.precedes(a, b), witnesses == 1, "rays {a}, {b}");
        }
    }
    let bil = &data.bilateral;
    let n = bil.dim();
    let root_in_u = |e: &IntVec, at: usize| roots.iter().any(|r| &r.e == e && r.in_u && r.distinguished_ray == at);
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let e: IntVec = bil.dual(i).iter().zip(bil.dual(j)).map(|(x, y)| x - y).collect();
            let zero_on_negatives = bil.negative.iter().all(|&t| dot(&e, f.ray(t)).is_zero());
            let holds = root_in_u(&e, bil.positive[j]) && zero_on_negatives;
            assert_eq!(prec.precedes(bil.positive[i], bil.positive[j]), holds);
        }
    }
    for (ti, &t) in bil.negative.iter().enumerate() {
        for j in 0..n {
            let e: IntVec = bil.dual(j).iter().map(|x| -x).collect();
            let pairs_right = bil.negative.iter().enumerate().all(|(l, &tl)| {
                let p = dot(&e, f.ray(tl));
                if l == ti {
                    p.is_one()
                } else {
                    p.is_zero()
                }
            });
            let holds = root_in_u(&e, bil.positive[j]) && pairs_right;
            assert_eq!(prec.precedes(t, bil.positive[j]), holds);
        }
    }
}

pub fn check_cox_actions(f: &Fan, seed: u64) {
    let data = radiant(f);
    let roots = roots_in_u(f, &data);
    let in_u: Vec<&DemazureRoot> = roots.iter().filter(|r| r.in_u).collect();
    let mut rng = seeded_rng(seed);
    for b in enumerate_basic_subsets(f, &data) {
        for _ in 0..100 {
            let p = sample_stratum_point(&mut rng, f.ray_count(), &b, 0.5);
            // roots at rays of A ⊔ Â act trivially
            for r in in_u
                .iter()
                .filter(|r| b.rays.contains(&r.distinguished_ray) || b.hat.contains(&r.distinguished_ray))
            {
                assert_eq!(apply_root(&p, f, r, &random_rational(&mut rng)), p);
            }
            // the stratum is stable and A-coordinates are constant along U
            let mut q = apply_torus(&p, &random_torus(&mut rng, data.classes.rank()), &data.classes);
            assert_eq!(q.zero_pattern(), p.zero_pattern());
            assert_eq!(t_orbit_of(&q, f), t_orbit_of(&p, f));
            let before: Vec<BigRational> = b.rays.iter().map(|&r| q.coords[r].clone()).collect();
            for _ in 0..4 {
                if in_u.is_empty() {
                    break;
                }
                let r = in_u[rng.gen_range(0..in_u.len())];
                q = apply_root(&q, f, r, &random_rational(&mut rng));
                assert!(b.contains_pattern(&q.zero_pattern()));
            }
            let after: Vec<BigRational> = b.rays.iter().map(|&r| q.coords[r].clone()).collect();
            assert_eq!(before, after);
        }
    }
}

/// Roots by scanning the box [−r, r]^n, sorted by (ray, e).
pub fn brute_force_roots(f: &Fan, r: i64) -> Vec<(usize, IntVec)> {
    let mut brute = Vec::new();
    let n = f.dim();
    let mut e = vec![-r; n];
    'scan: loop {
        let ev = iv(&e);
        let pairs: Vec<BigInt> = (0..f.ray_count()).map(|x| dot(&ev, f.ray(x))).collect();
        let minus: Vec<usize> = (0..pairs.len()).filter(|&x| pairs[x] == BigInt::from(-1)).collect();
        if minus.len() == 1 && pairs.iter().filter(|p| p.is_negative()).count() == 1 {
            brute.push((minus[0], ev));
        }
        for x in e.iter_mut() {
            *x += 1;
            if *x <= r {
                continue 'scan;
            }
            *x = -r;
        }
        break;
    }
    brute.sort();
    brute
}

