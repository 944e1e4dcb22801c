//! Exact rational feasibility and coordinate bounds by Fourier–Motzkin
//! elimination, plus bounded lattice-point enumeration on top of it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{dot, IntVec, LinalgError};

/// Equalities `a·x = b` and inequalities `a·x ≥ b` over a common dimension.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinearSystem {
    dim: usize,
    pub equalities: Vec<(IntVec, BigInt)>,
    pub inequalities: Vec<(IntVec, BigInt)>,
}

impl LinearSystem {
    pub fn new(dim: usize) -> Self {
        LinearSystem {
            dim,
            ..Default::default()
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn equal(mut self, coeffs: IntVec, rhs: impl Into<BigInt>) -> Self {
        assert_eq!(coeffs.len(), self.dim, "coefficient length mismatch");
        self.equalities.push((coeffs, rhs.into()));
        self
    }

    pub fn at_least(mut self, coeffs: IntVec, rhs: impl Into<BigInt>) -> Self {
        assert_eq!(coeffs.len(), self.dim, "coefficient length mismatch");
        self.inequalities.push((coeffs, rhs.into()));
        self
    }

    pub fn at_most(self, coeffs: IntVec, rhs: impl Into<BigInt>) -> Self {
        let neg = coeffs.into_iter().map(|c| -c).collect();
        let rhs: BigInt = rhs.into();
        self.at_least(neg, -rhs)
    }

    /// True iff `x` satisfies every constraint.
    pub fn satisfied_by(&self, x: &[BigInt]) -> bool {
        self.equalities.iter().all(|(a, b)| &dot(a, x) == b)
            && self.inequalities.iter().all(|(a, b)| &dot(a, x) >= b)
    }

    /// Rational feasibility.
    pub fn is_feasible(&self) -> bool {
        project(self, &vec![false; self.dim]).is_some()
    }

    /// Exact rational range of coordinate `i` over the feasible region, or
    /// `None` when the region is empty.
    pub fn coordinate_bounds(&self, i: usize) -> Option<CoordinateBounds> {
        let mut keep = vec![false; self.dim];
        keep[i] = true;
        let rows = project(self, &keep)?;
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for (a, b) in rows {
            let c = &a[i];
            if c.is_zero() {
                continue;
            }
            let q = BigRational::new(b, c.clone());
            if c.is_positive() {
                if lower.as_ref().is_none_or(|l| &q > l) {
                    lower = Some(q);
                }
            } else if upper.as_ref().is_none_or(|u| &q < u) {
                upper = Some(q);
            }
        }
        Some(CoordinateBounds {
            lower: lower.map_or(Bound::Infinite, Bound::Finite),
            upper: upper.map_or(Bound::Infinite, Bound::Finite),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    Finite(BigRational),
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateBounds {
    pub lower: Bound,
    pub upper: Bound,
}

type Row = (IntVec, BigInt);

/// Divides a row by the gcd of all its entries (rhs included), which keeps the
/// rational solution set unchanged.
fn normalize((a, b): Row) -> Row {
    let g = a.iter().fold(b.clone(), |g, x| g.gcd(x));
    if g.is_zero() || g == BigInt::from(1) {
        return (a, b);
    }
    (a.into_iter().map(|x| x / &g).collect(), b / &g)
}

/// Eliminates every variable with `keep[j] == false`. Returns the remaining
/// inequalities (coefficients on eliminated variables are zero), or `None`
/// when the system is infeasible over Q.
fn project(sys: &LinearSystem, keep: &[bool]) -> Option<Vec<Row>> {
    let n = sys.dim;
    let mut eqs: Vec<Row> = sys.equalities.clone();
    let mut ineqs: Vec<Row> = sys.inequalities.clone();

    // Substitute out eliminated variables using equalities first.
    for j in (0..n).filter(|&j| !keep[j]) {
        let Some(p) = eqs.iter().position(|(a, _)| !a[j].is_zero()) else {
            continue;
        };
        let (pa, pb) = eqs.swap_remove(p);
        let pc = pa[j].clone();
        let (mult, sign) = (pc.abs(), pc.signum());
        let combine = |(a, b): Row| -> Row {
            if a[j].is_zero() {
                return (a, b);
            }
            let f = &a[j] * &sign;
            let na = a.iter().zip(&pa).map(|(x, y)| x * &mult - &f * y).collect();
            let nb = &b * &mult - &f * &pb;
            normalize((na, nb))
        };
        eqs = eqs.into_iter().map(combine).collect();
        ineqs = ineqs.into_iter().map(combine).collect();
    }

    for (a, b) in eqs {
        if a.iter().all(Zero::is_zero) {
            if !b.is_zero() {
                return None;
            }
            continue;
        }
        let neg: IntVec = a.iter().map(|x| -x).collect();
        ineqs.push((a, b.clone()));
        ineqs.push((neg, -b));
    }
    ineqs = prune(ineqs)?;

    for j in (0..n).filter(|&j| !keep[j]) {
        let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
        for row in ineqs {
            if row.0[j].is_positive() {
                pos.push(row);
            } else if row.0[j].is_negative() {
                neg.push(row);
            } else {
                zero.push(row);
            }
        }
        for (pa, pb) in &pos {
            for (na, nb) in &neg {
                let (p, q) = (&pa[j], -&na[j]);
                let a = pa.iter().zip(na).map(|(x, y)| x * &q + y * p).collect();
                let b = pb * &q + nb * p;
                zero.push(normalize((a, b)));
            }
        }
        ineqs = prune(zero)?;
    }
    Some(ineqs)
}

/// Drops trivial rows and, for identical coefficient vectors, keeps only the
/// tightest bound. `None` on a contradictory row `0 ≥ b > 0`.
fn prune(rows: Vec<Row>) -> Option<Vec<Row>> {
    let mut best: BTreeMap<IntVec, BigInt> = BTreeMap::new();
    for (a, b) in rows {
        if a.iter().all(Zero::is_zero) {
            if b.is_positive() {
                return None;
            }
            continue;
        }
        let (a, b) = normalize_coeffs(a, b);
        match best.get_mut(&a) {
            Some(cur) if *cur >= b => {}
            Some(cur) => *cur = b,
            None => {
                best.insert(a, b);
            }
        }
    }
    Some(best.into_iter().collect())
}

/// Scales `a·x ≥ b` so that `a` is primitive. The rhs may become fractional;
/// we keep it integral by scaling instead when the division is not exact.
fn normalize_coeffs(a: IntVec, b: BigInt) -> (IntVec, BigInt) {
    let g = a.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g == BigInt::from(1) || !b.is_multiple_of(&g) {
        return (a, b);
    }
    (a.into_iter().map(|x| x / &g).collect(), b / &g)
}

/// All integer points of `sys`, sorted lexicographically.
///
/// Each coordinate is first bounded exactly over Q; an unbounded coordinate is
/// an error. The bounding box is then scanned and filtered.
pub fn lattice_points(sys: &LinearSystem) -> Result<Vec<IntVec>, LinalgError> {
    let n = sys.dim();
    let mut ranges = Vec::with_capacity(n);
    for i in 0..n {
        let Some(bounds) = sys.coordinate_bounds(i) else {
            return Ok(Vec::new());
        };
        match (bounds.lower, bounds.upper) {
            (Bound::Finite(lo), Bound::Finite(hi)) => {
                let (lo, hi) = (lo.ceil().to_integer(), hi.floor().to_integer());
                if lo > hi {
                    return Ok(Vec::new());
                }
                ranges.push((lo, hi));
            }
            _ => return Err(LinalgError::Unbounded(i)),
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if sys.satisfied_by(&[]) {
            out.push(Vec::new());
        }
        return Ok(out);
    }
    let mut cur: IntVec = ranges.iter().map(|(lo, _)| lo.clone()).collect();
    loop {
        if sys.satisfied_by(&cur) {
            out.push(cur.clone());
        }
        // odometer, last coordinate fastest
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if cur[k] < ranges[k].1 {
                cur[k] += 1;
                for (c, (lo, _)) in cur[k + 1..].iter_mut().zip(&ranges[k + 1..]) {
                    *c = lo.clone();
                }
                break;
            }
        }
    }
}
