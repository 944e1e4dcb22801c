//! Nonnegative integer combinations of nonnegative generators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{IntVec, LinalgError};

fn check_inputs(target: &[BigInt], gens: &[IntVec]) -> Result<bool, LinalgError> {
    for (i, g) in gens.iter().enumerate() {
        if g.len() != target.len() {
            return Err(LinalgError::DimensionMismatch {
                expected: target.len(),
                found: g.len(),
            });
        }
        if g.iter().any(Signed::is_negative) {
            return Err(LinalgError::NegativeEntry);
        }
        if g.iter().all(Zero::is_zero) {
            return Err(LinalgError::DegenerateGenerator(i));
        }
    }
    Ok(!target.iter().any(Signed::is_negative))
}

/// Largest multiple of `g` that fits under `rest` coordinatewise.
fn bound<T: Integer + Signed + Clone>(rest: &[T], g: &[T]) -> T {
    rest.iter()
        .zip(g)
        .filter(|(_, gj)| gj.is_positive())
        .map(|(r, gj)| r.div_floor(gj))
        .min()
        .expect("generator is nonzero")
}

struct Search<'a, T> {
    gens: &'a [Vec<T>],
    /// `support[i][j]`: some generator at position ≥ i is positive in coordinate j
    support: Vec<Vec<bool>>,
    coeffs: Vec<T>,
}

impl<'a, T: Integer + Signed + Clone> Search<'a, T> {
    fn new(gens: &'a [Vec<T>], dim: usize) -> Self {
        let mut support = vec![vec![false; dim]; gens.len() + 1];
        for i in (0..gens.len()).rev() {
            for j in 0..dim {
                support[i][j] = support[i + 1][j] || gens[i][j].is_positive();
            }
        }
        Search {
            gens,
            support,
            coeffs: vec![T::zero(); gens.len()],
        }
    }

    /// Depth-first over generators in order, coefficients ascending; calls
    /// `visit` on every solution and stops when it returns `true`.
    fn run(&mut self, i: usize, rest: &mut [T], visit: &mut dyn FnMut(&[T]) -> bool) -> bool {
        if rest
            .iter()
            .zip(&self.support[i])
            .any(|(r, &s)| r.is_positive() && !s)
        {
            return false;
        }
        if i == self.gens.len() {
            return visit(&self.coeffs);
        }
        let g = &self.gens[i];
        let max = bound(rest, g);
        let mut a = T::zero();
        loop {
            self.coeffs[i] = a.clone();
            if self.run(i + 1, rest, visit) {
                return true;
            }
            if a >= max {
                break;
            }
            for (r, gj) in rest.iter_mut().zip(g) {
                *r = r.clone() - gj.clone();
            }
            a = a + T::one();
        }
        // undo the subtractions
        for (r, gj) in rest.iter_mut().zip(g) {
            *r = r.clone() + gj.clone() * a.clone();
        }
        self.coeffs[i] = T::zero();
        false
    }
}

/// Machine-word copies of the inputs when every entry fits. The search only
/// ever holds values between 0 and the target, so i64 cannot overflow.
fn narrow(target: &[BigInt], gens: &[IntVec]) -> Option<(Vec<i64>, Vec<Vec<i64>>)> {
    let t = target.iter().map(ToPrimitive::to_i64).collect::<Option<Vec<_>>>()?;
    let g = gens
        .iter()
        .map(|g| g.iter().map(ToPrimitive::to_i64).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    Some((t, g))
}

/// Runs the search, on i64 when possible.
fn search(target: &[BigInt], gens: &[IntVec], visit: &mut dyn FnMut(IntVec) -> bool) {
    if let Some((mut rest, small)) = narrow(target, gens) {
        Search::new(&small, target.len()).run(0, &mut rest, &mut |c| {
            visit(c.iter().map(|&x| BigInt::from(x)).collect())
        });
    } else {
        let mut rest = target.to_vec();
        Search::new(gens, target.len()).run(0, &mut rest, &mut |c| visit(c.to_vec()));
    }
}

/// Membership of `target` in the monoid of `gens`, which must be
/// nonnegative and nonzero. No input checks; for hot loops.
pub(crate) fn in_monoid<T: Integer + Signed + Clone>(target: &[T], gens: &[Vec<T>]) -> bool {
    if target.iter().any(Signed::is_negative) {
        return false;
    }
    let mut rest = target.to_vec();
    Search::new(gens, target.len()).run(0, &mut rest, &mut |_| true)
}

/// Finds nonnegative integers `a` with `Σ aᵢ·gensᵢ = target`.
///
/// The search is exhaustive within `aᵢ ≤ min_j ⌊targetⱼ / gensᵢⱼ⌋`, so `None`
/// certifies infeasibility. The lexicographically smallest solution is
/// returned.
pub fn solve_nonneg(target: &[BigInt], gens: &[IntVec]) -> Result<Option<IntVec>, LinalgError> {
    if !check_inputs(target, gens)? {
        return Ok(None);
    }
    let mut found = None;
    search(target, gens, &mut |c| {
        found = Some(c);
        true
    });
    Ok(found)
}

/// Every solution of `Σ aᵢ·gensᵢ = target`, in lexicographic order. `limit`
/// caps the number returned.
pub fn all_nonneg_solutions(
    target: &[BigInt],
    gens: &[IntVec],
    limit: usize,
) -> Result<Vec<IntVec>, LinalgError> {
    if !check_inputs(target, gens)? {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    search(target, gens, &mut |c| {
        out.push(c);
        out.len() >= limit
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{dot, ivec};
    use proptest::prelude::*;

    #[test]
    fn numerical_semigroup() {
        assert_eq!(
            solve_nonneg(&ivec(&[5]), &[ivec(&[2]), ivec(&[3])]).unwrap(),
            Some(ivec(&[1, 1]))
        );
        assert_eq!(solve_nonneg(&ivec(&[1]), &[ivec(&[2]), ivec(&[3])]).unwrap(), None);
        assert_eq!(
            solve_nonneg(&ivec(&[0]), &[ivec(&[2])]).unwrap(),
            Some(ivec(&[0]))
        );
    }

    #[test]
    fn two_dimensional_infeasible() {
        let gens = [ivec(&[1, 0]), ivec(&[2, 1])];
        assert_eq!(solve_nonneg(&ivec(&[0, 1]), &gens).unwrap(), None);
        let gens = [ivec(&[2, 0]), ivec(&[0, 1])];
        assert_eq!(solve_nonneg(&ivec(&[1, 1]), &gens).unwrap(), None);
    }

    #[test]
    fn lexicographically_first() {
        // 6 = 3·2 = 2·3 = 1·6 ; smallest first coefficient wins
        let gens = [ivec(&[2]), ivec(&[3]), ivec(&[6])];
        assert_eq!(
            solve_nonneg(&ivec(&[6]), &gens).unwrap(),
            Some(ivec(&[0, 0, 1]))
        );
        let all = all_nonneg_solutions(&ivec(&[6]), &gens, usize::MAX).unwrap();
        assert_eq!(all, vec![ivec(&[0, 0, 1]), ivec(&[0, 2, 0]), ivec(&[3, 0, 0])]);
    }

    #[test]
    fn wide_entries_use_big_integers() {
        let big: BigInt = BigInt::from(1u8) << 80;
        let gens = [vec![big.clone(), BigInt::from(1)], ivec(&[3, 1])];
        let target = vec![&big * 2 + 6, BigInt::from(4)];
        assert_eq!(solve_nonneg(&target, &gens).unwrap(), Some(ivec(&[2, 2])));
        assert_eq!(solve_nonneg(&[&big + 1, BigInt::from(1)], &gens).unwrap(), None);
    }

    #[test]
    fn errors() {
        assert_eq!(
            solve_nonneg(&ivec(&[1, 1]), &[ivec(&[1, 0]), ivec(&[0, 0])]),
            Err(LinalgError::DegenerateGenerator(1))
        );
        assert_eq!(
            solve_nonneg(&ivec(&[1]), &[ivec(&[-1])]),
            Err(LinalgError::NegativeEntry)
        );
        assert_eq!(solve_nonneg(&ivec(&[-1]), &[ivec(&[1])]).unwrap(), None);
    }

    /// Independent brute force over the full box `0 ≤ aᵢ ≤ max(target)`.
    fn brute(target: &[i64], gens: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let cap = target.iter().copied().max().unwrap_or(0);
        let mut out = Vec::new();
        let mut a = vec![0i64; gens.len()];
        loop {
            let sum: Vec<i64> = (0..target.len())
                .map(|j| gens.iter().zip(&a).map(|(g, k)| g[j] * k).sum())
                .collect();
            if sum == target {
                out.push(a.clone());
            }
            let mut k = gens.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if a[k] < cap {
                    a[k] += 1;
                    for x in a[k + 1..].iter_mut() {
                        *x = 0;
                    }
                    break;
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]
        #[test]
        fn matches_brute_force(
            target in proptest::collection::vec(0i64..7, 2),
            raw in proptest::collection::vec(proptest::collection::vec(0i64..4, 2), 1..5),
        ) {
            let gens: Vec<Vec<i64>> = raw.into_iter().filter(|g| g.iter().any(|&x| x > 0)).collect();
            prop_assume!(!gens.is_empty());
            let big: Vec<IntVec> = gens.iter().map(|g| ivec(g)).collect();
            let expected = brute(&target, &gens);
            let got = all_nonneg_solutions(&ivec(&target), &big, usize::MAX).unwrap();
            let expected_big: Vec<IntVec> = expected.iter().map(|a| ivec(a)).collect();
            prop_assert_eq!(&got, &expected_big);
            let first = solve_nonneg(&ivec(&target), &big).unwrap();
            prop_assert_eq!(first.clone(), expected_big.first().cloned());
            if let Some(a) = first {
                for j in 0..target.len() {
                    let col: IntVec = big.iter().map(|g| g[j].clone()).collect();
                    prop_assert_eq!(dot(&a, &col), BigInt::from(target[j]));
                }
            }
        }
    }
}
