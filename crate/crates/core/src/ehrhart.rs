//! Exact lattice-point counts of integer dilates of the fixed slices, the
//! two-cycle (segment) count formulas, and the interpolation route to the
//! volume: even dilates of the slice are honest lattice polytopes, so the
//! counts there fit a polynomial whose leading coefficient is the normalized
//! volume.

use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{rat, Int, Rational};
use crate::matrix::solve_linear_diophantine_usize;
use crate::perm::Permutation;

/// Largest power of two dividing `k`. Requires `k >= 1`.
pub fn two_valuation(k: u64) -> u32 {
    assert!(k > 0, "two_valuation needs a positive integer");
    k.trailing_zeros()
}

/// Lattice points of the `t`-th dilate of a segment slice (two cycles of
/// lengths `l1 >= l2`), by the parity/2-valuation case analysis. Even `t`
/// always gives `gcd*t + 1`; odd `t` splits into four cases.
pub fn segment_count(l1: usize, l2: usize, t: u64) -> Result<Int> {
    if l1 == 0 || l2 == 0 || t == 0 {
        return Err(Error::OutOfRange(
            "segment_count needs positive lengths and dilate".into(),
        ));
    }
    let (a, b) = (l1.max(l2) as u64, l1.min(l2) as u64);
    let g = Int::from(a.gcd(&b));
    let gt = &g * Int::from(t);
    if t % 2 == 0 {
        return Ok(gt + 1);
    }
    Ok(match (a % 2, b % 2) {
        (1, 1) => gt + 1,
        (0, 0) => {
            if two_valuation(a) == two_valuation(b) {
                gt
            } else {
                Int::from(0)
            }
        }
        _ => gt,
    })
}

/// A point of the dilate must be constant on each cycle with integer values
/// `c` satisfying `sum l_k c_k = t n(n+1)/2`, so the count enumerates `c`
/// over the box `[t, t*n]^m` by recursion on the remaining weighted sum,
/// then keeps the candidates inside the slice. Complexity scales with the
/// cycle count `m`, not with `n`.
pub fn count_lattice_points(sigma: &Permutation, t: u64) -> Result<Int> {
    if t == 0 {
        return Err(Error::OutOfRange("dilate must be positive".into()));
    }
    let lengths: Vec<usize> = sigma.cycles().iter().map(Vec::len).collect();
    let n = sigma.degree();
    if n == 0 {
        return Err(Error::Empty("permutation of degree zero"));
    }
    // The enumeration runs in i64 for speed; everything it touches is
    // bounded by t * n(n+1)/2, so guard that bound once here.
    let target_big: i128 = (t as i128) * (n as i128) * (n as i128 + 1) / 2;
    if target_big > (i64::MAX as i128) / 4 {
        return Err(Error::OutOfRange(
            "dilate too large for the lattice-point enumerator".into(),
        ));
    }
    // quick exit when the cycle-value equation has no integer solution
    let solution = solve_linear_diophantine_usize(&lengths, &Int::from(target_big))?;
    if solution.particular.is_none() {
        return Ok(Int::from(0));
    }

    let mut enumerator = DilateEnumerator {
        lengths: lengths.iter().map(|&l| l as i64).collect(),
        suffix_lengths: suffix_sums(&lengths),
        t: t as i64,
        hi: (t as i64) * (n as i64),
        values: vec![(0, 0); lengths.len()],
        scratch: vec![(0, 0); lengths.len()],
        count: 0,
    };
    enumerator.run(0, target_big as i64);
    Ok(Int::from(enumerator.count))
}

fn suffix_sums(lengths: &[usize]) -> Vec<i64> {
    let mut suffix = vec![0i64; lengths.len() + 1];
    for i in (0..lengths.len()).rev() {
        suffix[i] = suffix[i + 1] + lengths[i] as i64;
    }
    suffix
}

struct DilateEnumerator {
    lengths: Vec<i64>,
    suffix_lengths: Vec<i64>,
    t: i64,
    hi: i64,
    values: Vec<(i64, i64)>, // (cycle value, cycle length) per level
    scratch: Vec<(i64, i64)>,
    count: u128,
}

impl DilateEnumerator {
    fn run(&mut self, level: usize, remaining: i64) {
        let m = self.lengths.len();
        if level == m - 1 {
            let l = self.lengths[level];
            if remaining % l == 0 {
                let c = remaining / l;
                if c >= self.t && c <= self.hi {
                    self.values[level] = (c, l);
                    if self.leaf_is_inside() {
                        self.count += 1;
                    }
                }
            }
            return;
        }
        let l = self.lengths[level];
        let rest = self.suffix_lengths[level + 1];
        // bounds so that the remaining cycles can still land in the box
        let lo = div_ceil_i64(remaining - self.hi * rest, l).max(self.t);
        let hi = div_floor_i64(remaining - self.t * rest, l).min(self.hi);
        for c in lo..=hi {
            self.values[level] = (c, l);
            self.run(level + 1, remaining - c * l);
        }
    }

    /// Sorted prefix-sum test on the grouped values. Within a block of equal
    /// coordinates the constraint is concave in the prefix length, so
    /// checking at block boundaries suffices.
    fn leaf_is_inside(&mut self) -> bool {
        self.scratch.copy_from_slice(&self.values);
        self.scratch.sort_unstable();
        let mut coords = 0i64;
        let mut sum = 0i64;
        for &(c, l) in &self.scratch {
            coords += l;
            sum += c * l;
            if 2 * sum < self.t * coords * (coords + 1) {
                return false;
            }
        }
        true
    }
}

fn div_floor_i64(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn div_ceil_i64(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Counts for several dilates, optionally spread over worker threads.
pub fn dilate_counts(sigma: &Permutation, dilates: &[u64], threads: usize) -> Result<Vec<Int>> {
    let threads = threads.max(1).min(dilates.len().max(1));
    if threads == 1 {
        return dilates.iter().map(|&t| count_lattice_points(sigma, t)).collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = dilates
            .iter()
            .map(|&t| scope.spawn(move || count_lattice_points(sigma, t)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("dilate worker panicked"))
            .collect()
    })
}

/// Volume through lattice-point counts alone: sample the even dilates
/// `2, 4, ..., 2m`, fit the unique degree-`(m-1)` polynomial by exact
/// Lagrange interpolation, and read off its leading coefficient. Fully
/// independent of the closed form and of the tiling sum.
pub fn volume_by_interpolation(sigma: &Permutation) -> Result<Rational> {
    volume_by_interpolation_opts(sigma, 1)
}

pub fn volume_by_interpolation_opts(sigma: &Permutation, threads: usize) -> Result<Rational> {
    let m = sigma.cycle_count();
    if m == 1 {
        return Ok(rat(1));
    }
    let dilates: Vec<u64> = (1..=m as u64).map(|i| 2 * i).collect();
    let counts = dilate_counts(sigma, &dilates, threads)?;
    Ok(leading_coefficient(&dilates, &counts))
}

/// Leading coefficient of the interpolating polynomial through
/// `(x_i, y_i)`, via the divided-difference formula
/// `sum_i y_i / prod_{j != i} (x_i - x_j)`.
fn leading_coefficient(xs: &[u64], ys: &[Int]) -> Rational {
    let mut leading = rat(0);
    for (i, y) in ys.iter().enumerate() {
        let mut denom = Int::one();
        for (j, &xj) in xs.iter().enumerate() {
            if j != i {
                denom *= Int::from(xs[i] as i64 - xj as i64);
            }
        }
        leading += Rational::new(y.clone(), denom);
    }
    leading
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::perm::CycleType;
    use crate::polytope;

    fn sf(lengths: &[usize]) -> Permutation {
        CycleType::new(lengths.to_vec()).unwrap().standard_form()
    }

    #[test]
    fn two_valuation_examples() {
        assert_eq!(two_valuation(12), 2);
        assert_eq!(two_valuation(1), 0);
        assert_eq!(two_valuation(8), 3);
    }

    #[test]
    #[should_panic]
    fn two_valuation_of_zero_panics() {
        two_valuation(0);
    }

    #[test]
    fn count_examples() {
        // two points: (2,2,3,3) and (3,3,2,2)
        assert_eq!(count_lattice_points(&sf(&[2, 2]), 1).unwrap(), int(2));
        // mixed 2-valuations kill all odd dilates
        assert_eq!(count_lattice_points(&sf(&[4, 2]), 1).unwrap(), int(0));
        assert_eq!(count_lattice_points(&sf(&[4, 2]), 3).unwrap(), int(0));
        // segment (x, 9-x), x in {3,4,5,6}
        assert_eq!(count_lattice_points(&sf(&[1, 1]), 3).unwrap(), int(4));
    }

    #[test]
    fn count_rejects_zero_dilate() {
        assert!(count_lattice_points(&sf(&[2, 1]), 0).is_err());
    }

    #[test]
    fn segment_formula_examples() {
        assert_eq!(segment_count(2, 1, 1).unwrap(), int(1));
        assert_eq!(segment_count(2, 2, 2).unwrap(), int(5));
        assert_eq!(segment_count(4, 2, 3).unwrap(), int(0));
        assert_eq!(segment_count(3, 3, 5).unwrap(), int(16)); // both odd: 3*5+1
        assert_eq!(segment_count(6, 2, 3).unwrap(), int(6)); // same 2-valuation: 2*3
        assert!(segment_count(0, 1, 1).is_err());
    }

    #[test]
    fn segment_formula_matches_enumeration() {
        for l1 in 1..=5usize {
            for l2 in 1..=l1 {
                let sigma = sf(&[l1, l2]);
                for t in 1..=8u64 {
                    assert_eq!(
                        segment_count(l1, l2, t).unwrap(),
                        count_lattice_points(&sigma, t).unwrap(),
                        "l = ({l1},{l2}), t = {t}"
                    );
                }
            }
        }
    }

    #[test]
    fn single_cycle_dilates() {
        // point ((n+1)/2, ..., (n+1)/2): a lattice point iff t(n+1) is even
        let sigma = sf(&[3]);
        assert_eq!(count_lattice_points(&sigma, 1).unwrap(), int(1));
        let sigma = sf(&[2]);
        assert_eq!(count_lattice_points(&sigma, 1).unwrap(), int(0));
        assert_eq!(count_lattice_points(&sigma, 2).unwrap(), int(1));
    }

    #[test]
    fn counts_match_the_official_membership_test() {
        // pin the cycle-value enumeration to the full n-coordinate test
        for lengths in [&[2usize, 1][..], &[2, 2], &[3, 2, 1], &[1, 1, 1]] {
            let sigma = sf(lengths);
            let n = sigma.degree() as i64;
            for t in 1..=3u64 {
                let mut brute = 0i64;
                let m = sigma.cycle_count();
                let lo = t as i64;
                let hi = (t as i64) * n;
                let mut c = vec![lo; m];
                'outer: loop {
                    let x: Vec<Rational> = {
                        let mut x = vec![rat(0); sigma.degree()];
                        for (ci, cycle) in sigma.cycles().iter().enumerate() {
                            for &e in cycle {
                                x[e] = rat(c[ci]);
                            }
                        }
                        x
                    };
                    if polytope::contains(&sigma, &x, t).unwrap() {
                        brute += 1;
                    }
                    let mut level = m - 1;
                    loop {
                        if c[level] < hi {
                            c[level] += 1;
                            for v in c.iter_mut().skip(level + 1) {
                                *v = lo;
                            }
                            break;
                        }
                        if level == 0 {
                            break 'outer;
                        }
                        level -= 1;
                    }
                }
                assert_eq!(
                    count_lattice_points(&sigma, t).unwrap(),
                    int(brute),
                    "type {lengths:?}, t = {t}"
                );
            }
        }
    }

    #[test]
    fn interpolation_examples() {
        assert_eq!(volume_by_interpolation(&sf(&[1, 1, 1])).unwrap(), rat(3));
        assert_eq!(volume_by_interpolation(&sf(&[5])).unwrap(), rat(1));
        assert_eq!(volume_by_interpolation(&sf(&[2, 2])).unwrap(), rat(2));
    }

    #[test]
    fn even_dilate_counts_grow_strictly() {
        for lengths in [&[2usize, 1][..], &[2, 2], &[3, 2], &[2, 1, 1]] {
            let sigma = sf(lengths);
            let counts = dilate_counts(&sigma, &[2, 4, 6, 8], 2).unwrap();
            for w in counts.windows(2) {
                assert!(w[0] < w[1], "even dilate counts must grow for {lengths:?}");
            }
        }
    }
}
