//! The slice of the permutahedron fixed by a permutation: its vertices, its
//! inequality description, and its zonotope (Minkowski sum) description.
//!
//! For a permutation with cycles of lengths `l_1 >= ... >= l_m` the slice is
//! an `(m-1)`-dimensional polytope with `m!` vertices, one per linear order
//! of the cycles, and it is a translate of the zonotope generated by the
//! vectors `l_k e_{C_j} - l_j e_{C_k}` over cycle pairs `j < k` (where `e_C`
//! is the indicator vector of the cycle support `C`).

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{coordinate_sum, int, rat, ratio, Int, Rational, RationalPoint};
use crate::perm::{inversion_table, CycleType, PairTable, Permutation};

/// All descriptions of one fixed slice, bundled. Immutable after
/// construction.
#[derive(Debug, Clone)]
pub struct FixedPolytope {
    sigma: Permutation,
    cycle_type: CycleType,
    vertices: Vec<(Vec<usize>, RationalPoint)>,
    generators: Vec<((usize, usize), Vec<Int>)>,
    translation: RationalPoint,
    dimension: usize,
}

impl FixedPolytope {
    pub fn new(sigma: Permutation) -> Self {
        let cycle_type = sigma.cycle_type();
        let vertices = sigma_vertices(&sigma);
        let (generators, translation) = zonotope_generators(&sigma);
        let dimension = dimension(&sigma);
        FixedPolytope {
            sigma,
            cycle_type,
            vertices,
            generators,
            translation,
            dimension,
        }
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn cycle_type(&self) -> &CycleType {
        &self.cycle_type
    }

    /// The `m!` vertices, each with the linear order of cycles it comes from.
    pub fn vertices(&self) -> &[(Vec<usize>, RationalPoint)] {
        &self.vertices
    }

    pub fn generators(&self) -> &[((usize, usize), Vec<Int>)] {
        &self.generators
    }

    pub fn translation(&self) -> &RationalPoint {
        &self.translation
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn contains(&self, x: &[Rational], dilate: u64) -> Result<bool> {
        contains(&self.sigma, x, dilate)
    }

    pub fn vertex_of_order(&self, order: &[usize]) -> Result<RationalPoint> {
        vertex_of_order(&self.sigma, order)
    }
}

/// Projection of a point onto the fixed subspace of `sigma`: each coordinate
/// is replaced by the mean over its cycle. Linear, idempotent, and
/// sum-preserving.
pub fn orbit_average(sigma: &Permutation, x: &[Rational]) -> Result<RationalPoint> {
    if x.len() != sigma.degree() {
        return Err(Error::PointLength {
            expected: sigma.degree(),
            got: x.len(),
        });
    }
    let mut out = vec![rat(0); x.len()];
    for cycle in sigma.cycles() {
        let sum = cycle.iter().fold(rat(0), |acc, &i| acc + &x[i]);
        let avg = sum / rat(cycle.len() as i64);
        for &i in cycle {
            out[i] = avg.clone();
        }
    }
    Ok(out)
}

/// The vertex attached to a linear order of the cycles: on the cycle in
/// position `p` of the order, the constant coordinate is
/// `(l+1)/2 + (total length of the cycles ordered before it)`.
pub fn vertex_of_order(sigma: &Permutation, order: &[usize]) -> Result<RationalPoint> {
    let m = sigma.cycle_count();
    let mut seen = vec![false; m];
    if order.len() != m || order.iter().any(|&c| c >= m || std::mem::replace(&mut seen[c], true)) {
        return Err(Error::InvalidOrder);
    }
    let mut point = vec![rat(0); sigma.degree()];
    let mut before = 0i64;
    for &ci in order {
        let l = sigma.cycles()[ci].len() as i64;
        let coeff = ratio(l + 1, 2) + rat(before);
        for &e in &sigma.cycles()[ci] {
            point[e] = coeff.clone();
        }
        before += l;
    }
    Ok(point)
}

/// The `m!` vertices via the closed formula, one per linear order of the
/// cycles, in lexicographic order of the order vectors.
pub fn sigma_vertices(sigma: &Permutation) -> Vec<(Vec<usize>, RationalPoint)> {
    use itertools::Itertools;
    let m = sigma.cycle_count();
    (0..m)
        .permutations(m)
        .map(|order| {
            let v = vertex_of_order(sigma, &order).expect("orders are total");
            (order, v)
        })
        .collect()
}

/// The same vertex set computed along the other route: averaging the
/// standard-block permutations of `sigma`. Used to cross-check
/// [`sigma_vertices`].
pub fn sigma_vertices_by_averaging(sigma: &Permutation) -> Vec<(Vec<usize>, RationalPoint)> {
    sigma
        .standard_block_permutations()
        .into_iter()
        .map(|(order, w)| {
            let avg = orbit_average(sigma, &w.as_point()).expect("degrees match");
            (order, avg)
        })
        .collect()
}

/// Membership of `x` in the `dilate`-th dilate of the slice fixed by
/// `sigma`. The exponentially many subset inequalities of the permutahedron
/// reduce to sorted prefix sums: among the size-`k` subsets, the binding one
/// picks the `k` smallest coordinates.
pub fn contains(sigma: &Permutation, x: &[Rational], dilate: u64) -> Result<bool> {
    if x.len() != sigma.degree() {
        return Err(Error::PointLength {
            expected: sigma.degree(),
            got: x.len(),
        });
    }
    if dilate == 0 {
        return Err(Error::OutOfRange("dilate must be positive".into()));
    }
    for cycle in sigma.cycles() {
        if cycle.iter().any(|&i| x[i] != x[cycle[0]]) {
            return Ok(false);
        }
    }
    let n = x.len() as i64;
    let t = rat(dilate as i64);
    if coordinate_sum(x) != &t * rat(n * (n + 1) / 2) {
        return Ok(false);
    }
    Ok(sorted_prefix_sums_dominate(x, dilate))
}

/// The majorization half of the membership test: the sum of the `k` smallest
/// coordinates must be at least `t * k(k+1)/2` for every `k`.
pub fn sorted_prefix_sums_dominate(x: &[Rational], dilate: u64) -> bool {
    let mut sorted: Vec<&Rational> = x.iter().collect();
    sorted.sort();
    let t = rat(dilate as i64);
    let mut prefix = rat(0);
    for (k, v) in sorted.iter().enumerate() {
        prefix += *v;
        let k = (k + 1) as i64;
        if prefix < &t * rat(k * (k + 1) / 2) {
            return false;
        }
    }
    true
}

/// Reference membership test that evaluates the subset inequality for every
/// nonempty subset of coordinates. Exponential; limited to `n <= 16`. Kept
/// as the independent route the fast test is checked against.
pub fn contains_by_subset_enumeration(
    sigma: &Permutation,
    x: &[Rational],
    dilate: u64,
) -> Result<bool> {
    if x.len() != sigma.degree() {
        return Err(Error::PointLength {
            expected: sigma.degree(),
            got: x.len(),
        });
    }
    let n = x.len();
    if n > 16 {
        return Err(Error::OutOfRange(
            "subset enumeration is limited to n <= 16".into(),
        ));
    }
    for cycle in sigma.cycles() {
        if cycle.iter().any(|&i| x[i] != x[cycle[0]]) {
            return Ok(false);
        }
    }
    let t = rat(dilate as i64);
    if coordinate_sum(x) != &t * rat((n * (n + 1) / 2) as i64) {
        return Ok(false);
    }
    Ok(subset_inequalities_hold(x, dilate))
}

/// Literal subset-sum inequalities, every nonempty subset checked.
pub fn subset_inequalities_hold(x: &[Rational], dilate: u64) -> bool {
    let n = x.len();
    assert!(n <= 16, "subset enumeration is limited to n <= 16");
    let t = rat(dilate as i64);
    let mut sums: Vec<Rational> = vec![rat(0); 1 << n];
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        sums[mask] = &sums[mask & (mask - 1)] + &x[low];
        let k = mask.count_ones() as i64;
        if sums[mask] < &t * rat(k * (k + 1) / 2) {
            return false;
        }
    }
    true
}

/// Zonotope description: generator vectors `g_{jk} = l_k e_{C_j} - l_j
/// e_{C_k}` for cycle pairs `j < k` in canonical order, and the translation
/// vector that anchors the Minkowski sum of the segments `[0, g_{jk}]`.
pub fn zonotope_generators(
    sigma: &Permutation,
) -> (Vec<((usize, usize), Vec<Int>)>, RationalPoint) {
    let cycles = sigma.cycles();
    let m = cycles.len();
    let n = sigma.degree();
    let mut generators = Vec::with_capacity(m * (m - 1) / 2);
    for j in 0..m {
        for k in j + 1..m {
            let mut g = vec![Int::zero(); n];
            let lj = int(cycles[j].len() as i64);
            let lk = int(cycles[k].len() as i64);
            for &e in &cycles[j] {
                g[e] = lk.clone();
            }
            for &e in &cycles[k] {
                g[e] = -lj.clone();
            }
            generators.push(((j, k), g));
        }
    }
    let canonical_order: Vec<usize> = (0..m).collect();
    let translation = vertex_of_order(sigma, &canonical_order).expect("canonical order is total");
    (generators, translation)
}

/// Vertex selected by a generic linear functional: per pair `j < k`, take the
/// endpoint `g_{jk}` of the segment when the cycle-average of the functional
/// is larger on cycle `j`, and the origin endpoint otherwise. Errors when two
/// cycle averages tie.
pub fn vertex_from_functional(sigma: &Permutation, c: &[Rational]) -> Result<RationalPoint> {
    if c.len() != sigma.degree() {
        return Err(Error::PointLength {
            expected: sigma.degree(),
            got: c.len(),
        });
    }
    let cycles = sigma.cycles();
    let averages: Vec<Rational> = cycles
        .iter()
        .map(|cy| cy.iter().fold(rat(0), |acc, &i| acc + &c[i]) / rat(cy.len() as i64))
        .collect();
    for j in 0..averages.len() {
        for k in j + 1..averages.len() {
            if averages[j] == averages[k] {
                return Err(Error::NonGenericFunctional);
            }
        }
    }
    let (generators, translation) = zonotope_generators(sigma);
    let mut point = translation;
    for ((j, k), g) in &generators {
        if averages[*j] > averages[*k] {
            for (coord, gi) in point.iter_mut().zip(g.iter()) {
                *coord += Rational::from_integer(gi.clone());
            }
        }
    }
    Ok(point)
}

/// Coefficients `alpha_{jk} = inv_{jk}(tau) / (l_j l_k)` expressing the
/// averaged point of `tau` as the averaged identity plus a combination of
/// zonotope generators. Assumes `sigma` is in standardized form; all
/// coefficients lie in `[0, 1]`.
pub fn inversion_decomposition(
    sigma: &Permutation,
    tau: &Permutation,
) -> Result<PairTable<Rational>> {
    let counts = inversion_table(tau, sigma)?;
    let cycles = sigma.cycles();
    let m = cycles.len();
    let mut alphas: PairTable<Rational> = PairTable::new(m);
    for j in 0..m {
        for k in j + 1..m {
            let lj = cycles[j].len() as i64;
            let lk = cycles[k].len() as i64;
            *alphas.get_mut(j, k) = ratio(*counts.get(j, k) as i64, lj * lk);
        }
    }
    Ok(alphas)
}

/// Rebuilds the averaged point of `tau` from the averaged identity and the
/// inversion decomposition. For standardized `sigma` this must equal
/// `orbit_average(sigma, tau)` exactly.
pub fn average_via_inversion_decomposition(
    sigma: &Permutation,
    tau: &Permutation,
) -> Result<RationalPoint> {
    let alphas = inversion_decomposition(sigma, tau)?;
    let id = Permutation::identity(sigma.degree());
    let mut point = orbit_average(sigma, &id.as_point())?;
    let (generators, _) = zonotope_generators(sigma);
    for ((j, k), g) in &generators {
        let alpha = alphas.get(*j, *k);
        if alpha.is_zero() {
            continue;
        }
        for (coord, gi) in point.iter_mut().zip(g.iter()) {
            *coord += alpha * Rational::from_integer(gi.clone());
        }
    }
    Ok(point)
}

/// `m - 1`, with a single cycle giving a point of dimension 0.
pub fn dimension(sigma: &Permutation) -> usize {
    sigma.cycle_count().saturating_sub(1)
}
