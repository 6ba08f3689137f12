//! Normalized volumes of the fixed slices, computed along independent
//! routes: the closed form `n^(m-2) * gcd(l_1, ..., l_m)`, and the
//! spanning-tree tiling of the zonotope description, where each tree
//! contributes a parallelotope whose volume is itself computed two ways
//! (a degree product and a minor gcd).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Int, Rational};
use crate::matrix::{maximal_minor_gcd, IntMatrix};
use crate::perm::{CycleType, Permutation};
use crate::tree::{spanning_tree_count, tree_from_index, SpanningTree};

/// `n^(m-2) * gcd(l_1, ..., l_m)`; a single cycle gives the point volume 1.
pub fn volume_closed_form(ct: &CycleType) -> Int {
    let m = ct.m();
    if m == 1 {
        return Int::one();
    }
    let n = Int::from(ct.n());
    num_traits::pow(n, m - 2) * Int::from(ct.gcd())
}

/// Volume of the parallelotope spanned by the generators picked out by a
/// tree: `prod_i l_i^(deg_T(i) - 1) * gcd(l_1, ..., l_m)`.
pub fn tree_parallelotope_volume(ct: &CycleType, tree: &SpanningTree) -> Result<Int> {
    if tree.vertex_count() != ct.m() {
        return Err(Error::InvalidTree(format!(
            "tree on {} vertices does not match {} cycles",
            tree.vertex_count(),
            ct.m()
        )));
    }
    if ct.m() < 2 {
        return Err(Error::InvalidTree("need at least two cycles".into()));
    }
    let mut vol = Int::from(ct.gcd());
    for (i, &deg) in tree.degrees().iter().enumerate() {
        vol *= num_traits::pow(Int::from(ct.lengths()[i]), deg - 1);
    }
    Ok(vol)
}

/// The `n x (m-1)` matrix whose columns are the zonotope generators selected
/// by the edges of `tree`, using the cycle supports of `sigma`.
pub fn tree_generator_matrix(sigma: &Permutation, tree: &SpanningTree) -> Result<IntMatrix> {
    let cycles = sigma.cycles();
    if tree.vertex_count() != cycles.len() {
        return Err(Error::InvalidTree(format!(
            "tree on {} vertices does not match {} cycles",
            tree.vertex_count(),
            cycles.len()
        )));
    }
    let n = sigma.degree();
    let mut columns = Vec::with_capacity(tree.edges().len());
    for &(j, k) in tree.edges() {
        let mut col = vec![Int::zero(); n];
        let lj = Int::from(cycles[j].len());
        let lk = Int::from(cycles[k].len());
        for &e in &cycles[j] {
            col[e] = lk.clone();
        }
        for &e in &cycles[k] {
            col[e] = -lj.clone();
        }
        columns.push(col);
    }
    IntMatrix::from_columns(n, columns)
}

/// Same parallelotope volume through exact linear algebra: the gcd of the
/// maximal minors of the generator matrix. Independent of the degree-product
/// route.
pub fn tree_parallelotope_volume_by_minors(ct: &CycleType, tree: &SpanningTree) -> Result<Int> {
    let sigma = ct.standard_form();
    let matrix = tree_generator_matrix(&sigma, tree)?;
    maximal_minor_gcd(&matrix)
}

/// How often the tiling sum re-derives a tree's volume through the
/// minor-gcd route as a self-check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorCheck {
    Off,
    /// Check every `k`-th tree (deterministic sampling).
    Every(u64),
    All,
}

impl MinorCheck {
    fn due(self, index: u64) -> bool {
        match self {
            MinorCheck::Off => false,
            MinorCheck::Every(k) => index % k.max(1) == 0,
            MinorCheck::All => true,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct TilingOptions {
    pub threads: usize,
    pub minor_check: MinorCheck,
}

impl Default for TilingOptions {
    fn default() -> Self {
        TilingOptions {
            threads: 1,
            minor_check: MinorCheck::Off,
        }
    }
}

/// Volume as the sum of the parallelotope volumes over all `m^(m-2)`
/// spanning trees. Streams trees in Prüfer order without materializing them.
pub fn volume_by_tiling(ct: &CycleType) -> Result<Int> {
    volume_by_tiling_opts(ct, TilingOptions::default())
}

pub fn volume_by_tiling_opts(ct: &CycleType, opts: TilingOptions) -> Result<Int> {
    if ct.m() == 1 {
        return Ok(Int::one());
    }
    let total = spanning_tree_count(ct.m())?;
    let threads = opts.threads.max(1).min(total.max(1) as usize);
    if threads == 1 {
        return tiling_partial_sum(ct, 0, total, opts.minor_check);
    }
    let chunk = total.div_ceil(threads as u64);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..threads {
            let start = (w as u64) * chunk;
            let end = total.min(start + chunk);
            if start >= end {
                break;
            }
            handles.push(scope.spawn(move || tiling_partial_sum(ct, start, end, opts.minor_check)));
        }
        let mut sum = Int::zero();
        for handle in handles {
            sum += handle.join().expect("tiling worker panicked")?;
        }
        Ok(sum)
    })
}

fn tiling_partial_sum(ct: &CycleType, start: u64, end: u64, check: MinorCheck) -> Result<Int> {
    let mut sum = Int::zero();
    for index in start..end {
        let tree = tree_from_index(ct.m(), index)?;
        let vol = tree_parallelotope_volume(ct, &tree)?;
        if check.due(index) {
            let by_minors = tree_parallelotope_volume_by_minors(ct, &tree)?;
            if by_minors != vol {
                return Err(Error::CrossCheck(format!(
                    "tree {:?}: degree product gives {vol}, minor gcd gives {by_minors}",
                    tree.edges()
                )));
            }
        }
        sum += vol;
    }
    Ok(sum)
}

/// Per-tree breakdown of the tiling sum. Materializes all trees; desk scale
/// only.
pub fn tiling_breakdown(ct: &CycleType) -> Result<Vec<(SpanningTree, Int)>> {
    if ct.m() == 1 {
        return Ok(vec![]);
    }
    let total = spanning_tree_count(ct.m())?;
    let mut out = Vec::with_capacity(total as usize);
    for index in 0..total {
        let tree = tree_from_index(ct.m(), index)?;
        let vol = tree_parallelotope_volume(ct, &tree)?;
        out.push((tree, vol));
    }
    Ok(out)
}

/// Tiling volume computed entirely through generator matrices of `sigma`
/// (no degree products). Works for any permutation, standardized or not.
pub fn volume_by_tiling_via_minors(sigma: &Permutation) -> Result<Int> {
    let m = sigma.cycle_count();
    if m == 1 {
        return Ok(Int::one());
    }
    let total = spanning_tree_count(m)?;
    let mut sum = Int::zero();
    for index in 0..total {
        let tree = tree_from_index(m, index)?;
        let matrix = tree_generator_matrix(sigma, &tree)?;
        sum += maximal_minor_gcd(&matrix)?;
    }
    Ok(sum)
}

/// Checks `sum_T prod_i x_i^(deg_T(i)-1) = (x_1 + ... + x_m)^(m-2)` by
/// exhaustive evaluation of the left side over all trees.
pub fn tree_degree_identity_holds(m: usize, xs: &[Int]) -> Result<bool> {
    if m < 2 {
        return Err(Error::OutOfRange("identity needs m >= 2".into()));
    }
    if xs.len() != m {
        return Err(Error::OutOfRange(format!(
            "expected {m} values, got {}",
            xs.len()
        )));
    }
    let total = spanning_tree_count(m)?;
    let mut lhs = Int::zero();
    for index in 0..total {
        let tree = tree_from_index(m, index)?;
        let mut term = Int::one();
        for (i, &deg) in tree.degrees().iter().enumerate() {
            term *= num_traits::pow(xs[i].clone(), deg - 1);
        }
        lhs += term;
    }
    let rhs = num_traits::pow(xs.iter().sum::<Int>(), m - 2);
    Ok(lhs == rhs)
}

/// The volume of one slice computed every way we know, for report surfaces.
#[derive(Debug, Clone)]
pub struct VolumeReport {
    pub cycle_type: CycleType,
    pub closed_form: Int,
    pub tiling: Option<Int>,
    pub per_tree: Option<Vec<(SpanningTree, Int)>>,
    /// Leading coefficient of the even-dilate lattice-point polynomial;
    /// filled by the Ehrhart layer.
    pub oracle: Option<Rational>,
}

impl VolumeReport {
    pub fn new(cycle_type: CycleType) -> Self {
        let closed_form = volume_closed_form(&cycle_type);
        VolumeReport {
            cycle_type,
            closed_form,
            tiling: None,
            per_tree: None,
            oracle: None,
        }
    }

    /// Named pass/fail outcomes for every cross-check that has data.
    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        let mut out = Vec::new();
        if let Some(tiling) = &self.tiling {
            out.push(("tiling_matches_closed_form", tiling == &self.closed_form));
        }
        if let Some(per_tree) = &self.per_tree {
            let sum: Int = per_tree.iter().map(|(_, v)| v.clone()).sum();
            let expect = if self.cycle_type.m() == 1 {
                Int::one()
            } else {
                sum
            };
            out.push(("per_tree_sums_to_closed_form", expect == self.closed_form));
        }
        if let Some(oracle) = &self.oracle {
            out.push((
                "oracle_matches_closed_form",
                oracle == &Rational::from_integer(self.closed_form.clone()),
            ));
        }
        out
    }

    pub fn all_pass(&self) -> bool {
        self.checks().iter().all(|(_, ok)| *ok)
    }
}
