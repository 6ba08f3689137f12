//! Built-in randomized self-checks. The sample stream is seeded from the
//! `PERMAFIX_SEED` environment variable so failures are reproducible.

use permafix_core::ehrhart::{count_lattice_points, segment_count, volume_by_interpolation};
use permafix_core::exact::{int, Int, Rational};
use permafix_core::matrix::{maximal_minor_gcd, solve_linear_diophantine_usize, IntMatrix};
use permafix_core::perm::{CycleType, Permutation};
use permafix_core::polytope::{
    average_via_inversion_decomposition, orbit_average, sigma_vertices,
    sigma_vertices_by_averaging, sorted_prefix_sums_dominate, subset_inequalities_hold,
};
use permafix_core::volume::{volume_by_tiling, volume_closed_form};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub const SEED_VAR: &str = "PERMAFIX_SEED";
const DEFAULT_SEED: u64 = 0x5045_524d;

pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

pub fn run() -> (Vec<CheckResult>, u64) {
    let seed = std::env::var(SEED_VAR)
        .ok()
        .and_then(|s| s.parse::<u64>().ok())
        .unwrap_or(DEFAULT_SEED);
    let mut rng = StdRng::seed_from_u64(seed);
    let results = vec![
        rational_identities(&mut rng),
        minor_gcd_invariance(&mut rng),
        diophantine_solutions(&mut rng),
        majorization_vs_subsets(&mut rng),
        standard_block_counts(&mut rng),
        vertex_routes_agree(&mut rng),
        volume_triple(&mut rng),
        segment_formula(),
        decomposition_identity(&mut rng),
    ];
    (results, seed)
}

fn random_permutation(n: usize, rng: &mut StdRng) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

fn random_partition(n: usize, rng: &mut StdRng) -> CycleType {
    let all = CycleType::partitions_of(n);
    all[rng.random_range(0..all.len())].clone()
}

fn rational_identities(rng: &mut StdRng) -> CheckResult {
    let mut failures = Vec::new();
    let cases = 2000;
    for _ in 0..cases {
        let (a, c) = (rng.random_range(-999..1000i64), rng.random_range(-999..1000i64));
        let (b, d) = (rng.random_range(1..1000i64), rng.random_range(1..1000i64));
        let left = (Rational::new(int(a), int(b)) + Rational::new(int(c), int(d)))
            * Rational::from_integer(int(b))
            * Rational::from_integer(int(d));
        if left != Rational::from_integer(int(a * d + c * b)) {
            failures.push(format!("a/b + c/d identity failed for {a}/{b}, {c}/{d}"));
        }
    }
    CheckResult {
        name: "rational_field_identities",
        cases,
        failures,
    }
}

fn minor_gcd_invariance(rng: &mut StdRng) -> CheckResult {
    let mut failures = Vec::new();
    let mut cases = 0;
    while cases < 100 {
        let rows: Vec<Vec<Int>> = (0..5)
            .map(|_| (0..3).map(|_| int(rng.random_range(-9..=9))).collect())
            .collect();
        let m = IntMatrix::from_rows(rows.clone()).unwrap();
        if m.rank() < 3 {
            continue;
        }
        cases += 1;
        let g = maximal_minor_gcd(&m).unwrap();
        let mut shuffled = rows.clone();
        shuffled.shuffle(rng);
        shuffled.push(rows[rng.random_range(0..5)].clone());
        let m2 = IntMatrix::from_rows(shuffled).unwrap();
        if maximal_minor_gcd(&m2).unwrap() != g {
            failures.push("row shuffle + duplication changed the minor gcd".into());
        }
        let permuted: Vec<Vec<Int>> = rows
            .iter()
            .map(|r| vec![r[1].clone(), r[2].clone(), r[0].clone()])
            .collect();
        let m3 = IntMatrix::from_rows(permuted).unwrap();
        if maximal_minor_gcd(&m3).unwrap() != g {
            failures.push("column permutation changed the minor gcd".into());
        }
    }
    CheckResult {
        name: "minor_gcd_invariance",
        cases,
        failures,
    }
}

fn diophantine_solutions(rng: &mut StdRng) -> CheckResult {
    let mut failures = Vec::new();
    let cases = 200;
    for _ in 0..cases {
        let m = rng.random_range(1..=6);
        let coeffs: Vec<usize> = (0..m).map(|_| rng.random_range(1..=12)).collect();
        let target = int(rng.random_range(-60..=60));
        let s = solve_linear_diophantine_usize(&coeffs, &target).unwrap();
        let eval = |c: &[Int]| -> Int {
            c.iter()
                .zip(&coeffs)
                .map(|(ci, &li)| ci * int(li as i64))
                .sum()
        };
        if let Some(p) = &s.particular {
            if eval(p) != target {
                failures.push(format!("particular solution wrong for {coeffs:?} -> {target}"));
            }
        } else if (&target % &s.gcd) == int(0) {
            failures.push(format!("missed a solution for {coeffs:?} -> {target}"));
        }
        if s.basis.iter().any(|h| eval(h) != int(0)) {
            failures.push(format!("homogeneous basis broken for {coeffs:?}"));
        }
    }
    CheckResult {
        name: "diophantine_solutions",
        cases,
        failures,
    }
}

fn majorization_vs_subsets(rng: &mut StdRng) -> CheckResult {
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 3..=8usize {
        for _ in 0..100 {
            cases += 1;
            let x: Vec<Rational> = (0..n)
                .map(|_| {
                    let q = rng.random_range(1..=4i64);
                    let p = rng.random_range(0..=q * (n as i64 + 1));
                    Rational::new(int(p), int(q))
                })
                .collect();
            if sorted_prefix_sums_dominate(&x, 1) != subset_inequalities_hold(&x, 1) {
                failures.push(format!("majorization reduction mismatch at n = {n}"));
            }
        }
    }
    CheckResult {
        name: "majorization_vs_subsets",
        cases,
        failures,
    }
}

fn standard_block_counts(rng: &mut StdRng) -> CheckResult {
    let mut failures = Vec::new();
    let cases = 40;
    for _ in 0..cases {
        let n = rng.random_range(1..=7);
        let sigma = random_permutation(n, rng);
        let expected: usize = (1..=sigma.cycle_count()).product();
        if sigma.standard_block_permutations().len() != expected {
            failures.push(format!("block-permutation count wrong for {sigma}"));
        }
    }
    CheckResult {
        name: "standard_block_counts",
        cases,
        failures,
    }
}

fn vertex_routes_agree(rng: &mut StdRng) -> CheckResult {
    let mut failures = Vec::new();
    let cases = 25;
    for _ in 0..cases {
        let n = rng.random_range(2..=6);
        let sigma = random_partition(n, rng).standard_form();
        if sigma_vertices(&sigma) != sigma_vertices_by_averaging(&sigma) {
            failures.push(format!("vertex routes disagree for {sigma}"));
        }
    }
    CheckResult {
        name: "vertex_routes_agree",
        cases,
        failures,
    }
}

fn volume_triple(rng: &mut StdRng) -> CheckResult {
    let mut failures = Vec::new();
    let cases = 12;
    for _ in 0..cases {
        let n = rng.random_range(2..=5);
        let lam = random_partition(n, rng);
        let closed = volume_closed_form(&lam);
        let tiled = volume_by_tiling(&lam).unwrap();
        let oracle = volume_by_interpolation(&lam.standard_form()).unwrap();
        if tiled != closed || oracle != Rational::from_integer(closed.clone()) {
            failures.push(format!(
                "volume triple mismatch for {lam}: {closed} / {tiled} / {oracle}"
            ));
        }
    }
    CheckResult {
        name: "volume_triple",
        cases,
        failures,
    }
}

fn segment_formula() -> CheckResult {
    let mut failures = Vec::new();
    let mut cases = 0;
    for l1 in 1..=5usize {
        for l2 in 1..=l1 {
            let sigma = CycleType::new(vec![l1, l2]).unwrap().standard_form();
            for t in 1..=8u64 {
                cases += 1;
                if segment_count(l1, l2, t).unwrap() != count_lattice_points(&sigma, t).unwrap() {
                    failures.push(format!("segment mismatch at ({l1},{l2}), t = {t}"));
                }
            }
        }
    }
    CheckResult {
        name: "segment_formula",
        cases,
        failures,
    }
}

fn decomposition_identity(rng: &mut StdRng) -> CheckResult {
    let mut failures = Vec::new();
    let cases = 200;
    for _ in 0..cases {
        let n = rng.random_range(2..=6);
        let sigma = random_partition(n, rng).standard_form();
        let tau = random_permutation(n, rng);
        let direct = orbit_average(&sigma, &tau.as_point()).unwrap();
        let rebuilt = average_via_inversion_decomposition(&sigma, &tau).unwrap();
        if direct != rebuilt {
            failures.push(format!("decomposition identity failed for {sigma}, {tau}"));
        }
    }
    CheckResult {
        name: "decomposition_identity",
        cases,
        failures,
    }
}
