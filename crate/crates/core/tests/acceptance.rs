//! Acceptance suite: every release-gating property of the crate, one test
//! per criterion, each printing a single pass/fail line. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use permafix_core::ehrhart::{count_lattice_points, segment_count, volume_by_interpolation};
use permafix_core::exact::{int, rat, ratio, Int, Rational};
use permafix_core::perm::{all_permutations, inversion_table, CycleType, Permutation};
use permafix_core::polytope::{
    average_via_inversion_decomposition, contains, inversion_decomposition, orbit_average,
    sigma_vertices, sigma_vertices_by_averaging, sorted_prefix_sums_dominate,
    subset_inequalities_hold,
};
use permafix_core::subgroup::{cycle_partition, partition_join, representative_sigma};
use permafix_core::volume::{tree_degree_identity_holds, volume_by_tiling, volume_closed_form};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn criterion(id: &str, name: &str, failures: Vec<String>) {
    let pass = failures.is_empty();
    println!("acceptance {id} {name}: {}", if pass { "PASS" } else { "FAIL" });
    if !pass {
        for f in failures.iter().take(8) {
            eprintln!("  {f}");
        }
        panic!(
            "acceptance criterion {id} `{name}` failed in {} case(s)",
            failures.len()
        );
    }
}

#[test]
fn criterion_01_volume_identity_exhaustive() {
    let mut failures = Vec::new();
    for n in 2..=7usize {
        for lam in CycleType::partitions_of(n) {
            let closed = volume_closed_form(&lam);
            let tiled = volume_by_tiling(&lam).unwrap();
            let m = lam.m();
            let expected = if m == 1 {
                int(1)
            } else {
                num_traits::pow(int(n as i64), m - 2) * int(lam.gcd() as i64)
            };
            if closed != expected || tiled != expected {
                failures.push(format!(
                    "lambda = {lam}: closed {closed}, tiling {tiled}, expected {expected}"
                ));
            }
        }
    }
    criterion("01", "tiling equals closed form for all partitions, n in 2..=7", failures);
}

#[test]
fn criterion_02_unit_cycle_type_specialization() {
    let lam = CycleType::new(vec![1; 7]).unwrap();
    let mut failures = Vec::new();
    if volume_closed_form(&lam) != int(16807) {
        failures.push(format!("closed form gave {}", volume_closed_form(&lam)));
    }
    if volume_by_tiling(&lam).unwrap() != int(16807) {
        failures.push("tiling disagreed with 7^5".into());
    }
    criterion("02", "full permutahedron volume 7^5 = 16807", failures);
}

#[test]
fn criterion_03_interpolation_oracle() {
    let mut failures = Vec::new();
    for n in 2..=6usize {
        for lam in CycleType::partitions_of(n) {
            let sigma = lam.standard_form();
            let oracle = volume_by_interpolation(&sigma).unwrap();
            let closed = Rational::from_integer(volume_closed_form(&lam));
            if oracle != closed {
                failures.push(format!("lambda = {lam}: oracle {oracle}, closed {closed}"));
            }
        }
    }
    criterion("03", "lattice-point interpolation equals closed form, n in 2..=6", failures);
}

#[test]
fn criterion_04_description_equivalence() {
    let mut failures = Vec::new();
    for n in 2..=6usize {
        for lam in CycleType::partitions_of(n) {
            let sigma = lam.standard_form();
            for tau in all_permutations(n) {
                let avg = orbit_average(&sigma, &tau.as_point()).unwrap();
                if !contains(&sigma, &avg, 1).unwrap() {
                    failures.push(format!("lambda = {lam}: averaged {tau} not a member"));
                    continue;
                }
                let alphas = inversion_decomposition(&sigma, &tau).unwrap();
                if alphas
                    .iter_pairs()
                    .any(|(_, a)| a < &rat(0) || a > &rat(1))
                {
                    failures.push(format!("lambda = {lam}, tau = {tau}: alpha out of [0,1]"));
                    continue;
                }
                let rebuilt = average_via_inversion_decomposition(&sigma, &tau).unwrap();
                if rebuilt != avg {
                    failures.push(format!("lambda = {lam}, tau = {tau}: decomposition broke"));
                }
            }
        }
    }
    criterion("04", "membership and inversion decomposition for all tau, n in 2..=6", failures);
}

#[test]
fn criterion_05_vertex_suite() {
    let mut failures = Vec::new();
    for n in 1..=7usize {
        for lam in CycleType::partitions_of(n) {
            let sigma = lam.standard_form();
            let direct = sigma_vertices(&sigma);
            let averaged = sigma_vertices_by_averaging(&sigma);
            let m_factorial: usize = (1..=lam.m()).product();
            if direct.len() != m_factorial {
                failures.push(format!("lambda = {lam}: {} vertices", direct.len()));
            }
            if direct != averaged {
                failures.push(format!("lambda = {lam}: vertex routes disagree"));
            }
            let distinct: std::collections::HashSet<_> =
                direct.iter().map(|(_, v)| v.clone()).collect();
            if distinct.len() != m_factorial {
                failures.push(format!("lambda = {lam}: repeated vertices"));
            }
        }
    }

    // frozen fixture: the six vertices for cycle lengths (4,3,2) in degree 9
    let sigma = CycleType::new(vec![4, 3, 2]).unwrap().standard_form();
    let computed: std::collections::HashSet<Vec<Rational>> =
        sigma_vertices(&sigma).into_iter().map(|(_, v)| v).collect();
    let fixture = |a: (i64, i64), b: (i64, i64), c: (i64, i64)| -> Vec<Rational> {
        let mut v = vec![ratio(a.0, a.1); 4];
        v.extend(vec![ratio(b.0, b.1); 3]);
        v.extend(vec![ratio(c.0, c.1); 2]);
        v
    };
    let expected: std::collections::HashSet<Vec<Rational>> = [
        fixture((5, 2), (6, 1), (17, 2)),
        fixture((5, 2), (8, 1), (11, 2)),
        fixture((11, 2), (2, 1), (17, 2)),
        fixture((9, 2), (8, 1), (3, 2)),
        fixture((15, 2), (2, 1), (9, 2)),
        fixture((15, 2), (4, 1), (3, 2)),
    ]
    .into_iter()
    .collect();
    if computed != expected {
        failures.push("degree-9 vertex fixture mismatch".into());
    }
    criterion("05", "vertex count, dual vertex routes, degree-9 fixture", failures);
}

#[test]
fn criterion_06_segment_counts() {
    let mut failures = Vec::new();
    for l1 in 1..=6usize {
        for l2 in 1..=l1 {
            let sigma = CycleType::new(vec![l1, l2]).unwrap().standard_form();
            for t in 1..=12u64 {
                let formula = segment_count(l1, l2, t).unwrap();
                let brute = count_lattice_points(&sigma, t).unwrap();
                if formula != brute {
                    failures.push(format!(
                        "l = ({l1},{l2}), t = {t}: formula {formula}, enumeration {brute}"
                    ));
                }
            }
        }
    }
    criterion("06", "segment count formula vs enumeration, l <= 6, t <= 12", failures);
}

#[test]
fn criterion_07_inversion_fixture() {
    let sigma = CycleType::new(vec![3, 2, 1]).unwrap().standard_form();
    let tau = Permutation::parse("461352", None).unwrap();
    let table = inversion_table(&tau, &sigma).unwrap();
    let mut failures = Vec::new();
    if tau.inversions() != 9 {
        failures.push(format!("inv = {}", tau.inversions()));
    }
    for ((j, k), expected) in [((0, 1), 3u64), ((0, 2), 2), ((1, 2), 2)] {
        if *table.get(j, k) != expected {
            failures.push(format!("inv_{{{},{}}} = {}", j + 1, k + 1, table.get(j, k)));
        }
    }
    criterion("07", "inversion table fixture for 461352 against (123)(45)(6)", failures);
}

#[test]
fn criterion_08_subgroup_fixture() {
    let g1 = Permutation::parse("(173)(46)(89)", Some(9)).unwrap();
    let g2 = Permutation::parse("(27)(68)", Some(9)).unwrap();
    let join = partition_join(&[cycle_partition(&g1), cycle_partition(&g2)]).unwrap();
    let rep = representative_sigma(&[g1, g2]).unwrap();
    let mut failures = Vec::new();
    if join.to_string() != "1237|4689|5" {
        failures.push(format!("join = {join}"));
    }
    let expected = Permutation::parse("(1237)(4689)", Some(9)).unwrap();
    if rep != expected {
        failures.push(format!("representative = {rep}"));
    }
    criterion("08", "subgroup join and representative fixture in degree 9", failures);
}

#[test]
fn criterion_09_tree_degree_identity() {
    let mut rng = StdRng::seed_from_u64(0x7265_6573);
    let mut failures = Vec::new();
    for m in 2..=6usize {
        for trial in 0..20 {
            let xs: Vec<Int> = (0..m).map(|_| int(rng.random_range(1..=10))).collect();
            if !tree_degree_identity_holds(m, &xs).unwrap() {
                failures.push(format!("m = {m}, trial {trial}, xs = {xs:?}"));
            }
        }
    }
    criterion("09", "spanning-tree degree identity, m in 2..=6, 20 samples", failures);
}

#[test]
fn criterion_10_membership_reduction_soundness() {
    let mut rng = StdRng::seed_from_u64(0x6d61_6a6f);
    let mut failures = Vec::new();
    for n in 3..=10usize {
        for _ in 0..1000 {
            let x: Vec<Rational> = (0..n)
                .map(|_| {
                    let q = rng.random_range(1..=4i64);
                    let p = rng.random_range(0..=q * (n as i64 + 1));
                    ratio(p, q)
                })
                .collect();
            let fast = sorted_prefix_sums_dominate(&x, 1);
            let slow = subset_inequalities_hold(&x, 1);
            if fast != slow {
                failures.push(format!("n = {n}: fast {fast}, subsets {slow}, x = {x:?}"));
            }
        }
    }
    criterion("10", "majorization test vs literal subset inequalities, n in 3..=10", failures);
}
