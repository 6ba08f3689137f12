//! Cross-module property suites: group-action laws, round-trips, conjugation
//! invariance, dual computation routes, and partition-lattice algebra.

use proptest::prelude::*;

use permafix_core::ehrhart::{count_lattice_points, dilate_counts};
use permafix_core::exact::{int, rat, Rational};
use permafix_core::perm::{all_permutations, inversion_table, CycleType, Permutation};
use permafix_core::polytope::{orbit_average, sigma_vertices};
use permafix_core::subgroup::{cycle_partition, partition_join, SetPartition};
use permafix_core::volume::{
    tree_parallelotope_volume, tree_parallelotope_volume_by_minors, volume_by_tiling_via_minors,
    volume_closed_form,
};
use permafix_core::tree::spanning_trees;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn random_permutation(n: usize, rng: &mut StdRng) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

#[test]
fn action_is_a_left_group_action_exhaustively() {
    for n in 1..=4usize {
        let x: Vec<Rational> = (0..n).map(|i| rat(1 << i)).collect();
        let id = Permutation::identity(n);
        assert_eq!(id.act(&x).unwrap(), x);
        let all: Vec<Permutation> = all_permutations(n).collect();
        for sigma in &all {
            for tau in &all {
                let composed = sigma.compose(tau).unwrap();
                assert_eq!(
                    composed.act(&x).unwrap(),
                    sigma.act(&tau.act(&x).unwrap()).unwrap()
                );
            }
        }
    }
}

#[test]
fn parse_format_round_trips_on_random_permutations() {
    let mut rng = StdRng::seed_from_u64(0x70666d);
    for _ in 0..1000 {
        let n = rng.random_range(1..=12);
        let p = random_permutation(n, &mut rng);
        let via_cycles = Permutation::parse(&p.to_cycle_string(), Some(n)).unwrap();
        assert_eq!(via_cycles, p);
        let via_one_line = Permutation::parse(&p.to_one_line_string(), Some(n)).unwrap();
        assert_eq!(via_one_line, p);
    }
}

#[test]
fn standard_block_permutation_count_is_m_factorial() {
    for n in 1..=7usize {
        for sigma in all_permutations(n) {
            let m = sigma.cycle_count();
            let expected: usize = (1..=m).product();
            let blocks = sigma.standard_block_permutations();
            assert_eq!(blocks.len(), expected, "sigma = {sigma}");
            // each result really is block-standard along every cycle
            for (_, w) in blocks.iter().take(6) {
                for cycle in sigma.cycles() {
                    for pair in cycle.windows(2) {
                        assert_eq!(w.image(pair[1]), w.image(pair[0]) + 1);
                    }
                }
            }
        }
    }
}

#[test]
fn cycle_type_is_a_conjugation_invariant() {
    let mut rng = StdRng::seed_from_u64(42);
    for _ in 0..200 {
        let n = rng.random_range(1..=9);
        let sigma = random_permutation(n, &mut rng);
        let tau = random_permutation(n, &mut rng);
        let conj = sigma.conjugate_by(&tau).unwrap();
        assert_eq!(conj.cycle_type(), sigma.cycle_type());
    }
}

#[test]
fn inversions_split_across_cycle_pairs() {
    // against a standardized sigma, cross-cycle cells plus within-cycle
    // inversions account for every inversion
    for n in 1..=6usize {
        for lam in CycleType::partitions_of(n) {
            let sigma = lam.standard_form();
            let mut cycle_of = vec![0usize; n];
            for (ci, cycle) in sigma.cycles().iter().enumerate() {
                for &e in cycle {
                    cycle_of[e] = ci;
                }
            }
            for tau in all_permutations(n) {
                let table = inversion_table(&tau, &sigma).unwrap();
                let cross: u64 = table.iter_pairs().map(|(_, &v)| v).sum();
                let mut within = 0u64;
                for a in 0..n {
                    for b in a + 1..n {
                        if tau.image(a) > tau.image(b) && cycle_of[a] == cycle_of[b] {
                            within += 1;
                        }
                    }
                }
                assert_eq!(cross + within, tau.inversions(), "sigma {sigma}, tau {tau}");
                for ((j, k), &v) in table.iter_pairs() {
                    let bound = (sigma.cycles()[j].len() * sigma.cycles()[k].len()) as u64;
                    assert!(v <= bound);
                }
            }
        }
    }
}

#[test]
fn vertex_sets_are_equivariant_under_conjugation() {
    let mut rng = StdRng::seed_from_u64(7);
    for n in 3..=6usize {
        for lam in CycleType::partitions_of(n) {
            let sigma = lam.standard_form();
            let base: std::collections::HashSet<Vec<Rational>> =
                sigma_vertices(&sigma).into_iter().map(|(_, v)| v).collect();
            for _ in 0..3 {
                let tau = random_permutation(n, &mut rng);
                let conj = sigma.conjugate_by(&tau).unwrap();
                let conj_vertices: std::collections::HashSet<Vec<Rational>> =
                    sigma_vertices(&conj).into_iter().map(|(_, v)| v).collect();
                let mapped: std::collections::HashSet<Vec<Rational>> =
                    base.iter().map(|v| tau.act(v).unwrap()).collect();
                assert_eq!(conj_vertices, mapped, "sigma {sigma}, tau {tau}");
            }
        }
    }
}

#[test]
fn translation_is_averaged_identity_for_standardized_sigma() {
    for n in 1..=6usize {
        for lam in CycleType::partitions_of(n) {
            let sigma = lam.standard_form();
            let fp = permafix_core::FixedPolytope::new(sigma.clone());
            let id_avg = orbit_average(&sigma, &Permutation::identity(n).as_point()).unwrap();
            assert_eq!(*fp.translation(), id_avg, "lambda = {lam}");
        }
    }
}

#[test]
fn per_tree_volume_routes_agree_up_to_five_cycles() {
    for n in 2..=7usize {
        for lam in CycleType::partitions_of(n) {
            if lam.m() < 2 || lam.m() > 5 {
                continue;
            }
            for tree in spanning_trees(lam.m()).unwrap() {
                let by_degrees = tree_parallelotope_volume(&lam, &tree).unwrap();
                let by_minors = tree_parallelotope_volume_by_minors(&lam, &tree).unwrap();
                assert_eq!(
                    by_degrees,
                    by_minors,
                    "lambda = {lam}, tree = {:?}",
                    tree.edges()
                );
            }
        }
    }
}

#[test]
fn volume_depends_only_on_the_cycle_type() {
    // run the generator-matrix route through unstandardized conjugates
    let mut rng = StdRng::seed_from_u64(11);
    for n in 2..=6usize {
        for lam in CycleType::partitions_of(n) {
            if lam.m() > 4 {
                continue; // minor route on every tree; keep it quick
            }
            let sigma = lam.standard_form();
            let tau = random_permutation(n, &mut rng);
            let conj = sigma.conjugate_by(&tau).unwrap();
            let expected = volume_closed_form(&lam);
            assert_eq!(volume_by_tiling_via_minors(&sigma).unwrap(), expected);
            assert_eq!(volume_by_tiling_via_minors(&conj).unwrap(), expected);
        }
    }
}

#[test]
fn dilate_counts_are_conjugation_invariant_and_monotone() {
    let mut rng = StdRng::seed_from_u64(13);
    for n in 2..=6usize {
        for lam in CycleType::partitions_of(n) {
            let sigma = lam.standard_form();
            let tau = random_permutation(n, &mut rng);
            let conj = sigma.conjugate_by(&tau).unwrap();
            for t in [1u64, 2, 3] {
                assert_eq!(
                    count_lattice_points(&sigma, t).unwrap(),
                    count_lattice_points(&conj, t).unwrap(),
                    "lambda = {lam}, t = {t}"
                );
            }
            if lam.m() >= 2 {
                let counts = dilate_counts(&sigma, &[2, 4, 6], 1).unwrap();
                assert!(counts[0] < counts[1] && counts[1] < counts[2], "lambda = {lam}");
            }
        }
    }
}

#[test]
fn partition_join_algebra_on_random_partitions() {
    fn random_partition(n: usize, rng: &mut StdRng) -> SetPartition {
        cycle_partition(&{
            let mut images: Vec<usize> = (0..n).collect();
            images.shuffle(rng);
            Permutation::from_images(images).unwrap()
        })
    }
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..100 {
        let n = rng.random_range(1..=12);
        let a = random_partition(n, &mut rng);
        let b = random_partition(n, &mut rng);
        let c = random_partition(n, &mut rng);
        assert_eq!(partition_join(&[a.clone(), a.clone()]).unwrap(), a);
        assert_eq!(
            partition_join(&[a.clone(), b.clone()]).unwrap(),
            partition_join(&[b.clone(), a.clone()]).unwrap()
        );
        let left =
            partition_join(&[partition_join(&[a.clone(), b.clone()]).unwrap(), c.clone()])
                .unwrap();
        let right =
            partition_join(&[a.clone(), partition_join(&[b.clone(), c.clone()]).unwrap()])
                .unwrap();
        assert_eq!(left, right);
    }
}

#[test]
fn representative_sigma_has_the_common_fixed_subspace() {
    let mut rng = StdRng::seed_from_u64(123);
    for _ in 0..100 {
        let n = rng.random_range(2..=6);
        let count = rng.random_range(1..=3);
        let gens: Vec<Permutation> = (0..count).map(|_| random_permutation(n, &mut rng)).collect();
        let rep = permafix_core::subgroup::representative_sigma(&gens).unwrap();
        let join = cycle_partition(&rep);

        // generators stabilize every join block
        for g in &gens {
            for block in join.blocks() {
                for &e in block {
                    assert!(block.contains(&g.image(e)));
                }
            }
        }

        // a random point constant on blocks is fixed by everything
        let mut x = vec![rat(0); n];
        for (bi, block) in join.blocks().iter().enumerate() {
            let v = rat(rng.random_range(0..100) + 1000 * bi as i64);
            for &e in block {
                x[e] = v.clone();
            }
        }
        assert_eq!(rep.act(&x).unwrap(), x);
        for g in &gens {
            assert_eq!(g.act(&x).unwrap(), x);
        }

        // and any random point fixed by all generators is block-constant
        let y: Vec<Rational> = (0..n).map(|_| rat(rng.random_range(0..4))).collect();
        let fixed_by_all = gens.iter().all(|g| g.act(&y).unwrap() == y);
        let block_constant = join
            .blocks()
            .iter()
            .all(|b| b.iter().all(|&e| y[e] == y[b[0]]));
        if fixed_by_all {
            assert!(block_constant);
        }
        if block_constant {
            assert!(fixed_by_all && rep.act(&y).unwrap() == y);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    /// (a/b + c/d) * b * d == a*d + c*b, exactly, and normalization is
    /// idempotent.
    #[test]
    fn rational_field_identity(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
        let left = (Rational::new(int(a), int(b)) + Rational::new(int(c), int(d)))
            * Rational::from_integer(int(b))
            * Rational::from_integer(int(d));
        let right = Rational::from_integer(int(a * d + c * b));
        prop_assert_eq!(&left, &right);
        let renormalized = Rational::new(left.numer().clone(), left.denom().clone());
        prop_assert_eq!(left, renormalized);
    }
}

proptest! {
    /// Parse/format round trip over arbitrary shuffles, proptest-driven.
    #[test]
    fn proptest_parse_format_roundtrip(images in Just((0..9usize).collect::<Vec<_>>()).prop_shuffle()) {
        let p = Permutation::from_images(images).unwrap();
        let back = Permutation::parse(&p.to_cycle_string(), Some(9)).unwrap();
        prop_assert_eq!(&back, &p);
        let back = Permutation::parse(&p.to_one_line_string(), None).unwrap();
        prop_assert_eq!(&back, &p);
    }
}
