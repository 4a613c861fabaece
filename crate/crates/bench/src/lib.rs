//! Shared input builders for the criterion benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use partact_core::sample::{random_global_action, random_group, random_subset};
use partact_core::{restrict_global, FiniteSet, GlobalAction, Group, PartialAction};

/// The cyclic-8 action on four points used throughout the test suites:
/// two partial orbits, stabilizers of order 2 and 1, |T| = 12.
pub fn canonical_action() -> PartialAction {
    PartialAction::from_sparse(
        Group::cyclic(8).unwrap(),
        FiniteSet::numbered(4),
        &[
            (2, vec![0, 1, 3], vec![(0, 1), (1, 0), (2, 3)]),
            (4, vec![0, 1], vec![(0, 0), (1, 1)]),
            (6, vec![0, 1, 2], vec![(0, 1), (1, 0), (3, 2)]),
        ],
    )
    .unwrap()
}

/// A reproducible random case of the given scale: the generating global
/// action and its restriction.
pub fn sampled_case(seed: u64, max_order: usize, max_points: usize) -> (GlobalAction, PartialAction) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let group = random_group(&mut rng, max_order);
    let global = random_global_action(&mut rng, &group, max_points);
    let subset = random_subset(&mut rng, global.carrier().size());
    let action = restrict_global(&global, &subset).expect("restriction is valid");
    (global, action)
}
