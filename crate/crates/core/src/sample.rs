//! Random generation of groups, global actions and partial actions, used
//! by the randomized law suites and the benchmarks.
//!
//! Every global G-set is a disjoint union of coset actions G/H, so
//! sampling subgroups and gluing their coset actions together samples the
//! whole space of global actions up to isomorphism. Partial actions are
//! then drawn as restrictions of global ones to random subsets, which by
//! construction yields valid partial actions of every possible shape.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::action::{restrict_global, FiniteSet, PartialAction};
use crate::global::GlobalAction;
use crate::group::{Group, Subgroup};

/// Composition table of a permutation group generated by `gens`
/// (closure under composition), with the identity at index 0.
fn group_from_permutations(degree: usize, gens: &[Vec<usize>]) -> Group {
    let id: Vec<usize> = (0..degree).collect();
    let mut elements: Vec<Vec<usize>> = vec![id];
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        for gen in gens {
            let composed: Vec<usize> = (0..degree).map(|p| gen[elements[i][p]]).collect();
            if !elements.contains(&composed) {
                elements.push(composed);
                frontier.push(elements.len() - 1);
            }
        }
    }
    let index_of = |perm: &Vec<usize>| elements.iter().position(|e| e == perm).unwrap();
    let table: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| {
                    let ab: Vec<usize> = (0..degree).map(|p| a[b[p]]).collect();
                    index_of(&ab)
                })
                .collect()
        })
        .collect();
    let labels = (0..elements.len()).map(|i| format!("e{i}")).collect();
    Group::from_cayley(labels, table).expect("permutation closure is a group")
}

fn dihedral(n: usize) -> Group {
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    group_from_permutations(n, &[rotation, reflection])
}

fn symmetric(n: usize) -> Group {
    let gens: Vec<Vec<usize>> = (0..n - 1)
        .map(|i| {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(i, i + 1);
            p
        })
        .collect();
    group_from_permutations(n, &gens)
}

fn alternating4() -> Group {
    // (0 1 2) and (0 1)(2 3).
    group_from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
}

fn product_of_cyclics(a: usize, b: usize) -> Group {
    let degree = a + b;
    let mut first: Vec<usize> = (0..degree).collect();
    for i in 0..a {
        first[i] = (i + 1) % a;
    }
    let mut second: Vec<usize> = (0..degree).collect();
    for i in 0..b {
        second[a + i] = a + (i + 1) % b;
    }
    group_from_permutations(degree, &[first, second])
}

/// Conjugates the table by a random relabeling that fixes the identity,
/// so sampled Cayley tables are not always in a canonical element order.
fn shuffle_elements<R: Rng>(rng: &mut R, group: &Group) -> Group {
    let n = group.order();
    let mut sigma: Vec<usize> = (1..n).collect();
    sigma.shuffle(rng);
    sigma.insert(0, 0);
    let mut inverse = vec![0usize; n];
    for (new, &old) in sigma.iter().enumerate() {
        inverse[old] = new;
    }
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| inverse[group.mul(sigma[a], sigma[b])]).collect())
        .collect();
    let labels = (0..n).map(|i| format!("e{i}")).collect();
    Group::from_cayley(labels, table).expect("conjugated table is a group")
}

/// A random group of order at most `max_order` (≥ 1): cyclic, dihedral,
/// a product of two cyclic groups, S₃, S₄ or A₄, optionally with its
/// non-identity elements shuffled.
pub fn random_group<R: Rng>(rng: &mut R, max_order: usize) -> Group {
    let max_order = max_order.max(1);
    let mut candidates: Vec<Group> = Vec::new();
    candidates.push(Group::cyclic(rng.gen_range(1..=max_order)).expect("positive order"));
    if max_order >= 4 {
        let n = rng.gen_range(2..=max_order / 2);
        candidates.push(dihedral(n));
        let a = rng.gen_range(2..=max_order / 2);
        let b = rng.gen_range(2..=(max_order / a).max(2));
        if a * b <= max_order {
            candidates.push(product_of_cyclics(a, b));
        }
    }
    if max_order >= 6 {
        candidates.push(symmetric(3));
    }
    if max_order >= 12 {
        candidates.push(alternating4());
    }
    if max_order >= 24 {
        candidates.push(symmetric(4));
    }
    let group = candidates.choose(rng).expect("at least one candidate").clone();
    if rng.gen_bool(0.5) {
        shuffle_elements(rng, &group)
    } else {
        group
    }
}

/// A random subgroup: the closure of up to two random elements.
pub fn random_subgroup<R: Rng>(rng: &mut R, group: &Group) -> Subgroup {
    let seeds: Vec<usize> =
        (0..rng.gen_range(0..=2)).map(|_| rng.gen_range(0..group.order())).collect();
    Subgroup::closure(group, &seeds).expect("seeds are in range")
}

/// A random global action on at most `max_points` points, glued together
/// from coset actions of random subgroups. The carrier is relabeled
/// `x1, x2, …`.
pub fn random_global_action<R: Rng>(rng: &mut R, group: &Group, max_points: usize) -> GlobalAction {
    let max_points = max_points.max(1);
    let mut blocks: Vec<GlobalAction> = Vec::new();
    let mut total = 0usize;
    while total < max_points {
        let sub = random_subgroup(rng, group);
        let block = GlobalAction::coset_action(group, &sub);
        if total + block.carrier().size() > max_points {
            if blocks.is_empty() {
                // Always fits: the one-point action of the full group.
                let everything = Subgroup::closure(group, &(0..group.order()).collect::<Vec<_>>())
                    .expect("whole group");
                blocks.push(GlobalAction::coset_action(group, &everything));
            }
            break;
        }
        total += block.carrier().size();
        blocks.push(block);
        if rng.gen_bool(0.3) {
            break;
        }
    }
    let size: usize = blocks.iter().map(|b| b.carrier().size()).sum();
    let carrier = FiniteSet::numbered(size);
    let mut perms: Vec<Vec<usize>> = vec![Vec::with_capacity(size); group.order()];
    let mut offset = 0;
    for block in &blocks {
        for g in group.elements() {
            perms[g].extend(block.perm(g).iter().map(|&t| t + offset));
        }
        offset += block.carrier().size();
    }
    GlobalAction::new(group.clone(), carrier, perms).expect("block sum of valid actions is valid")
}

/// A random subset of `0..size`, sorted; may be empty or everything.
pub fn random_subset<R: Rng>(rng: &mut R, size: usize) -> Vec<usize> {
    let density = rng.gen_range(0.2..=0.9);
    (0..size).filter(|_| rng.gen_bool(density)).collect()
}

/// A random valid partial action: a random global action restricted to a
/// random subset of its carrier.
pub fn random_partial_action<R: Rng>(
    rng: &mut R,
    max_order: usize,
    max_points: usize,
) -> PartialAction {
    let group = random_group(rng, max_order);
    let global = random_global_action(rng, &group, max_points);
    let subset = random_subset(rng, global.carrier().size());
    restrict_global(&global, &subset).expect("restriction of a valid action")
}
