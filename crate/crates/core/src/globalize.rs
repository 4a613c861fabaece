//! Construction of the enveloping global action of a partial action, the
//! full verification suite for such constructions, and an equivariant
//! isomorphism search for comparing global actions up to relabeling.
//!
//! The construction is the canonical quotient of G × X by
//! (g, x) ~ (h, y) iff x ∈ D_{g⁻¹h} and α_{h⁻¹g}(x) = y, with
//! β_h[(g, x)] = [(hg, x)] and x embedded as [(1, x)]. The relation is
//! explicitly verified to be an equivalence (transitivity is a theorem of
//! the axioms, so this doubles as a deep consistency test), and the
//! restriction identities D_g = X ∩ β_g(X), α_g = β_g|X are asserted on
//! the result.

use std::collections::BTreeSet;

use crate::action::{restrict_global, FiniteSet, PartialAction};
use crate::error::Error;
use crate::global::GlobalAction;
use crate::orbit::{burnside_orbit_count, global_orbit_size};
use crate::report::ValidationReport;

/// Default cap on |G|·|X|, the number of pairs quotiented by `globalize`.
pub const DEFAULT_SIZE_CAP: usize = 1_000_000;

/// A constructed enveloping action.
#[derive(Debug, Clone)]
pub struct Globalization {
    pub action: GlobalAction,
    /// embedding[x] is the index in T of the embedded carrier point x.
    pub embedding: Vec<usize>,
    /// For each T element, the least (g, x) pair of its equivalence class.
    pub witness_pairs: Vec<(usize, usize)>,
}

/// `globalize` with the default size cap.
pub fn globalize(action: &PartialAction) -> Result<Globalization, Error> {
    globalize_with_cap(action, DEFAULT_SIZE_CAP)
}

/// Builds the enveloping action (T, β) of a valid partial action as the
/// quotient of G × X described in the module docs.
///
/// T is ordered with the embedded carrier first (in carrier order), then
/// the fresh elements sorted by (orbit of their transversal representative,
/// least class member); fresh elements are labeled `t1`, `t2`, … so the
/// output is fully deterministic.
pub fn globalize_with_cap(action: &PartialAction, cap: usize) -> Result<Globalization, Error> {
    let group = action.group();
    let order = group.order();
    let size = action.carrier().size();
    let pairs = order * size;
    if pairs > cap {
        return Err(Error::SizeCap { required: pairs, cap });
    }

    let pair_name = |p: usize| {
        format!("({}, {})", group.label(p / size), action.carrier().label(p % size))
    };

    // Related pairs of (g, x): (gk, α_{k⁻¹}(x)) for every k with x ∈ D_k.
    let mut neighbors: Vec<Vec<usize>> = Vec::with_capacity(pairs);
    for p in 0..pairs {
        let (g, x) = (p / size, p % size);
        let mut adj = Vec::new();
        for k in group.elements() {
            if action.in_domain(k, x) {
                let y = action.apply(group.inv(k), x).ok_or_else(|| {
                    Error::consistency("globalize-step-defined", pair_name(p))
                })?;
                adj.push(group.mul(g, k) * size + y);
            }
        }
        adj.sort_unstable();
        adj.dedup();
        neighbors.push(adj);
    }

    // The relation must be an equivalence before quotienting.
    for (p, adj) in neighbors.iter().enumerate() {
        if adj.binary_search(&p).is_err() {
            return Err(Error::consistency("equivalence-reflexive", pair_name(p)));
        }
        for &q in adj {
            if neighbors[q].binary_search(&p).is_err() {
                return Err(Error::consistency(
                    "equivalence-symmetric",
                    format!("{} ~ {}", pair_name(p), pair_name(q)),
                ));
            }
            for &r in &neighbors[q] {
                if adj.binary_search(&r).is_err() {
                    return Err(Error::consistency(
                        "equivalence-transitive",
                        format!("{} ~ {} ~ {}", pair_name(p), pair_name(q), pair_name(r)),
                    ));
                }
            }
        }
    }

    let mut uf = UnionFind::new(pairs);
    for (p, adj) in neighbors.iter().enumerate() {
        for &q in adj {
            uf.union(p, q);
        }
    }

    // Canonical class member = least pair index = lexicographic (g, x).
    let mut class_min = vec![usize::MAX; pairs];
    for p in 0..pairs {
        let root = uf.find(p);
        if p < class_min[root] {
            class_min[root] = p;
        }
    }

    // The embedding x ↦ class of (1, x); identity has index 0, so the
    // pair index of (1, x) is x itself.
    let mut embedded_root = vec![false; pairs];
    for x in 0..size {
        let root = uf.find(x);
        if embedded_root[root] {
            return Err(Error::consistency(
                "embedding-injective",
                action.carrier().label(x).to_string(),
            ));
        }
        embedded_root[root] = true;
    }

    // Orbit key of a class: the least embedded carrier point in its
    // T-orbit, i.e. the transversal representative of the matching
    // partial orbit. Every class must reach one (minimality).
    let mut orbit_key = vec![usize::MAX; pairs];
    for p in 0..pairs {
        let root = uf.find(p);
        if orbit_key[root] != usize::MAX {
            continue;
        }
        let (g0, x0) = (class_min[root] / size, class_min[root] % size);
        let mut key = usize::MAX;
        for h in group.elements() {
            let q = uf.find(group.mul(h, g0) * size + x0);
            let (qg, qx) = (class_min[q] / size, class_min[q] % size);
            if qg == group.identity() {
                key = key.min(qx);
            }
        }
        if key == usize::MAX {
            return Err(Error::consistency("globalize-minimality", pair_name(class_min[root])));
        }
        for h in group.elements() {
            let q = uf.find(group.mul(h, g0) * size + x0);
            orbit_key[q] = key;
        }
    }

    // T order: embedded carrier first, then fresh classes sorted by
    // (orbit key, least member).
    let mut fresh: Vec<usize> = (0..pairs)
        .filter(|&p| uf.find(p) == p && !embedded_root[p])
        .collect();
    fresh.sort_by_key(|&root| (orbit_key[root], class_min[root]));

    let t_count = size + fresh.len();
    let mut t_index = vec![usize::MAX; pairs];
    let mut witness_pairs = Vec::with_capacity(t_count);
    let mut labels = Vec::with_capacity(t_count);
    for x in 0..size {
        t_index[uf.find(x)] = x;
        witness_pairs.push((group.identity(), x));
        labels.push(action.carrier().label(x).to_string());
    }
    let prefix = fresh_prefix(action.carrier().labels());
    for (i, &root) in fresh.iter().enumerate() {
        t_index[root] = size + i;
        witness_pairs.push((class_min[root] / size, class_min[root] % size));
        labels.push(format!("{prefix}{}", i + 1));
    }

    // β_h[class of (g, x)] = class of (hg, x); well-definedness is checked
    // over every class member.
    let mut perms: Vec<Vec<usize>> = vec![vec![usize::MAX; t_count]; order];
    for p in 0..pairs {
        let (g, x) = (p / size, p % size);
        let source = t_index[uf.find(p)];
        for h in group.elements() {
            let target = t_index[uf.find(group.mul(h, g) * size + x)];
            let slot = &mut perms[h][source];
            if *slot == usize::MAX {
                *slot = target;
            } else if *slot != target {
                return Err(Error::consistency(
                    "translation-well-defined",
                    format!("h = {}, class of {}", group.label(h), pair_name(p)),
                ));
            }
        }
    }

    let carrier = FiniteSet::new(labels).map_err(Error::from)?;
    let global = GlobalAction::new(group.clone(), carrier, perms)?;
    let embedding: Vec<usize> = (0..size).collect();

    for check in [
        ("restriction-identity", restriction_identity_witness(action, &global, &embedding)),
        ("map-identity", map_identity_witness(action, &global, &embedding)),
        ("minimality", minimality_witness(&global, &embedding)),
    ] {
        if let (name, Some(witness)) = check {
            return Err(Error::Consistency { check: name, witness });
        }
    }

    Ok(Globalization { action: global, embedding, witness_pairs })
}

/// Picks a fresh-label prefix ("t", or "tt", …) that cannot collide with
/// any existing carrier label of the form prefix + digits.
fn fresh_prefix(labels: &[String]) -> String {
    let mut prefix = "t".to_string();
    let collides = |p: &str, labels: &[String]| {
        labels.iter().any(|l| {
            l.starts_with(p) && l[p.len()..].chars().all(|c| c.is_ascii_digit()) && l.len() > p.len()
        })
    };
    while collides(&prefix, labels) {
        prefix.push('t');
    }
    prefix
}

/// First g where embedding(D_g) ≠ embedding(X) ∩ β_g(embedding(X)).
fn restriction_identity_witness(
    action: &PartialAction,
    global: &GlobalAction,
    embedding: &[usize],
) -> Option<String> {
    let group = action.group();
    let image: BTreeSet<usize> = embedding.iter().copied().collect();
    for g in group.elements() {
        let lhs: BTreeSet<usize> =
            action.domain(g).iter().map(|&x| embedding[x]).collect();
        let rhs: BTreeSet<usize> = image
            .iter()
            .copied()
            .filter(|&t| image.contains(&global.preimage(g, t)))
            .collect();
        if lhs != rhs {
            let d = lhs.symmetric_difference(&rhs).next().copied().unwrap_or(0);
            return Some(format!(
                "g = {}: embedded D_g ≠ X ∩ β_g(X) at {}",
                group.label(g),
                global.carrier().label(d)
            ));
        }
    }
    None
}

/// First (g, x) where β_g(embedding(x)) ≠ embedding(α_g(x)).
fn map_identity_witness(
    action: &PartialAction,
    global: &GlobalAction,
    embedding: &[usize],
) -> Option<String> {
    let group = action.group();
    for g in group.elements() {
        for &x in action.domain(group.inv(g)) {
            let expected = action.apply(g, x).map(|y| embedding[y]);
            let got = global.apply(g, embedding[x]);
            if expected != Some(got) {
                return Some(format!(
                    "g = {}, x = {}: β_g(x) = {} but α_g(x) embeds elsewhere",
                    group.label(g),
                    action.carrier().label(x),
                    global.carrier().label(got)
                ));
            }
        }
    }
    None
}

/// First T element not of the form β_g(embedding(x)).
fn minimality_witness(global: &GlobalAction, embedding: &[usize]) -> Option<String> {
    let mut covered = vec![false; global.carrier().size()];
    for &t in embedding {
        for g in global.group().elements() {
            covered[global.apply(g, t)] = true;
        }
    }
    covered
        .iter()
        .position(|&c| !c)
        .map(|t| format!("{} is not a translate of the embedded carrier", global.carrier().label(t)))
}

/// Checks that (global, embedding) really is an enveloping action of
/// `action`. Every failure becomes a report entry with a witness:
/// the global action laws, the restriction and map identities,
/// minimality, an exact round-trip through [`restrict_global`], the
/// predicted orbit sizes, the Burnside orbit count against the number of
/// partial orbits, and per-point orbit traces and stabilizers.
///
/// Only structural incompatibility (wrong group, embedding out of range
/// or non-injective) is an error.
pub fn verify_globalization(
    action: &PartialAction,
    global: &GlobalAction,
    embedding: &[usize],
) -> Result<ValidationReport, Error> {
    if !action.group().same_table(global.group()) {
        return Err(Error::Argument("partial and global actions have different groups".into()));
    }
    if embedding.len() != action.carrier().size() {
        return Err(Error::Argument(format!(
            "embedding has {} entries for a carrier of size {}",
            embedding.len(),
            action.carrier().size()
        )));
    }
    let mut seen = BTreeSet::new();
    for &t in embedding {
        if t >= global.carrier().size() {
            return Err(Error::Argument(format!("embedding target {t} out of range")));
        }
        if !seen.insert(t) {
            return Err(Error::Argument(format!("embedding target {t} repeated")));
        }
    }

    let mut report = global.validate();
    report.record("restriction-identity", restriction_identity_witness(action, global, embedding));
    report.record("map-identity", map_identity_witness(action, global, embedding));
    report.record("minimality", minimality_witness(global, embedding));
    report.record("restriction-roundtrip", roundtrip_witness(action, global, embedding));
    report.record("orbit-size-prediction", orbit_size_witness(action, global, embedding));
    report.record("burnside-orbit-count", burnside_witness(action, global));
    report.record("orbit-trace", orbit_trace_witness(action, global, embedding));
    report.record("stabilizer-match", stabilizer_witness(action, global, embedding));
    Ok(report)
}

/// restrict_global(global, embedding) must reproduce the partial action
/// exactly, domains and maps alike.
fn roundtrip_witness(
    action: &PartialAction,
    global: &GlobalAction,
    embedding: &[usize],
) -> Option<String> {
    let restricted = match restrict_global(global, embedding) {
        Ok(r) => r,
        Err(e) => return Some(format!("restriction failed: {e}")),
    };
    let group = action.group();
    for g in group.elements() {
        if restricted.domain(g) != action.domain(g) {
            return Some(format!("domains differ at g = {}", group.label(g)));
        }
        if restricted.map_pairs(g) != action.map_pairs(g) {
            return Some(format!("maps differ at g = {}", group.label(g)));
        }
    }
    None
}

fn orbit_size_witness(
    action: &PartialAction,
    global: &GlobalAction,
    embedding: &[usize],
) -> Option<String> {
    for x in 0..action.carrier().size() {
        let predicted = match global_orbit_size(action, x) {
            Ok(n) => n,
            Err(e) => return Some(format!("x = {}: {e}", action.carrier().label(x))),
        };
        let actual = global.orbit_of(embedding[x]).len();
        if predicted != actual {
            return Some(format!(
                "x = {}: predicted |O_x| = {predicted}, constructed orbit has {actual}",
                action.carrier().label(x)
            ));
        }
    }
    None
}

fn burnside_witness(action: &PartialAction, global: &GlobalAction) -> Option<String> {
    let counted = match burnside_orbit_count(global) {
        Ok(k) => k,
        Err(e) => return Some(e.to_string()),
    };
    let partial = match action.orbit_partition() {
        Ok(orbits) => orbits.len(),
        Err(e) => return Some(e.to_string()),
    };
    if counted != partial {
        return Some(format!("Burnside count {counted} ≠ {partial} partial orbits"));
    }
    None
}

/// O_{e(x)} ∩ e(X) must be exactly e(O_x).
fn orbit_trace_witness(
    action: &PartialAction,
    global: &GlobalAction,
    embedding: &[usize],
) -> Option<String> {
    let image: BTreeSet<usize> = embedding.iter().copied().collect();
    for x in 0..action.carrier().size() {
        let expected: BTreeSet<usize> = match action.orbit(x) {
            Ok(orbit) => orbit.into_iter().map(|y| embedding[y]).collect(),
            Err(e) => return Some(e.to_string()),
        };
        let traced: BTreeSet<usize> = global
            .orbit_of(embedding[x])
            .into_iter()
            .filter(|t| image.contains(t))
            .collect();
        if expected != traced {
            return Some(format!(
                "x = {}: global orbit meets X in {} points, partial orbit has {}",
                action.carrier().label(x),
                traced.len(),
                expected.len()
            ));
        }
    }
    None
}

/// The global stabilizer of e(x) must equal the partial stabilizer G_x.
fn stabilizer_witness(
    action: &PartialAction,
    global: &GlobalAction,
    embedding: &[usize],
) -> Option<String> {
    for x in 0..action.carrier().size() {
        let partial = match action.stabilizer(x) {
            Ok(s) => s,
            Err(e) => return Some(e.to_string()),
        };
        let global_members: Vec<usize> = global
            .group()
            .elements()
            .filter(|&g| global.apply(g, embedding[x]) == embedding[x])
            .collect();
        if partial.members() != global_members.as_slice() {
            return Some(format!(
                "x = {}: global stabilizer has {} elements, G_x has {}",
                action.carrier().label(x),
                global_members.len(),
                partial.order()
            ));
        }
    }
    None
}

/// Searches for a bijection Φ : T₁ → T₂ with Φ ∘ β_g = β'_g ∘ Φ for all g,
/// extending the pinned correspondences in `fixed`. Works orbit by orbit:
/// an equivariant map is determined on a whole orbit by the image of one
/// point, so the search branches only over base-point images, pruned by
/// orbit size. Returns the bijection as a vector indexed by T₁, or `None`.
pub fn actions_isomorphic(
    b1: &GlobalAction,
    b2: &GlobalAction,
    fixed: &[(usize, usize)],
) -> Result<Option<Vec<usize>>, Error> {
    if !b1.group().same_table(b2.group()) {
        return Err(Error::Argument("actions of different groups cannot be isomorphic".into()));
    }
    let n1 = b1.carrier().size();
    let n2 = b2.carrier().size();
    let mut phi: Vec<Option<usize>> = vec![None; n1];
    let mut used = vec![false; n2];
    for &(s, t) in fixed {
        if s >= n1 || t >= n2 {
            return Err(Error::Argument(format!("pinned pair ({s}, {t}) out of range")));
        }
        match phi[s] {
            Some(prev) if prev != t => {
                return Err(Error::Argument(format!("point {s} pinned to both {prev} and {t}")));
            }
            Some(_) => continue,
            None => {}
        }
        if used[t] {
            return Err(Error::Argument(format!("target {t} pinned twice")));
        }
        phi[s] = Some(t);
        used[t] = true;
    }
    if n1 != n2 {
        return Ok(None);
    }

    let orbits1 = b1.orbits();
    let orbits2 = b2.orbits();
    let mut sizes1: Vec<usize> = orbits1.iter().map(|o| o.len()).collect();
    let mut sizes2: Vec<usize> = orbits2.iter().map(|o| o.len()).collect();
    sizes1.sort_unstable();
    sizes2.sort_unstable();
    if sizes1 != sizes2 {
        return Ok(None);
    }

    let mut orbit2_taken = vec![false; orbits2.len()];
    let orbit2_of = {
        let mut v = vec![0usize; n2];
        for (i, o) in orbits2.iter().enumerate() {
            for &t in o {
                v[t] = i;
            }
        }
        v
    };

    if extend_orbitwise(b1, b2, &orbits1, &orbits2, &orbit2_of, 0, &mut phi, &mut used, &mut orbit2_taken) {
        let phi: Vec<usize> = phi.into_iter().map(|p| p.expect("search fills every point")).collect();
        debug_assert!(b1.group().elements().all(|g| {
            (0..n1).all(|t| phi[b1.apply(g, t)] == b2.apply(g, phi[t]))
        }));
        Ok(Some(phi))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn extend_orbitwise(
    b1: &GlobalAction,
    b2: &GlobalAction,
    orbits1: &[Vec<usize>],
    orbits2: &[Vec<usize>],
    orbit2_of: &[usize],
    next: usize,
    phi: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    orbit2_taken: &mut Vec<bool>,
) -> bool {
    let Some(orbit) = orbits1.get(next) else {
        return true;
    };
    // A pinned point, if present, forces the base image.
    let base = orbit.iter().copied().find(|&u| phi[u].is_some()).unwrap_or(orbit[0]);
    let candidates: Vec<usize> = match phi[base] {
        Some(v) => vec![v],
        None => orbits2
            .iter()
            .enumerate()
            .filter(|(i, o)| !orbit2_taken[*i] && o.len() == orbit.len())
            .flat_map(|(_, o)| o.iter().copied())
            .filter(|&v| !used[v])
            .collect(),
    };
    for v in candidates {
        if orbits2[orbit2_of[v]].len() != orbit.len() {
            continue;
        }
        let mut placed: Vec<usize> = Vec::new();
        let mut ok = true;
        for g in b1.group().elements() {
            let w = b1.apply(g, base);
            let target = b2.apply(g, v);
            match phi[w] {
                Some(existing) if existing != target => {
                    ok = false;
                    break;
                }
                Some(_) => {}
                None => {
                    if used[target] {
                        ok = false;
                        break;
                    }
                    phi[w] = Some(target);
                    used[target] = true;
                    placed.push(w);
                }
            }
        }
        if ok {
            let taken = orbit2_of[v];
            let was_taken = orbit2_taken[taken];
            orbit2_taken[taken] = true;
            if extend_orbitwise(b1, b2, orbits1, orbits2, orbit2_of, next + 1, phi, used, orbit2_taken)
            {
                return true;
            }
            orbit2_taken[taken] = was_taken;
        }
        for w in placed {
            used[phi[w].expect("just placed")] = false;
            phi[w] = None;
        }
    }
    false
}

/// Internal union-find over pair indices.
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // Smaller root wins so that class representatives stay canonical.
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::testutil::{cyclic4_action, cyclic8_action};

    #[test]
    fn globalized_cyclic8_action_has_twelve_points() {
        let a = cyclic8_action();
        let glob = globalize(&a).unwrap();
        assert_eq!(glob.action.carrier().size(), 12);
        let sizes: Vec<usize> = glob.action.orbits().iter().map(|o| o.len()).collect();
        assert_eq!(sizes, vec![4, 8]);
        assert_eq!(glob.embedding, vec![0, 1, 2, 3]);
        // Embedded labels come first, fresh ones are t1, t2, …
        assert_eq!(glob.action.carrier().label(0), "x1");
        assert_eq!(glob.action.carrier().label(4), "t1");
        assert_eq!(glob.action.carrier().label(11), "t8");
        // The witness pair of an embedded point is (1, x).
        assert_eq!(glob.witness_pairs[2], (0, 2));
    }

    #[test]
    fn globalized_cyclic8_action_verifies() {
        let a = cyclic8_action();
        let glob = globalize(&a).unwrap();
        let report = verify_globalization(&a, &glob.action, &glob.embedding).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(burnside_orbit_count(&glob.action).unwrap(), 2);
    }

    #[test]
    fn globalized_cyclic4_action_has_six_points() {
        let a = cyclic4_action();
        let glob = globalize(&a).unwrap();
        assert_eq!(glob.action.carrier().size(), 6);
        let sizes: Vec<usize> = glob.action.orbits().iter().map(|o| o.len()).collect();
        assert_eq!(sizes, vec![2, 4]);
        let report = verify_globalization(&a, &glob.action, &glob.embedding).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn already_global_input_globalizes_to_itself() {
        let b = GlobalAction::regular(&Group::cyclic(4).unwrap());
        let a = restrict_global(&b, &[0, 1, 2, 3]).unwrap();
        let glob = globalize(&a).unwrap();
        assert_eq!(glob.action.carrier().size(), 4);
        let iso = actions_isomorphic(&b, &glob.action, &[]).unwrap();
        assert!(iso.is_some());
    }

    #[test]
    fn free_partial_action_globalizes_to_regular_blocks() {
        // Empty domains away from the identity: every point spawns a free
        // orbit of size |G|.
        let group = Group::cyclic(4).unwrap();
        let a = PartialAction::from_sparse(group, FiniteSet::numbered(3), &[]).unwrap();
        for x in 0..3 {
            assert_eq!(crate::orbit::global_orbit_size(&a, x).unwrap(), 4);
        }
        let glob = globalize(&a).unwrap();
        assert_eq!(glob.action.carrier().size(), 12);
        assert!(glob.action.orbits().iter().all(|o| o.len() == 4));
        let report = verify_globalization(&a, &glob.action, &glob.embedding).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn empty_carrier_globalizes_to_nothing() {
        let a = PartialAction::from_sparse(
            Group::cyclic(5).unwrap(),
            FiniteSet::numbered(0),
            &[],
        )
        .unwrap();
        let glob = globalize(&a).unwrap();
        assert_eq!(glob.action.carrier().size(), 0);
        assert!(verify_globalization(&a, &glob.action, &glob.embedding).unwrap().passed());
    }

    #[test]
    fn size_cap_is_enforced() {
        let a = cyclic8_action();
        assert!(matches!(
            globalize_with_cap(&a, 10),
            Err(Error::SizeCap { required: 32, cap: 10 })
        ));
    }

    #[test]
    fn verification_catches_a_corrupted_table() {
        let a = cyclic8_action();
        let glob = globalize(&a).unwrap();
        // Swap two targets inside β_g.
        let mut perms: Vec<Vec<usize>> =
            a.group().elements().map(|g| glob.action.perm(g).to_vec()).collect();
        perms[1].swap(8, 9);
        let corrupted = GlobalAction::from_parts(
            a.group().clone(),
            glob.action.carrier().clone(),
            perms,
        )
        .unwrap();
        let report = verify_globalization(&a, &corrupted, &glob.embedding).unwrap();
        assert!(!report.passed());
        let failure = report.first_failure().unwrap();
        assert!(!failure.witness.is_empty());
    }

    #[test]
    fn isomorphism_respects_pins() {
        let b = GlobalAction::regular(&Group::cyclic(4).unwrap());
        // Identity pin set: fine.
        assert!(actions_isomorphic(&b, &b, &[(0, 0)]).unwrap().is_some());
        // Pinning 0 ↦ 1 forces the translation-by-1 automorphism.
        let phi = actions_isomorphic(&b, &b, &[(0, 1)]).unwrap().unwrap();
        assert_eq!(phi[0], 1);
        // Contradictory pins are an argument error.
        assert!(actions_isomorphic(&b, &b, &[(0, 0), (0, 1)]).is_err());
    }

    #[test]
    fn non_isomorphic_actions_are_distinguished() {
        let g = Group::cyclic(4).unwrap();
        let regular = GlobalAction::regular(&g);
        let trivial = GlobalAction::trivial(&g, 4);
        assert_eq!(actions_isomorphic(&regular, &trivial, &[]).unwrap(), None);
    }

    #[test]
    fn permuted_input_order_gives_isomorphic_globalization() {
        // Same partial action with the carrier listed in a different order:
        // globalization is unique up to an equivariant bijection pinning X.
        let a = cyclic8_action();
        let glob1 = globalize(&a).unwrap();
        let reordered = restrict_global(&glob1.action, &[3, 2, 1, 0]).unwrap();
        let glob2 = globalize(&reordered).unwrap();
        let pins: Vec<(usize, usize)> =
            (0..4).map(|x| (glob1.embedding[x], glob2.embedding[3 - x])).collect();
        let phi = actions_isomorphic(&glob1.action, &glob2.action, &pins).unwrap();
        assert!(phi.is_some());
    }
}
