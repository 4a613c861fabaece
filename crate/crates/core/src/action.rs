//! Partial actions of a finite group on a finite set.
//!
//! A partial action assigns to every group element g a subset D_g of the
//! carrier X and a bijection α_g : D_{g⁻¹} → D_g such that
//!
//! - (i) D_1 = X and α_1 is the identity,
//! - (ii) α_g(D_{g⁻¹} ∩ D_h) = D_g ∩ D_{gh} for all g, h,
//! - (iii) α_g(α_h(x)) = α_{gh}(x) for all x ∈ D_{h⁻¹} ∩ D_{h⁻¹g⁻¹}.
//!
//! [`PartialAction::validate`] checks exactly these axioms (exhaustively,
//! no sampling) and reports a minimal witness for each failure. The query
//! operations (orbits, stabilizers, upper sets, transversals) assume a
//! validated action; on garbage input they return consistency errors
//! rather than wrong answers.

use std::collections::BTreeSet;

use crate::error::{ActionError, Error};
use crate::global::GlobalAction;
use crate::group::{Coset, Group, Subgroup};
use crate::report::ValidationReport;

/// A finite carrier set. Labels are display-only and pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSet {
    labels: Vec<String>,
}

impl FiniteSet {
    pub fn new(labels: Vec<String>) -> Result<FiniteSet, ActionError> {
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(ActionError::DuplicateLabel { label: l.clone() });
            }
        }
        Ok(FiniteSet { labels })
    }

    /// Carrier `{x1, …, xn}`.
    pub fn numbered(n: usize) -> FiniteSet {
        FiniteSet { labels: (1..=n).map(|i| format!("x{i}")).collect() }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// One sparse input entry: a group element with its domain D_g and the
/// (source, target) pairs of α_g.
pub type SparseEntry = (usize, Vec<usize>, Vec<(usize, usize)>);

/// A candidate partial action: domains and maps are stored exactly as
/// given (after sorting), so invalid data is representable and can be
/// diagnosed by [`PartialAction::validate`].
///
/// The domains are stored redundantly with the maps on purpose: the
/// validator requires the explicit D_g to agree with the source set of
/// α_g, which catches transcription slips in hand-entered data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialAction {
    group: Group,
    carrier: FiniteSet,
    /// Per group element g, the sorted subset D_g of carrier indices.
    domains: Vec<Vec<usize>>,
    /// Per group element g, the pairs (source, target) of α_g sorted by
    /// source, with source ∈ D_{g⁻¹} and target ∈ D_g when well-formed.
    maps: Vec<Vec<(usize, usize)>>,
}

impl PartialAction {
    /// Wraps explicit per-element domains and maps. Only arity and index
    /// ranges are checked here; everything semantic is left to
    /// [`PartialAction::validate`].
    pub fn new(
        group: Group,
        carrier: FiniteSet,
        mut domains: Vec<Vec<usize>>,
        mut maps: Vec<Vec<(usize, usize)>>,
    ) -> Result<PartialAction, ActionError> {
        let order = group.order();
        let size = carrier.size();
        if domains.len() != order {
            return Err(ActionError::WrongArity { expected: order, got: domains.len() });
        }
        if maps.len() != order {
            return Err(ActionError::WrongArity { expected: order, got: maps.len() });
        }
        for (g, d) in domains.iter_mut().enumerate() {
            d.sort_unstable();
            for w in d.windows(2) {
                if w[0] == w[1] {
                    return Err(ActionError::DuplicateDomainEntry {
                        element: group.label(g).to_string(),
                        index: w[0],
                    });
                }
            }
            if let Some(&i) = d.iter().find(|&&i| i >= size) {
                return Err(ActionError::CarrierOutOfRange { index: i, size });
            }
        }
        for m in maps.iter_mut() {
            m.sort_unstable();
            if let Some(&(s, t)) = m.iter().find(|&&(s, t)| s >= size || t >= size) {
                let bad = if s >= size { s } else { t };
                return Err(ActionError::CarrierOutOfRange { index: bad, size });
            }
        }
        Ok(PartialAction { group, carrier, domains, maps })
    }

    /// Builds an action from entries `(g, D_g, α_g)` for the group elements
    /// with something to say. Omitted non-identity elements get an empty
    /// domain; an omitted identity means D_1 = X with α_1 = id.
    pub fn from_sparse(
        group: Group,
        carrier: FiniteSet,
        entries: &[SparseEntry],
    ) -> Result<PartialAction, Error> {
        let order = group.order();
        let mut domains = vec![Vec::new(); order];
        let mut maps = vec![Vec::new(); order];
        let mut given = vec![false; order];
        for (g, dom, map) in entries {
            if *g >= order {
                return Err(ActionError::GroupOutOfRange { index: *g, order }.into());
            }
            if given[*g] {
                return Err(Error::Argument(format!(
                    "duplicate entry for group element {}",
                    group.label(*g)
                )));
            }
            given[*g] = true;
            domains[*g] = dom.clone();
            maps[*g] = map.clone();
        }
        let e = group.identity();
        if !given[e] {
            domains[e] = (0..carrier.size()).collect();
            maps[e] = (0..carrier.size()).map(|x| (x, x)).collect();
        }
        Ok(PartialAction::new(group, carrier, domains, maps)?)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn carrier(&self) -> &FiniteSet {
        &self.carrier
    }

    /// The sorted domain D_g.
    pub fn domain(&self, g: usize) -> &[usize] {
        &self.domains[g]
    }

    pub fn in_domain(&self, g: usize, x: usize) -> bool {
        self.domains[g].binary_search(&x).is_ok()
    }

    /// The (source, target) pairs of α_g, sorted by source.
    pub fn map_pairs(&self, g: usize) -> &[(usize, usize)] {
        &self.maps[g]
    }

    /// α_g(x), or `None` when x is not a source of α_g.
    pub fn apply(&self, g: usize, x: usize) -> Option<usize> {
        let m = &self.maps[g];
        m.binary_search_by_key(&x, |&(s, _)| s).ok().map(|i| m[i].1)
    }

    fn xlabel(&self, x: usize) -> &str {
        self.carrier.label(x)
    }

    fn glabel(&self, g: usize) -> &str {
        self.group.label(g)
    }

    /// Checks the partial-action axioms exhaustively. The report carries
    /// one entry per axiom (plus structural pre-checks), each with a
    /// minimal witness on failure. The report passes iff this really is a
    /// partial action.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        report.record("domain-map-agreement", self.check_source_agreement());
        report.record("axiom-i-identity", self.check_identity_axiom());
        report.record("bijectivity", self.check_bijectivity());
        report.record("axiom-ii-domain-intertwine", self.check_domain_intertwine());
        report.record("axiom-iii-composition", self.check_composition());
        report.record("inverse-compatibility", self.check_inverse_compatibility());
        report
    }

    /// Sources of α_g must be exactly D_{g⁻¹}, with no repeats.
    fn check_source_agreement(&self) -> Option<String> {
        for g in self.group.elements() {
            let sources: Vec<usize> = self.maps[g].iter().map(|&(s, _)| s).collect();
            for w in sources.windows(2) {
                if w[0] == w[1] {
                    return Some(format!(
                        "α_{} lists source {} twice",
                        self.glabel(g),
                        self.xlabel(w[0])
                    ));
                }
            }
            let expected = &self.domains[self.group.inv(g)];
            if &sources != expected {
                let witness = first_set_difference(&sources, expected);
                return Some(format!(
                    "sources of α_{} differ from D_{} at {}",
                    self.glabel(g),
                    self.glabel(self.group.inv(g)),
                    witness.map(|x| self.xlabel(x).to_string()).unwrap_or_default()
                ));
            }
        }
        None
    }

    /// D_1 = X and α_1 = id.
    fn check_identity_axiom(&self) -> Option<String> {
        let e = self.group.identity();
        if self.domains[e].len() != self.carrier.size() {
            let missing = (0..self.carrier.size()).find(|&x| !self.in_domain(e, x)).unwrap_or(0);
            return Some(format!("D_1 does not contain {}", self.xlabel(missing)));
        }
        for &(s, t) in &self.maps[e] {
            if s != t {
                return Some(format!(
                    "α_1 moves {} to {}",
                    self.xlabel(s),
                    self.xlabel(t)
                ));
            }
        }
        None
    }

    /// Targets of α_g must be exactly D_g: together with source agreement
    /// this makes each α_g a bijection from D_{g⁻¹} onto D_g.
    fn check_bijectivity(&self) -> Option<String> {
        for g in self.group.elements() {
            let mut targets: Vec<usize> = self.maps[g].iter().map(|&(_, t)| t).collect();
            targets.sort_unstable();
            for w in targets.windows(2) {
                if w[0] == w[1] {
                    return Some(format!(
                        "α_{} hits target {} twice",
                        self.glabel(g),
                        self.xlabel(w[0])
                    ));
                }
            }
            if targets != self.domains[g] {
                let witness = first_set_difference(&targets, &self.domains[g]);
                return Some(format!(
                    "targets of α_{} are not onto D_{} (at {})",
                    self.glabel(g),
                    self.glabel(g),
                    witness.map(|x| self.xlabel(x).to_string()).unwrap_or_default()
                ));
            }
        }
        None
    }

    /// α_g(D_{g⁻¹} ∩ D_h) = D_g ∩ D_{gh} for every pair (g, h).
    fn check_domain_intertwine(&self) -> Option<String> {
        for g in self.group.elements() {
            for h in self.group.elements() {
                let lhs: BTreeSet<usize> = match self
                    .intersect(self.group.inv(g), h)
                    .into_iter()
                    .map(|x| self.apply(g, x))
                    .collect()
                {
                    Some(set) => set,
                    None => {
                        return Some(format!(
                            "α_{} undefined somewhere on D_{} ∩ D_{}",
                            self.glabel(g),
                            self.glabel(self.group.inv(g)),
                            self.glabel(h)
                        ))
                    }
                };
                let rhs: BTreeSet<usize> =
                    self.intersect(g, self.group.mul(g, h)).into_iter().collect();
                if lhs != rhs {
                    let diff = lhs.symmetric_difference(&rhs).next().copied();
                    return Some(format!(
                        "g = {}, h = {}: α_g(D_g⁻¹ ∩ D_h) ≠ D_g ∩ D_gh (at {})",
                        self.glabel(g),
                        self.glabel(h),
                        diff.map(|x| self.xlabel(x).to_string()).unwrap_or_default()
                    ));
                }
            }
        }
        None
    }

    /// α_g(α_h(x)) = α_{gh}(x) for every x ∈ D_{h⁻¹} ∩ D_{h⁻¹g⁻¹}.
    fn check_composition(&self) -> Option<String> {
        for g in self.group.elements() {
            for h in self.group.elements() {
                let gh = self.group.mul(g, h);
                // D_{h⁻¹} ∩ D_{h⁻¹g⁻¹}; note h⁻¹g⁻¹ = (gh)⁻¹.
                for x in self.intersect(self.group.inv(h), self.group.inv(gh)) {
                    let witness = |msg: &str| {
                        Some(format!(
                            "g = {}, h = {}, x = {}: {}",
                            self.glabel(g),
                            self.glabel(h),
                            self.xlabel(x),
                            msg
                        ))
                    };
                    let y = match self.apply(h, x) {
                        Some(y) => y,
                        None => return witness("α_h(x) undefined"),
                    };
                    let z = match self.apply(g, y) {
                        Some(z) => z,
                        None => return witness("α_g(α_h(x)) undefined"),
                    };
                    match self.apply(gh, x) {
                        Some(w) if w == z => {}
                        Some(w) => {
                            return witness(&format!(
                                "α_g(α_h(x)) = {} but α_gh(x) = {}",
                                self.xlabel(z),
                                self.xlabel(w)
                            ))
                        }
                        None => return witness("α_gh(x) undefined"),
                    }
                }
            }
        }
        None
    }

    /// α_{g⁻¹} must be the inverse of α_g as a set of pairs. Redundant
    /// given the axioms; kept as a cross-check on the stored data.
    fn check_inverse_compatibility(&self) -> Option<String> {
        for g in self.group.elements() {
            let mut flipped: Vec<(usize, usize)> =
                self.maps[g].iter().map(|&(s, t)| (t, s)).collect();
            flipped.sort_unstable();
            if flipped != self.maps[self.group.inv(g)] {
                return Some(format!(
                    "α_{} is not the inverse of α_{}",
                    self.glabel(self.group.inv(g)),
                    self.glabel(g)
                ));
            }
        }
        None
    }

    /// Sorted D_g ∩ D_h.
    fn intersect(&self, g: usize, h: usize) -> Vec<usize> {
        self.domains[g].iter().copied().filter(|&x| self.in_domain(h, x)).collect()
    }

    /// The partial orbit O_x = {α_{g⁻¹}(x) | x ∈ D_g}, sorted.
    ///
    /// One application step already reaches the whole orbit; closure under
    /// further admissible steps is asserted and a violation is reported as
    /// a consistency error.
    pub fn orbit(&self, x: usize) -> Result<Vec<usize>, Error> {
        self.check_point(x)?;
        let mut orbit = BTreeSet::new();
        for g in self.group.elements() {
            if self.in_domain(g, x) {
                let y = self.apply(self.group.inv(g), x).ok_or_else(|| {
                    Error::consistency(
                        "orbit-step-defined",
                        format!("α_{}({}) undefined", self.glabel(self.group.inv(g)), self.xlabel(x)),
                    )
                })?;
                orbit.insert(y);
            }
        }
        for &y in &orbit {
            for h in self.group.elements() {
                if self.in_domain(h, y) {
                    let z = self.apply(self.group.inv(h), y).ok_or_else(|| {
                        Error::consistency("orbit-closure", format!("undefined at {}", self.xlabel(y)))
                    })?;
                    if !orbit.contains(&z) {
                        return Err(Error::consistency(
                            "orbit-closure",
                            format!(
                                "α_{}({}) = {} escapes the orbit of {}",
                                self.glabel(self.group.inv(h)),
                                self.xlabel(y),
                                self.xlabel(z),
                                self.xlabel(x)
                            ),
                        ));
                    }
                }
            }
        }
        Ok(orbit.into_iter().collect())
    }

    /// The partial stabilizer {g | x ∈ D_{g⁻¹} and α_g(x) = x}, asserted
    /// to be a subgroup.
    pub fn stabilizer(&self, x: usize) -> Result<Subgroup, Error> {
        self.check_point(x)?;
        let members: Vec<usize> = self
            .group
            .elements()
            .filter(|&g| self.in_domain(self.group.inv(g), x) && self.apply(g, x) == Some(x))
            .collect();
        Subgroup::from_members(&self.group, members).map_err(|e| {
            Error::consistency("stabilizer-subgroup", format!("x = {}: {e}", self.xlabel(x)))
        })
    }

    /// (G^x, Ḡ^x): the elements defined at x, G^x = {g⁻¹ | x ∈ D_g}, and
    /// its complement in G. The two always partition the group.
    pub fn upper_sets(&self, x: usize) -> Result<(Vec<usize>, Vec<usize>), Error> {
        self.check_point(x)?;
        let upper: Vec<usize> = self
            .group
            .elements()
            .filter(|&h| self.in_domain(self.group.inv(h), x))
            .collect();
        let complement: Vec<usize> =
            self.group.elements().filter(|&h| !self.in_domain(self.group.inv(h), x)).collect();
        // Same membership test negated, so this cannot differ; keep the
        // two routes written out as a guard against refactors.
        debug_assert!(upper.iter().chain(&complement).count() == self.group.order());
        let direct: Vec<usize> = self
            .group
            .elements()
            .filter(|&g| self.in_domain(g, x))
            .map(|g| self.group.inv(g))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        debug_assert_eq!(upper, direct);
        Ok((upper, complement))
    }

    /// The canonical partial transversal: the least index of each partial
    /// orbit, in increasing order. Verifies that the orbits partition the
    /// carrier.
    pub fn transversal(&self) -> Result<Vec<usize>, Error> {
        Ok(self.orbit_partition()?.into_iter().map(|orbit| orbit[0]).collect())
    }

    /// All distinct partial orbits, each sorted, ordered by least element.
    /// Errors if the orbits fail to partition the carrier.
    pub fn orbit_partition(&self) -> Result<Vec<Vec<usize>>, Error> {
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let mut all: Vec<Vec<usize>> = Vec::with_capacity(self.carrier.size());
        for x in 0..self.carrier.size() {
            all.push(self.orbit(x)?);
        }
        for (x, orbit) in all.iter().enumerate() {
            if orbit.binary_search(&x).is_err() {
                return Err(Error::consistency(
                    "orbit-partition",
                    format!("{} missing from its own orbit", self.xlabel(x)),
                ));
            }
            for (y, other) in all.iter().enumerate().skip(x + 1) {
                let overlap = orbit.iter().any(|v| other.binary_search(v).is_ok());
                if overlap && orbit != other {
                    return Err(Error::consistency(
                        "orbit-partition",
                        format!(
                            "orbits of {} and {} overlap without being equal",
                            self.xlabel(x),
                            self.xlabel(y)
                        ),
                    ));
                }
            }
            if orbit[0] == x {
                orbits.push(orbit.clone());
            }
        }
        Ok(orbits)
    }

    /// Tests the closure condition for a partial G-subset: x ∈ S ∩ D_g
    /// must imply α_{g⁻¹}(x) ∈ S. Returns the first violating (g, x), or
    /// `None` when `subset` is closed.
    pub fn partial_g_subset_witness(
        &self,
        subset: &[usize],
    ) -> Result<Option<(usize, usize)>, Error> {
        let set = self.check_subset(subset)?;
        for g in self.group.elements() {
            for &x in subset {
                if self.in_domain(g, x) {
                    match self.apply(self.group.inv(g), x) {
                        Some(y) if set.contains(&y) => {}
                        _ => return Ok(Some((g, x))),
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_partial_g_subset(&self, subset: &[usize]) -> Result<bool, Error> {
        Ok(self.partial_g_subset_witness(subset)?.is_none())
    }

    /// Restricts the action to a partial G-subset, with the subset's order
    /// defining the new carrier order. Rejects subsets that are not closed.
    pub fn sub_action(&self, subset: &[usize]) -> Result<PartialAction, Error> {
        if let Some((g, x)) = self.partial_g_subset_witness(subset)? {
            return Err(Error::Argument(format!(
                "subset is not a partial G-subset: α_{}({}) leaves it",
                self.glabel(self.group.inv(g)),
                self.xlabel(x)
            )));
        }
        let position: std::collections::BTreeMap<usize, usize> =
            subset.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let labels = subset.iter().map(|&x| self.xlabel(x).to_string()).collect();
        let carrier = FiniteSet::new(labels).map_err(Error::from)?;
        let mut domains = Vec::with_capacity(self.group.order());
        let mut maps = Vec::with_capacity(self.group.order());
        for g in self.group.elements() {
            let dom: Vec<usize> = subset
                .iter()
                .filter(|&&x| self.in_domain(g, x))
                .map(|x| position[x])
                .collect();
            let map: Vec<(usize, usize)> = self.maps[g]
                .iter()
                .filter(|(s, _)| position.contains_key(s))
                .map(|&(s, t)| (position[&s], position[&t]))
                .collect();
            domains.push(dom);
            maps.push(map);
        }
        Ok(PartialAction::new(self.group.clone(), carrier, domains, maps)?)
    }

    /// Full per-point analysis: orbit, stabilizer, upper sets and the
    /// coset space G^x/G_x, with every counting identity cross-checked.
    pub fn orbit_report(&self, x: usize) -> Result<PartialOrbitReport, Error> {
        self.check_point(x)?;
        let orbit = self.orbit(x)?;
        let stabilizer = self.stabilizer(x)?;
        let (upper, upper_complement) = self.upper_sets(x)?;
        if orbit.len() * stabilizer.order() != upper.len() {
            return Err(Error::consistency(
                "orbit-stabilizer-count",
                format!(
                    "x = {}: |orbit| {} · |stab| {} ≠ |G^x| {}",
                    self.xlabel(x),
                    orbit.len(),
                    stabilizer.order(),
                    upper.len()
                ),
            ));
        }
        if upper_complement.len() % stabilizer.order() != 0 {
            return Err(Error::consistency(
                "stabilizer-divides-complement",
                format!("x = {}", self.xlabel(x)),
            ));
        }
        let mut cosets: Vec<Coset> = Vec::new();
        for g in self.group.elements() {
            if self.in_domain(g, x) {
                let members = self.group.left_coset(self.group.inv(g), &stabilizer);
                let coset = Coset::new(members);
                if !cosets.contains(&coset) {
                    cosets.push(coset);
                }
            }
        }
        cosets.sort_by_key(|c| c.representative);
        let mut union: Vec<usize> = Vec::new();
        for c in &cosets {
            if c.members.len() != stabilizer.order() {
                return Err(Error::consistency("coset-size", format!("x = {}", self.xlabel(x))));
            }
            union.extend(&c.members);
        }
        let before = union.len();
        union.sort_unstable();
        union.dedup();
        if union.len() != before || union != upper {
            return Err(Error::consistency(
                "cosets-cover-upper-set",
                format!("x = {}", self.xlabel(x)),
            ));
        }
        Ok(PartialOrbitReport { base: x, orbit, stabilizer, upper, upper_complement, cosets })
    }

    fn check_point(&self, x: usize) -> Result<(), Error> {
        if x >= self.carrier.size() {
            return Err(ActionError::CarrierOutOfRange { index: x, size: self.carrier.size() }.into());
        }
        Ok(())
    }

    fn check_subset(&self, subset: &[usize]) -> Result<BTreeSet<usize>, Error> {
        let mut set = BTreeSet::new();
        for &x in subset {
            self.check_point(x)?;
            if !set.insert(x) {
                return Err(ActionError::DuplicateSubsetEntry { index: x }.into());
            }
        }
        Ok(set)
    }
}

/// First element in exactly one of two sorted slices.
fn first_set_difference(a: &[usize], b: &[usize]) -> Option<usize> {
    let sa: BTreeSet<usize> = a.iter().copied().collect();
    let sb: BTreeSet<usize> = b.iter().copied().collect();
    sa.symmetric_difference(&sb).next().copied()
}

/// Per-point analysis produced by [`PartialAction::orbit_report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialOrbitReport {
    /// The base point x.
    pub base: usize,
    /// The partial orbit of x, sorted.
    pub orbit: Vec<usize>,
    /// The partial stabilizer G_x.
    pub stabilizer: Subgroup,
    /// G^x = {g⁻¹ | x ∈ D_g}, sorted.
    pub upper: Vec<usize>,
    /// Ḡ^x = G \ G^x, sorted.
    pub upper_complement: Vec<usize>,
    /// The coset space G^x/G_x: the cosets g⁻¹G_x with x ∈ D_g, ordered by
    /// least member, each with its least member as representative.
    pub cosets: Vec<Coset>,
}

/// Restriction of a global action to an ordered subset of its carrier:
/// D_g = S ∩ β_g(S) and α_g = β_g on D_{g⁻¹}. The result always satisfies
/// the partial-action axioms, which makes this the natural generator of
/// valid partial actions.
pub fn restrict_global(global: &GlobalAction, subset: &[usize]) -> Result<PartialAction, Error> {
    let size = global.carrier().size();
    let mut position = std::collections::BTreeMap::new();
    for (i, &t) in subset.iter().enumerate() {
        if t >= size {
            return Err(ActionError::CarrierOutOfRange { index: t, size }.into());
        }
        if position.insert(t, i).is_some() {
            return Err(ActionError::DuplicateSubsetEntry { index: t }.into());
        }
    }
    let group = global.group().clone();
    let labels: Vec<String> = subset.iter().map(|&t| global.carrier().label(t).to_string()).collect();
    let carrier = FiniteSet::new(labels).map_err(Error::from)?;
    let mut domains = Vec::with_capacity(group.order());
    let mut maps = Vec::with_capacity(group.order());
    for g in group.elements() {
        // D_g = S ∩ β_g(S), expressed in subset positions.
        let dom: Vec<usize> = subset
            .iter()
            .filter(|&&t| position.contains_key(&global.preimage(g, t)))
            .map(|t| position[t])
            .collect();
        let ginv = group.inv(g);
        let map: Vec<(usize, usize)> = subset
            .iter()
            .filter(|&&t| position.contains_key(&global.preimage(ginv, t)))
            .map(|&t| (position[&t], position[&global.apply(g, t)]))
            .collect();
        domains.push(dom);
        maps.push(map);
    }
    Ok(PartialAction::new(group, carrier, domains, maps)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{cyclic4_action, cyclic8_action};

    /// Four points, no motion outside the identity.
    fn inert_action(order: usize, points: usize) -> PartialAction {
        PartialAction::from_sparse(
            Group::cyclic(order).unwrap(),
            FiniteSet::numbered(points),
            &[],
        )
        .unwrap()
    }

    #[test]
    fn canonical_cyclic8_action_validates() {
        let report = cyclic8_action().validate();
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks.len(), 6);
    }

    #[test]
    fn canonical_cyclic4_action_validates() {
        assert!(cyclic4_action().validate().passed());
    }

    #[test]
    fn encoded_global_action_validates() {
        let b = GlobalAction::regular(&Group::cyclic(4).unwrap());
        let all: Vec<usize> = (0..4).collect();
        let a = restrict_global(&b, &all).unwrap();
        assert!(a.validate().passed());
        for g in a.group().elements() {
            assert_eq!(a.domain(g).len(), 4);
        }
    }

    #[test]
    fn redirected_map_entry_fails_composition_axiom() {
        // α_{g²}(x3) redirected from x4 to x3.
        let a = PartialAction::from_sparse(
            Group::cyclic(8).unwrap(),
            FiniteSet::numbered(4),
            &[
                (2, vec![0, 1, 3], vec![(0, 1), (1, 0), (2, 2)]),
                (4, vec![0, 1], vec![(0, 0), (1, 1)]),
                (6, vec![0, 1, 2], vec![(0, 1), (1, 0), (3, 2)]),
            ],
        )
        .unwrap();
        let report = a.validate();
        assert!(!report.passed());
        let axiom3 = report.checks.iter().find(|c| c.name == "axiom-iii-composition").unwrap();
        assert!(!axiom3.passed);
        assert!(!axiom3.witness.is_empty());

        // Independent oracle: exhaustive composition scan over the raw data,
        // bypassing PartialAction entirely.
        let n = 8;
        let dom: [&[usize]; 8] =
            [&[0, 1, 2, 3], &[], &[0, 1, 3], &[], &[0, 1], &[], &[0, 1, 2], &[]];
        let pairs: [&[(usize, usize)]; 8] = [
            &[(0, 0), (1, 1), (2, 2), (3, 3)],
            &[],
            &[(0, 1), (1, 0), (2, 2)],
            &[],
            &[(0, 0), (1, 1)],
            &[],
            &[(0, 1), (1, 0), (3, 2)],
            &[],
        ];
        let apply = |g: usize, x: usize| -> Option<usize> {
            pairs[g].iter().find(|&&(s, _)| s == x).map(|&(_, t)| t)
        };
        let mut violated = false;
        for g in 0..n {
            for h in 0..n {
                for x in 0..4usize {
                    let hinv = (n - h) % n;
                    let ghinv = (n - (g + h) % n) % n;
                    if dom[hinv].contains(&x) && dom[ghinv].contains(&x) {
                        let composed = apply(h, x).and_then(|y| apply(g, y));
                        if composed != apply((g + h) % n, x) {
                            violated = true;
                        }
                    }
                }
            }
        }
        assert!(violated, "oracle scan must find a composition violation");
    }

    #[test]
    fn duplicate_target_is_a_pre_axiom_failure() {
        let a = PartialAction::from_sparse(
            Group::cyclic(2).unwrap(),
            FiniteSet::numbered(2),
            &[(1, vec![0, 1], vec![(0, 1), (1, 1)])],
        )
        .unwrap();
        let report = a.validate();
        let bij = report.checks.iter().find(|c| c.name == "bijectivity").unwrap();
        assert!(!bij.passed);
        assert!(bij.witness.contains("twice"));
    }

    #[test]
    fn incomplete_identity_fails_axiom_i() {
        let a = PartialAction::from_sparse(
            Group::cyclic(3).unwrap(),
            FiniteSet::numbered(2),
            &[(0, vec![0], vec![(0, 0)])],
        )
        .unwrap();
        let report = a.validate();
        let ax1 = report.checks.iter().find(|c| c.name == "axiom-i-identity").unwrap();
        assert!(!ax1.passed);
    }

    #[test]
    fn structural_errors_are_rejected_at_construction() {
        let group = Group::cyclic(2).unwrap();
        let carrier = FiniteSet::numbered(2);
        assert!(matches!(
            PartialAction::new(group.clone(), carrier.clone(), vec![vec![0, 1]], vec![vec![], vec![]]),
            Err(ActionError::WrongArity { .. })
        ));
        assert!(matches!(
            PartialAction::new(
                group.clone(),
                carrier.clone(),
                vec![vec![0, 1], vec![5]],
                vec![vec![], vec![]]
            ),
            Err(ActionError::CarrierOutOfRange { index: 5, .. })
        ));
        assert!(matches!(
            PartialAction::new(
                group,
                carrier,
                vec![vec![0, 1], vec![1, 1]],
                vec![vec![], vec![]]
            ),
            Err(ActionError::DuplicateDomainEntry { .. })
        ));
    }

    #[test]
    fn restriction_of_translation_action() {
        let b = GlobalAction::regular(&Group::cyclic(4).unwrap());
        let a = restrict_global(&b, &[0, 1]).unwrap();
        assert!(a.validate().passed());
        assert_eq!(a.domain(0), &[0, 1]);
        assert_eq!(a.domain(1), &[1]);
        assert_eq!(a.domain(2), &[] as &[usize]);
        assert_eq!(a.domain(3), &[0]);
        assert_eq!(a.map_pairs(1), &[(0, 1)]);
        assert_eq!(a.map_pairs(3), &[(1, 0)]);
    }

    #[test]
    fn partial_orbits_of_the_canonical_actions() {
        let a8 = cyclic8_action();
        assert_eq!(a8.orbit(0).unwrap(), vec![0, 1]);
        assert_eq!(a8.orbit(2).unwrap(), vec![2, 3]);
        let a4 = cyclic4_action();
        assert_eq!(a4.orbit(2).unwrap(), vec![2, 3]);

        let inert = inert_action(5, 4);
        for x in 0..4 {
            assert_eq!(inert.orbit(x).unwrap(), vec![x]);
        }
    }

    #[test]
    fn orbit_membership_is_symmetric() {
        let a = cyclic8_action();
        for x in 0..4 {
            for &y in &a.orbit(x).unwrap() {
                assert_eq!(a.orbit(y).unwrap(), a.orbit(x).unwrap());
            }
        }
    }

    #[test]
    fn stabilizers_of_the_canonical_action() {
        let a = cyclic8_action();
        assert_eq!(a.stabilizer(0).unwrap().members(), &[0, 4]);
        assert_eq!(a.stabilizer(2).unwrap().members(), &[0]);
        let inert = inert_action(6, 3);
        assert_eq!(inert.stabilizer(1).unwrap().members(), &[0]);
    }

    #[test]
    fn upper_sets_of_the_canonical_actions() {
        let a8 = cyclic8_action();
        let (upper, complement) = a8.upper_sets(0).unwrap();
        assert_eq!(upper, vec![0, 2, 4, 6]);
        assert_eq!(complement.len(), 4);

        let (upper3, complement3) = a8.upper_sets(2).unwrap();
        assert_eq!(upper3, vec![0, 2]);
        assert_eq!(complement3, vec![1, 3, 4, 5, 6, 7]);

        // Global action: G^x is everything.
        let b = GlobalAction::regular(&Group::cyclic(4).unwrap());
        let full = restrict_global(&b, &[0, 1, 2, 3]).unwrap();
        for x in 0..4 {
            let (u, c) = full.upper_sets(x).unwrap();
            assert_eq!(u, vec![0, 1, 2, 3]);
            assert!(c.is_empty());
        }

        let a4 = cyclic4_action();
        let (u, c) = a4.upper_sets(2).unwrap();
        assert_eq!(u, vec![0, 1]);
        assert_eq!(c, vec![2, 3]);
    }

    #[test]
    fn transversals_are_least_orbit_representatives() {
        assert_eq!(cyclic8_action().transversal().unwrap(), vec![0, 2]);
        let empty = PartialAction::from_sparse(
            Group::cyclic(3).unwrap(),
            FiniteSet::numbered(0),
            &[],
        )
        .unwrap();
        assert_eq!(empty.transversal().unwrap(), Vec::<usize>::new());
        assert_eq!(inert_action(4, 4).transversal().unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn partial_g_subset_closure_condition() {
        let a = cyclic8_action();
        assert!(a.is_partial_g_subset(&[0, 1]).unwrap());
        assert!(a.is_partial_g_subset(&[]).unwrap());
        assert!(a.is_partial_g_subset(&[0, 1, 2, 3]).unwrap());
        // {x3} escapes via g = g^6: the step α_{g²}(x3) = x4 leaves it.
        assert_eq!(a.partial_g_subset_witness(&[2]).unwrap(), Some((6, 2)));
    }

    #[test]
    fn orbit_reports_carry_coset_spaces() {
        let a = cyclic8_action();
        let r1 = a.orbit_report(0).unwrap();
        assert_eq!(r1.orbit, vec![0, 1]);
        assert_eq!(r1.stabilizer.members(), &[0, 4]);
        assert_eq!(r1.upper, vec![0, 2, 4, 6]);
        assert_eq!(r1.upper_complement, vec![1, 3, 5, 7]);
        let members: Vec<&[usize]> = r1.cosets.iter().map(|c| c.members.as_slice()).collect();
        assert_eq!(members, vec![&[0, 4][..], &[2, 6][..]]);
        assert_eq!(r1.cosets[0].representative, 0);
        assert_eq!(r1.cosets[1].representative, 2);

        let r3 = a.orbit_report(2).unwrap();
        let members3: Vec<&[usize]> = r3.cosets.iter().map(|c| c.members.as_slice()).collect();
        assert_eq!(members3, vec![&[0][..], &[2][..]]);
        // Counting form of the orbit-stabilizer identity.
        assert_eq!(r3.orbit.len() * r3.stabilizer.order(), r3.upper.len());
    }

    #[test]
    fn empty_carrier_is_a_valid_partial_action() {
        let a = PartialAction::from_sparse(
            Group::cyclic(4).unwrap(),
            FiniteSet::numbered(0),
            &[],
        )
        .unwrap();
        assert!(a.validate().passed());
        assert!(a.orbit_partition().unwrap().is_empty());
    }

    #[test]
    fn sub_action_requires_a_closed_subset() {
        let a = cyclic8_action();
        let sub = a.sub_action(&[0, 1]).unwrap();
        assert!(sub.validate().passed());
        assert_eq!(sub.carrier().labels(), &["x1".to_string(), "x2".to_string()]);
        assert!(a.sub_action(&[2]).is_err());
    }
}
