//! Orbit-stabilizer machinery for partial actions: coset spaces G^x/G_x,
//! the induced partial action on them, partial G-maps, the orbit-stabilizer
//! isomorphism, predicted global orbit sizes, and Burnside orbit counting.
//!
//! Every law is checked by computing both of its sides independently and
//! comparing; a mismatch surfaces as a consistency error with a witness
//! instead of being trusted silently.

use crate::action::{restrict_global, FiniteSet, PartialAction};
use crate::error::Error;
use crate::global::GlobalAction;
use crate::group::{Coset, Subgroup};

/// The coset space G^x/G_x = {g⁻¹G_x | x ∈ D_g}, ordered by least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSpace {
    pub base: usize,
    pub stabilizer: Subgroup,
    pub cosets: Vec<Coset>,
}

impl CosetSpace {
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Position of the coset containing `a`, if any.
    pub fn position_of(&self, a: usize) -> Option<usize> {
        self.cosets.iter().position(|c| c.contains(a))
    }
}

/// The cosets g⁻¹G_x over all g with x ∈ D_g. Their number is always
/// |G^x| / |G_x|.
pub fn coset_space(action: &PartialAction, x: usize) -> Result<CosetSpace, Error> {
    let report = action.orbit_report(x)?;
    Ok(CosetSpace { base: x, stabilizer: report.stabilizer, cosets: report.cosets })
}

/// The coset space together with the partial action induced on it.
#[derive(Debug, Clone)]
pub struct InducedCosetAction {
    pub space: CosetSpace,
    /// The induced action; its carrier is `space.cosets` in order.
    pub action: PartialAction,
}

/// Builds the partial action ᾱ on G^x/G_x with ᾱ_h(g⁻¹G_x) = hg⁻¹G_x by
/// two independent routes and insists they agree:
///
/// - the closed form D̄_{h⁻¹} = {g⁻¹G_x | x ∈ D_g ∩ D_{gh⁻¹}}, and
/// - the restriction of the full coset translation action of G on G/G_x
///   to the subset G^x/G_x.
///
/// Disagreement, a closure escape (targets of ᾱ_h must land in D̄_h), or a
/// failed axiom check on the result is a consistency error.
pub fn induced_coset_action(action: &PartialAction, x: usize) -> Result<InducedCosetAction, Error> {
    let space = coset_space(action, x)?;
    let group = action.group().clone();

    // Route one: restrict the global translation action on all of G/G_x.
    let full = GlobalAction::coset_action(&group, &space.stabilizer);
    let positions: Vec<usize> = space
        .cosets
        .iter()
        .map(|c| {
            full.carrier()
                .index_of(&format!("[{}]", group.label(c.representative)))
                .expect("every coset of G_x appears in G/G_x")
        })
        .collect();
    let restricted = restrict_global(&full, &positions)?;

    // Route two: the closed form, built directly from the domains of the
    // original action.
    let mut domains: Vec<Vec<usize>> = Vec::with_capacity(group.order());
    let mut maps: Vec<Vec<(usize, usize)>> = Vec::with_capacity(group.order());
    for k in group.elements() {
        // D̄_k = {g⁻¹G_x | x ∈ D_g ∩ D_{gk}}.
        let mut dom: Vec<usize> = Vec::new();
        for g in group.elements() {
            if action.in_domain(g, x) && action.in_domain(group.mul(g, k), x) {
                let c = space
                    .position_of(group.inv(g))
                    .ok_or_else(|| Error::consistency("coset-membership", witness(action, k, g)))?;
                if !dom.contains(&c) {
                    dom.push(c);
                }
            }
        }
        dom.sort_unstable();
        domains.push(dom);
        maps.push(Vec::new());
    }
    for k in group.elements() {
        let kinv = group.inv(k);
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for &c in &domains[kinv] {
            // ᾱ_k(g⁻¹G_x) = kg⁻¹G_x; translate via the representative.
            let rep = space.cosets[c].representative;
            let target = space.position_of(group.mul(k, rep)).ok_or_else(|| {
                Error::consistency(
                    "induced-action-closure",
                    format!(
                        "h = {}, coset [{}] maps outside G^x/G_x",
                        group.label(k),
                        group.label(rep)
                    ),
                )
            })?;
            if !domains[k].contains(&target) {
                return Err(Error::consistency(
                    "induced-action-closure",
                    format!(
                        "h = {}, coset [{}]: image not in D̄_h",
                        group.label(k),
                        group.label(rep)
                    ),
                ));
            }
            pairs.push((c, target));
        }
        maps[k] = pairs;
    }
    let labels: Vec<String> =
        space.cosets.iter().map(|c| format!("[{}]", group.label(c.representative))).collect();
    let carrier = FiniteSet::new(labels).map_err(Error::from)?;
    let closed_form = PartialAction::new(group.clone(), carrier, domains, maps)?;

    // The two routes must agree exactly, domains and maps alike.
    for k in group.elements() {
        if closed_form.domain(k) != restricted.domain(k) {
            let c = first_diff(closed_form.domain(k), restricted.domain(k));
            return Err(Error::consistency(
                "induced-domain-closed-form",
                format!(
                    "h⁻¹ = {}: closed form differs from restriction at coset #{c}",
                    group.label(k)
                ),
            ));
        }
        if closed_form.map_pairs(k) != restricted.map_pairs(k) {
            return Err(Error::consistency(
                "induced-map-closed-form",
                format!("h = {}: closed form map differs from restriction", group.label(k)),
            ));
        }
    }
    let report = closed_form.validate();
    if let Some(check) = report.first_failure() {
        return Err(Error::consistency(
            "induced-action-axioms",
            format!("{}: {}", check.name, check.witness),
        ));
    }
    Ok(InducedCosetAction { space, action: closed_form })
}

fn witness(action: &PartialAction, h: usize, g: usize) -> String {
    format!("h = {}, g = {}", action.group().label(h), action.group().label(g))
}

fn first_diff(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b.iter()).position(|(x, y)| x != y).unwrap_or_else(|| a.len().min(b.len()))
}

/// A function between the carriers of two partial actions of one group.
#[derive(Debug, Clone)]
pub struct PartialGMap {
    pub source: PartialAction,
    pub target: PartialAction,
    /// Total on the source carrier: mapping[x] is Φ(x).
    pub mapping: Vec<usize>,
}

/// Outcome of [`PartialGMap::check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GMapReport {
    /// Does Φ preserve domains and intertwine the maps?
    pub equivariant: bool,
    /// First (g, x) violating either condition.
    pub witness: Option<(usize, usize)>,
    pub injective: bool,
    pub surjective: bool,
}

impl GMapReport {
    /// A bijective partial G-map is a partial G-isomorphism.
    pub fn is_isomorphism(&self) -> bool {
        self.equivariant && self.injective && self.surjective
    }
}

impl PartialGMap {
    pub fn new(
        source: PartialAction,
        target: PartialAction,
        mapping: Vec<usize>,
    ) -> Result<PartialGMap, Error> {
        if !source.group().same_table(target.group()) {
            return Err(Error::Argument("source and target have different groups".into()));
        }
        if mapping.len() != source.carrier().size() {
            return Err(Error::Argument(format!(
                "mapping has {} entries for a carrier of size {}",
                mapping.len(),
                source.carrier().size()
            )));
        }
        if let Some(&v) = mapping.iter().find(|&&v| v >= target.carrier().size()) {
            return Err(Error::Argument(format!("mapping value {v} out of range")));
        }
        Ok(PartialGMap { source, target, mapping })
    }

    /// Scans every (g, x): x ∈ D_{g⁻¹} must give Φ(x) ∈ D'_{g⁻¹} and
    /// Φ(α_g(x)) = α'_g(Φ(x)). Also reports whether Φ is a bijection.
    pub fn check(&self) -> GMapReport {
        let group = self.source.group();
        let mut witness = None;
        'scan: for g in group.elements() {
            let ginv = group.inv(g);
            for &x in self.source.domain(ginv) {
                let fx = self.mapping[x];
                if !self.target.in_domain(ginv, fx) {
                    witness = Some((g, x));
                    break 'scan;
                }
                let lhs = self.source.apply(g, x).map(|y| self.mapping[y]);
                let rhs = self.target.apply(g, fx);
                if lhs.is_none() || rhs.is_none() || lhs != rhs {
                    witness = Some((g, x));
                    break 'scan;
                }
            }
        }
        let mut hit = vec![false; self.target.carrier().size()];
        let mut injective = true;
        for &v in &self.mapping {
            if hit[v] {
                injective = false;
            }
            hit[v] = true;
        }
        let surjective = hit.iter().all(|&h| h);
        GMapReport { equivariant: witness.is_none(), witness, injective, surjective }
    }
}

/// The orbit-stabilizer isomorphism φ : O_x → G^x/G_x defined by
/// φ(α_{g⁻¹}(x)) = g⁻¹G_x. Well-definedness, equivariance and bijectivity
/// are all verified; the returned map is a checked partial G-isomorphism
/// from the orbit sub-action onto the induced coset action, so
/// |O_x| = |G^x| / |G_x|.
pub fn orbit_stabilizer_iso(action: &PartialAction, x: usize) -> Result<PartialGMap, Error> {
    let group = action.group();
    let orbit = action.orbit(x)?;
    let source = action.sub_action(&orbit)?;
    let induced = induced_coset_action(action, x)?;
    let mut mapping: Vec<Option<usize>> = vec![None; orbit.len()];
    for g in group.elements() {
        if !action.in_domain(g, x) {
            continue;
        }
        let ginv = group.inv(g);
        let y = action.apply(ginv, x).ok_or_else(|| {
            Error::consistency("iso-step-defined", format!("α_{} undefined", group.label(ginv)))
        })?;
        let i = orbit.binary_search(&y).map_err(|_| {
            Error::consistency("iso-orbit-membership", format!("g = {}", group.label(g)))
        })?;
        let coset = induced.space.position_of(ginv).ok_or_else(|| {
            Error::consistency("iso-coset-membership", format!("g = {}", group.label(g)))
        })?;
        match mapping[i] {
            None => mapping[i] = Some(coset),
            Some(prev) if prev == coset => {}
            Some(prev) => {
                return Err(Error::consistency(
                    "iso-well-defined",
                    format!(
                        "two representations of orbit point {} land in cosets #{prev} and #{coset}",
                        action.carrier().label(y)
                    ),
                ));
            }
        }
    }
    let mapping: Vec<usize> = mapping
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::consistency("iso-total", format!("x = {x}")))?;
    let iso = PartialGMap::new(source, induced.action, mapping)?;
    let report = iso.check();
    if !report.is_isomorphism() {
        return Err(Error::consistency(
            "orbit-stabilizer-iso",
            format!("witness {:?}, report {report:?}", report.witness),
        ));
    }
    Ok(iso)
}

/// Predicted size of the orbit of x in any globalization:
/// |O_x| = |O_x^α| + |Ḡ^x| / |G_x|. The division is exact whenever the
/// action is valid.
pub fn global_orbit_size(action: &PartialAction, x: usize) -> Result<usize, Error> {
    let report = action.orbit_report(x)?;
    let stab = report.stabilizer.order();
    if report.upper_complement.len() % stab != 0 {
        return Err(Error::consistency(
            "orbit-size-divisibility",
            format!(
                "x = {}: |G_x| = {stab} does not divide |Ḡ^x| = {}",
                action.carrier().label(x),
                report.upper_complement.len()
            ),
        ));
    }
    Ok(report.orbit.len() + report.upper_complement.len() / stab)
}

/// Number of orbits of a global action by the fixed-point average:
/// k = (Σ_g |Fix β_g|) / |G|.
pub fn burnside_orbit_count(global: &GlobalAction) -> Result<usize, Error> {
    let total: usize =
        global.group().elements().map(|g| global.fixed_points(g).len()).sum();
    let order = global.group().order();
    if !total.is_multiple_of(order) {
        return Err(Error::InvalidGlobalAction {
            detail: format!("fixed-point sum {total} is not divisible by |G| = {order}"),
        });
    }
    Ok(total / order)
}
