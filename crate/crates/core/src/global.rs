//! Total (global) actions of a finite group: one permutation β_g of the
//! carrier per group element, with β_1 = id and β_g ∘ β_h = β_{gh}.

use crate::action::FiniteSet;
use crate::error::{ActionError, Error};
use crate::group::{Group, Subgroup};
use crate::report::ValidationReport;

/// A global action (T, β). `perms[g][t]` is β_g(t).
///
/// [`GlobalAction::from_parts`] admits structurally well-formed but
/// possibly lawless data so that fixtures can be diagnosed through
/// [`GlobalAction::validate`]; [`GlobalAction::new`] insists on a valid
/// action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalAction {
    group: Group,
    carrier: FiniteSet,
    perms: Vec<Vec<usize>>,
}

impl GlobalAction {
    /// Checks arity and index ranges only.
    pub fn from_parts(
        group: Group,
        carrier: FiniteSet,
        perms: Vec<Vec<usize>>,
    ) -> Result<GlobalAction, ActionError> {
        if perms.len() != group.order() {
            return Err(ActionError::WrongArity { expected: group.order(), got: perms.len() });
        }
        let size = carrier.size();
        for p in &perms {
            if p.len() != size {
                return Err(ActionError::WrongArity { expected: size, got: p.len() });
            }
            if let Some(&v) = p.iter().find(|&&v| v >= size) {
                return Err(ActionError::CarrierOutOfRange { index: v, size });
            }
        }
        Ok(GlobalAction { group, carrier, perms })
    }

    /// Builds a global action and rejects anything that fails the action
    /// laws.
    pub fn new(
        group: Group,
        carrier: FiniteSet,
        perms: Vec<Vec<usize>>,
    ) -> Result<GlobalAction, Error> {
        let action = GlobalAction::from_parts(group, carrier, perms)?;
        let report = action.validate();
        if let Some(check) = report.first_failure() {
            return Err(Error::InvalidGlobalAction {
                detail: format!("{}: {}", check.name, check.witness),
            });
        }
        Ok(action)
    }

    /// The action laws, one report entry each: every β_g is a bijection,
    /// β_1 = id, β_g ∘ β_h = β_{gh}, and β_{g⁻¹} = (β_g)⁻¹.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        report.record("global-bijectivity", self.check_bijectivity());
        report.record("global-identity", self.check_identity());
        report.record("global-homomorphism", self.check_homomorphism());
        report.record("global-inverses", self.check_inverses());
        report
    }

    fn check_bijectivity(&self) -> Option<String> {
        for g in self.group.elements() {
            let mut seen = vec![false; self.carrier.size()];
            for &v in &self.perms[g] {
                if seen[v] {
                    return Some(format!(
                        "β_{} hits {} twice",
                        self.group.label(g),
                        self.carrier.label(v)
                    ));
                }
                seen[v] = true;
            }
        }
        None
    }

    fn check_identity(&self) -> Option<String> {
        let e = self.group.identity();
        (0..self.carrier.size()).find(|&t| self.perms[e][t] != t).map(|t| {
            format!("β_1 moves {} to {}", self.carrier.label(t), self.carrier.label(self.perms[e][t]))
        })
    }

    fn check_homomorphism(&self) -> Option<String> {
        for g in self.group.elements() {
            for h in self.group.elements() {
                let gh = self.group.mul(g, h);
                for t in 0..self.carrier.size() {
                    let composed = self.perms[g][self.perms[h][t]];
                    if composed != self.perms[gh][t] {
                        return Some(format!(
                            "g = {}, h = {}, t = {}: β_g(β_h(t)) = {} but β_gh(t) = {}",
                            self.group.label(g),
                            self.group.label(h),
                            self.carrier.label(t),
                            self.carrier.label(composed),
                            self.carrier.label(self.perms[gh][t])
                        ));
                    }
                }
            }
        }
        None
    }

    fn check_inverses(&self) -> Option<String> {
        for g in self.group.elements() {
            let ginv = self.group.inv(g);
            for t in 0..self.carrier.size() {
                if self.perms[ginv][self.perms[g][t]] != t {
                    return Some(format!(
                        "β_{} is not inverse to β_{} at {}",
                        self.group.label(ginv),
                        self.group.label(g),
                        self.carrier.label(t)
                    ));
                }
            }
        }
        None
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn carrier(&self) -> &FiniteSet {
        &self.carrier
    }

    pub fn perm(&self, g: usize) -> &[usize] {
        &self.perms[g]
    }

    /// β_g(t).
    pub fn apply(&self, g: usize, t: usize) -> usize {
        self.perms[g][t]
    }

    /// β_g⁻¹(t), computed as β_{g⁻¹}(t).
    pub fn preimage(&self, g: usize, t: usize) -> usize {
        self.perms[self.group.inv(g)][t]
    }

    /// The sorted orbit of `t`.
    pub fn orbit_of(&self, t: usize) -> Vec<usize> {
        let mut seen = vec![false; self.carrier.size()];
        let mut frontier = vec![t];
        seen[t] = true;
        while let Some(u) = frontier.pop() {
            for g in self.group.elements() {
                let v = self.perms[g][u];
                if !seen[v] {
                    seen[v] = true;
                    frontier.push(v);
                }
            }
        }
        (0..self.carrier.size()).filter(|&u| seen[u]).collect()
    }

    /// All orbits, each sorted, ordered by least element. Partitions the
    /// carrier whenever the action is valid.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.carrier.size()];
        let mut orbits = Vec::new();
        for t in 0..self.carrier.size() {
            if !assigned[t] {
                let orbit = self.orbit_of(t);
                for &u in &orbit {
                    assigned[u] = true;
                }
                orbits.push(orbit);
            }
        }
        orbits
    }

    /// The sorted fixed-point set of β_g.
    pub fn fixed_points(&self, g: usize) -> Vec<usize> {
        (0..self.carrier.size()).filter(|&t| self.perms[g][t] == t).collect()
    }

    /// The stabilizer of `t` under the whole group.
    pub fn stabilizer_of(&self, t: usize) -> Result<Subgroup, Error> {
        let members: Vec<usize> =
            self.group.elements().filter(|&g| self.perms[g][t] == t).collect();
        Subgroup::from_members(&self.group, members).map_err(Error::from)
    }

    /// The regular action of a group on itself by left translation.
    pub fn regular(group: &Group) -> GlobalAction {
        let labels = group.labels().to_vec();
        let carrier = FiniteSet::new(labels).expect("group labels are distinct");
        let perms = group
            .elements()
            .map(|g| group.elements().map(|t| group.mul(g, t)).collect())
            .collect();
        GlobalAction { group: group.clone(), carrier, perms }
    }

    /// The action fixing every one of `n` points.
    pub fn trivial(group: &Group, n: usize) -> GlobalAction {
        let carrier = FiniteSet::numbered(n);
        let perms = group.elements().map(|_| (0..n).collect()).collect();
        GlobalAction { group: group.clone(), carrier, perms }
    }

    /// Left translation on the cosets of a subgroup: β_g(aH) = (ga)H.
    /// Cosets are ordered by least member and labeled by representative.
    pub fn coset_action(group: &Group, sub: &Subgroup) -> GlobalAction {
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        let mut coset_of = vec![usize::MAX; group.order()];
        for a in group.elements() {
            if coset_of[a] == usize::MAX {
                let members = group.left_coset(a, sub);
                for &m in &members {
                    coset_of[m] = cosets.len();
                }
                cosets.push(members);
            }
        }
        let labels: Vec<String> =
            cosets.iter().map(|c| format!("[{}]", group.label(c[0]))).collect();
        let carrier = FiniteSet::new(labels).expect("coset representatives are distinct");
        let perms: Vec<Vec<usize>> = group
            .elements()
            .map(|g| cosets.iter().map(|c| coset_of[group.mul(g, c[0])]).collect())
            .collect();
        GlobalAction { group: group.clone(), carrier, perms }
    }
}
