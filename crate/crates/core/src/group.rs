//! Finite groups as multiplication tables, with the identity pinned at
//! index 0, plus subgroups and left cosets.
//!
//! All arithmetic is index-based; labels are display-only and never enter
//! any computation.

use std::collections::BTreeSet;

use crate::error::GroupError;

/// A finite group given by its full multiplication table.
///
/// Invariants, enforced eagerly at construction:
/// - the table is a Latin square (every row and column is a permutation),
/// - index 0 is a two-sided identity,
/// - every element has a two-sided inverse,
/// - the product is associative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl Group {
    /// The cyclic group of order `n`. Element `k` is labeled `g^k`
    /// (`1` for k = 0, `g` for k = 1) and `k·m = (k + m) mod n`.
    pub fn cyclic(n: usize) -> Result<Group, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidOrder);
        }
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Group::from_cayley_labeled(labels, table)
    }

    /// Builds and fully validates a group from an explicit Cayley table.
    /// `table[a][b]` is the index of the product `a·b`; the identity must
    /// sit at index 0.
    pub fn from_cayley(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Group, GroupError> {
        Group::from_cayley_labeled(labels, table)
    }

    fn from_cayley_labeled(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Group, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::InvalidOrder);
        }
        if labels.len() != n {
            return Err(GroupError::LabelCountMismatch { labels: labels.len(), order: n });
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(GroupError::DuplicateLabel { label: l.clone() });
            }
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(GroupError::NotSquare { row, len: r.len(), expected: n });
            }
            for (col, &v) in r.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::EntryOutOfRange { row, col, value: v, order: n });
                }
            }
        }
        // Identity layout first: a misplaced identity is a layout error,
        // not a Latin-square failure.
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return Err(GroupError::IdentityNotFirst { witness: a });
            }
        }
        for a in 0..n {
            let mut row_seen = vec![false; n];
            for b in 0..n {
                let v = table[a][b];
                if row_seen[v] {
                    return Err(GroupError::RowRepeats { row: a, value: v });
                }
                row_seen[v] = true;
            }
        }
        for b in 0..n {
            let mut col_seen = vec![false; n];
            for a in 0..n {
                let v = table[a][b];
                if col_seen[v] {
                    return Err(GroupError::ColRepeats { col: b, value: v });
                }
                col_seen[v] = true;
            }
        }
        let mut inv = vec![0usize; n];
        for a in 0..n {
            let b = (0..n).find(|&b| table[a][b] == 0).expect("row is a permutation");
            if table[b][a] != 0 {
                return Err(GroupError::NoInverse { element: a });
            }
            inv[a] = b;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(Group { labels, table, inv })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    /// Index of the identity element. Always 0 by construction.
    pub fn identity(&self) -> usize {
        0
    }

    /// Product `a·b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// All element indices in table order.
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Looks an element up by its display label.
    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The sorted left coset `a·H`.
    pub fn left_coset(&self, a: usize, sub: &Subgroup) -> Vec<usize> {
        let mut coset: Vec<usize> = sub.members().iter().map(|&s| self.mul(a, s)).collect();
        coset.sort_unstable();
        coset
    }

    /// True when the two groups have identical multiplication tables
    /// (labels may differ).
    pub fn same_table(&self, other: &Group) -> bool {
        self.table == other.table
    }
}

/// A left coset, with its least member as designated representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    pub representative: usize,
    /// Sorted member indices.
    pub members: Vec<usize>,
}

impl Coset {
    /// Wraps a sorted, nonempty member list.
    pub fn new(members: Vec<usize>) -> Coset {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Coset { representative: members[0], members }
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }
}

/// A subgroup, stored as the sorted set of its member indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<usize>,
    parent_order: usize,
}

impl Subgroup {
    /// The smallest subgroup of `group` containing `seed`.
    pub fn closure(group: &Group, seed: &[usize]) -> Result<Subgroup, GroupError> {
        for &s in seed {
            if s >= group.order() {
                return Err(GroupError::OutOfRange { index: s, order: group.order() });
            }
        }
        let mut members: BTreeSet<usize> = seed.iter().copied().collect();
        members.insert(group.identity());
        // Product fixpoint; in a finite group this also picks up inverses.
        loop {
            let mut added = Vec::new();
            for &a in &members {
                for &b in &members {
                    let p = group.mul(a, b);
                    if !members.contains(&p) {
                        added.push(p);
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            members.extend(added);
        }
        Subgroup::from_members(group, members.into_iter().collect())
    }

    /// Wraps an explicit member set, verifying it is in fact a subgroup.
    pub fn from_members(group: &Group, mut members: Vec<usize>) -> Result<Subgroup, GroupError> {
        members.sort_unstable();
        members.dedup();
        for &s in &members {
            if s >= group.order() {
                return Err(GroupError::OutOfRange { index: s, order: group.order() });
            }
        }
        if !members.contains(&group.identity()) {
            return Err(GroupError::NotASubgroup { witness: group.identity() });
        }
        for &a in &members {
            if members.binary_search(&group.inv(a)).is_err() {
                return Err(GroupError::NotASubgroup { witness: a });
            }
            for &b in &members {
                if members.binary_search(&group.mul(a, b)).is_err() {
                    return Err(GroupError::NotASubgroup { witness: group.mul(a, b) });
                }
            }
        }
        debug_assert_eq!(group.order() % members.len(), 0, "Lagrange divisibility");
        Ok(Subgroup { members, parent_order: group.order() })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    /// Index `[G : H]` of the subgroup in its parent.
    pub fn index_in_parent(&self) -> usize {
        self.parent_order / self.members.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_eight_matches_modular_arithmetic() {
        let g = Group::cyclic(8).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.label(0), "1");
        assert_eq!(g.label(1), "g");
        assert_eq!(g.label(7), "g^7");
        assert_eq!(g.inv(2), 6);
        // Hand-built table agrees elementwise.
        let labels: Vec<String> = g.labels().to_vec();
        let table: Vec<Vec<usize>> =
            (0..8).map(|a| (0..8).map(|b| (a + b) % 8).collect()).collect();
        let by_hand = Group::from_cayley(labels, table).unwrap();
        assert_eq!(g, by_hand);
    }

    #[test]
    fn cyclic_edge_orders() {
        let trivial = Group::cyclic(1).unwrap();
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.mul(0, 0), 0);

        let z4 = Group::cyclic(4).unwrap();
        assert_eq!(z4.inv(1), 3);
        assert_eq!(z4.mul(3, 3), 2);

        assert_eq!(Group::cyclic(0), Err(GroupError::InvalidOrder));
    }

    #[test]
    fn klein_four_group_is_valid() {
        // XOR on {0,1,2,3}.
        let labels = vec!["1".into(), "a".into(), "b".into(), "c".into()];
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        let g = Group::from_cayley(labels, table).unwrap();
        assert_eq!(g.order(), 4);
        for a in g.elements() {
            assert_eq!(g.inv(a), a);
        }
    }

    #[test]
    fn repeated_row_entry_is_rejected() {
        let labels = vec!["1".into(), "a".into()];
        let err = Group::from_cayley(labels, vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, GroupError::RowRepeats { row: 1, value: 1 });
    }

    #[test]
    fn misplaced_identity_is_a_layout_error() {
        // Z2 with the identity at index 1.
        let labels = vec!["a".into(), "1".into()];
        let table = vec![vec![1, 0], vec![0, 1]];
        let err = Group::from_cayley(labels, table).unwrap_err();
        assert!(matches!(err, GroupError::IdentityNotFirst { .. }));
    }

    #[test]
    fn associativity_witness_is_reported() {
        // A Latin square with identity at 0 and two-sided inverses that is
        // not a group: every non-identity element is an involution, which no
        // group of order 5 allows.
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let labels = (0..5).map(|k| format!("e{k}")).collect();
        let err = Group::from_cayley(labels, table).unwrap_err();
        assert!(matches!(err, GroupError::NotAssociative { .. }), "got {err:?}");
    }

    #[test]
    fn subgroup_closure_of_powers() {
        let g = Group::cyclic(8).unwrap();
        assert_eq!(Subgroup::closure(&g, &[4]).unwrap().members(), &[0, 4]);
        assert_eq!(Subgroup::closure(&g, &[]).unwrap().members(), &[0]);
        assert_eq!(Subgroup::closure(&g, &[2]).unwrap().members(), &[0, 2, 4, 6]);
    }

    #[test]
    fn subgroup_closure_out_of_range() {
        let g = Group::cyclic(4).unwrap();
        assert_eq!(
            Subgroup::closure(&g, &[7]),
            Err(GroupError::OutOfRange { index: 7, order: 4 })
        );
    }

    #[test]
    fn left_cosets_partition_the_group() {
        let g = Group::cyclic(8).unwrap();
        let h = Subgroup::closure(&g, &[4]).unwrap();
        assert_eq!(g.left_coset(2, &h), vec![2, 6]);
        assert_eq!(g.left_coset(6, &h), vec![2, 6]);
        let mut all: Vec<usize> = Vec::new();
        let mut cosets: Vec<Vec<usize>> = g.elements().map(|a| g.left_coset(a, &h)).collect();
        cosets.sort();
        cosets.dedup();
        assert_eq!(cosets.len(), h.index_in_parent());
        for c in &cosets {
            all.extend(c);
        }
        all.sort_unstable();
        assert_eq!(all, (0..8).collect::<Vec<_>>());
    }
}
