//! Finite groups given extensionally by a Cayley table.

use std::collections::HashMap;

use thiserror::Error;

/// Default cap on the group order; keeps the cubic axiom checks cheap.
pub const DEFAULT_MAX_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group must have at least one element")]
    Empty,
    #[error("group order {order} exceeds the configured cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("row {row} has length {len}, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("table entry ({row},{col}) = {value} is not an element index")]
    BadEntry { row: usize, col: usize, value: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: String, b: String, c: String },
    #[error("no inverse for {0}")]
    NoInverse(String),
    #[error("unknown group element label {0:?}")]
    UnknownLabel(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupTable {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    elt_order: Vec<usize>,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn elt_order(&self, a: usize) -> usize {
        self.elt_order[a]
    }

    pub fn elt_orders(&self) -> &[usize] {
        &self.elt_order
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn contains(&self, a: usize) -> bool {
        a < self.order()
    }

    pub fn index_of(&self, label: &str) -> Result<usize, GroupError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| GroupError::UnknownLabel(label.to_string()))
    }

    /// Ordered product of a sequence of elements.
    pub fn product<I: IntoIterator<Item = usize>>(&self, elems: I) -> usize {
        elems.into_iter().fold(self.identity, |acc, g| self.mul(acc, g))
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn is_abelian(&self) -> bool {
        let k = self.order();
        (0..k).all(|a| (0..k).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// The cyclic group `Z_n`, element `i` labeled `"i"`.
pub fn cyclic_group(n: usize) -> GroupTable {
    assert!(n >= 1, "cyclic group needs n >= 1");
    let labels = (0..n).map(|i| i.to_string()).collect();
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    group_from_table_capped(labels, table, usize::MAX).expect("Z_n satisfies the axioms")
}

/// The symmetric group on `n` points, elements in lexicographic order of their
/// one-line notation and labeled `g0, g1, ...` (`g0` is the identity).
/// Multiplication is composition `(a*b)(i) = a(b(i))`.
pub fn symmetric_group(n: usize) -> GroupTable {
    assert!((1..=5).contains(&n), "symmetric_group supports 1 <= n <= 5");
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        perms.push(cur.clone());
        if !crate::combinatorics::next_permutation(&mut cur) {
            break;
        }
    }
    let index: HashMap<Vec<usize>, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let table = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    let c: Vec<usize> = (0..n).map(|i| a[b[i]]).collect();
                    index[&c]
                })
                .collect()
        })
        .collect();
    let labels = (0..perms.len()).map(|i| format!("g{i}")).collect();
    group_from_table_capped(labels, table, usize::MAX).expect("S_n satisfies the axioms")
}

pub fn group_from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<GroupTable, GroupError> {
    group_from_table_capped(labels, table, DEFAULT_MAX_ORDER)
}

pub fn group_from_table_capped(
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    cap: usize,
) -> Result<GroupTable, GroupError> {
    let k = table.len();
    if k == 0 {
        return Err(GroupError::Empty);
    }
    if k > cap {
        return Err(GroupError::TooLarge { order: k, cap });
    }
    if labels.len() != k {
        return Err(GroupError::LabelCount { expected: k, got: labels.len() });
    }
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(GroupError::DuplicateLabel(l.clone()));
        }
    }
    for (row, r) in table.iter().enumerate() {
        if r.len() != k {
            return Err(GroupError::NotSquare { row, len: r.len(), order: k });
        }
        if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= k) {
            return Err(GroupError::BadEntry { row, col, value });
        }
    }
    let identity = (0..k)
        .find(|&e| (0..k).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or(GroupError::NoIdentity)?;
    for a in 0..k {
        for b in 0..k {
            let ab = table[a][b];
            for c in 0..k {
                if table[ab][c] != table[a][table[b][c]] {
                    return Err(GroupError::NotAssociative {
                        a: labels[a].clone(),
                        b: labels[b].clone(),
                        c: labels[c].clone(),
                    });
                }
            }
        }
    }
    let mut inverse = Vec::with_capacity(k);
    for a in 0..k {
        let inv = (0..k)
            .find(|&b| table[a][b] == identity && table[b][a] == identity)
            .ok_or_else(|| GroupError::NoInverse(labels[a].clone()))?;
        inverse.push(inv);
    }
    let elt_order = (0..k)
        .map(|a| {
            let mut t = 1;
            let mut x = a;
            while x != identity {
                x = table[x][a];
                t += 1;
            }
            t
        })
        .collect();
    Ok(GroupTable { labels, table, identity, inverse, elt_order })
}
