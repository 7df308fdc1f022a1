//! Permutation patterns, the pigeonhole block search, compositions and the
//! small inequality helpers used by the semi-identity bounds.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::group::GroupTable;
use crate::interval;
use crate::poly::{Family, Word};

/// Exhaustive counting is capped at this `n`.
pub const MAX_EXHAUSTIVE_N: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("not a permutation of 1..{0}")]
    NotAPermutation(usize),
    #[error("d must be positive")]
    NonPositiveD,
    #[error("n = {n} exceeds the exhaustive cap {cap}")]
    OverCap { n: usize, cap: usize },
    #[error("sequence length {len} differs from |H|*d = {expected}")]
    SequenceLength { len: usize, expected: usize },
    #[error("sequence entry {0} is not a group element")]
    BadElement(usize),
    #[error("parts sum to {sum}, expected {n}")]
    PartsSum { sum: usize, n: usize },
    #[error("{parts} blocks exceed r + 1 = {limit}")]
    TooManyBlocks { parts: usize, limit: usize },
    #[error("r = {r} exceeds n = {n}")]
    RTooLarge { r: usize, n: usize },
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self, CombinatoricsError> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in &one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(CombinatoricsError::NotAPermutation(n));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// Standardizes distinct keys to the permutation of their relative order.
    pub fn from_relative_order<T: Ord>(keys: &[T]) -> Self {
        let mut idx: Vec<usize> = (0..keys.len()).collect();
        idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        let mut out = vec![0; keys.len()];
        for (rank, &i) in idx.iter().enumerate() {
            out[i] = rank + 1;
        }
        Permutation(out)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Advances to the next permutation in lexicographic order.
pub fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        xs.reverse();
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![Permutation(cur.clone())];
    while next_permutation(&mut cur) {
        out.push(Permutation(cur.clone()));
    }
    out
}

/// Length of the longest strictly decreasing subsequence (patience sorting).
pub fn longest_decreasing_subsequence(p: &Permutation) -> usize {
    lds(&p.0)
}

fn lds(xs: &[usize]) -> usize {
    // tails[k] = largest possible last value of a decreasing run of length k+1
    let mut tails: Vec<usize> = Vec::new();
    for &x in xs {
        let pos = tails.partition_point(|&t| t > x);
        if pos == tails.len() {
            tails.push(x);
        } else {
            tails[pos] = x;
        }
    }
    tails.len()
}

pub fn is_d_good(p: &Permutation, d: usize) -> Result<bool, CombinatoricsError> {
    if d == 0 {
        return Err(CombinatoricsError::NonPositiveD);
    }
    if d > p.len() {
        return Ok(true);
    }
    Ok(longest_decreasing_subsequence(p) < d)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodCount {
    pub n: usize,
    pub d: usize,
    pub good: u64,
    pub bound: BigUint,
}

/// Exhaustive count of d-good permutations in `S_n`, with the `(d-1)^(2n)` bound.
pub fn count_d_good(n: usize, d: usize) -> Result<GoodCount, CombinatoricsError> {
    if d == 0 {
        return Err(CombinatoricsError::NonPositiveD);
    }
    if n > MAX_EXHAUSTIVE_N {
        return Err(CombinatoricsError::OverCap { n, cap: MAX_EXHAUSTIVE_N });
    }
    let good: u64 = if d > n {
        (1..=n as u64).product()
    } else if n == 0 {
        1
    } else {
        (1..=n)
            .into_par_iter()
            .map(|first| {
                let mut rest: Vec<usize> = (1..=n).filter(|&v| v != first).collect();
                let mut buf = Vec::with_capacity(n);
                let mut count = 0u64;
                loop {
                    buf.clear();
                    buf.push(first);
                    buf.extend_from_slice(&rest);
                    if lds(&buf) < d {
                        count += 1;
                    }
                    if !next_permutation(&mut rest) {
                        break;
                    }
                }
                count
            })
            .sum()
    };
    let bound = BigUint::from(d - 1).pow(2 * n as u32);
    assert!(BigUint::from(good) <= bound, "d-good count exceeds (d-1)^(2n)");
    Ok(GoodCount { n, d, good, bound })
}

/// Finds `d` consecutive blocks of `seq` whose products are the identity.
///
/// Blocks are 1-based inclusive `(start, end)` pairs. Prefix products take at
/// most `|H|` values over `|H|*d + 1` prefixes, so some value repeats `d + 1`
/// times; the value whose `(d+1)`-th occurrence comes first is used.
pub fn trivial_blocks(h: &GroupTable, seq: &[usize], d: usize) -> Result<Vec<(usize, usize)>, CombinatoricsError> {
    if d == 0 {
        return Err(CombinatoricsError::NonPositiveD);
    }
    let expected = h.order() * d;
    if seq.len() != expected {
        return Err(CombinatoricsError::SequenceLength { len: seq.len(), expected });
    }
    if let Some(&bad) = seq.iter().find(|&&s| !h.contains(s)) {
        return Err(CombinatoricsError::BadElement(bad));
    }
    let mut occurrences: Vec<Vec<usize>> = vec![Vec::new(); h.order()];
    let mut prefix = h.identity();
    occurrences[prefix].push(0);
    let mut found = None;
    for (i, &s) in seq.iter().enumerate() {
        prefix = h.mul(prefix, s);
        occurrences[prefix].push(i + 1);
        if occurrences[prefix].len() == d + 1 {
            found = Some(prefix);
            break;
        }
    }
    let value = found.expect("pigeonhole guarantees d+1 equal prefix products");
    let pos = &occurrences[value];
    Ok(pos.windows(2).map(|w| (w[0] + 1, w[1])).collect())
}

pub fn compositions_count(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    BigUint::one() << (n - 1)
}

/// Ordered compositions of `n` into positive parts, by part count and then
/// lexicographically.
pub fn compositions(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut all: Vec<Vec<usize>> = Vec::new();
    if n > 0 {
        for mask in 0u64..(1u64 << (n - 1)) {
            let mut parts = Vec::new();
            let mut len = 1;
            for bit in 0..n - 1 {
                if mask >> bit & 1 == 1 {
                    parts.push(len);
                    len = 1;
                } else {
                    len += 1;
                }
            }
            parts.push(len);
            all.push(parts);
        }
    }
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all.into_iter()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn multinomial(n: usize, parts: &[usize]) -> Result<BigUint, CombinatoricsError> {
    let sum: usize = parts.iter().sum();
    if sum != n {
        return Err(CombinatoricsError::PartsSum { sum, n });
    }
    Ok(parts.iter().fold(factorial(n), |acc, &q| acc / factorial(q)))
}

/// Checks `multinomial(n - r; qs) <= (r + 1)^(n - r)` for at most `r + 1` blocks.
pub fn multinomial_bound_check(n: usize, r: usize, qs: &[usize]) -> Result<bool, CombinatoricsError> {
    if r > n {
        return Err(CombinatoricsError::RTooLarge { r, n });
    }
    if qs.len() > r + 1 {
        return Err(CombinatoricsError::TooManyBlocks { parts: qs.len(), limit: r + 1 });
    }
    let m = multinomial(n - r, qs)?;
    Ok(m <= BigUint::from(r + 1).pow((n - r) as u32))
}

/// Verifies `(n/e)^n < n!` using a rigorous lower bound on `e`.
pub fn stirling_check(n: usize) -> bool {
    if n == 0 {
        return false;
    }
    let nn = BigUint::from(n).pow(n as u32);
    let fact = factorial(n);
    let mut bits = 64u32;
    while bits <= 1 << 16 {
        let e = interval::e_interval(bits);
        // e >= lo / 2^bits, so n! e^n >= n! lo^n / 2^(bits n)
        let lo = e.lo_numerator_floor();
        if let Some(lo) = lo.to_biguint() {
            if nn.clone() << (bits as usize * n) < &fact * lo.pow(n as u32) {
                return true;
            }
        }
        bits *= 2;
    }
    false
}

/// Standardized permutation of the Y-variable indices of `word`, in order of
/// occurrence.
pub fn y_pattern(word: &Word) -> Permutation {
    let ys: Vec<(usize, u32)> = word
        .vars()
        .iter()
        .filter(|v| v.family == Family::Y)
        .map(|v| (v.degree, v.index))
        .collect();
    Permutation::from_relative_order(&ys)
}

pub fn d_y_good_monomial(word: &Word, d: usize) -> Result<bool, CombinatoricsError> {
    is_d_good(&y_pattern(word), d)
}

/// Catalan numbers by the convolution recurrence; an oracle independent of
/// any permutation enumeration.
pub fn catalan(n: usize) -> BigUint {
    let mut c = vec![BigUint::one()];
    for k in 1..=n {
        let next = (0..k).fold(BigUint::zero(), |acc, i| acc + &c[i] * &c[k - 1 - i]);
        c.push(next);
    }
    c[n].clone()
}
