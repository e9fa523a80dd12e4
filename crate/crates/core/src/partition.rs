//! Young diagrams and their combinatorial statistics.
//!
//! Partitions of `n` are always listed in reverse lexicographic order:
//! `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::{factorial, ratio, Rat};

/// A Young diagram stored as its weakly decreasing row lengths.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.last() == Some(&0) {
            return Err(Error::Invalid(format!("parts {parts:?} contain a zero")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length `λ_i` with 1-based `i`; zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Boxes as 1-based `(row, column)` pairs, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// Contents `j - i` of all boxes, listed row by row.
    pub fn contents(&self) -> Vec<i64> {
        self.boxes().map(|(i, j)| j as i64 - i as i64).collect()
    }

    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.transpose();
        self.boxes()
            .map(|(i, j)| (self.parts[i - 1] - j) + (conj.parts[j - 1] - i) + 1)
            .collect()
    }

    /// Number of distinct part sizes.
    pub fn distinct_parts(&self) -> usize {
        let mut d = 0;
        let mut prev = None;
        for &p in &self.parts {
            if prev != Some(p) {
                d += 1;
                prev = Some(p);
            }
        }
        d
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Dominance order on partitions of the same size: `self ⊵ other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Multiplicities `m_i` of each part size `i`, as `(i, m_i)` pairs.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// All diagrams obtained by adding one box, top row first.
    ///
    /// The order matches the inner corners `x_1 > x_2 > ... > x_d` of the
    /// Kerov coordinates.
    pub fn addable_boxes(&self) -> Vec<Partition> {
        let mut out = Vec::with_capacity(self.distinct_parts() + 1);
        for i in 0..=self.len() {
            if i == 0 || self.row(i + 1) < self.row(i) {
                let mut parts = self.parts.clone();
                if i < parts.len() {
                    parts[i] += 1;
                } else {
                    parts.push(1);
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// All diagrams obtained by removing one box, top row first.
    pub fn removable_boxes(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.row(i + 2) < self.parts[i] {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Concatenates the parts of two partitions and re-sorts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Canonical order: by size, then reverse lexicographic.
    pub fn canonical_cmp(&self, other: &Partition) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `3,3,1`; the empty string is the empty diagram.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                match tok.parse::<usize>() {
                    Ok(0) | Err(_) => Err(Error::parse(tok, "expected a positive integer part")),
                    Ok(v) => Ok(v),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::parse(t, e.to_string()))
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

/// Shorthand for tests and literals. Panics on invalid input.
#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),+]).expect("valid partition")
    };
}

/// All partitions of `n` in reverse lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            prefix.push(k);
            go(rest - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of every size `0..=max`, in canonical order.
pub fn partitions_up_to(max: usize) -> Vec<Partition> {
    (0..=max).flat_map(enumerate_partitions).collect()
}

/// Modified Frobenius coordinates `a_i = λ_i - i + 1/2`, `b_i = λ'_i - i + 1/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusCoords {
    pub a: Vec<Rat>,
    pub b: Vec<Rat>,
}

pub fn frobenius_modified(lambda: &Partition) -> FrobeniusCoords {
    let conj = lambda.transpose();
    let d = (1..=lambda.len())
        .take_while(|&i| lambda.row(i) >= i)
        .count();
    let half = |len: usize, i: usize| ratio(2 * (len as i64 - i as i64) + 1, 2);
    FrobeniusCoords {
        a: (1..=d).map(|i| half(lambda.row(i), i)).collect(),
        b: (1..=d).map(|i| half(conj.row(i), i)).collect(),
    }
}

/// `n! / ∏ hooks`.
pub fn dim_hook(lambda: &Partition) -> BigUint {
    let hooks = lambda
        .hook_lengths()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * BigUint::from(h));
    factorial(lambda.size()) / hooks
}

/// Path counts `∅ ↗ … ↗ λ`, filled level by level.
#[derive(Debug, Default)]
struct PathTable {
    levels: Vec<HashMap<Partition, BigUint>>,
}

impl PathTable {
    fn extend_to(&mut self, n: usize) {
        if self.levels.is_empty() {
            self.levels
                .push(HashMap::from([(Partition::empty(), BigUint::one())]));
        }
        while self.levels.len() <= n {
            let prev = self.levels.last().expect("level 0 present");
            let level = enumerate_partitions(self.levels.len())
                .into_iter()
                .map(|nu| {
                    let d = nu
                        .removable_boxes()
                        .iter()
                        .map(|mu| &prev[mu])
                        .fold(BigUint::zero(), |acc, v| acc + v);
                    (nu, d)
                })
                .collect();
            self.levels.push(level);
        }
    }
}

fn path_table() -> &'static RwLock<PathTable> {
    static TABLE: OnceLock<RwLock<PathTable>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(PathTable::default()))
}

/// `dim λ` from the path recursion `dim λ = Σ_{μ↗λ} dim μ`, memoized.
pub fn dim_paths(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    {
        let table = path_table().read().expect("path table poisoned");
        if let Some(level) = table.levels.get(n) {
            return level[lambda].clone();
        }
    }
    let mut table = path_table().write().expect("path table poisoned");
    table.extend_to(n);
    table.levels[n][lambda].clone()
}

/// Number of standard tableaux of shape `λ`.
///
/// Computed by the hook-length formula and by path recursion; the two
/// must agree.
pub fn dim_standard(lambda: &Partition) -> BigUint {
    let hook = dim_hook(lambda);
    let paths = dim_paths(lambda);
    assert_eq!(
        hook, paths,
        "hook formula and path recursion disagree on dim({lambda})"
    );
    hook
}

/// Number of monotone paths `μ ↗ … ↗ λ`; zero unless `μ ⊆ λ`.
pub fn dim_skew(mu: &Partition, lambda: &Partition) -> BigUint {
    if !lambda.contains(mu) {
        return BigUint::zero();
    }
    let mut level: HashMap<Partition, BigUint> = HashMap::from([(mu.clone(), BigUint::one())]);
    for _ in mu.size()..lambda.size() {
        let mut next: HashMap<Partition, BigUint> = HashMap::new();
        for (nu, count) in &level {
            for up in nu.addable_boxes() {
                if lambda.contains(&up) {
                    *next.entry(up).or_insert_with(BigUint::zero) += count;
                }
            }
        }
        level = next;
    }
    level.remove(lambda).unwrap_or_default()
}
