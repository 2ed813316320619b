//! Basis subsets encoded as bitmasks.
//!
//! Index `i` (1-based) is stored in bit `i - 1`. Blades order by grade first
//! and then lexicographically on their sorted index lists, so iterating a
//! sorted collection of equal-grade blades visits `{1,2} < {1,3} < {2,3}`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_DIM: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u64);

impl Blade {
    pub const EMPTY: Blade = Blade(0);

    pub const fn from_bits(bits: u64) -> Self {
        Blade(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Single basis index (1-based).
    pub fn single(index: usize) -> Self {
        debug_assert!((1..=MAX_DIM).contains(&index));
        Blade(1u64 << (index - 1))
    }

    /// Builds a blade from 1-based indices, which must be strictly increasing.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        let mut prev = 0usize;
        for &i in indices {
            if i == 0 || i > MAX_DIM {
                return Err(Error::InvalidParameter(format!("index {i} out of range")));
            }
            if i <= prev {
                return Err(Error::InvalidParameter(format!(
                    "indices {indices:?} are not strictly increasing"
                )));
            }
            bits |= 1u64 << (i - 1);
            prev = i;
        }
        Ok(Blade(bits))
    }

    /// Builds a blade from 0-based positions in any order, ignoring repeats.
    pub fn from_zero_based(positions: &[usize]) -> Self {
        Blade(positions.iter().fold(0u64, |acc, &p| acc | (1u64 << p)))
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Largest index, or 0 for the empty blade.
    pub fn max_index(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn contains(self, index: usize) -> bool {
        (1..=MAX_DIM).contains(&index) && self.0 & (1u64 << (index - 1)) != 0
    }

    pub fn is_subset_of(self, other: Blade) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Blade) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Blade) -> Blade {
        Blade(self.0 | other.0)
    }

    pub fn intersection(self, other: Blade) -> Blade {
        Blade(self.0 & other.0)
    }

    pub fn difference(self, other: Blade) -> Blade {
        Blade(self.0 & !other.0)
    }

    /// Sorted 1-based indices.
    pub fn indices(self) -> Vec<usize> {
        self.positions().map(|p| p + 1).collect()
    }

    /// Sorted 0-based positions.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let p = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(p)
            }
        })
    }
}

/// Sign of the permutation that sorts the concatenation `(a, b)` of two
/// disjoint sorted index lists. Returns `None` when they overlap.
pub fn shuffle_sign(a: Blade, b: Blade) -> Option<i32> {
    if !a.is_disjoint(b) {
        return None;
    }
    // Each pair (i in a, j in b) with i > j is one inversion.
    let mut inversions = 0u32;
    let mut rest = b.0;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        let above = if j >= 63 { 0 } else { a.0 >> (j + 1) };
        inversions += above.count_ones();
    }
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

/// Sign of the permutation sorting an arbitrary sequence of distinct values,
/// or `None` if a value repeats.
pub fn sort_sign(values: &[usize]) -> Option<i32> {
    let mut inversions = 0usize;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            match values[i].cmp(&values[j]) {
                Ordering::Greater => inversions += 1,
                Ordering::Equal => return None,
                Ordering::Less => {}
            }
        }
    }
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.grade().cmp(&other.grade()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // The lowest differing index decides: whoever holds it is smaller.
        if self.0 & diff & diff.wrapping_neg() != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Serialized as its sorted 1-based index list.
impl Serialize for Blade {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.indices().serialize(serializer)
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Blade{:?}", self.indices())
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", idx.join(","))
    }
}

/// All `k`-subsets of `{1..n}` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Subsets {
    Subsets {
        n,
        current: if k <= n { Some((0..k).collect()) } else { None },
    }
}

pub struct Subsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Subsets {
    type Item = Blade;

    fn next(&mut self) -> Option<Blade> {
        let cur = self.current.as_mut()?;
        let out = Blade::from_zero_based(cur);
        let k = cur.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Binomial coefficient for a possibly negative lower index.
pub fn binomial_signed(n: usize, k: isize) -> u128 {
    if k < 0 {
        0
    } else {
        binomial(n, k as usize)
    }
}
