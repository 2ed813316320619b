use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Weakly decreasing positive row lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(Error::InvalidParameter(format!(
                "partition {rows:?} has an empty row"
            )));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!(
                "partition {rows:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(rows))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_parts(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..width)
                .map(|c| self.0.iter().filter(|&&r| r > c).count())
                .collect(),
        )
    }

    /// All partitions of `m`, in reverse lexicographic order (`(m)` first).
    pub fn all(m: usize) -> Vec<Partition> {
        fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for part in (1..=left.min(max)).rev() {
                cur.push(part);
                rec(left - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m, &mut Vec::new(), &mut out);
        out
    }

    /// Size of the conjugacy class of `S_m` with this cycle type.
    pub fn class_size(&self) -> u128 {
        let m = self.size();
        let mut denom: u128 = 1;
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let mut mult = 0;
            while i < self.0.len() && self.0[i] == part {
                mult += 1;
                i += 1;
            }
            denom *= (part as u128).pow(mult as u32) * factorial(mult);
        }
        factorial(m) / denom
    }
}

pub(crate) fn factorial(m: usize) -> u128 {
    (1..=m as u128).product()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", rows.join(","))
    }
}

/// Two columns of heights `first_col ≥ second_col`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TwoColumnShape {
    first_col: usize,
    second_col: usize,
}

impl TwoColumnShape {
    pub fn new(first_col: usize, second_col: usize) -> Result<Self> {
        if second_col > first_col {
            return Err(Error::InvalidParameter(format!(
                "Y^({first_col},{second_col}): second column is taller than the first"
            )));
        }
        Ok(TwoColumnShape {
            first_col,
            second_col,
        })
    }

    pub fn first_col(self) -> usize {
        self.first_col
    }

    pub fn second_col(self) -> usize {
        self.second_col
    }

    pub fn cells(self) -> usize {
        self.first_col + self.second_col
    }

    /// Row lengths `(2^t, 1^{s−t})`.
    pub fn partition(self) -> Partition {
        let mut rows = vec![2; self.second_col];
        rows.resize(self.first_col, 1);
        Partition(rows)
    }
}

impl fmt::Display for TwoColumnShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y^({},{})", self.first_col, self.second_col)
    }
}
