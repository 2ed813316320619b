use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{support_space, Multivector};
use crate::linalg::{self, Row};

use super::oracle::is_simple_oracle;

/// Nonzero simple `k`-vectors whose pairwise sums are all simple.
#[derive(Clone, Debug)]
pub struct DecomposableFamily {
    members: Vec<Multivector>,
}

impl DecomposableFamily {
    pub fn new(members: Vec<Multivector>) -> Result<Self> {
        let first = members
            .first()
            .ok_or_else(|| Error::InvalidFamily("family is empty".into()))?;
        let (n, k) = (first.dim(), first.grade());
        for (i, p) in members.iter().enumerate() {
            if p.dim() != n || p.grade() != k || p.is_dual() {
                return Err(Error::InvalidFamily(format!(
                    "member {} is not a {k}-vector in dimension {n}",
                    i + 1
                )));
            }
            if p.is_zero() {
                return Err(Error::InvalidFamily(format!("member {} is zero", i + 1)));
            }
            if !is_simple_oracle(p) {
                return Err(Error::InvalidFamily(format!(
                    "member {} is not simple",
                    i + 1
                )));
            }
        }
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                let sum = members[i].add(&members[j])?;
                if !is_simple_oracle(&sum) {
                    return Err(Error::InvalidFamily(format!(
                        "sum of members {} and {} is not simple",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(DecomposableFamily { members })
    }

    pub fn members(&self) -> &[Multivector] {
        &self.members
    }

    pub fn grade(&self) -> usize {
        self.members[0].grade()
    }

    pub fn dim(&self) -> usize {
        self.members[0].dim()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ThreePlaneBranch {
    /// The supports span at most `k+1` dimensions.
    SpanBound,
    /// The supports share at least `k−1` dimensions.
    IntersectionBound,
    Both,
}

impl fmt::Display for ThreePlaneBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ThreePlaneBranch::SpanBound => "SpanBound",
            ThreePlaneBranch::IntersectionBound => "IntersectionBound",
            ThreePlaneBranch::Both => "Both",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThreePlaneReport {
    pub branch: ThreePlaneBranch,
    pub grade: usize,
    pub span_dim: usize,
    pub intersection_dim: usize,
}

/// Either the supports `W(P_i)` jointly span at most `k+1` dimensions or
/// they intersect in at least `k−1` dimensions. Finding neither is reported
/// as an invariant violation.
pub fn three_plane_check(family: &DecomposableFamily) -> Result<ThreePlaneReport> {
    let n = family.dim();
    let k = family.grade();
    let supports: Vec<Vec<Row>> = family
        .members()
        .iter()
        .map(|p| support_space(p).rows())
        .collect();
    let refs: Vec<&[Row]> = supports.iter().map(Vec::as_slice).collect();
    let span_dim = linalg::span(n, &refs).len();
    let mut common = supports[0].clone();
    for w in &supports[1..] {
        common = linalg::intersection(n, &common, w);
    }
    let intersection_dim = common.len();
    let span_ok = span_dim <= k + 1;
    let inter_ok = intersection_dim + 1 >= k;
    let branch = match (span_ok, inter_ok) {
        (true, true) => ThreePlaneBranch::Both,
        (true, false) => ThreePlaneBranch::SpanBound,
        (false, true) => ThreePlaneBranch::IntersectionBound,
        (false, false) => {
            return Err(Error::InvariantViolation(format!(
                "family spans {span_dim} dimensions and shares {intersection_dim}, grade {k}"
            )))
        }
    };
    Ok(ThreePlaneReport {
        branch,
        grade: k,
        span_dim,
        intersection_dim,
    })
}
