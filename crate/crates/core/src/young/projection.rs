//! Exact coefficients of the `Y^{s+2,s−2}` projection of `P⊗P`.
//!
//! Write `m = s − 2`. For pairs `(a_1,b_1),…,(a_m,b_m)` and a 4-set `K`,
//!
//! ```text
//! C = Σ_{orientations} Σ_{π ∈ S_4} sgn π · P[x, k_π1, k_π2] · P[y, k_π3, k_π4]
//! ```
//!
//! where each orientation puts one index of every pair into `x` and the
//! other into `y`. This symmetrizes the pairs and skews over `K`.
//! Rather than evaluating `C` index by index, every ordered pair of terms of
//! `P` is split into its contributions and scattered into a hash map keyed by
//! the canonical index; equal contributions of the 4! orderings, the
//! orientations, and the two orders of the term pair are folded into one
//! multiplier.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::blade::{binomial, shuffle_sign, sort_sign, Blade};
use crate::error::{Error, Result};
use crate::exterior::Multivector;
use crate::rational::Rational;

/// Largest grade whose coefficients fit the packed index key.
pub const MAX_PROJECTION_GRADE: usize = 10;

const INDEX_BITS: u32 = 6;
const PAIR_BITS: u32 = 2 * INDEX_BITS;
const QUAD_SHIFT: u32 = 96;

/// Coefficient index: `s − 2` unordered pairs `a ≤ b` in sorted order and a
/// 4-set, all 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ProjectionIndex {
    pub pairs: Vec<(usize, usize)>,
    pub quad: [usize; 4],
}

impl ProjectionIndex {
    fn validate(&self, n: usize, s: usize) -> Result<()> {
        if self.pairs.len() + 2 != s {
            return Err(Error::InvalidParameter(format!(
                "index {self} has {} pairs, grade {s} needs {}",
                self.pairs.len(),
                s.saturating_sub(2)
            )));
        }
        let in_range = |i: usize| (1..=n).contains(&i);
        let pairs_ok = self.pairs.iter().all(|&(a, b)| in_range(a) && in_range(b));
        if !pairs_ok || !self.quad.iter().all(|&i| in_range(i)) {
            return Err(Error::InvalidParameter(format!(
                "index {self} out of range for dimension {n}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ProjectionIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.pairs.iter().map(|(a, b)| format!("{a}{b}")).collect();
        let quad: Vec<String> = self.quad.iter().map(|i| i.to_string()).collect();
        write!(f, "C[{}|{}]", pairs.join(","), quad.join(","))
    }
}

fn unpack(key: u128, m: usize) -> ProjectionIndex {
    let mask = (1u128 << INDEX_BITS) - 1;
    let pairs = (0..m)
        .map(|j| {
            let packed = key >> (PAIR_BITS * j as u32);
            (
                ((packed >> INDEX_BITS) & mask) as usize + 1,
                (packed & mask) as usize + 1,
            )
        })
        .collect();
    let mut quad = [0; 4];
    for (i, slot) in quad.iter_mut().enumerate() {
        *slot = ((key >> (QUAD_SHIFT + INDEX_BITS * i as u32)) & mask) as usize + 1;
    }
    ProjectionIndex { pairs, quad }
}

/// Ratio between the full coefficient and the scattered sum: 4 orderings
/// within the two halves of `K`, and the orientations that reproduce the
/// same assignment (repeated pairs, pairs `a = b`).
fn multiplier(index: &ProjectionIndex) -> i64 {
    let mut mult = 4;
    for (j, pair) in index.pairs.iter().enumerate() {
        if pair.0 == pair.1 {
            mult *= 2;
        }
        if j > 0 && index.pairs[j - 1] == *pair {
            // runs of equal pairs longer than two always vanish
            mult *= 2;
        }
    }
    mult
}

struct Split {
    /// Sorted 0-based positions of `S ∖ X`.
    rest: Vec<u8>,
    x: Blade,
    sign: i32,
}

fn splits(term: Blade) -> Vec<Split> {
    let pos: Vec<usize> = term.positions().collect();
    pos.iter()
        .copied()
        .tuple_combinations()
        .map(|(i, j)| {
            let x = Blade::from_zero_based(&[i, j]);
            let rest = term.difference(x);
            Split {
                rest: rest.positions().map(|p| p as u8).collect(),
                x,
                sign: shuffle_sign(rest, x).expect("disjoint"),
            }
        })
        .collect()
}

fn check_grade(p: &Multivector) -> Result<()> {
    let s = p.grade();
    if p.is_dual() {
        return Err(Error::VarianceMismatch {
            expected: "vector",
            found: "covector",
        });
    }
    if s < 2 {
        return Err(Error::InvalidParameter(format!(
            "the Y^(s+2,s-2) projection needs grade at least 2, got {s}"
        )));
    }
    if s > MAX_PROJECTION_GRADE {
        return Err(Error::InvalidParameter(format!(
            "projection coefficients supported up to grade {MAX_PROJECTION_GRADE}, got {s}"
        )));
    }
    Ok(())
}

/// All nonzero coefficients of the `Y^{s+2,s−2}` projection of `P⊗P`.
/// Empty exactly when that component vanishes.
pub fn young_project_s2_coefficients(
    p: &Multivector,
) -> Result<BTreeMap<ProjectionIndex, Rational>> {
    check_grade(p)?;
    let m = p.grade() - 2;
    let perms: Vec<(Vec<usize>, i32)> = (0..m)
        .permutations(m)
        .map(|r| {
            let sign = sort_sign(&r).expect("permutation");
            (r, sign)
        })
        .collect();
    let terms = p.terms();
    let term_splits: Vec<Vec<Split>> = terms.iter().map(|(b, _)| splits(*b)).collect();

    let mut acc: FxHashMap<u128, Rational> = FxHashMap::default();
    let mut pair_keys: Vec<u16> = Vec::with_capacity(m);
    for (i, (_, p_i)) in terms.iter().enumerate() {
        for (j, (_, p_j)) in terms.iter().enumerate().skip(i) {
            // (S,T) and (T,S) contribute identically.
            let mut pq = p_i * p_j;
            if i != j {
                pq = &pq + &pq;
            }
            for sx in &term_splits[i] {
                for sy in &term_splits[j] {
                    if !sx.x.is_disjoint(sy.x) {
                        continue;
                    }
                    let quad = sx.x.union(sy.x);
                    let sign = sx.sign * sy.sign * shuffle_sign(sx.x, sy.x).expect("disjoint");
                    let quad_key = quad.positions().enumerate().fold(0u128, |k, (slot, q)| {
                        k | (q as u128) << (QUAD_SHIFT + INDEX_BITS * slot as u32)
                    });
                    for (rho, rho_sign) in &perms {
                        pair_keys.clear();
                        pair_keys.extend((0..m).map(|t| {
                            let (a, b) = (sx.rest[t], sy.rest[rho[t]]);
                            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                            (lo as u16) << INDEX_BITS | hi as u16
                        }));
                        pair_keys.sort_unstable();
                        let key = pair_keys.iter().enumerate().fold(quad_key, |k, (t, &pk)| {
                            k | (pk as u128) << (PAIR_BITS * t as u32)
                        });
                        let entry = acc.entry(key).or_insert_with(Rational::zero);
                        if sign * rho_sign > 0 {
                            *entry += &pq;
                        } else {
                            *entry -= &pq;
                        }
                    }
                }
            }
        }
    }
    Ok(acc
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(key, v)| {
            let index = unpack(key, m);
            let scaled = v * Rational::from_integer(multiplier(&index));
            (index, scaled)
        })
        .collect())
}

/// `P[seq]`: coefficient of the sorted blade times the sorting sign.
fn entry(p: &Multivector, seq: &[usize]) -> Rational {
    match sort_sign(seq) {
        None => Rational::zero(),
        Some(sign) => {
            let mut sorted = seq.to_vec();
            sorted.sort_unstable();
            let blade = Blade::from_indices(&sorted).expect("valid indices");
            p.coefficient(blade).signed(sign)
        }
    }
}

/// One coefficient evaluated from its defining sum.
pub fn projection_coefficient(p: &Multivector, index: &ProjectionIndex) -> Result<Rational> {
    check_grade(p)?;
    index.validate(p.dim(), p.grade())?;
    let m = index.pairs.len();
    let k = index.quad;
    let mut total = Rational::zero();
    let mut x = Vec::with_capacity(m + 2);
    let mut y = Vec::with_capacity(m + 2);
    for orientation in 0u32..(1 << m) {
        for pi in (0..4).permutations(4) {
            let sign = sort_sign(&pi).expect("permutation");
            x.clear();
            y.clear();
            for (j, &(a, b)) in index.pairs.iter().enumerate() {
                let (u, v) = if orientation & (1 << j) == 0 {
                    (a, b)
                } else {
                    (b, a)
                };
                x.push(u);
                y.push(v);
            }
            x.extend([k[pi[0]], k[pi[1]]]);
            y.extend([k[pi[2]], k[pi[3]]]);
            let term = entry(p, &x) * entry(p, &y);
            if !term.is_zero() {
                total += &term.signed(sign);
            }
        }
    }
    Ok(total)
}

/// Number of coefficients indexed: multisets of `s − 2` unordered pairs
/// (repetition allowed) times 4-subsets.
pub fn projection_equation_count(n: usize, s: usize) -> u128 {
    if s < 2 {
        return 0;
    }
    let m = s - 2;
    let pairs = n * (n + 1) / 2;
    let multisets = if m == 0 {
        1
    } else {
        binomial(pairs + m - 1, m)
    };
    multisets * binomial(n, 4)
}

/// Every canonical index for dimension `n` and grade `s`.
#[cfg(test)]
pub(crate) fn all_indices(n: usize, s: usize) -> Vec<ProjectionIndex> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|a| (a..=n).map(move |b| (a, b))).collect();
    let quads: Vec<[usize; 4]> = crate::blade::subsets(n, 4)
        .map(|b| {
            let v = b.indices();
            [v[0], v[1], v[2], v[3]]
        })
        .collect();
    let mut out = Vec::new();
    for multiset in pairs.iter().copied().combinations_with_replacement(s - 2) {
        for q in &quads {
            out.push(ProjectionIndex {
                pairs: multiset.clone(),
                quad: *q,
            });
        }
    }
    out
}
