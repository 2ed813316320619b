use num_bigint::BigInt;

use crate::blade::subsets;
use crate::error::{Error, Result};
use crate::exterior::{support_space, wedge, wedge_all, Multivector};
use crate::linalg;
use crate::rational::Rational;

/// `P` is simple iff its support space has dimension `s` (or `P = 0`).
pub fn is_simple_oracle(p: &Multivector) -> bool {
    if p.grade() == 0 || p.is_zero() {
        return true;
    }
    support_space(p).rank() == p.grade()
}

/// `dim {v ∈ V : v∧P = 0}`, computed with fraction-free integer elimination.
///
/// For nonzero `P` of grade `s` this equals `s` exactly when `P` is simple.
pub fn kernel_dimension(p: &Multivector) -> usize {
    let n = p.dim();
    let scaled = p.clear_denominators();
    let targets: Vec<_> = subsets(n, p.grade() + 1).collect();
    // Row i holds the coordinates of e_i ∧ P.
    let rows: Vec<Vec<BigInt>> = (1..=n)
        .map(|i| {
            let ei = Multivector::basis(n, &[i]).expect("index in range");
            let w = wedge(&ei, &scaled).expect("same space");
            targets.iter().map(|t| w.coefficient(*t).numer()).collect()
        })
        .collect();
    n - linalg::integer_rank(rows)
}

/// Left-to-right wedge of grade-1 vectors.
pub fn from_factors(vectors: &[Multivector]) -> Result<Multivector> {
    let first = vectors
        .first()
        .ok_or_else(|| Error::InvalidParameter("no factors given".into()))?;
    let n = first.dim();
    for v in vectors {
        if v.dim() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: v.dim(),
            });
        }
        if v.grade() != 1 || v.is_dual() {
            return Err(Error::GradeMismatch(format!(
                "factors must be vectors of grade 1, got grade {}",
                v.grade()
            )));
        }
    }
    wedge_all(n, false, vectors)
}

/// Recovers `s` vectors whose wedge is exactly `P`.
///
/// The factors are the reduced row-echelon basis of the support space, with
/// the first one rescaled to absorb the overall coefficient. Returns `None`
/// for non-simple input, for `P = 0` and for grade 0.
pub fn factorize(p: &Multivector) -> Option<Vec<Multivector>> {
    if p.grade() == 0 || p.is_zero() {
        return None;
    }
    let w = support_space(p);
    if w.rank() != p.grade() {
        return None;
    }
    let mut factors = w.basis().to_vec();
    let product = from_factors(&factors).ok()?;
    let (blade, target) = p.terms().first()?;
    let current = product.coefficient(*blade);
    if current.is_zero() {
        return None;
    }
    let ratio: Rational = target / &current;
    factors[0] = factors[0].scale(&ratio);
    Some(factors)
}
