//! Seeded generators for test instances.
//!
//! Every generator takes an explicit RNG so callers control reproducibility;
//! [`rng_for`] derives independent streams from one seed, which keeps results
//! stable no matter how work is split.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blade::{subsets, Blade};
use crate::decomposability::{from_factors, is_simple_oracle};
use crate::error::{Error, Result};
use crate::exterior::{wedge_all, Multivector};
use crate::rational::Rational;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream `stream` of the generator seeded with `seed`.
pub fn rng_for(seed: u64, stream: u64) -> SeededRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn check_bound(bound: i64) -> Result<()> {
    if bound < 1 {
        return Err(Error::InvalidParameter(format!(
            "bound must be positive, got {bound}"
        )));
    }
    Ok(())
}

pub fn random_integer(rng: &mut impl Rng, bound: i64) -> i64 {
    rng.random_range(-bound..=bound)
}

/// Dense integer coordinates drawn uniformly from `[-bound, bound]`.
pub fn random_coords(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<i64> {
    (0..n).map(|_| random_integer(rng, bound)).collect()
}

pub fn random_vector(rng: &mut impl Rng, n: usize, bound: i64, dual: bool) -> Result<Multivector> {
    check_bound(bound)?;
    Ok(Multivector::vector_from_integers(&random_coords(rng, n, bound))?.into_dual(dual))
}

/// Every coefficient uniform in `[-bound, bound]`; may be zero.
pub fn random_multivector(
    rng: &mut impl Rng,
    n: usize,
    s: usize,
    bound: i64,
    dual: bool,
) -> Result<Multivector> {
    check_bound(bound)?;
    let terms: Vec<(Blade, Rational)> = subsets(n, s)
        .map(|b| (b, Rational::from_integer(random_integer(rng, bound))))
        .collect();
    Multivector::from_terms(n, s, dual, terms)
}

/// Like [`random_multivector`] but redrawn until nonzero.
pub fn random_nonzero_multivector(
    rng: &mut impl Rng,
    n: usize,
    s: usize,
    bound: i64,
) -> Result<Multivector> {
    loop {
        let p = random_multivector(rng, n, s, bound, false)?;
        if !p.is_zero() {
            return Ok(p);
        }
    }
}

/// Between one and `max_terms` random basis terms with nonzero coefficients.
pub fn random_sparse_multivector(
    rng: &mut impl Rng,
    n: usize,
    s: usize,
    bound: i64,
    max_terms: usize,
) -> Result<Multivector> {
    check_bound(bound)?;
    let all: Vec<Blade> = subsets(n, s).collect();
    let count = rng.random_range(1..=max_terms.max(1));
    let mut picked: Vec<Blade> = Vec::new();
    for _ in 0..count {
        let b = all[rng.random_range(0..all.len())];
        if !picked.contains(&b) {
            picked.push(b);
        }
    }
    let terms = picked.into_iter().map(|b| {
        let mut c = 0;
        while c == 0 {
            c = random_integer(rng, bound);
        }
        (b, Rational::from_integer(c))
    });
    Multivector::from_terms(n, s, false, terms)
}

/// Random rational coefficients `p/q` with `|p| <= bound`, `1 <= q <= bound`.
pub fn random_rational_multivector(
    rng: &mut impl Rng,
    n: usize,
    s: usize,
    bound: i64,
    dual: bool,
) -> Result<Multivector> {
    check_bound(bound)?;
    let terms: Vec<(Blade, Rational)> = subsets(n, s)
        .map(|b| {
            let num = random_integer(rng, bound);
            let den = rng.random_range(1..=bound);
            (b, Rational::new(num, den))
        })
        .collect();
    Multivector::from_terms(n, s, dual, terms)
}

/// Wedge of `s` random integer vectors, redrawn until nonzero.
pub fn random_simple(rng: &mut impl Rng, n: usize, s: usize, bound: i64) -> Result<Multivector> {
    if s > n {
        return Err(Error::InvalidParameter(format!(
            "grade {s} exceeds dimension {n}"
        )));
    }
    loop {
        let factors = (0..s)
            .map(|_| random_vector(rng, n, bound, false))
            .collect::<Result<Vec<_>>>()?;
        let p = if s == 0 {
            Multivector::scalar(n, Rational::from_integer(random_integer(rng, bound)), false)
        } else {
            from_factors(&factors)?
        };
        if !p.is_zero() {
            return Ok(p);
        }
    }
}

/// Whether `Λ^s` of an `n`-dimensional space contains non-simple elements.
pub fn has_nonsimple(n: usize, s: usize) -> bool {
    s >= 2 && s + 2 <= n
}

/// Random multivector redrawn until the support-space oracle rejects it.
pub fn random_nonsimple(rng: &mut impl Rng, n: usize, s: usize, bound: i64) -> Result<Multivector> {
    if !has_nonsimple(n, s) {
        return Err(Error::InvalidParameter(format!(
            "every {s}-vector in dimension {n} is simple"
        )));
    }
    loop {
        let p = random_multivector(rng, n, s, bound, false)?;
        if !is_simple_oracle(&p) {
            return Ok(p);
        }
    }
}

/// Random element of the top exterior power or of codegree one.
pub fn random_top_or_codegree_one(
    rng: &mut impl Rng,
    n: usize,
    codegree: usize,
    bound: i64,
) -> Result<Multivector> {
    random_multivector(rng, n, n - codegree, bound, false)
}

/// `c_1∧…∧c_{k−1}∧v_i` for a shared random `(k−1)`-plane.
pub fn common_intersection_family(
    rng: &mut impl Rng,
    n: usize,
    k: usize,
    members: usize,
    bound: i64,
) -> Result<Vec<Multivector>> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "grade {k} invalid for dimension {n}"
        )));
    }
    loop {
        let core = (0..k - 1)
            .map(|_| random_vector(rng, n, bound, false))
            .collect::<Result<Vec<_>>>()?;
        let core_wedge = wedge_all(n, false, &core)?;
        if core_wedge.is_zero() {
            continue;
        }
        let mut out = Vec::with_capacity(members);
        while out.len() < members {
            let v = random_vector(rng, n, bound, false)?;
            let p = crate::exterior::wedge(&core_wedge, &v)?;
            if !p.is_zero() {
                out.push(p);
            }
        }
        return Ok(out);
    }
}

/// Random `k`-vectors all lying in a shared random `(k+1)`-dimensional space.
pub fn common_span_family(
    rng: &mut impl Rng,
    n: usize,
    k: usize,
    members: usize,
    bound: i64,
) -> Result<Vec<Multivector>> {
    if k == 0 || k + 1 > n {
        return Err(Error::InvalidParameter(format!(
            "grade {k} invalid for dimension {n}"
        )));
    }
    loop {
        let frame = (0..k + 1)
            .map(|_| random_vector(rng, n, bound, false))
            .collect::<Result<Vec<_>>>()?;
        if wedge_all(n, false, &frame)?.is_zero() {
            continue;
        }
        let mut out = Vec::with_capacity(members);
        while out.len() < members {
            // k random combinations of the frame vectors.
            let factors = (0..k)
                .map(|_| {
                    frame
                        .iter()
                        .try_fold(Multivector::zero(n, 1, false), |acc, f| {
                            acc.add(&f.scale(&Rational::from_integer(random_integer(rng, 3))))
                        })
                })
                .collect::<Result<Vec<_>>>()?;
            let p = from_factors(&factors)?;
            if !p.is_zero() {
                out.push(p);
            }
        }
        return Ok(out);
    }
}
