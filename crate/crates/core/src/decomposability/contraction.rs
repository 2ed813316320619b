//! Decomposability of every contraction `i_{α_1∧…∧α_{s−k}} P` to a `k`-vector.
//!
//! The classical equations of the contraction are quadratic in each `α_j`,
//! so basis covectors do not suffice. Symbolic mode expands them as
//! polynomials in the `(s−k)·n` covector coordinates; randomized mode
//! evaluates them at random integer points, where a nonzero value is a
//! certificate and an all-zero run is only probabilistic evidence.

use crate::blade::{binomial, subsets, Blade};
use crate::error::{Error, Result};
use crate::exterior::{interior, wedge_all, Multivector};
use crate::kernel::{self, Coefficient, Terms};
use crate::poly::{Monomial, Poly, MAX_VARIABLES};
use crate::random::{random_coords, rng_for};
use crate::rational::Rational;

use super::linear::classical_pluecker;
use super::{CriterionKind, CriterionReport, Witness};

pub const DEFAULT_TRIALS: usize = 64;
pub const DEFAULT_BOUND: i64 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ContractionMode {
    #[default]
    Symbolic,
    Randomized {
        trials: usize,
        seed: u64,
        bound: i64,
    },
}

pub fn contraction_criterion(
    p: &Multivector,
    k: usize,
    mode: ContractionMode,
) -> Result<CriterionReport> {
    let s = p.grade();
    let kind = CriterionKind::Contraction(k);
    if s < 2 {
        return Ok(CriterionReport::vacuous(kind));
    }
    if k < 2 || k > s {
        return Err(Error::InvalidParameter(format!(
            "contraction target grade {k} must lie in 2..={s}"
        )));
    }
    match mode {
        ContractionMode::Symbolic => symbolic(p, k),
        ContractionMode::Randomized {
            trials,
            seed,
            bound,
        } => randomized(p, k, trials, seed, bound),
    }
}

/// `i(α_m)…i(α_1)P` with `α_j = Σ_i x_{j,i} e^i` symbolic.
fn symbolic_contraction(p: &Multivector, m: usize) -> Terms<Poly> {
    let n = p.dim();
    let mut q: Terms<Poly> = p
        .terms()
        .iter()
        .map(|(b, c)| (*b, Poly::constant(c.clone())))
        .collect();
    for j in 0..m {
        let alpha: Terms<Poly> = (1..=n)
            .map(|i| (Blade::single(i), Poly::var(j * n + i - 1)))
            .collect();
        q = kernel::contract(&alpha, &q);
    }
    q
}

fn classical_equation(q: &[(Blade, Poly)], covector: Blade) -> Terms<Poly> {
    kernel::wedge(&kernel::contract_basis(covector, q), q)
}

fn describe_monomial(m: Monomial, n: usize) -> Vec<(usize, usize, u32)> {
    m.exponents()
        .into_iter()
        .map(|(v, e)| (v / n + 1, v % n + 1, e))
        .collect()
}

fn symbolic(p: &Multivector, k: usize) -> Result<CriterionReport> {
    let (n, s) = (p.dim(), p.grade());
    let m = s - k;
    if m * n > MAX_VARIABLES {
        return Err(Error::InvalidParameter(format!(
            "symbolic expansion needs {} covector coordinates, at most {MAX_VARIABLES} supported; use randomized mode",
            m * n
        )));
    }
    let q = symbolic_contraction(p, m);
    let pair_monomials = binomial(n + 1, 2);
    let equations = binomial(n, k - 1) * binomial(n, k + 1) * pair_monomials.pow(m as u32);
    let witness = subsets(n, k - 1).find_map(|cov| {
        let eq = classical_equation(&q, cov);
        eq.into_iter()
            .find(|(_, c)| !c.is_zero())
            .map(|(component, poly)| {
                let (mono, coefficient) = poly.sorted_terms().into_iter().next().expect("nonzero");
                Witness::Polynomial {
                    covector: cov,
                    component,
                    monomial: describe_monomial(mono, n),
                    coefficient,
                }
            })
    });
    Ok(CriterionReport::exact(
        CriterionKind::Contraction(k),
        equations,
        witness,
    ))
}

fn contract_by(p: &Multivector, covectors: &[Vec<i64>]) -> Result<Multivector> {
    let alphas = covectors
        .iter()
        .map(|c| Ok(Multivector::vector_from_integers(c)?.into_dual(true)))
        .collect::<Result<Vec<_>>>()?;
    let form = wedge_all(p.dim(), true, &alphas)?;
    interior(&form, p)
}

fn randomized(
    p: &Multivector,
    k: usize,
    trials: usize,
    seed: u64,
    bound: i64,
) -> Result<CriterionReport> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    if bound < 1 {
        return Err(Error::InvalidParameter(format!(
            "bound must be positive, got {bound}"
        )));
    }
    let (n, s) = (p.dim(), p.grade());
    let m = s - k;
    let per_trial = binomial(n, k - 1) * binomial(n, k + 1);
    for trial in 0..trials {
        let mut rng = rng_for(seed, trial as u64);
        let covectors: Vec<Vec<i64>> = (0..m).map(|_| random_coords(&mut rng, n, bound)).collect();
        let q = contract_by(p, &covectors)?;
        let report = classical_pluecker(&q);
        if let Some(Witness::Basis {
            covector,
            component,
            value,
        }) = report.witness
        {
            return Ok(CriterionReport {
                criterion: CriterionKind::Contraction(k),
                verdict: false,
                equations_checked: per_trial * (trial as u128 + 1),
                witness: Some(Witness::Point {
                    contracting: covectors,
                    covector,
                    component,
                    value,
                }),
                probabilistic: false,
                seed: Some(seed),
            });
        }
    }
    Ok(CriterionReport {
        criterion: CriterionKind::Contraction(k),
        verdict: true,
        equations_checked: per_trial * trials as u128,
        witness: None,
        probabilistic: true,
        seed: Some(seed),
    })
}

pub(super) fn recheck_polynomial(p: &Multivector, k: usize, w: &Witness) -> Result<Rational> {
    let Witness::Polynomial {
        covector,
        component,
        monomial,
        ..
    } = w
    else {
        return Ok(Rational::zero());
    };
    let n = p.dim();
    let m = p.grade().checked_sub(k).ok_or_else(|| {
        Error::InvalidParameter("witness grade does not match the multivector".into())
    })?;
    let q = symbolic_contraction(p, m);
    let eq = classical_equation(&q, *covector);
    let mono = monomial.iter().fold(Monomial::ONE, |acc, &(j, i, e)| {
        (0..e).fold(acc, |a, _| {
            a.checked_mul(Monomial::var((j - 1) * n + i - 1))
                .expect("witness monomial fits")
        })
    });
    Ok(eq
        .iter()
        .find(|(b, _)| b == component)
        .map(|(_, poly)| poly.coefficient(mono))
        .unwrap_or_else(Rational::zero))
}

pub(super) fn recheck_point(p: &Multivector, w: &Witness) -> Result<Rational> {
    let Witness::Point {
        contracting,
        covector,
        component,
        ..
    } = w
    else {
        return Ok(Rational::zero());
    };
    let q = contract_by(p, contracting)?;
    let eq = crate::exterior::wedge(&crate::exterior::interior_basis(*covector, &q), &q)?;
    Ok(eq.coefficient(*component))
}
