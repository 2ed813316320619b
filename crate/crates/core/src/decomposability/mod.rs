//! Simplicity criteria for `s`-vectors and the machinery around them.
//!
//! Every criterion returns a [`CriterionReport`]. Criteria that quantify
//! linearly over covectors are checked on basis covectors, which is exact.
//! The contraction criterion is quadratic in its covectors and is decided by
//! polynomial identity testing instead.
//!
//! Conventions: the zero vector counts as simple, and so does every element
//! of grade 0 or 1. Criteria whose quantifier range is empty pass vacuously.

mod contraction;
mod counts;
mod duality;
mod family;
mod linear;
mod optimal;
mod oracle;
pub mod registry;

use std::fmt;

use serde::Serialize;

use crate::blade::Blade;
use crate::error::Result;
use crate::exterior::{contract_into_basis, interior_basis, wedge, Multivector};
use crate::rational::Rational;
use crate::young::ProjectionIndex;

pub use contraction::{contraction_criterion, ContractionMode, DEFAULT_BOUND, DEFAULT_TRIALS};
pub use counts::{equation_count, CountedCriterion};
pub use duality::duality_identity_check;
pub use family::{three_plane_check, DecomposableFamily, ThreePlaneBranch, ThreePlaneReport};
pub use linear::{classical_pluecker, dual_improved_pluecker, dual_pluecker, improved_pluecker};
pub use optimal::optimal_component_test;
pub use oracle::{factorize, from_factors, is_simple_oracle, kernel_dimension};
pub use registry::{CriterionRegistry, SimplicityCriterion};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriterionKind {
    Classical,
    Dual,
    Contraction(usize),
    Improved,
    DualImproved,
    Optimal,
    Oracle,
}

impl fmt::Display for CriterionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriterionKind::Classical => write!(f, "classical"),
            CriterionKind::Dual => write!(f, "dual"),
            CriterionKind::Contraction(k) => write!(f, "contraction(k={k})"),
            CriterionKind::Improved => write!(f, "improved"),
            CriterionKind::DualImproved => write!(f, "dual-improved"),
            CriterionKind::Optimal => write!(f, "optimal"),
            CriterionKind::Oracle => write!(f, "oracle"),
        }
    }
}

/// The first equation found not to vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A basis covector from the quantifier range and the first nonzero
    /// component of the resulting multivector.
    Basis {
        covector: Blade,
        component: Blade,
        value: Rational,
    },
    /// Symbolic contraction: the classical equation for `e^covector` on the
    /// contracted vector has a nonzero coefficient at `monomial`, written as
    /// `(covector number, coordinate, exponent)` triples, all 1-based.
    Polynomial {
        covector: Blade,
        component: Blade,
        monomial: Vec<(usize, usize, u32)>,
        coefficient: Rational,
    },
    /// Randomized contraction: explicit contracting covectors.
    Point {
        contracting: Vec<Vec<i64>>,
        covector: Blade,
        component: Blade,
        value: Rational,
    },
    /// A nonzero coefficient of the Young projection.
    Projection {
        index: ProjectionIndex,
        value: Rational,
    },
    /// The support space has the wrong dimension.
    Support { rank: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Basis {
                covector,
                component,
                value,
            } => write!(f, "covector e^{covector} gives {value} at e_{component}"),
            Witness::Polynomial {
                covector,
                component,
                monomial,
                coefficient,
            } => {
                let mono: Vec<String> = monomial
                    .iter()
                    .map(|(j, i, e)| {
                        if *e == 1 {
                            format!("a{j}[{i}]")
                        } else {
                            format!("a{j}[{i}]^{e}")
                        }
                    })
                    .collect();
                let mono = if mono.is_empty() {
                    "1".to_string()
                } else {
                    mono.join("*")
                };
                write!(
                    f,
                    "covector e^{covector} at e_{component}: coefficient {coefficient} of {mono}"
                )
            }
            Witness::Point {
                contracting,
                covector,
                component,
                value,
            } => write!(
                f,
                "contracting by {contracting:?}: covector e^{covector} gives {value} at e_{component}"
            ),
            Witness::Projection { index, value } => write!(f, "coefficient {index} = {value}"),
            Witness::Support { rank } => write!(f, "support space has dimension {rank}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub criterion: CriterionKind,
    pub verdict: bool,
    pub equations_checked: u128,
    pub witness: Option<Witness>,
    /// Set when a `true` verdict rests on random evaluation.
    pub probabilistic: bool,
    pub seed: Option<u64>,
}

impl CriterionReport {
    pub(crate) fn exact(
        criterion: CriterionKind,
        equations: u128,
        witness: Option<Witness>,
    ) -> Self {
        CriterionReport {
            criterion,
            verdict: witness.is_none(),
            equations_checked: equations,
            witness,
            probabilistic: false,
            seed: None,
        }
    }

    pub(crate) fn vacuous(criterion: CriterionKind) -> Self {
        Self::exact(criterion, 0, None)
    }

    /// Re-evaluates the witness equation against `p` and returns its value,
    /// which is nonzero for a sound witness. `None` when there is no witness.
    pub fn recheck_witness(&self, p: &Multivector) -> Result<Option<Rational>> {
        let Some(w) = &self.witness else {
            return Ok(None);
        };
        let value = match (self.criterion, w) {
            (
                CriterionKind::Classical | CriterionKind::Improved,
                Witness::Basis {
                    covector,
                    component,
                    ..
                },
            ) => wedge(&interior_basis(*covector, p), p)?.coefficient(*component),
            (
                CriterionKind::Dual | CriterionKind::DualImproved,
                Witness::Basis {
                    covector,
                    component,
                    ..
                },
            ) => {
                let contracted = contract_into_basis(p, *covector);
                crate::exterior::interior(&contracted, p)?.coefficient(*component)
            }
            (CriterionKind::Contraction(k), Witness::Polynomial { .. }) => {
                contraction::recheck_polynomial(p, k, w)?
            }
            (CriterionKind::Contraction(_), Witness::Point { .. }) => {
                contraction::recheck_point(p, w)?
            }
            (CriterionKind::Optimal, Witness::Projection { index, .. }) => {
                crate::young::projection_coefficient(p, index)?
            }
            (CriterionKind::Oracle, Witness::Support { rank }) => {
                let actual = crate::exterior::support_space(p).rank();
                if actual == *rank && actual != p.grade() {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }
            _ => Rational::zero(),
        };
        Ok(Some(value))
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<18} {:<5} equations={}",
            self.criterion.to_string(),
            self.verdict,
            self.equations_checked
        )?;
        if self.probabilistic {
            write!(f, " probabilistic")?;
        }
        if let Some(seed) = self.seed {
            write!(f, " seed={seed}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        Ok(())
    }
}
