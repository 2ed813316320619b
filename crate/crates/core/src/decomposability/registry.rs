//! Named simplicity criteria behind a common trait.
//!
//! Each criterion is a strategy object registered under a stable name; the
//! command-line front end selects them by that name. Registration order is
//! the reporting order.

use crate::error::{Error, Result};
use crate::exterior::Multivector;

use super::contraction::{contraction_criterion, ContractionMode};
use super::linear::{classical_pluecker, dual_improved_pluecker, dual_pluecker, improved_pluecker};
use super::optimal::optimal_component_test;
use super::oracle::is_simple_oracle;
use super::{CriterionKind, CriterionReport, Witness};

pub trait SimplicityCriterion: Send + Sync {
    /// Registry key, e.g. `"classical"`.
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn kind(&self) -> CriterionKind;
    fn evaluate(&self, p: &Multivector) -> Result<CriterionReport>;
}

pub struct Classical;
pub struct Dual;
pub struct Improved;
pub struct DualImproved;
pub struct Optimal;
pub struct SupportOracle;

pub struct Contraction {
    pub k: usize,
    pub mode: ContractionMode,
}

impl SimplicityCriterion for Classical {
    fn name(&self) -> &'static str {
        "classical"
    }
    fn description(&self) -> &'static str {
        "i(Φ)P∧P = 0 for all (s−1)-covectors Φ"
    }
    fn kind(&self) -> CriterionKind {
        CriterionKind::Classical
    }
    fn evaluate(&self, p: &Multivector) -> Result<CriterionReport> {
        Ok(classical_pluecker(p))
    }
}

impl SimplicityCriterion for Dual {
    fn name(&self) -> &'static str {
        "dual"
    }
    fn description(&self) -> &'static str {
        "i(i_PΨ)P = 0 for all (s+1)-covectors Ψ"
    }
    fn kind(&self) -> CriterionKind {
        CriterionKind::Dual
    }
    fn evaluate(&self, p: &Multivector) -> Result<CriterionReport> {
        Ok(dual_pluecker(p))
    }
}

impl SimplicityCriterion for Contraction {
    fn name(&self) -> &'static str {
        "contraction"
    }
    fn description(&self) -> &'static str {
        "every contraction of P down to grade k is simple"
    }
    fn kind(&self) -> CriterionKind {
        CriterionKind::Contraction(self.k)
    }
    fn evaluate(&self, p: &Multivector) -> Result<CriterionReport> {
        contraction_criterion(p, self.k, self.mode)
    }
}

impl SimplicityCriterion for Improved {
    fn name(&self) -> &'static str {
        "improved"
    }
    fn description(&self) -> &'static str {
        "i(Ψ)P∧P = 0 for all (s−2)-covectors Ψ"
    }
    fn kind(&self) -> CriterionKind {
        CriterionKind::Improved
    }
    fn evaluate(&self, p: &Multivector) -> Result<CriterionReport> {
        Ok(improved_pluecker(p))
    }
}

impl SimplicityCriterion for DualImproved {
    fn name(&self) -> &'static str {
        "dual-improved"
    }
    fn description(&self) -> &'static str {
        "i(i_PΨ)P = 0 for all (s+2)-covectors Ψ"
    }
    fn kind(&self) -> CriterionKind {
        CriterionKind::DualImproved
    }
    fn evaluate(&self, p: &Multivector) -> Result<CriterionReport> {
        Ok(dual_improved_pluecker(p))
    }
}

impl SimplicityCriterion for Optimal {
    fn name(&self) -> &'static str {
        "optimal"
    }
    fn description(&self) -> &'static str {
        "the Y^(s+2,s−2) component of P⊗P vanishes"
    }
    fn kind(&self) -> CriterionKind {
        CriterionKind::Optimal
    }
    fn evaluate(&self, p: &Multivector) -> Result<CriterionReport> {
        if p.grade() < 2 {
            return Ok(CriterionReport::vacuous(self.kind()));
        }
        optimal_component_test(p)
    }
}

impl SimplicityCriterion for SupportOracle {
    fn name(&self) -> &'static str {
        "oracle"
    }
    fn description(&self) -> &'static str {
        "the support space of P has dimension s"
    }
    fn kind(&self) -> CriterionKind {
        CriterionKind::Oracle
    }
    fn evaluate(&self, p: &Multivector) -> Result<CriterionReport> {
        let witness = if is_simple_oracle(p) {
            None
        } else {
            Some(Witness::Support {
                rank: crate::exterior::support_space(p).rank(),
            })
        };
        Ok(CriterionReport::exact(CriterionKind::Oracle, 0, witness))
    }
}

#[derive(Default)]
pub struct CriterionRegistry {
    entries: Vec<Box<dyn SimplicityCriterion>>,
}

impl CriterionRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// All seven criteria, with the contraction criterion at `k = 2`.
    pub fn with_defaults(mode: ContractionMode) -> Self {
        let mut r = Self::new();
        r.register(Box::new(Classical));
        r.register(Box::new(Dual));
        r.register(Box::new(Contraction { k: 2, mode }));
        r.register(Box::new(Improved));
        r.register(Box::new(DualImproved));
        r.register(Box::new(Optimal));
        r.register(Box::new(SupportOracle));
        r
    }

    /// Adds a criterion, replacing any existing one with the same name.
    pub fn register(&mut self, criterion: Box<dyn SimplicityCriterion>) {
        match self
            .entries
            .iter()
            .position(|c| c.name() == criterion.name())
        {
            Some(i) => self.entries[i] = criterion,
            None => self.entries.push(criterion),
        }
    }

    pub fn get(&self, name: &str) -> Option<&dyn SimplicityCriterion> {
        self.entries
            .iter()
            .find(|c| c.name() == name)
            .map(|c| c.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|c| c.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn SimplicityCriterion> {
        self.entries.iter().map(|c| c.as_ref())
    }

    pub fn evaluate(&self, name: &str, p: &Multivector) -> Result<CriterionReport> {
        let c = self.get(name).ok_or_else(|| {
            Error::InvalidParameter(format!(
                "unknown criterion {name:?}; known: {}",
                self.names().join(", ")
            ))
        })?;
        c.evaluate(p)
    }

    pub fn evaluate_all(&self, p: &Multivector) -> Result<Vec<CriterionReport>> {
        self.iter().map(|c| c.evaluate(p)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::mv;

    #[test]
    fn defaults_in_order() {
        let r = CriterionRegistry::with_defaults(ContractionMode::Symbolic);
        assert_eq!(
            r.names(),
            vec![
                "classical",
                "dual",
                "contraction",
                "improved",
                "dual-improved",
                "optimal",
                "oracle"
            ]
        );
        assert!(r.get("nope").is_none());
        assert!(r.evaluate("nope", &mv(3, 1, &[(&[1], 1)])).is_err());
    }

    #[test]
    fn replace_by_name() {
        let mut r = CriterionRegistry::with_defaults(ContractionMode::Symbolic);
        r.register(Box::new(Contraction {
            k: 3,
            mode: ContractionMode::Symbolic,
        }));
        assert_eq!(r.names().len(), 7);
        assert_eq!(
            r.get("contraction").unwrap().kind(),
            CriterionKind::Contraction(3)
        );
    }

    #[test]
    fn all_false_on_two_planes() {
        let r = CriterionRegistry::with_defaults(ContractionMode::Symbolic);
        let p = mv(4, 2, &[(&[1, 2], 1), (&[3, 4], 1)]);
        let reports = r.evaluate_all(&p).unwrap();
        assert_eq!(reports.len(), 7);
        assert!(reports.iter().all(|x| !x.verdict && x.witness.is_some()));
    }

    #[test]
    fn degenerate_grades_are_vacuous() {
        let r = CriterionRegistry::with_defaults(ContractionMode::Symbolic);
        for p in [
            Multivector::scalar(3, 5.into(), false),
            mv(3, 1, &[(&[1], 2), (&[3], -1)]),
        ] {
            for rep in r.evaluate_all(&p).unwrap() {
                assert!(rep.verdict, "{}", rep.criterion);
            }
        }
    }
}
