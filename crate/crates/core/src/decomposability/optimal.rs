use crate::error::{Error, Result};
use crate::exterior::Multivector;
use crate::young::{projection_equation_count, young_project_s2_coefficients};

use super::{CriterionKind, CriterionReport, Witness};

/// Vanishing of the `Y^{s+2,s−2}` component of `P⊗P`, decided by
/// enumerating the coefficients of its Young projection.
pub fn optimal_component_test(p: &Multivector) -> Result<CriterionReport> {
    let s = p.grade();
    if s < 2 {
        return Err(Error::InvalidParameter(format!(
            "the Y^(s+2,s-2) component needs grade at least 2, got {s}"
        )));
    }
    let coefficients = young_project_s2_coefficients(p)?;
    let witness = coefficients
        .into_iter()
        .next()
        .map(|(index, value)| Witness::Projection { index, value });
    Ok(CriterionReport::exact(
        CriterionKind::Optimal,
        projection_equation_count(p.dim(), s),
        witness,
    ))
}
