use serde::Serialize;

use crate::blade::{binomial, binomial_signed};
use crate::error::{Error, Result};
use crate::young::{dim_y, TwoColumnShape};

/// Criteria whose scalar equation counts are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CountedCriterion {
    Classical,
    Dual,
    Improved,
    DualImproved,
    Optimal,
}

impl CountedCriterion {
    pub const ALL: [CountedCriterion; 5] = [
        CountedCriterion::Classical,
        CountedCriterion::Dual,
        CountedCriterion::Improved,
        CountedCriterion::DualImproved,
        CountedCriterion::Optimal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CountedCriterion::Classical => "Classical",
            CountedCriterion::Dual => "Dual",
            CountedCriterion::Improved => "Improved",
            CountedCriterion::DualImproved => "DualImproved",
            CountedCriterion::Optimal => "Optimal",
        }
    }
}

/// Number of scalar equations a criterion imposes on `Λ^s` of an
/// `n`-dimensional space. For the optimal criterion this is the dimension of
/// `Y^{s+2,s−2}`, the number of independent equations in that component.
pub fn equation_count(n: usize, s: usize, criterion: CountedCriterion) -> Result<u128> {
    if n == 0 || s > n {
        return Err(Error::InvalidParameter(format!(
            "need 0 <= grade <= dimension and dimension >= 1, got dimension {n}, grade {s}"
        )));
    }
    let si = s as isize;
    Ok(match criterion {
        CountedCriterion::Classical | CountedCriterion::Dual => {
            binomial_signed(n, si - 1) * binomial(n, s + 1)
        }
        CountedCriterion::Improved | CountedCriterion::DualImproved => {
            binomial_signed(n, si - 2) * binomial(n, s + 2)
        }
        CountedCriterion::Optimal => {
            if s < 2 {
                0
            } else {
                dim_y(n, &TwoColumnShape::new(s + 2, s - 2)?)
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n8_s4() {
        assert_eq!(
            equation_count(8, 4, CountedCriterion::Classical).unwrap(),
            3136
        );
        assert_eq!(
            equation_count(8, 4, CountedCriterion::Improved).unwrap(),
            784
        );
        let opt = equation_count(8, 4, CountedCriterion::Optimal).unwrap();
        assert!(opt < 784);
        assert_eq!(opt, dim_y(8, &TwoColumnShape::new(6, 2).unwrap()));
    }

    #[test]
    fn n4_s2() {
        assert_eq!(
            equation_count(4, 2, CountedCriterion::Classical).unwrap(),
            16
        );
        assert_eq!(equation_count(4, 2, CountedCriterion::Improved).unwrap(), 1);
        assert_eq!(
            equation_count(4, 2, CountedCriterion::DualImproved).unwrap(),
            1
        );
    }

    #[test]
    fn invalid_pairs() {
        assert!(equation_count(3, 4, CountedCriterion::Classical).is_err());
        assert!(equation_count(0, 0, CountedCriterion::Classical).is_err());
    }

    #[test]
    fn orderings() {
        for n in 1..=12 {
            for s in 0..=n {
                let imp = equation_count(n, s, CountedCriterion::Improved).unwrap();
                let opt = equation_count(n, s, CountedCriterion::Optimal).unwrap();
                assert!(opt <= imp, "n={n} s={s}");
                if n >= 2 * s && 2 * s >= 8 {
                    let cl = equation_count(n, s, CountedCriterion::Classical).unwrap();
                    assert!(imp < cl, "n={n} s={s}");
                }
            }
        }
    }
}
