//! Sparse multivariate polynomials with rational coefficients, used as the
//! coefficient ring for symbolic identity testing.
//!
//! Monomials pack up to 64 variables into a `u128`, two bits of exponent per
//! variable. Every polynomial built here is at most quadratic in each
//! variable, which the packing checks on multiplication.

use std::fmt;

use rustc_hash::FxHashMap;

use crate::kernel::Coefficient;
use crate::rational::Rational;

pub const MAX_VARIABLES: usize = 64;

const FIELD_CARRY_BITS: u128 = 0x5555_5555_5555_5555_5555_5555_5555_5554;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn var(index: usize) -> Self {
        assert!(index < MAX_VARIABLES, "variable index {index} out of range");
        Monomial(1u128 << (2 * index))
    }

    pub fn exponent(self, index: usize) -> u32 {
        ((self.0 >> (2 * index)) & 0b11) as u32
    }

    /// Product, or `None` if some exponent would exceed 3.
    pub fn checked_mul(self, other: Monomial) -> Option<Monomial> {
        let (sum, overflow) = self.0.overflowing_add(other.0);
        if overflow || (self.0 ^ other.0 ^ sum) & FIELD_CARRY_BITS != 0 {
            return None;
        }
        Some(Monomial(sum))
    }

    /// `(variable, exponent)` pairs with nonzero exponent, by variable.
    pub fn exponents(self) -> Vec<(usize, u32)> {
        (0..MAX_VARIABLES)
            .filter_map(|v| {
                let e = self.exponent(v);
                (e > 0).then_some((v, e))
            })
            .collect()
    }
}

#[derive(Clone, Default)]
pub struct Poly {
    terms: FxHashMap<Monomial, Rational>,
}

impl Poly {
    pub fn constant(c: Rational) -> Self {
        let mut terms = FxHashMap::default();
        if !c.is_zero() {
            terms.insert(Monomial::ONE, c);
        }
        Poly { terms }
    }

    pub fn var(index: usize) -> Self {
        let mut terms = FxHashMap::default();
        terms.insert(Monomial::var(index), Rational::one());
        Poly { terms }
    }

    pub fn coefficient(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms sorted by monomial.
    pub fn sorted_terms(&self) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<(Monomial, Rational)> = self
            .terms
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        v.sort_unstable_by_key(|(m, _)| *m);
        v
    }

    /// Evaluates at integer or rational values, one per variable index.
    pub fn evaluate(&self, values: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.exponents().into_iter().fold(c.clone(), |acc, (v, e)| {
                    (0..e).fold(acc, |a, _| &a * &values[v])
                })
            })
            .sum()
    }
}

impl Coefficient for Poly {
    fn zero() -> Self {
        Poly::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.values().all(Rational::is_zero)
    }

    fn add_product(&mut self, a: &Self, b: &Self, sign: i32) {
        for (ma, ca) in &a.terms {
            if ca.is_zero() {
                continue;
            }
            for (mb, cb) in &b.terms {
                if cb.is_zero() {
                    continue;
                }
                let m = ma
                    .checked_mul(*mb)
                    .expect("polynomial degree exceeds monomial packing");
                self.terms
                    .entry(m)
                    .or_insert_with(Rational::zero)
                    .add_product(ca, cb, sign);
            }
        }
    }

    fn negated(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{:?}", m.exponents())?;
        }
        Ok(())
    }
}
