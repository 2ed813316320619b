//! Sparse exterior-algebra kernels, generic over the coefficient ring.
//!
//! The same wedge and contraction loops serve rational multivectors and the
//! polynomial-coefficient multivectors used by symbolic identity testing.

use rustc_hash::FxHashMap;

use crate::blade::{shuffle_sign, Blade};
use crate::rational::Rational;

pub trait Coefficient: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// `self += sign * a * b`
    fn add_product(&mut self, a: &Self, b: &Self, sign: i32);
    fn negated(&self) -> Self;
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Rational::zero()
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn add_product(&mut self, a: &Self, b: &Self, sign: i32) {
        let p = a * b;
        if sign < 0 {
            *self -= &p;
        } else {
            *self += &p;
        }
    }

    fn negated(&self) -> Self {
        -self
    }
}

pub type Terms<C> = Vec<(Blade, C)>;

struct Accumulator<C> {
    map: FxHashMap<Blade, C>,
}

impl<C: Coefficient> Accumulator<C> {
    fn new() -> Self {
        Self {
            map: FxHashMap::default(),
        }
    }

    fn add(&mut self, key: Blade, a: &C, b: &C, sign: i32) {
        self.map
            .entry(key)
            .or_insert_with(C::zero)
            .add_product(a, b, sign);
    }

    fn finish(self) -> Terms<C> {
        let mut out: Terms<C> = self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_unstable_by_key(|x| x.0);
        out
    }
}

/// Exterior product of two sparse term lists.
pub fn wedge<C: Coefficient>(a: &[(Blade, C)], b: &[(Blade, C)]) -> Terms<C> {
    let mut acc = Accumulator::new();
    for (s, x) in a {
        for (t, y) in b {
            if let Some(sign) = shuffle_sign(*s, *t) {
                acc.add(s.union(*t), x, y, sign);
            }
        }
    }
    acc.finish()
}

/// Contraction of `target` by `by`, where basis elements act as
/// `e_A ⌟ e_S = sign(A, S∖A) e_{S∖A}` for `A ⊆ S` and vanish otherwise.
///
/// This is both `i(Φ)P` (covector into vector) and `i_P Ψ` (vector into
/// covector); the two agree because the pairing is the identity on basis
/// subsets.
pub fn contract<C: Coefficient>(by: &[(Blade, C)], target: &[(Blade, C)]) -> Terms<C> {
    let mut acc = Accumulator::new();
    for (a, x) in by {
        for (s, y) in target {
            if a.is_subset_of(*s) {
                let rest = s.difference(*a);
                let sign = shuffle_sign(*a, rest).expect("disjoint by construction");
                acc.add(rest, x, y, sign);
            }
        }
    }
    acc.finish()
}

/// Contraction by a single basis blade with unit coefficient.
pub fn contract_basis<C: Coefficient>(by: Blade, target: &[(Blade, C)]) -> Terms<C> {
    let mut out: Terms<C> = target
        .iter()
        .filter(|(s, _)| by.is_subset_of(*s))
        .map(|(s, y)| {
            let rest = s.difference(by);
            let sign = shuffle_sign(by, rest).expect("disjoint by construction");
            (rest, if sign < 0 { y.negated() } else { y.clone() })
        })
        .collect();
    out.sort_unstable_by_key(|x| x.0);
    out
}
