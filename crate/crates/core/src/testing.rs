//! Shared helpers for unit tests.

use proptest::prelude::*;

use crate::blade::{subsets, Blade};
use crate::exterior::Multivector;
use crate::rational::Rational;

pub use crate::random::{rng, SeededRng};

/// Primal multivector from `(indices, coefficient)` pairs.
pub fn mv(dim: usize, grade: usize, terms: &[(&[usize], i64)]) -> Multivector {
    Multivector::from_terms(
        dim,
        grade,
        false,
        terms.iter().map(|(idx, c)| {
            (
                Blade::from_indices(idx).unwrap(),
                Rational::from_integer(*c),
            )
        }),
    )
    .unwrap()
}

/// Dense random multivector with small integer coefficients.
pub fn random_multivector(rng: &mut SeededRng, n: usize, s: usize, dual: bool) -> Multivector {
    crate::random::random_multivector(rng, n, s, 4, dual).unwrap()
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        3 => (-5i64..=5).prop_map(Rational::from_integer),
        1 => (-9i64..=9, 1i64..=6).prop_map(|(p, q)| Rational::new(p, q)),
    ]
}

/// Sparse multivector in `Λ^k` of an `n`-dimensional space.
pub fn arb_multivector(n: usize, k: usize, dual: bool) -> impl Strategy<Value = Multivector> {
    let blades: Vec<Blade> = subsets(n, k).collect();
    let len = blades.len();
    proptest::collection::vec((0..len, arb_rational()), 0..=len.min(6)).prop_map(move |picks| {
        let mut terms: Vec<(Blade, Rational)> = Vec::new();
        for (i, c) in picks {
            if !terms.iter().any(|(b, _)| *b == blades[i]) {
                terms.push((blades[i], c));
            }
        }
        Multivector::from_terms(n, k, dual, terms).unwrap()
    })
}
