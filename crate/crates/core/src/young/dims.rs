use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::blade::{binomial, binomial_signed};
use crate::error::{Error, Result};

use super::shape::{factorial, Partition, TwoColumnShape};

/// `(arm + leg + 1)` for every cell, row by row.
fn hooks(shape: &Partition) -> impl Iterator<Item = u128> + '_ {
    let cols = shape.conjugate();
    shape.rows().iter().enumerate().flat_map(move |(i, &len)| {
        let cols = cols.clone();
        (0..len).map(move |j| (len - j - 1 + cols.rows()[j] - i - 1 + 1) as u128)
    })
}

/// Dimension of the `GL_n` irreducible with row lengths `shape`:
/// `Π (n + content) / Π hook`.
pub fn dim_gl(n: usize, shape: &Partition) -> u128 {
    let mut num = BigInt::from(1);
    for (i, &len) in shape.rows().iter().enumerate() {
        for j in 0..len {
            num *= n as i64 + j as i64 - i as i64;
        }
    }
    if num.is_zero() || num.is_negative() {
        return 0;
    }
    let den: BigInt = hooks(shape).map(BigInt::from).product();
    (num / den).to_u128().expect("dimension fits in u128")
}

pub fn dim_y(n: usize, shape: &TwoColumnShape) -> u128 {
    dim_gl(n, &shape.partition())
}

/// Number of standard tableaux, `m! / Π hook`.
pub fn standard_tableaux_count(shape: &Partition) -> u128 {
    factorial(shape.size()) / hooks(shape).product::<u128>()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Identity {
    pub name: &'static str,
    pub lhs: u128,
    pub rhs: u128,
}

impl Identity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarStarReport {
    pub n: usize,
    pub s: usize,
    /// `(Y^{s+j,s−j}, dim)` for `j = 0..=s`.
    pub components: Vec<(TwoColumnShape, u128)>,
    pub identities: Vec<Identity>,
}

impl StarStarReport {
    pub fn passed(&self) -> bool {
        self.identities.iter().all(Identity::holds)
    }
}

/// Checks the splitting of `Λ^s⊗Λ^s` into the `Y^{s+j,s−j}` and of its
/// symmetric and alternating squares into the even and odd `j`.
pub fn verify_star_star(n: usize, s: usize) -> Result<StarStarReport> {
    if s == 0 || s > n {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= grade <= dimension, got dimension {n}, grade {s}"
        )));
    }
    let components: Vec<(TwoColumnShape, u128)> = (0..=s)
        .map(|j| {
            let y = TwoColumnShape::new(s + j, s - j).expect("s+j >= s-j");
            (y, dim_y(n, &y))
        })
        .collect();
    let sum_from = |start: usize, step: usize| -> u128 {
        components
            .iter()
            .skip(start)
            .step_by(step)
            .map(|c| c.1)
            .sum()
    };
    let c = binomial(n, s);
    let si = s as isize;
    let identities = vec![
        Identity {
            name: "full",
            lhs: sum_from(0, 1),
            rhs: c * c,
        },
        Identity {
            name: "symmetric",
            lhs: sum_from(0, 2),
            rhs: c * (c + 1) / 2,
        },
        Identity {
            name: "alternating",
            lhs: sum_from(1, 2),
            rhs: c * (c - 1) / 2,
        },
        Identity {
            name: "j>=1",
            lhs: sum_from(1, 1),
            rhs: binomial(n, s + 1) * binomial_signed(n, si - 1),
        },
        Identity {
            name: "j>=2",
            lhs: sum_from(2, 1),
            rhs: binomial(n, s + 2) * binomial_signed(n, si - 2),
        },
    ];
    Ok(StarStarReport {
        n,
        s,
        components,
        identities,
    })
}
