//! Irreducible characters of `S_m` by the Murnaghan–Nakayama rule on
//! beta-sets (abacus positions): removing a rim hook of length `r` moves one
//! bead from `b` to `b − r`, with sign `(−1)^{beads jumped}`.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::shape::Partition;

fn beta_set(shape: &Partition) -> Vec<usize> {
    let len = shape.len();
    shape
        .rows()
        .iter()
        .enumerate()
        .map(|(i, &r)| r + len - 1 - i)
        .collect()
}

fn mn(beta: &[usize], parts: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&r, rest)) = parts.split_first() else {
        return 1;
    };
    let key = (beta.to_vec(), parts.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.to_vec();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&next, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// `χ_shape` evaluated on the class with cycle type `class`.
pub fn sym_character(shape: &Partition, class: &Partition) -> Result<i64> {
    if shape.size() != class.size() {
        return Err(Error::InvalidParameter(format!(
            "shape {shape} and class {class} are partitions of different sizes"
        )));
    }
    Ok(mn(&beta_set(shape), class.rows(), &mut HashMap::new()))
}

/// Sign of any permutation with cycle type `class`.
pub fn class_sign(class: &Partition) -> i64 {
    if (class.size() - class.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}
