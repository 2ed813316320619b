//! Central isotypic projector of `S_{2s}` applied to `P⊗P` and evaluated at
//! a tuple of covectors.
//!
//! For `T = P⊗P` the permuted evaluation `T(ξ_{σ(1)},…,ξ_{σ(2s)})` only
//! depends on the set `A = σ{1..s}` up to sign, so the character-weighted
//! sum collapses to `Σ_A w_λ(A)·f(A)·f(Aᶜ)` with `f(A) = ⟨∧_{i∈A} ξ_i, P⟩`.
//! The weights `w_λ` come from per-class signed counts that are computed
//! once per `(2s, s)` and cached.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rand::Rng;

use crate::blade::sort_sign;
use crate::error::{Error, Result};
use crate::exterior::{pairing, wedge_all, Multivector};
use crate::random::random_vector;
use crate::rational::Rational;

use super::characters::sym_character;
use super::dims::standard_tableaux_count;
use super::shape::{factorial, Partition, TwoColumnShape};

/// Largest `2s` the probe enumerates permutations for.
pub const MAX_PROBE_CELLS: usize = 10;

/// `counts[A][class]`: signed number of permutations of the given class
/// sending the first `s` slots onto the set `A` (bitmask over `0..m`).
struct ClassCounts {
    classes: Vec<Partition>,
    counts: HashMap<u32, Vec<i64>>,
}

fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let mut seen = 0u32;
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen & (1 << start) != 0 {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while seen & (1 << i) == 0 {
            seen |= 1 << i;
            i = perm[i];
            len += 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

fn build_counts(m: usize, s: usize) -> ClassCounts {
    let classes = Partition::all(m);
    let class_index: HashMap<Vec<usize>, usize> = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.rows().to_vec(), i))
        .collect();
    let mut counts: HashMap<u32, Vec<i64>> = HashMap::new();
    let mut record = |perm: &[usize]| {
        let sign = sort_sign(&perm[..s]).unwrap() * sort_sign(&perm[s..]).unwrap();
        let mask = perm[..s].iter().fold(0u32, |acc, &i| acc | (1 << i));
        let class = class_index[&cycle_type(perm)];
        counts.entry(mask).or_insert_with(|| vec![0; classes.len()])[class] += sign as i64;
    };
    // Heap's algorithm.
    let mut perm: Vec<usize> = (0..m).collect();
    let mut c = vec![0usize; m];
    record(&perm);
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            record(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    ClassCounts { classes, counts }
}

type WeightTable = Arc<Vec<(u32, i64)>>;
type Cache<K, V> = OnceLock<Mutex<HashMap<K, V>>>;

/// `w_λ(A)` for every `A` with a nonzero weight, cached per `(m, s, λ)`.
fn weights(m: usize, s: usize, shape: &Partition) -> Result<WeightTable> {
    static COUNTS: Cache<(usize, usize), Arc<ClassCounts>> = OnceLock::new();
    static WEIGHTS: Cache<(usize, usize, Partition), WeightTable> = OnceLock::new();

    let key = (m, s, shape.clone());
    if let Some(w) = WEIGHTS
        .get_or_init(Default::default)
        .lock()
        .unwrap()
        .get(&key)
    {
        return Ok(w.clone());
    }
    let counts = {
        let mut cache = COUNTS.get_or_init(Default::default).lock().unwrap();
        cache
            .entry((m, s))
            .or_insert_with(|| Arc::new(build_counts(m, s)))
            .clone()
    };
    let chars = counts
        .classes
        .iter()
        .map(|mu| sym_character(shape, mu))
        .collect::<Result<Vec<_>>>()?;
    let mut table: Vec<(u32, i64)> = counts
        .counts
        .iter()
        .map(|(&mask, per_class)| (mask, per_class.iter().zip(&chars).map(|(c, x)| c * x).sum()))
        .filter(|&(_, w)| w != 0)
        .collect();
    table.sort_unstable();
    let table = Arc::new(table);
    WEIGHTS
        .get_or_init(Default::default)
        .lock()
        .unwrap()
        .insert(key, table.clone());
    Ok(table)
}

fn check_probe_inputs(
    p: &Multivector,
    shape: &TwoColumnShape,
    probes: &[Multivector],
) -> Result<()> {
    let m = 2 * p.grade();
    if p.is_dual() {
        return Err(Error::VarianceMismatch {
            expected: "vector",
            found: "covector",
        });
    }
    if shape.cells() != m {
        return Err(Error::InvalidParameter(format!(
            "{shape} has {} cells but P⊗P has {m} slots",
            shape.cells()
        )));
    }
    if m > MAX_PROBE_CELLS {
        return Err(Error::InvalidParameter(format!(
            "isotypic probes support at most {MAX_PROBE_CELLS} slots, got {m}"
        )));
    }
    if probes.len() != m {
        return Err(Error::InvalidParameter(format!(
            "expected {m} probe covectors, got {}",
            probes.len()
        )));
    }
    for (i, xi) in probes.iter().enumerate() {
        if !xi.is_dual() || xi.grade() != 1 || xi.dim() != p.dim() {
            return Err(Error::InvalidParameter(format!(
                "probe {} must be a covector of dimension {}",
                i + 1,
                p.dim()
            )));
        }
    }
    Ok(())
}

/// Value of the `shape`-isotypic component of `P⊗P` at `(ξ_1,…,ξ_{2s})`.
/// Nonzero certifies that the component is nonzero.
pub fn isotypic_probe(
    p: &Multivector,
    shape: &TwoColumnShape,
    probes: &[Multivector],
) -> Result<Rational> {
    check_probe_inputs(p, shape, probes)?;
    let s = p.grade();
    let m = 2 * s;
    let lambda = shape.partition();
    let table = weights(m, s, &lambda)?;
    let full = (1u32 << m) - 1;
    let mut f_cache: HashMap<u32, Rational> = HashMap::new();
    let mut f = |mask: u32| -> Result<Rational> {
        if let Some(v) = f_cache.get(&mask) {
            return Ok(v.clone());
        }
        let picked = (0..m).filter(|i| mask & (1 << i) != 0).map(|i| &probes[i]);
        let v = pairing(&wedge_all(p.dim(), true, picked)?, p)?;
        f_cache.insert(mask, v.clone());
        Ok(v)
    };
    let mut total = Rational::zero();
    for &(mask, w) in table.iter() {
        let a = f(mask)?;
        if a.is_zero() {
            continue;
        }
        let b = f(full & !mask)?;
        total += &(&a * &b * Rational::from_integer(w));
    }
    let scale =
        Rational::from_bigints(standard_tableaux_count(&lambda).into(), factorial(m).into());
    Ok(total * scale)
}

/// A probe tuple with a nonzero isotypic value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeHit {
    /// 1-based number of the attempt that succeeded.
    pub attempt: usize,
    pub probes: Vec<Multivector>,
    pub value: Rational,
}

/// Draws up to `max_probes` random integer probe tuples from `[-bound, bound]`
/// and returns the first with a nonzero value.
pub fn find_nonzero_probe(
    p: &Multivector,
    shape: &TwoColumnShape,
    rng: &mut impl Rng,
    max_probes: usize,
    bound: i64,
) -> Result<Option<ProbeHit>> {
    for attempt in 1..=max_probes {
        let probes = (0..shape.cells())
            .map(|_| random_vector(rng, p.dim(), bound, true))
            .collect::<Result<Vec<_>>>()?;
        let value = isotypic_probe(p, shape, &probes)?;
        if !value.is_zero() {
            return Ok(Some(ProbeHit {
                attempt,
                probes,
                value,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_nonzero_multivector, random_simple};
    use crate::testing::{mv, rng};

    fn y(a: usize, b: usize) -> TwoColumnShape {
        TwoColumnShape::new(a, b).unwrap()
    }

    fn random_probes(g: &mut impl Rng, n: usize, m: usize) -> Vec<Multivector> {
        (0..m)
            .map(|_| random_vector(g, n, 5, true).unwrap())
            .collect()
    }

    #[test]
    fn components_sum_to_the_tensor() {
        // Σ over all two-column shapes of the projections is the identity,
        // since P⊗P has no other components.
        let mut g = rng(4);
        for (n, s) in [(4, 2), (5, 2), (6, 3)] {
            let p = random_nonzero_multivector(&mut g, n, s, 4).unwrap();
            let probes = random_probes(&mut g, n, 2 * s);
            let total: Rational = (0..=s)
                .map(|j| isotypic_probe(&p, &y(s + j, s - j), &probes).unwrap())
                .sum();
            let first = wedge_all(n, true, &probes[..s]).unwrap();
            let second = wedge_all(n, true, &probes[s..]).unwrap();
            let direct = pairing(&first, &p).unwrap() * pairing(&second, &p).unwrap();
            assert_eq!(total, direct);
        }
    }

    #[test]
    fn shapes_outside_two_columns_vanish() {
        for rows in [vec![3, 1], vec![4], vec![3, 3], vec![4, 1, 1]] {
            let lambda = Partition::new(rows).unwrap();
            let m = lambda.size();
            let table = weights(m, m / 2, &lambda).unwrap();
            assert!(table.is_empty(), "{lambda}: {table:?}");
        }
    }

    #[test]
    fn simple_has_no_s_plus_two_component() {
        let mut g = rng(12);
        for (n, s) in [(5, 2), (6, 3), (8, 4)] {
            let p = random_simple(&mut g, n, s, 6).unwrap();
            for _ in 0..5 {
                let probes = random_probes(&mut g, n, 2 * s);
                assert!(isotypic_probe(&p, &y(s + 2, s - 2), &probes)
                    .unwrap()
                    .is_zero());
            }
            let hit = find_nonzero_probe(&p, &y(s, s), &mut g, 50, 10).unwrap();
            assert!(hit.is_some());
        }
    }

    #[test]
    fn v_wedge_q_has_s_plus_two_component() {
        let p = mv(7, 4, &[(&[1, 2, 3, 4], 1), (&[1, 5, 6, 7], 1)]);
        let mut g = rng(1);
        let hit = find_nonzero_probe(&p, &y(6, 2), &mut g, 50, 10)
            .unwrap()
            .unwrap();
        assert!(!hit.value.is_zero());
        assert_eq!(
            isotypic_probe(&p, &y(6, 2), &hit.probes).unwrap(),
            hit.value
        );
    }

    #[test]
    fn input_errors() {
        let p = mv(4, 2, &[(&[1, 2], 1)]);
        let mut g = rng(0);
        let probes = random_probes(&mut g, 4, 4);
        assert!(isotypic_probe(&p, &y(3, 2), &probes).is_err());
        assert!(isotypic_probe(&p, &y(2, 2), &probes[..3]).is_err());
        let primal: Vec<Multivector> = probes.iter().cloned().map(|x| x.into_dual(false)).collect();
        assert!(isotypic_probe(&p, &y(2, 2), &primal).is_err());
        assert!(isotypic_probe(&p, &y(2, 2), &probes).is_ok());
    }
}
