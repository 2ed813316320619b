use crate::blade::{binomial, binomial_signed, subsets, Blade};
use crate::exterior::{contract_into_basis, interior, interior_basis, wedge, Multivector};

use super::{CriterionKind, CriterionReport, Witness};

/// First basis covector `e^S` (lexicographic) of grade `q` for which
/// `equation(S)` is nonzero, with its first nonzero component.
fn first_failure(
    n: usize,
    q: usize,
    mut equation: impl FnMut(Blade) -> Multivector,
) -> Option<Witness> {
    subsets(n, q).find_map(|s| {
        let out = equation(s);
        out.terms()
            .first()
            .map(|(component, value)| Witness::Basis {
                covector: s,
                component: *component,
                value: value.clone(),
            })
    })
}

/// `i(Φ)P ∧ P = 0` for every `(s−1)`-covector `Φ`.
pub fn classical_pluecker(p: &Multivector) -> CriterionReport {
    wedge_form(p, CriterionKind::Classical, 1)
}

/// `i(Ψ)P ∧ P = 0` for every `(s−2)`-covector `Ψ`.
pub fn improved_pluecker(p: &Multivector) -> CriterionReport {
    wedge_form(p, CriterionKind::Improved, 2)
}

fn wedge_form(p: &Multivector, kind: CriterionKind, drop: usize) -> CriterionReport {
    let (n, s) = (p.dim(), p.grade());
    if s < drop.max(1) {
        return CriterionReport::vacuous(kind);
    }
    let q = s - drop;
    let equations = binomial(n, q) * binomial(n, s + drop);
    let witness = first_failure(n, q, |sub| {
        wedge(&interior_basis(sub, p), p).expect("same space")
    });
    CriterionReport::exact(kind, equations, witness)
}

/// `i(i_P Ψ)P = 0` for every `(s+1)`-covector `Ψ`.
pub fn dual_pluecker(p: &Multivector) -> CriterionReport {
    contraction_form(p, CriterionKind::Dual, 1)
}

/// `i(i_P Ψ)P = 0` for every `(s+2)`-covector `Ψ`.
pub fn dual_improved_pluecker(p: &Multivector) -> CriterionReport {
    contraction_form(p, CriterionKind::DualImproved, 2)
}

fn contraction_form(p: &Multivector, kind: CriterionKind, extra: usize) -> CriterionReport {
    let (n, s) = (p.dim(), p.grade());
    // i_P Ψ has grade `extra`; it cannot contract anything of lower grade.
    if s < extra {
        return CriterionReport::vacuous(kind);
    }
    let equations = binomial(n, s + extra) * binomial_signed(n, s as isize - extra as isize);
    let witness = first_failure(n, s + extra, |t| {
        interior(&contract_into_basis(p, t), p).expect("grades checked")
    });
    CriterionReport::exact(kind, equations, witness)
}
