//! Sparse exterior algebra over the rationals.
//!
//! A [`Multivector`] is a homogeneous element of `Λ^k V` (or of `Λ^k V*` when
//! its `dual` flag is set) stored as a sorted list of basis subsets with
//! nonzero coefficients.
//!
//! Conventions used throughout the crate:
//!
//! * `⟨e^S, e_T⟩ = δ_{S,T}` with no factorial normalization.
//! * `i(Φ)P` is defined by `⟨i(Φ)P, Θ⟩ = ⟨P, Φ∧Θ⟩`, which gives
//!   `i(e^A) e_S = sign(A, S∖A) e_{S∖A}` for `A ⊆ S`.
//! * `i_P Ψ` is defined by `⟨i_P Ψ, Q⟩ = ⟨Ψ, P∧Q⟩`, with the same basis rule.
//! * Consequently `i(Φ') i(Φ) P = i(Φ∧Φ') P`.

use std::fmt;

use crate::blade::{subsets, Blade, MAX_DIM};
use crate::error::{Error, Result};
use crate::kernel;
use crate::linalg::{self, Row};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    dim: usize,
    grade: usize,
    dual: bool,
    terms: Vec<(Blade, Rational)>,
}

/// Alias used where an argument is expected to carry the dual flag.
pub type DualMultivector = Multivector;

fn variance(dual: bool) -> &'static str {
    if dual {
        "covector"
    } else {
        "vector"
    }
}

impl Multivector {
    fn check_dim(dim: usize) -> Result<()> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::InvalidParameter(format!(
                "dimension {dim} outside 1..={MAX_DIM}"
            )));
        }
        Ok(())
    }

    pub(crate) fn from_sorted_terms(
        dim: usize,
        grade: usize,
        dual: bool,
        terms: Vec<(Blade, Rational)>,
    ) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms
            .iter()
            .all(|(b, c)| b.grade() == grade && !c.is_zero()));
        Multivector {
            dim,
            grade,
            dual,
            terms,
        }
    }

    /// The zero element of `Λ^grade V` (or `V*`).
    pub fn zero(dim: usize, grade: usize, dual: bool) -> Self {
        Multivector {
            dim,
            grade,
            dual,
            terms: Vec::new(),
        }
    }

    pub fn scalar(dim: usize, value: Rational, dual: bool) -> Self {
        let terms = if value.is_zero() {
            Vec::new()
        } else {
            vec![(Blade::EMPTY, value)]
        };
        Multivector {
            dim,
            grade: 0,
            dual,
            terms,
        }
    }

    /// Builds a multivector from `(blade, coefficient)` pairs.
    ///
    /// Repeated blades and blades of the wrong grade or outside `1..=dim` are
    /// rejected; zero coefficients are dropped.
    pub fn from_terms(
        dim: usize,
        grade: usize,
        dual: bool,
        terms: impl IntoIterator<Item = (Blade, Rational)>,
    ) -> Result<Self> {
        Self::check_dim(dim)?;
        if grade > dim {
            return Err(Error::InvalidParameter(format!(
                "grade {grade} exceeds dimension {dim}"
            )));
        }
        let mut out: Vec<(Blade, Rational)> = Vec::new();
        for (b, c) in terms {
            if b.grade() != grade {
                return Err(Error::GradeMismatch(format!(
                    "term {b} has {} indices, expected {grade}",
                    b.grade()
                )));
            }
            if b.max_index() > dim {
                return Err(Error::InvalidParameter(format!(
                    "term {b} has an index above dimension {dim}"
                )));
            }
            out.push((b, c));
        }
        out.sort_by_key(|x| x.0);
        if let Some(w) = out.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidParameter(format!(
                "duplicate index set {}",
                w[0].0
            )));
        }
        out.retain(|(_, c)| !c.is_zero());
        Ok(Multivector {
            dim,
            grade,
            dual,
            terms: out,
        })
    }

    /// Basis element `e_{indices}` (1-based, strictly increasing).
    pub fn basis(dim: usize, indices: &[usize]) -> Result<Self> {
        let b = Blade::from_indices(indices)?;
        Self::from_terms(dim, indices.len(), false, [(b, Rational::one())])
    }

    /// Basis covector `e^{indices}`.
    pub fn basis_covector(dim: usize, indices: &[usize]) -> Result<Self> {
        Ok(Self::basis(dim, indices)?.into_dual(true))
    }

    /// Grade-1 element from dense coordinates.
    pub fn vector(coords: &[Rational]) -> Result<Self> {
        Self::from_terms(
            coords.len(),
            1,
            false,
            coords
                .iter()
                .enumerate()
                .map(|(i, c)| (Blade::single(i + 1), c.clone())),
        )
    }

    pub fn vector_from_integers(coords: &[i64]) -> Result<Self> {
        let q: Vec<Rational> = coords.iter().map(|&x| Rational::from_integer(x)).collect();
        Self::vector(&q)
    }

    pub fn covector(coords: &[Rational]) -> Result<Self> {
        Ok(Self::vector(coords)?.into_dual(true))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms sorted lexicographically by index set.
    pub fn terms(&self) -> &[(Blade, Rational)] {
        &self.terms
    }

    pub fn coefficient(&self, blade: Blade) -> Rational {
        self.terms
            .binary_search_by(|(b, _)| b.cmp(&blade))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Same coefficients with the dual flag replaced.
    pub fn into_dual(mut self, dual: bool) -> Self {
        self.dual = dual;
        self
    }

    /// Dense coordinates of a grade-1 element.
    pub fn to_dense(&self) -> Row {
        let mut out = vec![Rational::zero(); self.dim];
        for (b, c) in &self.terms {
            if b.grade() == 1 {
                out[b.max_index() - 1] = c.clone();
            }
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.dim, self.grade, self.dual);
        }
        let terms = self.terms.iter().map(|(b, c)| (*b, c * factor)).collect();
        Self::from_sorted_terms(self.dim, self.grade, self.dual, terms)
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        if self.dual != other.dual {
            return Err(Error::VarianceMismatch {
                expected: variance(self.dual),
                found: variance(other.dual),
            });
        }
        Ok(())
    }

    fn combine(&self, other: &Self, sign: i32) -> Result<Self> {
        self.check_same_space(other)?;
        if self.grade != other.grade {
            return Err(Error::GradeMismatch(format!(
                "cannot add grades {} and {}",
                self.grade, other.grade
            )));
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
            match ord {
                std::cmp::Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let (b, c) = &other.terms[j];
                    out.push((*b, c.clone().signed(sign)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1.clone().signed(sign);
                    if !c.is_zero() {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(Self::from_sorted_terms(
            self.dim, self.grade, self.dual, out,
        ))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1)
    }

    /// All coefficients multiplied by the least common denominator, so that
    /// the result has integer coefficients and the same projective class.
    pub fn clear_denominators(&self) -> Self {
        let lcm = crate::rational::common_denominator(self.terms.iter().map(|(_, c)| c));
        self.scale(&Rational::from(lcm))
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = if self.dual { "e^" } else { "e_" };
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if b.is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}·{sym}{b}")?;
            }
        }
        Ok(())
    }
}

/// Exterior product. Both operands must live in the same space; when
/// `j + k > dim` the result is the zero element of grade `j + k`.
pub fn wedge(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.check_same_space(b)?;
    let grade = a.grade + b.grade;
    let terms = kernel::wedge(&a.terms, &b.terms);
    Ok(Multivector::from_sorted_terms(a.dim, grade, a.dual, terms))
}

/// Left-to-right wedge of a sequence of same-space elements.
pub fn wedge_all<'a>(
    dim: usize,
    dual: bool,
    items: impl IntoIterator<Item = &'a Multivector>,
) -> Result<Multivector> {
    items
        .into_iter()
        .try_fold(Multivector::scalar(dim, Rational::one(), dual), |acc, x| {
            wedge(&acc, x)
        })
}

/// `⟨Ψ, P⟩` for a covector `Ψ` and vector `P` of equal grade.
pub fn pairing(psi: &Multivector, p: &Multivector) -> Result<Rational> {
    check_covector_vector(psi, p)?;
    if psi.grade != p.grade {
        return Err(Error::GradeMismatch(format!(
            "pairing grade {} with grade {}",
            psi.grade, p.grade
        )));
    }
    let mut acc = Rational::zero();
    let (mut i, mut j) = (0, 0);
    while i < psi.terms.len() && j < p.terms.len() {
        match psi.terms[i].0.cmp(&p.terms[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &(&psi.terms[i].1 * &p.terms[j].1);
                i += 1;
                j += 1;
            }
        }
    }
    Ok(acc)
}

fn check_covector_vector(cov: &Multivector, vec: &Multivector) -> Result<()> {
    if cov.dim != vec.dim {
        return Err(Error::DimensionMismatch {
            left: cov.dim,
            right: vec.dim,
        });
    }
    if !cov.dual {
        return Err(Error::VarianceMismatch {
            expected: "covector",
            found: "vector",
        });
    }
    if vec.dual {
        return Err(Error::VarianceMismatch {
            expected: "vector",
            found: "covector",
        });
    }
    Ok(())
}

/// Interior product `i(Φ)P` of a `p`-covector into an `s`-vector.
pub fn interior(phi: &Multivector, p: &Multivector) -> Result<Multivector> {
    check_covector_vector(phi, p)?;
    if phi.grade > p.grade {
        return Err(Error::GradeMismatch(format!(
            "cannot contract a {}-vector by a {}-covector",
            p.grade, phi.grade
        )));
    }
    let terms = kernel::contract(&phi.terms, &p.terms);
    Ok(Multivector::from_sorted_terms(
        p.dim,
        p.grade - phi.grade,
        false,
        terms,
    ))
}

/// `i(e^S)P` for a basis covector given by its blade.
pub fn interior_basis(s: Blade, p: &Multivector) -> Multivector {
    debug_assert!(!p.dual && s.grade() <= p.grade);
    let terms = kernel::contract_basis(s, &p.terms);
    Multivector::from_sorted_terms(p.dim, p.grade - s.grade(), false, terms)
}

/// `Ψ ↦ i_P Ψ`: contraction of an `m`-covector by an `s`-vector.
pub fn contract_into(p: &Multivector, psi: &Multivector) -> Result<Multivector> {
    check_covector_vector(psi, p)?;
    if psi.grade < p.grade {
        return Err(Error::GradeMismatch(format!(
            "cannot contract a {}-covector by a {}-vector",
            psi.grade, p.grade
        )));
    }
    let terms = kernel::contract(&p.terms, &psi.terms);
    Ok(Multivector::from_sorted_terms(
        p.dim,
        psi.grade - p.grade,
        true,
        terms,
    ))
}

/// `i_P e^T` for a basis covector given by its blade.
pub fn contract_into_basis(p: &Multivector, t: Blade) -> Multivector {
    debug_assert!(!p.dual && t.grade() >= p.grade);
    let unit = [(t, Rational::one())];
    let terms = kernel::contract(&p.terms, &unit);
    Multivector::from_sorted_terms(p.dim, t.grade() - p.grade, true, terms)
}

/// `♯_P(Φ) = i(Φ)P` for an `(s−1)`-covector `Φ`; always a vector.
pub fn sharp(p: &Multivector, phi: &Multivector) -> Result<Multivector> {
    if p.grade == 0 {
        return Err(Error::InvalidParameter(
            "sharp map needs grade at least 1".into(),
        ));
    }
    if phi.grade + 1 != p.grade {
        return Err(Error::GradeMismatch(format!(
            "sharp of a {}-vector needs a {}-covector, got grade {}",
            p.grade,
            p.grade - 1,
            phi.grade
        )));
    }
    interior(phi, p)
}

/// Echelonized basis of `W = Im(♯_P)`, the smallest subspace `U` with
/// `P ∈ Λ^s U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSpace {
    dim: usize,
    basis: Vec<Multivector>,
}

impl SupportSpace {
    pub(crate) fn from_rows(dim: usize, rows: Vec<Row>) -> Self {
        let basis = rows
            .iter()
            .map(|r| Multivector::vector(r).expect("row length equals dimension"))
            .collect();
        SupportSpace { dim, basis }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Basis vectors in reduced row-echelon form.
    pub fn basis(&self) -> &[Multivector] {
        &self.basis
    }

    pub fn rows(&self) -> Vec<Row> {
        self.basis.iter().map(Multivector::to_dense).collect()
    }

    pub fn contains(&self, v: &Multivector) -> bool {
        let mut rows = self.rows();
        rows.push(v.to_dense());
        linalg::rank(&rows) == self.rank()
    }
}

pub fn support_space(p: &Multivector) -> SupportSpace {
    let n = p.dim;
    if p.grade == 0 || p.is_zero() {
        return SupportSpace::from_rows(n, Vec::new());
    }
    let mut rows: Vec<Row> = subsets(n, p.grade - 1)
        .map(|s| interior_basis(s, p))
        .filter(|v| !v.is_zero())
        .map(|v| v.to_dense())
        .collect();
    linalg::rref(&mut rows);
    SupportSpace::from_rows(n, rows)
}
