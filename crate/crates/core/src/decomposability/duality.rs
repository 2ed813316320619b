use crate::error::{Error, Result};
use crate::exterior::{contract_into, interior, pairing, wedge, Multivector};

/// Checks `⟨P∧i(Φ)P, Ψ⟩ = (−1)^{s−1} ⟨i(i_P Ψ)P, Φ⟩` for an `s`-vector `P`,
/// an `(s−1)`-covector `Φ` and an `(s+1)`-covector `Ψ`.
///
/// Holds identically under this crate's sign conventions.
pub fn duality_identity_check(
    p: &Multivector,
    phi: &Multivector,
    psi: &Multivector,
) -> Result<bool> {
    let s = p.grade();
    if s == 0 {
        return Err(Error::GradeMismatch(
            "the identity needs grade at least 1".into(),
        ));
    }
    if phi.grade() + 1 != s || psi.grade() != s + 1 {
        return Err(Error::GradeMismatch(format!(
            "need covectors of grades {} and {}, got {} and {}",
            s - 1,
            s + 1,
            phi.grade(),
            psi.grade()
        )));
    }
    let lhs = pairing(psi, &wedge(p, &interior(phi, p)?)?)?;
    let rhs = pairing(phi, &interior(&contract_into(p, psi)?, p)?)?;
    let rhs = if (s - 1).is_multiple_of(2) { rhs } else { -rhs };
    Ok(lhs == rhs)
}
