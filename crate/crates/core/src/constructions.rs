//! New Hom-algebras from old ones, and morphism checks.

use crate::algebra::{HomAlgebra, StructureTensor};
use crate::element::LinearMap;
use crate::error::{AlgebraError, Result};
use crate::report::{sweep, CheckReport, Domain};
use crate::scalar::Scalar;

/// Largest `n` accepted by [`derived_algebra`].
pub const MAX_DERIVED_DEPTH: u32 = 8;

fn rebuild(a: &HomAlgebra, name: String, mu: StructureTensor, alpha: LinearMap) -> HomAlgebra {
    // A non-multiplicative input stays flagged rather than rejected.
    HomAlgebra::with_options(name, a.basis().to_vec(), mu, alpha, !a.is_multiplicative())
        .expect("construction preserves well-formedness")
}

/// `A⁻ = (A, μ − μ∘τ, α)`.
pub fn commutator_algebra(a: &HomAlgebra) -> HomAlgebra {
    let mu = StructureTensor::from_products(a.dim(), |i, j| {
        &a.basis_product(i, j) - &a.basis_product(j, i)
    });
    rebuild(a, format!("{}-minus", a.name()), mu, a.alpha().clone())
}

/// `A⁺ = (A, ½(μ + μ∘τ), α)`.
pub fn plus_algebra(a: &HomAlgebra) -> HomAlgebra {
    let half = Scalar::new(1, 2);
    let mu = StructureTensor::from_products(a.dim(), |i, j| {
        (&a.basis_product(i, j) + &a.basis_product(j, i)).scale(&half)
    });
    rebuild(a, format!("{}-plus", a.name()), mu, a.alpha().clone())
}

/// `(A, μ, Id)`: drops the twisting map.
pub fn forget_twist(a: &HomAlgebra) -> HomAlgebra {
    HomAlgebra::untwisted(
        format!("{}-plain", a.name()),
        a.basis().to_vec(),
        a.mu().clone(),
    )
}

/// Yau twist `A_m = (A, m∘μ, m)` of a plain algebra by one of its endomorphisms.
pub fn yau_twist(a: &HomAlgebra, m: &LinearMap) -> Result<HomAlgebra> {
    if !a.alpha().is_identity() {
        return Err(AlgebraError::AlreadyTwisted);
    }
    let report = is_algebra_morphism(a, a, m)?;
    if !report.holds {
        return Err(AlgebraError::NotAMorphism(Box::new(report)));
    }
    let twisted = HomAlgebra::new(
        format!("{}-twisted", a.name()),
        a.basis().to_vec(),
        a.mu().compose_left(m),
        m.clone(),
    );
    match twisted {
        Ok(t) => Ok(t),
        Err(AlgebraError::NotMultiplicative { i, j }) => Err(AlgebraError::Inconsistent(format!(
            "twist by a verified morphism is not multiplicative at ({i}, {j})"
        ))),
        Err(e) => Err(e),
    }
}

/// `Aⁿ = (A, α^(2ⁿ−1)∘μ, α^(2ⁿ))`.
pub fn derived_algebra(a: &HomAlgebra, n: u32) -> Result<HomAlgebra> {
    if n > MAX_DERIVED_DEPTH {
        return Err(AlgebraError::DerivedTooDeep(n));
    }
    if n == 0 {
        return Ok(a.clone());
    }
    let power = 1u64 << n;
    let mu = a.mu().compose_left(&a.alpha().pow(power - 1));
    let alpha = a.alpha().pow(power);
    Ok(rebuild(a, format!("{}-derived{n}", a.name()), mu, alpha))
}

/// Checks `m∘α_src = α_dst∘m` on basis vectors and
/// `μ_dst(m eᵢ, m eⱼ) = m(μ_src(eᵢ, eⱼ))` on basis pairs.
///
/// Witness laws are `morphism-alpha` (one index) and `morphism-product` (two).
pub fn is_algebra_morphism(src: &HomAlgebra, dst: &HomAlgebra, m: &LinearMap) -> Result<CheckReport> {
    let dim = src.dim();
    for found in [dst.dim(), m.dim()] {
        if found != dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: dim,
                found,
            });
        }
    }
    let multiplicative = src.is_multiplicative() && dst.is_multiplicative();
    let images: Vec<_> = (0..dim).map(|j| m.image_of_basis(j)).collect();

    let mut parts = Vec::new();
    if !(src.alpha().is_identity() && dst.alpha().is_identity()) {
        let (w, n) = sweep("morphism-alpha", Domain::full(dim, 1), |t| {
            let left = m.apply_unchecked(&src.al(&src.e(t[0])));
            let right = dst.al(&images[t[0]]);
            &left - &right
        });
        parts.push(report_from("morphism-alpha", w, n, multiplicative));
    }
    let (w, n) = sweep("morphism-product", Domain::full(dim, 2), |t| {
        let left = dst.mul(&images[t[0]], &images[t[1]]);
        let right = m.apply_unchecked(&src.basis_product(t[0], t[1]));
        &left - &right
    });
    parts.push(report_from("morphism-product", w, n, multiplicative));
    Ok(CheckReport::combine("algebra-morphism", parts, multiplicative))
}

fn report_from(
    id: &str,
    witness: Option<crate::report::Witness>,
    n: u64,
    multiplicative: bool,
) -> CheckReport {
    CheckReport {
        identity_id: id.to_string(),
        holds: witness.is_none(),
        witness,
        tuples_checked: n,
        multiplicative,
        cross_checks: Vec::new(),
    }
}
