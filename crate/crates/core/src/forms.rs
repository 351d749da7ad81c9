//! Derived multilinear maps of a Hom-algebra.
//!
//! Each form comes in a checked public version taking arbitrary elements and
//! an unchecked crate-internal version used by the sweeps.

use crate::algebra::HomAlgebra;
use crate::element::Element;
use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;

/// The fixed argument permutations used to state the identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermutationTag {
    /// `(x, y, z) ↦ (z, x, y)`
    Sigma,
    /// `(x, y) ↦ (y, x)`
    Tau,
    /// `(x, y, z) ↦ (x, z, y)`
    Delta,
    /// `(w, x, y, z) ↦ (z, w, x, y)`
    Xi,
    /// `ξ³`: `(w, x, y, z) ↦ (x, y, z, w)`
    Rho,
    /// `(w, x, y, z) ↦ (y, z, w, x)`
    Zeta,
}

impl PermutationTag {
    pub fn arity(self) -> usize {
        match self {
            PermutationTag::Tau => 2,
            PermutationTag::Sigma | PermutationTag::Delta => 3,
            PermutationTag::Xi | PermutationTag::Rho | PermutationTag::Zeta => 4,
        }
    }

    /// Source position for each output slot.
    fn sources(self) -> &'static [usize] {
        match self {
            PermutationTag::Sigma => &[2, 0, 1],
            PermutationTag::Tau => &[1, 0],
            PermutationTag::Delta => &[0, 2, 1],
            PermutationTag::Xi => &[3, 0, 1, 2],
            PermutationTag::Rho => &[1, 2, 3, 0],
            PermutationTag::Zeta => &[2, 3, 0, 1],
        }
    }

    /// Permutes an argument list; `P ∘ π` is `P(π.apply(args))`.
    pub fn apply<T: Clone>(self, args: &[T]) -> Vec<T> {
        assert_eq!(args.len(), self.arity(), "permutation arity mismatch");
        self.sources().iter().map(|&s| args[s].clone()).collect()
    }
}

fn check_all(a: &HomAlgebra, xs: &[&Element]) -> Result<()> {
    for x in xs {
        x.check_dim(a.dim())?;
    }
    Ok(())
}

// ---- unchecked kernels ----

/// `μ(μ(x,y),α(z)) − μ(α(x),μ(y,z))`
pub(crate) fn assoc(a: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Element {
    let left = a.mul(&a.mul(x, y), &a.al(z));
    let right = a.mul(&a.al(x), &a.mul(y, z));
    &left - &right
}

pub(crate) fn jacobian(a: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Element {
    let mut out = a.mul(&a.mul(x, y), &a.al(z));
    out.add_scaled(&Scalar::one(), &a.mul(&a.mul(z, x), &a.al(y)));
    out.add_scaled(&Scalar::one(), &a.mul(&a.mul(y, z), &a.al(x)));
    out
}

pub(crate) fn bracket(a: &HomAlgebra, x: &Element, y: &Element) -> Element {
    &a.mul(x, y) - &a.mul(y, x)
}

pub(crate) fn jordan(a: &HomAlgebra, x: &Element, y: &Element) -> Element {
    (&a.mul(x, y) + &a.mul(y, x)).scale(&Scalar::new(1, 2))
}

pub(crate) fn cyclic(a: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Element {
    let mut out = assoc(a, x, y, z);
    out.add_scaled(&Scalar::one(), &assoc(a, z, x, y));
    out.add_scaled(&Scalar::one(), &assoc(a, y, z, x));
    out
}

/// Bruck–Kleinfeld function
/// `as(wx, α(y), α(z)) − as(x,y,z)·α²(w) − α²(x)·as(w,y,z)`.
pub(crate) fn bk_f(a: &HomAlgebra, w: &Element, x: &Element, y: &Element, z: &Element) -> Element {
    let first = assoc(a, &a.mul(w, x), &a.al(y), &a.al(z));
    let second = a.mul(&assoc(a, x, y, z), &a.al_n(w, 2));
    let third = a.mul(&a.al_n(x, 2), &assoc(a, w, y, z));
    &(&first - &second) - &third
}

/// `[α²w, as(x,y,z)] − [α²z, as(w,x,y)] + [α²y, as(z,w,x)] − [α²x, as(y,z,w)]`.
pub(crate) fn big_f(a: &HomAlgebra, w: &Element, x: &Element, y: &Element, z: &Element) -> Element {
    let term = |p: &Element, q: &Element, r: &Element, s: &Element| {
        bracket(a, &a.al_n(p, 2), &assoc(a, q, r, s))
    };
    let mut out = term(w, x, y, z);
    out.add_scaled(&Scalar::from_int(-1), &term(z, w, x, y));
    out.add_scaled(&Scalar::one(), &term(y, z, w, x));
    out.add_scaled(&Scalar::from_int(-1), &term(x, y, z, w));
    out
}

/// `as([w,x], α(y), α(z)) + as([y,z], α(w), α(x))`.
pub(crate) fn bracket_assoc_pair(
    a: &HomAlgebra,
    w: &Element,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Element {
    let first = assoc(a, &bracket(a, w, x), &a.al(y), &a.al(z));
    let second = assoc(a, &bracket(a, y, z), &a.al(w), &a.al(x));
    &first + &second
}

pub(crate) fn g_fn(
    a: &HomAlgebra,
    u: &Element,
    v: &Element,
    w: &Element,
    x: &Element,
    y: &Element,
) -> Element {
    let minus = Scalar::from_int(-1);
    let mut out = bk_f(a, &a.mul(u, v), &a.al(w), &a.al(x), &a.al(y));
    out.add_scaled(&minus, &a.mul(&a.al_n(u, 3), &bk_f(a, v, w, x, y)));
    out.add_scaled(&minus, &a.mul(&bk_f(a, u, w, x, y), &a.al_n(v, 3)));
    let t4 = a.al(&a.mul(&assoc(a, u, x, y), &a.al(&bracket(a, v, w))));
    out.add_scaled(&minus, &t4);
    let t5 = a.al(&a.mul(&a.al(&bracket(a, u, w)), &assoc(a, v, x, y)));
    out.add_scaled(&minus, &t5);
    out
}

/// Full polarization of a map homogeneous of degree `xs.len()` in one
/// variable: `Σ_{∅≠S} (−1)^{d−|S|} P(Σ_{i∈S} x_i)`.
///
/// For degree 2 this is `P(a+b) − P(a) − P(b)`. The result is symmetric and
/// multilinear in `xs`, and equals `d!·P(x)` when every `x_i = x`.
pub(crate) fn polarize_with<P>(xs: &[Element], mut p: P) -> Element
where
    P: FnMut(&Element) -> Element,
{
    let d = xs.len();
    assert!(d >= 1);
    let dim = xs[0].dim();
    let mut out = Element::zero(dim);
    for mask in 1u32..(1 << d) {
        let mut sum = Element::zero(dim);
        for (i, x) in xs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum.add_scaled(&Scalar::one(), x);
            }
        }
        let sign = if (d as u32 - mask.count_ones()) % 2 == 0 {
            Scalar::one()
        } else {
            Scalar::from_int(-1)
        };
        out.add_scaled(&sign, &p(&sum));
    }
    out
}

// ---- public, dimension-checked API ----

pub fn hom_associator(a: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Result<Element> {
    check_all(a, &[x, y, z])?;
    Ok(assoc(a, x, y, z))
}

pub fn hom_jacobian(a: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Result<Element> {
    check_all(a, &[x, y, z])?;
    Ok(jacobian(a, x, y, z))
}

pub fn commutator(a: &HomAlgebra, x: &Element, y: &Element) -> Result<Element> {
    check_all(a, &[x, y])?;
    Ok(bracket(a, x, y))
}

pub fn jordan_product(a: &HomAlgebra, x: &Element, y: &Element) -> Result<Element> {
    check_all(a, &[x, y])?;
    Ok(jordan(a, x, y))
}

pub fn cyclic_associator(a: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Result<Element> {
    check_all(a, &[x, y, z])?;
    Ok(cyclic(a, x, y, z))
}

pub fn bruck_kleinfeld_f(
    a: &HomAlgebra,
    w: &Element,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<Element> {
    check_all(a, &[w, x, y, z])?;
    Ok(bk_f(a, w, x, y, z))
}

pub fn big_f_function(
    a: &HomAlgebra,
    w: &Element,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<Element> {
    check_all(a, &[w, x, y, z])?;
    Ok(big_f(a, w, x, y, z))
}

/// `as ∘ ([−,−] ⊗ α ⊗ α) ∘ (Id + ζ)` at `(w, x, y, z)`.
pub fn bracket_associator_sum(
    a: &HomAlgebra,
    w: &Element,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<Element> {
    check_all(a, &[w, x, y, z])?;
    Ok(bracket_assoc_pair(a, w, x, y, z))
}

pub fn g_function(
    a: &HomAlgebra,
    u: &Element,
    v: &Element,
    w: &Element,
    x: &Element,
    y: &Element,
) -> Result<Element> {
    check_all(a, &[u, v, w, x, y])?;
    Ok(g_fn(a, u, v, w, x, y))
}

/// Polarizes a map that is quadratic in variable `slot` and linear in the others.
///
/// `p` receives one element per variable. Returns
/// `P(e_a + e_b; rest) − P(e_a; rest) − P(e_b; rest)` where `rest` fills the
/// remaining variables in order. Over ℚ, `P ≡ 0` on all of `A` iff this
/// vanishes on all basis pairs `a ≤ b` and all basis choices for `rest`.
pub fn polarize_quadratic<P>(
    a: &HomAlgebra,
    p: P,
    slot: usize,
    pair: (usize, usize),
    rest: &[usize],
) -> Result<Element>
where
    P: Fn(&HomAlgebra, &[Element]) -> Element,
{
    polarize(a, p, slot, &[pair.0, pair.1], rest)
}

/// Degree-`indices.len()` generalization of [`polarize_quadratic`].
pub fn polarize<P>(
    a: &HomAlgebra,
    p: P,
    slot: usize,
    indices: &[usize],
    rest: &[usize],
) -> Result<Element>
where
    P: Fn(&HomAlgebra, &[Element]) -> Element,
{
    let dim = a.dim();
    if slot > rest.len() {
        return Err(AlgebraError::Arity {
            expected: rest.len() + 1,
            found: slot + 1,
        });
    }
    for &i in indices.iter().chain(rest) {
        if i >= dim {
            return Err(AlgebraError::IndexOutOfRange {
                index: i,
                dim,
                context: "basis tuple",
            });
        }
    }
    let others: Vec<Element> = rest.iter().map(|&i| a.e(i)).collect();
    let xs: Vec<Element> = indices.iter().map(|&i| a.e(i)).collect();
    Ok(polarize_with(&xs, |x| {
        let mut args = others.clone();
        args.insert(slot, x.clone());
        p(a, &args)
    }))
}
