//! Example algebras and their morphisms.
//!
//! Plain algebras have `α = Id`; morphism families return the map together
//! with the algebra it acts on. Twisted fixtures are obtained with
//! [`crate::constructions::yau_twist`].

mod m83;

pub use m83::{m83, m83_alpha, m83_label, m83_slot, octonion_conjugate};

use crate::algebra::{numbered_basis, HomAlgebra, StructureTensor};
use crate::constructions::{is_algebra_morphism, yau_twist};
use crate::element::{Element, LinearMap};
use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn half() -> Scalar {
    Scalar::new(1, 2)
}

/// Multiplication table under construction.
struct Table {
    dim: usize,
    cells: Vec<Element>,
}

impl Table {
    fn new(dim: usize) -> Self {
        Table {
            dim,
            cells: vec![Element::zero(dim); dim * dim],
        }
    }

    fn set(&mut self, i: usize, j: usize, terms: &[(usize, Scalar)]) {
        self.cells[i * self.dim + j] = Element::from_terms(self.dim, terms);
    }

    /// `e_i e_j = t`, `e_j e_i = −t`.
    fn anti(&mut self, i: usize, j: usize, terms: &[(usize, Scalar)]) {
        self.set(i, j, terms);
        let neg: Vec<(usize, Scalar)> = terms.iter().map(|(k, c)| (*k, -c)).collect();
        self.set(j, i, &neg);
    }

    fn tensor(self) -> StructureTensor {
        let dim = self.dim;
        StructureTensor::from_products(dim, |i, j| self.cells[i * dim + j].clone())
    }
}

fn map_from_images(images: Vec<Vec<(usize, Scalar)>>) -> LinearMap {
    let dim = images.len();
    let cols: Vec<Element> = images
        .iter()
        .map(|terms| Element::from_terms(dim, terms))
        .collect();
    LinearMap::from_images(&cols).expect("square by construction")
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

// ---- Sagle ----

/// Four-dimensional non-Lie Maltsev algebra, basis `e1..e4`.
pub fn sagle4() -> HomAlgebra {
    let mut t = Table::new(4);
    t.anti(0, 1, &[(1, s(-1))]);
    t.anti(0, 2, &[(2, s(-1))]);
    t.anti(0, 3, &[(3, s(1))]);
    t.anti(1, 2, &[(3, s(2))]);
    HomAlgebra::untwisted("sagle4", numbered_basis("e", 1, 4), t.tensor())
}

/// Endomorphism family `α₁` of [`sagle4`], parameters `(a₃, a₄, b₂, b₃, c)`.
pub fn sagle4_alpha1(a3: &Scalar, a4: &Scalar, b2: &Scalar, b3: &Scalar, c: &Scalar) -> LinearMap {
    map_from_images(vec![
        vec![(0, s(1)), (2, a3.clone()), (3, a4.clone())],
        vec![(1, b2.clone()), (2, b3.clone()), (3, a3 * b2)],
        vec![(2, c.clone())],
        vec![(3, b2 * c)],
    ])
}

/// Endomorphism family `α₂` of [`sagle4`], parameters `(a₂, a₃, a₄, b)`.
pub fn sagle4_alpha2(a2: &Scalar, a3: &Scalar, a4: &Scalar, b: &Scalar) -> LinearMap {
    map_from_images(vec![
        vec![(0, s(-1)), (1, a2.clone()), (2, a3.clone()), (3, a4.clone())],
        vec![(3, b.clone())],
        vec![],
        vec![],
    ])
}

/// Five-dimensional non-Lie Maltsev algebra, basis `e1..e5`.
pub fn sagle5() -> HomAlgebra {
    let mut t = Table::new(5);
    t.anti(0, 3, &[(1, s(1))]);
    t.anti(1, 4, &[(2, s(1))]);
    HomAlgebra::untwisted("sagle5", numbered_basis("e", 1, 5), t.tensor())
}

/// Whether `(a₁..a₅, b₁..b₅, c₁..c₅)` satisfies the side conditions that make
/// [`sagle5_morphism`] an algebra morphism.
pub fn sagle5_constraints(p: &[Scalar; 15]) -> bool {
    let a = &p[0..5];
    let b = &p[5..10];
    let c = &p[10..15];
    let d = &(&a[3] * &b[0]) - &(&a[0] * &b[3]);
    (&a[4] * &d).is_zero()
        && (&b[4] * &d).is_zero()
        && &a[0] * &c[3] == &a[3] * &c[0]
        && &a[1] * &c[4] == &a[4] * &c[1]
        && &b[0] * &c[3] == &b[3] * &c[0]
        && &b[1] * &c[4] == &b[4] * &c[1]
}

/// General endomorphism of [`sagle5`], parameters `(a₁..a₅, b₁..b₅, c₁..c₅)`.
pub fn sagle5_morphism(p: &[Scalar; 15]) -> Result<LinearMap> {
    if !sagle5_constraints(p) {
        return Err(AlgebraError::ConstraintViolation(
            "sagle5 morphism: a5(a4b1 - a1b4) = b5(a4b1 - a1b4) = 0, a1c4 = a4c1, \
             a2c5 = a5c2, b1c4 = b4c1, b2c5 = b5c2"
                .into(),
        ));
    }
    let a = &p[0..5];
    let b = &p[5..10];
    let c = &p[10..15];
    let row = |v: &[Scalar]| -> Vec<(usize, Scalar)> { v.iter().cloned().enumerate().collect() };
    let d = &(&a[0] * &b[3]) - &(&a[3] * &b[0]);
    let e = &(&a[1] * &b[4]) - &(&a[4] * &b[1]);
    Ok(map_from_images(vec![
        row(a),
        vec![(1, d.clone()), (2, e)],
        vec![(2, &d * &c[4])],
        row(b),
        row(c),
    ]))
}

/// Morphism `β` of [`sagle5`] making the twist Hom-Lie, parameters `(a, b)`.
pub fn sagle5_beta(a: &Scalar, b: &Scalar) -> LinearMap {
    map_from_images(vec![
        vec![(0, a.clone())],
        vec![(1, a * b)],
        vec![],
        vec![(3, b.clone())],
        vec![],
    ])
}

// ---- octonions ----

/// `OCTONION_TABLE[i][j] = (sign, k)` with `e_i e_j = sign · e_k`.
const OCTONION_TABLE: [[(i8, u8); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 4), (1, 7), (-1, 2), (1, 6), (-1, 5), (-1, 3)],
    [(1, 2), (-1, 4), (-1, 0), (1, 5), (1, 1), (-1, 3), (1, 7), (-1, 6)],
    [(1, 3), (-1, 7), (-1, 5), (-1, 0), (1, 6), (1, 2), (-1, 4), (1, 1)],
    [(1, 4), (1, 2), (-1, 1), (-1, 6), (-1, 0), (1, 7), (1, 3), (-1, 5)],
    [(1, 5), (-1, 6), (1, 3), (-1, 2), (-1, 7), (-1, 0), (1, 1), (1, 4)],
    [(1, 6), (1, 5), (-1, 7), (1, 4), (-1, 3), (-1, 1), (-1, 0), (1, 2)],
    [(1, 7), (1, 3), (1, 6), (-1, 1), (1, 5), (-1, 4), (-1, 2), (-1, 0)],
];

/// `e_i e_j = sign · e_k` in the octonions.
pub(crate) fn octonion_product(i: usize, j: usize) -> (i64, usize) {
    let (sign, k) = OCTONION_TABLE[i][j];
    (sign as i64, k as usize)
}

/// The octonions, basis `e0..e7` with unit `e0`.
pub fn octonions() -> HomAlgebra {
    let mut t = Table::new(8);
    for i in 0..8 {
        for j in 0..8 {
            let (sign, k) = octonion_product(i, j);
            t.set(i, j, &[(k, s(sign))]);
        }
    }
    HomAlgebra::untwisted("octonions", numbered_basis("e", 0, 8), t.tensor())
}

/// Image of `e_i` under the automorphism sending the basic triple
/// `(e1, e2, e3)` to `(e5, e6, e7)`.
pub(crate) const OCTONION_AUT: [usize; 8] = [0, 5, 6, 7, 1, 2, 3, 4];

pub fn octonion_automorphism() -> LinearMap {
    map_from_images(OCTONION_AUT.iter().map(|&k| vec![(k, s(1))]).collect())
}

/// Octonions twisted by [`octonion_automorphism`].
pub fn octonions_twisted() -> HomAlgebra {
    yau_twist(&octonions(), &octonion_automorphism())
        .expect("octonion automorphism is a morphism")
        .renamed("octonions-twisted")
}

// ---- Myung ----

/// Five-dimensional flexible Maltsev-admissible algebra, basis `e1..e5`.
pub fn myung5() -> HomAlgebra {
    let h = half();
    let mut t = Table::new(5);
    t.set(0, 1, &[(4, s(1)), (3, h.clone())]);
    t.set(0, 3, &[(0, h.clone())]);
    t.set(1, 0, &[(4, s(1)), (3, -&h)]);
    t.set(1, 3, &[(1, -&h)]);
    t.set(2, 3, &[(2, h.clone())]);
    t.set(3, 0, &[(0, -&h)]);
    t.set(3, 1, &[(1, h.clone())]);
    t.set(3, 2, &[(2, -&h)]);
    t.set(3, 3, &[(4, s(-1))]);
    HomAlgebra::untwisted("myung5", numbered_basis("e", 1, 5), t.tensor())
}

/// Diagonal morphism `(λ, λ⁻¹, ξ, 1, 1)` of [`myung5`]; requires `λ ∉ {0, ±1}`.
pub fn myung5_alpha(lambda: &Scalar, xi: &Scalar) -> Result<LinearMap> {
    if lambda.is_zero() || lambda.abs().is_one() {
        return Err(AlgebraError::ConstraintViolation("myung5: λ ∉ {0, ±1}".into()));
    }
    let inv = lambda.recip().expect("nonzero");
    Ok(LinearMap::diagonal(&[lambda.clone(), inv, xi.clone(), s(1), s(1)]))
}

/// Six-dimensional flexible Maltsev-admissible algebra with parameter `λ`,
/// basis `e, h, f, u, v, w`.
pub fn myung6(lambda: &Scalar) -> HomAlgebra {
    let (e, h, f, u, v, w) = (0, 1, 2, 3, 4, 5);
    let hf = half();
    let mut t = Table::new(6);
    t.set(e, h, &[(e, s(-1))]);
    t.set(e, f, &[(h, hf.clone()), (u, lambda.clone())]);
    t.set(e, v, &[(w, s(1))]);
    t.set(h, e, &[(e, s(1))]);
    t.set(h, h, &[(u, lambda * &s(2))]);
    t.set(h, f, &[(f, s(-1))]);
    t.set(h, v, &[(v, s(1))]);
    t.set(h, w, &[(w, s(-1))]);
    t.set(f, e, &[(h, -&hf), (u, lambda.clone())]);
    t.set(f, h, &[(f, s(1))]);
    t.set(f, w, &[(v, s(1))]);
    t.set(v, e, &[(w, s(-1))]);
    t.set(v, h, &[(v, s(-1))]);
    t.set(v, w, &[(u, hf.clone())]);
    t.set(w, h, &[(w, s(1))]);
    t.set(w, f, &[(v, s(-1))]);
    t.set(w, v, &[(u, -&hf)]);
    HomAlgebra::untwisted("myung6", labels(&["e", "h", "f", "u", "v", "w"]), t.tensor())
}

/// Diagonal morphism `(γ⁻², 1, γ², 1, γ, γ⁻¹)` of [`myung6`]; requires
/// `γ ≠ 0` and `γ⁸ ≠ 1`.
pub fn myung6_alpha(gamma: &Scalar) -> Result<LinearMap> {
    if gamma.is_zero() || gamma.pow(8).is_some_and(|g| g.is_one()) {
        return Err(AlgebraError::ConstraintViolation(
            "myung6: γ ≠ 0 and γ⁸ ≠ 1".into(),
        ));
    }
    let g2 = gamma.pow(2).expect("nonzero");
    let gm2 = gamma.pow(-2).expect("nonzero");
    let gm1 = gamma.pow(-1).expect("nonzero");
    Ok(LinearMap::diagonal(&[gm2, s(1), g2, s(1), gamma.clone(), gm1]))
}

/// Basis labels of [`myung8`].
pub const MYUNG8_BASIS: [&str; 8] = ["a", "e0", "e1", "e2", "e3", "e-1", "e-2", "e-3"];

/// Index of `e_{i}` in [`myung8`] for `i ∈ {±1, ±2, ±3}`.
pub fn myung8_index(i: i32) -> usize {
    match i {
        1..=3 => 1 + i as usize,
        -3..=-1 => 4 + (-i) as usize,
        _ => panic!("myung8 index must be in ±1..±3"),
    }
}

/// Eight-dimensional flexible Maltsev-admissible algebra with parameters
/// `(γ, δ, ε)`, basis `a, e0, e1, e2, e3, e-1, e-2, e-3`.
pub fn myung8(gamma: &Scalar, delta: &Scalar, eps: &Scalar) -> HomAlgebra {
    let (a, e0) = (0, 1);
    let idx = myung8_index;
    let hf = half();
    let mut t = Table::new(8);
    for i in 1..=3 {
        t.anti(e0, idx(i), &[(idx(i), s(1))]);
        t.anti(e0, idx(-i), &[(idx(-i), s(-1))]);
        t.set(idx(i), idx(-i), &[(e0, hf.clone()), (a, gamma.clone())]);
        t.set(idx(-i), idx(i), &[(e0, -&hf), (a, gamma.clone())]);
    }
    for (i, j, k) in [(1, 2, 3), (3, 1, 2), (2, 3, 1)] {
        t.anti(idx(i), idx(j), &[(idx(-k), s(1))]);
        t.anti(idx(-i), idx(-j), &[(idx(k), s(-1))]);
    }
    t.set(e0, e0, &[(a, gamma * &s(2))]);
    t.set(a, a, &[(a, delta.clone())]);
    for x in 1..8 {
        t.set(a, x, &[(x, eps.clone())]);
        t.set(x, a, &[(x, eps.clone())]);
    }
    HomAlgebra::untwisted("myung8", labels(&MYUNG8_BASIS), t.tensor())
}

/// Diagonal morphism of [`myung8`]: `e±1 ↦ λ^±1 e±1`, `e±2 ↦ ξ^±1 e±2`,
/// `e±3 ↦ (λξ)^∓1 e±3`; requires `λ, ξ ≠ 0`.
pub fn myung8_alpha(lambda: &Scalar, xi: &Scalar) -> Result<LinearMap> {
    if lambda.is_zero() || xi.is_zero() {
        return Err(AlgebraError::ConstraintViolation("myung8: λ, ξ ≠ 0".into()));
    }
    let lx = lambda * xi;
    let inv = |x: &Scalar| x.recip().expect("nonzero");
    let mut d = vec![s(1); 8];
    d[myung8_index(1)] = lambda.clone();
    d[myung8_index(-1)] = inv(lambda);
    d[myung8_index(2)] = xi.clone();
    d[myung8_index(-2)] = inv(xi);
    d[myung8_index(3)] = inv(&lx);
    d[myung8_index(-3)] = lx;
    Ok(LinearMap::diagonal(&d))
}

// ---- named specs ----

/// Every catalog name.
pub const NAMES: [&str; 16] = [
    "sagle4",
    "sagle4_alpha1",
    "sagle4_alpha2",
    "sagle5",
    "sagle5_morphism",
    "sagle5_beta",
    "octonions",
    "octonion_alpha",
    "myung5",
    "myung5_alpha",
    "myung6",
    "myung6_alpha",
    "myung8",
    "myung8_alpha",
    "m83",
    "m83_alpha",
];

/// A catalog entry name with its parameters. An empty parameter list means
/// the defaults from [`default_params`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogSpec {
    pub name: String,
    pub params: Vec<Scalar>,
}

impl CatalogSpec {
    pub fn new(name: impl Into<String>, params: Vec<Scalar>) -> Self {
        CatalogSpec {
            name: name.into(),
            params,
        }
    }

    pub fn named(name: impl Into<String>) -> Self {
        Self::new(name, Vec::new())
    }
}

#[derive(Clone, Debug)]
pub enum CatalogItem {
    Algebra(HomAlgebra),
    /// A morphism together with the plain algebra it acts on.
    Morphism { source: HomAlgebra, map: LinearMap },
}

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&n| s(n)).collect()
}

/// Default parameters; for morphism families the source algebra's
/// parameters come first.
pub fn default_params(name: &str) -> Result<Vec<Scalar>> {
    Ok(match name {
        "sagle4" | "sagle5" | "octonions" | "octonion_alpha" | "myung5" | "m83" | "m83_alpha" => {
            Vec::new()
        }
        "sagle4_alpha1" => ints(&[0, 0, 2, 0, 3]),
        "sagle4_alpha2" => ints(&[0, 0, 0, 1]),
        "sagle5_morphism" => ints(&[1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1]),
        "sagle5_beta" => ints(&[2, 3]),
        "myung5_alpha" => ints(&[2, 1]),
        "myung6" => ints(&[1]),
        "myung6_alpha" => ints(&[1, 2]),
        "myung8" => ints(&[1, 1, 2]),
        "myung8_alpha" => ints(&[1, 1, 2, 2, 3]),
        other => return Err(AlgebraError::UnknownCatalog(other.to_string())),
    })
}

fn resolve(spec: &CatalogSpec) -> Result<Vec<Scalar>> {
    let defaults = default_params(&spec.name)?;
    if spec.params.is_empty() {
        return Ok(defaults);
    }
    if spec.params.len() != defaults.len() {
        return Err(AlgebraError::ParamCount {
            name: spec.name.clone(),
            expected: defaults.len(),
            found: spec.params.len(),
        });
    }
    Ok(spec.params.clone())
}

/// Whether the parameters of a morphism family satisfy its side conditions.
pub fn catalog_morphism_constraints(family: &str, params: &[Scalar]) -> Result<bool> {
    let spec = CatalogSpec::new(family, params.to_vec());
    match build(&spec) {
        Ok(CatalogItem::Morphism { .. }) => Ok(true),
        Ok(CatalogItem::Algebra(_)) => Err(AlgebraError::UnknownCatalog(format!(
            "{family} is not a morphism family"
        ))),
        Err(AlgebraError::ConstraintViolation(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Builds a catalog entry. Morphisms are verified against their source.
pub fn build(spec: &CatalogSpec) -> Result<CatalogItem> {
    let p = resolve(spec)?;
    let algebra = |a: HomAlgebra| Ok(CatalogItem::Algebra(a));
    let (source, map) = match spec.name.as_str() {
        "sagle4" => return algebra(sagle4()),
        "sagle5" => return algebra(sagle5()),
        "octonions" => return algebra(octonions()),
        "myung5" => return algebra(myung5()),
        "myung6" => return algebra(myung6(&p[0])),
        "myung8" => return algebra(myung8(&p[0], &p[1], &p[2])),
        "m83" => return algebra(m83()),
        "sagle4_alpha1" => (sagle4(), sagle4_alpha1(&p[0], &p[1], &p[2], &p[3], &p[4])),
        "sagle4_alpha2" => (sagle4(), sagle4_alpha2(&p[0], &p[1], &p[2], &p[3])),
        "sagle5_morphism" => {
            let arr: [Scalar; 15] = p.clone().try_into().expect("length checked");
            (sagle5(), sagle5_morphism(&arr)?)
        }
        "sagle5_beta" => (sagle5(), sagle5_beta(&p[0], &p[1])),
        "octonion_alpha" => (octonions(), octonion_automorphism()),
        "myung5_alpha" => (myung5(), myung5_alpha(&p[0], &p[1])?),
        "myung6_alpha" => (myung6(&p[0]), myung6_alpha(&p[1])?),
        "myung8_alpha" => (myung8(&p[0], &p[1], &p[2]), myung8_alpha(&p[3], &p[4])?),
        "m83_alpha" => (m83(), m83_alpha()),
        other => return Err(AlgebraError::UnknownCatalog(other.to_string())),
    };
    let report = is_algebra_morphism(&source, &source, &map)?;
    if !report.holds {
        return Err(AlgebraError::Inconsistent(format!(
            "catalog map {} fails the morphism check",
            spec.name
        )));
    }
    Ok(CatalogItem::Morphism { source, map })
}

/// Builds a catalog algebra, or the Yau twist of a morphism family's source.
pub fn build_algebra(spec: &CatalogSpec) -> Result<HomAlgebra> {
    match build(spec)? {
        CatalogItem::Algebra(a) => Ok(a),
        CatalogItem::Morphism { source, map } => {
            Ok(yau_twist(&source, &map)?.renamed(format!("{}-twisted", spec.name)))
        }
    }
}
