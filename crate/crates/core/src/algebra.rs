//! Structure tensors and the Hom-algebra data model.

use std::collections::BTreeMap;

use crate::element::{Element, LinearMap};
use crate::error::{AlgebraError, Result};
use crate::laws::Law;
use crate::report::CheckReport;
use crate::scalar::Scalar;

/// Sparse multiplication tensor: `μ(e_i, e_j) = Σ_k c_{ij}^k e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor {
    dim: usize,
    entries: BTreeMap<(usize, usize, usize), Scalar>,
}

impl StructureTensor {
    pub fn new(dim: usize) -> Self {
        StructureTensor {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Adds the entry `c_{ij}^k = c`. Zero coefficients are accepted and dropped.
    pub fn insert(&mut self, i: usize, j: usize, k: usize, c: Scalar) -> Result<()> {
        for index in [i, j, k] {
            if index >= self.dim {
                return Err(AlgebraError::IndexOutOfRange {
                    index,
                    dim: self.dim,
                    context: "structure constant",
                });
            }
        }
        if self.entries.contains_key(&(i, j, k)) {
            return Err(AlgebraError::DuplicateEntry(i, j, k));
        }
        if !c.is_zero() {
            self.entries.insert((i, j, k), c);
        }
        Ok(())
    }

    /// Builds the tensor from the products of basis pairs.
    pub fn from_products(dim: usize, mut product: impl FnMut(usize, usize) -> Element) -> Self {
        let mut t = StructureTensor::new(dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = product(i, j);
                assert_eq!(p.dim(), dim, "product has the wrong dimension");
                for (k, c) in p.terms() {
                    t.entries.insert((i, j, k), c.clone());
                }
            }
        }
        t
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.entries.get(&(i, j, k)).cloned().unwrap_or_default()
    }

    /// Nonzero entries in lexicographic `(i, j, k)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(i, j, k), c)| (i, j, k, c))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Post-composes with a linear map: `m ∘ μ`.
    pub fn compose_left(&self, m: &LinearMap) -> StructureTensor {
        let mut table = vec![Element::zero(self.dim); self.dim * self.dim];
        for (i, j, k, c) in self.entries() {
            for (r, a) in m.column(k) {
                table[i * self.dim + j].coord_mut(*r).add_product(c, a);
            }
        }
        StructureTensor::from_products(self.dim, |i, j| table[i * self.dim + j].clone())
    }
}

/// A finite-dimensional Hom-algebra `(A, μ, α)` over ℚ.
///
/// Immutable once built. The multiplication table is cached per basis pair.
#[derive(Clone, Debug)]
pub struct HomAlgebra {
    name: String,
    basis: Vec<String>,
    mu: StructureTensor,
    alpha: LinearMap,
    table: Vec<Vec<(usize, Scalar)>>,
    multiplicative: bool,
}

impl PartialEq for HomAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.basis == other.basis
            && self.mu == other.mu
            && self.alpha == other.alpha
    }
}

impl HomAlgebra {
    /// Builds the algebra and rejects a twisting map that is not multiplicative.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        mu: StructureTensor,
        alpha: LinearMap,
    ) -> Result<Self> {
        Self::with_options(name, basis, mu, alpha, false)
    }

    /// Plain algebra `(A, μ, Id)`.
    pub fn untwisted(name: impl Into<String>, basis: Vec<String>, mu: StructureTensor) -> Self {
        let dim = mu.dim();
        Self::new(name, basis, mu, LinearMap::identity(dim)).expect("identity is multiplicative")
    }

    /// As [`HomAlgebra::new`]; with `skip_mult_check` a non-multiplicative
    /// twisting map is accepted and only recorded.
    pub fn with_options(
        name: impl Into<String>,
        basis: Vec<String>,
        mu: StructureTensor,
        alpha: LinearMap,
        skip_mult_check: bool,
    ) -> Result<Self> {
        let dim = mu.dim();
        if dim == 0 {
            return Err(AlgebraError::Malformed("dimension must be positive".into()));
        }
        if basis.len() != dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: dim,
                found: basis.len(),
            });
        }
        if alpha.dim() != dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: dim,
                found: alpha.dim(),
            });
        }
        let mut table = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in mu.entries() {
            table[i * dim + j].push((k, c.clone()));
        }
        let mut algebra = HomAlgebra {
            name: name.into(),
            basis,
            mu,
            alpha,
            table,
            multiplicative: true,
        };
        if !algebra.alpha.is_identity() {
            let report = Law::Multiplicativity.check(&algebra);
            if let Some(w) = &report.witness {
                if !skip_mult_check {
                    return Err(AlgebraError::NotMultiplicative {
                        i: w.indices[0],
                        j: w.indices[1],
                    });
                }
                algebra.multiplicative = false;
            }
        }
        Ok(algebra)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.mu.dim()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn mu(&self) -> &StructureTensor {
        &self.mu
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    /// Whether `α ∘ μ = μ ∘ (α ⊗ α)` holds.
    pub fn is_multiplicative(&self) -> bool {
        self.multiplicative
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Position of a basis label, if present.
    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    pub fn e(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.dim())
    }

    pub fn display(&self, x: &Element) -> String {
        x.display_with(&self.basis)
    }

    /// `μ(x, y) = Σ x_i y_j c_{ij}^k e_k`.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        x.check_dim(self.dim())?;
        y.check_dim(self.dim())?;
        Ok(self.mul(x, y))
    }

    /// `α(x)`.
    pub fn apply_alpha(&self, x: &Element) -> Result<Element> {
        self.alpha.apply(x)
    }

    pub(crate) fn mul(&self, x: &Element, y: &Element) -> Element {
        let dim = self.dim();
        let mut out = Element::zero(dim);
        let ys: Vec<(usize, &Scalar)> = y.terms().collect();
        if ys.is_empty() {
            return out;
        }
        for (i, xi) in x.terms() {
            let row = &self.table[i * dim..(i + 1) * dim];
            for (j, yj) in &ys {
                let cell = &row[*j];
                if cell.is_empty() {
                    continue;
                }
                let w = xi * *yj;
                for (k, c) in cell {
                    out.coord_mut(*k).add_product(&w, c);
                }
            }
        }
        out
    }

    pub(crate) fn basis_product(&self, i: usize, j: usize) -> Element {
        Element::from_terms(self.dim(), &self.table[i * self.dim() + j])
    }

    pub(crate) fn al(&self, x: &Element) -> Element {
        self.alpha.apply_unchecked(x)
    }

    /// `α^n(x)`.
    pub(crate) fn al_n(&self, x: &Element, n: u32) -> Element {
        let mut y = x.clone();
        for _ in 0..n {
            y = self.al(&y);
        }
        y
    }

    /// Verifies `α(μ(e_i, e_j)) = μ(α(e_i), α(e_j))` on all basis pairs.
    pub fn check_multiplicativity(&self) -> CheckReport {
        Law::Multiplicativity.check(self)
    }
}

/// Labels `prefix{start}`, `prefix{start+1}`, … .
pub fn numbered_basis(prefix: &str, start: usize, dim: usize) -> Vec<String> {
    (start..start + dim).map(|i| format!("{prefix}{i}")).collect()
}
