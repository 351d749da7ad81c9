//! Coordinate vectors and square matrices over ℚ.

use std::ops::{Add, Neg, Sub};

use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;

/// An element of an algebra, written in its basis.
///
/// Serializes as the list of coordinates in `"p/q"` form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct Element {
    coords: Vec<Scalar>,
}

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element {
            coords: std::iter::repeat_with(Scalar::zero).take(dim).collect(),
        }
    }

    /// The basis vector `e_i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coords[i] = Scalar::one();
        e
    }

    pub fn from_coords(coords: Vec<Scalar>) -> Self {
        Element { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Element {
            coords: coords.iter().map(|&c| Scalar::from_int(c)).collect(),
        }
    }

    /// Sparse constructor: `Σ c · e_i`.
    pub fn from_terms(dim: usize, terms: &[(usize, Scalar)]) -> Self {
        let mut e = Self::zero(dim);
        for (i, c) in terms {
            e.coords[*i] += c;
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// Nonzero coordinates as `(index, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(self.dim());
        }
        Element {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Element) {
        debug_assert_eq!(self.dim(), other.dim());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            if !b.is_zero() {
                a.add_product(c, b);
            }
        }
    }

    pub(crate) fn coord_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.coords[i]
    }

    pub(crate) fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() == dim {
            Ok(())
        } else {
            Err(AlgebraError::DimensionMismatch {
                expected: dim,
                found: self.dim(),
            })
        }
    }

    /// Human-readable form such as `-6·e4 + 1/2·e1`, using `labels` for the basis.
    pub fn display_with(&self, labels: &[String]) -> String {
        let mut out = String::new();
        for (i, c) in self.terms() {
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('·');
            }
            match labels.get(i) {
                Some(l) => out.push_str(l),
                None => out.push_str(&format!("e{i}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        debug_assert_eq!(self.dim(), rhs.dim());
        Element {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        debug_assert_eq!(self.dim(), rhs.dim());
        Element {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

/// Exact weighted sum `Σ c · x`. All elements must share one dimension.
pub fn linear_combination(terms: &[(Scalar, Element)]) -> Result<Element> {
    let Some((_, first)) = terms.first() else {
        return Err(AlgebraError::Malformed(
            "empty linear combination has no dimension".into(),
        ));
    };
    let dim = first.dim();
    let mut out = Element::zero(dim);
    for (c, x) in terms {
        x.check_dim(dim)?;
        out.add_scaled(c, x);
    }
    Ok(out)
}

/// A square matrix; column `j` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    dim: usize,
    /// Row-major entries.
    entries: Vec<Scalar>,
    /// Nonzero entries of each column, `(row, value)`.
    columns: Vec<Vec<(usize, Scalar)>>,
}

impl LinearMap {
    pub fn from_entries(dim: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        let columns = (0..dim)
            .map(|j| {
                (0..dim)
                    .filter_map(|i| {
                        let v = &entries[i * dim + j];
                        (!v.is_zero()).then(|| (i, v.clone()))
                    })
                    .collect()
            })
            .collect();
        Ok(LinearMap {
            dim,
            entries,
            columns,
        })
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![Scalar::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Scalar::one();
        }
        Self::from_entries(dim, entries).expect("square by construction")
    }

    /// Builds the map from the images of the basis vectors.
    pub fn from_images(images: &[Element]) -> Result<Self> {
        let dim = images.len();
        let mut entries = vec![Scalar::zero(); dim * dim];
        for (j, img) in images.iter().enumerate() {
            img.check_dim(dim)?;
            for (i, c) in img.terms() {
                entries[i * dim + j] = c.clone();
            }
        }
        Self::from_entries(dim, entries)
    }

    /// Diagonal map `e_i ↦ d_i e_i`.
    pub fn diagonal(diag: &[Scalar]) -> Self {
        let dim = diag.len();
        let mut entries = vec![Scalar::zero(); dim * dim];
        for (i, d) in diag.iter().enumerate() {
            entries[i * dim + i] = d.clone();
        }
        Self::from_entries(dim, entries).expect("square by construction")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim + col]
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / self.dim, k % self.dim, v))
    }

    pub(crate) fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.columns[j]
    }

    pub fn image_of_basis(&self, j: usize) -> Element {
        Element::from_terms(self.dim, &self.columns[j])
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|j| {
            let col = &self.columns[j];
            col.len() == 1 && col[0].0 == j && col[0].1.is_one()
        })
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        x.check_dim(self.dim)?;
        Ok(self.apply_unchecked(x))
    }

    pub(crate) fn apply_unchecked(&self, x: &Element) -> Element {
        let mut out = Element::zero(self.dim);
        for (j, xj) in x.terms() {
            for (i, a) in &self.columns[j] {
                out.coord_mut(*i).add_product(xj, a);
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if self.dim != other.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let images: Vec<Element> = (0..self.dim)
            .map(|j| self.apply_unchecked(&other.image_of_basis(j)))
            .collect();
        LinearMap::from_images(&images)
    }

    /// `self^n`, with `self^0 = Id`.
    pub fn pow(&self, n: u64) -> LinearMap {
        let mut result = LinearMap::identity(self.dim);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.compose(&base).expect("same dimension");
            }
            n >>= 1;
            if n > 0 {
                base = base.compose(&base).expect("same dimension");
            }
        }
        result
    }
}
