//! The 27-dimensional exceptional Jordan algebra of 3×3 Hermitian octonionic
//! matrices, with `X ∗ Y = ½(XY + YX)`.
//!
//! Basis order: `E1, E2, E3` (diagonal units), then `X12e0..X12e7`,
//! `X13e0..X13e7`, `X23e0..X23e7` for the octonion in the upper entry
//! `(i, j)`; the lower entry holds its conjugate.

use std::sync::OnceLock;

use super::{octonion_product, OCTONION_AUT};
use crate::algebra::{HomAlgebra, StructureTensor};
use crate::element::{Element, LinearMap};
use crate::error::Result;
use crate::scalar::Scalar;

const DIM: usize = 27;
const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

type Oct = [i64; 8];

fn oct_mul(x: &Oct, y: &Oct) -> Oct {
    let mut out = [0; 8];
    for i in 0..8 {
        if x[i] == 0 {
            continue;
        }
        for j in 0..8 {
            if y[j] == 0 {
                continue;
            }
            let (sign, k) = octonion_product(i, j);
            out[k] += sign * x[i] * y[j];
        }
    }
    out
}

fn conj(x: &Oct) -> Oct {
    let mut out = x.map(|c| -c);
    out[0] = x[0];
    out
}

/// Conjugate of an octonion given in the basis `e0..e7`.
pub fn octonion_conjugate(x: &Element) -> Result<Element> {
    x.check_dim(8)?;
    let mut out = -x;
    *out.coord_mut(0) = x.coord(0).clone();
    Ok(out)
}

/// Index of the basis vector for entry `(row, col)`, `row ≤ col < 3`, and
/// octonion unit `e_k`. Diagonal entries only take `k = 0`.
pub fn m83_slot(row: usize, col: usize, k: usize) -> Option<usize> {
    if row == col {
        return (row < 3 && k == 0).then_some(row);
    }
    let p = PAIRS.iter().position(|&pair| pair == (row, col))?;
    (k < 8).then_some(3 + 8 * p + k)
}

pub fn m83_label(index: usize) -> String {
    match index {
        0..=2 => format!("E{}", index + 1),
        3..=26 => {
            let (i, j) = PAIRS[(index - 3) / 8];
            format!("X{}{}e{}", i + 1, j + 1, (index - 3) % 8)
        }
        _ => panic!("m83 index out of range"),
    }
}

type Matrix = [[Oct; 3]; 3];

fn basis_matrix(index: usize) -> Matrix {
    let mut m = [[[0; 8]; 3]; 3];
    if index < 3 {
        m[index][index][0] = 1;
    } else {
        let (i, j) = PAIRS[(index - 3) / 8];
        let k = (index - 3) % 8;
        m[i][j][k] = 1;
        m[j][i] = conj(&m[i][j]);
    }
    m
}

fn mat_mul(x: &Matrix, y: &Matrix) -> Matrix {
    let mut out = [[[0; 8]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for l in 0..3 {
                let p = oct_mul(&x[i][l], &y[l][j]);
                for k in 0..8 {
                    out[i][j][k] += p[k];
                }
            }
        }
    }
    out
}

/// `XY + YX` as a coordinate vector with doubled entries.
fn doubled_jordan(x: &Matrix, y: &Matrix) -> Vec<i64> {
    let a = mat_mul(x, y);
    let b = mat_mul(y, x);
    let mut s = [[[0; 8]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..8 {
                s[i][j][k] = a[i][j][k] + b[i][j][k];
            }
        }
    }
    for i in 0..3 {
        assert!(s[i][i][1..].iter().all(|&c| c == 0), "diagonal is not real");
        for j in i + 1..3 {
            assert_eq!(s[j][i], conj(&s[i][j]), "product is not Hermitian");
        }
    }
    let mut coords = vec![0; DIM];
    for i in 0..3 {
        coords[i] = s[i][i][0];
    }
    for (p, &(i, j)) in PAIRS.iter().enumerate() {
        coords[3 + 8 * p..3 + 8 * p + 8].copy_from_slice(&s[i][j]);
    }
    coords
}

fn generate() -> HomAlgebra {
    let mats: Vec<Matrix> = (0..DIM).map(basis_matrix).collect();
    let half = Scalar::new(1, 2);
    let mu = StructureTensor::from_products(DIM, |i, j| {
        let c = doubled_jordan(&mats[i], &mats[j]);
        Element::from_coords(c.iter().map(|&n| &Scalar::from_int(n) * &half).collect())
    });
    let a = HomAlgebra::untwisted("m83", (0..DIM).map(m83_label).collect(), mu);
    for i in 0..DIM {
        for j in 0..DIM {
            assert_eq!(a.basis_product(i, j), a.basis_product(j, i), "not commutative");
        }
    }
    // Jordan identity (x²y)x = x²(yx) on basis vectors.
    for i in 0..DIM {
        let x = a.e(i);
        let x2 = a.mul(&x, &x);
        for j in 0..DIM {
            let y = a.e(j);
            let lhs = a.mul(&a.mul(&x2, &y), &x);
            let rhs = a.mul(&x2, &a.mul(&y, &x));
            assert_eq!(lhs, rhs, "Jordan identity fails on basis");
        }
    }
    a
}

/// The plain Jordan algebra.
pub fn m83() -> HomAlgebra {
    static CELL: OnceLock<HomAlgebra> = OnceLock::new();
    CELL.get_or_init(generate).clone()
}

/// Entrywise extension of the octonion automorphism
/// [`octonion_automorphism`](super::octonion_automorphism).
pub fn m83_alpha() -> LinearMap {
    let images: Vec<Element> = (0..DIM)
        .map(|index| {
            if index < 3 {
                Element::basis(DIM, index)
            } else {
                let block = (index - 3) / 8;
                let k = (index - 3) % 8;
                Element::basis(DIM, 3 + 8 * block + OCTONION_AUT[k])
            }
        })
        .collect();
    LinearMap::from_images(&images).expect("square by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slots_and_labels() {
        assert_eq!(m83_slot(0, 0, 0), Some(0));
        assert_eq!(m83_slot(0, 0, 1), None);
        assert_eq!(m83_slot(1, 2, 7), Some(26));
        assert_eq!(m83_slot(1, 0, 0), None);
        assert_eq!(m83_label(3), "X12e0");
        assert_eq!(m83_label(26), "X23e7");
    }

    #[test]
    fn diagonal_idempotents_and_unit() {
        let a = m83();
        for i in 0..3 {
            assert_eq!(a.multiply(&a.e(i), &a.e(i)).unwrap(), a.e(i));
        }
        let mut unit = a.zero();
        for i in 0..3 {
            unit = &unit + &a.e(i);
        }
        for j in 0..DIM {
            assert_eq!(a.multiply(&unit, &a.e(j)).unwrap(), a.e(j));
        }
        // E1 ∗ X12 = ½ X12
        let x = a.e(m83_slot(0, 1, 3).unwrap());
        assert_eq!(a.multiply(&a.e(0), &x).unwrap(), x.scale(&Scalar::new(1, 2)));
    }

    #[test]
    fn conjugation() {
        let x = Element::from_ints(&[1, 2, 0, 0, 0, 0, 0, -3]);
        assert_eq!(
            octonion_conjugate(&x).unwrap(),
            Element::from_ints(&[1, -2, 0, 0, 0, 0, 0, 3])
        );
        assert!(octonion_conjugate(&Element::zero(3)).is_err());
    }
}
