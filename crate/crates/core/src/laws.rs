//! Named identities, each evaluated as "left side minus right side" on a
//! tuple of basis indices.
//!
//! An identity that has degree `d > 1` in one variable is checked through its
//! full polarization. That variable is listed first in the tuple and occupies
//! `d` sorted positions; e.g. left alternativity `as(x, x, y)` uses tuples
//! `(x₁, x₂, y)` with `x₁ ≤ x₂`.

use crate::algebra::HomAlgebra;
use crate::element::Element;
use crate::error::{AlgebraError, Result};
use crate::forms::{assoc, bracket, cyclic, jacobian, polarize_with};
use crate::report::{sweep, CheckReport, Domain};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    /// `α(xy) = α(x)α(y)`
    Multiplicativity,
    /// `xy + yx = 0`
    AntiSymmetry,
    /// `xy = yx`
    Commutativity,
    /// `as(x, y, z) = 0`
    Associator,
    /// `as(x, x, y) = 0`
    LeftAlternativity,
    /// `as(x, y, y) = 0`, tuple `(y₁, y₂, x)`
    RightAlternativity,
    /// `as(x, y, x) = 0`
    Flexibility,
    /// `J(x, y, z) = 0`
    HomJacobi,
    /// `J(αw, αy, xz) + J(αx, αy, wz) = J(w,y,z)α²(x) + J(x,y,z)α²(w)`
    HomMaltsev,
    /// Second linearization of the Hom-Maltsev identity, in iterated products.
    HomMaltsevAlt,
    /// `as(zx, αy, αw) + as(wz, αy, αx) + as(xw, αy, αz) = 0`
    HomJordan,
    /// `as(x², αy, αx) = 0`, polarized in `x`
    HomJordanCubic,
    /// `((xy)αx)α²z = α²x(αy(xz))`
    Moufang1,
    /// `((zx)αy)α²x = α²z(αx(yx))`
    Moufang2,
    /// `α((xy)(zx)) = α²x((yz)αx)`
    Moufang3,
    /// `as(wx,αy,αz) − as(xy,αz,αw) + as(yz,αw,αx) = α²w·as(x,y,z) + as(w,x,y)·α²z`
    AssociatorCocycle,
    /// `as(x², αy, αz) = α²x·as(x,y,z) + as(x,y,z)·α²x`
    SquareAssociator,
    /// `as(αx, xy, αz) = as(x,y,z)·α²x`
    LeftProductMiddle,
    /// `as(αx, αy, xz) = as(x,y,z)·α²x`
    LeftProductLast,
    /// `as(αx, yx, αz) = α²x·as(x,y,z)`
    RightProductMiddle,
    /// `as(αx, αy, zx) = α²x·as(x,y,z)`
    RightProductLast,
    /// `as(αx, αy, [x,z]) = [as(x,y,z), α²x]`
    AssociatorBracket,
    /// `S(αw, αy, [x,z]) + S(αx, αy, [w,z]) = [S(w,y,z), α²x] + [S(x,y,z), α²w]`
    CyclicMaltsev,
}

impl Law {
    pub const ALL: [Law; 23] = [
        Law::Multiplicativity,
        Law::AntiSymmetry,
        Law::Commutativity,
        Law::Associator,
        Law::LeftAlternativity,
        Law::RightAlternativity,
        Law::Flexibility,
        Law::HomJacobi,
        Law::HomMaltsev,
        Law::HomMaltsevAlt,
        Law::HomJordan,
        Law::HomJordanCubic,
        Law::Moufang1,
        Law::Moufang2,
        Law::Moufang3,
        Law::AssociatorCocycle,
        Law::SquareAssociator,
        Law::LeftProductMiddle,
        Law::LeftProductLast,
        Law::RightProductMiddle,
        Law::RightProductLast,
        Law::AssociatorBracket,
        Law::CyclicMaltsev,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Law::Multiplicativity => "multiplicativity",
            Law::AntiSymmetry => "anti-symmetry",
            Law::Commutativity => "commutativity",
            Law::Associator => "associator",
            Law::LeftAlternativity => "left-alternativity",
            Law::RightAlternativity => "right-alternativity",
            Law::Flexibility => "flexibility",
            Law::HomJacobi => "hom-jacobi",
            Law::HomMaltsev => "hom-maltsev-linear",
            Law::HomMaltsevAlt => "hom-maltsev-linear-alt",
            Law::HomJordan => "hom-jordan-linear",
            Law::HomJordanCubic => "hom-jordan-cubic",
            Law::Moufang1 => "hom-moufang-1",
            Law::Moufang2 => "hom-moufang-2",
            Law::Moufang3 => "hom-moufang-3",
            Law::AssociatorCocycle => "associator-cocycle",
            Law::SquareAssociator => "square-associator",
            Law::LeftProductMiddle => "left-product-middle",
            Law::LeftProductLast => "left-product-last",
            Law::RightProductMiddle => "right-product-middle",
            Law::RightProductLast => "right-product-last",
            Law::AssociatorBracket => "associator-bracket",
            Law::CyclicMaltsev => "cyclic-maltsev-linear",
        }
    }

    pub fn from_id(id: &str) -> Option<Law> {
        Law::ALL.iter().copied().find(|l| l.id() == id)
    }

    /// Number of distinct variables.
    pub fn variables(self) -> usize {
        match self {
            Law::Multiplicativity
            | Law::AntiSymmetry
            | Law::Commutativity
            | Law::LeftAlternativity
            | Law::RightAlternativity
            | Law::Flexibility => 2,
            Law::Associator
            | Law::HomJacobi
            | Law::Moufang1
            | Law::Moufang2
            | Law::Moufang3
            | Law::SquareAssociator
            | Law::LeftProductMiddle
            | Law::LeftProductLast
            | Law::RightProductMiddle
            | Law::RightProductLast
            | Law::AssociatorBracket => 3,
            Law::HomJordanCubic => 2,
            Law::HomMaltsev
            | Law::HomMaltsevAlt
            | Law::HomJordan
            | Law::AssociatorCocycle
            | Law::CyclicMaltsev => 4,
        }
    }

    /// Degree of the first variable; `1` for multilinear identities.
    pub fn degree(self) -> usize {
        match self {
            Law::LeftAlternativity
            | Law::RightAlternativity
            | Law::Flexibility
            | Law::Moufang1
            | Law::Moufang2
            | Law::Moufang3
            | Law::SquareAssociator
            | Law::LeftProductMiddle
            | Law::LeftProductLast
            | Law::RightProductMiddle
            | Law::RightProductLast
            | Law::AssociatorBracket => 2,
            Law::HomJordanCubic => 3,
            _ => 1,
        }
    }

    /// Length of an index tuple.
    pub fn arity(self) -> usize {
        self.variables() + self.degree() - 1
    }

    pub fn domain(self, dim: usize) -> Domain {
        let d = self.degree();
        Domain {
            dim,
            arity: self.arity(),
            sorted_prefix: if d > 1 { d } else { 0 },
        }
    }

    /// Value of the identity at a basis tuple.
    pub fn evaluate(self, a: &HomAlgebra, indices: &[usize]) -> Result<Element> {
        if indices.len() != self.arity() {
            return Err(AlgebraError::Arity {
                expected: self.arity(),
                found: indices.len(),
            });
        }
        for &i in indices {
            if i >= a.dim() {
                return Err(AlgebraError::IndexOutOfRange {
                    index: i,
                    dim: a.dim(),
                    context: "basis tuple",
                });
            }
        }
        Ok(self.eval_tuple(a, indices))
    }

    pub(crate) fn eval_tuple(self, a: &HomAlgebra, t: &[usize]) -> Element {
        let d = self.degree();
        if d == 1 {
            let args: Vec<Element> = t.iter().map(|&i| a.e(i)).collect();
            return self.raw(a, &args);
        }
        let xs: Vec<Element> = t[..d].iter().map(|&i| a.e(i)).collect();
        let rest: Vec<Element> = t[d..].iter().map(|&i| a.e(i)).collect();
        let mut args = Vec::with_capacity(rest.len() + 1);
        polarize_with(&xs, |x| {
            args.clear();
            args.push(x.clone());
            args.extend(rest.iter().cloned());
            self.raw(a, &args)
        })
    }

    /// The defect at arbitrary elements, one per variable.
    pub fn evaluate_elements(self, a: &HomAlgebra, args: &[Element]) -> Result<Element> {
        if args.len() != self.variables() {
            return Err(AlgebraError::Arity {
                expected: self.variables(),
                found: args.len(),
            });
        }
        for x in args {
            x.check_dim(a.dim())?;
        }
        Ok(self.raw(a, args))
    }

    fn raw(self, a: &HomAlgebra, v: &[Element]) -> Element {
        let m = |x: &Element, y: &Element| a.mul(x, y);
        let al = |x: &Element| a.al(x);
        let al2 = |x: &Element| a.al_n(x, 2);
        let minus = Scalar::from_int(-1);
        match self {
            Law::Multiplicativity => &al(&m(&v[0], &v[1])) - &m(&al(&v[0]), &al(&v[1])),
            Law::AntiSymmetry => &m(&v[0], &v[1]) + &m(&v[1], &v[0]),
            Law::Commutativity => bracket(a, &v[0], &v[1]),
            Law::Associator => assoc(a, &v[0], &v[1], &v[2]),
            Law::LeftAlternativity => assoc(a, &v[0], &v[0], &v[1]),
            Law::RightAlternativity => {
                let (y, x) = (&v[0], &v[1]);
                assoc(a, x, y, y)
            }
            Law::Flexibility => assoc(a, &v[0], &v[1], &v[0]),
            Law::HomJacobi => jacobian(a, &v[0], &v[1], &v[2]),
            Law::HomMaltsev => {
                let (w, x, y, z) = (&v[0], &v[1], &v[2], &v[3]);
                let mut out = jacobian(a, &al(w), &al(y), &m(x, z));
                out.add_scaled(&Scalar::one(), &jacobian(a, &al(x), &al(y), &m(w, z)));
                out.add_scaled(&minus, &m(&jacobian(a, w, y, z), &al2(x)));
                out.add_scaled(&minus, &m(&jacobian(a, x, y, z), &al2(w)));
                out
            }
            Law::HomMaltsevAlt => {
                let (w, x, y, z) = (&v[0], &v[1], &v[2], &v[3]);
                // [[[p, q], α r], α² s]
                let t = |p: &Element, q: &Element, r: &Element, s: &Element| {
                    m(&m(&m(p, q), &al(r)), &al2(s))
                };
                let mut out = al(&m(&m(w, y), &m(x, z)));
                out.add_scaled(&Scalar::one(), &al(&m(&m(x, y), &m(w, z))));
                for term in [
                    t(w, y, z, x),
                    t(x, y, z, w),
                    t(y, z, w, x),
                    t(y, z, x, w),
                    t(z, w, x, y),
                    t(z, x, w, y),
                ] {
                    out.add_scaled(&minus, &term);
                }
                out
            }
            Law::HomJordan => {
                let (w, x, y, z) = (&v[0], &v[1], &v[2], &v[3]);
                let ay = al(y);
                let mut out = assoc(a, &m(z, x), &ay, &al(w));
                out.add_scaled(&Scalar::one(), &assoc(a, &m(w, z), &ay, &al(x)));
                out.add_scaled(&Scalar::one(), &assoc(a, &m(x, w), &ay, &al(z)));
                out
            }
            Law::HomJordanCubic => {
                let (x, y) = (&v[0], &v[1]);
                assoc(a, &m(x, x), &al(y), &al(x))
            }
            Law::Moufang1 => {
                let (x, y, z) = (&v[0], &v[1], &v[2]);
                let left = m(&m(&m(x, y), &al(x)), &al2(z));
                let right = m(&al2(x), &m(&al(y), &m(x, z)));
                &left - &right
            }
            Law::Moufang2 => {
                let (x, y, z) = (&v[0], &v[1], &v[2]);
                let left = m(&m(&m(z, x), &al(y)), &al2(x));
                let right = m(&al2(z), &m(&al(x), &m(y, x)));
                &left - &right
            }
            Law::Moufang3 => {
                let (x, y, z) = (&v[0], &v[1], &v[2]);
                let left = al(&m(&m(x, y), &m(z, x)));
                let right = m(&al2(x), &m(&m(y, z), &al(x)));
                &left - &right
            }
            Law::AssociatorCocycle => {
                let (w, x, y, z) = (&v[0], &v[1], &v[2], &v[3]);
                let mut out = assoc(a, &m(w, x), &al(y), &al(z));
                out.add_scaled(&minus, &assoc(a, &m(x, y), &al(z), &al(w)));
                out.add_scaled(&Scalar::one(), &assoc(a, &m(y, z), &al(w), &al(x)));
                out.add_scaled(&minus, &m(&al2(w), &assoc(a, x, y, z)));
                out.add_scaled(&minus, &m(&assoc(a, w, x, y), &al2(z)));
                out
            }
            Law::SquareAssociator => {
                let (x, y, z) = (&v[0], &v[1], &v[2]);
                let s = assoc(a, x, y, z);
                let ax2 = al2(x);
                let mut out = assoc(a, &m(x, x), &al(y), &al(z));
                out.add_scaled(&minus, &m(&ax2, &s));
                out.add_scaled(&minus, &m(&s, &ax2));
                out
            }
            Law::LeftProductMiddle => {
                let (x, y, z) = (&v[0], &v[1], &v[2]);
                &assoc(a, &al(x), &m(x, y), &al(z)) - &m(&assoc(a, x, y, z), &al2(x))
            }
            Law::LeftProductLast => {
                let (x, y, z) = (&v[0], &v[1], &v[2]);
                &assoc(a, &al(x), &al(y), &m(x, z)) - &m(&assoc(a, x, y, z), &al2(x))
            }
            Law::RightProductMiddle => {
                let (x, y, z) = (&v[0], &v[1], &v[2]);
                &assoc(a, &al(x), &m(y, x), &al(z)) - &m(&al2(x), &assoc(a, x, y, z))
            }
            Law::RightProductLast => {
                let (x, y, z) = (&v[0], &v[1], &v[2]);
                &assoc(a, &al(x), &al(y), &m(z, x)) - &m(&al2(x), &assoc(a, x, y, z))
            }
            Law::AssociatorBracket => {
                let (x, y, z) = (&v[0], &v[1], &v[2]);
                let left = assoc(a, &al(x), &al(y), &bracket(a, x, z));
                let right = bracket(a, &assoc(a, x, y, z), &al2(x));
                &left - &right
            }
            Law::CyclicMaltsev => {
                let (w, x, y, z) = (&v[0], &v[1], &v[2], &v[3]);
                let ay = al(y);
                let mut out = cyclic(a, &al(w), &ay, &bracket(a, x, z));
                out.add_scaled(&Scalar::one(), &cyclic(a, &al(x), &ay, &bracket(a, w, z)));
                out.add_scaled(&minus, &bracket(a, &cyclic(a, w, y, z), &al2(x)));
                out.add_scaled(&minus, &bracket(a, &cyclic(a, x, y, z), &al2(w)));
                out
            }
        }
    }

    /// Sweeps every tuple of the law's domain.
    pub fn check(self, a: &HomAlgebra) -> CheckReport {
        self.check_as(a, self.id())
    }

    /// As [`Law::check`], recording `witness_law` as the witness's law id.
    pub(crate) fn check_as(self, a: &HomAlgebra, witness_law: &str) -> CheckReport {
        let (witness, count) = sweep(witness_law, self.domain(a.dim()), |t| self.eval_tuple(a, t));
        CheckReport {
            identity_id: self.id().to_string(),
            holds: witness.is_none(),
            witness,
            tuples_checked: count,
            multiplicative: a.is_multiplicative(),
            cross_checks: Vec::new(),
        }
    }
}
