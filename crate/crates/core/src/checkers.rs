//! Class membership predicates.
//!
//! Each predicate sweeps basis tuples and returns a [`CheckReport`] whose
//! witness, if any, is the lexicographically first failing tuple. Witness law
//! ids of checks run on a derived algebra carry a prefix naming it:
//! `commutator:` for `A⁻` and `plus:` for `A⁺` (see [`reevaluate`]).

use std::fmt;

use crate::algebra::HomAlgebra;
use crate::constructions::{commutator_algebra, plus_algebra};
use crate::element::Element;
use crate::error::{AlgebraError, Result};
use crate::laws::Law;
use crate::report::{CheckReport, CrossCheck, Witness};

fn all_of(id: &str, a: &HomAlgebra, laws: &[Law]) -> CheckReport {
    let mut parts = Vec::new();
    for law in laws {
        let r = law.check(a);
        let failed = !r.holds;
        parts.push(r);
        if failed {
            break;
        }
    }
    CheckReport::combine(id, parts, a.is_multiplicative())
}

fn prefixed(report: CheckReport, prefix: &str, id: &str, multiplicative: bool) -> CheckReport {
    let witness = report.witness.map(|w| Witness {
        law: format!("{prefix}:{}", w.law),
        ..w
    });
    let cross_checks = report
        .cross_checks
        .into_iter()
        .map(|c| CrossCheck {
            identity_id: format!("{prefix}:{}", c.identity_id),
            ..c
        })
        .collect();
    CheckReport {
        identity_id: id.to_string(),
        witness,
        cross_checks,
        multiplicative,
        ..report
    }
}

/// `as_A = 0`.
pub fn is_hom_associative(a: &HomAlgebra) -> CheckReport {
    all_of("hom-associative", a, &[Law::Associator])
}

/// Left and right Hom-alternativity, both polarized.
pub fn is_hom_alternative(a: &HomAlgebra) -> CheckReport {
    all_of(
        "hom-alternative",
        a,
        &[Law::LeftAlternativity, Law::RightAlternativity],
    )
}

/// `as(x, y, x) = 0`, polarized.
pub fn is_hom_flexible(a: &HomAlgebra) -> CheckReport {
    all_of("hom-flexible", a, &[Law::Flexibility])
}

/// Anti-symmetry and the Hom-Jacobi identity.
pub fn is_hom_lie(a: &HomAlgebra) -> CheckReport {
    all_of("hom-lie", a, &[Law::AntiSymmetry, Law::HomJacobi])
}

/// Anti-symmetry and the linearized Hom-Maltsev identity. The second
/// linearization is evaluated too and recorded as a cross-check.
pub fn is_hom_maltsev(a: &HomAlgebra) -> CheckReport {
    let gate = Law::AntiSymmetry.check(a);
    if !gate.holds {
        return CheckReport::combine("hom-maltsev", vec![gate], a.is_multiplicative());
    }
    let main = Law::HomMaltsev.check(a);
    let alt = Law::HomMaltsevAlt.check(a);
    let cross = CrossCheck {
        identity_id: alt.identity_id.clone(),
        holds: alt.holds,
        agrees: alt.holds == main.holds,
    };
    let mut r = CheckReport::combine("hom-maltsev", vec![gate, main], a.is_multiplicative());
    r.cross_checks.push(cross);
    r
}

/// Maltsev identity of a plain algebra whose product is the bracket.
pub fn is_maltsev(a: &HomAlgebra) -> Result<CheckReport> {
    if !a.alpha().is_identity() {
        return Err(AlgebraError::AlphaNotIdentity);
    }
    Ok(is_hom_maltsev(a).renamed("maltsev"))
}

/// `A⁻` is Hom-Maltsev.
pub fn is_hom_maltsev_admissible(a: &HomAlgebra) -> CheckReport {
    let r = is_hom_maltsev(&commutator_algebra(a));
    prefixed(r, "commutator", "hom-maltsev-admissible", a.is_multiplicative())
}

/// `A⁻` is Hom-Lie.
pub fn is_hom_lie_admissible(a: &HomAlgebra) -> CheckReport {
    let r = is_hom_lie(&commutator_algebra(a));
    prefixed(r, "commutator", "hom-lie-admissible", a.is_multiplicative())
}

/// Commutativity and the linearized Hom-Jordan identity; the polarized
/// cubic form is evaluated as a cross-check.
pub fn is_hom_jordan(a: &HomAlgebra) -> CheckReport {
    let gate = Law::Commutativity.check(a);
    if !gate.holds {
        return CheckReport::combine("hom-jordan", vec![gate], a.is_multiplicative());
    }
    let main = Law::HomJordan.check(a);
    let cubic = Law::HomJordanCubic.check(a);
    let cross = CrossCheck {
        identity_id: cubic.identity_id.clone(),
        holds: cubic.holds,
        agrees: cubic.holds == main.holds,
    };
    let mut r = CheckReport::combine("hom-jordan", vec![gate, main], a.is_multiplicative());
    r.cross_checks.push(cross);
    r
}

/// `A⁺` is Hom-Jordan.
pub fn is_hom_jordan_admissible(a: &HomAlgebra) -> CheckReport {
    let r = is_hom_jordan(&plus_algebra(a));
    prefixed(r, "plus", "hom-jordan-admissible", a.is_multiplicative())
}

/// The three Hom-Moufang identities.
pub fn check_hom_moufang(a: &HomAlgebra) -> CheckReport {
    all_of(
        "hom-moufang",
        a,
        &[Law::Moufang1, Law::Moufang2, Law::Moufang3],
    )
}

/// Identities every Hom-alternative algebra satisfies, one report per bundle:
/// the associator cocycle, the square rule, the two left-product rules, the
/// two right-product rules, and the associator–bracket rule.
pub fn alternative_consequences(a: &HomAlgebra) -> Vec<CheckReport> {
    vec![
        all_of("associator-cocycle", a, &[Law::AssociatorCocycle]),
        all_of("square-associator", a, &[Law::SquareAssociator]),
        all_of(
            "left-product",
            a,
            &[Law::LeftProductMiddle, Law::LeftProductLast],
        ),
        all_of(
            "right-product",
            a,
            &[Law::RightProductMiddle, Law::RightProductLast],
        ),
        all_of("associator-bracket", a, &[Law::AssociatorBracket]),
    ]
}

pub fn check_alternative_consequences(a: &HomAlgebra) -> CheckReport {
    CheckReport::combine(
        "alternative-consequences",
        alternative_consequences(a),
        a.is_multiplicative(),
    )
}

/// Linearized cyclic-associator form of Hom-Maltsev-admissibility; equivalent
/// to it on Hom-flexible algebras.
pub fn check_cyclic_maltsev(a: &HomAlgebra) -> CheckReport {
    all_of("cyclic-maltsev", a, &[Law::CyclicMaltsev])
}

/// Recomputes the defect recorded in a witness.
pub fn reevaluate(a: &HomAlgebra, witness: &Witness) -> Result<Element> {
    let mut target = a.clone();
    let mut law = witness.law.as_str();
    while let Some((head, tail)) = law.split_once(':') {
        target = match head {
            "commutator" => commutator_algebra(&target),
            "plus" => plus_algebra(&target),
            _ => return Err(AlgebraError::UnknownIdentity(witness.law.clone())),
        };
        law = tail;
    }
    let law = Law::from_id(law).ok_or_else(|| AlgebraError::UnknownIdentity(witness.law.clone()))?;
    law.evaluate(&target, &witness.indices)
}

/// A class or identity bundle that can be requested by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    Multiplicativity,
    HomAssociative,
    HomAlternative,
    HomFlexible,
    HomLie,
    HomMaltsev,
    Maltsev,
    HomLieAdmissible,
    HomMaltsevAdmissible,
    HomJordan,
    HomJordanAdmissible,
    HomMoufang,
    AlternativeConsequences,
    CyclicMaltsev,
}

impl Class {
    pub const ALL: [Class; 14] = [
        Class::Multiplicativity,
        Class::HomAssociative,
        Class::HomAlternative,
        Class::HomFlexible,
        Class::HomLie,
        Class::HomMaltsev,
        Class::Maltsev,
        Class::HomLieAdmissible,
        Class::HomMaltsevAdmissible,
        Class::HomJordan,
        Class::HomJordanAdmissible,
        Class::HomMoufang,
        Class::AlternativeConsequences,
        Class::CyclicMaltsev,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Class::Multiplicativity => "multiplicativity",
            Class::HomAssociative => "hom-associative",
            Class::HomAlternative => "hom-alternative",
            Class::HomFlexible => "hom-flexible",
            Class::HomLie => "hom-lie",
            Class::HomMaltsev => "hom-maltsev",
            Class::Maltsev => "maltsev",
            Class::HomLieAdmissible => "hom-lie-admissible",
            Class::HomMaltsevAdmissible => "hom-maltsev-admissible",
            Class::HomJordan => "hom-jordan",
            Class::HomJordanAdmissible => "hom-jordan-admissible",
            Class::HomMoufang => "hom-moufang",
            Class::AlternativeConsequences => "alternative-consequences",
            Class::CyclicMaltsev => "cyclic-maltsev",
        }
    }

    pub fn from_name(name: &str) -> Option<Class> {
        Class::ALL.iter().copied().find(|c| c.name() == name)
    }

    pub fn run(self, a: &HomAlgebra) -> Result<CheckReport> {
        Ok(match self {
            Class::Multiplicativity => a.check_multiplicativity(),
            Class::HomAssociative => is_hom_associative(a),
            Class::HomAlternative => is_hom_alternative(a),
            Class::HomFlexible => is_hom_flexible(a),
            Class::HomLie => is_hom_lie(a),
            Class::HomMaltsev => is_hom_maltsev(a),
            Class::Maltsev => return is_maltsev(a),
            Class::HomLieAdmissible => is_hom_lie_admissible(a),
            Class::HomMaltsevAdmissible => is_hom_maltsev_admissible(a),
            Class::HomJordan => is_hom_jordan(a),
            Class::HomJordanAdmissible => is_hom_jordan_admissible(a),
            Class::HomMoufang => check_hom_moufang(a),
            Class::AlternativeConsequences => check_alternative_consequences(a),
            Class::CyclicMaltsev => check_cyclic_maltsev(a),
        })
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Verdicts of every class predicate on one algebra.
#[derive(Clone, Debug)]
pub struct Classification {
    pub name: String,
    pub multiplicative: bool,
    pub verdicts: Vec<(Class, CheckReport)>,
}

impl Classification {
    pub fn report(&self, class: Class) -> Option<&CheckReport> {
        self.verdicts.iter().find(|(c, _)| *c == class).map(|(_, r)| r)
    }

    /// `None` if the class was not evaluated.
    pub fn holds(&self, class: Class) -> Option<bool> {
        self.report(class).map(|r| r.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|(_, r)| r.holds)
    }
}

/// Runs every predicate and cross-validates the verdicts against the known
/// implications between the classes. A violated implication is reported as
/// [`AlgebraError::Inconsistent`].
pub fn classify(a: &HomAlgebra) -> Result<Classification> {
    let mut classes = vec![
        Class::Multiplicativity,
        Class::HomAssociative,
        Class::HomAlternative,
        Class::HomFlexible,
        Class::HomLie,
        Class::HomMaltsev,
        Class::HomLieAdmissible,
        Class::HomMaltsevAdmissible,
        Class::HomJordan,
        Class::HomJordanAdmissible,
        Class::HomMoufang,
        Class::AlternativeConsequences,
    ];
    let mut verdicts = Vec::new();
    for c in classes.drain(..) {
        verdicts.push((c, c.run(a)?));
    }
    let mut out = Classification {
        name: a.name().to_string(),
        multiplicative: a.is_multiplicative(),
        verdicts,
    };
    if out.holds(Class::HomFlexible) == Some(true) {
        out.verdicts
            .push((Class::CyclicMaltsev, Class::CyclicMaltsev.run(a)?));
    }
    check_consistency(&out)?;
    Ok(out)
}

fn check_consistency(c: &Classification) -> Result<()> {
    let v = |class| c.holds(class).unwrap_or(false);
    let fail = |what: &str| Err(AlgebraError::Inconsistent(format!("{}: {what}", c.name)));

    let assoc = v(Class::HomAssociative);
    let alt = v(Class::HomAlternative);
    let lie_adm = v(Class::HomLieAdmissible);
    if assoc && !alt {
        return fail("Hom-associative but not Hom-alternative");
    }
    if alt && !v(Class::HomFlexible) {
        return fail("Hom-alternative but not Hom-flexible");
    }
    if assoc != (alt && lie_adm) {
        return fail("Hom-associativity differs from Hom-alternative and Hom-Lie-admissible");
    }
    if v(Class::HomLie) && !v(Class::HomMaltsev) {
        return fail("Hom-Lie but not Hom-Maltsev");
    }
    if lie_adm && !v(Class::HomMaltsevAdmissible) {
        return fail("Hom-Lie-admissible but not Hom-Maltsev-admissible");
    }
    // The cubic and linear Hom-Jordan forms agree on every commutative input.
    for class in [Class::HomJordan, Class::HomJordanAdmissible] {
        if let Some(r) = c.report(class) {
            if r.cross_checks.iter().any(|x| !x.agrees) {
                return fail("Hom-Jordan linearizations disagree");
            }
        }
    }
    if let Some(cm) = c.holds(Class::CyclicMaltsev) {
        if cm != v(Class::HomMaltsevAdmissible) {
            return fail("cyclic associator form disagrees with Hom-Maltsev-admissibility");
        }
    }
    if c.multiplicative {
        for class in [Class::HomMaltsev, Class::HomMaltsevAdmissible] {
            if let Some(r) = c.report(class) {
                if r.cross_checks.iter().any(|x| !x.agrees) {
                    return fail("Hom-Maltsev linearizations disagree");
                }
            }
        }
        if alt {
            for (class, what) in [
                (Class::HomMaltsevAdmissible, "Hom-Maltsev-admissible"),
                (Class::HomJordanAdmissible, "Hom-Jordan-admissible"),
                (Class::HomMoufang, "Hom-Moufang"),
                (Class::AlternativeConsequences, "alternative consequences"),
            ] {
                if !v(class) {
                    return fail(&format!("Hom-alternative but not {what}"));
                }
            }
        }
    }
    Ok(())
}
