//! Check reports and the basis-tuple sweep engine.

use rayon::prelude::*;
use serde::Serialize;

use crate::element::Element;

/// First failing tuple of a sweep, with the nonzero value found there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Identifier of the law that was evaluated (see [`crate::laws::Law`]).
    pub law: String,
    pub indices: Vec<usize>,
    pub defect: Element,
}

/// Outcome of a secondary, independently derived check run alongside the main one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub identity_id: String,
    pub holds: bool,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub identity_id: String,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub tuples_checked: u64,
    /// Whether the input algebra passed the multiplicativity check.
    pub multiplicative: bool,
    pub cross_checks: Vec<CrossCheck>,
}

impl CheckReport {
    pub fn holding(identity_id: impl Into<String>, tuples_checked: u64, multiplicative: bool) -> Self {
        CheckReport {
            identity_id: identity_id.into(),
            holds: true,
            witness: None,
            tuples_checked,
            multiplicative,
            cross_checks: Vec::new(),
        }
    }

    pub fn renamed(mut self, identity_id: impl Into<String>) -> Self {
        self.identity_id = identity_id.into();
        self
    }

    /// Folds several reports into one: the first failure wins, otherwise the
    /// tuple counts add up.
    pub fn combine(identity_id: &str, parts: Vec<CheckReport>, multiplicative: bool) -> Self {
        let mut total = 0;
        let mut cross_checks = Vec::new();
        for part in parts {
            total += part.tuples_checked;
            cross_checks.extend(part.cross_checks.iter().cloned());
            if !part.holds {
                return CheckReport {
                    identity_id: identity_id.to_string(),
                    tuples_checked: total,
                    multiplicative,
                    cross_checks,
                    ..part
                };
            }
        }
        CheckReport {
            cross_checks,
            ..CheckReport::holding(identity_id, total, multiplicative)
        }
    }
}

/// The set of index tuples a sweep visits.
///
/// All tuples in `[0, dim)^arity` whose first `sorted_prefix` entries are
/// non-decreasing, in lexicographic order. The sorted prefix carries the
/// indices of a polarized (symmetric) slot.
#[derive(Clone, Copy, Debug)]
pub struct Domain {
    pub dim: usize,
    pub arity: usize,
    pub sorted_prefix: usize,
}

impl Domain {
    pub fn full(dim: usize, arity: usize) -> Self {
        Domain {
            dim,
            arity,
            sorted_prefix: 0,
        }
    }

    pub fn contains(&self, t: &[usize]) -> bool {
        t.len() == self.arity
            && t.iter().all(|&i| i < self.dim)
            && t[..self.sorted_prefix.min(t.len())]
                .windows(2)
                .all(|w| w[0] <= w[1])
    }

    /// Number of tuples in the domain.
    pub fn size(&self) -> u64 {
        let k = self.sorted_prefix.min(self.arity) as u64;
        let d = self.dim as u64;
        // multisets of size k from d values, times free positions
        let mut multisets: u64 = 1;
        for i in 0..k {
            multisets = multisets * (d + i) / (i + 1);
        }
        multisets * d.pow((self.arity as u64 - k) as u32)
    }

    /// Advances `t` to the next tuple in the domain; `false` when exhausted.
    /// Positions before `fixed` are left untouched.
    fn advance(&self, t: &mut [usize], fixed: usize) -> bool {
        let mut pos = self.arity;
        while pos > fixed {
            pos -= 1;
            if t[pos] + 1 < self.dim {
                t[pos] += 1;
                for q in pos + 1..self.arity {
                    t[q] = if q < self.sorted_prefix { t[q - 1] } else { 0 };
                }
                return true;
            }
        }
        false
    }

    fn first_with_prefix(&self, prefix: &[usize]) -> Vec<usize> {
        let mut t = prefix.to_vec();
        for q in prefix.len()..self.arity {
            t.push(if q < self.sorted_prefix && q > 0 { t[q - 1] } else { 0 });
        }
        t
    }

    /// Position of `t` (1-based) in enumeration order.
    pub fn rank(&self, target: &[usize]) -> u64 {
        let mut t = self.first_with_prefix(&[]);
        let mut n = 1;
        while t.as_slice() != target {
            if !self.advance(&mut t, 0) {
                break;
            }
            n += 1;
        }
        n
    }

    fn blocks(&self) -> Vec<Vec<usize>> {
        let width = self.arity.min(2);
        let probe = Domain {
            dim: self.dim,
            arity: width,
            sorted_prefix: self.sorted_prefix.min(width),
        };
        let mut out = Vec::new();
        if width == 0 {
            out.push(Vec::new());
            return out;
        }
        let mut t = probe.first_with_prefix(&[]);
        loop {
            out.push(t.clone());
            if !probe.advance(&mut t, 0) {
                break;
            }
        }
        out
    }
}

/// Evaluates `eval` on every tuple of `domain`, stopping at the
/// lexicographically first tuple with a nonzero value.
///
/// Work is split by the first two indices and run on the current rayon pool;
/// the witness does not depend on scheduling.
pub fn sweep<F>(law: &str, domain: Domain, eval: F) -> (Option<Witness>, u64)
where
    F: Fn(&[usize]) -> Element + Sync,
{
    let blocks = domain.blocks();
    let found = blocks
        .par_iter()
        .map(|prefix| {
            let mut t = domain.first_with_prefix(prefix);
            loop {
                let v = eval(&t);
                if !v.is_zero() {
                    return Some((t, v));
                }
                if !domain.advance(&mut t, prefix.len()) {
                    return None;
                }
            }
        })
        .find_first(Option::is_some)
        .flatten();
    match found {
        Some((indices, defect)) => {
            let rank = domain.rank(&indices);
            (
                Some(Witness {
                    law: law.to_string(),
                    indices,
                    defect,
                }),
                rank,
            )
        }
        None => (None, domain.size()),
    }
}
