use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use super::order::{SparseMonomial, TermOrder};
use super::var::{Family, ProblemParams, VariableId};
use crate::error::{Error, Result};

pub const MAX_VARS: usize = 64;

/// Dense exponent vector laid out by a [`Ring`]: slot 0 holds the largest
/// variable. Because every supported order is lexicographic in that layout,
/// the derived `Ord` is exactly the ring's term order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
}

impl Default for Monomial {
    fn default() -> Self {
        Monomial::one()
    }
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial {
            exps: [0; MAX_VARS],
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn exponent(&self, slot: usize) -> u32 {
        self.exps[slot] as u32
    }

    pub fn exponents(&self) -> &[u8; MAX_VARS] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("exponent overflow");
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`; the caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let mut exps = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i] - other.exps[i];
        }
        Monomial { exps }
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.div(other))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].max(other.exps[i]);
        }
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].min(other.exps[i]);
        }
        Monomial { exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn set_exponent(&mut self, slot: usize, e: u32) -> Result<()> {
        self.exps[slot] = u8::try_from(e).map_err(|_| Error::ExponentOverflow)?;
        Ok(())
    }

    /// Bit `i` set iff slot `i` has a positive exponent.
    pub fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e != 0 {
                mask |= 1 << i;
            }
        }
        mask
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| format!("v{i}^{e}"))
            .collect();
        write!(f, "[{}]", nz.join(" "))
    }
}

/// A polynomial ring `Q[vars]` together with its term order. Determines the
/// slot layout of every [`Monomial`] built through it.
#[derive(Clone, Debug)]
pub struct Ring {
    vars: Vec<VariableId>,
    index: HashMap<VariableId, usize>,
    order: TermOrder,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}

impl Eq for Ring {}

/// All `x`, `y`, `z` variables of an `m x n` problem, optionally with `t`.
pub fn universe(params: &ProblemParams, with_t: bool) -> Vec<VariableId> {
    let mut vars = Vec::with_capacity(3 * params.m * params.n + 1);
    if with_t {
        vars.push(VariableId::t());
    }
    for family in [Family::Z, Family::X, Family::Y] {
        for i in 1..=params.m {
            for j in 1..=params.n {
                vars.push(VariableId::indexed(family, i, j));
            }
        }
    }
    vars
}

impl Ring {
    pub fn new(universe: &[VariableId], order: TermOrder) -> Result<Ring> {
        if universe.len() > MAX_VARS {
            return Err(Error::TooManyVariables(universe.len()));
        }
        let vars = order.sequence(universe)?;
        let index = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        Ok(Ring { vars, index, order })
    }

    /// Ring of all x, y, z variables under PaperLex.
    pub fn paper(params: &ProblemParams) -> Result<Ring> {
        Ring::new(&universe(params, false), TermOrder::PaperLex)
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: TermOrder) -> Result<Ring> {
        Ring::new(&self.vars, order)
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Variables from largest to smallest.
    pub fn variables(&self) -> &[VariableId] {
        &self.vars
    }

    pub fn var(&self, slot: usize) -> VariableId {
        self.vars[slot]
    }

    pub fn slot(&self, v: VariableId) -> Result<usize> {
        self.index
            .get(&v)
            .copied()
            .ok_or_else(|| Error::UnknownVariable(v.to_string()))
    }

    pub fn contains(&self, v: VariableId) -> bool {
        self.index.contains_key(&v)
    }

    pub fn var_monomial(&self, v: VariableId) -> Result<Monomial> {
        let mut m = Monomial::one();
        m.set_exponent(self.slot(v)?, 1)?;
        Ok(m)
    }

    pub fn monomial(&self, sparse: &SparseMonomial) -> Result<Monomial> {
        let mut m = Monomial::one();
        for (v, e) in &sparse.0 {
            m.set_exponent(self.slot(*v)?, *e)?;
        }
        Ok(m)
    }

    pub fn sparse(&self, m: &Monomial) -> SparseMonomial {
        SparseMonomial::from_pairs(
            (0..self.nvars())
                .filter(|&i| m.exponent(i) > 0)
                .map(|i| (self.vars[i], m.exponent(i))),
        )
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.cmp(b)
    }

    /// Whether `v` occurs in `m`.
    pub fn involves(&self, m: &Monomial, v: VariableId) -> bool {
        self.index.get(&v).is_some_and(|&s| m.exponent(s) > 0)
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for i in 0..self.nvars() {
            let e = m.exponent(i);
            if e == 1 {
                parts.push(self.vars[i].to_string());
            } else if e > 1 {
                parts.push(format!("{}^{}", self.vars[i], e));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}
