use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::var::{Family, VariableId};
use crate::error::{Error, Result};

/// Monomial orders used by the engine. Every variant is lexicographic with
/// respect to some total order on the variables, which is what lets the
/// packed representation compare monomials with a plain array comparison.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// `t > z > x > y`. Within x and y: row 1 first, larger column first.
    /// Within z: row 1 first, smaller column first.
    PaperLex,
    /// Lex with the variables listed from largest to smallest.
    PlainLex(Vec<VariableId>),
    /// Block variables dominate; ties broken by `inner`.
    BlockElim {
        block: BTreeSet<VariableId>,
        inner: Box<TermOrder>,
    },
}

/// Sort key for a variable under PaperLex: smaller key = larger variable.
fn paper_key(v: VariableId) -> (u8, i32, i32) {
    let (r, c) = (v.row as i32, v.col as i32);
    match v.family {
        Family::T => (0, 0, 0),
        Family::Z => (1, r, c),
        Family::X => (2, r, -c),
        Family::Y => (3, r, -c),
    }
}

impl TermOrder {
    pub fn block_elim(block: impl IntoIterator<Item = VariableId>, inner: TermOrder) -> Self {
        TermOrder::BlockElim {
            block: block.into_iter().collect(),
            inner: Box::new(inner),
        }
    }

    /// PaperLex with the x and y families exchanged (`z > y > x`),
    /// restricted to `universe`.
    pub fn paper_lex_swapped(universe: &[VariableId]) -> Self {
        let mut vars = universe.to_vec();
        vars.sort_by_key(|v| paper_key(v.swap_xy()));
        TermOrder::PlainLex(vars)
    }

    /// Lexicographic key of a variable: smaller key means larger variable.
    fn var_key(&self, v: VariableId) -> Result<Vec<i64>> {
        match self {
            TermOrder::PaperLex => {
                let (f, r, c) = paper_key(v);
                Ok(vec![f as i64, r as i64, c as i64])
            }
            TermOrder::PlainLex(seq) => seq
                .iter()
                .position(|w| *w == v)
                .map(|p| vec![p as i64])
                .ok_or_else(|| Error::UnknownVariable(v.to_string())),
            TermOrder::BlockElim { block, inner } => {
                let mut key = vec![if block.contains(&v) { 0 } else { 1 }];
                key.extend(inner.var_key(v)?);
                Ok(key)
            }
        }
    }

    /// The variables of `universe` listed from largest to smallest.
    pub fn sequence(&self, universe: &[VariableId]) -> Result<Vec<VariableId>> {
        let mut keyed = universe
            .iter()
            .map(|&v| Ok((self.var_key(v)?, v)))
            .collect::<Result<Vec<_>>>()?;
        keyed.sort();
        let seq: Vec<VariableId> = keyed.into_iter().map(|(_, v)| v).collect();
        if seq.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParams("duplicate variable in universe".into()));
        }
        Ok(seq)
    }

    pub fn compare_variables(&self, a: VariableId, b: VariableId) -> Result<Ordering> {
        // Smaller key is the larger variable.
        Ok(self.var_key(b)?.cmp(&self.var_key(a)?))
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::PaperLex => write!(f, "paperlex"),
            TermOrder::PlainLex(seq) => {
                write!(f, "lex(")?;
                for (i, v) in seq.iter().enumerate() {
                    if i > 0 {
                        write!(f, ">")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, ")")
            }
            TermOrder::BlockElim { block, inner } => {
                write!(f, "elim{{")?;
                for (i, v) in block.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "}}/{inner}")
            }
        }
    }
}

/// Monomial as a sparse exponent map. This is the representation-independent
/// form; the engine works with [`super::Monomial`] inside a [`super::Ring`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SparseMonomial(pub BTreeMap<VariableId, u32>);

impl SparseMonomial {
    pub fn one() -> Self {
        SparseMonomial::default()
    }

    pub fn var(v: VariableId) -> Self {
        Self::from_pairs([(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (VariableId, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        SparseMonomial(map)
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_pairs(self.0.iter().chain(other.0.iter()).map(|(v, e)| (*v, *e)))
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0
            .iter()
            .all(|(v, e)| other.0.get(v).is_some_and(|f| f >= e))
    }

    pub fn exponent(&self, v: VariableId) -> u32 {
        self.0.get(&v).copied().unwrap_or(0)
    }
}

impl fmt::Display for SparseMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Compares two sparse monomials under `ord` without going through a ring.
pub fn compare_monomials(a: &SparseMonomial, b: &SparseMonomial, ord: &TermOrder) -> Result<Ordering> {
    let vars: Vec<VariableId> = a.0.keys().chain(b.0.keys()).copied().collect::<BTreeSet<_>>().into_iter().collect();
    for v in ord.sequence(&vars)? {
        match a.exponent(v).cmp(&b.exponent(v)) {
            Ordering::Equal => continue,
            other => return Ok(other),
        }
    }
    Ok(Ordering::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use VariableId as V;

    fn m(pairs: &[(VariableId, u32)]) -> SparseMonomial {
        SparseMonomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn paper_lex_examples() {
        let ord = TermOrder::PaperLex;
        let cmp = |a: VariableId, b: VariableId| compare_monomials(&SparseMonomial::var(a), &SparseMonomial::var(b), &ord).unwrap();
        assert_eq!(cmp(V::z(1, 1), V::z(1, 2)), Ordering::Greater);
        assert_eq!(cmp(V::x(1, 2), V::x(1, 1)), Ordering::Greater);
        assert_eq!(cmp(V::y(1, 2), V::y(1, 1)), Ordering::Greater);
        assert_eq!(cmp(V::x(1, 1), V::x(2, 4)), Ordering::Greater);
        // family rule regardless of indices
        assert_eq!(cmp(V::z(3, 4), V::x(1, 1)), Ordering::Greater);
        assert_eq!(cmp(V::x(3, 4), V::y(1, 1)), Ordering::Greater);
        assert_eq!(cmp(V::t(), V::z(1, 1)), Ordering::Greater);
        let a = m(&[(V::x(1, 1), 2), (V::y(2, 2), 1)]);
        assert_eq!(compare_monomials(&a, &a, &ord).unwrap(), Ordering::Equal);
    }

    #[test]
    fn block_elim_puts_block_first() {
        let ord = TermOrder::block_elim([V::t()], TermOrder::PaperLex);
        let tm = m(&[(V::t(), 1), (V::y(3, 3), 1)]);
        let big = m(&[(V::z(1, 1), 5)]);
        assert_eq!(compare_monomials(&tm, &big, &ord).unwrap(), Ordering::Greater);
        let xy = TermOrder::block_elim([V::x(1, 1), V::y(1, 1)], TermOrder::PaperLex);
        let a = m(&[(V::y(1, 1), 1)]);
        let b = m(&[(V::z(1, 1), 3)]);
        assert_eq!(compare_monomials(&a, &b, &xy).unwrap(), Ordering::Greater);
    }

    #[test]
    fn swapped_order() {
        let universe = [V::x(1, 1), V::y(1, 1), V::z(1, 1), V::y(1, 2)];
        let ord = TermOrder::paper_lex_swapped(&universe);
        assert_eq!(
            ord.sequence(&universe).unwrap(),
            vec![V::z(1, 1), V::y(1, 2), V::y(1, 1), V::x(1, 1)]
        );
    }

    #[test]
    fn plain_lex_rejects_unknown() {
        let ord = TermOrder::PlainLex(vec![V::x(1, 1)]);
        assert!(ord.sequence(&[V::y(1, 1)]).is_err());
    }
}
