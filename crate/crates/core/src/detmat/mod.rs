//! Stacked-row symbolic matrices over the generic X, Y, Z matrices.

mod identities;
mod text;

pub use identities::{identity_instances, identity_pair, koszul_g, laplace_pairs, topx_sum, Identity};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poly::{Family, Polynomial, Rational, Ring, VariableId};

/// What a single row of a stacked matrix is made of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RowKind {
    X,
    Y,
    Z,
    /// Entries `x[r,c] - y[r,c]`.
    XminusY,
    /// `low` family in columns `<= upto`, the other of x/y beyond.
    Split { low: Family, upto: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RowSpec {
    pub kind: RowKind,
    pub row: usize,
}

impl RowSpec {
    pub fn new(kind: RowKind, row: usize) -> Self {
        RowSpec { kind, row }
    }

    pub fn entry(&self, ring: &Ring, col: usize) -> Result<Polynomial> {
        let var = |f: Family| -> Result<Polynomial> {
            let v = VariableId::indexed(f, self.row, col);
            if !ring.contains(v) {
                return Err(Error::IndexOutOfRange(v.to_string()));
            }
            Polynomial::var(ring, v)
        };
        match self.kind {
            RowKind::X => var(Family::X),
            RowKind::Y => var(Family::Y),
            RowKind::Z => var(Family::Z),
            RowKind::XminusY => Ok(var(Family::X)?.sub(&var(Family::Y)?)),
            RowKind::Split { low, upto } => {
                let high = if low == Family::X { Family::Y } else { Family::X };
                var(if col <= upto { low } else { high })
            }
        }
    }
}

/// Rows `from..=to` of one kind; empty when `from > to`.
pub fn block(kind: RowKind, from: usize, to: usize) -> Vec<RowSpec> {
    (from..=to).map(|r| RowSpec::new(kind, r)).collect()
}

/// Rows listed in order (not sorted) over a shared list of columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolicMatrix {
    pub rows: Vec<RowSpec>,
    pub cols: Vec<usize>,
}

impl SymbolicMatrix {
    pub fn new(rows: Vec<RowSpec>, cols: Vec<usize>) -> Self {
        SymbolicMatrix { rows, cols }
    }

    /// Concatenates row blocks.
    pub fn stack(blocks: &[Vec<RowSpec>], cols: &[usize]) -> Self {
        SymbolicMatrix {
            rows: blocks.concat(),
            cols: cols.to_vec(),
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols.len()
    }

    pub fn determinant(&self, ring: &Ring) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows.len(),
                cols: self.cols.len(),
            });
        }
        let n = self.rows.len();
        if n > 31 {
            return Err(Error::IndexOutOfRange(format!("{n}x{n} determinant")));
        }
        let entries = self
            .rows
            .iter()
            .map(|r| self.cols.iter().map(|&c| r.entry(ring, c)).collect())
            .collect::<Result<Vec<Vec<Polynomial>>>>()?;
        let mut memo = HashMap::new();
        Ok(expand(&entries, 0, 0, &mut memo))
    }
}

/// Cofactor expansion along row `depth`; `used` marks consumed columns.
fn expand(
    entries: &[Vec<Polynomial>],
    depth: usize,
    used: u32,
    memo: &mut HashMap<u32, Polynomial>,
) -> Polynomial {
    let n = entries.len();
    if depth == n {
        return Polynomial::one();
    }
    if let Some(p) = memo.get(&used) {
        return p.clone();
    }
    let mut acc = Polynomial::zero();
    let mut free_before = 0;
    for c in 0..n {
        if used & (1 << c) != 0 {
            continue;
        }
        let e = &entries[depth][c];
        if !e.is_zero() {
            let minor = expand(entries, depth + 1, used | (1 << c), memo);
            if !minor.is_zero() {
                let term = e.mul(&minor);
                acc = if free_before % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
        }
        free_before += 1;
    }
    memo.insert(used, acc.clone());
    acc
}

/// All `k`-subsets of `items` in lexicographic order of positions.
pub fn subsets<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let n = items.len();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i].clone()).collect());
        let Some(i) = (0..k).rev().find(|&i| idx[i] < i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The `s x s` minors of rows `1..=s`, columns `1..=t` of X or Y, one per
/// ascending column choice, in lexicographic order of the choices.
pub fn maximal_minors(
    ring: &Ring,
    family: Family,
    s: usize,
    t: usize,
) -> Result<Vec<(Vec<usize>, Polynomial<Rational>)>> {
    if s > t {
        return Err(Error::InvalidParams(format!("{s} x {s} minors of a {s} x {t} matrix")));
    }
    let kind = match family {
        Family::X => RowKind::X,
        Family::Y => RowKind::Y,
        _ => return Err(Error::InvalidParams("minors are taken of X or Y".into())),
    };
    let cols: Vec<usize> = (1..=t).collect();
    subsets(&cols, s)
        .into_iter()
        .map(|c| {
            let det = SymbolicMatrix::new(block(kind, 1, s), c.clone()).determinant(ring)?;
            Ok((c, det))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ProblemParams;

    fn ring(m: usize, n: usize) -> Ring {
        Ring::paper(&ProblemParams::new(m, n, 2, 2, 2, 2).unwrap()).unwrap()
    }

    #[test]
    fn small_determinants() {
        let r = ring(3, 4);
        let empty = SymbolicMatrix::new(vec![], vec![]);
        assert_eq!(empty.determinant(&r).unwrap(), Polynomial::one());
        let rep = SymbolicMatrix::new(block(RowKind::X, 1, 1).repeat(2), vec![1, 2]);
        assert!(rep.determinant(&r).unwrap().is_zero());
        let m = SymbolicMatrix::new(block(RowKind::X, 1, 2), vec![1, 2]);
        assert_eq!(
            r.fmt_poly(&m.determinant(&r).unwrap()),
            "-x[1,2]*x[2,1] + x[1,1]*x[2,2]"
        );
        let bad = SymbolicMatrix::new(block(RowKind::X, 1, 2), vec![1]);
        assert!(matches!(bad.determinant(&r), Err(Error::NonSquare { rows: 2, cols: 1 })));
        let out = SymbolicMatrix::new(block(RowKind::X, 4, 4), vec![1]);
        assert!(matches!(out.determinant(&r), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn minors_and_leading_terms() {
        let r = ring(3, 4);
        let ys = maximal_minors(&r, Family::Y, 2, 3).unwrap();
        let cols: Vec<Vec<usize>> = ys.iter().map(|(c, _)| c.clone()).collect();
        assert_eq!(cols, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        let xs = maximal_minors(&r, Family::X, 3, 4).unwrap();
        assert_eq!(xs.len(), 4);
        let lm = r.fmt_monomial(xs[0].1.lm());
        assert_eq!(lm, "x[1,3]*x[2,2]*x[3,1]");
        assert!(maximal_minors(&r, Family::X, 3, 2).is_err());
    }

    #[test]
    fn split_rows() {
        let r = ring(2, 4);
        let row = RowSpec::new(RowKind::Split { low: Family::X, upto: 2 }, 1);
        assert_eq!(r.fmt_poly(&row.entry(&r, 2).unwrap()), "x[1,2]");
        assert_eq!(r.fmt_poly(&row.entry(&r, 3).unwrap()), "y[1,3]");
    }

    #[test]
    fn subsets_enumerate() {
        assert_eq!(subsets(&[1, 2, 3], 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(&[1, 2], 0), vec![Vec::<i32>::new()]);
        assert!(subsets(&[1], 2).is_empty());
        assert_eq!(subsets(&[1, 2, 3, 4], 4).len(), 1);
    }
}
