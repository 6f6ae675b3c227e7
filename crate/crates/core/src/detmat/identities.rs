//! Determinant expansion identities as explicit polynomial pairs.

use super::{block, subsets, RowKind, SymbolicMatrix};
use crate::error::{Error, Result};
use crate::poly::{Family, Polynomial, ProblemParams, Ring, VariableId};

/// `z[i,j](x[l,k] - y[l,k]) - z[l,k](x[i,j] - y[i,j])`.
pub fn koszul_g(ring: &Ring, i: usize, j: usize, l: usize, k: usize) -> Result<Polynomial> {
    let v = |f: Family, r: usize, c: usize| -> Result<Polynomial> {
        let id = VariableId::indexed(f, r, c);
        if !ring.contains(id) {
            return Err(Error::IndexOutOfRange(id.to_string()));
        }
        Polynomial::var(ring, id)
    };
    let d = |r, c| -> Result<Polynomial> { Ok(v(Family::X, r, c)?.sub(&v(Family::Y, r, c)?)) };
    Ok(v(Family::Z, i, j)?
        .mul(&d(l, k)?)
        .sub(&v(Family::Z, l, k)?.mul(&d(i, j)?)))
}

/// Generalized Laplace expansion along the rows at positions `p1 < p2`
/// (0-based) of a matrix with `ncols` columns. Yields `(sign, c1, c2, rest)`
/// with `c1 < c2` column positions and `rest` the complementary positions;
/// the sign is `(-1)^(sum of 1-based row and column positions)`.
pub fn laplace_pairs(p1: usize, p2: usize, ncols: usize) -> Vec<(i64, usize, usize, Vec<usize>)> {
    let all: Vec<usize> = (0..ncols).collect();
    subsets(&all, 2)
        .into_iter()
        .map(|pair| {
            let (c1, c2) = (pair[0], pair[1]);
            let sign = if (p1 + p2 + c1 + c2).is_multiple_of(2) { 1 } else { -1 };
            let rest = all.iter().copied().filter(|&c| c != c1 && c != c2).collect();
            (sign, c1, c2, rest)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `|Y| = |X| + sum (-1)^(i+j) |Y^{1,i-1}; X^{i+1,n}|_(no j) (y_ij - x_ij)` on `n x n`.
    YtoX { n: usize },
    /// Row `i` of y's up to column `j` and x's after, between Y above and X below.
    XtoxY { i: usize, j: usize, n: usize },
    /// `det[z_r; x_r; y_r]` on three columns as a combination of g's.
    Gij { row: usize, cols: [usize; 3] },
    /// `det[z_r; x_u - y_u]` as two g's plus the swapped determinant.
    SwitchG { r: usize, u: usize, cols: [usize; 2] },
    /// `det[Y^{1,r-1}; Z^r; X^{r+1,s}]` with `s = cols.len()`, rewritten in y's.
    XToxY { r: usize, cols: Vec<usize> },
}

impl Identity {
    pub fn name(&self) -> &'static str {
        match self {
            Identity::YtoX { .. } => "YtoX",
            Identity::XtoxY { .. } => "xtox_y",
            Identity::Gij { .. } => "g_ij_expansion",
            Identity::SwitchG { .. } => "switch_g",
            Identity::XToxY { .. } => "xTox_y",
        }
    }
}

fn ascending(cols: &[usize]) -> Result<()> {
    if cols.windows(2).any(|w| w[0] >= w[1]) || cols.first() == Some(&0) {
        return Err(Error::MalformedIndices(format!("{cols:?} is not strictly ascending from 1")));
    }
    Ok(())
}

fn det(ring: &Ring, blocks: &[Vec<super::RowSpec>], cols: &[usize]) -> Result<Polynomial> {
    SymbolicMatrix::stack(blocks, cols).determinant(ring)
}

fn diff(ring: &Ring, r: usize, c: usize) -> Result<Polynomial> {
    let x = Polynomial::var(ring, VariableId::x(r, c))?;
    let y = Polynomial::var(ring, VariableId::y(r, c))?;
    Ok(x.sub(&y))
}

fn signed(p: Polynomial, sign: i64) -> Polynomial {
    if sign < 0 {
        p.neg()
    } else {
        p
    }
}

fn without(cols: &[usize], k: usize) -> Vec<usize> {
    cols.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, c)| *c).collect()
}

/// Both sides of the named identity; `lhs - rhs` is identically zero.
pub fn identity_pair(ring: &Ring, id: &Identity) -> Result<(Polynomial, Polynomial)> {
    use RowKind::*;
    match id {
        Identity::YtoX { n } => {
            let n = *n;
            let cols: Vec<usize> = (1..=n).collect();
            let lhs = det(ring, &[block(Y, 1, n)], &cols)?;
            let mut rhs = det(ring, &[block(X, 1, n)], &cols)?;
            for i in 1..=n {
                for j in 1..=n {
                    let minor = det(ring, &[block(Y, 1, i - 1), block(X, i + 1, n)], &without(&cols, j - 1))?;
                    let term = minor.mul(&diff(ring, i, j)?.neg());
                    rhs = rhs.add(&signed(term, if (i + j) % 2 == 0 { 1 } else { -1 }));
                }
            }
            Ok((lhs, rhs))
        }
        Identity::XtoxY { i, j, n } => {
            let (i, j, n) = (*i, *j, *n);
            if i == 0 || i > n || j > n {
                return Err(Error::IndexOutOfRange(format!("i={i}, j={j}, n={n}")));
            }
            let cols: Vec<usize> = (1..=n).collect();
            let split = Split { low: Family::Y, upto: j };
            let lhs = det(ring, &[block(Y, 1, i - 1), block(split, i, i), block(X, i + 1, n)], &cols)?;
            let mut rhs = det(ring, &[block(Y, 1, n)], &cols)?;
            let mut add = |l: usize, k: usize| -> Result<()> {
                let minor = det(ring, &[block(Y, 1, l - 1), block(X, l + 1, n)], &without(&cols, k - 1))?;
                let term = minor.mul(&diff(ring, l, k)?);
                rhs = rhs.add(&signed(term, if (l + k).is_multiple_of(2) { 1 } else { -1 }));
                Ok(())
            };
            for k in j + 1..=n {
                add(i, k)?;
            }
            for l in i + 1..=n {
                for k in 1..=n {
                    add(l, k)?;
                }
            }
            Ok((lhs, rhs))
        }
        Identity::Gij { row, cols } => {
            ascending(cols)?;
            let r = *row;
            let lhs = det(ring, &[block(Z, r, r), block(X, r, r), block(Y, r, r)], cols)?;
            let y = |c: usize| Polynomial::var(ring, VariableId::y(r, c));
            let [a1, a2, a3] = *cols;
            let rhs = y(a1)?
                .mul(&koszul_g(ring, r, a2, r, a3)?)
                .sub(&y(a2)?.mul(&koszul_g(ring, r, a1, r, a3)?))
                .add(&y(a3)?.mul(&koszul_g(ring, r, a1, r, a2)?));
            Ok((lhs, rhs))
        }
        Identity::SwitchG { r, u, cols } => {
            let (r, u) = (*r, *u);
            let [a1, a2] = *cols;
            let lhs = det(ring, &[block(Z, r, r), block(XminusY, u, u)], cols)?;
            let rhs = koszul_g(ring, r, a1, u, a2)?
                .sub(&koszul_g(ring, r, a2, u, a1)?)
                .add(&det(ring, &[block(XminusY, r, r), block(Z, u, u)], cols)?);
            Ok((lhs, rhs))
        }
        Identity::XToxY { r, cols } => {
            ascending(cols)?;
            let (r, s) = (*r, cols.len());
            if r == 0 || r > s {
                return Err(Error::IndexOutOfRange(format!("r={r} with {s} columns")));
            }
            let lhs = det(ring, &[block(Y, 1, r - 1), block(Z, r, r), block(X, r + 1, s)], cols)?;
            let mut rhs = det(ring, &[block(Y, 1, r - 1), block(Z, r, r), block(Y, r + 1, s)], cols)?;
            for u in r + 1..=s {
                rhs = rhs.add(&det(
                    ring,
                    &[
                        block(Y, 1, r - 1),
                        block(XminusY, r, r),
                        block(Y, r + 1, u - 1),
                        block(Z, u, u),
                        block(X, u + 1, s),
                    ],
                    cols,
                )?);
                for (sign, c1, c2, rest) in laplace_pairs(r - 1, u - 1, s) {
                    let (c1, c2) = (cols[c1], cols[c2]);
                    let rest: Vec<usize> = rest.iter().map(|&p| cols[p]).collect();
                    let g = koszul_g(ring, r, c1, u, c2)?.sub(&koszul_g(ring, r, c2, u, c1)?);
                    let minor = det(ring, &[block(Y, 1, r - 1), block(Y, r + 1, u - 1), block(X, u + 1, s)], &rest)?;
                    rhs = rhs.add(&signed(g.mul(&minor), sign));
                }
            }
            Ok((lhs, rhs))
        }
    }
}

/// Every instance of the five identities that fits inside the `m x n`
/// matrices of `params`.
pub fn identity_instances(params: &ProblemParams) -> Vec<Identity> {
    let (m, n) = (params.m, params.n);
    let cols: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for size in 1..=m {
        out.push(Identity::YtoX { n: size });
        for i in 1..=size {
            for j in 0..=size {
                out.push(Identity::XtoxY { i, j, n: size });
            }
        }
        for c in subsets(&cols, size) {
            for r in 1..=size {
                out.push(Identity::XToxY { r, cols: c.clone() });
            }
        }
    }
    for row in 1..=m {
        for c in subsets(&cols, 3) {
            out.push(Identity::Gij { row, cols: [c[0], c[1], c[2]] });
        }
    }
    for r in 1..=m {
        for u in 1..=m {
            for a1 in 1..=n {
                for a2 in 1..=n {
                    if a1 != a2 {
                        out.push(Identity::SwitchG { r, u, cols: [a1, a2] });
                    }
                }
            }
        }
    }
    out
}

/// `sum_{u=r}^{s2} det[X^r; Y^{1,u-1}; Z^u; X^{u+1,s1}]` on `s1 + 1` columns.
/// Summands with `u > s1` would not be square and are left out.
pub fn topx_sum(ring: &Ring, params: &ProblemParams, r: usize, cols: &[usize]) -> Result<Polynomial> {
    use RowKind::*;
    let s1 = params.s1;
    ascending(cols)?;
    if cols.len() != s1 + 1 {
        return Err(Error::MalformedIndices(format!("expected {} columns, got {cols:?}", s1 + 1)));
    }
    if r == 0 || r > s1 {
        return Err(Error::IndexOutOfRange(format!("r={r}, s1={s1}")));
    }
    let mut acc = Polynomial::zero();
    for u in r..=params.s2.min(s1) {
        acc = acc.add(&det(
            ring,
            &[block(X, r, r), block(Y, 1, u - 1), block(Z, u, u), block(X, u + 1, s1)],
            cols,
        )?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::paper(&ProblemParams::new(3, 4, 3, 4, 2, 4).unwrap()).unwrap()
    }

    #[test]
    fn g_examples() {
        let r = ring();
        assert!(koszul_g(&r, 1, 1, 1, 1).unwrap().is_zero());
        assert_eq!(
            r.fmt_poly(&koszul_g(&r, 1, 1, 1, 2).unwrap()),
            "z[1,1]*x[1,2] - z[1,1]*y[1,2] - z[1,2]*x[1,1] + z[1,2]*y[1,1]"
        );
        let a = koszul_g(&r, 2, 3, 1, 4).unwrap();
        let b = koszul_g(&r, 1, 4, 2, 3).unwrap();
        assert!(a.add(&b).is_zero());
        assert!(koszul_g(&r, 4, 1, 1, 1).is_err());
    }

    #[test]
    fn ytox_base_case() {
        let r = ring();
        let (lhs, rhs) = identity_pair(&r, &Identity::YtoX { n: 1 }).unwrap();
        assert_eq!(r.fmt_poly(&lhs), "y[1,1]");
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn gij_example() {
        let r = ring();
        let (lhs, rhs) = identity_pair(&r, &Identity::Gij { row: 1, cols: [1, 2, 3] }).unwrap();
        assert_eq!(lhs, rhs);
        assert!(identity_pair(&r, &Identity::Gij { row: 1, cols: [2, 1, 3] }).is_err());
    }

    #[test]
    fn laplace_signs() {
        let pairs = laplace_pairs(0, 1, 3);
        assert_eq!(pairs.len(), 3);
        assert_eq!(pairs[0], (1, 0, 1, vec![2]));
        assert_eq!(pairs[1], (-1, 0, 2, vec![1]));
    }

    #[test]
    fn topx_single_summand() {
        let p = ProblemParams::new(3, 4, 2, 4, 2, 4).unwrap();
        let r = Ring::paper(&p).unwrap();
        let got = topx_sum(&r, &p, 2, &[1, 2, 3]).unwrap();
        let want = det(&r, &[block(RowKind::X, 2, 2), block(RowKind::Y, 1, 1), block(RowKind::Z, 2, 2)], &[1, 2, 3]).unwrap();
        assert_eq!(got, want);
        assert!(topx_sum(&r, &p, 1, &[1, 2]).is_err());
    }
}
