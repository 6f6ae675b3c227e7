use super::{check_cols, det, laplace_two_rows, sign, signed};
use crate::detmat::{block, koszul_g, RowKind, RowSpec, SymbolicMatrix};
use crate::error::{Error, Result};
use crate::poly::{Family, Polynomial, ProblemParams, Ring, VariableId};

fn check_lk(params: &ProblemParams, l: usize, k: usize) -> Result<()> {
    if l == 0 || k < l || k > params.s2.min(params.s1) {
        return Err(Error::MalformedIndices(format!("need 1 <= l <= k <= min(s1,s2), got l={l} k={k}")));
    }
    Ok(())
}

/// A signed sum of stacked determinants sharing one column list.
#[derive(Clone, Debug, Default)]
pub struct DetSum {
    pub terms: Vec<(i64, Vec<RowSpec>)>,
}

impl DetSum {
    pub fn eval(&self, ring: &Ring, cols: &[usize]) -> Result<Polynomial> {
        let mut acc = Polynomial::zero();
        for (s, rows) in &self.terms {
            let d = SymbolicMatrix::new(rows.clone(), cols.to_vec()).determinant(ring)?;
            acc = acc.add(&signed(d, *s));
        }
        Ok(acc)
    }

    /// Sum of the signed cofactors of the entry in `row` and column
    /// position `c`; summands without `row` contribute nothing.
    pub fn cofactor(&self, ring: &Ring, row: RowSpec, cols: &[usize], c: usize) -> Result<Polynomial> {
        let rest: Vec<usize> = cols.iter().enumerate().filter(|(i, _)| *i != c).map(|(_, &v)| v).collect();
        let mut acc = Polynomial::zero();
        for (s, rows) in &self.terms {
            let Some(pos) = rows.iter().position(|r| *r == row) else { continue };
            let mut minor_rows = rows.clone();
            minor_rows.remove(pos);
            let d = SymbolicMatrix::new(minor_rows, rest.clone()).determinant(ring)?;
            acc = acc.add(&signed(d, s * sign(pos + c)));
        }
        Ok(acc)
    }
}

/// The determinant summands of `f^{l,k}`.
pub fn f_lk_summands(params: &ProblemParams, l: usize, k: usize) -> Result<DetSum> {
    check_lk(params, l, k)?;
    let s1 = params.s1;
    let top = block(RowKind::Z, l, k - 1);
    let xs = block(RowKind::X, 1, l - 1);
    let mut out = DetSum::default();
    for r in k..=params.s2.min(s1) {
        let sr = sign(r + 1);
        out.terms.push((
            sr,
            [top.clone(), block(RowKind::Z, r, r), xs.clone(), block(RowKind::Y, 1, r - 1), block(RowKind::Y, r + 1, s1)]
                .concat(),
        ));
        for u in r + 1..=s1 {
            out.terms.push((
                sr,
                [
                    top.clone(),
                    block(RowKind::XminusY, r, r),
                    xs.clone(),
                    block(RowKind::Y, 1, r - 1),
                    block(RowKind::Y, r + 1, u - 1),
                    block(RowKind::Z, u, u),
                    block(RowKind::X, u + 1, s1),
                ]
                .concat(),
            ));
        }
    }
    Ok(out)
}

/// `f^{l,k}` on `s1 + k - 1` columns.
pub fn f_lk(ring: &Ring, params: &ProblemParams, l: usize, k: usize, cols: &[usize]) -> Result<Polynomial> {
    let sum = f_lk_summands(params, l, k)?;
    check_cols(cols, params.s1 + k - 1, params.n)?;
    sum.eval(ring, cols)
}

/// `p^{l,k} = sum_{r=k}^{s2} (-1)^(r+1) det[Z^{l,k-1}; Z^r; X^{1,l-1}; Y^{1,r-1}; X^{r+1,s1}]`.
pub fn p_lk(ring: &Ring, params: &ProblemParams, l: usize, k: usize, cols: &[usize]) -> Result<Polynomial> {
    check_lk(params, l, k)?;
    let s1 = params.s1;
    check_cols(cols, s1 + k - 1, params.n)?;
    let mut acc = Polynomial::zero();
    for r in k..=params.s2.min(s1) {
        let d = det(
            ring,
            &[
                block(RowKind::Z, l, k - 1),
                block(RowKind::Z, r, r),
                block(RowKind::X, 1, l - 1),
                block(RowKind::Y, 1, r - 1),
                block(RowKind::X, r + 1, s1),
            ],
            cols,
        )?;
        acc = acc.add(&signed(d, sign(r + 1)));
    }
    Ok(acc)
}

/// The combination of g's with `p^{l,k} = f^{l,k} + correction`: for each
/// `r` and `u > r`, the Laplace expansion of
/// `det[Z^{l,k-1}; Z^r; X^{1,l-1}; Y^{1,r-1}; Y^{r+1,u-1}; D^u; X^{u+1,s1}]`
/// along the rows `Z^r`, `D^u` keeping only the g part of each 2x2 minor.
pub fn p_correction(ring: &Ring, params: &ProblemParams, l: usize, k: usize, cols: &[usize]) -> Result<Polynomial> {
    check_lk(params, l, k)?;
    let s1 = params.s1;
    check_cols(cols, s1 + k - 1, params.n)?;
    let mut acc = Polynomial::zero();
    for r in k..=params.s2.min(s1) {
        for u in r + 1..=s1 {
            let rows: Vec<RowSpec> = [
                block(RowKind::Z, l, k - 1),
                block(RowKind::Z, r, r),
                block(RowKind::X, 1, l - 1),
                block(RowKind::Y, 1, r - 1),
                block(RowKind::Y, r + 1, u - 1),
                block(RowKind::XminusY, u, u),
                block(RowKind::X, u + 1, s1),
            ]
            .concat();
            let p1 = k - l;
            let p2 = rows.iter().position(|s| s.kind == RowKind::XminusY).unwrap();
            let e = laplace_two_rows(ring, &rows, p1, p2, cols, |c1, c2| {
                Ok(koszul_g(ring, r, c1, u, c2)?.sub(&koszul_g(ring, r, c2, u, c1)?))
            })?;
            acc = acc.add(&signed(e, sign(r + 1)));
        }
    }
    Ok(acc)
}

fn var(ring: &Ring, v: VariableId) -> Result<Polynomial> {
    if !ring.contains(v) {
        return Err(Error::IndexOutOfRange(v.to_string()));
    }
    Polynomial::var(ring, v)
}

fn diff(ring: &Ring, r: usize, c: usize) -> Result<Polynomial> {
    Ok(var(ring, VariableId::x(r, c))?.sub(&var(ring, VariableId::y(r, c))?))
}

/// `U_{p,q,a}`: `z[p,q] |X_a|` with row p rewritten in y beyond column q
/// and rows below p in y, after removing the g multiples.
pub fn u_poly(ring: &Ring, params: &ProblemParams, p: usize, q: usize, cols: &[usize]) -> Result<Polynomial> {
    let s1 = params.s1;
    if p == 0 || p > s1 || q == 0 || q > params.n {
        return Err(Error::MalformedIndices(format!("U needs 1 <= p <= s1, 1 <= q <= n, got p={p} q={q}")));
    }
    check_cols(cols, s1, params.t1)?;
    let mixed = block(RowKind::Split { low: Family::X, upto: q }, p, p);
    let above = block(RowKind::X, 1, p - 1);
    let zpq = var(ring, VariableId::z(p, q))?;
    let dpq = diff(ring, p, q)?;

    let mut acc = zpq.mul(&det(ring, &[above.clone(), mixed.clone(), block(RowKind::Y, p + 1, s1)], cols)?);
    let others = [block(RowKind::X, 1, p - 1), block(RowKind::X, p + 1, s1)].concat();
    for (c, &a) in cols.iter().enumerate() {
        if a <= q {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&b| b != a).collect();
        let minor = SymbolicMatrix::new(others.clone(), rest).determinant(ring)?;
        let t = dpq.mul(&var(ring, VariableId::z(p, a))?).mul(&minor);
        acc = acc.add(&signed(t, sign(p - 1 + c)));
    }
    for u in p + 1..=s1 {
        let d = det(
            ring,
            &[
                above.clone(),
                mixed.clone(),
                block(RowKind::Y, p + 1, u - 1),
                block(RowKind::Z, u, u),
                block(RowKind::X, u + 1, s1),
            ],
            cols,
        )?;
        acc = acc.add(&dpq.mul(&d));
    }
    Ok(acc)
}

/// `H^{l,k,q}`: `z[l-1,q] f^{l,k}` with the entries `x[l-1,a]`, `a > q`,
/// traded for `g[l-1,q;l-1,a]`.
pub fn h_poly(ring: &Ring, params: &ProblemParams, l: usize, k: usize, q: usize, cols: &[usize]) -> Result<Polynomial> {
    if l < 2 || q == 0 || q > params.n {
        return Err(Error::MalformedIndices(format!("H needs l >= 2 and 1 <= q <= n, got l={l} q={q}")));
    }
    let sum = f_lk_summands(params, l, k)?;
    check_cols(cols, params.s1 + k - 1, params.n)?;
    let mut acc = var(ring, VariableId::z(l - 1, q))?.mul(&sum.eval(ring, cols)?);
    let row = RowSpec::new(RowKind::X, l - 1);
    for (c, &a) in cols.iter().enumerate() {
        if a <= q {
            continue;
        }
        let cof = sum.cofactor(ring, row, cols, c)?;
        acc = acc.sub(&koszul_g(ring, l - 1, q, l - 1, a)?.mul(&cof));
    }
    Ok(acc)
}

/// One Y-row exchange: multiply by `y[r,e]` and swap row `y[r2]` of the
/// main determinant for row `y[r]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exchange {
    pub r: usize,
    pub r2: usize,
    pub e: usize,
}

/// A polynomial `P = kappa * main + rest` of L with `main` a sum of
/// stacked determinants on `cols`.
#[derive(Clone, Debug)]
pub struct Exchangeable {
    pub poly: Polynomial,
    pub kappa: Polynomial,
    pub main: DetSum,
    pub cols: Vec<usize>,
}

fn y_rows(main: &DetSum) -> Vec<usize> {
    let mut rows: Vec<usize> = main
        .terms
        .iter()
        .flat_map(|(_, rs)| rs.iter().filter(|r| r.kind == RowKind::Y).map(|r| r.row))
        .collect();
    rows.sort_unstable();
    rows.dedup();
    rows
}

impl Exchangeable {
    /// `y[r,e] P - kappa (y[r,e] main - y[r2,e] main')`, which equals
    /// `kappa y[r2,e] main' + y[r,e] rest`. The subtracted part is a
    /// combination of 2x2 minors of Y on rows `r`, `r2`.
    pub fn exchange(&self, ring: &Ring, params: &ProblemParams, ex: Exchange) -> Result<Exchangeable> {
        let Exchange { r, r2, e } = ex;
        let present = y_rows(&self.main);
        if r == 0 || r2 == 0 || r.max(r2) > params.s2 || present.contains(&r) || !present.contains(&r2) {
            return Err(Error::MalformedIndices(format!("exchange y{r} for y{r2} not applicable")));
        }
        if e == 0 || e > params.t2 || self.cols.iter().any(|&c| c > params.t2) {
            return Err(Error::IndexOutOfRange(format!("exchange columns beyond t2 = {}", params.t2)));
        }
        let swapped = DetSum {
            terms: self
                .main
                .terms
                .iter()
                .map(|(s, rows)| {
                    let rows = rows
                        .iter()
                        .map(|x| if x.kind == RowKind::Y && x.row == r2 { RowSpec::new(RowKind::Y, r) } else { *x })
                        .collect();
                    (*s, rows)
                })
                .collect(),
        };
        let yre = var(ring, VariableId::y(r, e))?;
        let yr2e = var(ring, VariableId::y(r2, e))?;
        let old = self.main.eval(ring, &self.cols)?;
        let new = swapped.eval(ring, &self.cols)?;
        let kappa = self.kappa.mul(&yr2e);
        let poly = yre
            .mul(&self.poly)
            .sub(&self.kappa.mul(&yre).mul(&old))
            .add(&kappa.mul(&new));
        Ok(Exchangeable { poly, kappa, main: swapped, cols: self.cols.clone() })
    }

    pub fn exchange_all(self, ring: &Ring, params: &ProblemParams, exs: &[Exchange]) -> Result<Exchangeable> {
        exs.iter().try_fold(self, |acc, &ex| acc.exchange(ring, params, ex))
    }

    /// Every Y row occurring in the main part, ascending.
    pub fn y_rows(&self) -> Vec<usize> {
        y_rows(&self.main)
    }

    /// Y rows inside `1..=s2` present in, and missing from, the main part.
    pub fn exchange_rows(&self, params: &ProblemParams) -> (Vec<usize>, Vec<usize>) {
        let present = y_rows(&self.main);
        let inside = |r: &usize| *r <= params.s2;
        let missing = (1..=params.s2).filter(|r| !present.contains(r)).collect();
        (present.into_iter().filter(inside).collect(), missing)
    }
}

/// U with its main determinant `[X^{1,p-1}; mixed row p; Y^{p+1,s1}]`.
pub fn u_exchangeable(ring: &Ring, params: &ProblemParams, p: usize, q: usize, cols: &[usize]) -> Result<Exchangeable> {
    let poly = u_poly(ring, params, p, q, cols)?;
    let main = DetSum {
        terms: vec![(
            1,
            [
                block(RowKind::X, 1, p - 1),
                block(RowKind::Split { low: Family::X, upto: q }, p, p),
                block(RowKind::Y, p + 1, params.s1),
            ]
            .concat(),
        )],
    };
    Ok(Exchangeable { poly, kappa: var(ring, VariableId::z(p, q))?, main, cols: cols.to_vec() })
}

pub(crate) fn f_main(params: &ProblemParams, l: usize, k: usize) -> DetSum {
    DetSum {
        terms: vec![(
            sign(k + 1),
            [
                block(RowKind::Z, l, k),
                block(RowKind::X, 1, l - 1),
                block(RowKind::Y, 1, k - 1),
                block(RowKind::Y, k + 1, params.s1),
            ]
            .concat(),
        )],
    }
}

/// `W` of level `exs.len()`: U after the given Y-row exchanges.
pub fn w_poly(ring: &Ring, params: &ProblemParams, p: usize, q: usize, cols: &[usize], exs: &[Exchange]) -> Result<Polynomial> {
    Ok(u_exchangeable(ring, params, p, q, cols)?.exchange_all(ring, params, exs)?.poly)
}

/// `V` of level `exs.len()`: `f^{l,k}` after the given Y-row exchanges on
/// its leading summand.
pub fn v_poly(ring: &Ring, params: &ProblemParams, l: usize, k: usize, cols: &[usize], exs: &[Exchange]) -> Result<Polynomial> {
    let poly = f_lk(ring, params, l, k, cols)?;
    let start = Exchangeable { poly, kappa: Polynomial::one(), main: f_main(params, l, k), cols: cols.to_vec() };
    Ok(start.exchange_all(ring, params, exs)?.poly)
}

/// `I` of level `exs.len()`: `H^{l,k,q}` after the given Y-row exchanges.
pub fn i_poly(
    ring: &Ring,
    params: &ProblemParams,
    l: usize,
    k: usize,
    q: usize,
    cols: &[usize],
    exs: &[Exchange],
) -> Result<Polynomial> {
    let poly = h_poly(ring, params, l, k, q, cols)?;
    let kappa = var(ring, VariableId::z(l - 1, q))?;
    let start = Exchangeable { poly, kappa, main: f_main(params, l, k), cols: cols.to_vec() };
    Ok(start.exchange_all(ring, params, exs)?.poly)
}
