//! The ideal L and the polynomial families of its Gröbner basis.

mod candidates;
mod families;
mod set;

pub use candidates::{candidates_with_width, exchange_sequences, membership_filter, G_candidate_set};
pub use families::*;
pub use set::{GeneratorSet, Tagged};

use crate::detmat::{block, koszul_g, laplace_pairs, maximal_minors, subsets, RowKind, RowSpec, SymbolicMatrix};
use crate::error::{Error, Result};
use crate::poly::{Family, Polynomial, ProblemParams, Ring};

pub(crate) fn det(ring: &Ring, blocks: &[Vec<RowSpec>], cols: &[usize]) -> Result<Polynomial> {
    SymbolicMatrix::stack(blocks, cols).determinant(ring)
}

pub(crate) fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub(crate) fn signed(p: Polynomial, s: i64) -> Polynomial {
    if s < 0 {
        p.neg()
    } else {
        p
    }
}

fn tuple(cols: &[usize]) -> String {
    cols.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

/// All `g[i,j;l,k]` with `(i,j)` strictly before `(l,k)` in reading order.
pub fn all_g(ring: &Ring, params: &ProblemParams) -> Result<Vec<(String, Polynomial)>> {
    let cells: Vec<(usize, usize)> = (1..=params.m)
        .flat_map(|i| (1..=params.n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for a in 0..cells.len() {
        for b in a + 1..cells.len() {
            let ((i, j), (l, k)) = (cells[a], cells[b]);
            out.push((format!("g[{i},{j};{l},{k}]"), koszul_g(ring, i, j, l, k)?));
        }
    }
    Ok(out)
}

/// `sum_{q=1}^{s2} (-1)^(q+1) det[Z^q; Y^{1,q-1}; X^{q+1,s1}]` on `cols`.
/// Summands with `q > s1` are not square and are left out.
pub fn f_base(ring: &Ring, params: &ProblemParams, cols: &[usize]) -> Result<Polynomial> {
    let s1 = params.s1;
    if cols.len() != s1 {
        return Err(Error::MalformedIndices(format!("f needs {s1} columns, got {cols:?}")));
    }
    let mut acc = Polynomial::zero();
    for q in 1..=params.s2.min(s1) {
        let d = det(
            ring,
            &[block(RowKind::Z, q, q), block(RowKind::Y, 1, q - 1), block(RowKind::X, q + 1, s1)],
            cols,
        )?;
        acc = acc.add(&signed(d, sign(q + 1)));
    }
    Ok(acc)
}

/// Generators of L: X-minors, Y-minors, every g, and f on column tuples
/// inside `min(t1, t2)`.
#[allow(non_snake_case)]
pub fn L_generators(params: &ProblemParams) -> Result<GeneratorSet> {
    let ring = Ring::paper(params)?;
    let mut set = GeneratorSet::new("L", ring.clone());
    for (c, p) in maximal_minors(&ring, Family::X, params.s1, params.t1)? {
        set.push(format!("xminor[{}]", tuple(&c)), p)?;
    }
    for (c, p) in maximal_minors(&ring, Family::Y, params.s2, params.t2)? {
        set.push(format!("yminor[{}]", tuple(&c)), p)?;
    }
    for (tag, p) in all_g(&ring, params)? {
        set.push(tag, p)?;
    }
    let width: Vec<usize> = (1..=params.f_width()).collect();
    for c in subsets(&width, params.s1) {
        set.push(format!("f[{}]", tuple(&c)), f_base(&ring, params, &c)?)?;
    }
    Ok(set)
}

pub(crate) fn check_cols(cols: &[usize], len: usize, max: usize) -> Result<()> {
    if cols.len() != len || cols.windows(2).any(|w| w[0] >= w[1]) || cols.first() == Some(&0) {
        return Err(Error::MalformedIndices(format!("expected {len} ascending columns, got {cols:?}")));
    }
    if cols.last().is_some_and(|&c| c > max) {
        return Err(Error::IndexOutOfRange(format!("column {} > {max}", cols.last().unwrap())));
    }
    Ok(())
}

/// Laplace expansion along two listed rows of a stacked matrix: for each
/// column pair, the 2x2 minor on those rows replaced by `pair_value` and
/// multiplied by the complementary determinant.
pub(crate) fn laplace_two_rows(
    ring: &Ring,
    rows: &[RowSpec],
    p1: usize,
    p2: usize,
    cols: &[usize],
    pair_value: impl Fn(usize, usize) -> Result<Polynomial>,
) -> Result<Polynomial> {
    let rest_rows: Vec<RowSpec> = rows
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != p1 && *i != p2)
        .map(|(_, r)| *r)
        .collect();
    let mut acc = Polynomial::zero();
    for (s, c1, c2, rest) in laplace_pairs(p1, p2, cols.len()) {
        let v = pair_value(cols[c1], cols[c2])?;
        if v.is_zero() {
            continue;
        }
        let rest_cols: Vec<usize> = rest.iter().map(|&i| cols[i]).collect();
        let minor = SymbolicMatrix::new(rest_rows.clone(), rest_cols).determinant(ring)?;
        acc = acc.add(&signed(v.mul(&minor), s));
    }
    Ok(acc)
}
