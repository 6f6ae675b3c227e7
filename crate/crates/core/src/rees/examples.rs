use super::IdealSpec;
use crate::detmat::{block, subsets, RowKind, SymbolicMatrix};
use crate::error::Result;
use crate::generators::{all_g, GeneratorSet};
use crate::poly::{Monomial, Polynomial, Ring, VariableId};

/// The five single monomials named for the 3x4 shape (3,4,3,4,2,4).
pub const EXPLICIT_3X4: [&str; 5] = [
    "z[1,1]*z[2,2]*y[3,4]*y[3,3]",
    "z[2,1]*x[1,4]*y[1,3]*y[3,2]",
    "z[1,2]*z[2,1]*x[1,2]*y[1,4]*y[3,3]",
    "z[1,3]*z[2,1]*x[1,3]*y[1,4]*y[3,2]",
    "z[3,1]*x[1,4]*x[2,3]*y[3,2]",
];

fn mono(ring: &Ring, vars: &[VariableId]) -> Result<Monomial> {
    let mut m = Monomial::one();
    for v in vars {
        m = m.mul(&ring.var_monomial(*v)?);
    }
    Ok(m)
}

/// Initial-ideal generators listed for the 3x4 shape, family by family,
/// each with a short label. The index conditions are taken as printed.
pub fn listed_3x4(ring: &Ring) -> Result<Vec<(String, Monomial)>> {
    use VariableId as V;
    let r4: Vec<usize> = (1..=4).collect();
    let mut out = Vec::new();
    for a in subsets(&r4, 3) {
        out.push(("x-minor".into(), mono(ring, &[V::x(1, a[2]), V::x(2, a[1]), V::x(3, a[0])])?));
    }
    for b in subsets(&r4, 2) {
        out.push(("y-minor".into(), mono(ring, &[V::y(1, b[1]), V::y(2, b[0])])?));
    }
    for i in 1..=3 {
        for j in 1..=4 {
            for l in 1..=3 {
                for k in 1..=4 {
                    if i < l || (i == l && j < k) {
                        out.push(("g".into(), mono(ring, &[V::z(i, j), V::x(l, k)])?));
                    }
                }
            }
        }
    }
    for &a1 in &r4 {
        for &a2 in &r4 {
            for &a3 in &r4 {
                if a1 < a3 && a3 < a2 {
                    out.push(("f".into(), mono(ring, &[V::z(1, a1), V::y(2, a2), V::y(3, a3)])?));
                }
            }
        }
    }
    for s in EXPLICIT_3X4 {
        let p = ring.parse_poly(s)?;
        out.push(("single".into(), *p.lm()));
    }
    for &j in &r4 {
        for &a1 in &r4 {
            for &a2 in &r4 {
                for &a3 in &r4 {
                    if (a1 < a2 && a2 <= j && j < a3) || (a2 <= j && j < a1 && a1 < a3) {
                        let m = mono(ring, &[V::z(2, j), V::x(1, a3), V::x(2, a2), V::y(3, a1)])?;
                        out.push(("z2xxy".into(), m));
                    }
                    if a1 < a2 && a2 < a3 && a2 < j {
                        let m = mono(ring, &[V::z(2, j), V::x(1, a3), V::y(2, a2), V::y(1, a1)])?;
                        out.push(("z2xyy".into(), m));
                    }
                    if (a1 < a2 && a2 < a3 && a3 <= j) || (a1 < a3 && a3 <= j && j < a2) {
                        let m = mono(ring, &[V::z(1, j), V::x(1, a3), V::y(2, a2), V::y(3, a1)])?;
                        out.push(("z1xyy".into(), m));
                    }
                }
            }
        }
    }
    // The last listed family, z[1,j] x[1,a3] y[1,b1] y[2,b2] y[3,b3], has
    // no index condition on b1 and a condition chain that does not pin
    // a1, a2; it is not enumerated.
    out.sort_by(|a, b| b.1.cmp(&a.1));
    out.dedup_by(|a, b| a.1 == b.1);
    Ok(out)
}

fn det(ring: &Ring, rows: &[(RowKind, usize)]) -> Result<Polynomial> {
    let blocks: Vec<_> = rows.iter().map(|&(k, r)| block(k, r, r)).collect();
    SymbolicMatrix::stack(&blocks, &[1, 2, 3]).determinant(ring)
}

/// `det[x1; z2; y3] + det[x1; x2; z3]`.
pub fn notfiber_f(ring: &Ring) -> Result<Polynomial> {
    use RowKind::*;
    Ok(det(ring, &[(X, 1), (Z, 2), (Y, 3)])?.add(&det(ring, &[(X, 1), (X, 2), (Z, 3)])?))
}

/// `det[z1; z2; y3] + det[z1; y2; z3] + det[x1; z2; z3]`.
pub fn notfiber_h(ring: &Ring) -> Result<Polynomial> {
    use RowKind::*;
    Ok(det(ring, &[(Z, 1), (Z, 2), (Y, 3)])?
        .add(&det(ring, &[(Z, 1), (Y, 2), (Z, 3)])?)
        .add(&det(ring, &[(X, 1), (Z, 2), (Z, 3)])?))
}

/// J for the 3x3 example: `I_3(X)`, all 2x2 minors of Y, every g, and f.
pub fn notfiber_j(spec: &IdealSpec) -> Result<GeneratorSet> {
    let ring = &spec.ring;
    let mut set = GeneratorSet::new("J_notFiber", ring.clone());
    for (i, p) in spec.x_minors.iter().enumerate() {
        set.push(format!("xminor[{}]", i + 1), p.clone())?;
    }
    for (i, p) in spec.y_minors.iter().enumerate() {
        set.push(format!("yminor[{}]", i + 1), p.clone())?;
    }
    for (tag, p) in all_g(ring, &spec.params)? {
        set.push(tag, p)?;
    }
    set.push("f", notfiber_f(ring)?)?;
    Ok(set)
}
