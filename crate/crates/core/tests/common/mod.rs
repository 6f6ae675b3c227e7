#![allow(dead_code)]

use std::collections::HashMap;

use diag_rees::poly::{Field, Monomial, Polynomial, ProblemParams, Rational, Ring};

/// The five shapes every acceptance criterion runs on.
pub const SHAPES: [[usize; 6]; 5] = [
    [2, 2, 2, 2, 2, 2],
    [2, 3, 2, 2, 2, 3],
    [3, 3, 2, 3, 2, 2],
    [3, 3, 3, 3, 2, 2],
    [3, 4, 3, 4, 2, 4],
];

pub fn params(v: [usize; 6]) -> ProblemParams {
    ProblemParams::new(v[0], v[1], v[2], v[3], v[4], v[5]).unwrap()
}

pub fn label(p: &ProblemParams) -> String {
    let [m, n, s1, t1, s2, t2] = p.as_tuple();
    format!("({m},{n},{s1},{t1},{s2},{t2})")
}

/// Every valid shape with `m <= n <= 4`.
pub fn small_shapes() -> Vec<ProblemParams> {
    let mut out = Vec::new();
    for m in 2..=4 {
        for n in m..=4 {
            for s1 in 2..=m {
                for t1 in s1..=n {
                    for s2 in 2..=m {
                        for t2 in s2..=n {
                            out.push(ProblemParams::new(m, n, s1, t1, s2, t2).unwrap());
                        }
                    }
                }
            }
        }
    }
    out
}

/// Monomials of total degree `d` in all variables of `ring`.
pub fn monomials_of_degree(ring: &Ring, d: u32) -> Vec<Monomial> {
    let vars: Vec<Monomial> = ring
        .variables()
        .iter()
        .map(|v| ring.var_monomial(*v).unwrap())
        .collect();
    let mut layer = vec![(Monomial::one(), 0usize)];
    for _ in 0..d {
        let mut next = Vec::new();
        for (m, start) in &layer {
            for (i, v) in vars.iter().enumerate().skip(*start) {
                next.push((m.mul(v), i));
            }
        }
        layer = next;
    }
    layer.into_iter().map(|(m, _)| m).collect()
}

/// Degree-bounded linear algebra: for homogeneous generators and a
/// homogeneous `p` of degree `d`, `p` lies in the ideal iff it is a linear
/// combination of the products `m * g` with `deg m + deg g = d`.
/// Row reduction keeps one pivot per leading monomial.
pub fn in_ideal_by_linear_algebra(ring: &Ring, gens: &[Polynomial], p: &Polynomial) -> bool {
    if p.is_zero() {
        return true;
    }
    assert!(p.is_homogeneous());
    let d = p.total_degree();
    let mut pivots: HashMap<Monomial, Polynomial> = HashMap::new();
    let reduce = |mut v: Polynomial, pivots: &HashMap<Monomial, Polynomial>| -> Polynomial {
        while !v.is_zero() {
            let Some(piv) = pivots.get(v.lm()) else { break };
            let c = v.lc().div(piv.lc());
            v = v.sub_mul_term(&c, &Monomial::one(), piv);
        }
        v
    };
    for g in gens.iter().filter(|g| !g.is_zero()) {
        assert!(g.is_homogeneous());
        let dg = g.total_degree();
        if dg > d {
            continue;
        }
        for m in monomials_of_degree(ring, d - dg) {
            let v = reduce(g.mul_term(&Rational::one(), &m), &pivots);
            if !v.is_zero() {
                pivots.insert(*v.lm(), v);
            }
        }
    }
    reduce(p.clone(), &pivots).is_zero()
}
