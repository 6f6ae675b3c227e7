mod common;

use std::cmp::Ordering;

use common::*;
use diag_rees::detmat::{koszul_g, RowKind, RowSpec, SymbolicMatrix};
use diag_rees::generators::L_generators;
use diag_rees::groebner::{is_groebner, BuchbergerOptions, GroebnerBasis};
use diag_rees::poly::{Field, Monomial, Polynomial, ProblemParams, Ring, SparseMonomial, VariableId};
use diag_rees::rees::{self, IdealSpec, Verdict};
use proptest::prelude::*;

fn ring22() -> Ring {
    Ring::paper(&params([2, 2, 2, 2, 2, 2])).unwrap()
}

fn monomial(ring: &Ring, exps: &[u32]) -> Monomial {
    let pairs = ring.variables().iter().copied().zip(exps.iter().copied());
    ring.monomial(&SparseMonomial::from_pairs(pairs)).unwrap()
}

fn exps() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..3, 12)
}

fn kind() -> impl Strategy<Value = RowKind> {
    prop_oneof![Just(RowKind::X), Just(RowKind::Y), Just(RowKind::Z), Just(RowKind::XminusY)]
}

fn rows(n: usize) -> impl Strategy<Value = Vec<RowSpec>> {
    prop::collection::vec((kind(), 1usize..=3), n).prop_map(|v| v.into_iter().map(|(k, r)| RowSpec::new(k, r)).collect())
}

fn det(ring: &Ring, rows: Vec<RowSpec>, cols: &[usize]) -> Polynomial {
    SymbolicMatrix::new(rows, cols.to_vec()).determinant(ring).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn order_is_total_and_multiplicative(a in exps(), b in exps(), c in exps()) {
        let r = ring22();
        let (a, b, c) = (monomial(&r, &a), monomial(&r, &b), monomial(&r, &c));
        prop_assert_eq!(r.compare(&a, &b), r.compare(&b, &a).reverse());
        prop_assert_eq!(r.compare(&a, &b) == Ordering::Equal, a == b);
        prop_assert_eq!(r.compare(&a.mul(&c), &b.mul(&c)), r.compare(&a, &b));
        prop_assert_ne!(r.compare(&a.mul(&c), &a), Ordering::Less);
        if r.compare(&a, &b) == Ordering::Less && r.compare(&b, &c) == Ordering::Less {
            prop_assert_eq!(r.compare(&a, &c), Ordering::Less);
        }
    }

    #[test]
    fn determinant_is_alternating(rs in rows(3), i in 0usize..3, j in 0usize..3) {
        prop_assume!(i != j);
        let ring = Ring::paper(&params([3, 3, 3, 3, 3, 3])).unwrap();
        let cols = [1, 2, 3];
        let d = det(&ring, rs.clone(), &cols);
        let mut swapped = rs.clone();
        swapped.swap(i, j);
        prop_assert_eq!(det(&ring, swapped, &cols), d.neg());
        let mut repeated = rs;
        repeated[j] = repeated[i];
        prop_assert!(det(&ring, repeated, &cols).is_zero());
    }

    #[test]
    fn determinant_is_multilinear(rs in rows(3), i in 0usize..3, r in 1usize..=3) {
        let ring = Ring::paper(&params([3, 3, 3, 3, 3, 3])).unwrap();
        let cols = [1, 2, 3];
        let with = |k: RowKind| {
            let mut v = rs.clone();
            v[i] = RowSpec::new(k, r);
            det(&ring, v, &cols)
        };
        prop_assert_eq!(with(RowKind::XminusY), with(RowKind::X).sub(&with(RowKind::Y)));
    }

    #[test]
    fn koszul_g_is_antisymmetric(i in 1usize..=2, j in 1usize..=3, l in 1usize..=2, k in 1usize..=3) {
        let ring = Ring::paper(&params([2, 3, 2, 3, 2, 3])).unwrap();
        let g = koszul_g(&ring, i, j, l, k).unwrap();
        prop_assert_eq!(koszul_g(&ring, l, k, i, j).unwrap(), g.neg());
        if (i, j) == (l, k) {
            prop_assert!(g.is_zero());
        }
    }

    #[test]
    fn groebner_basis_of_random_subset(mask in 1u16..512) {
        let l = L_generators(&params([2, 2, 2, 2, 2, 2])).unwrap();
        let gens: Vec<Polynomial> = l.polys().into_iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, g)| g).collect();
        let gb = GroebnerBasis::compute(&l.ring, &gens, &BuchbergerOptions::default()).unwrap();
        prop_assert!(is_groebner(&gb.elements));
        prop_assert!(gens.iter().all(|g| gb.contains(g)));
        for (a, g) in gb.elements.iter().enumerate() {
            prop_assert_eq!(g.lc(), &diag_rees::poly::Rational::one());
            for (b, h) in gb.elements.iter().enumerate() {
                if a != b {
                    prop_assert!(!g.terms().iter().any(|(m, _)| h.lm().divides(m)));
                }
            }
        }
    }
}

/// Shapes with `m, n <= 3` and `s2 <= s1`.
fn substitution_shapes() -> Vec<ProblemParams> {
    small_shapes().into_iter().filter(|p| p.n <= 3 && p.s2 <= p.s1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    /// Every generator of L vanishes on the graph z = x - y modulo the minors.
    #[test]
    fn l_generators_vanish_under_z_substitution(idx in 0usize..1000) {
        let shapes = substitution_shapes();
        let p = shapes[idx % shapes.len()];
        let spec = IdealSpec::standard(&p).unwrap();
        let gb = GroebnerBasis::compute(&spec.ring, &spec.base(), &BuchbergerOptions::default()).unwrap();
        let ring = spec.ring.clone();
        let image = |v: VariableId| -> Option<Polynomial> {
            (v.family == diag_rees::poly::Family::Z).then(|| {
                let x = Polynomial::var(&ring, VariableId::x(v.row.into(), v.col.into())).unwrap();
                let y = Polynomial::var(&ring, VariableId::y(v.row.into(), v.col.into())).unwrap();
                x.sub(&y)
            })
        };
        for t in &L_generators(&p).unwrap().elements {
            let (tag, s) = (&t.tag, t.poly.substitute(&ring, image).unwrap());
            prop_assert!(gb.contains(&s), "{} {} does not vanish", label(&p), tag);
        }
    }

    /// Each generator of L is homogeneous in z of degree at most one.
    #[test]
    fn z_degree_of_l_generators(idx in 0usize..1000) {
        let shapes = small_shapes();
        let p = shapes[idx % shapes.len()];
        let l = L_generators(&p).unwrap();
        let zs: Vec<usize> = l.ring.variables().iter().enumerate()
            .filter(|(_, v)| v.family == diag_rees::poly::Family::Z).map(|(i, _)| i).collect();
        for t in &l.elements {
            let (tag, g) = (&t.tag, &t.poly);
            let want = u32::from(!tag.contains("minor"));
            for (m, _) in g.terms() {
                let zdeg: u32 = zs.iter().map(|&s| m.exponent(s)).sum();
                prop_assert_eq!(zdeg, want, "{} {}", label(&p), tag);
            }
        }
    }
}

#[test]
fn linear_type_holds_with_x_and_y_roles_swapped() {
    let opts = BuchbergerOptions::default();
    for s in [[2, 3, 2, 3, 2, 2], [3, 4, 3, 4, 3, 3]] {
        let p = params(s);
        let q = params([s[0], s[1], s[4], s[5], s[2], s[3]]);
        let a = rees::verify_linear_type(&p, &opts).unwrap();
        let b = rees::verify_linear_type(&q, &opts).unwrap();
        assert_eq!(a.check("L contained in K").unwrap().verdict, b.check("L contained in K").unwrap().verdict);
        assert_eq!(a.check("K contained in L").unwrap().verdict, Verdict::Pass);
        assert_eq!(b.check("K contained in L").unwrap().verdict, Verdict::Pass);
    }
}
