mod common;

use common::*;
use diag_rees::detmat::{block, RowKind, SymbolicMatrix};
use diag_rees::generators::{f_base, f_lk, p_correction, p_lk, G_candidate_set, GeneratorSet, L_generators};
use diag_rees::groebner::{BuchbergerOptions, GroebnerBasis};
use diag_rees::rees::{self, IdealSpec};

fn gb(set: &GeneratorSet) -> GroebnerBasis {
    GroebnerBasis::compute(&set.ring, &set.polys(), &BuchbergerOptions::default()).unwrap()
}

#[test]
fn l_counts() {
    let l = L_generators(&params([2, 2, 2, 2, 2, 2])).unwrap();
    assert_eq!(l.len(), 9);
    assert_eq!(l.count_prefix("xminor"), 1);
    assert_eq!(l.count_prefix("yminor"), 1);
    assert_eq!(l.count_prefix("g["), 6);
    assert_eq!(l.count_prefix("f["), 1);

    let l = L_generators(&params([3, 4, 3, 4, 2, 4])).unwrap();
    assert_eq!(l.count_prefix("xminor"), 4);
    assert_eq!(l.count_prefix("yminor"), 6);
    assert_eq!(l.count_prefix("g["), 66);
    assert_eq!(l.count_prefix("f["), 4);
}

#[test]
fn no_f_when_columns_run_short() {
    let l = L_generators(&params([3, 3, 3, 3, 2, 2])).unwrap();
    assert_eq!(l.count_prefix("f["), 0);
}

#[test]
fn f_of_the_3x4_example() {
    let p = params([3, 4, 3, 4, 2, 4]);
    let ring = diag_rees::poly::Ring::paper(&p).unwrap();
    let lgb = gb(&L_generators(&p).unwrap());
    for cols in [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]] {
        let det = |b: &[Vec<_>]| SymbolicMatrix::stack(b, &cols).determinant(&ring).unwrap();
        let shown = det(&[block(RowKind::Z, 1, 1), block(RowKind::X, 2, 3)]).add(&det(&[
            block(RowKind::Y, 1, 1),
            block(RowKind::Z, 2, 2),
            block(RowKind::X, 3, 3),
        ]));
        assert_eq!(f_base(&ring, &p, &cols).unwrap(), shown);
        assert_eq!(p_lk(&ring, &p, 1, 1, &cols).unwrap(), shown);
        let f = f_lk(&ring, &p, 1, 1, &cols).unwrap();
        assert!(lgb.contains(&f.sub(&shown)));
    }
}

#[test]
fn p_splits_as_f_plus_correction() {
    for s in [[2, 3, 2, 3, 2, 3], [3, 3, 3, 3, 2, 3], [3, 4, 3, 4, 2, 4]] {
        let p = params(s);
        let ring = diag_rees::poly::Ring::paper(&p).unwrap();
        for k in 1..=p.s2.min(p.s1) {
            if p.s1 + k - 1 > p.n {
                continue;
            }
            let cols: Vec<usize> = (1..=p.s1 + k - 1).collect();
            for l in 1..=k {
                let lhs = p_lk(&ring, &p, l, k, &cols).unwrap();
                let rhs = f_lk(&ring, &p, l, k, &cols).unwrap().add(&p_correction(&ring, &p, l, k, &cols).unwrap());
                assert_eq!(lhs, rhs, "{} l={l} k={k}", label(&p));
            }
        }
    }
}

#[test]
fn candidates_lie_in_l() {
    for s in [[2, 2, 2, 2, 2, 2], [2, 3, 2, 2, 2, 3], [3, 3, 3, 3, 2, 3]] {
        let p = params(s);
        let lgb = gb(&L_generators(&p).unwrap());
        for t in &G_candidate_set(&p).unwrap().elements {
            assert!(lgb.contains(&t.poly), "{} {}", label(&p), t.tag);
        }
    }
}

/// The 3x3 example uses its own f. Both it and the f of the general family
/// lie in K, and each lies in the ideal built from the other.
#[test]
fn notfiber_f_against_general_f() {
    let spec = IdealSpec::not_fiber().unwrap();
    let ring = spec.ring.clone();
    let shown = rees::notfiber_f(&ring).unwrap();
    let general = f_base(&ring, &spec.params, &[1, 2, 3]).unwrap();
    let (k, _) = rees::rees_ideal_of(&spec, &BuchbergerOptions::default()).unwrap();
    let kgb = gb(&k);
    assert!(kgb.contains(&shown));
    assert!(kgb.contains(&general));

    let j_shown = rees::notfiber_j(&spec).unwrap();
    let mut j_general = GeneratorSet::new("J", ring.clone());
    for t in j_shown.elements.iter().filter(|t| t.tag != "f") {
        j_general.push(t.tag.clone(), t.poly.clone()).unwrap();
    }
    j_general.push("f", general.clone()).unwrap();
    let general_in_shown = gb(&j_shown).contains(&general);
    let shown_in_general = gb(&j_general).contains(&shown);
    assert!(general_in_shown && shown_in_general);
}
