//! The Rees ideal K by elimination of `t`, its special fiber, and the
//! verification reports built on top of them.

mod checks;
mod examples;
mod report;

pub use checks::{
    colon_by_variable, example_3x4, notfiber_case, NZD_X, NZD_Y, nzd_certificate, verify_fiber, verify_gb, verify_identities,
    verify_linear_type,
};
pub use examples::{listed_3x4, notfiber_f, notfiber_h, notfiber_j, EXPLICIT_3X4};
pub use report::{Check, EngineSummary, Finding, Outcome, Verdict, VerificationReport};

use crate::detmat::{maximal_minors, subsets, SymbolicMatrix, block, RowKind};
use crate::error::Result;
use crate::generators::GeneratorSet;
use crate::groebner::{eliminate, BuchbergerOptions, EngineStats};
use crate::poly::{universe, Family, Polynomial, ProblemParams, Ring, TermOrder, VariableId};

/// The ring S presented as a quotient of k[X, Y]: the shape and the two
/// lists of minors cutting out R1 and R2.
#[derive(Clone, Debug)]
pub struct IdealSpec {
    pub params: ProblemParams,
    pub ring: Ring,
    pub x_minors: Vec<Polynomial>,
    pub y_minors: Vec<Polynomial>,
}

impl IdealSpec {
    /// Maximal minors of the `s1 x t1` corner of X and the `s2 x t2` corner of Y.
    pub fn standard(params: &ProblemParams) -> Result<Self> {
        let ring = Ring::paper(params)?;
        let x_minors = maximal_minors(&ring, Family::X, params.s1, params.t1)?
            .into_iter()
            .map(|(_, p)| p)
            .collect();
        let y_minors = maximal_minors(&ring, Family::Y, params.s2, params.t2)?
            .into_iter()
            .map(|(_, p)| p)
            .collect();
        Ok(IdealSpec {
            params: *params,
            ring,
            x_minors,
            y_minors,
        })
    }

    /// 3x3 matrices with `I_3(X)` and every 2x2 minor of the full Y, on all
    /// row pairs rather than the first two rows only.
    pub fn not_fiber() -> Result<Self> {
        let params = ProblemParams::new(3, 3, 3, 3, 2, 3)?;
        let ring = Ring::paper(&params)?;
        let all: Vec<usize> = (1..=3).collect();
        let x_minors = vec![SymbolicMatrix::stack(&[block(RowKind::X, 1, 3)], &all).determinant(&ring)?];
        let mut y_minors = Vec::new();
        for rows in subsets(&all, 2) {
            for cols in subsets(&all, 2) {
                let specs = rows.iter().map(|&r| crate::detmat::RowSpec::new(RowKind::Y, r)).collect();
                y_minors.push(SymbolicMatrix::new(specs, cols).determinant(&ring)?);
            }
        }
        Ok(IdealSpec {
            params,
            ring,
            x_minors,
            y_minors,
        })
    }

    pub fn base(&self) -> Vec<Polynomial> {
        self.x_minors.iter().chain(&self.y_minors).cloned().collect()
    }
}

/// K = ker(k[X,Y,Z] -> S[t], z[i,j] -> t (x[i,j] - y[i,j])), computed by
/// eliminating `t` from the minors together with every `z - t (x - y)`.
/// The returned generators form a Gröbner basis of K under PaperLex.
pub fn rees_ideal_of(spec: &IdealSpec, opts: &BuchbergerOptions) -> Result<(GeneratorSet, EngineStats)> {
    let p = &spec.params;
    let ring_t = Ring::new(&universe(p, true), TermOrder::PaperLex)?;
    let t = Polynomial::var(&ring_t, VariableId::t())?;
    let mut gens = spec
        .base()
        .iter()
        .map(|g| g.convert(&spec.ring, &ring_t))
        .collect::<Result<Vec<_>>>()?;
    for i in 1..=p.m {
        for j in 1..=p.n {
            let z = Polynomial::var(&ring_t, VariableId::z(i, j))?;
            let x = Polynomial::var(&ring_t, VariableId::x(i, j))?;
            let y = Polynomial::var(&ring_t, VariableId::y(i, j))?;
            gens.push(z.sub(&t.mul(&x.sub(&y))));
        }
    }
    let (kept, stats) = eliminate(&ring_t, &gens, &[VariableId::t()], opts)?;
    let mut set = GeneratorSet::new("K", spec.ring.clone());
    for (i, k) in kept.iter().enumerate() {
        set.push(format!("k[{}]", i + 1), k.convert(&ring_t, &spec.ring)?)?;
    }
    Ok((set, stats))
}

pub fn rees_ideal(params: &ProblemParams, opts: &BuchbergerOptions) -> Result<(GeneratorSet, EngineStats)> {
    rees_ideal_of(&IdealSpec::standard(params)?, opts)
}

/// `K ∩ k[Z]`: eliminates every x and y variable. Empty exactly when the
/// embedded join is the whole space.
pub fn special_fiber(k: &GeneratorSet, opts: &BuchbergerOptions) -> Result<(GeneratorSet, EngineStats)> {
    let block: Vec<VariableId> = k
        .ring
        .variables()
        .iter()
        .copied()
        .filter(|v| matches!(v.family, Family::X | Family::Y))
        .collect();
    let (kept, stats) = eliminate(&k.ring, &k.polys(), &block, opts)?;
    let mut set = GeneratorSet::new("fiber", k.ring.clone());
    for (i, p) in kept.into_iter().enumerate() {
        set.push(format!("fiber[{}]", i + 1), p)?;
    }
    Ok((set, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::L_generators;
    use crate::groebner::GroebnerBasis;

    #[test]
    fn rees_22_matches_l() {
        let p = ProblemParams::new(2, 2, 2, 2, 2, 2).unwrap();
        let opts = BuchbergerOptions::default();
        let (k, _) = rees_ideal(&p, &opts).unwrap();
        let l = L_generators(&p).unwrap();
        let kgb = GroebnerBasis::compute(&k.ring, &k.polys(), &opts).unwrap();
        let lgb = GroebnerBasis::compute(&l.ring, &l.polys(), &opts).unwrap();
        assert!(l.polys().iter().all(|g| kgb.contains(g)));
        assert!(k.polys().iter().all(|g| lgb.contains(g)));
    }

    #[test]
    fn fiber_of_principal_z() {
        let p = ProblemParams::new(2, 2, 2, 2, 2, 2).unwrap();
        let ring = Ring::paper(&p).unwrap();
        let mut k = GeneratorSet::new("K", ring.clone());
        k.push("a", ring.parse_poly("z[1,1]").unwrap()).unwrap();
        let (f, _) = special_fiber(&k, &BuchbergerOptions::default()).unwrap();
        assert_eq!(f.polys(), vec![ring.parse_poly("z[1,1]").unwrap()]);
    }

    #[test]
    fn not_fiber_spec_shape() {
        let s = IdealSpec::not_fiber().unwrap();
        assert_eq!(s.x_minors.len(), 1);
        assert_eq!(s.y_minors.len(), 9);
    }
}
