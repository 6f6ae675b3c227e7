//! Buchberger engine over the packed lex representation.

mod buchberger;
mod monideal;
mod reduce;

pub use buchberger::{
    buchberger, criterion_witness, is_groebner, s_polynomial, BuchbergerOptions, EngineStats, Strategy,
};
pub use monideal::MonomialIdeal;
pub use reduce::normal_form;

use crate::error::Result;
use crate::poly::{Field, Polynomial, Rational, Ring, TermOrder, VariableId};

/// Reduced Gröbner basis together with the ring it lives in.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<C: Field = Rational> {
    pub ring: Ring,
    pub elements: Vec<Polynomial<C>>,
    pub stats: EngineStats,
}

impl<C: Field> GroebnerBasis<C> {
    pub fn compute(ring: &Ring, gens: &[Polynomial<C>], opts: &BuchbergerOptions) -> Result<Self> {
        let (elements, stats) = buchberger(gens, opts)?;
        Ok(GroebnerBasis {
            ring: ring.clone(),
            elements,
            stats,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn normal_form(&self, p: &Polynomial<C>) -> Polynomial<C> {
        normal_form(p, &self.elements)
    }

    pub fn contains(&self, p: &Polynomial<C>) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.elements.iter().map(|g| *g.lm()))
    }

    /// Elements not involving any variable of `block`, moved into `target`.
    pub fn restrict(&self, block: &[VariableId], target: &Ring) -> Result<Vec<Polynomial<C>>> {
        self.elements
            .iter()
            .filter(|g| block.iter().all(|v| !g.involves(&self.ring, *v)))
            .map(|g| g.convert(&self.ring, target))
            .collect()
    }
}

/// `ideal ∩ k[vars \ block]`, with `ring` supplying the variables and the
/// order on the remaining ones. Returns a Gröbner basis of the elimination
/// ideal in `ring`'s order restricted to the kept variables, expressed in
/// `ring`, plus the statistics of the elimination run.
pub fn eliminate<C: Field>(
    ring: &Ring,
    gens: &[Polynomial<C>],
    block: &[VariableId],
    opts: &BuchbergerOptions,
) -> Result<(Vec<Polynomial<C>>, EngineStats)> {
    let elim_ring = ring.with_order(TermOrder::block_elim(
        block.iter().copied(),
        ring.order().clone(),
    ))?;
    let moved = gens
        .iter()
        .map(|g| g.convert(ring, &elim_ring))
        .collect::<Result<Vec<_>>>()?;
    let gb = GroebnerBasis::compute(&elim_ring, &moved, opts)?;
    let kept = gb.restrict(block, ring)?;
    Ok((kept, gb.stats))
}
