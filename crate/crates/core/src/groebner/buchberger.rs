use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;

use super::reduce::{reduce_full, reduce_top, DivisorIndex};
use crate::error::{Error, Result};
use crate::poly::{Field, Monomial, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Smallest lcm degree first, ties by the term order.
    #[default]
    Normal,
    /// Smallest sugar degree first.
    Sugar,
}

#[derive(Clone, Debug)]
pub struct BuchbergerOptions {
    pub product_criterion: bool,
    pub chain_criterion: bool,
    pub strategy: Strategy,
    pub deadline: Option<Instant>,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions {
            product_criterion: true,
            chain_criterion: true,
            strategy: Strategy::Normal,
            deadline: None,
        }
    }
}

impl BuchbergerOptions {
    pub fn with_deadline(mut self, deadline: Option<Instant>) -> Self {
        self.deadline = deadline;
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EngineStats {
    pub pairs: usize,
    pub reductions: usize,
    pub zero_reductions: usize,
    pub max_degree: u32,
}

impl EngineStats {
    pub fn absorb(&mut self, other: &EngineStats) {
        self.pairs += other.pairs;
        self.reductions += other.reductions;
        self.zero_reductions += other.zero_reductions;
        self.max_degree = self.max_degree.max(other.max_degree);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    key: (u32, u32, Monomial),
    i: usize,
    j: usize,
}

struct State<C: Field> {
    polys: Vec<Polynomial<C>>,
    sugar: Vec<u32>,
    alive: Vec<bool>,
    pairs: BTreeSet<Pair>,
    opts: BuchbergerOptions,
    stats: EngineStats,
}

impl<C: Field> State<C> {
    fn pair(&self, i: usize, j: usize) -> Pair {
        let (li, lj) = (self.polys[i].lm(), self.polys[j].lm());
        let lcm = li.lcm(lj);
        let deg = lcm.degree();
        let sugar = (self.sugar[i] + deg - li.degree()).max(self.sugar[j] + deg - lj.degree());
        let first = match self.opts.strategy {
            Strategy::Normal => deg,
            Strategy::Sugar => sugar,
        };
        Pair {
            key: (first, deg, lcm),
            i: i.min(j),
            j: i.max(j),
        }
    }

    fn lcm_of(&self, p: &Pair) -> Monomial {
        self.polys[p.i].lm().lcm(self.polys[p.j].lm())
    }

    /// Gebauer–Möller update with a new element `h`.
    fn update(&mut self, h: usize) {
        let lh = *self.polys[h].lm();
        let g: Vec<usize> = (0..h).filter(|&k| self.alive[k]).collect();
        let mut candidates: Vec<(usize, Monomial, bool)> = g
            .iter()
            .map(|&k| {
                let lk = self.polys[k].lm();
                (k, lh.lcm(lk), lh.is_coprime(lk))
            })
            .collect();

        if self.opts.chain_criterion {
            // Drop (h,k) whose lcm is a proper multiple of another candidate
            // lcm, then keep one pair per class of equal lcms. A class that
            // contains a coprime pair is dropped whole by the product criterion.
            let lcms: Vec<Monomial> = candidates.iter().map(|c| c.1).collect();
            let mut seen: Vec<Monomial> = Vec::new();
            let mut kept = Vec::new();
            for (k, l, coprime) in candidates {
                if lcms.iter().any(|o| *o != l && o.divides(&l)) || seen.contains(&l) {
                    continue;
                }
                seen.push(l);
                let class_coprime = coprime
                    || g.iter().any(|&q| {
                        let lq = self.polys[q].lm();
                        lh.lcm(lq) == l && lh.is_coprime(lq)
                    });
                kept.push((k, l, class_coprime));
            }
            candidates = kept;
        }
        if self.opts.chain_criterion {
            let old: Vec<Pair> = self.pairs.iter().cloned().collect();
            for p in old {
                let l = self.lcm_of(&p);
                if lh.divides(&l)
                    && lh.lcm(self.polys[p.i].lm()) != l
                    && lh.lcm(self.polys[p.j].lm()) != l
                {
                    self.pairs.remove(&p);
                }
            }
        }
        for (k, _, _) in candidates {
            let p = self.pair(k, h);
            self.pairs.insert(p);
            self.stats.pairs += 1;
        }
        for k in g {
            if lh.divides(self.polys[k].lm()) {
                self.alive[k] = false;
            }
        }
    }

    fn insert(&mut self, p: Polynomial<C>, sugar: u32) {
        let h = self.polys.len();
        self.stats.max_degree = self.stats.max_degree.max(p.total_degree());
        self.polys.push(p.monic());
        self.sugar.push(sugar);
        self.alive.push(true);
        self.update(h);
    }

    fn check_budget(&self) -> Result<()> {
        match self.opts.deadline {
            Some(d) if Instant::now() >= d => Err(Error::BudgetExceeded),
            _ => Ok(()),
        }
    }

    fn index(&self) -> DivisorIndex {
        let mut idx = DivisorIndex::new();
        for (k, p) in self.polys.iter().enumerate() {
            if self.alive[k] {
                idx.push(*p.lm(), k);
            }
        }
        idx
    }
}

pub fn s_polynomial<C: Field>(f: &Polynomial<C>, g: &Polynomial<C>) -> Result<Polynomial<C>> {
    let (cf, mf) = f.leading_term()?;
    let (cg, mg) = g.leading_term()?;
    let l = mf.lcm(mg);
    let a = f.mul_term(&cg.clone(), &l.div(mf));
    Ok(a.sub_mul_term(cf, &l.div(mg), g))
}

/// Buchberger's algorithm. Returns the reduced, monic Gröbner basis sorted by
/// ascending leading monomial, and engine statistics.
pub fn buchberger<C: Field>(
    gens: &[Polynomial<C>],
    opts: &BuchbergerOptions,
) -> Result<(Vec<Polynomial<C>>, EngineStats)> {
    let mut st = State {
        polys: Vec::new(),
        sugar: Vec::new(),
        alive: Vec::new(),
        pairs: BTreeSet::new(),
        opts: opts.clone(),
        stats: EngineStats::default(),
    };
    // Interreduce the input lightly: process generators by ascending lm.
    let mut input: Vec<&Polynomial<C>> = gens.iter().filter(|p| !p.is_zero()).collect();
    input.sort_by(|a, b| a.lm().cmp(b.lm()).then(a.len().cmp(&b.len())));
    for p in input {
        st.check_budget()?;
        let idx = st.index();
        let r = reduce_full(p, &st.polys, &idx);
        st.stats.reductions += r.steps;
        if r.poly.is_zero() {
            st.stats.zero_reductions += 1;
            continue;
        }
        let sugar = p.total_degree();
        st.insert(r.poly, sugar);
    }

    while let Some(p) = st.pairs.pop_first() {
        st.check_budget()?;
        let s = s_polynomial(&st.polys[p.i], &st.polys[p.j])?;
        let sugar = p.key.0.max(s.total_degree());
        st.stats.max_degree = st.stats.max_degree.max(s.total_degree());
        let idx = st.index();
        let r = reduce_full(&s, &st.polys, &idx);
        st.stats.reductions += r.steps;
        if r.poly.is_zero() {
            st.stats.zero_reductions += 1;
            continue;
        }
        st.insert(r.poly, sugar);
    }

    let mut basis: Vec<Polynomial<C>> = st
        .polys
        .into_iter()
        .zip(st.alive)
        .filter_map(|(p, a)| a.then_some(p))
        .collect();
    basis.sort_by(|a, b| a.lm().cmp(b.lm()));
    Ok((interreduce(basis)?, st.stats))
}

/// Tail-reduces a minimal basis (sorted ascending by lm) into the reduced basis.
fn interreduce<C: Field>(basis: Vec<Polynomial<C>>) -> Result<Vec<Polynomial<C>>> {
    let mut out: Vec<Polynomial<C>> = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let others: Vec<Polynomial<C>> = basis
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, p)| p.clone())
            .collect();
        let idx = DivisorIndex::from_polys(&others);
        let p = &basis[k];
        let head = Polynomial::term(p.lc().clone(), *p.lm());
        let tail = Polynomial::from_sorted_unchecked(p.terms()[1..].to_vec());
        if idx.find(p.lm()).is_some() {
            return Err(Error::NotReduced);
        }
        let r = reduce_full(&tail, &others, &idx).poly;
        out.push(head.add(&r).monic());
    }
    Ok(out)
}

/// Checks the Buchberger criterion: every S-pair reduces to zero.
pub fn is_groebner<C: Field + Send + Sync>(basis: &[Polynomial<C>]) -> bool {
    criterion_witness(basis).is_none()
}

/// First pair `(i, j)` (in lexicographic pair order) whose S-polynomial has
/// a nonzero remainder, together with that fully reduced remainder.
/// Pairs with coprime leading monomials are skipped.
pub fn criterion_witness<C: Field + Send + Sync>(
    basis: &[Polynomial<C>],
) -> Option<(usize, usize, Polynomial<C>)> {
    use rayon::prelude::*;
    let idx = DivisorIndex::from_polys(basis);
    let n = basis.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !basis[i].lm().is_coprime(basis[j].lm()))
        .collect();
    let (i, j) = pairs.par_iter().copied().find_first(|&(i, j)| {
        let s = s_polynomial(&basis[i], &basis[j]).expect("nonzero basis");
        !reduce_top(&s, basis, &idx).is_zero()
    })?;
    let s = s_polynomial(&basis[i], &basis[j]).expect("nonzero basis");
    Some((i, j, reduce_full(&s, basis, &idx).poly))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::normal_form;
    use crate::poly::{ProblemParams, Rational, Ring};

    fn ring() -> Ring {
        Ring::paper(&ProblemParams::new(2, 2, 2, 2, 2, 2).unwrap()).unwrap()
    }

    #[test]
    fn twisted_cubic_like() {
        let r = ring();
        let gens: Vec<Polynomial> = ["x[1,1]*x[2,1] - x[1,2]^2", "x[1,2]*x[2,2] - x[2,1]^2", "x[1,1]*x[2,2] - x[1,2]*x[2,1]"]
            .iter()
            .map(|s| r.parse_poly(s).unwrap())
            .collect();
        let (gb, stats) = buchberger(&gens, &BuchbergerOptions::default()).unwrap();
        assert!(is_groebner(&gb));
        for g in &gens {
            assert!(normal_form(g, &gb).is_zero());
        }
        assert!(stats.max_degree >= 2);
        let sugar = BuchbergerOptions {
            strategy: Strategy::Sugar,
            ..Default::default()
        };
        let (gb2, _) = buchberger(&gens, &sugar).unwrap();
        assert_eq!(gb, gb2);
        let plain = BuchbergerOptions {
            product_criterion: false,
            chain_criterion: false,
            ..Default::default()
        };
        let (gb3, _) = buchberger(&gens, &plain).unwrap();
        assert_eq!(gb, gb3);
    }

    #[test]
    fn unit_ideal() {
        let r = ring();
        let gens = vec![
            r.parse_poly("x[1,1] - 1").unwrap(),
            r.parse_poly("x[1,1]").unwrap(),
        ];
        let (gb, _) = buchberger(&gens, &BuchbergerOptions::default()).unwrap();
        assert_eq!(gb, vec![Polynomial::<Rational>::one()]);
    }

    #[test]
    fn expired_budget() {
        let r = ring();
        let gens = vec![r.parse_poly("x[1,1]*y[1,1] - z[1,1]").unwrap()];
        let opts = BuchbergerOptions::default().with_deadline(Some(Instant::now()));
        assert_eq!(buchberger(&gens, &opts).unwrap_err(), Error::BudgetExceeded);
    }
}
