use std::cmp::Ordering;

use super::coeff::{Field, Fp, Rational};
use super::ring::{Monomial, Ring};
use super::var::VariableId;
use crate::error::{Error, Result};

/// Sparse polynomial. Terms are kept strictly descending in the layout of
/// the ring that built them, with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<C: Field = Rational> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Field> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Field> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn term(c: C, m: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    pub fn var(ring: &Ring, v: VariableId) -> Result<Self> {
        Ok(Self::term(C::one(), ring.var_monomial(v)?))
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal
    /// monomials and drops zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut terms: Vec<(Monomial, C)> = terms.into_iter().collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
            if out.last().is_some_and(|(_, c)| c.is_zero()) {
                out.pop();
            }
        }
        Polynomial { terms: out }
    }

    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, C)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn leading_term(&self) -> Result<(&C, &Monomial)> {
        self.terms
            .first()
            .map(|(m, c)| (c, m))
            .ok_or(Error::LeadingTermOfZero)
    }

    /// Leading monomial; panics on zero. Engine-internal shorthand.
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &C {
        &self.terms[0].1
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, d)| (*m, d.mul(c))).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &C, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(n, d)| (n.mul(m), d.mul(c)))
                .collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => Self::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, &C::one(), &Monomial::one(), false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, &C::one(), &Monomial::one(), true)
    }

    /// `self - c * m * g`, merged in one pass. This is the reduction kernel.
    pub fn sub_mul_term(&self, c: &C, m: &Monomial, g: &Self) -> Self {
        self.combine(g, c, m, true)
    }

    fn combine(&self, g: &Self, c: &C, m: &Monomial, subtract: bool) -> Self {
        let c = if subtract { c.neg() } else { c.clone() };
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(n, d)| (n.mul(m), d)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some((ma, _)), Some((mb, _))) => ma.cmp(mb),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let (mb, d) = b.next().unwrap();
                    out.push((mb, d.mul(&c)));
                }
                Ordering::Equal => {
                    let (ma, ca) = a.next().unwrap();
                    let (_, d) = b.next().unwrap();
                    let s = ca.add(&d.mul(&c));
                    if !s.is_zero() {
                        out.push((*ma, s));
                    }
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Self::zero();
        for (m, c) in &small.terms {
            acc = acc.combine(large, c, m, false);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Whether any term involves `v`.
    pub fn involves(&self, ring: &Ring, v: VariableId) -> bool {
        self.terms.iter().any(|(m, _)| ring.involves(m, v))
    }

    /// Variables occurring in the polynomial, largest first.
    pub fn support(&self, ring: &Ring) -> Vec<VariableId> {
        let mask = self.terms.iter().fold(0u64, |acc, (m, _)| acc | m.support_mask());
        (0..ring.nvars())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| ring.var(i))
            .collect()
    }

    /// Replaces each variable `v` by `image(v)` when it returns `Some`.
    pub fn substitute(
        &self,
        ring: &Ring,
        image: impl Fn(VariableId) -> Option<Polynomial<C>>,
    ) -> Result<Self> {
        let images: Vec<Option<Polynomial<C>>> = ring.variables().iter().map(|v| image(*v)).collect();
        let mut acc = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut factor = Self::constant(c.clone());
            for (slot, img) in images.iter().enumerate() {
                let e = m.exponent(slot);
                if e == 0 {
                    continue;
                }
                match img {
                    Some(p) => factor = factor.mul(&p.pow(e)),
                    None => kept.set_exponent(slot, e)?,
                }
            }
            acc = acc.combine(&factor, &C::one(), &kept, false);
        }
        Ok(acc)
    }

    /// Re-expresses the polynomial in another ring containing its variables.
    pub fn convert(&self, from: &Ring, to: &Ring) -> Result<Self> {
        if from == to {
            return Ok(self.clone());
        }
        let slots: Vec<Option<usize>> = from
            .variables()
            .iter()
            .map(|v| to.slot(*v).ok())
            .collect();
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            let mut n = Monomial::one();
            for (i, slot) in slots.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    let s = slot.ok_or_else(|| Error::UnknownVariable(from.var(i).to_string()))?;
                    n.set_exponent(s, e)?;
                }
            }
            terms.push((n, c.clone()));
        }
        Ok(Self::from_terms(terms))
    }
}

impl Polynomial<Rational> {
    /// Reduction modulo 32003; `None` if some denominator vanishes.
    pub fn to_fp(&self) -> Option<Polynomial<Fp>> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Fp::from_rational(c).map(|f| (*m, f)))
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial::from_terms(terms))
    }

    pub fn from_i64_terms(terms: impl IntoIterator<Item = (Monomial, i64)>) -> Self {
        Self::from_terms(terms.into_iter().map(|(m, c)| (m, Rational::from_i64(c))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::order::TermOrder;
    use crate::poly::var::ProblemParams;
    use VariableId as V;

    fn ring() -> Ring {
        Ring::paper(&ProblemParams::new(2, 2, 2, 2, 2, 2).unwrap()).unwrap()
    }

    fn v(r: &Ring, id: VariableId) -> Polynomial {
        Polynomial::var(r, id).unwrap()
    }

    #[test]
    fn ring_axioms_examples() {
        let r = ring();
        let x = v(&r, V::x(1, 1));
        let y = v(&r, V::y(1, 1));
        let p = x.add(&y.scale(&Rational::new(3, 2)));
        assert!(p.add(&p.neg()).is_zero());
        assert_eq!(Polynomial::one().mul(&p), p);
        let lhs = x.sub(&y).mul(&x.add(&y));
        let rhs = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn leading_term_of_zero_errors() {
        let p: Polynomial = Polynomial::zero();
        assert_eq!(p.leading_term().unwrap_err(), Error::LeadingTermOfZero);
    }

    #[test]
    fn substitute_and_convert() {
        let r = ring();
        let z = v(&r, V::z(1, 1));
        let x = v(&r, V::x(1, 1));
        let y = v(&r, V::y(1, 1));
        let p = z.mul(&z);
        let q = p
            .substitute(&r, |w| (w == V::z(1, 1)).then(|| x.sub(&y)))
            .unwrap();
        assert_eq!(q, x.sub(&y).mul(&x.sub(&y)));
        let other = r.with_order(TermOrder::paper_lex_swapped(r.variables())).unwrap();
        let back = q.convert(&r, &other).unwrap().convert(&other, &r).unwrap();
        assert_eq!(back, q);
    }
}
