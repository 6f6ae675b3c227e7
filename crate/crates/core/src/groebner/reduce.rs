use crate::poly::{Field, Monomial, Polynomial};

/// Leading-monomial index over a list of reducers, with a support-mask
/// prefilter in front of the exact divisibility test.
pub(crate) struct DivisorIndex {
    entries: Vec<(u64, Monomial, usize)>,
}

impl DivisorIndex {
    pub fn new() -> Self {
        DivisorIndex {
            entries: Vec::new(),
        }
    }

    pub fn from_polys<C: Field>(polys: &[Polynomial<C>]) -> Self {
        let mut idx = Self::new();
        for (i, p) in polys.iter().enumerate() {
            if !p.is_zero() {
                idx.push(*p.lm(), i);
            }
        }
        idx
    }

    pub fn push(&mut self, lm: Monomial, tag: usize) {
        self.entries.push((lm.support_mask(), lm, tag));
    }

    /// Tag of the first reducer (in insertion order) whose leading monomial
    /// divides `m`.
    pub fn find(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        self.entries
            .iter()
            .find(|(lmask, lm, _)| lmask & !mask == 0 && lm.divides(m))
            .map(|(_, _, tag)| *tag)
    }

    #[cfg(test)]
    pub fn len(&self) -> usize {
        self.entries.len()
    }
}

/// Ascending-order work buffer: the current leading term sits at the end.
fn merge_ascending<C: Field>(
    rest: Vec<(Monomial, C)>,
    g: &Polynomial<C>,
    c: &C,
    shift: &Monomial,
) -> Vec<(Monomial, C)> {
    // rest ascending, g descending: walk g backwards.
    let mut out = Vec::with_capacity(rest.len() + g.len());
    let mut a = rest.into_iter().peekable();
    let mut b = g.terms().iter().rev().map(|(m, d)| (m.mul(shift), d)).peekable();
    loop {
        match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(a.next().unwrap()),
            (None, Some(_)) => {
                let (m, d) = b.next().unwrap();
                out.push((m, d.mul(c).neg()));
            }
            (Some((ma, _)), Some((mb, _))) => match ma.cmp(mb) {
                std::cmp::Ordering::Less => out.push(a.next().unwrap()),
                std::cmp::Ordering::Greater => {
                    let (m, d) = b.next().unwrap();
                    out.push((m, d.mul(c).neg()));
                }
                std::cmp::Ordering::Equal => {
                    let (ma, ca) = a.next().unwrap();
                    let (_, d) = b.next().unwrap();
                    let s = ca.sub(&d.mul(c));
                    if !s.is_zero() {
                        out.push((ma, s));
                    }
                }
            },
        }
    }
    out
}

/// Result of a reduction together with how many reduction steps it took.
pub(crate) struct Reduced<C: Field> {
    pub poly: Polynomial<C>,
    pub steps: usize,
}

/// Full reduction of `p` by `basis` (leading and tail terms). Reducer
/// choice is the lowest-tag applicable element of `index`.
pub(crate) fn reduce_full<C: Field>(
    p: &Polynomial<C>,
    basis: &[Polynomial<C>],
    index: &DivisorIndex,
) -> Reduced<C> {
    let mut rest: Vec<(Monomial, C)> = p.terms().iter().rev().cloned().collect();
    let mut done: Vec<(Monomial, C)> = Vec::new();
    let mut steps = 0;
    while let Some((m, c)) = rest.pop() {
        match index.find(&m) {
            Some(tag) => {
                let g = &basis[tag];
                let factor = c.div(g.lc());
                let shift = m.div(g.lm());
                // The leading term cancels exactly; merge the tail only.
                let tail = Polynomial::from_sorted_unchecked(g.terms()[1..].to_vec());
                rest = merge_ascending(rest, &tail, &factor, &shift);
                steps += 1;
            }
            None => done.push((m, c)),
        }
    }
    Reduced {
        poly: Polynomial::from_sorted_unchecked(done),
        steps,
    }
}

/// Reduces only while the leading term is reducible.
pub(crate) fn reduce_top<C: Field>(
    p: &Polynomial<C>,
    basis: &[Polynomial<C>],
    index: &DivisorIndex,
) -> Polynomial<C> {
    let mut rest: Vec<(Monomial, C)> = p.terms().iter().rev().cloned().collect();
    while let Some((m, c)) = rest.last().cloned() {
        let Some(tag) = index.find(&m) else { break };
        rest.pop();
        let g = &basis[tag];
        let factor = c.div(g.lc());
        let shift = m.div(g.lm());
        let tail = Polynomial::from_sorted_unchecked(g.terms()[1..].to_vec());
        rest = merge_ascending(rest, &tail, &factor, &shift);
    }
    rest.reverse();
    Polynomial::from_sorted_unchecked(rest)
}

/// Remainder of `p` on full division by `basis` (in the given order).
pub fn normal_form<C: Field>(p: &Polynomial<C>, basis: &[Polynomial<C>]) -> Polynomial<C> {
    let index = DivisorIndex::from_polys(basis);
    reduce_full(p, basis, &index).poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ProblemParams, Rational, Ring, VariableId as V};

    fn ring() -> Ring {
        Ring::paper(&ProblemParams::new(2, 2, 2, 2, 2, 2).unwrap()).unwrap()
    }

    #[test]
    fn self_reduces_to_zero() {
        let r = ring();
        let b = r.parse_poly("x[1,1]*x[2,2] - x[1,2]*x[2,1] + 3*y[1,1]").unwrap();
        assert!(normal_form(&b, std::slice::from_ref(&b)).is_zero());
        assert!(normal_form(&b.scale(&Rational::new(-2, 7)), std::slice::from_ref(&b)).is_zero());
    }

    #[test]
    fn irreducible_terms_survive() {
        let r = ring();
        let g = r.parse_poly("x[1,2] - y[1,1]").unwrap();
        let p = r.parse_poly("x[1,2]*x[1,1] + x[2,1]").unwrap();
        let nf = normal_form(&p, &[g]);
        assert_eq!(r.fmt_poly(&nf), "x[1,1]*y[1,1] + x[2,1]");
        let x11 = Polynomial::<Rational>::var(&r, V::x(1, 1)).unwrap();
        assert_eq!(normal_form(&x11, &[]), x11);
    }

    #[test]
    fn top_reduction_stops_at_irreducible_lead() {
        let r = ring();
        let g = r.parse_poly("x[2,2] - y[1,1]").unwrap();
        let p = r.parse_poly("x[1,1] + x[2,2]").unwrap();
        let idx = DivisorIndex::from_polys(std::slice::from_ref(&g));
        assert_eq!(reduce_top(&p, std::slice::from_ref(&g), &idx), p);
        assert_eq!(idx.len(), 1);
    }
}
