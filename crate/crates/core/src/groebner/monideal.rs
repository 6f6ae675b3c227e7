use crate::poly::{Monomial, Ring};

/// Monomial ideal stored by its minimal generators, sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        // Ascending degree so that divisors come before their multiples.
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then(b.cmp(a)));
        all.dedup();
        let mut min: Vec<Monomial> = Vec::new();
        for m in all {
            if !min.iter().any(|g| g.divides(&m)) {
                min.push(m);
            }
        }
        min.sort_by(|a, b| b.cmp(a));
        MonomialIdeal { gens: min }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// `(self : v)` for the variable in `slot`.
    pub fn colon_var(&self, slot: usize) -> MonomialIdeal {
        MonomialIdeal::new(self.gens.iter().map(|g| {
            let mut h = *g;
            let e = g.exponent(slot);
            if e > 0 {
                h.set_exponent(slot, e - 1).expect("smaller exponent fits");
            }
            h
        }))
    }

    /// `(self : m)` for a monomial `m`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.gens.iter().map(|g| g.div(&g.gcd(m))))
    }

    /// Minimal generators that are not in `other`.
    pub fn missing_from(&self, other: &MonomialIdeal) -> Vec<Monomial> {
        self.gens.iter().filter(|g| !other.contains(g)).copied().collect()
    }

    pub fn display(&self, ring: &Ring) -> Vec<String> {
        self.gens.iter().map(|g| ring.fmt_monomial(g)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ProblemParams, VariableId as V};

    #[test]
    fn minimal_generators_and_colon() {
        let r = Ring::paper(&ProblemParams::new(2, 2, 2, 2, 2, 2).unwrap()).unwrap();
        let a = r.var_monomial(V::x(1, 1)).unwrap();
        let b = r.var_monomial(V::y(2, 2)).unwrap();
        let ideal = MonomialIdeal::new([a.mul(&b), a, b.mul(&b)]);
        assert_eq!(ideal.len(), 2);
        assert!(ideal.contains(&a.mul(&a)));
        assert!(!ideal.contains(&b));
        let slot = r.slot(V::y(2, 2)).unwrap();
        let q = ideal.colon_var(slot);
        assert!(q.contains(&b));
        assert_eq!(q, ideal.colon(&b));
        assert!(ideal.is_subset(&q));
        assert_eq!(ideal.missing_from(&q), Vec::<Monomial>::new());
        assert_eq!(q.missing_from(&ideal), vec![b]);
    }
}
