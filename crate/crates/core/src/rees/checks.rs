use super::examples::{listed_3x4, notfiber_h, notfiber_j, EXPLICIT_3X4};
use super::{rees_ideal, rees_ideal_of, special_fiber, Finding, IdealSpec, VerificationReport};
use crate::detmat::{identity_instances, identity_pair, maximal_minors, subsets, topx_sum};
use crate::error::{Error, Result};
use crate::generators::{all_g, f_lk, p_correction, p_lk, u_poly, GeneratorSet, G_candidate_set, L_generators};
use crate::groebner::{criterion_witness, eliminate, BuchbergerOptions, GroebnerBasis, MonomialIdeal};
use crate::poly::{Family, Polynomial, ProblemParams, Ring, TermOrder, VariableId};

fn gb_of(set: &GeneratorSet, rep: &mut VerificationReport, opts: &BuchbergerOptions) -> Result<GroebnerBasis> {
    let gb = GroebnerBasis::compute(&set.ring, &set.polys(), opts)?;
    rep.absorb(&gb.stats);
    Ok(gb)
}

/// Tags (with normal forms) of the elements of `set` outside the ideal of `gb`.
fn outside(set: &GeneratorSet, gb: &GroebnerBasis) -> Vec<String> {
    set.elements
        .iter()
        .filter_map(|t| {
            let nf = gb.normal_form(&t.poly);
            (!nf.is_zero()).then(|| format!("{}: {}", t.tag, gb.ring.fmt_poly(&nf)))
        })
        .collect()
}

fn fmt_monos(ring: &Ring, ms: &[crate::poly::Monomial]) -> Vec<String> {
    ms.iter().map(|m| ring.fmt_monomial(m)).collect()
}

/// L = K by mutual containment, K computed independently by eliminating t.
pub fn verify_linear_type(params: &ProblemParams, opts: &BuchbergerOptions) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(*params);
    let l = L_generators(params)?;
    let mut k_state: Option<(GeneratorSet, GroebnerBasis)> = None;
    rep.run("L contained in K", |rep| {
        let (k, stats) = rees_ideal(params, opts)?;
        rep.absorb(&stats);
        let kgb = gb_of(&k, rep, opts)?;
        let bad = outside(&l, &kgb);
        k_state = Some((k, kgb));
        Ok(Finding::expect_empty(&bad))
    })?;
    rep.run("K contained in L", |rep| {
        let (k, _) = k_state.as_ref().ok_or(Error::BudgetExceeded)?;
        let lgb = gb_of(&l, rep, opts)?;
        Ok(Finding::expect_empty(&outside(k, &lgb)))
    })?;
    Ok(rep)
}

/// The fiber ideal K ∩ k[Z] is zero.
pub fn verify_fiber(params: &ProblemParams, opts: &BuchbergerOptions) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(*params);
    rep.run("fiber ideal is zero", |rep| {
        let (k, stats) = rees_ideal(params, opts)?;
        rep.absorb(&stats);
        let (fib, stats) = special_fiber(&k, opts)?;
        rep.absorb(&stats);
        let gens: Vec<String> = fib.polys().iter().map(|p| fib.ring.fmt_poly(p)).collect();
        Ok(Finding::expect_empty(&gens))
    })?;
    Ok(rep)
}

fn nzd_check(
    l: &GeneratorSet,
    ring: &Ring,
    v: VariableId,
    rep: &mut VerificationReport,
    opts: &BuchbergerOptions,
) -> crate::rees::Outcome {
    let polys = l.polys().iter().map(|p| p.convert(&l.ring, ring)).collect::<Result<Vec<_>>>()?;
    let gb = GroebnerBasis::compute(ring, &polys, opts)?;
    rep.absorb(&gb.stats);
    let inl = gb.initial_ideal();
    let colon = inl.colon_var(ring.slot(v)?);
    let extra = colon.missing_from(&inl);
    Ok(Finding::expect_empty(&fmt_monos(ring, &extra)))
}

/// Generators of `(I : v)` for a variable `v`: `I ∩ (v)` is obtained by
/// eliminating `t` from `t I + (1 - t) v`, then divided by `v`.
pub fn colon_by_variable(
    ring: &Ring,
    gens: &[Polynomial],
    v: VariableId,
    opts: &BuchbergerOptions,
) -> Result<(Vec<Polynomial>, crate::groebner::EngineStats)> {
    let mut vars = ring.variables().to_vec();
    vars.push(VariableId::t());
    let ring_t = Ring::new(&vars, ring.order().clone())?;
    let t = Polynomial::var(&ring_t, VariableId::t())?;
    let pv = Polynomial::var(&ring_t, v)?;
    let mut input = gens
        .iter()
        .map(|g| Ok(t.mul(&g.convert(ring, &ring_t)?)))
        .collect::<Result<Vec<_>>>()?;
    input.push(Polynomial::one().sub(&t).mul(&pv));
    let (meet, stats) = eliminate(&ring_t, &input, &[VariableId::t()], opts)?;
    let slot = ring_t.slot(v)?;
    let vm = ring_t.var_monomial(v)?;
    let mut out = Vec::with_capacity(meet.len());
    for p in meet {
        debug_assert!(p.terms().iter().all(|(m, _)| m.exponent(slot) > 0));
        let q = Polynomial::from_terms(p.terms().iter().map(|(m, c)| (m.div(&vm), c.clone())));
        out.push(q.convert(&ring_t, ring)?);
    }
    Ok((out, stats))
}

fn quotient_check(
    l: &GeneratorSet,
    lgb: &GroebnerBasis,
    v: VariableId,
    rep: &mut VerificationReport,
    opts: &BuchbergerOptions,
) -> crate::rees::Outcome {
    let (q, stats) = colon_by_variable(&l.ring, &l.polys(), v, opts)?;
    rep.absorb(&stats);
    let bad: Vec<String> = q
        .iter()
        .filter(|p| !lgb.contains(p))
        .map(|p| l.ring.fmt_poly(p))
        .collect();
    Ok(Finding::expect_empty(&bad))
}

/// `(in(L) : x[1,1]) = in(L)` under PaperLex, and the same for
/// `y[1,1]` under the order with the x and y families exchanged. Two
/// further checks test `(L : x[1,1]) = L` and `(L : y[1,1]) = L` directly.
pub fn nzd_certificate(params: &ProblemParams, opts: &BuchbergerOptions) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(*params);
    let l = L_generators(params)?;
    let ring = l.ring.clone();
    rep.run(NZD_X, |rep| nzd_check(&l, &ring, VariableId::x(1, 1), rep, opts))?;
    let swapped = ring.with_order(TermOrder::paper_lex_swapped(ring.variables()))?;
    rep.run(NZD_Y, |rep| nzd_check(&l, &swapped, VariableId::y(1, 1), rep, opts))?;
    let mut lgb_state = None;
    rep.run("(L : x[1,1]) = L", |rep| {
        let lgb = gb_of(&l, rep, opts)?;
        let out = quotient_check(&l, &lgb, VariableId::x(1, 1), rep, opts);
        lgb_state = Some(lgb);
        out
    })?;
    rep.run("(L : y[1,1]) = L", |rep| {
        let lgb = lgb_state.as_ref().ok_or(Error::BudgetExceeded)?;
        quotient_check(&l, lgb, VariableId::y(1, 1), rep, opts)
    })?;
    Ok(rep)
}

pub const NZD_X: &str = "x[1,1] is a non zero-divisor mod in(L)";
pub const NZD_Y: &str = "y[1,1] is a non zero-divisor mod in(L), x/y swapped order";

/// The 3x3 example: h is outside J, inside K, and the fiber of K is zero.
pub fn notfiber_case(opts: &BuchbergerOptions) -> Result<VerificationReport> {
    let spec = IdealSpec::not_fiber()?;
    let ring = spec.ring.clone();
    let h = notfiber_h(&ring)?;
    let mut rep = VerificationReport::new(spec.params);
    rep.run("h not in J", |rep| {
        let j = notfiber_j(&spec)?;
        let jgb = gb_of(&j, rep, opts)?;
        let nf = jgb.normal_form(&h);
        let w = format!("normal form of h: {}", ring.fmt_poly(&nf));
        Ok(if nf.is_zero() { Finding::fail(w) } else { Finding::pass_with(w) })
    })?;
    let mut k_state: Option<GeneratorSet> = None;
    rep.run("h in K", |rep| {
        let (k, stats) = rees_ideal_of(&spec, opts)?;
        rep.absorb(&stats);
        let kgb = gb_of(&k, rep, opts)?;
        let nf = kgb.normal_form(&h);
        k_state = Some(k);
        Ok(if nf.is_zero() {
            Finding::pass()
        } else {
            Finding::fail(format!("normal form of h: {}", ring.fmt_poly(&nf)))
        })
    })?;
    rep.run("fiber ideal of K is zero", |rep| {
        let k = k_state.as_ref().ok_or(Error::BudgetExceeded)?;
        let (fib, stats) = special_fiber(k, opts)?;
        rep.absorb(&stats);
        let gens: Vec<String> = fib.polys().iter().map(|p| ring.fmt_poly(p)).collect();
        Ok(Finding::expect_empty(&gens))
    })?;
    Ok(rep)
}

/// Every candidate lies in L, all S-pairs of the candidates reduce to zero
/// against them, and their leading monomials generate in(L).
pub fn verify_gb(params: &ProblemParams, opts: &BuchbergerOptions) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(*params);
    let l = L_generators(params)?;
    let g = G_candidate_set(params)?;
    let ring = l.ring.clone();
    let mut lgb_state = None;
    rep.run("candidates lie in L", |rep| {
        let lgb = gb_of(&l, rep, opts)?;
        let bad = outside(&g, &lgb);
        lgb_state = Some(lgb);
        Ok(Finding::expect_empty(&bad))
    })?;
    rep.run("S-pairs of G reduce to 0 against G", |_| {
        let polys = g.polys();
        Ok(match criterion_witness(&polys) {
            None => Finding::pass(),
            Some((i, j, r)) => Finding::fail(format!(
                "S({}, {}) has remainder {}",
                g.elements[i].tag,
                g.elements[j].tag,
                ring.fmt_poly(&r)
            )),
        })
    })?;
    rep.run("in(G) = in(L)", |_| {
        let lgb = lgb_state.as_ref().ok_or(Error::BudgetExceeded)?;
        let ing = MonomialIdeal::new(g.polys().iter().map(|p| *p.lm()));
        let inl = lgb.initial_ideal();
        let mut bad: Vec<String> = fmt_monos(&ring, &inl.missing_from(&ing))
            .into_iter()
            .map(|m| format!("in(L) only: {m}"))
            .collect();
        bad.extend(fmt_monos(&ring, &ing.missing_from(&inl)).into_iter().map(|m| format!("in(G) only: {m}")));
        Ok(Finding::expect_empty(&bad))
    })?;
    Ok(rep)
}

/// The 3x4 shape: named monomials, listed families and the absence of x[1,1].
pub fn example_3x4(opts: &BuchbergerOptions) -> Result<VerificationReport> {
    let params = ProblemParams::new(3, 4, 3, 4, 2, 4)?;
    let l = L_generators(&params)?;
    let ring = l.ring.clone();
    let mut rep = VerificationReport::new(params);
    let mut inl_state: Option<MonomialIdeal> = None;
    rep.run("named monomials are minimal generators of in(L)", |rep| {
        let inl = gb_of(&l, rep, opts)?.initial_ideal();
        let mut missing = Vec::new();
        for s in EXPLICIT_3X4 {
            let m = *ring.parse_poly(s)?.lm();
            if !inl.generators().contains(&m) {
                missing.push(format!("{s} not a minimal generator"));
            }
        }
        inl_state = Some(inl);
        Ok(Finding::expect_empty(&missing))
    })?;
    rep.run("listed families generate in(L)", |_| {
        let inl = inl_state.as_ref().ok_or(Error::BudgetExceeded)?;
        let listed = listed_3x4(&ring)?;
        let mut bad: Vec<String> = listed
            .iter()
            .filter(|(_, m)| !inl.generators().contains(m))
            .map(|(fam, m)| format!("listed ({fam}) but not a minimal generator: {}", ring.fmt_monomial(m)))
            .collect();
        let lid = MonomialIdeal::new(listed.iter().map(|(_, m)| *m));
        bad.extend(
            inl.missing_from(&lid)
                .iter()
                .map(|m| format!("minimal generator not listed: {}", ring.fmt_monomial(m))),
        );
        Ok(Finding::expect_empty(&bad))
    })?;
    rep.run("x[1,1] divides no minimal generator", |_| {
        let inl = inl_state.as_ref().ok_or(Error::BudgetExceeded)?;
        let x11 = ring.var_monomial(VariableId::x(1, 1))?;
        let hits: Vec<String> = inl
            .generators()
            .iter()
            .filter(|m| x11.divides(m))
            .map(|m| ring.fmt_monomial(m))
            .collect();
        Ok(Finding::expect_empty(&hits))
    })?;
    Ok(rep)
}

/// Literal identities for every index choice inside the shape, and
/// membership of the topx sums, f, p and U families.
pub fn verify_identities(params: &ProblemParams, opts: &BuchbergerOptions) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(*params);
    let ring = Ring::paper(params)?;
    rep.run("identities hold", |_| {
        let mut bad = Vec::new();
        for id in identity_instances(params) {
            let (lhs, rhs) = identity_pair(&ring, &id)?;
            if lhs != rhs {
                bad.push(format!("{id:?}: {}", ring.fmt_poly(&lhs.sub(&rhs))));
            }
        }
        Ok(Finding::expect_empty(&bad))
    })?;
    rep.run("topx sums lie in (I(Y), g)", |rep| {
        let mut yg = GeneratorSet::new("YG", ring.clone());
        for (c, p) in maximal_minors(&ring, Family::Y, params.s2, params.t2)? {
            yg.push(format!("yminor{c:?}"), p)?;
        }
        for (tag, p) in all_g(&ring, params)? {
            yg.push(tag, p)?;
        }
        let gb = gb_of(&yg, rep, opts)?;
        // The Y-minors only see columns up to t2.
        let cols: Vec<usize> = (1..=params.t2).collect();
        let mut bad = Vec::new();
        for r in 1..=params.s1 {
            for c in subsets(&cols, params.s1 + 1) {
                let p = topx_sum(&ring, params, r, &c)?;
                if !gb.contains(&p) {
                    bad.push(format!("r={r} cols={c:?}"));
                }
            }
        }
        Ok(Finding::expect_empty(&bad))
    })?;
    let l = L_generators(params)?;
    let mut lgb_state = None;
    rep.run("f and p families lie in L", |rep| {
        let lgb = gb_of(&l, rep, opts)?;
        let width: Vec<usize> = (1..=params.f_width()).collect();
        let mut bad = Vec::new();
        for k in 1..=params.s1.min(params.s2) {
            for lo in 1..=k {
                for c in subsets(&width, params.s1 + k - 1) {
                    let f = f_lk(&ring, params, lo, k, &c)?;
                    let p = p_lk(&ring, params, lo, k, &c)?;
                    let corr = p_correction(&ring, params, lo, k, &c)?;
                    if !lgb.contains(&f) {
                        bad.push(format!("f[{lo},{k};{c:?}] not in L"));
                    }
                    if !lgb.contains(&p) {
                        bad.push(format!("p[{lo},{k};{c:?}] not in L"));
                    }
                    if !p.sub(&f).sub(&corr).is_zero() {
                        bad.push(format!("p - f - correction != 0 at [{lo},{k};{c:?}]"));
                    }
                }
            }
        }
        lgb_state = Some(lgb);
        Ok(Finding::expect_empty(&bad))
    })?;
    rep.run("U family lies in L", |_| {
        let lgb = lgb_state.as_ref().ok_or(Error::BudgetExceeded)?;
        let cols: Vec<usize> = (1..=params.t1).collect();
        let mut bad = Vec::new();
        for p in 1..=params.s1 {
            for q in 1..=params.n {
                for c in subsets(&cols, params.s1) {
                    let u: Polynomial = u_poly(&ring, params, p, q, &c)?;
                    if !lgb.contains(&u) {
                        bad.push(format!("U[{p},{q};{c:?}]"));
                    }
                }
            }
        }
        Ok(Finding::expect_empty(&bad))
    })?;
    Ok(rep)
}
