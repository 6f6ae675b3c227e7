use super::*;
use crate::groebner::GroebnerBasis;

fn range(lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).collect()
}

/// Exchange sequences applicable to `start`: each step swaps in a Y row
/// missing from the current main part for one of the original rows not
/// swapped yet. Sequences are listed by increasing length, the empty one
/// excluded.
pub fn exchange_sequences(start: &Exchangeable, params: &ProblemParams) -> Vec<Vec<Exchange>> {
    let (present, _) = start.exchange_rows(params);
    let mut out = Vec::new();
    let mut frontier: Vec<(Vec<Exchange>, Vec<usize>)> = vec![(Vec::new(), start.y_rows())];
    for _ in 0..present.len() {
        let mut next = Vec::new();
        for (seq, rows) in &frontier {
            for &r2 in &present {
                if seq.iter().any(|x| x.r2 == r2) || !rows.contains(&r2) {
                    continue;
                }
                for r in 1..=params.s2 {
                    if rows.contains(&r) {
                        continue;
                    }
                    for e in 1..=params.t2 {
                        let mut s = seq.clone();
                        s.push(Exchange { r, r2, e });
                        let rows2: Vec<usize> = rows.iter().map(|&x| if x == r2 { r } else { x }).collect();
                        next.push((s, rows2));
                    }
                }
            }
        }
        out.extend(next.iter().map(|(s, _)| s.clone()));
        frontier = next;
    }
    out
}

fn ex_tag(exs: &[Exchange]) -> String {
    exs.iter().map(|x| format!("{}<{}@{}", x.r, x.r2, x.e)).collect::<Vec<_>>().join(" ")
}

/// Pushes every exchange descendant of `start` under `prefix`.
fn push_exchanges(
    set: &mut GeneratorSet,
    prefix: &str,
    start: &Exchangeable,
    params: &ProblemParams,
) -> Result<()> {
    let ring = set.ring.clone();
    for seq in exchange_sequences(start, params) {
        match start.clone().exchange_all(&ring, params, &seq) {
            Ok(x) => {
                set.push(format!("{prefix}|{}]", ex_tag(&seq)), x.poly)?;
            }
            Err(Error::IndexOutOfRange(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

/// All members of the Groebner-basis families, enumerated permissively:
/// every index tuple for which the construction is well formed. Families
/// are tagged `xminor`, `yminor`, `g`, `f`, `U`, `H`, `W`, `V`, `I`; the
/// exchange level of W, V, I is the number of `r<r2@e` steps in the tag.
#[allow(non_snake_case)]
pub fn G_candidate_set(params: &ProblemParams) -> Result<GeneratorSet> {
    candidates_with_width(params, params.f_width())
}

/// As [`G_candidate_set`] with the f-based families running over columns
/// `1..=width`.
pub fn candidates_with_width(params: &ProblemParams, width: usize) -> Result<GeneratorSet> {
    let l_set = L_generators(params)?;
    let ring = l_set.ring.clone();
    let mut set = GeneratorSet::new("G", ring.clone());
    for t in l_set.elements.iter().filter(|t| !t.tag.starts_with("f[")) {
        set.push(t.tag.clone(), t.poly.clone())?;
    }
    let (s1, kmax) = (params.s1, params.s1.min(params.s2));
    let width = range(1, width);
    for k in 1..=kmax {
        for l in 1..=k {
            for cols in subsets(&width, s1 + k - 1) {
                let ct = tuple(&cols);
                let f = f_lk(&ring, params, l, k, &cols)?;
                let fx = Exchangeable { poly: f.clone(), kappa: Polynomial::one(), main: f_main(params, l, k), cols: cols.clone() };
                set.push(format!("f[{l},{k};{ct}]"), f)?;
                push_exchanges(&mut set, &format!("V[{l},{k};{ct}"), &fx, params)?;
                if l < 2 {
                    continue;
                }
                for q in 1..=params.n {
                    let h = h_poly(&ring, params, l, k, q, &cols)?;
                    let hx = Exchangeable {
                        poly: h.clone(),
                        kappa: Polynomial::var(&ring, crate::poly::VariableId::z(l - 1, q))?,
                        main: f_main(params, l, k),
                        cols: cols.clone(),
                    };
                    set.push(format!("H[{l},{k},{q};{ct}]"), h)?;
                    push_exchanges(&mut set, &format!("I[{l},{k},{q};{ct}"), &hx, params)?;
                }
            }
        }
    }
    for p in 1..=s1 {
        for q in 1..=params.n {
            for cols in subsets(&range(1, params.t1), s1) {
                let ct = tuple(&cols);
                let ux = u_exchangeable(&ring, params, p, q, &cols)?;
                set.push(format!("U[{p},{q};{ct}]"), ux.poly.clone())?;
                push_exchanges(&mut set, &format!("W[{p},{q};{ct}"), &ux, params)?;
            }
        }
    }
    Ok(set)
}

/// Splits `set` into members and non-members of the ideal of `gb`.
pub fn membership_filter(set: &GeneratorSet, gb: &GroebnerBasis) -> (GeneratorSet, Vec<String>) {
    let mut kept = GeneratorSet::new(set.name.clone(), set.ring.clone());
    let mut rejected = Vec::new();
    for t in &set.elements {
        if gb.contains(&t.poly) {
            kept.push(t.tag.clone(), t.poly.clone()).expect("tags already unique");
        } else {
            rejected.push(t.tag.clone());
        }
    }
    (kept, rejected)
}
