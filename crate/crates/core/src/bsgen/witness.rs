use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{bs_element, bs_matrix, bs_minor, BsInstance};
use crate::parabolic::{tableau_of, SimpleSubset};
use crate::report::CheckReport;
use crate::sympoly::sign_power;
use crate::sympoly::{Entry, Monomial, Poly, PolyMatrix, Var};
use crate::{Error, Result};

/// `A^n_{r,s}(t) = Det(t·e^s + f^r)` for the shift operators
/// `e v_i = v_{i−1}`, `f v_i = v_{i+1}` on an `n`-dimensional space.
pub fn a_rsn(r: usize, s: usize, n: usize) -> Result<Poly> {
    if r == 0 || s == 0 || n == 0 {
        return Err(Error::OutOfRange(format!(
            "A^{n}_{{{r},{s}}} needs r, s, n ≥ 1"
        )));
    }
    let m = PolyMatrix::from_fn(n, n, |i, j| {
        if j == i + s {
            Poly::t()
        } else if i == j + r {
            Poly::one()
        } else {
            Poly::zero()
        }
    });
    let all: Vec<usize> = (1..=n).collect();
    m.det(&all, &all)
}

fn t_power_form(sign_negative: bool, r: usize, s: usize, n: usize) -> Poly {
    if !n.is_multiple_of(r + s) {
        return Poly::zero();
    }
    let h = n / (r + s);
    let sign = if sign_negative && h % 2 == 1 { -1 } else { 1 };
    Poly::term(sign, Monomial::from_pairs([(Var::Param, (r * h) as u32)]))
}

/// The closed form as usually stated: `((−1)^{r+s} t^r)^h` when
/// `h(r+s) = n`, and `0` when `r+s` does not divide `n`.
pub fn a_rsn_closed_form(r: usize, s: usize, n: usize) -> Poly {
    t_power_form((r + s) % 2 == 1, r, s, n)
}

/// The closed form with the sign of the block permutation:
/// `((−1)^{rs} t^r)^h` when `h(r+s) = n`, and `0` otherwise.
pub fn a_rsn_corrected_form(r: usize, s: usize, n: usize) -> Poly {
    t_power_form((r * s) % 2 == 1, r, s, n)
}

/// The 0/1 point of `m⁻`: with the entries of rows `1..=c` of `T_I` listed
/// as `p_1 < … < p_{n−a}`, set `x[p_i, p_{i−c}] = 1` for `c < i ≤ n−a` and
/// every other coordinate of `M_I` to zero.
pub fn witness_point(inst: &BsInstance) -> Result<BTreeMap<Var, BigInt>> {
    inst.require_generic()?;
    let n = inst.n();
    let c = inst.c();
    let tab = tableau_of(inst.subset());
    let mut top: Vec<usize> = tab.rows()[..c.min(tab.rows().len())]
        .iter()
        .flatten()
        .map(|&e| e as usize)
        .collect();
    top.sort_unstable();
    let mut point: BTreeMap<Var, BigInt> = BTreeMap::new();
    let m = bs_matrix(inst);
    for i in 1..=n {
        for j in 1..=n {
            if m.get(i, j) == Entry::Coord {
                point.insert(Var::Coord(i, j), BigInt::zero());
            }
        }
    }
    for i in c + 1..=top.len() {
        point.insert(Var::Coord(top[i - 1], top[i - c - 1]), BigInt::one());
    }
    Ok(point)
}

/// Pairs `(i, j)` of chain indices, other than `(1, l)`, with `c_i = c_j`
/// and no chain strictly between them of that length.
pub fn competitor_windows(inst: &BsInstance) -> Vec<(usize, usize)> {
    let lengths = inst.chains().lengths();
    let l = lengths.len();
    let mut out = Vec::new();
    for i in 1..=l {
        for j in i + 1..=l {
            if (i, j) == (1, l) || lengths[i - 1] != lengths[j - 1] {
                continue;
            }
            if (i + 1..j).all(|k| lengths[k - 1] != lengths[i - 1]) {
                out.push((i, j));
            }
        }
    }
    out
}

/// The instance on the window `[u, v] = [min C_i, max C_j]`, with `u`.
fn window_instance(subset: &SimpleSubset, i: usize, j: usize) -> Result<(BsInstance, usize)> {
    let chains = subset.chains();
    let l = chains.len();
    if i == 0 || j > l || i >= j {
        return Err(Error::ChainIndexOutOfRange {
            index: if i == 0 || i >= j { i } else { j },
            chains: l,
        });
    }
    let lengths = chains.lengths();
    let (ci, cj) = (lengths[i - 1], lengths[j - 1]);
    if ci != cj {
        return Err(Error::UnequalEndChains {
            first: ci,
            last: cj,
        });
    }
    if let Some(k) = (i + 1..j).find(|&k| lengths[k - 1] == ci) {
        return Err(Error::InteriorChainRepeatsEnd {
            index: k,
            length: ci,
        });
    }
    let u = *chains.chain(i)?.start();
    let v = *chains.chain(j)?.end();
    let members = subset
        .members()
        .iter()
        .filter(|&&s| u <= s && s < v)
        .map(|&s| s - u + 1);
    let window = SimpleSubset::new(v - u + 1, members)?;
    Ok((BsInstance::new(window)?, u))
}

fn shift_vars(p: &Poly, u: usize) -> Poly {
    p.map_vars(|v| match v {
        Var::Coord(r, s) => Var::Coord(r + u - 1, s + u - 1),
        Var::Param => Var::Param,
    })
}

/// The generator of the window `[min C_i, max C_j]`, written in the ambient
/// coordinates. Requires `c_i = c_j` with no chain strictly between them of
/// that length.
pub fn general_generator(subset: &SimpleSubset, i: usize, j: usize) -> Result<Poly> {
    let (window, u) = window_instance(subset, i, j)?;
    Ok(shift_vars(&bs_element(&window)?, u))
}

/// The irreducibility witness: at the witness point `x`, the generator takes
/// the value `(−1)^{c·d_I}` while every competing windowed generator
/// vanishes. For windows with `c′ > c` the whole windowed minor vanishes at
/// `x`; for `c′ < c` it equals `(−1)^{c′d′} t^{d′} A^{m}_{c−c′,c′}(t)` with
/// `d′` the number of entries of rows below `c` inside the window and
/// `m = n′ − c′ − d′`.
pub fn check_irreducibility_witness(inst: &BsInstance) -> CheckReport {
    let name = "witness";
    let outcome = (|| -> Result<(bool, String)> {
        let point = witness_point(inst)?;
        let (n, c, d) = (inst.n(), inst.c(), inst.d_total());
        let f = bs_element(inst)?;
        let fx = f
            .evaluate(&point, true)?
            .as_constant()
            .expect("f is free of t");
        let expected = sign_power((c * d) as u64);
        if fx != expected {
            return Ok((
                false,
                format!("f(x) = {fx}, expected (-1)^(c·d_I) = {expected}"),
            ));
        }
        let literal = if fx == sign_power(c as u64) {
            "agrees with"
        } else {
            "differs from"
        };
        let tab = tableau_of(inst.subset());
        let below: Vec<usize> = tab
            .rows()
            .iter()
            .skip(c)
            .flatten()
            .map(|&e| e as usize)
            .collect();
        let windows = competitor_windows(inst);
        for &(i, j) in &windows {
            let (window, u) = window_instance(inst.subset(), i, j)?;
            let (cw, nw) = (window.c(), window.n());
            let v = u + nw - 1;
            let minor_x = shift_vars(&bs_minor(&window)?, u).evaluate(&point, true)?;
            let fw_x = minor_x.t_coefficient(window.d_total() as u32);
            if !fw_x.is_zero() {
                return Ok((
                    false,
                    format!("window ({i},{j}): competitor generator is {fw_x} at x"),
                ));
            }
            if cw > c {
                if !minor_x.is_zero() {
                    return Ok((
                        false,
                        format!("window ({i},{j}), c'={cw}>c: minor is {minor_x} at x"),
                    ));
                }
                continue;
            }
            let dw = below.iter().filter(|&&e| u <= e && e <= v).count();
            let size = nw - cw - dw;
            let shape = if size == 0 {
                Poly::one()
            } else {
                a_rsn(c - cw, cw, size)?
            };
            let predicted = shape.mul_monomial(
                &sign_power((cw * dw) as u64),
                &Monomial::from_pairs([(Var::Param, dw as u32)]),
            );
            if minor_x != predicted {
                return Ok((
                    false,
                    format!("window ({i},{j}), c'={cw}<c: minor is {minor_x} at x, predicted {predicted}"),
                ));
            }
        }
        Ok((
            true,
            format!(
                "f(x) = {fx} ({literal} (-1)^c); competing generators vanish on {} window(s); n={n}",
                windows.len()
            ),
        ))
    })();
    match outcome {
        Ok((pass, detail)) => CheckReport::new(name, inst.subset(), pass, detail),
        Err(e) => CheckReport::fail(name, inst.subset(), format!("error: {e}")),
    }
}

/// The windowed generator on the full window `(1, l)` is the generator itself.
pub fn check_general_generator(inst: &BsInstance) -> CheckReport {
    let name = "general_generator";
    let outcome =
        general_generator(inst.subset(), 1, inst.l()).and_then(|g| Ok(g == bs_element(inst)?));
    match outcome {
        Ok(true) => CheckReport::pass(name, inst.subset(), "window (1,l) reproduces m_{l_I}"),
        Ok(false) => CheckReport::fail(name, inst.subset(), "window (1,l) differs from m_{l_I}"),
        Err(e) => CheckReport::fail(name, inst.subset(), format!("error: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(n: usize, members: &str) -> BsInstance {
        BsInstance::new(SimpleSubset::parse(n, members).unwrap()).unwrap()
    }

    #[test]
    fn shift_determinants() {
        assert_eq!(a_rsn(1, 1, 2).unwrap(), Poly::t().scale(&BigInt::from(-1)));
        assert_eq!(a_rsn(2, 1, 2).unwrap(), Poly::zero());
        assert_eq!(a_rsn(1, 2, 6).unwrap(), Poly::t().pow(2));
        assert!(a_rsn(0, 1, 2).is_err());
        assert_eq!(a_rsn_closed_form(1, 1, 2), Poly::t());
        assert_eq!(a_rsn_corrected_form(1, 1, 2), -Poly::t());
        assert_eq!(a_rsn_closed_form(1, 2, 6), Poly::t().pow(2));
    }

    #[test]
    fn witness_points() {
        let sl5 = inst(5, "1,4");
        let x = witness_point(&sl5).unwrap();
        let ones: Vec<Var> = x
            .iter()
            .filter(|(_, v)| v.is_one())
            .map(|(k, _)| *k)
            .collect();
        assert_eq!(
            ones,
            vec![Var::Coord(3, 1), Var::Coord(4, 2), Var::Coord(5, 3)]
        );
        let two = BsInstance::new(SimpleSubset::empty(2).unwrap()).unwrap();
        let x = witness_point(&two).unwrap();
        assert_eq!(x.get(&Var::Coord(2, 1)), Some(&BigInt::one()));
        assert!(witness_point(&inst(6, "1,3,5")).is_err());
    }

    #[test]
    fn witness_checks() {
        let r = check_irreducibility_witness(&inst(5, "1,4"));
        assert!(r.pass, "{}", r.to_text());
        assert!(r.detail.contains("f(x) = 1 (agrees with"));
        // Chains (2,1,1,2): one competitor window on the two 1-chains.
        let competing = BsInstance::from_lengths(vec![2, 1, 1, 2]).unwrap();
        assert_eq!(competitor_windows(&competing), vec![(2, 3)]);
        let r = check_irreducibility_witness(&competing);
        assert!(r.pass, "{}", r.to_text());
    }

    #[test]
    fn windowed_generators() {
        let sl5 = inst(5, "1,4");
        assert_eq!(
            general_generator(sl5.subset(), 1, 3).unwrap(),
            bs_element(&sl5).unwrap()
        );
        let ex = SimpleSubset::parse(10, "1,4,5,6,9").unwrap();
        // Window on chains 2..4 = {3}{4,5,6,7}{8}: a 1×1-end instance on [3,8].
        let g = general_generator(&ex, 2, 4).unwrap();
        let vars = g.variables();
        assert!(vars
            .iter()
            .all(|v| matches!(v, Var::Coord(r, s) if (3..=8).contains(r) && (3..=8).contains(s))));
        assert_eq!(g.degree(), Some(2));
        assert!(general_generator(&ex, 1, 3).is_err());
        assert!(general_generator(&SimpleSubset::parse(6, "1,3,5").unwrap(), 1, 3).is_err());
        assert!(check_general_generator(&sl5).pass);
    }
}
