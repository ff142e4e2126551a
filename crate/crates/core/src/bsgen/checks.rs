use std::collections::BTreeMap;

use super::{bs_element, bs_matrix, bs_minor, BsInstance};
use crate::parabolic::{
    codim1_descendants, descendant, descendant_codim, descendant_parent, x_shape, SimpleSubset,
};
use crate::report::CheckReport;
use crate::sympoly::{poisson, reduce_mod_parabolic, Entry, Poly, Var};
use crate::Result;

fn report(name: &str, subset: &SimpleSubset, outcome: Result<(bool, String)>) -> CheckReport {
    match outcome {
        Ok((pass, detail)) => CheckReport::new(name, subset, pass, detail),
        Err(e) => CheckReport::fail(name, subset, format!("error: {e}")),
    }
}

/// Codimension-one descendants: each `T_I(i)` with `c_{i′} = c_i` has
/// codimension one, no other descendant does, and for each length `c` there
/// are `♯{i : c_i = c} − 1` of them.
pub fn check_descendants(subset: &SimpleSubset) -> CheckReport {
    let outcome = (|| {
        let chains = subset.chains();
        let lengths = chains.lengths();
        let found = codim1_descendants(subset);
        for i in 2..=chains.len() {
            let Some(parent) = descendant_parent(subset, i)? else {
                continue;
            };
            let expected = lengths[parent - 1].abs_diff(lengths[i - 1]) + 1;
            let codim = descendant_codim(subset, i)?;
            if codim != expected {
                return Ok((
                    false,
                    format!("T_I({i}) has codimension {codim}, expected {expected}"),
                ));
            }
            let listed = found.iter().any(|(k, _)| *k == i);
            if listed != (codim == 1) || descendant(subset, i)?.is_none() {
                return Ok((false, format!("T_I({i}) misclassified")));
            }
        }
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &c in lengths {
            *counts.entry(c).or_default() += 1;
        }
        for (&c, &count) in &counts {
            let got = found.iter().filter(|(k, _)| lengths[k - 1] == c).count();
            if got != count - 1 {
                return Ok((
                    false,
                    format!(
                        "length {c}: {got} codimension-one descendants, expected {}",
                        count - 1
                    ),
                ));
            }
        }
        let indices: Vec<String> = found.iter().map(|(k, _)| k.to_string()).collect();
        Ok((
            true,
            format!("codimension-one descendants at i={{{}}}", indices.join(",")),
        ))
    })();
    report("descendants", subset, outcome)
}

/// The minor vanishes identically once every coordinate outside `X(w)` is
/// set to zero, where `w = w_r(T_I(l))`.
pub fn check_vanishing(inst: &BsInstance) -> CheckReport {
    let outcome = (|| {
        let desc = descendant(inst.subset(), inst.l())?.expect("c_1 = c_l makes T_I(l) defined");
        let w = desc.word_r()?;
        let shape = x_shape(&w);
        let restricted = bs_minor(inst)?.kill_vars(|v| match v {
            Var::Coord(r, s) => !shape.contains(s, r),
            Var::Param => false,
        });
        if restricted.is_zero() {
            Ok((true, format!("w={w}: minor vanishes on X(w)")))
        } else {
            Ok((false, format!("w={w}: restricted minor is {restricted}")))
        }
    })();
    report("vanishing", inst.subset(), outcome)
}

/// Every cofactor of the minor at a coordinate entry is divisible by `t^{d_I}`.
pub fn check_cofactors(inst: &BsInstance) -> CheckReport {
    let outcome = (|| {
        let d = inst.d_total() as u32;
        if d == 0 {
            return Ok((true, "d_I=0, nothing to check".to_string()));
        }
        let generic = bs_matrix(inst);
        let m = generic.to_poly_matrix();
        let (rows, cols) = inst.minor_window();
        let mut checked = 0;
        for (a, &row) in rows.iter().enumerate() {
            for (b, &col) in cols.iter().enumerate() {
                if generic.get(row, col) != Entry::Coord {
                    continue;
                }
                let sub_rows: Vec<usize> = rows
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != a)
                    .map(|(_, &r)| r)
                    .collect();
                let sub_cols: Vec<usize> = cols
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != b)
                    .map(|(_, &c)| c)
                    .collect();
                let cof = m.det(&sub_rows, &sub_cols)?;
                checked += 1;
                if cof.is_zero() {
                    continue;
                }
                let (k, _) = cof.lowest_t()?;
                if k < d {
                    return Ok((
                        false,
                        format!("cofactor at x[{row},{col}] has lowest t-power {k} < d_I={d}"),
                    ));
                }
            }
        }
        Ok((true, format!("{checked} cofactors divisible by t^{d}")))
    })();
    report("cofactors", inst.subset(), outcome)
}

/// `{x[i,i+1], f}` for every `i`, and `{x[i+1,i], f}` for `α_i ∈ I`, lie in
/// `S(m_I⁻)f + S(g)p_I`: after setting the `p_I` coordinates to zero the
/// bracket is an exact multiple of `f`.
pub fn check_poisson(inst: &BsInstance) -> CheckReport {
    let outcome = (|| {
        let f = bs_element(inst)?;
        let n = inst.n();
        let mut generators: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        generators.extend(inst.subset().members().iter().map(|&i| (i + 1, i)));
        let mut nonzero = 0;
        for (i, j) in generators {
            let reduced = reduce_mod_parabolic(&poisson(&Poly::x(i, j), &f), inst.subset());
            if reduced.is_zero() {
                continue;
            }
            nonzero += 1;
            if reduced.exact_div(&f)?.is_none() {
                return Ok((
                    false,
                    format!("{{x[{i},{j}], f}} reduces to {reduced}, not a multiple of f"),
                ));
            }
        }
        Ok((
            true,
            format!("all brackets in S(m⁻)f + S(g)p ({nonzero} nonzero after reduction)"),
        ))
    })();
    report("poisson", inst.subset(), outcome)
}

/// The generator is weight-homogeneous of weight `−γ_c`, as is every
/// `t`-coefficient of the minor.
pub fn check_weight(inst: &BsInstance) -> CheckReport {
    let outcome = (|| {
        let minor = bs_minor(inst)?;
        let target = -&inst.gamma();
        for k in 0..=minor.degree_in(Var::Param) {
            let m = minor.t_coefficient(k);
            if m.is_zero() {
                continue;
            }
            match m.weight(inst.n()) {
                Some(w) if w == target => {}
                Some(w) => {
                    return Ok((
                        false,
                        format!("coefficient of t^{k} has weight {w}, expected {target}"),
                    ))
                }
                None => {
                    return Ok((
                        false,
                        format!("coefficient of t^{k} is not weight-homogeneous"),
                    ))
                }
            }
        }
        Ok((true, format!("weight {target}")))
    })();
    report("weight", inst.subset(), outcome)
}

/// The lowest power of `t` in the minor is `t^{d_I}`.
pub fn check_lowest_t(inst: &BsInstance) -> CheckReport {
    let outcome = (|| {
        let (k, _) = bs_minor(inst)?.lowest_t()?;
        let d = inst.d_total() as u32;
        Ok((k == d, format!("lowest t-power {k}, d_I={d}")))
    })();
    report("lowest_t", inst.subset(), outcome)
}

/// `deg m_{l_I} = (r+1)c + s`, and the generator is homogeneous of that degree.
pub fn check_degree(inst: &BsInstance) -> CheckReport {
    let outcome = (|| {
        let f = bs_element(inst)?;
        let deg = f.degree().unwrap_or(0) as usize;
        let expected = inst.expected_degree();
        let pass = deg == expected && f.is_homogeneous();
        Ok((
            pass,
            format!(
                "degree {deg}, (r+1)c+s = ({}+1)·{}+{} = {expected}",
                inst.r(),
                inst.c(),
                inst.s()
            ),
        ))
    })();
    report("degree", inst.subset(), outcome)
}

/// The generator is multilinear in the coordinates.
pub fn check_multilinear(inst: &BsInstance) -> CheckReport {
    let outcome = (|| {
        let f = bs_element(inst)?;
        Ok((f.is_multilinear(), format!("{} terms", f.num_terms())))
    })();
    report("multilinear", inst.subset(), outcome)
}
