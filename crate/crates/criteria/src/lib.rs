//! The acceptance criteria for `orbital-core`. Each criterion is a function
//! returning a one-line summary on success or the first counterexample on
//! failure; the `acceptance` test target runs them in order and prints one
//! line per criterion.

pub mod oracle;

use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orbital_core::bsgen::{
    a_rsn, a_rsn_closed_form, a_rsn_corrected_form, bs_element, bs_matrix, BsInstance,
};
use orbital_core::parabolic::{codim1_descendants, descendant, tableau_of, x_shape, SimpleSubset};
use orbital_core::quantize::{
    b_system, characteristic_factors, check_lemma44, check_prop42, gamma, solve_b, BSolution,
};
use orbital_core::suite::{instances_of_rank, run_instance, SuiteConfig};
use orbital_core::sympoly::{Poly, PolyMatrix};
use orbital_core::tableaux::{permutations, Tableau};

/// `Ok` carries a summary of what was checked, `Err` the first counterexample.
pub type Outcome = Result<String, String>;

fn admissible(max_n: usize) -> Vec<BsInstance> {
    (2..=max_n)
        .flat_map(|n| instances_of_rank(n).unwrap().0)
        .collect()
}

fn tab(s: &str) -> Tableau {
    s.parse().unwrap()
}

pub fn sl5_golden() -> Outcome {
    let inst = BsInstance::new(SimpleSubset::parse(5, "1,4").unwrap()).unwrap();
    let expected: Poly =
        "x[3,1]*x[4,2]*x[5,3] + x[3,2]*x[4,3]*x[5,1] - x[3,1]*x[4,3]*x[5,2] - x[3,2]*x[4,1]*x[5,3]"
            .parse()
            .unwrap();
    let f = bs_element(&inst).map_err(|e| e.to_string())?;
    if f != expected {
        return Err(format!("m_lI = {f}"));
    }
    if (inst.d_total(), inst.l_index()) != (0, 3) {
        return Err(format!("d_I={}, l_I={}", inst.d_total(), inst.l_index()));
    }
    Ok("4-term generator, d_I=0, l_I=3".into())
}

pub fn sl10_golden() -> Outcome {
    let i = SimpleSubset::parse(10, "1,4,5,6,9").unwrap();
    let chains = i.chains().to_string();
    if chains != "{1,2}{3}{4,5,6,7}{8}{9,10}" {
        return Err(format!("chains {chains}"));
    }
    if tableau_of(&i) != tab("1 3 4 8 9\n2 5 10\n6\n7") {
        return Err(format!("T_I =\n{}", tableau_of(&i)));
    }
    for (k, expected) in [
        (2, "1 4 8 9\n2 5 10\n3 6\n7"),
        (4, "1 3 4 9\n2 5 8 10\n6\n7"),
        (5, "1 3 4 8 9\n2 5\n6 10\n7"),
    ] {
        let got = descendant(&i, k)
            .map_err(|e| e.to_string())?
            .ok_or(format!("T_I({k}) undefined"))?;
        if got != tab(expected) {
            return Err(format!("T_I({k}) =\n{got}"));
        }
    }
    let found: Vec<usize> = codim1_descendants(&i).into_iter().map(|(k, _)| k).collect();
    if found != [4, 5] {
        return Err(format!("codimension-one descendants at {found:?}"));
    }
    Ok("tableau, descendants i=2,4,5 and codimension-one set {4,5} reproduced".into())
}

/// `A^n_{r,s}(t)` against the closed form `((−1)^{r+s} t^r)^h`.
pub fn shift_table() -> Outcome {
    let mut mismatches = Vec::new();
    let mut total = 0;
    for r in 1..=4 {
        for s in 1..=4 {
            for n in 1..=10 {
                total += 1;
                let det = a_rsn(r, s, n).map_err(|e| e.to_string())?;
                if det != a_rsn_closed_form(r, s, n) {
                    mismatches.push(format!("(r,s,n)=({r},{s},{n}): det={det}"));
                }
            }
        }
    }
    if mismatches.is_empty() {
        Ok(format!("{total}/{total} identities"))
    } else {
        Err(format!(
            "{}/{total} identities hold; {} differ, first {}",
            total - mismatches.len(),
            mismatches.len(),
            mismatches[0]
        ))
    }
}

pub fn bs_suite() -> Outcome {
    let config = SuiteConfig::new(7)
        .unwrap()
        .with_checks("vanishing,cofactors,poisson,weight,lowest_t,degree,witness,minor_gcd")
        .unwrap();
    let (mut reports, mut generic) = (0, 0);
    let instances = admissible(7);
    for inst in &instances {
        generic += usize::from(inst.is_generic());
        for r in run_instance(inst, &config) {
            reports += 1;
            if !r.pass {
                return Err(r.to_text());
            }
        }
    }
    Ok(format!(
        "{} instances ({generic} generic), {reports} checks",
        instances.len()
    ))
}

fn length_vectors(max_len: usize, max_entry: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (1..=max_entry).map(|c| vec![c]).collect();
    while let Some(v) = stack.pop() {
        if v.len() >= 2 && v[0] == v[v.len() - 1] {
            out.push(v.clone());
        }
        if v.len() < max_len {
            stack.extend((1..=max_entry).map(|c| [v.clone(), vec![c]].concat()));
        }
    }
    out
}

pub fn quantization_suite() -> Outcome {
    let vectors = length_vectors(6, 4);
    for lengths in &vectors {
        let interior_repeat = lengths[1..lengths.len() - 1].contains(&lengths[0]);
        let system = b_system(lengths).map_err(|e| e.to_string())?;
        match solve_b(lengths).map_err(|e| e.to_string())? {
            BSolution::Solution(b) if !interior_repeat && system.iter().all(|k| k.holds_at(&b)) => {
            }
            BSolution::Infeasible(cert) if interior_repeat && cert.verifies(&system) => {}
            other => return Err(format!("{lengths:?}: {other:?}")),
        }
    }
    let mut generic = 0;
    for inst in admissible(8).iter().filter(|i| i.is_generic()) {
        generic += 1;
        for r in [check_prop42(inst.subset()), check_lemma44(inst.subset())] {
            if !r.pass {
                return Err(r.to_text());
            }
        }
    }
    Ok(format!(
        "{} length vectors; {generic} generic instances",
        vectors.len()
    ))
}

pub fn bijection_suite() -> Outcome {
    let mut words = 0;
    for n in 1..=6 {
        for w in permutations(n) {
            words += 1;
            let q = w.rs_q();
            if w.tau() != q.tau() {
                return Err(format!("tau differs for {w}"));
            }
            if q.word_r().unwrap().rs_q() != q {
                return Err(format!("Q(w_r(Q(w))) != Q(w) for {w}"));
            }
            let x = x_shape(&w);
            for s in 1..=n {
                if x_shape(&w.delete(s).unwrap()) != x.delete(s as usize) {
                    return Err(format!("X(w - {s}) for w={w}"));
                }
            }
        }
        for t in Tableau::all_standard(n) {
            let k = t.rows().len() - 1;
            for (j, &e) in t.rows()[k].iter().enumerate() {
                if t.word_r().unwrap().delete(e).unwrap()
                    != t.remove_entry(k, j).unwrap().word_r().unwrap()
                {
                    return Err(format!("w_r(T) - {e} for T=\n{t}"));
                }
            }
        }
    }
    Ok(format!("{words} words"))
}

pub fn cross_module() -> Outcome {
    let instances = admissible(7);
    for inst in &instances {
        let n = inst.n();
        let g = gamma(n, inst.c()).map_err(|e| e.to_string())?;
        let wt = bs_element(inst).map_err(|e| e.to_string())?.weight(n);
        if wt != Some(-&g) {
            return Err(format!("I={}: weight {wt:?}, gamma {g}", inst.subset()));
        }
        let factors = characteristic_factors(inst.subset()).map_err(|e| e.to_string())?;
        if factors.first() != Some(&g) {
            return Err(format!(
                "I={}: first factor {:?}",
                inst.subset(),
                factors.first()
            ));
        }
    }
    Ok(format!("{} admissible instances", instances.len()))
}

fn subsets_of(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut with: Vec<Vec<usize>> = subsets_of(&items[1..], k - 1)
        .into_iter()
        .map(|rest| [vec![items[0]], rest].concat())
        .collect();
    with.extend(subsets_of(&items[1..], k));
    with
}

pub fn oracle_equivalence() -> Outcome {
    let mut compared = 0;
    for inst in admissible(7) {
        let m = bs_matrix(&inst).to_poly_matrix();
        let (rows, cols) = inst.minor_window();
        for k in 1..=rows.len().min(5) {
            for r in subsets_of(&rows, k) {
                for c in subsets_of(&cols, k) {
                    compared += 1;
                    if m.det(&r, &c).map_err(|e| e.to_string())? != oracle::leibniz_det(&m, &r, &c)
                    {
                        return Err(format!("I={} rows {r:?} cols {c:?}", inst.subset()));
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x0b5e);
    for case in 0..50 {
        let mut entries = Vec::with_capacity(16);
        for i in 1..=4 {
            for j in 1..=4 {
                let entry = if rng.gen_bool(0.45) {
                    Poly::zero()
                } else {
                    let a = Poly::x(i, j).scale(&rng.gen_range(-3i64..=3).into());
                    if rng.gen_bool(0.3) {
                        a + Poly::t().pow(rng.gen_range(1..=2))
                    } else {
                        a
                    }
                };
                entries.push(entry);
            }
        }
        let m = PolyMatrix::from_fn(4, 4, |i, j| entries[(i - 1) * 4 + j - 1].clone());
        let all = [1, 2, 3, 4];
        compared += 1;
        if m.det(&all, &all).map_err(|e| e.to_string())? != oracle::leibniz_det(&m, &all, &all) {
            return Err(format!("random sparse case {case}"));
        }
    }
    Ok(format!("{compared} determinants"))
}

/// `A^n_{r,s}(t)` against `((−1)^{rs} t^r)^h` on the same table as [`shift_table`].
pub fn corrected_shift_table() -> Outcome {
    for r in 1..=4 {
        for s in 1..=4 {
            for n in 1..=10 {
                let det = a_rsn(r, s, n).map_err(|e| e.to_string())?;
                if det != a_rsn_corrected_form(r, s, n) {
                    return Err(format!("(r,s,n)=({r},{s},{n}): det={det}"));
                }
            }
        }
    }
    Ok("160/160 identities".into())
}

pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub run: fn() -> Outcome,
    /// Wall-clock limit; exceeding it fails the criterion.
    pub budget: Duration,
}

pub fn criteria() -> Vec<Criterion> {
    let c = |id, name, run, secs| Criterion {
        id,
        name,
        run,
        budget: Duration::from_secs(secs),
    };
    vec![
        c(1, "sl5 golden generator", sl5_golden as fn() -> Outcome, 1),
        c(2, "sl10 golden tableaux", sl10_golden, 1),
        c(3, "shift determinant closed form", shift_table, 5),
        c(4, "generator verification suite, n<=7", bs_suite, 300),
        c(5, "quantization suite", quantization_suite, 60),
        c(6, "combinatorial bijections, n<=6", bijection_suite, 30),
        c(
            7,
            "weight and characteristic factors, n<=7",
            cross_module,
            60,
        ),
        c(8, "determinant oracle equivalence", oracle_equivalence, 120),
    ]
}
