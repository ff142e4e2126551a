use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{bs_element, parabolic_matrix, BsInstance};
use crate::report::CheckReport;
use crate::sympoly::{Poly, Var};
use crate::Result;

const P: u64 = (1 << 31) - 1;
const ATTEMPTS: usize = 8;

fn reduce(c: &BigInt) -> u64 {
    let r = c % BigInt::from(P);
    let r = if r.sign() == num_bigint::Sign::Minus {
        r + BigInt::from(P)
    } else {
        r
    };
    r.to_u64().expect("residue fits")
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, P - 2)
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Monic gcd of two dense univariate polynomials over `F_p`, coefficients
/// in increasing degree.
fn gcd_mod(a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let lead_inv = inv_mod(*b.last().unwrap());
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let factor = a.last().unwrap() * lead_inv % P;
            for (k, &bk) in b.iter().enumerate() {
                a[k + shift] = (a[k + shift] + P - factor * bk % P) % P;
            }
            a = trim(a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&lead) = a.last() {
        let inv = inv_mod(lead);
        a.iter_mut().for_each(|c| *c = *c * inv % P);
    }
    a
}

/// Specializes every variable other than `v` to its value in `point`,
/// returning the coefficients in `v` modulo `p`.
fn specialize(q: &Poly, v: Var, point: &BTreeMap<Var, u64>) -> Vec<u64> {
    let mut out = vec![0u64; q.degree_in(v) as usize + 1];
    for (m, c) in q.terms() {
        let mut acc = reduce(c);
        let mut k = 0;
        for &(var, e) in m.factors() {
            if var == v {
                k = e as usize;
            } else {
                acc = acc * pow_mod(point[&var], u64::from(e)) % P;
            }
        }
        out[k] = (out[k] + acc) % P;
    }
    out
}

/// Whether some specialization proves that no common factor of the
/// quotients involves `v`: one quotient keeps its `v`-degree and the
/// specialized gcd is `1`.
fn certify_variable(quotients: &[Poly], v: Var, vars: &[Var], rng: &mut ChaCha8Rng) -> bool {
    let involved: Vec<&Poly> = quotients.iter().filter(|q| q.degree_in(v) > 0).collect();
    if involved.len() < quotients.len() {
        // A quotient free of `v` rules out every factor involving `v`.
        return true;
    }
    for _ in 0..ATTEMPTS {
        let point: BTreeMap<Var, u64> = vars.iter().map(|&w| (w, rng.gen_range(1..P))).collect();
        let specs: Vec<Vec<u64>> = involved.iter().map(|q| specialize(q, v, &point)).collect();
        let keeps_degree = specs.iter().zip(&involved).any(|(s, q)| {
            s.last().copied().unwrap_or(0) != 0 && s.len() == q.degree_in(v) as usize + 1
        });
        if !keeps_degree {
            continue;
        }
        let g = specs.into_iter().reduce(gcd_mod).unwrap_or_default();
        if g.len() == 1 {
            return true;
        }
    }
    false
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(
        items: &[usize],
        k: usize,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for idx in start..items.len() {
            if items.len() - idx < k - current.len() {
                break;
            }
            current.push(items[idx]);
            go(items, k, idx + 1, current, out);
            current.pop();
        }
    }
    go(items, k, 0, &mut current, &mut out);
    out
}

/// The generator is the greatest common divisor of the non-vanishing
/// `(s+c) × (s+c)` minors of `M_I^{r+1}`. Divisibility of every minor is
/// checked exactly. Coprimality of the quotients is certified one variable
/// at a time by a random specialization modulo `2^31 − 1`; if no
/// specialization succeeds within a few attempts the result is reported as
/// inconclusive and does not fail the check.
pub fn check_minor_gcd(inst: &BsInstance, seed: u64) -> CheckReport {
    let name = "minor_gcd";
    let outcome = (|| -> Result<(bool, String)> {
        let f = bs_element(inst)?;
        let n = inst.n();
        let k = inst.s() + inst.c();
        let power = parabolic_matrix(inst.subset(), false)
            .to_poly_matrix()
            .pow(inst.r() as u32 + 1)?;
        let live_rows: Vec<usize> = (1..=n)
            .filter(|&i| (1..=n).any(|j| !power.get(i, j).is_zero()))
            .collect();
        let live_cols: Vec<usize> = (1..=n)
            .filter(|&j| (1..=n).any(|i| !power.get(i, j).is_zero()))
            .collect();
        let mut quotients = Vec::new();
        for rows in combinations(&live_rows, k) {
            for cols in combinations(&live_cols, k) {
                let minor = power.det(&rows, &cols)?;
                if minor.is_zero() {
                    continue;
                }
                match minor.exact_div(&f)? {
                    Some(q) => quotients.push(q),
                    None => {
                        return Ok((
                            false,
                            format!("f does not divide the minor on rows {rows:?}, cols {cols:?}"),
                        ))
                    }
                }
            }
        }
        if quotients.is_empty() {
            return Ok((
                false,
                format!("every {k}×{k} minor of M_I^{} vanishes", inst.r() + 1),
            ));
        }
        let mut vars: Vec<Var> = quotients.iter().flat_map(|q| q.variables()).collect();
        vars.sort_unstable();
        vars.dedup();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let open: Vec<String> = vars
            .iter()
            .filter(|&&v| !certify_variable(&quotients, v, &vars, &mut rng))
            .map(|v| v.to_string())
            .collect();
        let count = quotients.len();
        if open.is_empty() {
            Ok((
                true,
                format!(
                    "f divides {count} nonzero {k}×{k} minors; gcd of quotients certified trivial"
                ),
            ))
        } else {
            Ok((
                true,
                format!(
                    "f divides {count} nonzero {k}×{k} minors; completeness inconclusive in {}",
                    open.join(",")
                ),
            ))
        }
    })();
    match outcome {
        Ok((pass, detail)) => CheckReport::new(name, inst.subset(), pass, detail),
        Err(e) => CheckReport::fail(name, inst.subset(), format!("error: {e}")),
    }
}
