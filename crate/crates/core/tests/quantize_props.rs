use num_bigint::BigInt;
use num_rational::BigRational;
use orbital_core::bsgen::{bs_element, BsInstance};
use orbital_core::parabolic::SimpleSubset;
use orbital_core::quantize::{
    b_system, build_mu, check_characteristic_factors, check_lemma44, check_prop42, fourier_motzkin,
    gamma, solve_b, BSolution,
};

fn length_vectors(max_len: usize, max_entry: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (1..=max_entry).map(|c| vec![c]).collect();
    while let Some(v) = frontier.pop() {
        if v.len() >= 2 && v[0] == v[v.len() - 1] {
            out.push(v.clone());
        }
        if v.len() < max_len {
            for c in 1..=max_entry {
                let mut w = v.clone();
                w.push(c);
                frontier.push(w);
            }
        }
    }
    out
}

fn admissible(n: usize) -> impl Iterator<Item = BsInstance> {
    (0u64..1 << (n - 1))
        .filter_map(move |mask| BsInstance::new(SimpleSubset::from_bitmask(n, mask).unwrap()).ok())
}

#[test]
fn b_system_is_solvable_exactly_when_no_interior_chain_repeats_the_end() {
    let mut solved = 0;
    let mut refuted = 0;
    for lengths in length_vectors(6, 4) {
        let c = lengths[0];
        let interior_repeat = lengths[1..lengths.len() - 1].contains(&c);
        let system = b_system(&lengths).unwrap();
        match solve_b(&lengths).unwrap() {
            BSolution::Solution(b) => {
                assert!(!interior_repeat, "{lengths:?}");
                assert!(b.iter().all(|&x| x >= 0), "{lengths:?}: {b:?} not natural");
                assert!(system.iter().all(|k| k.holds_at(&b)), "{lengths:?}: {b:?}");
                assert!(
                    fourier_motzkin(&system).is_none(),
                    "{lengths:?} refuted despite a solution"
                );
                solved += 1;
            }
            BSolution::Infeasible(cert) => {
                assert!(interior_repeat, "{lengths:?}");
                assert!(cert.verifies(&system), "{lengths:?}");
                refuted += 1;
            }
        }
    }
    assert!(
        solved > 100 && refuted > 100,
        "{solved} solved, {refuted} refuted"
    );
}

#[test]
fn weight_pairs_to_c_on_the_highest_root() {
    for n in 2..=8 {
        for inst in admissible(n).filter(BsInstance::is_generic) {
            let v = build_mu(inst.subset()).unwrap();
            assert_eq!(
                v.pair(1, n),
                BigRational::from_integer(BigInt::from(inst.c())),
                "{:?}",
                inst.subset()
            );
            assert_eq!(
                v.coords()[n - 1],
                BigRational::from_integer(BigInt::from(0))
            );
        }
    }
}

#[test]
fn index_set_checks_hold_up_to_eight() {
    let mut count = 0;
    for n in 2..=8 {
        for inst in admissible(n).filter(BsInstance::is_generic) {
            for r in [check_prop42(inst.subset()), check_lemma44(inst.subset())] {
                assert!(r.pass, "{}", r.to_text());
            }
            count += 1;
        }
    }
    assert!(count > 20);
}

#[test]
fn characteristic_factors_match_the_generator_weight() {
    for n in 2..=7 {
        for inst in admissible(n) {
            let wt = bs_element(&inst).unwrap().weight(n).unwrap();
            assert_eq!(-&wt, gamma(n, inst.c()).unwrap(), "{:?}", inst.subset());
            let r = check_characteristic_factors(inst.subset());
            assert!(r.pass, "{}", r.to_text());
        }
    }
}

#[test]
fn gamma_is_orthogonal_to_the_levi_roots() {
    for n in 2..=10 {
        for c in 1..=n / 2 {
            let g = gamma(n, c).unwrap();
            for k in (1..n).filter(|&k| k != c && k != n - c) {
                assert_eq!(g.pair_root(k, k + 1), 0, "n={n}, c={c}, a{k}");
            }
        }
        for mask in 0u64..1 << (n - 1) {
            let subset = SimpleSubset::from_bitmask(n, mask).unwrap();
            let Ok(inst) = BsInstance::new(subset.clone()) else {
                continue;
            };
            let g = gamma(n, inst.c()).unwrap();
            assert!(
                subset.members().iter().all(|&a| g.pair_root(a, a + 1) == 0),
                "{subset:?}"
            );
        }
    }
}
