//! Independent oracles.

use orbital_core::sympoly::{Poly, PolyMatrix};
use orbital_core::tableaux::permutations;

/// Determinant by the Leibniz formula: a sum over all permutations, with
/// the sign taken from the inversion count.
pub fn leibniz_det(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Poly {
    let k = rows.len();
    assert_eq!(k, cols.len());
    let mut total = Poly::zero();
    for w in permutations(k as u32) {
        let letters = w.letters();
        let mut inversions = 0;
        for a in 0..k {
            for b in a + 1..k {
                if letters[a] > letters[b] {
                    inversions += 1;
                }
            }
        }
        let mut term = Poly::one();
        for a in 0..k {
            term = &term * m.get(rows[a], cols[letters[a] as usize - 1]);
            if term.is_zero() {
                break;
            }
        }
        if inversions % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    total
}
