use std::collections::BTreeSet;
use std::fmt;

use super::Tableau;
use crate::{Error, Result};

/// A permutation of `1..=n` in word form `[a_1, …, a_n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WordPerm(Vec<u32>);

impl WordPerm {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &a in &letters {
            let k = a as usize;
            if k == 0 || k > n {
                return Err(Error::InvalidWord(format!("letter {a} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[k], true) {
                return Err(Error::DuplicateEntry(a));
            }
        }
        Ok(WordPerm(letters))
    }

    /// Standardizes a sequence of distinct positive integers.
    pub fn standardized(letters: Vec<u32>) -> Result<Self> {
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEntry(w[0]));
        }
        Ok(WordPerm(
            letters
                .iter()
                .map(|a| sorted.binary_search(a).unwrap() as u32 + 1)
                .collect(),
        ))
    }

    pub fn identity(n: u32) -> Self {
        WordPerm((1..=n).collect())
    }

    /// The longest element `[n, n−1, …, 1]`.
    pub fn longest(n: u32) -> Self {
        WordPerm((1..=n).rev().collect())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w(i)`, one-based.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// `p_w(a)`: the one-based position of letter `a`.
    pub fn position_of(&self, a: u32) -> Option<usize> {
        self.0.iter().position(|&b| b == a).map(|p| p + 1)
    }

    pub fn inverse(&self) -> WordPerm {
        let mut inv = vec![0; self.0.len()];
        for (p, &a) in self.0.iter().enumerate() {
            inv[a as usize - 1] = p as u32 + 1;
        }
        WordPerm(inv)
    }

    /// The insertion tableau `Q(w)`, built as `(…(∅↓a_1)↓a_2…)↓a_n`.
    pub fn rs_q(&self) -> Tableau {
        self.0.iter().fold(Tableau::empty(), |t, &a| {
            t.insert(a).expect("letters of a permutation are distinct")
        })
    }

    /// Pairs `(i, j)`, `i < j`, with `i` written after `j`; these index the
    /// roots `α_{i,j}` in `S(w⁻¹)`.
    pub fn inversion_root_set(&self) -> BTreeSet<(usize, usize)> {
        let pos = self.inverse();
        let n = self.len();
        let mut out = BTreeSet::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if pos.0[i - 1] > pos.0[j - 1] {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    /// `τ(w)`: letters `s` such that `s + 1` is written before `s`.
    pub fn tau(&self) -> BTreeSet<usize> {
        let pos = self.inverse();
        (1..self.len())
            .filter(|&s| pos.0[s] < pos.0[s - 1])
            .collect()
    }

    /// `w − s`: erase the letter `s` and standardize.
    pub fn delete(&self, s: u32) -> Result<WordPerm> {
        if s == 0 || s as usize > self.len() {
            return Err(Error::InvalidWord(format!(
                "letter {s} outside 1..={}",
                self.len()
            )));
        }
        Ok(WordPerm(
            self.0
                .iter()
                .filter(|&&a| a != s)
                .map(|&a| if a > s { a - 1 } else { a })
                .collect(),
        ))
    }
}

impl fmt::Display for WordPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for WordPerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let body = s
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidWord(format!("{s:?} is not bracketed")))?;
        if body.trim().is_empty() {
            return Ok(WordPerm::default());
        }
        let letters = body
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::InvalidWord(format!("{tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        WordPerm::new(letters)
    }
}

/// Every permutation of `1..=n` in lexicographic order.
pub fn permutations(n: u32) -> impl Iterator<Item = WordPerm> {
    let mut next = Some((1..=n).collect::<Vec<u32>>());
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut w = cur.clone();
        if let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) {
            let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).unwrap();
            w.swap(i - 1, j);
            w[i..].reverse();
            next = Some(w);
        }
        Some(WordPerm(cur))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> WordPerm {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert!(WordPerm::new(vec![1, 3]).is_err());
        assert_eq!(WordPerm::new(vec![1, 1]), Err(Error::DuplicateEntry(1)));
        assert!("1,2".parse::<WordPerm>().is_err());
        assert_eq!(
            WordPerm::standardized(vec![7, 3, 10]).unwrap(),
            w("[2,1,3]")
        );
    }

    #[test]
    fn insertion_tableaux() {
        assert_eq!(w("[1,2,3]").rs_q(), Tableau::single_row(3));
        assert_eq!(w("[2,1]").rs_q(), Tableau::single_column(2));
        let expected: Tableau = "1 3 4 8 9\n2 5 10\n6\n7".parse().unwrap();
        assert_eq!(w("[7,6,2,5,10,1,3,4,8,9]").rs_q(), expected);
    }

    #[test]
    fn inversions() {
        assert!(WordPerm::identity(4).inversion_root_set().is_empty());
        assert_eq!(w("[2,1]").inversion_root_set(), BTreeSet::from([(1, 2)]));
        assert_eq!(
            w("[3,1,2]").inversion_root_set(),
            BTreeSet::from([(1, 3), (2, 3)])
        );
        assert_eq!(WordPerm::longest(4).inversion_root_set().len(), 6);
    }

    #[test]
    fn deletion() {
        assert_eq!(w("[3,1,4,2]").delete(1).unwrap(), w("[2,3,1]"));
        assert_eq!(w("[3,1,4,2]").delete(4).unwrap(), w("[3,1,2]"));
        assert!(w("[1]").delete(2).is_err());
    }

    #[test]
    fn enumerates_permutations() {
        let counts: Vec<usize> = (0..=6).map(|n| permutations(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 24, 120, 720]);
        let all: BTreeSet<WordPerm> = permutations(5).collect();
        assert_eq!(all.len(), 120);
    }

    #[test]
    fn inverse_round_trip() {
        for p in permutations(5) {
            assert_eq!(p.inverse().inverse(), p);
            for a in 1..=5 {
                assert_eq!(p.at(p.position_of(a).unwrap()), a);
            }
        }
    }

    // τ of a word equals τ of its insertion tableau.
    #[test]
    fn tau_is_constant_on_fibres() {
        for n in 0..=6 {
            for p in permutations(n) {
                assert_eq!(p.tau(), p.rs_q().tau(), "{p}");
            }
        }
    }

    #[test]
    fn words_of_tableaux_insert_back() {
        for n in 0..=6 {
            for t in Tableau::all_standard(n) {
                assert_eq!(t.word_r().unwrap().rs_q(), t);
                assert_eq!(t.word_c().unwrap().rs_q(), t);
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let p = w("[7,6,2,5,10,1,3,4,8,9]");
        assert_eq!(p.to_string().parse::<WordPerm>().unwrap(), p);
        assert_eq!(w("[]"), WordPerm::default());
    }
}
