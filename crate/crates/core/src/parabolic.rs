//! Subsets of simple roots, their chain forms, Richardson tableaux `T_I`,
//! longest-element words `w_I`, descendants `T_I(i)` and coordinate shapes
//! `X(w)`.
//!
//! Chain indices are one-based throughout, matching `C_1, …, C_l`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;

use crate::tableaux::{Tableau, WordPerm};
use crate::{Error, Result};

/// A subset `I` of the simple roots `α_1, …, α_{n−1}` of `sl_n`, stored as
/// the set of indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleSubset {
    n: usize,
    members: BTreeSet<usize>,
}

impl SimpleSubset {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSubset(
                "rank parameter n must be positive".into(),
            ));
        }
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&s| s == 0 || s >= n) {
            return Err(Error::InvalidSubset(format!(
                "α_{bad} is not a simple root of sl_{n}"
            )));
        }
        Ok(SimpleSubset { n, members })
    }

    /// Bit `s−1` of `mask` selects `α_s`.
    pub fn from_bitmask(n: usize, mask: u64) -> Result<Self> {
        if n > 1 && n - 1 < 64 && mask >> (n - 1) != 0 {
            return Err(Error::InvalidSubset(format!(
                "mask {mask:#b} has bits beyond α_{}",
                n - 1
            )));
        }
        SimpleSubset::new(n, (1..n).filter(|s| mask >> (s - 1) & 1 == 1))
    }

    /// Parses a comma-separated list of simple-root indices such as
    /// `"1,4,5,6,9"`. An empty string is the empty subset.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let members = text
            .split(',')
            .map(str::trim)
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|e| Error::InvalidSubset(format!("{tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SimpleSubset::new(n, members)
    }

    pub fn empty(n: usize) -> Result<Self> {
        SimpleSubset::new(n, [])
    }

    pub fn full(n: usize) -> Result<Self> {
        SimpleSubset::new(n, 1..n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn contains(&self, s: usize) -> bool {
        self.members.contains(&s)
    }

    pub fn chains(&self) -> ChainForm {
        let mut lengths = Vec::new();
        let mut len = 1;
        for s in 1..self.n {
            if self.contains(s) {
                len += 1;
            } else {
                lengths.push(len);
                len = 1;
            }
        }
        lengths.push(len);
        ChainForm::from_lengths(lengths).expect("chain lengths are positive")
    }

    /// Whether `(i, j)`, one-based matrix indices, lie in one chain.
    pub fn same_chain(&self, i: usize, j: usize) -> bool {
        let (a, b) = (i.min(j), i.max(j));
        (a..b).all(|s| self.contains(s))
    }

    /// The positive roots `α_{i,j}` of the Levi factor, i.e. `i < j` in one chain.
    pub fn levi_positive_roots(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for chain in self.chains().iter() {
            for i in chain.clone() {
                for j in i + 1..=*chain.end() {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl fmt::Display for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The partition of `{1, …, n}` into consecutive intervals `C_1, …, C_l`
/// cut after every `s` with `α_s ∉ I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainForm {
    lengths: Vec<usize>,
}

impl ChainForm {
    pub fn from_lengths(lengths: Vec<usize>) -> Result<Self> {
        if lengths.is_empty() || lengths.contains(&0) {
            return Err(Error::InvalidSubset(format!(
                "chain lengths {lengths:?} must be positive"
            )));
        }
        Ok(ChainForm { lengths })
    }

    /// Number of chains `l`.
    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn n(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// `c_1, …, c_l`.
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// `c_i`, one-based.
    pub fn length(&self, i: usize) -> Result<usize> {
        self.check_index(i)?;
        Ok(self.lengths[i - 1])
    }

    /// `C_i`, one-based.
    pub fn chain(&self, i: usize) -> Result<RangeInclusive<usize>> {
        self.check_index(i)?;
        let start: usize = self.lengths[..i - 1].iter().sum::<usize>() + 1;
        Ok(start..=start + self.lengths[i - 1] - 1)
    }

    /// `ς_i = max C_i`.
    pub fn top(&self, i: usize) -> Result<usize> {
        Ok(*self.chain(i)?.end())
    }

    pub fn iter(&self) -> impl Iterator<Item = RangeInclusive<usize>> + '_ {
        (1..=self.len()).map(|i| self.chain(i).unwrap())
    }

    /// Index of the chain holding `s`.
    pub fn chain_of(&self, s: usize) -> Option<usize> {
        self.iter().position(|c| c.contains(&s)).map(|k| k + 1)
    }

    pub fn to_subset(&self) -> SimpleSubset {
        let tops: BTreeSet<usize> = (1..self.len()).map(|i| self.top(i).unwrap()).collect();
        SimpleSubset::new(self.n(), (1..self.n()).filter(|s| !tops.contains(s))).unwrap()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.len() {
            return Err(Error::ChainIndexOutOfRange {
                index: i,
                chains: self.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for ChainForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for chain in self.iter() {
            let parts: Vec<String> = chain.map(|s| s.to_string()).collect();
            write!(f, "{{{}}}", parts.join(","))?;
        }
        Ok(())
    }
}

pub fn chains_of(subset: &SimpleSubset) -> ChainForm {
    subset.chains()
}

/// `T_I`: the entry `s` sits in the row given by its depth in its chain.
pub fn tableau_of(subset: &SimpleSubset) -> Tableau {
    let columns: Vec<Vec<u32>> = subset
        .chains()
        .iter()
        .map(|c| c.map(|s| s as u32).collect())
        .collect();
    Tableau::from_columns(&columns).expect("chains are disjoint increasing columns")
}

/// `w_I = [Ĉ_1, …, Ĉ_l]`, the chains reversed and concatenated.
pub fn word_of(subset: &SimpleSubset) -> WordPerm {
    let letters = subset
        .chains()
        .iter()
        .flat_map(|c| c.rev().map(|s| s as u32))
        .collect();
    WordPerm::new(letters).expect("chains partition 1..=n")
}

/// The index `i′ < i` receiving `ς_i`: among earlier chains at least as
/// long as `C_i`, the shortest, and among those the last one.
pub fn descendant_parent(subset: &SimpleSubset, i: usize) -> Result<Option<usize>> {
    let chains = subset.chains();
    check_descendant_index(&chains, i)?;
    let ci = chains.lengths[i - 1];
    Ok((1..i)
        .filter(|&j| chains.lengths[j - 1] >= ci)
        .min_by_key(|&j| (chains.lengths[j - 1], std::cmp::Reverse(j))))
}

/// `T_I(i)`: move `ς_i` from the bottom of `C_i` to the bottom of `C_{i′}`.
/// Returns `None` when no earlier chain is long enough.
pub fn descendant(subset: &SimpleSubset, i: usize) -> Result<Option<Tableau>> {
    let Some(parent) = descendant_parent(subset, i)? else {
        return Ok(None);
    };
    let chains = subset.chains();
    let mut columns: Vec<Vec<u32>> = chains
        .iter()
        .map(|c| c.map(|s| s as u32).collect())
        .collect();
    let moved = columns[i - 1].pop().expect("chains are non-empty");
    columns[parent - 1].push(moved);
    columns.retain(|c| !c.is_empty());
    Tableau::from_columns(&columns).map(Some)
}

/// Codimension of `V_{T_I(i)}` in `m_I`, computed from orbit dimensions as
/// `½ dim O_{sh T_I} − ½ dim O_{sh T_I(i)}`.
pub fn descendant_codim(subset: &SimpleSubset, i: usize) -> Result<usize> {
    let desc = descendant(subset, i)?.ok_or(Error::UndefinedDescendant(i))?;
    let top = tableau_of(subset).shape().orbit_dimension();
    let low = desc.shape().orbit_dimension();
    Ok((top - low) / 2)
}

/// All `(i, T_I(i))` with `c_{i′} = c_i`, i.e. the descendants of
/// codimension one.
pub fn codim1_descendants(subset: &SimpleSubset) -> Vec<(usize, Tableau)> {
    let chains = subset.chains();
    (2..=chains.len())
        .filter_map(|i| {
            let parent = descendant_parent(subset, i).ok()??;
            if chains.lengths[parent - 1] != chains.lengths[i - 1] {
                return None;
            }
            Some((i, descendant(subset, i).ok()??))
        })
        .collect()
}

/// The subset `I′` of rank `n − 1` with `w_I − s = w_{I′}`: delete `s` from
/// its chain and renumber.
pub fn subset_delete(subset: &SimpleSubset, s: usize) -> Result<SimpleSubset> {
    let n = subset.n();
    if s == 0 || s > n {
        return Err(Error::OutOfRange(format!("cannot delete {s} from 1..={n}")));
    }
    if n == 1 {
        return Err(Error::OutOfRange("cannot delete from sl_1".into()));
    }
    let chains = subset.chains();
    let k = chains.chain_of(s).expect("s lies in some chain");
    let mut lengths = chains.lengths.clone();
    lengths[k - 1] -= 1;
    lengths.retain(|&c| c > 0);
    Ok(ChainForm::from_lengths(lengths)?.to_subset())
}

fn check_descendant_index(chains: &ChainForm, i: usize) -> Result<()> {
    if i < 2 || i > chains.len() {
        return Err(Error::ChainIndexOutOfRange {
            index: i,
            chains: chains.len(),
        });
    }
    Ok(())
}

/// A set of matrix positions `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XShape {
    n: usize,
    positions: BTreeSet<(usize, usize)>,
}

impl XShape {
    pub fn new(n: usize, positions: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let positions: BTreeSet<(usize, usize)> = positions.into_iter().collect();
        if let Some(&(i, j)) = positions.iter().find(|&&(i, j)| i == 0 || i >= j || j > n) {
            return Err(Error::OutOfRange(format!(
                "({i},{j}) is not an upper position of an {n}×{n} matrix"
            )));
        }
        Ok(XShape { n, positions })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn positions(&self) -> &BTreeSet<(usize, usize)> {
        &self.positions
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.positions.contains(&(i, j))
    }

    /// `X^{s,s}`: drop row and column `s`, renumbering later indices.
    pub fn delete(&self, s: usize) -> XShape {
        let shift = |k: usize| if k > s { k - 1 } else { k };
        XShape {
            n: self.n - 1,
            positions: self
                .positions
                .iter()
                .filter(|&&(i, j)| i != s && j != s)
                .map(|&(i, j)| (shift(i), shift(j)))
                .collect(),
        }
    }
}

/// `X(w)`: positions `(i, j)`, `i < j`, with `i` written before `j` in `w`.
/// This is the shape of `n ∩ ʷn`, the complement of the inversion set.
pub fn x_shape(w: &WordPerm) -> XShape {
    let n = w.len();
    let inversions = w.inversion_root_set();
    let positions = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .filter(|p| !inversions.contains(p));
    XShape::new(n, positions).expect("pairs are ordered and in range")
}
