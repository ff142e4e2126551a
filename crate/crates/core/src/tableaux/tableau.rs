use std::collections::BTreeSet;
use std::fmt;

use super::{Partition, WordPerm};
use crate::{Error, Result};

/// A Young tableau with distinct positive entries.
///
/// Rows are stored top to bottom and each row is strictly increasing, as is
/// each column. A tableau is *standard* when its entries are exactly `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

/// Order in which entries outside a window are slid out by
/// [`Tableau::project_window_by`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RemovalOrder {
    Increasing,
    Decreasing,
}

impl Tableau {
    /// Validates and builds a tableau. Trailing empty rows are dropped.
    pub fn new(mut rows: Vec<Vec<u32>>) -> Result<Self> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let mut seen = BTreeSet::new();
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau(format!("row {} is empty", i + 1)));
            }
            if i > 0 && row.len() > rows[i - 1].len() {
                return Err(Error::InvalidTableau(format!(
                    "row {} is longer than the row above",
                    i + 1
                )));
            }
            for (j, &e) in row.iter().enumerate() {
                if e == 0 {
                    return Err(Error::InvalidTableau("entries must be positive".into()));
                }
                if !seen.insert(e) {
                    return Err(Error::DuplicateEntry(e));
                }
                if j > 0 && row[j - 1] >= e {
                    return Err(Error::InvalidTableau(format!(
                        "row {} is not increasing",
                        i + 1
                    )));
                }
                if i > 0 && rows[i - 1][j] >= e {
                    return Err(Error::InvalidTableau(format!(
                        "column {} is not increasing",
                        j + 1
                    )));
                }
            }
        }
        Ok(Tableau { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(Tableau::new(rows.clone()).is_ok(), "{rows:?}");
        Tableau { rows }
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    /// A single row `1 2 … n`.
    pub fn single_row(n: u32) -> Self {
        Tableau::from_rows_unchecked(if n == 0 {
            vec![]
        } else {
            vec![(1..=n).collect()]
        })
    }

    /// A single column `1 / 2 / … / n`.
    pub fn single_column(n: u32) -> Self {
        Tableau::from_rows_unchecked((1..=n).map(|e| vec![e]).collect())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Partition {
        Partition::from_parts(self.rows.iter().map(Vec::len).collect())
    }

    /// Entries in increasing order.
    pub fn entries(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    pub fn contains(&self, e: u32) -> bool {
        self.position(e).is_some()
    }

    pub fn is_standard(&self) -> bool {
        self.entries().into_iter().eq(1..=self.size() as u32)
    }

    /// Zero-based cell holding `e`.
    pub fn position(&self, e: u32) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(i, row)| row.binary_search(&e).ok().map(|j| (i, j)))
    }

    /// One-based row index of `e`, written `r_T(e)`.
    pub fn row_of(&self, e: u32) -> Option<usize> {
        self.position(e).map(|(i, _)| i + 1)
    }

    /// One-based column index of `e`, written `c_T(e)`.
    pub fn column_of(&self, e: u32) -> Option<usize> {
        self.position(e).map(|(_, j)| j + 1)
    }

    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    /// Columns top to bottom.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|j| self.rows.iter().map_while(|r| r.get(j).copied()).collect())
            .collect()
    }

    /// Hook length of a zero-based cell.
    pub fn hook(&self, row: usize, col: usize) -> Result<usize> {
        let len = self.rows.get(row).map_or(0, Vec::len);
        if col >= len {
            return Err(Error::CellOutOfRange { row, col });
        }
        let arm = len - col - 1;
        let leg = self.rows[row + 1..]
            .iter()
            .take_while(|r| r.len() > col)
            .count();
        Ok(1 + arm + leg)
    }

    /// Rotation about the main diagonal.
    pub fn conjugate(&self) -> Tableau {
        Tableau::from_rows_unchecked(self.columns())
    }

    /// Row insertion `T↓b`.
    pub fn insert(&self, b: u32) -> Result<Tableau> {
        if b == 0 {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        if self.contains(b) {
            return Err(Error::DuplicateEntry(b));
        }
        let mut rows = self.rows.clone();
        let mut bumped = b;
        for row in rows.iter_mut() {
            match row.iter().position(|&a| a > bumped) {
                Some(k) => std::mem::swap(&mut row[k], &mut bumped),
                None => {
                    row.push(bumped);
                    return Ok(Tableau { rows });
                }
            }
        }
        rows.push(vec![bumped]);
        Ok(Tableau { rows })
    }

    /// Deletes the entry in a zero-based cell by jeu de taquin: the hole
    /// repeatedly takes the smaller of its right and lower neighbours until
    /// it reaches a corner, which is then removed. Entries are not
    /// renumbered; see [`Tableau::standardize`].
    pub fn remove_entry(&self, row: usize, col: usize) -> Result<Tableau> {
        if self.get(row, col).is_none() {
            return Err(Error::CellOutOfRange { row, col });
        }
        let mut rows = self.rows.clone();
        let (mut i, mut j) = (row, col);
        loop {
            let right = rows[i].get(j + 1).copied();
            let below = rows.get(i + 1).and_then(|r| r.get(j)).copied();
            match (right, below) {
                (None, None) => {
                    rows[i].remove(j);
                    break;
                }
                (Some(r), Some(d)) if r < d => {
                    rows[i][j] = r;
                    j += 1;
                }
                (Some(r), None) => {
                    rows[i][j] = r;
                    j += 1;
                }
                (_, Some(d)) => {
                    rows[i][j] = d;
                    i += 1;
                }
            }
        }
        if rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        Ok(Tableau::from_rows_unchecked(rows))
    }

    /// Deletes the entry `e` by jeu de taquin.
    pub fn remove_value(&self, e: u32) -> Result<Tableau> {
        let (i, j) = self
            .position(e)
            .ok_or_else(|| Error::InvalidTableau(format!("{e} is not an entry")))?;
        self.remove_entry(i, j)
    }

    /// Renumbers entries order-preservingly onto `1..=size`.
    pub fn standardize(&self) -> Tableau {
        let sorted = self.entries();
        let rank = |e: u32| sorted.binary_search(&e).map(|k| k as u32 + 1).unwrap_or(0);
        Tableau::from_rows_unchecked(
            self.rows
                .iter()
                .map(|r| r.iter().map(|&e| rank(e)).collect())
                .collect(),
        )
    }

    /// The tableau map `π_{i,j}`: slide out every entry outside `[i, j]` in
    /// increasing order, then standardize.
    pub fn project_window(&self, i: u32, j: u32) -> Result<Tableau> {
        self.project_window_by(i, j, RemovalOrder::Increasing)
    }

    pub fn project_window_by(&self, i: u32, j: u32, order: RemovalOrder) -> Result<Tableau> {
        let n = self.size() as u32;
        if i < 1 || i > j || j > n {
            return Err(Error::OutOfRange(format!(
                "window [{i},{j}] on a tableau of size {n}"
            )));
        }
        let mut outside: Vec<u32> = self
            .entries()
            .into_iter()
            .filter(|e| *e < i || *e > j)
            .collect();
        if order == RemovalOrder::Decreasing {
            outside.reverse();
        }
        let mut t = self.clone();
        for e in outside {
            t = t.remove_value(e)?;
        }
        Ok(t.standardize())
    }

    /// Row-by-row union of two entry-disjoint tableaux, each row re-sorted.
    pub fn merge(&self, other: &Tableau) -> Result<Tableau> {
        let height = self.rows.len().max(other.rows.len());
        let rows = (0..height)
            .map(|i| {
                let mut row: Vec<u32> = self
                    .rows
                    .get(i)
                    .into_iter()
                    .chain(other.rows.get(i))
                    .flatten()
                    .copied()
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        Tableau::new(rows)
    }

    /// Builds the tableau whose rows are the depth classes of a list of
    /// increasing columns, i.e. row `r` collects the `r`-th entry of every
    /// column. Columns are interpreted as one-column tableaux and merged.
    pub fn from_columns(columns: &[Vec<u32>]) -> Result<Tableau> {
        columns.iter().try_fold(Tableau::empty(), |acc, col| {
            let column = Tableau::new(col.iter().map(|&e| vec![e]).collect())?;
            acc.merge(&column)
        })
    }

    /// `w_r(T)`: rows concatenated from the bottom row up.
    pub fn word_r(&self) -> Result<WordPerm> {
        WordPerm::standardized(
            self.standardize()
                .rows
                .iter()
                .rev()
                .flatten()
                .copied()
                .collect(),
        )
    }

    /// `w_c(T)`: columns read bottom to top, left to right.
    pub fn word_c(&self) -> Result<WordPerm> {
        let std = self.standardize();
        WordPerm::standardized(
            std.columns()
                .into_iter()
                .flat_map(|c| c.into_iter().rev())
                .collect(),
        )
    }

    /// `τ(T) = {s : r_T(s+1) > r_T(s)}`, read on the standardized tableau.
    pub fn tau(&self) -> BTreeSet<usize> {
        let std = self.standardize();
        let n = std.size() as u32;
        (1..n)
            .filter(|&s| std.row_of(s + 1) > std.row_of(s))
            .map(|s| s as usize)
            .collect()
    }

    /// All standard tableaux with `n` boxes.
    pub fn all_standard(n: u32) -> Vec<Tableau> {
        let mut level = vec![Tableau::empty()];
        for e in 1..=n {
            let mut next = Vec::new();
            for t in &level {
                for i in 0..=t.rows.len() {
                    let fits = i == 0 || t.rows[i - 1].len() > t.rows.get(i).map_or(0, Vec::len);
                    if fits {
                        let mut rows = t.rows.clone();
                        if i == rows.len() {
                            rows.push(Vec::new());
                        }
                        rows[i].push(e);
                        next.push(Tableau { rows });
                    }
                }
            }
            level = next;
        }
        level
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// Rows are separated by newlines or `/`; entries by whitespace or commas.
impl std::str::FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(['\n', '/'])
            .map(str::trim)
            .filter(|line| !line.is_empty())
            .map(|line| {
                line.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|tok| !tok.is_empty())
                    .map(|tok| {
                        tok.parse::<u32>()
                            .map_err(|e| Error::InvalidTableau(format!("{tok:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}
