use std::collections::HashMap;

use super::Poly;
use crate::{Error, Result};

/// One cell of a structured matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Entry {
    Zero,
    /// The parameter `t`, only ever placed on the diagonal.
    ParamOnDiag,
    /// The coordinate `x[i,j]` sitting at its own position `(i, j)`.
    Coord,
}

/// An `n × n` matrix whose `(i, j)` entry is `0`, `t` or `x[i,j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericMatrix {
    n: usize,
    entries: Vec<Entry>,
}

impl GenericMatrix {
    pub fn zeros(n: usize) -> Self {
        GenericMatrix {
            n,
            entries: vec![Entry::Zero; n * n],
        }
    }

    /// Builds a matrix from a rule on one-based positions.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Entry) -> Result<Self> {
        let mut m = GenericMatrix::zeros(n);
        for i in 1..=n {
            for j in 1..=n {
                m.set(i, j, f(i, j))?;
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Entry {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, e: Entry) -> Result<()> {
        for k in [i, j] {
            if k == 0 || k > self.n {
                return Err(Error::MatrixIndex {
                    index: k,
                    size: self.n,
                });
            }
        }
        if e == Entry::ParamOnDiag && i != j {
            return Err(Error::OutOfRange(format!(
                "t placed off the diagonal at ({i},{j})"
            )));
        }
        self.entries[(i - 1) * self.n + (j - 1)] = e;
        Ok(())
    }

    pub fn poly_at(&self, i: usize, j: usize) -> Poly {
        match self.get(i, j) {
            Entry::Zero => Poly::zero(),
            Entry::ParamOnDiag => Poly::t(),
            Entry::Coord => Poly::x(i, j),
        }
    }

    pub fn to_poly_matrix(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.n, self.n, |i, j| self.poly_at(i, j))
    }

    /// Determinant of the submatrix on the given one-based rows and columns.
    pub fn det(&self, rows: &[usize], cols: &[usize]) -> Result<Poly> {
        self.to_poly_matrix().det(rows, cols)
    }
}

/// A dense matrix of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Poly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(n: usize) -> Self {
        PolyMatrix::from_fn(n, n, |i, j| if i == j { Poly::one() } else { Poly::zero() })
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    /// The one-based entry `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(self.cols, other.rows));
        }
        Ok(PolyMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Poly::zero();
            for k in 1..=self.cols {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            acc
        }))
    }

    pub fn pow(&self, k: u32) -> Result<PolyMatrix> {
        if self.rows != self.cols {
            return Err(Error::SizeMismatch(self.rows, self.cols));
        }
        (0..k).try_fold(PolyMatrix::identity(self.rows), |acc, _| acc.mul(self))
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Determinant of the submatrix on the given one-based rows and columns,
    /// by cofactor expansion along the sparsest remaining line with minors
    /// memoized on the pair of remaining row and column sets.
    pub fn det(&self, rows: &[usize], cols: &[usize]) -> Result<Poly> {
        if rows.len() != cols.len() {
            return Err(Error::RaggedSelection {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        for &i in rows {
            if i == 0 || i > self.rows {
                return Err(Error::MatrixIndex {
                    index: i,
                    size: self.rows,
                });
            }
        }
        for &j in cols {
            if j == 0 || j > self.cols {
                return Err(Error::MatrixIndex {
                    index: j,
                    size: self.cols,
                });
            }
        }
        if rows.len() > 64 {
            return Err(Error::OutOfRange(
                "determinants are limited to 64×64 selections".into(),
            ));
        }
        let k = rows.len();
        let sub: Vec<&Poly> = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j)))
            .collect();
        // A repeated row or column index makes the determinant vanish.
        let distinct =
            |v: &[usize]| v.iter().collect::<std::collections::BTreeSet<_>>().len() == v.len();
        if !distinct(rows) || !distinct(cols) {
            return Ok(Poly::zero());
        }
        let mut ctx = DetContext {
            k,
            entries: sub,
            memo: HashMap::new(),
        };
        let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        Ok(ctx.minor(full, full))
    }
}

struct DetContext<'a> {
    k: usize,
    entries: Vec<&'a Poly>,
    memo: HashMap<(u64, u64), Poly>,
}

impl DetContext<'_> {
    fn at(&self, r: usize, c: usize) -> &Poly {
        self.entries[r * self.k + c]
    }

    fn minor(&mut self, rows: u64, cols: u64) -> Poly {
        if rows == 0 {
            return Poly::one();
        }
        if let Some(p) = self.memo.get(&(rows, cols)) {
            return p.clone();
        }
        let row_list = bits(rows);
        let col_list = bits(cols);
        // Pick the line with the fewest nonzero entries.
        let mut best: Option<(usize, bool, usize)> = None;
        for (pos, &r) in row_list.iter().enumerate() {
            let nz = col_list
                .iter()
                .filter(|&&c| !self.at(r, c).is_zero())
                .count();
            if best.is_none_or(|(b, _, _)| nz < b) {
                best = Some((nz, true, pos));
            }
        }
        for (pos, &c) in col_list.iter().enumerate() {
            let nz = row_list
                .iter()
                .filter(|&&r| !self.at(r, c).is_zero())
                .count();
            if best.is_none_or(|(b, _, _)| nz < b) {
                best = Some((nz, false, pos));
            }
        }
        let (nz, along_row, pos) = best.expect("selection is non-empty");
        let mut total = Poly::zero();
        if nz > 0 {
            let others = if along_row { &col_list } else { &row_list };
            for (other_pos, &other) in others.iter().enumerate() {
                let (r, c) = if along_row {
                    (row_list[pos], other)
                } else {
                    (other, col_list[pos])
                };
                let entry = self.at(r, c);
                if entry.is_zero() {
                    continue;
                }
                let entry = entry.clone();
                let sub = self.minor(rows & !(1 << r), cols & !(1 << c));
                if sub.is_zero() {
                    continue;
                }
                let term = &entry * &sub;
                if (pos + other_pos) % 2 == 0 {
                    total += &term;
                } else {
                    total -= &term;
                }
            }
        }
        self.memo.insert((rows, cols), total.clone());
        total
    }
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|b| mask >> b & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn sl5_example() -> GenericMatrix {
        // Chains {1,2}{3}{4,5}: coordinates below the diagonal that cross a chain boundary.
        let chain = |k: usize| match k {
            1 | 2 => 1,
            3 => 2,
            _ => 3,
        };
        GenericMatrix::from_fn(5, |i, j| {
            if i == j {
                Entry::ParamOnDiag
            } else if i > j && chain(i) != chain(j) {
                Entry::Coord
            } else {
                Entry::Zero
            }
        })
        .unwrap()
    }

    #[test]
    fn small_determinants() {
        let m = sl5_example();
        assert_eq!(m.det(&[3], &[1]).unwrap(), p("x[3,1]"));
        assert_eq!(m.det(&[1], &[2]).unwrap(), Poly::zero());
        assert_eq!(m.det(&[], &[]).unwrap(), Poly::one());
        assert_eq!(
            m.det(&[1, 2], &[1]),
            Err(Error::RaggedSelection { rows: 2, cols: 1 })
        );
        assert_eq!(
            m.det(&[6], &[1]),
            Err(Error::MatrixIndex { index: 6, size: 5 })
        );
    }

    #[test]
    fn sl5_minor() {
        let minor = sl5_example().det(&[3, 4, 5], &[1, 2, 3]).unwrap();
        let expected = p("x[3,1]*x[4,2]*x[5,3] - x[3,1]*x[4,3]*x[5,2] - x[3,2]*x[4,1]*x[5,3] + x[3,2]*x[4,3]*x[5,1] \
                          + t*x[4,1]*x[5,2] - t*x[4,2]*x[5,1]");
        assert_eq!(minor, expected);
    }

    #[test]
    fn zero_row_kills_the_determinant() {
        let m = GenericMatrix::from_fn(3, |i, _| if i == 2 { Entry::Zero } else { Entry::Coord })
            .unwrap();
        assert_eq!(m.det(&[1, 2, 3], &[1, 2, 3]).unwrap(), Poly::zero());
    }

    #[test]
    fn matrix_power() {
        let m = PolyMatrix::from_fn(2, 2, |i, j| {
            if i == 2 && j == 1 {
                Poly::x(2, 1)
            } else {
                Poly::zero()
            }
        });
        assert_eq!(
            m.pow(2).unwrap(),
            PolyMatrix::from_fn(2, 2, |_, _| Poly::zero())
        );
        assert_eq!(m.pow(0).unwrap(), PolyMatrix::identity(2));
    }
}
