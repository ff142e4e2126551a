use std::fmt;

use crate::{Error, Result};

/// A partition `λ_1 ≥ λ_2 ≥ … > 0`, read as the Jordan type of a nilpotent
/// matrix or as the row lengths of a Young diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The integer `n` being partitioned.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ*_i = #{j | λ_j ≥ i}`.
    pub fn dual(&self) -> Partition {
        let longest = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=longest)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count())
                .collect(),
        )
    }

    /// Rank of the `i`-th power of a nilpotent of Jordan type `λ`, namely
    /// `n − Σ_{j≤i} λ*_j`. Powers beyond `λ_1` vanish, giving 0.
    pub fn rank_power(&self, i: usize) -> usize {
        let dual = self.dual();
        let killed: usize = dual.0.iter().take(i).sum();
        self.size() - killed
    }

    /// `dim O_λ = n² − Σ (λ*_i)²`.
    pub fn orbit_dimension(&self) -> usize {
        let n = self.size();
        n * n - self.dual().0.iter().map(|&c| c * c).sum::<usize>()
    }

    /// Dominance order with `(n)` minimal: `λ ≤ μ` iff every prefix sum of
    /// `λ` is at least the matching prefix sum of `μ`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size(), other.size()));
        }
        let height = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..height {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.trim().is_empty() {
            return Ok(Partition::default());
        }
        let parts = body
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("{p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
