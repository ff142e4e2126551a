use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// A linear inequality `Σ coeffs[k]·b_k ≤ bound` over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub bound: BigRational,
    pub label: String,
}

impl Constraint {
    pub fn from_integers(coeffs: &[i64], bound: i64, label: impl Into<String>) -> Self {
        Constraint {
            coeffs: coeffs
                .iter()
                .map(|&a| BigRational::from_integer(BigInt::from(a)))
                .collect(),
            bound: BigRational::from_integer(BigInt::from(bound)),
            label: label.into(),
        }
    }

    /// Whether an integer point satisfies the inequality.
    pub fn holds_at(&self, point: &[i64]) -> bool {
        let lhs: BigRational = self
            .coeffs
            .iter()
            .zip(point)
            .map(|(a, &x)| a * BigRational::from_integer(BigInt::from(x)))
            .sum();
        lhs <= self.bound
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.label)?;
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let sign = if a.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = a.abs();
            let mag = if mag == BigRational::from_integer(BigInt::from(1)) {
                String::new()
            } else {
                format!("{mag}·")
            };
            write!(f, "{sign}{mag}b{}", k + 2)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " <= {}", self.bound)
    }
}

/// Non-negative multipliers, one per constraint, whose combination has all
/// coefficients zero and a negative bound, so that `0 ≤ bound < 0` follows
/// from the system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarkasCertificate {
    pub multipliers: Vec<BigRational>,
}

impl FarkasCertificate {
    /// Checks the certificate against the system it claims to refute.
    pub fn verifies(&self, system: &[Constraint]) -> bool {
        if self.multipliers.len() != system.len()
            || self.multipliers.iter().any(Signed::is_negative)
        {
            return false;
        }
        let vars = system.first().map_or(0, |c| c.coeffs.len());
        let coeffs_vanish = (0..vars).all(|k| {
            self.multipliers
                .iter()
                .zip(system)
                .map(|(y, c)| y * &c.coeffs[k])
                .sum::<BigRational>()
                .is_zero()
        });
        let bound: BigRational = self
            .multipliers
            .iter()
            .zip(system)
            .map(|(y, c)| y * &c.bound)
            .sum();
        coeffs_vanish && bound.is_negative()
    }

    /// The constraints used with a nonzero multiplier, as `(multiplier, label)`.
    pub fn support<'a>(&'a self, system: &'a [Constraint]) -> Vec<(&'a BigRational, &'a str)> {
        self.multipliers
            .iter()
            .zip(system)
            .filter(|(y, _)| !y.is_zero())
            .map(|(y, c)| (y, c.label.as_str()))
            .collect()
    }
}

#[derive(Clone)]
struct Row {
    coeffs: Vec<BigRational>,
    bound: BigRational,
    multipliers: Vec<BigRational>,
}

impl Row {
    fn combine(&self, a: &BigRational, other: &Row, b: &BigRational) -> Row {
        let mix = |x: &[BigRational], y: &[BigRational]| {
            x.iter().zip(y).map(|(p, q)| p * a + q * b).collect()
        };
        Row {
            coeffs: mix(&self.coeffs, &other.coeffs),
            bound: &self.bound * a + &other.bound * b,
            multipliers: mix(&self.multipliers, &other.multipliers),
        }
    }

    fn contradiction(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero) && self.bound.is_negative()
    }
}

/// Fourier–Motzkin elimination with multiplier tracking. Returns a Farkas
/// certificate when the system has no real solution and `None` otherwise.
pub fn fourier_motzkin(system: &[Constraint]) -> Option<FarkasCertificate> {
    let m = system.len();
    let vars = system.first().map_or(0, |c| c.coeffs.len());
    let mut rows: Vec<Row> = system
        .iter()
        .enumerate()
        .map(|(k, c)| Row {
            coeffs: c.coeffs.clone(),
            bound: c.bound.clone(),
            multipliers: (0..m)
                .map(|j| BigRational::from_integer(BigInt::from(u8::from(j == k))))
                .collect(),
        })
        .collect();
    for k in 0..vars {
        if let Some(r) = rows.iter().find(|r| r.contradiction()) {
            return Some(FarkasCertificate {
                multipliers: r.multipliers.clone(),
            });
        }
        let (mut pos, mut neg, mut next) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            if r.coeffs[k].is_positive() {
                pos.push(r);
            } else if r.coeffs[k].is_negative() {
                neg.push(r);
            } else {
                next.push(r);
            }
        }
        for p in &pos {
            for q in &neg {
                next.push(p.combine(&(-&q.coeffs[k]), q, &p.coeffs[k]));
            }
        }
        let mut seen = BTreeSet::new();
        next.retain(|r| seen.insert((r.coeffs.clone(), r.bound.clone())));
        rows = next;
    }
    rows.iter()
        .find(|r| r.contradiction())
        .map(|r| FarkasCertificate {
            multipliers: r.multipliers.clone(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refutes_an_empty_interval() {
        // b ≤ 1 and −b ≤ −2
        let system = [
            Constraint::from_integers(&[1], 1, "upper"),
            Constraint::from_integers(&[-1], -2, "lower"),
        ];
        let cert = fourier_motzkin(&system).unwrap();
        assert!(cert.verifies(&system));
        assert_eq!(cert.support(&system).len(), 2);
    }

    #[test]
    fn accepts_a_feasible_system() {
        let system = [
            Constraint::from_integers(&[1, 1], 3, "sum"),
            Constraint::from_integers(&[-1, 0], 0, "b2 ≥ 0"),
            Constraint::from_integers(&[0, -1], -3, "b3 ≥ 3"),
        ];
        assert!(fourier_motzkin(&system).is_none());
        assert!(system.iter().all(|c| c.holds_at(&[0, 3])));
    }

    #[test]
    fn rejects_bad_certificates() {
        let system = [
            Constraint::from_integers(&[1], 1, "upper"),
            Constraint::from_integers(&[-1], -2, "lower"),
        ];
        let one = BigRational::from_integer(BigInt::from(1));
        let bad = FarkasCertificate {
            multipliers: vec![one.clone(), -one.clone()],
        };
        assert!(!bad.verifies(&system));
        assert!(!FarkasCertificate {
            multipliers: vec![one]
        }
        .verifies(&system));
        assert_eq!(system[1].to_string(), "lower: -b2 <= -2");
    }
}
