use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;

use super::{Poly, Var};
use crate::parabolic::SimpleSubset;

/// An integral weight in `ε`-coordinates. Pairing with the root `α_{i,j}`
/// is `v_i − v_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// `ε_i − ε_j`, one-based.
    pub fn root(n: usize, i: usize, j: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] += 1;
        v[j - 1] -= 1;
        Weight(v)
    }

    /// The simple root `α_k = ε_k − ε_{k+1}`.
    pub fn simple_root(n: usize, k: usize) -> Self {
        Weight::root(n, k, k + 1)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `(self, α_{i,j}) = v_i − v_j`.
    pub fn pair_root(&self, i: usize, j: usize) -> i64 {
        self.0[i - 1] - self.0[j - 1]
    }

    /// Coefficients on the simple roots, when the weight lies in the root
    /// lattice (its coordinates sum to zero).
    pub fn simple_root_coords(&self) -> Option<Vec<i64>> {
        if self.0.iter().sum::<i64>() != 0 {
            return None;
        }
        let mut acc = 0;
        Some(
            self.0[..self.0.len().saturating_sub(1)]
                .iter()
                .map(|v| {
                    acc += v;
                    acc
                })
                .collect(),
        )
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// Printed as a combination of simple roots, e.g. `a1+2a2+2a3+a4`, falling
/// back to `ε`-coordinates outside the root lattice.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(coords) = self.simple_root_coords() else {
            let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
            return write!(f, "({})", parts.join(","));
        };
        let mut first = true;
        for (k, &c) in coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = if c.abs() == 1 {
                String::new()
            } else {
                c.abs().to_string()
            };
            write!(f, "{sign}{mag}a{}", k + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Poly {
    /// The common weight of all terms, with `wt(x[i,j]) = ε_i − ε_j` and
    /// `wt(t) = 0`. `None` when terms disagree, when the polynomial is zero,
    /// or when an index exceeds `n`.
    pub fn weight(&self, n: usize) -> Option<Weight> {
        let mut common: Option<Weight> = None;
        for (m, _) in self.terms() {
            let mut w = Weight::zero(n);
            for &(v, e) in m.factors() {
                if let Var::Coord(i, j) = v {
                    if i == 0 || j == 0 || i > n || j > n {
                        return None;
                    }
                    w.0[i - 1] += i64::from(e);
                    w.0[j - 1] -= i64::from(e);
                }
            }
            match &common {
                None => common = Some(w),
                Some(c) if *c != w => return None,
                _ => {}
            }
        }
        common
    }
}

/// `{x[i,j], x[r,s]} = δ_{j,r} x[i,s] − δ_{s,i} x[r,j]`.
fn bracket_vars(a: (usize, usize), b: (usize, usize)) -> Poly {
    let (i, j) = a;
    let (r, s) = b;
    let mut out = Poly::zero();
    if j == r {
        out += &Poly::x(i, s);
    }
    if s == i {
        out -= &Poly::x(r, j);
    }
    out
}

/// The Poisson bracket on the coordinate ring, extended from the generators
/// by bilinearity and the Leibniz rule. `t` is central.
pub fn poisson(p: &Poly, q: &Poly) -> Poly {
    let coords = |f: &Poly| -> Vec<(usize, usize)> {
        f.variables()
            .into_iter()
            .filter_map(|v| match v {
                Var::Coord(i, j) => Some((i, j)),
                Var::Param => None,
            })
            .collect()
    };
    let (vp, vq) = (coords(p), coords(q));
    let dq: Vec<Poly> = vq
        .iter()
        .map(|&(r, s)| q.derivative(Var::Coord(r, s)))
        .collect();
    let mut out = Poly::zero();
    for &a in &vp {
        let mut da: Option<Poly> = None;
        for (k, &b) in vq.iter().enumerate() {
            let br = bracket_vars(a, b);
            if br.is_zero() {
                continue;
            }
            let da = da.get_or_insert_with(|| p.derivative(Var::Coord(a.0, a.1)));
            out += &(&(&*da * &dq[k]) * &br);
        }
    }
    out
}

/// Sets to zero every coordinate of the parabolic `p_I`: positions on or
/// above the diagonal, and positions below it inside one chain.
pub fn reduce_mod_parabolic(p: &Poly, subset: &SimpleSubset) -> Poly {
    p.kill_vars(|v| match v {
        Var::Coord(i, j) => i <= j || subset.same_chain(i, j),
        Var::Param => false,
    })
}

/// `(−1)^e`.
pub(crate) fn sign_power(e: u64) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn brackets_of_generators() {
        assert_eq!(poisson(&p("x[1,2]"), &p("x[2,3]")), p("x[1,3]"));
        assert_eq!(poisson(&p("x[1,2]"), &p("x[3,4]")), Poly::zero());
        assert_eq!(poisson(&p("x[1,2]"), &p("x[2,1]")), p("x[1,1] - x[2,2]"));
        assert_eq!(poisson(&p("x[2,3]"), &p("x[1,2]")), p("-x[1,3]"));
        assert_eq!(poisson(&p("t"), &p("x[1,2]")), Poly::zero());
        let f = p("x[2,1]*x[3,2] + t*x[3,1]");
        assert_eq!(poisson(&f, &f), Poly::zero());
    }

    #[test]
    fn leibniz_on_a_product() {
        let lhs = poisson(&p("x[1,2]"), &p("x[2,3]*x[2,1]"));
        // {x12, x23} x21 + x23 {x12, x21}
        assert_eq!(lhs, p("x[1,3]*x[2,1] + x[2,3]*x[1,1] - x[2,3]*x[2,2]"));
    }

    #[test]
    fn weights() {
        let w = p("x[3,1]").weight(5).unwrap();
        assert_eq!(w, Weight(vec![-1, 0, 1, 0, 0]));
        assert_eq!(w.to_string(), "-a1-a2");
        assert_eq!(p("7").weight(3), Some(Weight::zero(3)));
        assert_eq!(p("x[2,1] + x[3,1]").weight(3), None);
        assert_eq!(
            p("t*x[2,1] + x[2,1]").weight(3),
            Some(Weight(vec![-1, 1, 0]))
        );
        assert_eq!(Weight(vec![1, 1, 0, -1, -1]).to_string(), "a1+2a2+2a3+a4");
        assert_eq!(Weight(vec![1, 0]).to_string(), "(1,0)");
    }

    #[test]
    fn parabolic_reduction() {
        let empty = SimpleSubset::empty(3).unwrap();
        assert_eq!(
            reduce_mod_parabolic(&p("x[1,2]*x[3,1]"), &empty),
            Poly::zero()
        );
        let i = SimpleSubset::parse(3, "1").unwrap();
        assert_eq!(reduce_mod_parabolic(&p("x[2,1]"), &i), Poly::zero());
        assert_eq!(
            reduce_mod_parabolic(&p("x[3,1] + x[2,2] + t"), &i),
            p("x[3,1] + t")
        );
        assert_eq!(sign_power(3), BigInt::from(-1));
    }
}
