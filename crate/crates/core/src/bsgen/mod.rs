//! The bottom-left minor generator `m_{l_I}` of a hypersurface orbital
//! variety and the checks certifying it.
//!
//! For a subset `I` whose first and last chains have the same length `c`,
//! `M_I + t·Id` is the `n × n` matrix carrying `x[i,j]` at every position
//! `i > j` with `i` and `j` in different chains and `t` on the diagonal.
//! Its minor on rows `c+1..=n` and columns `1..=n−c` is a polynomial in `t`
//! whose lowest coefficient, at `t^{d_I}`, is the generator.

mod checks;
mod gcd;
mod witness;

pub use checks::{
    check_cofactors, check_degree, check_descendants, check_lowest_t, check_multilinear,
    check_poisson, check_vanishing, check_weight,
};
pub use gcd::check_minor_gcd;
pub use witness::{
    a_rsn, a_rsn_closed_form, a_rsn_corrected_form, check_general_generator,
    check_irreducibility_witness, competitor_windows, general_generator, witness_point,
};

use crate::parabolic::{ChainForm, SimpleSubset};
use crate::sympoly::{Entry, GenericMatrix, Poly, Weight};
use crate::{Error, Result};

/// A subset `I` with `c_1 = c_l =: c` and at least two chains, together
/// with its derived counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BsInstance {
    subset: SimpleSubset,
    chains: ChainForm,
    c: usize,
}

impl BsInstance {
    pub fn new(subset: SimpleSubset) -> Result<Self> {
        let chains = subset.chains();
        let lengths = chains.lengths();
        if lengths.len() < 2 {
            return Err(Error::SingleChain);
        }
        let (first, last) = (lengths[0], lengths[lengths.len() - 1]);
        if first != last {
            return Err(Error::UnequalEndChains { first, last });
        }
        Ok(BsInstance {
            subset,
            chains,
            c: first,
        })
    }

    pub fn from_lengths(lengths: Vec<usize>) -> Result<Self> {
        BsInstance::new(ChainForm::from_lengths(lengths)?.to_subset())
    }

    pub fn subset(&self) -> &SimpleSubset {
        &self.subset
    }

    pub fn chains(&self) -> &ChainForm {
        &self.chains
    }

    pub fn n(&self) -> usize {
        self.subset.n()
    }

    /// The common length `c` of the end chains.
    pub fn c(&self) -> usize {
        self.c
    }

    /// Number of chains `l`.
    pub fn l(&self) -> usize {
        self.chains.len()
    }

    /// `d_i = max(c_i − c, 0)` per chain.
    pub fn d(&self) -> Vec<usize> {
        self.chains
            .lengths()
            .iter()
            .map(|&ci| ci.saturating_sub(self.c))
            .collect()
    }

    /// `d_I = Σ d_i`, the power of `t` dividing the minor.
    pub fn d_total(&self) -> usize {
        self.d().iter().sum()
    }

    /// `l_I = n − c − d_I`.
    pub fn l_index(&self) -> usize {
        self.n() - self.c - self.d_total()
    }

    /// `r`: the number of chains longer than `c`.
    pub fn r(&self) -> usize {
        self.chains
            .lengths()
            .iter()
            .filter(|&&ci| ci > self.c)
            .count()
    }

    /// `s`: the total length of the chains of length at most `c`, minus `2c`.
    pub fn s(&self) -> usize {
        self.chains
            .lengths()
            .iter()
            .filter(|&&ci| ci <= self.c)
            .sum::<usize>()
            - 2 * self.c
    }

    /// `(r + 1)c + s`.
    pub fn expected_degree(&self) -> usize {
        (self.r() + 1) * self.c + self.s()
    }

    /// Whether no interior chain has length `c`.
    pub fn is_generic(&self) -> bool {
        self.interior_repeat().is_none()
    }

    fn interior_repeat(&self) -> Option<usize> {
        let lengths = self.chains.lengths();
        (2..lengths.len()).find(|&j| lengths[j - 1] == self.c)
    }

    /// Errors unless no interior chain has length `c`.
    pub fn require_generic(&self) -> Result<()> {
        match self.interior_repeat() {
            Some(index) => Err(Error::InteriorChainRepeatsEnd {
                index,
                length: self.c,
            }),
            None => Ok(()),
        }
    }

    /// `γ_c = Σ_{i ≤ c} (ε_i − ε_{n+1−i})`.
    pub fn gamma(&self) -> Weight {
        crate::quantize::gamma(self.n(), self.c).expect("two chains of length c fit in n")
    }

    /// Rows `c+1..=n` and columns `1..=n−c` of the minor.
    pub fn minor_window(&self) -> (Vec<usize>, Vec<usize>) {
        let (n, c) = (self.n(), self.c);
        ((c + 1..=n).collect(), (1..=n - c).collect())
    }
}

/// `M_I + t·Id`.
pub fn bs_matrix(inst: &BsInstance) -> GenericMatrix {
    parabolic_matrix(inst.subset(), true)
}

/// The strictly lower matrix `M_I` of coordinates crossing chain
/// boundaries, with `t` on the diagonal when `with_t` is set.
pub fn parabolic_matrix(subset: &SimpleSubset, with_t: bool) -> GenericMatrix {
    GenericMatrix::from_fn(subset.n(), |i, j| {
        if i == j && with_t {
            Entry::ParamOnDiag
        } else if i > j && !subset.same_chain(i, j) {
            Entry::Coord
        } else {
            Entry::Zero
        }
    })
    .expect("indices are in range")
}

/// `M_I^c(t)`, the bottom-left `(n−c) × (n−c)` minor of `M_I + t·Id`.
pub fn bs_minor(inst: &BsInstance) -> Result<Poly> {
    let (rows, cols) = inst.minor_window();
    bs_matrix(inst).det(&rows, &cols)
}

/// `m_{l_I}`, the coefficient of `t^{d_I}` in the minor.
pub fn bs_element(inst: &BsInstance) -> Result<Poly> {
    let f = bs_minor(inst)?.t_coefficient(inst.d_total() as u32);
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f)
}
