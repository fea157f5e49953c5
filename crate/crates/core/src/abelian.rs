//! Finitely generated abelian groups in canonical form.
//!
//! A group is stored as a free rank plus its invariant factors
//! `d_1 | d_2 | ... | d_k` with every `d_i >= 2`. The form is canonical, so
//! isomorphism is plain equality. Arbitrary cyclic decompositions are folded
//! into this form with gcd/lcm smoothing, e.g. `Z_2 + Z_3` becomes `Z_6` while
//! `Z_2 + Z_2` stays as it is.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{self, IntMatrix};

/// A finitely generated abelian group `Z^rank + Z_{d_1} + ... + Z_{d_k}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FGAbelianGroup {
    rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl FGAbelianGroup {
    pub fn trivial() -> Self {
        Self {
            rank: 0,
            invariant_factors: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        Self {
            rank,
            invariant_factors: Vec::new(),
        }
    }

    /// Builds the group `Z^rank + Z_{m_1} + ... + Z_{m_k}` from arbitrary
    /// cyclic summands and puts it in canonical form. Summands equal to 1 are
    /// dropped.
    ///
    /// Panics if a summand is zero or negative; a `Z` summand belongs in
    /// `rank`.
    pub fn new<I, T>(rank: usize, summands: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let moduli: Vec<BigInt> = summands.into_iter().map(Into::into).collect();
        assert!(
            moduli.iter().all(|m| m.sign() == num_bigint::Sign::Plus),
            "cyclic summand must be a positive integer"
        );
        Self {
            rank,
            invariant_factors: canonical_chain(moduli),
        }
    }

    /// Torsion coefficients already known to form a divisibility chain, e.g.
    /// an SNF diagonal. Units are dropped; the chain is still re-checked.
    pub(crate) fn from_snf_diagonal(rank: usize, diagonal: Vec<BigInt>) -> Self {
        let g = Self::new(rank, diagonal);
        debug_assert!(g.check_chain());
        g
    }

    fn check_chain(&self) -> bool {
        self.invariant_factors
            .windows(2)
            .all(|w| (&w[1] % &w[0]).is_zero())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    pub fn is_torsion_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// The torsion subgroup (same factors, rank zero).
    pub fn torsion(&self) -> Self {
        Self {
            rank: 0,
            invariant_factors: self.invariant_factors.clone(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut moduli = self.invariant_factors.clone();
        moduli.extend(other.invariant_factors.iter().cloned());
        Self {
            rank: self.rank + other.rank,
            invariant_factors: canonical_chain(moduli),
        }
    }

    /// `dim_{Z_2} Ext(G, Z_2)`: the number of even invariant factors.
    ///
    /// For a finite group written as a sum of cyclic prime-power groups this
    /// counts the summands at the prime 2.
    pub fn ext_z2_dim(&self) -> usize {
        self.invariant_factors
            .iter()
            .filter(|d| d.is_even())
            .count()
    }

    /// `dim_{Z_2} Hom(G, Z_2)`: free rank plus the even factor count.
    pub fn hom_z2_dim(&self) -> usize {
        self.rank + self.ext_z2_dim()
    }

    /// Isomorphism test; canonical form makes this structural equality.
    pub fn iso(&self, other: &Self) -> bool {
        self == other
    }
}

impl fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z_{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Folds arbitrary positive moduli into an invariant-factor chain by
/// replacing non-dividing pairs with (gcd, lcm) until every adjacent pair
/// divides. Drops factors of 1.
fn canonical_chain(mut moduli: Vec<BigInt>) -> Vec<BigInt> {
    use num_traits::One;
    moduli.retain(|m| !m.is_one());
    moduli.sort();
    loop {
        let mut changed = false;
        for i in 0..moduli.len().saturating_sub(1) {
            let (a, b) = (moduli[i].clone(), moduli[i + 1].clone());
            if !(&b % &a).is_zero() {
                let g = a.gcd(&b);
                let l = &a / &g * &b;
                moduli[i] = g;
                moduli[i + 1] = l;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    moduli.retain(|m| !m.is_one());
    moduli
}

/// Homology of the two-step sequence `. --in--> Z^c --out--> .`:
/// `ker(boundary_out) / im(boundary_in)`.
///
/// `boundary_out` maps degree `k` to `k-1` (shape `c_{k-1} x c_k`) and
/// `boundary_in` maps degree `k+1` to `k` (shape `c_k x c_{k+1}`), so the
/// composite must vanish.
pub fn homology_group(boundary_out: &IntMatrix, boundary_in: &IntMatrix) -> Result<FGAbelianGroup> {
    if boundary_out.cols() != boundary_in.rows() {
        return Err(Error::ShapeMismatch {
            left_rows: boundary_out.rows(),
            left_cols: boundary_out.cols(),
            right_rows: boundary_in.rows(),
            right_cols: boundary_in.cols(),
        });
    }
    if let Some((row, col)) = boundary_out.compose_nonzero_at(boundary_in)? {
        return Err(Error::CompositionNonzero { row, col });
    }
    let chain_rank = boundary_out.cols();
    let rank_out = matrix::rank(boundary_out);
    let factors_in = matrix::invariant_factors(boundary_in);
    // im(in) sits inside ker(out), so Z^c / im(in) = H + Z^{rank(out)}; the
    // torsion of H is exactly the nonunit part of the SNF diagonal of `in`.
    let rank = chain_rank
        .checked_sub(rank_out + factors_in.len())
        .expect("boundary ranks exceed chain rank despite zero composition");
    Ok(FGAbelianGroup::from_snf_diagonal(rank, factors_in))
}
