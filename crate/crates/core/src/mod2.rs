//! Mod-2 cochains, coefficient reduction, and cohomology bases.
//!
//! A cochain is a bit vector over the ordered simplex (or cell) basis of its
//! degree. Bases of `H^q(-; Z_2)` are built by extending a spanning set of
//! coboundaries to the full cocycle space; `express` solves for coordinates
//! in that basis, which is what turns cup products and Steenrod squares into
//! honest linear-algebra statements.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::chain::ChainComplex;
use crate::error::{Error, Result};
use crate::gf2::{BitVec, Gf2Matrix, Gf2Span};

/// A cochain over the two-element field in a fixed degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mod2Cochain {
    degree: usize,
    support: BitVec,
}

impl Mod2Cochain {
    pub fn zero(degree: usize, basis_size: usize) -> Self {
        Self {
            degree,
            support: BitVec::zeros(basis_size),
        }
    }

    pub fn from_indices(degree: usize, basis_size: usize, ones: &[usize]) -> Self {
        Self {
            degree,
            support: BitVec::from_indices(basis_size, ones),
        }
    }

    pub fn from_bits(degree: usize, support: BitVec) -> Self {
        Self { degree, support }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis_size(&self) -> usize {
        self.support.len()
    }

    pub fn bits(&self) -> &BitVec {
        &self.support
    }

    /// Value on the `i`-th basis simplex of this degree.
    pub fn eval(&self, i: usize) -> bool {
        self.support.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_zero()
    }

    /// Cochain sum (XOR of supports).
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree || self.support.len() != other.support.len() {
            return Err(Error::ComplexMismatch {
                degree: self.degree,
                left: self.support.len(),
                right: other.support.len(),
            });
        }
        let mut out = self.clone();
        out.support.xor_assign(&other.support);
        Ok(out)
    }
}

/// Parity reduction of an integral cocycle: the cochain-level map underlying
/// `H^q(X; Z) -> H^q(X; Z_2)`.
///
/// Rejects inputs that are not integral cocycles.
pub fn rho2(c: &ChainComplex, q: usize, x: &[BigInt]) -> Result<Mod2Cochain> {
    if !crate::chain::is_integral_cocycle(c, q, x)? {
        return Err(Error::NotACocycle { degree: q });
    }
    let ones: Vec<usize> = x
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero() && v.is_odd())
        .map(|(i, _)| i)
        .collect();
    Ok(Mod2Cochain::from_indices(q, x.len(), &ones))
}

/// The coboundary of a mod-2 cochain.
pub fn coboundary_z2(c: &ChainComplex, u: &Mod2Cochain) -> Mod2Cochain {
    let delta = Gf2Matrix::from_int_matrix(&c.coboundary(u.degree()));
    Mod2Cochain::from_bits(u.degree() + 1, delta.apply(u.bits()))
}

/// `true` when `u` is a mod-2 cocycle.
pub fn is_cocycle_z2(c: &ChainComplex, u: &Mod2Cochain) -> bool {
    coboundary_z2(c, u).is_zero()
}

/// A basis of `H^q(-; Z_2)` with deterministic representatives and a solver
/// for expressing arbitrary cocycles in it.
pub struct Mod2CohomologyBasis {
    degree: usize,
    ambient: usize,
    reps: Vec<BitVec>,
    /// Columns: a basis of the coboundary space followed by the
    /// representatives; solving against it yields class coordinates.
    solver: Gf2Matrix,
    cobound_dim: usize,
    delta: Gf2Matrix,
}

impl Mod2CohomologyBasis {
    /// Basis of `ker(delta^q) / im(delta^{q-1})` over the two-element field.
    pub fn compute(c: &ChainComplex, q: usize) -> Result<Self> {
        let n = c.top_dim();
        if q > n {
            return Err(Error::DegreeOutOfRange { degree: q, dim: n });
        }
        let ambient = c.rank(q);
        let delta = Gf2Matrix::from_int_matrix(&c.coboundary(q));
        let cocycles = delta.kernel_basis();

        let mut span = Gf2Span::new(ambient);
        let mut cobound_basis: Vec<BitVec> = Vec::new();
        if q > 0 {
            let below = Gf2Matrix::from_int_matrix(&c.coboundary(q - 1));
            for j in 0..below.cols() {
                let mut col = BitVec::zeros(ambient);
                for i in 0..ambient {
                    if below.get(i, j) {
                        col.set(i, true);
                    }
                }
                if span.insert(&col) {
                    cobound_basis.push(col);
                }
            }
        }
        let cobound_dim = cobound_basis.len();

        let mut reps = Vec::new();
        for z in &cocycles {
            if span.insert(z) {
                reps.push(z.clone());
            }
        }

        let mut columns = cobound_basis;
        columns.extend(reps.iter().cloned());
        let solver = Gf2Matrix::from_columns(ambient, &columns);
        Ok(Self {
            degree: q,
            ambient,
            reps,
            solver,
            cobound_dim,
            delta,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Dimension of `H^q(-; Z_2)`.
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn rep(&self, i: usize) -> Mod2Cochain {
        Mod2Cochain::from_bits(self.degree, self.reps[i].clone())
    }

    pub fn reps(&self) -> Vec<Mod2Cochain> {
        (0..self.dim()).map(|i| self.rep(i)).collect()
    }

    /// Coordinates of the class of `z` in this basis. Errors when `z` is not
    /// a cocycle of the right degree.
    pub fn express(&self, z: &Mod2Cochain) -> Result<BitVec> {
        if z.degree() != self.degree || z.basis_size() != self.ambient {
            return Err(Error::ComplexMismatch {
                degree: z.degree(),
                left: z.basis_size(),
                right: self.ambient,
            });
        }
        if !self.delta.apply(z.bits()).is_zero() {
            return Err(Error::NotACocycle {
                degree: self.degree,
            });
        }
        let solution = self
            .solver
            .solve(z.bits())
            .ok_or_else(|| Error::Internal("cocycle outside cocycle space".into()))?;
        let mut coords = BitVec::zeros(self.dim());
        for i in 0..self.dim() {
            coords.set(i, solution.get(self.cobound_dim + i));
        }
        Ok(coords)
    }

    /// Whether `z` represents the zero class.
    pub fn class_is_zero(&self, z: &Mod2Cochain) -> Result<bool> {
        Ok(self.express(z)?.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::integral_cohomology_generators;
    use crate::matrix::IntMatrix;
    use crate::simplicial::{projective_plane, sphere};

    fn lens(p: i64) -> ChainComplex {
        ChainComplex::new(
            vec![1, 1, 1, 1],
            vec![
                IntMatrix::zeros(1, 1),
                IntMatrix::from_rows(vec![vec![p]]),
                IntMatrix::zeros(1, 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn sphere_has_no_degree_one_classes() {
        let c = ChainComplex::from_simplicial(&sphere(2));
        let basis = Mod2CohomologyBasis::compute(&c, 1).unwrap();
        assert_eq!(basis.dim(), 0);
    }

    #[test]
    fn projective_plane_degree_one_class() {
        let c = ChainComplex::from_simplicial(&projective_plane());
        let basis = Mod2CohomologyBasis::compute(&c, 1).unwrap();
        assert_eq!(basis.dim(), 1);
        // Expressing a representative gives a unit coordinate vector.
        let coords = basis.express(&basis.rep(0)).unwrap();
        assert_eq!(coords.ones(), vec![0]);
    }

    #[test]
    fn rho2_parity_behavior() {
        let c = lens(2);
        // Zero cocycle reduces to zero.
        let z = rho2(&c, 2, &[BigInt::from(0)]).unwrap();
        assert!(z.is_zero());
        // Doubling any integral cocycle lands in the zero class.
        let gens = integral_cohomology_generators(&c, 2).unwrap();
        assert_eq!(gens.len(), 1);
        let gen = &gens[0];
        assert_eq!(gen.order, Some(BigInt::from(2)));
        let doubled: Vec<BigInt> = gen.cocycle.iter().map(|v| v * 2).collect();
        let basis = Mod2CohomologyBasis::compute(&c, 2).unwrap();
        let reduced_double = rho2(&c, 2, &doubled).unwrap();
        assert!(basis.class_is_zero(&reduced_double).unwrap());
        // The generator of H^2(L(2,1); Z) = Z_2 reduces to a nonzero class.
        let reduced = rho2(&c, 2, &gen.cocycle).unwrap();
        assert!(!basis.class_is_zero(&reduced).unwrap());
    }

    #[test]
    fn rho2_rejects_non_cocycles() {
        let c = lens(3);
        // In degree 1 the coboundary is multiplication by 3, so a nonzero
        // cochain is not a cocycle.
        let err = rho2(&c, 1, &[BigInt::from(1)]).unwrap_err();
        assert!(matches!(err, Error::NotACocycle { degree: 1 }));
    }

    #[test]
    fn express_rejects_non_cocycles() {
        let c = ChainComplex::from_simplicial(&projective_plane());
        let basis = Mod2CohomologyBasis::compute(&c, 1).unwrap();
        let n1 = c.rank(1);
        // A single edge is not a cocycle on the projective plane.
        let z = Mod2Cochain::from_indices(1, n1, &[0]);
        assert!(matches!(
            basis.express(&z),
            Err(Error::NotACocycle { degree: 1 })
        ));
    }

    #[test]
    fn basis_dimensions_match_z2_homology() {
        for k in [sphere(3), projective_plane()] {
            let c = ChainComplex::from_simplicial(&k);
            let h2 = c.homology_z2();
            for q in 0..=c.top_dim() {
                let basis = Mod2CohomologyBasis::compute(&c, q).unwrap();
                assert_eq!(basis.dim(), h2.groups[q].rank(), "degree {q}");
            }
        }
    }
}
