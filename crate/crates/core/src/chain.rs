//! Chain complexes and their homology and cohomology.
//!
//! Integral groups go through the exact Smith normal form machinery; mod-2
//! dimensions are computed by an unrelated GF(2) elimination so the two
//! routes can be played against each other (universal coefficients, duality,
//! Euler characteristics).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::abelian::FGAbelianGroup;
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::matrix::{self, IntMatrix};
use crate::simplicial::SimplicialComplex;

/// Coefficient ring tag for homology profiles.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Coefficients {
    Z,
    Z2,
}

impl Coefficients {
    pub fn name(self) -> &'static str {
        match self {
            Coefficients::Z => "Z",
            Coefficients::Z2 => "Z2",
        }
    }
}

/// Homology (or cohomology) groups of a complex, one per degree `0..=dim`.
///
/// Over `Z2` the groups are plain ranks: the `rank` field carries the vector
/// space dimension and the factor list stays empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomologyProfile {
    pub dim: usize,
    pub coefficients: Coefficients,
    pub groups: Vec<FGAbelianGroup>,
}

impl HomologyProfile {
    pub fn new(dim: usize, coefficients: Coefficients, groups: Vec<FGAbelianGroup>) -> Result<Self> {
        if groups.len() != dim + 1 {
            return Err(Error::DimensionMismatch {
                a: groups.len(),
                b: dim + 1,
            });
        }
        Ok(Self {
            dim,
            coefficients,
            groups,
        })
    }

    pub fn group(&self, k: usize) -> &FGAbelianGroup {
        &self.groups[k]
    }

    /// Alternating sum of ranks (over `Z2`, of dimensions).
    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .enumerate()
            .map(|(k, g)| {
                let r = g.rank() as i64;
                if k % 2 == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }

    fn expect_coefficients(&self, want: Coefficients) -> Result<()> {
        if self.coefficients != want {
            return Err(Error::CoefficientMismatch {
                expected: want.name(),
                got: self.coefficients.name(),
            });
        }
        Ok(())
    }
}

/// A bounded chain complex of free abelian groups.
///
/// `ranks[k]` is the rank of the degree-`k` chain group and `boundaries[k-1]`
/// holds the operator from degree `k` to degree `k-1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    /// Validates shapes and that consecutive boundaries compose to zero.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::ProfileInconsistent {
                reason: "a chain complex needs at least degree 0".into(),
            });
        }
        if boundaries.len() + 1 != ranks.len() {
            return Err(Error::DimensionMismatch {
                a: boundaries.len() + 1,
                b: ranks.len(),
            });
        }
        for (k, b) in boundaries.iter().enumerate() {
            if b.rows() != ranks[k] || b.cols() != ranks[k + 1] {
                return Err(Error::ShapeMismatch {
                    left_rows: b.rows(),
                    left_cols: b.cols(),
                    right_rows: ranks[k],
                    right_cols: ranks[k + 1],
                });
            }
        }
        for w in boundaries.windows(2) {
            if let Some((row, col)) = w[0].compose_nonzero_at(&w[1])? {
                return Err(Error::CompositionNonzero { row, col });
            }
        }
        Ok(Self { ranks, boundaries })
    }

    /// Simplicial chain complex with the lexicographic simplex bases.
    pub fn from_simplicial(k: &SimplicialComplex) -> Self {
        let dim = k.dim();
        let ranks = k.face_counts();
        let boundaries = (1..=dim)
            .map(|d| k.boundary_matrix(d).expect("degree in range"))
            .collect();
        Self::new(ranks, boundaries).expect("simplicial boundaries compose to zero")
    }

    pub fn top_dim(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn rank(&self, k: usize) -> usize {
        self.ranks.get(k).copied().unwrap_or(0)
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn boundaries(&self) -> &[IntMatrix] {
        &self.boundaries
    }

    /// The boundary operator `d_k: C_k -> C_{k-1}`, extended by zero maps
    /// beyond the stored range (degrees outside `0..=top_dim` have rank 0).
    pub fn boundary(&self, k: usize) -> IntMatrix {
        let n = self.top_dim();
        if k == 0 {
            IntMatrix::zeros(0, self.ranks[0])
        } else if k <= n {
            self.boundaries[k - 1].clone()
        } else {
            IntMatrix::zeros(self.rank(k - 1), self.rank(k))
        }
    }

    /// The coboundary `delta^k: C^k -> C^{k+1}`, i.e. the transpose of
    /// `d_{k+1}`.
    pub fn coboundary(&self, k: usize) -> IntMatrix {
        self.boundary(k + 1).transpose()
    }

    /// Integral homology in every degree.
    ///
    /// Each boundary operator is reduced exactly once: its rank enters the
    /// free part of its source degree and its nonunit invariant factors are
    /// the torsion of its target degree (the composition of consecutive
    /// boundaries vanishes, so the cokernel splits off the kernel quotient).
    pub fn homology(&self) -> HomologyProfile {
        let n = self.top_dim();
        let factors: Vec<Vec<num_bigint::BigInt>> = (0..=n + 1)
            .map(|k| matrix::invariant_factors(&self.boundary(k)))
            .collect();
        let groups = (0..=n)
            .map(|k| {
                let rank = self.ranks[k] - factors[k].len() - factors[k + 1].len();
                FGAbelianGroup::from_snf_diagonal(rank, factors[k + 1].clone())
            })
            .collect();
        HomologyProfile::new(n, Coefficients::Z, groups).expect("lengths match")
    }

    /// Integral cohomology in every degree: kernel of `delta^k` modulo the
    /// image of `delta^{k-1}`, computed on the transposed operators.
    pub fn cohomology(&self) -> HomologyProfile {
        let n = self.top_dim();
        let cofactors: Vec<Vec<num_bigint::BigInt>> = (0..=n)
            .map(|k| matrix::invariant_factors(&self.coboundary(k)))
            .collect();
        let groups = (0..=n)
            .map(|k| {
                let below = if k == 0 { 0 } else { cofactors[k - 1].len() };
                let rank = self.ranks[k] - cofactors[k].len() - below;
                let torsion = if k == 0 {
                    Vec::new()
                } else {
                    cofactors[k - 1].clone()
                };
                FGAbelianGroup::from_snf_diagonal(rank, torsion)
            })
            .collect();
        HomologyProfile::new(n, Coefficients::Z, groups).expect("lengths match")
    }

    /// Mod-2 homology dimensions by direct GF(2) elimination.
    pub fn homology_z2(&self) -> HomologyProfile {
        let n = self.top_dim();
        let rank2 = |k: usize| -> usize {
            if k == 0 || k > n {
                0
            } else {
                Gf2Matrix::from_int_matrix(&self.boundaries[k - 1]).rank()
            }
        };
        let groups = (0..=n)
            .map(|k| FGAbelianGroup::free(self.ranks[k] - rank2(k) - rank2(k + 1)))
            .collect();
        HomologyProfile::new(n, Coefficients::Z2, groups).expect("lengths match")
    }

    /// Mod-2 cohomology dimensions from the transposed coboundaries; equals
    /// [`Self::homology_z2`] degreewise but is computed from the dual side.
    pub fn cohomology_z2(&self) -> HomologyProfile {
        let n = self.top_dim();
        let rank2 = |k: usize| Gf2Matrix::from_int_matrix(&self.coboundary(k)).rank();
        let groups = (0..=n)
            .map(|k| {
                let below = if k == 0 { 0 } else { rank2(k - 1) };
                FGAbelianGroup::free(self.ranks[k] - rank2(k) - below)
            })
            .collect();
        HomologyProfile::new(n, Coefficients::Z2, groups).expect("lengths match")
    }

    /// Homology with the requested coefficients.
    pub fn homology_with(&self, coefficients: Coefficients) -> HomologyProfile {
        match coefficients {
            Coefficients::Z => self.homology(),
            Coefficients::Z2 => self.homology_z2(),
        }
    }

    /// Cohomology with the requested coefficients.
    pub fn cohomology_with(&self, coefficients: Coefficients) -> HomologyProfile {
        match coefficients {
            Coefficients::Z => self.cohomology(),
            Coefficients::Z2 => self.cohomology_z2(),
        }
    }
}

/// Checks the universal-coefficient relation between an integral homology
/// profile and an integral cohomology profile of the same complex:
/// `H^k = Z^{rank H_k} + torsion(H_{k-1})`.
pub fn uct_check(hz: &HomologyProfile, chz: &HomologyProfile) -> Result<bool> {
    hz.expect_coefficients(Coefficients::Z)?;
    chz.expect_coefficients(Coefficients::Z)?;
    if hz.dim != chz.dim {
        return Err(Error::DimensionMismatch {
            a: hz.dim,
            b: chz.dim,
        });
    }
    for k in 0..=hz.dim {
        let predicted = if k == 0 {
            FGAbelianGroup::free(hz.groups[0].rank())
        } else {
            FGAbelianGroup::free(hz.groups[k].rank()).direct_sum(&hz.groups[k - 1].torsion())
        };
        if chz.groups[k] != predicted {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Predicts the mod-2 Betti numbers from integral homology:
/// `b_k = rank H_k + ext2(H_k) + ext2(H_{k-1})`.
pub fn mod2_profile_from_z(hz: &HomologyProfile) -> Result<HomologyProfile> {
    hz.expect_coefficients(Coefficients::Z)?;
    let groups = (0..=hz.dim)
        .map(|k| {
            let own = &hz.groups[k];
            let below = if k == 0 {
                0
            } else {
                hz.groups[k - 1].ext_z2_dim()
            };
            FGAbelianGroup::free(own.rank() + own.ext_z2_dim() + below)
        })
        .collect();
    HomologyProfile::new(hz.dim, Coefficients::Z2, groups)
}

/// A generator of integral cohomology in a fixed degree, as an explicit
/// cocycle vector on the cochain basis.
#[derive(Clone, Debug)]
pub struct CohomologyGenerator {
    /// Order of the class: `None` for infinite order, else the torsion order.
    pub order: Option<BigInt>,
    /// Cocycle representative, length `ranks[q]`.
    pub cocycle: Vec<BigInt>,
}

/// Integral cohomology of degree `q` with explicit cocycle representatives
/// for each cyclic summand.
///
/// The kernel of `delta^q` is parameterized through the SNF column transform;
/// the coboundary image is pushed into those coordinates and a second SNF
/// splits the quotient into cyclic pieces whose generators are pulled back to
/// honest cocycle vectors.
pub fn integral_cohomology_generators(c: &ChainComplex, q: usize) -> Result<Vec<CohomologyGenerator>> {
    let n = c.top_dim();
    if q > n {
        return Err(Error::DegreeOutOfRange { degree: q, dim: n });
    }
    let c_q = c.rank(q);
    let delta_q = c.coboundary(q);
    let ext = matrix::snf_ext(&delta_q);
    let r = ext.rank();
    let m = c_q - r;

    // Kernel basis: trailing columns of V.
    let mut kernel = IntMatrix::zeros(c_q, m);
    for i in 0..c_q {
        for j in 0..m {
            kernel.set(i, j, ext.v.get(i, r + j).clone());
        }
    }

    let delta_below = if q == 0 {
        IntMatrix::zeros(c_q, 0)
    } else {
        c.coboundary(q - 1)
    };
    let vinv_b = ext.v_inv.mul(&delta_below)?;
    let mut projected = IntMatrix::zeros(m, delta_below.cols());
    for i in 0..m {
        for j in 0..delta_below.cols() {
            projected.set(i, j, vinv_b.get(r + i, j).clone());
        }
    }

    let quot = matrix::snf_ext(&projected);
    let quot_rank = quot.rank();
    let mut generators = Vec::new();
    for i in 0..m {
        let order = if i < quot_rank {
            let d = quot.s.get(i, i).clone();
            if d.magnitude().is_one() {
                continue; // killed summand
            }
            Some(d)
        } else {
            None
        };
        // Coordinates of the i-th cyclic generator inside the kernel lattice.
        let coords: Vec<BigInt> = (0..m).map(|row| quot.u_inv.get(row, i).clone()).collect();
        let cocycle: Vec<BigInt> = (0..c_q)
            .map(|row| {
                (0..m)
                    .map(|j| kernel.get(row, j) * &coords[j])
                    .sum::<BigInt>()
            })
            .collect();
        generators.push(CohomologyGenerator { order, cocycle });
    }
    Ok(generators)
}

/// `true` when `x` (a degree-`q` integral cochain) is a cocycle.
pub fn is_integral_cocycle(c: &ChainComplex, q: usize, x: &[BigInt]) -> Result<bool> {
    let delta = c.coboundary(q);
    if x.len() != delta.cols() {
        return Err(Error::DimensionMismatch {
            a: x.len(),
            b: delta.cols(),
        });
    }
    for i in 0..delta.rows() {
        let mut acc = BigInt::zero();
        for (j, xj) in x.iter().enumerate() {
            let e = delta.get(i, j);
            if !e.is_zero() && !xj.is_zero() {
                acc += e * xj;
            }
        }
        if !acc.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sanity-check that a profile looks like homology of a connected complex
/// (degree 0 is `Z`).
pub fn is_connected_profile(p: &HomologyProfile) -> bool {
    p.groups[0] == FGAbelianGroup::free(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{circle, moore_space, product, projective_plane, sphere};

    fn z() -> FGAbelianGroup {
        FGAbelianGroup::free(1)
    }

    fn zero() -> FGAbelianGroup {
        FGAbelianGroup::trivial()
    }

    fn tor(ms: &[i64]) -> FGAbelianGroup {
        FGAbelianGroup::new(0, ms.iter().copied())
    }

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
    fn sphere_homology() {
        for n in 1..=4 {
            let c = ChainComplex::from_simplicial(&sphere(n));
            let h = c.homology();
            for k in 0..=n {
                let expected = if k == 0 || k == n { z() } else { zero() };
                assert_eq!(h.groups[k], expected, "S^{n} degree {k}");
            }
        }
    }

    #[test]
    fn projective_plane_homology_and_cohomology() {
        let c = ChainComplex::from_simplicial(&projective_plane());
        let h = c.homology();
        assert_eq!(h.groups, vec![z(), tor(&[2]), zero()]);
        let ch = c.cohomology();
        assert_eq!(ch.groups, vec![z(), zero(), tor(&[2])]);
        assert!(uct_check(&h, &ch).unwrap());
    }

    #[test]
    fn lens_space_chain_complexes() {
        for p in [2i64, 3, 5] {
            let c = lens(p);
            let h = c.homology();
            assert_eq!(h.groups, vec![z(), tor(&[p]), zero(), z()]);
            let ch = c.cohomology();
            assert_eq!(ch.groups, vec![z(), zero(), tor(&[p]), z()]);
            assert!(uct_check(&h, &ch).unwrap());
        }
    }

    #[test]
    fn torus_homology() {
        let t = product(&circle(3).unwrap(), &circle(3).unwrap());
        let h = ChainComplex::from_simplicial(&t).homology();
        assert_eq!(h.groups, vec![z(), FGAbelianGroup::free(2), z()]);
    }

    #[test]
    fn circle_times_sphere_kunneth() {
        let x = product(&circle(3).unwrap(), &sphere(2));
        let h = ChainComplex::from_simplicial(&x).homology();
        assert_eq!(h.groups, vec![z(), z(), z(), z()]);
    }

    #[test]
    fn moore_space_homology() {
        for m in [2usize, 3, 5] {
            let c = ChainComplex::from_simplicial(&moore_space(m));
            let h = c.homology();
            assert_eq!(h.groups, vec![z(), tor(&[m as i64]), zero()], "moore({m})");
        }
    }

    #[test]
    fn z2_profiles_match_uct_prediction() {
        for k in [
            sphere(2),
            projective_plane(),
            moore_space(3),
            product(&circle(3).unwrap(), &circle(3).unwrap()),
        ] {
            let c = ChainComplex::from_simplicial(&k);
            let direct = c.homology_z2();
            let predicted = mod2_profile_from_z(&c.homology()).unwrap();
            assert_eq!(direct, predicted);
            assert_eq!(c.cohomology_z2(), direct);
        }
    }

    #[test]
    fn mod2_profile_examples() {
        // Census-style non-orientable 3-manifold shape with H_1 = Z + Z_2.
        let hz = HomologyProfile::new(
            3,
            Coefficients::Z,
            vec![z(), FGAbelianGroup::new(1, [2]), tor(&[2]), zero()],
        )
        .unwrap();
        let b = mod2_profile_from_z(&hz).unwrap();
        let dims: Vec<usize> = b.groups.iter().map(|g| g.rank()).collect();
        assert_eq!(dims, vec![1, 2, 2, 1]);

        // Odd torsion is invisible over Z_2.
        let hz = HomologyProfile::new(
            5,
            Coefficients::Z,
            vec![z(), zero(), tor(&[3, 3]), zero(), zero(), z()],
        )
        .unwrap();
        let b = mod2_profile_from_z(&hz).unwrap();
        let dims: Vec<usize> = b.groups.iter().map(|g| g.rank()).collect();
        assert_eq!(dims, vec![1, 0, 0, 0, 0, 1]);

        // Torsion-free profiles reduce to their ranks.
        let hz = HomologyProfile::new(
            2,
            Coefficients::Z,
            vec![z(), FGAbelianGroup::free(2), z()],
        )
        .unwrap();
        let b = mod2_profile_from_z(&hz).unwrap();
        let dims: Vec<usize> = b.groups.iter().map(|g| g.rank()).collect();
        assert_eq!(dims, vec![1, 2, 1]);
    }

    #[test]
    fn uct_negative_control() {
        let c = ChainComplex::from_simplicial(&projective_plane());
        let h = c.homology();
        // Move the torsion one degree up: UCT must reject.
        let corrupted = HomologyProfile::new(
            2,
            Coefficients::Z,
            vec![z(), tor(&[2]), zero()],
        )
        .unwrap();
        assert!(!uct_check(&h, &corrupted).unwrap());
        let wrong_coeff = c.homology_z2();
        assert!(matches!(
            uct_check(&h, &wrong_coeff),
            Err(Error::CoefficientMismatch { .. })
        ));
    }

    #[test]
    fn chain_complex_validation() {
        // d1 * d2 != 0
        let bad = ChainComplex::new(
            vec![1, 1, 1],
            vec![
                IntMatrix::from_rows(vec![vec![1]]),
                IntMatrix::from_rows(vec![vec![1]]),
            ],
        );
        assert!(matches!(bad, Err(Error::CompositionNonzero { .. })));

        let bad_shape = ChainComplex::new(vec![1, 2], vec![IntMatrix::zeros(1, 1)]);
        assert!(matches!(bad_shape, Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn cohomology_generators_reconstruct_groups() {
        let fixtures: Vec<ChainComplex> = vec![
            lens(2),
            lens(5),
            ChainComplex::from_simplicial(&projective_plane()),
            ChainComplex::from_simplicial(&moore_space(4)),
            ChainComplex::from_simplicial(&product(
                &circle(3).unwrap(),
                &circle(3).unwrap(),
            )),
        ];
        for c in fixtures {
            let ch = c.cohomology();
            for q in 0..=c.top_dim() {
                let gens = integral_cohomology_generators(&c, q).unwrap();
                let rank = gens.iter().filter(|g| g.order.is_none()).count();
                let torsion: Vec<BigInt> = gens
                    .iter()
                    .filter_map(|g| g.order.clone())
                    .collect();
                let rebuilt = FGAbelianGroup::new(rank, torsion);
                assert_eq!(rebuilt, ch.groups[q], "degree {q}");
                for g in &gens {
                    assert!(is_integral_cocycle(&c, q, &g.cocycle).unwrap());
                }
            }
        }
    }
}
