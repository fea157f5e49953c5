//! Finite simplicial complexes given by their facets.
//!
//! A complex is stored as the set of maximal faces, each a sorted vertex
//! tuple; every derived object (face lists, boundary matrices) is ordered by
//! the global lexicographic order on sorted tuples, so matrices and bases are
//! reproducible across runs.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// A finite simplicial complex presented by facets (maximal faces).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    /// Sorted vertex tuples, lexicographically ordered, mutually incomparable.
    facets: Vec<Vec<usize>>,
    /// Sorted list of all vertex labels.
    vertices: Vec<usize>,
}

impl SimplicialComplex {
    /// Builds a complex from a list of faces. Faces contained in other faces
    /// are absorbed; duplicate faces collapse. Errors on empty input, an
    /// empty face, or a repeated vertex within a face.
    pub fn from_facets(faces: Vec<Vec<usize>>) -> Result<Self> {
        if faces.is_empty() {
            return Err(Error::InvalidFacet {
                reason: "a complex needs at least one facet".into(),
            });
        }
        let mut sorted: Vec<Vec<usize>> = Vec::with_capacity(faces.len());
        for mut f in faces {
            if f.is_empty() {
                return Err(Error::InvalidFacet {
                    reason: "empty facet".into(),
                });
            }
            f.sort_unstable();
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidFacet {
                    reason: format!("repeated vertex in facet {f:?}"),
                });
            }
            sorted.push(f);
        }
        sorted.sort();
        sorted.dedup();
        // Keep maximal faces only.
        let maximal: Vec<Vec<usize>> = sorted
            .iter()
            .filter(|f| {
                !sorted
                    .iter()
                    .any(|g| g.len() > f.len() && f.iter().all(|v| g.binary_search(v).is_ok()))
            })
            .cloned()
            .collect();
        let vertices: Vec<usize> = maximal
            .iter()
            .flatten()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        Ok(Self {
            facets: maximal,
            vertices,
        })
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Dimension: largest facet size minus one.
    pub fn dim(&self) -> usize {
        self.facets.iter().map(Vec::len).max().unwrap_or(1) - 1
    }

    /// All facets have the same dimension.
    pub fn is_pure(&self) -> bool {
        self.facets.iter().map(Vec::len).all_equal()
    }

    /// The `k`-simplices as sorted vertex tuples in lexicographic order.
    pub fn faces(&self, k: usize) -> Result<Vec<Vec<usize>>> {
        if k > self.dim() {
            return Err(Error::DegreeOutOfRange {
                degree: k,
                dim: self.dim(),
            });
        }
        let mut set = BTreeSet::new();
        for f in &self.facets {
            if f.len() >= k + 1 {
                for c in f.iter().copied().combinations(k + 1) {
                    set.insert(c);
                }
            }
        }
        Ok(set.into_iter().collect())
    }

    /// Face counts `f_0, ..., f_dim`.
    pub fn face_counts(&self) -> Vec<usize> {
        (0..=self.dim())
            .map(|k| self.faces(k).expect("degree in range").len())
            .collect()
    }

    /// Euler characteristic as the alternating sum of face counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.face_counts()
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// The boundary operator from `k`-chains to `(k-1)`-chains: one column
    /// per `k`-simplex with entry `(-1)^i` at the face omitting its `i`-th
    /// vertex.
    pub fn boundary_matrix(&self, k: usize) -> Result<IntMatrix> {
        if k == 0 || k > self.dim() {
            return Err(Error::DegreeOutOfRange {
                degree: k,
                dim: self.dim(),
            });
        }
        let rows = self.faces(k - 1)?;
        let cols = self.faces(k)?;
        let row_index: BTreeMap<&[usize], usize> = rows
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (j, simplex) in cols.iter().enumerate() {
            for omit in 0..simplex.len() {
                let face: Vec<usize> = simplex
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != omit)
                    .map(|(_, &v)| v)
                    .collect();
                let i = row_index[face.as_slice()];
                let sign = if omit % 2 == 0 { 1 } else { -1 };
                m.set(i, j, BigInt::from(sign));
            }
        }
        Ok(m)
    }

    /// Relabels vertices to `0..n` following their sorted order.
    pub fn canonical_relabel(&self) -> Self {
        let index: BTreeMap<usize, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().map(|v| index[v]).collect())
            .collect();
        Self::from_facets(facets).expect("relabeling preserves validity")
    }
}

/// Boundary of the `(n+1)`-simplex: the standard triangulated `n`-sphere on
/// `n + 2` vertices.
pub fn sphere(n: usize) -> SimplicialComplex {
    let facets = (0..n + 2).combinations(n + 1).collect();
    SimplicialComplex::from_facets(facets).expect("sphere facets are valid")
}

/// The `m`-gon triangulation of the circle.
pub fn circle(m: usize) -> Result<SimplicialComplex> {
    if m < 3 {
        return Err(Error::MTooSmall { m });
    }
    let facets = (0..m).map(|i| vec![i, (i + 1) % m]).collect();
    SimplicialComplex::from_facets(facets)
}

fn icosahedron() -> SimplicialComplex {
    // North 0, south 1, upper ring 2..=6, lower ring 7..=11; the lower ring
    // is rotated half a step against the upper one.
    let north = 0;
    let south = 1;
    let u = |i: usize| 2 + i % 5;
    let l = |i: usize| 7 + i % 5;
    let mut facets = Vec::with_capacity(20);
    for i in 0..5 {
        facets.push(vec![north, u(i), u(i + 1)]);
        facets.push(vec![south, l(i), l(i + 1)]);
        facets.push(vec![u(i), u(i + 1), l(i)]);
        facets.push(vec![l(i), l(i + 1), u(i + 1)]);
    }
    SimplicialComplex::from_facets(facets).expect("icosahedron facets are valid")
}

/// The 6-vertex projective plane, obtained as the antipodal quotient of the
/// icosahedron boundary.
pub fn projective_plane() -> SimplicialComplex {
    let ico = icosahedron();
    // Antipode swaps the poles and maps upper vertex i to lower vertex i+2
    // (a half turn); the quotient identifies each vertex with its antipode.
    let class = |v: usize| -> usize {
        match v {
            0 | 1 => 0,
            2..=6 => 1 + (v - 2),
            _ => 1 + (v - 7 + 3) % 5,
        }
    };
    let facets = ico
        .facets()
        .iter()
        .map(|f| f.iter().map(|&v| class(v)).collect())
        .collect();
    SimplicialComplex::from_facets(facets).expect("antipodal quotient is simplicial")
}

/// A two-dimensional complex with first homology `Z_m`: a triangulated disk
/// whose boundary wraps `m` times around a central triangle.
///
/// Panics if `m < 2`.
pub fn moore_space(m: usize) -> SimplicialComplex {
    assert!(m >= 2, "moore_space needs m >= 2");
    let ring = 3 * m;
    // Triangle 0..3, middle ring 3..3+ring, cone point last.
    let v = |i: usize| i % 3;
    let mid = |i: usize| 3 + i % ring;
    let center = 3 + ring;
    let mut facets = Vec::with_capacity(3 * ring);
    for i in 0..ring {
        facets.push(vec![v(i), v(i + 1), mid(i)]);
        facets.push(vec![v(i + 1), mid(i), mid(i + 1)]);
        facets.push(vec![center, mid(i), mid(i + 1)]);
    }
    SimplicialComplex::from_facets(facets).expect("moore space facets are valid")
}

/// Staircase (shuffle) triangulation of the product `|K| x |L|` together with
/// the vertex maps of the two projections.
///
/// Product vertices are indexed as `i * |V_L| + j` where `i`, `j` are the
/// positions of the factor vertices in sorted order; along each staircase
/// both coordinates are monotone, so the projections are simplicial on every
/// face of the product.
///
/// Panics unless both complexes are pure.
pub fn product_with_projections(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
) -> (SimplicialComplex, Vec<usize>, Vec<usize>) {
    assert!(
        k.is_pure() && l.is_pure(),
        "staircase product needs pure complexes"
    );
    let k_index: BTreeMap<usize, usize> = k
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let l_index: BTreeMap<usize, usize> = l
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let n_l = l.vertices().len();

    let mut facets = Vec::new();
    for sigma in k.facets() {
        for tau in l.facets() {
            let p = sigma.len() - 1;
            let q = tau.len() - 1;
            // A monotone path through the (p+1) x (q+1) grid, encoded by the
            // positions of its p "sigma" steps among p+q steps.
            for step_positions in (0..p + q).combinations(p) {
                let mut a = 0usize;
                let mut b = 0usize;
                let mut facet = Vec::with_capacity(p + q + 1);
                facet.push(k_index[&sigma[0]] * n_l + l_index[&tau[0]]);
                for step in 0..p + q {
                    if step_positions.binary_search(&step).is_ok() {
                        a += 1;
                    } else {
                        b += 1;
                    }
                    facet.push(k_index[&sigma[a]] * n_l + l_index[&tau[b]]);
                }
                facets.push(facet);
            }
        }
    }
    let product = SimplicialComplex::from_facets(facets).expect("staircase facets are valid");
    let first: Vec<usize> = (0..k.vertices().len())
        .flat_map(|i| std::iter::repeat_n(k.vertices()[i], n_l))
        .collect();
    let second: Vec<usize> = (0..k.vertices().len())
        .flat_map(|_| l.vertices().iter().copied())
        .collect();
    (product, first, second)
}

/// Staircase triangulation of the product, discarding the projections.
pub fn product(k: &SimplicialComplex, l: &SimplicialComplex) -> SimplicialComplex {
    product_with_projections(k, l).0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetrahedron_boundary_edges() {
        let k = sphere(2);
        let edges = k.faces(1).unwrap();
        assert_eq!(
            edges,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        // top-degree faces of a pure complex are the facets
        assert_eq!(k.faces(2).unwrap(), k.facets().to_vec());
    }

    #[test]
    fn boundary_matrix_signs() {
        let edge = SimplicialComplex::from_facets(vec![vec![0, 1]]).unwrap();
        let d1 = edge.boundary_matrix(1).unwrap();
        assert_eq!(*d1.get(0, 0), BigInt::from(-1));
        assert_eq!(*d1.get(1, 0), BigInt::from(1));

        let tri = SimplicialComplex::from_facets(vec![vec![0, 1, 2]]).unwrap();
        let d2 = tri.boundary_matrix(2).unwrap();
        // faces in lexicographic order: [0,1], [0,2], [1,2]
        assert_eq!(*d2.get(0, 0), BigInt::from(1));
        assert_eq!(*d2.get(1, 0), BigInt::from(-1));
        assert_eq!(*d2.get(2, 0), BigInt::from(1));
    }

    #[test]
    fn boundaries_compose_to_zero() {
        for k in [
            sphere(3),
            projective_plane(),
            moore_space(3),
            product(&circle(3).unwrap(), &circle(3).unwrap()),
        ] {
            for deg in 2..=k.dim() {
                let outer = k.boundary_matrix(deg - 1).unwrap();
                let inner = k.boundary_matrix(deg).unwrap();
                assert_eq!(outer.compose_nonzero_at(&inner).unwrap(), None);
            }
        }
    }

    #[test]
    fn projective_plane_counts() {
        let rp2 = projective_plane();
        assert_eq!(rp2.vertices().len(), 6);
        assert_eq!(rp2.faces(1).unwrap().len(), 15);
        assert_eq!(rp2.faces(2).unwrap().len(), 10);
        assert_eq!(rp2.euler_characteristic(), 1);
    }

    #[test]
    fn sphere_counts() {
        let s7 = sphere(7);
        assert_eq!(s7.vertices().len(), 9);
        assert_eq!(s7.facets().len(), 9);
        assert_eq!(s7.dim(), 7);

        let s0 = sphere(0);
        assert_eq!(s0.facets(), &[vec![0], vec![1]]);
    }

    #[test]
    fn circle_is_sphere_one() {
        assert_eq!(circle(3).unwrap(), sphere(1));
        assert!(matches!(circle(2), Err(Error::MTooSmall { m: 2 })));
    }

    #[test]
    fn torus_product_counts() {
        let c = circle(3).unwrap();
        let t = product(&c, &c);
        assert_eq!(t.vertices().len(), 9);
        assert_eq!(t.facets().len(), 18);
        assert_eq!(t.faces(1).unwrap().len(), 27);
        assert_eq!(t.euler_characteristic(), 0);
    }

    #[test]
    fn product_with_point_is_identity() {
        let point = SimplicialComplex::from_facets(vec![vec![0]]).unwrap();
        let rp2 = projective_plane();
        let p = product(&point, &rp2);
        assert_eq!(p.canonical_relabel(), rp2.canonical_relabel());
        let p2 = product(&rp2, &point);
        assert_eq!(p2.canonical_relabel(), rp2.canonical_relabel());
    }

    #[test]
    fn moore_space_euler() {
        let m = moore_space(3);
        assert_eq!(m.vertices().len(), 13);
        assert_eq!(m.euler_characteristic(), 1);
        assert!(m.is_pure());
    }

    #[test]
    fn maximal_face_absorption() {
        let k =
            SimplicialComplex::from_facets(vec![vec![0, 1], vec![1, 0, 2], vec![2, 0, 1]]).unwrap();
        assert_eq!(k.facets(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn invalid_facets_rejected() {
        assert!(SimplicialComplex::from_facets(vec![]).is_err());
        assert!(SimplicialComplex::from_facets(vec![vec![]]).is_err());
        assert!(SimplicialComplex::from_facets(vec![vec![1, 1]]).is_err());
    }

    #[test]
    fn projection_maps_are_monotone_on_facets() {
        let (t, first, second) = product_with_projections(&circle(3).unwrap(), &sphere(2));
        for f in t.facets() {
            let firsts: Vec<usize> = f.iter().map(|&v| first[v]).collect();
            let seconds: Vec<usize> = f.iter().map(|&v| second[v]).collect();
            assert!(firsts.windows(2).all(|w| w[0] <= w[1]));
            assert!(seconds.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
