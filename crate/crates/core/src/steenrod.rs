//! Simplicial cup-i products and the Steenrod square Sq^2.
//!
//! The cup-i product of cochains `u` (degree p) and `v` (degree q) on an
//! `(p+q-i)`-simplex is evaluated by cutting the vertex range at `i+1`
//! strictly increasing positions into `i+2` intervals that overlap in their
//! endpoints; even-numbered intervals feed `u`, odd-numbered ones feed `v`,
//! and only splittings with the right face dimensions contribute. For `i = 0`
//! this is the front-face/back-face cup product. The index bookkeeping here is
//! pinned by two facts checked exhaustively in the tests: the coboundary
//! identity
//!
//! `d(u cup_i v) = u cup_{i-1} v + v cup_{i-1} u + du cup_i v + u cup_i dv`
//!
//! over the two-element field (with `cup_{-1} = 0`), and `u cup_p u = u` on
//! degree-p cochains, which normalizes `Sq^0 = id`.

use std::collections::HashMap;

use itertools::Itertools;

use crate::chain::{integral_cohomology_generators, ChainComplex};
use crate::error::{Error, Result};
use crate::gf2::{BitVec, Gf2Matrix};
use crate::mod2::{coboundary_z2, is_cocycle_z2, rho2, Mod2Cochain, Mod2CohomologyBasis};
use crate::simplicial::SimplicialComplex;

/// A simplicial complex prepared for cochain-level products: the chain
/// complex plus ordered simplex tables and index maps per degree.
pub struct CupContext {
    complex: SimplicialComplex,
    chain: ChainComplex,
    faces: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl CupContext {
    pub fn new(complex: &SimplicialComplex) -> Self {
        let chain = ChainComplex::from_simplicial(complex);
        let faces: Vec<Vec<Vec<usize>>> = (0..=complex.dim())
            .map(|q| complex.faces(q).expect("degree in range"))
            .collect();
        let index = faces
            .iter()
            .map(|list| {
                list.iter()
                    .enumerate()
                    .map(|(i, f)| (f.clone(), i))
                    .collect()
            })
            .collect();
        Self {
            complex: complex.clone(),
            chain,
            faces,
            index,
        }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn chain(&self) -> &ChainComplex {
        &self.chain
    }

    pub fn dim(&self) -> usize {
        self.complex.dim()
    }

    /// Ordered `q`-simplices; empty above the dimension.
    pub fn simplices(&self, q: usize) -> &[Vec<usize>] {
        self.faces.get(q).map_or(&[], Vec::as_slice)
    }

    pub fn simplex_count(&self, q: usize) -> usize {
        self.simplices(q).len()
    }

    fn face_id(&self, q: usize, simplex: &[usize]) -> Option<usize> {
        self.index.get(q)?.get(simplex).copied()
    }

    fn check_cochain(&self, u: &Mod2Cochain) -> Result<()> {
        if u.basis_size() != self.simplex_count(u.degree()) {
            return Err(Error::ComplexMismatch {
                degree: u.degree(),
                left: u.basis_size(),
                right: self.simplex_count(u.degree()),
            });
        }
        Ok(())
    }
}

/// The cup-i product `u cup_i v` of mod-2 cochains.
///
/// Requires `i <= min(deg u, deg v)`; the result has degree
/// `deg u + deg v - i` and is the zero cochain when that exceeds the
/// dimension of the complex.
pub fn cup_i(ctx: &CupContext, u: &Mod2Cochain, v: &Mod2Cochain, i: usize) -> Result<Mod2Cochain> {
    ctx.check_cochain(u)?;
    ctx.check_cochain(v)?;
    let p = u.degree();
    let q = v.degree();
    if i > p.min(q) {
        return Err(Error::IndexOutOfRange { i, p, q });
    }
    let r = p + q - i;
    let simplices = ctx.simplices(r);
    let mut out = BitVec::zeros(simplices.len());
    let mut u_part: Vec<usize> = Vec::with_capacity(p + 1);
    let mut v_part: Vec<usize> = Vec::with_capacity(q + 1);
    for (s, simplex) in simplices.iter().enumerate() {
        let mut value = false;
        for cuts in (0..=r).combinations(i + 1) {
            u_part.clear();
            v_part.clear();
            let mut start = 0usize;
            for block in 0..=i + 1 {
                let end = if block <= i { cuts[block] } else { r };
                let side = if block % 2 == 0 {
                    &mut u_part
                } else {
                    &mut v_part
                };
                side.extend(start..=end);
                start = end;
            }
            if u_part.len() != p + 1 {
                continue;
            }
            debug_assert_eq!(v_part.len(), q + 1);
            let u_face: Vec<usize> = u_part.iter().map(|&k| simplex[k]).collect();
            let v_face: Vec<usize> = v_part.iter().map(|&k| simplex[k]).collect();
            let u_bit = u.eval(ctx.face_id(p, &u_face).expect("face of a simplex"));
            let v_bit = v.eval(ctx.face_id(q, &v_face).expect("face of a simplex"));
            value ^= u_bit & v_bit;
        }
        if value {
            out.set(s, true);
        }
    }
    Ok(Mod2Cochain::from_bits(r, out))
}

/// The cup product (`cup_0`).
pub fn cup(ctx: &CupContext, u: &Mod2Cochain, v: &Mod2Cochain) -> Result<Mod2Cochain> {
    cup_i(ctx, u, v, 0)
}

/// The Steenrod square `Sq^2` on a mod-2 cocycle of degree `q`: the class of
/// `x cup_{q-2} x` for `q >= 2` and zero below that.
///
/// Rejects non-cocycles; cocycles map to cocycles, and coboundaries to
/// coboundaries, so this descends to cohomology classes.
pub fn sq2(ctx: &CupContext, x: &Mod2Cochain) -> Result<Mod2Cochain> {
    ctx.check_cochain(x)?;
    let q = x.degree();
    if !is_cocycle_z2(ctx.chain(), x) {
        return Err(Error::NotACocycle { degree: q });
    }
    if q < 2 {
        return Ok(Mod2Cochain::zero(q + 2, ctx.simplex_count(q + 2)));
    }
    cup_i(ctx, x, x, q - 2)
}

/// Pullback of a mod-2 cochain along a simplicial vertex map.
///
/// `vertex_map[w]` is the image of vertex `w` of the domain complex inside
/// the codomain of `u`. Simplices with degenerate image contribute zero;
/// a nondegenerate image that is not a face of the codomain complex means the
/// map was not simplicial, which is an error.
pub fn pullback(
    domain: &CupContext,
    vertex_map: &[usize],
    codomain: &CupContext,
    u: &Mod2Cochain,
) -> Result<Mod2Cochain> {
    codomain.check_cochain(u)?;
    let q = u.degree();
    let simplices = domain.simplices(q);
    let mut out = BitVec::zeros(simplices.len());
    for (s, simplex) in simplices.iter().enumerate() {
        let mut image: Vec<usize> = simplex.iter().map(|&w| vertex_map[w]).collect();
        image.sort_unstable();
        image.dedup();
        if image.len() != q + 1 {
            continue; // degenerate image
        }
        let Some(id) = codomain.face_id(q, &image) else {
            return Err(Error::NotSimplicialMap {
                simplex: simplex.clone(),
            });
        };
        if u.eval(id) {
            out.set(s, true);
        }
    }
    Ok(Mod2Cochain::from_bits(q, out))
}

/// Decides whether the composition `H^4(X; Z) -> H^4(X; Z_2) -> H^6(X; Z_2)`
/// of coefficient reduction followed by `Sq^2` is injective.
///
/// Structure of the test: any class of infinite order, of odd order, or of
/// order divisible by four is killed by reduction into an elementary
/// 2-group's worth of target, so a nontrivial such class forces `false`
/// immediately. What remains is an elementary abelian 2-group `Z_2^k`,
/// on which reduction is injective; the composition is then injective exactly
/// when the `k` columns `Sq^2(rho_2(generator))`, expressed in a basis of
/// `H^6(X; Z_2)`, have full rank over the two-element field.
///
/// Only stated (and only used) for complexes of dimension at most 7.
pub fn sq2_rho2_injective(ctx: &CupContext) -> Result<bool> {
    let dim = ctx.dim();
    if dim > 7 {
        return Err(Error::DimensionTooLarge { dim });
    }
    if dim < 4 {
        return Ok(true); // H^4 = 0, nothing to kill
    }
    let generators = integral_cohomology_generators(ctx.chain(), 4)?;
    if generators.is_empty() {
        return Ok(true);
    }
    let two = num_bigint::BigInt::from(2);
    for g in &generators {
        match &g.order {
            None => return Ok(false),
            Some(d) if *d != two => return Ok(false),
            Some(_) => {}
        }
    }
    // Elementary case: rank test of Sq^2 on the reduced generators.
    let k = generators.len();
    if dim < 6 {
        // The target H^6 vanishes below dimension 6, so Sq^2 o rho_2 = 0.
        return Ok(false);
    }
    let target = Mod2CohomologyBasis::compute(ctx.chain(), 6)?;
    let mut columns = Vec::with_capacity(k);
    for g in &generators {
        let reduced = rho2(ctx.chain(), 4, &g.cocycle)?;
        let squared = sq2(ctx, &reduced)?;
        columns.push(target.express(&squared)?);
    }
    let matrix = Gf2Matrix::from_columns(target.dim(), &columns);
    Ok(matrix.rank() == k)
}

/// Deterministic pseudo-random cochains for identity testing.
pub fn random_cochain(ctx: &CupContext, degree: usize, seed: u64) -> Mod2Cochain {
    let n = ctx.simplex_count(degree);
    let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
    let mut bits = BitVec::zeros(n);
    for i in 0..n {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        if state & 1 == 1 {
            bits.set(i, true);
        }
    }
    Mod2Cochain::from_bits(degree, bits)
}

/// Checks the cup-i coboundary identity for one pair of cochains at one `i`.
///
/// With `d` the mod-2 coboundary, the identity is
/// `d(u cup_i v) + u cup_{i-1} v + v cup_{i-1} u + du cup_i v + u cup_i dv = 0`.
pub fn coboundary_identity_holds(
    ctx: &CupContext,
    u: &Mod2Cochain,
    v: &Mod2Cochain,
    i: usize,
) -> Result<bool> {
    let chain = ctx.chain();
    let lhs = coboundary_z2(chain, &cup_i(ctx, u, v, i)?);
    let mut rhs = Mod2Cochain::zero(lhs.degree(), lhs.basis_size());
    if i > 0 {
        rhs = rhs.add(&cup_i(ctx, u, v, i - 1)?)?;
        rhs = rhs.add(&cup_i(ctx, v, u, i - 1)?)?;
    }
    let du = coboundary_z2(chain, u);
    let dv = coboundary_z2(chain, v);
    if i <= du.degree().min(v.degree()) {
        rhs = rhs.add(&cup_i(ctx, &du, v, i)?)?;
    }
    if i <= u.degree().min(dv.degree()) {
        rhs = rhs.add(&cup_i(ctx, u, &dv, i)?)?;
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{circle, product, projective_plane, sphere};

    fn contexts() -> Vec<(&'static str, CupContext)> {
        vec![
            ("sphere2", CupContext::new(&sphere(2))),
            ("rp2", CupContext::new(&projective_plane())),
            (
                "torus",
                CupContext::new(&product(&circle(3).unwrap(), &circle(3).unwrap())),
            ),
            ("moore3", CupContext::new(&crate::simplicial::moore_space(3))),
        ]
    }

    #[test]
    fn coboundary_identity_on_random_cochains() {
        for (name, ctx) in contexts() {
            let dim = ctx.dim();
            let mut seed = 0xc0ffee;
            for p in 0..=dim {
                for q in 0..=dim {
                    for i in 0..=p.min(q) {
                        for round in 0..6 {
                            seed += 1;
                            let u = random_cochain(&ctx, p, seed);
                            let v = random_cochain(&ctx, q, seed ^ 0xabcdef);
                            assert!(
                                coboundary_identity_holds(&ctx, &u, &v, i).unwrap(),
                                "{name}: identity fails at p={p} q={q} i={i} round={round}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn top_cup_self_is_identity_on_cochains() {
        for (name, ctx) in contexts() {
            for p in 0..=ctx.dim() {
                let u = random_cochain(&ctx, p, 99 + p as u64);
                let self_cup = cup_i(&ctx, &u, &u, p).unwrap();
                assert_eq!(self_cup, u, "{name}: u cup_{p} u != u");
            }
        }
    }

    #[test]
    fn cup_with_unit_is_identity() {
        for (_, ctx) in contexts() {
            let ones = Mod2Cochain::from_indices(
                0,
                ctx.simplex_count(0),
                &(0..ctx.simplex_count(0)).collect::<Vec<_>>(),
            );
            for q in 0..=ctx.dim() {
                let v = random_cochain(&ctx, q, 5 + q as u64);
                assert_eq!(cup(&ctx, &ones, &v).unwrap(), v);
                assert_eq!(cup(&ctx, &v, &ones).unwrap(), v);
            }
        }
    }

    #[test]
    fn cup_commutator_is_exactly_the_cup1_coboundary() {
        // For 1-cocycles u, v: u cup v + v cup u = d(u cup_1 v).
        let ctx = CupContext::new(&product(&circle(3).unwrap(), &circle(3).unwrap()));
        let basis = Mod2CohomologyBasis::compute(ctx.chain(), 1).unwrap();
        assert_eq!(basis.dim(), 2);
        let u = basis.rep(0);
        let v = basis.rep(1);
        let commutator = cup(&ctx, &u, &v)
            .unwrap()
            .add(&cup(&ctx, &v, &u).unwrap())
            .unwrap();
        let correction = coboundary_z2(ctx.chain(), &cup_i(&ctx, &u, &v, 1).unwrap());
        assert_eq!(commutator, correction);
    }

    #[test]
    fn torus_cup_pairing_is_nonzero() {
        let ctx = CupContext::new(&product(&circle(3).unwrap(), &circle(3).unwrap()));
        let h1 = Mod2CohomologyBasis::compute(ctx.chain(), 1).unwrap();
        let h2 = Mod2CohomologyBasis::compute(ctx.chain(), 2).unwrap();
        assert_eq!(h2.dim(), 1);
        let w = cup(&ctx, &h1.rep(0), &h1.rep(1)).unwrap();
        let coords = h2.express(&w).unwrap();
        assert!(!coords.is_zero(), "generators pair to the top class");
    }

    #[test]
    fn rp2_cup_square_is_top_class() {
        let ctx = CupContext::new(&projective_plane());
        let h1 = Mod2CohomologyBasis::compute(ctx.chain(), 1).unwrap();
        let h2 = Mod2CohomologyBasis::compute(ctx.chain(), 2).unwrap();
        let a = h1.rep(0);
        let square = cup(&ctx, &a, &a).unwrap();
        assert!(!h2.express(&square).unwrap().is_zero());
        // And sq2 on the degree-1 class is zero by definition.
        let sq = sq2(&ctx, &a).unwrap();
        assert!(sq.is_zero());
    }

    #[test]
    fn sq2_equals_cup_square_in_degree_two() {
        let ctx = CupContext::new(&product(&circle(3).unwrap(), &circle(3).unwrap()));
        let h2 = Mod2CohomologyBasis::compute(ctx.chain(), 2).unwrap();
        for idx in 0..h2.dim() {
            let x = h2.rep(idx);
            let left = sq2(&ctx, &x).unwrap();
            let right = cup(&ctx, &x, &x).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn sq2_rejects_non_cocycles() {
        let ctx = CupContext::new(&sphere(2));
        let not_cocycle = Mod2Cochain::from_indices(1, ctx.simplex_count(1), &[0]);
        assert!(matches!(
            sq2(&ctx, &not_cocycle),
            Err(Error::NotACocycle { degree: 1 })
        ));
    }

    #[test]
    fn injectivity_channel_basic_cases() {
        // H^4 = 0: trivially injective.
        assert!(sq2_rho2_injective(&CupContext::new(&sphere(3))).unwrap());
        assert!(sq2_rho2_injective(&CupContext::new(&sphere(7))).unwrap());
        // H^4 contains Z: infinite order kills injectivity.
        assert!(!sq2_rho2_injective(&CupContext::new(&sphere(4))).unwrap());
        // Dimension hypothesis.
        assert!(matches!(
            sq2_rho2_injective(&CupContext::new(&sphere(8))),
            Err(Error::DimensionTooLarge { dim: 8 })
        ));
    }

    #[test]
    fn pullback_of_cocycle_is_cocycle() {
        let rp2 = projective_plane();
        let c3 = circle(3).unwrap();
        let (prod, first, _second) = crate::simplicial::product_with_projections(&rp2, &c3);
        let ctx_prod = CupContext::new(&prod);
        let ctx_rp2 = CupContext::new(&rp2);
        let a = Mod2CohomologyBasis::compute(ctx_rp2.chain(), 1)
            .unwrap()
            .rep(0);
        let pulled = pullback(&ctx_prod, &first, &ctx_rp2, &a).unwrap();
        assert!(is_cocycle_z2(ctx_prod.chain(), &pulled));
        assert!(!pulled.is_zero());
        let h1 = Mod2CohomologyBasis::compute(ctx_prod.chain(), 1).unwrap();
        assert!(!h1.class_is_zero(&pulled).unwrap());
    }
}
