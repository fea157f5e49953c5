use std::time::Instant;
use ctriv_core::mod2::Mod2CohomologyBasis;
use ctriv_core::simplicial::{product_with_projections, projective_plane};
use ctriv_core::steenrod::{cup, pullback, sq2, sq2_rho2_injective, CupContext};

fn main() {
    let t0 = Instant::now();
    let rp2 = projective_plane();
    let (prod, first, second) = product_with_projections(&rp2, &rp2);
    println!("product built: {:?}, facets={}", t0.elapsed(), prod.facets().len());

    let t = Instant::now();
    let ctx = CupContext::new(&prod);
    let ctx_rp2 = CupContext::new(&rp2);
    println!("contexts: {:?}", t.elapsed());
    println!("face counts: {:?}", prod.face_counts());

    let t = Instant::now();
    let a_factor = Mod2CohomologyBasis::compute(ctx_rp2.chain(), 1).unwrap().rep(0);
    let a = pullback(&ctx, &first, &ctx_rp2, &a_factor).unwrap();
    let b = pullback(&ctx, &second, &ctx_rp2, &a_factor).unwrap();
    println!("pullbacks: {:?}", t.elapsed());

    let t = Instant::now();
    let h2 = Mod2CohomologyBasis::compute(ctx.chain(), 2).unwrap();
    let h4 = Mod2CohomologyBasis::compute(ctx.chain(), 4).unwrap();
    println!("mod2 bases: {:?} (h2 dim {}, h4 dim {})", t.elapsed(), h2.dim(), h4.dim());

    let t = Instant::now();
    let mixed = cup(&ctx, &a, &b).unwrap();
    let sq_mixed = sq2(&ctx, &mixed).unwrap();
    let a2 = cup(&ctx, &a, &a).unwrap();
    let b2 = cup(&ctx, &b, &b).unwrap();
    let a2b2 = cup(&ctx, &a2, &b2).unwrap();
    let sq_coords = h4.express(&sq_mixed).unwrap();
    let oracle_coords = h4.express(&a2b2).unwrap();
    println!("cup/sq2 evals: {:?}", t.elapsed());
    println!("Sq2(ab) coords = {:?}, a^2 b^2 coords = {:?}", sq_coords, oracle_coords);
    assert_eq!(sq_coords, oracle_coords);
    assert!(!sq_coords.is_zero());

    let t = Instant::now();
    let inj = sq2_rho2_injective(&ctx).unwrap();
    println!("sq2_rho2_injective = {} in {:?}", inj, t.elapsed());

    println!("total: {:?}", t0.elapsed());
}
