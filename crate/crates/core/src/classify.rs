//! The C-triviality decision procedure.
//!
//! A space is C-trivial when every complex vector bundle over it has total
//! Chern class 1. For closed connected smooth manifolds this is decided by
//! integral homology and orientability alone in every dimension up to 7 (in
//! dimension 7 the non-orientable case retains one undecided shape); above
//! that only necessary conditions are known. This module encodes those
//! criteria as a total function from `(dimension, orientability, profile)` to
//! a cited verdict.

use std::fmt;

use crate::abelian::FGAbelianGroup;
use crate::chain::{mod2_profile_from_z, Coefficients, HomologyProfile};
use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;
use crate::verify::{self, ManifoldCertificate};

/// Final outcome of the decision procedure.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Outcome {
    CTrivial,
    NotCTrivial,
    Undetermined,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::CTrivial => "c-trivial",
            Outcome::NotCTrivial => "not-c-trivial",
            Outcome::Undetermined => "undetermined",
        }
    }
}

/// A reason a profile fails to be C-trivial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Obstruction {
    /// `H^2(X; Z) != 0`: some line bundle has a nonzero first Chern class.
    NonzeroH2,
    /// Closed orientable even-dimensional manifolds carry a bundle with
    /// nonzero top Chern class via a degree-one map to the sphere.
    BottEvenOrientable,
    /// No closed surface is C-trivial.
    SurfaceDim2,
    /// No closed 4-manifold is C-trivial.
    Dim4,
    /// `H^{2i}(X; Z)` must be finite for `2 <= 2i < n`.
    EvenCohomologyInfinite,
    /// Rank constraints on odd-dimensional manifolds (all middle cohomology
    /// finite; in the non-orientable case `H^1 = Z`).
    OddDimRank,
    /// The homology shape fails the classification table for its dimension;
    /// records the first violated degree.
    TableMismatch { dim: usize, degree: usize },
    /// The profile violates mod-2 Poincare duality, so it is not the
    /// homology of any closed manifold (flag, not part of the verdict).
    DualityInconsistent,
}

impl Obstruction {
    pub fn name(self) -> String {
        match self {
            Obstruction::NonzeroH2 => "nonzero-h2".into(),
            Obstruction::BottEvenOrientable => "bott-even-orientable".into(),
            Obstruction::SurfaceDim2 => "surface-dim-2".into(),
            Obstruction::Dim4 => "dim-4".into(),
            Obstruction::EvenCohomologyInfinite => "even-cohomology-infinite".into(),
            Obstruction::OddDimRank => "odd-dim-rank".into(),
            Obstruction::TableMismatch { dim, degree } => {
                format!("table-mismatch-{dim}-at-{degree}")
            }
            Obstruction::DualityInconsistent => "duality-inconsistent".into(),
        }
    }
}

/// Identifier of a criterion quoted by a verdict. A closed enumeration: every
/// verdict cites its basis from this list.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisId {
    LowDimension,
    UniversalH2,
    BottEvenOrientable,
    NoSurface,
    NoFourManifold,
    EvenCohomologyFinite,
    OddDimensionRanks,
    Orientable3Table,
    NonOrientable3Table,
    Orientable5Table,
    NonOrientable5Table,
    NonOrientable6Table,
    Orientable7Table,
    NonOrientable7Necessary,
    HighDimensionUndecided,
    DualityFlag,
}

impl BasisId {
    pub fn name(self) -> &'static str {
        match self {
            BasisId::LowDimension => "low-dimension",
            BasisId::UniversalH2 => "universal-h2-obstruction",
            BasisId::BottEvenOrientable => "bott-even-orientable",
            BasisId::NoSurface => "no-surface",
            BasisId::NoFourManifold => "no-4-manifold",
            BasisId::EvenCohomologyFinite => "even-cohomology-finite",
            BasisId::OddDimensionRanks => "odd-dimension-ranks",
            BasisId::Orientable3Table => "orientable-3-manifold-table",
            BasisId::NonOrientable3Table => "non-orientable-3-manifold-table",
            BasisId::Orientable5Table => "orientable-5-manifold-table",
            BasisId::NonOrientable5Table => "non-orientable-5-manifold-table",
            BasisId::NonOrientable6Table => "non-orientable-6-manifold-table",
            BasisId::Orientable7Table => "orientable-7-manifold-table",
            BasisId::NonOrientable7Necessary => "non-orientable-7-manifold-necessary",
            BasisId::HighDimensionUndecided => "high-dimension-undecided",
            BasisId::DualityFlag => "duality-flag",
        }
    }

    /// One-line statement of the criterion.
    pub fn citation(self) -> &'static str {
        match self {
            BasisId::LowDimension => {
                "every closed smooth manifold of dimension at most 1 is C-trivial"
            }
            BasisId::UniversalH2 => {
                "a C-trivial space has H^2(X;Z) = 0, hence H_2 finite and H_1 torsion-free"
            }
            BasisId::BottEvenOrientable => {
                "a closed orientable even-dimensional manifold admits a bundle with nonzero top \
                 Chern class (degree-one map to the sphere plus Bott integrality), so it is \
                 never C-trivial"
            }
            BasisId::NoSurface => "no closed surface is C-trivial",
            BasisId::NoFourManifold => "no closed 4-manifold is C-trivial",
            BasisId::EvenCohomologyFinite => {
                "C-triviality forces H^{2i}(X;Z) to be a finite abelian group for 2 <= 2i < n"
            }
            BasisId::OddDimensionRanks => {
                "for odd n, C-triviality forces H^i(X;Z) finite for 0 < i < n when orientable, \
                 and H^1(X;Z) = Z with H^i(X;Z) finite for 2 <= i <= n when non-orientable"
            }
            BasisId::Orientable3Table => {
                "a closed orientable 3-manifold is C-trivial exactly when it is an integral \
                 homology 3-sphere"
            }
            BasisId::NonOrientable3Table => {
                "a closed non-orientable 3-manifold is C-trivial exactly when its integral \
                 homology is (Z, Z, Z_2, 0)"
            }
            BasisId::Orientable5Table => {
                "a closed orientable 5-manifold is C-trivial exactly when its integral homology \
                 is (Z, 0, F, 0, 0, Z) with F finite"
            }
            BasisId::NonOrientable5Table => {
                "a closed non-orientable 5-manifold is C-trivial exactly when its integral \
                 homology is (Z, Z, F, 0, Z_2, 0) with F finite"
            }
            BasisId::NonOrientable6Table => {
                "a closed non-orientable 6-manifold is C-trivial exactly when its integral \
                 homology is (Z, Z^d with d >= 1, F, Z^e, F', Z^f + Z_2, 0) with F, F' finite \
                 and Ext(F, Z_2) = Ext(F', Z_2)"
            }
            BasisId::Orientable7Table => {
                "a closed orientable 7-manifold is C-trivial exactly when its integral homology \
                 is (Z, 0, F, 0, F, 0, 0, Z) with the same finite F in degrees 2 and 4"
            }
            BasisId::NonOrientable7Necessary => {
                "a C-trivial closed non-orientable 7-manifold has integral homology \
                 (Z, Z, F, Z_2^r with r <= 1, F', 0, Z_2, 0) with Ext(F, Z_2) = Ext(F', Z_2); \
                 the shape with r = 0 is always C-trivial, the shape with r = 1 is undecided"
            }
            BasisId::HighDimensionUndecided => {
                "no complete classification is implemented above dimension 7; only necessary \
                 conditions are checked there"
            }
            BasisId::DualityFlag => {
                "the profile breaks mod-2 Poincare duality (b_k = b_{n-k}), so it is not the \
                 homology of any closed manifold; the verdict still reports the table outcome"
            }
        }
    }
}

/// The decision: outcome, why, and which criteria were used.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub outcome: Outcome,
    /// Nonempty exactly when the outcome is `NotCTrivial`.
    pub obstructions: Vec<Obstruction>,
    /// Nonempty exactly when the outcome is `Undetermined`.
    pub reasons: Vec<String>,
    /// Criteria the verdict rests on, in evaluation order.
    pub basis: Vec<BasisId>,
    /// Mod-2 duality flag: `false` marks a profile no closed manifold has.
    pub duality_consistent: bool,
}

impl Verdict {
    fn c_trivial(basis: Vec<BasisId>, duality_consistent: bool) -> Self {
        Self {
            outcome: Outcome::CTrivial,
            obstructions: Vec::new(),
            reasons: Vec::new(),
            basis,
            duality_consistent,
        }
    }

    fn not_c_trivial(
        obstructions: Vec<Obstruction>,
        basis: Vec<BasisId>,
        duality_consistent: bool,
    ) -> Self {
        debug_assert!(!obstructions.is_empty());
        Self {
            outcome: Outcome::NotCTrivial,
            obstructions,
            reasons: Vec::new(),
            basis,
            duality_consistent,
        }
    }

    fn undetermined(reasons: Vec<String>, basis: Vec<BasisId>, duality_consistent: bool) -> Self {
        debug_assert!(!reasons.is_empty());
        Self {
            outcome: Outcome::Undetermined,
            obstructions: Vec::new(),
            reasons,
            basis,
            duality_consistent,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.outcome.name())?;
        if !self.obstructions.is_empty() {
            let names: Vec<String> = self.obstructions.iter().map(|o| o.name()).collect();
            write!(f, " [{}]", names.join(", "))?;
        }
        if !self.reasons.is_empty() {
            write!(f, " ({})", self.reasons.join("; "))?;
        }
        Ok(())
    }
}

/// Renders the verdict's basis identifiers with their one-line statements.
/// Deterministic: same verdict, same text.
pub fn explain(v: &Verdict) -> String {
    let mut lines = Vec::new();
    lines.push(format!("outcome: {}", v.outcome.name()));
    for o in &v.obstructions {
        lines.push(format!("obstruction: {}", o.name()));
    }
    for r in &v.reasons {
        lines.push(format!("reason: {r}"));
    }
    for b in &v.basis {
        lines.push(format!("{}: {}", b.name(), b.citation()));
    }
    if !v.duality_consistent {
        lines.push(format!(
            "{}: {}",
            BasisId::DualityFlag.name(),
            BasisId::DualityFlag.citation()
        ));
    }
    lines.join("\n")
}

struct TableCheck {
    /// `Ok(r)` for an in-family profile (`r` is only meaningful in dimension
    /// 7 non-orientable), `Err(degree)` for the first violated degree.
    result: std::result::Result<usize, usize>,
    basis: BasisId,
}

fn zero() -> FGAbelianGroup {
    FGAbelianGroup::trivial()
}

fn z() -> FGAbelianGroup {
    FGAbelianGroup::free(1)
}

fn z2() -> FGAbelianGroup {
    FGAbelianGroup::new(0, [2])
}

/// Classification-table membership for dimensions 3..=7. Degrees 0 and `n`
/// are consistency-checked before this point.
fn table_check(groups: &[FGAbelianGroup], n: usize, orientable: bool) -> Option<TableCheck> {
    let fail = |basis: BasisId, degree: usize| {
        Some(TableCheck {
            result: Err(degree),
            basis,
        })
    };
    let pass = |basis: BasisId, r: usize| {
        Some(TableCheck {
            result: Ok(r),
            basis,
        })
    };
    match (n, orientable) {
        (3, true) => {
            for k in [1usize, 2] {
                if groups[k] != zero() {
                    return fail(BasisId::Orientable3Table, k);
                }
            }
            pass(BasisId::Orientable3Table, 0)
        }
        (3, false) => {
            if groups[1] != z() {
                return fail(BasisId::NonOrientable3Table, 1);
            }
            if groups[2] != z2() {
                return fail(BasisId::NonOrientable3Table, 2);
            }
            pass(BasisId::NonOrientable3Table, 0)
        }
        (5, true) => {
            if groups[1] != zero() {
                return fail(BasisId::Orientable5Table, 1);
            }
            if !groups[2].is_finite() {
                return fail(BasisId::Orientable5Table, 2);
            }
            if groups[3] != zero() {
                return fail(BasisId::Orientable5Table, 3);
            }
            if groups[4] != zero() {
                return fail(BasisId::Orientable5Table, 4);
            }
            pass(BasisId::Orientable5Table, 0)
        }
        (5, false) => {
            if groups[1] != z() {
                return fail(BasisId::NonOrientable5Table, 1);
            }
            if !groups[2].is_finite() {
                return fail(BasisId::NonOrientable5Table, 2);
            }
            if groups[3] != zero() {
                return fail(BasisId::NonOrientable5Table, 3);
            }
            if groups[4] != z2() {
                return fail(BasisId::NonOrientable5Table, 4);
            }
            pass(BasisId::NonOrientable5Table, 0)
        }
        (6, false) => {
            if groups[1].rank() < 1 || !groups[1].is_torsion_free() {
                return fail(BasisId::NonOrientable6Table, 1);
            }
            if !groups[2].is_finite() {
                return fail(BasisId::NonOrientable6Table, 2);
            }
            if !groups[3].is_torsion_free() {
                return fail(BasisId::NonOrientable6Table, 3);
            }
            if !groups[4].is_finite() {
                return fail(BasisId::NonOrientable6Table, 4);
            }
            if groups[5].torsion() != z2() {
                return fail(BasisId::NonOrientable6Table, 5);
            }
            if groups[2].ext_z2_dim() != groups[4].ext_z2_dim() {
                return fail(BasisId::NonOrientable6Table, 4);
            }
            pass(BasisId::NonOrientable6Table, 0)
        }
        (7, true) => {
            for k in [1usize, 3, 5, 6] {
                if groups[k] != zero() {
                    return fail(BasisId::Orientable7Table, k);
                }
            }
            if !groups[2].is_finite() {
                return fail(BasisId::Orientable7Table, 2);
            }
            if !groups[4].is_finite() {
                return fail(BasisId::Orientable7Table, 4);
            }
            if !groups[2].iso(&groups[4]) {
                return fail(BasisId::Orientable7Table, 4);
            }
            pass(BasisId::Orientable7Table, 0)
        }
        (7, false) => {
            if groups[1] != z() {
                return fail(BasisId::NonOrientable7Necessary, 1);
            }
            if !groups[2].is_finite() {
                return fail(BasisId::NonOrientable7Necessary, 2);
            }
            let r = if groups[3] == zero() {
                0
            } else if groups[3] == z2() {
                1
            } else {
                return fail(BasisId::NonOrientable7Necessary, 3);
            };
            if !groups[4].is_finite() {
                return fail(BasisId::NonOrientable7Necessary, 4);
            }
            if groups[5] != zero() {
                return fail(BasisId::NonOrientable7Necessary, 5);
            }
            if groups[6] != z2() {
                return fail(BasisId::NonOrientable7Necessary, 6);
            }
            if groups[2].ext_z2_dim() != groups[4].ext_z2_dim() {
                return fail(BasisId::NonOrientable7Necessary, 4);
            }
            pass(BasisId::NonOrientable7Necessary, r)
        }
        _ => None,
    }
}

/// Decides C-triviality from an integral homology profile, an orientability
/// flag (trusted as given) and the dimension.
pub fn classify(profile: &HomologyProfile, orientable: bool, n: usize) -> Result<Verdict> {
    if profile.coefficients != Coefficients::Z {
        return Err(Error::CoefficientMismatch {
            expected: "Z",
            got: profile.coefficients.name(),
        });
    }
    if profile.dim != n || profile.groups.len() != n + 1 {
        return Err(Error::ProfileInconsistent {
            reason: format!(
                "profile has {} groups for dimension {n}",
                profile.groups.len()
            ),
        });
    }
    let groups = &profile.groups;
    if groups[0] != z() {
        return Err(Error::ProfileInconsistent {
            reason: format!("H_0 = {} but a connected space has H_0 = Z", groups[0]),
        });
    }
    if n >= 1 {
        let top = &groups[n];
        if orientable && *top != z() {
            return Err(Error::ProfileInconsistent {
                reason: format!("orientable but H_{n} = {top} instead of Z"),
            });
        }
        if !orientable && *top != zero() {
            return Err(Error::ProfileInconsistent {
                reason: format!("non-orientable but H_{n} = {top} instead of 0"),
            });
        }
    }

    let mod2 = mod2_profile_from_z(profile)?;
    let b: Vec<usize> = mod2.groups.iter().map(FGAbelianGroup::rank).collect();
    let duality_consistent = (0..=n).all(|k| b[k] == b[n - k]);

    // General obstructions in fixed precedence order.
    let mut obstructions: Vec<Obstruction> = Vec::new();
    let mut basis: Vec<BasisId> = Vec::new();
    let h2_rank_positive = n >= 2 && groups[2].rank() > 0;
    let h1_torsion = n >= 1 && !groups[1].is_torsion_free();
    if h2_rank_positive || h1_torsion {
        obstructions.push(Obstruction::NonzeroH2);
        basis.push(BasisId::UniversalH2);
    }
    if n >= 2 && n % 2 == 0 && orientable {
        obstructions.push(Obstruction::BottEvenOrientable);
        basis.push(BasisId::BottEvenOrientable);
    }
    if n == 2 {
        obstructions.push(Obstruction::SurfaceDim2);
        basis.push(BasisId::NoSurface);
    }
    if n == 4 {
        obstructions.push(Obstruction::Dim4);
        basis.push(BasisId::NoFourManifold);
    }
    if (1..).take_while(|i| 2 * i < n).any(|i| groups[2 * i].rank() > 0) {
        obstructions.push(Obstruction::EvenCohomologyInfinite);
        basis.push(BasisId::EvenCohomologyFinite);
    }
    if n >= 3 && n % 2 == 1 {
        let violated = if orientable {
            (1..n).any(|i| groups[i].rank() > 0)
        } else {
            groups[1].rank() != 1 || (2..n).any(|i| groups[i].rank() > 0)
        };
        if violated {
            obstructions.push(Obstruction::OddDimRank);
            basis.push(BasisId::OddDimensionRanks);
        }
    }

    // Dimension tables.
    if n <= 1 {
        basis.push(BasisId::LowDimension);
        return Ok(Verdict::c_trivial(basis, duality_consistent));
    }
    if n == 2 || n == 4 || (n == 6 && orientable) {
        // Obstructed outright; the dimension-specific obstruction is already
        // in the list.
        return Ok(Verdict::not_c_trivial(obstructions, basis, duality_consistent));
    }
    if n >= 8 {
        basis.push(BasisId::HighDimensionUndecided);
        return Ok(if obstructions.is_empty() {
            Verdict::undetermined(
                vec![
                    "all implemented necessary conditions hold; no classification is known in \
                     this dimension"
                        .into(),
                ],
                basis,
                duality_consistent,
            )
        } else {
            Verdict::not_c_trivial(obstructions, basis, duality_consistent)
        });
    }

    let check = table_check(groups, n, orientable)
        .expect("dimensions 3, 5, 6 (non-orientable), 7 are covered by tables");
    basis.push(check.basis);
    match check.result {
        Ok(r) => {
            debug_assert!(
                obstructions.is_empty(),
                "table profiles satisfy the general necessary conditions"
            );
            if n == 7 && !orientable && r == 1 {
                Ok(Verdict::undetermined(
                    vec![
                        "necessary conditions hold with H_3 = Z_2; sufficiency is not known for \
                         this shape"
                            .into(),
                    ],
                    basis,
                    duality_consistent,
                ))
            } else {
                Ok(Verdict::c_trivial(basis, duality_consistent))
            }
        }
        Err(degree) => {
            obstructions.push(Obstruction::TableMismatch { dim: n, degree });
            Ok(Verdict::not_c_trivial(obstructions, basis, duality_consistent))
        }
    }
}

/// End-to-end pipeline on a facet complex: structural certification,
/// homology, then classification. Refuses to classify anything that is not a
/// closed connected pseudomanifold.
pub fn classify_complex(
    k: &SimplicialComplex,
) -> Result<(ManifoldCertificate, HomologyProfile, Verdict)> {
    let analysis = verify::analyze(k)?;
    let cert = analysis.certificate;
    if !cert.closed {
        return Err(Error::NotAClosedManifold { check: "closed" });
    }
    if !cert.connected {
        return Err(Error::NotAClosedManifold { check: "connected" });
    }
    let orientable = cert
        .orientable
        .expect("closed connected complexes get an orientation verdict");
    let verdict = classify(&analysis.homology, orientable, cert.dim)?;
    Ok((cert, analysis.homology, verdict))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{circle, product, projective_plane, sphere};

    fn profile(dim: usize, groups: Vec<FGAbelianGroup>) -> HomologyProfile {
        HomologyProfile::new(dim, Coefficients::Z, groups).unwrap()
    }

    fn tor(ms: &[i64]) -> FGAbelianGroup {
        FGAbelianGroup::new(0, ms.iter().copied())
    }

    #[test]
    fn homology_three_sphere_is_c_trivial() {
        let p = profile(3, vec![z(), zero(), zero(), z()]);
        let v = classify(&p, true, 3).unwrap();
        assert_eq!(v.outcome, Outcome::CTrivial);
        assert_eq!(v.basis, vec![BasisId::Orientable3Table]);
        assert!(v.duality_consistent);
    }

    #[test]
    fn lens_space_profile_fails_on_h2() {
        let p = profile(3, vec![z(), tor(&[2]), zero(), z()]);
        let v = classify(&p, true, 3).unwrap();
        assert_eq!(v.outcome, Outcome::NotCTrivial);
        assert!(v.obstructions.contains(&Obstruction::NonzeroH2));
    }

    #[test]
    fn no_four_manifold_is_c_trivial() {
        let p = profile(4, vec![z(), zero(), zero(), zero(), z()]);
        let v = classify(&p, true, 4).unwrap();
        assert_eq!(v.outcome, Outcome::NotCTrivial);
        assert!(v.obstructions.contains(&Obstruction::Dim4));
        let p = profile(4, vec![z(), z(), tor(&[2]), zero(), zero()]);
        let v = classify(&p, false, 4).unwrap();
        assert!(v.obstructions.contains(&Obstruction::Dim4));
    }

    #[test]
    fn ruberman_style_profiles_are_c_trivial() {
        let five = profile(5, vec![z(), zero(), tor(&[3, 3]), zero(), zero(), z()]);
        assert_eq!(classify(&five, true, 5).unwrap().outcome, Outcome::CTrivial);

        let seven = profile(
            7,
            vec![z(), zero(), tor(&[3]), zero(), tor(&[3]), zero(), zero(), z()],
        );
        assert_eq!(classify(&seven, true, 7).unwrap().outcome, Outcome::CTrivial);
    }

    #[test]
    fn seven_orientable_needs_equal_torsion() {
        let p = profile(
            7,
            vec![z(), zero(), tor(&[3]), zero(), tor(&[9]), zero(), zero(), z()],
        );
        let v = classify(&p, true, 7).unwrap();
        assert_eq!(v.outcome, Outcome::NotCTrivial);
        assert!(v
            .obstructions
            .contains(&Obstruction::TableMismatch { dim: 7, degree: 4 }));
    }

    #[test]
    fn non_orientable_seven_r_cases() {
        let base = |r: &[i64]| {
            profile(
                7,
                vec![
                    z(),
                    z(),
                    tor(&[2]),
                    tor(r),
                    tor(&[2]),
                    zero(),
                    tor(&[2]),
                    zero(),
                ],
            )
        };
        let v0 = classify(&base(&[]), false, 7).unwrap();
        assert_eq!(v0.outcome, Outcome::CTrivial);
        let v1 = classify(&base(&[2]), false, 7).unwrap();
        assert_eq!(v1.outcome, Outcome::Undetermined);
        assert!(!v1.reasons.is_empty());
        let v_bad = classify(&base(&[4]), false, 7).unwrap();
        assert_eq!(v_bad.outcome, Outcome::NotCTrivial);
    }

    #[test]
    fn circle_profile_is_c_trivial() {
        let p = profile(1, vec![z(), z()]);
        let v = classify(&p, true, 1).unwrap();
        assert_eq!(v.outcome, Outcome::CTrivial);
        assert_eq!(v.basis, vec![BasisId::LowDimension]);
    }

    #[test]
    fn six_dimensional_cases() {
        // Orientable: Bott applies regardless of the profile.
        let p = profile(6, vec![z(), z(), zero(), zero(), zero(), zero(), z()]);
        let v = classify(&p, true, 6).unwrap();
        assert!(v.obstructions.contains(&Obstruction::BottEvenOrientable));

        // Non-orientable table positive case.
        let p = profile(
            6,
            vec![z(), z(), tor(&[2]), z(), tor(&[4]), FGAbelianGroup::new(1, [2]), zero()],
        );
        let v = classify(&p, false, 6).unwrap();
        assert_eq!(v.outcome, Outcome::CTrivial, "{v:?}");

        // Ext mismatch in degree 4.
        let p = profile(
            6,
            vec![z(), z(), tor(&[2]), z(), tor(&[3]), FGAbelianGroup::new(1, [2]), zero()],
        );
        let v = classify(&p, false, 6).unwrap();
        assert_eq!(v.outcome, Outcome::NotCTrivial);
    }

    #[test]
    fn profile_consistency_errors() {
        let p = profile(3, vec![tor(&[2]), zero(), zero(), z()]);
        assert!(matches!(
            classify(&p, true, 3),
            Err(Error::ProfileInconsistent { .. })
        ));
        let p = profile(3, vec![z(), zero(), zero(), z()]);
        assert!(matches!(
            classify(&p, false, 3),
            Err(Error::ProfileInconsistent { .. })
        ));
        let p = profile(3, vec![z(), zero(), zero(), zero()]);
        assert!(matches!(
            classify(&p, true, 3),
            Err(Error::ProfileInconsistent { .. })
        ));
    }

    #[test]
    fn duality_flag_on_impossible_profile() {
        // H_3 = Z_2 forces b_3 = b_4 contribution asymmetry for n = 5.
        let p = profile(5, vec![z(), zero(), zero(), tor(&[2]), zero(), z()]);
        let v = classify(&p, true, 5).unwrap();
        assert!(!v.duality_consistent);
        assert_eq!(v.outcome, Outcome::NotCTrivial);
        assert!(explain(&v).contains("duality"));
    }

    #[test]
    fn high_dimension_runs_necessary_conditions_only() {
        let sphere9 = profile(
            9,
            vec![
                z(),
                zero(),
                zero(),
                zero(),
                zero(),
                zero(),
                zero(),
                zero(),
                zero(),
                z(),
            ],
        );
        let v = classify(&sphere9, true, 9).unwrap();
        assert_eq!(v.outcome, Outcome::Undetermined);

        let mut groups = sphere9.groups.clone();
        groups[4] = z();
        let p = profile(9, groups);
        let v = classify(&p, true, 9).unwrap();
        assert_eq!(v.outcome, Outcome::NotCTrivial);
        assert!(v.obstructions.contains(&Obstruction::EvenCohomologyInfinite));
        assert!(v.obstructions.contains(&Obstruction::OddDimRank));
    }

    #[test]
    fn classify_complex_pipeline() {
        let (cert, _, v) = classify_complex(&sphere(5)).unwrap();
        assert_eq!(cert.orientable, Some(true));
        assert_eq!(v.outcome, Outcome::CTrivial);

        let (_, _, v) = classify_complex(&sphere(6)).unwrap();
        assert_eq!(v.outcome, Outcome::NotCTrivial);
        assert!(v.obstructions.contains(&Obstruction::BottEvenOrientable));

        let torus = product(&circle(3).unwrap(), &circle(3).unwrap());
        let (_, _, v) = classify_complex(&torus).unwrap();
        assert!(v.obstructions.contains(&Obstruction::SurfaceDim2));

        let (cert, _, v) = classify_complex(&projective_plane()).unwrap();
        assert_eq!(cert.orientable, Some(false));
        assert_eq!(v.outcome, Outcome::NotCTrivial);

        let open = SimplicialComplex::from_facets(vec![vec![0, 1, 2]]).unwrap();
        assert!(matches!(
            classify_complex(&open),
            Err(Error::NotAClosedManifold { check: "closed" })
        ));
    }

    #[test]
    fn explain_is_deterministic_and_cites_tables() {
        let p = profile(3, vec![z(), zero(), zero(), z()]);
        let v = classify(&p, true, 3).unwrap();
        let text = explain(&v);
        assert!(text.contains("integral homology 3-sphere"));
        assert_eq!(text, explain(&classify(&p, true, 3).unwrap()));
    }
}
