//! Built-in corpus of complexes, chain complexes and homology-profile
//! fixtures, with the expected results frozen next to each entry.
//!
//! The corpus is the regression backbone: every entry's expected profile and
//! verdict are recomputed by the pipeline in the test suites, and the CLI can
//! list and emit any entry as a file.

use crate::chain::{ChainComplex, Coefficients, HomologyProfile};
use crate::classify::{classify, classify_complex, Outcome};
use crate::error::{Error, Result};
use crate::io;
use crate::abelian::FGAbelianGroup;
use crate::matrix::IntMatrix;
use crate::simplicial::{
    circle, moore_space, product, projective_plane, sphere, SimplicialComplex,
};
use crate::verify;

/// What an entry holds.
#[derive(Clone)]
pub enum CorpusPayload {
    Complex(SimplicialComplex),
    Chain(ChainComplex),
    Profile(HomologyProfile),
}

impl CorpusPayload {
    pub fn kind(&self) -> &'static str {
        match self {
            CorpusPayload::Complex(_) => "complex",
            CorpusPayload::Chain(_) => "chain-complex",
            CorpusPayload::Profile(_) => "profile",
        }
    }
}

/// Frozen expectations for an entry.
#[derive(Clone)]
pub struct Expected {
    /// Expected integral homology (for complexes and chain complexes this is
    /// what the pipeline must reproduce).
    pub profile: HomologyProfile,
    /// Orientability flag used for classification (derived for complexes,
    /// trusted for profile and chain fixtures).
    pub orientable: Option<bool>,
    /// Expected classification outcome; `None` when the pipeline must refuse
    /// with the named failing certificate check instead.
    pub outcome: Option<Outcome>,
    pub refused_check: Option<&'static str>,
}

pub struct CorpusEntry {
    pub name: &'static str,
    pub provenance: &'static str,
    pub payload: CorpusPayload,
    pub expected: Expected,
}

fn z() -> FGAbelianGroup {
    FGAbelianGroup::free(1)
}

fn zn(r: usize) -> FGAbelianGroup {
    FGAbelianGroup::free(r)
}

fn zero() -> FGAbelianGroup {
    FGAbelianGroup::trivial()
}

fn tor(ms: &[u64]) -> FGAbelianGroup {
    FGAbelianGroup::new(0, ms.iter().copied())
}

fn profile(groups: Vec<FGAbelianGroup>) -> HomologyProfile {
    let dim = groups.len() - 1;
    HomologyProfile::new(dim, Coefficients::Z, groups).expect("fixture profile lengths match")
}

fn sphere_profile(n: usize) -> HomologyProfile {
    let groups = (0..=n)
        .map(|k| if k == 0 || k == n { z() } else { zero() })
        .collect();
    profile(groups)
}

/// Standard small chain complex of the lens space `L(p,1)`: four chain groups
/// of rank one with boundaries `0, p, 0`.
pub fn lens_complex(p: i64) -> ChainComplex {
    ChainComplex::new(
        vec![1, 1, 1, 1],
        vec![
            IntMatrix::zeros(1, 1),
            IntMatrix::from_rows(vec![vec![p]]),
            IntMatrix::zeros(1, 1),
        ],
    )
    .expect("lens boundaries compose to zero")
}

/// Homology profile of a simply connected 5-manifold whose only reduced
/// homology off the ends is `Z_k + Z_k` in degree 2 (surgery construction).
pub fn ruberman5_profile(k: u64) -> HomologyProfile {
    profile(vec![z(), zero(), tor(&[k, k]), zero(), zero(), z()])
}

/// Homology profile of a simply connected 7-manifold with `Z_k` in degrees 2
/// and 4 (same surgery family, one dimension up).
pub fn ruberman7_profile(k: u64) -> HomologyProfile {
    profile(vec![z(), zero(), tor(&[k]), zero(), tor(&[k]), zero(), zero(), z()])
}

fn entries() -> Vec<CorpusEntry> {
    let mut list = Vec::new();

    for n in 1..=7usize {
        let name: &'static str = match n {
            1 => "sphere1",
            2 => "sphere2",
            3 => "sphere3",
            4 => "sphere4",
            5 => "sphere5",
            6 => "sphere6",
            _ => "sphere7",
        };
        let outcome = if n % 2 == 1 {
            Outcome::CTrivial
        } else {
            Outcome::NotCTrivial
        };
        list.push(CorpusEntry {
            name,
            provenance: "boundary of a simplex; the canonical triangulated sphere",
            payload: CorpusPayload::Complex(sphere(n)),
            expected: Expected {
                profile: sphere_profile(n),
                orientable: Some(true),
                outcome: Some(outcome),
                refused_check: None,
            },
        });
    }

    list.push(CorpusEntry {
        name: "circle5",
        provenance: "pentagon triangulation of the circle",
        payload: CorpusPayload::Complex(circle(5).expect("5 >= 3")),
        expected: Expected {
            profile: profile(vec![z(), z()]),
            orientable: Some(true),
            outcome: Some(Outcome::CTrivial),
            refused_check: None,
        },
    });

    let c3 = circle(3).expect("3 >= 3");
    let torus = product(&c3, &c3);
    list.push(CorpusEntry {
        name: "torus",
        provenance: "staircase triangulation of the product of two circles",
        payload: CorpusPayload::Complex(torus.clone()),
        expected: Expected {
            profile: profile(vec![z(), zn(2), z()]),
            orientable: Some(true),
            outcome: Some(Outcome::NotCTrivial),
            refused_check: None,
        },
    });

    list.push(CorpusEntry {
        name: "three_torus",
        provenance: "staircase triangulation of the product of three circles",
        payload: CorpusPayload::Complex(product(&torus, &c3)),
        expected: Expected {
            profile: profile(vec![z(), zn(3), zn(3), z()]),
            orientable: Some(true),
            outcome: Some(Outcome::NotCTrivial),
            refused_check: None,
        },
    });

    let rp2 = projective_plane();
    list.push(CorpusEntry {
        name: "rp2",
        provenance: "6-vertex projective plane (antipodal quotient of the icosahedron)",
        payload: CorpusPayload::Complex(rp2.clone()),
        expected: Expected {
            profile: profile(vec![z(), tor(&[2]), zero()]),
            orientable: Some(false),
            outcome: Some(Outcome::NotCTrivial),
            refused_check: None,
        },
    });

    list.push(CorpusEntry {
        name: "rp2_x_circle",
        provenance: "product of the 6-vertex projective plane with a circle",
        payload: CorpusPayload::Complex(product(&rp2, &c3)),
        expected: Expected {
            profile: profile(vec![z(), FGAbelianGroup::new(1, [2u64]), tor(&[2]), zero()]),
            orientable: Some(false),
            outcome: Some(Outcome::NotCTrivial),
            refused_check: None,
        },
    });

    list.push(CorpusEntry {
        name: "rp2_x_rp2",
        provenance: "product of two 6-vertex projective planes",
        payload: CorpusPayload::Complex(product(&rp2, &rp2)),
        expected: Expected {
            profile: profile(vec![z(), tor(&[2, 2]), tor(&[2]), tor(&[2]), zero()]),
            orientable: Some(false),
            outcome: Some(Outcome::NotCTrivial),
            refused_check: None,
        },
    });

    list.push(CorpusEntry {
        name: "moore3",
        provenance: "disk wrapped three times around a circle; H_1 = Z_3",
        payload: CorpusPayload::Complex(moore_space(3)),
        expected: Expected {
            profile: profile(vec![z(), tor(&[3]), zero()]),
            orientable: None,
            outcome: None,
            refused_check: Some("closed"),
        },
    });

    list.push(CorpusEntry {
        name: "moore3_x_sphere2",
        provenance: "product of the Z_3 Moore complex with the 2-sphere; odd torsion in H^4",
        payload: CorpusPayload::Complex(product(&moore_space(3), &sphere(2))),
        expected: Expected {
            profile: profile(vec![z(), tor(&[3]), z(), tor(&[3]), zero()]),
            orientable: None,
            outcome: None,
            refused_check: Some("closed"),
        },
    });

    for (name, p) in [("lens_2_1", 2i64), ("lens_3_1", 3), ("lens_5_1", 5)] {
        list.push(CorpusEntry {
            name,
            provenance: "standard rank-one chain complex of the lens space L(p,1)",
            payload: CorpusPayload::Chain(lens_complex(p)),
            expected: Expected {
                profile: profile(vec![z(), tor(&[p as u64]), zero(), z()]),
                orientable: Some(true),
                outcome: Some(Outcome::NotCTrivial),
                refused_check: None,
            },
        });
    }

    list.push(CorpusEntry {
        name: "nonorientable3",
        provenance: "closed non-orientable 3-manifolds with this homology exist in the \
                     small triangulation censuses",
        payload: CorpusPayload::Profile(profile(vec![z(), z(), tor(&[2]), zero()])),
        expected: Expected {
            profile: profile(vec![z(), z(), tor(&[2]), zero()]),
            orientable: Some(false),
            outcome: Some(Outcome::CTrivial),
            refused_check: None,
        },
    });

    list.push(CorpusEntry {
        name: "ruberman5_k3",
        provenance: "simply connected 5-manifold from surgery with Z_3 + Z_3 in degree 2",
        payload: CorpusPayload::Profile(ruberman5_profile(3)),
        expected: Expected {
            profile: ruberman5_profile(3),
            orientable: Some(true),
            outcome: Some(Outcome::CTrivial),
            refused_check: None,
        },
    });

    list.push(CorpusEntry {
        name: "ruberman7_k3",
        provenance: "simply connected 7-manifold from surgery with Z_3 in degrees 2 and 4",
        payload: CorpusPayload::Profile(ruberman7_profile(3)),
        expected: Expected {
            profile: ruberman7_profile(3),
            orientable: Some(true),
            outcome: Some(Outcome::CTrivial),
            refused_check: None,
        },
    });

    list.push(CorpusEntry {
        name: "nonorientable7_r0",
        provenance: "the necessary non-orientable 7-dimensional homology shape with r = 0",
        payload: CorpusPayload::Profile(profile(vec![
            z(),
            z(),
            tor(&[2]),
            zero(),
            tor(&[2]),
            zero(),
            tor(&[2]),
            zero(),
        ])),
        expected: Expected {
            profile: profile(vec![
                z(),
                z(),
                tor(&[2]),
                zero(),
                tor(&[2]),
                zero(),
                tor(&[2]),
                zero(),
            ]),
            orientable: Some(false),
            outcome: Some(Outcome::CTrivial),
            refused_check: None,
        },
    });

    list.push(CorpusEntry {
        name: "nonorientable7_r1",
        provenance: "the necessary non-orientable 7-dimensional homology shape with r = 1",
        payload: CorpusPayload::Profile(profile(vec![
            z(),
            z(),
            tor(&[2]),
            tor(&[2]),
            tor(&[2]),
            zero(),
            tor(&[2]),
            zero(),
        ])),
        expected: Expected {
            profile: profile(vec![
                z(),
                z(),
                tor(&[2]),
                tor(&[2]),
                tor(&[2]),
                zero(),
                tor(&[2]),
                zero(),
            ]),
            orientable: Some(false),
            outcome: Some(Outcome::Undetermined),
            refused_check: None,
        },
    });

    list.push(CorpusEntry {
        name: "broken_pinch",
        provenance: "three triangles sharing one edge; deliberately not a manifold",
        payload: CorpusPayload::Complex(
            SimplicialComplex::from_facets(vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]])
                .expect("valid facets"),
        ),
        expected: Expected {
            profile: profile(vec![z(), zero(), zero()]),
            orientable: None,
            outcome: None,
            refused_check: Some("closed"),
        },
    });

    list
}

/// The deterministic catalog.
pub fn corpus_list() -> Vec<CorpusEntry> {
    entries()
}

pub fn corpus_entry(name: &str) -> Result<CorpusEntry> {
    entries()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownEntry { name: name.into() })
}

/// Serializes an entry as a file: facet text for complexes, JSON for chain
/// complexes and profiles. Returns a suggested file name and the payload.
pub fn corpus_emit(name: &str) -> Result<(String, String)> {
    let entry = corpus_entry(name)?;
    match &entry.payload {
        CorpusPayload::Complex(k) => Ok((format!("{name}.scx"), io::emit_scx(k, name))),
        CorpusPayload::Chain(c) => Ok((format!("{name}.json"), io::emit_chain_complex(c))),
        CorpusPayload::Profile(p) => Ok((format!("{name}.json"), io::emit_profile(p)?)),
    }
}

/// Runs the full pipeline on one entry and reports a deterministic JSON
/// value: verdict documents for classifiable entries, refusal records for
/// the non-manifold fixtures.
pub fn evaluate_entry(entry: &CorpusEntry) -> Result<serde_json::Value> {
    match &entry.payload {
        CorpusPayload::Complex(k) => match classify_complex(k) {
            Ok((cert, hz, verdict)) => {
                let orientable = cert.orientable.unwrap_or(false);
                let doc = io::verdict_doc(&hz, orientable, &verdict)?;
                let cert_doc = io::certificate_doc(entry.name, &cert, hz.euler_characteristic());
                Ok(serde_json::json!({
                    "name": entry.name,
                    "certificate": serde_json::to_value(cert_doc).expect("serializes"),
                    "verdict": serde_json::to_value(doc).expect("serializes"),
                }))
            }
            Err(Error::NotAClosedManifold { check }) => Ok(serde_json::json!({
                "name": entry.name,
                "refused": check,
            })),
            Err(e) => Err(e),
        },
        CorpusPayload::Chain(c) => {
            let hz = c.homology();
            let orientable = entry.expected.orientable.unwrap_or(false);
            let verdict = classify(&hz, orientable, hz.dim)?;
            let doc = io::verdict_doc(&hz, orientable, &verdict)?;
            Ok(serde_json::json!({
                "name": entry.name,
                "verdict": serde_json::to_value(doc).expect("serializes"),
            }))
        }
        CorpusPayload::Profile(p) => {
            let orientable = entry.expected.orientable.unwrap_or(false);
            let verdict = classify(p, orientable, p.dim)?;
            let doc = io::verdict_doc(p, orientable, &verdict)?;
            Ok(serde_json::json!({
                "name": entry.name,
                "verdict": serde_json::to_value(doc).expect("serializes"),
            }))
        }
    }
}

/// The integral homology the pipeline computes for an entry (profiles are
/// returned as stored).
pub fn computed_profile(entry: &CorpusEntry) -> Result<HomologyProfile> {
    match &entry.payload {
        CorpusPayload::Complex(k) => Ok(verify::analyze(k)?.homology),
        CorpusPayload::Chain(c) => Ok(c.homology()),
        CorpusPayload::Profile(p) => Ok(p.clone()),
    }
}
