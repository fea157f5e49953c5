//! File formats and serialized documents.
//!
//! Three input formats:
//!
//! - facet files (`.scx`): UTF-8 text, `#` starts a comment, each non-blank
//!   line is one facet as whitespace-separated nonnegative integer vertex
//!   labels;
//! - chain-complex files: JSON with `dims` (chain ranks per degree) and
//!   `boundaries` (row-major integer matrices, entry `k` mapping degree
//!   `k+1` to degree `k`);
//! - profile files: JSON with `dim` and per-degree `groups`, each a free
//!   `rank` plus `torsion` invariant factors.
//!
//! Output documents (homology, certificate, verdict, sq2) are serialized
//! with fixed field order, so identical inputs produce byte-identical JSON.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::chain::{ChainComplex, Coefficients, HomologyProfile};
use crate::classify::{explain, Verdict};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::abelian::FGAbelianGroup;
use crate::simplicial::SimplicialComplex;
use crate::verify::ManifoldCertificate;

// --- facet files -------------------------------------------------------------

/// Parses a facet file. Errors carry 1-based line numbers.
pub fn parse_scx(text: &str) -> Result<SimplicialComplex> {
    let mut facets = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut facet = Vec::new();
        for token in line.split_whitespace() {
            let v: usize = token.parse().map_err(|_| Error::Parse {
                line: idx + 1,
                msg: format!("expected a nonnegative integer vertex label, got `{token}`"),
            })?;
            facet.push(v);
        }
        facets.push(facet);
    }
    if facets.is_empty() {
        return Err(Error::Parse {
            line: 1,
            msg: "no facets in file".into(),
        });
    }
    SimplicialComplex::from_facets(facets)
}

/// Serializes a complex as a facet file, one facet per line.
pub fn emit_scx(k: &SimplicialComplex, name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("# {name}\n"));
    for f in k.facets() {
        let labels: Vec<String> = f.iter().map(usize::to_string).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

// --- chain-complex files ------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct ChainComplexDoc {
    schema: String,
    dims: Vec<usize>,
    boundaries: Vec<Vec<i64>>,
}

pub const CHAIN_SCHEMA: &str = "chain-complex/1";

pub fn parse_chain_complex(text: &str) -> Result<ChainComplex> {
    let doc: ChainComplexDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    if doc.schema != CHAIN_SCHEMA {
        return Err(Error::Parse {
            line: 1,
            msg: format!("expected schema `{CHAIN_SCHEMA}`, got `{}`", doc.schema),
        });
    }
    if doc.boundaries.len() + 1 != doc.dims.len() {
        return Err(Error::Parse {
            line: 1,
            msg: format!(
                "{} boundary matrices do not fit {} degrees",
                doc.boundaries.len(),
                doc.dims.len()
            ),
        });
    }
    let mut boundaries = Vec::with_capacity(doc.boundaries.len());
    for (k, flat) in doc.boundaries.iter().enumerate() {
        let rows = doc.dims[k];
        let cols = doc.dims[k + 1];
        if flat.len() != rows * cols {
            return Err(Error::Parse {
                line: 1,
                msg: format!(
                    "boundary {} has {} entries, expected {rows} x {cols}",
                    k + 1,
                    flat.len()
                ),
            });
        }
        let rows_vec: Vec<Vec<i64>> = flat.chunks(cols.max(1)).map(<[i64]>::to_vec).collect();
        let m = if rows == 0 || cols == 0 {
            IntMatrix::zeros(rows, cols)
        } else {
            IntMatrix::from_rows(rows_vec)
        };
        boundaries.push(m);
    }
    ChainComplex::new(doc.dims, boundaries)
}

pub fn emit_chain_complex(c: &ChainComplex) -> String {
    let boundaries: Vec<Vec<i64>> = (1..=c.top_dim())
        .map(|k| {
            let m = c.boundary(k);
            m.entries()
                .iter()
                .map(|e| e.to_i64().expect("chain-complex file entries fit in i64"))
                .collect()
        })
        .collect();
    let doc = ChainComplexDoc {
        schema: CHAIN_SCHEMA.to_string(),
        dims: c.ranks().to_vec(),
        boundaries,
    };
    serde_json::to_string_pretty(&doc).expect("document serializes")
}

// --- profile files -------------------------------------------------------------

#[derive(Serialize, Deserialize, Clone)]
pub struct GroupDoc {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct ProfileDoc {
    schema: String,
    dim: usize,
    groups: Vec<GroupDoc>,
}

pub const PROFILE_SCHEMA: &str = "profile/1";

pub fn parse_profile(text: &str) -> Result<HomologyProfile> {
    let doc: ProfileDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    if doc.schema != PROFILE_SCHEMA {
        return Err(Error::Parse {
            line: 1,
            msg: format!("expected schema `{PROFILE_SCHEMA}`, got `{}`", doc.schema),
        });
    }
    for (k, g) in doc.groups.iter().enumerate() {
        if g.torsion.iter().any(|&t| t < 2) {
            return Err(Error::Parse {
                line: 1,
                msg: format!("degree {k}: torsion coefficients must be >= 2"),
            });
        }
    }
    let groups = doc
        .groups
        .into_iter()
        .map(|g| FGAbelianGroup::new(g.rank, g.torsion))
        .collect();
    HomologyProfile::new(doc.dim, Coefficients::Z, groups)
}

pub fn emit_profile(p: &HomologyProfile) -> Result<String> {
    let doc = ProfileDoc {
        schema: PROFILE_SCHEMA.to_string(),
        dim: p.dim,
        groups: p
            .groups
            .iter()
            .map(group_doc)
            .collect::<Result<Vec<_>>>()?,
    };
    Ok(serde_json::to_string_pretty(&doc).expect("document serializes"))
}

fn group_doc(g: &FGAbelianGroup) -> Result<GroupDoc> {
    let torsion = g
        .invariant_factors()
        .iter()
        .map(|d| {
            d.to_u64().ok_or_else(|| {
                Error::Internal(format!("torsion coefficient {d} exceeds the file format range"))
            })
        })
        .collect::<Result<Vec<u64>>>()?;
    Ok(GroupDoc {
        rank: g.rank(),
        torsion,
    })
}

// --- output documents -----------------------------------------------------------

#[derive(Serialize)]
pub struct HomologyOutputDoc {
    pub schema: &'static str,
    pub input: String,
    pub dim: usize,
    pub coefficients: &'static str,
    pub groups: Vec<GroupDoc>,
    pub display: Vec<String>,
}

pub fn homology_doc(input: &str, p: &HomologyProfile) -> Result<HomologyOutputDoc> {
    Ok(HomologyOutputDoc {
        schema: "homology/1",
        input: input.to_string(),
        dim: p.dim,
        coefficients: p.coefficients.name(),
        groups: p
            .groups
            .iter()
            .map(group_doc)
            .collect::<Result<Vec<_>>>()?,
        display: p.groups.iter().map(|g| g.to_string()).collect(),
    })
}

#[derive(Serialize)]
pub struct CertificateDoc {
    pub schema: &'static str,
    pub input: String,
    pub dim: usize,
    pub closed: bool,
    pub connected: bool,
    pub orientable: Option<bool>,
    pub duality_ok: bool,
    pub euler_ok: bool,
    pub euler_characteristic: i64,
}

pub fn certificate_doc(input: &str, c: &ManifoldCertificate, euler: i64) -> CertificateDoc {
    CertificateDoc {
        schema: "certificate/1",
        input: input.to_string(),
        dim: c.dim,
        closed: c.closed,
        connected: c.connected,
        orientable: c.orientable,
        duality_ok: c.duality_ok,
        euler_ok: c.euler_ok,
        euler_characteristic: euler,
    }
}

#[derive(Serialize)]
pub struct VerdictInputEcho {
    pub dim: usize,
    pub orientable: bool,
    pub groups: Vec<GroupDoc>,
    pub display: Vec<String>,
}

#[derive(Serialize)]
pub struct VerdictDoc {
    pub schema: &'static str,
    pub input: VerdictInputEcho,
    pub outcome: &'static str,
    pub obstructions: Vec<String>,
    pub reasons: Vec<String>,
    pub basis: Vec<String>,
    pub citations: Vec<String>,
    pub duality_consistent: bool,
}

pub fn verdict_doc(
    profile: &HomologyProfile,
    orientable: bool,
    verdict: &Verdict,
) -> Result<VerdictDoc> {
    Ok(VerdictDoc {
        schema: "verdict/1",
        input: VerdictInputEcho {
            dim: profile.dim,
            orientable,
            groups: profile
                .groups
                .iter()
                .map(group_doc)
                .collect::<Result<Vec<_>>>()?,
            display: profile.groups.iter().map(|g| g.to_string()).collect(),
        },
        outcome: verdict.outcome.name(),
        obstructions: verdict.obstructions.iter().map(|o| o.name()).collect(),
        reasons: verdict.reasons.clone(),
        basis: verdict.basis.iter().map(|b| b.name().to_string()).collect(),
        citations: verdict.basis.iter().map(|b| b.citation().to_string()).collect(),
        duality_consistent: verdict.duality_consistent,
    })
}

/// The full explanation text for a verdict (same content the CLI prints).
pub fn verdict_text(verdict: &Verdict) -> String {
    explain(verdict)
}

#[derive(Serialize)]
pub struct Sq2Doc {
    pub schema: &'static str,
    pub input: String,
    pub degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    /// Rows of the Sq^2 matrix over GF(2), one '0'/'1' string per target
    /// basis class.
    pub matrix: Vec<String>,
    pub rank: usize,
    pub injective: bool,
    /// Included for degree 4 on complexes of dimension <= 7.
    pub sq2_rho2_injective: Option<bool>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{projective_plane, sphere};

    #[test]
    fn scx_round_trip() {
        let rp2 = projective_plane();
        let text = emit_scx(&rp2, "rp2");
        let parsed = parse_scx(&text).unwrap();
        assert_eq!(parsed, rp2);
    }

    #[test]
    fn scx_parse_errors_carry_line_numbers() {
        let bad = "0 1 2\n3 x 5\n";
        match parse_scx(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            parse_scx("# only comments\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn scx_comments_and_blanks_are_ignored() {
        let text = "# header\n\n0 1 2 # inline\n0 1 3\n0 2 3\n1 2 3\n";
        let parsed = parse_scx(text).unwrap();
        assert_eq!(parsed, sphere(2));
    }

    #[test]
    fn chain_complex_round_trip() {
        let lens = ChainComplex::new(
            vec![1, 1, 1, 1],
            vec![
                IntMatrix::zeros(1, 1),
                IntMatrix::from_rows(vec![vec![5]]),
                IntMatrix::zeros(1, 1),
            ],
        )
        .unwrap();
        let text = emit_chain_complex(&lens);
        let parsed = parse_chain_complex(&text).unwrap();
        assert_eq!(parsed, lens);
    }

    #[test]
    fn chain_complex_rejects_nonzero_composition() {
        let text = r#"{"schema":"chain-complex/1","dims":[1,1,1],"boundaries":[[1],[1]]}"#;
        assert!(matches!(
            parse_chain_complex(text),
            Err(Error::CompositionNonzero { .. })
        ));
    }

    #[test]
    fn profile_round_trip() {
        let p = HomologyProfile::new(
            5,
            Coefficients::Z,
            vec![
                FGAbelianGroup::free(1),
                FGAbelianGroup::trivial(),
                FGAbelianGroup::new(0, [3u32, 3]),
                FGAbelianGroup::trivial(),
                FGAbelianGroup::trivial(),
                FGAbelianGroup::free(1),
            ],
        )
        .unwrap();
        let text = emit_profile(&p).unwrap();
        let parsed = parse_profile(&text).unwrap();
        assert_eq!(parsed, p);
    }

    #[test]
    fn profile_rejects_bad_torsion() {
        let text = r#"{"schema":"profile/1","dim":1,"groups":[{"rank":1,"torsion":[1]},{"rank":1,"torsion":[]}]}"#;
        assert!(parse_profile(text).is_err());
    }
}
