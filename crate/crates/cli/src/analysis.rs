//! Shared analysis pipeline for the CLI commands, the table runner, and the
//! acceptance suite.

use zigzag_core::error::Result;
use zigzag_core::symmetry::{self, AutomorphismGroup};
use zigzag_core::zigzag::IntersectionVector;
use zigzag_core::{Complex, FlagIndex, ValidationReport, ZigzagDecomposition};

pub struct Analysis {
    pub report: ValidationReport,
    pub flag_count: u64,
    pub orientable: bool,
    pub zd: ZigzagDecomposition,
    pub int_vectors: Vec<IntersectionVector>,
    pub group: Option<GroupReport>,
}

pub struct GroupReport {
    pub order: usize,
    pub flag_orbits: usize,
    pub z_transitive: bool,
    pub z_uniform: bool,
    pub zigzag_orbits: usize,
}

pub fn analyze(k: &Complex, cap: u64, with_group: bool) -> Result<Analysis> {
    let report = k.validate_structure();
    k.check_axioms()?;
    let fi = FlagIndex::build(k, cap)?;
    let zd = ZigzagDecomposition::build(&fi);
    let int_vectors = (0..zd.len() as u32).map(|i| zd.int_vector(i)).collect();
    let group = if with_group {
        let g: AutomorphismGroup = symmetry::automorphisms(&fi);
        Some(GroupReport {
            order: g.order(),
            flag_orbits: g.orbit_count,
            z_transitive: symmetry::is_z_transitive(&g, &zd),
            z_uniform: symmetry::is_z_uniform(&zd),
            zigzag_orbits: symmetry::zigzag_orbit_count(&g, &zd),
        })
    } else {
        None
    };
    Ok(Analysis {
        report,
        flag_count: fi.len() as u64,
        orientable: fi.is_orientable(),
        zd,
        int_vectors,
        group,
    })
}

/// Multiset equality against an expected intersection vector given in any
/// order.
pub fn int_vector_matches(got: &IntersectionVector, expected: &[((u32, u32), u32)]) -> bool {
    let mut want: Vec<((u32, u32), u32)> = expected
        .iter()
        .map(|&((a, b), m)| ((a.min(b), a.max(b)), m))
        .collect();
    want.sort_by_key(|&((a, b), _)| (a + b, a));
    got == &want
}

/// Per-zigzag coverability: every zigzag's intersection vector must equal one
/// of the listed alternatives.
pub fn int_alternatives_cover(
    vectors: &[IntersectionVector],
    alternatives: &[&[((u32, u32), u32)]],
) -> bool {
    vectors
        .iter()
        .all(|v| alternatives.iter().any(|alt| int_vector_matches(v, alt)))
}

pub fn text_report(analysis: &Analysis, pieces: &[&str]) -> String {
    let mut out = String::new();
    let zd = &analysis.zd;
    if pieces.contains(&"validate") {
        out.push_str(&analysis.report.to_string());
    }
    out.push_str(&format!("flags: {}\n", analysis.flag_count));
    out.push_str(&format!("orientable: {}\n", analysis.orientable));
    if pieces.contains(&"z") || pieces.contains(&"int") {
        out.push_str(&format!("z-vector: {}\n", zd.z_vector_string()));
        out.push_str(&format!("zigzags: {}\n", zd.len()));
        out.push_str(&format!("z-knotted: {}\n", zd.is_z_knotted()));
        out.push_str(&format!(
            "zigzag graph connected: {}\n",
            zd.zigzag_graph_connected()
        ));
    }
    if pieces.contains(&"int") {
        for (i, z) in zd.zigzags().iter().enumerate() {
            out.push_str(&format!(
                "zigzag {i}: length {} signature ({},{}){} Int: {}\n",
                z.length,
                z.signature.0,
                z.signature.1,
                if z.self_reverse { " self-reverse" } else { "" },
                zigzag_core::zigzag::format_int_vector(&analysis.int_vectors[i]),
            ));
        }
    }
    if let Some(g) = &analysis.group {
        if pieces.contains(&"group") {
            out.push_str(&format!("|Aut|: {}\n", g.order));
        }
        if pieces.contains(&"orbits") {
            out.push_str(&format!("flag orbits: {}\n", g.flag_orbits));
            out.push_str(&format!("zigzag orbits: {}\n", g.zigzag_orbits));
            out.push_str(&format!("z-transitive: {}\n", g.z_transitive));
            out.push_str(&format!("z-uniform: {}\n", g.z_uniform));
        }
    }
    out
}

/// CSV: one row per zigzag with fixed columns
/// `id,length,n_i,n_ii,self_reverse,int_vector`, then a summary row
/// `z-vector,,,,,"..."`.
pub fn csv_report(analysis: &Analysis) -> String {
    let zd = &analysis.zd;
    let mut out = String::from("id,length,n_i,n_ii,self_reverse,int_vector\n");
    for (i, z) in zd.zigzags().iter().enumerate() {
        out.push_str(&format!(
            "{i},{},{},{},{},\"{}\"\n",
            z.length,
            z.signature.0,
            z.signature.1,
            z.self_reverse,
            zigzag_core::zigzag::format_int_vector(&analysis.int_vectors[i]),
        ));
    }
    out.push_str(&format!("z-vector,,,,,\"{}\"\n", zd.z_vector_string()));
    out
}
