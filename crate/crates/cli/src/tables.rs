//! Golden z-structure tables and their reproduction runner.
//!
//! Each row pins the exact z-vector string and the intersection-vector
//! multiset(s) of one named complex. Rows whose published intersection data
//! lists alternatives are compared by per-zigzag coverability. z-vector
//! comparison is byte-exact; intersection vectors compare as multisets.

use std::time::Instant;

use rayon::prelude::*;
use zigzag_core::error::Result;
use zigzag_core::families::{self, Family};
use zigzag_core::ops;
use zigzag_core::wythoff;
use zigzag_core::{Complex, FaceRef};

use crate::analysis::{analyze, int_alternatives_cover};

type Int = &'static [((u32, u32), u32)];

#[derive(Debug, Clone, Copy)]
pub enum Build {
    Fam(&'static str, usize),
    Wythoff(&'static str, usize, &'static [usize]),
    Prism(&'static str, usize),
    PrismOfWythoff(&'static str, usize, &'static [usize]),
    PrismOfSnub(&'static str),
    Pyr(&'static str),
    BPyr(&'static str),
    Augmented021,
    Snub24,
    Medial600,
}

fn family(tag: &str, param: usize) -> Result<Complex> {
    let fam = match tag {
        "alpha" => Family::Alpha { d: param },
        "beta" => Family::Beta { d: param },
        "gamma" => Family::Gamma { d: param },
        "half_cube" => Family::HalfCube { d: param },
        "icosahedron" => Family::Icosahedron,
        "dodecahedron" => Family::Dodecahedron,
        "great_dodecahedron" => Family::GreatDodecahedron,
        "snub_cube" => Family::SnubCube,
        "snub_dodecahedron" => Family::SnubDodecahedron,
        "petersen" => Family::Petersen,
        "cell600" => Family::Cell600,
        "cell24" => Family::Cell24,
        "folded_cube" => Family::FoldedCube { d: param },
        other => panic!("unknown table family {other}"),
    };
    fam.build()
}

impl Build {
    pub fn build(&self) -> Result<Complex> {
        Ok(match self {
            Build::Fam(tag, p) => family(tag, *p)?,
            Build::Wythoff(tag, p, v) => wythoff::wythoff(&family(tag, *p)?, v)?,
            Build::Prism(tag, p) => ops::product(&family(tag, *p)?, &families::segment()),
            Build::PrismOfWythoff(tag, p, v) => ops::product(
                &wythoff::wythoff(&family(tag, *p)?, v)?,
                &families::segment(),
            ),
            Build::PrismOfSnub(tag) => ops::product(&family(tag, 0)?, &families::segment()),
            Build::Pyr(tag) => ops::pyramid(&family(tag, 0)?),
            Build::BPyr(tag) => ops::bipyramid(&family(tag, 0)?),
            Build::Augmented021 => {
                let med = wythoff::wythoff(&families::simplex(4)?, &[1])?;
                let sets = med.vertex_sets();
                let d = med.dim();
                let facet = (0..med.size(d))
                    .position(|i| sets[d][i].len() == 6)
                    .expect("octahedral facet of the rectified 4-simplex");
                ops::augment(&med, FaceRef { dim: d, idx: facet })?
            }
            Build::Snub24 => families::snub24()?,
            Build::Medial600 => wythoff::medial(&families::cell600())?,
        })
    }
}

pub struct TableRow {
    pub label: &'static str,
    pub build: Build,
    pub z: &'static str,
    pub int_alts: &'static [Int],
    pub deep: bool,
}

const fn row(label: &'static str, build: Build, z: &'static str, int_alts: &'static [Int]) -> TableRow {
    TableRow {
        label,
        build,
        z,
        int_alts,
        deep: false,
    }
}

pub fn table1() -> Vec<TableRow> {
    vec![
        row("alpha_3", Build::Fam("alpha", 3), "4^3", &[&[((1, 1), 2)]]),
        row("alpha_4", Build::Fam("alpha", 4), "5^{12}", &[&[((0, 1), 5)]]),
        row("alpha_5", Build::Fam("alpha", 5), "6^{60}", &[&[((0, 1), 6)]]),
        row("alpha_6", Build::Fam("alpha", 6), "7^{360}", &[&[((0, 1), 7)]]),
        row("alpha_7", Build::Fam("alpha", 7), "8^{2520}", &[&[((0, 1), 8)]]),
        row("beta_3", Build::Fam("beta", 3), "6^4", &[&[((0, 2), 3)]]),
        row("beta_4", Build::Fam("beta", 4), "8^{24}", &[&[((0, 2), 4)]]),
        row("beta_5", Build::Fam("beta", 5), "10^{192}", &[&[((0, 2), 5)]]),
        row("beta_6", Build::Fam("beta", 6), "12^{1920}", &[&[((0, 2), 6)]]),
        row("beta_7", Build::Fam("beta", 7), "14^{23040}", &[&[((0, 2), 7)]]),
        row(
            "dodecahedron",
            Build::Fam("dodecahedron", 0),
            "10^6",
            &[&[((0, 2), 5)]],
        ),
        row(
            "great_dodecahedron",
            Build::Fam("great_dodecahedron", 0),
            "6^{10}",
            &[&[((0, 2), 3)]],
        ),
        row(
            "petersen",
            Build::Fam("petersen", 0),
            "5^6",
            &[&[((0, 1), 5)]],
        ),
        row(
            "600-cell",
            Build::Fam("cell600", 0),
            "30^{240}",
            &[&[((0, 2), 15)]],
        ),
        row(
            "24-cell",
            Build::Fam("cell24", 0),
            "12^{48}",
            &[&[((0, 2), 6)]],
        ),
        row(
            "snub_24-cell",
            Build::Snub24,
            "20^{144}",
            &[&[((1, 1), 4), ((0, 2), 4), ((0, 4), 1)]],
        ),
        row(
            "octicosahedric",
            Build::Medial600,
            "45^{480}",
            &[&[((0, 1), 15), ((0, 2), 15)]],
        ),
        row(
            "0_21",
            Build::Wythoff("alpha", 4, &[1]),
            "15^{12}",
            &[&[((1, 2), 5)]],
        ),
        row(
            "1_21",
            Build::Fam("half_cube", 5),
            "12^{240}",
            &[&[((0, 1), 8), ((0, 2), 2)]],
        ),
        row(
            "pyr_icosahedron",
            Build::Pyr("icosahedron"),
            "25^{12}",
            &[&[((0, 10), 1), ((0, 3), 5)]],
        ),
        row(
            "bpyr_icosahedron",
            Build::BPyr("icosahedron"),
            "40^{12}",
            &[&[((0, 20), 1), ((0, 4), 5)]],
        ),
        row(
            "0_21+pyr_beta_3",
            Build::Augmented021,
            "42^6",
            &[&[((1, 1), 1), ((8, 8), 1), ((12, 12), 1)]],
        ),
    ]
}

/// Both columns of the prisms table: each entry yields two rows, the solid P
/// and Prism(P). The cube row is included (its prism is the 4-cube).
pub fn table2() -> Vec<TableRow> {
    let mut rows = Vec::new();
    struct Entry {
        label: &'static str,
        p: Build,
        prism: Build,
        z_p: &'static str,
        int_p: &'static [Int],
        z_prism: &'static str,
        int_prism: &'static [Int],
    }
    let entries = [
        Entry {
            label: "tetrahedron",
            p: Build::Fam("alpha", 3),
            prism: Build::Prism("alpha", 3),
            z_p: "4^3",
            int_p: &[&[((1, 1), 2)]],
            z_prism: "16^6",
            int_prism: &[&[((3, 3), 2), ((0, 4), 1)]],
        },
        Entry {
            label: "cube",
            p: Build::Fam("gamma", 3),
            prism: Build::Prism("gamma", 3),
            z_p: "6^4",
            int_p: &[&[((0, 2), 3)]],
            z_prism: "8^{24}",
            int_prism: &[&[((0, 2), 4)]],
        },
        Entry {
            label: "octahedron",
            p: Build::Fam("beta", 3),
            prism: Build::Prism("beta", 3),
            z_p: "6^4",
            int_p: &[&[((0, 2), 3)]],
            z_prism: "8^{24}",
            int_prism: &[&[((0, 2), 4)]],
        },
        Entry {
            label: "dodecahedron",
            p: Build::Fam("dodecahedron", 0),
            prism: Build::Prism("dodecahedron", 0),
            z_p: "10^6",
            int_p: &[&[((0, 2), 5)]],
            z_prism: "40^{12}",
            int_prism: &[&[((0, 6), 5), ((0, 10), 1)]],
        },
        Entry {
            label: "icosahedron",
            p: Build::Fam("icosahedron", 0),
            prism: Build::Prism("icosahedron", 0),
            z_p: "10^6",
            int_p: &[&[((0, 2), 5)]],
            z_prism: "40^{12}",
            int_prism: &[&[((0, 6), 5), ((0, 10), 1)]],
        },
        Entry {
            label: "cuboctahedron",
            p: Build::Wythoff("gamma", 3, &[1]),
            prism: Build::PrismOfWythoff("gamma", 3, &[1]),
            z_p: "8^6",
            int_p: &[&[((0, 2), 4)]],
            z_prism: "32^{12}",
            int_prism: &[&[((0, 6), 4), ((0, 8), 1)]],
        },
        Entry {
            label: "icosidodecahedron",
            p: Build::Wythoff("dodecahedron", 0, &[1]),
            prism: Build::PrismOfWythoff("dodecahedron", 0, &[1]),
            z_p: "10^{12}",
            int_p: &[&[((0, 2), 5)]],
            z_prism: "40^{24}",
            int_prism: &[&[((0, 6), 5), ((0, 10), 1)]],
        },
        Entry {
            label: "truncated_tetrahedron",
            p: Build::Wythoff("alpha", 3, &[0, 1]),
            prism: Build::PrismOfWythoff("alpha", 3, &[0, 1]),
            z_p: "12^3",
            int_p: &[&[((3, 3), 2)]],
            z_prism: "16^{18}",
            int_prism: &[&[((0, 3), 4), ((0, 4), 1)], &[((3, 3), 2), ((0, 4), 1)]],
        },
        Entry {
            label: "truncated_octahedron",
            p: Build::Wythoff("beta", 3, &[0, 1]),
            prism: Build::PrismOfWythoff("beta", 3, &[0, 1]),
            z_p: "12^6",
            // published as (0,4),(0,2)^3, which sums to 10 and cannot satisfy
            // the length identity for l = 12; the fourth (0,2) is forced
            int_p: &[&[((0, 4), 1), ((0, 2), 4)]],
            z_prism: "16^{36}",
            int_prism: &[&[((0, 2), 4), ((0, 4), 2)]],
        },
        Entry {
            label: "truncated_cube",
            p: Build::Wythoff("gamma", 3, &[0, 1]),
            prism: Build::PrismOfWythoff("gamma", 3, &[0, 1]),
            z_p: "18^4",
            int_p: &[&[((2, 4), 3)]],
            z_prism: "24^{24}",
            int_prism: &[
                &[((0, 2), 3), ((0, 4), 3), ((0, 6), 1)],
                &[((2, 4), 3), ((0, 6), 1)],
            ],
        },
        Entry {
            label: "truncated_icosahedron",
            p: Build::Wythoff("icosahedron", 0, &[0, 1]),
            prism: Build::PrismOfWythoff("icosahedron", 0, &[0, 1]),
            z_p: "18^{10}",
            int_p: &[&[((0, 2), 9)]],
            z_prism: "24^{60}",
            int_prism: &[&[((0, 2), 9), ((0, 6), 1)]],
        },
        Entry {
            label: "truncated_dodecahedron",
            p: Build::Wythoff("dodecahedron", 0, &[0, 1]),
            prism: Build::PrismOfWythoff("dodecahedron", 0, &[0, 1]),
            z_p: "30^6",
            int_p: &[&[((2, 4), 5)]],
            z_prism: "40^{36}",
            int_prism: &[
                &[((0, 2), 5), ((0, 4), 5), ((0, 10), 1)],
                &[((2, 4), 5), ((0, 10), 1)],
            ],
        },
        Entry {
            label: "rhombicuboctahedron",
            p: Build::Wythoff("gamma", 3, &[0, 2]),
            prism: Build::PrismOfWythoff("gamma", 3, &[0, 2]),
            z_p: "12^8",
            int_p: &[&[((0, 2), 6)]],
            z_prism: "16^{48}",
            int_prism: &[&[((0, 2), 6), ((0, 4), 1)]],
        },
        Entry {
            label: "rhombicosidodecahedron",
            p: Build::Wythoff("dodecahedron", 0, &[0, 2]),
            prism: Build::PrismOfWythoff("dodecahedron", 0, &[0, 2]),
            z_p: "20^{12}",
            int_p: &[&[((0, 2), 10)]],
            z_prism: "80^{24}",
            int_prism: &[&[((0, 6), 10), ((0, 20), 1)]],
        },
        Entry {
            label: "truncated_cuboctahedron",
            p: Build::Wythoff("gamma", 3, &[0, 1, 2]),
            prism: Build::PrismOfWythoff("gamma", 3, &[0, 1, 2]),
            z_p: "18^8",
            int_p: &[&[((0, 2), 6), ((0, 6), 1)]],
            z_prism: "24^{48}",
            int_prism: &[&[((0, 2), 6), ((0, 6), 2)]],
        },
        Entry {
            label: "truncated_icosidodecahedron",
            p: Build::Wythoff("dodecahedron", 0, &[0, 1, 2]),
            prism: Build::PrismOfWythoff("dodecahedron", 0, &[0, 1, 2]),
            z_p: "30^{12}",
            int_p: &[&[((0, 10), 1), ((0, 2), 10)]],
            z_prism: "40^{72}",
            int_prism: &[&[((0, 2), 10), ((0, 10), 2)]],
        },
        Entry {
            label: "snub_cube",
            p: Build::Fam("snub_cube", 0),
            prism: Build::PrismOfSnub("snub_cube"),
            z_p: "30_{3,0}^4",
            int_p: &[&[((4, 4), 3)]],
            z_prism: "40^{24}",
            int_prism: &[&[((0, 2), 4), ((2, 2), 4), ((0, 16), 1)]],
        },
        Entry {
            label: "snub_dodecahedron",
            p: Build::Fam("snub_dodecahedron", 0),
            prism: Build::PrismOfSnub("snub_dodecahedron"),
            z_p: "50_{5,0}^6",
            int_p: &[&[((4, 4), 5)]],
            z_prism: "200^{12}",
            int_prism: &[&[((12, 12), 5), ((0, 80), 1)]],
        },
    ];
    for e in entries {
        rows.push(TableRow {
            label: e.label,
            build: e.p,
            z: e.z_p,
            int_alts: e.int_p,
            deep: false,
        });
        rows.push(TableRow {
            label: Box::leak(format!("prism({})", e.label).into_boxed_str()),
            build: e.prism,
            z: e.z_prism,
            int_alts: e.int_prism,
            deep: false,
        });
    }
    rows
}

pub fn table3() -> Vec<TableRow> {
    vec![
        row("half_cube_3", Build::Fam("half_cube", 3), "4^3", &[&[((1, 1), 2)]]),
        row("half_cube_4", Build::Fam("half_cube", 4), "8^{24}", &[&[((0, 2), 4)]]),
        row(
            "half_cube_5",
            Build::Fam("half_cube", 5),
            "12^{240}",
            &[&[((0, 1), 8), ((0, 2), 2)]],
        ),
        row(
            "half_cube_6",
            Build::Fam("half_cube", 6),
            "32^{1440}",
            &[&[((0, 2), 4), ((0, 3), 8)]],
        ),
        row(
            "half_cube_7",
            Build::Fam("half_cube", 7),
            "120^{6720}",
            &[&[((0, 3), 24), ((0, 12), 4)]],
        ),
        TableRow {
            label: "half_cube_8",
            build: Build::Fam("half_cube", 8),
            z: "36^{430080}",
            int_alts: &[&[((0, 2), 12), ((0, 4), 3)]],
            deep: true,
        },
    ]
}

pub fn table5() -> Vec<TableRow> {
    vec![
        row("alpha_4({0})", Build::Wythoff("alpha", 4, &[0]), "5^{12}", &[&[((0, 1), 5)]]),
        row("alpha_4({0,1})", Build::Wythoff("alpha", 4, &[0, 1]), "20^{12}", &[&[((0, 4), 5)]]),
        row(
            "alpha_4({0,1,2})",
            Build::Wythoff("alpha", 4, &[0, 1, 2]),
            "20^{36}",
            &[&[((0, 1), 5), ((0, 3), 5)], &[((1, 3), 5)]],
        ),
        row(
            "alpha_4({0,1,2,3})",
            Build::Wythoff("alpha", 4, &[0, 1, 2, 3]),
            "20^{72}",
            &[&[((0, 2), 10)]],
        ),
        row(
            "alpha_4({0,1,3})",
            Build::Wythoff("alpha", 4, &[0, 1, 3]),
            "48^{20}",
            &[&[((0, 5), 6), ((3, 15), 1)]],
        ),
        row(
            "alpha_4({0,2})",
            Build::Wythoff("alpha", 4, &[0, 2]),
            "45^{12}",
            &[&[((4, 5), 5)]],
        ),
        row(
            "alpha_4({0,3})",
            Build::Wythoff("alpha", 4, &[0, 3]),
            "10^{12}, 30^{12}",
            &[&[((0, 2), 5)], &[((0, 6), 5)]],
        ),
        row("alpha_4({1})", Build::Wythoff("alpha", 4, &[1]), "15^{12}", &[&[((1, 2), 5)]]),
        row(
            "alpha_4({1,2})",
            Build::Wythoff("alpha", 4, &[1, 2]),
            "10^{12}, 20^{12}",
            &[&[((0, 2), 5)], &[((0, 4), 5)]],
        ),
        row("beta_4({0})", Build::Wythoff("beta", 4, &[0]), "8^{24}", &[&[((0, 2), 4)]]),
        row(
            "beta_4({0,1})",
            Build::Wythoff("beta", 4, &[0, 1]),
            "16^{48}",
            &[&[((0, 1), 8), ((0, 4), 2)]],
        ),
        row(
            "beta_4({0,1,2})",
            Build::Wythoff("beta", 4, &[0, 1, 2]),
            "24^{96}",
            &[&[((0, 2), 9), ((0, 6), 1)]],
        ),
        row(
            "beta_4({0,1,2,3})",
            Build::Wythoff("beta", 4, &[0, 1, 2, 3]),
            "32^{144}",
            &[&[((0, 2), 16)]],
        ),
        row(
            "beta_4({0,1,3})",
            Build::Wythoff("beta", 4, &[0, 1, 3]),
            "64^{48}",
            &[&[((0, 2), 2), ((0, 4), 4), ((0, 6), 4), ((4, 6), 2)]],
        ),
        row(
            "beta_4({0,2})",
            Build::Wythoff("beta", 4, &[0, 2]),
            "18^{96}",
            &[&[((0, 2), 9)]],
        ),
        row(
            "beta_4({0,2,3})",
            Build::Wythoff("beta", 4, &[0, 2, 3]),
            "64^{48}",
            &[&[((0, 2), 2), ((0, 6), 10)]],
        ),
        row(
            "beta_4({0,3})",
            Build::Wythoff("beta", 4, &[0, 3]),
            "16^{24}, 48^{24}",
            &[&[((0, 2), 8)], &[((0, 6), 8)]],
        ),
        row("beta_4({1})", Build::Wythoff("beta", 4, &[1]), "12^{48}", &[&[((0, 2), 6)]]),
        row(
            "beta_4({1,2})",
            Build::Wythoff("beta", 4, &[1, 2]),
            "16^{24}, 24^{32}",
            &[&[((0, 2), 8)], &[((0, 2), 6), ((0, 4), 3)]],
        ),
        row(
            "beta_4({1,2,3})",
            Build::Wythoff("beta", 4, &[1, 2, 3]),
            "32^{72}",
            &[&[((0, 2), 4), ((2, 4), 4)], &[((0, 2), 8), ((0, 4), 4)]],
        ),
        row(
            "beta_4({1,3})",
            Build::Wythoff("beta", 4, &[1, 3]),
            "36^{48}",
            &[&[((0, 2), 8), ((0, 4), 3), ((0, 8), 1)]],
        ),
        row(
            "beta_4({2})",
            Build::Wythoff("beta", 4, &[2]),
            "24^{24}",
            &[&[((0, 2), 4), ((0, 4), 4)]],
        ),
        row(
            "beta_4({2,3})",
            Build::Wythoff("beta", 4, &[2, 3]),
            "32^{24}",
            &[&[((0, 2), 4), ((0, 6), 4)]],
        ),
        row("gamma_4 = beta_4({3})", Build::Wythoff("beta", 4, &[3]), "8^{24}", &[&[((0, 2), 4)]]),
        row(
            "24-cell({0,1,2})",
            Build::Wythoff("cell24", 0, &[0, 1, 2]),
            "48^{144}",
            &[&[((0, 2), 12), ((0, 4), 6)], &[((0, 2), 6), ((2, 4), 6)]],
        ),
        row(
            "24-cell({0,1,2,3})",
            Build::Wythoff("cell24", 0, &[0, 1, 2, 3]),
            "48^{288}",
            &[&[((0, 2), 24)]],
        ),
        row(
            "24-cell({0,1,3})",
            Build::Wythoff("cell24", 0, &[0, 1, 3]),
            "96^{96}",
            &[&[((0, 4), 6), ((0, 6), 7), ((4, 6), 3)]],
        ),
        row(
            "24-cell({0,2})",
            Build::Wythoff("cell24", 0, &[0, 2]),
            "54^{96}",
            &[&[((0, 12), 1), ((0, 2), 3), ((0, 4), 6), ((0, 6), 2)]],
        ),
        row(
            "24-cell({0,3})",
            Build::Wythoff("cell24", 0, &[0, 3]),
            "24^{192}",
            &[&[((0, 2), 12)]],
        ),
        row(
            "24-cell({1,2})",
            Build::Wythoff("cell24", 0, &[1, 2]),
            "24^{48}, 48^{48}",
            &[&[((0, 2), 12)], &[((0, 4), 12)]],
        ),
        row(
            "600-cell({0})",
            Build::Wythoff("cell600", 0, &[0]),
            "30^{240}",
            &[&[((0, 2), 15)]],
        ),
        row(
            "600-cell({0,1})",
            Build::Wythoff("cell600", 0, &[0, 1]),
            "48^{600}",
            &[&[((0, 2), 24)]],
        ),
        row(
            "600-cell({0,1,2})",
            Build::Wythoff("cell600", 0, &[0, 1, 2]),
            "80^{1080}",
            &[&[((0, 2), 40)]],
        ),
        row(
            "600-cell({0,1,2,3})",
            Build::Wythoff("cell600", 0, &[0, 1, 2, 3]),
            "120^{1440}",
            &[&[((0, 2), 60)]],
        ),
        row(
            "600-cell({0,1,3})",
            Build::Wythoff("cell600", 0, &[0, 1, 3]),
            "320^{360}",
            &[&[((0, 4), 20), ((2, 4), 10), ((6, 12), 10)]],
        ),
        row(
            "600-cell({0,2})",
            Build::Wythoff("cell600", 0, &[0, 2]),
            "135^{480}",
            &[&[((0, 2), 15), ((0, 3), 15), ((0, 4), 15)]],
        ),
        row(
            "600-cell({0,2,3})",
            Build::Wythoff("cell600", 0, &[0, 2, 3]),
            "192^{600}",
            &[&[((0, 2), 30), ((0, 4), 12), ((2, 12), 6)]],
        ),
        row(
            "600-cell({0,3})",
            Build::Wythoff("cell600", 0, &[0, 3]),
            "60^{960}",
            &[&[((0, 2), 30)]],
        ),
        row(
            "600-cell({1})",
            Build::Wythoff("cell600", 0, &[1]),
            "45^{480}",
            &[&[((0, 1), 15), ((0, 2), 15)]],
        ),
        row(
            "600-cell({1,2})",
            Build::Wythoff("cell600", 0, &[1, 2]),
            "60^{240}, 80^{360}",
            &[&[((0, 2), 30)], &[((0, 2), 20), ((0, 4), 10)]],
        ),
        row(
            "600-cell({1,2,3})",
            Build::Wythoff("cell600", 0, &[1, 2, 3]),
            "120^{720}",
            &[&[((0, 2), 15), ((2, 4), 15)], &[((0, 2), 30), ((0, 4), 15)]],
        ),
        row(
            "600-cell({1,3})",
            Build::Wythoff("cell600", 0, &[1, 3]),
            "108^{600}",
            &[&[((0, 2), 12), ((0, 4), 6), ((2, 8), 6)]],
        ),
        row(
            "600-cell({2})",
            Build::Wythoff("cell600", 0, &[2]),
            "90^{240}",
            &[&[((0, 2), 15), ((0, 4), 15)]],
        ),
        row(
            "600-cell({2,3})",
            Build::Wythoff("cell600", 0, &[2, 3]),
            "120^{240}",
            &[&[((0, 2), 15), ((0, 6), 15)]],
        ),
        row(
            "120-cell = 600-cell({3})",
            Build::Wythoff("cell600", 0, &[3]),
            "30^{240}",
            &[&[((0, 2), 15)]],
        ),
    ]
}

pub fn table_rows(table: u32) -> Vec<TableRow> {
    match table {
        1 => table1(),
        2 => table2(),
        3 => table3(),
        5 => table5(),
        other => panic!("no table {other}"),
    }
}

pub struct RowOutcome {
    pub label: &'static str,
    pub expected_z: &'static str,
    pub got_z: String,
    pub z_ok: bool,
    pub int_ok: bool,
    pub millis: u128,
}

impl RowOutcome {
    pub fn ok(&self) -> bool {
        self.z_ok && self.int_ok
    }
}

/// Runs the rows of a table (skipping deep rows unless asked) and diffs
/// against the embedded expectations.
pub fn run_table(table: u32, deep: bool, subset: Option<&[String]>) -> Result<Vec<RowOutcome>> {
    let rows: Vec<TableRow> = table_rows(table)
        .into_iter()
        .filter(|r| deep || !r.deep)
        .filter(|r| {
            subset.map_or(true, |labels| {
                labels.iter().any(|l| r.label.contains(l.as_str()))
            })
        })
        .collect();
    let outcomes: Vec<Result<RowOutcome>> = rows
        .par_iter()
        .map(|r| {
            let t0 = Instant::now();
            let complex = r.build.build()?;
            let analysis = analyze(&complex, zigzag_core::flag_cap_from_env(), false)?;
            let got_z = analysis.zd.z_vector_string();
            let z_ok = got_z == r.z;
            let int_ok = int_alternatives_cover(&analysis.int_vectors, r.int_alts);
            Ok(RowOutcome {
                label: r.label,
                expected_z: r.z,
                got_z,
                z_ok,
                int_ok,
                millis: t0.elapsed().as_millis(),
            })
        })
        .collect();
    outcomes.into_iter().collect()
}
