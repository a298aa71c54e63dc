//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Run with `cargo test -p zigzag-cli --test acceptance -- --nocapture`.
//! The long-running items (half-cube d = 8, special cuts k = 3) are behind
//! `--ignored`.

use std::time::{Duration, Instant};

use zigzag_cli::analysis::{analyze, int_vector_matches};
use zigzag_cli::{tables, verify};
use zigzag_core::families::{self, Family};
use zigzag_core::flags::FlagIndex;
use zigzag_core::maps::FlagSystem;
use zigzag_core::ops;
use zigzag_core::symmetry;
use zigzag_core::zigzag::ZigzagDecomposition;
use zigzag_core::Complex;

const CAP: u64 = zigzag_core::DEFAULT_FLAG_CAP;

fn criterion(n: &str, budget: Duration, run: impl FnOnce() -> Result<String, String>) {
    let t0 = Instant::now();
    let outcome = run();
    let elapsed = t0.elapsed();
    match outcome {
        Ok(detail) => {
            println!("criterion {n}: PASS ({elapsed:.1?}) {detail}");
            assert!(
                elapsed <= budget,
                "criterion {n} exceeded its runtime budget: {elapsed:?} > {budget:?}"
            );
        }
        Err(detail) => {
            println!("criterion {n}: FAIL ({elapsed:.1?}) {detail}");
            panic!("criterion {n} failed: {detail}");
        }
    }
}

fn run_table(table: u32, deep: bool) -> Result<String, String> {
    let outcomes = tables::run_table(table, deep, None).map_err(|e| e.to_string())?;
    let bad: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.ok())
        .map(|o| {
            format!(
                "{}: z {} vs expected {} (ints {})",
                o.label,
                o.got_z,
                o.expected_z,
                if o.int_ok { "ok" } else { "differ" }
            )
        })
        .collect();
    if bad.is_empty() {
        let slowest = outcomes.iter().map(|o| o.millis).max().unwrap_or(0);
        Ok(format!(
            "{} rows match, slowest row {} ms",
            outcomes.len(),
            slowest
        ))
    } else {
        Err(bad.join("; "))
    }
}

#[test]
fn criterion_1_table_1() {
    criterion("1 (Table 1)", Duration::from_secs(600), || run_table(1, false));
}

#[test]
fn criterion_2_table_2() {
    criterion("2 (Table 2)", Duration::from_secs(120), || run_table(2, false));
}

#[test]
fn criterion_3_table_3_default() {
    criterion("3 (Table 3, d <= 7)", Duration::from_secs(300), || {
        run_table(3, false)
    });
}

#[test]
#[ignore = "deep: half-cube d = 8 (about 31M flags)"]
fn criterion_3_table_3_deep() {
    criterion("3-deep (Table 3, d = 8)", Duration::from_secs(1800), || {
        let outcomes = tables::run_table(3, true, Some(&["half_cube_8".to_string()]))
            .map_err(|e| e.to_string())?;
        let row = &outcomes[0];
        if row.ok() {
            Ok(format!("z = {} in {} ms", row.got_z, row.millis))
        } else {
            Err(format!("z = {} vs {}", row.got_z, row.expected_z))
        }
    });
}

#[test]
fn criterion_4_table_5() {
    criterion("4 (Table 5, 45 rows)", Duration::from_secs(900), || {
        let outcomes = tables::run_table(5, false, None).map_err(|e| e.to_string())?;
        if outcomes.len() != 45 {
            return Err(format!("expected 45 rows, have {}", outcomes.len()));
        }
        let bad: Vec<&str> = outcomes
            .iter()
            .filter(|o| !o.ok())
            .map(|o| o.label)
            .collect();
        if bad.is_empty() {
            let largest = outcomes
                .iter()
                .find(|o| o.label.contains("{0,1,2,3}") && o.label.contains("600"))
                .map(|o| o.millis)
                .unwrap_or(0);
            if largest > 120_000 {
                return Err(format!("600-cell({{0,1,2,3}}) took {largest} ms"));
            }
            Ok(format!("45 rows match, 600-cell({{0,1,2,3}}) in {largest} ms"))
        } else {
            Err(bad.join(", "))
        }
    });
}

#[test]
fn criterion_5_folded_cubes() {
    criterion("5 (folded cubes)", Duration::from_secs(600), || {
        let mut notes = Vec::new();
        for d in 3..=7usize {
            let k = families::folded_cube(d).map_err(|e| e.to_string())?;
            let a = analyze(&k, CAP, false).map_err(|e| e.to_string())?;
            let count = (1usize << (d - 2)) * (1..d).product::<usize>();
            let expected_z = if count < 10 {
                format!("{d}^{count}")
            } else {
                format!("{d}^{{{count}}}")
            };
            let got = a.zd.z_vector_string();
            if got != expected_z {
                return Err(format!("box_{d}: z = {got}, expected {expected_z}"));
            }
            if !a
                .int_vectors
                .iter()
                .all(|v| int_vector_matches(v, &[((0, 1), d as u32)]))
            {
                return Err(format!("box_{d}: intersection vectors differ from (0,1)^{d}"));
            }
            notes.push(format!("box_{d} = {got}"));
        }
        Ok(notes.join(", "))
    });
}

#[test]
fn criterion_6_special_cut_classes() {
    criterion("6 (special cuts k <= 2)", Duration::from_secs(600), || {
        let (one, _) = symmetry::enumerate_special_cut_classes(1).map_err(|e| e.to_string())?;
        if one != 1 {
            return Err(format!("k = 1 gave {one} classes, expected 1"));
        }
        let (seven, _) = symmetry::enumerate_special_cut_classes(2).map_err(|e| e.to_string())?;
        if seven != 7 {
            return Err(format!("k = 2 gave {seven} classes, expected 7"));
        }
        Ok("1 class (k=1), 7 classes (k=2)".to_string())
    });
}

#[test]
#[ignore = "deep: 436 classes of triple cuts"]
fn criterion_6_special_cut_classes_deep() {
    criterion("6-deep (special cuts k = 3)", Duration::from_secs(7200), || {
        let (classes, _) = symmetry::enumerate_special_cut_classes(3).map_err(|e| e.to_string())?;
        if classes == 436 {
            Ok("436 classes".to_string())
        } else {
            Err(format!("k = 3 gave {classes} classes, expected 436"))
        }
    });
}

#[test]
fn criterion_7_conjecture_suites() {
    criterion("7 (conjecture suites)", Duration::from_secs(1200), || {
        let mut notes = Vec::new();
        for (id, max) in [
            ("pyr-beta", Some(8)),
            ("bpyr-alpha", Some(8)),
            ("product", Some(12)),
            ("prism-aprism", Some(12)),
            ("type34", Some(7)),
            ("lins-chi", Some(50)),
            ("twist", Some(4)),
        ] {
            let suite = verify::run(id, max, false).map_err(|e| e.to_string())?;
            let bad = suite.mismatches();
            if bad != 0 {
                let details: Vec<String> = suite
                    .instances
                    .iter()
                    .filter(|i| !i.ok)
                    .map(|i| format!("{}: {}", i.label, i.details))
                    .collect();
                return Err(format!("{id}: {bad} mismatches ({})", details.join("; ")));
            }
            notes.push(format!("{id} {}/{}", suite.instances.len(), suite.instances.len()));
        }
        Ok(notes.join(", "))
    });
}

fn property_corpus() -> Vec<(&'static str, Complex)> {
    let w = |k: &Complex, v: &[usize]| zigzag_core::wythoff::wythoff(k, v).unwrap();
    let a4 = families::simplex(4).unwrap();
    let g3 = families::cube(3).unwrap();
    vec![
        ("alpha_3", families::simplex(3).unwrap()),
        ("alpha_4", a4.clone()),
        ("alpha_5", families::simplex(5).unwrap()),
        ("beta_3", families::cross_polytope(3).unwrap()),
        ("beta_4", families::cross_polytope(4).unwrap()),
        ("beta_5", families::cross_polytope(5).unwrap()),
        ("gamma_3", g3.clone()),
        ("gamma_4", families::cube(4).unwrap()),
        ("half_cube_4", families::half_cube(4).unwrap()),
        ("half_cube_5", families::half_cube(5).unwrap()),
        ("polygon_6", families::polygon(6).unwrap()),
        ("prism_5", families::prism_map(5).unwrap()),
        ("aprism_4", families::antiprism_map(4).unwrap()),
        ("icosahedron", families::icosahedron()),
        ("dodecahedron", families::dodecahedron()),
        ("great_dodecahedron", families::great_dodecahedron()),
        ("petersen", families::petersen()),
        ("snub_cube", families::snub_cube()),
        ("snub_dodecahedron", families::snub_dodecahedron()),
        ("cuboctahedron", w(&g3, &[1])),
        ("truncated_cube", w(&g3, &[0, 1])),
        ("alpha_4({0,2})", w(&a4, &[0, 2])),
        ("alpha_4({1})", w(&a4, &[1])),
        ("folded_cube_3", families::folded_cube(3).unwrap()),
        ("folded_cube_4", families::folded_cube(4).unwrap()),
        ("C3xC4", ops::product(
            &families::polygon(3).unwrap(),
            &families::polygon(4).unwrap(),
        )),
        ("pyr(beta_3)", ops::pyramid(&families::cross_polytope(3).unwrap())),
        ("bpyr(alpha_3)", ops::bipyramid(&families::simplex(3).unwrap())),
        ("type34 [2,2]", families::type34(&[2, 2]).unwrap()),
        ("type34 [1,1,2]", families::type34(&[1, 1, 2]).unwrap()),
        ("cell24", families::cell24().unwrap()),
        ("cell600", families::cell600()),
        ("snub24", families::snub24().unwrap()),
    ]
}

#[test]
fn criterion_8_property_suite() {
    criterion("8 (property suite)", Duration::from_secs(600), || {
        let mut checked = 0usize;
        for (name, k) in property_corpus() {
            let fi = FlagIndex::build(&k, CAP).map_err(|e| format!("{name}: {e}"))?;
            let d = k.dim();
            // sigma involution and commutation laws
            for f in (0..fi.len() as u32).step_by(7.max(fi.len() / 997)) {
                for i in 1..=(d + 1) {
                    let g = fi.sigma(i, f).unwrap();
                    if fi.sigma(i, g).unwrap() != f {
                        return Err(format!("{name}: sigma_{i} not an involution"));
                    }
                    for j in (i + 2)..=(d + 1) {
                        let a = fi.sigma(j, g).unwrap();
                        let b = fi.sigma(i, fi.sigma(j, f).unwrap()).unwrap();
                        if a != b {
                            return Err(format!("{name}: sigma_{i}, sigma_{j} do not commute"));
                        }
                    }
                }
            }
            let zd = ZigzagDecomposition::build(&fi);
            if !zd.flag_bookkeeping_holds() {
                return Err(format!("{name}: flag bookkeeping fails"));
            }
            if !zd.length_identity_holds() {
                return Err(format!("{name}: length identity fails"));
            }
            if d >= 2 && zd.zigzags().iter().any(|z| z.degenerate != 0) {
                return Err(format!("{name}: degenerate sigma_1 hits in dimension {d}"));
            }
            // duality: same zigzag length multiset
            let dual_fi = FlagIndex::build(&k.dual(), CAP).map_err(|e| e.to_string())?;
            let dual_zd = ZigzagDecomposition::build(&dual_fi);
            if zd.length_multiset() != dual_zd.length_multiset() {
                return Err(format!("{name}: dual changes the zigzag lengths"));
            }
            // evenness on oriented complexes of even dimension
            if d % 2 == 0 && fi.is_orientable() {
                if zd.zigzags().iter().any(|z| z.length % 2 == 1) {
                    return Err(format!("{name}: odd zigzag length on oriented even dim"));
                }
            }
            // odd dimension: the monitored signature conjecture
            if d % 2 == 1 {
                if let Some(z) = zd.zigzags().iter().find(|z| z.signature != (0, 0)) {
                    return Err(format!(
                        "{name}: FINDING odd-dimensional signature {:?}",
                        z.signature
                    ));
                }
            }
            // zigzag graph connectivity for the maps
            if d == 2 && !zd.zigzag_graph_connected() {
                return Err(format!("{name}: zigzag graph is disconnected"));
            }
            checked += 1;
        }

        // flag-count identity (d+1)! * facets on the simplicial members
        for (name, k) in [
            ("alpha_4", families::simplex(4).unwrap()),
            ("beta_4", families::cross_polytope(4).unwrap()),
            ("cell600", families::cell600()),
            ("type34 [2,2]", families::type34(&[2, 2]).unwrap()),
        ] {
            let d = k.dim();
            let expected = (1..=(d + 1) as u64).product::<u64>() * k.size(d) as u64;
            if FlagIndex::count_flags(&k) != expected {
                return Err(format!("{name}: simplicial flag count differs"));
            }
        }

        // group identities: free action, p |Aut| = |F|, regular => one orbit,
        // and the z-knotted-or-simple dichotomy for regular complexes
        for (name, k, regular) in [
            ("alpha_4", families::simplex(4).unwrap(), true),
            ("beta_4", families::cross_polytope(4).unwrap(), true),
            ("gamma_4", families::cube(4).unwrap(), true),
            ("icosahedron", families::icosahedron(), true),
            ("dodecahedron", families::dodecahedron(), true),
            ("great_dodecahedron", families::great_dodecahedron(), true),
            ("petersen", families::petersen(), true),
            ("cell24", families::cell24().unwrap(), true),
            ("cell600", families::cell600(), true),
            ("half_cube_5", families::half_cube(5).unwrap(), false),
            ("snub_cube", families::snub_cube(), false),
            (
                "pyr(beta_4)",
                ops::pyramid(&families::cross_polytope(4).unwrap()),
                false,
            ),
        ] {
            let fi = FlagIndex::build(&k, CAP).map_err(|e| e.to_string())?;
            let group = symmetry::automorphisms(&fi);
            if group.orbit_count * group.order() != fi.len() {
                return Err(format!("{name}: p * |Aut| != |F|"));
            }
            if regular && group.orbit_count != 1 {
                return Err(format!("{name}: expected flag transitivity"));
            }
            let zd = ZigzagDecomposition::build(&fi);
            if regular {
                if !symmetry::is_z_transitive(&group, &zd) {
                    return Err(format!("{name}: regular but not z-transitive"));
                }
                if zd.zigzag_graph_connected() {
                    let self_intersecting = zd.zigzags().iter().any(|z| z.signature != (0, 0));
                    if self_intersecting && !zd.is_z_knotted() {
                        return Err(format!("{name}: self-intersecting, connected, not knotted"));
                    }
                }
            }
        }
        // half-cube flag orbits: d - 2 of them for d >= 5
        {
            let k = families::half_cube(5).unwrap();
            let fi = FlagIndex::build(&k, CAP).unwrap();
            let group = symmetry::automorphisms(&fi);
            if group.orbit_count != 3 {
                return Err(format!("half_cube_5: {} orbits, expected 3", group.orbit_count));
            }
            let zd = ZigzagDecomposition::build(&fi);
            if !symmetry::is_z_uniform(&zd) {
                return Err("half_cube_5: not z-uniform".to_string());
            }
        }
        // pyramid over beta_4: d + 1 = 6 flag orbits
        {
            let k = ops::pyramid(&families::cross_polytope(4).unwrap());
            let fi = FlagIndex::build(&k, CAP).unwrap();
            let group = symmetry::automorphisms(&fi);
            if group.orbit_count != 6 {
                return Err(format!("pyr(beta_4): {} orbits, expected 6", group.orbit_count));
            }
        }

        // g = h(h + 2) on the five Platonic solids
        for (name, k, h) in [
            ("tetrahedron", families::simplex(3).unwrap(), 4usize),
            ("cube", families::cube(3).unwrap(), 6),
            ("octahedron", families::cross_polytope(3).unwrap(), 6),
            ("dodecahedron", families::dodecahedron(), 10),
            ("icosahedron", families::icosahedron(), 10),
        ] {
            let fi = FlagIndex::build(&k, CAP).unwrap();
            let group = symmetry::automorphisms(&fi);
            let zd = ZigzagDecomposition::build(&fi);
            if zd.zigzags()[0].length != h || group.order() != h * (h + 2) {
                return Err(format!(
                    "{name}: g = {}, h = {}, expected g = h(h+2) with h = {h}",
                    group.order(),
                    zd.zigzags()[0].length
                ));
            }
        }

        // fold correspondence: lengths and intersections halve
        for d in 3..=5usize {
            let (gamma, _) = families::antipodal_cube(d).unwrap();
            let folded = families::folded_cube(d).unwrap();
            let base = ZigzagDecomposition::build(&FlagIndex::build(&gamma, CAP).unwrap());
            let quot = ZigzagDecomposition::build(&FlagIndex::build(&folded, CAP).unwrap());
            let halved: Vec<usize> = base.length_multiset().iter().map(|l| l / 2).collect();
            if halved != quot.length_multiset() {
                return Err(format!("box_{d}: folded lengths are not halved"));
            }
        }
        {
            let peter = ZigzagDecomposition::build(
                &FlagIndex::build(&families::petersen(), CAP).unwrap(),
            );
            let dode = ZigzagDecomposition::build(
                &FlagIndex::build(&families::dodecahedron(), CAP).unwrap(),
            );
            let halved: Vec<usize> = dode.length_multiset().iter().map(|l| l / 2).collect();
            if halved != peter.length_multiset() {
                return Err("petersen: folded lengths are not halved".to_string());
            }
            if !(0..peter.len() as u32)
                .all(|i| peter.int_vector(i) == vec![((0, 1), 5)])
            {
                return Err("petersen: intersections are not the halved (0,2)^5".to_string());
            }
        }

        // census z-lengths agree with the zigzag engine on maps
        for (name, k) in [
            ("dodecahedron", families::dodecahedron()),
            ("snub_cube", families::snub_cube()),
            ("petersen", families::petersen()),
        ] {
            let fs = FlagSystem::from_complex(&k).map_err(|e| e.to_string())?;
            let census = fs.census();
            let zd = ZigzagDecomposition::build(&FlagIndex::build(&k, CAP).unwrap());
            let mut engine: Vec<u32> = zd.zigzags().iter().map(|z| z.length as u32).collect();
            engine.sort_unstable();
            let mut from_census: Vec<u32> = Vec::new();
            for &(l, m) in &census.z_vector {
                from_census.extend(std::iter::repeat(l).take(m as usize));
            }
            from_census.sort_unstable();
            if engine != from_census {
                return Err(format!("{name}: census z-lengths differ from the engine"));
            }
            if !census.edge_identity_holds() {
                return Err(format!("{name}: census edge identity fails"));
            }
        }

        Ok(format!("{checked} corpus members checked"))
    });
}

#[test]
fn criterion_9_declared_exclusions() {
    criterion("9 (declared exclusions)", Duration::from_secs(10), || {
        for name in ["gosset_221", "gosset_321", "gosset_421", "grand_antiprism"] {
            match Family::from_cli(name, None, None, None) {
                Err(zigzag_core::error::Error::Unsupported(msg)) => {
                    if !msg.contains("excluded") {
                        return Err(format!("{name}: unexpected message {msg}"));
                    }
                }
                other => {
                    return Err(format!(
                        "{name}: expected an explicit exclusion, got {other:?}"
                    ))
                }
            }
        }
        Ok("2_21/3_21/4_21 and the Grand Antiprism are excluded, not approximated".to_string())
    });
}
