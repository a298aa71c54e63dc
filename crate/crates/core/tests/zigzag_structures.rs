//! Known z-structures of the benchmark complexes, each checked with its
//! intersection vectors.

use zigzag_core::families;
use zigzag_core::ops;
use zigzag_core::wythoff;
use zigzag_core::{FlagIndex, ZigzagDecomposition};

fn analyze(k: &zigzag_core::Complex) -> ZigzagDecomposition {
    let fi = FlagIndex::build(k, zigzag_core::DEFAULT_FLAG_CAP).unwrap();
    let zd = ZigzagDecomposition::build(&fi);
    assert!(zd.flag_bookkeeping_holds());
    assert!(zd.length_identity_holds());
    zd
}

fn int_strings(zd: &ZigzagDecomposition) -> Vec<String> {
    (0..zd.len() as u32).map(|i| zd.int_vector_string(i)).collect()
}

#[test]
fn simplex_family() {
    let zd = analyze(&families::simplex(4).unwrap());
    assert_eq!(zd.z_vector_string(), "5^{12}");
    for s in int_strings(&zd) {
        assert_eq!(s, "(0,1)^5");
    }
    let zd = analyze(&families::simplex(5).unwrap());
    assert_eq!(zd.z_vector_string(), "6^{60}");
    for s in int_strings(&zd) {
        assert_eq!(s, "(0,1)^6");
    }
}

#[test]
fn cross_polytope_family() {
    let zd = analyze(&families::cross_polytope(5).unwrap());
    assert_eq!(zd.z_vector_string(), "10^{192}");
    for s in int_strings(&zd) {
        assert_eq!(s, "(0,2)^5");
    }
}

#[test]
fn cell600_zigzags() {
    let zd = analyze(&families::cell600());
    assert_eq!(zd.z_vector_string(), "30^{240}");
    for s in int_strings(&zd) {
        assert_eq!(s, "(0,2)^{15}");
    }
}

#[test]
fn cell24_zigzags() {
    let zd = analyze(&families::cell24().unwrap());
    assert_eq!(zd.z_vector_string(), "12^{48}");
    for s in int_strings(&zd) {
        assert_eq!(s, "(0,2)^6");
    }
}

#[test]
fn snub24_zigzags() {
    let zd = analyze(&families::snub24().unwrap());
    assert_eq!(zd.z_vector_string(), "20^{144}");
    for i in 0..zd.len() as u32 {
        assert_eq!(zd.int_vector(i), vec![((0, 2), 4), ((1, 1), 4), ((0, 4), 1)]);
    }
}

#[test]
fn octicosahedric_polytope() {
    let zd = analyze(&wythoff::medial(&families::cell600()).unwrap());
    assert_eq!(zd.z_vector_string(), "45^{480}");
    for i in 0..zd.len() as u32 {
        assert_eq!(zd.int_vector(i), vec![((0, 1), 15), ((0, 2), 15)]);
    }
}

#[test]
fn half_cube_5_and_6() {
    let zd = analyze(&families::half_cube(5).unwrap());
    assert_eq!(zd.z_vector_string(), "12^{240}");
    for i in 0..zd.len() as u32 {
        assert_eq!(zd.int_vector(i), vec![((0, 1), 8), ((0, 2), 2)]);
    }
    let zd = analyze(&families::half_cube(6).unwrap());
    assert_eq!(zd.z_vector_string(), "32^{1440}");
    for i in 0..zd.len() as u32 {
        assert_eq!(zd.int_vector(i), vec![((0, 2), 4), ((0, 3), 8)]);
    }
}

#[test]
fn medial_of_beta4_is_24cell() {
    // the d = 4 coincidence: the medial of the cross-polytope is the 24-cell
    let med = wythoff::medial(&families::cross_polytope(4).unwrap()).unwrap();
    assert!(zigzag_core::symmetry::is_isomorphic(
        &med,
        &families::cell24().unwrap()
    ));
}

#[test]
fn medial_of_beta5_is_the_rectified_orthoplex() {
    // unlike d = 4 this is not the half-cube: 40 vertices, z = 48^{160}
    let med = wythoff::medial(&families::cross_polytope(5).unwrap()).unwrap();
    assert_eq!(med.size(0), 40);
    let zd = analyze(&med);
    assert_eq!(zd.z_vector_string(), "48^{160}");
}

#[test]
fn rectified_simplex_zigzags() {
    let zd = analyze(&wythoff::wythoff(&families::simplex(4).unwrap(), &[1]).unwrap());
    assert_eq!(zd.z_vector_string(), "15^{12}");
    for s in int_strings(&zd) {
        assert_eq!(s, "(1,2)^5");
    }
}

#[test]
fn wythoff_alpha4_two_length_classes() {
    let zd = analyze(&wythoff::wythoff(&families::simplex(4).unwrap(), &[0, 3]).unwrap());
    assert_eq!(zd.z_vector_string(), "10^{12}, 30^{12}");
    // per-zigzag alternatives
    for i in 0..zd.len() as u32 {
        let iv = zd.int_vector(i);
        assert!(
            iv == vec![((0, 2), 5)] || iv == vec![((0, 6), 5)],
            "unexpected {iv:?}"
        );
    }
}

#[test]
fn wythoff_alpha4_typed_intersections() {
    let zd = analyze(&wythoff::wythoff(&families::simplex(4).unwrap(), &[0, 2]).unwrap());
    assert_eq!(zd.z_vector_string(), "45^{12}");
    for i in 0..zd.len() as u32 {
        assert_eq!(zd.int_vector(i), vec![((4, 5), 5)]);
    }
}

#[test]
fn pyramid_and_bipyramid_over_icosahedron() {
    let zd = analyze(&ops::pyramid(&families::icosahedron()));
    assert_eq!(zd.z_vector_string(), "25^{12}");
    for i in 0..zd.len() as u32 {
        assert_eq!(zd.int_vector(i), vec![((0, 3), 5), ((0, 10), 1)]);
    }
    let zd = analyze(&ops::bipyramid(&families::icosahedron()));
    assert_eq!(zd.z_vector_string(), "40^{12}");
    for i in 0..zd.len() as u32 {
        assert_eq!(zd.int_vector(i), vec![((0, 4), 5), ((0, 20), 1)]);
    }
}

#[test]
fn augmented_rectified_simplex() {
    // attach a pyramid over an octahedral facet of Med(alpha_4)
    let med = wythoff::wythoff(&families::simplex(4).unwrap(), &[1]).unwrap();
    let sets = med.vertex_sets();
    let d = med.dim();
    let facet = (0..med.size(d))
        .position(|i| sets[d][i].len() == 6)
        .expect("an octahedral facet");
    let aug = ops::augment(&med, zigzag_core::FaceRef { dim: d, idx: facet }).unwrap();
    let zd = analyze(&aug);
    assert_eq!(zd.z_vector_string(), "42^6");
    for i in 0..zd.len() as u32 {
        assert_eq!(
            zd.int_vector(i),
            vec![((1, 1), 1), ((8, 8), 1), ((12, 12), 1)]
        );
    }
}

#[test]
fn folded_cubes() {
    let zd = analyze(&families::folded_cube(3).unwrap());
    assert_eq!(zd.z_vector_string(), "3^4");
    for i in 0..zd.len() as u32 {
        assert_eq!(zd.int_vector(i), vec![((0, 1), 3)]);
    }
    let zd = analyze(&families::folded_cube(4).unwrap());
    assert_eq!(zd.z_vector_string(), "4^{24}");
    for i in 0..zd.len() as u32 {
        assert_eq!(zd.int_vector(i), vec![((0, 1), 4)]);
    }
}

#[test]
fn prism_on_dodecahedron() {
    let p = ops::product(&families::dodecahedron(), &families::segment());
    let zd = analyze(&p);
    assert_eq!(zd.z_vector_string(), "40^{12}");
    for i in 0..zd.len() as u32 {
        assert_eq!(zd.int_vector(i), vec![((0, 6), 5), ((0, 10), 1)]);
    }
}

#[test]
fn duality_preserves_zigzag_lengths() {
    for k in [
        families::simplex(4).unwrap(),
        families::cross_polytope(4).unwrap(),
        families::snub_cube(),
        families::great_dodecahedron(),
        wythoff::wythoff(&families::simplex(4).unwrap(), &[0, 2]).unwrap(),
    ] {
        let a = analyze(&k).length_multiset();
        let b = analyze(&k.dual()).length_multiset();
        assert_eq!(a, b);
    }
}

#[test]
fn no_degenerate_hits_above_dimension_one() {
    for k in [
        families::simplex(4).unwrap(),
        families::cube(3).unwrap(),
        families::petersen(),
        families::snub_cube(),
    ] {
        let zd = analyze(&k);
        assert!(zd.zigzags().iter().all(|z| z.degenerate == 0));
    }
}
