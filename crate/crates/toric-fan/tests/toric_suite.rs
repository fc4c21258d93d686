use toric_fan::{build_fan, det3, toric_suite, SurfaceType, ToricReport};

#[test]
fn suite_passes_at_listed_genera() {
    for g in [3, 4, 5, 8] {
        let r = toric_suite(g).unwrap();
        assert!(r.passed(), "g = {g}:\n{}", r.render_summary());
        assert_eq!(r.cones.len(), 2 * g as usize + 1);
        assert!(r.cones.iter().all(|c| c.unimodular));
        assert!(r.crepant.iter().all(|(_, ok)| *ok));
        assert!(r.support.passed());
        assert_eq!(r.euler_characteristic, 2);
        let g = g as usize;
        assert_eq!(r.vef, (g + 1, 3 * g - 3, 2 * (g - 1)));
    }
}

#[test]
fn cone_determinants_are_the_covolume() {
    // independent of the lattice code: [N : Z^3] = 2g+1, so a basis of the
    // scaled lattice has |det| = (2g+1)^3 / (2g+1)
    for g in [3i64, 4, 5, 8] {
        let s = 2 * g + 1;
        let f = build_fan(g as u32).unwrap();
        for c in &f.cones {
            let [a, b, d] = [f.rays[c[0]].scaled, f.rays[c[1]].scaled, f.rays[c[2]].scaled];
            assert_eq!(det3(&a, &b, &d).abs(), s * s);
        }
    }
}

#[test]
fn component_types_at_genus_four() {
    let r = toric_suite(4).unwrap();
    let types: Vec<&SurfaceType> = r.dual.vertices.iter().map(|v| &v.surface).collect();
    assert_eq!(
        types,
        [
            &SurfaceType::Hirzebruch(7),
            &SurfaceType::Hirzebruch(5),
            &SurfaceType::Hirzebruch(3),
            &SurfaceType::ProjectivePlane,
            &SurfaceType::ProperTransform
        ]
    );
    assert!(r.surfaces_match);
}

#[test]
fn report_serializes_and_renders() {
    let r = toric_suite(3).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["fan"]["cones"].as_array().unwrap().len(), 7);
    assert_eq!(v["fan"]["rays"][3]["scaled"], serde_json::json!([3, 3, 1]));
    assert_eq!(v["dual"]["faces"].as_array().unwrap().len(), 4);
    let text = r.render_summary();
    assert!(text.contains("maximal cones: 7"));
    assert!(text.contains("dual complex: V=4 E=6 F=4 chi=2"));
    assert_eq!(ToricReport::expected_vef(8), (9, 21, 14));
}
