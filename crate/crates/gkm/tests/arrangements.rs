use gkm::arrangements::{fixture, fixture_by_name, gen_klm, FixtureId, KlmSpec};
use gkm::gkm_graph::validate_axial;
use gkm::Error;

#[test]
fn fixture_ids_round_trip() {
    for id in FixtureId::FILES.into_iter().chain([FixtureId::LocalModel(3)]) {
        assert_eq!(id.to_string().parse::<FixtureId>().unwrap(), id);
    }
    assert_eq!("local_model:2".parse::<FixtureId>().unwrap(), FixtureId::LocalModel(2));
    assert!("local_model(x)".parse::<FixtureId>().is_err());
    assert!(matches!(fixture_by_name("nope"), Err(Error::UnknownFixture(_))));
}

#[test]
fn documented_assumption_outcomes() {
    assert!(!FixtureId::Fig2Right.satisfies_assumptions());
    assert!(!FixtureId::Fig11Sphere.satisfies_assumptions());
    assert!(FixtureId::Fig2Left.satisfies_assumptions());
    assert!(FixtureId::LocalModel(2).satisfies_assumptions());
}

#[test]
fn local_model_three() {
    let g = fixture(FixtureId::LocalModel(3)).unwrap();
    assert_eq!((g.num_vertices(), g.num_legs()), (1, 6));
}

#[test]
fn klm_sizes() {
    for (k, l, m) in [(1, 1, 1), (2, 1, 2), (2, 2, 2), (3, 2, 1), (4, 1, 3)] {
        let spec = KlmSpec::new(k, l, m).unwrap();
        let g = gen_klm(spec).unwrap();
        let n = k * l + k * m + l * m;
        assert_eq!(g.num_vertices(), n);
        assert_eq!(spec.num_vertices(), n);
        // Each line with v points has v - 1 edges and 2 legs.
        let edges = k * (l + m - 1) + l * (k + m - 1) + m * (k + l - 1);
        assert_eq!(g.edges().count(), edges);
        assert_eq!(g.num_legs(), 2 * (k + l + m));
        assert!(validate_axial(&g).is_valid());
    }
}

#[test]
fn klm_rejects_zero_counts() {
    assert!(KlmSpec::new(0, 1, 1).is_err());
    assert!(KlmSpec::new(1, 0, 1).is_err());
    assert!(KlmSpec::new(1, 1, 0).is_err());
}

#[test]
fn klm_hints() {
    let g = gen_klm(KlmSpec::new(2, 1, 2).unwrap()).unwrap();
    let names: Vec<&str> = g.hints().hyperplanes.keys().map(String::as_str).collect();
    assert_eq!(names, vec!["X1", "X2", "Y1", "Z1", "Z2"]);
    let order: Vec<&str> = g.hints().shelling.as_ref().unwrap().iter().map(|&v| g.vertex_id(v)).collect();
    assert_eq!(order, vec!["X1Y1", "X1Z1", "X1Z2", "X2Y1", "X2Z1", "X2Z2", "Y1Z1", "Y1Z2"]);
    assert!(g.note().unwrap().contains("k=2"));
}
