use knotcob::diagram::{alpha_pq, figure_eight, torus_two_crossing, trefoil, GaussCode};
use knotcob::fatgraph::build_carter;
use knotcob::slice::{lagrangian_obstruction, obstruction_report, Reason, SliceConfig, Verdict};
use knotcob::Sign;

#[test]
fn classical_knots_are_inconclusive() {
    for code in [GaussCode::empty(), trefoil(), figure_eight()] {
        let r = obstruction_report(&build_carter(&code), &SliceConfig::default());
        assert_eq!(r.verdict, Verdict::Inconclusive, "{code}");
        assert_eq!(r.sg_lower_bound, 0);
    }
}

#[test]
fn alpha_knots_are_not_slice() {
    for (p, q) in [(1, 1), (1, 2), (2, 2), (3, 3)] {
        let d = build_carter(&alpha_pq(p, q, &vec![Sign::Plus; p + q]).unwrap());
        let r = obstruction_report(&d, &SliceConfig { lagrangian: vec![], ..SliceConfig::default() });
        assert_eq!(r.verdict, Verdict::NotSlice);
        assert!(r.sg_lower_bound >= 1);
    }
}

#[test]
fn lagrangian_alone_detects_the_two_crossing_knot() {
    let d = build_carter(&torus_two_crossing());
    assert!(!lagrangian_obstruction(&d, 2).unwrap().passes());
    let config = SliceConfig { covers: vec![], primes: vec![], lagrangian: vec![2], ..SliceConfig::default() };
    let r = obstruction_report(&d, &config);
    assert!(r.reasons.contains(&Reason::Lagrangian { m: 2, surface: "carter" }));
}

#[test]
fn report_json_shape() {
    let r = obstruction_report(&build_carter(&torus_two_crossing()), &SliceConfig::default());
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["verdict"], "NotSlice");
    assert_eq!(v["sg_lower_bound"], 1);
    assert_eq!(v["partial"], false);
    assert!(v["reasons"].as_array().unwrap().iter().any(|x| x["kind"] == "not_hyperbolic"));
}
