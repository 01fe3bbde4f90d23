mod common;

use common::*;
use poset_trace::cone::{in_chain_cone, in_order_cone, level_chains, CoverTransfer};
use poset_trace::construct::contract;
use poset_trace::cycles::StarSequence;
use poset_trace::locus::{
    chain_locus_dimension, chain_radical_decomposition, face_dimension, face_dimension_from_vertices,
    order_locus_dimension, order_radical_decomposition, realize_chain_tuple, PrimeKind, PrimeLabel,
};
use poset_trace::trace::{
    adjust_mu, is_adjustment, verify_certificate, AdjustFunction, Certificate, ChainTuple, Membership, Witness,
};
use poset_trace::{Analysis, Error, Extension, LatticePoint, Poset, Ring};

#[test]
fn nx_hand_certificate_verifies() {
    let p = poset("p_nx");
    let xi = point(&p, "xi_nx");
    let (eta, zeta) = nx_certificate(&p);
    assert!(in_chain_cone(&p, &eta, 1));
    assert!(in_chain_cone(&p, &zeta, -1));
    assert_eq!(eta.add(&zeta), xi.scale(2));
    assert!(verify_certificate(&p, &xi, &Certificate { ring: Ring::Chain, n: 2, eta, zeta }));
}

#[test]
fn hex_hand_certificate_verifies() {
    let p = poset("p_hex");
    let xi = point(&p, "xi_hex");
    let (eta, zeta) = hex_certificate(&p);
    assert!(verify_certificate(
        &p,
        &xi,
        &Certificate { ring: Ring::Chain, n: 5, eta: eta.clone(), zeta: zeta.clone() }
    ));
    assert!(!verify_certificate(&p, &xi, &Certificate { ring: Ring::Chain, n: 4, eta, zeta }));
}

#[test]
fn nx_top_level_chains() {
    let p = poset("p_nx");
    let xi = point(&p, "xi_nx");
    assert_eq!(p.maximal_chains().len(), 7);
    let top = level_chains(&p, &xi, 3);
    assert_eq!(top.len(), 6);
    assert!(!top.iter().any(|c| c.to_vec() == idx(&p, &["a1", "e1", "b1"])));
    let q = p.extend(Extension::Both);
    assert_eq!(q.rank(q.bottom().unwrap(), q.top().unwrap()), Ok(5));
    assert_eq!(q.dist(q.bottom().unwrap(), q.top().unwrap()), Ok(3));
}

#[test]
fn hand_adjustments_pass_the_checker() {
    let p = poset("p_nx");
    let xi = point(&p, "xi_nx");
    assert!(is_adjustment(&p, &xi, &AdjustFunction { mu: nx_mu(&p), level: 0 }));
    let h = poset("p_hex");
    let xh = point(&h, "xi_hex");
    assert!(is_adjustment(&h, &xh, &AdjustFunction { mu: hex_mu(&h), level: 0 }));
    let mut broken = hex_mu(&h);
    broken[h.lookup("b2").unwrap()] += 1;
    assert!(!is_adjustment(&h, &xh, &AdjustFunction { mu: broken, level: 0 }));
}

#[test]
fn computed_adjustment_on_nx_matches_hand_one() {
    let p = poset("p_nx");
    let xi = point(&p, "xi_nx");
    let f = adjust_mu(&p, &xi).unwrap();
    assert_eq!(f, AdjustFunction { mu: nx_mu(&p), level: 0 });
}

#[test]
fn computed_adjustment_on_hex_is_valid() {
    let h = poset("p_hex");
    let xh = point(&h, "xi_hex");
    let f = adjust_mu(&h, &xh).unwrap();
    assert!(is_adjustment(&h, &xh, &f));
}

#[test]
fn computed_certificates_verify() {
    for (pn, xn) in [("p_nx", "xi_nx"), ("p_hex", "xi_hex")] {
        let p = poset(pn);
        let xi = point(&p, xn);
        let a = Analysis::new(p.clone());
        let m = a.chain_member(&xi, true).unwrap();
        let cert = m.certificate().expect("member with certificate");
        assert!(verify_certificate(&p, &xi, cert), "{pn}");
        assert_eq!(cert.n % 2, 0);
    }
}

#[test]
fn claw_point_is_not_a_chain_member() {
    let p = poset("p_claw");
    let xi = named(&p, 1, &[("a", 1)]);
    let m = Analysis::new(p.clone()).chain_member(&xi, false).unwrap();
    match m {
        Membership::NonMember { witness: Witness::NonPureStar { chain } } => {
            assert!(chain.contains(&p.lookup("a").unwrap()));
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn bowtie_order_member_checks_all_four_cycles() {
    let p = poset("p_bowtie");
    let a = Analysis::new(p.clone());
    assert_eq!(a.star_sequences().len(), 4);
    // value 1 on a1 beats every b side
    let nu = named(&p, 1, &[("a1", 1)]);
    assert!(in_order_cone(&p, &nu, 0));
    assert!(a.order_member(&nu, false).unwrap().is_member());
    // value 1 on a2 ties on the cycle (a1; inf)
    let nu = named(&p, 1, &[("a2", 1)]);
    match a.order_member(&nu, false).unwrap() {
        Membership::NonMember { witness: Witness::OrderCycle { sequence } } => {
            let q = p.extend(Extension::Both);
            assert_eq!(q.names_of(&sequence.a), vec!["a1"]);
            assert_eq!(q.names_of(&sequence.b), vec!["inf"]);
        }
        other => panic!("unexpected {other:?}"),
    }
}

fn label_names(p: &Poset, l: &PrimeLabel) -> String {
    let q = p.extend(Extension::Both);
    match &l.kind {
        PrimeKind::ChainStar { chain } => format!("star{:?}", p.names_of(chain)),
        PrimeKind::ChainCycle { tuple } => format!(
            "cycle{:?}{:?}",
            tuple.lower.iter().map(|c| p.names_of(c)).collect::<Vec<_>>(),
            tuple.upper.iter().map(|c| p.names_of(c)).collect::<Vec<_>>()
        ),
        PrimeKind::OrderCycle { sequence } => format!("seq{:?}{:?}", q.names_of(&sequence.a), q.names_of(&sequence.b)),
    }
}

fn minimal(p: &Poset, labels: &[PrimeLabel]) -> Vec<(String, i64)> {
    let mut v: Vec<(String, i64)> =
        labels.iter().filter(|l| l.minimal).map(|l| (label_names(p, l), l.coheight)).collect();
    v.sort();
    v
}

#[test]
fn bowtie_locus() {
    let p = poset("p_bowtie");
    let a = Analysis::new(p.clone());
    assert_eq!(order_locus_dimension(&a), 2);
    assert_eq!(chain_locus_dimension(&a), 2);
    let order = minimal(&p, &order_radical_decomposition(&a));
    assert_eq!(
        order,
        vec![
            (r#"seq["-inf"]["b1"]"#.to_string(), 2),
            (r#"seq["a1", "a2"]["b1", "b2"]"#.to_string(), 2),
            (r#"seq["a1"]["inf"]"#.to_string(), 2),
        ]
    );
    let chain = minimal(&p, &chain_radical_decomposition(&a));
    assert_eq!(
        chain,
        vec![
            (r#"cycle[["a1"], ["a2"]][["b1"], ["b2"]]"#.to_string(), 2),
            (r#"star["a1"]"#.to_string(), 2),
            (r#"star["b1"]"#.to_string(), 2),
        ]
    );
}

#[test]
fn claw_locus() {
    let p = poset("p_claw");
    let a = Analysis::new(p.clone());
    assert_eq!(order_locus_dimension(&a), 3);
    assert_eq!(chain_locus_dimension(&a), 3);
    assert_eq!(minimal(&p, &order_radical_decomposition(&a)), vec![(r#"seq["a"]["inf"]"#.to_string(), 3)]);
    assert_eq!(
        minimal(&p, &chain_radical_decomposition(&a)),
        vec![(r#"star["c", "a"]"#.to_string(), 3), (r#"star["d", "a"]"#.to_string(), 3)]
    );
}

#[test]
fn ladder_locus() {
    let p = poset("p_ladder");
    let a = Analysis::new(p.clone());
    assert_eq!(order_locus_dimension(&a), 6);
    assert_eq!(chain_locus_dimension(&a), 6);
    assert_eq!(
        minimal(&p, &order_radical_decomposition(&a)),
        vec![
            (r#"seq["-inf"]["b1"]"#.to_string(), 4),
            (r#"seq["a1", "a2"]["b1", "b2"]"#.to_string(), 6),
            (r#"seq["a1"]["inf"]"#.to_string(), 4),
        ]
    );
    let chain = minimal(&p, &chain_radical_decomposition(&a));
    assert_eq!(
        chain,
        vec![
            (r#"cycle[["c1", "a1"], ["c2", "a2"]][["b1", "d1"], ["b2", "d2"]]"#.to_string(), 6),
            (r#"star["b1", "d1"]"#.to_string(), 4),
            (r#"star["c1", "a1"]"#.to_string(), 4),
        ]
    );
}

#[test]
fn ladder_contraction() {
    let p = poset("p_ladder");
    let m = idx(&p, &["a1", "a2", "m", "b1", "b2"]);
    let c = contract(&p, &m);
    assert_eq!(c.names(), vec!["c1", "d1", "c2", "d2", "*"]);
    let mut covers = c.cover_names();
    covers.sort();
    let expect: Vec<(String, String)> = [("*", "d1"), ("*", "d2"), ("c1", "*"), ("c2", "*")]
        .iter()
        .map(|(x, y)| (x.to_string(), y.to_string()))
        .collect();
    assert_eq!(covers, expect);
    let bowtie = poset("p_bowtie");
    assert_eq!(contract(&bowtie, &(0..5).collect::<Vec<_>>()).len(), 1);
}

#[test]
fn fourcycle_face_dimensions() {
    let p = poset("p_fourcycle");
    let naive = ChainTuple {
        lower: vec![idx(&p, &["d1", "a1"]), idx(&p, &["d2", "a2"])],
        upper: vec![idx(&p, &["b1"]), idx(&p, &["b2"])],
    };
    let fixed = ChainTuple {
        lower: vec![idx(&p, &["d1", "a1"]), idx(&p, &["d1", "a2"])],
        upper: vec![idx(&p, &["b1"]), idx(&p, &["b2"])],
    };
    assert!(poset_trace::trace::is_chain_tuple(&p, &naive));
    assert!(poset_trace::trace::is_chain_tuple(&p, &fixed));
    assert_eq!(face_dimension(&p, &PrimeKind::ChainCycle { tuple: naive }), 2);
    assert_eq!(face_dimension(&p, &PrimeKind::ChainCycle { tuple: fixed.clone() }), 3);
    let seq = StarSequence { a: idx(&p, &["a1", "a2"]), b: idx(&p, &["b1", "b2"]) };
    let realized = realize_chain_tuple(&p, &seq).unwrap();
    assert_eq!(realized, fixed);
    assert_eq!(face_dimension(&p, &PrimeKind::ChainCycle { tuple: realized }), 7 - 5 + 1);
}

#[test]
fn realization_needs_a_long_cycle() {
    let p = poset("p_bowtie");
    let s = StarSequence { a: idx(&p, &["a1"]), b: idx(&p, &["b1"]) };
    assert!(matches!(realize_chain_tuple(&p, &s), Err(Error::PreconditionViolated(_))));
}

#[test]
fn formula_face_dimensions_match_vertex_hulls() {
    for name in ["p_bowtie", "p_claw", "p_ladder", "p_fourcycle", "p_nx"] {
        let p = poset(name);
        let a = Analysis::new(p.clone());
        for s in a.star_sequences() {
            let k = PrimeKind::OrderCycle { sequence: s.clone() };
            assert_eq!(face_dimension(&p, &k), face_dimension_from_vertices(&p, &k), "{name}");
        }
        for c in a.impure_star_chains() {
            let k = PrimeKind::ChainStar { chain: c.clone() };
            assert_eq!(face_dimension(&p, &k), face_dimension_from_vertices(&p, &k), "{name}");
        }
    }
}

#[test]
fn order_certificate_on_nx() {
    let p = poset("p_nx");
    let a = Analysis::new(p.clone());
    let t = CoverTransfer::new(&p);
    // an interior order point: strictly decreasing along every cover
    let q = t.extended.clone();
    let mut v = vec![0i64; q.len()];
    for &x in q.linear_extension().iter().rev() {
        if let Some(m) = q.upper_covers(x).iter().map(|&y| v[y]).max() {
            v[x] = m + 1;
        }
    }
    let nu = LatticePoint::new(v[..p.len()].to_vec(), v[q.bottom().unwrap()]);
    assert!(in_order_cone(&p, &nu, 1));
    let m = a.order_member(&nu, true).unwrap();
    let cert = m.certificate().unwrap();
    assert!(verify_certificate(&p, &nu, cert));
}

#[test]
fn rank_and_dist_of_incomparable_pairs_fail() {
    let p = poset("p_bowtie");
    assert!(matches!(p.rank(0, 1), Err(Error::NotComparable(_, _))));
    assert!(matches!(p.dist(3, 4), Err(Error::NotComparable(_, _))));
}

#[test]
fn cover_point_leaving_g_is_rejected() {
    let p = poset("p_bowtie");
    let t = CoverTransfer::new(&p);
    let mut xi = LatticePoint::new(vec![0; t.covers.poset.len()], 0);
    xi.values[0] = 1;
    assert_eq!(t.psi(&xi), Err(Error::NotInG));
}

#[test]
fn bowtie_graded_point_is_an_order_member() {
    let p = poset("p_bowtie");
    let a = Analysis::new(p.clone());
    let nu = named(&p, 3, &[("a1", 2), ("a2", 2), ("x", 1), ("b1", 0), ("b2", 0)]);
    assert!(in_order_cone(&p, &nu, 0));
    let m = a.order_member(&nu, true).unwrap();
    let c = m.certificate().expect("certificate");
    assert!(verify_certificate(&p, &nu, c));
    assert!(poset_trace::oracle::lp_member_order(&p, &nu).unwrap());
}

#[test]
fn bowtie_constant_point_fails_on_the_long_cycle() {
    let p = poset("p_bowtie");
    let a = Analysis::new(p.clone());
    let nu = named(&p, 1, &[("a1", 1), ("a2", 1), ("x", 1), ("b1", 1), ("b2", 1)]);
    let q = p.extend(Extension::Both);
    match a.order_member(&nu, false).unwrap() {
        Membership::NonMember { witness: Witness::OrderCycle { sequence } } => {
            assert_eq!(q.names_of(&sequence.a), vec!["a1", "a2"]);
            assert_eq!(q.names_of(&sequence.b), vec!["b1", "b2"]);
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn bowtie_intervals_and_ideals() {
    let p = poset("p_bowtie");
    let i = |n: &str| p.lookup(n).unwrap();
    assert_eq!(p.rank(i("a1"), i("b1")).unwrap(), 2);
    assert_eq!(p.dist(i("a1"), i("b1")).unwrap(), 2);
    assert_eq!(p.dist(i("a2"), i("b1")).unwrap(), 1);
    // empty, {a1}, {a2}, {a1,a2}, {a1,x}, {a1,a2,x}, then with b1 / b2 on top
    assert_eq!(p.ideals().len(), 10);
}
