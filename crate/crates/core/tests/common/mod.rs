#![allow(dead_code)]

use poset_trace::io::{parse_point, parse_poset};
use poset_trace::{LatticePoint, Poset};

pub fn fixture_text(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn poset(name: &str) -> Poset {
    parse_poset(&fixture_text(name)).unwrap().0
}

pub fn point(p: &Poset, name: &str) -> LatticePoint {
    parse_point(p, &fixture_text(name)).unwrap()
}

pub fn named(p: &Poset, degree: i64, values: &[(&str, i64)]) -> LatticePoint {
    LatticePoint::from_named(p, degree, values).unwrap()
}

pub fn idx(p: &Poset, names: &[&str]) -> Vec<usize> {
    names.iter().map(|n| p.lookup(n).unwrap()).collect()
}

/// Hand-built certificate for `xi_nx`, with N = 2.
pub fn nx_certificate(p: &Poset) -> (LatticePoint, LatticePoint) {
    let eta = named(
        p,
        7,
        &[("a3", 4), ("b1", 3), ("b2", 2), ("d1", 2), ("d2", 2), ("a1", 1), ("a2", 1), ("e1", 1), ("e2", 1)],
    );
    let zeta = named(
        p,
        -1,
        &[("a1", 1), ("a2", 1), ("a3", 0), ("b2", 0), ("d1", 0), ("d2", 0), ("b1", -1), ("e1", -1), ("e2", -1)],
    );
    (eta, zeta)
}

/// Hand-built certificate for `xi_hex`, with N = 5.
pub fn hex_certificate(p: &Poset) -> (LatticePoint, LatticePoint) {
    let mut e = vec![("a1", 2), ("a2", 3), ("a3", 1), ("b1", 4), ("b2", 6), ("b3", 5)];
    let mut z = vec![("a1", 3), ("a2", 2), ("a3", 4), ("b1", 1), ("b2", -1), ("b3", 0)];
    for x in ["d1", "d2", "d3", "e1", "e2", "e3"] {
        e.push((x, 1));
        z.push((x, -1));
    }
    (named(p, 9, &e), named(p, 1, &z))
}

pub fn nx_mu(p: &Poset) -> Vec<i64> {
    named(p, 0, &[("b1", 1), ("e1", 1), ("e2", 1), ("a2", -1)]).values
}

pub fn hex_mu(p: &Poset) -> Vec<i64> {
    let mut v = vec![("a1", -2), ("a2", -1), ("a3", -3), ("b1", 0), ("b2", 2), ("b3", 1)];
    for x in ["d1", "d2", "d3", "e1", "e2", "e3"] {
        v.push((x, 1));
    }
    named(p, 0, &v).values
}
