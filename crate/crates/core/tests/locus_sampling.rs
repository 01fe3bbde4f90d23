//! The listed primes cut out exactly the non-members: a point lies outside
//! the radical of the trace iff it lies in the cone over one of the faces.

use poset_trace::cone::{enumerate_points, Ring};
use poset_trace::gen::all_posets;
use poset_trace::locus::{radical_decomposition, vertices, PrimeLabel};
use poset_trace::{Analysis, Extension, LatticePoint, Poset};

/// Facet inequalities of the cone as coefficient rows on
/// `(values.., degree)`; each row must be `>= 0`.
fn facets(p: &Poset, ring: Ring) -> Vec<Vec<i64>> {
    let n = p.len();
    let mut rows = Vec::new();
    match ring {
        Ring::Order => {
            let q = p.extend(Extension::Both);
            for (x, y) in q.cover_pairs() {
                // top carries 0, bottom carries the degree
                let mut r = vec![0; n + 1];
                if x != n + 1 {
                    r[x.min(n)] += 1;
                }
                if y != n + 1 {
                    r[y.min(n)] -= 1;
                }
                rows.push(r);
            }
        }
        Ring::Chain => {
            for x in 0..n {
                let mut r = vec![0; n + 1];
                r[x] = 1;
                rows.push(r);
            }
            for c in p.maximal_chains() {
                let mut r = vec![0; n + 1];
                r[n] = 1;
                for &x in c {
                    r[x] = -1;
                }
                rows.push(r);
            }
        }
    }
    rows
}

fn eval(row: &[i64], v: &[i64]) -> i64 {
    row.iter().zip(v).map(|(a, b)| a * b).sum()
}

fn lift(values: Vec<i64>, degree: i64) -> Vec<i64> {
    let mut v = values;
    v.push(degree);
    v
}

/// The point satisfies with equality every facet that is tight on the
/// whole face.
fn in_face_cone(rows: &[Vec<i64>], verts: &[Vec<i64>], label: &PrimeLabel, x: &LatticePoint) -> bool {
    let pt = lift(x.values.clone(), x.degree);
    rows.iter().filter(|r| label.face_vertices.iter().all(|&i| eval(r, &verts[i]) == 0)).all(|r| eval(r, &pt) == 0)
}

fn check(p: &Poset, d_max: i64) {
    let a = Analysis::new(p.clone());
    for ring in [Ring::Order, Ring::Chain] {
        let rows = facets(p, ring);
        let verts: Vec<Vec<i64>> = vertices(p, ring)
            .iter()
            .map(|s| {
                let mut v = vec![0; p.len()];
                for &x in s {
                    v[x] = 1;
                }
                lift(v, 1)
            })
            .collect();
        let labels = radical_decomposition(&a, ring);
        let minimal: Vec<&PrimeLabel> = labels.iter().filter(|l| l.minimal).collect();
        for d in 0..=d_max {
            for x in enumerate_points(p, ring, d) {
                let member = a.member(ring, &x, false).unwrap().is_member();
                let on_any = labels.iter().any(|l| in_face_cone(&rows, &verts, l, &x));
                let on_minimal = minimal.iter().any(|l| in_face_cone(&rows, &verts, l, &x));
                assert_eq!(!member, on_any, "{ring:?} {:?} at {:?}", p.cover_names(), x.named(p));
                assert_eq!(on_any, on_minimal, "{ring:?} {:?}: minimal primes miss {:?}", p.cover_names(), x.named(p));
            }
        }
    }
}

#[test]
fn primes_cut_out_non_members_on_small_posets() {
    for n in 1..=5 {
        for p in all_posets(n) {
            check(&p, 2);
        }
    }
}

#[test]
fn primes_cut_out_non_members_on_examples() {
    for name in ["p_bowtie", "p_claw", "p_ladder", "p_nx", "p_fourcycle"] {
        let text =
            std::fs::read_to_string(format!("{}/tests/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))).unwrap();
        let (p, _) = poset_trace::io::parse_poset(&text).unwrap();
        check(&p, 2);
    }
}
