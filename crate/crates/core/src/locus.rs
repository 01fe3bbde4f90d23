//! The non-Gorenstein locus: faces cut out by the minimal primes of the
//! trace, their dimensions, and the resulting locus dimension.

use serde::Serialize;

use crate::cone::Ring;
use crate::cycles::StarSequence;
use crate::error::{Error, Result};
use crate::linalg::affine_dimension;
use crate::poset::Poset;
use crate::trace::{Analysis, ChainTuple};

/// What a prime containing the trace is indexed by.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PrimeKind {
    /// A chain with impure star (stable set ring).
    ChainStar { chain: Vec<usize> },
    /// Chains around an alternating cycle (stable set ring).
    ChainCycle { tuple: ChainTuple },
    /// An alternating cycle of the doubly extended poset (Hibi ring).
    OrderCycle { sequence: StarSequence },
}

impl PrimeKind {
    pub fn ring(&self) -> Ring {
        match self {
            PrimeKind::OrderCycle { .. } => Ring::Order,
            _ => Ring::Chain,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeLabel {
    pub kind: PrimeKind,
    pub coheight: i64,
    pub face_dim: i64,
    /// Indices into [`vertices`] of the vertices on the face.
    #[serde(skip)]
    pub face_vertices: Vec<usize>,
    /// Not contained in another listed prime.
    pub minimal: bool,
}

/// Vertices of the polytope as element sets: order ideals for the order
/// polytope, antichains for the chain polytope.
pub fn vertices(p: &Poset, ring: Ring) -> Vec<Vec<usize>> {
    match ring {
        Ring::Order => p.ideals(),
        Ring::Chain => p.antichains(),
    }
}

fn indicator(n: usize, set: &[usize]) -> Vec<i64> {
    let mut v = vec![0; n];
    for &x in set {
        v[x] = 1;
    }
    v
}

fn count_in(set: &[usize], chain: &[usize]) -> usize {
    chain.iter().filter(|x| set.contains(x)).count()
}

/// Whether a vertex of the polytope of `kind.ring()` lies on the face.
/// Sequences are indexed in the doubly extended poset, whose first
/// `p.len()` indices agree with `p`.
pub fn on_face(p: &Poset, kind: &PrimeKind, vertex: &[usize]) -> bool {
    match kind {
        PrimeKind::ChainStar { chain } => count_in(vertex, chain) == 1,
        PrimeKind::ChainCycle { tuple } => {
            let hits: usize = tuple.lower.iter().chain(&tuple.upper).map(|c| count_in(vertex, c)).sum();
            hits == tuple.lower.len()
        }
        PrimeKind::OrderCycle { sequence } => {
            let n = p.len();
            // bottom sentinel sits at n and is always in, the top is never in
            let val = |x: usize| -> i64 {
                if x < n {
                    vertex.contains(&x) as i64
                } else {
                    (x == n) as i64
                }
            };
            sequence.a.iter().map(|&a| val(a)).sum::<i64>() == sequence.b.iter().map(|&b| val(b)).sum::<i64>()
        }
    }
}

pub fn face_vertices(p: &Poset, kind: &PrimeKind, verts: &[Vec<usize>]) -> Vec<usize> {
    (0..verts.len()).filter(|&i| on_face(p, kind, &verts[i])).collect()
}

/// Dimension of the face from the affine hull of its vertices.
pub fn face_dimension_from_vertices(p: &Poset, kind: &PrimeKind) -> i64 {
    let verts = vertices(p, kind.ring());
    let pts: Vec<Vec<i64>> =
        face_vertices(p, kind, &verts).into_iter().map(|i| indicator(p.len(), &verts[i])).collect();
    affine_dimension(&pts)
}

/// Dimension of the face: closed formulas for stars and order cycles,
/// vertex hull for chain tuples.
pub fn face_dimension(p: &Poset, kind: &PrimeKind) -> i64 {
    let n = p.len() as i64;
    match kind {
        PrimeKind::ChainStar { chain } => n - p.link(chain).len() as i64 - 1,
        PrimeKind::OrderCycle { sequence } => {
            let q = p.extend(crate::poset::Extension::Both);
            n - sequence.between(&q).len() as i64 + 1
        }
        PrimeKind::ChainCycle { .. } => face_dimension_from_vertices(p, kind),
    }
}

/// Elements above some `a_i` and below some `b_j` of a chain tuple.
pub fn tuple_between(p: &Poset, t: &ChainTuple) -> Vec<usize> {
    t.ends().between(p)
}

/// Choose chains around a finite cycle of length at least 2 so that the
/// face has the largest possible dimension: each chain descends (ascends)
/// greedily through a fixed ordering of everything below (above) the cycle
/// by decreasing height (coheight), so the chains merge as early as
/// possible.
pub fn realize_chain_tuple(p: &Poset, seq: &StarSequence) -> Result<ChainTuple> {
    if seq.len() < 2 {
        return Err(Error::PreconditionViolated("tuple realization needs a cycle of length at least 2".into()));
    }
    if seq.a.iter().chain(&seq.b).any(|&x| x >= p.len()) {
        return Err(Error::PreconditionViolated("cycle must avoid the sentinels".into()));
    }
    let heights: Vec<usize> = (0..p.len()).map(|x| p.height(x)).collect();
    let coheights: Vec<usize> = (0..p.len()).map(|x| p.coheight(x)).collect();
    let mut below: Vec<usize> = (0..p.len()).filter(|&x| seq.a.iter().any(|&a| p.less(x, a))).collect();
    below.sort_by_key(|&x| std::cmp::Reverse(heights[x]));
    let mut above: Vec<usize> = (0..p.len()).filter(|&x| seq.b.iter().any(|&b| p.less(b, x))).collect();
    above.sort_by_key(|&x| std::cmp::Reverse(coheights[x]));
    let lower = seq
        .a
        .iter()
        .map(|&a| {
            let mut c = vec![a];
            let mut cur = a;
            while heights[cur] > 0 {
                cur = *below.iter().find(|&&d| p.less(d, cur)).unwrap();
                c.push(cur);
            }
            c.reverse();
            c
        })
        .collect();
    let upper = seq
        .b
        .iter()
        .map(|&b| {
            let mut c = vec![b];
            let mut cur = b;
            while coheights[cur] > 0 {
                cur = *above.iter().find(|&&d| p.less(cur, d)).unwrap();
                c.push(cur);
            }
            c
        })
        .collect();
    Ok(ChainTuple { lower, upper })
}

/// Krull dimension of the non-Gorenstein locus of the Hibi ring; -1 when
/// the ring is Gorenstein.
pub fn order_locus_dimension(a: &Analysis) -> i64 {
    let p = a.poset();
    let q = a.extended();
    a.star_sequences().iter().map(|s| p.len() as i64 - s.between(q).len() as i64 + 2).max().unwrap_or(-1)
}

/// Krull dimension of the non-Gorenstein locus of the stable set ring; -1
/// when the ring is Gorenstein. Computed from chain stars and realized
/// chain tuples, independently of the order side.
pub fn chain_locus_dimension(a: &Analysis) -> i64 {
    let p = a.poset();
    let n = p.len() as i64;
    let stars = a.impure_star_chains().iter().map(|c| n - p.link(c).len() as i64);
    let tuples = a.finite_star_sequences().into_iter().filter(|s| s.len() >= 2).map(|s| {
        let t = realize_chain_tuple(p, s).expect("finite cycle of length 2 or more");
        face_dimension_from_vertices(p, &PrimeKind::ChainCycle { tuple: t }) + 1
    });
    stars.chain(tuples).max().unwrap_or(-1)
}

pub fn locus_dimension(a: &Analysis, ring: Ring) -> i64 {
    match ring {
        Ring::Order => order_locus_dimension(a),
        Ring::Chain => chain_locus_dimension(a),
    }
}

fn decompose(p: &Poset, ring: Ring, kinds: Vec<PrimeKind>) -> Vec<PrimeLabel> {
    let verts = vertices(p, ring);
    let mut labels: Vec<PrimeLabel> = Vec::new();
    for kind in kinds {
        let fv = face_vertices(p, &kind, &verts);
        if labels.iter().any(|l| l.face_vertices == fv) {
            continue;
        }
        let face_dim = face_dimension(p, &kind);
        labels.push(PrimeLabel { kind, coheight: face_dim + 1, face_dim, face_vertices: fv, minimal: true });
    }
    let sets: Vec<Vec<usize>> = labels.iter().map(|l| l.face_vertices.clone()).collect();
    for (i, l) in labels.iter_mut().enumerate() {
        l.minimal = !sets
            .iter()
            .enumerate()
            .any(|(j, s)| j != i && s.len() > sets[i].len() && sets[i].iter().all(|v| s.binary_search(v).is_ok()));
    }
    labels
}

/// Primes indexed by alternating cycles of the doubly extended poset,
/// deduplicated by face; `minimal` marks the minimal primes of the trace.
pub fn order_radical_decomposition(a: &Analysis) -> Vec<PrimeLabel> {
    let kinds = a.star_sequences().iter().map(|s| PrimeKind::OrderCycle { sequence: s.clone() }).collect();
    decompose(a.poset(), Ring::Order, kinds)
}

/// Primes indexed by chains with impure star and by realized chain
/// tuples, deduplicated by face; `minimal` marks the minimal primes.
pub fn chain_radical_decomposition(a: &Analysis) -> Vec<PrimeLabel> {
    let p = a.poset();
    let mut kinds: Vec<PrimeKind> =
        a.impure_star_chains().iter().map(|c| PrimeKind::ChainStar { chain: c.clone() }).collect();
    for s in a.finite_star_sequences() {
        if s.len() >= 2 {
            kinds.push(PrimeKind::ChainCycle { tuple: realize_chain_tuple(p, s).unwrap() });
        }
    }
    decompose(p, Ring::Chain, kinds)
}

pub fn radical_decomposition(a: &Analysis, ring: Ring) -> Vec<PrimeLabel> {
    match ring {
        Ring::Order => order_radical_decomposition(a),
        Ring::Chain => chain_radical_decomposition(a),
    }
}

/// A poset whose rings have dimension `ring_dim` and a non-Gorenstein locus
/// of dimension `locus_dim`: a chain and a point side by side, with a chain
/// of `locus_dim` elements on top of both.
pub fn generate_poset(ring_dim: usize, locus_dim: usize) -> Result<Poset> {
    if ring_dim < 4 || locus_dim > ring_dim - 4 {
        return Err(Error::OutOfRange(format!(
            "need 0 <= locus_dim <= ring_dim - 4, got ring_dim {ring_dim}, locus_dim {locus_dim}"
        )));
    }
    let k = ring_dim - locus_dim - 2;
    let mut names: Vec<String> = (1..=k).map(|i| format!("s{i}")).collect();
    names.push("t".into());
    names.extend((1..=locus_dim).map(|i| format!("c{i}")));
    let mut covers: Vec<(String, String)> = (1..k).map(|i| (format!("s{i}"), format!("s{}", i + 1))).collect();
    if locus_dim > 0 {
        covers.push((format!("s{k}"), "c1".into()));
        covers.push(("t".into(), "c1".into()));
    }
    covers.extend((1..locus_dim).map(|i| (format!("c{i}"), format!("c{}", i + 1))));
    Poset::build(&names, &covers).map(|(p, _)| p)
}
