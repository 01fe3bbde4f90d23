//! Alternating cycles `a1 < b1 > a2 < b2 > ... < bu > a1` whose rank sum
//! beats the distance sum of the crossing pairs. They certify non-purity
//! and index the minimal primes of the trace.

use serde::Serialize;

use crate::poset::Poset;

/// An alternating cycle, stored by element indices. Two sequences that
/// differ by a rotation are the same; the reversed cycle is a different
/// sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StarSequence {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl StarSequence {
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// The pairs compared by distance: `(a_{i+1}, b_i)` cyclically.
    pub fn crossing_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let u = self.a.len();
        (0..u).map(move |i| (self.a[(i + 1) % u], self.b[i]))
    }

    pub fn rank_sum(&self, q: &Poset) -> usize {
        self.a.iter().zip(&self.b).map(|(&a, &b)| q.rank(a, b).unwrap()).sum()
    }

    pub fn dist_sum(&self, q: &Poset) -> usize {
        self.crossing_pairs().map(|(a, b)| q.dist(a, b).unwrap()).sum()
    }

    /// Elements lying above some `a_i` and below some `b_j`.
    pub fn between(&self, q: &Poset) -> Vec<usize> {
        (0..q.len()).filter(|&x| self.a.iter().any(|&a| q.leq(a, x)) && self.b.iter().any(|&b| q.leq(x, b))).collect()
    }

    pub fn names(&self, q: &Poset) -> (Vec<String>, Vec<String>) {
        (q.names_of(&self.a), q.names_of(&self.b))
    }

    pub fn contains_sentinel(&self, q: &Poset) -> bool {
        self.a.iter().chain(&self.b).any(|&x| q.element(x).is_sentinel())
    }

    /// Rotate so that `a_1` has the smallest index.
    pub fn canonical(&self) -> StarSequence {
        let u = self.a.len();
        let k = (0..u).min_by_key(|&i| self.a[i]).unwrap_or(0);
        StarSequence {
            a: (0..u).map(|i| self.a[(i + k) % u]).collect(),
            b: (0..u).map(|i| self.b[(i + k) % u]).collect(),
        }
    }
}

/// Check every defining condition directly.
pub fn is_star_sequence(q: &Poset, s: &StarSequence) -> bool {
    let u = s.a.len();
    if u == 0 || s.b.len() != u {
        return false;
    }
    for i in 0..u {
        if !q.less(s.a[i], s.b[i]) || !q.less(s.a[(i + 1) % u], s.b[i]) {
            return false;
        }
        for j in 0..u {
            if i != j && (q.leq(s.a[i], s.a[j]) || q.leq(s.b[i], s.b[j])) {
                return false;
            }
        }
    }
    s.rank_sum(q) > s.dist_sum(q)
}

/// All sequences in `q`, each once up to rotation, ordered by their
/// canonical rotation.
pub fn enumerate_star_sequences(q: &Poset) -> Vec<StarSequence> {
    let starts: Vec<usize> = (0..q.len()).collect();
    #[cfg(feature = "parallel")]
    let parts: Vec<Vec<StarSequence>> = {
        use rayon::prelude::*;
        starts.par_iter().map(|&a1| from_start(q, a1)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<Vec<StarSequence>> = starts.iter().map(|&a1| from_start(q, a1)).collect();
    let mut out: Vec<StarSequence> = parts.into_iter().flatten().collect();
    out.sort();
    out
}

fn from_start(q: &Poset, a1: usize) -> Vec<StarSequence> {
    let mut out = Vec::new();
    let mut a = vec![a1];
    let mut b = Vec::new();
    grow(q, &mut a, &mut b, &mut out);
    out
}

fn grow(q: &Poset, a: &mut Vec<usize>, b: &mut Vec<usize>, out: &mut Vec<StarSequence>) {
    let last = *a.last().unwrap();
    let a1 = a[0];
    for y in 0..q.len() {
        if !q.less(last, y) || b.iter().any(|&z| q.comparable(z, y)) {
            continue;
        }
        b.push(y);
        if q.less(a1, y) {
            let s = StarSequence { a: a.clone(), b: b.clone() };
            if s.rank_sum(q) > s.dist_sum(q) {
                out.push(s);
            }
        }
        for x in a1 + 1..q.len() {
            if q.less(x, y) && a.iter().all(|&z| !q.comparable(z, x)) {
                a.push(x);
                grow(q, a, b, out);
                a.pop();
            }
        }
        b.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Extension;

    #[test]
    fn bowtie_has_four() {
        let p = Poset::from_pairs(
            &["a1", "a2", "x", "b1", "b2"],
            &[("a1", "x"), ("x", "b1"), ("a1", "b2"), ("a2", "b1"), ("a2", "b2")],
        )
        .unwrap();
        let q = p.extend(Extension::Both);
        let seqs = enumerate_star_sequences(&q);
        let names: Vec<_> = seqs.iter().map(|s| s.names(&q)).collect();
        assert_eq!(seqs.len(), 4, "{names:?}");
        assert!(seqs.iter().all(|s| is_star_sequence(&q, s)));
        assert!(names.contains(&(vec!["a1".into(), "a2".into()], vec!["b1".into(), "b2".into()])));
        assert!(names.contains(&(vec!["-inf".into()], vec!["inf".into()])));
    }

    #[test]
    fn chain_has_none() {
        let p = Poset::from_pairs(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(enumerate_star_sequences(&p.extend(Extension::Both)).is_empty());
    }
}
