//! Seeded random posets and points, and exhaustive lists of small posets
//! up to isomorphism.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cone::{LatticePoint, Ring};
use crate::poset::{ExtendedElement, Poset};

pub const SEED_ENV: &str = "POSET_GORENSTEIN_SEED";
pub const DEFAULT_SEED: u64 = 0x05ee_d0f0_b5e7;

/// Seed from the environment, or `default` when unset or unparsable.
pub fn seed_from_env(default: u64) -> u64 {
    std::env::var(SEED_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(default)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn labels(n: usize) -> Vec<ExtendedElement> {
    (0..n).map(|i| ExtendedElement::plain(format!("p{i}"))).collect()
}

/// A random poset on `n` elements: each pair `i < j` is related with
/// probability `density`, then closed under transitivity.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, density: f64) -> Poset {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(density) {
                edges.push((i, j));
            }
        }
    }
    Poset::from_edges(labels(n), &edges).expect("forward edges are acyclic").0
}

/// Random size in `1..=max_n` and random density.
pub fn random_small_poset<R: Rng>(rng: &mut R, max_n: usize) -> Poset {
    let n = rng.random_range(1..=max_n);
    let density = rng.random_range(0.15..0.7);
    random_poset(rng, n, density)
}

/// A random point of degree `d` in the cone (shift 0).
pub fn random_point<R: Rng>(rng: &mut R, p: &Poset, ring: Ring, d: i64) -> LatticePoint {
    let mut values = vec![0i64; p.len()];
    match ring {
        Ring::Order => {
            for &x in p.linear_extension() {
                let hi = p.lower_covers(x).iter().map(|&y| values[y]).min().unwrap_or(d);
                values[x] = rng.random_range(0..=hi);
            }
        }
        Ring::Chain => {
            let mut acc = vec![0i64; p.len()];
            let order: Vec<usize> = p.linear_extension().to_vec();
            // spread the budget: visit in a random rotation of a linear extension
            let mut room: Vec<i64> = vec![d; p.len()];
            for &x in &order {
                let below = p.lower_covers(x).iter().map(|&y| acc[y]).max().unwrap_or(0);
                let cap = (d - below).min(room[x]);
                values[x] = if cap > 0 { rng.random_range(0..=cap) } else { 0 };
                acc[x] = below + values[x];
                room[x] = cap;
            }
            // every maximal chain must stay within d
            for c in p.maximal_chains() {
                let s: i64 = c.iter().map(|&x| values[x]).sum();
                debug_assert!(s <= d);
            }
        }
    }
    LatticePoint::new(values, d)
}

/// All posets on `n` elements up to isomorphism, each with elements
/// `p0..` listed in a canonical order. Practical up to `n = 9`.
pub fn all_posets(n: usize) -> Vec<Poset> {
    assert!(n <= 11, "canonical codes hold at most 11 elements");
    let mut level: Vec<Vec<Vec<bool>>> = vec![Vec::new()];
    for k in 1..=n {
        let mut seen: HashSet<u128> = HashSet::new();
        let mut next = Vec::new();
        for rel in &level {
            let q = from_relation(rel);
            for ideal in q.ideals() {
                let mut r: Vec<Vec<bool>> = rel
                    .iter()
                    .map(|row| {
                        let mut row = row.clone();
                        row.push(false);
                        row
                    })
                    .collect();
                let mut last = vec![false; k];
                for &x in &ideal {
                    r[x][k - 1] = true;
                }
                last[k - 1] = false;
                r.push(last);
                let (code, perm) = canonical(&r);
                if seen.insert(code) {
                    next.push(permute(&r, &perm));
                }
            }
        }
        level = next;
    }
    level.iter().map(|r| from_relation(r)).collect()
}

fn from_relation(rel: &[Vec<bool>]) -> Poset {
    Poset::from_strict_order(labels(rel.len()), rel.to_vec()).expect("strict order")
}

fn permute(rel: &[Vec<bool>], perm: &[usize]) -> Vec<Vec<bool>> {
    // perm[new] = old
    let n = rel.len();
    (0..n).map(|i| (0..n).map(|j| rel[perm[i]][perm[j]]).collect()).collect()
}

fn code_of(rel: &[Vec<bool>], perm: &[usize]) -> u128 {
    let n = rel.len();
    let mut c = 0u128;
    for i in 0..n {
        for j in 0..n {
            c = (c << 1) | rel[perm[i]][perm[j]] as u128;
        }
    }
    c
}

/// Colour refinement on the order relation, then the smallest code over
/// all orderings that respect the colour classes.
fn canonical(rel: &[Vec<bool>]) -> (u128, Vec<usize>) {
    let n = rel.len();
    let mut colour: Vec<usize> = vec![0; n];
    loop {
        let sigs: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
            .map(|x| {
                let mut down: Vec<usize> = (0..n).filter(|&y| rel[y][x]).map(|y| colour[y]).collect();
                let mut up: Vec<usize> = (0..n).filter(|&y| rel[x][y]).map(|y| colour[y]).collect();
                down.sort_unstable();
                up.sort_unstable();
                (colour[x], down, up)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let stable = distinct.len() == colour.iter().collect::<HashSet<_>>().len();
        colour = next;
        if stable {
            break;
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let ncol = colour.iter().max().map_or(0, |m| m + 1);
    for c in 0..ncol {
        classes.push((0..n).filter(|&x| colour[x] == c).collect());
    }
    let mut best: Option<(u128, Vec<usize>)> = None;
    let mut perm = Vec::with_capacity(n);
    search_perms(rel, &classes, 0, &mut perm, &mut vec![false; n], &mut best);
    best.unwrap_or((0, Vec::new()))
}

fn search_perms(
    rel: &[Vec<bool>],
    classes: &[Vec<usize>],
    ci: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    best: &mut Option<(u128, Vec<usize>)>,
) {
    if ci == classes.len() {
        let c = code_of(rel, perm);
        if best.as_ref().is_none_or(|(b, _)| c < *b) {
            *best = Some((c, perm.clone()));
        }
        return;
    }
    let class = &classes[ci];
    let placed = class.iter().filter(|&&x| used[x]).count();
    if placed == class.len() {
        search_perms(rel, classes, ci + 1, perm, used, best);
        return;
    }
    for &x in class {
        if !used[x] {
            used[x] = true;
            perm.push(x);
            search_perms(rel, classes, ci, perm, used, best);
            perm.pop();
            used[x] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| all_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63, 318]);
    }

    #[test]
    fn random_points_lie_in_cone() {
        let mut r = rng(7);
        for _ in 0..50 {
            let p = random_small_poset(&mut r, 6);
            for ring in [Ring::Order, Ring::Chain] {
                let x = random_point(&mut r, &p, ring, 3);
                assert!(crate::cone::in_cone(&p, ring, &x, 0));
            }
        }
    }
}
