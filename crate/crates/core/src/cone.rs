//! Lattice points of the two cones attached to a poset, the cover map
//! between them, and lattice-point counts of their graded pieces.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::construct::CoverPoset;
use crate::error::{Error, Result};
use crate::poset::{Extension, Poset};

/// Which ring: the Hibi ring (order polytope) or the stable set ring
/// (chain polytope).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ring {
    Order,
    Chain,
}

impl std::str::FromStr for Ring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Ring> {
        match s {
            "order" => Ok(Ring::Order),
            "chain" => Ok(Ring::Chain),
            _ => Err(Error::Parse(format!("unknown ring `{s}`"))),
        }
    }
}

/// A point with one value per element and a degree, which is the value at
/// the adjoined bottom. The value at the adjoined top is always 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    pub values: Vec<i64>,
    pub degree: i64,
}

impl LatticePoint {
    pub fn new(values: Vec<i64>, degree: i64) -> Self {
        LatticePoint { values, degree }
    }

    pub fn zero(n: usize) -> Self {
        LatticePoint { values: vec![0; n], degree: 0 }
    }

    /// Build from named values; missing elements are 0.
    pub fn from_named(p: &Poset, degree: i64, values: &[(&str, i64)]) -> Result<Self> {
        let mut v = vec![0; p.len()];
        for &(name, x) in values {
            if matches!(name, "inf" | "+inf" | "∞") && p.top().is_none() {
                return Err(Error::ValueAtInfinity);
            }
            v[p.lookup(name)?] = x;
        }
        Ok(LatticePoint { values: v, degree })
    }

    pub fn scale(&self, k: i64) -> Self {
        LatticePoint { values: self.values.iter().map(|v| v * k).collect(), degree: self.degree * k }
    }

    pub fn add(&self, other: &Self) -> Self {
        LatticePoint {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    /// Values on the extension by both sentinels, indexed as in
    /// `Poset::extend(Extension::Both)`.
    pub fn extended(&self) -> Vec<i64> {
        let mut v = self.values.clone();
        v.push(self.degree);
        v.push(0);
        v
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&i| self.values[i] != 0).collect()
    }

    pub fn named(&self, p: &Poset) -> Vec<(String, i64)> {
        (0..self.values.len()).map(|i| (p.name(i), self.values[i])).collect()
    }
}

/// Sum of a point over a set of elements.
pub fn sum_over(point: &LatticePoint, set: &[usize]) -> i64 {
    set.iter().map(|&i| point.values[i]).sum()
}

/// Membership in the order cone shifted by `n`: along every cover of the
/// poset with both sentinels the value drops by at least `n`.
pub fn in_order_cone(p: &Poset, nu: &LatticePoint, n: i64) -> bool {
    if nu.values.len() != p.len() {
        return false;
    }
    let q = p.extend(Extension::Both);
    let v = nu.extended();
    q.cover_pairs().into_iter().all(|(x, y)| v[x] - v[y] >= n)
}

/// Membership in the chain cone shifted by `n`: every value is at least `n`
/// and the degree exceeds every maximal chain sum by at least `n`.
pub fn in_chain_cone(p: &Poset, xi: &LatticePoint, n: i64) -> bool {
    xi.values.len() == p.len() && xi.values.iter().all(|&v| v >= n) && xi.degree >= p.max_chain_weight(&xi.values) + n
}

/// Same as [`in_chain_cone`], by listing every maximal chain.
pub fn in_chain_cone_by_chains(p: &Poset, xi: &LatticePoint, n: i64) -> bool {
    xi.values.len() == p.len()
        && xi.values.iter().all(|&v| v >= n)
        && p.maximal_chains().iter().all(|c| xi.degree >= sum_over(xi, c) + n)
}

pub fn in_cone(p: &Poset, ring: Ring, point: &LatticePoint, n: i64) -> bool {
    match ring {
        Ring::Order => in_order_cone(p, point, n),
        Ring::Chain => in_chain_cone(p, point, n),
    }
}

/// Maximal chains whose sum equals `level`.
pub fn level_chains<'a>(p: &'a Poset, xi: &LatticePoint, level: i64) -> Vec<&'a [usize]> {
    p.maximal_chains().iter().filter(|c| sum_over(xi, c) == level).map(|c| c.as_slice()).collect()
}

/// The cover map from order-cone points to points on the poset of covers
/// of the doubly extended poset, and its inverse.
#[derive(Clone, Debug)]
pub struct CoverTransfer {
    pub extended: Poset,
    pub covers: CoverPoset,
    base_len: usize,
}

impl CoverTransfer {
    pub fn new(p: &Poset) -> CoverTransfer {
        let extended = p.extend(Extension::Both);
        let covers = CoverPoset::new(&extended).expect("doubly extended poset has covers");
        CoverTransfer { extended, covers, base_len: p.len() }
    }

    /// Differences along covers. The degree is carried over.
    pub fn phi(&self, nu: &LatticePoint) -> LatticePoint {
        let v = nu.extended();
        let values = self.covers.pairs.iter().map(|&(x, y)| v[x] - v[y]).collect();
        LatticePoint { values, degree: nu.degree }
    }

    /// Sums from each element up to the top. Fails unless all saturated
    /// chains from bottom to top carry the same sum.
    pub fn psi(&self, xi: &LatticePoint) -> Result<LatticePoint> {
        let cp = &self.covers.poset;
        if xi.values.len() != cp.len() {
            return Err(Error::PreconditionViolated("point does not live on the cover poset".into()));
        }
        if cp.max_chain_weight(&xi.values) != cp.min_chain_weight(&xi.values) {
            return Err(Error::NotInG);
        }
        let q = &self.extended;
        let top = q.top().unwrap();
        let mut up = vec![0i64; q.len()];
        for &x in q.linear_extension().iter().rev() {
            if x == top {
                continue;
            }
            let y = q.upper_covers(x)[0];
            let alpha = self.covers.index_of_pair(x, y).unwrap();
            up[x] = xi.values[alpha] + up[y];
        }
        let bottom = q.bottom().unwrap();
        Ok(LatticePoint { values: up[..self.base_len].to_vec(), degree: up[bottom] })
    }
}

/// Number of lattice points of degree `d` in the order cone or the chain
/// cone. Both use a memoised sweep over a linear extension that remembers
/// only the values still needed by unprocessed elements.
pub fn count_points(p: &Poset, ring: Ring, d: i64) -> u128 {
    if d < 0 {
        return 0;
    }
    let order = p.linear_extension().to_vec();
    let n = order.len();
    let mut pos = vec![0; n];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    // elements whose state is still needed after step i
    let last_use: Vec<usize> = (0..n).map(|x| p.upper_covers(x).iter().map(|&y| pos[y]).max().unwrap_or(0)).collect();
    let live: Vec<Vec<usize>> =
        (0..n).map(|i| order[..=i].iter().copied().filter(|&x| last_use[x] > i).collect()).collect();
    let mut memo: HashMap<(usize, Vec<i64>), u128> = HashMap::new();
    let mut state = vec![0i64; n];
    count_step(p, ring, d, &order, &live, 0, &mut state, &mut memo)
}

#[allow(clippy::too_many_arguments)]
fn count_step(
    p: &Poset,
    ring: Ring,
    d: i64,
    order: &[usize],
    live: &[Vec<usize>],
    i: usize,
    state: &mut Vec<i64>,
    memo: &mut HashMap<(usize, Vec<i64>), u128>,
) -> u128 {
    if i == order.len() {
        return 1;
    }
    let key = (i, if i == 0 { Vec::new() } else { live[i - 1].iter().map(|&x| state[x]).collect() });
    if let Some(&c) = memo.get(&key) {
        return c;
    }
    let x = order[i];
    let lower = p.lower_covers(x);
    let mut total = 0u128;
    match ring {
        // state = value, order reversing, between 0 and d
        Ring::Order => {
            let hi = lower.iter().map(|&y| state[y]).min().unwrap_or(d);
            for v in 0..=hi {
                state[x] = v;
                total += count_step(p, ring, d, order, live, i + 1, state, memo);
            }
        }
        // state = heaviest chain sum ending here
        Ring::Chain => {
            let below = lower.iter().map(|&y| state[y]).max().unwrap_or(0);
            for v in 0..=(d - below) {
                state[x] = below + v;
                total += count_step(p, ring, d, order, live, i + 1, state, memo);
            }
        }
    }
    memo.insert(key, total);
    total
}

/// Every lattice point of degree `d` in the cone with shift 0, in a fixed
/// order. Intended for small posets.
pub fn enumerate_points(p: &Poset, ring: Ring, d: i64) -> Vec<LatticePoint> {
    let mut w = Walk {
        p,
        ring,
        d,
        order: p.linear_extension(),
        values: vec![0; p.len()],
        acc: vec![0; p.len()],
        out: Vec::new(),
    };
    if d >= 0 {
        w.go(0);
    }
    w.out
}

struct Walk<'a> {
    p: &'a Poset,
    ring: Ring,
    d: i64,
    order: &'a [usize],
    values: Vec<i64>,
    // heaviest chain sum ending at each element (chain cone only)
    acc: Vec<i64>,
    out: Vec<LatticePoint>,
}

impl Walk<'_> {
    fn go(&mut self, i: usize) {
        if i == self.order.len() {
            self.out.push(LatticePoint { values: self.values.clone(), degree: self.d });
            return;
        }
        let x = self.order[i];
        let lower = self.p.lower_covers(x);
        match self.ring {
            Ring::Order => {
                let hi = lower.iter().map(|&y| self.values[y]).min().unwrap_or(self.d);
                for v in 0..=hi {
                    self.values[x] = v;
                    self.go(i + 1);
                }
            }
            Ring::Chain => {
                let below = lower.iter().map(|&y| self.acc[y]).max().unwrap_or(0);
                for v in 0..=(self.d - below) {
                    self.values[x] = v;
                    self.acc[x] = below + v;
                    self.go(i + 1);
                }
            }
        }
    }
}
