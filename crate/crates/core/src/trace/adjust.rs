use serde::Serialize;

use crate::cone::{in_chain_cone, sum_over, LatticePoint};
use crate::error::{Error, Result};
use crate::poset::Poset;

/// An integer function on the elements that is 1 off the support of the
/// point and sums to the same value on every chain of top level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjustFunction {
    pub mu: Vec<i64>,
    pub level: i64,
}

/// Check the defining properties of an adjustment function for `xi`.
pub fn is_adjustment(p: &Poset, xi: &LatticePoint, f: &AdjustFunction) -> bool {
    if f.mu.len() != p.len() {
        return false;
    }
    let off_support_ok = (0..p.len()).all(|z| xi.values[z] != 0 || f.mu[z] == 1);
    let top: Vec<&Vec<usize>> = p.maximal_chains().iter().filter(|c| sum_over(xi, c) == xi.degree).collect();
    let level_ok = if top.is_empty() {
        f.level == 0
    } else {
        top.iter().all(|c| c.iter().map(|&z| f.mu[z]).sum::<i64>() == f.level)
    };
    off_support_ok && level_ok
}

struct Setup<'a> {
    p: &'a Poset,
    chains: Vec<&'a [usize]>,
    member: Vec<Vec<bool>>,
    supp: Vec<bool>,
}

impl Setup<'_> {
    fn sums(&self, mu: &[i64]) -> Vec<i64> {
        self.chains.iter().map(|c| c.iter().map(|&z| mu[z]).sum()).collect()
    }

    fn prefix(&self, chain: usize, z: usize, mu: &[i64]) -> i64 {
        self.chains[chain].iter().filter(|&&y| self.p.less(y, z)).map(|&y| mu[y]).sum()
    }

    /// `a` is covered by `b` inside the support.
    fn supp_cover(&self, a: usize, b: usize) -> bool {
        self.supp[a]
            && self.supp[b]
            && self.p.less(a, b)
            && !(0..self.p.len()).any(|z| self.supp[z] && self.p.less(a, z) && self.p.less(z, b))
    }

    fn linked(&self, a: usize, b: usize, allowed: &[usize]) -> bool {
        self.supp_cover(a, b) && allowed.iter().any(|&c| self.member[c][a] && self.member[c][b])
    }
}

/// Build an adjustment function by repeatedly shifting weight from the
/// heaviest top-level chains towards the lightest ones.
///
/// Requires `xi` in the chain cone and the two membership conditions;
/// when these fail the iteration stops making progress and this returns
/// `PreconditionViolated` instead of looping.
pub fn adjust_mu(p: &Poset, xi: &LatticePoint) -> Result<AdjustFunction> {
    if !in_chain_cone(p, xi, 0) {
        return Err(Error::NotInCone("adjustment needs a point of the chain cone".into()));
    }
    let d = xi.degree;
    let chains: Vec<&[usize]> =
        p.maximal_chains().iter().filter(|c| sum_over(xi, c) == d).map(|c| c.as_slice()).collect();
    let supp: Vec<bool> = xi.values.iter().map(|&v| v != 0).collect();
    let mut mu: Vec<i64> = supp.iter().map(|&s| if s { 0 } else { 1 }).collect();
    if chains.is_empty() {
        return Ok(AdjustFunction { mu, level: 0 });
    }
    let member = chains
        .iter()
        .map(|c| {
            let mut m = vec![false; p.len()];
            for &z in c.iter() {
                m[z] = true;
            }
            m
        })
        .collect();
    let s = Setup { p, chains, member, supp };
    loop {
        let sums = s.sums(&mu);
        let hi = *sums.iter().max().unwrap();
        let lo = *sums.iter().min().unwrap();
        if hi == lo {
            return Ok(AdjustFunction { mu, level: hi });
        }
        let next = step(&s, &mu, &sums, hi, lo)?;
        let new_sums = s.sums(&next);
        let new_hi = *new_sums.iter().max().unwrap();
        let new_lo = *new_sums.iter().min().unwrap();
        let count_at = |v: &[i64], level: i64| v.iter().filter(|&&x| x == level).count();
        if new_hi > hi || new_lo < lo || count_at(&new_sums, hi) >= count_at(&sums, hi) {
            return Err(Error::PreconditionViolated("adjustment step did not reduce the spread of chain sums".into()));
        }
        mu = next;
    }
}

fn step(s: &Setup, mu: &[i64], sums: &[i64], hi: i64, lo: i64) -> Result<Vec<i64>> {
    let k = s.chains.len();
    let heavy: Vec<usize> = (0..k).filter(|&c| sums[c] == hi).collect();
    let light: Vec<usize> = (0..k).filter(|&c| sums[c] == lo).collect();
    let near_heavy: Vec<usize> = (0..k).filter(|&c| sums[c] == hi || sums[c] == hi - 1).collect();
    let c0 = heavy[0];
    let cs: Vec<usize> = s.chains[c0].iter().copied().filter(|&z| s.supp[z]).collect();
    if cs.is_empty() {
        return Err(Error::PreconditionViolated("a top-level chain misses the support".into()));
    }
    let mut next = mu.to_vec();
    if !light.iter().any(|&c| s.member[c][cs[0]]) {
        next[cs[0]] -= 1;
        return Ok(next);
    }
    let pick = (0..cs.len()).rev().find(|&l| {
        let target = s.prefix(c0, cs[l], mu);
        light.iter().any(|&c| s.member[c][cs[l]] && s.prefix(c, cs[l], mu) == target)
    });
    let Some(l) = pick else {
        return Err(Error::PreconditionViolated("no light chain meets the heavy chain".into()));
    };
    if l + 1 == cs.len() {
        return Err(Error::PreconditionViolated("a chain with impure star reaches the top level".into()));
    }
    let n = s.p.len();
    let mut in_a = vec![false; n];
    let mut in_b = vec![false; n];
    let mut frontier_a = vec![cs[l]];
    in_a[cs[l]] = true;
    loop {
        let frontier_b: Vec<usize> =
            (0..n).filter(|&b| !in_b[b] && frontier_a.iter().any(|&a| s.linked(a, b, &light))).collect();
        if frontier_b.is_empty() {
            break;
        }
        for &b in &frontier_b {
            in_b[b] = true;
        }
        frontier_a = (0..n).filter(|&a| !in_a[a] && frontier_b.iter().any(|&b| s.linked(a, b, &near_heavy))).collect();
        if frontier_a.is_empty() {
            break;
        }
        for &a in &frontier_a {
            in_a[a] = true;
        }
    }
    if s.chains[c0].iter().any(|&z| in_b[z]) {
        return Err(Error::PreconditionViolated("raised set meets the heavy chain".into()));
    }
    for z in 0..n {
        next[z] += in_b[z] as i64 - in_a[z] as i64;
    }
    Ok(next)
}
