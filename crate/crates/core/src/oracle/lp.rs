//! Membership decided by exact linear feasibility, without any of the
//! combinatorial criteria: does some `N >= 1` admit a rational `eta` with
//! `eta` in the cone shifted by 1 and `N * point - eta` in the cone
//! shifted by -1?

use crate::cone::{in_chain_cone, in_order_cone, LatticePoint, Ring};
use crate::error::{Error, Result};
use crate::oracle::fm::{solve, Feasibility, Inequality, Rational};
use crate::poset::{Extension, Poset};

/// Variables: `eta(x)` for each element, then `eta` at the bottom, then `N`.
pub fn order_system(p: &Poset, nu: &LatticePoint) -> Vec<Inequality> {
    let n = p.len();
    let nvars = n + 2;
    let q = p.extend(Extension::Both);
    let v = nu.extended();
    let var = |x: usize| -> Option<usize> { (x <= n).then_some(x) };
    let mut rows = Vec::new();
    for (x, y) in q.cover_pairs() {
        let mut lower = vec![0i128; nvars];
        let mut upper = vec![0i128; nvars];
        if let Some(i) = var(x) {
            lower[i] += 1;
            upper[i] -= 1;
        }
        if let Some(j) = var(y) {
            lower[j] -= 1;
            upper[j] += 1;
        }
        upper[n + 1] = (v[x] - v[y]) as i128;
        rows.push(Inequality::new(lower, -1));
        rows.push(Inequality::new(upper, 1));
    }
    let mut big = vec![0i128; nvars];
    big[n + 1] = 1;
    rows.push(Inequality::new(big, -1));
    rows
}

/// Same variables as [`order_system`].
pub fn chain_system(p: &Poset, xi: &LatticePoint) -> Vec<Inequality> {
    let n = p.len();
    let nvars = n + 2;
    let (bot, big) = (n, n + 1);
    let mut rows = Vec::new();
    for x in 0..n {
        let mut r = vec![0i128; nvars];
        r[x] = 1;
        rows.push(Inequality::new(r, -1));
        let mut r = vec![0i128; nvars];
        r[big] = xi.values[x] as i128;
        r[x] = -1;
        rows.push(Inequality::new(r, 1));
    }
    for c in p.maximal_chains() {
        let mut r = vec![0i128; nvars];
        r[bot] = 1;
        for &x in c {
            r[x] -= 1;
        }
        rows.push(Inequality::new(r, -1));
        let mut r = vec![0i128; nvars];
        let sum: i64 = c.iter().map(|&x| xi.values[x]).sum();
        r[big] = (xi.degree - sum) as i128;
        r[bot] = -1;
        for &x in c {
            r[x] += 1;
        }
        rows.push(Inequality::new(r, 1));
    }
    let mut r = vec![0i128; nvars];
    r[big] = 1;
    rows.push(Inequality::new(r, -1));
    rows
}

/// A feasible `(eta, eta at bottom, N)` if one exists.
pub fn lp_solve(p: &Poset, ring: Ring, point: &LatticePoint) -> Result<Option<Vec<Rational>>> {
    let ok = match ring {
        Ring::Order => in_order_cone(p, point, 0),
        Ring::Chain => in_chain_cone(p, point, 0),
    };
    if !ok {
        return Err(Error::NotInCone(format!("point is not in the {ring:?} cone").to_lowercase()));
    }
    let rows = match ring {
        Ring::Order => order_system(p, point),
        Ring::Chain => chain_system(p, point),
    };
    Ok(match solve(p.len() + 2, &rows)? {
        Feasibility::Feasible(x) => Some(x),
        Feasibility::Infeasible => None,
    })
}

pub fn lp_member(p: &Poset, ring: Ring, point: &LatticePoint) -> Result<bool> {
    lp_solve(p, ring, point).map(|x| x.is_some())
}

pub fn lp_member_order(p: &Poset, nu: &LatticePoint) -> Result<bool> {
    lp_member(p, Ring::Order, nu)
}

pub fn lp_member_chain(p: &Poset, xi: &LatticePoint) -> Result<bool> {
    lp_member(p, Ring::Chain, xi)
}
