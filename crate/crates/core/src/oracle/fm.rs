//! Exact feasibility of linear inequality systems by Fourier-Motzkin
//! elimination over integer-normalised rows.

use std::collections::HashMap;

use num_rational::Ratio;

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

/// `coeffs . x + constant >= 0`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub coeffs: Vec<i128>,
    pub constant: i128,
}

impl Inequality {
    pub fn new(coeffs: Vec<i128>, constant: i128) -> Self {
        Inequality { coeffs, constant }
    }

    pub fn holds_at(&self, x: &[Rational]) -> bool {
        let lhs = self.coeffs.iter().zip(x).fold(Rational::from_integer(self.constant), |acc, (&c, v)| acc + *v * c);
        lhs >= Rational::from_integer(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    /// A point satisfying every inequality.
    Feasible(Vec<Rational>),
    Infeasible,
}

#[derive(Clone)]
struct Row {
    coeffs: Vec<i128>,
    constant: i128,
    history: Vec<u64>,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn normalize(r: &mut Row) {
    let g = r.coeffs.iter().fold(r.constant, |g, &x| gcd(g, x));
    if g > 1 {
        r.coeffs.iter_mut().for_each(|x| *x /= g);
        r.constant /= g;
    }
}

fn combine(p: &Row, q: &Row, v: usize) -> Result<Row> {
    let (a, b) = (p.coeffs[v], -q.coeffs[v]);
    let g = gcd(a, b);
    let (ma, mb) = (b / g, a / g);
    let mul = |x: i128, y: i128| -> Result<i128> {
        x.checked_mul(ma).and_then(|s| y.checked_mul(mb).and_then(|t| s.checked_add(t))).ok_or(Error::Overflow)
    };
    let mut coeffs = Vec::with_capacity(p.coeffs.len());
    for (&x, &y) in p.coeffs.iter().zip(&q.coeffs) {
        coeffs.push(mul(x, y)?);
    }
    coeffs[v] = 0;
    let constant = mul(p.constant, q.constant)?;
    let history = p.history.iter().zip(&q.history).map(|(x, y)| x | y).collect();
    let mut r = Row { coeffs, constant, history };
    normalize(&mut r);
    Ok(r)
}

fn popcount(h: &[u64]) -> u32 {
    h.iter().map(|w| w.count_ones()).sum()
}

/// Decide feasibility of `rows` in `nvars` rational variables. Feasible
/// answers carry a sample point that has been checked against every input
/// row.
pub fn solve(nvars: usize, rows: &[Inequality]) -> Result<Feasibility> {
    match eliminate(nvars, rows, true)? {
        Some(Feasibility::Feasible(x)) if rows.iter().all(|r| r.holds_at(&x)) => Ok(Feasibility::Feasible(x)),
        Some(Feasibility::Infeasible) => Ok(Feasibility::Infeasible),
        // pruning lost information; redo without it
        _ => match eliminate(nvars, rows, false)? {
            Some(Feasibility::Feasible(x)) if rows.iter().all(|r| r.holds_at(&x)) => Ok(Feasibility::Feasible(x)),
            Some(Feasibility::Infeasible) => Ok(Feasibility::Infeasible),
            _ => Err(Error::PreconditionViolated("elimination produced an inconsistent sample".into())),
        },
    }
}

fn eliminate(nvars: usize, input: &[Inequality], prune: bool) -> Result<Option<Feasibility>> {
    let words = input.len().div_ceil(64).max(1);
    let mut rows: Vec<Row> = input
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut history = vec![0u64; words];
            history[i / 64] |= 1 << (i % 64);
            let mut row = Row { coeffs: r.coeffs.clone(), constant: r.constant, history };
            normalize(&mut row);
            row
        })
        .collect();
    let mut remaining: Vec<usize> = (0..nvars).collect();
    let mut stages: Vec<(usize, Vec<Row>)> = Vec::new();
    let mut eliminated = 0u32;
    loop {
        rows = dedupe(rows);
        if rows.iter().any(|r| r.coeffs.iter().all(|&c| c == 0) && r.constant < 0) {
            return Ok(Some(Feasibility::Infeasible));
        }
        rows.retain(|r| r.coeffs.iter().any(|&c| c != 0) || r.constant < 0);
        if remaining.is_empty() {
            break;
        }
        let (k, &v) = remaining
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| {
                let pos = rows.iter().filter(|r| r.coeffs[v] > 0).count() as i64;
                let neg = rows.iter().filter(|r| r.coeffs[v] < 0).count() as i64;
                (pos * neg - pos - neg, v)
            })
            .unwrap();
        remaining.remove(k);
        eliminated += 1;
        let (pos, neg): (Vec<&Row>, Vec<&Row>) = {
            let pos = rows.iter().filter(|r| r.coeffs[v] > 0).collect();
            let neg = rows.iter().filter(|r| r.coeffs[v] < 0).collect();
            (pos, neg)
        };
        let mut next: Vec<Row> = rows.iter().filter(|r| r.coeffs[v] == 0).cloned().collect();
        for p in &pos {
            for q in &neg {
                let r = combine(p, q, v)?;
                if prune && popcount(&r.history) > eliminated + 1 {
                    continue;
                }
                next.push(r);
            }
        }
        stages.push((v, std::mem::replace(&mut rows, next)));
    }
    // back substitution
    let zero = Rational::from_integer(0);
    let mut x = vec![zero; nvars];
    for (v, rows) in stages.iter().rev() {
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for r in rows {
            let c = r.coeffs[*v];
            if c == 0 {
                continue;
            }
            let rest = r
                .coeffs
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != *v)
                .fold(Rational::from_integer(r.constant), |acc, (i, &a)| acc + x[i] * a);
            let bound = -rest / c;
            if c > 0 {
                lo = Some(lo.map_or(bound, |l| l.max(bound)));
            } else {
                hi = Some(hi.map_or(bound, |h| h.min(bound)));
            }
        }
        x[*v] = match (lo, hi) {
            (Some(l), Some(h)) if l > h => return Ok(None),
            (Some(l), Some(h)) => {
                let c = l.ceil();
                if c <= h {
                    c
                } else {
                    l
                }
            }
            (Some(l), None) => l.ceil(),
            (None, Some(h)) => h.floor(),
            (None, None) => zero,
        };
    }
    Ok(Some(Feasibility::Feasible(x)))
}

/// Keep one row per coefficient vector: the tightest, and among equally
/// tight ones the one with the smallest history.
fn dedupe(rows: Vec<Row>) -> Vec<Row> {
    let mut best: HashMap<Vec<i128>, usize> = HashMap::new();
    let mut out: Vec<Row> = Vec::with_capacity(rows.len());
    for r in rows {
        match best.get(&r.coeffs) {
            Some(&i) => {
                let cur = &out[i];
                if r.constant < cur.constant
                    || (r.constant == cur.constant && popcount(&r.history) < popcount(&cur.history))
                {
                    out[i] = r;
                }
            }
            None => {
                best.insert(r.coeffs.clone(), out.len());
                out.push(r);
            }
        }
    }
    out
}
