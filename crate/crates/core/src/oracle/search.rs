//! Exhaustive search for small certificates. Finding one proves
//! membership; an exhausted box proves nothing.

use std::time::Instant;

use crate::cone::{in_chain_cone, in_order_cone, LatticePoint, Ring};
use crate::error::{Error, Result};
use crate::poset::{Extension, Poset};
use crate::trace::{verify_certificate, Certificate};

/// Largest number of candidate assignments a search may cover.
pub const STATE_LIMIT: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Certificate),
    Exhausted,
    DeadlineReached,
}

/// Search `eta` with `eta + zeta = N * base` for `N = 1..=n_max`. Each
/// value of `eta` ranges over `floor(N * base / 2) +- half_width`,
/// clipped to bounds every certificate satisfies.
pub fn bounded_search_certificate(
    p: &Poset,
    ring: Ring,
    base: &LatticePoint,
    n_max: i64,
    half_width: i64,
    deadline: Option<Instant>,
) -> Result<SearchOutcome> {
    let ok = match ring {
        Ring::Order => in_order_cone(p, base, 0),
        Ring::Chain => in_chain_cone(p, base, 0),
    };
    if !ok {
        return Err(Error::NotInCone("search base is not in the cone".into()));
    }
    if n_max < 1 || half_width < 0 {
        return Err(Error::OutOfRange("n_max must be positive and the box nonnegative".into()));
    }
    let mut plans = Vec::new();
    let mut total: u128 = 0;
    for n in 1..=n_max {
        let plan = Plan::new(p, ring, base, n, half_width);
        total = total.saturating_add(plan.states());
        plans.push(plan);
    }
    if total > STATE_LIMIT {
        return Err(Error::BoxTooLarge(total));
    }
    let mut visited = 0u64;
    for plan in &plans {
        let mut s = Search { plan, visited: &mut visited, deadline, timed_out: false };
        let found = match ring {
            Ring::Chain => s.chain(),
            Ring::Order => s.order(),
        };
        if let Some(eta) = found {
            let zeta = base.scale(plan.n).add(&eta.scale(-1));
            let cert = Certificate { ring, n: plan.n, eta, zeta };
            debug_assert!(verify_certificate(p, base, &cert));
            return Ok(SearchOutcome::Found(cert));
        }
        if s.timed_out {
            return Ok(SearchOutcome::DeadlineReached);
        }
    }
    Ok(SearchOutcome::Exhausted)
}

struct Plan<'a> {
    p: &'a Poset,
    base: &'a LatticePoint,
    n: i64,
    // per element, then the bottom value last
    lo: Vec<i64>,
    hi: Vec<i64>,
    ext: Poset,
}

impl<'a> Plan<'a> {
    fn new(p: &'a Poset, ring: Ring, base: &'a LatticePoint, n: i64, w: i64) -> Plan<'a> {
        let ext = p.extend(Extension::Both);
        let len = p.len();
        let top = ext.top().unwrap();
        let bot = ext.bottom().unwrap();
        let mut lo = Vec::with_capacity(len + 1);
        let mut hi = Vec::with_capacity(len + 1);
        let vals = base.extended();
        for x in 0..=len {
            let centre = (n * vals[x]).div_euclid(2);
            let (mut l, mut h) = (centre - w, centre + w);
            match ring {
                Ring::Chain if x < len => {
                    l = l.max(1);
                    h = h.min(n * vals[x] + 1);
                }
                Ring::Chain => {
                    let longest = p.rank_of_poset() + 1;
                    l = l.max(longest + 1);
                }
                Ring::Order => {
                    let x = if x < len { x } else { bot };
                    l = l.max(ext.rank(x, top).unwrap() as i64);
                    h = h.min(n * vals[x] + ext.dist(x, top).unwrap() as i64);
                }
            }
            lo.push(l);
            hi.push(h);
        }
        Plan { p, base, n, lo, hi, ext }
    }

    fn states(&self) -> u128 {
        self.lo.iter().zip(&self.hi).map(|(l, h)| (h - l + 1).max(0) as u128).fold(1u128, |a, b| a.saturating_mul(b))
    }
}

struct Search<'a, 'b> {
    plan: &'b Plan<'a>,
    visited: &'b mut u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl Search<'_, '_> {
    fn tick(&mut self) -> bool {
        *self.visited += 1;
        if (*self.visited).is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    fn chain(&mut self) -> Option<LatticePoint> {
        let plan = self.plan;
        let p = plan.p;
        let len = p.len();
        let order = p.linear_extension().to_vec();
        let up_len: Vec<i64> = (0..len).map(|x| p.coheight(x) as i64).collect();
        let up_short: Vec<i64> = (0..len)
            .map(|x| p.maximal_elements().iter().filter_map(|&m| p.dist(x, m).ok()).min().unwrap_or(0) as i64)
            .collect();
        let bottom_total = plan.n * plan.base.degree;
        for eb in plan.lo[len]..=plan.hi[len] {
            let zb = bottom_total - eb;
            if len == 0 && zb < -1 {
                continue;
            }
            let mut eta = vec![0i64; len];
            let mut pe = vec![0i64; len];
            let mut pz = vec![0i64; len];
            if self.chain_step(&order, 0, eb, zb, &mut eta, &mut pe, &mut pz, &up_len, &up_short) {
                return Some(LatticePoint::new(eta, eb));
            }
            if self.timed_out {
                return None;
            }
        }
        None
    }

    #[allow(clippy::too_many_arguments)]
    fn chain_step(
        &mut self,
        order: &[usize],
        i: usize,
        eb: i64,
        zb: i64,
        eta: &mut Vec<i64>,
        pe: &mut Vec<i64>,
        pz: &mut Vec<i64>,
        up_len: &[i64],
        up_short: &[i64],
    ) -> bool {
        if i == order.len() {
            return true;
        }
        if self.tick() {
            return false;
        }
        let plan = self.plan;
        let p = plan.p;
        let x = order[i];
        let lower = p.lower_covers(x);
        let be = lower.iter().map(|&y| pe[y]).max().unwrap_or(0);
        let bz = lower.iter().map(|&y| pz[y]).max().unwrap_or(0);
        let maximal = p.upper_covers(x).is_empty();
        for v in plan.lo[x]..=plan.hi[x] {
            let z = plan.n * plan.base.values[x] - v;
            let (e_sum, z_sum) = (be + v, bz + z);
            let ok = if maximal {
                e_sum < eb && z_sum <= zb + 1
            } else {
                e_sum + up_len[x] < eb && z_sum - up_short[x] <= zb + 1
            };
            if !ok {
                continue;
            }
            eta[x] = v;
            pe[x] = e_sum;
            pz[x] = z_sum;
            if self.chain_step(order, i + 1, eb, zb, eta, pe, pz, up_len, up_short) {
                return true;
            }
            if self.timed_out {
                return false;
            }
        }
        false
    }

    fn order(&mut self) -> Option<LatticePoint> {
        let ext = &self.plan.ext;
        let top = ext.top().unwrap();
        let order: Vec<usize> = ext.linear_extension().iter().rev().copied().filter(|&x| x != top).collect();
        let mut eta = vec![0i64; ext.len()];
        if self.order_step(&order, 0, &mut eta) {
            let len = self.plan.p.len();
            let bot = ext.bottom().unwrap();
            return Some(LatticePoint::new(eta[..len].to_vec(), eta[bot]));
        }
        None
    }

    fn order_step(&mut self, order: &[usize], i: usize, eta: &mut Vec<i64>) -> bool {
        if i == order.len() {
            return true;
        }
        if self.tick() {
            return false;
        }
        let plan = self.plan;
        let ext = &plan.ext;
        let len = plan.p.len();
        let vals = plan.base.extended();
        let x = order[i];
        let slot = if x < len { x } else { len };
        let mut lo = plan.lo[slot];
        let mut hi = plan.hi[slot];
        for &y in ext.upper_covers(x) {
            lo = lo.max(eta[y] + 1);
            hi = hi.min(eta[y] + plan.n * (vals[x] - vals[y]) + 1);
        }
        for v in lo..=hi {
            eta[x] = v;
            if self.order_step(order, i + 1, eta) {
                return true;
            }
            if self.timed_out {
                return false;
            }
        }
        false
    }
}
