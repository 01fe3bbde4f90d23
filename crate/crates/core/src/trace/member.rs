use std::sync::OnceLock;

use serde::Serialize;

use crate::cone::{in_chain_cone, in_order_cone, sum_over, CoverTransfer, LatticePoint, Ring};
use crate::cycles::{enumerate_star_sequences, is_star_sequence, StarSequence};
use crate::error::{Error, Result};
use crate::poset::{Extension, Poset};
use crate::trace::adjust::adjust_mu;
use crate::trace::certificate::{Certificate, Witness};

/// Chains `C_i` ending at `a_i` and `C'_i` starting at `b_i`, with the ends
/// forming an alternating cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ChainTuple {
    pub lower: Vec<Vec<usize>>,
    pub upper: Vec<Vec<usize>>,
}

impl ChainTuple {
    pub fn ends(&self) -> StarSequence {
        StarSequence {
            a: self.lower.iter().map(|c| *c.last().unwrap()).collect(),
            b: self.upper.iter().map(|c| c[0]).collect(),
        }
    }

    pub fn weight(&self, xi: &LatticePoint) -> i64 {
        self.lower.iter().chain(&self.upper).map(|c| sum_over(xi, c)).sum()
    }
}

/// Whether `chain` (bottom to top) is a maximal chain of the principal
/// down-set of its top element.
pub fn is_maximal_below(p: &Poset, chain: &[usize]) -> bool {
    !chain.is_empty() && p.lower_covers(chain[0]).is_empty() && chain.windows(2).all(|w| p.covers(w[0], w[1]))
}

/// Whether `chain` (bottom to top) is a maximal chain of the principal
/// up-set of its bottom element.
pub fn is_maximal_above(p: &Poset, chain: &[usize]) -> bool {
    !chain.is_empty()
        && p.upper_covers(*chain.last().unwrap()).is_empty()
        && chain.windows(2).all(|w| p.covers(w[0], w[1]))
}

pub fn is_chain_tuple(p: &Poset, t: &ChainTuple) -> bool {
    t.lower.len() == t.upper.len()
        && t.lower.iter().all(|c| is_maximal_below(p, c))
        && t.upper.iter().all(|c| is_maximal_above(p, c))
        && is_star_sequence(p, &t.ends())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Membership {
    Member { certificate: Option<Certificate> },
    NonMember { witness: Witness },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Membership::NonMember { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Membership::Member { certificate } => certificate.as_ref(),
            _ => None,
        }
    }
}

/// A poset together with lazily computed data shared by all queries.
/// Safe to share between threads.
#[derive(Debug)]
pub struct Analysis {
    poset: Poset,
    extended: OnceLock<Poset>,
    sequences: OnceLock<Vec<StarSequence>>,
    impure_star_chains: OnceLock<Vec<Vec<usize>>>,
    transfer: OnceLock<CoverTransfer>,
}

impl Analysis {
    pub fn new(poset: Poset) -> Analysis {
        Analysis {
            poset,
            extended: OnceLock::new(),
            sequences: OnceLock::new(),
            impure_star_chains: OnceLock::new(),
            transfer: OnceLock::new(),
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// The poset with both sentinels.
    pub fn extended(&self) -> &Poset {
        self.extended.get_or_init(|| self.poset.extend(Extension::Both))
    }

    /// Alternating cycles of the extended poset.
    pub fn star_sequences(&self) -> &[StarSequence] {
        self.sequences.get_or_init(|| enumerate_star_sequences(self.extended()))
    }

    /// Alternating cycles avoiding both sentinels.
    pub fn finite_star_sequences(&self) -> Vec<&StarSequence> {
        let q = self.extended();
        self.star_sequences().iter().filter(|s| !s.contains_sentinel(q)).collect()
    }

    /// Chains (the empty chain included) whose star is not pure.
    pub fn impure_star_chains(&self) -> &[Vec<usize>] {
        self.impure_star_chains.get_or_init(|| {
            let p = &self.poset;
            p.all_chains()
                .into_iter()
                .filter(|c| {
                    let mut mask = vec![false; p.len()];
                    for x in p.star(c) {
                        mask[x] = true;
                    }
                    !p.is_pure_subset(&mask)
                })
                .collect()
        })
    }

    pub fn transfer(&self) -> &CoverTransfer {
        self.transfer.get_or_init(|| CoverTransfer::new(&self.poset))
    }

    pub fn member(&self, ring: Ring, point: &LatticePoint, certify: bool) -> Result<Membership> {
        match ring {
            Ring::Order => self.order_member(point, certify),
            Ring::Chain => self.chain_member(point, certify),
        }
    }

    /// Decide whether the monomial of `xi` lies in the radical of the trace
    /// of the stable set ring.
    pub fn chain_member(&self, xi: &LatticePoint, certify: bool) -> Result<Membership> {
        let p = &self.poset;
        if !in_chain_cone(p, xi, 0) {
            return Err(Error::NotInCone("point is not in the chain cone".into()));
        }
        let d = xi.degree;
        for c in self.impure_star_chains() {
            if sum_over(xi, c) == d {
                return Ok(Membership::NonMember { witness: Witness::NonPureStar { chain: c.clone() } });
            }
        }
        let (down, down_pred) = heaviest_paths(p, &xi.values, false);
        let (up, up_pred) = heaviest_paths(p, &xi.values, true);
        for s in self.finite_star_sequences() {
            if s.a.iter().zip(&s.b).all(|(&a, &b)| down[a] + up[b] == d) {
                let lower = s.a.iter().map(|&a| follow(a, &down_pred, true)).collect();
                let upper = s.b.iter().map(|&b| follow(b, &up_pred, false)).collect();
                return Ok(Membership::NonMember { witness: Witness::BadCycle { tuple: ChainTuple { lower, upper } } });
            }
        }
        let certificate = if certify { Some(self.chain_certificate(xi)?) } else { None };
        Ok(Membership::Member { certificate })
    }

    /// Decide whether the monomial of `nu` lies in the radical of the trace
    /// of the Hibi ring.
    pub fn order_member(&self, nu: &LatticePoint, certify: bool) -> Result<Membership> {
        let p = &self.poset;
        if !in_order_cone(p, nu, 0) {
            return Err(Error::NotInCone("point is not in the order cone".into()));
        }
        let v = nu.extended();
        for s in self.star_sequences() {
            let lhs: i64 = s.a.iter().map(|&a| v[a]).sum();
            let rhs: i64 = s.b.iter().map(|&b| v[b]).sum();
            if lhs <= rhs {
                return Ok(Membership::NonMember { witness: Witness::OrderCycle { sequence: s.clone() } });
            }
        }
        let certificate = if certify { Some(self.order_certificate(nu)?) } else { None };
        Ok(Membership::Member { certificate })
    }

    /// Build `eta`, `zeta` with `eta + zeta = N xi` from an adjustment
    /// function. Fails if `xi` is not a member.
    pub fn chain_certificate(&self, xi: &LatticePoint) -> Result<Certificate> {
        let p = &self.poset;
        if xi.degree == 0 {
            if !p.is_pure() {
                return Err(Error::PreconditionViolated("the unit lies in the trace only for pure posets".into()));
            }
            let len = p.rank_of_poset() + 1;
            let eta = LatticePoint::new(vec![1; p.len()], len + 1);
            let zeta = eta.scale(-1);
            return Ok(Certificate { ring: Ring::Chain, n: 1, eta, zeta });
        }
        let f = adjust_mu(p, xi)?;
        let big = 1 + f.mu.iter().map(|m| m.abs()).sum::<i64>() + f.level.abs();
        let eta = LatticePoint::new(
            xi.values.iter().zip(&f.mu).map(|(x, m)| big * x + m).collect(),
            big * xi.degree + 1 + f.level,
        );
        let zeta = LatticePoint::new(
            xi.values.iter().zip(&f.mu).map(|(x, m)| big * x - m).collect(),
            big * xi.degree - 1 - f.level,
        );
        Ok(Certificate { ring: Ring::Chain, n: 2 * big, eta, zeta })
    }

    /// Same, for the Hibi ring: move to the poset of covers, adjust there,
    /// and pull back.
    pub fn order_certificate(&self, nu: &LatticePoint) -> Result<Certificate> {
        let t = self.transfer();
        let cp = &t.covers.poset;
        let xi = t.phi(nu);
        let f = adjust_mu(cp, &xi)?;
        let big = 1 + f.mu.iter().map(|m| m.abs()).sum::<i64>() + f.level.abs();
        let eta = LatticePoint::new(xi.values.iter().zip(&f.mu).map(|(x, m)| big * x + m).collect(), 0);
        let zeta = LatticePoint::new(xi.values.iter().zip(&f.mu).map(|(x, m)| big * x - m).collect(), 0);
        Ok(Certificate { ring: Ring::Order, n: 2 * big, eta: t.psi(&eta)?, zeta: t.psi(&zeta)? })
    }
}

/// For each element, the heaviest chain sum from a minimal element up to it
/// (or from it up to a maximal element when `upward`), with the chosen
/// neighbour.
fn heaviest_paths(p: &Poset, w: &[i64], upward: bool) -> (Vec<i64>, Vec<Option<usize>>) {
    let mut best = vec![0i64; p.len()];
    let mut pred = vec![None; p.len()];
    let order: Vec<usize> =
        if upward { p.linear_extension().iter().rev().copied().collect() } else { p.linear_extension().to_vec() };
    for x in order {
        let nbrs = if upward { p.upper_covers(x) } else { p.lower_covers(x) };
        let mut choice: Option<usize> = None;
        for &y in nbrs {
            if choice.is_none_or(|c| best[y] > best[c]) {
                choice = Some(y);
            }
        }
        best[x] = w[x] + choice.map_or(0, |c| best[c]);
        pred[x] = choice;
    }
    (best, pred)
}

fn follow(start: usize, pred: &[Option<usize>], downward: bool) -> Vec<usize> {
    let mut out = vec![start];
    let mut x = start;
    while let Some(y) = pred[x] {
        out.push(y);
        x = y;
    }
    if downward {
        out.reverse();
    }
    out
}

pub fn chain_member(p: &Poset, xi: &LatticePoint) -> Result<Membership> {
    Analysis::new(p.clone()).chain_member(xi, false)
}

pub fn order_member(p: &Poset, nu: &LatticePoint) -> Result<Membership> {
    Analysis::new(p.clone()).order_member(nu, false)
}

pub fn chain_certificate(p: &Poset, xi: &LatticePoint) -> Result<Certificate> {
    Analysis::new(p.clone()).chain_certificate(xi)
}

pub fn order_certificate(p: &Poset, nu: &LatticePoint) -> Result<Certificate> {
    Analysis::new(p.clone()).order_certificate(nu)
}
