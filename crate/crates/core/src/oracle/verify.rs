//! One entry point that checks a claim with the independent oracles only.

use crate::cone::{LatticePoint, Ring};
use crate::error::Result;
use crate::locus::{chain_locus_dimension, order_locus_dimension};
use crate::poset::Poset;
use crate::trace::{verify_certificate, Analysis, Certificate};

use super::{hilbert_equal, lp_member};

#[derive(Clone, Copy, Debug)]
pub enum Claim<'a> {
    /// `point` is (or is not) in the radical of the trace.
    Membership { ring: Ring, point: &'a LatticePoint, member: bool },
    /// `certificate` proves `base` lies in the radical.
    Certificate { base: &'a LatticePoint, certificate: &'a Certificate },
    /// The two cones have equal point counts up to `d_max`.
    EqualHilbert { d_max: i64 },
    /// Both rings have the same locus dimension.
    EqualLocus,
}

pub fn verify(p: &Poset, claim: &Claim) -> Result<bool> {
    Ok(match *claim {
        Claim::Membership { ring, point, member } => lp_member(p, ring, point)? == member,
        Claim::Certificate { base, certificate } => verify_certificate(p, base, certificate),
        Claim::EqualHilbert { d_max } => hilbert_equal(p, d_max),
        Claim::EqualLocus => {
            let a = Analysis::new(p.clone());
            order_locus_dimension(&a) == chain_locus_dimension(&a)
        }
    })
}
