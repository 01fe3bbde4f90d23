//! Both cones have the same number of lattice points in each degree.

use crate::cone::{count_points, Ring};
use crate::poset::Poset;

/// Point counts of degrees `0..=d_max`.
pub fn hilbert_function(p: &Poset, ring: Ring, d_max: i64) -> Vec<u128> {
    (0..=d_max).map(|d| count_points(p, ring, d)).collect()
}

pub fn hilbert_equal(p: &Poset, d_max: i64) -> bool {
    hilbert_function(p, Ring::Order, d_max) == hilbert_function(p, Ring::Chain, d_max)
}
