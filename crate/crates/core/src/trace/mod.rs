//! Membership in the radical of the trace ideal, with certificates for
//! members and witnesses for non-members, and the Gorenstein-type
//! classification.

mod adjust;
mod certificate;
mod classify;
mod member;

pub use adjust::{adjust_mu, is_adjustment, AdjustFunction};
pub use certificate::{verify_certificate, Certificate, Witness};
pub use classify::{classify, Classification};
pub use member::{
    chain_certificate, chain_member, is_chain_tuple, is_maximal_above, is_maximal_below, order_certificate,
    order_member, Analysis, ChainTuple, Membership,
};
