//! Independent checks: exact linear feasibility, bounded certificate
//! search, and lattice-point counts.

pub mod fm;
mod hilbert;
mod lp;
mod search;
mod verify;

pub use hilbert::{hilbert_equal, hilbert_function};
pub use lp::{chain_system, lp_member, lp_member_chain, lp_member_order, lp_solve, order_system};
pub use search::{bounded_search_certificate, SearchOutcome, STATE_LIMIT};
pub use verify::{verify, Claim};
