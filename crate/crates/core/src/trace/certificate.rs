use serde::Serialize;

use crate::cone::{in_cone, LatticePoint, Ring};
use crate::cycles::StarSequence;
use crate::poset::Poset;
use crate::trace::member::ChainTuple;

/// `eta` in the cone shifted by 1 and `zeta` in the cone shifted by -1 with
/// `eta + zeta = n * point`. Such a pair shows that a power of the monomial
/// of the point lies in the trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub ring: Ring,
    pub n: i64,
    #[serde(serialize_with = "ser_point")]
    pub eta: LatticePoint,
    #[serde(serialize_with = "ser_point")]
    pub zeta: LatticePoint,
}

fn ser_point<S: serde::Serializer>(p: &LatticePoint, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Point", 2)?;
    st.serialize_field("degree", &p.degree)?;
    st.serialize_field("values", &p.values)?;
    st.end()
}

/// Why a point is not in the radical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A chain with impure star whose sum reaches the degree.
    NonPureStar { chain: Vec<usize> },
    /// Chains below and above an alternating cycle, every pair of which
    /// reaches the degree.
    BadCycle { tuple: ChainTuple },
    /// An alternating cycle in the doubly extended poset whose `a` side does
    /// not outweigh its `b` side.
    OrderCycle { sequence: StarSequence },
}

/// Check a certificate against a base point.
pub fn verify_certificate(p: &Poset, base: &LatticePoint, cert: &Certificate) -> bool {
    let n = cert.n;
    n >= 1
        && in_cone(p, cert.ring, &cert.eta, 1)
        && in_cone(p, cert.ring, &cert.zeta, -1)
        && cert.eta.add(&cert.zeta) == base.scale(n)
}
