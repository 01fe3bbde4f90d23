use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Gorenstein-type properties; they coincide for the Hibi ring and the
/// stable set ring of the same poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub gorenstein: bool,
    pub nearly_gorenstein: bool,
    pub punctured_gorenstein: bool,
    /// Length of the longest chain of each connected component.
    pub component_ranks: Vec<i64>,
}

pub fn classify(p: &Poset) -> Result<Classification> {
    if p.is_empty() {
        return Err(Error::EmptyPoset);
    }
    let comps = p.components();
    let mut all_pure = true;
    let mut ranks = Vec::with_capacity(comps.len());
    for c in &comps {
        let q = p.induced(c);
        all_pure &= q.is_pure();
        ranks.push(q.rank_of_poset());
    }
    let spread = ranks.iter().max().unwrap() - ranks.iter().min().unwrap();
    Ok(Classification {
        gorenstein: p.is_pure(),
        nearly_gorenstein: all_pure && spread <= 1,
        punctured_gorenstein: all_pure,
        component_ranks: ranks,
    })
}
