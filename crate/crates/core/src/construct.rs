//! Derived posets: the poset of covers and the contraction of a subset.

use crate::error::{Error, Result};
use crate::poset::{ExtendedElement, Poset};

/// The poset whose elements are the covers `(x, y)` of a base poset, with
/// `(x1, y1) < (x2, y2)` whenever `y1 <= x2`.
#[derive(Clone, Debug)]
pub struct CoverPoset {
    pub poset: Poset,
    /// For each element, the cover of the base poset it stands for.
    pub pairs: Vec<(usize, usize)>,
}

impl CoverPoset {
    pub fn new(base: &Poset) -> Result<CoverPoset> {
        let pairs = base.cover_pairs();
        if pairs.is_empty() {
            return Err(Error::IsAntichain);
        }
        let elements = pairs
            .iter()
            .map(|&(x, y)| ExtendedElement::plain(format!("({},{})", base.name(x), base.name(y))))
            .collect();
        let less = pairs.iter().map(|&(_, y1)| pairs.iter().map(|&(x2, _)| base.leq(y1, x2)).collect()).collect();
        let poset = Poset::from_strict_order(elements, less)?;
        Ok(CoverPoset { poset, pairs })
    }

    pub fn index_of_pair(&self, x: usize, y: usize) -> Option<usize> {
        self.pairs.iter().position(|&p| p == (x, y))
    }
}

/// Collapse `m` to a single new element `*`, keeping the remaining
/// elements in order. Relations are inherited directly, through `m` from
/// below or above, and across `m`.
pub fn contract(p: &Poset, m: &[usize]) -> Poset {
    let inside: Vec<bool> = (0..p.len()).map(|x| m.contains(&x)).collect();
    let rest: Vec<usize> = (0..p.len()).filter(|&x| !inside[x]).collect();
    let below_m = |a: usize| m.iter().any(|&x| p.less(a, x));
    let above_m = |b: usize| m.iter().any(|&x| p.less(x, b));
    let n = rest.len() + 1;
    let star = rest.len();
    let mut less = vec![vec![false; n]; n];
    for (i, &a) in rest.iter().enumerate() {
        for (j, &b) in rest.iter().enumerate() {
            less[i][j] = p.less(a, b) || (below_m(a) && above_m(b));
        }
        less[i][star] = below_m(a);
        less[star][i] = above_m(a);
    }
    let mut elements: Vec<ExtendedElement> = rest.iter().map(|&x| p.element(x).clone()).collect();
    elements.push(ExtendedElement::plain("*"));
    Poset::from_strict_order(elements, less).expect("contraction of a convex set is a poset")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Extension;

    #[test]
    fn cover_poset_of_chain() {
        let p = Poset::from_pairs(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let cr = CoverPoset::new(&p).unwrap();
        assert_eq!(cr.poset.len(), 2);
        assert!(cr.poset.less(0, 1));
        assert_eq!(CoverPoset::new(&Poset::from_pairs(&["a", "b"], &[]).unwrap()).unwrap_err(), Error::IsAntichain);
    }

    #[test]
    fn cover_poset_chains_match_saturated_chains() {
        let p = Poset::from_pairs(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap().extend(Extension::Both);
        let cr = CoverPoset::new(&p).unwrap();
        assert_eq!(cr.poset.maximal_chains().len(), 2);
        assert!(cr.poset.maximal_chains().iter().all(|c| c.len() == 3));
    }

    #[test]
    fn contract_everything() {
        let p = Poset::from_pairs(&["a", "b"], &[("a", "b")]).unwrap();
        let q = contract(&p, &[0, 1]);
        assert_eq!(q.names(), vec!["*"]);
    }
}
