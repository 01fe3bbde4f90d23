//! Finite posets given by their Hasse diagram, with the derived notions used
//! everywhere else: extensions by a bottom and top, rank and distance of
//! intervals, chains, stars, links and purity.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of a poset, possibly one of the two adjoined sentinels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedElement {
    Bottom,
    Plain(String),
    Top,
}

impl ExtendedElement {
    pub fn plain(name: impl Into<String>) -> Self {
        ExtendedElement::Plain(name.into())
    }

    pub fn is_sentinel(&self) -> bool {
        !matches!(self, ExtendedElement::Plain(_))
    }
}

impl fmt::Display for ExtendedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedElement::Bottom => f.write_str("-inf"),
            ExtendedElement::Top => f.write_str("inf"),
            ExtendedElement::Plain(s) => f.write_str(s),
        }
    }
}

impl Serialize for ExtendedElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub const RESERVED_NAMES: [&str; 4] = ["-inf", "inf", "+inf", "∞"];

/// Which sentinels to adjoin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extension {
    /// adjoin a top element
    Plus,
    /// adjoin a bottom element
    Minus,
    /// adjoin both
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Warning {
    /// An input cover was implied by transitivity and has been dropped.
    NonReducedCover(String, String),
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::NonReducedCover(x, y) => {
                write!(f, "cover ({x}, {y}) is implied by transitivity; removed")
            }
        }
    }
}

/// A finite poset. Elements are addressed by their position in the
/// element list, which also fixes every iteration order.
#[derive(Clone)]
pub struct Poset {
    elements: Vec<ExtendedElement>,
    index: HashMap<ExtendedElement, usize>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    less: Vec<Vec<bool>>,
    linear: Vec<usize>,
    // longest and shortest saturated chain length, -1 when x is not below y
    rank: Vec<Vec<i32>>,
    dist: Vec<Vec<i32>>,
    maximal_chains: OnceLock<Vec<Vec<usize>>>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset").field("elements", &self.names()).field("covers", &self.cover_names()).finish()
    }
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.upper == other.upper
    }
}

impl Eq for Poset {}

impl Poset {
    /// Build from element names and cover pairs. Covers implied by
    /// transitivity are removed and reported as warnings.
    pub fn build<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<(Poset, Vec<Warning>)> {
        let mut elems = Vec::with_capacity(elements.len());
        for e in elements {
            let e = e.as_ref();
            if RESERVED_NAMES.contains(&e) {
                return Err(Error::ReservedName(e.to_string()));
            }
            elems.push(ExtendedElement::plain(e));
        }
        let index = index_of_elements(&elems)?;
        let mut edges = Vec::with_capacity(covers.len());
        for (x, y) in covers {
            let key = |s: &str| {
                index
                    .get(&ExtendedElement::plain(s))
                    .copied()
                    .ok_or_else(|| Error::UnknownElementInCover(s.to_string()))
            };
            edges.push((key(x.as_ref())?, key(y.as_ref())?));
        }
        Poset::from_edges(elems, &edges)
    }

    /// Convenience constructor that discards warnings.
    pub fn from_pairs(elements: &[&str], covers: &[(&str, &str)]) -> Result<Poset> {
        Poset::build(elements, covers).map(|(p, _)| p)
    }

    /// Build from arbitrary elements and a relation given by index pairs;
    /// the order is its reflexive transitive closure.
    pub fn from_edges(elements: Vec<ExtendedElement>, edges: &[(usize, usize)]) -> Result<(Poset, Vec<Warning>)> {
        let n = elements.len();
        let mut succ = vec![BTreeSet::new(); n];
        for &(x, y) in edges {
            if x == y {
                return Err(Error::CycleDetected(elements[x].to_string()));
            }
            succ[x].insert(y);
        }
        let linear = topological_order(&succ).map_err(|v| Error::CycleDetected(elements[v].to_string()))?;
        let mut less = vec![vec![false; n]; n];
        for &x in linear.iter().rev() {
            for &y in &succ[x] {
                less[x][y] = true;
                let row = less[y].clone();
                for (z, &b) in row.iter().enumerate() {
                    if b {
                        less[x][z] = true;
                    }
                }
            }
        }
        let mut warnings = Vec::new();
        for &(x, y) in edges {
            if (0..n).any(|z| less[x][z] && less[z][y]) {
                let w = Warning::NonReducedCover(elements[x].to_string(), elements[y].to_string());
                if !warnings.contains(&w) {
                    warnings.push(w);
                }
            }
        }
        let index = index_of_elements(&elements)?;
        Ok((Poset::assemble(elements, index, less), warnings))
    }

    /// Build from a strict order relation, which must be transitive and
    /// irreflexive.
    pub fn from_strict_order(elements: Vec<ExtendedElement>, less: Vec<Vec<bool>>) -> Result<Poset> {
        let index = index_of_elements(&elements)?;
        let n = elements.len();
        for x in 0..n {
            if less[x][x] {
                return Err(Error::CycleDetected(elements[x].to_string()));
            }
        }
        Ok(Poset::assemble(elements, index, less))
    }

    fn assemble(elements: Vec<ExtendedElement>, index: HashMap<ExtendedElement, usize>, less: Vec<Vec<bool>>) -> Poset {
        let n = elements.len();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for x in 0..n {
            for y in 0..n {
                if less[x][y] && !(0..n).any(|z| less[x][z] && less[z][y]) {
                    upper[x].push(y);
                    lower[y].push(x);
                }
            }
        }
        let succ: Vec<BTreeSet<usize>> = upper.iter().map(|u| u.iter().copied().collect()).collect();
        let linear = topological_order(&succ).expect("strict order is acyclic");
        let mut rank = vec![vec![-1; n]; n];
        let mut dist = vec![vec![-1; n]; n];
        let pos: Vec<usize> = {
            let mut p = vec![0; n];
            for (i, &x) in linear.iter().enumerate() {
                p[x] = i;
            }
            p
        };
        for x in 0..n {
            rank[x][x] = 0;
            dist[x][x] = 0;
            for &y in &linear[pos[x] + 1..] {
                for &z in &lower[y] {
                    if rank[x][z] >= 0 {
                        let r = rank[x][z] + 1;
                        let d = dist[x][z] + 1;
                        if rank[x][y] < r {
                            rank[x][y] = r;
                        }
                        if dist[x][y] < 0 || dist[x][y] > d {
                            dist[x][y] = d;
                        }
                    }
                }
            }
        }
        Poset { elements, index, upper, lower, less, linear, rank, dist, maximal_chains: OnceLock::new() }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ExtendedElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &ExtendedElement {
        &self.elements[i]
    }

    pub fn name(&self, i: usize) -> String {
        self.elements[i].to_string()
    }

    pub fn names(&self) -> Vec<String> {
        self.elements.iter().map(|e| e.to_string()).collect()
    }

    pub fn names_of(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.name(i)).collect()
    }

    pub fn index_of(&self, e: &ExtendedElement) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Resolve a name as written in input files; `-inf` and `inf` resolve
    /// to the sentinels when present.
    pub fn lookup(&self, name: &str) -> Result<usize> {
        let e = match name {
            "-inf" => ExtendedElement::Bottom,
            "inf" | "+inf" | "∞" => ExtendedElement::Top,
            s => ExtendedElement::plain(s),
        };
        self.index_of(&e).ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn bottom(&self) -> Option<usize> {
        self.index_of(&ExtendedElement::Bottom)
    }

    pub fn top(&self) -> Option<usize> {
        self.index_of(&ExtendedElement::Top)
    }

    /// Indices of the non-sentinel elements.
    pub fn plain_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.elements[i].is_sentinel()).collect()
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.less[x][y]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.less[x][y]
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.less[y][x]
    }

    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.upper[x].contains(&y)
    }

    /// All cover pairs, ordered by lower then upper index.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for &y in &self.upper[x] {
                out.push((x, y));
            }
        }
        out
    }

    pub fn cover_names(&self) -> Vec<(String, String)> {
        self.cover_pairs().into_iter().map(|(x, y)| (self.name(x), self.name(y))).collect()
    }

    /// A linear extension, smallest available index first.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.lower[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.upper[x].is_empty()).collect()
    }

    /// Length of the longest saturated chain from `x` to `y`.
    pub fn rank(&self, x: usize, y: usize) -> Result<usize> {
        match self.rank[x][y] {
            r if r >= 0 => Ok(r as usize),
            _ => Err(Error::NotComparable(self.name(x), self.name(y))),
        }
    }

    /// Length of the shortest saturated chain from `x` to `y`.
    pub fn dist(&self, x: usize, y: usize) -> Result<usize> {
        match self.dist[x][y] {
            d if d >= 0 => Ok(d as usize),
            _ => Err(Error::NotComparable(self.name(x), self.name(y))),
        }
    }

    /// Longest chain ending at `x`, counted in covers.
    pub fn height(&self, x: usize) -> usize {
        self.minimal_elements().iter().filter_map(|&m| self.rank(m, x).ok()).max().unwrap_or(0)
    }

    /// Longest chain starting at `x`, counted in covers.
    pub fn coheight(&self, x: usize) -> usize {
        self.maximal_elements().iter().filter_map(|&m| self.rank(x, m).ok()).max().unwrap_or(0)
    }

    /// Adjoin sentinels. Existing elements keep their indices; the bottom is
    /// appended before the top.
    pub fn extend(&self, how: Extension) -> Poset {
        let n = self.len();
        let mut elements = self.elements.clone();
        let mut edges = self.cover_pairs();
        if matches!(how, Extension::Minus | Extension::Both) {
            let b = elements.len();
            elements.push(ExtendedElement::Bottom);
            for m in self.minimal_elements() {
                edges.push((b, m));
            }
        }
        if matches!(how, Extension::Plus | Extension::Both) {
            let t = elements.len();
            elements.push(ExtendedElement::Top);
            for m in self.maximal_elements() {
                edges.push((m, t));
            }
            if n == 0 && how == Extension::Both {
                edges.push((t - 1, t));
            }
        }
        Poset::from_edges(elements, &edges).expect("extension of a poset is a poset").0
    }

    /// The subposet on the given elements, in the given order.
    pub fn induced(&self, subset: &[usize]) -> Poset {
        let elements = subset.iter().map(|&i| self.elements[i].clone()).collect();
        let less = subset.iter().map(|&x| subset.iter().map(|&y| self.less[x][y]).collect()).collect();
        Poset::from_strict_order(elements, less).expect("subposet")
    }

    /// Maximal chains, bottom to top, in lexicographic order of indices.
    pub fn maximal_chains(&self) -> &[Vec<usize>] {
        self.maximal_chains.get_or_init(|| {
            let mut out = Vec::new();
            let mut stack = Vec::new();
            for m in self.minimal_elements() {
                stack.push(m);
                self.extend_chains(&mut stack, &mut out);
                stack.pop();
            }
            if self.is_empty() {
                out.push(Vec::new());
            }
            out
        })
    }

    fn extend_chains(&self, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let top = *stack.last().unwrap();
        if self.upper[top].is_empty() {
            out.push(stack.clone());
            return;
        }
        for &y in &self.upper[top] {
            stack.push(y);
            self.extend_chains(stack, out);
            stack.pop();
        }
    }

    /// Every chain, the empty chain first, each listed bottom to top.
    pub fn all_chains(&self) -> Vec<Vec<usize>> {
        fn go(p: &Poset, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            out.push(stack.clone());
            let start = stack.last().copied();
            for y in 0..p.len() {
                if start.is_none_or(|x| p.less[x][y]) {
                    stack.push(y);
                    go(p, stack, out);
                    stack.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn is_chain(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &x)| set[i + 1..].iter().all(|&y| x != y && self.comparable(x, y)))
    }

    pub fn is_antichain(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &x)| set[i + 1..].iter().all(|&y| !self.comparable(x, y)))
    }

    /// Sort a chain bottom to top.
    pub fn sort_chain(&self, chain: &mut [usize]) {
        chain.sort_by(|&a, &b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if self.less[a][b] {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
    }

    /// Elements comparable with every element of `chain` (the chain included).
    pub fn star(&self, chain: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|&x| chain.iter().all(|&c| self.comparable(x, c))).collect()
    }

    pub fn link(&self, chain: &[usize]) -> Vec<usize> {
        self.star(chain).into_iter().filter(|x| !chain.contains(x)).collect()
    }

    pub fn is_pure(&self) -> bool {
        self.is_pure_subset(&vec![true; self.len()])
    }

    /// Whether all maximal chains of the subposet marked by `mask` have the
    /// same length. The empty subposet is pure.
    pub fn is_pure_subset(&self, mask: &[bool]) -> bool {
        let members: Vec<usize> = self.linear.iter().copied().filter(|&x| mask[x]).collect();
        let n = self.len();
        let mut long = vec![0i64; n];
        let mut short = vec![0i64; n];
        let mut common: Option<i64> = None;
        for &x in members.iter().rev() {
            let ups: Vec<usize> = members
                .iter()
                .copied()
                .filter(|&y| self.less[x][y] && !members.iter().any(|&z| self.less[x][z] && self.less[z][y]))
                .collect();
            if ups.is_empty() {
                long[x] = 0;
                short[x] = 0;
            } else {
                long[x] = 1 + ups.iter().map(|&y| long[y]).max().unwrap();
                short[x] = 1 + ups.iter().map(|&y| short[y]).min().unwrap();
            }
            let is_min = !members.iter().any(|&z| self.less[z][x]);
            if is_min {
                if long[x] != short[x] {
                    return false;
                }
                match common {
                    None => common = Some(long[x]),
                    Some(c) if c != long[x] => return false,
                    _ => {}
                }
            }
        }
        true
    }

    /// Length of the longest chain, or -1 for the empty poset.
    pub fn rank_of_poset(&self) -> i64 {
        self.maximal_chains().iter().map(|c| c.len() as i64 - 1).max().unwrap_or(-1)
    }

    /// Connected components of the comparability graph, each sorted, in
    /// order of their smallest element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            comp[s] = id;
            let mut members = Vec::new();
            while let Some(x) = stack.pop() {
                members.push(x);
                for &y in self.upper[x].iter().chain(&self.lower[x]) {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// All down-closed subsets, each sorted.
    pub fn ideals(&self) -> Vec<Vec<usize>> {
        fn go(p: &Poset, i: usize, inside: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if i == p.linear.len() {
                out.push((0..p.len()).filter(|&x| inside[x]).collect());
                return;
            }
            let x = p.linear[i];
            go(p, i + 1, inside, out);
            if p.lower[x].iter().all(|&y| inside[y]) {
                inside[x] = true;
                go(p, i + 1, inside, out);
                inside[x] = false;
            }
        }
        let mut out = Vec::new();
        go(self, 0, &mut vec![false; self.len()], &mut out);
        out
    }

    /// All antichains, each sorted, the empty antichain first.
    pub fn antichains(&self) -> Vec<Vec<usize>> {
        fn go(p: &Poset, from: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            out.push(stack.clone());
            for y in from..p.len() {
                if stack.iter().all(|&x| !p.comparable(x, y)) {
                    stack.push(y);
                    go(p, y + 1, stack, out);
                    stack.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(self, 0, &mut Vec::new(), &mut out);
        out
    }

    /// Largest weight of a maximal chain; 0 when the poset is empty.
    pub fn max_chain_weight(&self, w: &[i64]) -> i64 {
        self.chain_weight_extreme(w, true)
    }

    /// Smallest weight of a maximal chain; 0 when the poset is empty.
    pub fn min_chain_weight(&self, w: &[i64]) -> i64 {
        self.chain_weight_extreme(w, false)
    }

    fn chain_weight_extreme(&self, w: &[i64], max: bool) -> i64 {
        let mut best = vec![0i64; self.len()];
        for &x in &self.linear {
            let below = self.lower[x].iter().map(|&y| best[y]);
            let b = if max { below.max() } else { below.min() };
            best[x] = w[x] + b.unwrap_or(0);
        }
        let tops = self.maximal_elements().into_iter().map(|x| best[x]);
        let r = if max { tops.max() } else { tops.min() };
        r.unwrap_or(0)
    }
}

fn index_of_elements(elements: &[ExtendedElement]) -> Result<HashMap<ExtendedElement, usize>> {
    let mut index = HashMap::with_capacity(elements.len());
    for (i, e) in elements.iter().enumerate() {
        if index.insert(e.clone(), i).is_some() {
            return Err(Error::DuplicateElement(e.to_string()));
        }
    }
    Ok(index)
}

/// Kahn's algorithm taking the smallest ready index first. On a cycle,
/// returns some element on it.
fn topological_order(succ: &[BTreeSet<usize>]) -> std::result::Result<Vec<usize>, usize> {
    let n = succ.len();
    let mut indeg = vec![0usize; n];
    for s in succ {
        for &y in s {
            indeg[y] += 1;
        }
    }
    let mut ready: BTreeSet<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
    let mut out = Vec::with_capacity(n);
    while let Some(x) = ready.pop_first() {
        out.push(x);
        for &y in &succ[x] {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                ready.insert(y);
            }
        }
    }
    if out.len() < n {
        return Err((0..n).find(|&x| indeg[x] > 0).unwrap());
    }
    Ok(out)
}
