//! Generic machinery for semi-covarieties: families of numerical semigroups
//! with a minimum, closed under intersection, in which every non-minimal
//! member loses some minimal generator while staying in the family.
//!
//! Such a family is arranged in a tree rooted at its minimum, where the
//! parent of `S` is `S \ {μ(S)}` and `μ(S)` is the least minimal generator
//! whose removal stays in the family. [`enumerate`] walks this tree breadth
//! first, carrying an Apéry set per node.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::apery::AperySet;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Contract a semi-covariety has to provide to the engine.
///
/// Only `minimum` and `contains` are required. The provided methods follow the
/// definitions directly; families with cheaper characterizations override them.
pub trait Family: Sync {
    fn minimum(&self) -> &NumericalSemigroup;

    /// Membership of a numerical semigroup in the family.
    fn contains(&self, s: &NumericalSemigroup) -> bool;

    /// Modulus of the Apéry sets carried during enumeration. Must be a
    /// positive member of the minimum.
    fn apery_modulus(&self) -> u64 {
        self.minimum().multiplicity()
    }

    /// `μ(S)` for a member `S` different from the minimum.
    fn mu(&self, s: &NumericalSemigroup) -> Result<u64> {
        generic_mu(self, s)
    }

    /// Special gaps `x` of a member `S` such that `S ∪ {x}` is a child of `S`,
    /// ascending. `apery` is `Ap(S, apery_modulus())`.
    fn children(&self, s: &NumericalSemigroup, apery: &AperySet) -> Result<Vec<u64>> {
        generic_children(self, s, apery)
    }
}

/// `μ` straight from its definition: the least minimal generator whose
/// removal lands in the family.
pub fn generic_mu<F: Family + ?Sized>(family: &F, s: &NumericalSemigroup) -> Result<u64> {
    if s == family.minimum() {
        return Err(Error::IsMinimum(s.to_string()));
    }
    s.minimal_generators()
        .iter()
        .copied()
        .find(|&x| family.contains(&s.remove_unchecked(x)))
        .ok_or_else(|| Error::NoRemovableGenerator(s.to_string()))
}

/// Children of `S`: `S ∪ {x}` for special gaps `x` such that `S ∪ {x}` is in
/// the family and `μ(S ∪ {x}) = x`.
pub fn generic_children<F: Family + ?Sized>(
    family: &F,
    s: &NumericalSemigroup,
    apery: &AperySet,
) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for x in apery.special_gaps() {
        let t = s.adjoin_unchecked(x);
        if family.contains(&t) && family.mu(&t)? == x {
            out.push(x);
        }
    }
    Ok(out)
}

/// `μ(F, S)` with the membership precondition checked.
pub fn mu<F: Family + ?Sized>(family: &F, s: &NumericalSemigroup) -> Result<u64> {
    if !family.contains(s) {
        return Err(Error::NotInFamily(s.to_string()));
    }
    family.mu(s)
}

/// The chain `S = S_0 ⊋ S_1 ⊋ … ⊋ S_k = min(F)` obtained by repeatedly
/// removing `μ`.
pub fn f_sequence<F: Family + ?Sized>(
    family: &F,
    s: &NumericalSemigroup,
) -> Result<Vec<NumericalSemigroup>> {
    if !family.contains(s) {
        return Err(Error::NotInFamily(s.to_string()));
    }
    let mut chain = vec![s.clone()];
    let mut cur = s.clone();
    while &cur != family.minimum() {
        let x = family.mu(&cur)?;
        cur = cur.remove_unchecked(x);
        if !family.contains(&cur) {
            return Err(Error::NoRemovableGenerator(
                chain.last().unwrap().to_string(),
            ));
        }
        chain.push(cur.clone());
    }
    Ok(chain)
}

/// A vertex of the family tree.
#[derive(Clone, Debug)]
pub struct TreeNode {
    pub semigroup: NumericalSemigroup,
    /// Apéry set with respect to the family's modulus.
    pub apery: AperySet,
    pub parent: Option<usize>,
    /// `μ` of this node: the element adjoined to the parent.
    pub adjoined: Option<u64>,
    pub depth: usize,
    /// Elements adjoined to produce the children of this node, ascending.
    pub child_gaps: Vec<u64>,
}

/// All members of a family, arranged as the tree whose edges go from `S` to
/// `S \ {μ(S)}`. Node 0 is the root (the minimum); nodes are in BFS order,
/// and within a layer by parent and then adjoined element.
#[derive(Clone, Debug)]
pub struct FamilyTree {
    nodes: Vec<TreeNode>,
    index: HashMap<NumericalSemigroup, usize>,
}

impl FamilyTree {
    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &TreeNode {
        &self.nodes[i]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn minimum(&self) -> &NumericalSemigroup {
        &self.nodes[0].semigroup
    }

    pub fn members(&self) -> impl Iterator<Item = &NumericalSemigroup> {
        self.nodes.iter().map(|n| &n.semigroup)
    }

    /// `(child, parent)` index pairs in node order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.nodes
            .iter()
            .enumerate()
            .filter_map(|(i, n)| n.parent.map(|p| (i, p)))
            .collect()
    }

    pub fn index_of(&self, s: &NumericalSemigroup) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn contains(&self, s: &NumericalSemigroup) -> bool {
        self.index.contains_key(s)
    }

    /// Members sorted by genus descending, then membership table.
    pub fn sorted_members(&self) -> Vec<NumericalSemigroup> {
        let mut v: Vec<_> = self.members().cloned().collect();
        v.sort();
        v
    }

    /// The least member containing the F-set `x`: the intersection of all
    /// members containing it.
    pub fn closure(&self, x: &FSet) -> Result<NumericalSemigroup> {
        let min = self.minimum();
        if x.iter().any(|e| min.contains(e as i64)) {
            return Err(Error::NotAnFSet(x.to_string()));
        }
        self.members()
            .filter(|s| x.iter().all(|e| s.contains(e as i64)))
            .fold(None, |acc: Option<NumericalSemigroup>, s| {
                Some(match acc {
                    None => s.clone(),
                    Some(a) => a.intersect(s),
                })
            })
            .ok_or_else(|| Error::NotAnFSet(x.to_string()))
    }

    /// Minimal generators of `S` whose removal stays in the family. Any F-set
    /// generating `S` must contain all of them.
    pub fn removable_generators(&self, s: &NumericalSemigroup) -> Vec<u64> {
        s.minimal_generators()
            .iter()
            .copied()
            .filter(|&x| self.contains(&s.remove_unchecked(x)))
            .collect()
    }

    /// The least size of an F-set whose closure is `S`.
    ///
    /// Searches subsets of `(S \ min) ∩ [1, F(min)]` by increasing size, up to
    /// `e(S)`, each containing every removable minimal generator.
    pub fn f_rank(&self, s: &NumericalSemigroup) -> Result<usize> {
        if !self.contains(s) {
            return Err(Error::NotInFamily(s.to_string()));
        }
        let min = self.minimum();
        if s == min {
            return Ok(0);
        }
        let forced = self.removable_generators(s);
        let free: Vec<u64> = (1..=min.frobenius().max(0) as u64)
            .filter(|&e| s.contains(e as i64) && !min.contains(e as i64) && !forced.contains(&e))
            .collect();
        let containing: Vec<&NumericalSemigroup> = self.members().collect();
        let generates = |set: &[u64]| {
            containing
                .iter()
                .filter(|t| set.iter().all(|&e| t.contains(e as i64)))
                .all(|t| s.is_subset_of(t))
        };
        let cap = s.embedding_dimension();
        for extra in 0..=free.len() {
            if forced.len() + extra > cap {
                break;
            }
            let mut found = false;
            for_each_combination(&free, extra, |pick| {
                let mut set = forced.clone();
                set.extend_from_slice(pick);
                if generates(&set) {
                    found = true;
                }
                found
            });
            if found {
                return Ok(forced.len() + extra);
            }
        }
        // Unreachable for a genuine semi-covariety: msg(S) \ min generates S.
        Err(Error::NoRemovableGenerator(s.to_string()))
    }

    /// Members of rank one: `S != min` with `S` the closure of `{μ(S)}`.
    pub fn rank1_members(&self) -> Vec<NumericalSemigroup> {
        self.nodes
            .iter()
            .filter_map(|n| {
                let x = n.adjoined?;
                let c = self.closure(&FSet::from(vec![x])).ok()?;
                (c == n.semigroup).then(|| n.semigroup.clone())
            })
            .collect()
    }
}

/// Calls `f` on every `k`-subset of `items` in lexicographic order until it
/// returns `true`.
pub(crate) fn for_each_combination(items: &[u64], k: usize, mut f: impl FnMut(&[u64]) -> bool) {
    let n = items.len();
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf: Vec<u64> = Vec::with_capacity(k);
    loop {
        buf.clear();
        buf.extend(idx.iter().map(|&i| items[i]));
        if f(&buf) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// A finite ascending set of positive integers, candidate F-set of a family.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FSet(Vec<u64>);

impl FSet {
    pub fn new(mut elements: Vec<u64>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Self(elements)
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<u64>> for FSet {
    fn from(v: Vec<u64>) -> Self {
        Self::new(v)
    }
}

impl std::fmt::Display for FSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let items: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Builds the family tree breadth first from the minimum.
///
/// Each layer is expanded in parallel; results are merged in node order so
/// the output does not depend on scheduling. Fails with
/// [`Error::LimitExceeded`] once more than `limit` members have been found.
// The msg cache inside `NumericalSemigroup` is not part of its hash or equality.
#[allow(clippy::mutable_key_type)]
pub fn enumerate<F: Family + ?Sized>(family: &F, limit: Option<usize>) -> Result<FamilyTree> {
    let root = family.minimum().clone();
    if !family.contains(&root) {
        return Err(Error::NotInFamily(root.to_string()));
    }
    let apery = root.apery(family.apery_modulus() as i64)?;
    let limit = limit.unwrap_or(usize::MAX);
    if limit == 0 {
        return Err(Error::LimitExceeded(limit));
    }
    let mut index = HashMap::new();
    index.insert(root.clone(), 0);
    let mut nodes = vec![TreeNode {
        semigroup: root,
        apery,
        parent: None,
        adjoined: None,
        depth: 0,
        child_gaps: Vec::new(),
    }];
    let mut frontier: Vec<usize> = vec![0];

    while !frontier.is_empty() {
        let expanded: Vec<Result<Vec<(u64, NumericalSemigroup, AperySet)>>> = frontier
            .par_iter()
            .map(|&i| {
                let node = &nodes[i];
                let xs = family.children(&node.semigroup, &node.apery)?;
                xs.into_iter()
                    .map(|x| {
                        Ok((
                            x,
                            node.semigroup.adjoin_unchecked(x),
                            node.apery.adjoin_special_gap(x)?,
                        ))
                    })
                    .collect()
            })
            .collect();

        let mut next = Vec::new();
        for (&parent, kids) in frontier.iter().zip(expanded) {
            let kids = kids?;
            nodes[parent].child_gaps = kids.iter().map(|k| k.0).collect();
            let depth = nodes[parent].depth + 1;
            for (x, semigroup, apery) in kids {
                if index.contains_key(&semigroup) {
                    return Err(Error::DuplicateMember(semigroup.to_string()));
                }
                if nodes.len() >= limit {
                    return Err(Error::LimitExceeded(limit));
                }
                index.insert(semigroup.clone(), nodes.len());
                next.push(nodes.len());
                nodes.push(TreeNode {
                    semigroup,
                    apery,
                    parent: Some(parent),
                    adjoined: Some(x),
                    depth,
                    child_gaps: Vec::new(),
                });
            }
        }
        frontier = next;
    }
    Ok(FamilyTree { nodes, index })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// All oversemigroups of `min`, described by membership only, so every
    /// engine default is exercised.
    struct Over(NumericalSemigroup);

    impl Family for Over {
        fn minimum(&self) -> &NumericalSemigroup {
            &self.0
        }
        fn contains(&self, s: &NumericalSemigroup) -> bool {
            self.0.is_subset_of(s)
        }
    }

    /// Not a semi-covariety: two incomparable semigroups with no common
    /// minimum inside the family.
    struct Broken(NumericalSemigroup, NumericalSemigroup);

    impl Family for Broken {
        fn minimum(&self) -> &NumericalSemigroup {
            &self.0
        }
        fn contains(&self, s: &NumericalSemigroup) -> bool {
            s == &self.0 || s == &self.1
        }
    }

    fn ns(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn generic_enumeration_of_oversemigroups() {
        let fam = Over(ns(&[3, 7, 8]));
        let tree = enumerate(&fam, None).unwrap();
        assert_eq!(tree.len(), 6);
        assert_eq!(tree.node(0).child_gaps, vec![4, 5]);
        let naturals = NumericalSemigroup::naturals();
        assert!(tree.contains(&naturals));
    }

    #[test]
    fn mu_of_minimum_is_an_error() {
        let fam = Over(ns(&[3, 7, 8]));
        assert!(matches!(
            mu(&fam, &ns(&[3, 7, 8])),
            Err(Error::IsMinimum(_))
        ));
        assert!(matches!(mu(&fam, &ns(&[2, 5])), Err(Error::NotInFamily(_))));
    }

    #[test]
    fn f_sequence_removes_one_element_per_step() {
        let delta = ns(&[3, 7, 8]);
        let fam = Over(delta.clone());
        let s =
            NumericalSemigroup::from_membership(6, |x| [0, 2, 3, 4, 5, 6].contains(&x)).unwrap();
        let chain = f_sequence(&fam, &s).unwrap();
        let expect: Vec<NumericalSemigroup> = vec![
            s.clone(),
            delta.adjoin(5).unwrap().adjoin(4).unwrap(),
            delta.adjoin(5).unwrap(),
            delta.clone(),
        ];
        assert_eq!(chain, expect);
        assert_eq!(f_sequence(&fam, &delta).unwrap(), vec![delta.clone()]);
    }

    #[test]
    fn limit_is_enforced() {
        let fam = Over(ns(&[3, 7, 8]));
        assert_eq!(
            enumerate(&fam, Some(5)).unwrap_err(),
            Error::LimitExceeded(5)
        );
        assert_eq!(enumerate(&fam, Some(6)).unwrap().len(), 6);
    }

    #[test]
    fn broken_family_is_reported() {
        let a = ns(&[3, 4, 5]);
        let b = ns(&[2, 5]);
        let fam = Broken(a.clone(), b.clone());
        assert!(matches!(mu(&fam, &b), Err(Error::NoRemovableGenerator(_))));
        assert!(matches!(
            f_sequence(&fam, &b),
            Err(Error::NoRemovableGenerator(_))
        ));
    }

    #[test]
    fn closure_and_rank_on_generic_family() {
        let delta = ns(&[5, 7]);
        let tree = enumerate(&Over(delta.clone()), None).unwrap();
        let s = ns(&[3, 4, 5]);
        assert_eq!(tree.f_rank(&s).unwrap(), 2);
        assert_eq!(tree.f_rank(&delta).unwrap(), 0);
        assert_eq!(tree.closure(&FSet::default()).unwrap(), delta);
        assert!(matches!(
            tree.closure(&FSet::from(vec![5])),
            Err(Error::NotAnFSet(_))
        ));
    }

    #[test]
    fn combinations_enumerate_in_order() {
        let mut seen = Vec::new();
        for_each_combination(&[1, 2, 3, 4], 2, |c| {
            seen.push(c.to_vec());
            false
        });
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![1, 2]);
        assert_eq!(seen[5], vec![3, 4]);
        let mut empty = 0;
        for_each_combination(&[1, 2], 0, |_| {
            empty += 1;
            false
        });
        assert_eq!(empty, 1);
    }
}
