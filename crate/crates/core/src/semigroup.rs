//! Numerical semigroups stored as a membership table on `[0, F+1]`.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::apery::AperySet;
use crate::error::{Error, Result};
use crate::table::MemberTable;

/// Largest Frobenius number (and multiplicity) accepted by the constructors.
pub const MAX_FROBENIUS: u64 = 1 << 30;

/// A cofinite submonoid of `(N, +)`.
///
/// Members in `[0, F+1]` are kept in a bitset; everything above `F` is a
/// member implicitly. The whole of N has `F = -1` and the table `{0}`.
/// Two semigroups are equal iff their Frobenius numbers and tables are equal.
pub struct NumericalSemigroup {
    frobenius: i64,
    table: MemberTable,
    msg: OnceLock<Vec<u64>>,
}

/// The classical invariants of a numerical semigroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub multiplicity: u64,
    pub frobenius: i64,
    pub genus: u64,
    pub embedding_dimension: usize,
    pub semigroup_type: usize,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NumericalSemigroup {
    /// Builds from a table whose last bit is set; trims it to `[0, F+1]`.
    fn from_table(mut table: MemberTable) -> Self {
        debug_assert!(table.len() > 0 && table.get(table.len() - 1));
        let frobenius = match table.last_zero() {
            Some(f) => {
                table.truncate(f + 2);
                f as i64
            }
            None => {
                table.truncate(1);
                -1
            }
        };
        Self {
            frobenius,
            table,
            msg: OnceLock::new(),
        }
    }

    /// The whole of N.
    pub fn naturals() -> Self {
        Self::from_table(MemberTable::from_fn(1, |_| true))
    }

    /// `{0, F+1, →}`, the semigroup whose gaps are exactly `1..=F`.
    pub fn ordinary(frobenius: u64) -> Result<Self> {
        if frobenius > MAX_FROBENIUS {
            return Err(Error::OutOfRange(format!("Frobenius number {frobenius}")));
        }
        let len = frobenius as usize + 2;
        Ok(Self::from_table(MemberTable::from_fn(len, |i| {
            i == 0 || i == len - 1
        })))
    }

    /// The submonoid generated by `generators`, which must have gcd 1.
    ///
    /// Least members of each residue class modulo the smallest generator are
    /// found by a shortest-path search, which bounds the work by the
    /// multiplicity rather than by the Frobenius number.
    pub fn from_generators(generators: &[u64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&z) = generators.iter().find(|&&g| g == 0) {
            return Err(Error::InvalidGenerator(z));
        }
        let g = generators.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let m = *generators.iter().min().unwrap();
        if m > MAX_FROBENIUS {
            return Err(Error::OutOfRange(format!("multiplicity {m}")));
        }
        let mut gens: Vec<u64> = generators.iter().copied().filter(|&x| x != m).collect();
        gens.sort_unstable();
        gens.dedup();

        let m_us = m as usize;
        let mut dist = vec![u64::MAX; m_us];
        dist[0] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0u64, 0usize)));
        while let Some(Reverse((d, r))) = heap.pop() {
            if d > dist[r] {
                continue;
            }
            for &a in &gens {
                let nd = d.saturating_add(a);
                let nr = ((r as u64 + a % m) % m) as usize;
                if nd < dist[nr] {
                    dist[nr] = nd;
                    heap.push(Reverse((nd, nr)));
                }
            }
        }
        let max_w = *dist.iter().max().unwrap();
        let frobenius = max_w as i64 - m as i64;
        if frobenius > MAX_FROBENIUS as i64 {
            return Err(Error::OutOfRange(format!("Frobenius number {frobenius}")));
        }
        let len = (frobenius + 2) as usize;
        let table = MemberTable::from_fn(len, |x| x as u64 >= dist[x % m_us]);
        Ok(Self::from_table(table))
    }

    /// `⟨generators⟩ ∪ {bound+1, →}`. The generators need not be coprime.
    pub fn generated_with_tail(generators: &[u64], bound: u64) -> Result<Self> {
        if let Some(&z) = generators.iter().find(|&&g| g == 0) {
            return Err(Error::InvalidGenerator(z));
        }
        if bound > MAX_FROBENIUS {
            return Err(Error::OutOfRange(format!("bound {bound}")));
        }
        let reach = reachable_up_to(generators, bound as usize);
        let len = bound as usize + 2;
        Ok(Self::from_table(MemberTable::from_fn(len, |i| {
            i == len - 1 || reach[i]
        })))
    }

    /// Semigroup whose members up to `bound` are those satisfying `member`,
    /// with everything above `bound` included. Fails if the result is not
    /// closed under addition or misses 0.
    pub fn from_membership(bound: u64, member: impl Fn(u64) -> bool) -> Result<Self> {
        if bound > MAX_FROBENIUS {
            return Err(Error::OutOfRange(format!("bound {bound}")));
        }
        let len = bound as usize + 2;
        let table = MemberTable::from_fn(len, |i| i == len - 1 || member(i as u64));
        if !table.get(0) {
            return Err(Error::NotASemigroup("0 is not a member".into()));
        }
        let members: Vec<usize> = table
            .iter_ones()
            .filter(|&i| i > 0 && i <= bound as usize)
            .collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i..] {
                if a + b > bound as usize {
                    break;
                }
                if !table.get(a + b) {
                    return Err(Error::NotASemigroup(format!(
                        "{a} + {b} = {} is missing",
                        a + b
                    )));
                }
            }
        }
        Ok(Self::from_table(table))
    }

    /// Semigroup with exactly the given gaps.
    pub fn from_gaps(gaps: &[u64]) -> Result<Self> {
        let bound = gaps.iter().copied().max().unwrap_or(0);
        Self::from_membership(bound, |x| !gaps.contains(&x))
    }

    /// `F(S)`; `-1` for the whole of N.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn is_naturals(&self) -> bool {
        self.frobenius == -1
    }

    #[inline]
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            false
        } else if n > self.frobenius {
            true
        } else {
            self.table.get(n as usize)
        }
    }

    /// Members in `[0, F+1]`, ascending.
    pub fn small_members(&self) -> Vec<u64> {
        self.table.iter_ones().map(|i| i as u64).collect()
    }

    /// `N \ S`, ascending.
    pub fn gaps(&self) -> Vec<u64> {
        (1..=self.frobenius.max(0) as usize)
            .filter(|&i| !self.table.get(i))
            .map(|i| i as u64)
            .collect()
    }

    pub fn genus(&self) -> u64 {
        (self.table.len() - self.table.count_ones()) as u64
    }

    /// `m(S)`; 1 for the whole of N.
    pub fn multiplicity(&self) -> u64 {
        self.table.iter_ones().find(|&i| i > 0).unwrap_or(1) as u64
    }

    /// The minimal system of generators, ascending. Computed once and cached.
    pub fn minimal_generators(&self) -> &[u64] {
        self.msg.get_or_init(|| self.compute_msg())
    }

    fn compute_msg(&self) -> Vec<u64> {
        if self.is_naturals() {
            return vec![1];
        }
        let m = self.multiplicity();
        let ap = self.apery_unchecked(m);
        let mut rest: Vec<u64> = ap.witnesses()[1..].to_vec();
        rest.sort_unstable();
        let mut msg = vec![m];
        for w in rest {
            if !msg[1..].iter().any(|&g| self.contains(w as i64 - g as i64)) {
                msg.push(w);
            }
        }
        msg
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators().len()
    }

    pub fn invariants(&self) -> Invariants {
        Invariants {
            multiplicity: self.multiplicity(),
            frobenius: self.frobenius,
            genus: self.genus(),
            embedding_dimension: self.embedding_dimension(),
            semigroup_type: self.semigroup_type(),
        }
    }

    /// `t(S) = #PF(S)`, with `PF(N) = {-1}` so that `t(N) = 1`.
    pub fn semigroup_type(&self) -> usize {
        self.apery_unchecked(self.multiplicity())
            .pseudo_frobenius()
            .len()
    }

    fn apery_unchecked(&self, n: u64) -> AperySet {
        let witnesses = (0..n)
            .map(|i| {
                let mut x = i;
                while !self.contains(x as i64) {
                    x += n;
                }
                x
            })
            .collect();
        AperySet::from_witnesses(n, witnesses)
    }

    /// `Ap(S, n)` for a positive member `n`.
    pub fn apery(&self, n: i64) -> Result<AperySet> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::NotAMember(n));
        }
        if n as u64 > MAX_FROBENIUS {
            return Err(Error::OutOfRange(format!("modulus {n}")));
        }
        Ok(self.apery_unchecked(n as u64))
    }

    /// `PF(S)`, ascending. Its maximum is `F(S)`.
    pub fn pseudo_frobenius(&self) -> Result<Vec<u64>> {
        if self.is_naturals() {
            return Err(Error::NoGaps);
        }
        Ok(self
            .apery_unchecked(self.multiplicity())
            .pseudo_frobenius()
            .into_iter()
            .map(|x| x as u64)
            .collect())
    }

    /// `SG(S)`: the gaps `x` for which `S ∪ {x}` is again a numerical semigroup.
    pub fn special_gaps(&self) -> Result<Vec<u64>> {
        if self.is_naturals() {
            return Err(Error::NoGaps);
        }
        Ok(self.apery_unchecked(self.multiplicity()).special_gaps())
    }

    /// `S ∪ {x}` for a special gap `x`.
    pub fn adjoin(&self, x: u64) -> Result<Self> {
        if self.is_naturals() || !self.special_gaps()?.contains(&x) {
            return Err(Error::NotSpecialGap(x));
        }
        Ok(self.adjoin_unchecked(x))
    }

    pub(crate) fn adjoin_unchecked(&self, x: u64) -> Self {
        debug_assert!(!self.contains(x as i64));
        let mut table = self.table.clone();
        table.set(x as usize);
        Self::from_table(table)
    }

    /// `S \ {x}` for a minimal generator `x`.
    pub fn remove(&self, x: u64) -> Result<Self> {
        if !self.minimal_generators().contains(&x) {
            return Err(Error::NotMinimalGenerator(x));
        }
        Ok(self.remove_unchecked(x))
    }

    pub(crate) fn remove_unchecked(&self, x: u64) -> Self {
        let len = (self.frobenius + 2).max(x as i64 + 2) as usize;
        let x = x as usize;
        Self::from_table(MemberTable::from_fn(len, |i| {
            i != x && self.contains(i as i64)
        }))
    }

    /// `S ∩ T`; its Frobenius number is the larger of the two.
    pub fn intersect(&self, other: &Self) -> Self {
        let len = (self.frobenius.max(other.frobenius) + 2) as usize;
        Self::from_table(MemberTable::from_fn(len, |i| {
            self.contains(i as i64) && other.contains(i as i64)
        }))
    }

    /// `S ⊆ T`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        (0..=other.frobenius).all(|i| !self.contains(i) || other.contains(i))
    }

    /// `S + ⟨extra⟩ = ⟨msg(S) ∪ extra⟩`.
    pub fn sum(&self, extra: &[u64]) -> Result<Self> {
        if extra.is_empty() {
            return Ok(self.clone());
        }
        let mut gens = self.minimal_generators().to_vec();
        gens.extend_from_slice(extra);
        Self::from_generators(&gens)
    }

    /// Compares membership of `0, 1, 2, …` in order, non-members first.
    fn cmp_tables(&self, other: &Self) -> Ordering {
        let top = self.frobenius.max(other.frobenius) + 1;
        for i in 0..=top {
            match (self.contains(i), other.contains(i)) {
                (false, true) => return Ordering::Less,
                (true, false) => return Ordering::Greater,
                _ => {}
            }
        }
        Ordering::Equal
    }
}

/// Whether `n` lies in the submonoid generated by `generators` (not
/// necessarily cofinite).
pub fn submonoid_contains(generators: &[u64], n: u64) -> bool {
    if n == 0 {
        return true;
    }
    reachable_up_to(generators, n as usize)[n as usize]
}

fn reachable_up_to(generators: &[u64], bound: usize) -> Vec<bool> {
    let mut reach = vec![false; bound + 1];
    reach[0] = true;
    for x in 1..=bound {
        reach[x] = generators
            .iter()
            .any(|&g| g > 0 && g as usize <= x && reach[x - g as usize]);
    }
    reach
}

impl Clone for NumericalSemigroup {
    fn clone(&self) -> Self {
        Self {
            frobenius: self.frobenius,
            table: self.table.clone(),
            msg: self.msg.clone(),
        }
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.frobenius == other.frobenius && self.table == other.table
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.frobenius.hash(state);
        self.table.hash(state);
    }
}

/// Canonical listing order: genus descending, then membership tables
/// lexicographically.
impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .genus()
            .cmp(&self.genus())
            .then_with(|| self.cmp_tables(other))
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.minimal_generators().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup({self})")
    }
}
