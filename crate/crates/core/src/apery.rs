use crate::error::{Error, Result};

/// Apéry set of a semigroup with respect to one of its positive members `n`:
/// for each residue `i` modulo `n`, the least member congruent to `i`.
///
/// The witnesses alone determine the semigroup (`x` is a member iff
/// `x >= w(x mod n)`), so every query here is answered without the
/// membership table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AperySet {
    modulus: u64,
    witnesses: Vec<u64>,
}

impl AperySet {
    pub(crate) fn from_witnesses(modulus: u64, witnesses: Vec<u64>) -> Self {
        debug_assert_eq!(witnesses.len() as u64, modulus);
        debug_assert_eq!(witnesses[0], 0);
        Self { modulus, witnesses }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `w(i)` indexed by residue.
    pub fn witnesses(&self) -> &[u64] {
        &self.witnesses
    }

    pub fn witness(&self, residue: u64) -> u64 {
        self.witnesses[residue as usize]
    }

    pub fn len(&self) -> usize {
        self.witnesses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }

    /// Elements in ascending order.
    pub fn elements(&self) -> Vec<u64> {
        let mut v = self.witnesses.clone();
        v.sort_unstable();
        v
    }

    /// Membership in the underlying semigroup.
    #[inline]
    pub fn semigroup_contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let x = x as u64;
        x >= self.witnesses[(x % self.modulus) as usize]
    }

    #[inline]
    fn is_element(&self, x: i64) -> bool {
        x >= 0 && self.witnesses[(x as u64 % self.modulus) as usize] == x as u64
    }

    /// Frobenius number of the underlying semigroup: `max Ap - n`.
    pub fn frobenius(&self) -> i64 {
        *self.witnesses.iter().max().unwrap() as i64 - self.modulus as i64
    }

    /// Pseudo-Frobenius numbers `w - n` for the maximal elements `w` of the
    /// Apéry set under `a <= b  iff  b - a` is a member. Ascending.
    ///
    /// For the whole of N this yields `[-1]`.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        let elems = self.elements();
        let n = self.modulus as i64;
        elems
            .iter()
            .enumerate()
            .filter(|&(i, &w)| {
                elems[i + 1..]
                    .iter()
                    .all(|&v| !self.semigroup_contains(v as i64 - w as i64))
            })
            .map(|(_, &w)| w as i64 - n)
            .collect()
    }

    /// Special gaps: pseudo-Frobenius numbers whose double is a member.
    pub fn special_gaps(&self) -> Vec<u64> {
        self.pseudo_frobenius()
            .into_iter()
            .filter(|&x| x > 0 && self.semigroup_contains(2 * x))
            .map(|x| x as u64)
            .collect()
    }

    /// Apéry set of `S ∪ {x}` for a special gap `x` of `S`.
    ///
    /// A special gap `x` is always the predecessor of the witness `x + n`, so
    /// the update replaces that single witness.
    pub fn adjoin_special_gap(&self, x: u64) -> Result<AperySet> {
        let r = (x % self.modulus) as usize;
        if self.witnesses[r] != x + self.modulus {
            return Err(Error::NotSpecialGap(x));
        }
        let mut witnesses = self.witnesses.clone();
        witnesses[r] = x;
        Ok(AperySet {
            modulus: self.modulus,
            witnesses,
        })
    }

    /// Minimal generators of the underlying semigroup lying strictly below
    /// `bound`, ascending.
    ///
    /// Every minimal generator other than `n` lies in the Apéry set, and an
    /// element `w` of the set is decomposable iff `w - w'` is again in the set
    /// for some nonzero `w' != w`.
    pub fn minimal_generators_below(&self, bound: u64) -> Vec<u64> {
        let elems = self.elements();
        let mut out: Vec<u64> = elems
            .iter()
            .copied()
            .filter(|&w| w > 0 && w < bound)
            .filter(|&w| {
                elems
                    .iter()
                    .filter(|&&v| v != 0 && v < w)
                    .all(|&v| !self.is_element(w as i64 - v as i64))
            })
            .collect();
        let n = self.modulus;
        if n < bound
            && elems
                .iter()
                .filter(|&&v| v != 0 && v < n)
                .all(|&v| !self.semigroup_contains((n - v) as i64))
        {
            out.push(n);
            out.sort_unstable();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use crate::NumericalSemigroup;

    #[test]
    fn adjoin_replaces_one_witness() {
        let delta = NumericalSemigroup::from_generators(&[3, 7, 8]).unwrap();
        let ap = delta.apery(3).unwrap();
        assert_eq!(ap.elements(), vec![0, 7, 8]);
        assert_eq!(ap.adjoin_special_gap(4).unwrap().elements(), vec![0, 4, 8]);
        assert_eq!(ap.adjoin_special_gap(5).unwrap().elements(), vec![0, 5, 7]);
        assert!(ap.adjoin_special_gap(2).is_err());
    }

    #[test]
    fn generators_below_bound_match_msg() {
        let s = NumericalSemigroup::from_generators(&[4, 5, 6]).unwrap();
        let ap = s.apery(8).unwrap();
        assert_eq!(ap.minimal_generators_below(7), vec![4, 5, 6]);
        let ap4 = s.apery(4).unwrap();
        assert_eq!(ap4.minimal_generators_below(100), vec![4, 5, 6]);
        let ap5 = s.apery(5).unwrap();
        assert_eq!(ap5.minimal_generators_below(100), vec![4, 5, 6]);
    }

    #[test]
    fn naturals_have_conventional_pf() {
        let n = NumericalSemigroup::naturals();
        let ap = n.apery(1).unwrap();
        assert_eq!(ap.pseudo_frobenius(), vec![-1]);
        assert!(ap.special_gaps().is_empty());
        assert_eq!(ap.frobenius(), -1);
    }
}
