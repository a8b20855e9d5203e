//! The family of all numerical semigroups containing a fixed `Δ`.

use crate::apery::AperySet;
use crate::engine::{self, Family, FamilyTree};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Oversemigroups of `Δ`. Its minimum is `Δ`, and `μ(S) = min(S \ Δ)`.
#[derive(Clone, Debug)]
pub struct ThetaFamily {
    delta: NumericalSemigroup,
}

pub fn theta_family(delta: NumericalSemigroup) -> ThetaFamily {
    ThetaFamily { delta }
}

impl ThetaFamily {
    pub fn delta(&self) -> &NumericalSemigroup {
        &self.delta
    }

    /// `min(S \ Δ)`, or `None` when `S = Δ`. Assumes `Δ ⊆ S`.
    pub fn least_new_element(&self, s: &NumericalSemigroup) -> Option<u64> {
        (1..=self.delta.frobenius().max(0))
            .find(|&x| s.contains(x) && !self.delta.contains(x))
            .map(|x| x as u64)
    }
}

impl Family for ThetaFamily {
    fn minimum(&self) -> &NumericalSemigroup {
        &self.delta
    }

    fn contains(&self, s: &NumericalSemigroup) -> bool {
        self.delta.is_subset_of(s)
    }

    fn mu(&self, s: &NumericalSemigroup) -> Result<u64> {
        self.least_new_element(s)
            .ok_or_else(|| Error::IsMinimum(s.to_string()))
    }

    /// Special gaps `x` with every member of `S` below `x` already in `Δ`,
    /// i.e. `x < min(S \ Δ)`.
    fn children(&self, s: &NumericalSemigroup, apery: &AperySet) -> Result<Vec<u64>> {
        let sg = apery.special_gaps();
        Ok(match self.least_new_element(s) {
            None => sg,
            Some(least) => sg.into_iter().filter(|&x| x < least).collect(),
        })
    }
}

/// All oversemigroups of `Δ`, as a tree rooted at `Δ`.
pub fn enumerate_theta(delta: &NumericalSemigroup, limit: Option<usize>) -> Result<FamilyTree> {
    engine::enumerate(&theta_family(delta.clone()), limit)
}

/// The least oversemigroup of `Δ` containing `x`: `Δ + ⟨x⟩`. Every element of
/// `x` must be a gap of `Δ`; the empty set gives `Δ`.
pub fn theta_closure(delta: &NumericalSemigroup, x: &[u64]) -> Result<NumericalSemigroup> {
    if x.iter().any(|&e| delta.contains(e as i64)) {
        let set: Vec<String> = x.iter().map(u64::to_string).collect();
        return Err(Error::NotThetaSet(format!("{{{}}}", set.join(","))));
    }
    delta.sum(x)
}

/// The unique minimal generating set of `S` within the family:
/// `{x ∈ msg(S) : x ∉ Δ}`. Its size is the rank of `S`.
pub fn theta_msg(delta: &NumericalSemigroup, s: &NumericalSemigroup) -> Result<Vec<u64>> {
    if !delta.is_subset_of(s) {
        return Err(Error::NotInFamily(s.to_string()));
    }
    Ok(s.minimal_generators()
        .iter()
        .copied()
        .filter(|&x| !delta.contains(x as i64))
        .collect())
}

/// The rank-one members, one per gap `x` of `Δ`, as `(x, Δ + ⟨x⟩)`.
pub fn theta_rank1(delta: &NumericalSemigroup) -> Vec<(u64, NumericalSemigroup)> {
    delta
        .gaps()
        .into_iter()
        .map(|x| {
            (
                x,
                delta.sum(&[x]).expect("Δ + ⟨x⟩ is a numerical semigroup"),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn children_of_delta() {
        let delta = ns(&[3, 7, 8]);
        let fam = theta_family(delta.clone());
        let ap = delta.apery(3).unwrap();
        assert_eq!(fam.children(&delta, &ap).unwrap(), vec![4, 5]);
        let d4 = delta.adjoin(4).unwrap();
        assert!(fam.children(&d4, &d4.apery(3).unwrap()).unwrap().is_empty());
        let d5 = delta.adjoin(5).unwrap();
        assert_eq!(fam.children(&d5, &d5.apery(3).unwrap()).unwrap(), vec![4]);
    }

    #[test]
    fn enumerate_small_cases() {
        assert_eq!(
            enumerate_theta(&NumericalSemigroup::naturals(), None)
                .unwrap()
                .len(),
            1
        );
        let t = enumerate_theta(&ns(&[2, 3]), None).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.node(1).semigroup, NumericalSemigroup::naturals());
        assert_eq!(enumerate_theta(&ns(&[3, 7, 8]), None).unwrap().len(), 6);
    }

    #[test]
    fn closure_cases() {
        let d = ns(&[5, 7, 9]);
        assert_eq!(theta_closure(&d, &[4, 6]).unwrap(), ns(&[4, 5, 6, 7]));
        assert_eq!(theta_closure(&d, &[11]).unwrap(), ns(&[5, 7, 9, 11]));
        assert!(matches!(
            theta_closure(&d, &[7]),
            Err(Error::NotThetaSet(_))
        ));
        assert!(matches!(
            theta_closure(&d, &[14]),
            Err(Error::NotThetaSet(_))
        ));
    }

    #[test]
    fn msg_cases() {
        assert_eq!(
            theta_msg(&ns(&[5, 7]), &ns(&[3, 4, 5])).unwrap(),
            vec![3, 4]
        );
        let d = ns(&[5, 7, 9]);
        assert!(theta_msg(&d, &d).unwrap().is_empty());
        assert_eq!(theta_msg(&d, &ns(&[2, 5])).unwrap(), vec![2]);
        assert!(theta_msg(&d, &ns(&[2, 3])).is_ok());
        assert!(matches!(
            theta_msg(&ns(&[2, 3]), &ns(&[3, 4, 5])),
            Err(Error::NotInFamily(_))
        ));
    }

    #[test]
    fn rank1_cases() {
        let r = theta_rank1(&ns(&[5, 7, 9]));
        assert_eq!(r.len(), 8);
        assert!(r.contains(&(2, ns(&[2, 5]))));
        assert!(r.contains(&(13, ns(&[5, 7, 9, 13]))));
        assert!(theta_rank1(&NumericalSemigroup::naturals()).is_empty());
        let r = theta_rank1(&ns(&[3, 7, 8]));
        assert_eq!(r.iter().map(|p| p.0).collect::<Vec<_>>(), vec![1, 2, 4, 5]);
    }
}
