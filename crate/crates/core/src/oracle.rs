//! Brute-force reference implementations.
//!
//! Everything here is computed straight from the definitions, using nothing
//! from the rest of the crate except construction and membership queries of
//! [`NumericalSemigroup`]. Inputs are capped so that exhaustive searches stay
//! fast; exceeding a cap is an error, never a silent truncation.

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Default cap on the genus of `Δ` for [`brute_oversemigroups`].
pub const MAX_GENUS: u64 = 16;
/// Cap on `F` for [`brute_coe`].
pub const MAX_COE_FROBENIUS: u64 = 17;
/// Cap on the ground set searched by [`brute_rank`] and [`brute_minimal_fsets`].
pub const MAX_RANK_GROUND: usize = 22;

/// Whether `n` is a nonnegative integer combination of `generators`.
pub fn brute_membership(generators: &[u64], n: i64) -> bool {
    if n < 0 {
        return false;
    }
    let n = n as usize;
    let mut table = vec![false; n + 1];
    table[0] = true;
    for i in 1..=n {
        for &a in generators {
            let a = a as usize;
            if a > 0 && a <= i && table[i - a] {
                table[i] = true;
                break;
            }
        }
    }
    table[n]
}

fn gap_list(s: &NumericalSemigroup) -> Vec<u64> {
    (1..=s.frobenius().max(0))
        .filter(|&x| !s.contains(x))
        .map(|x| x as u64)
        .collect()
}

/// Closure under addition of the set whose members up to `bound` are given
/// by `member` (everything above `bound` is a member).
fn is_closed(bound: u64, member: &dyn Fn(u64) -> bool) -> bool {
    let small: Vec<u64> = (1..=bound).filter(|&x| member(x)).collect();
    small.iter().all(|&a| {
        small
            .iter()
            .take_while(|&&b| a + b <= bound)
            .all(|&b| member(a + b))
    })
}

/// All numerical semigroups containing `Δ`, by testing every subset of the
/// gaps of `Δ`. Sorted in canonical order.
pub fn brute_oversemigroups(delta: &NumericalSemigroup) -> Result<Vec<NumericalSemigroup>> {
    brute_oversemigroups_capped(delta, MAX_GENUS)
}

fn brute_oversemigroups_capped(
    delta: &NumericalSemigroup,
    cap: u64,
) -> Result<Vec<NumericalSemigroup>> {
    let gaps = gap_list(delta);
    if gaps.len() as u64 > cap {
        return Err(Error::BoundExceeded(format!(
            "genus {} above {cap}",
            gaps.len()
        )));
    }
    let bound = delta.frobenius().max(0) as u64;
    let mut out = Vec::new();
    for mask in 0u64..(1 << gaps.len()) {
        let member = |x: u64| {
            delta.contains(x as i64)
                || gaps
                    .iter()
                    .position(|&g| g == x)
                    .is_some_and(|i| mask >> i & 1 == 1)
        };
        if is_closed(bound, &member) {
            out.push(NumericalSemigroup::from_membership(bound, member)?);
        }
    }
    out.sort();
    Ok(out)
}

/// All numerical semigroups of genus at most `max_genus`. Their Frobenius
/// numbers are below `2 * max_genus`, so they all contain `{0, 2g, →}`.
pub fn all_semigroups_up_to_genus(max_genus: u64) -> Result<Vec<NumericalSemigroup>> {
    if max_genus == 0 {
        return Ok(vec![NumericalSemigroup::naturals()]);
    }
    if 2 * max_genus - 1 > MAX_GENUS {
        return Err(Error::BoundExceeded(format!("genus {max_genus}")));
    }
    let base = NumericalSemigroup::ordinary(2 * max_genus - 1)?;
    Ok(brute_oversemigroups(&base)?
        .into_iter()
        .filter(|s| gap_list(s).len() as u64 <= max_genus)
        .collect())
}

/// All coe-semigroups with Frobenius number `F`, checking every odd member
/// for its two neighbours on the full membership table.
pub fn brute_coe(frobenius: i64) -> Result<Vec<NumericalSemigroup>> {
    if frobenius <= 0 || frobenius % 2 == 0 {
        return Err(Error::EvenFrobenius(frobenius));
    }
    if frobenius as u64 > MAX_COE_FROBENIUS {
        return Err(Error::BoundExceeded(format!("F = {frobenius}")));
    }
    let base = NumericalSemigroup::ordinary(frobenius as u64)?;
    Ok(brute_oversemigroups_capped(&base, MAX_COE_FROBENIUS)?
        .into_iter()
        .filter(|s| s.frobenius() == frobenius)
        .filter(|s| {
            (1..=frobenius + 2)
                .filter(|x| x % 2 == 1 && s.contains(*x))
                .all(|x| s.contains(x - 1) && s.contains(x + 1))
        })
        .collect())
}

/// Intersection of all members containing `x`, or `None` if there are none.
pub fn brute_closure(members: &[NumericalSemigroup], x: &[u64]) -> Option<NumericalSemigroup> {
    let containing: Vec<&NumericalSemigroup> = members
        .iter()
        .filter(|s| x.iter().all(|&e| s.contains(e as i64)))
        .collect();
    if containing.is_empty() {
        return None;
    }
    let bound = containing
        .iter()
        .map(|s| s.frobenius())
        .max()
        .unwrap()
        .max(0) as u64;
    NumericalSemigroup::from_membership(bound, |v| containing.iter().all(|s| s.contains(v as i64)))
        .ok()
}

fn family_minimum(members: &[NumericalSemigroup]) -> Result<NumericalSemigroup> {
    let min = members
        .iter()
        .find(|m| {
            members
                .iter()
                .all(|s| (0..=s.frobenius()).all(|v| !m.contains(v) || s.contains(v)))
        })
        .ok_or_else(|| Error::NotInFamily("family has no minimum".into()))?;
    Ok(min.clone())
}

fn rank_ground(
    members: &[NumericalSemigroup],
    s: &NumericalSemigroup,
) -> Result<(NumericalSemigroup, Vec<u64>)> {
    if !members.contains(s) {
        return Err(Error::NotInFamily(s.to_string()));
    }
    let min = family_minimum(members)?;
    let ground: Vec<u64> = (1..=min.frobenius().max(0))
        .filter(|&v| s.contains(v) && !min.contains(v))
        .map(|v| v as u64)
        .collect();
    if ground.len() > MAX_RANK_GROUND {
        return Err(Error::BoundExceeded(format!(
            "ground set of {} elements",
            ground.len()
        )));
    }
    Ok((min, ground))
}

fn subset(ground: &[u64], mask: u32) -> Vec<u64> {
    ground
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, &g)| g)
        .collect()
}

fn masks_by_size(n: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks
}

/// The least size of a subset of `(S \ min) ∩ [1, F(min)]` whose closure in
/// the family is `S`.
pub fn brute_rank(members: &[NumericalSemigroup], s: &NumericalSemigroup) -> Result<usize> {
    let (_, ground) = rank_ground(members, s)?;
    for mask in masks_by_size(ground.len()) {
        let x = subset(&ground, mask);
        if brute_closure(members, &x).as_ref() == Some(s) {
            return Ok(x.len());
        }
    }
    Err(Error::NotAnFSet(s.to_string()))
}

/// Every inclusion-minimal F-set whose closure is `S`, in order of size.
pub fn brute_minimal_fsets(
    members: &[NumericalSemigroup],
    s: &NumericalSemigroup,
) -> Result<Vec<Vec<u64>>> {
    let (_, ground) = rank_ground(members, s)?;
    let mut minimal: Vec<u32> = Vec::new();
    for mask in masks_by_size(ground.len()) {
        if minimal.iter().any(|&m| m & !mask == 0) {
            continue;
        }
        if brute_closure(members, &subset(&ground, mask)).as_ref() == Some(s) {
            minimal.push(mask);
        }
    }
    Ok(minimal.into_iter().map(|m| subset(&ground, m)).collect())
}

/// Outcome of one group of oracle comparisons.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub cases: usize,
    pub mismatches: Vec<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the fast paths against the oracles on every `Δ` of genus at most
/// `max_genus` and every odd `F` up to `max_frobenius`.
pub fn verify(max_genus: u64, max_frobenius: u64) -> Result<Vec<Check>> {
    use crate::coe::{coe_closure, coe_is_fset, coe_msg, enumerate_coe, lemma44_test};
    use crate::engine::FSet;
    use crate::theta::{enumerate_theta, theta_closure, theta_msg};

    let universe = all_semigroups_up_to_genus(max_genus)?;
    let mut checks = Vec::new();

    let mut theta = Check {
        name: "theta enumeration",
        cases: 0,
        mismatches: vec![],
    };
    let mut theta_cl = Check {
        name: "theta closure",
        cases: 0,
        mismatches: vec![],
    };
    let mut theta_rank = Check {
        name: "theta rank",
        cases: 0,
        mismatches: vec![],
    };
    for delta in &universe {
        theta.cases += 1;
        let tree = enumerate_theta(delta, None)?;
        let expect = brute_oversemigroups(delta)?;
        if tree.sorted_members() != expect {
            theta.mismatches.push(format!("θ({delta})"));
        }
        let gaps = gap_list(delta);
        for x in gaps
            .iter()
            .map(|&g| vec![g])
            .chain(gaps.windows(2).map(<[u64]>::to_vec))
        {
            theta_cl.cases += 1;
            let fast = theta_closure(delta, &x)?;
            if Some(&fast) != brute_closure(&expect, &x).as_ref()
                || tree.closure(&FSet::from(x.clone())).ok().as_ref() != Some(&fast)
            {
                theta_cl.mismatches.push(format!("θ({delta})[{x:?}]"));
            }
        }
        if gaps.len() <= 6 {
            for s in &expect {
                theta_rank.cases += 1;
                let fast = theta_msg(delta, s)?.len();
                if brute_rank(&expect, s)? != fast || tree.f_rank(s)? != fast {
                    theta_rank
                        .mismatches
                        .push(format!("θ({delta}) rank of {s}"));
                }
            }
        }
    }
    checks.extend([theta, theta_cl, theta_rank]);

    let mut coe = Check {
        name: "coe enumeration",
        cases: 0,
        mismatches: vec![],
    };
    let mut coe_cl = Check {
        name: "coe closure",
        cases: 0,
        mismatches: vec![],
    };
    let mut coe_rank = Check {
        name: "coe rank",
        cases: 0,
        mismatches: vec![],
    };
    for f in (1..=max_frobenius.min(MAX_COE_FROBENIUS) as i64).step_by(2) {
        coe.cases += 1;
        let tree = enumerate_coe(f, None)?;
        let expect = brute_coe(f)?;
        if tree.sorted_members() != expect {
            coe.mismatches.push(format!("C({f})"));
        }
        for x in (1..f as u64).map(|a| vec![a]) {
            if !coe_is_fset(f, &x)? {
                continue;
            }
            coe_cl.cases += 1;
            if Some(coe_closure(f, &x)?) != brute_closure(&expect, &x) {
                coe_cl.mismatches.push(format!("C({f})[{x:?}]"));
            }
        }
        if f <= 11 {
            for s in &expect {
                coe_rank.cases += 1;
                if brute_rank(&expect, s)? != coe_msg(f, s)?.len() {
                    coe_rank.mismatches.push(format!("C({f}) rank of {s}"));
                }
            }
        }
    }
    checks.extend([coe, coe_cl, coe_rank]);

    let mut l44 = Check {
        name: "three-generator sweep",
        cases: 0,
        mismatches: vec![],
    };
    for f in (5..=101u64).step_by(2) {
        for x in (3..=f - 2).step_by(2) {
            l44.cases += 1;
            if lemma44_test(x, f)? == brute_membership(&[x - 1, x, x + 1], f as i64) {
                l44.mismatches.push(format!("x = {x}, F = {f}"));
            }
        }
    }
    checks.push(l44);
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn membership_table() {
        assert!(!brute_membership(&[4, 5, 6], 7));
        assert!(brute_membership(&[4, 5, 6], 0));
        assert!(!brute_membership(&[2, 3], 1));
        assert!((2..200).all(|k| brute_membership(&[2, 3], k)));
        assert!(!brute_membership(&[2, 3], -1));
    }

    #[test]
    fn oversemigroups() {
        assert_eq!(brute_oversemigroups(&ns(&[3, 7, 8])).unwrap().len(), 6);
        assert_eq!(
            brute_oversemigroups(&NumericalSemigroup::naturals()).unwrap(),
            vec![NumericalSemigroup::naturals()]
        );
        let big = NumericalSemigroup::ordinary(17).unwrap();
        assert!(matches!(
            brute_oversemigroups(&big),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn genus_counts() {
        // numbers of numerical semigroups of genus 0..=8
        let counts = [1, 1, 2, 4, 7, 12, 23, 39, 67];
        let all = all_semigroups_up_to_genus(8).unwrap();
        for (g, &c) in counts.iter().enumerate() {
            assert_eq!(all.iter().filter(|s| s.genus() == g as u64).count(), c);
        }
    }

    #[test]
    fn coe_oracle() {
        assert_eq!(brute_coe(7).unwrap().len(), 6);
        assert_eq!(brute_coe(4).unwrap_err(), Error::EvenFrobenius(4));
        assert!(matches!(brute_coe(19), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn rank_oracle() {
        let members = brute_oversemigroups(&ns(&[5, 7])).unwrap();
        assert_eq!(brute_rank(&members, &ns(&[3, 4, 5])).unwrap(), 2);
        assert_eq!(brute_rank(&members, &ns(&[5, 7])).unwrap(), 0);
        assert_eq!(
            brute_minimal_fsets(&members, &ns(&[5, 7])).unwrap(),
            vec![Vec::<u64>::new()]
        );
        assert_eq!(
            brute_minimal_fsets(&members, &ns(&[3, 4, 5])).unwrap(),
            vec![vec![3, 4]]
        );
        assert!(brute_rank(&members, &ns(&[2, 3])).is_ok());
        assert!(matches!(
            brute_rank(&members, &ns(&[3, 4])),
            Err(Error::NotInFamily(_))
        ));
    }
}
