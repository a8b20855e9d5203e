//! Coe-semigroups (numerical semigroups of coated odd elements): every odd
//! member `x` comes with `x - 1` and `x + 1`. For odd `F`, those with
//! Frobenius number `F` form a family `C(F)` with minimum `{0, F+1, →}`.

use crate::apery::AperySet;
use crate::engine::{self, Family, FamilyTree};
use crate::error::{Error, Result};
use crate::semigroup::{submonoid_contains, NumericalSemigroup};

/// Whether every odd member is coated. Checked on odd minimal generators.
pub fn is_coe(s: &NumericalSemigroup) -> bool {
    s.minimal_generators()
        .iter()
        .filter(|&&x| x % 2 == 1)
        .all(|&x| s.contains(x as i64 - 1) && s.contains(x as i64 + 1))
}

/// `C(F)`: coe-semigroups with Frobenius number exactly `F`.
#[derive(Clone, Debug)]
pub struct CoeFamily {
    frobenius: u64,
    minimum: NumericalSemigroup,
}

pub fn coe_family(frobenius: i64) -> Result<CoeFamily> {
    check_odd(frobenius)?;
    Ok(CoeFamily {
        frobenius: frobenius as u64,
        minimum: NumericalSemigroup::ordinary(frobenius as u64)?,
    })
}

fn check_odd(frobenius: i64) -> Result<()> {
    if frobenius <= 0 || frobenius % 2 == 0 {
        return Err(Error::EvenFrobenius(frobenius));
    }
    Ok(())
}

impl CoeFamily {
    pub fn frobenius(&self) -> u64 {
        self.frobenius
    }
}

impl Family for CoeFamily {
    fn minimum(&self) -> &NumericalSemigroup {
        &self.minimum
    }

    fn contains(&self, s: &NumericalSemigroup) -> bool {
        s.frobenius() == self.frobenius as i64 && is_coe(s)
    }

    fn apery_modulus(&self) -> u64 {
        self.frobenius + 1
    }

    /// Same filter as the generic one, but the coe test for `S ∪ {x}` reads
    /// the minimal generators below `F` off the updated Apéry set.
    fn children(&self, s: &NumericalSemigroup, apery: &AperySet) -> Result<Vec<u64>> {
        let f = self.frobenius;
        let mut out = Vec::new();
        for x in apery.special_gaps() {
            // adjoining F itself changes the Frobenius number
            if x == f {
                continue;
            }
            let ap = apery.adjoin_special_gap(x)?;
            let coated = ap
                .minimal_generators_below(f)
                .into_iter()
                .filter(|g| g % 2 == 1)
                .all(|g| {
                    ap.semigroup_contains(g as i64 - 1) && ap.semigroup_contains(g as i64 + 1)
                });
            if !coated {
                continue;
            }
            let t = s.adjoin_unchecked(x);
            if self.mu(&t)? == x {
                out.push(x);
            }
        }
        Ok(out)
    }
}

/// All members of `C(F)`, as a tree rooted at `{0, F+1, →}`.
pub fn enumerate_coe(frobenius: i64, limit: Option<usize>) -> Result<FamilyTree> {
    engine::enumerate(&coe_family(frobenius)?, limit)
}

/// `X` together with both neighbours of each odd element of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoatSet {
    pub base: Vec<u64>,
    pub coated: Vec<u64>,
}

pub fn coat(x: &[u64]) -> Result<CoatSet> {
    if x.contains(&0) {
        return Err(Error::ContainsZero);
    }
    let mut base = x.to_vec();
    base.sort_unstable();
    base.dedup();
    let mut coated = base.clone();
    for &e in &base {
        if e % 2 == 1 {
            coated.push(e - 1);
            coated.push(e + 1);
        }
    }
    coated.retain(|&e| e != 0);
    coated.sort_unstable();
    coated.dedup();
    Ok(CoatSet { base, coated })
}

fn check_range(frobenius: i64, x: &[u64]) -> Result<()> {
    check_odd(frobenius)?;
    if let Some(&e) = x.iter().find(|&&e| e == 0 || e as i64 >= frobenius) {
        return Err(Error::OutOfRange(format!(
            "{e} not in [1, {}]",
            frobenius - 1
        )));
    }
    Ok(())
}

/// Whether `X ⊆ [1, F-1]` is contained in some member of `C(F)`, i.e.
/// `F ∉ ⟨C(X)⟩`.
pub fn coe_is_fset(frobenius: i64, x: &[u64]) -> Result<bool> {
    check_range(frobenius, x)?;
    let c = coat(x)?;
    Ok(!submonoid_contains(&c.coated, frobenius as u64))
}

/// The least member of `C(F)` containing `X`: `⟨C(X)⟩ ∪ {F+1, →}`.
pub fn coe_closure(frobenius: i64, x: &[u64]) -> Result<NumericalSemigroup> {
    if !coe_is_fset(frobenius, x)? {
        let set: Vec<String> = x.iter().map(u64::to_string).collect();
        return Err(Error::NotAnFSet(format!("{{{}}}", set.join(","))));
    }
    NumericalSemigroup::generated_with_tail(&coat(x)?.coated, frobenius as u64)
}

/// The unique minimal generating set of `S` within `C(F)`: the odd minimal
/// generators below `F`, plus the even ones below `F` with no minimal
/// generator as a neighbour.
pub fn coe_msg(frobenius: i64, s: &NumericalSemigroup) -> Result<Vec<u64>> {
    let fam = coe_family(frobenius)?;
    if !fam.contains(s) {
        return Err(Error::NotInFamily(s.to_string()));
    }
    let f = frobenius as u64;
    let msg = s.minimal_generators();
    Ok(msg
        .iter()
        .copied()
        .filter(|&x| x < f)
        .filter(|&x| x % 2 == 1 || !(msg.contains(&(x - 1)) || msg.contains(&(x + 1))))
        .collect())
}

/// `F ∉ ⟨x-1, x, x+1⟩`, decided by `2⌊F/(x-1)⌋ < F mod (x-1)`.
pub fn lemma44_test(x: u64, frobenius: u64) -> Result<bool> {
    if frobenius.is_multiple_of(2) {
        return Err(Error::EvenFrobenius(frobenius as i64));
    }
    if x.is_multiple_of(2) || x < 3 || x + 2 > frobenius {
        return Err(Error::OutOfRange(format!(
            "x = {x} must be odd in [3, {}]",
            frobenius as i64 - 2
        )));
    }
    let d = x - 1;
    Ok(2 * (frobenius / d) < frobenius % d)
}

/// Members of `C(F)` of rank one, in canonical order.
pub fn coe_rank1(frobenius: i64) -> Result<Vec<NumericalSemigroup>> {
    check_odd(frobenius)?;
    let f = frobenius as u64;
    let mut out = Vec::new();
    for x in (2..f).step_by(2) {
        out.push(NumericalSemigroup::generated_with_tail(&[x], f)?);
    }
    for x in (3..f.saturating_sub(1)).step_by(2) {
        if lemma44_test(x, f)? {
            out.push(NumericalSemigroup::generated_with_tail(
                &[x - 1, x, x + 1],
                f,
            )?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}
