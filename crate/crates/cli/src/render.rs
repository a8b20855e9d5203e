//! JSON documents, DOT export and plain-text labels.

use semicov::{FamilyTree, NumericalSemigroup};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupDoc {
    pub msg: Vec<u64>,
    pub frobenius: i64,
    pub genus: u64,
    pub gaps: Vec<u64>,
}

impl From<&NumericalSemigroup> for SemigroupDoc {
    fn from(s: &NumericalSemigroup) -> Self {
        Self {
            msg: s.minimal_generators().to_vec(),
            frobenius: s.frobenius(),
            genus: s.genus(),
            gaps: s.gaps(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    pub minimum: SemigroupDoc,
    pub members: Vec<SemigroupDoc>,
    /// `[child, parent]` indices into `members`.
    pub edges: Vec<[usize; 2]>,
}

impl From<&FamilyTree> for FamilyDoc {
    fn from(tree: &FamilyTree) -> Self {
        Self {
            minimum: tree.minimum().into(),
            members: tree.members().map(SemigroupDoc::from).collect(),
            edges: tree.edges().into_iter().map(|(c, p)| [c, p]).collect(),
        }
    }
}

pub fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Short label: the minimal generators up to `F`, followed by `∪{F+1,→}`
/// when they do not generate the whole semigroup on their own.
pub fn label(s: &NumericalSemigroup) -> String {
    let f = s.frobenius();
    if s.is_naturals() {
        return "{0,→}".to_string();
    }
    let msg = s.minimal_generators();
    let low: Vec<u64> = msg.iter().copied().filter(|&g| g as i64 <= f).collect();
    if low.len() == msg.len() {
        join(&low)
    } else if low.is_empty() {
        format!("{{0,{},→}}", f + 1)
    } else {
        format!("{}∪{{{},→}}", join(&low), f + 1)
    }
}

pub fn dot(tree: &FamilyTree, name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph \"{name}\" {{\n"));
    out.push_str("  node [shape=box];\n");
    for (i, s) in tree.members().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{}\"];\n", label(s)));
    }
    for (c, p) in tree.edges() {
        out.push_str(&format!("  n{c} -> n{p};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        let ns = |g: &[u64]| NumericalSemigroup::from_generators(g).unwrap();
        assert_eq!(label(&ns(&[4, 5, 6])), "4,5,6");
        assert_eq!(label(&ns(&[3, 7, 8])), "3∪{6,→}");
        assert_eq!(label(&NumericalSemigroup::naturals()), "{0,→}");
        assert_eq!(label(&NumericalSemigroup::ordinary(7).unwrap()), "{0,8,→}");
        let s = NumericalSemigroup::generated_with_tail(&[4], 7).unwrap();
        assert_eq!(label(&s), "4∪{8,→}");
    }
}
