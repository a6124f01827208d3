use alloc::vec::Vec;

use super::{contains_factor, RewriteSystem};
use crate::freealg::{NcPoly, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AmbiguityKind {
    Overlap,
    Inclusion,
}

/// A word admitting two different first rewriting steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub word: Word,
    /// Rule indices `(i, j)`. For overlaps `lhs_i = A B` and `lhs_j = B C`
    /// with `word = A B C`; for inclusions `lhs_i = A lhs_j C`.
    pub rules: (usize, usize),
    /// Length of `A`.
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbiguityReport {
    pub ambiguity: Ambiguity,
    /// Normal form of the difference of the two one-step reductions.
    pub obstruction: NcPoly,
}

impl AmbiguityReport {
    pub fn resolvable(&self) -> bool {
        self.obstruction.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub ambiguities: Vec<AmbiguityReport>,
}

impl ConfluenceReport {
    pub fn confluent(&self) -> bool {
        self.ambiguities.iter().all(|a| a.resolvable())
    }

    pub fn obstructions(&self) -> impl Iterator<Item = &AmbiguityReport> {
        self.ambiguities.iter().filter(|a| !a.resolvable())
    }
}

impl RewriteSystem {
    /// Every overlap (including self-overlaps) and inclusion among rule heads.
    pub fn ambiguities(&self) -> Vec<Ambiguity> {
        let rules = self.rules();
        let mut out = Vec::new();
        for (i, ri) in rules.iter().enumerate() {
            for (j, rj) in rules.iter().enumerate() {
                let (a, b) = (&ri.lhs, &rj.lhs);
                for k in 1..a.len().min(b.len()) {
                    if a[a.len() - k..] == b[..k] {
                        let mut word = a.clone();
                        word.extend_from_slice(&b[k..]);
                        out.push(Ambiguity {
                            kind: AmbiguityKind::Overlap,
                            word,
                            rules: (i, j),
                            offset: a.len() - k,
                        });
                    }
                }
                if i != j && b.len() <= a.len() && contains_factor(a, b) && !b.is_empty() {
                    for off in 0..=a.len() - b.len() {
                        if a[off..off + b.len()] == b[..] {
                            out.push(Ambiguity {
                                kind: AmbiguityKind::Inclusion,
                                word: a.clone(),
                                rules: (i, j),
                                offset: off,
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// The two one-step reductions of an ambiguity, before normalisation.
    pub fn ambiguity_branches(&self, amb: &Ambiguity) -> (NcPoly, NcPoly) {
        let ctx = self.ctx();
        let one = crate::field::Fq::ONE;
        let (ri, rj) = (&self.rules()[amb.rules.0], &self.rules()[amb.rules.1]);
        match amb.kind {
            AmbiguityKind::Overlap => {
                let c = &amb.word[ri.lhs.len()..];
                let a = &amb.word[..amb.offset];
                (ri.rhs.sandwich(ctx, &[], c, one), rj.rhs.sandwich(ctx, a, &[], one))
            }
            AmbiguityKind::Inclusion => {
                let a = &amb.word[..amb.offset];
                let c = &amb.word[amb.offset + rj.lhs.len()..];
                (ri.rhs.clone(), rj.rhs.sandwich(ctx, a, c, one))
            }
        }
    }

    pub fn resolve(&self, amb: &Ambiguity) -> AmbiguityReport {
        let (f1, f2) = self.ambiguity_branches(amb);
        let obstruction = self.reduce(&NcPoly::diff(self.ctx(), &f1, &f2));
        AmbiguityReport { ambiguity: amb.clone(), obstruction }
    }

    /// Diamond Lemma check: the system is confluent iff every ambiguity resolves.
    pub fn check_confluence(&self) -> ConfluenceReport {
        let ambiguities = self.ambiguities().iter().map(|a| self.resolve(a)).collect();
        ConfluenceReport { ambiguities }
    }
}
