//! Words avoiding a set of forbidden factors, via an Aho-Corasick automaton.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use super::RewriteSystem;
use crate::freealg::{Letter, Word};

/// Deterministic automaton whose live states are exactly the prefixes
/// containing no forbidden factor.
#[derive(Clone, Debug)]
pub struct WordAutomaton {
    alphabet: usize,
    /// `delta[s * alphabet + l]`.
    delta: Vec<usize>,
    dead: Vec<bool>,
}

impl WordAutomaton {
    pub fn new(alphabet: usize, patterns: &[Word]) -> Self {
        let mut children: Vec<Vec<Option<usize>>> = vec![vec![None; alphabet]];
        let mut dead = vec![false];
        for pat in patterns {
            let mut s = 0;
            for &l in pat {
                s = match children[s][l as usize] {
                    Some(t) => t,
                    None => {
                        children.push(vec![None; alphabet]);
                        dead.push(false);
                        let t = children.len() - 1;
                        children[s][l as usize] = Some(t);
                        t
                    }
                };
            }
            dead[s] = true;
        }
        let n = children.len();
        let mut delta = vec![0usize; n * alphabet];
        let mut fail = vec![0usize; n];
        let mut queue = VecDeque::new();
        for l in 0..alphabet {
            match children[0][l] {
                Some(t) => {
                    delta[l] = t;
                    queue.push_back(t);
                }
                None => delta[l] = 0,
            }
        }
        while let Some(s) = queue.pop_front() {
            if dead[fail[s]] {
                dead[s] = true;
            }
            for l in 0..alphabet {
                match children[s][l] {
                    Some(t) => {
                        fail[t] = delta[fail[s] * alphabet + l];
                        delta[s * alphabet + l] = t;
                        queue.push_back(t);
                    }
                    None => delta[s * alphabet + l] = delta[fail[s] * alphabet + l],
                }
            }
        }
        WordAutomaton { alphabet, delta, dead }
    }

    pub fn start_is_dead(&self) -> bool {
        self.dead[0]
    }

    fn step(&self, s: usize, l: usize) -> usize {
        self.delta[s * self.alphabet + l]
    }

    pub fn accepts(&self, w: &[Letter]) -> bool {
        let mut s = 0;
        if self.dead[0] {
            return false;
        }
        for &l in w {
            s = self.step(s, l as usize);
            if self.dead[s] {
                return false;
            }
        }
        true
    }

    /// A live cycle reachable from the start, as a pumpable word `u v` with `v` repeatable.
    pub fn find_cycle(&self) -> Option<(Word, Word)> {
        if self.dead[0] {
            return None;
        }
        let n = self.dead.len();
        // 0 = unvisited, 1 = on stack, 2 = done.
        let mut color = vec![0u8; n];
        let mut path: Vec<(usize, Letter)> = Vec::new();
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        color[0] = 1;
        while let Some(&mut (s, ref mut next)) = stack.last_mut() {
            if *next == self.alphabet {
                color[s] = 2;
                stack.pop();
                path.pop();
                continue;
            }
            let l = *next;
            *next += 1;
            let t = self.step(s, l);
            if self.dead[t] {
                continue;
            }
            match color[t] {
                0 => {
                    color[t] = 1;
                    path.push((s, l as Letter));
                    stack.push((t, 0));
                }
                1 => {
                    path.push((s, l as Letter));
                    let start = path.iter().position(|&(st, _)| st == t).unwrap();
                    let u: Word = path[..start].iter().map(|&(_, l)| l).collect();
                    let v: Word = path[start..].iter().map(|&(_, l)| l).collect();
                    return Some((u, v));
                }
                _ => {}
            }
        }
        None
    }

    /// Number of accepted words, or `None` if infinite.
    pub fn count(&self) -> Option<u64> {
        if self.dead[0] {
            return Some(0);
        }
        if self.find_cycle().is_some() {
            return None;
        }
        let n = self.dead.len();
        let mut memo: Vec<Option<u64>> = vec![None; n];
        fn go(a: &WordAutomaton, s: usize, memo: &mut Vec<Option<u64>>) -> u64 {
            if let Some(c) = memo[s] {
                return c;
            }
            let mut c = 1u64;
            for l in 0..a.alphabet {
                let t = a.step(s, l);
                if !a.dead[t] {
                    c = c.saturating_add(go(a, t, memo));
                }
            }
            memo[s] = Some(c);
            c
        }
        Some(go(self, 0, &mut memo))
    }

    /// Accepted words of length at most `max_len`, in length-lex order of letters.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        if self.dead[0] {
            return out;
        }
        let mut layer: Vec<(usize, Word)> = vec![(0, Word::new())];
        for len in 0..=max_len {
            let mut next = Vec::new();
            for (s, w) in &layer {
                out.push(w.clone());
                if len == max_len {
                    continue;
                }
                for l in 0..self.alphabet {
                    let t = self.step(*s, l);
                    if !self.dead[t] {
                        let mut v = w.clone();
                        v.push(l as Letter);
                        next.push((t, v));
                    }
                }
            }
            layer = next;
        }
        out
    }
}

/// Outcome of enumerating irreducible words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalBasis {
    /// Irreducible words sorted ascending in the system's monomial order.
    Finite(Vec<Word>),
    /// The words `prefix cycle^n` are all irreducible.
    Infinite { prefix: Word, cycle: Word },
}

impl NormalBasis {
    pub fn dim(&self) -> Option<usize> {
        match self {
            NormalBasis::Finite(w) => Some(w.len()),
            NormalBasis::Infinite { .. } => None,
        }
    }
}

impl RewriteSystem {
    pub fn automaton(&self) -> WordAutomaton {
        let pats: Vec<Word> = self.rules().iter().map(|r| r.lhs.clone()).collect();
        WordAutomaton::new(self.gens().len(), &pats)
    }

    /// Irreducible words; enumerated only when their number is at most `limit`.
    pub fn normal_words(&self, limit: usize) -> Result<NormalBasis, u64> {
        let a = self.automaton();
        if let Some((prefix, cycle)) = a.find_cycle() {
            return Ok(NormalBasis::Infinite { prefix, cycle });
        }
        let n = a.count().unwrap_or(u64::MAX);
        if n > limit as u64 {
            return Err(n);
        }
        let mut words = Vec::with_capacity(n as usize);
        let mut stack: Vec<(usize, Word)> = if a.start_is_dead() { Vec::new() } else { vec![(0, Word::new())] };
        while let Some((s, w)) = stack.pop() {
            for l in 0..a.alphabet {
                let t = a.step(s, l);
                if !a.dead[t] {
                    let mut v = w.clone();
                    v.push(l as Letter);
                    stack.push((t, v));
                }
            }
            words.push(w);
        }
        words.sort_by(|x, y| self.order().cmp(x, y));
        Ok(NormalBasis::Finite(words))
    }

    /// Number of irreducible words, or `None` if infinite.
    pub fn normal_count(&self) -> Option<u64> {
        self.automaton().count()
    }

    /// Irreducible word counts by weight, for a finite basis.
    pub fn hilbert_series(&self, limit: usize) -> Option<BTreeMap<u64, usize>> {
        match self.normal_words(limit).ok()? {
            NormalBasis::Finite(ws) => {
                let mut m = BTreeMap::new();
                for w in &ws {
                    *m.entry(self.gens().weight(w)).or_insert(0) += 1;
                }
                Some(m)
            }
            NormalBasis::Infinite { .. } => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_words_avoiding_factors() {
        // Alphabet {0, 1}, forbidding 00, 11 and 010: words 1, 0, 01, 10, 101 and the empty word.
        let a = WordAutomaton::new(2, &[vec![0, 0], vec![1, 1], vec![0, 1, 0]]);
        assert_eq!(a.count(), Some(6));
        assert!(a.accepts(&[1, 0, 1]));
        assert!(!a.accepts(&[1, 0, 1, 0]));
    }

    #[test]
    fn detects_infinite_languages() {
        let a = WordAutomaton::new(2, &[vec![0, 0], vec![1, 1]]);
        assert_eq!(a.count(), None);
        let (u, v) = a.find_cycle().unwrap();
        let mut w = u.clone();
        for _ in 0..4 {
            w.extend_from_slice(&v);
        }
        assert!(a.accepts(&w));
    }

    #[test]
    fn empty_pattern_kills_everything() {
        let a = WordAutomaton::new(2, &[vec![]]);
        assert_eq!(a.count(), Some(0));
    }

    #[test]
    fn brute_force_agreement() {
        let pats = [vec![0u8, 1, 0], vec![2, 2], vec![1, 1, 1], vec![2, 0], vec![0, 0], vec![1, 2]];
        let a = WordAutomaton::new(3, &pats);
        let mut brute = Vec::new();
        let mut layer = vec![Word::new()];
        for _ in 0..=6 {
            let mut next = Vec::new();
            for w in layer {
                if pats.iter().all(|p| !super::super::contains_factor(&w, p)) {
                    for l in 0..3u8 {
                        let mut v = w.clone();
                        v.push(l);
                        next.push(v);
                    }
                    brute.push(w);
                }
            }
            layer = next;
        }
        let mut ours = a.words_up_to(6);
        ours.sort();
        brute.sort();
        assert_eq!(ours, brute);
    }
}
