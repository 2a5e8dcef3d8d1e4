//! Twisted Dynkin quivers: one stack per orbit, with a chosen top letter,
//! oriented arrows between stacks whose tops are adjacent and plain edges
//! between stacks whose tops are adjacent only after twisting one of them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{class_from_twisted_coxeter, TwistedCoxeter};
use crate::cartan::{Automorphism, FoldKind};
use crate::error::{Error, Result};
use crate::weyl::{Class, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedDynkinQuiver {
    aut: Automorphism,
    /// Top letter of each orbit, indexed by folded index minus one.
    tops: Vec<usize>,
    /// For folded-adjacent orbits `a < b` whose tops are adjacent: `true` when the arrow is `a → b`.
    orient: BTreeMap<(usize, usize), bool>,
}

impl TwistedDynkinQuiver {
    /// `tops` holds one letter per orbit, `arrows` the oriented pairs of tops.
    pub fn new(aut: Automorphism, tops: &[usize], arrows: &[(usize, usize)]) -> Result<Self> {
        if aut.kind() == FoldKind::Identity {
            return Err(Error::NoAutomorphism("twisted Dynkin quivers need a nontrivial automorphism".into()));
        }
        let ty = aut.cartan_type();
        let m = aut.folded_rank();
        let mut t = alloc::vec![0; m];
        for &i in tops {
            ty.check_letter(i)?;
            let o = aut.folded_index(i) - 1;
            if t[o] != 0 {
                return Err(Error::Parse(format!("two tops in the orbit of {i}")));
            }
            t[o] = i;
        }
        if t.contains(&0) {
            return Err(Error::Parse("every orbit needs a top".into()));
        }
        let mut q = TwistedDynkinQuiver { aut, tops: t, orient: BTreeMap::new() };
        for &(s, d) in arrows {
            let (a, b) = (q.aut.folded_index(s), q.aut.folded_index(d));
            if q.tops[a - 1] != s || q.tops[b - 1] != d || !ty.adjacent(s, d) {
                return Err(Error::Parse(format!("no arrow slot between {s} and {d}")));
            }
            if q.orient.insert((a.min(b), a.max(b)), a < b).is_some() {
                return Err(Error::Parse(format!("arrow between {s} and {d} given twice")));
            }
        }
        if q.orient.len() != q.arrow_slots().len() {
            return Err(Error::Parse("some adjacent tops have no arrow".into()));
        }
        Ok(q)
    }

    fn arrow_slots(&self) -> Vec<(usize, usize)> {
        let ty = self.aut.cartan_type();
        let m = self.tops.len();
        let mut out = Vec::new();
        for a in 1..=m {
            for b in a + 1..=m {
                if self.aut.folded_adjacent(a, b) && ty.adjacent(self.tops[a - 1], self.tops[b - 1]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn automorphism(&self) -> &Automorphism {
        &self.aut
    }

    pub fn tops(&self) -> &[usize] {
        &self.tops
    }

    /// Stacks `(i, i^∨, i^{2∨}, …)` in folded-index order.
    pub fn vertices(&self) -> Vec<Vec<usize>> {
        self.tops
            .iter()
            .enumerate()
            .map(|(k, &i)| (0..self.aut.orbits()[k].len()).map(|p| self.aut.power(i, p)).collect())
            .collect()
    }

    /// Arrows as `(source top, target top)`.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        self.orient
            .iter()
            .map(|(&(a, b), &fwd)| {
                let (x, y) = (self.tops[a - 1], self.tops[b - 1]);
                if fwd {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect()
    }

    /// Unoriented edges between tops.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let m = self.tops.len();
        let mut out = Vec::new();
        for a in 1..=m {
            for b in a + 1..=m {
                if self.aut.folded_adjacent(a, b) && !self.orient.contains_key(&(a, b)) {
                    out.push((self.tops[a - 1], self.tops[b - 1]));
                }
            }
        }
        out
    }

    /// `i` is the top of its stack and every arrow at the stack points into it.
    pub fn is_sink(&self, i: usize) -> bool {
        if i == 0 || i > self.aut.cartan_type().rank() {
            return false;
        }
        let a = self.aut.folded_index(i);
        self.tops[a - 1] == i && self.orient.iter().all(|(&(x, y), &fwd)| !(x == a && fwd || y == a && !fwd))
    }

    /// Tops that are sinks, ascending.
    pub fn sinks(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.tops.iter().copied().filter(|&i| self.is_sink(i)).collect();
        s.sort_unstable();
        s
    }

    /// `r_i`: the identity unless `i` is a sink. Otherwise the stack turns
    /// over to top `i^∨` and every arrow at it points outward.
    pub fn reflect(&self, i: usize) -> Self {
        if !self.is_sink(i) {
            return self.clone();
        }
        let a = self.aut.folded_index(i);
        let mut q = self.clone();
        q.tops[a - 1] = self.aut.apply(i);
        q.orient.retain(|&(x, y), _| x != a && y != a);
        for (x, y) in q.arrow_slots() {
            if x == a || y == a {
                q.orient.insert((x, y), x == a);
            }
        }
        q
    }

    /// `φ_{Q∨}∨`: the twisted Coxeter element read off by taking sinks, one per stack.
    pub fn phi(&self) -> Result<TwistedCoxeter> {
        let m = self.tops.len();
        let mut q = self.clone();
        let mut used = alloc::vec![false; m];
        let mut word = Vec::with_capacity(m);
        for _ in 0..m {
            let i = q
                .sinks()
                .into_iter()
                .find(|&i| !used[self.aut.folded_index(i) - 1])
                .ok_or_else(|| Error::TheoremViolation("no sink left among unused stacks".into()))?;
            used[self.aut.folded_index(i) - 1] = true;
            word.push(i);
            q = q.reflect(i);
        }
        TwistedCoxeter::new(self.aut.clone(), &word)
    }

    /// `[Q∨]`, the class of the canonical word of `φ_{Q∨}∨`.
    pub fn class(&self, rs: Arc<RootSystem>) -> Result<Class> {
        class_from_twisted_coxeter(rs, &self.phi()?)
    }
}

/// The twisted Dynkin quiver of a twisted Coxeter element: arrows point from
/// later letters to earlier adjacent ones.
pub fn build_tdq(tc: &TwistedCoxeter) -> Result<TwistedDynkinQuiver> {
    let ty = tc.automorphism().cartan_type();
    let w = tc.word();
    let mut arrows = Vec::new();
    for k1 in 0..w.len() {
        for k2 in k1 + 1..w.len() {
            if ty.adjacent(w[k1], w[k2]) {
                arrows.push((w[k2], w[k1]));
            }
        }
    }
    TwistedDynkinQuiver::new(tc.automorphism().clone(), w, &arrows)
}

pub fn tdq_sinks(q: &TwistedDynkinQuiver) -> Vec<usize> {
    q.sinks()
}

pub fn tdq_reflect(q: &TwistedDynkinQuiver, i: usize) -> TwistedDynkinQuiver {
    q.reflect(i)
}

/// Each letter is a sink of the quiver reflected at the letters before it.
pub fn is_adapted_to_tdq(word: &[usize], q: &TwistedDynkinQuiver) -> bool {
    let mut cur = q.clone();
    for &i in word {
        if !cur.is_sink(i) {
            return false;
        }
        cur = cur.reflect(i);
    }
    true
}

/// Every twisted Dynkin quiver for `aut`, ordered by tops then orientation.
pub fn enumerate_tdq(aut: &Automorphism) -> Result<Vec<TwistedDynkinQuiver>> {
    if aut.kind() == FoldKind::Identity {
        return Err(Error::NoAutomorphism("twisted Dynkin quivers need a nontrivial automorphism".into()));
    }
    let mut tops: Vec<Vec<usize>> = alloc::vec![Vec::new()];
    for o in aut.orbits() {
        tops = tops
            .into_iter()
            .flat_map(|t| {
                o.iter().map(move |&i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for t in tops {
        let base = TwistedDynkinQuiver { aut: aut.clone(), tops: t, orient: BTreeMap::new() };
        let slots = base.arrow_slots();
        for bits in 0u32..1 << slots.len() {
            let mut q = base.clone();
            for (k, &s) in slots.iter().enumerate() {
                q.orient.insert(s, bits >> k & 1 == 1);
            }
            out.push(q);
        }
    }
    Ok(out)
}
