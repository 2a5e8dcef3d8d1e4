//! Sequences of positive roots and the order `≺ᵇ` of a commutation class,
//! with generalized distance, socle, radius and minimal pairs.
//!
//! `m ≺ᵇ m'` is decided without enumerating representatives: with
//! `D = {β : m_β ≠ m'_β}`, every `≺`-minimal and every `≺`-maximal element of
//! `D` must have `m_β < m'_β`. [`Oracle`] checks the definition literally.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::arq::ArQuiver;
use crate::error::{Error, Result};
use crate::weyl::{Class, Mask, Root, RootSystem};

/// Multiplicities indexed by root id.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootSequence {
    pub mult: Vec<u32>,
}

impl RootSequence {
    pub fn zero(n: usize) -> Self {
        RootSequence { mult: vec![0; n] }
    }

    pub fn from_roots(n: usize, ids: &[usize]) -> Self {
        let mut s = Self::zero(n);
        for &i in ids {
            s.mult[i] += 1;
        }
        s
    }

    pub fn single(n: usize, g: usize) -> Self {
        Self::from_roots(n, &[g])
    }

    pub fn pair(n: usize, a: usize, b: usize) -> Self {
        Self::from_roots(n, &[a, b])
    }

    /// `|m|`.
    pub fn size(&self) -> u32 {
        self.mult.iter().sum()
    }

    pub fn is_pair(&self) -> bool {
        self.size() == 2 && self.mult.iter().all(|&x| x <= 1)
    }

    /// Root ids with multiplicity, ascending.
    pub fn roots(&self) -> Vec<usize> {
        let mut v = Vec::new();
        for (i, &k) in self.mult.iter().enumerate() {
            for _ in 0..k {
                v.push(i);
            }
        }
        v
    }

    pub fn support(&self) -> Mask {
        self.mult.iter().enumerate().filter(|(_, &k)| k > 0).fold(0, |m, (i, _)| m | 1u128 << i)
    }

    pub fn weight(&self, rs: &RootSystem) -> Root {
        let mut w = vec![0; rs.rank()];
        for (i, &k) in self.mult.iter().enumerate() {
            for (x, c) in w.iter_mut().zip(rs.root(i)) {
                *x += k as i32 * c;
            }
        }
        w
    }
}

fn bits(m: Mask) -> impl Iterator<Item = usize> {
    (0..128).filter(move |&i| m >> i & 1 == 1)
}

/// `m ≺ᵇ m'` for the class.
pub fn prec_b(class: &Class, m: &RootSequence, m2: &RootSequence) -> bool {
    let rs = class.root_system();
    if m == m2 || m.weight(rs) != m2.weight(rs) {
        return false;
    }
    let d: Mask = (0..m.mult.len()).filter(|&i| m.mult[i] != m2.mult[i]).fold(0, |a, i| a | 1u128 << i);
    bits(d).all(|b| {
        let extremal = class.below(b) & d == 0 || class.above(b) & d == 0;
        !extremal || m.mult[b] < m2.mult[b]
    })
}

/// Brute force over every representative of the class.
pub struct Oracle {
    rs_len: usize,
    weights: Vec<Root>,
    orders: Vec<Vec<usize>>,
}

impl Oracle {
    pub const MAX_ROOTS: usize = 12;

    pub fn new(class: &Class) -> Result<Self> {
        let n = class.len();
        if n > Self::MAX_ROOTS {
            return Err(Error::LimitExceeded(Self::MAX_ROOTS));
        }
        let mut orders = Vec::new();
        let mut cur = Vec::with_capacity(n);
        extensions(class, 0, &mut cur, &mut orders);
        // position of each root id in each extension
        let orders = orders
            .into_iter()
            .map(|ext| {
                let mut pos = vec![0; n];
                for (k, &id) in ext.iter().enumerate() {
                    pos[id] = k;
                }
                let mut by_pos = vec![0; n];
                for id in 0..n {
                    by_pos[pos[id]] = id;
                }
                by_pos
            })
            .collect();
        let rs = class.root_system();
        Ok(Oracle { rs_len: n, weights: (0..n).map(|i| rs.root(i).clone()).collect(), orders })
    }

    pub fn num_extensions(&self) -> usize {
        self.orders.len()
    }

    fn weight(&self, m: &RootSequence) -> Root {
        let mut w = vec![0; self.weights[0].len()];
        for i in 0..self.rs_len {
            for (x, c) in w.iter_mut().zip(&self.weights[i]) {
                *x += m.mult[i] as i32 * c;
            }
        }
        w
    }

    /// `<ᵇ` for every representative, with equal weights.
    pub fn prec_b(&self, m: &RootSequence, m2: &RootSequence) -> bool {
        if self.weight(m) != self.weight(m2) {
            return false;
        }
        self.orders.iter().all(|ord| {
            let first = ord.iter().find(|&&i| m.mult[i] != m2.mult[i]);
            let last = ord.iter().rev().find(|&&i| m.mult[i] != m2.mult[i]);
            match (first, last) {
                (Some(&j), Some(&k)) => m.mult[j] < m2.mult[j] && m.mult[k] < m2.mult[k],
                _ => false,
            }
        })
    }
}

fn extensions(class: &Class, taken: Mask, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let n = class.len();
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    for id in 0..n {
        if taken >> id & 1 == 0 && class.below(id) & !taken == 0 {
            cur.push(id);
            extensions(class, taken | 1u128 << id, cur, out);
            cur.pop();
        }
    }
}

/// One-shot literal check; see [`Oracle`] for repeated use.
pub fn prec_b_oracle(class: &Class, m: &RootSequence, m2: &RootSequence) -> Result<bool> {
    Ok(Oracle::new(class)?.prec_b(m, m2))
}

/// All sequences over `candidates` with the given weight and at most `max_size` roots.
pub fn sequences_of_weight(rs: &RootSystem, weight: &[i32], candidates: &[usize], max_size: u32) -> Vec<RootSequence> {
    let mut cands = candidates.to_vec();
    cands.sort_by_key(|&i| (core::cmp::Reverse(rs.height(i)), i));
    let mut out = Vec::new();
    let mut cur = RootSequence::zero(rs.len());
    let mut rem = weight.to_vec();
    seq_rec(rs, &cands, 0, &mut rem, &mut cur, max_size, &mut out);
    out.sort();
    out
}

fn seq_rec(
    rs: &RootSystem,
    cands: &[usize],
    k: usize,
    rem: &mut Vec<i32>,
    cur: &mut RootSequence,
    budget: u32,
    out: &mut Vec<RootSequence>,
) {
    if rem.iter().all(|&x| x == 0) {
        out.push(cur.clone());
        return;
    }
    if k == cands.len() || budget == 0 {
        return;
    }
    let r = rs.root(cands[k]);
    // take cands[k] as many times as fits, then move on
    let mut times = 0;
    loop {
        seq_rec(rs, cands, k + 1, rem, cur, budget - times, out);
        if times == budget || rem.iter().zip(r).any(|(&x, &c)| x < c) {
            break;
        }
        for (x, &c) in rem.iter_mut().zip(r) {
            *x -= c;
        }
        cur.mult[cands[k]] += 1;
        times += 1;
    }
    for (x, &c) in rem.iter_mut().zip(r) {
        *x += c * times as i32;
    }
    cur.mult[cands[k]] -= times;
}

/// Everything `≺ᵇ m` together with `m` itself (last).
fn down_set(class: &Class, m: &RootSequence) -> Vec<RootSequence> {
    let rs = class.root_system();
    let supp = m.support();
    // anything below m lives on supp(m) and roots strictly between two of its members
    let mut hull = supp;
    for a in bits(supp) {
        for b in bits(supp) {
            hull |= class.above(a) & class.below(b);
        }
    }
    let cands: Vec<usize> = bits(hull).collect();
    let bound = m.weight(rs).iter().sum::<i32>().max(0) as u32;
    let mut out: Vec<RootSequence> =
        sequences_of_weight(rs, &m.weight(rs), &cands, bound).into_iter().filter(|x| prec_b(class, x, m)).collect();
    out.push(m.clone());
    out
}

/// Longest-chain heights within a down set (last entry is the top).
fn heights(class: &Class, set: &[RootSequence]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..set.len()).collect();
    // x ≺ᵇ y implies |x| < |y| is false in general, so sort by a linear extension computed on the fly
    let n = set.len();
    let mut below: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && prec_b(class, &set[j], &set[i]) {
                below[i].push(j);
            }
        }
    }
    order.sort_by_key(|&i| below[i].len());
    let mut h = vec![0usize; n];
    for &i in &order {
        h[i] = below[i].iter().map(|&j| h[j] + 1).max().unwrap_or(0);
    }
    h
}

/// Generalized distance of `m`.
pub fn gdist(class: &Class, m: &RootSequence) -> usize {
    let set = down_set(class, m);
    *heights(class, &set).last().expect("nonempty")
}

/// [`gdist`] with a bound; exceeding it is a theorem violation.
pub fn gdist_bounded(class: &Class, m: &RootSequence, bound: usize) -> Result<usize> {
    let g = gdist(class, m);
    if g > bound {
        return Err(Error::TheoremViolation(alloc::format!("gdist {g} exceeds {bound}")));
    }
    Ok(g)
}

pub fn gdist_pair(class: &Class, a: usize, b: usize) -> usize {
    gdist(class, &RootSequence::pair(class.len(), a, b))
}

/// Simple sequences `⪯ m`.
pub fn simples_below(class: &Class, m: &RootSequence) -> Vec<RootSequence> {
    let set = down_set(class, m);
    let h = heights(class, &set);
    set.into_iter().zip(h).filter(|(_, h)| *h == 0).map(|(s, _)| s).collect()
}

/// The unique simple sequence below `p`.
pub fn socle(class: &Class, p: &RootSequence) -> Result<RootSequence> {
    let mut s = simples_below(class, p);
    if s.len() != 1 {
        return Err(Error::NonUniqueSocle);
    }
    Ok(s.pop().expect("one"))
}

/// Pairs `(α, β)` with `α + β = γ` and `α < β` by id.
pub fn pairs_of_weight(rs: &RootSystem, g: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..rs.len() {
        for b in a + 1..rs.len() {
            if rs.add(a, b) == Some(g) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Max gdist over pairs above `(γ)`.
pub fn radius(class: &Class, g: usize) -> Result<usize> {
    let rs = class.root_system();
    if rs.is_simple(g) {
        return Err(Error::NotSimple);
    }
    let n = class.len();
    let top = RootSequence::single(n, g);
    Ok(pairs_of_weight(rs, g)
        .into_iter()
        .map(|(a, b)| RootSequence::pair(n, a, b))
        .filter(|p| prec_b(class, &top, p))
        .map(|p| gdist(class, &p))
        .max()
        .unwrap_or(0))
}

/// What lies strictly below a comparable pair `(α, β)` in type D.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DCase {
    /// `α+β = η+ξ = γ+δ`: two pairs in a chain (I-1).
    TwoPairs,
    /// `α+β = η+ξ = γ`: a pair above a root (I-2).
    PairThenRoot,
    /// `α+β = η+ξ` or `γ+δ` (I-3, II-1).
    OnePair,
    /// `α+β = η` or `γ` (I-6, II-2).
    OneRoot,
    /// Nothing below (I-4, I-5, I-7, I-8, II-3).
    Empty,
}

impl DCase {
    pub fn gdist(self) -> usize {
        match self {
            DCase::TwoPairs | DCase::PairThenRoot => 2,
            DCase::OnePair | DCase::OneRoot => 1,
            DCase::Empty => 0,
        }
    }
}

/// Classify the down set of `(α, β)`. Fails unless it is a chain of
/// sequences with at most two roots, as the type-D case table requires.
pub fn d_case(class: &Class, a: usize, b: usize) -> Result<DCase> {
    let m = RootSequence::pair(class.len(), a, b);
    let mut below = down_set(class, &m);
    below.pop();
    if below.iter().any(|x| x.size() > 2) {
        return Err(Error::TheoremViolation(alloc::format!("sequence with more than two roots below ({a},{b})")));
    }
    for x in &below {
        for y in &below {
            if x != y && !prec_b(class, x, y) && !prec_b(class, y, x) {
                return Err(Error::TheoremViolation(alloc::format!("down set of ({a},{b}) is not a chain")));
            }
        }
    }
    below.sort_by_key(|x| core::cmp::Reverse(x.size()));
    let sizes: Vec<usize> = below.iter().map(|x| x.size() as usize).collect();
    Ok(match sizes.as_slice() {
        [] => DCase::Empty,
        [1] => DCase::OneRoot,
        [2] => DCase::OnePair,
        [2, 1] => DCase::PairThenRoot,
        [2, 2] => DCase::TwoPairs,
        _ => return Err(Error::TheoremViolation(alloc::format!("unexpected down set below ({a},{b})"))),
    })
}

/// Pairs covering `(γ)`, as `(α, β)` with `α ≺ β`.
pub fn minimal_pairs(class: &Class, g: usize) -> Vec<(usize, usize)> {
    let rs = class.root_system();
    let n = class.len();
    let s = RootSequence::single(n, g);
    let mut out = Vec::new();
    for (a, b) in pairs_of_weight(rs, g) {
        let p = RootSequence::pair(n, a, b);
        if !prec_b(class, &s, &p) {
            continue;
        }
        let between = down_set(class, &p);
        if between[..between.len() - 1].iter().all(|x| !prec_b(class, &s, x)) {
            out.push(if class.prec(a, b) { (a, b) } else { (b, a) });
        }
    }
    out.sort_unstable();
    out
}

/// Comparable pairs whose folded coordinates are `{(k̂, a), (l̂, b)}` with
/// `|a − b| = t` (numerators over `d`), as `(α, β)` with `α ≺ β`.
pub fn pairs_at(class: &Class, q: &ArQuiver, k: usize, l: usize, t: i64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let vs = &q.vertices;
    for x in vs {
        for y in vs {
            if x.root >= y.root || (x.coord - y.coord).abs() != t {
                continue;
            }
            let hit = (x.folded == k && y.folded == l) || (x.folded == l && y.folded == k);
            if hit && class.comparable(x.root, y.root) {
                out.push(if class.prec(x.root, y.root) { (x.root, y.root) } else { (y.root, x.root) });
            }
        }
    }
    out.sort_unstable();
    out
}

/// gdist of every comparable pair, keyed `(α, β)` with `α ≺ β`.
pub fn all_pair_gdists(class: &Class) -> BTreeMap<(usize, usize), usize> {
    let n = class.len();
    let mut out = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            if class.prec(a, b) {
                out.insert((a, b), gdist_pair(class, a, b));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arq::{adapted_class, DynkinQuiver};
    use crate::cartan::{Automorphism, CartanType};
    use crate::twisted::twisted_cluster;
    use alloc::sync::Arc;

    fn a2() -> Class {
        Class::from_word(CartanType::a(2), &[1, 2, 1]).unwrap()
    }

    #[test]
    fn basic_order() {
        let c = a2();
        let rs = c.root_system().clone();
        let a1 = rs.id(&[1, 0]).unwrap();
        let a2 = rs.id(&[0, 1]).unwrap();
        let a12 = rs.id(&[1, 1]).unwrap();
        let s = RootSequence::single(3, a12);
        let p = RootSequence::pair(3, a1, a2);
        assert!(prec_b(&c, &s, &p));
        assert!(!prec_b(&c, &p, &s));
        assert!(!prec_b(&c, &s, &s));
        assert!(!prec_b(&c, &s, &RootSequence::single(3, a1)));
        assert_eq!(gdist(&c, &p), 1);
        assert_eq!(gdist(&c, &s), 0);
        assert_eq!(socle(&c, &p).unwrap(), s);
        assert_eq!(minimal_pairs(&c, a12).len(), 1);
        assert_eq!(radius(&c, a12).unwrap(), 1);
        assert!(matches!(radius(&c, a1), Err(Error::NotSimple)));
        assert!(minimal_pairs(&c, a1).is_empty());
    }

    #[test]
    fn weight_enumeration() {
        let rs = RootSystem::new(CartanType::a(3));
        let all: Vec<usize> = (0..rs.len()).collect();
        // partitions of α1+α2+α3 into positive roots
        let s = sequences_of_weight(&rs, &[1, 1, 1], &all, 3);
        assert_eq!(s.len(), 4);
        let s2 = sequences_of_weight(&rs, &[1, 2, 1], &all, 4);
        assert!(s2.iter().all(|m| m.weight(&rs) == [1, 2, 1]));
    }

    fn check_against_oracle(c: &Class) {
        let rs = c.root_system();
        let n = c.len();
        let oracle = Oracle::new(c).unwrap();
        let mut by_weight: BTreeMap<Root, Vec<RootSequence>> = BTreeMap::new();
        let all: Vec<usize> = (0..n).collect();
        let mut stack = vec![RootSequence::zero(n)];
        for _ in 0..3 {
            let mut next = Vec::new();
            for s in &stack {
                let start = s.roots().last().copied().unwrap_or(0);
                for &i in &all[start..] {
                    let mut t = s.clone();
                    t.mult[i] += 1;
                    by_weight.entry(t.weight(rs)).or_default().push(t.clone());
                    next.push(t);
                }
            }
            stack = next;
        }
        for seqs in by_weight.values() {
            for x in seqs {
                for y in seqs {
                    assert_eq!(prec_b(c, x, y), oracle.prec_b(x, y), "{:?} {:?} {:?}", c.word(), x, y);
                }
            }
        }
    }

    #[test]
    fn agrees_with_oracle_a3() {
        let rs = Arc::new(RootSystem::new(CartanType::a(3)));
        for q in DynkinQuiver::all(CartanType::a(3)) {
            check_against_oracle(&adapted_class(rs.clone(), &q));
        }
        let aut = Automorphism::standard(CartanType::a(3)).unwrap();
        for c in twisted_cluster(rs, &aut, 100).unwrap() {
            check_against_oracle(&c);
        }
    }

    #[test]
    fn pair_gdist_bounded_in_twisted_a5() {
        let rs = Arc::new(RootSystem::new(CartanType::a(5)));
        let aut = Automorphism::standard(CartanType::a(5)).unwrap();
        for c in twisted_cluster(rs, &aut, 100).unwrap() {
            for (_, g) in all_pair_gdists(&c) {
                assert!(g <= 2);
            }
        }
    }

    #[test]
    fn d_case_table_and_radius() {
        use crate::arq::ArQuiver;
        use crate::twisted::label::{d_regions, DRegion};
        use alloc::collections::BTreeSet;
        for m in [4, 5] {
            let ty = CartanType::d(m);
            let rs = Arc::new(RootSystem::new(ty));
            let aut = Automorphism::standard(ty).unwrap();
            let mut seen = BTreeSet::new();
            for c in twisted_cluster(rs.clone(), &aut, 1000).unwrap() {
                for a in 0..rs.len() {
                    for b in 0..rs.len() {
                        if c.prec(a, b) {
                            let k = d_case(&c, a, b).unwrap();
                            assert_eq!(k.gdist(), gdist_pair(&c, a, b));
                            seen.insert(k);
                        }
                    }
                }
                let q = ArQuiver::from_class(&c, &aut).unwrap();
                let reg = d_regions(ty, &q.shape(true)).unwrap();
                for (v, r) in q.vertices.iter().zip(reg) {
                    if !rs.is_simple(v.root) {
                        let want = if r == DRegion::Center { 2 } else { 1 };
                        assert_eq!(radius(&c, v.root).unwrap(), want);
                    }
                }
            }
            assert_eq!(seen.len(), 5);
        }
    }
}
