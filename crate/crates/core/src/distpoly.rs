//! Exact factored products `∏ (z − ε q^{t/d})^e`, distance polynomials on
//! adapted classes and folded distance polynomials on twisted classes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::arq::{adapted_class, ArQuiver, DynkinQuiver};
use crate::cartan::{Automorphism, CartanType, FoldKind};
use crate::error::{Error, Result};
use crate::seqorder::gdist_pair;
use crate::weyl::{Class, RootSystem};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// `ε q^{num/den}` with `den > 0` and `gcd(num, den) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QPower {
    eps: i8,
    num: i64,
    den: i64,
}

impl QPower {
    pub fn new(eps: i8, num: i64, den: i64) -> Self {
        assert!(den != 0 && (eps == 1 || eps == -1));
        let s = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        QPower { eps, num: s * num / g, den: s * den / g }
    }

    /// `(−1)^a q^{b/d}` style constructor from a sign exponent.
    pub fn signed(sign_exp: i64, num: i64, den: i64) -> Self {
        Self::new(if sign_exp.rem_euclid(2) == 0 { 1 } else { -1 }, num, den)
    }

    pub fn eps(&self) -> i8 {
        self.eps
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    /// `self / other`.
    pub fn ratio(self, other: QPower) -> Self {
        QPower::new(self.eps * other.eps, self.num * other.den - other.num * self.den, self.den * other.den)
    }
}

impl Ord for QPower {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.num * o.den).cmp(&(o.num * self.den)).then(o.eps.cmp(&self.eps))
    }
}

impl PartialOrd for QPower {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for QPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.eps < 0 { "-" } else { "" };
        match (self.num, self.den) {
            (0, _) => write!(f, "{sign}1"),
            (1, 1) => write!(f, "{sign}q"),
            (n, 1) => write!(f, "{sign}q^{n}"),
            (n, d) => write!(f, "{sign}q^{{{n}/{d}}}"),
        }
    }
}

/// The monic factor `z − root`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QFactor {
    pub root: QPower,
}

impl QFactor {
    /// `z − ε q^{t/d}`.
    pub fn new(eps: i8, t: i64, d: i64) -> Self {
        QFactor { root: QPower::new(eps, t, d) }
    }
}

impl fmt::Display for QFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = QPower { eps: 1, ..self.root };
        let op = if self.root.eps < 0 { '+' } else { '-' };
        write!(f, "(z {op} {r})")
    }
}

/// A multiset of [`QFactor`]s.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QProduct {
    factors: BTreeMap<QFactor, u32>,
}

impl QProduct {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_factors<I: IntoIterator<Item = QFactor>>(it: I) -> Self {
        let mut p = Self::one();
        for f in it {
            p.push(f, 1);
        }
        p
    }

    pub fn push(&mut self, f: QFactor, e: u32) {
        if e > 0 {
            *self.factors.entry(f).or_insert(0) += e;
        }
    }

    pub fn mul(&self, other: &QProduct) -> QProduct {
        let mut p = self.clone();
        for (&f, &e) in &other.factors {
            p.push(f, e);
        }
        p
    }

    /// Factors with exponents, sorted by `(t/d, ε)`.
    pub fn factors(&self) -> impl Iterator<Item = (QFactor, u32)> + '_ {
        self.factors.iter().map(|(&f, &e)| (f, e))
    }

    pub fn degree(&self) -> u32 {
        self.factors.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, f: QFactor) -> u32 {
        self.factors.get(&f).copied().unwrap_or(0)
    }

    /// `P(−z)` made monic again: every root changes sign.
    pub fn substitute_neg(&self) -> QProduct {
        let mut p = Self::one();
        for (&f, &e) in &self.factors {
            p.push(QFactor { root: -f.root }, e);
        }
        p
    }

    /// Factors of `self` missing from `other` and vice versa.
    pub fn difference(&self, other: &QProduct) -> (QProduct, QProduct) {
        let mut a = Self::one();
        let mut b = Self::one();
        for (&f, &e) in &self.factors {
            let o = other.exponent(f);
            if e > o {
                a.push(f, e - o);
            }
        }
        for (&f, &e) in &other.factors {
            let s = self.exponent(f);
            if e > s {
                b.push(f, e - s);
            }
        }
        (a, b)
    }

    /// Inverse of the [`Display`](fmt::Display) rendering.
    pub fn parse(s: &str) -> Result<QProduct> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::one());
        }
        let bad = || Error::Parse(format!("bad product {s:?}"));
        let mut p = Self::one();
        let mut rest = s;
        while !rest.is_empty() {
            let body = rest.strip_prefix("(z ").ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let inner = &body[..close];
            rest = &body[close + 1..];
            let mut e = 1;
            if let Some(r) = rest.strip_prefix('^') {
                let end = r.find('(').unwrap_or(r.len());
                e = r[..end].parse().map_err(|_| bad())?;
                rest = &r[end..];
            }
            let (eps, pw) = if let Some(x) = inner.strip_prefix("- ") {
                (1, x)
            } else if let Some(x) = inner.strip_prefix("+ ") {
                (-1, x)
            } else {
                return Err(bad());
            };
            let (num, den) = if pw == "1" {
                (0, 1)
            } else if pw == "q" {
                (1, 1)
            } else if let Some(x) = pw.strip_prefix("q^{").and_then(|x| x.strip_suffix('}')) {
                let (a, b) = x.split_once('/').ok_or_else(bad)?;
                (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)
            } else if let Some(x) = pw.strip_prefix("q^") {
                (x.parse().map_err(|_| bad())?, 1)
            } else {
                return Err(bad());
            };
            p.push(QFactor::new(eps, num, den), e);
        }
        Ok(p)
    }
}

impl fmt::Display for QProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (x, e) in self.factors() {
            write!(f, "{x}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// `(k̂, l̂, t) ↦ o_t(k̂, l̂)` for one class, keyed with `k̂ ≤ l̂`; every pair in
/// a slot must have the same gdist.
pub fn exponent_table(class: &Class, aut: &Automorphism) -> Result<BTreeMap<(usize, usize, i64), usize>> {
    let q = ArQuiver::from_class(class, aut)?;
    let mut out: BTreeMap<(usize, usize, i64), usize> = BTreeMap::new();
    for x in &q.vertices {
        for y in &q.vertices {
            if !class.prec(x.root, y.root) {
                continue;
            }
            let (k, l) = (x.folded.min(y.folded), x.folded.max(y.folded));
            let t = (x.coord - y.coord).abs();
            let g = gdist_pair(class, x.root, y.root);
            match out.get(&(k, l, t)) {
                Some(&g0) if g0 != g => {
                    return Err(Error::TheoremViolation(format!(
                        "gdist differs within slot ({k},{l},{t}): {g0} vs {g}"
                    )))
                }
                _ => {
                    out.insert((k, l, t), g);
                }
            }
        }
    }
    Ok(out)
}

/// `o_t(k̂, l̂)` for one class (0 when no pair sits at that distance).
pub fn o_exponent(class: &Class, aut: &Automorphism, k: usize, l: usize, t: i64) -> Result<usize> {
    Ok(exponent_table(class, aut)?.get(&(k.min(l), k.max(l), t)).copied().unwrap_or(0))
}

fn assemble(
    table: &BTreeMap<(usize, usize, i64), usize>,
    m: usize,
    factor: impl Fn(usize, usize, i64) -> QFactor,
    exp: impl Fn(usize) -> u32,
) -> BTreeMap<(usize, usize), QProduct> {
    let mut out = BTreeMap::new();
    for k in 1..=m {
        for l in 1..=m {
            let mut p = QProduct::one();
            for (&(a, b, t), &o) in table.range((k.min(l), k.max(l), i64::MIN)..=(k.min(l), k.max(l), i64::MAX)) {
                debug_assert!(a == k.min(l) && b == k.max(l));
                p.push(factor(k, l, t), exp(o));
            }
            out.insert((k, l), p);
        }
    }
    out
}

/// A Dynkin quiver with every arrow `i → j` for `i > j`.
fn reference_quiver(ty: CartanType) -> DynkinQuiver {
    let arrows: Vec<(usize, usize)> = ty.edges().into_iter().map(|(a, b)| (a.max(b), a.min(b))).collect();
    DynkinQuiver::new(ty, &arrows).expect("orientation of the diagram")
}

/// All `D_{k,l}` for an untwisted type, from a quiver and its reverse.
pub fn distance_polynomials(ty: CartanType) -> Result<BTreeMap<(usize, usize), QProduct>> {
    let q = reference_quiver(ty);
    distance_polynomials_from(ty, &q)
}

/// `D_{k,l}` computed from `[Q]` and `[Q^rev]`.
pub fn distance_polynomials_from(ty: CartanType, q: &DynkinQuiver) -> Result<BTreeMap<(usize, usize), QProduct>> {
    let rs = Arc::new(RootSystem::new(ty));
    let id = Automorphism::identity(ty);
    let t1 = exponent_table(&adapted_class(rs.clone(), q), &id)?;
    let t2 = exponent_table(&adapted_class(rs, &q.reverse()), &id)?;
    let mut t = t1.clone();
    for (key, &o) in &t2 {
        let e = t.entry(*key).or_insert(0);
        *e = (*e).max(o);
    }
    Ok(assemble(&t, ty.rank(), |_, _, t| QFactor::new(if t % 2 == 0 { 1 } else { -1 }, t, 1), |o| o as u32))
}

pub fn distance_polynomial(ty: CartanType, k: usize, l: usize) -> Result<QProduct> {
    ty.check_letter(k)?;
    ty.check_letter(l)?;
    Ok(distance_polynomials(ty)?.remove(&(k, l)).expect("all pairs present"))
}

/// All `D̂_{k̂,l̂}` read from one class of a (triply) twisted cluster point.
pub fn folded_distance_polynomials(class: &Class, aut: &Automorphism) -> Result<BTreeMap<(usize, usize), QProduct>> {
    let d = aut.d();
    let table = exponent_table(class, aut)?;
    let bf = matches!(aut.kind(), FoldKind::B | FoldKind::F);
    Ok(assemble(
        &table,
        aut.folded_rank(),
        |k, l, t| {
            let s = if bf { (aut.orbit_label(k) + aut.orbit_label(l)) as i64 } else { t };
            QFactor { root: QPower::signed(s, t, d) }
        },
        |o| (o as i64 + d - 1).div_euclid(d) as u32,
    ))
}

pub fn folded_distance_polynomial(class: &Class, aut: &Automorphism, k: usize, l: usize) -> Result<QProduct> {
    let m = aut.folded_rank();
    if k == 0 || l == 0 || k > m || l > m {
        return Err(Error::IndexOutOfRange(format!("({k},{l}) for folded rank {m}")));
    }
    Ok(folded_distance_polynomials(class, aut)?.remove(&(k, l)).expect("all pairs present"))
}

/// Render a table of products as `k l product` lines.
pub fn render_table(t: &BTreeMap<(usize, usize), QProduct>) -> String {
    let mut s = String::new();
    for ((k, l), p) in t {
        s.push_str(&format!("{k} {l} {p}\n"));
    }
    s
}

impl core::ops::Neg for QPower {
    type Output = QPower;

    fn neg(self) -> QPower {
        QPower { eps: -self.eps, ..self }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twisted::twisted_cluster;
    use alloc::string::ToString;

    #[test]
    fn rendering_and_parsing() {
        let p = QProduct::from_factors([
            QFactor::new(1, 2, 1),
            QFactor::new(-1, 3, 2),
            QFactor::new(1, 2, 1),
            QFactor::new(1, 1, 1),
        ]);
        let s = p.to_string();
        assert_eq!(s, "(z - q)(z + q^{3/2})(z - q^2)^2");
        assert_eq!(QProduct::parse(&s).unwrap(), p);
        assert_eq!(QProduct::parse("1").unwrap(), QProduct::one());
        assert_eq!(QFactor::new(1, 4, 2), QFactor::new(1, 2, 1));
        assert_eq!(p.substitute_neg().substitute_neg(), p);
        assert_eq!(p.substitute_neg().degree(), p.degree());
    }

    #[test]
    fn a3_d11() {
        let d = distance_polynomial(CartanType::a(3), 1, 1).unwrap();
        assert_eq!(d, QProduct::from_factors([QFactor::new(1, 2, 1)]));
    }

    #[test]
    fn untwisted_symmetry_and_independence() {
        for n in 1..=5 {
            let ty = CartanType::a(n);
            let all = distance_polynomials(ty).unwrap();
            for k in 1..=n {
                for l in 1..=n {
                    assert_eq!(all[&(k, l)], all[&(l, k)]);
                    assert_eq!(all[&(k, l)], all[&(ty.star(k), ty.star(l))]);
                }
            }
            if n <= 4 {
                for q in DynkinQuiver::all(ty) {
                    assert_eq!(distance_polynomials_from(ty, &q).unwrap(), all);
                }
            }
        }
    }

    #[test]
    fn folded_constant_on_cluster() {
        for ty in [CartanType::a(3), CartanType::a(5), CartanType::d(4)] {
            let rs = Arc::new(RootSystem::new(ty));
            let aut = Automorphism::standard(ty).unwrap();
            let cl = twisted_cluster(rs, &aut, 100).unwrap();
            let first = folded_distance_polynomials(&cl[0], &aut).unwrap();
            for c in &cl[1..] {
                assert_eq!(folded_distance_polynomials(c, &aut).unwrap(), first);
            }
        }
    }

    #[test]
    fn identity_fold_matches_single_quiver() {
        let ty = CartanType::a(3);
        let rs = Arc::new(RootSystem::new(ty));
        let q = reference_quiver(ty);
        let id = Automorphism::identity(ty);
        let c = adapted_class(rs, &q);
        let t = exponent_table(&c, &id).unwrap();
        assert!(t.values().all(|&o| o <= 1));
        assert_eq!(o_exponent(&c, &id, 1, 1, 100).unwrap(), 0);
    }
}
