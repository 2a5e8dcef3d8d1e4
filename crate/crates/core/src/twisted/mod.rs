//! Twisted Coxeter elements, twisted adapted classes and their cluster
//! points, the projections between types, surgeries, folded AR-quivers,
//! swings and the twisted additive property.

pub mod label;
pub mod tdq;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::arq::{additive_check, gamma_q, Additive, ArQuiver, DynkinQuiver, PathDir, Shape};
use crate::cartan::{Automorphism, CartanType, Family, FoldKind};
use crate::error::{Error, Result};
use crate::weyl::{cluster_closure, d_epsilon, weyl_element, Class, Root, RootSystem};

pub use label::label_from_shape;
pub use tdq::{build_tdq, enumerate_tdq, is_adapted_to_tdq, tdq_reflect, tdq_sinks, TwistedDynkinQuiver};

/// One letter from each orbit of the automorphism, read as `s_{i_1} ⋯ s_{i_k} ∨`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedCoxeter {
    aut: Automorphism,
    word: Vec<usize>,
}

impl TwistedCoxeter {
    pub fn new(aut: Automorphism, word: &[usize]) -> Result<Self> {
        let ty = aut.cartan_type();
        let mut hit = vec![false; aut.folded_rank() + 1];
        for &i in word {
            ty.check_letter(i)?;
            let o = aut.folded_index(i);
            if hit[o] {
                return Err(Error::Parse(format!("two letters from the orbit of {i}")));
            }
            hit[o] = true;
        }
        if word.len() != aut.folded_rank() {
            return Err(Error::Parse("a twisted Coxeter word has one letter per orbit".into()));
        }
        Ok(TwistedCoxeter { aut, word: word.to_vec() })
    }

    pub fn automorphism(&self) -> &Automorphism {
        &self.aut
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `∏_{k=0}^{N/ℓ-1} (i_1 ⋯ i_ℓ)^{k∨}`.
    pub fn canonical_word(&self) -> Vec<usize> {
        let ty = self.aut.cartan_type();
        let l = self.word.len();
        let reps = ty.num_positive_roots() / l;
        let mut w = Vec::with_capacity(ty.num_positive_roots());
        for k in 0..reps {
            for &i in &self.word {
                w.push(self.aut.power(i, k));
            }
        }
        w
    }

    /// Images of simple roots under the Weyl group part.
    pub fn element(&self) -> Vec<Root> {
        weyl_element(self.aut.cartan_type(), &self.word)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// All twisted Coxeter elements, one word per distinct group element.
pub fn enumerate_twisted_coxeter(aut: &Automorphism) -> Result<Vec<TwistedCoxeter>> {
    if aut.kind() == FoldKind::Identity {
        return Err(Error::NoAutomorphism("twisted Coxeter elements need a nontrivial automorphism".into()));
    }
    let orbits = aut.orbits().to_vec();
    let m = orbits.len();
    let mut choices: Vec<Vec<usize>> = vec![Vec::new()];
    for o in &orbits {
        let mut next = Vec::new();
        for c in &choices {
            for &i in o {
                let mut c2 = c.clone();
                c2.push(i);
                next.push(c2);
            }
        }
        choices = next;
    }
    let mut seen: BTreeMap<Vec<Root>, TwistedCoxeter> = BTreeMap::new();
    for order in permutations(m) {
        for c in &choices {
            let w: Vec<usize> = order.iter().map(|&k| c[k]).collect();
            let tc = TwistedCoxeter { aut: aut.clone(), word: w };
            seen.entry(tc.element()).or_insert(tc);
        }
    }
    let mut out: Vec<TwistedCoxeter> = seen.into_values().collect();
    out.sort_by(|a, b| a.word.cmp(&b.word));
    Ok(out)
}

/// Triply twisted Coxeter elements of `D_4` for both `∨` and `∨²`.
pub fn enumerate_triply_twisted_coxeter() -> Vec<TwistedCoxeter> {
    let mut out = Vec::new();
    for k in [FoldKind::G, FoldKind::GSquared] {
        let aut = Automorphism::new(CartanType::d(4), k).expect("D4 triality");
        out.extend(enumerate_twisted_coxeter(&aut).expect("nontrivial"));
    }
    out
}

/// The twisted Coxeter element giving `i₀^♮` (or `i₀^†`, `i₀^‡` for the triality folds).
pub fn canonical_twisted_coxeter(aut: &Automorphism) -> Result<TwistedCoxeter> {
    let ty = aut.cartan_type();
    let w: Vec<usize> = match aut.kind() {
        FoldKind::B => (1..=ty.rank().div_ceil(2)).collect(),
        FoldKind::C => (1..ty.rank()).collect(),
        FoldKind::F => vec![1, 2, 6, 3],
        FoldKind::G | FoldKind::GSquared => vec![2, 1],
        FoldKind::Identity => return Err(Error::NoAutomorphism("identity".into())),
    };
    TwistedCoxeter::new(aut.clone(), &w)
}

pub fn class_from_twisted_coxeter(rs: Arc<RootSystem>, tc: &TwistedCoxeter) -> Result<Class> {
    Class::new(rs, &tc.canonical_word()).map_err(|e| Error::TheoremViolation(format!("canonical word: {e}")))
}

/// Closure of the canonical class, sorted by key.
pub fn twisted_cluster(rs: Arc<RootSystem>, aut: &Automorphism, max_size: usize) -> Result<Vec<Class>> {
    let tc = canonical_twisted_coxeter(aut)?;
    let c = class_from_twisted_coxeter(rs, &tc)?;
    cluster_closure(&c, max_size)
}

fn half_rank_a(ty: CartanType) -> Result<usize> {
    if ty.family() != Family::A || ty.rank().is_multiple_of(2) || ty.rank() < 3 {
        return Err(Error::InvalidType(format!("expected A_(2n+1), got {}", ty.name())));
    }
    Ok((ty.rank() - 1) / 2)
}

/// `P`: erase `n+1` and shift larger letters down, from `A_{2n+1}` to `A_{2n}`.
pub fn projection_p(class: &Class, small: Arc<RootSystem>) -> Result<Class> {
    let n = half_rank_a(class.cartan_type())?;
    if small.cartan_type() != CartanType::a(2 * n) {
        return Err(Error::InvalidType(small.cartan_type().name()));
    }
    let w: Vec<usize> =
        class.word().iter().filter(|&&i| i != n + 1).map(|&i| if i > n + 1 { i - 1 } else { i }).collect();
    Class::new(small, &w).map_err(|e| Error::NotTwisted(format!("{e}")))
}

/// Which of the two preimages of an adapted class of `A_{2n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    /// `n+1` is a source (can end a representative).
    Less,
    /// `n+1` is a sink (can start a representative).
    Greater,
}

/// `R`: from a word of `A_{2n}` to a word of `A_{2n+1}`. Letters `≥ n+1`
/// shift up, `n+1` is inserted between consecutive `n` and `n+2`, and one more
/// `n+1` goes at the end (`Less`) or the beginning (`Greater`).
pub fn lift_r(word: &[usize], n: usize, side: Side) -> Vec<usize> {
    let mut out = Vec::with_capacity(word.len() + 2 * n + 1);
    if side == Side::Greater {
        out.push(n + 1);
    }
    let mut last: Option<usize> = None;
    for &i in word {
        let j = if i > n { i + 1 } else { i };
        if j == n || j == n + 2 {
            if let Some(l) = last {
                if l != j {
                    out.push(n + 1);
                }
            }
            last = Some(j);
        }
        out.push(j);
    }
    if side == Side::Less {
        out.push(n + 1);
    }
    out
}

/// `𝔭`: the Coxeter word of `A_n` attached to a twisted Coxeter word of `D_{n+1}`.
pub fn p_d(tc: &TwistedCoxeter) -> Result<Vec<usize>> {
    let ty = tc.automorphism().cartan_type();
    if tc.automorphism().kind() != FoldKind::C {
        return Err(Error::InvalidType(format!("expected a twisted Coxeter element of D, got {}", ty.name())));
    }
    let n = ty.rank() - 1;
    Ok(tc.word().iter().map(|&i| if i == n + 1 { n } else { i }).collect())
}

/// Folded AR-quiver: coordinates in units of `1/d` with the arrow lengths of `aut`.
pub fn fold(class: &Class, aut: &Automorphism) -> Result<ArQuiver> {
    ArQuiver::from_class(class, aut)
}

/// Reflection on a folded AR-quiver: new vertex at `(î, p - h^∨)`.
pub fn folded_reflect(q: &ArQuiver, i: usize) -> Result<ArQuiver> {
    q.reflect(i)
}

/// `Γ_Q` of `A_{2n}` to the shape of `Υ` for `[Q^<]` / `[Q^>]` of `A_{2n+1}`,
/// in the coordinates of the fold to `B_{n+1}`.
pub fn surgery_a(gamma: &ArQuiver, side: Side) -> Result<Shape> {
    let ty = gamma.cartan_type();
    if ty.family() != Family::A || ty.rank() % 2 == 1 {
        return Err(Error::InvalidType(format!("expected A_(2n), got {}", ty.name())));
    }
    let n = ty.rank() / 2;
    let big = Automorphism::standard(CartanType::a(2 * n + 1))?;
    let mut residues = Vec::new();
    let mut coords = Vec::new();
    let mut induced = Vec::new();
    let mut idx = BTreeMap::new();
    for v in &gamma.vertices {
        idx.insert(v.root, residues.len());
        residues.push(if v.residue > n { v.residue + 1 } else { v.residue });
        coords.push(2 * v.coord);
        induced.push(true);
    }
    let mut arrows = Vec::new();
    for &(s, t) in &gamma.arrows {
        let (a, b) = (idx[&s], idx[&t]);
        let split = (residues[a] == n && residues[b] == n + 2) || (residues[a] == n + 2 && residues[b] == n);
        if split {
            let m = residues.len();
            residues.push(n + 1);
            coords.push((coords[a] + coords[b]) / 2);
            induced.push(false);
            arrows.push((a, m));
            arrows.push((m, b));
        } else {
            arrows.push((a, b));
        }
    }
    // The zigzag formed by rows n, n+1, n+2; the extra star sits at one end.
    let mut zig: Vec<usize> = (0..residues.len()).filter(|&k| (n..=n + 2).contains(&residues[k])).collect();
    zig.sort_by_key(|&k| coords[k]);
    let m = residues.len();
    match side {
        Side::Less => {
            let first = zig[0];
            residues.push(n + 1);
            coords.push(coords[first] - 1);
            arrows.push((m, first));
        }
        Side::Greater => {
            let last = *zig.last().expect("nonempty");
            residues.push(n + 1);
            coords.push(coords[last] + 1);
            arrows.push((last, m));
        }
    }
    induced.push(false);
    let rows = residues.iter().map(|&r| big.folded_index(r)).collect();
    Ok(Shape { residues, rows, coords, arrows, induced })
}

/// Juxtapose `Γ_{Q*}` and `Γ_Q` of `A_n`, join the boundaries, and split the
/// last row into residues `n`, `n+1` alternately; `last_is_top` puts `n+1`
/// at the rightmost vertex of that row. Coordinates are those of the fold to `C_n`.
pub fn surgery_d(rs: Arc<RootSystem>, q: &DynkinQuiver, last_is_top: bool) -> Result<Shape> {
    let ty = rs.cartan_type();
    if ty.family() != Family::A || ty.rank() < 2 {
        return Err(Error::InvalidType(format!("expected A_n with n >= 2, got {}", ty.name())));
    }
    let n = ty.rank();
    let left = gamma_q(rs.clone(), &q.star());
    let right = gamma_q(rs, q);
    let rmax =
        |g: &ArQuiver, i: usize| g.vertices.iter().filter(|v| v.residue == i).map(|v| v.coord).max().expect("row");
    let rmin =
        |g: &ArQuiver, i: usize| g.vertices.iter().filter(|v| v.residue == i).map(|v| v.coord).min().expect("row");
    let shift = rmax(&left, 1) + 2 - rmin(&right, 1);
    for i in 2..=n {
        if rmax(&left, i) + 2 - rmin(&right, i) != shift {
            return Err(Error::TheoremViolation("boundaries of Γ_Q* and Γ_Q do not match".into()));
        }
    }
    let mut residues = Vec::new();
    let mut coords = Vec::new();
    let mut arrows = Vec::new();
    for (g, off) in [(&left, 0), (&right, shift)] {
        let base = residues.len();
        let mut idx = BTreeMap::new();
        for (k, v) in g.vertices.iter().enumerate() {
            idx.insert(v.root, base + k);
            residues.push(v.residue);
            coords.push(v.coord + off);
        }
        for &(s, t) in &g.arrows {
            arrows.push((idx[&s], idx[&t]));
        }
    }
    let nl = left.len();
    for a in 0..nl {
        for b in nl..residues.len() {
            if ty.adjacent(residues[a], residues[b]) && coords[b] == coords[a] + 1 {
                arrows.push((a, b));
            }
        }
    }
    let mut last: Vec<usize> = (0..residues.len()).filter(|&k| residues[k] == n).collect();
    last.sort_by_key(|&k| core::cmp::Reverse(coords[k]));
    for (j, &k) in last.iter().enumerate() {
        let top = (j % 2 == 0) == last_is_top;
        if top {
            residues[k] = n + 1;
        }
    }
    let rows = residues.iter().map(|&r| r.min(n)).collect();
    let len = residues.len();
    Ok(Shape { residues, rows, coords, arrows, induced: vec![true; len] })
}

/// A swing of a folded `D_{n+1}` quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Swing {
    /// `N` when generated by an N-path at `(n̂, p)` and the S-path at `(n̂, p-1)`.
    pub kind: PathDir,
    pub n_path: Vec<usize>,
    pub s_path: Vec<usize>,
    /// The `r` with `ε_r`-coefficient `+1` on every vertex.
    pub component: Option<usize>,
}

impl Swing {
    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.n_path.iter().chain(&self.s_path).copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// The N-swing (`kind = N`) or S-swing associated to `alpha`, when the
/// relevant sectional path reaches the last folded row.
pub fn swing_of(q: &ArQuiver, alpha: usize, kind: PathDir) -> Result<Option<Swing>> {
    if q.kind != FoldKind::C {
        return Err(Error::InvalidType("swings are defined for folded D quivers".into()));
    }
    let nhat = q.automorphism().folded_rank();
    let paths = q.sectional_paths(true)?;
    let through = |dir: PathDir, root: usize| {
        paths.iter().find(|p| p.dir == dir && p.vertices.contains(&root)).map(|p| p.vertices.clone())
    };
    let own = through(kind, alpha).ok_or_else(|| Error::TheoremViolation("vertex off every sectional path".into()))?;
    let Some(bottom) = own.iter().copied().find(|&v| q.vertex(v).folded == nhat) else {
        return Ok(None);
    };
    let p = q.vertex(bottom).coord;
    let (other_dir, other_coord) = match kind {
        PathDir::N => (PathDir::S, p - q.d),
        PathDir::S => (PathDir::N, p + q.d),
    };
    let Some(other) = q.at_folded(nhat, other_coord) else {
        return Ok(None);
    };
    let other_path = through(other_dir, other).expect("every vertex lies on a sectional path");
    Ok(Some(match kind {
        PathDir::N => make_swing(q, kind, own, other_path),
        PathDir::S => make_swing(q, kind, other_path, own),
    }))
}

/// All swings of a folded quiver of type `D_{n+1}` (fold `C`). An N-swing
/// and an S-swing with the same vertex set are reported once.
pub fn swings(q: &ArQuiver) -> Result<Vec<Swing>> {
    if q.kind != FoldKind::C {
        return Err(Error::InvalidType("swings are defined for folded D quivers".into()));
    }
    let nhat = q.automorphism().folded_rank();
    let mut bottom: Vec<(i64, usize)> =
        q.vertices.iter().filter(|v| v.folded == nhat).map(|v| (v.coord, v.root)).collect();
    bottom.sort_unstable();
    let mut uniq: Vec<Swing> = Vec::new();
    for &(_, root) in &bottom {
        for kind in [PathDir::N, PathDir::S] {
            if let Some(s) = swing_of(q, root, kind)? {
                if !uniq.iter().any(|u| u.vertices() == s.vertices()) {
                    uniq.push(s);
                }
            }
        }
    }
    Ok(uniq)
}

fn make_swing(q: &ArQuiver, kind: PathDir, n_path: Vec<usize>, s_path: Vec<usize>) -> Swing {
    let m = q.rs.rank();
    let mut common: Vec<bool> = vec![true; m];
    for &v in n_path.iter().chain(&s_path) {
        let e = d_epsilon(q.rs.root(v));
        for (r, c) in common.iter_mut().enumerate() {
            *c &= e[r] == 1;
        }
    }
    let component = common.iter().position(|&c| c).map(|r| r + 1);
    Swing { kind, n_path, s_path, component }
}

/// Twisted additive property at `α`; see [`additive_check`].
pub fn twisted_additive_check(q: &ArQuiver, alpha: usize) -> Additive {
    additive_check(q, alpha)
}
