//! Dynkin quivers, adapted classes, AR-quivers with coordinates, sectional
//! paths and the reflection algorithm on coordinates.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::cartan::{Automorphism, CartanType, FoldKind};
use crate::error::{Error, Result};
use crate::weyl::{reflect, simple_root, Class, Root, RootSystem};

/// Orientation of every edge of a Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DynkinQuiver {
    ty: CartanType,
    arrows: BTreeSet<(usize, usize)>,
}

impl DynkinQuiver {
    /// `arrows` lists `(src, dst)`; every edge must be oriented exactly once.
    pub fn new(ty: CartanType, arrows: &[(usize, usize)]) -> Result<Self> {
        let set: BTreeSet<(usize, usize)> = arrows.iter().copied().collect();
        for &(a, b) in &set {
            if !ty.adjacent(a, b) {
                return Err(Error::Parse(format!("{a}->{b} is not an edge of {}", ty.name())));
            }
        }
        for (a, b) in ty.edges() {
            if set.contains(&(a, b)) == set.contains(&(b, a)) {
                return Err(Error::Parse(format!("edge {a}-{b} must be oriented once")));
            }
        }
        Ok(DynkinQuiver { ty, arrows: set })
    }

    /// Orientation from a bitmask over [`CartanType::edges`]: bit set means `i → j` for `i < j`.
    pub fn from_bits(ty: CartanType, bits: u64) -> Self {
        let arrows = ty
            .edges()
            .into_iter()
            .enumerate()
            .map(|(k, (a, b))| if bits >> k & 1 == 1 { (a, b) } else { (b, a) })
            .collect();
        DynkinQuiver { ty, arrows }
    }

    /// All `2^{|edges|}` orientations.
    pub fn all(ty: CartanType) -> Vec<Self> {
        let e = ty.edges().len();
        (0..1u64 << e).map(|b| Self::from_bits(ty, b)).collect()
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn arrows(&self) -> Vec<(usize, usize)> {
        self.arrows.iter().copied().collect()
    }

    pub fn has_arrow(&self, a: usize, b: usize) -> bool {
        self.arrows.contains(&(a, b))
    }

    /// Vertices with every incident arrow pointing in.
    pub fn sinks(&self) -> Vec<usize> {
        (1..=self.ty.rank()).filter(|&i| self.arrows.iter().all(|&(a, _)| a != i)).collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        (1..=self.ty.rank()).filter(|&i| self.arrows.iter().all(|&(_, b)| b != i)).collect()
    }

    /// Reverse all arrows at `i`.
    pub fn reflect(&self, i: usize) -> Self {
        let arrows = self.arrows.iter().map(|&(a, b)| if a == i || b == i { (b, a) } else { (a, b) }).collect();
        DynkinQuiver { ty: self.ty, arrows }
    }

    pub fn reverse(&self) -> Self {
        DynkinQuiver { ty: self.ty, arrows: self.arrows.iter().map(|&(a, b)| (b, a)).collect() }
    }

    /// Image under the involution `*`.
    pub fn star(&self) -> Self {
        let t = self.ty;
        DynkinQuiver { ty: t, arrows: self.arrows.iter().map(|&(a, b)| (t.star(a), t.star(b))).collect() }
    }

    /// Height function with `ξ(j) = ξ(i) + 1` for every arrow `i → j`, maximum 0.
    pub fn height(&self) -> Vec<i64> {
        let n = self.ty.rank();
        let mut xi = vec![i64::MIN; n + 1];
        xi[1] = 0;
        let mut queue = VecDeque::from([1usize]);
        while let Some(i) = queue.pop_front() {
            for j in self.ty.neighbors(i) {
                if xi[j] == i64::MIN {
                    xi[j] = if self.has_arrow(i, j) { xi[i] + 1 } else { xi[i] - 1 };
                    queue.push_back(j);
                }
            }
        }
        let m = xi[1..].iter().copied().max().unwrap_or(0);
        for x in xi.iter_mut().skip(1) {
            *x -= m;
        }
        xi[0] = 0;
        xi
    }

    /// The Coxeter element read off by peeling sinks once each.
    pub fn coxeter_word(&self) -> Vec<usize> {
        let mut q = self.clone();
        let mut w = Vec::new();
        let mut used = vec![false; self.ty.rank() + 1];
        while w.len() < self.ty.rank() {
            let i = q.sinks().into_iter().find(|&i| !used[i]).expect("an unused sink exists");
            used[i] = true;
            w.push(i);
            q = q.reflect(i);
        }
        w
    }

    /// Quiver whose Coxeter element is the given word (one letter per vertex):
    /// earlier letters are sinks relative to later adjacent letters.
    pub fn from_coxeter_word(ty: CartanType, w: &[usize]) -> Result<Self> {
        let mut pos = vec![usize::MAX; ty.rank() + 1];
        for (k, &i) in w.iter().enumerate() {
            ty.check_letter(i)?;
            pos[i] = k;
        }
        if w.len() != ty.rank() || pos[1..].contains(&usize::MAX) {
            return Err(Error::Parse("a Coxeter word uses every letter once".into()));
        }
        let arrows: Vec<(usize, usize)> =
            ty.edges().into_iter().map(|(a, b)| if pos[a] < pos[b] { (b, a) } else { (a, b) }).collect();
        Self::new(ty, &arrows)
    }
}

/// A reduced word for `w₀` adapted to `q`: each letter is a sink of the quiver
/// reflected at the previous letters.
pub fn adapted_word(q: &DynkinQuiver) -> Vec<usize> {
    let ty = q.cartan_type();
    let n = ty.num_positive_roots();
    let mut cur = q.clone();
    let mut w: Vec<usize> = Vec::with_capacity(n);
    while w.len() < n {
        let mut picked = None;
        for i in cur.sinks() {
            let mut v = simple_root(ty, i);
            for &j in w.iter().rev() {
                reflect(ty, j, &mut v);
            }
            if v.iter().all(|&c| c >= 0) {
                picked = Some(i);
                break;
            }
        }
        let i = picked.expect("adapted continuation exists");
        w.push(i);
        cur = cur.reflect(i);
    }
    w
}

pub fn adapted_class(rs: Arc<RootSystem>, q: &DynkinQuiver) -> Class {
    Class::new(rs, &adapted_word(q)).expect("adapted words are reduced words of w0")
}

/// Whether `w` is adapted to `q`.
pub fn is_adapted(q: &DynkinQuiver, w: &[usize]) -> bool {
    let mut cur = q.clone();
    for &i in w {
        if !cur.sinks().contains(&i) {
            return false;
        }
        cur = cur.reflect(i);
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ArVertex {
    pub root: usize,
    pub residue: usize,
    /// Folded residue (orbit index); equals `residue` for the identity.
    pub folded: usize,
    /// Coordinate numerator over `d`.
    pub coord: i64,
}

/// An AR-quiver with coordinates. Arrows go from larger to smaller convex
/// order, i.e. towards larger coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArQuiver {
    pub rs: Arc<RootSystem>,
    pub kind: FoldKind,
    pub d: i64,
    /// Sorted by `(residue, coord)`.
    pub vertices: Vec<ArVertex>,
    /// `(src, dst)` root ids, sorted.
    pub arrows: Vec<(usize, usize)>,
}

impl ArQuiver {
    /// Coordinates propagated along the arrows of Υ with the lengths of `aut`,
    /// anchored so that the smallest coordinate is `1/d`.
    pub fn from_class(class: &Class, aut: &Automorphism) -> Result<Self> {
        let rs = class.root_system().clone();
        if aut.cartan_type() != rs.cartan_type() {
            return Err(Error::InvalidType(format!("{} vs {}", aut.cartan_type().name(), rs.cartan_type().name())));
        }
        let n = class.len();
        let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
        for &(s, t) in class.arrows() {
            let l = aut.arrow_length(class.residue(s), class.residue(t));
            adj[s].push((t, l));
            adj[t].push((s, -l));
        }
        let mut coord = vec![i64::MIN; n];
        coord[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for &(u, l) in &adj[v] {
                let c = coord[v] + l;
                if coord[u] == i64::MIN {
                    coord[u] = c;
                    queue.push_back(u);
                } else if coord[u] != c {
                    return Err(Error::CoordinateClash);
                }
            }
        }
        if coord.contains(&i64::MIN) {
            return Err(Error::TheoremViolation("Υ is disconnected".into()));
        }
        let m = coord.iter().copied().min().unwrap_or(0);
        let mut vertices: Vec<ArVertex> = (0..n)
            .map(|id| ArVertex {
                root: id,
                residue: class.residue(id),
                folded: aut.folded_index(class.residue(id)),
                coord: coord[id] - m + 1,
            })
            .collect();
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert((v.folded, v.coord)) {
                return Err(Error::CoordinateClash);
            }
        }
        vertices.sort_by_key(|v| (v.residue, v.coord));
        Ok(ArQuiver { rs, kind: aut.kind(), d: aut.d(), vertices, arrows: class.arrows().to_vec() })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.rs.cartan_type()
    }

    pub fn automorphism(&self) -> Automorphism {
        Automorphism::new(self.cartan_type(), self.kind).expect("stored kind is valid")
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, root: usize) -> &ArVertex {
        self.vertices.iter().find(|v| v.root == root).expect("root present")
    }

    /// Root id at folded position `(hat, coord)`.
    pub fn at_folded(&self, hat: usize, coord: i64) -> Option<usize> {
        self.vertices.iter().find(|v| v.folded == hat && v.coord == coord).map(|v| v.root)
    }

    pub fn at(&self, residue: usize, coord: i64) -> Option<usize> {
        self.vertices.iter().find(|v| v.residue == residue && v.coord == coord).map(|v| v.root)
    }

    pub fn coord_map(&self) -> BTreeMap<usize, (usize, usize, i64)> {
        self.vertices.iter().map(|v| (v.root, (v.residue, v.folded, v.coord))).collect()
    }

    /// Same quiver translated so the minimum coordinate is `1`.
    pub fn normalized(&self) -> Self {
        let m = self.vertices.iter().map(|v| v.coord).min().unwrap_or(1);
        let mut q = self.clone();
        for v in &mut q.vertices {
            v.coord -= m - 1;
        }
        q
    }

    /// Reflection at the sink `α_i` on coordinates: remove `(i, p)`, add
    /// `(i*, p - h^∨)` with arrows of the right lengths, relabel by `s_i`.
    pub fn reflect(&self, i: usize) -> Result<Self> {
        let ty = self.cartan_type();
        ty.check_letter(i)?;
        let aut = self.automorphism();
        let si = self.rs.simple_id(i);
        if self.arrows.iter().any(|&(s, _)| s == si) {
            return Err(Error::NotSink(i));
        }
        let old = self.vertex(si).clone();
        let istar = ty.star(i);
        let new_coord = old.coord - aut.dual_coxeter() * self.d;
        let relabel = |id: usize| -> usize {
            if id == si {
                return si;
            }
            let mut r: Root = self.rs.root(id).clone();
            reflect(ty, i, &mut r);
            self.rs.id(&r).expect("s_i permutes Φ⁺ minus α_i")
        };
        let mut vertices: Vec<ArVertex> = Vec::with_capacity(self.len());
        for v in &self.vertices {
            if v.root == si {
                continue;
            }
            vertices.push(ArVertex { root: relabel(v.root), ..v.clone() });
        }
        let mut arrows: Vec<(usize, usize)> =
            self.arrows.iter().filter(|&&(s, t)| s != si && t != si).map(|&(s, t)| (relabel(s), relabel(t))).collect();
        for v in &self.vertices {
            if v.root != si
                && ty.adjacent(v.residue, istar)
                && v.coord == new_coord + aut.arrow_length(istar, v.residue)
            {
                arrows.push((si, relabel(v.root)));
            }
        }
        vertices.push(ArVertex { root: si, residue: istar, folded: aut.folded_index(istar), coord: new_coord });
        vertices.sort_by_key(|v| (v.residue, v.coord));
        arrows.sort_unstable();
        Ok(ArQuiver { rs: self.rs.clone(), kind: self.kind, d: self.d, vertices, arrows })
    }

    /// Maximal sectional paths. Rows are folded residues when `folded`,
    /// residues otherwise.
    pub fn sectional_paths(&self, folded: bool) -> Result<Vec<SectionalPath>> {
        let row = |id: usize| {
            let v = self.vertex(id);
            if folded {
                v.folded
            } else {
                v.residue
            }
        };
        let mut next: [BTreeMap<usize, usize>; 2] = [BTreeMap::new(), BTreeMap::new()];
        let mut prev: [BTreeMap<usize, usize>; 2] = [BTreeMap::new(), BTreeMap::new()];
        for &(s, t) in &self.arrows {
            let dir = if row(t) < row(s) {
                0
            } else if row(t) > row(s) {
                1
            } else {
                continue;
            };
            if next[dir].insert(s, t).is_some() || prev[dir].insert(t, s).is_some() {
                return Err(Error::TheoremViolation("two sectional arrows in one direction".into()));
            }
        }
        let mut out = Vec::new();
        for (dir, tag) in [(0, PathDir::N), (1, PathDir::S)] {
            for v in &self.vertices {
                if prev[dir].contains_key(&v.root) {
                    continue;
                }
                let mut path = vec![v.root];
                let mut cur = v.root;
                while let Some(&t) = next[dir].get(&cur) {
                    path.push(t);
                    cur = t;
                }
                out.push(SectionalPath { dir: tag, vertices: path });
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PathDir {
    /// Arrows towards smaller rows.
    N,
    /// Arrows towards larger rows.
    S,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionalPath {
    pub dir: PathDir,
    /// Root ids in arrow order.
    pub vertices: Vec<usize>,
}

impl SectionalPath {
    pub fn arrow_count(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// Υ of a reduced word of `w₀` with unit-length coordinates when they exist.
pub fn build_upsilon(rs: Arc<RootSystem>, word: &[usize]) -> Result<Class> {
    Class::new(rs, word)
}

/// `Γ_Q` with the coordinates `Ω(β_k) = (i_k, ξ(i_k) - 2·#{j < k : i_j = i_k})`.
pub fn gamma_q(rs: Arc<RootSystem>, q: &DynkinQuiver) -> ArQuiver {
    let ty = rs.cartan_type();
    let w = adapted_word(q);
    let class = Class::new(rs.clone(), &w).expect("adapted");
    let xi = q.height();
    let mut count = vec![0i64; ty.rank() + 1];
    let mut vertices = Vec::with_capacity(w.len());
    for (k, &i) in w.iter().enumerate() {
        vertices.push(ArVertex { root: class.root_at(k), residue: i, folded: i, coord: xi[i] - 2 * count[i] });
        count[i] += 1;
    }
    vertices.sort_by_key(|v| (v.residue, v.coord));
    ArQuiver { rs, kind: FoldKind::Identity, d: 1, vertices, arrows: class.arrows().to_vec() }
}

/// Outcome of the additive check at one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Additive {
    Holds,
    Fails,
    NotApplicable,
}

/// For `α` at `(î, p)` with `β` at `(î, p - 2|α_î|²)`: `α + β` equals the sum
/// of the labels at `(ĵ, r)`, `ĵ` adjacent to `î`, `p - 2|α_î|² < r < p`.
/// The window is open: a closed one would pick up same-column vertices of a
/// neighbouring long row in the B and F folds.
pub fn additive_check(q: &ArQuiver, alpha: usize) -> Additive {
    let aut = q.automorphism();
    let a = q.vertex(alpha);
    let shift = 2 * aut.squared_length(a.folded);
    let Some(beta) = q.at_folded(a.folded, a.coord - shift) else {
        return Additive::NotApplicable;
    };
    let n = q.rs.rank();
    let mut lhs = vec![0i32; n];
    for (k, x) in lhs.iter_mut().enumerate() {
        *x = q.rs.root(alpha)[k] + q.rs.root(beta)[k];
    }
    let mut rhs = vec![0i32; n];
    for v in &q.vertices {
        if aut.folded_adjacent(v.folded, a.folded) && v.coord > a.coord - shift && v.coord < a.coord {
            for (k, x) in rhs.iter_mut().enumerate() {
                *x += q.rs.root(v.root)[k];
            }
        }
    }
    if lhs == rhs {
        Additive::Holds
    } else {
        Additive::Fails
    }
}

/// An unlabeled quiver: rows, coordinates and arrows between vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    /// Unfolded residue of each vertex.
    pub residues: Vec<usize>,
    /// Row used for sectional paths (folded residue or residue).
    pub rows: Vec<usize>,
    pub coords: Vec<i64>,
    pub arrows: Vec<(usize, usize)>,
    /// Vertices that come from the smaller quiver in a surgery.
    pub induced: Vec<bool>,
}

/// Canonical form of a shape: `((row, residue, coord), ...)` and arrows by position.
pub type ShapeKey = (Vec<(usize, usize, i64)>, Vec<((usize, i64), (usize, i64))>);

impl Shape {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Translation-invariant canonical form.
    pub fn key(&self) -> ShapeKey {
        let m = self.coords.iter().copied().min().unwrap_or(0);
        let mut v: Vec<(usize, usize, i64)> =
            (0..self.len()).map(|k| (self.rows[k], self.residues[k], self.coords[k] - m)).collect();
        v.sort_unstable();
        let mut a: Vec<((usize, i64), (usize, i64))> = self
            .arrows
            .iter()
            .map(|&(s, t)| ((self.rows[s], self.coords[s] - m), (self.rows[t], self.coords[t] - m)))
            .collect();
        a.sort_unstable();
        (v, a)
    }

    /// Index of the vertex at `(row, coord)`.
    pub fn at(&self, row: usize, coord: i64) -> Option<usize> {
        (0..self.len()).find(|&k| self.rows[k] == row && self.coords[k] == coord)
    }

    /// Maximal sectional paths as vertex-index chains. Errors when a vertex
    /// has two outgoing (or incoming) arrows in one direction.
    pub fn sectional_paths(&self) -> Result<Vec<(PathDir, Vec<usize>)>> {
        let n = self.len();
        let mut next = [vec![usize::MAX; n], vec![usize::MAX; n]];
        let mut prev = [vec![usize::MAX; n], vec![usize::MAX; n]];
        for &(s, t) in &self.arrows {
            let dir = match self.rows[t].cmp(&self.rows[s]) {
                core::cmp::Ordering::Less => 0,
                core::cmp::Ordering::Greater => 1,
                core::cmp::Ordering::Equal => continue,
            };
            if next[dir][s] != usize::MAX || prev[dir][t] != usize::MAX {
                return Err(Error::TheoremViolation("two sectional arrows in one direction".into()));
            }
            next[dir][s] = t;
            prev[dir][t] = s;
        }
        let mut out = Vec::new();
        for (dir, tag) in [(0, PathDir::N), (1, PathDir::S)] {
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&k| (self.rows[k], self.coords[k]));
            for k in order {
                if prev[dir][k] != usize::MAX {
                    continue;
                }
                let mut path = vec![k];
                let mut cur = k;
                while next[dir][cur] != usize::MAX {
                    cur = next[dir][cur];
                    path.push(cur);
                }
                out.push((tag, path));
            }
        }
        Ok(out)
    }

    /// For each vertex, the index of its N-path and S-path in `paths`.
    pub fn path_index(&self, paths: &[(PathDir, Vec<usize>)]) -> (Vec<usize>, Vec<usize>) {
        let mut np = vec![usize::MAX; self.len()];
        let mut sp = vec![usize::MAX; self.len()];
        for (k, (dir, p)) in paths.iter().enumerate() {
            for &v in p {
                match dir {
                    PathDir::N => np[v] = k,
                    PathDir::S => sp[v] = k,
                }
            }
        }
        (np, sp)
    }
}

impl ArQuiver {
    /// Forget the labels. Vertex `k` of the shape is `self.vertices[k]`.
    pub fn shape(&self, folded: bool) -> Shape {
        let idx: BTreeMap<usize, usize> = self.vertices.iter().enumerate().map(|(k, v)| (v.root, k)).collect();
        Shape {
            residues: self.vertices.iter().map(|v| v.residue).collect(),
            rows: self.vertices.iter().map(|v| if folded { v.folded } else { v.residue }).collect(),
            coords: self.vertices.iter().map(|v| v.coord).collect(),
            arrows: self.arrows.iter().map(|&(s, t)| (idx[&s], idx[&t])).collect(),
            induced: vec![true; self.len()],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanType;

    fn rs(ty: CartanType) -> Arc<RootSystem> {
        Arc::new(RootSystem::new(ty))
    }

    #[test]
    fn gamma_q_coordinates_a5() {
        // Q: 1 ← 2 → 3 ← 4 ← 5
        let ty = CartanType::a(5);
        let q = DynkinQuiver::new(ty, &[(2, 1), (2, 3), (4, 3), (5, 4)]).unwrap();
        let xi = q.height();
        let shift = -xi[1];
        let g = gamma_q(rs(ty), &q);
        let at = |r: &[i32]| {
            let v = g.vertex(g.rs.id(r).unwrap());
            (v.residue, v.coord + shift)
        };
        assert_eq!(at(&[1, 0, 0, 0, 0]), (1, 0));
        assert_eq!(at(&[0, 1, 1, 0, 0]), (1, -2));
        assert_eq!(at(&[0, 0, 0, 0, 1]), (1, -6));
        assert_eq!(at(&[1, 1, 0, 0, 0]), (5, -4));
        assert_eq!(g.vertices.iter().filter(|v| v.residue == 1).count(), 4);
    }

    #[test]
    fn gamma_q_matches_upsilon_coordinates() {
        for ty in [CartanType::a(4), CartanType::d(4), CartanType::d(5)] {
            let r = rs(ty);
            for q in DynkinQuiver::all(ty) {
                let g = gamma_q(r.clone(), &q).normalized();
                let c = adapted_class(r.clone(), &q);
                let u = ArQuiver::from_class(&c, &Automorphism::identity(ty)).unwrap();
                assert_eq!(g, u);
            }
        }
    }

    #[test]
    fn adapted_words_are_adapted() {
        for ty in [CartanType::a(3), CartanType::d(4), CartanType::e6()] {
            for q in DynkinQuiver::all(ty) {
                assert!(is_adapted(&q, &adapted_word(&q)));
            }
        }
    }

    #[test]
    fn distinct_quivers_distinct_classes() {
        let ty = CartanType::a(4);
        let r = rs(ty);
        let keys: BTreeSet<_> = DynkinQuiver::all(ty).iter().map(|q| adapted_class(r.clone(), q).key()).collect();
        assert_eq!(keys.len(), 8);
    }

    #[test]
    fn coxeter_word_round_trip() {
        let ty = CartanType::d(5);
        for q in DynkinQuiver::all(ty) {
            let w = q.coxeter_word();
            assert_eq!(DynkinQuiver::from_coxeter_word(ty, &w).unwrap(), q);
        }
    }

    #[test]
    fn reflection_on_coordinates() {
        for ty in [CartanType::a(4), CartanType::d(5)] {
            let r = rs(ty);
            for q in DynkinQuiver::all(ty) {
                let g = gamma_q(r.clone(), &q);
                for i in q.sinks() {
                    let h = g.reflect(i).unwrap().normalized();
                    let expect = gamma_q(r.clone(), &q.reflect(i)).normalized();
                    assert_eq!(h, expect);
                }
                let src = q.sources();
                if let Some(&i) = src.first() {
                    assert!(matches!(g.reflect(i), Err(Error::NotSink(_))) || q.sinks().contains(&i));
                }
            }
        }
    }

    #[test]
    fn additive_property_adapted() {
        for ty in [CartanType::a(5), CartanType::d(4), CartanType::d(5)] {
            let r = rs(ty);
            for q in DynkinQuiver::all(ty) {
                let g = gamma_q(r.clone(), &q);
                for v in &g.vertices {
                    assert_ne!(additive_check(&g, v.root), Additive::Fails);
                }
            }
        }
    }

    #[test]
    fn type_a_sectional_paths_share_components() {
        let ty = CartanType::a(5);
        let r = rs(ty);
        for q in DynkinQuiver::all(ty) {
            let g = gamma_q(r.clone(), &q);
            let paths = g.sectional_paths(false).unwrap();
            for i in 1..=5usize {
                let n_paths: Vec<_> = paths
                    .iter()
                    .filter(|p| p.dir == PathDir::N && p.arrow_count() == 5 - i)
                    .filter(|p| p.vertices.iter().all(|&v| r.root(v).iter().position(|&c| c != 0) == Some(i - 1)))
                    .collect();
                assert_eq!(n_paths.len(), 1);
                let s_paths: Vec<_> = paths
                    .iter()
                    .filter(|p| p.dir == PathDir::S && p.arrow_count() == i - 1)
                    .filter(|p| p.vertices.iter().all(|&v| r.root(v).iter().rposition(|&c| c != 0) == Some(i - 1)))
                    .collect();
                assert_eq!(s_paths.len(), 1);
            }
        }
    }

    #[test]
    fn boundary_matches_quiver() {
        // Right boundary (first occurrences) carries Q itself.
        let ty = CartanType::d(5);
        let r = rs(ty);
        for q in DynkinQuiver::all(ty) {
            let c = adapted_class(r.clone(), &q);
            let first: Vec<usize> =
                (1..=5).map(|i| c.root_at(c.word().iter().position(|&x| x == i).unwrap())).collect();
            for &(a, b) in c.arrows() {
                if let (Some(ia), Some(ib)) = (first.iter().position(|&x| x == a), first.iter().position(|&x| x == b)) {
                    assert!(q.has_arrow(ia + 1, ib + 1) || q.has_arrow(ib + 1, ia + 1));
                }
            }
        }
    }
}
