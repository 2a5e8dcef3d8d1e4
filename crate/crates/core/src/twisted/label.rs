//! Labels of twisted AR-quivers of types `A_{2n+1}` and `D_{n+1}` recovered
//! from the shape alone (residues, arrows, coordinates).
//!
//! Type A: delete the residue-`(n+1)` vertices to recover `Γ_Q` of `A_{2n}`,
//! label it by sectional-path lengths, lift the labels back, then fill the
//! residue-`(n+1)` vertices from their long sectional paths.
//!
//! Type D: cut the quiver along the leftmost long N-path `𝒩` and the
//! rightmost long S-path `𝒮`. The west part, flipped upside down, glues onto
//! the east part along `𝒩 = 𝒮` to give `Γ_Q` of `A_n`; its labels transfer by
//! `ι_W`, `ι_E`. A center vertex is `⟨a,b⟩` where `a`, `b` are the first
//! components met by its two sectional paths on `𝒩 ∪ 𝒮`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arq::{PathDir, Shape};
use crate::cartan::{CartanType, Family};
use crate::error::{Error, Result};
use crate::weyl::{d_epsilon, d_from_epsilon, Root};

/// Root label of every vertex of `shape`, for twisted quivers of `A_{2n+1}` or `D_{n+1}`.
pub fn label_from_shape(ty: CartanType, shape: &Shape) -> Result<Vec<Root>> {
    let out = match ty.family() {
        Family::A if ty.rank() % 2 == 1 && ty.rank() >= 3 => label_a(ty, shape)?,
        Family::D => label_d(ty, shape)?,
        _ => return Err(Error::Unsupported(format!("no shape labeling for {}", ty.name()))),
    };
    if out.len() != ty.num_positive_roots() {
        return Err(Error::NotTwisted("wrong number of vertices".into()));
    }
    let mut seen = alloc::collections::BTreeSet::new();
    for r in &out {
        if !seen.insert(r.clone()) {
            return Err(Error::NotTwisted("a root is used twice".into()));
        }
    }
    Ok(out)
}

fn with_rows(shape: &Shape, rows: Vec<usize>) -> Shape {
    Shape { rows, ..shape.clone() }
}

/// `[a, b]` of type `A_m` as a coefficient vector.
fn segment(m: usize, a: usize, b: usize) -> Root {
    let mut r = vec![0; m];
    for x in r.iter_mut().take(b).skip(a - 1) {
        *x = 1;
    }
    r
}

/// Arrow counts of the N-path and S-path through each vertex.
fn path_lengths(s: &Shape) -> Result<(Vec<usize>, Vec<usize>)> {
    let paths = s.sectional_paths()?;
    let mut kn = vec![0; s.len()];
    let mut ks = vec![0; s.len()];
    for (dir, p) in &paths {
        for &v in p {
            match dir {
                PathDir::N => kn[v] = p.len() - 1,
                PathDir::S => ks[v] = p.len() - 1,
            }
        }
    }
    Ok((kn, ks))
}

/// Labels `[m - k_N, k_S + 1]` of `Γ_Q` of type `A_m`.
fn label_gamma_a(s: &Shape, m: usize) -> Result<Vec<(usize, usize)>> {
    let (kn, ks) = path_lengths(s)?;
    let mut out = Vec::with_capacity(s.len());
    for v in 0..s.len() {
        if kn[v] >= m || ks[v] >= m {
            return Err(Error::NotTwisted("sectional path too long".into()));
        }
        let (a, b) = (m - kn[v], ks[v] + 1);
        if a > b {
            return Err(Error::NotTwisted("sectional paths do not cross".into()));
        }
        out.push((a, b));
    }
    Ok(out)
}

fn label_a(ty: CartanType, shape: &Shape) -> Result<Vec<Root>> {
    let m = ty.rank();
    let n = (m - 1) / 2;
    let len = shape.len();
    let ups = with_rows(shape, shape.residues.clone());
    let star: Vec<bool> = shape.residues.iter().map(|&r| r == n + 1).collect();

    // Γ' of A_{2n}: drop the stars, bridging the ones that sit on an arrow.
    let keep: Vec<usize> = (0..len).filter(|&v| !star[v]).collect();
    let mut idx = vec![usize::MAX; len];
    for (k, &v) in keep.iter().enumerate() {
        idx[v] = k;
    }
    let mut arrows = Vec::new();
    let mut ins: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut outs: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(s, t) in &shape.arrows {
        match (star[s], star[t]) {
            (false, false) => arrows.push((idx[s], idx[t])),
            (false, true) => ins.entry(t).or_default().push(s),
            (true, false) => outs.entry(s).or_default().push(t),
            (true, true) => return Err(Error::NotTwisted("arrow between two middle vertices".into())),
        }
    }
    for v in (0..len).filter(|&v| star[v]) {
        let i = ins.get(&v).map_or(0, |x| x.len());
        let o = outs.get(&v).map_or(0, |x| x.len());
        match (i, o) {
            (1, 1) => arrows.push((idx[ins[&v][0]], idx[outs[&v][0]])),
            (1, 0) | (0, 1) => {}
            _ => return Err(Error::NotTwisted("middle vertex of unexpected degree".into())),
        }
    }
    let small = Shape {
        residues: keep.iter().map(|&v| shape.residues[v]).collect(),
        rows: keep
            .iter()
            .map(|&v| if shape.residues[v] > n { shape.residues[v] - 1 } else { shape.residues[v] })
            .collect(),
        coords: keep.iter().map(|&v| shape.coords[v]).collect(),
        arrows,
        induced: vec![true; keep.len()],
    };
    let small_labels = label_gamma_a(&small, 2 * n)?;

    let paths = ups.sectional_paths()?;
    let (np, sp) = ups.path_index(&paths);
    let has_star = |p: usize| paths[p].1.iter().any(|&v| star[v]);
    let iota = |i: usize| if i <= n { i } else { i + 1 };
    let mut out: Vec<Option<Root>> = vec![None; len];
    for (k, &v) in keep.iter().enumerate() {
        let (a, b) = small_labels[k];
        let mut r = vec![0; m];
        for i in a..=b {
            r[iota(i) - 1] += 1;
        }
        if has_star(np[v]) && has_star(sp[v]) {
            r[n] += 1;
        }
        let first = r.iter().position(|&c| c != 0).unwrap_or(0);
        let last = r.iter().rposition(|&c| c != 0).unwrap_or(0);
        if r[first..=last].iter().any(|&c| c != 1) {
            return Err(Error::NotTwisted("lifted label is not a root".into()));
        }
        out[v] = Some(r);
    }

    // Stars: components forced by long sectional paths, then elimination.
    let mut partial: Vec<(Option<usize>, Option<usize>)> = vec![(None, None); len];
    for v in (0..len).filter(|&v| star[v]) {
        let kn = paths[np[v]].1.len() - 1;
        let ks = paths[sp[v]].1.len() - 1;
        if kn >= n {
            partial[v].0 = Some(2 * n + 1 - kn);
        }
        if ks >= n {
            partial[v].1 = Some(ks + 1);
        }
    }
    let mut used: alloc::collections::BTreeSet<Root> = out.iter().flatten().cloned().collect();
    loop {
        let pending: Vec<usize> = (0..len).filter(|&v| out[v].is_none()).collect();
        if pending.is_empty() {
            break;
        }
        let mut progress = false;
        for v in pending {
            let mut cands = Vec::new();
            for a in 1..=m {
                for b in a..=m {
                    if partial[v].0.is_some_and(|x| x != a) || partial[v].1.is_some_and(|x| x != b) {
                        continue;
                    }
                    let r = segment(m, a, b);
                    if !used.contains(&r) {
                        cands.push(r);
                    }
                }
            }
            if cands.is_empty() {
                return Err(Error::NotTwisted("no root left for a middle vertex".into()));
            }
            if cands.len() == 1 {
                used.insert(cands[0].clone());
                out[v] = Some(cands.pop().expect("one"));
                progress = true;
            }
        }
        if !progress {
            return Err(Error::NotTwisted("middle vertices are not determined".into()));
        }
    }
    Ok(out.into_iter().map(|r| r.expect("filled")).collect())
}

/// `⟨a, b⟩` with signed `b` as a root of `D_m`.
fn d_root(m: usize, a: i32, b: i32) -> Root {
    let mut e = vec![0; m];
    e[(a - 1) as usize] = 1;
    e[(b.unsigned_abs() - 1) as usize] = b.signum();
    d_from_epsilon(&e)
}

/// Parts of a folded type-D quiver cut out by the long N- and S-paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DRegion {
    /// Up to and including the leftmost long N-path.
    West,
    /// From the rightmost long S-path on.
    East,
    /// Strictly between.
    Center,
}

struct DCut {
    n: usize,
    rows: Vec<usize>,
    paths: Vec<(PathDir, Vec<usize>)>,
    np: Vec<usize>,
    sp: Vec<usize>,
    long_n: Vec<usize>,
    long_s: Vec<usize>,
    nc: Vec<i64>,
    sc: Vec<i64>,
    part: Vec<DRegion>,
}

fn d_cut(ty: CartanType, shape: &Shape) -> Result<DCut> {
    let n = ty.rank() - 1;
    let len = shape.len();
    let rows: Vec<usize> = shape.residues.iter().map(|&r| r.min(n)).collect();
    let s = with_rows(shape, rows.clone());
    let paths = s.sectional_paths()?;
    let (np, sp) = s.path_index(&paths);
    let bottom = |p: &Vec<usize>| p.iter().copied().find(|&v| rows[v] == n);
    let long_n = paths
        .iter()
        .filter(|(d, p)| *d == PathDir::N && p.len() == n)
        .min_by_key(|(_, p)| shape.coords[bottom(p).expect("spans all rows")])
        .ok_or_else(|| Error::NotTwisted("no long N-path".into()))?
        .1
        .clone();
    let long_s = paths
        .iter()
        .filter(|(d, p)| *d == PathDir::S && p.len() == n)
        .max_by_key(|(_, p)| shape.coords[bottom(p).expect("spans all rows")])
        .ok_or_else(|| Error::NotTwisted("no long S-path".into()))?
        .1
        .clone();
    let mut nc = vec![0i64; n + 1];
    let mut sc = vec![0i64; n + 1];
    for &v in &long_n {
        nc[rows[v]] = shape.coords[v];
    }
    for &v in &long_s {
        sc[rows[v]] = shape.coords[v];
    }
    if (0..len).any(|v| shape.coords[v] <= nc[rows[v]] && shape.coords[v] >= sc[rows[v]]) {
        return Err(Error::NotTwisted("west and east parts overlap".into()));
    }
    let part = (0..len)
        .map(|v| {
            let (r, c) = (rows[v], shape.coords[v]);
            if c <= nc[r] {
                DRegion::West
            } else if c >= sc[r] {
                DRegion::East
            } else {
                DRegion::Center
            }
        })
        .collect();
    Ok(DCut { n, rows, paths, np, sp, long_n, long_s, nc, sc, part })
}

/// West/East/Center for every vertex of a folded `D_{n+1}` shape.
pub fn d_regions(ty: CartanType, shape: &Shape) -> Result<Vec<DRegion>> {
    if ty.family() != Family::D {
        return Err(Error::Unsupported(format!("regions need type D, got {}", ty.name())));
    }
    Ok(d_cut(ty, shape)?.part)
}

/// `ε_a + ε_b` with `a < b ≤ n` in `D_{n+1}`: the labels of the center.
pub fn is_d_center(r: &Root) -> bool {
    let e = d_epsilon(r);
    e[e.len() - 1] == 0 && e.iter().filter(|&&x| x == 1).count() == 2
}

fn label_d(ty: CartanType, shape: &Shape) -> Result<Vec<Root>> {
    let len = shape.len();
    let DCut { n, rows, paths, np, sp, long_n, long_s, nc, sc, part } = d_cut(ty, shape)?;
    use DRegion as Part;
    let m = ty.rank();

    // Glue the flipped west part onto the east part.
    let shift = sc[1] - nc[n];
    let pos = |v: usize| -> (usize, i64) {
        match part[v] {
            Part::West => (n + 1 - rows[v], shape.coords[v] + shift),
            _ => (rows[v], shape.coords[v]),
        }
    };
    let mut glued: BTreeMap<(usize, i64), usize> = BTreeMap::new();
    for v in (0..len).filter(|&v| part[v] != Part::Center) {
        let k = glued.len();
        glued.entry(pos(v)).or_insert(k);
    }
    // Re-index densely in key order.
    let keys: Vec<(usize, i64)> = glued.keys().copied().collect();
    let gidx: BTreeMap<(usize, i64), usize> = keys.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    if keys.len() != n * (n + 1) / 2 {
        return Err(Error::NotTwisted("glued quiver has the wrong size".into()));
    }
    let mut garrows = Vec::new();
    for &(a, b) in &shape.arrows {
        let same = (part[a] == Part::West && part[b] == Part::West) || (part[a] == Part::East && part[b] == Part::East);
        if same {
            garrows.push((gidx[&pos(a)], gidx[&pos(b)]));
        }
    }
    garrows.sort_unstable();
    garrows.dedup();
    let gshape = Shape {
        residues: keys.iter().map(|p| p.0).collect(),
        rows: keys.iter().map(|p| p.0).collect(),
        coords: keys.iter().map(|p| p.1).collect(),
        arrows: garrows,
        induced: vec![true; keys.len()],
    };
    let glabels = label_gamma_a(&gshape, n)?;

    let mut right: Vec<usize> = (0..len).filter(|&v| rows[v] == n).collect();
    right.sort_by_key(|&v| shape.coords[v]);
    let contains_top = shape.residues[*right.last().expect("last row")] == n + 1;
    let plain = |(a, b): (usize, usize)| (a as i32, -(b as i32 + 1));
    let bent = |(a, b): (usize, usize)| if b == n { (a as i32, n as i32 + 1) } else { plain((a, b)) };
    let mut pairs: Vec<Option<(i32, i32)>> = vec![None; len];
    for v in 0..len {
        let lab = match part[v] {
            Part::Center => continue,
            _ => glabels[gidx[&pos(v)]],
        };
        let east = part[v] == Part::East;
        pairs[v] = Some(if east == contains_top { bent(lab) } else { plain(lab) });
    }
    let on_spine = |p: usize| -> Result<i32> {
        paths[p]
            .1
            .iter()
            .find_map(|&u| if long_n.contains(&u) || long_s.contains(&u) { pairs[u].map(|x| x.0) } else { None })
            .ok_or_else(|| Error::NotTwisted("center vertex misses N and S".into()))
    };
    let mut centers = Vec::new();
    for v in (0..len).filter(|&v| part[v] == Part::Center) {
        let a = on_spine(np[v])?;
        let b = on_spine(sp[v])?;
        if a == b {
            return Err(Error::NotTwisted("center vertex with equal components".into()));
        }
        centers.push((v, (a.min(b), a.max(b))));
    }
    for (v, p) in centers {
        pairs[v] = Some(p);
    }
    Ok(pairs
        .into_iter()
        .map(|p| {
            let (a, b) = p.expect("labelled");
            d_root(m, a, b)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arq::ArQuiver;
    use crate::cartan::Automorphism;
    use crate::twisted::twisted_cluster;
    use crate::weyl::RootSystem;
    use alloc::sync::Arc;

    fn check(ty: CartanType) -> usize {
        let rs = Arc::new(RootSystem::new(ty));
        let aut = Automorphism::standard(ty).unwrap();
        let cl = twisted_cluster(rs.clone(), &aut, 1000).unwrap();
        for c in &cl {
            let q = ArQuiver::from_class(c, &aut).unwrap();
            let labels = label_from_shape(ty, &q.shape(true)).unwrap();
            for (k, v) in q.vertices.iter().enumerate() {
                assert_eq!(&labels[k], rs.root(v.root), "{} {:?}", ty.name(), c.word());
            }
        }
        cl.len()
    }

    #[test]
    fn type_a_labels_agree() {
        assert_eq!(check(CartanType::a(3)), 4);
        assert_eq!(check(CartanType::a(5)), 16);
        assert_eq!(check(CartanType::a(7)), 64);
    }

    #[test]
    fn type_d_labels_agree() {
        assert_eq!(check(CartanType::d(4)), 8);
        assert_eq!(check(CartanType::d(5)), 16);
        assert_eq!(check(CartanType::d(6)), 32);
    }

    #[test]
    fn e6_is_unsupported() {
        let s = Shape { residues: vec![], rows: vec![], coords: vec![], arrows: vec![], induced: vec![] };
        assert!(matches!(label_from_shape(CartanType::e6(), &s), Err(Error::Unsupported(_))));
    }

    #[test]
    fn center_region_is_positive_pairs() {
        for m in 4..=6 {
            let ty = CartanType::d(m);
            let rs = Arc::new(RootSystem::new(ty));
            let aut = Automorphism::standard(ty).unwrap();
            for c in twisted_cluster(rs.clone(), &aut, 1000).unwrap() {
                let q = ArQuiver::from_class(&c, &aut).unwrap();
                let reg = d_regions(ty, &q.shape(true)).unwrap();
                for (v, r) in q.vertices.iter().zip(&reg) {
                    assert_eq!(*r == DRegion::Center, is_d_center(rs.root(v.root)));
                }
                let center = reg.iter().filter(|&&r| r == DRegion::Center).count();
                assert_eq!(center, (m - 1) * (m - 2) / 2);
            }
        }
    }
}
