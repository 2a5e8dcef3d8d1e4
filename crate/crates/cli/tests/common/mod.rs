//! Reader for the xymatrix drawings in `tests/data` and comparison with built quivers.

#![allow(dead_code)]

use std::collections::BTreeSet;

use arq_core::arq::ArQuiver;
use arq_core::weyl::render_root;
use arq_core::{Automorphism, Class};

/// A drawn vertex: residue (row label), column, and label if one is printed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Drawn {
    pub residue: usize,
    pub col: i64,
    pub label: Option<Label>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Label {
    Coeffs(Vec<i32>),
    /// `<a,b>` as rendered for type D.
    Eps(String),
}

#[derive(Debug)]
pub struct Drawing {
    pub vertices: Vec<Drawn>,
    /// `(residue, col) -> (residue, col)`.
    pub arrows: BTreeSet<((usize, i64), (usize, i64))>,
}

pub fn fixture(name: &str) -> String {
    let p = format!("{}/tests/data/{name}.xy", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{p}: {e}"))
}

fn split_top(s: &str, sep: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let b = s.as_bytes();
    let mut i = 0;
    while i < b.len() {
        match b[i] {
            b'{' => depth += 1,
            b'}' => depth -= 1,
            _ => {}
        }
        if depth == 0 && s[i..].starts_with(sep) {
            out.push(std::mem::take(&mut cur));
            i += sep.len();
            continue;
        }
        cur.push(b[i] as char);
        i += 1;
    }
    out.push(cur);
    out
}

/// Strip `\ar@{..}[..]` commands and return them with the remaining text.
fn take_arrows(cell: &str) -> (Vec<(String, String)>, String) {
    let mut arrows = Vec::new();
    let mut rest = String::new();
    let mut s = cell;
    while let Some(k) = s.find("\\ar@{") {
        rest.push_str(&s[..k]);
        let t = &s[k + 5..];
        let close = t.find('}').expect("arrow style");
        let style = t[..close].to_string();
        let t = &t[close + 1..];
        let open = t.find('[').expect("arrow target");
        let end = t.find(']').expect("arrow target");
        arrows.push((style, t[open + 1..end].to_string()));
        s = &t[end + 1..];
    }
    rest.push_str(s);
    (arrows, rest)
}

fn parse_label(text: &str, rank: usize) -> Option<Label> {
    let t = text.replace("\\hspace{-0.4ex}", "").replace("\\scriptstyle", "");
    if let Some(k) = t.find("\\prt{") {
        let digits: Vec<i32> = t[k..].chars().filter_map(|c| c.to_digit(10)).map(|d| d as i32).collect();
        return Some(Label::Coeffs(digits));
    }
    if let Some(k) = t.find("\\langle") {
        let body = &t[k + 7..t.find("\\rangle").expect("rangle")];
        let parts: Vec<String> = body.split(',').map(|p| p.trim().to_string()).collect();
        return Some(Label::Eps(format!("<{},{}>", parts[0], parts[1])));
    }
    if t.contains("\\alpha") {
        let mut v = vec![0; rank];
        for term in t.split('+') {
            let term = term.trim();
            let a = term.find("\\alpha_").expect("alpha term");
            let c: i32 = if a == 0 { 1 } else { term[..a].trim().parse().expect("coefficient") };
            let idx: usize =
                term[a + 7..].trim_matches(|c: char| c == '{' || c == '}' || c.is_whitespace()).parse().expect("index");
            v[idx - 1] += c;
        }
        return Some(Label::Coeffs(v));
    }
    None
}

pub fn parse(body: &str, rank: usize) -> Drawing {
    let rows: Vec<Vec<String>> = split_top(body, "\\\\")
        .into_iter()
        .map(|r| split_top(&r, "&"))
        .filter(|r| r.iter().any(|c| !c.trim().is_empty()))
        .collect();
    let residues: Vec<usize> = rows.iter().map(|r| r[0].trim().parse().expect("row label")).collect();
    let mut vertices = Vec::new();
    let mut arrows = BTreeSet::new();
    for (ri, row) in rows.iter().enumerate() {
        for (ci, cell) in row.iter().enumerate().skip(1) {
            let (ars, text) = take_arrows(cell);
            let text = text.trim();
            if text.is_empty() {
                assert!(ars.is_empty(), "arrow from an empty cell");
                continue;
            }
            let here = (residues[ri], ci as i64);
            vertices.push(Drawn { residue: here.0, col: here.1, label: parse_label(text, rank) });
            for (style, dir) in ars {
                let dr = dir.matches('d').count() as i64 - dir.matches('u').count() as i64;
                let dc = dir.matches('r').count() as i64 - dir.matches('l').count() as i64;
                let there = (residues[(ri as i64 + dr) as usize], ci as i64 + dc);
                match style.as_str() {
                    "->" | "-->" => arrows.insert((here, there)),
                    "<-" => arrows.insert((there, here)),
                    other => panic!("arrow style {other}"),
                };
            }
        }
    }
    Drawing { vertices, arrows }
}

#[derive(Debug, Default)]
pub struct Comparison {
    /// Vertices and arrows, identified by printed label when every vertex has one.
    pub structure: Vec<String>,
    /// Labelled vertices whose column is not their coordinate.
    pub positions: Vec<String>,
}

/// Compare a drawing with the quiver of `class` under `aut`, columns read as
/// coordinate numerators up to the most common shift.
pub fn compare(drawing: &Drawing, class: &Class, aut: &Automorphism) -> Comparison {
    let q = ArQuiver::from_class(class, aut).expect("quiver builds");
    let ty = class.cartan_type();
    let mut out = Comparison::default();
    let pos = |id: usize| {
        let v = q.vertex(id);
        (v.residue, v.coord)
    };
    let built_arrows: BTreeSet<_> = q.arrows.iter().map(|&(s, t)| (pos(s), pos(t))).collect();
    let labelled = drawing.vertices.iter().all(|v| v.label.is_some());
    if labelled {
        let find = |v: &Drawn| -> Option<usize> {
            q.vertices.iter().map(|x| x.root).find(|&id| {
                q.vertex(id).residue == v.residue
                    && match v.label.as_ref().expect("labelled") {
                        Label::Coeffs(c) => c == q.rs.root(id),
                        Label::Eps(s) => *s == render_root(ty, q.rs.root(id)),
                    }
            })
        };
        let mut at = std::collections::BTreeMap::new();
        let mut shifts = std::collections::BTreeMap::new();
        for v in &drawing.vertices {
            match find(v) {
                Some(id) => {
                    at.insert((v.residue, v.col), id);
                    *shifts.entry(v.col - q.vertex(id).coord).or_insert(0usize) += 1;
                }
                None => {
                    out.structure.push(format!("drawn {:?} at residue {} is not in the quiver", v.label, v.residue))
                }
            }
        }
        if at.len() != q.len() || drawing.vertices.len() != q.len() {
            out.structure.push(format!("{} drawn vertices, {} in the quiver", drawing.vertices.len(), q.len()));
        }
        let shift = shifts.iter().max_by_key(|(_, n)| **n).map(|(s, _)| *s).unwrap_or(0);
        for (&(r, c), &id) in &at {
            if c - shift != q.vertex(id).coord {
                out.positions.push(format!(
                    "{} drawn at ({r}, {}), coordinate {}",
                    render_root(ty, q.rs.root(id)),
                    c - shift,
                    q.vertex(id).coord
                ));
            }
        }
        let mut drawn_arrows = BTreeSet::new();
        for (a, b) in &drawing.arrows {
            match (at.get(a), at.get(b)) {
                (Some(&x), Some(&y)) => {
                    drawn_arrows.insert((pos(x), pos(y)));
                }
                _ => out.structure.push(format!("arrow {a:?} -> {b:?} has a missing end")),
            }
        }
        for a in drawn_arrows.symmetric_difference(&built_arrows) {
            out.structure
                .push(format!("arrow {a:?} only in {}", if drawn_arrows.contains(a) { "drawing" } else { "quiver" }));
        }
        return out;
    }
    let shift = drawing.vertices.iter().map(|v| v.col).min().unwrap_or(0) - 1;
    let drawn: BTreeSet<(usize, i64)> = drawing.vertices.iter().map(|v| (v.residue, v.col - shift)).collect();
    let built: BTreeSet<(usize, i64)> = q.vertices.iter().map(|v| (v.residue, v.coord)).collect();
    if drawn.len() != drawing.vertices.len() {
        out.structure.push("two drawn vertices share a position".into());
    }
    for p in drawn.symmetric_difference(&built) {
        out.structure.push(format!("vertex at {p:?} only in {}", if drawn.contains(p) { "drawing" } else { "quiver" }));
    }
    let drawn_arrows: BTreeSet<_> =
        drawing.arrows.iter().map(|&((a, b), (c, d))| ((a, b - shift), (c, d - shift))).collect();
    for a in drawn_arrows.symmetric_difference(&built_arrows) {
        out.structure
            .push(format!("arrow {a:?} only in {}", if drawn_arrows.contains(a) { "drawing" } else { "quiver" }));
    }
    out
}

/// Row sizes of a drawing, by residue.
pub fn row_sizes(d: &Drawing) -> Vec<(usize, usize)> {
    let mut m = std::collections::BTreeMap::new();
    for v in &d.vertices {
        *m.entry(v.residue).or_insert(0) += 1;
    }
    m.into_iter().collect()
}

/// `∏_{k<m} (block)^{k∨}`: the block with the automorphism applied `k` times.
pub fn twisted_power_word(aut: &Automorphism, block: &[usize], m: usize) -> Vec<usize> {
    (0..m).flat_map(|k| block.iter().map(move |&i| aut.power(i, k)).collect::<Vec<_>>()).collect()
}
