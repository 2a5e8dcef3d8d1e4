//! Quiver documents: the exchange format behind `arq quiver`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use arq_core::arq::ArQuiver;
use arq_core::weyl::render_root;
use arq_core::{Automorphism, CartanType, Class, Family, FoldKind};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub root: Vec<i32>,
    pub label: String,
    pub residue: usize,
    pub folded: usize,
    /// Numerator over the document's `d`.
    pub coord: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowRecord {
    /// Index into `vertices`.
    pub src: usize,
    pub dst: usize,
    pub color: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverDocument {
    pub schema: u32,
    #[serde(rename = "type")]
    pub ty: String,
    pub family: String,
    pub rank: usize,
    pub fold: String,
    pub folded_type: String,
    pub d: i64,
    pub word: Vec<usize>,
    pub vertices: Vec<VertexRecord>,
    pub arrows: Vec<ArrowRecord>,
}

pub fn fold_name(k: FoldKind) -> &'static str {
    match k {
        FoldKind::Identity => "identity",
        FoldKind::B => "B",
        FoldKind::C => "C",
        FoldKind::F => "F",
        FoldKind::G => "G",
        FoldKind::GSquared => "G2",
    }
}

pub fn parse_fold(s: &str) -> CliResult<FoldKind> {
    Ok(match s {
        "identity" => FoldKind::Identity,
        "B" => FoldKind::B,
        "C" => FoldKind::C,
        "F" => FoldKind::F,
        "G" => FoldKind::G,
        "G2" => FoldKind::GSquared,
        _ => return Err(CliError::Usage(format!("unknown fold {s}"))),
    })
}

impl QuiverDocument {
    pub fn from_class(class: &Class, aut: &Automorphism) -> CliResult<Self> {
        let q = ArQuiver::from_class(class, aut)?;
        Ok(Self::from_quiver(&q, class.word()))
    }

    pub fn from_quiver(q: &ArQuiver, word: &[usize]) -> Self {
        let ty = q.cartan_type();
        let aut = q.automorphism();
        let index: BTreeMap<usize, usize> = q.vertices.iter().enumerate().map(|(k, v)| (v.root, k)).collect();
        let vertices = q
            .vertices
            .iter()
            .map(|v| {
                let r = q.rs.root(v.root);
                VertexRecord {
                    root: r.clone(),
                    label: render_root(ty, r),
                    residue: v.residue,
                    folded: v.folded,
                    coord: v.coord,
                }
            })
            .collect();
        let mut arrows: Vec<ArrowRecord> =
            q.arrows.iter().map(|&(s, t)| ArrowRecord { src: index[&s], dst: index[&t], color: 1 }).collect();
        arrows.sort_by_key(|a| (a.src, a.dst));
        QuiverDocument {
            schema: SCHEMA,
            ty: ty.name(),
            family: format!("{:?}", ty.family()),
            rank: ty.rank(),
            fold: fold_name(q.kind).into(),
            folded_type: aut.folded_name(),
            d: q.d,
            word: word.to_vec(),
            vertices,
            arrows,
        }
    }

    pub fn cartan_type(&self) -> CliResult<CartanType> {
        let f = match self.family.as_str() {
            "A" => Family::A,
            "D" => Family::D,
            "E" => Family::E,
            other => return Err(CliError::Usage(format!("unknown family {other}"))),
        };
        Ok(CartanType::new(f, self.rank)?)
    }

    /// Rebuild from the stored word and check that everything else agrees.
    pub fn validate(&self) -> CliResult<()> {
        if self.schema != SCHEMA {
            return Err(CliError::Usage(format!("unsupported schema {}", self.schema)));
        }
        let ty = self.cartan_type()?;
        let aut = Automorphism::new(ty, parse_fold(&self.fold)?)?;
        let class = Class::from_word(ty, &self.word)?;
        let again = QuiverDocument::from_class(&class, &aut)?;
        if &again != self {
            return Err(CliError::Usage("document does not match the quiver of its word".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> CliResult<Self> {
        let doc: QuiverDocument = serde_json::from_str(s)?;
        doc.validate()?;
        Ok(doc)
    }

    fn node_id(&self, k: usize) -> String {
        self.vertices[k].root.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(".")
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{}\" {{", self.ty);
        let _ = writeln!(s, "  rankdir=LR;");
        let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (k, v) in self.vertices.iter().enumerate() {
            rows.entry(v.residue).or_default().push(k);
        }
        for (k, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(
                s,
                "  \"{}\" [label=\"{}\", residue={}, folded={}, coord=\"{}/{}\"];",
                self.node_id(k),
                v.label,
                v.residue,
                v.folded,
                v.coord,
                self.d
            );
        }
        for (r, ks) in &rows {
            let ids: Vec<String> = ks.iter().map(|&k| format!("\"{}\"", self.node_id(k))).collect();
            let _ = writeln!(s, "  {{ rank=same; /* residue {r} */ {}; }}", ids.join("; "));
        }
        for a in &self.arrows {
            let _ = writeln!(s, "  \"{}\" -> \"{}\" [color={}];", self.node_id(a.src), self.node_id(a.dst), a.color);
        }
        s.push_str("}\n");
        s
    }

    /// One line per residue row, vertices by coordinate.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let word: String = self.word.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
        let _ = writeln!(s, "{} fold {} ({}), d = {}", self.ty, self.fold, self.folded_type, self.d);
        let _ = writeln!(s, "word: {word}");
        let mut rows: BTreeMap<usize, Vec<&VertexRecord>> = BTreeMap::new();
        for v in &self.vertices {
            rows.entry(v.residue).or_default().push(v);
        }
        for (r, vs) in rows {
            let cells: Vec<String> = vs.iter().map(|v| format!("{}@{}", v.label, v.coord)).collect();
            let _ = writeln!(s, "{r}: {}", cells.join("  "));
        }
        s
    }
}
