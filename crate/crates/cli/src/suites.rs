//! Verification suites shared by `arq verify` and the acceptance test.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use arq_core::arq::{adapted_class, Additive, ArQuiver, DynkinQuiver};
use arq_core::denom::{
    conjectural_dorey, dorey_closed_all, dorey_from_cluster, factorization_identity, verify_denominator, AffineType,
    DenomRecord, DoreyTriple,
};
use arq_core::distpoly::folded_distance_polynomials;
use arq_core::twisted::label::label_from_shape;
use arq_core::twisted::tdq::{build_tdq, enumerate_tdq, is_adapted_to_tdq, TwistedDynkinQuiver};
use arq_core::twisted::{swings, twisted_additive_check, twisted_cluster};
use arq_core::weyl::{cluster_closure, is_reduced};
use arq_core::{Automorphism, CartanType, Class, FoldKind, RootSystem};
use rand::rngs::StdRng;
use rand::Rng;
use serde::Serialize;

use crate::error::CliResult;

pub const CLUSTER_MAX: usize = 100_000;

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    #[serde(rename = "type")]
    pub ty: String,
    pub k: usize,
    pub l: usize,
    pub expected: String,
    pub computed: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl From<&DenomRecord> for Record {
    fn from(r: &DenomRecord) -> Self {
        Record {
            ty: r.ty.name(),
            k: r.k,
            l: r.l,
            expected: r.expected.to_string(),
            computed: r.computed.to_string(),
            matches: r.matches(),
        }
    }
}

impl std::fmt::Display for Record {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.matches { "PASS" } else { "FAIL" };
        write!(f, "{tag} {} ({},{}) expected {} computed {}", self.ty, self.k, self.l, self.expected, self.computed)
    }
}

/// A named yes/no check with a short explanation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }
}

impl std::fmt::Display for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

pub fn root_system(ty: CartanType) -> Arc<RootSystem> {
    Arc::new(RootSystem::new(ty))
}

/// Cluster points selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Adapted,
    Twisted,
    /// `D_4` with the order-3 rotation.
    Triply,
    /// `D_4` with the square of the rotation.
    TriplySquare,
}

impl Kind {
    pub fn automorphism(self, ty: CartanType) -> CliResult<Automorphism> {
        Ok(match self {
            Kind::Adapted => Automorphism::identity(ty),
            Kind::Twisted => Automorphism::standard(ty)?,
            Kind::Triply => Automorphism::new(ty, FoldKind::G)?,
            Kind::TriplySquare => Automorphism::new(ty, FoldKind::GSquared)?,
        })
    }
}

/// All classes of the cluster point of `kind`, sorted by key.
pub fn cluster(ty: CartanType, kind: Kind) -> CliResult<Vec<Class>> {
    let rs = root_system(ty);
    let out = match kind {
        Kind::Adapted => {
            let q = DynkinQuiver::all(ty).into_iter().next().expect("at least one orientation");
            cluster_closure(&adapted_class(rs, &q), CLUSTER_MAX)?
        }
        _ => twisted_cluster(rs, &kind.automorphism(ty)?, CLUSTER_MAX)?,
    };
    Ok(out)
}

pub fn denom_records(ty: AffineType) -> CliResult<Vec<Record>> {
    Ok(verify_denominator(ty)?.iter().map(Record::from).collect())
}

/// `d^B` against the `A_{2n}` distance polynomials.
pub fn factorization_records(n: usize) -> CliResult<Vec<Record>> {
    Ok(factorization_identity(n)?.iter().map(Record::from).collect())
}

fn triples_text(ts: &[&DoreyTriple]) -> String {
    if ts.is_empty() {
        return "none".into();
    }
    ts.iter().map(|t| format!("[y/z={} x/z={}]", t.y_over_z, t.x_over_z)).collect::<Vec<_>>().join(" ")
}

/// Triples read off the whole twisted cluster point of `ty`.
pub fn dorey_computed(ty: AffineType) -> CliResult<BTreeSet<DoreyTriple>> {
    let (x, aut) = ty.source()?;
    let cl = twisted_cluster(root_system(x), &aut, CLUSTER_MAX)?;
    Ok(dorey_from_cluster(&cl, &aut)?)
}

/// Per `(i, j, k)`: set equality for `B`/`C`, containment of the listed triples for `F_4`/`G_2`.
pub fn dorey_records(ty: AffineType) -> CliResult<Vec<Record>> {
    let computed = dorey_computed(ty)?;
    let (expected, contain): (BTreeSet<DoreyTriple>, bool) = match ty {
        AffineType::B(_) | AffineType::C(_) => (dorey_closed_all(ty)?, false),
        AffineType::F4 | AffineType::G2 => (conjectural_dorey(ty)?.into_iter().collect(), true),
        _ => return Err(arq_core::Error::Unsupported(format!("no Dorey data for {}", ty.name())).into()),
    };
    let mut keys: BTreeSet<(usize, usize, usize)> = expected.iter().map(|t| (t.i, t.j, t.k)).collect();
    if !contain {
        keys.extend(computed.iter().map(|t| (t.i, t.j, t.k)));
    }
    let mut out = Vec::new();
    for (i, j, k) in keys {
        let pick = |s: &BTreeSet<DoreyTriple>| -> Vec<DoreyTriple> {
            s.iter().filter(|t| (t.i, t.j, t.k) == (i, j, k)).copied().collect()
        };
        let e = pick(&expected);
        let c = pick(&computed);
        let matches = if contain { e.iter().all(|t| c.contains(t)) } else { e == c };
        out.push(Record {
            ty: format!("{}:{}", ty.name(), k),
            k: i,
            l: j,
            expected: triples_text(&e.iter().collect::<Vec<_>>()),
            computed: triples_text(&c.iter().collect::<Vec<_>>()),
            matches,
        });
    }
    Ok(out)
}

/// Shape labels against β-sequence labels on every class of the twisted cluster point.
pub fn label_check(ty: CartanType) -> CliResult<Check> {
    let aut = Automorphism::standard(ty)?;
    let cl = twisted_cluster(root_system(ty), &aut, CLUSTER_MAX)?;
    let mut bad = Vec::new();
    for c in &cl {
        let q = ArQuiver::from_class(c, &aut)?;
        let ok = match label_from_shape(ty, &q.shape(true)) {
            Ok(labels) => q.vertices.iter().zip(&labels).all(|(v, r)| q.rs.root(v.root) == r),
            Err(_) => false,
        };
        if !ok {
            bad.push(c.word().to_vec());
        }
    }
    let detail = match bad.first() {
        None => format!("{} classes", cl.len()),
        Some(w) => format!("{} of {} classes differ, first {w:?}", bad.len(), cl.len()),
    };
    Ok(Check::new(format!("labels {}", ty.name()), bad.is_empty(), detail))
}

/// Twisted folds with the cluster points they are checked on.
pub fn twisted_folds() -> Vec<(CartanType, FoldKind)> {
    vec![
        (CartanType::a(3), FoldKind::B),
        (CartanType::a(5), FoldKind::B),
        (CartanType::d(4), FoldKind::C),
        (CartanType::d(5), FoldKind::C),
        (CartanType::d(6), FoldKind::C),
        (CartanType::e6(), FoldKind::F),
        (CartanType::d(4), FoldKind::G),
        (CartanType::d(4), FoldKind::GSquared),
    ]
}

fn fold_tag(ty: CartanType, k: FoldKind) -> String {
    format!("{} {:?}", ty.name(), k)
}

/// Foldability, swings, twisted additivity, key stability under random
/// readings and constancy of folded distance polynomials.
pub fn invariants(rng: &mut StdRng, samples: usize) -> CliResult<Vec<Check>> {
    let mut out = Vec::new();
    for (ty, k) in twisted_folds() {
        let aut = Automorphism::new(ty, k)?;
        let cl = twisted_cluster(root_system(ty), &aut, CLUSTER_MAX)?;
        let tag = fold_tag(ty, k);

        let mut quivers = Vec::new();
        let mut unfoldable = 0;
        for c in &cl {
            match ArQuiver::from_class(c, &aut) {
                Ok(q) => quivers.push(q),
                Err(_) => unfoldable += 1,
            }
        }
        out.push(Check::new(
            format!("foldable {tag}"),
            unfoldable == 0,
            format!("{} of {} classes fold", cl.len() - unfoldable, cl.len()),
        ));

        if k == FoldKind::C {
            let n = ty.rank() - 1;
            let mut bad = 0;
            for q in &quivers {
                let ok = match swings(q) {
                    Ok(sw) => {
                        let comps: BTreeSet<Option<usize>> = sw.iter().map(|s| s.component).collect();
                        sw.len() == n && comps.len() == n && !comps.contains(&None)
                    }
                    Err(_) => false,
                };
                if !ok {
                    bad += 1;
                }
            }
            out.push(Check::new(
                format!("swings {tag}"),
                bad == 0,
                format!("{n} swings with distinct components on {} of {} quivers", quivers.len() - bad, quivers.len()),
            ));
        }

        let mut applicable = 0;
        let mut failed = 0;
        for q in &quivers {
            for v in &q.vertices {
                match twisted_additive_check(q, v.root) {
                    Additive::Holds => applicable += 1,
                    Additive::Fails => failed += 1,
                    Additive::NotApplicable => {}
                }
            }
        }
        out.push(Check::new(
            format!("additive {tag}"),
            failed == 0 && applicable > 0,
            format!("{applicable} applicable vertices, {failed} failures"),
        ));

        let mut unstable = 0;
        for c in &cl {
            for _ in 0..samples {
                let w = c.reading_with(|n| rng.gen_range(0..n));
                match Class::new(c.root_system().clone(), &w) {
                    Ok(c2) if c2.key() == c.key() && c2.arrows() == c.arrows() => {}
                    _ => unstable += 1,
                }
            }
        }
        out.push(Check::new(
            format!("canonical key {tag}"),
            unstable == 0,
            format!("{samples} random readings per class, {unstable} disagree"),
        ));

        let mut tables = BTreeSet::new();
        for c in &cl {
            tables.insert(folded_distance_polynomials(c, &aut)?);
        }
        out.push(Check::new(
            format!("distance polynomials {tag}"),
            tables.len() == 1,
            format!("{} distinct tables over {} classes", tables.len(), cl.len()),
        ));
    }
    Ok(out)
}

/// Automorphisms for which twisted Dynkin quivers are sampled.
pub fn tdq_automorphisms() -> Vec<Automorphism> {
    let mut v: Vec<Automorphism> =
        [CartanType::a(5), CartanType::a(7), CartanType::d(4), CartanType::d(5), CartanType::e6()]
            .into_iter()
            .map(|ty| Automorphism::standard(ty).expect("standard automorphism"))
            .collect();
    v.push(Automorphism::new(CartanType::d(4), FoldKind::G).expect("triality"));
    v.push(Automorphism::new(CartanType::d(4), FoldKind::GSquared).expect("triality squared"));
    v
}

/// A random reduced word adapted to `q`: pick a sink that keeps the word
/// reduced, reflect, repeat. `None` if no such sink is left before `len`.
pub fn random_adapted_word(q: &TwistedDynkinQuiver, len: usize, rng: &mut StdRng) -> Option<Vec<usize>> {
    let ty = q.automorphism().cartan_type();
    let mut cur = q.clone();
    let mut w = Vec::with_capacity(len);
    for _ in 0..len {
        let ok: Vec<usize> = cur
            .sinks()
            .into_iter()
            .filter(|&i| {
                w.push(i);
                let r = is_reduced(ty, &w);
                w.pop();
                r
            })
            .collect();
        if ok.is_empty() {
            return None;
        }
        let i = ok[rng.gen_range(0..ok.len())];
        w.push(i);
        cur = cur.reflect(i);
    }
    Some(w)
}

/// Round trip through `build_tdq`, adapted words lie in the class, and (type
/// `D`) readings of the class are adapted. `exhaustive` bounds the number of
/// readings checked one by one; larger classes are sampled.
pub fn tdq_checks(rng: &mut StdRng, per_type: usize, exhaustive: u64) -> CliResult<Vec<Check>> {
    let mut out = Vec::new();
    for aut in tdq_automorphisms() {
        let ty = aut.cartan_type();
        let tag = fold_tag(ty, aut.kind());
        let rs = root_system(ty);
        let all = enumerate_tdq(&aut)?;
        let n = ty.num_positive_roots();
        let mut round = 0;
        let mut outside = 0;
        let mut not_adapted = 0;
        let mut readings = 0u64;
        let mut exhaustive_all = true;
        for _ in 0..per_type {
            let q = &all[rng.gen_range(0..all.len())];
            let tc = q.phi()?;
            if &build_tdq(&tc)? != q {
                round += 1;
            }
            let class = q.class(rs.clone())?;
            for _ in 0..4 {
                let inside = random_adapted_word(q, n, rng).map(|w| Class::new(rs.clone(), &w).map(|c| c == class));
                if !matches!(inside, Some(Ok(true))) {
                    outside += 1;
                }
            }
            if ty.family() == arq_core::Family::D {
                let total = class.count_readings(exhaustive + 1);
                let ws = if total <= exhaustive {
                    class.compatible_readings(total as usize)
                } else {
                    exhaustive_all = false;
                    (0..32).map(|_| class.reading_with(|m| rng.gen_range(0..m))).collect()
                };
                for w in ws {
                    readings += 1;
                    if !is_adapted_to_tdq(&w, q) {
                        not_adapted += 1;
                    }
                }
            }
        }
        out.push(Check::new(format!("tdq round trip {tag}"), round == 0, format!("{per_type} quivers, {round} fail")));
        out.push(Check::new(
            format!("adapted words in class {tag}"),
            outside == 0,
            format!("{} words, {outside} outside", 4 * per_type),
        ));
        if ty.family() == arq_core::Family::D {
            let how = if exhaustive_all { "all" } else { "some classes sampled" };
            out.push(Check::new(
                format!("class readings adapted {tag}"),
                not_adapted == 0,
                format!("{readings} readings ({how}), {not_adapted} not adapted"),
            ));
        }
    }
    Ok(out)
}

/// Tops, sorted arrows and twisted Coxeter word of one twisted Dynkin quiver.
pub type TdqRow = (Vec<usize>, Vec<(usize, usize)>, Vec<usize>);

/// Table keyed by the twisted Coxeter word, for the `tdq` listing.
pub fn tdq_listing(aut: &Automorphism) -> CliResult<Vec<TdqRow>> {
    let mut out = Vec::new();
    for q in enumerate_tdq(aut)? {
        let tc = q.phi()?;
        let mut arrows = q.arrows();
        arrows.sort_unstable();
        out.push((q.tops().to_vec(), arrows, tc.word().to_vec()));
    }
    Ok(out)
}

pub fn folded_table(
    class: &Class,
    aut: &Automorphism,
) -> CliResult<BTreeMap<(usize, usize), arq_core::distpoly::QProduct>> {
    Ok(folded_distance_polynomials(class, aut)?)
}
