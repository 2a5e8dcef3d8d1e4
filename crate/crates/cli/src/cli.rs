use std::ffi::OsString;
use std::io::Write;

use arq_core::arq::{adapted_class, DynkinQuiver};
use arq_core::denom::AffineType;
use arq_core::distpoly::{distance_polynomials, render_table, QProduct};
use arq_core::twisted::{
    canonical_twisted_coxeter, class_from_twisted_coxeter, enumerate_triply_twisted_coxeter, enumerate_twisted_coxeter,
    TwistedCoxeter,
};
use arq_core::{Automorphism, CartanType, Class, Error as CoreError, Family};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use serde_json::json;

use crate::doc::QuiverDocument;
use crate::error::{CliError, CliResult};
use crate::suites::{self, root_system, Check, Kind, Record};

#[derive(Parser, Debug)]
#[command(name = "arq", about = "AR-quivers, twisted and folded, of A/D/E Weyl groups")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write data here instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Cap on the number of listed items.
    #[arg(long, global = true)]
    limit: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Adapted,
    Twisted,
    Triply,
    TriplySquare,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Adapted => Kind::Adapted,
            KindArg::Twisted => Kind::Twisted,
            KindArg::Triply => Kind::Triply,
            KindArg::TriplySquare => Kind::TriplySquare,
        }
    }
}

#[derive(Args, Debug, Clone)]
struct TypeArgs {
    /// A, D or E; a rank suffix such as D4 is also accepted.
    #[arg(long = "type")]
    ty: String,
    #[arg(long)]
    rank: Option<usize>,
}

impl TypeArgs {
    fn required(ty: &Option<String>, rank: Option<usize>) -> CliResult<CartanType> {
        let ty = ty.clone().ok_or_else(|| CliError::Usage("--type is required".into()))?;
        TypeArgs { ty, rank }.cartan()
    }

    fn cartan(&self) -> CliResult<CartanType> {
        let s = self.ty.trim();
        let (fam, rest) = s.split_at(1.min(s.len()));
        let family = match fam {
            "A" | "a" => Family::A,
            "D" | "d" => Family::D,
            "E" | "e" => Family::E,
            _ => return Err(CliError::Usage(format!("unknown type {s}"))),
        };
        let suffix = if rest.is_empty() {
            None
        } else {
            Some(rest.parse::<usize>().map_err(|_| CliError::Usage(format!("bad type {s}")))?)
        };
        let rank = match (suffix, self.rank, family) {
            (Some(a), Some(b), _) if a != b => return Err(CliError::Usage(format!("{s} with --rank {b}"))),
            (Some(a), _, _) | (None, Some(a), _) => a,
            (None, None, Family::E) => 6,
            (None, None, _) => return Err(CliError::Usage("--rank is required".into())),
        };
        Ok(CartanType::new(family, rank)?)
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build, fold and export one quiver.
    Quiver {
        #[arg(long = "type")]
        ty: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
        /// Representative word, e.g. 123124123124 or 1,2,10.
        #[arg(long, alias = "word")]
        class: Option<String>,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        /// Read a JSON document instead of building one.
        #[arg(long, conflicts_with_all = ["class", "kind"])]
        import: Option<std::path::PathBuf>,
    },
    /// Enumerate or count the classes of a cluster point.
    Cluster {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value_t = KindArg::Adapted)]
        kind: KindArg,
        #[arg(long)]
        count: bool,
    },
    /// Enumerate twisted Coxeter elements.
    Tcox {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value_t = KindArg::Twisted)]
        kind: KindArg,
        #[arg(long)]
        count: bool,
    },
    /// Distance polynomials, folded for twisted kinds.
    Distpoly {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value_t = KindArg::Adapted)]
        kind: KindArg,
        #[arg(long, alias = "word")]
        class: Option<String>,
    },
    /// Run a verification suite; exits 1 on any mismatch
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Twisted Dynkin quivers and their twisted Coxeter elements.
    Tdq {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value_t = KindArg::Twisted)]
        kind: KindArg,
        #[arg(long)]
        count: bool,
    },
}

#[derive(Args, Debug, Clone)]
struct AffineArgs {
    /// A, B, C, D, F or G.
    #[arg(long)]
    affine: Option<String>,
    #[arg(long, default_value_t = 0)]
    n: usize,
}

impl AffineArgs {
    fn parse(&self) -> CliResult<AffineType> {
        let name = self.affine.as_deref().ok_or_else(|| CliError::Usage("--affine is required".into()))?;
        let n = match (name, self.n) {
            ("F" | "f" | "F4", _) => 4,
            ("G" | "g" | "G2", _) => 2,
            (_, 0) => return Err(CliError::Usage("--n is required".into())),
            (_, n) => n,
        };
        AffineType::parse(name, n).map_err(|e| CliError::Usage(e.to_string()))
    }
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Denominator formulas against distance polynomials.
    Denom {
        #[command(flatten)]
        affine: AffineArgs,
        /// Check the B factorization through A_{2n} instead; uses --n.
        #[arg(long)]
        factorization: bool,
    },
    /// Dorey's rule against minimal pairs.
    Dorey {
        #[command(flatten)]
        affine: AffineArgs,
    },
    /// Shape labels against β-sequence labels.
    Labels {
        #[arg(long = "type")]
        ty: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Randomized structural invariants on the twisted cluster points.
    Invariants {
        /// Random readings per class.
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
    /// Sampled twisted Dynkin quivers (`--limit` per type, default 20).
    Tdq,
}

/// Parse `args`, run, write data to `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let written = match &cli.out {
                Some(p) => std::fs::write(p, &o.data),
                None => out.write_all(o.data.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "arq: {e}");
                return 1;
            }
            if !o.notes.is_empty() {
                let _ = err.write_all(o.notes.as_bytes());
            }
            if o.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "arq: {e}");
            e.exit_code()
        }
    }
}

struct Output {
    data: String,
    notes: String,
    ok: bool,
}

impl Output {
    fn data(data: String) -> Self {
        Output { data, notes: String::new(), ok: true }
    }
}

pub fn parse_word(s: &str) -> CliResult<Vec<usize>> {
    let s = s.trim();
    let bad = || CliError::Usage(format!("bad word {s}"));
    if s.contains(|c: char| c == ',' || c.is_whitespace()) {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| bad()))
            .collect()
    } else {
        s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect()
    }
}

pub fn format_word(w: &[usize]) -> String {
    if w.iter().all(|&i| i < 10) {
        w.iter().map(|i| i.to_string()).collect()
    } else {
        // a trailing comma keeps a one-letter word like "10," from reading as digits
        let mut s = w.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        if w.len() == 1 {
            s.push(',');
        }
        s
    }
}

fn limited<T>(v: Vec<T>, limit: Option<usize>) -> Vec<T> {
    match limit {
        Some(n) => v.into_iter().take(n).collect(),
        None => v,
    }
}

fn no_dot(f: Format, what: &str) -> CliResult<()> {
    if f == Format::Dot {
        return Err(CliError::Usage(format!("{what} has no dot format")));
    }
    Ok(())
}

fn json_line(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json value serializes");
    s.push('\n');
    s
}

/// The default class of a kind: an adapted class or the canonical twisted one.
fn default_class(ty: CartanType, kind: Kind) -> CliResult<Class> {
    let rs = root_system(ty);
    Ok(match kind {
        Kind::Adapted => {
            let q = DynkinQuiver::all(ty).into_iter().next().expect("at least one orientation");
            adapted_class(rs, &q)
        }
        _ => class_from_twisted_coxeter(rs, &canonical_twisted_coxeter(&kind.automorphism(ty)?)?)?,
    })
}

/// Fold with the first automorphism under which the coordinates are consistent.
fn auto_fold(class: &Class) -> CliResult<QuiverDocument> {
    let ty = class.cartan_type();
    let mut last = CliError::Core(CoreError::CoordinateClash);
    for k in [Kind::Adapted, Kind::Twisted, Kind::Triply] {
        let Ok(aut) = k.automorphism(ty) else { continue };
        match QuiverDocument::from_class(class, &aut) {
            Ok(d) => return Ok(d),
            Err(e) => last = e,
        }
    }
    Err(last)
}

fn execute(cli: &Cli) -> CliResult<Output> {
    let f = cli.format;
    match &cli.cmd {
        Cmd::Quiver { ty, rank, class, kind, import } => {
            let doc = if let Some(p) = import {
                QuiverDocument::from_json(&std::fs::read_to_string(p)?)?
            } else {
                let ty = TypeArgs::required(ty, *rank)?;
                let class = match class {
                    Some(w) => Class::new(root_system(ty), &parse_word(w)?)?,
                    None => default_class(ty, kind.map(Kind::from).unwrap_or(Kind::Adapted))?,
                };
                match kind {
                    Some(k) => QuiverDocument::from_class(&class, &Kind::from(*k).automorphism(ty)?)?,
                    None => auto_fold(&class)?,
                }
            };
            Ok(Output::data(match f {
                Format::Json => doc.to_json(),
                Format::Dot => doc.to_dot(),
                Format::Text => doc.to_text(),
            }))
        }
        Cmd::Cluster { ty, kind, count } => {
            no_dot(f, "cluster")?;
            let ty = ty.cartan()?;
            let cl = suites::cluster(ty, (*kind).into())?;
            let n = cl.len();
            if *count {
                return Ok(Output::data(match f {
                    Format::Json => json_line(json!({"schema": 1, "type": ty.name(), "count": n})),
                    _ => format!("{n}\n"),
                }));
            }
            let words: Vec<String> = limited(cl, cli.limit).iter().map(|c| format_word(c.word())).collect();
            Ok(Output::data(match f {
                Format::Json => json_line(json!({"schema": 1, "type": ty.name(), "count": n, "classes": words})),
                _ => words.iter().map(|w| format!("{w}\n")).collect(),
            }))
        }
        Cmd::Tcox { ty, kind, count } => {
            no_dot(f, "tcox")?;
            let ty = ty.cartan()?;
            let all: Vec<TwistedCoxeter> = match kind {
                KindArg::Adapted => return Err(CliError::Usage("tcox needs a twisted kind".into())),
                KindArg::Triply if ty == CartanType::d(4) => enumerate_triply_twisted_coxeter(),
                k => enumerate_twisted_coxeter(&Kind::from(*k).automorphism(ty)?)?,
            };
            let n = all.len();
            if *count {
                return Ok(Output::data(match f {
                    Format::Json => json_line(json!({"schema": 1, "type": ty.name(), "count": n})),
                    _ => format!("{n}\n"),
                }));
            }
            let rows: Vec<(String, String)> = limited(all, cli.limit)
                .iter()
                .map(|t| (format_word(t.word()), format_word(&t.canonical_word())))
                .collect();
            Ok(Output::data(match f {
                Format::Json => {
                    let items: Vec<_> = rows.iter().map(|(w, c)| json!({"word": w, "canonical": c})).collect();
                    json_line(json!({"schema": 1, "type": ty.name(), "count": n, "elements": items}))
                }
                _ => rows.iter().map(|(w, c)| format!("{w} {c}\n")).collect(),
            }))
        }
        Cmd::Distpoly { ty, kind, class } => {
            no_dot(f, "distpoly")?;
            let ty = ty.cartan()?;
            let kind = Kind::from(*kind);
            let table = match (kind, class) {
                (Kind::Adapted, None) => distance_polynomials(ty)?,
                _ => {
                    let aut = kind.automorphism(ty)?;
                    let c = match class {
                        Some(w) => Class::new(root_system(ty), &parse_word(w)?)?,
                        None => default_class(ty, kind)?,
                    };
                    suites::folded_table(&c, &aut)?
                }
            };
            Ok(Output::data(match f {
                Format::Json => {
                    let items: Vec<_> = table
                        .iter()
                        .map(|((k, l), p): (&(usize, usize), &QProduct)| json!({"k": k, "l": l, "poly": p.to_string()}))
                        .collect();
                    json_line(json!({"schema": 1, "type": ty.name(), "polynomials": items}))
                }
                _ => render_table(&table),
            }))
        }
        Cmd::Verify { what } => {
            no_dot(f, "verify")?;
            verify(what, f, cli.seed, cli.limit)
        }
        Cmd::Tdq { ty, kind, count } => {
            no_dot(f, "tdq")?;
            let ty = ty.cartan()?;
            let aut: Automorphism = match kind {
                KindArg::Adapted => return Err(CliError::Usage("tdq needs a twisted kind".into())),
                k => Kind::from(*k).automorphism(ty)?,
            };
            let rows = suites::tdq_listing(&aut)?;
            let n = rows.len();
            if *count {
                return Ok(Output::data(match f {
                    Format::Json => json_line(json!({"schema": 1, "type": ty.name(), "count": n})),
                    _ => format!("{n}\n"),
                }));
            }
            let rows = limited(rows, cli.limit);
            Ok(Output::data(match f {
                Format::Json => {
                    let items: Vec<_> =
                        rows.iter().map(|(t, a, w)| json!({"tops": t, "arrows": a, "tcox": format_word(w)})).collect();
                    json_line(json!({"schema": 1, "type": ty.name(), "count": n, "quivers": items}))
                }
                _ => rows
                    .iter()
                    .map(|(t, a, w)| {
                        let arrows: Vec<String> = a.iter().map(|(s, d)| format!("{s}->{d}")).collect();
                        format!("tops {} arrows {} tcox {}\n", format_word(t), arrows.join(" "), format_word(w))
                    })
                    .collect(),
            }))
        }
    }
}

fn records_output(rs: Vec<Record>, f: Format) -> Output {
    let ok = rs.iter().all(|r| r.matches);
    let pass = rs.iter().filter(|r| r.matches).count();
    let data = match f {
        Format::Json => json_line(json!({"schema": 1, "records": rs})),
        _ => rs.iter().map(|r| format!("{r}\n")).collect(),
    };
    Output { data, notes: format!("{pass}/{} match\n", rs.len()), ok }
}

fn checks_output(cs: Vec<Check>, f: Format) -> Output {
    let ok = cs.iter().all(|c| c.pass);
    let pass = cs.iter().filter(|c| c.pass).count();
    let data = match f {
        Format::Json => json_line(json!({"schema": 1, "checks": cs})),
        _ => cs.iter().map(|c| format!("{c}\n")).collect(),
    };
    Output { data, notes: format!("{pass}/{} checks pass\n", cs.len()), ok }
}

fn verify(what: &VerifyCmd, f: Format, seed: u64, limit: Option<usize>) -> CliResult<Output> {
    match what {
        VerifyCmd::Denom { affine, factorization } => {
            if *factorization {
                if affine.n == 0 {
                    return Err(CliError::Usage("--n is required".into()));
                }
                return Ok(records_output(suites::factorization_records(affine.n)?, f));
            }
            Ok(records_output(suites::denom_records(affine.parse()?)?, f))
        }
        VerifyCmd::Dorey { affine } => Ok(records_output(suites::dorey_records(affine.parse()?)?, f)),
        VerifyCmd::Labels { ty, rank } => {
            let types = match ty {
                Some(_) => vec![TypeArgs::required(ty, *rank)?],
                None => vec![CartanType::a(5), CartanType::a(7), CartanType::d(4), CartanType::d(5)],
            };
            let mut cs = Vec::new();
            for t in types {
                cs.push(suites::label_check(t)?);
            }
            Ok(checks_output(cs, f))
        }
        VerifyCmd::Invariants { samples } => {
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            Ok(checks_output(suites::invariants(&mut rng, *samples)?, f))
        }
        VerifyCmd::Tdq => {
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            Ok(checks_output(suites::tdq_checks(&mut rng, limit.unwrap_or(20), 5000)?, f))
        }
    }
}
