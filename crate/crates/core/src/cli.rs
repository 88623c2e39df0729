//! Command-line surface: `construct`, `mul`, `verify`, `weight`, `bench`.
//!
//! Every command is a function returning its stdout text so it can be driven
//! from tests; the binary only parses arguments and maps errors to exit
//! codes.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::additive::{build_additive_context_with, AdditiveParams};
use crate::bench::{bench_family, path_name};
use crate::context_file;
use crate::convolution::{ConvPath, CyclicVector};
use crate::engine::{nb_frobenius, nb_multiply, GroupKind, NBElement, NormalBasisContext};
use crate::error::{Error, Result};
use crate::ff::FieldSpec;
use crate::kummer::{build_kummer_context_with, KummerParams};
use crate::lucas::{build_lucas_context_with, LucasParams, TorusPoint};
use crate::oracle::{compute_weight, oracle_frobenius, oracle_multiply, verify_normal};

#[derive(Parser, Debug)]
#[command(
    name = "nbasis",
    version,
    about = "Normal bases of cyclic extensions of finite fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Command {
    /// Build a context and write it as a context file.
    Construct(ConstructArgs),
    /// Multiply two elements given by their coordinates.
    Mul {
        context: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long, value_enum, default_value_t = PathArg::Auto)]
        path: PathArg,
    },
    /// Compare the engine against the polynomial-basis oracle.
    Verify {
        context: PathBuf,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the weight of the basis.
    Weight { context: PathBuf },
    /// Time multiplication over a family of contexts.
    Bench {
        #[arg(value_enum)]
        kind: KindArg,
        #[arg(long, value_delimiter = ',', default_value = "6,12,24,48")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = PathArg::Auto)]
        path: PathArg,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Additive,
    Kummer,
    Lucas,
}

impl From<KindArg> for GroupKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Additive => GroupKind::Additive,
            KindArg::Kummer => GroupKind::Multiplicative,
            KindArg::Lucas => GroupKind::Lucas,
        }
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum PathArg {
    #[default]
    Auto,
    Naive,
    Karatsuba,
    Ntt,
}

impl From<PathArg> for ConvPath {
    fn from(p: PathArg) -> Self {
        match p {
            PathArg::Auto => ConvPath::Auto,
            PathArg::Naive => ConvPath::Naive,
            PathArg::Karatsuba => ConvPath::Karatsuba,
            PathArg::Ntt => ConvPath::Ntt,
        }
    }
}

#[derive(Args, Debug, Default, Clone)]
pub struct ConstructArgs {
    #[arg(value_enum, required = true)]
    pub kind: Option<KindArg>,
    /// Characteristic (additive).
    #[arg(long)]
    pub p: Option<u64>,
    /// Defining polynomial of K over F_p, little-endian (additive).
    #[arg(long)]
    pub ext: Option<String>,
    /// Degree of K over F_p when --ext is absent (additive, default 2).
    #[arg(long)]
    pub degree: Option<usize>,
    /// Field order (kummer, lucas).
    #[arg(long)]
    pub q: Option<u64>,
    /// Full field description, e.g. "p=5;g=2,3,0,1".
    #[arg(long)]
    pub field: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long)]
    pub r: Option<String>,
    #[arg(long)]
    pub alpha: Option<String>,
    /// Torus generator "x|y".
    #[arg(long = "gen")]
    pub generator: Option<String>,
    /// Primitive mn-th root of unity (kummer).
    #[arg(long)]
    pub zeta: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = PathArg::Auto)]
    pub path: PathArg,
}

fn missing(flag: &str) -> Error {
    Error::InvalidParameter(format!("missing --{flag}"))
}

fn field_from(args: &ConstructArgs) -> Result<FieldSpec> {
    if let Some(f) = &args.field {
        return f.parse();
    }
    if let Some(q) = args.q {
        return FieldSpec::of_order(q);
    }
    let p = args.p.ok_or_else(|| missing("p"))?;
    match &args.ext {
        Some(g) => {
            let g = g
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            FieldSpec::new(p, g)
        }
        None => FieldSpec::with_degree(p, args.degree.unwrap_or(2)),
    }
}

/// Builds the context described by `construct` arguments.
pub fn build_context(args: &ConstructArgs) -> Result<NormalBasisContext> {
    let kind = args
        .kind
        .ok_or_else(|| Error::InvalidParameter("missing kind".into()))?;
    let k = field_from(args)?;
    let path: ConvPath = args.path.into();
    match kind {
        KindArg::Additive => {
            let mut params = AdditiveParams::with_defaults(&k)?;
            if let Some(a) = &args.a {
                params.a = k.parse_element(a)?;
            }
            if let Some(r) = &args.r {
                params.r = k.parse_element(r)?;
            }
            build_additive_context_with(&params, path)
        }
        KindArg::Kummer => {
            let n = args.n.ok_or_else(|| missing("n"))?;
            let m = match args.m {
                Some(m) => m,
                None => {
                    let m = (k.q() - 1) / n.max(1) as u64;
                    if m < 2 {
                        return Err(missing("m"));
                    }
                    m
                }
            };
            let mut params = KummerParams::with_defaults(&k, n, m)?;
            if let Some(a) = &args.a {
                params.a = k.parse_element(a)?;
            }
            if let Some(z) = &args.zeta {
                params.zeta_mn = k.parse_element(z)?;
            }
            build_kummer_context_with(&params, path)
        }
        KindArg::Lucas => {
            let n = args.n.ok_or_else(|| missing("n"))?;
            let mut params = LucasParams::with_defaults(&k, n)?;
            if let Some(al) = &args.alpha {
                params.alpha = k.parse_element(al)?;
            }
            if let Some(g) = &args.generator {
                params.generator = Some(TorusPoint::parse(&k, g)?);
            }
            build_lucas_context_with(&params, args.seed, path)
        }
    }
}

/// `construct`: returns `(context file text, summary)`.
pub fn cmd_construct(args: &ConstructArgs) -> Result<(String, String)> {
    let ctx = build_context(args)?;
    let text = context_file::to_text(&ctx);
    let report = verify_normal(&ctx);
    let mut summary = String::new();
    writeln!(summary, "kind {} over {} with n = {}", ctx.kind, ctx.base, ctx.n).unwrap();
    writeln!(summary, "weight {}", report.weight).unwrap();
    write!(summary, "{report}").unwrap();
    Ok((text, summary))
}

pub fn load_context(path: &std::path::Path) -> Result<NormalBasisContext> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    context_file::from_text(&text)
}

/// Parses coordinates: `c0,c1,…` with `n` prime-field residues, or `e0;e1;…`
/// with one field element per entry.
pub fn parse_coords(ctx: &NormalBasisContext, s: &str) -> Result<NBElement> {
    let s = s.trim();
    let v = if s.contains(';') || ctx.n == 1 {
        CyclicVector::parse(&ctx.base, s)?
    } else {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != ctx.n {
            return Err(Error::LengthMismatch {
                expected: ctx.n,
                got: parts.len(),
            });
        }
        let entries = parts
            .iter()
            .map(|t| ctx.base.parse_element(t))
            .collect::<Result<Vec<_>>>()?;
        CyclicVector::new(&ctx.base, entries)?
    };
    ctx.element(v)
}

/// Comma-separated residues when every coordinate is in `F_p`, otherwise the
/// `;`-separated vector form.
pub fn format_coords(x: &NBElement) -> String {
    match x.coords().to_u64s() {
        Some(v) => v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","),
        None => x.coords().to_string(),
    }
}

pub fn cmd_mul(ctx: &NormalBasisContext, x: &str, y: &str) -> Result<String> {
    let x = parse_coords(ctx, x)?;
    let y = parse_coords(ctx, y)?;
    Ok(format_coords(&nb_multiply(ctx, &x, &y)?))
}

/// `verify`: returns the report and whether every check passed.
pub fn cmd_verify(ctx: &NormalBasisContext, trials: usize, seed: u64) -> Result<(String, bool)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mul_ok = 0;
    let mut frob_ok = 0;
    for _ in 0..trials {
        let x = ctx.random(&mut rng);
        let y = ctx.random(&mut rng);
        let z = nb_multiply(ctx, &x, &y)?;
        if z == oracle_multiply(ctx, &x, &y)? {
            mul_ok += 1;
        }
        let fz = nb_frobenius(ctx, &z, 1)?;
        let commutes = fz == nb_multiply(ctx, &nb_frobenius(ctx, &x, 1)?, &nb_frobenius(ctx, &y, 1)?)?;
        if commutes && nb_frobenius(ctx, &x, 1)? == oracle_frobenius(ctx, &x)? {
            frob_ok += 1;
        }
    }
    let report = verify_normal(ctx);
    let ok = mul_ok == trials && frob_ok == trials && report.passed();
    let mut out = String::new();
    writeln!(out, "{mul_ok}/{trials} oracle matches").unwrap();
    writeln!(out, "{frob_ok}/{trials} frobenius matches").unwrap();
    write!(out, "{report}").unwrap();
    Ok((out, ok))
}

pub fn cmd_weight(ctx: &NormalBasisContext) -> Result<usize> {
    compute_weight(ctx)
}

pub fn cmd_bench(kind: GroupKind, sizes: &[usize], seed: u64, path: ConvPath) -> Result<String> {
    let rows = bench_family(kind, sizes, seed, path)?;
    let mut out = String::from("n\tq\tpath\tns/mul\tconvolutions\tpointwise\n");
    for r in rows {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            r.n,
            r.q,
            path_name(r.path),
            r.per_multiply.as_nanos(),
            r.ops.convolutions,
            r.ops.pointwise
        )
        .unwrap();
    }
    Ok(out)
}

/// Runs a parsed command line, printing to stdout and stderr. Returns the
/// process exit code.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Construct(args) => {
            let (text, summary) = cmd_construct(&args)?;
            match &args.out {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|e| {
                        Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))
                    })?;
                    println!("{summary}");
                }
                None => {
                    print!("{text}");
                    eprintln!("{summary}");
                }
            }
            Ok(0)
        }
        Command::Mul { context, x, y, path } => {
            let ctx = load_context(&context)?.with_path(path.into());
            println!("{}", cmd_mul(&ctx, &x, &y)?);
            Ok(0)
        }
        Command::Verify {
            context,
            trials,
            seed,
        } => {
            let ctx = load_context(&context)?;
            let (report, ok) = cmd_verify(&ctx, trials, seed)?;
            println!("{report}");
            Ok(if ok { 0 } else { 1 })
        }
        Command::Weight { context } => {
            println!("{}", cmd_weight(&load_context(&context)?)?);
            Ok(0)
        }
        Command::Bench {
            kind,
            sizes,
            seed,
            path,
        } => {
            print!("{}", cmd_bench(kind.into(), &sizes, seed, path.into())?);
            Ok(0)
        }
    }
}
