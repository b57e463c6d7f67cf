//! Command-line front end.
//!
//! [`run_command`] parses an argument vector and runs one computation; the
//! `schubert` binary only prints the result. Exit status is 0 on success, 2 on
//! usage errors (including malformed literals and the size cap) and 1 on
//! domain errors.

mod output;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;

pub use output::{OutputMode, Payload};

use crate::comb::{bruhat_leq, hooks_and_syt_count, partitions_in_box, q_binomial, Partition, Permutation, Rect};
use crate::error::Error;
use crate::flag::{flag_poincare, flag_product, monk_multiply, schubert_polynomial, stability_check, FlClassSum};
use crate::grassmannian::{
    gr_poincare, gr_product, is_decomposable, pieri_multiply, plucker_quadrics_k2, schubert_degree_gr, GrClassSum,
};
use crate::gz::{
    demazure_character, demazure_points, enumerate_reduced_kogan_faces, flag_schubert_degree, gz_lattice_points,
    gz_volume_polynomial, kogan_face_word, kp_pairing, Weight,
};
use crate::pipedream::{enumerate_reduced, fk_polynomial};
use crate::poly::MultiPoly;
use crate::schur::{lr_coefficient, lr_expansion, schur_expand, schur_ssyt};

/// Environment variable bounding sizes accepted by the CLI.
pub const MAX_N_VAR: &str = "SCHUBERT_MAX_N";
pub const DEFAULT_MAX_N: usize = 7;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    /// The arguments as given, joined by spaces.
    pub command: String,
    pub mode: OutputMode,
    pub status: i32,
    pub payload: Option<Payload>,
    /// Diagnostic for stderr, or help text when `payload` is absent and status is 0.
    pub message: Option<String>,
}

impl CommandResult {
    pub fn is_success(&self) -> bool {
        self.status == EXIT_OK
    }
}

/// Payload rendering; JSON documents keep keys in the library's basis order.
pub fn format_output(result: &CommandResult, mode: OutputMode) -> Vec<u8> {
    match (&result.payload, mode) {
        (Some(p), OutputMode::Json) => output_json(p),
        (Some(p), OutputMode::Text) => p.to_text().into_bytes(),
        (None, _) => result.message.clone().unwrap_or_default().into_bytes(),
    }
}

/// The JSON document for a payload.
pub fn output_json(payload: &Payload) -> Vec<u8> {
    output::json_bytes(&payload.to_json())
}

#[derive(Parser, Debug)]
#[command(name = "schubert", version, about = "Schubert calculus on Grassmannians and flag varieties")]
struct Cli {
    #[arg(long, value_enum, default_value_t = OutputMode::Text, global = true)]
    output: OutputMode,
    #[command(subcommand)]
    cmd: Top,
}

#[derive(Subcommand, Debug)]
enum Top {
    /// Cohomology of Gr(k, n).
    #[command(subcommand)]
    Gr(GrCmd),
    /// Cohomology of Fl(n) and Schubert polynomials.
    #[command(subcommand)]
    Flag(FlagCmd),
    /// Shorthand for `flag schubpoly`.
    Schubpoly(PermArg),
    /// Symmetric functions.
    #[command(subcommand)]
    Sym(SymCmd),
    /// Partitions, tableaux and permutations.
    #[command(subcommand)]
    Comb(CombCmd),
    /// Reduced pipe dreams.
    #[command(subcommand)]
    Pipedreams(PipeCmd),
    /// Gelfand–Zetlin polytopes.
    #[command(subcommand)]
    Gz(GzCmd),
}

#[derive(Args, Debug)]
struct PermArg {
    #[arg(long)]
    perm: String,
}

#[derive(Args, Debug)]
struct GrCtx {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum GrCmd {
    /// σ_class · σ_m.
    Pieri {
        #[command(flatten)]
        ctx: GrCtx,
        #[arg(long, default_value = "[]")]
        class: String,
        #[arg(long)]
        m: u32,
    },
    /// Product of a comma list of classes; an integer m stands for σ_m.
    Product {
        #[command(flatten)]
        ctx: GrCtx,
        #[arg(long)]
        classes: String,
    },
    /// Degree of a Schubert variety in the Plücker embedding.
    Degree {
        #[command(flatten)]
        ctx: GrCtx,
        #[arg(long, default_value = "[]")]
        class: String,
    },
    Poincare {
        #[command(flatten)]
        ctx: GrCtx,
    },
    /// Plücker quadrics of Gr(2, n), or a decomposability test for `--coords`.
    Plucker {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        coords: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum FlagCmd {
    Schubpoly(PermArg),
    /// σ_perm · σ_{s_i}.
    Monk {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        i: usize,
    },
    /// Product of the listed classes.
    Product {
        #[arg(long, num_args = 1.., required = true)]
        perms: Vec<String>,
    },
    Poincare {
        #[arg(long)]
        n: usize,
    },
    /// Compares 𝔖_{w×1} with 𝔖_w.
    Stability(PermArg),
}

#[derive(Subcommand, Debug)]
enum SymCmd {
    /// s_λ(x_1, ..., x_k).
    Schur {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        k: usize,
    },
    /// Schur expansion of a symmetric polynomial such as `x1^2 + x1*x2 + x2^2`.
    Expand {
        #[arg(long)]
        poly: String,
        /// Number of variables; defaults to the largest index used.
        #[arg(long)]
        k: Option<usize>,
    },
    /// c^ν_{λμ}, or the whole product s_λ s_μ without `--nu`.
    Lr {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum CombCmd {
    /// Partitions in the k × (n-k) box.
    Partitions {
        #[command(flatten)]
        ctx: GrCtx,
    },
    /// Number of standard Young tableaux.
    Syt {
        #[arg(long)]
        partition: String,
    },
    /// Gaussian binomial [n choose k]_q.
    Qbinom {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Whether v <= w in the Bruhat order.
    Bruhat {
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
}

#[derive(Subcommand, Debug)]
enum PipeCmd {
    List(PermArg),
    Poly(PermArg),
}

#[derive(Subcommand, Debug)]
enum GzCmd {
    Points {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        count: bool,
    },
    /// Reduced Kogan faces of a permutation with their words.
    Faces(PermArg),
    Demazure {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        lambda: String,
        /// Print only the dimension.
        #[arg(long)]
        dim: bool,
    },
    /// Volume polynomial, or its value at `--lambda`.
    Volume {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Khovanskii–Pukhlikov pairing of two Schubert classes.
    Pairing {
        #[arg(long)]
        w: String,
        #[arg(long)]
        v: String,
    },
    Degree {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        lambda: String,
    },
}

/// Failure while running a parsed command.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Run<T> = std::result::Result<T, Failure>;

/// Parses `argv` (without the program name) and runs the command.
pub fn run_command<S: AsRef<str>>(argv: &[S]) -> CommandResult {
    let args: Vec<&str> = argv.iter().map(AsRef::as_ref).collect();
    let command = args.join(" ");
    let mode = if args.windows(2).any(|w| w == ["--output", "json"]) || args.contains(&"--output=json") {
        OutputMode::Json
    } else {
        OutputMode::Text
    };
    let fail = |status, message: String| CommandResult { command: command.clone(), mode, status, payload: None, message: Some(message) };
    let cli = match Cli::try_parse_from(std::iter::once("schubert").chain(args.iter().copied())) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return fail(status, e.render().to_string());
        }
    };
    let max_n = match max_n() {
        Ok(m) => m,
        Err(msg) => return fail(EXIT_USAGE, msg),
    };
    match dispatch(cli.cmd, max_n) {
        Ok(payload) => CommandResult { command, mode: cli.output, status: EXIT_OK, payload: Some(payload), message: None },
        Err(Failure::Usage(m)) => fail(EXIT_USAGE, m),
        Err(Failure::Domain(m)) => fail(EXIT_DOMAIN, m),
    }
}

fn max_n() -> std::result::Result<usize, String> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| format!("{MAX_N_VAR} must be a positive integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn cap(size: usize, max_n: usize, what: &str) -> Run<()> {
    if size > max_n {
        return Err(Failure::Usage(format!("{what} = {size} exceeds {MAX_N_VAR} = {max_n}")));
    }
    Ok(())
}

fn partition(s: &str) -> Run<Partition> {
    Ok(s.parse()?)
}

fn perm(s: &str) -> Run<Permutation> {
    Ok(s.parse()?)
}

fn weight(s: &str) -> Run<Weight> {
    Ok(s.parse()?)
}

/// Splits on commas outside brackets: `1,[2,1],1` → `1`, `[2,1]`, `1`.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

fn class_list(s: &str) -> Run<Vec<Partition>> {
    split_top_level(s)
        .into_iter()
        .map(|item| {
            if item.starts_with('[') {
                partition(item)
            } else {
                item.parse::<u32>()
                    .map(Partition::row)
                    .map_err(|_| Failure::Usage(format!("class {item:?} is neither an integer nor a bracketed partition")))
            }
        })
        .collect()
}

fn gr_rect(ctx: &GrCtx, max_n: usize) -> Run<Rect> {
    cap(ctx.n, max_n, "n")?;
    Ok(Rect::grassmannian(ctx.k, ctx.n)?)
}

fn terms_of<K: ToString>(symbol: &str, it: impl IntoIterator<Item = (K, BigInt)>) -> Payload {
    Payload::Terms { symbol: symbol.into(), terms: it.into_iter().map(|(k, c)| (k.to_string(), c)).collect() }
}

fn gr_payload(x: &GrClassSum) -> Payload {
    terms_of("s", x.iter().map(|(p, c)| (p, c.clone())))
}

fn fl_payload(x: &FlClassSum) -> Payload {
    terms_of("S_", x.iter().map(|(w, c)| (w, c.clone())))
}

fn x_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn poly_payload(poly: MultiPoly, prefix: &str) -> Payload {
    let variables = if prefix == "q" && poly.nvars() == 1 {
        vec!["q".to_string()]
    } else {
        (1..=poly.nvars()).map(|i| format!("{prefix}{i}")).collect()
    };
    Payload::Polynomial { variables, poly }
}

fn dispatch(cmd: Top, max_n: usize) -> Run<Payload> {
    match cmd {
        Top::Gr(c) => gr(c, max_n),
        Top::Flag(c) => flag(c, max_n),
        Top::Schubpoly(a) => flag(FlagCmd::Schubpoly(a), max_n),
        Top::Sym(c) => sym(c, max_n),
        Top::Comb(c) => comb(c, max_n),
        Top::Pipedreams(c) => pipedreams(c, max_n),
        Top::Gz(c) => gz(c, max_n),
    }
}

fn gr(cmd: GrCmd, max_n: usize) -> Run<Payload> {
    match cmd {
        GrCmd::Pieri { ctx, class, m } => {
            let rect = gr_rect(&ctx, max_n)?;
            let x = GrClassSum::basis(rect, partition(&class)?)?;
            Ok(gr_payload(&pieri_multiply(&x, m)?))
        }
        GrCmd::Product { ctx, classes } => {
            let rect = gr_rect(&ctx, max_n)?;
            let mut acc = GrClassSum::one(rect);
            for p in class_list(&classes)? {
                acc = gr_product(&acc, &GrClassSum::basis(rect, p)?)?;
            }
            Ok(gr_payload(&acc))
        }
        GrCmd::Degree { ctx, class } => {
            gr_rect(&ctx, max_n)?;
            Ok(Payload::integer(BigInt::from(schubert_degree_gr(&partition(&class)?, ctx.k, ctx.n)?)))
        }
        GrCmd::Poincare { ctx } => {
            gr_rect(&ctx, max_n)?;
            Ok(poly_payload(gr_poincare(ctx.k, ctx.n)?, "q"))
        }
        GrCmd::Plucker { n, coords } => {
            cap(n, max_n, "n")?;
            match coords {
                Some(c) => {
                    let vals = split_top_level(&c)
                        .into_iter()
                        .map(|t| t.parse::<BigRational>().map_err(|_| Failure::Usage(format!("bad coordinate {t:?}"))))
                        .collect::<Run<Vec<_>>>()?;
                    Ok(Payload::Boolean(is_decomposable(&vals, n)?))
                }
                None => {
                    let sep = if n >= 10 { "_" } else { "" };
                    let names: Vec<String> =
                        (1..=n).flat_map(|a| (a + 1..=n).map(move |b| format!("p{a}{sep}{b}"))).collect();
                    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                    let items = plucker_quadrics_k2(n).iter().map(|r| r.to_poly(n).display_with(&refs).to_string()).collect();
                    Ok(Payload::Listing(items))
                }
            }
        }
    }
}

fn flag(cmd: FlagCmd, max_n: usize) -> Run<Payload> {
    let checked = |s: &str| -> Run<Permutation> {
        let w = perm(s)?;
        cap(w.n(), max_n, "n")?;
        Ok(w)
    };
    match cmd {
        FlagCmd::Schubpoly(a) => {
            let w = checked(&a.perm)?;
            let n = w.n();
            let p = schubert_polynomial(&w).poly;
            // x_n never occurs; drop it from the listing
            let p = p.with_nvars(n.saturating_sub(1).max(1))?;
            Ok(Payload::Polynomial { variables: x_names(p.nvars()), poly: p })
        }
        FlagCmd::Monk { perm: p, i } => {
            let w = checked(&p)?;
            Ok(fl_payload(&monk_multiply(&FlClassSum::basis(w), i)?))
        }
        FlagCmd::Product { perms } => {
            let ws = perms.iter().map(|s| checked(s)).collect::<Run<Vec<_>>>()?;
            let mut acc = FlClassSum::one(ws[0].n());
            for w in ws {
                acc = flag_product(&acc, &FlClassSum::basis(w))?;
            }
            Ok(fl_payload(&acc))
        }
        FlagCmd::Poincare { n } => {
            cap(n, max_n, "n")?;
            Ok(poly_payload(flag_poincare(n)?, "q"))
        }
        FlagCmd::Stability(a) => {
            let w = checked(&a.perm)?;
            Ok(Payload::Boolean(stability_check(&w, w.n())?))
        }
    }
}

fn sym(cmd: SymCmd, max_n: usize) -> Run<Payload> {
    match cmd {
        SymCmd::Schur { partition: p, k } => {
            cap(k, max_n, "k")?;
            let lambda = partition(&p)?;
            Ok(Payload::Polynomial { variables: x_names(k), poly: schur_ssyt(&lambda, k) })
        }
        SymCmd::Expand { poly, k } => {
            let f: MultiPoly = poly.parse()?;
            let f = match k {
                Some(k) => f.with_nvars(k)?,
                None => f,
            };
            cap(f.nvars(), max_n, "k")?;
            let e = schur_expand(&f)?;
            Ok(terms_of("s", e.iter().map(|(p, c)| (p, c.clone()))))
        }
        SymCmd::Lr { lambda, mu, nu } => {
            let (l, m) = (partition(&lambda)?, partition(&mu)?);
            // every ν in s_λ s_μ has at most ℓ(λ) + ℓ(μ) rows
            let rows = l.len() + m.len();
            cap(rows, max_n, "ℓ(λ) + ℓ(μ)")?;
            match nu {
                Some(nu) => Ok(Payload::integer(lr_coefficient(&l, &m, &partition(&nu)?))),
                None => {
                    let e = lr_expansion(&l, &m, rows.max(1));
                    Ok(terms_of("s", e.iter().map(|(p, c)| (p, c.clone()))))
                }
            }
        }
    }
}

fn comb(cmd: CombCmd, max_n: usize) -> Run<Payload> {
    match cmd {
        CombCmd::Partitions { ctx } => {
            let rect = gr_rect(&ctx, max_n)?;
            Ok(Payload::Listing(partitions_in_box(rect).iter().map(ToString::to_string).collect()))
        }
        CombCmd::Syt { partition: p } => Ok(Payload::integer(BigInt::from(hooks_and_syt_count(&partition(&p)?).1))),
        CombCmd::Qbinom { n, k } => {
            cap(n as usize, max_n, "n")?;
            Ok(poly_payload(q_binomial(n, k)?, "q"))
        }
        CombCmd::Bruhat { v, w } => {
            let (v, w) = (perm(&v)?, perm(&w)?);
            cap(v.n().max(w.n()), max_n, "n")?;
            Ok(Payload::Boolean(bruhat_leq(&v, &w)?))
        }
    }
}

fn pipedreams(cmd: PipeCmd, max_n: usize) -> Run<Payload> {
    let (PipeCmd::List(a) | PipeCmd::Poly(a)) = &cmd;
    let w = perm(&a.perm)?;
    cap(w.n(), max_n, "n")?;
    match cmd {
        PipeCmd::List(_) => Ok(Payload::Listing(
            enumerate_reduced(&w)
                .iter()
                .map(|d| {
                    let cs: Vec<String> = d.crosses().iter().map(|(i, j)| format!("({i},{j})")).collect();
                    format!("{{{}}}", cs.join(", "))
                })
                .collect(),
        )),
        PipeCmd::Poly(_) => {
            let p = fk_polynomial(&w).with_nvars(w.n().saturating_sub(1).max(1))?;
            Ok(Payload::Polynomial { variables: x_names(p.nvars()), poly: p })
        }
    }
}

fn gz(cmd: GzCmd, max_n: usize) -> Run<Payload> {
    let checked_weight = |s: &str| -> Run<Weight> {
        let l = weight(s)?;
        cap(l.n(), max_n, "n")?;
        Ok(l)
    };
    let checked_perm = |s: &str| -> Run<Permutation> {
        let w = perm(s)?;
        cap(w.n(), max_n, "n")?;
        Ok(w)
    };
    match cmd {
        GzCmd::Points { lambda, count } => {
            let l = checked_weight(&lambda)?;
            let pts = gz_lattice_points(&l)?;
            if count {
                Ok(Payload::integer(pts.len()))
            } else {
                Ok(Payload::Listing(pts.iter().map(ToString::to_string).collect()))
            }
        }
        GzCmd::Faces(a) => {
            let w = checked_perm(&a.perm)?;
            let items =
                enumerate_reduced_kogan_faces(&w).iter().map(|f| format!("{f} {}", kogan_face_word(f))).collect();
            Ok(Payload::Listing(items))
        }
        GzCmd::Demazure { perm: p, lambda, dim } => {
            let (w, l) = (checked_perm(&p)?, checked_weight(&lambda)?);
            if dim {
                return Ok(Payload::integer(demazure_points(&w, &l)?.len()));
            }
            let ch = demazure_character(&w, &l)?;
            Ok(terms_of("e^", ch.iter().map(|(mu, &m)| (mu, BigInt::from(m)))))
        }
        GzCmd::Volume { n, lambda } => {
            cap(n, max_n, "n")?;
            let p = gz_volume_polynomial(n)?;
            match lambda {
                Some(s) => {
                    let l = weight(&s)?;
                    if l.n() != n {
                        return Err(Failure::Domain(format!("weight {l} does not have {n} entries")));
                    }
                    Ok(Payload::Scalar(p.evaluate_int(l.entries())?))
                }
                None => Ok(poly_payload(p, "l")),
            }
        }
        GzCmd::Pairing { w, v } => {
            let (w, v) = (checked_perm(&w)?, checked_perm(&v)?);
            Ok(Payload::integer(kp_pairing(&w, &v, w.n())?))
        }
        GzCmd::Degree { perm: p, lambda } => {
            let (w, l) = (checked_perm(&p)?, checked_weight(&lambda)?);
            Ok(Payload::integer(BigInt::from(flag_schubert_degree(&w, &l)?)))
        }
    }
}
