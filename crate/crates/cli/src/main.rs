//! `hopfore`: tensor products, ring arithmetic and verification suites for
//! H = kG(χ⁻¹, a, 0) from the command line.

mod config;
mod expr;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hopfore::decomp::{decompose, IndecLabel};
use hopfore::exactnum::Cyclotomic;
use hopfore::fusion::{tensor_labels_with, LastRangeStart};
use hopfore::greenring::{
    groth_to_x1, groth_to_x2, verify_presentation, PresentationConfig, Suite,
};
use hopfore::grouprep::AlgebraData;
use hopfore::hopfmod::{build, tensor};

use output::{DecompJson, FusionRow, FusionSummary, ModuleJson, ReportRow, RingJson, TensorJson};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad input; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// A computation disagreed or failed; exit code 1.
    #[error("{0}")]
    Mismatch(String),
}

impl From<expr::ExprError> for CliError {
    fn from(e: expr::ExprError) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "hopfore",
    version,
    about = "Exact representation theory of Hopf-Ore extensions kG(χ⁻¹, a, 0)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe an algebra: s, q, σ, ω and the orbit representatives I_0.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Decompose the tensor product of two indecomposables.
    Tensor(TensorArgs),
    /// Ring arithmetic.
    #[command(subcommand)]
    Ring(RingCmd),
    /// Verification suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Explicit module matrices.
    #[command(subcommand)]
    Module(ModuleCmd),
}

#[derive(Args, Debug, Clone)]
struct AlgebraOpt {
    /// Dihedral parameter m (odd, ≥ 3); the default algebra is m = 3.
    #[arg(long)]
    m: Option<u32>,
    /// Custom algebra JSON file.
    #[arg(long, value_name = "FILE")]
    algebra: Option<PathBuf>,
}

impl AlgebraOpt {
    fn load(&self) -> Result<Arc<AlgebraData>, CliError> {
        config::select(self.m, self.algebra.as_deref())
    }
}

#[derive(Subcommand, Debug)]
enum AlgebraCmd {
    /// kD_n with n = 2m.
    Dihedral {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        json: bool,
    },
    /// Algebra from a JSON description.
    Custom {
        #[arg(long, value_name = "FILE")]
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Matrix,
    Both,
}

/// Start of the last summand's index range in the p ≥ p' branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LastRange {
    P,
    Zero,
    Pprime,
}

impl From<LastRange> for LastRangeStart {
    fn from(r: LastRange) -> Self {
        match r {
            LastRange::P => LastRangeStart::P,
            LastRange::Zero => LastRangeStart::Zero,
            LastRange::Pprime => LastRangeStart::PPrime,
        }
    }
}

#[derive(Args, Debug)]
struct TensorArgs {
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
    #[arg(long, value_enum, default_value = "both")]
    method: Method,
    /// Alternative readings exist only to exhibit their failure.
    #[arg(long, value_enum, default_value = "p")]
    last_range: LastRange,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    alg: AlgebraOpt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RingKind {
    Green,
    Groth,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Basis {
    Canonical,
    X1,
    X2,
}

#[derive(Subcommand, Debug)]
enum RingCmd {
    /// Evaluate an expression such as `x^3 - 3*x` or `y*w[2]`.
    Mul {
        #[arg(long, value_enum)]
        ring: RingKind,
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum, default_value = "canonical")]
        basis: Basis,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        alg: AlgebraOpt,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Closed-form fusion against matrix decomposition on a label grid.
    Fusion {
        #[command(flatten)]
        alg: AlgebraOpt,
        /// Longest V[t](i) in the grid.
        #[arg(long, default_value_t = 3)]
        tmax: u32,
        /// Longest V[t](i;β) in the grid.
        #[arg(long, default_value_t = 2)]
        eig_tmax: u32,
        #[arg(long, default_value = "1,-1,2,1/2")]
        betas: String,
        #[arg(long)]
        json: bool,
    },
    /// Ring presentation identities for the dihedral family.
    Presentation {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value = "1,-1,2")]
        betas: String,
        #[arg(long, default_value_t = 3)]
        tmax: u32,
        #[arg(long, value_parser = parse_suite, default_value = "combined")]
        suite: Suite,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum ModuleCmd {
    /// Write the matrices of an indecomposable as JSON.
    Export {
        #[arg(long)]
        label: String,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
        #[command(flatten)]
        alg: AlgebraOpt,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::parse(s).ok_or_else(|| {
        let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
        format!("unknown suite `{s}`; expected one of {}", names.join(", "))
    })
}

fn parse_betas(list: &str, order: u32) -> Result<Vec<Cyclotomic>, CliError> {
    let mut out = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let b = Cyclotomic::parse(item, order)
            .map_err(|e| CliError::Usage(format!("bad β `{item}`: {e}")))?;
        if b.is_zero() {
            return Err(CliError::Usage("β = 0 is not allowed".into()));
        }
        if !out.contains(&b) {
            out.push(b);
        }
    }
    Ok(out)
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable output")
}

fn algebra_cmd(cmd: AlgebraCmd) -> Result<String, CliError> {
    let (alg, json) = match cmd {
        AlgebraCmd::Dihedral { m, json } => (config::dihedral(m)?, json),
        AlgebraCmd::Custom { file, json } => (Arc::new(config::load_custom(&file)?), json),
    };
    let s = config::summary(&alg);
    Ok(if json {
        to_json(&s)
    } else {
        config::render_summary(&s)
    })
}

fn closed_decomposition(
    alg: &AlgebraData,
    l: &IndecLabel,
    r: &IndecLabel,
    reading: LastRangeStart,
) -> Result<DecompJson, CliError> {
    let m = tensor_labels_with(alg, l, r, reading).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(DecompJson::new(alg, &m, None))
}

fn matrix_decomposition(
    alg: &Arc<AlgebraData>,
    l: &IndecLabel,
    r: &IndecLabel,
) -> Result<DecompJson, CliError> {
    let usage = |e: hopfore::hopfmod::HopfError| CliError::Usage(e.to_string());
    let module = tensor(
        &build(alg, l).map_err(usage)?,
        &build(alg, r).map_err(usage)?,
    )
    .map_err(usage)?;
    let d = decompose(&module, &[]).map_err(|e| CliError::Mismatch(e.to_string()))?;
    Ok(DecompJson::new(
        alg,
        &d.multiset,
        Some(&d.eigenvalues_found),
    ))
}

fn tensor_cmd(a: TensorArgs) -> Result<String, CliError> {
    let alg = a.alg.load()?;
    let l = expr::parse_label(&a.left, &alg)?;
    let r = expr::parse_label(&a.right, &alg)?;
    let closed = matches!(a.method, Method::Closed | Method::Both)
        .then(|| closed_decomposition(&alg, &l, &r, a.last_range.into()))
        .transpose()?;
    let matrix = matches!(a.method, Method::Matrix | Method::Both)
        .then(|| matrix_decomposition(&alg, &l, &r))
        .transpose()?;
    let agree = match (&closed, &matrix) {
        (Some(c), Some(m)) => Some(c.components == m.components),
        _ => None,
    };
    let out = TensorJson {
        left: l.display(&alg),
        right: r.display(&alg),
        closed,
        matrix,
        agree,
    };
    let text = if a.json {
        to_json(&out)
    } else {
        let mut lines = Vec::new();
        if let Some(c) = &out.closed {
            lines.push(format!("closed: {}", c.render()));
        }
        if let Some(m) = &out.matrix {
            lines.push(format!("matrix: {}", m.render()));
        }
        if let Some(ok) = agree {
            lines.push(format!("agree: {ok}"));
        }
        lines.join("\n")
    };
    match agree {
        Some(false) => Err(CliError::Mismatch(text)),
        _ => Ok(text),
    }
}

fn ring_cmd(cmd: RingCmd) -> Result<String, CliError> {
    let RingCmd::Mul {
        ring,
        expr: src,
        basis,
        json,
        alg,
    } = cmd;
    let alg = alg.load()?;
    let e = expr::parse(&src, &alg)?;
    let usage = |e: hopfore::greenring::GreenError| CliError::Usage(e.to_string());
    let value = match (ring, basis) {
        (RingKind::Green, Basis::Canonical) => expr::eval_green(&e, &alg)?.display(&alg),
        (RingKind::Green, _) => {
            return Err(CliError::Usage(
                "the x1 and x2 bases are views of the Grothendieck ring".into(),
            ))
        }
        (RingKind::Groth, b) => {
            let g = expr::eval_groth(&e, &alg)?;
            match b {
                Basis::Canonical => g.display(&alg),
                Basis::X1 => groth_to_x1(&alg, &g).map_err(usage)?.display(&alg),
                Basis::X2 => groth_to_x2(&alg, &g).map_err(usage)?.display(&alg),
            }
        }
    };
    Ok(if json {
        let ring = match ring {
            RingKind::Green => "green",
            RingKind::Groth => "groth",
        };
        let basis = match basis {
            Basis::Canonical => "canonical",
            Basis::X1 => "x1",
            Basis::X2 => "x2",
        };
        to_json(&RingJson {
            ring: ring.into(),
            basis: basis.into(),
            expr: src,
            value,
        })
    } else {
        value
    })
}

fn fusion_grid(
    alg: &AlgebraData,
    tmax: u32,
    eig_tmax: u32,
    betas: &[Cyclotomic],
) -> Vec<IndecLabel> {
    let mut labels = Vec::new();
    for i in alg.simple_ids() {
        for t in 1..=tmax {
            labels.push(IndecLabel::Nil { i, t });
        }
    }
    for i in alg.orbit_reps() {
        for t in 1..=eig_tmax {
            for b in betas {
                labels.push(IndecLabel::Eig {
                    i,
                    t,
                    beta: b.clone(),
                });
            }
        }
    }
    labels
}

fn verify_fusion(
    alg: Arc<AlgebraData>,
    tmax: u32,
    eig_tmax: u32,
    betas: &str,
    json: bool,
) -> Result<String, CliError> {
    use rayon::prelude::*;
    if !alg.fusion_ready() {
        return Err(CliError::Usage(format!(
            "|q| = {} differs from |χ| = {}; no fusion rules",
            alg.q_order(),
            alg.s()
        )));
    }
    let betas = parse_betas(betas, alg.order())?;
    let labels = fusion_grid(&alg, tmax, eig_tmax, &betas);
    let pairs: Vec<(usize, usize)> = (0..labels.len())
        .flat_map(|a| (0..labels.len()).map(move |b| (a, b)))
        .collect();
    let rows: Vec<FusionRow> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let (l, r) = (&labels[a], &labels[b]);
            let closed = closed_decomposition(&alg, l, r, LastRangeStart::P)
                .map(|d| d.render())
                .unwrap_or_else(|e| format!("error: {e}"));
            let matrix = matrix_decomposition(&alg, l, r)
                .map(|d| d.render())
                .unwrap_or_else(|e| format!("error: {e}"));
            let agree = !closed.starts_with("error") && closed == matrix;
            FusionRow {
                left: l.display(&alg),
                right: r.display(&alg),
                closed,
                matrix,
                agree,
            }
        })
        .collect();
    let mismatches = rows.iter().filter(|r| !r.agree).count();
    let summary = FusionSummary {
        labels: labels.len(),
        pairs: rows.len(),
        mismatches,
        rows,
    };
    let text = if json {
        to_json(&summary)
    } else {
        let mut out = String::from("left\tright\tclosed\tmatrix\tagree\n");
        for r in &summary.rows {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                r.left, r.right, r.closed, r.matrix, r.agree
            ));
        }
        out.push_str(&format!(
            "# {} labels, {} pairs, {} mismatches",
            summary.labels, summary.pairs, summary.mismatches
        ));
        out
    };
    if mismatches > 0 {
        Err(CliError::Mismatch(text))
    } else {
        Ok(text)
    }
}

fn verify_cmd(cmd: VerifyCmd) -> Result<String, CliError> {
    match cmd {
        VerifyCmd::Fusion {
            alg,
            tmax,
            eig_tmax,
            betas,
            json,
        } => verify_fusion(alg.load()?, tmax, eig_tmax, &betas, json),
        VerifyCmd::Presentation {
            m,
            betas,
            tmax,
            suite,
            json,
        } => {
            let alg = config::dihedral(m)?;
            let betas = parse_betas(&betas, alg.order())?;
            let report = verify_presentation(&alg, suite, &PresentationConfig { betas, tmax })
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let rows: Vec<ReportRow> = report.checks.iter().map(ReportRow::from).collect();
            let failed = rows.iter().filter(|r| r.status == "fail").count();
            let text = if json {
                to_json(&rows)
            } else {
                let mut out = String::new();
                for r in &rows {
                    out.push_str(&format!(
                        "{}\t{}\t[{}]\t{}\texpected {}\n",
                        r.status.to_uppercase(),
                        r.identity_name,
                        r.relation,
                        r.lhs,
                        r.rhs
                    ));
                }
                out.push_str(&format!(
                    "# {} of {} identities hold",
                    rows.len() - failed,
                    rows.len()
                ));
                out
            };
            if failed > 0 {
                Err(CliError::Mismatch(text))
            } else {
                Ok(text)
            }
        }
    }
}

fn module_cmd(cmd: ModuleCmd) -> Result<String, CliError> {
    let ModuleCmd::Export { label, out, alg } = cmd;
    let alg = alg.load()?;
    let l = expr::parse_label(&label, &alg)?;
    let module = build(&alg, &l).map_err(|e| CliError::Usage(e.to_string()))?;
    let doc = ModuleJson::new(&alg, &l, &module);
    std::fs::write(&out, to_json(&doc) + "\n")
        .map_err(|e| CliError::Usage(format!("{}: {e}", out.display())))?;
    Ok(format!(
        "wrote {} ({}-dimensional) to {}",
        l.display(&alg),
        module.dim(),
        out.display()
    ))
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Algebra(c) => algebra_cmd(c),
        Command::Tensor(a) => tensor_cmd(a),
        Command::Ring(c) => ring_cmd(c),
        Command::Verify(c) => verify_cmd(c),
        Command::Module(c) => module_cmd(c),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(CliError::Mismatch(text)) => {
            println!("{text}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
