//! Argument parsing and command dispatch.
//!
//! [`run`] never exits the process; it returns the exit code together with
//! everything destined for stdout and stderr, so tests can drive it directly.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use hopfaut_core::action::{ef_defect, hom_extend, ActionContext, ActionError, LiftConvention, QuotientModule};
use hopfaut_core::cokertab::{
    cyclic_dim_explicit, cyclic_word_dims, d_space_dim, h1_table, modular_dims, necklace_count, witt_dim, CokerError,
};
use hopfaut_core::freegroup::{Automorphism, FreeGroupError, GroupWord, NielsenGen};
use hopfaut_core::hopf::{AlgebraElement, HopfDescriptor, HopfError, TensorElement};
use hopfaut_core::nilrep::{quotient_character, rows_needed, NilRepError};
use hopfaut_core::pbw::{straighten_constants, PbwError};
use hopfaut_core::symfunc::{
    lr_mult, schur_of_l2, schur_of_sum, schur_of_wedge2, total_character, Partition, SchurPoly, SymFuncError,
};

use crate::format::{
    algebra_tsv, partition_text, schur_tsv, table_tsv, tensor_tsv, AlgebraJson, ObstructionJson, SchurJson, TensorJson,
};
use crate::parse::{parse_element, parse_schur, parse_tensor, ParseError};
use crate::verify::{run_suite, Options, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "hopfaut", version, about = "Exact computations with Aut(F_n) acting on tensor powers of Hopf algebras")]
pub struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    /// The tensor algebra T(V).
    Tensor,
    /// U of the free class-two nilpotent Lie algebra.
    Nil2,
}

#[derive(Debug, Clone, Args)]
pub struct AlgebraOpts {
    #[arg(long, value_enum, default_value_t = AlgebraArg::Tensor)]
    pub algebra: AlgebraArg,
    /// dim V.
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    /// Terms of degree above this are dropped.
    #[arg(long, default_value_t = 8)]
    pub truncation: usize,
}

impl AlgebraOpts {
    fn descriptor(&self) -> Result<HopfDescriptor, HopfError> {
        match self.algebra {
            AlgebraArg::Tensor => HopfDescriptor::tensor(self.dim, self.truncation),
            AlgebraArg::Nil2 => HopfDescriptor::nil2(self.dim, self.truncation),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Mul,
    Bracket,
    Coproduct,
    Antipode,
    Counit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    /// (1 1; 0 1) lifts to x2 ↦ x2 x1.
    Column,
    /// (1 1; 0 1) lifts to x1 ↦ x1 x2.
    Row,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a Hopf-algebra operation on an element.
    HopfEval {
        #[command(flatten)]
        algebra: AlgebraOpts,
        #[arg(long, value_enum)]
        op: Op,
        /// The element, e.g. "2*x1x2 - x2 x1".
        #[arg(long)]
        expr: String,
        /// Second operand for mul and bracket.
        #[arg(long)]
        other: Option<String>,
        /// Number of tensor factors for coproduct (iterated coproduct).
        #[arg(long, default_value_t = 2)]
        arity: usize,
    },
    /// Act on a tensor by an automorphism (Nielsen moves) or substitute words.
    Act {
        #[command(flatten)]
        algebra: AlgebraOpts,
        /// Tensor, factors separated by ⊗ or |, e.g. "v1 | v2 | v1v2".
        #[arg(long)]
        tensor: String,
        /// A Nielsen move ("swap 1 2", "invert 2", "leftmul 1 2"); repeat to compose, leftmost outermost.
        #[arg(long, conflicts_with_all = ["images", "automorphism"])]
        nielsen: Vec<String>,
        /// Automorphism as JSON: {"nielsen": ["leftmul 1 2", "invert 2"]}.
        #[arg(long, conflicts_with = "images")]
        automorphism: Option<String>,
        /// Free-group words substituted into the Hom_H picture, one per output factor, e.g. "x2^2 x3".
        #[arg(long)]
        images: Vec<String>,
        /// Reduce the result modulo the conjugation subspace.
        #[arg(long)]
        reduce: bool,
    },
    /// Normal form of a tensor modulo the span of (h - ε(h)) ⊛ t.
    QuotientReduce {
        #[command(flatten)]
        algebra: AlgebraOpts,
        #[arg(long)]
        tensor: String,
    },
    /// The E/F log experiment on the degree-6 part of T(V)⊗T(V), dim V = 2.
    EfDefect {
        #[arg(long, value_enum, default_value_t = Convention::Column)]
        convention: Convention,
    },
    /// Coefficients of X^n Y^k and Y^k X^n in the symmetrized basis.
    Straighten {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Symmetric-function operations on Schur expansions.
    Schur {
        #[command(subcommand)]
        op: SchurOp,
    },
    /// Schur expansion of the quotient of S_(p,q)(L2) by the adjoint image in one degree.
    QuotientChar {
        /// Two-row shape "p,q" (q may be omitted).
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        degree: usize,
        /// Rank of GL(V); defaults to the smallest faithful value.
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Obstruction table: H^1 pieces with modular/cusp form multiplicities.
    H1Table {
        /// Largest module degree (cokernel degree minus 4).
        #[arg(long, default_value_t = 11)]
        max_degree: usize,
        /// Rank of GL(V); constituents with more rows are not seen.
        #[arg(long, default_value_t = 4)]
        dim: usize,
    },
    /// Dimension formulas.
    Dims {
        #[command(subcommand)]
        which: DimsOp,
    },
    /// Run a named property suite; exits with 3 when a property fails.
    Verify {
        suite: String,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum SchurOp {
    /// Littlewood–Richardson product; operands are sums like "1,1,1,1 + 2,2".
    Mult {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// S_ν(Λ²V).
    Wedge2 {
        #[arg(long)]
        lambda: String,
    },
    /// S_λ(V ⊕ W) = Σ c S_μ(V) ⊗ S_ν(W).
    OfSum {
        #[arg(long)]
        lambda: String,
    },
    /// S_λ(V ⊕ Λ²V), graded by degree.
    #[command(name = "of-L2", alias = "of-l2")]
    OfL2 {
        #[arg(long)]
        lambda: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum DimsOp {
    /// Free Lie algebra, degree k on d generators.
    Witt {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        degree: usize,
    },
    /// D_s(V): kernel of the bracketing map V ⊗ L_{s+1} → L_{s+2}.
    Dspace {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        degree: usize,
    },
    /// Cyclic words of length k and the image of (id - S) on them.
    Cyclic {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        degree: usize,
        /// Also compute the quotient dimension by explicit linear algebra.
        #[arg(long)]
        explicit: bool,
    },
    /// Level-one modular and cusp forms of a given weight.
    Modular {
        #[arg(long)]
        weight: i64,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
    #[error(transparent)]
    Pbw(#[from] PbwError),
    #[error(transparent)]
    NilRep(#[from] NilRepError),
    #[error(transparent)]
    SymFunc(#[from] SymFuncError),
    #[error(transparent)]
    Coker(#[from] CokerError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("invalid automorphism JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parsed output of a command: JSON value plus its TSV rendering.
struct Rendered {
    json: Value,
    tsv: String,
    code: i32,
}

impl Rendered {
    fn ok(json: Value, tsv: String) -> Self {
        Rendered { json, tsv, code: EXIT_OK }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command) {
        Ok(r) => {
            let stdout = match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&r.json).expect("values serialize");
                    s.push('\n');
                    s
                }
                Format::Tsv => r.tsv,
            };
            let stderr = if r.code == EXIT_VERIFY { "verification failed\n".to_string() } else { String::new() };
            Outcome { code: r.code, stdout, stderr }
        }
        Err(e) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("values serialize")
}

fn partition(s: &str) -> Result<Partition, CliError> {
    Ok(s.parse::<Partition>()?)
}

fn two_row(s: &str) -> Result<(usize, usize), CliError> {
    let l = partition(s)?;
    if l.len() > 2 {
        return Err(CliError::Usage(format!("`{s}` has more than two rows")));
    }
    Ok((l.part(0) as usize, l.part(1) as usize))
}

fn schur_out(p: &SchurPoly) -> Rendered {
    Rendered::ok(to_value(&SchurJson::of(p)), schur_tsv(p))
}

fn algebra_out(a: &AlgebraElement) -> Rendered {
    let mut v = to_value(&AlgebraJson::of(a));
    v["text"] = json!(a.to_string());
    Rendered::ok(v, algebra_tsv(a))
}

fn tensor_out(t: &TensorElement) -> Rendered {
    let mut v = to_value(&TensorJson::of(t));
    v["text"] = json!(t.to_string());
    Rendered::ok(v, tensor_tsv(t))
}

#[derive(Debug, serde::Deserialize)]
struct AutomorphismJson {
    nielsen: Vec<String>,
}

fn nielsen_seq(moves: &[String]) -> Result<Vec<NielsenGen>, CliError> {
    Ok(moves.iter().map(|m| m.parse()).collect::<Result<Vec<NielsenGen>, _>>()?)
}

fn execute(cmd: &Command) -> Result<Rendered, CliError> {
    match cmd {
        Command::HopfEval { algebra, op, expr, other, arity } => {
            let desc = algebra.descriptor()?;
            let a = parse_element(desc, expr)?;
            let second = || -> Result<AlgebraElement, CliError> {
                let s = other.as_deref().ok_or_else(|| CliError::Usage("this operation needs --other".into()))?;
                Ok(parse_element(desc, s)?)
            };
            Ok(match op {
                Op::Mul => algebra_out(&a.mul(&second()?)?),
                Op::Bracket => algebra_out(&a.lie_bracket(&second()?)?),
                Op::Antipode => algebra_out(&a.antipode()),
                Op::Coproduct => {
                    if *arity < 1 {
                        return Err(CliError::Usage("--arity must be at least 1".into()));
                    }
                    tensor_out(&a.coproduct_iter(arity - 1))
                }
                Op::Counit => {
                    let c = a.counit();
                    Rendered::ok(json!({ "counit": c.to_string() }), format!("counit\n{c}\n"))
                }
            })
        }
        Command::Act { algebra, tensor, nielsen, automorphism, images, reduce } => {
            let desc = algebra.descriptor()?;
            let t = parse_tensor(desc, tensor)?;
            let result = if !images.is_empty() {
                let words = images.iter().map(|w| w.parse::<GroupWord>()).collect::<Result<Vec<_>, _>>()?;
                hom_extend(&t, &words)?
            } else {
                let seq = match automorphism {
                    Some(js) => nielsen_seq(&serde_json::from_str::<AutomorphismJson>(js)?.nielsen)?,
                    None => nielsen_seq(nielsen)?,
                };
                let aut = Automorphism::from_nielsen(&seq, t.arity())?;
                ActionContext::new(desc, t.arity())?.act(&aut, &t)?
            };
            if *reduce {
                let q = QuotientModule::new(ActionContext::new(desc, result.arity())?);
                Ok(tensor_out(&q.reduce_any(&result)?))
            } else {
                Ok(tensor_out(&result))
            }
        }
        Command::QuotientReduce { algebra, tensor } => {
            let desc = algebra.descriptor()?;
            let t = parse_tensor(desc, tensor)?;
            let q = QuotientModule::new(ActionContext::new(desc, t.arity())?);
            let red = q.reduce_any(&t)?;
            let mut r = tensor_out(&red);
            r.json["is_zero"] = json!(red.is_zero());
            Ok(r)
        }
        Command::EfDefect { convention } => {
            let conv = match convention {
                Convention::Column => LiftConvention::Column,
                Convention::Row => LiftConvention::Row,
            };
            let r = ef_defect(HopfDescriptor::tensor(2, 6)?, conv)?;
            let constant = r.constant.as_ref().map(|c| c.to_string());
            let name = match convention {
                Convention::Column => "column",
                Convention::Row => "row",
            };
            let json = json!({
                "convention": name,
                "defect": r.u.to_string(),
                "target": "[[x,y],y][[x,y],x]",
                "constant": constant,
                "expected_constant": "24",
                "matches": r.matches,
                "nonzero_mod_commutators": r.u_nonzero_mod_commutators,
                "nilpotency": [r.nilpotency.0, r.nilpotency.1],
            });
            let tsv = format!(
                "convention\tconstant\tmatches\tnonzero_mod_commutators\n{name}\t{}\t{}\t{}\n",
                constant.as_deref().unwrap_or("none"),
                r.matches,
                r.u_nonzero_mod_commutators
            );
            Ok(Rendered::ok(json, tsv))
        }
        Command::Straighten { n, k } => {
            let s = straighten_constants(*n, *k)?;
            let c: Vec<String> = s.c.iter().map(|x| x.to_string()).collect();
            let d: Vec<String> = s.d.iter().map(|x| x.to_string()).collect();
            let mut tsv = String::from("i\tc\td\n");
            for i in 0..c.len() {
                tsv.push_str(&format!("{i}\t{}\t{}\n", c[i], d[i]));
            }
            Ok(Rendered::ok(json!({ "n": n, "k": k, "c": c, "d": d }), tsv))
        }
        Command::Schur { op } => schur(op),
        Command::QuotientChar { lambda, degree, dim } => {
            let (p, q) = two_row(lambda)?;
            let d = dim.unwrap_or_else(|| rows_needed(p, q, *degree).max(1));
            let chi = quotient_character(p, q, *degree, d)?;
            let mut r = schur_out(&chi);
            r.json["lambda"] = json!([p, q]);
            r.json["degree"] = json!(degree);
            r.json["dim"] = json!(d);
            Ok(r)
        }
        Command::H1Table { max_degree, dim } => {
            let entries = h1_table(*max_degree, *dim)?;
            let json = json!({
                "labels": "GL(V)",
                "dim": dim,
                "max_module_degree": max_degree,
                "degree_shift": hopfaut_core::cokertab::DEGREE_SHIFT,
                "note": format!("constituents with more than {dim} rows are not computed; no Sp(V) restriction"),
                "entries": entries.iter().map(ObstructionJson::of).collect::<Vec<_>>(),
            });
            Ok(Rendered::ok(json, table_tsv(&entries)))
        }
        Command::Dims { which } => dims(which),
        Command::Verify { suite, dim, max_degree, seed } => {
            let report = run_suite(suite, &Options { dim: *dim, max_degree: *max_degree, seed: *seed })?;
            let mut tsv = String::from("check\tpassed\tcases\tcounterexample\n");
            for c in &report.checks {
                tsv.push_str(&format!(
                    "{}\t{}\t{}\t{}\n",
                    c.name,
                    c.passed,
                    c.cases,
                    c.counterexample.as_deref().unwrap_or("")
                ));
            }
            let code = if report.passed { EXIT_OK } else { EXIT_VERIFY };
            Ok(Rendered { json: to_value(&report), tsv, code })
        }
    }
}

fn schur(op: &SchurOp) -> Result<Rendered, CliError> {
    Ok(match op {
        SchurOp::Mult { lhs, rhs } => {
            schur_out(&lr_mult(&parse_schur(lhs)?, &parse_schur(rhs)?))
        }
        SchurOp::Wedge2 { lambda } => schur_out(&schur_of_wedge2(&partition(lambda)?)),
        SchurOp::OfSum { lambda } => {
            let triples = schur_of_sum(&partition(lambda)?);
            let mut tsv = String::from("mu\tnu\tmult\n");
            let mut terms = Vec::new();
            for (mu, nu, c) in &triples {
                tsv.push_str(&format!("{}\t{}\t{c}\n", partition_text(mu), partition_text(nu)));
                terms.push(json!({ "mu": mu.parts(), "nu": nu.parts(), "mult": c }));
            }
            Rendered::ok(json!({ "terms": terms }), tsv)
        }
        SchurOp::OfL2 { lambda } => {
            let graded = schur_of_l2(&partition(lambda)?);
            let mut tsv = String::from("degree\tlambda\tmult\n");
            let mut degrees = Vec::new();
            for (deg, p) in &graded {
                for (l, c) in p.terms() {
                    tsv.push_str(&format!("{deg}\t{}\t{c}\n", partition_text(l)));
                }
                degrees.push(json!({ "degree": deg, "terms": to_value(&SchurJson::of(p))["terms"] }));
            }
            let total = total_character(&graded);
            Rendered::ok(json!({ "degrees": degrees, "total": to_value(&SchurJson::of(&total))["terms"] }), tsv)
        }
    })
}

fn dims(which: &DimsOp) -> Result<Rendered, CliError> {
    Ok(match which {
        DimsOp::Witt { dim, degree } => {
            let w = witt_dim(*dim, *degree);
            Rendered::ok(json!({ "dim": dim, "degree": degree, "witt": w.to_string() }), format!("dim\tdegree\twitt\n{dim}\t{degree}\t{w}\n"))
        }
        DimsOp::Dspace { dim, degree } => {
            let w = d_space_dim(*dim, *degree);
            Rendered::ok(
                json!({ "dim": dim, "degree": degree, "d_space": w.to_string() }),
                format!("dim\tdegree\td_space\n{dim}\t{degree}\t{w}\n"),
            )
        }
        DimsOp::Cyclic { dim, degree, explicit } => {
            let (cyc, antisym) = cyclic_word_dims(*dim, *degree)?;
            debug_assert_eq!(cyc, necklace_count(*dim, *degree));
            let mut json = json!({ "dim": dim, "degree": degree, "cyclic": cyc.to_string(), "antisymmetric": antisym });
            let mut tsv_head = String::from("dim\tdegree\tcyclic\tantisymmetric");
            let mut tsv_row = format!("{dim}\t{degree}\t{cyc}\t{antisym}");
            if *explicit {
                let e = cyclic_dim_explicit(*dim, *degree)?;
                json["explicit"] = json!(e);
                tsv_head.push_str("\texplicit");
                tsv_row.push_str(&format!("\t{e}"));
            }
            Rendered::ok(json, format!("{tsv_head}\n{tsv_row}\n"))
        }
        DimsOp::Modular { weight } => {
            let (m, s) = modular_dims(*weight);
            Rendered::ok(
                json!({ "weight": weight, "modular": m, "cusp": s }),
                format!("weight\tmodular\tcusp\n{weight}\t{m}\t{s}\n"),
            )
        }
    })
}
