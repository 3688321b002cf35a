//! The `octoramsey` command line.
//!
//! Exit status: 0 when every check holds, 1 when a mathematical property is
//! falsified, 2 for bad input or usage.

use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use octoramsey_core::loops::{
    is_associative, is_moufang, m_g2, mg2_reduce_to_group, ramsey_reduce, validate_loop, GroupReduction, LoopTable,
    MG2Loop, MoufangLoop, PeriodicSequence,
};
use octoramsey_core::naf::{naf_encode, NafDigits};
use octoramsey_core::sign::{distinguish, lambda_sets};
use octoramsey_core::term::{eval_assigned, eval_units, parse, Term};
use octoramsey_core::witness::{SymbolicEvaluator, SymbolicOctonion, Verdict, BOUNDED_X_CAVEAT};

use crate::sweep::{self, ValueMap};
use crate::table_io::{builtin, parse_table, write_table};

/// Largest leaf cap accepted on the command line (8^8 assignments per term).
pub const MAX_LEAVES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Holds = 0,
    Falsified = 1,
    Usage = 2,
}

impl From<ExitStatus> for ExitCode {
    fn from(s: ExitStatus) -> Self {
        ExitCode::from(s as u8)
    }
}

#[derive(Debug, Parser)]
#[command(name = "octoramsey", version, about = "Exact checks for unit-octonion bracketings and finite Moufang loops")]
pub struct Cli {
    /// Emit JSON instead of the line protocol.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a ground term, or an orderly variable term over b_n.
    Eval {
        term: String,
        #[arg(long, default_value_t = 6)]
        leaves: usize,
    },
    /// Non-adjacent form of an integer, or the integer of a NAF string.
    Naf {
        #[arg(allow_hyphen_values = true)]
        value: String,
        /// Read VALUE as a NAF string over 1, 0, T.
        #[arg(long)]
        decode: bool,
    },
    /// An assignment under which two bracketings take opposite values ±e4.
    Distinguish { left: String, right: String },
    /// Per-assignment outcomes of an orderly term.
    Lambda { term: String },
    /// Compare (t1(t2t3)) with ((t1t2)t3) for every chain within bounds.
    Theorem(TheoremArgs),
    /// Membership of a term's value in X restricted to bounds.
    Inx {
        term: String,
        #[arg(long, default_value_t = 7)]
        indices: u32,
        #[arg(long, default_value_t = 5)]
        leaves: usize,
    },
    /// Finite loop tables.
    #[command(subcommand)]
    Loop(LoopCommand),
}

#[derive(Debug, Args)]
pub struct TheoremArgs {
    /// Maximum total leaves of (t1, t2, t3).
    #[arg(long)]
    pub leaves: usize,
    /// Variable indices range over 0..INDICES.
    #[arg(long)]
    pub indices: u32,
    /// Compare against every other chain instead of the same one.
    #[arg(long)]
    pub independent: bool,
}

#[derive(Debug, Args)]
pub struct TableSource {
    /// Table file; standard input when neither --file nor --group is given.
    #[arg(long, conflicts_with = "group")]
    pub file: Option<String>,
    /// Built-in table: z<n>, s3, octo16.
    #[arg(long)]
    pub group: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum LoopCommand {
    /// Validity, Moufang and associativity verdicts.
    Check(TableSource),
    /// The doubled loop M(G,2) in table format.
    Mg2(TableSource),
    /// A reduction certificate for a periodic sequence.
    Reduce {
        #[command(flatten)]
        source: TableSource,
        /// Elements before the cycle, by name or index.
        #[arg(long, default_value = "")]
        prefix: String,
        /// The repeating part, by name or index.
        #[arg(long)]
        cycle: String,
        /// Number of blocks (or pairs) to certify.
        #[arg(long, default_value_t = 3)]
        blocks: usize,
        /// Reduce into the group half of M(G,2) instead of to the identity.
        #[arg(long)]
        into_group: bool,
    },
    /// The sixteen signed unit octonions in table format.
    Octo16,
}

/// Output collected for one invocation.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: Option<ExitStatus>,
}

impl Outcome {
    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome { stderr: format!("error: {message}\n"), status: Some(ExitStatus::Usage), ..Default::default() }
    }

    fn ok(stdout: String) -> Self {
        Outcome { stdout, status: Some(ExitStatus::Holds), ..Default::default() }
    }

    pub fn exit_status(&self) -> ExitStatus {
        self.status.unwrap_or(ExitStatus::Holds)
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

/// Runs a parsed command; `stdin` is read only when a table is piped in.
pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    match &cli.command {
        Command::Eval { term, leaves } => cmd_eval(term, *leaves, cli.json),
        Command::Naf { value, decode } => cmd_naf(value, *decode, cli.json),
        Command::Distinguish { left, right } => cmd_distinguish(left, right, cli.json),
        Command::Lambda { term } => cmd_lambda(term, cli.json),
        Command::Theorem(args) => cmd_theorem(args, cli.json),
        Command::Inx { term, indices, leaves } => cmd_inx(term, *indices, *leaves, cli.json),
        Command::Loop(cmd) => cmd_loop(cmd, stdin, cli.json),
    }
}

fn parse_term(text: &str) -> Result<Term, Outcome> {
    parse(text).map_err(|e| Outcome::usage(format!("`{text}`: {e}")))
}

#[derive(Serialize)]
struct SymbolicJson {
    term: String,
    coefficients: Vec<String>,
}

fn symbolic_json(term: &Term, v: &SymbolicOctonion) -> SymbolicJson {
    SymbolicJson { term: term.to_string(), coefficients: v.coeffs.iter().map(ToString::to_string).collect() }
}

fn cmd_eval(text: &str, leaves: usize, json: bool) -> Outcome {
    let term = match parse_term(text) {
        Ok(t) => t,
        Err(o) => return o,
    };
    if term.is_ground() {
        let value = eval_units(&term).expect("ground term");
        #[derive(Serialize)]
        struct Ground {
            term: String,
            value: String,
        }
        return Outcome::ok(if json {
            json_line(&Ground { term: term.to_string(), value: value.to_string() })
        } else {
            format!("{value}\n")
        });
    }
    if leaves == 0 || leaves > MAX_LEAVES {
        return Outcome::usage(format!("--leaves must be in 1..={MAX_LEAVES}"));
    }
    match SymbolicEvaluator::new(leaves).eval(&term) {
        Ok((v, _)) => Outcome::ok(if json { json_line(&symbolic_json(&term, &v)) } else { v.to_string() }),
        Err(e) => Outcome::usage(format!("`{term}`: {e}")),
    }
}

fn cmd_naf(value: &str, decode: bool, json: bool) -> Outcome {
    let (integer, digits) = if decode {
        match value.parse::<NafDigits>() {
            Ok(d) => (d.value(), d),
            Err(e) => return Outcome::usage(e),
        }
    } else {
        match value.parse::<BigInt>() {
            Ok(a) => {
                let d = naf_encode(&a);
                (a, d)
            }
            Err(_) => return Outcome::usage(format!("`{value}` is not an integer")),
        }
    };
    #[derive(Serialize)]
    struct Naf {
        value: String,
        naf: String,
    }
    Outcome::ok(if json {
        json_line(&Naf { value: integer.to_string(), naf: digits.to_string() })
    } else if decode {
        format!("{integer}\n")
    } else {
        format!("{digits}\n")
    })
}

fn cmd_distinguish(left: &str, right: &str, json: bool) -> Outcome {
    let (t, u) = match (parse_term(left), parse_term(right)) {
        (Ok(t), Ok(u)) => (t, u),
        (Err(o), _) | (_, Err(o)) => return o,
    };
    let mu = match distinguish(&t, &u) {
        Ok(mu) => mu,
        Err(e) => return Outcome::usage(e),
    };
    let (vt, vu) = (eval_assigned(&t, &mu).expect("total"), eval_assigned(&u, &mu).expect("total"));
    let holds = vt == -vu && vt.index() == 4;
    let mut out = if json {
        #[derive(Serialize)]
        struct Dist {
            left: String,
            right: String,
            assignment: Vec<(String, String)>,
            left_value: String,
            right_value: String,
        }
        json_line(&Dist {
            left: t.to_string(),
            right: u.to_string(),
            assignment: mu.iter().map(|(v, e)| (format!("x{v}"), e.to_string())).collect(),
            left_value: vt.to_string(),
            right_value: vu.to_string(),
        })
    } else {
        format!("{mu} / {vt} vs {vu}\n")
    };
    if !holds {
        out.push_str("# values are not opposite ±e4\n");
    }
    Outcome {
        stdout: out,
        status: Some(if holds { ExitStatus::Holds } else { ExitStatus::Falsified }),
        ..Default::default()
    }
}

fn cmd_lambda(text: &str, json: bool) -> Outcome {
    let term = match parse_term(text) {
        Ok(t) => t,
        Err(o) => return o,
    };
    if term.leaf_count() > MAX_LEAVES {
        return Outcome::usage(format!("at most {MAX_LEAVES} leaves"));
    }
    match lambda_sets(&term) {
        Ok(l) if json => {
            #[derive(Serialize)]
            struct Entry {
                j: u8,
                alpha: Vec<u8>,
                sign: String,
            }
            let mut out = String::new();
            for j in 0..8 {
                for alpha in l.keys(j) {
                    let sign = l.sign(j, alpha).expect("key present").symbol().to_string();
                    out.push_str(&json_line(&Entry { j, alpha: alpha.to_vec(), sign }));
                }
            }
            Outcome::ok(out)
        }
        Ok(l) => Outcome::ok(l.to_string()),
        Err(e) => Outcome::usage(format!("`{term}`: {e}")),
    }
}

fn check_bounds(leaves: usize, indices: u32) -> Result<(), Outcome> {
    if leaves == 0 || leaves > MAX_LEAVES {
        return Err(Outcome::usage(format!("--leaves must be in 1..={MAX_LEAVES}")));
    }
    if indices == 0 {
        return Err(Outcome::usage("--indices must be positive"));
    }
    Ok(())
}

fn cmd_theorem(args: &TheoremArgs, json: bool) -> Outcome {
    if let Err(o) = check_bounds(args.leaves, args.indices) {
        return o;
    }
    if args.independent {
        return theorem_independent(args, json);
    }
    let reports = match sweep::theorem_sweep(args.indices, args.leaves) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let mut stdout = String::new();
    for r in &reports {
        if json {
            #[derive(Serialize)]
            struct Claim {
                left: String,
                right: String,
                verdict: &'static str,
                slot: Option<u8>,
                case: &'static str,
            }
            stdout.push_str(&json_line(&Claim {
                left: r.left.to_string(),
                right: r.right.to_string(),
                verdict: if r.verdict == Verdict::Distinct { "DISTINCT" } else { "EQUAL" },
                slot: r.slot,
                case: r.case.tag(),
            }));
        } else {
            let _ = writeln!(stdout, "{r}");
        }
    }
    let equal = reports.iter().filter(|r| r.verdict == Verdict::Equal).count();
    let off_slot =
        reports.iter().filter(|r| r.verdict == Verdict::Distinct && !r.separates_at_designated_slot()).count();
    let stderr = format!("# {} checks, {} equal, {} off designated slot\n", reports.len(), equal, off_slot);
    let status = if equal == 0 && off_slot == 0 { ExitStatus::Holds } else { ExitStatus::Falsified };
    Outcome { stdout, stderr, status: Some(status) }
}

fn theorem_independent(args: &TheoremArgs, json: bool) -> Outcome {
    let s = match sweep::independent_sweep(args.indices, args.leaves) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    let mut stdout = String::new();
    for r in &s.equal_values_distinct_terms {
        let _ = writeln!(stdout, "{r}");
    }
    if json {
        #[derive(Serialize)]
        struct Summary {
            pairs: usize,
            same_string: usize,
            different_vars: usize,
            identical_terms: usize,
            off_slot: usize,
            equal_values_distinct_terms: usize,
        }
        stdout = json_line(&Summary {
            pairs: s.pairs,
            same_string: s.same_string,
            different_vars: s.different_vars,
            identical_terms: s.identical_terms,
            off_slot: s.off_slot,
            equal_values_distinct_terms: s.equal_values_distinct_terms.len(),
        });
    } else {
        let _ = writeln!(
            stdout,
            "PAIRS {} same_string={} different_vars={} identical_terms={} off_slot={} equal_distinct_terms={}",
            s.pairs,
            s.same_string,
            s.different_vars,
            s.identical_terms,
            s.off_slot,
            s.equal_values_distinct_terms.len()
        );
    }
    let holds = s.equal_values_distinct_terms.is_empty() && s.off_slot == 0;
    Outcome {
        stdout,
        stderr: String::new(),
        status: Some(if holds { ExitStatus::Holds } else { ExitStatus::Falsified }),
    }
}

fn cmd_inx(text: &str, indices: u32, leaves: usize, json: bool) -> Outcome {
    let term = match parse_term(text) {
        Ok(t) => t,
        Err(o) => return o,
    };
    if let Err(o) = check_bounds(leaves, indices) {
        return o;
    }
    let values = match ValueMap::build(indices, leaves) {
        Ok(v) => v,
        Err(e) => return Outcome::usage(e),
    };
    let value = match SymbolicEvaluator::new(MAX_LEAVES).eval(&term) {
        Ok((v, _)) => v,
        Err(e) => return Outcome::usage(format!("`{term}`: {e}")),
    };
    let member = values.bounded_x(indices).contains(&value);
    Outcome::ok(if json {
        #[derive(Serialize)]
        struct Inx {
            term: String,
            member: bool,
            indices: u32,
            leaves: usize,
            caveat: &'static str,
        }
        json_line(&Inx { term: term.to_string(), member, indices, leaves, caveat: BOUNDED_X_CAVEAT })
    } else {
        format!(
            "{} {}\n# bounded: indices<{indices} leaves<={leaves}; {BOUNDED_X_CAVEAT}\n",
            if member { "IN_X" } else { "NOT_IN_X" },
            term
        )
    })
}

fn load_table(source: &TableSource, stdin: &mut dyn Read) -> Result<LoopTable, Outcome> {
    let result = match (&source.file, &source.group) {
        (_, Some(name)) => builtin(name),
        (Some(path), None) => match std::fs::read_to_string(path) {
            Ok(text) => parse_table(&text),
            Err(e) => return Err(Outcome::usage(format!("{path}: {e}"))),
        },
        (None, None) => {
            let mut text = String::new();
            if let Err(e) = stdin.read_to_string(&mut text) {
                return Err(Outcome::usage(format!("stdin: {e}")));
            }
            parse_table(&text)
        }
    };
    result.map_err(Outcome::usage)
}

fn parse_elements(table: &LoopTable, text: &str) -> Result<Vec<usize>, Outcome> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|tok| table.lookup(tok).ok_or_else(|| Outcome::usage(format!("unknown element `{tok}`"))))
        .collect()
}

fn cmd_loop(cmd: &LoopCommand, stdin: &mut dyn Read, json: bool) -> Outcome {
    match cmd {
        LoopCommand::Octo16 => Outcome::ok(write_table(&octoramsey_core::loops::octo16())),
        LoopCommand::Check(source) => {
            let table = match load_table(source, stdin) {
                Ok(t) => t,
                Err(o) => return o,
            };
            if let Err(e) = validate_loop(&table) {
                return Outcome::usage(e);
            }
            let (moufang, associative) = (is_moufang(&table), is_associative(&table));
            Outcome::ok(if json {
                #[derive(Serialize)]
                struct Check {
                    valid: bool,
                    moufang: bool,
                    associative: bool,
                    order: usize,
                }
                json_line(&Check { valid: true, moufang, associative, order: table.order() })
            } else {
                format!(
                    "valid {} {} order={}\n",
                    if moufang { "moufang" } else { "non-moufang" },
                    if associative { "associative" } else { "nonassociative" },
                    table.order()
                )
            })
        }
        LoopCommand::Mg2(source) => {
            let table = match load_table(source, stdin) {
                Ok(t) => t,
                Err(o) => return o,
            };
            match m_g2(&table) {
                Ok(m) => Outcome::ok(write_table(&m)),
                Err(e) => Outcome::usage(e),
            }
        }
        LoopCommand::Reduce { source, prefix, cycle, blocks, into_group } => {
            let table = match load_table(source, stdin) {
                Ok(t) => t,
                Err(o) => return o,
            };
            let seq = match (parse_elements(&table, prefix), parse_elements(&table, cycle)) {
                (Ok(p), Ok(c)) => match PeriodicSequence::new(p, c) {
                    Ok(s) => s,
                    Err(e) => return Outcome::usage(e),
                },
                (Err(o), _) | (_, Err(o)) => return o,
            };
            if *into_group {
                reduce_into_group(&table, &seq, *blocks, json)
            } else {
                reduce_to_identity(table, &seq, *blocks, json)
            }
        }
    }
}

fn reduce_to_identity(table: LoopTable, seq: &PeriodicSequence, blocks: usize, json: bool) -> Outcome {
    let l = match MoufangLoop::new(table) {
        Ok(l) => l,
        Err(e) => return Outcome::usage(e),
    };
    let cert = match ramsey_reduce(&l, seq, blocks) {
        Ok(c) => c,
        Err(e) => return Outcome::usage(e),
    };
    let t = l.table();
    let verified = cert.verify(t, seq);
    let mut out = String::new();
    if json {
        #[derive(Serialize)]
        struct Cert {
            element: String,
            order: usize,
            blocks: Vec<Vec<usize>>,
            verified: bool,
        }
        out = json_line(&Cert {
            element: t.name(cert.element),
            order: cert.order,
            blocks: cert.blocks.clone(),
            verified,
        });
    } else {
        let _ =
            writeln!(out, "CERT element={} order={} blocks={}", t.name(cert.element), cert.order, cert.blocks.len());
        for block in &cert.blocks {
            let product = block.iter().map(|&p| seq.at(p)).reduce(|a, b| t.mul(a, b)).expect("nonempty block");
            let positions: Vec<String> = block.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "BLOCK {} product={}", positions.join(","), t.name(product));
        }
    }
    Outcome {
        stdout: out,
        stderr: String::new(),
        status: Some(if verified { ExitStatus::Holds } else { ExitStatus::Falsified }),
    }
}

fn reduce_into_group(table: &LoopTable, seq: &PeriodicSequence, count: usize, json: bool) -> Outcome {
    let l = match MG2Loop::recognize(table) {
        Ok(l) => l,
        Err(e) => return Outcome::usage(e),
    };
    let red = match mg2_reduce_to_group(&l, seq, count) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let verified = red.verify(&l, seq);
    let mut out = String::new();
    match &red {
        GroupReduction::Subsequence { element, positions } => {
            let ps: Vec<String> = positions.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "SUBSEQUENCE element={} positions={}", table.name(*element), ps.join(","));
        }
        GroupReduction::Pairing { pairs, products } => {
            let _ = writeln!(out, "PAIRING pairs={}", pairs.len());
            for (&(p, q), &prod) in pairs.iter().zip(products) {
                let _ = writeln!(
                    out,
                    "PAIR {p},{q} {}*{} = {}",
                    table.name(seq.at(p)),
                    table.name(seq.at(q)),
                    table.name(prod)
                );
            }
        }
    }
    if json {
        #[derive(Serialize)]
        struct Red {
            kind: &'static str,
            terms: Vec<String>,
            verified: bool,
        }
        let kind = if matches!(red, GroupReduction::Subsequence { .. }) { "subsequence" } else { "pairing" };
        out = json_line(&Red { kind, terms: red.terms().into_iter().map(|a| table.name(a)).collect(), verified });
    }
    Outcome {
        stdout: out,
        stderr: String::new(),
        status: Some(if verified { ExitStatus::Holds } else { ExitStatus::Falsified }),
    }
}
