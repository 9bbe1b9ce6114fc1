//! The `irack` command-line tool.
//!
//! Every subcommand prints a `# command key=value ...` header followed by
//! `law: PASS|FAIL ...` lines or a computed value. Exit codes: 0 when every
//! check passes, 1 when a law fails or an asserted equality does not hold,
//! 2 on usage and input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::num::NonZeroUsize;
use std::path::PathBuf;

use anyhow::{anyhow, bail};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value as Json};

use irack_core::text::{format_irack, format_rack};
use irack_core::{
    apply_braid, belt_probes, belt_trick, check_braiding, check_irack_axioms, check_lemmas_unvalidated,
    check_rack_axioms, check_tangle_algebra, check_tuple_irack, check_tuple_rack, close_word, distinguish,
    enumerate_iracks, enumerate_racks, eval_braid, is_tangled, relation_equality, saturate_to_tangled, torsion,
    AlgebraError, BraidWord, Carrier, CheckReport, IrackTable, LawEntry, Relation, SaturateError, TupleCheckConfig,
    TupleVal, Value, Witness, MATERIALIZATION_CAP,
};

mod source;

use source::{load_raw_irack, load_raw_rack, load_relation};

const EXAMPLE: &str = "builtin:example12";

#[derive(Debug, Parser)]
#[command(
    name = "irack",
    version,
    about = "Verify finite iracks, tangled relations and braid invariants",
    after_help = "Irack sources: builtin:NAME (example12, trivial, z2, z3, z4, s3), group:PATH, a file path, \
                  or any of these prefixed with dual:."
)]
struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Cap on worker threads used by the checks.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<NonZeroUsize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the irack axioms IR(1)-IR(6), or the rack axioms R(1)-R(4) with --rack.
    Verify(VerifyArgs),
    /// Check the derived identities L1.1-L1.10.
    Lemmas(IrackArg),
    /// Check the rack laws on tuples, and optionally the irack laws.
    TupleCheck(TupleArgs),
    /// Check TR(1) and TR(2) for relation files or for the belt probes.
    TangleCheck(TangleArgs),
    /// Check the braiding and the tangle algebra on the irack.
    CategoryCheck(CategoryArgs),
    /// Apply a braid word to tuples, print its relation, or compare two words.
    BraidEval(BraidArgs),
    /// Close a braid word between the belt probes.
    Belt(BeltArgs),
    /// Enumerate all iracks (or racks) of a small order.
    Enumerate(EnumerateArgs),
    /// Close a relation under the diagonal action and check TR(2).
    Saturate(SaturateArgs),
}

#[derive(Debug, Args)]
struct IrackArg {
    #[arg(long, value_name = "SOURCE", default_value = EXAMPLE)]
    irack: String,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_name = "SOURCE", default_value = EXAMPLE)]
    irack: String,

    /// A rack file with `rhd:` and `lhd:` tables.
    #[arg(long, value_name = "PATH", conflicts_with = "irack")]
    rack: Option<String>,
}

#[derive(Debug, Args)]
struct TupleArgs {
    #[command(flatten)]
    source: IrackArg,

    #[arg(long, default_value_t = 2)]
    max_arity: usize,

    /// Laws with more instances than this are sampled with this many draws.
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Also check IR(1)-IR(6) on tuples. IR(2) is expected to fail.
    #[arg(long)]
    irack_laws: bool,
}

#[derive(Debug, Args)]
struct TangleArgs {
    #[command(flatten)]
    source: IrackArg,

    /// Relation file to check; may be repeated.
    #[arg(long, value_name = "PATH")]
    relation: Vec<String>,

    /// Check the belt probes R and S on this many strands.
    #[arg(long, value_name = "STRANDS")]
    probes: Option<usize>,
}

#[derive(Debug, Args)]
struct CategoryArgs {
    #[command(flatten)]
    source: IrackArg,

    /// Arities m,n,p for the braiding checks.
    #[arg(long, value_delimiter = ',', num_args = 3, default_values_t = [1, 1, 1])]
    arities: Vec<usize>,

    /// Relation file whose naturality is checked; may be repeated.
    #[arg(long, value_name = "PATH")]
    natural: Vec<String>,

    /// Check naturality against the belt probes on this many strands.
    #[arg(long, value_name = "STRANDS")]
    probes: Option<usize>,
}

#[derive(Debug, Args)]
struct BraidArgs {
    #[command(flatten)]
    source: IrackArg,

    #[arg(long)]
    strands: usize,

    /// Letters `sI` or `sI^-1`, applied left to right.
    #[arg(long, allow_hyphen_values = true)]
    word: String,

    /// Tuple literal to push through the word; may be repeated.
    #[arg(long, value_name = "TUPLE", conflicts_with = "equals")]
    tuple: Vec<String>,

    /// Assert that this word evaluates to the same relation.
    #[arg(long, value_name = "WORD", allow_hyphen_values = true)]
    equals: Option<String>,

    /// Write the relation here instead of standard output.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["tuple", "equals"])]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BeltArgs {
    #[command(flatten)]
    source: IrackArg,

    #[arg(long, default_value_t = 3)]
    strands: usize,

    /// Power of the half twist to close.
    #[arg(long, required_unless_present = "word", conflicts_with = "word")]
    power: Option<usize>,

    /// Arbitrary braid word to close instead of a torsion power.
    #[arg(long, allow_hyphen_values = true)]
    word: Option<String>,

    /// Assert that this word has the same closure.
    #[arg(long, value_name = "WORD", allow_hyphen_values = true)]
    same_as: Option<String>,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    order: usize,

    /// Enumerate racks instead of iracks.
    #[arg(long)]
    racks: bool,

    /// Keep every labelled structure instead of one per relabeling class.
    #[arg(long)]
    all: bool,

    /// Directory receiving one text file per structure.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SaturateArgs {
    #[command(flatten)]
    source: IrackArg,

    /// Seed relation file.
    #[arg(long, value_name = "PATH")]
    relation: String,

    #[arg(long, default_value_t = MATERIALIZATION_CAP)]
    max_pairs: usize,
}

/// A finished command: text and JSON renderings plus the verdict.
struct Doc {
    text: String,
    json: Map<String, Json>,
    ok: bool,
}

/// An irack input that is well formed but violates its axioms. Reported as
/// a failed check rather than a usage error.
#[derive(Debug)]
struct NotAnIrack {
    source: String,
    carrier: Carrier,
    report: CheckReport,
}

impl std::fmt::Display for NotAnIrack {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} is not an irack: {} fail", self.source, self.report.failed_laws().join(", "))
    }
}

impl std::error::Error for NotAnIrack {}

type Outcome = anyhow::Result<Doc>;

struct Header {
    command: &'static str,
    params: Vec<(&'static str, String)>,
}

impl Header {
    fn new(command: &'static str) -> Self {
        Header { command, params: Vec::new() }
    }

    fn param(mut self, key: &'static str, value: impl ToString) -> Self {
        self.params.push((key, value.to_string()));
        self
    }

    fn doc(&self, body: String, mut json: Map<String, Json>, ok: bool) -> Doc {
        let mut text = format!("# {}", self.command);
        for (k, v) in &self.params {
            let _ = write!(text, " {k}={v}");
        }
        text.push('\n');
        text.push_str(&body);
        let params: Map<String, Json> = self.params.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        json.insert("command".into(), json!(self.command));
        json.insert("params".into(), Json::Object(params));
        json.insert("passed".into(), json!(ok));
        Doc { text, json, ok }
    }

    fn report(&self, report: &CheckReport, carrier: &Carrier) -> Doc {
        let mut body = Map::new();
        body.insert("entries".into(), report_json(report, carrier));
        self.doc(report.render(carrier), body, report.passed())
    }
}

fn witness_json(w: &Witness, c: &Carrier) -> Json {
    let bindings: Map<String, Json> = w.bindings.iter().map(|(n, v)| (n.clone(), json!(v.render(c)))).collect();
    json!({ "bindings": bindings, "lhs": w.lhs.render(c), "rhs": w.rhs.render(c) })
}

fn entry_json(e: &LawEntry, c: &Carrier) -> Json {
    json!({
        "law": e.law,
        "status": e.status.as_str(),
        "checks": e.checks,
        "sample_seed": e.sample_seed,
        "witness": e.witness.as_ref().map(|w| witness_json(w, c)),
    })
}

fn report_json(report: &CheckReport, c: &Carrier) -> Json {
    Json::Array(report.entries.iter().map(|e| entry_json(e, c)).collect())
}

fn relation_json(r: &Relation, c: &Carrier) -> Json {
    let pairs: Vec<Json> = r.iter().map(|(a, b)| json!([a.render(c), b.render(c)])).collect();
    json!({ "src": r.src_arity(), "dst": r.dst_arity(), "pairs": pairs })
}

fn load_irack(source: &str) -> anyhow::Result<IrackTable> {
    let raw = load_raw_irack(source)?;
    let carrier = raw.carrier.clone();
    match IrackTable::new(raw) {
        Ok(t) => Ok(t),
        Err(AlgebraError::Axioms(report)) => {
            Err(NotAnIrack { source: source.to_string(), carrier, report: *report }.into())
        }
        Err(e) => Err(anyhow!("{source}: {e}")),
    }
}

fn verify(a: &VerifyArgs) -> Outcome {
    if let Some(path) = &a.rack {
        let raw = load_raw_rack(path)?;
        let report = check_rack_axioms(&raw).map_err(|e| anyhow!("{path}: {e}"))?;
        return Ok(Header::new("verify").param("rack", path).report(&report, &raw.carrier));
    }
    let raw = load_raw_irack(&a.irack)?;
    let report = check_irack_axioms(&raw).map_err(|e| anyhow!("{}: {e}", a.irack))?;
    Ok(Header::new("verify").param("irack", &a.irack).report(&report, &raw.carrier))
}

fn lemmas(a: &IrackArg) -> Outcome {
    let raw = load_raw_irack(&a.irack)?;
    let report = check_lemmas_unvalidated(&raw).map_err(|e| anyhow!("{}: {e}", a.irack))?;
    Ok(Header::new("lemmas").param("irack", &a.irack).report(&report, &raw.carrier))
}

fn tuple_check(a: &TupleArgs) -> Outcome {
    let irack = load_irack(&a.source.irack)?;
    let config = TupleCheckConfig { max_arity: a.max_arity, budget: a.budget, seed: a.seed };
    let mut report = check_tuple_rack(&irack, &config);
    if a.irack_laws {
        report = report.merge(check_tuple_irack(&irack, &config));
    }
    let header = Header::new("tuple-check")
        .param("irack", &a.source.irack)
        .param("max-arity", a.max_arity)
        .param("budget", a.budget)
        .param("seed", a.seed);
    Ok(header.report(&report, irack.carrier()))
}

fn tangle_check(a: &TangleArgs) -> Outcome {
    let irack = load_irack(&a.source.irack)?;
    if a.relation.is_empty() && a.probes.is_none() {
        bail!("tangle-check needs --relation or --probes");
    }
    let mut header = Header::new("tangle-check").param("irack", &a.source.irack);
    let mut report = CheckReport::new();
    for (i, path) in a.relation.iter().enumerate() {
        let r = load_relation(path, irack.carrier())?;
        header = header.param("relation", path);
        report.absorb(&format!("relation[{i}]"), is_tangled(&r, &irack));
    }
    if let Some(n) = a.probes {
        let (r, s) = belt_probes(n, &irack)?;
        header = header.param("probes", n);
        report.absorb("R", is_tangled(&r, &irack));
        report.absorb("S", is_tangled(&s, &irack));
    }
    Ok(header.report(&report, irack.carrier()))
}

fn category_check(a: &CategoryArgs) -> Outcome {
    let irack = load_irack(&a.source.irack)?;
    let [m, n, p] = a.arities[..] else { bail!("--arities takes exactly three values") };
    let mut header =
        Header::new("category-check").param("irack", &a.source.irack).param("arities", format!("{m},{n},{p}"));
    let mut natural = Vec::new();
    for path in &a.natural {
        natural.push(load_relation(path, irack.carrier())?);
        header = header.param("natural", path);
    }
    if let Some(strands) = a.probes {
        let (r, s) = belt_probes(strands, &irack)?;
        natural.push(r.into_relation());
        natural.push(s.into_relation());
        header = header.param("probes", strands);
    }
    let report = check_braiding(&irack, (m, n, p), &natural)?.merge(check_tangle_algebra(&irack)?);
    Ok(header.report(&report, irack.carrier()))
}

fn braid_eval(a: &BraidArgs) -> Outcome {
    let irack = load_irack(&a.source.irack)?;
    let c = irack.carrier();
    let word = BraidWord::parse(&a.word, a.strands)?;
    let header = Header::new("braid-eval")
        .param("irack", &a.source.irack)
        .param("strands", a.strands)
        .param("word", quote(&word.to_string()));

    if !a.tuple.is_empty() {
        let mut text = String::new();
        let mut images = Vec::new();
        for literal in &a.tuple {
            let t = TupleVal::parse(literal, c, 1).map_err(|e| anyhow!("--tuple {literal:?}: {e}"))?;
            let image = apply_braid(&word, &t, &irack)?;
            let _ = writeln!(text, "{} -> {}", t.render(c), image.render(c));
            images.push(json!([t.render(c), image.render(c)]));
        }
        let mut body = Map::new();
        body.insert("images".into(), Json::Array(images));
        return Ok(header.doc(text, body, true));
    }

    let relation = eval_braid(&word, &irack)?;
    if let Some(other) = &a.equals {
        let other = BraidWord::parse(other, a.strands)?;
        let entry = relation_equality("braid-equality", &relation, &eval_braid(&other, &irack)?);
        let mut report = CheckReport::new();
        report.push(entry);
        return Ok(header.param("equals", quote(&other.to_string())).report(&report, c));
    }

    let rendered = relation.render(c);
    let mut body = Map::new();
    match &a.output {
        Some(path) => {
            fs::write(path, &rendered).map_err(|e| anyhow!("{}: {e}", path.display()))?;
            body.insert("pairs".into(), json!(relation.len()));
            body.insert("output".into(), json!(path.display().to_string()));
            Ok(header.doc(format!("# wrote {} pairs to {}\n", relation.len(), path.display()), body, true))
        }
        None => {
            body.insert("relation".into(), relation_json(&relation, c));
            Ok(header.doc(rendered, body, true))
        }
    }
}

fn quote(word: &str) -> String {
    format!("\"{word}\"")
}

fn belt(a: &BeltArgs) -> Outcome {
    let irack = load_irack(&a.source.irack)?;
    let c = irack.carrier();
    let (r, s) = belt_probes(a.strands, &irack)?;
    let mut header = Header::new("belt").param("irack", &a.source.irack).param("strands", a.strands);

    let word = match (&a.word, a.power) {
        (Some(w), _) => BraidWord::parse(w, a.strands)?,
        (None, Some(k)) => torsion(a.strands)?.pow(k),
        (None, None) => bail!("belt needs --power or --word"),
    };

    header = match (&a.word, a.power) {
        (Some(_), _) => header.param("word", quote(&word.to_string())),
        (None, Some(k)) => header.param("power", k),
        (None, None) => header,
    };

    let mut body = Map::new();
    let mut text = String::new();
    if let (None, Some(k)) = (&a.word, a.power) {
        let report = belt_trick(a.strands, k, &irack)?;
        text.push_str(&report.render(&irack));
        body.insert("strands".into(), json!(report.strands));
        body.insert("power".into(), json!(report.power));
        body.insert("result".into(), json!(report.result.as_str()));
        let traj: Vec<Json> = report.trajectories.iter().map(|(x, y)| json!([x.render(c), y.render(c)])).collect();
        body.insert("trajectories".into(), Json::Array(traj));
    } else {
        let closed = close_word(&word, &r, &s, &irack)?;
        let result = closure_name(&closed);
        let _ = writeln!(text, "n={} word={} result={result}", a.strands, quote(&word.to_string()));
        let mut traj = Vec::new();
        for (_, t) in r.iter() {
            let image = apply_braid(&word, t, &irack)?;
            let _ = writeln!(text, "trajectory: {} -> {}", t.render(c), image.render(c));
            traj.push(json!([t.render(c), image.render(c)]));
        }
        body.insert("strands".into(), json!(a.strands));
        body.insert("word".into(), json!(word.to_string()));
        body.insert("result".into(), json!(result));
        body.insert("trajectories".into(), Json::Array(traj));
    }

    let mut ok = true;
    if let Some(other) = &a.same_as {
        let other = BraidWord::parse(other, a.strands)?;
        let d = distinguish(&word, &other, &r, &s, &irack)?;
        let entry = relation_equality("closure-equality", &d.first, &d.second);
        let _ = writeln!(text, "{}", entry.render(c));
        body.insert("same_as".into(), json!(other.to_string()));
        body.insert("other_result".into(), json!(closure_name(&d.second)));
        body.insert("entries".into(), Json::Array(vec![entry_json(&entry, c)]));
        header = header.param("same-as", quote(&other.to_string()));
        ok = !d.differs;
    }
    Ok(header.doc(text, body, ok))
}

fn closure_name(closed: &Relation) -> &'static str {
    if closed.contains(&TupleVal::empty(), &TupleVal::empty()) {
        "point"
    } else {
        "empty"
    }
}

fn enumerate(a: &EnumerateArgs) -> Outcome {
    let dedup = !a.all;
    let (summary, files): (String, Vec<String>) = if a.racks {
        let result = enumerate_racks(a.order, dedup)?;
        (result.summary(), result.tables.iter().map(format_rack).collect())
    } else {
        let result = enumerate_iracks(a.order, dedup)?;
        (result.summary(), result.tables.iter().map(format_irack).collect())
    };
    let kind = if a.racks { "rack" } else { "irack" };
    let header = Header::new("enumerate").param("kind", kind).param("order", a.order).param("dedup", dedup);
    let mut text = format!("{summary}\n");
    let mut body = Map::new();
    body.insert("summary".into(), json!(summary));
    if let Some(dir) = &a.out {
        fs::create_dir_all(dir).map_err(|e| anyhow!("{}: {e}", dir.display()))?;
        let mut written = Vec::new();
        for (i, contents) in files.iter().enumerate() {
            let path = dir.join(format!("{kind}-{}-{:04}.txt", a.order, i + 1));
            fs::write(&path, contents).map_err(|e| anyhow!("{}: {e}", path.display()))?;
            written.push(path.display().to_string());
        }
        let _ = writeln!(text, "# wrote {} files to {}", written.len(), dir.display());
        body.insert("files".into(), json!(written));
    }
    Ok(header.doc(text, body, true))
}

fn saturate(a: &SaturateArgs) -> Outcome {
    let irack = load_irack(&a.source.irack)?;
    let c = irack.carrier();
    let seed = load_relation(&a.relation, c)?;
    let header = Header::new("saturate")
        .param("irack", &a.source.irack)
        .param("relation", &a.relation)
        .param("max-pairs", a.max_pairs);
    match saturate_to_tangled(&seed, &irack, a.max_pairs) {
        Ok(closed) => {
            let mut body = Map::new();
            body.insert("relation".into(), relation_json(&closed, c));
            Ok(header.doc(closed.render(c), body, true))
        }
        Err(SaturateError::Tr2Violation { pair, element, lhs, rhs }) => {
            let witness =
                Witness::new(vec![("pair", Value::Pair(pair.0, pair.1)), ("c", Value::Elem(element))], lhs, rhs);
            let mut report = CheckReport::new();
            report.push(LawEntry::fail("TR(2)", 1, witness));
            Ok(header.report(&report, c))
        }
        Err(e) => Err(anyhow!("saturate: {e}")),
    }
}

fn execute(command: &Command) -> Outcome {
    match command {
        Command::Verify(a) => verify(a),
        Command::Lemmas(a) => lemmas(a),
        Command::TupleCheck(a) => tuple_check(a),
        Command::TangleCheck(a) => tangle_check(a),
        Command::CategoryCheck(a) => category_check(a),
        Command::BraidEval(a) => braid_eval(a),
        Command::Belt(a) => belt(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Saturate(a) => saturate(a),
    }
}

fn emit(doc: &Doc, json_mode: bool, out: &mut dyn Write) -> std::io::Result<()> {
    if json_mode {
        let text = serde_json::to_string_pretty(&Json::Object(doc.json.clone())).expect("JSON values serialize");
        writeln!(out, "{text}")
    } else {
        out.write_all(doc.text.as_bytes())
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                2
            } else {
                let _ = out.write_all(rendered.as_bytes());
                0
            };
        }
    };

    let outcome = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.get()).build() {
            Ok(pool) => pool.install(|| execute(&cli.command)),
            Err(e) => Err(e.into()),
        },
        None => execute(&cli.command),
    };

    let doc = match outcome {
        Ok(doc) => doc,
        Err(e) => match e.downcast::<NotAnIrack>() {
            Ok(NotAnIrack { source, carrier, report }) => {
                Header::new("not-an-irack").param("irack", source).report(&report, &carrier)
            }
            Err(e) => {
                let _ = writeln!(err, "irack: error: {e:#}");
                return 2;
            }
        },
    };
    if let Err(e) = emit(&doc, cli.json, out) {
        let _ = writeln!(err, "irack: error: {e}");
        return 2;
    }
    if doc.ok {
        0
    } else {
        1
    }
}
