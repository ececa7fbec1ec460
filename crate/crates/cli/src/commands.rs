use std::fmt;
use std::io::Read;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};
use superomni_core::dirac::{
    check_characteristic_pair, dirac_from_lie, enumerate_dirac, extract_characteristic_pair, is_dirac,
    is_maximal_isotropic, lie_from_dirac, EnumerationGuard,
};
use superomni_core::lie2::{
    check_crossed_module, check_lie2_axioms, crossed_module_from_strict, lie2_from_omni, skeletal_from_quadratic,
    strict_from_crossed_module,
};
use superomni_core::liesuper::{
    check_action, check_graded, check_leibniz_rule, check_lie, gl_bracket_table, is_quadratic_compatible,
    semidirect_product, BracketTable, EvenBilinearForm,
};
use superomni_core::omni::{check_omni_leibniz, check_prop_homotopy, OmniTables};
use superomni_core::superlinalg::{gl_space, Field, GradedSubspace, Parity, SuperSpace, SuperVector};
use superomni_core::{AlgebraError, Limit};

use crate::docs::{
    combination, parse_field, AlgebraDoc, CrossedDoc, Entry, FormDoc, Lie2Doc, RhoDoc, SubspaceDoc,
};
use crate::report::Report;

/// Exact checks and constructions for omni-Lie superalgebras, Dirac
/// structures and Lie 2-superalgebras.
///
/// Exit status: 0 when every check passes, 1 when a check fails, 2 on
/// unreadable or invalid input.
#[derive(Debug, Parser)]
#[command(name = "superomni", version)]
pub struct Cli {
    /// Print reports as JSON
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Axiom checks on algebra documents
    #[command(subcommand)]
    Check(CheckCmd),
    /// Constructions emitting algebra documents
    #[command(subcommand)]
    Build(BuildCmd),
    /// The omni-Lie superalgebra gl(V) ⊕ V
    #[command(subcommand)]
    Omni(OmniCmd),
    /// Dirac structures of gl(V) ⊕ V
    #[command(subcommand)]
    Dirac(DiracCmd),
    /// Lie 2-superalgebras and crossed modules
    #[command(subcommand)]
    Lie2(Lie2Cmd),
}

#[derive(Debug, Args)]
pub struct Dims {
    /// Even and odd dimension of V
    #[arg(long, num_args = 2, value_names = ["M", "N"], required = true)]
    dims: Vec<usize>,
    /// Q, a prime p, or GF(p)
    #[arg(long, default_value = "Q")]
    field: String,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct FormChoice {
    /// Use the supertrace form; the algebra must have the basis E[a,b] of gl(V)
    #[arg(long)]
    supertrace: bool,
    /// Read the form from a document
    #[arg(long, value_name = "FORM")]
    form: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum CheckCmd {
    /// Gradedness, super skew-symmetry and super Jacobi
    Lie { algebra: String },
    /// Gradedness and the super Leibniz rule
    Leibniz { algebra: String },
    /// The representation axiom ρ([x,y]) = [ρ(x),ρ(y)]
    Action { algebra: String, rho: String },
    /// Invariance of an even super symmetric form
    Quadratic {
        algebra: String,
        #[command(flatten)]
        form: FormChoice,
    },
}

#[derive(Debug, Subcommand)]
pub enum BuildCmd {
    /// The semidirect product L ⋉ V
    Semidirect { algebra: String, rho: String },
    /// gl(m|n) with the super commutator
    Gl(Dims),
}

#[derive(Debug, Subcommand)]
pub enum OmniCmd {
    /// The super Leibniz rule for ∘ and J1 = T on all basis triples
    Check(Dims),
    /// ∘, ⟦·,·⟧ and ⟨·,·⟩ on all basis pairs
    Table(Dims),
}

#[derive(Debug, Subcommand)]
pub enum DiracCmd {
    /// Maximal isotropy and closure under ⟦·,·⟧
    Check { subspace: String },
    /// The Dirac structure of a Lie superalgebra on a subspace W ⊆ V
    FromLie {
        algebra: String,
        /// Standard V = e1.. | f1.. of this size; default: V is the algebra itself
        #[arg(long, num_args = 2, value_names = ["M", "N"])]
        ambient: Option<Vec<usize>>,
        /// Basis vectors of V spanning W, one per algebra basis element in
        /// document order; default: the algebra's own names
        #[arg(long, num_args = 1.., value_name = "NAME")]
        embed: Option<Vec<String>>,
    },
    /// The Lie superalgebra on W = D^0 of a Dirac structure
    ToLie { subspace: String },
    /// The characteristic pair (D, π) and its three closure conditions
    PairCheck { subspace: String },
    /// Every Dirac structure over GF(p), matched against every Lie structure
    Enumerate {
        /// The prime p
        #[arg(long)]
        field: String,
        #[arg(long, num_args = 2, value_names = ["M", "N"], required = true)]
        dims: Vec<usize>,
        /// Also print every Dirac structure with its Lie superalgebra
        #[arg(long)]
        list: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum Lie2Cmd {
    /// The Lie 2-superalgebra of the omni-Lie superalgebra
    FromOmni {
        #[command(flatten)]
        dims: Dims,
        /// Check the axioms instead of printing the document
        #[arg(long)]
        check: bool,
    },
    /// Axioms (a)–(i)
    Check { lie2: String },
    /// The crossed module of a strict Lie 2-superalgebra
    ToCrossed { lie2: String },
    /// The strict Lie 2-superalgebra of a crossed module
    FromCrossed {
        crossed: String,
        #[arg(long)]
        check: bool,
    },
    /// Crossed module axioms
    CheckCrossed { crossed: String },
    /// V1 = K, d = 0, l3(x,y,z) = B([x,y],z) from an invariant form
    Skeletal {
        algebra: String,
        #[command(flatten)]
        form: FormChoice,
        #[arg(long)]
        check: bool,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or invalid input; exit status 2.
    Input(String),
    /// The input fails a precondition that is itself a check; exit status 1.
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Check(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Check(m) => write!(f, "check failed: {m}"),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> CliError {
        use AlgebraError::*;
        match e {
            NotLie(_) | InvalidAction(_) | NotMaximalIsotropic | NotDirac(_) | NotStrict
            | InvalidCrossedModule(_) | NotInvariant(_) => CliError::Check(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn input(e: String) -> CliError {
    CliError::Input(e)
}

/// What a command printed and whether its checks passed.
pub struct Output {
    pub text: String,
    pub pass: bool,
}

fn read_doc<T: DeserializeOwned>(path: &str) -> CliResult<T> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| input(format!("{path}: {e}")))?
    };
    serde_json::from_str(&text)
        .map_err(|e| {
            // serde appends its own " at line L column C"; keep one copy, up front
            let msg = e.to_string();
            let suffix = format!(" at line {} column {}", e.line(), e.column());
            let msg = msg.strip_suffix(&suffix).unwrap_or(&msg);
            input(format!("{path}: line {} column {}: {msg}", e.line(), e.column()))
        })
}

fn in_file<T>(path: &str, r: Result<T, String>) -> CliResult<T> {
    r.map_err(|e| input(format!("{path}: {e}")))
}

fn document<T: Serialize>(doc: &T) -> Output {
    let mut text = serde_json::to_string_pretty(doc).expect("documents serialize");
    text.push('\n');
    Output { text, pass: true }
}

fn report(r: Report, json: bool) -> Output {
    Output {
        text: r.render(json),
        pass: r.pass(),
    }
}

fn load_algebra(path: &str) -> CliResult<BracketTable> {
    let doc: AlgebraDoc = read_doc(path)?;
    in_file(path, doc.table())
}

fn space_of(dims: &Dims) -> CliResult<SuperSpace> {
    let field = parse_field(&dims.field).map_err(|e| input(format!("--field: {e}")))?;
    Ok(SuperSpace::standard(field, dims.dims[0], dims.dims[1]))
}

/// Omni and Lie 2-superalgebra constructions divide by 2 and 3.
fn omni_space(dims: &Dims) -> CliResult<SuperSpace> {
    let v = space_of(dims)?;
    if matches!(v.field().characteristic(), 2 | 3) {
        return Err(input(format!(
            "--field: {} is not allowed here; 2 and 3 must be invertible",
            v.field()
        )));
    }
    Ok(v)
}

fn form_for(table: &BracketTable, choice: &FormChoice) -> CliResult<EvenBilinearForm> {
    match &choice.form {
        Some(path) => {
            let doc: FormDoc = read_doc(path)?;
            in_file(path, doc.form(table.space()))
        }
        None => supertrace_on(table.space()).map_err(|e| input(format!("--supertrace: {e}"))),
    }
}

fn parse_elementary(label: &str) -> Option<(&str, &str)> {
    label.strip_prefix("E[")?.strip_suffix(']')?.split_once(',')
}

/// `B(X, Y) = str(XY)` on a space whose basis is named `E[a,b]`.
///
/// The names `a` of `V` are read off the labels; their parities are fixed
/// by the parities of the `E[a,b]` up to a global swap, which is settled by
/// taking names starting with `e` as even (failing that, names starting with
/// `f` as odd, failing that, the first name as even).
pub fn supertrace_on(space: &SuperSpace) -> Result<EvenBilinearForm, String> {
    let mut pairs = Vec::with_capacity(space.dim());
    let mut names: Vec<&str> = Vec::new();
    for label in space.labels() {
        let (a, b) = parse_elementary(label).ok_or_else(|| format!("basis name {label:?} is not of the form E[a,b]"))?;
        for n in [a, b] {
            if !names.contains(&n) {
                names.push(n);
            }
        }
        pairs.push((a, b));
    }
    let n = names.len();
    if n * n != space.dim() {
        return Err(format!("{} basis names cannot be all E[a,b] over {n} names", space.dim()));
    }
    let at = |a: &str, b: &str| space.index_of(&format!("E[{a},{b}]"));
    let first = names.first().copied().unwrap_or_default();
    let relative = |a: &str| at(first, a).map(|i| space.parity(i));
    let anchor = match names.iter().find(|s| s.starts_with('e')) {
        Some(e) => relative(e).unwrap_or(Parity::Even),
        None => match names.iter().find(|s| s.starts_with('f')) {
            Some(f) => relative(f).unwrap_or(Parity::Even) + Parity::Odd,
            None => Parity::Even,
        },
    };
    let mut parity = std::collections::HashMap::new();
    for a in &names {
        let r = relative(a).ok_or_else(|| format!("E[{first},{a}] is missing"))?;
        parity.insert(*a, anchor + r);
    }
    for (i, (a, b)) in pairs.iter().enumerate() {
        if space.parity(i) != parity[a] + parity[b] {
            return Err(format!("E[{a},{b}] has the wrong parity"));
        }
    }
    let field = space.field();
    let d = space.dim();
    let mut gram = vec![field.zero(); d * d];
    for (i, (a, b)) in pairs.iter().enumerate() {
        for (j, (c, e)) in pairs.iter().enumerate() {
            if b == c && a == e {
                gram[i * d + j] = field.one().signed(parity[a] == Parity::Odd);
            }
        }
    }
    EvenBilinearForm::new(space, gram).map_err(|e| e.to_string())
}

pub fn run(cli: &Cli) -> CliResult<Output> {
    let json = cli.json;
    match &cli.command {
        Command::Check(c) => run_check(c, json),
        Command::Build(c) => run_build(c),
        Command::Omni(c) => run_omni(c, json),
        Command::Dirac(c) => run_dirac(c, json),
        Command::Lie2(c) => run_lie2(c, json),
    }
}

fn run_check(c: &CheckCmd, json: bool) -> CliResult<Output> {
    Ok(match c {
        CheckCmd::Lie { algebra } => report(Report::new("check lie", check_lie(&load_algebra(algebra)?)), json),
        CheckCmd::Leibniz { algebra } => {
            let t = load_algebra(algebra)?;
            report(Report::new("check leibniz", vec![check_graded(&t), check_leibniz_rule(&t)]), json)
        }
        CheckCmd::Action { algebra, rho } => {
            let t = load_algebra(algebra)?;
            let doc: RhoDoc = read_doc(rho)?;
            let r = in_file(rho, doc.representation(t.space()))?;
            report(Report::new("check action", vec![check_action(&t, &r)?]), json)
        }
        CheckCmd::Quadratic { algebra, form } => {
            let t = load_algebra(algebra)?;
            let b = form_for(&t, form)?;
            let mut r = Report::new("check quadratic", vec![is_quadratic_compatible(&t, &b)?]);
            r.fact("nondegenerate", b.is_nondegenerate().to_string(), json!(b.is_nondegenerate()));
            report(r, json)
        }
    })
}

fn run_build(c: &BuildCmd) -> CliResult<Output> {
    Ok(match c {
        BuildCmd::Semidirect { algebra, rho } => {
            let t = load_algebra(algebra)?;
            let doc: RhoDoc = read_doc(rho)?;
            let r = in_file(rho, doc.representation(t.space()))?;
            document(&AlgebraDoc::of(&semidirect_product(&t, &r)?))
        }
        BuildCmd::Gl(dims) => document(&AlgebraDoc::of(&gl_bracket_table(&space_of(dims)?))),
    })
}

fn table_entries(table: &BracketTable) -> Vec<Entry> {
    let s = table.space();
    let mut out = Vec::with_capacity(s.dim() * s.dim());
    for i in 0..s.dim() {
        for j in 0..s.dim() {
            out.push(Entry {
                left: s.label(i).into(),
                right: s.label(j).into(),
                value: combination(table.get(i, j)),
            });
        }
    }
    out
}

fn run_omni(c: &OmniCmd, json: bool) -> CliResult<Output> {
    match c {
        OmniCmd::Check(dims) => {
            let v = omni_space(dims)?;
            let limit = Limit::from_env();
            let mut verdicts = vec![check_omni_leibniz(&v, limit)?];
            verdicts.extend(check_prop_homotopy(&v, limit)?);
            let mut r = Report::new("omni check", verdicts);
            let n = v.dim();
            r.fact("dim E", (n * n + n).to_string(), json!(n * n + n));
            Ok(report(r, json))
        }
        OmniCmd::Table(dims) => {
            let v = omni_space(dims)?;
            let tables = OmniTables::new(&v)?;
            let e = tables.space().e();
            let circ = table_entries(tables.circ());
            let bracket = table_entries(tables.bracket());
            let mut pairing = Vec::with_capacity(e.dim() * e.dim());
            for i in 0..e.dim() {
                for j in 0..e.dim() {
                    pairing.push(Entry {
                        left: e.label(i).into(),
                        right: e.label(j).into(),
                        value: combination(tables.pairing_basis(i, j)),
                    });
                }
            }
            if json {
                return Ok(document(&json!({
                    "field": v.field().to_string(),
                    "basis": e.labels(),
                    "circ": circ,
                    "bracket": bracket,
                    "pairing": pairing,
                })));
            }
            let mut text = String::new();
            for (name, op, entries) in [("circ", "∘", &circ), ("bracket", "⟦,⟧", &bracket), ("pairing", "⟨,⟩", &pairing)] {
                text.push_str(&format!("# {name}\n"));
                for en in entries {
                    let value = if en.value.is_empty() {
                        "0".to_string()
                    } else {
                        en.value
                            .iter()
                            .map(|(k, c)| format!("({})·{k}", coeff_text(c)))
                            .collect::<Vec<_>>()
                            .join(" + ")
                    };
                    text.push_str(&format!("{} {op} {} = {value}\n", en.left, en.right));
                }
            }
            Ok(Output { text, pass: true })
        }
    }
}

fn coeff_text(c: &crate::docs::Coeff) -> String {
    match c {
        crate::docs::Coeff::Int(n) => n.to_string(),
        crate::docs::Coeff::Text(s) => s.clone(),
    }
}

fn load_subspace(path: &str, tables_needed: bool) -> CliResult<(SuperSpace, GradedSubspace, Option<OmniTables>)> {
    let doc: SubspaceDoc = read_doc(path)?;
    let s = in_file(path, doc.parse())?;
    if s.v_only {
        return Err(input(format!("{path}: v_only: a subspace of gl(V) ⊕ V is required")));
    }
    let tables = if tables_needed {
        Some(OmniTables::new(&s.v)?)
    } else {
        None
    };
    Ok((s.v, s.subspace, tables))
}

fn generators(l: &GradedSubspace) -> Value {
    Value::Array(l.basis().iter().map(|v| json!(combination(v))).collect())
}

fn list_text(vs: &[SuperVector]) -> String {
    if vs.is_empty() {
        return "0".into();
    }
    vs.iter().map(|v| format!("[{v}]")).collect::<Vec<_>>().join(", ")
}

fn run_dirac(c: &DiracCmd, json: bool) -> CliResult<Output> {
    match c {
        DiracCmd::Check { subspace } => {
            let (_, l, tables) = load_subspace(subspace, true)?;
            let tables = tables.expect("requested");
            let mut r = Report::new("dirac check", is_dirac(&tables, &l)?);
            r.fact("dim L", l.dim().to_string(), json!(l.dim()));
            Ok(report(r, json))
        }
        DiracCmd::FromLie { algebra, ambient, embed } => {
            let t = load_algebra(algebra)?;
            let (w, table) = place_algebra(&t, ambient.as_deref(), embed.as_deref())?;
            let l = dirac_from_lie(&w, &table)?;
            Ok(document(&SubspaceDoc::of(w.ambient(), &l, false)))
        }
        DiracCmd::ToLie { subspace } => {
            let (_, l, tables) = load_subspace(subspace, true)?;
            let tables = tables.expect("requested");
            let verdicts = is_dirac(&tables, &l)?;
            if verdicts.iter().any(|v| !v.is_pass()) {
                return Ok(report(Report::new("dirac to-lie", verdicts), json));
            }
            let (_, table) = lie_from_dirac(&tables, &l)?;
            Ok(document(&AlgebraDoc::of(&table)))
        }
        DiracCmd::PairCheck { subspace } => {
            let (v, l, tables) = load_subspace(subspace, true)?;
            let tables = tables.expect("requested");
            let iso = is_maximal_isotropic(&tables, &l)?;
            if !iso.is_pass() {
                return Ok(report(Report::new("dirac pair-check", vec![iso]), json));
            }
            let pair = extract_characteristic_pair(&tables, &l)?;
            let mut verdicts = vec![iso];
            verdicts.extend(check_characteristic_pair(&pair)?);
            let mut r = Report::new("dirac pair-check", verdicts);
            r.fact("D", list_text(pair.d().basis()), generators(pair.d()));
            let null = pair.null_space();
            r.fact("D^0", list_text(null.basis()), generators(&null));
            let gl = gl_space(&v);
            let mut pi = serde_json::Map::new();
            let mut text = Vec::new();
            for (i, m) in pair.pi().iter().enumerate() {
                let x = m.to_gl_vector(&gl)?;
                text.push(format!("{} ↦ {x}", v.label(i)));
                pi.insert(v.label(i).to_string(), json!(combination(&x)));
            }
            r.fact("π", text.join("; "), Value::Object(pi));
            Ok(report(r, json))
        }
        DiracCmd::Enumerate { field, dims, list } => {
            let field = parse_field(field).map_err(|e| input(format!("--field: {e}")))?;
            if field == Field::Rational {
                return Err(input("--field: enumeration needs a prime".into()));
            }
            let v = SuperSpace::standard(field, dims[0], dims[1]);
            let census = enumerate_dirac(&v, EnumerationGuard::from_env())?;
            let mut r = Report::new("dirac enumerate", census.verdicts.clone());
            r.fact("Dirac structures", census.dirac.len().to_string(), json!(census.dirac.len()));
            r.fact("Lie structures", census.lie.len().to_string(), json!(census.lie.len()));
            r.fact(
                "graded subspaces examined",
                census.subspaces_examined.to_string(),
                json!(census.subspaces_examined),
            );
            r.fact("graded tables examined", census.tables_examined.to_string(), json!(census.tables_examined));
            if *list {
                let tables = OmniTables::new(&v)?;
                let mut items = Vec::new();
                let mut text = Vec::new();
                for l in &census.dirac {
                    let (w, t) = lie_from_dirac(&tables, l)?;
                    let alg = AlgebraDoc::of(&t);
                    text.push(format!(
                        "\n  L = {}\n    W = {}\n    brackets = {}",
                        list_text(l.basis()),
                        list_text(w.basis()),
                        serde_json::to_string(&alg.body.brackets).expect("serializes")
                    ));
                    items.push(json!({
                        "subspace": generators(l),
                        "w": generators(&w),
                        "algebra": alg,
                    }));
                }
                r.fact("structures", text.concat(), Value::Array(items));
            }
            Ok(report(r, json))
        }
    }
}

/// `W ⊆ V` and the bracket moved onto the echelon basis of `W`.
fn place_algebra(
    t: &BracketTable,
    ambient: Option<&[usize]>,
    embed: Option<&[String]>,
) -> CliResult<(GradedSubspace, BracketTable)> {
    let s = t.space();
    let v = match ambient {
        None if embed.is_none() => return Ok((GradedSubspace::full(s), t.clone())),
        None => s.clone(),
        Some(d) => SuperSpace::standard(s.field(), d[0], d[1]),
    };
    // document order: even names, then odd names
    let mut order: Vec<usize> = (0..s.dim()).collect();
    order.sort_by_key(|i| s.parity(*i).bit());
    let names: Vec<String> = match embed {
        Some(names) => names.to_vec(),
        None => order.iter().map(|i| s.label(*i).to_string()).collect(),
    };
    if names.len() != s.dim() {
        return Err(input(format!("--embed: {} names for an algebra of dimension {}", names.len(), s.dim())));
    }
    let mut target = vec![0; s.dim()];
    let mut used = std::collections::HashSet::new();
    for (k, name) in names.iter().enumerate() {
        let j = v
            .index_of(name)
            .ok_or_else(|| input(format!("--embed: {name:?} is not a basis vector of V")))?;
        let i = order[k];
        if v.parity(j) != s.parity(i) {
            return Err(input(format!("--embed: {name:?} and {} differ in parity", s.label(i))));
        }
        if !used.insert(j) {
            return Err(input(format!("--embed: {name:?} is used twice")));
        }
        target[i] = j;
    }
    let w = GradedSubspace::from_vectors(&v, &target.iter().map(|j| v.basis_vector(*j)).collect::<Vec<_>>())?;
    let ws = w.basis_space();
    // echelon rows of a span of basis vectors are those vectors in V order
    let slot = |i: usize| w.pivots().iter().position(|p| *p == target[i]).expect("pivot of an embedded vector");
    let mut table = BracketTable::zero(&ws);
    for i in 0..s.dim() {
        for j in 0..s.dim() {
            let value = t.get(i, j);
            let mut moved = ws.zero();
            for (k, c) in value.support() {
                moved.add_scaled(c, &ws.basis_vector(slot(k)));
            }
            table.set(slot(i), slot(j), moved)?;
        }
    }
    Ok((w, table))
}

fn run_lie2(c: &Lie2Cmd, json: bool) -> CliResult<Output> {
    match c {
        Lie2Cmd::FromOmni { dims, check } => {
            let v = omni_space(dims)?;
            if *check {
                let n = v.dim();
                Limit::from_env().check(n * n + n)?;
                let t = lie2_from_omni(&v)?;
                Ok(report(Report::new("lie2 from-omni", check_lie2_axioms(&t)), json))
            } else {
                Ok(document(&Lie2Doc::of(&lie2_from_omni(&v)?)))
            }
        }
        Lie2Cmd::Check { lie2 } => {
            let doc: Lie2Doc = read_doc(lie2)?;
            let t = in_file(lie2, doc.parse())?;
            Ok(report(Report::new("lie2 check", check_lie2_axioms(&t)), json))
        }
        Lie2Cmd::ToCrossed { lie2 } => {
            let doc: Lie2Doc = read_doc(lie2)?;
            let t = in_file(lie2, doc.parse())?;
            Ok(document(&CrossedDoc::of(&crossed_module_from_strict(&t)?)))
        }
        Lie2Cmd::FromCrossed { crossed, check } => {
            let doc: CrossedDoc = read_doc(crossed)?;
            let c = in_file(crossed, doc.parse())?;
            let t = strict_from_crossed_module(&c)?;
            if *check {
                Ok(report(Report::new("lie2 from-crossed", check_lie2_axioms(&t)), json))
            } else {
                Ok(document(&Lie2Doc::of(&t)))
            }
        }
        Lie2Cmd::CheckCrossed { crossed } => {
            let doc: CrossedDoc = read_doc(crossed)?;
            let c = in_file(crossed, doc.parse())?;
            Ok(report(Report::new("lie2 check-crossed", check_crossed_module(&c)?), json))
        }
        Lie2Cmd::Skeletal { algebra, form, check } => {
            let t = load_algebra(algebra)?;
            let b = form_for(&t, form)?;
            let s = skeletal_from_quadratic(&t, &b)?;
            if *check {
                Ok(report(Report::new("lie2 skeletal", check_lie2_axioms(&s)), json))
            } else {
                Ok(document(&Lie2Doc::of(&s)))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use superomni_core::liesuper::supertrace_form;

    #[test]
    fn supertrace_matches_the_library_form() {
        for (m, n) in [(1, 1), (2, 1), (0, 2)] {
            let v = SuperSpace::standard(Field::Rational, m, n);
            let gl = gl_space(&v);
            assert_eq!(supertrace_on(&gl).unwrap(), supertrace_form(&v), "{m}|{n}");
        }
        let odd_first = SuperSpace::with_basis(
            Field::Rational,
            vec![("x".into(), Parity::Odd), ("y".into(), Parity::Even)],
        )
        .unwrap();
        // without e/f names the first name is taken as even: the form flips sign
        let flipped = supertrace_on(&gl_space(&odd_first)).unwrap();
        assert_eq!(flipped.entry(0, 0), &Field::Rational.one());
        assert!(supertrace_on(&SuperSpace::standard(Field::Rational, 2, 0)).is_err());
    }

    #[test]
    fn characteristic_guard() {
        let dims = Dims { dims: vec![1, 0], field: "3".into() };
        assert!(matches!(omni_space(&dims), Err(CliError::Input(_))));
        let dims = Dims { dims: vec![1, 0], field: "GF(5)".into() };
        assert!(omni_space(&dims).is_ok());
    }

    #[test]
    fn embedding_moves_the_bracket() {
        // [f1, f1] = e1 placed on f2 ↦ e2 inside 2|2
        let s = SuperSpace::standard(Field::Rational, 1, 1);
        let mut t = BracketTable::zero(&s);
        t.set(1, 1, s.basis_vector(0)).unwrap();
        let (w, moved) = place_algebra(&t, Some(&[2, 2]), Some(&["e2".into(), "f2".into()])).unwrap();
        assert_eq!(w.dim(), 2);
        assert_eq!(moved.space().labels(), &["e2".to_string(), "f2".to_string()]);
        assert_eq!(moved.get(1, 1), &moved.space().basis_vector(0));
        assert!(place_algebra(&t, Some(&[2, 2]), Some(&["f1".into(), "f2".into()])).is_err());
        assert!(place_algebra(&t, Some(&[2, 2]), Some(&["e3".into(), "f2".into()])).is_err());
    }

    #[test]
    fn cli_parses() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
        let cli = Cli::try_parse_from(["superomni", "omni", "check", "--dims", "1", "1", "--json"]).unwrap();
        assert!(cli.json);
        assert!(Cli::try_parse_from(["superomni", "lie2", "skeletal", "a.json"]).is_err());
    }
}
