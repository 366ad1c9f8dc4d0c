//! Command-line pipeline: inputs → toric data → presentation → certificates.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::arith::{identifiers, is_identifier, parse_field_elem, MPoly, ParamSystem, Rational, Ring, UniPoly};
use crate::batyrev::{self, hexagon_ring, QHPresentation, Reduced, ReduceOptions, ReducedPresentation};
use crate::blowup;
use crate::error::{Error, Result};
use crate::products;
use crate::ssalg::{
    elimination_claims, field_summand_certificate, hexagon, is_semisimple_univariate, seidenberg_radical_check,
    trace_form_semisimple, verify, AlgebraJson, Certificate, FDAlgebra, Verdict,
};
use crate::toric::{classify_fano, standard_model, FanoTag, MomentPolytope};

/// Quotients up to this degree are also run through the trace form.
pub const CROSS_CHECK_MAX_DIM: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Validate,
    Classify,
    Presentation,
    Reduce,
    Semisimple,
    FieldSummand,
}

impl Check {
    fn requires(self) -> Option<Check> {
        match self {
            Check::Validate => None,
            Check::Classify => Some(Check::Validate),
            Check::Presentation => Some(Check::Classify),
            Check::Reduce => Some(Check::Presentation),
            Check::Semisimple | Check::FieldSummand => Some(Check::Reduce),
        }
    }

    /// Smallest dependency-closed set containing `checks`; everything when
    /// `checks` is empty.
    pub fn closure(checks: &[Check]) -> BTreeSet<Check> {
        if checks.is_empty() {
            return Check::value_variants().iter().copied().collect();
        }
        let mut out = BTreeSet::new();
        for &c in checks {
            let mut cur = Some(c);
            while let Some(k) = cur {
                out.insert(k);
                cur = k.requires();
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "toric-qh", version, about = "Quantum homology presentations and semi-simplicity certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,
    /// Checks to run; prerequisites are added. Defaults to all.
    #[arg(long, global = true, value_enum, value_delimiter = ',')]
    pub check: Vec<Check>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub emit: Emit,
    /// Monomial relations among parameters, e.g. `y=z` or `xyz=1`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub relations: Vec<String>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// A standard toric Fano model with exact parameters.
    Model(ModelArgs),
    /// A polygon read from JSON: `{"vertices": [["0","0"], ...]}`.
    Polytope {
        #[arg(long)]
        file: PathBuf,
    },
    /// The one-point blow-up algebra.
    Blowup {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, default_value = "z")]
        param: String,
    },
    /// Tensor product of two algebras given as JSON.
    Tensor {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// Certificates for a univariate quotient `K[X]/(f)`.
    Certify {
        #[arg(long)]
        poly: String,
        /// The polynomial variable; defaults to `X`, then `A`.
        #[arg(long)]
        var: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    /// cp2, s2xs2, cp2-bl1, cp2-bl2 or cp2-bl3.
    #[arg(long)]
    pub name: String,
    #[arg(long, allow_hyphen_values = true)]
    pub eps: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub scale: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub size: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Model { tag: FanoTag, params: BTreeMap<String, Rational> },
    Polytope { file: PathBuf },
    Blowup { n: i64, param: String },
    Tensor { left: PathBuf, right: PathBuf },
    Certify { poly: String, var: Option<String> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub checks: BTreeSet<Check>,
    pub relations: Vec<String>,
    pub emit: Emit,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let command = match cli.command {
            CommandArgs::Model(m) => {
                let tag: FanoTag = m.name.parse()?;
                let given = [
                    ("eps", m.eps),
                    ("delta", m.delta),
                    ("alpha", m.alpha),
                    ("beta", m.beta),
                    ("gamma", m.gamma),
                    ("scale", m.scale),
                    ("size", m.size),
                    ("a", m.a),
                    ("b", m.b),
                ];
                let mut params = BTreeMap::new();
                for (k, v) in given {
                    if let Some(v) = v {
                        params.insert(k.to_string(), v.parse::<Rational>()?);
                    }
                }
                Command::Model { tag, params }
            }
            CommandArgs::Polytope { file } => Command::Polytope { file },
            CommandArgs::Blowup { n, param } => Command::Blowup { n, param },
            CommandArgs::Tensor { left, right } => Command::Tensor { left, right },
            CommandArgs::Certify { poly, var } => Command::Certify { poly, var },
        };
        Ok(RunConfig {
            command,
            checks: Check::closure(&cli.check),
            relations: cli.relations.iter().map(|r| r.trim().to_string()).filter(|r| !r.is_empty()).collect(),
            emit: cli.emit,
            out: cli.out,
        })
    }

    /// Parses arguments without the program name.
    pub fn parse_from<I, T>(args: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let argv = std::iter::once(OsString::from("toric-qh")).chain(args.into_iter().map(Into::into));
        let cli = Cli::try_parse_from(argv).map_err(|e| Error::Usage(e.to_string().trim_end().to_string()))?;
        RunConfig::from_cli(cli)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
struct CertEntry {
    check: String,
    verdicts: Vec<Verdict>,
    verified: bool,
    certificate: Certificate,
    #[serde(skip)]
    algebra: Option<FDAlgebra>,
}

#[derive(Clone, Debug)]
pub struct Report {
    sections: Vec<(String, Value, Vec<String>)>,
    certificates: Vec<CertEntry>,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            sections: vec![("command".into(), json!(command), vec![format!("command: {command}")])],
            certificates: Vec::new(),
        }
    }

    fn push(&mut self, name: &str, value: impl Serialize, text: Vec<String>) -> Result<()> {
        self.sections.push((name.to_string(), serde_json::to_value(value)?, text));
        Ok(())
    }

    /// Re-verifies `cert` and records it.
    fn certify(&mut self, check: &str, cert: Certificate, alg: Option<&FDAlgebra>) -> Result<()> {
        verify(&cert, alg)?;
        self.certificates.push(CertEntry {
            check: check.to_string(),
            verdicts: cert.verdicts(),
            verified: true,
            certificate: cert,
            algebra: alg.cloned(),
        });
        Ok(())
    }

    pub fn section(&self, name: &str) -> Option<&Value> {
        self.sections.iter().find(|(n, _, _)| n == name).map(|(_, v, _)| v)
    }

    /// Verdict lists of all recorded certificates, by check name.
    pub fn verdicts(&self) -> Vec<(String, Vec<Verdict>)> {
        self.certificates.iter().map(|c| (c.check.clone(), c.verdicts.clone())).collect()
    }

    /// Recorded certificates with the algebra they refer to, if any.
    pub fn certificates(&self) -> impl Iterator<Item = (&str, &Certificate, Option<&FDAlgebra>)> {
        self.certificates
            .iter()
            .map(|c| (c.check.as_str(), &c.certificate, c.algebra.as_ref()))
    }

    pub fn status(&self) -> Status {
        if self.certificates.iter().any(|c| c.verdicts.contains(&Verdict::Inconclusive)) {
            Status::Inconclusive
        } else {
            Status::Verified
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status() {
            Status::Verified => 0,
            Status::Inconclusive => 3,
        }
    }

    pub fn to_json(&self) -> String {
        let mut m = Map::new();
        for (n, v, _) in &self.sections {
            m.insert(n.clone(), v.clone());
        }
        m.insert("certificates".into(), serde_json::to_value(&self.certificates).expect("serializable"));
        m.insert("status".into(), serde_json::to_value(self.status()).expect("serializable"));
        let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, _, lines) in &self.sections {
            if name != "command" {
                out.push_str(&format!("[{name}]\n"));
            }
            for l in lines {
                out.push_str(l);
                out.push('\n');
            }
        }
        if !self.certificates.is_empty() {
            out.push_str("[certificates]\n");
        }
        for c in &self.certificates {
            let v: Vec<String> = c.verdicts.iter().map(Verdict::to_string).collect();
            out.push_str(&format!("{}: {} (verified)\n", c.check, v.join(" + ")));
            for n in &c.certificate.notes {
                out.push_str(&format!("  note: {n}\n"));
            }
        }
        let status = match self.status() {
            Status::Verified => "verified",
            Status::Inconclusive => "inconclusive",
        };
        out.push_str(&format!("status: {status}\n"));
        out
    }

    pub fn render(&self, emit: Emit) -> String {
        match emit {
            Emit::Json => self.to_json(),
            Emit::Text => self.to_text(),
        }
    }
}

/// Exit status for a failed run.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Consistency(_) => 1,
        _ => 2,
    }
}

pub fn run(cfg: &RunConfig) -> Result<Report> {
    match &cfg.command {
        Command::Model { tag, params } => {
            let mut report = Report::new("model");
            let shown: BTreeMap<&String, String> = params.iter().map(|(k, v)| (k, v.to_string())).collect();
            let line = shown.iter().map(|(k, v)| format!("{k} = {v}")).collect::<Vec<_>>().join(", ");
            report.push(
                "input",
                json!({ "model": tag.as_str(), "params": shown }),
                vec![format!("model: {tag}"), format!("params: {line}")],
            )?;
            let p = standard_model(*tag, params)?;
            let hexagon = *tag == FanoTag::Cp2Bl3;
            pipeline(&mut report, &p, hexagon, cfg)?;
            Ok(report)
        }
        Command::Polytope { file } => {
            let mut report = Report::new("polytope");
            let p = read_polytope(file)?;
            report.push(
                "input",
                json!({ "file": file.display().to_string() }),
                vec![format!("file: {}", file.display())],
            )?;
            pipeline(&mut report, &p, false, cfg)?;
            Ok(report)
        }
        Command::Blowup { n, param } => run_blowup(*n, param, cfg),
        Command::Tensor { left, right } => run_tensor(left, right, cfg),
        Command::Certify { poly, var } => run_certify(poly, var.as_deref(), cfg),
    }
}

fn no_relations(cfg: &RunConfig, what: &str) -> Result<()> {
    if cfg.relations.is_empty() {
        Ok(())
    } else {
        Err(Error::usage(format!("--relations does not apply to {what}")))
    }
}

fn pipeline(report: &mut Report, p: &MomentPolytope, hexagon: bool, cfg: &RunConfig) -> Result<()> {
    if !hexagon {
        no_relations(cfg, "this input (use the cp2-bl3 model or certify)")?;
    }
    let checks = &cfg.checks;
    if !checks.contains(&Check::Validate) {
        return Ok(());
    }
    let v = p.validate();
    let mut lines = vec![format!("orientation: {:?}", p.orientation()).to_lowercase()];
    for (k, pt) in p.vertices().iter().enumerate() {
        lines.push(format!("vertex {}: ({}, {})", k + 1, pt[0], pt[1]));
    }
    for f in p.facets() {
        lines.push(format!("facet {}: normal {:?}, support {}", f.index, f.normal, f.support));
    }
    lines.push(format!("delzant: {}, fano: {}", v.delzant, v.fano));
    report.push(
        "polytope",
        json!({
            "vertices": p.vertices(),
            "values": p.values(),
            "orientation": p.orientation(),
            "facets": p.facets(),
            "validation": v,
        }),
        lines,
    )?;
    if !v.delzant {
        return Err(Error::Validation("the polygon is not Delzant".into()));
    }
    if !v.fano {
        return Err(Error::NotFano("the normals do not span a Fano polygon".into()));
    }
    if !checks.contains(&Check::Classify) {
        return Ok(());
    }
    let class = classify_fano(p)?;
    let m = class.witness.matrix;
    report.push(
        "classification",
        &class,
        vec![
            format!("tag: {}", class.tag),
            format!(
                "witness: matrix {:?}, shift {}, reversed {}",
                m, class.witness.shift, class.witness.reversed
            ),
        ],
    )?;
    if !checks.contains(&Check::Presentation) {
        return Ok(());
    }
    let pres = batyrev::presentation(p)?;
    report.push("presentation", &pres, presentation_text(&pres))?;
    if !checks.contains(&Check::Reduce) {
        return Ok(());
    }
    let red = if hexagon {
        batyrev::reduce_with(&pres, &hexagon_options())?
    } else {
        batyrev::reduce(&pres)?
    };
    red.check_soundness(&pres)?;
    let s_text = red.s_text();
    let mut lines = vec![format!("pair: u{}, u{}", red.pair[0], red.pair[1])];
    lines.push(format!("parameters: {}", red.ring.names().collect::<Vec<_>>().join(", ")));
    match &red.form {
        Reduced::Univariate { var, quotient } => {
            lines.push(format!("quotient in {var}: {quotient}"));
            if let Some(s) = &s_text {
                lines.push(format!("in powers of s: {s}"));
            }
        }
        Reduced::Bivariate { vars, generators } => {
            lines.push(format!("ideal in {}, {}:", vars[0], vars[1]));
            lines.extend(generators.iter().map(|g| format!("  {g}")));
        }
    }
    let mut value = serde_json::to_value(&red)?;
    value["params"] = json!(red.ring.names().collect::<Vec<_>>());
    if let Some(s) = &s_text {
        value["s_text"] = json!(s);
    }
    report.push("reduced", value, lines)?;
    match &red.form {
        Reduced::Univariate { quotient, .. } => univariate_checks(report, quotient, checks),
        Reduced::Bivariate { generators, .. } if hexagon => hexagon_checks(report, &red, generators, p.values(), cfg),
        Reduced::Bivariate { generators, vars } => {
            if checks.contains(&Check::Semisimple) {
                let claims = elimination_claims(generators, [&vars[0], &vars[1]])?;
                let cert = seidenberg_radical_check(generators, &claims)?;
                bivariate_summand_note(report, &cert, checks)?;
                report.certify("semisimple", cert, None)?;
            }
            Ok(())
        }
    }
}

fn presentation_text(pres: &QHPresentation) -> Vec<String> {
    let mut lines = vec![format!("generators: {}", pres.generators.join(", "))];
    let [a, b] = pres.additive_text();
    lines.push(format!("additive: {a}, {b}"));
    lines.extend(pres.relations.iter().map(|r| format!("relation: {r}")));
    lines.extend(pres.normalized.iter().map(|r| format!("normalized: {r}")));
    lines
}

fn hexagon_options() -> ReduceOptions {
    let third = |k: &str| {
        crate::arith::Affine::from_parts(Rational::new(1, 3), [(k.to_string(), Rational::from(-1))])
    };
    ReduceOptions {
        ring: Some(hexagon_ring()),
        names: ["A".into(), "B".into()],
        rescale: Some([third("gamma"), third("beta")]),
        pair: None,
    }
}

fn univariate_checks(report: &mut Report, quotient: &UniPoly, checks: &BTreeSet<Check>) -> Result<()> {
    if checks.contains(&Check::Semisimple) {
        let cert = is_semisimple_univariate(quotient)?;
        if quotient.degree().unwrap_or(0) <= CROSS_CHECK_MAX_DIM {
            let alg = FDAlgebra::univariate_quotient(quotient)?;
            let tf = trace_form_semisimple(&alg)?;
            let decisive = |v: Verdict| v != Verdict::Inconclusive;
            if decisive(cert.verdict) && decisive(tf.verdict) && cert.verdict != tf.verdict {
                return Err(Error::consistency("trace form and resultant disagree"));
            }
            report.certify("semisimple", cert, None)?;
            report.certify("semisimple (trace form)", tf, Some(&alg))?;
        } else {
            report.certify("semisimple", cert, None)?;
        }
    }
    if checks.contains(&Check::FieldSummand) {
        report.certify("field-summand", field_summand_certificate(quotient)?, None)?;
    }
    Ok(())
}

fn bivariate_summand_note(report: &mut Report, cert: &Certificate, checks: &BTreeSet<Check>) -> Result<()> {
    if !checks.contains(&Check::FieldSummand) {
        return Ok(());
    }
    let note = if cert.verdict == Verdict::RadicalIdeal {
        "a radical zero-dimensional ideal gives a product of fields, so every factor is a field summand"
    } else {
        "no field-summand certificate for a bivariate ideal without a radical certificate"
    };
    report.push("field-summand", json!({ "note": note }), vec![note.to_string()])
}

/// Rational value of `var − Σ e·target` in the exponent of `s`.
fn relation_defect(ring: &Ring, rel: &crate::arith::MonomialRelation, values: &BTreeMap<String, Rational>) -> Result<Rational> {
    let mut exps = vec![0i32; ring.len()];
    let idx = |n: &str| ring.index_of(n).ok_or_else(|| Error::usage(format!("unknown parameter `{n}`")));
    exps[idx(&rel.var)?] += 1;
    for (t, e) in &rel.target {
        exps[idx(t)?] -= e;
    }
    let form = ring
        .exponent_form(&exps)
        .ok_or_else(|| Error::usage("relation involves parameters without an exponent"))?;
    form.eval(values)
}

fn hexagon_checks(
    report: &mut Report,
    red: &ReducedPresentation,
    generators: &[MPoly; 2],
    values: &BTreeMap<String, Rational>,
    cfg: &RunConfig,
) -> Result<()> {
    if !cfg.checks.contains(&Check::Semisimple) {
        return Ok(());
    }
    let mut ring = red.big.clone();
    let mut notes = Vec::new();
    for text in &cfg.relations {
        let rel = hexagon::parse_relation(text, &ring)?;
        if !relation_defect(&ring, &rel, values)?.is_zero() {
            notes.push(format!(
                "declared relation `{text}` does not hold at the given parameters; it is used as an assumption"
            ));
        }
        ring = ring.with_relation(rel)?;
    }
    let ideal = [generators[0].embed(&ring)?, generators[1].embed(&ring)?];
    let analysis = hexagon::analyze(&ideal)?;
    let mut lines = vec![
        format!("case in A: {}, case in B: {}", analysis.case_a, analysis.case_b),
        format!("relations: {}", if analysis.relations.is_empty() { "none".into() } else { analysis.relations.join(", ") }),
        format!("member in A: {}", analysis.f_a),
        format!("member in B: {}", analysis.f_b),
        format!("resultant divisible by the member in A: {}", analysis.elimination_divisible),
    ];
    lines.extend(notes.iter().map(|n| format!("note: {n}")));
    report.push(
        "hexagon",
        json!({
            "case_a": analysis.case_a.to_string(),
            "case_b": analysis.case_b.to_string(),
            "relations": analysis.relations,
            "f_a": analysis.f_a,
            "f_b": analysis.f_b,
            "elimination_divisible": analysis.elimination_divisible,
            "notes": notes,
        }),
        lines,
    )?;
    let mut cert = analysis.certificate;
    for n in notes {
        cert = cert.with_note(n);
    }
    bivariate_summand_note(report, &cert, &cfg.checks)?;
    report.certify("semisimple", cert, None)
}

fn coord(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) => n
            .as_i64()
            .map(Rational::from)
            .ok_or_else(|| Error::usage(format!("coordinate {n} is not an integer; write fractions as \"p/q\""))),
        _ => Err(Error::usage("coordinates must be integers or \"p/q\" strings")),
    }
}

pub fn read_polytope(path: &Path) -> Result<MomentPolytope> {
    let text = std::fs::read_to_string(path)?;
    let doc: Value = serde_json::from_str(&text)?;
    let vs = doc
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::usage("expected an object with a `vertices` array"))?;
    let mut vertices = Vec::with_capacity(vs.len());
    for v in vs {
        match v.as_array().map(Vec::as_slice) {
            Some([x, y]) => vertices.push([coord(x)?, coord(y)?]),
            _ => return Err(Error::usage("each vertex must be a pair of coordinates")),
        }
    }
    MomentPolytope::from_numeric(&vertices)
}

fn run_blowup(n: i64, param: &str, cfg: &RunConfig) -> Result<Report> {
    no_relations(cfg, "blowup")?;
    if !is_identifier(param) {
        return Err(Error::usage(format!("`{param}` is not a valid parameter name")));
    }
    let n = u32::try_from(n).map_err(|_| Error::Parameter(format!("constraint n >= 2 violated (n = {n})")))?;
    let mut report = Report::new("blowup");
    let alg = blowup::build(n, param)?;
    let products = blowup::verify_e_products(&alg)?;
    if !products {
        return Err(Error::consistency("exceptional-divisor products fail"));
    }
    let a = blowup::analyze(&alg)?;
    report.push(
        "blowup",
        json!({
            "n": n,
            "param": param,
            "quotient": alg.quotient,
            "b": alg.b,
            "e_products": products,
            "b_squared_zero": a.b_squared_zero,
            "witness_is_minus_b": a.witness_is_minus_b,
            "a_is_zero_divisor": a.a_is_zero_divisor,
            "summand_divisible_by_a_squared": a.summand_divisible_by_a_squared,
            "b_in_complement": a.b_in_complement,
        }),
        vec![
            format!("n: {n}"),
            format!("quotient: {}", alg.quotient),
            format!("B: {}", alg.b),
            format!("exceptional products: {products}"),
            format!("B^2 = 0: {}", a.b_squared_zero),
            format!("nilpotent witness is -B: {}", a.witness_is_minus_b),
            format!("A is a zero divisor: {}", a.a_is_zero_divisor),
            format!("summand divisible by A^2: {}", a.summand_divisible_by_a_squared),
            format!("B in the complement: {}", a.b_in_complement),
        ],
    )?;
    report.certify("blowup", a.certificate, None)?;
    Ok(report)
}

fn read_algebra(path: &Path) -> Result<FDAlgebra> {
    let text = std::fs::read_to_string(path)?;
    let doc: AlgebraJson = serde_json::from_str(&text)?;
    FDAlgebra::from_json(&doc)
}

fn run_tensor(left: &Path, right: &Path, cfg: &RunConfig) -> Result<Report> {
    no_relations(cfg, "tensor")?;
    let a = read_algebra(left)?;
    let b = read_algebra(right)?;
    let mut report = Report::new("tensor");
    let t = products::tensor(&a, &b)?;
    let k = products::kunneth_check(&a, &b)?;
    if !k.consistent {
        return Err(Error::consistency("tensor verdicts contradict the factor verdicts"));
    }
    let renamed: Vec<String> = k
        .params
        .iter()
        .filter(|p| !t.merged.left.contains(p))
        .cloned()
        .collect();
    report.push(
        "tensor",
        t.to_json(&a, &b),
        vec![
            format!("dimensions: {} x {} = {}", a.dim(), b.dim(), t.algebra.dim()),
            format!("parameters: {}", k.params.join(", ")),
            format!("right-hand parameters: {}", if renamed.is_empty() { "none".into() } else { renamed.join(", ") }),
        ],
    )?;
    let expected: Vec<String> = k.expected.iter().map(Verdict::to_string).collect();
    let [fa, fb] = k.factors;
    let mut notes = Vec::new();
    for (side, f) in [("left", &fa), ("right", &fb)] {
        if f.summand.verdict == Verdict::Inconclusive {
            notes.push(format!("no field summand found in the {side} factor"));
        }
    }
    let mut lines = vec![
        format!("expected: {}", expected.join(" + ")),
        format!("nilpotents transported: {}", k.nilpotents_transported),
    ];
    lines.extend(notes.iter().map(|n| format!("note: {n}")));
    report.push(
        "kunneth",
        json!({
            "expected": k.expected,
            "nilpotents_transported": k.nilpotents_transported,
            "consistent": k.consistent,
            "notes": notes,
        }),
        lines,
    )?;
    for (side, f, alg) in [("left", fa, &a), ("right", fb, &b)] {
        report.certify(&format!("{side} semisimple"), f.semisimple, Some(alg))?;
        if f.summand.verdict != Verdict::Inconclusive {
            report.certify(&format!("{side} field-summand"), f.summand, Some(alg))?;
        }
    }
    report.certify("tensor", k.certificate, Some(&t.algebra))?;
    Ok(report)
}

fn run_certify(poly: &str, var: Option<&str>, cfg: &RunConfig) -> Result<Report> {
    let ids = identifiers(poly)?;
    let var = match var {
        Some(v) => v.to_string(),
        None => ["X", "A"]
            .iter()
            .find(|v| ids.iter().any(|i| i == *v))
            .map(|v| v.to_string())
            .or_else(|| (ids.len() == 1).then(|| ids[0].clone()))
            .ok_or_else(|| Error::usage("cannot tell the polynomial variable; pass --var"))?,
    };
    let mut params: Vec<&str> = ids.iter().map(String::as_str).filter(|i| *i != var).collect();
    params.sort_unstable();
    let mut ring = ParamSystem::from_names(&params)?;
    for r in &cfg.relations {
        let rel = hexagon::parse_relation(r, &ring)?;
        ring = ring.with_relation(rel)?;
    }
    let big = ring.with_leading(&var)?;
    let f = parse_field_elem(poly, &big)?;
    if f.den().involves(0) {
        return Err(Error::usage(format!("not a polynomial in `{var}`")));
    }
    if f.num().min_degree_in(0) < 0 {
        return Err(Error::usage(format!("negative power of `{var}`")));
    }
    let f = UniPoly::from_mpoly(f.num(), &var)?;
    if f.degree().unwrap_or(0) < 1 {
        return Err(Error::usage("the polynomial must have positive degree"));
    }
    let (_, parts) = f.squarefree_decomposition()?;
    let mut report = Report::new("certify");
    let mut lines = vec![
        format!("variable: {var}"),
        format!("parameters: {}", if params.is_empty() { "none".into() } else { params.join(", ") }),
        format!("polynomial: {f}"),
    ];
    let factors: Vec<Value> = parts
        .iter()
        .map(|(p, m)| {
            lines.push(format!("squarefree factor (multiplicity {m}): {p}"));
            json!({ "factor": p, "multiplicity": m })
        })
        .collect();
    report.push(
        "input",
        json!({
            "var": var,
            "params": params,
            "relations": cfg.relations,
            "poly": f,
            "degree": f.degree(),
            "squarefree_decomposition": factors,
        }),
        lines,
    )?;
    let mut checks = cfg.checks.clone();
    checks.retain(|c| matches!(c, Check::Semisimple | Check::FieldSummand));
    if checks.is_empty() {
        checks = [Check::Semisimple, Check::FieldSummand].into();
    }
    univariate_checks(&mut report, &f, &checks)?;
    Ok(report)
}

/// Entry point of the binary; returns the exit status.
pub fn main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = RunConfig::from_cli(cli).and_then(|cfg| {
        let report = run(&cfg)?;
        let text = report.render(cfg.emit);
        match &cfg.out {
            Some(path) => std::fs::write(path, &text)?,
            None => std::io::stdout().write_all(text.as_bytes())?,
        }
        Ok(report.exit_code())
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(args: &[&str]) -> Report {
        run(&RunConfig::parse_from(args).unwrap()).unwrap()
    }

    fn data(name: &str) -> String {
        format!("{}/examples/data/{name}", env!("CARGO_MANIFEST_DIR"))
    }

    #[test]
    fn check_closure() {
        let c = Check::closure(&[Check::Reduce]);
        assert_eq!(c.into_iter().collect::<Vec<_>>(), [Check::Validate, Check::Classify, Check::Presentation, Check::Reduce]);
        assert_eq!(Check::closure(&[]).len(), 6);
        let cfg = RunConfig::parse_from(["certify", "--poly", "X^2-1", "--check", "semisimple,field-summand"]).unwrap();
        assert!(cfg.checks.contains(&Check::Validate));
    }

    #[test]
    fn argument_errors() {
        assert!(matches!(RunConfig::parse_from(["model"]), Err(Error::Usage(_))));
        assert!(matches!(RunConfig::parse_from(["model", "--name", "cp3"]), Err(Error::Usage(_))));
        let e = RunConfig::parse_from(["model", "--name", "cp2-bl2", "--eps", "0.5", "--delta", "1/2"]).unwrap_err();
        assert_eq!(exit_code(&e), 2);
        let cfg = RunConfig::parse_from(["model", "--name", "cp2-bl2", "--eps", "1/2", "--delta", "2"]).unwrap();
        assert!(matches!(run(&cfg), Err(Error::Parameter(_))));
        let cfg = RunConfig::parse_from(["blowup", "--n", "3", "--relations", "y=z"]).unwrap();
        assert!(matches!(run(&cfg), Err(Error::Usage(_))));
    }

    #[test]
    fn pentagon_report() {
        let args = ["model", "--name", "cp2-bl2", "--eps", "2/3", "--delta", "3/4", "--check", "semisimple"];
        let r = report(&args);
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.verdicts()[0], ("semisimple".to_string(), vec![Verdict::Semisimple]));
        assert!(r.section("reduced").unwrap()["s_text"].as_str().unwrap().starts_with("s^(1 - eps) * X^5"));
        let pres: QHPresentation = serde_json::from_value(r.section("presentation").unwrap().clone()).unwrap();
        let p = standard_model(FanoTag::Cp2Bl2, &pres.values).unwrap();
        assert_eq!(pres, batyrev::presentation(&p).unwrap());
        assert_eq!(r.to_json(), report(&args).to_json());
        assert_eq!(r.to_text(), report(&args).to_text());
    }

    #[test]
    fn hexagon_case_two() {
        let r = report(&["model", "--name", "cp2-bl3", "--alpha", "1/4", "--beta", "2/3", "--gamma", "2/3", "--relations", "y=z"]);
        assert_eq!(r.section("hexagon").unwrap()["case_a"], "II");
        assert_eq!(r.verdicts()[0].1, [Verdict::RadicalIdeal]);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn blowup_report() {
        let r = report(&["blowup", "--n", "3"]);
        assert_eq!(r.verdicts()[0].1, [Verdict::NotSemisimple, Verdict::ContainsFieldSummand]);
        let e = run(&RunConfig::parse_from(["blowup", "--n", "1"]).unwrap()).unwrap_err();
        assert!(e.to_string().contains("n >= 2"));
    }

    #[test]
    fn files() {
        let r = report(&["polytope", "--file", &data("pentagon.json")]);
        assert_eq!(r.section("classification").unwrap()["tag"], "CP2_bl2");
        assert_eq!(r.exit_code(), 0);
        let r = report(&["polytope", "--file", &data("hexagon.json"), "--check", "semisimple"]);
        assert_eq!(r.exit_code(), 3);
        let e = run(&RunConfig::parse_from(["polytope", "--file", &data("not_delzant.json")]).unwrap()).unwrap_err();
        assert!(matches!(e, Error::Validation(_)));
        let e = run(&RunConfig::parse_from(["polytope", "--file", &data("missing.json")]).unwrap()).unwrap_err();
        assert_eq!(exit_code(&e), 2);
        let r = report(&["tensor", "--left", &data("blowup_2.json"), "--right", &data("quadratic_y.json")]);
        let tensor = r.verdicts().into_iter().find(|(c, _)| c == "tensor").unwrap().1;
        assert_eq!(tensor, [Verdict::NotSemisimple, Verdict::ContainsFieldSummand]);
    }

    #[test]
    fn certify_quotients() {
        let r = report(&["certify", "--poly", "X^2 - x"]);
        assert_eq!(r.verdicts()[0].1, [Verdict::Semisimple]);
        let r = report(&["certify", "--poly", "A^2*(A - z)", "--emit", "text"]);
        assert!(r.to_text().contains("semisimple: NotSemisimple (verified)"));
        let r = report(&["certify", "--poly", "A^2 + (y + z - y^2*z^2)*A + y*z", "--relations", "z=y"]);
        assert_eq!(r.exit_code(), 0);
        assert!(matches!(run(&RunConfig::parse_from(["certify", "--poly", "x*y"]).unwrap()), Err(Error::Usage(_))));
        assert!(matches!(run(&RunConfig::parse_from(["certify", "--poly", "1/X + 1"]).unwrap()), Err(Error::Usage(_))));
    }
}
