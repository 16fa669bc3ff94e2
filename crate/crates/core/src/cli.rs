//! The `dowling-moments` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use crate::cfrac::{family_jfraction, family_sfraction, jfraction_series, sfraction_series};
use crate::coeffring::{MPoly, Rational, Ring};
use crate::dowling::{
    family_inverse_array, family_moment_array, family_poly, family_recurrence, family_values,
    stirling_table, whitney_table, FamilyId, FamilyParams, StirlingKind, WhitneyKind,
};
use crate::error::{Error, Result};
use crate::hankel::{closed_form_hankel, hankel_transform};
use crate::matrix::Matrix;
use crate::riordan::ProductionMethod;
use crate::verify::{
    default_fixtures_dir, golden_cases, parse_bfile, verify_against_bfile, verify_case, BFileStore,
    HttpTransport, Report,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "dowling-moments",
    version,
    about = "Exact moments, recurrences, continued fractions and Hankel transforms of Dowling-type polynomial families"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,
    /// Truncation order for series computations.
    #[arg(long, default_value_t = 16, global = true)]
    pub order: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ArrayKind {
    Whitney1,
    Whitney2,
    Stirling1,
    Stirling2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    InverseShift,
    Az,
    Both,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Point {
    /// Dowling parameter, `p/q`.
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<Rational>,
    /// Polynomial variable, `p/q`.
    #[arg(long, allow_negative_numbers = true)]
    pub x: Option<Rational>,
}

#[derive(clap::Args, Debug, Clone)]
pub struct RequiredPoint {
    #[arg(long, allow_negative_numbers = true)]
    pub m: Rational,
    #[arg(long, allow_negative_numbers = true)]
    pub x: Rational,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Family values by the definition sum.
    Seq {
        #[arg(long)]
        family: FamilyId,
        #[command(flatten)]
        point: RequiredPoint,
        #[arg(long)]
        count: usize,
    },
    /// The n-th family polynomial in x and m.
    Poly {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        n: usize,
    },
    /// A Stirling or Whitney triangle (symbolic in m when --m is omitted).
    Table {
        #[arg(long, value_enum)]
        array: ArrayKind,
        #[arg(long, allow_negative_numbers = true)]
        m: Option<Rational>,
        #[arg(long)]
        rows: usize,
    },
    /// Series coefficients of the moment array [g, f] or its inverse.
    Riordan {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        inverse: bool,
        #[command(flatten)]
        point: Point,
    },
    /// Production matrix of the moment array.
    Production {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::InverseShift)]
        method: MethodArg,
        #[command(flatten)]
        point: Point,
    },
    /// Three-term recurrence coefficients read off the production matrix.
    Recurrence {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        depth: usize,
        #[command(flatten)]
        point: Point,
    },
    /// Continued-fraction coefficients and their expansion.
    Cfrac {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        s_fraction: bool,
        #[command(flatten)]
        point: Point,
    },
    /// Coefficients of the orthogonal polynomials P_0..P_n.
    Orthopoly {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        point: Point,
    },
    /// Hankel transform h_0..h_{count-1} of the family values.
    Hankel {
        #[arg(long)]
        family: FamilyId,
        #[command(flatten)]
        point: RequiredPoint,
        #[arg(long)]
        count: usize,
        /// Compare against the closed-form product.
        #[arg(long)]
        check: bool,
    },
    /// Check family values against the embedded OEIS terms.
    Verify {
        /// OEIS id such as A000110.
        #[arg(long, conflicts_with = "all")]
        case: Option<String>,
        #[arg(long)]
        all: bool,
        /// Download missing b-files from oeis.org into the fixtures directory.
        #[arg(long)]
        fetch: bool,
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Terms compared against a b-file when one is available.
        #[arg(long, default_value_t = 30)]
        count: usize,
    },
}

/// Structured command output, rendered in any of the three formats.
#[derive(Default)]
struct Doc {
    meta: Vec<(&'static str, String)>,
    /// Name, index of the first item, items.
    lists: Vec<(String, usize, Vec<String>)>,
    matrices: Vec<(String, Vec<Vec<String>>)>,
    flags: Vec<(&'static str, bool)>,
    /// One item per line in plain output.
    symbolic: bool,
}

impl Doc {
    fn list(self, name: impl Into<String>, items: &[impl ToString]) -> Self {
        self.list_from(name, 0, items)
    }

    fn list_from(mut self, name: impl Into<String>, start: usize, items: &[impl ToString]) -> Self {
        self.lists.push((
            name.into(),
            start,
            items.iter().map(ToString::to_string).collect(),
        ));
        self
    }

    fn matrix(mut self, name: impl Into<String>, rows: Vec<Vec<String>>) -> Self {
        self.matrices.push((name.into(), rows));
        self
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.plain(),
            Format::Csv => self.csv(),
            Format::Json => {
                let mut obj = Map::new();
                for (k, v) in &self.meta {
                    obj.insert((*k).into(), Value::String(v.clone()));
                }
                for (k, _, items) in &self.lists {
                    obj.insert(
                        k.clone(),
                        items.iter().cloned().map(Value::String).collect(),
                    );
                }
                for (k, rows) in &self.matrices {
                    let rows = rows
                        .iter()
                        .map(|r| r.iter().cloned().map(Value::String).collect::<Value>());
                    obj.insert(k.clone(), rows.collect());
                }
                for (k, v) in &self.flags {
                    obj.insert((*k).into(), Value::Bool(*v));
                }
                format!("{}\n", Value::Object(obj))
            }
        }
    }

    fn plain(&self) -> String {
        let mut out = String::new();
        let bare = self.lists.len() + self.matrices.len() == 1;
        for (name, start, items) in &self.lists {
            match (bare, self.symbolic) {
                (true, false) => out += &format!("{}\n", items.join(" ")),
                (false, false) => out += &format!("{name}: {}\n", items.join(" ")),
                (_, true) => {
                    for (i, v) in items.iter().enumerate() {
                        out += &format!("{name}[{}] = {v}\n", start + i);
                    }
                }
            }
        }
        for (name, rows) in &self.matrices {
            if !bare {
                out += &format!("{name}:\n");
            }
            for row in rows {
                out += &format!("{}\n", row.join("\t"));
            }
        }
        for (name, v) in &self.flags {
            out += &format!("{name}: {v}\n");
        }
        out
    }

    fn csv(&self) -> String {
        let mut out = String::from("name,i,j,value\n");
        for (name, start, items) in &self.lists {
            for (i, v) in items.iter().enumerate() {
                out += &format!("{name},{},,{v}\n", start + i);
            }
        }
        for (name, rows) in &self.matrices {
            for (i, row) in rows.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    out += &format!("{name},{i},{j},{v}\n");
                }
            }
        }
        for (name, v) in &self.flags {
            out += &format!("{name},,,{v}\n");
        }
        out
    }
}

fn strings<R: ToString>(items: &[R]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn lower_rows<R: Ring>(m: &Matrix<R>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| strings(&m.row(i)[..=i.min(m.cols() - 1)]))
        .collect()
}

fn meta(family: FamilyId, point: Option<&FamilyParams<Rational>>) -> Vec<(&'static str, String)> {
    let mut v = vec![("family", family.to_string())];
    if let Some(p) = point {
        v.push(("m", p.m.to_string()));
        v.push(("x", p.x.to_string()));
    }
    v
}

fn resolve(point: &Point) -> Result<Option<FamilyParams<Rational>>> {
    match (&point.m, &point.x) {
        (Some(m), Some(x)) => Ok(Some(FamilyParams::at(x.clone(), m.clone()))),
        (None, None) => Ok(None),
        _ => Err(Error::Index(
            "give both --m and --x, or neither for symbolic output".into(),
        )),
    }
}

/// Runs `body` at the given rational point, or symbolically in `x`, `m`.
macro_rules! at_point {
    ($point:expr, |$p:ident| $body:expr) => {
        match $point {
            Some(num) => {
                let $p = num;
                $body
            }
            None => {
                let $p = &FamilyParams::<MPoly>::symbolic();
                $body
            }
        }
    };
}

fn riordan_doc<R: Ring>(
    family: FamilyId,
    p: &FamilyParams<R>,
    inverse: bool,
    order: usize,
) -> Result<Doc> {
    let arr = if inverse {
        family_inverse_array(family, p, order)?
    } else {
        family_moment_array(family, p, order)?
    };
    Ok(Doc::default()
        .list("g", arr.g().coeffs())
        .list("f", arr.f().coeffs()))
}

fn production_doc<R: Ring>(
    family: FamilyId,
    p: &FamilyParams<R>,
    size: usize,
    method: MethodArg,
) -> Result<(Doc, bool)> {
    let arr = family_moment_array(family, p, size)?;
    let rows = |m: &Matrix<R>| (0..m.rows()).map(|i| strings(m.row(i))).collect();
    Ok(match method {
        MethodArg::InverseShift => (
            Doc::default().matrix(
                "production",
                rows(&arr.production_matrix(ProductionMethod::InverseShift)?),
            ),
            true,
        ),
        MethodArg::Az => (
            Doc::default().matrix(
                "production",
                rows(&arr.production_matrix(ProductionMethod::Az)?),
            ),
            true,
        ),
        MethodArg::Both => {
            let a = arr.production_matrix(ProductionMethod::InverseShift)?;
            let b = arr.production_matrix(ProductionMethod::Az)?;
            let diffs: Vec<String> = (0..size)
                .flat_map(|i| (0..size).map(move |j| (i, j)))
                .filter(|&(i, j)| a.get(i, j) != b.get(i, j))
                .map(|(i, j)| format!("({i},{j}): {} vs {}", a.get(i, j), b.get(i, j)))
                .collect();
            let agree = diffs.is_empty();
            let mut doc = Doc::default()
                .matrix("inverse_shift", rows(&a))
                .matrix("az", rows(&b));
            if !agree {
                doc = doc.list("differences", &diffs);
            }
            doc.flags.push(("methods_agree", agree));
            (doc, agree)
        }
    })
}

fn recurrence_doc<R: Ring>(family: FamilyId, p: &FamilyParams<R>, depth: usize) -> Result<Doc> {
    let rec = family_recurrence(family, p, depth)?;
    Ok(Doc::default()
        .list("alpha", rec.alphas())
        .list_from("beta", 1, rec.betas()))
}

fn cfrac_doc<R: Ring>(family: FamilyId, p: &FamilyParams<R>, depth: usize, s: bool) -> Result<Doc> {
    if s {
        let sf = family_sfraction(family, p, depth)?;
        Ok(Doc::default()
            .list_from("a", 1, sf.coeffs())
            .list("series", &sfraction_series(&sf, depth)?))
    } else {
        let jf = family_jfraction(family, p, depth);
        Ok(Doc::default()
            .list("alpha", jf.alphas())
            .list_from("beta", 1, jf.betas())
            .list("series", &jfraction_series(&jf, 2 * depth)?))
    }
}

fn orthopoly_doc<R: Ring>(family: FamilyId, p: &FamilyParams<R>, n: usize) -> Result<Doc> {
    let rec = family_recurrence(family, p, n.max(1))?;
    let polys = rec.ortho_polys(n)?;
    Ok(Doc::default().matrix("polynomials", polys.iter().map(|c| strings(c)).collect()))
}

fn hankel_doc(
    family: FamilyId,
    p: &FamilyParams<Rational>,
    count: usize,
    check: bool,
) -> Result<(Doc, bool)> {
    if count == 0 {
        return Err(Error::InsufficientTerms {
            needed: 1,
            available: 0,
        });
    }
    let mu = family_values(family, p, 2 * count - 1);
    let h = hankel_transform(&mu, count - 1)?;
    let mut doc = Doc::default().list("hankel", &h);
    let mut ok = true;
    if check {
        let closed: Vec<Rational> = (0..count)
            .map(|n| closed_form_hankel(family, n).specialize(&p.x, &p.m))
            .collect();
        ok = closed == h;
        doc = doc.list("closed_form", &closed);
        doc.flags.push(("closed_form_match", ok));
    }
    Ok((doc, ok))
}

fn table_doc(array: ArrayKind, m: Option<&Rational>, rows: usize) -> Doc {
    let lower = match (array, m) {
        (ArrayKind::Stirling1, _) => lower_rows(&stirling_table(StirlingKind::FirstSigned, rows)),
        (ArrayKind::Stirling2, _) => lower_rows(&stirling_table(StirlingKind::Second, rows)),
        (ArrayKind::Whitney1, Some(m)) => lower_rows(&whitney_table(WhitneyKind::First, m, rows)),
        (ArrayKind::Whitney2, Some(m)) => lower_rows(&whitney_table(WhitneyKind::Second, m, rows)),
        (ArrayKind::Whitney1, None) => {
            lower_rows(&whitney_table(WhitneyKind::First, &MPoly::m(), rows))
        }
        (ArrayKind::Whitney2, None) => {
            lower_rows(&whitney_table(WhitneyKind::Second, &MPoly::m(), rows))
        }
    };
    Doc::default().matrix("table", lower)
}

struct VerifyOutcome {
    reports: Vec<Report>,
    errors: Vec<String>,
}

fn run_verify(
    case: Option<&str>,
    fetch: bool,
    fixtures: Option<PathBuf>,
    count: usize,
) -> Result<VerifyOutcome> {
    let cases: Vec<_> = golden_cases()
        .into_iter()
        .filter(|c| case.is_none_or(|id| c.oeis_id == id))
        .collect();
    if cases.is_empty() {
        return Err(Error::Index(format!(
            "no embedded case for {}",
            case.unwrap_or_default()
        )));
    }
    let dir = fixtures.unwrap_or_else(default_fixtures_dir);
    let store = if fetch {
        BFileStore::online(dir, Box::new(HttpTransport))
    } else {
        BFileStore::offline(dir)
    };
    let mut reports = Vec::new();
    let mut errors = Vec::new();
    for c in &cases {
        reports.push(verify_case(c, c.values.len()));
        match store.fetch(&c.oeis_id).and_then(|body| parse_bfile(&body)) {
            Ok(entries) => reports.push(verify_against_bfile(c, &entries, count)),
            Err(Error::CacheMiss { .. }) if !fetch => {}
            Err(e) => errors.push(format!("{}: {e}", c.oeis_id)),
        }
    }
    Ok(VerifyOutcome { reports, errors })
}

fn render_reports(reports: &[Report], format: Format) -> String {
    match format {
        Format::Plain => reports.iter().map(|r| format!("{r}\n")).collect(),
        Format::Json => {
            let all = reports.iter().all(Report::passed);
            let v = serde_json::json!({
                "status": if all { "match" } else { "mismatch" },
                "reports": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
            });
            format!("{v}\n")
        }
        Format::Csv => {
            let mut out = String::from("case,checked,status,index,expected,actual\n");
            for r in reports {
                let (i, e, a) = match &r.first_mismatch {
                    Some(mm) => (
                        mm.index.to_string(),
                        mm.expected.to_string(),
                        mm.actual.to_string(),
                    ),
                    None => Default::default(),
                };
                out += &format!(
                    "\"{}\",{},{},{i},{e},{a}\n",
                    r.case,
                    r.checked,
                    r.status.as_str()
                );
            }
            out
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Degenerate { .. } => EXIT_DEGENERATE,
        Error::Parse { .. }
        | Error::Index(_)
        | Error::InsufficientTerms { .. }
        | Error::OrderMismatch(..)
        | Error::BeyondTruncation { .. } => EXIT_USAGE,
        Error::Network { .. }
        | Error::HttpStatus { .. }
        | Error::CacheMiss { .. }
        | Error::Io(_) => EXIT_IO,
        _ => EXIT_MISMATCH,
    }
}

/// Output text and exit code.
fn execute(cli: &Cli, err: &mut dyn Write) -> Result<(String, i32)> {
    let format = cli.format;
    let order = cli.order;
    let (doc, ok) = match &cli.command {
        Command::Seq {
            family,
            point,
            count,
        } => {
            let p = FamilyParams::at(point.x.clone(), point.m.clone());
            let v = family_values(*family, &p, *count);
            let mut doc = Doc::default().list("values", &v);
            doc.meta = meta(*family, Some(&p));
            (doc, true)
        }
        Command::Poly { family, n } => {
            let mut doc = Doc::default().list("poly", &[family_poly(*family, *n)]);
            doc.meta = vec![("family", family.to_string()), ("n", n.to_string())];
            (doc, true)
        }
        Command::Table { array, m, rows } => (table_doc(*array, m.as_ref(), *rows), true),
        Command::Riordan {
            family,
            inverse,
            point,
        } => {
            let pt = resolve(point)?;
            let mut doc = at_point!(pt.as_ref(), |p| riordan_doc(*family, p, *inverse, order))?;
            doc.symbolic = pt.is_none();
            doc.meta = meta(*family, pt.as_ref());
            (doc, true)
        }
        Command::Production {
            family,
            size,
            method,
            point,
        } => {
            let pt = resolve(point)?;
            let (mut doc, ok) =
                at_point!(pt.as_ref(), |p| production_doc(*family, p, *size, *method))?;
            doc.meta = meta(*family, pt.as_ref());
            (doc, ok)
        }
        Command::Recurrence {
            family,
            depth,
            point,
        } => {
            let pt = resolve(point)?;
            let mut doc = at_point!(pt.as_ref(), |p| recurrence_doc(*family, p, *depth))?;
            doc.symbolic = pt.is_none();
            doc.meta = meta(*family, pt.as_ref());
            (doc, true)
        }
        Command::Cfrac {
            family,
            depth,
            s_fraction,
            point,
        } => {
            let pt = resolve(point)?;
            let mut doc = at_point!(pt.as_ref(), |p| cfrac_doc(*family, p, *depth, *s_fraction))?;
            doc.symbolic = pt.is_none();
            doc.meta = meta(*family, pt.as_ref());
            (doc, true)
        }
        Command::Orthopoly { family, n, point } => {
            let pt = resolve(point)?;
            let mut doc = at_point!(pt.as_ref(), |p| orthopoly_doc(*family, p, *n))?;
            doc.meta = meta(*family, pt.as_ref());
            (doc, true)
        }
        Command::Hankel {
            family,
            point,
            count,
            check,
        } => {
            let p = FamilyParams::at(point.x.clone(), point.m.clone());
            let (mut doc, ok) = hankel_doc(*family, &p, *count, *check)?;
            doc.meta = meta(*family, Some(&p));
            (doc, ok)
        }
        Command::Verify {
            case,
            all: _,
            fetch,
            fixtures,
            count,
        } => {
            let outcome = run_verify(case.as_deref(), *fetch, fixtures.clone(), *count)?;
            for e in &outcome.errors {
                let _ = writeln!(err, "error: {e}");
            }
            let text = render_reports(&outcome.reports, format);
            let code = if !outcome.reports.iter().all(Report::passed) {
                EXIT_MISMATCH
            } else if !outcome.errors.is_empty() {
                EXIT_IO
            } else {
                EXIT_OK
            };
            return Ok((text, code));
        }
    };
    Ok((doc.render(format), if ok { EXIT_OK } else { EXIT_MISMATCH }))
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, err) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
