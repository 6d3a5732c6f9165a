//! The line-oriented `.def` format.
//!
//! ```text
//! # canonical almost contact structure
//! chart M: a b c
//! fiber-suffix '
//!
//! [connection]
//! symmetric = true
//! Gamma[c,a,a] = a
//!
//! [structure]
//! epsilon = -1
//! signature = riemannian
//! mode = consistent
//! F[a] = 0, -1, 0
//! F[b] = 1, 0, 0
//! xi[1] = 0, 0, 1
//! eta[1] = 0, 0, 1
//! G[a] = 1, 0, 0
//!
//! [tasks]
//! check
//! theorem 4.1
//! ```
//!
//! `F[i]` gives the row of upper index `i`; omitted rows are zero. `G` rows
//! are optional as a whole. `Gamma[i,j,k]` is `Γ^i_{jk}`.

use std::fmt::Write as _;

use crate::algebra::{Epsilon, Poly};
use crate::error::{Error, Result};
use crate::lift::{Connection, LiftKind, TangentChart, DEFAULT_FIBER_SUFFIX};
use crate::structure::{AxiomMode, RContactStructure, Signature};
use crate::tensor::{Chart, TensorField};
use crate::theorem::TheoremId;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    /// Axioms, metric compatibility (when a metric is given) and the lint.
    Check,
    Lint,
    /// Lift-interaction tables; the horizontal table needs a connection.
    Lift(LiftKind),
    BuildJ {
        kind: LiftKind,
        s: i8,
        t: i8,
    },
    Theorem(TheoremId),
    /// Action formulas of a theorem's structure.
    Verify(TheoremId),
    Sweep(LiftKind),
}

fn sign_text(v: i8) -> &'static str {
    if v < 0 {
        "-1"
    } else {
        "+1"
    }
}

impl std::fmt::Display for Task {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Task::Check => f.write_str("check"),
            Task::Lint => f.write_str("lint"),
            Task::Lift(k) => write!(f, "lift {k}"),
            Task::BuildJ { kind, s, t } => {
                write!(f, "build-j {kind} {} {}", sign_text(*s), sign_text(*t))
            }
            Task::Theorem(id) => write!(f, "theorem {id}"),
            Task::Verify(id) => write!(f, "verify {id}"),
            Task::Sweep(k) => write!(f, "sweep {k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionBlock {
    pub symmetric: bool,
    /// `((i, j, k), Γ^i_{jk})` in file order.
    pub entries: Vec<((usize, usize, usize), Poly)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureBlock {
    pub epsilon: Epsilon,
    pub signature: Signature,
    pub mode: AxiomMode,
    /// Dense rows `F^i_·`.
    pub f: Vec<Vec<Poly>>,
    pub xi: Vec<Vec<Poly>>,
    pub eta: Vec<Vec<Poly>>,
    pub metric: Option<Vec<Vec<Poly>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Definition {
    pub chart: Chart,
    pub fiber_suffix: Option<String>,
    pub connection: Option<ConnectionBlock>,
    pub structure: Option<StructureBlock>,
    pub tasks: Vec<Task>,
}

impl Definition {
    pub fn tangent_chart(&self) -> Result<TangentChart> {
        TangentChart::with_suffix(
            &self.chart,
            self.fiber_suffix.as_deref().unwrap_or(DEFAULT_FIBER_SUFFIX),
        )
    }

    pub fn connection(&self) -> Result<Option<Connection>> {
        self.connection
            .as_ref()
            .map(|c| Connection::from_sparse(&self.chart, c.entries.clone(), c.symmetric))
            .transpose()
    }

    pub fn structure(&self) -> Result<Option<RContactStructure>> {
        let Some(s) = &self.structure else {
            return Ok(None);
        };
        let ch = &self.chart;
        let f = TensorField::endo(ch, s.f.clone())?;
        let xi =
            s.xi.iter()
                .map(|c| TensorField::vector(ch, c.clone()))
                .collect::<Result<_>>()?;
        let eta = s
            .eta
            .iter()
            .map(|c| TensorField::oneform(ch, c.clone()))
            .collect::<Result<_>>()?;
        let mut out =
            RContactStructure::new(ch, f, xi, eta, s.epsilon, s.signature)?.with_mode(s.mode);
        if let Some(g) = &s.metric {
            out = out.with_metric(TensorField::bilinear(ch, g.clone())?)?;
        }
        Ok(Some(out))
    }

    /// A definition holding `s`, an optional connection and tasks.
    pub fn from_structure(
        s: &RContactStructure,
        conn: Option<&Connection>,
        tasks: Vec<Task>,
    ) -> Self {
        let m = s.chart().dim();
        let rows = |t: &TensorField| -> Vec<Vec<Poly>> {
            t.components().chunks(m).map(<[Poly]>::to_vec).collect()
        };
        Definition {
            chart: s.chart().clone(),
            fiber_suffix: None,
            connection: conn.map(|c| ConnectionBlock {
                symmetric: c.is_symmetric(),
                entries: c
                    .nonzero()
                    .filter(|&((_, j, k), _)| !c.is_symmetric() || j <= k)
                    .map(|(idx, p)| (idx, p.clone()))
                    .collect(),
            }),
            structure: Some(StructureBlock {
                epsilon: s.epsilon(),
                signature: s.signature(),
                mode: s.mode(),
                f: rows(s.f()),
                xi: s.xi().iter().map(|x| x.components().to_vec()).collect(),
                eta: s.eta().iter().map(|w| w.components().to_vec()).collect(),
                metric: s.metric().map(rows),
            }),
            tasks,
        }
    }
}

/// Canonical text of a definition. `parse_definition(emit_definition(d))`
/// equals `d`.
pub fn emit_definition(def: &Definition) -> String {
    let coords = def.chart.coords();
    let join = |ps: &[Poly]| {
        ps.iter()
            .map(Poly::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    };
    let mut out = String::new();
    let _ = writeln!(out, "chart {}: {}", def.chart.name(), coords.join(" "));
    if let Some(sfx) = &def.fiber_suffix {
        let _ = writeln!(out, "fiber-suffix {sfx}");
    }
    if let Some(c) = &def.connection {
        let _ = writeln!(out, "\n[connection]");
        let _ = writeln!(out, "symmetric = {}", c.symmetric);
        for ((i, j, k), p) in &c.entries {
            let _ = writeln!(
                out,
                "Gamma[{},{},{}] = {p}",
                coords[*i], coords[*j], coords[*k]
            );
        }
    }
    if let Some(s) = &def.structure {
        let _ = writeln!(out, "\n[structure]");
        let _ = writeln!(out, "epsilon = {}", s.epsilon.value());
        let _ = writeln!(out, "signature = {}", s.signature);
        let _ = writeln!(out, "mode = {}", s.mode);
        for (i, row) in s.f.iter().enumerate() {
            if row.iter().any(|p| !p.is_zero()) {
                let _ = writeln!(out, "F[{}] = {}", coords[i], join(row));
            }
        }
        for (a, x) in s.xi.iter().enumerate() {
            let _ = writeln!(out, "xi[{}] = {}", a + 1, join(x));
        }
        for (a, w) in s.eta.iter().enumerate() {
            let _ = writeln!(out, "eta[{}] = {}", a + 1, join(w));
        }
        if let Some(g) = &s.metric {
            for (i, row) in g.iter().enumerate() {
                let _ = writeln!(out, "G[{}] = {}", coords[i], join(row));
            }
        }
    }
    if !def.tasks.is_empty() {
        let _ = writeln!(out, "\n[tasks]");
        for t in &def.tasks {
            let _ = writeln!(out, "{t}");
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    Header,
    Connection,
    Structure,
    Tasks,
}

/// A line with its number and the char column where its content starts.
struct Line<'a> {
    number: usize,
    text: &'a str,
    /// 1-based char column of `text[0]` in the source line.
    column: usize,
}

impl<'a> Line<'a> {
    fn err(&self, offset: usize, msg: impl Into<String>) -> Error {
        Error::parse(self.number, self.column + offset, msg)
    }

    /// Char offset of a subslice of `text`.
    fn offset_of(&self, sub: &str) -> usize {
        let byte = sub.as_ptr() as usize - self.text.as_ptr() as usize;
        self.text[..byte].chars().count()
    }
}

fn trim_line(number: usize, raw: &str) -> Option<Line<'_>> {
    let without_comment = raw.split('#').next().unwrap_or("");
    let text = without_comment.trim();
    if text.is_empty() {
        return None;
    }
    let lead = without_comment.len() - without_comment.trim_start().len();
    Some(Line {
        number,
        text,
        column: without_comment[..lead].chars().count() + 1,
    })
}

fn split_assignment<'a>(line: &Line<'a>) -> Result<(&'a str, &'a str)> {
    let Some(eq) = line.text.find('=') else {
        return Err(line.err(0, "expected `key = value`"));
    };
    Ok((line.text[..eq].trim(), line.text[eq + 1..].trim()))
}

/// `name[args]` split into name and the comma-separated args.
fn indexed<'a>(line: &Line<'a>, key: &'a str) -> Result<(&'a str, Vec<&'a str>)> {
    let (Some(open), true) = (key.find('['), key.ends_with(']')) else {
        return Err(line.err(
            line.offset_of(key),
            format!("expected `name[...]`, found `{key}`"),
        ));
    };
    let args = key[open + 1..key.len() - 1]
        .split(',')
        .map(str::trim)
        .collect();
    Ok((key[..open].trim(), args))
}

fn coord_index(line: &Line, chart: &Chart, name: &str) -> Result<usize> {
    chart
        .index_of(name)
        .ok_or_else(|| line.err(line.offset_of(name), format!("unknown coordinate `{name}`")))
}

fn parse_poly(line: &Line, chart: &Chart, expr: &str) -> Result<Poly> {
    let base = line.offset_of(expr);
    Poly::parse(expr, chart.coords()).map_err(|e| match e {
        Error::Parse {
            column, message, ..
        } => line.err(base + column - 1, message),
        other => line.err(base, other.to_string()),
    })
}

fn parse_row(line: &Line, chart: &Chart, value: &str) -> Result<Vec<Poly>> {
    let parts: Vec<&str> = value.split(',').map(str::trim).collect();
    if parts.len() != chart.dim() {
        return Err(line.err(
            line.offset_of(value),
            format!("expected {} components, found {}", chart.dim(), parts.len()),
        ));
    }
    parts.iter().map(|p| parse_poly(line, chart, p)).collect()
}

fn parse_sign(line: &Line, word: &str) -> Result<i8> {
    match word {
        "+1" | "1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(line.err(
            line.offset_of(word),
            format!("expected +1 or -1, found `{word}`"),
        )),
    }
}

fn parse_kind(line: &Line, word: &str) -> Result<LiftKind> {
    match LiftKind::parse(word) {
        Some(LiftKind::Vertical) | None => Err(line.err(
            line.offset_of(word),
            format!("expected `complete` or `horizontal`, found `{word}`"),
        )),
        Some(k) => Ok(k),
    }
}

fn parse_theorem(line: &Line, word: &str) -> Result<TheoremId> {
    TheoremId::parse(word).ok_or_else(|| {
        line.err(
            line.offset_of(word),
            format!("unknown theorem `{word}` (expected 4.1 to 4.4)"),
        )
    })
}

fn parse_task(line: &Line) -> Result<Task> {
    let words: Vec<&str> = line.text.split_whitespace().collect();
    let arity = |n: usize| -> Result<()> {
        if words.len() == n + 1 {
            Ok(())
        } else {
            Err(line.err(0, format!("`{}` takes {n} argument(s)", words[0])))
        }
    };
    match words[0] {
        "check" => arity(0).map(|_| Task::Check),
        "lint" => arity(0).map(|_| Task::Lint),
        "lift" => {
            arity(1)?;
            Ok(Task::Lift(parse_kind(line, words[1])?))
        }
        "build-j" => {
            arity(3)?;
            Ok(Task::BuildJ {
                kind: parse_kind(line, words[1])?,
                s: parse_sign(line, words[2])?,
                t: parse_sign(line, words[3])?,
            })
        }
        "theorem" => {
            arity(1)?;
            Ok(Task::Theorem(parse_theorem(line, words[1])?))
        }
        "verify" => {
            arity(1)?;
            Ok(Task::Verify(parse_theorem(line, words[1])?))
        }
        "sweep" => {
            arity(1)?;
            Ok(Task::Sweep(parse_kind(line, words[1])?))
        }
        other => Err(line.err(0, format!("unknown task `{other}`"))),
    }
}

#[derive(Default)]
struct StructureDraft {
    epsilon: Option<Epsilon>,
    signature: Option<Signature>,
    mode: Option<AxiomMode>,
    f: Vec<(usize, Vec<Poly>)>,
    xi: Vec<(usize, Vec<Poly>)>,
    eta: Vec<(usize, Vec<Poly>)>,
    g: Vec<(usize, Vec<Poly>)>,
    line: usize,
}

fn dense(chart: &Chart, rows: Vec<(usize, Vec<Poly>)>) -> Vec<Vec<Poly>> {
    let m = chart.dim();
    let mut out = vec![vec![Poly::zero(chart.coords()); m]; m];
    for (i, r) in rows {
        out[i] = r;
    }
    out
}

/// Indexed Reeb data must be numbered `1..=r` without gaps.
fn numbered(rows: Vec<(usize, Vec<Poly>)>, what: &str, line: usize) -> Result<Vec<Vec<Poly>>> {
    let r = rows.iter().map(|(a, _)| *a).max().unwrap_or(0);
    let mut out: Vec<Option<Vec<Poly>>> = vec![None; r];
    for (a, row) in rows {
        out[a - 1] = Some(row);
    }
    out.into_iter()
        .enumerate()
        .map(|(a, row)| {
            row.ok_or_else(|| Error::parse(line, 1, format!("missing {what}[{}]", a + 1)))
        })
        .collect()
}

pub fn parse_definition(text: &str) -> Result<Definition> {
    let mut chart: Option<Chart> = None;
    let mut fiber_suffix = None;
    let mut connection: Option<ConnectionBlock> = None;
    let mut draft: Option<StructureDraft> = None;
    let mut tasks = Vec::new();
    let mut section = Section::Header;

    for (idx, raw) in text.lines().enumerate() {
        let Some(line) = trim_line(idx + 1, raw) else {
            continue;
        };
        let t = line.text;
        if t.starts_with('[') && t.ends_with(']') && !t.contains('=') {
            if chart.is_none() {
                return Err(line.err(0, "the chart must be declared before any section"));
            }
            section = match &t[1..t.len() - 1] {
                "connection" => {
                    connection.get_or_insert(ConnectionBlock {
                        symmetric: true,
                        entries: Vec::new(),
                    });
                    Section::Connection
                }
                "structure" => {
                    draft.get_or_insert_with(|| StructureDraft {
                        line: line.number,
                        ..Default::default()
                    });
                    Section::Structure
                }
                "tasks" => Section::Tasks,
                other => return Err(line.err(1, format!("unknown section `{other}`"))),
            };
            continue;
        }
        match section {
            Section::Header => {
                if let Some(rest) = t.strip_prefix("chart ") {
                    let Some((name, coords)) = rest.split_once(':') else {
                        return Err(line.err(0, "expected `chart NAME: coord coord ...`"));
                    };
                    let coords: Vec<String> =
                        coords.split_whitespace().map(str::to_string).collect();
                    for c in &coords {
                        let mut chars = c.chars();
                        let ok = chars.next().is_some_and(crate::algebra::is_ident_start)
                            && chars.all(crate::algebra::is_ident_char);
                        if !ok {
                            return Err(line.err(
                                line.offset_of(rest) + 5,
                                format!("invalid coordinate name `{c}`"),
                            ));
                        }
                    }
                    chart = Some(
                        Chart::new(name.trim(), coords).map_err(|e| line.err(0, e.to_string()))?,
                    );
                } else if let Some(rest) = t.strip_prefix("fiber-suffix ") {
                    fiber_suffix = Some(rest.trim().to_string());
                } else {
                    return Err(line.err(0, format!("unexpected `{t}` before any section")));
                }
            }
            Section::Connection => {
                let ch = chart.as_ref().expect("checked at section start");
                let (key, value) = split_assignment(&line)?;
                let block = connection.as_mut().expect("created at section start");
                if key == "symmetric" {
                    block.symmetric = match value {
                        "true" => true,
                        "false" => false,
                        _ => return Err(line.err(line.offset_of(value), "expected true or false")),
                    };
                    continue;
                }
                let (name, args) = indexed(&line, key)?;
                if name != "Gamma" || args.len() != 3 {
                    return Err(line.err(0, "expected `Gamma[i,j,k] = expr`"));
                }
                let i = coord_index(&line, ch, args[0])?;
                let j = coord_index(&line, ch, args[1])?;
                let k = coord_index(&line, ch, args[2])?;
                block
                    .entries
                    .push(((i, j, k), parse_poly(&line, ch, value)?));
            }
            Section::Structure => {
                let ch = chart.as_ref().expect("checked at section start");
                let d = draft.as_mut().expect("created at section start");
                let (key, value) = split_assignment(&line)?;
                let voff = line.offset_of(value);
                match key {
                    "epsilon" => {
                        d.epsilon = Some(
                            value
                                .parse::<i64>()
                                .map_err(|_| line.err(voff, "expected -1 or 1"))
                                .and_then(|v| {
                                    Epsilon::from_value(v)
                                        .map_err(|e| line.err(voff, e.to_string()))
                                })?,
                        )
                    }
                    "signature" => {
                        d.signature = Some(Signature::parse(value).ok_or_else(|| {
                            line.err(voff, "expected `riemannian` or `lorentzian`")
                        })?)
                    }
                    "mode" => {
                        d.mode = Some(AxiomMode::parse(value).ok_or_else(|| {
                            line.err(voff, "expected `paper-literal` or `consistent`")
                        })?)
                    }
                    _ => {
                        let (name, args) = indexed(&line, key)?;
                        if args.len() != 1 {
                            return Err(line.err(0, "expected one index"));
                        }
                        let row = parse_row(&line, ch, value)?;
                        match name {
                            "F" | "G" => {
                                let i = coord_index(&line, ch, args[0])?;
                                let list = if name == "F" { &mut d.f } else { &mut d.g };
                                if list.iter().any(|(j, _)| *j == i) {
                                    return Err(
                                        line.err(0, format!("duplicate row {name}[{}]", args[0]))
                                    );
                                }
                                list.push((i, row));
                            }
                            "xi" | "eta" => {
                                let a: usize =
                                    args[0].parse().ok().filter(|a| *a >= 1).ok_or_else(|| {
                                        line.err(line.offset_of(args[0]), "expected an index ≥ 1")
                                    })?;
                                let list = if name == "xi" { &mut d.xi } else { &mut d.eta };
                                if list.iter().any(|(b, _)| *b == a) {
                                    return Err(line.err(0, format!("duplicate {name}[{a}]")));
                                }
                                list.push((a, row));
                            }
                            other => {
                                return Err(line.err(0, format!("unknown structure key `{other}`")))
                            }
                        }
                    }
                }
            }
            Section::Tasks => tasks.push(parse_task(&line)?),
        }
    }

    let chart = chart.ok_or_else(|| Error::parse(1, 1, "missing `chart` declaration"))?;
    let structure = match draft {
        None => None,
        Some(d) => {
            let at = d.line;
            let block = StructureBlock {
                epsilon: d
                    .epsilon
                    .ok_or_else(|| Error::parse(at, 1, "structure is missing `epsilon`"))?,
                signature: d.signature.unwrap_or(Signature::Riemannian),
                mode: d.mode.unwrap_or_default(),
                f: dense(&chart, d.f),
                xi: numbered(d.xi, "xi", at)?,
                eta: numbered(d.eta, "eta", at)?,
                metric: if d.g.is_empty() {
                    None
                } else {
                    Some(dense(&chart, d.g))
                },
            };
            if block.xi.len() != block.eta.len() {
                return Err(Error::parse(
                    at,
                    1,
                    format!(
                        "{} xi fields but {} eta forms",
                        block.xi.len(),
                        block.eta.len()
                    ),
                ));
            }
            Some(block)
        }
    };
    let def = Definition {
        chart,
        fiber_suffix,
        connection,
        structure,
        tasks,
    };
    // surface shape problems (dimension, symmetry, suffix clashes) at parse time
    def.tangent_chart()?;
    def.connection()?;
    def.structure()?;
    Ok(def)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::canonical_structure;

    const CONTACT: &str = "\
# canonical contact
chart M: a b c

[structure]
epsilon = -1
signature = riemannian
F[a] = 0, -1, 0
F[b] = 1, 0, 0
xi[1] = 0, 0, 1
eta[1] = 0, 0, 1

[tasks]
check
theorem 4.1
";

    #[test]
    fn chart_only() {
        let def = parse_definition("chart P: x y\n").unwrap();
        assert_eq!(def.chart.dim(), 2);
        assert!(def.tasks.is_empty() && def.structure.is_none());
    }

    #[test]
    fn parses_structure_and_tasks() {
        let def = parse_definition(CONTACT).unwrap();
        assert_eq!(
            def.tasks,
            vec![Task::Check, Task::Theorem(TheoremId::CompleteRiemannian)]
        );
        let s = def.structure().unwrap().unwrap();
        let canon = canonical_structure(1, 1, Epsilon::Minus, Signature::Riemannian).unwrap();
        assert_eq!(s.f(), canon.f());
        assert_eq!(s.xi(), canon.xi());
        assert_eq!(s.metric(), None);
    }

    #[test]
    fn round_trip() {
        let def = parse_definition(CONTACT).unwrap();
        let text = emit_definition(&def);
        assert_eq!(parse_definition(&text).unwrap(), def);
        assert_eq!(emit_definition(&parse_definition(&text).unwrap()), text);
    }

    #[test]
    fn round_trip_from_structure() {
        let s = canonical_structure(2, 2, Epsilon::Plus, Signature::Lorentzian).unwrap();
        let conn = Connection::from_sparse(
            s.chart(),
            vec![((4, 0, 1), s.chart().poly("a1*b2 - 1/2").unwrap())],
            true,
        )
        .unwrap();
        let def =
            Definition::from_structure(&s, Some(&conn), vec![Task::Sweep(LiftKind::Horizontal)]);
        let text = emit_definition(&def);
        let back = parse_definition(&text).unwrap();
        assert_eq!(back, def);
        assert_eq!(back.structure().unwrap().unwrap(), s);
        assert_eq!(back.connection().unwrap().unwrap(), conn);
    }

    #[test]
    fn unknown_coordinate_is_located() {
        let text = CONTACT.replace("F[b] = 1, 0, 0", "F[b] = 1, q, 0");
        match parse_definition(&text) {
            Err(Error::Parse {
                line,
                column,
                message,
            }) => {
                assert_eq!(line, 8);
                assert_eq!(column, 11);
                assert!(message.contains("`q`"), "{message}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        let text = CONTACT.replace("F[b]", "F[q]");
        match parse_definition(&text) {
            Err(Error::Parse {
                line,
                column,
                message,
            }) => {
                assert_eq!((line, column), (8, 3));
                assert!(message.contains("`q`"));
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn shape_errors() {
        let text = CONTACT.replace("F[b] = 1, 0, 0", "F[b] = 1, 0");
        assert!(matches!(
            parse_definition(&text),
            Err(Error::Parse { line: 8, .. })
        ));
        let text = CONTACT.replace("eta[1] = 0, 0, 1\n", "");
        assert!(parse_definition(&text).is_err());
        let text = CONTACT.replace("theorem 4.1", "theorem 5.1");
        assert!(matches!(
            parse_definition(&text),
            Err(Error::Parse {
                line: 14,
                column: 9,
                ..
            })
        ));
        assert!(parse_definition("[tasks]\ncheck\n").is_err());
    }

    #[test]
    fn connection_block() {
        let text = "chart M: a b c\n[connection]\nGamma[c,a,b] = a^2\n";
        let def = parse_definition(text).unwrap();
        let conn = def.connection().unwrap().unwrap();
        assert_eq!(conn.get(2, 1, 0).to_string(), "a^2");
        let bad =
            "chart M: a b c\n[connection]\nsymmetric = true\nGamma[c,a,b] = a\nGamma[c,b,a] = b\n";
        assert!(parse_definition(bad).is_err());
    }
}
