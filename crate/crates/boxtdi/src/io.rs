//! Text and JSON file formats, plus JSON rendering of certificates.
//!
//! Matrix text format (shared repo-wide): first line `rows cols`, then
//! the entries row-major as `p` or `p/q` tokens separated by arbitrary
//! whitespace. An H-polyhedron file is a matrix followed by the `rows`
//! right-hand-side entries. A V-polyhedron file is three labeled blocks
//! (`vertices`, `rays`, `lineality`), each `count dim` plus the rows. A
//! graph file is the vertex count followed by edge pairs; a clutter
//! file is the ground size followed by one member per line. Every
//! format has a JSON mirror with the same fields; JSON input is
//! detected by a leading `{`.
//!
//! All rational values render as exact `p` or `p/q` strings, so
//! certificates can be re-checked by independent tools.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::certify::{
    BoxIntegerVerdict, BoxPropertyVerdict, BoxTdiCertificate, ConeBoxVerdict, ConePolarityReport,
    DilationProfile, FractionalVertex, FullyBoxIntegerVerdict, Trichotomy,
};
use crate::instances::{Clutter, Graph};
use crate::matprops::{EquimodularVerdict, MinorWitness, TotalEquimodularVerdict, TuVerdict};
use crate::matrix::{RatMatrix, RatVector};
use crate::polyhedra::{Face, HPolyhedron, VPolyhedron};
use crate::rat::{parse_rational, rational_to_string, Bound, IntBox, Rational};
use crate::{Error, Result};

struct Tokens<'a> {
    rest: std::str::Lines<'a>,
    current: Vec<(String, usize)>,
    line_no: usize,
    cursor: usize,
}

impl<'a> Tokens<'a> {
    fn new(src: &'a str) -> Tokens<'a> {
        Tokens { rest: src.lines(), current: Vec::new(), line_no: 0, cursor: 0 }
    }

    fn next(&mut self) -> Option<(String, usize, usize)> {
        loop {
            if self.cursor < self.current.len() {
                let (tok, col) = self.current[self.cursor].clone();
                self.cursor += 1;
                return Some((tok, self.line_no, col));
            }
            let line = self.rest.next()?;
            self.line_no += 1;
            self.cursor = 0;
            self.current = tokenize_line(line);
        }
    }

    fn expect(&mut self, what: &str) -> Result<(String, usize, usize)> {
        self.next().ok_or_else(|| Error::Parse {
            line: self.line_no,
            col: 0,
            msg: format!("unexpected end of input, expected {what}"),
        })
    }

    fn expect_usize(&mut self, what: &str) -> Result<usize> {
        let (tok, line, col) = self.expect(what)?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            col,
            msg: format!("expected {what}, got {tok:?}"),
        })
    }

    fn expect_rational(&mut self, what: &str) -> Result<Rational> {
        let (tok, line, col) = self.expect(what)?;
        parse_rational(&tok).ok_or(Error::Parse {
            line,
            col,
            msg: format!("expected {what}, got {tok:?}"),
        })
    }

    fn expect_word(&mut self, word: &str) -> Result<()> {
        let (tok, line, col) = self.expect(word)?;
        if tok == word {
            Ok(())
        } else {
            Err(Error::Parse { line, col, msg: format!("expected {word:?}, got {tok:?}") })
        }
    }
}

fn tokenize_line(line: &str) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    let mut col = 0;
    for part in line.split_whitespace() {
        let at = line[col..].find(part).map(|p| p + col + 1).unwrap_or(col + 1);
        col = at + part.len() - 1;
        if part.starts_with('#') {
            break;
        }
        out.push((part.to_string(), at));
    }
    out
}

fn looks_like_json(src: &str) -> bool {
    src.trim_start().starts_with('{')
}

fn json_parse(src: &str) -> Result<Value> {
    serde_json::from_str(src).map_err(|e| Error::Parse {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })
}

fn json_rational(v: &Value, what: &str) -> Result<Rational> {
    let parsed = match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n.as_i64().map(crate::rat::rat_int),
        _ => None,
    };
    parsed.ok_or(Error::Parse { line: 0, col: 0, msg: format!("bad rational in {what}: {v}") })
}

fn json_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or(Error::Parse { line: 0, col: 0, msg: format!("bad count in {what}: {v}") })
}

// ---------- matrices ----------

pub fn parse_matrix(src: &str) -> Result<RatMatrix> {
    if looks_like_json(src) {
        return matrix_from_json(&json_parse(src)?);
    }
    let mut t = Tokens::new(src);
    let rows = t.expect_usize("row count")?;
    let cols = t.expect_usize("column count")?;
    let mut entries = Vec::with_capacity(rows * cols);
    for _ in 0..rows * cols {
        entries.push(t.expect_rational("matrix entry")?);
    }
    Ok(RatMatrix::new(rows, cols, entries))
}

pub fn matrix_from_json(v: &Value) -> Result<RatMatrix> {
    let rows = json_usize(&v["rows"], "matrix.rows")?;
    let cols = json_usize(&v["cols"], "matrix.cols")?;
    let raw = v["entries"]
        .as_array()
        .ok_or(Error::Parse { line: 0, col: 0, msg: "matrix.entries must be an array".into() })?;
    if raw.len() != rows * cols {
        return Err(Error::Parse {
            line: 0,
            col: 0,
            msg: format!("matrix.entries has {} values, expected {}", raw.len(), rows * cols),
        });
    }
    let entries = raw
        .iter()
        .map(|e| json_rational(e, "matrix.entries"))
        .collect::<Result<Vec<_>>>()?;
    Ok(RatMatrix::new(rows, cols, entries))
}

pub fn format_matrix(m: &RatMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(rational_to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn matrix_to_json(m: &RatMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.entries().iter().map(rational_to_string).collect::<Vec<_>>(),
    })
}

pub fn vector_to_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(rational_to_string(x))).collect())
}

// ---------- polyhedra ----------

pub fn parse_hpolyhedron(src: &str) -> Result<HPolyhedron> {
    if looks_like_json(src) {
        return hpolyhedron_from_json(&json_parse(src)?);
    }
    let mut t = Tokens::new(src);
    let rows = t.expect_usize("row count")?;
    let cols = t.expect_usize("column count")?;
    let mut entries = Vec::with_capacity(rows * cols);
    for _ in 0..rows * cols {
        entries.push(t.expect_rational("matrix entry")?);
    }
    let mut b = Vec::with_capacity(rows);
    for _ in 0..rows {
        b.push(t.expect_rational("right-hand-side entry")?);
    }
    Ok(HPolyhedron::new(RatMatrix::new(rows, cols, entries), b))
}

pub fn hpolyhedron_from_json(v: &Value) -> Result<HPolyhedron> {
    let a = matrix_from_json(&v["a"])?;
    let raw = v["b"]
        .as_array()
        .ok_or(Error::Parse { line: 0, col: 0, msg: "h-polyhedron needs a \"b\" array".into() })?;
    let b = raw.iter().map(|e| json_rational(e, "b")).collect::<Result<Vec<_>>>()?;
    if b.len() != a.rows() {
        return Err(Error::Parse {
            line: 0,
            col: 0,
            msg: format!("b has {} entries, expected {}", b.len(), a.rows()),
        });
    }
    Ok(HPolyhedron::new(a, b))
}

pub fn format_hpolyhedron(p: &HPolyhedron) -> String {
    let mut out = format_matrix(&p.a);
    let b: Vec<String> = p.b.iter().map(rational_to_string).collect();
    out.push_str(&b.join(" "));
    out.push('\n');
    out
}

pub fn hpolyhedron_to_json(p: &HPolyhedron) -> Value {
    json!({ "a": matrix_to_json(&p.a), "b": vector_to_json(&p.b) })
}

pub fn parse_vpolyhedron(src: &str) -> Result<VPolyhedron> {
    if looks_like_json(src) {
        return vpolyhedron_from_json(&json_parse(src)?);
    }
    let mut t = Tokens::new(src);
    let mut dim: Option<usize> = None;
    let block = |t: &mut Tokens, name: &str, dim: &mut Option<usize>| -> Result<Vec<RatVector>> {
        t.expect_word(name)?;
        let count = t.expect_usize("block count")?;
        let d = t.expect_usize("block dimension")?;
        if let Some(existing) = *dim {
            if existing != d {
                return Err(Error::Parse {
                    line: 0,
                    col: 0,
                    msg: format!("inconsistent dimensions: {existing} vs {d}"),
                });
            }
        }
        *dim = Some(d);
        let mut rows = Vec::with_capacity(count);
        for _ in 0..count {
            let mut row = Vec::with_capacity(d);
            for _ in 0..d {
                row.push(t.expect_rational("vector entry")?);
            }
            rows.push(row);
        }
        Ok(rows)
    };
    let vertices = block(&mut t, "vertices", &mut dim)?;
    let rays = block(&mut t, "rays", &mut dim)?;
    let lineality = block(&mut t, "lineality", &mut dim)?;
    Ok(VPolyhedron { dim: dim.unwrap_or(0), vertices, rays, lineality })
}

pub fn vpolyhedron_from_json(v: &Value) -> Result<VPolyhedron> {
    let dim = json_usize(&v["dim"], "v-polyhedron.dim")?;
    let block = |v: &Value, what: &str| -> Result<Vec<RatVector>> {
        let raw = v
            .as_array()
            .ok_or(Error::Parse { line: 0, col: 0, msg: format!("{what} must be an array") })?;
        raw.iter()
            .map(|row| {
                let cells = row.as_array().ok_or(Error::Parse {
                    line: 0,
                    col: 0,
                    msg: format!("{what} rows must be arrays"),
                })?;
                cells.iter().map(|c| json_rational(c, what)).collect()
            })
            .collect()
    };
    let out = VPolyhedron {
        dim,
        vertices: block(&v["vertices"], "vertices")?,
        rays: block(&v["rays"], "rays")?,
        lineality: block(&v["lineality"], "lineality")?,
    };
    for group in [&out.vertices, &out.rays, &out.lineality] {
        for row in group {
            if row.len() != dim {
                return Err(Error::Parse {
                    line: 0,
                    col: 0,
                    msg: format!("vector of length {} in dimension {dim}", row.len()),
                });
            }
        }
    }
    Ok(out)
}

pub fn format_vpolyhedron(q: &VPolyhedron) -> String {
    let mut out = String::new();
    for (name, rows) in
        [("vertices", &q.vertices), ("rays", &q.rays), ("lineality", &q.lineality)]
    {
        out.push_str(&format!("{name} {} {}\n", rows.len(), q.dim));
        for row in rows {
            let cells: Vec<String> = row.iter().map(rational_to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn vpolyhedron_to_json(q: &VPolyhedron) -> Value {
    let rows = |rows: &[RatVector]| {
        Value::Array(rows.iter().map(|r| vector_to_json(r)).collect())
    };
    json!({
        "dim": q.dim,
        "vertices": rows(&q.vertices),
        "rays": rows(&q.rays),
        "lineality": rows(&q.lineality),
    })
}

/// Either representation, detected by the leading token. V-form inputs
/// report which one was seen so callers can convert once.
pub enum PolyhedronInput {
    H(HPolyhedron),
    V(VPolyhedron),
}

pub fn parse_polyhedron_auto(src: &str) -> Result<PolyhedronInput> {
    if looks_like_json(src) {
        let v = json_parse(src)?;
        return if v.get("a").is_some() {
            Ok(PolyhedronInput::H(hpolyhedron_from_json(&v)?))
        } else {
            Ok(PolyhedronInput::V(vpolyhedron_from_json(&v)?))
        };
    }
    let first = src.split_whitespace().next().unwrap_or("");
    if first == "vertices" {
        Ok(PolyhedronInput::V(parse_vpolyhedron(src)?))
    } else {
        Ok(PolyhedronInput::H(parse_hpolyhedron(src)?))
    }
}

// ---------- graphs and clutters ----------

pub fn parse_graph(src: &str) -> Result<Graph> {
    if looks_like_json(src) {
        let v = json_parse(src)?;
        let n = json_usize(&v["vertices"], "graph.vertices")?;
        let raw = v["edges"]
            .as_array()
            .ok_or(Error::Parse { line: 0, col: 0, msg: "graph.edges must be an array".into() })?;
        let mut edges = Vec::with_capacity(raw.len());
        for e in raw {
            let pair = e.as_array().filter(|p| p.len() == 2).ok_or(Error::Parse {
                line: 0,
                col: 0,
                msg: "graph edges must be pairs".into(),
            })?;
            edges.push((json_usize(&pair[0], "edge")?, json_usize(&pair[1], "edge")?));
        }
        return Graph::new(n, edges).map_err(graph_error);
    }
    let mut t = Tokens::new(src);
    let n = t.expect_usize("vertex count")?;
    let mut edges = Vec::new();
    while let Some((tok, line, col)) = t.next() {
        let u: usize = tok.parse().map_err(|_| Error::Parse {
            line,
            col,
            msg: format!("expected edge endpoint, got {tok:?}"),
        })?;
        let v = t.expect_usize("edge endpoint")?;
        edges.push((u, v));
    }
    Graph::new(n, edges).map_err(graph_error)
}

fn graph_error(e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => Error::Parse { line: 0, col: 0, msg: other.to_string() },
    }
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n);
    for (u, v) in &g.edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn graph_to_json(g: &Graph) -> Value {
    json!({
        "vertices": g.n,
        "edges": g.edges.iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
    })
}

pub fn parse_clutter(src: &str) -> Result<Clutter> {
    if looks_like_json(src) {
        let v = json_parse(src)?;
        let ground = json_usize(&v["ground"], "clutter.ground")?;
        let raw = v["members"].as_array().ok_or(Error::Parse {
            line: 0,
            col: 0,
            msg: "clutter.members must be an array".into(),
        })?;
        let mut members = Vec::with_capacity(raw.len());
        for m in raw {
            let cells = m.as_array().ok_or(Error::Parse {
                line: 0,
                col: 0,
                msg: "clutter members must be arrays".into(),
            })?;
            members.push(
                cells
                    .iter()
                    .map(|c| json_usize(c, "member element"))
                    .collect::<Result<std::collections::BTreeSet<usize>>>()?,
            );
        }
        return Clutter::new(ground, members).map_err(graph_error);
    }
    // line-structured: ground size, then one member per line
    let mut lines = src.lines().enumerate().filter_map(|(no, l)| {
        let toks = tokenize_line(l);
        if toks.is_empty() {
            None
        } else {
            Some((no + 1, toks))
        }
    });
    let (line_no, head) = lines.next().ok_or(Error::Parse {
        line: 1,
        col: 1,
        msg: "empty clutter file".into(),
    })?;
    let ground: usize = head[0].0.parse().map_err(|_| Error::Parse {
        line: line_no,
        col: head[0].1,
        msg: format!("expected ground size, got {:?}", head[0].0),
    })?;
    let mut members = Vec::new();
    for (no, toks) in lines {
        let mut member = std::collections::BTreeSet::new();
        for (tok, col) in toks {
            let e: usize = tok.parse().map_err(|_| Error::Parse {
                line: no,
                col,
                msg: format!("expected element, got {tok:?}"),
            })?;
            member.insert(e);
        }
        members.push(member);
    }
    Clutter::new(ground, members).map_err(graph_error)
}

pub fn format_clutter(c: &Clutter) -> String {
    let mut out = format!("{}\n", c.ground);
    for m in &c.members {
        let cells: Vec<String> = m.iter().map(|e| e.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

// ---------- certificates ----------

fn bound_to_json(b: &Bound) -> Value {
    Value::String(b.to_display())
}

pub fn intbox_to_json(bx: &IntBox) -> Value {
    json!({
        "lower": bx.lower.iter().map(bound_to_json).collect::<Vec<_>>(),
        "upper": bx.upper.iter().map(bound_to_json).collect::<Vec<_>>(),
    })
}

fn minor_to_json(m: &MinorWitness) -> Value {
    json!({ "cols": m.cols, "det": rational_to_string(&m.det) })
}

fn face_to_json(f: &Face) -> Value {
    json!({
        "tight_rows": f.tight_rows,
        "dim": f.dim,
        "fdm": matrix_to_json(&f.fdm),
        "fdm_rhs": vector_to_json(&f.fdm_rhs),
    })
}

pub fn equimodular_to_json(v: &EquimodularVerdict) -> Value {
    json!({
        "property": "equimodular",
        "holds": v.is_equimodular,
        "route": v.route.name(),
        "common_abs_det": v.common_abs_det.as_ref().map(rational_to_string),
        "refutation": v.refutation.as_ref().map(|(a, b)| json!({
            "first": minor_to_json(a),
            "second": minor_to_json(b),
        })),
    })
}

pub fn tu_to_json(v: &TuVerdict) -> Value {
    json!({
        "property": "totally-unimodular",
        "holds": v.is_tu,
        "violation": v.violation.as_ref().map(|w| json!({
            "rows": w.rows,
            "cols": w.cols,
            "det": rational_to_string(&w.det),
        })),
    })
}

pub fn tem_to_json(v: &TotalEquimodularVerdict) -> Value {
    json!({
        "property": "totally-equimodular",
        "holds": v.is_totally_equimodular,
        "offending_rows": v.offending_rows.as_ref().map(|(rows, verdict)| json!({
            "rows": rows,
            "verdict": equimodular_to_json(verdict),
        })),
    })
}

pub fn fractional_vertex_to_json(w: &FractionalVertex) -> Value {
    json!({
        "k": w.k.to_string(),
        "bounds": intbox_to_json(&w.bounds),
        "vertex": vector_to_json(&w.vertex),
    })
}

pub fn box_integer_to_json(v: &BoxIntegerVerdict) -> Value {
    json!({
        "property": "box-integer",
        "holds": v.is_box_integer,
        "window_limited": v.window_limited,
        "witness": v.witness.as_ref().map(fractional_vertex_to_json),
    })
}

pub fn box_tdi_to_json(v: &BoxTdiCertificate) -> Value {
    json!({
        "property": "box-tdi",
        "holds": v.is_box_tdi,
        "faces_checked": v.face_witnesses.len(),
        "face_witnesses": v.face_witnesses.iter().map(|w| json!({
            "face": face_to_json(&w.face),
            "tu_fdm": matrix_to_json(&w.tu_fdm),
            "tu_rhs": vector_to_json(&w.tu_rhs),
        })).collect::<Vec<_>>(),
        "refutation": v.refutation.as_ref().map(|r| json!({
            "face": face_to_json(&r.face),
            "first": minor_to_json(&r.first),
            "second": minor_to_json(&r.second),
        })),
    })
}

pub fn fully_box_integer_to_json(v: &FullyBoxIntegerVerdict) -> Value {
    json!({
        "property": "fully-box-integer",
        "holds": v.is_fully_box_integer,
        "integer": v.is_integer,
        "box_tdi": box_tdi_to_json(&v.box_tdi),
    })
}

pub fn cone_box_to_json(v: &ConeBoxVerdict) -> Value {
    json!({
        "property": "cone-box-integer",
        "holds": v.is_box_integer,
        "failure": v.failure.as_ref().map(|f| json!({
            "tight_rows": f.tight_rows,
            "generators": f.generators.iter().map(|g| vector_to_json(g)).collect::<Vec<_>>(),
            "first": minor_to_json(&f.first),
            "second": minor_to_json(&f.second),
        })),
    })
}

pub fn polarity_to_json(v: &ConePolarityReport) -> Value {
    json!({
        "property": "cone-polarity",
        "agree": v.agree,
        "cone": cone_box_to_json(&v.cone),
        "polar": cone_box_to_json(&v.polar),
    })
}

pub fn box_property_to_json(v: &BoxPropertyVerdict) -> Value {
    json!({
        "property": "box-property",
        "holds": v.has_box_property,
        "sample_limited": v.sample_limited,
        "witness": v.witness.as_ref().map(|w| vector_to_json(w)),
    })
}

pub fn profile_to_json(v: &DilationProfile) -> Value {
    let case = match &v.trichotomy {
        Trichotomy::PrincipallyBoxInteger => json!({ "case": "i" }),
        Trichotomy::NoBoxIntegerDilation => json!({ "case": "ii" }),
        Trichotomy::Cutoff { q, observed_only } => json!({
            "case": "iii",
            "q": q,
            "observed_only": observed_only,
        }),
    };
    json!({
        "property": "dilation-profile",
        "d": v.d.to_string(),
        "checks": v.checks.iter().map(|(k, ok)| json!({
            "k": k.to_string(),
            "box_integer": ok,
        })).collect::<Vec<_>>(),
        "trichotomy": case,
        "box_tdi": v.box_tdi,
        "monotone_ok": v.monotone_ok,
        "window_limited": v.window_limited,
    })
}

/// The CLI's reproducible run envelope. No timestamps anywhere: the
/// same input and flags produce byte-identical output.
pub fn run_report(command: &str, args: &[String], digest: &str, exit_code: i32, certificate: Value) -> Value {
    json!({
        "schema": 1,
        "command": command,
        "args": args,
        "input_digest": digest,
        "exit_code": exit_code,
        "certificate": certificate,
    })
}

pub fn bigint_to_json(b: &BigInt) -> Value {
    Value::String(b.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn matrix_text_roundtrip() {
        let m = RatMatrix::from_rows(vec![
            vec![rat_int(1), rat(1, 2), rat_int(0)],
            vec![rat_int(-3), rat_int(4), rat(-5, 7)],
        ]);
        let text = format_matrix(&m);
        assert_eq!(parse_matrix(&text).unwrap(), m);
        let js = matrix_to_json(&m).to_string();
        assert_eq!(parse_matrix(&js).unwrap(), m);
    }

    #[test]
    fn hpolyhedron_roundtrip() {
        let p = HPolyhedron::new(
            RatMatrix::from_i64_rows(&[&[1, 0], &[0, 1], &[-1, -1]]),
            vec![rat_int(1), rat_int(1), rat(-1, 2)],
        );
        let text = format_hpolyhedron(&p);
        assert_eq!(parse_hpolyhedron(&text).unwrap(), p);
        let js = hpolyhedron_to_json(&p).to_string();
        assert_eq!(parse_hpolyhedron(&js).unwrap(), p);
        match parse_polyhedron_auto(&text).unwrap() {
            PolyhedronInput::H(q) => assert_eq!(q, p),
            _ => panic!("expected H"),
        }
    }

    #[test]
    fn vpolyhedron_roundtrip() {
        let q = VPolyhedron {
            dim: 2,
            vertices: vec![vec![rat_int(0), rat_int(0)], vec![rat(1, 2), rat_int(1)]],
            rays: vec![vec![rat_int(1), rat_int(0)]],
            lineality: vec![],
        };
        let text = format_vpolyhedron(&q);
        assert_eq!(parse_vpolyhedron(&text).unwrap(), q);
        let js = vpolyhedron_to_json(&q).to_string();
        assert_eq!(parse_vpolyhedron(&js).unwrap(), q);
        match parse_polyhedron_auto(&text).unwrap() {
            PolyhedronInput::V(v) => assert_eq!(v, q),
            _ => panic!("expected V"),
        }
    }

    #[test]
    fn graph_and_clutter_roundtrip() {
        let g = crate::instances::named::s3();
        assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
        assert_eq!(parse_graph(&graph_to_json(&g).to_string()).unwrap(), g);

        let c = crate::instances::q6();
        assert_eq!(parse_clutter(&format_clutter(&c)).unwrap(), c);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_matrix("2 2\n1 x\n3 4").unwrap_err();
        match err {
            Error::Parse { line, col, .. } => {
                assert_eq!(line, 2);
                assert_eq!(col, 3);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_matrix("2").is_err());
        assert!(parse_hpolyhedron("1 1\n1\n").is_err()); // missing rhs
    }
}
