//! Report assembly: every command produces one serializable record; text
//! output is a lossy rendering of the same record.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use knotslopes::{
    boundary_slopes, bracket_dp, bracket_naive, default_n_max, jones_table, loop_witnesses,
    seifert_state, slope_sequences, state_slope, to_morse, v_a, v_b, verify, BracketValue,
    Engine, JonesError, JonesOptions, PDDiagram, Verdict,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown format {other:?} (expected json|text)")),
        }
    }
}

pub struct Report {
    pub json: serde_json::Value,
    pub text: String,
    /// process exit code: 0 pass, 1 verification failure
    pub exit: i32,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).unwrap(),
            Format::Text => self.text.clone(),
        }
    }
}

fn poly_json(p: &knotslopes::LaurentPoly) -> serde_json::Value {
    serde_json::to_value(p).unwrap()
}

pub fn adequacy_report(input: &str, d: &PDDiagram) -> Report {
    let stats = d.stats();
    let (a, b) = knotslopes::is_adequate(d);
    let (loops_a, loops_b) = loop_witnesses(d);
    let (va, vb) = (v_a(d), v_b(d));
    let json = json!({
        "input": input,
        "crossings": stats.crossings,
        "c_plus": stats.c_plus,
        "c_minus": stats.c_minus,
        "writhe": stats.writhe,
        "components": stats.components,
        "a_adequate": a,
        "b_adequate": b,
        "v_a": va,
        "v_b": vb,
        "loop_witnesses": { "a": loops_a, "b": loops_b },
    });
    let mut text = String::new();
    let _ = writeln!(text, "{input}");
    let _ = writeln!(
        text,
        "  crossings {} (c+ {}, c- {}), writhe {}, components {}",
        stats.crossings, stats.c_plus, stats.c_minus, stats.writhe, stats.components
    );
    let _ = writeln!(text, "  A-adequate: {a} (v_A = {va})");
    let _ = writeln!(text, "  B-adequate: {b} (v_B = {vb})");
    if !loops_a.is_empty() {
        let _ = writeln!(text, "  A-state loops at crossings {loops_a:?}");
    }
    if !loops_b.is_empty() {
        let _ = writeln!(text, "  B-state loops at crossings {loops_b:?}");
    }
    Report { json, text, exit: 0 }
}

pub fn slopes_report(input: &str, d: &PDDiagram) -> Result<Report, JonesError> {
    let (slope_a, slope_b) = boundary_slopes(d)?;
    let seifert = state_slope(d, &seifert_state(d))?;
    let json = json!({
        "input": input,
        "slope_a": slope_a,
        "slope_b": slope_b,
        "seifert_slope": seifert,
    });
    let text = format!(
        "{input}\n  all-A surface slope {slope_a}\n  all-B surface slope {slope_b}\n  Seifert-state slope {seifert}\n"
    );
    Ok(Report { json, text, exit: 0 })
}

pub fn jones_report(
    input: &str,
    d: &PDDiagram,
    max_n: Option<u32>,
    opts: &JonesOptions,
) -> Result<Report, JonesError> {
    let n_max = max_n.unwrap_or_else(|| default_n_max(d.crossing_count()));
    let table = jones_table(d, n_max, opts)?;
    let sequences = (n_max >= 3).then(|| slope_sequences(&table).unwrap());
    let json = json!({
        "input": input,
        "max_n": n_max,
        "engine": opts.engine,
        "entries": table.entries.iter().map(|e| json!({
            "n": e.n,
            "polynomial": poly_json(&e.poly),
            "j_min": e.j_min,
            "j_max": e.j_max,
        })).collect::<Vec<_>>(),
        "sequences": sequences,
        "telemetry": table.telemetry,
    });
    let mut text = format!("{input}\n");
    for e in &table.entries {
        let _ = writeln!(
            text,
            "  J({}, q) = {}   degrees [{}, {}]",
            e.n,
            e.poly.display_with("q"),
            e.j_min,
            e.j_max
        );
    }
    if let Some(seq) = &sequences {
        let _ = writeln!(text, "  4j*/n². {:?}", seq.js_star.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        let _ = writeln!(text, "  4j/n².  {:?}", seq.js.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        let _ = writeln!(text, "  Δ²j* {:?}  Δ²j {:?}", seq.delta2_j_star, seq.delta2_j);
    }
    let t = table.telemetry;
    let _ = writeln!(
        text,
        "  engine: width {} support {} crossings {}",
        t.max_width, t.peak_support, t.crossings
    );
    Ok(Report { json, text, exit: 0 })
}

fn verdict_text(input: &str, v: &Verdict) -> String {
    let mut text = format!("{input}\n");
    let side = |label: &str, adequate: bool, gate: &Option<knotslopes::GatingSide>,
                diag: &Option<knotslopes::Slope>| {
        match (adequate, gate, diag) {
            (true, Some(g), _) => {
                let est = g
                    .estimated
                    .map(|e| e.to_string())
                    .unwrap_or_else(|| "unstabilized".into());
                format!(
                    "  {label} side: adequate; slope {} vs detected {est}: {}; degrees {}\n",
                    g.predicted,
                    if g.exact_match { "EXACT" } else { "MISMATCH" },
                    if g.degrees_match_predictor { "match predictor" } else { "DIVERGE" },
                )
            }
            (false, _, Some(d)) => {
                format!("  {label} side: not adequate — diagnostic 4j/n² ≈ {d} (non-gating)\n")
            }
            _ => format!("  {label} side: not adequate\n"),
        }
    };
    text.push_str(&side("A", v.a_adequate, &v.a_side, &v.a_diagnostic));
    text.push_str(&side("B", v.b_adequate, &v.b_side, &v.b_diagnostic));
    if let Some(distinct) = v.slopes_distinct {
        let _ = writeln!(text, "  detected slopes distinct: {distinct}");
    }
    if !v.a_adequate && !v.b_adequate {
        let _ = writeln!(text, "  no adequate side; slope detection not applicable");
    }
    for note in &v.notes {
        let _ = writeln!(text, "  note: {note}");
    }
    let _ = writeln!(text, "  verdict: {}", if v.pass { "PASS" } else { "FAIL" });
    text
}

pub fn verify_report(
    input: &str,
    d: &PDDiagram,
    max_n: Option<u32>,
    opts: &JonesOptions,
) -> Result<Report, JonesError> {
    let n_max = max_n.unwrap_or_else(|| default_n_max(d.crossing_count())).max(3);
    let verdict = verify(d, n_max, opts)?;
    let mut json = serde_json::to_value(&verdict).unwrap();
    json["input"] = json!(input);
    json["max_n"] = json!(n_max);
    let text = verdict_text(input, &verdict);
    let exit = if verdict.pass { 0 } else { 1 };
    Ok(Report { json, text, exit })
}

pub fn bracket_report(
    input: &str,
    d: &PDDiagram,
    engine: Engine,
    oracle_bound: usize,
) -> Result<Report, JonesError> {
    let value: BracketValue = match engine {
        Engine::Dp => bracket_dp(&to_morse(d)),
        Engine::Naive => bracket_naive(d, oracle_bound)?,
    };
    let circle = value.poly_circle.as_ref().expect("diagrams are nonempty");
    let (min_deg, max_deg) = circle.degree_bounds().map(|(a, b)| (Some(a), Some(b))).unwrap_or((None, None));
    let json = json!({
        "input": input,
        "engine": engine,
        "poly_delta": poly_json(&value.poly_delta),
        "poly_circle": poly_json(circle),
        "min_degree": min_deg,
        "max_degree": max_deg,
        "telemetry": value.telemetry,
    });
    let t = value.telemetry;
    let text = format!(
        "{input}\n  bracket (δ): {}\n  bracket (circle): {}\n  circle degrees [{}, {}]\n  engine: width {} support {} crossings {}\n",
        value.poly_delta,
        circle,
        min_deg.map(|d| d.to_string()).unwrap_or_default(),
        max_deg.map(|d| d.to_string()).unwrap_or_default(),
        t.max_width,
        t.peak_support,
        t.crossings,
    );
    Ok(Report { json, text, exit: 0 })
}

pub fn cable_report(input: &str, d: &PDDiagram, copies: usize) -> Result<Report, JonesError> {
    let morse = to_morse(d);
    let cabled = morse.cable(copies.max(1));
    let pd = cabled.to_pd().expect("cables of diagrams are nonempty");
    let stats = pd.stats();
    let json = json!({
        "input": input,
        "copies": copies,
        "crossings": stats.crossings,
        "components": stats.components,
        "writhe": stats.writhe,
        "max_width": cabled.max_width(),
        "pd": serde_json::to_value(&pd).unwrap(),
    });
    let text = format!(
        "{input}\n  {copies}-cable: {} crossings, {} components, writhe {}, sweep width {}\n",
        stats.crossings,
        stats.components,
        stats.writhe,
        cabled.max_width(),
    );
    Ok(Report { json, text, exit: 0 })
}

/// Aggregate record for `verify --catalog`: per-entry self-test of frozen
/// expected values plus the full verdict for knot entries.
#[derive(Serialize)]
pub struct CatalogLine {
    pub name: String,
    pub self_test: bool,
    pub verdict_pass: Option<bool>,
    pub detail: Vec<String>,
}

pub fn catalog_report(max_n: Option<u32>, opts: &JonesOptions) -> Result<Report, JonesError> {
    let mut lines = Vec::new();
    let mut all_ok = true;
    for entry in crate::catalog::catalog() {
        let mut detail = Vec::new();
        let d = entry.diagram().expect("catalog sources parse");
        let stats = d.stats();
        let mut self_test = true;
        let e = &entry.expected;
        if let Some(c) = e.components {
            if stats.components != c {
                self_test = false;
                detail.push(format!("components {} != expected {c}", stats.components));
            }
        }
        let (a, b) = knotslopes::is_adequate(&d);
        if e.a_adequate.is_some_and(|x| x != a) || e.b_adequate.is_some_and(|x| x != b) {
            self_test = false;
            detail.push(format!("adequacy ({a}, {b}) differs from expected"));
        }
        if let Some((sa, sb)) = e.slopes {
            match boundary_slopes(&d) {
                Ok((ra, rb)) => {
                    if ra.as_integer() != Some(sa) || rb.as_integer() != Some(sb) {
                        self_test = false;
                        detail.push(format!("slopes ({ra}, {rb}) != expected ({sa}, {sb})"));
                    }
                }
                Err(err) => {
                    self_test = false;
                    detail.push(err.to_string());
                }
            }
        }
        if let Some(expected_j2) = entry.expected_jones2() {
            match knotslopes::colored_jones(&d, 2, opts) {
                Ok(j2) => {
                    if j2 != expected_j2 {
                        self_test = false;
                        detail.push(format!(
                            "J(2) = {} differs from expected {}",
                            j2.display_with("q"),
                            expected_j2.display_with("q")
                        ));
                    }
                }
                Err(err) => {
                    self_test = false;
                    detail.push(err.to_string());
                }
            }
        }
        let verdict_pass = if stats.components == 1 {
            let n_max = max_n
                .unwrap_or_else(|| default_n_max(stats.crossings))
                .max(3);
            let v = verify(&d, n_max, opts)?;
            for note in &v.notes {
                detail.push(note.clone());
            }
            Some(v.pass)
        } else {
            detail.push("link: verification skipped (needs a knot)".into());
            None
        };
        all_ok &= self_test && verdict_pass.unwrap_or(true);
        lines.push(CatalogLine {
            name: entry.name.to_string(),
            self_test,
            verdict_pass,
            detail,
        });
    }
    let json = json!({
        "catalog": lines,
        "pass": all_ok,
    });
    let mut text = String::new();
    for line in &lines {
        let verdict = match line.verdict_pass {
            Some(true) => "verify PASS",
            Some(false) => "verify FAIL",
            None => "verify n/a",
        };
        let _ = writeln!(
            text,
            "{:18} self-test {}  {}",
            line.name,
            if line.self_test { "ok " } else { "BAD" },
            verdict
        );
        for d in &line.detail {
            let _ = writeln!(text, "    {d}");
        }
    }
    let _ = writeln!(text, "catalog: {}", if all_ok { "PASS" } else { "FAIL" });
    Ok(Report {
        json,
        text,
        exit: if all_ok { 0 } else { 1 },
    })
}
