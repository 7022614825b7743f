//! Library side of the command-line tool: the built-in catalog and the
//! report builders, shared between the binary and the test suites.

pub mod catalog;
pub mod report;

use knotslopes::{parse_braid, parse_pd, pretzel_pd, DiagramError, PDDiagram};

/// Resolve one of the mutually exclusive input selectors to a diagram and a
/// printable description.
pub fn resolve_input(
    braid: Option<&str>,
    pd_path: Option<&std::path::Path>,
    pretzel: Option<&str>,
    unknot: bool,
    knot: Option<&str>,
) -> Result<(PDDiagram, String), String> {
    let picks = [
        braid.is_some(),
        pd_path.is_some(),
        pretzel.is_some(),
        unknot,
        knot.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if picks != 1 {
        return Err("pick exactly one input: --braid | --pd | --pretzel | --unknot | --knot".into());
    }
    if let Some(word) = braid {
        let d = parse_braid(word).map_err(|e| e.to_string())?.to_pd();
        return Ok((d, format!("braid \"{word}\"")));
    }
    if let Some(path) = pd_path {
        let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let d = parse_pd(&bytes).map_err(|e| e.to_string())?;
        let label = d
            .name()
            .map(|n| format!("pd {n}"))
            .unwrap_or_else(|| format!("pd {}", path.display()));
        return Ok((d, label));
    }
    if let Some(params) = pretzel {
        let parsed: Result<Vec<i64>, _> = params
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect();
        let params_vec = parsed.map_err(|_| format!("bad pretzel parameters {params:?}"))?;
        let d = pretzel_pd(&params_vec).map_err(|e: DiagramError| e.to_string())?;
        return Ok((d, format!("pretzel ({params})")));
    }
    if unknot {
        return Ok((PDDiagram::unknot(), "unknot".into()));
    }
    let name = knot.unwrap();
    match catalog::find(name) {
        Some(entry) => {
            let d = entry.diagram().map_err(|e| e.to_string())?;
            Ok((d, format!("catalog {name}")))
        }
        None => Err(format!(
            "unknown catalog knot {name:?}; available: {}",
            catalog::names().join(", ")
        )),
    }
}
