//! Standard pretzel diagrams.

use super::ports::PortGraph;
use super::PDDiagram;
use crate::error::DiagramError;

/// The standard pretzel diagram: vertical twist regions side by side, region
/// `i` carrying `|params[i]|` crossings whose handedness follows the sign of
/// `params[i]`, joined cyclically across the top and bottom.
///
/// A positive parameter gives the twist whose crossings match the positive
/// braid generator (the strand entering top-right passes over); a negative
/// parameter gives the mirrored twist. Links are allowed; the component
/// count is reported by `stats`.
pub fn pretzel_pd(params: &[i64]) -> Result<PDDiagram, DiagramError> {
    if params.len() < 2 {
        return Err(DiagramError::TooFewRegions);
    }
    if params.iter().any(|&q| q == 0) {
        return Err(DiagramError::ZeroPretzelParam);
    }
    let total: usize = params.iter().map(|q| q.unsigned_abs() as usize).sum();
    let mut graph = PortGraph::new(total);

    // Geometric corners of crossing `x` as ports: (nw, ne, sw, se).
    let corner = |x: usize, positive: bool| -> (u32, u32, u32, u32) {
        let base = 4 * x as u32;
        if positive {
            (base, base + 3, base + 1, base + 2)
        } else {
            (base + 1, base, base + 2, base + 3)
        }
    };

    let mut base_idx = 0usize;
    let mut tops = Vec::with_capacity(params.len());
    let mut bottoms = Vec::with_capacity(params.len());
    for &q in params {
        let n = q.unsigned_abs() as usize;
        let positive = q > 0;
        for j in 0..n - 1 {
            let (_, _, sw, se) = corner(base_idx + j, positive);
            let (nw, ne, _, _) = corner(base_idx + j + 1, positive);
            graph.connect(sw, nw);
            graph.connect(se, ne);
        }
        let (tl, tr, _, _) = corner(base_idx, positive);
        let (_, _, bl, br) = corner(base_idx + n - 1, positive);
        tops.push((tl, tr));
        bottoms.push((bl, br));
        base_idx += n;
    }
    let k = params.len();
    for r in 0..k {
        let next = (r + 1) % k;
        graph.connect(tops[r].1, tops[next].0);
        graph.connect(bottoms[r].1, bottoms[next].0);
    }
    Ok(graph.assemble(&[], 0))
}
