//! Shared diagram builders for the benchmark targets.

use knotslopes::{parse_braid, pretzel_pd, PDDiagram};

pub fn trefoil() -> PDDiagram {
    parse_braid("2: 1 1 1").unwrap().to_pd()
}

pub fn figure8() -> PDDiagram {
    parse_braid("3: 1 -2 1 -2").unwrap().to_pd()
}

pub fn pretzel_235() -> PDDiagram {
    pretzel_pd(&[-2, 3, 5]).unwrap()
}
