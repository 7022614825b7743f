//! Built-in diagram catalog with frozen expected values for the self-test.

use knotslopes::{parse_braid, pretzel_pd, DiagramError, LaurentPoly, PDDiagram};

#[derive(Clone, Copy, Debug)]
pub enum Source {
    Braid(&'static str),
    Pretzel(&'static [i64]),
    Unknot,
}

/// Known values checked by `verify --catalog`. Every filled value was
/// computed away from this codebase; the comments say how.
#[derive(Clone, Copy, Debug, Default)]
pub struct Expected {
    pub a_adequate: Option<bool>,
    pub b_adequate: Option<bool>,
    /// boundary slopes of the all-A / all-B state surfaces
    pub slopes: Option<(i64, i64)>,
    pub components: Option<usize>,
    /// the ordinary Jones polynomial J(2, q) as (exponent, coefficient) pairs
    pub jones2: Option<&'static [(i64, i64)]>,
}

pub struct CatalogEntry {
    pub name: &'static str,
    pub source: Source,
    pub expected: Expected,
}

impl CatalogEntry {
    pub fn diagram(&self) -> Result<PDDiagram, DiagramError> {
        let d = match self.source {
            Source::Braid(word) => parse_braid(word)?.to_pd(),
            Source::Pretzel(params) => pretzel_pd(params)?,
            Source::Unknot => PDDiagram::unknot(),
        };
        Ok(d.with_name(self.name))
    }

    pub fn expected_jones2(&self) -> Option<LaurentPoly> {
        self.expected
            .jones2
            .map(|terms| LaurentPoly::from_terms(terms.iter().copied()))
    }
}

pub fn catalog() -> &'static [CatalogEntry] {
    CATALOG
}

pub fn find(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name)
}

pub fn names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.name).collect()
}

static CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "unknot",
        source: Source::Unknot,
        // trivial: no crossings, J(n) = 1 by normalization
        expected: Expected {
            a_adequate: Some(true),
            b_adequate: Some(true),
            slopes: Some((0, 0)),
            components: Some(1),
            jones2: Some(&[(0, 1)]),
        },
    },
    CatalogEntry {
        name: "trefoil",
        source: Source::Braid("2: 1 1 1"),
        // right-handed trefoil; J(2) = -q^4+q^3+q is the classical Jones
        // polynomial (hand state-sum, cross-checked against the torus-knot
        // formula t^{(p-1)(q-1)/2}(1-t^{p+1}-t^{q+1}+t^{p+q})/(1-t^2))
        expected: Expected {
            a_adequate: Some(true),
            b_adequate: Some(true),
            slopes: Some((0, 6)),
            components: Some(1),
            jones2: Some(&[(4, -1), (3, 1), (1, 1)]),
        },
    },
    CatalogEntry {
        name: "trefoil-mirror",
        source: Source::Braid("2: -1 -1 -1"),
        // mirror image: slopes negate and swap, J(2) gets q -> q^-1
        expected: Expected {
            a_adequate: Some(true),
            b_adequate: Some(true),
            slopes: Some((-6, 0)),
            components: Some(1),
            jones2: Some(&[(-4, -1), (-3, 1), (-1, 1)]),
        },
    },
    CatalogEntry {
        name: "figure8",
        source: Source::Braid("3: 1 -2 1 -2"),
        // amphichiral; classical J(2) = q^-2 - q^-1 + 1 - q + q^2
        expected: Expected {
            a_adequate: Some(true),
            b_adequate: Some(true),
            slopes: Some((-4, 4)),
            components: Some(1),
            jones2: Some(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]),
        },
    },
    CatalogEntry {
        name: "torus(2,2)",
        source: Source::Braid("2: 1 1"),
        // Hopf link: two components, so only adequacy applies
        expected: Expected {
            a_adequate: Some(true),
            b_adequate: Some(true),
            slopes: None,
            components: Some(2),
            jones2: None,
        },
    },
    CatalogEntry {
        name: "torus(2,4)",
        source: Source::Braid("2: 1 1 1 1"),
        expected: Expected {
            a_adequate: Some(true),
            b_adequate: Some(true),
            slopes: None,
            components: Some(2),
            jones2: None,
        },
    },
    CatalogEntry {
        name: "torus(2,5)",
        source: Source::Braid("2: 1 1 1 1 1"),
        // cinquefoil; J(2) = q^2+q^4-q^5+q^6-q^7 from the torus-knot formula
        expected: Expected {
            a_adequate: Some(true),
            b_adequate: Some(true),
            slopes: Some((0, 10)),
            components: Some(1),
            jones2: Some(&[(2, 1), (4, 1), (5, -1), (6, 1), (7, -1)]),
        },
    },
    CatalogEntry {
        name: "torus(2,6)",
        source: Source::Braid("2: 1 1 1 1 1 1"),
        expected: Expected {
            a_adequate: Some(true),
            b_adequate: Some(true),
            slopes: None,
            components: Some(2),
            jones2: None,
        },
    },
    CatalogEntry {
        name: "torus(2,7)",
        source: Source::Braid("2: 1 1 1 1 1 1 1"),
        expected: Expected {
            a_adequate: Some(true),
            b_adequate: Some(true),
            slopes: Some((0, 14)),
            components: Some(1),
            jones2: None,
        },
    },
    CatalogEntry {
        name: "torus(2,8)",
        source: Source::Braid("2: 1 1 1 1 1 1 1 1"),
        expected: Expected {
            a_adequate: Some(true),
            b_adequate: Some(true),
            slopes: None,
            components: Some(2),
            jones2: None,
        },
    },
    CatalogEntry {
        name: "torus(2,9)",
        source: Source::Braid("2: 1 1 1 1 1 1 1 1 1"),
        expected: Expected {
            a_adequate: Some(true),
            b_adequate: Some(true),
            slopes: Some((0, 18)),
            components: Some(1),
            jones2: None,
        },
    },
    CatalogEntry {
        name: "pretzel(-2,3,3)",
        source: Source::Pretzel(&[-2, 3, 3]),
        expected: Expected {
            a_adequate: Some(true),
            b_adequate: Some(false),
            slopes: Some((0, 16)),
            components: Some(1),
            jones2: None,
        },
    },
    CatalogEntry {
        name: "pretzel(-2,3,5)",
        source: Source::Pretzel(&[-2, 3, 5]),
        // the (3,5) torus knot; J(2) = q^4+q^6-q^10 from the torus formula.
        // All ten crossings are positive in the standard pretzel diagram.
        expected: Expected {
            a_adequate: Some(true),
            b_adequate: Some(false),
            slopes: Some((0, 20)),
            components: Some(1),
            jones2: Some(&[(4, 1), (6, 1), (10, -1)]),
        },
    },
    CatalogEntry {
        name: "pretzel(-2,3,7)",
        source: Source::Pretzel(&[-2, 3, 7]),
        expected: Expected {
            a_adequate: Some(true),
            b_adequate: Some(false),
            slopes: Some((0, 24)),
            components: Some(1),
            jones2: None,
        },
    },
    CatalogEntry {
        name: "pretzel(-2,3,-5)",
        source: Source::Pretzel(&[-2, 3, -5]),
        // the mirror-side example: only the all-B surface is detected
        expected: Expected {
            a_adequate: Some(false),
            b_adequate: Some(true),
            slopes: Some((-10, 10)),
            components: Some(1),
            jones2: None,
        },
    },
    CatalogEntry {
        name: "pretzel(3,3,3)",
        source: Source::Pretzel(&[3, 3, 3]),
        // alternating, hence adequate; every crossing is negative with the
        // twist-region orientations of the standard diagram
        expected: Expected {
            a_adequate: Some(true),
            b_adequate: Some(true),
            slopes: Some((-18, 0)),
            components: Some(1),
            jones2: None,
        },
    },
    CatalogEntry {
        name: "granny",
        source: Source::Braid("3: 1 1 1 2 2 2"),
        // positive braid with every syllable of length >= 3, so adequate;
        // J(2) is the square of the trefoil's polynomial
        expected: Expected {
            a_adequate: Some(true),
            b_adequate: Some(true),
            slopes: Some((0, 12)),
            components: Some(1),
            jones2: Some(&[(8, 1), (7, -2), (6, 1), (5, -2), (4, 2), (2, 1)]),
        },
    },
];
