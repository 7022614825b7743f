//! Exact Kauffman bracket evaluation.
//!
//! Two independent engines compute the same value:
//!
//! - [`bracket_naive`]: the literal state sum over all `2^c` Kauffman states
//!   of a PD code. Exponential, bounded, and kept as the reference oracle.
//! - [`bracket_dp`]: a sweep over a Morse presentation maintaining a finite
//!   map from noncrossing perfect matchings of the boundary to exact Laurent
//!   amplitudes. A crossing event expands by the skein rule
//!   `⟨crossing⟩ = A·⟨vertical smoothing⟩ + A⁻¹·⟨horizontal smoothing⟩`
//!   (for `CrossPos`; `CrossNeg` swaps the weights) and a closed circle
//!   multiplies its amplitude by `δ = −A²−A⁻²`.
//!
//! Both normalizations of the bracket are carried: `poly_delta` gives every
//! closed circle a factor δ (the empty diagram evaluates to 1), and
//! `poly_circle` is the exact quotient by one δ (a single circle evaluates
//! to 1). Linear combinations of cables only make sense in the δ convention,
//! while the degree law for adequate diagrams is stated in the circle
//! convention, so carrying both avoids a silent off-by-δ.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use serde::Serialize;

use crate::diagram::{MorseEvent, MorsePresentation, PDDiagram};
use crate::error::BracketError;
use crate::laurent::LaurentPoly;
use crate::states::{resolve, KauffmanState};

/// Default crossing bound for the naive oracle.
pub const DEFAULT_ORACLE_BOUND: usize = 16;

/// Which evaluation engine to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Naive,
    Dp,
}

impl std::str::FromStr for Engine {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "naive" => Ok(Engine::Naive),
            "dp" => Ok(Engine::Dp),
            other => Err(format!("unknown engine {other:?} (expected naive|dp)")),
        }
    }
}

/// Cost telemetry of an evaluation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EngineTelemetry {
    /// peak boundary width (dp) — 0 for the naive engine
    pub max_width: usize,
    /// peak number of matchings carried (dp) or states summed (naive)
    pub peak_support: usize,
    pub crossings: usize,
}

/// A bracket value in both normalizations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketValue {
    /// every closed circle contributes δ; the empty diagram gives 1
    pub poly_delta: LaurentPoly,
    /// exact quotient by δ; `None` for the empty diagram
    pub poly_circle: Option<LaurentPoly>,
    pub telemetry: EngineTelemetry,
}

fn circle_normalize(poly_delta: &LaurentPoly, nonempty: bool) -> Option<LaurentPoly> {
    nonempty.then(|| {
        poly_delta
            .divide_exact(&LaurentPoly::delta())
            .expect("bracket of a nonempty diagram is divisible by delta")
    })
}

/// The literal Kauffman state sum `Σ_σ A^(#A−#B) δ^(circles)` over a PD code.
pub fn bracket_naive(d: &PDDiagram, bound: usize) -> Result<BracketValue, BracketError> {
    let c = d.crossing_count();
    if c > bound || c >= 63 {
        return Err(BracketError::OracleBound {
            crossings: c,
            bound,
        });
    }
    let max_circles = c + 1 + d.extra_circles();
    let mut delta_pow = Vec::with_capacity(max_circles + 1);
    delta_pow.push(LaurentPoly::one());
    for i in 1..=max_circles {
        delta_pow.push(&delta_pow[i - 1] * &LaurentPoly::delta());
    }

    let mut total = LaurentPoly::zero();
    for mask in 0..(1u64 << c) {
        let state = KauffmanState::from_mask(c, mask);
        let circles = resolve(d, &state).circle_count();
        let b = mask.count_ones() as i64;
        let exp = c as i64 - 2 * b;
        total += &delta_pow[circles].mul_mono(1, exp);
    }
    Ok(BracketValue {
        poly_circle: circle_normalize(&total, true),
        poly_delta: total,
        telemetry: EngineTelemetry {
            max_width: 0,
            peak_support: 1usize << c,
            crossings: c,
        },
    })
}

/// A noncrossing perfect matching of boundary points: `mate[i]` is the point
/// matched to `i`.
type Matching = Vec<u8>;

fn matching_cup(key: &Matching, p: usize) -> Matching {
    let shift = |x: u8| if x as usize >= p { x + 2 } else { x };
    let mut out = Vec::with_capacity(key.len() + 2);
    out.extend(key[..p].iter().map(|&m| shift(m)));
    out.push(p as u8 + 1);
    out.push(p as u8);
    out.extend(key[p..].iter().map(|&m| shift(m)));
    out
}

/// Remove points `p`, `p+1`, joining their mates. Returns the new matching
/// and whether a circle closed (the two points were mated to each other).
fn matching_close(key: &Matching, p: usize) -> (Matching, bool) {
    let closed = key[p] as usize == p + 1;
    let mut out = key.clone();
    if !closed {
        let (a, b) = (key[p] as usize, key[p + 1] as usize);
        out[a] = b as u8;
        out[b] = a as u8;
    }
    out.remove(p + 1);
    out.remove(p);
    for m in &mut out {
        if *m as usize >= p {
            *m -= 2;
        }
    }
    (out, closed)
}

/// The horizontal (turnback) smoothing at `p` for a matching where `p`, `p+1`
/// are not mated to each other: their old mates join and `(p, p+1)` pair up.
fn matching_turnback(key: &Matching, p: usize) -> Matching {
    debug_assert_ne!(key[p] as usize, p + 1);
    let (a, b) = (key[p] as usize, key[p + 1] as usize);
    let mut out = key.clone();
    out[a] = b as u8;
    out[b] = a as u8;
    out[p] = p as u8 + 1;
    out[p + 1] = p as u8;
    out
}

fn accumulate(map: &mut BTreeMap<Matching, LaurentPoly>, key: Matching, amp: LaurentPoly) {
    if amp.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(amp);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &amp;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Evaluate a Morse presentation with the planar-matching sweep. Exact and
/// deterministic; the support is bounded by the Catalan number of half the
/// peak width.
pub fn bracket_dp(m: &MorsePresentation) -> BracketValue {
    let delta = LaurentPoly::delta();
    let mut support: BTreeMap<Matching, LaurentPoly> = BTreeMap::new();
    support.insert(Vec::new(), LaurentPoly::one());
    let mut peak_support = 1usize;

    for ev in m.events() {
        let mut next: BTreeMap<Matching, LaurentPoly> = BTreeMap::new();
        match *ev {
            MorseEvent::Cup(p) => {
                for (key, amp) in &support {
                    accumulate(&mut next, matching_cup(key, p), amp.clone());
                }
            }
            MorseEvent::Cap(p) => {
                for (key, amp) in &support {
                    let (new_key, closed) = matching_close(key, p);
                    let amp = if closed { amp * &delta } else { amp.clone() };
                    accumulate(&mut next, new_key, amp);
                }
            }
            MorseEvent::CrossPos(p) | MorseEvent::CrossNeg(p) => {
                let (ident_exp, turn_exp) = match ev {
                    MorseEvent::CrossPos(_) => (1, -1),
                    _ => (-1, 1),
                };
                for (key, amp) in &support {
                    accumulate(&mut next, key.clone(), amp.mul_mono(1, ident_exp));
                    if key[p] as usize == p + 1 {
                        // the turnback closes a circle and recreates the pair
                        accumulate(
                            &mut next,
                            key.clone(),
                            &amp.mul_mono(1, turn_exp) * &delta,
                        );
                    } else {
                        accumulate(
                            &mut next,
                            matching_turnback(key, p),
                            amp.mul_mono(1, turn_exp),
                        );
                    }
                }
            }
        }
        support = next;
        peak_support = peak_support.max(support.len());
    }

    debug_assert!(support.len() <= 1);
    let poly_delta = support
        .remove(&Vec::new())
        .unwrap_or_else(LaurentPoly::zero);
    BracketValue {
        poly_circle: circle_normalize(&poly_delta, !m.is_empty()),
        poly_delta,
        telemetry: EngineTelemetry {
            max_width: m.max_width(),
            peak_support,
            crossings: m.crossing_count(),
        },
    }
}

/// The bracket extended linearly over formal integer combinations of
/// diagrams, in the δ normalization (the empty presentation contributes 1).
pub fn bracket_combination(terms: &[(i64, MorsePresentation)]) -> LaurentPoly {
    use rayon::prelude::*;
    let parts: Vec<LaurentPoly> = terms
        .par_iter()
        .map(|(coeff, m)| bracket_dp(m).poly_delta.mul_mono(*coeff, 0))
        .collect();
    let mut total = LaurentPoly::zero();
    for p in &parts {
        total += p;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_braid, to_morse};

    fn dp_of(word: &str) -> BracketValue {
        bracket_dp(&to_morse(&parse_braid(word).unwrap().to_pd()))
    }

    #[test]
    fn empty_and_unknot() {
        let empty = bracket_dp(&MorsePresentation::empty());
        assert_eq!(empty.poly_delta, LaurentPoly::one());
        assert_eq!(empty.poly_circle, None);

        let unknot = bracket_dp(&to_morse(&PDDiagram::unknot()));
        assert_eq!(unknot.poly_delta, LaurentPoly::delta());
        assert_eq!(unknot.poly_circle, Some(LaurentPoly::one()));
    }

    #[test]
    fn kink_bracket() {
        // positive kink: A·δ² + A⁻¹·δ = −A³·δ
        let expected_circle = LaurentPoly::mono(-1, 3);
        let v = dp_of("2: 1");
        assert_eq!(v.poly_circle.as_ref(), Some(&expected_circle));
        assert_eq!(v.poly_delta, LaurentPoly::from_terms([(5, 1), (1, 1)]));

        let naive = bracket_naive(&parse_braid("2: 1").unwrap().to_pd(), 16).unwrap();
        assert_eq!(naive.poly_delta, v.poly_delta);
    }

    #[test]
    fn trefoil_bracket() {
        let expected_delta = LaurentPoly::from_terms([(7, 1), (3, 1), (-1, 1), (-9, -1)]);
        let expected_circle = LaurentPoly::from_terms([(5, -1), (-3, -1), (-7, 1)]);
        let v = dp_of("2: 1 1 1");
        assert_eq!(v.poly_delta, expected_delta);
        assert_eq!(v.poly_circle, Some(expected_circle));

        let naive = bracket_naive(&parse_braid("2: 1 1 1").unwrap().to_pd(), 16).unwrap();
        assert_eq!(naive.poly_delta, expected_delta);
    }

    #[test]
    fn hopf_bracket() {
        let v = dp_of("2: 1 1");
        assert_eq!(
            v.poly_circle,
            Some(LaurentPoly::from_terms([(4, -1), (-4, -1)]))
        );
    }

    #[test]
    fn engines_agree_on_braids() {
        for word in ["2: 1 1 1", "3: 1 -2 1 -2", "2: 1 -1", "3: 1 2 1 2", "4: 1 -2 3 -2 1"] {
            let pd = parse_braid(word).unwrap().to_pd();
            let naive = bracket_naive(&pd, 16).unwrap();
            let dp = bracket_dp(&to_morse(&pd));
            assert_eq!(naive.poly_delta, dp.poly_delta, "{word}");
        }
    }

    #[test]
    fn oracle_bound_enforced() {
        let pd = parse_braid("2: 1 1 1").unwrap().to_pd();
        assert!(matches!(
            bracket_naive(&pd, 2),
            Err(BracketError::OracleBound { crossings: 3, bound: 2 })
        ));
    }

    #[test]
    fn mirror_inverts_variable() {
        for word in ["2: 1 1 1", "3: 1 -2 1 -2", "3: 1 1 2"] {
            let morse = to_morse(&parse_braid(word).unwrap().to_pd());
            let v = bracket_dp(&morse);
            let m = bracket_dp(&morse.mirror());
            assert_eq!(m.poly_delta, v.poly_delta.invert_variable(), "{word}");
        }
    }

    #[test]
    fn disjoint_circle_multiplies_by_delta() {
        let pd = parse_braid("2: 1 1 1").unwrap().to_pd();
        let mut events = to_morse(&pd).events().to_vec();
        events.push(MorseEvent::Cup(0));
        events.push(MorseEvent::Cap(0));
        let with_circle = MorsePresentation::new(events).unwrap();
        let base = bracket_dp(&to_morse(&pd));
        assert_eq!(
            bracket_dp(&with_circle).poly_delta,
            &base.poly_delta * &LaurentPoly::delta()
        );
    }

    #[test]
    fn combination_linearity() {
        let trefoil = to_morse(&parse_braid("2: 1 1 1").unwrap().to_pd());
        assert_eq!(
            bracket_combination(&[(1, trefoil.clone()), (-1, trefoil.clone())]),
            LaurentPoly::zero()
        );
        assert_eq!(
            bracket_combination(&[(1, MorsePresentation::empty())]),
            LaurentPoly::one()
        );
        // S₂ of a single circle: δ² − 1
        let circle = to_morse(&PDDiagram::unknot());
        let two = circle.cable(2);
        let s2 = bracket_combination(&[(1, two), (-1, MorsePresentation::empty())]);
        assert_eq!(s2, LaurentPoly::from_terms([(4, 1), (0, 1), (-4, 1)]));
    }
}
