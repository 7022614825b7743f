//! Kauffman states, state circles, state graphs, adequacy, and state-surface
//! boundary slopes.
//!
//! For a crossing tuple `[a, b, c, d]`, the A-resolution joins the arc pairs
//! `(a, b)` and `(c, d)`; the B-resolution joins `(a, d)` and `(b, c)`. This
//! pairing is pinned by the calibration tests: the A-resolution of a positive
//! braid generator is the uncrossed two-strand tangle, so the all-A state of
//! the closed braid `σ₁³` has exactly two circles.

use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::diagram::PDDiagram;
use crate::error::JonesError;

/// Resolution choice at one crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Resolution {
    A,
    B,
}

impl Resolution {
    pub fn flipped(self) -> Self {
        match self {
            Resolution::A => Resolution::B,
            Resolution::B => Resolution::A,
        }
    }
}

/// A total choice of resolution, indexed by crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KauffmanState {
    choices: Vec<Resolution>,
}

impl KauffmanState {
    pub fn new(choices: Vec<Resolution>) -> Self {
        KauffmanState { choices }
    }

    pub fn all_a(crossings: usize) -> Self {
        KauffmanState {
            choices: vec![Resolution::A; crossings],
        }
    }

    pub fn all_b(crossings: usize) -> Self {
        KauffmanState {
            choices: vec![Resolution::B; crossings],
        }
    }

    /// State number `mask` with bit `i` set meaning B at crossing `i`.
    pub fn from_mask(crossings: usize, mask: u64) -> Self {
        KauffmanState {
            choices: (0..crossings)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Resolution::B
                    } else {
                        Resolution::A
                    }
                })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.choices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choices.is_empty()
    }

    pub fn choice(&self, crossing: usize) -> Resolution {
        self.choices[crossing]
    }

    pub fn toggled(&self, crossing: usize) -> Self {
        let mut out = self.clone();
        out.choices[crossing] = out.choices[crossing].flipped();
        out
    }

    pub fn count_b(&self) -> usize {
        self.choices
            .iter()
            .filter(|&&r| r == Resolution::B)
            .count()
    }
}

impl Serialize for KauffmanState {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.choices.len()))?;
        for (i, r) in self.choices.iter().enumerate() {
            map.serialize_entry(
                &i.to_string(),
                match r {
                    Resolution::A => "A",
                    Resolution::B => "B",
                },
            )?;
        }
        map.end()
    }
}

/// State circles of a resolved diagram.
#[derive(Clone, Debug)]
pub struct StateCircles {
    circle_count: usize,
    /// circle id of each crossing slot (4 per crossing); ids are dense.
    circle_of_slot: Vec<usize>,
}

impl StateCircles {
    pub fn circle_count(&self) -> usize {
        self.circle_count
    }

    pub fn circle_of_slot(&self, crossing: usize, slot: usize) -> usize {
        self.circle_of_slot[4 * crossing + slot]
    }
}

/// One vertex per state circle, one edge per crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StateGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl StateGraph {
    pub fn loop_edges(&self) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, (u, v))| u == v)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|(u, v)| u == v)
    }
}

/// Counts entering the state-surface slope formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StateStats {
    /// positive crossings resolved B
    pub b_at_positive: usize,
    /// negative crossings resolved A
    pub a_at_negative: usize,
}

/// A slope `num/den` in lowest terms; denominator 0 encodes ∞. Every slope
/// produced by this crate is an integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Slope {
    pub numerator: i64,
    pub denominator: u64,
}

impl Slope {
    pub fn integer(n: i64) -> Self {
        Slope {
            numerator: n,
            denominator: 1,
        }
    }

    pub fn new(numerator: i64, denominator: u64) -> Self {
        if denominator == 0 {
            return Slope {
                numerator: 1,
                denominator: 0,
            };
        }
        let g = num_integer::gcd(numerator.unsigned_abs(), denominator);
        Slope {
            numerator: numerator / g as i64,
            denominator: denominator / g,
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        (self.denominator == 1).then_some(self.numerator)
    }

    /// Exact value as f64 where it fits (diagnostics only).
    pub fn to_f64(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.denominator {
            0 => write!(f, "∞"),
            1 => write!(f, "{}", self.numerator),
            d => write!(f, "{}/{}", self.numerator, d),
        }
    }
}

fn smoothing_pairs(slot_base: usize, r: Resolution) -> [(usize, usize); 2] {
    match r {
        Resolution::A => [(slot_base, slot_base + 1), (slot_base + 2, slot_base + 3)],
        Resolution::B => [(slot_base, slot_base + 3), (slot_base + 1, slot_base + 2)],
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

/// Resolve every crossing of `d` according to `state` and collect the state
/// circles by disjoint-set merging of crossing slots.
pub fn resolve(d: &PDDiagram, state: &KauffmanState) -> StateCircles {
    let c = d.crossing_count();
    assert_eq!(state.len(), c, "state must be total on the diagram");
    let mut uf = UnionFind::new(4 * c);
    for x in 0..c {
        for (u, v) in smoothing_pairs(4 * x, state.choice(x)) {
            uf.union(u, v);
        }
    }
    // Arc gluing: the two appearances of each arc lie on the same circle.
    let mut seen_at = vec![usize::MAX; 2 * c];
    for (x, t) in d.crossings().iter().enumerate() {
        for (s, &arc) in t.iter().enumerate() {
            let slot = 4 * x + s;
            if seen_at[arc - 1] == usize::MAX {
                seen_at[arc - 1] = slot;
            } else {
                uf.union(seen_at[arc - 1], slot);
            }
        }
    }
    let mut ids = std::collections::HashMap::new();
    let mut circle_of_slot = vec![0usize; 4 * c];
    for slot in 0..4 * c {
        let root = uf.find(slot);
        let next = ids.len();
        let id = *ids.entry(root).or_insert(next);
        circle_of_slot[slot] = id;
    }
    StateCircles {
        circle_count: ids.len() + d.extra_circles(),
        circle_of_slot,
    }
}

/// The state graph: one vertex per circle, one edge per crossing joining the
/// circles containing its two smoothing arcs (possibly a loop).
pub fn state_graph(d: &PDDiagram, state: &KauffmanState) -> StateGraph {
    let circles = resolve(d, state);
    let edges = (0..d.crossing_count())
        .map(|x| {
            let (u, v) = match state.choice(x) {
                // first smoothing arc sits on slots (a,b) or (a,d); second on the rest
                Resolution::A => (circles.circle_of_slot(x, 0), circles.circle_of_slot(x, 2)),
                Resolution::B => (circles.circle_of_slot(x, 0), circles.circle_of_slot(x, 1)),
            };
            (u, v)
        })
        .collect();
    StateGraph {
        vertices: circles.circle_count(),
        edges,
    }
}

/// Number of circles in the all-A state.
pub fn v_a(d: &PDDiagram) -> usize {
    resolve(d, &KauffmanState::all_a(d.crossing_count())).circle_count()
}

/// Number of circles in the all-B state.
pub fn v_b(d: &PDDiagram) -> usize {
    resolve(d, &KauffmanState::all_b(d.crossing_count())).circle_count()
}

/// `(A_adequate, B_adequate)`: whether the all-A (all-B) state graph is free
/// of 1-edge loops. Multiple edges between distinct circles are fine.
pub fn is_adequate(d: &PDDiagram) -> (bool, bool) {
    let c = d.crossing_count();
    let a = !state_graph(d, &KauffmanState::all_a(c)).has_loop();
    let b = !state_graph(d, &KauffmanState::all_b(c)).has_loop();
    (a, b)
}

/// Crossings contributing loop edges to the all-A and all-B state graphs.
pub fn loop_witnesses(d: &PDDiagram) -> (Vec<usize>, Vec<usize>) {
    let c = d.crossing_count();
    (
        state_graph(d, &KauffmanState::all_a(c)).loop_edges(),
        state_graph(d, &KauffmanState::all_b(c)).loop_edges(),
    )
}

/// The state following the orientation: A at every positive crossing, B at
/// every negative crossing. Its circles are the Seifert circles and its
/// state surface is orientable, so its slope is 0.
pub fn seifert_state(d: &PDDiagram) -> KauffmanState {
    let orient = d
        .orientation()
        .expect("diagram was validated on construction");
    KauffmanState::new(
        (0..d.crossing_count())
            .map(|x| {
                if orient.sign(x) > 0 {
                    Resolution::A
                } else {
                    Resolution::B
                }
            })
            .collect(),
    )
}

/// Count positive crossings resolved B and negative crossings resolved A.
pub fn state_stats(d: &PDDiagram, state: &KauffmanState) -> StateStats {
    let orient = d
        .orientation()
        .expect("diagram was validated on construction");
    let mut b_at_positive = 0;
    let mut a_at_negative = 0;
    for x in 0..d.crossing_count() {
        match (orient.sign(x) > 0, state.choice(x)) {
            (true, Resolution::B) => b_at_positive += 1,
            (false, Resolution::A) => a_at_negative += 1,
            _ => {}
        }
    }
    StateStats {
        b_at_positive,
        a_at_negative,
    }
}

fn require_knot(d: &PDDiagram) -> Result<(), JonesError> {
    let components = d.stats().components;
    if components != 1 {
        return Err(JonesError::NotAKnot { components });
    }
    Ok(())
}

/// Boundary slope of the state surface of `state`:
/// `2·(positive crossings resolved B) − 2·(negative crossings resolved A)`.
pub fn state_slope(d: &PDDiagram, state: &KauffmanState) -> Result<Slope, JonesError> {
    require_knot(d)?;
    let s = state_stats(d, state);
    Ok(Slope::integer(
        2 * s.b_at_positive as i64 - 2 * s.a_at_negative as i64,
    ))
}

/// Boundary slopes of the all-A and all-B state surfaces: `(−2c₋, +2c₊)`.
pub fn boundary_slopes(d: &PDDiagram) -> Result<(Slope, Slope), JonesError> {
    require_knot(d)?;
    let stats = d.stats();
    Ok((
        Slope::integer(-2 * stats.c_minus as i64),
        Slope::integer(2 * stats.c_plus as i64),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_braid, pretzel_pd};

    fn trefoil() -> PDDiagram {
        parse_braid("2: 1 1 1").unwrap().to_pd()
    }

    #[test]
    fn calibration_all_a_is_identity_tangle() {
        // A-resolving a positive braid generator keeps the strands parallel,
        // so the all-A state of any σ₁^k closure has exactly 2 circles and
        // the all-B state chains up k circles.
        for k in 1..=5 {
            let word: Vec<i32> = vec![1; k];
            let pd = crate::diagram::BraidWord::new(2, word).unwrap().to_pd();
            assert_eq!(v_a(&pd), 2, "k={k}");
            assert_eq!(v_b(&pd), k.max(1), "k={k}");
        }
    }

    #[test]
    fn trefoil_state_graphs() {
        let pd = trefoil();
        let ga = state_graph(&pd, &KauffmanState::all_a(3));
        assert_eq!(ga.vertices, 2);
        assert_eq!(ga.edges.len(), 3);
        assert!(!ga.has_loop());
        assert_eq!(is_adequate(&pd), (true, true));
        assert_eq!(v_a(&pd) + v_b(&pd), 3 + 2); // reduced alternating
    }

    #[test]
    fn kink_adequacy() {
        let kink = parse_braid("2: 1").unwrap().to_pd();
        assert_eq!(v_a(&kink), 2);
        assert_eq!(v_b(&kink), 1);
        let gb = state_graph(&kink, &KauffmanState::all_b(1));
        assert_eq!((gb.vertices, gb.edges.len()), (1, 1));
        assert!(gb.has_loop());
        assert_eq!(is_adequate(&kink), (true, false));
    }

    #[test]
    fn unknot_states() {
        let u = PDDiagram::unknot();
        assert_eq!(resolve(&u, &KauffmanState::all_a(0)).circle_count(), 1);
        assert_eq!(boundary_slopes(&u).unwrap(), (Slope::integer(0), Slope::integer(0)));
    }

    #[test]
    fn seifert_state_properties() {
        let pd = trefoil();
        let seifert = seifert_state(&pd);
        assert_eq!(seifert, KauffmanState::all_a(3));
        assert_eq!(resolve(&pd, &seifert).circle_count(), 2); // = braid strands
        let stats = state_stats(&pd, &seifert);
        assert_eq!((stats.b_at_positive, stats.a_at_negative), (0, 0));
        assert_eq!(state_slope(&pd, &seifert).unwrap(), Slope::integer(0));

        let fig8 = parse_braid("3: 1 -2 1 -2").unwrap().to_pd();
        assert_eq!(state_slope(&fig8, &seifert_state(&fig8)).unwrap(), Slope::integer(0));
    }

    #[test]
    fn slopes() {
        let pd = trefoil();
        assert_eq!(
            state_slope(&pd, &KauffmanState::all_b(3)).unwrap(),
            Slope::integer(6)
        );
        assert_eq!(
            boundary_slopes(&pd).unwrap(),
            (Slope::integer(0), Slope::integer(6))
        );

        let fig8 = parse_braid("3: 1 -2 1 -2").unwrap().to_pd();
        assert_eq!(
            state_slope(&fig8, &KauffmanState::all_a(4)).unwrap(),
            Slope::integer(-4)
        );
        assert_eq!(
            state_slope(&fig8, &KauffmanState::all_b(4)).unwrap(),
            Slope::integer(4)
        );
        assert_eq!(
            boundary_slopes(&fig8).unwrap(),
            (Slope::integer(-4), Slope::integer(4))
        );

        let hopf = parse_braid("2: 1 1").unwrap().to_pd();
        assert!(matches!(
            boundary_slopes(&hopf),
            Err(JonesError::NotAKnot { components: 2 })
        ));
    }

    #[test]
    fn figure8_circle_counts() {
        let fig8 = parse_braid("3: 1 -2 1 -2").unwrap().to_pd();
        assert_eq!(v_a(&fig8), 3);
        assert_eq!(v_b(&fig8), 3);
        assert_eq!(is_adequate(&fig8), (true, true));
    }

    #[test]
    fn pretzel_adequacy() {
        for (p, expect) in [(3, (true, false)), (5, (true, false)), (7, (true, false)), (-5, (false, true))]
        {
            let pd = pretzel_pd(&[-2, 3, p]).unwrap();
            assert_eq!(is_adequate(&pd), expect, "p={p}");
        }
        let v = pretzel_pd(&[-2, 3, 5]).unwrap();
        assert_eq!(v_a(&v), 3);
        assert_eq!(v_b(&v), 7);

        let alt = pretzel_pd(&[3, 3, 3]).unwrap();
        assert_eq!(is_adequate(&alt), (true, true));
        assert_eq!(v_a(&alt) + v_b(&alt), 9 + 2);
    }

    #[test]
    fn mirror_swaps_flags() {
        for input in [
            parse_braid("2: 1").unwrap().to_pd(),
            pretzel_pd(&[-2, 3, 5]).unwrap(),
            trefoil(),
        ] {
            let (a, b) = is_adequate(&input);
            assert_eq!(is_adequate(&input.mirror()), (b, a));
        }
    }

    #[test]
    fn toggle_changes_circles_by_one() {
        let pd = pretzel_pd(&[-2, 3, 5]).unwrap();
        let state = KauffmanState::from_mask(10, 0b1011001010);
        let base = resolve(&pd, &state).circle_count() as i64;
        for x in 0..10 {
            let delta = resolve(&pd, &state.toggled(x)).circle_count() as i64 - base;
            assert_eq!(delta.abs(), 1, "crossing {x}");
        }
    }

    #[test]
    fn slope_format() {
        assert_eq!(Slope::integer(-4).to_string(), "-4");
        assert_eq!(Slope::new(30, 4).to_string(), "15/2");
        assert_eq!(Slope::new(1, 0).to_string(), "∞");
    }
}
