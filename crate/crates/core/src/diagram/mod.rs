//! Diagram representations: planar diagram (PD) codes, braid words, and Morse
//! event lists, together with parsers, generators, mirrors and cables.
//!
//! # PD convention
//!
//! A crossing is a 4-tuple `[a, b, c, d]` of arc labels. The first entry is
//! the incoming under-strand arc; the remaining entries proceed
//! counterclockwise around the crossing. The under-strand therefore runs
//! `a → c`, and the over-strand occupies `b` and `d`. Arc labels are positive
//! integers numbered consecutively along each oriented component (wrapping
//! within the component), so orientation is implied by the labels.
//!
//! A crossing is positive exactly when the over-strand enters at `d` and
//! leaves at `b`; closed positive braid words produce all-positive crossings.

mod braid;
mod morse;
mod ports;
mod pretzel;

pub use braid::{parse_braid, BraidWord};
pub use morse::{to_morse, MorseEvent, MorsePresentation};
pub use pretzel::pretzel_pd;

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::DiagramError;

/// A planar diagram code. `extra_circles` counts crossing-free split unknot
/// components (the 0-crossing unknot is `crossings: [], extra_circles: 1`).
#[derive(Clone, PartialEq, Eq)]
pub struct PDDiagram {
    name: Option<String>,
    crossings: Vec<[usize; 4]>,
    extra_circles: usize,
}

/// Signed crossing counts of an oriented diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramStats {
    pub crossings: usize,
    pub c_plus: usize,
    pub c_minus: usize,
    pub writhe: i64,
    pub components: usize,
}

/// Resolved orientation data for a PD code.
#[derive(Clone, Debug)]
pub(crate) struct Orientation {
    /// Per crossing: true when the over-strand enters at tuple slot `d`
    /// (that is exactly the positive crossings).
    pub over_in_d: Vec<bool>,
    /// `(first_label, length)` per component, in label order.
    pub components: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn sign(&self, crossing: usize) -> i8 {
        if self.over_in_d[crossing] {
            1
        } else {
            -1
        }
    }
}

impl PDDiagram {
    /// Validate and build a diagram from raw crossing tuples.
    pub fn new(crossings: Vec<[usize; 4]>, extra_circles: usize) -> Result<Self, DiagramError> {
        let d = PDDiagram {
            name: None,
            crossings,
            extra_circles,
        };
        d.validate()?;
        Ok(d)
    }

    /// The standard 0-crossing unknot diagram.
    pub fn unknot() -> Self {
        PDDiagram {
            name: None,
            crossings: Vec::new(),
            extra_circles: 1,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn extra_circles(&self) -> usize {
        self.extra_circles
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn is_knot(&self) -> bool {
        self.stats().components == 1
    }

    fn validate(&self) -> Result<(), DiagramError> {
        if self.crossings.is_empty() && self.extra_circles == 0 {
            return Err(DiagramError::EmptyDiagram);
        }
        let n = self.arc_count();
        let mut seen = vec![0usize; n];
        for x in &self.crossings {
            for &arc in x {
                if arc == 0 || arc > n {
                    return Err(DiagramError::LabelRange(arc));
                }
                seen[arc - 1] += 1;
            }
        }
        if let Some(i) = seen.iter().position(|&k| k != 2) {
            return Err(DiagramError::ArcMultiplicity(i + 1));
        }
        self.orientation()?;
        Ok(())
    }

    /// Infer orientation from the arc labeling: slot `a` is always incoming
    /// and slot `c` outgoing; constraint propagation settles the over slots.
    pub(crate) fn orientation(&self) -> Result<Orientation, DiagramError> {
        let c = self.crossings.len();
        let n = 2 * c;
        // is_in[4x + slot]
        let mut is_in: Vec<Option<bool>> = vec![None; 4 * c];
        // arc -> its (crossing, slot) appearances
        let mut appear: Vec<Vec<usize>> = vec![Vec::with_capacity(2); n];
        for (x, t) in self.crossings.iter().enumerate() {
            for (s, &arc) in t.iter().enumerate() {
                appear[arc - 1].push(4 * x + s);
            }
        }

        let mut queue: Vec<(usize, bool)> = Vec::with_capacity(4 * c);
        let assign = |slot: usize,
                          v: bool,
                          is_in: &mut Vec<Option<bool>>,
                          queue: &mut Vec<(usize, bool)>|
         -> Result<(), DiagramError> {
            match is_in[slot] {
                Some(old) if old != v => Err(DiagramError::InconsistentOrientation),
                Some(_) => Ok(()),
                None => {
                    is_in[slot] = Some(v);
                    queue.push((slot, v));
                    Ok(())
                }
            }
        };

        for x in 0..c {
            assign(4 * x, true, &mut is_in, &mut queue)?;
            assign(4 * x + 2, false, &mut is_in, &mut queue)?;
        }
        let mut head = 0;
        let propagate = |queue: &mut Vec<(usize, bool)>,
                             is_in: &mut Vec<Option<bool>>,
                             head: &mut usize|
         -> Result<(), DiagramError> {
            while *head < queue.len() {
                let (slot, v) = queue[*head];
                *head += 1;
                // An arc flows out of one end and into the other.
                let arc = self.crossings[slot / 4][slot % 4];
                for &other in &appear[arc - 1] {
                    if other != slot {
                        let (o, val) = (other, !v);
                        match is_in[o] {
                            Some(old) if old != val => {
                                return Err(DiagramError::InconsistentOrientation)
                            }
                            Some(_) => {}
                            None => {
                                is_in[o] = Some(val);
                                queue.push((o, val));
                            }
                        }
                    }
                }
                // The over-strand enters at exactly one of slots b, d.
                if slot % 4 == 1 || slot % 4 == 3 {
                    let mate = slot ^ 2; // 1 <-> 3 within the crossing
                    let val = !v;
                    match is_in[mate] {
                        Some(old) if old != val => {
                            return Err(DiagramError::InconsistentOrientation)
                        }
                        Some(_) => {}
                        None => {
                            is_in[mate] = Some(val);
                            queue.push((mate, val));
                        }
                    }
                }
            }
            Ok(())
        };
        propagate(&mut queue, &mut is_in, &mut head)?;

        // Components whose every passage is an over-passage are untouched by
        // propagation; settle them from the labels alone.
        for x in 0..c {
            if is_in[4 * x + 1].is_some() {
                continue;
            }
            let (b, d) = (self.crossings[x][1], self.crossings[x][3]);
            // true = over enters at d
            let d_in = if d == b + 1 {
                false // succ(b) = d
            } else if b == d + 1 {
                true // succ(d) = b
            } else {
                // A wrap: the larger label is the component's last arc.
                d > b
            };
            assign(4 * x + 3, d_in, &mut is_in, &mut queue)?;
            propagate(&mut queue, &mut is_in, &mut head)?;
        }

        // Successor map; every arc must have exactly one incoming end.
        let mut succ = vec![0usize; n];
        let mut has_succ = vec![false; n];
        let mut over_in_d = vec![false; c];
        for (x, t) in self.crossings.iter().enumerate() {
            let d_in = is_in[4 * x + 3].unwrap();
            over_in_d[x] = d_in;
            let (over_in, over_out) = if d_in { (t[3], t[1]) } else { (t[1], t[3]) };
            for (from, to) in [(t[0], t[2]), (over_in, over_out)] {
                if has_succ[from - 1] {
                    return Err(DiagramError::InconsistentOrientation);
                }
                has_succ[from - 1] = true;
                succ[from - 1] = to;
            }
        }

        // Components must be cyclic consecutive label ranges.
        let mut components = Vec::new();
        let mut visited = vec![false; n];
        for start in 1..=n {
            if visited[start - 1] {
                continue;
            }
            let mut cur = start;
            let mut len = 0usize;
            loop {
                visited[cur - 1] = true;
                len += 1;
                let next = succ[cur - 1];
                if next == start {
                    break;
                }
                if next != cur + 1 || len > n {
                    return Err(DiagramError::NonConsecutiveComponent(start));
                }
                cur = next;
            }
            if start + len - 1 != cur {
                return Err(DiagramError::NonConsecutiveComponent(start));
            }
            components.push((start, len));
        }

        Ok(Orientation {
            over_in_d,
            components,
        })
    }

    /// Signed crossing counts; crossing signs are inferred from arc-label
    /// succession.
    pub fn stats(&self) -> DiagramStats {
        let orient = self
            .orientation()
            .expect("diagram was validated on construction");
        let c_plus = orient.over_in_d.iter().filter(|&&p| p).count();
        let c = self.crossings.len();
        DiagramStats {
            crossings: c,
            c_plus,
            c_minus: c - c_plus,
            writhe: c_plus as i64 - (c - c_plus) as i64,
            components: orient.components.len() + self.extra_circles,
        }
    }

    /// The mirror diagram: every crossing's over/under is reversed, and each
    /// tuple is re-anchored to its new incoming under-strand.
    pub fn mirror(&self) -> PDDiagram {
        let orient = self
            .orientation()
            .expect("diagram was validated on construction");
        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .map(|(x, &[a, b, c, d])| {
                if orient.over_in_d[x] {
                    [d, a, b, c]
                } else {
                    [b, c, d, a]
                }
            })
            .collect();
        PDDiagram {
            name: self.name.clone(),
            crossings,
            extra_circles: self.extra_circles,
        }
    }

    /// True when every arc passes once over and once under — the diagram is
    /// alternating.
    pub fn is_alternating(&self) -> bool {
        let n = self.arc_count();
        let mut under = vec![0u8; n];
        let mut over = vec![0u8; n];
        for t in &self.crossings {
            under[t[0] - 1] += 1;
            under[t[2] - 1] += 1;
            over[t[1] - 1] += 1;
            over[t[3] - 1] += 1;
        }
        (0..n).all(|i| under[i] == 1 && over[i] == 1)
    }
}

impl fmt::Debug for PDDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("PDDiagram");
        if let Some(name) = &self.name {
            d.field("name", name);
        }
        d.field("crossings", &self.crossings);
        if self.extra_circles > 0 {
            d.field("extra_circles", &self.extra_circles);
        }
        d.finish()
    }
}

/// Parse the PD JSON format:
/// `{"name"?: string, "crossings": [[a,b,c,d], ...], "extra_circles"?: int}`.
/// An empty crossing list with no `extra_circles` field is the unknot.
pub fn parse_pd(bytes: &[u8]) -> Result<PDDiagram, DiagramError> {
    serde_json::from_slice(bytes).map_err(|e| DiagramError::PdJson(e.to_string()))
}

#[derive(Deserialize)]
struct RawPd {
    #[serde(default)]
    name: Option<String>,
    crossings: Vec<Vec<usize>>,
    #[serde(default)]
    extra_circles: Option<usize>,
}

impl Serialize for PDDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let unknot_form = self.crossings.is_empty() && self.extra_circles == 1;
        let emit_extra = self.extra_circles > 0 && !unknot_form;
        let mut len = 1 + usize::from(self.name.is_some()) + usize::from(emit_extra);
        if len == 0 {
            len = 1;
        }
        let mut s = serializer.serialize_struct("PDDiagram", len)?;
        if let Some(name) = &self.name {
            s.serialize_field("name", name)?;
        }
        s.serialize_field("crossings", &self.crossings)?;
        if emit_extra {
            s.serialize_field("extra_circles", &self.extra_circles)?;
        }
        s.end()
    }
}

impl<'de> Deserialize<'de> for PDDiagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawPd::deserialize(deserializer)?;
        let mut crossings = Vec::with_capacity(raw.crossings.len());
        for t in raw.crossings {
            let arr: [usize; 4] = t
                .clone()
                .try_into()
                .map_err(|_| D::Error::custom(DiagramError::TupleArity(t.len())))?;
            crossings.push(arr);
        }
        let extra = raw
            .extra_circles
            .unwrap_or(usize::from(crossings.is_empty()));
        let mut d = PDDiagram::new(crossings, extra).map_err(D::Error::custom)?;
        d.name = raw.name;
        Ok(d)
    }
}
