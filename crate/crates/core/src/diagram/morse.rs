//! Morse event lists: sweep presentations of diagrams for the planar
//! dynamic-programming bracket engine, plus blackboard-framing cables.
//!
//! A presentation is read bottom to top. The boundary of the swept region is
//! an ordered row of strand endpoints; `Cup(p)` inserts two joined endpoints
//! at position `p`, `Cap(p)` joins the endpoints at `p` and `p+1`, and a
//! crossing event replaces the strands at `p`, `p+1` by a crossing.
//! `CrossPos` is the crossing whose vertical smoothing keeps both strands
//! uncrossed (its lower-left to upper-right strand is the over-strand); it is
//! the image of the positive braid generator. `CrossNeg` is its mirror.

use super::ports::PortGraph;
use super::PDDiagram;
use crate::error::DiagramError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorseEvent {
    Cup(usize),
    Cap(usize),
    CrossPos(usize),
    CrossNeg(usize),
}

impl MorseEvent {
    pub fn position(&self) -> usize {
        match *self {
            MorseEvent::Cup(p)
            | MorseEvent::Cap(p)
            | MorseEvent::CrossPos(p)
            | MorseEvent::CrossNeg(p) => p,
        }
    }

    pub fn is_crossing(&self) -> bool {
        matches!(self, MorseEvent::CrossPos(_) | MorseEvent::CrossNeg(_))
    }
}

/// An ordered event list whose width profile starts and ends at zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MorsePresentation {
    events: Vec<MorseEvent>,
}

impl MorsePresentation {
    /// Validate event positions against the running width.
    pub fn new(events: Vec<MorseEvent>) -> Result<Self, DiagramError> {
        let mut width = 0usize;
        for ev in &events {
            let ok = match *ev {
                MorseEvent::Cup(p) => p <= width,
                MorseEvent::Cap(p) | MorseEvent::CrossPos(p) | MorseEvent::CrossNeg(p) => {
                    p + 2 <= width
                }
            };
            if !ok {
                return Err(DiagramError::PdJson(format!(
                    "morse event {ev:?} out of range at width {width}"
                )));
            }
            match ev {
                MorseEvent::Cup(_) => width += 2,
                MorseEvent::Cap(_) => width -= 2,
                _ => {}
            }
        }
        if width != 0 {
            return Err(DiagramError::PdJson(format!(
                "morse presentation leaves {width} strands open"
            )));
        }
        Ok(MorsePresentation { events })
    }

    /// The empty presentation (the empty diagram).
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn events(&self) -> &[MorseEvent] {
        &self.events
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| e.is_crossing()).count()
    }

    /// Peak boundary width over the sweep.
    pub fn max_width(&self) -> usize {
        let mut width = 0usize;
        let mut max = 0;
        for ev in &self.events {
            match ev {
                MorseEvent::Cup(_) => {
                    width += 2;
                    max = max.max(width);
                }
                MorseEvent::Cap(_) => width -= 2,
                _ => {}
            }
        }
        max
    }

    /// Swap the two crossing types; the bracket of the mirror is the bracket
    /// with `A ↦ A⁻¹`.
    pub fn mirror(&self) -> Self {
        MorsePresentation {
            events: self
                .events
                .iter()
                .map(|ev| match *ev {
                    MorseEvent::CrossPos(p) => MorseEvent::CrossNeg(p),
                    MorseEvent::CrossNeg(p) => MorseEvent::CrossPos(p),
                    other => other,
                })
                .collect(),
        }
    }

    /// The blackboard-framed cable: `m` parallel copies. Cups and caps nest
    /// `m` deep and every crossing becomes an `m × m` grid of crossings of
    /// the same type; the crossing count multiplies by `m²`.
    pub fn cable(&self, m: usize) -> MorsePresentation {
        assert!(m >= 1, "cable takes at least one copy");
        if m == 1 {
            return self.clone();
        }
        let mut events = Vec::with_capacity(self.events.len() * m * m);
        for ev in &self.events {
            match *ev {
                MorseEvent::Cup(p) => {
                    for i in 0..m {
                        events.push(MorseEvent::Cup(p * m + i));
                    }
                }
                MorseEvent::Cap(p) => {
                    for i in (0..m).rev() {
                        events.push(MorseEvent::Cap(p * m + i));
                    }
                }
                MorseEvent::CrossPos(p) | MorseEvent::CrossNeg(p) => {
                    let make = |q: usize| match *ev {
                        MorseEvent::CrossPos(_) => MorseEvent::CrossPos(q),
                        _ => MorseEvent::CrossNeg(q),
                    };
                    // Pass the right block across the left block strand by
                    // strand; copies of the same strand never cross.
                    for i in 0..m {
                        for jd in 0..m {
                            events.push(make(p * m + (m - 1 - i) + jd));
                        }
                    }
                }
            }
        }
        MorsePresentation { events }
    }

    /// Number of link components swept out by the events.
    pub fn component_count(&self) -> usize {
        let (graph_opt, extra, _) = self.port_structure();
        match graph_opt {
            None => extra,
            Some(graph) => graph.assemble(&[], extra).stats().components,
        }
    }

    /// Round-trip to a PD code. Each component is oriented to run through
    /// its earliest cup from the left arm to the right arm; the nested cups
    /// of a cabled presentation then orient all parallel copies the same
    /// way, so cabling multiplies the writhe by `m²` exactly.
    /// Errors on the empty presentation.
    pub fn to_pd(&self) -> Result<PDDiagram, DiagramError> {
        let (graph_opt, extra, seeds) = self.port_structure();
        match graph_opt {
            None if extra == 0 => Err(DiagramError::EmptyDiagram),
            None => Ok(PDDiagram::new(Vec::new(), extra)?),
            Some(graph) => Ok(graph.assemble(&seeds, extra)),
        }
    }

    /// CCW port ids (ll, lr, ur, ul) of crossing event number `x`, matching
    /// the port layout used by `port_structure`.
    fn port_ids(&self, x: usize) -> (u32, u32, u32, u32) {
        let mut count = 0usize;
        for ev in &self.events {
            if ev.is_crossing() {
                if count == x {
                    let base = 4 * x as u32;
                    return match ev {
                        // CrossPos: under-strand is lower-right to upper-left.
                        MorseEvent::CrossPos(_) => (base + 3, base, base + 1, base + 2),
                        _ => (base, base + 1, base + 2, base + 3),
                    };
                }
                count += 1;
            }
        }
        unreachable!("crossing index in range")
    }

    /// Build the port graph of the swept diagram. Returns the graph (when
    /// there is at least one crossing), the count of crossing-free circles,
    /// and orientation seeds: the entry port of the arc containing each
    /// component's earliest cup, directed left arm to right arm.
    fn port_structure(&self) -> (Option<PortGraph>, usize, Vec<u32>) {
        let c = self.crossing_count();
        let mut graph = PortGraph::new(c);
        // Open strand ends; `partner[e]` is the far end of the open segment,
        // which is `e` itself for a zero-length segment out of a port.
        let port_count = 4 * c;
        let mut partner: Vec<u32> = (0..port_count as u32).collect();
        // Direction of the segment, kept in sync at both ends:
        // (anchor cup id, whether this end is the head the flow runs into).
        let mut info: Vec<Option<(u32, bool)>> = vec![None; port_count];
        let mut frontier: Vec<u32> = Vec::new();
        let mut extra = 0usize;
        let mut crossing = 0usize;
        let mut cup_id = 0u32;

        for ev in &self.events {
            match *ev {
                MorseEvent::Cup(p) => {
                    let (a, b) = (partner.len() as u32, partner.len() as u32 + 1);
                    partner.push(b);
                    partner.push(a);
                    // flow runs down the left arm and up the right arm
                    info.push(Some((cup_id, false)));
                    info.push(Some((cup_id, true)));
                    cup_id += 1;
                    frontier.insert(p, a);
                    frontier.insert(p + 1, b);
                }
                MorseEvent::Cap(p) => {
                    let u = frontier.remove(p);
                    let v = frontier.remove(p);
                    if partner[u as usize] == v {
                        extra += 1; // a circle with no crossings closed up
                    } else {
                        let (pu, pv) = (partner[u as usize], partner[v as usize]);
                        partner[pu as usize] = pv;
                        partner[pv as usize] = pu;
                        // combined flow: keep the earlier cup's direction
                        match (info[u as usize], info[v as usize]) {
                            (Some((a1, u_head)), Some((a2, _))) if a1 <= a2 => {
                                info[pv as usize] = Some((a1, u_head));
                            }
                            (_, Some((a2, v_head))) => {
                                info[pu as usize] = Some((a2, v_head));
                            }
                            (Some((a1, u_head)), None) => {
                                info[pv as usize] = Some((a1, u_head));
                            }
                            (None, None) => {}
                        }
                    }
                }
                MorseEvent::CrossPos(p) | MorseEvent::CrossNeg(p) => {
                    let (ll, lr, ur, ul) = self.port_ids(crossing);
                    crossing += 1;
                    for (side, target) in [(p, ll), (p + 1, lr)] {
                        let endpoint = frontier[side];
                        let far = partner[endpoint as usize];
                        partner[far as usize] = target;
                        partner[target as usize] = far;
                        info[target as usize] = info[endpoint as usize];
                    }
                    frontier[p] = ul;
                    frontier[p + 1] = ur;
                }
            }
        }
        debug_assert!(frontier.is_empty());
        if c == 0 {
            return (None, extra, Vec::new());
        }
        let mut heads: Vec<(u32, u32)> = Vec::new();
        for port in 0..port_count as u32 {
            let far = partner[port as usize];
            debug_assert!(far < port_count as u32 && far != port);
            if port < far {
                graph.connect(port, far);
            }
            if let Some((anchor, true)) = info[port as usize] {
                heads.push((anchor, port));
            }
        }
        heads.sort_unstable();
        (Some(graph), extra, heads.into_iter().map(|(_, p)| p).collect())
    }
}

/// Greedy sweep of a PD code into a Morse presentation: crossings are placed
/// one at a time, preferring placements that attach the most open arcs, so
/// the boundary stays as narrow as the greedy choice allows. The crossing
/// multiset and component structure are preserved exactly.
pub fn to_morse(d: &PDDiagram) -> MorsePresentation {
    let c = d.crossing_count();
    let mut events: Vec<MorseEvent> = Vec::new();
    let mut frontier: Vec<usize> = Vec::new(); // open arc labels
    let mut placed = vec![false; c];

    // Emit forced caps: adjacent equal labels are the two open ends of one
    // arc and must join each other.
    fn lazy_caps(frontier: &mut Vec<usize>, events: &mut Vec<MorseEvent>) {
        let mut i = 0;
        while i + 1 < frontier.len() {
            if frontier[i] == frontier[i + 1] {
                events.push(MorseEvent::Cap(i));
                frontier.drain(i..=i + 1);
                i = i.saturating_sub(1);
            } else {
                i += 1;
            }
        }
    }

    // A placement: crossing, CCW rotation r (tuple index of the lower-left
    // port), frontier position of the lower-left leg, attachment count.
    struct Placement {
        crossing: usize,
        rotation: usize,
        position: usize,
        attached: usize,
    }

    let find_placement = |x: usize, frontier: &[usize], tuple: &[usize; 4]| -> Option<Placement> {
        let pos: Vec<Option<usize>> = tuple
            .iter()
            .map(|arc| frontier.iter().position(|f| f == arc))
            .collect();
        let attached: Vec<usize> = (0..4).filter(|&i| pos[i].is_some()).collect();
        let j = attached.len();
        if j == 0 {
            return frontier.is_empty().then_some(Placement {
                crossing: x,
                rotation: 0,
                position: 0,
                attached: 0,
            });
        }
        for s in 0..4usize {
            if !(0..j).all(|k| attached.contains(&((s + k) % 4))) {
                continue;
            }
            let q = pos[s]?;
            if j < 4 {
                if (0..j).all(|k| pos[(s + k) % 4] == Some(q + k)) {
                    return Some(Placement {
                        crossing: x,
                        rotation: s,
                        position: q,
                        attached: j,
                    });
                }
            } else if q > 0
                && (0..3).all(|k| pos[(s + k) % 4] == Some(q + k))
                && pos[(s + 3) % 4] == Some(q - 1)
            {
                return Some(Placement {
                    crossing: x,
                    rotation: s,
                    position: q,
                    attached: 4,
                });
            }
        }
        None
    };

    let mut remaining = c;
    while remaining > 0 {
        let mut best: Option<Placement> = None;
        for x in 0..c {
            if placed[x] {
                continue;
            }
            if let Some(p) = find_placement(x, &frontier, &d.crossings()[x]) {
                let better = match &best {
                    None => true,
                    Some(b) => p.attached > b.attached,
                };
                if better {
                    best = Some(p);
                }
            }
        }
        // No contiguous attachment exists (the rest of the diagram lives in
        // a pocket). Hang some crossing from a single open arc; the other
        // duplicated arc ends reunite through forced caps once the pocket
        // clears. The bracket only depends on the crossing-connection
        // structure, which every such realization preserves.
        if best.is_none() {
            'fallback: for x in 0..c {
                if placed[x] {
                    continue;
                }
                for s in 0..4 {
                    let arc = d.crossings()[x][s];
                    if let Some(q) = frontier.iter().position(|&f| f == arc) {
                        best = Some(Placement {
                            crossing: x,
                            rotation: s,
                            position: q,
                            attached: 1,
                        });
                        break 'fallback;
                    }
                }
            }
        }
        // Desperation: expose a crossing without consuming anything. Reached
        // only by codes that are not plausibly planar.
        let p = best.unwrap_or_else(|| Placement {
            crossing: (0..c).find(|&x| !placed[x]).unwrap(),
            rotation: 0,
            position: usize::MAX,
            attached: 0,
        });

        let tuple = d.crossings()[p.crossing];
        let arc = |k: usize| tuple[(p.rotation + k) % 4];
        let is_pos = p.rotation % 2 == 1;
        let cross = |q: usize| {
            if is_pos {
                MorseEvent::CrossPos(q)
            } else {
                MorseEvent::CrossNeg(q)
            }
        };
        match p.attached {
            0 => {
                let n = frontier.len();
                events.push(MorseEvent::Cup(n));
                events.push(MorseEvent::Cup(n));
                events.push(cross(n + 1));
                // exposed, left to right: ll routed left, ul, ur, lr routed right
                frontier.splice(n..n, [arc(0), arc(3), arc(2), arc(1)]);
            }
            1 => {
                let q = p.position;
                events.push(MorseEvent::Cup(q + 1));
                events.push(cross(q));
                frontier.splice(q..=q, [arc(3), arc(2), arc(1)]);
            }
            2 | 3 => {
                let q = p.position;
                events.push(cross(q));
                frontier.splice(q..=q + 1, [arc(3), arc(2)]);
            }
            4 => {
                let q = p.position;
                events.push(cross(q));
                frontier.splice(q..=q + 1, [arc(3), arc(2)]);
            }
            _ => unreachable!(),
        }
        lazy_caps(&mut frontier, &mut events);
        placed[p.crossing] = true;
        remaining -= 1;
    }

    // Anything left open pairs up arc ends that must nest; close inside out.
    while !frontier.is_empty() {
        let before = frontier.len();
        lazy_caps(&mut frontier, &mut events);
        assert!(
            frontier.len() < before,
            "PD code does not close into a planar sweep"
        );
    }

    for _ in 0..d.extra_circles() {
        events.push(MorseEvent::Cup(0));
        events.push(MorseEvent::Cap(0));
    }
    MorsePresentation::new(events).expect("sweep construction keeps widths consistent")
}
