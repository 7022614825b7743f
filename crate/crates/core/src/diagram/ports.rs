//! Internal port-level assembly of PD codes.
//!
//! Generators build crossings as four ports in counterclockwise order, with
//! the under-strand line on ports 0 and 2, and connect ports pairwise with
//! arcs. `assemble` then orients each component, numbers arcs consecutively
//! along the orientation, and emits tuples anchored at the incoming
//! under-strand port.

use super::PDDiagram;

pub(crate) const UNSET: u32 = u32::MAX;

/// Port `4*crossing + k` where `k` is the counterclockwise index and the
/// under-strand occupies `k ∈ {0, 2}`.
pub(crate) struct PortGraph {
    crossing_count: usize,
    mate: Vec<u32>,
}

impl PortGraph {
    pub fn new(crossing_count: usize) -> Self {
        PortGraph {
            crossing_count,
            mate: vec![UNSET; 4 * crossing_count],
        }
    }

    pub fn connect(&mut self, a: u32, b: u32) {
        debug_assert_eq!(self.mate[a as usize], UNSET);
        debug_assert_eq!(self.mate[b as usize], UNSET);
        self.mate[a as usize] = b;
        self.mate[b as usize] = a;
    }

    /// Orient and label the diagram. `seeds` are ports known to be strand
    /// entries, tried in order; components not reached by a seed are entered
    /// at their lowest port.
    pub fn assemble(&self, seeds: &[u32], extra_circles: usize) -> PDDiagram {
        let c = self.crossing_count;
        debug_assert!(self.mate.iter().all(|&m| m != UNSET));

        // A passage is one strand's trip through a crossing: passage
        // 2x + (port & 1) distinguishes the under and over lines.
        let mut passage_done = vec![false; 2 * c];
        let mut arc_label = vec![0usize; 4 * c];
        let mut entered = vec![false; 4 * c];
        let mut next_label = 1usize;

        let traverse = |entry: u32,
                            passage_done: &mut Vec<bool>,
                            arc_label: &mut Vec<usize>,
                            entered: &mut Vec<bool>,
                            next_label: &mut usize| {
            let passage_of = |port: u32| (port as usize / 4) * 2 + (port as usize & 1);
            if passage_done[passage_of(entry)] {
                return;
            }
            let mut cur = entry;
            loop {
                // Label the arc arriving at `cur`, so a component's first
                // arc is the one entering its seed crossing.
                if arc_label[cur as usize] == 0 {
                    arc_label[cur as usize] = *next_label;
                    arc_label[self.mate[cur as usize] as usize] = *next_label;
                    *next_label += 1;
                }
                passage_done[passage_of(cur)] = true;
                entered[cur as usize] = true;
                let exit = (cur & !3) | ((cur + 2) & 3);
                cur = self.mate[exit as usize];
                if cur == entry {
                    break;
                }
            }
        };

        for &seed in seeds {
            traverse(
                seed,
                &mut passage_done,
                &mut arc_label,
                &mut entered,
                &mut next_label,
            );
        }
        for port in 0..4 * c as u32 {
            traverse(
                port,
                &mut passage_done,
                &mut arc_label,
                &mut entered,
                &mut next_label,
            );
        }

        let crossings = (0..c)
            .map(|x| {
                // Exactly one of the under ports 0, 2 is an entry.
                let anchor = if entered[4 * x] {
                    debug_assert!(!entered[4 * x + 2]);
                    0
                } else {
                    debug_assert!(entered[4 * x + 2]);
                    2
                };
                [0, 1, 2, 3].map(|k| arc_label[4 * x + (anchor + k) % 4])
            })
            .collect();

        PDDiagram::new(crossings, extra_circles)
            .expect("port graphs produce valid PD codes by construction")
    }
}
