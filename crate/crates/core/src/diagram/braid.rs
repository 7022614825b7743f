//! Braid words and closed-braid diagrams.

use super::ports::PortGraph;
use super::PDDiagram;
use crate::error::DiagramError;

/// A word in the braid group: letter `i` is the generator crossing strands
/// `i` and `i+1` with the strand entering from the right passing over;
/// `-i` is its inverse. All strands are oriented the same way, so positive
/// letters close up to positive crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, DiagramError> {
        if strands < 1 {
            return Err(DiagramError::BadStrandCount);
        }
        for &l in &letters {
            if l == 0 {
                return Err(DiagramError::ZeroLetter);
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(DiagramError::LetterOutOfRange { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// The underlying permutation: `perm[i]` is where strand position `i`
    /// ends up at the bottom of the braid.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        perm
    }

    /// Components of the closure = cycles of the permutation.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
        cycles
    }

    /// PD code of the closed-braid diagram, arcs numbered along the
    /// orientation with all strands oriented the same way. Strands never
    /// used by the word close into crossing-free circles.
    pub fn to_pd(&self) -> PDDiagram {
        let c = self.letters.len();
        let mut graph = PortGraph::new(c);
        // Geometric corners, as CCW port indices fixed by the crossing sign:
        // positive: [NW, SW, SE, NE]; negative: [NE, NW, SW, SE].
        let corner = |x: usize, letter: i32| -> (u32, u32, u32, u32) {
            let base = 4 * x as u32;
            if letter > 0 {
                (base, base + 3, base + 1, base + 2) // (nw, ne, sw, se)
            } else {
                (base + 1, base, base + 2, base + 3)
            }
        };

        let mut first_top: Vec<Option<u32>> = vec![None; self.strands];
        let mut current: Vec<Option<u32>> = vec![None; self.strands];
        let mut seeds = Vec::with_capacity(2 * c);
        for (x, &l) in self.letters.iter().enumerate() {
            let i = l.unsigned_abs() as usize - 1;
            let (nw, ne, sw, se) = corner(x, l);
            for (pos, top) in [(i, nw), (i + 1, ne)] {
                match current[pos] {
                    Some(open) => graph.connect(open, top),
                    None => first_top[pos] = Some(top),
                }
            }
            current[i] = Some(sw);
            current[i + 1] = Some(se);
            seeds.push(nw);
            seeds.push(ne);
        }
        let mut extra_circles = 0;
        for pos in 0..self.strands {
            match (current[pos], first_top[pos]) {
                (Some(bottom), Some(top)) => graph.connect(bottom, top),
                (None, None) => extra_circles += 1,
                _ => unreachable!("first and last openings appear together"),
            }
        }
        graph.assemble(&seeds, extra_circles)
    }
}

/// Parse the braid text format `"[strands:] i j k ..."`. Without the prefix,
/// the strand count defaults to `1 + max|letter|`.
pub fn parse_braid(text: &str) -> Result<BraidWord, DiagramError> {
    let (strands_part, letters_part) = match text.split_once(':') {
        Some((s, rest)) => (Some(s.trim()), rest),
        None => (None, text),
    };
    let mut letters = Vec::new();
    for tok in letters_part.split_whitespace() {
        let l: i32 = tok
            .parse()
            .map_err(|_| DiagramError::BadBraidToken(tok.to_string()))?;
        letters.push(l);
    }
    let strands = match strands_part {
        Some(s) => s
            .parse::<usize>()
            .map_err(|_| DiagramError::BadBraidToken(s.to_string()))?,
        None => 1 + letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0),
    };
    BraidWord::new(strands, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(
            parse_braid("2: 1 1 1").unwrap(),
            BraidWord::new(2, vec![1, 1, 1]).unwrap()
        );
        assert_eq!(
            parse_braid("1 -2 1 -2").unwrap(),
            BraidWord::new(3, vec![1, -2, 1, -2]).unwrap()
        );
        assert!(matches!(
            parse_braid("2: 3"),
            Err(DiagramError::LetterOutOfRange { .. })
        ));
        assert!(matches!(parse_braid("2: 0"), Err(DiagramError::ZeroLetter)));
        assert!(matches!(
            parse_braid("2: x"),
            Err(DiagramError::BadBraidToken(_))
        ));
    }

    #[test]
    fn trefoil_closure() {
        let pd = parse_braid("2: 1 1 1").unwrap().to_pd();
        let stats = pd.stats();
        assert_eq!(stats.crossings, 3);
        assert_eq!((stats.c_plus, stats.c_minus), (3, 0));
        assert_eq!(stats.writhe, 3);
        assert_eq!(stats.components, 1);
        assert!(pd.is_alternating());
    }

    #[test]
    fn figure8_closure() {
        let pd = parse_braid("3: 1 -2 1 -2").unwrap().to_pd();
        let stats = pd.stats();
        assert_eq!(stats.crossings, 4);
        assert_eq!((stats.c_plus, stats.c_minus), (2, 2));
        assert_eq!(stats.writhe, 0);
        assert_eq!(stats.components, 1);
    }

    #[test]
    fn hopf_components_and_unused_strand() {
        let hopf = parse_braid("2: 1 1").unwrap().to_pd();
        assert_eq!(hopf.stats().components, 2);

        let split = parse_braid("3: 1 1 1").unwrap().to_pd();
        assert_eq!(split.stats().components, 2);
        assert_eq!(split.extra_circles(), 1);

        let unknot = parse_braid("1:").unwrap().to_pd();
        assert_eq!(unknot, PDDiagram::unknot());
    }

    #[test]
    fn stabilized_kink_is_canonical() {
        let kink = parse_braid("2: 1").unwrap().to_pd();
        assert_eq!(kink.crossings(), &[[1, 1, 2, 2]]);
        let neg = parse_braid("2: -1").unwrap().to_pd();
        assert_eq!(neg.crossings(), &[[2, 1, 1, 2]]);
    }

    #[test]
    fn mirror_swaps_signs() {
        let pd = parse_braid("2: 1 1 1").unwrap().to_pd();
        let m = pd.mirror();
        let s = m.stats();
        assert_eq!((s.c_plus, s.c_minus), (0, 3));
        assert_eq!(s.writhe, -3);
    }

    #[test]
    fn round_trip_serialization() {
        let pd = parse_braid("2: 1 1 1").unwrap().to_pd();
        let json = serde_json::to_vec(&pd).unwrap();
        assert_eq!(super::super::parse_pd(&json).unwrap(), pd);
    }
}
