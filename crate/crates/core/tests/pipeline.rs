//! Cross-module properties on randomized diagrams.

use knotslopes::*;
use proptest::prelude::*;

fn arb_braid() -> impl Strategy<Value = BraidWord> {
    (2usize..=4)
        .prop_flat_map(|strands| {
            let letter = (1i32..strands as i32).prop_flat_map(|i| {
                prop_oneof![Just(i), Just(-i)]
            });
            (Just(strands), proptest::collection::vec(letter, 1..=8))
        })
        .prop_map(|(strands, letters)| BraidWord::new(strands, letters).unwrap())
}

/// Replace crossing event `idx` by one of its two smoothings.
fn smoothed(m: &MorsePresentation, idx: usize, vertical: bool) -> MorsePresentation {
    let mut events = Vec::new();
    let mut seen = 0usize;
    for ev in m.events() {
        if ev.is_crossing() {
            if seen == idx {
                seen += 1;
                if vertical {
                    // strands pass straight through: no event
                } else {
                    events.push(MorseEvent::Cap(ev.position()));
                    events.push(MorseEvent::Cup(ev.position()));
                }
                continue;
            }
            seen += 1;
        }
        events.push(*ev);
    }
    MorsePresentation::new(events).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pd_round_trip(b in arb_braid()) {
        let pd = b.to_pd();
        let json = serde_json::to_vec(&pd).unwrap();
        prop_assert_eq!(parse_pd(&json).unwrap(), pd);
    }

    #[test]
    fn braid_closure_invariants(b in arb_braid()) {
        let pd = b.to_pd();
        let stats = pd.stats();
        prop_assert_eq!(stats.crossings, b.letters().len());
        prop_assert_eq!(stats.components, b.closure_components());
        let positives = b.letters().iter().filter(|&&l| l > 0).count();
        prop_assert_eq!(stats.c_plus, positives);
        let m = pd.mirror().stats();
        prop_assert_eq!(m.writhe, -stats.writhe);
        prop_assert_eq!((m.c_plus, m.c_minus), (stats.c_minus, stats.c_plus));
    }

    #[test]
    fn sweep_preserves_counts(b in arb_braid()) {
        let pd = b.to_pd();
        let morse = to_morse(&pd);
        prop_assert_eq!(morse.crossing_count(), pd.crossing_count());
        prop_assert_eq!(morse.component_count(), pd.stats().components);
    }

    #[test]
    fn engine_equivalence(b in arb_braid()) {
        let pd = b.to_pd();
        let naive = bracket_naive(&pd, 16).unwrap();
        let dp = bracket_dp(&to_morse(&pd));
        prop_assert_eq!(naive.poly_delta, dp.poly_delta);
    }

    #[test]
    fn skein_axiom(b in arb_braid(), pick in 0usize..8) {
        let morse = to_morse(&b.to_pd());
        let c = morse.crossing_count();
        let idx = pick % c;
        let is_pos = morse
            .events()
            .iter()
            .filter(|e| e.is_crossing())
            .nth(idx)
            .map(|e| matches!(e, MorseEvent::CrossPos(_)))
            .unwrap();
        let whole = bracket_dp(&morse).poly_delta;
        let vertical = bracket_dp(&smoothed(&morse, idx, true)).poly_delta;
        let turnback = bracket_dp(&smoothed(&morse, idx, false)).poly_delta;
        let (va, ta) = if is_pos { (1, -1) } else { (-1, 1) };
        let expand = &vertical.mul_mono(1, va) + &turnback.mul_mono(1, ta);
        prop_assert_eq!(whole, expand);
    }

    #[test]
    fn state_invariants(b in arb_braid(), mask in any::<u64>()) {
        let pd = b.to_pd();
        let c = pd.crossing_count();
        let state = KauffmanState::from_mask(c, mask);
        let graph = state_graph(&pd, &state);
        prop_assert_eq!(graph.edges.len(), c);
        let circles = resolve(&pd, &state).circle_count();
        for x in 0..c {
            let delta = resolve(&pd, &state.toggled(x)).circle_count() as i64 - circles as i64;
            prop_assert_eq!(delta.abs(), 1);
        }
        let (fa, fb) = is_adequate(&pd);
        prop_assert_eq!(is_adequate(&pd.mirror()), (fb, fa));
        if pd.is_knot() {
            let slope = state_slope(&pd, &state).unwrap();
            prop_assert_eq!(slope.numerator.rem_euclid(2), 0);
            prop_assert_eq!(
                state_slope(&pd, &seifert_state(&pd)).unwrap(),
                Slope::integer(0)
            );
            let (lo, hi) = boundary_slopes(&pd).unwrap();
            prop_assert!(lo.numerator <= 0 && 0 <= hi.numerator);
        }
    }

    #[test]
    fn cable_growth(b in arb_braid(), m in 1usize..=2) {
        let pd = b.to_pd();
        let morse = to_morse(&pd);
        let cabled = morse.cable(m);
        prop_assert_eq!(cabled.crossing_count(), m * m * pd.crossing_count());
        let cabled_pd = cabled.to_pd().unwrap();
        prop_assert_eq!(v_a(&cabled_pd), m * v_a(&pd));
        if pd.is_knot() {
            // the parallel copies carry the knot's signs to every grid block
            prop_assert_eq!(
                cabled_pd.stats().writhe,
                (m * m) as i64 * pd.stats().writhe
            );
        }
        if is_adequate(&pd).0 {
            prop_assert!(is_adequate(&cabled_pd).0);
        }
    }

    #[test]
    fn color_one_is_trivial(b in arb_braid()) {
        let pd = b.to_pd();
        if pd.is_knot() {
            prop_assert_eq!(
                colored_jones(&pd, 1, &JonesOptions::default()).unwrap(),
                LaurentPoly::one()
            );
        }
    }
}

#[test]
fn jones_mirror_small_knots() {
    let opts = JonesOptions::default();
    for word in ["2: 1 1 1", "3: 1 -2 1 -2", "2: 1 1 1 1 1", "3: 1 1 2 2"] {
        let pd = parse_braid(word).unwrap().to_pd();
        if !pd.is_knot() {
            continue;
        }
        for n in 2..=4 {
            let j = colored_jones(&pd, n, &opts).unwrap();
            let jm = colored_jones(&pd.mirror(), n, &opts).unwrap();
            assert_eq!(jm, j.invert_variable(), "{word} n={n}");
        }
    }
}

#[test]
fn degree_law_on_adequate_diagrams() {
    for (input, name) in [
        (parse_braid("2: 1 1 1").unwrap().to_pd(), "trefoil"),
        (parse_braid("3: 1 -2 1 -2").unwrap().to_pd(), "figure8"),
        (parse_braid("2: 1 1 1 1 1").unwrap().to_pd(), "cinquefoil"),
        (pretzel_pd(&[-2, 3, 5]).unwrap(), "pretzel(-2,3,5)"),
        (pretzel_pd(&[3, 3, 3]).unwrap(), "pretzel(3,3,3)"),
    ] {
        let (a_ok, b_ok) = is_adequate(&input);
        let c = input.crossing_count() as i64;
        let circle = bracket_dp(&to_morse(&input)).poly_circle.unwrap();
        let (lo, hi) = circle.degree_bounds().unwrap();
        if a_ok {
            assert_eq!(hi, c + 2 * v_a(&input) as i64 - 2, "{name} max degree");
        }
        if b_ok {
            assert_eq!(lo, -(c + 2 * v_b(&input) as i64 - 2), "{name} min degree");
        }
    }
}

#[test]
fn naive_engine_matches_dp_through_jones() {
    let pd = parse_braid("2: 1 1 1").unwrap().to_pd();
    let dp = jones_table(&pd, 2, &JonesOptions::default()).unwrap();
    let naive = jones_table(
        &pd,
        2,
        &JonesOptions {
            engine: Engine::Naive,
            oracle_bound: 16,
        },
    )
    .unwrap();
    assert_eq!(dp.entries[1].poly, naive.entries[1].poly);
}
