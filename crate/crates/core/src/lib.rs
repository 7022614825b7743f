//! Exact computation of Kauffman states, state-surface boundary slopes, and
//! colored Jones polynomial degree sequences for knot diagrams.
//!
//! The crate is organized bottom-up:
//!
//! - [`laurent`]: sparse exact Laurent polynomial arithmetic over `BigInt`.
//! - [`diagram`]: diagram representations (PD codes, braid words, Morse event
//!   lists), parsers, generators, mirrors, and blackboard-framing cables.
//! - [`states`]: Kauffman states, state circles, state graphs, adequacy, and
//!   state-surface boundary slopes.
//! - [`bracket`]: the Kauffman bracket, via a naive state-sum oracle and a
//!   planar-matching dynamic-programming engine over Morse presentations.
//! - [`jones`]: Chebyshev cabling, colored Jones polynomials, degree
//!   sequences, slope estimation, and the slope verification verdict.
//!
//! All arithmetic is exact; there is no floating point anywhere in the
//! computational path.

pub mod bracket;
pub mod diagram;
pub mod error;
pub mod jones;
pub mod laurent;
pub mod states;

pub use bracket::{
    bracket_combination, bracket_dp, bracket_naive, BracketValue, Engine, EngineTelemetry,
    DEFAULT_ORACLE_BOUND,
};
pub use diagram::{
    parse_braid, parse_pd, pretzel_pd, to_morse, BraidWord, DiagramStats, MorseEvent,
    MorsePresentation, PDDiagram,
};
pub use error::{BracketError, DiagramError, JonesError, LaurentError};
pub use jones::{
    cabled_bracket, chebyshev, colored_jones, default_n_max, jones_table, predict_extreme_degree,
    slope_sequences, verify, ChebyshevExpansion, ColoredJonesTable, GatingSide, JonesEntry,
    JonesOptions, Side, SlopeSequences, Verdict,
};
pub use laurent::LaurentPoly;
pub use states::{
    boundary_slopes, is_adequate, loop_witnesses, resolve, seifert_state, state_graph,
    state_slope, state_stats, v_a, v_b, KauffmanState, Resolution, Slope, StateCircles,
    StateGraph, StateStats,
};

/// Cap rayon's global pool at `threads` worker threads. Results are exact and
/// identical for every thread count; this only bounds resource use.
/// Returns an error message when the pool was already initialized.
pub fn init_thread_pool(threads: usize) -> Result<(), String> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}
