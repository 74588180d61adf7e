//! Crosscap numbers and genera of 2-bridge knots `S(q,p)`, computed from
//! shortest subtractive continued fraction expansions of `p/q`.
//!
//! ```
//! use crosscap::{crosscap, genus, KnotId};
//!
//! let k = KnotId::new(15, 4).unwrap(); // 7_4
//! assert_eq!(crosscap(&k), 3);
//! assert_eq!(genus(&k), 1);
//! ```

pub mod conway;
pub mod error;
pub mod expansion;
pub mod invariants;
pub mod knot;
pub mod modular;
pub mod parse;
pub mod rational;
pub mod reducer;
pub mod table;

pub use conway::{
    conway_diagram, odd_shortest_expansion, verify_diagram, ConwayDiagram, DiagramVerdict,
};
pub use error::{
    DomainError, KnotError, LookupError, NotFound, ParseError, PatternMismatch, RationalError,
    TableError,
};
pub use expansion::{alternating_sign_convert, AdditiveExpansion, Expansion, Sign};
pub use invariants::{
    boundary_classification, crosscap, even_expansion, family_k_mn, gamma_equals_2g_plus_1, genus,
    plumbing_surface, BoundaryClass, InvariantReport, PlumbingSurface,
};
pub use knot::{same_knot, KnotId};
pub use modular::{
    all_shortest_expansions, brute_force_min_length, depth, farey_parents, is_shortest,
    rectangle_move, ShortestSet,
};
pub use parse::{format_expansion, format_fraction, parse_expansion, parse_fraction};
pub use rational::{mod_inverse, ExtendedRational};
pub use reducer::{apply_rule, reduce, reduce_with, ReductionStep, ReductionTrace, Rule};
pub use table::{load_table, lookup, verify_table, KnotRecord, Lookup, TableReport};
