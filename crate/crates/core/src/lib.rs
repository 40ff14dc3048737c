//! k-fold colorings of webs and antiwebs.
//!
//! Closed forms for `χ_k`, explicit optimal colorings, deleted-vertex
//! chromatic numbers, criticality decisions and bound tightness, plus an
//! exact search oracle for small arbitrary graphs that cross-checks them.

pub mod bounds;
pub mod cli;
pub mod coloring;
pub mod criticality;
pub mod error;
pub mod families;
pub mod graph;
pub mod numtheory;
pub mod oracle;

pub use bounds::{bounds_report, strictness_check, BoundsReport, Fraction, StrictnessCheck, Tightness};
pub use coloring::{
    chi_k, color, color_antiweb, color_web, verify_coloring, ColoringDocument, ColoringVerdict, KFoldColoring,
};
pub use criticality::{
    chi_k_antiweb_minus_v, chi_k_minus_v, chi_k_web_minus_v, criticality_gap_bounds, is_chik_critical,
    is_chistar_critical, ChiStarVerdict, CriticalityReport, Witness,
};
pub use error::{Error, Result};
pub use families::{is_web_subgraph, Family, FamilyParams, StableSetSeq};
pub use graph::GenericGraph;
pub use numtheory::{bezout, ceil_div, floor_div, gcd, t_star, BezoutResult, TStar};
pub use oracle::{
    enumerate_maximal_stable_sets, exact_chi_k, exact_chi_k_unrestricted, exact_chi_k_via_lex, exact_coloring,
    OracleLimits, StableSetCatalog,
};
