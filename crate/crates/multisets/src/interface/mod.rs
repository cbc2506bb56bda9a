//! File formats, deterministic exports, random inputs, and the verification
//! suite behind the command-line tool.

pub mod files;
pub mod random;
pub mod verify;

pub use files::{
    linear_spine_dot, linear_spine_json, parse_json, poset_json, read_text, realization_json,
    rect_spine_dot, rect_spine_json, render_json, tetra_json, write_text, CompositionFile,
    LinearCompositionFile, Multiset1DFile, Multiset2DFile, MultisetFile, RectCompositionFile,
};
pub use random::{random_multiset2d, RandomMode};
pub use verify::{run_verification, Check, RunReport};
