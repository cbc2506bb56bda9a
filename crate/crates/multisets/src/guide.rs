//! The narrative guide, embedded chapter by chapter from `book/src` so that
//! `cargo test --doc` compiles and runs every code snippet in the book.
//! Keep this list in sync with `book/src/SUMMARY.md`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/permutations.md")]
pub mod permutations {}

#[doc = include_str!("../../../book/src/intervals.md")]
pub mod intervals {}

#[doc = include_str!("../../../book/src/rectangles.md")]
pub mod rectangles {}

#[doc = include_str!("../../../book/src/complexes.md")]
pub mod complexes {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
