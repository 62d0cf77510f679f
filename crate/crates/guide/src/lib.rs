//! Doctest bridge for the book.
//!
//! mdBook renders `book/src`, but it does not run the Rust snippets. This
//! crate includes every chapter as module documentation, so `cargo test`
//! executes each code block as a doctest against the real `logbm` API. One
//! module per chapter keeps failures attributable to their chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-numbers.md")]
pub mod exact_numbers {}

#[doc = include_str!("../../../book/src/polytopes.md")]
pub mod polytopes {}

#[doc = include_str!("../../../book/src/bodies.md")]
pub mod bodies {}

#[doc = include_str!("../../../book/src/surface-functionals.md")]
pub mod surface_functionals {}

#[doc = include_str!("../../../book/src/mixed-volumes.md")]
pub mod mixed_volumes {}

#[doc = include_str!("../../../book/src/checks.md")]
pub mod checks {}

#[doc = include_str!("../../../book/src/campaigns.md")]
pub mod campaigns {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../book/src/formats.md")]
pub mod formats {}
