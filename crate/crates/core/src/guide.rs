//! Runs the book's code blocks as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}
#[doc = include_str!("../../../book/src/games.md")]
mod games {}
#[doc = include_str!("../../../book/src/reduction.md")]
mod reduction {}
#[doc = include_str!("../../../book/src/solving.md")]
mod solving {}
#[doc = include_str!("../../../book/src/lifting.md")]
mod lifting {}
#[doc = include_str!("../../../book/src/benchmarking.md")]
mod benchmarking {}
