// Every chapter of the guide becomes a module whose docs are the chapter, so
// `cargo test --doc` runs the snippets in the book.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}
#[doc = include_str!("../../../book/src/fields.md")]
mod fields {}
#[doc = include_str!("../../../book/src/q-polynomials.md")]
mod q_polynomials {}
#[doc = include_str!("../../../book/src/sum-rank.md")]
mod sum_rank {}
#[doc = include_str!("../../../book/src/constructions.md")]
mod constructions {}
#[doc = include_str!("../../../book/src/bounds.md")]
mod bounds {}
#[doc = include_str!("../../../book/src/tables.md")]
mod tables {}
#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}
#[doc = include_str!("../../../book/src/formats.md")]
mod formats {}
#[doc = include_str!("../../../README.md")]
mod readme {}
