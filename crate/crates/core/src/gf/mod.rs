//! Finite-field tower arithmetic and dense linear algebra.

mod embed;
mod field;
mod matrix;
pub mod poly;
pub mod prime;
mod tower;

pub use embed::Embedding;
pub use field::{Field, SIZE_LIMIT, TABLE_LIMIT};
pub(crate) use matrix::echelon_rank;
pub use matrix::{rank_of_rows, Matrix};
pub use tower::{Felem, FieldTower, Level};
