//! Partitions, Young tableaux and permutations in word form.
//!
//! Tableaux store their rows top to bottom; cell coordinates passed to the
//! API are zero-based `(row, column)` pairs, while tableau entries and word
//! letters are the positive integers they represent.

mod partition;
mod tableau;
mod word;

pub use partition::Partition;
pub use tableau::{RemovalOrder, Tableau};
pub use word::{permutations, WordPerm};
