//! Indexing combinatorics: partitions in a rectangle, Young tableaux,
//! permutations and the Bruhat order.

pub mod partition;
pub mod permutation;
pub mod tableau;

pub use partition::{
    binomial, complement, contains, hooks_and_syt_count, partitions_in_box, q_binomial, Partition,
    Rect,
};
pub use permutation::{
    bruhat_leq, compose, perm_from_code, reduced_subwords, reduced_word, Permutation, ReducedWord,
};
pub use tableau::{ssyt_enumerate, Tableau};
