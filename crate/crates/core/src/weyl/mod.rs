//! Weyl groups of types A, B/C and D as signed permutations.

mod element;
mod grassmannian;
mod partition;
mod words;

pub use element::{group_elements, Gen, Kind, WeylElement};
pub use grassmannian::{
    element_a, flag_indices, is_k_grassmannian, k_strict_element, k_strict_shape, longest_a,
    longest_bc, longest_d, longest_for_flag, shape_a, top_k_grassmannian_bc, top_k_grassmannian_d,
    typed_element, typed_shape,
};
pub use partition::{Partition, TypedPartition};
pub use words::{
    compatible_factorizations, factorizations_with, prefixes, reduced_factorizations, reduced_word,
    reduced_words, FlagSequence, Slot, DEFAULT_WORD_CAP,
};
