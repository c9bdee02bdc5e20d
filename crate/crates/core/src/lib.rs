//! Hook weights for `GL_n` in characteristic `p`: characters, blocks,
//! Jantzen sums, a Specht-module oracle and the resulting block structure.

#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod blocks;
pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod jantzen;
pub mod oracle;
pub mod structure;
pub mod verify;

pub use arith::Prime;
pub use blocks::{block_partition, d_value, same_block, BlockDescriptor};
pub use characters::{
    chi_straighten, hook_simple_character, kostka, max_hook_index, weyl_character, weyl_dimension,
    CharacterElement, WeylCharacterCombination,
};
pub use combinatorics::{hook_partition, mullineux, Partition, Tableau, Weight};
pub use error::{Error, Result};
pub use jantzen::{jantzen_sum, JantzenSum};
