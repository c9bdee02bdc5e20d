//! Partitions, weights, tableaux and the Mullineux map.

mod mullineux;
mod partition;
mod tableau;
mod weight;

pub use mullineux::{from_symbol, mullineux, mullineux_symbol, SymbolColumn};
pub use partition::{hook_partition, is_hook, partitions_of, Partition};
pub use tableau::{enumerate_standard_tableaux, standard_tableaux_count, Tableau};
pub use weight::{dot_reflect, rho, AffineReflection, Weight};
