//! Partitions, compositions, tabloids, permutations and standard tableaux.

mod partition;
mod perm;
mod tableau;
mod tabloid;

pub use partition::{partitions_of, Composition, Partition};
pub use perm::{coxeter_generators, Permutation};
pub use tableau::{hook_length_dimension, standard_tableaux, StandardTableau};
pub use tabloid::{act, enumerate_tabloids, rank, tabloid_count, unrank, Tabloid, TabloidSpace};
