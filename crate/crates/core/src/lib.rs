//! Exact calculus of coloured set partitions, their tensor-map realization,
//! fusion rules of the associated quantum groups, and free fusion semirings.

pub mod appendix;
pub mod averaging;
pub mod category;
pub mod classify;
pub mod closure;
pub mod colour;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod fusion;
pub mod group;
pub mod linalg;
pub mod partition;
pub mod rep;
pub mod tensor;

pub use category::{Category, CategoryDescriptor, Membership};
pub use classify::{classify, derived_subsets, realize, DerivedSubsets, FusionTriple};
pub use closure::{Closure, OneRow};
pub use colour::{Colour, ColourSet};
pub use diagram::{DiagramElement, Poly};
pub use enumerate::{enumerate, enumerate_coloured, PartitionClass};
pub use error::{Error, Result};
pub use fusion::{Axioms, FusionSet, SemiringElement};
pub use group::FiniteGroup;
pub use partition::{ColouredPartition, Composition, Corner, Partition, PartitionRecord};
pub use rep::{OneBlockClasses, Projective, RepClasses};
pub use tensor::{gram_rank, tp_matrix, verify_functor, TpMatrix};
