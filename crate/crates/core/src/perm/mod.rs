//! Permutations, stabilizer chains and permutation groups.

mod chain;
mod fingerprint;
mod group;
mod hom;
mod permutation;

pub use chain::{Level, StabChain};
pub use fingerprint::{fingerprint, StructureFingerprint};
pub use group::{closure_order, subgroup_key, CosetAction, PermGroup, MAX_EXHAUSTIVE, MAX_STREAMED};
pub use hom::{
    extend_homomorphism, subgroup_conjugacy_classes, verify_homomorphism, GenMap, Homomorphism, SubgroupClasses,
};
pub use permutation::Permutation;
