//! Exact computations with positive representations of finite groups on ℝⁿ.

pub mod error;
pub mod exact;
pub mod group;
pub mod imprimitivity;
pub mod induction;
pub mod gspace;
pub mod matrix;
pub mod perm;
pub mod posrep;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use exact::ExactPositive;
pub use group::{CosetSpace, PermGroup, Subgroup, DEFAULT_CAP};
pub use gspace::GSpace;
pub use perm::Permutation;
pub use imprimitivity::{
    all_block_systems, induction_from_imprimitivity, is_primitive, primitive_chain, BlockConvention,
    BlockSystem,
};
pub use induction::{
    direct_sum, frobenius_table, induce, multiplicity, restrict, stages_check, FrobeniusTable,
    Induced, InducedBasis,
};
pub use posrep::{Multiplier, PosAut, PosRep};
pub use structure::{
    character, decompose, factor, is_irreducible, linear_equivalent, order_dual,
    order_equivalent, Character, Decomposition, Factorization, Summand,
};
