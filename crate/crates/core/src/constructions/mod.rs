//! Builders for group algebras, bicharacter R-matrices, doubles, bicrossed
//! products and the eight-dimensional example `A_C2`.

mod bicharacter;
mod bicrossed;
mod double;
mod group;
mod group_algebra;
mod presented;

pub use bicharacter::{
    bicharacter_r_matrix, bicharacter_r_matrix_unchecked, bicharacters, cyclic_bicharacter, enumerate_qt_group,
    Bicharacter, QtCensusRow, ENUMERATION_CAP,
};
pub use bicrossed::{bicrossed_product, MatchedPair};
pub use double::{double_legs, drinfeld_double};
pub use group::FiniteGroup;
pub use group_algebra::{dual_group_algebra, group_algebra, idempotents};
pub use presented::{a_c2, a_c2_expected_q, a_c2_r_family, skew_primitive_algebra, sweedler, RewriteSystem};
