//! Narrow-sense BCH codes of length `n = (q^m - 1)/2` over odd prime-power fields.
//!
//! The crate builds the codes from cyclotomic cosets, identifies them with
//! trace codes of quadratic forms, and derives their weight enumerators from
//! the inner distributions of subsets of the symmetric bilinear forms scheme.
//! Every closed form has a brute-force counterpart in [`oracle`].

pub mod bch;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod oracle;
pub mod poly;
pub mod quadform;
pub mod scheme;
pub mod span;

pub use bch::{
    bch_parameters, bose_distance, full_enumerator, generator_and_dimension, minimal_poly,
    trace_codeword, weight_poly, BchParameters, BchSpec, CodeFamily, CodeFamilySpec, Distance,
    WeightEnumerator,
};
pub use cyclotomic::{delta_formula, Coset, CosetTable};
pub use error::{Error, Result};
pub use field::{BaseElem, BaseField, Elem, FieldContext, FieldParams, Subfield};
pub use poly::Poly;
pub use quadform::{nqb_predict, FormFamily, GramForm, QuadForm, QuadFormSpec, RankType, Sign};
pub use scheme::{
    enumerate_inner_dist, part_even_space, part_odd_space, predicted_inner_dist, q2_binom,
    q2_binom_int, tart_even_space, tart_odd_space, InnerDistribution,
};
