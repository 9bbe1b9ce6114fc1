//! Finite racks and iracks, their tuple extensions, tangled relations and
//! braid evaluation.
//!
//! Tables are checked once on construction; [`IrackTable`] and [`RackTable`]
//! values always satisfy their axioms. Law checks return a [`CheckReport`]
//! carrying the number of instances examined and, for a failing law, the
//! first counterexample in lexicographic order.

pub mod belt;
pub mod braid;
pub mod carrier;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod irack;
pub mod lemmas;
pub mod rack;
pub mod relation;
pub mod report;
mod table;
pub mod tangled;
pub mod text;
pub mod tuple;
pub mod tuple_laws;

pub use belt::{belt_probes, belt_trick, close_word, distinguish, BeltReport, Closure, Distinction};
pub use braid::{apply_braid, eval_braid, torsion, BraidWord, Letter};
pub use carrier::{Carrier, Elem};
pub use enumerate::{
    canonical_irack, canonical_rack, enumerate_iracks, enumerate_racks, saturate_to_tangled, EnumerationResult,
    MAX_ORDER,
};
pub use error::{
    AlgebraError, BraidError, CarrierError, EnumerateError, MalformedTable, ParseError, RelationError, SaturateError,
};
pub use group::{cyclic_group, irack_from_group, symmetric_group, GroupTable};
pub use irack::{
    builtin_example_irack, check_irack_axioms, dual_irack, rack_from_irack, trivial_irack, IrackTable, RawIrackTable,
};
pub use lemmas::{check_lemmas, check_lemmas_unvalidated};
pub use rack::{check_rack_axioms, RackTable, RawRackTable};
pub use relation::{compose, identity_relation, tensor, Relation, MATERIALIZATION_CAP};
pub use report::{relation_equality, CheckReport, LawEntry, Status, Value, Witness};
pub use tangled::{
    braiding, braiding_inverse, check_braiding, check_tangle_algebra, epsilon, eta, is_tangled, TangledRelation,
};
pub use tuple::{TupleSpace, TupleVal};
pub use tuple_laws::{check_tuple_irack, check_tuple_rack, TupleCheckConfig};
