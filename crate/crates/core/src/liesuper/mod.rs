//! Bracket tables on super spaces: Lie and Leibniz axiom checks, actions,
//! semidirect products and invariant bilinear forms.

mod action;
mod form;
mod table;

pub use action::{check_action, semidirect_product, Representation};
pub use form::{is_quadratic_compatible, supertrace_form, EvenBilinearForm};
pub use table::{
    check_graded, check_leibniz_rule, check_lie, check_super_jacobi, check_super_skew,
    gl_bracket_table, is_lie_superalgebra, jacobiator, leibniz_defect, BracketTable,
};
