//! Two-generator subgroups and single-element invariants.

mod free_product;
mod involution;
mod nonlinear;
mod order;
mod pair;

pub use free_product::{evaluate_word, free_pair_check, free_pair_check_within, FreePairCertificate};
pub use involution::{fix_ifix_split, ia_level, IaLevel};
pub use nonlinear::{nonlinearity_witness, nonlinearity_witness_within, value_at_zero};
pub use order::{diagonalize_elementary, element_order, Diagonalization, ElementOrder};
pub use pair::{classify_pair, PairClass, PairVerdict};
