//! The combinatorial Fukaya products on the immersed curve downstairs, as
//! static data: eight generators with their index and weight, and the
//! stated products with signs. The data is audited against the index law
//! `i(x₀) − Σ i(xⱼ) = r(2 − d) + 2mk` with `r = 3`, `m = 2g − 2`, and
//! against weight additivity, then moved to `Λ(V)` and compared with the
//! transferred structure.

mod audit;
mod error;
mod exterior;
mod table;

pub use audit::{audit, index_audit, pole_order, weight_audit, AuditReport, EntryAudit, IndexAudit, R};
pub use error::FukayaError;
pub use exterior::{
    cross_check, fragment_report, identify_to_exterior, CrossCheck, CrossClause, ExteriorFragment, FragmentReport,
    Identification, WEDGE, WEIGHTS,
};
pub use table::{canonical, checksum, Entry, FukayaBasis, FukayaProductTable, Generator, TABLE_JSON, TABLE_SHA256};
