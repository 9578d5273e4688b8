//! Amalgams of a rigid cusp group with a knot group, the Z/2 collapses they
//! admit, and the cusp-type verdict table.
mod amalgam;
mod random;
mod verdict;

pub use amalgam::{
    build_amalgam, certified_quotient, collapse_236, h_map_244, Amalgam, AmalgamSpec, CertifiedQuotient, CuspModel,
    GluingDatum, HMap,
};
pub use random::{figure_eight, random_amalgam, random_amalgams, random_knot, DEFAULT_SEED, FIGURE_EIGHT};
pub use verdict::{
    double_cover_cusp_236, double_cover_cusp_244, peripheral_order_profile, verdict, verdict_by_name, verdict_table,
    Check, CuspStatus, CuspVerdict, ExclusionReason,
};
