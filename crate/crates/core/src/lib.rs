//! Power graphs of finite groups and their line-graph classification.
//!
//! The crate builds finite groups as validated Cayley tables, derives their
//! power graphs (full, deleted, proper), decides the line-graph property by
//! two independent algorithms (forbidden induced patterns and Krausz clique
//! partitions), reconstructs root graphs, and sweeps a catalog of groups to
//! machine-check the classification statements the predicates implement.

pub mod arith;
pub mod bits;
pub mod classify;
pub mod error;
pub mod graph;
pub mod group;
pub mod iso;
pub mod line;
pub mod patterns;
pub mod power;

pub use classify::{
    claw_free_cyclic_predicate, cyclic_partition_check, default_catalog,
    gamma2_free_cyclic_predicate, predict_power_line, predict_proper_dihedral, predict_proper_line,
    predict_proper_quaternion, verify_sweep, CatalogEntry, SweepOptions, SweepReport, TheoremId,
    TheoremPrediction,
};
pub use error::{GraphError, GroupError};
pub use graph::SimpleGraph;
pub use group::{
    direct_product, make_abelian, make_cyclic, make_dihedral, make_generalized_quaternion,
    make_heisenberg, make_modular_maximal_cyclic, Family, FiniteGroup, SubgroupSet,
    DEFAULT_ORDER_CAP,
};
pub use iso::{contains_induced, is_isomorphic, ISO_CAP};
pub use line::{
    beineke_catalog_selftest, is_line_graph_forbidden, krausz_recognize, line_graph, root_graph,
    ForbiddenVerdict, ForbiddenWitness, KrauszPartition, RootGraphResult, DEFAULT_PATTERN_CAP,
};
pub use patterns::{beineke_patterns, Pattern};
pub use power::{
    deleted_power_graph, power_graph, predicted_dominating, proper_power_graph, PowerGraphBundle,
};

pub use arith::euler_phi;
