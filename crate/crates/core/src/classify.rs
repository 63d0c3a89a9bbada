//! Classification predicates for power and proper power graphs, the group
//! catalog, and the sweep harness that checks every predicate against the
//! graph-level line-graph oracles.

use crate::arith::factorize;
use crate::error::GroupError;
use crate::graph::SimpleGraph;
use crate::group::{
    direct_product, make_abelian, make_cyclic, make_dihedral, make_generalized_quaternion,
    make_heisenberg, make_modular_maximal_cyclic, FiniteGroup,
};
use crate::iso::contains_induced;
use crate::line::{is_line_graph_forbidden, krausz_recognize, DEFAULT_PATTERN_CAP};
use crate::patterns::{claw, gamma2};
use crate::power::{predicted_dominating, proper_power_graph};
use serde::Serialize;
use std::fmt::Write as _;
use thiserror::Error;

/// Which classification statement a prediction comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    /// P(G) of a nilpotent group is a line graph iff G is a cyclic p-group.
    PowerLine,
    /// P**(G) of a nilpotent group (non-abelian 2-groups excluded) is a line
    /// graph iff G matches one of the cases (a)-(f).
    ProperLine,
    /// P**(Q_{2^n}) is always a line graph.
    QuaternionProper,
    /// P**(D_n) is a line graph iff n is a power of two.
    DihedralProper,
}

impl TheoremId {
    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::PowerLine => "power",
            TheoremId::ProperLine => "proper",
            TheoremId::QuaternionProper => "quaternion",
            TheoremId::DihedralProper => "dihedral",
        }
    }

    /// The graph the prediction speaks about.
    pub fn target(&self) -> &'static str {
        match self {
            TheoremId::PowerLine => "power",
            _ => "proper",
        }
    }
}

/// A structural prediction: whether the group falls under the theorem's
/// hypothesis, and if so what it predicts for the line-graph property.
#[derive(Debug, Clone)]
pub struct TheoremPrediction {
    pub theorem: TheoremId,
    pub applicable: bool,
    pub predicted_line: Option<bool>,
    pub matched_case: Option<String>,
}

impl TheoremPrediction {
    fn not_applicable(theorem: TheoremId) -> Self {
        TheoremPrediction {
            theorem,
            applicable: false,
            predicted_line: None,
            matched_case: None,
        }
    }

    fn predicted(theorem: TheoremId, line: bool, case: Option<String>) -> Self {
        TheoremPrediction {
            theorem,
            applicable: true,
            predicted_line: Some(line),
            matched_case: case,
        }
    }
}

/// Prediction for P(G): applicable to nilpotent groups; line iff cyclic of
/// prime-power (or trivial) order.
pub fn predict_power_line(g: &FiniteGroup) -> TheoremPrediction {
    if !g.is_nilpotent() {
        return TheoremPrediction::not_applicable(TheoremId::PowerLine);
    }
    TheoremPrediction::predicted(TheoremId::PowerLine, g.is_cyclic_prime_power(), None)
}

/// Prediction for P**(G): applicable to nilpotent groups that are not
/// non-abelian 2-groups; line iff one of the cases (a)-(f) matches:
/// (a) cyclic p-power, (b) Z_pq, (c) Z_2 x Z_4, (d) Z_4 x Z_4,
/// (e) elementary abelian of rank >= 2, (f) non-abelian p-group whose
/// maximal cyclic subgroups partition it (see [`cyclic_partition_check`]).
pub fn predict_proper_line(g: &FiniteGroup) -> TheoremPrediction {
    let non_abelian_2_group = !g.is_abelian() && g.p_group_prime() == Some(2);
    if !g.is_nilpotent() || non_abelian_2_group {
        return TheoremPrediction::not_applicable(TheoremId::ProperLine);
    }
    let case: Option<&str> = if g.is_cyclic_prime_power() {
        Some("a")
    } else if g.is_cyclic() && {
        let f = factorize(g.order());
        f.len() == 2 && f.iter().all(|&(_, e)| e == 1)
    } {
        Some("b")
    } else if g.is_abelian() && g.order() == 8 && g.exponent() == 4 {
        // the only abelian order-8 group of exponent 4 besides Z_8 (cyclic,
        // already matched) is Z_2 x Z_4
        Some("c")
    } else if g.is_abelian()
        && g.order() == 16
        && g.exponent() == 4
        && g.element_orders().iter().filter(|&&o| o == 2).count() == 3
    {
        // exponent 4 with exactly three involutions pins down Z_4 x Z_4
        Some("d")
    } else if g.is_abelian()
        && g.p_group_prime().map(|p| g.exponent() == p) == Some(true)
        && !g.is_cyclic()
    {
        Some("e")
    } else if !g.is_abelian()
        && g.p_group_prime().is_some()
        && cyclic_partition_check(g).map(|c| c.holds).unwrap_or(false)
    {
        Some("f")
    } else {
        None
    };
    TheoremPrediction::predicted(
        TheoremId::ProperLine,
        case.is_some(),
        case.map(|c| c.to_string()),
    )
}

/// Prediction for P**(G) of generalized quaternion groups: always a line
/// graph. Detection is structural, so custom Cayley tables qualify.
pub fn predict_proper_quaternion(g: &FiniteGroup) -> TheoremPrediction {
    if !g.is_generalized_quaternion() {
        return TheoremPrediction::not_applicable(TheoremId::QuaternionProper);
    }
    TheoremPrediction::predicted(
        TheoremId::QuaternionProper,
        true,
        Some(format!("order {}", g.order())),
    )
}

/// Prediction for P**(D_n) (order 2n, n >= 3): a line graph iff n = 2^k.
/// Detection is structural.
pub fn predict_proper_dihedral(g: &FiniteGroup) -> TheoremPrediction {
    match g.dihedral_rotation_count() {
        None => TheoremPrediction::not_applicable(TheoremId::DihedralProper),
        Some(n) => TheoremPrediction::predicted(
            TheoremId::DihedralProper,
            n.is_power_of_two(),
            Some(format!("n={n}")),
        ),
    }
}

/// All predictions that speak about P**(G).
pub fn proper_predictions(g: &FiniteGroup) -> Vec<TheoremPrediction> {
    vec![
        predict_proper_line(g),
        predict_proper_quaternion(g),
        predict_proper_dihedral(g),
    ]
}

/// Witness data for [`cyclic_partition_check`].
#[derive(Debug, Clone)]
pub struct CyclicPartitionWitness {
    /// Whether the maximal cyclic subgroups pairwise intersect trivially and
    /// are counted by the order-p subgroups.
    pub holds: bool,
    /// Orders of the maximal cyclic subgroups, descending.
    pub maximal_cyclic_orders: Vec<usize>,
    /// Number of distinct subgroups of order p.
    pub order_p_subgroups: usize,
}

/// For a p-group: true iff the maximal cyclic subgroups pairwise intersect
/// in the identity alone and their number equals the number of subgroups of
/// order p. Exactly the condition of case (f).
pub fn cyclic_partition_check(g: &FiniteGroup) -> Result<CyclicPartitionWitness, GroupError> {
    let p = g.p_group_prime().ok_or_else(|| {
        GroupError::InvalidParameter("cyclic partition check needs a p-group".into())
    })?;
    let maximal = g.maximal_cyclic_subgroups();
    let mut orders: Vec<usize> = maximal.iter().map(|s| s.len()).collect();
    orders.sort_unstable_by(|a, b| b.cmp(a));
    let pairwise_trivial = (0..maximal.len()).all(|i| {
        (i + 1..maximal.len())
            .all(|j| crate::bits::and_count(maximal[i].mask(), maximal[j].mask()) == 1)
    });
    let p_elements = g.element_orders().iter().filter(|&&o| o == p).count();
    let order_p_subgroups = p_elements / (p - 1);
    Ok(CyclicPartitionWitness {
        holds: pairwise_trivial && maximal.len() == order_p_subgroups,
        maximal_cyclic_orders: orders,
        order_p_subgroups,
    })
}

/// Factorization-shape predicate: P**(Z_n) is claw-free iff n has shape
/// p^t, pqr, p^2 q^2 or p^t q.
pub fn claw_free_cyclic_predicate(n: usize) -> bool {
    assert!(n >= 1);
    let f = factorize(n);
    match f.len() {
        0 | 1 => true,
        2 => {
            let (a, b) = (f[0].1, f[1].1);
            a == 1 || b == 1 || (a == 2 && b == 2)
        }
        3 => f.iter().all(|&(_, e)| e == 1),
        _ => false,
    }
}

/// Factorization-shape predicate: P**(Z_n) is free of the K_5-minus-an-edge
/// pattern iff n has shape p^t or pq, or n is 12 or 18.
pub fn gamma2_free_cyclic_predicate(n: usize) -> bool {
    assert!(n >= 1);
    if n == 12 || n == 18 {
        return true;
    }
    let f = factorize(n);
    match f.len() {
        0 | 1 => true,
        2 => f.iter().all(|&(_, e)| e == 1),
        _ => false,
    }
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

/// A named group in the verification catalog.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: String,
    pub group: FiniteGroup,
}

impl CatalogEntry {
    fn new(group: FiniteGroup) -> Self {
        CatalogEntry {
            id: group.family().to_string(),
            group,
        }
    }
}

fn partitions(total: u32) -> Vec<Vec<u32>> {
    fn rec(total: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if total == 0 {
            out.push(prefix.clone());
            return;
        }
        let top = max.min(total);
        for part in (1..=top).rev() {
            prefix.push(part);
            rec(total - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, total, &mut Vec::new(), &mut out);
    out
}

/// Every abelian group of order `1..=max_order`, one entry per isomorphism
/// class, built from the partition of each prime's exponent. Cyclic classes
/// come out as plain cyclic groups.
pub fn abelian_catalog(max_order: usize) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        let f = factorize(n);
        // per-prime partition choices
        let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
        for &(p, a) in &f {
            let parts = partitions(a);
            let mut next = Vec::new();
            for combo in &combos {
                for parts_choice in &parts {
                    let mut c = combo.clone();
                    c.extend(parts_choice.iter().map(|&e| p.pow(e)));
                    next.push(c);
                }
            }
            combos = next;
        }
        for factors in combos {
            let is_cyclic_class = factors.len() == f.len();
            let group = if is_cyclic_class {
                make_cyclic(n).expect("n is within cap")
            } else {
                make_abelian(&factors).expect("n is within cap")
            };
            out.push(CatalogEntry::new(group));
        }
    }
    out
}

/// The default verification catalog: all abelian groups of order <= max,
/// the dihedral groups D_3..D_32, the generalized quaternion groups up to
/// order 64, the two order-27 non-abelian groups, Heisenberg(5) as the big
/// exponent-p case (order 125, Krausz oracle only), and two direct-product
/// stress cases built on Q_8.
pub fn default_catalog(max_order: usize) -> Vec<CatalogEntry> {
    let mut out = abelian_catalog(max_order);
    for n in 3..=32usize.min(max_order / 2) {
        out.push(CatalogEntry::new(make_dihedral(n).unwrap()));
    }
    let mut n = 3;
    while 1usize << n <= max_order {
        out.push(CatalogEntry::new(make_generalized_quaternion(n).unwrap()));
        n += 1;
    }
    if max_order >= 27 {
        out.push(CatalogEntry::new(make_heisenberg(3).unwrap()));
        out.push(CatalogEntry::new(make_modular_maximal_cyclic(3).unwrap()));
    }
    if max_order >= 64 {
        out.push(CatalogEntry::new(make_heisenberg(5).unwrap()));
    }
    if max_order >= 16 {
        let q8 = make_generalized_quaternion(3).unwrap();
        out.push(CatalogEntry::new(
            direct_product(&make_cyclic(2).unwrap(), &q8).unwrap(),
        ));
        if max_order >= 24 {
            out.push(CatalogEntry::new(
                direct_product(&make_cyclic(3).unwrap(), &q8).unwrap(),
            ));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Sweep
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct SweepOptions {
    /// Vertex ceiling for the forbidden-pattern oracle; larger graphs fall
    /// back to the Krausz recognizer alone.
    pub pattern_cap: usize,
    /// Worker threads; 1 runs serially.
    pub jobs: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            pattern_cap: DEFAULT_PATTERN_CAP,
            jobs: 1,
        }
    }
}

/// The two recognition algorithms split on a graph. This is always a bug in
/// one of them, never a property of the group, so the sweep aborts and dumps
/// everything needed to replay the instance.
#[derive(Debug, Error)]
#[error("line-graph oracles disagree on {target} graph of {group_id}:\n{artifacts}")]
pub struct OracleSplit {
    pub group_id: String,
    pub target: String,
    pub artifacts: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessRecord {
    pub pattern: String,
    /// Element labels of the witness vertices.
    pub vertices: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleRecord {
    pub vertices: usize,
    pub edges: usize,
    pub is_line: bool,
    /// False when the graph was over the pattern cap and only Krausz ran.
    pub forbidden_ran: bool,
    pub witness: Option<WitnessRecord>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PredictionRecord {
    pub theorem: String,
    pub target: String,
    pub applicable: bool,
    pub predicted: Option<bool>,
    pub matched_case: Option<String>,
    pub agree: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PredicateRecord {
    pub predicate: bool,
    pub oracle_free: bool,
    pub agree: bool,
}

/// One catalog group's verification results.
#[derive(Debug, Clone, Serialize)]
pub struct GroupRecord {
    pub id: String,
    pub family: String,
    pub order: usize,
    pub nilpotent: bool,
    pub power_complete: bool,
    pub power_complete_expected: bool,
    pub complete_agree: bool,
    pub dominating_predicted: Vec<String>,
    pub dominating_actual: Vec<String>,
    pub dominating_agree: bool,
    pub power: OracleRecord,
    pub proper: OracleRecord,
    pub predictions: Vec<PredictionRecord>,
    pub claw_free: Option<PredicateRecord>,
    pub gamma2_free: Option<PredicateRecord>,
    pub agree: bool,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub records: Vec<GroupRecord>,
    pub all_agree: bool,
}

impl SweepReport {
    /// One JSON object per line, in report order.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    /// Text table with one row per applicable theorem prediction.
    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<28} {:>5} {:<10} {:>9} {:>6} {:>6}",
            "group", "order", "theorem", "predicted", "oracle", "agree"
        );
        for r in &self.records {
            let applicable: Vec<&PredictionRecord> =
                r.predictions.iter().filter(|p| p.applicable).collect();
            if applicable.is_empty() {
                let _ = writeln!(
                    out,
                    "{:<28} {:>5} {:<10} {:>9} {:>6} {:>6}",
                    r.id, r.order, "-", "-", r.proper.is_line, r.agree
                );
            }
            for p in applicable {
                let oracle = if p.target == "power" {
                    r.power.is_line
                } else {
                    r.proper.is_line
                };
                let _ = writeln!(
                    out,
                    "{:<28} {:>5} {:<10} {:>9} {:>6} {:>6}",
                    r.id,
                    r.order,
                    p.theorem,
                    p.predicted.map(|b| b.to_string()).unwrap_or_default(),
                    oracle,
                    p.agree.unwrap_or(true)
                );
            }
        }
        let _ = writeln!(
            out,
            "{} groups, all agree: {}",
            self.records.len(),
            self.all_agree
        );
        out
    }
}

/// Runs both line-graph oracles on one graph and insists they agree.
fn dual_oracle(
    graph: &SimpleGraph,
    group_id: &str,
    target: &str,
    pattern_cap: usize,
) -> Result<OracleRecord, OracleSplit> {
    // over the pattern cap the forbidden search refuses and Krausz decides
    let forbidden = is_line_graph_forbidden(graph, pattern_cap).ok();
    let partition = krausz_recognize(graph);
    let krausz_line = partition.is_some();
    if let Some(f) = &forbidden {
        if f.is_line != krausz_line {
            let mut artifacts = String::new();
            let _ = writeln!(artifacts, "edge list:\n{}", graph.to_edge_list());
            let _ = writeln!(
                artifacts,
                "forbidden verdict: {} witness: {:?}",
                f.is_line, f.witness
            );
            let _ = writeln!(
                artifacts,
                "krausz verdict: {krausz_line} cells: {:?}",
                partition.map(|p| p.cells)
            );
            return Err(OracleSplit {
                group_id: group_id.to_string(),
                target: target.to_string(),
                artifacts,
            });
        }
    }
    let witness = forbidden.as_ref().and_then(|f| {
        f.witness.as_ref().map(|w| WitnessRecord {
            pattern: w.pattern.clone(),
            vertices: w
                .vertices
                .iter()
                .map(|&v| graph.label(v).to_string())
                .collect(),
        })
    });
    Ok(OracleRecord {
        vertices: graph.n(),
        edges: graph.edge_count(),
        is_line: krausz_line,
        forbidden_ran: forbidden.is_some(),
        witness,
    })
}

fn examine_group(entry: &CatalogEntry, opts: &SweepOptions) -> Result<GroupRecord, OracleSplit> {
    let g = &entry.group;
    let bundle = proper_power_graph(g);

    let power_complete = bundle.full.is_complete();
    let power_complete_expected = g.is_cyclic_prime_power();

    let dominating_actual: Vec<String> = bundle
        .dominating
        .iter()
        .map(|&x| g.label(x).to_string())
        .collect();
    let predicted = predicted_dominating(g);
    let dominating_predicted: Vec<String> =
        predicted.iter().map(|&x| g.label(x).to_string()).collect();
    let dominating_agree = predicted == bundle.dominating;

    let power = dual_oracle(&bundle.full, &entry.id, "power", opts.pattern_cap)?;
    let proper = dual_oracle(&bundle.proper, &entry.id, "proper", opts.pattern_cap)?;

    let mut predictions = Vec::new();
    let mut push = |p: TheoremPrediction, oracle_line: bool| {
        let agree = p.predicted_line.map(|pred| pred == oracle_line);
        predictions.push(PredictionRecord {
            theorem: p.theorem.as_str().to_string(),
            target: p.theorem.target().to_string(),
            applicable: p.applicable,
            predicted: p.predicted_line,
            matched_case: p.matched_case,
            agree,
        });
    };
    push(predict_power_line(g), power.is_line);
    for p in proper_predictions(g) {
        push(p, proper.is_line);
    }

    let (claw_free, gamma2_free) = if g.is_cyclic() {
        let claw_hit = contains_induced(&bundle.proper, claw()).expect("claw is small");
        let g2_hit = contains_induced(&bundle.proper, gamma2()).expect("pattern is small");
        let cf = PredicateRecord {
            predicate: claw_free_cyclic_predicate(g.order()),
            oracle_free: claw_hit.is_none(),
            agree: claw_free_cyclic_predicate(g.order()) == claw_hit.is_none(),
        };
        let gf = PredicateRecord {
            predicate: gamma2_free_cyclic_predicate(g.order()),
            oracle_free: g2_hit.is_none(),
            agree: gamma2_free_cyclic_predicate(g.order()) == g2_hit.is_none(),
        };
        (Some(cf), Some(gf))
    } else {
        (None, None)
    };

    let complete_agree = power_complete == power_complete_expected;
    let agree = complete_agree
        && dominating_agree
        && predictions.iter().all(|p| p.agree.unwrap_or(true))
        && claw_free.as_ref().map(|c| c.agree).unwrap_or(true)
        && gamma2_free.as_ref().map(|c| c.agree).unwrap_or(true);

    Ok(GroupRecord {
        id: entry.id.clone(),
        family: g.family().to_string(),
        order: g.order(),
        nilpotent: g.is_nilpotent(),
        power_complete,
        power_complete_expected,
        complete_agree,
        dominating_predicted,
        dominating_actual,
        dominating_agree,
        power,
        proper,
        predictions,
        claw_free,
        gamma2_free,
        agree,
    })
}

/// Runs the full verification pipeline over a catalog. Any Beineke/Krausz
/// split aborts the sweep; theorem disagreements are recorded per group and
/// surface in `all_agree`.
pub fn verify_sweep(
    catalog: &[CatalogEntry],
    opts: &SweepOptions,
) -> Result<SweepReport, OracleSplit> {
    let results: Vec<Result<GroupRecord, OracleSplit>> = if opts.jobs == 1 {
        catalog.iter().map(|e| examine_group(e, opts)).collect()
    } else {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| catalog.par_iter().map(|e| examine_group(e, opts)).collect())
    };
    let mut records = Vec::with_capacity(results.len());
    for r in results {
        records.push(r?);
    }
    records.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.id.cmp(&b.id)));
    let all_agree = records.iter().all(|r| r.agree);
    Ok(SweepReport { records, all_agree })
}
