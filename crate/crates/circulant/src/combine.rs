//! Composition search: build a large degree-`Δ`, diameter-`D` circulant as
//! a Cartesian product of two smaller record graphs whose degrees and
//! diameters sum to the targets.
//!
//! The product of coprime-order circulants is again circulant with additive
//! degree and diameter, so every split `(i, j) × (Δ−i, D−j)` of the budget
//! yields a candidate whose order is the product of the two record orders.
//! The best split often pairs records of non-coprime orders; those pairs are
//! *repaired* by shrinking one factor below its record order — preferring
//! recorded witnesses, falling back to budgeted searches — until the orders
//! are coprime and the product still beats the best directly coprime pair.

use std::collections::HashMap;

use num_integer::gcd;

use crate::constructions::{cartesian_product, ProductWitness};
use crate::error::{Error, Result};
use crate::graph::CirculantGraph;
use crate::pathcount::PruneConfig;
use crate::records::{RecordEntry, RecordTable};
use crate::search::{search_with_budget, SearchMode};

/// Default node budget for each repair search.
///
/// Repair scans probe a dozen or so orders just below a record, and at the
/// interesting cells those probes must come up empty — the records there are
/// genuine maxima. Empirically the decisive probes (degree 8, diameter 5,
/// orders 512–527) find nothing within millions of nodes, so any budget up
/// to that reproduces the published compositions; 20 000 nodes keeps each
/// failing probe near a quarter second. A budget of `Some(0)` disables
/// searching entirely and repairs from recorded witnesses alone.
pub const DEFAULT_REPAIR_BUDGET: u64 = 20_000;

/// One factor of a candidate product: a concrete graph playing a
/// `(degree, diameter)` role in the split.
#[derive(Debug, Clone)]
struct Factor {
    graph: CirculantGraph,
    degree: u32,
    diameter: u32,
}

impl Factor {
    fn from_witness(entry: &RecordEntry) -> Factor {
        Factor {
            graph: entry
                .graph()
                .expect("witness entries always carry a connection set"),
            degree: entry.degree,
            diameter: entry.diameter,
        }
    }

    fn order(&self) -> u32 {
        self.graph.order()
    }
}

/// A factor pair, kept in a list sorted by descending product order.
#[derive(Debug, Clone)]
struct Candidate {
    order: u64,
    g1: Factor,
    g2: Factor,
}

impl Candidate {
    fn new(g1: Factor, g2: Factor) -> Candidate {
        let order = u64::from(g1.order()) * u64::from(g2.order());
        Candidate { order, g1, g2 }
    }

    fn coprime(&self) -> bool {
        gcd(self.g1.order(), self.g2.order()) == 1
    }
}

/// Insert keeping descending order; equal orders keep insertion order.
fn insert_sorted(list: &mut Vec<Candidate>, cand: Candidate) {
    let at = list.partition_point(|c| c.order >= cand.order);
    list.insert(at, cand);
}

/// Finds replacement factors for the repair phase: recorded witnesses first,
/// then budgeted first-solution searches, memoized per (order, cell) so the
/// two scan directions of a symmetric split share work.
struct Repairer<'a> {
    records: &'a RecordTable,
    cfg: PruneConfig,
    budget: Option<u64>,
    cache: HashMap<(u32, u32, u32), Option<CirculantGraph>>,
}

impl Repairer<'_> {
    /// A degree-`deg`, diameter-`diam` circulant on exactly `n` vertices,
    /// if one is recorded or found within budget.
    fn find(&mut self, n: u32, deg: u32, diam: u32) -> Result<Option<CirculantGraph>> {
        if let Some(w) = self.records.witness_with_order(deg, diam, n) {
            return Ok(w.graph());
        }
        if let Some(hit) = self.cache.get(&(n, deg, diam)) {
            return Ok(hit.clone());
        }
        let outcome =
            search_with_budget(n, deg, diam, &self.cfg, SearchMode::FirstOnly, self.budget)?;
        let found = outcome.solutions.into_iter().next().map(CirculantGraph::new);
        self.cache.insert((n, deg, diam), found.clone());
        Ok(found)
    }

    /// Scan orders downward from just below `factor`'s order while the
    /// product with the unchanged cofactor still beats `max`, returning the
    /// first admissible order that carries a graph for `factor`'s cell.
    fn shrink(&mut self, factor: &Factor, cofactor: u32, max: u64) -> Result<Option<Factor>> {
        let (deg, diam) = (factor.degree, factor.diameter);
        for shrunk in (1..factor.order()).rev() {
            if u64::from(shrunk) * u64::from(cofactor) <= max {
                break;
            }
            if shrunk < deg + 1 {
                break; // fewer vertices than degree + 1: hopeless from here down
            }
            if deg % 2 == 1 && shrunk % 2 == 1 {
                continue; // odd degree forces the half generator, so an even order
            }
            if gcd(shrunk, cofactor) != 1 {
                continue;
            }
            if let Some(graph) = self.find(shrunk, deg, diam)? {
                return Ok(Some(Factor { graph, degree: deg, diameter: diam }));
            }
        }
        Ok(None)
    }
}

/// Largest composable circulant of degree `delta` and diameter `diam`.
///
/// Phase one pairs the recorded set witnesses of every degree/diameter
/// split, keeping candidates whose product order beats the best coprime
/// pair seen so far. Phase two repairs the non-coprime candidates that
/// still head the list: each factor is shrunk independently toward the
/// coprimality and order constraints, the larger successful repair wins
/// (ties favour shrinking the second factor), and a candidate whose
/// repairs both fail is dropped. The surviving head is composed, verified
/// and returned with its factors.
///
/// Order-only records cannot be composed, so splits whose cell lacks a set
/// witness are skipped; the search for replacements is correspondingly
/// conservative and never claims more than it can exhibit.
///
/// `budget` caps each repair search in visited nodes (`None` = unbounded;
/// see [`DEFAULT_REPAIR_BUDGET`]). Errors with [`Error::NoProductFound`]
/// when no split survives.
pub fn combined_search(
    delta: u32,
    diam: u32,
    records: &RecordTable,
    budget: Option<u64>,
) -> Result<ProductWitness> {
    assert!(delta >= 4, "composition needs degree >= 4");
    assert!(diam >= 2, "composition needs diameter >= 2");

    // Phase one: enumerate splits. `max` is the best coprime product so
    // far; anything not beating it is discarded immediately.
    let mut max: u64 = 0;
    let mut list: Vec<Candidate> = Vec::new();
    for i in 2..=delta / 2 {
        for j in 1..=diam / 2 {
            let Some(w1) = records.max_set_witness(i, j) else {
                continue;
            };
            let Some(w2) = records.max_set_witness(delta - i, diam - j) else {
                continue;
            };
            let order = u64::from(w1.order) * u64::from(w2.order);
            if order <= max {
                continue;
            }
            let cand = Candidate::new(Factor::from_witness(w1), Factor::from_witness(w2));
            let coprime = cand.coprime();
            insert_sorted(&mut list, cand);
            if coprime {
                max = order;
                list.retain(|c| c.order >= max);
            }
        }
    }

    // Phase two: repair non-coprime heads or drop them.
    let mut repair = Repairer {
        records,
        cfg: PruneConfig::shipped_defaults(),
        budget,
        cache: HashMap::new(),
    };
    loop {
        match list.first() {
            None => {
                return Err(Error::NoProductFound {
                    degree: delta,
                    diameter: diam,
                })
            }
            Some(head) if head.coprime() => break,
            Some(_) => {}
        }
        let head = list.remove(0);
        let shrunk1 = repair.shrink(&head.g1, head.g2.order(), max)?;
        let shrunk2 = repair.shrink(&head.g2, head.g1.order(), max)?;
        let repaired = match (shrunk1, shrunk2) {
            (Some(a), Some(b)) => {
                let via_first = u64::from(a.order()) * u64::from(head.g2.order());
                let via_second = u64::from(head.g1.order()) * u64::from(b.order());
                if via_first > via_second {
                    Candidate::new(a, head.g2)
                } else {
                    Candidate::new(head.g1, b)
                }
            }
            (Some(a), None) => Candidate::new(a, head.g2),
            (None, Some(b)) => Candidate::new(head.g1, b),
            (None, None) => continue,
        };
        debug_assert!(repaired.coprime(), "shrink scans enforce coprimality");
        debug_assert!(repaired.order > max, "shrink scans enforce the order cutoff");
        max = repaired.order;
        insert_sorted(&mut list, repaired);
        list.retain(|c| c.order >= max);
    }

    let head = &list[0];
    let witness = cartesian_product(&head.g1.graph, &head.g2.graph)?;
    assert_eq!(witness.degree, delta, "factor degrees must sum to the target");
    assert_eq!(witness.diameter, diam, "factor diameters must sum to the target");
    Ok(witness)
}
