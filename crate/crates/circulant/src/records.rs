//! Persistent table of the largest known circulant graph per (degree,
//! diameter) cell.
//!
//! The table stores one [`RecordEntry`] per cell plus a list of *witnesses*:
//! every connection set ever verified, including sets whose order has since
//! been superseded. Superseded witnesses matter because the product
//! construction frequently needs a sub-optimal factor whose order is coprime
//! to the other factor's (the optimal orders often share a divisor).

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::analysis::Grid;
use crate::bounds::circulant_upper_bound;
use crate::constructions::cartesian_product;
use crate::error::{Error, Result};
use crate::graph::{CirculantGraph, ConnectionSet};
use crate::seed_data::{self, SeedSet};

pub use crate::seed_data::SeedProduct;

/// Version tag written into every serialized table.
pub const SCHEMA_VERSION: u32 = 1;

/// Printed percentages are accepted when within this many points of the
/// recomputed value; beyond it they are flagged as stale.
pub const PERCENT_TOLERANCE: f64 = 4.0;

/// One cell of the record table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordEntry {
    pub degree: u32,
    pub diameter: u32,
    pub order: u32,
    /// Connection-set witness; absent for order-only literature records.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<ConnectionSet>,
    /// Free-form provenance tag (`"literature:search"`, `"product"`, ...).
    pub source: String,
    /// Whether the source claims the order is maximal for the cell.
    pub optimal: bool,
    /// Whether the stored set has been re-verified by BFS.
    pub verified: bool,
}

impl RecordEntry {
    /// A new unverified entry; call [`RecordTable::update_if_better`] or
    /// [`verify_entry`] to establish `verified`.
    pub fn new(degree: u32, diameter: u32, order: u32, set: Option<ConnectionSet>, source: &str) -> Self {
        RecordEntry {
            degree,
            diameter,
            order,
            set,
            source: source.to_string(),
            optimal: false,
            verified: false,
        }
    }

    pub fn key(&self) -> (u32, u32) {
        (self.degree, self.diameter)
    }

    pub fn graph(&self) -> Option<CirculantGraph> {
        self.set.clone().map(CirculantGraph::new)
    }
}

/// A single discrepancy between an entry's claims and its recomputed facts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mismatch {
    Degree { claimed: u32, actual: u32 },
    Order { claimed: u32, actual: u32 },
    Diameter { claimed: u32, actual: Option<u32> },
    Disconnected,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::Degree { claimed, actual } => {
                write!(f, "degree: claimed {claimed}, actual {actual}")
            }
            Mismatch::Order { claimed, actual } => {
                write!(f, "order: claimed {claimed}, actual {actual}")
            }
            Mismatch::Diameter { claimed, actual } => match actual {
                Some(d) => write!(f, "diameter: claimed {claimed}, actual {d}"),
                None => write!(f, "diameter: claimed {claimed}, graph disconnected"),
            },
            Mismatch::Disconnected => write!(f, "graph is disconnected"),
        }
    }
}

/// Field-by-field result of re-verifying one entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub degree: u32,
    pub diameter: u32,
    pub order: u32,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(
                f,
                "({}, {}) order {}: ok",
                self.degree, self.diameter, self.order
            )
        } else {
            write!(f, "({}, {}) order {}:", self.degree, self.diameter, self.order)?;
            for m in &self.mismatches {
                write!(f, " {m};")?;
            }
            Ok(())
        }
    }
}

/// A record order as a percentage of the circulant counting bound, or
/// `None` when the bound overflows 64-bit floating point.
pub fn bound_percentage(degree: u32, diameter: u32, order: u32) -> Option<f64> {
    let bound = circulant_upper_bound(degree, diameter).to_f64()?;
    Some(100.0 * f64::from(order) / bound)
}

/// The published Cartesian-product rows backing the built-in seeds: target
/// cell, claimed order, and the two factor cells with their orders.
pub fn builtin_product_rows() -> &'static [SeedProduct] {
    seed_data::PRODUCTS
}

/// Recompute degree, order, connectivity, and BFS diameter for an entry's
/// stored set and report every field that disagrees with its claims.
pub fn verify_entry(entry: &RecordEntry) -> Result<VerificationReport> {
    let set = entry
        .set
        .as_ref()
        .ok_or_else(|| Error::Records(format!(
            "cell ({}, {}) has no connection set to verify",
            entry.degree, entry.diameter
        )))?;
    let graph = CirculantGraph::new(set.clone());
    let mut mismatches = Vec::new();
    if graph.degree() != entry.degree {
        mismatches.push(Mismatch::Degree {
            claimed: entry.degree,
            actual: graph.degree(),
        });
    }
    if graph.order() != entry.order {
        mismatches.push(Mismatch::Order {
            claimed: entry.order,
            actual: graph.order(),
        });
    }
    if !graph.is_connected() {
        mismatches.push(Mismatch::Disconnected);
    }
    let actual_diam = graph.diameter();
    if actual_diam != Some(entry.diameter) {
        mismatches.push(Mismatch::Diameter {
            claimed: entry.diameter,
            actual: actual_diam,
        });
    }
    Ok(VerificationReport {
        degree: entry.degree,
        diameter: entry.diameter,
        order: entry.order,
        mismatches,
    })
}

/// Serialized document shape.
#[derive(Serialize, Deserialize)]
struct TableDoc {
    version: u32,
    entries: Vec<RecordEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    witnesses: Vec<RecordEntry>,
}

/// The best-known-order table plus all verified set witnesses.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RecordTable {
    entries: BTreeMap<(u32, u32), RecordEntry>,
    witnesses: Vec<RecordEntry>,
}

impl RecordTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, degree: u32, diameter: u32) -> Option<&RecordEntry> {
        self.entries.get(&(degree, diameter))
    }

    pub fn best_order(&self, degree: u32, diameter: u32) -> Option<u32> {
        self.get(degree, diameter).map(|e| e.order)
    }

    pub fn iter(&self) -> impl Iterator<Item = &RecordEntry> {
        self.entries.values()
    }

    pub fn witnesses(&self) -> &[RecordEntry] {
        &self.witnesses
    }

    /// The largest-order verified set witness for a cell, if any.
    pub fn max_set_witness(&self, degree: u32, diameter: u32) -> Option<&RecordEntry> {
        self.witnesses
            .iter()
            .filter(|w| w.degree == degree && w.diameter == diameter)
            .max_by_key(|w| w.order)
    }

    /// A verified set witness with the exact given order, if any.
    pub fn witness_with_order(&self, degree: u32, diameter: u32, order: u32) -> Option<&RecordEntry> {
        self.witnesses
            .iter()
            .find(|w| w.degree == degree && w.diameter == diameter && w.order == order)
    }

    fn push_witness(&mut self, entry: &RecordEntry) {
        debug_assert!(entry.set.is_some() && entry.verified);
        let sig = entry.set.as_ref().map(|s| s.to_string());
        if self
            .witnesses
            .iter()
            .any(|w| w.key() == entry.key() && w.set.as_ref().map(|s| s.to_string()) == sig)
        {
            return;
        }
        self.witnesses.push(entry.clone());
        self.witnesses
            .sort_by_key(|w| (w.degree, w.diameter, w.order, w.set.as_ref().map(|s| s.to_string())));
    }

    /// Inner placement: takes the cell if strictly larger, or if equal in
    /// order while upgrading an order-only cell to a set-bearing one.
    fn place(&mut self, entry: RecordEntry) -> bool {
        if entry.set.is_some() && entry.verified {
            self.push_witness(&entry);
        }
        match self.entries.get(&entry.key()) {
            None => {
                self.entries.insert(entry.key(), entry);
                true
            }
            Some(cur) if entry.order > cur.order => {
                self.entries.insert(entry.key(), entry);
                true
            }
            Some(cur) if entry.order == cur.order && cur.set.is_none() && entry.set.is_some() => {
                self.entries.insert(entry.key(), entry);
                true
            }
            Some(_) => false,
        }
    }

    /// Verify `entry` by BFS and install it when its order strictly exceeds
    /// the stored cell. Entries without a set, or whose set fails
    /// re-verification, are rejected.
    pub fn update_if_better(&mut self, mut entry: RecordEntry) -> Result<bool> {
        let report = match verify_entry(&entry) {
            Ok(r) => r,
            Err(_) => {
                return Err(Error::RejectedUnverified {
                    degree: entry.degree,
                    diameter: entry.diameter,
                })
            }
        };
        if !report.passed() {
            return Err(Error::RejectedUnverified {
                degree: entry.degree,
                diameter: entry.diameter,
            });
        }
        entry.verified = true;
        let better = match self.entries.get(&entry.key()) {
            None => true,
            Some(cur) => entry.order > cur.order,
        };
        // Record the witness even when the cell keeps a larger order.
        self.push_witness(&entry);
        if better {
            self.entries.insert(entry.key(), entry);
        }
        Ok(better)
    }

    /// Re-verify every set-bearing entry, returning one report per cell.
    pub fn verify_all(&self) -> Vec<VerificationReport> {
        self.iter()
            .filter(|e| e.set.is_some())
            .map(|e| verify_entry(e).expect("entry has a set"))
            .collect()
    }

    /// Percentage of the upper bound achieved, over an explicit window.
    /// Cells without an entry (or with a bound too large for floats) are
    /// left missing.
    pub fn percentage_grid_range(&self, degrees: (u32, u32), diameters: (u32, u32)) -> Grid {
        let mut grid = Grid::new(degrees, diameters);
        for deg in degrees.0..=degrees.1 {
            for diam in diameters.0..=diameters.1 {
                let Some(entry) = self.get(deg, diam) else {
                    continue;
                };
                let Some(pct) = bound_percentage(deg, diam, entry.order) else {
                    continue;
                };
                grid.set(deg, diam, pct);
            }
        }
        grid
    }

    /// Percentage grid over the table's own occupied bounding box.
    pub fn percentage_grid(&self) -> Grid {
        let lo_deg = self.entries.keys().map(|k| k.0).min().unwrap_or(3);
        let hi_deg = self.entries.keys().map(|k| k.0).max().unwrap_or(3);
        let lo_diam = self.entries.keys().map(|k| k.1).min().unwrap_or(2);
        let hi_diam = self.entries.keys().map(|k| k.1).max().unwrap_or(2);
        self.percentage_grid_range((lo_deg, hi_deg), (lo_diam, hi_diam))
    }

    /// The set-bearing record graphs achieving at least `min_percent` of the
    /// counting bound: the efficiency exemplars that prune ceilings are
    /// profiled from.
    pub fn efficient_graphs(&self, min_percent: f64) -> Vec<CirculantGraph> {
        self.iter()
            .filter_map(|e| {
                let set = e.set.as_ref()?;
                (bound_percentage(e.degree, e.diameter, e.order)? >= min_percent)
                    .then(|| CirculantGraph::new(set.clone()))
            })
            .collect()
    }

    /// Grid of record orders (log-transform happens at fit time).
    pub fn order_grid_range(&self, degrees: (u32, u32), diameters: (u32, u32)) -> Grid {
        let mut grid = Grid::new(degrees, diameters);
        for deg in degrees.0..=degrees.1 {
            for diam in diameters.0..=diameters.1 {
                if let Some(entry) = self.get(deg, diam) {
                    grid.set(deg, diam, entry.order as f64);
                }
            }
        }
        grid
    }

    /// Compare published percentages against recomputation (100·order/bound
    /// using the *published* order). Returns `(degree, diameter, printed,
    /// recomputed)` for every cell beyond [`PERCENT_TOLERANCE`].
    pub fn stale_percentages() -> Vec<(u32, u32, f64, f64)> {
        seed_data::PUBLISHED_PERCENTAGES
            .iter()
            .filter_map(|&(deg, diam, order, printed)| {
                let actual = bound_percentage(deg, diam, order)?;
                ((actual - printed).abs() > PERCENT_TOLERANCE).then_some((deg, diam, printed, actual))
            })
            .collect()
    }

    /// Write the table as canonical JSON (stable field and entry order).
    pub fn save(&self, path: &Path) -> Result<()> {
        let doc = TableDoc {
            version: SCHEMA_VERSION,
            entries: self.entries.values().cloned().collect(),
            witnesses: self.witnesses.clone(),
        };
        let mut text = serde_json::to_string_pretty(&doc)
            .map_err(|e| Error::Records(format!("serialize: {e}")))?;
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }

    /// Load a table previously written by [`RecordTable::save`].
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let doc: TableDoc = serde_json::from_str(&text)
            .map_err(|e| Error::Records(format!("parse {}: {e}", path.display())))?;
        if doc.version != SCHEMA_VERSION {
            return Err(Error::Records(format!(
                "unsupported schema version {} (expected {SCHEMA_VERSION})",
                doc.version
            )));
        }
        let mut table = RecordTable::new();
        for entry in doc.entries {
            if table.entries.insert(entry.key(), entry.clone()).is_some() {
                return Err(Error::Records(format!(
                    "duplicate cell ({}, {})",
                    entry.degree, entry.diameter
                )));
            }
        }
        table.witnesses = doc.witnesses;
        table
            .witnesses
            .sort_by_key(|w| (w.degree, w.diameter, w.order, w.set.as_ref().map(|s| s.to_string())));
        Ok(table)
    }

    /// The built-in table seeded from the published record listings:
    /// classical families, the search/record/product tables, recovered
    /// product factors, and order-only literature cells.
    pub fn seed_builtin() -> RecordTable {
        static SEEDED: OnceLock<RecordTable> = OnceLock::new();
        SEEDED.get_or_init(build_builtin).clone()
    }
}

/// Assert-verify a seed row and convert it into a table entry.
fn entry_from_seed(seed: &SeedSet) -> RecordEntry {
    let set: ConnectionSet = seed
        .set
        .parse()
        .unwrap_or_else(|e| panic!("seed set {:?} unparseable: {e}", seed.set));
    let graph = CirculantGraph::new(set.clone());
    assert_eq!(graph.order(), seed.order, "seed {:?} order", seed.set);
    assert_eq!(graph.degree(), seed.degree, "seed {:?} degree", seed.set);
    assert_eq!(
        graph.diameter(),
        Some(seed.diameter),
        "seed {:?} diameter",
        seed.set
    );
    RecordEntry {
        degree: seed.degree,
        diameter: seed.diameter,
        order: seed.order,
        set: Some(set),
        source: seed.source.to_string(),
        optimal: seed.optimal,
        verified: true,
    }
}

/// A verified entry for a classical-family graph.
fn family_entry(degree: u32, diameter: u32, graph: CirculantGraph, source: &str) -> RecordEntry {
    assert_eq!(graph.degree(), degree, "family {source} degree at {}", graph.order());
    assert_eq!(
        graph.diameter(),
        Some(diameter),
        "family {source} diameter at {}",
        graph.order()
    );
    RecordEntry {
        degree,
        diameter,
        order: graph.order(),
        set: Some(graph.set().clone()),
        source: source.to_string(),
        optimal: true,
        verified: true,
    }
}

fn build_builtin() -> RecordTable {
    let mut table = RecordTable::new();

    // Classical families, all bound-attaining (cycles and complete graphs
    // trivially, degrees 3 and 4 by the published 100% rows).
    for diam in 1..=10u32 {
        let graph = CirculantGraph::from_parts(2 * diam + 1, &[1]).unwrap();
        table.place(family_entry(2, diam, graph, "family:cycle"));
    }
    for degree in 2..=15u32 {
        let n = degree + 1;
        let raw: Vec<i64> = (1..=n as i64 / 2).collect();
        let graph = CirculantGraph::from_parts(n, &raw).unwrap();
        table.place(family_entry(degree, 1, graph, "family:complete"));
    }
    for diam in 2..=10u32 {
        let graph = CirculantGraph::from_parts(4 * diam, &[1, 2 * diam as i64]).unwrap();
        table.place(family_entry(3, diam, graph, "family:degree-3"));
    }
    for diam in 2..=10u32 {
        let n = 2 * diam * diam + 2 * diam + 1;
        let set = crate::constructions::optimal_degree4_set(n).unwrap();
        table.place(family_entry(4, diam, CirculantGraph::new(set), "family:degree-4"));
    }

    // Published set-bearing rows and recovered/searched factors.
    for seed in seed_data::SEARCHED_SETS
        .iter()
        .chain(seed_data::RECORD_SETS)
        .chain(seed_data::FACTOR_SETS)
        .chain(seed_data::SEED_SEARCH_SETS)
    {
        table.place(entry_from_seed(seed));
    }

    // Order-only literature cells (never displace a same-order set).
    for seed in seed_data::ORDER_ONLY {
        table.place(RecordEntry {
            degree: seed.degree,
            diameter: seed.diameter,
            order: seed.order,
            set: None,
            source: seed.source.to_string(),
            optimal: seed.optimal,
            verified: false,
        });
    }

    // Published Cartesian products, composed from their stated factors and
    // BFS-measured; fill cells the printed table understates.
    for row in seed_data::PRODUCTS {
        let f1 = table
            .witness_with_order(row.f1.0, row.f1.1, row.f1.2)
            .unwrap_or_else(|| panic!("missing product factor {:?}", row.f1))
            .clone();
        let f2 = table
            .witness_with_order(row.f2.0, row.f2.1, row.f2.2)
            .unwrap_or_else(|| panic!("missing product factor {:?}", row.f2))
            .clone();
        let witness = cartesian_product(&f1.graph().unwrap(), &f2.graph().unwrap())
            .unwrap_or_else(|e| panic!("product ({}, {}) failed: {e}", row.degree, row.diameter));
        assert!(witness.measured, "product ({}, {}) too large to verify", row.degree, row.diameter);
        assert_eq!(witness.product.order(), row.order, "product ({}, {}) order", row.degree, row.diameter);
        assert_eq!(witness.degree, row.degree, "product ({}, {}) degree", row.degree, row.diameter);
        assert_eq!(witness.diameter, row.diameter, "product ({}, {}) diameter", row.degree, row.diameter);
        table.place(RecordEntry {
            degree: row.degree,
            diameter: row.diameter,
            order: row.order,
            set: Some(witness.product.set().clone()),
            source: "product".to_string(),
            optimal: false,
            verified: true,
        });
    }

    table
}
