//! Regenerate `data/default_ceilings.txt`, the prune ceilings shipped with
//! the toolkit.
//!
//! The ceilings are profiled from the built-in record graphs that achieve at
//! least half of the counting bound (the efficiency exemplars), with one
//! unit of slack per cell. Run after editing the seed tables:
//!
//! ```text
//! cargo run --release -p circulant --example regen_ceilings
//! ```
//!
//! A unit test compares the shipped file against this regeneration, so a
//! stale file fails the suite rather than silently shipping.

use circulant::pathcount::{profile_ceilings, PROFILE_MIN_PERCENT, PROFILE_SLACK};
use circulant::records::RecordTable;

const MIN_PERCENT: f64 = PROFILE_MIN_PERCENT;
const SLACK: u32 = PROFILE_SLACK;

fn main() {
    let table = RecordTable::seed_builtin();
    let graphs = table.efficient_graphs(MIN_PERCENT);
    eprintln!("profiling {} record graphs...", graphs.len());
    let cfg = profile_ceilings(graphs.iter(), SLACK);
    let cells = cfg.ceilings().count();

    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/default_ceilings.txt");
    let text = format!(
        "# Prune ceilings profiled from the built-in record graphs that reach\n\
         # at least {MIN_PERCENT}% of the counting bound, plus {SLACK} slack per cell.\n\
         # Regenerate with: cargo run --release -p circulant --example regen_ceilings\n\
         {cfg}"
    );
    std::fs::write(path, text).expect("write ceiling table");
    eprintln!("wrote {cells} ceiling cells to {path}");
}
