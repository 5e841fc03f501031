//! Cross-module property suites: invariants that must hold for every
//! circulant graph, bound formula, prune configuration, and record table,
//! whatever the parameters.

use proptest::prelude::*;

use circulant::bounds::{circulant_upper_bound, delannoy_f, delannoy_f_prime, moore_bound};
use circulant::constructions::cartesian_product;
use circulant::graph::{canonical_set, CirculantGraph, ConnectionSet};
use circulant::pathcount::{count_path_classes, profile_ceilings, prune_admissible, PruneConfig};
use circulant::records::{RecordEntry, RecordTable};
use circulant::search::{brute_force_oracle, search, SearchMode};

/// A random connection set on 5..=`max_n` vertices with up to four proper
/// generators and an optional half generator.
fn arb_set(max_n: u32) -> impl Strategy<Value = ConnectionSet> {
    (5..=max_n)
        .prop_flat_map(|n| {
            let max_proper = (n - 1) / 2;
            let takes = max_proper.min(4) as usize;
            (
                Just(n),
                proptest::collection::btree_set(1..=max_proper, 1..=takes.max(1)),
                proptest::bool::ANY,
            )
        })
        .prop_map(|(n, proper, with_half)| {
            let mut raw: Vec<i64> = proper.into_iter().map(i64::from).collect();
            if with_half && n % 2 == 0 {
                raw.push(i64::from(n / 2));
            }
            canonical_set(n, &raw).expect("generators are nonzero modulo n")
        })
}

/// A random *connected* circulant graph (generator 1 is always included).
fn arb_connected(max_n: u32) -> impl Strategy<Value = CirculantGraph> {
    arb_set(max_n).prop_map(|set| {
        let n = set.n();
        let mut raw: Vec<i64> = set.generators().iter().map(|&s| i64::from(s)).collect();
        raw.push(1);
        CirculantGraph::new(canonical_set(n, &raw).expect("1 is a valid generator"))
    })
}

proptest! {
    /// Undirectedness: the distance profile from 0 is symmetric, dist[w] =
    /// dist[n − w].
    #[test]
    fn distance_symmetry(set in arb_set(200)) {
        let g = CirculantGraph::new(set);
        let profile = g.distances_from_zero();
        let n = g.order() as usize;
        for w in 1..n {
            prop_assert_eq!(profile.dist[w], profile.dist[n - w], "w = {}", w);
        }
    }

    /// Vertex transitivity: the profile from any source is a rotation of the
    /// profile from 0, so in particular all eccentricities agree.
    #[test]
    fn vertex_transitive_profiles(set in arb_set(200), src_seed in 0u32..1000) {
        let g = CirculantGraph::new(set);
        let n = g.order();
        let src = src_seed % n;
        let from_zero = g.distances_from_zero();
        let from_src = g.distances_from(src);
        prop_assert_eq!(from_src.ecc, from_zero.ecc);
        for v in 0..n {
            let shifted = (v + n - src) % n;
            prop_assert_eq!(
                from_src.dist[v as usize],
                from_zero.dist[shifted as usize],
                "v = {}", v
            );
        }
    }

    /// Multiplying the connection set by a unit is an isomorphism: degree
    /// and diameter are invariant.
    #[test]
    fn multiplicative_isomorph_invariance(set in arb_set(150), r_seed in 2u32..1000) {
        let n = set.n();
        let r = (r_seed % (n - 1)).max(1);
        prop_assume!(num_integer::gcd(r, n) == 1);
        let g = CirculantGraph::new(set);
        let h = g.multiply_set(i64::from(r)).expect("r is a unit mod n");
        prop_assert_eq!(h.degree(), g.degree());
        prop_assert_eq!(h.diameter(), g.diameter());
    }

    /// Cartesian-product metric: in C(nm; mS₁ ∪ nS₂) the mS₁ generators only
    /// move v mod n and the nS₂ generators only move v mod m, so the distance
    /// to v splits as a sum over the unit-twisted factors C(n; mS₁) and
    /// C(m; nS₂).
    #[test]
    fn product_distances_are_sums(
        g1 in arb_connected(40),
        g2 in arb_connected(40),
        v_seed in 0u32..100_000,
    ) {
        let (n, m) = (g1.order(), g2.order());
        prop_assume!(num_integer::gcd(n, m) == 1);
        let witness = cartesian_product(&g1, &g2).expect("coprime connected factors");
        let d1 = g1.multiply_set(i64::from(m)).expect("m is a unit mod n").distances_from_zero();
        let d2 = g2.multiply_set(i64::from(n)).expect("n is a unit mod m").distances_from_zero();
        let dp = witness.product.distances_from_zero();
        let v = v_seed % (n * m);
        prop_assert_eq!(
            dp.dist[v as usize],
            d1.dist[(v % n) as usize] + d2.dist[(v % m) as usize],
            "v = {}", v
        );
    }

    /// Path-class counting is monotone in the generator set: a prefix of a
    /// connection set never counts more classes than its extension. This is
    /// what makes ceiling pruning of partial sets sound for full sets.
    #[test]
    fn path_counts_grow_with_generators(set in arb_set(120)) {
        let gens = set.generators();
        prop_assume!(gens.len() >= 2);
        let n = set.n();
        let prefix: Vec<i64> = gens[..gens.len() - 1].iter().map(|&s| i64::from(s)).collect();
        let small = CirculantGraph::new(canonical_set(n, &prefix).unwrap());
        let big = CirculantGraph::new(set);
        let horizon = 4;
        let c_small = count_path_classes(&small, horizon);
        let c_big = count_path_classes(&big, horizon);
        for d in 0..=horizon as usize {
            for w in 0..n as usize {
                prop_assert!(
                    c_small.counts[d][w] <= c_big.counts[d][w],
                    "class count dropped at d = {}, w = {}", d, w
                );
            }
        }
    }

    /// Relaxing every ceiling keeps admissible graphs admissible: a graph
    /// passing its own zero-slack profile passes any loosened profile.
    #[test]
    fn looser_ceilings_accept_more(g in arb_connected(120), slack in 1u32..5) {
        let diam = g.diameter().expect("arb_connected graphs are connected");
        prop_assume!(diam >= 2);
        let tight = profile_ceilings(std::iter::once(&g), 0);
        let mut loose = tight.clone();
        let cells: Vec<(u32, u32, u32)> = tight.ceilings().collect();
        for (i, d, c) in cells {
            loose.set_ceiling(i, d, c + slack).unwrap();
        }
        let profile = g.distances_from_zero();
        prop_assert!(prune_admissible(&g, diam, &tight, &profile));
        prop_assert!(prune_admissible(&g, diam, &loose, &profile));
    }

    /// Prune-configuration files survive a Display → FromStr round trip.
    #[test]
    fn prune_config_round_trips(
        k in 1u32..6,
        cells in proptest::collection::btree_map((0u32..6, 0u32..6), 0u32..50, 0..12),
    ) {
        let mut cfg = PruneConfig::unbounded();
        cfg.k = k;
        for (&(i, d), &c) in &cells {
            // Only (i, d) with i <= d are representable.
            let d = d.max(i);
            cfg.set_ceiling(i, d, c).unwrap();
        }
        let text = cfg.to_string();
        let reparsed: PruneConfig = text.parse().expect("printed configs parse");
        prop_assert_eq!(reparsed, cfg);
    }

    /// Connection sets survive a Display → FromStr round trip.
    #[test]
    fn connection_set_round_trips(set in arb_set(300)) {
        let text = set.to_string();
        let reparsed: ConnectionSet = text.parse().expect("printed sets parse");
        prop_assert_eq!(reparsed, set);
    }

    /// A record table built from any verified subset of the built-in
    /// witnesses serializes deterministically: save → load → save is
    /// byte-identical.
    #[test]
    fn record_table_round_trips(mask in proptest::collection::vec(proptest::bool::ANY, 30)) {
        let builtin = RecordTable::seed_builtin();
        let pool: Vec<&RecordEntry> = builtin.witnesses().iter().take(mask.len()).collect();
        let mut table = RecordTable::new();
        for (entry, &keep) in pool.iter().zip(&mask) {
            if keep {
                let fresh = RecordEntry::new(
                    entry.degree,
                    entry.diameter,
                    entry.order,
                    entry.set.clone(),
                    &entry.source,
                );
                let _ = table.update_if_better(fresh).expect("witnesses re-verify");
            }
        }
        let dir = tempfile::tempdir().unwrap();
        let path_a = dir.path().join("a.json");
        let path_b = dir.path().join("b.json");
        table.save(&path_a).unwrap();
        let reloaded = RecordTable::load(&path_a).unwrap();
        reloaded.save(&path_b).unwrap();
        let bytes_a = std::fs::read(&path_a).unwrap();
        let bytes_b = std::fs::read(&path_b).unwrap();
        prop_assert_eq!(reloaded, table);
        prop_assert_eq!(bytes_a, bytes_b);
    }

    /// The pruned searcher with no ceilings agrees with the brute-force
    /// oracle on small instances (the full sweep runs in the acceptance
    /// suite; this keeps the equivalence under random fire).
    #[test]
    fn unpruned_search_matches_oracle(n in 6u32..=30, delta in 3u32..=4, diam in 1u32..=6) {
        prop_assume!(n > delta);
        prop_assume!(delta % 2 == 0 || n % 2 == 0);
        let mut expected = brute_force_oracle(n, delta, diam).expect("small candidate space");
        let outcome = search(n, delta, diam, &PruneConfig::exhaustive(), SearchMode::All)
            .expect("parity and order were pre-checked");
        let mut got = outcome.solutions;
        got.sort();
        expected.sort();
        prop_assert_eq!(got, expected);
        prop_assert!(outcome.exhausted, "unpruned full enumeration must certify itself");
    }
}

/// Delannoy symmetry F(t, D) = F(D, t), exact, well beyond the table range.
#[test]
fn delannoy_symmetry() {
    for t in 0..=24 {
        for d in 0..=24 {
            assert_eq!(delannoy_f(t, d), delannoy_f(d, t), "t = {t}, d = {d}");
        }
    }
}

/// Odd-degree bounds interleave the even-degree ones strictly:
/// F(t, D) < F′(t, D) < F(t + 1, D).
#[test]
fn bound_interleaving() {
    for t in 1..=12 {
        for d in 1..=12 {
            let f_t = delannoy_f(t, d);
            let f_prime = delannoy_f_prime(t, d);
            let f_next = delannoy_f(t + 1, d);
            assert!(f_t < f_prime, "t = {t}, d = {d}");
            assert!(f_prime < f_next, "t = {t}, d = {d}");
        }
    }
}

/// The abelian counting bound never exceeds the general-graph Moore bound.
#[test]
fn moore_dominates_circulant_bound() {
    for delta in 2..=16 {
        for d in 1..=12 {
            assert!(
                circulant_upper_bound(delta, d) <= moore_bound(delta, d),
                "delta = {delta}, d = {d}"
            );
        }
    }
}
