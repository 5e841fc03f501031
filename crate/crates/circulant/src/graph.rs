//! Core representation of undirected circulant graphs: canonical connection
//! sets, BFS distance profiles, diameter, connectivity, and multiplicative
//! transforms.

use crate::error::{Error, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Distance sentinel for unreachable vertices.
pub const INFINITY: u32 = u32::MAX;

/// Canonical symmetric connection set for the cyclic group ℤₙ.
///
/// Proper generators lie strictly between 0 and n/2 and are stored sorted
/// ascending; `has_half` records whether the self-inverse generator n/2
/// (n even) is present. The degree of the corresponding graph is
/// `2·|proper| + (1 if has_half)` — the half generator contributes a single
/// edge per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnectionSet {
    n: u32,
    proper: Vec<u32>,
    has_half: bool,
}

/// Canonicalize a raw multiset of generators for ℤₙ.
///
/// Each element is reduced modulo `n`, rejected if it reduces to 0, folded to
/// `min(x, n−x)`, and deduplicated; a folded value of n/2 (n even) sets the
/// half-generator flag instead of joining the proper list.
pub fn canonical_set(n: u32, raw: &[i64]) -> Result<ConnectionSet> {
    if n < 2 {
        return Err(Error::DegenerateOrder(n));
    }
    if raw.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut proper = Vec::with_capacity(raw.len());
    let mut has_half = false;
    for &x in raw {
        let r = x.rem_euclid(i64::from(n)) as u32;
        if r == 0 {
            return Err(Error::InvalidGenerator { value: x, n });
        }
        let folded = r.min(n - r);
        if n.is_multiple_of(2) && folded == n / 2 {
            has_half = true;
        } else {
            proper.push(folded);
        }
    }
    proper.sort_unstable();
    proper.dedup();
    Ok(ConnectionSet { n, proper, has_half })
}

impl ConnectionSet {
    /// Canonicalizing constructor; see [`canonical_set`].
    pub fn new(n: u32, raw: &[i64]) -> Result<Self> {
        canonical_set(n, raw)
    }

    /// Group order n.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Proper generators (each strictly between 0 and n/2), sorted ascending.
    pub fn proper(&self) -> &[u32] {
        &self.proper
    }

    /// Whether the self-inverse generator n/2 is present.
    pub fn has_half(&self) -> bool {
        self.has_half
    }

    /// Graph degree: `2·|proper| + (1 if has_half)`.
    pub fn degree(&self) -> u32 {
        2 * self.proper.len() as u32 + u32::from(self.has_half)
    }

    /// Positive generator representatives: proper generators ascending,
    /// followed by n/2 when present.
    pub fn generators(&self) -> Vec<u32> {
        let mut g = self.proper.clone();
        if self.has_half {
            g.push(self.n / 2);
        }
        g
    }

    /// All step residues as elements of ℤₙ: `s` and `n−s` for each proper
    /// generator, plus n/2 once when present; sorted ascending.
    pub fn steps(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(2 * self.proper.len() + 1);
        for &s in &self.proper {
            out.push(s);
            out.push(self.n - s);
        }
        if self.has_half {
            out.push(self.n / 2);
        }
        out.sort_unstable();
        out
    }

    /// Largest proper generator, if any.
    pub fn max_proper(&self) -> Option<u32> {
        self.proper.last().copied()
    }

    /// gcd of n and all generators (including the half generator); the graph
    /// is connected iff this is 1.
    pub fn content_gcd(&self) -> u32 {
        let mut g = self.n;
        for &s in &self.proper {
            g = num_integer::gcd(g, s);
        }
        if self.has_half {
            g = num_integer::gcd(g, self.n / 2);
        }
        g
    }

    /// Multiply every generator by a unit r of ℤₙ; the resulting set defines
    /// an isomorphic graph.
    pub fn multiply(&self, r: i64) -> Result<ConnectionSet> {
        let n = i64::from(self.n);
        let rm = r.rem_euclid(n);
        if num_integer::gcd(rm, n) != 1 {
            return Err(Error::NotAUnit { r, n: self.n });
        }
        let raw: Vec<i64> = self
            .generators()
            .iter()
            .map(|&s| (rm * i64::from(s)).rem_euclid(n))
            .collect();
        canonical_set(self.n, &raw)
    }

    /// Lexicographically least set among all multiplicative images rS over
    /// units r of ℤₙ. Two sets are multiplicatively related iff they share
    /// this representative, so it collapses that isomorphism class.
    pub fn multiplicative_class_min(&self) -> ConnectionSet {
        let mut best = self.clone();
        for r in 1..self.n {
            if num_integer::gcd(r, self.n) == 1 {
                let image = self
                    .multiply(i64::from(r))
                    .expect("unit multiplication cannot fail");
                if image < best {
                    best = image;
                }
            }
        }
        best
    }
}

impl fmt::Display for ConnectionSet {
    /// Text syntax `n;s1,s2,...` with the half generator written explicitly
    /// (it is always the last and largest entry).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n)?;
        let gens = self.generators();
        for (i, s) in gens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for ConnectionSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n_part, gen_part) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("missing ';' in connection set {s:?}")))?;
        let n: u32 = n_part
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad order in connection set {s:?}")))?;
        let raw: Vec<i64> = gen_part
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad generator {tok:?} in {s:?}")))
            })
            .collect::<Result<_>>()?;
        canonical_set(n, &raw)
    }
}

impl Serialize for ConnectionSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ConnectionSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Distances from vertex 0, as computed by breadth-first search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile {
    /// `dist[w]` = graph distance from the source to w, or [`INFINITY`].
    pub dist: Vec<u32>,
    /// Maximum finite entry (the source eccentricity).
    pub ecc: u32,
}

impl DistanceProfile {
    /// Whether every vertex is reachable from the source.
    pub fn all_reachable(&self) -> bool {
        self.dist.iter().all(|&d| d != INFINITY)
    }

    /// Diameter of a vertex-transitive graph: the source eccentricity, or
    /// `None` when the graph is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        if self.all_reachable() {
            Some(self.ecc)
        } else {
            None
        }
    }
}

/// Undirected circulant graph `C(n; S)`: vertex set ℤₙ, with v adjacent to
/// v ± s for every generator s. Adjacency is generated on the fly from the
/// connection set; no adjacency structure is materialized.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CirculantGraph {
    set: ConnectionSet,
}

impl CirculantGraph {
    pub fn new(set: ConnectionSet) -> Self {
        CirculantGraph { set }
    }

    /// Canonicalize raw generators and wrap the result.
    pub fn from_parts(n: u32, raw: &[i64]) -> Result<Self> {
        Ok(CirculantGraph::new(canonical_set(n, raw)?))
    }

    /// Number of vertices.
    pub fn order(&self) -> u32 {
        self.set.n()
    }

    pub fn degree(&self) -> u32 {
        self.set.degree()
    }

    pub fn set(&self) -> &ConnectionSet {
        &self.set
    }

    pub fn into_set(self) -> ConnectionSet {
        self.set
    }

    /// Connectivity via the gcd criterion: connected iff
    /// gcd(n, s₁, …, s_t, half) = 1.
    pub fn is_connected(&self) -> bool {
        self.set.content_gcd() == 1
    }

    /// BFS distances from vertex 0.
    pub fn distances_from_zero(&self) -> DistanceProfile {
        self.distances_from(0)
    }

    /// BFS distances from an arbitrary source vertex.
    pub fn distances_from(&self, src: u32) -> DistanceProfile {
        let n = self.order();
        assert!(src < n, "source vertex out of range");
        let steps = self.set.steps();
        let mut dist = Vec::new();
        let mut queue = Vec::new();
        let (ecc, _) = bfs_into(n, &steps, src, &mut dist, &mut queue);
        DistanceProfile { dist, ecc }
    }

    /// Diameter (eccentricity of vertex 0, valid by vertex-transitivity), or
    /// `None` when disconnected.
    pub fn diameter(&self) -> Option<u32> {
        self.distances_from_zero().diameter()
    }

    /// The isomorphic graph `C(n; rS)` for a unit r of ℤₙ.
    pub fn multiply_set(&self, r: i64) -> Result<CirculantGraph> {
        Ok(CirculantGraph::new(self.set.multiply(r)?))
    }
}

impl fmt::Display for CirculantGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({})", self.set)
    }
}

/// BFS from `src` over the step set of a circulant graph, writing distances
/// into a caller-owned buffer (reused across calls in search hot loops).
/// Returns `(eccentricity, vertices reached)`.
pub(crate) fn bfs_into(
    n: u32,
    steps: &[u32],
    src: u32,
    dist: &mut Vec<u32>,
    queue: &mut Vec<u32>,
) -> (u32, u32) {
    dist.clear();
    dist.resize(n as usize, INFINITY);
    queue.clear();
    dist[src as usize] = 0;
    queue.push(src);
    let mut head = 0;
    let mut ecc = 0;
    let mut reached = 1;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        let next = dist[v as usize] + 1;
        for &s in steps {
            let w = v + s;
            let w = if w >= n { w - n } else { w };
            if dist[w as usize] == INFINITY {
                dist[w as usize] = next;
                ecc = next;
                reached += 1;
                queue.push(w);
            }
        }
    }
    (ecc, reached)
}
