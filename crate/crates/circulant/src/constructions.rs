//! Deterministic circulant constructions: Cartesian products of coprime
//! circulants, the optimal degree-4 family, and the power construction.

use crate::error::{Error, Result};
use crate::graph::{canonical_set, CirculantGraph, ConnectionSet};

/// Orders up to this cap get their product diameter re-measured by BFS;
/// larger products carry the (proven) additive diameter as an assertion.
pub const BFS_VERIFY_CAP: u32 = 1_000_000;

/// A Cartesian product `C(n; S₁) □ C(m; S₂) ≅ C(nm; mS₁ ∪ nS₂)` together
/// with its factors and the additivity evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductWitness {
    /// The two coprime-order factors, in call order.
    pub factors: (CirculantGraph, CirculantGraph),
    /// The composed circulant on `n·m` vertices with set `mS₁ ∪ nS₂`.
    pub product: CirculantGraph,
    /// Degree of the product (= sum of factor degrees).
    pub degree: u32,
    /// Diameter of the product (= sum of factor diameters).
    pub diameter: u32,
    /// True when `diameter` was re-measured by BFS on the product; false when
    /// the order exceeds [`BFS_VERIFY_CAP`] and additivity is asserted.
    pub measured: bool,
}

/// Compose two connected circulant graphs of coprime orders.
///
/// By the Chinese remainder theorem ℤₙ × ℤₘ ≅ ℤₙₘ, and under that
/// isomorphism the Cartesian product of `C(n; S₁)` and `C(m; S₂)` is the
/// circulant `C(nm; mS₁ ∪ nS₂)`. Degree and diameter are additive. A factor
/// half generator `n/2` scales to `m·n/2`, which is the product's half
/// generator exactly when `m` is odd — always the case here, since an even
/// `m` would share the factor 2 with the even `n`.
pub fn cartesian_product(g1: &CirculantGraph, g2: &CirculantGraph) -> Result<ProductWitness> {
    let (n, m) = (g1.order(), g2.order());
    if num_integer::gcd(n, m) != 1 {
        return Err(Error::NotCoprime(n, m));
    }
    if !g1.is_connected() {
        return Err(Error::DisconnectedFactor(n));
    }
    if !g2.is_connected() {
        return Err(Error::DisconnectedFactor(m));
    }
    let nm_wide = u64::from(n) * u64::from(m);
    let nm = u32::try_from(nm_wide)
        .ok()
        .filter(|&v| v <= i32::MAX as u32)
        .ok_or(Error::OrderOverflow(nm_wide))?;

    let mut raw: Vec<i64> = Vec::with_capacity((g1.degree() + g2.degree()) as usize);
    raw.extend(
        g1.set()
            .generators()
            .iter()
            .map(|&s| i64::from(s) * i64::from(m)),
    );
    raw.extend(
        g2.set()
            .generators()
            .iter()
            .map(|&s| i64::from(s) * i64::from(n)),
    );
    let product = CirculantGraph::new(canonical_set(nm, &raw)?);

    let degree = g1.degree() + g2.degree();
    assert_eq!(
        product.degree(),
        degree,
        "product generators must not collide for coprime orders"
    );

    let d1 = g1.diameter().expect("factor connectivity already checked");
    let d2 = g2.diameter().expect("factor connectivity already checked");
    let additive = d1 + d2;
    let measured = nm <= BFS_VERIFY_CAP;
    if measured {
        let observed = product
            .diameter()
            .expect("product of connected coprime factors is connected");
        assert_eq!(
            observed, additive,
            "measured product diameter must equal the factor sum"
        );
    }
    Ok(ProductWitness {
        factors: (g1.clone(), g2.clone()),
        product,
        degree,
        diameter: additive,
        measured,
    })
}

/// The diameter-optimal degree-4 connection set `{s₁, s₁ + 1}` on ℤₙ with
/// `s₁ = ⌊(√(2n − 1) − 1)/2⌋`.
pub fn optimal_degree4_set(n: u32) -> Result<ConnectionSet> {
    if n < 5 {
        return Err(Error::DegenerateOrder(n));
    }
    let s1 = (((2 * u64::from(n) - 1).isqrt() - 1) / 2) as u32;
    // Both generators must stay strictly below n/2 to keep degree 4.
    if s1 == 0 || 2 * (s1 + 1) >= n {
        return Err(Error::DegenerateOrder(n));
    }
    canonical_set(n, &[i64::from(s1), i64::from(s1) + 1])
}

/// The power construction `C(sᵗ; ±1, ±s, ±s², …, ±s^{t−1})` for odd `s ≥ 3`:
/// a degree-`2t` circulant of diameter `t(s−1)/2` (each base-s digit of a
/// vertex label is corrected by at most `(s−1)/2` steps of its generator).
pub fn power_construction(s: u32, t: u32) -> Result<CirculantGraph> {
    if s.is_multiple_of(2) {
        return Err(Error::EvenBase(s));
    }
    assert!(s >= 3 && t >= 2, "power construction needs s >= 3 odd, t >= 2");
    let order_wide = (1..=t).try_fold(1u64, |acc, _| {
        let next = acc * u64::from(s);
        (next <= i32::MAX as u64).then_some(next)
    });
    let order = match order_wide {
        Some(v) => v as u32,
        None => return Err(Error::OrderOverflow(0)),
    };
    let mut raw = Vec::with_capacity(t as usize);
    let mut power = 1i64;
    for _ in 0..t {
        raw.push(power);
        power *= i64::from(s);
    }
    Ok(CirculantGraph::new(canonical_set(order, &raw)?))
}

/// Diameter that [`power_construction`] achieves: `t(s−1)/2`.
pub fn power_construction_diameter(s: u32, t: u32) -> u32 {
    t * (s - 1) / 2
}
