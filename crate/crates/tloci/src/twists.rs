//! Essential twists, the twist poset, and non-colliding certificates.
//!
//! The twist set is `T_k = Z x {-k+1, ..., 0}` ordered by
//! `(a1, b1) < (a2, b2)` when `a1 < a2 and b1 <= b2`, or when `a1 + k < a2`.
//! Between comparable twists there is a unique step `(q, r, s)` with
//! `q >= 0` and `r, s in [0, k)` accounting for the divisor difference after
//! trading k p's for k q's.

use crate::error::{Error, Result};
use crate::perm::AffinePermutation;
use crate::words::inv_k;

/// A twist `(a, b)` with `b in {-k+1, ..., 0}`.
pub type Twist = (i64, i64);

/// The unique ladder between two comparable twists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwistStep {
    pub q: i64,
    pub r: i64,
    pub s: i64,
}

/// `e(j)`: `-j` when some earlier window entry exceeds `tau(j)`, else `0`.
pub fn essential_shift(tau: &AffinePermutation, j: usize) -> i64 {
    let w = tau.window();
    if w[..j].iter().any(|&prev| prev > w[j]) {
        -(j as i64)
    } else {
        0
    }
}

/// The k essential twists `(tau(j), e(j))` of a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EssentialTwistSet {
    tau: AffinePermutation,
    entries: Vec<(usize, i64, i64)>,
}

impl EssentialTwistSet {
    pub fn new(tau: &AffinePermutation) -> Self {
        let entries = (0..tau.k())
            .map(|j| (j, tau.window()[j], essential_shift(tau, j)))
            .collect();
        Self {
            tau: tau.clone(),
            entries,
        }
    }

    pub fn tau(&self) -> &AffinePermutation {
        &self.tau
    }

    /// Triples `(j, tau(j), e(j))`.
    pub fn entries(&self) -> &[(usize, i64, i64)] {
        &self.entries
    }

    pub fn twist(&self, j: usize) -> Twist {
        let (_, a, b) = self.entries[j];
        (a, b)
    }

    /// The pullback of the twist order to window indices.
    pub fn index_prec(&self, j1: usize, j2: usize) -> Option<TwistStep> {
        twist_prec(self.tau.k(), self.twist(j1), self.twist(j2)).expect("essential twists lie in T_k")
    }
}

/// `Some(step)` when `t1` strictly precedes `t2` in the twist order, `None`
/// otherwise. Twists must have their second coordinate in `{-k+1, ..., 0}`.
pub fn twist_prec(k: usize, t1: Twist, t2: Twist) -> Result<Option<TwistStep>> {
    let ki = k as i64;
    for t in [t1, t2] {
        if t.1 > 0 || t.1 <= -ki {
            return Err(Error::TwistOutOfRange { b: t.1, k });
        }
    }
    let (a1, b1) = t1;
    let (a2, b2) = t2;
    let precedes = (a1 < a2 && b1 <= b2) || a1 + ki < a2;
    if !precedes {
        return Ok(None);
    }
    let s = (b2 - b1).rem_euclid(ki);
    let total = (a2 + b2) - (a1 + b1);
    let qk_r = total - s;
    let q = qk_r.div_euclid(ki);
    let r = qk_r.rem_euclid(ki);
    debug_assert!(q >= 0);
    Ok(Some(TwistStep { q, r, s }))
}

/// Checks that vanishing orders assigned to the essential twists stay
/// pairwise distinct mod k after transport to a common higher twist.
///
/// One witnessing twist decides the property for every comparable one, so the
/// check runs at `(max tau(j) + k + 1, 0)`, which sits above all essential
/// twists.
pub fn noncolliding(tau: &AffinePermutation, orders: &[i64]) -> Result<bool> {
    let k = tau.k();
    if orders.len() != k {
        return Err(Error::WrongLength {
            got: orders.len(),
            expected: k,
        });
    }
    if let Some(&v) = orders.iter().find(|&&v| v < 0) {
        return Err(Error::NegativeVanishingOrder(v));
    }
    let twists = EssentialTwistSet::new(tau);
    let top = (tau.window().iter().max().unwrap() + k as i64 + 1, 0);
    let ki = k as i64;
    let mut residues = Vec::with_capacity(k);
    for j in 0..k {
        let step = twist_prec(k, twists.twist(j), top)?
            .expect("top twist sits above every essential twist");
        residues.push((orders[j] + step.s).rem_euclid(ki));
    }
    for j1 in 0..k {
        for j2 in j1 + 1..k {
            if residues[j1] == residues[j2] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `sum over j' preceding j of (q + 1)`, which equals
/// `s(tau(j) + 1, -e(j)) - 1`: the room left for exactly one new section in
/// the j-th essential twist.
pub fn new_section_budget(tau: &AffinePermutation, j: usize) -> Result<i64> {
    let k = tau.k();
    if j >= k {
        return Err(Error::IndexOutOfRange { index: j, k });
    }
    let twists = EssentialTwistSet::new(tau);
    let mut total = 0;
    for j_prime in 0..k {
        if j_prime == j {
            continue;
        }
        if let Some(step) = twists.index_prec(j_prime, j) {
            total += step.q + 1;
        }
    }
    let (a, b) = twists.twist(j);
    assert_eq!(
        total,
        tau.slipface(a + 1, -b) - 1,
        "budget identity failed for {tau} at j = {j}"
    );
    Ok(total)
}

/// Both sides of the inversion identity: the deficiency summed over the
/// essential twists against the inversion count. The two always agree.
pub fn inversion_identity(tau: &AffinePermutation) -> (i64, i64) {
    let twists = EssentialTwistSet::new(tau);
    let lhs = (0..tau.k())
        .map(|j| {
            let (a, b) = twists.twist(j);
            tau.deficiency(a + 1, -b)
        })
        .sum();
    let rhs = inv_k(tau) as i64;
    assert_eq!(lhs, rhs, "inversion identity failed for {tau}");
    (lhs, rhs)
}
