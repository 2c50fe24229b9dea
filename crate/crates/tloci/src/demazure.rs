//! Bruhat order through essential sets, and the Demazure product.
//!
//! The Demazure product of `alpha` and `beta` is the unique permutation whose
//! slipface is the pointwise minimum `min_l [s_alpha(a, l) + s_beta(l, b)]`;
//! it is computed literally from that formula on a finite strip and then
//! reconstructed through the slipface table.

use crate::error::{Error, Result};
use crate::perm::AffinePermutation;
use crate::slipface::SlipfaceSpec;

/// A cell of the essential set, with the column representative `b in [0, k)`;
/// the full set is the orbit under `(a, b) -> (a + k, b + k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EssentialCell {
    pub a: i64,
    pub b: i64,
}

/// All essential cells with `b in [0, k)`: pairs where both the row and the
/// column of the permutation jump.
pub fn essential_set(tau: &AffinePermutation) -> Vec<EssentialCell> {
    let inv = tau.inverse();
    let mut cells = Vec::new();
    for b in 0..tau.k() as i64 {
        let hi = tau.evaluate(b - 1);
        let lo = tau.evaluate(b);
        for a in lo + 1..=hi {
            if inv.evaluate(a - 1) >= b && b > inv.evaluate(a) {
                cells.push(EssentialCell { a, b });
            }
        }
    }
    cells
}

/// Bruhat comparison: equal shifts and slipface domination on the essential
/// set of `alpha`. A shift mismatch means the permutations are incomparable.
pub fn bruhat_leq(alpha: &AffinePermutation, beta: &AffinePermutation) -> Result<bool> {
    Ok(bruhat_witness(alpha, beta)?.is_none())
}

/// `None` when `alpha <= beta`; otherwise an essential cell of `alpha` where
/// domination fails, or the sentinel cell for a shift mismatch.
pub fn bruhat_witness(
    alpha: &AffinePermutation,
    beta: &AffinePermutation,
) -> Result<Option<BruhatFailure>> {
    if alpha.k() != beta.k() {
        return Err(Error::MismatchedK(alpha.k(), beta.k()));
    }
    if alpha.shift() != beta.shift() {
        return Ok(Some(BruhatFailure::ShiftMismatch {
            alpha: alpha.shift(),
            beta: beta.shift(),
        }));
    }
    for cell in essential_set(alpha) {
        if alpha.slipface(cell.a, cell.b) > beta.slipface(cell.a, cell.b) {
            return Ok(Some(BruhatFailure::Cell(cell)));
        }
    }
    Ok(None)
}

/// Why a Bruhat comparison failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BruhatFailure {
    ShiftMismatch { alpha: i64, beta: i64 },
    Cell(EssentialCell),
}

/// The Demazure product, by finite minimization of the defining formula and
/// slipface reconstruction.
pub fn demazure_product(
    alpha: &AffinePermutation,
    beta: &AffinePermutation,
) -> Result<AffinePermutation> {
    if alpha.k() != beta.k() {
        return Err(Error::MismatchedK(alpha.k(), beta.k()));
    }
    let k = alpha.k() as i64;
    let chi = alpha.shift() + beta.shift();
    let dev = alpha.deviation() + beta.deviation();
    let margin = 2 * dev + 2 * k + 2;
    let (a_lo, a_hi) = (-margin, margin + k);
    let reach = dev + k + 1;
    let values = (0..k)
        .map(|b| {
            (a_lo..=a_hi)
                .map(|a| {
                    let lo = a.min(b) - reach;
                    let hi = a.max(b) + reach;
                    let min = (lo..=hi)
                        .map(|l| alpha.slipface(a, l) + beta.slipface(l, b))
                        .min()
                        .expect("range is non-empty");
                    // Outside [lo, hi] the summands are exactly linear and
                    // increasing away from the strip.
                    assert!(alpha.slipface(a, lo - 1) + beta.slipface(lo - 1, b) >= min);
                    assert!(alpha.slipface(a, hi + 1) + beta.slipface(hi + 1, b) >= min);
                    min
                })
                .collect()
        })
        .collect();
    SlipfaceSpec::new(alpha.k(), chi, a_lo, a_hi, values)?.reconstruct()
}

/// Right Demazure multiplication by a simple reflection, in closed form: the
/// ordinary product when `tau` is sorted at `i`, and absorption otherwise.
pub fn demazure_reflection(tau: &AffinePermutation, i: usize) -> Result<AffinePermutation> {
    if tau.is_sorted_at(i)? {
        let sigma = AffinePermutation::simple_reflection(tau.k(), i)?;
        tau.compose(&sigma)
    } else {
        Ok(tau.clone())
    }
}
