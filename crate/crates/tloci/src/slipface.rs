//! Finite slipface tables and reconstruction of the permutation they encode.
//!
//! A submodular slipface function is determined by its values on the strip
//! `b in [0, k)`, `a in [a_lo, a_hi]`, provided the strip is wide enough that
//! both boundary rows sit in the asymptotic regime: `s(a, b) = 0` for small
//! `a - b` and `s(a, b) = chi + a - b` for large `a - b`. Values off the strip
//! extend by k-periodicity `s(a + k, b + k) = s(a, b)`.

use crate::error::{Error, Result};
use crate::perm::AffinePermutation;

/// A finite table of slipface values, the validated input for reconstruction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlipfaceSpec {
    k: usize,
    chi: i64,
    a_lo: i64,
    a_hi: i64,
    /// `values[b][(a - a_lo) as usize] = s(a, b)` for `b in [0, k)`.
    values: Vec<Vec<i64>>,
}

impl SlipfaceSpec {
    /// Wraps a raw table. Dimension checks only; call [`SlipfaceSpec::validate`]
    /// for the semantic checks.
    pub fn new(k: usize, chi: i64, a_lo: i64, a_hi: i64, values: Vec<Vec<i64>>) -> Result<Self> {
        if k == 0 {
            return Err(Error::NonPositivePeriod(0));
        }
        if values.len() != k || a_hi < a_lo {
            return Err(Error::WindowLength {
                got: values.len(),
                expected: k,
            });
        }
        let width = (a_hi - a_lo + 1) as usize;
        for column in &values {
            if column.len() != width {
                return Err(Error::WindowLength {
                    got: column.len(),
                    expected: width,
                });
            }
        }
        Ok(Self {
            k,
            chi,
            a_lo,
            a_hi,
            values,
        })
    }

    /// Tabulates the slipface of a known permutation on a strip wide enough
    /// for reconstruction: `a` ranges over the window span padded by
    /// `2 * deviation + 2k` on both sides.
    pub fn from_permutation(tau: &AffinePermutation) -> Self {
        let k = tau.k();
        let margin = 2 * tau.deviation() + 2 * k as i64;
        let a_lo = tau.window().iter().min().copied().unwrap_or(0) - margin;
        let a_hi = tau.window().iter().max().copied().unwrap_or(0) + margin + k as i64;
        let values = (0..k as i64)
            .map(|b| (a_lo..=a_hi).map(|a| tau.slipface(a, b)).collect())
            .collect();
        Self {
            k,
            chi: tau.shift(),
            a_lo,
            a_hi,
            values,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }

    pub fn a_range(&self) -> (i64, i64) {
        (self.a_lo, self.a_hi)
    }

    /// Table lookup with the k-periodic extension in `b`; `None` when the
    /// shifted `a` falls outside the stored strip.
    pub fn get(&self, a: i64, b: i64) -> Option<i64> {
        let k = self.k as i64;
        let q = b.div_euclid(k);
        let (a, b) = (a - q * k, b.rem_euclid(k));
        if a < self.a_lo || a > self.a_hi {
            return None;
        }
        Some(self.values[b as usize][(a - self.a_lo) as usize])
    }

    pub fn set(&mut self, a: i64, b: i64, value: i64) {
        let k = self.k as i64;
        let q = b.div_euclid(k);
        let (a, b) = (a - q * k, b.rem_euclid(k));
        assert!(a >= self.a_lo && a <= self.a_hi, "cell outside table");
        self.values[b as usize][(a - self.a_lo) as usize] = value;
    }

    /// Checks non-negativity, the boundary asymptotics, and submodularity on
    /// the strip. The column step `b -> b + 1` at `b = k - 1` wraps through
    /// the periodic extension.
    pub fn validate(&self) -> Result<()> {
        let k = self.k as i64;
        for b in 0..k {
            let lo = self.get(self.a_lo, b).unwrap();
            if lo != 0 {
                return Err(Error::SlipfaceValidation {
                    rule: "vanishing asymptotics (s = 0 on the low boundary row)",
                    a: self.a_lo,
                    b,
                });
            }
            let hi = self.get(self.a_hi, b).unwrap();
            if hi != self.chi + self.a_hi - b {
                return Err(Error::SlipfaceValidation {
                    rule: "linear asymptotics (s = chi + a - b on the high boundary row)",
                    a: self.a_hi,
                    b,
                });
            }
            for a in self.a_lo..=self.a_hi {
                if self.get(a, b).unwrap() < 0 {
                    return Err(Error::SlipfaceValidation {
                        rule: "non-negativity",
                        a,
                        b,
                    });
                }
            }
        }
        // Submodularity: s(a+1,b) - s(a,b) - s(a+1,b+1) + s(a,b+1) >= 0
        // wherever all four cells are available.
        for b in 0..k {
            for a in self.a_lo..self.a_hi {
                let cells = [
                    self.get(a + 1, b),
                    self.get(a, b),
                    self.get(a + 1, b + 1),
                    self.get(a, b + 1),
                ];
                if let [Some(x), Some(y), Some(z), Some(w)] = cells {
                    if x - y - z + w < 0 {
                        return Err(Error::SlipfaceValidation {
                            rule: "submodularity",
                            a,
                            b,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Recovers the unique permutation whose slipface matches this table:
    /// `tau(b) = min { a : s(a+1, b) > s(a+1, b+1) }` for each window column,
    /// then a full cross-check of every stored cell.
    pub fn reconstruct(&self) -> Result<AffinePermutation> {
        self.validate()?;
        let k = self.k as i64;
        let mut window = Vec::with_capacity(self.k);
        for b in 0..k {
            let mut found = None;
            for a in self.a_lo..self.a_hi {
                let here = self.get(a + 1, b);
                let next = self.get(a + 1, b + 1);
                if let (Some(x), Some(y)) = (here, next) {
                    if x > y {
                        found = Some(a);
                        break;
                    }
                }
            }
            match found {
                Some(a) => window.push(a),
                None => return Err(Error::TableTooNarrow { b }),
            }
        }
        let tau = AffinePermutation::from_window(self.k, window).map_err(|_| {
            Error::SlipfaceValidation {
                rule: "column minima do not form a window",
                a: self.a_lo,
                b: 0,
            }
        })?;
        if tau.shift() != self.chi {
            return Err(Error::SlipfaceValidation {
                rule: "reconstructed shift disagrees with chi",
                a: self.a_lo,
                b: 0,
            });
        }
        for b in 0..k {
            for a in self.a_lo..=self.a_hi {
                if tau.slipface(a, b) != self.get(a, b).unwrap() {
                    return Err(Error::SlipfaceValidation {
                        rule: "table does not match any permutation slipface",
                        a,
                        b,
                    });
                }
            }
        }
        Ok(tau)
    }
}
