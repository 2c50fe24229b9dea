//! Elements of the extended k-affine symmetric group, stored by their window.
//!
//! A permutation `tau` here is a bijection of the integers with
//! `tau(n + k) = tau(n) + k` for all `n`, so it is determined by the window
//! `(tau(0), ..., tau(k-1))`. Bijectivity is equivalent to the window entries
//! having pairwise distinct residues mod k.

use std::fmt;

use crate::error::{Error, Result};

/// An element of the extended k-affine symmetric group.
///
/// Equality is window equality: shuffled windows are distinct permutations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    k: usize,
    window: Vec<i64>,
}

impl AffinePermutation {
    /// Builds a permutation from its window, validating bijectivity.
    pub fn from_window(k: usize, window: Vec<i64>) -> Result<Self> {
        if k == 0 {
            return Err(Error::NonPositivePeriod(k as i64));
        }
        if window.len() != k {
            return Err(Error::WindowLength {
                got: window.len(),
                expected: k,
            });
        }
        let ki = k as i64;
        let mut seen: Vec<Option<i64>> = vec![None; k];
        for &w in &window {
            let r = w.rem_euclid(ki) as usize;
            if let Some(prev) = seen[r] {
                return Err(Error::RepeatedResidue {
                    a: prev,
                    b: w,
                    residue: r as i64,
                    k,
                });
            }
            seen[r] = Some(w);
        }
        Ok(Self { k, window })
    }

    /// The identity permutation, window `(0, 1, ..., k-1)`.
    #[allow(clippy::should_implement_trait)]
    pub fn identity(k: usize) -> Self {
        Self::from_window(k, (0..k as i64).collect()).expect("identity window is valid")
    }

    /// The simple reflection: `n + 1` when `n = i mod k`, `n - 1` when
    /// `n = i + 1 mod k`, and fixed otherwise.
    pub fn simple_reflection(k: usize, i: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::NonPositivePeriod(0));
        }
        // The group on one letter has no generators: i = 0 would have to move
        // n up and down at once.
        if i >= k || k == 1 {
            return Err(Error::IndexOutOfRange { index: i, k });
        }
        let ki = k as i64;
        let window = (0..ki)
            .map(|n| reflect(ki, i as i64, n))
            .collect::<Vec<_>>();
        Self::from_window(k, window)
    }

    /// The translation `m -> m - n`, window `(-n, 1-n, ..., k-1-n)`.
    pub fn translation(k: usize, n: i64) -> Result<Self> {
        if k == 0 {
            return Err(Error::NonPositivePeriod(0));
        }
        Self::from_window(k, (0..k as i64).map(|i| i - n).collect())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn ki(&self) -> i64 {
        self.k as i64
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `tau(n)`, for any integer `n`, via `window[n mod k] + k * floor(n / k)`.
    pub fn evaluate(&self, n: i64) -> i64 {
        let k = self.ki();
        self.window[n.rem_euclid(k) as usize] + k * n.div_euclid(k)
    }

    /// Functional composition: `(self . other)(n) = self(other(n))`, the
    /// rightmost factor applied first. Shifts add.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::MismatchedK(self.k, other.k));
        }
        let window = (0..self.ki())
            .map(|n| self.evaluate(other.evaluate(n)))
            .collect();
        Self::from_window(self.k, window)
    }

    /// The inverse permutation; its shift is the negation of this one's.
    pub fn inverse(&self) -> Self {
        let k = self.ki();
        let mut window = vec![0; self.k];
        for (r, &w) in self.window.iter().enumerate() {
            // tau(r + k t) = w + k t, so the preimage of m = w mod k is r + (m - w).
            let m = w.rem_euclid(k);
            window[m as usize] = r as i64 + m - w;
        }
        Self {
            k: self.k,
            window,
        }
    }

    /// The shift `chi = (k(k-1)/2 - sum(window)) / k`, which equals
    /// `#{n >= 0 : tau(n) < 0} - #{n < 0 : tau(n) >= 0}`.
    pub fn shift(&self) -> i64 {
        let k = self.ki();
        let triangle = k * (k - 1) / 2;
        let sum: i64 = self.window.iter().sum();
        debug_assert_eq!((triangle - sum).rem_euclid(k), 0);
        (triangle - sum) / k
    }

    /// Adds `n` to every window entry (the permutation `m -> tau(m) + n`).
    pub fn add_constant(&self, n: i64) -> Self {
        Self {
            k: self.k,
            window: self.window.iter().map(|w| w + n).collect(),
        }
    }

    /// The slipface function `s(a, b) = #{n >= b : tau(n) < a}`, summed per
    /// residue class in closed form.
    pub fn slipface(&self, a: i64, b: i64) -> i64 {
        let k = self.ki();
        let mut total = 0;
        for (r, &w) in self.window.iter().enumerate() {
            // Positions n = r + k t with n >= b and value w + k t < a:
            // t >= ceil((b - r) / k) and t <= floor((a - 1 - w) / k).
            let t_lo = ceil_div(b - r as i64, k);
            let t_hi = (a - 1 - w).div_euclid(k);
            if t_hi >= t_lo {
                total += t_hi - t_lo + 1;
            }
        }
        total
    }

    /// The complementary count `h(a, b) = s(a, b) - (a - b + chi)`, equal to
    /// `#{n < b : tau(n) >= a}`; always non-negative.
    pub fn deficiency(&self, a: i64, b: i64) -> i64 {
        let h = self.slipface(a, b) - (a - b + self.shift());
        debug_assert!(h >= 0);
        h
    }

    /// Largest displacement `max |tau(i) - i|` over the window; bounds every
    /// finite scan used by the enumeration routines.
    pub fn deviation(&self) -> i64 {
        self.window
            .iter()
            .enumerate()
            .map(|(i, &w)| (w - i as i64).abs())
            .max()
            .unwrap_or(0)
    }

    /// Whether `tau(i) < tau(i + 1)`, reading `tau(k) = tau(0) + k`.
    pub fn is_sorted_at(&self, i: usize) -> Result<bool> {
        if i >= self.k {
            return Err(Error::IndexOutOfRange { index: i, k: self.k });
        }
        let next = if i + 1 == self.k {
            self.window[0] + self.ki()
        } else {
            self.window[i + 1]
        };
        Ok(self.window[i] < next)
    }

    /// Whether the window is strictly increasing.
    pub fn is_sorted(&self) -> bool {
        self.window.windows(2).all(|p| p[0] < p[1])
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &w)| w == i as i64)
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for w in &self.window {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses the shared window text syntax `w0,w1,...,w{k-1}`.
pub fn parse_window(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|part| {
            part.trim().parse::<i64>().map_err(|_| Error::WindowLength {
                got: 0,
                expected: 0,
            })
        })
        .collect::<Result<Vec<_>>>()
        .and_then(|v| {
            if v.is_empty() {
                Err(Error::WindowLength { got: 0, expected: 1 })
            } else {
                Ok(v)
            }
        })
}

pub(crate) fn reflect(k: i64, i: i64, n: i64) -> i64 {
    let r = n.rem_euclid(k);
    if r == i.rem_euclid(k) {
        n + 1
    } else if r == (i + 1).rem_euclid(k) {
        n - 1
    } else {
        n
    }
}

pub(crate) fn ceil_div(x: i64, y: i64) -> i64 {
    debug_assert!(y > 0);
    -((-x).div_euclid(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::{random_perm, rng};
    use rand::Rng;

    fn perm(k: usize, w: &[i64]) -> AffinePermutation {
        AffinePermutation::from_window(k, w.to_vec()).unwrap()
    }

    /// Independent oracle: count `#{n >= b : tau(n) < a}` by scanning a range
    /// wide enough that every contributing n is covered.
    fn slipface_brute(tau: &AffinePermutation, a: i64, b: i64) -> i64 {
        let pad = tau.deviation() + a.abs() + b.abs() + 2 * tau.k() as i64 + 4;
        (b..=b + 2 * pad)
            .filter(|&n| tau.evaluate(n) < a)
            .count() as i64
    }

    /// Independent oracle for the shift, via the sign-change counting
    /// definition over a bounded scan.
    fn shift_brute(tau: &AffinePermutation) -> i64 {
        let pad = tau.deviation() + 2 * tau.k() as i64 + 2;
        let pos = (0..=pad).filter(|&n| tau.evaluate(n) < 0).count() as i64;
        let neg = (-pad..0).filter(|&n| tau.evaluate(n) >= 0).count() as i64;
        pos - neg
    }

    #[test]
    fn from_window_examples() {
        let tau = perm(3, &[0, 8, 10]);
        assert_eq!(tau.shift(), -5);
        let id = perm(3, &[0, 1, 2]);
        assert!(id.is_identity());
        assert_eq!(id.shift(), 0);
        assert_eq!(
            AffinePermutation::from_window(3, vec![0, 3, 5]),
            Err(Error::RepeatedResidue {
                a: 0,
                b: 3,
                residue: 0,
                k: 3
            })
        );
        assert!(AffinePermutation::from_window(0, vec![]).is_err());
        assert!(AffinePermutation::from_window(3, vec![0, 1]).is_err());
    }

    #[test]
    fn simple_reflection_windows() {
        assert_eq!(
            AffinePermutation::simple_reflection(3, 0).unwrap().window(),
            &[1, 0, 2]
        );
        assert_eq!(
            AffinePermutation::simple_reflection(3, 2).unwrap().window(),
            &[-1, 1, 3]
        );
        assert_eq!(
            AffinePermutation::simple_reflection(2, 1).unwrap().window(),
            &[-1, 2]
        );
        assert!(AffinePermutation::simple_reflection(3, 3).is_err());
    }

    #[test]
    fn translation_windows() {
        assert!(AffinePermutation::translation(3, 0).unwrap().is_identity());
        let t = AffinePermutation::translation(3, 1).unwrap();
        assert_eq!(t.window(), &[-1, 0, 1]);
        assert_eq!(t.shift(), 1);
        let t = AffinePermutation::translation(2, -2).unwrap();
        assert_eq!(t.window(), &[2, 3]);
        assert_eq!(t.shift(), -2);
    }

    #[test]
    fn evaluate_examples() {
        let tau = perm(3, &[0, 8, 10]);
        assert_eq!(tau.evaluate(4), 11);
        assert_eq!(tau.evaluate(-1), 7);
        assert_eq!(AffinePermutation::identity(3).evaluate(-7), -7);
    }

    #[test]
    fn compose_examples() {
        let s0 = AffinePermutation::simple_reflection(3, 0).unwrap();
        let s1 = AffinePermutation::simple_reflection(3, 1).unwrap();
        let s2 = AffinePermutation::simple_reflection(3, 2).unwrap();
        assert!(s0.compose(&s0).unwrap().is_identity());
        let tau = perm(3, &[0, 5, 7]);
        assert_eq!(tau.compose(&s0).unwrap().window(), &[5, 0, 7]);
        let prod = s0.compose(&s1).unwrap().compose(&s2).unwrap();
        assert_eq!(prod.window(), &[-3, 2, 4]);
        let other_k = AffinePermutation::identity(2);
        assert_eq!(tau.compose(&other_k), Err(Error::MismatchedK(3, 2)));
    }

    #[test]
    fn inverse_examples() {
        assert!(AffinePermutation::identity(3).inverse().is_identity());
        for i in 0..3 {
            let s = AffinePermutation::simple_reflection(3, i).unwrap();
            assert_eq!(s.inverse(), s);
        }
        for n in [-2, 0, 3] {
            let t = AffinePermutation::translation(4, n).unwrap();
            assert_eq!(t.inverse(), AffinePermutation::translation(4, -n).unwrap());
        }
    }

    #[test]
    fn shift_examples() {
        assert_eq!(perm(3, &[0, 8, 10]).shift(), -5);
        assert_eq!(perm(3, &[0, 5, 7]).shift(), -3);
        assert_eq!(AffinePermutation::identity(5).shift(), 0);
    }

    #[test]
    fn slipface_examples() {
        let tau = perm(3, &[0, 5, 7]);
        assert_eq!(tau.slipface(1, 0), 1);
        assert_eq!(tau.slipface(4, 0), 2);
        let id = AffinePermutation::identity(3);
        for a in -6..=6 {
            for b in -6..=6 {
                assert_eq!(id.slipface(a, b), (a - b).max(0));
            }
        }
    }

    #[test]
    fn slipface_matches_brute_force() {
        let mut rng = rng(0x5eed_0001);
        for _ in 0..200 {
            let tau = random_perm(&mut rng, 6, 5);
            let a = rng.gen_range(-20..=20);
            let b = rng.gen_range(-20..=20);
            assert_eq!(tau.slipface(a, b), slipface_brute(&tau, a, b), "{tau} at ({a},{b})");
        }
    }

    #[test]
    fn shift_matches_counting_definition() {
        let mut rng = rng(0x5eed_0002);
        for _ in 0..300 {
            let tau = random_perm(&mut rng, 6, 5);
            assert_eq!(tau.shift(), shift_brute(&tau), "{tau}");
        }
    }

    #[test]
    fn k_invariance() {
        let mut rng = rng(0x5eed_0003);
        for _ in 0..200 {
            let tau = random_perm(&mut rng, 6, 5);
            let k = tau.k() as i64;
            let a = rng.gen_range(-15..=15);
            let b = rng.gen_range(-15..=15);
            assert_eq!(tau.slipface(a + k, b + k), tau.slipface(a, b));
        }
    }

    #[test]
    fn twist_laws() {
        let mut rng = rng(0x5eed_0004);
        for _ in 0..100 {
            let tau = random_perm(&mut rng, 5, 4);
            let k = tau.k();
            let n = rng.gen_range(-4..=4i64);
            let iota = AffinePermutation::translation(k, n).unwrap();
            let pre = tau.compose(&iota).unwrap();
            let post = iota.compose(&tau).unwrap();
            for _ in 0..8 {
                let a = rng.gen_range(-12..=12);
                let b = rng.gen_range(-12..=12);
                assert_eq!(post.slipface(a, b), tau.slipface(a + n, b));
                assert_eq!(pre.slipface(a, b), tau.slipface(a, b - n));
            }
        }
    }

    #[test]
    fn serre_dual_identity() {
        let mut rng = rng(0x5eed_0005);
        for _ in 0..100 {
            let tau = random_perm(&mut rng, 6, 5);
            let inv = tau.inverse();
            assert_eq!(inv.shift(), -tau.shift());
            for _ in 0..8 {
                let a = rng.gen_range(-15..=15);
                let b = rng.gen_range(-15..=15);
                assert_eq!(
                    inv.slipface(b, a),
                    tau.slipface(a, b) - (a - b + tau.shift()),
                );
                assert_eq!(inv.slipface(b, a), tau.deficiency(a, b));
            }
        }
    }

    #[test]
    fn inverse_composes_to_identity() {
        let mut rng = rng(0x5eed_0006);
        for _ in 0..200 {
            let tau = random_perm(&mut rng, 6, 5);
            assert!(tau.inverse().compose(&tau).unwrap().is_identity());
            assert!(tau.compose(&tau.inverse()).unwrap().is_identity());
        }
    }

    #[test]
    fn shift_adds_under_composition() {
        let mut rng = rng(0x5eed_0007);
        for _ in 0..100 {
            let a = random_perm(&mut rng, 5, 4);
            let mut b = random_perm(&mut rng, 5, 4);
            while b.k() != a.k() {
                b = random_perm(&mut rng, 5, 4);
            }
            let c = a.compose(&b).unwrap();
            assert_eq!(c.shift(), a.shift() + b.shift());
            for n in -7..=7 {
                assert_eq!(c.evaluate(n), a.evaluate(b.evaluate(n)));
            }
        }
    }

    #[test]
    fn evaluate_is_periodic() {
        let mut rng = rng(0x5eed_0008);
        for _ in 0..100 {
            let tau = random_perm(&mut rng, 6, 5);
            let k = tau.k() as i64;
            let n = rng.gen_range(-30..=30);
            assert_eq!(tau.evaluate(n + k), tau.evaluate(n) + k);
        }
    }

    #[test]
    fn parse_window_syntax() {
        assert_eq!(parse_window("0,8,10").unwrap(), vec![0, 8, 10]);
        assert_eq!(parse_window("5,3,-5").unwrap(), vec![5, 3, -5]);
        assert!(parse_window("a,b").is_err());
        assert!(parse_window("").is_err());
    }
}
