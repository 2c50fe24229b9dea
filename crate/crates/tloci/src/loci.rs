//! Locus-level queries: membership, dimension and point counts, the shuffle
//! poset, codimension-one covers, and splitting types.

use crate::demazure::bruhat_leq;
use crate::error::{Error, Result};
use crate::perm::AffinePermutation;
use crate::words::{count_reduced_words, inv_k, normalize_to_core};

/// Dimension bookkeeping for one locus on a genus-g curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocusProfile {
    pub tau: AffinePermutation,
    pub genus: u64,
    /// Degree of the bundles in the locus, `chi + g`.
    pub degree: i64,
    pub inversions: usize,
    pub nonempty: bool,
    /// `g - inv` when non-empty.
    pub dim: Option<u64>,
    /// Number of points when the dimension is zero: the reduced-word count of
    /// the shift-normalized permutation.
    pub points: Option<u128>,
}

/// Whether the locus of `lambda` sits inside the locus of `tau`: equal shifts
/// and `tau <= lambda`.
pub fn in_locus(tau: &AffinePermutation, lambda: &AffinePermutation) -> Result<bool> {
    bruhat_leq(tau, lambda)
}

pub fn locus_profile(tau: &AffinePermutation, genus: u64) -> LocusProfile {
    let inversions = inv_k(tau);
    let nonempty = genus >= inversions as u64;
    let dim = nonempty.then(|| genus - inversions as u64);
    let points = (dim == Some(0)).then(|| {
        count_reduced_words(&normalize_to_core(tau)).expect("normalized permutation has shift zero")
    });
    LocusProfile {
        tau: tau.clone(),
        genus,
        degree: tau.shift() + genus as i64,
        inversions,
        nonempty,
        dim,
        points,
    }
}

/// The poset of all window rearrangements of a sorted permutation, graded by
/// locus dimension. Nodes are sorted lexicographically by window; edges go
/// from each node to the nodes covering it (one more inversion, Bruhat
/// comparable).
#[derive(Debug, Clone)]
pub struct ShufflePoset {
    nodes: Vec<(AffinePermutation, Option<u64>)>,
    /// `(lower, upper)` index pairs: `upper` covers `lower` within the set.
    edges: Vec<(usize, usize)>,
    genus: u64,
}

impl ShufflePoset {
    pub fn nodes(&self) -> &[(AffinePermutation, Option<u64>)] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }
}

pub fn shuffle_poset(tau: &AffinePermutation, genus: u64) -> Result<ShufflePoset> {
    if !tau.is_sorted() {
        return Err(Error::UnsortedWindow);
    }
    let k = tau.k();
    let mut windows = Vec::new();
    permutations(tau.window(), &mut Vec::new(), &mut vec![false; k], &mut windows);
    windows.sort_unstable();
    windows.dedup();
    let nodes: Vec<(AffinePermutation, Option<u64>)> = windows
        .into_iter()
        .map(|w| {
            let sigma = AffinePermutation::from_window(k, w).expect("rearranged residues stay distinct");
            let dim = locus_profile(&sigma, genus).dim;
            (sigma, dim)
        })
        .collect();
    let mut edges = Vec::new();
    for (i, (lo, _)) in nodes.iter().enumerate() {
        for (j, (hi, _)) in nodes.iter().enumerate() {
            if inv_k(hi) == inv_k(lo) + 1 && bruhat_leq(lo, hi)? {
                edges.push((i, j));
            }
        }
    }
    Ok(ShufflePoset {
        nodes,
        edges,
        genus,
    })
}

fn permutations(
    entries: &[i64],
    current: &mut Vec<i64>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<i64>>,
) {
    if current.len() == entries.len() {
        out.push(current.clone());
        return;
    }
    for i in 0..entries.len() {
        if !used[i] {
            used[i] = true;
            current.push(entries[i]);
            permutations(entries, current, used, out);
            current.pop();
            used[i] = false;
        }
    }
}

/// One codimension-one degeneration: the covering permutation together with
/// the two window slots it moves and the transfer amount.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverDatum {
    pub tau_prime: AffinePermutation,
    pub j_minus: usize,
    pub j_plus: usize,
    pub delta: i64,
}

/// All permutations directly above `tau`: equal shift, one more inversion.
///
/// Candidates come from the two-slot characterization (`j-` loses `delta`,
/// `j+` gains it, `delta = tau(j-) - tau(j+) mod k`) and are filtered by the
/// inversion count; each survivor is checked against the slipface equalities
/// that hold across a codimension-one degeneration.
pub fn codim1_covers(tau: &AffinePermutation) -> Vec<CoverDatum> {
    let k = tau.k();
    let ki = k as i64;
    let inversions = inv_k(tau);
    let mut covers = Vec::new();
    for j_minus in 0..k {
        for j_plus in 0..k {
            if j_minus == j_plus {
                continue;
            }
            let lo = tau.window()[j_minus];
            let hi = tau.window()[j_plus];
            let delta = if j_minus < j_plus {
                // A single residue-compatible transfer below k.
                let d = (lo - hi).rem_euclid(ki);
                if d == 0 || lo >= hi {
                    continue;
                }
                d
            } else {
                let d = lo - hi;
                if d <= 0 {
                    continue;
                }
                d
            };
            let mut window = tau.window().to_vec();
            window[j_minus] -= delta;
            window[j_plus] += delta;
            let tau_prime = match AffinePermutation::from_window(k, window) {
                Ok(p) => p,
                Err(_) => continue,
            };
            if inv_k(&tau_prime) != inversions + 1 {
                continue;
            }
            debug_assert_eq!(tau_prime.shift(), tau.shift());
            assert!(cover_equalities_hold(tau, &tau_prime, j_minus, j_plus));
            covers.push(CoverDatum {
                tau_prime,
                j_minus,
                j_plus,
                delta,
            });
        }
    }
    covers.sort_by(|a, b| a.tau_prime.window().cmp(b.tau_prime.window()));
    covers
}

/// The three slipface equalities satisfied across a codimension-one cover.
pub fn cover_equalities_hold(
    tau: &AffinePermutation,
    tau_prime: &AffinePermutation,
    j_minus: usize,
    j_plus: usize,
) -> bool {
    let k = tau.k();
    for j in 0..k {
        let a = tau.evaluate(j as i64) + 1;
        if tau.slipface(a, j as i64) != tau_prime.slipface(a, j as i64) {
            return false;
        }
    }
    for j in 0..k {
        let a = tau.evaluate(j as i64) + 1;
        let b = j as i64;
        if j_minus < j_plus {
            if j != j_plus && tau_prime.slipface(a, b) != tau_prime.slipface(a, b + 1) + 1 {
                return false;
            }
        } else if j != j_minus && tau_prime.slipface(a, b) != tau_prime.slipface(a - 1, b) + 1 {
            return false;
        }
    }
    let a = tau_prime.evaluate(j_plus as i64) + 1;
    tau.slipface(a, j_plus as i64) == tau_prime.slipface(a, j_plus as i64)
}

/// A splitting type: a nondecreasing integer vector of length k.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplittingType {
    k: usize,
    entries: Vec<i64>,
}

impl SplittingType {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::NonPositivePeriod(0));
        }
        if entries.windows(2).any(|p| p[0] > p[1]) {
            return Err(Error::UnsortedWindow);
        }
        Ok(Self {
            k: entries.len(),
            entries,
        })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }
}

/// The splitting type prescribed by a permutation, recovered from the column
/// differences of its slipface along multiples of k: the number of entries at
/// least `-a` is `s(ak + 1, 0) - s((a-1)k + 1, 0)`.
pub fn splitting_type(tau: &AffinePermutation) -> SplittingType {
    let k = tau.k() as i64;
    let bound = 2 * tau.deviation() + 2;
    let diff = |a: i64| tau.slipface(a * k + 1, 0) - tau.slipface((a - 1) * k + 1, 0);
    let mut entries = Vec::with_capacity(tau.k());
    // diff climbs from 0 to k; each unit of growth at level a contributes an
    // entry -a.
    let mut prev = diff(-bound);
    debug_assert_eq!(prev, 0);
    for a in -bound + 1..=bound {
        let here = diff(a);
        for _ in 0..(here - prev) {
            entries.push(-a);
        }
        prev = here;
        if here == k {
            break;
        }
    }
    debug_assert_eq!(entries.len(), tau.k());
    entries.reverse();
    SplittingType::new(entries).expect("entries are emitted in nonincreasing -a order")
}

/// Codimension of the splitting locus: `sum over ordered pairs of
/// max(e_j - e_i - 1, 0)`.
pub fn splitting_codim(e: &SplittingType) -> i64 {
    let mut total = 0;
    for &ei in e.entries() {
        for &ej in e.entries() {
            total += (ej - ei - 1).max(0);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::{random_perm, rng};
    use rand::seq::SliceRandom;

    fn perm(k: usize, w: &[i64]) -> AffinePermutation {
        AffinePermutation::from_window(k, w.to_vec()).unwrap()
    }

    #[test]
    fn in_locus_examples() {
        let tau = perm(3, &[0, 8, 10]);
        assert!(in_locus(&tau, &tau).unwrap());
        assert!(in_locus(&tau, &perm(3, &[10, 8, 0])).unwrap());
        assert!(!in_locus(&tau, &AffinePermutation::identity(3)).unwrap());
    }

    #[test]
    fn profile_examples() {
        let p = locus_profile(&perm(3, &[0, 8, 10]), 8);
        assert!(p.nonempty);
        assert_eq!(p.dim, Some(3));
        assert_eq!(p.degree, 3);
        assert_eq!(p.points, None);

        let p = locus_profile(&perm(3, &[10, 8, 0]), 8);
        assert_eq!(p.dim, Some(0));
        assert_eq!(p.points, Some(4));

        let p = locus_profile(&perm(3, &[0, 5, 7]), 3);
        assert_eq!(p.dim, Some(0));
        assert_eq!(p.points, Some(1));

        let p = locus_profile(&perm(3, &[0, 5, 7]), 2);
        assert!(!p.nonempty);
        assert_eq!(p.dim, None);
        assert_eq!(p.points, None);
    }

    #[test]
    fn shuffle_poset_small_case() {
        let poset = shuffle_poset(&perm(2, &[0, 1]), 1).unwrap();
        assert_eq!(poset.nodes().len(), 2);
        let dims: Vec<_> = poset.nodes().iter().map(|(_, d)| *d).collect();
        assert_eq!(dims, vec![Some(1), Some(0)]);
        assert_eq!(poset.edges(), &[(0, 1)]);
        assert!(shuffle_poset(&perm(2, &[1, 0]), 1).is_err());
    }

    #[test]
    fn shuffle_poset_identity_window() {
        let poset = shuffle_poset(&AffinePermutation::identity(3), 3).unwrap();
        assert_eq!(poset.nodes().len(), 6);
    }

    #[test]
    fn cover_examples() {
        let covers = codim1_covers(&perm(3, &[0, 8, 10]));
        let windows: Vec<_> = covers
            .iter()
            .map(|c| c.tau_prime.window().to_vec())
            .collect();
        assert!(windows.contains(&vec![8, 0, 10]));
        assert!(windows.contains(&vec![0, 10, 8]));
        for c in &covers {
            assert!(in_locus(&perm(3, &[0, 8, 10]), &c.tau_prime).unwrap());
            assert_eq!(inv_k(&c.tau_prime), inv_k(&perm(3, &[0, 8, 10])) + 1);
        }
    }

    #[test]
    fn maximal_shuffle_has_no_shuffle_covers() {
        // The reverse-sorted window maximizes inversions within its shuffle
        // class, so no cover stays inside the class.
        let covers = codim1_covers(&perm(3, &[10, 8, 0]));
        let class: Vec<Vec<i64>> = {
            let poset = shuffle_poset(&perm(3, &[0, 8, 10]), 8).unwrap();
            poset
                .nodes()
                .iter()
                .map(|(p, _)| p.window().to_vec())
                .collect()
        };
        for c in covers {
            assert!(!class.contains(&c.tau_prime.window().to_vec()));
        }
    }

    /// Bounded exhaustive oracle: scan every window in the entry box and keep
    /// those with equal shift, one more inversion, and grid domination.
    fn covers_brute(tau: &AffinePermutation) -> Vec<Vec<i64>> {
        let k = tau.k();
        let ki = k as i64;
        let lo = tau.window().iter().min().unwrap() - ki;
        let hi = tau.window().iter().max().unwrap() + ki;
        let mut found = Vec::new();
        let mut stack: Vec<Vec<i64>> = vec![vec![]];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == k {
                if let Ok(cand) = AffinePermutation::from_window(k, prefix.clone()) {
                    if cand.shift() == tau.shift()
                        && inv_k(&cand) == inv_k(tau) + 1
                        && crate::demazure::bruhat_leq(tau, &cand).unwrap()
                    {
                        found.push(prefix);
                    }
                }
                continue;
            }
            for v in lo..=hi {
                if prefix
                    .iter()
                    .all(|&p| p.rem_euclid(ki) != v.rem_euclid(ki))
                {
                    let mut next = prefix.clone();
                    next.push(v);
                    stack.push(next);
                }
            }
        }
        found.sort_unstable();
        found
    }

    #[test]
    fn covers_match_bounded_oracle() {
        let mut rng = rng(0x10c1_0001);
        for _ in 0..25 {
            let tau = random_perm(&mut rng, 3, 1);
            let fast: Vec<_> = codim1_covers(&tau)
                .into_iter()
                .map(|c| c.tau_prime.window().to_vec())
                .collect();
            assert_eq!(fast, covers_brute(&tau), "covers of {tau}");
        }
    }

    #[test]
    fn splitting_examples() {
        assert_eq!(splitting_type(&perm(3, &[0, 5, 7])).entries(), &[-3, -2, 0]);
        assert_eq!(splitting_type(&perm(3, &[0, 8, 10])).entries(), &[-4, -3, 0]);
        assert_eq!(splitting_type(&perm(3, &[-2, 8, 12])).entries(), &[-4, -3, 0]);
    }

    #[test]
    fn splitting_codim_examples() {
        assert_eq!(
            splitting_codim(&SplittingType::new(vec![-4, -3, 0]).unwrap()),
            5
        );
        assert_eq!(
            splitting_codim(&SplittingType::new(vec![2, 2, 2]).unwrap()),
            0
        );
        let e = SplittingType::new(vec![-3, -2, 0]).unwrap();
        assert_eq!(splitting_codim(&e), 3);
        assert_eq!(splitting_codim(&e) as usize, inv_k(&perm(3, &[0, 5, 7])));
        assert!(SplittingType::new(vec![0, -1]).is_err());
    }

    #[test]
    fn splitting_type_is_shuffle_invariant() {
        let mut rng = rng(0x10c1_0002);
        for _ in 0..200 {
            let tau = random_perm(&mut rng, 5, 3);
            let expected = splitting_type(&tau);
            let mut window = tau.window().to_vec();
            window.shuffle(&mut rng);
            let shuffled = AffinePermutation::from_window(tau.k(), window).unwrap();
            assert_eq!(splitting_type(&shuffled), expected);
        }
    }

    #[test]
    fn zero_dimensional_points_match_word_counts() {
        let mut rng = rng(0x10c1_0003);
        for _ in 0..60 {
            let tau = random_perm(&mut rng, 4, 2);
            let g = inv_k(&tau) as u64;
            let p = locus_profile(&tau, g);
            assert_eq!(
                p.points,
                Some(count_reduced_words(&normalize_to_core(&tau)).unwrap())
            );
        }
    }
}
