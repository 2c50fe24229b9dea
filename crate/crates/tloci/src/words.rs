//! k-inversions, reduced words, truncations, and braid moves.
//!
//! Words are stored in application order: `letters[0]` acts first, so the
//! group element is `s[m_l] . s[m_{l-1}] ... s[m_1]` read right to left on the
//! page. `display_order` gives the page order.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{reflect, AffinePermutation};

/// Counts inversion classes and returns one representative `(a, b)` per class,
/// normalized so `a` lies in `[0, k)`.
pub fn k_inversions(tau: &AffinePermutation) -> (usize, Vec<(i64, i64)>) {
    let k = tau.k() as i64;
    let spread = tau.window().iter().max().unwrap() - tau.window().iter().min().unwrap();
    let mut reps = Vec::new();
    for a in 0..k {
        let ta = tau.evaluate(a);
        for b in a + 1..=a + spread + 2 * k {
            if ta > tau.evaluate(b) {
                reps.push((a, b));
            }
        }
    }
    (reps.len(), reps)
}

/// The total inversion count via the closed pairwise formula.
pub fn inv_k(tau: &AffinePermutation) -> usize {
    let k = tau.k();
    let mut total = 0;
    for j1 in 0..k {
        for j2 in j1 + 1..k {
            total += pairwise_inversions(tau, j1, j2).expect("indices in range");
        }
    }
    total
}

/// Number of inversion classes between the residue classes of `j1` and `j2`,
/// by the floor formula; symmetric in its index pair.
pub fn pairwise_inversions(tau: &AffinePermutation, j1: usize, j2: usize) -> Result<usize> {
    let k = tau.k();
    if j1 >= k {
        return Err(Error::IndexOutOfRange { index: j1, k });
    }
    if j2 >= k {
        return Err(Error::IndexOutOfRange { index: j2, k });
    }
    if j1 == j2 {
        return Err(Error::IndexOutOfRange { index: j2, k });
    }
    let ki = k as i64;
    let (x, y) = (tau.evaluate(j1 as i64), tau.evaluate(j2 as i64));
    let count = if x > y {
        (x - y).div_euclid(ki) + i64::from(j1 < j2)
    } else {
        (y - x).div_euclid(ki) + i64::from(j1 > j2)
    };
    Ok(count as usize)
}

/// Moves `tau` into the shift-zero subgroup by adding its shift to every
/// window entry; inversions are unchanged.
pub fn normalize_to_core(tau: &AffinePermutation) -> AffinePermutation {
    tau.add_constant(tau.shift())
}

/// A reduced word in the simple reflections, stored in application order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    k: usize,
    letters: Vec<usize>,
}

impl ReducedWord {
    /// Validates that each letter raises the inversion count by exactly one.
    pub fn new(k: usize, letters: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::NonPositivePeriod(0));
        }
        let mut current = AffinePermutation::identity(k);
        let mut inv = 0usize;
        for (step, &m) in letters.iter().enumerate() {
            if m >= k {
                return Err(Error::IndexOutOfRange { index: m, k });
            }
            current = left_multiply(&current, m);
            inv += 1;
            if inv_k(&current) != inv {
                return Err(Error::NotReduced { step, letter: m });
            }
        }
        Ok(Self { k, letters })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Letters in application order (first applied first).
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Letters in page order, matching the right-to-left product notation.
    pub fn display_order(&self) -> Vec<usize> {
        self.letters.iter().rev().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The group element the word multiplies out to.
    pub fn product(&self) -> AffinePermutation {
        self.letters
            .iter()
            .fold(AffinePermutation::identity(self.k), |acc, &m| {
                left_multiply(&acc, m)
            })
    }

    /// Swaps the letters at `position` and `position + 1` (1-based, as the
    /// subscripts of the word). Requires the letters to commute, i.e. their
    /// difference is not 0 or +-1 mod k.
    pub fn flip(&self, position: usize) -> Result<Self> {
        let i = self.check_position(position, 2, "flip")?;
        let k = self.k as i64;
        let d = (self.letters[i] as i64 - self.letters[i + 1] as i64).rem_euclid(k);
        if d == 0 {
            return Err(Error::AdjacentEqualLetters(position));
        }
        if d == 1 || d == k - 1 {
            return Err(Error::MoveInapplicable {
                kind: "flip",
                position,
                reason: "letters differ by 1 mod k",
            });
        }
        let mut letters = self.letters.clone();
        letters.swap(i, i + 1);
        Ok(Self { k: self.k, letters })
    }

    /// Rewrites the length-3 pattern `(a, b, a)` starting at `position`
    /// (1-based) as `(b, a, b)`, for adjacent letters `a, b`. Not available
    /// for k = 2, which has no braid relation of length three.
    pub fn shuffle(&self, position: usize) -> Result<Self> {
        if self.k == 2 {
            return Err(Error::ShuffleRank(2));
        }
        let i = self.check_position(position, 3, "shuffle")?;
        let k = self.k as i64;
        let (a, b, c) = (self.letters[i], self.letters[i + 1], self.letters[i + 2]);
        if a != c {
            return Err(Error::MoveInapplicable {
                kind: "shuffle",
                position,
                reason: "outer letters differ",
            });
        }
        let d = (a as i64 - b as i64).rem_euclid(k);
        if d != 1 && d != k - 1 {
            return Err(Error::MoveInapplicable {
                kind: "shuffle",
                position,
                reason: "letters are not adjacent mod k",
            });
        }
        let mut letters = self.letters.clone();
        letters[i] = b;
        letters[i + 1] = a;
        letters[i + 2] = b;
        Ok(Self { k: self.k, letters })
    }

    fn check_position(&self, position: usize, span: usize, kind: &'static str) -> Result<usize> {
        if position == 0 || position + span - 1 > self.letters.len() {
            return Err(Error::MoveInapplicable {
                kind,
                position,
                reason: "position out of range",
            });
        }
        Ok(position - 1)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for m in self.display_order() {
            write!(f, "σ{m}")?;
        }
        Ok(())
    }
}

/// Left multiplication by a simple reflection: every window value moves along
/// the reflection.
pub(crate) fn left_multiply(tau: &AffinePermutation, m: usize) -> AffinePermutation {
    let k = tau.k() as i64;
    let window = tau
        .window()
        .iter()
        .map(|&w| reflect(k, m as i64, w))
        .collect();
    AffinePermutation::from_window(tau.k(), window).expect("reflection preserves windows")
}

/// Right descents: positions `i` with `alpha(i) > alpha(i+1)`, wrapping via
/// `alpha(k) = alpha(0) + k`.
fn right_descents(alpha: &AffinePermutation) -> Vec<usize> {
    (0..alpha.k())
        .filter(|&i| !alpha.is_sorted_at(i).expect("index in range"))
        .collect()
}

/// Right multiplication by a simple reflection: swaps window slots `i` and
/// `i + 1`, wrapping with a k-shift at the seam.
fn right_multiply(alpha: &AffinePermutation, i: usize) -> AffinePermutation {
    let k = alpha.k();
    let mut window = alpha.window().to_vec();
    if i + 1 == k {
        let first = window[0];
        window[0] = window[k - 1] - k as i64;
        window[k - 1] = first + k as i64;
    } else {
        window.swap(i, i + 1);
    }
    AffinePermutation::from_window(k, window).expect("slot swap preserves windows")
}

/// Streams every reduced word of a shift-zero element exactly once, in
/// lexicographic order of the application-order letters.
pub struct ReducedWords {
    k: usize,
    stack: Vec<(AffinePermutation, Vec<usize>)>,
}

impl ReducedWords {
    pub fn new(alpha: &AffinePermutation) -> Result<Self> {
        if alpha.shift() != 0 {
            return Err(Error::NonzeroShift(alpha.shift()));
        }
        Ok(Self {
            k: alpha.k(),
            stack: vec![(alpha.clone(), Vec::new())],
        })
    }
}

impl Iterator for ReducedWords {
    type Item = ReducedWord;

    fn next(&mut self) -> Option<Self::Item> {
        while let Some((alpha, prefix)) = self.stack.pop() {
            if alpha.is_identity() {
                return Some(ReducedWord {
                    k: self.k,
                    letters: prefix,
                });
            }
            for i in right_descents(&alpha).into_iter().rev() {
                let mut word = prefix.clone();
                word.push(i);
                self.stack.push((right_multiply(&alpha, i), word));
            }
        }
        None
    }
}

/// Number of reduced words, by memoized descent recursion; does not
/// materialize the words.
pub fn count_reduced_words(alpha: &AffinePermutation) -> Result<u128> {
    if alpha.shift() != 0 {
        return Err(Error::NonzeroShift(alpha.shift()));
    }
    let mut memo: HashMap<Vec<i64>, u128> = HashMap::new();
    Ok(count_rec(alpha, &mut memo))
}

fn count_rec(alpha: &AffinePermutation, memo: &mut HashMap<Vec<i64>, u128>) -> u128 {
    if alpha.is_identity() {
        return 1;
    }
    if let Some(&n) = memo.get(alpha.window()) {
        return n;
    }
    let n = right_descents(alpha)
        .into_iter()
        .map(|i| count_rec(&right_multiply(alpha, i), memo))
        .sum();
    memo.insert(alpha.window().to_vec(), n);
    n
}

/// One multiplication step of a truncation tower.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncationStep {
    /// The truncation after this step.
    pub permutation: AffinePermutation,
    /// Window index whose value went up by one.
    pub j_plus: usize,
    /// Window index whose value went down by one.
    pub j_minus: usize,
}

/// The tower of truncations of a reduced word together with the increasing
/// and decreasing indices of every step.
#[derive(Debug, Clone)]
pub struct TruncationProfile {
    word: ReducedWord,
    steps: Vec<TruncationStep>,
}

impl TruncationProfile {
    pub fn new(word: &ReducedWord) -> Result<Self> {
        let k = word.k();
        let ki = k as i64;
        let mut current = AffinePermutation::identity(k);
        let mut steps = Vec::with_capacity(word.len());
        for (t, &m) in word.letters().iter().enumerate() {
            let j_plus = (0..k)
                .find(|&j| current.evaluate(j as i64).rem_euclid(ki) == m as i64)
                .expect("window residues are complete");
            let j_minus = (0..k)
                .find(|&j| current.evaluate(j as i64).rem_euclid(ki) == (m as i64 + 1) % ki)
                .expect("window residues are complete");
            let next = left_multiply(&current, m);
            if inv_k(&next) != t + 1 {
                return Err(Error::NotReduced { step: t, letter: m });
            }
            debug_assert_eq!(next.evaluate(j_plus as i64), current.evaluate(j_plus as i64) + 1);
            debug_assert_eq!(next.evaluate(j_minus as i64), current.evaluate(j_minus as i64) - 1);
            // The increasing value sits one above the decreasing value mod k,
            // and strictly above it in absolute terms.
            let up = next.evaluate(j_plus as i64);
            let down = next.evaluate(j_minus as i64);
            assert_eq!((up - down).rem_euclid(ki), 1 % ki);
            assert!(k == 1 || down < up);
            current = next;
            steps.push(TruncationStep {
                permutation: current.clone(),
                j_plus,
                j_minus,
            });
        }
        Ok(Self {
            word: word.clone(),
            steps,
        })
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    /// `T^{<= t}`; step 0 is the identity.
    pub fn truncation(&self, t: usize) -> AffinePermutation {
        if t == 0 {
            AffinePermutation::identity(self.word.k())
        } else {
            self.steps[t - 1].permutation.clone()
        }
    }

    pub fn steps(&self) -> &[TruncationStep] {
        &self.steps
    }
}

/// Kinds of braid moves on reduced words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidMove {
    Flip,
    Shuffle,
}

pub fn apply_braid_move(word: &ReducedWord, kind: BraidMove, position: usize) -> Result<ReducedWord> {
    match kind {
        BraidMove::Flip => word.flip(position),
        BraidMove::Shuffle => word.shuffle(position),
    }
}

/// The graph on all reduced words of an element whose edges are single braid
/// moves.
#[derive(Debug, Clone)]
pub struct BraidGraph {
    words: Vec<ReducedWord>,
    edges: Vec<(usize, usize)>,
}

impl BraidGraph {
    pub fn new(alpha: &AffinePermutation) -> Result<Self> {
        let words: Vec<ReducedWord> = ReducedWords::new(alpha)?.collect();
        let index: HashMap<Vec<usize>, usize> = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.letters().to_vec(), i))
            .collect();
        let mut edges = Vec::new();
        for (i, word) in words.iter().enumerate() {
            for position in 1..=word.len() {
                for kind in [BraidMove::Flip, BraidMove::Shuffle] {
                    if let Ok(next) = apply_braid_move(word, kind, position) {
                        let j = index[next.letters()];
                        if i < j {
                            edges.push((i, j));
                        }
                    }
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self { words, edges })
    }

    pub fn words(&self) -> &[ReducedWord] {
        &self.words
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        if self.words.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.words.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let other = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::{random_core_perm, rng};
    use rand::Rng;

    fn perm(k: usize, w: &[i64]) -> AffinePermutation {
        AffinePermutation::from_window(k, w.to_vec()).unwrap()
    }

    #[test]
    fn inversion_examples() {
        let (count, reps) = k_inversions(&perm(3, &[0, 8, 10]));
        assert_eq!(count, 5);
        let expected: Vec<(i64, i64)> = vec![(1, 3), (1, 6), (2, 3), (2, 6), (2, 9)];
        let mut sorted = reps.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, expected);

        assert_eq!(k_inversions(&AffinePermutation::identity(4)), (0, vec![]));
        assert_eq!(k_inversions(&perm(3, &[0, 5, 7])).0, 3);
    }

    #[test]
    fn pairwise_inversion_formula() {
        let id = AffinePermutation::identity(3);
        for j1 in 0..3 {
            for j2 in 0..3 {
                if j1 != j2 {
                    assert_eq!(pairwise_inversions(&id, j1, j2).unwrap(), 0);
                }
            }
        }
        let tau = perm(3, &[0, 8, 10]);
        assert_eq!(pairwise_inversions(&tau, 0, 1).unwrap(), 2);
        assert_eq!(pairwise_inversions(&tau, 0, 2).unwrap(), 3);
        assert_eq!(pairwise_inversions(&tau, 1, 2).unwrap(), 0);
        assert!(pairwise_inversions(&tau, 1, 1).is_err());
    }

    #[test]
    fn pairwise_sums_to_inversion_count_and_is_symmetric() {
        let mut rng = rng(0x0a0b_0001);
        for _ in 0..200 {
            let tau = crate::test_support::random_perm(&mut rng, 6, 4);
            let k = tau.k();
            let mut total = 0;
            for j1 in 0..k {
                for j2 in j1 + 1..k {
                    let f = pairwise_inversions(&tau, j1, j2).unwrap();
                    assert_eq!(f, pairwise_inversions(&tau, j2, j1).unwrap());
                    total += f;
                }
            }
            assert_eq!(total, k_inversions(&tau).0, "{tau}");
            assert_eq!(total, inv_k(&tau));
        }
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_to_core(&perm(3, &[10, 8, 0])).window(), &[5, 3, -5]);
        assert_eq!(normalize_to_core(&perm(3, &[0, 5, 7])).window(), &[-3, 2, 4]);
        let id = AffinePermutation::identity(3);
        assert_eq!(normalize_to_core(&id), id);
        let mut rng = rng(0x0a0b_0002);
        for _ in 0..100 {
            let tau = crate::test_support::random_perm(&mut rng, 6, 4);
            let core = normalize_to_core(&tau);
            assert_eq!(core.shift(), 0);
            assert_eq!(inv_k(&core), inv_k(&tau));
        }
    }

    #[test]
    fn enumeration_examples() {
        let words: Vec<_> = ReducedWords::new(&perm(3, &[5, 3, -5])).unwrap().collect();
        assert_eq!(words.len(), 4);
        assert_eq!(count_reduced_words(&perm(3, &[5, 3, -5])).unwrap(), 4);

        let words: Vec<_> = ReducedWords::new(&perm(3, &[-3, 2, 4])).unwrap().collect();
        assert_eq!(words.len(), 1);
        assert_eq!(words[0].letters(), &[2, 1, 0]);
        assert_eq!(words[0].display_order(), vec![0, 1, 2]);
        assert_eq!(words[0].to_string(), "σ0σ1σ2");

        let words: Vec<_> = ReducedWords::new(&AffinePermutation::identity(3))
            .unwrap()
            .collect();
        assert_eq!(words.len(), 1);
        assert!(words[0].is_empty());

        assert!(ReducedWords::new(&perm(3, &[0, 8, 10])).is_err());
    }

    #[test]
    fn every_word_multiplies_back() {
        let mut rng = rng(0x0a0b_0003);
        for _ in 0..60 {
            let alpha = random_core_perm(&mut rng, 5, 1);
            if inv_k(&alpha) > 8 {
                continue;
            }
            let mut count = 0u128;
            for word in ReducedWords::new(&alpha).unwrap() {
                assert_eq!(word.product(), alpha);
                assert_eq!(word.len(), inv_k(&alpha));
                count += 1;
            }
            assert_eq!(count, count_reduced_words(&alpha).unwrap());
        }
    }

    #[test]
    fn truncation_profile_example() {
        let word = ReducedWord::new(3, vec![2, 1, 0]).unwrap();
        let profile = TruncationProfile::new(&word).unwrap();
        assert_eq!(profile.word().product(), perm(3, &[-3, 2, 4]));
        assert_eq!(
            profile.truncation(1),
            AffinePermutation::simple_reflection(3, 2).unwrap()
        );
        assert_eq!(profile.steps()[0].j_plus, 2);
        assert_eq!(profile.steps()[0].j_minus, 0);
        assert!(profile.truncation(0).is_identity());

        let empty = ReducedWord::new(3, vec![]).unwrap();
        let profile = TruncationProfile::new(&empty).unwrap();
        assert!(profile.steps().is_empty());
        assert!(profile.truncation(0).is_identity());
    }

    #[test]
    fn non_reduced_words_are_rejected() {
        assert!(matches!(
            ReducedWord::new(3, vec![0, 0]),
            Err(Error::NotReduced { .. })
        ));
        assert!(ReducedWord::new(3, vec![0, 1, 0, 1, 0, 1, 0]).is_err());
        assert!(ReducedWord::new(2, vec![3]).is_err());
    }

    /// Monotonicity of the gap between increasing and decreasing values:
    /// properties (1)-(3) of the truncation tower, on random words.
    #[test]
    fn truncation_gap_properties() {
        let mut rng = rng(0x0a0b_0004);
        let mut checked = 0;
        while checked < 120 {
            let alpha = random_core_perm(&mut rng, 5, 1);
            if inv_k(&alpha) > 9 || inv_k(&alpha) == 0 {
                continue;
            }
            checked += 1;
            let word = random_word(&mut rng, &alpha);
            let profile = TruncationProfile::new(&word).unwrap();
            let k = alpha.k() as i64;
            for (t0, step) in profile.steps().iter().enumerate() {
                let t0 = t0 + 1;
                let here = profile.truncation(t0);
                let up = here.evaluate(step.j_plus as i64);
                let down = here.evaluate(step.j_minus as i64);
                assert_eq!((up - down).rem_euclid(k), 1 % k);
                assert!(down < up);
                assert_eq!(up == down + 1, step.j_plus < step.j_minus);
                for t in t0..=profile.steps().len() {
                    let later = profile.truncation(t);
                    let gap = later.evaluate(step.j_plus as i64) - later.evaluate(step.j_minus as i64);
                    assert!(gap >= up - down);
                }
            }
        }
    }

    fn random_word(rng: &mut rand::rngs::StdRng, alpha: &AffinePermutation) -> ReducedWord {
        // A uniform-ish random reduced word via random descent peeling.
        let mut current = alpha.clone();
        let mut letters = Vec::new();
        while !current.is_identity() {
            let descents = right_descents(&current);
            let i = descents[rng.gen_range(0..descents.len())];
            letters.push(i);
            current = right_multiply(&current, i);
        }
        letters.reverse();
        ReducedWord::new(alpha.k(), letters).unwrap()
    }

    #[test]
    fn braid_move_examples() {
        let word = ReducedWord::new(4, vec![0, 2]).unwrap();
        assert_eq!(word.flip(1).unwrap().letters(), &[2, 0]);

        let word = ReducedWord::new(3, vec![0, 1, 0]).unwrap();
        assert_eq!(word.shuffle(1).unwrap().letters(), &[1, 0, 1]);

        let word = ReducedWord::new(3, vec![0, 1]).unwrap();
        assert!(matches!(
            word.flip(1),
            Err(Error::MoveInapplicable { kind: "flip", .. })
        ));

        let word = ReducedWord::new(2, vec![0, 1, 0]).unwrap();
        assert_eq!(word.shuffle(1), Err(Error::ShuffleRank(2)));
    }

    #[test]
    fn braid_moves_preserve_product_and_length() {
        let mut rng = rng(0x0a0b_0005);
        let mut checked = 0;
        while checked < 80 {
            let alpha = random_core_perm(&mut rng, 5, 1);
            if inv_k(&alpha) > 8 || inv_k(&alpha) < 2 {
                continue;
            }
            checked += 1;
            let word = random_word(&mut rng, &alpha);
            for position in 1..=word.len() {
                for kind in [BraidMove::Flip, BraidMove::Shuffle] {
                    if let Ok(next) = apply_braid_move(&word, kind, position) {
                        assert_eq!(next.len(), word.len());
                        assert_eq!(next.product(), alpha);
                    }
                }
            }
        }
    }

    #[test]
    fn braid_graph_examples() {
        let graph = BraidGraph::new(&perm(3, &[5, 3, -5])).unwrap();
        assert_eq!(graph.words().len(), 4);
        assert!(graph.is_connected());

        let graph = BraidGraph::new(&perm(3, &[-3, 2, 4])).unwrap();
        assert_eq!(graph.words().len(), 1);
        assert!(graph.is_connected());

        let graph = BraidGraph::new(&AffinePermutation::identity(3)).unwrap();
        assert_eq!(graph.words().len(), 1);
        assert!(graph.is_connected());
    }

    #[test]
    fn braid_graph_is_connected_on_random_elements() {
        let mut rng = rng(0x0a0b_0006);
        let mut checked = 0;
        while checked < 40 {
            let alpha = random_core_perm(&mut rng, 5, 1);
            if inv_k(&alpha) > 8 {
                continue;
            }
            checked += 1;
            assert!(BraidGraph::new(&alpha).unwrap().is_connected(), "{alpha}");
        }
    }
}
