//! Strata on a chain of g elliptic curves: filled words, ramification
//! schedules, and degree distributions.
//!
//! A stratum is a reduced word for the shift-normalized permutation padded
//! with identity slots to length g; the non-bullet positions form the set S
//! of constrained components.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::AffinePermutation;
use crate::twists::{essential_shift, noncolliding};
use crate::words::{inv_k, left_multiply, ReducedWord, ReducedWords};

/// A length-g word over the letters and the identity slot, encoding one
/// stratum of the locus of `tau` on the chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilledWord {
    tau: AffinePermutation,
    /// `None` is a bullet: an unconstrained component.
    letters: Vec<Option<usize>>,
}

impl FilledWord {
    /// Validates that the non-bullet letters form a reduced word for
    /// `tau + chi`.
    pub fn new(tau: AffinePermutation, letters: Vec<Option<usize>>) -> Result<Self> {
        let filled: Vec<usize> = letters.iter().copied().flatten().collect();
        let word = ReducedWord::new(tau.k(), filled)?;
        if word.len() != inv_k(&tau) {
            return Err(Error::NotReduced {
                step: word.len(),
                letter: 0,
            });
        }
        if word.product() != tau.add_constant(tau.shift()) {
            return Err(Error::NotReduced { step: 0, letter: 0 });
        }
        Ok(Self { tau, letters })
    }

    pub fn tau(&self) -> &AffinePermutation {
        &self.tau
    }

    pub fn k(&self) -> usize {
        self.tau.k()
    }

    /// Chain length g.
    pub fn genus(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Option<usize>] {
        &self.letters
    }

    /// The constrained components, as 1-based chain positions.
    pub fn support(&self) -> Vec<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter_map(|(i, m)| m.map(|_| i + 1))
            .collect()
    }

    pub fn has_bullets(&self) -> bool {
        self.letters.iter().any(|m| m.is_none())
    }

    /// The truncation after step `t` (bullets act as identity), `t <= g`.
    pub fn truncation(&self, t: usize) -> AffinePermutation {
        self.letters[..t]
            .iter()
            .fold(AffinePermutation::identity(self.k()), |acc, m| match m {
                Some(letter) => left_multiply(&acc, *letter),
                None => acc,
            })
    }

    /// Parses `2,•,1,0` (or `.` for the bullet).
    pub fn parse_letters(text: &str) -> Result<Vec<Option<usize>>> {
        text.split(',')
            .map(|part| {
                let part = part.trim();
                if part == "•" || part == "." {
                    Ok(None)
                } else {
                    part.parse::<usize>()
                        .map(Some)
                        .map_err(|_| Error::BadMoveDescriptor(part.to_string()))
                }
            })
            .collect()
    }
}

impl fmt::Display for FilledWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for m in &self.letters {
            if !first {
                write!(f, ",")?;
            }
            match m {
                Some(letter) => write!(f, "{letter}")?,
                None => write!(f, "•")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Streams every stratum of `tau` at genus `g`: each reduced word combined
/// with each placement of its letters into `g` slots. Empty when
/// `g < inv(tau)`.
pub struct Strata {
    tau: AffinePermutation,
    genus: usize,
    length: usize,
    words: ReducedWords,
    current: Option<ReducedWord>,
    /// 0-based slot choice for each letter, strictly increasing.
    subset: Vec<usize>,
    exhausted: bool,
}

impl Strata {
    pub fn new(tau: &AffinePermutation, genus: usize) -> Result<Self> {
        let core = tau.add_constant(tau.shift());
        let length = inv_k(tau);
        let mut words = ReducedWords::new(&core)?;
        let exhausted = length > genus;
        let current = if exhausted { None } else { words.next() };
        Ok(Self {
            tau: tau.clone(),
            genus,
            length,
            words,
            current,
            subset: (0..length).collect(),
            exhausted,
        })
    }

    pub fn count(tau: &AffinePermutation, genus: usize) -> Result<u128> {
        let length = inv_k(tau);
        if (genus as u128) < length as u128 {
            return Ok(0);
        }
        let words = crate::words::count_reduced_words(&tau.add_constant(tau.shift()))?;
        Ok(words * binomial(genus as u128, length as u128))
    }

    fn advance_subset(&mut self) -> bool {
        // Next size-l subset of {0, ..., g-1} in lexicographic order.
        let l = self.length;
        let g = self.genus;
        if l == 0 {
            return false;
        }
        let mut i = l;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if self.subset[i] + (l - i) <= g - 1 {
                self.subset[i] += 1;
                for j in i + 1..l {
                    self.subset[j] = self.subset[j - 1] + 1;
                }
                return true;
            }
        }
    }
}

impl Iterator for Strata {
    type Item = FilledWord;

    fn next(&mut self) -> Option<Self::Item> {
        if self.exhausted {
            return None;
        }
        let word = self.current.as_ref()?;
        let mut letters = vec![None; self.genus];
        for (slot, &letter) in self.subset.iter().zip(word.letters()) {
            letters[*slot] = Some(letter);
        }
        let item = FilledWord {
            tau: self.tau.clone(),
            letters,
        };
        if !self.advance_subset() {
            self.current = self.words.next();
            self.subset = (0..self.length).collect();
            if self.current.is_none() {
                self.exhausted = true;
            }
        }
        Some(item)
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result = 1u128;
    for i in 0..k {
        result = result * (n - i) / (i + 1);
    }
    result
}

/// Bundle multiplicities at the two nodes of each constrained component:
/// `(i, m + i, d - m - i)`. Multiplicities may be negative.
pub fn stratum_aspects(fw: &FilledWord, degree: i64) -> Result<Vec<(usize, i64, i64)>> {
    check_degree(fw, degree)?;
    Ok(fw
        .letters()
        .iter()
        .enumerate()
        .filter_map(|(idx, m)| {
            m.map(|letter| {
                let i = (idx + 1) as i64;
                (idx + 1, letter as i64 + i, degree - letter as i64 - i)
            })
        })
        .collect())
}

fn check_degree(fw: &FilledWord, degree: i64) -> Result<()> {
    let expected = fw.tau().shift() + fw.genus() as i64;
    if degree != expected {
        return Err(Error::DegreeMismatch {
            got: degree,
            expected,
        });
    }
    Ok(())
}

/// Vanishing orders of a positive limit linear series at the chain nodes:
/// `a[i][j]` on the right side of node i, rows `i = 0..=g`, and `b[i][j]` on
/// the left side, rows `i = 1..=g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamificationSchedule {
    pub degree: i64,
    /// `a[i][j] = T^{<=i}(j) + e(j) + i`, indexed `[i][j]` with `i in 0..=g`.
    pub a: Vec<Vec<i64>>,
    /// `b[i][j] = d + tau(j) + e(j) - a[i][j]`; row index `i - 1` stores node i.
    pub b: Vec<Vec<i64>>,
}

pub fn ramification_schedule(fw: &FilledWord, degree: i64) -> Result<RamificationSchedule> {
    check_degree(fw, degree)?;
    let tau = fw.tau();
    let k = fw.k();
    let g = fw.genus();
    let shifts: Vec<i64> = (0..k).map(|j| essential_shift(tau, j)).collect();
    let mut a = Vec::with_capacity(g + 1);
    let mut current = AffinePermutation::identity(k);
    for i in 0..=g {
        if i > 0 {
            if let Some(letter) = fw.letters()[i - 1] {
                current = left_multiply(&current, letter);
            }
        }
        let row: Vec<i64> = (0..k)
            .map(|j| current.evaluate(j as i64) + shifts[j] + i as i64)
            .collect();
        assert!(row.iter().all(|&v| v >= 0), "negative vanishing order");
        a.push(row);
    }
    let mut b = Vec::with_capacity(g);
    for i in 1..=g {
        let row: Vec<i64> = (0..k)
            .map(|j| degree + tau.evaluate(j as i64) + shifts[j] - a[i][j])
            .collect();
        assert!(row.iter().all(|&v| v >= 0), "negative vanishing order");
        b.push(row);
    }
    // Node-wise distinctness of residues, phrased through the twist module.
    for i in 1..=g {
        assert!(
            noncolliding(tau, &a[i - 1])?,
            "schedule column collides at node {i}"
        );
    }
    Ok(RamificationSchedule { degree, a, b })
}

/// How one chain component sits inside the j-th twisted limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentClass {
    /// The decreasing index: restriction is trivial.
    Trivial,
    /// The increasing index: restriction is the two-node bundle.
    NodePair,
    /// Any other index: a general bundle of degree one.
    GeneralDegreeOne,
}

/// The degree distribution of the j-th twisted limit along a bullet-free
/// word: 0 on components where j decreases, 2 where it increases, 1 elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeDistribution {
    pub j: usize,
    pub degrees: Vec<u8>,
    pub classes: Vec<ComponentClass>,
}

pub fn degree_distribution(fw: &FilledWord, j: usize, degree: i64) -> Result<DegreeDistribution> {
    check_degree(fw, degree)?;
    if fw.has_bullets() {
        return Err(Error::BulletsPresent);
    }
    let k = fw.k();
    if j >= k {
        return Err(Error::IndexOutOfRange { index: j, k });
    }
    let ki = k as i64;
    let mut degrees = Vec::with_capacity(fw.genus());
    let mut classes = Vec::with_capacity(fw.genus());
    let mut current = AffinePermutation::identity(k);
    for m in fw.letters().iter().map(|m| m.expect("no bullets")) {
        let j_plus = (0..k)
            .find(|&idx| current.evaluate(idx as i64).rem_euclid(ki) == m as i64)
            .expect("complete residues");
        let j_minus = (0..k)
            .find(|&idx| current.evaluate(idx as i64).rem_euclid(ki) == (m as i64 + 1) % ki)
            .expect("complete residues");
        let (d, class) = if j_minus == j {
            (0, ComponentClass::Trivial)
        } else if j_plus == j {
            (2, ComponentClass::NodePair)
        } else {
            (1, ComponentClass::GeneralDegreeOne)
        };
        degrees.push(d);
        classes.push(class);
        current = left_multiply(&current, m);
    }
    Ok(DegreeDistribution {
        j,
        degrees,
        classes,
    })
}
