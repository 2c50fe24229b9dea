//! Monodromy tuples of covers totally ramified over 0 and infinity, the
//! annular braid moves, and the divisor classification of their orbits.
//!
//! Sheets carry labels in `Z/k` and the monodromy around 0 is normalized to
//! the base cycle `c = (0, 1, ..., k-1)`. A tuple records the transpositions
//! at the simple branch points; the monodromy at infinity is the inverse of
//! `c t_1 ... t_r`, rightmost factor applied first. Orbits under the moves
//! E1-E3 are classified by `gcd(k, b_1 - a_1, ..., b_r - a_r)`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A permutation of the sheet labels `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SheetPerm(Vec<usize>);

impl SheetPerm {
    pub fn identity(k: usize) -> Self {
        Self((0..k).collect())
    }

    /// The base cycle `x -> x + 1 mod k`.
    pub fn base_cycle(k: usize) -> Self {
        Self((0..k).map(|x| (x + 1) % k).collect())
    }

    pub fn transposition(k: usize, a: usize, b: usize) -> Self {
        let mut map: Vec<usize> = (0..k).collect();
        map.swap(a, b);
        Self(map)
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// `self . other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self((0..self.0.len()).map(|x| self.0[other.0[x]]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut map = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            map[y] = x;
        }
        Self(map)
    }

    /// Whether the permutation is a single cycle through all k sheets.
    pub fn is_full_cycle(&self) -> bool {
        let k = self.0.len();
        let mut seen = 1;
        let mut x = self.0[0];
        while x != 0 && seen <= k {
            x = self.0[x];
            seen += 1;
        }
        x == 0 && seen == k
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let k = self.0.len();
        let mut seen = vec![false; k];
        let mut cycles = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.0[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x];
            }
            cycles.push(cycle);
        }
        cycles
    }
}

/// A tuple of transpositions on the sheet labels, with the base cycle
/// understood as the monodromy around 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonodromyTuple {
    k: usize,
    /// Entries normalized with `a < b`.
    entries: Vec<(usize, usize)>,
}

impl MonodromyTuple {
    pub fn new(k: usize, transpositions: Vec<(usize, usize)>) -> Result<Self> {
        if k < 2 {
            return Err(Error::TooFewSheets(k));
        }
        let mut entries = Vec::with_capacity(transpositions.len());
        for (a, b) in transpositions {
            if a >= k {
                return Err(Error::SheetOutOfRange { label: a, k });
            }
            if b >= k {
                return Err(Error::SheetOutOfRange { label: b, k });
            }
            if a == b {
                return Err(Error::DegenerateTransposition(a));
            }
            entries.push((a.min(b), a.max(b)));
        }
        Ok(Self { k, entries })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    /// `r / 2` when the tuple has even length: the genus of the cover.
    pub fn genus(&self) -> Option<usize> {
        (self.entries.len() % 2 == 0).then_some(self.entries.len() / 2)
    }

    /// The product `c t_1 ... t_r` with the rightmost factor applied first,
    /// and whether it is a k-cycle.
    pub fn total_product(&self) -> (SheetPerm, bool) {
        let mut p = SheetPerm::identity(self.k);
        for &(a, b) in &self.entries {
            p = p.compose(&SheetPerm::transposition(self.k, a, b));
        }
        let p = SheetPerm::base_cycle(self.k).compose(&p);
        let cycle = p.is_full_cycle();
        (p, cycle)
    }

    /// `gcd(k, b_1 - a_1, ..., b_r - a_r)`: constant across all braid moves.
    pub fn invariant_d(&self) -> Result<usize> {
        if self.entries.is_empty() {
            return Err(Error::EmptyTuple);
        }
        let mut d = self.k;
        for &(a, b) in &self.entries {
            d = gcd(d, b - a);
        }
        Ok(d)
    }

    /// `c t_1 ... t_i` as a sheet permutation (`i = 0` gives the base cycle).
    fn prefix_conjugator(&self, i: usize) -> SheetPerm {
        let mut p = SheetPerm::identity(self.k);
        for &(a, b) in &self.entries[..i] {
            p = p.compose(&SheetPerm::transposition(self.k, a, b));
        }
        SheetPerm::base_cycle(self.k).compose(&p)
    }

    fn conjugate_entry(entry: (usize, usize), by: &SheetPerm) -> (usize, usize) {
        let (a, b) = (by.apply(entry.0), by.apply(entry.1));
        (a.min(b), a.max(b))
    }

    /// Whether the tuple is in standard form: a prefix of equal adjacent
    /// pairs followed by transpositions `(0, b)` with strictly increasing b.
    pub fn is_standard(&self) -> bool {
        let mut idx = 0;
        while idx + 1 < self.entries.len() && self.entries[idx] == self.entries[idx + 1] {
            idx += 2;
        }
        let tail = &self.entries[idx..];
        tail.iter().all(|&(a, _)| a == 0)
            && tail.windows(2).all(|w| w[0].1 < w[1].1)
    }

    pub fn is_constant(&self) -> Option<(usize, usize)> {
        let first = *self.entries.first()?;
        self.entries.iter().all(|&e| e == first).then_some(first)
    }
}

impl fmt::Display for MonodromyTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={};", self.k)?;
        for &(a, b) in &self.entries {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

/// Parses the `k=6;(0,2)(2,5)` syntax.
pub fn parse_tuple(text: &str) -> Result<MonodromyTuple> {
    let bad = || Error::BadMoveDescriptor(text.to_string());
    let rest = text.trim().strip_prefix("k=").ok_or_else(bad)?;
    let (k_text, pairs_text) = rest.split_once(';').ok_or_else(bad)?;
    let k: usize = k_text.trim().parse().map_err(|_| bad())?;
    let mut entries = Vec::new();
    let mut remaining = pairs_text.trim();
    while !remaining.is_empty() {
        let inner = remaining.strip_prefix('(').ok_or_else(bad)?;
        let (pair, rest) = inner.split_once(')').ok_or_else(bad)?;
        let (a, b) = pair.split_once(',').ok_or_else(bad)?;
        entries.push((
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ));
        remaining = rest;
    }
    MonodromyTuple::new(k, entries)
}

/// An elementary move or its inverse. Positions are the 1-based subscripts of
/// the tuple entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// Conjugate every entry by the base cycle (labels shift up by one).
    E1,
    E1Inv,
    /// Swap entries i, i+1, conjugating the one moved backwards.
    E2(usize),
    E2Inv(usize),
    /// Conjugate entries i+1..r by `c t_1 ... t_i`.
    E3(usize),
    E3Inv(usize),
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::E1 => write!(f, "E1"),
            Move::E1Inv => write!(f, "E1'"),
            Move::E2(i) => write!(f, "E2({i})"),
            Move::E2Inv(i) => write!(f, "E2'({i})"),
            Move::E3(i) => write!(f, "E3({i})"),
            Move::E3Inv(i) => write!(f, "E3'({i})"),
        }
    }
}

impl std::str::FromStr for Move {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::BadMoveDescriptor(text.to_string());
        match text {
            "E1" => return Ok(Move::E1),
            "E1'" => return Ok(Move::E1Inv),
            _ => {}
        }
        let (head, rest) = text.split_once('(').ok_or_else(bad)?;
        let index: usize = rest.strip_suffix(')').ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        match head {
            "E2" => Ok(Move::E2(index)),
            "E2'" => Ok(Move::E2Inv(index)),
            "E3" => Ok(Move::E3(index)),
            "E3'" => Ok(Move::E3Inv(index)),
            _ => Err(bad()),
        }
    }
}

/// An ordered list of moves; replaying it on the source tuple reproduces the
/// target exactly.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MoveTrace(pub Vec<Move>);

impl MoveTrace {
    pub fn replay(&self, start: &MonodromyTuple) -> Result<MonodromyTuple> {
        let mut t = start.clone();
        for &mv in &self.0 {
            t = apply_move(&t, mv)?;
        }
        Ok(t)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::default());
        }
        text.split(',')
            .map(|part| part.parse())
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

impl fmt::Display for MoveTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for mv in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{mv}")?;
            first = false;
        }
        Ok(())
    }
}

pub fn apply_move(t: &MonodromyTuple, mv: Move) -> Result<MonodromyTuple> {
    let r = t.entries.len();
    let k = t.k;
    let range_check = |kind: &'static str, i: usize| {
        if i == 0 || i >= r {
            Err(Error::MoveInapplicable {
                kind,
                position: i,
                reason: "position out of range",
            })
        } else {
            Ok(i)
        }
    };
    let mut entries = t.entries.clone();
    match mv {
        Move::E1 => {
            for e in &mut entries {
                *e = normalize((e.0 + 1) % k, (e.1 + 1) % k);
            }
        }
        Move::E1Inv => {
            for e in &mut entries {
                *e = normalize((e.0 + k - 1) % k, (e.1 + k - 1) % k);
            }
        }
        Move::E2(i) => {
            let i = range_check("E2", i)?;
            let mover = t.entries[i];
            let by = SheetPerm::transposition(k, mover.0, mover.1);
            entries[i - 1] = mover;
            entries[i] = MonodromyTuple::conjugate_entry(t.entries[i - 1], &by);
        }
        Move::E2Inv(i) => {
            let i = range_check("E2'", i)?;
            let mover = entries[i - 1];
            let by = SheetPerm::transposition(k, mover.0, mover.1);
            entries[i - 1] = MonodromyTuple::conjugate_entry(t.entries[i], &by);
            entries[i] = mover;
        }
        Move::E3(i) => {
            let i = range_check("E3", i)?;
            let u = t.prefix_conjugator(i);
            for e in entries.iter_mut().skip(i) {
                *e = MonodromyTuple::conjugate_entry(*e, &u);
            }
        }
        Move::E3Inv(i) => {
            let i = range_check("E3'", i)?;
            let u = t.prefix_conjugator(i).inverse();
            for e in entries.iter_mut().skip(i) {
                *e = MonodromyTuple::conjugate_entry(*e, &u);
            }
        }
    }
    Ok(MonodromyTuple { k, entries })
}

fn normalize(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Reduces a tuple to standard form, recording every elementary move; when
/// the total product is a k-cycle the result is the constant tuple on
/// `(0, d)` with `d` the gcd invariant.
pub fn standardize(t: &MonodromyTuple) -> (MonodromyTuple, MoveTrace) {
    let mut st = Standardizer {
        t: t.clone(),
        trace: Vec::new(),
    };
    let cyc: Vec<usize> = (0..t.k).collect();
    let end = st.t.entries.len();
    st.std_range(1, end, &cyc);
    if st.t.entries.len() % 2 == 0 {
        let (pairs, tail) = st.scan(1, st.t.entries.len(), &cyc);
        if tail.is_empty() && pairs > 0 {
            st.euclid_normalize();
        }
    }
    debug_assert!(st.t.is_standard(), "standardization produced {}", st.t);
    (st.t, MoveTrace(st.trace))
}

struct Standardizer {
    t: MonodromyTuple,
    trace: Vec<Move>,
}

impl Standardizer {
    fn push(&mut self, mv: Move) {
        self.t = apply_move(&self.t, mv).expect("internally generated moves stay in range");
        self.trace.push(mv);
    }

    fn entry(&self, p: usize) -> (usize, usize) {
        self.t.entries[p - 1]
    }

    /// E1 at the top level, otherwise E3 just before `start`; either way the
    /// working range is conjugated by its governing cycle.
    fn cycle_move(&self, start: usize, inverse: bool) -> Move {
        match (start, inverse) {
            (1, false) => Move::E1,
            (1, true) => Move::E1Inv,
            (_, false) => Move::E3(start - 1),
            (_, true) => Move::E3Inv(start - 1),
        }
    }

    /// Shape of a standardized region: length of the paired prefix and the
    /// tail positions with their sub-alphabet coordinates.
    fn scan(&self, start: usize, end: usize, cyc: &[usize]) -> (usize, Vec<(usize, usize)>) {
        let mut pairs = 0;
        let mut p = start;
        while p + 1 <= end && self.entry(p) == self.entry(p + 1) {
            pairs += 2;
            p += 2;
        }
        let mut tail = Vec::new();
        while p <= end {
            let (a, b) = self.entry(p);
            assert_eq!(a, 0, "tail entry {:?} is not anchored at 0", (a, b));
            let sub = subpos(cyc, b).expect("tail label outside the working alphabet");
            if let Some(&(_, prev)) = tail.last() {
                assert!(sub > prev, "tail is not increasing");
            }
            tail.push((p, sub));
            p += 1;
        }
        (pairs, tail)
    }

    fn std_range(&mut self, start: usize, end: usize, cyc: &[usize]) {
        if start > end {
            return;
        }
        self.std_range(start, end - 1, cyc);
        self.settle_last(start, end, cyc);
    }

    /// Folds the entry at `end` into the standardized region before it.
    fn settle_last(&mut self, start: usize, end: usize, cyc: &[usize]) {
        let budget = 2 * (self.t.entries.len() + self.t.k) + 8;
        for _ in 0..budget {
            let (pairs, tail) = self.scan(start, end - 1, cyc);
            let (x, y) = self.entry(end);
            if tail.is_empty() {
                // Rotate the lone entry along the cycle until anchored at 0.
                let mut guard = cyc.len();
                while self.entry(end).0 != 0 {
                    assert!(guard > 0, "entry never reached the anchor");
                    guard -= 1;
                    let mv = self.cycle_move(start + pairs, false);
                    self.push(mv);
                }
                return;
            }
            let (pos_b1, j1) = tail[0];
            let px = subpos(cyc, x).expect("entry outside alphabet");
            let py = subpos(cyc, y).expect("entry outside alphabet");
            let in_low = |p: usize| (1..=j1).contains(&p);
            if !in_low(px) && !in_low(py) {
                // The tail after b1 together with the last entry lives on the
                // sub-alphabet cut out by b1; standardize it there, then move
                // b1 forward past the new pairs.
                let mut sub_cyc = Vec::with_capacity(cyc.len() - j1);
                sub_cyc.push(cyc[0]);
                sub_cyc.extend_from_slice(&cyc[j1 + 1..]);
                self.std_range(pos_b1 + 1, end, &sub_cyc);
                let (sub_pairs, _) = self.scan(pos_b1 + 1, end, &sub_cyc);
                for step in 0..sub_pairs {
                    self.push(Move::E2Inv(pos_b1 + step));
                }
                return;
            }
            if tail.len() == 1 {
                let in_high = |p: usize| p == 0 || p > j1;
                if (in_low(px) && in_high(py)) || (in_low(py) && in_high(px)) {
                    self.pair_reduce(pos_b1, cyc);
                    return;
                }
            }
            // Rotate the marked points so a gap free of the last entry's
            // labels lands just above the anchor.
            let &(pos_bm, jm) = tail.last().expect("tail non-empty");
            for p in (pos_b1..pos_bm).rev() {
                self.push(Move::E2(p));
            }
            for _ in 0..jm {
                let mv = self.cycle_move(start, true);
                self.push(mv);
            }
        }
        unreachable!("rotation failed to reach a terminal case");
    }

    /// Reduces the adjacent pair `((0, b), (u, v))` at `pos` to an equal pair
    /// by walking the two-cycle conjugation and swapping down, per the
    /// Euclidean descent on the anchor gap.
    fn pair_reduce(&mut self, pos: usize, cyc: &[usize]) {
        let total = cyc.len();
        let mut guard = total + 2;
        loop {
            assert!(guard > 0, "pair reduction failed to terminate");
            guard -= 1;
            let (zero, b) = self.entry(pos);
            assert_eq!(zero, 0);
            let j = subpos(cyc, b).expect("anchor label outside alphabet");
            let (x, y) = self.entry(pos + 1);
            let px = subpos(cyc, x).expect("entry outside alphabet");
            let py = subpos(cyc, y).expect("entry outside alphabet");
            let (pu, pv) = if (1..=j).contains(&px) {
                (px, py)
            } else {
                (py, px)
            };
            assert!((1..=j).contains(&pu) && (pv == 0 || pv > j));
            // Conjugating by cyc(0,b) splits the alphabet into the low cycle
            // of length j and the high cycle through the anchor; walk until
            // the high label sits at 0 with the low label minimal.
            let c2_len = total - j;
            let s0 = if pv == 0 { 0 } else { total - pv };
            let walk = |s: usize| (pu - 1 + s) % j + 1;
            let mut best = (s0, walk(s0));
            for t in 1..=j {
                let s = s0 + t * c2_len;
                if walk(s) < best.1 {
                    best = (s, walk(s));
                }
            }
            for _ in 0..best.0 {
                self.push(Move::E3(pos));
            }
            let w = best.1;
            debug_assert_eq!(self.entry(pos + 1), (0, cyc[w]));
            if w == j {
                return;
            }
            self.push(Move::E2(pos));
        }
    }

    /// Top level only, on an all-pairs tuple: drives every pair to the
    /// constant `(0, d)` by the Euclidean algorithm between adjacent pairs,
    /// folding in k through the anchored pair reduction.
    fn euclid_normalize(&mut self) {
        let n = self.t.entries.len() / 2;
        let cyc: Vec<usize> = (0..self.t.k).collect();
        if n == 0 {
            return;
        }
        for _ in 0..6 {
            self.anchor_all_pairs();
            for j in 1..n {
                self.euclid_adjacent(j);
            }
            for j in (1..n).rev() {
                self.euclid_adjacent(j);
            }
            self.pair_reduce(1, &cyc);
            self.anchor_all_pairs();
            let first = self.entry(1);
            if (1..=n).all(|j| self.entry(2 * j - 1) == first) {
                return;
            }
        }
        unreachable!("pair values failed to stabilize");
    }

    /// Conjugates each pair alone so it reads `(0, v)`.
    fn anchor_all_pairs(&mut self) {
        let r = self.t.entries.len();
        for pair in 1..=r / 2 {
            let p = 2 * pair - 1;
            let (a, _) = self.entry(p);
            debug_assert_eq!(self.entry(p), self.entry(p + 1));
            if a == 0 {
                continue;
            }
            for _ in 0..a {
                let mv = self.cycle_move(p, true);
                self.push(mv);
            }
            if p + 1 < r {
                for _ in 0..a {
                    self.push(Move::E3(p + 1));
                }
            }
        }
    }

    /// Subtractive Euclid between the pair values at pair indices j, j+1.
    fn euclid_adjacent(&mut self, j: usize) {
        let r = self.t.entries.len();
        let p = 2 * j - 1;
        loop {
            let a = self.pair_value(j);
            let rv = self.pair_value(j + 1);
            if a == rv {
                return;
            }
            if rv > a {
                // Turn the right pair into (a, r) twins, then shift it down
                // to (0, r - a), restoring anything beyond.
                self.push(Move::E2Inv(p + 1));
                self.push(Move::E2Inv(p + 2));
                self.push(Move::E2Inv(p + 2));
                self.push(Move::E2Inv(p + 1));
                for _ in 0..a {
                    self.push(Move::E3Inv(p + 1));
                }
                if p + 3 < r {
                    for _ in 0..a {
                        self.push(Move::E3(p + 3));
                    }
                }
            } else {
                // Swap the two pair values.
                self.push(Move::E2(p + 1));
                self.push(Move::E2(p + 2));
                self.push(Move::E2(p));
                self.push(Move::E2(p + 1));
            }
        }
    }

    fn pair_value(&self, j: usize) -> usize {
        let p = 2 * j - 1;
        let (a, b) = self.entry(p);
        assert_eq!(self.entry(p), self.entry(p + 1), "pair {j} broken");
        assert_eq!(a, 0, "pair {j} not anchored");
        b
    }
}

fn subpos(cyc: &[usize], label: usize) -> Option<usize> {
    cyc.iter().position(|&l| l == label)
}

/// The orbit label of a product-condition tuple: the gcd invariant, checked
/// against the constant value reached by standardization.
pub fn classify(t: &MonodromyTuple) -> Result<usize> {
    if t.entries.is_empty() {
        return Err(Error::EmptyTuple);
    }
    if t.entries.len() % 2 != 0 {
        return Err(Error::OddTupleLength(t.entries.len()));
    }
    let (_, is_cycle) = t.total_product();
    if !is_cycle {
        return Err(Error::NotKCycle);
    }
    let d = t.invariant_d()?;
    let (standard, _) = standardize(t);
    assert_eq!(
        standard.is_constant(),
        Some((0, d)),
        "standard form of {t} disagrees with the gcd invariant"
    );
    debug_assert!(d < t.k);
    Ok(d)
}

const ORBIT_MAX_K: usize = 8;
const ORBIT_MAX_R: usize = 4;

/// The full orbit of a tuple under E1, E2 and E3 and their inverses, as a set
/// of E1-canonical representatives. Guarded to small k and tuple length.
pub fn orbit_bfs(start: &MonodromyTuple) -> Result<BTreeSet<MonodromyTuple>> {
    if start.k > ORBIT_MAX_K || start.entries.len() > ORBIT_MAX_R {
        return Err(Error::OrbitGuard {
            k: start.k,
            r: start.entries.len(),
            max_k: ORBIT_MAX_K,
            max_r: ORBIT_MAX_R,
        });
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    let first = e1_canonical(start);
    seen.insert(first.clone());
    queue.push_back(first);
    while let Some(t) = queue.pop_front() {
        for mv in moves_for(&t) {
            let next = e1_canonical(&apply_move(&t, mv).expect("enumerated moves are in range"));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

fn moves_for(t: &MonodromyTuple) -> Vec<Move> {
    let r = t.entries.len();
    let mut moves = Vec::new();
    for i in 1..r {
        moves.push(Move::E2(i));
        moves.push(Move::E2Inv(i));
        moves.push(Move::E3(i));
        moves.push(Move::E3Inv(i));
    }
    moves
}

/// Lexicographically minimal tuple over the cyclic relabeling orbit.
fn e1_canonical(t: &MonodromyTuple) -> MonodromyTuple {
    let mut best = t.clone();
    let mut current = t.clone();
    for _ in 1..t.k {
        current = apply_move(&current, Move::E1).expect("E1 is always applicable");
        if current < best {
            best = current.clone();
        }
    }
    best
}

/// Every tuple of `2g` transpositions whose total product is a k-cycle.
pub fn product_condition_tuples(k: usize, genus: usize) -> Result<Vec<MonodromyTuple>> {
    let r = 2 * genus;
    if k > ORBIT_MAX_K || r > ORBIT_MAX_R {
        return Err(Error::OrbitGuard {
            k,
            r,
            max_k: ORBIT_MAX_K,
            max_r: ORBIT_MAX_R,
        });
    }
    let mut transpositions = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            transpositions.push((a, b));
        }
    }
    let mut tuples = Vec::new();
    let mut stack: Vec<Vec<(usize, usize)>> = vec![vec![]];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == r {
            let t = MonodromyTuple::new(k, prefix).expect("labels in range");
            if t.total_product().1 {
                tuples.push(t);
            }
            continue;
        }
        for &tr in transpositions.iter().rev() {
            let mut next = prefix.clone();
            next.push(tr);
            stack.push(next);
        }
    }
    Ok(tuples)
}

/// Number of orbits among the product-condition tuples of genus g.
pub fn count_orbits(k: usize, genus: usize) -> Result<usize> {
    let tuples = product_condition_tuples(k, genus)?;
    let mut seen: BTreeSet<MonodromyTuple> = BTreeSet::new();
    let mut orbits = 0;
    for t in tuples {
        let canon = e1_canonical(&t);
        if seen.contains(&canon) {
            continue;
        }
        orbits += 1;
        seen.extend(orbit_bfs(&t)?);
    }
    Ok(orbits)
}
