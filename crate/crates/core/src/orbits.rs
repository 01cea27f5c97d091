//! Orbits of the group generated by `r^{i,i+1}` acting on `X^m`.
//!
//! Two words are equal in the monoid `S(X, r)` exactly when they have the
//! same length and lie in one orbit, so the orbit count in `X^m` is the
//! dimension of the degree-`m` part of the monoid algebra whenever `r` is
//! involutive.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadratic_set::QuadraticSet;
use crate::word::{binomial, checked_pow, decode, encode, Word};

/// Largest word length for which a full census is built unless the caller
/// asks for more.
pub const DEFAULT_MAX_DEGREE: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OrbitKind {
    /// `{xxx}`
    Diagonal,
    /// meets `(D2 x X u X x D2) \ D3` in exactly two words
    TypeIi,
    /// avoids `D2 x X u X x D2`
    SquareFree,
    /// anything else; only possible when `r` is not a quantum binomial set
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub size: usize,
    /// Smallest word of the orbit in encoding order.
    pub representative: Word,
    /// Populated for `m = 3` only.
    pub kind: Option<OrbitKind>,
    /// `|E(O)|`, the number of words of the form `xxy` / `xyy` with
    /// `x != y`. Zero unless `m = 3`.
    pub square_adjacent: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCensus {
    n: usize,
    m: usize,
    orbit_of: Vec<u32>,
    orbits: Vec<Orbit>,
}

impl OrbitCensus {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn orbit_id(&self, word: &[usize]) -> Option<usize> {
        if word.len() != self.m || word.iter().any(|&a| a >= self.n) {
            return None;
        }
        Some(self.orbit_of[encode(self.n, word)] as usize)
    }

    pub fn same_orbit(&self, w1: &[usize], w2: &[usize]) -> bool {
        match (self.orbit_id(w1), self.orbit_id(w2)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    pub fn count_kind(&self, kind: OrbitKind) -> usize {
        self.orbits.iter().filter(|o| o.kind == Some(kind)).count()
    }

    /// Number of square-free orbits.
    pub fn q(&self) -> usize {
        self.count_kind(OrbitKind::SquareFree)
    }

    /// Sizes `m_i` of the type-(ii) orbits, in orbit order.
    pub fn type_ii_sizes(&self) -> Vec<usize> {
        self.sizes_of(OrbitKind::TypeIi)
    }

    /// Sizes `n_j` of the square-free orbits, in orbit order.
    pub fn square_free_sizes(&self) -> Vec<usize> {
        self.sizes_of(OrbitKind::SquareFree)
    }

    fn sizes_of(&self, kind: OrbitKind) -> Vec<usize> {
        self.orbits
            .iter()
            .filter(|o| o.kind == Some(kind))
            .map(|o| o.size)
            .collect()
    }

    pub fn total_size(&self) -> usize {
        self.orbits.iter().map(|o| o.size).sum()
    }
}

/// Applies `r` at positions `(i, i + 1)` of `word`.
pub fn apply_generator(qs: &QuadraticSet, word: &[usize], i: usize) -> Word {
    let mut w = word.to_vec();
    let (a, b) = qs.apply(w[i], w[i + 1]);
    w[i] = a;
    w[i + 1] = b;
    w
}

pub fn enumerate_orbits(qs: &QuadraticSet, m: usize) -> Result<OrbitCensus> {
    enumerate_orbits_bounded(qs, m, DEFAULT_MAX_DEGREE)
}

pub fn enumerate_orbits_bounded(qs: &QuadraticSet, m: usize, max_degree: usize) -> Result<OrbitCensus> {
    if m < 2 || m > max_degree {
        return Err(Error::BoundExceeded(format!(
            "orbit degree must lie in 2..={max_degree}, got {m}"
        )));
    }
    let n = qs.n();
    let total = checked_pow(n, m)
        .filter(|&t| t <= u32::MAX as usize)
        .ok_or_else(|| Error::BoundExceeded(format!("{n}^{m} words")))?;
    // place[i] = n^(m-2-i), the weight of the pair starting at position i
    let place: Vec<usize> = (0..m - 1).map(|i| checked_pow(n, m - 2 - i).unwrap()).collect();

    const UNSEEN: u32 = u32::MAX;
    let mut orbit_of = vec![UNSEEN; total];
    let mut orbits = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..total {
        if orbit_of[start] != UNSEEN {
            continue;
        }
        let id = orbits.len() as u32;
        orbit_of[start] = id;
        queue.push_back(start);
        let mut members = Vec::new();
        while let Some(code) = queue.pop_front() {
            members.push(code);
            for &w in &place {
                let pair = (code / w) % (n * n);
                let next = code - pair * w + qs.apply_code(pair) * w;
                if orbit_of[next] == UNSEEN {
                    orbit_of[next] = id;
                    queue.push_back(next);
                }
            }
        }
        let (kind, square_adjacent) = if m == 3 {
            classify_degree_three(n, &members)
        } else {
            (None, 0)
        };
        orbits.push(Orbit {
            size: members.len(),
            representative: decode(n, m, start),
            kind,
            square_adjacent,
        });
    }
    Ok(OrbitCensus {
        n,
        m,
        orbit_of,
        orbits,
    })
}

fn classify_degree_three(n: usize, members: &[usize]) -> (Option<OrbitKind>, usize) {
    let mut diagonal = 0;
    let mut adjacent = 0;
    for &code in members {
        let (a, b, c) = (code / (n * n), (code / n) % n, code % n);
        if a == b && b == c {
            diagonal += 1;
        } else if a == b || b == c {
            adjacent += 1;
        }
    }
    let kind = if diagonal > 0 {
        if members.len() == 1 {
            OrbitKind::Diagonal
        } else {
            OrbitKind::Other
        }
    } else if adjacent == 0 {
        OrbitKind::SquareFree
    } else if adjacent == 2 {
        OrbitKind::TypeIi
    } else {
        OrbitKind::Other
    };
    (Some(kind), adjacent)
}

/// Decides equality of two words in `S(X, r)` by a search from `w1`.
pub fn words_equal(qs: &QuadraticSet, w1: &[usize], w2: &[usize]) -> bool {
    if w1.len() != w2.len() {
        return false;
    }
    if w1 == w2 {
        return true;
    }
    if w1.len() < 2 {
        return false;
    }
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w1.to_vec());
    queue.push_back(w1.to_vec());
    while let Some(w) = queue.pop_front() {
        for i in 0..w.len() - 1 {
            let next = apply_generator(qs, &w, i);
            if next == w2 {
                return true;
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}

/// Number of distinct elements of length `m` in `S(X, r)`, which is
/// `dim A_m` for the monoid algebra.
pub fn monoid_dimension(qs: &QuadraticSet, m: usize) -> Result<usize> {
    monoid_dimension_bounded(qs, m, DEFAULT_MAX_DEGREE)
}

pub fn monoid_dimension_bounded(qs: &QuadraticSet, m: usize, max_degree: usize) -> Result<usize> {
    if !qs.predicates().involutive {
        return Err(Error::Precondition("orbit counts give dim A_m only for involutive r".into()));
    }
    match m {
        0 => Ok(1),
        1 => Ok(qs.n()),
        _ => Ok(enumerate_orbits_bounded(qs, m, max_degree)?.len()),
    }
}

fn require_quantum_binomial(qs: &QuadraticSet) -> Result<()> {
    if qs.is_quantum_binomial() {
        Ok(())
    } else {
        Err(Error::Precondition("(X, r) is not a quantum binomial set".into()))
    }
}

/// `q = C(n, 3)`, cross-checked against the orbit-size characterisation
/// (every type-(ii) orbit of size 3, every square-free orbit of size 6).
pub fn symmetric_via_orbits(qs: &QuadraticSet) -> Result<bool> {
    require_quantum_binomial(qs)?;
    let census = enumerate_orbits(qs, 3)?;
    let by_count = census.q() == binomial(qs.n(), 3);
    let by_sizes = census.type_ii_sizes().iter().all(|&s| s == 3)
        && census.square_free_sizes().iter().all(|&s| s == 6);
    if by_count != by_sizes {
        return Err(Error::violation(
            "symmetric <=> q = C(n,3) <=> orbit sizes 3 and 6",
            format!("q = {}, sizes agree = {by_sizes}", census.q()),
        ));
    }
    Ok(by_count)
}

/// The cyclic condition, decided from the type-(ii) orbit sizes and checked
/// against the pointwise identities `^{x^y}y = ^xy` and `x^{^xy} = x^y`.
pub fn check_cyclic_condition(qs: &QuadraticSet) -> Result<bool> {
    require_quantum_binomial(qs)?;
    let census = enumerate_orbits(qs, 3)?;
    let by_orbits = census.type_ii_sizes().iter().all(|&s| s == 3);
    let pointwise = cyclic_identities_hold(qs);
    if by_orbits != pointwise {
        return Err(Error::violation(
            "cyclic condition <=> type-(ii) orbits have size 3",
            format!("orbit sizes say {by_orbits}, identities say {pointwise}"),
        ));
    }
    Ok(by_orbits)
}

pub fn cyclic_identities_hold(qs: &QuadraticSet) -> bool {
    let n = qs.n();
    (0..n).all(|x| {
        (0..n).all(|y| {
            qs.left(qs.right(x, y), y) == qs.left(x, y) && qs.right(x, qs.left(x, y)) == qs.right(x, y)
        })
    })
}
