//! Exhaustive enumeration of quantum binomial sets up to isomorphism.
//!
//! An involutive square-free `r` with nondegenerate actions fixes no
//! off-diagonal pair (a fixed `(x, y)` would force `L_x(y) = x = L_x(x)`),
//! so it is a perfect matching of the off-diagonal pairs. The search picks
//! the partner of the smallest unmatched pair, keeping every row of the
//! left and right action tables injective.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{build_graphs, growth_and_gldim};
use crate::orbits::{enumerate_orbits, OrbitKind};
use crate::pbw::{certify_skew_polynomial_ring, check_pbw, pbw_search, DegLexOrder};
use crate::quadratic_set::QuadraticSet;
use crate::relations::RelationSet;
use crate::word::{binomial, default_names};

/// Largest `|X|` accepted by [`enumerate_quantum_binomial`].
pub const MAX_CENSUS_N: usize = 5;

const UNSET: usize = usize::MAX;

#[derive(Clone)]
struct Partial {
    n: usize,
    rmap: Vec<usize>,
    /// bit `v` of `left_used[x]`: some `y` already has `L_x(y) = v`
    left_used: Vec<u32>,
    right_used: Vec<u32>,
}

impl Partial {
    fn new(n: usize) -> Self {
        let mut p = Partial {
            n,
            rmap: vec![UNSET; n * n],
            left_used: vec![0; n],
            right_used: vec![0; n],
        };
        for x in 0..n {
            p.rmap[x * n + x] = x * n + x;
            p.left_used[x] = 1 << x;
            p.right_used[x] = 1 << x;
        }
        p
    }

    fn first_open(&self) -> Option<usize> {
        self.rmap.iter().position(|&c| c == UNSET)
    }

    fn fits(&self, c: usize, d: usize) -> bool {
        let n = self.n;
        let (x, y, a, b) = (c / n, c % n, d / n, d % n);
        self.rmap[d] == UNSET
            && self.left_used[x] & (1 << a) == 0
            && self.left_used[a] & (1 << x) == 0
            && self.right_used[y] & (1 << b) == 0
            && self.right_used[b] & (1 << y) == 0
    }

    fn candidates(&self, c: usize) -> Vec<usize> {
        (c + 1..self.n * self.n).filter(|&d| self.fits(c, d)).collect()
    }

    fn set(&mut self, c: usize, d: usize) {
        let n = self.n;
        let (x, y, a, b) = (c / n, c % n, d / n, d % n);
        self.rmap[c] = d;
        self.rmap[d] = c;
        self.left_used[x] |= 1 << a;
        self.left_used[a] |= 1 << x;
        self.right_used[y] |= 1 << b;
        self.right_used[b] |= 1 << y;
    }

    fn unset(&mut self, c: usize, d: usize) {
        let n = self.n;
        let (x, y, a, b) = (c / n, c % n, d / n, d % n);
        self.rmap[c] = UNSET;
        self.rmap[d] = UNSET;
        self.left_used[x] &= !(1 << a);
        self.left_used[a] &= !(1 << x);
        self.right_used[y] &= !(1 << b);
        self.right_used[b] &= !(1 << y);
    }

    fn visit(&mut self, out: &mut dyn FnMut(&[usize])) {
        let Some(c) = self.first_open() else {
            out(&self.rmap);
            return;
        };
        for d in self.candidates(c) {
            self.set(c, d);
            self.visit(out);
            self.unset(c, d);
        }
    }

    fn visit_random(&mut self, rng: &mut ChaCha8Rng) -> bool {
        let Some(c) = self.first_open() else {
            return true;
        };
        let mut cands = self.candidates(c);
        cands.shuffle(rng);
        for d in cands {
            self.set(c, d);
            if self.visit_random(rng) {
                return true;
            }
            self.unset(c, d);
        }
        false
    }
}

/// Calls `f` with the pair-code table of every quantum binomial set on
/// `{0, .., n-1}`, in lexicographic order of the tables.
pub fn for_each_quantum_binomial(n: usize, mut f: impl FnMut(&[usize])) -> Result<()> {
    check_bound(n)?;
    Partial::new(n).visit(&mut f);
    Ok(())
}

/// Every quantum binomial set on `n` elements (labelled, not up to
/// isomorphism).
pub fn all_quantum_binomial(n: usize) -> Result<Vec<QuadraticSet>> {
    let mut out = Vec::new();
    for_each_quantum_binomial(n, |rmap| {
        out.push(QuadraticSet::from_codes_unchecked(default_names(n), rmap.to_vec()))
    })?;
    Ok(out)
}

fn check_bound(n: usize) -> Result<()> {
    if n == 0 || n > MAX_CENSUS_N {
        return Err(Error::BoundExceeded(format!(
            "exhaustive search needs 1 <= n <= {MAX_CENSUS_N}, got {n}"
        )));
    }
    Ok(())
}

fn relabelled_codes(n: usize, rmap: &[usize], sigma: &[usize], out: &mut [usize]) {
    for x in 0..n {
        for y in 0..n {
            let c = rmap[x * n + y];
            out[sigma[x] * n + sigma[y]] = sigma[c / n] * n + sigma[c % n];
        }
    }
}

fn canonical_codes(n: usize, rmap: &[usize], perms: &[Vec<usize>]) -> Vec<usize> {
    let mut best = rmap.to_vec();
    let mut buf = vec![0; n * n];
    for sigma in perms {
        relabelled_codes(n, rmap, sigma, &mut buf);
        if buf < best {
            best.copy_from_slice(&buf);
        }
    }
    best
}

/// The relabelling of `qs` with lexicographically smallest pair-code table.
/// Generator names are reset to `x1, .., xn`.
pub fn canonical_form(qs: &QuadraticSet) -> QuadraticSet {
    let n = qs.n();
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let codes = canonical_codes(n, qs.rmap_codes(), &perms);
    QuadraticSet::from_codes_unchecked(default_names(n), codes)
}

pub fn are_isomorphic(a: &QuadraticSet, b: &QuadraticSet) -> bool {
    a.n() == b.n() && canonical_form(a).rmap_codes() == canonical_form(b).rmap_codes()
}

/// Invariants of one isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassInvariants {
    /// number of labelled sets in the class
    pub class_size: usize,
    pub symmetric: bool,
    /// number of square-free orbits in degree 3
    pub q: usize,
    pub type_ii_sizes: Vec<usize>,
    pub square_free_sizes: Vec<usize>,
    pub dim_a3: usize,
    pub pbw_order_count: usize,
    pub certificate: Option<String>,
}

#[derive(Debug, Clone)]
pub struct Representative {
    pub set: QuadraticSet,
    pub invariants: ClassInvariants,
}

#[derive(Debug, Clone)]
pub struct SolutionCensus {
    pub n: usize,
    /// labelled quantum binomial sets
    pub total_quantum_binomial: usize,
    /// labelled symmetric ones among them
    pub total_symmetric: usize,
    pub representatives: Vec<Representative>,
}

impl SolutionCensus {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn symmetric_class_count(&self) -> usize {
        self.representatives.iter().filter(|r| r.invariants.symmetric).count()
    }

    /// Index of the class containing `qs`.
    pub fn class_of(&self, qs: &QuadraticSet) -> Option<usize> {
        let canon = canonical_form(qs);
        self.representatives
            .iter()
            .position(|r| r.set.rmap_codes() == canon.rmap_codes())
    }
}

/// All quantum binomial sets on `n <= 5` elements up to isomorphism, with
/// labelled totals and per-class invariants. Deterministic.
pub fn enumerate_quantum_binomial(n: usize) -> Result<SolutionCensus> {
    check_bound(n)?;
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let root = Partial::new(n);
    // canonical table -> (labelled count, symmetric)
    let classes: BTreeMap<Vec<usize>, (usize, bool)> = match root.first_open() {
        None => {
            let qs = QuadraticSet::from_codes_unchecked(default_names(n), root.rmap.clone());
            BTreeMap::from([(root.rmap.clone(), (1, qs.predicates().symmetric))])
        }
        Some(c) => {
            let parts: Vec<HashMap<Vec<usize>, (usize, bool)>> = root
                .candidates(c)
                .into_par_iter()
                .map(|d| {
                    let mut p = root.clone();
                    p.set(c, d);
                    let mut local: HashMap<Vec<usize>, (usize, bool)> = HashMap::new();
                    p.visit(&mut |rmap| {
                        let key = canonical_codes(n, rmap, &perms);
                        local
                            .entry(key)
                            .and_modify(|e| e.0 += 1)
                            .or_insert_with(|| {
                                let qs = QuadraticSet::from_codes_unchecked(default_names(n), rmap.to_vec());
                                (1, qs.predicates().symmetric)
                            });
                    });
                    local
                })
                .collect();
            let mut merged = BTreeMap::new();
            for part in parts {
                for (k, (count, sym)) in part {
                    merged.entry(k).and_modify(|e: &mut (usize, bool)| e.0 += count).or_insert((count, sym));
                }
            }
            merged
        }
    };
    let total_quantum_binomial = classes.values().map(|e| e.0).sum();
    let total_symmetric = classes.values().filter(|e| e.1).map(|e| e.0).sum();
    let entries: Vec<(Vec<usize>, (usize, bool))> = classes.into_iter().collect();
    let representatives = entries
        .into_par_iter()
        .map(|(codes, (class_size, _))| {
            let set = QuadraticSet::from_codes_unchecked(default_names(n), codes);
            let invariants = class_invariants(&set, class_size)?;
            Ok(Representative { set, invariants })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SolutionCensus {
        n,
        total_quantum_binomial,
        total_symmetric,
        representatives,
    })
}

fn class_invariants(set: &QuadraticSet, class_size: usize) -> Result<ClassInvariants> {
    let orbits = enumerate_orbits(set, 3)?;
    let rs = RelationSet::from_set(set)?;
    Ok(ClassInvariants {
        class_size,
        symmetric: set.predicates().symmetric,
        q: orbits.q(),
        type_ii_sizes: orbits.type_ii_sizes(),
        square_free_sizes: orbits.square_free_sizes(),
        dim_a3: orbits.len(),
        pbw_order_count: pbw_search(&rs)?.len(),
        certificate: certify_skew_polynomial_ring(&rs)?.map(|o| o.render(set.names())),
    })
}

/// A quantum binomial set on `n` elements drawn by randomized
/// backtracking. The distribution is not uniform over labelled sets.
pub fn random_quantum_binomial<R: Rng>(n: usize, rng: &mut R) -> Result<QuadraticSet> {
    if n == 0 || n > 8 {
        return Err(Error::BoundExceeded(format!("sampling needs 1 <= n <= 8, got {n}")));
    }
    let mut chacha = ChaCha8Rng::seed_from_u64(rng.gen());
    let mut p = Partial::new(n);
    if !p.visit_random(&mut chacha) {
        return Err(Error::InvalidInput(format!("no quantum binomial set on {n} elements")));
    }
    Ok(QuadraticSet::from_codes_unchecked(default_names(n), p.rmap))
}

/// `samples` random quantum binomial sets with `|X|` drawn from `sizes`.
pub fn sample_quantum_binomial(sizes: &[usize], samples: usize, seed: u64) -> Result<Vec<QuadraticSet>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let n = *sizes
                .choose(&mut rng)
                .ok_or_else(|| Error::InvalidInput("no sizes to sample from".into()))?;
            random_quantum_binomial(n, &mut rng)
        })
        .collect()
}

/// Default degree bound for the Hilbert series condition.
pub const DEFAULT_HILBERT_BOUND: usize = 5;

/// The conditions characterising PBW Artin-Schelter regular quantum
/// binomial algebras, each evaluated independently. AS-regularity itself
/// is not computed; `as_regular` repeats the certificate verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem3Matrix {
    /// PBW for some enumeration with `Γ_W` acyclic
    pub pbw_finite_gldim: bool,
    /// PBW for some enumeration with polynomial growth of `Γ_N`
    pub pbw_polynomial_growth: bool,
    pub as_regular: bool,
    /// `R` satisfies the braid relation
    pub yang_baxter: bool,
    /// a binomial skew polynomial ring for some enumeration
    pub skew_polynomial: bool,
    /// `dim A_3 = C(n+2,3)` and `dim A!_3 = C(n,3)`
    pub dim_a3: bool,
    /// `dim A_m = C(n+m-1,m)` up to the bound
    pub hilbert_series: bool,
    /// `A!` has dims `C(n,i)`
    pub dual_grassmann: bool,
    pub certificate: Option<String>,
    pub pbw_orders: Vec<String>,
}

impl Theorem3Matrix {
    /// The evaluated conditions, leaving out the implied AS-regularity.
    pub fn evaluated(&self) -> [bool; 7] {
        [
            self.pbw_finite_gldim,
            self.pbw_polynomial_growth,
            self.yang_baxter,
            self.skew_polynomial,
            self.dim_a3,
            self.hilbert_series,
            self.dual_grassmann,
        ]
    }

    pub fn all_equal(&self) -> bool {
        self.evaluated().iter().all_equal()
    }

    pub fn all_true(&self) -> bool {
        self.evaluated().iter().all(|&b| b)
    }

    pub fn all_false(&self) -> bool {
        self.evaluated().iter().all(|&b| !b)
    }
}

/// Evaluates every condition for a quantum binomial algebra and fails with
/// a violation if they disagree.
pub fn theorem3_harness(rs: &RelationSet, bound: usize) -> Result<Theorem3Matrix> {
    if !rs.is_quantum_binomial() {
        return Err(Error::Precondition("relations are not quantum binomial".into()));
    }
    let n = rs.n();
    let names = rs.names();
    let orders = pbw_search(rs)?;
    let mut pbw_finite_gldim = false;
    let mut pbw_polynomial_growth = false;
    for ord in &orders {
        let report = check_pbw(rs, ord)?;
        let (gn, gw) = build_graphs(n, &report.obstructions);
        let growth = growth_and_gldim(&gn, &gw, 0);
        pbw_finite_gldim |= growth.gldim.is_some();
        pbw_polynomial_growth |= growth.polynomial;
    }
    let certificate = certify_skew_polynomial_ring(rs)?;
    let dims = rs.space().dims(bound.max(3))?;
    let dual = rs.koszul_dual_relations();
    let dual_a3 = rs.dim_a_dual(3)?;
    let matrix = Theorem3Matrix {
        pbw_finite_gldim,
        pbw_polynomial_growth,
        as_regular: certificate.is_some(),
        yang_baxter: rs.check_r_yang_baxter(),
        skew_polynomial: certificate.is_some(),
        dim_a3: dims[3] == binomial(n + 2, 3) && dual_a3 == binomial(n, 3),
        hilbert_series: dims
            .iter()
            .take(bound + 1)
            .enumerate()
            .all(|(m, &d)| m == 0 && d == 1 || m > 0 && d == binomial(n + m - 1, m)),
        dual_grassmann: dual.is_quantum_grassmann()?,
        certificate: certificate.as_ref().map(|o: &DegLexOrder| o.render(names)),
        pbw_orders: orders.iter().map(|o| o.render(names)).collect(),
    };
    if !matrix.all_equal() {
        return Err(Error::violation(
            "PBW + finite gldim / PBW + polynomial growth / Yang-Baxter / skew polynomial / dim A_3 / Hilbert series / quantum Grassmann dual",
            format!("{:?}", matrix.evaluated()),
        ));
    }
    Ok(matrix)
}

/// [`theorem3_harness`] on the algebra of a quantum binomial set.
pub fn theorem3_harness_set(qs: &QuadraticSet, bound: usize) -> Result<Theorem3Matrix> {
    if !qs.is_quantum_binomial() {
        return Err(Error::Precondition("(X, r) is not quantum binomial".into()));
    }
    let m = theorem3_harness(&RelationSet::from_set(qs)?, bound)?;
    if m.yang_baxter != qs.predicates().braided {
        return Err(Error::violation(
            "R braided iff r braided",
            format!("R: {}, r: {}", m.yang_baxter, qs.predicates().braided),
        ));
    }
    Ok(m)
}

/// Orbit conditions expected of every quantum binomial set: `n(n-1)`
/// type-(ii) orbits, all of size at least 3; square-free orbits of size at
/// least 6; `q <= C(n,3)`. Returns the first failing condition.
pub fn orbit_profile_violation(qs: &QuadraticSet) -> Result<Option<String>> {
    let n = qs.n();
    let census = enumerate_orbits(qs, 3)?;
    let type_ii = census.count_kind(OrbitKind::TypeIi);
    if type_ii != n * (n - 1) {
        return Ok(Some(format!("{type_ii} type-(ii) orbits, expected {}", n * (n - 1))));
    }
    if let Some(s) = census.type_ii_sizes().into_iter().find(|&s| s < 3) {
        return Ok(Some(format!("type-(ii) orbit of size {s}")));
    }
    if let Some(s) = census.square_free_sizes().into_iter().find(|&s| s < 6) {
        return Ok(Some(format!("square-free orbit of size {s}")));
    }
    if census.q() > binomial(n, 3) {
        return Ok(Some(format!("q = {} exceeds C(n,3) = {}", census.q(), binomial(n, 3))));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_and_n2() {
        let c = enumerate_quantum_binomial(1).unwrap();
        assert_eq!(c.total_quantum_binomial, 1);
        let c = enumerate_quantum_binomial(2).unwrap();
        assert_eq!(c.total_quantum_binomial, 1);
        assert_eq!(c.class_count(), 1);
        assert_eq!(c.representatives[0].set.rmap_codes(), QuadraticSet::transposition(2).rmap_codes());
    }

    #[test]
    fn enumerated_sets_are_quantum_binomial() {
        for n in 1..=3 {
            for qs in all_quantum_binomial(n).unwrap() {
                assert!(qs.is_quantum_binomial());
            }
        }
    }

    #[test]
    fn brute_force_agrees_for_n3() {
        // all involutions of the 9 pairs fixing the diagonal
        let n = 3;
        let off: Vec<usize> = (0..9).filter(|c| c / 3 != c % 3).collect();
        let mut count = 0;
        for images in off.iter().map(|_| off.iter()).multi_cartesian_product() {
            let mut rmap: Vec<usize> = (0..9).collect();
            for (&c, &d) in off.iter().zip(&images) {
                rmap[c] = *d;
            }
            if let Ok(qs) = QuadraticSet::from_codes(default_names(n), rmap) {
                if qs.is_quantum_binomial() {
                    count += 1;
                }
            }
        }
        assert_eq!(enumerate_quantum_binomial(3).unwrap().total_quantum_binomial, count);
    }

    #[test]
    fn canonical_form_is_invariant() {
        for qs in all_quantum_binomial(3).unwrap() {
            let canon = canonical_form(&qs);
            assert_eq!(canonical_form(&canon), canon);
            for sigma in (0..3).permutations(3) {
                assert_eq!(canonical_form(&qs.relabel(&sigma)).rmap_codes(), canon.rmap_codes());
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_total() {
        let c = enumerate_quantum_binomial(3).unwrap();
        let sum: usize = c.representatives.iter().map(|r| r.invariants.class_size).sum();
        assert_eq!(sum, c.total_quantum_binomial);
        assert!(c.class_of(&QuadraticSet::transposition(3)).is_some());
    }

    #[test]
    fn sampling_is_seeded() {
        let a = sample_quantum_binomial(&[4, 5], 5, 7).unwrap();
        let b = sample_quantum_binomial(&[4, 5], 5, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|qs| qs.is_quantum_binomial()));
    }

    #[test]
    fn transposition_harness_all_true() {
        let m = theorem3_harness_set(&QuadraticSet::transposition(3), 4).unwrap();
        assert!(m.all_true());
        assert_eq!(m.pbw_orders.len(), 6);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(enumerate_quantum_binomial(6).is_err());
        assert!(enumerate_quantum_binomial(0).is_err());
    }
}
