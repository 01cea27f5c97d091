//! Executable equivalence checks run over fixtures, exhaustive small cases
//! and seeded random samples.
//!
//! Every check evaluates the sides of an equivalence independently and
//! records a witness (a presentation that reproduces the failure) when they
//! disagree.

use itertools::Itertools;
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{
    all_quantum_binomial, canonical_form, enumerate_quantum_binomial, orbit_profile_violation,
    sample_quantum_binomial, theorem3_harness, theorem3_harness_set, DEFAULT_HILBERT_BOUND,
};
use crate::error::{Error, Result};
use crate::graphs::{build_graphs, growth_and_gldim, monomial_algebra_check};
use crate::io::{emit_presentation, fixtures, Presentation};
use crate::orbits::{enumerate_orbits, symmetric_via_orbits, OrbitKind};
use crate::pbw::{
    certify_skew_polynomial_ring, check_pbw, is_skew_polynomial_type, pbw_search, DegLexOrder, PbwReport,
};
use crate::quadratic_set::QuadraticSet;
use crate::relations::RelationSet;
use crate::word::{binomial, binomial_big, default_names, render};

/// The four conditions characterising PBW algebras with polynomial growth
/// and finite global dimension, for one PBW enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem1Verdict {
    pub order: String,
    pub polynomial_growth_and_gldim: bool,
    pub relations_and_gldim: bool,
    pub hilbert_series: bool,
    /// some relabelling `y_1 < .. < y_n` whose ordered monomials
    /// `y_1^a1 .. y_n^an` form a basis
    pub ordered_monomial_basis: Option<String>,
}

impl Theorem1Verdict {
    pub fn as_array(&self) -> [bool; 4] {
        [
            self.polynomial_growth_and_gldim,
            self.relations_and_gldim,
            self.hilbert_series,
            self.ordered_monomial_basis.is_some(),
        ]
    }
}

/// A relabelling whose ordered monomials are linearly independent in
/// degrees 2 and 3, provided `dim A_m = C(n+m-1, m)` for every `m <= bound`.
pub fn ordered_monomial_basis(rs: &RelationSet, bound: usize) -> Result<Option<DegLexOrder>> {
    let n = rs.n();
    let space = rs.space();
    let dims = space.dims(bound.max(3))?;
    if dims.iter().enumerate().any(|(m, &d)| m > 0 && d != binomial(n + m - 1, m)) {
        return Ok(None);
    }
    let echelons = [space.ideal_echelon(2)?, space.ideal_echelon(3)?];
    for ascending in (0..n).permutations(n) {
        let independent = echelons.iter().zip([2, 3]).all(|(ech, m)| {
            let mut ech = ech.clone();
            (0..m)
                .map(|_| 0..n)
                .multi_cartesian_product()
                .filter(|idx| idx.windows(2).all(|w| w[0] <= w[1]))
                .all(|idx| {
                    let code = idx.iter().fold(0, |acc, &k| acc * n + ascending[k]);
                    ech.insert(vec![(code, 1.into())])
                })
        });
        if independent {
            return DegLexOrder::new(ascending).map(Some);
        }
    }
    Ok(None)
}

/// Evaluates the four conditions for a PBW enumeration and fails with a
/// violation if they disagree.
pub fn theorem1_check(rs: &RelationSet, report: &PbwReport, bound: usize) -> Result<Theorem1Verdict> {
    if !report.is_pbw {
        return Err(Error::Precondition("the enumeration is not PBW".into()));
    }
    let n = rs.n();
    let (gn, gw) = build_graphs(n, &report.obstructions);
    let growth = growth_and_gldim(&gn, &gw, bound);
    let finite = growth.gldim.is_some();
    let verdict = Theorem1Verdict {
        order: report.order.render(rs.names()),
        polynomial_growth_and_gldim: growth.polynomial && finite,
        relations_and_gldim: report.obstructions.len() == binomial(n, 2) && finite,
        hilbert_series: growth
            .hilbert
            .iter()
            .enumerate()
            .all(|(m, h)| *h == hilbert_target(n, m)),
        ordered_monomial_basis: ordered_monomial_basis(rs, bound)?.map(|o| o.render(rs.names())),
    };
    if !verdict.as_array().iter().all_equal() {
        return Err(Error::violation(
            "polynomial growth + finite gldim / C(n,2) relations + finite gldim / Hilbert series / ordered monomial basis",
            format!("{verdict:?}"),
        ));
    }
    Ok(verdict)
}

fn hilbert_target(n: usize, m: usize) -> BigUint {
    if m == 0 {
        BigUint::from(1u8)
    } else {
        binomial_big(n + m - 1, m)
    }
}

/// `R` braided, binomial skew polynomial ring, `dim A_3 = C(n+2,3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Theorem2Verdict {
    pub yang_baxter: bool,
    pub skew_polynomial: bool,
    pub dim_a3: bool,
}

pub fn theorem2_check(rs: &RelationSet) -> Result<Theorem2Verdict> {
    if !rs.is_quantum_binomial() {
        return Err(Error::Precondition("relations are not quantum binomial".into()));
    }
    let v = Theorem2Verdict {
        yang_baxter: rs.check_r_yang_baxter(),
        skew_polynomial: certify_skew_polynomial_ring(rs)?.is_some(),
        dim_a3: rs.dim_a(3)? == binomial(rs.n() + 2, 3),
    };
    if !(v.yang_baxter == v.skew_polynomial && v.skew_polynomial == v.dim_a3) {
        return Err(Error::violation("R braided / skew polynomial / dim A_3", format!("{v:?}")));
    }
    Ok(v)
}

/// `W = { p_j p_i : i < j }` for a uniformly random enumeration `p`.
pub fn random_acyclic_tournament<R: Rng>(n: usize, rng: &mut R) -> Vec<(usize, usize)> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    (0..n).flat_map(|j| (0..j).map(move |i| (j, i))).map(|(j, i)| (p[j], p[i])).collect()
}

/// A uniformly random subset of `X^2`.
pub fn random_obstructions<R: Rng>(n: usize, rng: &mut R) -> Vec<(usize, usize)> {
    (0..n * n).filter(|_| rng.gen()).map(|c| (c / n, c % n)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "scope")]
pub enum Scope {
    /// the shipped examples
    Fixtures,
    /// every quantum binomial set and every `W` for `n <= 3`
    ExhaustiveN3,
    /// seeded random instances with `n <= 6`
    Sampled { samples: usize, seed: u64 },
    /// the full census for `n <= 4`
    CensusN4,
}

impl Scope {
    pub fn name(&self) -> &'static str {
        match self {
            Scope::Fixtures => "fixtures",
            Scope::ExhaustiveN3 => "exhaustive-n3",
            Scope::Sampled { .. } => "sampled-n5",
            Scope::CensusN4 => "census-n4",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// presentation text reproducing the instance
    pub presentation: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<Witness>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub scope: Scope,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = (&str, &Witness)> {
        self.checks
            .iter()
            .flat_map(|c| c.failures.iter().map(move |w| (c.name.as_str(), w)))
    }
}

#[derive(Default)]
struct Recorder {
    checks: Vec<CheckResult>,
}

impl Recorder {
    fn record(&mut self, name: &str, presentation: impl FnOnce() -> String, outcome: Result<Option<String>>) {
        let idx = match self.checks.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                self.checks.push(CheckResult {
                    name: name.to_string(),
                    cases: 0,
                    failures: Vec::new(),
                });
                self.checks.len() - 1
            }
        };
        let check = &mut self.checks[idx];
        check.cases += 1;
        let message = match outcome {
            Ok(None) => return,
            Ok(Some(m)) => m,
            Err(e) => e.to_string(),
        };
        check.failures.push(Witness {
            presentation: presentation(),
            message,
        });
    }
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    (!cond).then(msg)
}

fn set_text(qs: &QuadraticSet) -> String {
    emit_presentation(&Presentation::Set(qs.clone()))
}

fn relations_text(rs: &RelationSet) -> String {
    emit_presentation(&Presentation::Relations(rs.clone()))
}

fn obstruction_text(n: usize, w: &[(usize, usize)]) -> String {
    let names = default_names(n);
    let mut out = format!("gens {}\n", names.join(" "));
    for &(a, b) in w {
        out.push_str(&format!("# obstruction {}\n", render(&names, &[a, b])));
    }
    out
}

/// Runs every check belonging to `scope`. Failures are results, not errors.
pub fn run_suite(scope: Scope) -> Result<SuiteReport> {
    let mut rec = Recorder::default();
    match scope {
        Scope::Fixtures => fixture_checks(&mut rec)?,
        Scope::ExhaustiveN3 => {
            for n in 1..=3 {
                for qs in all_quantum_binomial(n)? {
                    set_checks(&mut rec, &qs, true);
                }
                for mask in 0u32..1 << (n * n) {
                    let w: Vec<(usize, usize)> =
                        (0..n * n).filter(|c| mask >> c & 1 == 1).map(|c| (c / n, c % n)).collect();
                    rec.record(
                        "monomial algebra equivalences",
                        || obstruction_text(n, &w),
                        monomial_algebra_check(n, &w, 8).map(|_| None),
                    );
                }
            }
        }
        Scope::Sampled { samples, seed } => {
            for qs in sample_quantum_binomial(&[4, 5], samples, seed)? {
                set_checks(&mut rec, &qs, false);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let n = rng.gen_range(2..=5);
                let w = random_obstructions(n, &mut rng);
                rec.record(
                    "monomial algebra equivalences",
                    || obstruction_text(n, &w),
                    monomial_algebra_check(n, &w, 8).map(|_| None),
                );
            }
            for _ in 0..samples {
                let n = *[4, 5, 6].choose(&mut rng).unwrap();
                let w = random_acyclic_tournament(n, &mut rng);
                rec.record(
                    "acyclic tournament growth",
                    || obstruction_text(n, &w),
                    Ok(tournament_violation(n, &w, 8)),
                );
            }
        }
        Scope::CensusN4 => {
            for n in 1..=4 {
                let census = enumerate_quantum_binomial(n)?;
                for rep in &census.representatives {
                    set_checks(&mut rec, &rep.set, true);
                    rec.record(
                        "canonical form idempotent",
                        || set_text(&rep.set),
                        Ok(expect(canonical_form(&rep.set) == rep.set, || "canonical form moved".into())),
                    );
                }
                for qs in all_quantum_binomial(n)? {
                    rec.record(
                        "orbit profile",
                        || set_text(&qs),
                        orbit_profile_violation(&qs),
                    );
                    rec.record(
                        "every set lies in one class",
                        || set_text(&qs),
                        Ok(expect(census.class_of(&qs).is_some(), || "no class".into())),
                    );
                }
            }
        }
    }
    Ok(SuiteReport {
        scope,
        checks: rec.checks,
    })
}

/// Growth degree and global dimension `n`, Hilbert coefficients
/// `C(n+m-1, m)` for `m <= bound`.
pub fn tournament_violation(n: usize, w: &[(usize, usize)], bound: usize) -> Option<String> {
    let (gn, gw) = build_graphs(n, w);
    let g = growth_and_gldim(&gn, &gw, bound);
    if g.gldim != Some(n) {
        return Some(format!("gldim {:?}", g.gldim));
    }
    if g.degree != Some(n) {
        return Some(format!("growth degree {:?}", g.degree));
    }
    g.hilbert
        .iter()
        .enumerate()
        .find(|(m, h)| **h != hilbert_target(n, *m))
        .map(|(m, h)| format!("dim A_{m} = {h}"))
}

fn counting_identity(qs: &QuadraticSet) -> Result<Option<String>> {
    let n = qs.n();
    let c = enumerate_orbits(qs, 3)?;
    let sum: usize = c.type_ii_sizes().iter().sum::<usize>() + c.square_free_sizes().iter().sum::<usize>();
    Ok(expect(
        c.count_kind(OrbitKind::Diagonal) == n && c.count_kind(OrbitKind::Other) == 0 && n * n * n == n + sum,
        || format!("n^3 = {} but n + sizes = {}", n * n * n, n + sum),
    ))
}

fn four_way(qs: &QuadraticSet) -> Result<Option<String>> {
    let n = qs.n();
    let rs = RelationSet::from_set(qs)?;
    let braid = qs.check_braid();
    let by_q = symmetric_via_orbits(qs)?;
    let by_dim = enumerate_orbits(qs, 3)?.len() == binomial(n + 2, 3);
    let cert = certify_skew_polynomial_ring(&rs)?;
    let mut msg = None;
    if !(braid == by_q && by_q == by_dim && by_dim == cert.is_some()) {
        msg = Some(format!(
            "braid {braid}, q = C(n,3) {by_q}, dim A_3 {by_dim}, certificate {}",
            cert.is_some()
        ));
    } else if let Some(o) = &cert {
        if !is_skew_polynomial_type(&rs, o)? {
            msg = Some("certificate order is not of skew polynomial type".into());
        }
    }
    Ok(msg)
}

fn dual_formula(rs: &RelationSet) -> Result<Option<String>> {
    let n = rs.n() as i64;
    let dual = rs.koszul_dual_relations().dim(3)? as i64;
    let formula = n * n * n - 2 * n * rs.dim_a(2)? as i64 + rs.dim_a(3)? as i64;
    Ok(expect(dual == formula, || format!("rank {dual}, formula {formula}")))
}

fn theorem1_all_orders(rs: &RelationSet) -> Result<Option<String>> {
    for ord in pbw_search(rs)? {
        theorem1_check(rs, &check_pbw(rs, &ord)?, DEFAULT_HILBERT_BOUND)?;
    }
    Ok(None)
}

/// Checks for one quantum binomial set.
fn set_checks(rec: &mut Recorder, qs: &QuadraticSet, with_theorem3: bool) {
    let text = || set_text(qs);
    rec.record("counting identity", text, counting_identity(qs));
    rec.record("orbit profile", text, orbit_profile_violation(qs));
    rec.record("braid / q / dim A_3 / certificate", text, four_way(qs));
    let rs = match RelationSet::from_set(qs) {
        Ok(rs) => rs,
        Err(e) => {
            rec.record("relations", text, Err(e));
            return;
        }
    };
    rec.record("theorem 2 triangle", text, theorem2_check(&rs).map(|_| None));
    rec.record("dual dimension formula", text, dual_formula(&rs));
    if with_theorem3 {
        rec.record(
            "theorem 3 matrix",
            text,
            theorem3_harness_set(qs, DEFAULT_HILBERT_BOUND).map(|_| None),
        );
        rec.record("theorem 1 on PBW orders", text, theorem1_all_orders(&rs));
    }
}

fn fixture_checks(rec: &mut Recorder) -> Result<()> {
    let ex1 = fixtures::example1()?;
    let ex2 = fixtures::example2()?;
    let ex3 = fixtures::example3()?;

    // example 1
    let qs1 = ex1.quadratic_set();
    let rs1 = ex1.relation_set()?;
    let t = || relations_text(&rs1);
    let p = qs1.predicates();
    rec.record(
        "example 1 predicates",
        t,
        Ok(expect(
            p.involutive && p.nondegenerate && p.square_free && p.braided && p.quantum_binomial && p.symmetric,
            || format!("{p:?}"),
        )),
    );
    rec.record(
        "example 1 dim A_3",
        t,
        (|| {
            let by_orbits = enumerate_orbits(&qs1, 3)?.len();
            let by_rank = rs1.dim_a(3)?;
            Ok(expect(by_orbits == 35 && by_rank == 35, || format!("{by_orbits} / {by_rank}")))
        })(),
    );
    rec.record(
        "example 1 reordering",
        t,
        (|| {
            let ord = DegLexOrder::parse(rs1.names(), "x1<x3<x2<x4<x5")?;
            let pbw = check_pbw(&rs1, &ord)?.is_pbw;
            let skew = is_skew_polynomial_type(&rs1, &ord)?;
            Ok(expect(pbw && skew, || format!("pbw {pbw}, skew type {skew}")))
        })(),
    );

    // example 2
    let qs2 = ex2.quadratic_set();
    let rs2 = ex2.relation_set()?;
    let t = || relations_text(&rs2);
    rec.record(
        "example 2 orbit census",
        t,
        (|| {
            let c = enumerate_orbits(&qs2, 3)?;
            let mut ii = c.type_ii_sizes();
            ii.sort();
            let ok = c.len() == 18
                && c.count_kind(OrbitKind::Diagonal) == 4
                && ii == [3, 3, 3, 3, 3, 3, 3, 3, 6, 6, 6, 6]
                && c.square_free_sizes() == [6, 6]
                && c.total_size() == 64;
            Ok(expect(ok, || format!("{} orbits, type-(ii) {ii:?}", c.len())))
        })(),
    );
    rec.record(
        "example 2 negatives",
        t,
        (|| {
            let braid = qs2.check_braid();
            let orders = pbw_search(&rs2)?.len();
            let (o, r) = (enumerate_orbits(&qs2, 3)?.len(), rs2.dim_a(3)?);
            Ok(expect(!braid && orders == 0 && o == 18 && r == 18, || {
                format!("braid {braid}, {orders} orders, dim A_3 {o} / {r}")
            }))
        })(),
    );
    rec.record(
        "example 2 theorem 3 matrix all false",
        t,
        theorem3_harness(&rs2, DEFAULT_HILBERT_BOUND).map(|m| expect(m.all_false(), || format!("{m:?}"))),
    );

    // example 3
    let rs3 = ex3.relation_set()?;
    let t = || relations_text(&rs3);
    rec.record(
        "example 3 overlaps",
        t,
        (|| {
            let ord = DegLexOrder::parse(rs3.names(), "t>x>z>y")?;
            let rep = check_pbw(&rs3, &ord)?;
            let mut seen = rep.render_overlaps(rs3.names());
            seen.sort();
            Ok(expect(rep.is_pbw && seen == ["txy", "txz", "tzy", "xzy"], || {
                format!("pbw {}, overlaps {seen:?}", rep.is_pbw)
            }))
        })(),
    );
    rec.record(
        "example 3 eight orders",
        t,
        (|| {
            let names = rs3.names();
            let idx = |s: &str| names.iter().position(|g| g == s).unwrap();
            let (tx, zy) = ([idx("t"), idx("x")], [idx("z"), idx("y")]);
            let orders = pbw_search(&rs3)?;
            let separated = |o: &DegLexOrder| {
                let high = |x| o.rank(x) >= 2;
                tx.iter().all(|&x| high(x)) && zy.iter().all(|&x| !high(x))
                    || tx.iter().all(|&x| !high(x)) && zy.iter().all(|&x| high(x))
            };
            Ok(expect(orders.len() == 8 && orders.iter().all(separated), || {
                format!("{} orders", orders.len())
            }))
        })(),
    );
    rec.record(
        "example 3 hilbert and gldim",
        t,
        (|| {
            let ord = DegLexOrder::parse(rs3.names(), "t>x>z>y")?;
            let rep = check_pbw(&rs3, &ord)?;
            let (gn, gw) = build_graphs(4, &rep.obstructions);
            let g = growth_and_gldim(&gn, &gw, 5);
            let want: Vec<BigUint> = [1u32, 4, 10, 20, 35, 56].iter().map(|&x| x.into()).collect();
            Ok(expect(g.hilbert == want && g.gldim == Some(4), || format!("{g:?}")))
        })(),
    );
    rec.record(
        "example 3 dual dims",
        t,
        (|| {
            let dual = rs3.koszul_dual_relations();
            let dims = dual.dims(5)?;
            let grassmann = dual.is_quantum_grassmann()?;
            Ok(expect(dims == [1, 4, 6, 4, 1, 0] && grassmann, || format!("{dims:?}")))
        })(),
    );
    rec.record(
        "example 3 theorem 3 matrix all true",
        t,
        theorem3_harness(&rs3, DEFAULT_HILBERT_BOUND).map(|m| expect(m.all_true(), || format!("{m:?}"))),
    );

    for (label, rs) in [("example 1", &rs1), ("example 2", &rs2), ("example 3", &rs3)] {
        let t = || relations_text(rs);
        rec.record("dual dimension formula", t, dual_formula(rs));
        rec.record("theorem 2 triangle", t, theorem2_check(rs).map(|_| None));
        rec.record("theorem 1 on PBW orders", t, theorem1_all_orders(rs));
        rec.record(
            &format!("{label} orbit profile"),
            t,
            orbit_profile_violation(rs.derived_set()),
        );
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_tournaments_are_tournaments() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..7 {
            let w = random_acyclic_tournament(n, &mut rng);
            let (_, gw) = build_graphs(n, &w);
            assert!(crate::graphs::is_acyclic_tournament(&gw));
            assert_eq!(tournament_violation(n, &w, 6), None);
        }
    }

    #[test]
    fn theorem1_on_transposition() {
        let rs = RelationSet::from_set(&QuadraticSet::transposition(3)).unwrap();
        let ord = DegLexOrder::natural(3);
        let v = theorem1_check(&rs, &check_pbw(&rs, &ord).unwrap(), 4).unwrap();
        assert!(v.as_array().iter().all(|&b| b));
    }

    #[test]
    fn theorem2_on_transposition() {
        let rs = RelationSet::from_set(&QuadraticSet::transposition(4)).unwrap();
        let v = theorem2_check(&rs).unwrap();
        assert!(v.yang_baxter && v.skew_polynomial && v.dim_a3);
    }

    #[test]
    fn witness_records_failure() {
        let mut rec = Recorder::default();
        rec.record("a", || "gens x\n".into(), Ok(None));
        rec.record("a", || "gens y\n".into(), Ok(Some("bad".into())));
        assert_eq!(rec.checks[0].cases, 2);
        assert_eq!(rec.checks[0].failures[0].presentation, "gens y\n");
    }
}
