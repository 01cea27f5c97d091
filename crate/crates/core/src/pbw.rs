//! Degree-lexicographic orders, overlap resolution for quadratic relations
//! and the PBW / binomial skew polynomial ring decisions.
//!
//! For quadratic relations the diamond lemma reduces the Gröbner basis
//! question to the overlaps `uvw` with `uv` and `vw` both leading
//! monomials: the relations form a Gröbner basis iff every such word has a
//! single normal form. Rewriting a monomial by a binomial rule gives a
//! scalar multiple of one monomial, so normal forms are `(coefficient,
//! word)` pairs.

use std::cmp::Ordering;

use itertools::Itertools;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::relations::{RelationSet, Scalar};
use crate::word::{binomial, render, Word};

/// Largest generator count for which all `n!` enumerations are tried.
pub const DEFAULT_MAX_SEARCH: usize = 8;

/// An enumeration `x_{a_1} < x_{a_2} < .. < x_{a_n}` of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegLexOrder {
    ascending: Vec<usize>,
    rank: Vec<usize>,
}

impl DegLexOrder {
    /// `ascending[k]` is the generator of rank `k`.
    pub fn new(ascending: Vec<usize>) -> Result<Self> {
        let n = ascending.len();
        let mut rank = vec![usize::MAX; n];
        for (k, &x) in ascending.iter().enumerate() {
            if x >= n || rank[x] != usize::MAX {
                return Err(Error::InvalidInput(format!("{ascending:?} is not a permutation")));
            }
            rank[x] = k;
        }
        Ok(DegLexOrder { ascending, rank })
    }

    /// `x_0 < x_1 < .. < x_{n-1}`.
    pub fn natural(n: usize) -> Self {
        Self::new((0..n).collect()).unwrap()
    }

    pub fn n(&self) -> usize {
        self.ascending.len()
    }

    pub fn ascending(&self) -> &[usize] {
        &self.ascending
    }

    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    /// Deg-lex comparison: length first, then letters left to right.
    pub fn cmp_words(&self, a: &[usize], b: &[usize]) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            a.iter()
                .map(|&x| self.rank[x])
                .cmp(b.iter().map(|&x| self.rank[x]))
        })
    }

    /// `y<z<x<t` style rendering.
    pub fn render(&self, names: &[String]) -> String {
        self.ascending.iter().map(|&x| names[x].as_str()).join("<")
    }

    /// Accepts `t>x>z>y`, `y<z<x<t` or a comma/space separated ascending
    /// list `y,z,x,t`.
    pub fn parse(names: &[String], text: &str) -> Result<Self> {
        let text = text.trim();
        let (parts, descending): (Vec<&str>, bool) = if text.contains('>') {
            (text.split('>').collect(), true)
        } else if text.contains('<') {
            (text.split('<').collect(), false)
        } else {
            (text.split([',', ' ']).filter(|s| !s.is_empty()).collect(), false)
        };
        let mut ascending = Vec::with_capacity(parts.len());
        for p in parts {
            let p = p.trim();
            let idx = names
                .iter()
                .position(|s| s == p)
                .ok_or_else(|| Error::InvalidInput(format!("unknown generator `{p}` in order")))?;
            ascending.push(idx);
        }
        if descending {
            ascending.reverse();
        }
        if ascending.len() != names.len() {
            return Err(Error::InvalidInput(format!(
                "order lists {} generators, expected {}",
                ascending.len(),
                names.len()
            )));
        }
        Self::new(ascending)
    }
}

/// `lead = coeff * tail` in the algebra, with `lead > tail`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedRelation {
    pub lead: (usize, usize),
    pub tail: (usize, usize),
    pub coeff: Scalar,
}

/// Rewrites `xy - c y'x'` with its larger monomial as leading term; the
/// coefficient is inverted when the right side leads.
pub fn orient_relations(rs: &RelationSet, ord: &DegLexOrder) -> Result<Vec<OrientedRelation>> {
    if ord.n() != rs.n() {
        return Err(Error::InvalidInput("order and relations have different generator counts".into()));
    }
    rs.relations()
        .iter()
        .map(|r| {
            let l = [r.lhs.0, r.lhs.1];
            let t = [r.rhs.0, r.rhs.1];
            match ord.cmp_words(&l, &t) {
                Ordering::Greater => Ok(OrientedRelation {
                    lead: r.lhs,
                    tail: r.rhs,
                    coeff: r.coeff.clone(),
                }),
                Ordering::Less => Ok(OrientedRelation {
                    lead: r.rhs,
                    tail: r.lhs,
                    coeff: r.coeff.recip(),
                }),
                Ordering::Equal => Err(Error::DegenerateRelation {
                    relation: r.render(rs.names()),
                }),
            }
        })
        .collect()
}

/// An overlap whose two resolutions end in different normal forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbiguityFailure {
    pub overlap: Word,
    pub via_left: (Scalar, Word),
    pub via_right: (Scalar, Word),
}

#[derive(Debug, Clone)]
pub struct PbwReport {
    pub order: DegLexOrder,
    pub oriented: Vec<OrientedRelation>,
    /// Leading monomials, sorted by pair code.
    pub obstructions: Vec<(usize, usize)>,
    /// Every overlap `uvw` that was resolved, in encoding order.
    pub overlaps: Vec<Word>,
    pub is_pbw: bool,
    pub failing_overlap: Option<AmbiguityFailure>,
}

/// Monomial rewriting by oriented binomial rules.
struct Rewriter<'a> {
    n: usize,
    order: &'a DegLexOrder,
    rules: Vec<Option<((usize, usize), Scalar)>>,
}

impl<'a> Rewriter<'a> {
    fn new(n: usize, order: &'a DegLexOrder, oriented: &[OrientedRelation]) -> Self {
        let mut rules = vec![None; n * n];
        for o in oriented {
            rules[o.lead.0 * n + o.lead.1] = Some((o.tail, o.coeff.clone()));
        }
        Rewriter { n, order, rules }
    }

    fn rule(&self, a: usize, b: usize) -> Option<&((usize, usize), Scalar)> {
        self.rules[a * self.n + b].as_ref()
    }

    /// Repeatedly rewrites the leftmost occurrence of the largest reducible
    /// pair. Terminates since every step lowers the word in deg-lex.
    fn normal_form(&self, mut coeff: Scalar, mut word: Word) -> (Scalar, Word) {
        loop {
            let best = (0..word.len().saturating_sub(1))
                .filter(|&i| self.rule(word[i], word[i + 1]).is_some())
                .fold(None, |best: Option<usize>, i| match best {
                    Some(j) if self.order.cmp_words(&word[i..i + 2], &word[j..j + 2]) != Ordering::Greater => {
                        Some(j)
                    }
                    _ => Some(i),
                });
            let Some(i) = best else {
                return (coeff, word);
            };
            let ((a, b), c) = self.rule(word[i], word[i + 1]).unwrap();
            word[i] = *a;
            word[i + 1] = *b;
            coeff *= c;
        }
    }
}

/// Resolves every degree-3 overlap of the oriented relations.
pub fn check_pbw(rs: &RelationSet, ord: &DegLexOrder) -> Result<PbwReport> {
    let n = rs.n();
    let oriented = orient_relations(rs, ord)?;
    let rewriter = Rewriter::new(n, ord, &oriented);
    let mut obstructions: Vec<(usize, usize)> = oriented.iter().map(|o| o.lead).collect();
    obstructions.sort();

    let mut overlaps = Vec::new();
    let mut failing_overlap = None;
    for u in 0..n {
        for v in 0..n {
            let Some(((a, b), c1)) = rewriter.rule(u, v) else {
                continue;
            };
            for w in 0..n {
                let Some(((d, e), c2)) = rewriter.rule(v, w) else {
                    continue;
                };
                let via_left = rewriter.normal_form(c1.clone(), vec![*a, *b, w]);
                let via_right = rewriter.normal_form(c2.clone(), vec![u, *d, *e]);
                if via_left != via_right && failing_overlap.is_none() {
                    failing_overlap = Some(AmbiguityFailure {
                        overlap: vec![u, v, w],
                        via_left,
                        via_right,
                    });
                }
                overlaps.push(vec![u, v, w]);
            }
        }
    }
    Ok(PbwReport {
        order: ord.clone(),
        oriented,
        obstructions,
        overlaps,
        is_pbw: failing_overlap.is_none(),
        failing_overlap,
    })
}

/// Every enumeration of `n` generators, in lexicographic order.
pub fn all_orders(n: usize, max_n: usize) -> Result<Vec<DegLexOrder>> {
    if n > max_n {
        return Err(Error::BoundExceeded(format!("{n}! enumerations (limit n <= {max_n})")));
    }
    Ok((0..n)
        .permutations(n)
        .map(|p| DegLexOrder::new(p).unwrap())
        .collect())
}

/// All enumerations under which the relations form a Gröbner basis, in
/// lexicographic order of the ascending lists.
pub fn pbw_search(rs: &RelationSet) -> Result<Vec<DegLexOrder>> {
    pbw_search_bounded(rs, DEFAULT_MAX_SEARCH)
}

pub fn pbw_search_bounded(rs: &RelationSet, max_n: usize) -> Result<Vec<DegLexOrder>> {
    let orders = all_orders(rs.n(), max_n)?;
    let verdicts: Vec<bool> = orders
        .par_iter()
        .map(|o| check_pbw(rs, o).map(|r| r.is_pbw).unwrap_or(false))
        .collect();
    Ok(orders
        .into_iter()
        .zip(verdicts)
        .filter_map(|(o, ok)| ok.then_some(o))
        .collect())
}

/// Conditions (a)-(c) of a binomial skew polynomial ring after relabelling
/// by `ord`: `C(n,2)` relations `x_j x_i - c x_i' x_j'` with `j > i`,
/// `j > i'`, `i' < j'`, every ordered `x_i x_j` (`i < j`) on some right side.
pub fn is_skew_polynomial_type(rs: &RelationSet, ord: &DegLexOrder) -> Result<bool> {
    let n = rs.n();
    let oriented = orient_relations(rs, ord)?;
    if oriented.len() != binomial(n, 2) {
        return Ok(false);
    }
    let mut covered = vec![false; n * n];
    for o in &oriented {
        let (j, i) = (ord.rank(o.lead.0), ord.rank(o.lead.1));
        let (i2, j2) = (ord.rank(o.tail.0), ord.rank(o.tail.1));
        if !(j > i && j > i2 && i2 < j2) {
            return Ok(false);
        }
        covered[i2 * n + j2] = true;
    }
    Ok((0..n).all(|i| (i + 1..n).all(|j| covered[i * n + j])))
}

/// First enumeration (in lexicographic order) making the relations of
/// skew-polynomial type and a Gröbner basis.
pub fn certify_skew_polynomial_ring(rs: &RelationSet) -> Result<Option<DegLexOrder>> {
    certify_skew_polynomial_ring_bounded(rs, DEFAULT_MAX_SEARCH)
}

pub fn certify_skew_polynomial_ring_bounded(rs: &RelationSet, max_n: usize) -> Result<Option<DegLexOrder>> {
    let orders = all_orders(rs.n(), max_n)?;
    Ok(orders
        .into_par_iter()
        .find_first(|o| {
            is_skew_polynomial_type(rs, o).unwrap_or(false)
                && check_pbw(rs, o).map(|r| r.is_pbw).unwrap_or(false)
        }))
}

/// Words of length `m` none of whose adjacent pairs is an obstruction.
pub fn normal_words(report: &PbwReport, m: usize) -> Result<Vec<Word>> {
    if !report.is_pbw {
        return Err(Error::Precondition(
            "normal words form a basis only for a Gröbner basis".into(),
        ));
    }
    let n = report.order.n();
    let mut blocked = vec![false; n * n];
    for &(a, b) in &report.obstructions {
        blocked[a * n + b] = true;
    }
    Ok(words_avoiding(n, &blocked, m))
}

pub(crate) fn words_avoiding(n: usize, blocked: &[bool], m: usize) -> Vec<Word> {
    let mut out: Vec<Word> = vec![vec![]];
    for _ in 0..m {
        let mut next = Vec::new();
        for w in &out {
            for x in 0..n {
                if w.last().is_none_or(|&p| !blocked[p * n + x]) {
                    let mut e = w.clone();
                    e.push(x);
                    next.push(e);
                }
            }
        }
        out = next;
    }
    out
}

impl PbwReport {
    pub fn render_overlaps(&self, names: &[String]) -> Vec<String> {
        self.overlaps.iter().map(|w| render(names, w)).collect()
    }
}

/// `c == 1` for every rule, i.e. the check is purely set-theoretic.
pub fn unit_coefficients(oriented: &[OrientedRelation]) -> bool {
    oriented.iter().all(|o| o.coeff.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::Relation;
    use crate::word::default_names;

    #[test]
    fn deg_lex_comparison() {
        let ord = DegLexOrder::new(vec![2, 0, 1]).unwrap(); // 2 < 0 < 1
        assert_eq!(ord.cmp_words(&[0, 2], &[2, 1]), Ordering::Greater);
        assert_eq!(ord.cmp_words(&[1], &[2, 2]), Ordering::Less);
        assert_eq!(ord.cmp_words(&[1, 0], &[1, 0]), Ordering::Equal);
    }

    #[test]
    fn parse_orders() {
        let names: Vec<String> = ["x", "y", "z", "t"].iter().map(|s| s.to_string()).collect();
        let a = DegLexOrder::parse(&names, "t>x>z>y").unwrap();
        let b = DegLexOrder::parse(&names, "y<z<x<t").unwrap();
        let c = DegLexOrder::parse(&names, "y,z,x,t").unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(a.ascending(), &[1, 2, 0, 3]);
        assert!(DegLexOrder::parse(&names, "y<z<x").is_err());
        assert!(DegLexOrder::parse(&names, "y<z<x<w").is_err());
    }

    #[test]
    fn flipping_inverts_coefficient() {
        let c = Scalar::new(2.into(), 3.into());
        let rs = RelationSet::new(default_names(2), vec![Relation::new((0, 1), (1, 0), c.clone())]).unwrap();
        let o = orient_relations(&rs, &DegLexOrder::natural(2)).unwrap();
        assert_eq!(o[0].lead, (1, 0));
        assert_eq!(o[0].tail, (0, 1));
        assert_eq!(o[0].coeff, c.recip());
    }

    #[test]
    fn empty_relations_orient_to_nothing() {
        let rs = RelationSet::new(default_names(3), vec![]).unwrap();
        let ord = DegLexOrder::natural(3);
        assert!(orient_relations(&rs, &ord).unwrap().is_empty());
        let report = check_pbw(&rs, &ord).unwrap();
        assert!(report.is_pbw);
        assert!(report.overlaps.is_empty());
        assert_eq!(normal_words(&report, 2).unwrap().len(), 9);
    }

    #[test]
    fn two_generator_skew_ring() {
        // yx - xy with x < y
        let rs = RelationSet::new(default_names(2), vec![Relation::unit((1, 0), (0, 1))]).unwrap();
        let ord = DegLexOrder::natural(2);
        assert!(is_skew_polynomial_type(&rs, &ord).unwrap());
        assert!(check_pbw(&rs, &ord).unwrap().is_pbw);
        assert_eq!(normal_words(&check_pbw(&rs, &ord).unwrap(), 1).unwrap(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn search_bound() {
        let rs = RelationSet::new(default_names(3), vec![]).unwrap();
        assert!(pbw_search_bounded(&rs, 2).is_err());
        assert_eq!(pbw_search(&rs).unwrap().len(), 6);
    }

    #[test]
    fn normal_words_need_pbw() {
        // yx -> xy and zy -> xx: the overlap zyx reduces to xxx and to zxy
        let rs = RelationSet::new(
            default_names(3),
            vec![Relation::unit((1, 0), (0, 1)), Relation::unit((2, 1), (0, 0))],
        )
        .unwrap();
        let report = check_pbw(&rs, &DegLexOrder::natural(3)).unwrap();
        assert!(!report.is_pbw);
        let f = report.failing_overlap.as_ref().unwrap();
        assert_eq!(f.overlap, vec![2, 1, 0]);
        assert!(normal_words(&report, 2).is_err());
    }
}
