//! Binomial relation sets, the automorphism `R` on `V (x) V`, and exact
//! dimensions of quadratic algebras and their Koszul duals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{integer_row, null_space, Echelon};
use crate::quadratic_set::QuadraticSet;
use crate::word::{binomial, checked_pow, render};

/// Ground-field scalars.
pub type Scalar = BigRational;

/// Largest `n^m` for which degree-`m` dimensions are computed by default.
pub const DEFAULT_MONOMIAL_LIMIT: usize = 1_000_000;

/// The relation `lhs - coeff * rhs`, both sides length-two monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: (usize, usize),
    pub rhs: (usize, usize),
    pub coeff: Scalar,
}

impl Relation {
    pub fn new(lhs: (usize, usize), rhs: (usize, usize), coeff: Scalar) -> Self {
        Relation { lhs, rhs, coeff }
    }

    pub fn unit(lhs: (usize, usize), rhs: (usize, usize)) -> Self {
        Relation::new(lhs, rhs, Scalar::one())
    }

    pub fn render(&self, names: &[String]) -> String {
        let l = render(names, &[self.lhs.0, self.lhs.1]);
        let r = render(names, &[self.rhs.0, self.rhs.1]);
        if self.coeff.is_one() {
            format!("{l} - {r}")
        } else {
            format!("{l} - ({}){r}", self.coeff)
        }
    }
}

/// A set of binomial relations in which every length-two monomial occurs at
/// most once. Carries the associated quadratic set `r(Re)` and automorphism
/// `R(Re)`.
#[derive(Debug, Clone)]
pub struct RelationSet {
    n: usize,
    names: Vec<String>,
    rels: Vec<Relation>,
    derived_r: QuadraticSet,
    /// `R(e_c) = coeff * e_image` for every pair code `c`.
    automorphism: Vec<(usize, Scalar)>,
}

impl RelationSet {
    pub fn new(names: Vec<String>, rels: Vec<Relation>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidInput("at least one generator is required".into()));
        }
        let mut rmap: Vec<usize> = (0..n * n).collect();
        let mut automorphism: Vec<(usize, Scalar)> = (0..n * n).map(|c| (c, Scalar::one())).collect();
        let mut used = vec![false; n * n];
        for rel in &rels {
            let text = rel.render(&names);
            for &(a, b) in [&rel.lhs, &rel.rhs] {
                if a >= n || b >= n {
                    return Err(Error::InvalidInput(format!("relation {text} uses an unknown generator")));
                }
            }
            if rel.coeff.is_zero() {
                return Err(Error::ZeroCoefficient { relation: text });
            }
            if rel.lhs == rel.rhs {
                return Err(Error::DegenerateRelation { relation: text });
            }
            let l = rel.lhs.0 * n + rel.lhs.1;
            let r = rel.rhs.0 * n + rel.rhs.1;
            for c in [l, r] {
                if std::mem::replace(&mut used[c], true) {
                    return Err(Error::DuplicateMonomial {
                        monomial: render(&names, &[c / n, c % n]),
                    });
                }
            }
            rmap[l] = r;
            rmap[r] = l;
            automorphism[l] = (r, rel.coeff.clone());
            automorphism[r] = (l, rel.coeff.recip());
        }
        let derived_r = QuadraticSet::from_codes_unchecked(names.clone(), rmap);
        Ok(RelationSet {
            n,
            names,
            rels,
            derived_r,
            automorphism,
        })
    }

    /// One relation `xy - y'x'` for every unordered pair `{(x,y), r(x,y)}`
    /// moved by `r`. The side with the smaller pair code is the left side.
    pub fn from_set(qs: &QuadraticSet) -> Result<Self> {
        if !qs.predicates().involutive {
            return Err(Error::Precondition("relations of (X, r) need an involutive r".into()));
        }
        let n = qs.n();
        let rels = (0..n * n)
            .filter(|&c| qs.apply_code(c) > c)
            .map(|c| {
                let d = qs.apply_code(c);
                Relation::unit((c / n, c % n), (d / n, d % n))
            })
            .collect();
        Self::new(qs.names().to_vec(), rels)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &[Relation] {
        &self.rels
    }

    pub fn len(&self) -> usize {
        self.rels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rels.is_empty()
    }

    /// The quadratic set `r(Re)`.
    pub fn derived_set(&self) -> &QuadraticSet {
        &self.derived_r
    }

    /// `R(x (x) y)` as `(coefficient, image pair)`.
    pub fn apply_automorphism(&self, x: usize, y: usize) -> (Scalar, (usize, usize)) {
        let (img, c) = &self.automorphism[x * self.n + y];
        (c.clone(), (img / self.n, img % self.n))
    }

    pub fn all_coefficients_one(&self) -> bool {
        self.rels.iter().all(|r| r.coeff.is_one())
    }

    /// Square-free binomial relations with each monomial at most once whose
    /// associated `r` is nondegenerate.
    pub fn is_quantum_binomial(&self) -> bool {
        let square_free = self
            .rels
            .iter()
            .all(|r| r.lhs.0 != r.lhs.1 && r.rhs.0 != r.rhs.1);
        let ok = square_free && self.derived_r.check_nondegenerate();
        if ok {
            assert_eq!(
                self.rels.len(),
                binomial(self.n, 2),
                "quantum binomial relations must number C(n, 2)"
            );
        }
        ok
    }

    /// `R^{12} R^{23} R^{12} = R^{23} R^{12} R^{23}` on every basis tensor.
    pub fn check_r_yang_baxter(&self) -> bool {
        let n = self.n;
        let r12 = |(c, t): (Scalar, [usize; 3])| {
            let (k, (a, b)) = self.apply_automorphism(t[0], t[1]);
            (c * k, [a, b, t[2]])
        };
        let r23 = |(c, t): (Scalar, [usize; 3])| {
            let (k, (b, d)) = self.apply_automorphism(t[1], t[2]);
            (c * k, [t[0], b, d])
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let start = (Scalar::one(), [x, y, z]);
                    if r12(r23(r12(start.clone()))) != r23(r12(r23(start))) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The relation subspace of `V (x) V` spanned by `lhs - c * rhs`.
    pub fn space(&self) -> RelationSpace {
        let n = self.n;
        let vectors = self
            .rels
            .iter()
            .map(|r| {
                let l = r.lhs.0 * n + r.lhs.1;
                let d = r.rhs.0 * n + r.rhs.1;
                let mut v = vec![(l, Scalar::one()), (d, -r.coeff.clone())];
                v.sort_by_key(|(c, _)| *c);
                v
            })
            .collect();
        RelationSpace {
            n,
            names: self.names.clone(),
            vectors,
        }
    }

    /// `dim A_m` by exact rank.
    pub fn dim_a(&self, m: usize) -> Result<usize> {
        self.space().dim(m)
    }

    /// Relations of the Koszul dual `A^!`.
    pub fn koszul_dual_relations(&self) -> RelationSpace {
        self.space().orthogonal_complement()
    }

    /// `dim A^!_m`. At `m = 3` the value is checked against
    /// `n^3 - 2 n dim A_2 + dim A_3`.
    pub fn dim_a_dual(&self, m: usize) -> Result<usize> {
        let dual = self.koszul_dual_relations().dim(m)?;
        if m == 3 {
            let n = self.n as i64;
            let formula = n * n * n - 2 * n * self.dim_a(2)? as i64 + self.dim_a(3)? as i64;
            if formula != dual as i64 {
                return Err(Error::violation(
                    "dim A!_3 = n^3 - 2n dim A_2 + dim A_3",
                    format!("rank gives {dual}, formula gives {formula}"),
                ));
            }
        }
        Ok(dual)
    }
}

/// A subspace of `V (x) V` given by spanning vectors over the monomial basis
/// (pair codes), defining the quadratic algebra `T(V) / (span)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSpace {
    n: usize,
    names: Vec<String>,
    vectors: Vec<Vec<(usize, Scalar)>>,
}

impl RelationSpace {
    pub fn new(names: Vec<String>, vectors: Vec<Vec<(usize, Scalar)>>) -> Result<Self> {
        let n = names.len();
        for v in &vectors {
            if v.iter().any(|(c, _)| *c >= n * n) {
                return Err(Error::InvalidInput("relation vector outside V (x) V".into()));
            }
        }
        Ok(RelationSpace { n, names, vectors })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vectors(&self) -> &[Vec<(usize, Scalar)>] {
        &self.vectors
    }

    /// Dimension of the span.
    pub fn rank(&self) -> usize {
        crate::linalg::rank(&self.vectors)
    }

    /// `R^perp` in `V* (x) V*`, identified with `V (x) V` through the dual
    /// monomial basis.
    pub fn orthogonal_complement(&self) -> RelationSpace {
        RelationSpace {
            n: self.n,
            names: self.names.clone(),
            vectors: null_space(&self.vectors, self.n * self.n),
        }
    }

    pub fn dim(&self, m: usize) -> Result<usize> {
        self.dim_bounded(m, DEFAULT_MONOMIAL_LIMIT)
    }

    /// `n^m` minus the rank of `{ v (x) rho (x) w }` in `V^{(x) m}`.
    pub fn dim_bounded(&self, m: usize, monomial_limit: usize) -> Result<usize> {
        let total = self.monomial_count(m, monomial_limit)?;
        Ok(total - self.ideal_echelon_bounded(m, monomial_limit)?.rank())
    }

    fn monomial_count(&self, m: usize, monomial_limit: usize) -> Result<usize> {
        let n = self.n;
        checked_pow(n, m)
            .filter(|&t| t <= monomial_limit)
            .ok_or_else(|| Error::BoundExceeded(format!("{n}^{m} monomials exceeds {monomial_limit}")))
    }

    /// Echelon form of the degree-`m` part of the ideal, on monomial codes.
    pub fn ideal_echelon(&self, m: usize) -> Result<Echelon> {
        self.ideal_echelon_bounded(m, DEFAULT_MONOMIAL_LIMIT)
    }

    fn ideal_echelon_bounded(&self, m: usize, monomial_limit: usize) -> Result<Echelon> {
        let n = self.n;
        self.monomial_count(m, monomial_limit)?;
        let mut ech = Echelon::new();
        if m < 2 {
            return Ok(ech);
        }
        let rows: Vec<_> = self.vectors.iter().map(|v| integer_row(v)).collect();
        for i in 0..=m - 2 {
            let suffix = checked_pow(n, m - 2 - i).unwrap();
            let prefix = checked_pow(n, i).unwrap();
            for v in 0..prefix {
                let base = v * n * n * suffix;
                for row in &rows {
                    for w in 0..suffix {
                        let shifted = row
                            .iter()
                            .map(|(c, x)| (base + c * suffix + w, x.clone()))
                            .collect();
                        ech.insert(shifted);
                    }
                }
            }
        }
        Ok(ech)
    }

    pub fn dims(&self, max_degree: usize) -> Result<Vec<usize>> {
        (0..=max_degree).map(|m| self.dim(m)).collect()
    }

    /// Dimensions `C(n, i)` for `0 <= i <= n` and `0` in degree `n + 1`.
    /// The perfect-pairing half of the Frobenius condition is not checked.
    pub fn is_quantum_grassmann(&self) -> Result<bool> {
        let n = self.n;
        for i in 0..=n + 1 {
            if self.dim(i)? != binomial(n, i) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Integer-normalised vectors, for display.
    pub fn integer_vectors(&self) -> Vec<Vec<(usize, BigInt)>> {
        self.vectors.iter().map(|v| integer_row(v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::default_names;

    fn rel(l: (usize, usize), r: (usize, usize)) -> Relation {
        Relation::unit(l, r)
    }

    #[test]
    fn validation_errors() {
        let names = default_names(2);
        let zero = Relation::new((0, 1), (1, 0), Scalar::zero());
        assert!(matches!(
            RelationSet::new(names.clone(), vec![zero]),
            Err(Error::ZeroCoefficient { .. })
        ));
        assert!(matches!(
            RelationSet::new(names.clone(), vec![rel((0, 1), (0, 1))]),
            Err(Error::DegenerateRelation { .. })
        ));
        assert!(matches!(
            RelationSet::new(names, vec![rel((0, 1), (1, 0)), rel((1, 0), (0, 0))]),
            Err(Error::DuplicateMonomial { .. })
        ));
    }

    #[test]
    fn empty_relations() {
        let rs = RelationSet::new(default_names(3), vec![]).unwrap();
        assert!(rs.check_r_yang_baxter());
        assert_eq!(rs.dim_a(0).unwrap(), 1);
        assert_eq!(rs.dim_a(1).unwrap(), 3);
        assert_eq!(rs.dim_a(3).unwrap(), 27);
        assert_eq!(rs.koszul_dual_relations().vectors().len(), 9);
        assert!(!rs.is_quantum_binomial());
    }

    #[test]
    fn identity_fixing_set_has_no_relations() {
        let rs = RelationSet::from_set(&QuadraticSet::identity(3)).unwrap();
        assert!(rs.is_empty());
    }

    #[test]
    fn single_relation_is_degenerate() {
        // xy - zt alone on four generators
        let rs = RelationSet::new(default_names(4), vec![rel((0, 1), (2, 3))]).unwrap();
        assert!(!rs.is_quantum_binomial());
    }

    #[test]
    fn automorphism_inverts_coefficient() {
        let c = Scalar::new(3.into(), 2.into());
        let rs = RelationSet::new(default_names(2), vec![Relation::new((1, 0), (0, 1), c.clone())]).unwrap();
        assert_eq!(rs.apply_automorphism(1, 0), (c.clone(), (0, 1)));
        assert_eq!(rs.apply_automorphism(0, 1), (c.recip(), (1, 0)));
        assert_eq!(rs.apply_automorphism(0, 0), (Scalar::one(), (0, 0)));
    }

    #[test]
    fn quantum_plane() {
        // yx = q xy: dims m + 1, dual is the exterior-like algebra 1, 2, 1
        let c = Scalar::new(5.into(), 7.into());
        let rs = RelationSet::new(default_names(2), vec![Relation::new((1, 0), (0, 1), c)]).unwrap();
        assert!(rs.is_quantum_binomial());
        assert!(rs.check_r_yang_baxter());
        assert_eq!(rs.space().dims(4).unwrap(), vec![1, 2, 3, 4, 5]);
        assert_eq!(rs.koszul_dual_relations().dims(3).unwrap(), vec![1, 2, 1, 0]);
        assert!(rs.koszul_dual_relations().is_quantum_grassmann().unwrap());
    }

    #[test]
    fn one_generator_dual() {
        // no relations on one generator; dual has the single relation xx
        let rs = RelationSet::new(default_names(1), vec![]).unwrap();
        let dual = rs.koszul_dual_relations();
        assert_eq!(dual.dims(2).unwrap(), vec![1, 1, 0]);
        assert!(dual.is_quantum_grassmann().unwrap());
    }

    #[test]
    fn bound_is_enforced() {
        let rs = RelationSet::new(default_names(4), vec![]).unwrap();
        assert!(rs.space().dim_bounded(5, 1000).is_err());
        assert!(rs.space().dim_bounded(4, 1000).is_ok());
    }
}
