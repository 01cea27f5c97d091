//! Finite quadratic sets `(X, r)`.
//!
//! `r` is stored as a table on pair codes `i * n + j`. The left action
//! `^x y` and the right action `x^y` are the two coordinates of `r(x, y)`
//! and are derived from the table once, at construction, together with the
//! boolean predicates every other module branches on.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::default_names;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SetPredicates {
    pub involutive: bool,
    pub nondegenerate: bool,
    pub square_free: bool,
    pub braided: bool,
    /// nondegenerate, involutive and square-free
    pub quantum_binomial: bool,
    /// braided and involutive
    pub symmetric: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSet {
    n: usize,
    names: Vec<String>,
    rmap: Vec<usize>,
    left: Vec<usize>,
    right: Vec<usize>,
    predicates: SetPredicates,
}

impl QuadraticSet {
    /// Builds `(X, r)` from the images `r(i, j)` listed in pair-code order
    /// `(0,0), (0,1), .., (n-1,n-1)`.
    pub fn new(names: Vec<String>, images: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidInput("a quadratic set needs at least one element".into()));
        }
        check_names(&names)?;
        if images.len() != n * n {
            return Err(Error::InvalidInput(format!(
                "expected {} images for |X| = {n}, got {}",
                n * n,
                images.len()
            )));
        }
        let mut rmap = Vec::with_capacity(n * n);
        for &(a, b) in images {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!("image ({a}, {b}) is outside X")));
            }
            rmap.push(a * n + b);
        }
        Self::from_codes(names, rmap)
    }

    /// Builds `(X, r)` from a table of pair codes.
    pub fn from_codes(names: Vec<String>, rmap: Vec<usize>) -> Result<Self> {
        let n = names.len();
        let mut seen = vec![false; n * n];
        for &c in &rmap {
            if c >= n * n || std::mem::replace(&mut seen[c], true) {
                return Err(Error::InvalidInput("r is not a bijection of X x X".into()));
            }
        }
        Ok(Self::from_codes_unchecked(names, rmap))
    }

    pub(crate) fn from_codes_unchecked(names: Vec<String>, rmap: Vec<usize>) -> Self {
        let n = names.len();
        let mut left = vec![0; n * n];
        let mut right = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let c = rmap[x * n + y];
                left[x * n + y] = c / n;
                right[y * n + x] = c % n;
            }
        }
        let mut qs = QuadraticSet {
            n,
            names,
            rmap,
            left,
            right,
            predicates: SetPredicates {
                involutive: false,
                nondegenerate: false,
                square_free: false,
                braided: false,
                quantum_binomial: false,
                symmetric: false,
            },
        };
        let involutive = qs.check_involutive();
        let nondegenerate = qs.check_nondegenerate();
        let square_free = qs.check_square_free();
        let braided = qs.check_braid();
        qs.predicates = SetPredicates {
            involutive,
            nondegenerate,
            square_free,
            braided,
            quantum_binomial: involutive && nondegenerate && square_free,
            symmetric: braided && involutive,
        };
        qs
    }

    /// `r(x, y) = (L_x(y), L_y^{-1}(x))` for the given left actions; each
    /// `left_actions[x]` lists `L_x(0), .., L_x(n-1)`.
    pub fn from_left_actions(names: Vec<String>, left_actions: &[Vec<usize>]) -> Result<Self> {
        let n = names.len();
        if left_actions.len() != n {
            return Err(Error::InvalidInput(format!(
                "expected {n} left actions, got {}",
                left_actions.len()
            )));
        }
        let mut inverses = Vec::with_capacity(n);
        for (x, perm) in left_actions.iter().enumerate() {
            inverses.push(invert_permutation(perm, n).ok_or_else(|| {
                Error::InvalidInput(format!("left action of `{}` is not a permutation", names[x]))
            })?);
        }
        let mut images = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                images.push((left_actions[x][y], inverses[y][x]));
            }
        }
        Self::new(names, &images)
    }

    /// The trivial solution `r(x, y) = (y, x)`.
    pub fn transposition(n: usize) -> Self {
        let rmap = (0..n * n).map(|c| (c % n) * n + c / n).collect();
        Self::from_codes_unchecked(default_names(n), rmap)
    }

    /// `r = id`.
    pub fn identity(n: usize) -> Self {
        Self::from_codes_unchecked(default_names(n), (0..n * n).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::InvalidInput("wrong number of names".into()));
        }
        check_names(&names)?;
        self.names = names;
        Ok(self)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    /// `r(x, y)`.
    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        let c = self.rmap[x * self.n + y];
        (c / self.n, c % self.n)
    }

    /// `r` on pair codes.
    #[inline]
    pub fn apply_code(&self, code: usize) -> usize {
        self.rmap[code]
    }

    pub fn rmap_codes(&self) -> &[usize] {
        &self.rmap
    }

    /// `^x y = L_x(y)`.
    #[inline]
    pub fn left(&self, x: usize, y: usize) -> usize {
        self.left[x * self.n + y]
    }

    /// `x^y = R_y(x)`.
    #[inline]
    pub fn right(&self, x: usize, y: usize) -> usize {
        self.right[y * self.n + x]
    }

    pub fn predicates(&self) -> SetPredicates {
        self.predicates
    }

    pub fn is_quantum_binomial(&self) -> bool {
        self.predicates.quantum_binomial
    }

    pub fn check_involutive(&self) -> bool {
        (0..self.n * self.n).all(|c| self.rmap[self.rmap[c]] == c)
    }

    pub fn check_nondegenerate(&self) -> bool {
        let n = self.n;
        let rows_are_perms = |table: &[usize]| {
            table.chunks(n).all(|row| {
                let mut seen = vec![false; n];
                row.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
            })
        };
        rows_are_perms(&self.left) && rows_are_perms(&self.right)
    }

    pub fn check_square_free(&self) -> bool {
        (0..self.n).all(|x| self.rmap[x * self.n + x] == x * self.n + x)
    }

    /// `r^{12} r^{23} r^{12} = r^{23} r^{12} r^{23}` on all of `X^3`.
    pub fn check_braid(&self) -> bool {
        let n = self.n;
        let r12 = |t: [usize; 3]| {
            let (a, b) = self.apply(t[0], t[1]);
            [a, b, t[2]]
        };
        let r23 = |t: [usize; 3]| {
            let (b, c) = self.apply(t[1], t[2]);
            [t[0], b, c]
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let t = [x, y, z];
                    if r12(r23(r12(t))) != r23(r12(r23(t))) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Transports `r` along the bijection `sigma: X -> X`, so that the result
    /// maps `(sigma(x), sigma(y))` to `sigma x sigma (r(x, y))`.
    pub fn relabel(&self, sigma: &[usize]) -> Self {
        let n = self.n;
        let mut rmap = vec![0; n * n];
        let mut names = vec![String::new(); n];
        for x in 0..n {
            names[sigma[x]] = self.names[x].clone();
            for y in 0..n {
                let (a, b) = self.apply(x, y);
                rmap[sigma[x] * n + sigma[y]] = sigma[a] * n + sigma[b];
            }
        }
        Self::from_codes_unchecked(names, rmap)
    }
}

fn check_names(names: &[String]) -> Result<()> {
    for (i, a) in names.iter().enumerate() {
        if a.is_empty() {
            return Err(Error::InvalidInput("generator names must be non-empty".into()));
        }
        if names[..i].contains(a) {
            return Err(Error::InvalidInput(format!("duplicate generator `{a}`")));
        }
    }
    Ok(())
}

pub(crate) fn invert_permutation(perm: &[usize], n: usize) -> Option<Vec<usize>> {
    if perm.len() != n {
        return None;
    }
    let mut inv = vec![usize::MAX; n];
    for (i, &p) in perm.iter().enumerate() {
        if p >= n || inv[p] != usize::MAX {
            return None;
        }
        inv[p] = i;
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        default_names(n)
    }

    #[test]
    fn identity_actions_give_transposition() {
        let id: Vec<usize> = (0..3).collect();
        let qs = QuadraticSet::from_left_actions(names(3), &[id.clone(), id.clone(), id]).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(qs.apply(i, j), (j, i));
            }
        }
        assert_eq!(qs, QuadraticSet::transposition(3));
        assert!(qs.predicates().symmetric && qs.predicates().quantum_binomial);
    }

    #[test]
    fn single_point() {
        let qs = QuadraticSet::from_left_actions(names(1), &[vec![0]]).unwrap();
        assert_eq!(qs.apply(0, 0), (0, 0));
        let p = qs.predicates();
        assert!(p.involutive && p.nondegenerate && p.square_free && p.braided);
    }

    #[test]
    fn rejects_non_permutation_action() {
        let err = QuadraticSet::from_left_actions(names(2), &[vec![0, 0], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn rejects_non_bijection() {
        let err = QuadraticSet::new(names(2), &[(0, 0), (0, 0), (1, 0), (1, 1)]).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn three_cycle_is_not_involutive() {
        // (0,0) -> (0,1) -> (1,0) -> (0,0), (1,1) fixed
        let qs = QuadraticSet::new(names(2), &[(0, 1), (1, 0), (0, 0), (1, 1)]).unwrap();
        assert!(!qs.check_involutive());
    }

    #[test]
    fn identity_map() {
        let p = QuadraticSet::identity(3).predicates();
        assert!(p.involutive);
        assert!(p.braided);
        assert!(!p.nondegenerate);
        assert!(p.square_free);
    }

    #[test]
    fn constant_left_action_is_degenerate() {
        // r = id has L_x(y) = x for every y
        let qs = QuadraticSet::identity(2);
        assert_eq!(qs.left(0, 1), 0);
        assert!(!qs.check_nondegenerate());
    }

    #[test]
    fn swapping_diagonal_is_not_square_free() {
        let qs = QuadraticSet::new(names(2), &[(1, 1), (0, 1), (1, 0), (0, 0)]).unwrap();
        assert!(!qs.check_square_free());
        assert!(qs.check_involutive());
    }

    #[test]
    fn transposition_is_square_free() {
        assert!(QuadraticSet::transposition(4).check_square_free());
    }
}
