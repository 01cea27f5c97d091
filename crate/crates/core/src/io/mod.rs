//! Presentation files and JSON reports.
//!
//! A presentation starts with a `gens` line and continues with either
//! binomial relations or left actions in cycle notation:
//!
//! ```text
//! # comment
//! gens x y z t
//! rel x*y = z*t
//! rel t*y = -1/2 * z*x
//! ```
//!
//! ```text
//! gens a b c
//! lmap a : (b c)
//! lmap b : (a c)
//! lmap c : (a b)
//! ```
//!
//! `lmap` files define `r(x, y) = (L_x(y), L_y^{-1}(x))`.

mod parse;
pub mod report;

use std::path::Path;

use num_traits::One;

use crate::error::{Error, Result};
use crate::quadratic_set::QuadraticSet;
use crate::relations::RelationSet;

pub use parse::parse_presentation;

#[derive(Debug, Clone)]
pub enum Presentation {
    Relations(RelationSet),
    Set(QuadraticSet),
}

impl Presentation {
    pub fn names(&self) -> &[String] {
        match self {
            Presentation::Relations(rs) => rs.names(),
            Presentation::Set(qs) => qs.names(),
        }
    }

    pub fn n(&self) -> usize {
        self.names().len()
    }

    /// The set itself, or `r(Re)` for relations.
    pub fn quadratic_set(&self) -> QuadraticSet {
        match self {
            Presentation::Relations(rs) => rs.derived_set().clone(),
            Presentation::Set(qs) => qs.clone(),
        }
    }

    /// The relations themselves, or those of an involutive set.
    pub fn relation_set(&self) -> Result<RelationSet> {
        match self {
            Presentation::Relations(rs) => Ok(rs.clone()),
            Presentation::Set(qs) => RelationSet::from_set(qs),
        }
    }

    /// True when the algebra is the monoid algebra of `quadratic_set()`.
    pub fn is_set_theoretic(&self) -> bool {
        match self {
            Presentation::Relations(rs) => rs.all_coefficients_one(),
            Presentation::Set(qs) => qs.predicates().involutive,
        }
    }
}

pub fn read_presentation(path: impl AsRef<Path>) -> Result<Presentation> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    parse_presentation(&text)
}

fn cycles(perm: &[usize], names: &[String]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(names[x].as_str());
            x = perm[x];
        }
        out.push_str(&format!("({})", cycle.join(" ")));
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Presentation text that parses back to the same relations or the same
/// `r`. A set not of the form `r(x, y) = (L_x(y), L_y^{-1}(x))` is written
/// through its relations, which requires `r` involutive; otherwise its
/// table is written as comments.
pub fn emit_presentation(p: &Presentation) -> String {
    let names = p.names();
    let mut out = format!("gens {}\n", names.join(" "));
    match p {
        Presentation::Relations(rs) => {
            for r in rs.relations() {
                let l = render_pair(names, r.lhs);
                let d = render_pair(names, r.rhs);
                if r.coeff.is_one() {
                    out.push_str(&format!("rel {l} = {d}\n"));
                } else {
                    out.push_str(&format!("rel {l} = {} * {d}\n", r.coeff));
                }
            }
        }
        Presentation::Set(qs) => {
            let n = qs.n();
            let actions: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| qs.left(x, y)).collect()).collect();
            match QuadraticSet::from_left_actions(names.to_vec(), &actions) {
                Ok(rebuilt) if rebuilt == *qs => {
                    for (x, perm) in actions.iter().enumerate() {
                        out.push_str(&format!("lmap {} : {}\n", names[x], cycles(perm, names)));
                    }
                }
                _ => match RelationSet::from_set(qs) {
                    Ok(rs) => return emit_presentation(&Presentation::Relations(rs)),
                    Err(_) => {
                        for x in 0..n {
                            for y in 0..n {
                                let (a, b) = qs.apply(x, y);
                                out.push_str(&format!(
                                    "# r({}, {}) = ({}, {})\n",
                                    names[x], names[y], names[a], names[b]
                                ));
                            }
                        }
                    }
                },
            }
        }
    }
    out
}

fn render_pair(names: &[String], (a, b): (usize, usize)) -> String {
    format!("{}*{}", names[a], names[b])
}

/// The examples shipped with the crate.
pub mod fixtures {
    use super::{parse_presentation, Presentation};
    use crate::error::Result;

    /// A symmetric set on five elements given by left actions.
    pub const EXAMPLE1: &str = include_str!("../../fixtures/example1.qb");
    /// A quantum binomial algebra that is PBW for no enumeration.
    pub const EXAMPLE2: &str = include_str!("../../fixtures/example2.qb");
    /// A Yang-Baxter algebra, PBW for exactly eight enumerations.
    pub const EXAMPLE3: &str = include_str!("../../fixtures/example3.qb");

    pub fn example1() -> Result<Presentation> {
        parse_presentation(EXAMPLE1)
    }

    pub fn example2() -> Result<Presentation> {
        parse_presentation(EXAMPLE2)
    }

    pub fn example3() -> Result<Presentation> {
        parse_presentation(EXAMPLE3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(p: &Presentation) {
        let back = parse_presentation(&emit_presentation(p)).unwrap();
        assert_eq!(back.quadratic_set().rmap_codes(), p.quadratic_set().rmap_codes());
        if let Presentation::Relations(rs) = p {
            let Presentation::Relations(rs2) = &back else { panic!() };
            assert_eq!(rs.relations(), rs2.relations());
        }
    }

    #[test]
    fn fixtures_round_trip() {
        for p in [fixtures::example1(), fixtures::example2(), fixtures::example3()] {
            round_trip(&p.unwrap());
        }
    }

    #[test]
    fn example1_lmap_form_is_kept() {
        let p = fixtures::example1().unwrap();
        let text = emit_presentation(&p);
        assert!(text.contains("lmap x5 : (x1 x2 x3 x4)"));
        assert!(text.contains("lmap x1 : (x2 x4)"));
    }

    #[test]
    fn coefficients_round_trip() {
        let p = parse_presentation("gens a b\nrel a*b = -2/3 * b*a\n").unwrap();
        round_trip(&p);
        assert!(emit_presentation(&p).contains("rel a*b = -2/3 * b*a"));
    }

    #[test]
    fn every_small_set_round_trips() {
        for n in 1..=4 {
            for qs in crate::classify::all_quantum_binomial(n).unwrap() {
                round_trip(&Presentation::Set(qs));
            }
        }
    }
}
