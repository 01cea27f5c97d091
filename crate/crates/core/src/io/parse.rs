use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::quadratic_set::QuadraticSet;
use crate::relations::{Relation, RelationSet, Scalar};

use super::Presentation;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(Scalar),
    Star,
    Eq,
    Colon,
    LParen,
    RParen,
}

struct Lexed {
    tok: Tok,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn lex(line_no: usize, text: &str) -> Result<Vec<Lexed>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '*' => Some(Tok::Star),
            '=' => Some(Tok::Eq),
            ':' => Some(Tok::Colon),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Lexed { tok, column });
            i += 1;
        } else if c.is_ascii_digit() || (c == '-' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let numer: BigInt = chars[start..i].iter().collect::<String>().parse().unwrap();
            let mut denom = BigInt::from(1);
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                let ds = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if ds == i {
                    return Err(syntax(line_no, i + 1, "expected a denominator after `/`"));
                }
                denom = chars[ds..i].iter().collect::<String>().parse().unwrap();
                if denom.is_zero() {
                    return Err(syntax(line_no, ds + 1, "zero denominator"));
                }
            }
            out.push(Lexed {
                tok: Tok::Number(Scalar::new(numer, denom)),
                column,
            });
        } else if c.is_alphanumeric() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Lexed {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                column,
            });
        } else {
            return Err(syntax(line_no, column, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Cursor<'a> {
    line: usize,
    toks: &'a [Lexed],
    pos: usize,
    /// column just past the end of the line, for errors at end of input
    end: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|l| &l.tok)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |l| l.column)
    }

    fn next(&mut self) -> Option<&'a Lexed> {
        let t = self.toks.get(self.pos);
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let column = self.column();
        match self.next() {
            Some(l) if l.tok == want => Ok(()),
            _ => Err(syntax(self.line, column, format!("expected {what}"))),
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, usize)> {
        let column = self.column();
        match self.next() {
            Some(Lexed {
                tok: Tok::Ident(s),
                column,
            }) => Ok((s.clone(), *column)),
            _ => Err(syntax(self.line, column, format!("expected {what}"))),
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos < self.toks.len() {
            return Err(syntax(self.line, self.column(), "unexpected trailing input"));
        }
        Ok(())
    }
}

struct Names<'a>(&'a [String]);

impl Names<'_> {
    fn lookup(&self, line: usize, name: &str) -> Result<usize> {
        self.0.iter().position(|g| g == name).ok_or_else(|| Error::UnknownGenerator {
            line,
            name: name.to_string(),
        })
    }
}

fn monomial(cur: &mut Cursor, names: &Names) -> Result<(usize, usize)> {
    let (a, _) = cur.ident("a generator")?;
    cur.expect(Tok::Star, "`*` between generators")?;
    let (b, _) = cur.ident("a generator")?;
    Ok((names.lookup(cur.line, &a)?, names.lookup(cur.line, &b)?))
}

fn relation(cur: &mut Cursor, names: &Names) -> Result<Relation> {
    let lhs = monomial(cur, names)?;
    cur.expect(Tok::Eq, "`=`")?;
    let coeff = if let Some(Tok::Number(q)) = cur.peek() {
        let q = q.clone();
        cur.next();
        cur.expect(Tok::Star, "`*` after the coefficient")?;
        q
    } else {
        Scalar::from_integer(1.into())
    };
    let rhs = monomial(cur, names)?;
    cur.finish()?;
    Ok(Relation::new(lhs, rhs, coeff))
}

/// `(a b c)(d e)`, or `()` for the identity.
fn permutation(cur: &mut Cursor, names: &Names) -> Result<Vec<usize>> {
    let n = names.0.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut moved = vec![false; n];
    if cur.peek().is_none() {
        return Err(syntax(cur.line, cur.column(), "expected a permutation in cycle notation"));
    }
    while cur.peek().is_some() {
        cur.expect(Tok::LParen, "`(`")?;
        let mut cycle = Vec::new();
        while let Some(Tok::Ident(_)) = cur.peek() {
            let (name, column) = cur.ident("a generator")?;
            let x = names.lookup(cur.line, &name)?;
            if std::mem::replace(&mut moved[x], true) {
                return Err(syntax(cur.line, column, format!("`{name}` occurs twice in the permutation")));
            }
            cycle.push(x);
        }
        cur.expect(Tok::RParen, "`)` or a generator")?;
        for (k, &x) in cycle.iter().enumerate() {
            perm[x] = cycle[(k + 1) % cycle.len()];
        }
    }
    Ok(perm)
}

/// Parses a presentation file: a `gens` line followed by either `rel` lines
/// or one `lmap` line per generator.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut names: Option<Vec<String>> = None;
    let mut rels = Vec::new();
    let mut lmaps: Vec<Option<Vec<usize>>> = Vec::new();
    let mut first_body: Option<&str> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks = lex(line, raw)?;
        if toks.is_empty() {
            continue;
        }
        let mut cur = Cursor {
            line,
            toks: &toks,
            pos: 0,
            end: raw.chars().count() + 1,
        };
        let (keyword, kw_col) = cur.ident("`gens`, `rel` or `lmap`")?;
        match (keyword.as_str(), &names) {
            ("gens", None) => {
                let mut gens = Vec::new();
                while cur.peek().is_some() {
                    let (g, column) = cur.ident("a generator name")?;
                    if gens.contains(&g) {
                        return Err(syntax(line, column, format!("duplicate generator `{g}`")));
                    }
                    gens.push(g);
                }
                if gens.is_empty() {
                    return Err(syntax(line, cur.column(), "`gens` needs at least one name"));
                }
                lmaps = vec![None; gens.len()];
                names = Some(gens);
            }
            ("gens", Some(_)) => return Err(syntax(line, kw_col, "second `gens` line")),
            (_, None) => return Err(syntax(line, kw_col, "the first line must be `gens`")),
            ("rel" | "lmap", Some(gens)) => {
                let kind = if keyword == "rel" { "rel" } else { "lmap" };
                match first_body {
                    Some(k) if k != kind => {
                        return Err(syntax(line, kw_col, "a file has either `rel` or `lmap` lines, not both"))
                    }
                    _ => first_body = Some(kind),
                }
                let names = Names(gens);
                if kind == "rel" {
                    rels.push(relation(&mut cur, &names)?);
                } else {
                    let (g, column) = cur.ident("a generator")?;
                    let x = names.lookup(line, &g)?;
                    cur.expect(Tok::Colon, "`:`")?;
                    let perm = permutation(&mut cur, &names)?;
                    if lmaps[x].replace(perm).is_some() {
                        return Err(syntax(line, column, format!("second `lmap` for `{g}`")));
                    }
                }
            }
            (other, Some(_)) => return Err(syntax(line, kw_col, format!("unknown keyword `{other}`"))),
        }
    }
    let names = names.ok_or_else(|| syntax(1, 1, "missing `gens` line"))?;
    if first_body == Some("lmap") {
        if let Some(x) = lmaps.iter().position(|l| l.is_none()) {
            return Err(Error::InvalidInput(format!("no `lmap` line for `{}`", names[x])));
        }
        let actions: Vec<Vec<usize>> = lmaps.into_iter().map(Option::unwrap).collect();
        return Ok(Presentation::Set(QuadraticSet::from_left_actions(names, &actions)?));
    }
    Ok(Presentation::Relations(RelationSet::new(names, rels)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(text: &str) -> Error {
        parse_presentation(text).unwrap_err()
    }

    #[test]
    fn relation_file() {
        let p = parse_presentation("# comment\ngens x y\n\nrel x*y = -3/4 * y*x # trailing\n").unwrap();
        let Presentation::Relations(rs) = p else { panic!() };
        assert_eq!(rs.len(), 1);
        assert_eq!(rs.relations()[0].coeff, Scalar::new((-3).into(), 4.into()));
    }

    #[test]
    fn lmap_file() {
        let p = parse_presentation("gens a b c\nlmap a : (a b c)\nlmap b : (a b c)\nlmap c : (a b c)\n").unwrap();
        let Presentation::Set(qs) = p else { panic!() };
        assert_eq!(qs.left(0, 1), 2);
        assert_eq!(qs.apply(0, 1), (2, 2));
    }

    #[test]
    fn identity_and_multiple_cycles() {
        let p = parse_presentation("gens a b\nlmap a : ()\nlmap b : ()\n").unwrap();
        let Presentation::Set(qs) = p else { panic!() };
        assert_eq!(qs, QuadraticSet::transposition(2).with_names(vec!["a".into(), "b".into()]).unwrap());
        let text = "gens a b c d\nlmap a : (a b)(c d)\nlmap b : (a b)(c d)\nlmap c : (a b)(c d)\nlmap d : (a b)(c d)\n";
        let Presentation::Set(qs) = parse_presentation(text).unwrap() else { panic!() };
        assert_eq!(qs.left(1, 2), 3);
        assert_eq!(qs.apply(0, 2), (3, 1));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            err("gens x y\nrel x*y = y x\n"),
            Error::Syntax {
                line: 2,
                column: 13,
                message: "expected `*` between generators".into()
            }
        );
        assert_eq!(
            err("gens x y\nrel x*q = y*x\n"),
            Error::UnknownGenerator {
                line: 2,
                name: "q".into()
            }
        );
        assert!(matches!(err("rel x*y = y*x"), Error::Syntax { line: 1, column: 1, .. }));
        assert!(matches!(err("gens x y\nrel x*y = y*x $"), Error::Syntax { line: 2, column: 15, .. }));
        assert!(matches!(err("gens x y\nrel x*y = 1/0 * y*x"), Error::Syntax { line: 2, .. }));
        assert!(matches!(err("gens x x"), Error::Syntax { line: 1, column: 8, .. }));
    }

    #[test]
    fn semantic_errors() {
        assert!(matches!(err("gens x y z t\nrel x*y = 0 * z*t\n"), Error::ZeroCoefficient { .. }));
        assert!(matches!(
            err("gens x y z t\nrel x*y = z*t\nrel z*t = y*x\n"),
            Error::DuplicateMonomial { .. }
        ));
        assert!(matches!(err("gens x y\nrel x*y = x*y\n"), Error::DegenerateRelation { .. }));
        assert!(matches!(err("gens a b\nlmap a : ()\n"), Error::InvalidInput(_)));
        assert!(matches!(err("gens a b\nlmap a : ()\nrel a*b = b*a\n"), Error::Syntax { line: 3, .. }));
        assert!(matches!(err("gens a b\nlmap a : (a a)\nlmap b : ()"), Error::Syntax { line: 2, .. }));
    }

    #[test]
    fn gens_only_is_free_algebra() {
        let Presentation::Relations(rs) = parse_presentation("gens x y\n").unwrap() else { panic!() };
        assert!(rs.is_empty());
    }
}
