//! Exact sparse linear algebra over the rationals.
//!
//! Rows are kept as primitive integer vectors (denominators cleared, content
//! divided out) and eliminated fraction-free: reducing `a` by a pivot `p`
//! with the same leading column gives `lead(p) * a - lead(a) * p`. A
//! combination of two binomial rows is again a binomial row, so the spans
//! that arise from binomial relations stay sparse throughout.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sparse row: `(column, value)` pairs, strictly increasing columns, no
/// zero values.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Incrementally maintained row-echelon form keyed by leading column.
#[derive(Debug, Default, Clone)]
pub struct Echelon {
    pivots: HashMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row to the span. Returns `true` if the rank went up.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        loop {
            let Some(lead) = row.first().map(|(c, _)| *c) else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(pivot) => row = eliminate(pivot, &row),
                None => {
                    make_primitive(&mut row);
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Whether `row` lies in the current span.
    pub fn contains(&self, row: &SparseRow) -> bool {
        let mut row = row.clone();
        loop {
            let Some((lead, _)) = row.first() else {
                return true;
            };
            match self.pivots.get(lead) {
                Some(pivot) => row = eliminate(pivot, &row),
                None => return false,
            }
        }
    }
}

/// `lead(p) * a - lead(a) * p`, made primitive. Both rows share a leading
/// column, which cancels.
fn eliminate(pivot: &SparseRow, row: &SparseRow) -> SparseRow {
    let pl = &pivot[0].1;
    let al = &row[0].1;
    let mut out = Vec::with_capacity(pivot.len() + row.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (col, val) = if take_row {
            let v = pl * &row[i].1;
            i += 1;
            (row[i - 1].0, v)
        } else if take_pivot {
            let v = -(al * &pivot[j].1);
            j += 1;
            (pivot[j - 1].0, v)
        } else {
            let v = pl * &row[i].1 - al * &pivot[j].1;
            i += 1;
            j += 1;
            (row[i - 1].0, v)
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    make_primitive(&mut out);
    out
}

/// Divides out the content and makes the leading entry positive.
pub fn make_primitive(row: &mut SparseRow) {
    if row.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// Clears denominators of a rational sparse vector, giving a primitive
/// integer row with the same span.
pub fn integer_row(entries: &[(usize, BigRational)]) -> SparseRow {
    let mut lcm = BigInt::one();
    for (_, v) in entries {
        lcm = lcm.lcm(v.denom());
    }
    let mut row: SparseRow = entries
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect();
    row.sort_by_key(|(c, _)| *c);
    make_primitive(&mut row);
    row
}

/// Rank of a list of rational rows.
pub fn rank(rows: &[Vec<(usize, BigRational)>]) -> usize {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(integer_row(r));
    }
    ech.rank()
}

/// A basis of `{ v : <row, v> = 0 for every row }` in `Q^ncols`, where the
/// pairing is the standard one on coordinates. Returned vectors are sparse,
/// with integer-valued primitive coefficients, ordered by their free column.
pub fn null_space(rows: &[Vec<(usize, BigRational)>], ncols: usize) -> Vec<Vec<(usize, BigRational)>> {
    // dense reduced row echelon form
    let mut mat: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            let mut dense = vec![BigRational::zero(); ncols];
            for (c, v) in r {
                dense[*c] += v;
            }
            dense
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        let Some(found) = (top..mat.len()).find(|&i| !mat[i][col].is_zero()) else {
            continue;
        };
        mat.swap(top, found);
        let inv = mat[top][col].recip();
        for v in mat[top].iter_mut() {
            *v *= &inv;
        }
        for i in 0..mat.len() {
            if i != top && !mat[i][col].is_zero() {
                let factor = mat[i][col].clone();
                for c in col..ncols {
                    let delta = &factor * &mat[top][c];
                    mat[i][c] -= delta;
                }
            }
        }
        pivot_cols.push(col);
        top += 1;
        if top == mat.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
        let mut v: Vec<(usize, BigRational)> = vec![(free, BigRational::one())];
        for (i, &pc) in pivot_cols.iter().enumerate() {
            let a = &mat[i][free];
            if !a.is_zero() {
                v.push((pc, -a.clone()));
            }
        }
        v.sort_by_key(|(c, _)| *c);
        let prim = integer_row(&v);
        basis.push(
            prim.into_iter()
                .map(|(c, x)| (c, BigRational::from_integer(x)))
                .collect(),
        );
    }
    basis
}
