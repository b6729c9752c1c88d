use std::fmt;
use std::sync::Arc;

use super::{parse_polynomial, GaussianRational, Polynomial};
use crate::error::{Error, Result};

/// A dense matrix of polynomials, stored row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Polynomial>,
    vars: Arc<Vec<String>>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>, vars: Arc<Vec<String>>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        for e in &entries {
            assert_eq!(e.vars(), &vars, "entry over wrong variable list");
        }
        PolyMatrix { rows, cols, entries, vars }
    }

    pub fn from_rows(rows_of: Vec<Vec<Polynomial>>, vars: Arc<Vec<String>>) -> Self {
        let rows = rows_of.len();
        let cols = rows_of.first().map_or(0, |r| r.len());
        let entries: Vec<Polynomial> = rows_of.into_iter().flatten().collect();
        PolyMatrix::new(rows, cols, entries, vars)
    }

    /// Parse a nested bracket list of polynomial strings,
    /// e.g. `[[x, y^2], [0, -x]]`.
    pub fn parse(input: &str, vars: &Arc<Vec<String>>) -> Result<Self> {
        let s = input.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse("matrix must be wrapped in [...]".into()))?;
        let mut rows_of: Vec<Vec<Polynomial>> = Vec::new();
        let mut depth = 0usize;
        let mut cur = String::new();
        for c in inner.chars() {
            match c {
                '[' => {
                    depth += 1;
                    if depth > 1 {
                        return Err(Error::Parse("matrix nesting too deep".into()));
                    }
                    cur.clear();
                }
                ']' => {
                    if depth == 0 {
                        return Err(Error::Parse("unbalanced brackets".into()));
                    }
                    depth -= 1;
                    let row: Vec<Polynomial> = cur
                        .split(',')
                        .map(|t| parse_polynomial(t, vars))
                        .collect::<Result<_>>()?;
                    rows_of.push(row);
                }
                ',' if depth == 0 => {}
                c => cur.push(c),
            }
        }
        if rows_of.is_empty() {
            return Err(Error::Parse("empty matrix".into()));
        }
        let cols = rows_of[0].len();
        if rows_of.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("ragged matrix rows".into()));
        }
        Ok(PolyMatrix::from_rows(rows_of, vars.clone()))
    }

    pub fn zero(rows: usize, cols: usize, vars: &Arc<Vec<String>>) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![Polynomial::zero(vars); rows * cols],
            vars: vars.clone(),
        }
    }

    pub fn identity(n: usize, vars: &Arc<Vec<String>>) -> Self {
        let mut m = PolyMatrix::zero(n, n, vars);
        for i in 0..n {
            m[(i, i)] = Polynomial::one(vars);
        }
        m
    }

    /// `c * I`.
    pub fn scalar(n: usize, c: &Polynomial) -> Self {
        let mut m = PolyMatrix::zero(n, n, c.vars());
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zero(self.rows, other.cols, &self.vars);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.vars);
                for k in 0..self.cols {
                    acc = acc.checked_add(&self[(i, k)].checked_mul(&other[(k, j)])?)?;
                }
                out[(i, j)] = acc;
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix add".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_>>()?;
        Ok(PolyMatrix::new(self.rows, self.cols, entries, self.vars.clone()))
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sub".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a.checked_sub(b))
            .collect::<Result<_>>()?;
        Ok(PolyMatrix::new(self.rows, self.cols, entries, self.vars.clone()))
    }

    pub fn neg(&self) -> PolyMatrix {
        self.map(|p| p.neg())
    }

    pub fn map<F: Fn(&Polynomial) -> Polynomial>(&self, f: F) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
            vars: self.vars.clone(),
        }
    }

    /// Reinterpret every entry over a superset variable list.
    pub fn extend_vars(&self, new_vars: &Arc<Vec<String>>) -> Result<PolyMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|p| p.extend_vars(new_vars))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
            vars: new_vars.clone(),
        })
    }

    /// Set the named variables to zero in every entry.
    pub fn substitute_zero(&self, names: &[&str]) -> PolyMatrix {
        self.map(|p| p.substitute_zero(names))
    }

    /// Assemble from a 2x2 block grid; all blocks must have matching shapes.
    pub fn from_blocks(a: &PolyMatrix, b: &PolyMatrix, c: &PolyMatrix, d: &PolyMatrix) -> PolyMatrix {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let rows = a.rows + c.rows;
        let cols = a.cols + b.cols;
        let mut out = PolyMatrix::zero(rows, cols, &a.vars);
        for i in 0..a.rows {
            for j in 0..a.cols {
                out[(i, j)] = a[(i, j)].clone();
            }
            for j in 0..b.cols {
                out[(i, a.cols + j)] = b[(i, j)].clone();
            }
        }
        for i in 0..c.rows {
            for j in 0..c.cols {
                out[(a.rows + i, j)] = c[(i, j)].clone();
            }
            for j in 0..d.cols {
                out[(a.rows + i, a.cols + j)] = d[(i, j)].clone();
            }
        }
        out
    }

    pub fn block_diag(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
        let zt = PolyMatrix::zero(a.rows, b.cols, &a.vars);
        let zb = PolyMatrix::zero(b.rows, a.cols, &a.vars);
        PolyMatrix::from_blocks(a, &zt, &zb, b)
    }

    /// Determinant by cofactor expansion (intended for small matrices).
    pub fn det(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.det_inner(&(0..self.cols).collect::<Vec<_>>(), 0))
    }

    fn det_inner(&self, cols: &[usize], row: usize) -> Polynomial {
        if cols.is_empty() {
            return Polynomial::one(&self.vars);
        }
        let mut acc = Polynomial::zero(&self.vars);
        for (k, &j) in cols.iter().enumerate() {
            let e = &self[(row, j)];
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
            let minor = self.det_inner(&rest, row + 1);
            let signed = if k % 2 == 0 { minor } else { minor.neg() };
            acc = acc
                .checked_add(&e.checked_mul(&signed).expect("same vars"))
                .expect("same vars");
        }
        acc
    }

    /// Adjugate: `A * adj(A) = adj(A) * A = det(A) * I` exactly.
    pub fn adjugate(&self) -> Result<PolyMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut out = PolyMatrix::zero(n, n, &self.vars);
        for i in 0..n {
            for j in 0..n {
                // cofactor C_ji transposed into (i, j)
                let minor = self.minor(j, i);
                let m = minor.det()?;
                out[(i, j)] = if (i + j) % 2 == 0 { m } else { m.neg() };
            }
        }
        Ok(out)
    }

    fn minor(&self, drop_row: usize, drop_col: usize) -> PolyMatrix {
        let mut rows_of = Vec::new();
        for i in 0..self.rows {
            if i == drop_row {
                continue;
            }
            let mut row = Vec::new();
            for j in 0..self.cols {
                if j == drop_col {
                    continue;
                }
                row.push(self[(i, j)].clone());
            }
            rows_of.push(row);
        }
        PolyMatrix::from_rows(rows_of, self.vars.clone())
    }

    /// True if every entry is a constant polynomial.
    pub fn is_constant(&self) -> bool {
        self.entries.iter().all(|p| p.is_constant())
    }

    /// Inverse of a constant matrix with nonzero constant determinant.
    pub fn constant_inverse(&self) -> Result<PolyMatrix> {
        let det = self.det()?;
        if !det.is_constant() || det.is_zero() {
            return Err(Error::Verification(format!(
                "matrix determinant `{det}` is not a nonzero constant"
            )));
        }
        let c = det.constant_term();
        let inv = c.inv().unwrap();
        let adj = self.adjugate()?;
        Ok(adj.map(|p| p.scale(&inv)))
    }

    /// Evaluate every entry at a point.
    pub fn eval(&self, point: &[GaussianRational]) -> Vec<GaussianRational> {
        self.entries.iter().map(|p| p.eval(point)).collect()
    }
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = Polynomial;
    fn index(&self, (i, j): (usize, usize)) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Polynomial {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars2() -> Arc<Vec<String>> {
        Arc::new(vec!["x".into(), "y".into()])
    }

    #[test]
    fn adjugate_2x2() {
        let vars = vars2();
        let a = PolyMatrix::parse("[[x, y^3], [0, -x]]", &vars).unwrap();
        let adj = a.adjugate().unwrap();
        let expect = PolyMatrix::parse("[[-x, -y^3], [0, x]]", &vars).unwrap();
        assert_eq!(adj, expect);
        let det = a.det().unwrap();
        assert_eq!(a.mul(&adj).unwrap(), PolyMatrix::scalar(2, &det));
    }

    #[test]
    fn adjugate_identity() {
        let vars = vars2();
        let id = PolyMatrix::identity(2, &vars);
        assert_eq!(id.adjugate().unwrap(), id);
    }

    #[test]
    fn parse_display_roundtrip() {
        let vars = vars2();
        let a = PolyMatrix::parse("[[x + y, 2], [-x^2, 0]]", &vars).unwrap();
        let back = PolyMatrix::parse(&a.to_string(), &vars).unwrap();
        assert_eq!(a, back);
    }

    #[test]
    fn constant_inverse_roundtrip() {
        let vars = vars2();
        let m = PolyMatrix::parse("[[0, 1], [-1, 0]]", &vars).unwrap();
        let inv = m.constant_inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), PolyMatrix::identity(2, &vars));
    }
}
