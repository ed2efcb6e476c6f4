//! Coordinate vectors, matrices and exact Gaussian elimination.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Vector(coords)
    }

    pub fn zero(n: usize) -> Self {
        Vector(vec![Scalar::zero(); n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = Scalar::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| Scalar::int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * s).collect())
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.len(), other.len(), "dot: length mismatch");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// `self += s * other`
    pub fn axpy(&mut self, s: &Scalar, other: &Vector) {
        assert_eq!(self.len(), other.len(), "axpy: length mismatch");
        if s.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += s * b;
            }
        }
    }

    pub fn concat(&self, other: &Vector) -> Vector {
        let mut c = self.0.clone();
        c.extend(other.0.iter().cloned());
        Vector(c)
    }

    pub fn slice(&self, from: usize, to: usize) -> Vector {
        Vector(self.0[from..to].to_vec())
    }

    pub fn set(&mut self, i: usize, s: Scalar) {
        self.0[i] = s;
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.0.iter()
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a, 'b> Add<&'b Vector> for &'a Vector {
    type Output = Vector;
    fn add(self, rhs: &'b Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "add: length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(self, rhs: Vector) -> Vector {
        &self + &rhs
    }
}

impl<'a, 'b> Sub<&'b Vector> for &'a Vector {
    type Output = Vector;
    fn sub(self, rhs: &'b Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "sub: length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(self, rhs: Vector) -> Vector {
        &self - &rhs
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|x| -x).collect())
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        -&self
    }
}

/// Dense matrix; column `j` is the image of the `j`-th basis vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl LinearMap {
    pub fn zero(rows: usize, cols: usize) -> Self {
        LinearMap { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn scalar(n: usize, s: &Scalar) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, s.clone());
        }
        m
    }

    /// Panics if rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row);
        }
        LinearMap { rows: r, cols: c, data }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect())
    }

    pub fn from_columns(rows: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zero(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for i in 0..rows {
                m.set(i, j, c[i].clone());
            }
        }
        m
    }

    /// A 1×n map from a coefficient vector.
    pub fn row(coeffs: &Vector) -> Self {
        Self::from_rows(vec![coeffs.coords().to_vec()])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, s: Scalar) {
        self.data[r * self.cols + c] = s;
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector::new((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn row_vector(&self, r: usize) -> Vector {
        Vector::new(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.len(), self.cols, "apply: dimension mismatch");
        let mut out = Vector::zero(self.rows);
        for (c, x) in v.iter().enumerate() {
            if !x.is_zero() {
                out.axpy(x, &self.column(c));
            }
        }
        out
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, other.rows, "compose: dimension mismatch");
        let cols: Vec<Vector> = (0..other.cols).map(|j| self.apply(&other.column(j))).collect();
        LinearMap::from_columns(self.rows, &cols)
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        LinearMap { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn transpose(&self) -> LinearMap {
        let mut t = LinearMap::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Scalar>> = (0..self.rows).map(|r| self.row_vector(r).into_coords()).collect();
        rref(rows, self.cols).1.len()
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let rows: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row = self.row_vector(r).into_coords();
                row.extend(Vector::basis(n, r).into_coords());
                row
            })
            .collect();
        let (red, pivots) = rref(rows, n);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        Some(LinearMap::from_rows(red.into_iter().map(|r| r[n..].to_vec()).collect()))
    }

    /// Entries flattened row-major.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.row_vector(r))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Reduced row echelon form over the first `ncols` columns (extra columns are
/// carried along). Returns the reduced nonzero rows and their pivot columns.
pub(crate) fn rref(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Accumulates linear equations `coeffs · x = rhs` over a fixed number of unknowns.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    unknowns: usize,
    rows: Vec<Vec<Scalar>>,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> Self {
        LinearSystem { unknowns, rows: Vec::new() }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Panics if `coeffs` has the wrong width.
    pub fn push(&mut self, coeffs: Vector, rhs: Scalar) {
        assert_eq!(coeffs.len(), self.unknowns, "equation width mismatch");
        if coeffs.is_zero() && rhs.is_zero() {
            return;
        }
        let mut row = coeffs.into_coords();
        row.push(rhs);
        self.rows.push(row);
    }

    pub fn solve(&self) -> SolutionSet {
        let n = self.unknowns;
        // Eliminating over the augmented column exposes `0 = c` rows as a pivot there.
        let (red, pivots) = rref(self.rows.clone(), n + 1);
        if pivots.last() == Some(&n) {
            return SolutionSet::Inconsistent;
        }
        let mut particular = Vector::zero(n);
        for (row, &p) in red.iter().zip(&pivots) {
            particular.set(p, row[n].clone());
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let kernel = free
            .iter()
            .map(|&fc| {
                let mut v = Vector::basis(n, fc);
                for (row, &p) in red.iter().zip(&pivots) {
                    v.set(p, -&row[fc]);
                }
                v
            })
            .collect();
        SolutionSet::Affine(AffineSpace { particular, kernel })
    }
}

/// Solve the system given as `(row, rhs)` pairs over `unknowns` variables.
pub fn solve_linear(unknowns: usize, equations: &[(Vector, Scalar)]) -> SolutionSet {
    let mut sys = LinearSystem::new(unknowns);
    for (c, r) in equations {
        sys.push(c.clone(), r.clone());
    }
    sys.solve()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionSet {
    Inconsistent,
    Affine(AffineSpace),
}

impl SolutionSet {
    pub fn affine(&self) -> Option<&AffineSpace> {
        match self {
            SolutionSet::Inconsistent => None,
            SolutionSet::Affine(a) => Some(a),
        }
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.affine().is_some_and(|a| a.contains(v))
    }
}

/// `particular + span(kernel)`; kernel vectors are linearly independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSpace {
    pub particular: Vector,
    pub kernel: Vec<Vector>,
}

impl AffineSpace {
    pub fn dim(&self) -> usize {
        self.kernel.len()
    }

    pub fn point(&self, params: &[Scalar]) -> Vector {
        assert_eq!(params.len(), self.kernel.len(), "parameter count mismatch");
        let mut v = self.particular.clone();
        for (t, k) in params.iter().zip(&self.kernel) {
            v.axpy(t, k);
        }
        v
    }

    pub fn contains(&self, v: &Vector) -> bool {
        let diff = v - &self.particular;
        in_span(&self.kernel, &diff)
    }
}

/// Basis (in reduced echelon form) of the span of `vs`.
pub fn span_basis(vs: &[Vector], n: usize) -> Vec<Vector> {
    let rows = vs.iter().map(|v| v.coords().to_vec()).collect();
    rref(rows, n).0.into_iter().map(Vector::new).collect()
}

pub fn rank_of(vs: &[Vector], n: usize) -> usize {
    span_basis(vs, n).len()
}

pub fn in_span(vs: &[Vector], v: &Vector) -> bool {
    let n = v.len();
    let mut with = vs.to_vec();
    with.push(v.clone());
    rank_of(vs, n) == rank_of(&with, n)
}
