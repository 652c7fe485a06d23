//! Coordinate vectors, square operators and echelonized subspaces over a
//! single scalar domain, with plain fraction-arithmetic Gaussian elimination.

use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::scalars::{Domain, Scalar};

/// A coordinate vector in the basis of some algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    coords: Vec<Scalar>,
}

impl Element {
    /// Builds an element; all coordinates must share one domain.
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Shape(
                "an element needs at least one coordinate".into(),
            ));
        }
        let d = coords[0].domain();
        if let Some(bad) = coords.iter().find(|c| c.domain() != d) {
            return Err(Error::DomainMismatch(d, bad.domain()));
        }
        Ok(Element { coords })
    }

    pub(crate) fn from_vec(coords: Vec<Scalar>) -> Self {
        debug_assert!(!coords.is_empty());
        Element { coords }
    }

    pub fn zero(domain: Domain, n: usize) -> Self {
        Element::from_vec(vec![domain.zero(); n])
    }

    pub fn basis(domain: Domain, n: usize, i: usize) -> Self {
        let mut coords = vec![domain.zero(); n];
        coords[i] = domain.one();
        Element::from_vec(coords)
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(domain: Domain, values: &[i64]) -> Self {
        Element::from_vec(values.iter().map(|&v| domain.int(v)).collect())
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn domain(&self) -> Domain {
        self.coords[0].domain()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Element) -> Element {
        Element::from_vec(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Element) -> Element {
        Element::from_vec(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element::from_vec(self.coords.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Element {
        Element::from_vec(self.coords.iter().map(|a| -a).collect())
    }

    /// Applies a scalar map coordinate-wise (e.g. specialization of ℚ(t)).
    pub fn try_map(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<Element> {
        Element::new(self.coords.iter().map(f).collect::<Result<_>>()?)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coords.len()))?;
        for c in &self.coords {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

/// An n×n matrix; column j is the image of the j-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operator {
    n: usize,
    // row-major
    entries: Vec<Scalar>,
}

impl Operator {
    pub fn from_columns(columns: &[Element]) -> Self {
        let n = columns.len();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for col in columns {
                entries.push(col.coords[i].clone());
            }
        }
        Operator { n, entries }
    }

    pub fn identity(domain: Domain, n: usize) -> Self {
        Operator::scalar(domain.one(), n)
    }

    pub fn zero(domain: Domain, n: usize) -> Self {
        Operator::scalar(domain.zero(), n)
    }

    pub fn scalar(c: Scalar, n: usize) -> Self {
        let zero = c.domain().zero();
        let entries = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    c.clone()
                } else {
                    zero.clone()
                }
            })
            .collect();
        Operator { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn domain(&self) -> Domain {
        self.entries[0].domain()
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.n + col]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Element {
        Element::from_vec((0..self.n).map(|i| self.entry(i, j).clone()).collect())
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.entries
            .chunks(self.n)
            .map(<[Scalar]>::to_vec)
            .collect()
    }

    pub fn apply(&self, v: &Element) -> Element {
        let n = self.n;
        Element::from_vec(
            (0..n)
                .map(|i| {
                    (0..n).fold(self.domain().zero(), |acc, j| {
                        &acc + &(self.entry(i, j) * &v.coords[j])
                    })
                })
                .collect(),
        )
    }

    /// Matrix product `self ∘ other`.
    pub fn compose(&self, other: &Operator) -> Operator {
        let n = self.n;
        let zero = self.domain().zero();
        let entries = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                (0..n).fold(zero.clone(), |acc, m| {
                    &acc + &(self.entry(i, m) * other.entry(m, j))
                })
            })
            .collect();
        Operator { n, entries }
    }

    pub fn add(&self, other: &Operator) -> Operator {
        Operator {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Operator) -> Operator {
        Operator {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Operator {
        Operator {
            n: self.n,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// `self − c·I`.
    pub fn shift(&self, c: &Scalar) -> Operator {
        self.sub(&Operator::scalar(c.clone(), self.n))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Operator::identity(self.domain(), self.n)
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::from_nullspace(self.domain(), self.n, &self.rows())
    }

    pub fn rank(&self) -> usize {
        rref(self.rows(), self.n).1.len()
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form. Returns the nonzero rows and their pivot
/// columns.
pub(crate) fn rref(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &(&factor * p);
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Solves `Σ cᵢ columnsᵢ = target`; `None` if `target` is outside the span.
/// With dependent columns the free coefficients are set to zero.
pub fn solve_in_span(columns: &[Element], target: &Element) -> Option<Vec<Scalar>> {
    let domain = target.domain();
    let n = target.dim();
    let k = columns.len();
    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            columns
                .iter()
                .map(|c| c.coords[i].clone())
                .chain(std::iter::once(target.coords[i].clone()))
                .collect()
        })
        .collect();
    let (reduced, pivots) = rref(rows, k + 1);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut sol = vec![domain.zero(); k];
    for (row, &p) in reduced.iter().zip(&pivots) {
        sol[p] = row[k].clone();
    }
    Some(sol)
}

/// A linear subspace of Fⁿ held as reduced row-echelon basis rows, so two
/// subspaces are equal exactly when their representations are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    domain: Domain,
    ambient: usize,
    basis: Vec<Element>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(domain: Domain, ambient: usize, vectors: &[Element]) -> Self {
        let rows = vectors.iter().map(|v| v.coords.clone()).collect();
        let (rows, pivots) = rref(rows, ambient);
        Subspace {
            domain,
            ambient,
            basis: rows.into_iter().map(Element::from_vec).collect(),
            pivots,
        }
    }

    pub fn zero(domain: Domain, ambient: usize) -> Self {
        Subspace::span(domain, ambient, &[])
    }

    pub fn full(domain: Domain, ambient: usize) -> Self {
        let basis: Vec<Element> = (0..ambient)
            .map(|i| Element::basis(domain, ambient, i))
            .collect();
        Subspace::span(domain, ambient, &basis)
    }

    /// Solutions `v` of `rows · v = 0`.
    pub(crate) fn from_nullspace(domain: Domain, ambient: usize, rows: &[Vec<Scalar>]) -> Self {
        let (reduced, pivots) = rref(rows.to_vec(), ambient);
        let free: Vec<usize> = (0..ambient).filter(|c| !pivots.contains(c)).collect();
        let vectors: Vec<Element> = free
            .iter()
            .map(|&f| {
                let mut v = vec![domain.zero(); ambient];
                v[f] = domain.one();
                for (row, &p) in reduced.iter().zip(&pivots) {
                    v[p] = -&row[f];
                }
                Element::from_vec(v)
            })
            .collect();
        Subspace::span(domain, ambient, &vectors)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    pub fn contains(&self, v: &Element) -> bool {
        // Reduce v against the echelon rows; membership iff it vanishes.
        let mut w = v.coords.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let factor = w[p].clone();
            for (x, r) in w.iter_mut().zip(&row.coords) {
                *x = &*x - &(&factor * r);
            }
        }
        w.iter().all(Scalar::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let vectors: Vec<Element> = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::span(self.domain, self.ambient, &vectors)
    }

    /// Linear functionals vanishing on the subspace, as row vectors.
    fn annihilator_rows(&self) -> Vec<Vec<Scalar>> {
        let rows: Vec<Vec<Scalar>> = self.basis.iter().map(|v| v.coords.clone()).collect();
        Subspace::from_nullspace(self.domain, self.ambient, &rows)
            .basis
            .into_iter()
            .map(|v| v.coords)
            .collect()
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let mut rows = self.annihilator_rows();
        rows.extend(other.annihilator_rows());
        Subspace::from_nullspace(self.domain, self.ambient, &rows)
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.basis.serialize(s)
    }
}
