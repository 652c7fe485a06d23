//! Finite-dimensional algebras given by structure constants. Nothing is
//! assumed about associativity, commutativity or a unit.

use std::collections::HashSet;

use crate::error::{Error, Result};
pub use crate::linalg::{Element, Operator, Subspace};
use crate::scalars::{Domain, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    domain: Domain,
    names: Vec<String>,
    // table[i][j] = e_i · e_j
    table: Vec<Vec<Element>>,
}

/// Validates a multiplication table and wraps it as an [`Algebra`].
pub fn build_algebra(
    domain: Domain,
    dim: usize,
    basis_names: Vec<String>,
    table: Vec<Vec<Element>>,
) -> Result<Algebra> {
    if dim == 0 {
        return Err(Error::Shape("dimension must be at least 1".into()));
    }
    if basis_names.len() != dim {
        return Err(Error::Shape(format!(
            "{} basis names for dimension {dim}",
            basis_names.len()
        )));
    }
    let mut seen = HashSet::new();
    for name in &basis_names {
        if name.is_empty() || !seen.insert(name.as_str()) {
            return Err(Error::Shape(format!(
                "basis name `{name}` is empty or repeated"
            )));
        }
    }
    if table.len() != dim || table.iter().any(|row| row.len() != dim) {
        return Err(Error::Shape(format!("table must be {dim}×{dim}")));
    }
    for (i, row) in table.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            if entry.dim() != dim {
                return Err(Error::Shape(format!(
                    "entry ({i}, {j}) has {} coordinates, expected {dim}",
                    entry.dim()
                )));
            }
            if entry.domain() != domain {
                return Err(Error::DomainMismatch(domain, entry.domain()));
            }
        }
    }
    Ok(Algebra {
        domain,
        names: basis_names,
        table,
    })
}

impl Algebra {
    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<Element>] {
        &self.table
    }

    /// `eᵢ · eⱼ`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &Element {
        &self.table[i][j]
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.domain, self.dim(), i)
    }

    pub fn basis(&self) -> Vec<Element> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }

    pub fn element_by_name(&self, name: &str) -> Result<Element> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| self.basis_element(i))
            .ok_or_else(|| Error::UnknownBasisName(name.to_string()))
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.domain, self.dim())
    }

    pub fn one_scalar(&self) -> Scalar {
        self.domain.one()
    }

    /// Checks that `x` lives in this algebra.
    pub fn check_element(&self, x: &Element) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::Shape(format!(
                "element has {} coordinates, algebra has dimension {}",
                x.dim(),
                self.dim()
            )));
        }
        if x.domain() != self.domain {
            return Err(Error::DomainMismatch(self.domain, x.domain()));
        }
        Ok(())
    }

    /// Bilinear product; panics if the operands do not belong to the algebra.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let n = self.dim();
        let mut acc: Vec<Scalar> = vec![self.domain.zero(); n];
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (a, t) in acc.iter_mut().zip(self.table[i][j].coords()) {
                    if !t.is_zero() {
                        *a = &*a + &(&c * t);
                    }
                }
            }
        }
        Element::new(acc).expect("n ≥ 1")
    }

    pub fn square(&self, x: &Element) -> Element {
        self.mul(x, x)
    }

    /// Matrix of `L_x : y ↦ x·y`.
    pub fn left_op(&self, x: &Element) -> Operator {
        let cols: Vec<Element> = self.basis().iter().map(|e| self.mul(x, e)).collect();
        Operator::from_columns(&cols)
    }

    /// Matrix of `R_x : y ↦ y·x`.
    pub fn right_op(&self, x: &Element) -> Operator {
        let cols: Vec<Element> = self.basis().iter().map(|e| self.mul(e, x)).collect();
        Operator::from_columns(&cols)
    }

    pub fn span(&self, vectors: &[Element]) -> Subspace {
        Subspace::span(self.domain, self.dim(), vectors)
    }

    /// Is `U·V ⊆ W`? Checked on basis vectors, which suffices by bilinearity.
    pub fn products_within(&self, u: &Subspace, v: &Subspace, w: &Subspace) -> bool {
        u.basis()
            .iter()
            .all(|x| v.basis().iter().all(|y| w.contains(&self.mul(x, y))))
    }

    /// Maps every structure constant through `f`, landing in `domain`.
    pub fn map_scalars(
        &self,
        domain: Domain,
        f: impl Fn(&Scalar) -> Result<Scalar>,
    ) -> Result<Algebra> {
        let table = self
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.try_map(&f))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        build_algebra(domain, self.dim(), self.names.clone(), table)
    }

    /// Substitutes `t = value` in a ℚ(t) algebra.
    pub fn specialize(&self, value: &Scalar) -> Result<Algebra> {
        self.map_scalars(value.domain(), |c| c.specialize(value))
    }

    /// Copy with one structure constant replaced; used for mutation tests.
    pub fn with_entry(&self, i: usize, j: usize, k: usize, value: Scalar) -> Result<Algebra> {
        let mut table = self.table.clone();
        let mut coords = table[i][j].coords().to_vec();
        coords[k] = value;
        table[i][j] = Element::new(coords)?;
        build_algebra(self.domain, self.dim(), self.names.clone(), table)
    }
}

/// Checked product.
pub fn multiply(a: &Algebra, x: &Element, y: &Element) -> Result<Element> {
    a.check_element(x)?;
    a.check_element(y)?;
    Ok(a.mul(x, y))
}

pub fn left_op(a: &Algebra, x: &Element) -> Result<Operator> {
    a.check_element(x)?;
    Ok(a.left_op(x))
}

pub fn right_op(a: &Algebra, x: &Element) -> Result<Operator> {
    a.check_element(x)?;
    Ok(a.right_op(x))
}

/// Smallest subalgebra containing `generators`: the span is grown by all
/// products of current basis vectors until its dimension stops changing.
pub fn subalgebra_closure(a: &Algebra, generators: &[Element]) -> Result<Subspace> {
    if generators.is_empty() {
        return Err(Error::Shape("closure needs at least one generator".into()));
    }
    for g in generators {
        a.check_element(g)?;
    }
    let mut current = a.span(generators);
    loop {
        let basis = current.basis().to_vec();
        let mut vectors = basis.clone();
        for x in &basis {
            for y in &basis {
                vectors.push(a.mul(x, y));
            }
        }
        let next = a.span(&vectors);
        if next.dim() == current.dim() {
            return Ok(current);
        }
        current = next;
    }
}

pub fn is_commutative(a: &Algebra) -> bool {
    let n = a.dim();
    (0..n).all(|i| (i + 1..n).all(|j| a.table[i][j] == a.table[j][i]))
}

/// Linearized flexible law `(xy)z + (zy)x = x(yz) + z(yx)` on all basis
/// triples. In characteristic ≠ 2 this is equivalent to `(xy)x = x(yx)`.
pub fn is_flexible(a: &Algebra) -> bool {
    flexibility_violation(a).is_none()
}

/// First basis triple `(i, j, k)` violating the linearized flexible law.
pub fn flexibility_violation(a: &Algebra) -> Option<(usize, usize, usize)> {
    let n = a.dim();
    let e = a.basis();
    for i in 0..n {
        for j in 0..n {
            // the identity is symmetric in x and z
            for k in i..n {
                let (x, y, z) = (&e[i], &e[j], &e[k]);
                let lhs = a.mul(&a.mul(x, y), z).add(&a.mul(&a.mul(z, y), x));
                let rhs = a.mul(x, &a.mul(y, z)).add(&a.mul(z, &a.mul(y, x)));
                if lhs != rhs {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Commutative center `{x : xy = yx for all y}`.
pub fn center(a: &Algebra) -> Subspace {
    let n = a.dim();
    // Row (j, k) of the stacked map: k-th coordinate of x·e_j − e_j·x as a
    // linear form in x.
    let mut rows = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            rows.push(
                (0..n)
                    .map(|i| a.table[i][j].coords()[k].clone() - a.table[j][i].coords()[k].clone())
                    .collect(),
            );
        }
    }
    Subspace::from_nullspace(a.domain, n, &rows)
}
