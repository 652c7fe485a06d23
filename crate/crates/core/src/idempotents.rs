//! Idempotent tests, exhaustive enumeration over GF(p), and parametric
//! family checks over ℚ(t).

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Element;
use crate::scalars::Domain;

pub const DEFAULT_ENUM_CAP: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdempotentList {
    /// Canonically sorted, no duplicates.
    pub elements: Vec<Element>,
    /// True only for an exhaustive finite-field scan.
    pub complete: bool,
}

impl IdempotentList {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

pub fn is_idempotent(a: &Algebra, y: &Element) -> bool {
    a.check_element(y).is_ok() && a.square(y) == *y
}

/// Number of elements of `a`, when finite.
pub fn element_count(a: &Algebra) -> Result<u128> {
    let q = a.domain().order().ok_or(Error::InfiniteField(a.domain()))?;
    Ok((q as u128).checked_pow(a.dim() as u32).unwrap_or(u128::MAX))
}

/// Decodes `index` as base-`p` coordinates, least significant first.
pub(crate) fn element_at(domain: Domain, p: u64, n: usize, mut index: u128) -> Element {
    let coords = (0..n)
        .map(|_| {
            let r = (index % p as u128) as u64;
            index /= p as u128;
            domain.residue(r).expect("finite field")
        })
        .collect();
    Element::new(coords).expect("n ≥ 1")
}

/// Every element of a finite-field algebra, in scan order.
pub fn all_elements(a: &Algebra, cap: u128) -> Result<impl ParallelIterator<Item = Element> + '_> {
    let size = element_count(a)?;
    if size > cap {
        return Err(Error::EnumerationTooLarge { size, cap });
    }
    let domain = a.domain();
    let p = domain.order().expect("finite");
    let n = a.dim();
    Ok((0..size as u64)
        .into_par_iter()
        .map(move |i| element_at(domain, p, n, i as u128)))
}

pub fn enumerate_idempotents_ff(a: &Algebra) -> Result<IdempotentList> {
    enumerate_idempotents_ff_with_cap(a, DEFAULT_ENUM_CAP)
}

pub fn enumerate_idempotents_ff_with_cap(a: &Algebra, cap: u128) -> Result<IdempotentList> {
    let mut elements: Vec<Element> = all_elements(a, cap)?
        .filter(|y| a.square(y) == *y)
        .collect();
    elements.sort();
    elements.dedup();
    Ok(IdempotentList {
        elements,
        complete: true,
    })
}

/// Whether `y·y − y` vanishes identically. Over ℚ(t) this proves the family
/// idempotent for every parameter value where it is defined.
pub fn verify_idempotent_family(a: &Algebra, y: &Element) -> Result<bool> {
    a.check_element(y)?;
    Ok(a.square(y) == *y)
}
