use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{content, QPoly};

/// An element of ℚ(t) in canonical form.
///
/// `num` and `den` are integer polynomials (lowest degree first) that are
/// coprime in ℤ[t], and the leading coefficient of `den` is positive. Zero is
/// `0/1`. Under these rules every rational function has exactly one
/// representation, so derived equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: Vec<BigInt>,
    den: Vec<BigInt>,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: Vec::new(),
            den: vec![BigInt::one()],
        }
    }

    pub fn from_rational(c: &BigRational) -> Self {
        Self::from_qpolys(
            &QPoly::constant(c.clone()),
            &QPoly::constant(BigRational::one()),
        )
        .expect("nonzero denominator")
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        RatFunc {
            num: vec![BigInt::zero(), BigInt::one()],
            den: vec![BigInt::one()],
        }
    }

    /// Canonicalizes `num / den`; `None` when `den` is zero.
    pub(crate) fn from_qpolys(num: &QPoly, den: &QPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let g = num.gcd(den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let scale = BigRational::from_integer(num.denominator_lcm() * den.denominator_lcm());
        let mut num = num.scale(&scale).to_ints();
        let mut den = den.scale(&scale).to_ints();
        let c = content(&num);
        let c = num_integer::Integer::gcd(&c, &content(&den));
        let negate = den.last().unwrap().is_negative();
        for x in num.iter_mut().chain(den.iter_mut()) {
            *x = &*x / &c;
            if negate {
                *x = -&*x;
            }
        }
        Some(RatFunc { num, den })
    }

    pub(crate) fn num_poly(&self) -> QPoly {
        QPoly::from_ints(&self.num)
    }

    pub(crate) fn den_poly(&self) -> QPoly {
        QPoly::from_ints(&self.den)
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &[BigInt] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// The constant value, if this function does not depend on `t`.
    pub fn as_constant(&self) -> Option<BigRational> {
        match (self.num.len(), self.den.len()) {
            (0, _) => Some(BigRational::zero()),
            (1, 1) => Some(BigRational::new(self.num[0].clone(), self.den[0].clone())),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self
            .num_poly()
            .mul(&other.den_poly())
            .add(&other.num_poly().mul(&self.den_poly()));
        let den = self.den_poly().mul(&other.den_poly());
        Self::from_qpolys(&num, &den).unwrap()
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let num = self.num_poly().mul(&other.num_poly());
        let den = self.den_poly().mul(&other.den_poly());
        Self::from_qpolys(&num, &den).unwrap()
    }

    /// `None` when `self` is zero.
    pub fn recip(&self) -> Option<Self> {
        Self::from_qpolys(&self.den_poly(), &self.num_poly())
    }

    /// Substitutes a rational value for `t`; `None` at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let den = self.den_poly().eval(x);
        if den.is_zero() {
            None
        } else {
            Some(self.num_poly().eval(x) / den)
        }
    }
}

pub(crate) fn fmt_int_poly(coeffs: &[BigInt], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if coeffs.is_empty() {
        return f.write_str("0");
    }
    let mut first = true;
    for (deg, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() {
            "-"
        } else if first {
            ""
        } else {
            "+"
        };
        let mag = c.abs();
        f.write_str(sign)?;
        match (deg, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => f.write_str("t")?,
            (1, false) => write!(f, "{mag}*t")?,
            (_, true) => write!(f, "t^{deg}")?,
            (_, false) => write!(f, "{mag}*t^{deg}")?,
        }
        first = false;
    }
    Ok(())
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.len() == 1 && self.den[0].is_one() {
            return fmt_int_poly(&self.num, f);
        }
        if self.num.len() == 1 && self.den.len() == 1 {
            return write!(f, "{}/{}", self.num[0], self.den[0]);
        }
        f.write_str("(")?;
        fmt_int_poly(&self.num, f)?;
        f.write_str(")/(")?;
        fmt_int_poly(&self.den, f)?;
        f.write_str(")")
    }
}
