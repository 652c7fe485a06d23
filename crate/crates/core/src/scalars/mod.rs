//! Exact scalars over ℚ, GF(p) for odd primes p, and ℚ(t).
//!
//! A [`Scalar`] carries its own domain. Mixing domains is a programming
//! error inside the crate (the operator impls panic), while the checked
//! entry points ([`Scalar::checked_add`] and friends, [`scalar_arith`])
//! report [`Error::DomainMismatch`] instead.

mod parse;
mod poly;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use parse::parse_scalar;
pub use ratfunc::RatFunc;

/// An odd prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::CharTwoUnsupported);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Domain {
    Rational,
    PrimeField(PrimeModulus),
    RationalFunction,
}

impl Domain {
    pub fn prime_field(p: u64) -> Result<Self> {
        PrimeModulus::new(p).map(Domain::PrimeField)
    }

    /// 0 for ℚ and ℚ(t), p for GF(p).
    pub fn characteristic(self) -> u64 {
        match self {
            Domain::PrimeField(p) => p.get(),
            _ => 0,
        }
    }

    /// Number of field elements, `None` for infinite fields.
    pub fn order(self) -> Option<u64> {
        match self {
            Domain::PrimeField(p) => Some(p.get()),
            _ => None,
        }
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        self.integer(&BigInt::from(n))
    }

    pub fn integer(self, n: &BigInt) -> Scalar {
        self.rational(&BigRational::from_integer(n.clone()))
            .expect("integers are always representable")
    }

    /// The image of a rational number; fails in GF(p) when p divides the
    /// denominator.
    pub fn rational(self, q: &BigRational) -> Result<Scalar> {
        Ok(Scalar(match self {
            Domain::Rational => Repr::Rat(q.clone()),
            Domain::PrimeField(p) => {
                let m = BigInt::from(p.get());
                let num = residue(q.numer(), &m);
                let den = residue(q.denom(), &m);
                if den == 0 {
                    return Err(Error::DivisionByZero);
                }
                Repr::Mod(mul_mod(num, inv_mod(den, p.get()), p.get()), p)
            }
            Domain::RationalFunction => Repr::Func(RatFunc::from_rational(q)),
        }))
    }

    /// `n / d` as a scalar.
    pub fn ratio(self, n: i64, d: i64) -> Result<Scalar> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        self.rational(&BigRational::new(n.into(), d.into()))
    }

    /// The indeterminate `t` of ℚ(t).
    pub fn indeterminate(self) -> Option<Scalar> {
        match self {
            Domain::RationalFunction => Some(Scalar(Repr::Func(RatFunc::t()))),
            _ => None,
        }
    }

    /// All field elements in residue order (finite fields only).
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        match self {
            Domain::PrimeField(p) => Some((0..p.get()).map(move |v| Scalar(Repr::Mod(v, p)))),
            _ => None,
        }
    }

    /// The residue `v mod p` (finite fields only).
    pub fn residue(self, v: u64) -> Option<Scalar> {
        match self {
            Domain::PrimeField(p) => Some(Scalar(Repr::Mod(v % p.get(), p))),
            _ => None,
        }
    }

    /// Short tag used by the algebra file format: `Q`, `GF:p` or `Qt`.
    pub fn tag(self) -> String {
        match self {
            Domain::Rational => "Q".to_string(),
            Domain::PrimeField(p) => format!("GF:{}", p.get()),
            Domain::RationalFunction => "Qt".to_string(),
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        let tag = tag.trim();
        match tag {
            "Q" => Ok(Domain::Rational),
            "Qt" | "Q(t)" => Ok(Domain::RationalFunction),
            _ => {
                let p = tag
                    .strip_prefix("GF:")
                    .or_else(|| tag.strip_prefix("GF(").and_then(|s| s.strip_suffix(')')))
                    .and_then(|s| s.trim().parse::<u64>().ok())
                    .ok_or_else(|| Error::Parse {
                        position: 0,
                        message: format!("unknown field `{tag}`, expected Q, Qt or GF:p"),
                    })?;
                Domain::prime_field(p)
            }
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rational => f.write_str("Q"),
            Domain::PrimeField(p) => write!(f, "GF({})", p.get()),
            Domain::RationalFunction => f.write_str("Q(t)"),
        }
    }
}

pub fn characteristic(domain: Domain) -> u64 {
    domain.characteristic()
}

fn residue(n: &BigInt, m: &BigInt) -> u64 {
    n.mod_floor(m).to_u64().expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Rat(BigRational),
    Mod(u64, PrimeModulus),
    Func(RatFunc),
}

/// An exact field element tagged with its domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(Repr);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary arithmetic in a stated domain.
pub fn scalar_arith(domain: Domain, op: ArithOp, x: &Scalar, y: &Scalar) -> Result<Scalar> {
    for s in [x, y] {
        if s.domain() != domain {
            return Err(Error::DomainMismatch(domain, s.domain()));
        }
    }
    match op {
        ArithOp::Add => x.checked_add(y),
        ArithOp::Sub => x.checked_sub(y),
        ArithOp::Mul => x.checked_mul(y),
        ArithOp::Div => x.checked_div(y),
    }
}

impl Scalar {
    pub fn domain(&self) -> Domain {
        match &self.0 {
            Repr::Rat(_) => Domain::Rational,
            Repr::Mod(_, p) => Domain::PrimeField(*p),
            Repr::Func(_) => Domain::RationalFunction,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rat(q) => q.is_zero(),
            Repr::Mod(v, _) => *v == 0,
            Repr::Func(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.domain().one()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(q) => Some(q),
            _ => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Mod(v, _) => Some(*v),
            _ => None,
        }
    }

    pub fn as_ratfunc(&self) -> Option<&RatFunc> {
        match &self.0 {
            Repr::Func(f) => Some(f),
            _ => None,
        }
    }

    /// Rational value of a scalar that does not involve `t`.
    pub fn to_rational(&self) -> Option<BigRational> {
        match &self.0 {
            Repr::Rat(q) => Some(q.clone()),
            Repr::Func(f) => f.as_constant(),
            Repr::Mod(..) => None,
        }
    }

    fn check_same(&self, other: &Scalar) -> Result<()> {
        if self.domain() == other.domain() {
            Ok(())
        } else {
            Err(Error::DomainMismatch(self.domain(), other.domain()))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(Scalar(match (&self.0, &other.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a + b),
            (Repr::Mod(a, p), Repr::Mod(b, _)) => Repr::Mod((a + b) % p.get(), *p),
            (Repr::Func(a), Repr::Func(b)) => Repr::Func(a.add(b)),
            _ => unreachable!(),
        }))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(Scalar(match (&self.0, &other.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a * b),
            (Repr::Mod(a, p), Repr::Mod(b, _)) => Repr::Mod(mul_mod(*a, *b, p.get()), *p),
            (Repr::Func(a), Repr::Func(b)) => Repr::Func(a.mul(b)),
            _ => unreachable!(),
        }))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(match &self.0 {
            Repr::Rat(q) => Repr::Rat(q.recip()),
            Repr::Mod(v, p) => Repr::Mod(inv_mod(*v, p.get()), *p),
            Repr::Func(f) => Repr::Func(f.recip().unwrap()),
        }))
    }

    fn neg_ref(&self) -> Scalar {
        Scalar(match &self.0 {
            Repr::Rat(q) => Repr::Rat(-q),
            Repr::Mod(v, p) => Repr::Mod((p.get() - v) % p.get(), *p),
            Repr::Func(f) => Repr::Func(f.neg()),
        })
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        (0..exp).fold(self.domain().one(), |acc, _| &acc * self)
    }

    /// Evaluates a ℚ(t) scalar at `t = value`, landing in `value`'s domain.
    /// Scalars of ℚ or GF(p) are mapped into the target domain unchanged.
    /// Fails with [`Error::DivisionByZero`] at a pole.
    pub fn specialize(&self, value: &Scalar) -> Result<Scalar> {
        let target = value.domain();
        match &self.0 {
            Repr::Func(f) => {
                if target == Domain::RationalFunction {
                    let num = eval_int_poly(f.numerator(), value);
                    let den = eval_int_poly(f.denominator(), value);
                    return num.checked_div(&den);
                }
                let num = eval_int_poly_in(f.numerator(), value, target);
                let den = eval_int_poly_in(f.denominator(), value, target);
                num.checked_div(&den)
            }
            Repr::Rat(q) => target.rational(q),
            Repr::Mod(..) if self.domain() == target => Ok(self.clone()),
            Repr::Mod(..) => Err(Error::DomainMismatch(self.domain(), target)),
        }
    }
}

fn eval_int_poly(coeffs: &[BigInt], x: &Scalar) -> Scalar {
    eval_int_poly_in(coeffs, x, x.domain())
}

fn eval_int_poly_in(coeffs: &[BigInt], x: &Scalar, domain: Domain) -> Scalar {
    coeffs
        .iter()
        .rev()
        .fold(domain.zero(), |acc, c| &(&acc * x) + &domain.integer(c))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rat(q) => write!(f, "{q}"),
            Repr::Mod(v, _) => write!(f, "{v}"),
            Repr::Func(r) => write!(f, "{r}"),
        }
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Canonical text form, accepted back by [`parse_scalar`].
pub fn print_scalar(x: &Scalar) -> String {
    x.to_string()
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;

            /// Panics on domain mismatch (and division by zero for `Div`).
            fn $method(self, rhs: &Scalar) -> Scalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("scalar {}: {e}", stringify!($method)),
                }
            }
        }

        impl $trait<Scalar> for Scalar {
            type Output = Scalar;

            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}
