//! Finite abelian groups used as index sets for difference sets and type I matrices.
//!
//! Two families are supported: cyclic groups `Z_n` and the additive group of a
//! finite field `F_{p^k} = Z_p[x]/(f)`. Elements are encoded as integers in
//! `0..order`; for fields the encoding is the radix-`p` value of the
//! coefficient vector with the constant term least significant, so `a + bx`
//! over `Z_5` is `a + 5b`. Zero always encodes as 0.

mod automorphism;
pub(crate) mod poly;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use automorphism::{Automorphism, Automorphisms, DEFAULT_AUTOMORPHISM_BOUND};

/// Additive tables are materialized below this order.
const TABLE_LIMIT: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order must be positive")]
    ZeroOrder,
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("bad modulus: {0}")]
    BadModulus(String),
    #[error("modulus {modulus} is reducible over Z_{p}: divisible by {factor}")]
    Reducible { modulus: String, p: u32, factor: String },
    #[error("group order {0} is too large")]
    TooLarge(u64),
    #[error("{0} requires a field-backed group")]
    Unsupported(&'static str),
    #[error("group order {order} exceeds the automorphism enumeration bound {bound}")]
    Capacity { order: usize, bound: usize },
    #[error("cannot parse group spec {0:?}")]
    Parse(String),
}

/// Declarative description of a group, as written in files and on the command line.
///
/// Text syntax: `cyclic:<n>` or `ea:<p>^<k>:<c0,c1,...,ck>` where the `c_i`
/// are the coefficients of the monic modulus, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic { n: u32 },
    ElementaryAbelian { p: u32, k: u32, modulus: Vec<u32> },
}

impl GroupSpec {
    pub fn cyclic(n: u32) -> Self {
        GroupSpec::Cyclic { n }
    }

    pub fn field(p: u32, k: u32, modulus: &[u32]) -> Self {
        GroupSpec::ElementaryAbelian { p, k, modulus: modulus.to_vec() }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic { n } => write!(f, "cyclic:{n}"),
            GroupSpec::ElementaryAbelian { p, k, modulus } => {
                let coeffs: Vec<String> = modulus.iter().map(u32::to_string).collect();
                write!(f, "ea:{p}^{k}:{}", coeffs.join(","))
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GroupError::Parse(s.to_string());
        let s = s.trim();
        if let Some(n) = s.strip_prefix("cyclic:") {
            let n = n.trim().parse().map_err(|_| bad())?;
            return Ok(GroupSpec::Cyclic { n });
        }
        let rest = s.strip_prefix("ea:").ok_or_else(bad)?;
        let (pk, coeffs) = rest.split_once(':').ok_or_else(bad)?;
        let (p, k) = pk.split_once('^').ok_or_else(bad)?;
        let p = p.trim().parse().map_err(|_| bad())?;
        let k = k.trim().parse().map_err(|_| bad())?;
        let modulus =
            coeffs.split(',').map(|c| c.trim().parse::<u32>()).collect::<Result<Vec<_>, _>>().map_err(|_| bad())?;
        Ok(GroupSpec::ElementaryAbelian { p, k, modulus })
    }
}

/// A group element, encoded as an integer in `0..order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Element(pub u32);

impl Element {
    pub const ZERO: Element = Element(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone)]
struct FieldData {
    p: u32,
    k: u32,
    modulus: Vec<u32>,
    add: Option<Vec<u32>>,
    neg: Vec<u32>,
}

#[derive(Debug, Clone)]
enum Repr {
    Cyclic,
    Field(FieldData),
}

/// An immutable finite abelian group.
#[derive(Debug, Clone)]
pub struct Group {
    spec: GroupSpec,
    order: usize,
    repr: Repr,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for Group {}

impl Group {
    pub fn new(spec: GroupSpec) -> Result<Group, GroupError> {
        match &spec {
            GroupSpec::Cyclic { n } => {
                if *n == 0 {
                    return Err(GroupError::ZeroOrder);
                }
                Ok(Group { order: *n as usize, spec, repr: Repr::Cyclic })
            }
            GroupSpec::ElementaryAbelian { p, k, modulus } => {
                let (p, k) = (*p, *k);
                if !poly::is_prime(p) {
                    return Err(GroupError::NotPrime(p));
                }
                if k == 0 {
                    return Err(GroupError::ZeroOrder);
                }
                if modulus.len() != k as usize + 1 {
                    return Err(GroupError::BadModulus(format!(
                        "expected {} coefficients for degree {k}, got {}",
                        k + 1,
                        modulus.len()
                    )));
                }
                if modulus[k as usize] != 1 {
                    return Err(GroupError::BadModulus("modulus must be monic".into()));
                }
                if let Some(c) = modulus.iter().find(|&&c| c >= p) {
                    return Err(GroupError::BadModulus(format!("coefficient {c} is not reduced mod {p}")));
                }
                if let Some(factor) = poly::find_factor(modulus, p) {
                    return Err(GroupError::Reducible {
                        modulus: poly::format_poly(modulus),
                        p,
                        factor: poly::format_poly(&factor),
                    });
                }
                let order = (p as u64).checked_pow(k).filter(|&o| o <= u32::MAX as u64);
                let order = order.ok_or(GroupError::TooLarge(u64::MAX))? as usize;
                let mut data = FieldData { p, k, modulus: modulus.clone(), add: None, neg: Vec::new() };
                data.neg = (0..order as u32).map(|a| digit_neg(&data, a)).collect();
                if order <= TABLE_LIMIT {
                    let mut table = Vec::with_capacity(order * order);
                    for a in 0..order as u32 {
                        for b in 0..order as u32 {
                            table.push(digit_add(&data, a, b));
                        }
                    }
                    data.add = Some(table);
                }
                Ok(Group { order, spec, repr: Repr::Field(data) })
            }
        }
    }

    pub fn cyclic(n: u32) -> Result<Group, GroupError> {
        Group::new(GroupSpec::cyclic(n))
    }

    pub fn field(p: u32, k: u32, modulus: &[u32]) -> Result<Group, GroupError> {
        Group::new(GroupSpec::field(p, k, modulus))
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_field(&self) -> bool {
        matches!(self.repr, Repr::Field(_))
    }

    pub fn zero(&self) -> Element {
        Element::ZERO
    }

    pub fn contains(&self, a: Element) -> bool {
        a.index() < self.order
    }

    /// Returns the element with encoding `i`, if it lies in the group.
    pub fn element(&self, i: usize) -> Option<Element> {
        (i < self.order).then_some(Element(i as u32))
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order as u32).map(Element)
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        debug_assert!(self.contains(a) && self.contains(b));
        match &self.repr {
            Repr::Cyclic => {
                let s = a.0 as u64 + b.0 as u64;
                Element((s % self.order as u64) as u32)
            }
            Repr::Field(f) => match &f.add {
                Some(t) => Element(t[a.index() * self.order + b.index()]),
                None => Element(digit_add(f, a.0, b.0)),
            },
        }
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        debug_assert!(self.contains(a));
        match &self.repr {
            Repr::Cyclic => Element(if a.0 == 0 { 0 } else { self.order as u32 - a.0 }),
            Repr::Field(f) => Element(f.neg[a.index()]),
        }
    }

    #[inline]
    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    /// Integer multiple `m * a`.
    pub fn times(&self, m: u64, a: Element) -> Element {
        match &self.repr {
            Repr::Cyclic => Element((m % self.order as u64 * a.0 as u64 % self.order as u64) as u32),
            Repr::Field(f) => {
                let c = (m % f.p as u64) as u32;
                let digits: Vec<u32> = self.digits(a).iter().map(|d| d * c % f.p).collect();
                self.element_from_digits(&digits)
            }
        }
    }

    /// Row-major table with `table[a * n + b] = a - b`.
    pub fn difference_table(&self) -> Vec<u32> {
        let n = self.order;
        let mut t = Vec::with_capacity(n * n);
        for a in self.elements() {
            for b in self.elements() {
                t.push(self.sub(a, b).0);
            }
        }
        t
    }

    /// Characteristic and extension degree of the backing field.
    pub fn field_params(&self) -> Option<(u32, u32)> {
        match &self.repr {
            Repr::Cyclic => None,
            Repr::Field(f) => Some((f.p, f.k)),
        }
    }

    /// Coefficient vector of a field element, constant term first.
    pub fn digits(&self, a: Element) -> Vec<u32> {
        match &self.repr {
            Repr::Cyclic => vec![a.0],
            Repr::Field(f) => to_digits(f, a.0),
        }
    }

    /// Field element from integer coefficients (constant term first), reduced mod `p`
    /// and, if longer than the degree, modulo the defining polynomial.
    pub fn from_coefficients(&self, coeffs: &[i64]) -> Result<Element, GroupError> {
        let f = self.field_data("from_coefficients")?;
        let p = f.p as i64;
        let reduced: Vec<u32> = coeffs.iter().map(|c| c.rem_euclid(p) as u32).collect();
        let reduced = poly::rem_monic(&reduced, &f.modulus, f.p);
        Ok(self.element_from_digits(&reduced))
    }

    fn element_from_digits(&self, digits: &[u32]) -> Element {
        match &self.repr {
            Repr::Cyclic => Element(digits.first().copied().unwrap_or(0) % self.order as u32),
            Repr::Field(f) => Element(from_digits(f, digits)),
        }
    }

    fn field_data(&self, op: &'static str) -> Result<&FieldData, GroupError> {
        match &self.repr {
            Repr::Field(f) => Ok(f),
            Repr::Cyclic => Err(GroupError::Unsupported(op)),
        }
    }

    pub fn field_one(&self) -> Result<Element, GroupError> {
        self.field_data("field_one")?;
        Ok(Element(if self.order > 1 { 1 } else { 0 }))
    }

    /// Product in `F_q`.
    pub fn field_mul(&self, a: Element, b: Element) -> Result<Element, GroupError> {
        let f = self.field_data("field_mul")?;
        let prod = poly::mul_mod(&to_digits(f, a.0), &to_digits(f, b.0), &f.modulus, f.p);
        Ok(Element(from_digits(f, &prod)))
    }

    pub fn field_pow(&self, a: Element, mut e: u64) -> Result<Element, GroupError> {
        let mut result = self.field_one()?;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.field_mul(result, base)?;
            }
            base = self.field_mul(base, base)?;
            e >>= 1;
        }
        Ok(result)
    }

    /// Multiplicative inverse of a nonzero field element.
    pub fn field_inv(&self, a: Element) -> Result<Option<Element>, GroupError> {
        if a == Element::ZERO {
            self.field_data("field_inv")?;
            return Ok(None);
        }
        self.field_pow(a, self.order as u64 - 2).map(Some)
    }

    /// Order of `a` in the multiplicative group, found by stepping through powers.
    pub fn multiplicative_order(&self, a: Element) -> Result<Option<u64>, GroupError> {
        let one = self.field_one()?;
        if a == Element::ZERO {
            return Ok(None);
        }
        let mut x = a;
        let mut k = 1u64;
        while x != one {
            x = self.field_mul(x, a)?;
            k += 1;
        }
        Ok(Some(k))
    }

    /// Enumerates `Aut(A)` with the default order bound.
    pub fn automorphisms(&self) -> Result<Automorphisms<'_>, GroupError> {
        self.automorphisms_bounded(DEFAULT_AUTOMORPHISM_BOUND)
    }

    pub fn automorphisms_bounded(&self, bound: usize) -> Result<Automorphisms<'_>, GroupError> {
        if self.order > bound {
            return Err(GroupError::Capacity { order: self.order, bound });
        }
        Ok(Automorphisms::new(self))
    }

    /// `|Aut(A)|` from the closed form: Euler's phi for `Z_n`, `|GL(k, p)|` for `F_{p^k}`.
    pub fn automorphism_count(&self) -> u64 {
        match &self.repr {
            Repr::Cyclic => euler_phi(self.order as u64),
            Repr::Field(f) => {
                let q = self.order as u64;
                (0..f.k).map(|i| q - (f.p as u64).pow(i)).product()
            }
        }
    }
}

pub(crate) fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            while n.is_multiple_of(d) {
                n /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn to_digits(f: &FieldData, mut a: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(f.k as usize);
    for _ in 0..f.k {
        d.push(a % f.p);
        a /= f.p;
    }
    d
}

fn from_digits(f: &FieldData, digits: &[u32]) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * f.p + d % f.p)
}

fn digit_add(f: &FieldData, mut a: u32, mut b: u32) -> u32 {
    let (mut out, mut scale) = (0u32, 1u32);
    for _ in 0..f.k {
        out += (a % f.p + b % f.p) % f.p * scale;
        a /= f.p;
        b /= f.p;
        scale = scale.wrapping_mul(f.p);
    }
    out
}

fn digit_neg(f: &FieldData, mut a: u32) -> u32 {
    let (mut out, mut scale) = (0u32, 1u32);
    for _ in 0..f.k {
        out += (f.p - a % f.p) % f.p * scale;
        a /= f.p;
        scale = scale.wrapping_mul(f.p);
    }
    out
}
