//! Binary polynomials and the extension fields GF(2^m), m <= 32.
//!
//! A field element is stored as its coordinate vector with respect to the
//! polynomial basis `1, a, ..., a^(m-1)`, where `a` is a root of the field
//! modulus; bit `j` of the packed value is the coefficient of `a^j`.

use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::gf2::BitVector;

pub const MAX_EXTENSION_DEGREE: u32 = 32;

/// Polynomial over GF(2), lowest degree first, packed into 64-bit words.
///
/// Canonical: no zero words above the leading term, so the zero
/// polynomial has no words at all.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly2 {
    words: Vec<u64>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_u64(1)
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_u64(2)
    }

    /// Bit `i` of `bits` is the coefficient of `x^i`.
    pub fn from_u64(bits: u64) -> Self {
        let mut p = Poly2 { words: vec![bits] };
        p.trim();
        p
    }

    /// Sum of `x^e` over the listed exponents (repeated exponents cancel).
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exps {
            p.flip(e);
        }
        p
    }

    pub fn from_coeffs(coeffs: &[bool]) -> Self {
        let exps: Vec<usize> = coeffs.iter().enumerate().filter_map(|(i, &c)| c.then_some(i)).collect();
        Self::from_exponents(&exps)
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    fn flip(&mut self, e: usize) {
        let w = e / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1u64 << (e % 64);
        self.trim();
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    /// Packed form when the degree is below 64.
    pub fn to_u64(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn shifted(&self, by: usize) -> Poly2 {
        let Some(deg) = self.degree() else {
            return Poly2::zero();
        };
        let mut out = Poly2 {
            words: vec![0; (deg + by) / 64 + 1],
        };
        for i in 0..=deg {
            if self.coeff(i) {
                let e = i + by;
                out.words[e / 64] |= 1u64 << (e % 64);
            }
        }
        out.trim();
        out
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let n = self.words.len().max(other.words.len());
        let mut words = vec![0; n];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.words.get(i).copied().unwrap_or(0) ^ other.words.get(i).copied().unwrap_or(0);
        }
        let mut p = Poly2 { words };
        p.trim();
        p
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        let mut acc = Poly2::zero();
        if let Some(deg) = self.degree() {
            for i in 0..=deg {
                if self.coeff(i) {
                    acc = acc.add(&other.shifted(i));
                }
            }
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Poly2 {
        let mut base = self.clone();
        let mut acc = Poly2::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Quotient and remainder of long division.
    pub fn div_rem(&self, divisor: &Poly2) -> Result<(Poly2, Poly2)> {
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let mut rem = self.clone();
        let mut quot = Poly2::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            quot.flip(shift);
            rem = rem.add(&divisor.shifted(shift));
        }
        Ok((quot, rem))
    }

    pub fn rem(&self, divisor: &Poly2) -> Result<Poly2> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn divides(&self, other: &Poly2) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Evaluate at a field element.
    pub fn eval<'f>(&self, at: FieldElem<'f>) -> FieldElem<'f> {
        let field = at.field;
        let mut acc = field.zero();
        if let Some(deg) = self.degree() {
            for i in (0..=deg).rev() {
                acc = acc * at;
                if self.coeff(i) {
                    acc = acc + field.one();
                }
            }
        }
        acc
    }

    /// All roots lying in `field`, by exhaustive evaluation.
    pub fn roots_in<'f>(&self, field: &'f FieldCtx) -> Result<Vec<FieldElem<'f>>> {
        if field.m > 24 {
            return Err(Error::Infeasible(format!(
                "root enumeration over GF(2^{}) visits too many elements",
                field.m
            )));
        }
        Ok(field.elements().filter(|&e| self.eval(e).is_zero()).collect())
    }

    /// Coefficients as a `0`/`1` string, lowest degree first.
    pub fn to_bit_string(&self) -> String {
        match self.degree() {
            None => "0".into(),
            Some(d) => (0..=d).map(|i| if self.coeff(i) { '1' } else { '0' }).collect(),
        }
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return f.write_str("0");
        };
        let mut first = true;
        for i in (0..=deg).rev().filter(|&i| self.coeff(i)) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

/// Carry-less product of two polynomials of degree < 32.
fn clmul(a: u64, b: u64) -> u64 {
    let mut acc = 0u64;
    let mut b = b;
    let mut i = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a << i;
        }
        b >>= 1;
        i += 1;
    }
    acc
}

/// Reduce `value` modulo `modulus` (degree `deg`), both packed.
fn reduce(mut value: u64, modulus: u64, deg: u32) -> u64 {
    while value != 0 {
        let top = 63 - value.leading_zeros();
        if top < deg {
            break;
        }
        value ^= modulus << (top - deg);
    }
    value
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let db = 63 - b.leading_zeros();
        while a != 0 && 63 - a.leading_zeros() >= db {
            a ^= b << (63 - a.leading_zeros() - db);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// Ben-Or irreducibility test for a packed polynomial of degree 1..=32.
fn is_irreducible_u64(f: u64) -> bool {
    let deg = 63 - f.leading_zeros();
    if deg == 0 {
        return false;
    }
    // x^(2^i) mod f, checked against gcd(f, x^(2^i) - x) = 1.
    let mut power = reduce(2, f, deg);
    for _ in 0..deg / 2 {
        power = reduce(clmul(power, power), f, deg);
        if gcd_u64(f, power ^ reduce(2, f, deg)) != 1 {
            return false;
        }
    }
    true
}

impl Poly2 {
    /// Irreducibility over GF(2); supported for degree <= 32.
    pub fn is_irreducible(&self) -> Result<bool> {
        match (self.degree(), self.to_u64()) {
            (None, _) | (Some(0), _) => Ok(false),
            (Some(d), Some(bits)) if d <= 32 => Ok(is_irreducible_u64(bits)),
            (Some(d), _) => Err(Error::InvalidParameter(format!(
                "irreducibility test supports degree <= 32, got {d}"
            ))),
        }
    }
}

/// The field GF(2^m) with its canonical modulus and polynomial basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FieldCtx {
    m: u32,
    modulus: Poly2,
    modulus_bits: u64,
}

impl FieldCtx {
    /// GF(2^m) defined by the irreducible polynomial of degree `m` whose
    /// packed form (bit i = coefficient of x^i) is the smallest integer.
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 || m > MAX_EXTENSION_DEGREE {
            return Err(Error::InvalidParameter(format!(
                "extension degree must be in 1..={MAX_EXTENSION_DEGREE}, got {m}"
            )));
        }
        let lo = 1u64 << m;
        let modulus_bits = (lo..lo << 1)
            .find(|&f| is_irreducible_u64(f))
            .expect("an irreducible polynomial exists in every degree");
        Ok(FieldCtx {
            m,
            modulus: Poly2::from_u64(modulus_bits),
            modulus_bits,
        })
    }

    /// Field with an explicitly chosen modulus.
    pub fn with_modulus(modulus: Poly2) -> Result<Self> {
        let m = modulus.degree().unwrap_or(0) as u32;
        if m == 0 || m > MAX_EXTENSION_DEGREE || !modulus.is_irreducible()? {
            return Err(Error::InvalidParameter(format!(
                "{modulus} is not an irreducible polynomial of degree 1..=32"
            )));
        }
        let modulus_bits = modulus.to_u64().expect("degree <= 32");
        Ok(FieldCtx {
            m,
            modulus,
            modulus_bits,
        })
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> &Poly2 {
        &self.modulus
    }

    /// Number of elements, `2^m`.
    pub fn size(&self) -> u64 {
        1u64 << self.m
    }

    /// Order of the multiplicative group, `2^m - 1`.
    pub fn group_order(&self) -> u64 {
        self.size() - 1
    }

    pub fn zero(&self) -> FieldElem<'_> {
        FieldElem { field: self, bits: 0 }
    }

    pub fn one(&self) -> FieldElem<'_> {
        FieldElem { field: self, bits: 1 }
    }

    /// The basis element `a` (a root of the modulus).
    pub fn generator(&self) -> FieldElem<'_> {
        self.elem(2)
    }

    /// Element from its packed coordinates, reduced into range.
    pub fn elem(&self, bits: u64) -> FieldElem<'_> {
        FieldElem {
            field: self,
            bits: reduce(bits, self.modulus_bits, self.m),
        }
    }

    /// All elements in increasing coordinate encoding.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem<'_>> + '_ {
        (0..self.size()).map(move |b| FieldElem { field: self, bits: b })
    }

    fn mul_bits(&self, a: u64, b: u64) -> u64 {
        reduce(clmul(a, b), self.modulus_bits, self.m)
    }

    /// Element of multiplicative order exactly `ord`, smallest encoding first.
    pub fn element_of_order(&self, ord: u64) -> Result<FieldElem<'_>> {
        if ord == 0 || !self.group_order().is_multiple_of(ord) {
            return Err(Error::InvalidParameter(format!(
                "order {ord} does not divide {}",
                self.group_order()
            )));
        }
        let primes = prime_factors(ord);
        self.elements()
            .skip(1)
            .find(|e| e.pow(ord).is_one() && primes.iter().all(|&p| !e.pow(ord / p).is_one()))
            .ok_or_else(|| Error::Inconsistent(format!("no element of order {ord}")))
    }

    /// Pack a coordinate vector of length `m` into an element.
    pub fn pack_bits(&self, v: &BitVector) -> Result<FieldElem<'_>> {
        if v.len() != self.m as usize {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coordinates, got {}",
                self.m,
                v.len()
            )));
        }
        let bits = v.iter_ones().fold(0u64, |acc, i| acc | (1 << i));
        Ok(FieldElem { field: self, bits })
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// An element of a [`FieldCtx`].
#[derive(Clone, Copy)]
pub struct FieldElem<'f> {
    field: &'f FieldCtx,
    bits: u64,
}

impl<'f> FieldElem<'f> {
    pub fn field(&self) -> &'f FieldCtx {
        self.field
    }

    /// Packed coordinates; bit j is the coefficient of `a^j`.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_one(&self) -> bool {
        self.bits == 1
    }

    pub fn pow(&self, mut e: u64) -> FieldElem<'f> {
        let mut base = self.bits;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.field.mul_bits(acc, base);
            }
            base = self.field.mul_bits(base, base);
            e >>= 1;
        }
        FieldElem {
            field: self.field,
            bits: acc,
        }
    }

    pub fn square(&self) -> FieldElem<'f> {
        *self * *self
    }

    pub fn inv(&self) -> Result<FieldElem<'f>> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(self.field.group_order() - 1))
    }

    /// Multiplicative order; zero has no order.
    pub fn order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut ord = self.field.group_order();
        for p in prime_factors(ord) {
            while ord.is_multiple_of(p) && self.pow(ord / p).is_one() {
                ord /= p;
            }
        }
        Some(ord)
    }

    /// Coordinate vector of length `m`.
    pub fn expand_bits(&self) -> BitVector {
        let m = self.field.m as usize;
        let mut v = BitVector::zeros(m);
        for j in 0..m {
            if (self.bits >> j) & 1 == 1 {
                v.set(j, true);
            }
        }
        v
    }

    /// Conjugates `b, b^2, b^4, ...` up to the first repeat.
    pub fn conjugates(&self) -> Vec<FieldElem<'f>> {
        let mut out = vec![*self];
        let mut next = self.square();
        while next != *self {
            out.push(next);
            next = next.square();
        }
        out
    }

    /// Minimal polynomial over GF(2): the product of `x - c` over the
    /// conjugates `c`.
    pub fn minimal_polynomial(&self) -> Poly2 {
        // Coefficients over the extension field, lowest degree first.
        let mut coeffs: Vec<FieldElem<'f>> = vec![self.field.one()];
        for c in self.conjugates() {
            let mut next = vec![self.field.zero(); coeffs.len() + 1];
            for (i, &a) in coeffs.iter().enumerate() {
                next[i + 1] = next[i + 1] + a;
                next[i] = next[i] + a * c;
            }
            coeffs = next;
        }
        let bits: Vec<bool> = coeffs
            .iter()
            .map(|c| {
                assert!(c.bits <= 1, "minimal polynomial coefficient outside GF(2)");
                c.is_one()
            })
            .collect();
        Poly2::from_coeffs(&bits)
    }
}

impl PartialEq for FieldElem<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits && self.field == other.field
    }
}

impl Eq for FieldElem<'_> {}

impl fmt::Debug for FieldElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElem({:#b} in GF(2^{}))", self.bits, self.field.m)
    }
}

impl<'f> Add for FieldElem<'f> {
    type Output = FieldElem<'f>;

    fn add(self, rhs: Self) -> Self::Output {
        assert!(
            std::ptr::eq(self.field, rhs.field) || self.field == rhs.field,
            "field elements from different fields"
        );
        FieldElem {
            field: self.field,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl<'f> Mul for FieldElem<'f> {
    type Output = FieldElem<'f>;

    fn mul(self, rhs: Self) -> Self::Output {
        assert!(
            std::ptr::eq(self.field, rhs.field) || self.field == rhs.field,
            "field elements from different fields"
        );
        FieldElem {
            field: self.field,
            bits: self.field.mul_bits(self.bits, rhs.bits),
        }
    }
}
