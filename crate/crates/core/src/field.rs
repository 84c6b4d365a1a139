//! Exact scalar fields carrying an involutory automorphism σ.
//!
//! Two families are provided: [`FiniteField`] covers GF(p) and GF(p²) with
//! σ either the identity or the Frobenius map `a ↦ a^p`, and [`Rationals`]
//! covers ℚ (where σ is necessarily the identity). Everything above this
//! module is generic over the [`Field`] trait.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Which involution the field carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SigmaKind {
    #[default]
    Identity,
    Frobenius,
}

impl SigmaKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SigmaKind::Identity => "identity",
            SigmaKind::Frobenius => "frobenius",
        }
    }
}

/// The sign ε of a (σ,ε)-sesquilinear form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn to_elem<F: Field>(self, field: &F) -> F::Elem {
        match self {
            Sign::Plus => field.one(),
            Sign::Minus => field.neg(&field.one()),
        }
    }

    /// `self^e`.
    pub fn pow(self, e: usize) -> Sign {
        if self == Sign::Minus && e % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Description of a field: `p = 0` means ℚ.
///
/// `modulus` lists the coefficients of the defining quadratic from the
/// constant term up, so `[1, 1, 1]` is `x² + x + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub p: u64,
    pub d: u32,
    pub modulus: Option<[u64; 3]>,
    pub sigma: SigmaKind,
}

impl FieldSpec {
    pub fn prime(p: u64) -> Self {
        FieldSpec { p, d: 1, modulus: None, sigma: SigmaKind::Identity }
    }

    /// GF(p²) with the default modulus and the given involution.
    pub fn quadratic(p: u64, sigma: SigmaKind) -> Self {
        FieldSpec { p, d: 2, modulus: None, sigma }
    }

    pub fn rationals() -> Self {
        FieldSpec { p: 0, d: 1, modulus: None, sigma: SigmaKind::Identity }
    }

    pub fn is_rational(&self) -> bool {
        self.p == 0
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p == 0 {
            return f.write_str("Q");
        }
        if self.d == 1 {
            write!(f, "GF({})", self.p)?;
        } else {
            write!(f, "GF({}^{})", self.p, self.d)?;
            if let Some(m) = self.modulus {
                write!(f, " mod [{},{},{}]", m[0], m[1], m[2])?;
            }
        }
        if self.sigma == SigmaKind::Frobenius {
            f.write_str(" sigma=frobenius")?;
        }
        Ok(())
    }
}

/// A field with an involution σ, σ² = id.
pub trait Field: Copy + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + Ord + Hash + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn sigma(&self, a: &Self::Elem) -> Self::Elem;
    fn sigma_is_identity(&self) -> bool;
    fn from_int(&self, n: i64) -> Self::Elem;
    /// 0 for ℚ.
    fn characteristic(&self) -> u64;
    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u64>;
    /// All elements, in the canonical encoding order.
    fn elements(&self) -> Result<Vec<Self::Elem>>;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn spec(&self) -> FieldSpec;
    fn fmt_elem(&self, a: &Self::Elem, f: &mut fmt::Formatter<'_>) -> fmt::Result;

    /// Is `a = t + ε·t^σ` for some `t`?
    fn trace_subgroup_contains(&self, a: &Self::Elem, eps: Sign) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn display<'a>(&'a self, a: &'a Self::Elem) -> ElemDisplay<'a, Self> {
        ElemDisplay { field: self, elem: a }
    }

    fn elem_to_string(&self, a: &Self::Elem) -> String {
        self.display(a).to_string()
    }
}

/// `Display` adapter for a field element.
pub struct ElemDisplay<'a, F: Field> {
    field: &'a F,
    elem: &'a F::Elem,
}

impl<F: Field> fmt::Display for ElemDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.field.fmt_elem(self.elem, f)
    }
}

/// Element of a [`FiniteField`], encoded as `a0 + a1·p` for `a0 + a1·ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf(pub u32);

/// GF(p) or GF(p²) = GF(p)[ω]/(ω² + c1·ω + c0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FiniteField {
    p: u64,
    d: u32,
    // monic modulus ω² + c1 ω + c0
    c0: u64,
    c1: u64,
    // ω^p, used by the frobenius map
    frob: (u64, u64),
    raw_modulus: Option<[u64; 3]>,
    sigma: SigmaKind,
}

const MAX_CHARACTERISTIC: u64 = 65_521;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= p {
        if p % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

fn monic_quadratic_has_root(p: u64, c1: u64, c0: u64) -> bool {
    (0..p).any(|r| (r * r % p + c1 * r % p + c0) % p == 0)
}

/// Least monic irreducible `x² + c1 x + c0` in the order (c1, c0).
fn default_modulus(p: u64) -> [u64; 3] {
    for c1 in 0..p {
        for c0 in 0..p {
            if !monic_quadratic_has_root(p, c1, c0) {
                return [c0, c1, 1];
            }
        }
    }
    unreachable!("every prime field has an irreducible quadratic")
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p prime, a != 0
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

impl FiniteField {
    pub fn new(spec: &FieldSpec) -> Result<Self> {
        let p = spec.p;
        if p == 0 {
            return Err(Error::InfiniteField);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_CHARACTERISTIC {
            return Err(Error::CharacteristicTooLarge(p));
        }
        match spec.d {
            1 => {
                if spec.sigma == SigmaKind::Frobenius {
                    return Err(Error::FrobeniusNeedsQuadratic);
                }
                if spec.modulus.is_some() {
                    return Err(Error::BadModulus("prime fields take no modulus".into()));
                }
                Ok(FiniteField {
                    p,
                    d: 1,
                    c0: 0,
                    c1: 0,
                    frob: (0, 1),
                    raw_modulus: None,
                    sigma: SigmaKind::Identity,
                })
            }
            2 => {
                let raw = spec.modulus.unwrap_or_else(|| default_modulus(p));
                let lead = raw[2] % p;
                if lead == 0 {
                    return Err(Error::BadModulus("leading coefficient vanishes mod p".into()));
                }
                let li = mod_inv(lead, p);
                let c0 = raw[0] % p * li % p;
                let c1 = raw[1] % p * li % p;
                if monic_quadratic_has_root(p, c1, c0) {
                    return Err(Error::ReducibleModulus(p));
                }
                let mut field = FiniteField {
                    p,
                    d: 2,
                    c0,
                    c1,
                    frob: (0, 1),
                    raw_modulus: Some(raw),
                    sigma: spec.sigma,
                };
                let w = field.pack(0, 1);
                let wp = field.pow(&w, p);
                field.frob = field.unpack(wp);
                Ok(field)
            }
            d => Err(Error::UnsupportedDegree(d)),
        }
    }

    /// Shorthand for GF(p).
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(&FieldSpec::prime(p))
    }

    /// Shorthand for GF(p²) with the default modulus.
    pub fn quadratic(p: u64, sigma: SigmaKind) -> Result<Self> {
        Self::new(&FieldSpec::quadratic(p, sigma))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    fn pack(&self, a0: u64, a1: u64) -> Gf {
        Gf((a0 + a1 * self.p) as u32)
    }

    fn unpack(&self, a: Gf) -> (u64, u64) {
        let v = a.0 as u64;
        (v % self.p, v / self.p)
    }

    /// Coefficients `[a0, a1]` (or `[a0]` over a prime field).
    pub fn coeffs(&self, a: &Gf) -> Vec<u64> {
        let (a0, a1) = self.unpack(*a);
        if self.d == 1 {
            alloc::vec![a0]
        } else {
            alloc::vec![a0, a1]
        }
    }

    /// Builds an element from coefficients, reducing each mod p.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<Gf> {
        if coeffs.is_empty() || coeffs.len() > self.d as usize {
            return Err(Error::BadElement(format!(
                "expected at most {} coefficients, got {}",
                self.d,
                coeffs.len()
            )));
        }
        let p = self.p as i64;
        let a0 = coeffs[0].rem_euclid(p) as u64;
        let a1 = coeffs.get(1).map_or(0, |c| c.rem_euclid(p) as u64);
        Ok(self.pack(a0, a1))
    }
}

impl Field for FiniteField {
    type Elem = Gf;

    fn zero(&self) -> Gf {
        Gf(0)
    }

    fn one(&self) -> Gf {
        Gf(1)
    }

    fn add(&self, a: &Gf, b: &Gf) -> Gf {
        let p = self.p;
        if self.d == 1 {
            return Gf(((a.0 as u64 + b.0 as u64) % p) as u32);
        }
        let (a0, a1) = self.unpack(*a);
        let (b0, b1) = self.unpack(*b);
        self.pack((a0 + b0) % p, (a1 + b1) % p)
    }

    fn neg(&self, a: &Gf) -> Gf {
        let p = self.p;
        let (a0, a1) = self.unpack(*a);
        self.pack((p - a0) % p, (p - a1) % p)
    }

    fn mul(&self, a: &Gf, b: &Gf) -> Gf {
        let p = self.p;
        if self.d == 1 {
            return Gf((a.0 as u64 * b.0 as u64 % p) as u32);
        }
        let (a0, a1) = self.unpack(*a);
        let (b0, b1) = self.unpack(*b);
        // ω² = -c1 ω - c0
        let hi = a1 * b1 % p;
        let lo = (a0 * b0 + (p - self.c0) * hi) % p;
        let mid = (a0 * b1 % p + a1 * b0 % p + (p - self.c1) * hi % p) % p;
        self.pack(lo, mid)
    }

    fn inv(&self, a: &Gf) -> Option<Gf> {
        if a.0 == 0 {
            return None;
        }
        let q = self.p.pow(self.d);
        Some(self.pow(a, q - 2))
    }

    fn sigma(&self, a: &Gf) -> Gf {
        match self.sigma {
            SigmaKind::Identity => *a,
            SigmaKind::Frobenius => {
                let p = self.p;
                let (a0, a1) = self.unpack(*a);
                let (w0, w1) = self.frob;
                self.pack((a0 + a1 * w0) % p, a1 * w1 % p)
            }
        }
    }

    fn sigma_is_identity(&self) -> bool {
        self.sigma == SigmaKind::Identity
    }

    fn from_int(&self, n: i64) -> Gf {
        Gf(n.rem_euclid(self.p as i64) as u32)
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn order(&self) -> Option<u64> {
        Some(self.p.pow(self.d))
    }

    fn elements(&self) -> Result<Vec<Gf>> {
        Ok((0..self.p.pow(self.d) as u32).map(Gf).collect())
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Gf {
        Gf(rng.gen_range(0..self.p.pow(self.d)) as u32)
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec { p: self.p, d: self.d, modulus: self.raw_modulus, sigma: self.sigma }
    }

    fn fmt_elem(&self, a: &Gf, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a0, a1) = self.unpack(*a);
        if self.d == 1 {
            write!(f, "{a0}")
        } else {
            write!(f, "[{a0},{a1}]")
        }
    }

    fn trace_subgroup_contains(&self, a: &Gf, eps: Sign) -> bool {
        let e = eps.to_elem(self);
        (0..self.p.pow(self.d) as u32)
            .map(Gf)
            .any(|t| self.add(&t, &self.mul(&e, &self.sigma(&t))) == *a)
    }
}

/// The rational numbers, with σ = id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Rationals {
    pub fn new(spec: &FieldSpec) -> Result<Self> {
        if spec.p != 0 {
            return Err(Error::BadElement("rationals need p = 0".into()));
        }
        if spec.d != 1 {
            return Err(Error::UnsupportedDegree(spec.d));
        }
        if spec.sigma != SigmaKind::Identity {
            return Err(Error::FrobeniusNeedsQuadratic);
        }
        Ok(Rationals)
    }

    pub fn ratio(&self, num: i64, den: i64) -> Result<BigRational> {
        if den == 0 {
            return Err(Error::BadElement("zero denominator".into()));
        }
        Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Parses `"3/2"`, `"-4"` and similar.
    pub fn parse(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let bad = || Error::BadElement(s.into());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(num, den))
    }
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn sigma(&self, a: &BigRational) -> BigRational {
        a.clone()
    }

    fn sigma_is_identity(&self) -> bool {
        true
    }

    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn order(&self) -> Option<u64> {
        None
    }

    fn elements(&self) -> Result<Vec<BigRational>> {
        Err(Error::InfiniteField)
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let num: i64 = rng.gen_range(-3..=3);
        let den: i64 = rng.gen_range(1..=3);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::rationals()
    }

    fn fmt_elem(&self, a: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if a.denom().is_one() {
            write!(f, "{}", a.numer())
        } else {
            write!(f, "{}/{}", a.numer(), a.denom())
        }
    }

    fn trace_subgroup_contains(&self, a: &BigRational, eps: Sign) -> bool {
        match eps {
            // t = a/2
            Sign::Plus => true,
            // t - t = 0
            Sign::Minus => a.is_zero(),
        }
    }
}

/// Every `t + ε·t^σ` over a finite field, sorted.
pub fn trace_subgroup<F: Field>(field: &F, eps: Sign) -> Result<Vec<F::Elem>> {
    let e = eps.to_elem(field);
    let mut out: Vec<F::Elem> = field
        .elements()?
        .iter()
        .map(|t| field.add(t, &field.mul(&e, &field.sigma(t))))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Runtime choice between the two supported field families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AnyField {
    Finite(FiniteField),
    Rational(Rationals),
}

impl AnyField {
    pub fn new(spec: &FieldSpec) -> Result<Self> {
        if spec.is_rational() {
            Rationals::new(spec).map(AnyField::Rational)
        } else {
            FiniteField::new(spec).map(AnyField::Finite)
        }
    }
}
