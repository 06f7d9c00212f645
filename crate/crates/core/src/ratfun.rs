//! Exact univariate polynomials and rational functions over the integers.
//!
//! [`RationalGf`] is always stored in normal form: numerator and denominator
//! share no polynomial factor, their combined integer content is 1, and the
//! lowest nonzero coefficient of the denominator is positive. Two rational
//! functions are equal exactly when their normal forms are structurally equal,
//! so the derived `Eq`/`Hash` are usable for grouping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense polynomial, `coeffs[i]` is the coefficient of `x^i`. No trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Polynomial::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide by the content, keeping the sign of every coefficient.
    pub fn primitive_part(&self) -> Polynomial {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Remainder of `m * self` by `divisor` for some positive integer `m`.
    pub fn pseudo_rem(&self, divisor: &Polynomial) -> Polynomial {
        let d = divisor
            .degree()
            .expect("pseudo-remainder by zero polynomial");
        let lead = divisor.leading().unwrap();
        let (mult, sign) = (lead.abs(), lead.signum());
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < d {
                break;
            }
            let top = r.leading().unwrap() * &sign;
            r = &r.scale(&mult) - &divisor.scale(&top).shift(dr - d);
        }
        r
    }

    /// Exact quotient in `Z[x]`, or `None` if `divisor` does not divide `self`
    /// there.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let d = divisor.degree()?;
        let Some(n) = self.degree() else {
            return Some(Polynomial::zero());
        };
        if n < d {
            return None;
        }
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - d + 1];
        for i in (0..=n - d).rev() {
            let (q, r) = rem[i + d].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        rem.iter()
            .all(Zero::is_zero)
            .then(|| Polynomial::from_coeffs(quot))
    }

    /// Primitive gcd with positive leading coefficient; zero iff both are zero.
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (a.primitive_part(), b.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        if a.leading().is_some_and(Signed::is_negative) {
            a = -a;
        }
        a
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    fn write_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    f.write_str("x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }

    fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

/// A reduced ratio of integer polynomials, used for every generating function.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalGf {
    num: Polynomial,
    den: Polynomial,
}

impl RationalGf {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<RationalGf> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(normalize(num, den))
    }

    pub fn from_i64(num: &[i64], den: &[i64]) -> Result<RationalGf> {
        RationalGf::new(Polynomial::from_i64(num), Polynomial::from_i64(den))
    }

    pub fn polynomial(p: Polynomial) -> RationalGf {
        normalize(p, Polynomial::one())
    }

    pub fn zero() -> RationalGf {
        RationalGf::polynomial(Polynomial::zero())
    }

    pub fn one() -> RationalGf {
        RationalGf::polynomial(Polynomial::one())
    }

    pub fn x() -> RationalGf {
        RationalGf::polynomial(Polynomial::x())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn checked_div(&self, rhs: &RationalGf) -> Result<RationalGf> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(normalize(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Taylor coefficients `a_0..=a_nmax` at the origin.
    pub fn series(&self, nmax: usize) -> Result<Vec<BigInt>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::SingularAtZero);
        }
        let den = self.den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(nmax + 1);
        for n in 0..=nmax {
            let mut acc = self.num.coeff(n);
            for (i, d) in den.iter().enumerate().skip(1).take(n) {
                acc -= d * &out[n - i];
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(Error::NonIntegerCoefficient(n));
            }
            out.push(q);
        }
        Ok(out)
    }

    /// Exponential growth rate `1/r`, where `r` is the smallest positive root
    /// of the denominator; 0 when the denominator is constant.
    pub fn growth_rate(&self) -> Result<f64> {
        if self.den.is_constant() {
            return Ok(0.0);
        }
        if self.den.coeff(0).is_zero() {
            return Err(Error::SingularAtZero);
        }
        let root = smallest_positive_root(&self.den).ok_or(Error::NoPositiveRoot)?;
        Ok(1.0 / root)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("integer lists always serialize")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<RationalGf> {
        serde_json::from_value(value.clone()).map_err(|e| Error::GfJson(e.to_string()))
    }
}

fn normalize(num: Polynomial, den: Polynomial) -> RationalGf {
    if num.is_zero() {
        return RationalGf {
            num,
            den: Polynomial::one(),
        };
    }
    let g = Polynomial::gcd(&num, &den);
    let (mut num, mut den) = if g.is_constant() {
        (num, den)
    } else {
        (
            num.div_exact(&g).expect("gcd divides numerator"),
            den.div_exact(&g).expect("gcd divides denominator"),
        )
    };
    let c = num.content().gcd(&den.content());
    if !c.is_one() {
        num = Polynomial::from_coeffs(num.coeffs.iter().map(|a| a / &c).collect());
        den = Polynomial::from_coeffs(den.coeffs.iter().map(|a| a / &c).collect());
    }
    let low = den
        .coeffs
        .iter()
        .find(|c| !c.is_zero())
        .expect("nonzero den");
    if low.is_negative() {
        num = -num;
        den = -den;
    }
    RationalGf { num, den }
}

impl Add for &RationalGf {
    type Output = RationalGf;

    fn add(self, rhs: &RationalGf) -> RationalGf {
        normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalGf {
    type Output = RationalGf;

    fn sub(self, rhs: &RationalGf) -> RationalGf {
        normalize(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalGf {
    type Output = RationalGf;

    fn mul(self, rhs: &RationalGf) -> RationalGf {
        normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalGf {
    type Output = RationalGf;

    fn neg(self) -> RationalGf {
        RationalGf {
            num: -self.num.clone(),
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Polynomial| {
            if p.term_count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RationalGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalGf({self})")
    }
}

impl Polynomial {
    fn is_one_poly(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct GfRepr {
    num: Vec<serde_json::Number>,
    den: Vec<serde_json::Number>,
}

fn to_numbers(p: &Polynomial) -> Vec<serde_json::Number> {
    p.coeffs
        .iter()
        .map(|c| serde_json::Number::from_str(&c.to_string()).expect("integer literal"))
        .collect()
}

fn from_numbers(v: &[serde_json::Number]) -> std::result::Result<Polynomial, String> {
    v.iter()
        .map(|n| BigInt::from_str(&n.to_string()).map_err(|_| format!("{n} is not an integer")))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(Polynomial::from_coeffs)
}

impl serde::Serialize for RationalGf {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GfRepr {
            num: to_numbers(&self.num),
            den: to_numbers(&self.den),
        }
        .serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for RationalGf {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = GfRepr::deserialize(d)?;
        let num = from_numbers(&repr.num).map_err(D::Error::custom)?;
        let den = from_numbers(&repr.den).map_err(D::Error::custom)?;
        RationalGf::new(num, den).map_err(D::Error::custom)
    }
}

fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].pseudo_rem(&chain[n - 1]).primitive_part();
        if r.is_zero() {
            break;
        }
        chain.push(-r);
    }
    chain
}

fn sign_changes(chain: &[Polynomial], x: &BigRational) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| if v.is_positive() { 1 } else { -1 })
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Smallest positive real root, isolated with Sturm counts and narrowed by
/// bisection at exact rational points.
fn smallest_positive_root(den: &Polynomial) -> Option<f64> {
    let g = Polynomial::gcd(den, &den.derivative());
    let square_free = den.div_exact(&g).expect("gcd divides");
    let chain = sturm_chain(&square_free);
    let lead = BigRational::from_integer(square_free.leading()?.abs());
    let bound = square_free.coeffs()[..square_free.coeffs().len() - 1]
        .iter()
        .map(|c| BigRational::from_integer(c.abs()) / &lead)
        .fold(BigRational::zero(), |m, c| if c > m { c } else { m })
        + BigRational::one();

    let mut lo = BigRational::zero();
    let mut hi = bound;
    let mut v_lo = sign_changes(&chain, &lo);
    if v_lo <= sign_changes(&chain, &hi) {
        return None;
    }
    let two = BigRational::from_integer(2.into());
    for _ in 0..80 {
        let mut mid = (&lo + &hi) / &two;
        let mut nudge = 1u64;
        while square_free.eval(&mid).is_zero() {
            mid += (&hi - &lo) / BigRational::from_integer((1_000_003u64 * nudge).into());
            nudge += 1;
        }
        let v_mid = sign_changes(&chain, &mid);
        if v_lo > v_mid {
            hi = mid;
        } else {
            lo = mid;
            v_lo = v_mid;
        }
    }
    ((lo + hi) / two).to_f64()
}
