//! Elements of the cyclotomic field Q(ζ_n), stored as coefficient vectors in
//! the power basis 1, ζ, …, ζ^{φ(n)-1} of Q[y]/(Φ_n(y)).

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::rc::Rc;

use smallvec::SmallVec;

use super::poly::{self, QPoly};
use super::rational::Rational;
use super::ExactError;

type Coeffs = SmallVec<[Rational; 4]>;

struct FieldData {
    phi: usize,
    /// Monic Φ_n, lowest degree first, length φ + 1.
    modulus: QPoly,
}

thread_local! {
    static FIELDS: RefCell<HashMap<u32, Rc<FieldData>>> = RefCell::new(HashMap::new());
}

fn field(order: u32) -> Rc<FieldData> {
    FIELDS.with(|cache| {
        cache
            .borrow_mut()
            .entry(order)
            .or_insert_with(|| {
                let modulus = poly::cyclotomic_polynomial(order);
                Rc::new(FieldData {
                    phi: modulus.len() - 1,
                    modulus,
                })
            })
            .clone()
    })
}

/// Degree of Q(ζ_n) over Q.
pub fn field_degree(order: u32) -> usize {
    field(order).phi
}

/// An exact element of Q(ζ_n).
///
/// Arithmetic between elements of different orders is a programming error
/// and panics in the operator impls; the `try_*` methods report it as
/// [`ExactError::OrderMismatch`] instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Coeffs,
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let phi = field_degree(order);
        Cyclotomic {
            order,
            coeffs: smallvec::smallvec![Rational::zero(); phi],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, value: Rational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = value;
        z
    }

    pub fn from_integer(order: u32, value: i64) -> Self {
        Self::from_rational(order, Rational::from_integer(value))
    }

    /// Builds an element from power-basis coefficients; `coeffs` may be
    /// shorter or longer than φ(n) and is reduced modulo Φ_n.
    pub fn from_coeffs(order: u32, coeffs: &[Rational]) -> Self {
        let f = field(order);
        let mut raw: QPoly = coeffs.to_vec();
        poly::trim(&mut raw);
        Self::reduce(order, &f, raw)
    }

    fn reduce(order: u32, f: &FieldData, mut raw: QPoly) -> Self {
        let phi = f.phi;
        if raw.len() > phi {
            for k in (phi..raw.len()).rev() {
                let c = std::mem::take(&mut raw[k]);
                if c.is_zero() {
                    continue;
                }
                let shift = k - phi;
                for (j, mj) in f.modulus[..phi].iter().enumerate() {
                    if !mj.is_zero() {
                        raw[shift + j] = &raw[shift + j] - &(&c * mj);
                    }
                }
            }
        }
        raw.resize(phi, Rational::zero());
        Cyclotomic {
            order,
            coeffs: raw.into_iter().collect(),
        }
    }

    /// ζ_n^k for any integer `k`.
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut raw = vec![Rational::zero(); e + 1];
        raw[e] = Rational::one();
        Self::from_coeffs(order, &raw)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.is_rational()
    }

    /// True when the element lies in Q.
    #[inline]
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Rational::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then(|| &self.coeffs[0])
    }

    /// The value as an `i64` when it is a rational integer that fits.
    pub fn as_integer(&self) -> Option<i64> {
        self.as_rational().and_then(Rational::to_i64)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn check_order(&self, other: &Self) -> Result<(), ExactError> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(ExactError::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_order(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_order(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_order(other)?;
        Ok(self * other)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_order(other)?;
        Ok(self * &other.inv()?)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_n.
    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(self.order, r.recip().expect("nonzero")));
        }
        let f = field(self.order);
        let mut a: QPoly = self.coeffs.to_vec();
        poly::trim(&mut a);
        let (u, g) = poly::ext_gcd_inverse_part(&a, &f.modulus);
        // Φ_n is irreducible, so any nonzero residue is coprime to it.
        debug_assert!(g.len() == 1 && g[0].is_one());
        Ok(Self::reduce(self.order, &f, u))
    }

    pub fn pow(&self, e: i64) -> Result<Self, ExactError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one(self.order);
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Smallest `k ≥ 1` with `self^k = 1`, searched up to `limit`.
    pub fn multiplicative_order(&self, limit: u64) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut acc = self.clone();
        for k in 1..=limit {
            if acc.is_one() {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }

    /// Parses a literal such as `2`, `-1/3`, `w^2` or `1 + w` in Q(ζ_order).
    pub fn parse(src: &str, order: u32) -> Result<Self, ExactError> {
        let (value, used) = parse_prefix(src, order)?;
        if src[used..].trim().is_empty() {
            Ok(value)
        } else {
            Err(ExactError::Parse {
                pos: used,
                message: format!("unexpected `{}`", &src[used..]),
            })
        }
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on (order, coefficient list). Used only for deterministic
/// output, not as a field ordering.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.coeffs.iter().cmp(other.coeffs.iter()))
    }
}

fn assert_same(a: &Cyclotomic, b: &Cyclotomic) {
    assert_eq!(a.order, b.order, "cyclotomic order mismatch");
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_same(self, rhs);
        Cyclotomic {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_same(self, rhs);
        Cyclotomic {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_same(self, rhs);
        if self.is_rational() {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.is_rational() {
            return self.scale(&rhs.coeffs[0]);
        }
        let f = field(self.order);
        let raw = poly::mul(&self.coeffs, &rhs.coeffs);
        Cyclotomic::reduce(self.order, &f, raw)
    }
}

impl<'a> Div<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    /// Panics on a zero divisor; use [`Cyclotomic::try_div`] to handle it.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Cyclotomic) -> Cyclotomic {
        self * &rhs.inv().expect("cyclotomic division by zero")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

/// Canonical text form: power-basis terms in increasing degree, e.g.
/// `-1/3 + 2*w - w^3`. Parsing this output yields the same element.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            let body = match (k, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "w".to_string(),
                (1, false) => format!("{mag}*w"),
                (_, true) => format!("w^{k}"),
                (_, false) => format!("{mag}*w^{k}"),
            };
            match (first, negative) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [Q(z{})]", self.order)
    }
}

/// Parses the longest cyclotomic literal at the start of `src`. Stops before
/// an unmatched `)` or any character outside the literal grammar
/// (`;`, `,`, `]`), returning the value and the number of bytes consumed.
pub fn parse_prefix(src: &str, order: u32) -> Result<(Cyclotomic, usize), ExactError> {
    let mut p = LiteralParser {
        src: src.as_bytes(),
        pos: 0,
        order,
    };
    let v = p.sum()?;
    p.skip_ws();
    Ok((v, p.pos))
}

struct LiteralParser<'a> {
    src: &'a [u8],
    pos: usize,
    order: u32,
}

impl LiteralParser<'_> {
    fn err(&self, message: impl Into<String>) -> ExactError {
        ExactError::Parse {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Cyclotomic, ExactError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.product()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.product()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Cyclotomic, ExactError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.power()?;
                    acc = acc.try_div(&d).map_err(|_| ExactError::Parse {
                        pos: at,
                        message: "division by zero in literal".into(),
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Cyclotomic, ExactError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let negative = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.digits()?;
            let e: i64 = e.parse().map_err(|_| self.err("exponent too large"))?;
            let e = if negative { -e } else { e };
            return base.pow(e).map_err(|_| self.err("negative power of zero"));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Result<String, ExactError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<Cyclotomic, ExactError> {
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                Ok(Cyclotomic::root_of_unity(self.order, 1))
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                let r: Rational = d.parse().map_err(|e: String| self.err(e))?;
                Ok(Cyclotomic::from_rational(self.order, r))
            }
            Some(c) => Err(self.err(format!("unexpected `{}` in cyclotomic literal", c as char))),
            None => Err(self.err("unexpected end of cyclotomic literal")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str, n: u32) -> Cyclotomic {
        Cyclotomic::parse(s, n).unwrap()
    }

    #[test]
    fn zeta6_squared() {
        let z = Cyclotomic::root_of_unity(6, 1);
        assert_eq!(&z * &z, c("w - 1", 6));
        assert_eq!((&z * &z).to_string(), "-1 + w");
    }

    #[test]
    fn inverse_of_zeta6() {
        let z = Cyclotomic::root_of_unity(6, 1);
        let zi = z.inv().unwrap();
        assert!((&zi * &z).is_one());
        assert_eq!(zi, Cyclotomic::root_of_unity(6, -1));
    }

    #[test]
    fn errors() {
        assert_eq!(Cyclotomic::zero(5).inv(), Err(ExactError::DivisionByZero));
        let a = Cyclotomic::one(3);
        let b = Cyclotomic::one(4);
        assert_eq!(
            a.try_add(&b),
            Err(ExactError::OrderMismatch { left: 3, right: 4 })
        );
        assert!(Cyclotomic::parse("1/0", 3).is_err());
        assert!(Cyclotomic::parse("1 +", 3).is_err());
        assert!(Cyclotomic::parse("1 ) 2", 3).is_err());
    }

    #[test]
    fn literal_forms() {
        assert_eq!(
            c("-1/3", 5),
            Cyclotomic::from_rational(5, Rational::new(-1, 3))
        );
        assert_eq!(c("w^10", 10), Cyclotomic::one(10));
        assert_eq!(c("w^-1", 7), Cyclotomic::root_of_unity(7, 6));
        assert_eq!(c("(1+w)^2", 4), c("2*w", 4));
        let (v, used) = parse_prefix("1/2);rest", 6).unwrap();
        assert_eq!(v.to_string(), "1/2");
        assert_eq!(used, 3);
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "1", "-1/3 + 2*w", "w^3", "-w - w^2 + 7/2*w^3"] {
            let v = c(s, 10);
            assert_eq!(c(&v.to_string(), 10), v);
        }
        assert_eq!(
            c("-w - w^2 + 7/2*w^3", 10).to_string(),
            "-w - w^2 + 7/2*w^3"
        );
    }

    #[test]
    fn orders_of_roots() {
        assert_eq!(
            Cyclotomic::root_of_unity(10, 2).multiplicative_order(100),
            Some(5)
        );
        assert_eq!(
            Cyclotomic::from_integer(10, -1).multiplicative_order(100),
            Some(2)
        );
        assert_eq!(
            Cyclotomic::from_integer(10, 2).multiplicative_order(100),
            None
        );
    }
}
