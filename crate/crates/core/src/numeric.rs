//! Arbitrary-precision rational arithmetic and the real quadratic field Q[√3].
//!
//! Every coordinate in this crate is a [`QS3`], an exact value `p + q·√3`
//! with arbitrary-precision rational `p`, `q`. The representation is unique
//! (√3 is irrational), so structural equality is value equality, and the
//! sign of any element is decidable exactly without floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// Arbitrary-precision rational: always reduced, denominator always positive.
pub type Rational = num_rational::BigRational;

/// Element of Q[√3]: the exact real number `p + q·√3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QS3 {
    p: Rational,
    q: Rational,
}

impl QS3 {
    pub fn new(p: Rational, q: Rational) -> Self {
        QS3 { p, q }
    }

    pub fn zero() -> Self {
        QS3::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        QS3::from_int(1)
    }

    /// The field generator √3.
    pub fn sqrt3() -> Self {
        QS3::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        QS3::new(Rational::from_integer(BigInt::from(n)), Rational::zero())
    }

    /// Exact rational `n/d`. Panics if `d == 0`.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        QS3::new(
            Rational::new(BigInt::from(n), BigInt::from(d)),
            Rational::zero(),
        )
    }

    /// `(n + m·√3) / d`, a convenient constructor for tabulated constants.
    pub fn from_parts(n: i64, m: i64, d: i64) -> Self {
        QS3::new(
            Rational::new(BigInt::from(n), BigInt::from(d)),
            Rational::new(BigInt::from(m), BigInt::from(d)),
        )
    }

    pub fn from_rational(r: Rational) -> Self {
        QS3::new(r, Rational::zero())
    }

    pub fn rational_part(&self) -> &Rational {
        &self.p
    }

    pub fn sqrt3_coeff(&self) -> &Rational {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    /// Exact sign of the real value `p + q√3`: -1, 0 or +1.
    ///
    /// Decided by case analysis on the component signs and, in the mixed
    /// case, by comparing `p²` against `3q²` — never via floating point.
    pub fn signum(&self) -> i32 {
        let sp = rat_sign(&self.p);
        let sq = rat_sign(&self.q);
        match (sp, sq) {
            (0, 0) => 0,
            (s, 0) => s,
            (0, s) => s,
            (1, 1) => 1,
            (-1, -1) => -1,
            // Signs disagree: |p| vs |q|√3 decides, i.e. p² vs 3q².
            (sp, _) => {
                let p2 = &self.p * &self.p;
                let q2_3 = (&self.q * &self.q) * Rational::from_integer(BigInt::from(3));
                match p2.cmp(&q2_3) {
                    Ordering::Greater => sp,
                    Ordering::Less => -sp,
                    Ordering::Equal => 0, // impossible for q != 0, kept for totality
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> QS3 {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Exact field division. Rationalizes by the conjugate `p - q√3`,
    /// dividing by the norm `p² - 3q²` (zero only for the zero element).
    pub fn checked_div(&self, rhs: &QS3) -> Result<QS3> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let three = Rational::from_integer(BigInt::from(3));
        let norm = &rhs.p * &rhs.p - (&rhs.q * &rhs.q) * &three;
        // numerator: (p1 + q1√3)(p2 - q2√3)
        let np = &self.p * &rhs.p - (&self.q * &rhs.q) * &three;
        let nq = &self.q * &rhs.p - &self.p * &rhs.q;
        Ok(QS3::new(np / &norm, nq / &norm))
    }

    /// Multiplicative inverse; error on zero.
    pub fn checked_inv(&self) -> Result<QS3> {
        QS3::one().checked_div(self)
    }

    /// Exact square root within Q[√3], if one exists.
    ///
    /// Returns `Ok(Some(s))` with `s ≥ 0`, `s² = self` when the root lies in
    /// the field, `Ok(None)` when the value is non-negative but its root is
    /// irrational over Q[√3], and `Err` for negative input.
    ///
    /// From `(a + b√3)² = p + q√3` we get `a² + 3b² = p` and `2ab = q`;
    /// solving over the rationals only exact rational square roots are
    /// accepted.
    pub fn sqrt(&self) -> Result<Option<QS3>> {
        match self.signum() {
            0 => return Ok(Some(QS3::zero())),
            s if s < 0 => return Err(Error::NegativeSqrt),
            _ => {}
        }
        if self.q.is_zero() {
            // b = 0: a = √p, or a = 0: b = √(p/3).
            if let Some(a) = rat_sqrt(&self.p) {
                return Ok(Some(QS3::new(a, Rational::zero())));
            }
            let three = Rational::from_integer(BigInt::from(3));
            if let Some(b) = rat_sqrt(&(&self.p / &three)) {
                return Ok(Some(QS3::new(Rational::zero(), b)));
            }
            return Ok(None);
        }
        // q != 0: b = q/(2a) with a² = (p ± √(p² - 3q²)) / 2.
        let three = Rational::from_integer(BigInt::from(3));
        let disc = &self.p * &self.p - (&self.q * &self.q) * &three;
        if disc.is_negative() {
            return Ok(None);
        }
        let Some(d) = rat_sqrt(&disc) else {
            return Ok(None);
        };
        let two = Rational::from_integer(BigInt::from(2));
        for a2 in [(&self.p + &d) / &two, (&self.p - &d) / &two] {
            if a2.is_negative() {
                continue;
            }
            if let Some(a) = rat_sqrt(&a2) {
                if a.is_zero() {
                    continue;
                }
                let b = &self.q / (&two * &a);
                let cand = QS3::new(a, b);
                let cand = if cand.is_negative() { -&cand } else { cand };
                debug_assert!((&cand * &cand) == *self);
                return Ok(Some(cand));
            }
        }
        Ok(None)
    }

    /// Correctly-rounded nearest `f64` of the exact value.
    ///
    /// Uses a monotone binary search over the ordered bit patterns of
    /// non-negative doubles, comparing each candidate (an exact rational)
    /// against the value with exact sign tests. The result is the true
    /// round-to-nearest double, well inside the 2-ulp contract.
    pub fn to_f64(&self) -> f64 {
        match self.signum() {
            0 => 0.0,
            s if s < 0 => -(-self).to_f64(),
            _ => {
                let max_bits = f64::MAX.to_bits();
                if self.cmp_f64(f64::MAX) == Ordering::Greater {
                    return f64::INFINITY;
                }
                // Largest double <= value.
                let (mut lo, mut hi) = (0u64, max_bits);
                while lo < hi {
                    let mid = lo + (hi - lo).div_ceil(2);
                    if self.cmp_f64(f64::from_bits(mid)) == Ordering::Less {
                        hi = mid - 1;
                    } else {
                        lo = mid;
                    }
                }
                let below = f64::from_bits(lo);
                let above = f64::from_bits(lo + 1);
                let d_below = self - &QS3::from_f64_exact(below);
                let d_above = &QS3::from_f64_exact(above) - self;
                match d_below.cmp(&d_above) {
                    Ordering::Less => below,
                    Ordering::Greater => above,
                    // exact midpoint: round half to even
                    Ordering::Equal => {
                        if lo & 1 == 0 {
                            below
                        } else {
                            above
                        }
                    }
                }
            }
        }
    }

    /// Exact rational value of a finite double.
    fn from_f64_exact(f: f64) -> QS3 {
        debug_assert!(f.is_finite());
        let bits = f.abs().to_bits();
        let exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if exp == 0 {
            (frac, -1074i64)
        } else {
            (frac | (1u64 << 52), exp - 1075)
        };
        let mut num = BigInt::from(m);
        let mut den = BigInt::one();
        if e >= 0 {
            num <<= e as usize;
        } else {
            den <<= (-e) as usize;
        }
        if f.is_sign_negative() {
            num = -num;
        }
        QS3::from_rational(Rational::new(num, den))
    }

    fn cmp_f64(&self, f: f64) -> Ordering {
        self.cmp(&QS3::from_f64_exact(f))
    }

    /// Exact decimal rendering, rounded to nearest with `places` digits
    /// after the point (ties away from zero).
    pub fn to_decimal(&self, places: u32) -> String {
        let pow = Rational::from_integer(BigInt::from(10).pow(places));
        let scaled = self * &QS3::from_rational(pow);
        let n = scaled.round_to_int();
        let neg = n.is_negative();
        let digits = n.abs().to_string();
        let digits = if digits.len() <= places as usize {
            format!("{}{}", "0".repeat(places as usize + 1 - digits.len()), digits)
        } else {
            digits
        };
        let (int_part, frac_part) = digits.split_at(digits.len() - places as usize);
        let sign = if neg { "-" } else { "" };
        if places == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }

    /// Nearest integer to the exact value (ties away from zero).
    fn round_to_int(&self) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        if self.is_negative() {
            return -(-self).round_to_int();
        }
        // floor via float estimate, corrected by exact comparisons
        let approx = self.to_f64();
        let mut k = BigInt::from(approx.floor() as i64);
        loop {
            let kq = QS3::from_rational(Rational::from_integer(k.clone()));
            let diff = self - &kq;
            if diff.is_negative() {
                k -= 1;
            } else if (&diff - &QS3::one()).signum() >= 0 {
                k += 1;
            } else {
                // k <= value < k+1; round half away from zero
                let half = QS3::from_ratio(1, 2);
                if (&diff - &half).signum() >= 0 {
                    return k + 1;
                }
                return k;
            }
        }
    }

    /// Canonical text form without spaces, as used in fixture files.
    pub fn to_compact_string(&self) -> String {
        self.to_string().replace(' ', "")
    }
}

fn rat_sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

/// Exact rational square root, if the reduced numerator and denominator are
/// both perfect squares.
fn rat_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rational::zero());
    }
    let n = r.numer();
    let d = r.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}

impl PartialOrd for QS3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QS3 {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).signum() {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl Add for &QS3 {
    type Output = QS3;
    fn add(self, rhs: &QS3) -> QS3 {
        QS3::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}

impl Sub for &QS3 {
    type Output = QS3;
    fn sub(self, rhs: &QS3) -> QS3 {
        QS3::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

impl Mul for &QS3 {
    type Output = QS3;
    fn mul(self, rhs: &QS3) -> QS3 {
        let three = Rational::from_integer(BigInt::from(3));
        QS3::new(
            &self.p * &rhs.p + (&self.q * &rhs.q) * &three,
            &self.p * &rhs.q + &self.q * &rhs.p,
        )
    }
}

/// Panics on division by zero; use [`QS3::checked_div`] where the
/// denominator is not known to be non-zero.
impl Div for &QS3 {
    type Output = QS3;
    fn div(self, rhs: &QS3) -> QS3 {
        self.checked_div(rhs).expect("QS3 division by zero")
    }
}

impl Neg for &QS3 {
    type Output = QS3;
    fn neg(self) -> QS3 {
        QS3::new(-&self.p, -&self.q)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QS3 {
            type Output = QS3;
            fn $method(self, rhs: QS3) -> QS3 {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QS3> for QS3 {
            type Output = QS3;
            fn $method(self, rhs: &QS3) -> QS3 {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for QS3 {
    type Output = QS3;
    fn neg(self) -> QS3 {
        -&self
    }
}

impl fmt::Display for QS3 {
    /// Canonical form: `p + q*sqrt3` with zero terms suppressed, `q*` dropped
    /// for coefficient ±1, and `parse_qs3 ∘ to_string` the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = Rational::one();
        let write_sqrt3_term = |f: &mut fmt::Formatter<'_>, q: &Rational| -> fmt::Result {
            if q == &one {
                write!(f, "sqrt3")
            } else {
                write!(f, "{q}*sqrt3")
            }
        };
        match (self.p.is_zero(), self.q.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.p),
            (true, false) => {
                if self.q.is_negative() {
                    write!(f, "-")?;
                    write_sqrt3_term(f, &-&self.q)
                } else {
                    write_sqrt3_term(f, &self.q)
                }
            }
            (false, false) => {
                write!(f, "{}", self.p)?;
                if self.q.is_negative() {
                    write!(f, " - ")?;
                    write_sqrt3_term(f, &-&self.q)
                } else {
                    write!(f, " + ")?;
                    write_sqrt3_term(f, &self.q)
                }
            }
        }
    }
}

impl FromStr for QS3 {
    type Err = Error;
    fn from_str(s: &str) -> Result<QS3> {
        parse_qs3(s)
    }
}

/// Parse an exact Q[√3] expression.
///
/// Grammar: integers, the token `sqrt3`, binary `+ - * /`, unary minus and
/// parentheses, left-associative with the usual precedence; whitespace is
/// ignored. `37/100` is integer division in the field and so denotes the
/// exact rational.
pub fn parse_qs3(text: &str) -> Result<QS3> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<QS3> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QS3> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.checked_div(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<QS3> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<QS3> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                let n = BigInt::parse_bytes(digits.as_bytes(), 10)
                    .ok_or_else(|| self.err("bad integer literal"))?;
                Ok(QS3::from_rational(Rational::from_integer(n)))
            }
            Some(b's') => {
                if self.bytes[self.pos..].starts_with(b"sqrt3") {
                    self.pos += 5;
                    Ok(QS3::sqrt3())
                } else {
                    Err(self.err("expected 'sqrt3'"))
                }
            }
            Some(_) => Err(self.err("expected number, 'sqrt3', '(' or '-'")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs3(s: &str) -> QS3 {
        parse_qs3(s).unwrap()
    }

    #[test]
    fn division_rationalizes_by_conjugate() {
        // 1/(1+√3) = (√3-1)/2
        let r = QS3::one().checked_div(&qs3("1+sqrt3")).unwrap();
        assert_eq!(r, QS3::from_parts(-1, 1, 2));
        // sanity: ((-1/2)+(1/2)√3)(1+√3) = 1
        assert_eq!(&r * &qs3("1+sqrt3"), QS3::one());
    }

    #[test]
    fn arithmetic_identities() {
        let x = qs3("5/7 - 2/3*sqrt3");
        assert_eq!(&x * &QS3::one(), x);
        assert_eq!(
            &qs3("1/3") + &qs3("2/5*sqrt3"),
            QS3::new(
                Rational::new(BigInt::from(1), BigInt::from(3)),
                Rational::new(BigInt::from(2), BigInt::from(5)),
            )
        );
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            QS3::one().checked_div(&QS3::zero()),
            Err(Error::DivisionByZero)
        );
        assert!(matches!(parse_qs3("1/(1-1)"), Err(Error::DivisionByZero)));
    }

    #[test]
    fn exact_sign() {
        assert_eq!(qs3("2 - sqrt3").signum(), 1); // 4 > 3
        assert_eq!(QS3::zero().signum(), 0);
        assert_eq!(qs3("1 - sqrt3").signum(), -1); // 1 < 3
        assert_eq!(qs3("-2 + sqrt3").signum(), -1);
        assert_eq!(qs3("-1 + sqrt3").signum(), 1);
    }

    #[test]
    fn in_field_square_roots() {
        // (1+√3)² = 4+2√3, the Hat similarity scale squared
        assert_eq!(qs3("4 + 2*sqrt3").sqrt().unwrap(), Some(qs3("1+sqrt3")));
        assert_eq!(qs3("3").sqrt().unwrap(), Some(QS3::sqrt3()));
        assert_eq!(qs3("2").sqrt().unwrap(), None);
        assert_eq!(qs3("0").sqrt().unwrap(), Some(QS3::zero()));
        assert_eq!(qs3("4").sqrt().unwrap(), Some(QS3::from_int(2)));
        assert_eq!(qs3("4/9").sqrt().unwrap(), Some(QS3::from_ratio(2, 3)));
        // p/3 square: 3/4 = (√3/2)²
        assert_eq!(qs3("3/4").sqrt().unwrap(), Some(QS3::from_parts(0, 1, 2)));
        assert_eq!(qs3("-1").sqrt(), Err(Error::NegativeSqrt));
    }

    #[test]
    fn sqrt_roundtrips_on_squares() {
        let vals = ["1+sqrt3", "2-3*sqrt3", "5/7+2/11*sqrt3", "-4+sqrt3"];
        for v in vals {
            let x = qs3(v);
            let sq = &x * &x;
            let root = sq.sqrt().unwrap().expect("square must have in-field root");
            assert_eq!(&root * &root, sq);
            assert!(root.signum() >= 0);
        }
    }

    #[test]
    fn float_conversion_is_correctly_rounded() {
        let hat = QS3::from_parts(-1, 1, 2); // (√3-1)/2
        assert_eq!(hat.to_f64(), 0.36602540378443865);
        assert_eq!(hat.to_decimal(2), "0.37");
        assert_eq!(QS3::zero().to_f64(), 0.0);
        let turtle = QS3::from_parts(3, -1, 2); // √3/(1+√3) rationalized
        assert_eq!(turtle.to_f64(), 0.6339745962155614);
        assert_eq!(QS3::from_ratio(1, 2).to_f64(), 0.5);
        assert_eq!(QS3::from_int(-3).to_f64(), -3.0);
        assert_eq!(QS3::sqrt3().to_f64(), 3.0f64.sqrt());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(QS3::sqrt3().to_decimal(4), "1.7321");
        assert_eq!(QS3::from_ratio(-1, 8).to_decimal(2), "-0.13");
        assert_eq!(QS3::from_int(12).to_decimal(0), "12");
        assert_eq!(QS3::from_ratio(1, 200).to_decimal(2), "0.01");
    }

    #[test]
    fn parse_examples() {
        assert_eq!(qs3("(sqrt3-1)/2"), QS3::from_parts(-1, 1, 2));
        assert_eq!(qs3("1/(1+sqrt3)"), QS3::from_parts(-1, 1, 2));
        assert_eq!(qs3("0"), QS3::zero());
        assert_eq!(qs3("37/100"), QS3::from_ratio(37, 100));
        assert_eq!(qs3(" - sqrt3 * sqrt3 "), QS3::from_int(-3));
        assert_eq!(qs3("2*(1-sqrt3)*(1+sqrt3)"), QS3::from_int(-4));
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_qs3("1 + @") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(parse_qs3("(1+2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_qs3(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_qs3("1 2"), Err(Error::Parse { .. })));
    }

    #[test]
    fn display_parse_roundtrip() {
        let samples = [
            "0",
            "5",
            "-5",
            "3/7",
            "-3/7",
            "sqrt3",
            "-sqrt3",
            "2/9*sqrt3",
            "-2/9*sqrt3",
            "1/2 + 1/2*sqrt3",
            "-1/2 - 13*sqrt3",
            "4 - sqrt3",
        ];
        for s in samples {
            let v = qs3(s);
            assert_eq!(v.to_string(), s, "canonical form mismatch");
            assert_eq!(qs3(&v.to_string()), v);
            assert_eq!(qs3(&v.to_compact_string()), v);
        }
    }

    // tiny deterministic PRNG for the field-axiom checks
    fn xorshift(state: &mut u64) -> u64 {
        *state ^= *state << 13;
        *state ^= *state >> 7;
        *state ^= *state << 17;
        *state
    }

    fn random_qs3(state: &mut u64) -> QS3 {
        let n1 = (xorshift(state) % 41) as i64 - 20;
        let d1 = (xorshift(state) % 9) as i64 + 1;
        let n2 = (xorshift(state) % 41) as i64 - 20;
        let d2 = (xorshift(state) % 9) as i64 + 1;
        QS3::new(
            Rational::new(BigInt::from(n1), BigInt::from(d1)),
            Rational::new(BigInt::from(n2), BigInt::from(d2)),
        )
    }

    #[test]
    fn field_axioms_hold_on_random_values() {
        let mut st = 0x9E3779B97F4A7C15u64;
        for _ in 0..200 {
            let a = random_qs3(&mut st);
            let b = random_qs3(&mut st);
            let c = random_qs3(&mut st);
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            assert_eq!(&a + &(-&a), QS3::zero());
            if !b.is_zero() {
                let inv = b.checked_inv().unwrap();
                assert_eq!(&b * &inv, QS3::one());
                assert_eq!((&a / &b) * &b, a.clone());
            }
        }
    }

    #[test]
    fn sign_agrees_with_float_away_from_zero() {
        let mut st = 0xDEADBEEFCAFEF00Du64;
        for _ in 0..300 {
            let x = random_qs3(&mut st);
            let f = x.to_f64();
            if f.abs() > 1e-9 {
                assert_eq!(x.signum(), if f > 0.0 { 1 } else { -1 });
            }
        }
    }
}
