//! Exact field arithmetic over the rationals and odd prime fields.
//!
//! Every quantity in this crate is a [`Scalar`]: an arbitrary-precision
//! rational or a residue in `F_p` for an odd prime `p`. Fields of
//! characteristic two are rejected when the [`Field`] descriptor is built,
//! so no later operation needs to worry about dividing by two.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Descriptor of the coefficient field: `Q` or `F_p` with `p` an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn rationals() -> Self {
        Field::Rationals
    }

    /// An odd prime field. Rejects `p = 2` (characteristic two) and
    /// composite or tiny moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::InvalidField(
                "characteristic two is not supported".into(),
            ));
        }
        if p < 3 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not an odd prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    /// Parses the textual tags used in files and on the command line:
    /// `"Q"` or `"Fp:<prime>"`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "Q" {
            return Ok(Field::Rationals);
        }
        if let Some(rest) = t.strip_prefix("Fp:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad prime in {text:?}")))?;
            return Field::prime(p);
        }
        Err(Error::InvalidField(format!(
            "expected \"Q\" or \"Fp:<prime>\", got {text:?}"
        )))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Rat(BigRational),
    Mod(u64),
}

/// An exact element of `Q` or `F_p`.
///
/// Rationals are kept in lowest terms with positive denominator; prime-field
/// residues are kept in `[0, p-1]`. Scalars are immutable values and can be
/// shared freely between threads.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    field: Field,
    repr: Repr,
}

/// The four basic field operations, for the checked [`arith`] entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn zero(field: Field) -> Self {
        Scalar::from_int(0, field)
    }

    pub fn one(field: Field) -> Self {
        Scalar::from_int(1, field)
    }

    pub fn from_int(n: i64, field: Field) -> Self {
        match field {
            Field::Rationals => Scalar {
                field,
                repr: Repr::Rat(BigRational::from_integer(BigInt::from(n))),
            },
            Field::Prime(p) => Scalar {
                field,
                repr: Repr::Mod(reduce_i64(n, p)),
            },
        }
    }

    pub fn from_fraction(num: i64, den: i64, field: Field) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Scalar::from_int(num, field).checked_div(&Scalar::from_int(den, field))
    }

    /// Parses `"a"` or `"a/b"` with optional sign; over `F_p` the value is
    /// reduced mod `p` and the denominator inverted mod `p`.
    pub fn parse(text: &str, field: Field) -> Result<Self> {
        let t = text.trim();
        let parse_int = |s: &str| -> Result<BigInt> {
            s.parse::<BigInt>().map_err(|e| Error::ParseError {
                text: text.to_string(),
                reason: e.to_string(),
            })
        };
        let (num_s, den_s) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t, None),
        };
        let num = parse_int(num_s)?;
        let den = match den_s {
            Some(d) => parse_int(d)?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match field {
            Field::Rationals => Ok(Scalar {
                field,
                repr: Repr::Rat(BigRational::new(num, den)),
            }),
            Field::Prime(p) => {
                let n = Scalar {
                    field,
                    repr: Repr::Mod(reduce_bigint(&num, p)),
                };
                let d = Scalar {
                    field,
                    repr: Repr::Mod(reduce_bigint(&den, p)),
                };
                n.checked_div(&d)
            }
        }
    }

    /// Text form used in all JSON files: `"a/b"` or `"a"`.
    pub fn render(&self) -> String {
        match &self.repr {
            Repr::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Mod(m) => m.to_string(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_zero(),
            Repr::Mod(m) => *m == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_one(),
            Repr::Mod(m) => *m == 1,
        }
    }

    /// Sign over `Q`: `-1`, `0`, or `1`. `None` over a prime field, which
    /// carries no order.
    pub fn sign(&self) -> Option<i8> {
        match &self.repr {
            Repr::Rat(r) => Some(if r.is_zero() {
                0
            } else if r.is_positive() {
                1
            } else {
                -1
            }),
            Repr::Mod(_) => None,
        }
    }

    fn assert_same_field(&self, other: &Scalar) {
        assert_eq!(
            self.field, other.field,
            "scalar field mismatch: {} vs {}",
            self.field, other.field
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.assert_same_field(other);
        match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar {
                field: self.field,
                repr: Repr::Rat(a + b),
            },
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = self.field.characteristic();
                Scalar {
                    field: self.field,
                    repr: Repr::Mod(add_mod(*a, *b, p)),
                }
            }
            _ => unreachable!("repr/field invariant"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match &self.repr {
            Repr::Rat(a) => Scalar {
                field: self.field,
                repr: Repr::Rat(-a),
            },
            Repr::Mod(a) => {
                let p = self.field.characteristic();
                Scalar {
                    field: self.field,
                    repr: Repr::Mod(if *a == 0 { 0 } else { p - *a }),
                }
            }
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.assert_same_field(other);
        match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar {
                field: self.field,
                repr: Repr::Rat(a * b),
            },
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = self.field.characteristic();
                Scalar {
                    field: self.field,
                    repr: Repr::Mod(mul_mod(*a, *b, p)),
                }
            }
            _ => unreachable!("repr/field invariant"),
        }
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.repr {
            Repr::Rat(a) => Scalar {
                field: self.field,
                repr: Repr::Rat(a.recip()),
            },
            Repr::Mod(a) => {
                let p = self.field.characteristic();
                Scalar {
                    field: self.field,
                    repr: Repr::Mod(inv_mod(*a, p)),
                }
            }
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        Ok(self.mul(&other.inverse()?))
    }
}

/// Checked entry point for the four field operations; verifies the fields
/// match and rejects division by zero.
pub fn arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(
            a.field().to_string(),
            b.field().to_string(),
        ));
    }
    match op {
        ArithOp::Add => Ok(a.add(b)),
        ArithOp::Sub => Ok(a.sub(b)),
        ArithOp::Mul => Ok(a.mul(b)),
        ArithOp::Div => a.checked_div(b),
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::add(self, rhs)
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::sub(self, rhs)
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::mul(self, rhs)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

fn reduce_i64(n: i64, p: u64) -> u64 {
    let m = n % p as i64;
    if m < 0 {
        (m + p as i64) as u64
    } else {
        m as u64
    }
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let p_big = BigInt::from(p);
    let mut m = n % &p_big;
    if m.is_negative() {
        m += &p_big;
    }
    let (_, digits) = m.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid on signed 128-bit; p is prime and a != 0 mod p
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "modulus must be prime");
    let t = t0.rem_euclid(p as i128);
    t as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Scalar {
        Scalar::parse(s, Field::Rationals).unwrap()
    }

    #[test]
    fn rational_arithmetic() {
        let sum = arith(&q("1/2"), &q("1/3"), ArithOp::Add).unwrap();
        assert_eq!(sum, q("5/6"));
    }

    #[test]
    fn prime_field_inverse() {
        let f7 = Field::prime(7).unwrap();
        let two = Scalar::from_int(2, f7);
        let inv = two.inverse().unwrap();
        assert_eq!(inv, Scalar::from_int(4, f7));
        // identity check: 2 * 4 = 8 = 1 mod 7
        assert!(two.mul(&inv).is_one());
    }

    #[test]
    fn eta_reduces_mod_five() {
        // 1/32 over F_5: 32 = 2 mod 5, and 2^-1 = 3 because 32 * 3 = 96 = 1 mod 5
        let f5 = Field::prime(5).unwrap();
        let eta = Scalar::parse("1/32", f5).unwrap();
        assert_eq!(eta, Scalar::from_int(3, f5));
        let thirty_two = Scalar::from_int(32, f5);
        assert!(thirty_two.mul(&Scalar::from_int(3, f5)).is_one());
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(q("-3/6"), q("-1/2"));
        assert_eq!(q("1/4").render(), "1/4");
        assert_eq!(q("4/2").render(), "2");
        let f7 = Field::prime(7).unwrap();
        assert_eq!(Scalar::parse("1/2", f7).unwrap(), Scalar::from_int(4, f7));
    }

    #[test]
    fn division_by_zero_is_rejected() {
        assert_eq!(
            Scalar::parse("1/0", Field::Rationals),
            Err(Error::DivisionByZero)
        );
        let f7 = Field::prime(7).unwrap();
        // denominator divisible by p
        assert_eq!(Scalar::parse("3/14", f7), Err(Error::DivisionByZero));
        assert_eq!(q("1").checked_div(&q("0")), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let f7 = Field::prime(7).unwrap();
        let res = arith(&q("1"), &Scalar::from_int(1, f7), ArithOp::Add);
        assert!(matches!(res, Err(Error::FieldMismatch(_, _))));
    }

    #[test]
    fn characteristic_two_rejected_at_construction() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(101).is_ok());
    }

    #[test]
    fn field_tag_round_trip() {
        assert_eq!(Field::parse("Q").unwrap(), Field::Rationals);
        assert_eq!(Field::parse("Fp:7").unwrap(), Field::prime(7).unwrap());
        assert!(Field::parse("Fp:8").is_err());
        assert!(Field::parse("R").is_err());
    }

    fn rational_strategy() -> impl Strategy<Value = Scalar> {
        (-1000i64..1000, 1i64..200)
            .prop_map(|(n, d)| Scalar::from_fraction(n, d, Field::Rationals).unwrap())
    }

    fn f7_strategy() -> impl Strategy<Value = Scalar> {
        (0i64..7).prop_map(|n| Scalar::from_int(n, Field::prime(7).unwrap()))
    }

    proptest! {
        #[test]
        fn q_field_axioms((a, b, c) in (rational_strategy(), rational_strategy(), rational_strategy())) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a + &a.neg()).is_zero());
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inverse().unwrap()).is_one());
            }
        }

        #[test]
        fn fp_field_axioms((a, b, c) in (f7_strategy(), f7_strategy(), f7_strategy())) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inverse().unwrap()).is_one());
            }
        }

        #[test]
        fn parse_render_round_trip(a in rational_strategy()) {
            prop_assert_eq!(Scalar::parse(&a.render(), Field::Rationals).unwrap(), a);
        }

        #[test]
        fn parse_render_round_trip_fp(a in f7_strategy()) {
            prop_assert_eq!(Scalar::parse(&a.render(), Field::prime(7).unwrap()).unwrap(), a);
        }
    }
}
