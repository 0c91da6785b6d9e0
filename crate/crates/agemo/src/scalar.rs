//! Exact field elements: arbitrary-precision rationals and prime fields.
//!
//! Every value in the system is a [`Scalar`]; there is no floating point
//! anywhere. Arithmetic between scalars of different fields is a logic
//! error and panics; public entry points validate field uniformity first
//! (see [`crate::matrix::Matrix::new`]).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

/// The field a scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rationals.
    Rational,
    /// The prime field with the given modulus.
    Prime(u64),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = String;

    /// `Q` or `F<p>` with p ≥ 2, matching the `Display` form.
    fn from_str(s: &str) -> Result<Field, String> {
        if s == "Q" {
            return Ok(Field::Rational);
        }
        if let Some(p) = s.strip_prefix('F').and_then(|t| t.parse::<u64>().ok()) {
            if p >= 2 {
                return Ok(Field::Prime(p));
            }
        }
        Err(format!("unknown field {s:?} (expected Q or F<p>)"))
    }
}

impl Field {
    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Prime { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::one()),
            Field::Prime(p) => Scalar::Prime { value: 1 % p, modulus: p },
        }
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Prime { value: r, modulus: p }
            }
        }
    }

    /// `num/den` in this field. Panics if `den` is zero (or not invertible).
    pub fn from_ratio(self, num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        let n = self.from_i64(num);
        let d = self.from_i64(den);
        n.div(&d)
    }
}

/// An exact field element. Rationals are kept in canonical form by
/// `BigRational`; prime-field values are reduced residues.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, modulus } => *value == 1 % *modulus,
        }
    }

    fn check_field(&self, other: &Scalar) {
        assert_eq!(
            self.field(),
            other.field(),
            "scalar arithmetic across different fields"
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check_field(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime { value: add_mod(*a, *b, *p), modulus: *p }
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check_field(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime { value: mul_mod(*a, *b, *p), modulus: *p }
            }
            _ => unreachable!(),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    pub fn pow(&self, mut e: i64) -> Scalar {
        let mut base = if e < 0 {
            e = -e;
            self.inv()
        } else {
            self.clone()
        };
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Parses a scalar literal (`3`, `-7/2`) into the given field.
    pub fn parse(field: Field, s: &str) -> Option<Scalar> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = num.parse().ok()?;
        let d: BigInt = den.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        match field {
            Field::Rational => Some(Scalar::Rational(BigRational::new(n, d))),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let nr = ((n % &pb) + &pb) % &pb;
                let dr = ((d % &pb) + &pb) % &pb;
                let nv: u64 = nr.try_into().ok()?;
                let dv: u64 = dr.try_into().ok()?;
                if dv == 0 {
                    return None;
                }
                Some(Scalar::Prime { value: mul_mod(nv, inv_mod(dv, p), p), modulus: p })
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Extended Euclid; p is prime and a != 0 mod p.
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "non-invertible residue");
    t0.rem_euclid(p as i128) as u64
}

/// Convenience: `q^t * base` as a rational, used for parameter sweeps.
pub fn rational(n: i64, d: i64) -> Scalar {
    Field::Rational.from_ratio(n, d)
}

impl Scalar {
    /// Returns the value as a signed magnitude useful for pivot choice; only
    /// meaningful over the rationals, arbitrary (but deterministic) over Fp.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Prime { .. } => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let a = Field::Rational.from_ratio(2, 4);
        let b = Field::Rational.from_ratio(1, 2);
        assert_eq!(a, b);
        let c = Field::Rational.from_ratio(1, -2);
        assert_eq!(c, b.neg());
    }

    #[test]
    fn prime_field_arith() {
        let f = Field::Prime(7);
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(a.mul(&b), f.from_i64(1)); // 15 = 1 mod 7
        assert_eq!(a.inv().mul(&a), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
    }

    #[test]
    fn pow_negative_exponent() {
        let q = rational(2, 1);
        assert_eq!(q.pow(-3), Field::Rational.from_ratio(1, 8));
        assert_eq!(q.pow(0), Field::Rational.one());
    }

    #[test]
    fn parse_literals() {
        assert_eq!(Scalar::parse(Field::Rational, "-7/2"), Some(rational(-7, 2)));
        assert_eq!(Scalar::parse(Field::Prime(5), "7"), Some(Field::Prime(5).from_i64(2)));
        assert_eq!(Scalar::parse(Field::Rational, "1/0"), None);
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn mixed_field_panics() {
        let _ = rational(1, 1).add(&Field::Prime(5).one());
    }
}
