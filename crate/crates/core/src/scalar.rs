//! Exact scalars: Gaussian rationals, i.e. the field Q(i).
//!
//! A `GaussRat` is a pair of arbitrary-precision rationals (real and
//! imaginary part). All arithmetic is exact; there is no floating point
//! anywhere in this crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An element of Q(i), kept in reduced form by `BigRational`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussRat::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// p/q as a real rational. Panics if q = 0.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        GaussRat::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::zero(),
        )
    }

    /// a + b*i with integer parts.
    pub fn from_parts(a: i64, b: i64) -> Self {
        GaussRat::new(
            BigRational::from_integer(BigInt::from(a)),
            BigRational::from_integer(BigInt::from(b)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    /// |z|^2 = re^2 + im^2, a nonnegative rational.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let n = self.norm();
        GaussRat::new(&self.re / &n, -&self.im / &n)
    }

    /// Integer power, negative exponents via the inverse.
    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().pow(-e);
        }
        let mut acc = GaussRat::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact l-th root in Q(i), if one exists and is found within the
    /// search bounds. `None` means "no root exhibited", never "no root
    /// exists" for pathologically large inputs; callers treat `None` as
    /// "keep the raw representative".
    pub fn nth_root(&self, l: u32) -> Option<GaussRat> {
        assert!(l >= 1);
        if l == 1 || self.is_zero() || self.is_one() {
            return Some(self.clone());
        }
        // Minimal e > 0 with e^l * z in Z[i]: build it from the prime
        // factorization of the lcm of the two denominators.
        let den = self.re.denom().lcm(self.im.denom());
        let e = nth_root_denominator(&den, l)?;
        let el = BigInt::from(e.clone()).pow(l);
        let zp = GaussRat::new(&self.re * BigRational::from_integer(el.clone()), &self.im * el);
        debug_assert!(zp.re.denom().is_one() && zp.im.denom().is_one());
        let (p, q) = (zp.re.to_integer(), zp.im.to_integer());
        // |w|^(2l) = p^2 + q^2 must be an exact l-th power.
        let n = &p * &p + &q * &q;
        let r = n.nth_root(l);
        if r.clone().pow(l) != n {
            return None;
        }
        // Enumerate Gaussian integers u + v*i on the circle u^2 + v^2 = r.
        let cap = BigInt::from(2_000_000u64);
        let s = r.sqrt();
        if s > cap {
            return None;
        }
        let bound: u64 = s.to_string().parse().ok()?;
        let er = BigRational::from_integer(BigInt::from(e));
        for ua in 0..=bound {
            let u = BigInt::from(ua);
            let v2 = &r - &u * &u;
            if v2.is_negative() {
                break;
            }
            let v = v2.sqrt();
            if &v * &v != v2 {
                continue;
            }
            for (su, sv) in [(1i8, 1i8), (1, -1), (-1, 1), (-1, -1)] {
                let cu = if su > 0 { u.clone() } else { -u.clone() };
                let cv = if sv > 0 { v.clone() } else { -v.clone() };
                let cand = GaussRat::new(
                    BigRational::from_integer(cu),
                    BigRational::from_integer(cv),
                );
                if cand.pow(l as i64) == zp {
                    return Some(GaussRat::new(&cand.re / &er, &cand.im / &er));
                }
            }
        }
        None
    }
}

/// Smallest e with den | e^l, via trial-division factorization of den.
fn nth_root_denominator(den: &BigInt, l: u32) -> Option<BigInt> {
    let mut rest = den.clone();
    let mut e = BigInt::one();
    let mut p = BigInt::from(2);
    let cap = BigInt::from(2_000_000u64);
    while &p * &p <= rest {
        if p > cap {
            return None;
        }
        if rest.is_multiple_of(&p) {
            let mut m = 0u32;
            while rest.is_multiple_of(&p) {
                rest /= &p;
                m += 1;
            }
            e *= p.pow((m + l - 1) / l);
        }
        p += 1;
    }
    if rest > BigInt::one() {
        e *= rest; // rest is prime; ceil(1/l) = 1
    }
    Some(e)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: GaussRat) -> GaussRat {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: &'a GaussRat) -> GaussRat {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<GaussRat> for &'a GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: GaussRat) -> GaussRat {
                self.$method(&rhs)
            }
        }
    };
}

impl<'a, 'b> Add<&'b GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &'b GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}
forward_binop!(Add, add);

impl<'a, 'b> Sub<&'b GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &'b GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}
forward_binop!(Sub, sub);

impl<'a, 'b> Mul<&'b GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &'b GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}
forward_binop!(Mul, mul);

impl<'a, 'b> Div<&'b GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &'b GaussRat) -> GaussRat {
        self * rhs.inv()
    }
}
forward_binop!(Div, div);

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -&self
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl GaussRat {
    /// "3", "-3/4", "i", "-2*i", or the parenthesized mixed form "(1+2*i)".
    /// This is the canonical coefficient syntax shared with the parser.
    pub fn to_text(&self) -> String {
        if self.im.is_zero() {
            return fmt_rational(&self.re);
        }
        let im_part = |r: &BigRational| -> String {
            if r.is_one() {
                "i".to_string()
            } else if (-r).is_one() {
                "-i".to_string()
            } else {
                format!("{}*i", fmt_rational(r))
            }
        };
        if self.re.is_zero() {
            return im_part(&self.im);
        }
        let im_str = im_part(&self.im);
        if self.im.is_negative() {
            format!("({}{})", fmt_rational(&self.re), im_str)
        } else {
            format!("({}+{})", fmt_rational(&self.re), im_str)
        }
    }

    /// String pair ("p/q", "r/s") used by the JSON reports.
    pub fn to_string_pair(&self) -> (String, String) {
        (fmt_rational(&self.re), fmt_rational(&self.im))
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}
