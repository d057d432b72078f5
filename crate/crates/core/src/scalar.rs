//! Gaussian rational scalars.
//!
//! Every coefficient in the crate is an element of Q(i): a pair of reduced
//! fractions (re, im) with i^2 = -1. This is enough to host the fourth root
//! of unity appearing in the Weyl-torus embeddings while keeping all
//! arithmetic exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact Gaussian rational `re + im * i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    /// `a + b*i` with both parts rational.
    pub fn gaussian(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        assert!(re_den != 0 && im_den != 0, "zero denominator");
        Scalar {
            re: BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            im: BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // 1/(a+bi) = (a-bi)/(a^2+b^2)
        let norm = &self.re * &self.re + &self.im * &self.im;
        Ok(Scalar {
            re: &self.re / &norm,
            im: -&self.im / &norm,
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Canonical text form: `a/b`, `c/d*i`, or `a/b+c/d*i` (minus folded in).
    pub fn canonical_string(&self) -> String {
        fn rat(r: &BigRational) -> String {
            if r.denom().is_one() {
                format!("{}", r.numer())
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        if self.is_zero() {
            return "0".to_string();
        }
        if self.im.is_zero() {
            return rat(&self.re);
        }
        let im_part = format!("{}*i", rat(&self.im.abs()));
        let im_signed = if self.im.is_negative() {
            format!("-{im_part}")
        } else {
            im_part
        };
        if self.re.is_zero() {
            im_signed
        } else if self.im.is_negative() {
            format!("{}{}", rat(&self.re), im_signed)
        } else {
            format!("{}+{}", rat(&self.re), im_signed)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        let i = Scalar::i();
        assert_eq!(&i * &i, Scalar::from_int(-1));
    }

    #[test]
    fn inverse_roundtrip() {
        let z = Scalar::gaussian(3, 4, -2, 5);
        let w = z.inv().unwrap();
        assert!((&z * &w).is_one());
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(Scalar::zero().canonical_string(), "0");
        assert_eq!(Scalar::from_int(7).canonical_string(), "7");
        assert_eq!(Scalar::from_ratio(-2, 4).canonical_string(), "-1/2");
        assert_eq!(Scalar::i().canonical_string(), "1*i");
        assert_eq!(
            Scalar::gaussian(1, 2, -3, 4).canonical_string(),
            "1/2-3/4*i"
        );
    }

    // Independent oracle: naive i128 fraction arithmetic on the real and
    // imaginary parts, reduced with Euclid's gcd.
    #[test]
    fn matches_naive_fraction_oracle() {
        fn gcd(a: i128, b: i128) -> i128 {
            let (mut a, mut b) = (a.abs(), b.abs());
            while b != 0 {
                let t = a % b;
                a = b;
                b = t;
            }
            a.max(1)
        }
        #[derive(Clone, Copy, PartialEq, Debug)]
        struct Fr(i128, i128);
        impl Fr {
            fn new(n: i128, d: i128) -> Fr {
                let s = if d < 0 { -1 } else { 1 };
                let g = gcd(n, d);
                Fr(s * n / g, s * d / g)
            }
            fn add(self, o: Fr) -> Fr {
                Fr::new(self.0 * o.1 + o.0 * self.1, self.1 * o.1)
            }
            fn mul(self, o: Fr) -> Fr {
                Fr::new(self.0 * o.0, self.1 * o.1)
            }
            fn sub(self, o: Fr) -> Fr {
                self.add(Fr::new(-o.0, o.1))
            }
        }

        let cases: Vec<(i64, i64, i64, i64)> = (0..60)
            .map(|k| {
                let k = k as i64;
                (3 * k - 17, 2 + (k % 7), 5 - k, 1 + (k % 5))
            })
            .collect();
        for &(a, b, c, d) in &cases {
            for &(e, f, g, h) in &cases {
                let x = Scalar::gaussian(a, b, c, d);
                let y = Scalar::gaussian(e, f, g, h);
                let (xr, xi) = (Fr::new(a as i128, b as i128), Fr::new(c as i128, d as i128));
                let (yr, yi) = (Fr::new(e as i128, f as i128), Fr::new(g as i128, h as i128));

                let sum = &x + &y;
                assert_eq!(format!("{}", sum.re()), fmt_fr(xr.add(yr)));
                assert_eq!(format!("{}", sum.im()), fmt_fr(xi.add(yi)));

                let prod = &x * &y;
                assert_eq!(format!("{}", prod.re()), fmt_fr(xr.mul(yr).sub(xi.mul(yi))));
                assert_eq!(format!("{}", prod.im()), fmt_fr(xr.mul(yi).add(xi.mul(yr))));
            }
        }

        fn fmt_fr(f: Fr) -> String {
            if f.1 == 1 {
                format!("{}", f.0)
            } else {
                format!("{}/{}", f.0, f.1)
            }
        }
    }
}
