//! Exact rational functions over the Laurent ring.
//!
//! A [`RatFunc`] is a numerator polynomial together with a multiset of
//! denominator factors. Keeping the denominator factored lets every
//! arithmetic operation cancel by exact division against individual factors
//! (the denominators arising in q-series work are products of binomials), so
//! no polynomial gcd is ever required. Equality is decided by
//! cross-multiplication, never by canonical forms.

use std::fmt;
use std::sync::OnceLock;

use crate::context::VarContext;
use crate::error::{Error, Result};
use crate::poly::{Coeff, MultiLaurent, Poly};
use crate::scalar::Scalar;

#[derive(Clone)]
pub struct RatFunc<C: Coeff> {
    num: Poly<C>,
    /// Denominator factors with multiplicities. Each factor is normalized:
    /// no monomial content, first coefficient 1, and never itself a monomial
    /// (monomials are units in the Laurent ring and are folded into `num`).
    den: Vec<(Poly<C>, u32)>,
}

impl<C: Coeff> RatFunc<C> {
    pub fn zero(ctx: &VarContext) -> Self {
        RatFunc {
            num: Poly::zero(ctx),
            den: Vec::new(),
        }
    }

    pub fn one(ctx: &VarContext) -> Self {
        RatFunc {
            num: Poly::one(ctx),
            den: Vec::new(),
        }
    }

    pub fn from_poly(p: Poly<C>) -> Self {
        RatFunc {
            num: p,
            den: Vec::new(),
        }
    }

    /// Build `num / den`, cancelling what divides out.
    pub fn from_ratio(num: Poly<C>, den: Poly<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut r = RatFunc {
            num,
            den: Vec::new(),
        };
        r.push_den_factor(den, 1);
        r.cancel();
        Ok(r)
    }

    pub fn ctx(&self) -> &VarContext {
        self.num.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &Poly<C> {
        &self.num
    }

    pub fn den_factors(&self) -> &[(Poly<C>, u32)] {
        &self.den
    }

    /// The denominator as a single polynomial.
    pub fn den(&self) -> Poly<C> {
        let mut d = Poly::one(self.num.ctx());
        for (f, m) in &self.den {
            for _ in 0..*m {
                d = d.mul(f);
            }
        }
        d
    }

    /// True iff the value is a Laurent polynomial (no denominator left).
    pub fn is_laurent(&self) -> bool {
        self.den.is_empty()
    }

    /// Extract the value as a Laurent polynomial, if the denominator is
    /// trivial after cancellation.
    pub fn as_poly(&self) -> Result<Poly<C>> {
        if self.den.is_empty() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotLaurent(format!(
                "denominator has {} factor(s)",
                self.den.len()
            )))
        }
    }

    /// Append `factor^power` to the denominator, normalizing the factor and
    /// folding unit (monomial) parts into the numerator.
    fn push_den_factor(&mut self, factor: Poly<C>, power: u32) {
        if power == 0 {
            return;
        }
        assert!(!factor.is_zero(), "zero denominator factor");
        let shift = factor.min_exps();
        let neg_shift: Vec<i64> = shift.iter().map(|x| -x).collect();
        let shifted = factor.mul_monomial(&neg_shift, &C::one());
        let c0 = shifted
            .terms()
            .next()
            .map(|(_, c)| c.clone())
            .expect("nonzero factor");
        let c0_inv = c0.inv().expect("leading coefficient is a unit");
        let normal = shifted.scale(&c0_inv);
        // 1/factor = c0^{-1} x^{-shift} / normal
        for _ in 0..power {
            self.num = self.num.mul_monomial(&neg_shift, &c0_inv);
        }
        if normal.as_constant().map_or(false, |c| !c.is_zero()) {
            // Unit factor: fully absorbed.
            return;
        }
        for (f, m) in &mut self.den {
            if *f == normal {
                *m += power;
                return;
            }
        }
        self.den.push((normal, power));
    }

    /// Cancel denominator factors that divide the numerator exactly.
    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let mut i = 0;
        while i < self.den.len() {
            let (f, m) = self.den[i].clone();
            let mut m_left = m;
            while m_left > 0 {
                match self.num.try_divide(&f) {
                    Ok(q) => {
                        self.num = q;
                        m_left -= 1;
                        if self.num.is_zero() {
                            self.den.clear();
                            return;
                        }
                    }
                    Err(_) => break,
                }
            }
            if m_left == 0 {
                self.den.remove(i);
            } else {
                self.den[i].1 = m_left;
                i += 1;
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // Fast path: identical denominators.
        if self.den == other.den {
            let mut r = RatFunc {
                num: self.num.add(&other.num),
                den: self.den.clone(),
            };
            r.cancel();
            return r;
        }
        // Common denominator = per-factor max multiplicity.
        let mut union: Vec<(Poly<C>, u32)> = self.den.clone();
        for (f, m) in &other.den {
            match union.iter_mut().find(|(g, _)| g == f) {
                Some((_, mu)) => *mu = (*mu).max(*m),
                None => union.push((f.clone(), *m)),
            }
        }
        let mult_for = |own: &[(Poly<C>, u32)], base: &Poly<C>| -> Poly<C> {
            let mut p = base.clone();
            for (f, mu) in &union {
                let have = own
                    .iter()
                    .find(|(g, _)| g == f)
                    .map(|(_, m)| *m)
                    .unwrap_or(0);
                for _ in have..*mu {
                    p = p.mul(f);
                }
            }
            p
        };
        let num = mult_for(&self.den, &self.num).add(&mult_for(&other.den, &other.num));
        let mut r = RatFunc { num, den: union };
        r.cancel();
        r
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero(self.num.ctx());
        }
        // Cross-cancel before multiplying numerators to keep sizes down.
        let mut a_num = self.num.clone();
        let mut b_den: Vec<(Poly<C>, u32)> = other.den.clone();
        for (f, m) in &mut b_den {
            while *m > 0 {
                match a_num.try_divide(f) {
                    Ok(q) => {
                        a_num = q;
                        *m -= 1;
                    }
                    Err(_) => break,
                }
            }
        }
        let mut b_num = other.num.clone();
        let mut a_den: Vec<(Poly<C>, u32)> = self.den.clone();
        for (f, m) in &mut a_den {
            while *m > 0 {
                match b_num.try_divide(f) {
                    Ok(q) => {
                        b_num = q;
                        *m -= 1;
                    }
                    Err(_) => break,
                }
            }
        }
        let mut r = RatFunc {
            num: a_num.mul(&b_num),
            den: Vec::new(),
        };
        for (f, m) in a_den.into_iter().chain(b_den) {
            if m > 0 {
                r.push_den_factor(f, m);
            }
        }
        r.cancel();
        r
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut num = Poly::one(self.num.ctx());
        for (f, m) in &self.den {
            for _ in 0..*m {
                num = num.mul(f);
            }
        }
        let mut r = RatFunc {
            num,
            den: Vec::new(),
        };
        r.push_den_factor(self.num.clone(), 1);
        r.cancel();
        Ok(r)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one(self.num.ctx());
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn scale_poly(&self, p: &Poly<C>) -> Self {
        let mut r = RatFunc {
            num: self.num.mul(p),
            den: self.den.clone(),
        };
        r.cancel();
        r
    }
}

impl<C: Coeff> PartialEq for RatFunc<C> {
    /// Equality by cross-multiplication: a/b = c/d iff a*d = c*b.
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul(&other.den()) == other.num.mul(&self.den())
    }
}

impl<C: Coeff> fmt::Display for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            write!(f, "{}", self.num.canonical_string())
        } else {
            write!(
                f,
                "({})/({})",
                self.num.canonical_string(),
                self.den().canonical_string()
            )
        }
    }
}

impl<C: Coeff> fmt::Debug for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

static VT_CTX: OnceLock<VarContext> = OnceLock::new();

/// The shared `[v, t]` coefficient context.
pub fn vt_ctx() -> &'static VarContext {
    VT_CTX.get_or_init(VarContext::vt)
}

/// Rational functions of (v, t) — the coefficient field for the operator,
/// cluster, and Macdonald layers. `v^4 = q`.
pub type Qt = RatFunc<Scalar>;

impl Qt {
    pub fn qt_zero() -> Qt {
        RatFunc::zero(vt_ctx())
    }

    pub fn qt_one() -> Qt {
        RatFunc::one(vt_ctx())
    }

    pub fn int(n: i64) -> Qt {
        RatFunc::from_poly(Poly::constant(vt_ctx(), Scalar::from_int(n)))
    }

    pub fn from_scalar(s: Scalar) -> Qt {
        RatFunc::from_poly(Poly::constant(vt_ctx(), s))
    }

    /// The monomial `s * v^a * t^b`.
    pub fn vt_monomial(s: Scalar, a: i64, b: i64) -> Qt {
        RatFunc::from_poly(Poly::monomial(vt_ctx(), vec![a, b], s))
    }

    /// `v^k`, i.e. `q^{k/4}`.
    pub fn v_pow(k: i64) -> Qt {
        Qt::vt_monomial(Scalar::one(), k, 0)
    }

    /// `q^k = v^{4k}`.
    pub fn q_pow(k: i64) -> Qt {
        Qt::v_pow(4 * k)
    }

    pub fn t_pow(k: i64) -> Qt {
        Qt::vt_monomial(Scalar::one(), 0, k)
    }

    pub fn is_one(&self) -> bool {
        self.den_factors().is_empty() && self.num().as_constant().map_or(false, |c| c.is_one())
    }
}

impl Coeff for Qt {
    fn zero() -> Self {
        Qt::qt_zero()
    }
    fn one() -> Self {
        Qt::qt_one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RatFunc::add(self, other)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFunc::mul(self, other)
    }
    fn inv(&self) -> Result<Self> {
        RatFunc::inv(self)
    }
}

impl RatFunc<Scalar> {
    /// Substitute v = 1 (hence q = 1 and all of its fractional powers).
    /// Removable singularities are cancelled by dividing matching powers of
    /// (v - 1) out of numerator and denominator before substituting; a
    /// residual vanishing denominator is a genuine pole and errors out.
    pub fn specialize_q1(&self, new_ctx: &VarContext) -> Result<RatFunc<Scalar>> {
        let ctx = self.num.ctx().clone();
        let vi = ctx
            .index("v")
            .ok_or_else(|| Error::UnknownVariable("v".into()))?;
        assert_eq!(vi, 0, "v must be the first context variable");
        let v_minus_1 = MultiLaurent::var_pow(&ctx, "v", 1)
            .unwrap()
            .sub(&MultiLaurent::one(&ctx));

        let mut pole_order: u32 = 0;
        let mut reduced_factors: Vec<(MultiLaurent, u32)> = Vec::new();
        for (f, m) in &self.den {
            let mut g = f.clone();
            loop {
                let at_one = g.subst_one("v", new_ctx)?;
                if !at_one.is_zero() {
                    break;
                }
                g = g.try_divide(&v_minus_1).expect("root at v=1 divides");
                pole_order += m;
            }
            reduced_factors.push((g, *m));
        }
        let mut num = self.num.clone();
        for _ in 0..pole_order {
            num = num
                .try_divide(&v_minus_1)
                .map_err(|_| Error::PoleAtClassicalLimit)?;
        }
        let num1 = num.subst_one("v", new_ctx)?;
        let mut r = RatFunc {
            num: num1,
            den: Vec::new(),
        };
        for (g, m) in reduced_factors {
            let g1 = g.subst_one("v", new_ctx)?;
            if g1.is_zero() {
                return Err(Error::PoleAtClassicalLimit);
            }
            r.push_den_factor(g1, m);
        }
        r.cancel();
        Ok(r)
    }
}
