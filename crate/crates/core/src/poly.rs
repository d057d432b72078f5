//! Sparse multivariate Laurent polynomials over an exact coefficient ring.
//!
//! Terms are keyed by integer exponent vectors (entries may be negative) in
//! a `BTreeMap`, so iteration order is lexicographic and every canonical
//! form is reproducible byte-for-byte. The coefficient ring is generic; the
//! crate instantiates it with [`Scalar`] for the base layer and with
//! rational functions of (v, t) for the x-polynomial layer.

use std::fmt;

use std::collections::BTreeMap;

use crate::context::VarContext;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Exact coefficient ring: a commutative ring with decidable zero and
/// (partial) inversion, enough for Laurent arithmetic and exact division.
pub trait Coeff: Clone + PartialEq + fmt::Display + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Result<Self>;
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Result<Self> {
        Scalar::inv(self)
    }
}

/// A sparse Laurent polynomial: finitely many exponent vectors mapping to
/// nonzero coefficients. The zero polynomial has no terms.
#[derive(Clone, PartialEq)]
pub struct Poly<C: Coeff> {
    ctx: VarContext,
    terms: BTreeMap<Vec<i64>, C>,
}

impl<C: Coeff> Poly<C> {
    pub fn zero(ctx: &VarContext) -> Self {
        Poly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &VarContext) -> Self {
        Poly::constant(ctx, C::one())
    }

    pub fn constant(ctx: &VarContext, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; ctx.len()], c);
        }
        Poly {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// The monomial `c * prod x_i^{e_i}`.
    pub fn monomial(ctx: &VarContext, exps: Vec<i64>, c: C) -> Self {
        assert_eq!(exps.len(), ctx.len(), "exponent arity mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Poly {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// `var^k` for a named variable.
    pub fn var_pow(ctx: &VarContext, name: &str, k: i64) -> Result<Self> {
        let i = ctx
            .index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; ctx.len()];
        exps[i] = k;
        Ok(Poly::monomial(ctx, exps, C::one()))
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    /// True iff the polynomial is a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_constant(&self) -> Option<C> {
        if self.is_zero() {
            return Some(C::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|&k| k == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    fn insert_term(terms: &mut BTreeMap<Vec<i64>, C>, exps: Vec<i64>, c: C) {
        if c.is_zero() {
            return;
        }
        match terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(self.ctx.same(&other.ctx));
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert_term(&mut terms, e.clone(), c.clone());
        }
        Poly {
            ctx: self.ctx.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Self {
        Poly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.ctx.same(&other.ctx));
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                Self::insert_term(&mut terms, e, ca.mul(cb));
            }
        }
        Poly {
            ctx: self.ctx.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero(&self.ctx);
        }
        Poly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.clone(), k.mul(c)))
                .collect(),
        }
    }

    /// Multiply by the monomial with exponent vector `exps`.
    pub fn mul_monomial(&self, exps: &[i64], c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero(&self.ctx);
        }
        Poly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, k)| {
                    (
                        e.iter().zip(exps).map(|(a, b)| a + b).collect(),
                        k.mul(c),
                    )
                })
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Poly::one(&self.ctx);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Apply an exponent-vector map (context may change arity). The map must
    /// be injective on the support for coefficients to pass through intact;
    /// colliding images are accumulated.
    pub fn map_exps<F: Fn(&[i64]) -> Vec<i64>>(&self, new_ctx: &VarContext, f: F) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let ne = f(e);
            assert_eq!(ne.len(), new_ctx.len());
            Self::insert_term(&mut terms, ne, c.clone());
        }
        Poly {
            ctx: new_ctx.clone(),
            terms,
        }
    }

    /// Componentwise minimum of the support exponents (zero vector for 0).
    pub fn min_exps(&self) -> Vec<i64> {
        let n = self.ctx.len();
        let mut m = vec![i64::MAX; n];
        for e in self.terms.keys() {
            for (mi, &ei) in m.iter_mut().zip(e) {
                *mi = (*mi).min(ei);
            }
        }
        if self.terms.is_empty() {
            vec![0; n]
        } else {
            m
        }
    }

    /// Leading term under the lexicographic order (largest exponent vector).
    fn leading(&self) -> Option<(&Vec<i64>, &C)> {
        self.terms.iter().next_back()
    }

    /// Exact division in the Laurent ring. Returns the quotient iff
    /// `divisor` divides `self` exactly; otherwise reports `NotLaurent`.
    pub fn try_divide(&self, divisor: &Self) -> Result<Self> {
        debug_assert!(self.ctx.same(&divisor.ctx));
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Poly::zero(&self.ctx));
        }
        // Normalize both operands to honest polynomials by stripping the
        // monomial content; exactness is preserved and division terminates.
        let shift_p = self.min_exps();
        let shift_d = divisor.min_exps();
        let neg = |v: &[i64]| v.iter().map(|x| -x).collect::<Vec<_>>();
        let p = self.mul_monomial(&neg(&shift_p), &C::one());
        let d = divisor.mul_monomial(&neg(&shift_d), &C::one());

        let (dlead_e, dlead_c) = d.leading().expect("nonzero divisor");
        let dlead_e = dlead_e.clone();
        let dlead_inv = dlead_c.inv()?;

        let mut rem = p;
        let mut quot: BTreeMap<Vec<i64>, C> = BTreeMap::new();
        while let Some((re, rc)) = rem.leading() {
            let e: Vec<i64> = re.iter().zip(&dlead_e).map(|(a, b)| a - b).collect();
            if e.iter().any(|&k| k < 0) {
                // Leading term not divisible by the divisor's leading term:
                // in the polynomial ring this certifies non-divisibility.
                return Err(Error::NotLaurent(format!(
                    "remainder of degree {:?} not divisible",
                    re
                )));
            }
            let c = rc.mul(&dlead_inv);
            rem = rem.sub(&d.mul_monomial(&e, &c));
            Self::insert_term(&mut quot, e, c);
        }
        let q = Poly {
            ctx: self.ctx.clone(),
            terms: quot,
        };
        // Undo the monomial normalization: result * x^(shift_p - shift_d).
        let back: Vec<i64> = shift_p.iter().zip(&shift_d).map(|(a, b)| a - b).collect();
        Ok(q.mul_monomial(&back, &C::one()))
    }

    /// Substitute `var := 1` and remove it from the context.
    pub fn subst_one(&self, var: &str, new_ctx: &VarContext) -> Result<Self> {
        let i = self
            .ctx
            .index(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        assert_eq!(new_ctx.len(), self.ctx.len() - 1);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.remove(i);
            Self::insert_term(&mut terms, ne, c.clone());
        }
        Ok(Poly {
            ctx: new_ctx.clone(),
            terms,
        })
    }

    /// Invert the named variable: `var -> var^{-1}`.
    pub fn invert_var(&self, var: &str) -> Result<Self> {
        let i = self
            .ctx
            .index(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        Ok(self.map_exps(&self.ctx.clone(), |e| {
            let mut ne = e.to_vec();
            ne[i] = -ne[i];
            ne
        }))
    }

    /// True iff invariant under `var -> var^{-1}`.
    pub fn symmetric_in(&self, var: &str) -> bool {
        match self.invert_var(var) {
            Ok(p) => p == *self,
            Err(_) => false,
        }
    }

    pub fn canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mut monos = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                if k == 1 {
                    monos.push(self.ctx.name(i).to_string());
                } else if k != 0 {
                    monos.push(format!("{}^{}", self.ctx.name(i), k));
                }
            }
            let cs = format!("{c}");
            if monos.is_empty() {
                parts.push(cs);
            } else if cs == "1" {
                parts.push(monos.join("*"));
            } else if cs == "-1" {
                parts.push(format!("-{}", monos.join("*")));
            } else if cs.contains('+') || (cs.contains('-') && !cs.starts_with('-')) {
                parts.push(format!("({})*{}", cs, monos.join("*")));
            } else {
                parts.push(format!("{}*{}", cs, monos.join("*")));
            }
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

/// The base-layer Laurent polynomial with Gaussian-rational coefficients.
pub type MultiLaurent = Poly<Scalar>;

impl MultiLaurent {
    /// The substitution `var -> q^a * var` on an x-variable, where q = v^4:
    /// the coefficient of `var^n` picks up `v^{4an}`. The context must carry
    /// `v` in slot 0.
    pub fn shift_x(&self, var: &str, a: i64) -> Result<Self> {
        let i = self
            .ctx
            .index(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        if i < 2 {
            return Err(Error::UnknownVariable(format!(
                "`{var}` is not an x-variable"
            )));
        }
        Ok(self.map_exps(&self.ctx.clone(), |e| {
            let mut ne = e.to_vec();
            ne[0] += 4 * a * ne[i];
            ne
        }))
    }
}
