//! q-series primitives: Pochhammer symbols, q-binomial coefficients, the
//! [n,m] bracket, and Whittaker polynomials.

use std::collections::HashMap;
use std::sync::Mutex;

use once_cell::sync::Lazy;

use crate::context::VarContext;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::{Qt, RatFunc};
use crate::scalar::Scalar;
use crate::{XPoly};

/// A power of q on the quarter-integer grid, stored as the integer exponent
/// of v (so `QPower(k)` is q^{k/4} = v^k). Composition is additive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QPower(pub i64);

impl QPower {
    /// q^n
    pub fn q(n: i64) -> QPower {
        QPower(4 * n)
    }
    /// q^{1/2}
    pub fn q_half() -> QPower {
        QPower(2)
    }
    pub fn compose(self, other: QPower) -> QPower {
        QPower(self.0 + other.0)
    }
    pub fn as_qt(self) -> Qt {
        Qt::v_pow(self.0)
    }
}

/// The q-Pochhammer symbol `(X; b)_n = prod_{k=0}^{n-1} (1 - b^k X)` where
/// the base `b` is a q-power. Works over any context whose first variable
/// is v. `n = 0` is the empty product.
pub fn pochhammer(x: &RatFunc<Scalar>, step: QPower, n: u32) -> RatFunc<Scalar> {
    let ctx = x.ctx().clone();
    let one = RatFunc::one(&ctx);
    let mut acc = one.clone();
    for k in 0..n as i64 {
        let vk = RatFunc::from_poly(Poly::monomial(
            &ctx,
            {
                let mut e = vec![0; ctx.len()];
                e[0] = step.0 * k;
                e
            },
            Scalar::one(),
        ));
        acc = acc.mul(&one.sub(&vk.mul(x)));
    }
    acc
}

/// Pochhammer symbol extended to negative length via
/// `(X; b)_{-n} = 1 / prod_{j=1}^{n} (1 - b^{-j} X)`.
pub fn pochhammer_ext(x: &Qt, step: QPower, n: i64) -> Result<Qt> {
    if n >= 0 {
        return Ok(pochhammer(x, step, n as u32));
    }
    let one = Qt::qt_one();
    let mut acc = one.clone();
    for j in 1..=(-n) {
        let factor = one.sub(&Qt::v_pow(-step.0 * j).mul(x));
        if factor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        acc = acc.mul(&factor);
    }
    acc.inv()
}

static POCH_MONO_CACHE: Lazy<Mutex<HashMap<(i64, i64, i64, i64), Qt>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Memoized Pochhammer for a monomial argument `X = v^a t^b`, any length.
/// Nearly every Pochhammer in the Macdonald layers has this shape, and they
/// recur constantly.
pub fn poch_mono(a: i64, b: i64, step: QPower, n: i64) -> Qt {
    let key = (a, b, step.0, n);
    if let Some(p) = POCH_MONO_CACHE.lock().unwrap().get(&key) {
        return p.clone();
    }
    let r = if n >= 1 {
        let prev = poch_mono(a, b, step, n - 1);
        prev.mul(
            &Qt::qt_one().sub(&Qt::vt_monomial(Scalar::one(), a + step.0 * (n - 1), b)),
        )
    } else if n == 0 {
        Qt::qt_one()
    } else {
        pochhammer_ext(&Qt::vt_monomial(Scalar::one(), a, b), step, n)
            .expect("extended Pochhammer of a monomial")
    };
    POCH_MONO_CACHE.lock().unwrap().insert(key, r.clone());
    r
}

/// `1/(X; b)_n` with the distribution convention that the reciprocal
/// vanishes for negative n (the Pochhammer acquires a (1 - b^0 X) = 0 factor
/// there when X is a positive power of the base).
pub fn inv_pochhammer_q2(n: i64) -> Qt {
    if n < 0 {
        return Qt::qt_zero();
    }
    poch_q2_q2(n as u32)
        .inv()
        .expect("(q^2;q^2)_n is nonzero for n >= 0")
}

/// `(q^2; q^2)_n`.
pub fn poch_q2_q2(n: u32) -> Qt {
    poch_mono(8, 0, QPower::q(2), n as i64)
}

/// The q-binomial coefficient `binom(n, k)_b = (b;b)_n / ((b;b)_k (b;b)_{n-k})`
/// for a q-power base b. The result is always a Laurent polynomial in the
/// base; non-polynomial remainders are a hard error.
pub fn qbinom(n: u32, k: u32, base: QPower) -> Result<Qt> {
    if k > n {
        return Err(Error::Invalid(format!("qbinom out of range: k={k} > n={n}")));
    }
    let top = poch_mono(base.0, 0, base, n as i64);
    let bot = poch_mono(base.0, 0, base, k as i64)
        .mul(&poch_mono(base.0, 0, base, (n - k) as i64));
    let r = top.div(&bot)?;
    if !r.is_laurent() {
        return Err(Error::NotLaurent("q-binomial did not reduce".into()));
    }
    Ok(r)
}

static QBINOM_Q2_CACHE: Lazy<Mutex<HashMap<(u32, u32), Qt>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Memoized base-q^2 binomial via the q-Pascal recurrence
/// `binom(n,k) = binom(n-1,k-1) + q^{2k} binom(n-1,k)`. Agrees with the
/// Pochhammer-ratio definition (tested) and avoids its repeated divisions
/// in the Whittaker expansions.
pub fn qbinom_q2(n: u32, k: u32) -> Qt {
    assert!(k <= n);
    if k == 0 || k == n {
        return Qt::qt_one();
    }
    if let Some(b) = QBINOM_Q2_CACHE.lock().unwrap().get(&(n, k)) {
        return b.clone();
    }
    let r = qbinom_q2(n - 1, k - 1).add(&Qt::q_pow(2 * k as i64).mul(&qbinom_q2(n - 1, k)));
    QBINOM_Q2_CACHE.lock().unwrap().insert((n, k), r.clone());
    r
}

/// The bracket `[n, m]_{q,t} = (q^n t^m - q^{-n} t^{-m}) / (q - q^{-1})`.
pub fn bracket(n: i64, m: i64) -> Qt {
    let num = Qt::vt_monomial(Scalar::one(), 4 * n, m)
        .sub(&Qt::vt_monomial(Scalar::one(), -4 * n, -m));
    let den = Qt::v_pow(4).sub(&Qt::v_pow(-4));
    num.div(&den).expect("q - q^{-1} is nonzero")
}

/// `Psi_q^+[n] = 1/(q^2;q^2)_n` for n >= 0 and 0 for n < 0. Satisfies
/// `Psi_q^+[n-1] = (1 - q^{2n}) Psi_q^+[n]`.
pub fn psi_plus(n: i64) -> Qt {
    inv_pochhammer_q2(n)
}

/// Same distribution for the inverse base: `Psi_{q^{-1}}^+[n] = 1/(q^{-2};q^{-2})_n`
/// for n >= 0, else 0.
pub fn psi_plus_qinv(n: i64) -> Qt {
    if n < 0 {
        return Qt::qt_zero();
    }
    pochhammer(&Qt::q_pow(-2), QPower::q(-2), n as u32)
        .inv()
        .expect("(q^{-2};q^{-2})_n is nonzero for n >= 0")
}

static WHITTAKER_CACHE: Lazy<Mutex<HashMap<u32, XPoly>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// The Whittaker polynomial `W_l(x; q^2) = sum_k binom(l, k)_{q^2} x^{l-2k}`,
/// returned in the single-variable context [x]. Memoized: the genus-2 basis
/// changes re-expand these constantly.
pub fn whittaker(l: u32) -> XPoly {
    if let Some(w) = WHITTAKER_CACHE.lock().unwrap().get(&l) {
        return w.clone();
    }
    let ctx = VarContext::x1();
    let mut w = XPoly::zero(&ctx);
    for k in 0..=l {
        let c = qbinom_q2(l, k);
        w = w.add(&XPoly::monomial(&ctx, vec![l as i64 - 2 * k as i64], c));
    }
    WHITTAKER_CACHE
        .lock()
        .unwrap()
        .insert(l, w.clone());
    w
}

/// Re-express a single-variable polynomial over the context [x] inside a
/// wider x-context, sending x to the variable at `slot`.
pub fn embed_x1(p: &XPoly, target: &VarContext, slot: usize) -> XPoly {
    assert_eq!(p.ctx().len(), 1);
    let n = target.len();
    p.map_exps(target, |e| {
        let mut ne = vec![0i64; n];
        ne[slot] = e[0];
        ne
    })
}

/// Expand a symmetric Laurent polynomial in the Whittaker basis. Works on
/// any mix of exponent parities. Returns pairs (l, coefficient) with the
/// coefficient of W_l, l >= 0.
pub fn whittaker_expand(p: &XPoly) -> Vec<(u32, Qt)> {
    assert_eq!(p.ctx().len(), 1, "single-variable expansion");
    let mut rem = p.clone();
    let mut out: Vec<(u32, Qt)> = Vec::new();
    while !rem.is_zero() {
        let top = rem
            .terms()
            .map(|(e, _)| e[0])
            .max()
            .expect("nonzero polynomial");
        assert!(
            top >= 0,
            "not expressible in Whittaker basis: negative top degree {top}"
        );
        let c = rem.coeff(&[top]);
        let l = top as u32;
        rem = rem.sub(&whittaker(l).scale(&c));
        out.push((l, c));
        let new_top = rem.terms().map(|(e, _)| e[0]).max();
        if let Some(nt) = new_top {
            assert!(nt < top, "Whittaker elimination must strictly descend");
        }
    }
    out.sort_by_key(|(l, _)| *l);
    out
}
