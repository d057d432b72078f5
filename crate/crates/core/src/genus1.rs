//! Genus-1 Macdonald polynomials by three independent routes: the Pieri
//! recursion, the terminating hypergeometric sum, and reconstruction from
//! Whittaker data through the lattice eigenfunctions f_l.
//!
//! The routes share no intermediates, so their exact agreement is a real
//! consistency check on each.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use once_cell::sync::Lazy;

use crate::qseries::{poch_mono, psi_plus, whittaker, QPower};
use crate::ratfunc::Qt;
use crate::scalar::Scalar;
use crate::XPoly;

/// A compactly supported function on the integer lattice with rational
/// (v, t) values. Zero values are dropped on insertion.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct LatticeFn1 {
    values: BTreeMap<i64, Qt>,
}

impl LatticeFn1 {
    pub fn new() -> Self {
        LatticeFn1 {
            values: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, n: i64, v: Qt) {
        if v.is_zero() {
            self.values.remove(&n);
        } else {
            self.values.insert(n, v);
        }
    }

    pub fn get(&self, n: i64) -> Qt {
        self.values.get(&n).cloned().unwrap_or_else(Qt::qt_zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (&i64, &Qt)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }
}

/// Pieri coefficient
/// `(1 - q^{2l})(1 - q^{2(l-1)} t^4) / ((1 - q^{2l} t^2)(1 - q^{2(l-1)} t^2))`.
pub fn pieri_coeff_g1(l: i64) -> Qt {
    let one = Qt::qt_one();
    let num = one
        .sub(&Qt::q_pow(2 * l))
        .mul(&one.sub(&Qt::vt_monomial(Scalar::one(), 8 * (l - 1), 4)));
    let den = one
        .sub(&Qt::vt_monomial(Scalar::one(), 8 * l, 2))
        .mul(&one.sub(&Qt::vt_monomial(Scalar::one(), 8 * (l - 1), 2)));
    num.div(&den).expect("Pieri denominator nonzero")
}

static P_PIERI_CACHE: Lazy<Mutex<HashMap<u32, XPoly>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// `P_l` by iterating the Pieri rule from `P_0 = 1`:
/// `(x + x^{-1}) P_l = P_{l+1} + c_l P_{l-1}`.
pub fn macdonald_p_pieri(l: u32) -> XPoly {
    if let Some(p) = P_PIERI_CACHE.lock().unwrap().get(&l) {
        return p.clone();
    }
    let ctx = crate::VarContext::x1();
    let r = if l == 0 {
        XPoly::one(&ctx)
    } else if l == 1 {
        XPoly::var_pow(&ctx, "x", 1)
            .unwrap()
            .add(&XPoly::var_pow(&ctx, "x", -1).unwrap())
    } else {
        let xpx = XPoly::var_pow(&ctx, "x", 1)
            .unwrap()
            .add(&XPoly::var_pow(&ctx, "x", -1).unwrap());
        let p_prev = macdonald_p_pieri(l - 1);
        let p_prev2 = macdonald_p_pieri(l - 2);
        xpx.mul(&p_prev)
            .sub(&p_prev2.scale(&pieri_coeff_g1(l as i64 - 1)))
    };
    P_PIERI_CACHE.lock().unwrap().insert(l, r.clone());
    r
}

/// `P_l` by the explicit terminating sum
/// `sum_r (q^{2l};q^{-2})_r (t^2;q^2)_r / ((q^{2(l-1)}t^2;q^{-2})_r (q^2;q^2)_r) x^{l-2r}`.
pub fn macdonald_p_explicit(l: u32) -> XPoly {
    let ctx = crate::VarContext::x1();
    let l = l as i64;
    let mut p = XPoly::zero(&ctx);
    for r in 0..=l {
        let num = poch_mono(8 * l, 0, QPower::q(-2), r).mul(&poch_mono(0, 2, QPower::q(2), r));
        let den = poch_mono(8 * (l - 1), 2, QPower::q(-2), r)
            .mul(&poch_mono(8, 0, QPower::q(2), r));
        let coeff = num.div(&den).expect("explicit-sum denominator nonzero");
        p = p.add(&XPoly::monomial(&ctx, vec![l - 2 * r], coeff));
    }
    p
}

/// Lattice eigenfunction of the mutated Macdonald operator
/// `t^{-1}U^{-1} + tU - tV^{-2}U^{-1}`:
/// `f_l(n) = (q^2;q^2)_l (q t^{-1})^{n-l} / ((t^2 q^{n+l};q^2)_{(l-n)/2} (q^{n-l};q^2)_{(l-n)/2})`,
/// supported on `0 <= n <= l` with `l - n` even.
pub fn f_eigen(l: u32) -> LatticeFn1 {
    let l = l as i64;
    let mut f = LatticeFn1::new();
    let norm = poch_mono(8, 0, QPower::q(2), l);
    let mut n = l;
    while n >= 0 {
        let k = (l - n) / 2;
        let prefactor = Qt::vt_monomial(Scalar::one(), 4 * (n - l), l - n);
        let den = poch_mono(4 * (n + l), 2, QPower::q(2), k)
            .mul(&poch_mono(4 * (n - l), 0, QPower::q(2), k));
        f.set(
            n,
            norm.mul(&prefactor).div(&den).expect("nonzero Pochhammer"),
        );
        n -= 2;
    }
    f
}

/// `P_l` reconstructed from Whittaker data:
/// `p_l(z) = sum_n Psi_q^+[l-2n] f_l(l-2n) W_{l-2n}(z)`.
pub fn reconstruct_p(l: u32) -> XPoly {
    let ctx = crate::VarContext::x1();
    let f = f_eigen(l);
    let mut p = XPoly::zero(&ctx);
    for n in 0..=(l / 2) {
        let m = l as i64 - 2 * n as i64;
        let fp = psi_plus(m).mul(&f.get(m));
        p = p.add(&whittaker(m as u32).scale(&fp));
    }
    p
}

/// Evaluate a single-variable Laurent polynomial at `x = t`.
pub fn eval_at_t(p: &XPoly) -> Qt {
    let mut acc = Qt::qt_zero();
    for (e, c) in p.terms() {
        acc = acc.add(&c.mul(&Qt::t_pow(e[0])));
    }
    acc
}

/// The special value `c_l = P_l(t)`. In the conventions of this crate
/// (Macdonald parameters (t^2, q^2)) the product formula reads
/// `c_l = t^{-l} (t^4;q^2)_l / (t^2;q^2)_l`.
pub fn c_special(l: u32) -> Qt {
    let l = l as i64;
    Qt::t_pow(-l)
        .mul(&poch_mono(0, 4, QPower::q(2), l))
        .div(&poch_mono(0, 2, QPower::q(2), l))
        .expect("(t^2;q^2)_l nonzero")
}
