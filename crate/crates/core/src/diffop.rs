//! Symmetric q-difference operators on Laurent rings: the dual Toda
//! hamiltonians, the Macdonald operator, the genus-2 difference operators,
//! and multiplication operators.
//!
//! An operator is a finite sum of terms `coeff * T^shift` where the
//! coefficient is a rational function of the x-variables (over rational
//! (v,t) coefficients) and `T^shift` is a multiplicative q-shift, acting by
//! `x_i -> q^{shift_i} x_i`. Operator equality is decided on the normal
//! form: terms merged by shift, coefficients compared by cross-multiplication.

use std::collections::BTreeMap;

use crate::context::VarContext;
use crate::error::{Error, Result};
use crate::ratfunc::Qt;
use crate::{XPoly, XRat};

impl XPoly {
    /// Apply `T^shift`: the coefficient of `x^m` picks up `q^{<shift, m>}`.
    pub fn t_shift(&self, shift: &[i64]) -> XPoly {
        assert_eq!(shift.len(), self.ctx().len());
        let ctx = self.ctx().clone();
        let mut out = XPoly::zero(&ctx);
        for (e, c) in self.terms() {
            let dot: i64 = e.iter().zip(shift).map(|(a, b)| a * b).sum();
            out = out.add(&XPoly::monomial(
                &ctx,
                e.clone(),
                c.mul(&Qt::v_pow(4 * dot)),
            ));
        }
        out
    }

    /// Permute the x-variables by `slot_map` (image positions).
    pub fn permute_vars(&self, slot_map: &[usize]) -> XPoly {
        let ctx = self.ctx().clone();
        self.map_exps(&ctx, |e| {
            let mut ne = vec![0i64; e.len()];
            for (i, &k) in e.iter().enumerate() {
                ne[slot_map[i]] = k;
            }
            ne
        })
    }
}

impl XRat {
    pub fn t_shift(&self, shift: &[i64]) -> XRat {
        let num = self.num().t_shift(shift);
        let mut r = XRat::from_poly(num);
        for (f, m) in self.den_factors() {
            r = r
                .div(&XRat::from_poly(f.t_shift(shift)).pow(*m as i64).unwrap())
                .expect("shifted denominator is nonzero");
        }
        r
    }

    pub fn permute_vars(&self, slot_map: &[usize]) -> XRat {
        let num = self.num().permute_vars(slot_map);
        let mut r = XRat::from_poly(num);
        for (f, m) in self.den_factors() {
            r = r
                .div(
                    &XRat::from_poly(f.permute_vars(slot_map))
                        .pow(*m as i64)
                        .unwrap(),
                )
                .expect("permuted denominator is nonzero");
        }
        r
    }
}

/// A q-difference operator in normal form.
#[derive(Clone, PartialEq)]
pub struct DiffOp {
    ctx: VarContext,
    terms: BTreeMap<Vec<i64>, XRat>,
}

impl DiffOp {
    pub fn zero(ctx: &VarContext) -> Self {
        DiffOp {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(ctx: &VarContext) -> Self {
        let mut op = DiffOp::zero(ctx);
        op.add_term(vec![0; ctx.len()], XRat::one(ctx));
        op
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &XRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, shift: &[i64]) -> XRat {
        self.terms
            .get(shift)
            .cloned()
            .unwrap_or_else(|| XRat::zero(&self.ctx))
    }

    pub fn add_term(&mut self, shift: Vec<i64>, coeff: XRat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(shift) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&coeff);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        DiffOp {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(s, c)| (s.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Qt) -> Self {
        if c.is_zero() {
            return DiffOp::zero(&self.ctx);
        }
        let cr = XRat::from_poly(XPoly::constant(&self.ctx, c.clone()));
        DiffOp {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(s, k)| (s.clone(), k.mul(&cr)))
                .collect(),
        }
    }

    /// Operator composition: `(self . other)(f) = self(other(f))`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = DiffOp::zero(&self.ctx);
        for (s, a) in &self.terms {
            for (u, b) in &other.terms {
                let total: Vec<i64> = s.iter().zip(u).map(|(x, y)| x + y).collect();
                out.add_term(total, a.mul(&b.t_shift(s)));
            }
        }
        out
    }

    /// Commutator `[self, other]`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    /// Apply the operator to a Laurent polynomial. The per-term images are
    /// genuinely rational; denominators are cleared only at the end, and a
    /// residue certifies that `f` lies outside the preserved subspace.
    pub fn apply(&self, f: &XPoly) -> Result<XPoly> {
        assert!(self.ctx.same(f.ctx()));
        let mut acc = XRat::zero(&self.ctx);
        for (s, c) in &self.terms {
            acc = acc.add(&c.mul(&XRat::from_poly(f.t_shift(s))));
        }
        acc.as_poly()
            .map_err(|_| Error::NotLaurent("operator image has uncancelled denominator".into()))
    }

    /// Rename variables by a slot permutation (applied to both coefficients
    /// and shifts).
    pub fn permute_vars(&self, slot_map: &[usize]) -> Self {
        let mut out = DiffOp::zero(&self.ctx);
        for (s, c) in &self.terms {
            let mut ns = vec![0i64; s.len()];
            for (i, &k) in s.iter().enumerate() {
                ns[slot_map[i]] = k;
            }
            out.add_term(ns, c.permute_vars(slot_map));
        }
        out
    }
}

impl std::fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (s, c) in &self.terms {
            writeln!(f, "  T^{:?} : {}", s, c)?;
        }
        Ok(())
    }
}

/// The operator of multiplication by `var + var^{-1}`.
pub fn mul_op(ctx: &VarContext, var: &str) -> Result<DiffOp> {
    let x = XPoly::var_pow(ctx, var, 1)?;
    let xinv = XPoly::var_pow(ctx, var, -1)?;
    let mut op = DiffOp::zero(ctx);
    op.add_term(vec![0; ctx.len()], XRat::from_poly(x.add(&xinv)));
    Ok(op)
}

/// The dual Toda hamiltonian ladder in the variable at `slot`:
/// `H_n = q^{n/2} [ x^n/(1-x^2) T_x + x^{-n}/(1-x^{-2}) T_x^{-1} ]`.
pub fn hcheck_slot(ctx: &VarContext, slot: usize, n: i64) -> DiffOp {
    let nvars = ctx.len();
    let var = ctx.name(slot).to_string();
    let x = |k: i64| XPoly::var_pow(ctx, &var, k).unwrap();
    let one = XPoly::one(ctx);
    let qhalf_n = Qt::v_pow(2 * n);

    let mut op = DiffOp::zero(ctx);
    let mut shift_p = vec![0i64; nvars];
    shift_p[slot] = 1;
    let mut shift_m = vec![0i64; nvars];
    shift_m[slot] = -1;

    let coeff_p = XRat::from_ratio(x(n).scale(&qhalf_n), one.sub(&x(2))).unwrap();
    let coeff_m = XRat::from_ratio(x(-n).scale(&qhalf_n), one.sub(&x(-2))).unwrap();
    op.add_term(shift_p, coeff_p);
    op.add_term(shift_m, coeff_m);
    op
}

/// `H_n` in the single-variable context.
pub fn hcheck(n: i64) -> DiffOp {
    hcheck_slot(&VarContext::x1(), 0, n)
}

/// The Macdonald operator
/// `M = (tx - t^{-1}x^{-1})/(x - x^{-1}) T_x + (tx^{-1} - t^{-1}x)/(x^{-1} - x) T_x^{-1}`.
pub fn macdonald_op() -> DiffOp {
    let ctx = VarContext::x1();
    let x = |k: i64| XPoly::var_pow(&ctx, "x", k).unwrap();
    let t = |k: i64| Qt::t_pow(k);
    let mut op = DiffOp::zero(&ctx);
    op.add_term(
        vec![1],
        XRat::from_ratio(
            x(1).scale(&t(1)).sub(&x(-1).scale(&t(-1))),
            x(1).sub(&x(-1)),
        )
        .unwrap(),
    );
    op.add_term(
        vec![-1],
        XRat::from_ratio(
            x(-1).scale(&t(1)).sub(&x(1).scale(&t(-1))),
            x(-1).sub(&x(1)),
        )
        .unwrap(),
    );
    op
}

/// Slot permutation induced on the pair variables (x12, x13, x23) by a
/// permutation of the indices {1,2,3}, given as the images `[p1, p2, p3]`.
pub fn pair_slot_map(p: [usize; 3]) -> [usize; 3] {
    let pair_slot = |a: usize, b: usize| -> usize {
        match (a.min(b), a.max(b)) {
            (1, 2) => 0,
            (1, 3) => 1,
            (2, 3) => 2,
            _ => unreachable!("bad pair"),
        }
    };
    [
        pair_slot(p[0], p[1]), // image of {1,2}
        pair_slot(p[0], p[2]), // image of {1,3}
        pair_slot(p[1], p[2]), // image of {2,3}
    ]
}

/// The genus-2 difference operator `O_{A_k}` on the context (x12, x13, x23).
pub fn genus2_op_a(k: usize) -> DiffOp {
    let op1 = genus2_op_a1();
    match k {
        1 => op1,
        2 => op1.permute_vars(&pair_slot_map([2, 1, 3])),
        3 => op1.permute_vars(&pair_slot_map([3, 2, 1])),
        _ => panic!("k must be 1, 2, or 3"),
    }
}

fn genus2_op_a1() -> DiffOp {
    let ctx = VarContext::x3();
    let xp = |name: &str, k: i64| XPoly::var_pow(&ctx, name, k).unwrap();
    let one = XPoly::one(&ctx);
    let t = |k: i64| Qt::t_pow(k);

    let mut op = DiffOp::zero(&ctx);
    for a in [1i64, -1] {
        for b in [1i64, -1] {
            let sign = Qt::int(a * b);
            // X = x12^a x13^b
            let x_ab = xp("x12", a).mul(&xp("x13", b));
            let num = one
                .sub(&x_ab.mul(&xp("x23", 1)).scale(&t(1)))
                .mul(&one.sub(&x_ab.mul(&xp("x23", -1)).scale(&t(1))))
                .scale(&sign);
            let den = x_ab
                .scale(&t(1))
                .mul(&xp("x12", 1).sub(&xp("x12", -1)))
                .mul(&xp("x13", 1).sub(&xp("x13", -1)));
            op.add_term(vec![a, b, 0], XRat::from_ratio(num, den).unwrap());
        }
    }
    op
}

/// `O_{A_k}` expressed through the single-variable Toda hamiltonians. For
/// k = 1 this is
/// `t^{-1} H0^(12) H0^(13) - q^{-1} (x23 + x23^{-1}) H1^(12) H1^(13) + q^{-2} t H2^(12) H2^(13)`,
/// and the other two are index permutations. (The q-powers compensate the
/// `q^{n/2}` normalization baked into `H_n`.)
pub fn genus2_op_a_via_toda(k: usize) -> DiffOp {
    let ctx = VarContext::x3();
    let (s1, s2, spec) = match k {
        1 => (0usize, 1usize, "x23"),
        2 => (0, 2, "x13"),
        3 => (1, 2, "x12"),
        _ => panic!("k must be 1, 2, or 3"),
    };
    let h = |slot: usize, n: i64| hcheck_slot(&ctx, slot, n);
    let lmul = mul_op(&ctx, spec).unwrap();

    let term0 = h(s1, 0).compose(&h(s2, 0)).scale(&Qt::t_pow(-1));
    let term1 = lmul
        .compose(&h(s1, 1))
        .compose(&h(s2, 1))
        .scale(&Qt::q_pow(-1));
    let term2 = h(s1, 2)
        .compose(&h(s2, 2))
        .scale(&Qt::q_pow(-2).mul(&Qt::t_pow(1)));
    term0.sub(&term1).add(&term2)
}

/// Eigenvalue `t q^l + t^{-1} q^{-l}` of the Macdonald-type operators.
pub fn eigenvalue(l: i64) -> Qt {
    Qt::vt_monomial(crate::scalar::Scalar::one(), 4 * l, 1)
        .add(&Qt::vt_monomial(crate::scalar::Scalar::one(), -4 * l, -1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::whittaker;

    fn x1_ctx() -> VarContext {
        VarContext::x1()
    }

    #[test]
    fn hcheck_on_constants_and_whittaker() {
        let one = XPoly::one(&x1_ctx());
        // H_0 1 = 1
        assert_eq!(hcheck(0).apply(&one).unwrap(), one);
        // H_0 W_l = q^{-l} W_l
        for l in 0..=8u32 {
            let w = whittaker(l);
            let got = hcheck(0).apply(&w).unwrap();
            assert_eq!(got, w.scale(&Qt::q_pow(-(l as i64))), "l = {l}");
        }
    }

    #[test]
    fn hcheck_ladder_relation() {
        // q^{±1/2} H_n L - q^{∓1/2} L H_n = (q^{±1} - q^{∓1}) H_{n±1}
        let ctx = x1_ctx();
        let l_op = mul_op(&ctx, "x").unwrap();
        for n in -5..=5i64 {
            let hn = hcheck(n);
            let up = hn
                .compose(&l_op)
                .scale(&Qt::v_pow(2))
                .sub(&l_op.compose(&hn).scale(&Qt::v_pow(-2)));
            let up_rhs = hcheck(n + 1).scale(&Qt::q_pow(1).sub(&Qt::q_pow(-1)));
            assert_eq!(up, up_rhs, "up, n = {n}");
            let down = hn
                .compose(&l_op)
                .scale(&Qt::v_pow(-2))
                .sub(&l_op.compose(&hn).scale(&Qt::v_pow(2)));
            let down_rhs = hcheck(n - 1).scale(&Qt::q_pow(-1).sub(&Qt::q_pow(1)));
            assert_eq!(down, down_rhs, "down, n = {n}");
        }
    }

    #[test]
    fn macdonald_via_dual_toda() {
        // M = t^{-1} H_0 - q^{-1} t H_2
        let m = macdonald_op();
        let rhs = hcheck(0)
            .scale(&Qt::t_pow(-1))
            .sub(&hcheck(2).scale(&Qt::q_pow(-1).mul(&Qt::t_pow(1))));
        assert_eq!(m, rhs);
        // coefficient of T_x: (tx - t^-1 x^-1)/(x - x^-1)
        let ctx = x1_ctx();
        let x = |k: i64| XPoly::var_pow(&ctx, "x", k).unwrap();
        let expect = XRat::from_ratio(
            x(1).scale(&Qt::t_pow(1)).sub(&x(-1).scale(&Qt::t_pow(-1))),
            x(1).sub(&x(-1)),
        )
        .unwrap();
        assert_eq!(m.coeff(&[1]), expect);
    }

    #[test]
    fn macdonald_small_eigenfunctions() {
        let ctx = x1_ctx();
        let one = XPoly::one(&ctx);
        let m = macdonald_op();
        // M 1 = (t + t^-1) 1
        assert_eq!(m.apply(&one).unwrap(), one.scale(&eigenvalue(0)));
        // M (x + x^-1) = (qt + q^-1 t^-1)(x + x^-1)
        let p1 = XPoly::var_pow(&ctx, "x", 1)
            .unwrap()
            .add(&XPoly::var_pow(&ctx, "x", -1).unwrap());
        assert_eq!(m.apply(&p1).unwrap(), p1.scale(&eigenvalue(1)));
    }

    #[test]
    fn genus2_op_collect_coeffs_identity() {
        for k in 1..=3 {
            assert_eq!(genus2_op_a(k), genus2_op_a_via_toda(k), "k = {k}");
        }
    }

    #[test]
    fn genus2_op_on_constant() {
        let ctx = VarContext::x3();
        let one = XPoly::one(&ctx);
        for k in 1..=3 {
            let got = genus2_op_a(k).apply(&one).unwrap();
            assert_eq!(got, one.scale(&eigenvalue(0)), "k = {k}");
        }
    }

    #[test]
    fn genus2_ops_commute() {
        let z = DiffOp::zero(&VarContext::x3());
        for (j, k) in [(1, 2), (1, 3), (2, 3)] {
            assert_eq!(genus2_op_a(j).commutator(&genus2_op_a(k)), z, "[{j},{k}]");
        }
    }

    #[test]
    fn genus2_op_permutation_symmetry() {
        // O_{A_2} is the (1<->2) index swap of O_{A_1}.
        assert_eq!(
            genus2_op_a(2),
            genus2_op_a(1).permute_vars(&pair_slot_map([2, 1, 3]))
        );
        // O_{A_1} itself is symmetric under swapping indices 2 and 3.
        assert_eq!(
            genus2_op_a(1),
            genus2_op_a(1).permute_vars(&pair_slot_map([1, 3, 2]))
        );
    }

    #[test]
    fn mul_ops_commute() {
        let ctx = VarContext::x3();
        let a = mul_op(&ctx, "x12").unwrap();
        let b = mul_op(&ctx, "x13").unwrap();
        assert_eq!(a.commutator(&b), DiffOp::zero(&ctx));
        let one = XPoly::one(&ctx);
        let expect = XPoly::var_pow(&ctx, "x12", 1)
            .unwrap()
            .add(&XPoly::var_pow(&ctx, "x12", -1).unwrap());
        assert_eq!(a.apply(&one).unwrap(), expect);
    }

    #[test]
    fn non_laurent_image_detected() {
        // 1/(1-x^2) T_x alone does not preserve Laurent polynomials.
        let ctx = x1_ctx();
        let one = XPoly::one(&ctx);
        let mut op = DiffOp::zero(&ctx);
        op.add_term(
            vec![1],
            XRat::from_ratio(one.clone(), one.sub(&XPoly::var_pow(&ctx, "x", 2).unwrap()))
                .unwrap(),
        );
        assert!(matches!(op.apply(&one), Err(Error::NotLaurent(_))));
    }

    #[test]
    fn apply_respects_composition() {
        let ctx = x1_ctx();
        let m = macdonald_op();
        let h = hcheck(1);
        let f = whittaker(3).add(&whittaker(1).scale(&Qt::t_pow(2)));
        let lhs = m.compose(&h).apply(&f).unwrap();
        let rhs = m.apply(&h.apply(&f).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let _ = ctx;
    }

    /// Randomized preservation suite: images of (Z/2)^3-symmetric Laurent
    /// polynomials stay Laurent and symmetric.
    #[test]
    fn genus2_preservation_of_symmetric_subring() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let ctx = VarContext::x3();
        let ops: Vec<DiffOp> = (1..=3).map(genus2_op_a).collect();
        for trial in 0..6 {
            let mut f = XPoly::zero(&ctx);
            for _ in 0..4 {
                let e: Vec<i64> = (0..3).map(|_| rng.gen_range(0..=3i64)).collect();
                let c = Qt::int(rng.gen_range(-3..=3));
                for sx in [1i64, -1] {
                    for sy in [1i64, -1] {
                        for sz in [1i64, -1] {
                            f = f.add(&XPoly::monomial(
                                &ctx,
                                vec![e[0] * sx, e[1] * sy, e[2] * sz],
                                c.clone(),
                            ));
                        }
                    }
                }
            }
            if f.is_zero() {
                continue;
            }
            for (k, op) in ops.iter().enumerate() {
                let img = op.apply(&f).unwrap();
                for var in ["x12", "x13", "x23"] {
                    assert!(img.symmetric_in(var), "trial {trial}, op {k}, var {var}");
                }
            }
        }
    }
}
