//! Polynomials in a commuting parameter with free-algebra coefficients, and
//! the Jacobson decomposition of `(a + b)^p`.

use alloc::vec;
use alloc::vec::Vec;

use super::NcPoly;
use crate::field::{FieldCtx, Fq};

/// `sum_i coeffs[i] * lambda^i`, with `lambda` central.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LambdaPoly {
    pub coeffs: Vec<NcPoly>,
}

impl LambdaPoly {
    pub fn constant(p: NcPoly) -> Self {
        LambdaPoly { coeffs: vec![p] }
    }

    pub fn coeff(&self, i: usize) -> NcPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn add_assign(&mut self, ctx: &FieldCtx, other: &LambdaPoly, c: Fq) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), NcPoly::zero());
        }
        for (i, o) in other.coeffs.iter().enumerate() {
            self.coeffs[i].add_scaled(ctx, o, c);
        }
        self.trim();
    }

    pub fn mul(ctx: &FieldCtx, a: &LambdaPoly, b: &LambdaPoly) -> LambdaPoly {
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return LambdaPoly::default();
        }
        let mut out = vec![NcPoly::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j].add_assign(ctx, &NcPoly::mul(ctx, x, y));
            }
        }
        let mut r = LambdaPoly { coeffs: out };
        r.trim();
        r
    }

    pub fn bracket(ctx: &FieldCtx, a: &LambdaPoly, b: &LambdaPoly) -> LambdaPoly {
        let mut r = LambdaPoly::mul(ctx, a, b);
        r.add_assign(ctx, &LambdaPoly::mul(ctx, b, a), ctx.neg(Fq::ONE));
        r
    }
}

/// `[x, y] = xy - yx`.
pub fn bracket(ctx: &FieldCtx, x: &NcPoly, y: &NcPoly) -> NcPoly {
    let mut r = NcPoly::mul(ctx, x, y);
    r.sub_assign(ctx, &NcPoly::mul(ctx, y, x));
    r
}

/// `(x)(ad_R y)^n = [...[[x, y], y]..., y]`, reducing after every bracket.
pub fn ad_r_pow(
    ctx: &FieldCtx,
    x: &NcPoly,
    y: &NcPoly,
    n: u32,
    mut reduce: impl FnMut(NcPoly) -> NcPoly,
) -> NcPoly {
    let mut cur = reduce(x.clone());
    for _ in 0..n {
        cur = reduce(bracket(ctx, &cur, y));
    }
    cur
}

/// `(ad_L x)^n(y) = [x, [x, ..., [x, y]...]]`, reducing after every bracket.
pub fn ad_l_pow(
    ctx: &FieldCtx,
    x: &NcPoly,
    y: &NcPoly,
    n: u32,
    mut reduce: impl FnMut(NcPoly) -> NcPoly,
) -> NcPoly {
    let mut cur = reduce(y.clone());
    for _ in 0..n {
        cur = reduce(bracket(ctx, x, &cur));
    }
    cur
}

/// The terms `s_1, ..., s_{p-1}` in `(a + b)^p = a^p + b^p + sum_i s_i`,
/// where `i s_i` is the coefficient of `lambda^(i-1)` in
/// `(a)(ad_R(lambda a + b))^(p-1)`.
pub fn jacobson_terms(ctx: &FieldCtx, a: &NcPoly, b: &NcPoly) -> Vec<NcPoly> {
    let p = ctx.p() as usize;
    let z = LambdaPoly { coeffs: vec![b.clone(), a.clone()] };
    let mut cur = LambdaPoly::constant(a.clone());
    for _ in 1..p {
        cur = LambdaPoly::bracket(ctx, &cur, &z);
    }
    (1..p)
        .map(|i| {
            let inv = ctx.inv(ctx.from_int(i as i64)).expect("i < p is a unit");
            cur.coeff(i - 1).scale(ctx, inv)
        })
        .collect()
}

/// Residue `(a + b)^p - a^p - b^p - sum_i s_i`; zero when the decomposition holds.
pub fn jacobson_check(ctx: &FieldCtx, a: &NcPoly, b: &NcPoly) -> NcPoly {
    let p = ctx.p();
    let mut r = NcPoly::pow(ctx, &NcPoly::sum(ctx, a, b), p);
    r.sub_assign(ctx, &NcPoly::pow(ctx, a, p));
    r.sub_assign(ctx, &NcPoly::pow(ctx, b, p));
    for s in jacobson_terms(ctx, a, b) {
        r.sub_assign(ctx, &s);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn jacobson_in_small_characteristic() {
        for p in [2, 3, 5] {
            let ctx = make_field(p, &[]).unwrap();
            let r = jacobson_check(&ctx, &NcPoly::gen(0), &NcPoly::gen(1));
            assert!(r.is_zero(), "p = {p}");
        }
    }

    #[test]
    fn jacobson_at_two_is_the_commutator() {
        let ctx = make_field(2, &[]).unwrap();
        let s = jacobson_terms(&ctx, &NcPoly::gen(0), &NcPoly::gen(1));
        assert_eq!(s, vec![bracket(&ctx, &NcPoly::gen(0), &NcPoly::gen(1))]);
    }
}
