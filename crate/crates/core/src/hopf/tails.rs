//! Non-primitive coproduct tails built from a generator `x` and a group-like `g`.

use alloc::vec::Vec;

use crate::field::{reduced_binomial, xi_factorial, FieldCtx, FieldError, Fq};
use crate::freealg::{Letter, TensorPoly, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailKind {
    /// `sum_{0<i<p} (p-1)!/(i!(p-i)!) x^i (x) x^(p-i)`.
    Omega0,
    /// `sum_{0<i<p} (p-1)!/(i!(p-i)!) x^i g^(theta(p-i)) (x) x^(p-i)`.
    OmegaTheta { g: Letter, theta: u32 },
    /// `sum_{0<i<q} (q-1)_xi!/((i)_xi!(q-i)_xi!) x^i g^(q-i) (x) x^(q-i)`.
    ThetaQ { g: Letter, q: u32, xi: Fq },
}

fn power(l: Letter, n: u32) -> Word {
    alloc::vec![l; n as usize]
}

/// Coefficients of the `i = 1 .. n-1` terms of a tail.
pub fn tail_coefficients(ctx: &FieldCtx, kind: TailKind) -> Result<Vec<Fq>, FieldError> {
    match kind {
        TailKind::Omega0 | TailKind::OmegaTheta { .. } => {
            let p = ctx.p() as u64;
            Ok((1..p).map(|i| reduced_binomial(ctx, i)).collect())
        }
        TailKind::ThetaQ { q, xi, .. } => {
            let q = q as u64;
            let top = xi_factorial(ctx, xi, q - 1);
            (1..q)
                .map(|i| {
                    let den = ctx.mul(xi_factorial(ctx, xi, i), xi_factorial(ctx, xi, q - i));
                    ctx.div(top, den)
                })
                .collect()
        }
    }
}

pub fn coproduct_tail(ctx: &FieldCtx, x: Letter, kind: TailKind) -> Result<TensorPoly, FieldError> {
    let coeffs = tail_coefficients(ctx, kind)?;
    let n = coeffs.len() as u32 + 1;
    let mut t = TensorPoly::zero(2);
    for (k, &c) in coeffs.iter().enumerate() {
        let i = k as u32 + 1;
        let mut left = power(x, i);
        match kind {
            TailKind::Omega0 => {}
            TailKind::OmegaTheta { g, theta } => left.extend(power(g, theta * (n - i))),
            TailKind::ThetaQ { g, .. } => left.extend(power(g, n - i)),
        }
        t.add_term(ctx, alloc::vec![left, power(x, n - i)], c);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use crate::freealg::{GenSet, Generator};

    fn gens() -> GenSet {
        GenSet::new(alloc::vec![Generator::grouplike("g", 6), Generator::new("x", 1)])
    }

    #[test]
    fn omega0_at_two_is_x_tensor_x() {
        let ctx = make_field(2, &[]).unwrap();
        let t = coproduct_tail(&ctx, 1, TailKind::Omega0).unwrap();
        assert_eq!(alloc::format!("{}", t.display(&ctx, &gens())), "x(#)x");
    }

    #[test]
    fn omega_one_at_two() {
        let ctx = make_field(2, &[]).unwrap();
        let t = coproduct_tail(&ctx, 1, TailKind::OmegaTheta { g: 0, theta: 1 }).unwrap();
        assert_eq!(alloc::format!("{}", t.display(&ctx, &gens())), "x*g(#)x");
    }

    #[test]
    fn omega0_coefficients_at_five() {
        let ctx = make_field(5, &[]).unwrap();
        let c: Vec<u32> = tail_coefficients(&ctx, TailKind::Omega0)
            .unwrap()
            .into_iter()
            .map(|v| ctx.as_prime(v).unwrap())
            .collect();
        // binom(5, i) / 5 = 1, 2, 2, 1.
        assert_eq!(c, [1, 2, 2, 1]);
    }

    #[test]
    fn theta_three_over_gf4_has_unit_coefficients() {
        let ctx = make_field(2, &[3]).unwrap();
        let xi = ctx.root_of_unity(3).unwrap();
        let c = tail_coefficients(&ctx, TailKind::ThetaQ { g: 0, q: 3, xi }).unwrap();
        assert_eq!(c, [Fq::ONE, Fq::ONE]);
    }
}
