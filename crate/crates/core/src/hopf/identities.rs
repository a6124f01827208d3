//! Symbolic verification of adjoint-power identities in positive
//! characteristic. Each identity carries its hypothesis algebra; the
//! hypothesis system is completed before any reduction.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::tails::{coproduct_tail, TailKind};
use crate::field::{FieldCtx, Fq};
use crate::freealg::{ad_l_pow, ad_r_pow, bracket, parse_poly, GenSet, Generator, NcPoly, ParseError, ScalarEnv, TensorPoly};
use crate::rewrite::{complete, CompletionBounds, CompletionError, MonomialOrder, OrientError, Relation, RewriteSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `g^n = 1, gx - xg = g - g^2`: conjugation formula for `g^i x` and
    /// `(g)(ad_R x)^(p-1) = g - g^p = (ad_L x)^(p-1)(g)`, with the `p`-th
    /// powers acting as the first.
    GroupLikeAdPower { n: u32 },
    /// Same algebra with `x` in `P_{1,g}`: `x^p - x` lies in `P_{1,g^p}`.
    XpMinusXSkewPrimitive { n: u32 },
    /// `g^m = 1, [g,x] = l1(g - g^2), [g,y] = l2(g - g^2),
    /// xy - yx + l1 y - l2 x = l3(1 - g^2)`: closed forms for
    /// `(x)(ad_R y)^k` and `(ad_L x)^k(y)`.
    TwoGeneratorAdPower { m: u32, l1: Fq, l2: Fq, l3: Fq },
    /// `g^m = 1, [g,x] = l1(g - g^2), gy = yg,
    /// xy - yx + l1 mu y = l3(1 - g^(mu+1))`.
    CentralAdPower { m: u32, l1: Fq, l3: Fq, mu: u32 },
    /// `g` central of order `m`, `x` in `P_{1,g^theta}`,
    /// `xy - yx = l2 x + l3(1 - g^(theta(p+1)))`,
    /// `Delta(y) = y (x) 1 + g^(theta p) (x) y + omega_theta`:
    /// `(omega_theta)(ad_R Delta_0(y))^(p-1) = -d1_{1,g^(theta p^2)}(([x,y]x^(p-1))(ad_R y)^(p-2))`.
    OmegaBracket { m: u32, theta: u32, l2: Fq, l3: Fq },
}

#[derive(Clone, Debug)]
pub enum IdentityError {
    Parse(ParseError),
    Orient(OrientError),
    Completion(CompletionError),
    /// The coproduct does not annihilate a hypothesis relation.
    NotHopf { relation: usize, residue: String },
}

impl fmt::Display for IdentityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityError::Parse(e) => write!(f, "{e}"),
            IdentityError::Orient(e) => write!(f, "{e}"),
            IdentityError::Completion(e) => write!(f, "hypothesis algebra: {e}"),
            IdentityError::NotHopf { relation, residue } => {
                write!(f, "coproduct does not preserve hypothesis relation {relation}: {residue}")
            }
        }
    }
}

impl core::error::Error for IdentityError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub label: String,
    /// Normal form of `lhs - rhs`.
    pub residue: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: Identity,
    pub p: u32,
    /// The hypothesis relations were already confluent.
    pub hypothesis_confluent: bool,
    /// Completion collapsed a generator onto smaller words, or the whole algebra.
    pub degenerate: bool,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

struct Hypothesis {
    sys: RewriteSystem,
    env: ScalarEnv,
    confluent: bool,
    degenerate: bool,
}

impl Hypothesis {
    fn new(
        ctx: &Arc<FieldCtx>,
        gens: Vec<Generator>,
        scalars: &[(&str, Fq)],
        rels: &[String],
    ) -> Result<Self, IdentityError> {
        let gens = GenSet::new(gens);
        let mut env = ScalarEnv::for_field(ctx);
        for (n, v) in scalars {
            env.set(n, *v);
        }
        let mut relations = Vec::with_capacity(rels.len());
        for r in rels {
            let src = match r.split_once('=') {
                Some((l, rr)) => format!("{l} - ({rr})"),
                None => r.clone(),
            };
            let poly = parse_poly(&src, ctx, &gens, &env).map_err(IdentityError::Parse)?;
            relations.push(Relation::new(poly));
        }
        let order = MonomialOrder::wll(gens);
        let raw = RewriteSystem::orient(ctx.clone(), order, &relations).map_err(IdentityError::Orient)?;
        let confluent = raw.check_confluence().confluent();
        let sys = if confluent {
            raw
        } else {
            complete(&raw, CompletionBounds::default()).map_err(IdentityError::Completion)?
        };
        let degenerate = sys.is_trivial() || sys.rules().iter().any(|r| r.lhs.len() <= 1);
        Ok(Hypothesis { sys, env, confluent, degenerate })
    }

    fn ctx(&self) -> &FieldCtx {
        self.sys.ctx()
    }

    fn p(&self, src: &str) -> NcPoly {
        let raw = parse_poly(src, self.ctx(), self.sys.gens(), &self.env).expect("internal expression parses");
        self.sys.reduce(&raw)
    }

    fn r(&self, p: NcPoly) -> NcPoly {
        self.sys.reduce(&p)
    }

    fn check(&self, label: String, lhs: &NcPoly, rhs: &NcPoly) -> IdentityCheck {
        let diff = self.r(NcPoly::diff(self.ctx(), lhs, rhs));
        IdentityCheck {
            label,
            residue: format!("{}", diff.display(self.ctx(), self.sys.gens())),
            holds: diff.is_zero(),
        }
    }

    fn check_tensor(&self, label: String, lhs: &TensorPoly, rhs: &TensorPoly) -> IdentityCheck {
        let mut d = lhs.clone();
        d.sub_assign(self.ctx(), rhs);
        let d = self.sys.reduce_tensor(&d);
        IdentityCheck {
            label,
            residue: format!("{}", d.display(self.ctx(), self.sys.gens())),
            holds: d.is_zero(),
        }
    }

    fn ad_r(&self, a: &NcPoly, b: &NcPoly, n: u32) -> NcPoly {
        ad_r_pow(self.ctx(), a, b, n, |q| self.sys.reduce(&q))
    }

    fn ad_l(&self, a: &NcPoly, b: &NcPoly, n: u32) -> NcPoly {
        ad_l_pow(self.ctx(), a, b, n, |q| self.sys.reduce(&q))
    }

    /// Multiplicative extension of generator coproducts to `p`, reduced factorwise.
    fn delta(&self, images: &[TensorPoly], p: &NcPoly) -> TensorPoly {
        let ctx = self.ctx();
        let mut out = TensorPoly::zero(2);
        for (w, c) in p.terms() {
            let mut acc = TensorPoly::unit(2);
            for &l in w {
                acc = self.sys.mul_tensor(&acc, &images[l as usize]);
            }
            out.add_scaled(ctx, &acc, c);
        }
        out
    }

    fn require_hopf(&self, images: &[TensorPoly]) -> Result<(), IdentityError> {
        for (i, r) in self.sys.relations().iter().enumerate() {
            let d = self.sys.reduce_tensor(&self.delta(images, r));
            if !d.is_zero() {
                let residue = format!("{}", d.display(self.ctx(), self.sys.gens()));
                return Err(IdentityError::NotHopf { relation: i, residue });
            }
        }
        Ok(())
    }

    fn tensor_bracket(&self, a: &TensorPoly, b: &TensorPoly) -> TensorPoly {
        let mut r = self.sys.mul_tensor(a, b);
        r.sub_assign(self.ctx(), &self.sys.mul_tensor(b, a));
        r
    }

    fn t(&self, src: &str) -> TensorPoly {
        let raw = crate::freealg::parse_tensor(src, 2, self.ctx(), self.sys.gens(), &self.env)
            .expect("internal expression parses");
        self.sys.reduce_tensor(&raw)
    }
}

fn scaled(ctx: &FieldCtx, p: &NcPoly, c: Fq) -> NcPoly {
    p.scale(ctx, c)
}

/// Verifies `id` in characteristic `ctx.p()`.
pub fn verify_identity(ctx: &Arc<FieldCtx>, id: Identity) -> Result<IdentityReport, IdentityError> {
    let p = ctx.p();
    let (hyp, checks) = match id {
        Identity::GroupLikeAdPower { n } | Identity::XpMinusXSkewPrimitive { n } => {
            let h = Hypothesis::new(
                ctx,
                alloc::vec![Generator::grouplike("g", n), Generator::new("x", 1)],
                &[],
                &[format!("g^{n} = 1"), "g*x - x*g = g - g^2".into()],
            )?;
            let (g, x) = (h.p("g"), h.p("x"));
            let mut checks = Vec::new();
            if let Identity::GroupLikeAdPower { .. } = id {
                for i in 1..n {
                    let lhs = h.p(&format!("g^{i}*x"));
                    let rhs = h.p(&format!("x*g^{i} + {i}*g^{i} - {i}*g^{j}", j = i + 1));
                    checks.push(h.check(format!("g^{i}*x = x*g^{i} + {i}(g^{i} - g^{})", i + 1), &lhs, &rhs));
                }
                let gp = h.p(&format!("g - g^{p}"));
                let gx = h.r(bracket(ctx, &g, &x));
                checks.push(h.check(format!("(g)(ad_R x)^{} = g - g^{p}", p - 1), &h.ad_r(&g, &x, p - 1), &gp));
                checks.push(h.check(format!("(g)(ad_R x)^{p} = [g, x]"), &h.ad_r(&g, &x, p), &gx));
                checks.push(h.check(format!("(ad_L x)^{}(g) = g - g^{p}", p - 1), &h.ad_l(&x, &g, p - 1), &gp));
                let xg = h.r(bracket(ctx, &x, &g));
                checks.push(h.check(format!("(ad_L x)^{p}(g) = [x, g]"), &h.ad_l(&x, &g, p), &xg));
                let xp = h.sys.pow(&x, p);
                checks.push(h.check(format!("[x^{p}, g] = [x, g]"), &h.r(bracket(ctx, &xp, &g)), &xg));
            } else {
                let images = [h.t("g (#) g"), h.t("x (#) 1 + g (#) x")];
                h.require_hopf(&images)?;
                let z = h.p(&format!("x^{p} - x"));
                let lhs = h.delta(&images, &z);
                let rhs = h.t(&format!("(x^{p} - x) (#) 1 + g^{p} (#) (x^{p} - x)"));
                checks.push(h.check_tensor(format!("Delta(x^{p} - x) = (x^{p} - x) (#) 1 + g^{p} (#) (x^{p} - x)"), &lhs, &rhs));
            }
            (h, checks)
        }
        Identity::TwoGeneratorAdPower { m, l1, l2, l3 } => {
            let h = Hypothesis::new(
                ctx,
                alloc::vec![Generator::grouplike("g", m), Generator::new("x", 1), Generator::new("y", 1)],
                &[("l1", l1), ("l2", l2), ("l3", l3)],
                &[
                    format!("g^{m} = 1"),
                    "g*x - x*g = l1*(g - g^2)".into(),
                    "g*y - y*g = l2*(g - g^2)".into(),
                    "x*y - y*x + l1*y - l2*x = l3*(1 - g^2)".into(),
                ],
            )?;
            let (x, y, g2) = (h.p("x"), h.p("y"), h.p("g^2"));
            let mut checks = Vec::new();
            let xy = h.ad_r(&x, &y, 1);
            let lx = h.ad_l(&x, &y, 1);
            let neg_l1 = ctx.neg(l1);
            for k in 2..=p {
                let mut rhs = scaled(ctx, &xy, ctx.pow(l2, (k - 1) as u64));
                let mut rhs_l = scaled(ctx, &lx, ctx.pow(neg_l1, (k - 1) as u64));
                for i in 0..=k - 2 {
                    let c = ctx.neg(ctx.mul(l3, ctx.pow(l2, i as u64)));
                    rhs.add_scaled(ctx, &h.ad_r(&g2, &y, k - 1 - i), c);
                    let cl = ctx.neg(ctx.mul(l3, ctx.pow(neg_l1, i as u64)));
                    rhs_l.add_scaled(ctx, &h.ad_l(&x, &g2, k - 1 - i), cl);
                }
                checks.push(h.check(format!("(x)(ad_R y)^{k} closed form"), &h.ad_r(&x, &y, k), &rhs));
                checks.push(h.check(format!("(ad_L x)^{k}(y) closed form"), &h.ad_l(&x, &y, k), &rhs_l));
            }
            let rhs = scaled(ctx, &xy, ctx.pow(l2, (p - 1) as u64));
            checks.push(h.check(format!("(x)(ad_R y)^{p} = l2^{} (x)(ad_R y)", p - 1), &h.ad_r(&x, &y, p), &rhs));
            let rhs = scaled(ctx, &lx, ctx.pow(neg_l1, (p - 1) as u64));
            checks.push(h.check(format!("(ad_L x)^{p}(y) = (-l1)^{} (ad_L x)(y)", p - 1), &h.ad_l(&x, &y, p), &rhs));
            (h, checks)
        }
        Identity::CentralAdPower { m, l1, l3, mu } => {
            let mu_f = ctx.from_int(mu as i64);
            let h = Hypothesis::new(
                ctx,
                alloc::vec![Generator::grouplike("g", m), Generator::new("x", 1), Generator::new("y", 1)],
                &[("l1", l1), ("l3", l3), ("mu", mu_f)],
                &[
                    format!("g^{m} = 1"),
                    "g*x - x*g = l1*(g - g^2)".into(),
                    "g*y = y*g".into(),
                    format!("x*y - y*x + l1*mu*y = l3*(1 - g^{})", mu + 1),
                ],
            )?;
            let (x, y) = (h.p("x"), h.p("y"));
            let gm = h.p(&format!("g^{}", mu + 1));
            let c = ctx.neg(ctx.mul(l1, mu_f));
            let lx = h.ad_l(&x, &y, 1);
            let mut checks = Vec::new();
            for k in 2..=p {
                checks.push(h.check(format!("(x)(ad_R y)^{k} = 0"), &h.ad_r(&x, &y, k), &NcPoly::zero()));
                let mut rhs = scaled(ctx, &lx, ctx.pow(c, (k - 1) as u64));
                for i in 0..=k - 2 {
                    let ci = ctx.neg(ctx.mul(l3, ctx.pow(c, i as u64)));
                    rhs.add_scaled(ctx, &h.ad_l(&x, &gm, k - 1 - i), ci);
                }
                checks.push(h.check(format!("(ad_L x)^{k}(y) closed form"), &h.ad_l(&x, &y, k), &rhs));
            }
            let rhs = scaled(ctx, &lx, ctx.pow(c, (p - 1) as u64));
            checks.push(h.check(format!("(ad_L x)^{p}(y) = (-l1 mu)^{} (ad_L x)(y)", p - 1), &h.ad_l(&x, &y, p), &rhs));
            (h, checks)
        }
        Identity::OmegaBracket { m, theta, l2, l3 } => {
            let h = Hypothesis::new(
                ctx,
                alloc::vec![Generator::grouplike("g", m), Generator::new("x", 1), Generator::new("y", p)],
                &[("l2", l2), ("l3", l3)],
                &[
                    format!("g^{m} = 1"),
                    "g*x = x*g".into(),
                    "g*y = y*g".into(),
                    format!("x*y - y*x = l2*x + l3*(1 - g^{})", theta * (p + 1)),
                ],
            )?;
            let omega = h.sys.reduce_tensor(&coproduct_tail(ctx, 1, TailKind::OmegaTheta { g: 0, theta }).expect("prime field"));
            let y0 = h.t(&format!("y (#) 1 + g^{} (#) y", theta * p));
            let mut dy = y0.clone();
            dy.add_assign(ctx, &omega);
            let images = [h.t("g (#) g"), h.t(&format!("x (#) 1 + g^{theta} (#) x")), dy];
            h.require_hopf(&images)?;
            let mut lhs = omega.clone();
            for _ in 0..p - 1 {
                lhs = h.tensor_bracket(&lhs, &y0);
            }
            let (x, y) = (h.p("x"), h.p("y"));
            let base = h.sys.mul(&h.r(bracket(ctx, &x, &y)), &h.sys.pow(&x, p - 1));
            let z = h.ad_r(&base, &y, p - 2);
            let hw = h.p(&format!("g^{}", theta * p * p));
            // -d1_{1,h}(z) = Delta(z) - z (x) 1 - h (x) z.
            let mut rhs = h.delta(&images, &z);
            rhs.sub_assign(ctx, &TensorPoly::from_factors(ctx, &[z.clone(), NcPoly::one()]));
            rhs.sub_assign(ctx, &TensorPoly::from_factors(ctx, &[hw, z]));
            let rhs = h.sys.reduce_tensor(&rhs);
            let checks = alloc::vec![h.check_tensor(
                format!("(omega_{theta})(ad_R Delta_0(y))^{} = -d1(([x, y] x^{})(ad_R y)^{})", p - 1, p - 1, p - 2),
                &lhs,
                &rhs,
            )];
            (h, checks)
        }
    };
    Ok(IdentityReport { identity: id, p, hypothesis_confluent: hyp.confluent, degenerate: hyp.degenerate, checks })
}
