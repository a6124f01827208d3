use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::bialgebra::{HopfAlgebra, HopfError};
use super::presentation::{PresentationError, PresentationSpec};
use crate::field::{FieldCtx, FieldError, Fq};
use crate::freealg::{Generator, NcPoly};
use crate::linalg::{add_entry, axpy, rank, SparseVec};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IsoReport {
    pub relation_failures: Vec<usize>,
    pub coproduct_failures: Vec<String>,
    pub counit_failures: Vec<String>,
    pub rank: usize,
    pub dims: (usize, usize),
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.relation_failures.is_empty()
            && self.coproduct_failures.is_empty()
            && self.counit_failures.is_empty()
            && self.rank == self.dims.0
            && self.dims.0 == self.dims.1
    }
}

/// Checks that generator images `phi` (polynomials over the target's
/// generators) define a bijective Hopf algebra map. Both sides share a field.
pub fn iso_check(h1: &HopfAlgebra, h2: &HopfAlgebra, phi: &[NcPoly]) -> IsoReport {
    let ctx = h2.ctx();
    let d2 = h2.dim();
    let images: Vec<SparseVec> = phi.iter().map(|p| h2.alg.eval(p)).collect();
    let map_word = |w: &[u8]| -> SparseVec {
        let mut acc = h2.alg.unit();
        for &l in w {
            acc = h2.alg.mul(&acc, &images[l as usize]);
            if acc.is_empty() {
                break;
            }
        }
        acc
    };
    let map_poly = |p: &NcPoly| -> SparseVec {
        let mut out = SparseVec::new();
        for (w, c) in p.terms() {
            axpy(ctx, &mut out, c, &map_word(w));
        }
        out
    };
    let mut rep = IsoReport { dims: (h1.dim(), d2), ..IsoReport::default() };
    for (i, r) in h1.pres.sys.relations().iter().enumerate() {
        if !map_poly(r).is_empty() {
            rep.relation_failures.push(i);
        }
    }
    let gens = h1.pres.gens();
    for (l, img) in images.iter().enumerate() {
        let name = gens.get(l as u8).name.clone();
        let lhs = h2.delta(img);
        let mut rhs = SparseVec::new();
        for (ws, c) in h1.pres.coproduct[l].terms() {
            let a = map_word(&ws[0]);
            let b = map_word(&ws[1]);
            for (&i, &ca) in &a {
                for (&j, &cb) in &b {
                    add_entry(ctx, &mut rhs, i * d2 + j, ctx.mul(c, ctx.mul(ca, cb)));
                }
            }
        }
        if lhs != rhs {
            rep.coproduct_failures.push(name.clone());
        }
        if h2.counit(img) != h1.pres.counit[l] {
            rep.counit_failures.push(name);
        }
    }
    let cols: Vec<SparseVec> = h1.alg.basis().iter().map(|w| map_word(w)).collect();
    rep.rank = rank(ctx, &cols);
    rep
}

/// Families of `(g, x)` Hopf algebras with `g` group-like and `x` in `P_{1,g}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PqFamily {
    /// `g^(pq) = 1, gx - xg = g - g^2, x^p - x = lambda(1 - g^p)`.
    A,
    /// `g^q = 1, gx = xg, x^p - x = lambda(1 - g^p)`; needs `q | p - 1`.
    B,
}

impl PqFamily {
    pub fn group_order(self, p: u32, q: u32) -> u32 {
        match self {
            PqFamily::A => p * q,
            PqFamily::B => q,
        }
    }

    pub fn dimension(self, p: u32, q: u32) -> u32 {
        self.group_order(p, q) * p
    }

    /// Presentation over `ctx` with the parameter bound to `lambda`.
    pub fn spec(self, ctx: &FieldCtx, q: u32, lambda: Fq) -> PresentationSpec {
        let p = ctx.p();
        let n = self.group_order(p, q);
        let comm = match self {
            PqFamily::A => "g*x - x*g = g - g^2",
            PqFamily::B => "g*x = x*g",
        };
        PresentationSpec {
            name: format!("{self:?}(lambda)"),
            p,
            degree: Some(ctx.k()),
            scalars: alloc::vec![("lambda".into(), format!("{}", ctx.display(lambda)))],
            generators: alloc::vec![Generator::grouplike("g", n), Generator::new("x", 1)],
            relations: alloc::vec![
                format!("g^{n} = 1"),
                comm.into(),
                format!("x^{p} - x - lambda*(1 - g^{p})"),
            ],
            coproduct: alloc::vec![("x".into(), "x (#) 1 + g (#) x".into())],
            ..PresentationSpec::default()
        }
    }

    /// Whether `x -> a(1 - g') + b x'`, `g -> g'` can map the `lambda` algebra onto the `gamma` one.
    pub fn witness_equation(self, ctx: &FieldCtx, a: Fq, b: Fq, lambda: Fq, gamma: Fq) -> bool {
        let p = ctx.p() as u64;
        let lhs = ctx.add(ctx.sub(ctx.pow(a, p), a), ctx.mul(ctx.pow(b, p), gamma));
        let b_ok = match self {
            PqFamily::A => b == Fq::ONE,
            PqFamily::B => !b.is_zero() && ctx.pow(b, p) == b,
        };
        b_ok && lhs == lambda
    }
}

#[derive(Clone, Debug)]
pub struct PqIsoWitness {
    pub a: Fq,
    pub b: Fq,
    /// Field in which the witness lives.
    pub field: Arc<FieldCtx>,
    pub report: IsoReport,
}

#[derive(Clone, Debug)]
pub enum PqIsoError {
    NoWitness { max_degree: u32 },
    Field(FieldError),
    Presentation(PresentationError),
    Hopf(HopfError),
    /// A witness solved the equation but the map failed verification.
    Rejected { a: Fq, b: Fq, report: IsoReport },
}

impl fmt::Display for PqIsoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PqIsoError::NoWitness { max_degree } => {
                write!(f, "no witness in any extension of degree at most {max_degree}")
            }
            PqIsoError::Field(e) => write!(f, "{e}"),
            PqIsoError::Presentation(e) => write!(f, "{e}"),
            PqIsoError::Hopf(e) => write!(f, "{e}"),
            PqIsoError::Rejected { .. } => write!(f, "candidate map is not a Hopf isomorphism"),
        }
    }
}

impl core::error::Error for PqIsoError {}

/// Largest basis built while verifying a family isomorphism.
const FAMILY_LIMIT: usize = 4096;

/// Scans `GF(p^k)` for a witness, passing to larger `k` (multiples of the
/// starting degree, up to `max_degree`) when none exists, and confirms the
/// resulting map with [`iso_check`].
pub fn find_pq_iso(
    family: PqFamily,
    ctx: &Arc<FieldCtx>,
    q: u32,
    lambda: Fq,
    gamma: Fq,
    max_degree: u32,
) -> Result<PqIsoWitness, PqIsoError> {
    let p = ctx.p();
    let mut k = ctx.k();
    while k <= max_degree {
        let big = if k == ctx.k() {
            ctx.clone()
        } else {
            Arc::new(FieldCtx::with_degree(p, k, &[]).map_err(PqIsoError::Field)?)
        };
        let emb = ctx.embedding_into(&big).expect("degree is a multiple");
        let (l, g) = (emb.apply(lambda), emb.apply(gamma));
        let bs: Vec<Fq> = big.elements().filter(|&b| !b.is_zero() && big.pow(b, p as u64) == b).collect();
        let found = big
            .elements()
            .flat_map(|a| bs.iter().map(move |&b| (a, b)))
            .find(|&(a, b)| family.witness_equation(&big, a, b, l, g));
        if let Some((a, b)) = found {
            let build = |v: Fq| -> Result<HopfAlgebra, PqIsoError> {
                let pres = family.spec(&big, q, v).build_in(big.clone()).map_err(PqIsoError::Presentation)?;
                HopfAlgebra::new(pres, FAMILY_LIMIT).map_err(PqIsoError::Hopf)
            };
            let h1 = build(l)?;
            let h2 = build(g)?;
            let mut x_img = NcPoly::zero();
            x_img.add_term(&big, Vec::new(), a);
            x_img.add_term(&big, alloc::vec![0], big.neg(a));
            x_img.add_term(&big, alloc::vec![1], b);
            let phi = [NcPoly::gen(0), x_img];
            let report = iso_check(&h1, &h2, &phi);
            if !report.passed() {
                return Err(PqIsoError::Rejected { a, b, report });
            }
            return Ok(PqIsoWitness { a, b, field: big, report });
        }
        k += ctx.k();
    }
    Err(PqIsoError::NoWitness { max_degree })
}
