use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{make_field, FieldCtx, FieldError, Fq};
use crate::freealg::{parse_poly, parse_tensor, GenSet, Generator, Letter, NcPoly, ParseError, ScalarEnv, TensorPoly};
use crate::rewrite::{MonomialOrder, OrientError, Relation, RewriteSystem};

/// Textual description of a Hopf algebra presentation.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PresentationSpec {
    pub name: String,
    pub p: u32,
    /// Orders of the roots of unity the field must contain.
    pub orders: Vec<u32>,
    /// Forces a larger field degree; must be a multiple of the minimal one.
    pub degree: Option<u32>,
    /// Names bound to registered roots of unity, e.g. `("xi", 3)`.
    pub roots: Vec<(String, u32)>,
    /// Further named constants, as field element literals (`3`, `w^2`).
    pub scalars: Vec<(String, String)>,
    pub generators: Vec<Generator>,
    /// Generator names from lowest to highest precedence.
    pub precedence: Option<Vec<String>>,
    /// Affine maps per generator name; weight-length-lex when empty.
    pub affine: Vec<(String, (u64, u64))>,
    /// `lhs = rhs` or a polynomial that must vanish.
    pub relations: Vec<String>,
    pub coproduct: Vec<(String, String)>,
    pub counit: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresentationError {
    Field(FieldError),
    Parse { what: String, err: ParseError },
    Orient(OrientError),
    UnknownGenerator(String),
    MissingCoproduct(String),
    BadScalar(String),
    BadPrecedence,
}

impl fmt::Display for PresentationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationError::Field(e) => write!(f, "field: {e}"),
            PresentationError::Parse { what, err } => write!(f, "{what}: {err}"),
            PresentationError::Orient(e) => write!(f, "{e}"),
            PresentationError::UnknownGenerator(g) => write!(f, "unknown generator `{g}`"),
            PresentationError::MissingCoproduct(g) => write!(f, "no coproduct given for `{g}`"),
            PresentationError::BadScalar(s) => write!(f, "cannot read field element `{s}`"),
            PresentationError::BadPrecedence => write!(f, "precedence must list every generator once"),
        }
    }
}

impl core::error::Error for PresentationError {}

impl From<FieldError> for PresentationError {
    fn from(e: FieldError) -> Self {
        PresentationError::Field(e)
    }
}

impl From<OrientError> for PresentationError {
    fn from(e: OrientError) -> Self {
        PresentationError::Orient(e)
    }
}

/// Generators, oriented relations, coproduct and counit on generators.
#[derive(Clone, Debug)]
pub struct HopfPresentation {
    pub name: String,
    pub sys: RewriteSystem,
    /// Rank-2 tensor per generator.
    pub coproduct: Vec<TensorPoly>,
    pub counit: Vec<Fq>,
    pub env: ScalarEnv,
}

impl HopfPresentation {
    pub fn ctx(&self) -> &FieldCtx {
        self.sys.ctx()
    }

    pub fn gens(&self) -> &GenSet {
        self.sys.gens()
    }

    pub fn parse(&self, src: &str) -> Result<NcPoly, ParseError> {
        parse_poly(src, self.ctx(), self.gens(), &self.env)
    }

    pub fn parse_tensor(&self, src: &str, rank: usize) -> Result<TensorPoly, ParseError> {
        parse_tensor(src, rank, self.ctx(), self.gens(), &self.env)
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.gens().index(name)
    }
}

impl PresentationSpec {
    pub fn field(&self) -> Result<FieldCtx, FieldError> {
        let base = make_field(self.p, &self.orders)?;
        match self.degree {
            Some(k) if k != base.k() => FieldCtx::with_degree(self.p, k, &self.orders),
            _ => Ok(base),
        }
    }

    pub fn build(&self) -> Result<HopfPresentation, PresentationError> {
        let ctx = Arc::new(self.field()?);
        self.build_in(ctx)
    }

    /// Builds over a given field, which must contain the required roots.
    pub fn build_in(&self, ctx: Arc<FieldCtx>) -> Result<HopfPresentation, PresentationError> {
        let gens = match &self.precedence {
            Some(pr) => {
                let names: Vec<&str> = pr.iter().map(|s| s.as_str()).collect();
                GenSet::with_precedence(self.generators.clone(), &names)
                    .ok_or(PresentationError::BadPrecedence)?
            }
            None => GenSet::new(self.generators.clone()),
        };
        let mut env = ScalarEnv::for_field(&ctx);
        let default_names = ["xi", "zeta", "theta"];
        if self.roots.is_empty() {
            for (name, &n) in default_names.iter().zip(&self.orders) {
                env.set(name, ctx.root_of_unity(n)?);
            }
        }
        for (name, n) in &self.roots {
            env.set(name, ctx.root_of_unity(*n)?);
        }
        for (name, lit) in &self.scalars {
            let v = ctx.parse_element(lit).ok_or_else(|| PresentationError::BadScalar(lit.clone()))?;
            env.set(name, v);
        }
        let order = if self.affine.is_empty() {
            MonomialOrder::wll(gens.clone())
        } else {
            let mut maps = alloc::vec![(1u64, 1u64); gens.len()];
            for (name, m) in &self.affine {
                let l = gens.index(name).ok_or_else(|| PresentationError::UnknownGenerator(name.clone()))?;
                maps[l as usize] = *m;
            }
            MonomialOrder::affine(gens.clone(), maps)
        };
        let parse = |what: &str, src: &str| {
            parse_poly(src, &ctx, &gens, &env)
                .map_err(|err| PresentationError::Parse { what: what.to_string(), err })
        };
        let mut rels = Vec::with_capacity(self.relations.len());
        for (i, r) in self.relations.iter().enumerate() {
            let what = format!("relation {i}");
            match r.split_once('=') {
                Some((l, rr)) => {
                    let lhs = parse(&what, l)?;
                    let rhs = parse(&what, rr)?;
                    let head = match lhs.len() {
                        1 => {
                            let (w, c) = lhs.terms().next().unwrap();
                            (c == Fq::ONE).then(|| w.clone())
                        }
                        _ => None,
                    };
                    match head {
                        Some(h) => rels.push(Relation::oriented(&ctx, h, &rhs)),
                        None => rels.push(Relation::new(NcPoly::diff(&ctx, &lhs, &rhs))),
                    }
                }
                None => rels.push(Relation::new(parse(&what, r)?)),
            }
        }
        let sys = RewriteSystem::orient(ctx.clone(), order, &rels)?;
        let n = gens.len();
        let mut coproduct: Vec<Option<TensorPoly>> = alloc::vec![None; n];
        let mut counit: Vec<Option<Fq>> = alloc::vec![None; n];
        for (name, src) in &self.coproduct {
            let l = gens.index(name).ok_or_else(|| PresentationError::UnknownGenerator(name.clone()))?;
            let t = parse_tensor(src, 2, &ctx, &gens, &env)
                .map_err(|err| PresentationError::Parse { what: format!("coproduct of {name}"), err })?;
            coproduct[l as usize] = Some(t);
        }
        for (name, src) in &self.counit {
            let l = gens.index(name).ok_or_else(|| PresentationError::UnknownGenerator(name.clone()))?;
            let v = parse(&format!("counit of {name}"), src)?;
            let c = v.as_scalar().ok_or_else(|| PresentationError::BadScalar(src.clone()))?;
            counit[l as usize] = Some(c);
        }
        let mut cop = Vec::with_capacity(n);
        let mut eps = Vec::with_capacity(n);
        for (i, g) in gens.gens().iter().enumerate() {
            let l = i as Letter;
            let d = match coproduct[i].take() {
                Some(t) => t,
                None if g.grouplike => {
                    let w = NcPoly::gen(l);
                    TensorPoly::from_factors(&ctx, &[w.clone(), w])
                }
                None => return Err(PresentationError::MissingCoproduct(g.name.clone())),
            };
            cop.push(d);
            eps.push(counit[i].unwrap_or(if g.grouplike { Fq::ONE } else { Fq::ZERO }));
        }
        Ok(HopfPresentation { name: self.name.clone(), sys, coproduct: cop, counit: eps, env })
    }
}
