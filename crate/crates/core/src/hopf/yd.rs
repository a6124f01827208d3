//! Yetter-Drinfeld data over an abelian-by-cyclic group and the bosonization
//! `R # K[G]` of a braided algebra generated by homogeneous elements.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::presentation::PresentationSpec;
use crate::field::{FieldCtx, Fq};
use crate::freealg::{parse_poly, GenSet, Generator, ParseError, ScalarEnv};

/// Group given by group-like generators of finite order and extra relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdGroup {
    pub gens: Vec<(String, u32)>,
    /// Relations among group generators, in presentation syntax.
    pub relations: Vec<String>,
}

/// Homogeneous element of `V` with coaction degree `prod g_k^degree[k]` and
/// action `g_k . x = character[k] x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdElement {
    pub name: String,
    pub weight: u32,
    pub degree: Vec<u32>,
    pub character: Vec<Fq>,
    /// Extra coproduct terms beyond `x (x) 1 + deg(x) (x) x`.
    pub tail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDRealization {
    pub group: YdGroup,
    pub elements: Vec<YdElement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum YdError {
    Arity(String),
    /// `character^order != 1` for the named element and group generator.
    CharacterOrder { element: String, gen: String },
    /// A group relation is not respected by the character.
    GroupRelation { element: String, relation: usize },
    Parse(ParseError),
}

impl fmt::Display for YdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            YdError::Arity(x) => write!(f, "degree or character of `{x}` has the wrong length"),
            YdError::CharacterOrder { element, gen } => {
                write!(f, "character of `{element}` at `{gen}` is not a root of the right order")
            }
            YdError::GroupRelation { element, relation } => {
                write!(f, "character of `{element}` violates group relation {relation}")
            }
            YdError::Parse(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for YdError {}

impl YDRealization {
    fn group_set(&self) -> GenSet {
        GenSet::new(self.group.gens.iter().map(|(n, o)| Generator::grouplike(n, *o)).collect())
    }

    /// Braiding scalar `chi_j(deg x_i)` of `c(x_i (x) x_j) = chi_j(deg x_i) x_j (x) x_i`.
    pub fn braiding(&self, ctx: &FieldCtx, i: usize, j: usize) -> Fq {
        let di = &self.elements[i].degree;
        let cj = &self.elements[j].character;
        di.iter().zip(cj).fold(Fq::ONE, |acc, (&e, &c)| ctx.mul(acc, ctx.pow(c, e as u64)))
    }

    pub fn validate(&self, ctx: &FieldCtx) -> Result<(), YdError> {
        let gs = self.group_set();
        let env = ScalarEnv::for_field(ctx);
        let rels = self
            .group
            .relations
            .iter()
            .map(|r| {
                let src = match r.split_once('=') {
                    Some((l, rr)) => format!("{l} - ({rr})"),
                    None => r.clone(),
                };
                parse_poly(&src, ctx, &gs, &env).map_err(YdError::Parse)
            })
            .collect::<Result<Vec<_>, _>>()?;
        for x in &self.elements {
            let n = self.group.gens.len();
            if x.degree.len() != n || x.character.len() != n {
                return Err(YdError::Arity(x.name.clone()));
            }
            for ((gname, ord), &c) in self.group.gens.iter().zip(&x.character) {
                if c.is_zero() || ctx.pow(c, *ord as u64) != Fq::ONE {
                    return Err(YdError::CharacterOrder { element: x.name.clone(), gen: gname.clone() });
                }
            }
            let chi = |w: &[u8]| w.iter().fold(Fq::ONE, |acc, &l| ctx.mul(acc, x.character[l as usize]));
            for (ri, r) in rels.iter().enumerate() {
                // A character is constant on the monomials of a group relation.
                let sum = r.terms().fold(Fq::ZERO, |acc, (w, c)| ctx.add(acc, ctx.mul(c, chi(w))));
                if !sum.is_zero() {
                    return Err(YdError::GroupRelation { element: x.name.clone(), relation: ri });
                }
            }
        }
        Ok(())
    }

    fn degree_word(&self, x: &YdElement) -> String {
        let parts: Vec<String> = self
            .group
            .gens
            .iter()
            .zip(&x.degree)
            .filter(|(_, &e)| e > 0)
            .map(|((n, _), &e)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            String::from("1")
        } else {
            parts.join("*")
        }
    }
}

/// `R # K[G]` for `R` generated by the realization's elements subject to
/// `nichols_relations`: group relations, `g x = chi_x(g) x g`, the relations
/// of `R`, and `Delta(x) = x (x) 1 + deg(x) (x) x` plus any declared tail.
pub fn bosonize(
    ctx: &FieldCtx,
    name: &str,
    nichols_relations: &[String],
    yd: &YDRealization,
) -> Result<PresentationSpec, YdError> {
    yd.validate(ctx)?;
    let mut spec = PresentationSpec {
        name: name.into(),
        p: ctx.p(),
        degree: Some(ctx.k()),
        ..PresentationSpec::default()
    };
    for (g, ord) in &yd.group.gens {
        spec.generators.push(Generator::grouplike(g, *ord));
        spec.relations.push(format!("{g}^{ord} = 1"));
    }
    spec.relations.extend(yd.group.relations.iter().cloned());
    for x in &yd.elements {
        spec.generators.push(Generator::new(&x.name, x.weight));
    }
    for x in &yd.elements {
        for ((g, _), &c) in yd.group.gens.iter().zip(&x.character) {
            let s = format!("chi_{}_{}", x.name, g);
            spec.scalars.push((s.clone(), format!("{}", ctx.display(c))));
            spec.relations.push(format!("{g}*{x} = {s}*{x}*{g}", x = x.name));
        }
    }
    spec.relations.extend(nichols_relations.iter().cloned());
    for x in &yd.elements {
        let mut d = format!("{x} (#) 1 + {deg} (#) {x}", x = x.name, deg = yd.degree_word(x));
        if let Some(t) = &x.tail {
            d.push_str(" + ");
            d.push_str(t);
        }
        spec.coproduct.push((x.name.clone(), d));
    }
    Ok(spec)
}
