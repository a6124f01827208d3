use alloc::vec::Vec;

use super::bialgebra::HopfAlgebra;
use crate::field::Fq;
use crate::freealg::{Letter, NcPoly, Word};
use crate::linalg::{add_entry, kernel, unit, Echelon, SparseVec};

/// `P_{g,h} = { v : Delta v = v (x) g + h (x) v }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewPrimitiveSpace {
    pub g: usize,
    pub h: usize,
    pub basis: Vec<SparseVec>,
}

impl SkewPrimitiveSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Dimension beyond the trivial part `K(g - h)`.
    pub fn nontrivial_dim(&self) -> usize {
        self.basis.len() - usize::from(self.g != self.h)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupLikes {
    /// Basis indices of the group-word normal forms that are group-like.
    pub elements: Vec<usize>,
    /// The coradical filtration started from their span exhausts the algebra,
    /// so no other group-likes exist.
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationReport {
    /// `dim C_0 < dim C_1 < ...`, ending at the dimension of the algebra when it exhausts.
    pub dims: Vec<usize>,
    /// Least `n` with the basis word in `C_n`; `None` when the filtration stalls below it.
    pub level_of: Vec<Option<usize>>,
    pub exhausts: bool,
    /// `dim C_1 = |G| + sum over (g, h) of dim P_{g,h} / K(g - h)`.
    pub taft_wilson: Option<bool>,
}

impl FiltrationReport {
    pub fn level_of_word(&self, h: &HopfAlgebra, w: &[Letter]) -> Option<usize> {
        h.alg.index_of(w).and_then(|i| self.level_of[i])
    }
}

impl HopfAlgebra {
    pub fn is_grouplike(&self, v: &SparseVec) -> bool {
        let d = self.dim();
        let ctx = self.ctx();
        let mut sq = SparseVec::new();
        for (&i, &a) in v {
            for (&j, &b) in v {
                add_entry(ctx, &mut sq, i * d + j, ctx.mul(a, b));
            }
        }
        self.delta(v) == sq && self.counit(v) == Fq::ONE
    }

    /// Group-word basis elements that are group-like, certified by the filtration.
    pub fn group_likes(&self) -> GroupLikes {
        let gens = self.pres.gens();
        let elements: Vec<usize> = (0..self.dim())
            .filter(|&i| gens.is_group_word(&self.alg.basis()[i]) && self.is_grouplike(&unit(i)))
            .collect();
        let c0: Vec<SparseVec> = elements.iter().map(|&i| unit(i)).collect();
        let certified = self.filtration_from(&c0).exhausts;
        GroupLikes { elements, certified }
    }

    pub fn skew_primitives(&self, g: usize, h: usize) -> SkewPrimitiveSpace {
        let ctx = self.ctx();
        let d = self.dim();
        let minus = ctx.neg(Fq::ONE);
        let cols: Vec<SparseVec> = (0..d)
            .map(|i| {
                let mut c = self.delta_basis(i).clone();
                add_entry(ctx, &mut c, i * d + g, minus);
                add_entry(ctx, &mut c, h * d + i, minus);
                c
            })
            .collect();
        SkewPrimitiveSpace { g, h, basis: kernel(ctx, &cols) }
    }

    /// Skew-primitive space for group words, by normal form.
    pub fn skew_primitives_words(&self, g: &[Letter], h: &[Letter]) -> Option<SkewPrimitiveSpace> {
        let gi = self.index_of_reduced(g)?;
        let hi = self.index_of_reduced(h)?;
        Some(self.skew_primitives(gi, hi))
    }

    fn index_of_reduced(&self, w: &[Letter]) -> Option<usize> {
        let v = self.alg.eval_word(w);
        match v.iter().collect::<Vec<_>>()[..] {
            [(&i, &c)] if c == Fq::ONE => Some(i),
            _ => None,
        }
    }

    /// `X ^ Y = Delta^-1(X (x) H + H (x) Y)`.
    pub fn wedge(&self, x: &Echelon, y: &Echelon) -> Vec<SparseVec> {
        let ctx = self.ctx();
        let d = self.dim();
        let px: Vec<SparseVec> = (0..d).map(|a| x.reduce(ctx, &unit(a))).collect();
        let py: Vec<SparseVec> = (0..d).map(|b| y.reduce(ctx, &unit(b))).collect();
        let cols: Vec<SparseVec> = (0..d)
            .map(|i| {
                let mut c = SparseVec::new();
                for (&idx, &e) in self.delta_basis(i) {
                    let (a, b) = (idx / d, idx % d);
                    for (&ra, &ca) in &px[a] {
                        for (&rb, &cb) in &py[b] {
                            add_entry(ctx, &mut c, ra * d + rb, ctx.mul(e, ctx.mul(ca, cb)));
                        }
                    }
                }
                c
            })
            .collect();
        kernel(ctx, &cols)
    }

    fn filtration_from(&self, c0: &[SparseVec]) -> FiltrationReport {
        let ctx = self.ctx();
        let d = self.dim();
        let mut base = Echelon::new();
        for v in c0 {
            base.insert(ctx, v);
        }
        let mut level_of = alloc::vec![None; d];
        let mark = |e: &Echelon, n: usize, level_of: &mut Vec<Option<usize>>| {
            for (i, slot) in level_of.iter_mut().enumerate() {
                if slot.is_none() && e.contains(ctx, &unit(i)) {
                    *slot = Some(n);
                }
            }
        };
        mark(&base, 0, &mut level_of);
        let mut dims = alloc::vec![base.rank()];
        let mut cur = base.clone();
        while cur.rank() < d {
            let mut next = Echelon::new();
            for v in self.wedge(&base, &cur) {
                next.insert(ctx, &v);
            }
            if next.rank() <= cur.rank() {
                break;
            }
            cur = next;
            mark(&cur, dims.len(), &mut level_of);
            dims.push(cur.rank());
        }
        let exhausts = cur.rank() == d;
        FiltrationReport { dims, level_of, exhausts, taft_wilson: None }
    }

    /// Filtration from the group-likes, with the Taft-Wilson level-one check.
    pub fn coradical_filtration(&self) -> FiltrationReport {
        let gl = self.group_likes();
        let c0: Vec<SparseVec> = gl.elements.iter().map(|&i| unit(i)).collect();
        let mut rep = self.filtration_from(&c0);
        if rep.exhausts && rep.dims.len() > 1 {
            let mut expected = gl.elements.len();
            for &g in &gl.elements {
                for &h in &gl.elements {
                    expected += self.skew_primitives(g, h).nontrivial_dim();
                }
            }
            rep.taft_wilson = Some(expected == rep.dims[1]);
        }
        rep
    }

    pub fn to_poly(&self, v: &SparseVec) -> NcPoly {
        self.alg.poly(v)
    }

    pub fn basis_word(&self, i: usize) -> &Word {
        &self.alg.basis()[i]
    }
}
