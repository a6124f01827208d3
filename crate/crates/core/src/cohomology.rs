//! Hochschild cohomology of a finite-dimensional coalgebra `C` with
//! coefficients in the one-dimensional bicomodule `gK^h`, where `g`, `h` are
//! group-like basis elements. Cochains of degree `n` live in `C^(x)n`, indexed
//! in mixed radix with the first tensor factor most significant.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{FieldCtx, Fq};
use crate::hopf::HopfAlgebra;
use crate::linalg::{add_entry, axpy, unit, Echelon, SparseVec};

/// Largest tensor power dimension built unless the caller says otherwise.
pub const DEFAULT_BUDGET: usize = 1 << 20;

/// Highest cochain degree a complex is built to.
pub const MAX_DEGREE: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohomologyError {
    /// The basis element is not group-like.
    NotGroupLike(usize),
    IndexOutOfRange(usize),
    /// `dim C^(x)(n+1)` exceeds the budget.
    BudgetExceeded { required: usize, budget: usize },
    DegreeTooLarge(usize),
    /// `d^(n+1) d^n != 0`, so the coproduct is not coassociative.
    NotAComplex(usize),
    /// The coproduct does not preserve weight, or `g`, `h` have nonzero weight.
    NotGraded,
    /// The coproduct of this basis element leaves the subset.
    NotSubcoalgebra(usize),
    Shape,
}

impl fmt::Display for CohomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohomologyError::NotGroupLike(i) => write!(f, "basis element {i} is not group-like"),
            CohomologyError::IndexOutOfRange(i) => write!(f, "basis index {i} out of range"),
            CohomologyError::BudgetExceeded { required, budget } => {
                write!(f, "tensor power of dimension {required} exceeds budget {budget}")
            }
            CohomologyError::DegreeTooLarge(n) => write!(f, "degree {n} exceeds the maximum {MAX_DEGREE}"),
            CohomologyError::NotAComplex(n) => write!(f, "d^{} d^{n} is nonzero", n + 1),
            CohomologyError::NotGraded => write!(f, "coalgebra is not graded by weight"),
            CohomologyError::NotSubcoalgebra(i) => write!(f, "coproduct of basis element {i} leaves the subset"),
            CohomologyError::Shape => write!(f, "coproduct, counit and weight tables disagree in length"),
        }
    }
}

impl core::error::Error for CohomologyError {}

/// Basis, coproduct and counit tables. `delta[i]` is indexed by `a * dim + b`.
#[derive(Clone, Debug)]
pub struct Coalgebra {
    ctx: Arc<FieldCtx>,
    delta: Vec<SparseVec>,
    counit: Vec<Fq>,
    weights: Vec<u64>,
}

impl Coalgebra {
    pub fn new(
        ctx: Arc<FieldCtx>,
        delta: Vec<SparseVec>,
        counit: Vec<Fq>,
        weights: Vec<u64>,
    ) -> Result<Self, CohomologyError> {
        let d = delta.len();
        if counit.len() != d || weights.len() != d || delta.iter().any(|v| v.keys().any(|&k| k >= d * d)) {
            return Err(CohomologyError::Shape);
        }
        Ok(Coalgebra { ctx, delta, counit, weights })
    }

    /// Underlying coalgebra, graded by the weight of normal words.
    pub fn from_hopf(h: &HopfAlgebra) -> Self {
        let gens = h.pres.gens();
        Coalgebra {
            ctx: h.pres.sys.ctx_arc().clone(),
            delta: (0..h.dim()).map(|i| h.delta_basis(i).clone()).collect(),
            counit: (0..h.dim()).map(|i| h.counit_basis(i)).collect(),
            weights: h.alg.basis().iter().map(|w| gens.weight(w)).collect(),
        }
    }

    /// `K[x]/(x^n)` with `x` primitive: `Delta x^i = sum_j binom(i, j) x^j (x) x^(i-j)`.
    /// Basis element `i` is `x^i` of weight `i`.
    pub fn truncated_polynomial(ctx: Arc<FieldCtx>, n: usize) -> Self {
        let mut row = alloc::vec![Fq::ONE];
        let mut delta = Vec::with_capacity(n);
        for i in 0..n {
            let mut v = SparseVec::new();
            for (j, &c) in row.iter().enumerate() {
                add_entry(&ctx, &mut v, j * n + (i - j), c);
            }
            delta.push(v);
            let mut next = alloc::vec![Fq::ONE; i + 2];
            for j in 1..=i {
                next[j] = ctx.add(row[j - 1], row[j]);
            }
            row = next;
        }
        let mut counit = alloc::vec![Fq::ZERO; n];
        if n > 0 {
            counit[0] = Fq::ONE;
        }
        Coalgebra { ctx, delta, counit, weights: (0..n as u64).collect() }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.delta.len()
    }

    pub fn delta_basis(&self, i: usize) -> &SparseVec {
        &self.delta[i]
    }

    pub fn counit_basis(&self, i: usize) -> Fq {
        self.counit[i]
    }

    pub fn weight(&self, i: usize) -> u64 {
        self.weights[i]
    }

    pub fn is_grouplike(&self, i: usize) -> bool {
        i < self.dim() && self.delta[i] == unit(i * self.dim() + i) && self.counit[i] == Fq::ONE
    }

    /// Every basis coproduct is homogeneous of the element's weight.
    pub fn is_graded(&self) -> bool {
        let d = self.dim();
        self.delta
            .iter()
            .enumerate()
            .all(|(i, v)| v.keys().all(|&k| self.weights[k / d] + self.weights[k % d] == self.weights[i]))
    }

    /// The span of a subset of basis elements, reindexed in the given order.
    pub fn subcoalgebra(&self, subset: &[usize]) -> Result<Coalgebra, CohomologyError> {
        let d = self.dim();
        let mut pos = alloc::vec![None; d];
        for (k, &i) in subset.iter().enumerate() {
            *pos.get_mut(i).ok_or(CohomologyError::IndexOutOfRange(i))? = Some(k);
        }
        let m = subset.len();
        let mut delta = Vec::with_capacity(m);
        for &i in subset {
            let mut v = SparseVec::new();
            for (&k, &c) in &self.delta[i] {
                match (pos[k / d], pos[k % d]) {
                    (Some(a), Some(b)) => {
                        v.insert(a * m + b, c);
                    }
                    _ => return Err(CohomologyError::NotSubcoalgebra(i)),
                }
            }
            delta.push(v);
        }
        Ok(Coalgebra {
            ctx: self.ctx.clone(),
            delta,
            counit: subset.iter().map(|&i| self.counit[i]).collect(),
            weights: subset.iter().map(|&i| self.weights[i]).collect(),
        })
    }

    fn power_dim(&self, n: usize, budget: usize) -> Result<usize, CohomologyError> {
        let required = self.dim().checked_pow(n as u32).unwrap_or(usize::MAX);
        if required > budget {
            return Err(CohomologyError::BudgetExceeded { required, budget });
        }
        Ok(required)
    }

    fn tensor_weight(&self, mut idx: usize, n: usize) -> u64 {
        let d = self.dim();
        let mut w = 0;
        for _ in 0..n {
            w += self.weights[idx % d];
            idx /= d;
        }
        w
    }
}

/// The bicomodule `gK^h`: left coaction by `h`, right coaction by `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BicomoduleSpec {
    pub g: usize,
    pub h: usize,
}

impl BicomoduleSpec {
    pub fn new(g: usize, h: usize) -> Self {
        BicomoduleSpec { g, h }
    }

    fn validate(&self, c: &Coalgebra) -> Result<(), CohomologyError> {
        for i in [self.g, self.h] {
            if i >= c.dim() {
                return Err(CohomologyError::IndexOutOfRange(i));
            }
            if !c.is_grouplike(i) {
                return Err(CohomologyError::NotGroupLike(i));
            }
        }
        Ok(())
    }
}

fn digits(mut idx: usize, n: usize, d: usize) -> Vec<usize> {
    let mut out = alloc::vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = idx % d;
        idx /= d;
    }
    out
}

fn encode(ds: impl IntoIterator<Item = usize>, d: usize) -> usize {
    ds.into_iter().fold(0, |acc, x| acc * d + x)
}

/// `sum_{i<n} (-1)^(i+1) (I_i (x) D (x) I_(n-i-1))` applied to a basis tensor,
/// with `D` given by its basis images in `C'^(x)2` of radix `d`.
fn inner_faces(ctx: &FieldCtx, delta: &[SparseVec], d: usize, xs: &[usize], out: &mut SparseVec) {
    let minus = ctx.neg(Fq::ONE);
    for (i, &x) in xs.iter().enumerate() {
        let sign = if i % 2 == 0 { minus } else { Fq::ONE };
        for (&k, &c) in &delta[x] {
            let idx = encode(xs[..i].iter().copied().chain([k / d, k % d]).chain(xs[i + 1..].iter().copied()), d);
            add_entry(ctx, out, idx, ctx.mul(sign, c));
        }
    }
}

/// Columns of `d^n_{g,h} : C^(x)n -> C^(x)(n+1)`; `d^0(1) = g - h`.
pub fn differential_matrix(
    c: &Coalgebra,
    spec: BicomoduleSpec,
    n: usize,
    budget: usize,
) -> Result<Vec<SparseVec>, CohomologyError> {
    spec.validate(c)?;
    if n > MAX_DEGREE {
        return Err(CohomologyError::DegreeTooLarge(n));
    }
    let ctx = c.ctx();
    let d = c.dim();
    c.power_dim(n + 1, budget)?;
    let src = c.power_dim(n, budget)?;
    let dn = d.pow(n as u32);
    let minus = ctx.neg(Fq::ONE);
    let last = if n % 2 == 0 { minus } else { Fq::ONE };
    let cols = (0..src)
        .map(|idx| {
            let mut col = SparseVec::new();
            if n == 0 {
                add_entry(ctx, &mut col, spec.g, Fq::ONE);
                add_entry(ctx, &mut col, spec.h, minus);
                return col;
            }
            add_entry(ctx, &mut col, spec.h * dn + idx, Fq::ONE);
            inner_faces(ctx, &c.delta, d, &digits(idx, n, d), &mut col);
            add_entry(ctx, &mut col, idx * d + spec.g, last);
            col
        })
        .collect();
    Ok(cols)
}

fn apply(ctx: &FieldCtx, cols: &[SparseVec], v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (&i, &c) in v {
        axpy(ctx, &mut out, c, &cols[i]);
    }
    out
}

/// `d^0, ..., d^top` for one bicomodule; `d^(n+1) d^n = 0` is checked on construction.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    pub spec: BicomoduleSpec,
    pub matrices: Vec<Vec<SparseVec>>,
    coalg: Coalgebra,
}

impl CochainComplex {
    pub fn new(c: &Coalgebra, spec: BicomoduleSpec, top: usize, budget: usize) -> Result<Self, CohomologyError> {
        let matrices = (0..=top)
            .map(|n| differential_matrix(c, spec, n, budget))
            .collect::<Result<Vec<_>, _>>()?;
        let ctx = c.ctx();
        for n in 0..top {
            if matrices[n].iter().any(|col| !apply(ctx, &matrices[n + 1], col).is_empty()) {
                return Err(CohomologyError::NotAComplex(n));
            }
        }
        Ok(CochainComplex { spec, matrices, coalg: c.clone() })
    }

    pub fn top(&self) -> usize {
        self.matrices.len() - 1
    }

    /// `d^n v` for a cochain `v` in `C^(x)n`.
    pub fn apply(&self, n: usize, v: &SparseVec) -> SparseVec {
        apply(self.coalg.ctx(), &self.matrices[n], v)
    }

    /// Rank of `d^n` on each weight stratum of its source.
    fn ranks_by_weight(&self, n: usize) -> BTreeMap<u64, (usize, usize)> {
        let ctx = self.coalg.ctx();
        let mut strata: BTreeMap<u64, (usize, Echelon)> = BTreeMap::new();
        for (idx, col) in self.matrices[n].iter().enumerate() {
            let w = self.coalg.tensor_weight(idx, n);
            let e = strata.entry(w).or_default();
            e.0 += 1;
            e.1.insert(ctx, col);
        }
        strata.into_iter().map(|(w, (k, e))| (w, (k, e.rank()))).collect()
    }

    /// `dim H^n`, refined by weight.
    pub fn report(&self, n: usize, graded: bool) -> CohomologyReport {
        let zs = self.ranks_by_weight(n);
        let bs = if n == 0 { BTreeMap::new() } else { self.ranks_by_weight(n - 1) };
        let mut adams = BTreeMap::new();
        let (mut z, mut b) = (0, 0);
        for (&w, &(src, rk)) in &zs {
            let bw = bs.get(&w).map_or(0, |&(_, r)| r);
            z += src - rk;
            b += bw;
            adams.insert(w, src - rk - bw);
        }
        CohomologyReport {
            g: self.spec.g,
            h: self.spec.h,
            n,
            dim_z: z,
            dim_b: b,
            dim_h: z - b,
            adams: graded.then(|| adams.into_iter().filter(|&(_, h)| h > 0).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub g: usize,
    pub h: usize,
    pub n: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
    /// Nonzero `dim H^(n,j)` by weight `j`.
    pub adams: Option<BTreeMap<u64, usize>>,
}

pub fn cohomology_dims(
    c: &Coalgebra,
    spec: BicomoduleSpec,
    n: usize,
    budget: usize,
) -> Result<CohomologyReport, CohomologyError> {
    Ok(CochainComplex::new(c, spec, n, budget)?.report(n, false))
}

/// As [`cohomology_dims`] with `dim H^(n,j)` per weight; needs a graded
/// coalgebra and weight-zero `g`, `h`.
pub fn graded_cohomology_dims(
    c: &Coalgebra,
    spec: BicomoduleSpec,
    n: usize,
    budget: usize,
) -> Result<CohomologyReport, CohomologyError> {
    spec.validate(c)?;
    if !c.is_graded() || c.weight(spec.g) != 0 || c.weight(spec.h) != 0 {
        return Err(CohomologyError::NotGraded);
    }
    Ok(CochainComplex::new(c, spec, n, budget)?.report(n, true))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CobarReport {
    pub n: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
}

/// Cohomology of `T(C^+)` with `d = sum (-1)^(i+1) 1 (x) Delta^+ (x) 1`,
/// where `C^+` has basis `b - eps(b) g` for `b != g` and
/// `Delta^+ c = Delta c - c (x) g - g (x) c`.
pub fn cobar_dims(c: &Coalgebra, g: usize, n: usize, budget: usize) -> Result<CobarReport, CohomologyError> {
    BicomoduleSpec::new(g, g).validate(c)?;
    if n > MAX_DEGREE {
        return Err(CohomologyError::DegreeTooLarge(n));
    }
    let ctx = c.ctx();
    let d = c.dim();
    let m = d - 1;
    let plus = |i: usize| if i < g { i } else { i - 1 };
    let minus = ctx.neg(Fq::ONE);
    let delta_plus: Vec<SparseVec> = (0..d)
        .filter(|&i| i != g)
        .map(|i| {
            let mut full = c.delta[i].clone();
            add_entry(ctx, &mut full, g * d + g, ctx.neg(c.counit[i]));
            let mut u = unit(i);
            add_entry(ctx, &mut u, g, ctx.neg(c.counit[i]));
            for (&k, &e) in &u {
                add_entry(ctx, &mut full, k * d + g, ctx.mul(minus, e));
                add_entry(ctx, &mut full, g * d + k, ctx.mul(minus, e));
            }
            full.into_iter()
                .filter(|(k, _)| k / d != g && k % d != g)
                .map(|(k, e)| (plus(k / d) * m + plus(k % d), e))
                .collect()
        })
        .collect();
    let cols = |k: usize| -> Result<Vec<SparseVec>, CohomologyError> {
        let required = m.checked_pow(k as u32 + 1).unwrap_or(usize::MAX);
        if required > budget {
            return Err(CohomologyError::BudgetExceeded { required, budget });
        }
        Ok((0..m.pow(k as u32))
            .map(|idx| {
                let mut col = SparseVec::new();
                if k > 0 {
                    inner_faces(ctx, &delta_plus, m, &digits(idx, k, m), &mut col);
                }
                col
            })
            .collect())
    };
    let rank = |cs: &[SparseVec]| {
        let mut e = Echelon::new();
        for v in cs {
            e.insert(ctx, v);
        }
        e.rank()
    };
    let dn = cols(n)?;
    let dim_z = dn.len() - rank(&dn);
    let dim_b = if n == 0 { 0 } else { rank(&cols(n - 1)?) };
    Ok(CobarReport { n, dim_z, dim_b, dim_h: dim_z - dim_b })
}

/// The map `c -> [d^1 c]` from `{c : d^1 c in D (x) D} / D` into `H^2(gK^h, D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub quotient_dim: usize,
    pub image_rank: usize,
    /// An element of `C` whose class is nonzero, if any.
    pub witness: Option<SparseVec>,
}

impl WitnessReport {
    pub fn injective(&self) -> bool {
        self.image_rank == self.quotient_dim
    }
}

/// `D` is the span of the basis elements in `subset`, which must contain `g` and `h`.
pub fn nonprimitive_generator_witness(
    c: &Coalgebra,
    subset: &[usize],
    spec: BicomoduleSpec,
    budget: usize,
) -> Result<WitnessReport, CohomologyError> {
    c.subcoalgebra(subset)?;
    let d = c.dim();
    let mut in_d = alloc::vec![false; d];
    for &i in subset {
        in_d[i] = true;
    }
    for i in [spec.g, spec.h] {
        if !in_d.get(i).copied().unwrap_or(false) {
            return Err(CohomologyError::NotSubcoalgebra(i));
        }
    }
    let ctx = c.ctx();
    let d1 = differential_matrix(c, spec, 1, budget)?;
    let outside: Vec<SparseVec> = d1
        .iter()
        .map(|col| col.iter().filter(|(&k, _)| !(in_d[k / d] && in_d[k % d])).map(|(&k, &e)| (k, e)).collect())
        .collect();
    let w = crate::linalg::kernel(ctx, &outside);
    let mut quot = Echelon::new();
    let mut reps = Vec::new();
    for v in &w {
        let r: SparseVec = v.iter().filter(|(&k, _)| !in_d[k]).map(|(&k, &e)| (k, e)).collect();
        if quot.insert(ctx, &r) {
            reps.push(r);
        }
    }
    let mut image = Echelon::new();
    for &i in subset {
        image.insert(ctx, &d1[i]);
    }
    let base = image.rank();
    let mut witness = None;
    for r in &reps {
        if image.insert(ctx, &apply(ctx, &d1, r)) && witness.is_none() {
            witness = Some(r.clone());
        }
    }
    Ok(WitnessReport { quotient_dim: reps.len(), image_rank: image.rank() - base, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn trunc(p: u32, n: usize) -> Coalgebra {
        Coalgebra::truncated_polynomial(Arc::new(make_field(p, &[]).unwrap()), n)
    }

    #[test]
    fn d0_vanishes_when_g_equals_h() {
        let c = trunc(2, 2);
        let m = differential_matrix(&c, BicomoduleSpec::new(0, 0), 0, DEFAULT_BUDGET).unwrap();
        assert!(m[0].is_empty());
    }

    #[test]
    fn truncated_polynomial_of_order_p_has_one_class_in_degree_two() {
        for p in [2u32, 3] {
            let c = trunc(p, p as usize);
            let rep = graded_cohomology_dims(&c, BicomoduleSpec::new(0, 0), 2, DEFAULT_BUDGET).unwrap();
            assert_eq!(rep.dim_h, 1);
            assert_eq!(rep.adams.unwrap().into_iter().collect::<Vec<_>>(), alloc::vec![(p as u64, 1)]);
        }
    }

    #[test]
    fn non_grouplike_spec_is_rejected() {
        let c = trunc(2, 2);
        assert_eq!(
            differential_matrix(&c, BicomoduleSpec::new(1, 0), 1, DEFAULT_BUDGET),
            Err(CohomologyError::NotGroupLike(1))
        );
    }

    #[test]
    fn budget_reports_the_required_size() {
        let c = trunc(3, 3);
        assert_eq!(
            cohomology_dims(&c, BicomoduleSpec::new(0, 0), 2, 20),
            Err(CohomologyError::BudgetExceeded { required: 27, budget: 20 })
        );
    }
}
