//! Sparse linear algebra over a finite field.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::field::{FieldCtx, Fq};

pub type SparseVec = BTreeMap<usize, Fq>;

pub fn unit(i: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert(i, Fq::ONE);
    v
}

/// `y += a x`.
pub fn axpy(ctx: &FieldCtx, y: &mut SparseVec, a: Fq, x: &SparseVec) {
    if a.is_zero() {
        return;
    }
    for (&i, &c) in x {
        add_entry(ctx, y, i, ctx.mul(a, c));
    }
}

pub fn add_entry(ctx: &FieldCtx, y: &mut SparseVec, i: usize, c: Fq) {
    if c.is_zero() {
        return;
    }
    match y.entry(i) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            let s = ctx.add(*e.get(), c);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

pub fn scale(ctx: &FieldCtx, x: &SparseVec, a: Fq) -> SparseVec {
    let mut y = SparseVec::new();
    axpy(ctx, &mut y, a, x);
    y
}

pub fn sub(ctx: &FieldCtx, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let mut r = x.clone();
    axpy(ctx, &mut r, ctx.neg(Fq::ONE), y);
    r
}

/// Rows with distinct pivots, each pivot the smallest index of its monic row.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
    /// Combination of inserted vectors producing each row, when tracking.
    combos: BTreeMap<usize, SparseVec>,
    inserted: usize,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.rows.contains_key(&i)
    }

    /// Eliminates every pivot position from `v`, applying the same operations to `combo`.
    fn reduce_tracked(&self, ctx: &FieldCtx, v: &mut SparseVec, combo: &mut SparseVec) {
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).map(|(&i, &c)| (i, c)).find(|(i, _)| self.rows.contains_key(i));
            let Some((i, c)) = next else { break };
            let neg = ctx.neg(c);
            axpy(ctx, v, neg, &self.rows[&i]);
            if let Some(cb) = self.combos.get(&i) {
                axpy(ctx, combo, neg, cb);
            }
            cursor = i + 1;
        }
    }

    /// Residue of `v` modulo the row span; its support avoids all pivots.
    pub fn reduce(&self, ctx: &FieldCtx, v: &SparseVec) -> SparseVec {
        let mut r = v.clone();
        let mut cursor = 0usize;
        loop {
            let next = r.range(cursor..).map(|(&i, &c)| (i, c)).find(|(i, _)| self.rows.contains_key(i));
            let Some((i, c)) = next else { break };
            axpy(ctx, &mut r, ctx.neg(c), &self.rows[&i]);
            cursor = i + 1;
        }
        r
    }

    pub fn contains(&self, ctx: &FieldCtx, v: &SparseVec) -> bool {
        self.reduce(ctx, v).is_empty()
    }

    /// Inserts `v`; returns true if it enlarged the span.
    pub fn insert(&mut self, ctx: &FieldCtx, v: &SparseVec) -> bool {
        self.insert_tracked(ctx, v).is_none()
    }

    /// Inserts `v` as input number `self.inserted`. If `v` is dependent, returns
    /// the relation among inputs (with coefficient 1 on `v`) that it satisfies.
    pub fn insert_tracked(&mut self, ctx: &FieldCtx, v: &SparseVec) -> Option<SparseVec> {
        let id = self.inserted;
        self.inserted += 1;
        let mut r = v.clone();
        let mut combo = unit(id);
        self.reduce_tracked(ctx, &mut r, &mut combo);
        match r.iter().next().map(|(&i, &c)| (i, c)) {
            None => Some(combo),
            Some((piv, c)) => {
                let inv = ctx.inv(c).expect("nonzero pivot");
                self.rows.insert(piv, scale(ctx, &r, inv));
                self.combos.insert(piv, scale(ctx, &combo, inv));
                None
            }
        }
    }

    /// Fully reduced rows in increasing pivot order.
    pub fn rref(&self, ctx: &FieldCtx) -> Vec<SparseVec> {
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (&p, row) in self.rows.iter().rev() {
            let mut r = row.clone();
            for (&q, rq) in &done {
                let c = r.get(&q).copied().unwrap_or(Fq::ZERO);
                if !c.is_zero() {
                    axpy(ctx, &mut r, ctx.neg(c), rq);
                }
            }
            done.insert(p, r);
        }
        done.into_values().collect()
    }
}

/// Rank of the span of `vectors`.
pub fn rank(ctx: &FieldCtx, vectors: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(ctx, v);
    }
    e.rank()
}

/// Basis of `{ c : sum_i c_i columns[i] = 0 }`, in reduced echelon form
/// with the largest index of each vector as its pivot.
pub fn kernel(ctx: &FieldCtx, columns: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    let mut rels = Vec::new();
    for c in columns {
        if let Some(rel) = e.insert_tracked(ctx, c) {
            rels.push(rel);
        }
    }
    canonical_basis(ctx, &rels, columns.len())
}

/// Reduced echelon basis of the span of `vectors` in a space of dimension `n`,
/// pivoting on the largest index.
pub fn canonical_basis(ctx: &FieldCtx, vectors: &[SparseVec], n: usize) -> Vec<SparseVec> {
    let flip = |v: &SparseVec| -> SparseVec { v.iter().map(|(&i, &c)| (n - 1 - i, c)).collect() };
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(ctx, &flip(v));
    }
    let mut out: Vec<SparseVec> = e.rref(ctx).iter().map(flip).collect();
    out.sort_by_key(|v| v.keys().next_back().copied());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn vecs(ctx: &FieldCtx, rows: &[&[i64]]) -> Vec<SparseVec> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &c)| ctx.from_int(c) != Fq::ZERO)
                    .map(|(i, &c)| (i, ctx.from_int(c)))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn kernel_of_dependent_columns() {
        let ctx = make_field(5, &[]).unwrap();
        let cols = vecs(&ctx, &[&[1, 2, 0], &[0, 1, 1], &[1, 3, 1], &[2, 4, 0]]);
        let k = kernel(&ctx, &cols);
        assert_eq!(k.len(), 2);
        for v in &k {
            let mut s = SparseVec::new();
            for (&i, &c) in v {
                axpy(&ctx, &mut s, c, &cols[i]);
            }
            assert!(s.is_empty());
        }
        assert_eq!(rank(&ctx, &cols), 2);
    }

    #[test]
    fn rref_clears_pivot_columns() {
        let ctx = make_field(3, &[]).unwrap();
        let rows = vecs(&ctx, &[&[1, 1, 1, 0], &[0, 1, 2, 1], &[0, 0, 1, 1]]);
        let mut e = Echelon::new();
        for r in &rows {
            e.insert(&ctx, r);
        }
        let rr = e.rref(&ctx);
        let pivots: Vec<usize> = e.pivots().collect();
        for (k, row) in rr.iter().enumerate() {
            for (j, &p) in pivots.iter().enumerate() {
                let c = row.get(&p).copied().unwrap_or(Fq::ZERO);
                assert_eq!(c, if j == k { Fq::ONE } else { Fq::ZERO });
            }
        }
    }
}
