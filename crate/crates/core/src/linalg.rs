//! Sparse exact linear algebra over [`CycNumber`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::scalars::{Conductor, CycNumber};

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SparseVec {
    entries: Vec<(usize, CycNumber)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize, field: &Conductor) -> Self {
        SparseVec { entries: alloc::vec![(i, field.one())] }
    }

    pub fn single(i: usize, c: CycNumber) -> Self {
        if c.is_zero() {
            SparseVec::new()
        } else {
            SparseVec { entries: alloc::vec![(i, c)] }
        }
    }

    /// From arbitrary (index, coefficient) pairs; duplicates are summed.
    pub fn from_terms<I: IntoIterator<Item = (usize, CycNumber)>>(terms: I) -> Self {
        let mut acc = Accum::new();
        for (i, c) in terms {
            acc.push(i, c);
        }
        acc.finish()
    }

    pub fn from_dense(v: &[CycNumber]) -> Self {
        SparseVec {
            entries: v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect(),
        }
    }

    pub fn to_dense(&self, dim: usize, field: &Conductor) -> Vec<CycNumber> {
        let mut v = alloc::vec![field.zero(); dim];
        for (i, c) in &self.entries {
            v[*i] = c.clone();
        }
        v
    }

    pub fn entries(&self) -> &[(usize, CycNumber)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, CycNumber)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&CycNumber> {
        self.entries.binary_search_by_key(&i, |e| e.0).ok().map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<&(usize, CycNumber)> {
        self.entries.first()
    }

    pub fn scale(&self, c: &CycNumber) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        if c.is_one() {
            return self.clone();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect() }
    }

    /// self + c·other
    pub fn axpy(&self, c: &CycNumber, other: &SparseVec) -> SparseVec {
        if c.is_zero() || other.is_empty() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + &(y * c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        if other.is_empty() {
            return self.clone();
        }
        if self.is_empty() {
            return other.clone();
        }
        let one = other.entries[0].1.conductor().one();
        self.axpy(&one, other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        if other.is_empty() {
            return self.clone();
        }
        let m1 = other.entries[0].1.conductor().int(-1);
        self.axpy(&m1, other)
    }

    /// Σ self_i · other_i
    pub fn dot(&self, other: &SparseVec, field: &Conductor) -> CycNumber {
        let mut acc = field.zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                acc += &(x * y);
                a.next();
                b.next();
            }
        }
        acc
    }

    pub fn map_indices<F: Fn(usize) -> usize>(&self, f: F) -> SparseVec {
        SparseVec::from_terms(self.entries.iter().map(|(i, c)| (f(*i), c.clone())))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }
}

/// Term accumulator; `finish` sorts, merges duplicates and drops zeros.
#[derive(Default)]
pub struct Accum {
    terms: Vec<(usize, CycNumber)>,
}

impl Accum {
    pub fn new() -> Self {
        Accum { terms: Vec::new() }
    }

    pub fn push(&mut self, i: usize, c: CycNumber) {
        if !c.is_zero() {
            self.terms.push((i, c));
        }
    }

    pub fn add_scaled(&mut self, v: &SparseVec, c: &CycNumber) {
        if c.is_zero() {
            return;
        }
        for (i, x) in v.iter() {
            self.terms.push((*i, x * c));
        }
    }

    pub fn add_vec(&mut self, v: &SparseVec) {
        self.terms.extend(v.iter().cloned());
    }

    pub fn finish(mut self) -> SparseVec {
        self.terms.sort_by_key(|t| t.0);
        let mut out: Vec<(usize, CycNumber)> = Vec::with_capacity(self.terms.len());
        for (i, c) in self.terms {
            match out.last_mut() {
                Some((j, d)) if *j == i => *d += &c,
                _ => {
                    if let Some((_, d)) = out.last() {
                        if d.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((i, c));
                }
            }
        }
        if out.last().is_some_and(|(_, d)| d.is_zero()) {
            out.pop();
        }
        SparseVec { entries: out }
    }
}

/// A subspace of k^dim held as rows in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    dim: usize,
    /// pivot → row; each row has 1 at its pivot and 0 at every other pivot.
    rows: BTreeMap<usize, SparseVec>,
}

impl Subspace {
    pub fn zero(dim: usize) -> Self {
        Subspace { dim, rows: BTreeMap::new() }
    }

    pub fn full(dim: usize, field: &Conductor) -> Self {
        let mut s = Subspace::zero(dim);
        for i in 0..dim {
            s.rows.insert(i, SparseVec::unit(i, field));
        }
        s
    }

    pub fn spanned_by<'a, I: IntoIterator<Item = &'a SparseVec>>(dim: usize, vecs: I) -> Self {
        let mut s = Subspace::zero(dim);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> Vec<SparseVec> {
        self.rows.values().cloned().collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    /// Coordinates not occupied by a pivot; the standard vectors on these
    /// indices span a complement.
    pub fn free_indices(&self) -> Vec<usize> {
        (0..self.dim).filter(|i| !self.rows.contains_key(i)).collect()
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (p, c) in v.iter() {
            if let Some(row) = self.rows.get(p) {
                out = out.axpy(&-c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((p, c)) = r.leading().cloned() else {
            return false;
        };
        let row = r.scale(&c.inv().expect("nonzero pivot"));
        for other in self.rows.values_mut() {
            if let Some(x) = other.get(p).cloned() {
                *other = other.axpy(&-x, &row);
            }
        }
        self.rows.insert(p, row);
        true
    }

    /// Coordinates of `v` against `basis()` order, if `v` lies in the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<CycNumber>> {
        if !self.contains(v) {
            return None;
        }
        let field = v.leading().map(|e| e.1.conductor().clone());
        Some(
            self.rows
                .keys()
                .map(|p| match v.get(*p) {
                    Some(c) => c.clone(),
                    None => field.as_ref().map(|f| f.zero()).unwrap_or_else(|| unreachable_zero(self)),
                })
                .collect(),
        )
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.values().all(|r| other.contains(r))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // Relations Σ a_i u_i − Σ b_j w_j = 0 give the intersection as Σ a_i u_i.
        let us = self.basis();
        let ws = other.basis();
        let mut vecs: Vec<SparseVec> = us.clone();
        vecs.extend(ws.iter().cloned());
        let rels = kernel(&vecs);
        let mut out = Subspace::zero(self.dim);
        for rel in rels {
            let mut acc = Accum::new();
            for (i, c) in rel.iter() {
                if *i < us.len() {
                    acc.add_scaled(&us[*i], c);
                }
            }
            out.insert(&acc.finish());
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in other.rows.values() {
            s.insert(r);
        }
        s
    }
}

fn unreachable_zero(_: &Subspace) -> CycNumber {
    // Only reached for the zero vector against a nonempty basis, which
    // `contains` rejects unless the coordinates are all zero; callers pass a
    // field through a nonzero vector in practice.
    panic!("coordinates of the zero vector need an explicit field")
}

/// Basis of the space of linear relations among `vecs`:
/// all x with Σ x_i vecs[i] = 0, each x indexed by position in `vecs`.
pub fn kernel(vecs: &[SparseVec]) -> Vec<SparseVec> {
    let mut rows: BTreeMap<usize, (SparseVec, SparseVec)> = BTreeMap::new();
    let mut out = Vec::new();
    let field = match vecs.iter().find_map(|v| v.leading().map(|e| e.1.conductor().clone())) {
        Some(f) => f,
        None => {
            // Every vector is zero: each one is its own relation. The field is
            // unknown here, so callers with all-zero input get an empty answer
            // through `kernel_with_field`.
            return Vec::new();
        }
    };
    for (k, v) in vecs.iter().enumerate() {
        let mut cur = v.clone();
        let mut combo = SparseVec::unit(k, &field);
        while let Some((p, c)) = cur.leading().cloned() {
            match rows.get(&p) {
                Some((row, rc)) => {
                    let m = -&c;
                    cur = cur.axpy(&m, row);
                    combo = combo.axpy(&m, rc);
                }
                None => {
                    let inv = c.inv().expect("nonzero");
                    rows.insert(p, (cur.scale(&inv), combo.scale(&inv)));
                    cur = SparseVec::new();
                    combo = SparseVec::new();
                    break;
                }
            }
        }
        if !combo.is_zero() {
            out.push(combo);
        }
    }
    out
}

/// Like [`kernel`], but also handles the all-zero input.
pub fn kernel_with_field(vecs: &[SparseVec], field: &Conductor) -> Vec<SparseVec> {
    if vecs.iter().all(SparseVec::is_zero) {
        return (0..vecs.len()).map(|k| SparseVec::unit(k, field)).collect();
    }
    kernel(vecs)
}

/// Solves Σ x_i cols[i] = b; returns one solution if any.
pub fn solve(cols: &[SparseVec], b: &SparseVec, field: &Conductor) -> Option<SparseVec> {
    let mut rows: BTreeMap<usize, (SparseVec, SparseVec)> = BTreeMap::new();
    for (k, v) in cols.iter().enumerate() {
        let mut cur = v.clone();
        let mut combo = SparseVec::unit(k, field);
        while let Some((p, c)) = cur.leading().cloned() {
            match rows.get(&p) {
                Some((row, rc)) => {
                    let m = -&c;
                    cur = cur.axpy(&m, row);
                    combo = combo.axpy(&m, rc);
                }
                None => {
                    let inv = c.inv().expect("nonzero");
                    rows.insert(p, (cur.scale(&inv), combo.scale(&inv)));
                    break;
                }
            }
        }
    }
    let mut cur = b.clone();
    let mut x = SparseVec::new();
    while let Some((p, c)) = cur.leading().cloned() {
        let (row, rc) = rows.get(&p)?;
        cur = cur.axpy(&-&c, row);
        x = x.axpy(&c, rc);
    }
    Some(x)
}

/// Rank of a family of vectors.
pub fn rank(vecs: &[SparseVec], dim: usize) -> usize {
    Subspace::spanned_by(dim, vecs).dim()
}

/// Inverse of the square matrix with the given columns, as columns.
pub fn invert_columns(cols: &[SparseVec], field: &Conductor) -> Option<Vec<SparseVec>> {
    let n = cols.len();
    let mut inv = Vec::with_capacity(n);
    for i in 0..n {
        inv.push(solve(cols, &SparseVec::unit(i, field), field)?);
    }
    Some(inv)
}

/// Monic minimal polynomial of an element under repeated application of
/// `step`, starting from `start` (Krylov sequence). Coefficients lowest first.
pub fn krylov_min_poly<F>(start: &SparseVec, mut step: F, max_deg: usize, field: &Conductor) -> Option<Vec<CycNumber>>
where
    F: FnMut(&SparseVec) -> SparseVec,
{
    let mut rows: BTreeMap<usize, (SparseVec, SparseVec)> = BTreeMap::new();
    let mut cur_power = start.clone();
    for k in 0..=max_deg {
        let mut cur = cur_power.clone();
        let mut combo = SparseVec::unit(k, field);
        loop {
            match cur.leading().cloned() {
                None => {
                    // combo·(x^0..x^k) = 0, with coefficient at k nonzero
                    let lead = combo.get(k).cloned().expect("fresh power has unit coefficient");
                    let inv = lead.inv().ok()?;
                    let monic = combo.scale(&inv);
                    return Some(monic.to_dense(k + 1, field));
                }
                Some((p, c)) => match rows.get(&p) {
                    Some((row, rc)) => {
                        let m = -&c;
                        cur = cur.axpy(&m, row);
                        combo = combo.axpy(&m, rc);
                    }
                    None => {
                        let inv = c.inv().expect("nonzero");
                        rows.insert(p, (cur.scale(&inv), combo.scale(&inv)));
                        break;
                    }
                },
            }
        }
        cur_power = step(&cur_power);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> Conductor {
        Conductor::new(4).unwrap()
    }

    fn v(k: &Conductor, xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(&xs.iter().map(|&x| k.int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn accumulator_merges_and_drops_zeros() {
        let k = f();
        let mut a = Accum::new();
        a.push(3, k.int(1));
        a.push(1, k.int(2));
        a.push(3, k.int(-1));
        a.push(0, k.int(5));
        let s = a.finish();
        assert_eq!(s.entries().len(), 2);
        assert_eq!(s.get(1), Some(&k.int(2)));
        assert_eq!(s.get(3), None);
    }

    #[test]
    fn subspace_rref_is_canonical() {
        let k = f();
        let a = Subspace::spanned_by(3, &[v(&k, &[1, 1, 0]), v(&k, &[0, 1, 1])]);
        let b = Subspace::spanned_by(3, &[v(&k, &[1, 0, -1]), v(&k, &[1, 2, 1])]);
        assert_eq!(a, b);
        assert!(a.contains(&v(&k, &[2, 3, 1])));
        assert!(!a.contains(&v(&k, &[1, 0, 0])));
        assert_eq!(a.free_indices(), alloc::vec![2]);
    }

    #[test]
    fn kernel_and_intersection() {
        let k = f();
        let vs = [v(&k, &[1, 0]), v(&k, &[0, 1]), v(&k, &[1, 1])];
        let ker = kernel(&vs);
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0], v(&k, &[-1, -1, 1]));
        let a = Subspace::spanned_by(3, &[v(&k, &[1, 0, 0]), v(&k, &[0, 1, 0])]);
        let b = Subspace::spanned_by(3, &[v(&k, &[0, 1, 0]), v(&k, &[0, 0, 1])]);
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&v(&k, &[0, 1, 0])));
    }

    #[test]
    fn solve_and_invert() {
        let k = f();
        let cols = [v(&k, &[2, 1]), v(&k, &[1, 1])];
        let x = solve(&cols, &v(&k, &[3, 2]), &k).unwrap();
        assert_eq!(x, v(&k, &[1, 1]));
        let inv = invert_columns(&cols, &k).unwrap();
        assert_eq!(inv[0], v(&k, &[1, -1]));
        assert_eq!(inv[1], v(&k, &[-1, 2]));
        assert!(invert_columns(&[v(&k, &[1, 1]), v(&k, &[2, 2])], &k).is_none());
    }

    #[test]
    fn krylov_of_rotation() {
        // x ↦ A x with A = [[0,-1],[1,0]] has minimal polynomial t^2 + 1.
        let k = f();
        let step = |x: &SparseVec| {
            let d = x.to_dense(2, &k);
            SparseVec::from_dense(&[-&d[1], d[0].clone()])
        };
        let p = krylov_min_poly(&v(&k, &[1, 0]), step, 4, &k).unwrap();
        assert_eq!(p, alloc::vec![k.one(), k.zero(), k.one()]);
    }
}
