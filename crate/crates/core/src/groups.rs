//! Finite permutation groups, abelian characters, cocycles on dual groups,
//! matched pairs and automorphisms.
//!
//! Group elements are addressed by their index in the lexicographically
//! sorted element list; the identity is always index 0.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::sync::atomic::{AtomicUsize, Ordering};

use crate::error::Error;
use crate::scalars::{Conductor, CycNumber};

/// Default upper bound on the number of elements enumerated for one group.
pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

static ELEMENT_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_ELEMENT_CAP);

pub fn element_cap() -> usize {
    ELEMENT_CAP.load(Ordering::Relaxed)
}

pub fn set_element_cap(cap: usize) {
    ELEMENT_CAP.store(cap, Ordering::Relaxed);
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// A permutation of {0, …, degree−1}, stored by images.
/// Products compose as functions: `(a * b)(x) = a(b(x))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, Error> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let x = x as usize;
            if x >= images.len() || seen[x] {
                return Err(Error::Parse(format!("not a permutation: {images:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    /// A single cycle on 0-based points.
    pub fn cycle(degree: usize, points: &[u32]) -> Self {
        let mut p = Perm::identity(degree);
        for (k, &a) in points.iter().enumerate() {
            p.0[a as usize] = points[(k + 1) % points.len()];
        }
        p
    }

    /// Parses cycle notation with 1-based points: `()`, `(1 2)(3 4)`,
    /// `(1,2)` or, when every point is a single digit, `(12)(34)`.
    pub fn parse(s: &str, degree: usize) -> Result<Self, Error> {
        let err = |m: &str| Error::Parse(format!("permutation `{s}`: {m}"));
        let t = s.trim();
        if t.is_empty() || t == "e" || t == "()" {
            return Ok(Perm::identity(degree));
        }
        let mut p = Perm::identity(degree);
        let mut rest = t;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| err("expected `(`"))?;
            let close = open.find(')').ok_or_else(|| err("unclosed cycle"))?;
            let body = open[..close].trim();
            rest = open[close + 1..].trim_start();
            let points: Vec<u32> = if body.contains([' ', ',']) {
                body.split([' ', ','])
                    .filter(|x| !x.is_empty())
                    .map(|x| x.parse::<u32>().map_err(|_| err("bad point")))
                    .collect::<Result<_, _>>()?
            } else {
                body.chars()
                    .map(|c| c.to_digit(10).ok_or_else(|| err("bad point")))
                    .collect::<Result<_, _>>()?
            };
            if points.iter().any(|&x| x == 0 || x as usize > degree) {
                return Err(err("point out of range"));
            }
            let zero_based: Vec<u32> = points.iter().map(|x| x - 1).collect();
            let mut distinct = zero_based.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != zero_based.len() {
                return Err(err("repeated point in cycle"));
            }
            p = p.mul(&Perm::cycle(degree, &zero_based));
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.0[x as usize]
    }

    pub fn mul(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inv(&self) -> Perm {
        let mut out = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize] = i as u32;
        }
        Perm(out)
    }

    pub fn conj(&self, by: &Perm) -> Perm {
        by.mul(self).mul(&by.inv())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.mul(other) == other.mul(self)
    }

    pub fn support(&self) -> Vec<u32> {
        (0..self.0.len() as u32).filter(|&i| self.0[i as usize] != i).collect()
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn extend(&self, degree: usize) -> Perm {
        let mut v = self.0.clone();
        v.extend(self.0.len() as u32..degree as u32);
        Perm(v)
    }

    /// Moves the permutation to act on `offset..offset+degree` inside `degree_total`.
    pub fn shift(&self, offset: usize, degree_total: usize) -> Perm {
        let mut p = Perm::identity(degree_total);
        for (i, &x) in self.0.iter().enumerate() {
            p.0[i + offset] = x + offset as u32;
        }
        p
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x as u32);
                x = self.0[x] as usize;
            }
            out.push(c);
        }
        out
    }

    /// Sign as ±1.
    pub fn sign(&self) -> i32 {
        let even = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return write!(f, "()");
        }
        for c in cs {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

const TABLE_LIMIT: usize = 2048;

struct GroupData {
    degree: usize,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
    index: BTreeMap<Perm, usize>,
    inverses: Vec<usize>,
    table: Option<Vec<u32>>,
}

/// A finite permutation group with its elements enumerated.
#[derive(Clone)]
pub struct PermGroup(Arc<GroupData>);

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.0.degree == other.0.degree && self.0.elements == other.0.elements
    }
}

impl Eq for PermGroup {}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, order {}, gens [", self.degree(), self.order())?;
        for (k, g) in self.0.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "])")
    }
}

impl PermGroup {
    /// Enumerates the group generated by `gens` under the global element cap.
    pub fn generate(degree: usize, gens: Vec<Perm>) -> Result<Self, Error> {
        Self::generate_with_cap(degree, gens, element_cap())
    }

    pub fn generate_with_cap(degree: usize, gens: Vec<Perm>, cap: usize) -> Result<Self, Error> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::InvalidData(format!("generator {g} has degree {} not {degree}", g.degree())));
            }
        }
        let id = Perm::identity(degree);
        let mut seen: BTreeSet<Perm> = BTreeSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = g.mul(&x);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let elements: Vec<Perm> = seen.into_iter().collect();
        let gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(Self::from_sorted(degree, gens, elements))
    }

    fn from_sorted(degree: usize, gens: Vec<Perm>, elements: Vec<Perm>) -> Self {
        let index: BTreeMap<Perm, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let inverses = elements.iter().map(|p| index[&p.inv()]).collect();
        let n = elements.len();
        let table = if n <= TABLE_LIMIT {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.mul(b)] as u32);
                }
            }
            Some(t)
        } else {
            None
        };
        PermGroup(Arc::new(GroupData { degree, gens, elements, index, inverses, table }))
    }

    /// Parses generator strings in cycle notation.
    pub fn from_cycles(degree: usize, gens: &[&str]) -> Result<Self, Error> {
        let perms = gens.iter().map(|g| Perm::parse(g, degree)).collect::<Result<Vec<_>, _>>()?;
        Self::generate(degree, perms)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_sorted(degree, Vec::new(), vec![Perm::identity(degree)])
    }

    /// Cyclic group of order n acting regularly on n points.
    pub fn cyclic(n: usize) -> Self {
        if n <= 1 {
            return Self::trivial(1);
        }
        let pts: Vec<u32> = (0..n as u32).collect();
        Self::generate(n, vec![Perm::cycle(n, &pts)]).expect("cyclic group within cap")
    }

    pub fn symmetric(n: usize) -> Result<Self, Error> {
        if n <= 1 {
            return Ok(Self::trivial(n.max(1)));
        }
        let pts: Vec<u32> = (0..n as u32).collect();
        Self::generate(n, vec![Perm::cycle(n, &[0, 1]), Perm::cycle(n, &pts)])
    }

    pub fn alternating(n: usize) -> Result<Self, Error> {
        Self::generate(n.max(1), alternating_generators(n, 0, n.max(1)))
    }

    /// Direct product acting on disjoint point sets.
    pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<Self, Error> {
        let d = a.degree() + b.degree();
        let mut gens: Vec<Perm> = a.generators().iter().map(|g| g.shift(0, d)).collect();
        gens.extend(b.generators().iter().map(|g| g.shift(a.degree(), d)));
        Self::generate(d, gens)
    }

    /// Regular permutation representation of an abstract group given by
    /// its multiplication table `table[a*n+b] = ab` with identity 0.
    pub fn regular_from_table(n: usize, table: &[usize]) -> Result<Self, Error> {
        if table.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: table.len() });
        }
        let gens = (0..n)
            .map(|a| Perm::from_images((0..n).map(|b| table[a * n + b] as u32).collect()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::generate(n, gens)
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn order(&self) -> usize {
        self.0.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.0.gens
    }

    /// Indices of the generators.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.0.gens.iter().map(|g| self.0.index[g]).collect()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.0.elements
    }

    pub fn elem(&self, i: usize) -> &Perm {
        &self.0.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.0.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.0.index.contains_key(p)
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.0.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.0.index[&self.0.elements[a].mul(&self.0.elements[b])],
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.0.inverses[a]
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(a) } else { a };
        let mut out = 0;
        for _ in 0..e.unsigned_abs() {
            out = self.mul(out, base);
        }
        out
    }

    pub fn conj(&self, a: usize, by: usize) -> usize {
        self.mul(self.mul(by, a), self.inv(by))
    }

    pub fn elem_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order()).fold(1, |acc, a| lcm(acc, self.elem_order(a) as u64))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.0.gens;
        g.iter().enumerate().all(|(i, a)| g[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Index-level subgroup closure.
    pub fn closure_indices(&self, seeds: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut members = vec![0usize];
        let mut k = 0;
        while k < members.len() {
            let x = members[k];
            k += 1;
            for &s in seeds {
                let y = self.mul(s, x);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Subgroup from element indices of this group.
    pub fn subgroup_from_indices(&self, seeds: &[usize]) -> PermGroup {
        let members = self.closure_indices(seeds);
        let elements: Vec<Perm> = members.iter().map(|&i| self.elem(i).clone()).collect();
        let gens = minimal_generators(self, seeds);
        Self::from_sorted(self.degree(), gens, elements)
    }

    /// Subgroup generated by permutations that must lie in this group.
    pub fn subgroup(&self, gens: &[Perm]) -> Result<PermGroup, Error> {
        let idx = gens
            .iter()
            .map(|g| self.index_of(g).ok_or_else(|| Error::NotSubgroup(format!("{g} is not in the group"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.subgroup_from_indices(&idx))
    }

    /// Indices in `self` of the elements of `sub`, checking containment.
    pub fn embed(&self, sub: &PermGroup) -> Result<Vec<usize>, Error> {
        if sub.degree() != self.degree() {
            return Err(Error::NotSubgroup(format!("degree {} vs {}", sub.degree(), self.degree())));
        }
        sub.elements()
            .iter()
            .map(|p| self.index_of(p).ok_or_else(|| Error::NotSubgroup(format!("{p} is not in the group"))))
            .collect()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        other.embed(self).is_ok()
    }

    pub fn centralizer(&self, s: &PermGroup) -> Result<PermGroup, Error> {
        self.embed(s)?;
        let members: Vec<usize> = (0..self.order())
            .filter(|&a| s.generators().iter().all(|g| self.elem(a).commutes_with(g)))
            .collect();
        Ok(self.subgroup_from_indices(&members))
    }

    pub fn center(&self) -> PermGroup {
        self.centralizer(self).expect("group is a subgroup of itself")
    }

    pub fn is_normal_subgroup(&self, s: &PermGroup) -> Result<bool, Error> {
        self.embed(s)?;
        Ok(self.0.gens.iter().all(|g| s.generators().iter().all(|h| s.contains(&h.conj(g)))))
    }

    /// Normal closure of a set of elements, as sorted indices.
    pub fn normal_closure_indices(&self, seeds: &[usize]) -> Vec<usize> {
        let mut current = self.closure_indices(seeds);
        loop {
            let mut gens: Vec<usize> = current.clone();
            for &x in &current {
                for g in self.generator_indices() {
                    gens.push(self.conj(x, g));
                }
            }
            gens.sort_unstable();
            gens.dedup();
            let next = self.closure_indices(&gens);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for a in 0..self.order() {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.order()).map(|g| self.conj(a, g)).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            out.push(class);
        }
        out
    }

    /// All normal subgroups as sorted index sets, ordered by size then content.
    pub fn normal_subgroup_indices(&self) -> Vec<Vec<usize>> {
        let classes = self.conjugacy_classes();
        let basic: Vec<Vec<usize>> = classes.iter().map(|c| self.normal_closure_indices(&c[..1])).collect();
        join_closed(self, basic)
    }

    pub fn normal_subgroups(&self) -> Vec<PermGroup> {
        self.normal_subgroup_indices().iter().map(|m| self.subgroup_from_indices(m)).collect()
    }

    /// All subgroups as sorted index sets, ordered by size then content.
    pub fn subgroup_indices(&self) -> Vec<Vec<usize>> {
        let cyclic: Vec<Vec<usize>> = (0..self.order()).map(|a| self.closure_indices(&[a])).collect();
        join_closed(self, cyclic)
    }

    pub fn subgroups(&self) -> Vec<PermGroup> {
        self.subgroup_indices().iter().map(|m| self.subgroup_from_indices(m)).collect()
    }

    pub fn is_simple(&self) -> bool {
        if self.order() == 1 {
            return false;
        }
        self.conjugacy_classes()
            .iter()
            .filter(|c| c[0] != 0)
            .all(|c| self.normal_closure_indices(&c[..1]).len() == self.order())
    }

    /// Multiplication table `t[a*n+b] = ab` on element indices.
    pub fn table(&self) -> Vec<usize> {
        let n = self.order();
        let mut t = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                t.push(self.mul(a, b));
            }
        }
        t
    }

    /// Coset representatives and the coset index of every element for the
    /// left cosets gM of a normal subgroup given by indices.
    pub fn quotient_map(&self, normal: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut label = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for g in 0..self.order() {
            if label[g] != usize::MAX {
                continue;
            }
            let k = reps.len();
            reps.push(g);
            for &m in normal {
                label[self.mul(g, m)] = k;
            }
        }
        (reps, label)
    }

    /// The quotient group G/M as a permutation group (regular representation).
    pub fn quotient(&self, normal: &[usize]) -> Result<PermGroup, Error> {
        let (reps, label) = self.quotient_map(normal);
        let q = reps.len();
        let mut t = Vec::with_capacity(q * q);
        for &a in &reps {
            for &b in &reps {
                t.push(label[self.mul(a, b)]);
            }
        }
        PermGroup::regular_from_table(q, &t)
    }
}

fn minimal_generators(g: &PermGroup, seeds: &[usize]) -> Vec<Perm> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut span = vec![0usize];
    for &s in seeds {
        if span.binary_search(&s).is_err() {
            chosen.push(s);
            span = g.closure_indices(&chosen);
        }
    }
    chosen.iter().map(|&i| g.elem(i).clone()).collect()
}

fn join_closed(g: &PermGroup, basic: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut all: BTreeSet<Vec<usize>> = basic.iter().cloned().collect();
    let mut frontier: Vec<Vec<usize>> = all.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for b in &basic {
                if b.iter().all(|x| h.binary_search(x).is_ok()) {
                    continue;
                }
                let mut seeds = h.clone();
                seeds.extend(b.iter().copied());
                let j = g.closure_indices(&seeds);
                if all.insert(j.clone()) {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Vec<usize>> = all.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Generators of the alternating group on points `offset..offset+k` inside
/// a permutation domain of size `degree` (3-cycles through the first two points).
pub fn alternating_generators(k: usize, offset: usize, degree: usize) -> Vec<Perm> {
    if k < 3 {
        return Vec::new();
    }
    let a = offset as u32;
    (2..k as u32).map(|i| Perm::cycle(degree, &[a, a + 1, a + i])).collect()
}

/// Generators of the symmetric group on points `offset..offset+k`.
pub fn symmetric_generators(k: usize, offset: usize, degree: usize) -> Vec<Perm> {
    if k < 2 {
        return Vec::new();
    }
    let pts: Vec<u32> = (offset as u32..(offset + k) as u32).collect();
    vec![Perm::cycle(degree, &pts[..2]), Perm::cycle(degree, &pts)]
}

/// Order of the alternating group A_k (order lookup without enumeration).
pub fn alternating_order(k: u32) -> u128 {
    if k < 2 {
        return 1;
    }
    (1..=k as u128).product::<u128>() / 2
}

/// A_k is simple and nonabelian exactly when k ≥ 5.
pub fn alternating_is_simple_nonabelian(k: u32) -> bool {
    k >= 5
}

// ---------------------------------------------------------------------------
// Characters

/// A linear character χ: S → k^×, stored as exponents: χ(s_i) = ζ_e^{values[i]}
/// where e is the exponent of S.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianCharacter {
    pub group: PermGroup,
    pub exponent: u32,
    pub values: Vec<u32>,
}

impl AbelianCharacter {
    pub fn value(&self, i: usize, field: &Conductor) -> CycNumber {
        let n = field.n();
        field.root_of_unity((self.values[i] as i64) * (n / self.exponent) as i64)
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}

/// The dual group Ŝ of an abelian permutation group.
#[derive(Clone, Debug)]
pub struct CharacterGroup {
    pub group: PermGroup,
    pub exponent: u32,
    pub chars: Vec<AbelianCharacter>,
    /// `mul[i*m+j]` is the index of χ_i χ_j.
    pub mul: Vec<usize>,
    pub inv: Vec<usize>,
}

impl CharacterGroup {
    pub fn order(&self) -> usize {
        self.chars.len()
    }

    pub fn index_of_values(&self, values: &[u32]) -> Option<usize> {
        self.chars.iter().position(|c| c.values == values)
    }
}

/// All characters of an abelian group, trivial character first.
pub fn abelian_characters(s: &PermGroup, field: &Conductor) -> Result<CharacterGroup, Error> {
    if !s.is_abelian() {
        return Err(Error::NotAbelian(format!("{s:?}")));
    }
    let e = s.exponent() as u32;
    if !field.n().is_multiple_of(e) {
        return Err(Error::ConductorTooSmall { needed: e, have: field.n() });
    }
    let gens = s.generator_indices();
    let orders: Vec<u32> = gens.iter().map(|&g| s.elem_order(g) as u32).collect();
    let mut chars = Vec::new();
    let mut choice = vec![0u32; gens.len()];
    loop {
        if let Some(values) = extend_character(s, &gens, &choice, e) {
            chars.push(values);
        }
        let mut k = 0;
        loop {
            if k == gens.len() {
                chars.sort();
                let chars: Vec<AbelianCharacter> = chars
                    .into_iter()
                    .map(|values| AbelianCharacter { group: s.clone(), exponent: e, values })
                    .collect();
                if chars.len() != s.order() {
                    return Err(Error::InvalidData(format!("found {} characters for order {}", chars.len(), s.order())));
                }
                return Ok(finish_character_group(s, e, chars));
            }
            choice[k] += e / orders[k];
            if choice[k] < e {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn extend_character(s: &PermGroup, gens: &[usize], choice: &[u32], e: u32) -> Option<Vec<u32>> {
    let mut values = vec![u32::MAX; s.order()];
    values[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (j, &g) in gens.iter().enumerate() {
            let y = s.mul(g, x);
            let v = (values[x] + choice[j]) % e;
            if values[y] == u32::MAX {
                values[y] = v;
                queue.push_back(y);
            } else if values[y] != v {
                return None;
            }
        }
    }
    Some(values)
}

fn finish_character_group(s: &PermGroup, e: u32, chars: Vec<AbelianCharacter>) -> CharacterGroup {
    let m = chars.len();
    let lookup: BTreeMap<Vec<u32>, usize> = chars.iter().enumerate().map(|(i, c)| (c.values.clone(), i)).collect();
    let mut mul = Vec::with_capacity(m * m);
    for a in &chars {
        for b in &chars {
            let v: Vec<u32> = a.values.iter().zip(&b.values).map(|(x, y)| (x + y) % e).collect();
            mul.push(lookup[&v]);
        }
    }
    let inv = chars
        .iter()
        .map(|c| lookup[&c.values.iter().map(|x| (e - x) % e).collect::<Vec<_>>()])
        .collect();
    CharacterGroup { group: s.clone(), exponent: e, chars, mul, inv }
}

/// Splitting S = A × B into cyclic factors ⟨first_i⟩ ≅ ⟨second_i⟩.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub first: Vec<Perm>,
    pub second: Vec<Perm>,
}

/// A function ω: Ŝ × Ŝ → k^×, `values[i*m+j] = ω(χ_i, χ_j)`.
#[derive(Clone, Debug)]
pub struct DualCocycle {
    pub dual: CharacterGroup,
    pub values: Vec<CycNumber>,
}

impl DualCocycle {
    pub fn trivial(dual: &CharacterGroup, field: &Conductor) -> Self {
        let m = dual.order();
        DualCocycle { dual: dual.clone(), values: vec![field.one(); m * m] }
    }

    pub fn from_table(dual: &CharacterGroup, values: Vec<CycNumber>) -> Result<Self, Error> {
        let m = dual.order();
        if values.len() != m * m {
            return Err(Error::DimensionMismatch { expected: m * m, found: values.len() });
        }
        let w = DualCocycle { dual: dual.clone(), values };
        w.check()?;
        Ok(w)
    }

    pub fn value(&self, i: usize, j: usize) -> &CycNumber {
        &self.values[i * self.dual.order() + j]
    }

    /// Normalization, invertibility and ω(χη,ψ)ω(χ,η) = ω(χ,ηψ)ω(η,ψ).
    pub fn check(&self) -> Result<(), Error> {
        let m = self.dual.order();
        let mul = &self.dual.mul;
        for i in 0..m {
            if !self.value(0, i).is_one() || !self.value(i, 0).is_one() {
                return Err(Error::IdentityFails(format!("normalization at character {i}")));
            }
        }
        if let Some(k) = self.values.iter().position(CycNumber::is_zero) {
            return Err(Error::IdentityFails(format!("value at ({}, {}) is zero", k / m, k % m)));
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let lhs = self.value(mul[a * m + b], c) * self.value(a, b);
                    let rhs = self.value(a, mul[b * m + c]) * self.value(b, c);
                    if lhs != rhs {
                        return Err(Error::IdentityFails(format!(
                            "2-cocycle identity ω(χη,ψ)ω(χ,η) = ω(χ,ηψ)ω(η,ψ) at (χ,η,ψ) = ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The alternating form ω(χ,η)/ω(η,χ).
    pub fn alternating(&self, i: usize, j: usize) -> CycNumber {
        self.value(i, j).try_div(self.value(j, i)).expect("cocycle values are invertible")
    }

    /// Characters χ with ω(χ,η) = ω(η,χ) for all η.
    pub fn radical(&self) -> Vec<usize> {
        let m = self.dual.order();
        (0..m).filter(|&i| (0..m).all(|j| self.alternating(i, j).is_one())).collect()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.radical().len() == 1
    }

    /// Whether ω and `other` have the same alternating form, which for
    /// abelian groups determines the cohomology class.
    pub fn same_class(&self, other: &DualCocycle) -> bool {
        let m = self.dual.order();
        (0..m).all(|i| (0..m).all(|j| self.alternating(i, j) == other.alternating(i, j)))
    }

    pub fn inverse(&self) -> DualCocycle {
        DualCocycle {
            dual: self.dual.clone(),
            values: self.values.iter().map(|v| v.inv().expect("invertible")).collect(),
        }
    }
}

/// ω(χ,η) = Π_i ζ_{n_i}^{log χ(b_i) · log η(a_i)} for S = Π ⟨a_i⟩ × Π ⟨b_i⟩.
pub fn nondegenerate_two_cocycle(
    s: &PermGroup,
    decomposition: &Decomposition,
    field: &Conductor,
) -> Result<DualCocycle, Error> {
    let n = s.order();
    if !(0..=n).any(|r| r * r == n) {
        return Err(Error::NotSquareOrder(n));
    }
    let dual = abelian_characters(s, field)?;
    let Decomposition { first, second } = decomposition;
    if first.len() != second.len() {
        return Err(Error::InvalidDecomposition("first and second have different lengths".into()));
    }
    let a = s.embed_perms(first)?;
    let b = s.embed_perms(second)?;
    let mut orders = Vec::new();
    for (x, y) in a.iter().zip(&b) {
        let (ox, oy) = (s.elem_order(*x), s.elem_order(*y));
        if ox != oy {
            return Err(Error::InvalidDecomposition(format!("orders {ox} and {oy} differ")));
        }
        orders.push(ox as u32);
    }
    let product: usize = orders.iter().map(|&o| (o * o) as usize).product();
    let mut all = a.clone();
    all.extend(b.iter().copied());
    if product != n || s.closure_indices(&all).len() != n {
        return Err(Error::InvalidDecomposition(String::from("factors do not give a direct decomposition of S")));
    }
    let e = dual.exponent;
    let m = dual.order();
    let mut values = Vec::with_capacity(m * m);
    for chi in &dual.chars {
        for eta in &dual.chars {
            let mut exp: u64 = 0;
            for (k, &o) in orders.iter().enumerate() {
                let step = e / o;
                let x = (chi.values[b[k]] / step) as u64;
                let y = (eta.values[a[k]] / step) as u64;
                exp += x * y * step as u64;
            }
            let exp = (exp % e as u64) as i64;
            values.push(field.root_of_unity(exp * (field.n() / e) as i64));
        }
    }
    let w = DualCocycle { dual, values };
    w.check()?;
    Ok(w)
}

impl PermGroup {
    fn embed_perms(&self, perms: &[Perm]) -> Result<Vec<usize>, Error> {
        perms
            .iter()
            .map(|p| self.index_of(p).ok_or_else(|| Error::InvalidDecomposition(format!("{p} is not in S"))))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Matched pairs and cocycle pairs

/// Matched pair (F, G, ◁, ▷): `left[s*|F|+x] = s▷x ∈ F`,
/// `right[s*|F|+x] = s◁x ∈ G`, for s ∈ G and x ∈ F.
#[derive(Clone, Debug)]
pub struct MatchedPair {
    pub f: PermGroup,
    pub g: PermGroup,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl MatchedPair {
    pub fn trivial(f: &PermGroup, g: &PermGroup) -> Self {
        let (nf, ng) = (f.order(), g.order());
        let mut left = Vec::with_capacity(nf * ng);
        let mut right = Vec::with_capacity(nf * ng);
        for s in 0..ng {
            for x in 0..nf {
                left.push(x);
                right.push(s);
            }
        }
        MatchedPair { f: f.clone(), g: g.clone(), left, right }
    }

    pub fn from_tables(f: &PermGroup, g: &PermGroup, left: Vec<usize>, right: Vec<usize>) -> Result<Self, Error> {
        let n = f.order() * g.order();
        if left.len() != n || right.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: left.len().min(right.len()) });
        }
        let mp = MatchedPair { f: f.clone(), g: g.clone(), left, right };
        mp.check()?;
        Ok(mp)
    }

    pub fn act_left(&self, s: usize, x: usize) -> usize {
        self.left[s * self.f.order() + x]
    }

    pub fn act_right(&self, s: usize, x: usize) -> usize {
        self.right[s * self.f.order() + x]
    }

    /// Exhaustive check of the action and compatibility identities.
    pub fn check(&self) -> Result<(), Error> {
        let (f, g) = (&self.f, &self.g);
        for x in 0..f.order() {
            if self.act_left(0, x) != x {
                return Err(Error::IdentityFails(format!("e▷x = x at x = {}", f.elem(x))));
            }
        }
        for s in 0..g.order() {
            if self.act_right(s, 0) != s {
                return Err(Error::IdentityFails(format!("s◁e = s at s = {}", g.elem(s))));
            }
        }
        for s in 0..g.order() {
            for x in 0..f.order() {
                for y in 0..f.order() {
                    let lhs = self.act_left(s, f.mul(x, y));
                    let rhs = f.mul(self.act_left(s, x), self.act_left(self.act_right(s, x), y));
                    if lhs != rhs {
                        return Err(Error::IdentityFails(format!(
                            "s▷xy = (s▷x)((s◁x)▷y) at s = {}, x = {}, y = {}",
                            g.elem(s),
                            f.elem(x),
                            f.elem(y)
                        )));
                    }
                    let lhs = self.act_right(s, f.mul(x, y));
                    let rhs = self.act_right(self.act_right(s, x), y);
                    if lhs != rhs {
                        return Err(Error::IdentityFails(format!("s◁xy = (s◁x)◁y at s = {}", g.elem(s))));
                    }
                }
            }
        }
        for s in 0..g.order() {
            for t in 0..g.order() {
                for x in 0..f.order() {
                    let lhs = self.act_right(g.mul(s, t), x);
                    let rhs = g.mul(self.act_right(s, self.act_left(t, x)), self.act_right(t, x));
                    if lhs != rhs {
                        return Err(Error::IdentityFails(format!(
                            "st◁x = (s◁(t▷x))(t◁x) at s = {}, t = {}, x = {}",
                            g.elem(s),
                            g.elem(t),
                            f.elem(x)
                        )));
                    }
                    let lhs = self.act_left(g.mul(s, t), x);
                    let rhs = self.act_left(s, self.act_left(t, x));
                    if lhs != rhs {
                        return Err(Error::IdentityFails(format!("st▷x = s▷(t▷x) at x = {}", f.elem(x))));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Matched pair from an exact factorization L = FG via gx = (g▷x)(g◁x).
pub fn matched_pair_from_factorization(l: &PermGroup, f: &PermGroup, g: &PermGroup) -> Result<MatchedPair, Error> {
    let fi = l.embed(f).map_err(|e| Error::NotExactFactorization(format!("F ≤ L fails: {e}")))?;
    let gi = l.embed(g).map_err(|e| Error::NotExactFactorization(format!("G ≤ L fails: {e}")))?;
    if f.order() * g.order() != l.order() {
        return Err(Error::NotExactFactorization(format!(
            "|F|·|G| = {} differs from |L| = {}",
            f.order() * g.order(),
            l.order()
        )));
    }
    let gset: BTreeSet<usize> = gi.iter().copied().collect();
    if fi.iter().filter(|x| gset.contains(x)).count() != 1 {
        return Err(Error::NotExactFactorization(String::from("F ∩ G is nontrivial")));
    }
    let mut decompose: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for (x, &xl) in fi.iter().enumerate() {
        for (s, &sl) in gi.iter().enumerate() {
            decompose.insert(l.mul(xl, sl), (x, s));
        }
    }
    let (nf, ng) = (f.order(), g.order());
    let mut left = vec![0; nf * ng];
    let mut right = vec![0; nf * ng];
    for s in 0..ng {
        for x in 0..nf {
            let (x2, s2) = decompose[&l.mul(gi[s], fi[x])];
            left[s * nf + x] = x2;
            right[s * nf + x] = s2;
        }
    }
    MatchedPair::from_tables(f, g, left, right)
}

/// Cocycle pair: `sigma[(x*|F|+y)*|G|+s] = σ_s(x,y)` and
/// `tau[(a*|G|+b)*|F|+x] = τ_x(a,b)`.
#[derive(Clone, Debug)]
pub struct CocyclePair {
    pub sigma: Vec<CycNumber>,
    pub tau: Vec<CycNumber>,
}

impl CocyclePair {
    pub fn trivial(mp: &MatchedPair, field: &Conductor) -> Self {
        let (nf, ng) = (mp.f.order(), mp.g.order());
        CocyclePair { sigma: vec![field.one(); nf * nf * ng], tau: vec![field.one(); ng * ng * nf] }
    }

    pub fn sigma(&self, mp: &MatchedPair, s: usize, x: usize, y: usize) -> &CycNumber {
        &self.sigma[(x * mp.f.order() + y) * mp.g.order() + s]
    }

    pub fn tau(&self, mp: &MatchedPair, x: usize, a: usize, b: usize) -> &CycNumber {
        &self.tau[(a * mp.g.order() + b) * mp.f.order() + x]
    }

    /// Checks sizes, normalization and invertibility.
    pub fn check(&self, mp: &MatchedPair) -> Result<(), Error> {
        let (nf, ng) = (mp.f.order(), mp.g.order());
        if self.sigma.len() != nf * nf * ng {
            return Err(Error::DimensionMismatch { expected: nf * nf * ng, found: self.sigma.len() });
        }
        if self.tau.len() != ng * ng * nf {
            return Err(Error::DimensionMismatch { expected: ng * ng * nf, found: self.tau.len() });
        }
        if self.sigma.iter().chain(&self.tau).any(CycNumber::is_zero) {
            return Err(Error::IncompatibleCocyclePair(String::from("a cocycle value is zero")));
        }
        for s in 0..ng {
            for x in 0..nf {
                if !self.sigma(mp, s, 0, x).is_one() || !self.sigma(mp, s, x, 0).is_one() {
                    return Err(Error::IncompatibleCocyclePair(format!("σ not normalized at s={s}, x={x}")));
                }
            }
        }
        for x in 0..nf {
            for a in 0..ng {
                if !self.tau(mp, x, 0, a).is_one() || !self.tau(mp, x, a, 0).is_one() {
                    return Err(Error::IncompatibleCocyclePair(format!("τ not normalized at x={x}, a={a}")));
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Automorphisms

/// A group automorphism given by its action on element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAutomorphism {
    pub group: PermGroup,
    pub images: Vec<usize>,
}

impl GroupAutomorphism {
    pub fn identity(group: &PermGroup) -> Self {
        GroupAutomorphism { group: group.clone(), images: (0..group.order()).collect() }
    }

    /// Inner automorphism x ↦ c x c⁻¹.
    pub fn inner(group: &PermGroup, c: usize) -> Self {
        GroupAutomorphism { group: group.clone(), images: (0..group.order()).map(|x| group.conj(x, c)).collect() }
    }

    /// Extends generator images to a homomorphism and checks bijectivity.
    pub fn from_generator_images(group: &PermGroup, gen_images: &[Perm]) -> Result<Self, Error> {
        let gens = group.generator_indices();
        if gens.len() != gen_images.len() {
            return Err(Error::DimensionMismatch { expected: gens.len(), found: gen_images.len() });
        }
        let targets = group.embed_perms(gen_images).map_err(|e| Error::InvalidData(format!("{e}")))?;
        let images = extend_homomorphism(group, group, &gens, &targets)?;
        let mut sorted = images.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != group.order() {
            return Err(Error::InvalidData(String::from("generator images do not define a bijection")));
        }
        Ok(GroupAutomorphism { group: group.clone(), images })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        GroupAutomorphism { group: self.group.clone(), images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> GroupAutomorphism {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        GroupAutomorphism { group: self.group.clone(), images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    pub fn fixes_pointwise(&self, s: &PermGroup) -> Result<bool, Error> {
        Ok(self.group.embed(s)?.iter().all(|&x| self.images[x] == x))
    }

    pub fn is_homomorphism(&self) -> bool {
        let g = &self.group;
        (0..g.order()).all(|a| (0..g.order()).all(|b| self.images[g.mul(a, b)] == g.mul(self.images[a], self.images[b])))
    }
}

/// Homomorphism from `source` to `target` determined by generator images,
/// verified on every element.
pub fn extend_homomorphism(
    source: &PermGroup,
    target: &PermGroup,
    gens: &[usize],
    gen_images: &[usize],
) -> Result<Vec<usize>, Error> {
    let mut images = vec![usize::MAX; source.order()];
    images[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (k, &g) in gens.iter().enumerate() {
            let y = source.mul(g, x);
            let v = target.mul(gen_images[k], images[x]);
            if images[y] == usize::MAX {
                images[y] = v;
                queue.push_back(y);
            } else if images[y] != v {
                return Err(Error::InvalidData(String::from("generator images do not define a homomorphism")));
            }
        }
    }
    if images.contains(&usize::MAX) {
        return Err(Error::InvalidData(String::from("generators do not generate the group")));
    }
    Ok(images)
}

/// Ad(c) for c ∈ C_N(S): an automorphism of N restricting to the identity on S.
pub fn automorphism_fixing(n: &PermGroup, s: &PermGroup, c: &Perm) -> Result<GroupAutomorphism, Error> {
    let ci = n.index_of(c).ok_or_else(|| Error::NotSubgroup(format!("{c} is not in N")))?;
    n.embed(s)?;
    if let Some(h) = s.generators().iter().find(|h| !h.commutes_with(c)) {
        return Err(Error::NotCentralizing(format!("{c} does not commute with {h}")));
    }
    let phi = GroupAutomorphism::inner(n, ci);
    if !phi.fixes_pointwise(s)? {
        return Err(Error::NotCentralizing(format!("Ad({c}) moves S")));
    }
    Ok(phi)
}

/// All homomorphisms from `source` to `target`, by exhaustive search over
/// generator images.
pub fn homomorphisms(source: &PermGroup, target: &PermGroup) -> Vec<Vec<usize>> {
    let gens = source.generator_indices();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        if let Ok(images) = extend_homomorphism(source, target, &gens, &choice) {
            out.push(images);
        }
        let mut k = 0;
        loop {
            if k == gens.len() {
                out.sort();
                out.dedup();
                return out;
            }
            choice[k] += 1;
            if choice[k] < target.order() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Isomorphisms between two groups given by generator images; stops at the first.
pub fn find_isomorphism(a: &PermGroup, b: &PermGroup) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let gens = a.generator_indices();
    let orders: Vec<usize> = gens.iter().map(|&g| a.elem_order(g)).collect();
    let candidates: Vec<Vec<usize>> =
        orders.iter().map(|&o| (0..b.order()).filter(|&y| b.elem_order(y) == o).collect()).collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }
    let mut pos = vec![0usize; gens.len()];
    loop {
        let images: Vec<usize> = pos.iter().enumerate().map(|(k, &p)| candidates[k][p]).collect();
        if let Ok(map) = extend_homomorphism(a, b, &gens, &images) {
            let mut s = map.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() == b.order() {
                return Some(map);
            }
        }
        let mut k = 0;
        loop {
            if k == gens.len() {
                return None;
            }
            pos[k] += 1;
            if pos[k] < candidates[k].len() {
                break;
            }
            pos[k] = 0;
            k += 1;
        }
    }
}

/// Sorted multiset of element orders, a cheap isomorphism invariant.
pub fn order_statistics(g: &PermGroup) -> Vec<usize> {
    let mut v: Vec<usize> = (0..g.order()).map(|a| g.elem_order(a)).collect();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> PermGroup {
        PermGroup::symmetric(4).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let z2 = PermGroup::from_cycles(2, &["(12)"]).unwrap();
        assert_eq!(z2.order(), 2);
        assert!(z2.elem(0).is_identity());
        let s3 = PermGroup::from_cycles(3, &["(123)", "(12)"]).unwrap();
        assert_eq!(s3.order(), 6);
        let v4 = PermGroup::from_cycles(4, &["(12)(34)", "(13)(24)"]).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian());
        let sorted = {
            let mut e = s3.elements().to_vec();
            e.sort();
            e
        };
        assert_eq!(sorted, s3.elements());
    }

    #[test]
    fn cap_is_enforced() {
        let pts: Vec<u32> = (0..6).collect();
        let r = PermGroup::generate_with_cap(6, vec![Perm::cycle(6, &[0, 1]), Perm::cycle(6, &pts)], 100);
        assert_eq!(r.unwrap_err(), Error::CapExceeded { cap: 100 });
    }

    #[test]
    fn parse_formats() {
        let a = Perm::parse("(1 2)(3 4)", 4).unwrap();
        let b = Perm::parse("(12)(34)", 4).unwrap();
        let c = Perm::parse("(1,2)(3,4)", 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(alloc::format!("{a}"), "(1 2)(3 4)");
        assert!(Perm::parse("(1 5)", 4).is_err());
        assert!(Perm::parse("(1 1)", 4).is_err());
    }

    #[test]
    fn centralizer_center_simple() {
        let g = s4();
        let s = g.subgroup(&[Perm::parse("(12)", 4).unwrap(), Perm::parse("(34)", 4).unwrap()]).unwrap();
        let c = g.centralizer(&s).unwrap();
        // brute-force oracle
        let brute: Vec<&Perm> = g
            .elements()
            .iter()
            .filter(|x| s.elements().iter().all(|y| x.commutes_with(y)))
            .collect();
        assert_eq!(c.order(), brute.len());
        assert_eq!(c, s);
        let s3 = PermGroup::symmetric(3).unwrap();
        assert_eq!(s3.center().order(), 1);
        assert!(PermGroup::alternating(5).unwrap().is_simple());
        assert!(!s4().is_simple());
        assert!(PermGroup::cyclic(5).is_simple());
    }

    #[test]
    fn normal_subgroups_of_s4() {
        let sizes: Vec<usize> = s4().normal_subgroups().iter().map(PermGroup::order).collect();
        assert_eq!(sizes, alloc::vec![1, 4, 12, 24]);
        assert_eq!(s4().subgroups().len(), 30);
        assert_eq!(PermGroup::alternating(5).unwrap().normal_subgroups().len(), 2);
    }

    #[test]
    fn characters() {
        let k = Conductor::new(12).unwrap();
        let z3 = PermGroup::cyclic(3);
        let d = abelian_characters(&z3, &k).unwrap();
        assert_eq!(d.order(), 3);
        for c in &d.chars {
            for i in 0..3 {
                for j in 0..3 {
                    assert_eq!(c.value(z3.mul(i, j), &k), c.value(i, &k) * c.value(j, &k));
                }
            }
        }
        let v4 = PermGroup::from_cycles(4, &["(12)", "(34)"]).unwrap();
        let d = abelian_characters(&v4, &k).unwrap();
        assert_eq!(d.order(), 4);
        assert!(d.chars[0].is_trivial());
        let k5 = Conductor::new(4).unwrap();
        assert!(matches!(abelian_characters(&z3, &k5), Err(Error::ConductorTooSmall { .. })));
        assert!(matches!(abelian_characters(&s4(), &k), Err(Error::NotAbelian(_))));
    }

    #[test]
    fn nondegenerate_cocycles() {
        let k = Conductor::new(12).unwrap();
        let v4 = PermGroup::from_cycles(4, &["(12)", "(34)"]).unwrap();
        let dec = Decomposition {
            first: alloc::vec![Perm::parse("(12)", 4).unwrap()],
            second: alloc::vec![Perm::parse("(34)", 4).unwrap()],
        };
        let w = nondegenerate_two_cocycle(&v4, &dec, &k).unwrap();
        assert!(w.is_nondegenerate());
        let z33 = PermGroup::from_cycles(6, &["(123)", "(456)"]).unwrap();
        let dec = Decomposition {
            first: alloc::vec![Perm::parse("(123)", 6).unwrap()],
            second: alloc::vec![Perm::parse("(456)", 6).unwrap()],
        };
        let w = nondegenerate_two_cocycle(&z33, &dec, &k).unwrap();
        assert!(w.is_nondegenerate());
        let triv = PermGroup::trivial(1);
        let dec = Decomposition { first: Vec::new(), second: Vec::new() };
        let w = nondegenerate_two_cocycle(&triv, &dec, &k).unwrap();
        assert!(w.values[0].is_one());
        let z2 = PermGroup::cyclic(2);
        assert!(matches!(nondegenerate_two_cocycle(&z2, &dec, &k), Err(Error::NotSquareOrder(2))));
    }

    #[test]
    fn matched_pairs() {
        let s3 = PermGroup::symmetric(3).unwrap();
        let g = s3.subgroup(&[Perm::parse("(123)", 3).unwrap()]).unwrap();
        let f = s3.subgroup(&[Perm::parse("(12)", 3).unwrap()]).unwrap();
        let mp = matched_pair_from_factorization(&s3, &f, &g).unwrap();
        mp.check().unwrap();
        let a4 = PermGroup::alternating(4).unwrap();
        let g4 = s4().subgroup(a4.generators()).unwrap();
        let f4 = s4().subgroup(&[Perm::parse("(12)", 4).unwrap()]).unwrap();
        matched_pair_from_factorization(&s4(), &f4, &g4).unwrap();
        assert!(matched_pair_from_factorization(&s4(), &g4, &g4).is_err());
    }

    #[test]
    fn automorphisms() {
        let n = s4();
        let s = n.subgroup(&[Perm::parse("(12)", 4).unwrap(), Perm::parse("(34)", 4).unwrap()]).unwrap();
        let phi = automorphism_fixing(&n, &s, &Perm::parse("(12)", 4).unwrap()).unwrap();
        assert!(phi.fixes_pointwise(&s).unwrap());
        assert!(phi.is_homomorphism());
        assert!(automorphism_fixing(&n, &s, &Perm::parse("(13)", 4).unwrap()).is_err());
        let s3 = PermGroup::symmetric(3).unwrap();
        let triv = s3.subgroup(&[]).unwrap();
        let psi = automorphism_fixing(&s3, &triv, &Perm::parse("(123)", 3).unwrap()).unwrap();
        assert_eq!(psi.order(), 3);
        // Ad is a homomorphism C_N(S) → Aut N
        for a in 0..n.order() {
            for b in 0..n.order() {
                let lhs = GroupAutomorphism::inner(&n, n.mul(a, b));
                let rhs = GroupAutomorphism::inner(&n, a).compose(&GroupAutomorphism::inner(&n, b));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn isomorphism_and_quotients() {
        let z6 = PermGroup::cyclic(6);
        let z2z3 = PermGroup::direct_product(&PermGroup::cyclic(2), &PermGroup::cyclic(3)).unwrap();
        assert!(find_isomorphism(&z6, &z2z3).is_some());
        let v4 = PermGroup::from_cycles(4, &["(12)", "(34)"]).unwrap();
        assert!(find_isomorphism(&PermGroup::cyclic(4), &v4).is_none());
        let g = s4();
        let v = g.normal_subgroup_indices()[1].clone();
        let q = g.quotient(&v).unwrap();
        assert_eq!(q.order(), 6);
        assert!(find_isomorphism(&q, &PermGroup::symmetric(3).unwrap()).is_some());
        assert_eq!(homomorphisms(&PermGroup::cyclic(2), &PermGroup::symmetric(3).unwrap()).len(), 4);
    }
}
