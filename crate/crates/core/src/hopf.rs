//! Finite-dimensional Hopf algebras as sparse structure tensors, the axiom
//! verifier, linear maps, and the primitive transforms (dual, tensor
//! product, twist, cocycle twist).
//!
//! Elements of H^{⊗k} are [`SparseVec`]s over flattened indices
//! `i_1·n^{k-1} + … + i_k`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::groups::{abelian_characters, DualCocycle, PermGroup};
use crate::linalg::{krylov_min_poly, Accum, SparseVec, Subspace};
use crate::scalars::{Conductor, CycNumber};

// ---------------------------------------------------------------------------
// Provenance

/// A permutation group recorded by its generators; the basis order of a
/// group algebra built from it is the sorted element order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<String>,
}

impl GroupSpec {
    pub fn of(g: &PermGroup) -> Self {
        GroupSpec { degree: g.degree(), generators: g.generators().iter().map(|p| p.to_string()).collect() }
    }

    pub fn build(&self) -> Result<PermGroup, Error> {
        let gens: Vec<&str> = self.generators.iter().map(String::as_str).collect();
        PermGroup::from_cycles(self.degree, &gens)
    }
}

/// What is known about the Hopf structure as a whole.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum Structure {
    #[default]
    Unknown,
    /// The one-dimensional Hopf algebra k.
    Trivial,
    /// kG with basis the sorted elements of G.
    GroupAlgebra(GroupSpec),
    /// k^G with basis the dual basis δ_g over the sorted elements of G.
    DualGroupAlgebra(GroupSpec),
}

/// A named subspace carried along with a construction, such as ι(K) for
/// the canonical exact sequence of an extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subobject {
    pub name: String,
    pub kind: String,
    pub basis: Vec<SparseVec>,
}

pub const KIND_SEQUENCE_KERNEL: &str = "sequence-kernel";
pub const KIND_SECTION_IMAGE: &str = "section-image";
pub const KIND_SUBALGEBRA: &str = "subalgebra";
/// Columns of a candidate isomorphism from the construction named in the
/// `iso_source` parameter onto this object.
pub const KIND_SUGGESTED_ISO: &str = "suggested-iso";

/// How an object was built: construction name, parameters, structural
/// knowledge and named subobjects.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Provenance {
    pub construction: String,
    pub params: Vec<(String, String)>,
    pub structure: Structure,
    pub subobjects: Vec<Subobject>,
    pub notes: Vec<String>,
}

impl Provenance {
    pub fn new(construction: &str) -> Self {
        Provenance { construction: construction.into(), ..Default::default() }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.push((key.into(), value.to_string()));
        self
    }

    pub fn structure(mut self, s: Structure) -> Self {
        self.structure = s;
        self
    }

    pub fn subobject(mut self, name: &str, kind: &str, basis: Vec<SparseVec>) -> Self {
        self.subobjects.push(Subobject { name: name.into(), kind: kind.into(), basis });
        self
    }

    pub fn note(mut self, n: &str) -> Self {
        self.notes.push(n.into());
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

// ---------------------------------------------------------------------------
// FinHopf

/// A finite-dimensional Hopf algebra given by structure tensors.
#[derive(Clone, Debug)]
pub struct FinHopf {
    field: Conductor,
    labels: Vec<String>,
    mult: Vec<SparseVec>,
    unit: SparseVec,
    comult: Vec<SparseVec>,
    counit: Vec<CycNumber>,
    antipode: Vec<SparseVec>,
    provenance: Provenance,
}

/// The raw tensors of a [`FinHopf`], for building and serialization.
#[derive(Clone, Debug)]
pub struct HopfParts {
    pub field: Conductor,
    pub labels: Vec<String>,
    /// `mult[i*n+j] = e_i e_j`
    pub mult: Vec<SparseVec>,
    pub unit: SparseVec,
    /// `comult[i] = Δ(e_i)` over indices `j*n+k`
    pub comult: Vec<SparseVec>,
    pub counit: Vec<CycNumber>,
    /// `antipode[i] = S(e_i)`
    pub antipode: Vec<SparseVec>,
    pub provenance: Provenance,
}

impl FinHopf {
    /// Assembles tensors after checking their shapes; the Hopf axioms are
    /// checked separately by [`verify_hopf`].
    pub fn from_parts(p: HopfParts) -> Result<Self, Error> {
        let n = p.labels.len();
        let shape = |expected: usize, found: usize| {
            if expected == found {
                Ok(())
            } else {
                Err(Error::DimensionMismatch { expected, found })
            }
        };
        shape(n * n, p.mult.len())?;
        shape(n, p.comult.len())?;
        shape(n, p.counit.len())?;
        shape(n, p.antipode.len())?;
        let bound = |v: &SparseVec, lim: usize| v.max_index().is_none_or(|m| m < lim);
        if !p.mult.iter().all(|v| bound(v, n))
            || !bound(&p.unit, n)
            || !p.comult.iter().all(|v| bound(v, n * n))
            || !p.antipode.iter().all(|v| bound(v, n))
        {
            return Err(Error::InvalidData(String::from("tensor index out of range")));
        }
        let all_same = p.mult.iter().chain(&p.comult).chain(&p.antipode).chain(core::iter::once(&p.unit))
            .flat_map(|v| v.iter())
            .map(|(_, c)| c.conductor().n())
            .chain(p.counit.iter().map(|c| c.conductor().n()))
            .all(|m| m == p.field.n());
        if !all_same {
            return Err(Error::InvalidData(String::from("coefficients from a different conductor")));
        }
        Ok(FinHopf {
            field: p.field,
            labels: p.labels,
            mult: p.mult,
            unit: p.unit,
            comult: p.comult,
            counit: p.counit,
            antipode: p.antipode,
            provenance: p.provenance,
        })
    }

    pub fn into_parts(self) -> HopfParts {
        HopfParts {
            field: self.field,
            labels: self.labels,
            mult: self.mult,
            unit: self.unit,
            comult: self.comult,
            counit: self.counit,
            antipode: self.antipode,
            provenance: self.provenance,
        }
    }

    pub fn to_parts(&self) -> HopfParts {
        self.clone().into_parts()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> &Conductor {
        &self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn with_provenance(mut self, p: Provenance) -> Self {
        self.provenance = p;
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    pub fn mult_tensor(&self) -> &[SparseVec] {
        &self.mult
    }

    pub fn comult_tensor(&self) -> &[SparseVec] {
        &self.comult
    }

    pub fn antipode_tensor(&self) -> &[SparseVec] {
        &self.antipode
    }

    pub fn counit_tensor(&self) -> &[CycNumber] {
        &self.counit
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::unit(i, &self.field)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim() + j]
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut acc = Accum::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_scaled(&self.mult[i * n + j], &(x * y));
            }
        }
        acc.finish()
    }

    pub fn comult(&self, a: &SparseVec) -> SparseVec {
        let mut acc = Accum::new();
        for (i, x) in a.iter() {
            acc.add_scaled(&self.comult[*i], x);
        }
        acc.finish()
    }

    pub fn counit(&self, a: &SparseVec) -> CycNumber {
        let mut acc = self.field.zero();
        for (i, x) in a.iter() {
            acc += &(x * &self.counit[*i]);
        }
        acc
    }

    pub fn antipode(&self, a: &SparseVec) -> SparseVec {
        let mut acc = Accum::new();
        for (i, x) in a.iter() {
            acc.add_scaled(&self.antipode[*i], x);
        }
        acc.finish()
    }

    /// Product in H^{⊗k}.
    pub fn mul_power(&self, k: usize, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = Accum::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let c = x * y;
                for (idx, d) in self.expand_product(k, *i, *j) {
                    acc.push(idx, &c * &d);
                }
            }
        }
        acc.finish()
    }

    fn expand_product(&self, k: usize, a: usize, b: usize) -> Vec<(usize, CycNumber)> {
        let n = self.dim();
        let mut da = vec![0; k];
        let mut db = vec![0; k];
        let (mut x, mut y) = (a, b);
        for t in (0..k).rev() {
            da[t] = x % n;
            db[t] = y % n;
            x /= n;
            y /= n;
        }
        let mut terms: Vec<(usize, CycNumber)> = vec![(0, self.field.one())];
        for t in 0..k {
            let m = &self.mult[da[t] * n + db[t]];
            if m.is_empty() {
                return Vec::new();
            }
            let mut next = Vec::with_capacity(terms.len() * m.len());
            for (idx, c) in &terms {
                for (j, d) in m.iter() {
                    next.push((idx * n + j, c * d));
                }
            }
            terms = next;
        }
        terms
    }

    /// 1 ⊗ … ⊗ 1 in H^{⊗k}.
    pub fn one_power(&self, k: usize) -> SparseVec {
        let n = self.dim();
        let mut v = SparseVec::single(0, self.field.one());
        let mut first = true;
        for _ in 0..k {
            v = if first {
                first = false;
                self.unit.clone()
            } else {
                tensor_vecs(&v, &self.unit, n)
            };
        }
        v
    }

    /// (Δ ⊗ id)(x) for x ∈ H⊗H.
    pub fn comult_left(&self, x: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut acc = Accum::new();
        for (ij, c) in x.iter() {
            let (i, j) = (ij / n, ij % n);
            for (pq, d) in self.comult[i].iter() {
                acc.push(pq * n + j, c * d);
            }
        }
        acc.finish()
    }

    /// (id ⊗ Δ)(x) for x ∈ H⊗H.
    pub fn comult_right(&self, x: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut acc = Accum::new();
        for (ij, c) in x.iter() {
            let (i, j) = (ij / n, ij % n);
            for (pq, d) in self.comult[j].iter() {
                acc.push(i * n * n + pq, c * d);
            }
        }
        acc.finish()
    }

    /// m ∘ (f ⊗ g)(x) for x ∈ H⊗H.
    pub fn contract<F, G>(&self, x: &SparseVec, f: F, g: G) -> SparseVec
    where
        F: Fn(usize) -> SparseVec,
        G: Fn(usize) -> SparseVec,
    {
        let n = self.dim();
        let mut acc = Accum::new();
        for (ij, c) in x.iter() {
            let p = self.mul(&f(ij / n), &g(ij % n));
            acc.add_scaled(&p, c);
        }
        acc.finish()
    }

    /// Flip of the two tensor factors.
    pub fn flip(&self, x: &SparseVec) -> SparseVec {
        let n = self.dim();
        x.map_indices(|ij| (ij % n) * n + ij / n)
    }

    /// Inverse of an element of H^{⊗k} through its minimal polynomial.
    pub fn inverse_power(&self, k: usize, x: &SparseVec) -> Result<SparseVec, Error> {
        let one = self.one_power(k);
        let max = self.dim().pow(k as u32);
        let p = krylov_min_poly(&one, |v| self.mul_power(k, x, v), max, &self.field)
            .ok_or_else(|| Error::NotInvertible(String::from("minimal polynomial not found")))?;
        if p[0].is_zero() {
            return Err(Error::NotInvertible(String::from("element is a zero divisor")));
        }
        // x^{-1} = -(1/a_0) Σ_{k≥1} a_k x^{k-1}, by Horner.
        let mut acc = SparseVec::new();
        for a in p[1..].iter().rev() {
            acc = self.mul_power(k, x, &acc).axpy(a, &one);
        }
        let scale = -&p[0].inv()?;
        Ok(acc.scale(&scale))
    }

    pub fn inverse(&self, x: &SparseVec) -> Result<SparseVec, Error> {
        self.inverse_power(1, x)
    }

    /// Identical structure constants (labels and provenance ignored).
    pub fn structure_eq(&self, other: &FinHopf) -> bool {
        self.field == other.field
            && self.dim() == other.dim()
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    /// First differing tensor, if any, for reports.
    pub fn structure_difference(&self, other: &FinHopf) -> Option<String> {
        if self.dim() != other.dim() {
            return Some(format!("dimension {} vs {}", self.dim(), other.dim()));
        }
        if self.field != other.field {
            return Some(format!("conductor {} vs {}", self.field.n(), other.field.n()));
        }
        let n = self.dim();
        if let Some(k) = (0..n * n).find(|&k| self.mult[k] != other.mult[k]) {
            return Some(format!("multiplication at ({}, {})", k / n, k % n));
        }
        if self.unit != other.unit {
            return Some(String::from("unit"));
        }
        if let Some(i) = (0..n).find(|&i| self.comult[i] != other.comult[i]) {
            return Some(format!("comultiplication at {i}"));
        }
        if let Some(i) = (0..n).find(|&i| self.counit[i] != other.counit[i]) {
            return Some(format!("counit at {i}"));
        }
        if let Some(i) = (0..n).find(|&i| self.antipode[i] != other.antipode[i]) {
            return Some(format!("antipode at {i}"));
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.mult[i * n + j] == self.mult[j * n + i]))
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim()).all(|i| self.flip(&self.comult[i]) == self.comult[i])
    }

    /// Basis of the augmentation ideal H⁺ = ker ε.
    pub fn augmentation_ideal(&self) -> Vec<SparseVec> {
        let pivot = self.counit.iter().position(|c| !c.is_zero());
        let Some(p) = pivot else {
            return (0..self.dim()).map(|i| self.basis(i)).collect();
        };
        let cp = self.counit[p].clone();
        (0..self.dim())
            .filter(|&i| i != p)
            .map(|i| {
                // e_i − (ε(e_i)/ε(e_p)) e_p
                let r = self.counit[i].try_div(&cp).expect("nonzero");
                self.basis(i).axpy(&-&r, &self.basis(p))
            })
            .collect()
    }

    /// Center of the algebra.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // x = Σ x_i e_i is central iff Σ x_i (e_i e_j − e_j e_i) = 0 for every j.
        let cols: Vec<SparseVec> = (0..n)
            .map(|i| {
                let mut acc = Accum::new();
                for j in 0..n {
                    let c = self.mult[i * n + j].sub(&self.mult[j * n + i]);
                    for (k, v) in c.iter() {
                        acc.push(j * n + k, v.clone());
                    }
                }
                acc.finish()
            })
            .collect();
        let ker = crate::linalg::kernel_with_field(&cols, &self.field);
        Subspace::spanned_by(n, &ker)
    }
}

/// a ⊗ b for a ∈ H^{⊗p}, b ∈ H (flattened, `n` = dim H).
pub fn tensor_vecs(a: &SparseVec, b: &SparseVec, n: usize) -> SparseVec {
    let mut acc = Accum::new();
    for (i, x) in a.iter() {
        for (j, y) in b.iter() {
            acc.push(i * n + j, x * y);
        }
    }
    acc.finish()
}

/// a ⊗ b with `b` living in a space of dimension `nb`.
pub fn tensor_vecs_dim(a: &SparseVec, b: &SparseVec, nb: usize) -> SparseVec {
    tensor_vecs(a, b, nb)
}

// ---------------------------------------------------------------------------
// Verification

/// Outcome of one named identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub failures: usize,
    pub witness: Option<String>,
}

/// Named results of every Hopf-axiom check.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn summary(&self) -> String {
        match self.failures().next() {
            None => String::from("all Hopf axioms hold"),
            Some(c) => format!("{} fails ({})", c.name, c.witness.clone().unwrap_or_default()),
        }
    }

    pub fn into_result(self) -> Result<(), Error> {
        if self.passed() {
            Ok(())
        } else {
            Err(Error::HopfAxioms(self.summary()))
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed {
                writeln!(f, "{}: pass", c.name)?;
            } else {
                writeln!(f, "{}: FAIL x{} ({})", c.name, c.failures, c.witness.as_deref().unwrap_or(""))?;
            }
        }
        Ok(())
    }
}

struct Check {
    name: &'static str,
    failures: usize,
    witness: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check { name, failures: 0, witness: None }
    }

    fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult { name: self.name.into(), passed: self.failures == 0, failures: self.failures, witness: self.witness }
    }
}

impl FinHopf {
    /// Basis elements whose left-nested products span H, or `None` when
    /// they do not (e.g. the unit axiom fails).
    pub fn algebra_generators(&self) -> Option<Vec<usize>> {
        let n = self.dim();
        let mut span = Subspace::zero(n);
        let mut vecs: Vec<SparseVec> = Vec::new();
        let mut applied: Vec<usize> = Vec::new();
        let mut gens: Vec<usize> = Vec::new();
        if span.insert(&self.unit) {
            vecs.push(self.unit.clone());
            applied.push(0);
        }
        for i in 0..n {
            if span.dim() == n {
                break;
            }
            if span.contains(&self.basis(i)) {
                continue;
            }
            gens.push(i);
            let mut k = 0;
            while k < vecs.len() {
                while applied[k] < gens.len() {
                    let g = gens[applied[k]];
                    applied[k] += 1;
                    let w = self.mul(&self.basis(g), &vecs[k]);
                    if span.insert(&w) {
                        vecs.push(w);
                        applied.push(0);
                    }
                }
                k += 1;
            }
        }
        (span.dim() == n).then_some(gens)
    }
}

/// Checks every Hopf axiom with exact equality. Associativity and the
/// multiplicativity of Δ and ε are tested against a generating set of the
/// algebra, which suffices by induction on left-nested words.
pub fn verify_hopf(h: &FinHopf) -> VerifyReport {
    let n = h.dim();
    let lab = |i: usize| h.labels[i].clone();
    let mut checks = Vec::new();

    let mut unit = Check::new("unit");
    for i in 0..n {
        let e = h.basis(i);
        unit.expect(h.mul(&h.unit, &e) == e && h.mul(&e, &h.unit) == e, || format!("1·{0} = {0} = {0}·1", lab(i)));
    }
    let unit_ok = unit.failures == 0;
    checks.push(unit.finish());

    let gens = if unit_ok { h.algebra_generators() } else { None };
    let gens: Vec<usize> = gens.unwrap_or_else(|| (0..n).collect());

    let mut assoc = Check::new("associativity");
    for &x in &gens {
        for i in 0..n {
            let xi = &h.mult[x * n + i];
            for j in 0..n {
                let lhs = h.mul(xi, &h.basis(j));
                let rhs = h.mul(&h.basis(x), &h.mult[i * n + j]);
                assoc.expect(lhs == rhs, || format!("({}·{})·{}", lab(x), lab(i), lab(j)));
            }
        }
    }
    checks.push(assoc.finish());

    let mut coassoc = Check::new("coassociativity");
    for i in 0..n {
        let d = &h.comult[i];
        coassoc.expect(h.comult_left(d) == h.comult_right(d), || format!("Δ²({})", lab(i)));
    }
    checks.push(coassoc.finish());

    let mut counit = Check::new("counit");
    for i in 0..n {
        let d = &h.comult[i];
        let mut left = Accum::new();
        let mut right = Accum::new();
        for (jk, c) in d.iter() {
            let (j, k) = (jk / n, jk % n);
            left.push(k, c * &h.counit[j]);
            right.push(j, c * &h.counit[k]);
        }
        let e = h.basis(i);
        counit.expect(left.finish() == e && right.finish() == e, || format!("(ε⊗id)Δ({0}) = {0} = (id⊗ε)Δ({0})", lab(i)));
    }
    checks.push(counit.finish());

    let mut delta_alg = Check::new("comultiplication is an algebra map");
    let one2 = h.one_power(2);
    delta_alg.expect(h.comult(&h.unit) == one2, || String::from("Δ(1) = 1⊗1"));
    for &x in &gens {
        for j in 0..n {
            let lhs = h.comult(&h.mult[x * n + j]);
            let rhs = h.mul_power(2, &h.comult[x], &h.comult[j]);
            delta_alg.expect(lhs == rhs, || format!("Δ({}·{})", lab(x), lab(j)));
        }
    }
    checks.push(delta_alg.finish());

    let mut eps_alg = Check::new("counit is an algebra map");
    eps_alg.expect(h.counit(&h.unit).is_one(), || String::from("ε(1) = 1"));
    for &x in &gens {
        for j in 0..n {
            let lhs = h.counit(&h.mult[x * n + j]);
            eps_alg.expect(lhs == &h.counit[x] * &h.counit[j], || format!("ε({}·{})", lab(x), lab(j)));
        }
    }
    checks.push(eps_alg.finish());

    let mut anti = Check::new("antipode");
    for i in 0..n {
        let d = &h.comult[i];
        let expected = h.unit.scale(&h.counit[i]);
        let left = h.contract(d, |a| h.antipode[a].clone(), |b| h.basis(b));
        let right = h.contract(d, |a| h.basis(a), |b| h.antipode[b].clone());
        anti.expect(left == expected && right == expected, || format!("m(S⊗id)Δ({0}) = ε({0})1 = m(id⊗S)Δ({0})", lab(i)));
    }
    checks.push(anti.finish());

    let mut bij = Check::new("antipode is bijective");
    let rank = Subspace::spanned_by(n, &h.antipode).dim();
    bij.expect(rank == n, || format!("rank {rank} < {n}"));
    checks.push(bij.finish());

    VerifyReport { checks }
}

/// Verifies and returns the object, or the first failure as an error.
pub fn verified(h: FinHopf) -> Result<FinHopf, Error> {
    verify_hopf(&h).into_result()?;
    Ok(h)
}

// ---------------------------------------------------------------------------
// Linear maps

/// Which structure a map has been verified to preserve.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Certified {
    pub algebra_map: bool,
    pub coalgebra_map: bool,
    pub hopf_map: bool,
}

/// A linear map between Hopf algebras, given by the images of basis vectors.
#[derive(Clone, Debug)]
pub struct LinMap {
    pub source: Arc<FinHopf>,
    pub target: Arc<FinHopf>,
    pub columns: Vec<SparseVec>,
    pub certified: Certified,
}

impl LinMap {
    pub fn new(source: Arc<FinHopf>, target: Arc<FinHopf>, columns: Vec<SparseVec>) -> Result<Self, Error> {
        if columns.len() != source.dim() {
            return Err(Error::DimensionMismatch { expected: source.dim(), found: columns.len() });
        }
        if columns.iter().any(|c| c.max_index().is_some_and(|m| m >= target.dim())) {
            return Err(Error::InvalidData(String::from("map image index out of range")));
        }
        Ok(LinMap { source, target, columns, certified: Certified::default() })
    }

    pub fn identity(h: Arc<FinHopf>) -> Self {
        let columns = (0..h.dim()).map(|i| h.basis(i)).collect();
        LinMap {
            source: h.clone(),
            target: h,
            columns,
            certified: Certified { algebra_map: true, coalgebra_map: true, hopf_map: true },
        }
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Accum::new();
        for (i, c) in v.iter() {
            acc.add_scaled(&self.columns[*i], c);
        }
        acc.finish()
    }

    /// (f ⊗ f)(x) for x in source ⊗ source.
    pub fn apply2(&self, x: &SparseVec) -> SparseVec {
        let (n, m) = (self.source.dim(), self.target.dim());
        let mut acc = Accum::new();
        for (ij, c) in x.iter() {
            for (p, a) in self.columns[ij / n].iter() {
                for (q, b) in self.columns[ij % n].iter() {
                    acc.push(p * m + q, &(c * a) * b);
                }
            }
        }
        acc.finish()
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinMap) -> Result<LinMap, Error> {
        if other.target.dim() != self.source.dim() {
            return Err(Error::DimensionMismatch { expected: self.source.dim(), found: other.target.dim() });
        }
        let columns = other.columns.iter().map(|c| self.apply(c)).collect();
        let mut m = LinMap::new(other.source.clone(), self.target.clone(), columns)?;
        m.certified = Certified {
            algebra_map: self.certified.algebra_map && other.certified.algebra_map,
            coalgebra_map: self.certified.coalgebra_map && other.certified.coalgebra_map,
            hopf_map: self.certified.hopf_map && other.certified.hopf_map,
        };
        Ok(m)
    }

    pub fn rank(&self) -> usize {
        Subspace::spanned_by(self.target.dim(), &self.columns).dim()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn image(&self) -> Subspace {
        Subspace::spanned_by(self.target.dim(), &self.columns)
    }

    pub fn kernel(&self) -> Vec<SparseVec> {
        crate::linalg::kernel_with_field(&self.columns, self.source.field())
    }

    /// First algebra-map failure, if any.
    pub fn algebra_map_failure(&self) -> Option<String> {
        let (s, t) = (&*self.source, &*self.target);
        if self.apply(s.unit()) != *t.unit() {
            return Some(String::from("f(1) ≠ 1"));
        }
        let n = s.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.apply(s.mul_basis(i, j));
                let rhs = t.mul(&self.columns[i], &self.columns[j]);
                if lhs != rhs {
                    return Some(format!("f({}·{}) ≠ f({})f({})", s.labels()[i], s.labels()[j], s.labels()[i], s.labels()[j]));
                }
            }
        }
        None
    }

    /// First coalgebra-map failure, if any.
    pub fn coalgebra_map_failure(&self) -> Option<String> {
        let (s, t) = (&*self.source, &*self.target);
        for i in 0..s.dim() {
            if t.counit(&self.columns[i]) != s.counit_tensor()[i] {
                return Some(format!("ε(f({})) ≠ ε({})", s.labels()[i], s.labels()[i]));
            }
            if self.apply2(&s.comult_tensor()[i]) != t.comult(&self.columns[i]) {
                return Some(format!("(f⊗f)Δ({}) ≠ Δf({})", s.labels()[i], s.labels()[i]));
            }
        }
        None
    }

    pub fn antipode_failure(&self) -> Option<String> {
        let (s, t) = (&*self.source, &*self.target);
        (0..s.dim())
            .find(|&i| self.apply(&s.antipode_tensor()[i]) != t.antipode(&self.columns[i]))
            .map(|i| format!("f(S({})) ≠ S(f({}))", s.labels()[i], s.labels()[i]))
    }

    /// Checks all three properties and records them.
    pub fn certify(mut self) -> Self {
        let alg = self.algebra_map_failure().is_none();
        let coalg = self.coalgebra_map_failure().is_none();
        let anti = alg && coalg && self.antipode_failure().is_none();
        self.certified = Certified { algebra_map: alg, coalgebra_map: coalg, hopf_map: anti };
        self
    }

    /// Certifies as a Hopf map or reports the first failing identity.
    pub fn certify_hopf(self) -> Result<Self, Error> {
        if let Some(w) = self.algebra_map_failure() {
            return Err(Error::NotCertified(w));
        }
        if let Some(w) = self.coalgebra_map_failure() {
            return Err(Error::NotCertified(w));
        }
        if let Some(w) = self.antipode_failure() {
            return Err(Error::NotCertified(w));
        }
        let mut m = self;
        m.certified = Certified { algebra_map: true, coalgebra_map: true, hopf_map: true };
        Ok(m)
    }

    /// Inverse of a bijective map; inherits the certificate.
    pub fn inverse(&self) -> Result<LinMap, Error> {
        let cols = crate::linalg::invert_columns(&self.columns, self.source.field())
            .ok_or_else(|| Error::NotInvertible(String::from("linear map is singular")))?;
        if self.source.dim() != self.target.dim() {
            return Err(Error::NotInvertible(String::from("dimensions differ")));
        }
        let mut m = LinMap::new(self.target.clone(), self.source.clone(), cols)?;
        m.certified = self.certified;
        Ok(m)
    }

    pub fn is_identity_matrix(&self) -> bool {
        self.source.dim() == self.target.dim()
            && self.columns.iter().enumerate().all(|(i, c)| c.len() == 1 && c.entries()[0].0 == i && c.entries()[0].1.is_one())
    }
}

// ---------------------------------------------------------------------------
// Basic objects

/// The one-dimensional Hopf algebra k.
pub fn trivial_hopf(field: &Conductor) -> FinHopf {
    let one = field.one();
    FinHopf::from_parts(HopfParts {
        field: field.clone(),
        labels: vec![String::from("1")],
        mult: vec![SparseVec::single(0, one.clone())],
        unit: SparseVec::single(0, one.clone()),
        comult: vec![SparseVec::single(0, one.clone())],
        counit: vec![one.clone()],
        antipode: vec![SparseVec::single(0, one)],
        provenance: Provenance::new("trivial").structure(Structure::Trivial),
    })
    .expect("well-formed")
}

/// The group algebra kG on the sorted elements of G.
pub fn group_algebra(g: &PermGroup, field: &Conductor) -> FinHopf {
    let n = g.order();
    let mut mult = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mult.push(SparseVec::unit(g.mul(a, b), field));
        }
    }
    FinHopf::from_parts(HopfParts {
        field: field.clone(),
        labels: g.elements().iter().map(|p| p.to_string()).collect(),
        mult,
        unit: SparseVec::unit(0, field),
        comult: (0..n).map(|a| SparseVec::unit(a * n + a, field)).collect(),
        counit: vec![field.one(); n],
        antipode: (0..n).map(|a| SparseVec::unit(g.inv(a), field)).collect(),
        provenance: Provenance::new("group_algebra")
            .param("group", GroupSpecDisplay(&GroupSpec::of(g)))
            .structure(Structure::GroupAlgebra(GroupSpec::of(g))),
    })
    .expect("well-formed")
}

/// The dual group algebra k^G with basis δ_g.
pub fn dual_group_algebra(g: &PermGroup, field: &Conductor) -> FinHopf {
    let n = g.order();
    let mut mult = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mult.push(if a == b { SparseVec::unit(a, field) } else { SparseVec::new() });
        }
    }
    let comult = (0..n)
        .map(|c| SparseVec::from_terms((0..n).map(|u| (u * n + g.mul(g.inv(u), c), field.one()))))
        .collect();
    FinHopf::from_parts(HopfParts {
        field: field.clone(),
        labels: g.elements().iter().map(|p| format!("δ{p}")).collect(),
        mult,
        unit: SparseVec::from_terms((0..n).map(|a| (a, field.one()))),
        comult,
        counit: (0..n).map(|a| if a == 0 { field.one() } else { field.zero() }).collect(),
        antipode: (0..n).map(|a| SparseVec::unit(g.inv(a), field)).collect(),
        provenance: Provenance::new("dual_group_algebra")
            .param("group", GroupSpecDisplay(&GroupSpec::of(g)))
            .structure(Structure::DualGroupAlgebra(GroupSpec::of(g))),
    })
    .expect("well-formed")
}

/// Display adapter for a group given by generators.
pub struct GroupSpecDisplay<'a>(pub &'a GroupSpec);

impl fmt::Display for GroupSpecDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree {} <", self.0.degree)?;
        for (k, g) in self.0.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

fn dual_label(l: &str) -> String {
    match l.strip_suffix('*') {
        Some(base) => String::from(base),
        None => format!("{l}*"),
    }
}

/// The dual Hopf algebra on the dual basis.
pub fn dual(h: &FinHopf) -> FinHopf {
    let n = h.dim();
    let field = h.field().clone();
    let mut mult_acc: Vec<Accum> = (0..n * n).map(|_| Accum::new()).collect();
    for (k, d) in h.comult.iter().enumerate() {
        for (ij, c) in d.iter() {
            mult_acc[*ij].push(k, c.clone());
        }
    }
    let mut comult_acc: Vec<Accum> = (0..n).map(|_| Accum::new()).collect();
    for (ij, m) in h.mult.iter().enumerate() {
        for (k, c) in m.iter() {
            comult_acc[*k].push(ij, c.clone());
        }
    }
    let mut anti_acc: Vec<Accum> = (0..n).map(|_| Accum::new()).collect();
    for (j, s) in h.antipode.iter().enumerate() {
        for (i, c) in s.iter() {
            anti_acc[*i].push(j, c.clone());
        }
    }
    let counit = (0..n).map(|k| h.unit.get(k).cloned().unwrap_or_else(|| field.zero())).collect();
    let unit = SparseVec::from_dense(&h.counit);
    let structure = match &h.provenance.structure {
        Structure::GroupAlgebra(g) => Structure::DualGroupAlgebra(g.clone()),
        Structure::DualGroupAlgebra(g) => Structure::GroupAlgebra(g.clone()),
        Structure::Trivial => Structure::Trivial,
        Structure::Unknown => Structure::Unknown,
    };
    let provenance = Provenance::new("dual").param("of", &h.provenance.construction).structure(structure);
    FinHopf {
        field,
        labels: h.labels.iter().map(|l| dual_label(l)).collect(),
        mult: mult_acc.into_iter().map(Accum::finish).collect(),
        unit,
        comult: comult_acc.into_iter().map(Accum::finish).collect(),
        counit,
        antipode: anti_acc.into_iter().map(Accum::finish).collect(),
        provenance,
    }
}

/// H ⊗ K with basis e_i ⊗ f_a at index i·dim K + a.
pub fn tensor_hopf(h: &FinHopf, k: &FinHopf) -> Result<FinHopf, Error> {
    if h.field() != k.field() {
        return Err(Error::ConductorMismatch(h.field().n(), k.field().n()));
    }
    let (n, m) = (h.dim(), k.dim());
    let d = n * m;
    let pair = |a: &SparseVec, b: &SparseVec| tensor_vecs(a, b, m);
    let mut mult = Vec::with_capacity(d * d);
    for i in 0..n {
        for a in 0..m {
            for j in 0..n {
                for b in 0..m {
                    mult.push(pair(h.mul_basis(i, j), k.mul_basis(a, b)));
                }
            }
        }
    }
    let mut comult = Vec::with_capacity(d);
    for i in 0..n {
        for a in 0..m {
            let mut acc = Accum::new();
            for (pq, x) in h.comult[i].iter() {
                let (p, q) = (pq / n, pq % n);
                for (rs, y) in k.comult[a].iter() {
                    let (r, s) = (rs / m, rs % m);
                    acc.push((p * m + r) * d + (q * m + s), x * y);
                }
            }
            comult.push(acc.finish());
        }
    }
    let mut counit = Vec::with_capacity(d);
    let mut antipode = Vec::with_capacity(d);
    let mut labels = Vec::with_capacity(d);
    for i in 0..n {
        for a in 0..m {
            counit.push(&h.counit[i] * &k.counit[a]);
            antipode.push(pair(&h.antipode[i], &k.antipode[a]));
            labels.push(format!("{}⊗{}", h.labels[i], k.labels[a]));
        }
    }
    FinHopf::from_parts(HopfParts {
        field: h.field().clone(),
        labels,
        mult,
        unit: pair(&h.unit, &k.unit),
        comult,
        counit,
        antipode,
        provenance: Provenance::new("tensor")
            .param("left", &h.provenance.construction)
            .param("right", &k.provenance.construction),
    })
}

// ---------------------------------------------------------------------------
// Twists

/// The pair (S, ω) a twist of kN was built from.
#[derive(Clone, Debug)]
pub struct TwistPair {
    pub n: PermGroup,
    pub s: PermGroup,
    pub omega: DualCocycle,
}

/// An invertible J ∈ H⊗H satisfying the twist equation.
#[derive(Clone, Debug)]
pub struct TwistElement {
    pub host: Arc<FinHopf>,
    pub element: SparseVec,
    pub inverse: SparseVec,
    pub pair: Option<TwistPair>,
}

impl TwistElement {
    /// Checks invertibility, counit normalization and
    /// (Δ⊗id)(J)(J⊗1) = (id⊗Δ)(J)(1⊗J).
    pub fn new(host: Arc<FinHopf>, element: SparseVec, inverse: Option<SparseVec>) -> Result<Self, Error> {
        let inverse = match inverse {
            Some(i) => i,
            None => host.inverse_power(2, &element)?,
        };
        let t = TwistElement { host, element, inverse, pair: None };
        t.check()?;
        Ok(t)
    }

    pub fn trivial(host: Arc<FinHopf>) -> Self {
        let one = host.one_power(2);
        TwistElement { host, element: one.clone(), inverse: one, pair: None }
    }

    pub fn check(&self) -> Result<(), Error> {
        let h = &*self.host;
        let n = h.dim();
        let one2 = h.one_power(2);
        if h.mul_power(2, &self.element, &self.inverse) != one2 || h.mul_power(2, &self.inverse, &self.element) != one2 {
            return Err(Error::IdentityFails(String::from("J·J⁻¹ = 1⊗1 = J⁻¹·J")));
        }
        let mut left = Accum::new();
        let mut right = Accum::new();
        for (ij, c) in self.element.iter() {
            let (i, j) = (ij / n, ij % n);
            left.push(j, c * &h.counit[i]);
            right.push(i, c * &h.counit[j]);
        }
        if left.finish() != h.unit || right.finish() != h.unit {
            return Err(Error::IdentityFails(String::from("(ε⊗id)(J) = 1 = (id⊗ε)(J)")));
        }
        let j1 = tensor_vecs(&self.element, &h.unit, n);
        let one_j = tensor_vecs(&h.unit, &self.element, n * n);
        let lhs = h.mul_power(3, &h.comult_left(&self.element), &j1);
        let rhs = h.mul_power(3, &h.comult_right(&self.element), &one_j);
        if lhs != rhs {
            return Err(Error::IdentityFails(String::from("twist equation (Δ⊗id)(J)(J⊗1) = (id⊗Δ)(J)(1⊗J)")));
        }
        Ok(())
    }

    pub fn is_trivial(&self) -> bool {
        self.element == self.host.one_power(2)
    }

    /// J⁻¹ viewed as a twist of H^J.
    pub fn inverse_twist(&self, twisted: Arc<FinHopf>) -> Result<TwistElement, Error> {
        TwistElement::new(twisted, self.inverse.clone(), Some(self.element.clone()))
    }

    /// u = m(S⊗id)(J)
    pub fn u(&self) -> SparseVec {
        let h = &*self.host;
        h.contract(&self.element, |a| h.antipode_tensor()[a].clone(), |b| h.basis(b))
    }

    /// J⁻¹₂₁ J
    pub fn braiding_element(&self) -> SparseVec {
        let h = &*self.host;
        h.mul_power(2, &h.flip(&self.inverse), &self.element)
    }

    /// Span of the left and right tensor components of J⁻¹₂₁J.
    pub fn component_span(&self) -> Subspace {
        let h = &*self.host;
        let n = h.dim();
        let x = self.braiding_element();
        let mut left_funcs: Vec<Vec<(usize, CycNumber)>> = vec![Vec::new(); n];
        let mut right_funcs: Vec<Vec<(usize, CycNumber)>> = vec![Vec::new(); n];
        for (ij, c) in x.iter() {
            left_funcs[ij % n].push((ij / n, c.clone()));
            right_funcs[ij / n].push((ij % n, c.clone()));
        }
        let mut span = Subspace::zero(n);
        for terms in left_funcs.into_iter().chain(right_funcs) {
            if !terms.is_empty() {
                span.insert(&SparseVec::from_terms(terms));
            }
        }
        span
    }
}

/// J = Σ ω(χ,η) e_χ ⊗ e_η in kN ⊗ kN, e_χ = (1/|S|) Σ_{h∈S} χ(h⁻¹) h.
pub fn twist_from_pair(kn: Arc<FinHopf>, n: &PermGroup, s: &PermGroup, omega: &DualCocycle) -> Result<TwistElement, Error> {
    if kn.dim() != n.order() {
        return Err(Error::DimensionMismatch { expected: n.order(), found: kn.dim() });
    }
    let field = kn.field().clone();
    let emb = n.embed(s)?;
    if omega.dual.group != *s {
        return Err(Error::InvalidData(String::from("ω is defined on the characters of a different group")));
    }
    omega.check()?;
    let dual = abelian_characters(s, &field)?;
    let m = dual.order();
    let inv_order = field.frac(1, s.order() as i64);
    let idempotents: Vec<SparseVec> = dual
        .chars
        .iter()
        .map(|chi| SparseVec::from_terms((0..s.order()).map(|h| (emb[h], &chi.value(s.inv(h), &field) * &inv_order))))
        .collect();
    let nn = n.order();
    let build = |vals: &dyn Fn(usize, usize) -> CycNumber| {
        let mut acc = Accum::new();
        for a in 0..m {
            for b in 0..m {
                let w = vals(a, b);
                for (i, x) in idempotents[a].iter() {
                    for (j, y) in idempotents[b].iter() {
                        acc.push(i * nn + j, &(&w * x) * y);
                    }
                }
            }
        }
        acc.finish()
    };
    let element = build(&|a, b| omega.value(a, b).clone());
    let inverse = build(&|a, b| omega.value(a, b).inv().expect("invertible"));
    let mut t = TwistElement::new(kn, element, Some(inverse))?;
    t.pair = Some(TwistPair { n: n.clone(), s: s.clone(), omega: omega.clone() });
    Ok(t)
}

/// H^J: same algebra, Δ^J(h) = J⁻¹Δ(h)J, S^J(h) = u⁻¹S(h)u.
pub fn apply_twist(j: &TwistElement) -> Result<FinHopf, Error> {
    let h = &*j.host;
    let u = j.u();
    let u_inv = h.inverse(&u)?;
    let comult = h.comult.iter().map(|d| h.mul_power(2, &h.mul_power(2, &j.inverse, d), &j.element)).collect();
    let antipode = h.antipode.iter().map(|s| h.mul(&h.mul(&u_inv, s), &u)).collect();
    let mut prov = Provenance::new("twist").param("of", &h.provenance.construction);
    if let Some(p) = &j.pair {
        prov = prov
            .param("N", GroupSpecDisplay(&GroupSpec::of(&p.n)))
            .param("S", GroupSpecDisplay(&GroupSpec::of(&p.s)))
            .param("omega_nondegenerate", p.omega.is_nondegenerate());
    }
    let out = FinHopf { comult, antipode, provenance: prov, ..h.clone() };
    verified(out)
}

/// H_σ through the dual route: ((H*)^{σ})*.
pub fn cocycle_twist(h: &FinHopf, sigma: &SparseVec, sigma_inverse: Option<&SparseVec>) -> Result<FinHopf, Error> {
    let d = Arc::new(dual(h));
    let j = TwistElement::new(d, sigma.clone(), sigma_inverse.cloned())?;
    let dj = apply_twist(&j)?;
    let mut out = dual(&dj);
    out.labels = h.labels.clone();
    out.provenance = Provenance::new("cocycle_twist").param("of", &h.provenance.construction);
    verified(out)
}

/// Image (f⊗f)(J) of a twist under a certified injective Hopf map.
pub fn inflate_twist(j: &TwistElement, embed: &LinMap) -> Result<TwistElement, Error> {
    if !embed.certified.hopf_map {
        return Err(Error::NotCertified(String::from("embedding is not a certified Hopf map")));
    }
    if !Arc::ptr_eq(&embed.source, &j.host) && !embed.source.structure_eq(&j.host) {
        return Err(Error::InvalidData(String::from("embedding source does not host the twist")));
    }
    if !embed.is_injective() {
        return Err(Error::NotCertified(String::from("embedding is not injective")));
    }
    let element = embed.apply2(&j.element);
    let inverse = embed.apply2(&j.inverse);
    TwistElement::new(embed.target.clone(), element, Some(inverse))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{nondegenerate_two_cocycle, Decomposition, Perm};

    fn k4() -> Conductor {
        Conductor::new(4).unwrap()
    }

    #[test]
    fn group_algebras_verify() {
        let k = k4();
        for g in [PermGroup::cyclic(2), PermGroup::symmetric(3).unwrap()] {
            assert!(verify_hopf(&group_algebra(&g, &k)).passed());
            assert!(verify_hopf(&dual_group_algebra(&g, &k)).passed());
        }
        let s3 = PermGroup::symmetric(3).unwrap();
        let h = group_algebra(&s3, &k);
        assert!(!h.is_commutative() && h.is_cocommutative());
        let d = dual_group_algebra(&s3, &k);
        assert!(d.is_commutative() && !d.is_cocommutative());
    }

    #[test]
    fn broken_antipode_is_reported() {
        let k = k4();
        let s3 = PermGroup::symmetric(3).unwrap();
        let mut p = group_algebra(&s3, &k).into_parts();
        p.antipode = (0..6).map(|i| SparseVec::unit(i, &k)).collect();
        let h = FinHopf::from_parts(p).unwrap();
        let r = verify_hopf(&h);
        let bad: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(bad, alloc::vec!["antipode"]);
        assert!(r.checks.iter().find(|c| c.name == "antipode").unwrap().witness.is_some());
    }

    #[test]
    fn dual_laws() {
        let k = k4();
        let g = PermGroup::symmetric(3).unwrap();
        let kg = group_algebra(&g, &k);
        assert!(dual(&kg).structure_eq(&dual_group_algebra(&g, &k)));
        assert!(dual(&dual(&kg)).structure_eq(&kg));
        assert_eq!(dual(&dual(&kg)).labels(), kg.labels());
    }

    #[test]
    fn tensor_products() {
        let k = Conductor::new(12).unwrap();
        let a = group_algebra(&PermGroup::cyclic(2), &k);
        let b = group_algebra(&PermGroup::cyclic(3), &k);
        let t = tensor_hopf(&a, &b).unwrap();
        assert_eq!(t.dim(), 6);
        assert!(verify_hopf(&t).passed());
        let kk = trivial_hopf(&k);
        let t1 = tensor_hopf(&a, &kk).unwrap();
        assert!(t1.structure_eq(&a));
    }

    #[test]
    fn inverse_via_minimal_polynomial() {
        let k = k4();
        let g = PermGroup::symmetric(3).unwrap();
        let h = group_algebra(&g, &k);
        // 2 + g for g of order 3
        let x = h.basis(0).scale(&k.int(2)).add(&h.basis(3));
        let y = h.inverse(&x).unwrap();
        assert_eq!(h.mul(&x, &y), *h.unit());
        // 1 + (12) is a zero divisor
        let z = h.basis(0).add(&h.basis(1));
        assert!(h.inverse(&z).is_err());
    }

    fn s4_twist(k: &Conductor) -> (Arc<FinHopf>, TwistElement) {
        let n = PermGroup::symmetric(4).unwrap();
        let a = Perm::parse("(12)", 4).unwrap();
        let b = Perm::parse("(34)", 4).unwrap();
        let s = n.subgroup(&[a.clone(), b.clone()]).unwrap();
        let w = nondegenerate_two_cocycle(&s, &Decomposition { first: alloc::vec![a], second: alloc::vec![b] }, k).unwrap();
        let kn = Arc::new(group_algebra(&n, k));
        let j = twist_from_pair(kn.clone(), &n, &s, &w).unwrap();
        (kn, j)
    }

    #[test]
    fn twist_of_s4() {
        let k = k4();
        let (kn, j) = s4_twist(&k);
        assert!(!j.is_trivial());
        let hj = Arc::new(apply_twist(&j).unwrap());
        assert_eq!(hj.mult_tensor(), kn.mult_tensor());
        assert!(!hj.is_cocommutative());
        let back = apply_twist(&j.inverse_twist(hj).unwrap()).unwrap();
        assert!(back.structure_eq(&kn));
        assert_eq!(j.component_span().dim(), 4);
    }

    #[test]
    fn trivial_cocycle_gives_trivial_twist() {
        let k = k4();
        let n = PermGroup::symmetric(4).unwrap();
        let s = n.subgroup(&[Perm::parse("(12)", 4).unwrap(), Perm::parse("(34)", 4).unwrap()]).unwrap();
        let dual_s = abelian_characters(&s, &k).unwrap();
        let w = DualCocycle::trivial(&dual_s, &k);
        let kn = Arc::new(group_algebra(&n, &k));
        let j = twist_from_pair(kn.clone(), &n, &s, &w).unwrap();
        assert!(j.is_trivial());
        assert!(apply_twist(&j).unwrap().structure_eq(&kn));
    }

    #[test]
    fn cocycle_twist_via_dual() {
        let k = k4();
        let (_, j) = s4_twist(&k);
        let n = PermGroup::symmetric(4).unwrap();
        let kd = dual_group_algebra(&n, &k);
        let hs = cocycle_twist(&kd, &j.element, Some(&j.inverse)).unwrap();
        assert_eq!(hs.comult_tensor(), kd.comult_tensor());
        assert!(!hs.is_commutative());
        let twisted = apply_twist(&j).unwrap();
        assert!(dual(&hs).structure_eq(&twisted));
        let trivial = SparseVec::from_terms([(0usize, k.one())]);
        assert!(cocycle_twist(&kd, &trivial, None).unwrap().structure_eq(&kd));
    }

    #[test]
    fn linear_map_certification() {
        let k = Conductor::new(12).unwrap();
        let g = PermGroup::cyclic(6);
        let sub = g.subgroup_from_indices(&[g.pow(1, 2)]);
        let ks = Arc::new(group_algebra(&sub, &k));
        let kg = Arc::new(group_algebra(&g, &k));
        let cols = sub.elements().iter().map(|p| kg.basis(g.index_of(p).unwrap())).collect();
        let f = LinMap::new(ks.clone(), kg.clone(), cols).unwrap().certify_hopf().unwrap();
        assert!(f.is_injective() && !f.is_surjective());
        let (kn, j) = s4_twist(&Conductor::new(4).unwrap());
        let id = LinMap::identity(kn);
        let jj = inflate_twist(&j, &id).unwrap();
        assert_eq!(jj.element, j.element);
    }
}
