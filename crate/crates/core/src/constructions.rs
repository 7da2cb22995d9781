//! Extension-building machines: abelian extensions, smash coproducts and
//! products, sections, the basic construction and the twisted-group
//! comparisons.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::groups::{abelian_characters, DualCocycle, GroupAutomorphism, MatchedPair, CocyclePair, Perm, PermGroup};
use crate::hopf::{
    apply_twist, dual, dual_group_algebra, group_algebra, inflate_twist, tensor_hopf, twist_from_pair, verified,
    FinHopf, GroupSpec, GroupSpecDisplay, HopfParts, LinMap, Provenance, Structure, TwistElement, KIND_SECTION_IMAGE,
    KIND_SEQUENCE_KERNEL, KIND_SUGGESTED_ISO,
};
use crate::linalg::{invert_columns, krylov_min_poly, Accum, SparseVec, Subspace};
use crate::scalars::{Conductor, CycNumber};

/// A Hopf algebra together with the certified maps of its canonical exact
/// sequence ι: K ↪ H and π: H ↠ T.
#[derive(Clone, Debug)]
pub struct Extension {
    pub hopf: Arc<FinHopf>,
    pub iota: LinMap,
    pub pi: LinMap,
}

fn columns_compose(a: &[SparseVec], b: &[SparseVec]) -> Vec<SparseVec> {
    b.iter()
        .map(|col| {
            let mut acc = Accum::new();
            for (i, c) in col.iter() {
                acc.add_scaled(&a[*i], c);
            }
            acc.finish()
        })
        .collect()
}

fn apply_columns(m: &[SparseVec], v: &SparseVec) -> SparseVec {
    let mut acc = Accum::new();
    for (i, c) in v.iter() {
        acc.add_scaled(&m[*i], c);
    }
    acc.finish()
}

fn identity_columns(n: usize, field: &Conductor) -> Vec<SparseVec> {
    (0..n).map(|i| SparseVec::unit(i, field)).collect()
}

/// Matrix sending e_i to e_{images[i]}.
pub fn permutation_columns(images: &[usize], field: &Conductor) -> Vec<SparseVec> {
    images.iter().map(|&j| SparseVec::unit(j, field)).collect()
}

// ---------------------------------------------------------------------------
// Group actions by Hopf automorphisms

/// A homomorphism from a permutation group into Aut_Hopf of a fixed Hopf
/// algebra, stored element by element.
#[derive(Clone, Debug)]
pub struct AutAction {
    pub group: PermGroup,
    pub target: Arc<FinHopf>,
    pub maps: Vec<Vec<SparseVec>>,
}

impl AutAction {
    pub fn trivial(target: Arc<FinHopf>, group: &PermGroup) -> Self {
        let id = identity_columns(target.dim(), target.field());
        AutAction { group: group.clone(), maps: vec![id; group.order()], target }
    }

    /// Extends generator images, checking that each is a Hopf automorphism
    /// and that the assignment defines a homomorphism.
    pub fn from_generators(target: Arc<FinHopf>, group: &PermGroup, gen_maps: Vec<Vec<SparseVec>>) -> Result<Self, Error> {
        let gens = group.generator_indices();
        if gens.len() != gen_maps.len() {
            return Err(Error::DimensionMismatch { expected: gens.len(), found: gen_maps.len() });
        }
        for m in &gen_maps {
            let map = LinMap::new(target.clone(), target.clone(), m.clone())?;
            if !map.is_injective() {
                return Err(Error::NotCertified(String::from("action map is not bijective")));
            }
            map.certify_hopf()?;
        }
        let mut maps: Vec<Option<Vec<SparseVec>>> = vec![None; group.order()];
        maps[0] = Some(identity_columns(target.dim(), target.field()));
        let mut queue = alloc::collections::VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let mx = maps[x].clone().expect("visited");
            for (k, &g) in gens.iter().enumerate() {
                let y = group.mul(g, x);
                let my = columns_compose(&gen_maps[k], &mx);
                match &maps[y] {
                    None => {
                        maps[y] = Some(my);
                        queue.push_back(y);
                    }
                    Some(existing) => {
                        if *existing != my {
                            return Err(Error::InvalidData(String::from(
                                "automorphism assignment is not a group homomorphism",
                            )));
                        }
                    }
                }
            }
        }
        Ok(AutAction { group: group.clone(), target, maps: maps.into_iter().map(|m| m.expect("generated")).collect() })
    }

    /// θ(γ) = Ad(γ) on a Hopf algebra whose basis is the sorted elements of
    /// N (kN or a twist of it); `group` must lie in N.
    pub fn inner(target: Arc<FinHopf>, n: &PermGroup, group: &PermGroup) -> Result<Self, Error> {
        if target.dim() != n.order() {
            return Err(Error::DimensionMismatch { expected: n.order(), found: target.dim() });
        }
        let field = target.field().clone();
        let gen_maps = group
            .generators()
            .iter()
            .map(|g| {
                let c = n.index_of(g).ok_or_else(|| Error::NotSubgroup(format!("{g} is not in N")))?;
                let images: Vec<usize> = (0..n.order()).map(|x| n.conj(x, c)).collect();
                Ok(permutation_columns(&images, &field))
            })
            .collect::<Result<Vec<_>, Error>>()?;
        AutAction::from_generators(target, group, gen_maps)
    }

    /// Action through group automorphisms of N given per generator.
    pub fn from_group_automorphisms(target: Arc<FinHopf>, group: &PermGroup, auts: &[GroupAutomorphism]) -> Result<Self, Error> {
        let field = target.field().clone();
        let gen_maps = auts.iter().map(|a| permutation_columns(&a.images, &field)).collect();
        AutAction::from_generators(target, group, gen_maps)
    }

    pub fn map(&self, g: usize) -> &[SparseVec] {
        &self.maps[g]
    }

    pub fn apply(&self, g: usize, v: &SparseVec) -> SparseVec {
        apply_columns(&self.maps[g], v)
    }

    pub fn is_trivial(&self) -> bool {
        let id = identity_columns(self.target.dim(), self.target.field());
        self.maps.iter().all(|m| *m == id)
    }

    /// [θ(Γ), μ(G)] = 1 on generators.
    pub fn commutes_with(&self, other: &AutAction) -> bool {
        self.group.generator_indices().iter().all(|&a| {
            other.group.generator_indices().iter().all(|&b| {
                columns_compose(&self.maps[a], &other.maps[b]) == columns_compose(&other.maps[b], &self.maps[a])
            })
        })
    }
}

// ---------------------------------------------------------------------------
// Convolution

/// Convolution product f * g = m(f⊗g)Δ of endomorphisms given as columns.
pub fn convolution(h: &FinHopf, f: &[SparseVec], g: &[SparseVec]) -> Vec<SparseVec> {
    (0..h.dim()).map(|i| h.contract(&h.comult_tensor()[i], |a| f[a].clone(), |b| g[b].clone())).collect()
}

/// The convolution inverse of the identity, solved through its minimal
/// polynomial in End(H); the antipode axioms only need mult, unit, comult
/// and counit.
pub fn convolution_inverse_of_identity(h: &FinHopf) -> Result<Vec<SparseVec>, Error> {
    let n = h.dim();
    let field = h.field().clone();
    let flatten = |cols: &[SparseVec]| {
        let mut acc = Accum::new();
        for (i, c) in cols.iter().enumerate() {
            for (j, x) in c.iter() {
                acc.push(i * n + j, x.clone());
            }
        }
        acc.finish()
    };
    let unflatten = |v: &SparseVec| {
        let mut cols: Vec<Vec<(usize, CycNumber)>> = vec![Vec::new(); n];
        for (ij, c) in v.iter() {
            cols[ij / n].push((ij % n, c.clone()));
        }
        cols.into_iter().map(SparseVec::from_terms).collect::<Vec<_>>()
    };
    let id = identity_columns(n, &field);
    let unit_conv: Vec<SparseVec> = (0..n).map(|i| h.unit().scale(&h.counit_tensor()[i])).collect();
    let start = flatten(&unit_conv);
    let p = krylov_min_poly(&start, |v| flatten(&convolution(h, &id, &unflatten(v))), n * n, &field)
        .ok_or_else(|| Error::NotInvertible(String::from("identity has no minimal polynomial under convolution")))?;
    if p[0].is_zero() {
        return Err(Error::NotInvertible(String::from("identity is not convolution invertible")));
    }
    let mut acc = SparseVec::new();
    for a in p[1..].iter().rev() {
        acc = flatten(&convolution(h, &id, &unflatten(&acc))).axpy(a, &start);
    }
    Ok(unflatten(&acc.scale(&-&p[0].inv()?)))
}

// ---------------------------------------------------------------------------
// Abelian extensions

/// k^G ⋈ kF on the basis δ_s#x (index s·|F| + x).
pub fn abelian_extension(mp: &MatchedPair, cp: &CocyclePair, field: &Conductor) -> Result<Extension, Error> {
    mp.check()?;
    cp.check(mp)?;
    let (f, g) = (&mp.f, &mp.g);
    let (nf, ng) = (f.order(), g.order());
    let n = nf * ng;
    let idx = |s: usize, x: usize| s * nf + x;
    let mut mult = Vec::with_capacity(n * n);
    for s in 0..ng {
        for x in 0..nf {
            for t in 0..ng {
                for y in 0..nf {
                    if mp.act_right(s, x) == t {
                        mult.push(SparseVec::single(idx(s, f.mul(x, y)), cp.sigma(mp, s, x, y).clone()));
                    } else {
                        mult.push(SparseVec::new());
                    }
                }
            }
        }
    }
    let mut comult = Vec::with_capacity(n);
    for s in 0..ng {
        for x in 0..nf {
            let mut acc = Accum::new();
            for a in 0..ng {
                let b = g.mul(g.inv(a), s);
                acc.push(idx(a, mp.act_left(b, x)) * n + idx(b, x), cp.tau(mp, x, a, b).clone());
            }
            comult.push(acc.finish());
        }
    }
    let mut labels = Vec::with_capacity(n);
    let mut counit = Vec::with_capacity(n);
    for s in 0..ng {
        for x in 0..nf {
            labels.push(format!("δ{}#{}", g.elem(s), f.elem(x)));
            counit.push(if s == 0 { field.one() } else { field.zero() });
        }
    }
    let unit = SparseVec::from_terms((0..ng).map(|s| (idx(s, 0), field.one())));
    let kernel_basis: Vec<SparseVec> = (0..ng).map(|s| SparseVec::unit(idx(s, 0), field)).collect();
    let provenance = Provenance::new("abelian_extension")
        .param("F", GroupSpecDisplay(&GroupSpec::of(f)))
        .param("G", GroupSpecDisplay(&GroupSpec::of(g)))
        .subobject("k^G", KIND_SEQUENCE_KERNEL, kernel_basis.clone());
    let draft = FinHopf::from_parts(HopfParts {
        field: field.clone(),
        labels,
        mult,
        unit,
        comult,
        counit,
        antipode: identity_columns(n, field),
        provenance,
    })?;
    let antipode = convolution_inverse_of_identity(&draft)
        .map_err(|e| Error::IncompatibleCocyclePair(format!("no antipode: {e}")))?;
    let mut parts = draft.into_parts();
    parts.antipode = antipode;
    let h = verified(FinHopf::from_parts(parts)?).map_err(|e| Error::IncompatibleCocyclePair(format!("{e}")))?;
    let h = Arc::new(h);
    let kg = Arc::new(dual_group_algebra(g, field));
    let kf = Arc::new(group_algebra(f, field));
    let iota = LinMap::new(kg, h.clone(), kernel_basis)?.certify_hopf()?;
    let pi_cols = (0..ng)
        .flat_map(|s| (0..nf).map(move |x| (s, x)))
        .map(|(s, x)| if s == 0 { SparseVec::unit(x, field) } else { SparseVec::new() })
        .collect();
    let pi = LinMap::new(h.clone(), kf, pi_cols)?.certify_hopf()?;
    Ok(Extension { hopf: h, iota, pi })
}

// ---------------------------------------------------------------------------
// Coactions and smash coproducts

/// A left coaction ρ: R → K⊗R, `rho[i]` over indices b·dim R + j.
#[derive(Clone, Debug)]
pub struct CoactionData {
    pub r: Arc<FinHopf>,
    pub k: Arc<FinHopf>,
    pub rho: Vec<SparseVec>,
    /// θ when K = k^G and ρ(r) = Σ δ_γ ⊗ θ(γ⁻¹)(r).
    pub theta: Option<AutAction>,
}

/// Product in A⊗B of two elements over indices a·dim B + b.
fn mul_in_tensor(a: &FinHopf, b: &FinHopf, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let nb = b.dim();
    let mut acc = Accum::new();
    for (i, c) in x.iter() {
        for (j, d) in y.iter() {
            let (ia, ib, ja, jb) = (i / nb, i % nb, j / nb, j % nb);
            let pa = a.mul_basis(ia, ja);
            let pb = b.mul_basis(ib, jb);
            if pa.is_empty() || pb.is_empty() {
                continue;
            }
            let cd = c * d;
            for (p, u) in pa.iter() {
                let cu = &cd * u;
                for (q, v) in pb.iter() {
                    acc.push(p * nb + q, &cu * v);
                }
            }
        }
    }
    acc.finish()
}

impl CoactionData {
    pub fn new(r: Arc<FinHopf>, k: Arc<FinHopf>, rho: Vec<SparseVec>) -> Result<Self, Error> {
        let cd = CoactionData { r, k, rho, theta: None };
        cd.check()?;
        Ok(cd)
    }

    pub fn trivial(r: Arc<FinHopf>, k: Arc<FinHopf>) -> Self {
        let nr = r.dim();
        let rho = (0..nr).map(|i| crate::hopf::tensor_vecs(k.unit(), &r.basis(i), nr)).collect();
        CoactionData { r, k, rho, theta: None }
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        apply_columns(&self.rho, v)
    }

    pub fn is_trivial(&self) -> bool {
        let nr = self.r.dim();
        (0..nr).all(|i| self.rho[i] == crate::hopf::tensor_vecs(self.k.unit(), &self.r.basis(i), nr))
    }

    /// Coaction axioms and conditions (1), (2), (3).
    pub fn check(&self) -> Result<(), Error> {
        let (r, k) = (&*self.r, &*self.k);
        let (nr, nk) = (r.dim(), k.dim());
        let fail = |m: String| Err(Error::IdentityFails(m));
        if self.rho.len() != nr {
            return Err(Error::DimensionMismatch { expected: nr, found: self.rho.len() });
        }
        for i in 0..nr {
            let x = &self.rho[i];
            // (Δ_K ⊗ id)ρ = (id ⊗ ρ)ρ
            let mut lhs = Accum::new();
            let mut rhs = Accum::new();
            let mut counit_side = Accum::new();
            let mut eps_r = Accum::new();
            for (bl, c) in x.iter() {
                let (b, l) = (bl / nr, bl % nr);
                for (pq, d) in k.comult_tensor()[b].iter() {
                    lhs.push(pq * nr + l, c * d);
                }
                for (cm, d) in self.rho[l].iter() {
                    rhs.push((b * nk + cm / nr) * nr + cm % nr, c * d);
                }
                counit_side.push(l, c * &k.counit_tensor()[b]);
                eps_r.push(b, c * &r.counit_tensor()[l]);
            }
            if lhs.finish() != rhs.finish() {
                return fail(format!("coassociativity of ρ at {}", r.labels()[i]));
            }
            if counit_side.finish() != r.basis(i) {
                return fail(format!("(ε⊗id)ρ = id at {}", r.labels()[i]));
            }
            if eps_r.finish() != k.unit().scale(&r.counit_tensor()[i]) {
                return fail(format!("(1) ε is a comodule map at {}", r.labels()[i]));
            }
            // (1) Δ_R is a comodule map
            let mut lhs = Accum::new();
            for (pq, c) in r.comult_tensor()[i].iter() {
                let (p, q) = (pq / nr, pq % nr);
                for (bx, d) in self.rho[p].iter() {
                    for (cy, e) in self.rho[q].iter() {
                        let kk = k.mul_basis(bx / nr, cy / nr);
                        let cde = &(c * d) * e;
                        for (w, m) in kk.iter() {
                            lhs.push((w * nr + bx % nr) * nr + cy % nr, &cde * m);
                        }
                    }
                }
            }
            let mut rhs = Accum::new();
            for (bl, c) in x.iter() {
                let (b, l) = (bl / nr, bl % nr);
                for (xy, d) in r.comult_tensor()[l].iter() {
                    rhs.push(b * nr * nr + xy, c * d);
                }
            }
            if lhs.finish() != rhs.finish() {
                return fail(format!("(1) Δ is a comodule map at {}", r.labels()[i]));
            }
            // (3) r_{(-1)}k ⊗ r_0 = k r_{(-1)} ⊗ r_0
            for a in 0..nk {
                let ka = crate::hopf::tensor_vecs(&k.basis(a), r.unit(), nr);
                if mul_in_tensor(k, r, x, &ka) != mul_in_tensor(k, r, &ka, x) {
                    return fail(format!("(3) at {} and {}", r.labels()[i], k.labels()[a]));
                }
            }
        }
        // (2) m and u are comodule maps
        if self.apply(r.unit()) != crate::hopf::tensor_vecs(k.unit(), r.unit(), nr) {
            return fail(String::from("(2) ρ(1) = 1⊗1"));
        }
        for i in 0..nr {
            for j in 0..nr {
                let lhs = self.apply(r.mul_basis(i, j));
                let rhs = mul_in_tensor(k, r, &self.rho[i], &self.rho[j]);
                if lhs != rhs {
                    return fail(format!("(2) ρ(rs) = ρ(r)ρ(s) at ({}, {})", r.labels()[i], r.labels()[j]));
                }
            }
        }
        Ok(())
    }
}

/// ρ(r) = Σ_γ δ_γ ⊗ θ(γ⁻¹)(r) with K = k^G.
pub fn coaction_from_theta(theta: &AutAction) -> Result<CoactionData, Error> {
    let r = theta.target.clone();
    let g = &theta.group;
    let k = Arc::new(dual_group_algebra(g, r.field()));
    let nr = r.dim();
    let rho = (0..nr)
        .map(|i| {
            let mut acc = Accum::new();
            for gamma in 0..g.order() {
                for (j, c) in theta.maps[g.inv(gamma)][i].iter() {
                    acc.push(gamma * nr + j, c.clone());
                }
            }
            acc.finish()
        })
        .collect();
    let mut cd = CoactionData::new(r, k, rho)?;
    cd.theta = Some(theta.clone());
    Ok(cd)
}

/// R ⋊ K on the basis r#k (index i·dim K + a), with ι(k) = 1#k and
/// π(r#k) = ε(k)r.
pub fn smash_coproduct(cd: &CoactionData) -> Result<Extension, Error> {
    let (r, k) = (&*cd.r, &*cd.k);
    if r.field() != k.field() {
        return Err(Error::ConductorMismatch(r.field().n(), k.field().n()));
    }
    let field = r.field().clone();
    let (nr, nk) = (r.dim(), k.dim());
    let d = nr * nk;
    let pair = |x: &SparseVec, y: &SparseVec| crate::hopf::tensor_vecs(x, y, nk);
    let mut mult = Vec::with_capacity(d * d);
    for i in 0..nr {
        for a in 0..nk {
            for j in 0..nr {
                for b in 0..nk {
                    mult.push(pair(r.mul_basis(i, j), k.mul_basis(a, b)));
                }
            }
        }
    }
    let mut comult = Vec::with_capacity(d);
    let mut antipode = Vec::with_capacity(d);
    for i in 0..nr {
        for a in 0..nk {
            let mut acc = Accum::new();
            for (pq, c) in r.comult_tensor()[i].iter() {
                let (p, q) = (pq / nr, pq % nr);
                for (bj, e) in cd.rho[q].iter() {
                    let (b, j) = (bj / nr, bj % nr);
                    for (uv, f) in k.comult_tensor()[a].iter() {
                        let (u, v) = (uv / nk, uv % nk);
                        let coeff = &(c * e) * f;
                        for (w, m) in k.mul_basis(b, u).iter() {
                            acc.push((p * nk + w) * d + (j * nk + v), &coeff * m);
                        }
                    }
                }
            }
            comult.push(acc.finish());
            let mut acc = Accum::new();
            for (bj, c) in cd.rho[i].iter() {
                let (b, j) = (bj / nr, bj % nr);
                let kpart = k.antipode(k.mul_basis(b, a));
                for (x, s) in r.antipode_tensor()[j].iter() {
                    for (y, t) in kpart.iter() {
                        acc.push(x * nk + y, &(c * s) * t);
                    }
                }
            }
            antipode.push(acc.finish());
        }
    }
    let mut labels = Vec::with_capacity(d);
    let mut counit = Vec::with_capacity(d);
    for i in 0..nr {
        for a in 0..nk {
            labels.push(format!("{}#{}", r.labels()[i], k.labels()[a]));
            counit.push(&r.counit_tensor()[i] * &k.counit_tensor()[a]);
        }
    }
    let iota_cols: Vec<SparseVec> = (0..nk).map(|a| pair(r.unit(), &k.basis(a))).collect();
    let mut provenance = Provenance::new("smash_coproduct")
        .param("R", &r.provenance().construction)
        .param("K", &k.provenance().construction)
        .param("dim_R", nr)
        .param("dim_K", nk)
        .subobject("K", KIND_SEQUENCE_KERNEL, iota_cols.clone());
    if let Some(theta) = &cd.theta {
        provenance = provenance.param("Gamma", GroupSpecDisplay(&GroupSpec::of(&theta.group)));
    }
    let h = FinHopf::from_parts(HopfParts {
        field: field.clone(),
        labels,
        mult,
        unit: pair(r.unit(), k.unit()),
        comult,
        counit,
        antipode,
        provenance,
    })?;
    let mut h = verified(h)?;
    if let (Some(theta), Structure::DualGroupAlgebra(_)) = (&cd.theta, &k.provenance().structure) {
        let sections = crate::analysis::r_section_candidates(&h, cd, theta)?;
        let mut prov = h.provenance().clone();
        for (name, basis) in sections {
            prov = prov.subobject(&name, KIND_SECTION_IMAGE, basis);
        }
        h = h.with_provenance(prov);
    }
    let h = Arc::new(h);
    let iota = LinMap::new(cd.k.clone(), h.clone(), iota_cols)?.certify_hopf()?;
    let pi_cols = (0..nr)
        .flat_map(|i| (0..nk).map(move |a| (i, a)))
        .map(|(i, a)| r.basis(i).scale(&k.counit_tensor()[a]))
        .collect();
    let pi = LinMap::new(h.clone(), cd.r.clone(), pi_cols)?.certify_hopf()?;
    Ok(Extension { hopf: h, iota, pi })
}

/// Homogeneous components of a coaction by a group algebra kG.
#[derive(Clone, Debug)]
pub struct Grading {
    pub group: PermGroup,
    pub components: Vec<Subspace>,
    pub support: Vec<usize>,
}

/// The G-grading R = ⊕ R_g of a coaction ρ(r) = Σ g ⊗ r_g by K = kG.
pub fn grading_from_coaction(cd: &CoactionData, g: &PermGroup) -> Result<Grading, Error> {
    let (r, k) = (&*cd.r, &*cd.k);
    if k.dim() != g.order() {
        return Err(Error::DimensionMismatch { expected: g.order(), found: k.dim() });
    }
    let nr = r.dim();
    let mut pieces: Vec<Vec<SparseVec>> = vec![Vec::new(); g.order()];
    for i in 0..nr {
        let mut per: Vec<Vec<(usize, CycNumber)>> = vec![Vec::new(); g.order()];
        for (bj, c) in cd.rho[i].iter() {
            per[bj / nr].push((bj % nr, c.clone()));
        }
        for (b, terms) in per.into_iter().enumerate() {
            if !terms.is_empty() {
                pieces[b].push(SparseVec::from_terms(terms));
            }
        }
    }
    let components: Vec<Subspace> = pieces.iter().map(|p| Subspace::spanned_by(nr, p)).collect();
    let total: usize = components.iter().map(Subspace::dim).sum();
    if total != nr {
        return Err(Error::InvalidData(format!("components have total dimension {total}, not {nr}")));
    }
    let support: Vec<usize> = (0..g.order()).filter(|&b| components[b].dim() > 0).collect();
    let center = g.center();
    for &b in &support {
        if !center.contains(g.elem(b)) {
            return Err(Error::IdentityFails(format!("support element {} is not central", g.elem(b))));
        }
        if b != 0 && components[b].rows().any(|v| !r.counit(v).is_zero()) {
            return Err(Error::IdentityFails(format!("ε does not vanish on the component of {}", g.elem(b))));
        }
    }
    Ok(Grading { group: g.clone(), components, support })
}

/// Coaction of kG from a decomposition R = ⊕ R_g given by bases; the
/// coaction conditions are checked.
pub fn coaction_from_grading(r: Arc<FinHopf>, g: &PermGroup, components: &[Vec<SparseVec>]) -> Result<CoactionData, Error> {
    let nr = r.dim();
    let field = r.field().clone();
    let mut basis = Vec::new();
    let mut degree = Vec::new();
    for (b, comp) in components.iter().enumerate() {
        for v in comp {
            basis.push(v.clone());
            degree.push(b);
        }
    }
    let inv = invert_columns(&basis, &field).ok_or_else(|| Error::InvalidData(String::from("components are not a direct decomposition")))?;
    // ρ(e_i) = Σ_k coeff_k(e_i) g_{deg k} ⊗ v_k
    let rho = (0..nr)
        .map(|i| {
            let mut acc = Accum::new();
            for (kk, c) in inv[i].iter() {
                for (j, x) in basis[*kk].iter() {
                    acc.push(degree[*kk] * nr + j, c * x);
                }
            }
            acc.finish()
        })
        .collect();
    let k = Arc::new(group_algebra(g, &field));
    CoactionData::new(r, k, rho)
}

/// The algebra isomorphism φ: kF → kG determined by a bijection π: Ĝ → F̂
/// through φ⁻¹(g) = (1/n) Σ_χ Σ_x χ(g) π(χ)(x⁻¹) x.
pub fn group_algebra_iso_from_char_bijection(
    f: &PermGroup,
    g: &PermGroup,
    pi: &[usize],
    field: &Conductor,
) -> Result<LinMap, Error> {
    let n = f.order();
    if g.order() != n || pi.len() != n {
        return Err(Error::InvalidData(String::from("groups of different orders or wrong bijection size")));
    }
    let mut seen = pi.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != n || seen.last().is_some_and(|&m| m >= n) {
        return Err(Error::InvalidData(String::from("π is not a bijection")));
    }
    let gd = abelian_characters(g, field)?;
    let fd = abelian_characters(f, field)?;
    let inv_n = field.frac(1, n as i64);
    let phi_inv: Vec<SparseVec> = (0..n)
        .map(|gi| {
            let mut acc = Accum::new();
            for (c, chi) in gd.chars.iter().enumerate() {
                let cg = chi.value(gi, field);
                let pc = &fd.chars[pi[c]];
                for x in 0..n {
                    acc.push(x, &(&cg * &pc.value(f.inv(x), field)) * &inv_n);
                }
            }
            acc.finish()
        })
        .collect();
    let phi = invert_columns(&phi_inv, field).ok_or_else(|| Error::NotInvertible(String::from("φ⁻¹ is singular")))?;
    let kf = Arc::new(group_algebra(f, field));
    let kg = Arc::new(group_algebra(g, field));
    Ok(LinMap::new(kf, kg, phi)?.certify())
}

// ---------------------------------------------------------------------------
// Actions and smash products

/// A left action of K on T, `act[a·dim T + i] = f_a · e_i`.
#[derive(Clone, Debug)]
pub struct ActionData {
    pub t: Arc<FinHopf>,
    pub k: Arc<FinHopf>,
    pub act: Vec<SparseVec>,
    /// F when K = kF with the group basis.
    pub group: Option<PermGroup>,
}

impl ActionData {
    pub fn new(t: Arc<FinHopf>, k: Arc<FinHopf>, act: Vec<SparseVec>) -> Result<Self, Error> {
        let ad = ActionData { t, k, act, group: None };
        ad.check()?;
        Ok(ad)
    }

    pub fn trivial(t: Arc<FinHopf>, k: Arc<FinHopf>) -> Self {
        let nt = t.dim();
        let act = (0..k.dim())
            .flat_map(|a| (0..nt).map(move |i| (a, i)))
            .map(|(a, i)| t.basis(i).scale(&k.counit_tensor()[a]))
            .collect();
        ActionData { t, k, act, group: None }
    }

    pub fn act_basis(&self, a: usize, i: usize) -> &SparseVec {
        &self.act[a * self.t.dim() + i]
    }

    pub fn act_on(&self, k: &SparseVec, t: &SparseVec) -> SparseVec {
        let mut acc = Accum::new();
        for (a, x) in k.iter() {
            for (i, y) in t.iter() {
                acc.add_scaled(self.act_basis(*a, *i), &(x * y));
            }
        }
        acc.finish()
    }

    /// Module axioms and conditions (4), (5), (6).
    pub fn check(&self) -> Result<(), Error> {
        let (t, k) = (&*self.t, &*self.k);
        let (nt, nk) = (t.dim(), k.dim());
        let fail = |m: String| Err(Error::IdentityFails(m));
        if self.act.len() != nt * nk {
            return Err(Error::DimensionMismatch { expected: nt * nk, found: self.act.len() });
        }
        for i in 0..nt {
            if self.act_on(k.unit(), &t.basis(i)) != t.basis(i) {
                return fail(format!("1·t = t at {}", t.labels()[i]));
            }
        }
        for a in 0..nk {
            for b in 0..nk {
                for i in 0..nt {
                    let lhs = self.act_on(k.mul_basis(a, b), &t.basis(i));
                    let rhs = self.act_on(&k.basis(a), self.act_basis(b, i));
                    if lhs != rhs {
                        return fail(format!("(kk')·t = k·(k'·t) at ({}, {}, {})", k.labels()[a], k.labels()[b], t.labels()[i]));
                    }
                }
            }
        }
        for a in 0..nk {
            let dk = &k.comult_tensor()[a];
            // k·1 = ε(k)1
            if self.act_on(&k.basis(a), t.unit()) != t.unit().scale(&k.counit_tensor()[a]) {
                return fail(format!("(5) k·1 = ε(k)1 at {}", k.labels()[a]));
            }
            for i in 0..nt {
                let ki = self.act_basis(a, i);
                // (4) ε(k·t) = ε(k)ε(t)
                if t.counit(ki) != &k.counit_tensor()[a] * &t.counit_tensor()[i] {
                    return fail(format!("(4) ε(k·t) at ({}, {})", k.labels()[a], t.labels()[i]));
                }
                // (4) Δ(k·t) = k_1·t_1 ⊗ k_2·t_2
                let mut rhs = Accum::new();
                for (pq, c) in dk.iter() {
                    let (p, q) = (pq / nk, pq % nk);
                    for (xy, d) in t.comult_tensor()[i].iter() {
                        let (x, y) = (xy / nt, xy % nt);
                        let l = self.act_basis(p, x);
                        let r = self.act_basis(q, y);
                        let cd = c * d;
                        for (u, e) in l.iter() {
                            for (v, f) in r.iter() {
                                rhs.push(u * nt + v, &(&cd * e) * f);
                            }
                        }
                    }
                }
                if t.comult(ki) != rhs.finish() {
                    return fail(format!("(4) Δ(k·t) at ({}, {})", k.labels()[a], t.labels()[i]));
                }
                // (6) k_1 ⊗ k_2·t = k_2 ⊗ k_1·t
                let mut lhs = Accum::new();
                let mut rhs = Accum::new();
                for (pq, c) in dk.iter() {
                    let (p, q) = (pq / nk, pq % nk);
                    for (u, e) in self.act_basis(q, i).iter() {
                        lhs.push(p * nt + u, c * e);
                    }
                    for (u, e) in self.act_basis(p, i).iter() {
                        rhs.push(q * nt + u, c * e);
                    }
                }
                if lhs.finish() != rhs.finish() {
                    return fail(format!("(6) at ({}, {})", k.labels()[a], t.labels()[i]));
                }
                // (5) k·(tt') = (k_1·t)(k_2·t')
                for j in 0..nt {
                    let lhs = self.act_on(&k.basis(a), t.mul_basis(i, j));
                    let mut rhs = Accum::new();
                    for (pq, c) in dk.iter() {
                        let prod = t.mul(self.act_basis(pq / nk, i), self.act_basis(pq % nk, j));
                        rhs.add_scaled(&prod, c);
                    }
                    if lhs != rhs.finish() {
                        return fail(format!("(5) k·(tt') at ({}, {}, {})", k.labels()[a], t.labels()[i], t.labels()[j]));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Action of kF through θ: F → Aut_Hopf T, with K = kF on the group basis.
pub fn action_from_theta(theta: &AutAction) -> Result<ActionData, Error> {
    let t = theta.target.clone();
    let f = &theta.group;
    let k = Arc::new(group_algebra(f, t.field()));
    let act = (0..f.order()).flat_map(|g| theta.maps[g].iter().cloned()).collect();
    let mut ad = ActionData::new(t, k, act)?;
    ad.group = Some(f.clone());
    Ok(ad)
}

/// T # K on the basis t#k (index i·dim K + a), with ι(t) = t#1 and
/// π(t#k) = ε(t)k.
pub fn smash_product(ad: &ActionData) -> Result<Extension, Error> {
    let (t, k) = (&*ad.t, &*ad.k);
    if t.field() != k.field() {
        return Err(Error::ConductorMismatch(t.field().n(), k.field().n()));
    }
    let field = t.field().clone();
    let (nt, nk) = (t.dim(), k.dim());
    let d = nt * nk;
    let pair = |x: &SparseVec, y: &SparseVec| crate::hopf::tensor_vecs(x, y, nk);
    let mut mult = Vec::with_capacity(d * d);
    for i in 0..nt {
        for a in 0..nk {
            for j in 0..nt {
                for b in 0..nk {
                    let mut acc = Accum::new();
                    for (pq, c) in k.comult_tensor()[a].iter() {
                        let (p, q) = (pq / nk, pq % nk);
                        let left = t.mul(&t.basis(i), ad.act_basis(p, j));
                        let right = k.mul_basis(q, b);
                        for (x, u) in left.iter() {
                            for (y, v) in right.iter() {
                                acc.push(x * nk + y, &(c * u) * v);
                            }
                        }
                    }
                    mult.push(acc.finish());
                }
            }
        }
    }
    let mut comult = Vec::with_capacity(d);
    let mut antipode = Vec::with_capacity(d);
    for i in 0..nt {
        for a in 0..nk {
            let mut acc = Accum::new();
            for (xy, c) in t.comult_tensor()[i].iter() {
                let (x, y) = (xy / nt, xy % nt);
                for (pq, e) in k.comult_tensor()[a].iter() {
                    let (p, q) = (pq / nk, pq % nk);
                    acc.push((x * nk + p) * d + (y * nk + q), c * e);
                }
            }
            comult.push(acc.finish());
            let mut acc = Accum::new();
            for (pq, c) in k.comult_tensor()[a].iter() {
                let (p, q) = (pq / nk, pq % nk);
                let left = ad.act_on(&k.antipode_tensor()[q], &t.antipode_tensor()[i]);
                for (x, u) in left.iter() {
                    for (y, v) in k.antipode_tensor()[p].iter() {
                        acc.push(x * nk + y, &(c * u) * v);
                    }
                }
            }
            antipode.push(acc.finish());
        }
    }
    let mut labels = Vec::with_capacity(d);
    let mut counit = Vec::with_capacity(d);
    for i in 0..nt {
        for a in 0..nk {
            labels.push(format!("{}#{}", t.labels()[i], k.labels()[a]));
            counit.push(&t.counit_tensor()[i] * &k.counit_tensor()[a]);
        }
    }
    let iota_cols: Vec<SparseVec> = (0..nt).map(|i| pair(&t.basis(i), k.unit())).collect();
    let provenance = Provenance::new("smash_product")
        .param("T", &t.provenance().construction)
        .param("K", &k.provenance().construction)
        .param("dim_T", nt)
        .param("dim_K", nk)
        .subobject("T", KIND_SEQUENCE_KERNEL, iota_cols.clone());
    let h = FinHopf::from_parts(HopfParts {
        field,
        labels,
        mult,
        unit: pair(t.unit(), k.unit()),
        comult,
        counit,
        antipode,
        provenance,
    })?;
    let h = Arc::new(verified(h)?);
    let iota = LinMap::new(ad.t.clone(), h.clone(), iota_cols)?.certify_hopf()?;
    let pi_cols = (0..nt)
        .flat_map(|i| (0..nk).map(move |a| (i, a)))
        .map(|(i, a)| k.basis(a).scale(&t.counit_tensor()[i]))
        .collect();
    let pi = LinMap::new(h.clone(), ad.k.clone(), pi_cols)?.certify_hopf()?;
    Ok(Extension { hopf: h, iota, pi })
}

/// The action of K* on R* dual to a coaction of K on R:
/// (α·f)(r) = ⟨α, S²(r_{(-1)})⟩ f(r_{(0)}).
pub fn dual_coaction(cd: &CoactionData) -> Result<ActionData, Error> {
    let (r, k) = (&*cd.r, &*cd.k);
    let (nr, nk) = (r.dim(), k.dim());
    let s2: Vec<SparseVec> = (0..nk).map(|b| k.antipode(&k.antipode_tensor()[b])).collect();
    let mut acc: Vec<Accum> = (0..nk * nr).map(|_| Accum::new()).collect();
    for j in 0..nr {
        for (bl, c) in cd.rho[j].iter() {
            let (b, l) = (bl / nr, bl % nr);
            for (a, s) in s2[b].iter() {
                acc[a * nr + l].push(j, c * s);
            }
        }
    }
    let act = acc.into_iter().map(Accum::finish).collect();
    ActionData::new(Arc::new(dual(r)), Arc::new(dual(k)), act)
}

/// The coaction of A* on T* dual to an action of A on T, inverse to
/// [`dual_coaction`] under the double-dual identification.
pub fn dual_action(ad: &ActionData) -> Result<CoactionData, Error> {
    let (t, a) = (&*ad.t, &*ad.k);
    let (nt, na) = (t.dim(), a.dim());
    let k = dual(a);
    let field = t.field().clone();
    let s_inv = invert_columns(k.antipode_tensor(), &field).ok_or_else(|| Error::NotInvertible(String::from("antipode")))?;
    let s_inv2: Vec<SparseVec> = (0..na).map(|b| apply_columns(&s_inv, &s_inv[b])).collect();
    let mut acc: Vec<Accum> = (0..nt).map(|_| Accum::new()).collect();
    for (b, sb) in s_inv2.iter().enumerate() {
        for i in 0..nt {
            for (j, c) in ad.act_basis(b, i).iter() {
                for (q, s) in sb.iter() {
                    acc[*j].push(q * nt + i, c * s);
                }
            }
        }
    }
    let rho = acc.into_iter().map(Accum::finish).collect();
    CoactionData::new(Arc::new(dual(t)), Arc::new(k), rho)
}

// ---------------------------------------------------------------------------
// Sections of smash products by group algebras

/// s_φ, its normal image K_φ and the splitting isomorphism ψ: T#kF → T⊗kF.
#[derive(Clone, Debug)]
pub struct Section {
    pub phi: Vec<SparseVec>,
    pub s: LinMap,
    pub image: Subspace,
    pub psi: LinMap,
}

/// Checks g·t = φ(g) t φ(g⁻¹) for all g ∈ F and basis t.
pub fn section_condition_holds(ad: &ActionData, f: &PermGroup, phi: &[SparseVec]) -> bool {
    let t = &*ad.t;
    (0..f.order()).all(|g| {
        (0..t.dim()).all(|i| *ad.act_basis(g, i) == t.mul(&t.mul(&phi[g], &t.basis(i)), &phi[f.inv(g)]))
    })
}

/// s_φ(g) = φ(g⁻¹)#g for φ: F → G(T) given on every element of F.
pub fn section_from_phi(ad: &ActionData, smash: &Extension, phi: &[SparseVec]) -> Result<Section, Error> {
    let f = ad.group.clone().ok_or_else(|| Error::InvalidData(String::from("action is not by a group algebra")))?;
    let t = ad.t.clone();
    let nf = f.order();
    if phi.len() != nf {
        return Err(Error::DimensionMismatch { expected: nf, found: phi.len() });
    }
    for g in 0..nf {
        if t.comult(&phi[g]) != crate::hopf::tensor_vecs(&phi[g], &phi[g], t.dim()) || !t.counit(&phi[g]).is_one() {
            return Err(Error::InvalidData(format!("φ({}) is not group-like", f.elem(g))));
        }
        for h in 0..nf {
            if phi[f.mul(g, h)] != t.mul(&phi[g], &phi[h]) {
                return Err(Error::InvalidData(String::from("φ is not a homomorphism")));
            }
        }
    }
    if !section_condition_holds(ad, &f, phi) {
        return Err(Error::IdentityFails(String::from("g·t = φ(g) t φ(g⁻¹)")));
    }
    let field = t.field().clone();
    let s_cols: Vec<SparseVec> = (0..nf).map(|g| crate::hopf::tensor_vecs(&phi[f.inv(g)], &SparseVec::unit(g, &field), nf)).collect();
    let kf = ad.k.clone();
    let s = LinMap::new(kf, smash.hopf.clone(), s_cols.clone())?.certify_hopf()?;
    let back = smash.pi.compose(&s)?;
    if !back.is_identity_matrix() {
        return Err(Error::IdentityFails(String::from("π∘s_φ = id")));
    }
    let image = Subspace::spanned_by(smash.hopf.dim(), &s_cols);
    if !crate::analysis::is_normal_hopf_subalgebra(&smash.hopf, &image)? {
        return Err(Error::NotNormal(String::from("image of s_φ")));
    }
    let target = Arc::new(tensor_hopf(&t, &ad.k)?);
    let psi_cols = (0..t.dim())
        .flat_map(|i| (0..nf).map(move |g| (i, g)))
        .map(|(i, g)| crate::hopf::tensor_vecs(&t.mul(&t.basis(i), &phi[g]), &SparseVec::unit(g, &field), nf))
        .collect();
    let psi = LinMap::new(smash.hopf.clone(), target, psi_cols)?.certify_hopf()?;
    if !psi.is_injective() {
        return Err(Error::NotInvertible(String::from("ψ")));
    }
    Ok(Section { phi: phi.to_vec(), s, image, psi })
}

/// Every homomorphism φ: F → G(T) with g·t = φ(g) t φ(g⁻¹), each given on
/// all elements of F.
pub fn classify_sections(ad: &ActionData) -> Result<Vec<Vec<SparseVec>>, Error> {
    let f = ad.group.clone().ok_or_else(|| Error::InvalidData(String::from("action is not by a group algebra")))?;
    let t = &*ad.t;
    let gl = crate::analysis::group_likes(t)?;
    let m = gl.len();
    // Multiplication table of G(T) by lookup.
    let mut table = Vec::with_capacity(m * m);
    for a in &gl {
        for b in &gl {
            let p = t.mul(a, b);
            let k = gl.iter().position(|x| *x == p).ok_or_else(|| Error::InvalidData(String::from("group-likes not closed")))?;
            table.push(k);
        }
    }
    let unit_pos = gl.iter().position(|x| x == t.unit()).ok_or_else(|| Error::InvalidData(String::from("1 not group-like")))?;
    // Reorder so the identity is index 0 for the table-based search.
    let mut order: Vec<usize> = (0..m).collect();
    order.swap(0, unit_pos);
    let mut pos = vec![0; m];
    for (k, &o) in order.iter().enumerate() {
        pos[o] = k;
    }
    let reindexed: Vec<usize> = (0..m * m).map(|k| pos[table[order[k / m] * m + order[k % m]]]).collect();
    let gt = PermGroup::regular_from_table(m, &reindexed)?;
    // gt elements are permutations sorted lexicographically; map them back.
    let to_gl = |p: &Perm| order[p.images()[0] as usize];
    let mut out = Vec::new();
    for hom in crate::groups::homomorphisms(&f, &gt) {
        let phi: Vec<SparseVec> = hom.iter().map(|&x| gl[to_gl(gt.elem(x))].clone()).collect();
        if section_condition_holds(ad, &f, &phi) {
            out.push(phi);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Basic construction

/// σ: G×G → Γ̂, `values[g·|G|+g'][γ] = σ(g,g')(γ)`.
#[derive(Clone, Debug)]
pub struct GammaHatCocycle {
    pub gamma: PermGroup,
    pub g: PermGroup,
    pub values: Vec<Vec<CycNumber>>,
}

impl GammaHatCocycle {
    pub fn trivial(gamma: &PermGroup, g: &PermGroup, field: &Conductor) -> Self {
        GammaHatCocycle {
            gamma: gamma.clone(),
            g: g.clone(),
            values: vec![vec![field.one(); gamma.order()]; g.order() * g.order()],
        }
    }

    pub fn value(&self, a: usize, b: usize) -> &[CycNumber] {
        &self.values[a * self.g.order() + b]
    }

    /// Character values, normalization and the 2-cocycle identity.
    pub fn check(&self) -> Result<(), Error> {
        let (gm, g) = (&self.gamma, &self.g);
        let ng = g.order();
        if self.values.len() != ng * ng || self.values.iter().any(|v| v.len() != gm.order()) {
            return Err(Error::DimensionMismatch { expected: ng * ng, found: self.values.len() });
        }
        for v in &self.values {
            for x in 0..gm.order() {
                for y in 0..gm.order() {
                    if v[gm.mul(x, y)] != &v[x] * &v[y] {
                        return Err(Error::IdentityFails(String::from("σ(g,g') is not a character of Γ")));
                    }
                }
            }
        }
        let one = |v: &[CycNumber]| v.iter().all(CycNumber::is_one);
        for a in 0..ng {
            if !one(self.value(0, a)) || !one(self.value(a, 0)) {
                return Err(Error::IdentityFails(String::from("σ is not normalized")));
            }
        }
        for a in 0..ng {
            for b in 0..ng {
                for c in 0..ng {
                    for x in 0..gm.order() {
                        let lhs = &self.value(a, b)[x] * &self.value(g.mul(a, b), c)[x];
                        let rhs = &self.value(b, c)[x] * &self.value(a, g.mul(b, c))[x];
                        if lhs != rhs {
                            return Err(Error::IdentityFails(format!(
                                "2-cocycle identity σ(g,g')σ(gg',g'') = σ(g',g'')σ(g,g'g'') at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// σ·∂λ with (∂λ)(g,g') = λ(g)λ(g')λ(gg')⁻¹ for λ: G → Γ̂ normalized.
    pub fn times_coboundary(&self, lambda: &[Vec<CycNumber>]) -> Result<Self, Error> {
        let g = &self.g;
        let ng = g.order();
        let mut values = Vec::with_capacity(ng * ng);
        for a in 0..ng {
            for b in 0..ng {
                let ab = g.mul(a, b);
                let v = (0..self.gamma.order())
                    .map(|x| {
                        let num = &(&self.value(a, b)[x] * &lambda[a][x]) * &lambda[b][x];
                        num.try_div(&lambda[ab][x])
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                values.push(v);
            }
        }
        let out = GammaHatCocycle { gamma: self.gamma.clone(), g: g.clone(), values };
        out.check()?;
        Ok(out)
    }
}

/// R ⋊ k^Γ #_σ kG on the basis r#δ_γ#g (index (i·|Γ| + γ)·|G| + g).
pub fn basic_construction(theta: &AutAction, mu: &AutAction, sigma: &GammaHatCocycle) -> Result<Extension, Error> {
    let r = theta.target.clone();
    if !Arc::ptr_eq(&r, &mu.target) && !r.structure_eq(&mu.target) {
        return Err(Error::InvalidData(String::from("θ and μ act on different Hopf algebras")));
    }
    if !theta.commutes_with(mu) {
        return Err(Error::IdentityFails(String::from("[μ(G), θ(Γ)] = 1")));
    }
    sigma.check()?;
    let (gm, g) = (&theta.group, &mu.group);
    if sigma.gamma != *gm || sigma.g != *g {
        return Err(Error::InvalidData(String::from("σ is defined on different groups")));
    }
    let field = r.field().clone();
    let (nr, ngm, ng) = (r.dim(), gm.order(), g.order());
    let d = nr * ngm * ng;
    let idx = |i: usize, c: usize, x: usize| (i * ngm + c) * ng + x;
    let mut mult = Vec::with_capacity(d * d);
    for i in 0..nr {
        for c in 0..ngm {
            for x in 0..ng {
                for j in 0..nr {
                    for c2 in 0..ngm {
                        for y in 0..ng {
                            if c != c2 {
                                mult.push(SparseVec::new());
                                continue;
                            }
                            let prod = r.mul(&r.basis(i), &mu.apply(x, &r.basis(j)));
                            let sv = &sigma.value(x, y)[c];
                            let xy = g.mul(x, y);
                            mult.push(SparseVec::from_terms(prod.iter().map(|(k, v)| (idx(*k, c, xy), v * sv))));
                        }
                    }
                }
            }
        }
    }
    let mut comult = Vec::with_capacity(d);
    let mut antipode = Vec::with_capacity(d);
    let mut labels = Vec::with_capacity(d);
    let mut counit = Vec::with_capacity(d);
    for i in 0..nr {
        for c in 0..ngm {
            for x in 0..ng {
                let mut acc = Accum::new();
                for u in 0..ngm {
                    let v = gm.mul(gm.inv(u), c);
                    let tu = theta.map(gm.inv(u));
                    for (pq, e) in r.comult_tensor()[i].iter() {
                        let (p, q) = (pq / nr, pq % nr);
                        for (q2, f) in tu[q].iter() {
                            acc.push(idx(p, u, x) * d + idx(*q2, v, x), e * f);
                        }
                    }
                }
                comult.push(acc.finish());
                let xi = g.inv(x);
                let ci = gm.inv(c);
                let inner = theta.apply(ci, &r.antipode_tensor()[i]);
                let img = mu.apply(xi, &inner);
                let sv = sigma.value(xi, x)[ci].inv()?;
                antipode.push(SparseVec::from_terms(img.iter().map(|(k, v)| (idx(*k, ci, xi), v * &sv))));
                labels.push(format!("{}#δ{}#{}", r.labels()[i], gm.elem(c), g.elem(x)));
                counit.push(if c == 0 { r.counit_tensor()[i].clone() } else { field.zero() });
            }
        }
    }
    let unit = SparseVec::from_terms(
        r.unit().iter().flat_map(|(i, v)| (0..ngm).map(move |c| (idx(*i, c, 0), v.clone()))),
    );
    let inner_ext = smash_coproduct(&coaction_from_theta(theta)?)?;
    let iota_cols: Vec<SparseVec> = (0..nr * ngm).map(|k| SparseVec::unit(k * ng, &field)).collect();
    let provenance = Provenance::new("basic_construction")
        .param("R", &r.provenance().construction)
        .param("dim_R", nr)
        .param("Gamma", GroupSpecDisplay(&GroupSpec::of(gm)))
        .param("G", GroupSpecDisplay(&GroupSpec::of(g)))
        .subobject("R⋊k^Γ", KIND_SEQUENCE_KERNEL, iota_cols.clone())
        .subobject("k^Γ", KIND_SEQUENCE_KERNEL, {
            let kg = &inner_ext.iota;
            kg.columns.iter().map(|c| apply_columns(&iota_cols, c)).collect()
        });
    let h = FinHopf::from_parts(HopfParts { field: field.clone(), labels, mult, unit, comult, counit, antipode, provenance })?;
    let h = Arc::new(verified(h)?);
    let iota = LinMap::new(inner_ext.hopf.clone(), h.clone(), iota_cols)?.certify_hopf()?;
    let kg = Arc::new(group_algebra(g, &field));
    let pi_cols = (0..nr)
        .flat_map(|i| (0..ngm).flat_map(move |c| (0..ng).map(move |x| (i, c, x))))
        .map(|(i, c, x)| {
            let e = if c == 0 { r.counit_tensor()[i].clone() } else { field.zero() };
            SparseVec::unit(x, &field).scale(&e)
        })
        .collect();
    let pi = LinMap::new(h.clone(), kg, pi_cols)?.certify_hopf()?;
    Ok(Extension { hopf: h, iota, pi })
}

/// Searches λ: G → Γ̂ with σ' = σ·∂λ and returns the corresponding
/// diagonal Hopf isomorphism r#δ_γ#g ↦ λ(g)(γ)⁻¹ r#δ_γ#g between the two
/// basic constructions.
pub fn cohomologous_sigma_iso(a: &Extension, b: &Extension, sigma: &GammaHatCocycle, sigma2: &GammaHatCocycle) -> Result<LinMap, Error> {
    let field = a.hopf.field().clone();
    let (gm, g) = (&sigma.gamma, &sigma.g);
    let chars = abelian_characters(gm, &field)?;
    let (ngm, ng) = (gm.order(), g.order());
    let m = chars.order();
    let mut choice = vec![0usize; ng];
    loop {
        if choice[0] == 0 {
            let lambda: Vec<Vec<CycNumber>> =
                choice.iter().map(|&c| (0..ngm).map(|x| chars.chars[c].value(x, &field)).collect()).collect();
            if let Ok(cand) = sigma.times_coboundary(&lambda) {
                if cand.values == sigma2.values {
                    let d = a.hopf.dim();
                    let cols: Vec<SparseVec> = (0..d)
                        .map(|k| {
                            let (c, x) = ((k / ng) % ngm, k % ng);
                            SparseVec::single(k, lambda[x][c].inv().expect("root of unity"))
                        })
                        .collect();
                    for dir in [true, false] {
                        let cols = if dir {
                            cols.clone()
                        } else {
                            cols.iter().map(|v| v.map_indices(|k| k)).map(|v| {
                                let (k, c) = v.entries()[0].clone();
                                SparseVec::single(k, c.inv().expect("nonzero"))
                            }).collect()
                        };
                        if let Ok(map) = LinMap::new(a.hopf.clone(), b.hopf.clone(), cols)?.certify_hopf() {
                            return Ok(map);
                        }
                    }
                }
            }
        }
        let mut k = 0;
        loop {
            if k == ng {
                return Err(Error::Inconclusive(String::from("no coboundary relates the two cocycles")));
            }
            choice[k] += 1;
            if choice[k] < m {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Twisted group algebras: Galindo comparisons

/// N ⋊_Ad G realized inside Sym(N)×Sym(G) as {(ng, g)}, which is
/// isomorphic to N ⋊ G; requires G ≤ N.
pub fn semidirect_adjoint(n: &PermGroup, g: &PermGroup) -> Result<PermGroup, Error> {
    n.embed(g)?;
    let d = n.degree();
    let mut gens: Vec<Perm> = n.generators().iter().map(|x| x.shift(0, 2 * d)).collect();
    for y in g.generators() {
        gens.push(y.shift(0, 2 * d).mul(&y.shift(d, 2 * d)));
    }
    PermGroup::generate(2 * d, gens)
}

/// The pair (x, g) ∈ N ⋊ G as an element of [`semidirect_adjoint`].
pub fn semidirect_element(n: &PermGroup, g: &PermGroup, x: usize, y: usize) -> Perm {
    let d = n.degree();
    let gi = n.index_of(g.elem(y)).expect("G ≤ N");
    n.elem(n.mul(x, gi)).shift(0, 2 * d).mul(&g.elem(y).shift(d, 2 * d))
}

/// Identity-basis or explicitly supplied isomorphism certificate.
#[derive(Clone, Debug)]
pub struct IsoCertificate {
    pub map: LinMap,
    pub identical_structure: bool,
}

/// Certifies H1 ≅ H2 by identical structure constants, else through the
/// supplied basis map; otherwise reports inconclusive.
pub fn galindo_compare(h1: Arc<FinHopf>, h2: Arc<FinHopf>, suggested: Option<Vec<SparseVec>>) -> Result<IsoCertificate, Error> {
    if h1.structure_eq(&h2) {
        let cols = identity_columns(h1.dim(), h1.field());
        let map = LinMap::new(h1, h2, cols)?.certify_hopf()?;
        return Ok(IsoCertificate { map, identical_structure: true });
    }
    if let Some(cols) = suggested {
        let map = LinMap::new(h1, h2, cols)?.certify_hopf()?;
        if map.is_injective() {
            return Ok(IsoCertificate { map, identical_structure: false });
        }
    }
    Err(Error::Inconclusive(String::from("no isomorphism found within the search class")))
}

/// The data shared by the twisted-group constructions.
#[derive(Clone, Debug)]
pub struct TwistedGroupData {
    pub n: PermGroup,
    pub s: PermGroup,
    pub omega: DualCocycle,
    pub field: Conductor,
}

impl TwistedGroupData {
    pub fn kn(&self) -> Arc<FinHopf> {
        Arc::new(group_algebra(&self.n, &self.field))
    }

    pub fn twist(&self) -> Result<TwistElement, Error> {
        twist_from_pair(self.kn(), &self.n, &self.s, &self.omega)
    }

    /// J on kS, the Hopf subalgebra it lives in.
    pub fn twist_on_s(&self) -> Result<TwistElement, Error> {
        let ks = Arc::new(group_algebra(&self.s, &self.field));
        twist_from_pair(ks, &self.s, &self.s, &self.omega)
    }

    pub fn twisted(&self) -> Result<Arc<FinHopf>, Error> {
        Ok(Arc::new(apply_twist(&self.twist()?)?))
    }
}

/// H1 = (kN)^J ⋊ k^Γ and H2 = (kN ⋊ k^Γ)^{J̃} with θ = Ad on Γ ≤ C_N(S).
pub fn galindo_pair(data: &TwistedGroupData, gamma: &PermGroup) -> Result<(Extension, Arc<FinHopf>), Error> {
    let rj = data.twisted()?;
    let h1 = smash_coproduct(&coaction_from_theta(&AutAction::inner(rj, &data.n, gamma)?)?)?;
    let kn = data.kn();
    let plain = smash_coproduct(&coaction_from_theta(&AutAction::inner(kn, &data.n, gamma)?)?)?;
    let ng = gamma.order();
    let field = &data.field;
    let js = data.twist_on_s()?;
    let embed_cols: Vec<SparseVec> = data
        .s
        .elements()
        .iter()
        .map(|p| {
            let i = data.n.index_of(p).expect("S ≤ N");
            SparseVec::from_terms((0..ng).map(|c| (i * ng + c, field.one())))
        })
        .collect();
    let embed = LinMap::new(js.host.clone(), plain.hopf.clone(), embed_cols)?.certify_hopf()?;
    let jt = inflate_twist(&js, &embed)?;
    let h2 = apply_twist(&jt)?;
    Ok((h1, Arc::new(h2)))
}

/// A1 = (kN)^J ⋊ k^Γ # kG and A2 = k(N⋊G)^{J̃} ⋊ k^Γ, with the basis map
/// r#δ_γ#g ↦ (r,g)#δ_γ.
pub fn galindo_three_step(
    data: &TwistedGroupData,
    gamma: &PermGroup,
    g: &PermGroup,
) -> Result<(Extension, Extension, Vec<SparseVec>), Error> {
    let field = &data.field;
    let rj = data.twisted()?;
    let theta = AutAction::inner(rj.clone(), &data.n, gamma)?;
    let mu = AutAction::inner(rj, &data.n, g)?;
    let a1 = basic_construction(&theta, &mu, &GammaHatCocycle::trivial(gamma, g, field))?;
    let x = semidirect_adjoint(&data.n, g)?;
    let kx = Arc::new(group_algebra(&x, field));
    let js = data.twist_on_s()?;
    let d = data.n.degree();
    let s_cols: Vec<SparseVec> = data
        .s
        .elements()
        .iter()
        .map(|p| SparseVec::unit(x.index_of(&p.shift(0, 2 * d)).expect("S ≤ N⋊G"), field))
        .collect();
    let embed = LinMap::new(js.host.clone(), kx, s_cols)?.certify_hopf()?;
    let jt = inflate_twist(&js, &embed)?;
    let xj = Arc::new(apply_twist(&jt)?);
    let gamma_x = PermGroup::generate(2 * d, gamma.generators().iter().map(|p| p.shift(0, 2 * d)).collect())?;
    let a2 = smash_coproduct(&coaction_from_theta(&AutAction::inner(xj, &x, &gamma_x)?)?)?;
    let (nn, ngm, ngg) = (data.n.order(), gamma.order(), g.order());
    let mut cols = Vec::with_capacity(nn * ngm * ngg);
    for i in 0..nn {
        for c in 0..ngm {
            for y in 0..ngg {
                let xi = x.index_of(&semidirect_element(&data.n, g, i, y)).expect("element of N⋊G");
                let ci = gamma_x.index_of(&gamma.elem(c).shift(0, 2 * d)).expect("Γ element");
                cols.push(SparseVec::unit(xi * ngm + ci, field));
            }
        }
    }
    let prov = a2
        .hopf
        .provenance()
        .clone()
        .param("iso_source", "basic_construction")
        .subobject("(kN)^J⋊k^Γ#kG", KIND_SUGGESTED_ISO, cols.clone());
    let hopf = Arc::new((*a2.hopf).clone().with_provenance(prov));
    let iota = LinMap::new(a2.iota.source.clone(), hopf.clone(), a2.iota.columns)?.certify_hopf()?;
    let pi = LinMap::new(hopf.clone(), a2.pi.target.clone(), a2.pi.columns)?.certify_hopf()?;
    Ok((a1, Extension { hopf, iota, pi }, cols))
}
