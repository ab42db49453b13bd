//! Projective covers, injective envelopes, syzygies and homological dimensions.
//!
//! Everything on the injective side goes through the opposite algebra and the
//! duality `D`, so there is a single code path for resolutions.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::FDAlgebra;
use crate::config::Config;
use crate::decompose::{indecomposable_summands, SummandRegistry};
use crate::error::Result;
use crate::field::Field;
use crate::hom::{hom_basis, hom_dim};
use crate::linalg::{Matrix, Subspace};
use crate::module::{FDModule, ModuleMap};

/// Outcome of a bounded dimension computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DimReport {
    Finite(usize),
    /// Certified infinite. The witness, when present, is a pair of stages
    /// `m < n` at which the same indecomposable summand occurs, so the walk is
    /// eventually periodic.
    Infinite(Option<(usize, usize)>),
    Undetermined(usize),
}

impl DimReport {
    pub fn is_finite(&self) -> bool {
        matches!(self, DimReport::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, DimReport::Infinite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            DimReport::Finite(d) => Some(*d),
            _ => None,
        }
    }

    /// Same value ignoring the witness.
    pub fn same_value(&self, other: &Self) -> bool {
        match (self, other) {
            (DimReport::Infinite(_), DimReport::Infinite(_)) => true,
            (a, b) => a == b,
        }
    }

    fn shifted(self, by: usize) -> Self {
        match self {
            DimReport::Finite(d) => DimReport::Finite(d + by),
            DimReport::Infinite(w) => DimReport::Infinite(w.map(|(a, b)| (a + by, b + by))),
            u => u,
        }
    }

    /// Supremum, preferring certified infinity over an undetermined bound.
    pub fn sup(self, other: Self) -> Self {
        use DimReport::*;
        match (self, other) {
            (Infinite(w), _) | (_, Infinite(w)) => Infinite(w),
            (Undetermined(b), _) | (_, Undetermined(b)) => Undetermined(b),
            (Finite(a), Finite(b)) => Finite(a.max(b)),
        }
    }
}

impl fmt::Display for DimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimReport::Finite(d) => write!(f, "{d}"),
            DimReport::Infinite(_) => write!(f, "inf"),
            DimReport::Undetermined(b) => write!(f, "?>={b}"),
        }
    }
}

/// Minimal projective cover `P_0 -> M`.
pub fn projective_cover<F: Field>(m: &FDModule<F>) -> ModuleMap<F> {
    let alg = m.algebra();
    let p = m.presentation();
    let parts: Vec<FDModule<F>> = p.gens.iter().map(|(i, _)| FDModule::projective(alg, *i)).collect();
    let p0 = FDModule::direct_sum(alg, &parts);
    ModuleMap::from_blocks(p0, m.clone(), p.cover.clone())
}

/// Multiplicity of each indecomposable projective in the projective cover.
pub fn cover_multiplicities<F: Field>(m: &FDModule<F>) -> Vec<usize> {
    m.top_dims()
}

/// `Omega(M)` together with its inclusion into the projective cover.
pub fn syzygy_with_inclusion<F: Field>(m: &FDModule<F>) -> (FDModule<F>, ModuleMap<F>) {
    let cover = projective_cover(m);
    let spaces: Vec<Subspace<F>> = m.presentation().kernel.iter().map(|k| Subspace::from_rows(k.clone())).collect();
    cover.src.submodule(&spaces)
}

pub fn syzygy<F: Field>(m: &FDModule<F>) -> FDModule<F> {
    syzygy_with_inclusion(m).0
}

pub fn syzygy_n<F: Field>(m: &FDModule<F>, n: usize) -> FDModule<F> {
    (0..n).fold(m.clone(), |x, _| syzygy(&x))
}

/// Minimal injective envelope `M -> I^0`.
pub fn injective_envelope<F: Field>(m: &FDModule<F>) -> ModuleMap<F> {
    let cover = projective_cover(&m.dual());
    let d = cover.dual();
    ModuleMap::from_blocks(m.clone(), d.tgt, d.blocks)
}

/// `Omega^{-1}(M)`, the cokernel of the injective envelope.
pub fn cosyzygy<F: Field>(m: &FDModule<F>) -> FDModule<F> {
    syzygy(&m.dual()).dual()
}

pub fn cosyzygy_n<F: Field>(m: &FDModule<F>, n: usize) -> FDModule<F> {
    syzygy_n(&m.dual(), n).dual()
}

/// Multiplicities of the indecomposable projectives in `P_0, ..., P_{n-1}` of
/// the minimal projective resolution.
pub fn projective_terms<F: Field>(m: &FDModule<F>, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(n);
    let mut x = m.clone();
    for _ in 0..n {
        out.push(x.top_dims());
        x = syzygy(&x);
    }
    out
}

/// Multiplicities of the indecomposable injectives in `I^0, ..., I^{n-1}`.
pub fn injective_terms<F: Field>(m: &FDModule<F>, n: usize) -> Vec<Vec<usize>> {
    projective_terms(&m.dual(), n)
}

/// `dim Ext^i(M, N)`, from `Hom(Omega^i M, N)` modulo maps that extend to the
/// projective cover of `Omega^{i-1} M`.
pub fn ext_dim<F: Field>(m: &FDModule<F>, n: &FDModule<F>, i: usize) -> Result<usize> {
    m.check_same_algebra(n)?;
    if i == 0 {
        return hom_dim(m, n);
    }
    let k = syzygy_n(m, i - 1);
    let (l, incl) = syzygy_with_inclusion(&k);
    if l.is_zero() {
        return Ok(0);
    }
    let total = hom_dim(&l, n)?;
    if total == 0 {
        return Ok(0);
    }
    let restricted: Vec<Vec<F>> = hom_basis(&incl.tgt, n)?.iter().map(|h| incl.then(h).flatten()).collect();
    let width = restricted.first().map_or(0, |r| r.len());
    let r = if restricted.is_empty() { 0 } else { Matrix::from_rows(restricted, width).rank() };
    Ok(total - r)
}

/// Whether `M` is projective: the cover is an isomorphism.
pub fn is_projective<F: Field>(m: &FDModule<F>) -> bool {
    let alg = m.algebra();
    let cover_dim: usize = m.top_dims().iter().enumerate().map(|(i, k)| k * alg.projective_dims()[i]).sum();
    cover_dim == m.dim()
}

pub fn is_injective<F: Field>(m: &FDModule<F>) -> bool {
    is_projective(&m.dual())
}

struct Node {
    projective: bool,
    cover_tops: Vec<usize>,
    /// Classes of all indecomposable summands of the syzygy.
    children: Option<Vec<usize>>,
    pdim: Option<DimReport>,
}

/// Memoized graph whose nodes are indecomposable modules and whose edges go to
/// the summands of the syzygy. A cycle certifies infinite projective dimension.
pub struct SyzygyGraph<F: Field> {
    alg: Arc<FDAlgebra<F>>,
    cfg: Config,
    reg: SummandRegistry<F>,
    nodes: Vec<Node>,
}

impl<F: Field> SyzygyGraph<F> {
    pub fn new(alg: &Arc<FDAlgebra<F>>, cfg: &Config) -> Self {
        SyzygyGraph { alg: alg.clone(), cfg: cfg.clone(), reg: SummandRegistry::new(), nodes: Vec::new() }
    }

    pub fn algebra(&self) -> &Arc<FDAlgebra<F>> {
        &self.alg
    }

    pub fn class_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn representative(&self, k: usize) -> &FDModule<F> {
        &self.reg.reps[k]
    }

    /// Class of an indecomposable module.
    pub fn class_of(&mut self, x: &FDModule<F>) -> Result<usize> {
        let k = self.reg.classify(x, &self.cfg)?;
        if k == self.nodes.len() {
            self.nodes.push(Node {
                projective: is_projective(x),
                cover_tops: x.top_dims(),
                children: None,
                pdim: None,
            });
        }
        Ok(k)
    }

    /// Classes of the indecomposable summands, with repetition.
    pub fn classes(&mut self, m: &FDModule<F>) -> Result<Vec<usize>> {
        let parts = indecomposable_summands(m, &self.cfg)?;
        parts.iter().map(|x| self.class_of(x)).collect()
    }

    pub fn is_projective_class(&self, k: usize) -> bool {
        self.nodes[k].projective
    }

    pub fn cover_tops(&self, k: usize) -> &[usize] {
        &self.nodes[k].cover_tops
    }

    pub fn children(&mut self, k: usize) -> Result<Vec<usize>> {
        if let Some(c) = &self.nodes[k].children {
            return Ok(c.clone());
        }
        let c = if self.nodes[k].projective {
            Vec::new()
        } else {
            let om = syzygy(&self.reg.reps[k].clone());
            let mut c = self.classes(&om)?;
            c.sort_unstable();
            c.dedup();
            c
        };
        self.nodes[k].children = Some(c.clone());
        Ok(c)
    }

    fn pdim_class(&mut self, k: usize, stack: &mut Vec<usize>) -> Result<DimReport> {
        if let Some(r) = self.nodes[k].pdim {
            return Ok(r);
        }
        if self.nodes[k].projective {
            self.nodes[k].pdim = Some(DimReport::Finite(0));
            return Ok(DimReport::Finite(0));
        }
        if let Some(m) = stack.iter().position(|&s| s == k) {
            return Ok(DimReport::Infinite(Some((0, stack.len() - m))));
        }
        if stack.len() >= self.cfg.bound {
            return Ok(DimReport::Undetermined(self.cfg.bound));
        }
        stack.push(k);
        let mut acc = DimReport::Finite(1);
        for c in self.children(k)? {
            if self.nodes[c].projective {
                continue;
            }
            let r = self.pdim_class(c, stack)?.shifted(1);
            acc = acc.sup(r);
            if acc.is_infinite() {
                break;
            }
        }
        stack.pop();
        if !matches!(acc, DimReport::Undetermined(_)) {
            self.nodes[k].pdim = Some(acc);
        }
        Ok(acc)
    }

    pub fn pdim(&mut self, m: &FDModule<F>) -> Result<DimReport> {
        let mut acc = DimReport::Finite(0);
        for k in self.classes(m)? {
            acc = acc.sup(self.pdim_class(k, &mut Vec::new())?);
        }
        Ok(acc)
    }

    /// Length of the shortest syzygy walk from `m` to a summand satisfying `bad`
    /// (`Finite(0)` when `m` itself has one); infinite when the reachable part
    /// of the graph is closed and avoids it.
    pub fn distance_to(&mut self, m: &FDModule<F>, bad: &dyn Fn(&Self, usize) -> bool) -> Result<DimReport> {
        let mut frontier = self.classes(m)?;
        frontier.sort_unstable();
        frontier.dedup();
        let mut seen: HashMap<usize, usize> = frontier.iter().map(|&k| (k, 0)).collect();
        for depth in 0..=self.cfg.bound {
            if frontier.iter().any(|&k| bad(self, k)) {
                return Ok(DimReport::Finite(depth));
            }
            let mut next = Vec::new();
            let mut revisit = None;
            for k in frontier {
                for c in self.children(k)? {
                    match seen.get(&c) {
                        Some(&d) => revisit = revisit.or(Some((d, depth + 1))),
                        None => {
                            seen.insert(c, depth + 1);
                            next.push(c);
                        }
                    }
                }
            }
            if next.is_empty() {
                return Ok(DimReport::Infinite(revisit));
            }
            frontier = next;
        }
        Ok(DimReport::Undetermined(self.cfg.bound))
    }
}

/// Projective and injective dimensions over one algebra, with memoized graphs
/// on both sides.
pub struct Homology<F: Field> {
    pub alg: Arc<FDAlgebra<F>>,
    pub cfg: Config,
    pub right: SyzygyGraph<F>,
    /// Syzygy graph over the opposite algebra, for injective data.
    pub left: SyzygyGraph<F>,
    injective_projective: Option<Vec<bool>>,
}

impl<F: Field> Homology<F> {
    pub fn new(alg: &Arc<FDAlgebra<F>>, cfg: &Config) -> Self {
        Homology {
            alg: alg.clone(),
            cfg: cfg.clone(),
            right: SyzygyGraph::new(alg, cfg),
            left: SyzygyGraph::new(&alg.opposite(), cfg),
            injective_projective: None,
        }
    }

    pub fn pdim(&mut self, m: &FDModule<F>) -> Result<DimReport> {
        self.right.pdim(m)
    }

    pub fn idim(&mut self, m: &FDModule<F>) -> Result<DimReport> {
        self.left.pdim(&m.dual())
    }

    /// `idim A_A`.
    pub fn self_injective_dim(&mut self) -> Result<DimReport> {
        let a = FDModule::regular(&self.alg);
        self.idim(&a)
    }

    /// Which indecomposable injectives are also projective.
    pub fn projective_injectives(&mut self) -> Vec<bool> {
        if let Some(v) = &self.injective_projective {
            return v.clone();
        }
        let v: Vec<bool> =
            (0..self.alg.vertex_count()).map(|i| is_projective(&FDModule::injective(&self.alg, i))).collect();
        self.injective_projective = Some(v.clone());
        v
    }

    /// Dominant dimension of `M`: the number of leading projective terms of its
    /// minimal injective coresolution.
    pub fn dominant_dim_of(&mut self, m: &FDModule<F>) -> Result<DimReport> {
        let pi = self.projective_injectives();
        let bad = move |g: &SyzygyGraph<F>, k: usize| g.cover_tops(k).iter().enumerate().any(|(v, &t)| t > 0 && !pi[v]);
        self.left.distance_to(&m.dual(), &bad)
    }

    pub fn dominant_dim(&mut self) -> Result<DimReport> {
        let a = FDModule::regular(&self.alg);
        self.dominant_dim_of(&a)
    }

    /// `pdim I^i(M)` for `i < n`, reading the terms off the opposite side.
    pub fn injective_term_pdims(&mut self, m: &FDModule<F>, n: usize) -> Result<Vec<DimReport>> {
        let terms = injective_terms(m, n);
        let mut cache: HashMap<usize, DimReport> = HashMap::new();
        let mut out = Vec::new();
        for t in terms {
            let mut acc = DimReport::Finite(0);
            for (v, &k) in t.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let r = match cache.get(&v) {
                    Some(r) => *r,
                    None => {
                        let r = self.pdim(&FDModule::injective(&self.alg, v))?;
                        cache.insert(v, r);
                        r
                    }
                };
                acc = acc.sup(r);
            }
            out.push(acc);
        }
        Ok(out)
    }
}
