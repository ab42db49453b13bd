//! The stable category of the simple singularity, seen as `proj Pi`.
//!
//! Objects `X_i` are indexed by Dynkin vertices (1-based). A morphism
//! `X_i -> X_j` is an element of `e_j Pi e_i` and `g . f` is the product `g f`,
//! so maps factoring through `X_f` are spanned by products `y x` with
//! `y in e_j Pi e_f`, `x in e_f Pi e_i`. The suspension acts on vertices by the
//! involution, and the Serre functor agrees with it.

use std::sync::Arc;

use crate::algebra::FDAlgebra;
use crate::dynkin::{frozen_split, DynkinSpec, Preprojective};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{IncrementalBasis, Matrix};
use crate::module::FDModule;

pub struct StableCat<F: Field> {
    pub pi: Preprojective<F>,
}

/// Outcome of axiom (c) with the pairs `(source, target)` that break it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomC {
    pub c1: bool,
    pub c2: bool,
    pub refuting: Vec<(usize, usize)>,
}

impl AxiomC {
    pub fn holds(&self) -> bool {
        self.c1 && self.c2
    }
}

/// Axiom (d) for one maximal proper `F' = J_f \ {removed}`: a nonzero quotient
/// Hom from `nu M` to `M` and one from `M` to `nu M`, as `(source, target)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomDWitness {
    pub removed: usize,
    pub subcategory: Vec<usize>,
    pub d1: Option<(usize, usize)>,
    pub d2: Option<(usize, usize)>,
}

impl AxiomDWitness {
    pub fn holds(&self) -> bool {
        self.d1.is_some() && self.d2.is_some()
    }
}

impl<F: Field> StableCat<F> {
    pub fn new(spec: &DynkinSpec) -> Result<Self> {
        Ok(StableCat { pi: Preprojective::new(spec)? })
    }

    pub fn spec(&self) -> &DynkinSpec {
        &self.pi.spec
    }

    pub fn suspension(&self, i: usize) -> usize {
        self.pi.spec.iota_of(i)
    }

    fn block(&self, i: usize, j: usize) -> &[usize] {
        self.pi.algebra.block(i - 1, j - 1)
    }

    /// `dim Hom(X_i, X_j) = dim e_j Pi e_i`.
    pub fn hom_dim(&self, i: usize, j: usize) -> usize {
        self.block(j, i).len()
    }

    /// Dimension of `Hom(X_i, X_j)` modulo maps factoring through `add{X_f : f in through}`.
    pub fn quotient_hom_dim(&self, i: usize, j: usize, through: &[usize]) -> usize {
        let alg = &self.pi.algebra;
        let target = self.block(j, i);
        if target.is_empty() {
            return 0;
        }
        let mut span = IncrementalBasis::empty(target.len());
        for &f in through {
            for &y in self.block(j, f) {
                for &x in self.block(f, i) {
                    let mut v = vec![F::zero(); target.len()];
                    for (z, c) in alg.mul_basis(y, x) {
                        v[alg.pos_in_block(z)] = c;
                    }
                    span.insert(&v);
                    if span.dim() == target.len() {
                        return 0;
                    }
                }
            }
        }
        target.len() - span.dim()
    }

    /// (c1): no map `nu X_i -> X_j` survives modulo `J_f`; (c2): no map `X_i -> nu X_j`.
    pub fn check_axiom_c(&self, j: &[usize]) -> Result<AxiomC> {
        let split = frozen_split(self.spec(), j)?;
        let (mut c1, mut c2) = (true, true);
        let mut refuting = Vec::new();
        for &a in &split.j {
            for &b in &split.j {
                let s = self.suspension(a);
                if self.quotient_hom_dim(s, b, &split.frozen) != 0 {
                    c1 = false;
                    refuting.push((s, b));
                }
                let t = self.suspension(b);
                if self.quotient_hom_dim(a, t, &split.frozen) != 0 {
                    c2 = false;
                    refuting.push((a, t));
                }
            }
        }
        Ok(AxiomC { c1, c2, refuting })
    }

    /// Axiom (d) over the maximal proper subsets of `J_f`; smaller subsets
    /// only enlarge the quotient Hom spaces.
    pub fn check_axiom_d(&self, j: &[usize]) -> Result<Vec<AxiomDWitness>> {
        let split = frozen_split(self.spec(), j)?;
        let mut out = Vec::new();
        for &x in &split.frozen {
            let sub: Vec<usize> = split.frozen.iter().copied().filter(|&f| f != x).collect();
            let mut d1 = None;
            let mut d2 = None;
            for &a in &split.j {
                for &b in &split.j {
                    let s = self.suspension(a);
                    if d1.is_none() && self.quotient_hom_dim(s, b, &sub) != 0 {
                        d1 = Some((s, b));
                    }
                    let t = self.suspension(b);
                    if d2.is_none() && self.quotient_hom_dim(a, t, &sub) != 0 {
                        d2 = Some((a, t));
                    }
                }
            }
            out.push(AxiomDWitness { removed: x, subcategory: sub, d1, d2 });
        }
        Ok(out)
    }

    /// `Hom(M, X_i) = e_i Pi e` as a right module over `contraction = e Pi e`.
    pub fn hom_module_over_contraction(&self, contraction: &Arc<FDAlgebra<F>>, i: usize) -> Result<FDModule<F>> {
        let emb = contraction.embedding().ok_or_else(|| Error::Invalid("algebra is not a contraction".into()))?;
        if !Arc::ptr_eq(&emb.parent, &self.pi.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let alg = &self.pi.algebra;
        let verts = &emb.vertices;
        let dims: Vec<usize> = verts.iter().map(|&v| alg.block(i - 1, v).len()).collect();
        let mats = contraction
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let g = &emb.basis_in_parent[contraction.arrow_basis(a)];
                let (s, t) = (verts[arr.source], verts[arr.target]);
                let rows = alg
                    .block(i - 1, s)
                    .iter()
                    .map(|&x| {
                        let mut row = vec![F::zero(); alg.block(i - 1, t).len()];
                        for (z, c) in alg.mul_sparse(&vec![(x, F::one())], g) {
                            row[alg.pos_in_block(z)] = c;
                        }
                        row
                    })
                    .collect();
                Matrix::from_rows(rows, alg.block(i - 1, t).len())
            })
            .collect();
        FDModule::new(contraction.clone(), dims, mats)
    }
}
