//! Krull-Schmidt decomposition by Fitting splitting, locality certificates and
//! isomorphism tests.

use rand::Rng;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hom::hom_basis;
use crate::linalg::{independent_rows, Matrix, Subspace};
use crate::module::{FDModule, ModuleMap};

/// Indecomposable summands with multiplicities.
#[derive(Clone, Debug)]
pub struct Decomposition<F: Field> {
    pub parts: Vec<(FDModule<F>, usize)>,
}

impl<F: Field> Decomposition<F> {
    pub fn summand_count(&self) -> usize {
        self.parts.iter().map(|(_, k)| k).sum()
    }

    /// Dimension vectors with multiplicities, for display.
    pub fn shape(&self) -> Vec<(Vec<usize>, usize)> {
        self.parts.iter().map(|(m, k)| (m.dims().to_vec(), *k)).collect()
    }

    /// One copy of each summand.
    pub fn basic_parts(&self) -> Vec<FDModule<F>> {
        self.parts.iter().map(|(m, _)| m.clone()).collect()
    }
}

/// Matrices of `f` on `top M`, one per vertex.
pub(crate) fn top_action<F: Field>(f: &ModuleMap<F>, rad: &[Subspace<F>]) -> Vec<Matrix<F>> {
    f.blocks
        .iter()
        .zip(rad)
        .map(|(b, r)| {
            let comps = r.complement_indices();
            let mut out = Matrix::zeros(comps.len(), comps.len());
            for (i, &c) in comps.iter().enumerate() {
                let mut v = b.row(c).to_vec();
                r.reduce(&mut v);
                for (j, &d) in comps.iter().enumerate() {
                    out.set(i, j, v[d].clone());
                }
            }
            out
        })
        .collect()
}

/// Whether `End(M)` is local, from a basis of it. The image of `End(M)` in
/// `End(top M)` has the same semisimple quotient, and its radical is the radical
/// of the trace form, provided the characteristic exceeds the top dimension.
pub fn end_is_local<F: Field>(m: &FDModule<F>, end_basis: &[ModuleMap<F>]) -> bool {
    if m.is_zero() {
        return false;
    }
    let rad = m.radical_spaces();
    let tops: Vec<Vec<Matrix<F>>> = end_basis.iter().map(|f| top_action(f, &rad)).collect();
    let t: usize = m.top_dims().iter().sum();
    if F::CHARACTERISTIC != 0 && t as u64 >= F::CHARACTERISTIC {
        return false;
    }
    let flat: Vec<Vec<F>> =
        tops.iter().map(|ms| ms.iter().flat_map(|x| x.entries().iter().cloned()).collect()).collect();
    let width = flat.first().map_or(0, |v| v.len());
    let picked = independent_rows(&Subspace::zero(width), &Matrix::from_rows(flat, width));
    let mut gram = Matrix::zeros(picked.len(), picked.len());
    for (i, &a) in picked.iter().enumerate() {
        for (j, &b) in picked.iter().enumerate() {
            let mut tr = F::zero();
            for (x, y) in tops[a].iter().zip(&tops[b]) {
                tr = tr.add(&x.mul(y).trace());
            }
            gram.set(i, j, tr);
        }
    }
    gram.rank() == 1
}

fn random_combination<F: Field, R: Rng>(m: &FDModule<F>, basis: &[ModuleMap<F>], rng: &mut R) -> ModuleMap<F> {
    let coeffs: Vec<F> = basis.iter().map(|_| F::sample(rng)).collect();
    ModuleMap::combination(m, m, basis, &coeffs)
}

/// Tries to split `M = ker (f - c)^N + im (f - c)^N` for an eigenvalue `c` of
/// `f` on the top.
fn fitting_split<F: Field>(
    m: &FDModule<F>,
    f: &ModuleMap<F>,
    rad: &[Subspace<F>],
) -> Option<(FDModule<F>, FDModule<F>)> {
    let top = top_action(f, rad);
    for c in F::eigen_candidates() {
        let singular = top.iter().any(|t| {
            let shifted = t.sub(&Matrix::identity(t.rows()).scale(&c));
            shifted.rank() < t.rows()
        });
        if !singular {
            continue;
        }
        let powered: Vec<Matrix<F>> =
            f.blocks.iter().map(|b| b.sub(&Matrix::identity(b.rows()).scale(&c)).pow(b.rows().max(1) as u64)).collect();
        let ker: Vec<Subspace<F>> = powered.iter().map(|p| Subspace::from_rows(p.left_kernel())).collect();
        let kdim: usize = ker.iter().map(|s| s.dim()).sum();
        if kdim == 0 || kdim == m.dim() {
            continue;
        }
        let img: Vec<Subspace<F>> = powered.iter().map(|p| p.row_space()).collect();
        return Some((m.submodule(&ker).0, m.submodule(&img).0));
    }
    None
}

/// Indecomposable summands, with repetition.
pub fn indecomposable_summands<F: Field>(m: &FDModule<F>, cfg: &Config) -> Result<Vec<FDModule<F>>> {
    let mut rng = cfg.rng(0xdec0 ^ m.dim() as u64);
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.is_zero() {
            continue;
        }
        if x.top_dims().iter().sum::<usize>() == 1 {
            // cyclic with simple top: a quotient of an indecomposable projective
            out.push(x);
            continue;
        }
        let end = hom_basis(&x, &x)?;
        if end_is_local(&x, &end) {
            out.push(x);
            continue;
        }
        let rad = x.radical_spaces();
        let mut split = None;
        for _ in 0..cfg.split_samples {
            let f = random_combination(&x, &end, &mut rng);
            if let Some(s) = fitting_split(&x, &f, &rad) {
                split = Some(s);
                break;
            }
        }
        if split.is_none() {
            // Over Q a random endomorphism of X^2 rarely has a rational eigenvalue
            // on the top; basis elements and their pairwise sums usually do.
            let pairs = (0..end.len()).flat_map(|i| (i..end.len()).map(move |j| (i, j)));
            split = pairs
                .map(|(i, j)| if i == j { end[i].clone() } else { end[i].add(&end[j]) })
                .find_map(|f| fitting_split(&x, &f, &rad));
        }
        match split {
            Some((a, b)) => {
                stack.push(b);
                stack.push(a);
            }
            None => return Err(Error::DecompositionInconclusive(cfg.split_samples)),
        }
    }
    Ok(out)
}

/// Decomposition into isomorphism classes with multiplicities.
pub fn decompose<F: Field>(m: &FDModule<F>, cfg: &Config) -> Result<Decomposition<F>> {
    let mut reg = SummandRegistry::new();
    let mut counts: Vec<usize> = Vec::new();
    for x in indecomposable_summands(m, cfg)? {
        let k = reg.classify(&x, cfg)?;
        if k == counts.len() {
            counts.push(0);
        }
        counts[k] += 1;
    }
    Ok(Decomposition { parts: reg.reps.into_iter().zip(counts).collect() })
}

/// One summand from each isomorphism class.
pub fn basic_summands<F: Field>(m: &FDModule<F>, cfg: &Config) -> Result<Vec<FDModule<F>>> {
    Ok(decompose(m, cfg)?.basic_parts())
}

fn cheap_invariants_agree<F: Field>(x: &FDModule<F>, y: &FDModule<F>) -> bool {
    x.same_algebra(y) && x.dims() == y.dims() && x.top_dims() == y.top_dims() && x.socle_dims() == y.socle_dims()
}

/// Isomorphism test for indecomposables. Random maps prove isomorphism; if none
/// is found, all composites of basis maps are checked, which is conclusive
/// because a non-invertible endomorphism of an indecomposable is nilpotent.
pub fn indecomposables_isomorphic<F: Field>(x: &FDModule<F>, y: &FDModule<F>, cfg: &Config) -> Result<bool> {
    if !cheap_invariants_agree(x, y) {
        return Ok(false);
    }
    let fs = hom_basis(x, y)?;
    if fs.is_empty() {
        return Ok(false);
    }
    let mut rng = cfg.rng(0x150 ^ x.dim() as u64);
    for _ in 0..3 {
        let coeffs: Vec<F> = fs.iter().map(|_| F::sample(&mut rng)).collect();
        if ModuleMap::combination(x, y, &fs, &coeffs).is_isomorphism() {
            return Ok(true);
        }
    }
    let gs = hom_basis(y, x)?;
    for f in &fs {
        for g in &gs {
            if f.then(g).is_isomorphism() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Isomorphism test for arbitrary modules.
pub fn is_isomorphic<F: Field>(m: &FDModule<F>, n: &FDModule<F>, cfg: &Config) -> Result<bool> {
    m.check_same_algebra(n)?;
    if !cheap_invariants_agree(m, n) {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let fs = hom_basis(m, n)?;
    let mut rng = cfg.rng(0x151 ^ m.dim() as u64);
    for _ in 0..4 {
        let coeffs: Vec<F> = fs.iter().map(|_| F::sample(&mut rng)).collect();
        if ModuleMap::combination(m, n, &fs, &coeffs).is_isomorphism() {
            return Ok(true);
        }
    }
    let (dm, dn) = (decompose(m, cfg)?, decompose(n, cfg)?);
    if dm.parts.len() != dn.parts.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.parts.len()];
    'outer: for (x, k) in &dm.parts {
        for (j, (y, l)) in dn.parts.iter().enumerate() {
            if !used[j] && k == l && indecomposables_isomorphic(x, y, cfg)? {
                used[j] = true;
                continue 'outer;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Representatives of isomorphism classes of indecomposables seen so far.
#[derive(Clone, Debug, Default)]
pub struct SummandRegistry<F: Field> {
    pub reps: Vec<FDModule<F>>,
}

impl<F: Field> SummandRegistry<F> {
    pub fn new() -> Self {
        SummandRegistry { reps: Vec::new() }
    }

    pub fn find(&self, x: &FDModule<F>, cfg: &Config) -> Result<Option<usize>> {
        for (k, r) in self.reps.iter().enumerate() {
            if indecomposables_isomorphic(r, x, cfg)? {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }

    /// Index of the class of the indecomposable `x`, registering it if new.
    pub fn classify(&mut self, x: &FDModule<F>, cfg: &Config) -> Result<usize> {
        if let Some(k) = self.find(x, cfg)? {
            return Ok(k);
        }
        self.reps.push(x.clone());
        Ok(self.reps.len() - 1)
    }
}
