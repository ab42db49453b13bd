//! Minimal add(V)-approximations, `Fac` membership and the syzygy test.
//!
//! A minimal right approximation `V' -> X` is read off from the top of
//! `Hom(V, X)` as a module over `End(V)`: for each indecomposable summand `V_j`
//! of `V`, the maps `V_j -> X` modulo those factoring through a radical map
//! `V_j -> V_k` give one copy of `V_j` per basis vector.

use crate::config::Config;
use crate::decompose::{basic_summands, indecomposable_summands, top_action};
use crate::error::Result;
use crate::field::Field;
use crate::hom::hom_basis;
use crate::linalg::{IncrementalBasis, Matrix};
use crate::module::{column_map, FDModule, ModuleMap};
use crate::resolve::is_projective;

/// A map `V' -> X` (or `X -> V'` for left approximations) with
/// `V' = sum V_j^{m_j}`.
#[derive(Clone, Debug)]
pub struct Approximation<F: Field> {
    pub map: ModuleMap<F>,
    /// The pairwise non-isomorphic indecomposables `V_j`.
    pub parts: Vec<FDModule<F>>,
    pub multiplicities: Vec<usize>,
    /// The middle module `V'`.
    pub middle: FDModule<F>,
}

/// Scalar part of an endomorphism of an indecomposable with local `End`:
/// `tr(f on top) / dim top`.
fn scalar_part<F: Field>(f: &ModuleMap<F>, rad: &[crate::linalg::Subspace<F>], top_dim: usize) -> F {
    let tr = top_action(f, rad).iter().fold(F::zero(), |acc, t| acc.add(&t.trace()));
    tr.mul(&F::from_i64(top_dim as i64).inv())
}

/// Basis of the radical of `End(V)` for indecomposable `V`.
fn radical_endomorphisms<F: Field>(v: &FDModule<F>) -> Result<Vec<ModuleMap<F>>> {
    let end = hom_basis(v, v)?;
    let rad = v.radical_spaces();
    let t: usize = v.top_dims().iter().sum();
    let id = ModuleMap::identity(v);
    let mut out = Vec::new();
    let mut acc = IncrementalBasis::empty(id.flatten().len());
    for f in &end {
        let r = f.add(&id.scale(&scalar_part(f, &rad, t).neg()));
        if acc.insert(&r.flatten()) {
            out.push(r);
        }
    }
    Ok(out)
}

/// Minimal right add(V)-approximation of `x`, for `parts` the pairwise
/// non-isomorphic indecomposable summands of `V`.
pub fn right_approximation_by<F: Field>(parts: &[FDModule<F>], x: &FDModule<F>) -> Result<Approximation<F>> {
    let alg = x.algebra();
    let homs: Vec<Vec<ModuleMap<F>>> = parts.iter().map(|v| hom_basis(v, x)).collect::<Result<_>>()?;
    let mut chosen: Vec<ModuleMap<F>> = Vec::new();
    let mut mult = Vec::with_capacity(parts.len());
    let mut summands = Vec::new();
    for (j, vj) in parts.iter().enumerate() {
        if homs[j].is_empty() {
            mult.push(0);
            continue;
        }
        let width = homs[j][0].flatten().len();
        let mut radical = IncrementalBasis::empty(width);
        for (k, vk) in parts.iter().enumerate() {
            if homs[k].is_empty() {
                continue;
            }
            let rad_jk = if j == k { radical_endomorphisms(vj)? } else { hom_basis(vj, vk)? };
            for g in &rad_jk {
                for h in &homs[k] {
                    radical.insert(&g.then(h).flatten());
                    if radical.dim() == homs[j].len() {
                        break;
                    }
                }
            }
        }
        let mut m = 0;
        for h in &homs[j] {
            if radical.insert(&h.flatten()) {
                chosen.push(h.clone());
                summands.push(vj.clone());
                m += 1;
            }
        }
        mult.push(m);
    }
    let src = FDModule::direct_sum(alg, &summands);
    let map = column_map(&src, x, &chosen);
    Ok(Approximation { map, parts: parts.to_vec(), multiplicities: mult, middle: src })
}

/// Minimal right add(V)-approximation of `x`.
pub fn right_approximation<F: Field>(v: &FDModule<F>, x: &FDModule<F>, cfg: &Config) -> Result<Approximation<F>> {
    right_approximation_by(&basic_summands(v, cfg)?, x)
}

/// Minimal left add(V)-approximation `x -> V'`, through the opposite algebra.
pub fn left_approximation_by<F: Field>(parts: &[FDModule<F>], x: &FDModule<F>) -> Result<Approximation<F>> {
    let dual_parts: Vec<FDModule<F>> = parts.iter().map(|p| p.dual()).collect();
    let r = right_approximation_by(&dual_parts, &x.dual())?;
    let d = r.map.dual();
    // D(D x) has the representation of x, so reuse x itself as the source
    let map = ModuleMap::from_blocks(x.clone(), d.tgt.clone(), d.blocks);
    Ok(Approximation { map, parts: parts.to_vec(), multiplicities: r.multiplicities, middle: d.tgt })
}

pub fn left_approximation<F: Field>(v: &FDModule<F>, x: &FDModule<F>, cfg: &Config) -> Result<Approximation<F>> {
    left_approximation_by(&basic_summands(v, cfg)?, x)
}

/// Whether `x` is a quotient of a direct sum of copies of `y`.
pub fn in_fac<F: Field>(y: &FDModule<F>, x: &FDModule<F>) -> Result<bool> {
    let homs = hom_basis(y, x)?;
    let n = x.algebra().vertex_count();
    Ok((0..n).all(|v| {
        let d = x.dims()[v];
        if d == 0 {
            return true;
        }
        let mut stacked = Matrix::zeros(0, d);
        for h in &homs {
            stacked = stacked.vstack(&h.blocks[v]);
        }
        stacked.rank() == d
    }))
}

/// Removes projective indecomposable summands.
pub fn strip_projectives<F: Field>(x: &FDModule<F>, cfg: &Config) -> Result<FDModule<F>> {
    if x.is_zero() {
        return Ok(x.clone());
    }
    let parts: Vec<FDModule<F>> = indecomposable_summands(x, cfg)?.into_iter().filter(|p| !is_projective(p)).collect();
    Ok(FDModule::direct_sum(x.algebra(), &parts))
}

/// Greedy test for `x` being an `n`-th syzygy up to projective summands: the
/// minimal left add(A)-approximation must be injective, and its cokernel must
/// pass the test for `n - 1`.
pub fn is_nth_syzygy<F: Field>(x: &FDModule<F>, n: usize, cfg: &Config) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    let y = strip_projectives(x, cfg)?;
    if y.is_zero() {
        return Ok(true);
    }
    let alg = y.algebra();
    let projs: Vec<FDModule<F>> = (0..alg.vertex_count()).map(|i| FDModule::projective(alg, i)).collect();
    let approx = left_approximation_by(&projs, &y)?;
    if !approx.map.is_injective() {
        return Ok(false);
    }
    let (c, _) = approx.map.cokernel();
    is_nth_syzygy(&c, n - 1, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{DynkinSpec, Preprojective};
    use crate::field::F101;
    use crate::quiver::Relation;
    use crate::quotient::{build_quotient, quiver_from_arrows};
    use crate::resolve::projective_cover;
    use std::sync::Arc;

    fn pi_a2() -> Arc<crate::FDAlgebra<F101>> {
        let q = quiver_from_arrows(2, &[("a", 1, 2), ("b", 2, 1)]).unwrap();
        let r = ["ab", "ba"].iter().map(|s| Relation::parse(&q, s).unwrap()).collect::<Vec<_>>();
        Arc::new(build_quotient(&q, &r, None).unwrap())
    }

    #[test]
    fn approximation_by_projectives_is_cover() {
        let a = pi_a2();
        let projs = vec![FDModule::projective(&a, 0), FDModule::projective(&a, 1)];
        for x in [FDModule::simple(&a, 0), FDModule::regular(&a), FDModule::dual_regular(&a)] {
            let ap = right_approximation_by(&projs, &x).unwrap();
            assert!(ap.map.is_homomorphism());
            assert!(ap.map.is_surjective());
            assert_eq!(ap.map.src.dims(), projective_cover(&x).src.dims());
        }
    }

    #[test]
    fn approximation_of_summand_is_identity_sized() {
        let a = pi_a2();
        let p = FDModule::projective(&a, 0);
        let ap = right_approximation_by(&[p.clone()], &p).unwrap();
        assert_eq!(ap.multiplicities, vec![1]);
        assert!(ap.map.is_isomorphism());
    }

    #[test]
    fn fac_membership() {
        let a = pi_a2();
        let p1 = FDModule::projective(&a, 0);
        assert!(in_fac(&p1, &FDModule::simple(&a, 0)).unwrap());
        assert!(!in_fac(&p1, &FDModule::simple(&a, 1)).unwrap());
    }

    #[test]
    fn selfinjective_modules_are_syzygies() {
        let a = pi_a2();
        let cfg = Config::default();
        assert!(is_nth_syzygy(&FDModule::simple(&a, 0), 3, &cfg).unwrap());
        assert!(is_nth_syzygy(&FDModule::regular(&a), 2, &cfg).unwrap());
    }

    #[test]
    fn a6_contraction_injective_approximation() {
        let d: DynkinSpec = "A6".parse().unwrap();
        let b = Preprojective::<F101>::new(&d).unwrap().contract(&[1, 2, 3, 6]).unwrap();
        // local vertices 0,1,2,3 are 1,2,3,6
        let frozen: Vec<FDModule<F101>> = [0, 2, 3].iter().map(|&i| FDModule::injective(&b, i)).collect();
        let i2 = FDModule::injective(&b, 1);
        let ap = right_approximation_by(&frozen, &i2).unwrap();
        assert!(ap.map.is_homomorphism());
        assert!(ap.map.is_surjective());
        // I_1 + I_3 -> I_2, socles 1 and 3 in the middle term
        assert_eq!(ap.multiplicities, vec![1, 1, 0]);
        assert_eq!(ap.map.src.dim(), 11);
        assert_eq!(ap.map.kernel().0.dim(), 5);
    }
}
