//! Hom spaces through a projective presentation of the source.
//!
//! For `P_1 -> P_0 -> M -> 0` with `P_0 = sum e_{i_k} A`, a map `M -> N` is the
//! same as a choice of images `n_k in N e_{i_k}` of the top generators that
//! kill every relation. This keeps the linear systems small.

use crate::error::Result;
use crate::field::Field;
use crate::linalg::{IncrementalBasis, Matrix};
use crate::module::{FDModule, ModuleMap};

pub(crate) struct TopPresentation<F: Field> {
    /// Top generators `(vertex, vector)` in the order of the cover summands.
    pub gens: Vec<(usize, Vec<F>)>,
    /// Per vertex, the basis `(generator, algebra basis element)` of `P_0 e_v`.
    pub p0_basis: Vec<Vec<(usize, usize)>>,
    /// Per vertex, the cover map `P_0 e_v -> M e_v` as a matrix.
    pub cover: Vec<Matrix<F>>,
    /// Per vertex, a right inverse of `cover`.
    pub section: Vec<Matrix<F>>,
    /// Per vertex, basis rows of the kernel of `cover`.
    pub kernel: Vec<Matrix<F>>,
    /// Top generators of the kernel, `(vertex, coefficients over p0_basis)`.
    pub relations: Vec<(usize, Vec<F>)>,
}

impl<F: Field> TopPresentation<F> {
    pub fn compute(m: &FDModule<F>) -> Self {
        let alg = m.algebra();
        let n = alg.vertex_count();
        let rad = m.radical_spaces();
        let mut gens = Vec::new();
        for v in 0..n {
            let mut acc = IncrementalBasis::new(rad[v].clone());
            for r in 0..m.dims()[v] {
                let mut e = vec![F::zero(); m.dims()[v]];
                e[r] = F::one();
                if acc.insert(&e) {
                    gens.push((v, e));
                }
            }
        }
        let p0_basis: Vec<Vec<(usize, usize)>> = (0..n)
            .map(|v| {
                gens.iter().enumerate().flat_map(|(k, (i, _))| alg.block(*i, v).iter().map(move |&x| (k, x))).collect()
            })
            .collect();
        let cover: Vec<Matrix<F>> = (0..n)
            .map(|v| {
                let rows = p0_basis[v].iter().map(|&(k, x)| m.action(x).vec_mul(&gens[k].1)).collect();
                Matrix::from_rows(rows, m.dims()[v])
            })
            .collect();
        let section = (0..n)
            .map(|v| {
                let c = &cover[v];
                let picked = crate::linalg::independent_rows(&crate::linalg::Subspace::zero(c.cols()), c);
                debug_assert_eq!(picked.len(), c.cols(), "generators must span the module");
                let inv = c.select_rows(&picked).inverse().expect("spanning rows are invertible");
                let mut s = Matrix::zeros(c.cols(), c.rows());
                for (j, &p) in picked.iter().enumerate() {
                    for r in 0..c.cols() {
                        s.set(r, p, inv.get(r, j).clone());
                    }
                }
                s
            })
            .collect();
        let kernel: Vec<Matrix<F>> = cover.iter().map(|c| c.left_kernel()).collect();
        // radical of the kernel: images of kernel vectors under arrows
        let mut rad_k: Vec<IncrementalBasis<F>> = (0..n).map(|v| IncrementalBasis::empty(p0_basis[v].len())).collect();
        let index: Vec<std::collections::HashMap<(usize, usize), usize>> =
            p0_basis.iter().map(|b| b.iter().enumerate().map(|(i, &p)| (p, i)).collect()).collect();
        for (a, arr) in alg.arrows().iter().enumerate() {
            let (s, t) = (arr.source, arr.target);
            for r in 0..kernel[s].rows() {
                let mut img = vec![F::zero(); p0_basis[t].len()];
                for (col, c) in kernel[s].row(r).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (k, x) = p0_basis[s][col];
                    for (y, cy) in alg.right_arrow(x, a) {
                        img[index[t][&(k, *y)]].add_mul_assign(c, cy);
                    }
                }
                rad_k[t].insert(&img);
            }
        }
        let mut relations = Vec::new();
        for v in 0..n {
            for r in 0..kernel[v].rows() {
                if rad_k[v].insert(kernel[v].row(r)) {
                    relations.push((v, kernel[v].row(r).to_vec()));
                }
            }
        }
        TopPresentation { gens, p0_basis, cover, section, kernel, relations }
    }
}

/// Unknown layout: generator `k` takes a vector in `N e_{i_k}` at `offsets[k]`.
fn unknown_offsets<F: Field>(p: &TopPresentation<F>, n_mod: &FDModule<F>) -> (Vec<usize>, usize) {
    let mut offs = Vec::with_capacity(p.gens.len());
    let mut total = 0;
    for (v, _) in &p.gens {
        offs.push(total);
        total += n_mod.dims()[*v];
    }
    (offs, total)
}

/// Linear constraints on the generator images: solutions are the rows `u` with `u E = 0`.
fn constraint_matrix<F: Field>(p: &TopPresentation<F>, n_mod: &FDModule<F>) -> Matrix<F> {
    let (offs, total) = unknown_offsets(p, n_mod);
    let width: usize = p.relations.iter().map(|(v, _)| n_mod.dims()[*v]).sum();
    let mut e: Matrix<F> = Matrix::zeros(total, width);
    let mut col0 = 0;
    for (v, coeffs) in &p.relations {
        for (c, &(k, x)) in coeffs.iter().zip(&p.p0_basis[*v]) {
            if c.is_zero() {
                continue;
            }
            let act = n_mod.action(x);
            for r in 0..act.rows() {
                for (cc, val) in act.row(r).iter().enumerate() {
                    if !val.is_zero() {
                        e.get_mut(offs[k] + r, col0 + cc).add_mul_assign(c, val);
                    }
                }
            }
        }
        col0 += n_mod.dims()[*v];
    }
    e
}

/// The map determined by generator images `sol`.
fn map_from_images<F: Field>(m: &FDModule<F>, n_mod: &FDModule<F>, p: &TopPresentation<F>, sol: &[F]) -> ModuleMap<F> {
    let (offs, _) = unknown_offsets(p, n_mod);
    let nv = m.algebra().vertex_count();
    let blocks = (0..nv)
        .map(|v| {
            let rows = p.p0_basis[v]
                .iter()
                .map(|&(k, x)| {
                    let i = p.gens[k].0;
                    n_mod.action(x).vec_mul(&sol[offs[k]..offs[k] + n_mod.dims()[i]])
                })
                .collect();
            let phi = Matrix::from_rows(rows, n_mod.dims()[v]);
            p.section[v].mul(&phi)
        })
        .collect();
    ModuleMap::from_blocks(m.clone(), n_mod.clone(), blocks)
}

/// A basis of `Hom_A(M, N)`.
pub fn hom_basis<F: Field>(m: &FDModule<F>, n: &FDModule<F>) -> Result<Vec<ModuleMap<F>>> {
    m.check_same_algebra(n)?;
    let p = m.presentation();
    let e = constraint_matrix(p, n);
    let sols = e.left_kernel();
    Ok((0..sols.rows()).map(|r| map_from_images(m, n, p, sols.row(r))).collect())
}

pub fn hom_dim<F: Field>(m: &FDModule<F>, n: &FDModule<F>) -> Result<usize> {
    m.check_same_algebra(n)?;
    let p = m.presentation();
    let (_, total) = unknown_offsets(p, n);
    Ok(total - constraint_matrix(p, n).rank())
}

/// The unique map with the given images of the top generators of `M`, if the
/// images satisfy the relations.
pub fn map_from_generator_images<F: Field>(
    m: &FDModule<F>,
    n: &FDModule<F>,
    images: &[Vec<F>],
) -> Option<ModuleMap<F>> {
    let p = m.presentation();
    let sol: Vec<F> = images.iter().flatten().cloned().collect();
    let e = constraint_matrix(p, n);
    if e.vec_mul(&sol).iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(map_from_images(m, n, p, &sol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::F101;
    use crate::quiver::Relation;
    use crate::quotient::{build_quotient, quiver_from_arrows};
    use std::sync::Arc;

    fn pi_a3() -> Arc<crate::FDAlgebra<F101>> {
        let q = quiver_from_arrows(3, &[("a", 1, 2), ("b", 2, 1), ("c", 2, 3), ("d", 3, 2)]).unwrap();
        let r = ["ab", "ba - cd", "dc"].iter().map(|s| Relation::parse(&q, s).unwrap()).collect::<Vec<_>>();
        Arc::new(build_quotient(&q, &r, None).unwrap())
    }

    #[test]
    fn yoneda_for_projectives() {
        let a = pi_a3();
        let m = FDModule::regular(&a);
        for i in 0..3 {
            let p = FDModule::projective(&a, i);
            assert_eq!(hom_dim(&p, &m).unwrap(), m.dims()[i]);
            for f in hom_basis(&p, &m).unwrap() {
                assert!(f.is_homomorphism());
            }
        }
    }

    #[test]
    fn simples_have_no_maps_between_them() {
        let a = pi_a3();
        let s1 = FDModule::simple(&a, 0);
        let s2 = FDModule::simple(&a, 1);
        assert_eq!(hom_dim(&s1, &s2).unwrap(), 0);
        assert_eq!(hom_dim(&s1, &s1).unwrap(), 1);
    }

    #[test]
    fn hom_matches_brute_force_intertwiners() {
        let a = pi_a3();
        let ms = [FDModule::projective(&a, 1), FDModule::injective(&a, 0), FDModule::dual_regular(&a)];
        for x in &ms {
            for y in &ms {
                assert_eq!(hom_dim(x, y).unwrap(), brute_hom_dim(x, y));
            }
        }
    }

    /// Solves `M_a F_t = F_s N_a` directly over all block entries.
    fn brute_hom_dim(m: &FDModule<F101>, n: &FDModule<F101>) -> usize {
        let alg = m.algebra();
        let nv = alg.vertex_count();
        let mut off = vec![0; nv + 1];
        for v in 0..nv {
            off[v + 1] = off[v] + m.dims()[v] * n.dims()[v];
        }
        let unknowns = off[nv];
        let mut eqs = Matrix::zeros(0, unknowns);
        for (a, arr) in alg.arrows().iter().enumerate() {
            let (s, t) = (arr.source, arr.target);
            let (ma, na) = (m.arrow_matrix(a), n.arrow_matrix(a));
            for r in 0..m.dims()[s] {
                for c in 0..n.dims()[t] {
                    let mut row = vec![F101::zero(); unknowns];
                    for k in 0..m.dims()[t] {
                        row[off[t] + k * n.dims()[t] + c] = row[off[t] + k * n.dims()[t] + c].add(ma.get(r, k));
                    }
                    for k in 0..n.dims()[s] {
                        row[off[s] + r * n.dims()[s] + k] = row[off[s] + r * n.dims()[s] + k].sub(na.get(k, c));
                    }
                    eqs.push_row(&row);
                }
            }
        }
        unknowns - eqs.rank()
    }
}
