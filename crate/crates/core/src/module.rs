//! Right modules as quiver representations and the maps between them.
//!
//! A module stores one space per vertex and one matrix per generating arrow.
//! Vectors are rows and act on the right, so an arrow `a: s -> t` is a
//! `dim_s x dim_t` matrix and a path `ab` acts as `M_a * M_b`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hom::TopPresentation;
use crate::linalg::{IncrementalBasis, Matrix, Subspace};

struct ModuleData<F: Field> {
    alg: Arc<FDAlgebra<F>>,
    dims: Vec<usize>,
    mats: Vec<Matrix<F>>,
    actions: OnceLock<Vec<Matrix<F>>>,
    presentation: OnceLock<Arc<TopPresentation<F>>>,
}

/// A finite-dimensional right module. Cloning is cheap.
#[derive(Clone)]
pub struct FDModule<F: Field> {
    data: Arc<ModuleData<F>>,
}

impl<F: Field> fmt::Debug for FDModule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FDModule(dims={:?} over {})", self.dims(), self.algebra().name())
    }
}

impl<F: Field> FDModule<F> {
    /// Validates shapes and that the arrow matrices satisfy the algebra's relations.
    pub fn new(alg: Arc<FDAlgebra<F>>, dims: Vec<usize>, mats: Vec<Matrix<F>>) -> Result<Self> {
        if dims.len() != alg.vertex_count() || mats.len() != alg.arrows().len() {
            return Err(Error::Invalid("module data does not match the algebra".into()));
        }
        for (a, m) in alg.arrows().iter().zip(&mats) {
            if m.rows() != dims[a.source] || m.cols() != dims[a.target] {
                return Err(Error::Invalid(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.label,
                    dims[a.source],
                    dims[a.target],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let m = Self::from_parts(alg, dims, mats);
        m.verify()?;
        Ok(m)
    }

    pub(crate) fn from_parts(alg: Arc<FDAlgebra<F>>, dims: Vec<usize>, mats: Vec<Matrix<F>>) -> Self {
        debug_assert_eq!(mats.len(), alg.arrows().len());
        FDModule {
            data: Arc::new(ModuleData { alg, dims, mats, actions: OnceLock::new(), presentation: OnceLock::new() }),
        }
    }

    pub fn zero(alg: &Arc<FDAlgebra<F>>) -> Self {
        let n = alg.vertex_count();
        let mats = alg.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Self::from_parts(alg.clone(), vec![0; n], mats)
    }

    pub fn algebra(&self) -> &Arc<FDAlgebra<F>> {
        &self.data.alg
    }

    /// Dimension vector.
    pub fn dims(&self) -> &[usize] {
        &self.data.dims
    }

    pub fn dim(&self) -> usize {
        self.data.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn arrow_matrix(&self, a: usize) -> &Matrix<F> {
        &self.data.mats[a]
    }

    pub fn arrow_matrices(&self) -> &[Matrix<F>] {
        &self.data.mats
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(self.algebra(), other.algebra())
    }

    pub(crate) fn check_same_algebra(&self, other: &Self) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Action of every basis element of the algebra, indexed like the basis.
    pub fn actions(&self) -> &[Matrix<F>] {
        self.data.actions.get_or_init(|| {
            let alg = self.algebra();
            let mut memo: HashMap<Vec<usize>, Matrix<F>> = HashMap::new();
            alg.basis()
                .iter()
                .map(|b| {
                    if b.word.is_empty() {
                        return Matrix::identity(self.dims()[b.source]);
                    }
                    let mut cur: Option<Matrix<F>> = None;
                    for len in (1..=b.word.len()).rev() {
                        if let Some(m) = memo.get(&b.word[..len]) {
                            let mut acc = m.clone();
                            for &a in &b.word[len..] {
                                acc = acc.mul(&self.data.mats[a]);
                            }
                            cur = Some(acc);
                            break;
                        }
                    }
                    let m = cur.unwrap_or_else(|| {
                        let mut acc = self.data.mats[b.word[0]].clone();
                        for &a in &b.word[1..] {
                            acc = acc.mul(&self.data.mats[a]);
                        }
                        acc
                    });
                    memo.insert(b.word.clone(), m.clone());
                    m
                })
                .collect()
        })
    }

    pub fn action(&self, x: usize) -> &Matrix<F> {
        &self.actions()[x]
    }

    pub(crate) fn presentation(&self) -> &Arc<TopPresentation<F>> {
        self.data.presentation.get_or_init(|| Arc::new(TopPresentation::compute(self)))
    }

    /// Checks `act(x) * M_a = act(x a)` for every basis element `x` and arrow `a`,
    /// which makes the word action an algebra homomorphism.
    pub fn verify(&self) -> Result<()> {
        let alg = self.algebra().clone();
        let acts = self.actions();
        for x in 0..alg.dim() {
            let bx = alg.elem(x);
            for (a, arrow) in alg.arrows().iter().enumerate() {
                if arrow.source != bx.target {
                    continue;
                }
                let lhs = acts[x].mul(&self.data.mats[a]);
                let mut rhs = Matrix::zeros(lhs.rows(), lhs.cols());
                for (y, c) in alg.right_arrow(x, a) {
                    rhs.add_scaled(c, &acts[*y]);
                }
                if lhs != rhs {
                    return Err(Error::Invalid(format!(
                        "module violates a relation at {} * {}",
                        alg.word_label(x),
                        arrow.label
                    )));
                }
            }
        }
        Ok(())
    }

    /// The projective `e_i A`, with basis the elements of `A` starting at `i`.
    pub fn projective(alg: &Arc<FDAlgebra<F>>, i: usize) -> Self {
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n).map(|v| alg.block(i, v).len()).collect();
        let mats = alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let mut m = Matrix::zeros(dims[arr.source], dims[arr.target]);
                for (r, &x) in alg.block(i, arr.source).iter().enumerate() {
                    for (y, c) in alg.right_arrow(x, a) {
                        m.set(r, alg.pos_in_block(*y), c.clone());
                    }
                }
                m
            })
            .collect();
        Self::from_parts(alg.clone(), dims, mats)
    }

    /// The injective `D(A e_i)`, the dual of a projective of the opposite algebra.
    pub fn injective(alg: &Arc<FDAlgebra<F>>, i: usize) -> Self {
        Self::projective(&alg.opposite(), i).dual()
    }

    pub fn simple(alg: &Arc<FDAlgebra<F>>, i: usize) -> Self {
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n).map(|v| usize::from(v == i)).collect();
        let mats = alg.arrows().iter().map(|a| Matrix::zeros(dims[a.source], dims[a.target])).collect();
        Self::from_parts(alg.clone(), dims, mats)
    }

    /// `A_A` as the sum of the indecomposable projectives.
    pub fn regular(alg: &Arc<FDAlgebra<F>>) -> Self {
        let ps: Vec<Self> = (0..alg.vertex_count()).map(|i| Self::projective(alg, i)).collect();
        Self::direct_sum(alg, &ps)
    }

    /// `DA` as the sum of the indecomposable injectives.
    pub fn dual_regular(alg: &Arc<FDAlgebra<F>>) -> Self {
        let is: Vec<Self> = (0..alg.vertex_count()).map(|i| Self::injective(alg, i)).collect();
        Self::direct_sum(alg, &is)
    }

    /// `Hom_k(M, k)` as a module over the opposite algebra.
    pub fn dual(&self) -> Self {
        let op = self.algebra().opposite();
        let mats = self.data.mats.iter().map(|m| m.transpose()).collect();
        Self::from_parts(op, self.dims().to_vec(), mats)
    }

    /// Direct sum; vertex spaces are concatenated in the given order.
    pub fn direct_sum(alg: &Arc<FDAlgebra<F>>, parts: &[Self]) -> Self {
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims()[v]).sum()).collect();
        let mats = alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let mut m = Matrix::zeros(dims[arr.source], dims[arr.target]);
                let (mut r, mut c) = (0, 0);
                for p in parts {
                    m.set_block(r, c, p.arrow_matrix(a));
                    r += p.dims()[arr.source];
                    c += p.dims()[arr.target];
                }
                m
            })
            .collect();
        Self::from_parts(alg.clone(), dims, mats)
    }

    /// `M^k`.
    pub fn power(&self, k: usize) -> Self {
        Self::direct_sum(self.algebra(), &vec![self.clone(); k])
    }

    /// Submodule spanned per vertex by the given subspaces, which must be stable
    /// under the action. The basis of each vertex space is the rref basis.
    pub fn submodule(&self, spaces: &[Subspace<F>]) -> (Self, ModuleMap<F>) {
        let alg = self.algebra();
        let dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
        let mats = alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let (src, tgt) = (&spaces[arr.source], &spaces[arr.target]);
                let mut m = Matrix::zeros(dims[arr.source], dims[arr.target]);
                for r in 0..src.dim() {
                    let img = self.arrow_matrix(a).vec_mul(src.basis().row(r));
                    let c = tgt.coordinates(&img).expect("subspace is not a submodule");
                    m.row_mut(r).clone_from_slice(&c);
                }
                m
            })
            .collect();
        let sub = Self::from_parts(alg.clone(), dims, mats);
        let blocks = spaces.iter().map(|s| s.basis().clone()).collect();
        let incl = ModuleMap::from_blocks(sub.clone(), self.clone(), blocks);
        (sub, incl)
    }

    /// Quotient by a submodule given by per-vertex subspaces. The quotient basis
    /// is the set of standard vectors outside the pivots.
    pub fn quotient(&self, spaces: &[Subspace<F>]) -> (Self, ModuleMap<F>) {
        let alg = self.algebra();
        let comps: Vec<Vec<usize>> = spaces.iter().map(|s| s.complement_indices()).collect();
        let dims: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        let project = |v: usize, vec: &mut Vec<F>| -> Vec<F> {
            spaces[v].reduce(vec);
            comps[v].iter().map(|&c| vec[c].clone()).collect()
        };
        let mats = alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let mut m = Matrix::zeros(dims[arr.source], dims[arr.target]);
                for (r, &c) in comps[arr.source].iter().enumerate() {
                    let mut img = self.arrow_matrix(a).row(c).to_vec();
                    let p = project(arr.target, &mut img);
                    m.row_mut(r).clone_from_slice(&p);
                }
                m
            })
            .collect();
        let q = Self::from_parts(alg.clone(), dims.clone(), mats);
        let blocks = (0..alg.vertex_count())
            .map(|v| {
                let mut b = Matrix::zeros(self.dims()[v], dims[v]);
                for r in 0..self.dims()[v] {
                    let mut e = vec![F::zero(); self.dims()[v]];
                    e[r] = F::one();
                    let p = project(v, &mut e);
                    b.row_mut(r).clone_from_slice(&p);
                }
                b
            })
            .collect();
        let proj = ModuleMap::from_blocks(self.clone(), q.clone(), blocks);
        (q, proj)
    }

    /// Per-vertex spaces of `rad M = M * rad A`, the sum of the arrow images.
    pub fn radical_spaces(&self) -> Vec<Subspace<F>> {
        let alg = self.algebra();
        (0..alg.vertex_count())
            .map(|v| {
                let mut acc = IncrementalBasis::empty(self.dims()[v]);
                for (a, arr) in alg.arrows().iter().enumerate() {
                    if arr.target != v {
                        continue;
                    }
                    let m = self.arrow_matrix(a);
                    for r in 0..m.rows() {
                        if acc.dim() == self.dims()[v] {
                            break;
                        }
                        acc.insert(m.row(r));
                    }
                }
                acc.to_subspace()
            })
            .collect()
    }

    /// Per-vertex spaces of the socle: vectors killed by every arrow.
    pub fn socle_spaces(&self) -> Vec<Subspace<F>> {
        let alg = self.algebra();
        (0..alg.vertex_count())
            .map(|v| {
                let outgoing: Vec<&Matrix<F>> = alg
                    .arrows()
                    .iter()
                    .enumerate()
                    .filter(|(_, arr)| arr.source == v)
                    .map(|(a, _)| self.arrow_matrix(a))
                    .collect();
                let mut stacked = Matrix::zeros(self.dims()[v], 0);
                for m in outgoing {
                    stacked = stacked.hstack(m);
                }
                Subspace::from_rows(stacked.left_kernel())
            })
            .collect()
    }

    pub fn radical(&self) -> Self {
        self.submodule(&self.radical_spaces()).0
    }

    pub fn top(&self) -> Self {
        self.quotient(&self.radical_spaces()).0
    }

    pub fn socle(&self) -> Self {
        self.submodule(&self.socle_spaces()).0
    }

    /// Multiplicity of each simple in the top.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_spaces().iter().zip(self.dims()).map(|(r, d)| d - r.dim()).collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_spaces().iter().map(|s| s.dim()).collect()
    }

    /// Dimension vectors of the radical layers, top first.
    pub fn loewy_layers(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = self.clone();
        while !cur.is_zero() {
            out.push(cur.top_dims());
            cur = cur.radical();
        }
        out
    }

    /// Submodule generated by the given vectors `(vertex, vector)`.
    pub fn generated_by(&self, gens: &[(usize, Vec<F>)]) -> (Self, ModuleMap<F>) {
        let alg = self.algebra();
        let n = alg.vertex_count();
        let mut acc: Vec<IncrementalBasis<F>> = (0..n).map(|v| IncrementalBasis::empty(self.dims()[v])).collect();
        for (v, g) in gens {
            for t in 0..n {
                for &x in alg.block(*v, t) {
                    acc[t].insert(&self.action(x).vec_mul(g));
                }
            }
        }
        let spaces: Vec<Subspace<F>> = acc.iter().map(|b| b.to_subspace()).collect();
        self.submodule(&spaces)
    }

    /// Structural equality of the representation (not isomorphism).
    pub fn same_representation(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.dims() == other.dims() && self.data.mats == other.data.mats
    }
}

/// A module homomorphism, stored per vertex: `m * block_v` is the image of `m in M_v`.
#[derive(Clone)]
pub struct ModuleMap<F: Field> {
    pub src: FDModule<F>,
    pub tgt: FDModule<F>,
    pub blocks: Vec<Matrix<F>>,
}

impl<F: Field> fmt::Debug for ModuleMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleMap({:?} -> {:?}, rank {})", self.src.dims(), self.tgt.dims(), self.rank())
    }
}

impl<F: Field> ModuleMap<F> {
    /// Checks the shapes and the intertwining property.
    pub fn new(src: FDModule<F>, tgt: FDModule<F>, blocks: Vec<Matrix<F>>) -> Result<Self> {
        src.check_same_algebra(&tgt)?;
        let m = Self::from_blocks(src, tgt, blocks);
        if !m.is_homomorphism() {
            return Err(Error::Invalid("linear map does not commute with the action".into()));
        }
        Ok(m)
    }

    pub(crate) fn from_blocks(src: FDModule<F>, tgt: FDModule<F>, blocks: Vec<Matrix<F>>) -> Self {
        ModuleMap { src, tgt, blocks }
    }

    pub fn is_homomorphism(&self) -> bool {
        let alg = self.src.algebra();
        let n = alg.vertex_count();
        for v in 0..n {
            let b = &self.blocks[v];
            if b.rows() != self.src.dims()[v] || b.cols() != self.tgt.dims()[v] {
                return false;
            }
        }
        alg.arrows().iter().enumerate().all(|(a, arr)| {
            self.src.arrow_matrix(a).mul(&self.blocks[arr.target])
                == self.blocks[arr.source].mul(self.tgt.arrow_matrix(a))
        })
    }

    pub fn zero(src: &FDModule<F>, tgt: &FDModule<F>) -> Self {
        let blocks = src.dims().iter().zip(tgt.dims()).map(|(&r, &c)| Matrix::zeros(r, c)).collect();
        Self::from_blocks(src.clone(), tgt.clone(), blocks)
    }

    pub fn identity(m: &FDModule<F>) -> Self {
        let blocks = m.dims().iter().map(|&d| Matrix::identity(d)).collect();
        Self::from_blocks(m.clone(), m.clone(), blocks)
    }

    /// `self` followed by `next`, i.e. `next . self`.
    pub fn then(&self, next: &Self) -> Self {
        let blocks = self.blocks.iter().zip(&next.blocks).map(|(a, b)| a.mul(b)).collect();
        Self::from_blocks(self.src.clone(), next.tgt.clone(), blocks)
    }

    pub fn add(&self, other: &Self) -> Self {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        Self::from_blocks(self.src.clone(), self.tgt.clone(), blocks)
    }

    pub fn scale(&self, c: &F) -> Self {
        let blocks = self.blocks.iter().map(|a| a.scale(c)).collect();
        Self::from_blocks(self.src.clone(), self.tgt.clone(), blocks)
    }

    /// Linear combination of maps sharing source and target.
    pub fn combination(src: &FDModule<F>, tgt: &FDModule<F>, maps: &[Self], coeffs: &[F]) -> Self {
        let mut out = Self::zero(src, tgt);
        for (m, c) in maps.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.blocks.iter_mut().zip(&m.blocks) {
                o.add_scaled(c, b);
            }
        }
        out
    }

    /// All entries, vertex by vertex; coordinates in `Hom_k(M, N)`.
    pub fn flatten(&self) -> Vec<F> {
        self.blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.src.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.tgt.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.src.dim() == self.tgt.dim() && self.is_injective()
    }

    pub fn kernel_spaces(&self) -> Vec<Subspace<F>> {
        self.blocks.iter().map(|b| Subspace::from_rows(b.left_kernel())).collect()
    }

    pub fn image_spaces(&self) -> Vec<Subspace<F>> {
        self.blocks.iter().map(|b| b.row_space()).collect()
    }

    pub fn kernel(&self) -> (FDModule<F>, ModuleMap<F>) {
        self.src.submodule(&self.kernel_spaces())
    }

    pub fn image(&self) -> (FDModule<F>, ModuleMap<F>) {
        self.tgt.submodule(&self.image_spaces())
    }

    pub fn cokernel(&self) -> (FDModule<F>, ModuleMap<F>) {
        self.tgt.quotient(&self.image_spaces())
    }

    /// `D(f): D(N) -> D(M)` over the opposite algebra.
    pub fn dual(&self) -> Self {
        let blocks = self.blocks.iter().map(|b| b.transpose()).collect();
        Self::from_blocks(self.tgt.dual(), self.src.dual(), blocks)
    }
}

/// Block-diagonal map between direct sums.
pub fn diagonal_map<F: Field>(src: &FDModule<F>, tgt: &FDModule<F>, parts: &[ModuleMap<F>]) -> ModuleMap<F> {
    let n = src.algebra().vertex_count();
    let blocks = (0..n)
        .map(|v| {
            let mut b = Matrix::zeros(src.dims()[v], tgt.dims()[v]);
            let (mut r, mut c) = (0, 0);
            for p in parts {
                b.set_block(r, c, &p.blocks[v]);
                r += p.src.dims()[v];
                c += p.tgt.dims()[v];
            }
            b
        })
        .collect();
    ModuleMap::from_blocks(src.clone(), tgt.clone(), blocks)
}

/// `(f_1, ..., f_k): X_1 + ... + X_k -> Y`, stacking the maps vertically.
pub fn column_map<F: Field>(src: &FDModule<F>, tgt: &FDModule<F>, parts: &[ModuleMap<F>]) -> ModuleMap<F> {
    let n = src.algebra().vertex_count();
    let blocks = (0..n)
        .map(|v| {
            let mut b = Matrix::zeros(0, tgt.dims()[v]);
            for p in parts {
                b = b.vstack(&p.blocks[v]);
            }
            b
        })
        .collect();
    ModuleMap::from_blocks(src.clone(), tgt.clone(), blocks)
}

/// Inclusion of the `k`-th summand into a direct sum built by [`FDModule::direct_sum`].
pub fn summand_inclusion<F: Field>(sum: &FDModule<F>, parts: &[FDModule<F>], k: usize) -> ModuleMap<F> {
    let n = sum.algebra().vertex_count();
    let blocks = (0..n)
        .map(|v| {
            let off: usize = parts[..k].iter().map(|p| p.dims()[v]).sum();
            let mut b = Matrix::zeros(parts[k].dims()[v], sum.dims()[v]);
            for r in 0..parts[k].dims()[v] {
                b.set(r, off + r, F::one());
            }
            b
        })
        .collect();
    ModuleMap::from_blocks(parts[k].clone(), sum.clone(), blocks)
}

/// Projection of a direct sum onto its `k`-th summand.
pub fn summand_projection<F: Field>(sum: &FDModule<F>, parts: &[FDModule<F>], k: usize) -> ModuleMap<F> {
    let inc = summand_inclusion(sum, parts, k);
    let blocks = inc.blocks.iter().map(|b| b.transpose()).collect();
    ModuleMap::from_blocks(sum.clone(), parts[k].clone(), blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::F101;
    use crate::quiver::Relation;
    use crate::quotient::{build_quotient, quiver_from_arrows};

    fn pi_a2() -> Arc<FDAlgebra<F101>> {
        let q = quiver_from_arrows(2, &[("a", 1, 2), ("b", 2, 1)]).unwrap();
        let r = vec![Relation::parse(&q, "ab").unwrap(), Relation::parse(&q, "ba").unwrap()];
        Arc::new(build_quotient(&q, &r, None).unwrap())
    }

    #[test]
    fn projective_of_pi_a2() {
        let a = pi_a2();
        let p1 = FDModule::projective(&a, 0);
        assert_eq!(p1.dims(), &[1, 1]);
        p1.verify().unwrap();
        assert_eq!(p1.top_dims(), vec![1, 0]);
        assert_eq!(p1.socle_dims(), vec![0, 1]);
    }

    #[test]
    fn injective_is_dual_of_opposite_projective() {
        let a = pi_a2();
        let i1 = FDModule::injective(&a, 0);
        i1.verify().unwrap();
        assert_eq!(i1.socle_dims(), vec![1, 0]);
        assert!(Arc::ptr_eq(i1.algebra(), &a));
    }

    #[test]
    fn rejects_relation_violation() {
        let a = pi_a2();
        let one = Matrix::<F101>::identity(1);
        let r = FDModule::new(a, vec![1, 1], vec![one.clone(), one]);
        assert!(r.is_err());
    }

    #[test]
    fn quotient_and_kernel_dimensions() {
        let a = pi_a2();
        let p = FDModule::projective(&a, 0);
        let (top, proj) = p.quotient(&p.radical_spaces());
        assert_eq!(top.dims(), &[1, 0]);
        assert!(proj.is_homomorphism());
        let (k, inc) = proj.kernel();
        assert_eq!(k.dims(), &[0, 1]);
        assert!(inc.is_homomorphism() && inc.is_injective());
        let id = ModuleMap::identity(&p);
        assert_eq!(id.kernel().0.dim(), 0);
        let z = ModuleMap::zero(&top, &p);
        assert_eq!(z.cokernel().0.dims(), p.dims());
    }
}
