//! Finite-dimensional basic algebras given by a vertex-graded basis of arrow words.
//!
//! Every basis element is an exact product of generating arrows (its `word`).
//! Multiplication is stored as right and left multiplication by arrows; general
//! products are expanded along words. Composition is written left to right:
//! for arrows `a: i -> j` and `b: j -> k` the product `ab` is a path `i -> k`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{CoordSolver, IncrementalBasis, Matrix};

/// Sparse coefficient vector over a basis, sorted by index, without zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

pub(crate) fn sparse_axpy<F: Field>(acc: &mut HashMap<usize, F>, c: &F, v: &SparseVec<F>) {
    for (i, x) in v {
        let e = acc.entry(*i).or_insert_with(F::zero);
        e.add_mul_assign(c, x);
    }
}

pub(crate) fn sparse_from_map<F: Field>(m: HashMap<usize, F>) -> SparseVec<F> {
    let mut v: SparseVec<F> = m.into_iter().filter(|(_, x)| !x.is_zero()).collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

pub(crate) fn sparse_from_dense<F: Field>(indices: &[usize], dense: &[F]) -> SparseVec<F> {
    let mut v: SparseVec<F> =
        indices.iter().zip(dense).filter(|(_, x)| !x.is_zero()).map(|(i, x)| (*i, x.clone())).collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElem {
    pub source: usize,
    pub target: usize,
    /// Length of the word; the radical layer the element was found in.
    pub degree: usize,
    /// Arrow indices whose product equals this basis element exactly.
    pub word: Vec<usize>,
}

/// How a contraction sits inside its parent algebra.
#[derive(Clone)]
pub struct Embedding<F: Field> {
    pub parent: Arc<FDAlgebra<F>>,
    /// Parent vertex index of each vertex.
    pub vertices: Vec<usize>,
    /// Each basis element written in the parent basis.
    pub basis_in_parent: Vec<SparseVec<F>>,
}

pub struct FDAlgebra<F: Field> {
    name: String,
    vertex_labels: Vec<String>,
    arrows: Vec<Arrow>,
    arrow_basis: Vec<usize>,
    basis: Vec<BasisElem>,
    right: Vec<Vec<SparseVec<F>>>,
    left: Vec<Vec<SparseVec<F>>>,
    blocks: Vec<Vec<Vec<usize>>>,
    pos_in_block: Vec<usize>,
    embedding: Option<Embedding<F>>,
    opp: OnceLock<Arc<FDAlgebra<F>>>,
    origin: Weak<FDAlgebra<F>>,
}

impl<F: Field> fmt::Debug for FDAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FDAlgebra({}, vertices={}, dim={})", self.name, self.vertex_count(), self.dim())
    }
}

/// Raw data from which an algebra is assembled.
pub(crate) struct RawAlgebra<F: Field> {
    pub name: String,
    pub vertex_labels: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub basis: Vec<BasisElem>,
    pub right: Vec<Vec<SparseVec<F>>>,
    pub left: Option<Vec<Vec<SparseVec<F>>>>,
}

impl<F: Field> FDAlgebra<F> {
    pub(crate) fn assemble(raw: RawAlgebra<F>, embedding: Option<Embedding<F>>) -> Result<Self> {
        let n = raw.vertex_labels.len();
        for (i, b) in raw.basis.iter().take(n).enumerate() {
            if !(b.source == i && b.target == i && b.word.is_empty()) {
                return Err(Error::Invalid("basis must begin with the vertex idempotents".into()));
            }
        }
        let mut arrow_basis = vec![usize::MAX; raw.arrows.len()];
        for (x, b) in raw.basis.iter().enumerate() {
            if b.word.len() == 1 {
                arrow_basis[b.word[0]] = x;
            }
        }
        if arrow_basis.iter().any(|&x| x == usize::MAX) {
            return Err(Error::Invalid("every arrow must be a basis element".into()));
        }
        let mut blocks = vec![vec![Vec::new(); n]; n];
        let mut pos_in_block = vec![0; raw.basis.len()];
        for (x, b) in raw.basis.iter().enumerate() {
            pos_in_block[x] = blocks[b.source][b.target].len();
            blocks[b.source][b.target].push(x);
        }
        let mut alg = FDAlgebra {
            name: raw.name,
            vertex_labels: raw.vertex_labels,
            arrows: raw.arrows,
            arrow_basis,
            basis: raw.basis,
            right: raw.right,
            left: Vec::new(),
            blocks,
            pos_in_block,
            embedding,
            opp: OnceLock::new(),
            origin: Weak::new(),
        };
        alg.left = match raw.left {
            Some(l) => l,
            None => alg.compute_left_table(),
        };
        Ok(alg)
    }

    fn compute_left_table(&self) -> Vec<Vec<SparseVec<F>>> {
        (0..self.arrows.len())
            .map(|a| {
                let ab = self.arrow_basis[a];
                (0..self.dim())
                    .map(
                        |x| {
                            if self.basis[x].source != self.arrows[a].target {
                                Vec::new()
                            } else {
                                self.mul_basis(ab, x)
                            }
                        },
                    )
                    .collect()
            })
            .collect()
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_basis(&self, a: usize) -> usize {
        self.arrow_basis[a]
    }

    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }

    pub fn elem(&self, x: usize) -> &BasisElem {
        &self.basis[x]
    }

    /// Basis indices of `e_i A e_j`.
    pub fn block(&self, i: usize, j: usize) -> &[usize] {
        &self.blocks[i][j]
    }

    /// Position of basis element `x` inside its block.
    pub fn pos_in_block(&self, x: usize) -> usize {
        self.pos_in_block[x]
    }

    pub fn embedding(&self) -> Option<&Embedding<F>> {
        self.embedding.as_ref()
    }

    /// `x * arrow_a` for a basis element `x`.
    pub fn right_arrow(&self, x: usize, a: usize) -> &SparseVec<F> {
        &self.right[x][a]
    }

    /// `arrow_a * x` for a basis element `x`.
    pub fn left_arrow(&self, a: usize, x: usize) -> &SparseVec<F> {
        &self.left[a][x]
    }

    pub fn word_label(&self, x: usize) -> String {
        let b = &self.basis[x];
        if b.word.is_empty() {
            format!("e{}", self.vertex_labels[b.source])
        } else {
            b.word.iter().map(|&a| self.arrows[a].label.as_str()).collect()
        }
    }

    /// Multiplies a sparse element on the right by a word of arrows.
    pub fn mul_word_right(&self, v: &SparseVec<F>, word: &[usize]) -> SparseVec<F> {
        let mut cur = v.clone();
        for &a in word {
            let mut acc = HashMap::new();
            for (x, c) in &cur {
                sparse_axpy(&mut acc, c, &self.right[*x][a]);
            }
            cur = sparse_from_map(acc);
            if cur.is_empty() {
                break;
            }
        }
        cur
    }

    /// Product of two basis elements.
    pub fn mul_basis(&self, x: usize, y: usize) -> SparseVec<F> {
        let (bx, by) = (&self.basis[x], &self.basis[y]);
        if bx.target != by.source {
            return Vec::new();
        }
        self.mul_word_right(&vec![(x, F::one())], &by.word)
    }

    /// Product of sparse elements.
    pub fn mul_sparse(&self, u: &SparseVec<F>, v: &SparseVec<F>) -> SparseVec<F> {
        let mut acc = HashMap::new();
        for (y, cy) in v {
            let word = &self.basis[*y].word;
            let tgt_src = self.basis[*y].source;
            let left: SparseVec<F> =
                u.iter().filter(|(x, _)| self.basis[*x].target == tgt_src).map(|(x, c)| (*x, c.mul(cy))).collect();
            if left.is_empty() {
                continue;
            }
            let p = self.mul_word_right(&left, word);
            sparse_axpy(&mut acc, &F::one(), &p);
        }
        sparse_from_map(acc)
    }

    pub fn multiply(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> AlgebraElement<F> {
        assert_eq!(a.coeffs.len(), self.dim());
        assert_eq!(b.coeffs.len(), self.dim());
        let u = sparse_from_dense(&(0..self.dim()).collect::<Vec<_>>(), &a.coeffs);
        let v = sparse_from_dense(&(0..self.dim()).collect::<Vec<_>>(), &b.coeffs);
        AlgebraElement::from_sparse(self.dim(), &self.mul_sparse(&u, &v))
    }

    /// Entry `(i, j)` is `dim e_j A e_i`, the multiplicity of `S_j` in `P_i`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        (0..n).map(|i| (0..n).map(|j| self.blocks[i][j].len()).collect()).collect()
    }

    /// Dimension vector of the indecomposable projective `e_i A`.
    pub fn projective_dims(&self) -> Vec<usize> {
        let n = self.vertex_count();
        (0..n).map(|i| (0..n).map(|j| self.blocks[i][j].len()).sum()).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.basis.iter().map(|b| b.degree).max().unwrap_or(0)
    }

    /// The opposite algebra: same basis with words reversed and tables swapped.
    pub fn opposite(self: &Arc<Self>) -> Arc<Self> {
        if let Some(o) = self.origin.upgrade() {
            return o;
        }
        self.opp
            .get_or_init(|| {
                Arc::new_cyclic(|_| {
                    let mut op = self.raw_opposite();
                    op.origin = Arc::downgrade(self);
                    op
                })
            })
            .clone()
    }

    fn raw_opposite(&self) -> Self {
        let arrows =
            self.arrows.iter().map(|a| Arrow { source: a.target, target: a.source, label: a.label.clone() }).collect();
        let basis = self
            .basis
            .iter()
            .map(|b| BasisElem {
                source: b.target,
                target: b.source,
                degree: b.degree,
                word: b.word.iter().rev().copied().collect(),
            })
            .collect::<Vec<_>>();
        let n = self.vertex_count();
        let mut blocks = vec![vec![Vec::new(); n]; n];
        let mut pos_in_block = vec![0; basis.len()];
        for (x, b) in basis.iter().enumerate() {
            pos_in_block[x] = blocks[b.source][b.target].len();
            blocks[b.source][b.target].push(x);
        }
        // x^op * a^op = (a x)^op
        let right =
            (0..self.dim()).map(|x| (0..self.arrows.len()).map(|a| self.left[a][x].clone()).collect()).collect();
        let left =
            (0..self.arrows.len()).map(|a| (0..self.dim()).map(|x| self.right[x][a].clone()).collect()).collect();
        FDAlgebra {
            name: format!("{}^op", self.name),
            vertex_labels: self.vertex_labels.clone(),
            arrows,
            arrow_basis: self.arrow_basis.clone(),
            basis,
            right,
            left,
            blocks,
            pos_in_block,
            embedding: None,
            opp: OnceLock::new(),
            origin: Weak::new(),
        }
    }

    /// Structural equality: same vertices, arrows, basis words and tables.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.vertex_labels == other.vertex_labels
            && self.arrows == other.arrows
            && self.basis == other.basis
            && self.right == other.right
            && self.left == other.left
    }

    /// Exhaustive (or sampled) associativity and grading check.
    pub fn verify(&self, max_triples: usize) -> Result<()> {
        let d = self.dim();
        let n = self.vertex_count();
        // idempotents: e_i x = x when source matches, x e_j = x when target matches
        for x in 0..d {
            let b = &self.basis[x];
            for i in 0..n {
                let l = self.mul_basis(i, x);
                let r = self.mul_basis(x, i);
                let expect_l: SparseVec<F> = if b.source == i { vec![(x, F::one())] } else { vec![] };
                let expect_r: SparseVec<F> = if b.target == i { vec![(x, F::one())] } else { vec![] };
                if l != expect_l || r != expect_r {
                    return Err(Error::Invalid(format!("idempotent law fails at basis {x}")));
                }
            }
        }
        let total = d * d * d;
        let step = if total <= max_triples { 1 } else { total / max_triples + 1 };
        let mut t = 0usize;
        while t < total {
            let (x, y, z) = (t / (d * d), (t / d) % d, t % d);
            t += step;
            let (bx, by, bz) = (&self.basis[x], &self.basis[y], &self.basis[z]);
            if bx.target != by.source || by.target != bz.source {
                continue;
            }
            let xy = self.mul_basis(x, y);
            let lhs = self.mul_sparse(&xy, &vec![(z, F::one())]);
            let yz = self.mul_basis(y, z);
            let rhs = self.mul_sparse(&vec![(x, F::one())], &yz);
            if lhs != rhs {
                return Err(Error::Invalid(format!("associativity fails on ({x},{y},{z})")));
            }
            for (w, _) in &lhs {
                if self.basis[*w].source != bx.source || self.basis[*w].target != bz.target {
                    return Err(Error::Invalid("product leaves its vertex block".into()));
                }
            }
        }
        Ok(())
    }

    /// `eAe` for `e` the sum of the idempotents in `vertices` (0-based, any order;
    /// the result lists them in increasing order).
    pub fn contract(self: &Arc<Self>, vertices: &[usize]) -> Result<Arc<Self>> {
        let mut verts: Vec<usize> = vertices.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if verts.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&v) = verts.iter().find(|&&v| v >= self.vertex_count()) {
            return Err(Error::Invalid(format!("vertex index {v} out of range")));
        }
        if verts.len() == self.vertex_count() {
            return Ok(self.clone());
        }
        let parent = self.clone();
        let m = verts.len();
        let block_elems: Vec<Vec<Vec<usize>>> =
            (0..m).map(|i| (0..m).map(|j| self.blocks[verts[i]][verts[j]].clone()).collect()).collect();
        let oracle = ContractionOracle { alg: self, block_elems: &block_elems, verts: &verts };
        let labels = verts.iter().map(|&v| self.vertex_labels[v].clone()).collect();
        let name = format!(
            "{}[{}]",
            self.name,
            verts.iter().map(|&v| self.vertex_labels[v].as_str()).collect::<Vec<_>>().join(",")
        );
        let (raw, coords) = rebase(&oracle, name, labels)?;
        let basis_in_parent = coords
            .iter()
            .zip(&raw.basis)
            .map(|(c, b)| sparse_from_dense(&block_elems[b.source][b.target], c))
            .collect();
        let emb = Embedding { parent, vertices: verts.clone(), basis_in_parent };
        Ok(Arc::new(FDAlgebra::assemble(raw, Some(emb))?))
    }
}

/// An element of an algebra as a dense coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement<F: Field> {
    pub coeffs: Vec<F>,
}

impl<F: Field> AlgebraElement<F> {
    pub fn basis(dim: usize, x: usize) -> Self {
        let mut coeffs = vec![F::zero(); dim];
        coeffs[x] = F::one();
        AlgebraElement { coeffs }
    }

    pub fn from_sparse(dim: usize, v: &SparseVec<F>) -> Self {
        let mut coeffs = vec![F::zero(); dim];
        for (i, c) in v {
            coeffs[*i] = c.clone();
        }
        AlgebraElement { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// Abstract description of a basic algebra by vertex blocks, used to build a
/// word basis over freshly chosen generators.
pub(crate) trait BlockOracle<F: Field> {
    fn vertex_count(&self) -> usize;
    fn block_dim(&self, i: usize, j: usize) -> usize;
    /// Coordinates of the identity of `e_i A e_i`.
    fn identity(&self, i: usize) -> Vec<F>;
    /// Basis rows of the radical part of block `(i, i)`; off-diagonal blocks are
    /// entirely radical.
    fn diagonal_radical(&self, i: usize) -> Matrix<F>;
    /// Product of `u` in block `(i, j)` and `v` in block `(j, k)`.
    fn mul(&self, i: usize, j: usize, k: usize, u: &[F], v: &[F]) -> Vec<F>;
    fn generator_label(&self, i: usize, j: usize, coords: &[F], serial: usize) -> String;
}

/// Chooses generators of `rad / rad^2`, grows a word basis by breadth-first
/// multiplication and expresses the multiplication tables in it. Returns the raw
/// algebra and, for each new basis element, its coordinates in the oracle block.
pub(crate) fn rebase<F: Field, O: BlockOracle<F>>(
    oracle: &O,
    name: String,
    vertex_labels: Vec<String>,
) -> Result<(RawAlgebra<F>, Vec<Vec<F>>)> {
    let n = oracle.vertex_count();
    let dims: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| oracle.block_dim(i, j)).collect()).collect();
    let radical: Vec<Vec<Matrix<F>>> = (0..n)
        .map(|i| {
            (0..n).map(|j| if i == j { oracle.diagonal_radical(i) } else { Matrix::identity(dims[i][j]) }).collect()
        })
        .collect();
    // rad^2 per block
    let mut rad2: Vec<Vec<IncrementalBasis<F>>> =
        (0..n).map(|i| (0..n).map(|k| IncrementalBasis::empty(dims[i][k])).collect()).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (r1, r2) = (&radical[i][j], &radical[j][k]);
                if r1.rows() == 0 || r2.rows() == 0 || rad2[i][k].dim() == dims[i][k] {
                    continue;
                }
                for a in 0..r1.rows() {
                    for b in 0..r2.rows() {
                        let p = oracle.mul(i, j, k, r1.row(a), r2.row(b));
                        rad2[i][k].insert(&p);
                    }
                }
            }
        }
    }
    let mut arrows = Vec::new();
    let mut arrow_coords: Vec<Vec<F>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut acc = rad2[i][j].clone();
            let r = &radical[i][j];
            for row in 0..r.rows() {
                if acc.insert(r.row(row)) {
                    let label = oracle.generator_label(i, j, r.row(row), arrows.len());
                    arrows.push(Arrow { source: i, target: j, label });
                    arrow_coords.push(r.row(row).to_vec());
                }
            }
        }
    }
    // breadth-first word basis
    let mut basis: Vec<BasisElem> = Vec::new();
    let mut coords: Vec<Vec<F>> = Vec::new();
    let mut chosen: Vec<Vec<IncrementalBasis<F>>> =
        (0..n).map(|i| (0..n).map(|j| IncrementalBasis::empty(dims[i][j])).collect()).collect();
    for i in 0..n {
        let id = oracle.identity(i);
        chosen[i][i].insert(&id);
        basis.push(BasisElem { source: i, target: i, degree: 0, word: vec![] });
        coords.push(id);
    }
    let mut layer: Vec<usize> = (0..n).collect();
    let mut degree = 0;
    while !layer.is_empty() {
        degree += 1;
        let mut next = Vec::new();
        for &x in &layer {
            let (s, t) = (basis[x].source, basis[x].target);
            for (g, arrow) in arrows.iter().enumerate() {
                if arrow.source != t {
                    continue;
                }
                let v = oracle.mul(s, t, arrow.target, &coords[x], &arrow_coords[g]);
                if chosen[s][arrow.target].insert(&v) {
                    let mut word = basis[x].word.clone();
                    word.push(g);
                    next.push(basis.len());
                    basis.push(BasisElem { source: s, target: arrow.target, degree, word });
                    coords.push(v);
                }
            }
        }
        layer = next;
    }
    for i in 0..n {
        for j in 0..n {
            if chosen[i][j].dim() != dims[i][j] {
                return Err(Error::Invalid(format!(
                    "generators do not span block ({i},{j}): {} of {}",
                    chosen[i][j].dim(),
                    dims[i][j]
                )));
            }
        }
    }
    // coordinates of each block in the new basis
    let mut block_members: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; n];
    for (x, b) in basis.iter().enumerate() {
        block_members[b.source][b.target].push(x);
    }
    let solvers: Vec<Vec<Option<CoordSolver<F>>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let members = &block_members[i][j];
                    if members.is_empty() {
                        return None;
                    }
                    let m = Matrix::from_rows(members.iter().map(|&x| coords[x].clone()).collect(), dims[i][j]);
                    Some(CoordSolver::new(&m))
                })
                .collect()
        })
        .collect();
    let express = |i: usize, j: usize, v: &[F]| -> SparseVec<F> {
        if v.iter().all(|c| c.is_zero()) {
            return Vec::new();
        }
        let c = solvers[i][j]
            .as_ref()
            .expect("nonzero product in empty block")
            .solve(v)
            .expect("product outside block span");
        sparse_from_dense(&block_members[i][j], &c)
    };
    let right: Vec<Vec<SparseVec<F>>> = (0..basis.len())
        .map(|x| {
            let (s, t) = (basis[x].source, basis[x].target);
            arrows
                .iter()
                .enumerate()
                .map(|(g, arrow)| {
                    if arrow.source != t {
                        return Vec::new();
                    }
                    let v = oracle.mul(s, t, arrow.target, &coords[x], &arrow_coords[g]);
                    express(s, arrow.target, &v)
                })
                .collect()
        })
        .collect();
    let left: Vec<Vec<SparseVec<F>>> = arrows
        .iter()
        .enumerate()
        .map(|(g, arrow)| {
            (0..basis.len())
                .map(|x| {
                    let (s, t) = (basis[x].source, basis[x].target);
                    if s != arrow.target {
                        return Vec::new();
                    }
                    let v = oracle.mul(arrow.source, s, t, &arrow_coords[g], &coords[x]);
                    express(arrow.source, t, &v)
                })
                .collect()
        })
        .collect();
    let raw = RawAlgebra { name, vertex_labels, arrows, basis, right, left: Some(left) };
    Ok((raw, coords))
}

struct ContractionOracle<'a, F: Field> {
    alg: &'a FDAlgebra<F>,
    block_elems: &'a [Vec<Vec<usize>>],
    verts: &'a [usize],
}

impl<F: Field> BlockOracle<F> for ContractionOracle<'_, F> {
    fn vertex_count(&self) -> usize {
        self.verts.len()
    }
    fn block_dim(&self, i: usize, j: usize) -> usize {
        self.block_elems[i][j].len()
    }
    fn identity(&self, i: usize) -> Vec<F> {
        let v = self.verts[i];
        self.block_elems[i][i].iter().map(|&x| if x == v { F::one() } else { F::zero() }).collect()
    }
    fn diagonal_radical(&self, i: usize) -> Matrix<F> {
        let elems = &self.block_elems[i][i];
        let mut order: Vec<usize> = (0..elems.len()).filter(|&p| elems[p] != self.verts[i]).collect();
        order.sort_by_key(|&p| (self.alg.basis[elems[p]].degree, p));
        let mut m = Matrix::zeros(0, elems.len());
        for p in order {
            let mut row = vec![F::zero(); elems.len()];
            row[p] = F::one();
            m.push_row(&row);
        }
        m
    }
    fn mul(&self, i: usize, j: usize, k: usize, u: &[F], v: &[F]) -> Vec<F> {
        let su = sparse_from_dense(&self.block_elems[i][j], u);
        let sv = sparse_from_dense(&self.block_elems[j][k], v);
        let p = self.alg.mul_sparse(&su, &sv);
        let target = &self.block_elems[i][k];
        let mut out = vec![F::zero(); target.len()];
        for (x, c) in p {
            out[self.alg.pos_in_block[x]] = c;
        }
        out
    }
    fn generator_label(&self, i: usize, j: usize, coords: &[F], serial: usize) -> String {
        // generators are chosen among parent basis elements, so reuse their words
        let nz: Vec<usize> = (0..coords.len()).filter(|&p| !coords[p].is_zero()).collect();
        if nz.len() == 1 && coords[nz[0]].is_one() {
            self.alg.word_label(self.block_elems[i][j][nz[0]])
        } else {
            format!("g{serial}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::F101;
    use crate::quiver::{Quiver, Relation};
    use crate::quotient::build_quotient;

    fn pi_a2() -> Arc<FDAlgebra<F101>> {
        let q = Quiver::parse("a: 1 -> 2\nb: 2 -> 1").unwrap();
        let rels = vec![Relation::parse(&q, "ab").unwrap(), Relation::parse(&q, "ba").unwrap()];
        Arc::new(build_quotient(&q, &rels, None).unwrap())
    }

    #[test]
    fn idempotents_and_relation_products() {
        let a = pi_a2();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.mul_basis(0, 0), vec![(0, F101::one())]);
        assert!(a.mul_basis(0, 1).is_empty());
        let (xa, xb) = (a.arrow_basis(0), a.arrow_basis(1));
        assert!(a.mul_basis(xa, xb).is_empty());
        a.verify(1000).unwrap();
    }

    #[test]
    fn cartan_of_pi_a2() {
        assert_eq!(pi_a2().cartan_matrix(), vec![vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn opposite_is_involutive() {
        let a = pi_a2();
        let op = a.opposite();
        let back = op.opposite();
        assert!(Arc::ptr_eq(&a, &back));
        assert!(a.same_structure(&op.raw_opposite()));
        op.verify(1000).unwrap();
    }

    #[test]
    fn contract_full_is_identity() {
        let a = pi_a2();
        let c = a.contract(&[0, 1]).unwrap();
        assert!(Arc::ptr_eq(&a, &c));
        assert!(matches!(a.contract(&[]), Err(Error::EmptySubset)));
    }
}
