//! Quotients of path algebras by admissible ideals, computed degree by degree.

use std::collections::{HashMap, VecDeque};

use crate::algebra::{sparse_from_map, Arrow, BasisElem, FDAlgebra, RawAlgebra, SparseVec};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{IncrementalBasis, Matrix};
use crate::quiver::{Quiver, Relation};

/// Refuse truncations with more paths than this.
const PATH_LIMIT: usize = 400_000;

/// `kQ / <rels>`. Homogeneous relations use the graded construction; otherwise
/// the path space is truncated at growing lengths until every path of the
/// truncation length lies in the ideal.
pub fn build_quotient<F: Field>(
    q: &Quiver,
    rels: &[Relation<F>],
    degree_cutoff: Option<usize>,
) -> Result<FDAlgebra<F>> {
    let cutoff = degree_cutoff.unwrap_or(3 * (q.arrows.len() + 5));
    let raw =
        if rels.iter().all(|r| r.is_homogeneous()) { graded(q, rels, cutoff)? } else { truncated(q, rels, cutoff)? };
    FDAlgebra::assemble(canonical_order(raw), None)
}

fn base_raw<F: Field>(q: &Quiver) -> (Vec<BasisElem>, Vec<Vec<SparseVec<F>>>) {
    let n = q.vertex_count();
    let mut basis: Vec<BasisElem> =
        (0..n).map(|i| BasisElem { source: i, target: i, degree: 0, word: vec![] }).collect();
    for (k, a) in q.arrows.iter().enumerate() {
        basis.push(BasisElem { source: a.source, target: a.target, degree: 1, word: vec![k] });
    }
    let mut right = vec![vec![Vec::new(); q.arrows.len()]; basis.len()];
    for (k, a) in q.arrows.iter().enumerate() {
        right[a.source][k] = vec![(n + k, F::one())];
    }
    (basis, right)
}

fn graded<F: Field>(q: &Quiver, rels: &[Relation<F>], cutoff: usize) -> Result<RawAlgebra<F>> {
    let n = q.vertex_count();
    let na = q.arrows.len();
    let (mut basis, mut right) = base_raw::<F>(q);
    let mut by_degree: Vec<Vec<usize>> = vec![(0..n).collect(), (n..n + na).collect()];
    let mut d = 2;
    loop {
        let prev = by_degree[d - 1].clone();
        if prev.is_empty() {
            break;
        }
        if d > cutoff + 1 {
            return Err(Error::CutoffExceeded(cutoff));
        }
        // candidate (x, a) products, grouped by block
        let mut cand_block: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
        for &x in &prev {
            for (k, a) in q.arrows.iter().enumerate() {
                if a.source == basis[x].target {
                    cand_block.entry((basis[x].source, a.target)).or_default().push((x, k));
                }
            }
        }
        let mut rel_rows: HashMap<(usize, usize), Vec<HashMap<(usize, usize), F>>> = HashMap::new();
        for rel in rels {
            let r = rel.terms[0].1.len();
            if r > d {
                continue;
            }
            for &y in &by_degree[d - r] {
                if basis[y].target != rel.source {
                    continue;
                }
                let mut acc: HashMap<(usize, usize), F> = HashMap::new();
                for (c, w) in &rel.terms {
                    let z = mul_word(&right, &[(y, F::one())], &w[..r - 1]);
                    for (x, cx) in z {
                        let e = acc.entry((x, w[r - 1])).or_insert_with(F::zero);
                        e.add_mul_assign(c, &cx);
                    }
                }
                acc.retain(|_, v| !v.is_zero());
                if !acc.is_empty() {
                    rel_rows.entry((basis[y].source, rel.target)).or_default().push(acc);
                }
            }
        }
        let mut new_elems = Vec::new();
        let mut keys: Vec<(usize, usize)> = cand_block.keys().copied().collect();
        keys.sort_unstable();
        for key in keys {
            let cands = &cand_block[&key];
            // preferred candidates sit at the right so they survive as non-pivots
            let m = cands.len();
            let col = |c: usize| m - 1 - c;
            let index: HashMap<(usize, usize), usize> = cands.iter().enumerate().map(|(i, &p)| (p, i)).collect();
            let mut rows = Matrix::zeros(0, m);
            for acc in rel_rows.get(&key).into_iter().flatten() {
                let mut row = vec![F::zero(); m];
                for (p, v) in acc {
                    row[col(index[p])] = v.clone();
                }
                rows.push_row(&row);
            }
            let pivots = rows.rref_in_place();
            let mut is_pivot = vec![false; m];
            for &p in &pivots {
                is_pivot[p] = true;
            }
            let mut col_to_basis = vec![usize::MAX; m];
            for c in 0..m {
                if !is_pivot[col(c)] {
                    let (x, k) = cands[c];
                    let mut word = basis[x].word.clone();
                    word.push(k);
                    col_to_basis[col(c)] = basis.len();
                    new_elems.push(basis.len());
                    basis.push(BasisElem { source: key.0, target: key.1, degree: d, word });
                    right.push(vec![Vec::new(); na]);
                }
            }
            for (c, &(x, k)) in cands.iter().enumerate() {
                let j = col(c);
                let v: SparseVec<F> = if !is_pivot[j] {
                    vec![(col_to_basis[j], F::one())]
                } else {
                    // unit_j = -(rest of its pivot row) modulo relations
                    let r = pivots.iter().position(|&p| p == j).unwrap();
                    let mut acc = HashMap::new();
                    for (jj, val) in rows.row(r).iter().enumerate() {
                        if jj != j && !val.is_zero() {
                            acc.insert(col_to_basis[jj], val.neg());
                        }
                    }
                    sparse_from_map(acc)
                };
                right[x][k] = v;
            }
        }
        by_degree.push(new_elems);
        d += 1;
    }
    Ok(RawAlgebra {
        name: "kQ/I".into(),
        vertex_labels: q.vertex_labels.clone(),
        arrows: q.arrows.clone(),
        basis,
        right,
        left: None,
    })
}

fn mul_word<F: Field>(right: &[Vec<SparseVec<F>>], v: &[(usize, F)], word: &[usize]) -> SparseVec<F> {
    let mut cur: SparseVec<F> = v.to_vec();
    for &a in word {
        let mut acc = HashMap::new();
        for (x, c) in &cur {
            for (y, cy) in &right[*x][a] {
                let e = acc.entry(*y).or_insert_with(F::zero);
                e.add_mul_assign(c, cy);
            }
        }
        cur = sparse_from_map(acc);
    }
    cur
}

/// All paths of length at most `n`, grouped by (source, target).
struct PathSpace {
    paths: Vec<(usize, usize, Vec<usize>)>,
    index: HashMap<Vec<usize>, usize>,
    lazy: Vec<usize>,
    block_of: Vec<(usize, usize)>,
    pos: Vec<usize>,
    blocks: HashMap<(usize, usize), Vec<usize>>,
}

impl PathSpace {
    fn new(q: &Quiver, n: usize) -> Result<Self> {
        let mut paths: Vec<(usize, usize, Vec<usize>)> = (0..q.vertex_count()).map(|i| (i, i, vec![])).collect();
        let lazy: Vec<usize> = (0..q.vertex_count()).collect();
        let mut frontier: Vec<usize> = lazy.clone();
        for _ in 0..n {
            let mut next = Vec::new();
            for &p in &frontier {
                let (s, t, w) = paths[p].clone();
                let _ = s;
                for (k, a) in q.arrows.iter().enumerate() {
                    if a.source == t {
                        let mut w2 = w.clone();
                        w2.push(k);
                        next.push(paths.len());
                        paths.push((paths[p].0, a.target, w2));
                        if paths.len() > PATH_LIMIT {
                            return Err(Error::CutoffExceeded(n));
                        }
                    }
                }
            }
            frontier = next;
        }
        let mut index = HashMap::new();
        let mut blocks: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let mut block_of = Vec::with_capacity(paths.len());
        let mut pos = Vec::with_capacity(paths.len());
        for (i, (s, t, w)) in paths.iter().enumerate() {
            if !w.is_empty() {
                index.insert(w.clone(), i);
            }
            let b = blocks.entry((*s, *t)).or_default();
            pos.push(b.len());
            b.push(i);
            block_of.push((*s, *t));
        }
        Ok(PathSpace { paths, index, lazy, block_of, pos, blocks })
    }

    fn find(&self, source: usize, w: &[usize]) -> Option<usize> {
        if w.is_empty() {
            Some(self.lazy[source])
        } else {
            self.index.get(w).copied()
        }
    }
}

fn truncated<F: Field>(q: &Quiver, rels: &[Relation<F>], cutoff: usize) -> Result<RawAlgebra<F>> {
    let start = rels.iter().map(|r| r.max_degree()).max().unwrap_or(1).max(2);
    for n in start..=cutoff {
        let space = PathSpace::new(q, n)?;
        let ideal = ideal_in_truncation(q, rels, &space);
        let top_in_ideal = space.paths.iter().enumerate().filter(|(_, p)| p.2.len() == n).all(|(i, _)| {
            let blk = space.block_of[i];
            let mut unit = vec![F::zero(); space.blocks[&blk].len()];
            unit[space.pos[i]] = F::one();
            ideal.get(&blk).is_some_and(|b| b.contains(&unit))
        });
        if top_in_ideal {
            return Ok(normal_forms(q, &space, &ideal, n));
        }
    }
    Err(Error::CutoffExceeded(cutoff))
}

/// Two-sided ideal generated by the relations inside paths of length <= n.
fn ideal_in_truncation<F: Field>(
    q: &Quiver,
    rels: &[Relation<F>],
    space: &PathSpace,
) -> HashMap<(usize, usize), IncrementalBasis<F>> {
    let mut ideal: HashMap<(usize, usize), IncrementalBasis<F>> =
        space.blocks.iter().map(|(k, v)| (*k, IncrementalBasis::empty(v.len()))).collect();
    let mut queue: VecDeque<((usize, usize), Vec<F>)> = VecDeque::new();
    // left multiples p * rel, then close under right multiplication by arrows
    for rel in rels {
        for (pi, (s, t, pw)) in space.paths.iter().enumerate() {
            let _ = pi;
            if *t != rel.source {
                continue;
            }
            let blk = (*s, rel.target);
            let Some(size) = space.blocks.get(&blk).map(|b| b.len()) else { continue };
            let mut v = vec![F::zero(); size];
            let mut any = false;
            for (c, w) in &rel.terms {
                let mut full = pw.clone();
                full.extend_from_slice(w);
                if let Some(idx) = space.find(*s, &full) {
                    v[space.pos[idx]] = v[space.pos[idx]].add(c);
                    any = true;
                }
            }
            if any && v.iter().any(|x| !x.is_zero()) {
                queue.push_back((blk, v));
            }
        }
    }
    while let Some((blk, v)) = queue.pop_front() {
        if !ideal.get_mut(&blk).unwrap().insert(&v) {
            continue;
        }
        for (k, a) in q.arrows.iter().enumerate() {
            if a.source != blk.1 {
                continue;
            }
            let nb = (blk.0, a.target);
            let Some(size) = space.blocks.get(&nb).map(|b| b.len()) else { continue };
            let mut w = vec![F::zero(); size];
            let mut any = false;
            for (p, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let path = space.blocks[&blk][p];
                let mut word = space.paths[path].2.clone();
                word.push(k);
                if let Some(idx) = space.index.get(&word) {
                    w[space.pos[*idx]] = w[space.pos[*idx]].add(c);
                    any = true;
                }
            }
            if any && w.iter().any(|x| !x.is_zero()) {
                queue.push_back((nb, w));
            }
        }
    }
    ideal
}

fn normal_forms<F: Field>(
    q: &Quiver,
    space: &PathSpace,
    ideal: &HashMap<(usize, usize), IncrementalBasis<F>>,
    n: usize,
) -> RawAlgebra<F> {
    let nv = q.vertex_count();
    let na = q.arrows.len();
    let mut basis: Vec<BasisElem> =
        (0..nv).map(|i| BasisElem { source: i, target: i, degree: 0, word: vec![] }).collect();
    let mut path_to_basis: HashMap<usize, usize> = (0..nv).map(|i| (space.lazy[i], i)).collect();
    // per block: reduced ideal with preferred paths (short, then lexicographic) as non-pivots
    let mut reducers: HashMap<(usize, usize), (Matrix<F>, Vec<usize>, Vec<usize>)> = HashMap::new();
    let mut keys: Vec<(usize, usize)> = space.blocks.keys().copied().collect();
    keys.sort_unstable();
    for key in &keys {
        let members = &space.blocks[key];
        let m = members.len();
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by(|&x, &y| {
            let (wx, wy) = (&space.paths[members[x]].2, &space.paths[members[y]].2);
            (wx.len(), wx).cmp(&(wy.len(), wy)).reverse()
        });
        // column c of the permuted system holds path order[c]
        let sub = ideal[key].to_subspace();
        let rows = sub.basis().select_cols(&order);
        let mut rows = rows;
        let pivots = rows.rref_in_place();
        let mut is_pivot = vec![false; m];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut free: Vec<usize> = (0..m).filter(|&c| !is_pivot[c]).collect();
        free.reverse();
        for &c in &free {
            let path = members[order[c]];
            if space.paths[path].2.is_empty() {
                continue;
            }
            path_to_basis.insert(path, basis.len());
            let (s, t, w) = &space.paths[path];
            basis.push(BasisElem { source: *s, target: *t, degree: w.len(), word: w.clone() });
        }
        reducers.insert(*key, (rows, pivots, order));
    }
    let reduce_path = |path: usize| -> SparseVec<F> {
        let key = space.block_of[path];
        let (rows, pivots, order) = &reducers[&key];
        let members = &space.blocks[&key];
        let c = order.iter().position(|&o| o == space.pos[path]).unwrap();
        if let Some(r) = pivots.iter().position(|&p| p == c) {
            let mut acc = HashMap::new();
            for (cc, val) in rows.row(r).iter().enumerate() {
                if cc != c && !val.is_zero() {
                    acc.insert(path_to_basis[&members[order[cc]]], val.neg());
                }
            }
            sparse_from_map(acc)
        } else {
            vec![(path_to_basis[&path], F::one())]
        }
    };
    let mut right = vec![vec![Vec::new(); na]; basis.len()];
    for x in 0..basis.len() {
        for (k, a) in q.arrows.iter().enumerate() {
            if a.source != basis[x].target || basis[x].word.len() + 1 > n {
                continue;
            }
            let mut w = basis[x].word.clone();
            w.push(k);
            let path = space.index[&w];
            right[x][k] = reduce_path(path);
        }
    }
    RawAlgebra {
        name: "kQ/I".into(),
        vertex_labels: q.vertex_labels.clone(),
        arrows: q.arrows.clone(),
        basis,
        right,
        left: None,
    }
}

/// Sorts the basis by (degree, source, word) keeping idempotents first.
fn canonical_order<F: Field>(raw: RawAlgebra<F>) -> RawAlgebra<F> {
    let nb = raw.basis.len();
    let mut perm: Vec<usize> = (0..nb).collect();
    perm.sort_by(|&x, &y| {
        let (a, b) = (&raw.basis[x], &raw.basis[y]);
        (a.degree, a.source, &a.word, a.target).cmp(&(b.degree, b.source, &b.word, b.target))
    });
    let mut inv = vec![0; nb];
    for (new, &old) in perm.iter().enumerate() {
        inv[old] = new;
    }
    let remap = |v: &SparseVec<F>| -> SparseVec<F> {
        let mut w: SparseVec<F> = v.iter().map(|(i, c)| (inv[*i], c.clone())).collect();
        w.sort_by_key(|(i, _)| *i);
        w
    };
    let basis = perm.iter().map(|&o| raw.basis[o].clone()).collect();
    let right = perm.iter().map(|&o| raw.right[o].iter().map(remap).collect()).collect();
    RawAlgebra {
        name: raw.name,
        vertex_labels: raw.vertex_labels,
        arrows: raw.arrows,
        basis,
        right,
        left: raw.left.map(|l| l.iter().map(|row| perm.iter().map(|&o| remap(&row[o])).collect()).collect()),
    }
}

/// Quiver with the listed arrows on vertices labelled 1..n.
pub fn quiver_from_arrows(n: usize, arrows: &[(&str, usize, usize)]) -> Result<Quiver> {
    Quiver::new(
        (1..=n).map(|v| v.to_string()).collect(),
        arrows.iter().map(|&(l, s, t)| Arrow { source: s - 1, target: t - 1, label: l.to_string() }).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, F101};

    #[test]
    fn dual_numbers() {
        let q = quiver_from_arrows(1, &[("x", 1, 1)]).unwrap();
        let r = vec![Relation::<F101>::parse(&q, "x^2").unwrap()];
        let a = build_quotient(&q, &r, None).unwrap();
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn infinite_algebra_hits_cutoff() {
        let q = quiver_from_arrows(1, &[("x", 1, 1), ("y", 1, 1)]).unwrap();
        let r = vec![Relation::<F101>::parse(&q, "xy - yx").unwrap()];
        assert!(matches!(build_quotient(&q, &r, Some(6)), Err(Error::CutoffExceeded(_))));
    }

    #[test]
    fn nakayama_cycle_dims() {
        let q = quiver_from_arrows(4, &[("a1", 1, 2), ("a2", 2, 3), ("a3", 3, 4), ("a4", 4, 1)]).unwrap();
        let rels: Vec<Relation<Rational>> =
            ["a1a2a3", "a2a3a4", "a3a4a1a2"].iter().map(|s| Relation::parse(&q, s).unwrap()).collect();
        let a = build_quotient(&q, &rels, None).unwrap();
        assert_eq!(a.projective_dims(), vec![3, 3, 4, 4]);
        a.verify(100_000).unwrap();
    }

    #[test]
    fn inhomogeneous_relation_is_reduced() {
        // k<x>/(x^2 - x^3): x^2 = x^3 = x^4 = ... and x^2 = x^2 * x^k, so x^2 = 0 eventually
        let q = quiver_from_arrows(1, &[("x", 1, 1)]).unwrap();
        let r = vec![Relation::<F101>::parse(&q, "x^2 - x^3").unwrap()];
        let a = build_quotient(&q, &r, None).unwrap();
        assert_eq!(a.dim(), 2);
        a.verify(1000).unwrap();
    }
}
