//! Dynkin diagrams, their preprojective algebras and contractions `e Pi e`.
//!
//! Vertices are numbered from 1 as in the usual pictures: `D_n` has 1 and 2
//! attached to 3, and `E_n` has its extra vertex `n` attached to vertex
//! `n - 3` of the chain `1 - 2 - ... - (n-1)`. Sets of vertices passed to this
//! module are 1-based.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::{Arrow, FDAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::quiver::{Quiver, Relation};
use crate::quotient::build_quotient;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinSpec {
    pub family: Family,
    pub rank: usize,
    /// Edges `(i, j)` with `i < j`, 1-based.
    pub edges: Vec<(usize, usize)>,
    /// The canonical involution, 1-based: `iota[i - 1]` is the image of `i`.
    pub iota: Vec<usize>,
    pub coxeter_number: usize,
}

impl fmt::Display for DynkinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(Error::Parse(format!("unknown Dynkin type `{s}`"))),
        };
        let n: usize = chars.as_str().trim().parse().map_err(|_| Error::Parse(format!("bad rank in `{s}`")))?;
        DynkinSpec::new(fam, n)
    }
}

impl DynkinSpec {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let letter = match family {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        };
        let valid = match family {
            Family::A => n >= 1,
            Family::D => n >= 4,
            Family::E => (6..=8).contains(&n),
        };
        if !valid {
            return Err(Error::InvalidRank(n, letter));
        }
        let mut edges = Vec::new();
        let mut iota: Vec<usize> = (1..=n).collect();
        let coxeter_number;
        match family {
            Family::A => {
                edges.extend((1..n).map(|i| (i, i + 1)));
                iota = (1..=n).map(|i| n + 1 - i).collect();
                coxeter_number = n + 1;
            }
            Family::D => {
                edges.push((1, 3));
                edges.push((2, 3));
                edges.extend((3..n).map(|i| (i, i + 1)));
                if n % 2 == 1 {
                    iota.swap(0, 1);
                }
                coxeter_number = 2 * n - 2;
            }
            Family::E => {
                edges.extend((1..n - 1).map(|i| (i, i + 1)));
                edges.push((n - 3, n));
                if n == 6 {
                    iota = vec![5, 4, 3, 2, 1, 6];
                }
                coxeter_number = [12, 18, 30][n - 6];
            }
        }
        Ok(DynkinSpec { family, rank: n, edges, iota, coxeter_number })
    }

    pub fn vertex_count(&self) -> usize {
        self.rank
    }

    pub fn iota_of(&self, i: usize) -> usize {
        self.iota[i - 1]
    }

    /// `iota(J)`, sorted.
    pub fn iota_set(&self, j: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = j.iter().map(|&i| self.iota_of(i)).collect();
        v.sort_unstable();
        v
    }

    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Dimension of the preprojective algebra, `n h (h + 1) / 6`.
    pub fn preprojective_dim(&self) -> usize {
        let h = self.coxeter_number;
        self.rank * h * (h + 1) / 6
    }

    /// Vertices of the unique simple path from `i` to `j`.
    pub fn tree_path(&self, i: usize, j: usize) -> Vec<usize> {
        let n = self.rank;
        let mut parent = vec![0usize; n + 1];
        let mut seen = vec![false; n + 1];
        let mut queue = VecDeque::from([i]);
        seen[i] = true;
        while let Some(v) = queue.pop_front() {
            if v == j {
                break;
            }
            for w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![j];
        let mut v = j;
        while v != i {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        path
    }

    /// Checks a 1-based vertex set, returning it sorted and deduplicated.
    pub fn normalize_subset(&self, j: &[usize]) -> Result<Vec<usize>> {
        let mut v = j.to_vec();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&bad) = v.iter().find(|&&x| x == 0 || x > self.rank) {
            return Err(Error::Invalid(format!("vertex {bad} is not in {self}")));
        }
        Ok(v)
    }

    /// All nonempty subsets up to the involution, each as the smaller of `J`
    /// and `iota(J)` in binary order.
    pub fn subsets_up_to_symmetry(&self) -> Vec<Vec<usize>> {
        let n = self.rank;
        let mut out = Vec::new();
        for mask in 1u32..(1u32 << n) {
            let j: Vec<usize> = (1..=n).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
            let im: u32 = j.iter().map(|&i| 1u32 << (self.iota_of(i) - 1)).sum();
            if im >= mask {
                out.push(j);
            }
        }
        out
    }
}

/// Parses a comma separated vertex list such as `1,2,3,6`.
pub fn parse_subset(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex `{t}`"))))
        .collect()
}

pub fn format_subset(j: &[usize]) -> String {
    j.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// Frozen and mutable parts of a vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrozenSplit {
    pub j: Vec<usize>,
    pub frozen: Vec<usize>,
    pub mutable: Vec<usize>,
}

/// `i in J` is frozen when a walk from `i` through vertices outside `J` reaches
/// `iota(J)` (the empty walk counts, so `J` meets `iota(J)` only in frozen
/// vertices). On a tree, walks may be replaced by simple paths.
pub fn frozen_split(spec: &DynkinSpec, j: &[usize]) -> Result<FrozenSplit> {
    let j = spec.normalize_subset(j)?;
    let n = spec.rank;
    let in_j = |v: usize| j.contains(&v);
    let target: Vec<bool> = (0..=n).map(|v| v > 0 && j.iter().any(|&x| spec.iota_of(x) == v)).collect();
    let (mut frozen, mut mutable) = (Vec::new(), Vec::new());
    for &i in &j {
        let mut seen = vec![false; n + 1];
        let mut queue = VecDeque::from([i]);
        seen[i] = true;
        let mut hit = target[i];
        while let Some(v) = queue.pop_front() {
            if hit {
                break;
            }
            for w in spec.neighbours(v) {
                if seen[w] || in_j(w) {
                    continue;
                }
                if target[w] {
                    hit = true;
                    break;
                }
                seen[w] = true;
                queue.push_back(w);
            }
        }
        if hit {
            frozen.push(i);
        } else {
            mutable.push(i);
        }
    }
    Ok(FrozenSplit { j, frozen, mutable })
}

/// False exactly for the one-sided configurations: type `A` with `J` on one
/// side of the middle, `D_n` with `n` odd and `J = {1}` or `{2}`, and `E_6`
/// with `J = {1}` or `{5}`.
pub fn is_impartial(spec: &DynkinSpec, j: &[usize]) -> Result<bool> {
    let j = spec.normalize_subset(j)?;
    Ok(match spec.family {
        Family::A => {
            let twice_mid = spec.rank + 1;
            !(j.iter().all(|&x| 2 * x < twice_mid) || j.iter().all(|&x| 2 * x > twice_mid))
        }
        Family::D => !(spec.rank % 2 == 1 && (j == [1] || j == [2])),
        Family::E => !(spec.rank == 6 && (j == [1] || j == [5])),
    })
}

/// For a one-sided type `A` set, the smaller type `A_m` (with `J` moved to the
/// left side) over which the contraction is the same algebra. When `J` sits on
/// the right, the vertex order of the contraction is reversed by the move.
pub fn type_a_reduction(spec: &DynkinSpec, j: &[usize]) -> Result<Option<(DynkinSpec, Vec<usize>)>> {
    let j = spec.normalize_subset(j)?;
    if spec.family != Family::A || is_impartial(spec, &j)? {
        return Ok(None);
    }
    let left = if j.iter().all(|&x| 2 * x < spec.rank + 1) { j } else { spec.iota_set(&j) };
    let m = 2 * left.iter().max().unwrap() - 1;
    Ok(Some((DynkinSpec::new(Family::A, m)?, left)))
}

/// Every simple path from `i` to `iota(i')`, for `i, i'` in `J`, meets both
/// `J_f` and `iota(J_f)`.
pub fn frozen_path_property(spec: &DynkinSpec, j: &[usize]) -> Result<bool> {
    let split = frozen_split(spec, j)?;
    let ifrozen = spec.iota_set(&split.frozen);
    for &a in &split.j {
        for &b in &split.j {
            let path = spec.tree_path(a, spec.iota_of(b));
            if !path.iter().any(|v| split.frozen.contains(v)) || !path.iter().any(|v| ifrozen.contains(v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The preprojective algebra together with its diagram.
#[derive(Clone, Debug)]
pub struct Preprojective<F: Field> {
    pub spec: DynkinSpec,
    pub algebra: Arc<FDAlgebra<F>>,
}

impl<F: Field> Preprojective<F> {
    /// Builds `Pi` on the doubled quiver: edge `k = (i, j)` gives `a_k: i -> j`
    /// and `b_k: j -> i`, with the relation `sum a a* - sum a* a` at each vertex.
    pub fn new(spec: &DynkinSpec) -> Result<Self> {
        let (q, rels) = preprojective_presentation::<F>(spec)?;
        let mut alg = build_quotient(&q, &rels, Some(spec.coxeter_number + 1))?;
        alg.set_name(spec.to_string());
        Ok(Preprojective { spec: spec.clone(), algebra: Arc::new(alg) })
    }

    /// `e Pi e` for `e` the sum of `e_i`, `i in J`.
    pub fn contract(&self, j: &[usize]) -> Result<Arc<FDAlgebra<F>>> {
        let j = self.spec.normalize_subset(j)?;
        let zero_based: Vec<usize> = j.iter().map(|v| v - 1).collect();
        self.algebra.contract(&zero_based)
    }

    /// Arrow index of the doubled-quiver arrow from `i` to `j` (1-based vertices).
    pub fn arrow_between(&self, i: usize, j: usize) -> Option<usize> {
        self.algebra.arrows().iter().position(|a| a.source == i - 1 && a.target == j - 1)
    }

    /// Arrow word of the shortest path between two vertices.
    pub fn minimal_path(&self, i: usize, j: usize) -> Vec<usize> {
        let path = self.spec.tree_path(i, j);
        path.windows(2).map(|w| self.arrow_between(w[0], w[1]).unwrap()).collect()
    }
}

/// Contraction of the preprojective algebra, optionally first replacing a
/// one-sided type `A` set by its reduced form.
pub fn contracted_algebra<F: Field>(spec: &DynkinSpec, j: &[usize], reduce: bool) -> Result<Arc<FDAlgebra<F>>> {
    if reduce {
        if let Some((small, jj)) = type_a_reduction(spec, j)? {
            return Preprojective::<F>::new(&small)?.contract(&jj);
        }
    }
    Preprojective::<F>::new(spec)?.contract(j)
}

pub fn preprojective_presentation<F: Field>(spec: &DynkinSpec) -> Result<(Quiver, Vec<Relation<F>>)> {
    let n = spec.rank;
    let mut arrows = Vec::new();
    for (k, &(i, j)) in spec.edges.iter().enumerate() {
        arrows.push(Arrow { source: i - 1, target: j - 1, label: format!("a{}", k + 1) });
        arrows.push(Arrow { source: j - 1, target: i - 1, label: format!("b{}", k + 1) });
    }
    let q = Quiver::new((1..=n).map(|v| v.to_string()).collect(), arrows)?;
    let mut rels = Vec::new();
    for v in 1..=n {
        let mut terms = Vec::new();
        for (k, &(i, j)) in spec.edges.iter().enumerate() {
            if i == v {
                terms.push((F::one(), vec![2 * k, 2 * k + 1]));
            } else if j == v {
                terms.push((F::one().neg(), vec![2 * k + 1, 2 * k]));
            }
        }
        if !terms.is_empty() {
            rels.push(Relation::new(&q, terms)?);
        }
    }
    Ok((q, rels))
}


#[cfg(test)]
mod contraction_tests {
    use super::*;
    use crate::field::F101;

    #[test]
    fn a6_contraction_shape() {
        let d: DynkinSpec = "A6".parse().unwrap();
        let p = Preprojective::<F101>::new(&d).unwrap();
        assert_eq!(p.algebra.dim(), 56);
        let b = p.contract(&[1, 2, 3, 6]).unwrap();
        assert_eq!(b.dim(), 21);
        assert_eq!(b.projective_dims(), vec![4, 6, 7, 4]);
        // e_2 Pi has dimension vector (1,2,2,2,2,1)
        let row: Vec<usize> = p.algebra.cartan_matrix()[1].clone();
        assert_eq!(row, vec![1, 2, 2, 2, 2, 1]);
    }

    #[test]
    fn d5_single_vertex_contraction() {
        let d: DynkinSpec = "D5".parse().unwrap();
        let b = contracted_algebra::<F101>(&d, &[1], false).unwrap();
        assert_eq!(b.dim(), 2);
    }

    #[test]
    fn reduction_gives_same_dimension() {
        let d: DynkinSpec = "A6".parse().unwrap();
        let full = contracted_algebra::<F101>(&d, &[5, 6], false).unwrap();
        let red = contracted_algebra::<F101>(&d, &[5, 6], true).unwrap();
        // 5 and 6 correspond to 2 and 1 of the smaller diagram
        let c = red.cartan_matrix();
        let swapped = vec![vec![c[1][1], c[1][0]], vec![c[0][1], c[0][0]]];
        assert_eq!(full.cartan_matrix(), swapped);
    }
}
