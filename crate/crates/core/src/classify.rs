//! The homological triple `(idim, fidim, domdim)` of contracted preprojective
//! algebras: predicted from the combinatorics of `J`, and computed.

use std::fmt;

use serde::Serialize;

use crate::certify::{certify_dualizing, dualizing_candidate_for, Certification, DualizingCandidate};
use crate::config::Config;
use crate::dynkin::{frozen_split, is_impartial, type_a_reduction, DynkinSpec, Family, FrozenSplit, Preprojective};
use crate::error::Result;
use crate::field::Field;
use crate::resolve::{DimReport, Homology};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Triple {
    pub idim: DimReport,
    pub fidim: DimReport,
    pub domdim: DimReport,
}

impl Triple {
    pub const SELFINJECTIVE: Triple =
        Triple { idim: DimReport::Finite(0), fidim: DimReport::Finite(0), domdim: DimReport::Infinite(None) };

    pub fn same_value(&self, other: &Triple) -> bool {
        self.idim.same_value(&other.idim)
            && self.fidim.same_value(&other.fidim)
            && self.domdim.same_value(&other.domdim)
    }

    pub fn is_determined(&self) -> bool {
        [self.idim, self.fidim, self.domdim].iter().all(|d| !matches!(d, DimReport::Undetermined(_)))
    }

    /// `idim,fidim,domdim` with `inf` for infinity, as used in table keys.
    pub fn key(&self) -> String {
        format!("{},{},{}", self.idim, self.fidim, self.domdim)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.idim, self.fidim, self.domdim)
    }
}

impl Serialize for Triple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Triple", 3)?;
        st.serialize_field("idim", &self.idim.to_string())?;
        st.serialize_field("fidim", &self.fidim.to_string())?;
        st.serialize_field("domdim", &self.domdim.to_string())?;
        st.end()
    }
}

/// `f` for frozen, `m` for mutable and `o` for vertices outside `J`, in vertex order.
pub fn subset_pattern(spec: &DynkinSpec, split: &FrozenSplit) -> String {
    (1..=spec.rank)
        .map(|v| {
            if split.frozen.contains(&v) {
                'f'
            } else if split.mutable.contains(&v) {
                'm'
            } else {
                'o'
            }
        })
        .collect()
}

/// Whether `pattern` (or its image under the involution) matches `golden`,
/// where `*` in `golden` matches anything.
pub fn pattern_matches(spec: &DynkinSpec, pattern: &str, golden: &str) -> bool {
    let p: Vec<char> = pattern.chars().collect();
    let g: Vec<char> = golden.chars().collect();
    if p.len() != g.len() || p.len() != spec.rank {
        return false;
    }
    let direct = p.iter().zip(&g).all(|(a, b)| *b == '*' || a == b);
    let mirrored = (1..=spec.rank).all(|v| {
        let b = g[v - 1];
        b == '*' || p[spec.iota_of(v) - 1] == b
    });
    direct || mirrored
}

/// The triple read off from `J`: after moving a one-sided type `A` set to its
/// reduced diagram, `J = iota(J)` and the remaining one-sided sets give a
/// selfinjective algebra; otherwise `fidim` is 0 or 2 as `J` is all frozen or
/// not, `domdim` is 2 when `J_f = iota(J_f)` and 0 otherwise, and `idim` is 2
/// only for type `A` sets inside one half of the diagram.
pub fn predicted_triple(spec: &DynkinSpec, j: &[usize]) -> Result<Triple> {
    let (spec, j) = match type_a_reduction(spec, j)? {
        Some((s, jj)) => (s, jj),
        None => (spec.clone(), spec.normalize_subset(j)?),
    };
    let split = frozen_split(&spec, &j)?;
    let fork_count = |j: &[usize]| j.iter().filter(|&&v| v <= 2).count();
    let selfinjective = spec.iota_set(&j) == j
        || !is_impartial(&spec, &j)?
        || (spec.family == Family::D && spec.rank % 2 == 1 && fork_count(&j) != 1);
    if selfinjective {
        return Ok(Triple::SELFINJECTIVE);
    }
    let fidim = if split.mutable.is_empty() { 0 } else { 2 };
    let domdim = if spec.iota_set(&split.frozen) == split.frozen { 2 } else { 0 };
    let idim = match spec.family {
        Family::A => {
            let twice_mid = spec.rank + 1;
            if j.iter().all(|&x| 2 * x <= twice_mid) || j.iter().all(|&x| 2 * x >= twice_mid) {
                DimReport::Finite(2)
            } else {
                DimReport::Infinite(None)
            }
        }
        _ => DimReport::Infinite(None),
    };
    Ok(Triple { idim, fidim: DimReport::Finite(fidim), domdim: DimReport::Finite(domdim) })
}

/// Predicted and computed data for one vertex set.
pub struct Classification<F: Field> {
    pub spec: DynkinSpec,
    pub split: FrozenSplit,
    pub impartial: bool,
    pub dim: usize,
    pub cartan: Vec<Vec<usize>>,
    pub predicted: Triple,
    pub computed: Triple,
    pub candidate: DualizingCandidate<F>,
    pub certification: Certification<F>,
}

impl<F: Field> Classification<F> {
    pub fn pattern(&self) -> String {
        subset_pattern(&self.spec, &self.split)
    }

    pub fn agrees(&self) -> bool {
        self.predicted.same_value(&self.computed)
    }

    pub fn summary(&self) -> ClassificationSummary {
        ClassificationSummary {
            algebra: format!("{} J={}", self.spec, crate::dynkin::format_subset(&self.split.j)),
            j: self.split.j.clone(),
            frozen: self.split.frozen.clone(),
            mutable: self.split.mutable.clone(),
            pattern: self.pattern(),
            impartial: self.impartial,
            dim: self.dim,
            predicted: self.predicted,
            computed: self.computed,
            certified: self.certification.passed(),
            agrees: self.agrees(),
        }
    }
}

/// Field-independent view of a classification, for output and comparisons.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationSummary {
    pub algebra: String,
    pub j: Vec<usize>,
    pub frozen: Vec<usize>,
    pub mutable: Vec<usize>,
    pub pattern: String,
    pub impartial: bool,
    pub dim: usize,
    pub predicted: Triple,
    pub computed: Triple,
    pub certified: bool,
    pub agrees: bool,
}

/// Classifies `e Pi e` for `e = sum_{i in J} e_i`, reusing an existing `Pi`.
pub fn classify_in<F: Field>(pi: &Preprojective<F>, j: &[usize], cfg: &Config) -> Result<Classification<F>> {
    let spec = &pi.spec;
    let split = frozen_split(spec, j)?;
    let alg = pi.contract(&split.j)?;
    let mut h = Homology::new(&alg, cfg);
    let idim = h.self_injective_dim()?;
    let domdim = h.dominant_dim()?;
    let frozen: Vec<usize> = split.frozen.iter().map(|f| split.j.iter().position(|x| x == f).unwrap()).collect();
    let candidate = dualizing_candidate_for(&alg, &frozen, cfg)?;
    let certification = certify_dualizing(&alg, &candidate.parts, cfg)?;
    let computed = Triple { idim, fidim: certification.fidim(cfg.bound), domdim };
    Ok(Classification {
        spec: spec.clone(),
        impartial: is_impartial(spec, &split.j)?,
        predicted: predicted_triple(spec, &split.j)?,
        dim: alg.dim(),
        cartan: alg.cartan_matrix(),
        split,
        computed,
        candidate,
        certification,
    })
}

pub fn classify_dynkin<F: Field>(spec: &DynkinSpec, j: &[usize], cfg: &Config) -> Result<Classification<F>> {
    classify_in(&Preprojective::new(spec)?, j, cfg)
}

/// Column order of the published table.
pub const TABLE_COLUMNS: [&str; 5] = ["0,0,inf", "2,2,2", "inf,2,2", "inf,2,0", "inf,0,0"];

/// Groups summaries by computed triple, in table column order (other triples last).
pub fn group_by_triple(rows: &[ClassificationSummary]) -> Vec<(String, Vec<&ClassificationSummary>)> {
    let mut keys: Vec<String> = TABLE_COLUMNS.iter().map(|s| s.to_string()).collect();
    for r in rows {
        let k = r.computed.key();
        if !keys.contains(&k) {
            keys.push(k);
        }
    }
    keys.into_iter()
        .map(|k| {
            let members = rows.iter().filter(|r| r.computed.key() == k).collect();
            (k, members)
        })
        .filter(|(_, m): &(String, Vec<&ClassificationSummary>)| !m.is_empty())
        .collect()
}

/// Parses a golden table: lines `idim,fidim,domdim<TAB>pattern`, `#` comments.
pub fn parse_golden(text: &str) -> Vec<(String, String)> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .filter_map(|l| {
            let mut it = l.split('\t');
            Some((it.next()?.trim().to_string(), it.next()?.trim().to_string()))
        })
        .collect()
}

/// Mismatches between computed rows and a golden table: every row must match a
/// golden pattern in its own column, and every exact golden pattern must be hit.
pub fn compare_with_golden(
    spec: &DynkinSpec,
    rows: &[ClassificationSummary],
    golden: &[(String, String)],
) -> Vec<String> {
    let mut problems = Vec::new();
    for r in rows {
        let key = r.computed.key();
        let ok = golden.iter().any(|(k, p)| *k == key && pattern_matches(spec, &r.pattern, p));
        if !ok {
            problems.push(format!("{} ({}) computed {} has no golden pattern", r.algebra, r.pattern, key));
        }
    }
    for (k, p) in golden.iter().filter(|(_, p)| !p.contains('*')) {
        if !rows.iter().any(|r| r.computed.key() == *k && pattern_matches(spec, &r.pattern, p)) {
            problems.push(format!("golden {k} {p} not produced"));
        }
    }
    problems
}
