//! Quivers, path words, relations and the plain-text presentation format.
//!
//! ```text
//! a: 1 -> 2
//! b: 2 -> 1
//! c: 2 -> 2
//! ab
//! cbac
//! c^2 + bacba
//! ```

use std::fmt::Write as _;

use crate::algebra::Arrow;
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertex_labels: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_labels: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let n = vertex_labels.len();
        for (k, a) in arrows.iter().enumerate() {
            if a.source >= n || a.target >= n {
                return Err(Error::Invalid(format!("arrow {} has an endpoint out of range", a.label)));
            }
            if a.label.is_empty() || arrows[..k].iter().any(|b| b.label == a.label) {
                return Err(Error::Invalid(format!("arrow label '{}' is empty or repeated", a.label)));
            }
        }
        Ok(Quiver { vertex_labels, arrows })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    /// Parses arrow lines `label: i -> j` (vertices are the integers 1..n). Lines
    /// without `->` are ignored here.
    pub fn parse(text: &str) -> Result<Self> {
        let mut raw = Vec::new();
        let mut max_vertex = 0usize;
        for line in text.lines().map(strip_comment) {
            if let Some(n) = line.strip_prefix("vertices:") {
                let n: usize = n.trim().parse().map_err(|_| Error::Parse(format!("bad vertex count in '{line}'")))?;
                max_vertex = max_vertex.max(n);
                continue;
            }
            if !line.contains("->") {
                continue;
            }
            let (label, rest) =
                line.split_once(':').ok_or_else(|| Error::Parse(format!("expected 'label: i -> j' in '{line}'")))?;
            let (s, t) = rest.split_once("->").ok_or_else(|| Error::Parse(format!("missing '->' in '{line}'")))?;
            let parse_v = |v: &str| -> Result<usize> {
                let k: usize = v.trim().parse().map_err(|_| Error::Parse(format!("bad vertex '{}'", v.trim())))?;
                if k == 0 {
                    return Err(Error::Parse("vertices are numbered from 1".into()));
                }
                Ok(k)
            };
            let (s, t) = (parse_v(s)?, parse_v(t)?);
            max_vertex = max_vertex.max(s).max(t);
            raw.push(Arrow { source: s - 1, target: t - 1, label: label.trim().to_string() });
        }
        let labels = (1..=max_vertex).map(|v| v.to_string()).collect();
        Quiver::new(labels, raw)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Splits a concatenation of labels into arrow indices, longest label first.
    /// `x^3` repeats the preceding label.
    pub fn tokenize(&self, word: &str) -> Result<Vec<usize>> {
        let mut labels: Vec<(usize, &str)> =
            self.arrows.iter().enumerate().map(|(i, a)| (i, a.label.as_str())).collect();
        labels.sort_by_key(|(_, l)| std::cmp::Reverse(l.len()));
        let mut out = Vec::new();
        let mut rest = word.trim();
        while !rest.is_empty() {
            if let Some(exp) = rest.strip_prefix('^') {
                let digits: String = exp.chars().take_while(|c| c.is_ascii_digit()).collect();
                let k: usize = digits.parse().map_err(|_| Error::Parse(format!("bad exponent in '{word}'")))?;
                let last = *out.last().ok_or_else(|| Error::Parse(format!("exponent without base in '{word}'")))?;
                if k == 0 {
                    return Err(Error::Parse("zero exponent".into()));
                }
                for _ in 1..k {
                    out.push(last);
                }
                rest = &exp[digits.len()..];
                continue;
            }
            let (idx, l) = labels
                .iter()
                .find(|(_, l)| rest.starts_with(l))
                .ok_or_else(|| Error::Parse(format!("unknown arrow at '{rest}'")))?;
            out.push(*idx);
            rest = &rest[l.len()..];
        }
        Ok(out)
    }

    /// Checks that consecutive arrows compose and returns (source, target).
    pub fn word_endpoints(&self, word: &[usize]) -> Result<(usize, usize)> {
        let first = word.first().ok_or_else(|| Error::Invalid("empty word".into()))?;
        for w in word.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(Error::Invalid(format!(
                    "arrows {} and {} do not compose",
                    self.arrows[w[0]].label, self.arrows[w[1]].label
                )));
            }
        }
        Ok((self.arrows[*first].source, self.arrows[*word.last().unwrap()].target))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for a in &self.arrows {
            let _ = writeln!(s, "{}: {} -> {}", a.label, self.vertex_labels[a.source], self.vertex_labels[a.target]);
        }
        s
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// A path given by arrow indices, with explicit endpoints so that lazy paths exist.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathWord {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation<F: Field> {
    pub source: usize,
    pub target: usize,
    pub terms: Vec<(F, Vec<usize>)>,
}

impl<F: Field> Relation<F> {
    pub fn new(q: &Quiver, terms: Vec<(F, Vec<usize>)>) -> Result<Self> {
        let terms: Vec<(F, Vec<usize>)> = terms.into_iter().filter(|(c, _)| !c.is_zero()).collect();
        let first = terms.first().ok_or_else(|| Error::Invalid("relation has no terms".into()))?;
        let (s, t) = q.word_endpoints(&first.1)?;
        for (_, w) in &terms {
            if w.len() < 2 {
                return Err(Error::Invalid("relations must not contain paths of length below two".into()));
            }
            if q.word_endpoints(w)? != (s, t) {
                return Err(Error::Invalid("relation terms are not parallel".into()));
            }
        }
        Ok(Relation { source: s, target: t, terms })
    }

    /// Parses a signed sum such as `c^2 + bacba`, `a1a2 - 2 b1b2` or `1/2 ab`.
    pub fn parse(q: &Quiver, text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        let mut sign = 1i64;
        let mut current = String::new();
        let flush = |current: &mut String, sign: i64, terms: &mut Vec<(F, Vec<usize>)>| -> Result<()> {
            let t = current.trim();
            if t.is_empty() {
                return Ok(());
            }
            let (coef, word) = split_coefficient::<F>(t)?;
            let c = coef.mul(&F::from_i64(sign));
            terms.push((c, q.tokenize(word)?));
            current.clear();
            Ok(())
        };
        for ch in text.chars() {
            match ch {
                '+' | '-' => {
                    flush(&mut current, sign, &mut terms)?;
                    sign = if ch == '-' { -1 } else { 1 };
                }
                _ => current.push(ch),
            }
        }
        flush(&mut current, sign, &mut terms)?;
        Relation::new(q, merge_terms(terms))
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.terms[0].1.len();
        self.terms.iter().all(|(_, w)| w.len() == d)
    }

    pub fn min_degree(&self) -> usize {
        self.terms.iter().map(|(_, w)| w.len()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.terms.iter().map(|(_, w)| w.len()).max().unwrap_or(0)
    }

    pub fn to_text(&self, q: &Quiver) -> String {
        let mut s = String::new();
        for (k, (c, w)) in self.terms.iter().enumerate() {
            let word: String = w.iter().map(|&a| q.arrows[a].label.as_str()).collect();
            let neg = c.neg();
            let (sign, mag) = match (c.to_i64(), neg.to_i64()) {
                (Some(v), _) if v == 1 => ("+", String::new()),
                (_, Some(v)) if v == 1 => ("-", String::new()),
                _ => ("+", format!("{c} ")),
            };
            if k == 0 {
                if sign == "-" {
                    s.push('-');
                }
            } else {
                let _ = write!(s, " {sign} ");
            }
            s.push_str(&mag);
            s.push_str(&word);
        }
        s
    }
}

fn merge_terms<F: Field>(terms: Vec<(F, Vec<usize>)>) -> Vec<(F, Vec<usize>)> {
    let mut out: Vec<(F, Vec<usize>)> = Vec::new();
    for (c, w) in terms {
        if let Some(e) = out.iter_mut().find(|(_, x)| *x == w) {
            e.0 = e.0.add(&c);
        } else {
            out.push((c, w));
        }
    }
    out.retain(|(c, _)| !c.is_zero());
    out
}

fn split_coefficient<F: Field>(t: &str) -> Result<(F, &str)> {
    let t = t.trim();
    let end = t.find(|c: char| !(c.is_ascii_digit() || c == '/' || c == ' ' || c == '*')).unwrap_or(t.len());
    let (num, word) = t.split_at(end);
    let num = num.trim().trim_end_matches('*').trim();
    if num.is_empty() {
        return Ok((F::one(), word));
    }
    let parse =
        |s: &str| -> Result<i64> { s.trim().parse().map_err(|_| Error::Parse(format!("bad coefficient '{s}'"))) };
    let c = match num.split_once('/') {
        Some((p, q)) => {
            let q = parse(q)?;
            if q == 0 || F::from_i64(q).is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            F::from_i64(parse(p)?).mul(&F::from_i64(q).inv())
        }
        None => F::from_i64(parse(num)?),
    };
    Ok((c, word))
}

/// A quiver together with relations, parsed from the text format.
#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    pub quiver: Quiver,
    pub relations: Vec<Relation<F>>,
}

impl<F: Field> Presentation<F> {
    pub fn parse(text: &str) -> Result<Self> {
        let quiver = Quiver::parse(text)?;
        let mut relations = Vec::new();
        for line in text.lines().map(strip_comment) {
            if line.is_empty() || line.contains("->") || line.starts_with("vertices:") {
                continue;
            }
            let body = line.strip_prefix("rel:").unwrap_or(line);
            relations.push(Relation::parse(&quiver, body)?);
        }
        Ok(Presentation { quiver, relations })
    }

    pub fn to_text(&self) -> String {
        let mut s = self.quiver.to_text();
        for r in &self.relations {
            s.push_str(&r.to_text(&self.quiver));
            s.push('\n');
        }
        s
    }
}
