//! i-components: connected components of the graph on a code whose edges
//! join words at minimum distance that differ in coordinate `i`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits;
use crate::codebook::{build_rm1, puncture, Code, Codeword, Family, ParityCheck};
use crate::error::{Error, Result};
use crate::gf2::SpanBasis;

/// Largest code handled by pairwise edge enumeration.
pub const GRAPH_SIZE_CAP: usize = 1 << 17;

pub struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
    count: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            count: n,
        }
    }

    pub fn find(&mut self, mut x: u32) -> u32 {
        let mut root = x;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        while self.parent[x as usize] != root {
            let next = self.parent[x as usize];
            self.parent[x as usize] = root;
            x = next;
        }
        root
    }

    pub fn union(&mut self, a: u32, b: u32) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        self.count -= 1;
        true
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Component sizes, largest first.
    pub fn sizes(&mut self) -> Vec<u64> {
        let n = self.parent.len() as u32;
        let mut sizes = Vec::with_capacity(self.count);
        for x in 0..n {
            if self.find(x) == x {
                sizes.push(self.size[x as usize] as u64);
            }
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Graph,
    Span,
}

/// How the minimum distance defining the edges was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceBasis {
    /// Exact, from the enumerated code.
    Enumerated,
    /// At least 5 by the column test of the parity-check matrix, and equal
    /// to 5 since weight-5 words were found.
    SyndromeVerified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ComponentSizes {
    Exact { sizes: Vec<u64> },
    /// Every component of a linear code is a coset of the component of 0.
    Uniform { size_log2: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub coordinate: usize,
    pub d_used: usize,
    pub component_count: u64,
    pub component_sizes: ComponentSizes,
    /// Outcome of the weight-parity classification, when checked.
    pub classification: Option<bool>,
    pub method: Method,
    pub distance_basis: DistanceBasis,
    /// Rank of the minimum-weight words through the coordinate (span method).
    pub rank: Option<usize>,
    pub dimension: Option<usize>,
}

/// Edges at minimum distance, computed once and reused for every coordinate.
pub struct MinDistanceGraph<'a> {
    code: &'a Code,
    d: usize,
    edges: Vec<(u32, u32)>,
}

impl<'a> MinDistanceGraph<'a> {
    pub fn new(code: &'a Code) -> Result<Self> {
        if code.len() > GRAPH_SIZE_CAP {
            return Err(Error::SizeCap {
                operation: "i-component graph",
                size: code.len(),
                cap: GRAPH_SIZE_CAP,
            });
        }
        let d = code.min_distance().unwrap_or(0);
        let len = code.len();
        let edges = if d == 0 {
            Vec::new()
        } else {
            (0..len)
                .into_par_iter()
                .flat_map_iter(|a| {
                    let wa = code.word(a);
                    (a + 1..len)
                        .filter(move |&b| bits::distance(wa, code.word(b)) == d)
                        .map(move |b| (a as u32, b as u32))
                })
                .collect()
        };
        Ok(Self { code, d, edges })
    }

    pub fn distance(&self) -> usize {
        self.d
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn union_find(&self, i: usize) -> Result<UnionFind> {
        let n = self.code.n();
        if i >= n {
            return Err(Error::CoordinateOutOfRange { index: i, n });
        }
        let mut uf = UnionFind::new(self.code.len());
        for &(a, b) in &self.edges {
            if bits::get(self.code.word(a as usize), i) != bits::get(self.code.word(b as usize), i) {
                uf.union(a, b);
            }
        }
        Ok(uf)
    }

    pub fn components(&self, i: usize) -> Result<ComponentReport> {
        let mut uf = self.union_find(i)?;
        Ok(ComponentReport {
            coordinate: i,
            d_used: self.d,
            component_count: uf.count() as u64,
            component_sizes: ComponentSizes::Exact { sizes: uf.sizes() },
            classification: None,
            method: Method::Graph,
            distance_basis: DistanceBasis::Enumerated,
            rank: None,
            dimension: None,
        })
    }
}

/// i-components of an enumerated code by union-find over all edges.
pub fn i_components(code: &Code, i: usize) -> Result<ComponentReport> {
    MinDistanceGraph::new(code)?.components(i)
}

/// Checks that the i-components of a punctured code are exactly the two
/// classes of words whose weight outside coordinate `i` is even or odd.
pub fn classify_by_parity(graph: &MinDistanceGraph<'_>, i: usize) -> Result<ComponentReport> {
    let mut report = graph.components(i)?;
    if report.component_count != 2 {
        return Err(Error::ComponentCount(report.component_count));
    }
    let mut uf = graph.union_find(i)?;
    let mut roots: [Option<u32>; 2] = [None, None];
    let mut ok = true;
    for (x, w) in graph.code.words().enumerate() {
        let parity = (bits::weight(w) - bits::get(w, i) as usize) % 2;
        let root = uf.find(x as u32);
        match roots[parity] {
            None => roots[parity] = Some(root),
            Some(r) if r != root => ok = false,
            _ => {}
        }
    }
    ok &= matches!(roots, [Some(a), Some(b)] if a != b);
    report.classification = Some(ok);
    Ok(report)
}

/// Punctures `kerdock` at `p` and runs the parity classification for
/// coordinate `i` of the punctured code.
pub fn parity_classification_check(kerdock: &Code, p: usize, i: usize) -> Result<bool> {
    let punctured = puncture(kerdock, p)?;
    let graph = MinDistanceGraph::new(&punctured)?;
    Ok(classify_by_parity(&graph, i)?.classification == Some(true))
}

/// The parity classification for every coordinate of `kerdock` punctured
/// at `p`.
pub fn parity_classification_sweep(kerdock: &Code, p: usize) -> Result<Vec<ComponentReport>> {
    let punctured = puncture(kerdock, p)?;
    let graph = MinDistanceGraph::new(&punctured)?;
    (0..punctured.n()).map(|i| classify_by_parity(&graph, i)).collect()
}

fn span_report(i: usize, d: usize, dimension: usize, rank: usize, basis: DistanceBasis) -> Result<ComponentReport> {
    let codim = dimension - rank;
    if codim >= 64 {
        return Err(Error::InvalidArgument(format!("2^{codim} components")));
    }
    Ok(ComponentReport {
        coordinate: i,
        d_used: d,
        component_count: 1u64 << codim,
        component_sizes: ComponentSizes::Uniform { size_log2: rank },
        classification: None,
        method: Method::Span,
        distance_basis: basis,
        rank: Some(rank),
        dimension: Some(dimension),
    })
}

fn rank_until(n: usize, words: impl IntoIterator<Item = impl AsRef<[u64]>>, cap: usize) -> usize {
    let mut basis = SpanBasis::new(n);
    for w in words {
        if basis.rank() == cap {
            break;
        }
        basis.insert(w.as_ref());
    }
    basis.rank()
}

/// An enumerated linear code prepared for span-method component counts:
/// the component of 0 in the i-graph is the span of the minimum-weight words
/// through `i`, so there are `2^(k - rank)` components.
pub struct LinearView<'a> {
    code: &'a Code,
    dimension: usize,
    distance: usize,
    min_words: Vec<usize>,
}

impl<'a> LinearView<'a> {
    pub fn new(code: &'a Code) -> Result<Self> {
        if !code.is_linear() {
            return Err(Error::NotLinear);
        }
        let dimension = code.len().trailing_zeros() as usize;
        let distance = code.min_distance().unwrap_or(0);
        let min_words = (0..code.len())
            .filter(|&x| bits::weight(code.word(x)) == distance)
            .collect();
        Ok(Self {
            code,
            dimension,
            distance,
            min_words,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn distance(&self) -> usize {
        self.distance
    }

    pub fn min_weight_count(&self) -> usize {
        self.min_words.len()
    }

    pub fn components(&self, i: usize) -> Result<ComponentReport> {
        let n = self.code.n();
        if i >= n {
            return Err(Error::CoordinateOutOfRange { index: i, n });
        }
        let through = self
            .min_words
            .iter()
            .map(|&x| self.code.word(x))
            .filter(|w| bits::get(w, i));
        let mut any = false;
        let rank = rank_until(n, through.inspect(|_| any = true), self.dimension);
        if !any {
            return Err(Error::EmptyGenerators {
                coordinate: i,
                weight: self.distance,
            });
        }
        span_report(i, self.distance, self.dimension, rank, DistanceBasis::Enumerated)
    }
}

/// A code given by a parity-check matrix with minimum distance 5, searched
/// coordinate by coordinate for weight-5 words.
pub struct ParityView<'a> {
    parity: &'a ParityCheck,
    dimension: usize,
}

pub const PARITY_VIEW_WEIGHT: usize = 5;

impl<'a> ParityView<'a> {
    pub fn new(parity: &'a ParityCheck) -> Result<Self> {
        if !parity.has_distance_at_least_5() {
            return Err(Error::SelfCheck("parity-check columns admit a word of weight below 5".into()));
        }
        Ok(Self {
            parity,
            dimension: parity.dimension(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn components(&self, i: usize) -> Result<ComponentReport> {
        let n = self.parity.n();
        if i >= n {
            return Err(Error::CoordinateOutOfRange { index: i, n });
        }
        let words = self.parity.words_of_weight_through(i, PARITY_VIEW_WEIGHT);
        if words.is_empty() {
            return Err(Error::EmptyGenerators {
                coordinate: i,
                weight: PARITY_VIEW_WEIGHT,
            });
        }
        let rank = rank_until(n, words.iter().map(Codeword::limbs), self.dimension);
        span_report(i, PARITY_VIEW_WEIGHT, self.dimension, rank, DistanceBasis::SyndromeVerified)
    }
}

pub enum LinearSource<'a> {
    Enumerated(&'a Code),
    ParityCheck(&'a ParityCheck),
}

/// Span-method i-components of a linear code. `weight`, when given, must
/// equal the minimum distance.
pub fn linear_span_components(source: LinearSource<'_>, i: usize, weight: Option<usize>) -> Result<ComponentReport> {
    let report = match source {
        LinearSource::Enumerated(code) => LinearView::new(code)?.components(i)?,
        LinearSource::ParityCheck(parity) => ParityView::new(parity)?.components(i)?,
    };
    match weight {
        Some(w) if w != report.d_used => Err(Error::InvalidArgument(format!(
            "weight {w} is not the minimum distance {}",
            report.d_used
        ))),
        _ => Ok(report),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchingReport {
    pub p: usize,
    pub q: usize,
    /// A word of RM(1, m) with bits 0, 1 at `p`, `q`.
    pub pattern_word: String,
    /// The words with unequal bits at `p`, `q` are a translate of the rest.
    pub odd_is_translate: bool,
    /// The switched code equals the code with `p` and `q` transposed.
    pub equals_transposed: bool,
    pub same_parameters: bool,
    pub holds: bool,
}

fn transpose(words: impl Iterator<Item = Codeword>, p: usize, q: usize) -> Vec<Codeword> {
    words
        .map(|mut w| {
            let (a, b) = (w.get(p), w.get(q));
            w.set(p, b);
            w.set(q, a);
            w
        })
        .collect()
}

/// Splits a Kerdock code by the bits at `p`, `q` into `E` (equal bits) and
/// `O`, checks `O = r + E` for a word `r` of RM(1, m) with pattern 01, and
/// checks that `E ∪ (r' + E)`, with `r'` the transposed pattern word, is the
/// code with `p`, `q` transposed.
pub fn switching_check(kerdock: &Code, p: usize, q: usize) -> Result<SwitchingReport> {
    let n = kerdock.n();
    for c in [p, q] {
        if c >= n {
            return Err(Error::CoordinateOutOfRange { index: c, n });
        }
    }
    if p == q || !n.is_power_of_two() {
        return Err(Error::InvalidArgument(format!("switching positions {p}, {q} at length {n}")));
    }
    let rm = build_rm1(n.trailing_zeros())?;
    let r = rm
        .codewords()
        .find(|w| !w.get(p) && w.get(q))
        .ok_or(Error::PatternNotFound { p, q })?;
    let (even, odd): (Vec<Codeword>, Vec<Codeword>) = kerdock.codewords().partition(|w| w.get(p) == w.get(q));

    let shifted = Code::from_words(n, even.iter().map(|w| w.xor(&r)), Family::Derived)?;
    let odd_code = Code::from_words(n, odd, Family::Derived)?;
    let odd_is_translate = shifted == odd_code;

    let r_swapped = transpose(std::iter::once(r.clone()), p, q).remove(0);
    let switched = Code::from_words(
        n,
        even.iter().cloned().chain(even.iter().map(|w| w.xor(&r_swapped))),
        Family::Derived,
    )?;
    let transposed = Code::from_words(n, transpose(kerdock.codewords(), p, q), Family::Derived)?;
    let equals_transposed = switched == transposed;
    let same_parameters = switched.n() == n
        && switched.len() == kerdock.len()
        && switched.min_distance() == kerdock.min_distance();
    Ok(SwitchingReport {
        p,
        q,
        pattern_word: r.to_string(),
        odd_is_translate,
        equals_transposed,
        same_parameters,
        holds: odd_is_translate && equals_transposed && same_parameters,
    })
}
