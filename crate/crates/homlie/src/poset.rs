//! Finite posets presented by cover relations.
//!
//! A [`Poset`] stores an ordered list of element labels (the order they were
//! given in is the canonical element order used everywhere else), the full
//! reflexive-transitive order relation, the cover relation derived from it,
//! and a table of interval lengths `l(x, y)` — the length of the longest
//! chain from `x` to `y`. Elements are addressed by index; labels are only
//! for input and display.
//!
//! The module also enumerates all connected posets on up to six elements up
//! to isomorphism, which drives the verification sweeps, and it implements
//! the `.poset` text format (labels line, then `x < y` cover lines).

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::ParseError;

/// Errors from poset construction and queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    /// The same label appeared twice in the element list.
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    /// A relation referenced a label that is not in the element list.
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    /// A label is empty or contains whitespace, `<`, or `#`, which would
    /// break the text formats.
    #[error("invalid label {0:?}")]
    InvalidLabel(String),
    /// The given relations are cyclic, so no partial order contains them.
    #[error("cover relations contain a cycle")]
    CycleDetected,
    /// Interval length was requested for an incomparable pair.
    #[error("elements {x:?} and {y:?} are not comparable")]
    NotComparable { x: String, y: String },
    /// Enumeration was requested beyond the supported size.
    #[error("poset enumeration supports at most {max} elements, got {n}")]
    SizeTooLarge { n: usize, max: usize },
}

const ENUMERATION_MAX: usize = 6;

/// A finite poset with labeled elements.
///
/// Equality compares labels and the order relation; everything else is
/// derived data.
#[derive(Debug, Clone)]
pub struct Poset {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    /// Row-major `n × n` matrix of the reflexive order: `leq[x * n + y]`.
    leq: Vec<bool>,
    covers: Vec<(usize, usize)>,
    mins: Vec<usize>,
    maxs: Vec<usize>,
    /// Row-major interval lengths; `-1` marks incomparable pairs.
    lengths: Vec<i32>,
    connected: bool,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.leq == other.leq
    }
}

impl Eq for Poset {}

impl Poset {
    /// Builds a poset on `labels` from generating relations `x < y`.
    ///
    /// The relations are closed transitively, so they may be any generating
    /// set, not necessarily the cover relation; the true cover relation is
    /// recomputed from the closure.
    pub fn from_cover_relations<S: AsRef<str>>(
        labels: &[S],
        covers: &[(&str, &str)],
    ) -> Result<Poset, PosetError> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = BTreeMap::new();
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty()
                || label.contains(char::is_whitespace)
                || label.contains('<')
                || label.contains('#')
            {
                return Err(PosetError::InvalidLabel(label.clone()));
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(PosetError::DuplicateLabel(label.clone()));
            }
        }
        let mut pairs = Vec::with_capacity(covers.len());
        for (x, y) in covers {
            let xi = *index
                .get(*x)
                .ok_or_else(|| PosetError::UnknownLabel(x.to_string()))?;
            let yi = *index
                .get(*y)
                .ok_or_else(|| PosetError::UnknownLabel(y.to_string()))?;
            pairs.push((xi, yi));
        }
        Self::from_relation_indices(labels, index, &pairs)
    }

    /// Builds a poset from generating relations given as index pairs, with
    /// labels `"1" .. "n"`.
    pub fn from_cover_indices(n: usize, covers: &[(usize, usize)]) -> Result<Poset, PosetError> {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Self::from_relation_indices(labels, index, covers)
    }

    fn from_relation_indices(
        labels: Vec<String>,
        index: BTreeMap<String, usize>,
        pairs: &[(usize, usize)],
    ) -> Result<Poset, PosetError> {
        let n = labels.len();
        let mut strict = vec![false; n * n];
        for &(x, y) in pairs {
            assert!(x < n && y < n, "relation index out of range");
            strict[x * n + y] = true;
        }
        // Warshall closure of the strict relation.
        for k in 0..n {
            for i in 0..n {
                if strict[i * n + k] {
                    for j in 0..n {
                        if strict[k * n + j] {
                            strict[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for x in 0..n {
            if strict[x * n + x] {
                return Err(PosetError::CycleDetected);
            }
        }
        let mut leq = strict.clone();
        for x in 0..n {
            leq[x * n + x] = true;
        }

        // True covers: x < y with nothing strictly between.
        let mut covers = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if strict[x * n + y]
                    && !(0..n).any(|z| strict[x * n + z] && strict[z * n + y])
                {
                    covers.push((x, y));
                }
            }
        }

        let mins: Vec<usize> = (0..n)
            .filter(|&x| !(0..n).any(|z| strict[z * n + x]))
            .collect();
        let maxs: Vec<usize> = (0..n)
            .filter(|&x| !(0..n).any(|z| strict[x * n + z]))
            .collect();

        // Interval lengths: longest path in the cover digraph, per target.
        let mut lengths = vec![-1i32; n * n];
        for x in 0..n {
            lengths[x * n + x] = 0;
        }
        let topo = topological_order(n, &covers);
        for &y in &topo {
            // Process sources below y in reverse topological order so that
            // every upper cover of x inside [x, y] is already solved.
            for &x in topo.iter().rev() {
                if x == y || !strict[x * n + y] {
                    continue;
                }
                let best = covers
                    .iter()
                    .filter(|&&(a, z)| a == x && leq[z * n + y])
                    .map(|&(_, z)| lengths[z * n + y])
                    .max()
                    .expect("a strictly smaller element has an upper cover in the interval");
                lengths[x * n + y] = best + 1;
            }
        }

        let connected = is_connected_relation(n, &leq);

        Ok(Poset {
            labels,
            index,
            leq,
            covers,
            mins,
            maxs,
            lengths,
            connected,
        })
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// `true` for the empty poset.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Element labels in canonical order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of element `x`.
    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// Index of the element with the given label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// `x ≤ y` in the order.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.len() + y]
    }

    /// `x < y` in the order.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// `true` when `x ≤ y` or `y ≤ x`.
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// The cover relation, sorted by index pair.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// `true` when `y` covers `x`.
    pub fn is_cover(&self, x: usize, y: usize) -> bool {
        self.covers.binary_search(&(x, y)).is_ok()
    }

    /// Minimal elements, ascending.
    pub fn min_elements(&self) -> &[usize] {
        &self.mins
    }

    /// Maximal elements, ascending.
    pub fn max_elements(&self) -> &[usize] {
        &self.maxs
    }

    /// `true` when `x` is minimal.
    pub fn is_minimal(&self, x: usize) -> bool {
        self.mins.binary_search(&x).is_ok()
    }

    /// `true` when `x` is maximal.
    pub fn is_maximal(&self, x: usize) -> bool {
        self.maxs.binary_search(&x).is_ok()
    }

    /// `true` when the comparability graph is connected (the empty poset
    /// and singletons count as connected).
    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Length of the longest chain from `x` to `y`; zero exactly when
    /// `x == y`. Fails with [`PosetError::NotComparable`] unless `x ≤ y`.
    pub fn interval_length(&self, x: usize, y: usize) -> Result<usize, PosetError> {
        if !self.leq(x, y) {
            return Err(PosetError::NotComparable {
                x: self.labels[x].clone(),
                y: self.labels[y].clone(),
            });
        }
        Ok(self.lengths[x * self.len() + y] as usize)
    }

    /// Length of the poset: the longest chain length over all pairs.
    pub fn length(&self) -> usize {
        self.lengths.iter().copied().max().unwrap_or(0).max(0) as usize
    }

    /// All ordered pairs `x < y`, sorted by index pair.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.lt(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// All maximal chains (minimal element to maximal element through
    /// covers), in lexicographic order of their index sequences.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut chains = Vec::new();
        let mut stack = Vec::new();
        for &m in &self.mins {
            stack.push(m);
            self.extend_chain(&mut stack, &mut chains);
            stack.pop();
        }
        chains
    }

    fn extend_chain(&self, stack: &mut Vec<usize>, chains: &mut Vec<Vec<usize>>) {
        let last = *stack.last().expect("chain is never empty");
        if self.is_maximal(last) {
            chains.push(stack.clone());
            return;
        }
        for &(x, y) in &self.covers {
            if x == last {
                stack.push(y);
                self.extend_chain(stack, chains);
                stack.pop();
            }
        }
    }

    /// Tests isomorphism by exhaustive permutation search. Supported for
    /// posets of at most eight elements.
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        let n = self.len();
        if n != other.len() {
            return false;
        }
        assert!(n <= 8, "isomorphism search is exponential; capped at 8 elements");
        if self.covers.len() != other.covers.len() {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        permutations_match(&mut perm, 0, &|perm| {
            (0..n).all(|x| (0..n).all(|y| self.leq(x, y) == other.leq(perm[x], perm[y])))
        })
    }

    /// Enumerates all connected posets on `n` elements up to isomorphism,
    /// labeled `"1" .. "n"`, in a deterministic canonical order. Supports
    /// `1 ≤ n ≤ 6`; larger sizes fail with [`PosetError::SizeTooLarge`].
    pub fn enumerate_connected(n: usize) -> Result<Vec<Poset>, PosetError> {
        if n == 0 || n > ENUMERATION_MAX {
            return Err(PosetError::SizeTooLarge {
                n,
                max: ENUMERATION_MAX,
            });
        }
        // Every poset admits a linear extension, so every isomorphism class
        // has a representative whose strict order only relates lower to
        // higher indices. Enumerate those, then canonicalize.
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let mut classes: BTreeMap<u64, Vec<(usize, usize)>> = BTreeMap::new();
        for mask in 0u32..(1 << pairs.len()) {
            let mut strict = vec![false; n * n];
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    strict[i * n + j] = true;
                }
            }
            if !is_transitive(n, &strict) {
                continue;
            }
            let mut leq = strict.clone();
            for x in 0..n {
                leq[x * n + x] = true;
            }
            if !is_connected_relation(n, &leq) {
                continue;
            }
            let (key, canonical) = canonical_form(n, &strict);
            classes.entry(key).or_insert(canonical);
        }
        classes
            .into_values()
            .map(|rel| Poset::from_cover_indices(n, &rel))
            .collect()
    }

    /// Renders the `.poset` text format: the labels line followed by one
    /// `x < y` line per cover, in canonical order.
    pub fn to_text(&self) -> String {
        let mut out = self.labels.join(" ");
        out.push('\n');
        for &(x, y) in &self.covers {
            out.push_str(&format!("{} < {}\n", self.labels[x], self.labels[y]));
        }
        out
    }

    /// Parses the `.poset` text format. The first non-comment line lists
    /// the element labels; every further non-comment line must read
    /// `x < y`. Lines starting with `#` and blank lines are ignored.
    pub fn parse(text: &str) -> Result<Poset, ParseError> {
        let mut labels: Option<Vec<&str>> = None;
        let mut covers: Vec<(&str, &str)> = Vec::new();
        let mut cover_lines: Vec<usize> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if labels.is_none() {
                labels = Some(line.split_whitespace().collect());
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [x, "<", y] => {
                    covers.push((x, y));
                    cover_lines.push(lineno + 1);
                }
                _ => {
                    return Err(ParseError::new(
                        lineno + 1,
                        format!("expected a cover line `x < y`, got {line:?}"),
                    ))
                }
            }
        }
        let labels = labels.ok_or_else(|| ParseError::new(1, "missing labels line"))?;
        Poset::from_cover_relations(&labels, &covers).map_err(|e| {
            let line = match &e {
                PosetError::UnknownLabel(l) => covers
                    .iter()
                    .position(|(x, y)| x == l || y == l)
                    .map(|i| cover_lines[i])
                    .unwrap_or(1),
                _ => 1,
            };
            ParseError::new(line, e.to_string())
        })
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poset on {{{}}}", self.labels.join(", "))
    }
}

fn topological_order(n: usize, covers: &[(usize, usize)]) -> Vec<usize> {
    let mut indegree = vec![0usize; n];
    for &(_, y) in covers {
        indegree[y] += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut ready: Vec<usize> = (0..n).filter(|&x| indegree[x] == 0).collect();
    while let Some(x) = ready.pop() {
        order.push(x);
        for &(a, y) in covers {
            if a == x {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    ready.push(y);
                }
            }
        }
    }
    debug_assert_eq!(order.len(), n, "cover digraph of a poset is acyclic");
    order
}

fn is_transitive(n: usize, strict: &[bool]) -> bool {
    for i in 0..n {
        for j in 0..n {
            if strict[i * n + j] {
                for k in 0..n {
                    if strict[j * n + k] && !strict[i * n + k] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Connectivity of the comparability graph, by depth-first search.
fn is_connected_relation(n: usize, leq: &[bool]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for y in 0..n {
            if !seen[y] && (leq[x * n + y] || leq[y * n + x]) {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Minimal bit-encoding of the strict relation over all relabelings, plus
/// the relation achieving it. `n ≤ 8` so the encoding fits in a `u64`.
fn canonical_form(n: usize, strict: &[bool]) -> (u64, Vec<(usize, usize)>) {
    let mut best_key = u64::MAX;
    let mut best_rel = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    visit_permutations(&mut perm, 0, &mut |perm| {
        let mut key = 0u64;
        let mut rel = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if strict[i * n + j] {
                    key |= 1 << (perm[i] * n + perm[j]);
                    rel.push((perm[i], perm[j]));
                }
            }
        }
        if key < best_key {
            best_key = key;
            rel.sort_unstable();
            best_rel = rel;
        }
    });
    (best_key, best_rel)
}

fn visit_permutations(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        visit_permutations(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

fn permutations_match(perm: &mut Vec<usize>, k: usize, check: &impl Fn(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return check(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permutations_match(perm, k + 1, check) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}
