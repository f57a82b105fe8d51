//! User retweet graph construction and two-way community detection.
//!
//! The user graph is undirected with edge weights counting retweet
//! interactions. Partitioning runs on the largest connected component:
//! spectral bisection (Fiedler vector of the weighted Laplacian by power
//! iteration on the deflated, spectrum-shifted matrix) picks the initial
//! split via a sweep cut over balance-feasible sizes, and Kernighan–Lin
//! style moves refine it under the same balance constraint. All
//! tie-breaks are by lexicographic user id, so results are fully
//! deterministic for a fixed seed.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::corpus::{Corpus, Tweet};
use crate::error::{Error, Result};

const FIEDLER_TOL: f64 = 1e-8;
const FIEDLER_MAX_ITERS: usize = 10_000;

/// One of the two conflicting sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Stance {
    A,
    B,
}

impl Stance {
    pub fn other(self) -> Stance {
        match self {
            Stance::A => Stance::B,
            Stance::B => Stance::A,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Stance::A => "A",
            Stance::B => "B",
        }
    }
}

impl fmt::Display for Stance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Stance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Stance> {
        match s {
            "A" | "a" => Ok(Stance::A),
            "B" | "b" => Ok(Stance::B),
            other => Err(Error::InvalidParameter(format!(
                "stance label must be A or B, got {other:?}"
            ))),
        }
    }
}

/// How retweet interactions turn into edge weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgeWeighting {
    /// Weight = number of retweet interactions between the pair.
    #[default]
    Counts,
    /// Weight = 1 for any pair with at least one interaction.
    Binary,
}

/// Undirected weighted user retweet graph.
#[derive(Debug, Clone, Default)]
pub struct RetweetGraph {
    adj: BTreeMap<String, BTreeMap<String, u64>>,
}

impl RetweetGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add weight to the undirected edge (u, v). Self-loops are ignored.
    pub fn add_edge(&mut self, u: &str, v: &str, w: u64) {
        if u == v || w == 0 {
            return;
        }
        *self
            .adj
            .entry(u.to_string())
            .or_default()
            .entry(v.to_string())
            .or_insert(0) += w;
        *self
            .adj
            .entry(v.to_string())
            .or_default()
            .entry(u.to_string())
            .or_insert(0) += w;
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(|n| n.len()).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn nodes(&self) -> impl Iterator<Item = &str> {
        self.adj.keys().map(|s| s.as_str())
    }

    pub fn weight(&self, u: &str, v: &str) -> u64 {
        self.adj.get(u).and_then(|n| n.get(v)).copied().unwrap_or(0)
    }

    pub fn neighbors(&self, u: &str) -> impl Iterator<Item = (&str, u64)> {
        self.adj
            .get(u)
            .into_iter()
            .flat_map(|n| n.iter().map(|(v, &w)| (v.as_str(), w)))
    }

    /// Nodes of the largest connected component, sorted. Ties between
    /// equally sized components go to the one with the smallest member id.
    pub fn largest_component(&self) -> Vec<String> {
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        let mut best: Vec<String> = Vec::new();
        for start in self.adj.keys() {
            if seen.contains(start.as_str()) {
                continue;
            }
            let mut component: Vec<String> = Vec::new();
            let mut queue = VecDeque::from([start.as_str()]);
            seen.insert(start.as_str());
            while let Some(u) = queue.pop_front() {
                component.push(u.to_string());
                for (v, _) in self.neighbors(u) {
                    if seen.insert(v) {
                        queue.push_back(v);
                    }
                }
            }
            component.sort();
            // keys iterate in order, so the first component of maximal size
            // already contains the smallest id among ties
            if component.len() > best.len() {
                best = component;
            }
        }
        best
    }

    /// Total weight of edges whose endpoints are both labeled and differ.
    pub fn cut_weight(&self, labels: &BTreeMap<String, Stance>) -> u64 {
        let mut cut = 0u64;
        for (u, neighbors) in &self.adj {
            let Some(&lu) = labels.get(u) else { continue };
            for (v, &w) in neighbors {
                if u < v {
                    if let Some(&lv) = labels.get(v) {
                        if lu != lv {
                            cut += w;
                        }
                    }
                }
            }
        }
        cut
    }

    /// Write the `u<TAB>v<TAB>weight` edge list, each edge once.
    pub fn write_tsv<W: Write>(&self, mut w: W) -> Result<()> {
        for (u, neighbors) in &self.adj {
            for (v, &weight) in neighbors {
                if u < v {
                    writeln!(w, "{u}\t{v}\t{weight}")?;
                }
            }
        }
        Ok(())
    }

    pub fn read_tsv<R: BufRead>(reader: R) -> Result<RetweetGraph> {
        let mut graph = RetweetGraph::new();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let mut parts = line.split('\t');
            let (u, v, w) = (parts.next(), parts.next(), parts.next());
            let (Some(u), Some(v), Some(w)) = (u, v, w) else {
                return Err(Error::Format {
                    what: "graph edge",
                    line: lineno + 1,
                    msg: "expected u<TAB>v<TAB>weight".into(),
                });
            };
            let weight: u64 = w.parse().map_err(|_| Error::Format {
                what: "graph edge",
                line: lineno + 1,
                msg: format!("bad weight {w:?}"),
            })?;
            graph.add_edge(u, v, weight);
        }
        Ok(graph)
    }
}

/// Build the retweet graph from explicit retweet records, weighting edges
/// by interaction counts.
pub fn build_graph(corpus: &Corpus) -> Result<RetweetGraph> {
    build_graph_weighted(corpus, EdgeWeighting::Counts)
}

/// As [`build_graph`] but with a configurable weighting scheme.
pub fn build_graph_weighted(corpus: &Corpus, weighting: EdgeWeighting) -> Result<RetweetGraph> {
    let mut graph = RetweetGraph::new();
    for tweet in corpus.tweets() {
        if let Some(target) = &tweet.retweeted_user_id {
            graph.add_edge(&tweet.user_id, target, 1);
        }
    }
    if let EdgeWeighting::Binary = weighting {
        let mut flat = RetweetGraph::new();
        for (u, neighbors) in &graph.adj {
            for v in neighbors.keys() {
                if u < v {
                    flat.add_edge(u, v, 1);
                }
            }
        }
        graph = flat;
    }
    if graph.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(graph)
}

/// Two-way community labeling of the largest component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommunityAssignment {
    labels: BTreeMap<String, Stance>,
    pub cut_weight: u64,
}

impl CommunityAssignment {
    /// Assemble an assignment directly from labels; used for ground truth
    /// and tests. `cut_weight` is left at zero.
    pub fn from_labels(labels: impl IntoIterator<Item = (String, Stance)>) -> Self {
        CommunityAssignment {
            labels: labels.into_iter().collect(),
            cut_weight: 0,
        }
    }

    pub fn label_of(&self, user: &str) -> Option<Stance> {
        self.labels.get(user).copied()
    }

    pub fn labels(&self) -> &BTreeMap<String, Stance> {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn side(&self, stance: Stance) -> impl Iterator<Item = &str> {
        self.labels
            .iter()
            .filter(move |(_, &s)| s == stance)
            .map(|(u, _)| u.as_str())
    }

    pub fn side_len(&self, stance: Stance) -> usize {
        self.side(stance).count()
    }

    /// Write `user_id<TAB>label` lines.
    pub fn write_tsv<W: Write>(&self, mut w: W) -> Result<()> {
        for (user, stance) in &self.labels {
            writeln!(w, "{user}\t{stance}")?;
        }
        Ok(())
    }

    pub fn read_tsv<R: BufRead>(reader: R) -> Result<CommunityAssignment> {
        let mut labels = BTreeMap::new();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let mut parts = line.split('\t');
            let (Some(user), Some(label)) = (parts.next(), parts.next()) else {
                return Err(Error::Format {
                    what: "assignment",
                    line: lineno + 1,
                    msg: "expected user_id<TAB>label".into(),
                });
            };
            labels.insert(user.to_string(), label.parse()?);
        }
        Ok(CommunityAssignment {
            labels,
            cut_weight: 0,
        })
    }
}

/// Bipartition the largest connected component of the graph.
///
/// The smaller side is constrained to hold at least `0.5 - balance_tolerance`
/// of the component's nodes. Deterministic for a fixed seed; users outside
/// the largest component stay unassigned. Side `A` is the side containing
/// the lexicographically smallest user id.
pub fn partition(
    graph: &RetweetGraph,
    balance_tolerance: f64,
    seed: u64,
) -> Result<CommunityAssignment> {
    if graph.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if !(balance_tolerance > 0.0 && balance_tolerance <= 0.5) {
        return Err(Error::InvalidParameter(format!(
            "balance tolerance must be in (0, 0.5], got {balance_tolerance}"
        )));
    }

    let nodes = graph.largest_component();
    let n = nodes.len();
    if n < 4 {
        return Err(Error::ComponentTooSmall { size: n });
    }

    let index: BTreeMap<&str, usize> = nodes
        .iter()
        .enumerate()
        .map(|(i, u)| (u.as_str(), i))
        .collect();
    let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    let mut degree = vec![0.0f64; n];
    for (i, u) in nodes.iter().enumerate() {
        for (v, w) in graph.neighbors(u) {
            if let Some(&j) = index.get(v) {
                adj[i].push((j, w as f64));
                degree[i] += w as f64;
            }
        }
    }

    let fiedler = fiedler_vector(&adj, &degree, seed);

    // order nodes along the Fiedler vector, ties by id (nodes are sorted)
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        fiedler[a]
            .partial_cmp(&fiedler[b])
            .unwrap()
            .then_with(|| nodes[a].cmp(&nodes[b]))
    });

    let min_side = (((0.5 - balance_tolerance) * n as f64).ceil() as usize).max(1);
    let mut in_a = sweep_cut(&adj, &order, min_side, n);
    refine(&adj, &mut in_a, min_side);

    // side A = side of the smallest user id (index 0 in sorted nodes)
    let flip = !in_a[0];
    let mut labels = BTreeMap::new();
    for (i, u) in nodes.iter().enumerate() {
        let side = if in_a[i] != flip { Stance::A } else { Stance::B };
        labels.insert(u.clone(), side);
    }
    let cut_weight = graph.cut_weight(&labels);
    Ok(CommunityAssignment { labels, cut_weight })
}

/// Fiedler vector by power iteration on `shift*I - L`, deflating the
/// constant eigenvector each step.
fn fiedler_vector(adj: &[Vec<(usize, f64)>], degree: &[f64], seed: u64) -> Vec<f64> {
    let n = degree.len();
    let shift = 2.0 * degree.iter().cloned().fold(0.0f64, f64::max) + 1.0;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    deflate_and_normalize(&mut v);

    let mut next = vec![0.0f64; n];
    for _ in 0..FIEDLER_MAX_ITERS {
        // next = (shift*I - L) v = (shift - d_i) v_i + sum_j w_ij v_j
        for i in 0..n {
            let mut acc = (shift - degree[i]) * v[i];
            for &(j, w) in &adj[i] {
                acc += w * v[j];
            }
            next[i] = acc;
        }
        deflate_and_normalize(&mut next);
        let delta: f64 = v
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        std::mem::swap(&mut v, &mut next);
        if delta <= FIEDLER_TOL {
            break;
        }
    }
    v
}

fn deflate_and_normalize(v: &mut [f64]) {
    let n = v.len() as f64;
    let mean = v.iter().sum::<f64>() / n;
    for x in v.iter_mut() {
        *x -= mean;
    }
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    } else {
        // degenerate start; fall back to an alternating unit vector
        for (i, x) in v.iter_mut().enumerate() {
            *x = if i % 2 == 0 { 1.0 } else { -1.0 };
        }
        let norm = (v.len() as f64).sqrt();
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}

/// Choose the minimum-cut prefix split of `order` among balance-feasible
/// sizes. Returns the side-membership vector.
fn sweep_cut(adj: &[Vec<(usize, f64)>], order: &[usize], min_side: usize, n: usize) -> Vec<bool> {
    let mut in_a = vec![false; n];
    let mut cut = 0i64;
    let mut best: Option<(i64, usize, usize)> = None; // (cut, dist from n/2, size)

    for (pos, &node) in order.iter().enumerate() {
        // moving `node` into A: edges to B become crossing, edges to A stop crossing
        for &(j, w) in &adj[node] {
            if in_a[j] {
                cut -= w as i64;
            } else {
                cut += w as i64;
            }
        }
        in_a[node] = true;
        let size = pos + 1;
        if size >= min_side && n - size >= min_side {
            let dist = (2 * size).abs_diff(n);
            let candidate = (cut, dist, size);
            if best.map_or(true, |b| candidate < b) {
                best = Some(candidate);
            }
        }
    }

    let split = best.expect("feasible split exists").2;
    let mut in_a = vec![false; n];
    for &node in &order[..split] {
        in_a[node] = true;
    }
    in_a
}

/// Greedy Kernighan–Lin style refinement: apply the best positive-gain
/// single move (balance permitting) or pair swap until none remains.
fn refine(adj: &[Vec<(usize, f64)>], in_a: &mut [bool], min_side: usize) {
    let n = in_a.len();
    let mut size_a = in_a.iter().filter(|&&x| x).count();

    // d[i] = external - internal weighted degree
    let mut d = vec![0.0f64; n];
    for i in 0..n {
        for &(j, w) in &adj[i] {
            if in_a[i] == in_a[j] {
                d[i] -= w;
            } else {
                d[i] += w;
            }
        }
    }

    let max_steps = 100 * n;
    for _ in 0..max_steps {
        let mut best_gain = 0.0f64;
        let mut best_move: Option<(usize, Option<usize>)> = None;

        for i in 0..n {
            let new_a = if in_a[i] { size_a - 1 } else { size_a + 1 };
            let feasible = new_a >= min_side && n - new_a >= min_side;
            if feasible && d[i] > best_gain {
                best_gain = d[i];
                best_move = Some((i, None));
            }
        }
        for a in 0..n {
            if !in_a[a] {
                continue;
            }
            for &(b, w) in &adj[a] {
                if in_a[b] {
                    continue;
                }
                let gain = d[a] + d[b] - 2.0 * w;
                if gain > best_gain {
                    best_gain = gain;
                    best_move = Some((a, Some(b)));
                }
            }
            // non-adjacent swaps have gain d[a] + d[b]; covered by the two
            // single moves unless balance forbids them
            for b in 0..n {
                if in_a[b] || adj_weight(adj, a, b) > 0.0 {
                    continue;
                }
                let gain = d[a] + d[b];
                if gain > best_gain {
                    best_gain = gain;
                    best_move = Some((a, Some(b)));
                }
            }
        }

        let Some((x, swap)) = best_move else { break };
        flip(adj, in_a, &mut d, x);
        size_a = if in_a[x] { size_a + 1 } else { size_a - 1 };
        if let Some(y) = swap {
            flip(adj, in_a, &mut d, y);
            size_a = if in_a[y] { size_a + 1 } else { size_a - 1 };
        }
    }
}

fn adj_weight(adj: &[Vec<(usize, f64)>], a: usize, b: usize) -> f64 {
    adj[a]
        .iter()
        .find(|&&(j, _)| j == b)
        .map(|&(_, w)| w)
        .unwrap_or(0.0)
}

fn flip(adj: &[Vec<(usize, f64)>], in_a: &mut [bool], d: &mut [f64], x: usize) {
    in_a[x] = !in_a[x];
    d[x] = -d[x];
    for &(j, w) in &adj[x] {
        if in_a[j] == in_a[x] {
            d[j] -= 2.0 * w;
        } else {
            d[j] += 2.0 * w;
        }
    }
}

/// Tweets authored by users carrying the given label.
pub fn community_tweets<'a>(
    corpus: &'a Corpus,
    assignment: &CommunityAssignment,
    label: Stance,
) -> Vec<&'a Tweet> {
    corpus
        .tweets()
        .iter()
        .filter(|t| assignment.label_of(&t.user_id) == Some(label))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Tweet;

    fn retweet(id: &str, user: &str, target: &str) -> Tweet {
        Tweet::new(
            id,
            user,
            format!("RT @{target}: something"),
            0,
            Some(target.to_string()),
            0,
        )
    }

    #[test]
    fn graph_counts_interactions() {
        let tweets = vec![
            retweet("t1", "u", "v"),
            retweet("t2", "u", "v"),
            Tweet::new("t3", "u", "original", 0, None, 0),
        ];
        let corpus = Corpus::from_tweets("demo", tweets).unwrap();
        let graph = build_graph(&corpus).unwrap();
        assert_eq!(graph.weight("u", "v"), 2);
        assert_eq!(graph.node_count(), 2);
    }

    #[test]
    fn graph_merges_directions() {
        let tweets = vec![retweet("t1", "u", "v"), retweet("t2", "v", "u")];
        let corpus = Corpus::from_tweets("demo", tweets).unwrap();
        let graph = build_graph(&corpus).unwrap();
        assert_eq!(graph.weight("u", "v"), 2);
        assert_eq!(graph.weight("v", "u"), 2);
    }

    #[test]
    fn graph_without_retweets_errors() {
        let tweets = vec![Tweet::new("t1", "u", "plain", 0, None, 0)];
        let corpus = Corpus::from_tweets("demo", tweets).unwrap();
        assert!(matches!(build_graph(&corpus), Err(Error::EmptyGraph)));
    }

    #[test]
    fn binary_weighting_flattens_counts() {
        let tweets = vec![
            retweet("t1", "u", "v"),
            retweet("t2", "u", "v"),
            retweet("t3", "w", "v"),
        ];
        let corpus = Corpus::from_tweets("demo", tweets).unwrap();
        let graph = build_graph_weighted(&corpus, EdgeWeighting::Binary).unwrap();
        assert_eq!(graph.weight("u", "v"), 1);
        assert_eq!(graph.weight("w", "v"), 1);
    }

    fn bridge_triangles() -> RetweetGraph {
        let mut g = RetweetGraph::new();
        for (u, v) in [("a1", "a2"), ("a2", "a3"), ("a1", "a3")] {
            g.add_edge(u, v, 1);
        }
        for (u, v) in [("b1", "b2"), ("b2", "b3"), ("b1", "b3")] {
            g.add_edge(u, v, 1);
        }
        g.add_edge("a1", "b1", 1);
        g
    }

    #[test]
    fn bridge_triangles_cut_is_one() {
        let g = bridge_triangles();
        let asg = partition(&g, 0.2, 7).unwrap();
        assert_eq!(asg.cut_weight, 1);
        let la = asg.label_of("a1").unwrap();
        for u in ["a1", "a2", "a3"] {
            assert_eq!(asg.label_of(u), Some(la));
        }
        for u in ["b1", "b2", "b3"] {
            assert_eq!(asg.label_of(u), Some(la.other()));
        }
        // smallest id lands on side A
        assert_eq!(la, Stance::A);
    }

    #[test]
    fn complete_graph_balanced_cut() {
        let mut g = RetweetGraph::new();
        let ids = ["u1", "u2", "u3", "u4"];
        for i in 0..4 {
            for j in (i + 1)..4 {
                g.add_edge(ids[i], ids[j], 1);
            }
        }
        // tolerance ~0 forces the 2/2 split
        let asg = partition(&g, 1e-9, 3).unwrap();
        assert_eq!(asg.cut_weight, 4);
        assert_eq!(asg.side_len(Stance::A), 2);
        assert_eq!(asg.side_len(Stance::B), 2);
    }

    #[test]
    fn too_small_component_errors() {
        let mut g = RetweetGraph::new();
        g.add_edge("u", "v", 3);
        assert!(matches!(
            partition(&g, 0.2, 0),
            Err(Error::ComponentTooSmall { size: 2 })
        ));
    }

    #[test]
    fn partition_is_deterministic() {
        let g = bridge_triangles();
        let a = partition(&g, 0.2, 11).unwrap();
        let b = partition(&g, 0.2, 11).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn label_swap_preserves_cut() {
        let g = bridge_triangles();
        let asg = partition(&g, 0.2, 5).unwrap();
        let swapped: BTreeMap<String, Stance> = asg
            .labels()
            .iter()
            .map(|(u, &s)| (u.clone(), s.other()))
            .collect();
        assert_eq!(g.cut_weight(&swapped), asg.cut_weight);
    }

    #[test]
    fn unassigned_outside_largest_component() {
        let mut g = bridge_triangles();
        g.add_edge("z1", "z2", 5); // satellite pair
        let asg = partition(&g, 0.2, 1).unwrap();
        assert_eq!(asg.label_of("z1"), None);
        assert_eq!(asg.label_of("z2"), None);
        assert_eq!(asg.len(), 6);
    }

    #[test]
    fn community_tweets_filters_by_author() {
        let tweets = vec![
            Tweet::new("t1", "u1", "one", 0, None, 0),
            Tweet::new("t2", "u1", "two", 0, None, 0),
            Tweet::new("t3", "u1", "three", 0, None, 0),
            Tweet::new("t4", "u2", "four", 0, None, 0),
            Tweet::new("t5", "zz", "five", 0, None, 0),
        ];
        let corpus = Corpus::from_tweets("demo", tweets).unwrap();
        let asg = CommunityAssignment::from_labels([
            ("u1".to_string(), Stance::A),
            ("u2".to_string(), Stance::B),
        ]);
        let a = community_tweets(&corpus, &asg, Stance::A);
        assert_eq!(a.len(), 3);
        let b = community_tweets(&corpus, &asg, Stance::B);
        assert_eq!(b.len(), 1);
        // unassigned author appears in neither; community totals stay <= corpus
        assert!(a.len() + b.len() <= corpus.len());
    }

    #[test]
    fn assignment_round_trip() {
        let asg = CommunityAssignment::from_labels([
            ("u1".to_string(), Stance::A),
            ("u2".to_string(), Stance::B),
        ]);
        let mut buf = Vec::new();
        asg.write_tsv(&mut buf).unwrap();
        let back = CommunityAssignment::read_tsv(&buf[..]).unwrap();
        assert_eq!(back.labels(), asg.labels());
    }

    #[test]
    fn graph_round_trip() {
        let g = bridge_triangles();
        let mut buf = Vec::new();
        g.write_tsv(&mut buf).unwrap();
        let back = RetweetGraph::read_tsv(&buf[..]).unwrap();
        assert_eq!(back.node_count(), g.node_count());
        assert_eq!(back.weight("a1", "b1"), 1);
        assert_eq!(back.weight("a2", "a3"), 1);
    }
}
