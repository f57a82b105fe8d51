//! Stance hashtag mining.
//!
//! Hashtags are ranked by the information gain their presence gives about
//! the community label of a tweet. The top-N hashtags split into the two
//! stance sets by which side uses them more, and within each set the
//! gain values normalize into stance-representativeness scores.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use crate::community::{community_tweets, CommunityAssignment, Stance};
use crate::corpus::Corpus;
use crate::error::{Error, Result};

/// Default size of the top-N hashtag pool.
pub const DEFAULT_TOP_N: usize = 30;
/// Default per-tweet presence floor for candidate hashtags.
pub const DEFAULT_MIN_FREQ: u64 = 5;

/// Binary entropy of a two-way split, in bits, with 0·log0 = 0.
fn entropy2(a: f64, b: f64) -> f64 {
    let total = a + b;
    if total <= 0.0 {
        return 0.0;
    }
    let mut h = 0.0;
    for x in [a, b] {
        if x > 0.0 {
            let p = x / total;
            h -= p * p.log2();
        }
    }
    h
}

/// Information gain, in bits, of a hashtag's presence for the two-class
/// community label:
/// `IG = H(class) - P(h)·H(class|h) - P(¬h)·H(class|¬h)`.
///
/// Counts are tweets in community A/B with and without the hashtag.
pub fn information_gain(
    n_a_with: u64,
    n_a_without: u64,
    n_b_with: u64,
    n_b_without: u64,
) -> Result<f64> {
    let total = n_a_with + n_a_without + n_b_with + n_b_without;
    if total == 0 {
        return Err(Error::ZeroContingency);
    }
    let total = total as f64;
    let (aw, ao, bw, bo) = (
        n_a_with as f64,
        n_a_without as f64,
        n_b_with as f64,
        n_b_without as f64,
    );
    let h_class = entropy2(aw + ao, bw + bo);
    let p_with = (aw + bw) / total;
    let p_without = (ao + bo) / total;
    let ig = h_class - p_with * entropy2(aw, bw) - p_without * entropy2(ao, bo);
    // guard tiny negative round-off
    Ok(ig.max(0.0))
}

/// Per-hashtag contingency statistics over the community-labeled tweets.
#[derive(Debug, Clone, PartialEq)]
pub struct HashtagStats {
    pub hashtag: String,
    /// Tweets in community A containing the hashtag (per-tweet presence).
    pub freq_a: u64,
    /// Tweets in community B containing the hashtag.
    pub freq_b: u64,
    /// Community tweets containing the hashtag.
    pub doc_freq: u64,
    /// Information gain in bits.
    pub ig: f64,
}

/// The mined stance hashtag sets with normalized representativeness
/// scores. Within each side the scores sum to one.
#[derive(Debug, Clone, Default)]
pub struct StanceHashtagTable {
    stats: Vec<HashtagStats>,
    sides: BTreeMap<String, Stance>,
    scores: BTreeMap<String, f64>,
    priors: BTreeMap<String, f64>,
    top_n: usize,
}

impl StanceHashtagTable {
    /// Side a hashtag was assigned to, if any (frequency ties get none).
    pub fn side_of(&self, hashtag: &str) -> Option<Stance> {
        self.sides.get(hashtag).copied()
    }

    /// `P_S(stance | hashtag)`: the normalized score if the hashtag
    /// belongs to that stance's set, else 0.
    pub fn score(&self, hashtag: &str, stance: Stance) -> f64 {
        match self.sides.get(hashtag) {
            Some(&s) if s == stance => self.scores.get(hashtag).copied().unwrap_or(0.0),
            _ => 0.0,
        }
    }

    /// Empirical prior `P(h)`: community tweets containing the hashtag
    /// over all community tweets.
    pub fn prior(&self, hashtag: &str) -> f64 {
        self.priors.get(hashtag).copied().unwrap_or(0.0)
    }

    /// All selected top-N entries, information gain descending.
    pub fn stats(&self) -> &[HashtagStats] {
        &self.stats
    }

    pub fn top_n(&self) -> usize {
        self.top_n
    }

    /// Hashtags of one side ordered by score descending, ties by name.
    pub fn side_hashtags(&self, stance: Stance) -> Vec<(String, f64)> {
        let mut out: Vec<(String, f64)> = self
            .sides
            .iter()
            .filter(|(_, &s)| s == stance)
            .map(|(h, _)| (h.clone(), self.scores[h]))
            .collect();
        out.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then_with(|| a.0.cmp(&b.0)));
        out
    }

    pub fn side_len(&self, stance: Stance) -> usize {
        self.sides.values().filter(|&&s| s == stance).count()
    }

    /// Sides that ended up with fewer than two hashtags; callers may warn.
    pub fn sparse_sides(&self) -> Vec<Stance> {
        [Stance::A, Stance::B]
            .into_iter()
            .filter(|&s| self.side_len(s) < 2)
            .collect()
    }

    /// Write `hashtag<TAB>side<TAB>freq_A<TAB>freq_B<TAB>ig<TAB>p_s`
    /// lines sorted by information gain descending. Hashtags dropped by
    /// the frequency tie rule carry side `-` and score 0.
    pub fn write_tsv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "# top_n\t{}", self.top_n)?;
        for s in &self.stats {
            let side = match self.sides.get(&s.hashtag) {
                Some(st) => st.as_str(),
                None => "-",
            };
            let p_s = self.scores.get(&s.hashtag).copied().unwrap_or(0.0);
            let prior = self.priors.get(&s.hashtag).copied().unwrap_or(0.0);
            writeln!(
                w,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                s.hashtag, side, s.freq_a, s.freq_b, s.ig, p_s, prior
            )?;
        }
        Ok(())
    }

    pub fn read_tsv<R: BufRead>(reader: R) -> Result<StanceHashtagTable> {
        let mut table = StanceHashtagTable::default();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("# top_n\t") {
                table.top_n = rest.trim().parse().map_err(|_| Error::Format {
                    what: "hashtag table",
                    line: lineno + 1,
                    msg: "bad top_n header".into(),
                })?;
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 7 {
                return Err(Error::Format {
                    what: "hashtag table",
                    line: lineno + 1,
                    msg: "expected 7 tab-separated fields".into(),
                });
            }
            let parse_err = |msg: &str| Error::Format {
                what: "hashtag table",
                line: lineno + 1,
                msg: msg.into(),
            };
            let hashtag = fields[0].to_string();
            let side = match fields[1] {
                "-" => None,
                s => Some(s.parse::<Stance>()?),
            };
            let freq_a: u64 = fields[2].parse().map_err(|_| parse_err("bad freq_a"))?;
            let freq_b: u64 = fields[3].parse().map_err(|_| parse_err("bad freq_b"))?;
            let ig: f64 = fields[4].parse().map_err(|_| parse_err("bad ig"))?;
            let p_s: f64 = fields[5].parse().map_err(|_| parse_err("bad p_s"))?;
            let prior: f64 = fields[6].parse().map_err(|_| parse_err("bad prior"))?;
            table.stats.push(HashtagStats {
                hashtag: hashtag.clone(),
                freq_a,
                freq_b,
                doc_freq: freq_a + freq_b,
                ig,
            });
            if let Some(side) = side {
                table.sides.insert(hashtag.clone(), side);
                table.scores.insert(hashtag.clone(), p_s);
            }
            table.priors.insert(hashtag, prior);
        }
        Ok(table)
    }
}

/// Mine stance hashtags from community-labeled tweets.
///
/// Candidates need `freq_A + freq_B >= min_freq` (per-tweet presence);
/// the `top_n` highest-gain candidates split into the two sets by which
/// side uses them strictly more, ties dropped from both; each side's
/// gains normalize to sum one.
pub fn mine(
    corpus: &Corpus,
    assignment: &CommunityAssignment,
    top_n: usize,
    min_freq: u64,
) -> Result<StanceHashtagTable> {
    if top_n < 2 {
        return Err(Error::InvalidParameter(format!(
            "top_n must be at least 2, got {top_n}"
        )));
    }
    let min_freq = min_freq.max(1);
    if assignment.side_len(Stance::A) == 0 || assignment.side_len(Stance::B) == 0 {
        return Err(Error::DegenerateAssignment(
            "both communities must contain at least one user".into(),
        ));
    }

    let tweets_a = community_tweets(corpus, assignment, Stance::A);
    let tweets_b = community_tweets(corpus, assignment, Stance::B);
    let n_a = tweets_a.len() as u64;
    let n_b = tweets_b.len() as u64;
    if n_a + n_b == 0 {
        return Err(Error::DegenerateAssignment(
            "communities contain no tweets".into(),
        ));
    }

    let mut freq_a: BTreeMap<String, u64> = BTreeMap::new();
    let mut freq_b: BTreeMap<String, u64> = BTreeMap::new();
    for tweet in &tweets_a {
        for tag in tweet.hashtags() {
            *freq_a.entry(tag).or_insert(0) += 1;
        }
    }
    for tweet in &tweets_b {
        for tag in tweet.hashtags() {
            *freq_b.entry(tag).or_insert(0) += 1;
        }
    }

    let mut candidates: Vec<HashtagStats> = Vec::new();
    let all_tags: std::collections::BTreeSet<&String> =
        freq_a.keys().chain(freq_b.keys()).collect();
    for tag in all_tags {
        let fa = freq_a.get(tag).copied().unwrap_or(0);
        let fb = freq_b.get(tag).copied().unwrap_or(0);
        if fa + fb < min_freq {
            continue;
        }
        let ig = information_gain(fa, n_a - fa, fb, n_b - fb)?;
        candidates.push(HashtagStats {
            hashtag: tag.clone(),
            freq_a: fa,
            freq_b: fb,
            doc_freq: fa + fb,
            ig,
        });
    }

    candidates.sort_by(|a, b| {
        b.ig.partial_cmp(&a.ig)
            .unwrap()
            .then_with(|| a.hashtag.cmp(&b.hashtag))
    });
    candidates.truncate(top_n);

    let mut table = StanceHashtagTable {
        stats: candidates,
        sides: BTreeMap::new(),
        scores: BTreeMap::new(),
        priors: BTreeMap::new(),
        top_n,
    };
    for s in &table.stats {
        let side = if s.freq_a > s.freq_b {
            Some(Stance::A)
        } else if s.freq_b > s.freq_a {
            Some(Stance::B)
        } else {
            None
        };
        if let Some(side) = side {
            table.sides.insert(s.hashtag.clone(), side);
        }
        table
            .priors
            .insert(s.hashtag.clone(), s.doc_freq as f64 / (n_a + n_b) as f64);
    }
    for stance in [Stance::A, Stance::B] {
        let members: Vec<&HashtagStats> = table
            .stats
            .iter()
            .filter(|s| table.sides.get(&s.hashtag) == Some(&stance))
            .collect();
        let sum: f64 = members.iter().map(|s| s.ig).sum();
        for s in members {
            // all-zero gains on a side normalize uniformly
            let p = if sum > 0.0 {
                s.ig / sum
            } else {
                1.0 / table
                    .stats
                    .iter()
                    .filter(|x| table.sides.get(&x.hashtag) == Some(&stance))
                    .count() as f64
            };
            table.scores.insert(s.hashtag.clone(), p);
        }
    }
    Ok(table)
}

/// `P_S(stance | hashtag)` lookup; 0 for hashtags outside the stance set.
pub fn stance_score_of_hashtag(table: &StanceHashtagTable, hashtag: &str, stance: Stance) -> f64 {
    table.score(hashtag, stance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Tweet;

    #[test]
    fn perfect_separator_of_balanced_classes() {
        assert!((information_gain(2, 0, 0, 2).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn ubiquitous_hashtag_carries_nothing() {
        assert!(information_gain(2, 0, 2, 0).unwrap().abs() < 1e-15);
    }

    #[test]
    fn worked_mixed_contingency() {
        // H(2/3, 1/3) = 0.918295..., IG = 1 - 0.918295 = 0.081704...
        let ig = information_gain(2, 1, 1, 2).unwrap();
        assert!((ig - 0.0817).abs() < 1e-4);
    }

    #[test]
    fn all_zero_counts_rejected() {
        assert!(matches!(
            information_gain(0, 0, 0, 0),
            Err(Error::ZeroContingency)
        ));
    }

    #[test]
    fn ig_symmetric_under_class_swap() {
        for counts in [(3, 1, 0, 4), (2, 2, 1, 5), (7, 0, 0, 7)] {
            let (aw, ao, bw, bo) = counts;
            let lhs = information_gain(aw, ao, bw, bo).unwrap();
            let rhs = information_gain(bw, bo, aw, ao).unwrap();
            assert!((lhs - rhs).abs() < 1e-15);
        }
    }

    fn planted_corpus() -> (Corpus, CommunityAssignment) {
        let mut tweets = Vec::new();
        for i in 0..6 {
            tweets.push(Tweet::new(
                format!("a{i}"),
                "ua",
                format!("#pro side a text {i}"),
                i,
                None,
                0,
            ));
            tweets.push(Tweet::new(
                format!("b{i}"),
                "ub",
                format!("#anti side b text {i}"),
                i,
                None,
                0,
            ));
        }
        let corpus = Corpus::from_tweets("demo", tweets).unwrap();
        let asg = CommunityAssignment::from_labels([
            ("ua".to_string(), Stance::A),
            ("ub".to_string(), Stance::B),
        ]);
        (corpus, asg)
    }

    #[test]
    fn mine_assigns_planted_sides_and_normalizes_singletons() {
        let (corpus, asg) = planted_corpus();
        let table = mine(&corpus, &asg, 30, 1).unwrap();
        assert_eq!(table.side_of("pro"), Some(Stance::A));
        assert_eq!(table.side_of("anti"), Some(Stance::B));
        assert!((table.score("pro", Stance::A) - 1.0).abs() < 1e-12);
        assert!((table.score("anti", Stance::B) - 1.0).abs() < 1e-12);
        assert_eq!(table.score("pro", Stance::B), 0.0);
        assert_eq!(table.score("missing", Stance::A), 0.0);
    }

    #[test]
    fn frequency_ties_drop_from_both_sides() {
        let mut tweets = Vec::new();
        for i in 0..10 {
            let side = if i % 2 == 0 { "ua" } else { "ub" };
            tweets.push(Tweet::new(
                format!("t{i}"),
                side,
                "#both plus text",
                i,
                None,
                0,
            ));
        }
        tweets.push(Tweet::new("x1", "ua", "#onlya yes", 100, None, 0));
        tweets.push(Tweet::new("x2", "ua", "#onlya sure", 101, None, 0));
        let corpus = Corpus::from_tweets("demo", tweets).unwrap();
        let asg = CommunityAssignment::from_labels([
            ("ua".to_string(), Stance::A),
            ("ub".to_string(), Stance::B),
        ]);
        let table = mine(&corpus, &asg, 30, 1).unwrap();
        assert_eq!(table.side_of("both"), None);
        assert_eq!(table.score("both", Stance::A), 0.0);
        assert_eq!(table.score("both", Stance::B), 0.0);
        assert_eq!(table.side_of("onlya"), Some(Stance::A));
    }

    #[test]
    fn mined_ig_matches_standalone_formula() {
        let (corpus, asg) = planted_corpus();
        let table = mine(&corpus, &asg, 30, 1).unwrap();
        for s in table.stats() {
            let oracle =
                information_gain(s.freq_a, 6 - s.freq_a, s.freq_b, 6 - s.freq_b).unwrap();
            assert!((s.ig - oracle).abs() < 1e-12);
        }
    }

    #[test]
    fn side_scores_sum_to_one() {
        let mut tweets = Vec::new();
        for i in 0..8 {
            tweets.push(Tweet::new(
                format!("a{i}"),
                "ua",
                format!("#x{} go", i % 3),
                i,
                None,
                0,
            ));
            tweets.push(Tweet::new(
                format!("b{i}"),
                "ub",
                format!("#y{} stop", i % 2),
                i,
                None,
                0,
            ));
        }
        let corpus = Corpus::from_tweets("demo", tweets).unwrap();
        let asg = CommunityAssignment::from_labels([
            ("ua".to_string(), Stance::A),
            ("ub".to_string(), Stance::B),
        ]);
        let table = mine(&corpus, &asg, 30, 1).unwrap();
        for stance in [Stance::A, Stance::B] {
            let sum: f64 = table.side_hashtags(stance).iter().map(|(_, p)| p).sum();
            assert!((sum - 1.0).abs() < 1e-9, "side {stance} sums to {sum}");
        }
        assert!(table.side_len(Stance::A) + table.side_len(Stance::B) <= table.top_n());
    }

    #[test]
    fn table_round_trip() {
        let (corpus, asg) = planted_corpus();
        let table = mine(&corpus, &asg, 30, 1).unwrap();
        let mut buf = Vec::new();
        table.write_tsv(&mut buf).unwrap();
        let back = StanceHashtagTable::read_tsv(&buf[..]).unwrap();
        assert_eq!(back.top_n(), table.top_n());
        assert_eq!(back.side_of("pro"), Some(Stance::A));
        assert!((back.score("pro", Stance::A) - table.score("pro", Stance::A)).abs() < 1e-15);
        assert!((back.prior("pro") - table.prior("pro")).abs() < 1e-15);
    }

    #[test]
    fn sparse_sides_reported() {
        let (corpus, asg) = planted_corpus();
        let table = mine(&corpus, &asg, 30, 1).unwrap();
        // one hashtag per side -> both sparse, still returned
        assert_eq!(table.sparse_sides(), vec![Stance::A, Stance::B]);
    }
}
