//! Topic relevance scoring.
//!
//! A unigram topic language model with Jelinek–Mercer smoothing against a
//! background corpus. A tweet's relevance is the geometric mean of its
//! per-token probabilities — the length-normalized generation
//! probability — which keeps scores in (0, 1].

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use crate::corpus::{Corpus, Tweet};
use crate::error::{Error, Result};
use crate::tokenizer::{tokenize, TokenKind};

/// Default topic/background mixing weight.
pub const DEFAULT_LAMBDA: f64 = 0.8;

/// Smoothed unigram model: `p(w) = λ·p_topic(w) + (1-λ)·p_bg(w)`, with
/// words unseen in both floored at `(1-λ)/|V|`.
#[derive(Debug, Clone)]
pub struct TopicLanguageModel {
    topic: BTreeMap<String, f64>,
    background: BTreeMap<String, f64>,
    lambda: f64,
    floor: f64,
}

/// Tokens the language model scores: words plus '#'-stripped hashtags,
/// lowercased. URLs, mentions, and other non-word tokens are excluded.
pub fn lm_tokens(text: &str) -> Vec<String> {
    tokenize(text)
        .tokens
        .iter()
        .filter_map(|t| match t.kind {
            TokenKind::Word => Some(t.surface.to_lowercase()),
            TokenKind::Hashtag => Some(t.surface.trim_start_matches('#').to_string()),
            _ => None,
        })
        .collect()
}

fn unigram_distribution(corpus: &Corpus) -> BTreeMap<String, f64> {
    let mut counts: BTreeMap<String, f64> = BTreeMap::new();
    let mut total = 0.0f64;
    for tweet in corpus.tweets() {
        for token in lm_tokens(&tweet.text) {
            *counts.entry(token).or_insert(0.0) += 1.0;
            total += 1.0;
        }
    }
    if total > 0.0 {
        for v in counts.values_mut() {
            *v /= total;
        }
    }
    counts
}

/// Build the smoothed topic model from a topic corpus and a background
/// corpus (commonly the full collection).
pub fn build_lm(
    topic_corpus: &Corpus,
    background: &Corpus,
    lambda: f64,
) -> Result<TopicLanguageModel> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "lambda must be in (0, 1), got {lambda}"
        )));
    }
    if topic_corpus.is_empty() || background.is_empty() {
        return Err(Error::InvalidParameter(
            "topic and background corpora must be non-empty".into(),
        ));
    }
    let topic = unigram_distribution(topic_corpus);
    let bg = unigram_distribution(background);
    let vocab: std::collections::BTreeSet<&String> = topic.keys().chain(bg.keys()).collect();
    if vocab.is_empty() {
        return Err(Error::InvalidParameter(
            "corpora contain no scoreable tokens".into(),
        ));
    }
    let floor = (1.0 - lambda) / vocab.len() as f64;
    Ok(TopicLanguageModel {
        topic,
        background: bg,
        lambda,
        floor,
    })
}

impl TopicLanguageModel {
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn vocab_size(&self) -> usize {
        let vocab: std::collections::BTreeSet<&String> =
            self.topic.keys().chain(self.background.keys()).collect();
        vocab.len()
    }

    /// Smoothed probability of one (lowercased) token. Strictly positive.
    pub fn prob(&self, token: &str) -> f64 {
        let pt = self.topic.get(token).copied().unwrap_or(0.0);
        let pb = self.background.get(token).copied().unwrap_or(0.0);
        if pt == 0.0 && pb == 0.0 {
            return self.floor;
        }
        (self.lambda * pt + (1.0 - self.lambda) * pb).max(self.floor.min(1e-300))
    }

    /// `P_T(tweet | topic)`: geometric mean of per-token probabilities.
    /// Tweets with no scoreable tokens get the uniform floor.
    pub fn relevance_score(&self, tweet: &Tweet) -> f64 {
        self.relevance_of_text(&tweet.text)
    }

    pub fn relevance_of_text(&self, text: &str) -> f64 {
        let tokens = lm_tokens(text);
        if tokens.is_empty() {
            return self.floor;
        }
        let log_sum: f64 = tokens.iter().map(|t| self.prob(t).ln()).sum();
        (log_sum / tokens.len() as f64).exp()
    }

    /// Write `word<TAB>p_topic<TAB>p_background` lines over the union
    /// vocabulary. The mixing weight is supplied again on read.
    pub fn write_tsv<W: Write>(&self, mut w: W) -> Result<()> {
        let vocab: std::collections::BTreeSet<&String> =
            self.topic.keys().chain(self.background.keys()).collect();
        for word in vocab {
            let pt = self.topic.get(word).copied().unwrap_or(0.0);
            let pb = self.background.get(word).copied().unwrap_or(0.0);
            writeln!(w, "{word}\t{pt}\t{pb}")?;
        }
        Ok(())
    }

    pub fn read_tsv<R: BufRead>(reader: R, lambda: f64) -> Result<TopicLanguageModel> {
        if !(lambda > 0.0 && lambda < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "lambda must be in (0, 1), got {lambda}"
            )));
        }
        let mut topic = BTreeMap::new();
        let mut background = BTreeMap::new();
        let mut vocab = 0usize;
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 {
                return Err(Error::Format {
                    what: "language model",
                    line: lineno + 1,
                    msg: "expected word<TAB>p_topic<TAB>p_background".into(),
                });
            }
            let pt: f64 = fields[1].parse().map_err(|_| Error::Format {
                what: "language model",
                line: lineno + 1,
                msg: "bad topic probability".into(),
            })?;
            let pb: f64 = fields[2].parse().map_err(|_| Error::Format {
                what: "language model",
                line: lineno + 1,
                msg: "bad background probability".into(),
            })?;
            if pt > 0.0 {
                topic.insert(fields[0].to_string(), pt);
            }
            if pb > 0.0 {
                background.insert(fields[0].to_string(), pb);
            }
            vocab += 1;
        }
        if vocab == 0 {
            return Err(Error::InvalidParameter("empty language model file".into()));
        }
        Ok(TopicLanguageModel {
            topic,
            background,
            lambda,
            floor: (1.0 - lambda) / vocab as f64,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Tweet;

    fn corpus_of(texts: &[&str]) -> Corpus {
        let tweets: Vec<Tweet> = texts
            .iter()
            .enumerate()
            .map(|(i, t)| Tweet::new(format!("t{i}"), "u", *t, i as i64, None, 0))
            .collect();
        Corpus::from_tweets("demo", tweets).unwrap()
    }

    #[test]
    fn identical_corpora_collapse_the_mixture() {
        let c = corpus_of(&["alpha beta", "beta gamma"]);
        let lm = build_lm(&c, &c, 0.8).unwrap();
        // p_topic = p_bg so the mixture equals either distribution
        assert!((lm.prob("beta") - 0.5).abs() < 1e-12);
        assert!((lm.prob("alpha") - 0.25).abs() < 1e-12);
    }

    #[test]
    fn background_only_word_scales_by_one_minus_lambda() {
        let topic = corpus_of(&["alpha alpha"]);
        let bg = corpus_of(&["omega omega"]);
        let lm = build_lm(&topic, &bg, 0.8).unwrap();
        assert!((lm.prob("omega") - 0.2).abs() < 1e-12);
    }

    #[test]
    fn distributions_normalize_and_stay_positive() {
        let topic = corpus_of(&["one two three", "two three four"]);
        let bg = corpus_of(&["five six", "six seven one"]);
        let lm = build_lm(&topic, &bg, DEFAULT_LAMBDA).unwrap();
        let tsum: f64 = lm.topic.values().sum();
        let bsum: f64 = lm.background.values().sum();
        assert!((tsum - 1.0).abs() < 1e-9);
        assert!((bsum - 1.0).abs() < 1e-9);
        for w in ["one", "two", "five", "never_seen_word"] {
            assert!(lm.prob(w) > 0.0);
        }
    }

    #[test]
    fn uniform_model_scores_one_over_v() {
        let c = corpus_of(&["a1 b1 c1 d1"]);
        let lm = build_lm(&c, &c, 0.5).unwrap();
        let t = Tweet::new("q", "u", "a1 c1", 0, None, 0);
        assert!((lm.relevance_score(&t) - 0.25).abs() < 1e-12);
    }

    #[test]
    fn geometric_mean_hand_check() {
        // build a model where two tokens have known probabilities, then
        // verify exp((ln p1 + ln p2)/2)
        let c = corpus_of(&["x y"]);
        let lm = TopicLanguageModel {
            topic: BTreeMap::from([("p1".into(), 0.1), ("p2".into(), 0.001)]),
            background: BTreeMap::new(),
            lambda: 0.999999999999,
            floor: 1e-12,
        };
        let _ = c;
        let t = Tweet::new("q", "u", "p1 p2", 0, None, 0);
        let score = lm.relevance_score(&t);
        assert!((score - 0.01).abs() < 1e-6, "got {score}");
    }

    #[test]
    fn token_order_and_duplication_invariance() {
        let topic = corpus_of(&["alpha beta gamma", "beta gamma delta"]);
        let lm = build_lm(&topic, &topic, 0.8).unwrap();
        let a = lm.relevance_of_text("alpha beta gamma");
        let b = lm.relevance_of_text("gamma alpha beta");
        assert!((a - b).abs() < 1e-12);
        let doubled = lm.relevance_of_text("alpha beta gamma alpha beta gamma");
        assert!((a - doubled).abs() < 1e-12);
    }

    #[test]
    fn better_token_strictly_improves_score() {
        let topic = corpus_of(&["common common common rare"]);
        let lm = build_lm(&topic, &topic, 0.8).unwrap();
        let low = lm.relevance_of_text("rare rare");
        let high = lm.relevance_of_text("rare common");
        assert!(high > low);
    }

    #[test]
    fn empty_tweet_gets_the_floor() {
        let c = corpus_of(&["alpha beta"]);
        let lm = build_lm(&c, &c, 0.8).unwrap();
        let t = Tweet::new("q", "u", "@mention https://x.co !!!", 0, None, 0);
        assert_eq!(lm.relevance_score(&t), lm.floor);
    }

    #[test]
    fn bad_lambda_rejected() {
        let c = corpus_of(&["alpha"]);
        assert!(build_lm(&c, &c, 0.0).is_err());
        assert!(build_lm(&c, &c, 1.0).is_err());
    }

    #[test]
    fn tsv_round_trip() {
        let topic = corpus_of(&["alpha beta #gamma", "beta delta"]);
        let bg = corpus_of(&["omega beta", "alpha omega psi"]);
        let lm = build_lm(&topic, &bg, 0.8).unwrap();
        let mut buf = Vec::new();
        lm.write_tsv(&mut buf).unwrap();
        let back = TopicLanguageModel::read_tsv(&buf[..], 0.8).unwrap();
        for w in ["alpha", "beta", "gamma", "omega", "psi", "unseen"] {
            assert!(
                (lm.prob(w) - back.prob(w)).abs() < 1e-12,
                "probability drift for {w}"
            );
        }
    }
}
