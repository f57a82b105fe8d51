//! Corpus ingestion, validation, and indexing.
//!
//! Input is one JSON record per line with fields `id`, `user_id`, `text`,
//! `timestamp`, `retweeted_user_id` (nullable), and `retweet_count`;
//! unknown fields are ignored. Malformed lines are skipped and counted,
//! never fatal.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tokenizer::{tokenize, TokenKind, TokenStream};

/// Maximum tweet text length in characters.
pub const MAX_TEXT_CHARS: usize = 1000;

/// One post. `is_retweet` is derived: true iff `retweeted_user_id` is
/// present or the normalized text begins with the retweet marker.
#[derive(Debug, Clone, PartialEq)]
pub struct Tweet {
    pub id: String,
    pub user_id: String,
    pub text: String,
    pub timestamp: i64,
    pub retweeted_user_id: Option<String>,
    pub retweet_count: u64,
    pub is_retweet: bool,
}

impl Tweet {
    pub fn new(
        id: impl Into<String>,
        user_id: impl Into<String>,
        text: impl Into<String>,
        timestamp: i64,
        retweeted_user_id: Option<String>,
        retweet_count: u64,
    ) -> Self {
        let text = text.into();
        let is_retweet = retweeted_user_id.is_some()
            || tokenize(&text)
                .tokens
                .first()
                .map_or(false, |t| t.kind == TokenKind::RetweetMarker);
        Tweet {
            id: id.into(),
            user_id: user_id.into(),
            text,
            timestamp,
            retweeted_user_id,
            retweet_count,
            is_retweet,
        }
    }

    pub fn tokens(&self) -> TokenStream {
        tokenize(&self.text)
    }

    /// Hashtags of this tweet: lowercase, '#'-stripped, deduplicated.
    pub fn hashtags(&self) -> BTreeSet<String> {
        hashtags_in(&self.text)
    }
}

/// Hashtags contained in a text: lowercase, '#'-stripped, deduplicated.
pub fn hashtags_in(text: &str) -> BTreeSet<String> {
    tokenize(text)
        .surfaces_of(TokenKind::Hashtag)
        .map(|s| s.trim_start_matches('#').to_string())
        .collect()
}

/// The token-level key under which near-duplicate tweets collapse:
/// retweet prefix and mentions removed, lowercased, whitespace collapsed.
pub fn dedup_key(text: &str) -> String {
    let stream = tokenize(text);
    let had_marker = stream
        .tokens
        .first()
        .map_or(false, |t| t.kind == TokenKind::RetweetMarker);
    let mut parts: Vec<String> = Vec::new();
    let mut leading = true;
    for tok in &stream.tokens {
        match tok.kind {
            TokenKind::RetweetMarker | TokenKind::Mention => continue,
            TokenKind::Punctuation if leading && had_marker && tok.surface == ":" => {
                // the colon that closes an "RT @user:" prefix
                leading = false;
                continue;
            }
            _ => {
                leading = false;
                parts.push(tok.surface.to_lowercase());
            }
        }
    }
    parts.join(" ")
}

#[derive(Serialize, Deserialize)]
struct TweetRecord {
    id: String,
    user_id: String,
    text: String,
    timestamp: i64,
    #[serde(default)]
    retweeted_user_id: Option<String>,
    #[serde(default)]
    retweet_count: u64,
}

impl From<&Tweet> for TweetRecord {
    fn from(t: &Tweet) -> Self {
        TweetRecord {
            id: t.id.clone(),
            user_id: t.user_id.clone(),
            text: t.text.clone(),
            timestamp: t.timestamp,
            retweeted_user_id: t.retweeted_user_id.clone(),
            retweet_count: t.retweet_count,
        }
    }
}

/// An ingested, indexed, immutable tweet collection.
#[derive(Debug, Clone)]
pub struct Corpus {
    topic: String,
    tweets: Vec<Tweet>,
    hashtag_index: BTreeMap<String, BTreeSet<String>>,
    user_index: BTreeMap<String, BTreeSet<String>>,
    id_index: HashMap<String, usize>,
}

/// Result of an ingest run: the corpus plus the count of skipped lines.
#[derive(Debug)]
pub struct IngestReport {
    pub corpus: Corpus,
    pub skipped: usize,
}

impl Corpus {
    /// Build a corpus from tweets already in memory. Fails on duplicate ids.
    pub fn from_tweets(topic: impl Into<String>, tweets: Vec<Tweet>) -> Result<Corpus> {
        let topic = topic.into();
        let mut corpus = Corpus {
            topic,
            tweets: Vec::with_capacity(tweets.len()),
            hashtag_index: BTreeMap::new(),
            user_index: BTreeMap::new(),
            id_index: HashMap::new(),
        };
        for tweet in tweets {
            if corpus.id_index.contains_key(&tweet.id) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate tweet id {:?}",
                    tweet.id
                )));
            }
            corpus.push_indexed(tweet);
        }
        Ok(corpus)
    }

    fn push_indexed(&mut self, tweet: Tweet) {
        let idx = self.tweets.len();
        for tag in tweet.hashtags() {
            self.hashtag_index
                .entry(tag)
                .or_default()
                .insert(tweet.id.clone());
        }
        self.user_index
            .entry(tweet.user_id.clone())
            .or_default()
            .insert(tweet.id.clone());
        self.id_index.insert(tweet.id.clone(), idx);
        self.tweets.push(tweet);
    }

    /// Ingest a line-delimited record file. Invalid lines are skipped and
    /// counted. Errors: unreadable file, or zero valid records.
    pub fn ingest(path: &Path, topic: &str) -> Result<IngestReport> {
        let file = File::open(path)?;
        Self::ingest_reader(BufReader::new(file), topic)
    }

    pub fn ingest_reader<R: BufRead>(reader: R, topic: &str) -> Result<IngestReport> {
        let mut corpus = Corpus {
            topic: topic.to_string(),
            tweets: Vec::new(),
            hashtag_index: BTreeMap::new(),
            user_index: BTreeMap::new(),
            id_index: HashMap::new(),
        };
        let mut skipped = 0usize;
        for line in reader.lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let record: TweetRecord = match serde_json::from_str(&line) {
                Ok(r) => r,
                Err(_) => {
                    skipped += 1;
                    continue;
                }
            };
            if record.id.is_empty()
                || record.user_id.is_empty()
                || record.text.chars().count() > MAX_TEXT_CHARS
                || corpus.id_index.contains_key(&record.id)
            {
                skipped += 1;
                continue;
            }
            corpus.push_indexed(Tweet::new(
                record.id,
                record.user_id,
                record.text,
                record.timestamp,
                record.retweeted_user_id,
                record.retweet_count,
            ));
        }
        if corpus.tweets.is_empty() {
            return Err(Error::EmptyCorpus { skipped });
        }
        Ok(IngestReport { corpus, skipped })
    }

    /// Write the corpus back out in the canonical line-delimited format.
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> Result<()> {
        for tweet in &self.tweets {
            let record = TweetRecord::from(tweet);
            serde_json::to_writer(&mut w, &record)
                .map_err(|e| Error::Format {
                    what: "corpus record",
                    line: 0,
                    msg: e.to_string(),
                })?;
            w.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn topic(&self) -> &str {
        &self.topic
    }

    pub fn tweets(&self) -> &[Tweet] {
        &self.tweets
    }

    pub fn len(&self) -> usize {
        self.tweets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tweets.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&Tweet> {
        self.id_index.get(id).map(|&i| &self.tweets[i])
    }

    /// hashtag (lowercase, no '#') → ids of tweets containing it.
    pub fn hashtag_index(&self) -> &BTreeMap<String, BTreeSet<String>> {
        &self.hashtag_index
    }

    /// user id → ids of that user's tweets.
    pub fn user_index(&self) -> &BTreeMap<String, BTreeSet<String>> {
        &self.user_index
    }

    /// Tweets whose text contains any of the given lowercase terms as a
    /// word or hashtag token. Used to carve the topic subset for the
    /// topic language model.
    pub fn subset_matching_terms(&self, terms: &[String]) -> Corpus {
        let term_set: BTreeSet<String> = terms.iter().map(|t| t.to_lowercase()).collect();
        let tweets: Vec<Tweet> = self
            .tweets
            .iter()
            .filter(|t| {
                tokenize(&t.text).tokens.iter().any(|tok| match tok.kind {
                    TokenKind::Word => term_set.contains(&tok.surface.to_lowercase()),
                    TokenKind::Hashtag => term_set.contains(tok.surface.trim_start_matches('#')),
                    _ => false,
                })
            })
            .cloned()
            .collect();
        // ids are unique in self, so this cannot fail
        Corpus::from_tweets(self.topic.clone(), tweets).expect("subset of unique ids")
    }

    /// One representative per normalized-text equivalence class. The
    /// representative is the earliest tweet (ties: smallest id) and
    /// carries the maximum retweet count over its class. Output is sorted
    /// by id.
    pub fn unique_candidates(&self) -> Vec<Tweet> {
        let mut classes: BTreeMap<String, Vec<&Tweet>> = BTreeMap::new();
        for tweet in &self.tweets {
            classes.entry(dedup_key(&tweet.text)).or_default().push(tweet);
        }
        let mut out: Vec<Tweet> = Vec::with_capacity(classes.len());
        for (_, members) in classes {
            let rep = members
                .iter()
                .min_by(|a, b| a.timestamp.cmp(&b.timestamp).then_with(|| a.id.cmp(&b.id)))
                .expect("non-empty class");
            let max_count = members.iter().map(|t| t.retweet_count).max().unwrap_or(0);
            let mut rep = (*rep).clone();
            rep.retweet_count = max_count;
            out.push(rep);
        }
        out.sort_by(|a, b| a.id.cmp(&b.id));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn line(id: &str, user: &str, text: &str, ts: i64) -> String {
        format!(
            r#"{{"id":"{id}","user_id":"{user}","text":"{text}","timestamp":{ts},"retweeted_user_id":null,"retweet_count":0}}"#
        )
    }

    #[test]
    fn ingest_three_valid_lines() {
        let data = [
            line("t1", "u1", "hello #world", 10),
            line("t2", "u2", "plain words", 11),
            line("t3", "u1", "more #world talk", 12),
        ]
        .join("\n");
        let report = Corpus::ingest_reader(Cursor::new(data), "demo").unwrap();
        assert_eq!(report.corpus.len(), 3);
        assert_eq!(report.skipped, 0);
        assert_eq!(report.corpus.hashtag_index()["world"].len(), 2);
        assert_eq!(report.corpus.user_index()["u1"].len(), 2);
    }

    #[test]
    fn ingest_skips_malformed() {
        let data = format!(
            "{}\nnot json at all\n{}",
            line("t1", "u1", "a", 1),
            line("t2", "u2", "b", 2)
        );
        let report = Corpus::ingest_reader(Cursor::new(data), "demo").unwrap();
        assert_eq!(report.corpus.len(), 2);
        assert_eq!(report.skipped, 1);
    }

    #[test]
    fn ingest_rejects_duplicate_id() {
        let data = format!("{}\n{}", line("t1", "u1", "a", 1), line("t1", "u2", "b", 2));
        let report = Corpus::ingest_reader(Cursor::new(data), "demo").unwrap();
        assert_eq!(report.corpus.len(), 1);
        assert_eq!(report.skipped, 1);
        assert_eq!(report.corpus.get("t1").unwrap().user_id, "u1");
    }

    #[test]
    fn ingest_empty_is_an_error() {
        let err = Corpus::ingest_reader(Cursor::new("garbage\n"), "demo").unwrap_err();
        assert!(matches!(err, Error::EmptyCorpus { skipped: 1 }));
    }

    #[test]
    fn ingest_ignores_unknown_fields_and_caps_length() {
        let ok = r#"{"id":"t1","user_id":"u1","text":"x","timestamp":1,"lang":"en","extra":[1,2]}"#;
        let long = format!(
            r#"{{"id":"t2","user_id":"u1","text":"{}","timestamp":1}}"#,
            "x".repeat(MAX_TEXT_CHARS + 1)
        );
        let report =
            Corpus::ingest_reader(Cursor::new(format!("{ok}\n{long}")), "demo").unwrap();
        assert_eq!(report.corpus.len(), 1);
        assert_eq!(report.skipped, 1);
    }

    #[test]
    fn retweet_flag_derivation() {
        let explicit = Tweet::new("t1", "u1", "anything", 0, Some("v".into()), 0);
        assert!(explicit.is_retweet);
        let marker = Tweet::new("t2", "u1", "RT @v: anything", 0, None, 0);
        assert!(marker.is_retweet);
        let plain = Tweet::new("t3", "u1", "anything", 0, None, 0);
        assert!(!plain.is_retweet);
    }

    #[test]
    fn hashtags_case_fold_and_dedup() {
        let t = Tweet::new("t1", "u1", "#MAGA #maga go", 0, None, 0);
        let tags = t.hashtags();
        assert_eq!(tags.len(), 1);
        assert!(tags.contains("maga"));

        let none = Tweet::new("t2", "u1", "no tags here", 0, None, 0);
        assert!(none.hashtags().is_empty());

        let t = Tweet::new("t3", "u1", "#VoteProlife text #Defundpp", 0, None, 0);
        let tags = t.hashtags();
        assert!(tags.contains("voteprolife") && tags.contains("defundpp"));
        assert_eq!(tags.len(), 2);
    }

    #[test]
    fn unique_candidates_collapse_retweets() {
        let tweets = vec![
            Tweet::new("t1", "u1", "Ban the thing now", 5, None, 2),
            Tweet::new("t2", "u2", "RT @u1: Ban the thing now", 9, Some("u1".into()), 0),
            Tweet::new("t3", "u3", "other text", 7, None, 0),
        ];
        let corpus = Corpus::from_tweets("demo", tweets).unwrap();
        let cands = corpus.unique_candidates();
        assert_eq!(cands.len(), 2);
        assert!(cands.iter().any(|t| t.id == "t1"));
        assert!(cands.iter().any(|t| t.id == "t3"));
    }

    #[test]
    fn unique_candidates_distinct_texts_pass_through() {
        let tweets = vec![
            Tweet::new("t1", "u1", "one", 1, None, 0),
            Tweet::new("t2", "u2", "two", 2, None, 0),
            Tweet::new("t3", "u3", "three", 3, None, 0),
        ];
        let corpus = Corpus::from_tweets("demo", tweets).unwrap();
        assert_eq!(corpus.unique_candidates().len(), 3);
    }

    #[test]
    fn unique_candidates_pick_earliest_with_max_count() {
        let tweets = vec![
            Tweet::new("t1", "u1", "same words", 5, None, 2),
            Tweet::new("t2", "u2", "Same words", 3, None, 9),
        ];
        let corpus = Corpus::from_tweets("demo", tweets).unwrap();
        let cands = corpus.unique_candidates();
        assert_eq!(cands.len(), 1);
        assert_eq!(cands[0].id, "t2");
        assert_eq!(cands[0].retweet_count, 9);
    }

    #[test]
    fn hashtag_index_round_trip() {
        let tweets = vec![
            Tweet::new("t1", "u1", "#One and #two", 1, None, 0),
            Tweet::new("t2", "u2", "#TWO again", 2, None, 0),
        ];
        let corpus = Corpus::from_tweets("demo", tweets).unwrap();
        for (tag, ids) in corpus.hashtag_index() {
            for id in ids {
                assert!(corpus.get(id).unwrap().hashtags().contains(tag));
            }
        }
    }
}
