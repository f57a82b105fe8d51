//! Latent hashtag posterior estimation.
//!
//! Estimates `P(h | tweet)`, the probability that a tweet would carry a
//! hashtag, treating hashtags as incomplete user annotations. The default
//! predictor is a multinomial logistic regression over hashed character
//! n-grams (n = 1..3) of the hashtag-stripped text, trained by SGD on
//! (stripped text → observed hashtag) pairs. Explicitly present hashtags
//! score 1; hashtags outside vocabulary and tweet score 0.

use std::collections::HashMap;
use std::io::{BufReader, Read, Write};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::corpus::{Corpus, Tweet};
use crate::error::{Error, Result};
use crate::tokenizer::{tokenize, TokenKind};

const MAGIC: &[u8; 8] = b"SHPRED01";

/// Training configuration. Defaults: 2^18 hashed features, 5 epochs,
/// learning rate 0.1 with 1/sqrt(t) decay, vocabulary floor 5.
#[derive(Debug, Clone)]
pub struct PredictorConfig {
    pub vocab_min_freq: u64,
    pub epochs: usize,
    pub learning_rate: f64,
    pub dim: usize,
    pub seed: u64,
}

impl Default for PredictorConfig {
    fn default() -> Self {
        PredictorConfig {
            vocab_min_freq: 5,
            epochs: 5,
            learning_rate: 0.1,
            dim: 1 << 18,
            seed: 0,
        }
    }
}

/// A trained hashtag predictor: softmax over the hashtag vocabulary from
/// hashed character n-gram features.
#[derive(Debug, Clone)]
pub struct HashtagPredictor {
    vocab: Vec<String>,
    vocab_idx: HashMap<String, usize>,
    dim: usize,
    /// Feature-major weights: `weights[f * vocab.len() + c]`.
    weights: Vec<f64>,
    bias: Vec<f64>,
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

/// Lowercased text with all hashtag tokens removed; the featurization
/// input at both train and query time.
pub fn strip_hashtags(text: &str) -> String {
    let stream = tokenize(text);
    let parts: Vec<String> = stream
        .tokens
        .iter()
        .filter(|t| t.kind != TokenKind::Hashtag)
        .map(|t| t.surface.to_lowercase())
        .collect();
    parts.join(" ")
}

/// Hashed character n-gram counts (n = 1..3) as a sparse vector sorted by
/// feature index.
fn features(text: &str, dim: usize) -> Vec<(usize, f64)> {
    let chars: Vec<char> = text.chars().collect();
    let mut counts: HashMap<usize, f64> = HashMap::new();
    let mut buf = String::new();
    for n in 1..=3usize {
        if chars.len() < n {
            break;
        }
        for window in chars.windows(n) {
            buf.clear();
            buf.extend(window.iter());
            let idx = (fnv1a64(buf.as_bytes()) % dim as u64) as usize;
            *counts.entry(idx).or_insert(0.0) += 1.0;
        }
    }
    let mut out: Vec<(usize, f64)> = counts.into_iter().collect();
    out.sort_unstable_by_key(|&(i, _)| i);
    out
}

fn softmax_in_place(scores: &mut [f64]) {
    let max = scores.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut sum = 0.0;
    for s in scores.iter_mut() {
        *s = (*s - max).exp();
        sum += *s;
    }
    for s in scores.iter_mut() {
        *s /= sum;
    }
}

impl HashtagPredictor {
    /// Train on every (hashtag-stripped text, observed hashtag) pair in
    /// the corpus, for hashtags with presence count >= `vocab_min_freq`.
    pub fn train(corpus: &Corpus, cfg: &PredictorConfig) -> Result<HashtagPredictor> {
        // vocabulary: frequency floor, ordered by frequency then name
        let mut freq: HashMap<String, u64> = HashMap::new();
        for tweet in corpus.tweets() {
            for tag in tweet.hashtags() {
                *freq.entry(tag).or_insert(0) += 1;
            }
        }
        let mut vocab: Vec<(String, u64)> = freq
            .into_iter()
            .filter(|&(_, f)| f >= cfg.vocab_min_freq)
            .collect();
        vocab.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        let vocab: Vec<String> = vocab.into_iter().map(|(h, _)| h).collect();
        if vocab.is_empty() {
            return Err(Error::EmptyVocabulary {
                min_freq: cfg.vocab_min_freq as usize,
            });
        }
        let vocab_idx: HashMap<String, usize> = vocab
            .iter()
            .enumerate()
            .map(|(i, h)| (h.clone(), i))
            .collect();

        // one training example per (tweet, vocabulary hashtag it carries)
        let mut tweet_features: Vec<Vec<(usize, f64)>> = Vec::new();
        let mut examples: Vec<(usize, usize)> = Vec::new();
        for tweet in corpus.tweets() {
            let tags: Vec<usize> = tweet
                .hashtags()
                .iter()
                .filter_map(|t| vocab_idx.get(t).copied())
                .collect();
            if tags.is_empty() {
                continue;
            }
            let fv = features(&strip_hashtags(&tweet.text), cfg.dim);
            let fi = tweet_features.len();
            tweet_features.push(fv);
            for class in tags {
                examples.push((fi, class));
            }
        }
        if examples.is_empty() {
            return Err(Error::EmptyVocabulary {
                min_freq: cfg.vocab_min_freq as usize,
            });
        }

        let v = vocab.len();
        let mut weights = vec![0.0f64; cfg.dim * v];
        let mut bias = vec![0.0f64; v];
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut scores = vec![0.0f64; v];
        let mut step = 0u64;

        for _ in 0..cfg.epochs {
            examples.shuffle(&mut rng);
            for &(fi, target) in &examples {
                step += 1;
                let lr = cfg.learning_rate / (step as f64).sqrt();
                let fv = &tweet_features[fi];
                scores.copy_from_slice(&bias);
                for &(f, x) in fv {
                    let row = &weights[f * v..(f + 1) * v];
                    for (c, s) in scores.iter_mut().enumerate() {
                        *s += row[c] * x;
                    }
                }
                softmax_in_place(&mut scores);
                scores[target] -= 1.0; // now the gradient wrt logits
                for &(f, x) in fv {
                    let row = &mut weights[f * v..(f + 1) * v];
                    for (c, g) in scores.iter().enumerate() {
                        row[c] -= lr * g * x;
                    }
                }
                for (c, g) in scores.iter().enumerate() {
                    bias[c] -= lr * g;
                }
            }
        }

        Ok(HashtagPredictor {
            vocab,
            vocab_idx,
            dim: cfg.dim,
            weights,
            bias,
        })
    }

    pub fn vocabulary(&self) -> &[String] {
        &self.vocab
    }

    pub fn vocab_index(&self, hashtag: &str) -> Option<usize> {
        self.vocab_idx.get(hashtag).copied()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Softmax posterior over the whole vocabulary for the tweet's
    /// hashtag-stripped text. Sums to one.
    pub fn model_posteriors(&self, tweet: &Tweet) -> Vec<f64> {
        self.model_posteriors_for_text(&tweet.text)
    }

    pub fn model_posteriors_for_text(&self, text: &str) -> Vec<f64> {
        let v = self.vocab.len();
        let mut scores = self.bias.clone();
        for (f, x) in features(&strip_hashtags(text), self.dim) {
            let row = &self.weights[f * v..(f + 1) * v];
            for (c, s) in scores.iter_mut().enumerate() {
                *s += row[c] * x;
            }
        }
        softmax_in_place(&mut scores);
        scores
    }

    /// `P(h | tweet)`: 1 if the hashtag is explicitly present, 0 if it is
    /// neither present nor in vocabulary, else the model posterior.
    pub fn posterior(&self, tweet: &Tweet, hashtag: &str) -> f64 {
        let tag = hashtag.trim_start_matches('#').to_lowercase();
        if tweet.hashtags().contains(&tag) {
            return 1.0;
        }
        match self.vocab_idx.get(&tag) {
            Some(&idx) => self.model_posteriors(tweet)[idx],
            None => 0.0,
        }
    }

    /// Persist: magic, dimension, vocabulary, biases, then the non-zero
    /// weights as (index, value) pairs, all little-endian.
    pub fn save<W: Write>(&self, mut w: W) -> Result<()> {
        w.write_all(MAGIC)?;
        w.write_all(&(self.dim as u64).to_le_bytes())?;
        w.write_all(&(self.vocab.len() as u64).to_le_bytes())?;
        for h in &self.vocab {
            let bytes = h.as_bytes();
            w.write_all(&(bytes.len() as u32).to_le_bytes())?;
            w.write_all(bytes)?;
        }
        for b in &self.bias {
            w.write_all(&b.to_le_bytes())?;
        }
        let nnz = self.weights.iter().filter(|&&x| x != 0.0).count() as u64;
        w.write_all(&nnz.to_le_bytes())?;
        for (i, &x) in self.weights.iter().enumerate() {
            if x != 0.0 {
                w.write_all(&(i as u64).to_le_bytes())?;
                w.write_all(&x.to_le_bytes())?;
            }
        }
        Ok(())
    }

    pub fn load<R: Read>(reader: R) -> Result<HashtagPredictor> {
        let mut r = BufReader::new(reader);
        let mut magic = [0u8; 8];
        r.read_exact(&mut magic)?;
        if &magic != MAGIC {
            return Err(Error::Model("bad magic; not a hashtag predictor".into()));
        }
        let dim = read_u64(&mut r)? as usize;
        let vocab_len = read_u64(&mut r)? as usize;
        let mut vocab = Vec::with_capacity(vocab_len);
        for _ in 0..vocab_len {
            let len = read_u32(&mut r)? as usize;
            let mut buf = vec![0u8; len];
            r.read_exact(&mut buf)?;
            vocab.push(String::from_utf8(buf).map_err(|_| Error::Model("bad vocab utf8".into()))?);
        }
        let mut bias = Vec::with_capacity(vocab_len);
        for _ in 0..vocab_len {
            bias.push(read_f64(&mut r)?);
        }
        let nnz = read_u64(&mut r)? as usize;
        let mut weights = vec![0.0f64; dim * vocab_len];
        for _ in 0..nnz {
            let idx = read_u64(&mut r)? as usize;
            let val = read_f64(&mut r)?;
            if idx >= weights.len() {
                return Err(Error::Model(format!("weight index {idx} out of range")));
            }
            weights[idx] = val;
        }
        let vocab_idx = vocab
            .iter()
            .enumerate()
            .map(|(i, h)| (h.clone(), i))
            .collect();
        Ok(HashtagPredictor {
            vocab,
            vocab_idx,
            dim,
            weights,
            bias,
        })
    }
}

fn read_u64<R: Read>(r: &mut R) -> Result<u64> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf)?;
    Ok(u64::from_le_bytes(buf))
}

fn read_u32<R: Read>(r: &mut R) -> Result<u32> {
    let mut buf = [0u8; 4];
    r.read_exact(&mut buf)?;
    Ok(u32::from_le_bytes(buf))
}

fn read_f64<R: Read>(r: &mut R) -> Result<f64> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf)?;
    Ok(f64::from_le_bytes(buf))
}
