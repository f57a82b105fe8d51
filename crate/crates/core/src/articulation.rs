//! Tweet articulation scoring: how well-written a tweet is.
//!
//! A logistic regression over tweet-local features — part-of-speech tag
//! ratios and hashed tag n-grams, out-of-vocabulary ratio, offensive-word
//! ratio, stopword ratio, and length statistics — trained on a labeled
//! articulate / non-articulate set by full-batch gradient descent with an
//! L2 penalty, with k-fold cross-validation accuracies reported.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::corpus::Tweet;
use crate::error::{Error, Result};
use crate::lexicons::Lexicons;
use crate::pos::{tag_token, PosTag, TAG_COUNT};
use crate::tokenizer::{tokenize, TokenKind};

/// Size of the hashed POS n-gram block.
pub const POS_NGRAM_DIM: usize = 1024;
/// Total feature vector dimension.
pub const FEATURE_DIM: usize = TAG_COUNT + 5 + POS_NGRAM_DIM;

const SCHEMA: &str = "pos16:ratios3:len2:posngram1024:v1";

/// Tweet-local articulation features.
#[derive(Debug, Clone)]
pub struct ArticulationFeatures {
    /// Fraction of tokens per POS tag; sums to 1 for non-empty streams.
    pub pos_tag_ratios: [f64; TAG_COUNT],
    /// Fraction of word tokens absent from the dictionary.
    pub oov_ratio: f64,
    /// Fraction of word tokens in the offensive lexicon.
    pub offensive_ratio: f64,
    /// Fraction of word tokens in the stopword list.
    pub stopword_ratio: f64,
    /// Character count of the raw text.
    pub tweet_length: usize,
    /// Mean characters per word token.
    pub avg_word_length: f64,
    /// Hashed counts of POS tag bigrams and trigrams.
    pub pos_ngram_counts: Vec<f64>,
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

/// Extract features for one tweet. Total: an empty tweet yields the zero
/// vector with `tweet_length` 0.
pub fn extract_features(tweet: &Tweet, lexicons: &Lexicons) -> ArticulationFeatures {
    let stream = tokenize(&tweet.text);
    let tags: Vec<PosTag> = stream.tokens.iter().map(tag_token).collect();

    let mut pos_tag_ratios = [0.0f64; TAG_COUNT];
    if !tags.is_empty() {
        for &tag in &tags {
            pos_tag_ratios[tag.index()] += 1.0;
        }
        for r in pos_tag_ratios.iter_mut() {
            *r /= tags.len() as f64;
        }
    }

    let words: Vec<&str> = stream.surfaces_of(TokenKind::Word).collect();
    let word_count = words.len() as f64;
    let (mut oov, mut offensive, mut stop, mut chars) = (0.0, 0.0, 0.0, 0.0);
    for w in &words {
        if !lexicons.in_dictionary(w) {
            oov += 1.0;
        }
        if lexicons.is_offensive(w) {
            offensive += 1.0;
        }
        if lexicons.is_stopword(w) {
            stop += 1.0;
        }
        chars += w.chars().count() as f64;
    }

    let mut pos_ngram_counts = vec![0.0f64; POS_NGRAM_DIM];
    let mut buf = String::new();
    for n in 2..=3usize {
        if tags.len() < n {
            break;
        }
        for window in tags.windows(n) {
            buf.clear();
            for t in window {
                buf.push_str(t.name());
                buf.push('|');
            }
            let idx = (fnv1a64(buf.as_bytes()) % POS_NGRAM_DIM as u64) as usize;
            pos_ngram_counts[idx] += 1.0;
        }
    }

    ArticulationFeatures {
        pos_tag_ratios,
        oov_ratio: if word_count > 0.0 { oov / word_count } else { 0.0 },
        offensive_ratio: if word_count > 0.0 {
            offensive / word_count
        } else {
            0.0
        },
        stopword_ratio: if word_count > 0.0 { stop / word_count } else { 0.0 },
        tweet_length: tweet.text.chars().count(),
        avg_word_length: if word_count > 0.0 { chars / word_count } else { 0.0 },
        pos_ngram_counts,
    }
}

impl ArticulationFeatures {
    /// Sparse feature vector; length fields are scaled into [0, ~1].
    pub fn to_sparse(&self) -> Vec<(usize, f64)> {
        let mut out = Vec::new();
        for (i, &r) in self.pos_tag_ratios.iter().enumerate() {
            if r != 0.0 {
                out.push((i, r));
            }
        }
        let base = TAG_COUNT;
        for (off, v) in [
            self.oov_ratio,
            self.offensive_ratio,
            self.stopword_ratio,
            self.tweet_length as f64 / 1000.0,
            (self.avg_word_length / 20.0).min(1.0),
        ]
        .into_iter()
        .enumerate()
        {
            if v != 0.0 {
                out.push((base + off, v));
            }
        }
        let base = TAG_COUNT + 5;
        for (i, &c) in self.pos_ngram_counts.iter().enumerate() {
            if c != 0.0 {
                out.push((base + i, c));
            }
        }
        out
    }
}

/// One labeled training example: text plus articulate (true) or not.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabeledText {
    pub text: String,
    pub label: u8,
}

/// Read the line-delimited labeled set: `{"text": ..., "label": 1|0}`.
pub fn read_labeled<R: BufRead>(reader: R) -> Result<Vec<LabeledText>> {
    let mut out = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: LabeledText = serde_json::from_str(&line).map_err(|e| Error::Format {
            what: "labeled set",
            line: lineno + 1,
            msg: e.to_string(),
        })?;
        if rec.label > 1 {
            return Err(Error::Format {
                what: "labeled set",
                line: lineno + 1,
                msg: format!("label must be 0 or 1, got {}", rec.label),
            });
        }
        out.push(rec);
    }
    Ok(out)
}

/// The compiled-in synthetic labeled set (150 articulate, 150 not).
pub fn builtin_labeled_set() -> Vec<LabeledText> {
    const DATA: &str = include_str!("../assets/articulation_labeled.jsonl");
    read_labeled(DATA.as_bytes()).expect("builtin labeled set parses")
}

/// A trained articulation model.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArticulationModel {
    pub version: u32,
    pub schema_hash: u64,
    pub weights: Vec<f64>,
    pub bias: f64,
    pub fold_accuracies: Vec<f64>,
}

/// Training configuration. Defaults follow the evaluation protocol:
/// L2 strength 1.0 and 5 folds.
#[derive(Debug, Clone)]
pub struct ArticulationConfig {
    pub l2: f64,
    pub folds: usize,
    pub seed: u64,
    pub max_iters: usize,
    pub grad_tol: f64,
}

impl Default for ArticulationConfig {
    fn default() -> Self {
        ArticulationConfig {
            l2: 1.0,
            folds: 5,
            seed: 0,
            max_iters: 5000,
            grad_tol: 1e-6,
        }
    }
}

fn sigmoid(z: f64) -> f64 {
    if z >= 0.0 {
        1.0 / (1.0 + (-z).exp())
    } else {
        let e = z.exp();
        e / (1.0 + e)
    }
}

/// Mean regularized log-loss and its gradient for sparse rows.
/// `loss = -(1/m) Σ [y ln p + (1-y) ln(1-p)] + (λ/(2m)) ||w||²`;
/// the bias is unpenalized.
pub fn loss_and_gradient(
    rows: &[Vec<(usize, f64)>],
    labels: &[f64],
    weights: &[f64],
    bias: f64,
    l2: f64,
) -> (f64, Vec<f64>, f64) {
    let m = labels.len() as f64;
    let mut loss = 0.0;
    let mut grad_w = vec![0.0f64; weights.len()];
    let mut grad_b = 0.0;
    for (row, &y) in rows.iter().zip(labels) {
        let mut z = bias;
        for &(i, x) in row {
            z += weights[i] * x;
        }
        let p = sigmoid(z);
        let eps = 1e-12;
        loss -= y * (p.max(eps)).ln() + (1.0 - y) * ((1.0 - p).max(eps)).ln();
        let d = p - y;
        for &(i, x) in row {
            grad_w[i] += d * x;
        }
        grad_b += d;
    }
    loss /= m;
    grad_b /= m;
    let mut reg = 0.0;
    for (g, &w) in grad_w.iter_mut().zip(weights) {
        *g = *g / m + l2 * w / m;
        reg += w * w;
    }
    loss += l2 * reg / (2.0 * m);
    (loss, grad_w, grad_b)
}

fn gradient_norm(grad_w: &[f64], grad_b: f64) -> f64 {
    (grad_w.iter().map(|g| g * g).sum::<f64>() + grad_b * grad_b).sqrt()
}

/// Full-batch gradient descent with backtracking steps, run to
/// gradient-norm tolerance or the iteration cap.
fn fit(
    rows: &[Vec<(usize, f64)>],
    labels: &[f64],
    l2: f64,
    max_iters: usize,
    grad_tol: f64,
) -> (Vec<f64>, f64) {
    let mut weights = vec![0.0f64; FEATURE_DIM];
    let mut bias = 0.0f64;
    let mut step = 1.0f64;
    let (mut loss, mut grad_w, mut grad_b) = loss_and_gradient(rows, labels, &weights, bias, l2);

    for _ in 0..max_iters {
        if gradient_norm(&grad_w, grad_b) <= grad_tol {
            break;
        }
        loop {
            let trial_w: Vec<f64> = weights
                .iter()
                .zip(&grad_w)
                .map(|(w, g)| w - step * g)
                .collect();
            let trial_b = bias - step * grad_b;
            let (trial_loss, trial_gw, trial_gb) =
                loss_and_gradient(rows, labels, &trial_w, trial_b, l2);
            if trial_loss <= loss || step < 1e-12 {
                weights = trial_w;
                bias = trial_b;
                loss = trial_loss;
                grad_w = trial_gw;
                grad_b = trial_gb;
                step *= 1.1;
                break;
            }
            step *= 0.5;
        }
    }
    (weights, bias)
}

/// Train on labeled (tweet, articulate) pairs with k-fold cross-validation.
pub fn train(
    labeled: &[(Tweet, bool)],
    lexicons: &Lexicons,
    cfg: &ArticulationConfig,
) -> Result<ArticulationModel> {
    let positives = labeled.iter().filter(|(_, y)| *y).count();
    let negatives = labeled.len() - positives;
    if positives < 2 || negatives < 2 {
        return Err(Error::SingleClass);
    }
    if cfg.folds < 2 {
        return Err(Error::InvalidParameter(format!(
            "folds must be at least 2, got {}",
            cfg.folds
        )));
    }

    let rows: Vec<Vec<(usize, f64)>> = labeled
        .iter()
        .map(|(t, _)| extract_features(t, lexicons).to_sparse())
        .collect();
    let labels: Vec<f64> = labeled
        .iter()
        .map(|(_, y)| if *y { 1.0 } else { 0.0 })
        .collect();

    let mut order: Vec<usize> = (0..labeled.len()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    order.shuffle(&mut rng);

    let folds = cfg.folds.min(labeled.len());
    let mut fold_accuracies = Vec::with_capacity(folds);
    for fold in 0..folds {
        let held: Vec<usize> = order
            .iter()
            .enumerate()
            .filter(|(pos, _)| pos % folds == fold)
            .map(|(_, &i)| i)
            .collect();
        let kept: Vec<usize> = order
            .iter()
            .enumerate()
            .filter(|(pos, _)| pos % folds != fold)
            .map(|(_, &i)| i)
            .collect();
        let train_rows: Vec<Vec<(usize, f64)>> = kept.iter().map(|&i| rows[i].clone()).collect();
        let train_labels: Vec<f64> = kept.iter().map(|&i| labels[i]).collect();
        let (w, b) = fit(&train_rows, &train_labels, cfg.l2, cfg.max_iters, cfg.grad_tol);
        let mut correct = 0usize;
        for &i in &held {
            let mut z = b;
            for &(j, x) in &rows[i] {
                z += w[j] * x;
            }
            let predicted = sigmoid(z) >= 0.5;
            if predicted == (labels[i] == 1.0) {
                correct += 1;
            }
        }
        fold_accuracies.push(correct as f64 / held.len().max(1) as f64);
    }

    let (weights, bias) = fit(&rows, &labels, cfg.l2, cfg.max_iters, cfg.grad_tol);
    Ok(ArticulationModel {
        version: 1,
        schema_hash: fnv1a64(SCHEMA.as_bytes()),
        weights,
        bias,
        fold_accuracies,
    })
}

impl ArticulationModel {
    /// `P_A(tweet)`: sigmoid of the linear score over extracted features.
    pub fn score(&self, tweet: &Tweet, lexicons: &Lexicons) -> f64 {
        let mut z = self.bias;
        for (i, x) in extract_features(tweet, lexicons).to_sparse() {
            z += self.weights[i] * x;
        }
        sigmoid(z)
    }

    pub fn mean_cv_accuracy(&self) -> f64 {
        if self.fold_accuracies.is_empty() {
            return 0.0;
        }
        self.fold_accuracies.iter().sum::<f64>() / self.fold_accuracies.len() as f64
    }

    pub fn save<W: Write>(&self, w: W) -> Result<()> {
        serde_json::to_writer(w, self).map_err(|e| Error::Model(e.to_string()))
    }

    pub fn load<R: std::io::Read>(r: R) -> Result<ArticulationModel> {
        let model: ArticulationModel =
            serde_json::from_reader(r).map_err(|e| Error::Model(e.to_string()))?;
        if model.schema_hash != fnv1a64(SCHEMA.as_bytes()) {
            return Err(Error::Model("feature schema mismatch".into()));
        }
        Ok(model)
    }
}

/// Turn labeled texts into labeled tweets with synthetic ids.
pub fn labeled_to_tweets(labeled: &[LabeledText]) -> Vec<(Tweet, bool)> {
    labeled
        .iter()
        .enumerate()
        .map(|(i, l)| {
            (
                Tweet::new(format!("label{i:05}"), "annotator", l.text.clone(), i as i64, None, 0),
                l.label == 1,
            )
        })
        .collect()
}
