//! Word lists backing feature extraction: dictionary, offensive words,
//! and stopwords. Each ships as a plain text file, one word per line;
//! the copies under `assets/` are compiled in as the defaults.

use std::collections::HashSet;
use std::fs;
use std::path::Path;
use std::sync::OnceLock;

use crate::error::{Error, Result};

const DICTIONARY: &str = include_str!("../assets/dictionary.txt");
const OFFENSIVE: &str = include_str!("../assets/offensive.txt");
const STOPWORDS: &str = include_str!("../assets/stopwords.txt");

/// The three word lists used by articulation features and SumBasic.
#[derive(Debug, Clone)]
pub struct Lexicons {
    dictionary: HashSet<String>,
    offensive: HashSet<String>,
    stopwords: HashSet<String>,
}

fn parse_words(text: &str) -> HashSet<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.to_lowercase())
        .collect()
}

impl Lexicons {
    /// The compiled-in default lists.
    pub fn builtin() -> &'static Lexicons {
        static BUILTIN: OnceLock<Lexicons> = OnceLock::new();
        BUILTIN.get_or_init(|| Lexicons {
            dictionary: parse_words(DICTIONARY),
            offensive: parse_words(OFFENSIVE),
            stopwords: parse_words(STOPWORDS),
        })
    }

    /// Load from files, one word per line. Empty lists are rejected.
    pub fn from_files(dictionary: &Path, offensive: &Path, stopwords: &Path) -> Result<Lexicons> {
        let lex = Lexicons {
            dictionary: parse_words(&fs::read_to_string(dictionary)?),
            offensive: parse_words(&fs::read_to_string(offensive)?),
            stopwords: parse_words(&fs::read_to_string(stopwords)?),
        };
        if lex.dictionary.is_empty() || lex.offensive.is_empty() || lex.stopwords.is_empty() {
            return Err(Error::InvalidParameter(
                "lexicon files must not be empty".into(),
            ));
        }
        Ok(lex)
    }

    pub fn in_dictionary(&self, word: &str) -> bool {
        self.dictionary.contains(&word.to_lowercase())
    }

    pub fn is_offensive(&self, word: &str) -> bool {
        self.offensive.contains(&word.to_lowercase())
    }

    pub fn is_stopword(&self, word: &str) -> bool {
        self.stopwords.contains(&word.to_lowercase())
    }

    pub fn stopwords(&self) -> &HashSet<String> {
        &self.stopwords
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_lists_are_populated() {
        let lex = Lexicons::builtin();
        assert!(lex.in_dictionary("the"));
        assert!(lex.is_stopword("the"));
        assert!(lex.is_stopword("rt"));
        assert!(lex.is_offensive("f***ing"));
        assert!(!lex.in_dictionary("zxqv"));
    }

    #[test]
    fn lookups_fold_case() {
        let lex = Lexicons::builtin();
        assert!(lex.in_dictionary("The"));
        assert!(lex.is_stopword("BEFORE"));
    }
}
