//! Tweet text tokenization.
//!
//! Splits raw text into typed tokens: words, hashtags, mentions, URLs,
//! emoticons, numbers, punctuation, and the leading retweet marker. The
//! token stream defines the *normalized* form of a tweet — token surfaces
//! joined by single spaces — and tokenizing a normalized text reproduces
//! the same stream.

use serde::{Deserialize, Serialize};

/// Kind of a single token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TokenKind {
    Word,
    Hashtag,
    Mention,
    Url,
    Emoticon,
    Punctuation,
    Number,
    RetweetMarker,
}

/// One token: its surface form and kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub kind: TokenKind,
}

impl Token {
    fn new(surface: impl Into<String>, kind: TokenKind) -> Self {
        Token {
            surface: surface.into(),
            kind,
        }
    }
}

/// Ordered tokens of one tweet.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TokenStream {
    pub tokens: Vec<Token>,
}

impl TokenStream {
    /// Surfaces joined by single spaces. This is the canonical normalized
    /// text: `tokenize(normalized_text())` yields the same stream.
    pub fn normalized_text(&self) -> String {
        let mut out = String::new();
        for (i, tok) in self.tokens.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&tok.surface);
        }
        out
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Token> {
        self.tokens.iter()
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Surfaces of tokens with the given kind.
    pub fn surfaces_of(&self, kind: TokenKind) -> impl Iterator<Item = &str> {
        self.tokens
            .iter()
            .filter(move |t| t.kind == kind)
            .map(|t| t.surface.as_str())
    }
}

// Emoticons recognized at punctuation boundaries, longest first.
const EMOTICONS: &[&str] = &[
    ":-)", ":-(", ":-D", ":-P", ":-/", ":')", ":'(", ";-)", ":)", ":(", ":D", ":P", ":/", ";)",
    "<3",
];

fn is_tag_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\'' || c == '*'
}

fn match_emoticon(rest: &[char]) -> Option<&'static str> {
    for emo in EMOTICONS {
        let pat: Vec<char> = emo.chars().collect();
        if rest.len() >= pat.len() && rest[..pat.len()] == pat[..] {
            return Some(emo);
        }
    }
    None
}

fn starts_with_ci(rest: &[char], prefix: &str) -> bool {
    let pat: Vec<char> = prefix.chars().collect();
    rest.len() >= pat.len()
        && rest[..pat.len()]
            .iter()
            .zip(&pat)
            .all(|(a, b)| a.to_lowercase().eq(b.to_lowercase()))
}

fn is_url_start(rest: &[char]) -> bool {
    if starts_with_ci(rest, "http://") || starts_with_ci(rest, "https://") {
        return true;
    }
    starts_with_ci(rest, "www.") && rest.len() > 4 && rest[4].is_alphanumeric()
}

/// Tokenize raw tweet text. Total: never fails; empty text yields an empty
/// stream. Hashtag and mention surfaces are lowercased (they are
/// case-insensitive identifiers); word surfaces keep their case.
pub fn tokenize(text: &str) -> TokenStream {
    let chars: Vec<char> = text.chars().collect();
    let n = chars.len();
    let mut tokens: Vec<Token> = Vec::new();
    let mut i = 0;

    while i < n {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }

        // Hashtag: '#' followed by letters/digits/underscore.
        if c == '#' && i + 1 < n && is_tag_char(chars[i + 1]) {
            let mut j = i + 1;
            while j < n && is_tag_char(chars[j]) {
                j += 1;
            }
            let body: String = chars[i + 1..j].iter().collect();
            tokens.push(Token::new(format!("#{}", body.to_lowercase()), TokenKind::Hashtag));
            i = j;
            continue;
        }

        // Mention: '@' followed by a handle.
        if c == '@' && i + 1 < n && is_tag_char(chars[i + 1]) {
            let mut j = i + 1;
            while j < n && is_tag_char(chars[j]) {
                j += 1;
            }
            let body: String = chars[i + 1..j].iter().collect();
            tokens.push(Token::new(format!("@{}", body.to_lowercase()), TokenKind::Mention));
            i = j;
            continue;
        }

        // URL: scheme prefix or www. domain; runs to whitespace, trailing
        // sentence punctuation peeled off.
        if is_url_start(&chars[i..]) {
            let mut j = i;
            while j < n && !chars[j].is_whitespace() {
                j += 1;
            }
            while j > i && matches!(chars[j - 1], '.' | ',' | '!' | '?' | ';' | ':') {
                j -= 1;
            }
            let surface: String = chars[i..j].iter().collect();
            tokens.push(Token::new(surface, TokenKind::Url));
            i = j;
            continue;
        }

        // Number: digits with internal decimal points or thousands commas.
        // A trailing letter run turns it into a word ("2nd").
        if c.is_ascii_digit() {
            let mut j = i;
            while j < n && chars[j].is_ascii_digit() {
                j += 1;
            }
            while j + 1 < n && matches!(chars[j], '.' | ',') && chars[j + 1].is_ascii_digit() {
                j += 1;
                while j < n && chars[j].is_ascii_digit() {
                    j += 1;
                }
            }
            if j < n && is_word_char(chars[j]) {
                while j < n && is_word_char(chars[j]) {
                    j += 1;
                }
                let surface: String = chars[i..j].iter().collect();
                tokens.push(Token::new(surface, TokenKind::Word));
            } else {
                let surface: String = chars[i..j].iter().collect();
                tokens.push(Token::new(surface, TokenKind::Number));
            }
            i = j;
            continue;
        }

        // Word run: letters/digits plus apostrophes and censor asterisks.
        // A run with no alphanumeric character at all is punctuation.
        if is_word_char(c) {
            let mut j = i;
            while j < n && is_word_char(chars[j]) {
                j += 1;
            }
            let surface: String = chars[i..j].iter().collect();
            let kind = if surface.chars().any(|c| c.is_alphanumeric()) {
                TokenKind::Word
            } else {
                TokenKind::Punctuation
            };
            tokens.push(Token::new(surface, kind));
            i = j;
            continue;
        }

        // Emoticon at a punctuation boundary.
        if let Some(emo) = match_emoticon(&chars[i..]) {
            tokens.push(Token::new(emo, TokenKind::Emoticon));
            i += emo.chars().count();
            continue;
        }

        // Punctuation run: everything else until a boundary. Breaks before
        // an embedded emoticon or a fresh hashtag/mention start.
        let mut j = i;
        while j < n {
            let cj = chars[j];
            if cj.is_whitespace() || is_word_char(cj) {
                break;
            }
            if (cj == '#' || cj == '@') && j + 1 < n && is_tag_char(chars[j + 1]) {
                break;
            }
            if j > i && match_emoticon(&chars[j..]).is_some() {
                break;
            }
            j += 1;
        }
        let surface: String = chars[i..j].iter().collect();
        tokens.push(Token::new(surface, TokenKind::Punctuation));
        i = j;
    }

    // Leading "RT" before a mention is the retweet marker.
    if tokens.len() >= 2
        && tokens[0].kind == TokenKind::Word
        && tokens[0].surface.eq_ignore_ascii_case("rt")
        && tokens[1].kind == TokenKind::Mention
    {
        tokens[0].kind = TokenKind::RetweetMarker;
    }

    TokenStream { tokens }
}
