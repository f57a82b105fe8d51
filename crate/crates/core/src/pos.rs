//! Deterministic rule/lexicon part-of-speech tagger over a
//! Twitter-oriented tagset.
//!
//! Non-word tokens map straight from their token kind; words go through
//! closed-class lexicons and then suffix heuristics, defaulting to noun.
//! It trades accuracy for determinism and zero dependencies; the
//! [`Tagger`] trait leaves room for a real tagger behind the same
//! interface.

use crate::tokenizer::{Token, TokenKind, TokenStream};

/// Twitter-oriented part-of-speech tagset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PosTag {
    Noun,
    Verb,
    Adjective,
    Adverb,
    Pronoun,
    Determiner,
    Preposition,
    Conjunction,
    Interjection,
    Numeral,
    Hashtag,
    Mention,
    Url,
    Emoticon,
    Punct,
    RetweetMarker,
}

pub const TAG_COUNT: usize = 16;

pub const ALL_TAGS: [PosTag; TAG_COUNT] = [
    PosTag::Noun,
    PosTag::Verb,
    PosTag::Adjective,
    PosTag::Adverb,
    PosTag::Pronoun,
    PosTag::Determiner,
    PosTag::Preposition,
    PosTag::Conjunction,
    PosTag::Interjection,
    PosTag::Numeral,
    PosTag::Hashtag,
    PosTag::Mention,
    PosTag::Url,
    PosTag::Emoticon,
    PosTag::Punct,
    PosTag::RetweetMarker,
];

impl PosTag {
    pub fn index(self) -> usize {
        ALL_TAGS.iter().position(|&t| t == self).unwrap()
    }

    pub fn name(self) -> &'static str {
        match self {
            PosTag::Noun => "noun",
            PosTag::Verb => "verb",
            PosTag::Adjective => "adj",
            PosTag::Adverb => "adv",
            PosTag::Pronoun => "pron",
            PosTag::Determiner => "det",
            PosTag::Preposition => "prep",
            PosTag::Conjunction => "conj",
            PosTag::Interjection => "intj",
            PosTag::Numeral => "num",
            PosTag::Hashtag => "hashtag",
            PosTag::Mention => "mention",
            PosTag::Url => "url",
            PosTag::Emoticon => "emoticon",
            PosTag::Punct => "punct",
            PosTag::RetweetMarker => "rt",
        }
    }
}

/// A part-of-speech tagger over token streams.
pub trait Tagger {
    fn tag_stream(&self, stream: &TokenStream) -> Vec<PosTag>;
}

/// The built-in rule/lexicon tagger.
#[derive(Debug, Clone, Copy, Default)]
pub struct RuleTagger;

impl Tagger for RuleTagger {
    fn tag_stream(&self, stream: &TokenStream) -> Vec<PosTag> {
        stream.tokens.iter().map(tag_token).collect()
    }
}

const PRONOUNS: &[&str] = &[
    "i", "me", "my", "mine", "you", "your", "yours", "he", "him", "his", "she", "her", "hers",
    "it", "its", "we", "us", "our", "ours", "they", "them", "their", "theirs", "this", "that",
    "these", "those", "who", "whom", "whose", "myself", "yourself", "himself", "herself",
    "itself", "ourselves", "themselves", "someone", "anyone", "everyone", "nothing",
    "something", "anything", "everything", "u", "ur",
];

const DETERMINERS: &[&str] = &[
    "a", "an", "the", "some", "any", "no", "every", "each", "either", "neither", "much",
    "many", "few", "little", "several", "all", "both", "half", "what", "which",
];

const PREPOSITIONS: &[&str] = &[
    "of", "in", "on", "at", "by", "for", "with", "about", "against", "between", "into",
    "through", "during", "before", "after", "above", "below", "to", "from", "up", "down",
    "out", "off", "over", "under", "near", "since", "until", "upon", "within", "without",
    "across", "along", "around", "behind", "beyond", "toward", "towards", "per",
];

const CONJUNCTIONS: &[&str] = &[
    "and", "or", "but", "nor", "so", "yet", "if", "because", "although", "though", "while",
    "whereas", "unless", "than", "whether", "as", "when",
];

const ADVERBS: &[&str] = &[
    "not", "never", "always", "often", "very", "too", "also", "just", "now", "then", "here",
    "there", "soon", "already", "again", "still", "really", "quite", "maybe", "perhaps",
    "even", "only", "however", "please",
];

const INTERJECTIONS: &[&str] = &[
    "oh", "wow", "hey", "yay", "ugh", "hmm", "lol", "lolol", "omg", "haha", "ok", "okay",
    "yeah", "nope", "huh", "smh", "wtf", "plz", "thx", "brb", "idk", "tbh", "meh", "bleh",
    "pfft", "hmph", "grr", "zomg",
];

const VERBS: &[&str] = &[
    "am", "is", "are", "was", "were", "be", "been", "being", "have", "has", "had", "do",
    "does", "did", "will", "would", "can", "could", "shall", "should", "may", "might",
    "must", "go", "goes", "get", "gets", "got", "make", "makes", "made", "know", "knows",
    "knew", "think", "thinks", "thought", "take", "takes", "took", "see", "sees", "saw",
    "come", "comes", "came", "want", "wants", "use", "uses", "used", "find", "finds",
    "found", "give", "gives", "gave", "tell", "tells", "told", "say", "says", "said",
    "read", "reads", "vote", "votes", "listen", "matter", "matters", "remain", "remains",
    "deserve",
];

fn in_list(list: &[&str], word: &str) -> bool {
    list.contains(&word)
}

/// Tag one token.
pub fn tag_token(token: &Token) -> PosTag {
    match token.kind {
        TokenKind::Hashtag => PosTag::Hashtag,
        TokenKind::Mention => PosTag::Mention,
        TokenKind::Url => PosTag::Url,
        TokenKind::Emoticon => PosTag::Emoticon,
        TokenKind::Punctuation => PosTag::Punct,
        TokenKind::Number => PosTag::Numeral,
        TokenKind::RetweetMarker => PosTag::RetweetMarker,
        TokenKind::Word => {
            let w = token.surface.to_lowercase();
            let w = w.as_str();
            if in_list(PRONOUNS, w) {
                PosTag::Pronoun
            } else if in_list(DETERMINERS, w) {
                PosTag::Determiner
            } else if in_list(PREPOSITIONS, w) {
                PosTag::Preposition
            } else if in_list(CONJUNCTIONS, w) {
                PosTag::Conjunction
            } else if in_list(ADVERBS, w) {
                PosTag::Adverb
            } else if in_list(INTERJECTIONS, w) {
                PosTag::Interjection
            } else if in_list(VERBS, w) {
                PosTag::Verb
            } else if w.len() > 3 && w.ends_with("ly") {
                PosTag::Adverb
            } else if w.len() > 4
                && (w.ends_with("ing") || w.ends_with("ed") || w.ends_with("ize")
                    || w.ends_with("ise"))
            {
                PosTag::Verb
            } else if w.len() > 4
                && (w.ends_with("ous") || w.ends_with("ful") || w.ends_with("able")
                    || w.ends_with("ible") || w.ends_with("ive") || w.ends_with("less")
                    || w.ends_with("ic"))
            {
                PosTag::Adjective
            } else {
                PosTag::Noun
            }
        }
    }
}
