//! Reader for the Princeton WordNet 3.0 database files (`data.*` and `index.sense`).

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum WordNetError {
    #[error("missing WordNet file {0}")]
    MissingFile(PathBuf),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{file}:{line}: {message}")]
    Malformed {
        file: String,
        line: usize,
        message: String,
    },
    #[error("unknown concept {0}")]
    NotFound(String),
    #[error("invalid synset id {0:?}")]
    BadId(String),
    #[error("invalid lemma.pos.sense key {0:?}")]
    BadKey(String),
}

/// A 9-digit WordNet identifier: part-of-speech digit followed by the byte offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SynsetId(u32);

impl SynsetId {
    pub fn new(pos_digit: u8, offset: u32) -> Option<Self> {
        if !(1..=4).contains(&pos_digit) || offset >= 100_000_000 {
            return None;
        }
        Some(SynsetId(pos_digit as u32 * 100_000_000 + offset))
    }

    pub fn from_value(value: u32) -> Option<Self> {
        Self::new((value / 100_000_000) as u8, value % 100_000_000)
    }

    pub fn pos_digit(self) -> u8 {
        (self.0 / 100_000_000) as u8
    }

    pub fn offset(self) -> u32 {
        self.0 % 100_000_000
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for SynsetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:09}", self.0)
    }
}

impl FromStr for SynsetId {
    type Err = WordNetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.len() != 9 || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(WordNetError::BadId(s.to_string()));
        }
        let v: u32 = s.parse().map_err(|_| WordNetError::BadId(s.to_string()))?;
        SynsetId::from_value(v).ok_or_else(|| WordNetError::BadId(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SynsetPos {
    Noun,
    Verb,
    AdjHead,
    AdjSatellite,
    Adverb,
}

impl SynsetPos {
    pub fn letter(self) -> char {
        match self {
            SynsetPos::Noun => 'n',
            SynsetPos::Verb => 'v',
            SynsetPos::AdjHead | SynsetPos::AdjSatellite => 'a',
            SynsetPos::Adverb => 'r',
        }
    }

    pub fn digit(self) -> u8 {
        match self {
            SynsetPos::Noun => 1,
            SynsetPos::Verb => 2,
            SynsetPos::AdjHead | SynsetPos::AdjSatellite => 3,
            SynsetPos::Adverb => 4,
        }
    }

    fn from_ss_type(c: &str) -> Option<Self> {
        Some(match c {
            "n" => SynsetPos::Noun,
            "v" => SynsetPos::Verb,
            "a" => SynsetPos::AdjHead,
            "s" => SynsetPos::AdjSatellite,
            "r" => SynsetPos::Adverb,
            _ => return None,
        })
    }
}

/// Digit used in synset ids for a pos letter (`n`, `v`, `a`, `s`, `r`).
pub fn pos_digit_of_letter(c: char) -> Option<u8> {
    match c {
        'n' => Some(1),
        'v' => Some(2),
        'a' | 's' => Some(3),
        'r' => Some(4),
        _ => None,
    }
}

/// `lemma.pos.NN`, e.g. `hobby.n.03`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LpsKey {
    pub lemma: String,
    pub pos: char,
    pub sense: u16,
}

impl LpsKey {
    pub fn new(lemma: &str, pos: char, sense: u16) -> Self {
        LpsKey {
            lemma: lemma.to_lowercase(),
            pos,
            sense,
        }
    }
}

impl fmt::Display for LpsKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}.{:02}", self.lemma, self.pos, self.sense)
    }
}

impl FromStr for LpsKey {
    type Err = WordNetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || WordNetError::BadKey(s.to_string());
        let (rest, sense) = s.rsplit_once('.').ok_or_else(bad)?;
        let (lemma, pos) = rest.rsplit_once('.').ok_or_else(bad)?;
        if lemma.is_empty()
            || lemma.chars().any(char::is_whitespace)
            || sense.len() < 2
            || !sense.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(bad());
        }
        let pos = match pos {
            "n" | "v" | "a" | "r" => pos.chars().next().unwrap(),
            "s" => 'a',
            _ => return Err(bad()),
        };
        let sense: u16 = sense.parse().map_err(|_| bad())?;
        Ok(LpsKey::new(lemma, pos, sense))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    /// Lowercase lemma with underscores.
    pub lemma: String,
    pub sense: u16,
    /// Tag count from `index.sense`.
    pub tag_count: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Synset {
    pub id: SynsetId,
    pub pos: SynsetPos,
    pub members: Vec<Member>,
    pub gloss: String,
    /// Hypernyms in file order (the first one is the preferred parent).
    pub hypernyms: Vec<SynsetId>,
    pub instance_hypernyms: Vec<SynsetId>,
    /// Hypernyms and instance hypernyms together, in file order.
    pub broader: Vec<SynsetId>,
    pub hyponyms: Vec<SynsetId>,
    pub instance_hyponyms: Vec<SynsetId>,
    pub entailments: Vec<SynsetId>,
    /// Satellite to head (and head to satellites).
    pub similar_to: Vec<SynsetId>,
    pub antonyms: Vec<SynsetId>,
    pub pertainyms: Vec<SynsetId>,
    pub derivationally_related: Vec<SynsetId>,
    pub attributes: Vec<SynsetId>,
}

impl Synset {
    pub fn lps(&self, member: usize) -> LpsKey {
        let m = &self.members[member];
        LpsKey::new(&m.lemma, self.pos.letter(), m.sense)
    }

    /// The first hypernym or instance hypernym listed in the data file.
    pub fn first_hypernym(&self) -> Option<SynsetId> {
        self.broader.first().copied()
    }
}

pub const DATA_FILES: [&str; 4] = ["data.noun", "data.verb", "data.adj", "data.adv"];
pub const SENSE_INDEX: &str = "index.sense";

#[derive(Debug, Clone)]
pub struct WordNetStore {
    synsets: Vec<Synset>,
    by_id: HashMap<SynsetId, usize>,
    by_key: HashMap<LpsKey, SynsetId>,
}

impl WordNetStore {
    pub fn len(&self) -> usize {
        self.synsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.synsets.is_empty()
    }

    /// All synsets in ascending id order.
    pub fn synsets(&self) -> &[Synset] {
        &self.synsets
    }

    pub fn get(&self, id: SynsetId) -> Option<&Synset> {
        self.by_id.get(&id).map(|&i| &self.synsets[i])
    }

    pub fn resolve(&self, key: &LpsKey) -> Result<SynsetId, WordNetError> {
        self.by_key
            .get(key)
            .copied()
            .ok_or_else(|| WordNetError::NotFound(key.to_string()))
    }

    pub fn resolve_str(&self, key: &str) -> Result<SynsetId, WordNetError> {
        self.resolve(&key.parse()?)
    }

    pub fn lookup(&self, lemma: &str, pos: char, sense: u16) -> Result<&Synset, WordNetError> {
        let id = self.resolve(&LpsKey::new(lemma, pos, sense))?;
        Ok(self.get(id).expect("indexed synset"))
    }

    pub fn count(&self, pos_digit: u8) -> usize {
        self.synsets
            .iter()
            .filter(|s| s.id.pos_digit() == pos_digit)
            .count()
    }

    /// Builds a store from already parsed synsets (used by tests with tiny fixtures).
    pub fn from_synsets(mut synsets: Vec<Synset>) -> Self {
        synsets.sort_by_key(|s| s.id);
        let by_id = synsets.iter().enumerate().map(|(i, s)| (s.id, i)).collect();
        let mut by_key = HashMap::new();
        for s in &synsets {
            for i in 0..s.members.len() {
                by_key.insert(s.lps(i), s.id);
            }
        }
        WordNetStore {
            synsets,
            by_id,
            by_key,
        }
    }
}

/// Reads the four data files and `index.sense` from `dir`.
pub fn load_wordnet(dir: &Path) -> Result<WordNetStore, WordNetError> {
    let read = |name: &str| -> Result<String, WordNetError> {
        let path = dir.join(name);
        if !path.is_file() {
            return Err(WordNetError::MissingFile(path));
        }
        fs::read_to_string(&path).map_err(|source| WordNetError::Io { path, source })
    };

    let senses = parse_sense_index(&read(SENSE_INDEX)?)?;

    let mut synsets = Vec::with_capacity(120_000);
    for name in DATA_FILES {
        let text = read(name)?;
        for (no, line) in text.lines().enumerate() {
            if line.starts_with("  ") || line.trim().is_empty() {
                continue;
            }
            let syn = parse_data_line(line, &senses).map_err(|message| WordNetError::Malformed {
                file: name.to_string(),
                line: no + 1,
                message,
            })?;
            synsets.push(syn);
        }
    }
    Ok(WordNetStore::from_synsets(synsets))
}

type SenseMap = HashMap<(String, SynsetId), (u16, u32)>;

fn parse_sense_index(text: &str) -> Result<SenseMap, WordNetError> {
    let mut map = HashMap::with_capacity(210_000);
    for (no, line) in text.lines().enumerate() {
        let bad = |m: &str| WordNetError::Malformed {
            file: SENSE_INDEX.to_string(),
            line: no + 1,
            message: m.to_string(),
        };
        let mut it = line.split_ascii_whitespace();
        let (Some(key), Some(offset), Some(sense), Some(tags)) =
            (it.next(), it.next(), it.next(), it.next())
        else {
            if line.trim().is_empty() {
                continue;
            }
            return Err(bad("expected 4 fields"));
        };
        let (lemma, lex) = key.split_once('%').ok_or_else(|| bad("sense key without %"))?;
        let ss_type: u8 = lex
            .get(..1)
            .and_then(|c| c.parse().ok())
            .ok_or_else(|| bad("bad ss_type"))?;
        let digit = match ss_type {
            1 => 1,
            2 => 2,
            3 | 5 => 3,
            4 => 4,
            _ => return Err(bad("bad ss_type")),
        };
        let offset: u32 = offset.parse().map_err(|_| bad("bad offset"))?;
        let id = SynsetId::new(digit, offset).ok_or_else(|| bad("bad offset"))?;
        let sense: u16 = sense.parse().map_err(|_| bad("bad sense number"))?;
        let tags: u32 = tags.parse().map_err(|_| bad("bad tag count"))?;
        map.insert((lemma.to_string(), id), (sense, tags));
    }
    Ok(map)
}

fn strip_adj_marker(word: &str) -> &str {
    match word.find('(') {
        Some(i) if word.ends_with(')') => &word[..i],
        _ => word,
    }
}

fn parse_data_line(line: &str, senses: &SenseMap) -> Result<Synset, String> {
    let (body, gloss) = match line.split_once(" | ") {
        Some((b, g)) => (b, g.trim_end()),
        None => (line.trim_end_matches([' ', '|']), ""),
    };
    let f: Vec<&str> = body.split_ascii_whitespace().collect();
    let field = |i: usize| f.get(i).copied().ok_or_else(|| "truncated line".to_string());

    let offset: u32 = field(0)?.parse().map_err(|_| "bad offset")?;
    let pos = SynsetPos::from_ss_type(field(2)?).ok_or("bad ss_type")?;
    let id = SynsetId::new(pos.digit(), offset).ok_or("bad offset")?;
    let w_cnt = usize::from_str_radix(field(3)?, 16).map_err(|_| "bad w_cnt")?;

    let mut members = Vec::with_capacity(w_cnt);
    let mut i = 4;
    for _ in 0..w_cnt {
        let lemma = strip_adj_marker(field(i)?).to_lowercase();
        let &(sense, tag_count) = senses
            .get(&(lemma.clone(), id))
            .ok_or_else(|| format!("{lemma} {id} missing from index.sense"))?;
        members.push(Member {
            lemma,
            sense,
            tag_count,
        });
        i += 2;
    }

    let p_cnt: usize = field(i)?.parse().map_err(|_| "bad p_cnt")?;
    i += 1;
    let mut syn = Synset {
        id,
        pos,
        members,
        gloss: gloss.to_string(),
        hypernyms: vec![],
        instance_hypernyms: vec![],
        broader: vec![],
        hyponyms: vec![],
        instance_hyponyms: vec![],
        entailments: vec![],
        similar_to: vec![],
        antonyms: vec![],
        pertainyms: vec![],
        derivationally_related: vec![],
        attributes: vec![],
    };
    for _ in 0..p_cnt {
        let sym = field(i)?;
        let t_off: u32 = field(i + 1)?.parse().map_err(|_| "bad pointer offset")?;
        let t_pos = field(i + 2)?
            .chars()
            .next()
            .and_then(pos_digit_of_letter)
            .ok_or("bad pointer pos")?;
        let st = field(i + 3)?;
        if st.len() != 4 || u16::from_str_radix(st, 16).is_err() {
            return Err(format!("bad pointer source/target {st:?}"));
        }
        let target = SynsetId::new(t_pos, t_off).ok_or("bad pointer target")?;
        let list = match sym {
            "@" => Some(&mut syn.hypernyms),
            "@i" => Some(&mut syn.instance_hypernyms),
            "~" => Some(&mut syn.hyponyms),
            "~i" => Some(&mut syn.instance_hyponyms),
            "*" => Some(&mut syn.entailments),
            "&" => Some(&mut syn.similar_to),
            "!" => Some(&mut syn.antonyms),
            "\\" => Some(&mut syn.pertainyms),
            "+" => Some(&mut syn.derivationally_related),
            "=" => Some(&mut syn.attributes),
            _ => None,
        };
        if let Some(list) = list {
            list.push(target);
        }
        if (sym == "@" || sym == "@i") && !syn.broader.contains(&target) {
            syn.broader.push(target);
        }
        i += 4;
    }
    for list in [&mut syn.hypernyms, &mut syn.instance_hypernyms] {
        let mut seen = Vec::with_capacity(list.len());
        list.retain(|t| {
            let new = !seen.contains(t);
            seen.push(*t);
            new
        });
    }
    for list in [
        &mut syn.hyponyms,
        &mut syn.instance_hyponyms,
        &mut syn.entailments,
        &mut syn.similar_to,
        &mut syn.antonyms,
        &mut syn.pertainyms,
        &mut syn.derivationally_related,
        &mut syn.attributes,
    ] {
        list.sort();
        list.dedup();
    }
    Ok(syn)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn synset_id_renders_nine_digits() {
        let id = SynsetId::new(1, 1740).unwrap();
        assert_eq!(id.to_string(), "100001740");
        assert_eq!("100001740".parse::<SynsetId>().unwrap(), id);
        assert!("00001740".parse::<SynsetId>().is_err());
        assert!("500000018".parse::<SynsetId>().is_err());
    }

    #[test]
    fn lps_key_parsing() {
        let k: LpsKey = "get_rid_of.v.01".parse().unwrap();
        assert_eq!(k, LpsKey::new("get_rid_of", 'v', 1));
        let k: LpsKey = "st._john's_wort.n.01".parse().unwrap();
        assert_eq!(k.lemma, "st._john's_wort");
        assert_eq!(k.to_string(), "st._john's_wort.n.01");
        assert!("hobby.x.01".parse::<LpsKey>().is_err());
        assert!("hobby.n.1".parse::<LpsKey>().is_err());
        assert!("hobby".parse::<LpsKey>().is_err());
    }

    #[test]
    fn data_line_parsing() {
        let mut senses = SenseMap::new();
        let id = SynsetId::new(1, 9624168).unwrap();
        senses.insert(("male".into(), id), (2, 4));
        senses.insert(("male_person".into(), id), (1, 0));
        let line = "09624168 18 n 02 male 0 male_person 0 002 @ 00007846 n 0000 ! 09619168 n 0101 | a person who belongs to the sex that cannot have babies  ";
        let s = parse_data_line(line, &senses).unwrap();
        assert_eq!(s.first_hypernym(), Some(SynsetId::new(1, 7846).unwrap()));
        assert_eq!(s.id, id);
        assert_eq!(s.members.len(), 2);
        assert_eq!(s.lps(0).to_string(), "male.n.02");
        assert_eq!(s.hypernyms, vec![SynsetId::new(1, 7846).unwrap()]);
        assert_eq!(s.antonyms, vec![SynsetId::new(1, 9619168).unwrap()]);
        assert!(s.gloss.starts_with("a person"));
    }

    #[test]
    fn data_line_errors() {
        let senses = SenseMap::new();
        assert!(parse_data_line("09624168 18 n 01 male 0 000 | x", &senses).is_err());
        assert!(parse_data_line("xx 18 n", &senses).is_err());
    }

    #[test]
    fn adjective_markers_are_stripped() {
        assert_eq!(strip_adj_marker("galore(ip)"), "galore");
        assert_eq!(strip_adj_marker("fast"), "fast");
    }
}
