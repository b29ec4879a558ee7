use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::Sign;

use super::DiagramError;

/// Which strand of a crossing a passage belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flag {
    Over,
    Under,
}

impl Flag {
    pub fn toggled(self) -> Flag {
        match self {
            Flag::Over => Flag::Under,
            Flag::Under => Flag::Over,
        }
    }

    fn letter(self) -> char {
        match self {
            Flag::Over => 'O',
            Flag::Under => 'U',
        }
    }
}

/// One token of a Gauss word: a pass through crossing `crossing`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Passage {
    pub crossing: usize,
    pub flag: Flag,
}

/// A signed Gauss code: a cyclic word in which every crossing occurs twice,
/// once over and once under, together with the writhe of every crossing.
///
/// Crossing indices are always numbered in order of first occurrence in the
/// word, so two codes with the same labels and word compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussCode {
    word: Vec<Passage>,
    labels: Vec<String>,
    writhe: Vec<Sign>,
}

impl GaussCode {
    /// The embedded circle.
    pub fn empty() -> GaussCode {
        GaussCode { word: Vec::new(), labels: Vec::new(), writhe: Vec::new() }
    }

    /// Builds a code from `(label, flag, writhe)` tokens in word order.
    pub fn from_tokens<S, I>(tokens: I) -> Result<GaussCode, DiagramError>
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (S, Flag, Sign)>,
    {
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut labels: Vec<String> = Vec::new();
        let mut seen: Vec<Vec<(Flag, Sign)>> = Vec::new();
        let mut word = Vec::new();
        for (label, flag, sign) in tokens {
            let label = label.as_ref();
            if !is_label(label) {
                return Err(DiagramError::MalformedToken(label.to_string()));
            }
            let c = *index.entry(label.to_string()).or_insert_with(|| {
                labels.push(label.to_string());
                seen.push(Vec::new());
                labels.len() - 1
            });
            seen[c].push((flag, sign));
            word.push(Passage { crossing: c, flag });
        }
        let mut writhe = Vec::with_capacity(labels.len());
        for (c, occ) in seen.iter().enumerate() {
            if occ.len() != 2 {
                return Err(DiagramError::OccurrenceCount { label: labels[c].clone(), count: occ.len() });
            }
            if occ[0].0 == occ[1].0 {
                return Err(DiagramError::FlagConflict(labels[c].clone()));
            }
            if occ[0].1 != occ[1].1 {
                return Err(DiagramError::SignConflict(labels[c].clone()));
            }
            writhe.push(occ[0].1);
        }
        Ok(GaussCode { word, labels, writhe })
    }

    pub fn parse(text: &str) -> Result<GaussCode, DiagramError> {
        let mut tokens = Vec::new();
        for tok in text.split_whitespace() {
            tokens.push(parse_token(tok)?);
        }
        GaussCode::from_tokens(tokens)
    }

    /// Number of tokens, `2n`.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.labels.len()
    }

    pub fn word(&self) -> &[Passage] {
        &self.word
    }

    pub fn label(&self, crossing: usize) -> &str {
        &self.labels[crossing]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn writhe(&self, crossing: usize) -> Sign {
        self.writhe[crossing]
    }

    pub fn crossing_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Word positions `(first, second)` of a crossing.
    pub fn positions(&self, crossing: usize) -> (usize, usize) {
        let mut it = self.word.iter().enumerate().filter(|(_, p)| p.crossing == crossing).map(|(i, _)| i);
        let a = it.next().expect("crossing occurs twice");
        let b = it.next().expect("crossing occurs twice");
        (a, b)
    }

    /// Flag of the first pass through `crossing`.
    pub fn first_flag(&self, crossing: usize) -> Flag {
        self.word[self.positions(crossing).0].flag
    }

    /// Local orientation of the (first pass, second pass) frame at a crossing:
    /// the writhe when the first pass is over, its negative otherwise.
    pub fn local_orientation(&self, crossing: usize) -> Sign {
        match self.first_flag(crossing) {
            Flag::Over => self.writhe[crossing],
            Flag::Under => -self.writhe[crossing],
        }
    }

    pub fn tokens(&self) -> Vec<(String, Flag, Sign)> {
        self.word.iter().map(|p| (self.labels[p.crossing].clone(), p.flag, self.writhe[p.crossing])).collect()
    }

    fn rebuild(tokens: Vec<(String, Flag, Sign)>) -> GaussCode {
        GaussCode::from_tokens(tokens).expect("transformation preserves validity")
    }

    /// Relabels crossings `1..n` in first-occurrence order.
    pub fn canonical(&self) -> GaussCode {
        let tokens =
            self.word.iter().map(|p| ((p.crossing + 1).to_string(), p.flag, self.writhe[p.crossing])).collect();
        GaussCode::rebuild(tokens)
    }

    /// Cyclic rotation so that the word starts at position `k`.
    pub fn rotate(&self, k: usize) -> GaussCode {
        if self.word.is_empty() {
            return self.clone();
        }
        let mut tokens = self.tokens();
        tokens.rotate_left(k % self.word.len());
        GaussCode::rebuild(tokens)
    }

    /// The same knot with reversed orientation.
    pub fn reverse(&self) -> GaussCode {
        let mut tokens = self.tokens();
        tokens.reverse();
        GaussCode::rebuild(tokens)
    }

    /// The same knot on the surface with reversed orientation: every writhe flips.
    pub fn mirror(&self) -> GaussCode {
        let tokens = self.tokens().into_iter().map(|(l, f, s)| (l, f, -s)).collect();
        GaussCode::rebuild(tokens)
    }

    /// Changes the crossing: over and under are exchanged, the underlying curve
    /// is kept (so the writhe flips as well).
    pub fn crossing_change(&self, crossing: usize) -> GaussCode {
        let label = self.labels[crossing].clone();
        let tokens = self
            .tokens()
            .into_iter()
            .map(|(l, f, s)| if l == label { (l, f.toggled(), -s) } else { (l, f, s) })
            .collect();
        GaussCode::rebuild(tokens)
    }

    /// Connected sum along the basepoints: the linear words are concatenated.
    /// Labels of `other` clashing with labels of `self` are renamed.
    pub fn connected_sum(&self, other: &GaussCode) -> GaussCode {
        let mut taken: std::collections::HashSet<String> = self.labels.iter().cloned().collect();
        let mut rename: HashMap<&str, String> = HashMap::new();
        let mut next = 1usize;
        for l in &other.labels {
            let new = if taken.contains(l) {
                loop {
                    let cand = next.to_string();
                    next += 1;
                    if !taken.contains(&cand) && !other.labels.contains(&cand) {
                        break cand;
                    }
                }
            } else {
                l.clone()
            };
            taken.insert(new.clone());
            rename.insert(l.as_str(), new);
        }
        let mut tokens = self.tokens();
        tokens.extend(other.tokens().into_iter().map(|(l, f, s)| (rename[l.as_str()].clone(), f, s)));
        GaussCode::rebuild(tokens)
    }

    /// A label not used in this code.
    pub fn fresh_label(&self) -> String {
        let mut k = self.labels.len() + 1;
        loop {
            let cand = k.to_string();
            if !self.labels.contains(&cand) {
                return cand;
            }
            k += 1;
        }
    }

    /// Canonical text over all cyclic rotations: the least canonical
    /// serialization. Two codes agree up to rotation and relabeling iff their
    /// rotation-canonical forms are equal.
    pub fn rotation_canonical(&self) -> String {
        if self.word.is_empty() {
            return String::new();
        }
        (0..self.word.len()).map(|k| self.rotate(k).canonical().to_string()).min().unwrap()
    }

    pub fn equivalent_up_to_rotation(&self, other: &GaussCode) -> bool {
        self.len() == other.len() && self.rotation_canonical() == other.rotation_canonical()
    }
}

fn is_label(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric())
}

fn parse_token(tok: &str) -> Result<(String, Flag, Sign), DiagramError> {
    let bad = || DiagramError::MalformedToken(tok.to_string());
    let mut chars = tok.chars();
    let flag = match chars.next() {
        Some('O') => Flag::Over,
        Some('U') => Flag::Under,
        _ => return Err(bad()),
    };
    let rest: &str = chars.as_str();
    let last = rest.chars().last().ok_or_else(bad)?;
    let sign = match last {
        '+' => Sign::Plus,
        '-' | '\u{2212}' => Sign::Minus,
        _ => return Err(bad()),
    };
    let label = &rest[..rest.len() - last.len_utf8()];
    if !is_label(label) {
        return Err(bad());
    }
    Ok((label.to_string(), flag, sign))
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}{}", p.flag.letter(), self.labels[p.crossing], self.writhe[p.crossing])?;
        }
        Ok(())
    }
}

impl FromStr for GaussCode {
    type Err = DiagramError;
    fn from_str(s: &str) -> Result<GaussCode, DiagramError> {
        GaussCode::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_two_crossing_code() {
        let c = GaussCode::parse("O1+ O2+ U1+ U2+").unwrap();
        assert_eq!(c.crossing_count(), 2);
        assert_eq!(c.writhe(0), Sign::Plus);
        assert_eq!(c.writhe(1), Sign::Plus);
        assert_eq!(c.to_string(), "O1+ O2+ U1+ U2+");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(GaussCode::parse("O1+ U1-"), Err(DiagramError::SignConflict("1".into())));
        assert_eq!(GaussCode::parse("O1+ O1+ U2+ U2+"), Err(DiagramError::FlagConflict("1".into())));
        assert_eq!(GaussCode::parse("O1+ U1+ O1+"), Err(DiagramError::OccurrenceCount { label: "1".into(), count: 3 }));
        assert!(matches!(GaussCode::parse("X1+"), Err(DiagramError::MalformedToken(_))));
        assert!(matches!(GaussCode::parse("O1"), Err(DiagramError::MalformedToken(_))));
        assert!(matches!(GaussCode::parse("O+ U+"), Err(DiagramError::MalformedToken(_))));
        assert!(matches!(GaussCode::parse("Oa_b+ Ua_b+"), Err(DiagramError::MalformedToken(_))));
    }

    #[test]
    fn unicode_minus_is_accepted() {
        let c = GaussCode::parse("O1\u{2212} U1\u{2212}").unwrap();
        assert_eq!(c.writhe(0), Sign::Minus);
        assert_eq!(c.to_string(), "O1- U1-");
    }

    #[test]
    fn empty_code() {
        let c = GaussCode::parse("   ").unwrap();
        assert!(c.is_empty());
        assert_eq!(c, GaussCode::empty());
    }

    #[test]
    fn reverse_and_mirror() {
        let c = GaussCode::parse("O1+ O2+ U1+ U2+").unwrap();
        assert_eq!(c.reverse().to_string(), "U2+ U1+ O2+ O1+");
        assert_eq!(c.mirror().to_string(), "O1- O2- U1- U2-");
        assert_eq!(c.mirror().mirror(), c);
        assert!(c.reverse().reverse().equivalent_up_to_rotation(&c));
    }

    #[test]
    fn canonical_relabels_in_order() {
        let c = GaussCode::parse("Ua- Ob+ Oa- Ub+").unwrap();
        assert_eq!(c.canonical().to_string(), "U1- O2+ O1- U2+");
    }

    #[test]
    fn connected_sum_renames_clashes() {
        let c = GaussCode::parse("O1+ O2+ U1+ U2+").unwrap();
        let s = c.connected_sum(&c);
        assert_eq!(s.crossing_count(), 4);
        assert_eq!(s.len(), 8);
        assert_eq!(c.connected_sum(&GaussCode::empty()), c);
        assert_eq!(GaussCode::empty().connected_sum(&c), c);
    }

    #[test]
    fn rotation_canonical_identifies_rotations() {
        let c = GaussCode::parse("O1+ U2- O3+ U1+ O2- U3+").unwrap();
        for k in 0..c.len() {
            assert!(c.rotate(k).equivalent_up_to_rotation(&c));
        }
        assert!(!c.equivalent_up_to_rotation(&c.mirror()));
    }
}
