//! Corpus input: CoNLL-U documents, plain one-sentence-per-line text, and
//! line-aligned parallel files.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

/// One whitespace-separated word with its treebank annotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    /// 1-based position in the sentence.
    pub index: usize,
    /// Surface form. Never empty, never contains whitespace.
    pub form: String,
    /// Treebank POS tag (XPOS column; falls back to UPOS when XPOS is `_`).
    pub pos: String,
    /// Index of the syntactic head; 0 means root, `None` means unannotated.
    pub head: Option<usize>,
    /// Dependency relation, kept verbatim.
    pub deprel: String,
}

/// A dependency-annotated sentence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedSentence {
    pub id: String,
    pub tokens: Vec<Token>,
    /// The `# text = ...` comment, when present.
    pub raw_text: Option<String>,
}

impl AnnotatedSentence {
    pub fn forms(&self) -> Vec<String> {
        self.tokens.iter().map(|t| t.form.clone()).collect()
    }

    /// True when every token carries a head annotation.
    pub fn is_fully_annotated(&self) -> bool {
        self.tokens.iter().all(|t| t.head.is_some())
    }
}

/// A plain sentence: whitespace-separated words, no annotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawSentence {
    pub id: String,
    pub words: Vec<String>,
}

/// Line-aligned sentences across languages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelCorpus {
    languages: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl ParallelCorpus {
    /// Builds a corpus from one column of sentences per language.
    /// Columns must all have the same length.
    pub fn from_columns(languages: Vec<String>, columns: Vec<Vec<String>>) -> Result<Self> {
        if languages.len() != columns.len() {
            return Err(Error::domain(format!(
                "{} languages declared but {} columns given",
                languages.len(),
                columns.len()
            )));
        }
        if let Some(first) = columns.first() {
            let counts: Vec<(String, usize)> = languages
                .iter()
                .cloned()
                .zip(columns.iter().map(Vec::len))
                .collect();
            if columns.iter().any(|c| c.len() != first.len()) {
                return Err(Error::domain(format!(
                    "line-count mismatch across parallel files: {counts:?}"
                )));
            }
        }
        let n = columns.first().map_or(0, Vec::len);
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            rows.push(columns.iter().map(|c| c[i].clone()).collect());
        }
        Ok(ParallelCorpus { languages, rows })
    }

    pub fn languages(&self) -> &[String] {
        &self.languages
    }

    pub fn rows(&self) -> &[Vec<String>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn language_index(&self, language: &str) -> Option<usize> {
        self.languages.iter().position(|l| l == language)
    }

    /// All sentences of one language, in row order.
    pub fn column(&self, language: &str) -> Option<Vec<&str>> {
        let idx = self.language_index(language)?;
        Some(self.rows.iter().map(|r| r[idx].as_str()).collect())
    }

    /// Keeps only the rows selected by `keep` (indices must be ascending).
    pub fn select_rows(&self, keep: &[usize]) -> ParallelCorpus {
        ParallelCorpus {
            languages: self.languages.clone(),
            rows: keep.iter().map(|&i| self.rows[i].clone()).collect(),
        }
    }
}

/// Parses a CoNLL-U style document into annotated sentences.
///
/// Sentences are blank-line separated; `#` lines are comments (`sent_id` and
/// `text` comments are picked up when present); token lines need at least the
/// 8 columns ID, FORM, LEMMA, UPOS, XPOS, FEATS, HEAD, DEPREL. Multiword
/// token ranges (`i-j` IDs) are skipped. A `_` HEAD leaves the token
/// unannotated; any other non-integer ID or HEAD is a parse error.
pub fn parse_conllu(text: &str) -> Result<Vec<AnnotatedSentence>> {
    let mut sentences = Vec::new();
    let mut block = BlockState::default();

    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        if line.trim().is_empty() {
            block.flush(&mut sentences)?;
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            block.comment(comment);
            continue;
        }
        block.token_line(lineno, line)?;
    }
    block.flush(&mut sentences)?;
    Ok(sentences)
}

#[derive(Default)]
struct BlockState {
    tokens: Vec<(usize, Token)>,
    sent_id: Option<String>,
    raw_text: Option<String>,
}

impl BlockState {
    fn comment(&mut self, comment: &str) {
        if let Some((key, value)) = comment.split_once('=') {
            match key.trim() {
                "sent_id" => self.sent_id = Some(value.trim().to_string()),
                "text" => self.raw_text = Some(value.trim().to_string()),
                _ => {}
            }
        }
    }

    fn token_line(&mut self, lineno: usize, line: &str) -> Result<()> {
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() < 8 {
            return Err(Error::parse(
                lineno,
                format!(
                    "expected at least 8 tab-separated columns, found {}",
                    cols.len()
                ),
            ));
        }
        let id_field = cols[0];
        if let Some((lo, hi)) = id_field.split_once('-') {
            if lo.parse::<usize>().is_ok() && hi.parse::<usize>().is_ok() {
                // multiword token range: the individual words follow
                return Ok(());
            }
        }
        let index: usize = id_field
            .parse()
            .map_err(|_| Error::parse(lineno, format!("non-integer token ID '{id_field}'")))?;
        let form = cols[1];
        if form.is_empty() || form.chars().any(char::is_whitespace) {
            return Err(Error::parse(
                lineno,
                format!("FORM '{form}' is empty or contains whitespace"),
            ));
        }
        let pos = if cols[4] == "_" { cols[3] } else { cols[4] };
        let head = match cols[6] {
            "_" => None,
            h => Some(h.parse::<usize>().map_err(|_| {
                Error::parse(lineno, format!("non-integer HEAD '{h}'"))
            })?),
        };
        self.tokens.push((
            lineno,
            Token {
                index,
                form: form.to_string(),
                pos: pos.to_string(),
                head,
                deprel: cols[7].to_string(),
            },
        ));
        Ok(())
    }

    fn flush(&mut self, sentences: &mut Vec<AnnotatedSentence>) -> Result<()> {
        if self.tokens.is_empty() {
            self.sent_id = None;
            self.raw_text = None;
            return Ok(());
        }
        let n = self.tokens.len();
        for (expected, (lineno, token)) in self.tokens.iter().enumerate() {
            if token.index != expected + 1 {
                return Err(Error::parse(
                    *lineno,
                    format!("token ID {} out of sequence, expected {}", token.index, expected + 1),
                ));
            }
            if let Some(h) = token.head {
                if h > n {
                    return Err(Error::parse(
                        *lineno,
                        format!("HEAD {h} exceeds sentence length {n}"),
                    ));
                }
                if h == token.index {
                    return Err(Error::parse(*lineno, format!("token {h} is its own head")));
                }
            }
        }
        let id = self
            .sent_id
            .take()
            .unwrap_or_else(|| (sentences.len() + 1).to_string());
        sentences.push(AnnotatedSentence {
            id,
            tokens: std::mem::take(&mut self.tokens).into_iter().map(|(_, t)| t).collect(),
            raw_text: self.raw_text.take(),
        });
        Ok(())
    }
}

/// Splits a plain document into sentences, one per line. Empty lines are
/// skipped; ids are the 1-based line numbers of the non-empty lines.
pub fn parse_plain(text: &str) -> Vec<RawSentence> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let words: Vec<String> = line.split_whitespace().map(str::to_string).collect();
            if words.is_empty() {
                None
            } else {
                Some(RawSentence {
                    id: (i + 1).to_string(),
                    words,
                })
            }
        })
        .collect()
}

/// Loads line-aligned parallel files; row i pairs line i of every file.
/// Fails when line counts differ, reporting the per-file counts.
pub fn load_parallel(paths: &[(String, PathBuf)]) -> Result<ParallelCorpus> {
    let mut languages = Vec::with_capacity(paths.len());
    let mut columns = Vec::with_capacity(paths.len());
    for (language, path) in paths {
        let text = read_file(path)?;
        languages.push(language.clone());
        columns.push(text.lines().map(str::to_string).collect());
    }
    ParallelCorpus::from_columns(languages, columns)
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

/// Number of whitespace-separated words in a sentence string.
pub fn word_count(sentence: &str) -> usize {
    sentence.split_whitespace().count()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# sent_id = s1
# text = राम ने रावण को मारा
1\tराम\t_\tPROPN\tNNP\t_\t5\tk1\t_\t_
2\tने\t_\tADP\tPSP\t_\t1\tlwg_psp\t_\t_
3\tरावण\t_\tPROPN\tNNP\t_\t5\tk2\t_\t_
4\tको\t_\tADP\tPSP\t_\t3\tlwg_psp\t_\t_
5\tमारा\t_\tVERB\tVM\t_\t0\troot\t_\t_
";

    #[test]
    fn parses_annotated_sentence() {
        let sentences = parse_conllu(SAMPLE).unwrap();
        assert_eq!(sentences.len(), 1);
        let s = &sentences[0];
        assert_eq!(s.id, "s1");
        assert_eq!(s.tokens.len(), 5);
        let ne = &s.tokens[1];
        assert_eq!(ne.form, "ने");
        assert_eq!(ne.pos, "PSP");
        assert_eq!(ne.head, Some(1));
        assert_eq!(ne.deprel, "lwg_psp");
        assert!(s.is_fully_annotated());
    }

    #[test]
    fn xpos_falls_back_to_upos() {
        let text = "1\tरम\t_\tPROPN\t_\t_\t0\troot\t_\t_\n";
        let sentences = parse_conllu(text).unwrap();
        assert_eq!(sentences[0].tokens[0].pos, "PROPN");
    }

    #[test]
    fn multiword_ranges_are_skipped() {
        let text = "\
1-2\tदोनों\t_\t_\t_\t_\t_\t_\t_\t_
1\tदो\t_\tNUM\tQC\t_\t2\tquant\t_\t_
2\tनों\t_\tNOUN\tNN\t_\t0\troot\t_\t_
";
        let sentences = parse_conllu(text).unwrap();
        assert_eq!(sentences[0].tokens.len(), 2);
    }

    #[test]
    fn bad_head_is_an_error_with_line_number() {
        let text = "1\tराम\t_\tPROPN\tNNP\t_\tx\tk1\t_\t_\n";
        match parse_conllu(text) {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 1);
                assert!(msg.contains("HEAD"), "{msg}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn underscore_head_means_unannotated() {
        let text = "1\tराम\t_\tPROPN\tNNP\t_\t_\t_\t_\t_\n";
        let sentences = parse_conllu(text).unwrap();
        assert_eq!(sentences[0].tokens[0].head, None);
        assert!(!sentences[0].is_fully_annotated());
    }

    #[test]
    fn out_of_sequence_id_is_an_error() {
        let text = "\
1\tक\t_\tX\tNN\t_\t0\troot\t_\t_
3\tख\t_\tX\tNN\t_\t1\tk1\t_\t_
";
        assert!(matches!(parse_conllu(text), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn empty_document_is_empty_list() {
        assert!(parse_conllu("").unwrap().is_empty());
        assert!(parse_conllu("\n\n").unwrap().is_empty());
    }

    #[test]
    fn plain_splits_on_whitespace_runs() {
        let sentences = parse_plain("राम ने रावण को मारा\n\na  b\n");
        assert_eq!(sentences.len(), 2);
        assert_eq!(sentences[0].words.len(), 5);
        assert_eq!(sentences[1].id, "3");
        assert_eq!(sentences[1].words, vec!["a", "b"]);
    }

    #[test]
    fn plain_empty_file() {
        assert!(parse_plain("").is_empty());
    }

    #[test]
    fn parallel_mismatch_reports_counts() {
        let err = ParallelCorpus::from_columns(
            vec!["hin".into(), "kan".into()],
            vec![
                vec!["a".into(), "b".into(), "c".into()],
                vec!["x".into(), "y".into(), "z".into(), "w".into()],
            ],
        )
        .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains('3') && msg.contains('4'), "{msg}");
    }

    #[test]
    fn parallel_single_language() {
        let corpus = ParallelCorpus::from_columns(
            vec!["hin".into()],
            vec![vec!["एक".into(), "दो".into(), "तीन".into()]],
        )
        .unwrap();
        assert_eq!(corpus.len(), 3);
        assert_eq!(corpus.column("hin").unwrap(), vec!["एक", "दो", "तीन"]);
    }
}
