use std::fs::File;
use std::io::{BufRead, BufReader, Lines};
use std::path::Path;

use super::HarnessError;
use crate::graph::{graph6, Graph};

/// Largest order accepted by the built-in labeled enumeration.
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Number of labeled graphs on `n` vertices.
pub fn labeled_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Every labeled graph on `n` vertices, in increasing edge-mask order (see
/// [`Graph::from_edge_mask`]).
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph>, HarnessError> {
    check_order(n)?;
    Ok((0..labeled_count(n)).map(move |mask| Graph::from_edge_mask(n, mask).expect("order checked")))
}

pub(crate) fn check_order(n: usize) -> Result<(), HarnessError> {
    if n == 0 {
        return Err(HarnessError::InvalidConfig("enumeration order must be at least 1".into()));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(HarnessError::OrderTooLarge(n));
    }
    Ok(())
}

/// Streams graphs from a file of newline-separated graph6 strings. Blank
/// lines are skipped and an optional `>>graph6<<` header is accepted.
pub struct Graph6Reader<R> {
    lines: Lines<R>,
    line_no: usize,
    failed: bool,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(reader: R) -> Self {
        Self { lines: reader.lines(), line_no: 0, failed: false }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<Graph, HarnessError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        loop {
            let line = match self.lines.next()? {
                Ok(line) => line,
                Err(e) => {
                    self.failed = true;
                    return Some(Err(HarnessError::Io(e.to_string())));
                }
            };
            self.line_no += 1;
            let text = line.trim();
            let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
            if text.is_empty() {
                continue;
            }
            let parsed = graph6::from_graph6(text).map_err(|source| HarnessError::Parse { line: self.line_no, source });
            self.failed = parsed.is_err();
            return Some(parsed);
        }
    }
}

pub fn ingest_graph6(path: impl AsRef<Path>) -> Result<Graph6Reader<BufReader<File>>, HarnessError> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))?;
    Ok(Graph6Reader::new(BufReader::new(file)))
}

pub fn read_graph6_file(path: impl AsRef<Path>) -> Result<Vec<Graph>, HarnessError> {
    ingest_graph6(path)?.collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled(5).unwrap().count(), 1024);
        assert_eq!(labeled_count(7), 2_097_152);
        assert_eq!(enumerate_labeled(1).unwrap().count(), 1);
        assert!(matches!(enumerate_labeled(8), Err(HarnessError::OrderTooLarge(8))));
        assert!(enumerate_labeled(0).is_err());
    }

    #[test]
    fn enumeration_is_lexicographic_and_distinct() {
        let graphs: Vec<_> = enumerate_labeled(4).unwrap().collect();
        assert_eq!(graphs[0].size(), 0);
        assert_eq!(graphs[1].edges(), vec![(0, 1)]);
        assert_eq!(graphs.last().unwrap().size(), 6);
        let unique: std::collections::HashSet<_> = graphs.iter().cloned().collect();
        assert_eq!(unique.len(), 64);
    }

    #[test]
    fn reader_handles_blank_lines_and_header() {
        let input = ">>graph6<<A_\n\nD?{\n";
        let graphs: Vec<_> = Graph6Reader::new(Cursor::new(input)).collect::<Result<_, _>>().unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[1].order(), 5);
    }

    #[test]
    fn reader_reports_line_number_and_stops() {
        let input = "A_\nD?\nA_\n";
        let mut reader = Graph6Reader::new(Cursor::new(input));
        assert!(reader.next().unwrap().is_ok());
        assert!(matches!(reader.next().unwrap(), Err(HarnessError::Parse { line: 2, .. })));
        assert!(reader.next().is_none());
    }

    #[test]
    fn empty_input() {
        assert_eq!(Graph6Reader::new(Cursor::new("")).count(), 0);
    }
}
