//! Reader and writer for the PGSolver text format, plus the solution
//! format used by the `solve` and `verify` commands.
//!
//! ```text
//! parity <max-id>;
//! <id> <priority> <owner> <succ>,<succ>,... "name";
//! ```
//!
//! The header is optional, names are optional, and tokens may be separated
//! by arbitrary whitespace. Owner `0` is even and `1` is odd.

use std::fmt::Write as _;

use super::{convert_priorities, ConvertDirection, Game, Player, RawGame, Vertex};
use crate::error::{Error, Result};

/// How priorities in a file are to be read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Convention {
    /// Least priority seen infinitely often wins (internal semantics).
    Min,
    /// Greatest priority seen infinitely often wins (PGSolver default).
    #[default]
    Max,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Word(String),
    Number(u64),
    Str(String),
    Comma,
    Semicolon,
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(bytes: &'a [u8]) -> Self {
        Lexer { bytes, pos: 0, line: 1, column: 1 }
    }

    fn error(&self, line: usize, column: usize, message: impl Into<String>) -> Error {
        Error::Syntax { line, column, message: message.into() }
    }

    fn bump(&mut self) -> Option<u8> {
        let b = *self.bytes.get(self.pos)?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(b)
    }

    /// Next token with the position it started at.
    fn next(&mut self) -> Result<Option<(Token, usize, usize)>> {
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.bump();
        }
        let (line, column) = (self.line, self.column);
        let Some(&b) = self.bytes.get(self.pos) else {
            return Ok(None);
        };
        let token = match b {
            b',' => {
                self.bump();
                Token::Comma
            }
            b';' => {
                self.bump();
                Token::Semicolon
            }
            b'"' => {
                self.bump();
                let mut s = Vec::new();
                loop {
                    match self.bump() {
                        None => return Err(self.error(line, column, "unterminated string")),
                        Some(b'"') => break,
                        Some(b'\\') => match self.bump() {
                            Some(c) => s.push(c),
                            None => return Err(self.error(line, column, "unterminated string")),
                        },
                        Some(c) => s.push(c),
                    }
                }
                Token::Str(String::from_utf8(s).map_err(|_| self.error(line, column, "name is not valid UTF-8"))?)
            }
            b'0'..=b'9' => {
                let mut value: u64 = 0;
                while let Some(&d) = self.bytes.get(self.pos).filter(|d| d.is_ascii_digit()) {
                    value = value
                        .checked_mul(10)
                        .and_then(|x| x.checked_add(u64::from(d - b'0')))
                        .ok_or_else(|| self.error(line, column, "number too large"))?;
                    self.bump();
                }
                Token::Number(value)
            }
            b if b.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_') {
                    self.bump();
                }
                Token::Word(String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned())
            }
            other => return Err(self.error(line, column, format!("unexpected character {:?}", other as char))),
        };
        Ok(Some((token, line, column)))
    }

    fn expect_number(&mut self, what: &str) -> Result<(u64, usize, usize)> {
        let (line, column) = (self.line, self.column);
        match self.next()? {
            Some((Token::Number(n), l, c)) => Ok((n, l, c)),
            Some((_, l, c)) => Err(self.error(l, c, format!("expected {what}"))),
            None => Err(self.error(line, column, format!("expected {what}, found end of input"))),
        }
    }
}

/// Parses a game. With [`Convention::Max`] the priorities are converted to
/// the internal min-parity convention.
pub fn parse_pgsolver(text: &[u8], convention: Convention) -> Result<Game> {
    let mut lexer = Lexer::new(text);
    let mut entries: Vec<Option<(u32, Player, Vec<Vertex>, Option<String>)>> = Vec::new();
    let mut declared_max: Option<u64> = None;
    let mut first = true;

    loop {
        let Some((token, line, column)) = lexer.next()? else { break };
        if first {
            first = false;
            if let Token::Word(w) = &token {
                if w == "parity" {
                    let (max, _, _) = lexer.expect_number("maximum vertex id")?;
                    match lexer.next()? {
                        Some((Token::Semicolon, _, _)) => {}
                        Some((_, l, c)) => return Err(lexer.error(l, c, "expected ';' after header")),
                        None => return Err(lexer.error(line, column, "unterminated header")),
                    }
                    declared_max = Some(max);
                    continue;
                }
            }
        }
        let id = match token {
            Token::Number(id) => id,
            _ => return Err(lexer.error(line, column, "expected vertex id")),
        };
        if declared_max.is_some_and(|max| id > max) {
            return Err(lexer.error(line, column, format!("vertex id {id} exceeds declared maximum")));
        }
        let (priority, pl, pc) = lexer.expect_number("priority")?;
        let priority = u32::try_from(priority).map_err(|_| lexer.error(pl, pc, "priority too large"))?;
        let (owner, ol, oc) = lexer.expect_number("owner")?;
        let owner = Player::from_index(owner).ok_or_else(|| lexer.error(ol, oc, "owner must be 0 or 1"))?;

        let mut successors = Vec::new();
        let mut name = None;
        let mut expect_succ = true;
        loop {
            let next = lexer.next()?;
            match next {
                Some((Token::Number(w), _, _)) if expect_succ => {
                    successors.push(w as Vertex);
                    expect_succ = false;
                }
                Some((Token::Comma, l, c)) => {
                    if expect_succ || name.is_some() {
                        return Err(lexer.error(l, c, "unexpected ','"));
                    }
                    expect_succ = true;
                }
                Some((Token::Str(s), l, c)) => {
                    if expect_succ || name.is_some() {
                        return Err(lexer.error(l, c, "unexpected name"));
                    }
                    name = Some(s);
                }
                Some((Token::Semicolon, l, c)) => {
                    if expect_succ && !successors.is_empty() {
                        return Err(lexer.error(l, c, "expected successor after ','"));
                    }
                    break;
                }
                Some((_, l, c)) => return Err(lexer.error(l, c, "unexpected token in vertex specification")),
                None => return Err(lexer.error(line, column, "vertex specification not terminated by ';'")),
            }
        }
        if successors.is_empty() {
            return Err(Error::InvalidGame(vec![super::Violation::Totality(id as Vertex)]));
        }

        let id = id as usize;
        if id >= entries.len() {
            entries.resize(id + 1, None);
        }
        if entries[id].is_some() {
            return Err(lexer.error(line, column, format!("duplicate vertex id {id}")));
        }
        entries[id] = Some((priority, owner, successors, name));
    }

    let mut raw = RawGame::with_vertices(entries.len());
    for (v, entry) in entries.into_iter().enumerate() {
        let Some((priority, owner, successors, name)) = entry else {
            return Err(Error::MissingVertex(v));
        };
        raw.priority[v] = priority;
        raw.owner[v] = owner;
        raw.successors[v] = successors;
        raw.names[v] = name;
    }
    if raw.vertex_count() == 0 {
        return Err(Error::Syntax { line: 1, column: 1, message: "game has no vertices".into() });
    }
    let game = Game::from_raw(raw)?;
    Ok(match convention {
        Convention::Min => game,
        Convention::Max => convert_priorities(&game, ConvertDirection::MaxToMin),
    })
}

/// Serialises a game: header, then one line per vertex in ascending order.
/// Lines are separated by `\n` with no trailing newline.
pub fn write_pgsolver(game: &Game, convention: Convention) -> String {
    let converted;
    let game = match convention {
        Convention::Min => game,
        Convention::Max => {
            converted = convert_priorities(game, ConvertDirection::MinToMax);
            &converted
        }
    };
    let mut out = String::new();
    write!(out, "parity {};", game.vertex_count() - 1).unwrap();
    for v in game.vertices() {
        write!(out, "\n{} {} {} ", v, game.priority(v), game.owner(v).index()).unwrap();
        for (k, w) in game.successors(v).iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            write!(out, "{w}").unwrap();
        }
        if let Some(name) = game.name(v).filter(|n| !n.is_empty()) {
            out.push_str(" \"");
            for c in name.chars() {
                if c == '"' || c == '\\' {
                    out.push('\\');
                }
                out.push(c);
            }
            out.push('"');
        }
        out.push(';');
    }
    out
}

/// Per-vertex winner plus the winner's move where the winner owns the
/// vertex. This is the data carried by a solution file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionRecord {
    pub winner: Vec<Player>,
    pub moves: Vec<Option<Vertex>>,
}

pub fn write_solution(record: &SolutionRecord) -> String {
    let mut out = String::new();
    write!(out, "solution {};", record.winner.len().saturating_sub(1)).unwrap();
    for (v, (winner, mv)) in record.winner.iter().zip(&record.moves).enumerate() {
        write!(out, "\n{} {}", v, winner.index()).unwrap();
        if let Some(w) = mv {
            write!(out, " {w}").unwrap();
        }
        out.push(';');
    }
    out
}

pub fn parse_solution(text: &[u8]) -> Result<SolutionRecord> {
    let mut lexer = Lexer::new(text);
    match lexer.next()? {
        Some((Token::Word(w), _, _)) if w == "solution" => {}
        Some((_, l, c)) => return Err(lexer.error(l, c, "expected 'solution' header")),
        None => return Err(lexer.error(1, 1, "empty solution")),
    }
    let (max, _, _) = lexer.expect_number("maximum vertex id")?;
    match lexer.next()? {
        Some((Token::Semicolon, _, _)) => {}
        Some((_, l, c)) => return Err(lexer.error(l, c, "expected ';' after header")),
        None => return Err(lexer.error(1, 1, "unterminated header")),
    }
    let n = max as usize + 1;
    let mut winner: Vec<Option<Player>> = vec![None; n];
    let mut moves = vec![None; n];
    while let Some((token, line, column)) = lexer.next()? {
        let Token::Number(id) = token else {
            return Err(lexer.error(line, column, "expected vertex id"));
        };
        let v = id as usize;
        if v >= n {
            return Err(lexer.error(line, column, format!("vertex id {id} exceeds declared maximum")));
        }
        if winner[v].is_some() {
            return Err(lexer.error(line, column, format!("duplicate vertex id {id}")));
        }
        let (w, wl, wc) = lexer.expect_number("winner")?;
        winner[v] = Some(Player::from_index(w).ok_or_else(|| lexer.error(wl, wc, "winner must be 0 or 1"))?);
        match lexer.next()? {
            Some((Token::Semicolon, _, _)) => {}
            Some((Token::Number(m), _, _)) => {
                moves[v] = Some(m as Vertex);
                match lexer.next()? {
                    Some((Token::Semicolon, _, _)) => {}
                    Some((_, l, c)) => return Err(lexer.error(l, c, "expected ';'")),
                    None => return Err(lexer.error(line, column, "unterminated line")),
                }
            }
            Some((_, l, c)) => return Err(lexer.error(l, c, "expected move or ';'")),
            None => return Err(lexer.error(line, column, "unterminated line")),
        }
    }
    let winner = winner
        .into_iter()
        .enumerate()
        .map(|(v, w)| w.ok_or(Error::MissingVertex(v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SolutionRecord { winner, moves })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const G1_TEXT: &str = "parity 1;\n0 0 0 1;\n1 1 1 0;";

    #[test]
    fn parse_examples() {
        let g = parse_pgsolver(G1_TEXT.as_bytes(), Convention::Min).unwrap();
        assert_eq!(g, fixtures::g1());

        let g = parse_pgsolver(b"parity 0;\n0 2 0 0;", Convention::Min).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.priority(0), 2);
        assert_eq!(g.owner(0), Player::Even);
        assert_eq!(g.successors(0), &[0]);
    }

    #[test]
    fn parse_rejects_empty_successor_list() {
        let err = parse_pgsolver(b"parity 1;\n0 0 0 1;\n1 1 1;", Convention::Min).unwrap_err();
        assert!(matches!(err, Error::InvalidGame(ref v) if v == &[super::super::Violation::Totality(1)]));
    }

    #[test]
    fn parse_errors() {
        let dangling = parse_pgsolver(b"0 0 0 5;", Convention::Min).unwrap_err();
        assert!(matches!(dangling, Error::InvalidGame(_)));
        let dup = parse_pgsolver(b"0 0 0 0;\n0 1 1 0;", Convention::Min).unwrap_err();
        assert!(matches!(dup, Error::Syntax { line: 2, column: 1, .. }), "{dup:?}");
        let bad = parse_pgsolver(b"parity 1;\n0 0 x 1;", Convention::Min).unwrap_err();
        assert!(matches!(bad, Error::Syntax { line: 2, column: 5, .. }), "{bad:?}");
        let missing = parse_pgsolver(b"1 0 0 1;", Convention::Min).unwrap_err();
        assert!(matches!(missing, Error::MissingVertex(0)));
        assert!(parse_pgsolver(b"0 0 0 0", Convention::Min).is_err());
        assert!(parse_pgsolver(b"0 0 0 0,;", Convention::Min).is_err());
        assert!(parse_pgsolver(b"0 0 2 0;", Convention::Min).is_err());
    }

    #[test]
    fn parse_is_whitespace_tolerant_and_keeps_names() {
        let g = parse_pgsolver(b"  parity 1 ;0 0 0 1 \"a \\\"b\\\"\";\n\n1   1 1 0 , 1 ;  ", Convention::Min).unwrap();
        assert_eq!(g.name(0), Some("a \"b\""));
        assert_eq!(g.successors(1), &[0, 1]);
        let text = write_pgsolver(&g, Convention::Min);
        assert_eq!(text, "parity 1;\n0 0 0 1 \"a \\\"b\\\"\";\n1 1 1 0,1;");
        assert_eq!(parse_pgsolver(text.as_bytes(), Convention::Min).unwrap(), g);
    }

    #[test]
    fn write_examples() {
        assert_eq!(write_pgsolver(&fixtures::g1(), Convention::Min), G1_TEXT);
        let mut raw = fixtures::g1().to_raw();
        raw.names[0] = Some(String::new());
        let g = Game::from_raw(raw).unwrap();
        assert_eq!(write_pgsolver(&g, Convention::Min), G1_TEXT);
    }

    #[test]
    fn max_convention_converts_priorities() {
        let g = parse_pgsolver(b"0 2 0 1;\n1 1 1 0;", Convention::Max).unwrap();
        assert_eq!(g.priorities(), &[0, 1]);
        assert_eq!(write_pgsolver(&g, Convention::Max), "parity 1;\n0 2 0 1;\n1 1 1 0;");
    }

    #[test]
    fn solution_round_trip() {
        let record = SolutionRecord {
            winner: vec![Player::Even, Player::Odd, Player::Even],
            moves: vec![Some(1), None, None],
        };
        let text = write_solution(&record);
        assert_eq!(text, "solution 2;\n0 0 1;\n1 1;\n2 0;");
        assert_eq!(parse_solution(text.as_bytes()).unwrap(), record);
        assert!(parse_solution(b"solution 1;\n0 0;").is_err());
        assert!(parse_solution(b"solution 0;\n0 2;").is_err());
    }
}
