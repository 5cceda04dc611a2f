use thiserror::Error;

use super::{BaseSurface, Epsilon, InvariantTuple, SeifertPair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: expected {expected}, found {found}")]
    Syntax {
        pos: usize,
        expected: &'static str,
        found: String,
    },
    #[error("arity error at byte {pos}: missing {part}")]
    Arity { pos: usize, part: &'static str },
    #[error("integer out of range at byte {pos}")]
    IntegerRange { pos: usize },
    #[error("{field} must be non-negative (byte {pos})")]
    Negative { pos: usize, field: &'static str },
}

/// Parses the ASCII tuple grammar
///
/// ```text
/// tuple := "(" int ";" "(" eps "," int "," int "," int ")" ";" pairs ";" rs ")"
/// ```
///
/// Whitespace between tokens is ignored.
pub fn parse_tuple(text: &str) -> Result<InvariantTuple, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let t = p.tuple()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax("end of input"));
    }
    Ok(t)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, expected: &'static str) -> ParseError {
        let found = match self.src.get(self.pos) {
            Some(&c) => format!("'{}'", c as char),
            None => "end of input".to_string(),
        };
        ParseError::Syntax {
            pos: self.pos,
            expected,
            found,
        }
    }

    fn expect(&mut self, c: u8, expected: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(expected))
        }
    }

    // Separator inside a fixed-arity group; hitting the group's closer
    // (or the end of input) instead means a part is missing.
    fn separator(&mut self, sep: u8, close: u8, part: &'static str) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == sep => {
                self.pos += 1;
                Ok(())
            }
            Some(c) if c == close => Err(ParseError::Arity { pos: self.pos, part }),
            None => Err(ParseError::Arity { pos: self.pos, part }),
            _ => Err(self.syntax(if sep == b';' { "';'" } else { "','" })),
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.syntax("integer"));
        }
        // The slice is ASCII sign + digits.
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|_| ParseError::IntegerRange { pos: start })
    }

    fn count(&mut self, field: &'static str) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let v = self.int()?;
        if v < 0 {
            return Err(ParseError::Negative { pos: start, field });
        }
        u32::try_from(v).map_err(|_| ParseError::IntegerRange { pos: start })
    }

    fn tuple(&mut self) -> Result<InvariantTuple, ParseError> {
        self.expect(b'(', "'('")?;
        let b = self.int()?;
        self.separator(b';', b')', "orbit-space data (ε,g,f,t)")?;
        let (surface, f, t) = self.surface()?;
        self.separator(b';', b')', "exceptional pair list")?;
        let pairs = self.pairs()?;
        self.separator(b';', b')', "singular list")?;
        let rs = self.ints()?;
        self.expect(b')', "')'")?;
        Ok(InvariantTuple::new(b, surface, f, t, pairs, rs))
    }

    fn surface(&mut self) -> Result<(BaseSurface, u32, u32), ParseError> {
        self.expect(b'(', "'('")?;
        let epsilon = match self.peek() {
            Some(b'o') => Epsilon::Orientable,
            Some(b'n') => Epsilon::Nonorientable,
            _ => return Err(self.syntax("'o' or 'n'")),
        };
        self.pos += 1;
        self.separator(b',', b')', "genus")?;
        let genus = self.count("genus")?;
        self.separator(b',', b')', "f")?;
        let f = self.count("f")?;
        self.separator(b',', b')', "t")?;
        let t = self.count("t")?;
        self.expect(b')', "')'")?;
        Ok((BaseSurface { epsilon, genus }, f, t))
    }

    fn pairs(&mut self) -> Result<Vec<SeifertPair>, ParseError> {
        self.expect(b'[', "'['")?;
        let mut out = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            self.expect(b'(', "'('")?;
            let alpha = self.int()?;
            self.separator(b',', b')', "β of Seifert pair")?;
            let beta = self.int()?;
            self.expect(b')', "')'")?;
            out.push(SeifertPair::new(alpha, beta));
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.syntax("',' or ']'")),
            }
        }
    }

    fn ints(&mut self) -> Result<Vec<i64>, ParseError> {
        self.expect(b'[', "'['")?;
        let mut out = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(self.int()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.syntax("',' or ']'")),
            }
        }
    }
}
