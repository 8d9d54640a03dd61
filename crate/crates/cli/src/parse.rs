//! Literals: semigroups `<a1,...,an>` and ideals `(g1,...,gk)`.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_space(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.text[self.pos..].chars().next().unwrap().len_utf8();
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_space();
        if self.text[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_space();
        let start = self.pos;
        let bytes = self.text.as_bytes();
        let mut end = start;
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits {
            return Err(self.error("expected an integer"));
        }
        let value = self.text[start..end]
            .parse()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos = end;
        Ok(value)
    }

    fn list(&mut self, open: char, close: char) -> Result<Vec<i64>, ParseError> {
        self.expect(open)?;
        let mut values = vec![self.integer()?];
        loop {
            self.skip_space();
            if self.text[self.pos..].starts_with(close) {
                self.pos += close.len_utf8();
                break;
            }
            self.expect(',')?;
            values.push(self.integer()?);
        }
        self.skip_space();
        if self.pos != self.text.len() {
            return Err(self.error("unexpected trailing input"));
        }
        Ok(values)
    }
}

fn parse_list(text: &str, open: char, close: char) -> Result<Vec<i64>, ParseError> {
    Cursor { text, pos: 0 }.list(open, close)
}

/// Generators of a semigroup literal `<a1,...,an>`.
pub fn parse_semigroup(text: &str) -> Result<Vec<i64>, ParseError> {
    parse_list(text, '<', '>')
}

/// Generators of an ideal literal `(g1,...,gk)`; exponents may be negative.
pub fn parse_ideal(text: &str) -> Result<Vec<i64>, ParseError> {
    parse_list(text, '(', ')')
}

pub fn format_semigroup(gens: &[i64]) -> String {
    format!("<{}>", join(gens))
}

pub fn format_ideal(gens: &[i64]) -> String {
    format!("({})", join(gens))
}

fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        assert_eq!(parse_semigroup("<4,6,7>"), Ok(vec![4, 6, 7]));
        assert_eq!(parse_semigroup(" < 4 , 5,11 > "), Ok(vec![4, 5, 11]));
        assert_eq!(parse_ideal("(8,9,15,16,22)"), Ok(vec![8, 9, 15, 16, 22]));
        assert_eq!(parse_ideal("(-4,0)"), Ok(vec![-4, 0]));
    }

    #[test]
    fn error_offsets() {
        assert_eq!(parse_semigroup("4,6>").unwrap_err().offset, 0);
        assert_eq!(parse_semigroup("<4,,6>").unwrap_err().offset, 3);
        assert_eq!(parse_semigroup("<4,6").unwrap_err().offset, 4);
        assert_eq!(parse_ideal("(7,8)x").unwrap_err().offset, 5);
        assert_eq!(parse_ideal("()").unwrap_err().offset, 1);
        assert_eq!(
            parse_ideal("(99999999999999999999)").unwrap_err().message,
            "integer out of range"
        );
    }

    #[test]
    fn printing_round_trips() {
        assert_eq!(
            parse_semigroup(&format_semigroup(&[4, 6, 7])),
            Ok(vec![4, 6, 7])
        );
        assert_eq!(parse_ideal(&format_ideal(&[-4, 2, 3])), Ok(vec![-4, 2, 3]));
    }
}
