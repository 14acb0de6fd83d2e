use num_bigint::BigInt;

use super::ast::Span;
use super::error::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    LParen,
    RParen,
    Comma,
    Eq,
    Slash,
    Minus,
    Newline,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Newline => "end of line".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let (mut pos, mut line, mut line_start) = (0usize, 1usize, 0usize);
    let span = |start: usize, end: usize, line: usize, line_start: usize| Span {
        start,
        end,
        line,
        column: start - line_start + 1,
    };
    while pos < bytes.len() {
        let c = bytes[pos];
        let start = pos;
        let single = match c {
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b',' => Some(Tok::Comma),
            b'=' => Some(Tok::Eq),
            b'/' => Some(Tok::Slash),
            b'-' => Some(Tok::Minus),
            _ => None,
        };
        if let Some(tok) = single {
            pos += 1;
            out.push(Token {
                tok,
                span: span(start, pos, line, line_start),
            });
            continue;
        }
        match c {
            b'\n' => {
                pos += 1;
                out.push(Token {
                    tok: Tok::Newline,
                    span: span(start, pos, line, line_start),
                });
                line += 1;
                line_start = pos;
            }
            b' ' | b'\t' | b'\r' => pos += 1,
            b'#' => {
                while pos < bytes.len() && bytes[pos] != b'\n' {
                    pos += 1;
                }
            }
            b'0'..=b'9' => {
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let n: BigInt = src[start..pos].parse().expect("ascii digits");
                out.push(Token {
                    tok: Tok::Int(n),
                    span: span(start, pos, line, line_start),
                });
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
                    pos += 1;
                }
                out.push(Token {
                    tok: Tok::Ident(src[start..pos].to_string()),
                    span: span(start, pos, line, line_start),
                });
            }
            _ => {
                let ch = src[start..].chars().next().expect("non-empty");
                let end = start + ch.len_utf8();
                return Err(ParseError::Syntax {
                    span: span(start, end, line, line_start),
                    expected: vec!["a token".into()],
                    found: format!("`{ch}`"),
                });
            }
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        span: span(pos, pos, line, line_start),
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans_are_byte_accurate() {
        let toks = tokenize("point A = (5/2, -1)  # c\nline l").unwrap();
        let a = &toks[1];
        assert_eq!(a.tok, Tok::Ident("A".into()));
        assert_eq!((a.span.start, a.span.end, a.span.line, a.span.column), (6, 7, 1, 7));
        let l = toks.iter().find(|t| t.tok == Tok::Ident("l".into())).unwrap();
        assert_eq!((l.span.line, l.span.column), (2, 6));
        assert!(!toks.iter().any(|t| matches!(&t.tok, Tok::Ident(s) if s == "c")));
    }

    #[test]
    fn rejects_stray_characters() {
        let err = tokenize("point A = (1.5, 0)").unwrap_err();
        match err {
            ParseError::Syntax { span, found, .. } => {
                assert_eq!(span.column, 13);
                assert_eq!(found, "`.`");
            }
            other => panic!("{other:?}"),
        }
    }
}
