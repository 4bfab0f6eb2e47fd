use super::{Diagnostic, DiagnosticKind, Span};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Name(String),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Colon,
    Semi,
    Dot,
    Eq,
    At,
    /// `->`
    Arrow,
    /// `-/->`
    HetArrow,
    /// `=>`
    MapsTo,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Name(n) => format!("`{n}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Eq => "`=`".into(),
            Tok::At => "`@`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::HetArrow => "`-/->`".into(),
            Tok::MapsTo => "`=>`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

pub fn lex(text: &str) -> Result<Vec<Token>, Vec<Diagnostic>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut errors = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if text[i..].starts_with("//") {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        let start = i;
        let simple = match c {
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b'{' => Some(Tok::LBrace),
            b'}' => Some(Tok::RBrace),
            b',' => Some(Tok::Comma),
            b':' => Some(Tok::Colon),
            b';' => Some(Tok::Semi),
            b'.' => Some(Tok::Dot),
            b'@' => Some(Tok::At),
            _ => None,
        };
        if let Some(tok) = simple {
            i += 1;
            out.push(Token {
                tok,
                span: Span::new(start, i),
            });
            continue;
        }
        let rest = &text[i..];
        let multi = [("-/->", Tok::HetArrow), ("->", Tok::Arrow), ("=>", Tok::MapsTo), ("=", Tok::Eq)]
            .into_iter()
            .find(|(p, _)| rest.starts_with(p));
        if let Some((p, tok)) = multi {
            i += p.len();
            out.push(Token {
                tok,
                span: Span::new(start, i),
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Name(text[start..i].to_string()),
                span: Span::new(start, i),
            });
            continue;
        }
        let ch = rest.chars().next().expect("non-empty remainder");
        i += ch.len_utf8();
        errors.push(Diagnostic::new(
            DiagnosticKind::Lexical,
            format!("unexpected character `{ch}`"),
            text,
            Span::new(start, i),
        ));
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    out.push(Token {
        tok: Tok::Eof,
        span: Span::new(text.len(), text.len()),
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrows_are_distinguished() {
        let t: Vec<Tok> = lex("a -> b -/-> c => d = e").unwrap().into_iter().map(|t| t.tok).collect();
        assert_eq!(t[1], Tok::Arrow);
        assert_eq!(t[3], Tok::HetArrow);
        assert_eq!(t[5], Tok::MapsTo);
        assert_eq!(t[7], Tok::Eq);
    }

    #[test]
    fn comments_are_skipped_and_bad_chars_reported() {
        assert_eq!(lex("// nothing\n").unwrap().len(), 1);
        let e = lex("a # b").unwrap_err();
        assert_eq!(e[0].kind, DiagnosticKind::Lexical);
        assert_eq!(e[0].column, 3);
    }
}
