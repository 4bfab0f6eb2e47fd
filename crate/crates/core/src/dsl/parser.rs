use super::lexer::{Tok, Token};
use super::{
    ActionDecl, CategoryDecl, CellDecl, CheckDecl, CheckKind, Decl, Diagnostic, DiagnosticKind, FunctorDecl, HetDecl,
    Ident, SourceSpec, Span,
};

struct Parser<'a> {
    text: &'a str,
    toks: &'a [Token],
    pos: usize,
}

type PResult<T> = Result<T, Diagnostic>;

pub fn parse_tokens(text: &str, toks: &[Token]) -> Result<SourceSpec, Vec<Diagnostic>> {
    let mut p = Parser { text, toks, pos: 0 };
    let mut decls = Vec::new();
    while p.peek().tok != Tok::Eof {
        decls.push(p.decl().map_err(|d| vec![d])?);
    }
    Ok(SourceSpec { decls })
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, t: &Token, msg: impl Into<String>) -> Diagnostic {
        let span = match self.toks.iter().rposition(|p| p.tok != Tok::Eof) {
            // point at the last token rather than past the end
            Some(last) if t.tok == Tok::Eof => self.toks[last].span,
            _ => t.span,
        };
        Diagnostic::new(DiagnosticKind::Syntax, msg, self.text, span)
    }

    fn expect(&mut self, want: Tok) -> PResult<Span> {
        let t = self.next();
        if t.tok == want {
            Ok(t.span)
        } else {
            Err(self.error(&t, format!("expected {}, found {}", want.describe(), t.tok.describe())))
        }
    }

    fn eat(&mut self, want: &Tok) -> bool {
        if &self.peek().tok == want {
            self.next();
            true
        } else {
            false
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<Span> {
        let t = self.next();
        match &t.tok {
            Tok::Name(n) if n == kw => Ok(t.span),
            other => Err(self.error(&t, format!("expected `{kw}`, found {}", other.describe()))),
        }
    }

    fn peek_keyword(&self) -> Option<&str> {
        match &self.peek().tok {
            Tok::Name(n) => Some(n),
            _ => None,
        }
    }

    fn ident(&mut self) -> PResult<Ident> {
        let t = self.next();
        match &t.tok {
            Tok::Name(n) => {
                let next = self.peek();
                if next.tok == Tok::LParen && next.span.start == t.span.end {
                    let tup = self.tuple()?;
                    Ok(Ident {
                        text: format!("{n}{}", tup.text),
                        span: t.span.to(tup.span),
                    })
                } else {
                    Ok(Ident {
                        text: n.clone(),
                        span: t.span,
                    })
                }
            }
            Tok::LParen => {
                self.pos -= 1;
                self.tuple()
            }
            other => Err(self.error(&t, format!("expected a name, found {}", other.describe()))),
        }
    }

    fn tuple(&mut self) -> PResult<Ident> {
        let open = self.expect(Tok::LParen)?;
        let mut parts = vec![self.ident()?.text];
        while self.eat(&Tok::Comma) {
            parts.push(self.ident()?.text);
        }
        let close = self.expect(Tok::RParen)?;
        Ok(Ident {
            text: format!("({})", parts.join(",")),
            span: open.to(close),
        })
    }

    fn decl(&mut self) -> PResult<Decl> {
        let t = self.peek().clone();
        match self.peek_keyword() {
            Some("category") => self.category().map(Decl::Category),
            Some("functor") => self.functor().map(Decl::Functor),
            Some("het") => self.het().map(Decl::Het),
            Some("check") => self.check().map(Decl::Check),
            _ => Err(self.error(
                &t,
                format!("expected `category`, `functor`, `het` or `check`, found {}", t.tok.describe()),
            )),
        }
    }

    /// `item (, item)* ;`
    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> PResult<T>) -> PResult<Vec<T>> {
        let mut out = vec![item(self)?];
        while self.eat(&Tok::Comma) {
            out.push(item(self)?);
        }
        self.expect(Tok::Semi)?;
        Ok(out)
    }

    fn category(&mut self) -> PResult<CategoryDecl> {
        let start = self.keyword("category")?;
        let name = self.ident()?;
        self.expect(Tok::LBrace)?;
        let mut c = CategoryDecl {
            name,
            objects: Vec::new(),
            morphisms: Vec::new(),
            identities: Vec::new(),
            compose: Vec::new(),
            span: start,
        };
        loop {
            if self.peek().tok == Tok::RBrace {
                break;
            }
            let t = self.peek().clone();
            match self.peek_keyword() {
                Some("objects") => {
                    self.next();
                    self.expect(Tok::Colon)?;
                    let v = self.list(Self::ident)?;
                    c.objects.extend(v);
                }
                Some("morphisms") => {
                    self.next();
                    self.expect(Tok::Colon)?;
                    let v = self.list(|p| {
                        let m = p.ident()?;
                        p.expect(Tok::Colon)?;
                        let d = p.ident()?;
                        p.expect(Tok::Arrow)?;
                        let e = p.ident()?;
                        Ok((m, d, e))
                    })?;
                    c.morphisms.extend(v);
                }
                Some("identities") => {
                    self.next();
                    self.expect(Tok::Colon)?;
                    let v = self.list(|p| {
                        let o = p.ident()?;
                        p.expect(Tok::Eq)?;
                        Ok((o, p.ident()?))
                    })?;
                    c.identities.extend(v);
                }
                Some("compose") => {
                    self.next();
                    self.expect(Tok::Colon)?;
                    let v = self.list(|p| {
                        let g = p.ident()?;
                        p.expect(Tok::Dot)?;
                        let f = p.ident()?;
                        p.expect(Tok::Eq)?;
                        Ok((g, f, p.ident()?))
                    })?;
                    c.compose.extend(v);
                }
                _ => {
                    return Err(self.error(
                        &t,
                        format!(
                            "expected `objects`, `morphisms`, `identities`, `compose` or `}}`, found {}",
                            t.tok.describe()
                        ),
                    ))
                }
            }
        }
        let end = self.expect(Tok::RBrace)?;
        c.span = start.to(end);
        Ok(c)
    }

    fn functor(&mut self) -> PResult<FunctorDecl> {
        let start = self.keyword("functor")?;
        let name = self.ident()?;
        self.expect(Tok::Colon)?;
        let source = self.ident()?;
        self.expect(Tok::Arrow)?;
        let target = self.ident()?;
        self.expect(Tok::LBrace)?;
        let mut f = FunctorDecl {
            name,
            source,
            target,
            objects: Vec::new(),
            morphisms: Vec::new(),
            span: start,
        };
        while self.peek().tok != Tok::RBrace {
            let t = self.peek().clone();
            let is_obj = match self.peek_keyword() {
                Some("obj") => true,
                Some("mor") => false,
                _ => {
                    return Err(self.error(&t, format!("expected `obj`, `mor` or `}}`, found {}", t.tok.describe())))
                }
            };
            self.next();
            let a = self.ident()?;
            self.expect(Tok::MapsTo)?;
            let b = self.ident()?;
            self.expect(Tok::Semi)?;
            if is_obj {
                f.objects.push((a, b));
            } else {
                f.morphisms.push((a, b));
            }
        }
        let end = self.expect(Tok::RBrace)?;
        f.span = start.to(end);
        Ok(f)
    }

    fn pair(&mut self) -> PResult<(Ident, Ident)> {
        self.expect(Tok::LParen)?;
        let x = self.ident()?;
        self.expect(Tok::Comma)?;
        let a = self.ident()?;
        self.expect(Tok::RParen)?;
        Ok((x, a))
    }

    fn action(&mut self, start: Span) -> PResult<ActionDecl> {
        let mor = self.ident()?;
        let elem = self.ident()?;
        let cell = if self.eat(&Tok::At) { Some(self.pair()?) } else { None };
        self.expect(Tok::Eq)?;
        let result = self.ident()?;
        let end = self.expect(Tok::Semi)?;
        Ok(ActionDecl {
            mor,
            elem,
            cell,
            result,
            span: start.to(end),
        })
    }

    fn het(&mut self) -> PResult<HetDecl> {
        let start = self.keyword("het")?;
        let name = self.ident()?;
        self.expect(Tok::Colon)?;
        let source = self.ident()?;
        self.expect(Tok::HetArrow)?;
        let target = self.ident()?;
        self.expect(Tok::LBrace)?;
        let mut h = HetDecl {
            name,
            source,
            target,
            cells: Vec::new(),
            left: Vec::new(),
            right: Vec::new(),
            span: start,
            left_cells: Vec::new(),
            right_cells: Vec::new(),
        };
        while self.peek().tok != Tok::RBrace {
            let t = self.peek().clone();
            match self.peek_keyword() {
                Some("cell") => {
                    self.next();
                    let (x, a) = self.pair()?;
                    self.expect(Tok::Colon)?;
                    let elements = if self.eat(&Tok::Semi) { Vec::new() } else { self.list(Self::ident)? };
                    h.cells.push(CellDecl { x, a, elements });
                }
                Some("left") => {
                    self.next();
                    let a = self.action(t.span)?;
                    h.left.push(a);
                }
                Some("right") => {
                    self.next();
                    let a = self.action(t.span)?;
                    h.right.push(a);
                }
                _ => {
                    return Err(self.error(
                        &t,
                        format!("expected `cell`, `left`, `right` or `}}`, found {}", t.tok.describe()),
                    ))
                }
            }
        }
        let end = self.expect(Tok::RBrace)?;
        h.span = start.to(end);
        Ok(h)
    }

    fn check(&mut self) -> PResult<CheckDecl> {
        let start = self.keyword("check")?;
        let t = self.next();
        let kind = match &t.tok {
            Tok::Name(n) if n == "category" => CheckKind::Category,
            Tok::Name(n) if n == "functor" => CheckKind::Functor,
            Tok::Name(n) if n == "het" => CheckKind::Het,
            Tok::Name(n) if n == "adjunction" => {
                self.keyword("from")?;
                self.keyword("het")?;
                CheckKind::Adjunction
            }
            other => {
                return Err(self.error(
                    &t,
                    format!("expected `category`, `functor`, `het` or `adjunction`, found {}", other.describe()),
                ))
            }
        };
        let target = self.ident()?;
        let end = self.expect(Tok::Semi)?;
        Ok(CheckDecl {
            kind,
            target,
            span: start.to(end),
        })
    }
}
