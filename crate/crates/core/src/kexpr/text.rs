//! Text form: `v1`, `(a|b)`, `j(1,2,e)`, `r(1->2,e)`. Whitespace is
//! ignored on input; output has none.

use super::{KExpr, KexprError, Label};

pub fn print_kexpr(e: &KExpr) -> String {
    let mut out = String::new();
    write(e, &mut out);
    out
}

fn write(e: &KExpr, out: &mut String) {
    match e {
        KExpr::Create(l) => {
            out.push('v');
            out.push_str(&l.to_string());
        }
        KExpr::Union(a, b) => {
            out.push('(');
            write(a, out);
            out.push('|');
            write(b, out);
            out.push(')');
        }
        KExpr::Join(i, j, c) => {
            out.push_str(&format!("j({i},{j},"));
            write(c, out);
            out.push(')');
        }
        KExpr::Rename(i, j, c) => {
            out.push_str(&format!("r({i}->{j},"));
            write(c, out);
            out.push(')');
        }
    }
}

/// Parses the text form. Positions in errors are byte offsets.
pub fn parse_kexpr(text: &str) -> Result<KExpr, KexprError> {
    let mut p = Parser {
        toks: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
        at: 0,
        len: text.len(),
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser {
    toks: Vec<(usize, char)>,
    at: usize,
    len: usize,
}

impl Parser {
    fn error(&self, msg: &str) -> KexprError {
        KexprError::Parse {
            pos: self.toks.get(self.at).map_or(self.len, |&(i, _)| i),
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.toks.get(self.at).map(|&(_, c)| c)
    }

    fn expect(&mut self, c: char) -> Result<(), KexprError> {
        if self.peek() == Some(c) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn label(&mut self) -> Result<Label, KexprError> {
        let start = self.at;
        let mut value: Label = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d))
                .ok_or_else(|| self.error("label overflow"))?;
            self.at += 1;
        }
        if self.at == start {
            return Err(self.error("expected label"));
        }
        if value == 0 {
            self.at = start;
            return Err(self.error("labels must be positive"));
        }
        Ok(value)
    }

    fn expr(&mut self) -> Result<KExpr, KexprError> {
        match self.peek() {
            Some('v') => {
                self.at += 1;
                Ok(KExpr::Create(self.label()?))
            }
            Some('(') => {
                self.at += 1;
                let a = self.expr()?;
                self.expect('|')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(KExpr::union(a, b))
            }
            Some('j') => {
                self.at += 1;
                self.expect('(')?;
                let i = self.label()?;
                self.expect(',')?;
                let j = self.label()?;
                self.expect(',')?;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(KExpr::join(i, j, e))
            }
            Some('r') => {
                self.at += 1;
                self.expect('(')?;
                let i = self.label()?;
                self.expect('-')?;
                self.expect('>')?;
                let j = self.label()?;
                self.expect(',')?;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(KExpr::rename(i, j, e))
            }
            _ => Err(self.error("expected v, (, j( or r(")),
        }
    }
}
