use super::presentation::Presentation;
use super::word::Word;
use crate::error::{Error, Result};

/// A presentation file plus optional `sub:` lines naming subgroup generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationFile {
    pub presentation: Presentation,
    pub subgroup: Vec<Word>,
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    Ok(parse_presentation_file(text)?.presentation)
}

/// Parses `gens:`, `rel:` and `sub:` lines; `#` starts a comment.
pub fn parse_presentation_file(text: &str) -> Result<PresentationFile> {
    let mut names: Option<Vec<String>> = None;
    let mut relators = Vec::new();
    let mut subgroup = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let offset = line.len() - trimmed.len();
        let err = |col: usize, msg: &str| Error::Parse { line: line_no, column: col, message: msg.to_string() };
        let (key, rest) = trimmed.split_once(':').ok_or_else(|| err(offset + 1, "expected `gens:`, `rel:` or `sub:`"))?;
        let body_col = offset + key.len() + 2;
        match key.trim() {
            "gens" => {
                if names.is_some() {
                    return Err(err(offset + 1, "duplicate `gens:` line"));
                }
                let list: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if list.is_empty() {
                    return Err(err(body_col, "no generators"));
                }
                for n in &list {
                    if !is_name(n) {
                        return Err(err(body_col, &format!("bad generator name {n:?}")));
                    }
                }
                names = Some(list);
            }
            k @ ("rel" | "sub") => {
                let names = names.as_ref().ok_or_else(|| err(offset + 1, "`gens:` must come first"))?;
                let mut p = Parser { chars: rest.chars().collect(), pos: 0, line: line_no, col0: body_col, names };
                let w = p.expr()?;
                p.skip_ws();
                if p.pos < p.chars.len() {
                    return Err(p.error("unexpected input"));
                }
                let w = w.free_reduce();
                if k == "rel" {
                    if w.is_empty() {
                        return Err(err(body_col, "empty relator"));
                    }
                    relators.push(w);
                } else {
                    subgroup.push(w);
                }
            }
            _ => return Err(err(offset + 1, "expected `gens:`, `rel:` or `sub:`")),
        }
    }
    let names = names.ok_or(Error::Parse { line: 1, column: 1, message: "missing `gens:` line".into() })?;
    Ok(PresentationFile { presentation: Presentation::new(names, relators)?, subgroup })
}

fn is_name(s: &str) -> bool {
    let mut c = s.chars();
    c.next().is_some_and(|f| f.is_ascii_alphabetic() || f == '_') && c.all(|x| x.is_ascii_alphanumeric() || x == '_')
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col0: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { line: self.line, column: self.col0 + self.pos, message: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<Word> {
        let mut w = self.term()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            w = w.concat(&self.term()?);
        }
        Ok(w)
    }

    fn term(&mut self) -> Result<Word> {
        let a = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let k = self.int()?;
            return Ok(a.pow(k));
        }
        Ok(a)
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.chars.get(self.pos) == Some(&'-') {
            self.pos += 1;
        }
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer exponent")
        })
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.expr()?;
                self.expect(')')?;
                Ok(w)
            }
            Some('[') => {
                self.pos += 1;
                let x = self.expr()?;
                self.expect(',')?;
                let y = self.expr()?;
                self.expect(']')?;
                Ok(Word::commutator(&x, &y))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.names.iter().position(|n| *n == name) {
                    Some(i) => Ok(Word::gen(i)),
                    None => Err(Error::UnknownGenerator(name)),
                }
            }
            Some(_) => Err(self.error("expected a generator, `(` or `[`")),
            None => Err(self.error("unexpected end of expression")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::presentation::format_word;

    const L32: &str = "gens: x y\nrel: x^2\nrel: y^3\nrel: (x*y)^7\nrel: [x,y]^4\n";

    #[test]
    fn l32_presentation() {
        let p = parse_presentation(L32).unwrap();
        assert_eq!(p.relators().len(), 4);
        assert_eq!(p.relators()[2].len(), 14);
        assert_eq!(p.relators()[3].len(), 16);
    }

    #[test]
    fn round_trip_through_printer() {
        let p = parse_presentation(L32).unwrap();
        assert_eq!(parse_presentation(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn unclosed_parenthesis() {
        let e = parse_presentation("gens: x\nrel: (x*").unwrap_err();
        match e {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_generator_and_empty_relator() {
        assert!(matches!(parse_presentation("gens: x\nrel: z"), Err(Error::UnknownGenerator(_))));
        assert!(parse_presentation("gens: x\nrel: x*x^-1").is_err());
    }

    #[test]
    fn comments_negative_powers_and_sub_lines() {
        let f = parse_presentation_file("# header\ngens: a3 a11 # two\nrel: (a3*a11)^3\nrel: a3^-2\nsub: a3").unwrap();
        let names = f.presentation.names().to_vec();
        assert_eq!(format_word(&f.presentation.relators()[0], &names), "(a3*a11)^3");
        assert_eq!(f.presentation.relators()[1].letters(), &[-1, -1]);
        assert_eq!(f.subgroup, vec![Word::gen(0)]);
    }

    #[test]
    fn commutator_printing() {
        let names = vec!["a1".to_string(), "a4".to_string(), "a6".to_string(), "a13".to_string()];
        let w = Word::commutator(&Word::gen(0), &Word::gen(3)).concat(&Word::from_gens(&[1, 2]));
        let s = format_word(&w, &names);
        assert_eq!(s, "[a1,a13]*a4*a6");
        let p = parse_presentation(&format!("gens: a1 a4 a6 a13\nrel: {s}")).unwrap();
        assert_eq!(p.relators()[0], w);
    }
}
