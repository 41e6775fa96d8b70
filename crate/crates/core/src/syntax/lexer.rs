use super::SyntaxError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(super) enum Tok {
    Ident(String),
    /// `D` immediately followed by `{`.
    KwD,
    /// `C` immediately followed by `{`.
    KwC,
    /// `K` immediately followed by `{`.
    KwK,
    /// `CD` immediately followed by `[`.
    KwCd,
    Tilde,
    Amp,
    Bar,
    Arrow,
    DoubleArrow,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Semi,
    Leq,
    Lt,
    EqEq,
    Hash,
    Eof,
}

impl Tok {
    pub(super) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier '{s}'"),
            Tok::KwD => "'D{'".into(),
            Tok::KwC => "'C{'".into(),
            Tok::KwK => "'K{'".into(),
            Tok::KwCd => "'CD['".into(),
            Tok::Tilde => "'~'".into(),
            Tok::Amp => "'&'".into(),
            Tok::Bar => "'|'".into(),
            Tok::Arrow => "'->'".into(),
            Tok::DoubleArrow => "'<->'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::LBrace => "'{'".into(),
            Tok::RBrace => "'}'".into(),
            Tok::Comma => "','".into(),
            Tok::Semi => "';'".into(),
            Tok::Leq => "'<='".into(),
            Tok::Lt => "'<'".into(),
            Tok::EqEq => "'=='".into(),
            Tok::Hash => "'#'".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

/// A token with its 1-based starting column.
#[derive(Debug, Clone)]
pub(super) struct Spanned {
    pub tok: Tok,
    pub col: usize,
}

pub(super) fn tokenize(text: &str) -> Result<Vec<Spanned>, SyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let next = chars.get(i).copied();
            let tok = match (word.as_str(), next) {
                ("D", Some('{')) => Tok::KwD,
                ("C", Some('{')) => Tok::KwC,
                ("K", Some('{')) => Tok::KwK,
                ("CD", Some('[')) => Tok::KwCd,
                _ => Tok::Ident(word),
            };
            out.push(Spanned { tok, col });
            continue;
        }
        let two = |a: char, b: char| c == a && chars.get(i + 1) == Some(&b);
        let (tok, width) =
            if c == '<' && chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') {
                (Tok::DoubleArrow, 3)
            } else if two('<', '=') {
                (Tok::Leq, 2)
            } else if two('-', '>') {
                (Tok::Arrow, 2)
            } else if two('=', '=') {
                (Tok::EqEq, 2)
            } else {
                let t = match c {
                    '~' => Tok::Tilde,
                    '&' => Tok::Amp,
                    '|' => Tok::Bar,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    ',' => Tok::Comma,
                    ';' => Tok::Semi,
                    '<' => Tok::Lt,
                    '#' => Tok::Hash,
                    _ => return Err(SyntaxError::Lex { col, ch: c }),
                };
                (t, 1)
            };
        out.push(Spanned { tok, col });
        i += width;
    }
    out.push(Spanned {
        tok: Tok::Eof,
        col: chars.len() + 1,
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(s: &str) -> Vec<Tok> {
        tokenize(s).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn keywords_need_adjacent_brace() {
        assert_eq!(kinds("D{a}")[0], Tok::KwD);
        assert_eq!(kinds("D {a}")[0], Tok::Ident("D".into()));
        assert_eq!(kinds("Kp")[0], Tok::Ident("Kp".into()));
        assert_eq!(kinds("CD[{a}]")[0], Tok::KwCd);
        assert_eq!(kinds("CD{a}")[0], Tok::Ident("CD".into()));
    }

    #[test]
    fn angle_operators() {
        assert_eq!(
            kinds("< <= <-> ->"),
            vec![Tok::Lt, Tok::Leq, Tok::DoubleArrow, Tok::Arrow, Tok::Eof]
        );
    }

    #[test]
    fn bad_character_reports_column() {
        assert_eq!(
            tokenize("p & $").unwrap_err(),
            SyntaxError::Lex { col: 5, ch: '$' }
        );
        assert!(matches!(
            tokenize("p - q"),
            Err(SyntaxError::Lex { col: 3, ch: '-' })
        ));
    }
}
