use std::fmt;
use std::str::FromStr;

use anthyph_core::{Int, QuadSurd, Rational};

pub fn parse_int(s: &str) -> Result<Int, String> {
    Int::from_str(s.trim()).map_err(|_| format!("malformed integer `{s}`"))
}

/// A magnitude given on the command line, kept verbatim for echoing.
#[derive(Clone, Debug)]
pub struct Literal {
    pub text: String,
    pub value: QuadSurd,
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// `u,v,w,D` for `(u + v·√D)/w`, `p/q`, or a bare integer.
pub fn parse_literal(s: &str) -> Result<Literal, String> {
    let value = if s.contains(',') {
        let parts: Vec<Int> = s.split(',').map(parse_int).collect::<Result<_, _>>()?;
        let [u, v, w, d] = <[Int; 4]>::try_from(parts)
            .map_err(|_| format!("literal `{s}` needs four fields u,v,w,D"))?;
        QuadSurd::new(u, v, w, d).map_err(|e| e.to_string())?
    } else if let Some((p, q)) = s.split_once('/') {
        let (p, q) = (parse_int(p)?, parse_int(q)?);
        if q == Int::from(0) {
            return Err(format!(
                "literal `{s}`: precondition `divisor != 0` violated"
            ));
        }
        QuadSurd::from_rational(&Rational::new(p, q))
    } else {
        QuadSurd::from_int(parse_int(s)?)
    };
    Ok(Literal {
        text: s.to_string(),
        value,
    })
}
