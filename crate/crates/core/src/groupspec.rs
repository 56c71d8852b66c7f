//! The group descriptor mini-language:
//!
//! ```text
//! spec    := "cyclic:" N | "abelian:" N ("," N)* | "ut:" N "," N
//!          | "sym:" N | "product:" spec "|" spec
//! ```
//!
//! No whitespace is allowed. Parse errors carry the byte offset.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::linalg::is_prime;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Abelian(Vec<usize>),
    Unitriangular { m: usize, p: u64 },
    Symmetric(usize),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn parse(s: &str) -> Result<GroupSpec> {
        let mut parser = Parser { src: s.as_bytes(), pos: 0 };
        let spec = parser.spec()?;
        if parser.pos != s.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<Group> {
        match self {
            GroupSpec::Cyclic(m) => Group::cyclic(*m),
            GroupSpec::Abelian(inv) => Group::abelian(inv),
            GroupSpec::Unitriangular { m, p } => Group::unitriangular(*m, *p),
            GroupSpec::Symmetric(n) => Group::symmetric(*n),
            GroupSpec::Product(a, b) => Group::direct_product(&a.build()?, &b.build()?),
        }
    }

    /// Group order, computed without building the group.
    pub fn order(&self) -> u128 {
        match self {
            GroupSpec::Cyclic(m) => *m as u128,
            GroupSpec::Abelian(inv) => inv.iter().map(|&a| a as u128).product(),
            GroupSpec::Unitriangular { m, p } => {
                (*p as u128).saturating_pow((m * m.saturating_sub(1) / 2) as u32)
            }
            GroupSpec::Symmetric(n) => (1..=*n as u128).product(),
            GroupSpec::Product(a, b) => a.order() * b.order(),
        }
    }

    /// True for descriptors whose group is abelian by construction.
    pub fn is_abelian(&self) -> bool {
        match self {
            GroupSpec::Cyclic(_) | GroupSpec::Abelian(_) => true,
            GroupSpec::Unitriangular { m, .. } => *m == 2,
            GroupSpec::Symmetric(n) => *n <= 2,
            GroupSpec::Product(a, b) => a.is_abelian() && b.is_abelian(),
        }
    }

    /// Splits a nilpotent descriptor into prime-power factors `(p, factor)`.
    /// Cyclic factors are split by the Chinese remainder theorem. Fails on
    /// descriptors that are not nilpotent (`sym:n` with `n >= 3`).
    pub fn sylow_factors(&self) -> Result<Vec<(u64, GroupSpec)>> {
        let mut out = Vec::new();
        self.collect_sylow(&mut out)?;
        Ok(out)
    }

    fn collect_sylow(&self, out: &mut Vec<(u64, GroupSpec)>) -> Result<()> {
        match self {
            GroupSpec::Cyclic(m) => {
                for (p, q) in prime_power_parts(*m as u64) {
                    out.push((p, GroupSpec::Cyclic(q as usize)));
                }
            }
            GroupSpec::Abelian(inv) => {
                for &a in inv {
                    GroupSpec::Cyclic(a).collect_sylow(out)?;
                }
            }
            GroupSpec::Unitriangular { p, .. } => out.push((*p, self.clone())),
            GroupSpec::Symmetric(1) => {}
            GroupSpec::Symmetric(2) => out.push((2, GroupSpec::Cyclic(2))),
            GroupSpec::Symmetric(_) => {
                return Err(Error::Unsupported(format!(
                    "{self} is not nilpotent"
                )))
            }
            GroupSpec::Product(a, b) => {
                a.collect_sylow(out)?;
                b.collect_sylow(out)?;
            }
        }
        Ok(())
    }
}

/// `(p, p^k)` for each prime power exactly dividing `m`, in increasing `p`.
pub fn prime_power_parts(mut m: u64) -> Vec<(u64, u64)> {
    let mut parts = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            let mut q = 1;
            while m.is_multiple_of(d) {
                m /= d;
                q *= d;
            }
            parts.push((d, q));
        }
        d += 1;
    }
    if m > 1 {
        parts.push((m, m));
    }
    parts
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(m) => write!(f, "cyclic:{m}"),
            GroupSpec::Abelian(inv) => {
                let parts: Vec<String> = inv.iter().map(|a| a.to_string()).collect();
                write!(f, "abelian:{}", parts.join(","))
            }
            GroupSpec::Unitriangular { m, p } => write!(f, "ut:{m},{p}"),
            GroupSpec::Symmetric(n) => write!(f, "sym:{n}"),
            GroupSpec::Product(a, b) => write!(f, "product:{a}|{b}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let start = self.pos;
        let name_end = self.src[self.pos..]
            .iter()
            .position(|&c| c == b':')
            .map(|i| self.pos + i)
            .ok_or_else(|| self.error("expected `<kind>:`"))?;
        let name = std::str::from_utf8(&self.src[start..name_end]).unwrap_or("");
        self.pos = name_end + 1;
        match name {
            "cyclic" => Ok(GroupSpec::Cyclic(self.positive()?)),
            "abelian" => {
                let mut inv = vec![self.positive()?];
                while self.eat(b',') {
                    inv.push(self.positive()?);
                }
                Ok(GroupSpec::Abelian(inv))
            }
            "ut" => {
                let m = self.positive()?;
                self.expect(b',')?;
                let at = self.pos;
                let p = self.positive()? as u64;
                if m < 2 {
                    return Err(Error::Parse { pos: start, msg: "ut needs m >= 2".into() });
                }
                if !is_prime(p) {
                    return Err(Error::Parse { pos: at, msg: format!("{p} is not prime") });
                }
                Ok(GroupSpec::Unitriangular { m, p })
            }
            "sym" => Ok(GroupSpec::Symmetric(self.positive()?)),
            "product" => {
                let a = self.spec()?;
                self.expect(b'|')?;
                let b = self.spec()?;
                Ok(GroupSpec::Product(Box::new(a), Box::new(b)))
            }
            _ => Err(Error::Parse {
                pos: start,
                msg: format!("unknown group kind `{name}`"),
            }),
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn positive(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match text.parse::<usize>() {
            Ok(0) | Err(_) => Err(Error::Parse {
                pos: start,
                msg: format!("`{text}` is not a positive integer"),
            }),
            Ok(v) => Ok(v),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_kind() {
        assert_eq!(GroupSpec::parse("cyclic:4").unwrap(), GroupSpec::Cyclic(4));
        assert_eq!(
            GroupSpec::parse("abelian:2,2,3").unwrap(),
            GroupSpec::Abelian(vec![2, 2, 3])
        );
        assert_eq!(
            GroupSpec::parse("ut:3,2").unwrap(),
            GroupSpec::Unitriangular { m: 3, p: 2 }
        );
        assert_eq!(GroupSpec::parse("sym:4").unwrap(), GroupSpec::Symmetric(4));
        let nested = GroupSpec::parse("product:product:cyclic:2|cyclic:3|abelian:5,5").unwrap();
        assert_eq!(nested.order(), 150);
        assert_eq!(nested.to_string(), "product:product:cyclic:2|cyclic:3|abelian:5,5");
    }

    #[test]
    fn reports_positions() {
        let err = |s: &str| match GroupSpec::parse(s) {
            Err(Error::Parse { pos, .. }) => pos,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(err("cyclic:"), 7);
        assert_eq!(err("cyclic:0"), 7);
        assert_eq!(err("ring:3"), 0);
        assert_eq!(err("ut:3,4"), 5);
        assert_eq!(err("product:cyclic:2"), 16);
        assert_eq!(err("cyclic:2 "), 8);
        assert_eq!(err("abelian:2,,3"), 10);
    }

    #[test]
    fn sylow_split() {
        let spec = GroupSpec::parse("product:abelian:2,2,2,2|cyclic:3").unwrap();
        let f = spec.sylow_factors().unwrap();
        assert_eq!(f.iter().filter(|(p, _)| *p == 2).count(), 4);
        assert_eq!(f.iter().filter(|(p, _)| *p == 3).count(), 1);
        let f = GroupSpec::Cyclic(12).sylow_factors().unwrap();
        assert_eq!(f, vec![(2, GroupSpec::Cyclic(4)), (3, GroupSpec::Cyclic(3))]);
        assert!(GroupSpec::Symmetric(3).sylow_factors().is_err());
    }

    #[test]
    fn prime_parts() {
        assert_eq!(prime_power_parts(1), vec![]);
        assert_eq!(prime_power_parts(360), vec![(2, 8), (3, 9), (5, 5)]);
        assert_eq!(prime_power_parts(97), vec![(97, 97)]);
    }
}
