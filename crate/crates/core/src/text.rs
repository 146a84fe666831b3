//! Text syntax for monomials and binomials: `x^2*z`, `1`, `x^4*w - y^3`.

use std::collections::HashMap;
use std::fmt::Write;

use thiserror::Error;

use crate::binomial::Binomial;
use crate::monomial::{Monomial, Var};
use crate::order::MonomialOrder;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("malformed monomial `{0}`")]
    MalformedMonomial(String),
    #[error("expected `<monomial> - <monomial>`, found `{0}`")]
    NotBinomial(String),
    #[error("zero binomial `{0}`")]
    ZeroBinomial(String),
    #[error("invalid variable name `{0}`")]
    InvalidName(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),
    #[error("exponent overflow in `{0}`")]
    Overflow(String),
}

/// Variable names in order of precedence; the first name is the highest variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarNames {
    names: Vec<String>,
    index: HashMap<String, u32>,
}

impl VarNames {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, TextError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(TextError::InvalidName(name.clone()));
            }
            if index.insert(name.clone(), i as u32).is_some() {
                return Err(TextError::DuplicateName(name.clone()));
            }
        }
        Ok(VarNames { names, index })
    }

    /// `x1, ..., xn`.
    pub fn indexed(n: u32) -> Self {
        Self::new((1..=n).map(|i| format!("x{i}"))).expect("generated names are valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn nvars(&self) -> u32 {
        self.names.len() as u32
    }

    pub fn get(&self, name: &str) -> Option<Var> {
        self.index.get(name).map(|&i| Var(i))
    }

    pub fn name(&self, v: Var) -> &str {
        &self.names[v.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_monomial(text: &str, names: &VarNames) -> Result<Monomial, TextError> {
    let text = text.trim();
    let malformed = || TextError::MalformedMonomial(text.to_string());
    if text.is_empty() {
        return Err(malformed());
    }
    if text == "1" {
        return Ok(Monomial::one(names.nvars()));
    }
    let mut pairs = Vec::new();
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, exp) = match factor.split_once('^') {
            Some((name, exp)) => {
                let exp = exp.trim();
                if exp.is_empty() || !exp.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(malformed());
                }
                let k: u64 = exp.parse().map_err(|_| TextError::Overflow(text.to_string()))?;
                (name.trim(), k)
            }
            None => (factor, 1),
        };
        if name == "1" && exp == 1 {
            continue;
        }
        if !is_identifier(name) {
            return Err(malformed());
        }
        let v = names.get(name).ok_or_else(|| TextError::UnknownVariable(name.to_string()))?;
        pairs.push((v, exp));
    }
    Monomial::from_pairs(names.nvars(), pairs).map_err(|_| TextError::Overflow(text.to_string()))
}

/// Parses `<monomial> - <monomial>` and orients it under `ord`.
pub fn parse_binomial(text: &str, names: &VarNames, ord: &MonomialOrder) -> Result<Binomial, TextError> {
    let text = text.trim();
    let (a, b) = text.split_once('-').ok_or_else(|| TextError::NotBinomial(text.to_string()))?;
    if b.contains('-') || b.contains('+') || a.contains('+') {
        return Err(TextError::NotBinomial(text.to_string()));
    }
    let a = parse_monomial(a, names)?;
    let b = parse_monomial(b, names)?;
    Binomial::orient(a, b, ord).ok_or_else(|| TextError::ZeroBinomial(text.to_string()))
}

pub fn format_monomial(m: &Monomial, names: &VarNames) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut out = String::new();
    for (i, (v, k)) in m.support().enumerate() {
        if i > 0 {
            out.push('*');
        }
        out.push_str(names.name(v));
        if k > 1 {
            write!(out, "^{k}").unwrap();
        }
    }
    out
}

pub fn format_binomial(b: &Binomial, names: &VarNames) -> String {
    format!("{} - {}", format_monomial(b.lead(), names), format_monomial(b.tail(), names))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xyzw() -> VarNames {
        VarNames::new(["x", "y", "z", "w"]).unwrap()
    }

    #[test]
    fn parses_named_and_indexed() {
        let names = xyzw();
        let m = parse_monomial("x^2*z", &names).unwrap();
        assert_eq!(m.to_exponents(), vec![2, 0, 1, 0]);
        assert!(parse_monomial("1", &names).unwrap().is_one());
        let idx = VarNames::indexed(3);
        assert_eq!(parse_monomial("x1^2*x3", &idx).unwrap().to_exponents(), vec![2, 0, 1]);
        assert_eq!(parse_monomial("y * y^2", &names).unwrap().to_exponents(), vec![0, 3, 0, 0]);
    }

    #[test]
    fn rejects_bad_input() {
        let names = xyzw();
        assert_eq!(parse_monomial("q", &names), Err(TextError::UnknownVariable("q".into())));
        assert!(matches!(parse_monomial("x^", &names), Err(TextError::MalformedMonomial(_))));
        assert!(matches!(parse_monomial("x**y", &names), Err(TextError::MalformedMonomial(_))));
        assert!(matches!(parse_monomial("", &names), Err(TextError::MalformedMonomial(_))));
        let drl = MonomialOrder::DegRevLex;
        assert!(matches!(parse_binomial("x^2 - x^2", &names, &drl), Err(TextError::ZeroBinomial(_))));
        assert!(matches!(parse_binomial("x + y", &names, &drl), Err(TextError::NotBinomial(_))));
        assert!(matches!(parse_binomial("x - y - z", &names, &drl), Err(TextError::NotBinomial(_))));
        assert!(VarNames::new(["x", "x"]).is_err());
        assert!(VarNames::new(["2x"]).is_err());
    }

    #[test]
    fn binomial_is_oriented() {
        let names = xyzw();
        let b = parse_binomial("y^3 - x^4*w", &names, &MonomialOrder::DegRevLex).unwrap();
        assert_eq!(format_binomial(&b, &names), "x^4*w - y^3");
        let b = parse_binomial("x*y*z*w - 1", &names, &MonomialOrder::DegRevLex).unwrap();
        assert_eq!(format_binomial(&b, &names), "x*y*z*w - 1");
    }

    proptest! {
        #[test]
        fn format_then_parse(e in proptest::collection::vec(0u64..5, 4), f in proptest::collection::vec(0u64..5, 4)) {
            let names = xyzw();
            let ord = MonomialOrder::DegRevLex;
            if let Some(b) = Binomial::orient(Monomial::from_exponents(&e).unwrap(), Monomial::from_exponents(&f).unwrap(), &ord) {
                let text = format_binomial(&b, &names);
                prop_assert_eq!(parse_binomial(&text, &names, &ord).unwrap(), b);
            }
        }
    }
}
