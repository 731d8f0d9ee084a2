use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Interned color name. Equality and hashing are by identity of the interned
/// string; `Ord` follows interning order and must not drive output order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color(u32);

#[derive(Default)]
struct Interner {
    ids: HashMap<&'static str, u32>,
    names: Vec<&'static str>,
}

fn interner() -> &'static RwLock<Interner> {
    static TABLE: OnceLock<RwLock<Interner>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(Interner::default()))
}

impl Color {
    pub fn new(name: &str) -> Color {
        if let Some(&id) = interner().read().unwrap().ids.get(name) {
            return Color(id);
        }
        let mut table = interner().write().unwrap();
        if let Some(&id) = table.ids.get(name) {
            return Color(id);
        }
        let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
        let id = table.names.len() as u32;
        table.names.push(leaked);
        table.ids.insert(leaked, id);
        Color(id)
    }

    pub fn name(self) -> &'static str {
        interner().read().unwrap().names[self.0 as usize]
    }
}

impl fmt::Debug for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LabelFamily {
    Unsigned,
    Signed,
    Num,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "LabelRepr", try_from = "LabelRepr")]
pub enum Label {
    Unsigned(Color),
    Signed(Color, Sign),
    Num(i64),
}

impl Label {
    pub fn color(name: &str) -> Label {
        Label::Unsigned(Color::new(name))
    }

    pub fn plus(name: &str) -> Label {
        Label::Signed(Color::new(name), Sign::Plus)
    }

    pub fn minus(name: &str) -> Label {
        Label::Signed(Color::new(name), Sign::Minus)
    }

    pub fn family(self) -> LabelFamily {
        match self {
            Label::Unsigned(_) => LabelFamily::Unsigned,
            Label::Signed(..) => LabelFamily::Signed,
            Label::Num(_) => LabelFamily::Num,
        }
    }

    /// The color with any sign dropped; `None` for numbers.
    pub fn base(self) -> Option<Color> {
        match self {
            Label::Unsigned(c) | Label::Signed(c, _) => Some(c),
            Label::Num(_) => None,
        }
    }

    /// The signed partner of this label (`+a` for `-a`); unsigned and numeric
    /// labels are their own partner.
    pub fn partner(self) -> Label {
        match self {
            Label::Signed(c, s) => Label::Signed(c, s.flip()),
            other => other,
        }
    }

    /// Drops the sign of a signed label.
    pub fn unsigned(self) -> Label {
        match self {
            Label::Signed(c, _) => Label::Unsigned(c),
            other => other,
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Unsigned(c) => write!(f, "{c}"),
            Label::Signed(c, Sign::Plus) => write!(f, "+{c}"),
            Label::Signed(c, Sign::Minus) => write!(f, "-{c}"),
            Label::Num(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LabelRepr {
    Num {
        num: i64,
    },
    Color {
        color: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        sign: Option<Sign>,
    },
}

impl From<Label> for LabelRepr {
    fn from(l: Label) -> LabelRepr {
        match l {
            Label::Unsigned(c) => LabelRepr::Color { color: c.name().to_owned(), sign: None },
            Label::Signed(c, s) => LabelRepr::Color { color: c.name().to_owned(), sign: Some(s) },
            Label::Num(num) => LabelRepr::Num { num },
        }
    }
}

impl TryFrom<LabelRepr> for Label {
    type Error = String;

    fn try_from(r: LabelRepr) -> std::result::Result<Label, String> {
        Ok(match r {
            LabelRepr::Num { num } => Label::Num(num),
            LabelRepr::Color { color, sign: None } => Label::Unsigned(Color::new(&color)),
            LabelRepr::Color { color, sign: Some(s) } => Label::Signed(Color::new(&color), s),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompatRule {
    UnsignedEq,
    SignedOpp,
    StrictLess,
    LessOrEq,
}

impl CompatRule {
    pub fn family(self) -> LabelFamily {
        match self {
            CompatRule::UnsignedEq => LabelFamily::Unsigned,
            CompatRule::SignedOpp => LabelFamily::Signed,
            CompatRule::StrictLess | CompatRule::LessOrEq => LabelFamily::Num,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Horizontal,
    Vertical,
}

/// Whether `a` (left or top side of the contact) and `b` (right or bottom)
/// may touch. The axis is accepted for symmetry with the board geometry; every
/// rule reads the same along both axes.
pub fn compatible(a: Label, b: Label, rule: CompatRule, _axis: Axis) -> Result<bool> {
    let fam = rule.family();
    if a.family() != fam || b.family() != fam {
        return Err(Error::FamilyMismatch(format!(
            "{a} and {b} under {rule:?}"
        )));
    }
    Ok(match (a, b) {
        (Label::Unsigned(x), Label::Unsigned(y)) => x == y,
        (Label::Signed(x, s), Label::Signed(y, t)) => x == y && s != t,
        (Label::Num(x), Label::Num(y)) => match rule {
            CompatRule::StrictLess => x < y,
            _ => x <= y,
        },
        _ => unreachable!(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1_caption_contacts() {
        let h = Axis::Horizontal;
        assert!(compatible(Label::Num(1), Label::Num(52), CompatRule::StrictLess, h).unwrap());
        assert!(compatible(Label::Num(22), Label::Num(78), CompatRule::StrictLess, h).unwrap());
    }

    #[test]
    fn signed_and_equality_boundaries() {
        let v = Axis::Vertical;
        assert!(compatible(Label::plus("a"), Label::minus("a"), CompatRule::SignedOpp, v).unwrap());
        assert!(!compatible(Label::plus("a"), Label::plus("a"), CompatRule::SignedOpp, v).unwrap());
        assert!(!compatible(Label::plus("a"), Label::minus("b"), CompatRule::SignedOpp, v).unwrap());
        assert!(!compatible(Label::Num(5), Label::Num(5), CompatRule::StrictLess, v).unwrap());
        assert!(compatible(Label::Num(5), Label::Num(5), CompatRule::LessOrEq, v).unwrap());
    }

    #[test]
    fn family_mismatch_is_rejected() {
        let r = compatible(Label::color("a"), Label::Num(3), CompatRule::UnsignedEq, Axis::Horizontal);
        assert!(matches!(r, Err(Error::FamilyMismatch(_))));
        let r = compatible(Label::color("a"), Label::color("a"), CompatRule::SignedOpp, Axis::Horizontal);
        assert!(r.is_err());
    }

    #[test]
    fn interning_is_stable() {
        assert_eq!(Color::new("vI(3)"), Color::new("vI(3)"));
        assert_ne!(Color::new("vI(3)"), Color::new("vO(3)"));
        assert_eq!(Color::new("edge(7)").name(), "edge(7)");
    }
}
