use std::fmt;

/// Sign label for the paired coordinates `w_{i,+}`, `w_{i,-}` and the boundary `z`s.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pm {
    Plus,
    Minus,
}

impl Pm {
    pub fn flip(self) -> Pm {
        match self {
            Pm::Plus => Pm::Minus,
            Pm::Minus => Pm::Plus,
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Pm::Plus => 1,
            Pm::Minus => -1,
        }
    }

    fn tag(self) -> char {
        match self {
            Pm::Plus => 'p',
            Pm::Minus => 'm',
        }
    }

    pub fn both() -> [Pm; 2] {
        [Pm::Plus, Pm::Minus]
    }
}

/// The named atoms a polynomial can mention.
///
/// `Q`, `T` and `X` are square-root atoms: an exponent `e` on them means the
/// named quantity to the power `e/2` (so `Q` with exponent 1 is `q^1/2`).
/// Every other atom carries whole exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Q,
    T(u8),
    B,
    X(u8),
    Qc(u8),
    C(u8),
    W(u8, Pm),
    Z(u8),
    Zb(u8, Pm),
    /// Free symbol standing for a boundary loop value.
    DeltaK,
}

/// Compact handle for an [`Atom`]; the ordering of handles is the monomial order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u16);

const CAT_SHIFT: u16 = 9;

fn pm_bit(pm: Pm) -> u16 {
    match pm {
        Pm::Plus => 0,
        Pm::Minus => 1,
    }
}

impl Var {
    pub const Q: Var = Var(0);
    pub const B: Var = Var(2 << CAT_SHIFT);

    pub fn new(atom: Atom) -> Var {
        let (cat, idx): (u16, u16) = match atom {
            Atom::Q => (0, 0),
            Atom::T(j) => (1, j as u16),
            Atom::B => (2, 0),
            Atom::X(i) => (3, i as u16),
            Atom::Qc(i) => (4, i as u16),
            Atom::C(l) => (5, l as u16),
            Atom::W(i, pm) => (6, 2 * i as u16 + pm_bit(pm)),
            Atom::Z(j) => (7, j as u16),
            Atom::Zb(k, pm) => (8, 2 * k as u16 + pm_bit(pm)),
            Atom::DeltaK => (9, 0),
        };
        Var((cat << CAT_SHIFT) | idx)
    }

    pub fn atom(self) -> Atom {
        let cat = self.0 >> CAT_SHIFT;
        let idx = self.0 & ((1 << CAT_SHIFT) - 1);
        let pm = if idx & 1 == 0 { Pm::Plus } else { Pm::Minus };
        match cat {
            0 => Atom::Q,
            1 => Atom::T(idx as u8),
            2 => Atom::B,
            3 => Atom::X(idx as u8),
            4 => Atom::Qc(idx as u8),
            5 => Atom::C(idx as u8),
            6 => Atom::W((idx / 2) as u8, pm),
            7 => Atom::Z(idx as u8),
            8 => Atom::Zb((idx / 2) as u8, pm),
            _ => Atom::DeltaK,
        }
    }

    pub fn t(j: usize) -> Var {
        Var::new(Atom::T(j as u8))
    }

    pub fn x(i: usize) -> Var {
        Var::new(Atom::X(i as u8))
    }

    pub fn qc(i: usize) -> Var {
        Var::new(Atom::Qc(i as u8))
    }

    pub fn c(l: usize) -> Var {
        Var::new(Atom::C(l as u8))
    }

    pub fn w(i: usize, pm: Pm) -> Var {
        Var::new(Atom::W(i as u8, pm))
    }

    pub fn z(j: usize) -> Var {
        Var::new(Atom::Z(j as u8))
    }

    pub fn zb(k: usize, pm: Pm) -> Var {
        Var::new(Atom::Zb(k as u8, pm))
    }

    pub(crate) fn raw(self) -> u16 {
        self.0
    }

    /// True when exponents on this atom count half powers.
    pub fn is_half(self) -> bool {
        matches!(self.atom(), Atom::Q | Atom::T(_) | Atom::X(_))
    }

    /// Base name used by the text format, e.g. `q`, `t3`, `X1`, `w2p`.
    pub fn name(self) -> String {
        match self.atom() {
            Atom::Q => "q".into(),
            Atom::T(j) => format!("t{j}"),
            Atom::B => "B".into(),
            Atom::X(i) => format!("X{i}"),
            Atom::Qc(i) => format!("Q{i}"),
            Atom::C(l) => format!("C{l}"),
            Atom::W(i, pm) => format!("w{i}{}", pm.tag()),
            Atom::Z(j) => format!("z{j}"),
            Atom::Zb(k, pm) => format!("z{k}{}", pm.tag()),
            Atom::DeltaK => "dK".into(),
        }
    }

    /// Inverse of [`Var::name`].
    pub fn parse(name: &str) -> Option<Var> {
        if name == "q" {
            return Some(Var::Q);
        }
        if name == "B" {
            return Some(Var::B);
        }
        if name == "dK" {
            return Some(Var::new(Atom::DeltaK));
        }
        let mut chars = name.chars();
        let head = chars.next()?;
        let rest = chars.as_str();
        let (digits, tail) = match rest.find(|c: char| !c.is_ascii_digit()) {
            Some(p) => (&rest[..p], &rest[p..]),
            None => (rest, ""),
        };
        if digits.is_empty() || (digits.len() > 1 && digits.starts_with('0')) {
            return None;
        }
        let idx: u8 = digits.parse().ok()?;
        if idx > 200 {
            return None;
        }
        let pm = match tail {
            "" => None,
            "p" => Some(Pm::Plus),
            "m" => Some(Pm::Minus),
            _ => return None,
        };
        let atom = match (head, pm) {
            ('t', None) => Atom::T(idx),
            ('X', None) => Atom::X(idx),
            ('Q', None) => Atom::Qc(idx),
            ('C', None) => Atom::C(idx),
            ('z', None) => Atom::Z(idx),
            ('w', Some(pm)) => Atom::W(idx, pm),
            ('z', Some(pm)) => Atom::Zb(idx, pm),
            _ => return None,
        };
        Some(Var::new(atom))
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        let atoms = [
            Atom::Q,
            Atom::T(0),
            Atom::T(5),
            Atom::B,
            Atom::X(3),
            Atom::Qc(1),
            Atom::C(7),
            Atom::W(2, Pm::Minus),
            Atom::Z(4),
            Atom::Zb(6, Pm::Plus),
            Atom::DeltaK,
        ];
        for a in atoms {
            let v = Var::new(a);
            assert_eq!(v.atom(), a);
            assert_eq!(Var::parse(&v.name()), Some(v));
        }
        assert_eq!(Var::parse("z01"), None);
        assert_eq!(Var::parse("w3"), None);
    }

    #[test]
    fn order_puts_parameters_first() {
        assert!(Var::Q < Var::t(9));
        assert!(Var::t(9) < Var::B);
        assert!(Var::B < Var::x(1));
    }
}
