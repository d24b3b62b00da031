//! Closed-form structure of `Aut(G)` for each catalog type, with orders.
//! Semidirect products carry no action, so only their order is meaningful.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::AutError;
use crate::catalog::GroupSpec;
use crate::numtheory::Modulus;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum StructureExpr {
    Cyclic(u64),
    GL2(u64),
    Sym(u64),
    /// Dihedral group of order `2n`.
    Dihedral(u64),
    Quaternion8,
    /// The unit group of `Z/n`.
    Units(u64),
    Direct(Vec<StructureExpr>),
    Semidirect(Box<StructureExpr>, Box<StructureExpr>),
}

use StructureExpr::*;

fn z(n: u64) -> StructureExpr {
    Cyclic(n)
}

fn dp(factors: Vec<StructureExpr>) -> StructureExpr {
    Direct(factors)
}

fn sd(normal: StructureExpr, acting: StructureExpr) -> StructureExpr {
    if acting == Cyclic(1) {
        return normal;
    }
    Semidirect(Box::new(normal), Box::new(acting))
}

impl StructureExpr {
    pub fn order(&self) -> u128 {
        match self {
            Cyclic(n) => *n as u128,
            GL2(m) => {
                let m = *m as u128;
                (m * m - 1) * (m * m - m)
            }
            Sym(n) => (1..=*n as u128).product(),
            Dihedral(n) => 2 * *n as u128,
            Quaternion8 => 8,
            Units(n) => Modulus::new(*n).map(|m| m.phi() as u128).unwrap_or(1),
            Direct(fs) => fs.iter().map(StructureExpr::order).product(),
            Semidirect(a, b) => a.order() * b.order(),
        }
    }

    fn is_atom(&self) -> bool {
        !matches!(self, Direct(_) | Semidirect(..))
    }
}

impl fmt::Display for StructureExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |e: &StructureExpr| {
            if e.is_atom() {
                e.to_string()
            } else {
                format!("({e})")
            }
        };
        match self {
            Cyclic(n) => write!(f, "Z{n}"),
            GL2(m) => write!(f, "GL(2,{m})"),
            Sym(n) => write!(f, "S{n}"),
            Dihedral(n) => write!(f, "D{}", 2 * n),
            Quaternion8 => write!(f, "Q8"),
            Units(n) => write!(f, "U({n})"),
            Direct(fs) => {
                let parts: Vec<String> = fs.iter().map(wrap).collect();
                write!(f, "{}", parts.join(" × "))
            }
            Semidirect(a, b) => write!(f, "{} ⋊ {}", wrap(a), wrap(b)),
        }
    }
}

fn table1(t: u8) -> StructureExpr {
    match t {
        1 => dp(vec![z(6), z(2)]),
        2 => dp(vec![z(6), Sym(3)]),
        3 => dp(vec![Sym(3), GL2(3)]),
        4 => dp(vec![z(2), GL2(3)]),
        5 => dp(vec![z(2), z(2), Sym(3)]),
        6 => sd(dp(vec![Sym(3), Sym(3)]), z(2)),
        7 | 9 => dp(vec![z(2), sd(z(9), z(6))]),
        8 => dp(vec![Sym(4), Sym(3)]),
        10 => dp(vec![z(2), z(3), Sym(3)]),
        11 => dp(vec![z(2), sd(sd(sd(dp(vec![z(3), z(3)]), Quaternion8), z(3)), z(2))]),
        12 => sd(dp(vec![z(3), z(3)]), sd(z(8), z(2))),
        13 => dp(vec![z(3), Sym(4)]),
        14 => sd(dp(vec![z(3), z(3)]), dp(vec![GL2(3), z(2)])),
        _ => unreachable!(),
    }
}

fn table2(t: u8, p: u64, q: u64) -> StructureExpr {
    let zp2 = || z(p * p);
    let zpzp = || dp(vec![z(p), z(p)]);
    let zpm1sq = || dp(vec![z(p - 1), z(p - 1)]);
    match t {
        15 => dp(vec![z(p * (p - 1)), z(q * (q - 1))]),
        16 => dp(vec![GL2(q), z(p * (p - 1))]),
        17 => dp(vec![z(q * (q - 1)), GL2(p)]),
        18 => dp(vec![GL2(q), GL2(p)]),
        19 => sd(zp2(), dp(vec![z(p * (p - 1)), z(q)])),
        20 => sd(zp2(), z(p * (p - 1))),
        21 => sd(zp2(), dp(vec![z(p * (p - 1)), sd(z(q), z(q - 1))])),
        22 => sd(zpzp(), dp(vec![GL2(p), z(q)])),
        23 => sd(z(p), dp(vec![zpm1sq(), z(2)])),
        24 => sd(z(p), dp(vec![zpm1sq(), z(q)])),
        25 => sd(zpzp(), sd(dp(vec![zpm1sq(), z(q)]), z(2))),
        26 => sd(zpzp(), sd(zpm1sq(), z(2))),
        27 => sd(zpzp(), sd(zpm1sq(), z(q))),
        28 => sd(zpzp(), zpm1sq()),
        29 => sd(zpzp(), GL2(p)),
        30 => sd(zpzp(), sd(dp(vec![z(p * p - 1), z(q)]), z(2))),
        31 | 32 => sd(zpzp(), sd(z(p * p - 1), z(2))),
        33 => sd(zpzp(), dp(vec![GL2(p), sd(z(q), z(q - 1))])),
        34 => sd(z(p), dp(vec![zpm1sq(), z(2)])),
        35 => sd(zpzp(), dp(vec![zpm1sq(), z(2)])),
        36 => sd(zpzp(), dp(vec![dp(vec![z(2), z(p * p - 1)]), sd(z(q - 1), z(q))])),
        _ => unreachable!(),
    }
}

/// Tabulated structure of `Aut(G)` and its order.
pub fn predicted(spec: &GroupSpec) -> Result<(StructureExpr, u128), AutError> {
    let t = spec.type_id;
    let expr = match t {
        1..=14 => table1(t),
        15..=36 => table2(t, spec.p, spec.q),
        _ => return Err(crate::catalog::CatalogError::UnknownType(t as u32).into()),
    };
    let order = expr.order();
    Ok((expr, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_of(s: &str) -> u128 {
        predicted(&GroupSpec::parse(s).unwrap()).unwrap().1
    }

    #[test]
    fn table1_orders() {
        let expected = [12, 36, 288, 96, 24, 72, 108, 144, 108, 36, 864, 144, 72, 864];
        for (t, &o) in (1..=14).zip(expected.iter()) {
            assert_eq!(order_of(&format!("t{t}:p=3,q=2")), o, "type {t}");
        }
    }

    #[test]
    fn table2_examples() {
        assert_eq!(order_of("t18:p=5,q=3"), 23040);
        assert_eq!(order_of("t36:p=5,q=3"), 7200);
        assert_eq!(order_of("t30:p=5,q=3"), 3600);
        assert_eq!(order_of("t19:p=5,q=2"), 1000);
        assert_eq!(order_of("t15:p=5,q=3"), 120);
        assert_eq!(order_of("t34:p=3,q=2"), 24);
    }

    #[test]
    fn display_and_atoms() {
        let (e, _) = predicted(&GroupSpec::parse("t1:p=3,q=2").unwrap()).unwrap();
        assert_eq!(e.to_string(), "Z6 × Z2");
        assert_eq!(Units(36).order(), 12);
        assert_eq!(Dihedral(9).order(), 18);
        assert_eq!(Dihedral(9).to_string(), "D18");
        assert_eq!(Sym(4).order(), 24);
        let (e, _) = predicted(&GroupSpec::parse("t22:p=7,q=3").unwrap()).unwrap();
        assert_eq!(e.to_string(), "(Z7 × Z7) ⋊ (GL(2,7) × Z3)");
    }
}
