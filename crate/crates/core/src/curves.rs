//! Point counting on plane projective curves over small finite fields and
//! the zeta functions of genus 0 and 1 curves.

use num_bigint::BigInt;

use crate::algebra::{int, series_of_rational, UniPoly};
use crate::error::{Error, Result};
use crate::group::is_prime;
use crate::rrc::{rrc_check, PrrcVerdict};

/// Monic irreducible moduli for `F_{p^k}`, low-degree coefficient first.
fn irreducible(p: u32, k: u32) -> Option<&'static [u32]> {
    Some(match (p, k) {
        (_, 1) => &[0, 1],
        (2, 2) => &[1, 1, 1],
        (2, 3) => &[1, 1, 0, 1],
        (3, 2) => &[1, 0, 1],
        (3, 3) => &[1, 2, 0, 1],
        (5, 2) => &[2, 0, 1],
        (5, 3) => &[1, 1, 0, 1],
        (7, 2) => &[1, 0, 1],
        (7, 3) => &[1, 1, 0, 1],
        _ => return None,
    })
}

/// `F_{p^k}` as polynomials modulo a fixed irreducible, with full
/// addition and multiplication tables. Element `Σ c_i x^i` has index
/// `Σ c_i p^i`, so `F_p` sits inside as indices `0..p`.
#[derive(Debug, Clone)]
pub struct ExtensionField {
    p: u32,
    k: u32,
    size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
}

impl ExtensionField {
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let modulus = irreducible(p, k).ok_or(Error::UnsupportedExtension { p, k })?;
        let size = (p as usize).pow(k);
        let digits = |mut x: usize| -> Vec<u32> {
            (0..k)
                .map(|_| {
                    let d = (x % p as usize) as u32;
                    x /= p as usize;
                    d
                })
                .collect()
        };
        let pack = |v: &[u32]| -> u16 {
            v.iter().rev().fold(0usize, |acc, &d| acc * p as usize + d as usize) as u16
        };
        let mut add = vec![0u16; size * size];
        let mut mul = vec![0u16; size * size];
        for a in 0..size {
            let da = digits(a);
            for b in 0..size {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * size + b] = pack(&sum);
                let mut prod = vec![0u32; 2 * k as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // reduce by the monic modulus from the top down
                for top in (k as usize..prod.len()).rev() {
                    let c = prod[top];
                    if c == 0 {
                        continue;
                    }
                    for (j, m) in modulus.iter().enumerate() {
                        let idx = top - k as usize + j;
                        prod[idx] = (prod[idx] + p * p - c * m % p) % p;
                    }
                }
                mul[a * size + b] = pack(&prod[..k as usize]);
            }
        }
        Ok(ExtensionField {
            p,
            k,
            size,
            add,
            mul,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    pub fn pow(&self, a: usize, e: u32) -> usize {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }
}

/// A plane projective curve `F(X,Y,Z) = 0` over `F_p` with a user-asserted genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCurve {
    p: u32,
    monomials: Vec<(u32, u32, u32, u32)>,
    degree: u32,
    genus: u32,
}

impl PlaneCurve {
    /// `monomials` lists `(i, j, k, c)` for `c·X^i Y^j Z^k`; coefficients are
    /// reduced mod `p` and like terms merged.
    pub fn new(p: u32, monomials: &[(u32, u32, u32, i64)], genus: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut merged: std::collections::BTreeMap<(u32, u32, u32), i64> = Default::default();
        for &(i, j, k, c) in monomials {
            *merged.entry((i, j, k)).or_default() += c;
        }
        let terms: Vec<(u32, u32, u32, u32)> = merged
            .into_iter()
            .map(|((i, j, k), c)| (i, j, k, c.rem_euclid(p as i64) as u32))
            .filter(|t| t.3 != 0)
            .collect();
        if terms.is_empty() {
            return Err(Error::InvalidCurve("polynomial vanishes mod p".into()));
        }
        let degree = terms[0].0 + terms[0].1 + terms[0].2;
        if terms.iter().any(|t| t.0 + t.1 + t.2 != degree) {
            return Err(Error::InvalidCurve("polynomial is not homogeneous".into()));
        }
        match (degree, genus) {
            (1 | 2, 0) | (3, 1) => {}
            _ => {
                return Err(Error::InvalidCurve(format!(
                    "degree {degree} does not match genus {genus}"
                )))
            }
        }
        Ok(PlaneCurve {
            p,
            monomials: terms,
            degree,
            genus,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    fn eval(&self, field: &ExtensionField, x: usize, y: usize, z: usize) -> usize {
        self.monomials.iter().fold(0, |acc, &(i, j, k, c)| {
            let t = field.mul(
                c as usize,
                field.mul(field.pow(x, i), field.mul(field.pow(y, j), field.pow(z, k))),
            );
            field.add(acc, t)
        })
    }

    /// `|X(F_{p^k})|` by enumerating normalized projective points.
    pub fn count_points(&self, k: u32) -> Result<u64> {
        if !(1..=3).contains(&k) {
            return Err(Error::UnsupportedExtension { p: self.p, k });
        }
        let field = ExtensionField::new(self.p, k)?;
        let q = field.size();
        let mut count = 0u64;
        for y in 0..q {
            for z in 0..q {
                if self.eval(&field, 1, y, z) == 0 {
                    count += 1;
                }
            }
        }
        for z in 0..q {
            if self.eval(&field, 0, 1, z) == 0 {
                count += 1;
            }
        }
        if self.eval(&field, 0, 0, 1) == 0 {
            count += 1;
        }
        Ok(count)
    }
}

/// Free-standing [`PlaneCurve::count_points`].
pub fn count_points(curve: &PlaneCurve, k: u32) -> Result<u64> {
    curve.count_points(k)
}

/// `P_X(t)` of degree `2g` together with `q` and `h = P_X(1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveZeta {
    pub p_x: UniPoly,
    pub q: u64,
    pub genus: u32,
    pub class_number: BigInt,
    pub n1: u64,
}

/// Assembles `P_X` from `N_1`, rejecting counts that no smooth curve of the
/// asserted genus can have.
pub fn zeta_from_counts(curve: &PlaneCurve) -> Result<CurveZeta> {
    let q = curve.p as u64;
    let n1 = curve.count_points(1)?;
    let violation = Error::HasseBoundViolation {
        n1,
        q,
        genus: curve.genus,
    };
    let p_x = match curve.genus {
        0 => {
            if n1 != q + 1 {
                return Err(violation);
            }
            UniPoly::one()
        }
        _ => {
            let a = n1 as i64 - q as i64 - 1;
            if (a * a) as u64 > 4 * q {
                return Err(violation);
            }
            UniPoly::new(vec![int(1), int(a), int(q)])
        }
    };
    let class_number = p_x.eval(&int(1)).to_integer();
    Ok(CurveZeta {
        p_x,
        q,
        genus: curve.genus,
        class_number,
        n1,
    })
}

/// Riemann-Roch conditions on `ζ_X` up to order `N`, with `Res_1 = h/(q−1)`.
pub fn curve_rrc_check(zeta: &CurveZeta, order: usize) -> Result<PrrcVerdict> {
    let a = series_of_rational(&zeta.p_x, zeta.q, order);
    let res1 = int(zeta.class_number.clone()) / int(zeta.q - 1);
    rrc_check(&a, zeta.q, zeta.genus as usize, &res1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TruncatedSeries;

    fn f2_cubic() -> PlaneCurve {
        PlaneCurve::new(2, &[(0, 2, 1, 1), (0, 1, 2, 1), (3, 0, 0, -1)], 1).unwrap()
    }

    fn line(p: u32) -> PlaneCurve {
        PlaneCurve::new(p, &[(1, 0, 0, 1)], 0).unwrap()
    }

    #[test]
    fn irreducible_table_has_no_roots() {
        for (p, k) in [(2, 2), (2, 3), (3, 2), (3, 3), (5, 2), (5, 3), (7, 2), (7, 3)] {
            let m = irreducible(p, k).unwrap();
            for x in 0..p {
                let v = m.iter().rev().fold(0u32, |acc, &c| (acc * x + c) % p);
                assert_ne!(v, 0, "p={p} k={k} root {x}");
            }
        }
    }

    #[test]
    fn field_is_a_field() {
        for (p, k) in [(2, 2), (3, 2), (2, 3), (5, 2)] {
            let f = ExtensionField::new(p, k).unwrap();
            for a in 1..f.size() {
                assert_eq!((0..f.size()).filter(|&b| f.mul(a, b) == 1).count(), 1);
                // a^{q−1} = 1
                assert_eq!(f.pow(a, f.size() as u32 - 1), 1);
            }
        }
    }

    #[test]
    fn field_errors() {
        assert_eq!(ExtensionField::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(
            ExtensionField::new(11, 2).unwrap_err(),
            Error::UnsupportedExtension { p: 11, k: 2 }
        );
        assert!(ExtensionField::new(11, 1).is_ok());
        assert_eq!(
            line(2).count_points(4).unwrap_err(),
            Error::UnsupportedExtension { p: 2, k: 4 }
        );
    }

    #[test]
    fn point_count_examples() {
        assert_eq!(line(2).count_points(1).unwrap(), 3);
        assert_eq!(f2_cubic().count_points(1).unwrap(), 3);
        assert_eq!(f2_cubic().count_points(2).unwrap(), 9);
        for k in 1..=3 {
            assert_eq!(line(3).count_points(k).unwrap(), 3u64.pow(k) + 1);
        }
    }

    #[test]
    fn zeta_examples() {
        let z = zeta_from_counts(&line(3)).unwrap();
        assert_eq!(z.p_x, UniPoly::one());
        let z = zeta_from_counts(&f2_cubic()).unwrap();
        assert_eq!(z.p_x, UniPoly::from_ints(&[1, 0, 2]));
        assert_eq!(z.class_number, BigInt::from(3));
    }

    #[test]
    fn curve_validation() {
        assert!(matches!(
            PlaneCurve::new(2, &[(1, 0, 0, 2)], 0),
            Err(Error::InvalidCurve(_))
        ));
        assert!(matches!(
            PlaneCurve::new(3, &[(1, 0, 0, 1), (0, 2, 0, 1)], 0),
            Err(Error::InvalidCurve(_))
        ));
        assert!(matches!(
            PlaneCurve::new(3, &[(3, 0, 0, 1)], 0),
            Err(Error::InvalidCurve(_))
        ));
        assert_eq!(PlaneCurve::new(6, &[(1, 0, 0, 1)], 0).unwrap_err(), Error::NotPrime(6));
    }

    #[test]
    fn singular_models_trip_the_hasse_check() {
        // XYZ = 0 is three lines with 3q points
        for p in [2, 3] {
            let tri = PlaneCurve::new(p, &[(1, 1, 1, 1)], 1).unwrap();
            assert!(matches!(
                zeta_from_counts(&tri),
                Err(Error::HasseBoundViolation { .. })
            ));
        }
        // XY = 0, two lines meeting in a point
        let pair = PlaneCurve::new(3, &[(1, 1, 0, 1)], 0).unwrap();
        assert_eq!(
            zeta_from_counts(&pair).unwrap_err(),
            Error::HasseBoundViolation { n1: 7, q: 3, genus: 0 }
        );
    }

    #[test]
    fn rrc_examples() {
        let z = zeta_from_counts(&line(2)).unwrap();
        assert!(curve_rrc_check(&z, 20).unwrap().holds);
        let z = zeta_from_counts(&f2_cubic()).unwrap();
        assert!(curve_rrc_check(&z, 15).unwrap().holds);

        let mut a = series_of_rational(&z.p_x, 2, 15);
        a.set(7, a.at(7) + int(1));
        let bumped = TruncatedSeries::new(a.coeffs().to_vec()).unwrap();
        let v = rrc_check(&bumped, 2, 1, &int(3)).unwrap();
        assert!(!v.holds);
        assert!(matches!(curve_rrc_check(&z, 0), Err(Error::OrderTooShort { .. })));
    }
}
