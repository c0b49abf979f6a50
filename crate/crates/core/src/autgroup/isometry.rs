//! Isometries of S_H as integer matrices over the curve basis.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, IntMatrix, RatVector};
use crate::hessian::expr::{self, Env};
use crate::hessian::{CurveName, DivisorClass, PicardLattice};
use crate::lattices;

pub const DIM: usize = 16;

/// Column j is the image of the j-th basis class.
#[derive(Clone, Debug)]
pub struct Isometry {
    pub name: String,
    pub m: Vec<i64>,
}

impl PartialEq for Isometry {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

impl Eq for Isometry {}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn gram_i64(pic: &PicardLattice) -> Vec<i64> {
    pic.gram.to_i64_rows().into_iter().flatten().collect()
}

/// Panics if an entry leaves i64; words of a few dozen generators stay far
/// below that.
fn matmul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut c = vec![0i128; DIM * DIM];
    for i in 0..DIM {
        for k in 0..DIM {
            let x = a[i * DIM + k] as i128;
            if x == 0 {
                continue;
            }
            for j in 0..DIM {
                c[i * DIM + j] += x * b[k * DIM + j] as i128;
            }
        }
    }
    c.into_iter().map(|x| i64::try_from(x).expect("isometry entries fit in i64")).collect()
}

fn transpose(a: &[i64]) -> Vec<i64> {
    let mut t = vec![0; DIM * DIM];
    for i in 0..DIM {
        for j in 0..DIM {
            t[j * DIM + i] = a[i * DIM + j];
        }
    }
    t
}

impl Isometry {
    pub fn identity() -> Self {
        let mut m = vec![0; DIM * DIM];
        for i in 0..DIM {
            m[i * DIM + i] = 1;
        }
        Isometry { name: "id".into(), m }
    }

    /// Checks Mᵀ G M = G.
    pub fn from_matrix(pic: &PicardLattice, name: &str, m: Vec<i64>) -> Result<Self> {
        assert_eq!(m.len(), DIM * DIM);
        let iso = Isometry { name: name.into(), m };
        if !iso.preserves_gram(pic) {
            return Err(Error::NotIsometry(name.into()));
        }
        Ok(iso)
    }

    pub fn preserves_gram(&self, pic: &PicardLattice) -> bool {
        let g = gram_i64(pic);
        matmul(&transpose(&self.m), &matmul(&g, &self.m)) == g
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// self ∘ other
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry { name: format!("{}∘{}", self.name, other.name), m: matmul(&self.m, &other.m) }
    }

    /// G⁻¹ Mᵀ G, which is integral for an isometry of a nondegenerate lattice.
    pub fn inverse(&self, pic: &PicardLattice) -> Isometry {
        let g = &pic.gram;
        let mt = IntMatrix::from_i64(&transpose(&self.m).chunks(DIM).map(|r| r.to_vec()).collect::<Vec<_>>());
        let rhs = &mt * g;
        let ginv = g.inverse_rational().expect("Gram is nondegenerate");
        let mut m = vec![0; DIM * DIM];
        for j in 0..DIM {
            let col = RatVector::from_ints(&rhs.col(j));
            for i in 0..DIM {
                let v = ginv[i].0.iter().zip(&col.0).fold(BigRational::zero(), |acc, (a, b)| acc + a * b);
                assert!(v.is_integer(), "inverse of an isometry is integral");
                m[i * DIM + j] = v.to_integer().to_i64().expect("small entries");
            }
        }
        Isometry { name: format!("{}⁻¹", self.name), m }
    }

    /// s ∘ self ∘ s⁻¹
    pub fn conjugate_by(&self, s: &Isometry, pic: &PicardLattice) -> Isometry {
        s.compose(self).compose(&s.inverse(pic))
    }

    pub fn apply(&self, c: &DivisorClass) -> DivisorClass {
        let mut out = vec![BigRational::zero(); DIM];
        for (i, o) in out.iter_mut().enumerate() {
            for j in 0..DIM {
                let a = self.m[i * DIM + j];
                if a != 0 {
                    *o += BigRational::from_integer(int(a)) * &c.coords.0[j];
                }
            }
        }
        DivisorClass { coords: RatVector(out) }
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_i64(&self.m.chunks(DIM).map(|r| r.to_vec()).collect::<Vec<_>>())
    }
}

/// Action on the discriminant group D(S_H).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscriminantAction {
    Plus,
    Minus,
    Other,
}

impl fmt::Display for DiscriminantAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiscriminantAction::Plus => "+1",
            DiscriminantAction::Minus => "-1",
            DiscriminantAction::Other => "other",
        })
    }
}

/// Compares the induced map on S_H*/S_H with ±1.
pub fn discriminant_action(pic: &PicardLattice, iso: &Isometry) -> DiscriminantAction {
    let d = lattices::discriminant_of_gram(&pic.gram).expect("nondegenerate");
    let fixes = |sign: i64| {
        d.generators.iter().all(|g| {
            let c = DivisorClass { coords: g.clone() };
            let img = iso.apply(&c);
            (&img - &c.times(sign)).is_integral()
        })
    };
    if fixes(1) {
        DiscriminantAction::Plus
    } else if fixes(-1) {
        DiscriminantAction::Minus
    } else {
        DiscriminantAction::Other
    }
}

/// The unique linear map sending each of the twenty curves to the given
/// class. Fails if the images violate a relation among the curves or the map
/// is not an integral isometry.
pub fn isometry_from_images(pic: &PicardLattice, name: &str, images: &[DivisorClass]) -> Result<Isometry> {
    assert_eq!(images.len(), 20);
    let mut m = vec![0; DIM * DIM];
    for (j, &b) in pic.basis_curves.iter().enumerate() {
        let col = images[b].coords.to_integers().ok_or_else(|| Error::NotIntegral(format!("{name}: image")))?;
        for (i, x) in col.iter().enumerate() {
            m[i * DIM + j] = x.to_i64().ok_or_else(|| Error::NotIsometry(name.into()))?;
        }
    }
    let iso = Isometry { name: name.into(), m };
    for (c, img) in CurveName::all().into_iter().zip(images) {
        if iso.apply(pic.curve(c)) != *img {
            return Err(Error::IllDefined(format!("{name}: image of {c} is inconsistent")));
        }
    }
    if !iso.preserves_gram(pic) {
        return Err(Error::NotIsometry(name.into()));
    }
    Ok(iso)
}

/// Builds an isometry from a table of `(source, image)` entries over the
/// curve names. A curve image also maps back to its source; unlisted curves
/// are fixed. Images are class expressions, resolved with `env`.
pub fn isometry_from_table(pic: &PicardLattice, name: &str, table: &[(&str, &str)], env: &Env) -> Result<Isometry> {
    let mut images: BTreeMap<CurveName, DivisorClass> =
        CurveName::all().into_iter().map(|c| (c, pic.curve(c).clone())).collect();
    let mut assigned: BTreeMap<CurveName, String> = BTreeMap::new();
    let mut assign = |c: CurveName, img: &str, images: &mut BTreeMap<CurveName, DivisorClass>| -> Result<()> {
        let v = expr::parse_with(pic, img, env)?;
        if let Some(prev) = assigned.get(&c) {
            if images[&c] != v {
                return Err(Error::IllDefined(format!("{name}: {c} ↦ {prev} and {img}")));
            }
        }
        assigned.insert(c, img.to_string());
        images.insert(c, v);
        Ok(())
    };
    for &(src, img) in table {
        let c = CurveName::parse(src)?;
        assign(c, img, &mut images)?;
        if let Ok(back) = CurveName::parse(img) {
            assign(back, src, &mut images)?;
        }
    }
    let list: Vec<DivisorClass> = CurveName::all().into_iter().map(|c| images[&c].clone()).collect();
    isometry_from_images(pic, name, &list)
}

/// x ↦ x − 2(x·α)/α² α, checked to be integral on S_H.
pub fn reflection(pic: &PicardLattice, name: &str, alpha: &DivisorClass) -> Result<Isometry> {
    let a2 = pic.square(alpha);
    if a2.is_zero() {
        return Err(Error::Degenerate);
    }
    let two = BigRational::from_integer(int(2));
    let images: Vec<DivisorClass> = CurveName::all()
        .into_iter()
        .map(|c| {
            let x = pic.curve(c);
            let k = &two * pic.dot(x, alpha) / &a2;
            x - &alpha.scale(&k)
        })
        .collect();
    if images.iter().any(|c| !c.is_integral()) {
        return Err(Error::NotIntegral(format!("{name}: reflection")));
    }
    isometry_from_images(pic, name, &images)
}

/// (γω′, ω′)
pub fn height(pic: &PicardLattice, weyl: &DivisorClass, iso: &Isometry) -> BigInt {
    pic.dot(&iso.apply(weyl), weyl).to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hessian::picard;

    #[test]
    fn identity_table() {
        let p = picard();
        let id = isometry_from_table(p, "id", &[], &Env::new()).unwrap();
        assert!(id.is_identity());
        assert_eq!(discriminant_action(p, &id), DiscriminantAction::Plus);
    }

    #[test]
    fn rejects_non_isometries() {
        let p = picard();
        // a swap of a node with a line that meets it cannot be an isometry
        let err = isometry_from_table(p, "bad", &[("N16", "T16")], &Env::new()).unwrap_err();
        assert!(matches!(err, Error::NotIsometry(_) | Error::IllDefined(_)));
        let err = isometry_from_table(p, "bad", &[("N16", "N26"), ("N16", "N36")], &Env::new()).unwrap_err();
        assert!(matches!(err, Error::IllDefined(_)));
    }

    #[test]
    fn inverse_and_compose() {
        let p = picard();
        let r = reflection(p, "r", p.curve(CurveName::node("16"))).unwrap();
        assert!(r.is_involution());
        assert_eq!(r.inverse(p), r);
        assert_eq!(discriminant_action(p, &r), DiscriminantAction::Plus);
        assert_eq!(r.apply(p.curve(CurveName::node("16"))), p.curve(CurveName::node("16")).times(-1));
    }
}
