use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::MomentPolytope;
use crate::error::{Error, Result};

/// The five toric Fano surfaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FanoTag {
    #[serde(rename = "CP2")]
    Cp2,
    #[serde(rename = "S2xS2")]
    S2xS2,
    #[serde(rename = "CP2_bl1")]
    Cp2Bl1,
    #[serde(rename = "CP2_bl2")]
    Cp2Bl2,
    #[serde(rename = "CP2_bl3")]
    Cp2Bl3,
}

impl FanoTag {
    pub const ALL: [FanoTag; 5] = [
        FanoTag::Cp2,
        FanoTag::S2xS2,
        FanoTag::Cp2Bl1,
        FanoTag::Cp2Bl2,
        FanoTag::Cp2Bl3,
    ];

    /// Template rays, counterclockwise.
    pub fn template(self) -> &'static [[i64; 2]] {
        match self {
            FanoTag::Cp2 => &[[1, 0], [0, 1], [-1, -1]],
            FanoTag::S2xS2 => &[[1, 0], [0, 1], [-1, 0], [0, -1]],
            FanoTag::Cp2Bl1 => &[[1, 0], [1, 1], [0, 1], [-1, -1]],
            FanoTag::Cp2Bl2 => &[[1, 0], [0, 1], [-1, 0], [-1, -1], [0, -1]],
            FanoTag::Cp2Bl3 => &[[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]],
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FanoTag::Cp2 => "CP2",
            FanoTag::S2xS2 => "S2xS2",
            FanoTag::Cp2Bl1 => "CP2_bl1",
            FanoTag::Cp2Bl2 => "CP2_bl2",
            FanoTag::Cp2Bl3 => "CP2_bl3",
        }
    }
}

impl fmt::Display for FanoTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FanoTag {
    type Err = Error;

    /// Accepts `cp2`, `s2xs2`, `cp2-bl1` .. `cp2-bl3` (case-insensitive,
    /// `-` or `_`).
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "cp2" => Ok(FanoTag::Cp2),
            "s2xs2" => Ok(FanoTag::S2xS2),
            "cp2_bl1" => Ok(FanoTag::Cp2Bl1),
            "cp2_bl2" => Ok(FanoTag::Cp2Bl2),
            "cp2_bl3" => Ok(FanoTag::Cp2Bl3),
            _ => Err(Error::usage(format!(
                "unknown model `{s}` (expected cp2, s2xs2, cp2-bl1, cp2-bl2, cp2-bl3)"
            ))),
        }
    }
}

/// Unimodular `matrix` with `matrix · e_{(shift + k·step) mod l} = t_k`,
/// `step = ±1`, where `e` are the input normals and `t` the template rays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanoWitness {
    pub matrix: [[i64; 2]; 2],
    pub shift: usize,
    pub reversed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanoClass {
    pub tag: FanoTag,
    pub witness: FanoWitness,
}

impl FanoClass {
    /// Applies the witness to `rays` and compares with the template.
    pub fn check(&self, rays: &[[i64; 2]]) -> bool {
        let t = self.tag.template();
        if t.len() != rays.len() {
            return false;
        }
        let n = rays.len() as i64;
        let m = self.witness.matrix;
        (0..n).all(|k| {
            let step = if self.witness.reversed { -k } else { k };
            let i = (self.witness.shift as i64 + step).rem_euclid(n) as usize;
            apply(m, rays[i]) == t[k as usize]
        })
    }
}

fn apply(m: [[i64; 2]; 2], v: [i64; 2]) -> [i64; 2] {
    [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
}

fn det(a: [i64; 2], b: [i64; 2]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

/// `M` with `M a = t0`, `M b = t1`, when `(a, b)` is a basis.
fn solve_map(a: [i64; 2], b: [i64; 2], t0: [i64; 2], t1: [i64; 2]) -> Option<[[i64; 2]; 2]> {
    let d = det(a, b);
    if d.abs() != 1 {
        return None;
    }
    // [a b]^{-1} = (1/d) [[b1, -b0], [-a1, a0]]
    let inv = [[b[1] * d, -b[0] * d], [-a[1] * d, a[0] * d]];
    let t = [[t0[0], t1[0]], [t0[1], t1[1]]];
    let mut m = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            m[i][j] = t[i][0] * inv[0][j] + t[i][1] * inv[1][j];
        }
    }
    Some(m)
}

/// Fan of the polygon: rays are the facet normals in facet order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fan {
    pub rays: Vec<[i64; 2]>,
}

/// Smallest cone containing a lattice vector, with its integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalCone {
    /// 0-based ray indices (empty for the zero cone).
    pub rays: Vec<usize>,
    pub coeffs: Vec<i64>,
}

impl Fan {
    pub fn of(p: &MomentPolytope) -> Fan {
        Fan { rays: p.normals() }
    }

    /// Cones: the zero cone, each ray and each adjacent pair (0-based).
    pub fn cones(&self) -> Vec<Vec<usize>> {
        let n = self.rays.len();
        let mut out = vec![Vec::new()];
        out.extend((0..n).map(|i| vec![i]));
        out.extend((0..n).map(|i| vec![i, (i + 1) % n]));
        out
    }

    /// The minimal cone containing `w` and its coefficients; errors when
    /// the coefficients are not positive integers.
    pub fn minimal_cone(&self, w: [i64; 2]) -> Result<MinimalCone> {
        if w == [0, 0] {
            return Ok(MinimalCone {
                rays: Vec::new(),
                coeffs: Vec::new(),
            });
        }
        for (i, r) in self.rays.iter().enumerate() {
            if det(*r, w) == 0 && r[0] * w[0] + r[1] * w[1] > 0 {
                let g = if r[0] != 0 { w[0] / r[0] } else { w[1] / r[1] };
                if [g * r[0], g * r[1]] != w {
                    return Err(Error::consistency(format!("{w:?} is not an integer multiple of ray {r:?}")));
                }
                return Ok(MinimalCone {
                    rays: vec![i],
                    coeffs: vec![g],
                });
            }
        }
        let n = self.rays.len();
        for i in 0..n {
            let j = (i + 1) % n;
            let (a, b) = (self.rays[i], self.rays[j]);
            let d = det(a, b);
            if d == 0 {
                continue;
            }
            // w = c_a a + c_b b by Cramer's rule
            let na = det(w, b);
            let nb = det(a, w);
            if na % d != 0 || nb % d != 0 {
                if na * d > 0 && nb * d > 0 {
                    return Err(Error::consistency(format!("{w:?} has non-integral coordinates in cone {i},{j}")));
                }
                continue;
            }
            let (ca, cb) = (na / d, nb / d);
            if ca > 0 && cb > 0 {
                return Ok(MinimalCone {
                    rays: vec![i, j],
                    coeffs: vec![ca, cb],
                });
            }
        }
        Err(Error::consistency(format!("no cone of the fan contains {w:?}")))
    }

    pub fn classify(&self) -> Result<FanoClass> {
        let e = &self.rays;
        let n = e.len();
        for tag in FanoTag::ALL {
            let t = tag.template();
            if t.len() != n {
                continue;
            }
            for shift in 0..n {
                for reversed in [false, true] {
                    let next = if reversed { (shift + n - 1) % n } else { (shift + 1) % n };
                    let Some(matrix) = solve_map(e[shift], e[next], t[0], t[1]) else {
                        continue;
                    };
                    let class = FanoClass {
                        tag,
                        witness: FanoWitness { matrix, shift, reversed },
                    };
                    if class.check(e) {
                        return Ok(class);
                    }
                }
            }
        }
        Err(Error::NotFano(format!("normals {e:?} match none of the five Fano templates")))
    }
}
