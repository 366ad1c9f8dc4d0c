use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use crate::arith::{Affine, Rational};
use crate::error::{Error, Result};

/// Point of the plane with coordinates affine in the named parameters.
pub type Point = [Affine; 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Counterclockwise,
    Clockwise,
}

/// Facet `i` (1-based) with primitive inward normal `e_i` and support `η_i`,
/// so that the facet lies on `e_i · v = η_i` and the polygon on `≥`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Facet {
    pub index: usize,
    pub normal: [i64; 2],
    pub support: Affine,
    /// Endpoints as positions in the vertex list, in traversal order.
    pub endpoints: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub delzant: bool,
    pub fano: bool,
}

/// Rational convex polygon with derived facet data.
#[derive(Clone, Debug, Serialize)]
pub struct MomentPolytope {
    vertices: Vec<Point>,
    values: BTreeMap<String, Rational>,
    orientation: Orientation,
    facets: Vec<Facet>,
}

fn eval_point(p: &Point, values: &BTreeMap<String, Rational>) -> Result<[Rational; 2]> {
    Ok([p[0].eval(values)?, p[1].eval(values)?])
}

fn cross(a: &[Rational; 2], b: &[Rational; 2]) -> Rational {
    &(&a[0] * &b[1]) - &(&a[1] * &b[0])
}

fn sub(a: &[Rational; 2], b: &[Rational; 2]) -> [Rational; 2] {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

/// Primitive integer vector positively proportional to `d ≠ 0`.
fn primitive(d: &[Rational; 2]) -> Result<[i64; 2]> {
    let l = Rational::lcm_denominators(d.iter());
    let a = d[0].numer() * (&l / d[0].denom());
    let b = d[1].numer() * (&l / d[1].denom());
    let g = a.gcd(&b);
    let a = i64::try_from(&a / &g).map_err(|_| Error::Validation("edge direction too large".into()))?;
    let b = i64::try_from(&b / &g).map_err(|_| Error::Validation("edge direction too large".into()))?;
    Ok([a, b])
}

fn dot(n: [i64; 2], p: &Point) -> Affine {
    p[0].scale(&Rational::from(n[0])).add(&p[1].scale(&Rational::from(n[1])))
}

fn dot_num(n: [i64; 2], p: &[Rational; 2]) -> Rational {
    &(&Rational::from(n[0]) * &p[0]) + &(&Rational::from(n[1]) * &p[1])
}

impl MomentPolytope {
    /// Builds a polygon from numeric vertices.
    pub fn from_numeric(vertices: &[[Rational; 2]]) -> Result<Self> {
        let pts = vertices
            .iter()
            .map(|[x, y]| [Affine::constant(x.clone()), Affine::constant(y.clone())])
            .collect();
        MomentPolytope::new(pts, BTreeMap::new())
    }

    /// Builds a polygon whose vertices are affine in the parameters, using
    /// `values` to decide the geometry.
    ///
    /// Either orientation is accepted. Counterclockwise input numbers
    /// facet `i` as the edge from vertex `i` to vertex `i+1`; clockwise
    /// input starts at the top horizontal facet when there is one and
    /// keeps the given order.
    pub fn new(vertices: Vec<Point>, values: BTreeMap<String, Rational>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::Validation(format!("a polygon needs at least 3 vertices, got {n}")));
        }
        let num: Vec<[Rational; 2]> = vertices.iter().map(|p| eval_point(p, &values)).collect::<Result<_>>()?;
        for i in 0..n {
            for j in 0..i {
                if num[i] == num[j] {
                    return Err(Error::Validation(format!(
                        "repeated vertex ({}, {}) at positions {} and {}",
                        num[i][0],
                        num[i][1],
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        let mut area = Rational::zero();
        for i in 0..n {
            area += &cross(&num[i], &num[(i + 1) % n]);
        }
        if area.is_zero() {
            return Err(Error::Validation("degenerate polygon (zero area)".into()));
        }
        let orientation = if area.is_positive() {
            Orientation::Counterclockwise
        } else {
            Orientation::Clockwise
        };
        for i in 0..n {
            let a = sub(&num[(i + 1) % n], &num[i]);
            let b = sub(&num[(i + 2) % n], &num[(i + 1) % n]);
            if cross(&a, &b).is_zero() {
                return Err(Error::Validation(format!(
                    "collinear vertices at positions {}, {}, {}",
                    i + 1,
                    (i + 1) % n + 1,
                    (i + 2) % n + 1
                )));
            }
        }
        let mut edges = Vec::with_capacity(n);
        for i in 0..n {
            let j = (i + 1) % n;
            let d = primitive(&sub(&num[j], &num[i]))?;
            let normal = match orientation {
                Orientation::Counterclockwise => [-d[1], d[0]],
                Orientation::Clockwise => [d[1], -d[0]],
            };
            let support = dot(normal, &vertices[i]);
            if support != dot(normal, &vertices[j]) {
                return Err(Error::Validation(format!(
                    "edge {}-{} is not parallel to {:?} for all parameter values",
                    i + 1,
                    j + 1,
                    normal
                )));
            }
            let eta = support.eval(&values)?;
            for (k, v) in num.iter().enumerate() {
                if k == i || k == j {
                    continue;
                }
                if &dot_num(normal, v) - &eta <= Rational::zero() {
                    return Err(Error::Validation(format!(
                        "polygon is not convex: vertex {} is not strictly inside facet {}-{}",
                        k + 1,
                        i + 1,
                        j + 1
                    )));
                }
            }
            edges.push((normal, support, [i, j]));
        }
        let start = match orientation {
            Orientation::Counterclockwise => 0,
            Orientation::Clockwise => edges.iter().position(|e| e.0 == [0, -1]).unwrap_or(0),
        };
        let facets = (0..n)
            .map(|k| {
                let (normal, support, endpoints) = edges[(start + k) % n].clone();
                Facet {
                    index: k + 1,
                    normal,
                    support,
                    endpoints,
                }
            })
            .collect();
        Ok(MomentPolytope {
            vertices,
            values,
            orientation,
            facets,
        })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn numeric_vertices(&self) -> Vec<[Rational; 2]> {
        self.vertices.iter().map(|p| eval_point(p, &self.values).expect("validated")).collect()
    }

    /// Numeric values of the parameters the vertices depend on.
    pub fn values(&self) -> &BTreeMap<String, Rational> {
        &self.values
    }

    /// Parameter names occurring in the supports, sorted.
    pub fn parameters(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for f in &self.facets {
            for k in f.support.coeffs().keys() {
                if !out.contains(k) {
                    out.push(k.clone());
                }
            }
        }
        out.sort();
        out
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn normals(&self) -> Vec<[i64; 2]> {
        self.facets.iter().map(|f| f.normal).collect()
    }

    pub fn supports(&self) -> Vec<Affine> {
        self.facets.iter().map(|f| f.support.clone()).collect()
    }

    /// Facets `i`, `j` (0-based) share a vertex.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        let n = self.len();
        i != j && ((i + 1) % n == j || (j + 1) % n == i)
    }

    pub fn validate(&self) -> Validation {
        let e = self.normals();
        let n = e.len();
        let det = |a: [i64; 2], b: [i64; 2]| a[0] * b[1] - a[1] * b[0];
        let delzant = (0..n).all(|i| det(e[i], e[(i + 1) % n]).abs() == 1);
        let sign = det(e[0], e[1]).signum();
        let fan_ok = (0..n).all(|i| det(e[i], e[(i + 1) % n]).signum() == sign && sign != 0);
        let convex = (0..n).all(|i| {
            let a = e[i];
            let b = e[(i + 1) % n];
            let c = e[(i + 2) % n];
            det([b[0] - a[0], b[1] - a[1]], [c[0] - b[0], c[1] - b[1]]).signum() == sign
        });
        Validation {
            delzant,
            fano: delzant && fan_ok && convex,
        }
    }

    /// Image under `v ↦ M v + t` for a unimodular `M` and integer `t`.
    pub fn transform(&self, m: [[i64; 2]; 2], t: [i64; 2]) -> Result<MomentPolytope> {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if det.abs() != 1 {
            return Err(Error::usage("transformation matrix is not unimodular"));
        }
        let r = |k: i64| Rational::from(k);
        let pts = self
            .vertices
            .iter()
            .map(|p| {
                let x = p[0].scale(&r(m[0][0])).add(&p[1].scale(&r(m[0][1]))).add(&Affine::constant(r(t[0])));
                let y = p[0].scale(&r(m[1][0])).add(&p[1].scale(&r(m[1][1]))).add(&Affine::constant(r(t[1])));
                [x, y]
            })
            .collect();
        MomentPolytope::new(pts, self.values.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn numeric(pts: &[(&str, &str)]) -> MomentPolytope {
        let v: Vec<[Rational; 2]> = pts.iter().map(|(x, y)| [q(x), q(y)]).collect();
        MomentPolytope::from_numeric(&v).unwrap()
    }

    #[test]
    fn unit_square() {
        let p = numeric(&[("0", "0"), ("1", "0"), ("1", "1"), ("0", "1")]);
        assert_eq!(p.normals(), vec![[0, 1], [-1, 0], [0, -1], [1, 0]]);
        let eta: Vec<String> = p.supports().iter().map(|a| a.to_string()).collect();
        assert_eq!(eta, ["0", "-1", "-1", "0"]);
        assert_eq!(p.validate(), Validation { delzant: true, fano: true });
    }

    #[test]
    fn numeric_pentagon_clockwise() {
        let p = numeric(&[("0", "0"), ("0", "2/3"), ("1/3", "2/3"), ("3/4", "1/4"), ("3/4", "0")]);
        assert_eq!(p.orientation(), Orientation::Clockwise);
        assert_eq!(p.normals(), vec![[0, -1], [-1, -1], [-1, 0], [0, 1], [1, 0]]);
        let eta: Vec<String> = p.supports().iter().map(|a| a.to_string()).collect();
        assert_eq!(eta, ["-2/3", "-1", "-3/4", "0", "0"]);
    }

    #[test]
    fn non_fano_triangle() {
        let p = numeric(&[("0", "0"), ("2", "0"), ("0", "1")]);
        assert_eq!(p.normals(), vec![[0, 1], [-1, -2], [1, 0]]);
        assert_eq!(p.validate(), Validation { delzant: false, fano: false });
    }

    #[test]
    fn rejects_bad_polygons() {
        let bad = [
            vec![("0", "0"), ("1", "0")],
            vec![("0", "0"), ("1", "0"), ("1", "0"), ("0", "1")],
            vec![("0", "0"), ("1", "0"), ("2", "0"), ("0", "1")],
            vec![("0", "0"), ("2", "0"), ("1", "1/2"), ("2", "2"), ("0", "2")],
            vec![("0", "0"), ("2", "0"), ("0", "2"), ("2", "2")],
        ];
        for pts in bad {
            let v: Vec<[Rational; 2]> = pts.iter().map(|(x, y)| [q(x), q(y)]).collect();
            assert!(matches!(MomentPolytope::from_numeric(&v), Err(Error::Validation(_))), "{pts:?}");
        }
    }
}
