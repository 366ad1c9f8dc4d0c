//! Polynomial remainder sequences: pseudo-division, resultants with
//! cofactors, multivariate gcd and squarefree decomposition.
//!
//! Everything here treats an [`MPoly`] as a univariate polynomial in a
//! chosen main variable with coefficients in the remaining variables.

use super::MPoly;

/// Dense coefficient vector in the main variable (index = power), trimmed.
fn dense(p: &MPoly, var: usize) -> Vec<MPoly> {
    p.coeffs_in(var)
}

fn deg(v: &[MPoly]) -> i32 {
    v.len() as i32 - 1
}

fn lc(v: &[MPoly]) -> &MPoly {
    v.last().expect("leading coefficient of zero")
}

fn undense(like: &MPoly, var: usize, v: &[MPoly]) -> MPoly {
    MPoly::from_coeffs_in(like.ring(), var, v)
}

/// Pseudo-division: returns `(q, r)` with `lc(b)^(deg a - deg b + 1) · a = q·b + r`
/// and `deg r < deg b`. Requires `b ≠ 0` and nonnegative exponents in `var`.
pub fn pseudo_divrem(a: &MPoly, b: &MPoly, var: usize) -> (MPoly, MPoly) {
    assert!(!b.is_zero(), "pseudo-division by zero");
    let da = if a.is_zero() { -1 } else { a.degree_in(var) };
    let db = b.degree_in(var);
    if da < db {
        return (MPoly::zero(a.ring()), a.clone());
    }
    let bv = dense(b, var);
    let l = lc(&bv).clone();
    let mut r = dense(a, var);
    let mut q: Vec<MPoly> = vec![MPoly::zero(a.ring()); (da - db + 1) as usize];
    let mut steps = da - db + 1;
    while deg(&r) >= db {
        let k = (deg(&r) - db) as usize;
        let t = r.last().unwrap().clone();
        for c in q.iter_mut() {
            *c = &*c * &l;
        }
        q[k] = &q[k] + &t;
        for c in r.iter_mut() {
            *c = &*c * &l;
        }
        for (i, bc) in bv.iter().enumerate() {
            r[i + k] = &r[i + k] - &(&t * bc);
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        steps -= 1;
    }
    // Pad so the multiplier is exactly lc(b)^(da - db + 1).
    if steps > 0 {
        let f = l.pow(steps as u32);
        for c in q.iter_mut() {
            *c = &*c * &f;
        }
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    (undense(a, var, &q), undense(a, var, &r))
}

pub fn pseudo_rem(a: &MPoly, b: &MPoly, var: usize) -> MPoly {
    pseudo_divrem(a, b, var).1
}

/// Resultant in `var` together with cofactors `(u, v)` such that
/// `u·f + v·g = res`.
///
/// Sign convention: determinant of the Sylvester matrix with the rows of
/// `f` first, so `Res(f, g) = lc(f)^deg g · Π g(roots of f)`.
pub fn resultant_with_cofactors(f: &MPoly, g: &MPoly, var: usize) -> (MPoly, MPoly, MPoly) {
    let ring = f.ring().clone();
    let zero = MPoly::zero(&ring);
    let one = MPoly::one(&ring);
    if f.is_zero() || g.is_zero() {
        return (zero.clone(), zero.clone(), zero);
    }
    // Track a = ua·f + va·g.
    let (mut a, mut ua, mut va) = (f.clone(), one.clone(), zero.clone());
    let (mut b, mut ub, mut vb) = (g.clone(), zero.clone(), one.clone());
    let mut sign = 1i32;
    if a.degree_in(var) < b.degree_in(var) {
        if a.degree_in(var) % 2 == 1 && b.degree_in(var) % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut ua, &mut ub);
        std::mem::swap(&mut va, &mut vb);
    }
    if b.degree_in(var) == 0 {
        let da = a.degree_in(var) as u32;
        if da == 0 {
            return (one.clone(), zero, one);
        }
        let c = b.clone();
        let k = c.pow(da - 1);
        let res = &k * &c;
        return (res, &ub * &k, &vb * &k);
    }
    let mut gg = one.clone();
    let mut h = one.clone();
    loop {
        let da = a.degree_in(var);
        let db = b.degree_in(var);
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let (q, r) = pseudo_divrem(&a, &b, var);
        let lb = b.coeffs_in(var).pop().unwrap();
        let m = lb.pow(delta + 1);
        let ur = &(&m * &ua) - &(&q * &ub);
        let vr = &(&m * &va) - &(&q * &vb);
        let div = &gg * &h.pow(delta);
        a = b;
        ua = ub;
        va = vb;
        if r.is_zero() {
            return (zero.clone(), zero.clone(), zero);
        }
        b = r.div_exact(&div).expect("subresultant division");
        ub = ur.div_exact(&div).expect("subresultant cofactor division");
        vb = vr.div_exact(&div).expect("subresultant cofactor division");
        gg = a.coeffs_in(var).pop().unwrap();
        h = match delta {
            0 => h,
            1 => gg.clone(),
            d => gg.pow(d).div_exact(&h.pow(d - 1)).expect("subresultant h update"),
        };
        if b.degree_in(var) <= 0 {
            break;
        }
    }
    let da = a.degree_in(var) as u32;
    let lb = b.clone();
    let mut scale = lb.pow(da - 1);
    if da > 1 {
        scale = scale.div_exact(&h.pow(da - 1)).expect("subresultant final division");
    }
    if sign < 0 {
        scale = -&scale;
    }
    (&b * &scale, &ub * &scale, &vb * &scale)
}

pub fn resultant(f: &MPoly, g: &MPoly, var: usize) -> MPoly {
    resultant_with_cofactors(f, g, var).0
}

/// Discriminant-like quantity `Res(f, ∂f)` (no leading-coefficient division).
pub fn res_with_derivative(f: &MPoly, var: usize) -> MPoly {
    resultant(f, &f.derivative(var), var)
}

/// Content with respect to `var`: gcd of the coefficients.
pub fn content(p: &MPoly, var: usize) -> MPoly {
    let mut acc = MPoly::zero(p.ring());
    for c in p.coeffs_in(var) {
        if c.is_zero() {
            continue;
        }
        acc = gcd(&acc, &c);
        if acc.is_constant() {
            break;
        }
    }
    acc
}

pub fn primitive_part(p: &MPoly, var: usize) -> MPoly {
    if p.is_zero() {
        return p.clone();
    }
    let c = content(p, var);
    p.div_exact(&c).expect("content divides")
}

/// Greatest common divisor in the polynomial ring, after clearing negative
/// exponents; monic. `gcd(0, 0) = 0`.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.poly_normalized();
    }
    if b.is_zero() {
        return a.poly_normalized();
    }
    let (ma, a1) = a.poly_normalized().split_monomial();
    let (mb, b1) = b.poly_normalized().split_monomial();
    let m: Vec<i32> = ma.iter().zip(&mb).map(|(x, y)| *x.min(y)).collect();
    gcd_free(&a1, &b1).shift(&m).monic()
}

/// Gcd of polynomials without monomial factors.
fn gcd_free(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_constant() || b.is_constant() {
        return MPoly::one(a.ring());
    }
    let a = a.monic();
    let b = b.monic();
    if a == b {
        return a;
    }
    if a.len() <= b.len() && b.div_exact(&a).is_some() {
        return a;
    }
    if b.len() < a.len() && a.div_exact(&b).is_some() {
        return b;
    }
    let n = a.nvars();
    let var = (0..n).find(|&i| a.involves(i) || b.involves(i)).unwrap();
    if !a.involves(var) {
        return gcd(&a, &content(&b, var));
    }
    if !b.involves(var) {
        return gcd(&content(&a, var), &b);
    }
    let ca = content(&a, var);
    let cb = content(&b, var);
    let cg = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).unwrap();
    let mut q = b.div_exact(&cb).unwrap();
    if p.degree_in(var) < q.degree_in(var) {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() && q.degree_in(var) > 0 {
        let r = pseudo_rem(&p, &q, var);
        p = q;
        q = if r.is_zero() { r } else { primitive_part(&r, var).monic() };
    }
    let g = if q.is_zero() { primitive_part(&p, var) } else { MPoly::one(a.ring()) };
    (&g * &cg).monic()
}

pub fn lcm(a: &MPoly, b: &MPoly) -> MPoly {
    let g = gcd(a, b);
    (&a.poly_normalized() * &b.poly_normalized()).div_exact(&g).unwrap().monic()
}

/// Squarefree in `var`: `gcd(f, ∂f)` has degree 0 in `var`.
pub fn is_squarefree(f: &MPoly, var: usize) -> bool {
    let g = gcd(f, &f.derivative(var));
    !g.involves(var)
}

/// Yun's algorithm: returns `[a_1, a_2, ...]` with `f = c · Π a_i^i`,
/// each `a_i` squarefree and pairwise coprime (factors free of `var` are
/// left in `c`).
pub fn squarefree_decomposition(f: &MPoly, var: usize) -> Vec<MPoly> {
    let f = primitive_part(&f.poly_normalized(), var);
    if !f.involves(var) {
        return Vec::new();
    }
    let df = f.derivative(var);
    let a0 = gcd(&f, &df);
    let mut b = f.div_exact(&a0).unwrap();
    let mut c = df.div_exact(&a0).unwrap();
    let mut d = &c - &b.derivative(var);
    let mut out = Vec::new();
    loop {
        let a = gcd(&b, &d);
        out.push(a.clone());
        b = b.div_exact(&a).unwrap();
        if !b.involves(var) {
            break;
        }
        c = d.div_exact(&a).unwrap();
        d = &c - &b.derivative(var);
    }
    while out.last().is_some_and(|p| !p.involves(var)) {
        out.pop();
    }
    out
}

/// Constant multiple making the leading coefficient 1.
pub fn monic(p: &MPoly) -> MPoly {
    if p.is_zero() {
        return p.clone();
    }
    p.scale(&p.leading_coeff().recip())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ParamSystem, Rational, Ring};

    fn ring() -> Ring {
        ParamSystem::from_names(&["X", "x", "y"]).unwrap()
    }

    fn v(r: &Ring, n: &str) -> MPoly {
        MPoly::var(r, n).unwrap()
    }

    fn c(r: &Ring, k: i64) -> MPoly {
        MPoly::constant(r, Rational::from(k))
    }

    #[test]
    fn small_resultants() {
        let r = ring();
        let xx = v(&r, "X");
        let f = &xx.pow(2) - &c(&r, 1);
        assert_eq!(resultant(&f, &f.derivative(0), 0), c(&r, -4));
        let g = &xx.pow(2) - &v(&r, "x");
        assert_eq!(resultant(&g, &g.derivative(0), 0), &v(&r, "x") * &c(&r, -4));
    }

    #[test]
    fn cofactor_identity() {
        let r = ring();
        let xx = v(&r, "X");
        let x = v(&r, "x");
        let y = v(&r, "y");
        let f = &(&xx.pow(3) - &(&x * &xx)) + &y;
        let g = &(&y * &xx.pow(2)) + &c(&r, 1);
        let (res, u, w) = resultant_with_cofactors(&f, &g, 0);
        assert!(!res.involves(0));
        assert_eq!(&(&u * &f) + &(&w * &g), res);
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let r = ring();
        let [xx, x, y] = ["X", "x", "y"].map(|n| v(&r, n));
        let common = &(&xx * &x) + &y;
        let a = &common * &(&xx - &c(&r, 2));
        let b = &common * &(&(&x * &y) + &c(&r, 3));
        assert_eq!(gcd(&a, &b), common.monic());
        let xa = &xx.pow(2) * &(&xx - &v(&r, "x"));
        assert_eq!(gcd(&xa, &xx.pow(3)), xx.pow(2));
        assert!(gcd(&(&xx - &c(&r, 1)), &(&xx + &c(&r, 1))).is_one());
    }

    #[test]
    fn yun_splits_multiplicities() {
        let r = ring();
        let xx = v(&r, "X");
        let p1 = &xx - &c(&r, 1);
        let p2 = &xx + &v(&r, "x");
        let f = &p1 * &p2.pow(3);
        let parts = squarefree_decomposition(&f, 0);
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], p1.monic());
        assert!(parts[1].is_one());
        assert_eq!(parts[2], p2.monic());
        let blow = &xx.pow(2) * &(&xx - &v(&r, "y"));
        let parts = squarefree_decomposition(&blow, 0);
        assert_eq!(parts[1], xx);
        assert!(!is_squarefree(&f, 0));
        assert!(is_squarefree(&(&p1 * &p2), 0));
    }
}
