use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{AffineOutcome, Matrix};
use super::scalar::{is_perfect_square, Field, Scalar};
use super::subspace::EchelonBasis;
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients low degree first, trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn from_coeffs(field: Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Poly {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn constant(field: Field, c: Scalar) -> Poly {
        Poly::from_coeffs(field, vec![c])
    }

    pub fn x(field: Field) -> Poly {
        Poly::from_coeffs(field, vec![field.zero(), field.one()])
    }

    /// `x - r`
    pub fn linear_root(field: Field, r: &Scalar) -> Poly {
        Poly::from_coeffs(field, vec![field.neg(r), field.one()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| f.add(&self.coeff(k), &other.coeff(k))).collect();
        Poly::from_coeffs(f, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| f.sub(&self.coeff(k), &other.coeff(k))).collect();
        Poly::from_coeffs(f, coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut coeffs = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(&coeffs[i + j], &f.mul(a, b));
            }
        }
        Poly::from_coeffs(f, coeffs)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let f = self.field;
        Poly::from_coeffs(f, self.coeffs.iter().map(|a| f.mul(c, a)).collect())
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::constant(self.field, self.field.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn make_monic(&self) -> Poly {
        let lead = self.leading().expect("monic form of the zero polynomial");
        let inv = self.field.inv(lead).expect("leading coefficient is nonzero");
        self.scale(&inv)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let f = self.field;
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = f.inv(divisor.leading().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let c = f.mul(&rem[rem.len() - 1], &lead_inv);
            if !c.is_zero() {
                quot[k] = c.clone();
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    let idx = k + i;
                    rem[idx] = f.sub(&rem[idx], &f.mul(&c, b));
                }
            }
            rem.pop();
        }
        (Poly::from_coeffs(f, quot), Poly::from_coeffs(f, rem))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.div_rem(self).1.is_zero()
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.make_monic()
        }
    }

    /// Extended gcd: returns `(g, u, v)` monic with `u*self + v*other = g`.
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (Poly::constant(f, f.one()), Poly::zero(f));
        let (mut v0, mut v1) = (Poly::zero(f), Poly::constant(f, f.one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let u = u0.sub(&q.mul(&u1));
            let v = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
            v0 = v1;
            v1 = v;
        }
        if r0.is_zero() {
            return (r0, u0, v0);
        }
        let lead_inv = f.inv(r0.leading().unwrap()).unwrap();
        let c = Scalar::clone(&lead_inv);
        (r0.scale(&c), u0.scale(&c), v0.scale(&c))
    }

    pub fn eval(&self, at: &Scalar) -> Scalar {
        let f = self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, at), c);
        }
        acc
    }

    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        let f = self.field;
        let n = a.rows();
        let mut acc = Matrix::zeros(f, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a);
            for i in 0..n {
                acc.set(i, i, f.add(acc.get(i, i), c));
            }
        }
        acc
    }

    /// `p(x + c)`
    pub fn shift(&self, c: &Scalar) -> Poly {
        let f = self.field;
        let xc = Poly::from_coeffs(f, vec![c.clone(), f.one()]);
        let mut acc = Poly::zero(f);
        for coeff in self.coeffs.iter().rev() {
            acc = acc.mul(&xc).add(&Poly::constant(f, coeff.clone()));
        }
        acc
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = self.field;
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = f.render(c);
            let t = match k {
                0 => cs,
                1 if c.is_one() => var.to_string(),
                1 => format!("{cs}*{var}"),
                _ if c.is_one() => format!("{var}^{k}"),
                _ => format!("{cs}*{var}^{k}"),
            };
            terms.push(t);
        }
        terms.join(" + ")
    }
}

/// Minimal polynomial of a square matrix: the first linear dependency among
/// the vectorized powers `I, A, A^2, ...`.
pub fn minpoly(a: &Matrix) -> Poly {
    assert_eq!(a.rows(), a.cols(), "minimal polynomial of a square matrix");
    let f = a.field();
    let n = a.rows();
    if n == 0 {
        return Poly::from_coeffs(f, vec![f.one()]);
    }
    let mut powers: Vec<Matrix> = vec![Matrix::identity(f, n)];
    let mut span = EchelonBasis::new(f, n * n);
    span.insert(powers[0].to_vec_coords());
    loop {
        let next = powers.last().unwrap().mul(a);
        if span.insert(next.to_vec_coords()) {
            powers.push(next);
            continue;
        }
        // next = sum of previous powers; solve for the coordinates
        let d = powers.len();
        let cols = Matrix::from_rows(f, powers.iter().map(|p| p.to_vec_coords()).collect())
            .transpose();
        match cols.solve_affine(&next.to_vec_coords()).expect("shape ok") {
            AffineOutcome::Solution { particular, .. } => {
                let mut coeffs: Vec<Scalar> = particular.iter().map(|c| f.neg(c)).collect();
                coeffs.push(f.one());
                debug_assert_eq!(coeffs.len(), d + 1);
                return Poly::from_coeffs(f, coeffs);
            }
            AffineOutcome::Inconsistent(_) => unreachable!("dependency was detected"),
        }
    }
}

/// Minimal polynomial of a matrix, split into monic irreducible factors with
/// multiplicities.
pub fn minpoly_split(a: &Matrix) -> Result<Vec<(Poly, u32)>> {
    factor(&minpoly(a))
}

/// Factor a nonzero polynomial into monic irreducibles with multiplicities,
/// sorted by (degree, coefficient order). Over GF(p) factors are found by
/// brute-force root and divisor enumeration; over the rationals the degree of
/// any irreducible non-linear factor is limited to 4 (rational root search
/// plus the quartic resolvent), with `Unsupported` beyond that.
pub fn factor(p: &Poly) -> Result<Vec<(Poly, u32)>> {
    if p.is_zero() {
        return Err(Error::Unsupported("factorization of the zero polynomial".into()));
    }
    let f = p.field;
    let mut g = p.make_monic();
    let mut out: Vec<(Poly, u32)> = Vec::new();
    while g.degree() != Some(0) {
        let fac = irreducible_factor(&g)?;
        let mut mult = 0u32;
        loop {
            let (q, r) = g.div_rem(&fac);
            if !r.is_zero() {
                break;
            }
            g = q;
            mult += 1;
        }
        debug_assert!(mult > 0);
        out.push((fac, mult));
    }
    out.sort_by(|(a, _), (b, _)| {
        a.coeffs
            .len()
            .cmp(&b.coeffs.len())
            .then_with(|| {
                for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
                    let c = f.cmp(x, y);
                    if c != std::cmp::Ordering::Equal {
                        return c;
                    }
                }
                std::cmp::Ordering::Equal
            })
    });
    Ok(out)
}

fn irreducible_factor(g: &Poly) -> Result<Poly> {
    match g.field {
        Field::Prime(p) => irreducible_factor_gf(g, p),
        Field::Rationals => irreducible_factor_q(g),
    }
}

fn irreducible_factor_gf(g: &Poly, p: u64) -> Result<Poly> {
    let f = g.field;
    let deg = g.degree().unwrap();
    if deg == 1 {
        return Ok(g.clone());
    }
    for r in 0..p {
        let r = Scalar::Fp(r);
        if g.eval(&r).is_zero() {
            return Ok(Poly::linear_root(f, &r));
        }
    }
    // no roots: scan monic divisors of increasing degree; the first hit of
    // minimal degree is irreducible
    for k in 2..=deg / 2 {
        let count = (p as u128).pow(k as u32);
        if count > 2_000_000 {
            return Err(Error::Unsupported(format!(
                "divisor enumeration of degree {k} over GF({p})"
            )));
        }
        let mut idx = vec![0u64; k];
        loop {
            let mut coeffs: Vec<Scalar> = idx.iter().map(|&v| Scalar::Fp(v)).collect();
            coeffs.push(f.one());
            let cand = Poly::from_coeffs(f, coeffs);
            if cand.divides(g) {
                return Ok(cand);
            }
            // odometer over GF(p)^k
            let mut pos = 0;
            loop {
                if pos == k {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < p {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == k {
                break;
            }
        }
    }
    Ok(g.clone())
}

fn bigint_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs();
    if n.is_zero() {
        return Err(Error::Unsupported("divisors of zero".into()));
    }
    let limit = BigInt::from(1_000_000_000_000u64);
    if n > limit {
        return Err(Error::Unsupported("rational root search bound exceeded".into()));
    }
    let n: u64 = n.to_string().parse().unwrap();
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            out.push(BigInt::from(n / d));
        }
        d += 1;
    }
    Ok(out)
}

/// All rational roots of a polynomial over Q.
fn rational_roots(g: &Poly) -> Result<Vec<BigRational>> {
    let f = g.field;
    debug_assert_eq!(f, Field::Rationals);
    // clear denominators, strip content
    let mut den_lcm = BigInt::one();
    for c in &g.coeffs {
        den_lcm = den_lcm.lcm(c.rat().denom());
    }
    let ints: Vec<BigInt> = g
        .coeffs
        .iter()
        .map(|c| (c.rat() * BigRational::from_integer(den_lcm.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    let mut shifted = ints.clone();
    // roots at zero
    let mut zero_mult = 0;
    while shifted.first().is_some_and(|c| c.is_zero()) && shifted.len() > 1 {
        shifted.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push(BigRational::zero());
    }
    if shifted.len() <= 1 {
        return Ok(roots);
    }
    let a0 = shifted.first().unwrap().clone();
    let an = shifted.last().unwrap().clone();
    let ps = bigint_divisors(&a0)?;
    let qs = bigint_divisors(&an)?;
    for p in &ps {
        for q in &qs {
            for sign in [1i64, -1] {
                let cand = BigRational::new(p * BigInt::from(sign), q.clone());
                if g.eval(&Scalar::Rat(cand.clone())).is_zero() && !roots.contains(&cand) {
                    roots.push(cand.clone());
                }
            }
        }
    }
    Ok(roots)
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    let n = is_perfect_square(x.numer())?;
    let d = is_perfect_square(x.denom())?;
    Some(BigRational::new(n, d))
}

fn irreducible_factor_q(g: &Poly) -> Result<Poly> {
    let f = g.field;
    let deg = g.degree().unwrap();
    if deg == 1 {
        return Ok(g.clone());
    }
    let roots = rational_roots(g)?;
    if let Some(r) = roots.first() {
        return Ok(Poly::linear_root(f, &Scalar::Rat(r.clone())));
    }
    match deg {
        2 | 3 => Ok(g.clone()), // no rational root and degree <= 3: irreducible
        4 => match quartic_quadratic_factor(g)? {
            Some(q) => Ok(q),
            None => Ok(g.clone()),
        },
        _ => Err(Error::Unsupported(format!(
            "factorization over Q beyond degree 4 (got degree {deg})"
        ))),
    }
}

/// Search for a monic quadratic factor of a monic quartic over Q with no
/// rational roots, via the resolvent cubic of the depressed quartic.
fn quartic_quadratic_factor(g: &Poly) -> Result<Option<Poly>> {
    let f = g.field;
    let four = f.from_i64(4);
    let shift = f.div(&f.neg(&g.coeff(3)), &four);
    let dep = g.shift(&shift); // y^4 + P y^2 + Q y + R
    debug_assert!(dep.coeff(3).is_zero());
    let pp = dep.coeff(2);
    let qq = dep.coeff(1);
    let rr = dep.coeff(0);
    let half = f.parse("1/2").unwrap();

    let assemble = |a: &Scalar, b: &Scalar| -> Poly {
        // (y^2 + a y + b) translated back by y = x - shift
        let quad = Poly::from_coeffs(f, vec![b.clone(), a.clone(), f.one()]);
        quad.shift(&f.neg(&shift))
    };

    if qq.is_zero() {
        // (y^2 + b)(y^2 + d): b + d = P, b d = R
        let disc = f.sub(&f.mul(&pp, &pp), &f.mul(&four, &rr));
        if let Some(t) = rational_sqrt(disc.rat()) {
            let b = f.mul(&half, &f.sub(&pp, &Scalar::Rat(t)));
            return Ok(Some(assemble(&f.zero(), &b)));
        }
        // (y^2 + a y + b)(y^2 - a y + b): b^2 = R, a^2 = 2b - P
        if let Some(sb) = rational_sqrt(rr.rat()) {
            for b in [Scalar::Rat(sb.clone()), f.neg(&Scalar::Rat(sb))] {
                let a2 = f.sub(&f.add(&b, &b), &pp);
                if let Some(a) = rational_sqrt(a2.rat()) {
                    return Ok(Some(assemble(&Scalar::Rat(a), &b)));
                }
            }
        }
        return Ok(None);
    }

    // resolvent cubic z^3 + 2P z^2 + (P^2 - 4R) z - Q^2 in z = a^2
    let resolvent = Poly::from_coeffs(
        f,
        vec![
            f.neg(&f.mul(&qq, &qq)),
            f.sub(&f.mul(&pp, &pp), &f.mul(&four, &rr)),
            f.add(&pp, &pp),
            f.one(),
        ],
    );
    for z in rational_roots(&resolvent)? {
        if z.is_zero() {
            continue;
        }
        if let Some(a) = rational_sqrt(&z) {
            let a = Scalar::Rat(a);
            // d - b = Q/a, d + b = P + a^2
            let sum = f.add(&pp, &f.mul(&a, &a));
            let diff = f.div(&qq, &a);
            let b = f.mul(&half, &f.sub(&sum, &diff));
            let d = f.mul(&half, &f.add(&sum, &diff));
            let left = Poly::from_coeffs(f, vec![b.clone(), a.clone(), f.one()]);
            let right = Poly::from_coeffs(f, vec![d, f.neg(&a), f.one()]);
            if left.mul(&right) == dep {
                return Ok(Some(assemble(&a, &b)));
            }
        }
    }
    Ok(None)
}
