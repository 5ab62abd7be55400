//! Ideals of the maximal order of an imaginary quadratic field, class groups
//! by reduced binary quadratic forms, and the Pólya–Ostrowski group.
//!
//! Elements of `O_K` are handled in coordinates `(x, y)` meaning `x + y*w`
//! with `w = (delta + sqrt(disc))/2`, `delta = disc mod 2`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::int::{field_discriminant, is_prime_power, is_squarefree, isqrt, kronecker, primes_up_to};
use crate::arith::quad::{check_radicand, QuadElem};
use crate::error::{Error, Result};
use crate::hnf::hnf;

/// Largest |disc| for which full class-group tables are built.
pub const DISC_CAP: u64 = 1_000_000;

/// The ideal `s * (a Z + ((b + sqrt disc)/2) Z)`.
///
/// `a > 0`, `s > 0`, `b^2 = disc (mod 4a)`, `-a < b <= a`. The content `s`
/// is needed for ideals such as `p O_K` that are not primitive.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct QuadIdeal {
    s: BigInt,
    a: BigInt,
    b: BigInt,
    disc: BigInt,
}

fn delta(disc: &BigInt) -> BigInt {
    disc.mod_floor(&BigInt::from(2))
}

fn normalize_b(b: &BigInt, a: &BigInt) -> BigInt {
    let two_a = a * 2;
    let mut r = b.mod_floor(&two_a);
    if &r > a {
        r -= &two_a;
    }
    r
}

impl QuadIdeal {
    pub fn new(a: BigInt, b: BigInt, disc: BigInt) -> Result<Self> {
        Self::with_content(BigInt::one(), a, b, disc)
    }

    pub fn with_content(s: BigInt, a: BigInt, b: BigInt, disc: BigInt) -> Result<Self> {
        if !disc.is_negative() {
            return Err(Error::InvalidDomain(format!("discriminant {disc} must be negative")));
        }
        if !a.is_positive() || !s.is_positive() {
            return Err(Error::InvalidArgument(format!("ideal ({s})*({a}, {b}) needs a, s > 0")));
        }
        if !(&b * &b - &disc).mod_floor(&(&a * 4)).is_zero() {
            return Err(Error::InvalidArgument(format!("b^2 = disc (mod 4a) fails for a={a}, b={b}, disc={disc}")));
        }
        let b = normalize_b(&b, &a);
        Ok(QuadIdeal { s, a, b, disc })
    }

    pub fn unit(disc: &BigInt) -> Self {
        QuadIdeal { s: BigInt::one(), a: BigInt::one(), b: delta(disc), disc: disc.clone() }
    }

    /// The principal ideal `(n)` for a positive rational integer `n`.
    pub fn rational(n: &BigInt, disc: &BigInt) -> Self {
        QuadIdeal { s: n.abs(), ..Self::unit(disc) }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn content(&self) -> &BigInt {
        &self.s
    }
    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    /// `|O_K / I|`.
    pub fn norm(&self) -> BigInt {
        &self.s * &self.s * &self.a
    }

    pub fn is_unit(&self) -> bool {
        self.s.is_one() && self.a.is_one()
    }

    /// `Z`-basis in `(x, y)` coordinates.
    pub fn basis(&self) -> [(BigInt, BigInt); 2] {
        let d = delta(&self.disc);
        [(&self.s * &self.a, BigInt::zero()), (&self.s * ((&self.b - d) / 2), self.s.clone())]
    }

    pub fn contains(&self, x: &BigInt, y: &BigInt) -> bool {
        let [(sa, _), (bx, by)] = self.basis();
        if !y.is_multiple_of(&by) {
            return false;
        }
        let k = y / &by;
        (x - k * bx).is_multiple_of(&sa)
    }

    /// Canonical representative of `x + y*w` modulo the ideal:
    /// `0 <= y < s` and `0 <= x < s*a`.
    pub fn reduce_coords(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        let [(sa, _), (bx, by)] = self.basis();
        let k = y.div_floor(&by);
        let y = y - &k * &by;
        let x = (x - k * bx).mod_floor(&sa);
        (x, y)
    }

    /// Representatives of `O_K / I`, in the box of [`Self::reduce_coords`].
    pub fn residues(&self) -> impl Iterator<Item = (BigInt, BigInt)> {
        let sa = (&self.s * &self.a).to_u64().expect("residue box fits u64");
        let s = self.s.to_u64().unwrap();
        (0..s).flat_map(move |y| (0..sa).map(move |x| (BigInt::from(x), BigInt::from(y))))
    }

    pub fn contains_elem(&self, e: &QuadElem) -> bool {
        match to_coords(e, &self.disc) {
            Some((x, y)) => self.contains(&x, &y),
            None => false,
        }
    }

    pub fn conj(&self) -> Self {
        QuadIdeal { b: normalize_b(&-&self.b, &self.a), ..self.clone() }
    }

    /// The radicand `d` of the field.
    pub fn radicand(&self) -> BigInt {
        if self.disc.mod_floor(&BigInt::from(4)).is_zero() {
            &self.disc / 4
        } else {
            self.disc.clone()
        }
    }

    /// The element `x + y*w` as a field element.
    pub fn elem(&self, x: &BigInt, y: &BigInt) -> QuadElem {
        QuadElem::from_basis(
            BigRational::from_integer(x.clone()),
            BigRational::from_integer(y.clone()),
            &self.radicand(),
        )
    }

    /// True when the class of the ideal is trivial.
    pub fn is_principal(&self) -> bool {
        reduce(self).a.is_one()
    }

    /// A generator when principal, found by solving the norm equation
    /// `a x^2 + b x y + c y^2 = 1` on the positive definite form of the ideal.
    pub fn generator(&self) -> Option<QuadElem> {
        let a = &self.a;
        let b = &self.b;
        let c = (b * b - &self.disc) / (a * 4);
        let absd = -&self.disc;
        let four_a: BigInt = a * 4;
        let ymax = isqrt(&(&four_a / &absd));
        let mut y = BigInt::zero();
        while y <= ymax {
            for ys in signed(&y) {
                let rad: BigInt = &four_a - &absd * &ys * &ys;
                if rad.is_negative() {
                    continue;
                }
                let r = isqrt(&rad);
                if &r * &r != rad {
                    continue;
                }
                for rs in signed(&r) {
                    let num = &rs - b * &ys;
                    if !num.is_multiple_of(&(a * 2)) {
                        continue;
                    }
                    let x = num / (a * 2);
                    debug_assert_eq!(a * &x * &x + b * &x * &ys + &c * &ys * &ys, BigInt::one());
                    // x*a + y*(b + sqrt D)/2, scaled by the content
                    let [(sa, _), (bx, by)] = self.basis();
                    let gx = &x * sa + &ys * bx;
                    let gy = &ys * by;
                    return Some(self.elem(&gx, &gy));
                }
            }
            y += 1;
        }
        None
    }
}

fn signed(v: &BigInt) -> Vec<BigInt> {
    if v.is_zero() {
        vec![v.clone()]
    } else {
        vec![v.clone(), -v]
    }
}

/// Coordinates of an integral element in `{1, w}`; `None` if not integral.
pub fn to_coords(e: &QuadElem, disc: &BigInt) -> Option<(BigInt, BigInt)> {
    debug_assert_eq!(&field_discriminant(e.radicand()), disc);
    let (u, v) = e.to_basis();
    (u.is_integer() && v.is_integer()).then(|| (u.to_integer(), v.to_integer()))
}

/// `(x1 + y1 w)(x2 + y2 w)` using `w^2 = delta*w + (disc - delta)/4`.
pub fn coord_mul(p: &(BigInt, BigInt), q: &(BigInt, BigInt), disc: &BigInt) -> (BigInt, BigInt) {
    let d = delta(disc);
    let k = (disc - &d) / 4;
    let yy = &p.1 * &q.1;
    (&p.0 * &q.0 + &yy * k, &p.0 * &q.1 + &p.1 * &q.0 + yy * d)
}

/// Ideal generated over `Z` by the given `(x, y)` elements (which must span
/// an `O_K`-ideal of full rank).
fn from_generators(gens: &[(BigInt, BigInt)], disc: &BigInt) -> QuadIdeal {
    let rows: Vec<Vec<BigInt>> = gens.iter().map(|(x, y)| vec![y.clone(), x.clone()]).collect();
    let h = hnf(&rows);
    assert_eq!(h.rank(), 2, "ideal lattice must have full rank");
    let c = &h.rows[0][0];
    let bp = &h.rows[0][1];
    let aa = &h.rows[1][1];
    assert!(bp.is_multiple_of(c) && aa.is_multiple_of(c), "not an O_K-ideal");
    let a = aa / c;
    let b = bp * 2 / c + delta(disc);
    QuadIdeal::with_content(c.clone(), a, b, disc.clone()).expect("product of ideals is an ideal")
}

pub fn ideal_mul(i: &QuadIdeal, j: &QuadIdeal) -> Result<QuadIdeal> {
    if i.disc != j.disc {
        return Err(Error::FieldMismatch(format!("ideals of discriminant {} and {}", i.disc, j.disc)));
    }
    if i.is_unit() {
        return Ok(j.clone());
    }
    if j.is_unit() {
        return Ok(i.clone());
    }
    let gi = i.basis();
    let gj = j.basis();
    let gens: Vec<_> =
        gi.iter().flat_map(|u| gj.iter().map(move |v| (u, v))).map(|(u, v)| coord_mul(u, v, &i.disc)).collect();
    Ok(from_generators(&gens, &i.disc))
}

pub fn ideal_pow(i: &QuadIdeal, e: u64) -> QuadIdeal {
    let mut acc = QuadIdeal::unit(&i.disc);
    let mut base = i.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = ideal_mul(&acc, &base).unwrap();
        }
        e >>= 1;
        if e > 0 {
            base = ideal_mul(&base, &base).unwrap();
        }
    }
    acc
}

/// The reduced primitive ideal in the class of `i` (content dropped, since
/// `(s)` is principal). Uses the form `(a, -b, c)` attached to `(a, b)`.
pub fn reduce(i: &QuadIdeal) -> QuadIdeal {
    let disc = &i.disc;
    let mut fa = i.a.clone();
    let mut fb = -&i.b;
    loop {
        fb = normalize_b(&fb, &fa);
        let fc = (&fb * &fb - disc) / (&fa * 4);
        if fa > fc {
            fa = fc;
            fb = -fb;
            continue;
        }
        if fa == fc && fb.is_negative() {
            fb = -fb;
        }
        break;
    }
    QuadIdeal { s: BigInt::one(), b: normalize_b(&-fb, &fa), a: fa, disc: disc.clone() }
}

/// Splitting type of a rational prime in `O_K`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Splitting {
    Split,
    Ramified,
    Inert,
}

impl Splitting {
    pub fn of(disc: &BigInt, p: u64) -> Self {
        match kronecker(disc, p) {
            1 => Splitting::Split,
            0 => Splitting::Ramified,
            _ => Splitting::Inert,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Splitting::Split => "split",
            Splitting::Ramified => "ramified",
            Splitting::Inert => "inert",
        }
    }
}

/// The prime ideals above `p`, with their norms; split pairs ordered `b` ascending.
pub fn primes_above(p: u64, disc: &BigInt) -> Vec<(QuadIdeal, BigInt)> {
    let pb = BigInt::from(p);
    match Splitting::of(disc, p) {
        Splitting::Inert => vec![(QuadIdeal::rational(&pb, disc), &pb * &pb)],
        kind => {
            let four_p = &pb * 4;
            let mut roots: Vec<BigInt> = Vec::new();
            let mut b: BigInt = -&pb + 1;
            while b <= pb {
                if (&b * &b - disc).mod_floor(&four_p).is_zero() {
                    roots.push(b.clone());
                }
                b += 1;
            }
            let mut ideals: Vec<QuadIdeal> =
                roots.into_iter().map(|b| QuadIdeal::new(pb.clone(), b, disc.clone()).unwrap()).collect();
            ideals.sort();
            ideals.dedup();
            let expected = if kind == Splitting::Split { 2 } else { 1 };
            assert_eq!(ideals.len(), expected, "prime {p} over disc {disc}");
            ideals.into_iter().map(|i| (i, pb.clone())).collect()
        }
    }
}

/// `Pi_q`: product of the prime ideals of norm exactly `q` (unit if none).
pub fn pi_ideal(q: u64, disc: &BigInt) -> QuadIdeal {
    let mut acc = QuadIdeal::unit(disc);
    let Some((p, e)) = crate::arith::int::prime_power(q) else {
        return acc;
    };
    if e > 2 {
        return acc;
    }
    for (ideal, norm) in primes_above(p, disc) {
        if norm == BigInt::from(q) {
            acc = ideal_mul(&acc, &ideal).unwrap();
        }
    }
    acc
}

pub fn check_fundamental(disc: &BigInt) -> Result<()> {
    if !disc.is_negative() {
        return Err(Error::InvalidDomain(format!("discriminant {disc} must be negative")));
    }
    let r = disc.mod_floor(&BigInt::from(4));
    let ok = if r.is_one() {
        is_squarefree(disc)
    } else if r.is_zero() {
        let m: BigInt = disc / 4;
        let m4 = m.mod_floor(&BigInt::from(4));
        (m4 == BigInt::from(2) || m4 == BigInt::from(3)) && is_squarefree(&m)
    } else {
        false
    };
    if ok {
        Ok(())
    } else {
        Err(Error::NonFundamental(disc.clone()))
    }
}

/// Class group of a fundamental discriminant as an explicit Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroupTable {
    pub disc: BigInt,
    /// One reduced ideal per class; index 0 is the identity.
    pub reduced_forms: Vec<QuadIdeal>,
    pub table: Vec<Vec<usize>>,
    index: HashMap<(BigInt, BigInt), usize>,
}

pub fn class_group(disc: &BigInt) -> Result<ClassGroupTable> {
    check_fundamental(disc)?;
    let absd = -disc;
    if absd > BigInt::from(DISC_CAP) {
        return Err(Error::DiscriminantTooLarge { disc: disc.clone(), cap: DISC_CAP });
    }
    let absd_u = absd.to_u64().unwrap();
    let amax = ((absd_u / 3) as f64).sqrt() as u64 + 1;
    let mut forms = Vec::new();
    for a in 1..=amax {
        if 3 * a * a > absd_u {
            break;
        }
        let a_b = BigInt::from(a);
        let mut b: BigInt = -&a_b + 1;
        while b <= a_b {
            let num: BigInt = &b * &b - disc;
            if num.is_multiple_of(&(&a_b * 4)) {
                let c = &num / (&a_b * 4);
                let reduced = c >= a_b && !(b.is_negative() && c == a_b);
                if reduced && a_b.gcd(&b).gcd(&c).is_one() {
                    // form (a, b, c) is the ideal (a, -b)
                    forms.push(QuadIdeal::new(a_b.clone(), -&b, disc.clone()).unwrap());
                }
            }
            b += 1;
        }
    }
    let index: HashMap<(BigInt, BigInt), usize> =
        forms.iter().enumerate().map(|(i, f)| ((f.a.clone(), f.b.clone()), i)).collect();
    assert!(forms[0].is_unit());
    let table: Vec<Vec<usize>> = forms
        .par_iter()
        .map(|f| {
            forms
                .iter()
                .map(|g| {
                    let r = reduce(&ideal_mul(f, g).unwrap());
                    index[&(r.a.clone(), r.b.clone())]
                })
                .collect()
        })
        .collect();
    Ok(ClassGroupTable { disc: disc.clone(), reduced_forms: forms, table, index })
}

impl ClassGroupTable {
    pub fn class_number(&self) -> usize {
        self.reduced_forms.len()
    }

    pub fn class_of(&self, i: &QuadIdeal) -> usize {
        let r = reduce(i);
        self.index[&(r.a, r.b)]
    }

    pub fn order_of(&self, c: usize) -> usize {
        let mut acc = c;
        let mut n = 1;
        while acc != 0 {
            acc = self.table[acc][c];
            n += 1;
        }
        n
    }

    /// Subgroup generated by `gens`, as a sorted index set.
    pub fn closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::from([0]);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.table[x][g];
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }
}

/// The Pólya–Ostrowski group of `Q(sqrt d)` inside the class group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PogResult {
    pub d: BigInt,
    pub disc: BigInt,
    pub class_number: usize,
    /// Ramified primes and the class index of the prime above each.
    pub generators: Vec<(u64, usize)>,
    pub subgroup: BTreeSet<usize>,
    pub element_orders: BTreeMap<usize, usize>,
    pub order: usize,
    pub is_trivial: bool,
    pub is_proper: bool,
}

pub fn polya_ostrowski_group(d: &BigInt) -> Result<PogResult> {
    check_radicand(d)?;
    let disc = field_discriminant(d);
    let group = class_group(&disc)?;
    pog_with_table(d, &group)
}

pub fn pog_with_table(d: &BigInt, group: &ClassGroupTable) -> Result<PogResult> {
    let disc = group.disc.clone();
    let absd = (-&disc).to_u64().unwrap();
    let ramified: Vec<u64> = crate::arith::int::factor(absd).into_iter().map(|(p, _)| p).collect();
    let generators: Vec<(u64, usize)> = ramified
        .iter()
        .map(|&p| {
            let (ideal, _) = primes_above(p, &disc).remove(0);
            (p, group.class_of(&ideal))
        })
        .collect();
    let gen_idx: Vec<usize> = generators.iter().map(|g| g.1).collect();
    let subgroup = group.closure(&gen_idx);

    // Second generating set: the classes of Pi_q over prime powers q.
    let bound = ramified.iter().copied().max().unwrap_or(2).max(50);
    let pi_classes: Vec<usize> =
        (2..=bound).filter(|&q| is_prime_power(q)).map(|q| group.class_of(&pi_ideal(q, &disc))).collect();
    let via_pi = group.closure(&pi_classes);
    if via_pi != subgroup {
        return Err(Error::Internal(format!(
            "POG generating sets disagree for d = {d}: ramified {subgroup:?} vs Pi_q {via_pi:?}"
        )));
    }
    let element_orders = subgroup.iter().map(|&c| (c, group.order_of(c))).collect();
    let order = subgroup.len();
    Ok(PogResult {
        d: d.clone(),
        disc,
        class_number: group.class_number(),
        generators,
        order,
        is_trivial: order == 1,
        is_proper: order < group.class_number(),
        subgroup,
        element_orders,
    })
}

/// Rational primes up to `bound` grouped by splitting type.
pub fn splitting_types(disc: &BigInt, bound: u64) -> Vec<(u64, Splitting)> {
    primes_up_to(bound).into_iter().map(|p| (p, Splitting::of(disc, p))).collect()
}

impl fmt::Display for QuadIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = if self.a.is_one() {
            "(1)".to_string()
        } else {
            format!("({}, ({}+sqrt({}))/2)", self.a, self.b, self.disc)
        };
        if self.s.is_one() {
            write!(f, "{body}")
        } else if self.a.is_one() {
            write!(f, "({})", self.s)
        } else {
            write!(f, "{}*{body}", self.s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    /// Oracle: principal iff some element of the ideal has norm N(I).
    fn principal_by_search(i: &QuadIdeal) -> bool {
        let n = i.norm();
        let bound = 4 * n.to_i64().unwrap() + 4;
        let lim = (bound as f64).sqrt() as i64 + 2;
        for y in -lim..=lim {
            for x in -2 * lim..=2 * lim {
                let (x, y) = (big(x), big(y));
                if !i.contains(&x, &y) {
                    continue;
                }
                let e = i.elem(&x, &y);
                if e.norm() == BigRational::from_integer(n.clone()) {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn products_at_disc_minus_20() {
        let disc = big(-20);
        let p2 = &primes_above(2, &disc)[0].0;
        assert_eq!(p2.a(), &big(2));
        let sq = ideal_mul(p2, p2).unwrap();
        assert_eq!(sq, QuadIdeal::rational(&big(2), &disc));
        let p3 = primes_above(3, &disc);
        assert_eq!(p3.len(), 2);
        let prod = ideal_mul(&p3[0].0, &p3[1].0).unwrap();
        assert_eq!(prod, QuadIdeal::rational(&big(3), &disc));
        assert_eq!(ideal_mul(p2, &QuadIdeal::unit(&disc)).unwrap(), *p2);
        assert!(ideal_mul(p2, &QuadIdeal::unit(&big(-4))).is_err());
    }

    #[test]
    fn reduction_at_disc_minus_20() {
        let disc = big(-20);
        let p2 = QuadIdeal::new(big(2), big(2), disc.clone()).unwrap();
        let r = reduce(&p2);
        assert_eq!(r.a(), &big(2));
        assert!(!p2.is_principal());
        assert!(p2.generator().is_none());
        // b^2 = -20 (mod 16) has no solution, so p2^2 is stored as 2 * (1)
        assert!(QuadIdeal::new(big(4), big(2), disc.clone()).is_err());
        let sq = ideal_mul(&p2, &p2).unwrap();
        assert!(sq.is_principal() && principal_by_search(&sq));
        assert_eq!(reduce(&sq).a(), &big(1));
        let unit = QuadIdeal::unit(&disc);
        assert_eq!(reduce(&unit), unit);
    }

    #[test]
    fn class_numbers() {
        assert_eq!(class_group(&big(-20)).unwrap().class_number(), 2);
        assert_eq!(class_group(&big(-4)).unwrap().class_number(), 1);
        assert_eq!(class_group(&big(-116)).unwrap().class_number(), 6);
        assert_eq!(class_group(&big(-23)).unwrap().class_number(), 3);
        assert!(matches!(class_group(&big(-16)), Err(Error::NonFundamental(_))));
        assert!(matches!(class_group(&big(-12)), Err(Error::NonFundamental(_))));
    }

    #[test]
    fn pog_examples() {
        let r = polya_ostrowski_group(&big(-5)).unwrap();
        assert_eq!(r.order, 2);
        let r = polya_ostrowski_group(&big(-29)).unwrap();
        assert_eq!((r.order, r.class_number, r.is_proper), (2, 6, true));
        for d in [-1, -2, -3, -7] {
            assert!(polya_ostrowski_group(&big(d)).unwrap().is_trivial);
        }
    }

    #[test]
    fn group_table_axioms() {
        for d in [-5i64, -6, -14, -17, -21, -23, -26, -29, -30, -47, -71] {
            let g = class_group(&field_discriminant(&big(d))).unwrap();
            let h = g.class_number();
            for x in 0..h {
                assert_eq!(g.table[0][x], x);
                assert!((0..h).any(|y| g.table[x][y] == 0));
                for y in 0..h {
                    assert_eq!(g.table[x][y], g.table[y][x]);
                    for z in 0..h {
                        assert_eq!(g.table[g.table[x][y]][z], g.table[x][g.table[y][z]]);
                    }
                }
            }
        }
    }

    #[test]
    fn reduction_matches_norm_search() {
        for d in [-5i64, -6, -10, -13, -14, -15, -23, -29] {
            let disc = field_discriminant(&big(d));
            let mut ideals = Vec::new();
            for p in primes_up_to(13) {
                ideals.extend(primes_above(p, &disc).into_iter().map(|x| x.0));
            }
            for i in &ideals {
                for j in &ideals {
                    let prod = ideal_mul(i, j).unwrap();
                    assert_eq!(prod.norm(), i.norm() * j.norm());
                    assert_eq!(prod.is_principal(), principal_by_search(&prod), "{prod} d={d}");
                    if let Some(g) = prod.generator() {
                        assert!(prod.contains_elem(&g));
                        assert_eq!(g.norm(), BigRational::from_integer(prod.norm()));
                    }
                }
            }
        }
    }

    #[test]
    fn norms_by_residue_count() {
        for d in [-1i64, -5, -3, -29] {
            let disc = field_discriminant(&big(d));
            for p in primes_up_to(11) {
                for (ideal, norm) in primes_above(p, &disc) {
                    let n = norm.to_i64().unwrap();
                    // I contains n*O_K, so exactly n^2 / N(I) points of the n x n box lie in I.
                    let count = (0..n)
                        .flat_map(|x| (0..n).map(move |y| (x, y)))
                        .filter(|&(x, y)| ideal.contains(&big(x), &big(y)))
                        .count() as i64;
                    assert_eq!(count * n, n * n, "{ideal}");
                }
            }
        }
    }

    #[test]
    fn unramified_pi_is_principal() {
        for d in [-5i64, -29, -14] {
            let disc = field_discriminant(&big(d));
            for p in primes_up_to(40) {
                if Splitting::of(&disc, p) == Splitting::Ramified {
                    continue;
                }
                let q = if Splitting::of(&disc, p) == Splitting::Split { p } else { p * p };
                let pi = pi_ideal(q, &disc);
                assert_eq!(pi, QuadIdeal::rational(&big(p as i64), &disc));
                assert!(pi.is_principal());
            }
        }
    }

    proptest! {
        #[test]
        fn reduce_is_class_invariant(pi in 0usize..6, pj in 0usize..6, x in -6i64..6, y in -6i64..6) {
            prop_assume!(x != 0 || y != 0);
            let disc = big(-116);
            let mut ideals = Vec::new();
            for p in [2u64, 3, 5, 7, 11, 29] {
                ideals.extend(primes_above(p, &disc).into_iter().map(|x| x.0));
            }
            let i = ideal_mul(&ideals[pi % ideals.len()], &ideals[pj % ideals.len()]).unwrap();
            let (x, y) = (big(x), big(y));
            let principal = from_generators(
                &[(x.clone(), y.clone()), coord_mul(&(x, y), &(big(0), big(1)), &disc)],
                &disc,
            );
            let r = reduce(&i);
            prop_assert_eq!(reduce(&r), r.clone());
            prop_assert_eq!(reduce(&ideal_mul(&i, &principal).unwrap()), r);
        }
    }
}
