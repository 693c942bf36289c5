//! Sparse multivariate polynomials over a fixed, named variable universe.
//!
//! Each value carries the set of variables it is allowed to mention;
//! binary operations require identical sets. Terms are kept in a map with
//! no zero coefficients, so equality is structural.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::rat::{rat_int, Rat};
use super::BiPoly;

/// The variable universe, in display priority order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X = 0,
    Y = 1,
    Z = 2,
    /// `λ`, printed as `l`: the squared-radius variable of level curves.
    L = 3,
    /// Stand-in for `y^2` in even/odd splits.
    U = 4,
    S = 5,
}

pub const ALL_VARS: [Var; 6] = [Var::X, Var::Y, Var::Z, Var::L, Var::U, Var::S];

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::L => "l",
            Var::U => "u",
            Var::S => "s",
        }
    }
}

/// Subset of the variable universe, fixed at construction of each `MPoly`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarSet(u8);

impl VarSet {
    pub fn of(vars: &[Var]) -> VarSet {
        let mut bits = 0u8;
        for v in vars {
            bits |= 1 << (*v as u8);
        }
        VarSet(bits)
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & (1 << (v as u8)) != 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }
}

type Mono = [u16; 6];

/// Graded lexicographic order: total degree first, then variable priority.
fn grlex(a: &Mono, b: &Mono) -> std::cmp::Ordering {
    let ta: u32 = a.iter().map(|&e| e as u32).sum();
    let tb: u32 = b.iter().map(|&e| e as u32).sum();
    ta.cmp(&tb).then_with(|| a.cmp(b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    vars: VarSet,
    terms: BTreeMap<Mono, Rat>,
}

impl MPoly {
    pub fn zero(vars: VarSet) -> Self {
        MPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: VarSet, c: Rat) -> Self {
        let mut p = MPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert([0; 6], c);
        }
        p
    }

    pub fn var(vars: VarSet, v: Var) -> Self {
        assert!(vars.contains(v), "variable outside this polynomial's set");
        let mut mono = [0u16; 6];
        mono[v as usize] = 1;
        let mut p = MPoly::zero(vars);
        p.terms.insert(mono, rat_int(1));
        p
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates `(exponents, coefficient)` pairs; exponents are indexed by
    /// `Var as usize`.
    pub fn terms(&self) -> impl Iterator<Item = (&[u16; 6], &Rat)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as u32).sum())
            .max()
    }

    pub fn degree_of(&self, v: Var) -> u16 {
        self.terms
            .keys()
            .map(|m| m[v as usize])
            .max()
            .unwrap_or(0)
    }

    fn insert_term(&mut self, mono: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        for (i, &e) in mono.iter().enumerate() {
            if e > 0 {
                debug_assert!(
                    self.vars.contains(ALL_VARS[i]),
                    "term mentions a variable outside the set"
                );
            }
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.vars, rhs.vars, "mismatched variable sets");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.vars, rhs.vars, "mismatched variable sets");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(*m, -c);
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.vars, rhs.vars, "mismatched variable sets");
        let mut out = MPoly::zero(self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mut m = *ma;
                for i in 0..6 {
                    m[i] += mb[i];
                }
                out.insert_term(m, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.vars);
        }
        MPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn square(&self) -> MPoly {
        self.mul(self)
    }

    /// Leading term under graded lex order.
    fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    /// Leading coefficient under pure lexicographic order by variable
    /// priority (`x > y > z > l > u > s`); used for sign normalization.
    pub fn lex_leading_coeff(&self) -> Option<&Rat> {
        self.terms.iter().max_by_key(|(m, _)| **m).map(|(_, c)| c)
    }

    /// Division by `rhs`, which must be exact; panics otherwise. Exactness
    /// is guaranteed at every call site by construction (Bareiss steps and
    /// factor removal).
    pub fn exact_div(&self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.vars, rhs.vars, "mismatched variable sets");
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let (dm, dc) = {
            let (m, c) = rhs.leading().unwrap();
            (*m, c.clone())
        };
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.vars);
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            let mut qm = [0u16; 6];
            for i in 0..6 {
                let Some(d) = rm[i].checked_sub(dm[i]) else {
                    panic!("non-exact multivariate division");
                };
                qm[i] = d;
            }
            let qc = &rc / &dc;
            let mut single = MPoly::zero(self.vars);
            single.insert_term(qm, qc.clone());
            quot.insert_term(qm, qc);
            rem = rem.sub(&single.mul(rhs));
        }
        quot
    }

    /// Evaluate with every variable bound to a rational value.
    pub fn eval(&self, assignment: &[(Var, Rat)]) -> Rat {
        let mut values: [Option<&Rat>; 6] = [None; 6];
        for (v, r) in assignment {
            values[*v as usize] = Some(r);
        }
        let mut acc = rat_int(0);
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for i in 0..6 {
                if m[i] > 0 {
                    let v = values[i].expect("unbound variable in evaluation");
                    for _ in 0..m[i] {
                        term *= v;
                    }
                }
            }
            acc += term;
        }
        acc
    }

    /// Replace `v` by `replacement`, producing a polynomial over
    /// `new_vars` (which must contain the remaining variables and the
    /// replacement's variables).
    pub fn substitute(&self, v: Var, replacement: &MPoly, new_vars: VarSet) -> MPoly {
        assert_eq!(replacement.vars, new_vars, "mismatched variable sets");
        let mut out = MPoly::zero(new_vars);
        for (m, c) in &self.terms {
            let mut base = MPoly::constant(new_vars, c.clone());
            let mut rest = *m;
            let power = rest[v as usize];
            rest[v as usize] = 0;
            let mut carried = MPoly::zero(new_vars);
            carried.insert_term(rest, rat_int(1));
            base = base.mul(&carried);
            for _ in 0..power {
                base = base.mul(replacement);
            }
            out = out.add(&base);
        }
        out
    }

    /// Substitute a rational value for `v`; the variable set is unchanged.
    pub fn substitute_scalar(&self, v: Var, value: &Rat) -> MPoly {
        let mut out = MPoly::zero(self.vars);
        for (m, c) in &self.terms {
            let mut rest = *m;
            let power = rest[v as usize];
            rest[v as usize] = 0;
            let mut coeff = c.clone();
            for _ in 0..power {
                coeff *= value;
            }
            out.insert_term(rest, coeff);
        }
        out
    }

    /// Reinterpret as univariate in `v`; panics if any other variable
    /// occurs.
    pub fn to_univariate(&self, v: Var) -> Poly {
        let mut coeffs = vec![rat_int(0); self.degree_of(v) as usize + 1];
        for (m, c) in &self.terms {
            for (i, &e) in m.iter().enumerate() {
                assert!(
                    e == 0 || i == v as usize,
                    "polynomial is not univariate in {}",
                    v.name()
                );
            }
            coeffs[m[v as usize] as usize] = c.clone();
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn from_univariate(p: &Poly, v: Var, vars: VarSet) -> MPoly {
        let mut out = MPoly::zero(vars);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut m = [0u16; 6];
            m[v as usize] = k as u16;
            out.insert_term(m, c.clone());
        }
        out
    }

    /// Coefficients with respect to powers of `main`, as polynomials in the
    /// remaining variables.
    pub fn coefficients_in(&self, main: Var) -> Vec<MPoly> {
        let deg = self.degree_of(main) as usize;
        let mut out = vec![MPoly::zero(self.vars); deg + 1];
        for (m, c) in &self.terms {
            let mut rest = *m;
            let k = rest[main as usize] as usize;
            rest[main as usize] = 0;
            out[k].insert_term(rest, c.clone());
        }
        out
    }

    /// Dense bivariate view with `main` as the outer variable and `sec`
    /// as the coefficient variable; panics if any other variable occurs.
    pub(crate) fn to_bipoly(&self, main: Var, sec: Var) -> BiPoly {
        let deg = self.degree_of(main) as usize;
        let mut rows = vec![vec![]; deg + 1];
        for (m, c) in &self.terms {
            for (i, &e) in m.iter().enumerate() {
                assert!(
                    e == 0 || i == main as usize || i == sec as usize,
                    "polynomial mentions a third variable"
                );
            }
            let k = m[main as usize] as usize;
            let j = m[sec as usize] as usize;
            if rows[k].len() <= j {
                rows[k].resize(j + 1, rat_int(0));
            }
            rows[k][j] = c.clone();
        }
        BiPoly::from_coeffs(rows.into_iter().map(Poly::from_coeffs).collect())
    }

    pub(crate) fn from_bipoly(b: &BiPoly, main: Var, sec: Var, vars: VarSet) -> MPoly {
        let mut out = MPoly::zero(vars);
        for (k, coeff) in b.coeffs().iter().enumerate() {
            for (j, c) in coeff.coeffs().iter().enumerate() {
                let mut m = [0u16; 6];
                m[main as usize] = k as u16;
                m[sec as usize] = j as u16;
                out.insert_term(m, c.clone());
            }
        }
        out
    }

    /// Integer-primitive form with positive leading coefficient under pure
    /// lex order: the canonical representative of `self` up to nonzero
    /// rational multiples.
    pub fn primitive_normalized(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut gcd = BigInt::zero();
        for c in self.terms.values() {
            gcd = gcd.gcd(&(c.numer() * (&lcm / c.denom())));
        }
        // scaling by lcm/gcd gives integer coefficients with content 1
        let mut scale = Rat::new(lcm, gcd);
        if self.lex_leading_coeff().unwrap().is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }
}

impl fmt::Display for MPoly {
    /// Canonical text: graded lex term order, explicit `*` between factors.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Mono, &Rat)> = self.terms.iter().collect();
        terms.sort_by(|a, b| grlex(b.0, a.0));
        let mut out = String::new();
        for (m, c) in terms {
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let a = c.abs();
            let is_const = m.iter().all(|&e| e == 0);
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || is_const {
                factors.push(a.to_string());
            }
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(ALL_VARS[i].name().to_string()),
                    _ => factors.push(format!("{}^{}", ALL_VARS[i].name(), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        write!(f, "{out}")
    }
}
