use std::cmp::Ordering;
use std::fmt;

/// A monomial `x^a`, stored as a sparse exponent vector.
///
/// Entries are sorted by variable index and never carry a zero exponent, so
/// structural equality is monomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(index: usize) -> Self {
        Monomial {
            exps: vec![(index, 1)],
        }
    }

    /// Builds a monomial from a dense exponent vector.
    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial {
            exps: exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i, e))
                .collect(),
        }
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order;
    /// repeated variables accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut exps: Vec<(usize, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_unstable_by_key(|&(v, _)| v);
        let mut out: Vec<(usize, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        Monomial { exps: out }
    }

    /// Squarefree monomial on a variable bitmask.
    pub fn from_mask(mask: u64) -> Self {
        Monomial {
            exps: (0..64)
                .filter(|&i| mask & (1u64 << i) != 0)
                .map(|i| (i, 1))
                .collect(),
        }
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps
            .binary_search_by_key(&var, |&(v, _)| v)
            .map(|k| self.exps[k].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// One past the largest variable index present.
    pub fn num_vars_used(&self) -> usize {
        self.exps.last().map_or(0, |&(v, _)| v + 1)
    }

    pub fn to_dense(&self, nvars: usize) -> Vec<u32> {
        let mut out = vec![0; nvars.max(self.num_vars_used())];
        for &(v, e) in &self.exps {
            out[v] = e;
        }
        out
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    /// Support as a bitmask; variables must have index < 64.
    pub fn support_mask(&self) -> u64 {
        self.exps.iter().fold(0u64, |acc, &(v, _)| {
            assert!(v < 64, "variable index {v} exceeds bitmask width");
            acc | (1u64 << v)
        })
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    pub fn squarefree_part(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(v, _)| (v, 1)).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < v {
                j += 1;
            }
            match other.exps.get(j) {
                Some(&(w, f)) if w == v && f >= e => j += 1,
                _ => return false,
            }
        }
        true
    }

    fn merge(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let (v, e) = match (a.get(i), b.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        i += 1;
                        (va, f(ea, 0))
                    }
                    Ordering::Greater => {
                        j += 1;
                        (vb, f(0, eb))
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (va, f(ea, eb))
                    }
                },
                (Some(&(va, ea)), None) => {
                    i += 1;
                    (va, f(ea, 0))
                }
                (None, Some(&(vb, eb))) => {
                    j += 1;
                    (vb, f(0, eb))
                }
                (None, None) => unreachable!(),
            };
            if e > 0 {
                out.push((v, e));
            }
        }
        Monomial { exps: out }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a + b)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::min)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(self.merge(other, |a, b| a - b))
    }

    /// Sets every variable rejected by `keep` to 1.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .copied()
                .filter(|&(v, _)| keep(v))
                .collect(),
        }
    }

    /// Renders with the given variable names (`x^2*y`, `1` for the unit).
    pub fn format_with(&self, names: &[String]) -> String {
        if self.exps.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|&(v, e)| {
                let name = names
                    .get(v)
                    .cloned()
                    .unwrap_or_else(|| format!("x{}", v + 1));
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        parts.join("*")
    }

    /// Orders by total degree first, then lexicographically with `x1 > x2 > ...`.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| lex_cmp(self, other))
    }

    /// Canonical position of a generator inside an ideal: lower degree first,
    /// lex-larger first within a degree, so `(x^2, x*y, y^2)`.
    pub fn generator_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| lex_cmp(other, self))
    }
}

fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let (a, b) = (&a.exps, &b.exps);
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                // a has a positive exponent on an earlier variable.
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grlex_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&[]))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
