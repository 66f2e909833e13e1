//! Exact permutation arithmetic on `{1..n}`.
//!
//! Points are 1-based in every public signature and in the text format.
//! Products follow the right-to-left convention: `a.compose(&b)` applies
//! `b` first, then `a`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Largest supported degree; images are stored as `u8`.
pub const MAX_DEGREE: usize = 255;

/// A bijection of `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // zero-based: image[i] is the image of point i + 1, minus one
    image: Box<[u8]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_even(self) -> bool {
        self == Parity::Even
    }
}

impl Mul for Parity {
    type Output = Parity;

    fn mul(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Disjoint-orbit form of a permutation, fixed points omitted.
///
/// Canonical: each orbit starts at its minimum point and orbits are sorted
/// by that minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    pub degree: usize,
    pub cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn to_permutation(&self) -> Result<Permutation> {
        let cycles: Vec<&[usize]> = self.cycles.iter().map(Vec::as_slice).collect();
        Permutation::from_cycles(self.degree, &cycles)
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DEGREE {
        Err(Error::InvalidDegree(n))
    } else {
        Ok(())
    }
}

impl Permutation {
    /// Identity of degree `n`.
    ///
    /// Panics if `n` is 0 or exceeds [`MAX_DEGREE`].
    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n), "degree {n} out of range");
        Permutation {
            image: (0..n).map(|i| i as u8).collect(),
        }
    }

    /// Builds from 1-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        check_degree(n)?;
        let mut seen = vec![false; n];
        let mut image = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n {
                return Err(Error::NotBijection(format!("image {x} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::NotBijection(format!("image {x} repeated")));
            }
            image.push((x - 1) as u8);
        }
        Ok(Permutation {
            image: image.into_boxed_slice(),
        })
    }

    /// Builds from zero-based images without validation.
    pub(crate) fn from_raw(image: Vec<u8>) -> Self {
        debug_assert!(is_bijection(&image));
        Permutation {
            image: image.into_boxed_slice(),
        }
    }

    /// Product of the given cycles (1-based points).
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        check_degree(n)?;
        let mut image: Vec<u8> = (0..n).map(|i| i as u8).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            if cycle.len() < 2 {
                return Err(Error::Domain(format!(
                    "cycle {cycle:?} must contain at least two points"
                )));
            }
            for &p in cycle.iter() {
                if p == 0 || p > n {
                    return Err(Error::Domain(format!("point {p} outside 1..={n}")));
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(Error::Domain(format!("repeated point {p}")));
                }
            }
            for (i, &p) in cycle.iter().enumerate() {
                let q = cycle[(i + 1) % cycle.len()];
                image[p - 1] = (q - 1) as u8;
            }
        }
        Ok(Permutation {
            image: image.into_boxed_slice(),
        })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.image[x - 1] as usize + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|&x| x as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other.image.iter().map(|&x| self.image[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation {
            image: inv.into_boxed_slice(),
        }
    }

    /// `self⁻¹ ∘ other` without materializing the inverse.
    pub(crate) fn left_divide(&self, other: &Permutation) -> Permutation {
        let mut inv = [0u8; MAX_DEGREE + 1];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation {
            image: other.image.iter().map(|&x| inv[x as usize]).collect(),
        }
    }

    /// Number of orbits, fixed points included.
    pub fn orbit_count(&self) -> usize {
        let n = self.degree();
        let mut seen = [false; MAX_DEGREE + 1];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image[x] as usize;
            }
        }
        count
    }

    pub fn parity(&self) -> Parity {
        if (self.degree() - self.orbit_count()) % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.image[start] as usize == start {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                orbit.push(x + 1);
                x = self.image[x] as usize;
            }
            cycles.push(orbit);
        }
        CycleDecomposition { degree: n, cycles }
    }

    /// Orbit lengths ≥ 2, sorted in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycle_decomposition().cycles.iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// True iff exactly one orbit has length ≥ 2.
    pub fn is_cycle(&self) -> bool {
        let img = &self.image;
        let mut moved = 0usize;
        let mut first = usize::MAX;
        for (i, &x) in img.iter().enumerate() {
            if x as usize != i {
                moved += 1;
                if first == usize::MAX {
                    first = i;
                }
            }
        }
        if moved < 2 {
            return false;
        }
        let mut len = 1;
        let mut x = img[first] as usize;
        while x != first {
            len += 1;
            x = img[x] as usize;
        }
        len == moved
    }

    /// Length of the single nontrivial orbit, if this is a cycle.
    pub fn cycle_length(&self) -> Option<usize> {
        if self.is_cycle() {
            Some(self.moved_count())
        } else {
            None
        }
    }

    pub fn moved_count(&self) -> usize {
        self.image.iter().enumerate().filter(|&(i, &x)| x as usize != i).count()
    }

    /// Moved points, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.image
            .iter()
            .enumerate()
            .filter(|&(i, &x)| x as usize != i)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Permutation> {
        if self.degree() != g.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: g.degree(),
            });
        }
        Ok(self.conjugate_unchecked(g))
    }

    pub(crate) fn conjugate_unchecked(&self, g: &Permutation) -> Permutation {
        // (g a g⁻¹)(g(x)) = g(a(x))
        let mut image = vec![0u8; self.degree()];
        for (x, &ax) in self.image.iter().enumerate() {
            image[g.image[x] as usize] = g.image[ax as usize];
        }
        Permutation {
            image: image.into_boxed_slice(),
        }
    }

    /// Acts as `self` on `{1..m}` and as `other` shifted by `m` on the rest.
    pub fn direct_sum(&self, other: &Permutation) -> Result<Permutation> {
        let m = self.degree();
        check_degree(m + other.degree())?;
        let mut image = Vec::with_capacity(m + other.degree());
        image.extend_from_slice(&self.image);
        image.extend(other.image.iter().map(|&x| x + m as u8));
        Ok(Permutation {
            image: image.into_boxed_slice(),
        })
    }

    /// The permutation of `{1..2n}` whose matrix (row `i` has its one in
    /// column `σ(i)`) is the block matrix `[[0, W], [I, 0]]`: point `i ≤ n`
    /// goes to `n + w(i)` and point `n + i` goes back to `i`.
    pub fn half_swap(&self) -> Result<Permutation> {
        let n = self.degree();
        check_degree(2 * n)?;
        let mut image = Vec::with_capacity(2 * n);
        image.extend(self.image.iter().map(|&x| x + n as u8));
        image.extend((0..n).map(|i| i as u8));
        Ok(Permutation {
            image: image.into_boxed_slice(),
        })
    }

    /// Same permutation viewed in `Sym(new_degree)`, fixing the new points.
    pub fn extend(&self, new_degree: usize) -> Result<Permutation> {
        if new_degree < self.degree() {
            return Err(Error::Domain(format!(
                "cannot extend degree {} down to {new_degree}",
                self.degree()
            )));
        }
        check_degree(new_degree)?;
        let mut image = self.image.to_vec();
        image.extend((self.degree()..new_degree).map(|i| i as u8));
        Ok(Permutation {
            image: image.into_boxed_slice(),
        })
    }

    /// Canonical cycle notation; the identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let bytes: Vec<u8> = self.text_bytes().collect();
        String::from_utf8(bytes).expect("ascii")
    }

    fn text_bytes(&self) -> TextBytes<'_> {
        TextBytes {
            img: &self.image,
            seen: [0; 4],
            scan: 0,
            orbit: None,
            buf: [0; 4],
            len: 0,
            idx: 0,
            emitted: false,
            done: false,
        }
    }

    /// Compares canonical cycle-notation strings without allocating.
    pub fn text_cmp(&self, other: &Permutation) -> Ordering {
        self.text_bytes().cmp(other.text_bytes())
    }
}

fn is_bijection(image: &[u8]) -> bool {
    let mut seen = vec![false; image.len()];
    image
        .iter()
        .all(|&x| (x as usize) < image.len() && !std::mem::replace(&mut seen[x as usize], true))
}

/// Lazily produces the bytes of the canonical cycle notation.
struct TextBytes<'a> {
    img: &'a [u8],
    seen: [u64; 4],
    scan: usize,
    // (orbit start, current point)
    orbit: Option<(usize, usize)>,
    buf: [u8; 4],
    len: u8,
    idx: u8,
    emitted: bool,
    done: bool,
}

impl TextBytes<'_> {
    fn mark(&mut self, p: usize) {
        self.seen[p / 64] |= 1 << (p % 64);
    }

    fn is_seen(&self, p: usize) -> bool {
        self.seen[p / 64] >> (p % 64) & 1 == 1
    }

    fn load(&mut self, prefix: u8, point: usize) {
        let v = point + 1;
        self.buf[0] = prefix;
        let mut len = 1;
        if v >= 100 {
            self.buf[len] = b'0' + (v / 100) as u8;
            len += 1;
        }
        if v >= 10 {
            self.buf[len] = b'0' + (v / 10 % 10) as u8;
            len += 1;
        }
        self.buf[len] = b'0' + (v % 10) as u8;
        self.len = len as u8 + 1;
        self.idx = 0;
    }
}

impl Iterator for TextBytes<'_> {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        if self.idx < self.len {
            self.idx += 1;
            return Some(self.buf[self.idx as usize - 1]);
        }
        if self.done {
            return None;
        }
        match self.orbit {
            None => {
                while self.scan < self.img.len()
                    && (self.is_seen(self.scan) || self.img[self.scan] as usize == self.scan)
                {
                    self.scan += 1;
                }
                if self.scan == self.img.len() {
                    self.done = true;
                    if !self.emitted {
                        self.buf[0] = b'(';
                        self.buf[1] = b')';
                        self.len = 2;
                        self.idx = 1;
                        return Some(b'(');
                    }
                    return None;
                }
                let start = self.scan;
                self.mark(start);
                self.orbit = Some((start, start));
                self.emitted = true;
                self.load(b'(', start);
            }
            Some((start, cur)) => {
                let next = self.img[cur] as usize;
                if next == start {
                    self.orbit = None;
                    self.buf[0] = b')';
                    self.len = 1;
                    self.idx = 0;
                } else {
                    self.mark(next);
                    self.orbit = Some((start, next));
                    self.load(b',', next);
                }
            }
        }
        self.idx = 1;
        Some(self.buf[0])
    }
}

impl Ord for Permutation {
    /// Degree first, then canonical text order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.text_cmp(other))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.text_bytes() {
            fmt::Write::write_char(f, b as char)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[n={}]", self, self.degree())
    }
}

/// `&a * &b` is `a ∘ b`. Panics on degree mismatch.
impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("degree mismatch in permutation product")
    }
}

/// Parses cycle notation such as `(1,2,3)(4,5)` or `()` into `Sym(n)`.
///
/// Whitespace is ignored. Cycles need not be canonical, but every cycle
/// must have at least two points and no point may repeat.
pub fn parse_cycles(text: &str, n: usize) -> Result<Permutation> {
    check_degree(n)?;
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::parse(text, "empty permutation text"));
    }
    if compact == "()" {
        return Ok(Permutation::identity(n));
    }
    let bytes = compact.as_bytes();
    let mut image: Vec<u8> = (0..n).map(|i| i as u8).collect();
    let mut used = vec![false; n];
    let mut pos = 0;
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(Error::parse(&compact[pos..], "expected `(`"));
        }
        let close = match compact[pos..].find(')') {
            Some(off) => pos + off,
            None => return Err(Error::parse(&compact[pos..], "unclosed cycle")),
        };
        let body = &compact[pos + 1..close];
        let cycle_text = &compact[pos..=close];
        if body.is_empty() {
            return Err(Error::parse(cycle_text, "empty cycle inside a product"));
        }
        let mut points = Vec::new();
        for tok in body.split(',') {
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(cycle_text, format!("malformed point `{tok}`")));
            }
            let p: usize = tok.parse().map_err(|_| Error::parse(tok, "point does not fit"))?;
            if p == 0 || p > n {
                return Err(Error::parse(tok, format!("point {p} outside 1..={n}")));
            }
            if std::mem::replace(&mut used[p - 1], true) {
                return Err(Error::parse(tok, format!("repeated point {p}")));
            }
            points.push(p - 1);
        }
        if points.len() < 2 {
            return Err(Error::parse(cycle_text, "a cycle needs at least two points"));
        }
        for (i, &p) in points.iter().enumerate() {
            image[p] = points[(i + 1) % points.len()] as u8;
        }
        pos = close + 1;
    }
    Ok(Permutation::from_raw(image))
}

/// Canonical cycle notation of `a`.
pub fn format_cycles(a: &Permutation) -> String {
    a.to_cycle_string()
}
