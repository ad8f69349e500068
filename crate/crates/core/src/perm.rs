//! Permutations of `{1..n}` in one-line notation, fixed-point-free
//! involutions, lengths and heights, and enumeration of the vertex set.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("not a permutation of 1..={0}: {1:?}")]
    NotAPermutation(usize, Vec<usize>),
    #[error("not an involution: {0}")]
    NotInvolution(String),
    #[error("has a fixed point at {0}")]
    FixedPoint(usize),
    #[error("degree must be even and >= 2, got {0}")]
    BadDegree(usize),
    #[error("simple index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("cannot parse {0:?} as one-line notation")]
    Parse(String),
    #[error("inversion count {0} has unexpected parity for degree {1}")]
    HeightParity(usize, usize),
}

/// A permutation of `{1..n}` in one-line notation: `image[i-1] = w(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn from_one_line(image: Vec<usize>) -> Result<Self, PermError> {
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for &v in &image {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotAPermutation(n, image));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (1..=n).collect() }
    }

    /// The adjacent transposition `s_i = (i, i+1)`, for `1 <= i <= n-1`.
    pub fn simple(n: usize, i: usize) -> Result<Self, PermError> {
        if i == 0 || i + 1 > n {
            return Err(PermError::IndexOutOfRange(i, n.saturating_sub(1)));
        }
        let mut image: Vec<usize> = (1..=n).collect();
        image.swap(i - 1, i);
        Ok(Permutation { image })
    }

    /// The order-reversing permutation `w_0 = [n, n-1, ..., 1]`.
    pub fn longest_element(n: usize) -> Self {
        Permutation { image: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// `w(i)`, with 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// `(a b)(i) = a(b(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.n() != other.n() {
            return Err(PermError::SizeMismatch(self.n(), other.n()));
        }
        let image = (1..=self.n()).map(|i| self.apply(other.apply(i))).collect();
        Ok(Permutation { image })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.n()];
        for (k, &v) in self.image.iter().enumerate() {
            image[v - 1] = k + 1;
        }
        Permutation { image }
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.image[i] > self.image[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Conjugate by the transposition `(a, b)`: swaps `a, b` both as
    /// positions and as values.
    pub fn conj_transposition(&self, a: usize, b: usize) -> Permutation {
        let swap = |v: usize| {
            if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            }
        };
        let image = (1..=self.n()).map(|i| swap(self.apply(swap(i)))).collect();
        Permutation { image }
    }

    /// Parses one-line notation: either concatenated digits (`"2143"`,
    /// only valid when every value is a single digit) or comma-separated
    /// (`"2,1,4,3"`).
    pub fn parse(s: &str) -> Result<Permutation, PermError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PermError::Parse(s.to_owned()));
        }
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|part| part.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| PermError::Parse(s.to_owned()))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or(()))
                .collect::<Result<_, _>>()
                .map_err(|_| PermError::Parse(s.to_owned()))?
        };
        Permutation::from_one_line(values)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &v in &self.image {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.image.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// A reflection `(i, j)` with `1 <= i < j <= n`, i.e. the transposition
/// swapping `i` and `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Reflection {
    pub i: usize,
    pub j: usize,
}

impl Reflection {
    pub fn new(i: usize, j: usize) -> Result<Self, PermError> {
        if i == 0 || i >= j {
            return Err(PermError::Parse(format!("({i},{j}) is not a reflection")));
        }
        Ok(Reflection { i, j })
    }

    /// All `n(n-1)/2` reflections of `S_n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Reflection> {
        let mut out = Vec::with_capacity(n * (n - 1) / 2);
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(Reflection { i, j });
            }
        }
        out
    }
}

/// A fixed-point-free involution of `S_n` (even `n`): the vertex set.
///
/// The height is cached at construction: `ht(z) = floor(len(z) / 2)`.
/// The inversion count of a fixed-point-free involution is congruent to
/// `n/2 mod 2`, so height differences always match half the length
/// difference; construction fails loudly if the parity is off.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpfInvolution {
    perm: Permutation,
    height: usize,
}

impl FpfInvolution {
    pub fn new(perm: Permutation) -> Result<Self, PermError> {
        let n = perm.n();
        if n < 2 || n % 2 != 0 {
            return Err(PermError::BadDegree(n));
        }
        for i in 1..=n {
            let v = perm.apply(i);
            if v == i {
                return Err(PermError::FixedPoint(i));
            }
            if perm.apply(v) != i {
                return Err(PermError::NotInvolution(perm.to_string()));
            }
        }
        let len = perm.length();
        if len % 2 != (n / 2) % 2 {
            return Err(PermError::HeightParity(len, n));
        }
        let height = len / 2;
        Ok(FpfInvolution { perm, height })
    }

    pub fn parse(s: &str) -> Result<Self, PermError> {
        FpfInvolution::new(Permutation::parse(s)?)
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm.apply(i)
    }

    /// Half the inversion count, rounded down: the grading of the vertex set.
    pub fn height(&self) -> usize {
        self.height
    }

    /// `s_i z s_i`.
    pub fn conj_simple(&self, i: usize) -> Result<FpfInvolution, PermError> {
        if i == 0 || i >= self.n() {
            return Err(PermError::IndexOutOfRange(i, self.n() - 1));
        }
        Ok(self.conj_transposition_unchecked(i, i + 1))
    }

    /// `r z r` for a reflection `r = (i, j)`.
    pub fn conj_reflection(&self, r: Reflection) -> Result<FpfInvolution, PermError> {
        if r.j > self.n() {
            return Err(PermError::IndexOutOfRange(r.j, self.n()));
        }
        Ok(self.conj_transposition_unchecked(r.i, r.j))
    }

    fn conj_transposition_unchecked(&self, a: usize, b: usize) -> FpfInvolution {
        let perm = self.perm.conj_transposition(a, b);
        FpfInvolution::new(perm).expect("conjugation preserves fixed-point-freeness")
    }

    /// Conjugate by an arbitrary permutation: `g z g^{-1}`.
    pub fn conj_by(&self, g: &Permutation) -> Result<FpfInvolution, PermError> {
        if g.n() != self.n() {
            return Err(PermError::SizeMismatch(g.n(), self.n()));
        }
        let mut image = vec![0; self.n()];
        for i in 1..=self.n() {
            image[g.apply(i) - 1] = g.apply(self.apply(i));
        }
        FpfInvolution::new(Permutation { image })
    }
}

impl fmt::Display for FpfInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.perm.fmt(f)
    }
}

impl fmt::Debug for FpfInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fpf({})", self.perm)
    }
}

/// `(n-1)!! = (n-1)(n-3)...1`; the count of fixed-point-free involutions
/// of `S_n`. By convention `(-1)!! = 1!! = 1`.
pub fn double_factorial_below(n: usize) -> usize {
    let mut acc = 1usize;
    let mut k = n.saturating_sub(1);
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// All fixed-point-free involutions of `S_n`, in canonical order:
/// sorted by `(height, one-line notation)`.
pub fn enumerate_fpf(n: usize) -> Result<Vec<FpfInvolution>, PermError> {
    if n < 2 || n % 2 != 0 {
        return Err(PermError::BadDegree(n));
    }
    let mut out = Vec::with_capacity(double_factorial_below(n));
    let mut image = vec![0usize; n];
    pair_up(&mut image, &mut out);
    out.sort_by(|a, b| {
        (a.height, a.perm.one_line()).cmp(&(b.height, b.perm.one_line()))
    });
    Ok(out)
}

fn pair_up(image: &mut Vec<usize>, out: &mut Vec<FpfInvolution>) {
    let first = match image.iter().position(|&v| v == 0) {
        None => {
            let perm = Permutation { image: image.clone() };
            out.push(FpfInvolution::new(perm).expect("pairing yields an FPF involution"));
            return;
        }
        Some(pos) => pos,
    };
    for partner in first + 1..image.len() {
        if image[partner] == 0 {
            image[first] = partner + 1;
            image[partner] = first + 1;
            pair_up(image, out);
            image[first] = 0;
            image[partner] = 0;
        }
    }
}

/// The minimal vertex `x_1 = s_1 s_3 ... s_{n-1} = 2143...`
pub fn minimal_fpf(n: usize) -> Result<FpfInvolution, PermError> {
    if n < 2 || n % 2 != 0 {
        return Err(PermError::BadDegree(n));
    }
    let image = (1..=n).map(|i| if i % 2 == 1 { i + 1 } else { i - 1 }).collect();
    FpfInvolution::new(Permutation { image })
}

/// `w_0` viewed as a fixed-point-free involution (even `n`).
pub fn longest_fpf(n: usize) -> Result<FpfInvolution, PermError> {
    if n < 2 || n % 2 != 0 {
        return Err(PermError::BadDegree(n));
    }
    FpfInvolution::new(Permutation::longest_element(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    fn fpf(s: &str) -> FpfInvolution {
        FpfInvolution::parse(s).unwrap()
    }

    #[test]
    fn compose_identity_and_involution() {
        let id = Permutation::identity(4);
        assert_eq!(id.compose(&perm("3412")).unwrap(), perm("3412"));
        assert_eq!(perm("2143").compose(&perm("2143")).unwrap(), Permutation::identity(4));
    }

    #[test]
    fn compose_conjugation_matches_cycle_relabeling() {
        // s_2 (12)(34) s_2 = (13)(24), by relabeling 2 <-> 3 in the cycles.
        let s2 = perm("1324");
        let inner = perm("2143").compose(&s2).unwrap();
        assert_eq!(s2.compose(&inner).unwrap(), perm("3412"));
    }

    #[test]
    fn compose_size_mismatch() {
        assert_eq!(
            Permutation::identity(4).compose(&Permutation::identity(6)),
            Err(PermError::SizeMismatch(4, 6))
        );
    }

    #[test]
    fn length_counts_inversions() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(perm("4321").length(), 6);
        assert_eq!(perm("3412").length(), 4);
        assert_eq!(perm("214365").length(), 3);
    }

    #[test]
    fn heights() {
        assert_eq!(fpf("2143").height(), 1);
        assert_eq!(fpf("4321").height(), 3);
        // n = 6: inversion counts are odd; the grading rounds down.
        assert_eq!(fpf("214365").height(), 1);
        assert_eq!(fpf("654321").height(), 7);
    }

    #[test]
    fn conj_simple_cases() {
        assert_eq!(fpf("2143").conj_simple(2).unwrap(), fpf("3412"));
        assert_eq!(fpf("2143").conj_simple(1).unwrap(), fpf("2143"));
        assert_eq!(fpf("3412").conj_simple(2).unwrap(), fpf("2143"));
        assert!(fpf("2143").conj_simple(4).is_err());
        assert!(fpf("2143").conj_simple(0).is_err());
    }

    #[test]
    fn conj_reflection_cases() {
        let r12 = Reflection::new(1, 2).unwrap();
        let r13 = Reflection::new(1, 3).unwrap();
        assert_eq!(fpf("2143").conj_reflection(r12).unwrap(), fpf("2143"));
        assert_eq!(fpf("2143").conj_reflection(r13).unwrap(), fpf("4321"));
        // r^2 = 1.
        let z = fpf("3412");
        assert_eq!(z.conj_reflection(r13).unwrap().conj_reflection(r13).unwrap(), z);
    }

    #[test]
    fn conj_simple_is_involution_everywhere() {
        for z in enumerate_fpf(6).unwrap() {
            for i in 1..6 {
                let back = z.conj_simple(i).unwrap().conj_simple(i).unwrap();
                assert_eq!(back, z);
            }
        }
    }

    #[test]
    fn scaled_set_condition_height_steps() {
        // |ht(szs) - ht(z)| <= 1 for every simple conjugation.
        for n in [2usize, 4, 6, 8] {
            for z in enumerate_fpf(n).unwrap() {
                for i in 1..n {
                    let w = z.conj_simple(i).unwrap();
                    let dh = w.height() as isize - z.height() as isize;
                    assert!(dh.abs() <= 1, "n={n} z={z} i={i} dh={dh}");
                }
            }
        }
    }

    #[test]
    fn enumerate_counts_and_invariants() {
        assert_eq!(enumerate_fpf(2).unwrap().len(), 1);
        let f4 = enumerate_fpf(4).unwrap();
        assert_eq!(
            f4.iter().map(|z| z.to_string()).collect::<Vec<_>>(),
            ["2143", "3412", "4321"]
        );
        assert_eq!(f4.iter().map(|z| z.height()).collect::<Vec<_>>(), [1, 2, 3]);
        assert_eq!(enumerate_fpf(6).unwrap().len(), 15);
        assert_eq!(enumerate_fpf(8).unwrap().len(), 105);
        assert_eq!(double_factorial_below(10), 945);
        assert!(enumerate_fpf(5).is_err());
        assert!(enumerate_fpf(0).is_err());
    }

    #[test]
    fn minimal_is_unique_minimum() {
        for n in [2usize, 4, 6, 8] {
            let all = enumerate_fpf(n).unwrap();
            let min = minimal_fpf(n).unwrap();
            assert_eq!(all[0], min);
            assert!(all[1..].iter().all(|z| z.height() > min.height()));
        }
        assert_eq!(minimal_fpf(6).unwrap(), fpf("214365"));
    }

    #[test]
    fn longest_element_is_maximum() {
        assert_eq!(Permutation::longest_element(4), perm("4321"));
        for n in [2usize, 4, 6] {
            let all = enumerate_fpf(n).unwrap();
            let w0 = longest_fpf(n).unwrap();
            assert_eq!(all.last().unwrap(), &w0);
        }
    }

    #[test]
    fn w0_conjugation_preserves_height() {
        for n in [4usize, 6] {
            let w0 = Permutation::longest_element(n);
            for z in enumerate_fpf(n).unwrap() {
                assert_eq!(z.conj_by(&w0).unwrap().height(), z.height());
            }
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        assert_eq!(perm("2,1,4,3"), perm("2143"));
        assert!(Permutation::parse("22").is_err());
        assert!(Permutation::parse("").is_err());
        assert!(FpfInvolution::parse("1234").is_err());
        assert!(FpfInvolution::parse("321").is_err());
        let long = Permutation::parse("2,1,4,3,6,5,8,7,10,9").unwrap();
        assert_eq!(long.to_string(), "2,1,4,3,6,5,8,7,10,9");
    }

    #[test]
    fn fpf_rejects_fixed_points_and_non_involutions() {
        assert_eq!(
            FpfInvolution::new(Permutation::identity(4)).unwrap_err(),
            PermError::FixedPoint(1)
        );
        assert!(matches!(
            FpfInvolution::new(perm("2341")).unwrap_err(),
            PermError::NotInvolution(_)
        ));
    }
}
