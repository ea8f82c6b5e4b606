//! Static affine Cartan data for the six classical quantum affine families:
//! Cartan matrices, marks, comarks, and weight arithmetic.
//!
//! All data is exact integer/rational arithmetic. The matrices and label
//! vectors are embedded constants; [`AffineType::validate_tables`] checks the
//! defining kernel equations `A·a = 0` and `Aᵀ·a∨ = 0` so a typo in the
//! tables cannot survive the test suite.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::CoreError;

/// The six classical affine families handled by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// A_n^(1), n >= 1
    A1,
    /// B_n^(1), n >= 3
    B1,
    /// C_n^(1), n >= 2
    C1,
    /// A_{2n-1}^(2), n >= 3
    A2Odd,
    /// A_{2n}^(2), n >= 1
    A2Even,
    /// D_{n+1}^(2), n >= 2
    D2,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::A1,
        Family::B1,
        Family::C1,
        Family::A2Odd,
        Family::A2Even,
        Family::D2,
    ];

    pub fn min_rank(self) -> u8 {
        match self {
            Family::A1 | Family::A2Even => 1,
            Family::C1 | Family::D2 => 2,
            Family::B1 | Family::A2Odd => 3,
        }
    }
}

/// One affine type: a family together with its rank `n`.
///
/// The index set is `I = {0, 1, ..., n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineType {
    family: Family,
    rank: u8,
}

impl AffineType {
    pub fn new(family: Family, rank: u8) -> Result<Self, CoreError> {
        if rank < family.min_rank() {
            return Err(CoreError::InvalidRank {
                family: format!("{family:?}"),
                rank,
                min: family.min_rank(),
            });
        }
        Ok(AffineType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The rank `n`; colors run over `0..=n`.
    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn num_colors(&self) -> usize {
        self.rank as usize + 1
    }

    /// The affine generalized Cartan matrix `(a_ij)` with rows/columns `0..=n`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank as usize;
        let m = n + 1;
        let mut a = vec![vec![0i64; m]; m];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize, ij: i64, ji: i64| {
            a[i][j] = ij;
            a[j][i] = ji;
        };
        match self.family {
            Family::A1 => {
                if n == 1 {
                    link(&mut a, 0, 1, -2, -2);
                } else {
                    for i in 0..n {
                        link(&mut a, i, i + 1, -1, -1);
                    }
                    link(&mut a, n, 0, -1, -1);
                }
            }
            Family::B1 => {
                // 0 and 1 both attached to 2; chain 2..n-1; double bond at the n end.
                link(&mut a, 0, 2, -1, -1);
                link(&mut a, 1, 2, -1, -1);
                for i in 2..n - 1 {
                    link(&mut a, i, i + 1, -1, -1);
                }
                link(&mut a, n - 1, n, -1, -2);
            }
            Family::C1 => {
                link(&mut a, 0, 1, -1, -2);
                for i in 1..n - 1 {
                    link(&mut a, i, i + 1, -1, -1);
                }
                link(&mut a, n - 1, n, -2, -1);
            }
            Family::A2Odd => {
                link(&mut a, 0, 2, -1, -1);
                link(&mut a, 1, 2, -1, -1);
                for i in 2..n - 1 {
                    link(&mut a, i, i + 1, -1, -1);
                }
                link(&mut a, n - 1, n, -2, -1);
            }
            Family::A2Even => {
                if n == 1 {
                    link(&mut a, 0, 1, -4, -1);
                } else {
                    link(&mut a, 0, 1, -2, -1);
                    for i in 1..n - 1 {
                        link(&mut a, i, i + 1, -1, -1);
                    }
                    link(&mut a, n - 1, n, -2, -1);
                }
            }
            Family::D2 => {
                link(&mut a, 0, 1, -2, -1);
                for i in 1..n - 1 {
                    link(&mut a, i, i + 1, -1, -1);
                }
                link(&mut a, n - 1, n, -1, -2);
            }
        }
        a
    }

    /// Marks `a_i`: coefficients of the null root, `δ = Σ a_i α_i`.
    pub fn marks(&self) -> Vec<i64> {
        let n = self.rank as usize;
        match self.family {
            Family::A1 => vec![1; n + 1],
            Family::B1 => {
                let mut v = vec![2; n + 1];
                v[0] = 1;
                v[1] = 1;
                v
            }
            Family::C1 => {
                let mut v = vec![2; n + 1];
                v[0] = 1;
                v[n] = 1;
                v
            }
            Family::A2Odd => {
                let mut v = vec![2; n + 1];
                v[0] = 1;
                v[1] = 1;
                v[n] = 1;
                v
            }
            Family::A2Even => {
                let mut v = vec![2; n + 1];
                v[n] = 1;
                v
            }
            Family::D2 => vec![1; n + 1],
        }
    }

    /// Comarks `a_i^∨`: coefficients of the canonical central element,
    /// `c = Σ a_i^∨ h_i`.
    pub fn comarks(&self) -> Vec<i64> {
        let n = self.rank as usize;
        match self.family {
            Family::A1 => vec![1; n + 1],
            Family::B1 => {
                let mut v = vec![2; n + 1];
                v[0] = 1;
                v[1] = 1;
                v[n] = 1;
                v
            }
            Family::C1 => vec![1; n + 1],
            Family::A2Odd => {
                let mut v = vec![2; n + 1];
                v[0] = 1;
                v[1] = 1;
                v
            }
            Family::A2Even => {
                let mut v = vec![2; n + 1];
                v[0] = 1;
                v
            }
            Family::D2 => {
                let mut v = vec![2; n + 1];
                v[0] = 1;
                v[n] = 1;
                v
            }
        }
    }

    /// `d_0`: the coefficient of `α_0` in the null root.
    pub fn d0(&self) -> i64 {
        self.marks()[0]
    }

    /// Checks the kernel equations for the embedded tables. Returns an error
    /// describing the first failed identity, if any.
    pub fn validate_tables(&self) -> Result<(), String> {
        let a = self.cartan_matrix();
        let marks = self.marks();
        let comarks = self.comarks();
        let m = self.num_colors();
        for i in 0..m {
            let s: i64 = (0..m).map(|j| a[i][j] * marks[j]).sum();
            if s != 0 {
                return Err(format!("{self}: (A·marks)[{i}] = {s} != 0"));
            }
            let t: i64 = (0..m).map(|j| a[j][i] * comarks[j]).sum();
            if t != 0 {
                return Err(format!("{self}: (Aᵀ·comarks)[{i}] = {t} != 0"));
            }
        }
        for v in [&marks, &comarks] {
            if v.iter().any(|&x| x <= 0) {
                return Err(format!("{self}: nonpositive label"));
            }
            let g = v.iter().fold(0i64, |acc, &x| gcd(acc, x));
            if g != 1 {
                return Err(format!("{self}: labels not coprime"));
            }
        }
        Ok(())
    }

    /// `⟨c, λ⟩ = Σ a_i^∨ λ_i`: the level of a classical weight.
    pub fn level(&self, lambda: &ClassicalWeight) -> i64 {
        self.comarks()
            .iter()
            .zip(lambda.coeffs())
            .map(|(c, x)| c * x)
            .sum()
    }

    /// Classical projection of the simple root `α_j`: column `j` of the
    /// Cartan matrix in the Λ basis.
    pub fn classical_root(&self, j: u8) -> ClassicalWeight {
        let a = self.cartan_matrix();
        let m = self.num_colors();
        ClassicalWeight::new((0..m).map(|i| a[i][j as usize]).collect())
    }

    /// All dominant classical weights of the given level, in lexicographic
    /// order of their coefficient tuples.
    pub fn dominant_weights(&self, level: i64) -> Vec<ClassicalWeight> {
        let comarks = self.comarks();
        let m = self.num_colors();
        let mut out = Vec::new();
        let mut cur = vec![0i64; m];
        fn rec(
            comarks: &[i64],
            idx: usize,
            remaining: i64,
            cur: &mut Vec<i64>,
            out: &mut Vec<ClassicalWeight>,
        ) {
            if idx == comarks.len() {
                if remaining == 0 {
                    out.push(ClassicalWeight::new(cur.clone()));
                }
                return;
            }
            let mut k = 0;
            while k * comarks[idx] <= remaining {
                cur[idx] = k;
                rec(comarks, idx + 1, remaining - k * comarks[idx], cur, out);
                k += 1;
            }
            cur[idx] = 0;
        }
        rec(&comarks, 0, level, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rank as u16;
        match self.family {
            Family::A1 => write!(f, "A1:{n}"),
            Family::B1 => write!(f, "B1:{n}"),
            Family::C1 => write!(f, "C1:{n}"),
            Family::A2Odd => write!(f, "A2:{}", 2 * n - 1),
            Family::A2Even => write!(f, "A2:{}", 2 * n),
            Family::D2 => write!(f, "D2:{}", n + 1),
        }
    }
}

impl FromStr for AffineType {
    type Err = CoreError;

    /// Parses the CLI/JSON syntax: `A1:n`, `B1:n`, `C1:n`, `A2:m` (m odd for
    /// A_{2n-1}^(2), even for A_{2n}^(2)), `D2:m` (m = n+1).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CoreError::ParseType(s.to_string());
        let (fam, num) = s.split_once(':').ok_or_else(bad)?;
        let m: u16 = num.trim().parse().map_err(|_| bad())?;
        let (family, rank) = match fam.trim() {
            "A1" => (Family::A1, m),
            "B1" => (Family::B1, m),
            "C1" => (Family::C1, m),
            "A2" => {
                if m % 2 == 1 {
                    (Family::A2Odd, (m + 1) / 2)
                } else {
                    (Family::A2Even, m / 2)
                }
            }
            "D2" => {
                if m < 1 {
                    return Err(bad());
                }
                (Family::D2, m - 1)
            }
            _ => return Err(bad()),
        };
        if rank == 0 || rank > 200 {
            return Err(bad());
        }
        AffineType::new(family, rank as u8)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// An element of the classical weight lattice `P̄ = ⊕ ZΛ_i`, stored as the
/// coefficient vector over `Λ_0..Λ_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassicalWeight(Vec<i64>);

impl ClassicalWeight {
    pub fn new(coeffs: Vec<i64>) -> Self {
        ClassicalWeight(coeffs)
    }

    pub fn zero(num_colors: usize) -> Self {
        ClassicalWeight(vec![0; num_colors])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, i: u8) -> i64 {
        self.0[i as usize]
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &ClassicalWeight) -> ClassicalWeight {
        ClassicalWeight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &ClassicalWeight) -> ClassicalWeight {
        ClassicalWeight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Comma-separated coefficients, the CLI weight syntax.
    pub fn to_compact(&self) -> String {
        self.0
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse_compact(s: &str, num_colors: usize) -> Result<Self, CoreError> {
        let coeffs: Result<Vec<i64>, _> = s.split(',').map(|p| p.trim().parse()).collect();
        let coeffs = coeffs.map_err(|_| CoreError::ParseWeight(s.to_string()))?;
        if coeffs.len() != num_colors {
            return Err(CoreError::ParseWeight(format!(
                "{s}: expected {num_colors} coefficients"
            )));
        }
        Ok(ClassicalWeight(coeffs))
    }
}

impl fmt::Display for ClassicalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c > 0 { "+" } else { "-" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let a = c.abs();
            if a == 1 {
                write!(f, "L{i}")?;
            } else {
                write!(f, "{a}L{i}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// An exact rational with small components; used only for the δ-coefficient
/// of affine weights (denominator divides 2·d_0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rat {
    num: i64,
    den: i64,
}

impl Rat {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let s = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Rat {
            num: s * num / g,
            den: s * den / g,
        }
    }

    pub fn zero() -> Self {
        Rat { num: 0, den: 1 }
    }

    pub fn int(n: i64) -> Self {
        Rat { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn add(self, o: Rat) -> Rat {
        Rat::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }

    pub fn sub(self, o: Rat) -> Rat {
        Rat::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// An affine weight `Σ c_i Λ_i + (r)·δ` with `r` an exact rational whose
/// denominator divides `2·d_0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineWeight {
    pub classical: ClassicalWeight,
    pub delta: Rat,
}

impl AffineWeight {
    pub fn from_classical(w: ClassicalWeight) -> Self {
        AffineWeight {
            classical: w,
            delta: Rat::zero(),
        }
    }

    /// The classical projection `cl`, dropping the δ-part.
    pub fn cl(&self) -> &ClassicalWeight {
        &self.classical
    }

    /// `self − α_j` as an affine weight: subtracts column j of the Cartan
    /// matrix from the Λ-part and, for j = 0, subtracts `1/d_0` from the
    /// δ-part.
    pub fn sub_simple_root(&self, t: &AffineType, j: u8) -> AffineWeight {
        AffineWeight {
            classical: self.classical.sub(&t.classical_root(j)),
            delta: if j == 0 {
                self.delta.sub(Rat::new(1, t.d0()))
            } else {
                self.delta
            },
        }
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.classical)?;
        if self.delta != Rat::zero() {
            write!(f, " + ({})d", self.delta)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> AffineType {
        s.parse().unwrap()
    }

    /// Independent oracle: brute-force the positive coprime kernel vector of
    /// an integer matrix by scanning small coefficient tuples.
    fn kernel_oracle(a: &[Vec<i64>]) -> Vec<i64> {
        let m = a.len();
        let mut best: Option<Vec<i64>> = None;
        let mut cur = vec![1i64; m];
        loop {
            let ok = (0..m).all(|i| (0..m).map(|j| a[i][j] * cur[j]).sum::<i64>() == 0);
            if ok {
                best = Some(cur.clone());
                break;
            }
            // odometer over 1..=4 per slot
            let mut i = 0;
            loop {
                if i == m {
                    return best.unwrap_or_default();
                }
                cur[i] += 1;
                if cur[i] <= 4 {
                    break;
                }
                cur[i] = 1;
                i += 1;
            }
        }
        best.unwrap()
    }

    #[test]
    fn a1_rank1_matrix() {
        assert_eq!(t("A1:1").cartan_matrix(), vec![vec![2, -2], vec![-2, 2]]);
    }

    #[test]
    fn kernel_equations_hold_for_all_grid_types() {
        for s in ["A1:1", "A1:2", "A1:4", "B1:3", "B1:4", "C1:2", "C1:3", "A2:5", "A2:7", "A2:2", "A2:4", "D2:3", "D2:4"] {
            t(s).validate_tables().unwrap();
        }
    }

    #[test]
    fn b3_marks_match_kernel_oracle() {
        let ty = t("B1:3");
        assert_eq!(ty.marks(), kernel_oracle(&ty.cartan_matrix()));
        assert_eq!(ty.marks(), vec![1, 1, 2, 2]);
    }

    #[test]
    fn comarks_match_transposed_kernel_oracle() {
        for s in ["B1:3", "C1:2", "A2:5", "A2:2", "D2:3"] {
            let ty = t(s);
            let a = ty.cartan_matrix();
            let m = a.len();
            let at: Vec<Vec<i64>> = (0..m).map(|i| (0..m).map(|j| a[j][i]).collect()).collect();
            assert_eq!(ty.comarks(), kernel_oracle(&at), "{s}");
        }
    }

    #[test]
    fn d0_values() {
        assert_eq!(t("B1:3").d0(), 1);
        assert_eq!(t("A2:2").d0(), 2);
        assert_eq!(t("A1:2").d0(), 1);
    }

    #[test]
    fn levels() {
        let b3 = t("B1:3");
        let l3 = ClassicalWeight::new(vec![3, 0, 0, 0]);
        assert_eq!(b3.level(&l3), 3);
        let w = ClassicalWeight::new(vec![0, 0, 0, 1]);
        assert_eq!(b3.level(&w), 1);
        assert_eq!(b3.level(&ClassicalWeight::zero(4)), 0);
    }

    #[test]
    fn classical_roots_have_level_zero() {
        for s in ["A1:1", "A1:2", "B1:3", "C1:2", "A2:5", "A2:2", "D2:3"] {
            let ty = t(s);
            for j in 0..ty.num_colors() as u8 {
                assert_eq!(ty.level(&ty.classical_root(j)), 0, "{s} j={j}");
            }
        }
    }

    #[test]
    fn a1_root_zero() {
        let ty = t("A1:1");
        assert_eq!(ty.classical_root(0), ClassicalWeight::new(vec![2, -2]));
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["A1:2", "B1:3", "C1:2", "A2:5", "A2:4", "D2:3"] {
            assert_eq!(t(s).to_string(), s);
        }
        assert!("X9:3".parse::<AffineType>().is_err());
        assert!("B1:1".parse::<AffineType>().is_err());
    }

    #[test]
    fn dominant_weight_enumeration() {
        let b3 = t("B1:3");
        // level 1: comarks (1,1,2,1) -> Λ0, Λ1, Λ3
        let doms = b3.dominant_weights(1);
        assert_eq!(doms.len(), 3);
        for d in &doms {
            assert_eq!(b3.level(d), 1);
        }
    }

    #[test]
    fn rational_arithmetic() {
        let a = Rat::new(1, 2);
        let b = Rat::new(1, 2);
        assert_eq!(a.add(b), Rat::int(1));
        assert_eq!(Rat::new(2, 4), Rat::new(1, 2));
        assert_eq!(a.sub(b), Rat::zero());
    }
}
