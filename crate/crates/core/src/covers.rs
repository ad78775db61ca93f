//! Degree-3 coverings `X → E` and the Galois closure `X̄ → E`.
//!
//! A rational place of `E` is an A-, B-, B′-, C- or C′-point according to
//! whether in `X` it splits completely, splits as `e=1 + e=2`, splits as one
//! rational place and one place of degree 2, is totally ramified, or is
//! inert. In `X̄` (group S₃) these become:
//!
//! | type | places of `X̄` over it            | contribution to `deg D̄` |
//! |------|-----------------------------------|--------------------------|
//! | A    | 6 rational                        | 0                        |
//! | B    | 3 rational, `e = 2`               | 3                        |
//! | B′   | 3 of degree 2                     | 0                        |
//! | C    | 2 rational, `e = 3` (q ≡ 1 mod 3) | 4                        |
//! | C′   | 2 of degree 3                     | 0                        |
//!
//! The B and C rules hold verbatim for places of higher degree, which is how
//! the ramification not accounted for by rational places is distributed.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoversError {
    #[error("the C-point rule needs q = 1 mod 3, got q = {0}")]
    UnsupportedField(u64),
    #[error("Hurwitz gives a different of negative degree {0}")]
    NegativeDifferent(i64),
}

/// Degree of the different of a degree-`n` separable covering `X → E`.
pub fn different_degree(n: i64, g_x: u64, g_e: u64) -> i64 {
    (2 * g_x as i64 - 2) - n * (2 * g_e as i64 - 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SplittingProfile {
    pub a: u64,
    pub b: u64,
    #[serde(rename = "b'")]
    pub b_prime: u64,
    pub c: u64,
    #[serde(rename = "c'")]
    pub c_prime: u64,
}

impl SplittingProfile {
    /// Rational places of `X`.
    pub fn points_on_cover(&self) -> u64 {
        3 * self.a + 2 * self.b + self.b_prime + self.c
    }

    /// Rational places of `E`.
    pub fn points_on_base(&self) -> u64 {
        self.a + self.b + self.b_prime + self.c + self.c_prime
    }

    /// Contribution of the rational places to `deg D`.
    pub fn rational_different(&self) -> u64 {
        self.b + 2 * self.c
    }

    /// Rational places of the Galois closure.
    pub fn closure_points(&self) -> u64 {
        6 * self.a + 3 * self.b + 2 * self.c
    }
}

impl fmt::Display for SplittingProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.a, self.b, self.b_prime, self.c, self.c_prime)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PartKind {
    B,
    C,
}

/// A ramified place of `E` of degree at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Part {
    pub kind: PartKind,
    pub degree: u64,
}

impl Part {
    /// Contribution to `deg D`.
    pub fn weight(&self) -> u64 {
        match self.kind {
            PartKind::B => self.degree,
            PartKind::C => 2 * self.degree,
        }
    }

    /// Contribution to `deg D̄`.
    pub fn closure_weight(&self) -> u64 {
        match self.kind {
            PartKind::B => 3 * self.degree,
            PartKind::C => 4 * self.degree,
        }
    }

    /// Degree-2 places this part forces on `X`.
    pub fn degree_two_places(&self) -> u64 {
        match (self.kind, self.degree) {
            (PartKind::B, 2) => 2,
            (PartKind::C, 2) => 1,
            _ => 0,
        }
    }

    /// Degree-2 places this part forces on `X̄`.
    pub fn closure_degree_two_places(&self) -> u64 {
        match (self.kind, self.degree) {
            (PartKind::B, 2) => 3,
            (PartKind::C, 2) => 2,
            _ => 0,
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.degree)
    }
}

/// All multisets of parts with total weight `delta`, in a fixed order.
pub fn residual_patterns(delta: u64) -> Vec<Vec<Part>> {
    let mut kinds = Vec::new();
    for degree in 2..=delta {
        kinds.push(Part { kind: PartKind::B, degree });
    }
    for degree in 2..=delta / 2 {
        kinds.push(Part { kind: PartKind::C, degree });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(kinds: &[Part], start: usize, left: u64, current: &mut Vec<Part>, out: &mut Vec<Vec<Part>>) {
        if left == 0 {
            out.push(current.clone());
            return;
        }
        for (i, p) in kinds.iter().enumerate().skip(start) {
            if p.weight() <= left {
                current.push(*p);
                go(kinds, i, left - p.weight(), current, out);
                current.pop();
            }
        }
    }
    go(&kinds, 0, delta, &mut current, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosurePattern {
    pub parts: Vec<Part>,
    #[serde(rename = "deg_D_bar")]
    pub deg_d_bar: u64,
    pub genus: u64,
    #[serde(rename = "N")]
    pub points: u64,
    /// Lower bound on the number of degree-2 places of `X̄`.
    pub a2_lower_bound: u64,
    /// Lower bound on the number of degree-2 places of `X`.
    pub x_degree_two_places: u64,
}

impl ClosurePattern {
    fn new(profile: &SplittingProfile, parts: Vec<Part>, g_e: u64) -> Option<Self> {
        let deg = 3 * profile.b + 4 * profile.c + parts.iter().map(Part::closure_weight).sum::<u64>();
        Some(ClosurePattern {
            deg_d_bar: deg,
            // 2ḡ − 2 = 6(2g_E − 2) + deg D̄
            genus: (6 * g_e + deg / 2).checked_sub(5)?,
            points: profile.closure_points(),
            a2_lower_bound: 3 * profile.b_prime + parts.iter().map(Part::closure_degree_two_places).sum::<u64>(),
            x_degree_two_places: profile.b_prime + parts.iter().map(Part::degree_two_places).sum::<u64>(),
            parts,
        })
    }

    pub fn describe_parts(&self) -> String {
        if self.parts.is_empty() {
            return "-".to_string();
        }
        self.parts.iter().map(Part::to_string).collect::<Vec<_>>().join("+")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringCase {
    pub profile: SplittingProfile,
    pub patterns: Vec<ClosurePattern>,
    /// Patterns removed by the degree-2 place count of `X`.
    pub excluded_patterns: Vec<ClosurePattern>,
}

impl CoveringCase {
    /// Distinct genera of the retained patterns, ascending.
    pub fn genera(&self) -> Vec<u64> {
        let mut g: Vec<u64> = self.patterns.iter().map(|p| p.genus).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    pub fn closure_points(&self) -> u64 {
        self.profile.closure_points()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedProfile {
    pub profile: SplittingProfile,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringAnalysis {
    pub n_x: u64,
    pub n_e: u64,
    pub g_x: u64,
    pub g_e: u64,
    /// `None` means no bound on the degree-2 places of `X`.
    pub a2_x: Option<u64>,
    pub q: u64,
    pub different_degree: u64,
    pub cases: Vec<CoveringCase>,
    pub excluded: Vec<ExcludedProfile>,
}

/// Non-Galois degree-3 coverings `X → E` with the given point counts and
/// genera. Every profile solving the two counting equations whose leftover
/// ramification can be carried by places of degree ≥ 2 is examined, and
/// every way of distributing that ramification is listed.
pub fn nongalois_profiles(
    n_x: u64,
    n_e: u64,
    g_x: u64,
    g_e: u64,
    a2_x: Option<u64>,
    q: u64,
) -> Result<CoveringAnalysis, CoversError> {
    if q % 3 != 1 {
        return Err(CoversError::UnsupportedField(q));
    }
    let deg = different_degree(3, g_x, g_e);
    if deg < 0 {
        return Err(CoversError::NegativeDifferent(deg));
    }
    let deg = deg as u64;
    let allowed = |n: u64| a2_x.is_none_or(|m| n <= m);
    let (mut cases, mut excluded) = (Vec::new(), Vec::new());
    for a in 0..=n_x / 3 {
        for b in 0..=(n_x - 3 * a) / 2 {
            for c in 0..=n_x - 3 * a - 2 * b {
                let b_prime = n_x - 3 * a - 2 * b - c;
                let Some(c_prime) = n_e.checked_sub(a + b + b_prime + c) else {
                    continue;
                };
                let profile = SplittingProfile { a, b, b_prime, c, c_prime };
                let Some(delta) = deg.checked_sub(profile.rational_different()) else {
                    continue;
                };
                let all: Vec<ClosurePattern> = residual_patterns(delta)
                    .into_iter()
                    .filter_map(|parts| ClosurePattern::new(&profile, parts, g_e))
                    .collect();
                if all.is_empty() {
                    continue;
                }
                let (patterns, dropped): (Vec<_>, Vec<_>) =
                    all.into_iter().partition(|p| allowed(p.x_degree_two_places));
                if patterns.is_empty() {
                    let reason = if !allowed(b_prime) {
                        format!("b' = {b_prime} forces at least {b_prime} places of degree 2 on X")
                    } else {
                        "every distribution of the remaining ramification forces too many places of degree 2 on X"
                            .to_string()
                    };
                    excluded.push(ExcludedProfile { profile, reason });
                } else {
                    cases.push(CoveringCase {
                        profile,
                        patterns,
                        excluded_patterns: dropped,
                    });
                }
            }
        }
    }
    // Most split places first.
    cases.sort_by_key(|x| std::cmp::Reverse(x.profile));
    excluded.sort_by_key(|x| std::cmp::Reverse(x.profile));
    Ok(CoveringAnalysis {
        n_x,
        n_e,
        g_x,
        g_e,
        a2_x,
        q,
        different_degree: deg,
        cases,
        excluded,
    })
}

/// A splitting of the rational places of `E` in a Galois degree-3 covering:
/// `split` split completely, `ramified` totally ramified, `inert` inert.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisSplit {
    pub split: u64,
    pub ramified: u64,
    pub inert: u64,
    /// `deg D` not accounted for by rational places.
    pub residual: u64,
    /// Degrees of the further totally ramified places, one list per option.
    pub residual_places: Vec<Vec<u64>>,
}

/// Galois degree-3 coverings with tame ramification: each totally ramified
/// place of degree `k` contributes `2k` to the different.
pub fn galois_split_feasible(n_x: u64, n_e: u64, g_x: u64, g_e: u64) -> Vec<GaloisSplit> {
    let deg = different_degree(3, g_x, g_e);
    if deg < 0 {
        return Vec::new();
    }
    let deg = deg as u64;
    let mut out = Vec::new();
    for split in (0..=n_x / 3).rev() {
        let ramified = n_x - 3 * split;
        let Some(inert) = n_e.checked_sub(split + ramified) else {
            continue;
        };
        let Some(residual) = deg.checked_sub(2 * ramified) else {
            continue;
        };
        if residual % 2 != 0 {
            continue;
        }
        let residual_places: Vec<Vec<u64>> = residual_patterns(residual / 2)
            .into_iter()
            .filter(|p| p.iter().all(|part| part.kind == PartKind::B))
            .map(|p| p.iter().map(|part| part.degree).collect())
            .collect();
        if residual_places.is_empty() {
            continue;
        }
        out.push(GaloisSplit {
            split,
            ramified,
            inert,
            residual,
            residual_places,
        });
    }
    out
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for CoveringAnalysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a2 = self.a2_x.map_or("unbounded".to_string(), |m| m.to_string());
        writeln!(
            f,
            "degree-3 non-Galois coverings: N_X = {}, N_E = {}, g_X = {}, g_E = {}, q = {}, deg D = {}, a2(X) <= {}",
            self.n_x, self.n_e, self.g_x, self.g_e, self.q, self.different_degree, a2
        )?;
        writeln!(f, "{:>3} {:>3} {:>3} {:>3} {:>3} {:>5}  genus", "a", "b", "b'", "c", "c'", "N")?;
        for case in &self.cases {
            let p = case.profile;
            writeln!(
                f,
                "{:>3} {:>3} {:>3} {:>3} {:>3} {:>5}  {}",
                p.a,
                p.b,
                p.b_prime,
                p.c,
                p.c_prime,
                case.closure_points(),
                case.genera().iter().map(u64::to_string).collect::<Vec<_>>().join(" or ")
            )?;
        }
        for case in &self.cases {
            for pat in &case.patterns {
                writeln!(
                    f,
                    "  {} parts {}: closure different {}, genus {}, a2 >= {}",
                    case.profile,
                    pat.describe_parts(),
                    pat.deg_d_bar,
                    pat.genus,
                    pat.a2_lower_bound
                )?;
            }
        }
        for e in &self.excluded {
            writeln!(f, "excluded {}: {}", e.profile, e.reason)?;
        }
        Ok(())
    }
}

impl fmt::Display for GaloisSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let places: Vec<String> = self.residual_places.iter().map(|p| format!("[{}]", join(p))).collect();
        write!(
            f,
            "split {}, ramified {}, inert {}, residual {} at places of degree {}",
            self.split,
            self.ramified,
            self.inert,
            self.residual,
            if places == ["[]"] { "-".to_string() } else { places.join(" or ") }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prof(a: u64, b: u64, b_prime: u64, c: u64, c_prime: u64) -> SplittingProfile {
        SplittingProfile { a, b, b_prime, c, c_prime }
    }

    #[test]
    fn galois_cases() {
        let s = galois_split_feasible(25, 10, 4, 1);
        assert_eq!(
            s,
            vec![GaloisSplit { split: 8, ramified: 1, inert: 1, residual: 4, residual_places: vec![vec![2]] }]
        );
        let s = galois_split_feasible(24, 10, 4, 1);
        let triples: Vec<_> = s.iter().map(|x| (x.split, x.ramified, x.inert, x.residual)).collect();
        assert_eq!(triples, vec![(8, 0, 2, 6), (7, 3, 0, 0)]);
        let s = galois_split_feasible(30, 10, 4, 1);
        assert_eq!(s.len(), 1);
        assert_eq!((s[0].split, s[0].ramified, s[0].inert, s[0].residual), (10, 0, 0, 6));
    }

    #[test]
    fn five_profiles_survive() {
        let an = nongalois_profiles(25, 10, 4, 1, Some(1), 7).unwrap();
        let rows: Vec<_> = an.cases.iter().map(|c| (c.profile, c.closure_points(), c.genera())).collect();
        assert_eq!(
            rows,
            vec![
                (prof(8, 0, 1, 0, 1), 48, vec![7, 10]),
                (prof(8, 0, 0, 1, 1), 50, vec![7, 9]),
                (prof(7, 2, 0, 0, 1), 48, vec![8, 10]),
                (prof(7, 1, 1, 1, 0), 47, vec![9]),
                (prof(6, 3, 1, 0, 0), 45, vec![10]),
            ]
        );
        assert_eq!(an.excluded.len(), 1);
        assert_eq!(an.excluded[0].profile, prof(7, 1, 2, 0, 0));
        let v = &an.cases[4];
        assert_eq!(v.patterns.len(), 1);
        assert_eq!(v.patterns[0].a2_lower_bound, 3);
    }

    #[test]
    fn case_one_patterns() {
        let an = nongalois_profiles(25, 10, 4, 1, Some(1), 7).unwrap();
        let one = &an.cases[0];
        let kept: Vec<_> = one.patterns.iter().map(|p| (p.describe_parts(), p.genus)).collect();
        assert_eq!(kept, vec![("B3+B3".to_string(), 10), ("B6".to_string(), 10), ("C3".to_string(), 7)]);
        assert_eq!(one.excluded_patterns.len(), 3);
    }

    #[test]
    fn unbounded_a2_is_a_superset() {
        let tight = nongalois_profiles(25, 10, 4, 1, Some(1), 7).unwrap();
        let loose = nongalois_profiles(25, 10, 4, 1, None, 7).unwrap();
        assert!(loose.excluded.is_empty());
        assert_eq!(loose.cases.len(), 6);
        for case in &tight.cases {
            let other = loose.cases.iter().find(|c| c.profile == case.profile).unwrap();
            for p in &case.patterns {
                assert!(other.patterns.contains(p));
            }
        }
    }

    #[test]
    fn invariants_hold() {
        for n_x in 0..=30 {
            for n_e in 0..=12 {
                let an = nongalois_profiles(n_x, n_e, 4, 1, None, 7).unwrap();
                for case in &an.cases {
                    let p = case.profile;
                    assert_eq!(p.points_on_cover(), n_x);
                    assert_eq!(p.points_on_base(), n_e);
                    for pat in &case.patterns {
                        let w: u64 = pat.parts.iter().map(Part::weight).sum();
                        assert_eq!(p.rational_different() + w, 6);
                        assert_eq!(pat.deg_d_bar % 2, 0);
                        assert_eq!(2 * pat.genus - 2, pat.deg_d_bar);
                        assert_eq!(pat.points, 6 * p.a + 3 * p.b + 2 * p.c);
                    }
                }
            }
        }
    }

    #[test]
    fn residual_one_is_inexpressible() {
        assert!(residual_patterns(1).is_empty());
        assert_eq!(residual_patterns(0), vec![Vec::<Part>::new()]);
        assert_eq!(residual_patterns(4).len(), 3);
    }

    #[test]
    fn refuses_other_fields() {
        assert_eq!(nongalois_profiles(25, 10, 4, 1, Some(1), 5), Err(CoversError::UnsupportedField(5)));
    }

    #[test]
    fn json_round_trip() {
        let an = nongalois_profiles(25, 10, 4, 1, Some(1), 7).unwrap();
        let s = serde_json::to_string(&an).unwrap();
        assert_eq!(serde_json::from_str::<CoveringAnalysis>(&s).unwrap(), an);
        assert!(s.contains(r#""b'":1"#));
    }
}
