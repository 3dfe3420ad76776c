//! The quantum group action on the Fock space of charged diagrams.
//!
//! `E_i` and `F_i` are assembled from the single-site operators with the
//! closed-form exponents `a(i, l, y, Y)` and `b(i, l, y, Y)`: a diagram only
//! has finitely many corners, so the products of site `T` operators collapse
//! to a single power of `q_i` per site.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartan::{Coweight, Rank};
use crate::diagram::{all_diagrams, Colouring, CornerKind, Diagram};
use crate::error::{Error, Result};
use crate::qlaurent::{quantum_binomial, quantum_integer, LaurentPoly};

/// Which assembly of `E_i`, `F_i` is used. `Upper` puts the `T^+` factors
/// above the site for `E_i` and the `T^-` factors below it for `F_i`;
/// `Lower` uses `T^-` below for `E_i` and `T^+` above for `F_i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    #[default]
    Upper,
    Lower,
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "upper" => Ok(Convention::Upper),
            "lower" => Ok(Convention::Lower),
            other => Err(Error::Parse(format!("unknown convention {other:?} (expected upper or lower)"))),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Upper => "upper",
            Convention::Lower => "lower",
        })
    }
}

/// A finite linear combination of diagrams with Laurent polynomial
/// coefficients. All diagrams belong to one space `(n, charge)`, and no
/// stored coefficient is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Combination {
    terms: BTreeMap<Diagram, LaurentPoly>,
}

impl Combination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_diagram(y: Diagram) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(y, LaurentPoly::one());
        Combination { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Diagram, LaurentPoly)>) -> Result<Self> {
        let mut out = Self::zero();
        for (y, c) in terms {
            out.add_term(y, &c)?;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical diagram order.
    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, y: &Diagram) -> LaurentPoly {
        self.terms.get(y).cloned().unwrap_or_default()
    }

    /// The `(n, charge)` shared by every term, if any.
    pub fn space(&self) -> Option<(Rank, usize)> {
        self.terms.keys().next().map(|y| (y.rank(), y.charge()))
    }

    pub fn add_term(&mut self, y: Diagram, c: &LaurentPoly) -> Result<()> {
        if let Some((rank, charge)) = self.space() {
            if rank != y.rank() || charge != y.charge() {
                return Err(Error::MixedSpace(rank.n(), charge, y.n(), y.charge()));
            }
        }
        self.push(y, c);
        Ok(())
    }

    // Callers guarantee `y` lies in the same space.
    fn push(&mut self, y: Diagram, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(y).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &Combination) -> Result<Combination> {
        let mut out = self.clone();
        for (y, c) in other.terms() {
            out.add_term(y.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Combination) -> Result<Combination> {
        self.add(&other.scale(&LaurentPoly::from(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Combination {
        if c.is_zero() {
            return Self::zero();
        }
        Combination {
            terms: self
                .terms
                .iter()
                .map(|(y, p)| (y.clone(), p * c))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
        }
    }

    /// Applies a diagonal or single-diagram map to every term, multiplying
    /// coefficients and summing.
    fn map_terms(&self, mut f: impl FnMut(&Diagram, &mut Combination)) -> Combination {
        let mut out = Combination::zero();
        for (y, c) in &self.terms {
            let mut image = Combination::zero();
            f(y, &mut image);
            for (z, p) in image.terms {
                out.push(z, &(&p * c));
            }
        }
        out
    }
}

impl From<Diagram> for Combination {
    fn from(y: Diagram) -> Self {
        Combination::from_diagram(y)
    }
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (y, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*[{}]", y.label())?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    diagram: Diagram,
    coeff: LaurentPoly,
}

#[derive(Serialize)]
struct TermRef<'a> {
    diagram: &'a Diagram,
    coeff: &'a LaurentPoly,
}

impl Serialize for Combination {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (diagram, coeff) in &self.terms {
            seq.serialize_element(&TermRef { diagram, coeff })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Combination {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<TermJson>::deserialize(deserializer)?;
        Combination::from_terms(raw.into_iter().map(|t| (t.diagram, t.coeff))).map_err(serde::de::Error::custom)
    }
}

/// `E_(l,y)`: removes the box at a convex corner `(l, y)`.
pub fn e_site(y: &Diagram, column: usize, height: i64) -> Option<Diagram> {
    match y.corner_at(column, height)? {
        c if c.kind == CornerKind::Convex => y.remove_box(column - 1).ok(),
        _ => None,
    }
}

/// `F_(l,y)`: adds the box `(l, l+1] x (y-1, y]` at a concave corner `(l, y)`.
pub fn f_site(y: &Diagram, column: usize, height: i64) -> Option<Diagram> {
    match y.corner_at(column, height)? {
        c if c.kind == CornerKind::Concave => y.add_box(column).ok(),
        _ => None,
    }
}

fn signed_count(corners: impl Iterator<Item = CornerKind>, positive: CornerKind) -> i64 {
    corners.map(|k| if k == positive { 1 } else { -1 }).sum()
}

/// `a(i, l, y, Y)`: concave minus convex `i`-corners with larger diagonal.
pub fn a_exponent(i: usize, column: usize, height: i64, y: &Diagram) -> i64 {
    a_exponent_in(i, column as i64 + height, y, Colouring::STANDARD)
}

/// `b(i, l, y, Y)`: convex minus concave `i`-corners with smaller diagonal.
pub fn b_exponent(i: usize, column: usize, height: i64, y: &Diagram) -> i64 {
    b_exponent_in(i, column as i64 + height, y, Colouring::STANDARD)
}

fn a_exponent_in(i: usize, diagonal: i64, y: &Diagram, colouring: Colouring) -> i64 {
    let above = y.corners_in(colouring).into_iter().filter(|c| c.colour == i && c.diagonal > diagonal);
    signed_count(above.map(|c| c.kind), CornerKind::Concave)
}

fn b_exponent_in(i: usize, diagonal: i64, y: &Diagram, colouring: Colouring) -> i64 {
    let below = y.corners_in(colouring).into_iter().filter(|c| c.colour == i && c.diagonal < diagonal);
    signed_count(below.map(|c| c.kind), CornerKind::Convex)
}

/// The operators of the Fock space action under one convention and one
/// colouring of the plane.
#[derive(Clone, Copy, Debug, Default)]
pub struct FockAction {
    pub convention: Convention,
    pub colouring: Colouring,
}

impl FockAction {
    pub fn new(convention: Convention) -> Self {
        FockAction { convention, colouring: Colouring::STANDARD }
    }

    pub fn with_colouring(convention: Convention, colouring: Colouring) -> Self {
        FockAction { convention, colouring }
    }

    fn check(i: usize, v: &Combination) -> Result<()> {
        if let Some((rank, _)) = v.space() {
            rank.check_index(i)?;
        }
        Ok(())
    }

    pub fn e(&self, i: usize, v: &Combination) -> Result<Combination> {
        Self::check(i, v)?;
        Ok(v.map_terms(|y, out| self.e_diagram(i, y, out)))
    }

    pub fn f(&self, i: usize, v: &Combination) -> Result<Combination> {
        Self::check(i, v)?;
        Ok(v.map_terms(|y, out| self.f_diagram(i, y, out)))
    }

    fn e_diagram(&self, i: usize, y: &Diagram, out: &mut Combination) {
        let s = y.rank().s(i);
        for corner in y.corners_in(self.colouring) {
            if corner.colour != i || corner.kind != CornerKind::Convex {
                continue;
            }
            let exp = match self.convention {
                Convention::Upper => a_exponent_in(i, corner.diagonal, y, self.colouring),
                Convention::Lower => b_exponent_in(i, corner.diagonal, y, self.colouring),
            };
            let z = y.remove_box(corner.column - 1).expect("convex corner marks a removable box");
            out.push(z, &LaurentPoly::q_pow(s * exp));
        }
    }

    fn f_diagram(&self, i: usize, y: &Diagram, out: &mut Combination) {
        let s = y.rank().s(i);
        for corner in y.corners_in(self.colouring) {
            if corner.colour != i || corner.kind != CornerKind::Concave {
                continue;
            }
            let exp = match self.convention {
                Convention::Upper => b_exponent_in(i, corner.diagonal, y, self.colouring),
                Convention::Lower => a_exponent_in(i, corner.diagonal, y, self.colouring),
            };
            let z = y.add_box(corner.column).expect("concave corner marks an addable box");
            out.push(z, &LaurentPoly::q_pow(s * exp));
        }
    }

    /// `T_i^+` (`raise = true`) or `T_i^-`: the product of site operators,
    /// i.e. `q_i^{±(concave - convex)}` over `i`-coloured corners.
    pub fn t(&self, i: usize, raise: bool, v: &Combination) -> Result<Combination> {
        Self::check(i, v)?;
        let sign = if raise { 1 } else { -1 };
        Ok(v.map_terms(|y, out| {
            let corners = y.corners_in(self.colouring).into_iter().filter(|c| c.colour == i);
            let net = signed_count(corners.map(|c| c.kind), CornerKind::Concave);
            out.push(y.clone(), &LaurentPoly::q_pow(sign * y.rank().s(i) * net));
        }))
    }

    /// `T_d`: `q^{-(number of 0-coloured boxes)}`.
    pub fn td(&self, v: &Combination) -> Combination {
        v.map_terms(|y, out| {
            let zeros = y.colour_counts_in(self.colouring)[0] as i64;
            out.push(y.clone(), &LaurentPoly::q_pow(-zeros));
        })
    }

    /// `q^h`, acting on each diagram by `q^{<h, wt(Y)>}`.
    pub fn qh(&self, h: &Coweight, v: &Combination) -> Result<Combination> {
        if let Some((rank, _)) = v.space() {
            if h.h.len() != rank.nodes() {
                return Err(Error::Domain(format!(
                    "coweight has {} h-components, expected {}",
                    h.h.len(),
                    rank.nodes()
                )));
            }
        }
        Ok(v.map_terms(|y, out| {
            let exp = y.weight_in(self.colouring).pair(h);
            out.push(y.clone(), &LaurentPoly::q_pow(exp));
        }))
    }

    /// `E_i F_j - F_j E_i` applied to `Y`.
    pub fn commutator(&self, i: usize, j: usize, y: &Diagram) -> Result<Combination> {
        let v = Combination::from_diagram(y.clone());
        let ef = self.e(i, &self.f(j, &v)?)?;
        let fe = self.f(j, &self.e(i, &v)?)?;
        ef.sub(&fe)
    }

    /// The quantum Serre combination
    /// `sum_t (-1)^t [m choose t]_{q_i} X_i^{m-t} X_j X_i^t Y` with
    /// `m = 1 - a_ij`, for `X = E` or `X = F`.
    pub fn serre(&self, generator: Generator, i: usize, j: usize, y: &Diagram) -> Result<Combination> {
        let rank = y.rank();
        rank.check_index(i)?;
        rank.check_index(j)?;
        if i == j {
            return Err(Error::Domain("Serre relations need i != j".to_owned()));
        }
        let m = (1 - rank.entry(i, j)) as u32;
        let s = rank.s(i);
        let apply = |idx: usize, v: &Combination| match generator {
            Generator::E => self.e(idx, v),
            Generator::F => self.f(idx, v),
        };

        let mut powers = vec![Combination::from_diagram(y.clone())];
        for _ in 0..m {
            let next = apply(i, powers.last().unwrap())?;
            powers.push(next);
        }
        let mut total = Combination::zero();
        for (t, start) in powers.iter().enumerate() {
            let mut v = apply(j, start)?;
            for _ in 0..(m as usize - t) {
                v = apply(i, &v)?;
            }
            let mut c = quantum_binomial(m, t as u32, s)?;
            if t % 2 == 1 {
                c = -c;
            }
            total = total.add(&v.scale(&c))?;
        }
        Ok(total)
    }
}

/// Which generator family a Serre check runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    E,
    F,
}

pub fn act_e(i: usize, v: &Combination, convention: Convention) -> Result<Combination> {
    FockAction::new(convention).e(i, v)
}

pub fn act_f(i: usize, v: &Combination, convention: Convention) -> Result<Combination> {
    FockAction::new(convention).f(i, v)
}

pub fn act_t(i: usize, raise: bool, v: &Combination) -> Result<Combination> {
    FockAction::default().t(i, raise, v)
}

pub fn act_td(v: &Combination) -> Combination {
    FockAction::default().td(v)
}

pub fn act_qh(h: &Coweight, v: &Combination) -> Result<Combination> {
    FockAction::default().qh(h, v)
}

pub fn commutator_ef(i: usize, j: usize, y: &Diagram, convention: Convention) -> Result<Combination> {
    FockAction::new(convention).commutator(i, j, y)
}

pub fn serre_check(generator: Generator, i: usize, j: usize, y: &Diagram, convention: Convention) -> Result<Combination> {
    FockAction::new(convention).serre(generator, i, j, y)
}

/// The defining relation a failed check belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// `q^0 = 1`, `q^h q^h' = q^(h+h')`, and `T_i^±`, `T_d` agreeing with `q^h`.
    Torus,
    /// `q^h e_i q^-h = q^{alpha_i(h)} e_i`.
    ConjugateE,
    /// `q^h f_i q^-h = q^{-alpha_i(h)} f_i`.
    ConjugateF,
    /// `e_i f_j - f_j e_i = delta_ij [h_i]_{q_i}`.
    Commutator,
    SerreE,
    SerreF,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub diagram: Diagram,
    pub relation: Relation,
    /// Node indices involved (`[i]` or `[i, j]`), empty for `d`-only checks.
    pub indices: Vec<usize>,
    /// Left side minus right side; nonzero by definition.
    pub discrepancy: Combination,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checked: u64,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures_of(&self, relation: Relation) -> impl Iterator<Item = &Failure> + '_ {
        self.failures.iter().filter(move |f| f.relation == relation)
    }
}

pub fn verify_relations(rank: Rank, charge: usize, max_boxes: usize, convention: Convention) -> Result<Report> {
    FockAction::new(convention).verify(rank, charge, max_boxes)
}

impl FockAction {
    /// Checks every defining relation on every diagram with at most
    /// `max_boxes` boxes. Failures are reported in canonical diagram order.
    pub fn verify(&self, rank: Rank, charge: usize, max_boxes: usize) -> Result<Report> {
        let diagrams = all_diagrams(rank, charge, max_boxes)?;
        let per_diagram: Vec<Result<Report>> = diagrams.par_iter().map(|y| self.verify_diagram(y)).collect();
        let mut report = Report::default();
        for part in per_diagram {
            let part = part?;
            report.checked += part.checked;
            report.failures.extend(part.failures);
        }
        Ok(report)
    }

    fn verify_diagram(&self, y: &Diagram) -> Result<Report> {
        let rank = y.rank();
        let mut report = Report::default();
        let mut record = |relation, indices: Vec<usize>, lhs: Combination, rhs: Combination| -> Result<()> {
            report.checked += 1;
            let diff = lhs.sub(&rhs)?;
            if !diff.is_zero() {
                report.failures.push(Failure { diagram: y.clone(), relation, indices, discrepancy: diff });
            }
            Ok(())
        };
        let v = Combination::from_diagram(y.clone());

        record(Relation::Torus, vec![], self.qh(&Coweight::zero(rank), &v)?, v.clone())?;
        let basis = Coweight::basis(rank);
        for (a, ha) in basis.iter().enumerate() {
            for hb in &basis[a..] {
                let lhs = self.qh(ha, &self.qh(hb, &v)?)?;
                record(Relation::Torus, vec![], lhs, self.qh(&(ha + hb), &v)?)?;
            }
        }
        for i in rank.node_set() {
            let s = rank.s(i);
            let plus = Coweight::h(rank, i, s)?;
            record(Relation::Torus, vec![i], self.t(i, true, &v)?, self.qh(&plus, &v)?)?;
            record(Relation::Torus, vec![i], self.t(i, false, &v)?, self.qh(&-&plus, &v)?)?;
        }
        record(Relation::Torus, vec![], self.td(&v), self.qh(&Coweight::d(rank), &v)?)?;

        for i in rank.node_set() {
            let root = rank.simple_root(i)?;
            let ev = self.e(i, &v)?;
            let fv = self.f(i, &v)?;
            for h in &basis {
                let shift = LaurentPoly::q_pow(root.pair(h));
                let lhs = self.qh(h, &ev)?;
                record(Relation::ConjugateE, vec![i], lhs, self.e(i, &self.qh(h, &v)?)?.scale(&shift))?;
                let lhs = self.qh(h, &fv)?;
                let unshift = LaurentPoly::q_pow(-root.pair(h));
                record(Relation::ConjugateF, vec![i], lhs, self.f(i, &self.qh(h, &v)?)?.scale(&unshift))?;
            }
        }

        for i in rank.node_set() {
            for j in rank.node_set() {
                let lhs = self.commutator(i, j, y)?;
                let rhs = if i == j {
                    let m = y.weight_in(self.colouring).pair_h(i);
                    v.scale(&quantum_integer(m, rank.s(i)))
                } else {
                    Combination::zero()
                };
                record(Relation::Commutator, vec![i, j], lhs, rhs)?;
            }
        }

        for i in rank.node_set() {
            for j in rank.node_set().filter(|&j| j != i) {
                record(Relation::SerreE, vec![i, j], self.serre(Generator::E, i, j, y)?, Combination::zero())?;
                record(Relation::SerreF, vec![i, j], self.serre(Generator::F, i, j, y)?, Combination::zero())?;
            }
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dg(n: i64, k: usize, depths: &[usize]) -> Diagram {
        Diagram::new(Rank::new(n).unwrap(), k, depths.to_vec()).unwrap()
    }

    fn example() -> Diagram {
        dg(2, 0, &[4, 2, 2, 1, 1])
    }

    fn comb(terms: &[(Diagram, LaurentPoly)]) -> Combination {
        Combination::from_terms(terms.iter().cloned()).unwrap()
    }

    fn q(e: i64) -> LaurentPoly {
        LaurentPoly::q_pow(e)
    }

    #[test]
    fn site_operators() {
        assert_eq!(e_site(&dg(2, 0, &[1]), 1, -1), Some(dg(2, 0, &[])));
        assert_eq!(e_site(&dg(2, 0, &[]), 0, 0), None);
        assert_eq!(e_site(&example(), 5, -1), Some(dg(2, 0, &[4, 2, 2, 1])));
        assert_eq!(e_site(&example(), 5, 0), None);

        assert_eq!(f_site(&dg(2, 0, &[]), 0, 0), Some(dg(2, 0, &[1])));
        assert_eq!(f_site(&example(), 1, -2), Some(dg(2, 0, &[4, 3, 2, 1, 1])));
        assert_eq!(f_site(&dg(2, 0, &[1]), 0, -1), Some(dg(2, 0, &[2])));
        assert_eq!(f_site(&dg(2, 0, &[1]), 1, -1), None);
    }

    #[test]
    fn exponents() {
        assert_eq!(b_exponent(0, 0, 0, &dg(2, 0, &[])), 0);
        assert_eq!(b_exponent(1, 0, -1, &dg(2, 0, &[1])), 0);
        assert_eq!(b_exponent(1, 1, 0, &dg(2, 0, &[1])), -1);
        assert_eq!(a_exponent(1, 1, -2, &dg(2, 0, &[2, 1])), -1);
    }

    #[test]
    fn generator_examples() {
        let up = Convention::Upper;
        for n in 2..5 {
            for k in 0..=n as usize {
                let phi = Combination::from(dg(n, k, &[]));
                for i in 0..=n as usize {
                    assert!(act_e(i, &phi, up).unwrap().is_zero());
                }
            }
        }
        let one = Combination::from(dg(2, 0, &[1]));
        assert_eq!(
            act_f(1, &one, up).unwrap(),
            comb(&[(dg(2, 0, &[1, 1]), q(-1)), (dg(2, 0, &[2]), q(0))])
        );
        let two_one = Combination::from(dg(2, 0, &[2, 1]));
        assert_eq!(
            act_e(1, &two_one, up).unwrap(),
            comb(&[(dg(2, 0, &[2]), q(0)), (dg(2, 0, &[1, 1]), q(-1))])
        );
        assert_eq!(act_f(0, &Combination::from(dg(2, 0, &[])), up).unwrap(), one);
        assert!(act_e(3, &one, up).is_err());
    }

    #[test]
    fn torus_examples() {
        for k in 0..=2 {
            let phi = Combination::from(dg(2, k, &[]));
            for i in 0..=2 {
                let s = Rank::new(2).unwrap().s(i);
                let expect = phi.scale(&q(if i == k { s } else { 0 }));
                assert_eq!(act_t(i, true, &phi).unwrap(), expect);
            }
            assert_eq!(act_td(&phi), phi);
        }
        let v = Combination::from(dg(2, 0, &[1, 1]));
        assert_eq!(act_t(1, true, &v).unwrap(), v);
        let y = Combination::from(example());
        assert_eq!(act_t(2, true, &y).unwrap(), y.scale(&q(2)));
        let one = Combination::from(dg(2, 0, &[1]));
        assert_eq!(act_td(&one), one.scale(&q(-1)));
        let sq = Combination::from(dg(2, 0, &[2, 2]));
        assert_eq!(act_td(&sq), sq.scale(&q(-2)));
    }

    #[test]
    fn qh_examples() {
        let r = Rank::new(2).unwrap();
        for k in 0..=2 {
            let phi = Combination::from(dg(2, k, &[]));
            assert_eq!(act_qh(&Coweight::h(r, k, 1).unwrap(), &phi).unwrap(), phi.scale(&q(1)));
        }
        let one = Combination::from(dg(2, 0, &[1]));
        assert_eq!(act_qh(&Coweight::d(r), &one).unwrap(), act_td(&one));
        let y = Combination::from(example());
        assert_eq!(act_qh(&Coweight::h(r, 1, 1).unwrap(), &y).unwrap(), y);
        let bad = Coweight { h: vec![1], d: 0 };
        assert!(act_qh(&bad, &y).is_err());
    }

    #[test]
    fn commutator_examples() {
        let up = Convention::Upper;
        assert_eq!(commutator_ef(0, 0, &dg(2, 0, &[]), up).unwrap(), Combination::from(dg(2, 0, &[])));
        assert!(commutator_ef(1, 0, &dg(2, 0, &[1]), up).unwrap().is_zero());
        assert_eq!(
            commutator_ef(1, 1, &dg(2, 0, &[1]), up).unwrap(),
            Combination::from(dg(2, 0, &[1])).scale(&(&q(1) + &q(-1)))
        );
    }

    #[test]
    fn serre_examples() {
        let up = Convention::Upper;
        for y in all_diagrams(Rank::new(2).unwrap(), 0, 5).unwrap() {
            assert!(serre_check(Generator::E, 0, 1, &y, up).unwrap().is_zero(), "{y}");
        }
        assert!(serre_check(Generator::E, 1, 0, &dg(2, 0, &[]), up).unwrap().is_zero());
        assert!(serre_check(Generator::F, 1, 2, &dg(2, 0, &[1]), up).unwrap().is_zero());
        assert!(matches!(serre_check(Generator::F, 1, 1, &dg(2, 0, &[1]), up), Err(Error::Domain(_))));
    }

    #[test]
    fn single_term_is_nonvacuous() {
        // E_1^2 E_0 on a diagram where the Serre sum must cancel non-trivially.
        let y = dg(2, 0, &[2, 2]);
        let action = FockAction::default();
        let v = Combination::from(y.clone());
        let first = action.e(1, &action.e(1, &action.e(0, &v).unwrap()).unwrap()).unwrap();
        let total = action.serre(Generator::E, 1, 0, &y).unwrap();
        assert!(!first.is_zero());
        assert!(total.is_zero());
    }

    #[test]
    fn mixed_space_is_rejected() {
        let mut c = Combination::from(dg(2, 0, &[1]));
        let err = c.add_term(dg(2, 1, &[1]), &LaurentPoly::one()).unwrap_err();
        assert!(matches!(err, Error::MixedSpace(2, 0, 2, 1)));
        assert!(c.add_term(dg(3, 0, &[1]), &LaurentPoly::one()).is_err());
    }

    #[test]
    fn verify_small() {
        let report = verify_relations(Rank::new(2).unwrap(), 0, 6, Convention::Upper).unwrap();
        assert!(report.passed(), "{:?}", report.failures.first());
        assert!(report.checked > 0);
        let report = verify_relations(Rank::new(3).unwrap(), 1, 5, Convention::Lower).unwrap();
        assert!(report.passed(), "{:?}", report.failures.first());
    }

    #[test]
    fn combination_json() {
        let c = comb(&[(dg(2, 0, &[1, 1]), q(-1)), (dg(2, 0, &[2]), q(0))]);
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(
            v,
            serde_json::json!([
                {"diagram": {"n": 2, "charge": 0, "columns": [2]}, "coeff": {"0": 1}},
                {"diagram": {"n": 2, "charge": 0, "columns": [1, 1]}, "coeff": {"-1": 1}},
            ])
        );
        assert_eq!(serde_json::from_value::<Combination>(v).unwrap(), c);
    }
}
