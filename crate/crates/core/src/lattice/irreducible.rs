use serde::Serialize;

use super::Lattice;

/// Irreducibility flags of one element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ElementClass {
    /// Strictly join-irreducible: not the join of the elements strictly below.
    pub sji: bool,
    /// Join-irreducible: for every set `S`, `x <= ⋁S` forces `x <= s` for
    /// some `s` in `S`.
    pub ji: bool,
    /// Strictly meet-irreducible.
    pub smi: bool,
    /// Meet-irreducible: for every set `S`, `⋀S <= x` forces `s <= x` for
    /// some `s` in `S`.
    pub mi: bool,
}

/// How `ss(L)` is counted from the meet-irreducibles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum SsConvention {
    /// The number of meet-irreducibles other than the top.
    #[default]
    MiCount,
    /// One less than that count (may be negative).
    MiCountMinusOne,
}

/// Irreducibility flags for every element with the usual counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrreducibleReport {
    pub classes: Vec<ElementClass>,
    pub sji_no: usize,
    pub sji_no_b: usize,
    pub smi_no: usize,
    pub smi_no_t: usize,
    pub ji_no: usize,
    pub ji_no_b: usize,
    pub mi_no: usize,
    pub mi_no_t: usize,
    pub ss: i64,
    pub convention: SsConvention,
}

impl IrreducibleReport {
    pub fn sji(&self) -> Vec<usize> {
        self.select(|c| c.sji)
    }

    pub fn ji(&self) -> Vec<usize> {
        self.select(|c| c.ji)
    }

    pub fn smi(&self) -> Vec<usize> {
        self.select(|c| c.smi)
    }

    pub fn mi(&self) -> Vec<usize> {
        self.select(|c| c.mi)
    }

    fn select(&self, f: impl Fn(&ElementClass) -> bool) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&i| f(&self.classes[i]))
            .collect()
    }
}

impl Lattice {
    /// `x != ⋁{ y : y < x }`.
    pub fn is_sji(&self, x: usize) -> bool {
        x != self.join_all((0..self.len()).filter(|&y| self.lt(y, x)))
    }

    /// `x ≰ ⋁{ y : x ≰ y }`. A set whose join lies above `x` while no member
    /// does is contained in that set, so this join is the worst case.
    pub fn is_ji(&self, x: usize) -> bool {
        !self.le(
            x,
            self.join_all((0..self.len()).filter(|&y| !self.le(x, y))),
        )
    }

    /// `x != ⋀{ y : y > x }`.
    pub fn is_smi(&self, x: usize) -> bool {
        x != self.meet_all((0..self.len()).filter(|&y| self.lt(x, y)))
    }

    /// `⋀{ y : y ≰ x } ≰ x`.
    pub fn is_mi(&self, x: usize) -> bool {
        !self.le(
            self.meet_all((0..self.len()).filter(|&y| !self.le(y, x))),
            x,
        )
    }

    pub fn classify(&self, x: usize) -> ElementClass {
        ElementClass {
            sji: self.is_sji(x),
            ji: self.is_ji(x),
            smi: self.is_smi(x),
            mi: self.is_mi(x),
        }
    }

    pub fn classify_irreducibles(&self) -> IrreducibleReport {
        self.classify_irreducibles_with(SsConvention::default())
    }

    pub fn classify_irreducibles_with(&self, convention: SsConvention) -> IrreducibleReport {
        let classes: Vec<ElementClass> = (0..self.len()).map(|x| self.classify(x)).collect();
        let count = |f: &dyn Fn(usize, &ElementClass) -> bool| {
            classes.iter().enumerate().filter(|(i, c)| f(*i, c)).count()
        };
        let (b, t) = (self.bottom(), self.top());
        let mi_no_t = count(&|i, c| c.mi && i != t);
        let ss = match convention {
            SsConvention::MiCount => mi_no_t as i64,
            SsConvention::MiCountMinusOne => mi_no_t as i64 - 1,
        };
        IrreducibleReport {
            sji_no: count(&|_, c| c.sji),
            sji_no_b: count(&|i, c| c.sji && i != b),
            smi_no: count(&|_, c| c.smi),
            smi_no_t: count(&|i, c| c.smi && i != t),
            ji_no: count(&|_, c| c.ji),
            ji_no_b: count(&|i, c| c.ji && i != b),
            mi_no: count(&|_, c| c.mi),
            mi_no_t,
            ss,
            convention,
            classes,
        }
    }
}
