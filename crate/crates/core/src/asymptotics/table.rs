//! Grid-indexed length tables and their CSV form.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use rayon::prelude::*;

use super::count::{count_quotient, LengthValue};
use crate::error::{Error, Result};
use crate::multi::MultiIndex;
use crate::saturation::{build_plan, saturate_planned, IdealFamily};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthTable {
    arity: usize,
    values: BTreeMap<MultiIndex, LengthValue>,
}

#[derive(Clone, Debug)]
pub enum TableMode {
    /// `#(I^n : J^∞ \ I^n)`.
    Torsion,
    /// `#(J^n \ I^n)` for a second family `J` with `I_i ⊆ J_i`.
    Quotient(IdealFamily),
}

impl LengthTable {
    pub fn new(arity: usize) -> Self {
        LengthTable { arity, values: BTreeMap::new() }
    }

    pub fn from_values(arity: usize, values: impl IntoIterator<Item = (MultiIndex, LengthValue)>) -> Result<Self> {
        let mut t = Self::new(arity);
        for (n, v) in values {
            t.insert(n, v)?;
        }
        Ok(t)
    }

    /// One-variable table `t -> values[t - first]`.
    pub fn from_sequence(first: u32, values: &[u64]) -> Self {
        let values = values
            .iter()
            .enumerate()
            .map(|(i, &v)| (MultiIndex::from([first + i as u32]), LengthValue::Finite(v)))
            .collect();
        LengthTable { arity: 1, values }
    }

    pub fn insert(&mut self, n: MultiIndex, v: LengthValue) -> Result<()> {
        if n.arity() != self.arity {
            return Err(Error::Dimension { expected: self.arity, found: n.arity() });
        }
        if self.values.insert(n.clone(), v).is_some() {
            return Err(Error::Table(format!("duplicate grid point {n}")));
        }
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, n: &MultiIndex) -> Option<LengthValue> {
        self.values.get(n).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, &LengthValue)> {
        self.values.iter()
    }

    pub fn domain(&self) -> impl Iterator<Item = &MultiIndex> {
        self.values.keys()
    }

    /// Samples along the ray `t * w`, `t >= 1`, sorted by `t`.
    pub fn ray(&self, w: &MultiIndex) -> Result<Vec<(u32, LengthValue)>> {
        if w.arity() != self.arity || w.is_zero() {
            return Err(Error::pre("ray direction must be a nonzero index of the table's arity"));
        }
        let mut out: Vec<(u32, LengthValue)> = self
            .values
            .iter()
            .filter_map(|(n, v)| {
                let (i, &wi) = w.entries().iter().enumerate().find(|(_, &x)| x > 0)?;
                let t = n.entries()[i] / wi;
                (t >= 1 && n == &w.scale(t)).then_some((t, *v))
            })
            .collect();
        out.sort();
        Ok(out)
    }

    pub fn permuted(&self, perm: &[usize]) -> LengthTable {
        LengthTable {
            arity: self.arity,
            values: self.values.iter().map(|(n, v)| (n.permuted(perm), *v)).collect(),
        }
    }

    /// `n_1,...,n_r,value` with a header row; infinite entries as `INF`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header: Vec<String> = (1..=self.arity).map(|i| format!("n_{i}")).collect();
        header.push("value".into());
        w.write_record(&header).map_err(csv_err)?;
        for (n, v) in &self.values {
            let mut rec: Vec<String> = n.entries().iter().map(u32::to_string).collect();
            rec.push(v.to_string());
            w.write_record(&rec).map_err(csv_err)?;
        }
        w.flush().map_err(|e| Error::Table(e.to_string()))?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv output is ascii")
    }

    pub fn read_csv<R: Read>(input: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(input);
        let header = rdr.headers().map_err(csv_err)?.clone();
        let arity = header.len().checked_sub(1).filter(|&r| r >= 1).ok_or_else(|| {
            Error::Table("header must be n_1,...,n_r,value with r >= 1".into())
        })?;
        for (i, h) in header.iter().enumerate().take(arity) {
            if h != format!("n_{}", i + 1) {
                return Err(Error::Table(format!("unexpected header column `{h}`")));
            }
        }
        if &header[arity] != "value" {
            return Err(Error::Table("last header column must be `value`".into()));
        }
        let mut table = Self::new(arity);
        for (line, rec) in rdr.records().enumerate() {
            let rec = rec.map_err(csv_err)?;
            if rec.len() != arity + 1 {
                return Err(Error::Table(format!("row {} has {} fields", line + 2, rec.len())));
            }
            let n = rec
                .iter()
                .take(arity)
                .map(|s| s.parse::<u32>().map_err(|_| Error::Table(format!("row {}: bad index `{s}`", line + 2))))
                .collect::<Result<Vec<_>>>()?;
            let v = match &rec[arity] {
                "INF" => LengthValue::Infinite,
                s => LengthValue::Finite(
                    s.parse().map_err(|_| Error::Table(format!("row {}: bad value `{s}`", line + 2)))?,
                ),
            };
            table.insert(MultiIndex::new(n), v)?;
        }
        Ok(table)
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Table(e.to_string())
}

pub fn length_table(family: &IdealFamily, grid: &[MultiIndex], mode: &TableMode) -> Result<LengthTable> {
    for n in grid {
        if n.arity() != family.arity() {
            return Err(Error::Dimension { expected: family.arity(), found: n.arity() });
        }
    }
    let rows: Vec<(MultiIndex, LengthValue)> = match mode {
        TableMode::Torsion => {
            let plan = build_plan(family)?;
            grid.par_iter()
                .map(|n| {
                    let sat = saturate_planned(&plan, family, n)?;
                    Ok((n.clone(), count_quotient(&sat, &family.multi_power(n)?)?))
                })
                .collect::<Result<_>>()?
        }
        TableMode::Quotient(larger) => {
            if larger.arity() != family.arity() {
                return Err(Error::Dimension { expected: family.arity(), found: larger.arity() });
            }
            for (small, big) in family.ideals().iter().zip(larger.ideals()) {
                if !small.is_subset(big)? {
                    return Err(Error::pre(format!("({small}) is not contained in ({big})")));
                }
            }
            grid.par_iter()
                .map(|n| Ok((n.clone(), count_quotient(&larger.multi_power(n)?, &family.multi_power(n)?)?)))
                .collect::<Result<_>>()?
        }
    };
    LengthTable::from_values(family.arity(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;
    use crate::ring::RingCtx;

    #[test]
    fn torsion_and_quotient_tables() {
        let r = RingCtx::new(["X", "Y"]).unwrap();
        let i = MonomialIdeal::from_rows(&r, &[&[2, 0], &[1, 1]]).unwrap();
        let fam = IdealFamily::with_maximal(vec![i]).unwrap();
        let grid = MultiIndex::grid(&[(1, 4)]);
        let t = length_table(&fam, &grid, &TableMode::Torsion).unwrap();
        let vals: Vec<_> = t.iter().map(|(_, v)| *v).collect();
        assert_eq!(vals, [1, 3, 6, 10].map(LengthValue::Finite));

        let x = RingCtx::new(["X"]).unwrap();
        let small = IdealFamily::new(vec![MonomialIdeal::from_rows(&x, &[&[2]]).unwrap()], vec![]).unwrap();
        let big = IdealFamily::new(vec![MonomialIdeal::from_rows(&x, &[&[1]]).unwrap()], vec![]).unwrap();
        let t = length_table(&small, &grid, &TableMode::Quotient(big.clone())).unwrap();
        let vals: Vec<_> = t.iter().map(|(_, v)| *v).collect();
        assert_eq!(vals, [1, 2, 3, 4].map(LengthValue::Finite));
        assert!(length_table(&big, &grid, &TableMode::Quotient(small)).is_err());
    }

    #[test]
    fn principal_ideals_have_no_torsion() {
        let r = RingCtx::new(["X", "Y"]).unwrap();
        let fam = IdealFamily::with_maximal(vec![MonomialIdeal::from_rows(&r, &[&[1, 0]]).unwrap()]).unwrap();
        let t = length_table(&fam, &MultiIndex::grid(&[(1, 5)]), &TableMode::Torsion).unwrap();
        assert!(t.iter().all(|(_, v)| *v == LengthValue::Finite(0)));
    }

    #[test]
    fn csv_round_trip_and_errors() {
        let mut t = LengthTable::new(2);
        t.insert(MultiIndex::from([1, 2]), LengthValue::Finite(7)).unwrap();
        t.insert(MultiIndex::from([2, 1]), LengthValue::Infinite).unwrap();
        let s = t.to_csv_string();
        assert_eq!(s, "n_1,n_2,value\n1,2,7\n2,1,INF\n");
        assert_eq!(LengthTable::read_csv(s.as_bytes()).unwrap(), t);
        assert!(LengthTable::read_csv("n_1,value\n1,x\n".as_bytes()).is_err());
        assert!(LengthTable::read_csv("a,value\n1,2\n".as_bytes()).is_err());
        assert!(LengthTable::read_csv("n_1,value\n1,2\n1,3\n".as_bytes()).is_err());
        assert!(LengthTable::read_csv("value\n".as_bytes()).is_err());
    }

    #[test]
    fn ray_extraction() {
        let t = LengthTable::from_values(
            2,
            MultiIndex::grid(&[(1, 4), (1, 4)]).into_iter().map(|n| {
                let v = n.norm();
                (n, LengthValue::Finite(v))
            }),
        )
        .unwrap();
        let ray = t.ray(&MultiIndex::from([1, 2])).unwrap();
        assert_eq!(ray, vec![(1, LengthValue::Finite(3)), (2, LengthValue::Finite(6))]);
    }
}
