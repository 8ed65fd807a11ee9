#![allow(dead_code)]

use knotbound_core::algebra::{LaurentPoly, Variable};
use knotbound_core::diagram::{parse_pd, realize_dt, Diagram, DtCode};

pub struct Record {
    pub name: String,
    pub dt: DtCode,
    pub pd: String,
    pub jones: LaurentPoly,
    pub q: LaurentPoly,
    pub sigma: i64,
    pub det: u64,
    pub torsion: Vec<u64>,
    pub u: String,
}

impl Record {
    pub fn pd_diagram(&self) -> Diagram {
        parse_pd(&self.pd).unwrap().with_name(self.name.clone())
    }

    pub fn dt_diagram(&self) -> Diagram {
        realize_dt(&self.dt).unwrap().with_name(self.name.clone())
    }
}

fn poly(var: Variable, text: &str) -> LaurentPoly {
    let terms: Vec<(i64, i64)> = text
        .split_whitespace()
        .map(|t| {
            let (e, c) = t.split_once(':').unwrap();
            (e.parse().unwrap(), c.parse().unwrap())
        })
        .collect();
    LaurentPoly::from_terms(var, &terms)
}

/// Prime knots up to ten crossings with reference invariants.
pub fn knot_table() -> Vec<Record> {
    include_str!("../data/knotinfo_le10.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|line| {
            let f: Vec<&str> = line.split('|').collect();
            Record {
                name: f[0].to_string(),
                dt: DtCode::parse(f[1]).unwrap(),
                pd: f[2].to_string(),
                jones: poly(Variable::T, f[3]),
                q: poly(Variable::Z, f[4]),
                sigma: f[5].parse().unwrap(),
                det: f[6].parse().unwrap(),
                torsion: f[7].split_whitespace().map(|x| x.parse().unwrap()).collect(),
                u: f[8].to_string(),
            }
        })
        .collect()
}

pub fn knot(name: &str) -> Record {
    knot_table().into_iter().find(|r| r.name == name).unwrap_or_else(|| panic!("no knot {name}"))
}
