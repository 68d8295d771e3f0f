//! CF-spec file format: a UTF-8 JSON object with every scalar written as an
//! exact rational string ("p/q", the "/q" omitted for integers).
//!
//! ```json
//! {
//!   "b0": "0",
//!   "a": { "head": ["1"], "tail": { "num": ["1", "-2", "1"], "den": ["1"], "start": 2 } },
//!   "b": { "head": [],    "tail": { "num": ["1", "-2"], "den": ["1"], "start": 1 } },
//!   "name": "conjecture-pi4"
//! }
//! ```
//!
//! `start` is the first index the tail covers and must equal head length + 1.
//! Tails with one closed form per index parity use
//! `{ "even": {"num": …, "den": …}, "odd": {…}, "start": … }` instead.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::Rational;

use super::poly::{Poly, PolyRat};
use super::sequence::{CoefficientSequence, Tail};
use super::spec::CFSpec;

#[derive(Serialize, Deserialize)]
struct BranchDto {
    num: Vec<String>,
    den: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum TailDto {
    Poly {
        num: Vec<String>,
        den: Vec<String>,
        start: u64,
    },
    Parity {
        even: BranchDto,
        odd: BranchDto,
        start: u64,
    },
}

#[derive(Serialize, Deserialize)]
struct SeqDto {
    head: Vec<String>,
    tail: TailDto,
}

#[derive(Serialize, Deserialize)]
struct CfDto {
    b0: String,
    a: SeqDto,
    b: SeqDto,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

fn rationals_to_strings(rs: &[Rational]) -> Vec<String> {
    rs.iter().map(Rational::to_string).collect()
}

fn strings_to_rationals(ss: &[String]) -> Result<Vec<Rational>> {
    ss.iter().map(|s| s.parse()).collect()
}

fn poly_to_strings(p: &Poly) -> Vec<String> {
    if p.is_zero() {
        vec!["0".to_string()]
    } else {
        rationals_to_strings(p.coeffs())
    }
}

fn branch_dto(p: &PolyRat) -> BranchDto {
    BranchDto {
        num: poly_to_strings(p.num()),
        den: poly_to_strings(p.den()),
    }
}

fn branch_from_dto(dto: &BranchDto) -> Result<PolyRat> {
    let num = Poly::new(strings_to_rationals(&dto.num)?);
    let den = Poly::new(strings_to_rationals(&dto.den)?);
    PolyRat::new(num, den)
}

fn seq_dto(seq: &CoefficientSequence) -> SeqDto {
    let start = seq.head_len() + 1;
    let tail = match seq.tail() {
        Tail::Poly(p) => TailDto::Poly {
            num: poly_to_strings(p.num()),
            den: poly_to_strings(p.den()),
            start,
        },
        Tail::Parity { even, odd } => TailDto::Parity {
            even: branch_dto(even),
            odd: branch_dto(odd),
            start,
        },
    };
    SeqDto {
        head: rationals_to_strings(seq.head()),
        tail,
    }
}

fn seq_from_dto(dto: &SeqDto, which: &str) -> Result<CoefficientSequence> {
    let head = strings_to_rationals(&dto.head)?;
    let (tail, start) = match &dto.tail {
        TailDto::Poly { num, den, start } => {
            let p = PolyRat::new(
                Poly::new(strings_to_rationals(num)?),
                Poly::new(strings_to_rationals(den)?),
            )?;
            (Tail::Poly(p), *start)
        }
        TailDto::Parity { even, odd, start } => (
            Tail::from_branches(branch_from_dto(even)?, branch_from_dto(odd)?),
            *start,
        ),
    };
    if start != head.len() as u64 + 1 {
        return Err(Error::FileFormat(format!(
            "sequence `{which}`: tail start {start} does not follow a head of length {}",
            head.len()
        )));
    }
    Ok(CoefficientSequence::new(head, tail))
}

pub fn to_json(cf: &CFSpec) -> String {
    let dto = CfDto {
        b0: cf.b0.to_string(),
        a: seq_dto(&cf.a),
        b: seq_dto(&cf.b),
        name: cf.name.clone(),
    };
    let mut s = serde_json::to_string_pretty(&dto).expect("CF spec serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<CFSpec> {
    let dto: CfDto = serde_json::from_str(text).map_err(|e| Error::FileFormat(e.to_string()))?;
    let mut cf = CFSpec::new(
        dto.b0.parse()?,
        seq_from_dto(&dto.a, "a")?,
        seq_from_dto(&dto.b, "b")?,
    );
    cf.name = dto.name;
    Ok(cf)
}

pub fn write_file(cf: &CFSpec, path: &Path) -> Result<()> {
    std::fs::write(path, to_json(cf))?;
    Ok(())
}

pub fn read_file(path: &Path) -> Result<CFSpec> {
    let text = std::fs::read_to_string(path)?;
    from_json(&text)
}
