use std::io::Write;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serialize;

use super::engine::{CharacterEngine, CharacterValue};
use crate::arith::centralizer_size;
use crate::error::Result;
use crate::partition::{partitions_of, Partition};

/// Full character table of S_n.
///
/// Rows (characters) follow [`partitions_of`] order, `(n)` first. Columns
/// (classes) run the other way, so column 0 is the identity class and holds
/// the degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub characters: Vec<Partition>,
    pub classes: Vec<Partition>,
    /// `values[row][col]`.
    pub values: Vec<Vec<CharacterValue>>,
    pub centralizers: Vec<BigUint>,
}

#[derive(Serialize)]
struct TableJson<'a> {
    n: usize,
    classes: &'a [Partition],
    characters: Vec<RowJson<'a>>,
}

#[derive(Serialize)]
struct RowJson<'a> {
    partition: &'a Partition,
    values: Vec<String>,
}

impl CharacterTable {
    pub fn size(&self) -> usize {
        self.characters.len()
    }

    pub fn row_of(&self, alpha: &Partition) -> Option<usize> {
        self.characters.iter().position(|c| c == alpha)
    }

    pub fn column_of(&self, beta: &Partition) -> Option<usize> {
        self.classes.iter().position(|c| c == beta)
    }

    pub fn get(&self, alpha: &Partition, beta: &Partition) -> Option<&CharacterValue> {
        Some(&self.values[self.row_of(alpha)?][self.column_of(beta)?])
    }

    pub fn degrees(&self) -> Vec<&CharacterValue> {
        self.values.iter().map(|row| &row[0]).collect()
    }

    /// JSON: `{n, classes, characters: [{partition, values}]}` with values
    /// as decimal strings.
    pub fn to_json(&self) -> String {
        let doc = TableJson {
            n: self.n,
            classes: &self.classes,
            characters: self
                .characters
                .iter()
                .zip(&self.values)
                .map(|(partition, row)| RowJson {
                    partition,
                    values: row.iter().map(BigInt::to_string).collect(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("table serializes")
    }

    /// CSV with a header row of classes; each row starts with its character.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        let header = std::iter::once("alpha".to_string())
            .chain(self.classes.iter().map(Partition::to_string));
        writer.write_record(header).map_err(csv_error)?;
        for (alpha, row) in self.characters.iter().zip(&self.values) {
            let record =
                std::iter::once(alpha.to_string()).chain(row.iter().map(BigInt::to_string));
            writer.write_record(record).map_err(csv_error)?;
        }
        writer.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writes to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }
}

fn csv_error(e: csv::Error) -> crate::Error {
    crate::Error::Io(e.to_string())
}

impl CharacterEngine {
    /// Builds the table of S_n, evaluating columns in parallel.
    pub fn character_table(&self, n: usize) -> CharacterTable {
        let characters: Vec<Partition> = partitions_of(n).collect();
        let mut classes = characters.clone();
        classes.reverse();
        let columns: Vec<Vec<CharacterValue>> = classes
            .par_iter()
            .map(|beta| {
                characters
                    .iter()
                    .map(|alpha| self.eval(alpha, beta.parts()))
                    .collect()
            })
            .collect();
        let values = (0..characters.len())
            .map(|row| columns.iter().map(|col| col[row].clone()).collect())
            .collect();
        let centralizers = classes.iter().map(centralizer_size).collect();
        CharacterTable {
            n,
            characters,
            classes,
            values,
            centralizers,
        }
    }
}

pub fn character_table(n: usize) -> CharacterTable {
    CharacterEngine::new().character_table(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::degree;
    use num_traits::{One, Zero};

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn s3_table() {
        let t = character_table(3);
        assert_eq!(
            t.characters
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>(),
            ["3", "2,1", "1^3"]
        );
        assert_eq!(
            t.classes.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            ["1^3", "2,1", "3"]
        );
        assert_eq!(t.values, ints(&[&[1, 1, 1], &[2, 0, -1], &[1, -1, 1]]));
    }

    #[test]
    fn s0_table() {
        let t = character_table(0);
        assert_eq!(t.values, ints(&[&[1]]));
        assert_eq!(t.to_csv(), "alpha,()\n(),1\n");
    }

    #[test]
    fn s4_degrees() {
        let t = character_table(4);
        let degrees: Vec<BigInt> = t.degrees().into_iter().cloned().collect();
        assert_eq!(degrees, ints(&[&[1, 3, 2, 3, 1]])[0]);
        let sum: BigInt = degrees.iter().map(|d| d * d).sum();
        assert_eq!(sum, BigInt::from(24));
        for (alpha, d) in t.characters.iter().zip(&degrees) {
            assert_eq!(&degree(alpha), d);
        }
    }

    #[test]
    fn column_orthogonality_small() {
        for n in 0..=7 {
            let t = character_table(n);
            for a in 0..t.size() {
                for b in 0..t.size() {
                    let dot: BigInt = t.values.iter().map(|row| &row[a] * &row[b]).sum();
                    let expected = if a == b {
                        BigInt::from(t.centralizers[a].clone())
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(dot, expected, "n={n} columns {a},{b}");
                }
            }
        }
    }

    #[test]
    fn json_and_csv_shapes() {
        let t = character_table(3);
        let doc: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(doc["n"], 3);
        assert_eq!(doc["classes"][0], "1^3");
        assert_eq!(doc["characters"][1]["partition"], "2,1");
        assert_eq!(doc["characters"][1]["values"][2], "-1");
        let csv = t.to_csv();
        assert_eq!(csv.lines().next().unwrap(), "alpha,1^3,\"2,1\",3");
        assert_eq!(csv.lines().nth(2).unwrap(), "\"2,1\",2,0,-1");
        assert!(t.centralizers[0] > BigUint::one());
    }
}
