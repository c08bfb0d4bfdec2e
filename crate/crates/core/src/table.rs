//! The table file format shared with the command line:
//! `{name, order, elements, table, generators?}` as JSON, written one table
//! row per line so files diff well and rewrite byte for byte.

use serde::{Deserialize, Serialize};

use crate::quandle::{FiniteQuandle, QuandleError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub name: String,
    pub order: usize,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<usize>>,
}

#[derive(Debug, thiserror::Error)]
pub enum TableError {
    #[error("malformed table file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("`order` is {order} but the table has {rows} rows")]
    OrderMismatch { order: usize, rows: usize },
    #[error(transparent)]
    Quandle(#[from] QuandleError),
}

impl TableFile {
    pub fn from_quandle(q: &FiniteQuandle) -> Self {
        TableFile {
            name: q.name().to_string(),
            order: q.order(),
            elements: q.labels().to_vec(),
            table: q.rows(),
            generators: q.generators().map(|g| g.to_vec()),
        }
    }

    /// Validates the shape and the quandle axioms.
    pub fn to_quandle(&self) -> Result<FiniteQuandle, TableError> {
        if self.order != self.table.len() {
            return Err(TableError::OrderMismatch {
                order: self.order,
                rows: self.table.len(),
            });
        }
        let q = FiniteQuandle::verified(self.name.clone(), self.elements.clone(), &self.table)?;
        Ok(match &self.generators {
            Some(g) => q.with_generators(g.clone())?,
            None => q,
        })
    }

    pub fn parse(text: &str) -> Result<Self, TableError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Canonical text: fixed key order, one row per line, trailing newline.
    pub fn write(&self) -> String {
        let mut out = String::from("{\n");
        out += &format!("  \"name\": {},\n", json(&self.name));
        out += &format!("  \"order\": {},\n", self.order);
        out += &format!("  \"elements\": {},\n", json(&self.elements));
        out += "  \"table\": [";
        for (i, row) in self.table.iter().enumerate() {
            out += if i == 0 { "\n    " } else { ",\n    " };
            out += &json(row);
        }
        out += if self.table.is_empty() { "]" } else { "\n  ]" };
        if let Some(g) = &self.generators {
            out += &format!(",\n  \"generators\": {}", json(g));
        }
        out += "\n}\n";
        out
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::dihedral_quandle;

    #[test]
    fn canonical_layout() {
        let q = dihedral_quandle(3)
            .unwrap()
            .with_generators(vec![0, 1])
            .unwrap();
        let text = TableFile::from_quandle(&q).write();
        let expected = format!(
            "{{\n  \"name\": {},\n  \"order\": 3,\n  \"elements\": [\"0\",\"1\",\"2\"],\n  \"table\": [\n    [0,2,1],\n    [2,1,0],\n    [1,0,2]\n  ],\n  \"generators\": [0,1]\n}}\n",
            serde_json::to_string(q.name()).unwrap()
        );
        assert_eq!(text, expected);
    }

    #[test]
    fn round_trip_is_exact() {
        let q = dihedral_quandle(5)
            .unwrap()
            .with_name("with \"quotes\" and ∗");
        let file = TableFile::from_quandle(&q);
        let text = file.write();
        let back = TableFile::parse(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.write(), text);
        assert_eq!(back.to_quandle().unwrap().rows(), q.rows());
    }

    #[test]
    fn rejects_bad_tables() {
        let mut file = TableFile::from_quandle(&dihedral_quandle(3).unwrap());
        file.order = 4;
        assert!(matches!(
            file.to_quandle(),
            Err(TableError::OrderMismatch { .. })
        ));
        file.order = 3;
        file.table[0][0] = 1;
        assert!(matches!(file.to_quandle(), Err(TableError::Quandle(_))));
        assert!(TableFile::parse("{\"name\": 3}").is_err());
    }
}
