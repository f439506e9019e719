//! JSON and TSV encodings.
//!
//! Coefficients are rational strings (`"3"`, `"-1/2"`). Words are encoded
//! per algebra kind: in `T(V)` a word is its list of 1-based letters
//! (`v1v2` is `[1, 2]`); in the nil-2 algebra it is the exponent vector over
//! `x_1..x_d, z_12, z_13, …` (`x1^2 z12` with `d = 2` is `[2, 0, 1]`).

use serde::{Deserialize, Serialize};

use hopfaut_core::cokertab::ObstructionEntry;
use hopfaut_core::hopf::{AlgebraElement, AlgebraKind, HopfDescriptor, HopfError, TensorElement, Word};
use hopfaut_core::symfunc::{Partition, SchurPoly};
use hopfaut_core::Rational;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("unknown algebra kind `{0}`")]
    Kind(String),
    #[error("bad coefficient `{0}`")]
    Coefficient(String),
    #[error("letter {0} out of range")]
    Letter(u32),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptorJson {
    pub kind: String,
    pub dim: usize,
    pub truncation: usize,
}

impl DescriptorJson {
    pub fn of(desc: HopfDescriptor) -> Self {
        let kind = if desc.is_nil2() { "nil2" } else { "tensor" };
        DescriptorJson { kind: kind.into(), dim: desc.dim_v(), truncation: desc.truncation() }
    }

    pub fn descriptor(&self) -> Result<HopfDescriptor, FormatError> {
        match self.kind.as_str() {
            "tensor" => Ok(HopfDescriptor::tensor(self.dim, self.truncation)?),
            "nil2" => Ok(HopfDescriptor::nil2(self.dim, self.truncation)?),
            other => Err(FormatError::Kind(other.into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub word: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub descriptor: DescriptorJson,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTermJson {
    pub coeff: String,
    pub words: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorJson {
    pub descriptor: DescriptorJson,
    pub arity: usize,
    pub terms: Vec<TensorTermJson>,
}

fn encode_word(desc: HopfDescriptor, w: &Word) -> Vec<u32> {
    match desc.kind() {
        AlgebraKind::Tensor { .. } => w.0.iter().map(|l| u32::from(*l) + 1).collect(),
        AlgebraKind::EnvelopingNil2 { .. } => w.0.iter().map(|e| u32::from(*e)).collect(),
    }
}

fn decode_word(desc: HopfDescriptor, w: &[u32]) -> Result<Word, FormatError> {
    let bytes = match desc.kind() {
        AlgebraKind::Tensor { .. } => w
            .iter()
            .map(|l| match l.checked_sub(1).and_then(|x| u8::try_from(x).ok()) {
                Some(x) => Ok(x),
                None => Err(FormatError::Letter(*l)),
            })
            .collect::<Result<Vec<u8>, _>>()?,
        AlgebraKind::EnvelopingNil2 { .. } => {
            w.iter().map(|e| u8::try_from(*e).map_err(|_| FormatError::Letter(*e))).collect::<Result<Vec<u8>, _>>()?
        }
    };
    let word = Word(bytes);
    desc.validate_word(&word)?;
    Ok(word)
}

fn coefficient(s: &str) -> Result<Rational, FormatError> {
    s.parse().map_err(|_| FormatError::Coefficient(s.into()))
}

fn sorted_terms(desc: HopfDescriptor, t: &TensorElement) -> Vec<(&Vec<Word>, &Rational)> {
    let mut terms: Vec<_> = t.terms().iter().collect();
    terms.sort_by(|a, b| {
        a.0.iter().zip(b.0.iter()).fold(std::cmp::Ordering::Equal, |acc, (x, y)| acc.then_with(|| desc.display_cmp(x, y)))
    });
    terms
}

impl AlgebraJson {
    pub fn of(a: &AlgebraElement) -> Self {
        let desc = a.descriptor();
        let mut terms: Vec<_> = a.terms().iter().collect();
        terms.sort_by(|x, y| desc.display_cmp(x.0, y.0));
        AlgebraJson {
            descriptor: DescriptorJson::of(desc),
            terms: terms.into_iter().map(|(w, c)| TermJson { coeff: c.to_string(), word: encode_word(desc, w) }).collect(),
        }
    }

    pub fn element(&self) -> Result<AlgebraElement, FormatError> {
        let desc = self.descriptor.descriptor()?;
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((decode_word(desc, &t.word)?, coefficient(&t.coeff)?)))
            .collect::<Result<Vec<_>, FormatError>>()?;
        Ok(AlgebraElement::from_terms(desc, terms)?)
    }
}

impl TensorJson {
    pub fn of(t: &TensorElement) -> Self {
        let desc = t.descriptor();
        TensorJson {
            descriptor: DescriptorJson::of(desc),
            arity: t.arity(),
            terms: sorted_terms(desc, t)
                .into_iter()
                .map(|(ws, c)| TensorTermJson { coeff: c.to_string(), words: ws.iter().map(|w| encode_word(desc, w)).collect() })
                .collect(),
        }
    }

    pub fn element(&self) -> Result<TensorElement, FormatError> {
        let desc = self.descriptor.descriptor()?;
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let ws = t.words.iter().map(|w| decode_word(desc, w)).collect::<Result<Vec<_>, _>>()?;
                Ok((ws, coefficient(&t.coeff)?))
            })
            .collect::<Result<Vec<_>, FormatError>>()?;
        Ok(TensorElement::from_terms(desc, self.arity, terms)?)
    }
}

/// TSV rows `coeff<TAB>factor_1<TAB>…` with a header.
pub fn tensor_tsv(t: &TensorElement) -> String {
    let desc = t.descriptor();
    let mut out = String::from("coeff");
    for i in 1..=t.arity() {
        out.push_str(&format!("\tfactor{i}"));
    }
    out.push('\n');
    for (ws, c) in sorted_terms(desc, t) {
        out.push_str(&c.to_string());
        for w in ws {
            out.push('\t');
            out.push_str(&desc.format_word(w));
        }
        out.push('\n');
    }
    out
}

pub fn algebra_tsv(a: &AlgebraElement) -> String {
    tensor_tsv(&TensorElement::from_algebra(a))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurTermJson {
    pub lambda: Vec<u32>,
    pub mult: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurJson {
    pub terms: Vec<SchurTermJson>,
}

impl SchurJson {
    pub fn of(p: &SchurPoly) -> Self {
        SchurJson { terms: p.terms().iter().map(|(l, c)| SchurTermJson { lambda: l.parts().to_vec(), mult: *c }).collect() }
    }

    pub fn poly(&self) -> SchurPoly {
        SchurPoly::from_terms(self.terms.iter().map(|t| (Partition::new(t.lambda.clone()), t.mult)))
    }
}

pub fn schur_tsv(p: &SchurPoly) -> String {
    let mut out = String::from("lambda\tmult\n");
    for (l, c) in p.terms() {
        out.push_str(&format!("{}\t{c}\n", partition_text(l)));
    }
    out
}

/// `2,1,1` (empty string for the empty partition).
pub fn partition_text(l: &Partition) -> String {
    l.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionJson {
    pub cokernel_degree: usize,
    pub lambda: Vec<u32>,
    pub form_kind: String,
    pub weight: u32,
    pub multiplicity: u64,
    pub module_degree: usize,
}

impl ObstructionJson {
    pub fn of(e: &ObstructionEntry) -> Self {
        ObstructionJson {
            cokernel_degree: e.cokernel_degree,
            lambda: e.lambda.parts().to_vec(),
            form_kind: e.form_kind.to_string(),
            weight: e.weight,
            multiplicity: e.multiplicity,
            module_degree: e.module_degree,
        }
    }
}

pub const TABLE_COLUMNS: [&str; 6] = ["cokernel_degree", "lambda", "form_kind", "weight", "multiplicity", "module_degree"];

pub fn table_tsv(entries: &[ObstructionEntry]) -> String {
    let mut out = TABLE_COLUMNS.join("\t");
    out.push('\n');
    for e in entries {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            e.cokernel_degree,
            partition_text(&e.lambda),
            e.form_kind,
            e.weight,
            e.multiplicity,
            e.module_degree
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_element, parse_tensor};

    #[test]
    fn algebra_roundtrip() {
        for desc in [HopfDescriptor::tensor(2, 5).unwrap(), HopfDescriptor::nil2(3, 5).unwrap()] {
            let a = parse_element(desc, "3 - 1/2*x1x2 + x2 x1 x1").unwrap();
            let json = serde_json::to_string(&AlgebraJson::of(&a)).unwrap();
            let back: AlgebraJson = serde_json::from_str(&json).unwrap();
            assert_eq!(back.element().unwrap(), a);
        }
    }

    #[test]
    fn word_encodings() {
        let u = HopfDescriptor::nil2(2, 5).unwrap();
        let j = AlgebraJson::of(&parse_element(u, "x1^2 z12").unwrap());
        assert_eq!(j.terms, [TermJson { coeff: "1".into(), word: vec![2, 0, 1] }]);
        let t = HopfDescriptor::tensor(2, 5).unwrap();
        let j = AlgebraJson::of(&parse_element(t, "-2*v2v1").unwrap());
        assert_eq!(j.terms, [TermJson { coeff: "-2".into(), word: vec![2, 1] }]);
        assert_eq!(
            serde_json::to_string(&j.descriptor).unwrap(),
            r#"{"kind":"tensor","dim":2,"truncation":5}"#
        );
    }

    #[test]
    fn tensor_roundtrip_and_tsv() {
        let desc = HopfDescriptor::tensor(2, 5).unwrap();
        let t = parse_tensor(desc, "v1 ⊗ v2 - 2*1 ⊗ v1v1").unwrap();
        let back: TensorJson = serde_json::from_str(&serde_json::to_string(&TensorJson::of(&t)).unwrap()).unwrap();
        assert_eq!(back.element().unwrap(), t);
        assert_eq!(tensor_tsv(&t), "coeff\tfactor1\tfactor2\n-2\t1\tv1v1\n1\tv1\tv2\n");
    }

    #[test]
    fn bad_json() {
        let j = AlgebraJson {
            descriptor: DescriptorJson { kind: "tensor".into(), dim: 2, truncation: 3 },
            terms: vec![TermJson { coeff: "1".into(), word: vec![0] }],
        };
        assert!(matches!(j.element(), Err(FormatError::Letter(0))));
        let j = AlgebraJson { descriptor: DescriptorJson { kind: "lie".into(), dim: 2, truncation: 3 }, terms: vec![] };
        assert!(matches!(j.element(), Err(FormatError::Kind(_))));
    }

    #[test]
    fn schur_roundtrip() {
        let p = SchurPoly::from_terms([("2,1".parse().unwrap(), 2), ("1,1,1".parse().unwrap(), 1)]);
        let j = SchurJson::of(&p);
        assert_eq!(serde_json::to_string(&j).unwrap(), r#"{"terms":[{"lambda":[2,1],"mult":2},{"lambda":[1,1,1],"mult":1}]}"#);
        assert_eq!(j.poly(), p);
        assert_eq!(schur_tsv(&p), "lambda\tmult\n2,1\t2\n1,1,1\t1\n");
    }
}
