use std::fmt;
use std::sync::OnceLock;

use super::descriptor::{
    base_name, source_tag, Aggregation, Form, IndexDescriptor, KernelVariant, Transform, TransformKind,
};
use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::functionals::DegreeSource;

/// Indices outside the descriptor cross-product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecialIndex {
    Rl5,
    Rl6,
    Rl7,
    Rl8,
    Rl9,
    Rl10,
    Rl11,
    Rl12,
    Rl13,
    Rl14,
    Rl15,
    Rl16,
    Rl17,
    HeronianRl,
}

impl SpecialIndex {
    pub const ALL: [SpecialIndex; 14] = [
        SpecialIndex::Rl5,
        SpecialIndex::Rl6,
        SpecialIndex::Rl7,
        SpecialIndex::Rl8,
        SpecialIndex::Rl9,
        SpecialIndex::Rl10,
        SpecialIndex::Rl11,
        SpecialIndex::Rl12,
        SpecialIndex::Rl13,
        SpecialIndex::Rl14,
        SpecialIndex::Rl15,
        SpecialIndex::Rl16,
        SpecialIndex::Rl17,
        SpecialIndex::HeronianRl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpecialIndex::Rl5 => "RL_5",
            SpecialIndex::Rl6 => "RL_6",
            SpecialIndex::Rl7 => "RL_7",
            SpecialIndex::Rl8 => "RL_8",
            SpecialIndex::Rl9 => "RL_9",
            SpecialIndex::Rl10 => "RL_10",
            SpecialIndex::Rl11 => "RL_11",
            SpecialIndex::Rl12 => "RL_12",
            SpecialIndex::Rl13 => "RL_13",
            SpecialIndex::Rl14 => "RL_14",
            SpecialIndex::Rl15 => "RL_15",
            SpecialIndex::Rl16 => "RL_16",
            SpecialIndex::Rl17 => "RL_17",
            SpecialIndex::HeronianRl => "HeronianRL",
        }
    }

    /// The vertex quantity the index is built from.
    pub fn basis(self) -> &'static str {
        match self {
            SpecialIndex::Rl5 | SpecialIndex::Rl6 | SpecialIndex::HeronianRl => "plain",
            SpecialIndex::Rl7
            | SpecialIndex::Rl8
            | SpecialIndex::Rl9
            | SpecialIndex::Rl10
            | SpecialIndex::Rl11
            | SpecialIndex::Rl12 => "closeness",
            _ => "cl",
        }
    }

    /// Per-edge term in terms of the endpoint values `a`, `b`.
    pub fn formula(self) -> &'static str {
        match self {
            SpecialIndex::Rl5 => "min(a,b)^max(a,b)",
            SpecialIndex::Rl6 => "a^b+b^a",
            SpecialIndex::Rl7 | SpecialIndex::Rl13 => "a+b",
            SpecialIndex::Rl8 | SpecialIndex::Rl14 => "a*b",
            SpecialIndex::Rl9 | SpecialIndex::Rl15 => "a^2+b^2",
            SpecialIndex::Rl10 | SpecialIndex::Rl16 => "sqrt(a^2+b^2)",
            SpecialIndex::Rl11 | SpecialIndex::Rl17 => "sqrt(a+b)",
            SpecialIndex::Rl12 => "|a-b|",
            SpecialIndex::HeronianRl => "a+sqrt(a*b)+b",
        }
    }
}

impl fmt::Display for SpecialIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A resolved index name.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndexSpec {
    Descriptor(IndexDescriptor),
    Special(SpecialIndex),
}

impl IndexSpec {
    pub fn name(&self) -> String {
        match self {
            IndexSpec::Descriptor(d) => d.name(),
            IndexSpec::Special(s) => s.name().to_string(),
        }
    }

    /// Replaces the degree source of a descriptor; specials are unchanged.
    pub fn with_source(&self, source: DegreeSource) -> IndexSpec {
        match self {
            IndexSpec::Descriptor(d) => IndexSpec::Descriptor(d.with_source(source)),
            IndexSpec::Special(s) => IndexSpec::Special(*s),
        }
    }
}

impl fmt::Display for IndexSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A catalog entry; general-power entries take their exponent at resolution time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegistryEntry {
    pub name: String,
    pub source: DegreeSource,
    pub variant: KernelVariant,
    pub transform: TransformKind,
    pub aggregation: Aggregation,
    pub form: Form,
}

impl RegistryEntry {
    pub fn descriptor(&self, power: Option<&Rat>) -> Result<IndexDescriptor> {
        let transform = Transform::from_kind(self.transform, power.cloned())
            .ok_or_else(|| Error::MissingPower(self.name.clone()))?;
        Ok(IndexDescriptor::new(self.source, self.variant, transform, self.aggregation, self.form))
    }
}

/// All 448 catalog entries in a fixed order.
pub fn registry() -> &'static [RegistryEntry] {
    static REGISTRY: OnceLock<Vec<RegistryEntry>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut out = Vec::with_capacity(448);
        for source in DegreeSource::ALL {
            for aggregation in [Aggregation::Sum, Aggregation::Product] {
                for transform in TransformKind::ALL {
                    for form in [Form::Value, Form::Exponential] {
                        for variant in KernelVariant::ALL {
                            let mut name = base_name(source, variant, transform, aggregation);
                            if form == Form::Exponential {
                                name.push_str("(x)");
                            }
                            out.push(RegistryEntry { name, source, variant, transform, aggregation, form });
                        }
                    }
                }
            }
        }
        out
    })
}

fn normalize(s: &str) -> String {
    s.chars().filter(|c| !matches!(c, '_' | ' ')).collect::<String>().to_ascii_uppercase()
}

fn unknown(name: &str) -> Error {
    let key = normalize(name.split('(').next().unwrap_or(name));
    let candidates = registry()
        .iter()
        .filter(|e| e.form == Form::Value)
        .map(|e| e.name.clone())
        .chain(SpecialIndex::ALL.iter().map(|s| s.name().to_string()));
    let suggestion = candidates
        .map(|c| (strsim::levenshtein(&key, &normalize(&c)), c))
        .min()
        .map(|(_, c)| c);
    Error::UnknownIndexName { name: name.to_string(), suggestion }
}

/// Resolves a name such as `HBRL_2`, `mirrl1`, `RL_3(x)`, `GRL_1(a=3)` or `HeronianRL`.
///
/// General-power names without an explicit `a=` take `default_power`.
pub fn lookup(name: &str, default_power: Option<&Rat>) -> Result<IndexSpec> {
    let trimmed = name.trim();
    let (base, args) = match trimmed.split_once('(') {
        Some((b, rest)) => {
            let inner = rest.strip_suffix(')').ok_or_else(|| unknown(name))?;
            (b, Some(inner))
        }
        None => (trimmed, None),
    };
    let mut exponential = false;
    let mut power: Option<Rat> = None;
    for arg in args.into_iter().flat_map(|a| a.split(',')) {
        let arg = arg.trim();
        if arg.eq_ignore_ascii_case("x") {
            exponential = true;
        } else if let Some(v) = arg.strip_prefix("a=").or_else(|| arg.strip_prefix("A=")) {
            power = Some(v.trim().parse().map_err(|_| unknown(name))?);
        } else {
            return Err(unknown(name));
        }
    }
    let key = normalize(base);

    if !exponential && power.is_none() {
        if key == "HRL" || key == "HERONIANRL" {
            return Ok(IndexSpec::Special(SpecialIndex::HeronianRl));
        }
        if let Some(s) = SpecialIndex::ALL.iter().find(|s| normalize(s.name()) == key) {
            return Ok(IndexSpec::Special(*s));
        }
    }

    let digits = key.len() - key.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (head, k) = key.split_at(key.len() - digits);
    let variant = k
        .parse::<u8>()
        .ok()
        .and_then(KernelVariant::from_number)
        .ok_or_else(|| unknown(name))?;
    let (aggregation, head) = match head.strip_prefix('M') {
        Some(rest) => (Aggregation::Product, rest),
        None => (Aggregation::Sum, head),
    };
    let (transform, head) = match head.chars().next() {
        Some('H') => (TransformKind::Hyper, &head[1..]),
        Some('I') => (TransformKind::Inverse, &head[1..]),
        Some('G') => (TransformKind::General, &head[1..]),
        _ => (TransformKind::Identity, head),
    };
    let source = DegreeSource::ALL
        .into_iter()
        .find(|s| source_tag(*s) == head)
        .ok_or_else(|| unknown(name))?;
    if transform != TransformKind::General && power.is_some() {
        return Err(unknown(name));
    }
    let form = if exponential { Form::Exponential } else { Form::Value };
    let power = power.or_else(|| default_power.cloned());
    let canonical = base_name(source, variant, transform, aggregation);
    let transform = Transform::from_kind(transform, power).ok_or(Error::MissingPower(canonical))?;
    Ok(IndexSpec::Descriptor(IndexDescriptor::new(source, variant, transform, aggregation, form)))
}

/// `lookup` without a default power.
pub fn registry_lookup(name: &str) -> Result<IndexSpec> {
    lookup(name, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn desc(name: &str) -> IndexDescriptor {
        match registry_lookup(name).unwrap() {
            IndexSpec::Descriptor(d) => d,
            other => panic!("{name} resolved to {other:?}"),
        }
    }

    #[test]
    fn registry_is_total() {
        let r = registry();
        assert_eq!(r.len(), 448);
        let mut names: Vec<&str> = r.iter().map(|e| e.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), 448);
        for e in r {
            let d = match lookup(&e.name, Some(&Rat::from(2))).unwrap() {
                IndexSpec::Descriptor(d) => d,
                _ => unreachable!(),
            };
            assert_eq!(d.source, e.source);
            assert_eq!(d.variant, e.variant);
            assert_eq!(d.transform.kind(), e.transform);
            assert_eq!(d.aggregation, e.aggregation);
            assert_eq!(d.form, e.form);
        }
    }

    #[test]
    fn lookup_examples() {
        let d = desc("HBRL_2");
        assert_eq!(
            (d.source, d.variant, d.transform, d.aggregation, d.form),
            (DegreeSource::Banhatti, KernelVariant::V2, Transform::Hyper, Aggregation::Sum, Form::Value)
        );
        let d = desc("MIRRL_1");
        assert_eq!(
            (d.source, d.variant, d.transform, d.aggregation, d.form),
            (DegreeSource::Revan, KernelVariant::V1, Transform::Inverse, Aggregation::Product, Form::Value)
        );
        assert!(matches!(registry_lookup("bogus"), Err(Error::UnknownIndexName { .. })));
    }

    #[test]
    fn grammar() {
        assert_eq!(desc("rl1"), desc("RL_1"));
        assert_eq!(desc("RL_3(x)").form, Form::Exponential);
        assert_eq!(desc("GRL_1(a=3)").transform, Transform::General(Rat::from(3)));
        let d = desc("MGRLKV_4(x, a=0.5)");
        assert_eq!(d.transform, Transform::General(Rat::new(1, 2).unwrap()));
        assert_eq!(d.form, Form::Exponential);
        assert_eq!(d.name(), "MGRLKV_4(x,a=1/2)");
        assert_eq!(registry_lookup("GRL_1"), Err(Error::MissingPower("GRL_1".into())));
        assert!(registry_lookup("RL_1(a=2)").is_err());
        assert!(registry_lookup("RL_5(x)").is_err());
        assert!(registry_lookup("BRL_5").is_err());
    }

    #[test]
    fn specials() {
        assert_eq!(registry_lookup("RL5").unwrap(), IndexSpec::Special(SpecialIndex::Rl5));
        assert_eq!(registry_lookup("rl_17").unwrap(), IndexSpec::Special(SpecialIndex::Rl17));
        assert_eq!(registry_lookup("HRL").unwrap(), IndexSpec::Special(SpecialIndex::HeronianRl));
        assert_eq!(desc("HRL_1").transform, Transform::Hyper);
    }

    #[test]
    fn suggestion() {
        match registry_lookup("HBRL_9") {
            Err(Error::UnknownIndexName { suggestion: Some(s), .. }) => assert!(s.starts_with("HBRL_")),
            other => panic!("{other:?}"),
        }
    }
}
