use std::fmt;

use crate::exactnum::Rat;
use crate::functionals::DegreeSource;

/// The four per-edge forms applied to endpoint values `a`, `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KernelVariant {
    /// `a² + b² + ab`
    V1,
    /// `a² + b² − ab`
    V2,
    /// `(a − b) + ab` with `a` the larger endpoint value
    V3,
    /// `|a − b|·ab`
    V4,
}

impl KernelVariant {
    pub const ALL: [KernelVariant; 4] = [KernelVariant::V1, KernelVariant::V2, KernelVariant::V3, KernelVariant::V4];

    pub fn number(self) -> u8 {
        match self {
            KernelVariant::V1 => 1,
            KernelVariant::V2 => 2,
            KernelVariant::V3 => 3,
            KernelVariant::V4 => 4,
        }
    }

    pub fn from_number(k: u8) -> Option<KernelVariant> {
        KernelVariant::ALL.get(usize::from(k).checked_sub(1)?).copied()
    }

    pub fn apply(self, a: &Rat, b: &Rat) -> Rat {
        match self {
            KernelVariant::V1 => a * a + b * b + a * b,
            KernelVariant::V2 => a * a + b * b - a * b,
            KernelVariant::V3 => {
                let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
                hi - lo + hi * lo
            }
            KernelVariant::V4 => (a - b).abs() * a * b,
        }
    }
}

impl fmt::Display for KernelVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{}", self.number())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TransformKind {
    Identity,
    Hyper,
    Inverse,
    General,
}

impl TransformKind {
    pub const ALL: [TransformKind; 4] =
        [TransformKind::Identity, TransformKind::Hyper, TransformKind::Inverse, TransformKind::General];

    pub fn prefix(self) -> &'static str {
        match self {
            TransformKind::Identity => "",
            TransformKind::Hyper => "H",
            TransformKind::Inverse => "I",
            TransformKind::General => "G",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TransformKind::Identity => "identity",
            TransformKind::Hyper => "hyper",
            TransformKind::Inverse => "inverse",
            TransformKind::General => "general",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Transform {
    Identity,
    /// Square of the kernel.
    Hyper,
    /// Reciprocal of the kernel.
    Inverse,
    /// Kernel raised to `a`.
    General(Rat),
}

impl Transform {
    pub fn kind(&self) -> TransformKind {
        match self {
            Transform::Identity => TransformKind::Identity,
            Transform::Hyper => TransformKind::Hyper,
            Transform::Inverse => TransformKind::Inverse,
            Transform::General(_) => TransformKind::General,
        }
    }

    pub fn from_kind(kind: TransformKind, power: Option<Rat>) -> Option<Transform> {
        Some(match kind {
            TransformKind::Identity => Transform::Identity,
            TransformKind::Hyper => Transform::Hyper,
            TransformKind::Inverse => Transform::Inverse,
            TransformKind::General => Transform::General(power?),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Aggregation {
    Sum,
    Product,
}

impl Aggregation {
    pub fn name(self) -> &'static str {
        match self {
            Aggregation::Sum => "sum",
            Aggregation::Product => "product",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Form {
    Value,
    Exponential,
}

impl Form {
    pub fn name(self) -> &'static str {
        match self {
            Form::Value => "value",
            Form::Exponential => "exponential",
        }
    }
}

/// One cell of the index catalog.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexDescriptor {
    pub source: DegreeSource,
    pub variant: KernelVariant,
    pub transform: Transform,
    pub aggregation: Aggregation,
    pub form: Form,
}

pub(crate) fn source_tag(s: DegreeSource) -> &'static str {
    match s {
        DegreeSource::Plain => "RL",
        DegreeSource::Banhatti => "BRL",
        DegreeSource::Revan => "RRL",
        DegreeSource::Domination => "DRL",
        DegreeSource::Temperature => "TRL",
        DegreeSource::Kv => "RLKV",
        DegreeSource::NbdSum => "NRL",
    }
}

pub(crate) fn base_name(
    source: DegreeSource,
    variant: KernelVariant,
    transform: TransformKind,
    aggregation: Aggregation,
) -> String {
    format!(
        "{}{}{}_{}",
        if aggregation == Aggregation::Product { "M" } else { "" },
        transform.prefix(),
        source_tag(source),
        variant.number()
    )
}

impl IndexDescriptor {
    pub fn new(
        source: DegreeSource,
        variant: KernelVariant,
        transform: Transform,
        aggregation: Aggregation,
        form: Form,
    ) -> IndexDescriptor {
        IndexDescriptor { source, variant, transform, aggregation, form }
    }

    /// Sum, value form, identity transform.
    pub fn basic(source: DegreeSource, variant: KernelVariant) -> IndexDescriptor {
        IndexDescriptor::new(source, variant, Transform::Identity, Aggregation::Sum, Form::Value)
    }

    pub fn with_source(&self, source: DegreeSource) -> IndexDescriptor {
        IndexDescriptor { source, ..self.clone() }
    }

    pub fn with_form(&self, form: Form) -> IndexDescriptor {
        IndexDescriptor { form, ..self.clone() }
    }

    pub fn with_transform(&self, transform: Transform) -> IndexDescriptor {
        IndexDescriptor { transform, ..self.clone() }
    }

    /// Canonical registry name, e.g. `MHRRL_2`, `RL_1(x)`, `GBRL_3(a=1/2)`.
    pub fn name(&self) -> String {
        let mut s = base_name(self.source, self.variant, self.transform.kind(), self.aggregation);
        let mut args = Vec::new();
        if self.form == Form::Exponential {
            args.push("x".to_string());
        }
        if let Transform::General(a) = &self.transform {
            args.push(format!("a={}", render_power(a)));
        }
        if !args.is_empty() {
            s.push('(');
            s.push_str(&args.join(","));
            s.push(')');
        }
        s
    }
}

pub(crate) fn render_power(a: &Rat) -> String {
    if a.is_integer() {
        a.numer().to_string()
    } else {
        a.to_string()
    }
}

impl fmt::Display for IndexDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rat {
        Rat::from(n)
    }

    #[test]
    fn kernels() {
        assert_eq!(KernelVariant::V1.apply(&q(2), &q(2)), q(12));
        assert_eq!(KernelVariant::V2.apply(&q(3), &q(5)), q(19));
        assert_eq!(KernelVariant::V3.apply(&q(3), &q(5)), q(17));
        assert_eq!(KernelVariant::V3.apply(&q(5), &q(3)), q(17));
        assert_eq!(KernelVariant::V4.apply(&q(3), &q(5)), q(30));
        assert_eq!(KernelVariant::V4.apply(&q(4), &q(4)), q(0));
    }

    #[test]
    fn names() {
        let d = IndexDescriptor::new(
            DegreeSource::Revan,
            KernelVariant::V2,
            Transform::Hyper,
            Aggregation::Product,
            Form::Value,
        );
        assert_eq!(d.name(), "MHRRL_2");
        let g = IndexDescriptor::new(
            DegreeSource::Kv,
            KernelVariant::V3,
            Transform::General(Rat::new(1, 2).unwrap()),
            Aggregation::Sum,
            Form::Exponential,
        );
        assert_eq!(g.name(), "GRLKV_3(x,a=1/2)");
    }
}
