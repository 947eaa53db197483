use std::fmt;

use serde::de::{self, MapAccess, Visitor};
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{AxiomId, ModelId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Exhaustive,
    Sampled { seed: u64, samples: usize },
}

impl Serialize for Strategy {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Strategy", 3)?;
        match self {
            Strategy::Exhaustive => {
                s.serialize_field("type", "exhaustive")?;
                s.serialize_field("seed", &None::<u64>)?;
                s.serialize_field("samples", &None::<usize>)?;
            }
            Strategy::Sampled { seed, samples } => {
                s.serialize_field("type", "sampled")?;
                s.serialize_field("seed", seed)?;
                s.serialize_field("samples", samples)?;
            }
        }
        s.end()
    }
}

#[derive(Deserialize)]
struct RawStrategy {
    #[serde(rename = "type")]
    kind: String,
    seed: Option<u64>,
    samples: Option<usize>,
}

impl<'de> Deserialize<'de> for Strategy {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawStrategy::deserialize(deserializer)?;
        match (raw.kind.as_str(), raw.seed, raw.samples) {
            ("exhaustive", None, None) => Ok(Strategy::Exhaustive),
            ("sampled", Some(seed), Some(samples)) => Ok(Strategy::Sampled { seed, samples }),
            _ => Err(de::Error::custom("malformed strategy")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Holds,
    HoldsOnSample,
    Fails,
    Unsupported,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "Holds",
            Status::HoldsOnSample => "HoldsOnSample",
            Status::Fails => "Fails",
            Status::Unsupported => "Unsupported",
        })
    }
}

/// Named roles of a witness, each bound to a literal, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Witness(pub Vec<(String, String)>);

impl Witness {
    pub fn reason(text: impl Into<String>) -> Self {
        Witness(vec![("reason".to_string(), text.into())])
    }

    pub fn push(&mut self, role: &str, value: impl fmt::Display) {
        self.0.push((role.to_string(), value.to_string()));
    }

    pub fn get(&self, role: &str) -> Option<&str> {
        self.0
            .iter()
            .find(|(r, _)| r == role)
            .map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (role, value)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{role}={value}")?;
        }
        Ok(())
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (role, value) in &self.0 {
            map.serialize_entry(role, value)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Witness {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct OrderedEntries;

        impl<'de> Visitor<'de> for OrderedEntries {
            type Value = Witness;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from roles to literals")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Witness, A::Error> {
                let mut entries = Vec::new();
                while let Some(entry) = access.next_entry::<String, String>()? {
                    entries.push(entry);
                }
                Ok(Witness(entries))
            }
        }

        deserializer.deserialize_map(OrderedEntries)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub model: ModelId,
    pub axiom: AxiomId,
    pub strategy: Strategy,
    pub status: Status,
    pub witness: Option<Witness>,
    pub elapsed_ms: u64,
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.model, self.axiom, self.status)?;
        if let Some(w) = &self.witness {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}
