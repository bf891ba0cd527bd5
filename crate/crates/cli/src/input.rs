use std::fs;
use std::io::{self, Read};
use std::path::Path;

use isometry_intervals::json::{ElementJson, IsometryJson, SubspaceJson};
use isometry_intervals::{inv_map, Isometry, LinearSubspace, PosetContext, PosetElement};
use serde::de::DeserializeOwned;
use serde::Deserialize;

/// A failed run; the variant fixes the exit code.
#[derive(Debug)]
pub enum Failure {
    /// Unreadable input, malformed JSON, bad flags.
    Parse(String),
    /// The isometry is not an isometry.
    Isometry(String),
    /// Poset elements, contexts or chains that do not fit together.
    Poset(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 1,
            Failure::Isometry(_) => 2,
            Failure::Poset(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Isometry(m) | Failure::Poset(m) => m,
        }
    }
}

pub fn poset_err(e: isometry_intervals::Error) -> Failure {
    Failure::Poset(e.to_string())
}

/// Contents of `path`, or stdin when absent or `-`.
pub fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| Failure::Parse(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| Failure::Parse(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Parse(format!("invalid input: {e}")))
}

pub fn check_dim(expected: Option<usize>, found: usize) -> Result<(), Failure> {
    match expected {
        Some(n) if n != found => Err(Failure::Parse(format!("--dim {n} does not match input dimension {found}"))),
        _ => Ok(()),
    }
}

pub fn isometry(j: &IsometryJson, dim: Option<usize>) -> Result<Isometry, Failure> {
    let j = match (j, dim) {
        (IsometryJson::Reflections { dim: None, reflections }, Some(n)) => {
            IsometryJson::Reflections { dim: Some(n), reflections: reflections.clone() }
        }
        _ => j.clone(),
    };
    let w = Isometry::try_from(&j).map_err(|e| Failure::Isometry(e.to_string()))?;
    check_dim(dim, w.dim())?;
    Ok(w)
}

pub fn element(j: &ElementJson) -> Result<PosetElement, Failure> {
    PosetElement::try_from(j).map_err(poset_err)
}

pub fn elements(js: &[ElementJson]) -> Result<Vec<PosetElement>, Failure> {
    js.iter().map(element).collect()
}

pub fn subspace(j: &SubspaceJson) -> Result<LinearSubspace, Failure> {
    LinearSubspace::try_from(j).map_err(poset_err)
}

/// Input of the poset commands: a context given by its top or by an
/// isometry `w` (top `inv(w)`), plus whatever operands the command reads.
#[derive(Debug, Deserialize)]
pub struct PosetDoc {
    pub top: Option<ElementJson>,
    pub isometry: Option<IsometryJson>,
    #[serde(default)]
    pub augmented: bool,
    pub p: Option<ElementJson>,
    pub q: Option<ElementJson>,
    pub elements: Option<Vec<ElementJson>>,
    #[serde(rename = "U")]
    pub u: Option<SubspaceJson>,
}

impl PosetDoc {
    pub fn has_context(&self) -> bool {
        self.top.is_some() || self.isometry.is_some()
    }

    pub fn context(&self, augmented: bool, dim: Option<usize>) -> Result<PosetContext, Failure> {
        let top = match (&self.top, &self.isometry) {
            (Some(t), None) => element(t)?,
            (None, Some(w)) => inv_map(&isometry(w, dim)?),
            (Some(_), Some(_)) => return Err(Failure::Parse("give either \"top\" or \"isometry\", not both".into())),
            (None, None) => return Err(Failure::Parse("missing \"top\" or \"isometry\"".into())),
        };
        check_dim(dim, top.ambient())?;
        PosetContext::new(top, augmented || self.augmented).map_err(poset_err)
    }

    pub fn operand(&self, name: &str) -> Result<PosetElement, Failure> {
        let j = match name {
            "p" => &self.p,
            _ => &self.q,
        };
        element(j.as_ref().ok_or_else(|| Failure::Parse(format!("missing \"{name}\"")))?)
    }

    pub fn element_list(&self) -> Result<Vec<PosetElement>, Failure> {
        elements(self.elements.as_deref().ok_or_else(|| Failure::Parse("missing \"elements\"".into()))?)
    }
}

/// A chain file: a bare array of elements or `{"chain": [...]}`.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum ChainDoc {
    Bare(Vec<ElementJson>),
    Wrapped { chain: Vec<ElementJson> },
}

impl ChainDoc {
    pub fn elements(&self) -> Result<Vec<PosetElement>, Failure> {
        match self {
            ChainDoc::Bare(v) | ChainDoc::Wrapped { chain: v } => elements(v),
        }
    }
}
