//! Finite carriers: dense element indices with display labels.

use std::collections::HashMap;
use std::fmt;

use crate::error::CarrierError;

/// An element of a finite carrier, identified by its dense index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u32);

impl Elem {
    pub const fn new(index: usize) -> Self {
        Elem(index as u32)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// The underlying set of a rack or irack. Index `i` is the identity of the
/// element; the label is only used for input and output.
#[derive(Debug, Clone)]
pub struct Carrier {
    labels: Vec<String>,
    index: HashMap<String, Elem>,
}

impl PartialEq for Carrier {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for Carrier {}

impl PartialOrd for Carrier {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Carrier {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.labels.cmp(&other.labels)
    }
}

/// Characters that would collide with the tuple and relation syntax.
const RESERVED: &[char] = &[',', '|', '(', ')', '#', ':'];

pub fn valid_label(label: &str) -> bool {
    !label.is_empty() && !label.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c))
}

impl Carrier {
    pub fn new<I, S>(labels: I) -> Result<Self, CarrierError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if !valid_label(label) {
                return Err(CarrierError::InvalidLabel(label.clone()));
            }
            if index.insert(label.clone(), Elem::new(i)).is_some() {
                return Err(CarrierError::DuplicateLabel(label.clone()));
            }
        }
        Ok(Carrier { labels, index })
    }

    /// Carrier whose labels are the decimal indices `0..k`.
    pub fn numbered(k: usize) -> Self {
        Carrier::new((0..k).map(|i| i.to_string())).expect("decimal labels are valid")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e.index()]
    }

    pub fn lookup(&self, label: &str) -> Option<Elem> {
        self.index.get(label).copied()
    }

    pub fn contains(&self, e: Elem) -> bool {
        e.index() < self.labels.len()
    }

    pub fn elems(&self) -> impl DoubleEndedIterator<Item = Elem> + ExactSizeIterator + Clone {
        (0..self.labels.len()).map(Elem::new)
    }
}
