use std::collections::HashMap;

/// Ordered set of variable labels `E`. Variable `i` of every polynomial over
/// this ring is `x_{labels[i]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Ring {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Ring { labels, index }
    }

    /// Variables `x1, ..., xn`.
    pub fn numbered(n: usize) -> Self {
        Ring::new((1..=n).map(|i| i.to_string()))
    }

    pub fn nvars(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Text form of variable `i` in the polynomial grammar.
    pub fn var_name(&self, i: usize) -> String {
        var_name_for_label(&self.labels[i])
    }

    /// The ring with extra variables appended after the existing ones.
    pub fn extended<S: Into<String>>(&self, extra: impl IntoIterator<Item = S>) -> Ring {
        let mut labels = self.labels.clone();
        labels.extend(extra.into_iter().map(Into::into));
        Ring::new(labels)
    }

    /// A label not already in use, derived from `base`.
    pub fn fresh_label(&self, base: &str) -> String {
        let mut candidate = base.to_string();
        let mut k = 0;
        while self.index.contains_key(&candidate) {
            k += 1;
            candidate = format!("{base}{k}");
        }
        candidate
    }
}

pub(crate) fn var_name_for_label(label: &str) -> String {
    if !label.is_empty() && label.bytes().all(|b| b.is_ascii_digit()) {
        format!("x{label}")
    } else if label.contains(',') {
        format!("x[{label}]")
    } else {
        label.to_string()
    }
}
