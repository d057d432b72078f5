//! Variable contexts.
//!
//! A context is an immutable, ordered list of variable names shared by all
//! polynomials built over it. Full contexts start with the quantum variable
//! `v` (v^4 = q) followed by `t`; the remaining entries are the x-variables.
//! The coefficient layer uses the two-variable context `[v, t]`, and the
//! polynomial layers over it use x-only contexts.

use std::fmt;
use std::sync::Arc;

#[derive(Clone)]
pub struct VarContext {
    names: Arc<Vec<String>>,
}

impl VarContext {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Self {
        VarContext {
            names: Arc::new(names.into_iter().map(Into::into).collect()),
        }
    }

    /// The coefficient context `[v, t]`.
    pub fn vt() -> Self {
        VarContext::new(vec!["v", "t"])
    }

    /// Genus-1 full context `[v, t, x]`.
    pub fn genus1() -> Self {
        VarContext::new(vec!["v", "t", "x"])
    }

    /// Genus-2 full context `[v, t, x12, x13, x23]`.
    pub fn genus2() -> Self {
        VarContext::new(vec!["v", "t", "x12", "x13", "x23"])
    }

    /// x-only context for genus-1 polynomials.
    pub fn x1() -> Self {
        VarContext::new(vec!["x"])
    }

    /// x-only context for genus-2 polynomials, ordered `[x12, x13, x23]`.
    pub fn x3() -> Self {
        VarContext::new(vec!["x12", "x13", "x23"])
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn same(&self, other: &VarContext) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl fmt::Debug for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(","))
    }
}

impl PartialEq for VarContext {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for VarContext {}
