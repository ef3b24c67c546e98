use std::sync::Arc;

use crate::groups::{Element, Group, GroupError};

/// One full period of the sequence `a·x_{i+1} + x_i + x_{i−1} = 0` over a finite field.
#[derive(Debug, Clone)]
pub struct MSequence {
    field: Arc<Group>,
    a: Element,
    terms: Vec<Element>,
}

impl MSequence {
    /// Runs the recurrence `x_{i+1} = −a⁻¹(x_i + x_{i−1})` from `(x0, x1)` until the
    /// starting pair comes back. Fails when `a` is zero or the field is not a field.
    pub fn generate(field: &Arc<Group>, a: Element, x0: Element, x1: Element) -> Result<MSequence, GroupError> {
        let inv = field.field_inv(a)?.ok_or(GroupError::Unsupported("the recurrence coefficient must be nonzero"))?;
        let minus_inv = field.neg(inv);
        let mut terms = vec![x0, x1];
        loop {
            let len = terms.len();
            let next = field.field_mul(minus_inv, field.add(terms[len - 1], terms[len - 2]))?;
            if terms[len - 1] == x0 && next == x1 {
                terms.pop();
                break;
            }
            terms.push(next);
        }
        Ok(MSequence { field: Arc::clone(field), a, terms })
    }

    pub fn field(&self) -> &Arc<Group> {
        &self.field
    }

    /// The minimal period; one period of terms is stored.
    pub fn period(&self) -> usize {
        self.terms.len()
    }

    /// Term `x_i`, for any `i`.
    pub fn term(&self, i: usize) -> Element {
        self.terms[i % self.terms.len()]
    }

    pub fn terms(&self) -> &[Element] {
        &self.terms
    }

    /// Indices `i` within one period where `x_i = value`.
    pub fn positions_of(&self, value: Element) -> Vec<u64> {
        self.terms.iter().enumerate().filter(|(_, &t)| t == value).map(|(i, _)| i as u64).collect()
    }

    /// Rechecks `a·x_{i+1} + x_i + x_{i−1} = 0` at every index of one period,
    /// including the wrap-around.
    pub fn satisfies_recurrence(&self) -> bool {
        let f = &self.field;
        (1..=self.period()).all(|i| {
            let lhs = f.field_mul(self.a, self.term(i + 1)).map(|ax| f.add(f.add(ax, self.term(i)), self.term(i - 1)));
            lhs == Ok(Element::ZERO)
        })
    }
}
