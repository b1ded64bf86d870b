use std::collections::BTreeMap;

use crate::error::{input, Error, Result};
use crate::fraction::Fraction;
use crate::generators::{farey_truncation, halved_farey};
use crate::graph::VertexId;

use super::{validate_model, MinorMap};

/// Image of a vertex of the halved Farey graph in the truncated Farey graph
/// one order lower: `{0/1, 1/0}` merges into `1/0`, `1/1` becomes `0/1`,
/// `x > 1` becomes `x - 1`, and `0 < x < 1` becomes `(x - 1)/x`.
fn image(x: Fraction) -> Result<Fraction> {
    let (p, q) = (x.num(), x.den());
    if x.is_infinite() || p == 0 {
        Ok(Fraction::INFINITY)
    } else if p == q {
        Ok(Fraction::ZERO)
    } else if p > q {
        Fraction::reduced(p - q, q)
    } else {
        Fraction::reduced(p - q, p)
    }
}

/// A model of `farey_truncation(n - 1)` in `halved_farey(n)` that ignores
/// the blue edge `0/1 – 1/1` and uses `{0/1, 1/0}` as one branch set; every
/// other branch set is a single vertex.
pub fn farey_contraction_witness(n: u32) -> Result<MinorMap> {
    if n == 0 {
        return input("order must be at least 1");
    }
    let host = halved_farey(n)?.into_graph();
    let pattern = farey_truncation(n - 1)?;
    let mut assign = BTreeMap::new();
    for v in host.vertices() {
        let y: VertexId = image(Fraction::from_vertex(v)?)?.vertex();
        assign.insert(v.clone(), y);
    }
    let m = MinorMap::new(host, pattern, assign);
    let report = validate_model(&m);
    if !report.valid {
        return Err(Error::Input(format!("witness failed validation: {}", report.violations.join("; "))));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        let m = farey_contraction_witness(1).unwrap();
        assert_eq!(m.pattern().vertex_count(), 2);
        let m = farey_contraction_witness(2).unwrap();
        let merged = m.branch_set(&"1/0".into());
        assert_eq!(merged.len(), 2);
        let q = m.host().contract_sets(&[merged]).unwrap();
        assert_eq!((q.vertex_count(), q.simple().edge_count()), (4, 5));
        assert!(farey_contraction_witness(0).is_err());
    }
}
