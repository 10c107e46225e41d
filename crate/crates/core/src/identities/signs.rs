use serde::Serialize;

use super::report::{SignConvention, VerificationReport};
use super::theorems::theorem2_parts;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{GraphSpec, MatrixKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignResolution {
    pub convention: SignConvention,
    /// Failing reports of the rejected preset, in corpus order.
    pub refutations: Vec<VerificationReport>,
}

/// Checks the undirected identity under both presets, for every `k` and every
/// graph, and returns the single preset with no nonzero residual.
pub fn resolve_sign_convention(corpus: &[GraphSpec]) -> Result<SignResolution> {
    resolve_sign_convention_with(corpus, Execution::default())
}

pub fn resolve_sign_convention_with(corpus: &[GraphSpec], exec: Execution) -> Result<SignResolution> {
    if corpus.iter().any(GraphSpec::is_directed) {
        return Err(Error::ExpectedUndirected);
    }
    let presets = [SignConvention::STATEMENT, SignConvention::PROOF_FINAL];
    let per_graph =
        exec.map_slice(corpus, |g| theorem2_parts(g, MatrixKind::A, exec)).into_iter().collect::<Result<Vec<_>>>()?;
    let mut failures: Vec<Vec<VerificationReport>> = vec![Vec::new(); presets.len()];
    for parts in per_graph.iter().flatten() {
        for (signs, bucket) in presets.iter().zip(failures.iter_mut()) {
            let r = parts.report(MatrixKind::A, *signs);
            if !r.passed {
                bucket.push(r);
            }
        }
    }
    let surviving: Vec<usize> = (0..presets.len()).filter(|&i| failures[i].is_empty()).collect();
    match surviving.as_slice() {
        [only] => {
            let refutations =
                failures.into_iter().enumerate().filter(|(i, _)| i != only).flat_map(|(_, f)| f).collect();
            Ok(SignResolution { convention: presets[*only], refutations })
        }
        [] => Err(Error::Indecisive("no sign convention survives the corpus".into())),
        _ => Err(Error::Indecisive("indecisive corpus: both sign conventions survive".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::Residual;
    use crate::polynomial::IntPolynomial;

    #[test]
    fn k3_picks_statement() {
        let res = resolve_sign_convention(&[GraphSpec::complete(false, 3)]).unwrap();
        assert_eq!(res.convention, SignConvention::STATEMENT);
        let first = &res.refutations[0];
        assert_eq!(first.k, Some(1));
        assert_eq!(first.residual, Residual::Polynomial(IntPolynomial::from_i64s(&[0, 6])));
    }

    #[test]
    fn edgeless_corpus_is_indecisive() {
        let err = resolve_sign_convention(&[GraphSpec::empty(false, 4)]).unwrap_err();
        assert!(matches!(err, Error::Indecisive(ref s) if s.contains("indecisive corpus")));
        assert_eq!(resolve_sign_convention(&[GraphSpec::cycle(true, 3).unwrap()]), Err(Error::ExpectedUndirected));
    }
}
