//! Rational solutions of `p(X) = A`.
//!
//! `A` is brought to companion-Jordan form. Each block `(g, d)` is solved
//! separately: the diagonal block `X₁ = q(C_g)` comes from a root `μ = q(λ̄)`
//! of `p(t) = λ̄` in `ℚ[λ]/(g)`, and the superdiagonal blocks `X₂, …, X_d`
//! from one Kronecker system each. Every combination of block solutions is
//! conjugated back and checked exactly against `A`.

use std::fmt;

use crate::canonical::{cj_block, companion, companion_jordan_form};
use crate::delta::{delta_coeff_matrix, DeltaOperator};
use crate::linalg::{rank, solve_linear, SolutionStatus};
use crate::numfield::{roots_in_extension, NumberField};
use crate::{
    CompanionJordanDecomposition, ElementaryBlock, Error, NumberFieldElement, QMatrix, QPoly,
    Result,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainKind {
    /// Every superdiagonal step had a nonsingular system.
    UniqueChain,
    /// Some step was singular but consistent; free variables were set to zero.
    AffineChain,
}

/// Solution `Y` of `p(Y) = C_j` for one companion-Jordan block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSolution {
    pub g: QPoly,
    pub d: usize,
    /// `X₁, …, X_d`.
    pub x_parts: Vec<QMatrix>,
    pub base_root: NumberFieldElement,
    pub uniqueness: ChainKind,
}

impl BlockSolution {
    /// Block upper triangular Toeplitz matrix with `X_j` on the `(j−1)`-th block superdiagonal.
    pub fn toeplitz(&self) -> QMatrix {
        block_toeplitz(&self.x_parts)
    }
}

/// Block upper triangular Toeplitz matrix built from `parts[0]` (diagonal), `parts[1]`, ….
pub fn block_toeplitz(parts: &[QMatrix]) -> QMatrix {
    let Some(first) = parts.first() else {
        return QMatrix::zeros(0, 0);
    };
    let k = first.rows();
    let d = parts.len();
    let mut y = QMatrix::zeros(k * d, k * d);
    for (off, x) in parts.iter().enumerate() {
        for r in 0..d - off {
            y.set_block(r * k, (r + off) * k, x);
        }
    }
    y
}

/// How the superdiagonal solve for one base root ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainResult {
    Complete(BlockSolution),
    /// The system for `X_step` had no solution.
    Inconsistent { step: usize, after_affine: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootAttempt {
    pub root: NumberFieldElement,
    pub x1: QMatrix,
    /// Nonsingularity of `Δp(X₁, X₁)` on `k × k` matrices.
    pub delta_invertible: bool,
    pub result: ChainResult,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockReport {
    pub block: ElementaryBlock,
    pub attempts: Vec<RootAttempt>,
}

impl BlockReport {
    pub fn solutions(&self) -> impl Iterator<Item = &BlockSolution> {
        self.attempts.iter().filter_map(|a| match &a.result {
            ChainResult::Complete(s) => Some(s),
            ChainResult::Inconsistent { .. } => None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    SolutionsFound,
    NoSolution,
    UnknownDerogatory,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::SolutionsFound => "solutions_found",
            SolveStatus::NoSolution => "no_solution",
            SolveStatus::UnknownDerogatory => "unknown_derogatory",
        }
    }
}

impl fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    /// Verified solutions in block-root enumeration order.
    pub solutions: Vec<QMatrix>,
    /// Some returned solution used an affine chain, so it represents infinitely many.
    pub infinite_family: bool,
    /// `false` when the enumeration may have missed solutions: derogatory input,
    /// or an affine step somewhere along the way.
    pub conclusive: bool,
    pub nonderogatory: bool,
    pub per_block_roots: Vec<Vec<NumberFieldElement>>,
    pub blocks: Vec<BlockReport>,
    pub decomposition: CompanionJordanDecomposition,
    pub diagnostics: Vec<String>,
}

/// All `X₁` with `p(X₁) = C_g`, one per root of `p(t) = λ̄` in `ℚ[λ]/(g)`.
pub fn solve_base_block(p: &QPoly, g: &QPoly) -> Result<Vec<QMatrix>> {
    Ok(base_roots(p, g)?.into_iter().map(|(_, x)| x).collect())
}

fn base_roots(p: &QPoly, g: &QPoly) -> Result<Vec<(NumberFieldElement, QMatrix)>> {
    let c = companion(g)?;
    roots_in_extension(p, g)?
        .into_iter()
        .map(|mu| {
            let x1 = c.eval_poly(&mu.to_poly())?;
            if c != x1.eval_poly(p)? {
                return Err(Error::Internal(format!("base root {mu} does not solve p(X₁) = C_g")));
            }
            Ok((mu, x1))
        })
        .collect()
}

/// Extends `X₁` to a solution of `p(Y) = C_j` for the block `(g, d)`, if one exists.
pub fn solve_block_chain(p: &QPoly, g: &QPoly, d: usize, x1: &QMatrix) -> Result<Option<BlockSolution>> {
    let field = NumberField::new(g.clone())?;
    let root = field.element(x1.row(0).to_vec())?;
    Ok(match extend_chain(p, g, d, x1, root)?.1 {
        ChainResult::Complete(s) => Some(s),
        ChainResult::Inconsistent { .. } => None,
    })
}

fn extend_chain(
    p: &QPoly,
    g: &QPoly,
    d: usize,
    x1: &QMatrix,
    root: NumberFieldElement,
) -> Result<(bool, ChainResult)> {
    if d == 0 {
        return Err(Error::domain("block multiplicity must be positive"));
    }
    let c = companion(g)?;
    if x1.shape() != c.shape() || x1.eval_poly(p)? != c {
        return Err(Error::domain("X₁ does not satisfy p(X₁) = C_g"));
    }
    let k = c.rows();
    let m = delta_coeff_matrix(p, x1)?;
    let invertible = rank(&m) == k * k;
    let mut parts = vec![x1.clone()];
    let mut kind = ChainKind::UniqueChain;
    for j in 2..=d {
        let rhs = if j == 2 {
            QMatrix::identity(k).vec()
        } else {
            let op = DeltaOperator::new(p.clone(), block_toeplitz(&parts), x1.clone())?;
            let mut z = QMatrix::zeros((j - 1) * k, k);
            for r in 1..j - 1 {
                z.set_block(r * k, 0, &parts[j - r - 1]);
            }
            -&op.apply(&z)?.block(0, 0, k, k).vec()
        };
        let sol = solve_linear(&m, &rhs)?;
        match (sol.status, sol.particular) {
            (SolutionStatus::Inconsistent, _) | (_, None) => {
                let after_affine = kind == ChainKind::AffineChain;
                return Ok((invertible, ChainResult::Inconsistent { step: j, after_affine }));
            }
            (status, Some(v)) => {
                if status == SolutionStatus::AffineFamily {
                    kind = ChainKind::AffineChain;
                }
                parts.push(QMatrix::unvec(&v, k, k)?);
            }
        }
    }
    let solution = BlockSolution {
        g: g.clone(),
        d,
        x_parts: parts,
        base_root: root,
        uniqueness: kind,
    };
    if solution.toeplitz().eval_poly(p)? != cj_block(g, d)? {
        return Err(Error::Internal(format!("chain for ({g})^{d} fails p(Y) = C")));
    }
    Ok((invertible, ChainResult::Complete(solution)))
}

/// Exact check `p(X) = A`.
pub fn verify(p: &QPoly, x: &QMatrix, a: &QMatrix) -> Result<bool> {
    if x.shape() != a.shape() {
        return Err(Error::Shape {
            op: "verify",
            left: x.shape(),
            right: a.shape(),
        });
    }
    Ok(&x.eval_poly(p)? == a)
}

/// Every rational solution of `p(X) = A` reachable block by block.
///
/// For nonderogatory `A` with no affine steps the list is complete. For
/// derogatory `A` a failure is reported as [`SolveStatus::UnknownDerogatory`].
pub fn solve(p: &QPoly, a: &QMatrix) -> Result<SolveOutcome> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::domain("p must be nonconstant"));
    }
    a.require_square("solve")?;
    let decomposition = companion_jordan_form(a)?;
    let nonderogatory = {
        let mut gs: Vec<&QPoly> = decomposition.blocks.iter().map(|b| &b.g).collect();
        gs.dedup();
        gs.len() == decomposition.blocks.len()
    };

    let mut blocks = Vec::new();
    let mut diagnostics = Vec::new();
    let mut saw_affine = false;
    for block in &decomposition.blocks {
        let mut attempts = Vec::new();
        for (root, x1) in base_roots(p, &block.g)? {
            let (delta_invertible, result) = extend_chain(p, &block.g, block.d, &x1, root.clone())?;
            match &result {
                ChainResult::Complete(s) => {
                    if s.uniqueness == ChainKind::AffineChain {
                        saw_affine = true;
                        diagnostics.push(format!(
                            "block ({})^{}: root {} extends through a singular step; free variables set to zero",
                            block.g, block.d, root
                        ));
                    }
                }
                ChainResult::Inconsistent { step, after_affine } => {
                    saw_affine |= after_affine;
                    diagnostics.push(format!(
                        "block ({})^{}: root {} fails at X_{}{}{}",
                        block.g,
                        block.d,
                        root,
                        step,
                        if delta_invertible { "" } else { "; Δp(X₁, X₁) is singular" },
                        if *after_affine { "; an earlier step was affine, so other choices may succeed" } else { "" },
                    ));
                }
            }
            attempts.push(RootAttempt {
                root,
                x1,
                delta_invertible,
                result,
            });
        }
        if attempts.is_empty() {
            diagnostics.push(format!(
                "block ({})^{}: p(t) = λ̄ has no root in ℚ[λ]/({})",
                block.g, block.d, block.g
            ));
        }
        blocks.push(BlockReport {
            block: block.clone(),
            attempts,
        });
    }

    let choices: Vec<Vec<&BlockSolution>> = blocks.iter().map(|b| b.solutions().collect()).collect();
    let mut solutions = Vec::new();
    let mut infinite_family = false;
    for combo in cartesian(&choices) {
        let y = QMatrix::direct_sum(&combo.iter().map(|s| s.toeplitz()).collect::<Vec<_>>());
        let x = &(&decomposition.t * &y) * &decomposition.t_inv;
        if !verify(p, &x, a)? {
            return Err(Error::Internal("assembled solution fails p(X) = A".into()));
        }
        infinite_family |= combo.iter().any(|s| s.uniqueness == ChainKind::AffineChain);
        solutions.push(x);
    }

    let status = if !solutions.is_empty() {
        SolveStatus::SolutionsFound
    } else if nonderogatory {
        SolveStatus::NoSolution
    } else {
        SolveStatus::UnknownDerogatory
    };
    if !nonderogatory {
        diagnostics.push("A is derogatory; solutions outside the block-diagonal form may exist".into());
    }
    let per_block_roots = blocks
        .iter()
        .map(|b| b.attempts.iter().map(|a| a.root.clone()).collect())
        .collect();
    Ok(SolveOutcome {
        status,
        solutions,
        infinite_family,
        conclusive: nonderogatory && !saw_affine,
        nonderogatory,
        per_block_roots,
        blocks,
        decomposition,
        diagnostics,
    })
}

/// Cartesian product, first list varying slowest.
fn cartesian<'a, T>(lists: &[Vec<&'a T>]) -> Vec<Vec<&'a T>> {
    lists.iter().fold(vec![Vec::new()], |acc, list| {
        acc.iter()
            .flat_map(|prefix| {
                list.iter().map(move |item| {
                    let mut next = prefix.clone();
                    next.push(*item);
                    next
                })
            })
            .collect()
    })
}
