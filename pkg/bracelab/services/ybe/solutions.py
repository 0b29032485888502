"""
Set-theoretic solutions of the Yang-Baxter equation.

- solution_from_brace: r(x, y) = (λ_x(y), λ_z(x)) with z the adjoint inverse of λ_x(y).
- check_braid / check_involutive / check_nondegenerate: exhaustive checks
  returning the first counterexample.
- identity_solution, flip_solution, permutation_group_order.
"""

import logging
from typing import Optional, Sequence, Set, Tuple

import numpy as np

from ...models.schemas import CheckResult
from ...models.structures import FiniteBrace, SetSolution
from ..braces.operations import lambda_table, require_left

logger = logging.getLogger(__name__)


def solution_from_brace(brace: FiniteBrace) -> SetSolution:
    require_left(brace)
    lam = lambda_table(brace)
    n = brace.order
    sigma = lam
    # tau[y][x] = λ_z(x) with z = (λ_x(y))^-1 in the adjoint group
    tau = tuple(tuple(lam[brace.inverse(lam[x][y])][x] for x in range(n)) for y in range(n))
    return SetSolution(size=n, sigma=sigma, tau=tau)


def identity_solution(size: int) -> SetSolution:
    """r(x, y) = (x, y): sigma_x is constant x, so this one is degenerate for size >= 2."""
    sigma = tuple(tuple(x for _ in range(size)) for x in range(size))
    tau = tuple(tuple(y for _ in range(size)) for y in range(size))
    return SetSolution(size=size, sigma=sigma, tau=tau)


def flip_solution(size: int) -> SetSolution:
    """r(x, y) = (y, x)."""
    ident = tuple(tuple(range(size)) for _ in range(size))
    return SetSolution(size=size, sigma=ident, tau=ident)


def apply(sol: SetSolution, x: int, y: int) -> Tuple[int, int]:
    return sol.apply(x, y)


def _arrays(sol: SetSolution) -> Tuple[np.ndarray, np.ndarray]:
    n = sol.size
    return (
        np.array(sol.sigma, dtype=np.int64).reshape(n, n),
        np.array(sol.tau, dtype=np.int64).reshape(n, n),
    )


def _first(mask: np.ndarray) -> Optional[Tuple[int, ...]]:
    hits = np.argwhere(mask)
    return tuple(int(i) for i in hits[0]) if len(hits) else None


def check_nondegenerate(sol: SetSolution) -> CheckResult:
    ident = tuple(range(sol.size))
    for x in range(sol.size):
        if tuple(sorted(sol.sigma[x])) != ident:
            return CheckResult(name="nondegenerate", passed=False, counterexample=(x,), detail=f"sigma_{x} is not a bijection")
    for y in range(sol.size):
        if tuple(sorted(sol.tau[y])) != ident:
            return CheckResult(name="nondegenerate", passed=False, counterexample=(y,), detail=f"tau_{y} is not a bijection")
    return CheckResult(name="nondegenerate", passed=True)


def check_involutive(sol: SetSolution) -> CheckResult:
    S, T = _arrays(sol)
    n = sol.size
    x, y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    u, v = S[x, y], T[y, x]
    witness = _first((S[u, v] != x) | (T[v, u] != y))
    return CheckResult(name="involutive", passed=witness is None, counterexample=witness)


def check_braid(sol: SetSolution) -> CheckResult:
    """(r x id)(id x r)(r x id) = (id x r)(r x id)(id x r) on all of X^3."""
    S, T = _arrays(sol)
    n = sol.size
    x, y, z = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")

    def r12(p, q, s):
        return S[p, q], T[q, p], s

    def r23(p, q, s):
        return p, S[q, s], T[s, q]

    left = r12(*r23(*r12(x, y, z)))
    right = r23(*r12(*r23(x, y, z)))
    mask = (left[0] != right[0]) | (left[1] != right[1]) | (left[2] != right[2])
    witness = _first(mask)
    if witness is not None:
        logger.debug(f"Braid relation fails at {witness}")
    return CheckResult(name="braid", passed=witness is None, counterexample=witness)


def is_solution(sol: SetSolution) -> bool:
    return all(check(sol).passed for check in (check_nondegenerate, check_involutive, check_braid))


def permutation_group_order(sol: SetSolution) -> int:
    """Order of the permutation group generated by the left actions sigma_x."""
    gens: Sequence[Tuple[int, ...]] = sorted(set(sol.sigma))
    ident = tuple(range(sol.size))
    seen: Set[Tuple[int, ...]] = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[i] for i in p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)
