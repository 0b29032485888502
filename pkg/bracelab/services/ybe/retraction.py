"""
Retraction of solutions and the multipermutation level.

Points x, y are identified when sigma_x = sigma_y and tau_x = tau_y. The
induced maps on classes are checked for well-definedness on every pair.
"""

import logging
from typing import Dict, List, Tuple

from ...core.exceptions import InducedMapIllDefined
from ...models.schemas import LevelResult
from ...models.structures import SetSolution

logger = logging.getLogger(__name__)


def retract(sol: SetSolution) -> Tuple[SetSolution, Tuple[int, ...]]:
    """The retracted solution and the surjection X -> classes (classes in first-occurrence order)."""
    keys: Dict[Tuple[tuple, tuple], int] = {}
    surjection = []
    members: List[List[int]] = []
    for x in range(sol.size):
        key = (sol.sigma[x], sol.tau[x])
        if key not in keys:
            keys[key] = len(members)
            members.append([])
        surjection.append(keys[key])
        members[keys[key]].append(x)

    reps = [m[0] for m in members]
    k = len(reps)
    sigma = tuple(tuple(surjection[sol.sigma[rx][ry]] for ry in reps) for rx in reps)
    tau = tuple(tuple(surjection[sol.tau[ry][rx]] for rx in reps) for ry in reps)

    for x in range(sol.size):
        for y in range(sol.size):
            cx, cy = surjection[x], surjection[y]
            if surjection[sol.sigma[x][y]] != sigma[cx][cy]:
                raise InducedMapIllDefined(x, y, "(sigma)")
            if surjection[sol.tau[y][x]] != tau[cy][cx]:
                raise InducedMapIllDefined(x, y, "(tau)")

    labels = None
    if sol.labels is not None:
        labels = tuple("{" + ",".join(sol.labels[x] for x in m) + "}" for m in members)
    return SetSolution(size=k, sigma=sigma, tau=tau, labels=labels), tuple(surjection)


def multipermutation_level(sol: SetSolution) -> LevelResult:
    """Number of retractions needed to reach one point, or level None if the sizes stall."""
    sizes = [sol.size]
    current = sol
    for step in range(sol.size + 1):
        if current.size == 1:
            return LevelResult(level=step, sizes=sizes)
        current, _ = retract(current)
        if current.size == sizes[-1]:
            logger.debug(f"Retraction stalls at size {current.size}")
            return LevelResult(level=None, sizes=sizes)
        sizes.append(current.size)
    return LevelResult(level=None, sizes=sizes)
