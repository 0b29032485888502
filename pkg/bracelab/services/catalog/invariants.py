"""
Invariant records for the catalog index.

Right braces are summarized through their opposite where a notion is only
defined for left braces (socle, solution, multipermutation level); their
chains are the mirrored chains of the brace itself.
"""

import logging

from ...models.schemas import InvariantRecord
from ...models.structures import FiniteBrace, SeriesKind
from ..braces.operations import additive_type, is_two_sided, opposite
from ..groups.analysis import adjoint_group, is_nilpotent
from ..series.chains import socle, vanishing_index
from ..ybe.retraction import multipermutation_level
from ..ybe.solutions import solution_from_brace

logger = logging.getLogger(__name__)


def compute_invariants(brace: FiniteBrace) -> InvariantRecord:
    left_version = brace if brace.is_left else opposite(brace)
    group = adjoint_group(brace)
    nilpotent, nil_class = is_nilpotent(group)
    level = multipermutation_level(solution_from_brace(left_version))
    return InvariantRecord(
        order=brace.order,
        chirality=brace.chirality.value,
        additive_type=list(additive_type(brace)),
        adjoint_nilpotent=nilpotent,
        adjoint_class=nil_class,
        adjoint_abelian=group.is_abelian,
        left_vanishes_at=vanishing_index(brace, SeriesKind.LEFT_POWERS),
        right_vanishes_at=vanishing_index(brace, SeriesKind.RIGHT_POWERS),
        bracket_vanishes_at=vanishing_index(brace, SeriesKind.BRACKET),
        socle_size=socle(left_version).size,
        multipermutation_level=level.level,
        two_sided=is_two_sided(brace),
    )
