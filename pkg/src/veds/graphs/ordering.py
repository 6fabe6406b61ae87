import itertools
import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from django.conf import settings

from .exceptions import CapacityError, InputError
from .graph import BipartiteGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConvexOrdering:
    yperm: Tuple[int, ...]


@dataclass(frozen=True)
class ConvexityReport:
    valid: bool
    violator: Optional[int] = None
    # the first Y-position inside the violator's span that is not a neighbour
    gap: Optional[int] = None


@dataclass(frozen=True)
class LexConvexOrdering:
    """
    Positions are 1-based. ``xperm[p - 1]`` is the X vertex at position p.

    ``left_x``/``right_x`` are indexed by X-position and hold Y-positions,
    ``left_y``/``right_y`` are indexed by Y-position and hold X-positions.
    Isolated vertices carry ``None``.
    """

    xperm: Tuple[int, ...]
    yperm: Tuple[int, ...]
    left_x: Tuple[Optional[int], ...]
    right_x: Tuple[Optional[int], ...]
    left_y: Tuple[Optional[int], ...]
    right_y: Tuple[Optional[int], ...]

    @property
    def x_position(self):
        return {x: position for position, x in enumerate(self.xperm, start=1)}

    @property
    def y_position(self):
        return {y: position for position, y in enumerate(self.yperm, start=1)}

    def x_at(self, position: int) -> int:
        return self.xperm[position - 1]

    def y_at(self, position: int) -> int:
        return self.yperm[position - 1]

    def left(self, x_position: int) -> Optional[int]:
        return self.left_x[x_position - 1]

    def right(self, x_position: int) -> Optional[int]:
        return self.right_x[x_position - 1]

    def left_of_y(self, y_position: int) -> Optional[int]:
        return self.left_y[y_position - 1]

    def right_of_y(self, y_position: int) -> Optional[int]:
        return self.right_y[y_position - 1]


def _check_permutation(yperm: Sequence[int], n2: int) -> Tuple[int, ...]:
    yperm = tuple(yperm)
    if sorted(yperm) != list(range(1, n2 + 1)):
        raise InputError(
            f"yorder {' '.join(map(str, yperm))} is not a permutation of 1..{n2}"
        )
    return yperm


def validate_convex_ordering(
    g: BipartiteGraph, yperm: Sequence[int]
) -> ConvexityReport:
    yperm = _check_permutation(yperm, g.n2)
    position = {y: p for p, y in enumerate(yperm, start=1)}

    for i in range(1, g.n1 + 1):
        positions = sorted(position[j] for j in g.neighbours_of_x(i))
        if not positions:
            continue
        if positions[-1] - positions[0] + 1 == len(positions):
            continue
        present = set(positions)
        gap = next(p for p in range(positions[0], positions[-1]) if p not in present)
        return ConvexityReport(valid=False, violator=i, gap=gap)

    return ConvexityReport(valid=True)


def _bucket_sort(items, key, buckets: int):
    """
    Stable bucket pass; ``key`` maps an item to 0..buckets.
    """
    slots = [[] for _ in range(buckets + 1)]
    for item in items:
        slots[key(item)].append(item)
    return [item for slot in slots for item in slot]


def compute_lex_convex_ordering(
    g: BipartiteGraph, yperm: Sequence[int]
) -> LexConvexOrdering:
    report = validate_convex_ordering(g, yperm)
    if not report.valid:
        raise InputError(
            f"yorder is not convex: N(x{report.violator}) skips Y-position {report.gap}"
        )
    yperm = tuple(yperm)
    y_position = {y: p for p, y in enumerate(yperm, start=1)}

    # interval endpoints by vertex, 0 marks an isolated vertex
    left = {}
    right = {}
    for i in range(1, g.n1 + 1):
        positions = [y_position[j] for j in g.neighbours_of_x(i)]
        left[i] = min(positions, default=0)
        right[i] = max(positions, default=0)

    xs = list(range(1, g.n1 + 1))
    xs = _bucket_sort(xs, right.__getitem__, g.n2)
    xperm = tuple(_bucket_sort(xs, left.__getitem__, g.n2))
    x_position = {x: p for p, x in enumerate(xperm, start=1)}

    left_y = []
    right_y = []
    for j in yperm:
        positions = [x_position[i] for i in g.neighbours_of_y(j)]
        left_y.append(min(positions, default=None))
        right_y.append(max(positions, default=None))

    return LexConvexOrdering(
        xperm=xperm,
        yperm=yperm,
        left_x=tuple(left[x] or None for x in xperm),
        right_x=tuple(right[x] or None for x in xperm),
        left_y=tuple(left_y),
        right_y=tuple(right_y),
    )


def check_lex_convex_ordering(g: BipartiteGraph, ordering: LexConvexOrdering):
    """
    Raise when ``ordering`` does not describe a lex-convex ordering of ``g``.
    """
    if sorted(ordering.xperm) != list(range(1, g.n1 + 1)):
        raise InputError(f"xperm is not a permutation of 1..{g.n1}")
    expected = compute_lex_convex_ordering(g, ordering.yperm)
    intervals = dict(zip(expected.xperm, zip(expected.left_x, expected.right_x)))
    for x, left, right in zip(ordering.xperm, ordering.left_x, ordering.right_x):
        if intervals[x] != (left, right):
            raise InputError(f"interval of x{x} does not match the ordering")
    if not is_lex_sorted(ordering):
        raise InputError("xperm is not sorted by (left, right)")


def is_lex_sorted(ordering: LexConvexOrdering, pairwise: bool = False) -> bool:
    keys = [
        (left or 0, right or 0)
        for left, right in zip(ordering.left_x, ordering.right_x)
    ]
    if pairwise:
        return all(
            keys[a] <= keys[b]
            for a in range(len(keys))
            for b in range(a + 1, len(keys))
        )
    return all(first <= second for first, second in zip(keys, keys[1:]))


def find_convex_ordering_exhaustive(
    g: BipartiteGraph, max_y: Optional[int] = None
) -> Optional[ConvexOrdering]:
    if max_y is None:
        max_y = settings.VEDS_EXHAUSTIVE_ORDER_MAX_Y
    if g.n2 > max_y:
        logger.warning("Refusing exhaustive ordering search for n2=%d", g.n2)
        raise CapacityError(
            f"exhaustive convex-ordering search is limited to n2 <= {max_y} "
            f"(got {g.n2}); declare a 'yorder' in the input file instead"
        )

    for yperm in itertools.permutations(range(1, g.n2 + 1)):
        if validate_convex_ordering(g, yperm).valid:
            return ConvexOrdering(yperm=tuple(yperm))
    return None


def resolve_ordering(
    g: BipartiteGraph, yorder: Optional[Sequence[int]] = None
) -> LexConvexOrdering:
    """
    Lex-convex ordering from a declared yorder, or from the exhaustive search.
    """
    if yorder is None:
        found = find_convex_ordering_exhaustive(g)
        if found is None:
            raise InputError("graph is not convex on Y: no ordering of Y works")
        yorder = found.yperm
    return compute_lex_convex_ordering(g, yorder)
