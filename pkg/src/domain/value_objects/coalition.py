"""Coalitions of voters encoded as bitmasks.

Voter i (1-based) is bit i - 1, so voter 1 alone is mask 1 and N is 2^n - 1.
"""

from collections.abc import Iterable, Iterator

type Coalition = int

EMPTY: Coalition = 0
MAX_VOTERS = 16


def grand(n: int) -> Coalition:
    """The coalition N of all voters."""
    return (1 << n) - 1


def of(voters: Iterable[int]) -> Coalition:
    """Encode 1-based voter ids."""
    mask = EMPTY
    for voter in voters:
        mask |= 1 << (voter - 1)
    return mask


def contains(coalition: Coalition, voter: int) -> bool:
    """True iff the voter belongs to the coalition."""
    return bool(coalition >> (voter - 1) & 1)


def members(coalition: Coalition, n: int) -> tuple[int, ...]:
    """1-based voter ids in increasing order."""
    return tuple(i for i in range(1, n + 1) if contains(coalition, i))


def size(coalition: Coalition) -> int:
    """Number of members."""
    return coalition.bit_count()


def complement(coalition: Coalition, n: int) -> Coalition:
    """N minus the coalition."""
    return grand(n) & ~coalition


def all_coalitions(n: int) -> range:
    """Every coalition, empty first."""
    return range(1 << n)


def proper_nonempty(n: int) -> range:
    """Every coalition other than the empty set and N."""
    return range(1, grand(n))


def covers(coalition: Coalition, n: int) -> Iterator[tuple[int, Coalition]]:
    """Immediate supersets S + {i}, with the added voter."""
    for voter in range(1, n + 1):
        if not contains(coalition, voter):
            yield voter, coalition | 1 << (voter - 1)


def of_size(n: int, k: int) -> Iterator[Coalition]:
    """Coalitions with exactly k members, in increasing mask order."""
    return (s for s in all_coalitions(n) if size(s) == k)


def render(coalition: Coalition, n: int) -> str:
    """Human-readable form, e.g. "{1,2}"."""
    return "{" + ",".join(str(i) for i in members(coalition, n)) + "}"
