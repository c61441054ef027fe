"""Systems of distinct representatives via bipartite augmenting paths."""

from __future__ import annotations

from typing import Hashable, Iterable, Optional, Sequence

SetFamily = Sequence[Iterable[Hashable]]


def _ordered(members: Iterable[Hashable]) -> list[Hashable]:
    items = list(dict.fromkeys(members))
    try:
        return sorted(items)
    except TypeError:
        return items


def _match(fam: SetFamily) -> tuple[list[Optional[Hashable]], dict[Hashable, int], list[list[Hashable]]]:
    sets = [_ordered(s) for s in fam]
    owner: dict[Hashable, int] = {}
    rep: list[Optional[Hashable]] = [None] * len(sets)

    def augment(i: int, visited: set[Hashable]) -> bool:
        for x in sets[i]:
            if x in visited:
                continue
            visited.add(x)
            if x not in owner or augment(owner[x], visited):
                owner[x] = i
                rep[i] = x
                return True
        return False

    for i in range(len(sets)):
        augment(i, set())
    return rep, owner, sets


def find_sdr(fam: SetFamily) -> Optional[list[Hashable]]:
    """Distinct representatives, one per set in order, or ``None``.

    Sets are processed in order and elements tried in sorted order, so the
    answer is deterministic for a given input.
    """
    rep, _, _ = _match(fam)
    if any(r is None for r in rep):
        return None
    return rep


def has_sdr(fam: SetFamily) -> bool:
    return find_sdr(fam) is not None


def hall_violator(fam: SetFamily) -> Optional[list[int]]:
    """Indices of a subfamily whose union is smaller than its size.

    ``None`` when the family has an SDR.  The witness is the set of family
    members reachable by alternating paths from an unmatched member.
    """
    rep, owner, sets = _match(fam)
    free = next((i for i, r in enumerate(rep) if r is None), None)
    if free is None:
        return None
    members = {free}
    stack = [free]
    seen_elems: set[Hashable] = set()
    while stack:
        i = stack.pop()
        for x in sets[i]:
            if x in seen_elems:
                continue
            seen_elems.add(x)
            j = owner[x]  # every reachable element is matched, else an augmenting path exists
            if j not in members:
                members.add(j)
                stack.append(j)
    return sorted(members)
