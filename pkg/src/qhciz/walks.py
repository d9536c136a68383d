"""Exact enumeration of multi-leg monotone transposition walks on S(d).

A walk starts at a permutation of cycle type alpha and multiplies by
transpositions; the edge for (x y) with x < y is labeled y, and a leg is
monotone when its labels are weakly increasing.  Multi-leg walks reset the
label threshold at each leg boundary.  With ``transitive_only`` set, a walk
is kept only when its start cycles, its steps, and its endpoint cycles
together connect all of {1..d}.

The enumeration is a dynamic program over (current permutation, steps used
in the current leg, connectivity partition), advancing labels y = 2..d in
order within each leg.  Counts are exact big integers.  Monotonicity is not
conjugation-invariant, so the start class is summed over element by
element; only the class total is well-defined.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from .combinat import Partition

D_CAP = 7
STEPS_CAP = 8


@dataclass(frozen=True)
class WalkSpec:
    d: int
    start: Partition
    end: Partition
    legs: tuple[int, ...]
    transitive_only: bool = False

    def __post_init__(self):
        object.__setattr__(self, "start", Partition(self.start))
        object.__setattr__(self, "end", Partition(self.end))
        object.__setattr__(self, "legs", tuple(int(v) for v in self.legs))
        if self.start.size != self.d or self.end.size != self.d:
            raise ValueError("start and end classes must be partitions of d")
        if any(v < 0 for v in self.legs):
            raise ValueError("leg lengths must be nonnegative")


def cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lens = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            n += 1
        lens.append(n)
    lens.sort(reverse=True)
    return tuple(lens)


def _cycle_blocks(perm: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    seen = [False] * len(perm)
    blocks = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        block = []
        j = i
        while not seen[j]:
            seen[j] = True
            block.append(j)
            j = perm[j]
        blocks.append(tuple(sorted(block)))
    return tuple(sorted(blocks))


def _merge_pair(conn, x, y):
    bx = by = None
    for block in conn:
        if x in block:
            bx = block
        if y in block:
            by = block
    if bx is by:
        return conn
    merged = tuple(sorted(bx + by))
    return tuple(sorted(b for b in conn if b is not bx and b is not by) + [merged])


def _merge_blocks(conn, blocks):
    for block in blocks:
        for v in block[1:]:
            conn = _merge_pair(conn, block[0], v)
    return conn


@lru_cache(maxsize=None)
def _class_elements(d: int, parts: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(p for p in permutations(range(d)) if cycle_type(p) == parts)


def _run_leg(states, d, leg_len, track_conn):
    """Advance every state by exactly leg_len monotone steps (labels 2..d)."""
    cur = {(perm, conn, 0): n for (perm, conn), n in states.items()}
    for y in range(2, d + 1):
        pos = y - 1  # 0-indexed slot of the label
        acc = dict(cur)
        frontier = cur
        while frontier:
            nxt: dict = {}
            for (perm, conn, used), n in frontier.items():
                if used == leg_len:
                    continue
                for x in range(pos):
                    lst = list(perm)
                    lst[x], lst[pos] = lst[pos], lst[x]
                    perm2 = tuple(lst)
                    conn2 = _merge_pair(conn, x, pos) if track_conn else None
                    key = (perm2, conn2, used + 1)
                    if key in nxt:
                        nxt[key] += n
                    else:
                        nxt[key] = n
            for key, n in nxt.items():
                if key in acc:
                    acc[key] += n
                else:
                    acc[key] = n
            frontier = nxt
        cur = acc
    return {
        (perm, conn): n for (perm, conn, used), n in cur.items() if used == leg_len
    }


@lru_cache(maxsize=None)
def _walk_counts(
    d: int, start: tuple[int, ...], legs: tuple[int, ...], transitive: bool
) -> dict:
    """Counts of monotone walks from class `start`, keyed by end cycle type."""
    states: dict = {}
    for sigma in _class_elements(d, start):
        conn = _cycle_blocks(sigma) if transitive else None
        key = (sigma, conn)
        states[key] = states.get(key, 0) + 1
    for leg_len in legs:
        states = _run_leg(states, d, leg_len, transitive)
    out: dict[tuple[int, ...], int] = {}
    for (perm, conn), n in states.items():
        if transitive:
            final = _merge_blocks(conn, _cycle_blocks(perm))
            if len(final) != 1:
                continue
        t = cycle_type(perm)
        out[t] = out.get(t, 0) + n
    return out


def count_walks(spec: WalkSpec, *, ignore_caps: bool = False) -> int:
    """Exact number of walks matching spec (each leg independently monotone)."""
    if not ignore_caps:
        if spec.d > D_CAP:
            raise ValueError(f"d={spec.d} exceeds cap {D_CAP}; pass ignore_caps=True")
        if sum(spec.legs) > STEPS_CAP:
            raise ValueError(
                f"total steps {sum(spec.legs)} exceed cap {STEPS_CAP}; "
                "pass ignore_caps=True"
            )
    table = _walk_counts(spec.d, spec.start.parts, spec.legs, spec.transitive_only)
    return table.get(spec.end.parts, 0)


def count_simple_connected(d: int, g: int, *, ignore_caps: bool = False) -> int:
    """Transitive monotone loops of length 2g-2+2d based at the identity of S(d)."""
    r = 2 * g - 2 + 2 * d
    if r < 0:
        raise ValueError("2g-2+2d must be nonnegative")
    ones = Partition((1,) * d)
    spec = WalkSpec(d=d, start=ones, end=ones, legs=(r,), transitive_only=True)
    return count_walks(spec, ignore_caps=ignore_caps)
