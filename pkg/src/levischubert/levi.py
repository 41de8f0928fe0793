"""Levi-subgroup actions on Schubert varieties: block partitions, the
stability test, degree-1 heads, head enumeration, and boundaries.

A standard Levi subgroup is given by a set ``I`` of simple-root indices;
its complement cuts ``{1..n}`` into consecutive blocks and the Levi is the
corresponding block-diagonal subgroup.  A Schubert variety is stable under
that Levi iff every generator ``s_i`` with ``i in I`` maps it into itself,
which :func:`max_levi` decides one reflection at a time.  A *degree-1 head*
below ``tau`` is any ``theta <= tau`` in ``W^J`` whose Schubert variety is
itself Levi-stable; heads detect Levi orbits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from . import weyl
from .weyl import Perm


@dataclass(frozen=True)
class LeviBlocks:
    """The ordered set partition of ``{1..n}`` attached to a Levi.

    Each block ends at an element of the complement of ``indices`` (the
    last block ends at ``n``), so there are ``|complement| + 1`` blocks.
    """

    indices: frozenset[int]
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"indices": sorted(self.indices),
                "blocks": [list(b) for b in self.blocks]}


def blocks(I: Iterable[int], n: int) -> LeviBlocks:
    """Cut ``{1..n}`` after each simple root missing from ``I``.

    >>> blocks({1, 3, 4, 7}, 8).blocks
    ((1, 2), (3, 4, 5), (6,), (7, 8))
    """
    I = frozenset(I)
    if I and not I <= set(range(1, n)):
        raise ValueError(f"Levi indices must lie in 1..{n - 1}")
    comp = sorted(set(range(1, n)) - I)
    parts = []
    lo = 1
    for j in comp:
        parts.append(tuple(range(lo, j + 1)))
        lo = j + 1
    parts.append(tuple(range(lo, n + 1)))
    return LeviBlocks(I, n, tuple(parts))


@lru_cache(maxsize=None)
def _max_levi(w: Perm, J: frozenset[int]) -> frozenset[int]:
    lw = weyl.length(w)
    return frozenset(
        i for i in range(1, len(w))
        if weyl.length(weyl.min_coset_rep(weyl.mult_left(w, i), J)) <= lw)


def max_levi(w: Perm, J: Iterable[int] = ()) -> frozenset[int]:
    """Simple roots of the largest standard Levi stabilizing the Schubert
    variety of ``w`` in the quotient by ``J``.

    An index ``i`` qualifies iff multiplying by ``s_i`` on the left does
    not push the coset representative up in length: then the minimal
    parabolic through ``s_i``, hence the Levi generator, preserves the
    variety.

    >>> sorted(max_levi((3, 4, 1, 2)))
    [2]
    """
    J = frozenset(J)
    weyl.require_quotient(w, J)
    return _max_levi(tuple(w), J)


def is_stable(theta: Perm, J: Iterable[int], I: Iterable[int]) -> bool:
    """True iff the Schubert variety of ``theta`` in the quotient by ``J``
    is stable under the Levi with simple roots ``I``.

    The identity is ``I``-stable iff ``I`` is contained in ``J``: its
    variety is the base point, fixed only by the parabolic of ``J``.
    """
    return frozenset(I) <= max_levi(theta, J)


def is_degree1_head(theta: Perm, d: int, I: Iterable[int]) -> bool:
    """Block criterion for Grassmann permutations: ``theta`` indexes a
    Levi-stable variety in Gr(d, n) iff its column values meet every Levi
    block in that block's top segment.

    >>> is_degree1_head((2, 4, 1, 3), 2, {1})
    True
    >>> is_degree1_head((1, 4, 2, 3), 2, {1})
    False
    """
    n = len(theta)
    if not 1 <= d < n:
        raise ValueError(f"descent position d={d} must satisfy 1 <= d < {n}")
    window, suffix = theta[:d], theta[d:]
    if any(a > b for a, b in zip(window, window[1:])) or \
       any(a > b for a, b in zip(suffix, suffix[1:])):
        raise ValueError(f"{theta} is not Grassmann at d={d}")
    cols = set(window)
    for block in blocks(I, n).blocks:
        hit = cols.intersection(block)
        if hit and hit != set(block[len(block) - len(hit):]):
            return False
    return True


@dataclass(frozen=True)
class HeadReport:
    """Degree-1 heads below a reference element.

    ``heads`` is sorted by (length, lex).  ``minimal_head`` is the unique
    Bruhat-minimum of the head set (None when the set is empty);
    ``maximal_proper_heads`` are the Bruhat-maximal heads strictly below
    the reference element.
    """

    heads: tuple[Perm, ...]
    minimal_head: Optional[Perm]
    maximal_proper_heads: tuple[Perm, ...]

    def to_json(self) -> dict:
        return {
            "heads": [list(h) for h in self.heads],
            "minimal_head": list(self.minimal_head) if self.minimal_head else None,
            "maximal_proper_heads": [list(h) for h in self.maximal_proper_heads],
        }


def _sort_key(w: Perm) -> tuple[int, Perm]:
    return (weyl.length(w), w)


def heads_below(tau: Perm, J: Iterable[int], I: Iterable[int]) -> HeadReport:
    """Enumerate every degree-1 head below ``tau``: the ``theta <= tau``
    in ``W^J`` whose varieties are stable under the Levi of ``I``.

    The enumeration is exhaustive over the lower interval; ranks above the
    configured cap are refused.
    """
    J, I = frozenset(J), frozenset(I)
    weyl.require_quotient(tau, J)
    found = [t for t in weyl.quotient_reps(len(tau), J)
             if weyl.bruhat_leq(t, tau) and I <= max_levi(t, J)]
    found.sort(key=_sort_key)
    if not found:
        return HeadReport((), None, ())
    mh = found[0]
    if any(not weyl.bruhat_leq(mh, h) for h in found):
        # the orbit closure through the base point is the unique minimum
        raise RuntimeError(f"head set below {tau} has no unique minimum")
    proper = [h for h in found if h != tau]
    maximal = tuple(h for h in proper
                    if not any(h != g and weyl.bruhat_leq(h, g) for g in proper))
    return HeadReport(tuple(found), mh, maximal)


def contains_levi_orbit(tau: Perm, J: Iterable[int], I: Iterable[int]) -> bool:
    """True iff the variety of ``tau`` contains an orbit of the Levi of
    ``I``, i.e. some degree-1 head lies below ``tau``."""
    return bool(heads_below(tau, J, I).heads)


def minimal_head(J: Iterable[int], I: Iterable[int], n: int) -> Perm:
    """The unique minimal Levi-stable element: the coset representative of
    the longest element of ``W_I``.  Its variety is the Levi orbit through
    the base point.

    >>> minimal_head((), {2}, 4)
    (1, 3, 2, 4)
    """
    return weyl.min_coset_rep(weyl.longest_element(I, n), J)


def boundary(w: Perm, J: Iterable[int], I: Iterable[int]) -> frozenset[Perm]:
    """Indices of the components of the complement of the open stabilizer
    orbit: the maximal heads strictly below a stable ``w``.

    Empty exactly when the Levi acts with a dense orbit whose closure is
    the whole variety (e.g. for the minimal head itself).
    """
    if not is_stable(w, J, I):
        raise ValueError(f"{w} is not stable under the Levi of {sorted(frozenset(I))}")
    return frozenset(heads_below(w, J, I).maximal_proper_heads)
