"""Brute-force oracles, implemented independently of the package.

These deliberately avoid the production code paths: lengths come from BFS
or double loops, Bruhat comparisons from subwords of a reduced word, coset
representatives from full coset enumeration.
"""

from __future__ import annotations

import itertools
from collections import deque


def ident(n):
    return tuple(range(1, n + 1))


def inv_count(w):
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def swap_positions(w, i):
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def swap_values(w, i):
    out = list(w)
    a, b = out.index(i), out.index(i + 1)
    out[a], out[b] = out[b], out[a]
    return tuple(out)


def multiply(x, y):
    return tuple(x[v - 1] for v in y)


def invert(w):
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def bfs_length(w):
    """Graph distance from the identity in the right Cayley graph."""
    n = len(w)
    start = ident(n)
    if w == start:
        return 0
    seen = {start}
    frontier = deque([(start, 0)])
    while frontier:
        x, dist = frontier.popleft()
        for i in range(1, n):
            y = swap_positions(x, i)
            if y == w:
                return dist + 1
            if y not in seen:
                seen.add(y)
                frontier.append((y, dist + 1))
    raise AssertionError("unreachable")


def a_reduced_word(w):
    word = []
    w = tuple(w)
    while True:
        d = next((i for i in range(1, len(w)) if w[i - 1] > w[i]), None)
        if d is None:
            return tuple(reversed(word))
        w = swap_positions(w, d)
        word.append(d)


def subword_interval(w):
    """All u with a reduced word occurring as a subword of a fixed reduced
    word of w; by the subword characterization this is the lower Bruhat
    interval of w."""
    n = len(w)
    elems = {ident(n)}
    for r in a_reduced_word(w):
        elems |= {swap_positions(x, r) for x in elems if x[r - 1] < x[r]}
    return elems


def position_block_lists(J, n):
    blocks, cur = [], [1]
    for i in range(1, n):
        if i in J:
            cur.append(i + 1)
        else:
            blocks.append(cur)
            cur = [i + 1]
    blocks.append(cur)
    return blocks


def parabolic_group(J, n):
    """All of W_J by filling each position block with its own permutation."""
    blocks = position_block_lists(J, n)
    out = []
    for choice in itertools.product(*[itertools.permutations(b) for b in blocks]):
        elem = [0] * n
        for block, image in zip(blocks, choice):
            for pos, val in zip(block, image):
                elem[pos - 1] = val
        out.append(tuple(elem))
    return out


def coset_min(w, J):
    """Minimum-length element of w W_J by enumerating the whole coset."""
    coset = [multiply(w, x) for x in parabolic_group(J, len(w))]
    best = min(coset, key=inv_count)
    assert sum(1 for c in coset if inv_count(c) == inv_count(best)) == 1
    return best


def coset_longest(J, n):
    elems = parabolic_group(J, n)
    best = max(elems, key=inv_count)
    assert sum(1 for c in elems if inv_count(c) == inv_count(best)) == 1
    return best


def quotient_perms(n, J):
    return [w for w in itertools.permutations(range(1, n + 1))
            if not any(w[i - 1] > w[i] for i in J)]


def covers_below(w, J, n):
    """W^J elements one inversion below w, filtered by the subword oracle."""
    interval = subword_interval(w)
    target = inv_count(w) - 1
    return {t for t in quotient_perms(n, J)
            if inv_count(t) == target and t in interval}
