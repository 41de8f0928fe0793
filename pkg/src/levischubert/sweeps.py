"""Exhaustive verification sweeps over all instances up to a rank bound.

Each sweep yields one record per instance with an ``ok`` flag; a False
flag is a genuine counterexample to the theorem the sweep encodes.  The
CLI streams the records as JSON lines; the acceptance suite asserts that
no record fails.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from . import bp, classify, grassmann, levi, toroidal, weyl


def _powerset(items: Iterable[int]) -> Iterator[frozenset[int]]:
    items = sorted(items)
    for r in range(len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield frozenset(combo)


def _subset_pairs(n: int) -> Iterator[tuple[frozenset[int], frozenset[int]]]:
    """All pairs J <= K of parabolic subsets of {1..n-1}."""
    delta = range(1, n)
    for J in _powerset(delta):
        for extra in _powerset(set(delta) - J):
            yield J, J | extra


def head_oracle(max_n: int) -> Iterator[dict]:
    """Block criterion vs the reflection test, over every Grassmann
    permutation and every Levi."""
    for n in range(2, max_n + 1):
        delta = range(1, n)
        for d in delta:
            J = frozenset(delta) - {d}
            for x in grassmann.all_grassmann(n, d):
                stab = levi.max_levi(x.w, J)
                for I in _powerset(delta):
                    yield {
                        "check": "head-oracle", "n": n, "d": d,
                        "w": list(x.w), "levi": sorted(I),
                        "ok": levi.is_degree1_head(x.w, d, I) == (I <= stab),
                    }


def divisor_stability(max_n: int) -> Iterator[dict]:
    """Run-start criterion for divisor stability vs the reflection test,
    over every stable pair."""
    for n in range(2, max_n + 1):
        for d in range(1, n):
            J = frozenset(range(1, n)) - {d}
            for x in grassmann.all_grassmann(n, d):
                rds = grassmann.run_divisors(x)
                if not rds:
                    continue
                rs = grassmann.runs(x)
                stab_w = levi.max_levi(x.w, J)
                div_stab = {idx: levi.max_levi(div.w, J) for idx, div in rds}
                for I in _powerset(stab_w):
                    for idx, div in rds:
                        claim = (rs[idx - 1][0] - 1) not in I
                        yield {
                            "check": "divisor-stability", "n": n, "d": d,
                            "w": list(x.w), "levi": sorted(I),
                            "divisor": list(div.w),
                            "ok": claim == (I <= div_stab[idx]),
                        }


def smooth_unique_head(max_n: int) -> Iterator[dict]:
    """Smooth column pattern forces a unique head and an empty boundary
    for the maximal Levi."""
    for n in range(2, max_n + 1):
        for d in range(1, n):
            J = frozenset(range(1, n)) - {d}
            for x in grassmann.all_grassmann(n, d):
                if grassmann.smooth_form(x) is None:
                    continue
                I = levi.max_levi(x.w, J)
                report = levi.heads_below(x.w, J, I)
                yield {
                    "check": "smooth-unique-head", "n": n, "d": d,
                    "w": list(x.w),
                    "ok": (report.heads == (x.w,)
                           and not report.maximal_proper_heads
                           and toroidal.unique_head_check(x)),
                }


def singular_no_stable_divisor(max_n: int) -> Iterator[dict]:
    """Singular varieties have no divisor stable under the maximal Levi,
    and every proper head sits in codimension >= 2."""
    for n in range(2, max_n + 1):
        for d in range(1, n):
            for x in grassmann.all_grassmann(n, d):
                if grassmann.smooth_form(x) is not None:
                    continue
                yield {
                    "check": "singular-no-stable-divisor", "n": n, "d": d,
                    "w": list(x.w),
                    "ok": toroidal.no_stable_divisor_check(x),
                }


def bp_equivalence(max_n: int) -> Iterator[dict]:
    """The three factorization tests agree on every decomposition."""
    for n in range(2, max_n + 1):
        for J, K in _subset_pairs(n):
            for w in weyl.quotient_reps(n, J):
                a = bp.is_bp_maximality(w, J, K)
                b = bp.is_bp_support(w, J, K)
                c = bp.poincare_factorizes(w, J, K)
                yield {
                    "check": "bp-equivalence", "n": n,
                    "parabolic": sorted(J), "quotient": sorted(K),
                    "w": list(w), "bp": c, "ok": a == b == c,
                }


def projection_dichotomy(max_n: int) -> Iterator[dict]:
    """For factoring decompositions of full-flag elements, every divisor
    projects onto the image or onto one of its divisors, and divisors
    moved by a reflection outside W_K never project onto."""
    for n in range(2, max_n + 1):
        for w in itertools.permutations(range(1, n + 1)):
            if weyl.length(w) == 0:
                continue
            covers = weyl.lower_covers(w)
            for K in _powerset(range(1, n)):
                if not bp.poincare_factorizes(w, (), K):
                    continue
                v = weyl.min_coset_rep(w, K)
                vcovers = weyl.lower_covers(v, K)
                for tau in covers:
                    image, kind = bp.project_divisor(tau, w, (), K)
                    dichotomy = image == v or image in vcovers
                    t = weyl.compose(weyl.inverse(w), tau)
                    clause = weyl.in_parabolic(t, K) or image != v
                    yield {
                        "check": "projection-dichotomy", "n": n,
                        "w": list(w), "divisor": list(tau),
                        "quotient": sorted(K), "kind": kind,
                        "ok": dichotomy and clause,
                    }


def smooth_palindromic(max_n: int) -> Iterator[dict]:
    """Smooth column pattern iff the rank generating function is
    palindromic (rational smoothness, which in type A is smoothness)."""
    for n in range(2, max_n + 1):
        for d in range(1, n):
            J = frozenset(range(1, n)) - {d}
            for x in grassmann.all_grassmann(n, d):
                smooth = grassmann.smooth_form(x) is not None
                pal = weyl.is_palindromic(weyl.poincare_polynomial(x.w, J))
                yield {
                    "check": "smooth-palindromic", "n": n, "d": d,
                    "w": list(x.w), "ok": smooth == pal,
                }


def classify_codim(max_m: int) -> Iterator[dict]:
    """Both closed orbits have codimension >= 2 in every family member."""
    for case in classify.iter_cases(max_m):
        yield {
            "check": "classify-codim", "tag": case.tag,
            "m": case.m, "i": case.i,
            "ok": classify.codim_at_least_two(case),
        }


#: name -> (sweep function, default bound, bound is a rank)
SWEEPS = {
    "head-oracle": (head_oracle, 6, True),
    "divisor-stability": (divisor_stability, 6, True),
    "smooth-unique-head": (smooth_unique_head, 6, True),
    "singular-no-stable-divisor": (singular_no_stable_divisor, 6, True),
    "bp-equivalence": (bp_equivalence, 4, True),
    "projection-dichotomy": (projection_dichotomy, 4, True),
    "smooth-palindromic": (smooth_palindromic, 6, True),
    "classify-codim": (classify_codim, 1000, False),
}
