"""Brute-force reference implementations of every matching relation and both
palindrome definitions.

Everything here recomputes from scratch per call, depends only on ``core``,
and is deliberately independent of the scan engines and of the encodings
module, so it can serve as ground truth for both.  Intended for short inputs
(n up to a few hundred).
"""

from __future__ import annotations

from functools import lru_cache

from .core import TextLike, as_symbols

MODELS = ("exact", "theta", "param", "op", "ct", "palstruct")


def _pd(seq: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    stack: list[tuple[int, int]] = []
    for pos, sym in enumerate(seq, start=1):
        while stack and stack[-1][0] > sym:
            stack.pop()
        out.append(pos - stack[-1][1] if stack else 0)
        stack.append((sym, pos))
    return tuple(out)


def _param_match(x, y, static) -> bool:
    fwd: dict[int, int] = {}
    bwd: dict[int, int] = {}
    for a, b in zip(x, y):
        a_static, b_static = a in static, b in static
        if a_static or b_static:
            if not (a_static and b_static and a == b):
                return False
            continue
        if fwd.setdefault(a, b) != b or bwd.setdefault(b, a) != a:
            return False
    return True


def _op_pairwise(x, y) -> bool:
    for i in range(len(x)):
        xi, yi = x[i], y[i]
        for j in range(i + 1, len(x)):
            if (xi <= x[j]) != (yi <= y[j]) or (x[j] <= xi) != (y[j] <= yi):
                return False
    return True


def _dense_ranks(seq: tuple[int, ...]) -> tuple[int, ...]:
    ranks = {v: r for r, v in enumerate(sorted(set(seq)))}
    return tuple(ranks[v] for v in seq)


@lru_cache(maxsize=200_000)
def naive_maximal_exact(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Exact maximal-palindrome lengths by per-center outward expansion."""
    n = len(seq)
    out = []
    for t in range(1, 2 * n):
        if t % 2:
            c = (t + 1) // 2
            lo, hi, length = c - 2, c, 1
        else:
            lo, hi, length = t // 2 - 1, t // 2, 0
        while lo >= 0 and hi < n and seq[lo] == seq[hi]:
            length += 2
            lo -= 1
            hi += 1
        out.append(length)
    return tuple(out)


def cartesian_tree_shape(seq: tuple[int, ...]):
    """Shape of the Cartesian tree (root = leftmost minimum), labels erased."""
    if not seq:
        return None
    root = seq.index(min(seq))
    return (cartesian_tree_shape(seq[:root]), cartesian_tree_shape(seq[root + 1 :]))


def scsttr_equal(
    x: TextLike,
    y: TextLike,
    model: str,
    *,
    complement=None,
    static: frozenset[int] = frozenset(),
) -> bool:
    """Reference matching relation for one model; unequal lengths never match."""
    a, b = as_symbols(x), as_symbols(y)
    if len(a) != len(b):
        return False
    if model == "exact":
        return a == b
    if model == "theta":
        f = complement if complement is not None else (lambda s: s)
        return a == tuple(f(s) for s in b)
    if model == "param":
        return _param_match(a, b, static)
    if model == "op":
        # all pairwise order relations agree <=> dense rank vectors are equal
        return _dense_ranks(a) == _dense_ranks(b)
    if model == "ct":
        return _pd(a) == _pd(b)
    if model == "palstruct":
        return naive_maximal_exact(a) == naive_maximal_exact(b)
    raise ValueError(f"unknown model {model!r}")


def is_rev_palindrome(x: TextLike, model: str, **kwargs) -> bool:
    a = as_symbols(x)
    return scsttr_equal(a, a[::-1], model, **kwargs)


def is_sym_palindrome(
    x: TextLike, model: str, direction: str = "outward", **kwargs
) -> bool:
    """Arm test for S = X a Y with |X| = |Y| (the middle is unconstrained)."""
    if direction not in ("outward", "inward"):
        raise ValueError(f"unknown direction {direction!r}")
    if direction == "inward" and model != "ct":
        raise ValueError("inward direction is defined for the ct model only")
    a = as_symbols(x)
    half = len(a) // 2
    left, right = a[:half], a[len(a) - half :]
    if direction == "outward":
        return scsttr_equal(left[::-1], right, model, **kwargs)
    return scsttr_equal(left, right[::-1], model, **kwargs)


def _rev_length_at(symbols, t, n, model, search, kwargs) -> int:
    if t % 2:
        c = (t + 1) // 2
        fit = 2 * min(c - 1, n - c) + 1
        base = 1
    else:
        k = t // 2
        fit = 2 * min(k, n - k)
        base = 2
    def valid(length: int) -> bool:
        i = (t + 2 - length) // 2
        w = symbols[i - 1 : i - 1 + length]
        return scsttr_equal(w, w[::-1], model, **kwargs)
    if search == "descend":
        for length in range(fit, base - 1, -2):
            if valid(length):
                return length
        return 0
    best = 0
    for length in range(base, fit + 1, 2):
        if not valid(length):
            break
        best = length
    return best


def _sym_length_at(symbols, t, n, model, direction, search, kwargs) -> int:
    if t % 2:
        c = (t + 1) // 2
        rmax = min(c - 1, n - c)
        bonus = 1
        left_end = c - 1  # 0-based exclusive bound helpers below
    else:
        k = t // 2
        rmax = min(k, n - k)
        bonus = 0
        left_end = k
    def valid(r: int) -> bool:
        left = symbols[left_end - r : left_end]
        right = symbols[left_end + bonus : left_end + bonus + r]
        if direction == "inward":
            return scsttr_equal(left, right[::-1], model, **kwargs)
        return scsttr_equal(left[::-1], right, model, **kwargs)
    if search == "descend":
        for r in range(rmax, 0, -1):
            if valid(r):
                return 2 * r + bonus
        return bonus
    best = 0
    for r in range(1, rmax + 1):
        if not valid(r):
            break
        best = r
    return 2 * best + bonus


def maximal_array_bruteforce(
    text: TextLike,
    model: str,
    definition: str = "rev",
    direction: str = "outward",
    *,
    search: str = "ascend",
    **kwargs,
) -> list[int]:
    """Maximal palindrome length at every center, by direct window checks.

    ``search="ascend"`` grows each center until the first failure, which
    equals the true maximum because every model is substring-consistent
    (central clipping); ``search="descend"`` scans lengths from the largest
    fitting one down and assumes nothing.  The two are cross-checked
    exhaustively in the test suite.
    """
    if definition not in ("rev", "sym"):
        raise ValueError(f"unknown definition {definition!r}")
    if search not in ("ascend", "descend"):
        raise ValueError(f"unknown search {search!r}")
    symbols = as_symbols(text)
    n = len(symbols)
    out = []
    for t in range(1, 2 * n):
        if definition == "rev":
            out.append(_rev_length_at(symbols, t, n, model, search, kwargs))
        else:
            out.append(_sym_length_at(symbols, t, n, model, direction, search, kwargs))
    return out
