"""Combinatorics-on-words primitives.

Words are plain Python strings over a finite alphabet of single-character
letters.  The empty string is the empty word.  Everything here is a pure
function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass


class PreconditionError(ValueError):
    """An operation was called outside its stated domain."""


def factors(w: str) -> frozenset[str]:
    """All contiguous substrings of w, including the empty word."""
    out = {""}
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n + 1):
            out.add(w[i:j])
    return frozenset(out)


def _smallest_period(w: str) -> int:
    # border (KMP failure) function; smallest period = n - border(n)
    n = len(w)
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k > 0 and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    return n - fail[n - 1] if n else 0


def is_primitive(w: str) -> bool:
    """True iff w is not z^m for any shorter z with m > 1.

    The empty word counts as imprimitive.
    """
    if not w:
        return False
    p = _smallest_period(w)
    return p == len(w) or len(w) % p != 0


def primitive_root(w: str) -> tuple[str, int]:
    """The unique primitive z and exponent e with z^e = w (w nonempty)."""
    if not w:
        raise PreconditionError("primitive_root: empty word")
    p = _smallest_period(w)
    if p < len(w) and len(w) % p == 0:
        return w[:p], len(w) // p
    return w, 1


def are_conjugate(u: str, v: str) -> bool:
    """True iff u and v are rotations of one another (u, v nonempty)."""
    if not u or not v:
        raise PreconditionError("are_conjugate: words must be nonempty")
    return len(u) == len(v) and v in u + u


def are_coprimitive(u: str, v: str) -> bool:
    """True iff u and v are both primitive and not conjugate."""
    if not u or not v:
        raise PreconditionError("are_coprimitive: words must be nonempty")
    return is_primitive(u) and is_primitive(v) and not are_conjugate(u, v)


def exp(base: str, u: str) -> int:
    """Largest m such that base^m is a factor of u (base nonempty)."""
    if not base:
        raise PreconditionError("exp: empty base")
    m = 0
    while base * (m + 1) in u:
        m += 1
    return m


def power_factor_decompose(base: str, u: str) -> tuple[str, int, str]:
    """Split u = suffix . base^e . prefix with e = exp(base, u).

    Requires base primitive, u a factor of some base power, and e >= 1.
    The suffix is a proper suffix of base and the prefix a proper prefix;
    with those constraints the split is unique.
    """
    if not is_primitive(base):
        raise PreconditionError("power_factor_decompose: base not primitive")
    m = len(u) // len(base) + 2
    if u not in base * m:
        raise PreconditionError("power_factor_decompose: u is not a factor of any power of base")
    e = exp(base, u)
    if e == 0:
        raise PreconditionError("power_factor_decompose: exp(base, u) = 0")
    mid = base * e
    for i in range(len(u) - len(mid) + 1):
        if u[i : i + len(mid)] != mid:
            continue
        left, right = u[:i], u[i + len(mid) :]
        if len(left) < len(base) and base.endswith(left) and len(right) < len(base) and base.startswith(right):
            return left, e, right
    raise PreconditionError("power_factor_decompose: no valid split (unreachable for valid inputs)")


def common_factor_bound(u: str, v: str) -> tuple[int, tuple[int, int]]:
    """Largest length of a factor shared by any powers of u and v.

    Requires u, v co-primitive, so the intersection of factor sets of
    powers stabilizes.  Saturation exponents are chosen so both powers
    have length at least 2(|u| + |v|); stability at the next exponent is
    asserted rather than assumed.
    """
    if not are_coprimitive(u, v):
        raise PreconditionError("common_factor_bound: words are not co-primitive")
    target = 2 * (len(u) + len(v))
    n0 = -(-target // len(u))
    m0 = -(-target // len(v))
    inter = factors(u * n0) & factors(v * m0)
    nxt = factors(u * (n0 + 1)) & factors(v * (m0 + 1))
    if inter != nxt:
        raise AssertionError("common_factor_bound: intersection not stable at saturation")
    r = max(len(x) for x in inter)
    return r, (n0, m0)


def fibonacci(n: int) -> str:
    """The n-th Fibonacci word: F_0 = a, F_1 = ab, F_i = F_{i-1} F_{i-2}."""
    a, b = "a", "ab"
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, b + a
    return b


def fibonacci_marked(n: int, marker: str = "c") -> str:
    """Marker-separated concatenation of F_0 .. F_n, e.g. 'cacabc' for n = 1."""
    if len(marker) != 1:
        raise PreconditionError("fibonacci_marked: marker must be a single letter")
    return marker + marker.join(fibonacci(i) for i in range(n + 1)) + marker


@dataclass(frozen=True)
class Morphism:
    """A monoid morphism given letterwise; h(xy) = h(x)h(y) by construction."""

    images: tuple[tuple[str, str], ...]

    @staticmethod
    def from_dict(images: dict[str, str]) -> "Morphism":
        return Morphism(tuple(sorted(images.items())))

    def apply(self, w: str) -> str:
        table = dict(self.images)
        try:
            return "".join(table[c] for c in w)
        except KeyError as e:
            raise PreconditionError(f"morphism undefined on letter {e.args[0]!r}") from None


def is_scattered_subword(x: str, y: str) -> bool:
    """True iff x embeds into y as a (not necessarily contiguous) subsequence."""
    it = iter(y)
    return all(c in it for c in x)


def in_shuffle(x: str, y: str, z: str) -> bool:
    """True iff z is an interleaving of x and y.

    Reachability table over prefix pairs of x and y, quadratic in |x|*|y|.
    """
    if len(z) != len(x) + len(y):
        return False
    reach = {(0, 0)}
    for k, c in enumerate(z):
        nxt = set()
        for i, j in reach:
            if i + j != k:
                continue
            if i < len(x) and x[i] == c:
                nxt.add((i + 1, j))
            if j < len(y) and y[j] == c:
                nxt.add((i, j + 1))
        if not nxt:
            return False
        reach = nxt
    return (len(x), len(y)) in reach


def is_permutation(x: str, y: str) -> bool:
    return sorted(x) == sorted(y)


RELATION_ARITIES = {
    "num": 2,
    "add": 3,
    "mult": 3,
    "scatt": 2,
    "perm": 2,
    "rev": 2,
    "shuff": 3,
    "morph": 2,
}


def relation_oracle(name: str, args: tuple[str, ...] | list[str], morphism: Morphism | None = None) -> bool:
    """Decide membership of a word tuple in one of the built-in relations.

    Names: num_<letter> (equal counts of <letter>), add, mult (length
    arithmetic), scatt (scattered subword), perm, rev, shuff, morph (the
    last needs a Morphism).
    """
    args = tuple(args)
    base = name.split("_", 1)[0].lower()
    if base not in RELATION_ARITIES:
        raise PreconditionError(f"unknown relation {name!r}")
    if len(args) != RELATION_ARITIES[base]:
        raise PreconditionError(f"relation {name!r} expects {RELATION_ARITIES[base]} arguments, got {len(args)}")
    if base == "num":
        parts = name.split("_", 1)
        if len(parts) != 2 or len(parts[1]) != 1:
            raise PreconditionError("num relation must name a letter, e.g. num_a")
        letter = parts[1]
        return args[0].count(letter) == args[1].count(letter)
    if base == "add":
        return len(args[2]) == len(args[0]) + len(args[1])
    if base == "mult":
        return len(args[2]) == len(args[0]) * len(args[1])
    if base == "scatt":
        return is_scattered_subword(args[0], args[1])
    if base == "perm":
        return is_permutation(args[0], args[1])
    if base == "rev":
        return args[0] == args[1][::-1]
    if base == "shuff":
        return in_shuffle(args[0], args[1], args[2])
    if base == "morph":
        if morphism is None:
            raise PreconditionError("morph relation needs a morphism")
        return args[1] == morphism.apply(args[0])
    raise PreconditionError(f"unknown relation {name!r}")


@dataclass(frozen=True)
class SemilinearSet:
    """Finite union of linear sets {m0 + sum m_i n_i : n_i >= 0}."""

    components: tuple[tuple[int, tuple[int, ...]], ...]

    @staticmethod
    def of(*components: tuple[int, list[int] | tuple[int, ...]]) -> "SemilinearSet":
        return SemilinearSet(tuple((m0, tuple(ps)) for m0, ps in components))

    def __contains__(self, n: int) -> bool:
        return semilinear_member(self, n)


def semilinear_member(s: SemilinearSet, n: int) -> bool:
    """Decide n in s; coefficients are nonnegative so targets cap the search."""
    for m0, periods in s.components:
        if m0 == n:
            return True
        if m0 > n:
            continue
        rest = n - m0
        reachable = {0}
        for p in [p for p in periods if p > 0]:
            reachable = {r + k * p for r in reachable for k in range(rest // p + 1) if r + k * p <= rest}
        if rest in reachable:
            return True
    return False


def enumerate_semilinear_sets(max_param: int, max_components: int):
    """All semilinear sets with offsets/periods <= max_param and at most
    max_components components, periods as sets (multiplicity is redundant).
    Used by the brute-force non-semilinearity check."""
    period_sets = []
    for mask in range(2 ** max_param):
        ps = tuple(p for p in range(1, max_param + 1) if mask & (1 << (p - 1)))
        period_sets.append(ps)
    linear = [(m0, ps) for m0 in range(max_param + 1) for ps in period_sets]
    from itertools import combinations

    for k in range(1, max_components + 1):
        for combo in combinations(linear, k):
            yield SemilinearSet(tuple(combo))
