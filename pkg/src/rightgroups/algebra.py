"""Finite semigroups as explicit multiplication tables.

Groups, right-zero semigroups and their direct products (right groups
``G x R_r``) all live in :class:`MulTable`.  Elements are the indices
``0 .. order-1``; the names are for display only.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

GeneratingSet = tuple[int, ...]

#: Full associativity check is done up to this order; above it a random sample.
FULL_CHECK_ORDER = 64
SAMPLE_TRIPLES = 2000


class NotAGroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class MulTable:
    """A finite semigroup given by its Cayley table.

    ``table[i][j]`` is the index of the product of elements ``i`` and ``j``.
    Construction verifies closure, associativity (fully for small orders,
    by sampling otherwise) and the identity if one is declared.
    """

    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]
    identity: int | None = None
    label: str = "S"
    factors: tuple["MulTable", ...] = field(default=(), repr=False)

    def __post_init__(self):
        n = len(self.table)
        if n == 0:
            raise ValueError("empty table")
        if len(self.names) != n:
            raise ValueError("need one name per element")
        arr = np.asarray(self.table, dtype=np.int64)
        if arr.shape != (n, n):
            raise ValueError(f"table must be {n}x{n}, got {arr.shape}")
        if arr.min() < 0 or arr.max() >= n:
            raise ValueError("table entries out of range")
        _check_associative(arr)
        if self.identity is not None:
            e = self.identity
            if not (np.all(arr[e] == np.arange(n)) and np.all(arr[:, e] == np.arange(n))):
                raise ValueError(f"element {e} is not a two-sided identity")

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"MulTable({self.label}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"{self.label} has no element named {name!r}") from None

    @cached_property
    def is_group(self) -> bool:
        if self.identity is None:
            return False
        e = self.identity
        return all(e in row for row in self.table)

    @cached_property
    def inverse(self) -> tuple[int, ...]:
        if not self.is_group:
            raise NotAGroupError(f"{self.label} is not a group")
        e = self.identity
        return tuple(row.index(e) for row in self.table)

    def power(self, x: int, k: int) -> int:
        if k < 1:
            raise ValueError("only positive powers are defined in a semigroup")
        acc = x
        for _ in range(k - 1):
            acc = self.table[acc][x]
        return acc

    def right_translates_onto(self, t: int) -> bool:
        """True iff ``t*S == S``."""
        return len(set(self.table[t])) == self.order


def _check_associative(arr: np.ndarray, seed: int = 0) -> None:
    n = arr.shape[0]
    if n <= FULL_CHECK_ORDER:
        # (ab)c vs a(bc) for every triple at once
        left = arr[arr[:, :, None], np.arange(n)[None, None, :]]
        right = arr[np.arange(n)[:, None, None], arr[None, :, :]]
        bad = np.argwhere(left != right)
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, SAMPLE_TRIPLES))
        mask = arr[arr[a, b], c] != arr[a, arr[b, c]]
        bad = np.stack([a[mask], b[mask], c[mask]], axis=1)
    if len(bad):
        a, b, c = bad[0]
        raise ValueError(f"not associative at ({a}, {b}, {c})")


# --------------------------------------------------------------------------
# constructors

def make_cyclic(n: int) -> MulTable:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return MulTable(table, tuple(str(i) for i in range(n)), identity=0, label=f"Z{n}")


def make_dihedral(n: int) -> MulTable:
    """Symmetries of the n-gon, order 2n.

    Element ``k + n*f`` is ``rot^k flip^f``; named ``r<k>`` / ``s<k>``.
    """
    if n < 2:
        raise ValueError("dihedral group D_n needs n >= 2")
    elems = [(k, f) for f in (0, 1) for k in range(n)]
    pos = {e: i for i, e in enumerate(elems)}

    def mul(x, y):
        (k1, f1), (k2, f2) = x, y
        return ((k1 + (-k2 if f1 else k2)) % n, f1 ^ f2)

    table = tuple(tuple(pos[mul(x, y)] for y in elems) for x in elems)
    names = tuple(("s" if f else "r") + str(k) for k, f in elems)
    return MulTable(table, names, identity=0, label=f"D{n}")


def _perm_name(p: Sequence[int]) -> str:
    seen, cycles = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x))
            x = p[x]
        cycles.append("(" + "".join(cyc) + ")")
    return "".join(cycles) or "e"


def _parity(p: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j]) % 2


def _permutation_group(perms: list[tuple[int, ...]], label: str) -> MulTable:
    # product x*y acts as "x first, then y", matching right actions
    pos = {p: i for i, p in enumerate(perms)}
    table = tuple(tuple(pos[tuple(y[x[k]] for k in range(len(x)))] for y in perms) for x in perms)
    ident = pos[tuple(range(len(perms[0])))]
    return MulTable(table, tuple(_perm_name(p) for p in perms), identity=ident, label=label)


def make_symmetric(n: int) -> MulTable:
    if not 1 <= n <= 5:
        raise ValueError("symmetric groups are only built for 1 <= n <= 5")
    return _permutation_group(list(itertools.permutations(range(n))), f"S{n}")


def make_alternating(n: int) -> MulTable:
    if not 1 <= n <= 5:
        raise ValueError("alternating groups are only built for 1 <= n <= 5")
    perms = [p for p in itertools.permutations(range(n)) if _parity(p) == 0]
    return _permutation_group(perms, f"A{n}")


def make_right_zero(r: int) -> MulTable:
    """``R_r``: every product equals its right factor."""
    if r < 1:
        raise ValueError("right-zero semigroup needs r >= 1")
    table = tuple(tuple(range(r)) for _ in range(r))
    return MulTable(table, tuple(f"r{i + 1}" for i in range(r)),
                    identity=0 if r == 1 else None, label=f"R{r}")


def make_left_zero(r: int) -> MulTable:
    """Every product equals its left factor (not a right group for r >= 2)."""
    if r < 1:
        raise ValueError("left-zero semigroup needs r >= 1")
    table = tuple(tuple([i] * r) for i in range(r))
    return MulTable(table, tuple(f"l{i + 1}" for i in range(r)),
                    identity=0 if r == 1 else None, label=f"L{r}")


def _strip(name: str) -> str:
    return name[1:-1] if name.startswith("(") and name.endswith(")") else name


def direct_product(a: MulTable, b: MulTable) -> MulTable:
    """Componentwise product; ``(i, j)`` has index ``i*|b| + j``."""
    nb = b.order
    table = tuple(
        tuple(a.table[i1][i2] * nb + b.table[j1][j2] for i2 in range(a.order) for j2 in range(nb))
        for i1 in range(a.order) for j1 in range(nb)
    )
    names = tuple(f"({_strip(x)},{_strip(y)})" for x in a.names for y in b.names)
    identity = None
    if a.identity is not None and b.identity is not None:
        identity = a.identity * nb + b.identity
    factors = (a.factors or (a,)) + (b.factors or (b,))
    return MulTable(table, names, identity=identity, label=f"{a.label}x{b.label}", factors=factors)


def pair_index(b: MulTable, i: int, j: int) -> int:
    return i * b.order + j


def product_set(a: MulTable, c: Iterable[int], b: MulTable, d: Iterable[int]) -> GeneratingSet:
    """Indices of ``C x D`` inside ``a x b``, in lexicographic pair order."""
    return tuple(pair_index(b, i, j) for i in sorted(set(c)) for j in sorted(set(d)))


# --------------------------------------------------------------------------
# structure queries

def element_order(s: MulTable, x: int) -> int:
    if not s.is_group:
        raise NotAGroupError(f"{s.label} is not a group")
    k, acc = 1, x
    while acc != s.identity:
        acc = s.table[acc][x]
        k += 1
    return k


def closure(s: MulTable, c: Iterable[int]) -> frozenset[int]:
    """Subsemigroup generated by ``c`` (all non-empty products)."""
    gens = sorted(set(c))
    seen = set(gens)
    frontier = list(gens)
    table = s.table
    while frontier:
        nxt = []
        for x in frontier:
            row = table[x]
            for g in gens:
                y = row[g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def generates(s: MulTable, c: Iterable[int]) -> bool:
    return len(closure(s, c)) == s.order


def minimal_generating_sets(s: MulTable, cap: int = 120) -> list[GeneratingSet]:
    """All inclusion-minimal generating sets, sorted lexicographically.

    Sets are grown in increasing index order, adding only elements outside
    the closure of what is already chosen; every minimal generating set is
    reached this way and the survivors are filtered for irredundancy.
    """
    if s.order > cap:
        raise ValueError(f"order {s.order} exceeds the enumeration cap {cap}")
    full = s.order
    found: list[GeneratingSet] = []

    def irredundant(cs):
        return all(len(closure(s, cs[:i] + cs[i + 1:])) < full for i in range(len(cs)))

    def grow(chosen: tuple[int, ...], span: frozenset[int]):
        start = chosen[-1] + 1 if chosen else 0
        for x in range(start, full):
            if x in span:
                continue
            cs = chosen + (x,)
            sub = closure(s, cs)
            if len(sub) == full:
                if irredundant(cs):
                    found.append(cs)
            else:
                grow(cs, sub)

    grow((), frozenset())
    return sorted(found)


def minimum_generating_sets(s: MulTable, cap: int = 120) -> list[GeneratingSet]:
    """The minimum-cardinality view of :func:`minimal_generating_sets`."""
    sets = minimal_generating_sets(s, cap)
    k = min(len(c) for c in sets)
    return [c for c in sets if len(c) == k]


def involutions(s: MulTable) -> list[int]:
    return [x for x in range(s.order) if x != s.identity and s.table[x][x] == s.identity]


def two_involutions_generate(s: MulTable) -> bool:
    if not s.is_group:
        raise NotAGroupError(f"{s.label} is not a group")
    return any(generates(s, pair) for pair in itertools.combinations(involutions(s), 2))


def is_right_group(s: MulTable) -> bool:
    """``tS == S`` for every ``t``."""
    return all(s.right_translates_onto(t) for t in range(s.order))


# --------------------------------------------------------------------------
# group-spec grammar: Z<n>, D<n>, S<n>, A<n>, R<r> joined by "x"

_FACTOR = re.compile(r"([ZDSAR])(\d+)$")
_MAKERS = {"Z": make_cyclic, "D": make_dihedral, "S": make_symmetric,
           "A": make_alternating, "R": make_right_zero}


class SpecError(ValueError):
    pass


def parse_factors(spec: str) -> list[MulTable]:
    parts = spec.strip().split("x")
    if not spec.strip() or any(not p for p in parts):
        raise SpecError(f"malformed group spec {spec!r}")
    out = []
    for p in parts:
        m = _FACTOR.match(p)
        if not m:
            raise SpecError(f"unknown factor {p!r} in {spec!r}")
        try:
            out.append(_MAKERS[m.group(1)](int(m.group(2))))
        except ValueError as exc:
            raise SpecError(str(exc)) from exc
    return out


def build_product(factors: Sequence[MulTable]) -> MulTable:
    acc = factors[0]
    for f in factors[1:]:
        acc = direct_product(acc, f)
    return acc


def parse_group_spec(spec: str) -> MulTable:
    return build_product(parse_factors(spec))


def _factor_element(f: MulTable, token: str) -> list[int]:
    token = token.strip()
    if token == "*":
        return list(range(f.order))
    if token in f.names:
        return [f.names.index(token)]
    if token.isdigit() and int(token) < f.order:
        return [int(token)]
    raise SpecError(f"{token!r} is not an element of {f.label}")


def parse_generators(spec: str, text: str) -> GeneratingSet:
    """Parse ``"1,2"`` or ``"(1,*),(0,r1)"`` against a group spec.

    Plain integers index the whole product; tuples name one element per
    factor, ``*`` standing for every element of that factor.
    """
    factors = parse_factors(spec)
    whole = build_product(factors)
    text = text.strip()
    if not text:
        raise SpecError("empty generator list")
    gens: set[int] = set()
    for tup in re.findall(r"\(([^)]*)\)", text):
        tokens = tup.split(",")
        if len(tokens) != len(factors):
            raise SpecError(f"tuple ({tup}) needs {len(factors)} components")
        choices = [_factor_element(f, t) for f, t in zip(factors, tokens)]
        for combo in itertools.product(*choices):
            idx = 0
            for f, e in zip(factors, combo):
                idx = idx * f.order + e
            gens.add(idx)
    rest = re.sub(r"\([^)]*\)", "", text)
    for token in rest.split(","):
        token = token.strip()
        if not token:
            continue
        if token.isdigit():
            if int(token) >= whole.order:
                raise SpecError(f"generator {token} out of range for order {whole.order}")
            gens.add(int(token))
        elif token in whole.names:
            gens.add(whole.names.index(token))
        else:
            raise SpecError(f"unknown generator {token!r}")
    return tuple(sorted(gens))
