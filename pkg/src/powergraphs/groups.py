"""Finite groups as validated multiplication tables.

Every group is stored as an ``n x n`` integer table whose entry ``[i, j]`` is
the index of the product ``i * j``.  Index 0 is always the identity; the
constructors relabel elements when a table puts the identity elsewhere.

The family constructors (:func:`make`) cover the groups needed to exercise
both directions of the prime-exponent characterizations: cyclic, elementary
abelian, dihedral, symmetric, generalized quaternion, Heisenberg groups over
``F_p`` and direct products, plus tables and permutation generators read from
text files.
"""

from __future__ import annotations

import itertools
import math
import os
import re
from dataclasses import dataclass, field
from functools import cached_property, reduce
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .errors import InvalidSpec, NotAGroup, OrderCapExceeded, ParseError

DEFAULT_MAX_ORDER = 2048

FAMILIES = (
    "cyclic",
    "elementary_abelian",
    "dihedral",
    "symmetric",
    "generalized_quaternion",
    "heisenberg",
    "direct_product",
    "cayley_file",
    "perm_file",
)


def default_max_order() -> int:
    """Order cap, overridable through the ``PG_MAX_ORDER`` environment variable."""
    raw = os.environ.get("PG_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise InvalidSpec(f"PG_MAX_ORDER must be an integer, got {raw!r}") from None
    if value < 1:
        raise InvalidSpec("PG_MAX_ORDER must be positive")
    return value


# -- number theory ----------------------------------------------------------


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` by trial division."""
    if n < 1:
        raise ValueError("n must be positive")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def prime_power(n: int) -> Optional[tuple[int, int]]:
    """Return ``(p, k)`` when ``n = p**k`` with ``k >= 1``, else ``None``."""
    if n < 2:
        return None
    f = factorize(n)
    if len(f) != 1:
        return None
    (p, k), = f.items()
    return p, k


def euler_totient(n: int) -> int:
    """Number of integers in ``1..n`` coprime to ``n``."""
    if n < 1:
        raise ValueError("euler_totient requires n >= 1")
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


# -- the group type ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its Cayley table; index 0 is the identity.

    Build instances through :func:`from_cayley_table` or :func:`make`, which
    validate the group axioms.  The table array is read-only.
    """

    table: np.ndarray
    labels: Optional[tuple[str, ...]] = None
    name: str = ""

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        name = self.name or "group"
        return f"<FiniteGroup {name} of order {self.order}>"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(int(j) for j in np.argmin(self.table, axis=1))

    @cached_property
    def powers(self) -> tuple[tuple[int, ...], ...]:
        """``powers[x] = (e, x, x^2, ..., x^(o-1))``."""
        t = self.table
        out = []
        for x in range(self.order):
            seq = [0]
            p = x
            while p != 0:
                seq.append(p)
                p = int(t[p, x])
            out.append(tuple(seq))
        return tuple(out)

    @cached_property
    def orders(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.powers)

    @cached_property
    def cyclic_subgroups(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(s) for s in self.powers)

    @cached_property
    def power_matrix(self) -> np.ndarray:
        """Boolean matrix with ``[x, y]`` true iff ``y`` is a power of ``x``."""
        n = self.order
        m = np.zeros((n, n), dtype=bool)
        for x, seq in enumerate(self.powers):
            m[x, list(seq)] = True
        m.setflags(write=False)
        return m

    @cached_property
    def maximal_cyclic(self) -> tuple[frozenset[int], ...]:
        distinct = sorted(set(self.cyclic_subgroups), key=lambda s: (-len(s), sorted(s)))
        maximal: list[frozenset[int]] = []
        for s in distinct:
            if not any(s < m for m in maximal):
                maximal.append(s)
        return tuple(sorted(maximal, key=sorted))

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))


def _freeze(table: np.ndarray) -> np.ndarray:
    table = np.ascontiguousarray(table, dtype=np.int64)
    table.setflags(write=False)
    return table


# -- validation and construction from tables -------------------------------


def _as_table(table) -> np.ndarray:
    try:
        arr = np.asarray(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise NotAGroup("not-a-table", str(exc)) from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise NotAGroup("not-a-table", f"shape {arr.shape} is not n x n with n >= 1")
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        raise NotAGroup("not-a-table", f"entries must lie in 0..{n - 1}")
    return arr


def validate_table(arr: np.ndarray) -> int:
    """Check the group axioms; return the index of the identity.

    Raises :class:`NotAGroup` with reason ``no-identity``, ``not-latin`` or
    ``not-associative``.
    """
    n = arr.shape[0]
    ar = np.arange(n)
    rows_id = np.flatnonzero((arr == ar[None, :]).all(axis=1))
    identity = next((int(e) for e in rows_id if np.array_equal(arr[:, e], ar)), None)
    if identity is None:
        raise NotAGroup("no-identity")
    if not (np.sort(arr, axis=1) == ar).all() or not (np.sort(arr, axis=0) == ar[:, None]).all():
        raise NotAGroup("not-latin")
    for i in range(n):
        # (i*j)*k == i*(j*k) for all j, k
        if not np.array_equal(arr[arr[i]], arr[i][arr]):
            raise NotAGroup("not-associative", f"fails for left factor {i}")
    # Inverses follow from the Latin property; assert them anyway.
    left = (arr == identity).any(axis=0)
    right = (arr == identity).any(axis=1)
    if not (left.all() and right.all()):
        raise NotAGroup("no-inverse")
    return identity


def from_cayley_table(
    table,
    labels: Optional[Sequence[str]] = None,
    name: str = "",
    max_order: Optional[int] = None,
) -> FiniteGroup:
    """Validate a multiplication table and return the group.

    If the identity is not at index 0 it is swapped with element 0, and the
    labels follow their elements.
    """
    arr = _as_table(table)
    cap = default_max_order() if max_order is None else max_order
    if arr.shape[0] > cap:
        raise OrderCapExceeded(f"order {arr.shape[0]} exceeds cap {cap}")
    identity = validate_table(arr)
    if identity != 0:
        perm = np.arange(arr.shape[0])
        perm[[0, identity]] = perm[[identity, 0]]
        arr = perm[arr[np.ix_(perm, perm)]]
        if labels is not None:
            labels = [labels[int(i)] for i in perm]
    if labels is not None:
        labels = tuple(str(s) for s in labels)
        if len(labels) != arr.shape[0]:
            raise InvalidSpec("label count does not match the group order")
    return FiniteGroup(_freeze(arr), labels, name)


def _from_elements(elements: list, mul, name: str, labeler=str) -> FiniteGroup:
    """Build a table from an element list (identity first) and a product."""
    index = {el: i for i, el in enumerate(elements)}
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            table[i, j] = index[mul(a, b)]
    return FiniteGroup(_freeze(table), tuple(labeler(el) for el in elements), name)


def read_cayley_file(path, max_order: Optional[int] = None) -> FiniteGroup:
    """Read the text table format: ``n`` on line one, then ``n`` rows of indices."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 1:
        raise ParseError("first line must hold the group order")
    try:
        n = int(lines[0][0])
        rows = [[int(tok) for tok in ln] for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if n < 1 or len(rows) != n or any(len(r) != n for r in rows):
        raise ParseError(f"expected {n} rows of {n} entries")
    return from_cayley_table(rows, name=Path(path).name, max_order=max_order)


# -- permutation groups -----------------------------------------------------

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: Optional[int] = None) -> tuple[int, ...]:
    """Parse cycle notation such as ``"(1 2 3)(4 5)"`` into a 0-based image tuple."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty permutation")
    if _CYCLE.sub("", stripped).strip():
        raise ParseError(f"malformed cycle text {text!r}")
    cycles = []
    for body in _CYCLE.findall(stripped):
        try:
            pts = [int(tok) for tok in body.replace(",", " ").split()]
        except ValueError:
            raise ParseError(f"non-integer point in {text!r}") from None
        if any(p < 1 for p in pts) or len(set(pts)) != len(pts):
            raise ParseError(f"bad cycle {body!r}")
        cycles.append(pts)
    top = max((max(c) for c in cycles if c), default=0)
    deg = max(top, degree or 0)
    img = list(range(deg))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b - 1
    # points touched by two cycles would make this a non-bijection
    if sorted(img) != list(range(deg)):
        raise ParseError(f"cycles in {text!r} are not disjoint")
    return tuple(img)


def format_permutation(perm: Sequence[int]) -> str:
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        parts.append("(" + " ".join(str(p + 1) for p in cyc) + ")")
    return "".join(parts) or "()"


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # (p*q)(x) = p(q(x))
    return tuple(p[i] for i in q)


def from_permutation_generators(gens: Sequence[str], max_order: int = DEFAULT_MAX_ORDER, name: str = "") -> FiniteGroup:
    """Close a list of permutations (cycle notation, points ``1..k``) under composition."""
    if max_order < 1:
        raise InvalidSpec("max_order must be >= 1")
    raw = [parse_permutation(g) for g in gens]
    degree = max((len(p) for p in raw), default=0)
    perms = [tuple(p) + tuple(range(len(p), degree)) for p in raw]
    identity = tuple(range(degree))
    elements = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in perms:
                b = _compose(a, g)
                if b not in seen:
                    seen.add(b)
                    elements.append(b)
                    nxt.append(b)
                    if len(elements) > max_order:
                        raise OrderCapExceeded(f"closure exceeds {max_order} elements")
        frontier = nxt
    return _from_elements(elements, _compose, name or "perm", format_permutation)


def read_permutation_file(path, max_order: Optional[int] = None) -> FiniteGroup:
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    gens = [ln for ln in (s.strip() for s in lines) if ln and not ln.startswith("#")]
    if not gens:
        raise ParseError(f"{path}: no generators")
    cap = default_max_order() if max_order is None else max_order
    return from_permutation_generators(gens, cap, name=Path(path).name)


# -- group specifications ---------------------------------------------------


@dataclass(frozen=True)
class GroupSpec:
    """A family name plus its parameters; ``direct_product`` takes two child specs."""

    family: str
    params: tuple = field(default_factory=tuple)

    def __str__(self) -> str:
        if self.family == "direct_product":
            return "direct_product " + " ".join(f"[{c}]" for c in self.params)
        return " ".join([self.family, *map(str, self.params)])

    def validate(self) -> None:
        fam, ps = self.family, self.params
        if fam not in FAMILIES:
            raise InvalidSpec(f"unknown family {fam!r}")
        arity = {"cyclic": 1, "elementary_abelian": 2, "dihedral": 1, "symmetric": 1,
                 "generalized_quaternion": 1, "heisenberg": 1, "direct_product": 2,
                 "cayley_file": 1, "perm_file": 1}[fam]
        if len(ps) != arity:
            raise InvalidSpec(f"{fam} takes {arity} parameter(s), got {len(ps)}")
        if fam == "direct_product":
            for child in ps:
                if not isinstance(child, GroupSpec):
                    raise InvalidSpec("direct_product parameters must be group specs")
                child.validate()
            return
        if fam in ("cayley_file", "perm_file"):
            return
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in ps):
            raise InvalidSpec(f"{fam} parameters must be integers")
        if fam in ("cyclic", "dihedral", "symmetric") and ps[0] < 1:
            raise InvalidSpec(f"{fam} requires n >= 1, got {ps[0]}")
        if fam == "elementary_abelian":
            p, r = ps
            if not is_prime(p):
                raise InvalidSpec(f"elementary_abelian requires p prime, got {p}")
            if r < 1:
                raise InvalidSpec(f"elementary_abelian requires rank r >= 1, got {r}")
        if fam == "generalized_quaternion":
            pp = prime_power(ps[0])
            if pp is None or pp[0] != 2 or pp[1] < 3:
                raise InvalidSpec(f"generalized_quaternion requires order 2^k with k >= 3, got {ps[0]}")
        if fam == "heisenberg" and not is_prime(ps[0]):
            raise InvalidSpec(f"heisenberg requires p prime, got {ps[0]}")


def _tokenize(text: str) -> list[str]:
    return re.findall(r"\[|\]|[^\s\[\]]+", text)


def parse_spec(text: str) -> GroupSpec:
    """Parse ``"elementary_abelian 3 2"`` or ``"direct_product [cyclic 2] [cyclic 4]"``."""
    tokens = _tokenize(text)
    spec, rest = _parse_tokens(tokens)
    if rest:
        raise ParseError(f"trailing tokens in {text!r}")
    return spec


def _parse_tokens(tokens: list[str]) -> tuple[GroupSpec, list[str]]:
    if not tokens or tokens[0] in "[]":
        raise ParseError("expected a family name")
    family, rest = tokens[0], tokens[1:]
    if family == "quaternion":
        family = "generalized_quaternion"
    if family == "direct_product":
        children = []
        for _ in range(2):
            if not rest or rest[0] != "[":
                raise ParseError("direct_product expects two bracketed specs")
            child, rest = _parse_tokens(rest[1:])
            if not rest or rest[0] != "]":
                raise ParseError("unbalanced brackets")
            children.append(child)
            rest = rest[1:]
        return GroupSpec(family, tuple(children)), rest
    params = []
    while rest and rest[0] not in "[]":
        tok = rest.pop(0)
        if family in ("cayley_file", "perm_file"):
            params.append(tok)
        else:
            try:
                params.append(int(tok))
            except ValueError:
                raise ParseError(f"non-integer parameter {tok!r} for {family}") from None
    return GroupSpec(family, tuple(params)), rest


# -- family constructors ----------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    ar = np.arange(n)
    labels = ["e", "x"] + [f"x^{k}" for k in range(2, n)]
    return FiniteGroup(_freeze((ar[:, None] + ar[None, :]) % n), tuple(labels[:n]), f"Z{n}")


def elementary_abelian(p: int, r: int) -> FiniteGroup:
    vecs = list(itertools.product(range(p), repeat=r))
    return _from_elements(
        vecs,
        lambda a, b: tuple((x + y) % p for x, y in zip(a, b)),
        f"E({p},{r})",
        lambda v: "(" + ",".join(map(str, v)) + ")",
    )


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order ``2n``; element ``r^a s^b``."""
    els = [(a, b) for b in range(2) for a in range(n)]

    def mul(x, y):
        (a, b), (c, d) = x, y
        return ((a + (c if b == 0 else -c)) % n, (b + d) % 2)

    def lab(x):
        a, b = x
        r = "" if a == 0 else ("r" if a == 1 else f"r^{a}")
        s = "s" if b else ""
        return (r + s) or "e"

    return _from_elements(els, mul, f"D{n}", lab)


def symmetric(n: int) -> FiniteGroup:
    els = list(itertools.permutations(range(n)))  # identity first
    return _from_elements(els, _compose, f"S{n}", format_permutation)


def generalized_quaternion(order: int) -> FiniteGroup:
    """``<a, b | a^m = 1, b^2 = a^(m/2), b a b^-1 = a^-1>`` with ``m = order/2``."""
    m = order // 2
    els = [(i, j) for j in range(2) for i in range(m)]

    def mul(x, y):
        (i, j), (k, l) = x, y
        a = i + (k if j == 0 else -k)
        if j + l == 2:
            a += m // 2
        return (a % m, (j + l) % 2)

    def lab(x):
        i, j = x
        a = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
        return (a + ("b" if j else "")) or "e"

    return _from_elements(els, mul, f"Q{order}", lab)


def heisenberg(p: int) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over ``F_p``; ``(a, b, c)`` is
    ``[[1, a, c], [0, 1, b], [0, 0, 1]]``."""
    els = list(itertools.product(range(p), repeat=3))

    def mul(x, y):
        a, b, c = x
        a2, b2, c2 = y
        return ((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p)

    return _from_elements(els, mul, f"H({p})", lambda v: "[" + ",".join(map(str, v)) + "]")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Element ``(i, j)`` has index ``i * |h| + j``."""
    a, b = g.table, h.table
    nb = h.order
    table = (a[:, None, :, None] * nb + b[None, :, None, :]).reshape(g.order * nb, g.order * nb)
    labels = tuple(f"({g.label(i)},{h.label(j)})" for i in range(g.order) for j in range(nb))
    return FiniteGroup(_freeze(table), labels, f"{g.name}x{h.name}")


def _predicted_order(spec: GroupSpec) -> Optional[int]:
    fam, ps = spec.family, spec.params
    if fam == "cyclic":
        return ps[0]
    if fam == "elementary_abelian":
        return ps[0] ** ps[1]
    if fam == "dihedral":
        return 2 * ps[0]
    if fam == "symmetric":
        return math.factorial(ps[0])
    if fam == "generalized_quaternion":
        return ps[0]
    if fam == "heisenberg":
        return ps[0] ** 3
    if fam == "direct_product":
        a, b = (_predicted_order(c) for c in ps)
        return None if a is None or b is None else a * b
    return None


def make(spec: GroupSpec | str, max_order: Optional[int] = None) -> FiniteGroup:
    """Construct the group described by ``spec`` (a :class:`GroupSpec` or its text form)."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    spec.validate()
    cap = default_max_order() if max_order is None else max_order
    predicted = _predicted_order(spec)
    if predicted is not None and predicted > cap:
        raise OrderCapExceeded(f"{spec} has order {predicted} > cap {cap}")
    fam, ps = spec.family, spec.params
    if fam == "cyclic":
        g = cyclic(*ps)
    elif fam == "elementary_abelian":
        g = elementary_abelian(*ps)
    elif fam == "dihedral":
        g = dihedral(*ps)
    elif fam == "symmetric":
        g = symmetric(*ps)
    elif fam == "generalized_quaternion":
        g = generalized_quaternion(*ps)
    elif fam == "heisenberg":
        g = heisenberg(*ps)
    elif fam == "direct_product":
        g = direct_product(make(ps[0], cap), make(ps[1], cap))
    elif fam == "cayley_file":
        g = read_cayley_file(ps[0], cap)
    else:
        g = read_permutation_file(ps[0], cap)
    return g


# -- element-level queries --------------------------------------------------


def _check_element(g: FiniteGroup, x: int) -> None:
    if not 0 <= x < g.order:
        raise IndexError(f"element {x} not in group of order {g.order}")


def element_order(g: FiniteGroup, x: int) -> int:
    _check_element(g, x)
    return g.orders[x]


def cyclic_subgroup(g: FiniteGroup, x: int) -> frozenset[int]:
    _check_element(g, x)
    return g.cyclic_subgroups[x]


def generator_class(g: FiniteGroup, x: int) -> frozenset[int]:
    """Generators of ``<x>``: the powers ``x^k`` with ``gcd(k, o(x)) = 1``."""
    _check_element(g, x)
    seq = g.powers[x]
    o = len(seq)
    if o == 1:
        return frozenset({0})
    return frozenset(seq[k] for k in range(1, o) if math.gcd(k, o) == 1)


def maximal_cyclic_subgroups(g: FiniteGroup) -> list[frozenset[int]]:
    """Cyclic subgroups not properly contained in another cyclic subgroup."""
    return list(g.maximal_cyclic)


def count_maximal_containing(g: FiniteGroup, x: int) -> int:
    _check_element(g, x)
    return sum(1 for m in g.maximal_cyclic if x in m)


def exponent(g: FiniteGroup) -> int:
    return reduce(math.lcm, g.orders, 1)


def subgroup_generated(g: FiniteGroup, gens: Sequence[int]) -> frozenset[int]:
    """Closure of ``gens`` under multiplication (finite, so a subgroup)."""
    t = g.table
    members = {0}
    frontier = [0]
    gens = [int(x) for x in gens]
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                b = int(t[a, s])
                if b not in members:
                    members.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(members)


def maximal_subgroups_of_order_two(g: FiniteGroup) -> list[frozenset[int]]:
    """Subgroups ``{e, y}`` that are maximal among *all* proper subgroups."""
    out = []
    for y in range(1, g.order):
        if g.orders[y] != 2:
            continue
        h = frozenset({0, y})
        if g.order == 2:
            out.append(h)
            continue
        if all(len(subgroup_generated(g, [y, z])) == g.order for z in range(g.order) if z not in h):
            out.append(h)
    return out


@dataclass(frozen=True)
class Classification:
    order: int
    exponent: int
    is_abelian: bool
    is_cyclic: bool
    is_cyclic_prime_power: bool
    prime_exponent: Optional[int]
    is_p_group: Optional[int]
    elementary_abelian: Optional[tuple[int, int]]
    maximal_cyclic_count: int

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "exponent": self.exponent,
            "isAbelian": self.is_abelian,
            "isCyclic": self.is_cyclic,
            "isCyclicPrimePower": self.is_cyclic_prime_power,
            "primeExponent": self.prime_exponent,
            "pGroup": self.is_p_group,
            "elementaryAbelian": list(self.elementary_abelian) if self.elementary_abelian else None,
            "maximalCyclicSubgroups": self.maximal_cyclic_count,
        }


def classify(g: FiniteGroup) -> Classification:
    n = g.order
    exp = exponent(g)
    cyclic_ = exp == n
    pp = prime_power(n)
    p_exp = exp if is_prime(exp) else None
    ea = None
    if p_exp is not None and g.is_abelian:
        ea = (p_exp, prime_power(n)[1])
    return Classification(
        order=n,
        exponent=exp,
        is_abelian=g.is_abelian,
        is_cyclic=cyclic_,
        is_cyclic_prime_power=cyclic_ and (n == 1 or pp is not None),
        prime_exponent=p_exp,
        is_p_group=pp[0] if pp else None,
        elementary_abelian=ea,
        maximal_cyclic_count=len(g.maximal_cyclic),
    )


def canonical_relabel(g: FiniteGroup) -> FiniteGroup:
    """Reorder elements by ``(order, index)``; the identity stays at 0."""
    perm = sorted(range(g.order), key=lambda x: (g.orders[x], x))
    return relabel(g, perm)


def relabel(g: FiniteGroup, perm: Sequence[int]) -> FiniteGroup:
    """New group whose element ``k`` is old element ``perm[k]``."""
    perm = np.asarray(perm, dtype=np.int64)
    inv = np.empty_like(perm)
    inv[perm] = np.arange(len(perm))
    table = inv[g.table[np.ix_(perm, perm)]]
    labels = tuple(g.labels[int(i)] for i in perm) if g.labels else None
    return FiniteGroup(_freeze(table), labels, g.name)
