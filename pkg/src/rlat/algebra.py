"""Finite residuated lattices: representation, validation, file format.

A :class:`Lattice` is built from its order relation and monoid table; meets
and joins are derived from the order, and the residual is derived from the
monoid table when not supplied.  Construction validates every axiom and
re-indexes elements along a linear extension of the order (bottom first,
top last), so that indices are deterministic for a given input.
"""

from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import bits
from .errors import (
    CapacityExceeded,
    InternalInconsistency,
    NotALattice,
    NotAMonoid,
    ParseError,
    ResiduationFails,
    TrivialLattice,
)

MAX_ORDER = 64
MAGIC = ("rlat", "1")

Table = Tuple[Tuple[int, ...], ...]


def _linear_extension(n, leq):
    """Kahn's algorithm, always taking the lowest-numbered minimal element."""
    placed = []
    remaining = set(range(n))
    while remaining:
        for x in sorted(remaining):
            if not any(leq[y][x] for y in remaining if y != x):
                placed.append(x)
                remaining.remove(x)
                break
        else:  # pragma: no cover - guarded by the antisymmetry check
            raise NotALattice("order relation has a cycle")
    return placed


class Lattice:
    """An immutable, validated finite residuated lattice.

    Elements are the integers ``0 .. n-1``; ``names`` holds their labels.
    ``bottom`` is always 0 and ``top`` always ``n-1``.
    """

    def __init__(
        self,
        names: Sequence[str],
        leq: Sequence[Sequence[bool]],
        odot: Sequence[Sequence[int]],
        arrow: Optional[Sequence[Sequence[int]]] = None,
        bottom: Optional[int] = None,
        top: Optional[int] = None,
    ):
        n = len(names)
        if n > MAX_ORDER:
            raise CapacityExceeded(f"{n} elements; at most {MAX_ORDER} are supported")
        if n < 2:
            raise TrivialLattice("the one-element lattice (0 = 1) is not supported")
        if len(set(names)) != n:
            raise ParseError("element names must be distinct")
        for label, table in (("leq", leq), ("odot", odot), ("arrow", arrow)):
            if table is None:
                continue
            if len(table) != n or any(len(row) != n for row in table):
                raise ParseError(f"{label} table is not {n}x{n}")
            if label != "leq" and any(not 0 <= v < n for row in table for v in row):
                raise ParseError(f"{label} table has an entry outside the element set")
        leq = [[bool(v) for v in row] for row in leq]
        _check_partial_order(names, leq)

        least = [x for x in range(n) if all(leq[x][y] for y in range(n))]
        greatest = [x for x in range(n) if all(leq[y][x] for y in range(n))]
        if not least or not greatest:
            raise NotALattice("the order has no bottom or no top element")
        if bottom is not None and bottom != least[0]:
            raise NotALattice(f"declared bottom {names[bottom]} is not the least element")
        if top is not None and top != greatest[0]:
            raise NotALattice(f"declared top {names[top]} is not the greatest element")

        # Re-index along a linear extension: old index order[i] becomes i.
        order = _linear_extension(n, leq)
        new = {old: i for i, old in enumerate(order)}
        self.names = tuple(names[old] for old in order)
        self.leq = tuple(tuple(leq[a][b] for b in order) for a in order)
        odot = tuple(tuple(new[odot[a][b]] for b in order) for a in order)
        if arrow is not None:
            arrow = tuple(tuple(new[arrow[a][b]] for b in order) for a in order)
        self.n = n
        self.bottom = 0
        self.top = n - 1

        self.up = tuple(bits.mask_of(y for y in range(n) if self.leq[x][y]) for x in range(n))
        self.down = tuple(bits.mask_of(y for y in range(n) if self.leq[y][x]) for x in range(n))
        self.meet = self._bound_table(self.down, greatest=True)
        self.join = self._bound_table(self.up, greatest=False)
        self.odot = odot
        self.arrow = self._check_residuation(arrow)
        self._check_monoid()
        self._check_monotone()
        self._index = {name: i for i, name in enumerate(self.names)}

    # -- construction helpers -------------------------------------------

    def _bound_table(self, cones, greatest):
        n = self.n
        rows = []
        for x in range(n):
            row = []
            for y in range(n):
                common = cones[x] & cones[y]
                # the meet is the greatest lower bound: a common lower bound
                # above every other one (dually for joins)
                best = [
                    z
                    for z in bits.members(common)
                    if bits.is_subset(common, self.down[z] if greatest else self.up[z])
                ]
                if len(best) != 1:
                    kind = "meet" if greatest else "join"
                    raise NotALattice(
                        f"{self.names[x]} and {self.names[y]} have no unique {kind}",
                        witness=(self.names[x], self.names[y]),
                    )
                row.append(best[0])
            rows.append(tuple(row))
        return tuple(rows)

    def _check_residuation(self, arrow):
        n, leq, odot = self.n, self.leq, self.odot
        if arrow is None:
            derived = []
            for x in range(n):
                row = []
                for y in range(n):
                    acc = self.bottom
                    for z in range(n):
                        if leq[odot[x][z]][y]:
                            acc = self.join[acc][z]
                    row.append(acc)
                derived.append(tuple(row))
            arrow = tuple(derived)
        for x, z, y in product(range(n), repeat=3):
            if leq[odot[x][z]][y] != leq[z][arrow[x][y]]:
                nm = self.names
                raise ResiduationFails(
                    f"adjunction fails for x={nm[x]}, z={nm[z]}, y={nm[y]}: "
                    f"x⊙z ≤ y is {leq[odot[x][z]][y]} but z ≤ x→y is {leq[z][arrow[x][y]]}",
                    witness=(nm[x], nm[z], nm[y]),
                )
        return arrow

    def _check_monoid(self):
        n, odot, nm = self.n, self.odot, self.names
        for x in range(n):
            if odot[x][self.top] != x or odot[self.top][x] != x:
                raise NotAMonoid(f"top is not a unit for {nm[x]}", witness=(nm[x],))
        for x, y in product(range(n), repeat=2):
            if odot[x][y] != odot[y][x]:
                raise NotAMonoid(
                    f"⊙ is not commutative at ({nm[x]}, {nm[y]})", witness=(nm[x], nm[y])
                )
        for x, y, z in product(range(n), repeat=3):
            if odot[odot[x][y]][z] != odot[x][odot[y][z]]:
                raise NotAMonoid(
                    f"⊙ is not associative at ({nm[x]}, {nm[y]}, {nm[z]})",
                    witness=(nm[x], nm[y], nm[z]),
                )

    def _check_monotone(self):
        # Implied by the adjunction; a failure here means the checks above are wrong.
        n, leq, odot = self.n, self.leq, self.odot
        for x, y, z in product(range(n), repeat=3):
            if leq[x][y] and not leq[odot[x][z]][odot[y][z]]:
                raise InternalInconsistency("⊙ is residuated but not order-preserving")

    # -- element access ---------------------------------------------------

    def __repr__(self):
        return f"Lattice({' '.join(self.names)})"

    def __len__(self):
        return self.n

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no element named {name!r}") from None

    def element(self, x) -> int:
        """Accept an index or a name."""
        return self.index(x) if isinstance(x, str) else x

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def mask(self, elements: Iterable) -> int:
        return bits.mask_of(self.element(x) for x in elements)

    def names_of(self, mask: int) -> List[str]:
        return [self.names[i] for i in bits.members(mask)]

    @property
    def full(self) -> int:
        return bits.full(self.n)

    @property
    def unit_mask(self) -> int:
        return 1 << self.top

    def tables_equal(self, other: "Lattice") -> bool:
        return (
            self.names == other.names
            and self.leq == other.leq
            and self.odot == other.odot
            and self.arrow == other.arrow
        )


def _check_partial_order(names, leq):
    n = len(names)
    for x in range(n):
        if not leq[x][x]:
            raise NotALattice(f"≤ is not reflexive at {names[x]}", witness=(names[x],))
    for x, y in product(range(n), repeat=2):
        if x != y and leq[x][y] and leq[y][x]:
            raise NotALattice(
                f"≤ is not antisymmetric: {names[x]} ≤ {names[y]} ≤ {names[x]}",
                witness=(names[x], names[y]),
            )
    for x, y, z in product(range(n), repeat=3):
        if leq[x][y] and leq[y][z] and not leq[x][z]:
            raise NotALattice(
                f"≤ is not transitive at {names[x]}, {names[y]}, {names[z]}",
                witness=(names[x], names[y], names[z]),
            )


# -- element arithmetic ----------------------------------------------------


def star(L: Lattice, x: int) -> int:
    """x* = x → 0."""
    return L.arrow[x][L.bottom]


def power(L: Lattice, x: int, k: int) -> int:
    if k < 0:
        raise ValueError("exponent must be non-negative")
    acc = L.top
    for _ in range(k):
        acc = L.odot[acc][x]
    return acc


def powers(L: Lattice, x: int) -> List[int]:
    """Distinct values of x^1, x^2, ... in order of first appearance.

    The sequence lives in a finite monoid so it is eventually periodic; the
    returned list is every value it ever takes.
    """
    seen = []
    acc = x
    while acc not in seen:
        seen.append(acc)
        acc = L.odot[acc][x]
    # the cycle re-enters at acc; later values are already listed
    return seen


@dataclass(frozen=True)
class BooleanCenter:
    members: int
    complement: Dict[int, int]

    def __contains__(self, x):
        return bool(self.members >> x & 1)

    def __iter__(self):
        return bits.members(self.members)


def boolean_center(L: Lattice) -> BooleanCenter:
    complement = {}
    for x in range(L.n):
        found = [y for y in range(L.n) if L.meet[x][y] == L.bottom and L.join[x][y] == L.top]
        if len(found) > 1:
            raise InternalInconsistency(f"{L.names[x]} has more than one complement")
        if found:
            complement[x] = found[0]
    return BooleanCenter(bits.mask_of(complement), complement)


# -- element laws ----------------------------------------------------------

ELEMENT_LAWS = (
    "leq-iff-arrow-top",
    "star-antitone",
    "odot-zero-iff-below-star",
    "modus-ponens-bounds",
    "coprime-meet-is-product",
    "join-odot-distributivity",
    "boolean-complement-is-star",
    "boolean-odot-is-meet",
    "boolean-arrow-forms",
    "excluded-middle-is-boolean",
    "boolean-below-iff",
)


def check_element_laws(L: Lattice) -> Dict[str, Optional[dict]]:
    """Exhaustively check the standard arithmetic laws of residuated lattices.

    Returns a mapping from law name (see ``ELEMENT_LAWS``) to ``None`` when
    the law holds for every assignment, or to a witnessing assignment of names.
    """
    n, le, meet, join, odot, arrow = L.n, L.le, L.meet, L.join, L.odot, L.arrow
    bot, top = L.bottom, L.top
    st = [star(L, x) for x in range(n)]
    B = boolean_center(L)
    boolean = list(B)
    nm = L.names
    E = range(n)

    def w(**kw):
        return {k: nm[v] for k, v in kw.items()}

    def first(cases):
        for case in cases:
            if case is not None:
                return case
        return None

    pw = [[power(L, x, k) for k in range(n + 1)] for x in E]

    def law1():
        for x, y in product(E, E):
            if le(x, y) != (arrow[x][y] == top):
                return w(x=x, y=y)

    def law2():
        for x, y in product(E, E):
            if le(x, y) and not le(st[y], st[x]):
                return w(x=x, y=y)

    def law3():
        for x, y in product(E, E):
            if (odot[x][y] == bot) != le(x, st[y]):
                return w(x=x, y=y)
        for x in E:
            if odot[x][st[x]] != bot:
                return w(x=x)

    def law4():
        for x, y in product(E, E):
            if not le(odot[x][arrow[x][y]], y) or not le(y, arrow[x][y]):
                return w(x=x, y=y)

    def law5():
        for x, y in product(E, E):
            if join[x][y] != top:
                continue
            if meet[x][y] != odot[x][y]:
                return w(x=x, y=y)
            for a, b in product(range(1, n + 1), repeat=2):
                if join[pw[x][a]][pw[y][b]] != top:
                    return dict(w(x=x, y=y), n=a, m=b)

    def law6():
        for x, y, z in product(E, E, E):
            if not le(odot[join[x][y]][join[x][z]], join[x][odot[y][z]]):
                return w(x=x, y=y, z=z)
            if odot[x][join[y][z]] != join[odot[x][y]][odot[x][z]]:
                return w(x=x, y=y, z=z)
        for x, y in product(E, E):
            if st[join[x][y]] != meet[st[x]][st[y]]:
                return w(x=x, y=y)

    def law7():
        for e in boolean:
            if B.complement[e] != st[e]:
                return w(e=e)
            if meet[e][st[e]] != bot or odot[e][st[e]] != bot or st[st[e]] != e:
                return w(e=e)
            if any(pw[e][k] != e for k in range(1, n + 1)):
                return w(e=e)
            for f in boolean:
                if odot[e][f] != meet[e][f] or odot[e][f] not in B:
                    return w(e=e, f=f)

    def law8():
        for e in boolean:
            for x in E:
                if odot[e][x] != meet[e][x]:
                    return w(e=e, x=x)
            for x, y in product(E, E):
                if meet[e][odot[x][y]] != odot[meet[e][x]][meet[e][y]]:
                    return w(e=e, x=x, y=y)
                if join[e][odot[x][y]] != odot[join[e][x]][join[e][y]]:
                    return w(e=e, x=x, y=y)

    def law9():
        for e in boolean:
            for x in E:
                if arrow[e][x] != join[st[e]][x] or arrow[x][e] != join[st[x]][e]:
                    return w(e=e, x=x)
                if odot[e][arrow[e][x]] != meet[e][x] or odot[x][arrow[x][e]] != meet[e][x]:
                    return w(e=e, x=x)

    def law10():
        for x in E:
            if join[x][st[x]] == top and x not in B:
                return w(x=x)

    def law11():
        for e in boolean:
            for x in E:
                a, b, c = le(e, x), arrow[e][x] == top, join[st[e]][x] == top
                if not a == b == c:
                    return w(e=e, x=x)

    laws = [law1, law2, law3, law4, law5, law6, law7, law8, law9, law10, law11]
    return {name: law() for name, law in zip(ELEMENT_LAWS, laws)}


# -- file format -----------------------------------------------------------

_INLINE = ("elements", "bottom", "top")
_TABLES = ("leq", "odot", "arrow")


def _content_lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def parse_lattice(text: str) -> dict:
    """Parse lattice file text into raw name-level sections.

    Raises :class:`ParseError` on any syntactic problem; no axiom is checked.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input")
    number, first = lines[0]
    if tuple(first.split()) != MAGIC:
        raise ParseError(f"line {number}: expected magic line 'rlat 1', got {first!r}")
    sections = {}
    names = None
    i = 1
    while i < len(lines):
        number, line = lines[i]
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in _INLINE + _TABLES:
            raise ParseError(f"line {number}: unexpected content {line!r}")
        if key in sections:
            raise ParseError(f"line {number}: duplicate section {key!r}")
        rest = rest.strip()
        i += 1
        if key in _INLINE:
            tokens = rest.split()
            if key == "elements":
                if not tokens:
                    raise ParseError(f"line {number}: no element names")
                if len(set(tokens)) != len(tokens):
                    raise ParseError(f"line {number}: duplicate element names")
                names = tokens
                sections[key] = tokens
            else:
                if len(tokens) != 1:
                    raise ParseError(f"line {number}: {key} takes exactly one name")
                sections[key] = tokens[0]
            continue
        if rest:
            raise ParseError(f"line {number}: table header {key!r} must stand alone")
        if names is None:
            raise ParseError(f"line {number}: {key} table before elements section")
        n = len(names)
        rows = lines[i : i + n]
        if len(rows) < n:
            raise ParseError(f"{key} table: expected {n} rows, got {len(rows)}")
        table = []
        for row_number, row in rows:
            if key == "leq":
                if len(row) != n or set(row) - {"0", "1"}:
                    raise ParseError(
                        f"line {row_number}: leq row must be {n} characters of 0/1"
                    )
                table.append([c == "1" for c in row])
            else:
                tokens = row.split()
                if len(tokens) != n:
                    raise ParseError(
                        f"line {row_number}: {key} row has {len(tokens)} entries, expected {n}"
                    )
                table.append(tokens)
        sections[key] = table
        i += n
    for key in ("elements", "bottom", "top", "leq", "odot"):
        if key not in sections:
            raise ParseError(f"missing section {key!r}")
    known = set(names)
    for key in ("bottom", "top"):
        if sections[key] not in known:
            raise ParseError(f"{key} names unknown element {sections[key]!r}")
    for key in ("odot", "arrow"):
        for row in sections.get(key, ()):
            for token in row:
                if token not in known:
                    raise ParseError(f"{key} table names unknown element {token!r}")
    return sections


def load_lattice(source: str) -> Lattice:
    """Parse and fully validate lattice file text."""
    sections = parse_lattice(source)
    names = sections["elements"]
    idx = {name: i for i, name in enumerate(names)}
    arrow = sections.get("arrow")
    return Lattice(
        names,
        sections["leq"],
        [[idx[t] for t in row] for row in sections["odot"]],
        arrow=None if arrow is None else [[idx[t] for t in row] for row in arrow],
        bottom=idx[sections["bottom"]],
        top=idx[sections["top"]],
    )


def read_lattice(path) -> Lattice:
    return load_lattice(Path(path).read_text(encoding="utf-8"))


def dump_lattice(L: Lattice, comment: Optional[str] = None) -> str:
    """Serialize to the line-oriented file format (arrow table included)."""
    nm = L.names
    out = ["rlat 1"]
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append("elements: " + " ".join(nm))
    out.append(f"bottom: {nm[L.bottom]}")
    out.append(f"top: {nm[L.top]}")
    out.append("leq:")
    out.extend("".join("1" if v else "0" for v in row) for row in L.leq)
    width = max(len(x) for x in nm)
    for label, table in (("odot", L.odot), ("arrow", L.arrow)):
        out.append(f"{label}:")
        out.extend(" ".join(nm[v].ljust(width) for v in row).rstrip() for row in table)
    return "\n".join(out) + "\n"
