"""Enumerate small residuated lattices up to isomorphism and search them.

Two independent generators are provided.  The pruned one builds lattice
orders from naturally labelled posets and then searches monoid tables with
the finite residuation criterion (x⊙0 = 0 and ⊙ distributes over binary
joins) as a pruning rule.  The naive one tries every commutative table with
unit 1 on every labelled lattice and deduplicates by trying all bijections.
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator, List, Optional, Sequence, Tuple

from .algebra import Lattice
from .errors import AxiomError, CapacityExceeded, OrderOutOfRange, QuerySyntaxError
from .filters import Filter, filter_lattice
from .structure import is_hyperarchimedean, is_local, is_semisimple_lattice
from .algebra import boolean_center

MAX_ORDER = 7
NAIVE_MAX_ORDER = 4


# -- canonical forms ------------------------------------------------------------


@dataclass(frozen=True, order=True)
class CanonicalForm:
    certificate: bytes

    def hex(self) -> str:
        return self.certificate.hex()


def _refine(n, leq, odot, cells):
    while True:
        color = {}
        for c, cell in enumerate(cells):
            for x in cell:
                color[x] = c
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            signature = {}
            for x in cell:
                rel = []
                for y in range(n):
                    entry = (color[y], leq[x][y], leq[y][x])
                    if odot is not None:
                        entry += (color[odot[x][y]],)
                    rel.append(entry)
                signature[x] = tuple(sorted(rel))
            for sig in sorted(set(signature.values())):
                refined.append([x for x in cell if signature[x] == sig])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _encode(n, leq, odot, perm):
    inv = [0] * n
    for i, x in enumerate(perm):
        inv[x] = i
    out = bytearray([n])
    for x in perm:
        for y in perm:
            out.append(1 if leq[x][y] else 0)
    if odot is not None:
        for x in perm:
            row = odot[x]
            for y in perm:
                out.append(inv[row[y]])
    return bytes(out)


def certificate(n: int, leq, odot=None) -> bytes:
    """Least encoding over all labellings reachable by individualize-and-refine."""
    best = None
    stack = [[list(range(n))]]
    while stack:
        cells = _refine(n, leq, odot, stack.pop())
        split = next((k for k, cell in enumerate(cells) if len(cell) > 1), None)
        if split is None:
            code = _encode(n, leq, odot, [cell[0] for cell in cells])
            if best is None or code < best:
                best = code
            continue
        cell = cells[split]
        for v in cell:
            rest = [x for x in cell if x != v]
            stack.append(cells[:split] + [[v], rest] + cells[split + 1 :])
    return best


def canonical_form(L: Lattice) -> CanonicalForm:
    """Isomorphism-class certificate of (≤, ⊙); names are ignored."""
    return CanonicalForm(certificate(L.n, L.leq, L.odot))


def _labels(n):
    middle = [chr(ord("a") + i) for i in range(n - 2)]
    return ["0"] + middle + ["1"]


def from_certificate(cert: bytes) -> Lattice:
    """Rebuild the canonical representative from a certificate."""
    n = cert[0]
    flat = cert[1:]
    leq = [[bool(flat[i * n + j]) for j in range(n)] for i in range(n)]
    odot = [[flat[n * n + i * n + j] for j in range(n)] for i in range(n)]
    # bottom/top sit wherever the canonical labelling placed them; rename so
    # that the least element is "0" and the greatest "1"
    order = sorted(range(n), key=lambda x: sum(leq[y][x] for y in range(n)))
    names = [""] * n
    for label, x in zip(_labels(n), order):
        names[x] = label
    return Lattice(names, leq, odot)


# -- lattice orders -------------------------------------------------------------


def _bounds(n, leq):
    """Meet and join tables, or None if some pair lacks a unique bound."""
    up = [{y for y in range(n) if leq[x][y]} for x in range(n)]
    down = [{y for y in range(n) if leq[y][x]} for x in range(n)]
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            lo = down[x] & down[y]
            hi = up[x] & up[y]
            m = [z for z in lo if lo <= down[z]]
            j = [z for z in hi if hi <= up[z]]
            if len(m) != 1 or len(j) != 1:
                return None
            meet[x][y] = meet[y][x] = m[0]
            join[x][y] = join[y][x] = j[0]
    return meet, join


@lru_cache(maxsize=None)
def lattice_orders(n: int) -> Tuple[Tuple[Tuple[bool, ...], ...], ...]:
    """One ≤ matrix per isomorphism class of n-element lattices.

    Index 0 is the bottom and n-1 the top; every returned matrix is upper
    triangular (a natural labelling).  Sorted by order certificate.
    """
    if n < 2:
        raise OrderOutOfRange("lattices have at least two elements here")
    middle = list(range(1, n - 1))
    pairs = list(combinations(middle, 2))
    found = {}
    for choice in range(1 << len(pairs)):
        rel = {pairs[k] for k in range(len(pairs)) if choice >> k & 1}
        if any((i, k) not in rel for (i, j) in rel for (j2, k) in rel if j == j2):
            continue
        leq = [[x == y or x == 0 or y == n - 1 or (x, y) in rel for y in range(n)] for x in range(n)]
        if _bounds(n, leq) is None:
            continue
        cert = certificate(n, leq)
        if cert not in found:
            found[cert] = tuple(tuple(row) for row in leq)
    return tuple(found[c] for c in sorted(found))


# -- monoid tables ---------------------------------------------------------------


def residuated_tables(n: int, leq) -> Iterator[List[List[int]]]:
    """All commutative, associative ⊙ with unit top that are residuated.

    Backtracking over x⊙y for x ≤ y in the middle of the lattice; values are
    bounded by x∧y and pruned by monotonicity and binary-join distributivity.
    Associativity is checked on complete tables.
    """
    meet, join = _bounds(n, leq)
    top = n - 1
    middle = range(1, top)
    cells = [(x, y) for x in middle for y in middle if x <= y]
    position = {c: k for k, c in enumerate(cells)}
    table = [[0] * n for _ in range(n)]
    for x in range(n):
        table[x][top] = table[top][x] = x

    def cell_of(a, b):
        if a == 0 or b == 0 or a == top or b == top:
            return None
        return (a, b) if a <= b else (b, a)

    # each constraint is checked once all the free cells it reads are set
    triggers = [[] for _ in cells]

    def register(check, *refs):
        involved = [position[c] for c in (cell_of(a, b) for a, b in refs) if c is not None]
        if involved:
            triggers[max(involved)].append(check)

    for x, x2 in product(middle, repeat=2):
        if x != x2 and leq[x][x2]:
            for y in middle:
                register(("mono", x, x2, y), (x, y), (x2, y))
    for x in middle:
        for y, z in combinations(middle, 2):
            if not leq[y][z] and not leq[z][y]:
                register(("join", x, y, z), (x, y), (x, z), (x, join[y][z]))

    def holds(check):
        kind, x, a, b = check
        if kind == "mono":
            return leq[table[x][b]][table[a][b]]
        return table[x][join[a][b]] == join[table[x][a]][table[x][b]]

    domains = [[v for v in range(n) if leq[v][meet[x][y]]] for x, y in cells]

    def associative():
        for x, y, z in product(middle, repeat=3):
            if table[table[x][y]][z] != table[x][table[y][z]]:
                return False
        return True

    def extend(k):
        if k == len(cells):
            if associative():
                yield [row[:] for row in table]
            return
        x, y = cells[k]
        for v in domains[k]:
            table[x][y] = table[y][x] = v
            if all(holds(c) for c in triggers[k]):
                yield from extend(k + 1)

    yield from extend(0)


@lru_cache(maxsize=None)
def _classes(n: int) -> Tuple[Tuple[bytes, Lattice], ...]:
    found = {}
    for leq in lattice_orders(n):
        for odot in residuated_tables(n, leq):
            # full validation, including the adjunction, is the soundness backstop
            L = Lattice(_labels(n), leq, odot)
            cert = canonical_form(L).certificate
            if cert not in found:
                found[cert] = L
    return tuple((c, found[c]) for c in sorted(found))


class LatticeStream:
    """Iterable of class representatives; ``truncated`` is set when a cap cut it short."""

    def __init__(self, lattices: Sequence[Lattice], truncated: bool):
        self.lattices = list(lattices)
        self.truncated = truncated

    def __iter__(self):
        return iter(self.lattices)

    def __len__(self):
        return len(self.lattices)


def _check_order(n, limit=MAX_ORDER):
    if not 2 <= n <= limit:
        raise OrderOutOfRange(f"order {n} outside the supported range 2..{limit}")


def enumerate_lattices(n: int, cap: Optional[int] = None) -> LatticeStream:
    """One representative per isomorphism class of n-element residuated lattices.

    Representatives come in certificate order.  With a cap, at most ``cap``
    are returned and ``truncated`` tells whether more exist.
    """
    _check_order(n)
    classes = [L for _, L in _classes(n)]
    if cap is not None and len(classes) > cap:
        return LatticeStream(classes[:cap], truncated=True)
    return LatticeStream(classes, truncated=False)


def class_count(n: int) -> int:
    _check_order(n)
    return len(_classes(n))


# -- the naive generator -------------------------------------------------------


def _isomorphic(n, a, b):
    leq_a, odot_a = a
    leq_b, odot_b = b
    for p in permutations(range(n)):
        if all(leq_a[x][y] == leq_b[p[x]][p[y]] for x in range(n) for y in range(n)) and (
            odot_a is None
            or all(p[odot_a[x][y]] == odot_b[p[x]][p[y]] for x in range(n) for y in range(n))
        ):
            return True
    return False


def _dedupe(n, structures):
    reps = []
    for s in structures:
        if not any(_isomorphic(n, s, r) for r in reps):
            reps.append(s)
    return reps


def naive_lattice_orders(n: int):
    """Every reflexive relation on n labelled points, filtered to lattices."""
    off = [(x, y) for x in range(n) for y in range(n) if x != y]
    labelled = []
    for choice in range(1 << len(off)):
        leq = [[x == y for y in range(n)] for x in range(n)]
        for k, (x, y) in enumerate(off):
            if choice >> k & 1:
                leq[x][y] = True
        if any(leq[x][y] and leq[y][x] for x, y in off):
            continue
        if any(leq[x][y] and leq[y][z] and not leq[x][z] for x, y, z in product(range(n), repeat=3)):
            continue
        if _bounds(n, leq) is None:
            continue
        labelled.append((leq, None))
    return [leq for leq, _ in _dedupe(n, labelled)]


def _naive_is_residuated_monoid(n, leq, odot, bottom, top):
    for x, y, z in product(range(n), repeat=3):
        if odot[odot[x][y]][z] != odot[x][odot[y][z]]:
            return False
    for x, y in product(range(n), repeat=2):
        below = [z for z in range(n) if leq[odot[x][z]][y]]
        # the residual must be the greatest such z, and everything under it must qualify
        greatest = [r for r in below if all(leq[z][r] for z in below)]
        if not greatest:
            return False
        r = greatest[0]
        if any(leq[z][r] and z not in below for z in range(n)):
            return False
    return True


def naive_classes(n: int):
    """Brute-force list of (≤, ⊙) representatives, one per isomorphism class."""
    _check_order(n, NAIVE_MAX_ORDER)
    found = []
    for leq in naive_lattice_orders(n):
        top = next(x for x in range(n) if all(leq[y][x] for y in range(n)))
        bottom = next(x for x in range(n) if all(leq[x][y] for y in range(n)))
        rest = [x for x in range(n) if x != top]
        cells = [(x, y) for i, x in enumerate(rest) for y in rest[i:]]
        for values in product(range(n), repeat=len(cells)):
            odot = [[0] * n for _ in range(n)]
            for x in range(n):
                odot[x][top] = odot[top][x] = x
            for (x, y), v in zip(cells, values):
                odot[x][y] = odot[y][x] = v
            if _naive_is_residuated_monoid(n, leq, odot, bottom, top):
                found.append((leq, odot))
    return _dedupe(n, found)


# -- queries -------------------------------------------------------------------

FILTER_ATOMS = ("simple", "prime", "maximal", "minimal_prime", "essential", "boolean_generated")
LATTICE_ATOMS = ("semisimple", "hyperarchimedean", "radical_trivial", "local")

_TOKEN = re.compile(r"\s*(?:([A-Za-z_]+)|(.))")


@dataclass(frozen=True)
class Query:
    scope: str  # "filter" or "lattice"
    expression: tuple
    text: str

    def __str__(self):
        return self.text


def _tokenize(text):
    tokens = []
    for m in _TOKEN.finditer(text):
        word, sym = m.groups()
        if word:
            tokens.append(word)
        elif sym is not None and not sym.isspace():
            sym = {"¬": "!", "∧": "&"}.get(sym, sym)
            if sym not in "!&()":
                raise QuerySyntaxError(f"unexpected character {sym!r}")
            tokens.append(sym)
    return tokens


def parse_query(text: str) -> Query:
    """Parse ``expr := atom | '!' expr | expr '&' expr | '(' expr ')'``."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = peek()
        if tok is None:
            raise QuerySyntaxError("unexpected end of query")
        pos += 1
        return tok

    def conjunction():
        node = unary()
        while peek() == "&":
            take()
            node = ("and", node, unary())
        return node

    def unary():
        tok = take()
        if tok == "!":
            return ("not", unary())
        if tok == "(":
            node = conjunction()
            if take() != ")":
                raise QuerySyntaxError("expected ')'")
            return node
        if tok in FILTER_ATOMS or tok in LATTICE_ATOMS:
            return ("atom", tok)
        raise QuerySyntaxError(f"unknown atom {tok!r}")

    expression = conjunction()
    if pos != len(tokens):
        raise QuerySyntaxError(f"trailing input at {tokens[pos]!r}")
    atoms = set(_atoms(expression))
    scope = "filter" if atoms & set(FILTER_ATOMS) else "lattice"
    return Query(scope, expression, text.strip())


def _atoms(node):
    if node[0] == "atom":
        yield node[1]
    else:
        for child in node[1:]:
            yield from _atoms(child)


def evaluate(node, value) -> bool:
    kind = node[0]
    if kind == "atom":
        return value(node[1])
    if kind == "not":
        return not evaluate(node[1], value)
    return evaluate(node[1], value) and evaluate(node[2], value)


def lattice_atom(L: Lattice, atom: str) -> bool:
    fl = filter_lattice(L)
    if atom == "semisimple":
        return is_semisimple_lattice(L)
    if atom == "hyperarchimedean":
        return is_hyperarchimedean(L)
    if atom == "radical_trivial":
        return fl.radical == fl.trivial
    if atom == "local":
        return is_local(L)
    raise QuerySyntaxError(f"{atom!r} is not a lattice atom")


def filter_atom(L: Lattice, i: int, atom: str) -> bool:
    fl = filter_lattice(L)
    if atom == "simple":
        return i in fl.simples
    if atom == "prime":
        return i in fl.primes
    if atom == "maximal":
        return i in fl.maximals
    if atom == "minimal_prime":
        return i in fl.minimal_primes
    if atom == "essential":
        return i in fl.essential
    if atom == "boolean_generated":
        return any(e in boolean_center(L) for e in fl.generators[i])
    return lattice_atom(L, atom)


@dataclass(frozen=True)
class SearchHit:
    order: int
    form: CanonicalForm
    lattice: Lattice
    witness: Optional[Filter]


def search(query, max_order: int, cap: Optional[int] = None) -> List[SearchHit]:
    """All (class, filter) pairs satisfying the query, smallest orders first."""
    if isinstance(query, str):
        query = parse_query(query)
    _check_order(max_order)
    hits = []
    for n in range(2, max_order + 1):
        for L in enumerate_lattices(n):
            form = canonical_form(L)
            if query.scope == "lattice":
                if evaluate(query.expression, lambda a: lattice_atom(L, a)):
                    hits.append(SearchHit(n, form, L, None))
            else:
                fl = filter_lattice(L)
                for i, F in enumerate(fl.filters):
                    if evaluate(query.expression, lambda a: filter_atom(L, i, a)):
                        hits.append(SearchHit(n, form, L, F))
            if cap is not None and len(hits) >= cap:
                return hits[:cap]
    return hits
