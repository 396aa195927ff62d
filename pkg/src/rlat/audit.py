"""Exhaustive audit of the structural theory on one finite lattice.

Each catalog entry is a named claim with an optional hypothesis guard.  A
claim whose hypothesis fails is reported ``not-applicable`` and is never
asserted.  A claim that fails comes back with a witness naming the elements
or filters involved.  Implementation cross-check failures
(InternalInconsistency) are reported as failures of the claim being checked.
"""

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Dict, List, Optional

from . import bits
from .algebra import ELEMENT_LAWS, Lattice, boolean_center, check_element_laws, power, powers, star
from .errors import InternalInconsistency
from .filters import (
    SCAN_LIMIT,
    _generate,
    closure_filters,
    filter_lattice,
    is_deductive_system,
    is_filter_mask,
    scan_filters,
    upward_closure,
)
from .spectrum import SpectrumSpace
from .structure import filter_conditions, is_archimedean, lattice_conditions, socle_index

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"

# exhaustive subset checks over elements or points stop here
SUBSET_LIMIT = 12


@dataclass
class AuditEntry:
    claim: str
    status: str
    witness: Optional[Dict[str, object]] = None
    note: Optional[str] = None

    def to_dict(self) -> dict:
        out = {"claim": self.claim, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note is not None:
            out["note"] = self.note
        return out


@dataclass
class AuditReport:
    lattice: str
    entries: List[AuditEntry] = field(default_factory=list)

    def count(self, status: str) -> int:
        return sum(e.status == status for e in self.entries)

    @property
    def failures(self) -> List[AuditEntry]:
        return [e for e in self.entries if e.status == FAILS]

    @property
    def ok(self) -> bool:
        return not self.failures

    def entry(self, claim: str) -> AuditEntry:
        for e in self.entries:
            if e.claim == claim:
                return e
        raise KeyError(claim)

    def summary(self) -> dict:
        return {
            "checked": len(self.entries),
            "holds": self.count(HOLDS),
            "fails": self.count(FAILS),
            "not_applicable": self.count(NOT_APPLICABLE),
        }

    def to_dict(self) -> dict:
        return {
            "lattice": self.lattice,
            "summary": self.summary(),
            "entries": [e.to_dict() for e in self.entries],
        }

    def to_text(self) -> str:
        width = max(len(e.claim) for e in self.entries)
        lines = [f"audit of {self.lattice}"]
        for e in self.entries:
            line = f"  {e.claim.ljust(width)}  {e.status}"
            if e.witness:
                line += "  " + ", ".join(f"{k}={_show(v)}" for k, v in e.witness.items())
            if e.note:
                line += f"  ({e.note})"
            lines.append(line)
        s = self.summary()
        lines.append(
            f"  {s['checked']} claims: {s['holds']} hold, {s['fails']} fail, "
            f"{s['not_applicable']} not applicable"
        )
        return "\n".join(lines)


def _show(value):
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_show(v) for v in value) + "]"
    return str(value)


# -- context shared by all claims ------------------------------------------------


class _Context:
    def __init__(self, L: Lattice):
        self.L = L
        self.fl = filter_lattice(L)
        fl = self.fl
        self.E = range(L.n)
        self.K = range(len(fl))
        self.t = fl.trivial
        self.W = fl.whole
        self.B = boolean_center(L)
        self.st = [star(L, x) for x in self.E]
        self.spec = SpectrumSpace(L, "Spec")
        self.max = SpectrumSpace(L, "Max")
        self.rad_trivial = fl.radical == fl.trivial
        self.principal = [fl.index[_generate(L, 1 << x)] for x in self.E]
        self.essential = set(fl.essential)

    def f(self, i: int) -> str:
        return "{" + ",".join(self.fl.filters[i].names) + "}"

    def x(self, v: int) -> str:
        return self.L.names[v]

    def pts(self, points) -> List[str]:
        return [self.f(p) for p in sorted(points)]

    def sub(self, i, j):
        return self.fl.subset(i, j)

    def meet(self, i, j):
        return self.fl.meet_table[i][j]

    def join(self, i, j):
        return self.fl.join_table[i][j]


@dataclass(frozen=True)
class Claim:
    id: str
    check: Callable[[_Context], Optional[dict]]
    guard: Optional[Callable[[_Context], bool]] = None
    guard_text: Optional[str] = None
    observe: Optional[Callable[[_Context], Optional[str]]] = None


CATALOG: List[Claim] = []


def claim(id, guard=None, guard_text=None, observe=None):
    def register(fn):
        CATALOG.append(Claim(id, fn, guard, guard_text, observe))
        return fn

    return register


def _rad_trivial(c):
    return c.rad_trivial


RAD_TEXT = "needs Rad(L) = {1}"


def _first(cases):
    for case in cases:
        if case is not None:
            return case
    return None


def _subsets(items, min_size=0):
    items = list(items)
    for k in range(min_size, len(items) + 1):
        yield from combinations(items, k)


# -- element level ----------------------------------------------------------------


@claim("adjunction")
def _(c):
    L = c.L
    for x, y, z in product(c.E, repeat=3):
        if L.le(L.odot[x][z], y) != L.le(z, L.arrow[x][y]):
            return {"x": c.x(x), "y": c.x(y), "z": c.x(z)}


def _law_claim(name):
    def check(c):
        if not hasattr(c, "laws"):
            c.laws = check_element_laws(c.L)
        return c.laws[name]

    return check


for _name in ELEMENT_LAWS:
    CATALOG.append(Claim(f"element-laws/{_name}", _law_claim(_name)))


@claim("boolean-complement-unique")
def _(c):
    L = c.L
    for x in c.E:
        comps = [y for y in c.E if L.meet[x][y] == L.bottom and L.join[x][y] == L.top]
        if len(comps) > 1:
            return {"x": c.x(x), "complements": [c.x(y) for y in comps]}


# -- filters ------------------------------------------------------------------


@claim(
    "filter-iff-deductive-system",
    guard=lambda c: c.L.n <= SUBSET_LIMIT,
    guard_text=f"exhaustive over subsets only up to {SUBSET_LIMIT} elements",
)
def _(c):
    for mask in range(1 << c.L.n):
        if is_filter_mask(c.L, mask) != is_deductive_system(c.L, mask):
            return {"subset": c.L.names_of(mask)}


@claim(
    "filter-enumeration-scan-equals-closure",
    guard=lambda c: c.L.n <= SCAN_LIMIT,
    guard_text=f"subset scan limited to {SCAN_LIMIT} elements",
)
def _(c):
    scan, closure = set(scan_filters(c.L)), set(closure_filters(c.L))
    if scan != closure:
        odd = sorted(scan ^ closure, key=bits.sort_key)[0]
        return {"filter": c.L.names_of(odd)}


@claim("generated-filter-is-least-filter")
def _(c):
    # [S) against the intersection of all filters containing S, for |S| ≤ 2
    fl = c.fl
    for S in _subsets(c.E, 1):
        if len(S) > 2:
            break
        mask = bits.mask_of(S)
        least = fl.masks[fl.intersect_all(i for i in c.K if bits.is_subset(mask, fl.masks[i]))]
        if _generate(c.L, mask) != least:
            return {"S": [c.x(s) for s in S]}


@claim("generated-filter-product-form")
def _(c):
    L = c.L
    for S in _subsets(c.E, 1):
        if len(S) > 2:
            break
        products = set(S)
        frontier = set(S)
        while frontier:
            new = {L.odot[p][s] for p in frontier for s in S} - products
            products |= new
            frontier = new
        if upward_closure(L, bits.mask_of(products)) != _generate(L, bits.mask_of(S)):
            return {"S": [c.x(s) for s in S]}


@claim("principal-filter-power-form")
def _(c):
    L = c.L
    for x in c.E:
        form = bits.mask_of(z for z in c.E if any(L.le(p, z) for p in powers(L, x)))
        if form != c.fl.masks[c.principal[x]]:
            return {"x": c.x(x)}
    for e in c.B:
        if c.fl.masks[c.principal[e]] != L.up[e]:
            return {"e": c.x(e)}
        for f in c.B:
            if e != f and c.principal[e] == c.principal[f]:
                return {"e": c.x(e), "f": c.x(f)}


@claim("principal-join-meet")
def _(c):
    L, pr = c.L, c.principal
    for x, y in product(c.E, repeat=2):
        j = c.join(pr[x], pr[y])
        if not j == pr[L.meet[x][y]] == pr[L.odot[x][y]] or c.meet(pr[x], pr[y]) != pr[L.join[x][y]]:
            return {"x": c.x(x), "y": c.x(y)}


@claim("join-element-form")
def _(c):
    L, fl = c.L, c.fl
    for i, j in product(c.K, repeat=2):
        form = bits.mask_of(
            z
            for z in c.E
            if any(
                L.le(L.odot[a][b], z)
                for a in bits.members(fl.masks[i])
                for b in bits.members(fl.masks[j])
            )
        )
        if form != fl.masks[c.join(i, j)]:
            return {"F": c.f(i), "G": c.f(j)}


@claim("star-is-pseudocomplement")
def _(c):
    for i, j in product(c.K, repeat=2):
        if (c.meet(i, j) == c.t) != c.sub(j, c.fl.star[i]):
            return {"F": c.f(i), "G": c.f(j)}


@claim("star-element-form")
def _(c):
    L, fl = c.L, c.fl
    for i in c.K:
        form = bits.mask_of(
            x for x in c.E if all(L.join[x][y] == L.top for y in bits.members(fl.masks[i]))
        )
        if form != fl.masks[fl.star[i]]:
            return {"F": c.f(i)}


@claim("filter-lattice-distributive")
def _(c):
    for i, j, k in product(c.K, repeat=3):
        if c.meet(i, c.join(j, k)) != c.join(c.meet(i, j), c.meet(i, k)):
            return {"F": c.f(i), "G": c.f(j), "H": c.f(k)}


@claim("modular-law")
def _(c):
    for i, j, k in product(c.K, repeat=3):
        if c.sub(i, j) and c.meet(j, c.join(i, k)) != c.join(i, c.meet(j, k)):
            return {"F": c.f(i), "G": c.f(j), "H": c.f(k)}


@claim("proper-iff-no-zero")
def _(c):
    for i in c.K:
        if (i != c.W) != (not c.fl.masks[i] & 1 << c.L.bottom):
            return {"F": c.f(i)}


@claim("prime-two-forms")
def _(c):
    L, fl = c.L, c.fl
    for i in c.K:
        if i == c.W:
            continue
        P = fl.masks[i]
        by_elements = all(
            not P >> L.join[x][y] & 1 or P >> x & 1 or P >> y & 1 for x, y in product(c.E, repeat=2)
        )
        by_filters = all(
            not c.sub(c.meet(a, b), i) or c.sub(a, i) or c.sub(b, i) for a, b in product(c.K, repeat=2)
        )
        if by_elements != by_filters:
            return {"P": c.f(i)}


@claim("maximal-is-prime")
def _(c):
    for m in c.fl.maximals:
        if m not in c.fl.primes:
            return {"M": c.f(m)}


@claim("proper-below-maximal")
def _(c):
    for i in c.fl.proper:
        if not any(c.sub(i, m) for m in c.fl.maximals):
            return {"F": c.f(i)}


@claim("maximal-power-star-test")
def _(c):
    L, fl = c.L, c.fl
    maximal = {i for i in fl.proper if not any(j != i and c.sub(i, j) for j in fl.proper)}
    for i in fl.proper:
        M = fl.masks[i]
        test = all(
            (not M >> x & 1) == any(M >> star(L, p) & 1 for p in powers(L, x)) for x in c.E
        )
        if test != (i in maximal):
            return {"M": c.f(i)}


@claim("radical-element-formula")
def _(c):
    L, fl = c.L, c.fl
    by_max = fl.masks[fl.intersect_all(fl.maximals)]
    for x in c.E:
        # every power x^k has some ((x^k)*)^m = 0; powers beyond n repeat
        formula = all(
            any(power(L, star(L, power(L, x, k)), m) == L.bottom for m in range(1, L.n + 1))
            for k in range(1, L.n + 1)
        )
        if formula != bool(by_max >> x & 1):
            return {"x": c.x(x)}


@claim("minimal-prime-test")
def _(c):
    L, fl = c.L, c.fl
    for i in fl.primes:
        P = fl.masks[i]
        minimal = not any(j != i and c.sub(j, i) for j in fl.primes)
        test = all(
            any(not P >> y & 1 and L.join[x][y] == L.top for y in c.E) for x in bits.members(P)
        )
        if minimal != test:
            return {"P": c.f(i)}


@claim("prime-avoidance")
def _(c):
    fl = c.fl
    for i in c.K:
        for a in c.E:
            if fl.masks[i] >> a & 1:
                continue
            if not any(c.sub(i, p) and not fl.masks[p] >> a & 1 for p in fl.primes):
                return {"F": c.f(i), "a": c.x(a)}


@claim("filter-is-meet-of-primes")
def _(c):
    fl = c.fl
    for i in c.K:
        if fl.intersect_all(p for p in fl.primes if c.sub(i, p)) != i:
            return {"F": c.f(i)}
    if fl.intersect_all(fl.primes) != c.t or fl.intersect_all(fl.minimal_primes) != c.t:
        return {"meet_of_spec": c.f(fl.intersect_all(fl.primes))}


# -- Stone topology -------------------------------------------------------------


def _spaces(c):
    return (c.spec, c.max)


@claim("stone-whole-iff-closed-empty")
def _(c):
    for i in c.K:
        m = c.fl.masks[i]
        if not (i == c.W) == (not c.spec.V(m)) == (not c.max.V(m)):
            return {"F": c.f(i)}


@claim("stone-closed-antitone")
def _(c):
    fl, S = c.fl, c.spec
    for i, j in product(c.K, repeat=2):
        a, b = fl.masks[i], fl.masks[j]
        if not (S.V(a) <= S.V(b)) == (S.U(b) <= S.U(a)) == c.sub(j, i):
            return {"F": c.f(i), "G": c.f(j)}
        if c.sub(j, i) and not (c.max.V(a) <= c.max.V(b) and c.max.U(b) <= c.max.U(a)):
            return {"F": c.f(i), "G": c.f(j)}


@claim("stone-max-closed-injective", guard=_rad_trivial, guard_text=RAD_TEXT)
def _(c):
    fl = c.fl
    for i, j in product(c.K, repeat=2):
        same = c.max.V(fl.masks[i]) == c.max.V(fl.masks[j])
        if same != (i == j) or (c.spec.V(fl.masks[i]) == c.spec.V(fl.masks[j])) != same:
            return {"F": c.f(i), "G": c.f(j)}


@claim("stone-open-meet")
def _(c):
    L = c.L
    for S in _spaces(c):
        for x, y in product(c.E, repeat=2):
            if S.U(1 << x) & S.U(1 << y) != S.U(1 << L.join[x][y]):
                return {"space": S.kind, "x": c.x(x), "y": c.x(y)}
            if S.V(1 << x) | S.V(1 << y) != S.V(1 << L.join[x][y]):
                return {"space": S.kind, "x": c.x(x), "y": c.x(y)}


@claim(
    "stone-union-laws",
    guard=lambda c: c.L.n <= 6,
    guard_text="pairs of element subsets checked up to 6 elements",
)
def _(c):
    for S in _spaces(c):
        for a, b in product(range(1 << c.L.n), repeat=2):
            if S.U(a | b) != S.U(a) | S.U(b) or S.V(a | b) != S.V(a) & S.V(b):
                return {"space": S.kind, "X": c.L.names_of(a), "Y": c.L.names_of(b)}


@claim("hyperarchimedean-spectra")
def _(c):
    fl = c.fl
    hyper = all(is_archimedean(c.L, x) for x in c.E)
    if not hyper == (fl.primes == fl.maximals) == (fl.primes == fl.minimal_primes):
        return {"hyperarchimedean": str(hyper)}


@claim(
    "hyperarchimedean-radical-trivial",
    guard=lambda c: all(is_archimedean(c.L, x) for x in c.E),
    guard_text="needs L hyperarchimedean",
)
def _(c):
    if not c.rad_trivial:
        return {"radical": c.f(c.fl.radical)}


def _closure_generic(S, pts):
    out = S.all
    for closed in S.closeds:
        if pts <= closed:
            out = out & closed
    return out


@claim(
    "closure-formula",
    guard=lambda c: len(c.spec.points) <= SUBSET_LIMIT,
    guard_text=f"subsets of at most {SUBSET_LIMIT} points",
)
def _(c):
    S = c.spec
    for pts in _subsets(S.points):
        pts = frozenset(pts)
        formula = S.V(S.meet_of(pts))
        if formula != _closure_generic(S, pts):
            return {"space": "Spec", "A": c.pts(pts)}
        if pts <= c.max.all and formula & c.max.all != _closure_generic(c.max, pts):
            return {"space": "Max", "A": c.pts(pts)}


@claim(
    "spec-dense-iff-meet-trivial",
    guard=lambda c: len(c.spec.points) <= SUBSET_LIMIT,
    guard_text=f"subsets of at most {SUBSET_LIMIT} points",
)
def _(c):
    S = c.spec
    for pts in _subsets(S.points):
        pts = frozenset(pts)
        dense = _closure_generic(S, pts) == S.all
        if dense != (S.meet_of(pts) == c.L.unit_mask):
            return {"A": c.pts(pts)}


@claim("max-dense-iff-meet-trivial", guard=_rad_trivial, guard_text=RAD_TEXT)
def _(c):
    S = c.max
    for pts in _subsets(S.points):
        pts = frozenset(pts)
        dense = _closure_generic(S, pts) == S.all
        if dense != (S.meet_of(pts) == c.L.unit_mask):
            return {"A": c.pts(pts)}


def _interior(S, pts):
    return frozenset().union(*(o for o in S.opens if o <= pts))


def _nowhere_dense_mismatch(c):
    S = c.max
    for i in c.K:
        closed = S.V(c.fl.masks[i])
        nowhere = not _interior(S, _closure_generic(S, closed))
        if (i in c.essential) != nowhere:
            return i
    return None


def _observe_nowhere_dense(c):
    i = _nowhere_dense_mismatch(c)
    if i is None:
        return None
    kind = "essential" if i in c.essential else "not essential"
    shape = "nowhere dense" if not _interior(c.max, c.max.V(c.fl.masks[i])) else "not nowhere dense"
    return f"without the hypothesis it breaks at F={c.f(i)}: {kind}, V_Max(F) {shape}"


@claim(
    "essential-iff-nowhere-dense",
    guard=_rad_trivial,
    guard_text=RAD_TEXT,
    observe=_observe_nowhere_dense,
)
def _(c):
    i = _nowhere_dense_mismatch(c)
    if i is not None:
        return {"F": c.f(i)}


# -- simple and essential filters --------------------------------------------------


@claim("simple-is-principal")
def _(c):
    fl = c.fl
    for s in fl.simples:
        for x in bits.members(fl.masks[s]):
            if x != c.L.top and c.principal[x] != s:
                return {"T": c.f(s), "x": c.x(x)}


@claim("boolean-maximal-iff-star-simple")
def _(c):
    for e in c.B:
        if (c.principal[e] in c.fl.maximals) != (c.principal[c.st[e]] in c.fl.simples):
            return {"e": c.x(e)}


@claim("simple-dichotomy")
def _(c):
    L, fl = c.L, c.fl
    for s in fl.simples:
        boolean_case = any(
            c.principal[x] == s
            and [m for m in fl.maximals if not c.sub(s, m)] == [c.principal[c.st[x]]]
            for x in c.B
        )
        radical_case = c.sub(s, fl.radical) and all(
            c.principal[c.st[x]] == c.W for x in bits.members(fl.masks[s]) if x != L.top
        )
        if not boolean_case and not radical_case:
            return {"T": c.f(s)}


@claim("simple-boolean-when-radical-trivial", guard=_rad_trivial, guard_text=RAD_TEXT)
def _(c):
    fl = c.fl
    for i in c.K:
        if i == c.t:
            continue
        form = any(c.principal[e] == i and c.principal[c.st[e]] in fl.maximals for e in c.B)
        if form != (i in fl.simples):
            return {"T": c.f(i)}


@claim("simple-star-proper")
def _(c):
    L, fl = c.L, c.fl
    for s in fl.simples:
        for x in bits.members(fl.masks[s]):
            lhs = c.principal[c.st[x]] != c.W
            rhs = x in c.B and x != L.top and c.principal[x] == s
            if lhs != rhs:
                return {"T": c.f(s), "x": c.x(x)}


def _essential_in(c, h, f):
    return all(c.meet(f, g) == c.t for g in c.K if c.meet(h, g) == c.t)


@claim("essential-self")
def _(c):
    for f in c.K:
        if not _essential_in(c, f, f):
            return {"F": c.f(f)}


@claim("essential-chain-laws")
def _(c):
    for h, g, f in product(c.K, repeat=3):
        if not (c.sub(h, g) and c.sub(g, f)):
            continue
        hf, hg, gf = _essential_in(c, h, f), _essential_in(c, h, g), _essential_in(c, g, f)
        if hf and not (hg and gf):
            return {"H": c.f(h), "G": c.f(g), "F": c.f(f)}
        if hg and gf and not hf:
            return {"H": c.f(h), "G": c.f(g), "F": c.f(f)}


@claim("essential-four-forms")
def _(c):
    # the fourth form reads: every x ≠ 1 has some y ∈ F with x ∨ y ≠ 1
    L, fl = c.L, c.fl
    for i in c.K:
        members = list(bits.members(fl.masks[i]))
        forms = (
            _essential_in(c, i, c.W),
            fl.star[i] == c.t,
            all(x == L.top for x in c.E if all(L.join[x][y] == L.top for y in members)),
            all(any(L.join[x][y] != L.top for y in members) for x in c.E if x != L.top),
        )
        if len(set(forms)) != 1:
            return {"F": c.f(i), "forms": [str(v) for v in forms]}


@claim("essential-extension")
def _(c):
    fl = c.fl
    for h, f in product(c.K, repeat=2):
        if c.sub(h, f) and not _essential_in(c, c.join(h, c.meet(fl.star[h], f)), f):
            return {"H": c.f(h), "F": c.f(f)}


@claim(
    "nonessential-primes-density",
    guard=lambda c: any(p not in c.essential for p in c.fl.primes)
    and sum(p not in c.essential for p in c.fl.primes) <= SUBSET_LIMIT,
    guard_text="needs a non-essential prime filter",
)
def _(c):
    S = c.spec
    candidates = [p for p in c.fl.primes if p not in c.essential]
    for family in _subsets(candidates, 1):
        family = frozenset(family)
        dense = _closure_generic(S, family) == S.all
        test = all((i in c.essential) == all(not c.sub(i, p) for p in family) for i in c.K)
        if dense != test:
            return {"A": c.pts(family)}


@claim("nonessential-prime-is-minimal")
def _(c):
    for p in c.fl.primes:
        if p not in c.essential and p not in c.fl.minimal_primes:
            return {"P": c.f(p)}


@claim("prime-nonessential-iff-minimal")
def _(c):
    for p in c.fl.primes:
        if (p not in c.essential) != (p in c.fl.minimal_primes):
            return {"P": c.f(p)}


@claim("essential-iff-avoids-minimal-primes")
def _(c):
    for i in c.K:
        if (i in c.essential) != all(not c.sub(i, p) for p in c.fl.minimal_primes):
            return {"F": c.f(i)}


@claim("every-nontrivial-filter-contains-simple")
def _(c):
    for i in c.K:
        if i != c.t and not any(c.sub(s, i) for s in c.fl.simples):
            return {"F": c.f(i)}


# -- independence and direct sums ------------------------------------------------


def _independent(c, family):
    for j in range(len(family)):
        rest = c.fl.join_all(family[i] for i in range(len(family)) if i != j)
        if c.meet(family[j], rest) != c.t:
            return False
    return True


def _factor_tuples(c, family):
    return product(*(list(bits.members(c.fl.masks[i])) for i in family))


def _product(L, xs):
    acc = L.top
    for x in xs:
        acc = L.odot[acc][x]
    return acc


def _factorization_forms(c, family):
    """(order form, equality form) of unique factorization for one family."""
    L = c.L
    tuples = list(_factor_tuples(c, family))
    prods = [_product(L, t) for t in tuples]
    order_form = equality_form = True
    for a, b in product(range(len(tuples)), repeat=2):
        ta, tb = tuples[a], tuples[b]
        if L.le(prods[a], prods[b]) and not all(L.le(u, v) for u, v in zip(ta, tb)):
            order_form = False
        if prods[a] == prods[b] and ta != tb:
            equality_form = False
    return order_form, equality_form


@claim("independence-pair-forms")
def _(c):
    for i, j in combinations(c.K, 2):
        forms = (_independent(c, [i, j]),) + _factorization_forms(c, [i, j])
        if len(set(forms)) != 1:
            return {"F": c.f(i), "G": c.f(j)}


@claim(
    "independence-family-forms",
    guard=lambda c: len(c.fl) <= 16,
    guard_text="families drawn from at most 16 filters",
)
def _(c):
    for size in (1, 2, 3):
        for family in combinations(c.K, size):
            blocks = all(
                c.meet(c.fl.join_all(A), c.fl.join_all(B)) == c.t
                for labels in product(range(3), repeat=size)
                for A in [[family[k] for k in range(size) if labels[k] == 1]]
                for B in [[family[k] for k in range(size) if labels[k] == 2]]
                if A and B
            )
            every_sub = all(_independent(c, list(sub)) for sub in _subsets(family, 1))
            order_form = equality_form = True
            for sub in _subsets(family, 1):
                o, e = _factorization_forms(c, list(sub))
                order_form &= o
                equality_form &= e
            forms = (_independent(c, list(family)), every_sub, blocks, order_form, equality_form)
            if len(set(forms)) != 1:
                return {"family": [c.f(i) for i in family], "forms": [str(v) for v in forms]}


def _direct_sum(c, i, j):
    """Index of F ⊕ G, or None when F ∩ G ≠ {1}."""
    return c.join(i, j) if c.meet(i, j) == c.t else None


@claim("direct-sum-cancellation")
def _(c):
    for f, f2, h, h2 in product(c.K, repeat=4):
        if not (c.sub(f, f2) and c.sub(h, h2)):
            continue
        s = _direct_sum(c, f, h)
        if s is not None and s == _direct_sum(c, f2, h2) and (f, h) != (f2, h2):
            return {"F": c.f(f), "F'": c.f(f2), "H": c.f(h), "H'": c.f(h2)}


@claim("boolean-splitting")
def _(c):
    for e in c.B:
        if _direct_sum(c, c.principal[e], c.principal[c.st[e]]) != c.W:
            return {"e": c.x(e)}


@claim("whole-decompositions-boolean")
def _(c):
    for i, j in product(c.K, repeat=2):
        split = _direct_sum(c, i, j) == c.W
        boolean = any(c.principal[e] == i and c.principal[c.st[e]] == j for e in c.B)
        if split != boolean:
            return {"F": c.f(i), "G": c.f(j)}
    for e, f in product(list(c.B), repeat=2):
        if _direct_sum(c, c.principal[e], c.principal[f]) == c.W and f != c.st[e]:
            return {"e": c.x(e), "f": c.x(f)}


@claim("complementary-summands-maximal-simple")
def _(c):
    for i, j in product(c.K, repeat=2):
        if _direct_sum(c, i, j) == c.W and (i in c.fl.maximals) != (j in c.fl.simples):
            return {"F": c.f(i), "G": c.f(j)}


@claim("simple-has-independent-prime")
def _(c):
    for s in c.fl.simples:
        if not any(c.meet(s, p) == c.t for p in c.fl.primes):
            return {"T": c.f(s)}


@claim("simple-is-summand", guard=_rad_trivial, guard_text=RAD_TEXT)
def _(c):
    for s in c.fl.simples:
        if not any(_direct_sum(c, s, g) == c.W for g in c.K):
            return {"T": c.f(s)}


@claim("complemented-filter-contains-simple")
def _(c):
    for f in c.K:
        below = [h for h in c.K if c.sub(h, f)]
        if not all(any(_direct_sum(c, h, g) == f for g in c.K) for h in below):
            continue
        for h in below:
            if h != c.t and not any(c.sub(s, h) for s in c.fl.simples):
                return {"F": c.f(f), "H": c.f(h)}


# -- socle ----------------------------------------------------------------------


def _socle(c, f):
    return c.fl.join_all(s for s in c.fl.simples if c.sub(s, f))


@claim("socle-meet-of-essentials")
def _(c):
    for f in c.K:
        if f == c.t:
            continue
        essentials = [h for h in c.K if c.sub(h, f) and _essential_in(c, h, f)]
        if c.fl.intersect_all(essentials) != _socle(c, f):
            return {"F": c.f(f)}
        socle_index(c.fl, f)


@claim("socle-restriction")
def _(c):
    soc_l = _socle(c, c.W)
    for f in c.K:
        s = _socle(c, f)
        if s != c.meet(f, soc_l) or _socle(c, s) != s:
            return {"F": c.f(f)}


@claim("socle-finite-support", guard=_rad_trivial, guard_text=RAD_TEXT)
def _(c):
    # every U_Max(a) is finite here, so the socle must be all of L
    if _socle(c, c.W) != c.W:
        return {"socle": c.f(_socle(c, c.W))}


@claim("socle-essential-equivalences")
def _(c):
    soc_l = _socle(c, c.W)
    ess = sorted(c.essential)
    meets_closed = all(
        c.fl.intersect_all(family) in c.essential for family in _subsets(ess, 1)
    ) if len(ess) <= SUBSET_LIMIT else all(c.meet(a, b) in c.essential for a, b in product(ess, ess))
    forms = (
        soc_l in c.essential,
        all(_socle(c, f) != c.t for f in c.K if f != c.t),
        all(any(c.sub(s, f) for s in c.fl.simples) for f in c.K if f != c.t),
        meets_closed,
    )
    if len(set(forms)) != 1:
        return {"forms": [str(v) for v in forms]}


@claim("socle-essential-finite")
def _(c):
    if _socle(c, c.W) not in c.essential:
        return {"socle": c.f(_socle(c, c.W))}


def _isolated(c):
    return frozenset(p for p in c.max.points if frozenset([p]) in c.max.opens)


@claim("isolated-maximal-three-forms", guard=_rad_trivial, guard_text=RAD_TEXT)
def _(c):
    isolated = _isolated(c)
    for m in c.fl.maximals:
        forms = (
            m in isolated,
            any(c.principal[c.st[e]] == m for e in c.B),
            any(_direct_sum(c, m, g) == c.W for g in c.K),
        )
        if len(set(forms)) != 1:
            return {"M": c.f(m)}


@claim("isolated-maximals-dense", guard=_rad_trivial, guard_text=RAD_TEXT)
def _(c):
    isolated = _isolated(c)
    dense = _closure_generic(c.max, isolated) == c.max.all
    if dense != (_socle(c, c.W) in c.essential):
        return {"isolated": c.pts(isolated)}


@claim(
    "socle-principal-iff-finitely-many-isolated",
    guard=_rad_trivial,
    guard_text=RAD_TEXT,
)
def _(c):
    # M₀(L) is finite here, so the socle must be principal
    soc_l = _socle(c, c.W)
    if not c.fl.generators[soc_l]:
        return {"socle": c.f(soc_l)}


# -- semi-simplicity ----------------------------------------------------------


def _semisimple(c, f):
    simples = [s for s in c.fl.simples if c.sub(s, f)]
    return f != c.t and bool(simples) and c.fl.join_all(simples) == f


@claim("semisimple-filter-equivalences")
def _(c):
    for f in c.K:
        if f == c.t:
            continue
        conditions = filter_conditions(c.fl, f)
        values = set(conditions.values()) | {_semisimple(c, f)}
        if len(values) != 1:
            return {"F": c.f(f), **{k: str(v) for k, v in conditions.items()}}


@claim("semisimple-subfilters")
def _(c):
    for f, g in product(c.K, repeat=2):
        if g != c.t and c.sub(g, f) and _semisimple(c, f) and not _semisimple(c, g):
            return {"F": c.f(f), "G": c.f(g)}


@claim("semisimple-lattice-equivalences")
def _(c):
    conditions = lattice_conditions(c.L)
    if len(set(conditions.values())) != 1 or conditions["join_of_simples"] != _semisimple(c, c.W):
        return {k: str(v) for k, v in conditions.items()}


@claim("finite-semisimple-hyperarchimedean")
def _(c):
    hyper = all(is_archimedean(c.L, x) for x in c.E)
    if not _semisimple(c, c.W) == hyper == c.rad_trivial:
        return {"semisimple": str(_semisimple(c, c.W)), "hyperarchimedean": str(hyper)}


# -- running -----------------------------------------------------------------------


def claim_ids() -> List[str]:
    return [cl.id for cl in CATALOG]


def audit(L: Lattice, name: Optional[str] = None) -> AuditReport:
    """Evaluate every catalog claim on L."""
    report = AuditReport(name or "lattice")
    try:
        ctx = _Context(L)
    except InternalInconsistency as exc:
        report.entries.append(AuditEntry("setup", FAILS, note=str(exc)))
        return report
    for cl in CATALOG:
        if cl.guard is not None and not cl.guard(ctx):
            note = cl.guard_text
            if cl.observe is not None:
                seen = cl.observe(ctx)
                if seen:
                    note = f"{note}; {seen}"
            report.entries.append(AuditEntry(cl.id, NOT_APPLICABLE, note=note))
            continue
        try:
            witness = cl.check(ctx)
        except InternalInconsistency as exc:
            report.entries.append(AuditEntry(cl.id, FAILS, note=str(exc)))
            continue
        if witness is None:
            report.entries.append(AuditEntry(cl.id, HOLDS))
        else:
            report.entries.append(AuditEntry(cl.id, FAILS, witness=witness))
    return report
