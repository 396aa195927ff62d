"""Brute-force reference implementations used as test oracles.

Everything here works from the raw ≤ and ⊙ tables of a lattice, uses plain
frozensets, and follows the textbook definitions literally, so that it
shares no code paths with the package.
"""

from itertools import combinations, permutations, product

from rlat.algebra import Lattice


def le(L, x, y):
    return L.leq[x][y]


def meet(L, x, y):
    lower = [z for z in range(L.n) if le(L, z, x) and le(L, z, y)]
    return next(z for z in lower if all(le(L, w, z) for w in lower))


def join(L, x, y):
    upper = [z for z in range(L.n) if le(L, x, z) and le(L, y, z)]
    return next(z for z in upper if all(le(L, z, w) for w in upper))


def top(L):
    return next(x for x in range(L.n) if all(le(L, y, x) for y in range(L.n)))


def bottom(L):
    return next(x for x in range(L.n) if all(le(L, x, y) for y in range(L.n)))


def arrow(L, x, y):
    candidates = [z for z in range(L.n) if le(L, L.odot[x][z], y)]
    return next(z for z in candidates if all(le(L, w, z) for w in candidates))


def star(L, x):
    return arrow(L, x, bottom(L))


def is_filter(L, S):
    one = top(L)
    if one not in S:
        return False
    for x in S:
        for y in range(L.n):
            if le(L, x, y) and y not in S:
                return False
    return all(L.odot[x][y] in S for x in S for y in S)


def filters(L):
    """All filters, by testing every subset."""
    return sorted(
        (frozenset(S) for k in range(1, L.n + 1) for S in combinations(range(L.n), k) if is_filter(L, frozenset(S))),
        key=lambda S: (len(S), sorted(S)),
    )


def trivial(L):
    return frozenset([top(L)])


def whole(L):
    return frozenset(range(L.n))


def generated(L, S):
    return frozenset.intersection(*[F for F in filters(L) if set(S) <= F])


def filter_join(L, F, G):
    return generated(L, F | G)


def is_prime(L, P):
    if P == whole(L):
        return False
    return all(x in P or y in P for x, y in product(range(L.n), repeat=2) if join(L, x, y) in P)


def maximals(L):
    proper = [F for F in filters(L) if F != whole(L)]
    return [F for F in proper if not any(F < G for G in proper)]


def primes(L):
    return [F for F in filters(L) if is_prime(L, F)]


def minimal_primes(L):
    ps = primes(L)
    return [P for P in ps if not any(Q < P for Q in ps)]


def radical(L):
    return frozenset.intersection(whole(L), *maximals(L))


def simples(L):
    fs = filters(L)
    t = trivial(L)
    return [F for F in fs if F != t and all(G in (t, F) for G in fs if G <= F)]


def filter_star(L, F):
    t = trivial(L)
    disjoint = [G for G in filters(L) if F & G == t]
    return next(G for G in disjoint if all(H <= G for H in disjoint))


def essential_in(L, H, F):
    t = trivial(L)
    return all(F & G == t for G in filters(L) if H & G == t)


def socle(L, F):
    inside = [T for T in simples(L) if T <= F]
    acc = trivial(L)
    for T in inside:
        acc = filter_join(L, acc, T)
    return acc


def boolean_center(L):
    b, t = bottom(L), top(L)
    return [x for x in range(L.n) if any(meet(L, x, y) == b and join(L, x, y) == t for y in range(L.n))]


def isomorphic(A, B):
    if A.n != B.n:
        return False
    n = A.n
    for p in permutations(range(n)):
        if all(A.leq[x][y] == B.leq[p[x]][p[y]] for x in range(n) for y in range(n)) and all(
            p[A.odot[x][y]] == B.odot[p[x]][p[y]] for x in range(n) for y in range(n)
        ):
            return True
    return False


def relabel(L, perm, names=None):
    """The same algebra presented with element k listed at position perm[k]."""
    n = L.n
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    names = names or [L.names[inv[i]] for i in range(n)]
    leq = [[L.leq[inv[i]][inv[j]] for j in range(n)] for i in range(n)]
    odot = [[perm[L.odot[inv[i]][inv[j]]] for j in range(n)] for i in range(n)]
    return Lattice(names, leq, odot)
