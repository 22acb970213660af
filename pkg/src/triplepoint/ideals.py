"""Groebner-basis core and ideal calculus.

Buchberger with the normal selection strategy (minimal lcm first, ties by
generator index) and both classical pair criteria; output is the unique
reduced Groebner basis sorted by ascending leading monomial, so equal
ideals produce identical bases.  Local colengths at the origin are
computed by m-adic truncation: quotient_dim(defining + I + m^N) is
evaluated along an increasing schedule of N until two values agree, which
by Nakayama pins the value for all larger N.
"""

from __future__ import annotations

import itertools
from heapq import heapify, heappop, heappush

from . import kernel
from .errors import ColengthBudgetError, ZeroPolynomialError
from .polyring import Polynomial, Ring, elimination

_COLENGTH_SCHEDULE = (2, 3, 4, 6, 8, 11, 15, 20, 26, 33, 41, 50, 60, 64)


def _exp_divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _exp_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _spoly(f, g, ring):
    """S-polynomial of monic term lists f, g."""
    ef, eg = f[0][1], g[0][1]
    L = _exp_lcm(ef, eg)
    mf = tuple(x - y for x, y in zip(L, ef))
    mg = tuple(x - y for x, y in zip(L, eg))
    a = kernel.mono_mul_terms(f, ring.key(mf), mf, kernel.SONE, ring.kc)
    b = kernel.mono_mul_terms(g, ring.key(mg), mg, kernel.SONE, ring.kc)
    return kernel.add_terms(a, kernel.neg_terms(b))


def _groebner_terms(gens, ring, assume_prefix=0):
    """Reduced Groebner basis of ``gens`` (term lists); deterministic."""
    G = []
    for g in gens:
        if g:
            G.append(kernel.monic_terms(g))
    if not G:
        return []
    lm = [g[0][1] for g in G]
    pending = set()
    heap = []

    def push_pairs(j):
        ej = lm[j]
        for i in range(j):
            if assume_prefix and i < assume_prefix and j < assume_prefix:
                continue
            L = _exp_lcm(lm[i], ej)
            heappush(heap, (ring.key(L), i, j))
            pending.add((i, j))

    if assume_prefix > len(G):
        assume_prefix = len(G)
    for j in range(len(G)):
        push_pairs(j)

    while heap:
        lk, i, j = heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        L = _exp_lcm(lm[i], lm[j])
        # product criterion: coprime leading monomials
        if all(x + y == z for x, y, z in zip(lm[i], lm[j], L)):
            continue
        # chain criterion: some k divides the lcm and both pairs are done
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if _exp_divides(lm[k], L):
                a = (i, k) if i < k else (k, i)
                b = (j, k) if j < k else (k, j)
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        s = _spoly(G[i], G[j], ring)
        if not s:
            continue
        _, r = kernel.reduce_terms(s, G, ring.kc)
        if r:
            G.append(kernel.monic_terms(r))
            lm.append(G[-1][0][1])
            push_pairs(len(G) - 1)

    # minimal basis: drop leading monomials divisible by another's
    order = sorted(range(len(G)), key=lambda t: G[t][0][0])
    minimal = []
    for t in order:
        e = lm[t]
        if not any(_exp_divides(m[0][1], e) for m in minimal):
            minimal.append(G[t])
    # interreduce tails against the rest
    reduced = list(minimal)
    for t in range(len(reduced)):
        others = reduced[:t] + reduced[t + 1 :]
        if not others:
            continue
        _, r = kernel.reduce_terms(reduced[t], others, ring.kc)
        reduced[t] = kernel.monic_terms(r)
    reduced = [g for g in reduced if g]
    reduced.sort(key=lambda g: g[0][0])
    return reduced


class IdealHandle:
    """Generator list with a cached reduced Groebner basis.

    Immutable once the basis is cached; the cache fill is idempotent so
    concurrent fills are harmless.
    """

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring: Ring, gens):
        self.ring = ring
        kept = []
        for g in gens:
            if isinstance(g, str):
                g = ring.polynomial(g)
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if g:
                kept.append(g)
        self.gens = tuple(kept)
        self._gb = None

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens)})"

    def groebner(self) -> tuple:
        if self._gb is None:
            terms = _groebner_terms([list(g.terms) for g in self.gens], self.ring)
            self._gb = tuple(Polynomial(self.ring, t) for t in terms)
        return self._gb

    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, p: Polynomial) -> bool:
        if p.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        if not p:
            return True
        gb = self.groebner()
        if not gb:
            return False
        return not p.reduce(gb)

    def contains_ideal(self, other: IdealHandle) -> bool:
        return all(self.contains(g) for g in other.gens)

    def equals(self, other: IdealHandle) -> bool:
        if self.ring != other.ring:
            raise ValueError("ideals from different rings")
        return self.groebner() == other.groebner()

    def __add__(self, other: IdealHandle) -> IdealHandle:
        if self.ring != other.ring:
            raise ValueError("ideals from different rings")
        return IdealHandle(self.ring, self.gens + other.gens)

    def product(self, other: IdealHandle) -> IdealHandle:
        if self.ring != other.ring:
            raise ValueError("ideals from different rings")
        gens = [a * b for a, b in itertools.product(self.gens, other.gens)]
        return IdealHandle(self.ring, gens)

    def power(self, n: int) -> IdealHandle:
        if n < 1:
            raise ValueError("power must be >= 1")
        out = self
        for _ in range(n - 1):
            out = out.product(self)
        return out

    def leading_exponents(self) -> tuple:
        return tuple(g.terms[0][1] for g in self.groebner())

    def quotient_dim(self):
        """Vector-space dimension of ring/ideal, or None when infinite."""
        gb = self.groebner()
        if not gb:
            return None
        if gb[0].degree() == 0:
            return 0
        return _count_standard(self.leading_exponents(), self.ring.n)

    def colon(self, other: IdealHandle) -> IdealHandle:
        """Ideal quotient {p : p * other <= self}."""
        if other.is_zero():
            raise ZeroPolynomialError("colon by the zero ideal")
        result = None
        for g in other.gens:
            if self.contains(g):
                continue  # colon by an element of the ideal is everything
            cg = _colon_single(self, g)
            result = cg if result is None else _intersect(result, cg)
        if result is None:
            return IdealHandle(self.ring, [self.ring.one()])
        return IdealHandle(self.ring, [p for p in result.groebner()])

    def intersect(self, other: IdealHandle) -> IdealHandle:
        return _intersect(self, other)


def _count_standard(lead_exps, n):
    """Count monomials outside the monomial ideal of ``lead_exps``.

    Returns None when some variable has no pure power among the leads.
    BFS over standard monomials, so the cost is linear in the answer.
    """
    lead = [e for e in lead_exps]
    # prune leads divisible by other leads
    lead.sort(key=sum)
    minimal = []
    for e in lead:
        if not any(_exp_divides(f, e) for f in minimal):
            minimal.append(e)
    for i in range(n):
        if not any(all(e[j] == 0 for j in range(n) if j != i) for e in minimal):
            return None
    origin = (0,) * n
    if any(sum(e) == 0 for e in minimal):
        return 0
    seen = {origin}
    stack = [origin]
    count = 0
    while stack:
        e = stack.pop()
        count += 1
        for i in range(n):
            f = e[:i] + (e[i] + 1,) + e[i + 1 :]
            if f in seen:
                continue
            seen.add(f)
            if not any(_exp_divides(le, f) for le in minimal):
                stack.append(f)
    return count


# -- elimination, intersection, colon -----------------------------------

_EXT_CACHE: dict = {}


def _ext_ring(ring: Ring) -> Ring:
    ext = _EXT_CACHE.get(ring)
    if ext is None:
        ext = Ring(("_w",) + ring.names, elimination(1))
        _EXT_CACHE[ring] = ext
    return ext


def _lift(p: Polynomial, ext: Ring, w_deg: int) -> Polynomial:
    terms = []
    for (_, e, a, b, d) in p.terms:
        ne = (w_deg,) + e
        terms.append((ext.key(ne), ne, a, b, d))
    terms.sort(reverse=True)
    return Polynomial(ext, terms)


def _drop(p: Polynomial, ring: Ring) -> Polynomial:
    terms = []
    for (_, e, a, b, d) in p.terms:
        ne = e[1:]
        terms.append((ring.key(ne), ne, a, b, d))
    terms.sort(reverse=True)
    return Polynomial(ring, terms)


def _intersect(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    """I cap J via the single-variable elimination trick."""
    ring = I.ring
    ext = _ext_ring(ring)
    w = ext.var("_w")
    one_minus_w = ext.one() - w
    gens = [_lift(g, ext, 1) for g in I.gens]
    gens += [one_minus_w * _lift(g, ext, 0) for g in J.gens]
    gb = IdealHandle(ext, gens).groebner()
    kept = [_drop(g, ring) for g in gb if all(t[1][0] == 0 for t in g.terms)]
    return IdealHandle(ring, kept)


def _colon_single(I: IdealHandle, g: Polynomial) -> IdealHandle:
    ring = I.ring
    meet = _intersect(I, IdealHandle(ring, [g]))
    quots = []
    for f in meet.gens:
        qs, r = f.reduce([g], want_quotients=True)
        if r:
            raise ArithmeticError("intersection element not divisible by generator")
        quots.append(qs[0])
    return IdealHandle(ring, quots)


def minors(rows, k: int) -> IdealHandle:
    """Ideal of all k x k minors of a matrix of polynomials."""
    if not rows or not rows[0]:
        raise ValueError("empty matrix")
    ring = rows[0][0].ring
    m, n = len(rows), len(rows[0])
    if k < 1 or k > min(m, n):
        raise ValueError(f"minor size {k} out of range for {m}x{n} matrix")

    def det(rs, cs):
        if len(rs) == 1:
            return rows[rs[0]][cs[0]]
        total = ring.zero()
        r0 = rs[0]
        for pos, c in enumerate(cs):
            sub = det(rs[1:], cs[:pos] + cs[pos + 1 :])
            term = rows[r0][c] * sub
            total = total + term if pos % 2 == 0 else total - term
        return total

    gens = []
    for rs in itertools.combinations(range(m), k):
        for cs in itertools.combinations(range(n), k):
            gens.append(det(tuple(rs), tuple(cs)))
    return IdealHandle(ring, gens)


def spair_audit(basis) -> bool:
    """Independent check that every S-polynomial of ``basis`` reduces to 0.

    Walks all pairs with no pruning, so it does not share the Buchberger
    pair bookkeeping it is meant to audit.
    """
    basis = list(basis)
    if not basis:
        return True
    ring = basis[0].ring
    terms = [list(b.terms) for b in basis]
    for i in range(len(terms)):
        for j in range(i + 1, len(terms)):
            s = _spoly(kernel.monic_terms(terms[i]), kernel.monic_terms(terms[j]), ring)
            if not s:
                continue
            _, r = kernel.reduce_terms(s, terms, ring.kc)
            if r:
                return False
    return True


class PresentedQuotient:
    """A local ring presented as (power series ring) / (defining ideal).

    All equalities tested here (ideal equality among origin-primary
    ideals, colengths, products) are invariant under completion, so the
    computations run in the polynomial ring.
    """

    __slots__ = ("ring", "defining", "_maximal")

    def __init__(self, ring: Ring, defining: IdealHandle):
        self.ring = ring
        for g in defining.gens:
            if any(sum(t[1]) < 2 for t in g.terms):
                raise ValueError(
                    "defining ideal not inside the square of the maximal ideal"
                )
        self.defining = defining
        self._maximal = None

    def maximal_ideal(self) -> IdealHandle:
        if self._maximal is None:
            self._maximal = IdealHandle(self.ring, self.ring.gens())
        return self._maximal

    def image(self, ideal: IdealHandle) -> IdealHandle:
        return ideal + self.defining

    def image_equal(self, I: IdealHandle, J: IdealHandle) -> bool:
        return self.image(I).equals(self.image(J))

    def image_contains(self, I: IdealHandle, p: Polynomial) -> bool:
        return self.image(I).contains(p)

    def colength(self, ideal: IdealHandle, budget: int = 64) -> int:
        """Length of (local ring)/(ideal) at the origin via truncation."""
        J = self.image(ideal)
        gb = J.groebner()
        if gb and gb[0].degree() == 0:
            return 0
        gb_terms = [list(g.terms) for g in gb]
        lead = [g.terms[0][1] for g in gb]
        n = self.ring.n
        schedule = self._schedule(lead, n, budget)
        prev = None
        for N in schedule:
            dim = self._truncated_dim(gb_terms, lead, N)
            if dim == prev:
                return dim
            prev = dim
        raise ColengthBudgetError(
            f"colength did not stabilize within truncation budget {budget}"
        )

    def _schedule(self, lead, n, budget):
        sched = [N for N in _COLENGTH_SCHEDULE if N <= budget]
        if budget not in sched:
            sched.append(budget)
        # whenever the leading-term quotient is already finite, start just
        # past its top degree: stabilization is immediate in that case
        cap = _count_standard(lead, n)
        if cap is not None:
            top = _standard_top_degree(lead, n)
            guess = top + 1
            sched = [guess, guess + 1] + [N for N in sched if N > guess + 1]
        return sched

    def _truncated_dim(self, gb_terms, lead, N):
        ring = self.ring
        mono_lead = [
            t[0][1] for t in gb_terms if len(t) == 1
        ]  # honest members: single-term basis elements
        extra = []
        for e in _compositions(N, ring.n, mono_lead):
            mono = [(ring.key(e), e, 1, 0, 1)]
            _, r = kernel.reduce_terms(mono, gb_terms, ring.kc)
            if r:
                extra.append(mono)
        if not extra:
            combined = gb_terms
        else:
            combined = gb_terms + extra
        final = _groebner_terms(combined, ring, assume_prefix=len(gb_terms))
        dim = _count_standard([t[0][1] for t in final], ring.n)
        if dim is None:
            raise ColengthBudgetError("truncated quotient unexpectedly infinite")
        return dim

    def min_gens(self, ideal: IdealHandle, budget: int = 64) -> int:
        """Minimal number of generators of the image of ``ideal``."""
        m_ideal = self.maximal_ideal().product(ideal)
        return self.colength(m_ideal, budget) - self.colength(ideal, budget)


def _standard_top_degree(lead, n):
    minimal = []
    for e in sorted(lead, key=sum):
        if not any(_exp_divides(f, e) for f in minimal):
            minimal.append(e)
    origin = (0,) * n
    seen = {origin}
    stack = [origin]
    top = 0
    while stack:
        e = stack.pop()
        d = sum(e)
        if d > top:
            top = d
        for i in range(n):
            f = e[:i] + (e[i] + 1,) + e[i + 1 :]
            if f in seen:
                continue
            seen.add(f)
            if not any(_exp_divides(le, f) for le in minimal):
                stack.append(f)
    return top


def _compositions(N, n, mono_lead):
    """Exponent tuples of total degree N, skipping multiples of known
    monomial ideal members as we go."""

    def rec(prefix, remaining, slot):
        if slot == n - 1:
            e = prefix + (remaining,)
            if not any(_exp_divides(ml, e) for ml in mono_lead):
                yield e
            return
        for v in range(remaining + 1):
            pre = prefix + (v,)
            padded = pre + (0,) * (n - slot - 1)
            if any(
                _exp_divides(ml, padded)
                for ml in mono_lead
                if all(ml[i] == 0 for i in range(slot + 1, n))
            ):
                continue
            yield from rec(pre, remaining - v, slot + 1)

    yield from rec((), N, 0)
