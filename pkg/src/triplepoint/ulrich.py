"""Certify or refute the Ulrich property for ideals in catalog rings.

The numeric criterion is the two-dimensional one: an m-primary ideal I
with a stable 2-generated reduction Q (I^2 = QI) is Ulrich iff
e0(I) = (mu(I) - 1) * length(A/I).  The freeness cross-check
length(A/I^2) - length(A/I) = mu(I) * length(A/I) is computed
independently and must agree whenever a stable reduction is known; a
disagreement is an engine invariant violation, not a verdict.

Absence of a reduction is never read as "not Ulrich": the search is a
bounded heuristic, so such candidates get the verdict
``no-reduction-found``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import ColengthBudgetError, ShapeError, TriplepointError
from .ideals import IdealHandle, PresentedQuotient
from .polyring import Polynomial
from .presentations import (
    RDP_RING,
    FamilyTag,
    RingPresentation,
    published_reduction,
    trace_ideal,
)

VERDICT_ULRICH = "ulrich"
VERDICT_GOOD_NOT_ULRICH = "good-not-ulrich"
VERDICT_NOT_GOOD = "not-good"
VERDICT_NO_REDUCTION = "no-reduction-found"


class EngineInvariantError(TriplepointError):
    """A cross-check the engine guarantees internally has failed."""


_DEFAULT_POOL = ((0, 0, 1), (1, 0, 1), (-1, 0, 1), (2, 0, 1), (-2, 0, 1), (0, 1, 1))


@dataclass(frozen=True)
class ReductionSearchPolicy:
    coefficient_pool: tuple = _DEFAULT_POOL
    max_candidates: int = 400
    preferred_seeds: tuple | None = None  # pairs of polynomials


@dataclass(frozen=True)
class UlrichCertificate:
    tag: str
    ideal: IdealHandle
    reduction: IdealHandle | None
    stable: bool
    good: bool | None
    e0: int | None
    mu: int
    length: int
    free_test: bool | None
    verdict: str

    def to_json_dict(self):
        return {
            "tag": self.tag,
            "ideal": [str(g) for g in self.ideal.gens],
            "reduction": [str(g) for g in self.reduction.gens]
            if self.reduction is not None
            else None,
            "verdict": self.verdict,
            "e0": self.e0,
            "mu": self.mu,
            "len": self.length,
            "stable": self.stable,
            "good": self.good,
            "freeTest": self.free_test,
        }


def is_reduction_stable(A: PresentedQuotient, I: IdealHandle, Q: IdealHandle) -> bool:
    """I^2 == Q*I in A, for a 2-generated Q inside I."""
    if len(Q.gens) != 2:
        raise ValueError("reduction must have exactly 2 generators")
    img = A.image(I)
    for q in Q.gens:
        if not img.contains(q):
            raise ValueError("reduction candidate is not inside the ideal")
    return A.image_equal(I.power(2), Q.product(I))


def is_reduction_stable_local(
    A: PresentedQuotient, I: IdealHandle, Q: IdealHandle
) -> bool:
    """Stability witnessed by local lengths alone.

    For a 2-generated parameter ideal Q <= I in a two-dimensional CM local
    ring, Q/QI is free of rank 2 over A/I, so len(A/QI) = len(A/Q) +
    2*len(A/I); since QI <= I^2 always, equality of len(A/I^2) with that
    sum is equivalent to I^2 = QI in the local ring.  This sees stability
    even when Q picks up extra zeros away from the origin, where the
    ambient-ring ideal equality cannot.
    """
    if len(Q.gens) != 2:
        raise ValueError("reduction must have exactly 2 generators")
    img = A.image(I)
    for q in Q.gens:
        if not img.contains(q):
            raise ValueError("reduction candidate is not inside the ideal")
    e0 = A.colength(Q)
    return A.colength(I.power(2)) == e0 + 2 * A.colength(I)


def good_check(A: PresentedQuotient, I: IdealHandle, Q: IdealHandle) -> bool:
    """Q : I == I in A (colon computed in the ambient ring)."""
    colon = A.image(Q).colon(I)
    return A.image_equal(colon, I)


def _candidate_pairs(gens, policy):
    n = len(gens)
    if policy.preferred_seeds:
        for pair in policy.preferred_seeds:
            yield pair
    for i, j in itertools.combinations(range(n), 2):
        yield (gens[i], gens[j])
    for i, j in itertools.combinations(range(n), 2):
        s = gens[i] + gens[j]
        for k in range(n):
            if k not in (i, j):
                yield (s, gens[k])
    if n > 2:
        for i in range(n):
            rest = None
            for j in range(n):
                if j != i:
                    rest = gens[j] if rest is None else rest + gens[j]
            yield (gens[i], rest)
    ring = gens[0].ring
    pool = [c for c in policy.coefficient_pool]
    vectors = []
    for vec in itertools.product(pool, repeat=n):
        if all(c == (0, 0, 1) for c in vec):
            continue
        vectors.append(vec)
        if len(vectors) >= 80:
            break

    def combine(vec):
        p = ring.zero()
        for c, g in zip(vec, gens):
            if c != (0, 0, 1):
                p = p + g * c
        return p

    combos = [combine(v) for v in vectors]
    for a, b in itertools.combinations(range(len(combos)), 2):
        yield (combos[a], combos[b])


def find_reduction(A, I, policy: ReductionSearchPolicy | None = None, _square=None):
    """First 2-generated Q <= I with I^2 = QI, deterministic search order.

    Two passes over the same candidate stream: ambient-ring ideal equality
    first, then the local length witness for candidates the global test
    cannot certify (extra zeros away from the origin).  The square of I
    and its colength are computed once and shared across candidates.
    """
    if policy is None:
        policy = ReductionSearchPolicy()
    gens = list(I.gens)
    if not gens:
        return None
    img = A.image(I)
    I_sq = I.power(2) if _square is None else _square
    I_sq_image = A.image(I_sq)

    def usable(q1, q2):
        if not q1 or not q2:
            return None
        if not (img.contains(q1) and img.contains(q2)):
            return None
        Q = IdealHandle(I.ring, [q1, q2])
        return Q if len(Q.gens) == 2 else None

    def check_global(Q):
        return I_sq_image.equals(A.image(Q.product(I)))

    lengths = {}

    def check_local(Q):
        if "I" not in lengths:
            lengths["I"] = A.colength(I)
            lengths["I2"] = A.colength(I_sq)
        e0 = A.colength(Q)
        return lengths["I2"] == e0 + 2 * lengths["I"]

    for check in (check_global, check_local):
        tried = 0
        for q1, q2 in _candidate_pairs(gens, policy):
            if tried >= policy.max_candidates:
                break
            tried += 1
            Q = usable(q1, q2)
            if Q is None:
                continue
            try:
                if check(Q):
                    return Q
            except (ColengthBudgetError, ValueError):
                continue
    return None


def ulrich_check(
    A: PresentedQuotient,
    I: IdealHandle,
    policy: ReductionSearchPolicy | None = None,
    tag: str = "",
) -> UlrichCertificate:
    length = A.colength(I)
    mu = A.min_gens(I)
    I_sq = I.power(2)
    Q = find_reduction(A, I, policy, _square=I_sq)
    if Q is None:
        return UlrichCertificate(
            tag, I, None, False, None, None, mu, length, None, VERDICT_NO_REDUCTION
        )
    e0 = A.colength(Q)
    numeric = e0 == (mu - 1) * length
    len_sq = A.colength(I_sq)
    free_test = (len_sq - length) == mu * length
    if numeric != free_test:
        raise EngineInvariantError(
            f"freeness cross-check disagrees with numeric criterion for {tag or I!r}"
        )
    good = good_check(A, I, Q)
    if numeric and good:
        verdict = VERDICT_ULRICH
    elif good:
        verdict = VERDICT_GOOD_NOT_ULRICH
    else:
        verdict = VERDICT_NOT_GOOD
    return UlrichCertificate(
        tag, I, Q, True, good, e0, mu, length, free_test, verdict
    )


def trace_shape(pres: RingPresentation):
    """Detect the trace ideal shape (x_1..x_{n-1}, x_n^{c+1}).

    Returns (power_variable_index, c + 1).  The detection reads the
    reduced Groebner basis; anything else raises ShapeError.
    """
    tr = trace_ideal(pres)
    ring = pres.ring
    gb = tr.groebner()
    unit_vars = set()
    power = None
    for g in gb:
        if len(g.terms) != 1:
            raise ShapeError(f"trace basis element {g} is not a monomial")
        exp = g.terms[0][1]
        support = [k for k, e in enumerate(exp) if e]
        if len(support) != 1:
            raise ShapeError(f"trace basis element {g} is not a pure power")
        v = support[0]
        if exp[v] == 1:
            unit_vars.add(v)
        elif power is None:
            power = (v, exp[v])
        else:
            raise ShapeError("trace basis has two higher pure powers")
    if power is None:
        if len(unit_vars) != ring.n:
            raise ShapeError("trace basis does not involve every variable")
        return ring.n - 1, 1
    v, c1 = power
    if unit_vars != set(range(ring.n)) - {v}:
        raise ShapeError("trace basis variables do not cover the complement")
    return v, c1


def classify_ulrich_set(
    pres: RingPresentation, use_seeds: bool = True, max_candidates: int = 400
):
    """Certificates for every candidate above the trace ideal."""
    v, count = trace_shape(pres)
    ring = pres.ring
    A = pres.quotient
    others = [ring.var(name) for k, name in enumerate(ring.names) if k != v]
    out = []
    for i in range(1, count + 1):
        gens = others + [ring.var(ring.names[v]) ** i]
        I = IdealHandle(ring, gens)
        seeds = published_reduction(pres.tag, i) if use_seeds else None
        policy = ReductionSearchPolicy(
            preferred_seeds=(seeds,) if seeds else None,
            max_candidates=max_candidates,
        )
        out.append(ulrich_check(A, I, policy, tag=f"{pres.tag}#{i}"))
    return out


def next_candidate_rejected_by_trace(pres: RingPresentation):
    """The first candidate past the trace, plus its containment refutation.

    Returns (ideal, rejected) where rejected is True when the ideal fails
    to contain the trace ideal (so it cannot be Ulrich).
    """
    v, count = trace_shape(pres)
    ring = pres.ring
    others = [ring.var(name) for k, name in enumerate(ring.names) if k != v]
    I = IdealHandle(ring, others + [ring.var(ring.names[v]) ** (count + 1)])
    tr = trace_ideal(pres)
    img = pres.quotient.image(I)
    rejected = not all(img.contains(g) for g in tr.gens)
    return I, rejected


# -- rational double point lists ----------------------------------------


def _rdp_listed(tag: FamilyTag):
    """(ideal generators, seed reduction) for each listed Ulrich ideal."""
    R = RDP_RING
    x, y, z = R.var("x"), R.var("y"), R.var("z")
    name = tag.name
    items = []
    if name in ("RDP-A", "RDP-E6", "RDP-E7", "RDP-E8"):
        if name == "RDP-A":
            n = tag.params[0]
            jmax = (n + 1) // 2
        else:
            jmax = {"RDP-E6": 2, "RDP-E7": 3, "RDP-E8": 2}[name]
        for j in range(1, jmax + 1):
            items.append(([x, y**j, z], (x, y**j)))
        return items
    if name == "RDP-D":
        n = tag.params[0]
        if n % 2 == 0:
            m = n // 2
            for j in range(1, m):
                items.append(([x, y**j, z], (x, y**j)))
            plus = R.polynomial(f"x + i*y^{m-1}")
            minus = R.polynomial(f"x - i*y^{m-1}")
            items.append(([plus, y**m, z], (plus, y**m)))
            items.append(([minus, y**m, z], (minus, y**m)))
        else:
            m = (n - 1) // 2
            for j in range(1, m + 1):
                items.append(([x, y**j, z], (x, y**j)))
        items.append(([x**2, y, z], (y, x**2)))
        return items
    raise ValueError(f"not an RDP tag: {tag}")


def _rdp_next(tag: FamilyTag):
    """The first ideal past the listed pattern, for families where the
    pattern continues formally (A and E)."""
    R = RDP_RING
    x, y, z = R.var("x"), R.var("y"), R.var("z")
    name = tag.name
    if name == "RDP-A":
        j = (tag.params[0] + 1) // 2 + 1
    elif name in ("RDP-E6", "RDP-E7", "RDP-E8"):
        j = {"RDP-E6": 3, "RDP-E7": 4, "RDP-E8": 3}[name]
    else:
        return None
    ideal = [x, y**j, z]
    seeds = ((x, z), (x + y**j, z), (x, y**j))
    return ideal, seeds


def verify_rdp_list(pres: RingPresentation, max_candidates: int = 400):
    """Certify every listed RDP Ulrich ideal; for A and E families also
    certify that the next pattern ideal fails the numeric criterion."""
    if pres.cm_type != 1:
        raise ValueError("verify_rdp_list expects an RDP presentation")
    A = pres.quotient
    certs = []
    for k, (gens, seed) in enumerate(_rdp_listed(pres.tag), start=1):
        I = IdealHandle(RDP_RING, gens)
        policy = ReductionSearchPolicy(preferred_seeds=(seed,), max_candidates=max_candidates)
        certs.append(ulrich_check(A, I, policy, tag=f"{pres.tag}#{k}"))
    nxt = _rdp_next(pres.tag)
    next_cert = None
    if nxt is not None:
        gens, seeds = nxt
        I = IdealHandle(RDP_RING, gens)
        policy = ReductionSearchPolicy(preferred_seeds=seeds, max_candidates=max_candidates)
        next_cert = ulrich_check(A, I, policy, tag=f"{pres.tag}#next")
    return certs, next_cert


def gorenstein_quotient_experiment(pres: RingPresentation) -> bool:
    """Is A / trace Gorenstein?  True iff the socle is one-dimensional."""
    A = pres.quotient
    tr = trace_ideal(pres)
    m = A.maximal_ideal()
    socle_preimage = A.image(tr).colon(m)
    socle_dim = A.colength(tr) - A.colength(socle_preimage)
    return socle_dim == 1
