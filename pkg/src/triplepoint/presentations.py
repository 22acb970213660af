"""Catalog of ring presentations: determinantal and hypersurface models.

Every catalog entry is built from its printed defining matrix (families
with a 2x3 Hilbert-Burch matrix) or hypersurface equation; the defining
ideal of a determinantal entry is the ideal of maximal minors, and the
canonical trace ideal of a 2x3 entry is the entry ideal I_1 of the matrix
plus the defining ideal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError, ParseError, UnsupportedTypeError
from .ideals import IdealHandle, PresentedQuotient, minors
from .polyring import Ring

RTP_RING = Ring(("x", "y", "z", "t"))
RDP_RING = Ring(("x", "y", "z"))
QUOT5_RING = Ring(("z1", "z2", "z3", "z4", "z5"))

_RTP_FAMILIES = ("A", "B", "C", "D", "F", "H", "Gamma1", "Gamma2", "Gamma3")
_RDP_FAMILIES = ("RDP-A", "RDP-D", "RDP-E6", "RDP-E7", "RDP-E8")


@dataclass(frozen=True)
class FamilyTag:
    name: str
    params: tuple

    def __str__(self):
        if not self.params:
            return self.name
        return f"{self.name}:{','.join(str(p) for p in self.params)}"


@dataclass(frozen=True)
class RingPresentation:
    tag: FamilyTag
    quotient: PresentedQuotient
    matrix: tuple | None  # rows of polynomials when determinantal
    cm_type: int

    @property
    def ring(self):
        return self.quotient.ring


def parse_tag(text: str) -> FamilyTag:
    text = text.strip()
    if ":" in text:
        name, _, rest = text.partition(":")
        try:
            params = tuple(int(p) for p in rest.split(","))
        except ValueError as exc:
            raise ParseError(f"bad parameters in tag {text!r}") from exc
    else:
        name, params = text, ()
    return FamilyTag(name, params)


def _check(cond, msg):
    if not cond:
        raise ParameterError(msg)


def _matrix(ring, rows):
    return tuple(tuple(ring.polynomial(e) for e in row) for row in rows)


def _rtp_matrix(tag: FamilyTag):
    name, p = tag.name, tag.params
    R = RTP_RING
    if name == "A":
        _check(len(p) == 3, "A needs parameters l,m,n")
        l, m, n = p
        _check(0 <= l <= m <= n, "A needs 0 <= l <= m <= n")
        return _matrix(R, [["x", f"t^{m+1}", f"t^{n+1} + z"], [f"t^{l+1}", "y", "z"]])
    if name == "B":
        _check(len(p) == 2, "B needs parameters m,n")
        m, n = p
        _check(m >= 0 and n >= 3, "B needs m >= 0 and n >= 3")
        k = (n + 1) // 2
        if n % 2 == 1:  # n = 2k - 1
            return _matrix(R, [["x", "y", f"t^{k} + z*t"], [f"t^{m+1}", "z", "y"]])
        return _matrix(R, [["x", "y", "z*t"], [f"t^{m+1}", "z", f"y + t^{k}"]])
    if name == "C":
        _check(len(p) == 2, "C needs parameters m,n")
        m, n = p
        _check(m >= 0 and n >= 4, "C needs m >= 0 and n >= 4")
        return _matrix(R, [["x", "y", f"t^2 + z^{n-1}"], [f"t^{m+1}", "z", "y"]])
    if name == "D":
        _check(len(p) == 1 and p[0] >= 0, "D needs n >= 0")
        n = p[0]
        return _matrix(R, [["x", "y", "z^2"], [f"t^{n+1}", "z", "y + t^2"]])
    if name == "F":
        _check(len(p) == 1 and p[0] >= 0, "F needs n >= 0")
        n = p[0]
        return _matrix(R, [["x", "y", "t^3 + z^2"], [f"t^{n+1}", "z", "y"]])
    if name == "H":
        _check(len(p) == 1 and p[0] >= 5, "H needs n >= 5")
        n = p[0]
        k = (n + 1) // 3
        _check(k >= 2 and n - 3 * k in (-1, 0, 1), "H needs n = 3k-1, 3k or 3k+1")
        if n == 3 * k - 1:
            return _matrix(R, [["x", "y", f"z*t + t^{k}"], ["y", "z", "x"]])
        if n == 3 * k:
            return _matrix(R, [["x", "y", "z*t"], ["y", "z", f"x + t^{k}"]])
        return _matrix(R, [["x", "y", "z*t"], [f"y + t^{k}", "z", "x"]])
    if name == "Gamma1":
        _check(not p, "Gamma1 takes no parameters")
        return _matrix(R, [["x", "y", "t^2"], ["y", "z", "x + z^2"]])
    if name == "Gamma2":
        _check(not p, "Gamma2 takes no parameters")
        return _matrix(R, [["x", "y", "z^2"], ["y", "z", "x + t^2"]])
    if name == "Gamma3":
        _check(not p, "Gamma3 takes no parameters")
        return _matrix(R, [["x", "y", "t^2 + z^3"], ["y", "z", "x"]])
    raise ParameterError(f"unknown RTP family {name!r}")


def _rdp_equation(tag: FamilyTag) -> str:
    name, p = tag.name, tag.params
    if name == "RDP-A":
        _check(len(p) == 1 and p[0] >= 1, "RDP-A needs n >= 1")
        return f"z^2 + x^2 + y^{p[0]+1}"
    if name == "RDP-D":
        _check(len(p) == 1 and p[0] >= 4, "RDP-D needs n >= 4")
        return f"z^2 + x^2*y + y^{p[0]-1}"
    _check(not p, f"{name} takes no parameters")
    if name == "RDP-E6":
        return "z^2 + x^3 + y^4"
    if name == "RDP-E7":
        return "z^2 + x^3 + x*y^3"
    if name == "RDP-E8":
        return "z^2 + x^3 + y^5"
    raise ParameterError(f"unknown RDP family {name!r}")


def instantiate(tag) -> RingPresentation:
    """Build the catalog presentation for a tag (string or FamilyTag)."""
    if isinstance(tag, str):
        tag = parse_tag(tag)
    name = tag.name
    if name in _RTP_FAMILIES:
        M = _rtp_matrix(tag)
        defining = minors([list(r) for r in M], 2)
        quotient = PresentedQuotient(RTP_RING, defining)
        return RingPresentation(tag, quotient, M, 2)
    if name in _RDP_FAMILIES:
        eq = _rdp_equation(tag)
        defining = IdealHandle(RDP_RING, [eq])
        return RingPresentation(tag, PresentedQuotient(RDP_RING, defining), None, 1)
    if name == "EX-5.2":
        _check(not tag.params, "EX-5.2 takes no parameters")
        M = _matrix(RTP_RING, [["x", "y", "z"], ["y", "z", "x^2 - t^3"]])
        defining = minors([list(r) for r in M], 2)
        return RingPresentation(tag, PresentedQuotient(RTP_RING, defining), M, 2)
    if name == "EX-5.3":
        _check(not tag.params, "EX-5.3 takes no parameters")
        M = _matrix(
            QUOT5_RING,
            [["z1", "z4", "z2", "z3^2"], ["z2", "z3", "z4", "z5"]],
        )
        defining = minors([list(r) for r in M], 2)
        return RingPresentation(tag, PresentedQuotient(QUOT5_RING, defining), M, 3)
    raise ParameterError(f"unknown catalog tag {tag}")


def trace_ideal(pres: RingPresentation) -> IdealHandle:
    """Canonical trace ideal: entry ideal of the 2x3 matrix plus defining."""
    if pres.cm_type != 2:
        raise UnsupportedTypeError(
            f"trace ideal via the 2x3 matrix needs CM type 2, not {pres.cm_type}"
        )
    entries = [e for row in pres.matrix for e in row]
    ideal = IdealHandle(pres.ring, entries) + pres.quotient.defining
    return IdealHandle(pres.ring, list(ideal.groebner()))


def residue(pres: RingPresentation) -> int:
    return pres.quotient.colength(trace_ideal(pres))


def nearly_gorenstein(pres: RingPresentation) -> bool:
    tr = trace_ideal(pres)
    extended = tr + pres.quotient.defining
    return all(extended.contains(v) for v in pres.ring.gens())


def ring_multiplicity(pres: RingPresentation) -> int:
    """e0 of the ring: colength of a found 2-generated reduction of m."""
    from .ulrich import ReductionSearchPolicy, find_reduction

    A = pres.quotient
    m = A.maximal_ideal()
    policy = ReductionSearchPolicy(preferred_seeds=maximal_reduction_seed(pres.tag))
    Q = find_reduction(A, m, policy)
    if Q is None:
        from .errors import SearchFailureError

        raise SearchFailureError(
            f"no 2-generated reduction of the maximal ideal found for {pres.tag}"
        )
    return A.colength(Q)


def published_reduction(tag: FamilyTag, i: int):
    """The reduction pair used in the source arguments for (x,y,z,t^i)."""
    name = tag.name
    R = RTP_RING
    if name == "A":
        return (R.polynomial(f"t^{i}"), R.polynomial("x + y + z"))
    if name in ("B", "C", "D", "F"):
        return (R.polynomial(f"t^{i}"), R.polynomial("x + z"))
    if name in ("H", "Gamma1", "Gamma2", "Gamma3"):
        return (R.polynomial(f"t^{i}"), R.polynomial("z"))
    if name == "EX-5.2":
        return (R.polynomial("x"), R.polynomial(f"t^{i}"))
    return None


def maximal_reduction_seed(tag: FamilyTag):
    """Seed reductions of the maximal ideal for the multiplicity search."""
    name = tag.name
    if name in _RTP_FAMILIES or name == "EX-5.2":
        pair = published_reduction(tag, 1)
        return (pair,)
    if name in _RDP_FAMILIES:
        return ((RDP_RING.var("x"), RDP_RING.var("y")),)
    if name == "EX-5.3":
        R = QUOT5_RING
        return (
            (R.polynomial("z1 + z3 + z5"), R.polynomial("z2 + z4")),
            (R.polynomial("z1 + z5"), R.polynomial("z2 + z3 + z4")),
            (R.polynomial("z1 - z5"), R.polynomial("z2 - z3 + z4")),
        )
    return None


def candidate_chain(pres: RingPresentation, count: int):
    """The ideals (x, y, z, t^i) for i = 1..count in figure variable order."""
    R = pres.ring
    out = []
    for i in range(1, count + 1):
        out.append(
            IdealHandle(R, [R.var("x"), R.var("y"), R.var("z"), R.polynomial(f"t^{i}")])
        )
    return out
