# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term kernel: same contract as ``_termkernel_py``.

Coefficients stay arbitrary-precision Python ints; the compilation pays
off in the merge loops, the divisibility scans, and the division loop's
dictionary traffic — the parts that dominate Buchberger runs.
"""

from heapq import heapify, heappop, heappush
from math import gcd

SZERO = (0, 0, 1)
SONE = (1, 0, 1)


def snorm(a, b, d):
    if a == 0 and b == 0:
        return SZERO
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(a, b), d)
    if g > 1:
        return (a // g, b // g, d // g)
    return (a, b, d)


def sadd(c1, c2):
    a1, b1, d1 = c1
    a2, b2, d2 = c2
    return snorm(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)


def smul(c1, c2):
    a1, b1, d1 = c1
    a2, b2, d2 = c2
    return snorm(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, d1 * d2)


def sdiv(c1, c2):
    a, b, d = c1
    p, q, e = c2
    if p == 0 and q == 0:
        raise ZeroDivisionError("division by zero scalar")
    return snorm((a * p + b * q) * e, (b * p - a * q) * e, d * (p * p + q * q))


def sneg(c):
    a, b, d = c
    return (-a, -b, d)


def add_terms(list p, list q):
    cdef Py_ssize_t i = 0, j = 0, np_ = len(p), nq = len(q)
    if np_ == 0:
        return list(q)
    if nq == 0:
        return list(p)
    out = []
    cdef tuple tp, tq
    while i < np_ and j < nq:
        tp = <tuple> p[i]
        tq = <tuple> q[j]
        kp = tp[0]
        kq = tq[0]
        if kp > kq:
            out.append(tp)
            i += 1
        elif kp < kq:
            out.append(tq)
            j += 1
        else:
            a1 = tp[2]; b1 = tp[3]; d1 = tp[4]
            a2 = tq[2]; b2 = tq[3]; d2 = tq[4]
            a = a1 * d2 + a2 * d1
            b = b1 * d2 + b2 * d1
            if a or b:
                a, b, d = snorm(a, b, d1 * d2)
                out.append((kp, tp[1], a, b, d))
            i += 1
            j += 1
    while i < np_:
        out.append(p[i]); i += 1
    while j < nq:
        out.append(q[j]); j += 1
    return out


def neg_terms(list p):
    cdef tuple t
    out = []
    for t in p:
        out.append((t[0], t[1], -t[2], -t[3], t[4]))
    return out


def scale_terms(list p, tuple c):
    ca = c[0]; cb = c[1]; cd = c[2]
    out = []
    cdef tuple t
    for t in p:
        a = t[2]; b = t[3]; d = t[4]
        na, nb, nd = snorm(a * ca - b * cb, a * cb + b * ca, d * cd)
        out.append((t[0], t[1], na, nb, nd))
    return out


cdef tuple _exp_add(tuple e1, tuple e2):
    cdef Py_ssize_t k, n = len(e1)
    out = []
    for k in range(n):
        out.append(e1[k] + e2[k])
    return tuple(out)


cdef tuple _exp_sub(tuple e1, tuple e2):
    cdef Py_ssize_t k, n = len(e1)
    out = []
    for k in range(n):
        out.append(e1[k] - e2[k])
    return tuple(out)


cdef bint _divides(tuple a, tuple b):
    cdef Py_ssize_t k, n = len(a)
    for k in range(n):
        if a[k] > b[k]:
            return False
    return True


def mono_mul_terms(list p, mkey, tuple mexp, tuple c, kc):
    ca = c[0]; cb = c[1]; cd = c[2]
    shift = mkey - kc
    out = []
    cdef tuple t
    for t in p:
        a = t[2]; b = t[3]; d = t[4]
        na, nb, nd = snorm(a * ca - b * cb, a * cb + b * ca, d * cd)
        out.append((t[0] + shift, _exp_add(<tuple> t[1], mexp), na, nb, nd))
    return out


def mul_terms(list p, list q, kc):
    if not p or not q:
        return []
    if len(p) > len(q):
        p, q = q, p
    acc = {}
    cdef tuple t1, t2
    for t1 in p:
        k1 = t1[0]; e1 = t1[1]; a1 = t1[2]; b1 = t1[3]; d1 = t1[4]
        for t2 in q:
            k = k1 + t2[0] - kc
            a2 = t2[2]; b2 = t2[3]; d2 = t2[4]
            cur = acc.get(k)
            if cur is None:
                acc[k] = [
                    _exp_add(<tuple> e1, <tuple> t2[1]),
                    a1 * a2 - b1 * b2,
                    a1 * b2 + b1 * a2,
                    d1 * d2,
                ]
            else:
                na = a1 * a2 - b1 * b2
                nb = a1 * b2 + b1 * a2
                nd = d1 * d2
                a = cur[1]; b = cur[2]; d = cur[3]
                cur[1] = a * nd + na * d
                cur[2] = b * nd + nb * d
                cur[3] = d * nd
    out = []
    for k in sorted(acc, reverse=True):
        cur = acc[k]
        a = cur[1]; b = cur[2]
        if a or b:
            a, b, d = snorm(a, b, cur[3])
            out.append((k, cur[0], a, b, d))
    return out


def reduce_terms(list p, list divisors, kc, bint want_quotients=False):
    cdef Py_ssize_t nd = len(divisors), idx, hit, gi, glen
    if not p:
        return ([[] for _ in range(nd)] if want_quotients else None), []
    lead = [(<list> d)[0] for d in divisors]
    work = {}
    heap = []
    cdef tuple t
    for t in p:
        work[t[1]] = [t[0], t[2], t[3], t[4]]
        heap.append((-t[0], t[1]))
    heapify(heap)
    rem = {}
    quots = [dict() for _ in range(nd)] if want_quotients else None
    cdef tuple e, le, te, lt, gt
    while heap:
        nk, e = heappop(heap)
        ent = work.get(e)
        if ent is None:
            continue
        del work[e]
        k = -nk
        ca = ent[1]; cb = ent[2]; cd = ent[3]
        hit = -1
        for idx in range(nd):
            lt = <tuple> lead[idx]
            if _divides(<tuple> lt[1], e):
                hit = idx
                break
        if hit < 0:
            r = rem.get(e)
            if r is None:
                rem[e] = [k, ca, cb, cd]
            else:
                a, b, d = sadd((r[1], r[2], r[3]), (ca, cb, cd))
                if a or b:
                    r[1] = a; r[2] = b; r[3] = d
                else:
                    del rem[e]
            continue
        lt = <tuple> lead[hit]
        lk = lt[0]; le = <tuple> lt[1]
        c = sdiv((ca, cb, cd), (lt[2], lt[3], lt[4]))
        texp = _exp_sub(e, le)
        if want_quotients:
            q = <dict> quots[hit]
            prev = q.get(texp)
            if prev is None:
                q[texp] = [k - lk + kc, c[0], c[1], c[2]]
            else:
                a, b, d = sadd((prev[1], prev[2], prev[3]), c)
                if a or b:
                    prev[1] = a; prev[2] = b; prev[3] = d
                else:
                    del q[texp]
        ca = c[0]; cb = c[1]; cd = c[2]
        g = <list> divisors[hit]
        glen = len(g)
        for gi in range(1, glen):
            gt = <tuple> g[gi]
            tk = gt[0] + k - lk
            te = _exp_add(<tuple> gt[1], texp)
            ga = gt[2]; gb = gt[3]; gd = gt[4]
            ma = ga * ca - gb * cb
            mb = ga * cb + gb * ca
            md = gd * cd
            cur = work.get(te)
            if cur is None:
                na, nb, nd2 = snorm(-ma, -mb, md)
                work[te] = [tk, na, nb, nd2]
                heappush(heap, (-tk, te))
            else:
                a = cur[1] * md - ma * cur[3]
                b = cur[2] * md - mb * cur[3]
                if a or b:
                    na, nb, nd2 = snorm(a, b, cur[3] * md)
                    cur[1] = na; cur[2] = nb; cur[3] = nd2
                else:
                    del work[te]
    rem_list = [(v[0], e, v[1], v[2], v[3]) for e, v in rem.items()]
    rem_list.sort(reverse=True)
    if want_quotients:
        qlists = []
        for q in quots:
            ql = [(v[0], e, v[1], v[2], v[3]) for e, v in (<dict> q).items()]
            ql.sort(reverse=True)
            qlists.append(ql)
        return qlists, rem_list
    return None, rem_list


def monic_terms(list p):
    if not p:
        return p
    t0 = <tuple> p[0]
    if t0[2] == 1 and t0[3] == 0 and t0[4] == 1:
        return p
    return scale_terms(p, sdiv(SONE, (t0[2], t0[3], t0[4])))
