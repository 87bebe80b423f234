"""
Factorial Schur polynomials s_lam(x|t) in k variables x_1..x_k.

Two independent constructions are provided: the tableau sum
``factorial_schur_ssyt`` (built row by row through the branching rule) and
the factorial Jacobi-Trudi determinant ``jacobi_trudi``.  Both must agree
exactly.

``expand_in_factorial_schur`` writes a symmetric polynomial in the basis
{s_lam(x|t)} by repeatedly subtracting the leading term.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .partitions import Partition
from .polyring import TPoly, mul_terms


@dataclass(frozen=True)
class WeightSeq:
    """The weight sequence i -> t_{shift + i}; ``WeightSeq(-s)`` is tau^{-s} t."""

    shift: int = 0

    def index(self, i):
        return self.shift + i

    def __add__(self, other):
        return WeightSeq(self.shift + other.shift)

    def shifted(self, s):
        return WeightSeq(self.shift + s)


T = WeightSeq(0)


def _add_into(target, terms, scale=1):
    get = target.get
    for key, c in terms.items():
        v = get(key, 0) + c * scale
        if v:
            target[key] = v
        else:
            del target[key]


def _is_dominant(xe):
    return all(a >= b for a, b in zip(xe, xe[1:]))


class XPoly:
    """
    Polynomial in x_1..x_k with TPoly coefficients.

    Stored as {x-exponent tuple: {t-monomial key: int}} with no empty
    entries.  Treat instances as immutable.
    """

    __slots__ = ("k", "_terms")

    def __init__(self, k, terms=None):
        self.k = k
        self._terms = {}
        if terms:
            for xe, coeff in terms.items():
                if isinstance(coeff, TPoly):
                    coeff = coeff._terms
                elif isinstance(coeff, int):
                    coeff = {(): coeff} if coeff else {}
                if len(xe) != k:
                    raise ValueError("exponent %r does not have length %d" % (xe, k))
                coeff = {t: c for t, c in coeff.items() if c}
                if coeff:
                    self._terms[tuple(xe)] = coeff

    @classmethod
    def _wrap(cls, k, terms):
        obj = cls.__new__(cls)
        obj.k = k
        obj._terms = terms
        return obj

    @classmethod
    def const(cls, k, c):
        if isinstance(c, int):
            c = TPoly.const(c)
        return cls(k, {(0,) * k: c})

    @classmethod
    def x(cls, k, i):
        xe = [0] * k
        xe[i - 1] = 1
        return cls._wrap(k, {tuple(xe): {(): 1}})

    @classmethod
    def linear_factor(cls, k, i, t_index):
        """x_i - t_{t_index}"""
        xe = [0] * k
        xe[i - 1] = 1
        return cls._wrap(k, {tuple(xe): {(): 1}, (0,) * k: {(t_index,): -1}})

    # -- inspection ---------------------------------------------------------

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def coeff(self, xe):
        return TPoly._wrap(dict(self._terms.get(tuple(xe), {})))

    def items(self):
        for xe in sorted(self._terms, key=lambda e: (sum(e), e), reverse=True):
            yield xe, TPoly._wrap(dict(self._terms[xe]))

    def x_degree(self):
        return max((sum(xe) for xe in self._terms), default=-1)

    def n_terms(self):
        return sum(len(c) for c in self._terms.values())

    def top_homogeneous(self):
        d = self.x_degree()
        return XPoly._wrap(self.k, {xe: dict(c) for xe, c in self._terms.items() if sum(xe) == d})

    def is_symmetric(self):
        for xe, c in self._terms.items():
            for i in range(self.k - 1):
                sw = list(xe)
                sw[i], sw[i + 1] = sw[i + 1], sw[i]
                if self._terms.get(tuple(sw)) != c:
                    return False
        return True

    def dominant_part(self):
        return XPoly._wrap(self.k, {xe: dict(c) for xe, c in self._terms.items() if _is_dominant(xe)})

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, XPoly):
            return False
        if other.k != self.k:
            raise ValueError("mixing polynomials in %d and %d x-variables" % (self.k, other.k))
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        out = {xe: dict(c) for xe, c in self._terms.items()}
        for xe, c in other._terms.items():
            tgt = out.setdefault(xe, {})
            _add_into(tgt, c)
            if not tgt:
                del out[xe]
        return XPoly._wrap(self.k, out)

    def __neg__(self):
        return XPoly._wrap(self.k, {xe: {t: -v for t, v in c.items()} for xe, c in self._terms.items()})

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, TPoly)):
            return self.scale(other)
        if not self._check(other):
            return NotImplemented
        return XPoly._wrap(self.k, _mul(self._terms, other._terms, False))

    __rmul__ = __mul__

    def mul_dominant(self, other):
        """Product restricted to weakly decreasing x-exponents."""
        self._check(other)
        return XPoly._wrap(self.k, _mul(self._terms, other._terms, True))

    def scale(self, c):
        if isinstance(c, int):
            c = TPoly.const(c)
        if not c:
            return XPoly(self.k)
        out = {}
        for xe, tc in self._terms.items():
            prod = mul_terms(tc, c._terms)
            if prod:
                out[xe] = prod
        return XPoly._wrap(self.k, out)

    def map_coefficients(self, f):
        """Apply a TPoly -> TPoly map (a ring map on Z[t]) to every coefficient."""
        out = {}
        for xe, tc in self._terms.items():
            new = f(TPoly._wrap(dict(tc)))._terms
            if new:
                out[xe] = dict(new)
        return XPoly._wrap(self.k, out)

    def reduce_mod(self, n):
        return self.map_coefficients(lambda c: c.reduce_mod(n))

    def specialize_t_zero(self):
        out = {}
        for xe, tc in self._terms.items():
            if tc.get(()):
                out[xe] = {(): tc[()]}
        return XPoly._wrap(self.k, out)

    def permute(self, perm):
        """Substitute x_i -> x_{perm[i]} (perm is a 0-based tuple)."""
        out = {}
        for xe, tc in self._terms.items():
            new = [0] * self.k
            for i, e in enumerate(xe):
                new[perm[i]] += e
            out[tuple(new)] = dict(tc)
        return XPoly._wrap(self.k, out)

    def evaluate(self, point):
        """Substitute x_i -> point[i-1] (TPolys); returns a TPoly."""
        total = {}
        powers = {}
        for xe, tc in self._terms.items():
            term = dict(tc)
            for i, e in enumerate(xe):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = (point[i] ** e)._terms
                    term = mul_terms(term, powers[key])
            _add_into(total, term)
        return TPoly._wrap(total)

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.k == other.k and self._terms == other._terms

    def __hash__(self):
        return hash((self.k, frozenset((xe, frozenset(c.items())) for xe, c in self._terms.items())))

    # -- rendering --------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for xe, coeff in self.items():
            xpart = "*".join(
                ("x%d" % (i + 1)) if e == 1 else "x%d^%d" % (i + 1, e)
                for i, e in enumerate(xe) if e
            )
            for exps, c in coeff.monomials():
                tpart = str(TPoly.from_monomials([(exps, 1)])) if exps else ""
                body = "*".join(p for p in (xpart, tpart) if p)
                a = abs(c)
                if not body:
                    body = str(a)
                elif a != 1:
                    body = "%d*%s" % (a, body)
                if not chunks:
                    chunks.append(("-" if c < 0 else "") + body)
                else:
                    chunks.append(" %s %s" % ("-" if c < 0 else "+", body))
        return "".join(chunks)

    def __repr__(self):
        return "XPoly(k=%d, %s)" % (self.k, self)

    def latex(self):
        if not self._terms:
            return "0"
        chunks = []
        for xe, coeff in self.items():
            xpart = " ".join(
                ("x_{%d}" % (i + 1)) if e == 1 else "x_{%d}^{%d}" % (i + 1, e)
                for i, e in enumerate(xe) if e
            )
            if not xpart:
                chunks.append(coeff.latex())
            elif coeff == 1:
                chunks.append(xpart)
            elif coeff == -1:
                chunks.append("-" + xpart)
            else:
                chunks.append(r"\left(%s\right) %s" % (coeff.latex(), xpart))
        return " + ".join(chunks).replace("+ -", "- ")

    def to_json(self):
        return {
            "k": self.k,
            "terms": [{"x": list(xe), "c": c.to_json()} for xe, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj):
        return cls(obj["k"], {tuple(t["x"]): TPoly.from_json(t["c"]) for t in obj["terms"]})


def _mul(a, b, dominant_only):
    out = {}
    for xa, ca in a.items():
        for xb, cb in b.items():
            xe = tuple(p + q for p, q in zip(xa, xb))
            if dominant_only and not _is_dominant(xe):
                continue
            prod = mul_terms(ca, cb)
            tgt = out.get(xe)
            if tgt is None:
                if prod:
                    out[xe] = prod
            else:
                _add_into(tgt, prod)
                if not tgt:
                    del out[xe]
    return out


# -- factorial Schur polynomials ----------------------------------------------


def _horizontal_strips_below(lam):
    """All mu with lam/mu a horizontal strip (lam_{i+1} <= mu_i <= lam_i)."""
    ranges = []
    for i, li in enumerate(lam):
        lo = lam[i + 1] if i + 1 < len(lam) else 0
        ranges.append(range(lo, li + 1))
    for parts in itertools.product(*ranges):
        yield Partition(parts)


@lru_cache(maxsize=None)
def _ssyt_terms(lam, m, k, shift):
    """
    Raw terms of s_lam(x_1..x_m | tau^shift t) embedded in k variables,
    via s_lam = sum over horizontal strips lam/mu filled with m.
    """
    if len(lam) > m:
        return {}
    if m == 0:
        return {(0,) * k: {(): 1}}
    total = {}
    for mu in _horizontal_strips_below(lam):
        lower = _ssyt_terms(mu, m - 1, k, shift)
        if not lower:
            continue
        strip = XPoly.const(k, 1)
        for row in range(len(lam)):
            start = mu[row] if row < len(mu) else 0
            for col in range(start + 1, lam[row] + 1):
                # box (row+1, col) holds entry m; content col - (row+1)
                strip = strip * XPoly.linear_factor(k, m, m + col - (row + 1) + shift)
        for xe, tc in _mul(lower, strip._terms, False).items():
            tgt = total.setdefault(xe, {})
            _add_into(tgt, tc)
            if not tgt:
                del total[xe]
    return total


def _copy_terms(terms):
    return {xe: dict(c) for xe, c in terms.items()}


def factorial_schur_ssyt(lam, k, w=T):
    """s_lam(x|w) as a sum over semistandard tableaux with entries 1..k."""
    lam = Partition(lam)
    if len(lam) > k:
        raise ValueError("%s has more than %d rows" % (lam, k))
    return XPoly._wrap(k, _copy_terms(_ssyt_terms(lam, k, k, w.shift)))


def factorial_h(m, k, w=T):
    """Factorial complete homogeneous polynomial h_m(x|w); 0 for m < 0."""
    if m < 0:
        return XPoly(k)
    if m == 0:
        return XPoly.const(k, 1)
    return factorial_schur_ssyt(Partition([m]), k, w)


def factorial_e(r, k, w=T):
    """Factorial elementary polynomial e_r(x|w); 0 for r > k."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r > k:
        return XPoly(k)
    return factorial_schur_ssyt(Partition([1] * r), k, w)


def jacobi_trudi(lam, k, w=T):
    """
    det(h_{lam_i + j - i}(x | tau^{1-j} w)) for 1 <= i, j <= k, expanded by
    cofactors along the first row with memoized minors.
    """
    lam = Partition(lam)
    parts = lam.padded(k)
    entries = {}

    def entry(i, j):
        key = (i, j)
        if key not in entries:
            entries[key] = factorial_h(parts[i] + j - i, k, w.shifted(-j))
        return entries[key]

    minors = {}

    def minor(row, cols):
        if row == k:
            return XPoly.const(k, 1)
        if cols in minors:
            return minors[cols]
        total = XPoly(k)
        for pos, j in enumerate(cols):
            e = entry(row, j)
            if e.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            if sub.is_zero():
                continue
            term = e * sub
            total = total + term if pos % 2 == 0 else total - term
        minors[cols] = total
        return total

    return minor(0, tuple(range(k)))


# Heavy expansions run on packed monomials: a t-monomial becomes the integer
# sum of e_i << (_W * (i - base)), so multiplying monomials is integer addition.
_W = 16
_MAX_EXP = (1 << _W) - 1


def _pack(key, base):
    v = 0
    for i in key:
        v += 1 << (_W * (i - base))
    return v


def _unpack(v, base):
    key = []
    pos = 0
    mask = _MAX_EXP
    while v:
        e = v & mask
        if e:
            key.extend([base + pos] * e)
        v >>= _W
        pos += 1
    return tuple(key)


def _pack_terms(terms, base):
    return {xe: {_pack(t, base): c for t, c in tc.items()} for xe, tc in terms.items()}


def _unpack_coeff(tc, base):
    return TPoly._wrap({_unpack(v, base): c for v, c in tc.items()})


def _packed_mul_add(target, a, b, scale):
    """target += scale * a * b on packed coefficient dicts."""
    get = target.get
    for kb, cb in b.items():
        cb *= scale
        for ka, ca in a.items():
            key = ka + kb
            v = get(key, 0) + ca * cb
            if v:
                target[key] = v
            else:
                del target[key]


@lru_cache(maxsize=None)
def _dominant_schur_packed(lam, k, shift, base):
    terms = _ssyt_terms(lam, k, k, shift)
    return tuple(
        (xe, tuple((_pack(t, base), c) for t, c in tc.items()))
        for xe, tc in terms.items() if _is_dominant(xe)
    )


def _min_index(terms):
    return min((i for tc in terms.values() for t in tc for i in t), default=None)


def _check_degree(terms, extra):
    deg = max((len(t) for tc in terms.values() for t in tc), default=0)
    if deg + extra > _MAX_EXP:
        raise OverflowError("t-degree %d too large for packed monomials" % (deg + extra))


def expand_in_factorial_schur(p, k, w=T):
    """
    Coefficients {lam: TPoly} with p = sum_lam c_lam s_lam(x|w).

    Only the weakly decreasing x-exponents of a symmetric polynomial are
    needed.  The leading one in (degree, lex) order is a partition lam whose
    coefficient is c_lam, since s_lam(x|w) has leading monomial x^lam with
    coefficient 1.
    """
    if p.k != k:
        raise ValueError("polynomial has %d x-variables, expected %d" % (p.k, k))
    if not p.is_symmetric():
        raise ValueError("input is not symmetric in x_1..x_%d" % k)
    rem = {xe: c for xe, c in p._terms.items() if _is_dominant(xe)}
    return _expand_dominant(rem, k, w.shift)


def _expand_dominant(rem, k, shift):
    lo = _min_index(rem)
    base = shift + 1 if lo is None else min(lo, shift + 1)
    _check_degree(rem, max((sum(xe) for xe in rem), default=0))
    rem = _pack_terms(rem, base)
    result = {}
    while rem:
        lead = max(rem, key=lambda e: (sum(e), e))
        c = rem[lead]
        lam = Partition(lead)
        result[lam] = _unpack_coeff(c, base)
        c = dict(c)
        for xe, tc in _dominant_schur_packed(lam, k, shift, base):
            tgt = rem.get(xe)
            if tgt is None:
                tgt = rem[xe] = {}
            _packed_mul_add(tgt, c, dict(tc), -1)
            if not tgt:
                del rem[xe]
        if lead in rem:
            raise ArithmeticError("leading term of %s did not cancel" % (lam,))
    return result


def expand_product(lam, mu, k, w=T):
    """Factorial Schur expansion of s_lam(x|w) * s_mu(x|w)."""
    base = w.shift + 1
    a = _pack_terms(_ssyt_terms(Partition(lam), k, k, w.shift), base)
    b = _pack_terms(_ssyt_terms(Partition(mu), k, k, w.shift), base)
    prod = {}
    for xa, ca in a.items():
        for xb, cb in b.items():
            xe = tuple(p + q for p, q in zip(xa, xb))
            if not _is_dominant(xe):
                continue
            tgt = prod.get(xe)
            if tgt is None:
                tgt = prod[xe] = {}
            _packed_mul_add(tgt, ca, cb, 1)
            if not tgt:
                del prod[xe]
    unpacked = {xe: {_unpack(v, base): c for v, c in tc.items()} for xe, tc in prod.items()}
    return _expand_dominant(unpacked, k, w.shift)


def recombine(coeffs, k, w=T):
    """sum_lam c_lam s_lam(x|w)."""
    total = XPoly(k)
    for lam, c in coeffs.items():
        total = total + factorial_schur_ssyt(lam, k, w).scale(c)
    return total


def localization_point(mu, k):
    """x_i -> t_{mu_{k+1-i} + i}, the fixed point indexed by mu."""
    parts = Partition(mu).padded(k)
    return [TPoly.var(parts[k - i] + i) for i in range(1, k + 1)]


def ordinary_schur(lam, k):
    """s_lam(x_1..x_k) with integer coefficients (all t set to 0)."""
    return factorial_schur_ssyt(lam, k).specialize_t_zero()


def expand_in_schur(p, k):
    """
    Integer coefficients {lam: c} with p = sum c * s_lam(x) for a symmetric
    polynomial p free of torus weights.
    """
    if p.k != k:
        raise ValueError("polynomial has %d x-variables, expected %d" % (p.k, k))
    rem = {}
    for xe, tc in p._terms.items():
        if any(t for t in tc):
            raise ValueError("polynomial still depends on torus weights")
        if _is_dominant(xe):
            rem[xe] = tc[()]
    result = {}
    while rem:
        lead = max(rem, key=lambda e: (sum(e), e))
        c = rem[lead]
        lam = Partition(lead)
        result[lam] = c
        for xe, tc in ordinary_schur(lam, k)._terms.items():
            if not _is_dominant(xe):
                continue
            v = rem.get(xe, 0) - c * tc[()]
            if v:
                rem[xe] = v
            else:
                rem.pop(xe, None)
        if lead in rem:
            raise ArithmeticError("leading term of %s did not cancel" % (lam,))
    return result


# -- integer specializations ---------------------------------------------------
#
# With the torus weights specialized to a periodic integer sequence
# t_i -> values[(i - 1) mod len(values)], factorial Schur polynomials become
# integer polynomials in x and the whole expansion runs on machine-sized
# dictionaries.  Used where the symbolic expansion is out of reach.


def mul_at(a, b):
    """Product of two integer polynomials in x given as {exponent: int}."""
    out = {}
    for xa, ca in a.items():
        for xb, cb in b.items():
            xe = tuple(p + q for p, q in zip(xa, xb))
            v = out.get(xe, 0) + ca * cb
            if v:
                out[xe] = v
            else:
                out.pop(xe, None)
    return out


@lru_cache(maxsize=None)
def _ssyt_at(lam, m, k, shift, values):
    if len(lam) > m:
        return {}
    if m == 0:
        return {(0,) * k: 1}
    period = len(values)
    unit = [0] * k
    unit[m - 1] = 1
    unit = tuple(unit)
    zero = (0,) * k
    total = {}
    for mu in _horizontal_strips_below(lam):
        lower = _ssyt_at(mu, m - 1, k, shift, values)
        if not lower:
            continue
        term = dict(lower)
        for row in range(len(lam)):
            start = mu[row] if row < len(mu) else 0
            for col in range(start + 1, lam[row] + 1):
                a = values[(m + col - (row + 1) + shift - 1) % period]
                term = mul_at(term, {unit: 1, zero: -a} if a else {unit: 1})
        for xe, c in term.items():
            v = total.get(xe, 0) + c
            if v:
                total[xe] = v
            else:
                total.pop(xe, None)
    return total


def schur_at(lam, k, values, w=T):
    """s_lam(x | w) with t_i -> values[(i-1) mod len(values)], as {x-exponent: int}."""
    lam = Partition(lam)
    if len(lam) > k:
        return {}
    return dict(_ssyt_at(lam, k, k, w.shift, tuple(values)))


def expand_at(p, k, values):
    """Integer expansion {lam: c} of p = sum c * s_lam(x|t) at the given weights."""
    rem = {xe: c for xe, c in p.items() if _is_dominant(xe)}
    result = {}
    while rem:
        lead = max(rem, key=lambda e: (sum(e), e))
        c = rem[lead]
        lam = Partition(lead)
        result[lam] = c
        for xe, v in _ssyt_at(lam, k, k, 0, tuple(values)).items():
            if not _is_dominant(xe):
                continue
            nv = rem.get(xe, 0) - c * v
            if nv:
                rem[xe] = nv
            else:
                rem.pop(xe, None)
        if lead in rem:
            raise ArithmeticError("leading term of %s did not cancel" % (lam,))
    return result
