"""
Exact integer polynomials in the torus weights t_i.

A monomial is stored as the sorted tuple of its variable indices, repeated
according to multiplicity, so ``t2*t4^2`` is ``(2, 4, 4)``.  Multiplying
monomials is then concatenation followed by a sort, and the degree is the
tuple length.  Indices may be any integer; shifted weight sequences produce
indices <= 0.

Coefficients are Python integers, so arithmetic never wraps around.
"""

import re
from functools import total_ordering


def _pairs(key):
    """(2, 4, 4) -> ((2, 1), (4, 2))"""
    out = []
    for i in key:
        if out and out[-1][0] == i:
            out[-1][1] += 1
        else:
            out.append([i, 1])
    return tuple((i, e) for i, e in out)


def _key_from_exps(exps):
    key = []
    for i, e in sorted(exps.items()):
        if e < 0:
            raise ValueError("negative exponent for t%d" % i)
        key.extend([int(i)] * int(e))
    return tuple(key)


def _var_name(i):
    return "t%d" % i if i > 0 else "t(%d)" % i


def _mono_str(key):
    parts = []
    for i, e in _pairs(key):
        parts.append(_var_name(i) if e == 1 else "%s^%d" % (_var_name(i), e))
    return "*".join(parts)


@total_ordering
class TPoly:
    """
    Immutable polynomial in integer-indexed variables t_i with integer
    coefficients.

    Equality is structural: two TPolys are equal iff they have the same
    canonical term list.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        # terms: mapping key-tuple -> int; zero coefficients dropped
        if terms is None:
            self._terms = {}
        else:
            self._terms = {k: c for k, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _wrap(cls, terms):
        # trusted constructor: terms already canonical (no zero coefficients)
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c):
        return cls._wrap({(): int(c)} if c else {})

    @classmethod
    def var(cls, i):
        return cls._wrap({(int(i),): 1})

    @classmethod
    def from_monomials(cls, monomials):
        """Build from an iterable of (exponent mapping, coefficient)."""
        terms = {}
        for exps, c in monomials:
            k = _key_from_exps(exps)
            terms[k] = terms.get(k, 0) + int(c)
        return cls(terms)

    @classmethod
    def linear(cls, coeffs):
        """Linear form from a mapping index -> integer coefficient."""
        return cls({(int(i),): int(c) for i, c in coeffs.items()})

    # -- inspection --------------------------------------------------------

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self):
        return all(not k for k in self._terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant polynomial: %s" % self)
        return self._terms.get((), 0)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((len(k) for k in self._terms), default=-1)

    def is_homogeneous(self):
        return len({len(k) for k in self._terms}) <= 1

    def variables(self):
        return sorted({i for k in self._terms for i in k})

    def coefficients(self):
        return list(self._terms.values())

    def monomials(self):
        """Canonical term list as (exponent mapping, coefficient) pairs."""
        return [(dict(_pairs(k)), self._terms[k]) for k in self._sorted_keys()]

    def _sorted_keys(self):
        # graded (high degree first), then descending lex on (index, exponent)
        # pairs sorted by index
        return sorted(self._terms, key=lambda k: (len(k), _pairs(k)), reverse=True)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TPoly):
            if isinstance(other, int):
                other = TPoly.const(other)
            else:
                return NotImplemented
        if len(self._terms) < len(other._terms):
            self, other = other, self
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return TPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return TPoly._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = TPoly.const(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return TPoly()
            return TPoly._wrap({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, TPoly):
            return NotImplemented
        return TPoly._wrap(mul_terms(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power")
        result = TPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = TPoly.const(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self._terms == other._terms

    def __lt__(self, other):
        # arbitrary but deterministic total order, used for sorting only
        return self._sort_token() < other._sort_token()

    def _sort_token(self):
        return [(len(k), _pairs(k), self._terms[k]) for k in self._sorted_keys()]

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- maps ---------------------------------------------------------------

    def reduce_mod(self, n):
        return tpoly_reduce_mod(self, n)

    def substitute(self, assignment):
        return tpoly_substitute(self, assignment)

    def shift(self, s):
        """t_i -> t_{i+s}"""
        return TPoly._wrap({tuple(i + s for i in k): c for k, c in self._terms.items()})

    def map_indices(self, f):
        out = {}
        for k, c in self._terms.items():
            nk = tuple(sorted(f(i) for i in k))
            v = out.get(nk, 0) + c
            if v:
                out[nk] = v
            else:
                out.pop(nk, None)
        return TPoly._wrap(out)

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for n, key in enumerate(self._sorted_keys()):
            c = self._terms[key]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if key:
                body = _mono_str(key) if a == 1 else "%d*%s" % (a, _mono_str(key))
            else:
                body = str(a)
            if n == 0:
                chunks.append(("-" if c < 0 else "") + body)
            else:
                chunks.append(" %s %s" % (sign, body))
        return "".join(chunks)

    def __repr__(self):
        return "TPoly(%r)" % str(self)

    def latex(self):
        if not self._terms:
            return "0"
        s = str(self)
        s = re.sub(r"t\((-?\d+)\)", r"t_{\1}", s)
        s = re.sub(r"t(\d+)", r"t_{\1}", s)
        s = re.sub(r"\^(\d+)", r"^{\1}", s)
        return s.replace("*", " ")

    def to_json(self):
        return {
            "terms": [
                {"c": c, "e": {str(i): e for i, e in exps.items()}}
                for exps, c in self.monomials()
            ]
        }

    @classmethod
    def from_json(cls, obj):
        return cls.from_monomials(
            ({int(i): int(e) for i, e in t["e"].items()}, int(t["c"]))
            for t in obj["terms"]
        )

    @classmethod
    def parse(cls, text):
        """Parse the text form produced by ``str``."""
        return parse_tpoly(text)


def mul_terms(a, b):
    """Multiply two raw term dictionaries."""
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    for kb, cb in b.items():
        if not kb:
            for ka, ca in a.items():
                out[ka] = get(ka, 0) + ca * cb
            continue
        for ka, ca in a.items():
            k = tuple(sorted(ka + kb))
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


ZERO = TPoly()
ONE = TPoly.const(1)


def tpoly_add(a, b):
    return a + b


def tpoly_mul(a, b):
    return a * b


def reduce_index(i, n):
    """Representative of i mod n in {1, ..., n}."""
    return (i - 1) % n + 1


def tpoly_reduce_mod(p, n):
    """Replace every t_i by t_j with j = i mod n and 1 <= j <= n."""
    if n < 1:
        raise ValueError("modulus must be positive, got %r" % n)
    return p.map_indices(lambda i: (i - 1) % n + 1)


def tpoly_substitute(p, assignment):
    """
    Substitute a TPoly for each variable.  ``assignment`` maps index -> TPoly
    (or int) and must cover every variable of ``p``.
    """
    missing = [i for i in p.variables() if i not in assignment]
    if missing:
        raise KeyError("no substitution given for t%s" % missing)
    powers = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            base = assignment[i]
            if isinstance(base, int):
                base = TPoly.const(base)
            powers[key] = base ** e
        return powers[key]

    total = {}
    for key, c in p._terms.items():
        term = TPoly.const(c)
        for i, e in _pairs(key):
            term = term * power(i, e)
        for k, v in term._terms.items():
            total[k] = total.get(k, 0) + v
    return TPoly(total)


_TOKEN = re.compile(r"\s*([+-])?\s*([^+-]+?)\s*(?=[+-]|$)")
_FACTOR = re.compile(r"^(?:t(\d+)|t\((-?\d+)\))(?:\^(\d+))?$")


def parse_tpoly(text):
    text = text.strip()
    if text in ("", "0"):
        return TPoly()
    # protect minus signs inside t(-3)
    protected = re.sub(r"t\(-(\d+)\)", r"t(~\1)", text)
    terms = {}
    pos = 0
    for m in _TOKEN.finditer(protected):
        if not m.group(0).strip():
            continue
        if m.start() != pos and protected[pos:m.start()].strip():
            raise ValueError("cannot parse %r" % text)
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2).replace("~", "-")
        coeff = 1
        key = []
        for factor in body.split("*"):
            factor = factor.strip()
            if re.fullmatch(r"\d+", factor):
                coeff *= int(factor)
                continue
            fm = _FACTOR.match(factor)
            if not fm:
                raise ValueError("bad factor %r in %r" % (factor, text))
            idx = int(fm.group(1) if fm.group(1) is not None else fm.group(2))
            key.extend([idx] * int(fm.group(3) or 1))
        k = tuple(sorted(key))
        terms[k] = terms.get(k, 0) + sign * coeff
    return TPoly(terms)


def format_combination(terms):
    """Render sum c * basis for (TPoly, basis string) pairs, dropping unit coefficients."""
    chunks = []
    for c, basis in terms:
        neg = False
        if c.is_constant():
            v = c.constant_value()
            neg = v < 0
            body = basis if abs(v) == 1 else "%d*%s" % (abs(v), basis)
        elif len(c) == 1 and c.coefficients()[0] < 0:
            neg = True
            body = "%s*%s" % (-c, basis)
        else:
            body = "(%s)*%s" % (c, basis) if len(c) > 1 else "%s*%s" % (c, basis)
        if not chunks:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(" %s %s" % ("-" if neg else "+", body))
    return "".join(chunks) or "0"
