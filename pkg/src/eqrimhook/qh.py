"""
Equivariant quantum cohomology QH_T^*(Gr(k,n)).

Products are computed by the equivariant rim hook rule: lift both classes to
Gr(k, 2n-1), multiply there, then apply the reduction ``phi`` which reduces
torus weights mod n and strips n-rim hooks from each label, trading every
hook of height h for a factor (-1)^(h-k) q.
"""

from dataclasses import dataclass

from .eqlr import ClassicalExpansion, classical_eqlr
from .facschur import T, XPoly, expand_at, expand_in_factorial_schur, mul_at, schur_at
from .partitions import (
    Partition,
    RimHookReduction,
    covers,
    equiv_weight,
    in_box,
    lambda_minus,
    rim_hook_reduce,
)
from .polyring import TPoly, format_combination


def _term_key(item):
    (p, d), _ = item
    return (d, p.size, tuple(p))


def _q_label(d):
    return "" if d == 0 else ("q" if d == 1 else "q^%d" % d)


class QClass:
    """
    Finite sum of c * q^d * sigma_nu with nu in P_kn.

    ``terms`` maps (nu, d) to a TPoly in t_1..t_n.  Instances are immutable.
    """

    __slots__ = ("k", "n", "terms")

    def __init__(self, k, n, terms=None):
        self.k = k
        self.n = n
        clean = {}
        for (nu, d), c in (terms or {}).items():
            if isinstance(c, int):
                c = TPoly.const(c)
            if c.is_zero():
                continue
            nu = Partition(nu)
            if not in_box(nu, k, n):
                raise ValueError("%s is not in P_%d,%d" % (nu, k, n))
            if d < 0:
                raise ValueError("negative q-degree %d" % d)
            clean[(nu, d)] = c
        self.terms = clean

    @classmethod
    def basis(cls, lam, k, n, d=0):
        return cls(k, n, {(Partition(lam), d): TPoly.const(1)})

    @classmethod
    def zero(cls, k, n):
        return cls(k, n)

    def coefficient(self, nu, d=0):
        return self.terms.get((Partition(nu), d), TPoly())

    def items(self):
        return sorted(self.terms.items(), key=_term_key)

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if (self.k, self.n) != (other.k, other.n):
            raise ValueError("classes of Gr(%d,%d) and Gr(%d,%d)" % (self.k, self.n, other.k, other.n))

    def __add__(self, other):
        if not isinstance(other, QClass):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, TPoly()) + c
        return QClass(self.k, self.n, out)

    def __neg__(self):
        return QClass(self.k, self.n, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c, q_power=0):
        """Multiply by c * q^q_power, where c is an int or TPoly."""
        if isinstance(c, int):
            c = TPoly.const(c)
        return QClass(self.k, self.n, {(nu, d + q_power): c * v for (nu, d), v in self.terms.items()})

    def map_coefficients(self, f):
        return QClass(self.k, self.n, {key: f(c) for key, c in self.terms.items()})

    def specialize_t_zero(self):
        return self.map_coefficients(lambda c: TPoly.const(c._terms.get((), 0)))

    def max_degree_defect(self, total):
        """Terms whose complex degree |nu| + d*n + deg(c) differs from ``total``."""
        bad = []
        for (nu, d), c in self.terms.items():
            degs = {len(m) for m in c._terms}
            if degs != {total - nu.size - d * self.n}:
                bad.append((nu, d, c))
        return bad

    def __eq__(self, other):
        if not isinstance(other, QClass):
            return NotImplemented
        return (self.k, self.n, self.terms) == (other.k, other.n, other.terms)

    def __hash__(self):
        return hash((self.k, self.n, frozenset(self.terms.items())))

    # -- rendering ------------------------------------------------------------

    def __str__(self):
        return format_combination(
            (c, "*".join(s for s in (_q_label(d), "s[%s]" % (nu,)) if s)) for (nu, d), c in self.items()
        )

    def __repr__(self):
        return "QClass(k=%d, n=%d, %s)" % (self.k, self.n, self)

    def latex(self):
        if not self.terms:
            return "0"
        chunks = []
        for (nu, d), c in self.items():
            q = "" if d == 0 else ("q" if d == 1 else "q^{%d}" % d)
            basis = r"%s\sigma_{%s}" % (q, nu.latex())
            if c == 1:
                body, neg = basis, False
            elif c == -1:
                body, neg = basis, True
            else:
                body, neg = r"\left(%s\right)%s" % (c.latex(), basis), False
            if not chunks:
                chunks.append(("-" if neg else "") + body)
            else:
                chunks.append(" %s %s" % ("-" if neg else "+", body))
        return "".join(chunks)

    def to_json(self):
        return {
            "k": self.k,
            "n": self.n,
            "terms": [{"p": list(nu), "q": d, "c": c.to_json()} for (nu, d), c in self.items()],
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            obj["k"],
            obj["n"],
            {(Partition(t["p"]), int(t["q"])): TPoly.from_json(t["c"]) for t in obj["terms"]},
        )


@dataclass(frozen=True)
class PhiContribution:
    """What one label gamma of a Gr(k, 2n-1) expansion contributes under phi."""

    gamma: Partition
    coefficient: TPoly
    reduction: RimHookReduction  # None when the n-core leaves the box
    value: TPoly

    @property
    def target(self):
        if self.reduction is None:
            return None
        return (self.reduction.core, self.reduction.d)


def phi_contributions(expansion, n):
    """Per-label images under phi, before like terms are merged."""
    if expansion.N != 2 * n - 1:
        raise ValueError("phi needs an expansion in Gr(k,%d), got N=%d" % (2 * n - 1, expansion.N))
    out = []
    for gamma, c in expansion.items():
        red = rim_hook_reduce(gamma, n, expansion.k)
        value = TPoly() if red is None else c.reduce_mod(n) * red.sign
        out.append(PhiContribution(gamma, c, red, value))
    return out


def phi_reduce(expansion, n):
    terms = {}
    for contrib in phi_contributions(expansion, n):
        if contrib.reduction is None:
            continue
        key = contrib.target
        terms[key] = terms.get(key, TPoly()) + contrib.value
    return QClass(expansion.k, n, terms)


def _check_box(lam, k, n):
    lam = Partition(lam)
    if not in_box(lam, k, n):
        raise ValueError("%s is not in P_%d,%d" % (lam, k, n))
    return lam


def quantum_mult(lam, mu, k, n, cache=None):
    """sigma_lam * sigma_mu in QH_T^*(Gr(k,n)) by the rim hook rule."""
    lam, mu = _check_box(lam, k, n), _check_box(mu, k, n)
    return phi_reduce(classical_eqlr(lam, mu, k, 2 * n - 1, cache=cache, strict=True), n)


def quantum_product(a, b, cache=None):
    """Bilinear extension of quantum_mult to arbitrary classes."""
    a._check(b)
    k, n = a.k, a.n
    for cls in (a, b):
        for c in cls.terms.values():
            if any(i < 1 or i > n for i in c.variables()):
                raise ValueError("coefficient %s mentions weights outside t1..t%d" % (c, n))
    total = QClass(k, n)
    for (lam, d1), c1 in a.items():
        for (mu, d2), c2 in b.items():
            total = total + quantum_mult(lam, mu, k, n, cache=cache).scale(c1 * c2, d1 + d2)
    return total


def quantum_pieri(lam, k, n):
    """sigma_1 * sigma_lam from the equivariant quantum Pieri rule."""
    lam = _check_box(lam, k, n)
    terms = {(mu, 0): TPoly.const(1) for mu in covers(lam, k, n)}
    terms[(lam, 0)] = equiv_weight(lam, k, n)
    low = lambda_minus(lam, k, n)
    if low is not None:
        terms[(low, 1)] = TPoly.const(1)
    return QClass(k, n, terms)


def reduce_label(gamma, k, n):
    """phi on a single basis label: sign * q^d * sigma_core, as a QClass."""
    red = rim_hook_reduce(gamma, n, k)
    if red is None:
        return QClass(k, n)
    return QClass(k, n, {(red.core, red.d): TPoly.const(red.sign)})


def normal_form(p, k, n):
    """
    Image in QH_T^*(Gr(k,n)) of a symmetric polynomial p(x|t).

    Torus weights are reduced mod n first, then p is expanded in factorial
    Schur polynomials s_gamma(x|t); each coefficient is reduced mod n again
    and each label is rim-hook reduced.
    """
    if not isinstance(p, XPoly) or p.k != k:
        raise ValueError("expected a polynomial in x_1..x_%d" % k)
    reduced = p.reduce_mod(n)
    terms = {}
    for gamma, c in expand_in_factorial_schur(reduced, k).items():
        red = rim_hook_reduce(gamma, n, k)
        if red is None:
            continue
        key = (red.core, red.d)
        terms[key] = terms.get(key, TPoly()) + c.reduce_mod(n) * red.sign
    return QClass(k, n, terms)


def specialize(cls, values):
    """Evaluate every coefficient at t_i = values[i-1]: {(nu, d): int}."""
    assignment = {i + 1: v for i, v in enumerate(values)}
    out = {}
    for key, c in cls.terms.items():
        v = c.substitute(assignment).constant_value() if not c.is_constant() else c.constant_value()
        if v:
            out[key] = v
    return out


def normal_form_at(p, k, n, values):
    """
    Image of an integer polynomial p in x, already specialized at
    t_i = values[(i-1) mod n], as {(nu, d): int}.

    Agrees with ``specialize(normal_form(P), values)`` whenever p is P with
    its weights specialized periodically: reducing weights mod n commutes
    with that substitution.
    """
    if len(values) != n:
        raise ValueError("need one value per weight t_1..t_%d" % n)
    out = {}
    for gamma, c in expand_at(p, k, values).items():
        red = rim_hook_reduce(gamma, n, k)
        if red is None:
            continue
        key = (red.core, red.d)
        v = out.get(key, 0) + c * red.sign
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def schur_normal_form_at(lam, k, n, values, w=T):
    """``normal_form_at`` of s_lam(x|w)."""
    return normal_form_at(schur_at(lam, k, values, w), k, n, values)


def product_normal_form_at(lam, mu, k, n, values):
    """``normal_form_at`` of s_lam(x|t) * s_mu(x|t)."""
    return normal_form_at(mul_at(schur_at(lam, k, values), schur_at(mu, k, values)), k, n, values)
