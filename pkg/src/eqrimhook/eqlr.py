"""
Equivariant Littlewood-Richardson coefficients of H_T^*(Gr(k,N)).

The product sigma_lam * sigma_mu is computed as s_lam(x|t) * s_mu(x|t)
expanded in the factorial Schur basis, keeping the labels that fit in the
k x (N-k) box.
"""

import hashlib
import json
import logging
import os
import threading

from .facschur import expand_product
from .partitions import Partition, covers, equiv_weight, in_box
from .polyring import TPoly, format_combination

log = logging.getLogger(__name__)


def _label_key(lam):
    return (lam.size, tuple(lam))


class ClassicalExpansion:
    """sum_gamma c^gamma sigma_gamma in H_T^*(Gr(k,N))."""

    __slots__ = ("k", "N", "coefficients")

    def __init__(self, k, N, coefficients=None):
        self.k = k
        self.N = N
        self.coefficients = {
            Partition(g): c for g, c in (coefficients or {}).items() if not c.is_zero()
        }

    def __getitem__(self, gamma):
        return self.coefficients.get(Partition(gamma), TPoly())

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self.coefficients)

    def items(self):
        return [(g, self.coefficients[g]) for g in sorted(self.coefficients, key=_label_key)]

    def __eq__(self, other):
        if not isinstance(other, ClassicalExpansion):
            return NotImplemented
        return (self.k, self.N, self.coefficients) == (other.k, other.N, other.coefficients)

    def __repr__(self):
        return "ClassicalExpansion(k=%d, N=%d, %s)" % (self.k, self.N, self)

    def __str__(self):
        return format_combination((c, "s[%s]" % (g,)) for g, c in self.items())

    def latex(self):
        if not self.coefficients:
            return "0"
        return " + ".join(r"\left(%s\right)\sigma_{%s}" % (c.latex(), g.latex()) for g, c in self.items())

    def to_json(self):
        return {
            "k": self.k,
            "N": self.N,
            "terms": [{"p": list(g), "c": c.to_json()} for g, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            obj["k"],
            obj["N"],
            {Partition(t["p"]): TPoly.from_json(t["c"]) for t in obj["terms"]},
        )


class ExpansionCache:
    """
    Memo table for classical products, optionally backed by an append-only
    JSON-lines file.  Each line carries a sha256 of its payload; lines whose
    hash does not match are skipped with a warning.  With ``writable=False``
    the file is only read; new entries stay in memory.
    """

    def __init__(self, path=None, writable=True):
        self.path = path
        self.writable = writable
        self._store = {}
        self._lock = threading.Lock()
        if path is not None and os.path.exists(path):
            self._load()

    @staticmethod
    def key(lam, mu, k, N):
        return (k, N, tuple(lam), tuple(mu))

    @staticmethod
    def _digest(payload):
        return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()

    def _load(self):
        with open(self.path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                    payload = record["payload"]
                    if self._digest(payload) != record["sha256"]:
                        raise ValueError("hash mismatch")
                    k, N, lam, mu = payload["key"]
                    value = ClassicalExpansion.from_json(payload["value"])
                except (ValueError, KeyError, TypeError) as exc:
                    log.warning("%s:%d: ignoring cache line (%s)", self.path, lineno, exc)
                    continue
                self._store[(k, N, tuple(lam), tuple(mu))] = value

    def get(self, key):
        with self._lock:
            return self._store.get(key)

    def put(self, key, value):
        with self._lock:
            if key in self._store:
                return
            self._store[key] = value
            if self.path is not None and self.writable:
                payload = {"key": list(key), "value": value.to_json()}
                record = {"payload": payload, "sha256": self._digest(payload)}
                with open(self.path, "a") as fh:
                    fh.write(json.dumps(record, sort_keys=True) + "\n")

    def clear(self):
        with self._lock:
            self._store.clear()

    def __len__(self):
        return len(self._store)


default_cache = ExpansionCache()


def classical_eqlr(lam, mu, k, N, cache=None, strict=False):
    """
    Expand sigma_lam * sigma_mu in H_T^*(Gr(k,N)).

    Labels outside P_kN are dropped.  With ``strict`` a dropped nonzero
    coefficient raises ArithmeticError instead (the quantum pipeline never
    produces one).
    """
    lam, mu = Partition(lam), Partition(mu)
    for p in (lam, mu):
        if not in_box(p, k, N):
            raise ValueError("%s is not in P_%d,%d" % (p, k, N))
    cache = default_cache if cache is None else cache
    key = ExpansionCache.key(lam, mu, k, N)
    hit = cache.get(key)
    if hit is not None:
        return hit
    coeffs = expand_product(lam, mu, k)
    kept = {}
    for gamma, c in coeffs.items():
        if in_box(gamma, k, N):
            kept[gamma] = c
        elif strict:
            raise ArithmeticError(
                "product %s * %s has a term %s outside P_%d,%d" % (lam, mu, gamma, k, N)
            )
    result = ClassicalExpansion(k, N, kept)
    cache.put(key, result)
    return result


def classical_pieri(lam, k, N):
    """sigma_1 * sigma_lam: every one-box cover plus the diagonal weight term."""
    lam = Partition(lam)
    if not in_box(lam, k, N):
        raise ValueError("%s is not in P_%d,%d" % (lam, k, N))
    coeffs = {mu: TPoly.const(1) for mu in covers(lam, k, N)}
    coeffs[lam] = equiv_weight(lam, k, N)
    return ClassicalExpansion(k, N, coeffs)
