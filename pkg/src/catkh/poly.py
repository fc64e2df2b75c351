"""Sparse multivariate polynomials with symmetric-function and divided
difference utilities.

Polynomials live in k variables Y_1..Y_k over an exact field.  The
divided difference is computed monomial by monomial from the closed
form of (Y_i^a Y_{i+1}^b - Y_i^b Y_{i+1}^a) / (Y_{i+1} - Y_i), so no
polynomial division is ever performed.
"""

from itertools import combinations

from .fields import Rationals


class MultiPoly:
    """Sparse polynomial: dict[exponent tuple -> coefficient], no stored zeros."""

    __slots__ = ("F", "nvars", "terms")

    def __init__(self, F, nvars, terms=None):
        self.F = F
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if not F.is_zero(c):
                    assert len(e) == nvars
                    self.terms[e] = c

    @classmethod
    def zero(cls, F, nvars):
        return cls(F, nvars)

    @classmethod
    def one(cls, F, nvars):
        return cls(F, nvars, {(0,) * nvars: F.one})

    @classmethod
    def var(cls, F, nvars, i):
        """Y_i, 1-indexed."""
        assert 1 <= i <= nvars
        e = [0] * nvars
        e[i - 1] = 1
        return cls(F, nvars, {tuple(e): F.one})

    @classmethod
    def monomial(cls, F, exps, coeff=None):
        F0 = F
        return cls(F0, len(exps), {tuple(exps): coeff if coeff is not None else F0.one})

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def __add__(self, other):
        F = self.F
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = F.add(out.get(e, F.zero), c)
            if F.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(F, self.nvars, out)

    def __sub__(self, other):
        return self + other.scale(self.F.neg(self.F.one))

    def scale(self, c):
        F = self.F
        if F.is_zero(c):
            return MultiPoly.zero(F, self.nvars)
        return MultiPoly(F, self.nvars, {e: F.mul(c, x) for e, x in self.terms.items()})

    def __mul__(self, other):
        F = self.F
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = F.add(out.get(e, F.zero), F.mul(c1, c2))
                if F.is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(F, self.nvars, out)

    def __eq__(self, other):
        return (self.nvars == other.nvars and self.terms == other.terms)

    def swap_vars(self, i):
        """Apply the transposition of Y_i and Y_{i+1} (1-indexed i)."""
        a = i - 1
        out = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[a], e2[a + 1] = e2[a + 1], e2[a]
            out[tuple(e2)] = c
        return MultiPoly(self.F, self.nvars, out)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join("Y%d^%d" % (i + 1, p) if p > 1 else "Y%d" % (i + 1)
                            for i, p in enumerate(e) if p)
            c = self.terms[e]
            parts.append("%s%s" % (c, "*" + mono if mono else ""))
        return " + ".join(parts)


def _monomials_of_degree(varlist, nvars, p):
    """Exponent tuples of total degree p supported on varlist (1-indexed)."""
    if p == 0:
        yield (0,) * nvars
        return
    if not varlist:
        return
    # stars and bars on the chosen variables
    j = len(varlist)
    for cuts in combinations(range(p + j - 1), j - 1):
        exps = [0] * nvars
        prev = -1
        rem = p
        parts = []
        for c in cuts:
            parts.append(c - prev - 1)
            prev = c
        parts.append(p + j - 2 - prev)
        for v, part in zip(varlist, parts):
            exps[v - 1] = part
        rem = p - sum(parts)
        assert rem == 0
        yield tuple(exps)


def complete_symmetric(F, p, j, k):
    """h_p(Y_1,...,Y_j) inside the ring with k variables.

    h_0 = 1; for j = 0 and p > 0 the sum is empty, hence 0.
    """
    assert 0 <= j <= k and p >= 0
    if p == 0:
        return MultiPoly.one(F, k)
    terms = {e: F.one for e in _monomials_of_degree(list(range(1, j + 1)), k, p)}
    return MultiPoly(F, k, terms)


def elementary_symmetric(F, p, varset, k):
    """e_p of the named variables (subset of 1..k), in k variables."""
    varlist = sorted(varset)
    assert all(1 <= v <= k for v in varlist)
    if p == 0:
        return MultiPoly.one(F, k)
    if p > len(varlist):
        return MultiPoly.zero(F, k)
    out = {}
    for sub in combinations(varlist, p):
        e = [0] * k
        for v in sub:
            e[v - 1] = 1
        out[tuple(e)] = F.one
    return MultiPoly(F, k, out)


def _divided_diff_monomial(F, nvars, e, i):
    """Divided difference of a single monomial, as a term dict.

    (m - s_i m) / (Y_{i+1} - Y_i) for m = Y^e; closed form:
      a > b:  -sum_{t=0}^{a-b-1} Y_i^{b+t} Y_{i+1}^{a-1-t} * (rest)
      a < b:  +sum_{t=0}^{b-a-1} Y_i^{a+t} Y_{i+1}^{b-1-t} * (rest)
      a == b: 0
    """
    ai = i - 1
    a, b = e[ai], e[ai + 1]
    if a == b:
        return {}
    out = {}
    if a > b:
        sgn = F.neg(F.one)
        lo, hi = b, a
    else:
        sgn = F.one
        lo, hi = a, b
    for t in range(hi - lo):
        e2 = list(e)
        e2[ai] = lo + t
        e2[ai + 1] = hi - 1 - t
        key = tuple(e2)
        out[key] = F.add(out.get(key, F.zero), sgn)
    return {k2: v for k2, v in out.items() if not F.is_zero(v)}


def demazure(i, f):
    """Divided difference (f - s_i f) / (Y_{i+1} - Y_i), exact.

    Lowers total degree by one; i is 1-indexed and pairs Y_i with Y_{i+1}.
    """
    assert 1 <= i < f.nvars, "need i+1 <= nvars"
    F = f.F
    out = {}
    for e, c in f.terms.items():
        for e2, s in _divided_diff_monomial(F, f.nvars, e, i).items():
            v = F.add(out.get(e2, F.zero), F.mul(c, s))
            if F.is_zero(v):
                out.pop(e2, None)
            else:
                out[e2] = v
    return MultiPoly(F, f.nvars, out)


def monomial_basis(nvars, degree):
    """All exponent tuples of the given total degree, in a fixed order."""
    return sorted(_monomials_of_degree(list(range(1, nvars + 1)), nvars, degree))


if __name__ == "__main__":  # quick smoke
    F = Rationals()
    f = MultiPoly.var(F, 2, 1) * MultiPoly.var(F, 2, 1)
    print(demazure(1, f))
