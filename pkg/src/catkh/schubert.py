"""Graded quotient rings R/I_kappa carrying the faithful representation.

The ideal I_kappa of R = F[Y_1..Y_k] is generated by complete symmetric
functions h_p(Y_1..Y_{kappa(q)}) for p > q - kappa(q) - 1 (one family
per q in [1, l]) together with h_p(Y_1..Y_k) for p > l - k.  Each family
only needs j consecutive values of p (the higher ones lie in the ideal
they generate), which bounds all generator degrees by l.

Quotients are built degreewise by row reduction; the quotient algebra is
generated in degree one, so the first empty degree ends the computation.
"""

from .poly import MultiPoly, complete_symmetric, monomial_basis
from . import linalg


def ideal_generators(F, kappa, l, k):
    """Finite generating set of I_kappa (possibly containing 1)."""
    assert len(kappa) == l
    gens = []
    families = [(kappa[q - 1], q - kappa[q - 1] - 1) for q in range(1, l + 1)]
    families.append((k, l - k))
    seen = set()
    for j, bound in families:
        if j == 0:
            continue  # h_p of no variables is 0 for p > 0, and bound >= 0 here
        lo = max(0, bound + 1)
        hi = max(lo, bound + j)
        for p in range(lo, hi + 1):
            h = complete_symmetric(F, p, j, k)
            key = (j, p)
            if key in seen or h.is_zero():
                continue
            seen.add(key)
            gens.append(h)
    return gens


class QuotientRing:
    """Monomial basis and reduction maps for R/I_kappa.

    Attributes:
      dims      -- list of graded dimensions (polynomial degree grading)
      basis     -- flat list of (degree, exponent tuple)
      degs      -- polynomial degree of each flat basis element
    """

    def __init__(self, F, kappa, l, k):
        self.F = F
        self.kappa = tuple(kappa)
        self.l = l
        self.k = k
        self.gens = ideal_generators(F, kappa, l, k)
        self._build()

    def _build(self):
        F = self.F
        k = self.k
        self.deg_basis = []      # per degree: list of exponent tuples
        self._monomials = []     # per degree: all monomials of that degree
        self._mono_index = []    # per degree: exp tuple -> column index
        self._reduction = []     # per degree: monomial index -> coord vector
        gens_by_deg = {}
        for g in self.gens:
            assert g.is_homogeneous()
            gens_by_deg.setdefault(g.degree(), []).append(g)
        cap = self.k * self.l + 2
        d = 0
        while d <= cap:
            monos = monomial_basis(k, d)
            idx = {e: i for i, e in enumerate(monos)}
            rows = []
            for dg, gs in gens_by_deg.items():
                if dg > d:
                    continue
                for m in monomial_basis(k, d - dg):
                    for g in gs:
                        prod = MultiPoly.monomial(F, m) * g
                        row = [F.zero] * len(monos)
                        for e, c in prod.terms.items():
                            row[idx[e]] = c
                        rows.append(row)
            if rows:
                R, pivots = linalg.rref(F, rows)
            else:
                R, pivots = [], []
            pivset = set(pivots)
            basis_cols = [c for c in range(len(monos)) if c not in pivset]
            red = {}
            for c in basis_cols:
                v = [F.zero] * len(basis_cols)
                v[basis_cols.index(c)] = F.one
                red[c] = v
            for r, pc in enumerate(pivots):
                v = [F.neg(R[r][c]) for c in basis_cols]
                red[pc] = v
            self._monomials.append(monos)
            self._mono_index.append(idx)
            self._reduction.append(red)
            self.deg_basis.append([monos[c] for c in basis_cols])
            if not basis_cols:
                break
            d += 1
        else:
            raise AssertionError("quotient did not terminate by degree %d" % cap)
        while self.deg_basis and not self.deg_basis[-1]:
            self.deg_basis.pop()
        self.dims = [len(b) for b in self.deg_basis]
        self.basis = [(dd, e) for dd, bs in enumerate(self.deg_basis) for e in bs]
        self.degs = [dd for dd, _ in self.basis]
        self._flat_index = {be: i for i, be in enumerate(self.basis)}
        self.dim = len(self.basis)

    @property
    def is_zero(self):
        return self.dim == 0

    def top_degree(self):
        return len(self.dims) - 1

    def reduce(self, f):
        """Coordinates of f mod I_kappa over the flat basis."""
        F = self.F
        out = [F.zero] * self.dim
        for e, c in f.terms.items():
            d = sum(e)
            if d >= len(self._monomials):
                continue  # beyond the top degree everything reduces to 0
            col = self._mono_index[d][e]
            red = self._reduction[d][col]
            base = sum(self.dims[:d]) if d < len(self.dims) else None
            if base is None or not red:
                continue
            for i, x in enumerate(red):
                if not F.is_zero(x):
                    out[base + i] = F.add(out[base + i], F.mul(c, x))
        return out

    def basis_poly(self, i):
        d, e = self.basis[i]
        return MultiPoly.monomial(self.F, e)

    def mult_matrix(self, g):
        """Matrix of multiplication by the polynomial g on the flat basis."""
        cols = [self.reduce(self.basis_poly(i) * g) for i in range(self.dim)]
        return linalg.transpose(cols) if cols else []


def build_quotient(F, kappa, l, k):
    return QuotientRing(F, kappa, l, k)
