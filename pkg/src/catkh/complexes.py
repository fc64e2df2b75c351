"""Bounded complexes of shifted projectives and their homological algebra.

Objects are pairs (kappa, shift); a differential entry from P_a(s) at
homological degree h to P_b(t) at h+1 is an algebra element f in
e_a T e_b of internal degree s - t, acting by right multiplication.
Composition of entries is the algebra product in the same order, so
d^2 = 0 reads as honest matrix identities.

The three workhorses:

* gaussian_eliminate -- strips invertible degree-zero entries between
  equal summands, yielding the minimal representative of the homotopy
  type (all summands produced by this package are indecomposable, which
  module-level checks assert).
* min_resolution   -- minimal projective resolution of a module via
  iterated covers.
* FunctorData + apply_functor -- replaces each projective by a
  resolution of its image module, lifts the differentials, and totalizes
  with homotopy corrections until the square of the differential is
  exactly zero (one-sided twisted complex).
"""

from . import linalg
from .modules import (ModuleMap, cell_structure, cover_map, direct_sum,
                      kernel_module, module_cover, projective)


class Complex:
    """objects[h]: list of (kappa, shift); diffs[h][i][j]: entry from
    objects[h][i] to objects[h+1][j] as cellular coordinates {cell: c},
    or None for zero."""

    def __init__(self, alg, objects, diffs):
        self.alg = alg
        self.objects = {h: list(v) for h, v in objects.items() if v}
        self.diffs = {}
        for h, mat in diffs.items():
            if h in self.objects and (h + 1) in self.objects:
                self.diffs[h] = [[mat[i][j] if mat[i][j] else None
                                  for j in range(len(self.objects[h + 1]))]
                                 for i in range(len(self.objects[h]))]

    def hrange(self):
        if not self.objects:
            return range(0, 0)
        hs = sorted(self.objects)
        return range(hs[0], hs[-1] + 1)

    def entry_elt(self, coords):
        return self.alg.from_coords(coords)

    def is_zero_complex(self):
        return not self.objects

    def total_objects(self):
        return sum(len(v) for v in self.objects.values())

    def validate(self):
        """Degrees of entries and d^2 = 0."""
        alg = self.alg
        cells = alg.cellular_basis()
        for h, mat in self.diffs.items():
            for i, (a, s) in enumerate(self.objects[h]):
                for j, (b, t) in enumerate(self.objects[h + 1]):
                    coords = mat[i][j]
                    if not coords:
                        continue
                    for ci in coords:
                        cv = cells[ci]
                        assert (cv.tgt, cv.src) == (a, b), \
                            "entry block mismatch at h=%d" % h
                        assert cv.degree == s - t, \
                            "entry degree %d != %d at h=%d" % (cv.degree, s - t, h)
        for h in self.diffs:
            if h + 1 not in self.diffs:
                continue
            m1, m2 = self.diffs[h], self.diffs[h + 1]
            n0 = len(self.objects[h])
            n2 = len(self.objects[h + 2])
            for i in range(n0):
                for kk in range(n2):
                    acc = None
                    for j in range(len(self.objects[h + 1])):
                        a = m1[i][j]
                        b = m2[j][kk]
                        if not a or not b:
                            continue
                        prod = self._coord_product(a, b)
                        acc = _coord_add(self.alg.F, acc, prod)
                    assert not acc, "d^2 != 0 at h=%d (%d->%d)" % (h, i, kk)
        return True

    def _coord_product(self, a, b):
        alg = self.alg
        F = alg.F
        out = {}
        for i, ci in a.items():
            for j, cj in b.items():
                for t, x in alg.cell_product(i, j).items():
                    v = F.add(out.get(t, F.zero), F.mul(F.mul(ci, cj), x))
                    if F.is_zero(v):
                        out.pop(t, None)
                    else:
                        out[t] = v
        return out

    def shifted(self, dq=0, dh=0):
        """Shift internal degree by dq and homological degree by dh."""
        objects = {h + dh: [(kap, s + dq) for (kap, s) in v]
                   for h, v in self.objects.items()}
        diffs = {h + dh: [[c for c in row] for row in mat]
                 for h, mat in self.diffs.items()}
        return Complex(self.alg, objects, diffs)

    def tate(self, n):
        """Tate twist: internal degree up by n, homological down by n."""
        return self.shifted(dq=n, dh=-n)

    def negate_odd(self):
        """Flip entry signs on odd homological degrees (used by cones)."""
        F = self.alg.F
        diffs = {}
        for h, mat in self.diffs.items():
            if h % 2 == 0:
                diffs[h] = [[c for c in row] for row in mat]
            else:
                diffs[h] = [[{i: F.neg(x) for i, x in c.items()} if c else None
                            for c in row] for row in mat]
        return Complex(self.alg, self.objects, diffs)

    def table(self):
        """Objects per (h, shift) as a rank table (for minimal complexes)."""
        out = {}
        for h, objs in self.objects.items():
            for (kap, s) in objs:
                out[(h, s, kap)] = out.get((h, s, kap), 0) + 1
        return out


def _coord_add(F, a, b, sign=1):
    if not b:
        return a
    out = dict(a) if a else {}
    for i, x in b.items():
        if sign < 0:
            x = F.neg(x)
        v = F.add(out.get(i, F.zero), x)
        if F.is_zero(v):
            out.pop(i, None)
        else:
            out[i] = v
    return out or None


def single_object_complex(alg, kappa, shift=0, h=0):
    return Complex(alg, {h: [(kappa, shift)]}, {})


def gaussian_eliminate(C):
    """Remove invertible degree-zero entries between equal summands.

    Repeats until none remain; homotopy-equivalent output with the same
    graded Euler characteristic.
    """
    alg = C.alg
    F = alg.F
    objects = {h: list(v) for h, v in C.objects.items()}
    diffs = {h: [[c for c in row] for row in mat] for h, mat in C.diffs.items()}

    def entry_matrix(coords):
        return alg.from_coords(coords)

    changed = True
    while changed:
        changed = False
        for h in sorted(diffs):
            mat = diffs.get(h)
            if mat is None or h not in objects or h + 1 not in objects:
                continue
            found = None
            for i, (a, s) in enumerate(objects[h]):
                for j, (b, t) in enumerate(objects[h + 1]):
                    coords = mat[i][j]
                    if not coords or a != b or s != t:
                        continue
                    elt = entry_matrix(coords)
                    blk = elt.blocks.get((a, a))
                    if blk is None:
                        continue
                    invblk = linalg.inv(F, blk)
                    if invblk is None:
                        continue
                    found = (i, j, elt, invblk, a)
                    break
                if found:
                    break
            if not found:
                continue
            i, j, elt, invblk, a = found
            from .algebra import AlgElt
            inv_elt = AlgElt(alg, {(a, a): invblk}, 0)
            inv_coords = alg.express(inv_elt)
            n_h = len(objects[h])
            n_h1 = len(objects[h + 1])
            # d' = delta - beta * f^{-1} * gamma on the reduced summands
            keep_h = [x for x in range(n_h) if x != i]
            keep_h1 = [y for y in range(n_h1) if y != j]
            newmat = []
            for x in keep_h:
                row = []
                for y in keep_h1:
                    base = mat[x][y]
                    gamma = mat[x][j]   # x -> j
                    beta = mat[i][y]    # i -> y
                    corr = None
                    if gamma and beta:
                        t1 = C._coord_product(gamma, inv_coords)
                        corr = C._coord_product(t1, beta)
                    row.append(_coord_add(F, base, corr, sign=-1))
                newmat.append(row)
            objects[h] = [objects[h][x] for x in keep_h]
            objects[h + 1] = [objects[h + 1][y] for y in keep_h1]
            diffs[h] = newmat
            if h - 1 in diffs:
                diffs[h - 1] = [[diffs[h - 1][x][y] for y in keep_h]
                                for x in range(len(diffs[h - 1]))]
            if h + 1 in diffs:
                diffs[h + 1] = [[diffs[h + 1][x][y]
                                 for y in range(len(diffs[h + 1][0]))]
                                for x in keep_h1]
            for hh in (h - 1, h, h + 1):
                if hh in objects and not objects[hh]:
                    del objects[hh]
                if hh in diffs and (hh not in objects or hh + 1 not in objects):
                    del diffs[hh]
            changed = True
            break
    out = Complex(alg, objects, diffs)
    return out


def euler_character(C):
    """Graded Euler characteristic as {q-degree-ish: coefficient} over the
    classes [P_kappa]: dict (kappa) -> {shift: signed count}."""
    out = {}
    for h, objs in C.objects.items():
        sgn = 1 if h % 2 == 0 else -1
        for (kap, s) in objs:
            d = out.setdefault(kap, {})
            d[s] = d.get(s, 0) + sgn
    for kap in list(out):
        out[kap] = {s: c for s, c in out[kap].items() if c}
        if not out[kap]:
            del out[kap]
    return out


# ---------------- resolutions ----------------

class Resolution:
    """Minimal projective resolution of a module M.

    complex: Complex placed at homological degrees -len..0.
    aug:     ModuleMap from the degree-0 term onto M.
    truncated: True when max_h stopped the construction early.
    """

    def __init__(self, complex_, aug, truncated):
        self.complex = complex_
        self.aug = aug
        self.truncated = truncated


def min_resolution(M, max_h=64):
    """Iterated minimal covers; terminates by finite global dimension
    (or at max_h, flagged as truncated)."""
    alg = M.alg
    cs = cell_structure(alg)
    objects = {}
    diffs = {}
    summands, gen_images = module_cover(cs, M)
    phi0 = cover_map(cs, M, summands, gen_images)
    objects[0] = list(summands)
    aug = phi0
    cur_phi = phi0
    h = 0
    truncated = False
    while True:
        K, kbasis = kernel_module(cur_phi)
        if K.is_zero():
            break
        if -h >= max_h:
            truncated = True
            break
        h -= 1
        summands, gen_images = module_cover(cs, K)
        # gen_images live in K; push them into the previous term's module
        P_prev = cur_phi.src
        pushed = []
        for (kap, vec) in gen_images:
            amb = kbasis[kap]
            w = [alg.F.zero] * P_prev.dim(kap)
            for c, x in zip(vec, [None] * 0) if False else []:
                pass
            for t, x in enumerate(vec):
                if alg.F.is_zero(x):
                    continue
                for r, y in enumerate(amb[t]):
                    w[r] = alg.F.add(w[r], alg.F.mul(x, y))
            pushed.append((kap, w))
        objects[h] = list(summands)
        # differential entries: coordinates of the generator images over the
        # cellular bases of the previous term's summands
        P_prev_ranges = getattr(P_prev, "sum_ranges", None)
        prev_mods = cur_phi.components
        mat = []
        for (kap, _s), (bk, w) in zip(summands, pushed):
            row = []
            for t_idx, mod in enumerate(prev_mods):
                rng = P_prev_ranges[t_idx]
                coords = {}
                if kap in rng:
                    lo, hi = rng[kap]
                    idxs = mod.basis_cells.get(kap, [])
                    for loc, cell_i in enumerate(idxs):
                        x = w[lo + loc]
                        if not alg.F.is_zero(x):
                            coords[cell_i] = x
                row.append(coords or None)
            mat.append(row)
        diffs[h] = mat
        phi_next = cover_map(cs, K, summands, gen_images)
        # compose K -> P_prev inclusion with the cover to get the next map
        mats = {}
        X = phi_next.sum_module
        for kap in P_prev.blocks:
            m = linalg.zeros(alg.F, P_prev.dim(kap), X.dim(kap))
            kmat = phi_next.mats.get(kap)
            amb = kbasis.get(kap, [])
            if kmat is not None and amb:
                for r in range(P_prev.dim(kap)):
                    for c in range(X.dim(kap)):
                        acc = alg.F.zero
                        for t in range(len(amb)):
                            acc = alg.F.add(acc, alg.F.mul(kmat[t][c], amb[t][r]))
                        m[r][c] = acc
            mats[kap] = m
        cur_phi = ModuleMap(X, P_prev, mats)
        cur_phi.components = phi_next.components
        cur_phi.summands = summands
        cur_phi.sum_module = X
    cx = Complex(alg, objects, diffs)
    cx.validate()
    return Resolution(cx, aug, truncated)
