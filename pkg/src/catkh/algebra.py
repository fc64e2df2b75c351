"""The tensor-product algebra as an exact matrix algebra.

An algebra instance realizes every element as a block operator on the
sum of the quotient rings indexed by weight functions.  Generators act
by the faithful-representation formulas:

    e_kappa   projection                                  degree 0
    y_i       multiplication by Y_i                       degree 2
    psi_i     divided difference (no red between i, i+1)  degree -2
    iota^+_i  identity-induced map, black i over the red
              to its left                                 degree 1
    iota^-_i  multiplication by Y_i, black i over the red
              to its right                                degree 1

Internal degree of a ring basis vector of polynomial degree d in the
kappa block is 2*d + offset(kappa); all generator matrices are
homogeneous for this grading, which is asserted at build time.

Elements remember their generator words where available; the mirror
anti-automorphism (star) reverses words and swaps the two iota kinds.
Basis elements are the backdrop sweep diagrams B_S and their pairings
C_{S,T} = B_S * star(B_T).
"""

from itertools import product as iproduct

from . import linalg
from .combinat import (Backdrop, backdrops_on, box_partitions, enumerate_kappas,
                       grading_offset, kappa_bottom, kappa_of_backdrop,
                       kappa_shift_down, kappa_shift_up, partition_of_kappa)
from .poly import MultiPoly, demazure
from .schubert import QuotientRing

E, Y, PSI, IPLUS, IMINUS = "e", "y", "psi", "ip", "im"


class AlgElt:
    """Block operator on the sum of quotient rings.

    blocks: dict (kappa_tgt, kappa_src) -> matrix; zero blocks dropped.
    degree: internal degree when homogeneous and known, else None.
    word:   tuple of generator ids in product order (rightmost acts first),
            kept when the element is a composite of generators.
    """

    __slots__ = ("alg", "blocks", "degree", "word")

    def __init__(self, alg, blocks, degree=None, word=None):
        self.alg = alg
        F = alg.F
        self.blocks = {}
        for key, m in blocks.items():
            if m and m[0] and not linalg.is_zero_matrix(F, m):
                self.blocks[key] = m
        self.degree = degree
        self.word = word

    def is_zero(self):
        return not self.blocks

    def block(self, tgt, src):
        m = self.blocks.get((tgt, src))
        if m is None:
            return linalg.zeros(self.alg.F, self.alg.ring(tgt).dim,
                                self.alg.ring(src).dim)
        return m

    def __add__(self, other):
        F = self.alg.F
        out = {k: linalg.mat_copy(m) for k, m in self.blocks.items()}
        for k, m in other.blocks.items():
            out[k] = linalg.mat_add(F, out[k], m) if k in out else m
        deg = self.degree if self.degree == other.degree else None
        if self.is_zero():
            deg = other.degree
        if other.is_zero():
            deg = self.degree
        return AlgElt(self.alg, out, deg)

    def __sub__(self, other):
        return self + other.scale(self.alg.F.neg(self.alg.F.one))

    def scale(self, c):
        F = self.alg.F
        if F.is_zero(c):
            return AlgElt(self.alg, {})
        return AlgElt(self.alg, {k: linalg.mat_scale(F, c, m)
                                 for k, m in self.blocks.items()},
                      self.degree, self.word)

    def __mul__(self, other):
        """Algebra product: self stacked on other (other acts first)."""
        F = self.alg.F
        out = {}
        for (t1, s1), m1 in self.blocks.items():
            for (t2, s2), m2 in other.blocks.items():
                if s1 != t2:
                    continue
                prod = linalg.mat_mul(F, m1, m2)
                key = (t1, s2)
                out[key] = linalg.mat_add(F, out[key], prod) if key in out else prod
        deg = None
        if self.degree is not None and other.degree is not None:
            deg = self.degree + other.degree
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return AlgElt(self.alg, out, deg, word)

    def eq(self, other):
        F = self.alg.F
        keys = set(self.blocks) | set(other.blocks)
        for k in keys:
            if not linalg.mat_eq(F, self.block(*k), other.block(*k)):
                return False
        return True

    def __repr__(self):
        return "AlgElt(%d blocks, deg=%s)" % (len(self.blocks), self.degree)


class CellVector:
    """One cellular basis vector C_{S,T} with its provenance."""

    __slots__ = ("index", "S", "T", "partition", "elt", "tgt", "src", "degree")

    def __init__(self, index, S, T, partition, elt):
        self.index = index
        self.S = S
        self.T = T
        self.partition = partition
        self.elt = elt
        keys = list(elt.blocks)
        assert len(keys) == 1
        self.tgt, self.src = keys[0]
        self.degree = elt.degree


class TensorAlgebra:
    """T^l with k black strands over an exact field, as matrices."""

    def __init__(self, l, k, F):
        self.l = l
        self.k = k
        self.F = F
        self.kappas = enumerate_kappas(l, k)
        self.rings = {kap: QuotientRing(F, kap, l, k) for kap in self.kappas}
        self.nonzero = [kap for kap in self.kappas if not self.rings[kap].is_zero]
        self._gen_cache = {}
        self._cell = None
        self._solvers = None
        self._prod_cache = {}
        self._check_dimension_oracle()

    # ---------------- rings and degrees ----------------

    def ring(self, kappa):
        return self.rings[kappa]

    def block_degrees(self, kappa):
        """Internal degrees of the flat ring basis of the kappa block."""
        off = grading_offset(kappa)
        return [2 * d + off for d in self.ring(kappa).degs]

    def _check_dimension_oracle(self):
        """dim R/I_kappa must equal the number of backdrops with that top."""
        counts = {kap: 0 for kap in self.kappas}
        for lam in box_partitions(self.l, self.k):
            for b in backdrops_on(lam, self.l):
                counts[kappa_of_backdrop(b, self.l)] += 1
        for kap in self.kappas:
            assert self.ring(kap).dim == counts[kap], \
                "dimension oracle failed at %s: ring %d vs backdrops %d" % (
                    kap, self.ring(kap).dim, counts[kap])

    # ---------------- generators ----------------

    def gen_target(self, gid):
        kind = gid[0]
        if kind == E:
            return gid[1]
        kappa = gid[2]
        if kind in (Y, PSI):
            return kappa
        i = gid[1]
        if kind == IPLUS:
            return kappa_shift_up(kappa, i - 1, self.k)
        return kappa_shift_down(kappa, i)

    def gen_source(self, gid):
        return gid[1] if gid[0] == E else gid[2]

    def gen_degree(self, gid):
        return {E: 0, Y: 2, PSI: -2, IPLUS: 1, IMINUS: 1}[gid[0]]

    def gen_valid(self, gid):
        kind = gid[0]
        if kind == E:
            return True
        i, kappa = gid[1], gid[2]
        if kind == Y:
            return 1 <= i <= self.k
        if kind == PSI:
            return 1 <= i < self.k and i not in kappa
        if kind == IPLUS:
            return 1 <= i <= self.k and (i - 1) in kappa \
                and kappa_shift_up(kappa, i - 1, self.k) is not None
        if kind == IMINUS:
            return 1 <= i <= self.k and i in kappa
        return False

    def gen(self, gid):
        """The generator as an AlgElt (may be the zero element)."""
        if gid in self._gen_cache:
            return self._gen_cache[gid]
        assert self.gen_valid(gid), gid
        F = self.F
        kind = gid[0]
        src = self.gen_source(gid)
        tgt = self.gen_target(gid)
        rs, rt = self.ring(src), self.ring(tgt)
        deg = self.gen_degree(gid)
        if rs.is_zero or rt.is_zero:
            elt = AlgElt(self, {}, deg, (gid,))
        elif kind == E:
            elt = AlgElt(self, {(src, src): linalg.identity(F, rs.dim)}, 0, (gid,))
        elif kind == Y:
            g = MultiPoly.var(F, self.k, gid[1])
            elt = AlgElt(self, {(src, src): rs.mult_matrix(g)}, 2, (gid,))
        elif kind == PSI:
            cols = [rs.reduce(demazure(gid[1], rs.basis_poly(i)))
                    for i in range(rs.dim)]
            elt = AlgElt(self, {(src, src): linalg.transpose(cols)}, -2, (gid,))
        elif kind == IPLUS:
            cols = [rt.reduce(rs.basis_poly(i)) for i in range(rs.dim)]
            elt = AlgElt(self, {(tgt, src): linalg.transpose(cols)}, 1, (gid,))
        else:  # IMINUS
            yv = MultiPoly.var(F, self.k, gid[1])
            cols = [rt.reduce(rs.basis_poly(i) * yv) for i in range(rs.dim)]
            elt = AlgElt(self, {(tgt, src): linalg.transpose(cols)}, 1, (gid,))
        self._assert_homogeneous(elt)
        self._gen_cache[gid] = elt
        return elt

    def _assert_homogeneous(self, elt):
        if elt.degree is None:
            return
        F = self.F
        for (tgt, src), m in elt.blocks.items():
            dt = self.block_degrees(tgt)
            ds = self.block_degrees(src)
            for r, row in enumerate(m):
                for c, x in enumerate(row):
                    if not F.is_zero(x):
                        assert dt[r] == ds[c] + elt.degree, \
                            "inhomogeneous entry in %s" % (elt,)

    def idempotent(self, kappa):
        return self.gen((E, kappa))

    def one(self):
        out = AlgElt(self, {})
        for kap in self.nonzero:
            out = out + self.idempotent(kap)
        out.degree = 0
        return out

    def zero(self):
        return AlgElt(self, {})

    def all_generators(self, kappa):
        """Every valid non-idempotent generator with the given source."""
        out = []
        for i in range(1, self.k + 1):
            for kind in (Y, PSI, IPLUS, IMINUS):
                gid = (kind, i, kappa)
                if self.gen_valid(gid):
                    out.append(gid)
        return out

    def elt_from_word(self, word):
        """Compose a tuple of generator ids (product order)."""
        out = None
        for gid in reversed(word):
            g = self.gen(gid)
            out = g if out is None else g * out
        if out is None:
            return self.one()
        return out

    def psi_across_reds(self, i, kappa):
        """The crossing of blacks i, i+1 drawn right of the r intervening
        reds: the composite iota^+ psi (iota^-)^r; degree 2r - 2."""
        r = sum(1 for v in kappa if v == i)
        assert r > 0, "use the psi generator when no red intervenes"
        word_applied = []
        cur = kappa
        for _ in range(r):
            word_applied.append((IMINUS, i, cur))
            cur = kappa_shift_down(cur, i)
        word_applied.append((PSI, i, cur))
        for _ in range(r):
            word_applied.append((IPLUS, i, cur))
            cur = kappa_shift_up(cur, i - 1, self.k)
        assert cur == kappa
        word = tuple(reversed(word_applied))
        elt = self.elt_from_word(word)
        elt.degree = 2 * r - 2
        elt.word = word
        self._assert_homogeneous(elt)
        return elt

    def generator_matrix(self, gid):
        """Spec surface: psi with intervening reds routes to the composite."""
        if gid[0] == PSI and gid[1] in gid[2]:
            return self.psi_across_reds(gid[1], gid[2])
        return self.gen(gid)

    # ---------------- star ----------------

    def star_gid(self, gid):
        kind = gid[0]
        if kind in (E, Y, PSI):
            return gid
        i, kappa = gid[1], gid[2]
        if kind == IPLUS:
            return (IMINUS, i, kappa_shift_up(kappa, i - 1, self.k))
        return (IPLUS, i, kappa_shift_down(kappa, i))

    def star(self, elt):
        """Mirror anti-automorphism, via the generator word."""
        assert elt.word is not None, "star needs word provenance"
        word = tuple(self.star_gid(g) for g in reversed(elt.word))
        out = self.elt_from_word(word)
        out.degree = elt.degree
        out.word = word
        return out

    # ---------------- backdrop sweep ----------------

    def backdrop_element(self, b):
        """B_S: bottom placement of the partition swept to the labeled top.

        Rows are processed by descending (label, tie); each black moves
        rightward across reds (iota^-) and across not-yet-processed
        blacks (psi) until it reaches its label gap and the next black
        there is already in place.
        """
        l, k = self.l, self.k
        lam = b.partition
        gap = {j: j + 1 + lam[j] for j in range(k)}
        order = list(range(k))  # rows left to right
        processed = set()
        word_applied = []

        def current_kappa():
            return tuple(sum(1 for j in range(k) if gap[j] < h)
                         for h in range(1, l + 1))

        for r in sorted(range(k), key=lambda j: (b.labels[j], b.tie[j]),
                        reverse=True):
            while True:
                pos = order.index(r)
                i = pos + 1
                kap = current_kappa()
                nxt = order[pos + 1] if pos + 1 < k else None
                if nxt is not None and gap[nxt] == gap[r]:
                    if nxt in processed:
                        break
                    gid = (PSI, i, kap)
                    assert self.gen_valid(gid), (b, gid)
                    word_applied.append(gid)
                    order[pos], order[pos + 1] = order[pos + 1], order[pos]
                elif gap[r] < b.labels[r]:
                    gid = (IMINUS, i, kap)
                    assert self.gen_valid(gid), (b, gid)
                    word_applied.append(gid)
                    gap[r] += 1
                else:
                    break
            processed.add(r)
        word = tuple(reversed(word_applied))
        if not word:
            word = ((E, kappa_bottom(lam, l)),)
        elt = self.elt_from_word(word)
        elt.word = word
        elt.degree = sum(self.gen_degree(g) for g in word)
        assert current_kappa() == kappa_of_backdrop(b, l)
        return elt

    realize_backdrop = backdrop_element

    # ---------------- cellular basis ----------------

    def cellular_basis(self):
        """All C_{S,T} = B_S * star(B_T); built once, then cached."""
        if self._cell is not None:
            return self._cell
        F = self.F
        basis = []
        solvers = {}
        for lam in box_partitions(self.l, self.k):
            bds = backdrops_on(lam, self.l)
            b_elts = {}
            bstar_elts = {}
            for bd in bds:
                be = self.backdrop_element(bd)
                assert not be.is_zero(), "B_S vanished for %s" % (bd,)
                b_elts[bd] = be
                bstar_elts[bd] = self.star(be)
            for S, T in iproduct(bds, bds):
                elt = b_elts[S] * bstar_elts[T]
                cv = CellVector(len(basis), S, T, lam, elt)
                key = (cv.tgt, cv.src)
                if key not in solvers:
                    rt, rs = self.ring(cv.tgt), self.ring(cv.src)
                    solvers[key] = linalg.SpanSolver(F, rt.dim * rs.dim)
                vec = [x for row in elt.blocks[key] for x in row]
                ok = solvers[key].add(vec, cv.index)
                assert ok, "cellular vectors dependent at %s" % (key,)
                basis.append(cv)
        expected = sum(len(backdrops_on(lam, self.l)) ** 2
                       for lam in box_partitions(self.l, self.k))
        assert len(basis) == expected
        self._cell = basis
        self._solvers = solvers
        return basis

    def dim(self):
        return len(self.cellular_basis())

    def cell_blocks(self):
        """Map (kappa_tgt, kappa_src) -> list of cell indices."""
        out = {}
        for cv in self.cellular_basis():
            out.setdefault((cv.tgt, cv.src), []).append(cv.index)
        return out

    def hom_cells(self, a, b):
        """Cell indices spanning e_a T e_b  (maps P_a -> P_b)."""
        return self.cell_blocks().get((a, b), [])

    def hom_dim_graded(self, a, b):
        """Graded dimension of e_a T e_b as {degree: dim}."""
        out = {}
        for i in self.hom_cells(a, b):
            d = self.cellular_basis()[i].degree
            out[d] = out.get(d, 0) + 1
        return out

    def express(self, elt):
        """Cellular coordinates of an element: {cell index: coefficient}."""
        self.cellular_basis()
        out = {}
        for key, m in elt.blocks.items():
            assert key in self._solvers, "element outside the algebra at %s" % (key,)
            vec = [x for row in m for x in row]
            coords = self._solvers[key].express(vec)
            assert coords is not None, "element outside the cellular span"
            out.update(coords)
        return out

    def from_coords(self, coords):
        out = self.zero()
        for i, c in coords.items():
            out = out + self.cellular_basis()[i].elt.scale(c)
        return out

    def cell_product(self, i, j):
        """Structure constants: coordinates of C_i * C_j (cached)."""
        key = (i, j)
        if key not in self._prod_cache:
            basis = self.cellular_basis()
            ci, cj = basis[i], basis[j]
            if ci.src != cj.tgt:
                self._prod_cache[key] = {}
            else:
                self._prod_cache[key] = self.express(ci.elt * cj.elt)
        return self._prod_cache[key]

    # ---------------- subalgebras and span oracles ----------------

    def idempotent_subalgebra(self, kappa_set):
        """Basis (cell indices) and graded dims of e T e for the given
        set of idempotents."""
        kset = set(kappa_set)
        idx = [cv.index for cv in self.cellular_basis()
               if cv.tgt in kset and cv.src in kset]
        gdims = {}
        for i in idx:
            d = self.cellular_basis()[i].degree
            gdims[d] = gdims.get(d, 0) + 1
        return {"cells": idx, "dim": len(idx), "graded_dims": gdims}

    def compressed_idempotents(self, groups):
        """Idempotents constant on each group of reds: the kappa where,
        within every group, all values agree."""
        bounds = []
        t = 0
        for n in groups:
            bounds.append((t, t + n))
            t += n
        assert t == self.l
        out = []
        for kap in self.nonzero:
            if all(len({kap[h] for h in range(a, b)}) == 1 for a, b in bounds):
                out.append(kap)
        return out

    def generated_span_rank(self):
        """Rank of the span of all generator words (left closure from the
        idempotents); the faithfulness oracle for the cellular count."""
        F = self.F
        solvers = {}
        frontier = []

        def try_add(elt):
            keys = list(elt.blocks)
            if not keys:
                return False
            assert len(keys) == 1
            key = keys[0]
            if key not in solvers:
                rt, rs = self.ring(key[0]), self.ring(key[1])
                solvers[key] = linalg.SpanSolver(F, rt.dim * rs.dim)
            vec = [x for row in elt.blocks[key] for x in row]
            return solvers[key].add(vec, solvers[key].rank())

        gens = []
        for kap in self.nonzero:
            for gid in self.all_generators(kap):
                g = self.gen(gid)
                if not g.is_zero():
                    gens.append(g)
        for kap in self.nonzero:
            e = self.idempotent(kap)
            if try_add(e):
                frontier.append(e)
        while frontier:
            new = []
            for x in frontier:
                (xt, _xs) = list(x.blocks)[0]
                for g in gens:
                    if self.gen_source(g.word[0]) != xt:
                        continue
                    y = g * x
                    if not y.is_zero() and try_add(y):
                        new.append(y)
            frontier = new
        return sum(s.rank() for s in solvers.values())

    # ---------------- relation verification ----------------

    def verify_relations(self):
        """Check every local relation instance as an exact matrix identity.

        Returns a list of (name, position, ok) triples; all ok must be True.
        """
        report = []

        def check(name, pos, lhs, rhs):
            report.append((name, pos, lhs.eq(rhs)))

        for kap in self.kappas:
            ring = self.ring(kap)
            if kap and kap[0] > 0:
                report.append(("violating", kap, ring.is_zero))
            if ring.is_zero:
                continue
            e = self.idempotent(kap)
            k = self.k
            ys = {i: self.gen((Y, i, kap)) for i in range(1, k + 1)}
            for i in range(1, k + 1):
                for j in range(i + 1, k + 1):
                    check("dots-commute", (kap, i, j),
                          ys[i] * ys[j], ys[j] * ys[i])
            for i in range(1, k):
                if i in kap:
                    continue
                psi = self.gen((PSI, i, kap))
                check("nilhecke-dot-a", (kap, i),
                      psi * ys[i + 1], ys[i] * psi + e)
                check("nilhecke-dot-b", (kap, i),
                      ys[i + 1] * psi, psi * ys[i] + e)
                check("black-bigon", (kap, i), psi * psi, self.zero())
                for j in range(1, k + 1):
                    if j not in (i, i + 1):
                        check("psi-dot-distant", (kap, i, j),
                              psi * ys[j], ys[j] * psi)
                for j in range(i + 2, k):
                    if j in kap:
                        continue
                    psj = self.gen((PSI, j, kap))
                    check("psi-distant", (kap, i, j), psi * psj, psj * psi)
                if i + 1 < k and (i + 1) not in kap:
                    ps2 = self.gen((PSI, i + 1, kap))
                    check("black-braid", (kap, i),
                          psi * ps2 * psi, ps2 * psi * ps2)
            for i in range(1, k + 1):
                if i in kap:
                    im = self.gen((IMINUS, i, kap))
                    dn = kappa_shift_down(kap, i)
                    ip_back = self.gen((IPLUS, i, dn))
                    check("cost-right", (kap, i), ip_back * im, ys[i])
                    ydn = self.gen((Y, i, dn))
                    check("red-dot-minus", (kap, i), im * ys[i], ydn * im)
                if (i - 1) in kap and kappa_shift_up(kap, i - 1, self.k):
                    ip = self.gen((IPLUS, i, kap))
                    up = kappa_shift_up(kap, i - 1, self.k)
                    im_back = self.gen((IMINUS, i, up))
                    check("cost-left", (kap, i), im_back * ip, ys[i])
                    yup = self.gen((Y, i, up))
                    check("red-dot-plus", (kap, i), ip * ys[i], yup * ip)
            for i in range(1, k):
                r = sum(1 for v in kap if v == i)
                if r != 1:
                    continue
                # one red between blacks i and i+1
                dn = kappa_shift_down(kap, i)
                right = self.gen((IPLUS, i, dn)) * self.gen((PSI, i, dn)) \
                    * self.gen((IMINUS, i, kap))
                up = kappa_shift_up(kap, i, self.k)
                if up is None:
                    continue
                left = self.gen((IMINUS, i + 1, up)) * self.gen((PSI, i, up)) \
                    * self.gen((IPLUS, i + 1, kap))
                check("red-triple-correction", (kap, i), right, left - e)
            for i in range(1, k):
                # red immediately right of the pair: slide it left across both
                if i not in kap and (i + 1) in kap:
                    psi = self.gen((PSI, i, kap))
                    k1 = kappa_shift_down(kap, i + 1)
                    k2 = kappa_shift_down(k1, i)
                    a = self.gen((IMINUS, i, k1)) * self.gen((IMINUS, i + 1, kap)) * psi
                    b = self.gen((PSI, i, k2)) * self.gen((IMINUS, i, k1)) \
                        * self.gen((IMINUS, i + 1, kap))
                    check("red-over-crossing", (kap, i), a, b)
                # red immediately left of the pair: slide it right across both
                if i not in kap and (i - 1) in kap:
                    up1 = kappa_shift_up(kap, i - 1, self.k)
                    if up1 is None or i in up1:
                        pass
                    else:
                        up2 = kappa_shift_up(up1, i, self.k)
                        if up2 is not None:
                            psi = self.gen((PSI, i, kap))
                            a = self.gen((IPLUS, i + 1, up1)) * self.gen((IPLUS, i, kap)) * psi
                            b = self.gen((PSI, i, up2)) * self.gen((IPLUS, i + 1, up1)) \
                                * self.gen((IPLUS, i, kap))
                            check("red-under-crossing", (kap, i), a, b)
        # corner relation: y_1^l e_0 = 0, y_1^{l-1} e_0 != 0
        if self.k >= 1:
            kap0 = (0,) * self.l
            y1 = self.gen((Y, 1, kap0))
            p = self.idempotent(kap0)
            for _ in range(self.l - 1):
                p = y1 * p
            report.append(("corner-nilpotence-sharp", kap0, not p.is_zero()))
            report.append(("corner-nilpotence", kap0, (y1 * p).is_zero()))
        return report

    # ---------------- admissible indexing ----------------

    def admissible_kappas(self):
        """Kappas of bottom placements; index the simples/standards."""
        out = []
        for lam in box_partitions(self.l, self.k):
            out.append(kappa_bottom(lam, self.l))
        return out

    def partition_of(self, kappa):
        return partition_of_kappa(kappa, self.l, self.k)
