"""Finite-dimensional graded modules over the matrix realization.

A module is stored as one graded space per weight-function block plus
the action matrix of every elementary generator; actions of arbitrary
basis elements are recovered from their generator words.  All maps in
this layer preserve internal degree (shifts are baked into the degree
lists), and module maps are block-diagonal because they commute with
the idempotents.

Simples come out of the cellular structure: each cell carries a Gram
form; its radical cuts the cell module down to the simple, and the
algebra radical is the joint annihilator of the simples.  Covers peel
multiplicities off block profiles in containment order of partitions,
which makes the resolutions in this file genuinely minimal.
"""

from . import linalg
from .algebra import E
from .combinat import backdrops_on, box_partitions, kappa_bottom


class GradedModule:
    """Blocks of graded vectors with elementary-generator actions."""

    def __init__(self, alg, blocks, action, name=""):
        self.alg = alg
        self.blocks = {k: list(v) for k, v in blocks.items() if v}
        self.action = action  # gid -> matrix (tgt block rows x src block cols)
        self.name = name
        self._cell_cache = {}
        self._validate()

    def _validate(self):
        alg = self.alg
        F = alg.F
        for gid, m in self.action.items():
            src = alg.gen_source(gid)
            tgt = alg.gen_target(gid)
            ds = self.blocks.get(src, [])
            dt = self.blocks.get(tgt, [])
            assert len(m) == len(dt) and all(len(row) == len(ds) for row in m)
            d = alg.gen_degree(gid)
            for r, row in enumerate(m):
                for c, x in enumerate(row):
                    if not F.is_zero(x):
                        assert dt[r] == ds[c] + d, \
                            "inhomogeneous action of %s in %s" % (gid, self.name)

    def dim(self, kappa):
        return len(self.blocks.get(kappa, []))

    def total_dim(self):
        return sum(len(v) for v in self.blocks.values())

    def profile(self):
        """dict (kappa, degree) -> dim."""
        out = {}
        for kap, degs in self.blocks.items():
            for d in degs:
                out[(kap, d)] = out.get((kap, d), 0) + 1
        return out

    def is_zero(self):
        return not self.blocks

    def act_gen(self, gid):
        alg = self.alg
        if gid[0] == E:
            n = self.dim(gid[1])
            return linalg.identity(alg.F, n)
        m = self.action.get(gid)
        if m is None:
            return linalg.zeros(alg.F, self.dim(alg.gen_target(gid)),
                                self.dim(alg.gen_source(gid)))
        return m

    def act_word(self, word):
        """Matrix of the product of a generator word (rightmost acts first)."""
        alg = self.alg
        out = None
        for gid in reversed(word):
            m = self.act_gen(gid)
            out = m if out is None else linalg.mat_mul(alg.F, m, out)
        return out

    def act_cell(self, i):
        """Action matrix of the i-th cellular basis vector (cached)."""
        if i not in self._cell_cache:
            cv = self.alg.cellular_basis()[i]
            self._cell_cache[i] = self.act_word(cv.elt.word)
        return self._cell_cache[i]

    def act_coords(self, coords, tgt, src):
        """Action of a single-block element given by cellular coordinates."""
        alg = self.alg
        F = alg.F
        out = linalg.zeros(F, self.dim(tgt), self.dim(src))
        for i, c in coords.items():
            cv = alg.cellular_basis()[i]
            assert (cv.tgt, cv.src) == (tgt, src)
            out = linalg.mat_add(F, out, linalg.mat_scale(F, c, self.act_cell(i)))
        return out

    def shifted(self, s):
        if s == 0:
            return self
        out = GradedModule(self.alg,
                           {k: [d + s for d in v] for k, v in self.blocks.items()},
                           self.action, self.name + "<%d>" % s)
        return out


def projective(alg, kappa, shift=0):
    """P_kappa as a graded module; basis = cellular vectors C with source
    column kappa."""
    key = ("proj", kappa)
    cache = getattr(alg, "_proj_cache", None)
    if cache is None:
        cache = alg._proj_cache = {}
    if key not in cache:
        cells = alg.cellular_basis()
        by_block = {}
        for cv in cells:
            if cv.src == kappa:
                by_block.setdefault(cv.tgt, []).append(cv.index)
        blocks = {mu: [cells[i].degree for i in idx]
                  for mu, idx in by_block.items()}
        action = {}
        for mu, idx in by_block.items():
            for gid in alg.all_generators(mu):
                tgt = alg.gen_target(gid)
                if tgt not in by_block:
                    targets = []
                else:
                    targets = by_block[tgt]
                g = alg.gen(gid)
                cols = []
                for i in idx:
                    prod = g * cells[i].elt
                    if prod.is_zero():
                        cols.append([alg.F.zero] * len(targets))
                        continue
                    coords = alg.express(prod)
                    col = [alg.F.zero] * len(targets)
                    for j, c in coords.items():
                        col[targets.index(j)] = c
                    cols.append(col)
                if targets or idx:
                    mat = [[cols[c][r] for c in range(len(idx))]
                           for r in range(len(targets))]
                    action[gid] = mat
        mod = GradedModule(alg, blocks, action, "P%s" % (kappa,))
        mod.basis_cells = by_block  # kappa_tgt -> list of cell indices
        cache[key] = mod
    mod = cache[key]
    if shift:
        out = mod.shifted(shift)
        out.basis_cells = mod.basis_cells
        return out
    return mod


def direct_sum(alg, mods):
    """Direct sum; remembers the component ranges per block."""
    blocks = {}
    ranges = []  # per module: dict kappa -> (start, end)
    for m in mods:
        rng = {}
        for kap, degs in m.blocks.items():
            cur = blocks.setdefault(kap, [])
            rng[kap] = (len(cur), len(cur) + len(degs))
            cur.extend(degs)
        ranges.append(rng)
    action = {}
    gids = set()
    for m in mods:
        gids.update(m.action.keys())
    F = alg.F
    for gid in gids:
        src = alg.gen_source(gid)
        tgt = alg.gen_target(gid)
        ds = len(blocks.get(src, []))
        dt = len(blocks.get(tgt, []))
        mat = linalg.zeros(F, dt, ds)
        for m, rng in zip(mods, ranges):
            sm = m.act_gen(gid)
            if src not in rng or tgt not in rng:
                continue
            s0, _ = rng[src]
            t0, _ = rng[tgt]
            for r, row in enumerate(sm):
                for c, x in enumerate(row):
                    if not F.is_zero(x):
                        mat[t0 + r][s0 + c] = x
        action[gid] = mat
    out = GradedModule(alg, blocks, action, "+".join(m.name for m in mods))
    out.sum_ranges = ranges
    return out


class ModuleMap:
    """Degree-preserving module map, block-diagonal over weight functions."""

    def __init__(self, src, tgt, mats):
        self.src = src
        self.tgt = tgt
        self.mats = {k: m for k, m in mats.items()
                     if m and m[0] is not None}
        F = src.alg.F
        for kap, m in list(self.mats.items()):
            assert len(m) == tgt.dim(kap) and \
                all(len(row) == src.dim(kap) for row in m)
            ds, dt = src.blocks.get(kap, []), tgt.blocks.get(kap, [])
            for r, row in enumerate(m):
                for c, x in enumerate(row):
                    if not F.is_zero(x):
                        assert dt[r] == ds[c], "map not degree preserving"

    def mat(self, kappa):
        m = self.mats.get(kappa)
        if m is None:
            return linalg.zeros(self.src.alg.F, self.tgt.dim(kappa),
                                self.src.dim(kappa))
        return m

    def is_equivariant(self):
        """Check commutation with every generator action (test helper)."""
        alg = self.src.alg
        F = alg.F
        for kap in set(self.src.blocks) | set(self.tgt.blocks):
            for gid in alg.all_generators(kap):
                tgt = alg.gen_target(gid)
                a = linalg.mat_mul(F, self.tgt.act_gen(gid), self.mat(kap))
                b = linalg.mat_mul(F, self.mat(tgt), self.src.act_gen(gid))
                if not linalg.mat_eq(F, a, b):
                    return False
        return True


def _homogeneous_nullspace(F, mat, col_degs):
    """Right kernel with a homogeneous basis (columns grouped by degree)."""
    if not mat or not mat[0]:
        out = []
        for i in range(len(col_degs)):
            v = [F.zero] * len(col_degs)
            v[i] = F.one
            out.append(v)
        return out
    out = []
    for d in sorted(set(col_degs)):
        cols = [c for c, cd in enumerate(col_degs) if cd == d]
        sub = [[row[c] for c in cols] for row in mat]
        for v in linalg.nullspace(F, sub):
            w = [F.zero] * len(col_degs)
            for c, x in zip(cols, v):
                w[c] = x
            out.append(w)
    return out


def kernel_module(phi):
    """Kernel of a module map, with its inclusion vectors.

    Returns (K, incl) where incl maps K-basis columns into phi.src.
    """
    alg = phi.src.alg
    F = alg.F
    basis = {}
    for kap in phi.src.blocks:
        degs = phi.src.blocks[kap]
        vecs = _homogeneous_nullspace(F, phi.mat(kap), degs)
        if vecs:
            basis[kap] = vecs
    blocks = {}
    solvers = {}
    for kap, vecs in basis.items():
        degs = phi.src.blocks[kap]
        blocks[kap] = []
        solvers[kap] = linalg.SpanSolver(F, len(degs))
        for t, v in enumerate(vecs):
            nz = [i for i, x in enumerate(v) if not F.is_zero(x)]
            d = {degs[i] for i in nz}
            assert len(d) == 1
            blocks[kap].append(d.pop())
            ok = solvers[kap].add(v, t)
            assert ok
    action = {}
    for kap, vecs in basis.items():
        for gid in alg.all_generators(kap):
            tgt = alg.gen_target(gid)
            tvecs = basis.get(tgt, [])
            mat = linalg.zeros(F, len(tvecs), len(vecs))
            gm = phi.src.act_gen(gid)
            for c, v in enumerate(vecs):
                w = linalg.mat_vec(F, gm, v)
                if all(F.is_zero(x) for x in w):
                    continue
                coords = solvers[tgt].express(w) if tgt in solvers else None
                assert coords is not None, "kernel not generator stable?"
                for t, x in coords.items():
                    mat[t][c] = x
            action[gid] = mat
    K = GradedModule(alg, blocks, action, "ker(%s)" % phi.tgt.name)
    return K, basis


def quotient_module(M, sub_vectors):
    """Quotient of M by the span of homogeneous vectors (per block).

    Returns (Q, proj) with proj the blockwise projection matrices.
    The span must be generator stable; this is asserted.
    """
    alg = M.alg
    F = alg.F
    keep = {}
    reducers = {}
    for kap in M.blocks:
        vecs = sub_vectors.get(kap, [])
        if not vecs:
            keep[kap] = list(range(M.dim(kap)))
            reducers[kap] = None
            continue
        R, pivots = linalg.rref(F, [v[:] for v in vecs])
        pivset = set(pivots)
        keep[kap] = [c for c in range(M.dim(kap)) if c not in pivset]
        reducers[kap] = (R, pivots)
    proj = {}
    blocks = {}
    for kap in M.blocks:
        cols = keep[kap]
        blocks[kap] = [M.blocks[kap][c] for c in cols]
        mat = linalg.zeros(F, len(cols), M.dim(kap))
        for r, c in enumerate(cols):
            mat[r][c] = F.one
        red = reducers[kap]
        if red is not None:
            R, pivots = red
            for rr, pc in enumerate(pivots):
                # e_pc = -sum_{c not pivot} R[rr][c] e_c in the quotient
                for r, c in enumerate(cols):
                    mat[r][pc] = F.neg(R[rr][c])
        proj[kap] = mat
    action = {}
    for kap in blocks:
        if not blocks[kap]:
            continue
        for gid in alg.all_generators(kap):
            tgt = alg.gen_target(gid)
            if tgt not in blocks or not blocks[tgt]:
                continue
            gm = M.act_gen(gid)
            sec = linalg.zeros(F, M.dim(kap), len(keep[kap]))
            for r, c in enumerate(keep[kap]):
                sec[c][r] = F.one
            mat = linalg.mat_mul(F, proj[tgt], linalg.mat_mul(F, gm, sec))
            action[gid] = mat
    blocks = {k: v for k, v in blocks.items() if v}
    Q = GradedModule(alg, blocks, action, M.name + "/sub")
    return Q, proj


# ---------------- cellular homological data ----------------

class CellStructure:
    """Cell modules, Gram forms, simples and the algebra radical."""

    def __init__(self, alg):
        self.alg = alg
        self.partitions = box_partitions(alg.l, alg.k)
        self.cell_info = {}
        for lam in self.partitions:
            bds = backdrops_on(lam, alg.l)
            self.cell_info[lam] = bds
        self._build_cell_actions()
        self._build_gram()
        self._build_simples()
        self._build_radical()
        self._check_projective_tops()

    # -- cell module W(lam): basis = backdrops on lam
    def _build_cell_actions(self):
        alg = self.alg
        cells = alg.cellular_basis()
        index_of = {}
        for cv in cells:
            index_of[(cv.S, cv.T)] = cv.index
        self._cell_index = index_of
        self.cell_action = {}
        self.cell_degs = {}
        for lam, bds in self.cell_info.items():
            T0 = bds[0]
            dT0 = sum(alg.gen_degree(g)
                      for g in alg.backdrop_element(T0).word)
            # degree of S in W(lam) is deg B_S = deg C_{S,T0} - deg B_{T0}
            self.cell_degs[lam] = [cells[index_of[(S, T0)]].degree - dT0
                                   for S in bds]
            pos = {S: i for i, S in enumerate(bds)}
            acts = {}
            for S in bds:
                i = index_of[(S, T0)]
                for gid in alg.all_generators(cells[i].tgt):
                    g = alg.gen(gid)
                    prod = g * cells[i].elt
                    col = {}
                    if not prod.is_zero():
                        for j, c in alg.express(prod).items():
                            cj = cells[j]
                            if cj.T == T0 and cj.partition == lam:
                                col[pos[cj.S]] = c
                    acts.setdefault(gid, {})[pos[S]] = col
            self.cell_action[lam] = acts

    def cell_module(self, lam):
        """W(lam) as a GradedModule (basis: backdrops, grouped by top)."""
        alg = self.alg
        bds = self.cell_info[lam]
        cells = alg.cellular_basis()
        T0 = bds[0]
        tops = [cells[self._cell_index[(S, T0)]].tgt for S in bds]
        degS = self.cell_degs[lam]
        by_block = {}
        for i, _S in enumerate(bds):
            by_block.setdefault(tops[i], []).append(i)
        blocks = {kap: [degS[i] for i in idx] for kap, idx in by_block.items()}
        F = alg.F
        action = {}
        for kap, idx in by_block.items():
            for gid in alg.all_generators(kap):
                tgt = alg.gen_target(gid)
                tidx = by_block.get(tgt, [])
                mat = linalg.zeros(F, len(tidx), len(idx))
                cols = self.cell_action[lam].get(gid, {})
                for c, i in enumerate(idx):
                    for p, x in cols.get(i, {}).items():
                        mat[tidx.index(p)][c] = x
                action[gid] = mat
        W = GradedModule(alg, blocks, action, "W%s" % (lam,))
        W.backdrop_order = by_block
        W.backdrops = bds
        return W

    def _build_gram(self):
        alg = self.alg
        cells = alg.cellular_basis()
        self.gram = {}
        for lam, bds in self.cell_info.items():
            S0 = bds[0]
            n = len(bds)
            G = [[alg.F.zero] * n for _ in range(n)]
            i_target = self._cell_index[(S0, S0)]
            for a, Tb in enumerate(bds):
                ia = self._cell_index[(S0, Tb)]
                for b, Ub in enumerate(bds):
                    jb = self._cell_index[(Ub, S0)]
                    coords = alg.cell_product(ia, jb)
                    G[a][b] = coords.get(i_target, alg.F.zero)
            self.gram[lam] = G

    def _build_simples(self):
        """L(lam) = W(lam) / rad(Gram form)."""
        self.simples = {}
        self.simple_profile = {}
        alg = self.alg
        F = alg.F
        for lam in self.partitions:
            W = self.cell_module(lam)
            G = self.gram[lam]
            # Gram pairs degree d with degree -d, so per-degree kernels give
            # a homogeneous basis of the form radical.
            null = _homogeneous_nullspace(F, G, self.cell_degs[lam])
            pos_flat = []
            for kap, idx in W.backdrop_order.items():
                for local, i in enumerate(idx):
                    pos_flat.append((kap, local, i))
            sub = {}
            for v in null:
                per = {}
                for (kap, local, i) in pos_flat:
                    per.setdefault(kap, [F.zero] * len(W.backdrop_order[kap]))
                    per[kap][local] = v[i]
                for kap, vec in per.items():
                    if any(not F.is_zero(x) for x in vec):
                        sub.setdefault(kap, []).append(vec)
            L, _ = quotient_module(W, sub)
            L.name = "L%s" % (lam,)
            assert not L.is_zero(), "cell %s has zero simple" % (lam,)
            self.simples[lam] = L
            self.simple_profile[lam] = L.profile()

    def _build_radical(self):
        """Radical basis per block: joint annihilator of the simples."""
        alg = self.alg
        F = alg.F
        self.radical = {}
        by_block = alg.cell_blocks()
        for block, idx in by_block.items():
            rows = []
            for lam in self.partitions:
                L = self.simples[lam]
                dt, ds = L.dim(block[0]), L.dim(block[1])
                if dt == 0 or ds == 0:
                    continue
                mats = [L.act_cell(i) for i in idx]
                for r in range(dt):
                    for c in range(ds):
                        rows.append([m[r][c] for m in mats])
            if rows:
                null = linalg.nullspace(F, rows)
            else:
                null = [[F.one if i == j else F.zero for j in range(len(idx))]
                        for i in range(len(idx))]
            vecs = []
            for v in null:
                vecs.append({idx[i]: x for i, x in enumerate(v)
                             if not F.is_zero(x)})
            if vecs:
                self.radical[block] = vecs

    def radical_dim(self):
        return sum(len(v) for v in self.radical.values())

    def _check_projective_tops(self):
        """P_{kappa_bot(lam)} must be the projective cover of L(lam)."""
        alg = self.alg
        for lam in self.partitions:
            kap = kappa_bottom(lam, alg.l)
            P = projective(alg, kap)
            T = top_module(self, P)
            prof = T.profile()
            expected = {(k2, d): v for (k2, d), v in
                        self.simple_profile[lam].items()}
            assert prof == expected, \
                "P%s top is not L%s: %s vs %s" % (kap, lam, prof, expected)


def cell_structure(alg):
    data = getattr(alg, "_cell_structure", None)
    if data is None:
        data = alg._cell_structure = CellStructure(alg)
    return data


def radical_submodule(cs, M):
    """Spanning vectors of rad(A) . M, per block."""
    alg = cs.alg
    F = alg.F
    out = {}
    for (tgt, src), rvecs in cs.radical.items():
        if M.dim(src) == 0 or M.dim(tgt) == 0:
            continue
        for coords in rvecs:
            mat = M.act_coords(coords, tgt, src)
            for c in range(M.dim(src)):
                col = [mat[r][c] for r in range(M.dim(tgt))]
                if any(not F.is_zero(x) for x in col):
                    out.setdefault(tgt, []).append(col)
    return out


def top_module(cs, M):
    sub = radical_submodule(cs, M)
    T, proj = quotient_module(M, sub)
    T.name = "top(%s)" % M.name
    T.top_proj = proj
    return T


def module_cover(cs, M):
    """Minimal projective cover of M.

    Returns (summands, gen_images) where summands is a list of
    (kappa, shift) and gen_images[i] is the image in M of the i-th
    summand's generator, as a block vector (kappa, column).
    """
    alg = cs.alg
    F = alg.F
    T = top_module(cs, M)
    if T.is_zero():
        return [], []
    rem = dict(T.profile())
    order = sorted(cs.partitions, key=lambda lam: sum(lam))
    plan = []  # (lam, shift, count)
    for lam in order:
        kap = kappa_bottom(lam, alg.l)
        degs = sorted({d for (k2, d) in rem if k2 == kap and rem[(k2, d)] > 0})
        for d in degs:
            m = rem.get((kap, d), 0)
            if m <= 0:
                continue
            plan.append((lam, d, m))
            for (k2, dd), cnt in cs.simple_profile[lam].items():
                key = (k2, dd + d)
                rem[key] = rem.get(key, 0) - m * cnt
    assert all(v == 0 for v in rem.values()), \
        "cover peeling failed: %s" % {k: v for k, v in rem.items() if v}
    covered = {kap: linalg.SpanSolver(F, T.dim(kap)) for kap in T.blocks}
    summands = []
    gen_images = []
    cellsby = alg.cell_blocks()
    for lam, d, m in plan:
        kap = kappa_bottom(lam, alg.l)
        degs = T.blocks[kap]
        slice_cols = [i for i, dd in enumerate(degs) if dd == d]
        picked = 0
        for c in slice_cols:
            if picked == m:
                break
            v = [F.zero] * len(degs)
            v[c] = F.one
            if covered[kap].contains(v):
                continue
            # lift v from top(M) to M through the projection
            proj = T.top_proj[kap]
            lift = linalg.solve(F, proj, v)
            assert lift is not None
            summands.append((kap, d))
            gen_images.append((kap, lift))
            # the cell vectors span the algebra, so A.v = span{C_i . v}
            covered[kap].add(v, object())
            for (tgt, src), idxs in cellsby.items():
                if src != kap or T.dim(tgt) == 0:
                    continue
                for i in idxs:
                    w = linalg.mat_vec(F, T.act_cell(i), v)
                    if any(not F.is_zero(x) for x in w):
                        covered[tgt].add(w, object())
            picked += 1
        assert picked == m, "could not realize cover multiplicity"
    for kap in T.blocks:
        assert covered[kap].rank() == T.dim(kap), "cover is not surjective"
    return summands, gen_images


def cover_map(cs, M, summands, gen_images):
    """The cover as a ModuleMap from the direct sum of projectives."""
    alg = cs.alg
    F = alg.F
    mods = [projective(alg, kap, s) for kap, s in summands]
    P = direct_sum(alg, mods) if mods else GradedModule(alg, {}, {}, "0")
    mats = {kap: linalg.zeros(F, M.dim(kap), P.dim(kap)) for kap in M.blocks}
    for t, ((kap, _s), (bk, vec)) in enumerate(zip(summands, gen_images)):
        assert bk == kap
        mod = mods[t]
        rng = P.sum_ranges[t]
        for mu, idxs in mod.basis_cells.items():
            if mu not in mats:
                continue
            base = rng[mu][0]
            for loc, i in enumerate(idxs):
                img = linalg.mat_vec(F, M.act_cell(i), vec)
                for r, x in enumerate(img):
                    mats[mu][r][base + loc] = x
    phi = ModuleMap(P, M, mats)
    phi.summands = summands
    phi.sum_module = P
    phi.components = mods
    return phi
