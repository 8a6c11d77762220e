"""Finite dimensional right modules over a computed algebra.

A ``RightModule`` is a based bigraded module: each basis vector carries
a vertex (its weight) and a bidegree, and every arrow acts by a matrix
in the basis (row i holds the image of basis vector i).  Canonical
constructors build simples, projectives e_x A, injectives D(A e_x),
and, over a quasi-hereditary cover, standard and costandard modules
from the partial order on vertices.  On top of that live projective
covers, minimal bigraded resolutions, Hom spaces, cochain complexes
computing Ext, filtration by standard modules, and the duality to the
opposite algebra.

Conventions.  Module maps are matrices acting on row vectors, so
``compose(f, g)`` multiplies ``f.matrix * g.matrix`` and applies f
first.  Duality negates bidegrees: the socle of an injective sits in
bidegree (0, 0) and everything else below.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix
from .quiver import OrderData, build_quiver, order_data
from .algebra import AlgebraInstance, Element, Path

ZERO = Fraction(0)
ONE = Fraction(1)


class RightModule:
    """A based right module.  ``vertices[i]`` and ``bidegrees[i]``
    describe basis vector i; ``action[arrow]`` is the dim x dim matrix
    of the right action."""

    def __init__(self, algebra, vertices, bidegrees, action, label=""):
        self.algebra = algebra
        self.vertices = tuple(vertices)
        self.bidegrees = tuple(tuple(d) for d in bidegrees)
        if len(self.vertices) != len(self.bidegrees):
            raise ValueError("vertex and bidegree lists differ in length")
        self.action = dict(action)
        self.label = label

    @property
    def dim(self):
        return len(self.vertices)

    def act(self, arrow) -> Matrix:
        m = self.action.get(arrow)
        if m is None:
            raise KeyError(f"no action stored for arrow {arrow}")
        return m

    def zero_vector(self):
        return [ZERO] * self.dim

    def act_path(self, row, path: Path):
        if path.length == 0:
            return [c if self.vertices[i] == path.source else ZERO
                    for i, c in enumerate(row)]
        out = list(row)
        for a in path.arrows:
            out = self.act(a).mul_row(out)
        return out

    def act_element(self, row, elt: Element):
        out = self.zero_vector()
        for p, c in elt.terms.items():
            img = self.act_path(row, p)
            for i, v in enumerate(img):
                out[i] += c * v
        return out

    def blocks(self, graded=True):
        """Indices of basis vectors grouped by (vertex, bidegree), or by
        vertex alone."""
        out = {}
        for i, (v, d) in enumerate(zip(self.vertices, self.bidegrees)):
            key = (v, d) if graded else v
            out.setdefault(key, []).append(i)
        return out

    def graded_dims(self):
        return {k: len(ix) for k, ix in sorted(self.blocks().items(),
                                               key=lambda kv: _block_key(kv[0]))}

    def weight_dims(self):
        return {k: len(ix) for k, ix in self.blocks(graded=False).items()}

    def check(self):
        """Validate weight compatibility, grading, and the relations."""
        pres = self.algebra.presentation
        for a in pres.arrows:
            m = self.act(a)
            if m.nrows != self.dim or m.ncols != self.dim:
                raise AssertionError(f"bad action shape for {a}")
            for i in range(self.dim):
                for j in range(self.dim):
                    if not m.data[i][j]:
                        continue
                    if self.vertices[i] != a.source or self.vertices[j] != a.target:
                        raise AssertionError(f"action of {a} breaks weights")
                    db = tuple(x + y for x, y in zip(self.bidegrees[i], a.bidegree))
                    if self.bidegrees[j] != db:
                        raise AssertionError(f"action of {a} breaks the grading")
        for r in pres.relations:
            for i in range(self.dim):
                row = [ONE if k == i else ZERO for k in range(self.dim)]
                img = self.act_element(row, r)
                if any(img):
                    raise AssertionError(f"relation {r!r} not satisfied")
        return True

    def __repr__(self):
        tag = f" {self.label}" if self.label else ""
        return f"RightModule(dim {self.dim}{tag})"


def _block_key(key):
    v, d = key
    return ((v if isinstance(v, tuple) else (v,)), d)


@dataclass
class ModuleMap:
    """A module map; ``matrix`` row i is the image of source basis i."""

    source: RightModule
    target: RightModule
    matrix: Matrix

    def __post_init__(self):
        if (self.matrix.nrows, self.matrix.ncols) != (self.source.dim, self.target.dim):
            raise ValueError("map shape does not match modules")

    def apply(self, row):
        return self.matrix.mul_row(row)

    def compose(self, g: "ModuleMap") -> "ModuleMap":
        """self first, then g."""
        if g.source is not self.target and g.source.dim != self.target.dim:
            raise ValueError("maps do not compose")
        return ModuleMap(self.source, g.target, self.matrix * g.matrix)

    def is_module_map(self) -> bool:
        for a in self.source.algebra.presentation.arrows:
            if self.source.act(a) * self.matrix != self.matrix * self.target.act(a):
                return False
        return True

    def bidegree(self):
        """The uniform (flat, sharp) shift of the map, None if mixed."""
        shift = None
        for i in range(self.matrix.nrows):
            for j in range(self.matrix.ncols):
                if self.matrix.data[i][j]:
                    d = tuple(b - a for a, b in zip(self.source.bidegrees[i],
                                                    self.target.bidegrees[j]))
                    if shift is None:
                        shift = d
                    elif shift != d:
                        return None
        return shift or (0, 0)

    def kernel_rows(self):
        return graded_rows(self.source, self.matrix.left_kernel_basis().data)

    def rank(self):
        return self.matrix.rank()

    def is_injective(self):
        return self.rank() == self.source.dim

    def is_surjective(self):
        return self.rank() == self.target.dim

    def __repr__(self):
        return f"ModuleMap({self.source.dim} -> {self.target.dim})"


# ---------------------------------------------------------------------------
# block-aware row reduction


def graded_rows(module: RightModule, rows):
    """Split spanning rows into (vertex, bidegree) blocks and reduce
    each block.  Certifies the span is a graded subspace: splitting must
    not change the total rank."""
    if not rows:
        return []
    total = Matrix([list(r) for r in rows], ncols=module.dim).rank()
    per_block = {}
    for r in rows:
        seen = {}
        for i, c in enumerate(r):
            if c:
                key = (module.vertices[i], module.bidegrees[i])
                seen.setdefault(key, [ZERO] * module.dim)[i] = c
        for key, comp in seen.items():
            per_block.setdefault(key, []).append(comp)
    out = []
    for key in sorted(per_block, key=_block_key):
        _, red = Matrix(per_block[key], ncols=module.dim).rref()
        out.extend(row for row in red.data if any(row))
    if len(out) != total:
        raise AssertionError("span is not a graded subspace")
    return out


def _reduce_against(row, echelon):
    """Reduce ``row`` against rref rows keyed by pivot column."""
    out = list(row)
    for pc, er in echelon.items():
        c = out[pc]
        if c:
            for j, v in enumerate(er):
                if v:
                    out[j] -= c * v
    return out


def _echelon_index(rows):
    """rref rows as a dict pivot column -> row."""
    out = {}
    if not rows:
        return out
    _, red = Matrix([list(r) for r in rows]).rref()
    for r in red.data:
        for j, c in enumerate(r):
            if c:
                out[j] = r
                break
    return out


# ---------------------------------------------------------------------------
# canonical modules


def projective_module(a: AlgebraInstance, x, shift=(0, 0)) -> RightModule:
    cache = getattr(a, "_projective_cache", None)
    if cache is None:
        cache = a._projective_cache = {}
    if shift == (0, 0) and x in cache:
        return cache[x]
    paths = sorted((p for p in a.basis() if p.source == x), key=Path.sort_key)
    if not paths:
        raise ValueError(f"no such vertex: {x}")
    index = {p: i for i, p in enumerate(paths)}
    dim = len(paths)
    action = {}
    for arr in a.presentation.arrows:
        m = Matrix.zero(dim, dim)
        for p, i in index.items():
            if p.target != arr.source:
                continue
            img = a.reduce_path(Path(p.source, p.arrows + (arr,)))
            for q, c in img.terms.items():
                m.data[i][index[q]] = c
        action[arr] = m
    bidegrees = [tuple(u + s for u, s in zip(p.bidegree, shift)) for p in paths]
    mod = RightModule(a, [p.target for p in paths], bidegrees, action,
                      label=f"P[{x}]")
    mod.basis_paths = tuple(paths)
    if shift == (0, 0):
        cache[x] = mod
    return mod


def simple_module(a: AlgebraInstance, x, shift=(0, 0)) -> RightModule:
    if x not in a.presentation.vertices:
        raise ValueError(f"no such vertex: {x}")
    action = {arr: Matrix.zero(1, 1) for arr in a.presentation.arrows}
    return RightModule(a, [x], [shift], action, label=f"S[{x}]")


def free_module(a: AlgebraInstance, gens) -> RightModule:
    """Direct sum of shifted projectives, one per (vertex, shift) pair.
    Records ``summands`` as (vertex, shift, start, stop) slices."""
    parts = [projective_module(a, v, shift) for v, shift in gens]
    mod = direct_sum(a, parts)
    summands = []
    at = 0
    for (v, shift), part in zip(gens, parts):
        summands.append((v, tuple(shift), at, at + part.dim))
        at += part.dim
    mod.summands = summands
    mod.label = "F[" + ", ".join(f"{v}<{s}>" for v, s, _, _ in summands) + "]"
    return mod


def direct_sum(a: AlgebraInstance, parts) -> RightModule:
    vertices = [v for m in parts for v in m.vertices]
    bidegrees = [d for m in parts for d in m.bidegrees]
    dim = len(vertices)
    action = {}
    for arr in a.presentation.arrows:
        m = Matrix.zero(dim, dim)
        at = 0
        for part in parts:
            pm = part.act(arr)
            for i in range(part.dim):
                for j in range(part.dim):
                    if pm.data[i][j]:
                        m.data[at + i][at + j] = pm.data[i][j]
            at += part.dim
        action[arr] = m
    return RightModule(a, vertices, bidegrees, action, label="sum")


def dualize(m: RightModule) -> RightModule:
    """The vector space dual as a module over the opposite algebra,
    with transposed actions and negated bidegrees."""
    op = m.algebra.opposite()
    action = {}
    for a in m.algebra.presentation.arrows:
        op_arrow = op.presentation.arrow(a.target, a.label)
        action[op_arrow] = m.act(a).transpose()
    bidegrees = [tuple(-c for c in d) for d in m.bidegrees]
    return RightModule(op, m.vertices, bidegrees, action,
                       label=f"D({m.label})" if m.label else "D")


def dualize_map(f: ModuleMap) -> ModuleMap:
    return ModuleMap(dualize(f.target), dualize(f.source), f.matrix.transpose())


def shift_module(m: RightModule, shift) -> RightModule:
    bidegrees = [tuple(c + s for c, s in zip(d, shift)) for d in m.bidegrees]
    out = RightModule(m.algebra, m.vertices, bidegrees, m.action,
                      label=f"{m.label}<{shift}>" if m.label else "")
    if hasattr(m, "basis_paths"):
        out.basis_paths = m.basis_paths
    return out


def injective_module(a: AlgebraInstance, x, shift=(0, 0)) -> RightModule:
    mod = dualize(projective_module(a.opposite(), x))
    mod.label = f"I[{x}]"
    return shift_module(mod, shift) if shift != (0, 0) else mod


def left_mult_map(a: AlgebraInstance, g: Element) -> ModuleMap:
    """Left multiplication by g in e_u A e_v, as a map P_v -> P_u."""
    sig = {(p.source, p.target) for p in g.terms}
    if len(sig) != 1:
        raise ValueError("element must be weight-homogeneous")
    u, v = next(iter(sig))
    src = projective_module(a, v)
    tgt = projective_module(a, u)
    tindex = {p: i for i, p in enumerate(tgt.basis_paths)}
    m = Matrix.zero(src.dim, tgt.dim)
    for i, p in enumerate(src.basis_paths):
        img = a.normal_form(g.free_mul(Element.of_path(p)))
        for q, c in img.terms.items():
            m.data[i][tindex[q]] = c
    return ModuleMap(src, tgt, m)


def algebra_order(a: AlgebraInstance) -> OrderData:
    """The cover's partial order on vertices, derived from the
    presentation parameters."""
    if a.presentation.kind not in ("cover", "borel"):
        raise ValueError(
            f"no partial order for a {a.presentation.kind!r} presentation")
    n, s = a.presentation.params["n"], a.presentation.params["s"]
    return order_data(build_quiver(n, s))


def generated_submodule(m: RightModule, rows):
    """Row basis of the submodule generated by the given rows."""
    ech = {}
    work = [list(r) for r in rows]
    basis = []
    while work:
        r = _reduce_against(work.pop(), ech)
        piv = next((j for j, c in enumerate(r) if c), None)
        if piv is None:
            continue
        inv = ONE / r[piv]
        r = [c * inv for c in r]
        ech[piv] = r
        basis.append(r)
        for a in m.algebra.presentation.arrows:
            img = m.act(a).mul_row(r)
            if any(img):
                work.append(img)
    return graded_rows(m, basis)


def largest_stable_subspace(m: RightModule, allowed):
    """Row basis of the largest submodule supported on the coordinates
    in ``allowed`` (a set of basis indices)."""
    rows = []
    for i in sorted(allowed):
        r = m.zero_vector()
        r[i] = ONE
        rows.append(r)
    rows = graded_rows(m, rows)
    while True:
        span = _echelon_index(rows)
        if not rows:
            return []
        resid = []
        for r in rows:
            rr = []
            for a in m.algebra.presentation.arrows:
                rr.extend(_reduce_against(m.act(a).mul_row(r), span))
            resid.append(rr)
        kern = Matrix(resid, ncols=len(resid[0])).left_kernel_basis()
        if kern.nrows == len(rows):
            return rows
        base = Matrix([list(r) for r in rows], ncols=m.dim)
        rows = graded_rows(m, (kern * base).data)


def submodule(m: RightModule, rows, label=""):
    """The submodule spanned by the rows, with its inclusion map.
    Raises if the span is not action-stable."""
    rows = graded_rows(m, rows)
    sub_dim = len(rows)
    base = Matrix([list(r) for r in rows], ncols=m.dim) if rows else Matrix.zero(0, m.dim)
    vertices, bidegrees = [], []
    for r in rows:
        i = next(j for j, c in enumerate(r) if c)
        vertices.append(m.vertices[i])
        bidegrees.append(m.bidegrees[i])
    action = {}
    basis_t = base.transpose()
    for a in m.algebra.presentation.arrows:
        mat = Matrix.zero(sub_dim, sub_dim)
        for i, r in enumerate(rows):
            img = m.act(a).mul_row(r)
            coeffs = basis_t.solve(img)
            if coeffs is None:
                raise AssertionError("rows do not span a submodule")
            mat.data[i] = coeffs
        action[a] = mat
    sub = RightModule(m.algebra, vertices, bidegrees, action, label=label)
    incl = ModuleMap(sub, m, base)
    return sub, incl


def quotient_module(m: RightModule, rows, label=""):
    """The quotient by the submodule spanned by the rows, with the
    projection map."""
    rows = graded_rows(m, rows)
    span = _echelon_index(rows)
    keep = [i for i in range(m.dim) if i not in span]
    proj = Matrix.zero(m.dim, len(keep))
    pos = {i: k for k, i in enumerate(keep)}
    for i in range(m.dim):
        e = m.zero_vector()
        e[i] = ONE
        e = _reduce_against(e, span)
        for j, c in enumerate(e):
            if c:
                proj.data[i][pos[j]] = c
    action = {}
    for a in m.algebra.presentation.arrows:
        mat = Matrix.zero(len(keep), len(keep))
        for k, i in enumerate(keep):
            img = _reduce_against(list(m.act(a).data[i]), span)
            for j, c in enumerate(img):
                if c:
                    mat.data[k][pos[j]] = c
        action[a] = mat
    quot = RightModule(m.algebra, [m.vertices[i] for i in keep],
                       [m.bidegrees[i] for i in keep], action, label=label)
    pmap = ModuleMap(m, quot, proj)
    if not pmap.is_module_map():
        raise AssertionError("rows do not span a submodule")
    return quot, pmap


def standard_module(a: AlgebraInstance, x, order: OrderData = None) -> RightModule:
    """Largest quotient of P_x whose composition factors have weight
    at most x."""
    order = order or algebra_order(a)
    proj = projective_module(a, x)
    bad = [i for i, v in enumerate(proj.vertices) if not order.leq(v, x)]
    rows = []
    for i in bad:
        r = proj.zero_vector()
        r[i] = ONE
        rows.append(r)
    gen = generated_submodule(proj, rows) if rows else []
    quot, _ = quotient_module(proj, gen, label=f"Delta[{x}]")
    return quot


def costandard_module(a: AlgebraInstance, x, order: OrderData = None) -> RightModule:
    """Largest submodule of I_x whose composition factors have weight
    at most x."""
    order = order or algebra_order(a)
    inj = injective_module(a, x)
    allowed = {i for i, v in enumerate(inj.vertices) if order.leq(v, x)}
    rows = largest_stable_subspace(inj, allowed)
    sub, _ = submodule(inj, rows, label=f"Nabla[{x}]")
    return sub


def canonical_module(a: AlgebraInstance, kind: str, x, shift=(0, 0)) -> RightModule:
    if kind == "simple":
        return simple_module(a, x, shift)
    if kind == "projective":
        return projective_module(a, x, shift)
    if kind == "injective":
        return injective_module(a, x, shift)
    if kind == "standard":
        mod = standard_module(a, x)
    elif kind == "costandard":
        mod = costandard_module(a, x)
    else:
        raise ValueError(f"unknown module kind: {kind}")
    return shift_module(mod, shift) if shift != (0, 0) else mod


# ---------------------------------------------------------------------------
# socle, top, hom


def socle_rows(m: RightModule):
    mats = [m.act(a) for a in m.algebra.presentation.arrows]
    if not mats:
        return graded_rows(m, [[ONE if i == j else ZERO for j in range(m.dim)]
                               for i in range(m.dim)])
    stacked = mats[0]
    for mat in mats[1:]:
        stacked = stacked.hstack(mat)
    return graded_rows(m, stacked.left_kernel_basis().data)


def top_generators(m: RightModule):
    """Deterministic representatives of m / m*rad: a list of rows, each
    a coordinate vector, with their (vertex, bidegree)."""
    rad = []
    for a in m.algebra.presentation.arrows:
        rad.extend(m.act(a).data)
    rad = [r for r in rad if any(r)]
    span = _echelon_index(graded_rows(m, rad)) if rad else {}
    gens = []
    for i in range(m.dim):
        if i in span:
            continue
        r = m.zero_vector()
        r[i] = ONE
        gens.append((m.vertices[i], m.bidegrees[i], r))
    return gens


def socle_top(m: RightModule):
    """(socle, top) as sorted multisets of (vertex, bidegree)."""
    soc = []
    for r in socle_rows(m):
        i = next(j for j, c in enumerate(r) if c)
        soc.append((m.vertices[i], m.bidegrees[i]))
    top = [(v, d) for v, d, _ in top_generators(m)]
    return sorted(soc, key=_block_key), sorted(top, key=_block_key)


def hom_space(m: RightModule, n: RightModule, shift=None):
    """A basis of module maps m -> n; with ``shift`` only the maps
    homogeneous of that (flat, sharp) bidegree."""
    allowed = []
    for i in range(m.dim):
        for j in range(n.dim):
            if m.vertices[i] != n.vertices[j]:
                continue
            if shift is not None:
                if tuple(b - a for a, b in zip(m.bidegrees[i], n.bidegrees[j])) \
                        != tuple(shift):
                    continue
            allowed.append((i, j))
    if not allowed:
        return []
    pos = {p: k for k, p in enumerate(allowed)}
    equations = []
    for a in m.algebra.presentation.arrows:
        am, an = m.act(a), n.act(a)
        for i in range(m.dim):
            for j in range(n.dim):
                row = [ZERO] * len(allowed)
                touched = False
                for (k, jj), col in pos.items():
                    if jj == j and am.data[i][k]:
                        row[col] += am.data[i][k]
                        touched = True
                for (ii, l), col in pos.items():
                    if ii == i and an.data[l][j]:
                        row[col] -= an.data[l][j]
                        touched = True
                if touched:
                    equations.append(row)
    if equations:
        sols = Matrix(equations, ncols=len(allowed)).kernel_basis()
    else:
        sols = Matrix.identity(len(allowed))
    maps = []
    for srow in sols.data:
        mat = Matrix.zero(m.dim, n.dim)
        for (i, j), col in pos.items():
            mat.data[i][j] = srow[col]
        maps.append(ModuleMap(m, n, mat))
    return maps


def is_isomorphic(m: RightModule, n: RightModule, graded=True):
    """Certify an isomorphism or its impossibility.

    Fast invariants (dim, graded block dims) decide the negative case;
    otherwise a seeded search through the Hom space must produce an
    invertible map.  Raises if the invariants match but no isomorphism
    is found, rather than guessing."""
    if m.dim != n.dim:
        return False
    if graded and m.graded_dims() != n.graded_dims():
        return False
    if not graded and m.weight_dims() != n.weight_dims():
        return False
    ms, mt = socle_top(m)
    ns, nt = socle_top(n)
    if graded and (ms, mt) != (ns, nt):
        return False
    if not graded:
        strip = lambda pairs: sorted(_block_key((v, ()))[0] for v, _ in pairs)
        if strip(ms) != strip(ns) or strip(mt) != strip(nt):
            return False
    maps = hom_space(m, n, shift=(0, 0) if graded else None)
    for f in maps:
        if f.rank() == m.dim:
            return True
    rng = random.Random(0)
    for _ in range(500):
        mat = Matrix.zero(m.dim, n.dim)
        for f in maps:
            c = Fraction(rng.randint(-3, 3))
            if c:
                mat = mat + f.matrix.scale(c)
        if mat.rank() == m.dim:
            return True
    if not maps:
        return False
    raise RuntimeError("isomorphism search inconclusive")


# ---------------------------------------------------------------------------
# projective covers and minimal resolutions


def projective_cover(m: RightModule):
    """The projective cover (F, F -> m) with one shifted projective per
    top generator."""
    gens = top_generators(m)
    free = free_module(m.algebra, [(v, d) for v, d, _ in gens])
    mat = Matrix.zero(free.dim, m.dim)
    for (v, d, rep), (_, _, start, stop) in zip(gens, free.summands):
        proj_paths = projective_module(m.algebra, v).basis_paths
        for local, p in enumerate(proj_paths):
            img = m.act_path(rep, p)
            for j, c in enumerate(img):
                mat.data[start + local][j] = c
    cover = ModuleMap(free, m, mat)
    if not cover.is_surjective():
        raise AssertionError("projective cover is not surjective")
    return free, cover


@dataclass
class Resolution:
    """A resolution: for ``direction == 'projective'``,
    ``maps[0]: frees[0] -> module`` and ``maps[i]: frees[i] ->
    frees[i-1]``; for ``direction == 'injective'``, ``augmentation:
    module -> frees[0]`` and ``maps[k]: frees[k] -> frees[k+1]``.
    ``terms[i]`` lists the (vertex, shift) summands of step i."""

    module: RightModule
    frees: list
    terms: list
    maps: list
    complete: bool
    direction: str = "projective"
    augmentation: ModuleMap = None

    @property
    def length(self):
        return len(self.frees) - 1

    def element_matrix(self, i):
        """The differential frees[i] -> frees[i-1] as a matrix of
        algebra elements; entry [j][k] is a combination of paths from
        the k-th summand vertex of step i-1 to the j-th of step i."""
        if self.direction != "projective" or i < 1:
            raise ValueError("element matrices exist for projective steps >= 1")
        f_i, f_prev, fmap = self.frees[i], self.frees[i - 1], self.maps[i]
        prev_paths = {}
        for (v, shift, start, stop) in f_prev.summands:
            prev_paths[(start, stop)] = projective_module(self.module.algebra, v).basis_paths
        out = []
        for (v, shift, start, stop) in f_i.summands:
            gen_row = fmap.matrix.data[start]
            row_elems = []
            for (pv, pshift, pstart, pstop) in f_prev.summands:
                paths = prev_paths[(pstart, pstop)]
                terms = {paths[l]: gen_row[pstart + l]
                         for l in range(pstop - pstart) if gen_row[pstart + l]}
                row_elems.append(Element(terms))
            out.append(row_elems)
        return out

    def __repr__(self):
        shape = " <- ".join(str(len(t)) for t in self.terms)
        state = "complete" if self.complete else "truncated"
        return f"Resolution({self.direction}, {state}, terms {shape})"


def minimal_resolution(m: RightModule, max_steps=None) -> Resolution:
    """The minimal bigraded projective resolution, computed by repeated
    projective covers of syzygies.  Stops after ``max_steps`` covers
    (default: algebra dimension + 1) and flags the result truncated if
    the last kernel is nonzero."""
    if max_steps is None:
        max_steps = m.algebra.dim() + 1
    frees, maps, terms = [], [], []
    free, cover = projective_cover(m)
    frees.append(free)
    maps.append(cover)
    terms.append([(v, d) for v, d, _, _ in free.summands])
    kernel = cover.kernel_rows()
    steps = 1
    while kernel:
        if steps >= max_steps:
            return Resolution(m, frees, terms, maps, complete=False)
        prev = frees[-1]
        gens = _submodule_top(prev, kernel)
        free = free_module(m.algebra, [(v, d) for v, d, _ in gens])
        mat = Matrix.zero(free.dim, prev.dim)
        for (v, d, rep), (_, _, start, stop) in zip(gens, free.summands):
            proj_paths = projective_module(m.algebra, v).basis_paths
            for local, p in enumerate(proj_paths):
                img = prev.act_path(rep, p)
                for j, c in enumerate(img):
                    mat.data[start + local][j] = c
        step = ModuleMap(free, prev, mat)
        if step.rank() != len(kernel):
            raise AssertionError("cover of syzygy is not surjective")
        frees.append(free)
        maps.append(step)
        terms.append([(v, d) for v, d, _, _ in free.summands])
        kernel = step.kernel_rows()
        steps += 1
    return Resolution(m, frees, terms, maps, complete=True)


def _submodule_top(m: RightModule, rows):
    """Top generators of the submodule of m spanned by ``rows``:
    (vertex, bidegree, representative row) triples, deterministic."""
    rad = []
    for r in rows:
        for a in m.algebra.presentation.arrows:
            img = m.act(a).mul_row(r)
            if any(img):
                rad.append(img)
    span = _echelon_index(graded_rows(m, rad)) if rad else {}
    gens = []
    for r in rows:
        resid = _reduce_against(r, span)
        piv = next((j for j, c in enumerate(resid) if c), None)
        if piv is None:
            continue
        inv = ONE / resid[piv]
        resid = [c * inv for c in resid]
        span[piv] = resid
        i = piv
        gens.append((m.vertices[i], m.bidegrees[i], resid))
    return gens


def is_linear(res: Resolution, grading="length"):
    """Whether every summand of step i sits in shift degree i, measuring
    shifts by total length or by flat degree alone."""
    if grading not in ("length", "flat"):
        raise ValueError("grading must be 'length' or 'flat'")
    failures = []
    for i, layer in enumerate(res.terms):
        for v, shift in layer:
            deg = shift[0] + shift[1] if grading == "length" else shift[0]
            if deg != i:
                failures.append((i, v, shift))
    return {"linear": not failures, "complete": res.complete,
            "failures": failures}


def gldim(a: AlgebraInstance, max_steps=None):
    """Global dimension, by resolving every simple.  Raises if any
    resolution is truncated before the kernel vanishes."""
    worst = 0
    for x in a.presentation.vertices:
        res = minimal_resolution(simple_module(a, x), max_steps=max_steps)
        if not res.complete:
            raise RuntimeError(f"resolution of the simple at {x} did not "
                               f"terminate within the step bound")
        worst = max(worst, res.length)
    return worst


# ---------------------------------------------------------------------------
# Ext via Hom cochain complexes


def hom_complex(res: Resolution, n: RightModule):
    """The cochain complex Hom(F_*, n) of a projective resolution.

    Returns (bases, diffs): bases[i] lists the Hom basis of step i as
    (summand index, n basis index, bidegree) triples, the bidegree
    being that of the n basis vector minus the generator's shift;
    diffs[i] maps step i to step i+1 (rows act on the left).
    """
    if res.direction != "projective":
        raise ValueError("hom complexes are taken over projective resolutions")
    if not res.complete:
        raise ValueError("resolution is truncated; Ext would be unreliable")
    bases = []
    for free in res.frees:
        basis = []
        for t, (v, shift, start, stop) in enumerate(free.summands):
            for j in range(n.dim):
                if n.vertices[j] == v:
                    d = tuple(b - s for b, s in zip(n.bidegrees[j], shift))
                    basis.append((t, j, d))
        bases.append(basis)
    diffs = []
    for i in range(len(res.frees) - 1):
        elems = res.element_matrix(i + 1)
        src, tgt = bases[i], bases[i + 1]
        pos = {(t, j): c for c, (t, j, _) in enumerate(tgt)}
        mat = Matrix.zero(len(src), len(tgt))
        for c0, (t, j, _) in enumerate(src):
            row = n.zero_vector()
            row[j] = ONE
            for t1 in range(len(res.frees[i + 1].summands)):
                img = n.act_element(row, elems[t1][t])
                for jj, coeff in enumerate(img):
                    if coeff:
                        mat.data[c0][pos[(t1, jj)]] = coeff
        diffs.append(mat)
    return bases, diffs


def ext_dims(res: Resolution, n: RightModule):
    """Ungraded Ext dimensions from a projective resolution."""
    bases, diffs = hom_complex(res, n)
    out = []
    for i in range(len(bases)):
        z = diffs[i].left_kernel_basis().data if i < len(diffs) \
            else [[ONE if k == j else ZERO for k in range(len(bases[i]))]
                  for j in range(len(bases[i]))]
        b = diffs[i - 1].data if i >= 1 else []
        brank = Matrix([list(r) for r in b], ncols=len(bases[i])).rank() if b else 0
        zrank = len(z) if i < len(diffs) else len(bases[i])
        out.append(zrank - brank)
    return out


def cohomology_reps(res: Resolution, n: RightModule):
    """Per homological degree: representative cocycle rows modulo
    coboundaries, with the Hom bases (for graded bookkeeping)."""
    bases, diffs = hom_complex(res, n)
    reps = []
    for i in range(len(bases)):
        dim_i = len(bases[i])
        if i < len(diffs):
            z = diffs[i].left_kernel_basis().data
        else:
            z = [[ONE if k == j else ZERO for k in range(dim_i)]
                 for j in range(dim_i)]
        span = {}
        if i >= 1 and diffs[i - 1].nrows:
            span = _echelon_index([r for r in diffs[i - 1].data if any(r)])
        level = []
        for row in z:
            resid = _reduce_against(row, span)
            piv = next((j for j, c in enumerate(resid) if c), None)
            if piv is None:
                continue
            inv = ONE / resid[piv]
            resid = [c * inv for c in resid]
            span[piv] = resid
            level.append(resid)
        reps.append(level)
    return bases, reps


def ext_bigraded_reps(res: Resolution, n: RightModule):
    """Ext split by cocycle bidegree.

    Returns (bases, levels) with bases as in hom_complex and levels[i]
    a dict bidegree -> list of representative cocycle rows (full
    width, supported on that bidegree, reduced against the coboundary
    echelon, leading coefficient one).  The Hom-complex differentials
    are verified to preserve bidegree before splitting.
    """
    bases, diffs = hom_complex(res, n)
    for i, mat in enumerate(diffs):
        for r, (_, _, dr) in enumerate(bases[i]):
            for c, (_, _, dc) in enumerate(bases[i + 1]):
                if mat.data[r][c] and dr != dc:
                    raise AssertionError("hom differential mixes bidegrees")
    levels = []
    for i in range(len(bases)):
        level = {}
        for d in sorted({dd for _, _, dd in bases[i]}):
            cols = [c for c, (_, _, dd) in enumerate(bases[i]) if dd == d]
            if i < len(diffs):
                tcols = [c for c, (_, _, dd) in enumerate(bases[i + 1])
                         if dd == d]
                sub = Matrix([[diffs[i].data[r][c] for c in tcols]
                              for r in cols], ncols=len(tcols))
                cycles = sub.left_kernel_basis().data
            else:
                cycles = [[ONE if k == j else ZERO for k in range(len(cols))]
                          for j in range(len(cols))]
            span = {}
            if i >= 1:
                rows = [r for r, (_, _, dd) in enumerate(bases[i - 1])
                        if dd == d]
                bnd = [[diffs[i - 1].data[r][c] for c in cols] for r in rows]
                span = _echelon_index([r for r in bnd if any(r)])
            reps = []
            for row in cycles:
                resid = _reduce_against(row, span)
                piv = next((j for j, c in enumerate(resid) if c), None)
                if piv is None:
                    continue
                inv = ONE / resid[piv]
                resid = [c * inv for c in resid]
                span[piv] = resid
                full = [ZERO] * len(bases[i])
                for c, v in zip(cols, resid):
                    full[c] = v
                reps.append(full)
            if reps:
                level[d] = reps
        levels.append(level)
    return bases, levels


def hom_row_to_map(res: Resolution, n: RightModule, i, basis, row) -> ModuleMap:
    """Turn a Hom-basis row at step i into the module map F_i -> n."""
    free = res.frees[i]
    mat = Matrix.zero(free.dim, n.dim)
    by_summand = {}
    for c, (t, j, _) in enumerate(basis):
        if row[c]:
            by_summand.setdefault(t, []).append((j, row[c]))
    for t, (v, shift, start, stop) in enumerate(free.summands):
        if t not in by_summand:
            continue
        gen = n.zero_vector()
        for j, c in by_summand[t]:
            gen[j] = c
        proj_paths = projective_module(n.algebra, v).basis_paths
        for local, p in enumerate(proj_paths):
            img = n.act_path(gen, p)
            for j, c in enumerate(img):
                mat.data[start + local][j] = c
    return ModuleMap(free, n, mat)


# ---------------------------------------------------------------------------
# standard filtrations and costandard coresolutions


def delta_filtration(m: RightModule, order: OrderData = None):
    """Greedy filtration by shifted standard modules.

    Returns (layers, witness): on success layers is the list of
    (vertex, shift) pairs from the deepest submodule outwards and
    witness is None; on failure layers is None and witness records the
    offending vertex with the dimension mismatch.
    """
    order = order or algebra_order(m.algebra)
    std_dim = {}
    layers = []
    current = m
    while current.dim:
        present = sorted({v for v in current.vertices}, key=_vkey_sort)
        maximal = next(x for x in present
                       if not any(order.lt(x, y) for y in present if y != x))
        gens = [(i, current.bidegrees[i]) for i, v in enumerate(current.vertices)
                if v == maximal]
        rows = []
        for i, _ in gens:
            r = current.zero_vector()
            r[i] = ONE
            rows.append(r)
        sub = generated_submodule(current, rows)
        if maximal not in std_dim:
            std_dim[maximal] = standard_module(m.algebra, maximal, order).dim
        expected = len(gens) * std_dim[maximal]
        if len(sub) != expected:
            witness = {"vertex": maximal, "copies": len(gens),
                       "submodule_dim": len(sub), "expected_dim": expected}
            return None, witness
        layers.extend((maximal, d) for _, d in gens)
        current, _ = quotient_module(current, sub)
    return layers, None


def _vkey_sort(v):
    return v if isinstance(v, tuple) else (v,)


def costandard_coresolution(a: AlgebraInstance, x) -> Resolution:
    """The finite injective coresolution of the costandard module at x
    over a cover: terms I at x, x - f_0, ... down to the K vertex of
    the chain, with maps dual to right multiplication by the index-0
    arrows.  Exactness is verified, and the kernel of the first map is
    checked to equal the costandard submodule of I_x."""
    if a.presentation.kind != "cover":
        raise ValueError("costandard coresolutions are built over covers")
    n = a.presentation.params["n"]
    f0 = (1,) + (0,) * (n - 1) + (-1,)
    chain = [x]
    while chain[-1][0] > 0:
        z = chain[-1]
        chain.append(tuple(c - d for c, d in zip(z, f0)))
    op = a.opposite()
    injectives = [shift_module(injective_module(a, z), (0, -k))
                  for k, z in enumerate(chain)]
    maps = []
    for k in range(len(chain) - 1):
        zk, znext = chain[k], chain[k + 1]
        # the index-0 arrow z_{k+1} -> z_k of the cover, in the opposite
        op_path = op.presentation.path(zk, (0,))
        lmap = left_mult_map(op, Element.of_path(op_path))
        dmat = lmap.matrix.transpose()
        maps.append(ModuleMap(injectives[k], injectives[k + 1], dmat))
    for f in maps:
        if not f.is_module_map():
            raise AssertionError("coresolution map is not a module map")
        if f.bidegree() != (0, 0):
            raise AssertionError("coresolution map is not degree zero")
    # exactness in the middle and at the end
    for k in range(len(maps)):
        ker_next = (maps[k + 1].matrix.left_kernel_basis().nrows
                    if k + 1 < len(maps) else injectives[k + 1].dim)
        if maps[k].rank() != ker_next:
            raise AssertionError(f"coresolution not exact at step {k + 1}")
    if maps and not maps[-1].is_surjective():
        raise AssertionError("coresolution not exact at the last step")
    # the kernel of the first map is exactly the costandard submodule
    nabla = costandard_module(a, x)
    if maps:
        ker = maps[0].kernel_rows()
    else:
        ker = graded_rows(injectives[0],
                          [[ONE if i == j else ZERO for j in range(injectives[0].dim)]
                           for i in range(injectives[0].dim)])
    order = algebra_order(a)
    allowed = {i for i, v in enumerate(injectives[0].vertices) if order.leq(v, x)}
    nab_rows = largest_stable_subspace(injectives[0], allowed)
    if [list(r) for r in ker] != [list(r) for r in nab_rows]:
        raise AssertionError("first kernel differs from the costandard module")
    aug = ModuleMap(nabla, injectives[0],
                    Matrix([list(r) for r in ker], ncols=injectives[0].dim)
                    if nabla.dim else Matrix.zero(0, injectives[0].dim))
    terms = [[(z, (0, -k))] for k, z in enumerate(chain)]
    return Resolution(nabla, injectives, terms, maps, complete=True,
                      direction="injective", augmentation=aug)
