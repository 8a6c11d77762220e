"""Bound quiver algebras with exact degreewise normal forms.

A ``Presentation`` is a quiver together with a list of homogeneous
relation elements.  ``compute_basis`` eliminates the relation span one
path length at a time and keeps, in each length, the paths that are not
leading terms; multiplication then reduces concatenations to this
basis.  The elimination order puts the lexicographically largest word
on the pivot, so the surviving representative of each class is the
lexicographically smallest path under the arrow order
``a_1 < a_2 < ... < a_n < a_0`` (index-0 arrows sort last).

The zigzag family lives on the translation quivers of :mod:`.quiver`:

* ``presentation_zigzag(n, s)``      relations on the weight s-1 quiver,
* ``presentation_cover(n, s)``       weight s quiver plus the extra zero
  relations ``e_z a_0 a_1`` at vertices z with z_0 = 0,
* ``presentation_borel(n, s)``       the nonzero-index subquiver,
* ``presentation_dual_conjectured``  the closed-form presentation of the
  Ext algebra of the standard modules (index-0 arrows kept, others
  reversed).

Everything is immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Matrix
from .quiver import Quiver, build_quiver, classify_vertices, displacement

ZERO = Fraction(0)
ONE = Fraction(1)

DEFAULT_MAX_LEN = 32


@dataclass(frozen=True)
class Arrow:
    """A quiver arrow.  ``label`` is the family index (int) for
    translation quivers, or a name (str) for explicit presentations.
    ``bidegree`` is the (flat, sharp) degree of the arrow."""

    source: object
    target: object
    label: object
    bidegree: tuple[int, int]


def label_key(label):
    """Sort key for arrow labels: a_1 < a_2 < ... < a_0, names after."""
    if isinstance(label, int):
        return (0, 1, 0) if label == 0 else (0, 0, label)
    return (1, str(label))


class Path:
    """A path: a source vertex and a composable tuple of arrows.

    Paths multiply left to right: in ``p * q`` the path ``p`` is
    traversed first.  The empty path at a vertex is the idempotent.
    """

    __slots__ = ("source", "arrows", "_hash")

    def __init__(self, source, arrows=()):
        self.source = source
        self.arrows = tuple(arrows)
        at = source
        for a in self.arrows:
            if a.source != at:
                raise ValueError(f"non-composable arrows at {at}: {a}")
            at = a.target
        self._hash = hash((source, self.arrows))

    @property
    def target(self):
        return self.arrows[-1].target if self.arrows else self.source

    @property
    def length(self):
        return len(self.arrows)

    @property
    def word(self):
        return tuple(a.label for a in self.arrows)

    @property
    def bidegree(self):
        fb = sum(a.bidegree[0] for a in self.arrows)
        fs = sum(a.bidegree[1] for a in self.arrows)
        return (fb, fs)

    def sort_key(self):
        return (len(self.arrows), tuple(label_key(a.label) for a in self.arrows),
                _vkey(self.source))

    def concat(self, other: "Path") -> "Path":
        if self.target != other.source:
            raise ValueError("paths do not compose")
        return Path(self.source, self.arrows + other.arrows)

    def __eq__(self, other):
        return (isinstance(other, Path) and self.source == other.source
                and self.arrows == other.arrows)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self.arrows:
            return f"e[{self.source}]"
        word = ".".join(f"a{a.label}" if isinstance(a.label, int) else str(a.label)
                        for a in self.arrows)
        return f"[{self.source}|{word}]"


def _vkey(v):
    return v if isinstance(v, tuple) else (v,)


class Element:
    """A finite rational combination of paths."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for p, c in terms.items():
                c = c if isinstance(c, Fraction) else Fraction(c)
                if c:
                    self.terms[p] = c

    @classmethod
    def of_path(cls, p: Path, coeff=ONE):
        return cls({p: coeff})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for p, c in other.terms.items():
            v = out.get(p, ZERO) + c
            if v:
                out[p] = v
            else:
                out.pop(p, None)
        return Element(out)

    def __sub__(self, other):
        return self + other.scale(Fraction(-1))

    def scale(self, c):
        c = c if isinstance(c, Fraction) else Fraction(c)
        if not c:
            return Element()
        return Element({p: c * v for p, v in self.terms.items()})

    def free_mul(self, other: "Element") -> "Element":
        """Concatenation product, no reduction; drops non-composable terms."""
        out = {}
        for p, a in self.terms.items():
            for q, b in other.terms.items():
                if p.target == q.source:
                    pq = p.concat(q)
                    v = out.get(pq, ZERO) + a * b
                    if v:
                        out[pq] = v
                    else:
                        out.pop(pq, None)
        return Element(out)

    def support(self):
        return sorted(self.terms, key=Path.sort_key)

    def __eq__(self, other):
        return isinstance(other, Element) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for p in self.support():
            c = self.terms[p]
            bits.append(f"{c}*{p!r}" if c != 1 else repr(p))
        return " + ".join(bits)


class Presentation:
    """A quiver with homogeneous relations.

    Vertices keep their given order (used for Cartan matrices and JSON
    output); arrows are stored sorted by (source, label).  Relations
    must be homogeneous: every path in one relation shares source,
    target, length and bidegree, and has length at least 2.
    """

    def __init__(self, vertices, arrows, relations, kind="custom", params=None):
        self.vertices = tuple(vertices)
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValueError("duplicate vertices")
        self.arrows = tuple(sorted(arrows,
                                   key=lambda a: (_vkey(a.source), label_key(a.label))))
        seen = set()
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise ValueError(f"arrow endpoint missing from vertex set: {a}")
            key = (a.source, a.label)
            if key in seen:
                raise ValueError(f"duplicate arrow (source, label): {key}")
            seen.add(key)
        self.relations = tuple(relations)
        for r in self.relations:
            if r.is_zero():
                raise ValueError("zero relation")
            sig = {(p.source, p.target, p.length, p.bidegree) for p in r.terms}
            if len(sig) != 1:
                raise ValueError(f"inhomogeneous relation: {r!r}")
            if next(iter(sig))[2] < 2:
                raise ValueError("relations must have path length >= 2")
        self.kind = kind
        self.params = dict(params or {})
        self._from = {}
        for a in self.arrows:
            self._from.setdefault(a.source, []).append(a)
        self._by_key = {(a.source, a.label): a for a in self.arrows}

    def arrows_from(self, v):
        return self._from.get(v, [])

    def arrow(self, source, label) -> Arrow:
        return self._by_key[(source, label)]

    def trivial_path(self, v) -> Path:
        return Path(v)

    def path(self, source, labels) -> Path:
        """The path starting at ``source`` along the given arrow labels."""
        arrows = []
        at = source
        for lbl in labels:
            a = self._by_key.get((at, lbl))
            if a is None:
                raise KeyError(f"no arrow {lbl!r} at {at}")
            arrows.append(a)
            at = a.target
        return Path(source, arrows)

    def __eq__(self, other):
        return (isinstance(other, Presentation)
                and self.vertices == other.vertices
                and self.arrows == other.arrows
                and set(self.relations) == set(other.relations))

    def __repr__(self):
        return (f"Presentation({self.kind}, {len(self.vertices)} vertices, "
                f"{len(self.arrows)} arrows, {len(self.relations)} relations)")


# ---------------------------------------------------------------------------
# the zigzag family


def _translation_arrows(q: Quiver, indices=None, flip=False):
    """Arrow objects for a translation quiver.  Index-0 arrows carry
    bidegree (0, 1), the others (1, 0).  With ``flip`` the nonzero-index
    arrows are reversed (used by the conjectured dual presentation)."""
    out = []
    for (x, i) in q.arrows:
        y = q.target(x, i)
        bideg = (0, 1) if i == 0 else (1, 0)
        if flip and i != 0:
            out.append(Arrow(source=y, target=x, label=i, bidegree=bideg))
        else:
            out.append(Arrow(source=x, target=y, label=i, bidegree=bideg))
    return out


def _zigzag_relations(pres: Presentation, q: Quiver):
    """Squares vanish; parallelograms commute when both routes exist."""
    rels = []
    vset = set(q.vertices)
    for x in q.vertices:
        for i in range(q.n + 1):
            yi = q.target(x, i)
            if yi not in vset:
                continue
            # squares α_i α_i = 0
            zi = q.target(yi, i)
            if zi in vset:
                rels.append(Element.of_path(pres.path(x, (i, i))))
            # commutators for unordered pairs {i, j}, both routes valid
            for j in range(i + 1, q.n + 1):
                yj = q.target(x, j)
                z = q.target(yi, j)
                if z in vset and yj in vset:
                    rels.append(Element.of_path(pres.path(x, (i, j)))
                                - Element.of_path(pres.path(x, (j, i))))
    return rels


def presentation_zigzag(n: int, s: int) -> Presentation:
    """The quadratic presentation of the zigzag algebra of type (n, s)
    on the weight s-1 quiver."""
    if s < 2:
        raise ValueError(f"zigzag type needs s >= 2, got s={s}")
    q = build_quiver(n, s - 1)
    pres = Presentation(q.vertices, _translation_arrows(q), [],
                        kind="zigzag", params={"n": n, "s": s})
    return Presentation(q.vertices, pres.arrows, _zigzag_relations(pres, q),
                        kind="zigzag", params={"n": n, "s": s})


def presentation_cover(n: int, s: int) -> Presentation:
    """The quasi-hereditary cover of zigzag(n, s): the weight s quiver
    with zigzag relations plus ``e_z a_0 a_1 = 0`` for each vertex z
    with z_0 = 0 at which that path exists."""
    if s < 1:
        raise ValueError(f"cover needs s >= 1, got s={s}")
    q = build_quiver(n, s)
    pres = Presentation(q.vertices, _translation_arrows(q), [],
                        kind="cover", params={"n": n, "s": s})
    rels = _zigzag_relations(pres, q)
    vset = set(q.vertices)
    _, k_vertices = classify_vertices(q)
    for z in k_vertices:
        y = q.target(z, 0)
        if y in vset and q.target(y, 1) in vset:
            rels.append(Element.of_path(pres.path(z, (0, 1))))
    return Presentation(q.vertices, pres.arrows, rels,
                        kind="cover", params={"n": n, "s": s})


def presentation_borel(n: int, s: int) -> Presentation:
    """The directed subalgebra of the cover on arrows of nonzero index,
    with the inherited squares and commutators."""
    if s < 1:
        raise ValueError(f"borel needs s >= 1, got s={s}")
    q = build_quiver(n, s)
    arrows = [a for a in _translation_arrows(q) if a.label != 0]
    pres = Presentation(q.vertices, arrows, [],
                        kind="borel", params={"n": n, "s": s})
    rels = []
    vset = set(q.vertices)
    for x in q.vertices:
        for i in range(1, q.n + 1):
            yi = q.target(x, i)
            if yi not in vset:
                continue
            if q.target(yi, i) in vset:
                rels.append(Element.of_path(pres.path(x, (i, i))))
            for j in range(i + 1, q.n + 1):
                yj = q.target(x, j)
                if q.target(yi, j) in vset and yj in vset:
                    rels.append(Element.of_path(pres.path(x, (i, j)))
                                - Element.of_path(pres.path(x, (j, i))))
    return Presentation(q.vertices, pres.arrows, rels,
                        kind="borel", params={"n": n, "s": s})


def presentation_dual_conjectured(n: int, s: int) -> Presentation:
    """Closed-form presentation of the Ext algebra of the standard
    modules over cover(n, s).

    Vertices are the cover's.  Each index-0 arrow is kept with bidegree
    (0, 1); each nonzero-index arrow is reversed with bidegree (1, 0).
    Relations: index-0 squares vanish, every parallelogram of the cover
    quiver commutes (pure or mixed), and a reversed-pair path whose
    parallelogram partner is missing vanishes.
    """
    if s < 1:
        raise ValueError(f"dual needs s >= 1, got s={s}")
    q = build_quiver(n, s)
    pres = Presentation(q.vertices, _translation_arrows(q, flip=True), [],
                        kind="dual-conjectured", params={"n": n, "s": s})
    vset = set(q.vertices)
    rels = []
    for x in q.vertices:
        fi = {i: q.target(x, i) for i in range(q.n + 1)}
        # index-0 squares
        if fi[0] in vset and q.target(fi[0], 0) in vset:
            rels.append(Element.of_path(pres.path(x, (0, 0))))
        # parallelograms of the cover quiver based at x
        for i in range(1, q.n + 1):
            if fi[i] not in vset:
                continue
            z0 = q.target(fi[i], 0)
            if fi[0] in vset and z0 in vset:
                # mixed square x -> x+f_0, x -> x+f_i, top x+f_0+f_i:
                # dual paths run from w = x+f_i to y = x+f_0
                w, y, z = fi[i], fi[0], z0
                rels.append(Element.of_path(pres.path(w, (i, 0)))
                            - Element.of_path(pres.path(w, (0, i))))
            for j in range(i + 1, q.n + 1):
                z = q.target(fi[i], j)
                if z in vset and fi[j] in vset:
                    # pure square: dual paths run from z = x+f_i+f_j to x
                    rels.append(Element.of_path(pres.path(z, (i, j)))
                                - Element.of_path(pres.path(z, (j, i))))
        # reversed-pair paths with no partner: the dual path (a_i, a_j)
        # from z traces the cover path x -> x+f_j -> x+f_i+f_j; it dies
        # iff the other route through x+f_i does not exist.
        for j in range(1, q.n + 1):
            yj = fi[j]
            if yj not in vset:
                continue
            for i in range(1, q.n + 1):
                if i == j:
                    continue
                z = q.target(yj, i)
                if z in vset and fi[i] not in vset:
                    rels.append(Element.of_path(pres.path(z, (i, j))))
    return Presentation(q.vertices, pres.arrows, rels,
                        kind="dual-conjectured", params={"n": n, "s": s})


def presentation_shifted_dual(n: int, s: int) -> Presentation:
    """The opposite quadratic dual of cover(n, s), written out on the
    same weight-s quiver: parallelograms commute whenever both routes
    stay on the quiver, a two-step path whose parallelogram partner
    falls off vanishes, except that the composite a_0 a_1 at a vertex
    with x_0 = 0 survives.  No square relations: the dual of a vanishing
    square is a free one."""
    if s < 1:
        raise ValueError(f"shifted dual needs s >= 1, got s={s}")
    q = build_quiver(n, s)
    pres = Presentation(q.vertices, _translation_arrows(q), [],
                        kind="shifted-dual", params={"n": n, "s": s})
    vset = set(q.vertices)
    rels = []
    for x in q.vertices:
        for i in range(q.n + 1):
            yi = q.target(x, i)
            if yi not in vset:
                continue
            for j in range(q.n + 1):
                if j == i or q.target(yi, j) not in vset:
                    continue
                if q.target(x, j) in vset:
                    if i < j:
                        rels.append(Element.of_path(pres.path(x, (i, j)))
                                    - Element.of_path(pres.path(x, (j, i))))
                elif (i, j) != (0, 1):
                    rels.append(Element.of_path(pres.path(x, (i, j))))
    return Presentation(q.vertices, pres.arrows, rels,
                        kind="shifted-dual", params={"n": n, "s": s})


# ---------------------------------------------------------------------------
# degreewise elimination


class NonTerminationError(Exception):
    """Raised when the degreewise basis computation hits its length cap
    with the top degree still nonzero, so finiteness is not certified."""

    def __init__(self, presentation, max_len, dims):
        self.presentation = presentation
        self.max_len = max_len
        self.dims = list(dims)
        super().__init__(
            f"basis not exhausted by length {max_len}; dims so far {dims}")


class _Echelon:
    """Fully reduced sparse row echelon keyed by pivot path.

    Rows are dicts path -> coefficient with the pivot (the largest path
    in the row) normalised to 1.  Rows are mutually reduced, so a
    pivot's row directly gives its normal form in terms of basis paths.
    """

    def __init__(self):
        self.rows = {}
        self._occ = {}  # path -> set of pivot keys whose rows touch it

    def insert(self, vec: dict):
        for p in sorted(vec, key=Path.sort_key, reverse=True):
            c = vec.get(p)
            if not c:
                continue
            row = self.rows.get(p)
            if row is not None:
                for q, v in row.items():
                    nv = vec.get(q, ZERO) - c * v
                    if nv:
                        vec[q] = nv
                    else:
                        vec.pop(q, None)
        vec = {p: c for p, c in vec.items() if c}
        if not vec:
            return False
        pivot = max(vec, key=Path.sort_key)
        inv = ONE / vec[pivot]
        vec = {p: c * inv for p, c in vec.items()}
        for key in list(self._occ.get(pivot, ())):
            row = self.rows[key]
            f = row.get(pivot)
            if not f:
                continue
            for q, v in vec.items():
                nv = row.get(q, ZERO) - f * v
                if nv:
                    row[q] = nv
                    if q != key:
                        self._occ.setdefault(q, set()).add(key)
                else:
                    row.pop(q, None)
                    if q != key:
                        occ = self._occ.get(q)
                        if occ:
                            occ.discard(key)
        self.rows[pivot] = vec
        for q in vec:
            if q != pivot:
                self._occ.setdefault(q, set()).add(pivot)
        return True


class AlgebraInstance:
    """A finite dimensional bound quiver algebra with a computed basis.

    ``basis_by_length[d]`` lists the basis paths of length d in
    canonical order; ``reduce_path`` rewrites any valid path as a
    combination of basis paths.  The instance certifies finiteness: the
    computation ran until an empty length, and since the algebra is
    generated in length 1 all longer components vanish as well.
    """

    def __init__(self, presentation, basis_by_length, reduction):
        self.presentation = presentation
        self.basis_by_length = [tuple(b) for b in basis_by_length]
        self._reduction = reduction
        self.top_length = len(self.basis_by_length) - 1
        self._basis_set = {p for level in self.basis_by_length for p in level}
        self._op = None

    # -- basic queries ----------------------------------------------------

    def basis(self):
        for level in self.basis_by_length:
            yield from level

    def dim(self):
        return sum(len(level) for level in self.basis_by_length)

    def dims_by_length(self):
        return [len(level) for level in self.basis_by_length]

    def dim_block(self, x, y):
        """dim of the span of basis paths from x to y."""
        return sum(1 for p in self.basis() if p.source == x and p.target == y)

    def block_bidegrees(self, x, y):
        out = {}
        for p in self.basis():
            if p.source == x and p.target == y:
                out[p.bidegree] = out.get(p.bidegree, 0) + 1
        return out

    def is_basis_path(self, p: Path) -> bool:
        return p in self._basis_set

    # -- reduction and products -------------------------------------------

    def reduce_path(self, p: Path) -> Element:
        if p.length > self.top_length:
            return Element()
        if p in self._basis_set:
            return Element.of_path(p)
        row = self._reduction.get(p)
        if row is None:
            # a valid path of computed length that never appeared would
            # be a bug in the degreewise enumeration
            raise KeyError(f"path not covered by the computed basis: {p!r}")
        return Element({q: -c for q, c in row.items() if q != p})

    def normal_form(self, elt: Element) -> Element:
        out = Element()
        for p, c in elt.terms.items():
            out = out + self.reduce_path(p).scale(c)
        return out

    def multiply(self, u: Element, v: Element) -> Element:
        return self.normal_form(u.free_mul(v))

    def idempotent(self, x) -> Element:
        return Element.of_path(Path(x))

    def unit(self) -> Element:
        return Element({Path(x): ONE for x in self.presentation.vertices})

    def arrow_element(self, source, label) -> Element:
        return Element.of_path(self.presentation.path(source, (label,)))

    # -- derived structure --------------------------------------------------

    def cartan_matrix(self) -> Matrix:
        """Entry (x, y) = dim e_x A e_y, rows/cols in vertex order."""
        idx = {v: i for i, v in enumerate(self.presentation.vertices)}
        m = Matrix.zero(len(idx), len(idx))
        for p in self.basis():
            m.data[idx[p.source]][idx[p.target]] += 1
        return m

    def opposite(self) -> "AlgebraInstance":
        if self._op is None:
            self._op = compute_basis(opposite_presentation(self.presentation),
                                     max_len=max(self.top_length + 1,
                                                 DEFAULT_MAX_LEN))
            self._op._op = self
        return self._op

    def __repr__(self):
        return (f"AlgebraInstance({self.presentation.kind}, dim {self.dim()}, "
                f"top length {self.top_length})")


def compute_basis(pres: Presentation, max_len: int = DEFAULT_MAX_LEN) -> AlgebraInstance:
    """Eliminate the relation span length by length.

    In length d the relation span is A_1 * I_{d-1} + I_{d-1} * A_1 plus
    the relations of length exactly d, so the previous length's pivot
    rows are extended by single arrows on both sides.  Stops at the
    first empty length and returns the finite instance (all longer
    components vanish since the algebra is generated in length 1).  If
    the cap is reached while the top length is still nonzero, raises
    :class:`NonTerminationError`: the algebra may be infinite
    dimensional and no basis is certified.
    """
    rel_by_len = {}
    for r in pres.relations:
        l = next(iter(r.terms)).length
        rel_by_len.setdefault(l, []).append(r)
    into = {}
    for a in pres.arrows:
        into.setdefault(a.target, []).append(a)

    trivial = [Path(v) for v in pres.vertices]
    basis_by_length = [list(trivial)]
    reduction = {}
    paths_prev = list(trivial)
    rows_prev = []
    dims = [len(trivial)]

    for d in range(1, max_len + 1):
        paths_d = []
        for p in paths_prev:
            for a in pres.arrows_from(p.target):
                paths_d.append(Path(p.source, p.arrows + (a,)))

        ech = _Echelon()
        for row in rows_prev:
            some = next(iter(row))
            src, tgt = some.source, some.target
            for a in pres.arrows_from(tgt):
                ech.insert({Path(p.source, p.arrows + (a,)): c
                            for p, c in row.items()})
            for a in into.get(src, ()):
                ech.insert({Path(a.source, (a,) + p.arrows): c
                            for p, c in row.items()})
        for r in rel_by_len.get(d, []):
            ech.insert(dict(r.terms))

        pivots = ech.rows
        basis_d = sorted((p for p in paths_d if p not in pivots), key=Path.sort_key)
        basis_by_length.append(basis_d)
        reduction.update(pivots)
        dims.append(len(basis_d))
        if not basis_d:
            return AlgebraInstance(pres, basis_by_length, reduction)
        paths_prev = paths_d
        rows_prev = list(pivots.values())

    raise NonTerminationError(pres, max_len, dims)


def opposite_presentation(pres: Presentation) -> Presentation:
    """Reverse all arrows and all relation paths."""
    flip = {a: Arrow(source=a.target, target=a.source, label=a.label,
                     bidegree=a.bidegree) for a in pres.arrows}

    def flip_path(p: Path) -> Path:
        return Path(p.target, tuple(flip[a] for a in reversed(p.arrows)))

    rels = [Element({flip_path(p): c for p, c in r.terms.items()})
            for r in pres.relations]
    return Presentation(pres.vertices, flip.values(), rels,
                        kind=pres.kind + "-op", params=pres.params)


def quadratic_dual(pres: Presentation) -> Presentation:
    """The quadratic dual on the same quiver.

    For each (source, target) pair the relation subspace of the span of
    length-2 paths is replaced by its annihilator under the dot-product
    pairing in the path basis.  Pairs with no relations acquire full
    zero relations; pairs whose relation space is full lose them.
    """
    for r in pres.relations:
        if next(iter(r.terms)).length != 2:
            raise ValueError("quadratic dual needs quadratic relations")
    paths2 = {}
    for v in pres.vertices:
        for a in pres.arrows_from(v):
            for b in pres.arrows_from(a.target):
                p = Path(v, (a, b))
                paths2.setdefault((v, p.target), []).append(p)
    for block in paths2.values():
        block.sort(key=Path.sort_key)
    rel_blocks = {}
    for r in pres.relations:
        p0 = next(iter(r.terms))
        rel_blocks.setdefault((p0.source, p0.target), []).append(r)
    new_rels = []
    for key in sorted(paths2, key=lambda k: (_vkey(k[0]), _vkey(k[1]))):
        block = paths2[key]
        rows = [[r.terms.get(p, ZERO) for p in block]
                for r in rel_blocks.get(key, [])]
        m = Matrix(rows, ncols=len(block)) if rows else Matrix.zero(0, len(block))
        for vec in m.kernel_basis().data:
            new_rels.append(Element({p: c for p, c in zip(block, vec) if c}))
    return Presentation(pres.vertices, pres.arrows, new_rels,
                        kind=pres.kind + "!", params=pres.params)


# ---------------------------------------------------------------------------
# closed forms and oracles


def closed_form_cover_basis(n: int, s: int):
    """The basis of cover(n, s) in closed form: from each vertex, the
    strictly increasing words in the nonzero indices followed by an
    optional index-0 arrow, kept when every step stays on the quiver."""
    pres = presentation_cover(n, s)
    q = build_quiver(n, s)
    vset = set(q.vertices)

    def walk(x, labels):
        at = x
        for i in labels:
            at = q.target(at, i)
            if at not in vset:
                return None
        return pres.path(x, labels)

    out = []
    for x in pres.vertices:
        for mask in range(1 << n):
            labels = [i for i in range(1, n + 1) if mask & (1 << (i - 1))]
            for eps in (0, 1):
                word = tuple(labels) + ((0,) if eps else ())
                p = walk(x, word)
                if p is not None:
                    out.append(p)
    out.sort(key=Path.sort_key)
    return out


def zigzag_hom_oracle(n: int, s: int) -> Matrix:
    """Hom dimensions of zigzag(n, s) by subset-word enumeration.

    Entry (x, y) counts the subsets S of the arrow indices such that
    the displacements of S sum to y - x and some ordering of S is a
    valid path on the weight s-1 quiver.  Independent of the engine.
    """
    if s < 2:
        raise ValueError(f"zigzag type needs s >= 2, got s={s}")
    q = build_quiver(n, s - 1)
    vset = set(q.vertices)
    idx = {v: i for i, v in enumerate(q.vertices)}

    def reachable(x, todo):
        if not todo:
            return True
        for i in list(todo):
            y = q.target(x, i)
            if y in vset and reachable(y, todo - {i}):
                return True
        return False

    m = Matrix.zero(len(idx), len(idx))
    for x in q.vertices:
        for mask in range(1 << (n + 1)):
            subset = frozenset(i for i in range(n + 1) if mask & (1 << i))
            y = x
            for i in subset:
                y = tuple(a + b for a, b in zip(y, displacement(i, n)))
            if y in vset and reachable(x, subset):
                m.data[idx[x]][idx[y]] += 1
    return m


def shifted_dual_membership(x, d) -> bool:
    """Whether the class of a degree-``d`` path out of ``x`` survives in
    the shifted dual algebra: x_j >= d_{(j+1) mod (n+1)} for every
    coordinate j >= 1.  The j = 0 pair carries no condition: a path may
    overshoot in the 0-direction and return, which is what keeps the
    composite alpha_0 alpha_1 alive at the x_0 = 0 vertices."""
    if len(d) != len(x):
        raise ValueError("degree vector and vertex have different lengths")
    if any(c < 0 for c in d):
        raise ValueError("degree vector must be non-negative")
    npl = len(x)
    return all(x[j] >= d[(j + 1) % npl] for j in range(1, npl))
