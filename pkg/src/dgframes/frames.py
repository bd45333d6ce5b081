"""The resolution B(alpha): twisted sums over the subset lattice of a sequence.

For a valid n-simplex with objects X_0..X_n and coherence maps f, and an
order map alpha : [m] -> [n], the value B(alpha) is the direct sum, over
nonempty subsets S = {s_0 < ... < s_k} of [m], of the shifted complexes
X_{alpha(s_0)}[k].  Writing iota_S for the summand inclusion, the
differential acts on the S summand by

    d o iota_S = (-1)^k iota_S o d_X
               + sum_{j=1..k} (-1)^j           iota_{S \\ {s_j}}
               + sum_{j=1..k} (-1)^{k(j-1)}    iota_{S_{>=j}} o f(alpha<s_0..s_j>),

where S_{>=j} = {s_j < ... < s_k} and f is evaluated through strict
unitality on the (possibly degenerate) value sequence.  This is the unique
differential making the tuple of summand inclusions a closed degree-0
element of the twisted mapping complex; d^2 = 0 is equivalent to the
Maurer-Cartan identity for f and is asserted on construction.

Basis and labels are canonical so that equality of frame values is literal:
subsets are ordered by size then lexicographically, then by source basis
order, and a pair (S, e) is labelled "s_0,...,s_k|<label of e>".  A singleton
alpha produces X_{alpha(0)} itself, labels included.

The module also provides the structure maps (basis inclusions along subset
reindexing), latching data for the Reedy condition, the last-vertex
inclusion/retraction/homotopy triple, the homotopical and simplicial
compatibility check suites, an integer splitting solver for acyclic
cofibrations, and the recovery of a 1-simplex edge from its cylinder frame.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .complexes import (
    ChainComplex,
    GradedMap,
    cone,
    graded_map_to_vector,
    hom_basis,
    hom_differential,
    homology,
    is_acyclic,
    is_weak_equivalence,
    shift,
    vector_to_graded_map,
    zero_complex,
)
from .dg_nerve import NerveSimplex, act, coherence_defect, increasing_sequences
from .exact_linalg import IntMatrix, block, invariant_factors, solve, submatrix
from .reporting import Report
from .simplicial import (
    DMorphism,
    OrderMap,
    enumerate_d_objects,
    enumerate_inclusions,
    is_weak_equivalence_d,
    nonempty_subsets,
)


class FrameObject:
    """One value B(alpha), with its basis bookkeeping.

    ``basis`` maps each degree to the tuple of pairs (S, e): S an increasing
    tuple of indices in [alpha.dom], e the index of a basis element of
    X_{alpha(S[0])} in degree d - (len(S) - 1).  ``position`` inverts it.
    """

    def __init__(self, simplex: NerveSimplex, alpha: OrderMap, complex: ChainComplex, basis):
        self.simplex = simplex
        self.alpha = alpha
        self.complex = complex
        self.basis: Dict[int, tuple] = dict(basis)
        self.position = {d: {pair: c for c, pair in enumerate(pairs)} for d, pairs in self.basis.items()}

    def source_complex(self, subset) -> ChainComplex:
        return self.simplex.objects[self.alpha(subset[0])]

    def summand_inclusion(self, subset) -> GradedMap:
        """iota_S as a graded map X_{alpha(S[0])} -> B of degree len(S)-1."""
        subset = tuple(subset)
        k = len(subset) - 1
        x = self.source_complex(subset)
        mats = {}
        for t in x.support:
            pos = self.position.get(t + k)
            if pos is None:
                continue
            entries = {(pos[(subset, i)], i): 1 for i in range(x.rank(t))}
            mats[t] = IntMatrix.from_entries(self.complex.rank(t + k), x.rank(t), entries)
        return GradedMap(x, self.complex, k, mats)

    def __repr__(self):
        return "FrameObject(alpha=%s, total rank %d)" % (self.alpha.key(), self.complex.total_rank())

    def to_json(self) -> dict:
        c = self.complex
        return {
            "alpha": self.alpha.key(),
            "degrees": {str(d): c.rank(d) for d in c.support},
            "labels": {str(d): list(c.labels(d)) for d in c.support},
            "differentials": {str(d): c.diff(d).to_lists() for d in c.support if c.rank(d - 1)},
        }


def build_frame_object(s: NerveSimplex, alpha: OrderMap, check: bool = True) -> FrameObject:
    """Construct B(alpha) for a valid simplex.

    With ``check`` the construction asserts d^2 = 0 (and therefore fails loudly
    on an invalid simplex); the check suites disable it to report defects
    instead of raising.
    """
    if alpha.cod != s.n:
        raise ValueError("alpha lands in [%d] but the simplex has dimension %d" % (alpha.cod, s.n))
    m = alpha.dom
    subsets = nonempty_subsets(m)
    lone = m == 0

    basis: Dict[int, tuple] = {}
    labels: Dict[int, tuple] = {}
    degrees = set()
    for S in subsets:
        x = s.objects[alpha(S[0])]
        k = len(S) - 1
        degrees.update(d + k for d in x.support)
    for d in sorted(degrees):
        pairs: List[tuple] = []
        labs: List[str] = []
        for S in subsets:
            k = len(S) - 1
            x = s.objects[alpha(S[0])]
            for i in range(x.rank(d - k)):
                pairs.append((S, i))
                if lone:
                    labs.append(x.label(d - k, i))
                else:
                    labs.append("%s|%s" % (",".join(str(t) for t in S), x.label(d - k, i)))
        if pairs:
            basis[d] = tuple(pairs)
            labels[d] = tuple(labs)
    ranks = {d: len(pairs) for d, pairs in basis.items()}
    position = {d: {pair: c for c, pair in enumerate(pairs)} for d, pairs in basis.items()}

    diffs = {}
    for d in sorted(ranks):
        if not ranks.get(d - 1):
            continue
        pos_tgt = position[d - 1]
        entries: Dict[tuple, int] = {}

        def put(row, col, v):
            if v:
                entries[(row, col)] = entries.get((row, col), 0) + v

        for col, (S, e) in enumerate(basis[d]):
            k = len(S) - 1
            x = s.objects[alpha(S[0])]
            ds = d - k
            sgn_k = -1 if k % 2 else 1
            dx = x.diff(ds)
            for i in range(x.rank(ds - 1)):
                put(pos_tgt[(S, i)], col, sgn_k * dx[i, e])
            for j in range(1, k + 1):
                put(pos_tgt[(S[:j] + S[j + 1 :], e)], col, -1 if j % 2 else 1)
                g = s.eval(tuple(alpha(t) for t in S[: j + 1]))
                gm = g.mat(ds)
                suffix = S[j:]
                sgn = -1 if (k * (j - 1)) % 2 else 1
                for i in range(g.target.rank(ds + j - 1)):
                    put(pos_tgt[(suffix, i)], col, sgn * gm[i, e])
        diffs[d] = IntMatrix.from_entries(ranks[d - 1], ranks[d], entries)

    cx = ChainComplex("B(%s)" % alpha.key(), ranks, diffs, labels, check=check)
    return FrameObject(s, alpha, cx, basis)


class FrameDiagram:
    """All frame values over sequences with domain size <= max_len, with the
    structure maps between them."""

    def __init__(self, simplex: NerveSimplex, max_len: int, objects, morphisms):
        self.simplex = simplex
        self.max_len = max_len
        self.objects: Dict[OrderMap, FrameObject] = objects
        self.morphisms: Dict[DMorphism, GradedMap] = morphisms


def build_frame_diagram(s: NerveSimplex, max_len: int = 3, check: bool = True) -> FrameDiagram:
    objects = {}
    for alpha in enumerate_d_objects(s.n, max_len):
        objects[alpha] = build_frame_object(s, alpha, check=check)
    morphisms = {}
    for alpha in objects:
        for mor in enumerate_inclusions(alpha):
            morphisms[mor] = _structure_matrix(objects[mor.src], objects[mor.tgt], mor.inj)
    return FrameDiagram(s, max_len, objects, morphisms)


def _structure_matrix(src: FrameObject, tgt: FrameObject, inj) -> GradedMap:
    mats = {}
    for d, pairs in src.basis.items():
        pos = tgt.position[d]
        entries = {}
        for col, (S, e) in enumerate(pairs):
            entries[(pos[(tuple(inj[i] for i in S), e)], col)] = 1
        mats[d] = IntMatrix.from_entries(tgt.complex.rank(d), src.complex.rank(d), entries)
    return GradedMap(src.complex, tgt.complex, 0, mats)


def structure_map(diagram: FrameDiagram, mor: DMorphism) -> GradedMap:
    """The chain map B(mor.src) -> B(mor.tgt): the basis inclusion S -> inj(S)."""
    got = diagram.morphisms.get(mor)
    if got is not None:
        return got
    if mor.src not in diagram.objects or mor.tgt not in diagram.objects:
        raise ValueError("both endpoints of the morphism must be in the diagram")
    out = _structure_matrix(diagram.objects[mor.src], diagram.objects[mor.tgt], mor.inj)
    diagram.morphisms[mor] = out
    return out


def _morphism_key(mor: DMorphism) -> str:
    return "%s->%s[%s]" % (mor.src.key(), mor.tgt.key(), ",".join(str(i) for i in mor.inj))


# -- latching data and the Reedy condition ------------------------------------


def latching_data(o: FrameObject):
    """(sub, incl, coker) for the latching filtration of one frame value.

    ``sub`` spans the basis pairs whose subset is proper (the image of the
    latching map), ``incl`` is the evident basis inclusion, and ``coker`` is
    the complementary span of full-subset pairs with the induced differential,
    carrying the labels of the source complex so that the expected literal
    equality coker == shift(X_{alpha(0)}, m) can be tested directly.

    Both sub and coker are built without the d^2 check so that deliberately
    corrupted fixtures are reported by the check suite rather than raising.
    """
    alpha = o.alpha
    m = alpha.dom
    x = o.simplex.objects[alpha(0)]
    sub_idx: Dict[int, list] = {}
    coker_idx: Dict[int, list] = {}
    for d, pairs in o.basis.items():
        sub_idx[d] = [c for c, (S, e) in enumerate(pairs) if len(S) <= m]
        coker_idx[d] = [c for c, (S, e) in enumerate(pairs) if len(S) == m + 1]

    sub_ranks = {d: len(v) for d, v in sub_idx.items() if v}
    sub_labels = {
        d: tuple(o.complex.labels(d)[c] for c in sub_idx[d]) for d in sub_ranks
    }
    sub_diffs = {}
    for d in sub_ranks:
        if sub_ranks.get(d - 1):
            sub_diffs[d] = submatrix(o.complex.diff(d), sub_idx[d - 1], sub_idx[d])
    sub = ChainComplex("L(%s)" % alpha.key(), sub_ranks, sub_diffs, sub_labels, check=False)

    incl_mats = {}
    for d in sub_ranks:
        entries = {(c, col): 1 for col, c in enumerate(sub_idx[d])}
        incl_mats[d] = IntMatrix.from_entries(o.complex.rank(d), sub_ranks[d], entries)
    incl = GradedMap(sub, o.complex, 0, incl_mats)

    coker_ranks = {d: len(v) for d, v in coker_idx.items() if v}
    coker_labels = {d: x.labels(d - m) for d in coker_ranks}
    coker_diffs = {}
    for d in coker_ranks:
        if coker_ranks.get(d - 1):
            coker_diffs[d] = submatrix(o.complex.diff(d), coker_idx[d - 1], coker_idx[d])
    coker = ChainComplex("B/L(%s)" % alpha.key(), coker_ranks, coker_diffs, coker_labels, check=False)
    return sub, incl, coker


def latching_map(diagram: FrameDiagram, alpha: OrderMap):
    """(sub, incl): the latching subcomplex of B(alpha) and its inclusion.

    For a singleton alpha the latching category is empty and sub is the zero
    complex.
    """
    if alpha not in diagram.objects:
        raise ValueError("alpha %s is not in the diagram" % alpha.key())
    sub, incl, _ = latching_data(diagram.objects[alpha])
    return sub, incl


def is_reedy_cofibrant(diagram: FrameDiagram) -> Report:
    """Per alpha: the proper-subset span is closed under the differential, its
    inclusion is degreewise split injective over the integers, and the
    complementary quotient equals shift(X_{alpha(0)}, m) literally."""
    report = Report()
    for alpha, o in diagram.objects.items():
        m = alpha.dom
        x = o.simplex.objects[alpha(0)]
        full_idx = {
            d: [c for c, (S, e) in enumerate(pairs) if len(S) == m + 1]
            for d, pairs in o.basis.items()
        }
        proper_idx = {
            d: [c for c, (S, e) in enumerate(pairs) if len(S) <= m]
            for d, pairs in o.basis.items()
        }
        ok_closed, wit_closed = True, None
        for d in o.complex.support:
            if not proper_idx.get(d) or not full_idx.get(d - 1):
                continue
            leak = submatrix(o.complex.diff(d), full_idx[d - 1], proper_idx[d])
            if not leak.is_zero():
                ok_closed, wit_closed = False, "differential leaves the latching span at degree %d" % d
                break
        report.add("latching-closure", alpha.key(), ok_closed, wit_closed)

        sub, incl, coker = latching_data(o)
        ok_split, wit_split = True, None
        for d in sub.support:
            fac = invariant_factors(incl.mat(d))
            if len(fac) != sub.rank(d) or any(v != 1 for v in fac):
                ok_split, wit_split = False, "inclusion is not split at degree %d" % d
                break
        report.add("latching-split", alpha.key(), ok_split, wit_split)

        expected = shift(x, m)
        ok_coker = coker == expected
        wit_coker = None if ok_coker else "quotient differs from the shifted source"
        report.add("latching-cokernel", alpha.key(), ok_coker, wit_coker)
    return report


# -- last-vertex inclusion, retraction, homotopy -------------------------------


def include_last(o: FrameObject) -> GradedMap:
    """The chain map X_{alpha(a)} -> B at the singleton {a}, a = dom max."""
    return o.summand_inclusion((o.alpha.dom,))


def retraction(o: FrameObject) -> GradedMap:
    """The chain retraction r : B -> X_{alpha(a)} of include_last.

    On the S = {s_0 < ... < s_k} summand it evaluates the coherence cochain on
    the value sequence of S extended by the last vertex, with sign (-1)^k:
    r o iota_S = (-1)^k f(<alpha(s_0), ..., alpha(s_k), alpha(a)>).  Strict
    unitality makes this the identity on the {a} summand and zero on every
    other summand containing a.
    """
    a = o.alpha.dom
    last = o.alpha(a)
    tgt = o.simplex.objects[last]
    mats = {}
    for d, pairs in o.basis.items():
        if not tgt.rank(d):
            continue
        entries: Dict[tuple, int] = {}
        for col, (S, e) in enumerate(pairs):
            k = len(S) - 1
            g = o.simplex.eval(tuple(o.alpha(t) for t in S) + (last,))
            gm = g.mat(d - k)
            sgn = -1 if k % 2 else 1
            for i in range(tgt.rank(d)):
                v = gm[i, e]
                if v:
                    entries[(i, col)] = entries.get((i, col), 0) + sgn * v
        mats[d] = IntMatrix.from_entries(tgt.rank(d), o.complex.rank(d), entries)
    return GradedMap(o.complex, tgt, 0, mats)


def homotopy(o: FrameObject) -> GradedMap:
    """The degree-1 map h : B -> B with D(h) = include_last o retraction - id.

    It sends the (S, e) generator to (S u {a}, e) with sign (-1)^{|S|-1} when
    a is not in S, and to zero otherwise.
    """
    a = o.alpha.dom
    mats = {}
    for d, pairs in o.basis.items():
        pos_up = o.position.get(d + 1, {})
        entries = {}
        for col, (S, e) in enumerate(pairs):
            if S[-1] == a:
                continue
            sgn = -1 if (len(S) - 1) % 2 else 1
            entries[(pos_up[(S + (a,), e)], col)] = sgn
        if entries:
            mats[d] = IntMatrix.from_entries(o.complex.rank(d + 1), o.complex.rank(d), entries)
    return GradedMap(o.complex, o.complex, 1, mats)


def last_vertex_data(o: FrameObject):
    """(j, r, h) with r o j = id and D(h) = j o r - id."""
    return include_last(o), retraction(o), homotopy(o)


# -- check suites --------------------------------------------------------------


def is_homotopical(diagram: FrameDiagram) -> Report:
    """Every max-preserving morphism must have a structure map whose cone is
    acyclic.  Non-max-preserving morphisms carry no requirement and are
    skipped."""
    report = Report()
    for mor, g in diagram.morphisms.items():
        if not is_weak_equivalence_d(mor):
            continue
        if not g.is_cycle():
            report.add("homotopical", _morphism_key(mor), False, "structure map is not a chain map")
            continue
        ok = is_weak_equivalence(g)
        wit = None if ok else "cone homology: %s" % homology(cone(g))
        report.add("homotopical", _morphism_key(mor), ok, wit)
    return report


def check_simplicial_compat(sigma: OrderMap, s: NerveSimplex, max_len: int = 3) -> Report:
    """Frames commute with reindexing: building over the reindexed simplex
    equals building over the original at the composed sequence, as literal
    complexes (same labels, same matrices)."""
    t = act(sigma, s)
    report = Report()
    for alpha in enumerate_d_objects(sigma.dom, max_len):
        left = build_frame_object(t, alpha, check=False).complex
        right = build_frame_object(s, sigma.compose(alpha), check=False).complex
        ok = left == right
        wit = None if ok else "frames differ"
        report.add("simplicial-compat", "sigma=%s alpha=%s" % (sigma.key(), alpha.key()), ok, wit)
    return report


# -- splitting of acyclic cofibrations -----------------------------------------


def _operator_matrix(op, sx, sy, sdeg, tx, ty, tdeg) -> IntMatrix:
    """Matrix of a linear operator Hom(sx,sy)_sdeg -> Hom(tx,ty)_tdeg over the
    elementary-map bases, assembled column by column."""
    src = hom_basis(sx, sy, sdeg)
    n_rows = len(hom_basis(tx, ty, tdeg))
    cols = []
    for c in range(len(src)):
        unit = [0] * len(src)
        unit[c] = 1
        cols.append(graded_map_to_vector(op(vector_to_graded_map(sx, sy, sdeg, unit))))
    return IntMatrix(n_rows, len(src), [[col[i] for col in cols] for i in range(n_rows)])


def split_acyclic_cofibration(iota: GradedMap):
    """Split a degreewise split injective chain map with acyclic cone.

    Returns (p, h) with p o iota = id, D(p) = 0, D(h) = iota o p - id and
    h o iota = 0, found by exact integer linear solves over the mapping
    complexes.  Inputs violating the preconditions raise ValueError.
    """
    if iota.degree != 0 or not iota.is_cycle():
        raise ValueError("expected a chain map of degree 0")
    x, y = iota.source, iota.target
    for d in x.support:
        fac = invariant_factors(iota.mat(d))
        if len(fac) != x.rank(d) or any(v != 1 for v in fac):
            raise ValueError("the map is not degreewise split injective at degree %d" % d)
    if not is_acyclic(cone(iota)):
        raise ValueError("the cone is not acyclic")

    pre = _operator_matrix(lambda f: f @ iota, y, x, 0, x, x, 0)
    dif = _operator_matrix(hom_differential, y, x, 0, y, x, -1)
    rhs = list(graded_map_to_vector(GradedMap.identity(x))) + [0] * dif.rows
    sol = solve(block([[pre], [dif]]), rhs)
    if sol is None:
        raise ValueError("no integer chain retraction exists")
    p = vector_to_graded_map(y, x, 0, sol)

    target = (iota @ p) - GradedMap.identity(y)
    dif2 = _operator_matrix(hom_differential, y, y, 1, y, y, 0)
    pre2 = _operator_matrix(lambda f: f @ iota, y, y, 1, x, y, 1)
    rhs2 = list(graded_map_to_vector(target)) + [0] * pre2.rows
    sol2 = solve(block([[dif2], [pre2]]), rhs2)
    if sol2 is None:
        raise ValueError("no integer homotopy exists")
    h = vector_to_graded_map(y, y, 1, sol2)
    return p, h


# -- 1-simplex recovery and coherence extension --------------------------------


def recover_map_from_cylinder(o: FrameObject) -> GradedMap:
    """Recover the edge of a 1-simplex from its cylinder frame, up to homotopy:
    split the last-vertex inclusion and compose the retraction with the
    source-end inclusion."""
    if o.simplex.n != 1 or o.alpha.values != (0, 1):
        raise ValueError("recovery expects the frame at <0,1> of a 1-simplex")
    p, _ = split_acyclic_cofibration(include_last(o))
    return p @ o.summand_inclusion((0,))


def verify_mc_extension(s_partial: NerveSimplex, candidate: GradedMap) -> bool:
    """Whether filling the top cochain of a boundary-complete simplex with
    ``candidate`` satisfies the coherence identity on the top sequence.

    All cochains except possibly the top one must be present; the faces are
    assumed coherent (their own identities are the caller's concern)."""
    n = s_partial.n
    if n < 1:
        raise ValueError("a 0-simplex has no top cochain to extend")
    top = tuple(range(n + 1))
    for seq in increasing_sequences(n):
        if seq != top and seq not in s_partial.maps:
            raise ValueError("missing cochain at %s" % (seq,))
    filled = dict(s_partial.maps)
    filled[top] = candidate
    completed = NerveSimplex(s_partial.objects, filled)
    return coherence_defect(completed, top).is_zero()
