"""Bounded, degreewise finitely generated free chain complexes over the integers.

Complexes are homologically graded: the differential lowers degree by one, and
``diff(d)`` is the matrix of X_d -> X_{d-1} with shape rank(d-1) x rank(d).
Graded maps of degree r store one matrix per degree, ``mat(d)`` having shape
rank_target(d+r) x rank_source(d).

Sign conventions used throughout the package:

* differential of a graded map:  D(f) = d_Y o f - (-1)^{|f|} f o d_X
* shifted complex:               d_{X[n]} = (-1)^n d_X
* tensor-style evaluation:       (f (x) g)(x (x) y) = (-1)^{|x||g|} f(x) (x) g(y)

Equality of complexes and of graded maps is label-wise and matrix-wise literal;
the ``name`` field is display metadata and never takes part in comparisons.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .exact_linalg import (
    IntMatrix,
    block,
    invariant_factors,
    kernel_basis,
    mat_vec,
    rank as matrix_rank,
    snf,
    solve,
)


class ChainComplex:
    """A bounded complex of finitely generated free abelian groups.

    Parameters
    ----------
    name : display name (metadata only, ignored by equality)
    ranks : mapping degree -> rank; zero ranks are dropped
    diffs : mapping degree -> IntMatrix of X_d -> X_{d-1}; matrices are kept
        exactly for the degrees where both ends have positive rank, missing
        ones are filled with zeros
    labels : optional mapping degree -> sequence of basis label strings;
        defaults to "e0", "e1", ...
    check : verify d o d = 0 on construction (disable only to build
        deliberately broken fixtures)
    """

    def __init__(self, name, ranks, diffs=None, labels=None, check=True):
        self.name = str(name)
        self._ranks: Dict[int, int] = {}
        for d, r in dict(ranks).items():
            if r < 0:
                raise ValueError("negative rank in degree %d" % d)
            if r:
                self._ranks[int(d)] = int(r)
        diffs = dict(diffs) if diffs else {}
        self._diffs: Dict[int, IntMatrix] = {}
        for d in self._ranks:
            if self.rank(d - 1) > 0:
                m = diffs.pop(d, None)
                if m is None:
                    m = IntMatrix.zeros(self.rank(d - 1), self.rank(d))
                if m.rows != self.rank(d - 1) or m.cols != self.rank(d):
                    raise ValueError(
                        "differential at degree %d has shape %dx%d, expected %dx%d"
                        % (d, m.rows, m.cols, self.rank(d - 1), self.rank(d))
                    )
                self._diffs[d] = m
        for d, m in diffs.items():
            if not m.is_zero():
                raise ValueError("differential at degree %d maps between zero groups" % d)
        self._labels: Dict[int, Tuple[str, ...]] = {}
        labels = dict(labels) if labels else {}
        for d, r in self._ranks.items():
            got = labels.get(d)
            if got is None:
                self._labels[d] = tuple("e%d" % i for i in range(r))
            else:
                got = tuple(str(s) for s in got)
                if len(got) != r:
                    raise ValueError("degree %d has %d labels for rank %d" % (d, len(got), r))
                self._labels[d] = got
        if check:
            bad = self.d_squared_defects()
            if bad:
                raise ValueError("differential does not square to zero at degree %d" % bad[0])

    # -- inspection --------------------------------------------------------

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(self._ranks))

    def rank(self, d: int) -> int:
        return self._ranks.get(d, 0)

    def total_rank(self) -> int:
        return sum(self._ranks.values())

    def diff(self, d: int) -> IntMatrix:
        got = self._diffs.get(d)
        if got is None:
            return IntMatrix.zeros(self.rank(d - 1), self.rank(d))
        return got

    def labels(self, d: int) -> Tuple[str, ...]:
        return self._labels.get(d, ())

    def label(self, d: int, i: int) -> str:
        return self._labels[d][i]

    def min_degree(self) -> int:
        return min(self._ranks) if self._ranks else 0

    def max_degree(self) -> int:
        return max(self._ranks) if self._ranks else 0

    def d_squared_defects(self):
        """Degrees d where diff(d-1) @ diff(d) is nonzero."""
        out = []
        for d in self.support:
            if self.rank(d - 1) and self.rank(d - 2):
                if not (self.diff(d - 1) @ self.diff(d)).is_zero():
                    out.append(d)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, ChainComplex)
            and self._ranks == other._ranks
            and self._labels == other._labels
            and self._diffs == other._diffs
        )

    __hash__ = None

    def __repr__(self):
        degs = ", ".join("%d:%d" % (d, self._ranks[d]) for d in self.support)
        return "ChainComplex(%s; %s)" % (self.name, degs)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "degrees": {str(d): self._ranks[d] for d in self.support},
            "differentials": {str(d): self.diff(d).to_lists() for d in sorted(self._diffs)},
        }

    @classmethod
    def from_json(cls, obj: Mapping, check=True) -> "ChainComplex":
        if not isinstance(obj, Mapping):
            raise ValueError("complex must be a JSON object")
        for field in ("name", "degrees"):
            if field not in obj:
                raise ValueError("complex is missing the %r field" % field)
        ranks = {}
        for k, v in obj["degrees"].items():
            ranks[int(k)] = int(v)
        diffs = {}
        for k, rows in obj.get("differentials", {}).items():
            d = int(k)
            r_to, r_from = ranks.get(d - 1, 0), ranks.get(d, 0)
            diffs[d] = IntMatrix(r_to, r_from, rows)
        return cls(obj["name"], ranks, diffs, check=check)


def zero_complex(name: str = "0") -> ChainComplex:
    return ChainComplex(name, {})


class GradedMap:
    """A degree-r map of graded groups f : X -> Y, one matrix per degree.

    Matrices are stored canonically for exactly the degrees where both
    rank_X(d) and rank_Y(d+r) are positive; ``mat`` returns a zero matrix of
    the right shape elsewhere.  Composition carries no sign; signs enter only
    through :func:`hom_differential`.
    """

    def __init__(self, source: ChainComplex, target: ChainComplex, degree: int, mats=None):
        self.source = source
        self.target = target
        self.degree = int(degree)
        given = dict(mats) if mats else {}
        self._mats: Dict[int, IntMatrix] = {}
        for d in source.support:
            r_from = source.rank(d)
            r_to = target.rank(d + self.degree)
            m = given.pop(d, None)
            if r_from and r_to:
                if m is None:
                    m = IntMatrix.zeros(r_to, r_from)
                if m.rows != r_to or m.cols != r_from:
                    raise ValueError(
                        "matrix at degree %d has shape %dx%d, expected %dx%d"
                        % (d, m.rows, m.cols, r_to, r_from)
                    )
                self._mats[d] = m
            elif m is not None and not m.is_zero():
                raise ValueError("nonzero matrix at degree %d maps between zero groups" % d)
        for d, m in given.items():
            if m is not None and not m.is_zero():
                raise ValueError("matrix at degree %d outside the source support" % d)

    @classmethod
    def zero(cls, source, target, degree=0) -> "GradedMap":
        return cls(source, target, degree)

    @classmethod
    def identity(cls, x: ChainComplex) -> "GradedMap":
        return cls(x, x, 0, {d: IntMatrix.identity(x.rank(d)) for d in x.support})

    def mat(self, d: int) -> IntMatrix:
        got = self._mats.get(d)
        if got is None:
            return IntMatrix.zeros(self.target.rank(d + self.degree), self.source.rank(d))
        return got

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self._mats.values())

    def __eq__(self, other):
        return (
            isinstance(other, GradedMap)
            and self.degree == other.degree
            and self.source == other.source
            and self.target == other.target
            and self._mats == other._mats
        )

    __hash__ = None

    def __add__(self, other: "GradedMap") -> "GradedMap":
        self._compatible(other)
        return GradedMap(
            self.source,
            self.target,
            self.degree,
            {d: self.mat(d) + other.mat(d) for d in set(self._mats) | set(other._mats)},
        )

    def __sub__(self, other: "GradedMap") -> "GradedMap":
        return self + other.scale(-1)

    def __neg__(self) -> "GradedMap":
        return self.scale(-1)

    def scale(self, c: int) -> "GradedMap":
        return GradedMap(self.source, self.target, self.degree, {d: m.scale(c) for d, m in self._mats.items()})

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        """Composition self o other (no Koszul sign for composition)."""
        if other.target != self.source:
            raise ValueError("composition endpoints do not match")
        deg = self.degree + other.degree
        mats = {}
        for d in other.source.support:
            m = self.mat(d + other.degree) @ other.mat(d)
            if m.rows and m.cols:
                mats[d] = m
        return GradedMap(other.source, self.target, deg, mats)

    def is_cycle(self) -> bool:
        """Whether D(f) = 0; in degree 0 this says f is a chain map."""
        return hom_differential(self).is_zero()

    def __repr__(self):
        return "GradedMap(%s -> %s, degree %d)" % (self.source.name, self.target.name, self.degree)

    def to_json(self) -> dict:
        return {
            "source": self.source.name,
            "target": self.target.name,
            "degree": self.degree,
            "matrices": {
                str(d): m.to_lists() for d, m in sorted(self._mats.items()) if not m.is_zero()
            },
        }

    @classmethod
    def from_json(cls, obj: Mapping, source: ChainComplex, target: ChainComplex) -> "GradedMap":
        for field in ("source", "target", "degree", "matrices"):
            if field not in obj:
                raise ValueError("graded map is missing the %r field" % field)
        if obj["source"] != source.name or obj["target"] != target.name:
            raise ValueError(
                "graded map endpoints %r -> %r do not match %r -> %r"
                % (obj["source"], obj["target"], source.name, target.name)
            )
        degree = int(obj["degree"])
        mats = {}
        for k, rows in obj["matrices"].items():
            d = int(k)
            mats[d] = IntMatrix(target.rank(d + degree), source.rank(d), rows)
        return cls(source, target, degree, mats)

    def _compatible(self, other: "GradedMap"):
        if self.degree != other.degree or self.source != other.source or self.target != other.target:
            raise ValueError("graded maps are not compatible")


def hom_differential(f: GradedMap) -> GradedMap:
    """D(f) = d_Y o f - (-1)^{|f|} f o d_X, a graded map of degree |f| - 1."""
    x, y, r = f.source, f.target, f.degree
    sign = -1 if r % 2 == 0 else 1  # this is -(-1)^r
    mats = {}
    for d in x.support:
        if y.rank(d + r - 1) == 0:
            continue
        m = y.diff(d + r) @ f.mat(d) + (f.mat(d - 1) @ x.diff(d)).scale(sign)
        mats[d] = m
    return GradedMap(x, y, r - 1, mats)


def shift(x: ChainComplex, n: int) -> ChainComplex:
    """The n-fold shift X[n] with rank_d = rank_X(d - n) and d = (-1)^n d_X."""
    sgn = -1 if n % 2 else 1
    return ChainComplex(
        "%s[%d]" % (x.name, n),
        {d + n: x.rank(d) for d in x.support},
        {d + n: x.diff(d).scale(sgn) for d in x.support if x.rank(d - 1)},
        {d + n: x.labels(d) for d in x.support},
        check=False,
    )


def cone(f: GradedMap) -> ChainComplex:
    """Mapping cone of a chain map: Cone(f)_d = X_{d-1} (+) Y_d.

    The differential is the block matrix [[-d_X, 0], [-f, d_Y]].  Basis labels
    are "s|<x label>" for the suspended source part and "t|<y label>" for the
    target part.
    """
    if f.degree != 0:
        raise ValueError("cone needs a degree-0 map")
    if not f.is_cycle():
        raise ValueError("cone needs a chain map")
    x, y = f.source, f.target
    degrees = sorted({d + 1 for d in x.support} | set(y.support))
    ranks = {d: x.rank(d - 1) + y.rank(d) for d in degrees}
    diffs = {}
    labels = {}
    for d in degrees:
        labels[d] = tuple("s|%s" % s for s in x.labels(d - 1)) + tuple("t|%s" % s for s in y.labels(d))
        if ranks.get(d - 1, 0) and ranks[d]:
            diffs[d] = block(
                [
                    [x.diff(d - 1).scale(-1), IntMatrix.zeros(x.rank(d - 2), y.rank(d))],
                    [f.mat(d - 1).scale(-1), y.diff(d)],
                ]
            )
    return ChainComplex("Cone(%s->%s)" % (x.name, y.name), ranks, diffs, labels)


def cylinder(f: GradedMap):
    """Mapping cylinder of a chain map f : X -> Y.

    Returns (cyl, in_src, in_tgt, proj).  Cyl(f)_d = X_d (+) Y_d (+) X_{d-1}
    with differential

        d(x, y, xbar) = (d x - xbar,  d y + f xbar,  -d xbar),

    the summands being labelled "0|...", "1|..." and "0,1|..." in that order.
    These labels and blocks coincide, entry for entry, with the cofibrant
    resolution of a one-arrow diagram, which is what pins this sign choice.
    ``proj`` is the standard projection collapsing the source end along f;
    ``in_tgt`` is a chain homotopy equivalence.
    """
    if f.degree != 0:
        raise ValueError("cylinder needs a degree-0 map")
    if not f.is_cycle():
        raise ValueError("cylinder needs a chain map")
    x, y = f.source, f.target
    degrees = sorted(set(x.support) | set(y.support) | {d + 1 for d in x.support})
    ranks = {}
    labels = {}
    for d in degrees:
        ranks[d] = x.rank(d) + y.rank(d) + x.rank(d - 1)
        labels[d] = (
            tuple("0|%s" % s for s in x.labels(d))
            + tuple("1|%s" % s for s in y.labels(d))
            + tuple("0,1|%s" % s for s in x.labels(d - 1))
        )
    diffs = {}
    for d in degrees:
        if not ranks.get(d - 1, 0) or not ranks[d]:
            continue
        diffs[d] = block(
            [
                [
                    x.diff(d),
                    IntMatrix.zeros(x.rank(d - 1), y.rank(d)),
                    IntMatrix.identity(x.rank(d - 1)).scale(-1),
                ],
                [
                    IntMatrix.zeros(y.rank(d - 1), x.rank(d)),
                    y.diff(d),
                    f.mat(d - 1),
                ],
                [
                    IntMatrix.zeros(x.rank(d - 2), x.rank(d)),
                    IntMatrix.zeros(x.rank(d - 2), y.rank(d)),
                    x.diff(d - 1).scale(-1),
                ],
            ]
        )
    cyl = ChainComplex("Cyl(%s->%s)" % (x.name, y.name), ranks, diffs, labels)
    in_src = GradedMap(
        x,
        cyl,
        0,
        {
            d: IntMatrix.from_entries(
                cyl.rank(d), x.rank(d), {(i, i): 1 for i in range(x.rank(d))}
            )
            for d in x.support
            if cyl.rank(d)
        },
    )
    in_tgt = GradedMap(
        y,
        cyl,
        0,
        {
            d: IntMatrix.from_entries(
                cyl.rank(d), y.rank(d), {(x.rank(d) + i, i): 1 for i in range(y.rank(d))}
            )
            for d in y.support
            if cyl.rank(d)
        },
    )
    proj_mats = {}
    for d in cyl.support:
        if not y.rank(d):
            continue
        entries = {}
        fm = f.mat(d)
        for i in range(y.rank(d)):
            for j in range(x.rank(d)):
                if fm[i, j]:
                    entries[(i, j)] = fm[i, j]
            entries[(i, x.rank(d) + i)] = 1
        proj_mats[d] = IntMatrix.from_entries(y.rank(d), cyl.rank(d), entries)
    proj = GradedMap(cyl, y, 0, proj_mats)
    return cyl, in_src, in_tgt, proj


# -- mapping complexes ------------------------------------------------------


def hom_basis(x: ChainComplex, y: ChainComplex, n: int):
    """Ordered basis of the degree-n mapping group: triples (k, i, j).

    The triple stands for the elementary map sending basis element i of X_k
    to basis element j of Y_{k+n}; ordering is by source degree, then source
    index, then target index.
    """
    out = []
    for k in x.support:
        r_to = y.rank(k + n)
        if not r_to:
            continue
        for i in range(x.rank(k)):
            for j in range(r_to):
                out.append((k, i, j))
    return out


def hom_complex(x: ChainComplex, y: ChainComplex) -> ChainComplex:
    """The mapping complex with Map(X, Y)_n = prod_k Ab(X_k, Y_{k+n}).

    Basis ordering in each degree follows :func:`hom_basis`; the differential
    is the matrix of D(f) = d_Y o f - (-1)^n f o d_X on elementary maps.
    """
    if not x.support or not y.support:
        return zero_complex("Hom(%s,%s)" % (x.name, y.name))
    lo = y.min_degree() - x.max_degree()
    hi = y.max_degree() - x.min_degree()
    bases = {n: hom_basis(x, y, n) for n in range(lo, hi + 1)}
    ranks = {n: len(b) for n, b in bases.items() if b}
    index = {n: {t: c for c, t in enumerate(b)} for n, b in bases.items()}
    labels = {
        n: tuple("%d:%s>%s" % (k, x.label(k, i), y.label(k + n, j)) for (k, i, j) in b)
        for n, b in bases.items()
        if b
    }
    diffs = {}
    for n in ranks:
        if not ranks.get(n - 1):
            continue
        entries = {}
        sign = 1 if n % 2 else -1  # -(-1)^n
        for col, (k, i, j) in enumerate(bases[n]):
            dy = y.diff(k + n)
            for l in range(y.rank(k + n - 1)):
                v = dy[l, j]
                if v:
                    entries[(index[n - 1][(k, i, l)], col)] = entries.get((index[n - 1][(k, i, l)], col), 0) + v
            dx = x.diff(k + 1)
            for i2 in range(x.rank(k + 1)):
                v = dx[i, i2]
                if v:
                    key = (index[n - 1][(k + 1, i2, j)], col)
                    entries[key] = entries.get(key, 0) + sign * v
        diffs[n] = IntMatrix.from_entries(ranks[n - 1], ranks[n], entries)
    return ChainComplex("Hom(%s,%s)" % (x.name, y.name), ranks, diffs, labels)


def graded_map_to_vector(f: GradedMap):
    """Coordinates of f in the hom_basis ordering of its total degree."""
    out = []
    for (k, i, j) in hom_basis(f.source, f.target, f.degree):
        out.append(f.mat(k)[j, i])
    return tuple(out)


def vector_to_graded_map(x: ChainComplex, y: ChainComplex, n: int, vec) -> GradedMap:
    basis = hom_basis(x, y, n)
    if len(vec) != len(basis):
        raise ValueError("vector length %d does not match basis size %d" % (len(vec), len(basis)))
    entries: Dict[int, dict] = {}
    for v, (k, i, j) in zip(vec, basis):
        if v:
            entries.setdefault(k, {})[(j, i)] = v
    mats = {k: IntMatrix.from_entries(y.rank(k + n), x.rank(k), es) for k, es in entries.items()}
    return GradedMap(x, y, n, mats)


# -- homology ----------------------------------------------------------------


@dataclass(frozen=True)
class HomologySummary:
    """Per-degree Betti numbers and torsion coefficients."""

    betti: Mapping[int, int]
    torsion: Mapping[int, Tuple[int, ...]]

    def is_trivial(self) -> bool:
        return not self.betti and not self.torsion

    def group(self, d: int) -> str:
        parts = ["Z"] * self.betti.get(d, 0) + ["Z/%d" % t for t in self.torsion.get(d, ())]
        return " + ".join(parts) if parts else "0"

    def degrees(self):
        return sorted(set(self.betti) | set(self.torsion))

    def __str__(self):
        degs = self.degrees()
        if not degs:
            return "trivial homology"
        return "; ".join("H_%d = %s" % (d, self.group(d)) for d in degs)


def homology(x: ChainComplex) -> HomologySummary:
    """Betti numbers and torsion via Smith normal form of the differentials."""
    betti = {}
    torsion = {}
    degrees = set(x.support)
    for d in sorted(degrees):
        r = x.rank(d)
        r_out = matrix_rank(x.diff(d)) if x.rank(d - 1) else 0
        inv_in = invariant_factors(x.diff(d + 1)) if x.rank(d + 1) else ()
        b = r - r_out - len(inv_in)
        t = tuple(v for v in inv_in if v > 1)
        if b:
            betti[d] = b
        if t:
            torsion[d] = t
    return HomologySummary(betti, torsion)


def is_acyclic(x: ChainComplex) -> bool:
    return homology(x).is_trivial()


def is_weak_equivalence(f: GradedMap) -> bool:
    """A chain map between bounded free complexes is a quasi-isomorphism
    exactly when its cone is acyclic."""
    return is_acyclic(cone(f))


def is_nullhomotopic(f: GradedMap) -> Optional[GradedMap]:
    """A graded map h with D(h) = f, or None if f is not a boundary.

    This is an exact integer linear solve against the differential of the
    mapping complex, so a returned witness is exact and the None answer is a
    certified nonexistence over the integers.
    """
    x, y, r = f.source, f.target, f.degree
    target_basis = hom_basis(x, y, r)
    b = graded_map_to_vector(f)
    if not target_basis:
        return GradedMap(x, y, r + 1)
    h = hom_complex(x, y)
    m = h.diff(r + 1) if h.rank(r + 1) else IntMatrix.zeros(len(target_basis), len(hom_basis(x, y, r + 1)))
    if m.rows != len(target_basis):
        # degree r sits outside the support of the mapping complex
        m = IntMatrix.zeros(len(target_basis), len(hom_basis(x, y, r + 1)))
    sol = solve(m, b)
    if sol is None:
        return None
    return vector_to_graded_map(x, y, r + 1, sol)


# -- randomized generators (exact, seeded; used by the test sweeps) ----------


def random_complex(rng: random.Random, max_rank=3, max_width=4, min_degree=-1, max_degree=3, name=None):
    """A random bounded free complex with an honestly random differential.

    Differentials are built top down: each matrix has its columns drawn from
    the kernel lattice of the previous one, so d o d = 0 holds exactly while
    ranks, torsion and homology stay varied.
    """
    lo = rng.randint(min_degree, max_degree - 1)
    width = rng.randint(1, max_width)
    degrees = list(range(lo, min(lo + width, max_degree + 1)))
    ranks = {d: rng.randint(0, max_rank) for d in degrees}
    if not any(ranks.values()):
        ranks[rng.choice(degrees)] = rng.randint(1, max_rank)
    diffs = {}
    prev: Optional[IntMatrix] = None  # differential leaving the degree below
    for d in sorted(ranks):
        r_from = ranks[d]
        r_to = ranks.get(d - 1, 0)
        if not r_from or not r_to:
            prev = None if not r_from else IntMatrix.zeros(0, r_from)
            continue
        if prev is None or prev.rows == 0:
            m = IntMatrix(r_to, r_from, [[rng.randint(-2, 2) for _ in range(r_from)] for _ in range(r_to)])
        else:
            kb = kernel_basis(prev)
            cols = []
            for _ in range(r_from):
                acc = [0] * r_to
                for v in kb:
                    c = rng.randint(-1, 1)
                    if c:
                        for i in range(r_to):
                            acc[i] += c * v[i]
                cols.append(acc)
            m = IntMatrix(r_to, r_from, [[cols[j][i] for j in range(r_from)] for i in range(r_to)])
        diffs[d] = m
        prev = m
    if name is None:
        name = "X%d" % rng.randint(0, 10**6)
    return ChainComplex(name, ranks, diffs)


def random_chain_map(rng: random.Random, x: ChainComplex, y: ChainComplex, spread=1) -> GradedMap:
    """A random degree-0 cycle of the mapping complex, i.e. a chain map."""
    h = hom_complex(x, y)
    basis = hom_basis(x, y, 0)
    if not basis:
        return GradedMap(x, y, 0)
    m = h.diff(0) if h.rank(0) and h.rank(-1) else IntMatrix.zeros(0, len(basis))
    vec = [0] * len(basis)
    for v in kernel_basis(m):
        c = rng.randint(-spread, spread)
        if c:
            for i in range(len(basis)):
                vec[i] += c * v[i]
    return vector_to_graded_map(x, y, 0, vec)


def random_graded_map(rng: random.Random, x: ChainComplex, y: ChainComplex, degree: int, spread=1) -> GradedMap:
    """A random graded map (no cycle condition)."""
    mats = {}
    for d in x.support:
        r_to = y.rank(d + degree)
        if not r_to:
            continue
        mats[d] = IntMatrix(
            r_to, x.rank(d), [[rng.randint(-spread, spread) for _ in range(x.rank(d))] for _ in range(r_to)]
        )
    return GradedMap(x, y, degree, mats)
