"""Simplices of the differential graded nerve, concretely.

An n-simplex is a family of complexes X_0, ..., X_n together with one graded
map f(<i_0..i_k>) : X_{i_0} -> X_{i_k} of degree k-1 for every strictly
increasing sequence in [n] of length >= 2.  Strict unitality extends the
family to all nondecreasing sequences:

    f(<i,i>) = id,    f(<i_0..i_k>) = 0  for k >= 2 with a repeated adjacent entry.

The family is a simplex exactly when every sequence satisfies the coherence
identity

    -D(f(a)) = sum_{j=1..k-1} (-1)^j f(inner face_j a)
             + sum_{j=1..k-1} (-1)^{(j-1)k} f(<a_j..a_k>) o f(<a_0..a_j>),

equivalently the Maurer-Cartan equation D(f) + f*f = 0 in the convolution
algebra of the path coalgebra.  Checking it on strictly increasing sequences
suffices: on degenerate sequences it follows from strict unitality.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .complexes import (
    ChainComplex,
    GradedMap,
    hom_differential,
    random_chain_map,
    random_complex,
    random_graded_map,
)
from .reporting import Report


def _seq_key(seq) -> str:
    return ",".join(str(v) for v in seq)


class NerveSimplex:
    """Objects plus coherence maps, keyed by strictly increasing sequences."""

    def __init__(self, objects: Sequence[ChainComplex], maps: Mapping[tuple, GradedMap]):
        self.objects: Tuple[ChainComplex, ...] = tuple(objects)
        if not self.objects:
            raise ValueError("a simplex needs at least one object")
        self.maps: Dict[tuple, GradedMap] = {}
        n = self.n
        for key, f in maps.items():
            key = tuple(int(v) for v in key)
            if len(key) < 2:
                raise ValueError("map keys have length >= 2, got %r" % (key,))
            if any(b <= a for a, b in zip(key, key[1:])):
                raise ValueError("map key %r is not strictly increasing" % (key,))
            if key[0] < 0 or key[-1] > n:
                raise ValueError("map key %r leaves [%d]" % (key, n))
            if f.degree != len(key) - 2:
                raise ValueError("map at %r has degree %d, expected %d" % (key, f.degree, len(key) - 2))
            if f.source != self.objects[key[0]] or f.target != self.objects[key[-1]]:
                raise ValueError("map at %r has wrong endpoints" % (key,))
            self.maps[key] = f

    @property
    def n(self) -> int:
        return len(self.objects) - 1

    def cochain_keys(self):
        return sorted(self.maps, key=lambda k: (len(k), k))

    def is_complete(self) -> bool:
        return all(key in self.maps for key in increasing_sequences(self.n))

    def eval(self, seq) -> GradedMap:
        """Value on any nondecreasing sequence, via strict unitality."""
        seq = tuple(int(v) for v in seq)
        if len(seq) < 2:
            raise ValueError("sequences have length >= 2, got %r" % (seq,))
        if seq[0] < 0 or seq[-1] > self.n:
            raise ValueError("sequence %r leaves [%d]" % (seq, self.n))
        if any(b < a for a, b in zip(seq, seq[1:])):
            raise ValueError("sequence %r is not nondecreasing" % (seq,))
        if len(seq) == 2 and seq[0] == seq[1]:
            return GradedMap.identity(self.objects[seq[0]])
        if len(seq) > 2 and any(a == b for a, b in zip(seq, seq[1:])):
            return GradedMap.zero(self.objects[seq[0]], self.objects[seq[-1]], len(seq) - 2)
        got = self.maps.get(seq)
        if got is None:
            raise ValueError("no cochain stored at %s" % (seq,))
        return got

    def __eq__(self, other):
        return (
            isinstance(other, NerveSimplex)
            and self.objects == other.objects
            and self.maps == other.maps
        )

    __hash__ = None

    def __repr__(self):
        return "NerveSimplex(n=%d, %d maps)" % (self.n, len(self.maps))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "objects": [x.to_json() for x in self.objects],
            "maps": {_seq_key(k): self.maps[k].to_json() for k in self.cochain_keys()},
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "NerveSimplex":
        for field in ("n", "objects", "maps"):
            if field not in obj:
                raise ValueError("simplex is missing the %r field" % field)
        objects = [ChainComplex.from_json(o) for o in obj["objects"]]
        if len(objects) != int(obj["n"]) + 1:
            raise ValueError("simplex declares n=%s but carries %d objects" % (obj["n"], len(objects)))
        maps = {}
        for key_text, mobj in obj["maps"].items():
            try:
                key = tuple(int(p) for p in str(key_text).split(","))
            except ValueError:
                raise ValueError("cannot parse map key %r" % key_text)
            if len(key) < 2 or any(b <= a for a, b in zip(key, key[1:])) or key[0] < 0 or key[-1] >= len(objects):
                raise ValueError("map key %r is not a strictly increasing sequence in range" % key_text)
            maps[key] = GradedMap.from_json(mobj, objects[key[0]], objects[key[-1]])
        return cls(objects, maps)


def increasing_sequences(n: int, min_len: int = 2):
    """All strictly increasing sequences in [n] of length >= min_len."""
    out = []
    for size in range(min_len, n + 2):
        out.extend(combinations(range(n + 1), size))
    return out


def eval_cochain(s: NerveSimplex, seq) -> GradedMap:
    return s.eval(seq)


def coherence_rhs(s: NerveSimplex, seq: tuple) -> GradedMap:
    """sum_j (-1)^j f(face_j) + sum_j (-1)^{(j-1)k} f(suffix_j) o f(prefix_j)."""
    k = len(seq) - 1
    acc = GradedMap.zero(s.objects[seq[0]], s.objects[seq[-1]], k - 2)
    for j in range(1, k):
        face = s.eval(seq[:j] + seq[j + 1 :])
        acc = acc + (face if j % 2 == 0 else -face)
        comp = s.eval(seq[j:]) @ s.eval(seq[: j + 1])
        sign = -1 if ((j - 1) * k) % 2 else 1
        acc = acc + (comp if sign == 1 else -comp)
    return acc


def coherence_defect(s: NerveSimplex, seq) -> GradedMap:
    """D(f(seq)) + rhs; zero exactly when the coherence identity holds at seq."""
    seq = tuple(seq)
    return hom_differential(s.eval(seq)) + coherence_rhs(s, seq)


def validate_maurer_cartan(s: NerveSimplex) -> Report:
    """Check the coherence identity on every strictly increasing sequence of
    length 2..n+1 (at length 2 the identity degenerates to the chain-map
    condition on the edge).  The report lists one item per sequence, with a
    witness entry on each failure."""
    report = Report()
    for seq in increasing_sequences(s.n, min_len=2):
        defect = coherence_defect(s, seq)
        witness = None
        if not defect.is_zero():
            witness = _first_nonzero_entry(defect)
        report.add("maurer-cartan", _seq_key(seq), defect.is_zero(), witness)
    return report


def _first_nonzero_entry(f: GradedMap) -> str:
    for d in f.source.support:
        m = f.mat(d)
        for i in range(m.rows):
            for j in range(m.cols):
                if m[i, j]:
                    return "degree %d entry (%d,%d) = %d" % (d, i, j, m[i, j])
    return "zero"


def act(sigma, s: NerveSimplex) -> NerveSimplex:
    """Reindex a simplex along an order map sigma : [m] -> [n].

    Objects are pulled back by reindexing and the coherence maps by
    precomposition of sequences, normalized through strict unitality whenever
    sigma collapses adjacent entries.
    """
    values = tuple(sigma.values) if hasattr(sigma, "values") else tuple(sigma)
    if not values or any(b < a for a, b in zip(values, values[1:])):
        raise ValueError("sigma must be a nondecreasing nonempty sequence")
    if values[0] < 0 or values[-1] > s.n:
        raise ValueError("sigma %r leaves [%d]" % (values, s.n))
    objects = [s.objects[v] for v in values]
    maps = {}
    m = len(values) - 1
    for key in increasing_sequences(m):
        maps[key] = s.eval(tuple(values[i] for i in key))
    return NerveSimplex(objects, maps)


def make_strict(maps: Sequence[GradedMap], lone_object: Optional[ChainComplex] = None) -> NerveSimplex:
    """The simplex of a composable string of chain maps: binary values are the
    composites, all higher coherences vanish."""
    if not maps:
        if lone_object is None:
            raise ValueError("a 0-simplex needs its object")
        return NerveSimplex([lone_object], {})
    objects = [maps[0].source]
    for f in maps:
        if f.degree != 0:
            raise ValueError("strict simplices are built from degree-0 maps")
        if not f.is_cycle():
            raise ValueError("strict simplices are built from chain maps")
        if f.source != objects[-1]:
            raise ValueError("maps do not compose")
        objects.append(f.target)
    n = len(maps)
    table: Dict[tuple, GradedMap] = {}
    for key in increasing_sequences(n):
        if len(key) == 2:
            i, j = key
            comp = maps[i]
            for t in range(i + 1, j):
                comp = maps[t] @ comp
            table[key] = comp
        else:
            table[key] = GradedMap.zero(objects[key[0]], objects[key[-1]], len(key) - 2)
    return NerveSimplex(objects, table)


def make_perturbed_2simplex(f: GradedMap, g: GradedMap, h: GradedMap) -> NerveSimplex:
    """A 2-simplex witnessing g o f only up to the homotopy h:
    the long edge is g o f + D(h) and the triangle is filled by h."""
    if g.source != f.target:
        raise ValueError("g must compose with f")
    if h.degree != 1 or h.source != f.source or h.target != g.target:
        raise ValueError("h must be a degree-1 map from the source of f to the target of g")
    long_edge = (g @ f) + hom_differential(h)
    return NerveSimplex(
        [f.source, f.target, g.target],
        {(0, 1): f, (1, 2): g, (0, 2): long_edge, (0, 1, 2): h},
    )


# -- seeded generators for the randomized sweeps ------------------------------


def random_simplex(rng: random.Random, n: int, max_rank=3, max_width=4, perturb=True) -> NerveSimplex:
    """A random valid n-simplex, n <= 3.

    Strict simplices are built from random chain maps; for n = 2 and n = 3 a
    perturbation by random homotopies is applied, with the compensating
    corrections that keep every coherence identity exact.  The result is
    revalidated before it is returned.
    """
    if n < 0 or n > 3:
        raise ValueError("random simplices are generated for 0 <= n <= 3")
    objects = [
        random_complex(rng, max_rank=max_rank, max_width=max_width, name="X%d" % i)
        for i in range(n + 1)
    ]
    chain_maps = [random_chain_map(rng, objects[i], objects[i + 1]) for i in range(n)]
    if n == 0:
        return make_strict([], lone_object=objects[0])
    s = make_strict(chain_maps)
    if not perturb or n == 1:
        return s
    if n == 2:
        h = random_graded_map(rng, objects[0], objects[2], 1)
        out = make_perturbed_2simplex(chain_maps[0], chain_maps[1], h)
    else:
        out = _perturbed_3simplex(rng, objects, chain_maps)
    report = validate_maurer_cartan(out)
    if not report.ok:
        raise AssertionError("generator produced an invalid simplex: %r" % report.failures()[0])
    return out


def _perturbed_3simplex(rng: random.Random, objects, maps) -> NerveSimplex:
    """Strict 3-simplex deformed by three independent homotopies.

    h1 fills <0,1,2> (pushing D(h1) onto the edge <0,2> and -f(<2,3>) o h1
    onto <0,2,3>), h2 fills <1,2,3> (pushing D(h2) onto <1,3> and
    -h2 o f(<0,1>) onto <0,1,3>), and h3 shifts <0,1,3> and <0,2,3> together
    while pushing D(h3) onto <0,3>.  Each deformation preserves every
    coherence identity, which the caller revalidates anyway.
    """
    f1, f2, f3 = maps
    x0, x1, x2, x3 = objects
    h1 = random_graded_map(rng, x0, x2, 1)
    h2 = random_graded_map(rng, x1, x3, 1)
    h3 = random_graded_map(rng, x0, x3, 1)
    zero03 = GradedMap.zero(x0, x3, 1)
    table = {
        (0, 1): f1,
        (1, 2): f2,
        (2, 3): f3,
        (0, 2): (f2 @ f1) + hom_differential(h1),
        (1, 3): (f3 @ f2) + hom_differential(h2),
        (0, 3): (f3 @ f2 @ f1) + hom_differential(h3),
        (0, 1, 2): h1,
        (1, 2, 3): h2,
        (0, 1, 3): (zero03 - (h2 @ f1)) + h3,
        (0, 2, 3): (zero03 - (f3 @ h1)) + h3,
        (0, 1, 2, 3): GradedMap.zero(x0, x3, 2),
    }
    return NerveSimplex(objects, table)
