import random

import pytest

from dgframes.complexes import (
    ChainComplex,
    GradedMap,
    cone,
    cylinder,
    hom_differential,
    homology,
    is_acyclic,
    is_nullhomotopic,
    random_chain_map,
    random_complex,
    random_graded_map,
    shift,
    zero_complex,
)
from dgframes.dg_nerve import (
    NerveSimplex,
    make_perturbed_2simplex,
    make_strict,
    random_simplex,
    validate_maurer_cartan,
)
from dgframes.exact_linalg import IntMatrix, block
from dgframes.frames import (
    build_frame_diagram,
    build_frame_object,
    check_simplicial_compat,
    include_last,
    is_homotopical,
    is_reedy_cofibrant,
    last_vertex_data,
    latching_data,
    latching_map,
    recover_map_from_cylinder,
    retraction,
    split_acyclic_cofibration,
    structure_map,
    verify_mc_extension,
)
from dgframes.simplicial import DMorphism, OrderMap, enumerate_d_objects, enumerate_order_maps


def point(name="pt", label="p"):
    return ChainComplex(name, {0: 1}, {}, {0: (label,)})


def direct_sum(x, y, name="sum"):
    degs = sorted(set(x.support) | set(y.support))
    ranks = {d: x.rank(d) + y.rank(d) for d in degs}
    diffs = {}
    for d in degs:
        if ranks.get(d - 1):
            diffs[d] = block(
                [
                    [x.diff(d), IntMatrix.zeros(x.rank(d - 1), y.rank(d))],
                    [IntMatrix.zeros(y.rank(d - 1), x.rank(d)), y.diff(d)],
                ]
            )
    labels = {d: x.labels(d) + y.labels(d) for d in degs}
    total = ChainComplex(name, ranks, diffs, labels)
    incl = GradedMap(
        x,
        total,
        0,
        {
            d: IntMatrix.from_entries(total.rank(d), x.rank(d), {(i, i): 1 for i in range(x.rank(d))})
            for d in x.support
        },
    )
    return total, incl


# -- frame objects -------------------------------------------------------------


def test_copower_frame_of_a_point():
    """Over a 0-simplex on Z (degree 0), the frame at the constant length-3
    sequence has one generator per nonempty subset of {0,1,2}: ranks 3, 3, 1
    in degrees 0, 1, 2, and the homology of a point."""
    s = make_strict([], lone_object=point())
    o = build_frame_object(s, OrderMap((0, 0, 0), 0))
    c = o.complex
    assert c.support == (0, 1, 2)
    assert (c.rank(0), c.rank(1), c.rank(2)) == (3, 3, 1)
    h = homology(c)
    assert h.group(0) == "Z" and h.degrees() == [0]
    assert c.labels(0) == ("0|p", "1|p", "2|p")
    assert c.labels(2) == ("0,1,2|p",)


def test_singleton_frame_is_the_object_itself():
    rng = random.Random(50)
    for n in range(3):
        s = random_simplex(rng, n)
        for i in range(n + 1):
            o = build_frame_object(s, OrderMap((i,), n))
            assert o.complex == s.objects[i]  # labels included


def test_frame_at_an_edge_is_the_mapping_cylinder():
    """B(<0,1>) of a strict 1-simplex coincides with the mapping cylinder of
    its edge, matrix entry for matrix entry and label for label, and the
    summand inclusions and the retraction match the cylinder structure maps."""
    rng = random.Random(51)
    for _ in range(20):
        x = random_complex(rng, name="X")
        y = random_complex(rng, name="Y")
        f = random_chain_map(rng, x, y)
        s = make_strict([f])
        o = build_frame_object(s, OrderMap((0, 1), 1))
        cyl, in_src, in_tgt, proj = cylinder(f)
        assert o.complex == cyl
        assert o.summand_inclusion((0,)) == in_src
        assert o.summand_inclusion((1,)) == in_tgt
        assert retraction(o) == proj


def test_frame_differential_squares_to_zero():
    rng = random.Random(52)
    for n in range(4):
        for _ in range(3):
            s = random_simplex(rng, n)
            for alpha in enumerate_d_objects(n, 2):
                o = build_frame_object(s, alpha)  # check=True raises on d^2 != 0
                assert o.complex.d_squared_defects() == []


def test_build_frame_object_validation():
    rng = random.Random(53)
    s = random_simplex(rng, 1)
    with pytest.raises(ValueError):
        build_frame_object(s, OrderMap((0, 2), 2))  # codomain mismatch
    o = build_frame_object(s, OrderMap((0, 1), 1))
    payload = o.to_json()
    assert payload["alpha"] == "0,1"
    assert set(payload) == {"alpha", "degrees", "labels", "differentials"}
    # deterministic: building twice gives the same complex
    assert build_frame_object(s, OrderMap((0, 1), 1)).complex == o.complex


def test_summand_inclusions_assemble_the_basis():
    rng = random.Random(54)
    s = random_simplex(rng, 2)
    alpha = OrderMap((0, 1, 2), 2)
    o = build_frame_object(s, alpha)
    seen = {d: [0] * o.complex.rank(d) for d in o.complex.support}
    from dgframes.simplicial import nonempty_subsets

    for S in nonempty_subsets(alpha.dom):
        incl = o.summand_inclusion(S)
        x = o.source_complex(S)
        assert incl.degree == len(S) - 1
        for t in x.support:
            m = incl.mat(t)
            for i in range(m.rows):
                for j in range(m.cols):
                    if m[i, j]:
                        assert m[i, j] == 1
                        seen[t + len(S) - 1][i] += 1
    assert all(all(v == 1 for v in row) for row in seen.values())


# -- structure maps ------------------------------------------------------------


def test_structure_maps_are_functorial_chain_maps():
    rng = random.Random(55)
    s = random_simplex(rng, 2)
    diagram = build_frame_diagram(s, max_len=2)
    for mor, g in diagram.morphisms.items():
        assert g.is_cycle()
        assert g.degree == 0
    # identity morphisms act as the identity
    for alpha, o in diagram.objects.items():
        ident = structure_map(diagram, DMorphism.identity(alpha))
        assert ident == GradedMap.identity(o.complex)
    # composition: subset of a subset
    tgt = OrderMap((0, 1, 2), 2)
    mid = OrderMap((0, 2), 2)
    low = OrderMap((2,), 2)
    m1 = DMorphism(mid, tgt, (0, 2))
    m2 = DMorphism(low, mid, (1,))
    lhs = structure_map(diagram, m1.compose(m2))
    rhs = structure_map(diagram, m1) @ structure_map(diagram, m2)
    assert lhs == rhs


def test_structure_maps_restrict_to_cylinder_inclusions():
    rng = random.Random(56)
    x = random_complex(rng, name="X")
    y = random_complex(rng, name="Y")
    f = random_chain_map(rng, x, y)
    s = make_strict([f])
    diagram = build_frame_diagram(s, max_len=1)
    edge = OrderMap((0, 1), 1)
    cyl, in_src, in_tgt, _ = cylinder(f)
    g0 = structure_map(diagram, DMorphism(OrderMap((0,), 1), edge, (0,)))
    g1 = structure_map(diagram, DMorphism(OrderMap((1,), 1), edge, (1,)))
    assert g0 == in_src and g1 == in_tgt
    with pytest.raises(ValueError):
        structure_map(diagram, DMorphism(OrderMap((0, 1), 2), OrderMap((0, 1, 2), 2), (0, 1)))


# -- latching ------------------------------------------------------------------


def test_latching_of_an_edge():
    rng = random.Random(57)
    x = random_complex(rng, name="X")
    y = random_complex(rng, name="Y")
    f = random_chain_map(rng, x, y)
    s = make_strict([f])
    o = build_frame_object(s, OrderMap((0, 1), 1))
    sub, incl, coker = latching_data(o)
    # the latching subobject of the cylinder is X (+) Y, on the nose
    for d in sub.support:
        assert sub.rank(d) == x.rank(d) + y.rank(d)
        assert sub.labels(d) == tuple("0|%s" % l for l in x.labels(d)) + tuple(
            "1|%s" % l for l in y.labels(d)
        )
    assert sub.d_squared_defects() == []
    assert incl.is_cycle()
    # the quotient is the shifted source, literally
    assert coker == shift(x, 1)


def test_latching_of_a_singleton_is_zero():
    rng = random.Random(58)
    s = random_simplex(rng, 1)
    diagram = build_frame_diagram(s, max_len=1)
    sub, incl = latching_map(diagram, OrderMap((0,), 1))
    assert sub.support == ()
    assert sub == zero_complex("L(0)")
    with pytest.raises(ValueError):
        latching_map(diagram, OrderMap((0, 0, 0, 0), 1))  # not in a max_len=1 diagram


def test_is_reedy_cofibrant_passes_on_valid_simplices():
    rng = random.Random(59)
    for n in range(3):
        s = random_simplex(rng, n)
        report = is_reedy_cofibrant(build_frame_diagram(s, max_len=2))
        assert report.ok, report.failures()
        checks = {item.check for item in report.items}
        assert checks == {"latching-closure", "latching-split", "latching-cokernel"}


def test_is_reedy_cofibrant_flags_a_tampered_frame():
    """Corrupt the full-subset block of one frame differential; the quotient
    no longer equals the shifted source and the cokernel check must fail at
    that sequence.  The two other checks are insensitive to this block."""
    x = ChainComplex("X", {0: 1, 1: 1}, {1: IntMatrix.from_rows([[2]])}, {0: ("e0",), 1: ("e1",)})
    s = make_strict([], lone_object=x)
    diagram = build_frame_diagram(s, max_len=1)
    alpha = OrderMap((0, 0), 0)
    o = diagram.objects[alpha]
    c = o.complex
    rows = c.diff(2).to_lists()
    assert rows[2] == [-2]  # the (0,1)-generator block carries the shifted differential
    rows[2] = [5]
    bad = ChainComplex(
        c.name,
        {d: c.rank(d) for d in c.support},
        {1: c.diff(1), 2: IntMatrix.from_rows(rows)},
        {d: c.labels(d) for d in c.support},
        check=False,
    )
    from dgframes.frames import FrameObject

    diagram.objects[alpha] = FrameObject(s, alpha, bad, o.basis)
    report = is_reedy_cofibrant(diagram)
    assert not report.ok
    failed = {(i.check, i.location) for i in report.failures()}
    assert ("latching-cokernel", "0,0") in failed
    assert ("latching-closure", "0,0") not in failed


# -- last-vertex data ----------------------------------------------------------


def test_last_vertex_identities():
    rng = random.Random(60)
    for n in range(4):
        s = random_simplex(rng, n)
        for alpha in enumerate_d_objects(n, 2):
            o = build_frame_object(s, alpha)
            j, r, h = last_vertex_data(o)
            assert j.is_cycle() and r.is_cycle()
            assert r @ j == GradedMap.identity(j.source)
            assert hom_differential(h) == (j @ r) - GradedMap.identity(o.complex)
            assert is_acyclic(cone(j)) and is_acyclic(cone(r))


def test_last_vertex_on_a_singleton():
    rng = random.Random(61)
    s = random_simplex(rng, 2)
    o = build_frame_object(s, OrderMap((1,), 2))
    j, r, h = last_vertex_data(o)
    assert j == GradedMap.identity(o.complex)
    assert r == GradedMap.identity(o.complex)
    assert h.is_zero()


def test_include_last_lands_on_the_last_singleton():
    rng = random.Random(62)
    s = random_simplex(rng, 2)
    alpha = OrderMap((0, 2), 2)
    o = build_frame_object(s, alpha)
    assert include_last(o) == o.summand_inclusion((1,))
    assert include_last(o).source == s.objects[2]


# -- homotopical and simplicial checks ------------------------------------------


def test_is_homotopical_passes_on_valid_simplices():
    rng = random.Random(63)
    for n in range(3):
        s = random_simplex(rng, n)
        report = is_homotopical(build_frame_diagram(s, max_len=2))
        assert report.ok, report.failures()


def test_is_homotopical_skips_non_max_preserving_morphisms():
    """With edge multiplication by 2, the source-end inclusion <0> -> <0,1> is
    not a quasi-isomorphism -- and carries no requirement.  The checker must
    skip it and pass, while still covering the max-preserving inclusions."""
    x = point("x")
    times2 = GradedMap(x, point("y"), 0, {0: IntMatrix.from_rows([[2]])})
    s = make_strict([times2])
    diagram = build_frame_diagram(s, max_len=1)
    report = is_homotopical(diagram)
    assert report.ok
    locations = [i.location for i in report.items]
    assert any(loc.startswith("1->0,1") for loc in locations)
    assert not any(loc.startswith("0->0,1") for loc in locations)
    # sanity: that skipped map is indeed not an equivalence
    src_incl = structure_map(
        diagram, DMorphism(OrderMap((0,), 1), OrderMap((0, 1), 1), (0,))
    )
    assert not is_acyclic(cone(src_incl))


def test_is_homotopical_flags_a_tampered_structure_map():
    x = point("x")
    s = make_strict([GradedMap.identity(x)])
    diagram = build_frame_diagram(s, max_len=1)
    mor = DMorphism(OrderMap((1,), 1), OrderMap((0, 1), 1), (1,))
    diagram.morphisms[mor] = diagram.morphisms[mor].scale(2)
    report = is_homotopical(diagram)
    assert not report.ok
    assert any("1->0,1" in i.location for i in report.failures())
    # a non-chain-map entry is reported distinctly
    x2 = ChainComplex("x2", {0: 1, 1: 1}, {}, {0: ("a",), 1: ("b",)})
    s2 = make_strict([GradedMap.identity(x2)])
    diagram2 = build_frame_diagram(s2, max_len=1)
    noncycle = GradedMap(
        diagram2.objects[OrderMap((1,), 1)].complex,
        diagram2.objects[OrderMap((0, 1), 1)].complex,
        0,
        {1: IntMatrix.from_rows([[0], [0], [1]])},
    )
    assert not noncycle.is_cycle()
    diagram2.morphisms[DMorphism(OrderMap((1,), 1), OrderMap((0, 1), 1), (1,))] = noncycle
    report = is_homotopical(diagram2)
    flagged = [i for i in report.failures() if "1->0,1" in i.location]
    assert flagged and flagged[0].witness == "structure map is not a chain map"


def test_check_simplicial_compat():
    rng = random.Random(64)
    s = random_simplex(rng, 2)
    for m in range(3):
        for sigma in enumerate_order_maps(2, m):
            report = check_simplicial_compat(sigma, s, max_len=2)
            assert report.ok, (sigma.key(), report.failures())
            assert len(report.items) == len(enumerate_d_objects(m, 2))


# -- splitting, recovery, extension ---------------------------------------------


def test_split_identity():
    rng = random.Random(65)
    x = random_complex(rng, name="X")
    p, h = split_acyclic_cofibration(GradedMap.identity(x))
    assert p == GradedMap.identity(x)
    assert h.is_zero()


def test_split_cylinder_inclusion():
    rng = random.Random(66)
    for _ in range(8):
        x = random_complex(rng, name="X")
        y = random_complex(rng, name="Y")
        f = random_chain_map(rng, x, y)
        cyl, _, in_tgt, _ = cylinder(f)
        p, h = split_acyclic_cofibration(in_tgt)
        assert p.is_cycle()
        assert p @ in_tgt == GradedMap.identity(y)
        assert hom_differential(h) == (in_tgt @ p) - GradedMap.identity(cyl)
        assert (h @ in_tgt).is_zero()


def test_split_summand_inclusion():
    rng = random.Random(67)
    x = random_complex(rng, name="X")
    acyclic = ChainComplex("D", {0: 1, 1: 1}, {1: IntMatrix.from_rows([[1]])}, {0: ("a",), 1: ("b",)})
    total, incl = direct_sum(x, acyclic)
    p, h = split_acyclic_cofibration(incl)
    assert p @ incl == GradedMap.identity(x)
    assert hom_differential(h) == (incl @ p) - GradedMap.identity(total)


def test_split_rejects_bad_inputs():
    pt = point()
    times2 = GradedMap(pt, point("q"), 0, {0: IntMatrix.from_rows([[2]])})
    with pytest.raises(ValueError):
        split_acyclic_cofibration(times2)  # not degreewise split injective
    total, incl = direct_sum(pt, point("q", "q"))
    with pytest.raises(ValueError):
        split_acyclic_cofibration(incl)  # cone is not acyclic
    rng = random.Random(68)
    x = random_complex(rng, name="X")
    with pytest.raises(ValueError):
        split_acyclic_cofibration(random_graded_map(rng, x, x, 1))  # degree 1
    w = ChainComplex("W", {0: 1, 1: 1}, {1: IntMatrix.from_rows([[2]])}, {0: ("e0",), 1: ("e1",)})
    noncycle = GradedMap(w, w, 0, {0: IntMatrix.from_rows([[1]])})
    assert not noncycle.is_cycle()
    with pytest.raises(ValueError):
        split_acyclic_cofibration(noncycle)


def test_recover_edge_exactly_in_degree_zero():
    """For complexes concentrated in degree 0 the recovery has no room to
    differ: it must return the edge itself."""
    x = ChainComplex("X", {0: 2}, {}, {0: ("x0", "x1")})
    y = ChainComplex("Y", {0: 2}, {}, {0: ("y0", "y1")})
    g = GradedMap(x, y, 0, {0: IntMatrix.from_rows([[2, 1], [0, 3]])})
    s = make_strict([g])
    o = build_frame_object(s, OrderMap((0, 1), 1))
    assert recover_map_from_cylinder(o) == g


def test_recover_edge_up_to_homotopy():
    rng = random.Random(69)
    for _ in range(6):
        x = random_complex(rng, max_rank=2, max_width=3, name="X")
        y = random_complex(rng, max_rank=2, max_width=3, name="Y")
        f = random_chain_map(rng, x, y)
        s = make_strict([f])
        o = build_frame_object(s, OrderMap((0, 1), 1))
        recovered = recover_map_from_cylinder(o)
        assert recovered.is_cycle()
        assert is_nullhomotopic(recovered - f) is not None
    with pytest.raises(ValueError):
        recover_map_from_cylinder(build_frame_object(s, OrderMap((0, 0), 1)))
    s2 = random_simplex(rng, 2)
    with pytest.raises(ValueError):
        recover_map_from_cylinder(build_frame_object(s2, OrderMap((0, 1), 2)))


def test_verify_mc_extension():
    rng = random.Random(70)
    f, gmap = None, None
    x = random_complex(rng, name="X")
    y = random_complex(rng, name="Y")
    z = random_complex(rng, name="Z")
    f = random_chain_map(rng, x, y)
    gmap = random_chain_map(rng, y, z)
    h = random_graded_map(rng, x, z, 1)
    full = make_perturbed_2simplex(f, gmap, h)
    partial = NerveSimplex(full.objects, {k: v for k, v in full.maps.items() if k != (0, 1, 2)})
    assert verify_mc_extension(partial, h)
    assert verify_mc_extension(partial, h + hom_differential(random_graded_map(rng, x, z, 2)))
    strict = make_strict([f, gmap])
    strict_partial = NerveSimplex(strict.objects, {k: v for k, v in strict.maps.items() if k != (0, 1, 2)})
    assert verify_mc_extension(strict_partial, GradedMap.zero(x, z, 1))
    # a candidate that misses the coherence identity is rejected; build over a
    # complex whose hom differential is visibly nonzero in degree 1
    w = ChainComplex("W", {0: 1, 1: 1}, {1: IntMatrix.from_rows([[2]])}, {0: ("e0",), 1: ("e1",)})
    e = GradedMap(w, w, 1, {0: IntMatrix.from_rows([[1]])})  # e0 -> e1
    assert not hom_differential(e).is_zero()
    wfull = make_perturbed_2simplex(GradedMap.identity(w), GradedMap.identity(w), e)
    wpartial = NerveSimplex(wfull.objects, {k: v for k, v in wfull.maps.items() if k != (0, 1, 2)})
    assert verify_mc_extension(wpartial, e)
    assert not verify_mc_extension(wpartial, e.scale(2))
    with pytest.raises(ValueError):
        verify_mc_extension(NerveSimplex([x], {}), GradedMap.zero(x, x, 0))
    gap = NerveSimplex(full.objects, {k: v for k, v in full.maps.items() if len(k) == 2 and k != (0, 2)})
    with pytest.raises(ValueError):
        verify_mc_extension(gap, h)
