"""Code verification: separation, domination, certificates and witnesses.

The fixed expected values here were frozen from exhaustive computation on
the small instances; they double as regression anchors for the certificate
tie-breaking rules.
"""

import pytest

from idcodes import (
    FamilySpec,
    build_cycle,
    build_path,
    check_code,
    is_dominating,
    min_radius_set,
    separates,
)
from idcodes.families import WitnessKind
from idcodes.graphs import distances


def test_separates_on_path():
    # With code {0, 4} on the 5-path, vertex 1 is separated from vertex 0
    # only at radius 0, where it is in turn not separated from vertex 2.
    dm = distances(build_path(5))
    code = [0, 4]
    assert separates(dm, code, 0, 1, 0)
    assert not separates(dm, code, 0, 1, 1)
    assert not separates(dm, code, 0, 1, 2)
    assert not separates(dm, code, 1, 2, 0)


def test_separates_rejects_equal_vertices():
    dm = distances(build_path(3))
    with pytest.raises(ValueError):
        separates(dm, [0], 1, 1, 0)


def test_is_dominating_failure_names_smallest_vertex():
    dm = distances(build_cycle(8))
    result = is_dominating(dm, [2], [0, 2])
    assert not result
    assert result.witness.kind is WitnessKind.NOT_DOMINATED
    assert result.witness.vertices == (5,)
    assert result.witness.radii_tried == (0, 2)


def test_is_dominating_success():
    dm = distances(build_cycle(8))
    assert is_dominating(dm, [0, 4], [0, 1, 2])
    with pytest.raises(ValueError):
        is_dominating(dm, [0], [])


def test_weak_certificate_prefers_nonempty_signatures():
    # {2, 3} on the 5-path: the endpoints of the code get radius 0, their
    # neighbors radius 1, and the far endpoint radius 2 even though its
    # empty ball at radius 1 would already be unique.
    report = check_code(build_path(5), [2, 3], FamilySpec.weak(2))
    assert report.valid
    assert report.certificate.per_vertex == {
        0: (2,),
        1: (1,),
        2: (0,),
        3: (0,),
        4: (1,),
    }


def test_weak_code_on_cycle_twelve():
    report = check_code(build_cycle(12), [2, 3, 8, 9], FamilySpec.weak(2))
    assert report.valid
    assert report.certificate.per_vertex == {
        0: (2,), 1: (1,), 2: (0,), 3: (0,), 4: (1,), 5: (2,),
        6: (2,), 7: (1,), 8: (0,), 9: (0,), 10: (1,), 11: (2,),
    }
    assert report.certificate.per_pair is None


def test_same_code_is_not_identifying():
    report = check_code(build_path(5), [2, 3], FamilySpec.identifying(2))
    assert not report.valid
    w = report.witness
    assert w.kind is WitnessKind.PAIR_NOT_SEPARATED
    assert w.vertices == (1, 2)
    assert w.radii_tried == (2,)


def test_light_code_with_certificate_and_pairs():
    report = check_code(build_path(5), [0, 4], FamilySpec.light(2))
    assert report.valid
    assert report.certificate.per_vertex == {
        0: (0,),
        1: (0, 1),
        2: (0, 1),
        3: (0, 1),
        4: (0,),
    }
    # Every pair resolved at some radius, recorded explicitly.
    assert report.certificate.per_pair[(1, 2)] == 1
    assert report.certificate.per_pair[(0, 4)] == 0
    assert len(report.certificate.per_pair) == 10


def test_light_but_not_weak_witness():
    report = check_code(build_path(5), [0, 4], FamilySpec.weak(2))
    assert not report.valid
    w = report.witness
    assert w.kind is WitnessKind.VERTEX_NOT_IDENTIFIABLE
    assert w.vertices == (1,)
    assert w.radii_tried == (0, 1, 2)
    assert w.blocking == ((0, 2), (1, 0), (2, 0))


def test_blocking_pairs_replay():
    # Each (radius, opponent) entry must actually block: the vertex and its
    # opponent see the same code slice at that radius.
    g = build_path(5)
    dm = distances(g)
    report = check_code(g, [0, 4], FamilySpec.weak(2))
    (x,) = report.witness.vertices
    for rho, y in report.witness.blocking:
        assert not separates(dm, [0, 4], x, y, rho)


def test_certificate_replays_as_unique_signatures():
    g = build_cycle(12)
    code = [2, 3, 8, 9]
    dm = distances(g)
    report = check_code(g, code, FamilySpec.weak(2))
    for x, (rho,) in report.certificate.per_vertex.items():
        for y in range(12):
            if y != x:
                assert separates(dm, code, x, y, rho)


def test_empty_code_fails_domination():
    report = check_code(build_path(5), [], FamilySpec.weak(1))
    assert not report.valid
    assert report.witness.kind is WitnessKind.NOT_DOMINATED
    assert report.witness.vertices == (0,)


def test_without_certificate():
    report = check_code(
        build_cycle(12), [2, 3, 8, 9], FamilySpec.weak(2), with_certificate=False
    )
    assert report.valid
    assert report.certificate is None


def test_report_to_dict_round_trips_key_facts():
    report = check_code(build_cycle(8), [0, 2, 6], FamilySpec.weak(2))
    d = report.to_dict()
    assert d["valid"] is True
    assert d["code"] == [0, 2, 6]
    assert d["family"] == {"kind": "weak", "r": 2}
    assert d["certificate"]["per_vertex"]["3"] == [2]


def test_min_radius_set_examples():
    assert min_radius_set(build_path(5), [0, 4], 2, 1) == (0, 1)
    # A single code vertex cannot tell the far vertices apart at radius 1.
    assert min_radius_set(build_path(5), [0], 1, 3) is None
    with pytest.raises(ValueError):
        min_radius_set(build_path(5), [0], -1, 0)
    with pytest.raises(ValueError):
        min_radius_set(build_path(5), [0], 1, 9)


def test_weak_equals_general_one_budget():
    g = build_cycle(9)
    weak = FamilySpec.weak(2)
    general = FamilySpec.general(1, range(3))
    for code in ([0, 2, 4, 6], [0, 3, 6], [1, 2, 5, 8], [0, 1]):
        assert (
            check_code(g, code, weak, with_certificate=False).valid
            == check_code(g, code, general, with_certificate=False).valid
        )


def test_light_equals_general_full_budget():
    g = build_cycle(9)
    light = FamilySpec.light(2)
    general = FamilySpec.general(3, range(3))
    for code in ([0, 2, 4, 6], [0, 3, 6], [1, 2, 5, 8], [0, 1]):
        assert (
            check_code(g, code, light, with_certificate=False).valid
            == check_code(g, code, general, with_certificate=False).valid
        )
