import json

import pytest
from hypothesis import given, settings

import dnumbers as dn
from dnumbers import oracle
from dnumbers.document import DocumentError

from conftest import raw_dnumbers

MINIMAL = json.dumps({"frame": ["a", "b"],
                      "masses": [{"set": ["a", "b"], "mass": 1}]})


def test_minimal_vacuous():
    frame, d = dn.parse_document(MINIMAL)
    assert frame.elements == ("a", "b")
    assert d.completed
    assert d.masses == {frame.theta_mask: 1.0}


def test_incomplete_document_stays_raw():
    frame, d = dn.parse_document(json.dumps(
        {"frame": ["a"], "masses": [{"set": ["a"], "mass": 0.6}]}))
    assert not d.completed
    assert d.total_mass == pytest.approx(0.6)


def test_bytes_accepted():
    frame, d = dn.parse_document(MINIMAL.encode())
    assert d.completed


def test_full_document():
    frame, d = dn.parse_document(json.dumps({
        "frame": ["a", "b"],
        "unknown": {"cardinality": 3, "non_exclusivity": {"b": 0.2}},
        "non_exclusivity": [{"pair": ["a", "b"], "degree": 0.3}],
        "masses": [{"set": ["a"], "mass": 0.5}, {"set": ["X"], "mass": 0.5}],
    }))
    assert frame.unknown_cardinality == 3
    assert frame.lookup(0, 1) == 0.3
    assert frame.lookup(1, frame.x_index) == 0.2
    assert d.masses[frame.x_mask] == 0.5


def test_x_pair_in_top_level_list():
    frame, _ = dn.parse_document(json.dumps({
        "frame": ["a"],
        "non_exclusivity": [{"pair": ["a", "X"], "degree": 0.4}],
        "masses": [{"set": ["a"], "mass": 1}],
    }))
    assert frame.lookup(0, frame.x_index) == 0.4


@pytest.mark.parametrize("doc,needle", [
    ("not json", "syntax error"),
    ('["list"]', "root"),
    ('{"masses": []}', '"frame"'),
    ('{"frame": ["a"], "masses": []}', "nonempty"),
    ('{"frame": ["a"], "masses": [{"set": [], "mass": 0.1}]}',
     "D(∅) must be 0"),
    ('{"frame": ["a"], "masses": [{"set": ["z"], "mass": 0.1}]}',
     "unknown label 'z'"),
    ('{"frame": ["a"], "masses": [{"set": ["a"], "mass": -0.1}]}',
     "nonnegative"),
    ('{"frame": ["a"], "masses": [{"set": ["a"], "mass": 0.6},'
     ' {"set": ["a"], "mass": 0.1}]}', "duplicate"),
    ('{"frame": ["a", "b"], "masses": [{"set": ["a"], "mass": 0.7},'
     ' {"set": ["b"], "mass": 0.7}]}', "exceeds 1"),
    ('{"frame": ["a", "b"], "non_exclusivity": '
     '[{"pair": ["a", "b"], "degree": 1.2}], '
     '"masses": [{"set": ["a"], "mass": 1}]}', "1.2"),
    ('{"frame": ["a"], "unknown": {"cardinality": 1}, '
     '"masses": [{"set": ["a"], "mass": 1}]}', "cardinality"),
])
def test_rejections(doc, needle):
    with pytest.raises(DocumentError) as err:
        dn.parse_document(doc)
    assert needle in str(err.value)


def test_all_violations_reported():
    doc = json.dumps({
        "frame": ["a"],
        "non_exclusivity": [{"pair": ["a", "q"], "degree": 0.5}],
        "masses": [{"set": [], "mass": 0.1}, {"set": ["a"], "mass": -1}],
    })
    with pytest.raises(DocumentError) as err:
        dn.parse_document(doc)
    assert len(err.value.errors) == 3


@settings(max_examples=60)
@given(raw_dnumbers())
def test_round_trip(d):
    text = dn.serialize_document(d.frame, d)
    frame2, d2 = dn.parse_document(text)
    assert frame2 == d.frame
    assert d2 == d
    assert dn.serialize_document(frame2, d2) == text


def test_generated_round_trip_bytes():
    cfg = oracle.GeneratorConfig(frame_size=4, focal_count=6, seed=17)
    frame, d = oracle.generate_raw(cfg)
    text = dn.serialize_document(frame, d)
    frame2, d2 = dn.parse_document(text.encode("utf-8"))
    assert dn.serialize_document(frame2, d2).encode("utf-8") == text.encode("utf-8")
