import pytest

from hesitant import DocumentError, hfe, ingest_scores
from hesitant.ingest import scores_csv

ROWS = [
    ("x1", "e1", "0.9"),
    ("x1", "e2", ""),  # this expert skipped x1
    ("x1", "e3", "0.2"),
    ("x2", "e1", "0.6"),
    ("x2", "e2", "0.6"),
    ("x2", "e3", "0.5"),
    ("x3", "e1", "0.7"),
    ("x3", "e2", "0.5"),
    ("x3", "e3", "0.5"),
]


def test_ingest_collects_non_blank_scores():
    doc = ingest_scores(scores_csv(ROWS))
    assert doc.universe == ("x1", "x2", "x3")
    H = doc.hfs("H")
    assert H["x1"] == hfe("0.9", "0.2")
    assert H["x2"] == hfe("0.6", "0.6", "0.5")
    assert H["x3"] == hfe("0.7", "0.5", "0.5")


def test_ingest_custom_set_name():
    doc = ingest_scores(scores_csv(ROWS), set_name="scores")
    assert doc.set_names() == ("scores",)


def test_ingest_requires_header():
    with pytest.raises(DocumentError, match="header"):
        ingest_scores("x1,e1,0.9\n")


def test_ingest_rejects_fully_blank_scheme():
    rows = ROWS + [("x4", "e1", ""), ("x4", "e2", "")]
    with pytest.raises(DocumentError, match="x4"):
        ingest_scores(scores_csv(rows))


def test_ingest_rejects_bad_score_with_row_number():
    rows = [("x1", "e1", "1.5")]
    with pytest.raises(DocumentError, match="row 2"):
        ingest_scores(scores_csv(rows))


def test_ingest_rejects_empty_table():
    with pytest.raises(DocumentError):
        ingest_scores("")
