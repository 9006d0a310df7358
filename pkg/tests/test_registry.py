import pytest

from prescribed_ricci import registry as reg


def test_lookup_examples():
    e = reg.lookup("I.16")
    assert e.triple == ("so(m,7)", "so(m)⊕so(7)", "so(m)⊕g2")
    assert e.constraint == "m = 1, equal"
    assert e.flags == {"equivalent_summands"}
    assert reg.lookup("I.30").triple == ("so(8,1)", "so(8)", "so(7)")
    with pytest.raises(reg.UnknownLabel):
        reg.lookup("IV.99")


def test_lookup_normalizes_whitespace():
    assert reg.lookup(" iv.28 ").source_label == "IV. 28"
    assert "print_defect" in reg.lookup("IV.28").flags


def test_duplicate_labels_prefer_complete_printing():
    assert len(reg.lookup_all("II.9")) == 2
    assert "duplicate_row" not in reg.lookup("II.9").flags
    assert reg.lookup("II.1").family == "unitary"


def test_filters():
    assert len(reg.filter_entries(flag="equivalent_summands")) == 1
    assert len(reg.filter_entries(family="exceptional", g_prefix="e8")) == 10
    dup = {e.source_label for e in reg.filter_entries(flag="duplicate_row")}
    assert {"II.9", "II.10", "II.11"} <= dup
    rows = reg.filter_entries(lambda e: "NA" == e.constraint, table=1)
    assert rows and all(e.table == 1 for e in rows)


def test_filter_preserves_table_order():
    idx = [e.index for e in reg.filter_entries(family="orthogonal")]
    assert idx == sorted(idx)


def test_integrity():
    assert reg.table_counts() == reg.manifest_counts() == {1: 27, 2: 24, 3: 26, 4: 10}
    assert all(reg.integrity_report().values())


def test_only_so17_row_has_structural_constants():
    from fractions import Fraction
    assert reg.lookup("I.16").structural_constants() == (7, 7, Fraction(7, 6), Fraction(7, 6))
    assert reg.lookup("I.30").structural_constants() is None


def test_print_defects_flagged():
    for label in ("I.2", "I.14", "I.26", "I.27", "II.12", "III.7", "III.8"):
        e = reg.lookup(label)
        assert "print_defect" in e.flags and e.note
