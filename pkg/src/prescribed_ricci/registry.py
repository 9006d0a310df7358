"""Transcribed classification of (g, k, h) triples with two isotropy summands.

Rows are kept exactly as typeset, including typos and a repeated block;
those rows carry ``print_defect`` / ``duplicate_row`` flags and a note
instead of being corrected.
"""
import csv
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

FAMILIES = frozenset({
    "orthogonal", "star-orthogonal", "unitary", "star-unitary",
    "symplectic", "real-symplectic", "exceptional",
})
FLAGS = frozenset({"equivalent_summands", "print_defect", "duplicate_row"})

DATA_FILE = "classification.tsv"
COUNTS_FILE = "row_counts.tsv"


class UnknownLabel(KeyError):
    pass


def normalize_label(label):
    """Labels compare without whitespace, so "IV. 28" and "IV.28" match."""
    return "".join(str(label).split()).upper()


@dataclass(frozen=True)
class TripleEntry:
    source_label: str
    g: str
    k: str
    h: str
    constraint: str
    family: str
    flags: frozenset = field(default_factory=frozenset)
    table: int = 0
    note: str = ""
    index: int = 0  # position in the transcription, 0-based

    @property
    def triple(self):
        return (self.g, self.k, self.h)

    def has_flag(self, flag):
        return flag in self.flags

    def structural_constants(self):
        """(d1, d2, p1, p2) for the equivalent-summands row, None for every other row.

        The values are computed from the explicit basis, not stored.
        """
        if "equivalent_summands" not in self.flags:
            return None
        from .lie_core import structure_sums
        s = structure_sums(exact=True)
        return (s.d1, s.d2, s.p1_sum, s.p2_sum)

    def as_dict(self):
        return {
            "label": self.source_label, "g": self.g, "k": self.k, "h": self.h,
            "constraint": self.constraint, "family": self.family,
            "flags": sorted(self.flags), "table": self.table, "note": self.note,
        }


def _parse_flags(cell):
    flags = frozenset(f.strip() for f in cell.split(",") if f.strip())
    bad = flags - FLAGS
    if bad:
        raise ValueError(f"unknown flags {sorted(bad)}")
    return flags


def _read_tsv(name):
    text = resources.files(__package__).joinpath("data", name).read_text(encoding="utf-8")
    return list(csv.DictReader(text.splitlines(), delimiter="\t", quoting=csv.QUOTE_NONE))


@lru_cache(maxsize=1)
def entries():
    """All rows in table order (immutable tuple)."""
    out = []
    for i, row in enumerate(_read_tsv(DATA_FILE)):
        if not row["label"].strip():
            raise ValueError(f"row {i} has an empty label")
        if row["family"] not in FAMILIES:
            raise ValueError(f"row {i}: unknown family {row['family']!r}")
        out.append(TripleEntry(
            source_label=row["label"], g=row["g"], k=row["k"], h=row["h"],
            constraint=row["constraint"], family=row["family"],
            flags=_parse_flags(row["flags"] or ""), table=int(row["table"]),
            note=row.get("note") or "", index=i,
        ))
    return tuple(out)


@lru_cache(maxsize=1)
def manifest_counts():
    """Expected number of rows per table, from the checked-in count file."""
    return {int(r["table"]): int(r["rows"]) for r in _read_tsv(COUNTS_FILE)}


def table_counts():
    counts = {}
    for e in entries():
        counts[e.table] = counts.get(e.table, 0) + 1
    return counts


def lookup(source_label):
    """Return the row with this label.

    A few labels are printed twice; the copy without the duplicate_row flag
    wins, so lookup always returns the row from the complete printing.
    """
    key = normalize_label(source_label)
    hits = [e for e in entries() if normalize_label(e.source_label) == key]
    if not hits:
        raise UnknownLabel(f"unknown label {source_label!r}")
    clean = [e for e in hits if "duplicate_row" not in e.flags]
    return (clean or hits)[0]


def lookup_all(source_label):
    key = normalize_label(source_label)
    return [e for e in entries() if normalize_label(e.source_label) == key]


def filter_entries(predicate=None, *, family=None, flag=None, g_prefix=None,
                   constraint=None, table=None):
    """Rows matching every given criterion, in table order."""
    out = []
    for e in entries():
        if family is not None and e.family != family:
            continue
        if flag is not None and flag not in e.flags:
            continue
        if g_prefix is not None and not e.g.startswith(g_prefix):
            continue
        if constraint is not None and constraint not in e.constraint:
            continue
        if table is not None and e.table != table:
            continue
        if predicate is not None and not predicate(e):
            continue
        out.append(e)
    return out


def integrity_report():
    """Checks that should always hold for the shipped data; maps name -> bool."""
    rows = entries()
    return {
        "row_counts_match_manifest": table_counts() == manifest_counts(),
        "single_equivalent_summands_row": len(filter_entries(flag="equivalent_summands")) == 1,
        "labels_nonempty": all(e.source_label.strip() for e in rows),
        "families_valid": all(e.family in FAMILIES for e in rows),
    }
