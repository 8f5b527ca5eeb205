"""Periodic optimal-coloring patterns for prisms and Moebius ladders.

Each row covers one residue class s = m mod 6 and is stored as
(period_u, period_v, trail_u, trail_v): the first m - len(trail) columns
repeat the period, the remaining columns are the explicit trailing block.
Cells are strings of color digits, "" meaning uncolored.  Rows are written
for the canonical ladder numbering (outer vertex i, inner vertex m+i).

Every row is gated at build time: the constructor verifies validity and the
exact target weight, raising TranscriptionMismatch otherwise, so a bad row
can never silently produce a wrong coloring.

Four rows of the source tables fail that gate as printed; each was repaired
by a minimal local search seeded from the printed row (checked for every
applicable m up to 60; see the release notes in the README):

* prism k=5, s=3: trailing inner rail printed (2, _, 2); the first cell
  must be 1, otherwise the uncolored seam vertex misses color 1.
* mobius k=3, s=1: trailing column printed (1 / 1); the inner cell must be
  {1,3} (printed weight is one below the exact optimum and invalid).
* mobius k=3, s=4: trailing inner rail printed (1, 3, 3, 3); the second
  cell must be empty (printed weight is one above the exact optimum).
* mobius k=3, s=5: trailing printed (_, 2, _, 1, 3 / 1, _, 3, _, 2); the
  last column must be (_ / {2,3}), moving the 3 across the rung.
"""

PRISM_ROWS = {
    4: {
        0: (("", "34", "", "1", "", "2"), ("1", "", "2", "", "34", ""),
            (), ()),
        1: (("", "34", "", "1", "", "2"), ("1", "", "2", "", "34", ""),
            ("2",), ("1",)),
        2: (("", "1", "", "34", "", "2"), ("34", "", "2", "", "1", ""),
            ("", "2"), ("134", "")),
        3: (("", "34", "", "2", "", "1"), ("2", "", "1", "", "34", ""),
            ("", "34", "1"), ("2", "", "1")),
        4: (("", "2", "", "1", "", "34"), ("1", "", "34", "", "2", ""),
            ("", "12", "", "34"), ("1", "3", "2", "")),
        5: (("", "34", "", "1", "", "2"), ("1", "", "2", "", "34", ""),
            ("", "34", "", "1", "2"), ("1", "", "2", "", "34")),
    },
    5: {
        0: (("", "345", "", "1", "", "2"), ("1", "", "2", "", "345", ""),
            (), ()),
        1: (("", "345", "", "1", "", "2"), ("1", "", "2", "", "345", ""),
            ("2",), ("1",)),
        2: (("", "345", "", "1", "", "2"), ("1", "", "2", "", "345", ""),
            ("3", "2"), ("1", "4")),
        3: (("", "345", "", "1", "", "2"), ("1", "", "2", "", "345", ""),
            ("", "345", "2"), ("1", "", "2")),  # corrected: printed ("2","","2")
        4: (("", "2", "", "1", "", "345"), ("1", "", "345", "", "2", ""),
            ("", "12", "", "345"), ("1", "3", "2", "")),
        5: (("", "2", "", "1", "", "345"), ("1", "", "345", "", "2", ""),
            ("", "2", "1", "", "345"), ("1", "3", "4", "2", "")),
    },
}

MOBIUS_ROWS = {
    3: {
        0: (("", "2", "", "1", "", "3"), ("1", "", "3", "", "2", ""),
            ("", "2", "", "1", "", "3"), ("1", "", "3", "", "2", "3")),
        1: (("", "2", "", "1", "", "3"), ("1", "", "3", "", "2", ""),
            ("1",), ("13",)),  # corrected: printed ("1",)
        2: (("", "2", "", "1", "", "3"), ("1", "", "3", "", "2", ""),
            ("", "2"), ("1", "3")),
        3: (("", "2", "", "1", "", "3"), ("1", "", "3", "", "2", ""),
            ("", "2", ""), ("1", "", "3")),
        4: (("", "2", "", "1", "", "3"), ("1", "", "3", "", "2", ""),
            ("", "2", "", "1"), ("1", "", "3", "3")),  # corrected: printed ("1","3","3","3")
        5: (("", "2", "", "1", "", "3"), ("1", "", "3", "", "2", ""),
            ("", "2", "", "1", ""), ("1", "", "3", "", "23")),  # corrected: printed u4="3", v4="2"
    },
    4: {
        0: (("", "34", "", "1", "", "2"), ("1", "", "2", "", "34", ""),
            ("", "34", "", "1", "", "2"), ("1", "", "2", "", "34", "2")),
        1: (("", "34", "", "1", "", "2"), ("1", "", "2", "", "34", ""),
            ("3",), ("12",)),
        2: (("", "34", "", "1", "", "2"), ("1", "", "2", "", "34", ""),
            ("", "34"), ("1", "2")),
        3: (("", "34", "", "1", "", "2"), ("1", "", "2", "", "34", ""),
            ("", "34", ""), ("1", "", "2")),
        4: (("", "34", "", "1", "", "2"), ("1", "", "2", "", "34", ""),
            ("", "34", "", "1"), ("1", "", "2", "2")),
        5: (("", "34", "", "1", "", "2"), ("1", "", "2", "", "34", ""),
            ("", "34", "", "1", "4"), ("1", "", "2", "3", "2")),
    },
    5: {
        0: (("", "345", "", "1", "", "2"), ("1", "", "2", "", "345", ""),
            ("", "345", "", "1", "", "2"), ("1", "", "2", "", "345", "2")),
        1: (("", "345", "", "1", "", "2"), ("1", "", "2", "", "345", ""),
            ("3",), ("12",)),
        2: (("", "345", "", "1", "", "2"), ("1", "", "2", "", "345", ""),
            ("3", "4"), ("1", "2")),
        3: (("", "345", "", "1", "", "2"), ("1", "", "2", "", "345", ""),
            ("", "345", ""), ("1", "", "2")),
        4: (("", "345", "", "1", "", "2"), ("1", "", "2", "", "345", ""),
            ("", "345", "", "1"), ("1", "", "2", "2")),
        5: (("", "345", "", "1", "", "2"), ("1", "", "2", "", "345", ""),
            ("", "345", "", "1", "4"), ("1", "", "2", "3", "2")),
    },
}
