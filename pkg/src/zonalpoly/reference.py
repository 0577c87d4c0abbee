"""Known-good reference rows for low degrees.

Golden data used by the verification suite and the ``verify`` command:
power-sum-basis coefficient rows for degrees 1-6 and the matching
symmetric-group character degrees of the doubled partitions.  Keys are
partitions written as plain tuples; the inner maps are keyed by the
partition indexing each power-sum product (so ``(2, 1, 1)`` stands for
p_2 * p_1 * p_1).

Degree 5 carries only the four rows with reliable reference values; the
remaining degree-5 rows are validated indirectly through the trace
identity instead of by direct comparison.  The character-degree column is
complete for all six degrees.
"""

from __future__ import annotations

__all__ = ["GOLDEN_POWERSUM_ROWS", "GOLDEN_CHARACTER_DEGREES"]

GOLDEN_POWERSUM_ROWS: dict[int, dict[tuple[int, ...], dict[tuple[int, ...], int]]] = {
    1: {
        (1,): {(1,): 1},
    },
    2: {
        (2,): {(1, 1): 1, (2,): 2},
        (1, 1): {(1, 1): 1, (2,): -1},
    },
    3: {
        (3,): {(1, 1, 1): 1, (2, 1): 6, (3,): 8},
        (2, 1): {(1, 1, 1): 1, (2, 1): 1, (3,): -2},
        (1, 1, 1): {(1, 1, 1): 1, (2, 1): -3, (3,): 2},
    },
    4: {
        (4,): {(1, 1, 1, 1): 1, (2, 1, 1): 12, (2, 2): 12, (3, 1): 32, (4,): 48},
        (3, 1): {(1, 1, 1, 1): 1, (2, 1, 1): 5, (2, 2): -2, (3, 1): 4, (4,): -8},
        (2, 2): {(1, 1, 1, 1): 1, (2, 1, 1): 2, (2, 2): 7, (3, 1): -8, (4,): -2},
        (2, 1, 1): {(1, 1, 1, 1): 1, (2, 1, 1): -1, (2, 2): -2, (3, 1): -2, (4,): 4},
        (1, 1, 1, 1): {(1, 1, 1, 1): 1, (2, 1, 1): -6, (2, 2): 3, (3, 1): 8, (4,): -6},
    },
    5: {
        (5,): {
            (1, 1, 1, 1, 1): 1,
            (2, 1, 1, 1): 20,
            (2, 2, 1): 60,
            (3, 1, 1): 80,
            (3, 2): 160,
            (4, 1): 240,
            (5,): 384,
        },
        (4, 1): {
            (1, 1, 1, 1, 1): 1,
            (2, 1, 1, 1): 11,
            (2, 2, 1): 6,
            (3, 1, 1): 26,
            (3, 2): -20,
            (4, 1): 24,
            (5,): -48,
        },
        (3, 2): {
            (1, 1, 1, 1, 1): 1,
            (2, 1, 1, 1): 6,
            (2, 2, 1): 11,
            (3, 1, 1): -4,
            (3, 2): 20,
            (4, 1): -26,
            (5,): -8,
        },
        (3, 1, 1): {
            (1, 1, 1, 1, 1): 1,
            (2, 1, 1, 1): 3,
            (2, 2, 1): -10,
            (3, 1, 1): 2,
            (3, 2): -4,
            (4, 1): -8,
            (5,): 16,
        },
    },
    6: {
        (6,): {
            (1, 1, 1, 1, 1, 1): 1,
            (2, 1, 1, 1, 1): 30,
            (2, 2, 1, 1): 180,
            (3, 1, 1, 1): 160,
            (2, 2, 2): 120,
            (3, 2, 1): 960,
            (4, 1, 1): 720,
            (3, 3): 640,
            (4, 2): 1440,
            (5, 1): 2304,
            (6,): 3840,
        },
        (5, 1): {
            (1, 1, 1, 1, 1, 1): 1,
            (2, 1, 1, 1, 1): 19,
            (2, 2, 1, 1): 48,
            (3, 1, 1, 1): 72,
            (2, 2, 2): -12,
            (3, 2, 1): 80,
            (4, 1, 1): 192,
            (3, 3): -64,
            (4, 2): -144,
            (5, 1): 192,
            (6,): -384,
        },
        (4, 2): {
            (1, 1, 1, 1, 1, 1): 1,
            (2, 1, 1, 1, 1): 12,
            (2, 2, 1, 1): 27,
            (3, 1, 1, 1): 16,
            (2, 2, 2): 30,
            (3, 2, 1): 24,
            (4, 1, 1): -18,
            (3, 3): -8,
            (4, 2): 108,
            (5, 1): -144,
            (6,): -48,
        },
        (4, 1, 1): {
            (1, 1, 1, 1, 1, 1): 1,
            (2, 1, 1, 1, 1): 9,
            (2, 2, 1, 1): -12,
            (3, 1, 1, 1): 22,
            (2, 2, 2): -12,
            (3, 2, 1): -60,
            (4, 1, 1): 12,
            (3, 3): 16,
            (4, 2): -24,
            (5, 1): -48,
            (6,): 96,
        },
        (3, 3): {
            (1, 1, 1, 1, 1, 1): 1,
            (2, 1, 1, 1, 1): 9,
            (2, 2, 1, 1): 33,
            (3, 1, 1, 1): -8,
            (2, 2, 2): -27,
            (3, 2, 1): 120,
            (4, 1, 1): -78,
            (3, 3): 136,
            (4, 2): -114,
            (5, 1): -48,
            (6,): -24,
        },
        (3, 2, 1): {
            (1, 1, 1, 1, 1, 1): 1,
            (2, 1, 1, 1, 1): 4,
            (2, 2, 1, 1): 3,
            (3, 1, 1, 1): -8,
            (2, 2, 2): -2,
            (3, 2, 1): 0,
            (4, 1, 1): -18,
            (3, 3): -24,
            (4, 2): -4,
            (5, 1): 32,
            (6,): 16,
        },
        (3, 1, 1, 1): {
            (1, 1, 1, 1, 1, 1): 1,
            (2, 1, 1, 1, 1): 0,
            (2, 2, 1, 1): -21,
            (3, 1, 1, 1): 4,
            (2, 2, 2): 6,
            (3, 2, 1): 12,
            (4, 1, 1): -6,
            (3, 3): 16,
            (4, 2): 12,
            (5, 1): 24,
            (6,): -48,
        },
        (2, 2, 2): {
            (1, 1, 1, 1, 1, 1): 1,
            (2, 1, 1, 1, 1): 0,
            (2, 2, 1, 1): 15,
            (3, 1, 1, 1): -20,
            (2, 2, 2): 30,
            (3, 2, 1): -60,
            (4, 1, 1): 30,
            (3, 3): 40,
            (4, 2): -60,
            (5, 1): 24,
            (6,): 0,
        },
        (2, 2, 1, 1): {
            (1, 1, 1, 1, 1, 1): 1,
            (2, 1, 1, 1, 1): -3,
            (2, 2, 1, 1): 3,
            (3, 1, 1, 1): -8,
            (2, 2, 2): -9,
            (3, 2, 1): 0,
            (4, 1, 1): 24,
            (3, 3): 4,
            (4, 2): 24,
            (5, 1): -24,
            (6,): -12,
        },
        (2, 1, 1, 1, 1): {
            (1, 1, 1, 1, 1, 1): 1,
            (2, 1, 1, 1, 1): -8,
            (2, 2, 1, 1): 3,
            (3, 1, 1, 1): 12,
            (2, 2, 2): 6,
            (3, 2, 1): 20,
            (4, 1, 1): -6,
            (3, 3): -16,
            (4, 2): -36,
            (5, 1): -24,
            (6,): 48,
        },
        (1, 1, 1, 1, 1, 1): {
            (1, 1, 1, 1, 1, 1): 1,
            (2, 1, 1, 1, 1): -15,
            (2, 2, 1, 1): 45,
            (3, 1, 1, 1): 40,
            (2, 2, 2): -15,
            (3, 2, 1): -120,
            (4, 1, 1): -90,
            (3, 3): 40,
            (4, 2): 90,
            (5, 1): 144,
            (6,): -120,
        },
    },
}

GOLDEN_CHARACTER_DEGREES: dict[tuple[int, ...], int] = {
    (1,): 1,
    (2,): 1,
    (1, 1): 2,
    (3,): 1,
    (2, 1): 9,
    (1, 1, 1): 5,
    (4,): 1,
    (3, 1): 20,
    (2, 2): 14,
    (2, 1, 1): 56,
    (1, 1, 1, 1): 14,
    (5,): 1,
    (4, 1): 35,
    (3, 2): 90,
    (3, 1, 1): 225,
    (2, 2, 1): 252,
    (2, 1, 1, 1): 300,
    (1, 1, 1, 1, 1): 42,
    (6,): 1,
    (5, 1): 54,
    (4, 2): 275,
    (4, 1, 1): 616,
    (3, 3): 132,
    (3, 2, 1): 2673,
    (3, 1, 1, 1): 1925,
    (2, 2, 2): 462,
    (2, 2, 1, 1): 2640,
    (2, 1, 1, 1, 1): 1485,
    (1, 1, 1, 1, 1, 1): 132,
}
