"""Known good parameters for the cyclotomic construction.

Each row is (q, m, set_size, alpha): a prime q = m * set_size**2 + 1 together
with a primitive root alpha for which the construction yields a verified
(q, m, set_size; 1) 1-circular external difference family.  The catalog
covers every qualifying prime with m <= 50 and set_size <= 10 for which a
witness is known; ``nmshare table1`` re-checks every row.
"""

KNOWN_WITNESSES: tuple[tuple[int, int, int, int], ...] = (
    (13, 3, 2, 2),
    (17, 4, 2, 3),
    (151, 6, 5, 6),
    (29, 7, 2, 2),
    (73, 8, 3, 5),
    (37, 9, 2, 2),
    (41, 10, 2, 6),
    (53, 13, 2, 8),
    (127, 14, 3, 116),
    (61, 15, 2, 35),
    (241, 15, 4, 7),
    (401, 16, 5, 27),
    (73, 18, 2, 5),
    (1217, 19, 8, 642),
    (181, 20, 3, 57),
    (337, 21, 4, 10),
    (757, 21, 6, 2),
    (89, 22, 2, 51),
    (199, 22, 3, 44),
    (97, 24, 2, 5),
    (101, 25, 2, 2),
    (401, 25, 4, 3),
    (109, 27, 2, 6),
    (433, 27, 4, 94),
    (113, 28, 2, 3),
    (271, 30, 3, 142),
    (137, 34, 2, 3),
    (307, 34, 3, 241),
    (577, 36, 4, 230),
    (149, 37, 2, 2),
    (593, 37, 4, 339),
    (157, 39, 2, 142),
    (641, 40, 4, 264),
    (379, 42, 3, 233),
    (673, 42, 4, 5),
    (173, 43, 2, 128),
    (1549, 43, 6, 1165),
    (397, 44, 3, 296),
    (181, 45, 2, 28),
    (193, 48, 2, 5),
    (433, 48, 3, 393),
    (769, 48, 4, 453),
    (197, 49, 2, 32),
)
