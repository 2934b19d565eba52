"""Published square relators of the four thickness-4 presentations
(positive words; inverses already replaced through the pairing)."""

SHARED_SQUARES = [(1, 1, 15, 11), (1, 7, 14, 12), (1, 15, 12, 14), (2, 8, 8, 14), (2, 9, 12, 4), (2, 11, 9, 15), (5, 10, 7, 16), (5, 10, 11, 7), (5, 15, 9, 8)]

PAIRS_1 = [(17, 17), (18, 18), (19, 26), (20, 29), (21, 21), (22, 31), (23, 34), (24, 36), (25, 25), (27, 27), (28, 28), (30, 30), (32, 32), (33, 33), (35, 39), (37, 37), (38, 38), (40, 40)]

SQUARES_1 = [(1, 23, 25, 33), (1, 24, 6, 17), (1, 24, 19, 30), (1, 25, 8, 30), (1, 34, 36, 30), (1, 40, 17, 35), (2, 20, 22, 27), (2, 23, 12, 31), (2, 30, 23, 20), (2, 34, 30, 29), (2, 37, 12, 27), (4, 17, 14, 28), (4, 23, 14, 19), (4, 33, 14, 32), (4, 34, 38, 28), (5, 19, 11, 23), (5, 21, 34, 32), (5, 26, 17, 27), (5, 27, 23, 28), (6, 22, 33, 37), (6, 33, 37, 19), (6, 40, 36, 26), (7, 19, 40, 20), (7, 20, 18, 39), (7, 26, 29, 38), (9, 21, 16, 18), (9, 24, 31, 38), (9, 27, 24, 31), (9, 35, 16, 22), (9, 39, 21, 36), (10, 28, 39, 25), (10, 28, 40, 39), (10, 30, 31, 32), (10, 31, 37, 32), (10, 37, 32, 35), (17, 19, 33, 26), (17, 34, 33, 23), (18, 26, 38, 23), (18, 29, 40, 20), (19, 20, 39, 20), (20, 25, 29, 38), (21, 22, 27, 31), (22, 36, 39, 36), (23, 28, 34, 32), (25, 32, 37, 32)]

PAIRS_2 = [(17, 17), (18, 18), (19, 26), (20, 20), (21, 21), (22, 31), (23, 34), (24, 36), (25, 25), (27, 27), (28, 28), (29, 29), (30, 30), (32, 32), (33, 33), (35, 39), (37, 37), (38, 38), (40, 40)]

SQUARES_2 = [(1, 25, 31, 17), (1, 40, 8, 37), (2, 20, 22, 27), (2, 23, 12, 22), (2, 34, 30, 20), (2, 37, 29, 31), (4, 17, 18, 26), (4, 17, 34, 38), (4, 23, 14, 19), (4, 34, 38, 28), (5, 19, 11, 23), (5, 26, 17, 27), (5, 27, 23, 28), (5, 33, 11, 32), (5, 33, 26, 27), (6, 17, 35, 37), (6, 22, 8, 26), (6, 25, 34, 36), (6, 31, 17, 30), (7, 19, 13, 39), (7, 20, 39, 38), (7, 25, 19, 29), (7, 26, 20, 18), (7, 40, 29, 35), (9, 24, 18, 31), (9, 24, 31, 38), (9, 27, 24, 31), (9, 35, 16, 22), (9, 36, 38, 22), (9, 39, 21, 36), (10, 28, 40, 39), (10, 30, 28, 39), (10, 31, 32, 25), (10, 32, 35, 40), (10, 37, 22, 28), (10, 37, 32, 35), (17, 18, 32, 18), (17, 22, 33, 39), (17, 34, 33, 23), (18, 20, 25, 20), (19, 21, 34, 27), (19, 24, 23, 24), (20, 21, 20, 30), (22, 25, 34, 40), (27, 29, 37, 29)]

PAIRS_3 = [(17, 17), (18, 38), (19, 19), (20, 20), (21, 27), (22, 22), (23, 23), (24, 36), (25, 40), (26, 26), (28, 28), (29, 29), (30, 37), (31, 31), (32, 32), (33, 33), (34, 34), (35, 35), (39, 39)]

SQUARES_3 = [(1, 24, 30, 39), (1, 34, 25, 33), (1, 36, 37, 35), (1, 40, 8, 30), (1, 40, 17, 39), (2, 23, 12, 31), (2, 29, 21, 31), (2, 30, 34, 20), (2, 34, 37, 29), (2, 37, 29, 22), (4, 17, 21, 19), (4, 18, 17, 26), (4, 34, 32, 38), (5, 19, 32, 21), (5, 21, 11, 27), (5, 27, 17, 23), (5, 27, 26, 28), (6, 17, 37, 26), (6, 25, 23, 24), (6, 31, 25, 24), (6, 40, 36, 19), (7, 20, 38, 39), (7, 25, 26, 20), (7, 29, 18, 35), (7, 40, 19, 29), (9, 24, 9, 36), (9, 24, 22, 38), (9, 24, 38, 31), (9, 27, 24, 22), (9, 39, 27, 24), (10, 22, 15, 39), (10, 28, 35, 25), (10, 30, 15, 40), (10, 31, 32, 40), (10, 32, 39, 40), (10, 32, 40, 35), (17, 21, 33, 18), (18, 20, 40, 29), (18, 32, 21, 28), (19, 24, 34, 36), (19, 25, 26, 40), (20, 27, 29, 30), (22, 33, 35, 33), (22, 36, 35, 24), (24, 25, 33, 30)]

PAIRS_4 = [(17, 17), (18, 38), (19, 23), (20, 20), (21, 27), (22, 39), (24, 24), (25, 40), (26, 34), (28, 28), (29, 29), (30, 37), (31, 35), (32, 32), (33, 33), (36, 36)]

SQUARES_4 = [(1, 19, 36, 37), (1, 24, 26, 30), (1, 25, 33, 39), (1, 36, 3, 33), (1, 40, 8, 37), (2, 26, 20, 27), (2, 29, 22, 21), (4, 17, 38, 26), (4, 26, 18, 32), (4, 33, 26, 18), (4, 38, 26, 28), (5, 17, 21, 23), (5, 21, 11, 21), (5, 21, 23, 28), (5, 23, 27, 32), (5, 27, 17, 34), (5, 33, 11, 32), (6, 17, 35, 30), (6, 25, 36, 19), (6, 39, 37, 24), (7, 23, 30, 20), (7, 40, 23, 29), (9, 21, 16, 18), (9, 22, 38, 36), (9, 27, 36, 31), (9, 36, 21, 22), (10, 28, 39, 40), (10, 30, 39, 32), (10, 32, 30, 39), (10, 37, 32, 35), (17, 22, 33, 39), (17, 25, 36, 40), (17, 38, 33, 18), (18, 19, 38, 34), (18, 20, 37, 29), (18, 24, 38, 36), (18, 31, 27, 39), (19, 25, 34, 37), (19, 29, 39, 29), (20, 26, 20, 35), (21, 24, 27, 36), (22, 37, 35, 25), (22, 40, 26, 30), (24, 26, 24, 34), (25, 32, 40, 28)]

