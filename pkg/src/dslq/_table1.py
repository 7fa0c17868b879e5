"""Published distance signless Laplacian spectral radii of the extremal family.

``TABLE1[n] = (eta_ghat, (eta_G1, eta_G2, ...))`` for G_s = K_s v (K_{n-2s-1} + coK_{s+1}),
s = 1..floor((n-1)/2), as printed to two decimals.
"""

TABLE1 = {
    4: (9.46, (9.46,)),
    5: (11, (12.58, 11,)),
    6: (14.90, (15.46, 14.90,)),
    7: (16.42, (18.21, 18.18, 16.42,)),
    8: (20.32, (20.87, 21.21, 20.32,)),
    9: (21.84, (23.46, 24.10, 23.71, 21.84,)),
    10: (25.75, (26.01, 26.89, 26.85, 25.75,)),
    11: (27.26, (28.53, 29.61, 29.85, 29.21, 27.26,)),
    12: (31.17, (31.01, 32.28, 32.74, 32.43, 31.17,)),
    13: (32.68, (33.47, 34.90, 35.56, 35.51, 34.68, 32.68,)),
    14: (36.58, (35.90, 37.49, 38.32, 38.49, 37.98, 36.58,)),
    15: (38.09, (38.32, 40.04, 41.02, 41.39, 41.13, 40.14, 38.09,)),
    16: (42, (40.72, 42.57, 43.69, 44.22, 44.17, 43.49, 42,)),
    17: (43.51, (43.10, 45.07, 46.33, 47, 47.13, 46.70, 45.59, 43.51,)),
    18: (47.42, (45.47, 47.56, 48.93, 49.74, 50.03, 49.80, 48.99, 47.42,)),
    19: (48.93, (47.83, 50.03, 51.51, 52.44, 52.87, 52.82, 52.25, 51.04, 48.93,)),
    20: (52.83, (50.18, 52.48, 54.07, 55.11, 55.67, 55.78, 55.40, 54.47, 52.83,)),
    21: (54.34, (52.52, 54.92, 56.61, 57.75, 58.43, 58.67, 58.47, 57.77, 56.48, 54.34,)),
    22: (58.25, (54.84, 57.34, 59.12, 60.37, 61.16, 61.53, 61.47, 60.97, 59.95, 58.25,)),
    23: (59.76, (57.16, 59.75, 61.63, 62.97, 63.86, 64.34, 64.42, 64.09, 63.28, 61.91, 59.76,)),
    24: (63.66, (59.48, 62.15, 64.11, 65.54, 66.53, 67.12, 67.32, 67.13, 66.52, 65.41, 63.66,)),
    25: (65.17, (61.78, 64.54, 66.59, 68.10, 69.17, 69.86, 70.18, 70.12, 69.67, 68.78, 67.35, 65.17,)),
    26: (69.08, (64.08, 66.92, 69.05, 70.64, 71.80, 72.58, 73, 73.07, 72.76, 72.05, 70.87, 69.08,)),
    27: (70.59, (66.37, 69.30, 71.49, 73.17, 74.41, 75.27, 75.79, 75.97, 75.79, 75.24, 74.27, 72.78, 70.59,)),
    28: (74.49, (68.65, 71.66, 73.93, 75.68, 77.00, 77.95, 78.55, 78.83, 78.77, 78.37, 77.57, 76.32, 74.49,)),
    29: (76, (70.93, 74.02, 76.36, 78.18, 79.57, 80.60, 81.29, 81.66, 81.71, 81.43, 80.79, 79.75, 78.21, 76,)),
    30: (79.91, (73.21, 76.36, 78.78, 80.66, 82.13, 83.23, 84, 84.46, 84.61, 84.45, 83.95, 83.08, 81.77, 79.91,)),
    31: (81.41, (75.48, 78.71, 81.19, 83.14, 84.67, 85.84, 86.69, 87.23, 87.48, 87.42, 87.05, 86.33, 85.22, 83.63, 81.41,)),
    32: (85.32, (77.74, 81.04, 83.59, 85.61, 87.20, 88.44, 89.36, 89.98, 90.31, 90.35, 90.10, 89.52, 88.58, 87.21, 85.32,)),
    33: (86.83, (80.00, 83.37, 85.98, 88.06, 89.72, 91.03, 92.02, 92.71, 93.12, 93.26, 93.10, 92.64, 91.85, 90.69, 89.06, 86.83,)),
    34: (90.74, (82.26, 85.69, 88.37, 90.51, 92.23, 93.60, 94.65, 95.42, 95.91, 96.13, 96.07, 95.72, 95.07, 94.07, 92.66, 90.74,)),
    35: (92.24, (84.51, 88.01, 90.75, 92.95, 94.73, 96.16, 97.28, 98.11, 98.67, 98.97, 99, 98.76, 98.22, 97.37, 96.15, 94.48, 92.24,)),
    36: (96.15, (86.76, 90.32, 93.12, 95.38, 97.22, 98.71, 99.88, 100.78, 101.41, 101.79, 101.90, 101.75, 101.33, 100.61, 99.55, 98.09, 96.15,)),
}
