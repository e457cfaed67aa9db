// 600-cell boundary modulo the antipodal map: 60 vertices, 300 tetrahedra.
pub(super) const RP3_FACETS: [[u32; 4]; 300] = [
    [0, 1, 2, 3], [0, 1, 2, 4], [0, 1, 3, 5], [0, 1, 4, 6], [0, 1, 5, 6], [0, 2, 3, 7],
    [0, 2, 4, 8], [0, 2, 7, 8], [0, 3, 5, 9], [0, 3, 7, 9], [0, 4, 6, 10], [0, 4, 8, 10],
    [0, 5, 6, 11], [0, 5, 9, 11], [0, 6, 10, 11], [0, 7, 8, 12], [0, 7, 9, 12], [0, 8, 10, 12],
    [0, 9, 11, 12], [0, 10, 11, 12], [1, 2, 3, 13], [1, 2, 4, 14], [1, 2, 13, 14], [1, 3, 5, 15],
    [1, 3, 13, 15], [1, 4, 6, 16], [1, 4, 14, 16], [1, 5, 6, 19], [1, 5, 15, 19], [1, 6, 16, 19],
    [1, 13, 14, 33], [1, 13, 15, 33], [1, 14, 16, 33], [1, 15, 19, 33], [1, 16, 19, 33], [2, 3, 7, 17],
    [2, 3, 13, 17], [2, 4, 8, 18], [2, 4, 14, 18], [2, 7, 8, 20], [2, 7, 17, 20], [2, 8, 18, 20],
    [2, 13, 14, 34], [2, 13, 17, 34], [2, 14, 18, 34], [2, 17, 20, 34], [2, 18, 20, 34], [3, 5, 9, 21],
    [3, 5, 15, 21], [3, 7, 9, 23], [3, 7, 17, 23], [3, 9, 21, 23], [3, 13, 15, 35], [3, 13, 17, 35],
    [3, 15, 21, 35], [3, 17, 23, 35], [3, 21, 23, 35], [4, 6, 10, 22], [4, 6, 16, 22], [4, 8, 10, 24],
    [4, 8, 18, 24], [4, 10, 22, 24], [4, 14, 16, 36], [4, 14, 18, 36], [4, 16, 22, 36], [4, 18, 24, 36],
    [4, 22, 24, 36], [5, 6, 11, 25], [5, 6, 19, 25], [5, 9, 11, 27], [5, 9, 21, 27], [5, 11, 25, 27],
    [5, 15, 19, 37], [5, 15, 21, 37], [5, 19, 25, 37], [5, 21, 27, 37], [5, 25, 27, 37], [6, 10, 11, 28],
    [6, 10, 22, 28], [6, 11, 25, 28], [6, 16, 19, 38], [6, 16, 22, 38], [6, 19, 25, 38], [6, 22, 28, 38],
    [6, 25, 28, 38], [7, 8, 12, 26], [7, 8, 20, 26], [7, 9, 12, 29], [7, 9, 23, 29], [7, 12, 26, 29],
    [7, 17, 20, 39], [7, 17, 23, 39], [7, 20, 26, 39], [7, 23, 29, 39], [7, 26, 29, 39], [8, 10, 12, 30],
    [8, 10, 24, 30], [8, 12, 26, 30], [8, 18, 20, 40], [8, 18, 24, 40], [8, 20, 26, 40], [8, 24, 30, 40],
    [8, 26, 30, 40], [9, 11, 12, 31], [9, 11, 27, 31], [9, 12, 29, 31], [9, 21, 23, 41], [9, 21, 27, 41],
    [9, 23, 29, 41], [9, 27, 31, 41], [9, 29, 31, 41], [10, 11, 12, 32], [10, 11, 28, 32], [10, 12, 30, 32],
    [10, 22, 24, 42], [10, 22, 28, 42], [10, 24, 30, 42], [10, 28, 32, 42], [10, 30, 32, 42], [11, 12, 31, 32],
    [11, 25, 27, 43], [11, 25, 28, 43], [11, 27, 31, 43], [11, 28, 32, 43], [11, 31, 32, 43], [12, 26, 29, 44],
    [12, 26, 30, 44], [12, 29, 31, 44], [12, 30, 32, 44], [12, 31, 32, 44], [13, 14, 33, 45], [13, 14, 34, 45],
    [13, 15, 33, 46], [13, 15, 35, 46], [13, 17, 34, 48], [13, 17, 35, 48], [13, 33, 45, 46], [13, 34, 45, 48],
    [13, 35, 46, 48], [13, 45, 46, 48], [14, 16, 33, 47], [14, 16, 36, 47], [14, 18, 34, 49], [14, 18, 36, 49],
    [14, 33, 45, 47], [14, 34, 45, 49], [14, 36, 47, 49], [14, 45, 47, 49], [15, 19, 33, 50], [15, 19, 37, 50],
    [15, 21, 35, 54], [15, 21, 37, 54], [15, 33, 46, 50], [15, 35, 46, 54], [15, 37, 50, 54], [15, 46, 50, 54],
    [16, 19, 33, 51], [16, 19, 38, 51], [16, 22, 36, 55], [16, 22, 38, 55], [16, 33, 47, 51], [16, 36, 47, 55],
    [16, 38, 51, 55], [16, 47, 51, 55], [17, 20, 34, 52], [17, 20, 39, 52], [17, 23, 35, 56], [17, 23, 39, 56],
    [17, 34, 48, 52], [17, 35, 48, 56], [17, 39, 52, 56], [17, 48, 52, 56], [18, 20, 34, 53], [18, 20, 40, 53],
    [18, 24, 36, 57], [18, 24, 40, 57], [18, 34, 49, 53], [18, 36, 49, 57], [18, 40, 53, 57], [18, 49, 53, 57],
    [19, 25, 37, 58], [19, 25, 38, 58], [19, 33, 50, 51], [19, 37, 50, 58], [19, 38, 51, 58], [19, 50, 51, 58],
    [20, 26, 39, 58], [20, 26, 40, 58], [20, 34, 52, 53], [20, 39, 52, 58], [20, 40, 53, 58], [20, 52, 53, 58],
    [21, 23, 35, 59], [21, 23, 41, 59], [21, 27, 37, 57], [21, 27, 41, 57], [21, 35, 54, 59], [21, 37, 54, 57],
    [21, 41, 57, 59], [21, 54, 57, 59], [22, 24, 36, 59], [22, 24, 42, 59], [22, 28, 38, 56], [22, 28, 42, 56],
    [22, 36, 55, 59], [22, 38, 55, 56], [22, 42, 56, 59], [22, 55, 56, 59], [23, 29, 39, 55], [23, 29, 41, 55],
    [23, 35, 56, 59], [23, 39, 55, 56], [23, 41, 55, 59], [23, 55, 56, 59], [24, 30, 40, 54], [24, 30, 42, 54],
    [24, 36, 57, 59], [24, 40, 54, 57], [24, 42, 54, 59], [24, 54, 57, 59], [25, 27, 37, 53], [25, 27, 43, 53],
    [25, 28, 38, 52], [25, 28, 43, 52], [25, 37, 53, 58], [25, 38, 52, 58], [25, 43, 52, 53], [25, 52, 53, 58],
    [26, 29, 39, 51], [26, 29, 44, 51], [26, 30, 40, 50], [26, 30, 44, 50], [26, 39, 51, 58], [26, 40, 50, 58],
    [26, 44, 50, 51], [26, 50, 51, 58], [27, 31, 41, 49], [27, 31, 43, 49], [27, 37, 53, 57], [27, 41, 49, 57],
    [27, 43, 49, 53], [27, 49, 53, 57], [28, 32, 42, 48], [28, 32, 43, 48], [28, 38, 52, 56], [28, 42, 48, 56],
    [28, 43, 48, 52], [28, 48, 52, 56], [29, 31, 41, 47], [29, 31, 44, 47], [29, 39, 51, 55], [29, 41, 47, 55],
    [29, 44, 47, 51], [29, 47, 51, 55], [30, 32, 42, 46], [30, 32, 44, 46], [30, 40, 50, 54], [30, 42, 46, 54],
    [30, 44, 46, 50], [30, 46, 50, 54], [31, 32, 43, 45], [31, 32, 44, 45], [31, 41, 47, 49], [31, 43, 45, 49],
    [31, 44, 45, 47], [31, 45, 47, 49], [32, 42, 46, 48], [32, 43, 45, 48], [32, 44, 45, 46], [32, 45, 46, 48],
    [33, 44, 45, 46], [33, 44, 45, 47], [33, 44, 46, 50], [33, 44, 47, 51], [33, 44, 50, 51], [34, 43, 45, 48],
    [34, 43, 45, 49], [34, 43, 48, 52], [34, 43, 49, 53], [34, 43, 52, 53], [35, 42, 46, 48], [35, 42, 46, 54],
    [35, 42, 48, 56], [35, 42, 54, 59], [35, 42, 56, 59], [36, 41, 47, 49], [36, 41, 47, 55], [36, 41, 49, 57],
    [36, 41, 55, 59], [36, 41, 57, 59], [37, 40, 50, 54], [37, 40, 50, 58], [37, 40, 53, 57], [37, 40, 53, 58],
    [37, 40, 54, 57], [38, 39, 51, 55], [38, 39, 51, 58], [38, 39, 52, 56], [38, 39, 52, 58], [38, 39, 55, 56],
];
