//! Verbatim transcription of the published puzzle tables. Nothing in this
//! file is ever edited to "fix" the source: corrections are data, applied
//! from an errata overlay at load time, so the raw rows stay inspectable.

/// The 60 spherical-triangle-path rows: end face, degree-5 inner vertex,
/// degree-3 inner vertex, end face. Reading order of the source table:
/// five symbol blocks, six columns each, top row then bottom row.
pub(super) const S3P: &str = "\
1_1 y'_0 x'_1 1_2
1_4 y_3 x_1 1_2
1_1 y'_3 z'_1 1_5
1_4 y_0 z_1 1_5
1_2 y'_4 x_3 1_3
1_5 y_2 z'_4 1_3
1_2 y'_2 x'_4 1_6
1_5 y_4 z'_3 1_6
1_3 y'_1 x'_5 1_1
1_6 y_5 x'_2 1_1
1_3 y'_5 z_2 1_4
1_6 y_1 z_5 1_4
2_1 y'_3 x_5 2_3
2_4 y'_5 z'_4 2_3
2_1 y_5 x_4 2_6
2_4 y_3 z'_5 2_6
2_2 y'_0 x'_2 2_1
2_5 y_4 x_2 2_1
2_2 y'_4 z'_2 2_4
2_5 y_0 z_2 2_4
2_3 y'_1 x'_3 2_2
2_6 y'_2 x'_1 2_2
2_3 y_2 z_1 2_5
2_6 y_1 z_3 2_5
3_1 y'_0 x'_3 3_3
3_4 y'_5 x_3 3_3
3_1 y_5 z'_3 3_6
3_4 y_0 z_3 3_6
3_2 y'_2 x'_4 3_1
3_5 y'_3 x'_2 3_1
3_2 y_3 z_2 3_4
3_5 y_2 z_4 3_4
3_3 y'_4 x_1 3_2
3_6 y_1 z'_5 3_2
3_3 y'_1 x_5 3_5
3_6 y_4 z'_1 3_5
4_1 y'_1 z'_4 4_3
4_4 y_0 z_4 4_3
4_1 y'_0 x'_4 4_6
4_4 y_1 x_4 4_6
4_2 y'_4 x'_3 4_1
4_5 y'_3 x'_5 4_1
4_2 y_3 z_5 4_4
4_5 y_4 z_3 4_4
4_3 y_5 z'_2 4_2
4_6 y'_2 x_1 4_2
4_3 y_2 z'_1 4_5
4_6 y_5 x_2 4_5
5_1 y'_1 x_3 5_3
5_4 y_1 z'_3 5_6
5_1 y'_3 x_2 5_6
5_4 y_3 z'_2 5_3
5_2 y'_0 x'_5 5_1
5_5 y_2 x_5 5_1
5_2 y'_2 z'_5 5_4
5_5 y_0 z_5 5_4
5_3 y'_4 x'_1 5_2
5_6 y_5 x'_4 5_2
5_3 y'_5 z_4 5_5
5_6 y_4 z_1 5_5
";

/// The clockwise face lists around the 12 degree-5 and 20 degree-3 inner
/// vertices, in the published listing order.
pub(super) const VERTEX_FACES: &str = "\
y_0 1_4 3_4 5_5 2_5 4_4
y_1 1_3 3_3 4_1 5_1 2_3
y'_0 1_1 4_1 2_2 5_2 3_1
y'_1 1_6 2_6 5_4 4_4 3_6
y_2 1_5 5_5 4_3 2_3 3_5
y_3 1_4 5_4 3_2 4_2 2_4
y'_2 1_2 3_2 2_6 4_6 5_2
y'_3 1_1 2_1 4_5 3_5 5_1
y_4 1_5 4_5 5_6 3_6 2_5
y_5 1_6 5_6 2_1 3_1 4_6
y'_4 1_2 2_2 3_3 5_3 4_2
y'_5 1_3 4_3 3_4 2_4 5_3
x_1 1_2 4_2 3_2
x_2 2_1 5_6 4_5
x'_1 1_2 5_2 2_2
x'_2 1_1 3_1 2_1
z_1 1_5 2_5 5_5
z_2 1_4 2_4 3_4
z'_1 1_5 3_5 4_5
z'_2 2_4 4_2 5_3
x_3 1_3 5_3 3_3
x_4 1_6 4_6 2_6
x'_3 2_2 4_1 3_3
x'_4 3_1 5_2 4_6
z_3 2_5 3_6 4_4
z_4 3_4 4_3 5_5
z'_3 1_6 3_6 5_6
z'_4 1_3 2_3 4_3
x_5 2_3 5_1 3_5
x'_5 1_1 5_1 4_1
z_5 1_4 4_4 5_4
z'_5 2_6 3_2 5_4
";

/// The twelve named pentagon words: six odd-parity labels, then their six
/// even-parity companions (`yb_i` renders the barred label in ASCII).
pub(super) const DISPLAY1: &str = "\
y_0 13524
y_1 13452
y_2 13245
y_3 12435
y_4 12354
y_5 15234
yb_0 12345
yb_1 15324
yb_2 14352
yb_3 13254
yb_4 15243
yb_5 13542
";

/// The ten named triangle words.
pub(super) const DISPLAY2: &str = "\
x_1 314
x_2 425
x_3 531
x_4 142
x_5 253
x'_1 512
x'_2 123
x'_3 234
x'_4 345
x'_5 451
";

/// The published pentagon-class correspondence rows: source label, the
/// five listed graph vertices, and the label the source text equates the
/// target with.
pub(super) const THETA5_ROWS: &str = "\
y_0 -> 135 524 413 352 241 = yb_0
y_1 -> 134 452 213 345 521 = yb_1
yb_0 -> 123 345 512 234 451 = y_0
yb_1 -> 153 324 415 532 241 = y_1
y_2 -> 132 245 513 324 451 = yb_2
y_3 -> 124 435 512 243 351 = yb_3
yb_2 -> 143 352 214 435 521 = y_2
yb_3 -> 132 254 413 325 541 = y_3
y_4 -> 123 354 412 235 541 = yb_4
y_5 -> 152 234 415 523 341 = yb_5
yb_4 -> 152 243 315 524 431 = y_4
yb_5 -> 135 542 213 354 421 = y_5
";

/// The published triple correspondence rows: source name and the six
/// listed graph vertices.
pub(super) const THETA3_ROWS: &str = "\
x_2 -> 412 235 514 432 215 534
x_3 -> 523 341 125 543 321 145
x'_2 -> 142 253 341 152 243 351
x'_3 -> 213 354 412 253 314 452
x_4 -> 134 452 231 154 432 251
x_5 -> 215 543 312 245 513 342
x'_4 -> 314 425 513 324 415 523
x'_5 -> 425 531 124 435 521 134
x_1 -> 321 154 423 351 124 453
x'_1 -> 531 142 235 541 132 245
";

/// The alternating inner-vertex/face cycles left after deleting the
/// sibling 2-paths: one 20-cycle and two 10-cycles. (The source omits one
/// comma, between `4_2` and `z'_2`; the tokens themselves are unchanged.)
pub(super) const PENTAGON_CYCLES: &str = "\
z'_1 4_5 x_2 5_6 z'_3 1_6 x_4 2_6 z'_5 3_2 x_1 4_2 z'_2 5_3 x_3 1_3 z'_4 2_3 x_5 3_5
x'_1 2_2 x'_3 4_1 x'_5 1_1 x'_2 3_1 x'_4 5_2
z_1 2_5 z_3 4_4 z_5 1_4 z_2 3_4 z_4 5_5
";

/// End-face index pairs tracing the three pairwise orthogonal circles of
/// each symbol. The unused index pairs {1,4}, {2,5}, {3,6} are the face
/// diameters.
pub(super) const CIRCLE_PATTERNS: [[(u8, u8); 4]; 3] = [
    [(1, 2), (2, 4), (4, 5), (5, 1)],
    [(1, 3), (3, 4), (4, 6), (6, 1)],
    [(2, 3), (3, 5), (5, 6), (6, 2)],
];
