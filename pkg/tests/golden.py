"""Published ideal listings and graph drawings, keyed by their printed labels."""

from borelnet import parse_ideal

HILB_6T_5 = {
    1: "x3, x2^7, x2^6*x1^4 @ 10",
    2: "x3, x2^8, x2^7*x1, x2^6*x1^3 @ 10",
    3: "x3^2, x3*x2, x3*x1, x2^7, x2^6*x1^3 @ 10",
    4: "x3^2, x3*x2, x3*x1, x2^8, x2^7*x1, x2^6*x1^2 @ 10",
    # printed with x2*x1^2; only x3*x1^2 gives a Borel ideal with 6t-5
    5: "x3^2, x3*x2, x3*x1^2, x2^7, x2^6*x1^2 @ 10",
    6: "x3^2, x3*x2, x3*x1^3, x2^7, x2^6*x1 @ 10",
    7: "x3^2, x3*x2^2, x3*x2*x1, x3*x1^2, x2^7, x2^6*x1 @ 10",
    8: "x3^2, x3*x2, x3*x1^4, x2^6 @ 10",
    9: "x3^2, x3*x2^2, x3*x2*x1, x3*x1^3, x2^6 @ 10",
    10: "x3^3, x3^2*x2, x3*x2^2, x3^2*x1, x3*x2*x1, x3*x1^2, x2^6 @ 10",
    11: "x3^2, x3*x2, x2^5 @ 10",
}

HILB_8 = {
    1: "x3, x2, x1^8 @ 8",
    2: "x3, x2^2, x2*x1, x1^7 @ 8",
    3: "x3, x2^2, x2*x1^2, x1^6 @ 8",
    4: "x3^2, x3*x2, x2^2, x3*x1, x2*x1, x1^6 @ 8",
    5: "x3, x2^2, x2*x1^3, x1^5 @ 8",
    6: "x3, x2^3, x2^2*x1, x2*x1^2, x1^5 @ 8",
    7: "x3^2, x3*x2, x2^2, x3*x1, x2*x1^2, x1^5 @ 8",
    8: "x3, x2^3, x2^2*x1, x2*x1^3, x1^4 @ 8",
    9: "x3^2, x3*x2, x2^2, x3*x1, x2*x1^3, x1^4 @ 8",
    10: "x3^2, x3*x2, x3*x1, x2^3, x2^2*x1, x2*x1^2, x1^4 @ 8",
    11: "x3^2, x3*x2, x2^2, x3*x1^2, x2*x1^2, x1^4 @ 8",
    12: "x3^2, x3*x2, x2^3, x2^2*x1, x3*x1^2, x2*x1^2, x1^3 @ 8",
}

HILB_4T_1 = {
    1: "x4, x3, x2^5, x2^4*x1^3 @ 7",
    2: "x4, x3, x2^6, x2^5*x1, x2^4*x1^2 @ 7",
    3: "x4, x3^2, x3*x2, x3*x1, x2^5, x2^4*x1^2 @ 7",
    4: "x4, x3^2, x3*x2, x3*x1^2, x2^5, x2^4*x1 @ 7",
    5: "x4^2, x4*x3, x3^2, x4*x2, x3*x2, x4*x1, x3*x1, x2^5, x2^4*x1 @ 7",
    6: "x4, x3^2, x3*x2, x2^4, x3*x1^3 @ 7",
    7: "x4, x3^2, x3*x2^2, x3*x2*x1, x3*x1^2, x2^4 @ 7",
    8: "x4^2, x4*x3, x3^2, x4*x2, x3*x2, x4*x1, x3*x1^2, x2^4 @ 7",
    9: "x4, x3^2, x3*x2, x2^4, x2^3*x1 @ 7",
    10: "x4, x3^2, x3*x2^2, x2^3, x3*x2*x1 @ 7",
    11: "x4^2, x4*x3, x3^2, x4*x2, x3*x2, x4*x1, x2^3 @ 7",
    12: "x4^2, x4*x3, x3^2, x4*x2, x3*x2, x2^2 @ 7",
}

# deformations of the degree-8 ideal with Hilbert polynomial 3t+5
SOURCE_3T_5 = "x3^2, x3*x2^2, x3*x2*x1, x2^4, x2^3*x1, x2^2*x1^2 @ 8"
TARGETS_3T_5 = {
    1: "x3^3, x3^2*x2, x3*x2^2, x2^3, x3^2*x1, x3*x2*x1, x2^2*x1^2 @ 8",
    2: "x3^2, x3*x2^2, x2^3, x3*x2*x1^2, x2^2*x1^2 @ 8",
    3: "x3^2, x3*x2, x2^4, x2^3*x1, x2^2*x1^3 @ 8",
    # printed as "x2^2, x1^3"; the product x2^2*x1^3 is meant
    4: "x3^2, x3*x2^2, x2^3, x3*x2*x1, x2^2*x1^3 @ 8",
    5: "x3^2, x3*x2^2, x3*x2*x1, x2^4, x2^3*x1, x3*x1^3 @ 8",
}
COMPOSED_3T_5 = "x3^3, x3^2*x2, x3*x2^2, x2^3, x3^2*x1, x3*x2*x1, x3*x1^3 @ 8"

# drawn graph edges, by printed label (source -> target when directed)
WEIGHTED_6T_5_EDGES = {(7, 5), (1, 3), (10, 7), (11, 8), (4, 5), (3, 5), (6, 5), (9, 6), (2, 3), (8, 6)}
REVLEX_6T_5_EDGES = {(7, 10), (2, 4), (4, 5), (3, 5), (6, 9), (9, 10), (1, 3), (8, 9), (5, 7)}
REVLEX_8_EDGES = {(3, 7), (5, 9), (4, 7), (10, 12), (8, 10), (6, 10), (1, 2), (9, 11), (11, 12), (7, 11), (2, 4)}
WEIGHTED_8_EDGES = {(11, 7), (3, 7), (10, 7), (5, 7), (4, 7), (6, 7), (12, 11), (9, 7), (1, 2), (8, 9), (2, 4)}
INCIDENCE_4T_1_SIMPLE = {
    (5, 8), (6, 7), (3, 4), (9, 11), (2, 3), (8, 11), (9, 10), (7, 10), (6, 8), (4, 6),
    (4, 5), (11, 12), (6, 9), (4, 8), (7, 8), (4, 7), (3, 5), (1, 2), (10, 11), (1, 3),
}
INCIDENCE_4T_1_COMPOSED = {(8, 10), (7, 11)}


def ideals(table):
    return {k: parse_ideal(v) for k, v in table.items()}


def labels(vertices, table):
    """Vertex index -> printed label."""
    back = {B: k for k, B in ideals(table).items()}
    return [back[B] for B in vertices]
