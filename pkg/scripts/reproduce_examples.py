"""Print the worked examples: symmetric expansions, non-symmetric cases,
the witness for 6,4,6,2/2,1,1 and the graph of 3,4,3,4,1/2,2,1."""
from qsymlab.chromatic import build_graph
from qsymlab.families import expand_M, symmetry_witness_extended, witness_tableau
from qsymlab.qsym import is_symmetric, to_monomial_symmetric
from qsymlab.shapes import parse_shape

EXPANSIONS = [
    ("dI", "3,4,4,3,1/2,1,2"),
    ("rdI", "3,4,4,3,1/2,1,2"),
    ("ex", "4,4,3,3,1/2,2,1"),
    ("ex", "3,4,4,3,1/2,2,1"),
    ("rex", "4,4,3,3,1/2,2,1"),
    ("rex", "3,4,4,3,1/2,2,1"),
    ("sAdI", "3,4,4,1,3/2,1,2"),
    ("wAdI", "3,4,4,1,3/2,1,2"),
]


def main():
    for name, text in EXPANSIONS:
        f = expand_M(name, parse_shape(text))
        if is_symmetric(f):
            print(f"{name}_{{{text}}} = {to_monomial_symmetric(f)}")
        else:
            print(f"{name}_{{{text}}} is not symmetric ({len(f.coeffs)} M-terms)")

    s = parse_shape("6,4,6,2/2,1,1")
    w = symmetry_witness_extended(s)
    e = expand_M("ex", s)
    print(f"\nwitness for {s}: I={w.I} K={w.K}")
    print(f"  coefficient of M{list(w.gamma)} = {e[w.gamma]}")
    print(f"  coefficient of M{list(w.gamma_prime)} = {e[w.gamma_prime]}")
    print("  tableau of content gamma':")
    print("\n".join("    " + r for r in witness_tableau(s).render().splitlines()))

    g = build_graph(parse_shape("3,4,3,4,1/2,2,1"))
    print(f"\ngraph of 3,4,3,4,1/2,2,1: {g.vertex_count} vertices, {len(g.edges)} edges")
    print(" ".join(g.dump().splitlines()))


if __name__ == "__main__":
    main()
