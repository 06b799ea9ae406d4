#!/usr/bin/env python3
"""From a PCP instance to a grammar whose order is dense iff there is no solution."""

from lexdense import (PcpInstance, SolutionDetected, brute_force_solve, build_reduction_grammar,
                      certify_adjacent, enumerate_up_to_length, gap_witness, middle_witness,
                      neighbor_witnesses, probe_density_cfl)
from lexdense.order import format_word


def solvable():
    print("=== alpha = (ab, b), beta = (a, bb) ===")
    inst = PcpInstance.from_sequences(("ab", "b"), ("a", "bb"))
    r = build_reduction_grammar(inst)
    print(f"{len(r.delta)} letters, {len(r.grammar.productions)} productions")
    print("letters:", " ".join(r.delta.tokens))

    sol = brute_force_solve(inst, 4)
    print("solution:", sol)
    lower, upper = gap_witness(r, inst, sol)
    print("gap pair:", format_word(lower), "|", format_word(upper))

    cert = certify_adjacent(r.grammar, lower, upper, 10)
    for p in cert.premises:
        tag = "bounded" if p.bounded else "exact"
        print(f"  {p.name} ({tag}): {p.statement}")
    print("  " + cert.argument)

    # asking for a word between the gap pair hands back the solution
    res = middle_witness(r, lower, upper)
    assert isinstance(res, SolutionDetected)
    print("middle_witness ->", res)


def unsolvable():
    print("\n=== alpha = (ab), beta = (ba) ===")
    inst = PcpInstance.from_sequences(("ab",), ("ba",))
    r = build_reduction_grammar(inst)
    print("brute force to depth 8:", brute_force_solve(inst, 8))

    window = enumerate_up_to_length(r.grammar, 3)
    for u, v in list(zip(window, window[1:]))[:8]:
        z = middle_witness(r, u, v)
        print(f"  {format_word(u):>16} < {format_word(z):<18} < {format_word(v)}")

    report = probe_density_cfl(r.grammar, 5, r)
    print("\n".join("  " + line for line in report.lines()))

    v = ("1", "b", "a", "cent")
    print("neighbours of", format_word(v), "->", [format_word(x) for x in neighbor_witnesses(r, inst, v)])


if __name__ == "__main__":
    solvable()
    unsolvable()
