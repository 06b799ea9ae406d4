#!/usr/bin/env python3
"""Coding the reduction alphabet into {0,1} without changing the order."""

from lexdense import (PcpInstance, binary_code, build_reduction_grammar, encode_grammar,
                      enumerate_up_to_length, gap_witness, lex_compare, recognize)
from lexdense.lexorder import BINARY

if __name__ == "__main__":
    inst = PcpInstance.from_sequences(("ab", "b"), ("a", "bb"))
    r = build_reduction_grammar(inst)
    code = binary_code(r.delta)
    print(f"{len(r.delta)} letters -> {code.width} bits each")
    for t in r.delta.tokens:
        print(f"  {t:>7} {''.join(code.table[t])}")

    g2 = encode_grammar(r.grammar, code)
    print("\nencoded productions (first five):")
    for lhs, rhs in g2.productions[:5]:
        print(f"  {lhs} -> {' '.join(rhs)}")

    lower, upper = gap_witness(r, inst, (1, 2))
    a, b = code.encode(lower), code.encode(upper)
    print("\ngap pair, coded:")
    print("  " + "".join(a))
    print("  " + "".join(b))
    print("  both generated:", recognize(g2, a) and recognize(g2, b))

    words = enumerate_up_to_length(r.grammar, 3)
    same = all(lex_compare(u, v, r.delta) == lex_compare(code.encode(u), code.encode(v), BINARY)
               for u in words for v in words)
    print(f"\norder agrees on all {len(words) ** 2} pairs of words up to length 3: {same}")
