#!/usr/bin/env python3
"""Lexicographic order on words, and how grammars list their words in it."""

from lexdense import OrderedAlphabet, enumerate_up_to_length, first_difference, lex_compare, parse_grammar


def compare_some_words():
    print("=== comparing words over a < b ===")
    ab = OrderedAlphabet(("a", "b"))
    for u, v in [("b", "ba"), ("ab", "b"), ("ab", "ab"), ("ba", "a")]:
        print(f"{u:>3} vs {v:<3} -> {lex_compare(tuple(u), tuple(v), ab).name}")

    # a prefix is smaller, otherwise the first differing letter decides
    print(first_difference(tuple("abba"), tuple("abbb"), ab))
    print(first_difference(tuple("b"), tuple("ba"), ab))


def list_a_language():
    print("\n=== a*b in lexicographic order ===")
    g = parse_grammar("alphabet: a b\nstart: S\nS -> a S | b\n")
    words = enumerate_up_to_length(g, 6)
    print("  ".join("".join(w) for w in words))
    print("the list never starts: a^k b only gets smaller as k grows, so there is no least word")


def list_the_comparison_language():
    print("\n=== {00,11}*01 ===")
    g = parse_grammar("alphabet: 0 1\nstart: S\nS -> 0 0 S | 1 1 S | 0 1\n")
    for w in enumerate_up_to_length(g, 6):
        print("".join(w))


if __name__ == "__main__":
    compare_some_words()
    list_a_language()
    list_the_comparison_language()
