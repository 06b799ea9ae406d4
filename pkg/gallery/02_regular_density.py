#!/usr/bin/env python3
"""Exact density and order type of regular languages.

The decision runs on synchronized automata: pairs of words are read letter
by letter, padded at the end, and "some word lies between u and v" becomes
a projection of a three-track automaton.
"""

from lexdense import classify_regular_order_type, parse_grammar

GRAMMARS = {
    "a*b": "alphabet: a b\nstart: S\nS -> a S | b\n",
    "{00,11}*01": "alphabet: 0 1\nstart: S\nS -> 0 0 S | 1 1 S | 0 1\n",
    "0 + 0{00,11}*01": "alphabet: 0 1\nstart: T\nT -> 0 | 0 S\nS -> 0 0 S | 1 1 S | 0 1\n",
    "{00,11}*01 + 2": "alphabet: 0 1 2\nstart: S\nS -> 2 | T\nT -> 0 0 T | 1 1 T | 0 1\n",
    "{a, b}": "alphabet: a b\nstart: S\nS -> a | b\n",
}

if __name__ == "__main__":
    for name, text in GRAMMARS.items():
        report = classify_regular_order_type(parse_grammar(text))
        print(f"=== {name} ===")
        for line in report.lines():
            print("  " + line)
