#!/usr/bin/env python3
"""Tokenize sampled functions with javalang and freeze the result as a test fixture.

    alphacc synth --out /tmp/synth
    python3 scripts/javalang_reference.py /tmp/synth/functions.jsonl tests/data/javalang_tokens.jsonl \
        --class-file tests/data/Corpus50.java

The class file wraps the first 50 sampled functions in one class; javalang's
method count for it goes to <class-file>.count.
"""

import argparse
import json
import random

import javalang
import javalang.tokenizer as jt

# javalang class name -> alphacc token type
TYPE_MAP = {
    "Integer": "DecimalInteger",
    "DecimalInteger": "DecimalInteger",
    "FloatingPoint": "DecimalFloatingPoint",
    "DecimalFloatingPoint": "DecimalFloatingPoint",
    "Character": "String",
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("functions")
    ap.add_argument("out")
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--class-file")
    args = ap.parse_args()

    with open(args.functions) as f:
        functions = [json.loads(line) for line in f if line.strip()]
    sample = random.Random(args.seed).sample(functions, min(args.count, len(functions)))
    sample.sort(key=lambda fn: fn["id"])

    with open(args.out, "w") as out:
        for fn in sample:
            tokens = []
            last_end = None
            for tok in jt.tokenize(fn["code"]):
                kind = type(tok).__name__
                start = (tok.position.line, tok.position.column)
                # javalang splits >> and >>> into single '>' tokens; rejoin touching ones
                if tok.value == ">" and tokens and tokens[-1][0].endswith(">") and set(tokens[-1][0]) == {">"} \
                        and last_end == start:
                    tokens[-1][0] += ">"
                else:
                    tokens.append([tok.value, TYPE_MAP.get(kind, kind)])
                last_end = (start[0], start[1] + len(tok.value))
            out.write(json.dumps({"id": fn["id"], "code": fn["code"], "tokens": tokens}) + "\n")

    if args.class_file:
        body = "\n\n".join("  // " + fn["id"] + "\n" + fn["code"] for fn in sample[:50])
        source = "public class Corpus50 {\n" + body + "\n}\n"
        with open(args.class_file, "w") as out:
            out.write(source)
        tree = javalang.parse.parse(source)
        methods = sum(1 for _ in tree.filter(javalang.tree.MethodDeclaration))
        with open(args.class_file + ".count", "w") as out:
            out.write(f"{methods}\n")


if __name__ == "__main__":
    main()
