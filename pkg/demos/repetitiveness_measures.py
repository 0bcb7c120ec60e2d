"""Sample counts against BWT runs, on random and repetitive inputs.

Run: python demos/repetitiveness_measures.py
"""
import random

from stpd import Text, ppm_escape_count, stpos_size, worst_case_string
from stpd.cli import STATS_COLUMNS, measure_sequence

rng = random.Random(7)


def mutated_repeat(root_len, copies, mutations):
    root = [rng.choice(b"ACGT") for _ in range(root_len)]
    body = root * copies
    for _ in range(mutations):
        body[rng.randrange(len(body))] = rng.choice(b"ACGT")
    return Text(body + [0])


inputs = {
    "random DNA": Text([rng.choice(b"ACGT") for _ in range(2000)] + [0]),
    "repeat, 0 edits": mutated_repeat(50, 40, 0),
    "repeat, 10 edits": mutated_repeat(50, 40, 10),
    "repeat, 100 edits": mutated_repeat(50, 40, 100),
}
print(f"{'input':<18}" + "".join(f"{c:>10}" for c in STATS_COLUMNS))
for name, text in inputs.items():
    row = measure_sequence(text)
    print(f"{name:<18}" + "".join(f"{row[c]:>10}" for c in STATS_COLUMNS))
print()

# The leftmost-occurrence samples have no bound in terms of r: this family
# needs p + 1 of them while staying highly compressible.
print("worst-case family 0^x1 1 0^x2 2 ... 0^xp p")
for xs in [(3, 1), (8, 5, 2), (20, 15, 10, 5, 1)]:
    s = worst_case_string(xs)
    print(f"  xs={xs!s:<20} length={len(s):<3} leftmost samples={stpos_size(s)}")
print()

# They are, however, bounded by the escapes of an unbounded-context PPM model.
for name, text in inputs.items():
    print(f"{name:<18} leftmost samples={stpos_size(text):<5} escapes={ppm_escape_count(text)}")
