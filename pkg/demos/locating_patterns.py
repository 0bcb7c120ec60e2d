"""Three ways to locate patterns, checked against each other.

Run: python demos/locating_patterns.py
"""
import random

from stpd import GeneralLocator, PermutationKind, StColexIndex, StLexTree, Text, TextArrays
from stpd.brute import naive_locate_all

rng = random.Random(1)
root = [rng.choice(b"ACGT") for _ in range(40)]
body = root * 25
for _ in range(30):
    body[rng.randrange(len(body))] = rng.choice(b"ACGT")
text = Text(body + [0])
arrays = TextArrays(text)
print(f"text of length {len(text)}: 25 copies of a 40-mer with 30 point mutations")

colex = StColexIndex.build(text, arrays, block_words=8)
tree = StLexTree.build(text, arrays)
general = {k: GeneralLocator(text, k, arrays) for k in (PermutationKind.POS, PermutationKind.LEX)}
print(f"colex samples {len(colex.pda)}, tree samples {len(tree)}, "
      f"phrases (POS) {len(general[PermutationKind.POS].cover.type2)}, k-mer table k <= {colex.kmax}")
print()

# The colex index finds one occurrence with binary searches over the samples,
# then reads the rest off the prefix array a block of successors at a time.
for length in (4, 12, 30):
    start = rng.randrange(len(body) - length)
    pattern = tuple(body[start:start + length])
    stats = {}
    hits = sorted(colex.locate_all(pattern, stats))
    assert hits == naive_locate_all(text, pattern)
    assert hits == sorted(tree.locate_all(pattern))
    for kind, gl in general.items():
        assert hits == sorted(gl.locate_all(pattern))
    print(f"|P|={length:<3} occ={len(hits):<3} successor calls={stats['phi_next']:<3} "
          f"leftmost={general[PermutationKind.POS].locate_primary(pattern)}")
print()

# The general locator copies each occurrence through phrase sources: a
# point (x, x+m-1) inside a phrase's rectangle yields a copy at the phrase.
gl = general[PermutationKind.POS]
pattern = tuple(body[:6])
x = gl.locate_primary(pattern)
print("primary occurrence of", text.decode(pattern), "at", x)
for rect in gl.stab(x, x + len(pattern) - 1):
    print("  rectangle", rect[:4], "-> copy at", rect.label + x - rect.x_lo)
