"""Sorted arrays, BWT runs and path decomposition samples of a small text.

Run: python demos/arrays_and_runs.py
"""
from stpd import (PermutationKind, Text, TextArrays, build_lpf, build_pda, bwt, cobwt,
                  compress, count_runs, extract_char, irreducible_positions)

text = Text.from_str("AACGCGCGAA$")
arrays = TextArrays(text)
show = text.decode

print("text      ", show(text.symbols))
print("SA        ", arrays.sa.inverse)
print("ISA       ", arrays.sa.forward)
print("PA        ", arrays.pa.inverse)

# The BWT reads the symbol before each sorted suffix; the coBWT reads the
# symbol after each colex-sorted prefix. Their run counts r and rbar are the
# yardsticks for every sample set below.
print("BWT       ", show(bwt(text)), " r =", count_runs(bwt(text)))
print("coBWT     ", show(cobwt(text)), " rbar =", count_runs(cobwt(text)))
print()

# LPF[i] is the longest prefix of suffix i shared with a suffix of smaller
# rank. Positions where it does not simply drop by one start a new path of
# the decomposition, and each path contributes one sample i + LPF[i].
for kind in PermutationKind:
    lpf = build_lpf(text, kind, arrays)
    starts = irreducible_positions(lpf)
    pda = build_pda(text, kind, arrays)
    print(f"{kind.value:<11} LPF={lpf.values}  starts={starts}  samples={pda.positions}")
print()

# The samples alone (plus one symbol each) are enough to rebuild the text.
ct = compress(text, PermutationKind.POS)
for q in ct.quadruples:
    print(f"phrase start={q.start} length={q.length} source={q.source} then {show([q.symbol])}")
rebuilt = [extract_char(ct, j) for j in range(1, len(text) + 1)]
print("rebuilt   ", show(rebuilt))
