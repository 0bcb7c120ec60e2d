"""Walk the compressed suffix tree built from the lexicographic samples.

Run: python demos/suffix_tree_navigation.py [TEXT]
"""
import sys

from stpd import StLexTree, Text, bwt, count_runs

text = Text.from_str(sys.argv[1] if len(sys.argv) > 1 else "AACGCGCGAA$")
tree = StLexTree.build(text)
show = text.decode

print(f"text {show(text.symbols)}: {len(tree)} samples, r = {count_runs(bwt(text))}")
print("samples", tree.stlex, " L =", show(tree.L), " F =", show(tree.F))
print()


def walk(node, parent, indent):
    # first/succ enumerate the outgoing labels; child descends one edge
    if parent is None:
        label = "(root)"
    else:
        i, j = tree.label(parent, node)
        label = show(text.symbols[i - 1:j])
    kind = f"leaf {tree.locate_leaf(node)}" if tree.isleaf(node) else f"depth {tree.sdepth(node)}"
    print(f"{indent}{label:<14} {kind:<9} {tuple(node)}")
    a = tree.first(node)
    while a is not None:
        walk(tree.child(node, a), node, indent + "  ")
        a = tree.succ(node, a)


walk(tree.root(), None, "")
print()

# Leaves are chained in suffix-array order by the successor function.
first, last = tree.leaves(tree.root())
order = [first.i_min]
leaf = first
while (leaf := tree.next(leaf)) is not None:
    order.append(leaf.i_min)
print("leaves in lex order", order)

for pattern in ["CG", "CGCGAA", "TT"]:
    print(f"locate {pattern!r}:", sorted(tree.locate_all(text.encode(pattern))))
