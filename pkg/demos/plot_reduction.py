"""
From anonymous games to diversity games
=======================================

Players of an anonymous game care only about the size of their coalition.
Each becomes a blue agent; gadget reds let a blue agent in a coalition of
``s`` blues and one red "feel" size ``s``.
"""

from divgames import AnonymousGame, check_reduction_equivalence, reduce_to_diversity

anon = AnonymousGame(((2, 1), (1, 2)))
red = reduce_to_diversity(anon)
g = red.game
print(f"{anon.n} players -> {g.red_count} gadget reds + {g.blue_count} blues")
for j, (t, copy) in enumerate(red.gadgets):
    print(f"  {g.name(j)} serves size {t} (copy {copy}): top ratios {g.prefs[j][0]}, {g.prefs[j][1]}")
for i in range(anon.n):
    b = red.blue_of(i)
    print(f"  {g.name(b)} ranks sizes {anon.orders[i]} as {[str(x) for x in g.prefs[b][:3]]}")

# %%
# Both cores are non-empty; the brute-force oracles agree.
report = check_reduction_equivalence(anon)
print(report)
