"""Print the exact invariants of the explicit extremal constructions (conn is capped at 3)."""
from orespan import search
from orespan.extremal import gen_F, gen_H, gen_two_cliques
from orespan.graph import check_conditions, to_graph6


def row(name, g):
    c = check_conditions(g)
    jelly = search.find_spanning_jellyfish(g) is not None
    broom = search.find_spanning_broom(g) is not None
    spider = search.find_spanning_spider(g) is not None
    octo = search.find_spanning_octopus(g) is not None
    print(
        f"{name:12s} n={g.n:2d} delta={c.delta:2d} sigma2={c.sigma2!s:>3} conn={c.connectivity} "
        f"ore={c.meets_ore_main!s:5} jellyfish={jelly!s:5} octopus={octo!s:5} spider={spider!s:5} "
        f"broom={broom!s:5} {to_graph6(g)}"
    )


def main():
    for s in (2, 3, 4):
        row(f"H({s})", gen_H(s))
    row("TwoCliques", gen_two_cliques(14))
    row("F(3,3,3,3)", gen_F(3, 3, 3, 3))
    row("F(4,3,3,4)", gen_F(4, 3, 3, 4))


if __name__ == "__main__":
    main()
