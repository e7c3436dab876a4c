"""Walk through the whole pipeline on one planted instance.

Generates a graph that is chordal after deleting k vertices, builds the
semi-clique tree decomposition, prints a few bags, then solves vertex
cover, feedback vertex set and odd cycle transversal and checks each answer
against brute force.

    python3 demos/planted_walkthrough.py [n] [k] [seed]
"""

import sys
import time

from scdt import brute_fvs, brute_oct, brute_vc, decompose, gen_planted, solve_fvs, solve_oct, solve_vc, validate_td


def show_bag(t, bag):
    slots = [sorted(c) for c in bag.cliques if c]
    print(f"  bag {t}: cliques {slots} rest {sorted(bag.rest)}")


def main(n=16, k=2, seed=1):
    inst = gen_planted(n, k, density=0.5, seed=seed)
    g = inst.graph
    print(f"planted instance: n={g.n}, m={g.m}, modulator {sorted(inst.modulator)}")

    td = decompose(g, k)
    report = validate_td(g, td)
    print(f"decomposition: {len(td)} bags, budget {td.budget}, widest rest part {td.max_rest()}")
    print(f"validator: {'clean' if report.ok else list(report)}")
    print("widest bags:")
    for t in sorted(range(len(td)), key=lambda t: -len(td.bags[t]))[:3]:
        show_bag(t, td.bags[t])

    for name, solve, brute in (("VC", solve_vc, brute_vc), ("FVS", solve_fvs, brute_fvs), ("OCT", solve_oct, brute_oct)):
        start = time.perf_counter()
        sol = solve(g, k, td=td)
        took = time.perf_counter() - start
        ref = brute(g, 18).size if g.n <= 18 else None
        check = "" if ref is None else f" (brute force: {ref})"
        print(f"{name}: size {sol.size}{check}, {took:.2f}s, largest table {sol.stats['max_table']}")
        print(f"  witness {sol.sorted_vertices()}")


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:4]))
