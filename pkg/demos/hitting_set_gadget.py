"""Hitting set to vertex cover, and the promise being refuted.

First part: builds the vertex-cover gadget for a small hitting-set family
and shows that the minimum cover equals the minimum hitting set plus the
offset.  Second part: runs the solver on a graph with too small a promise
and prints the resulting no-CVD conclusion.
"""

from scdt import (
    Graph,
    HittingSetInstance,
    NoCvdConclusion,
    brute_hitting_set,
    hitting_set_vc_instance,
    solve_vc,
    solve_vc_given_modulator,
)


def gadget():
    family = [{0}, {0, 1}, {1, 2, 3}, {2, 4}]
    hs = HittingSetInstance(5, tuple(frozenset(s) for s in family))
    g, modulator, offset = hitting_set_vc_instance(hs)
    best = brute_hitting_set(hs)
    print(f"family {[sorted(s) for s in family]}: minimum hitting set {sorted(best)}")
    print(f"gadget: n={g.n}, m={g.m}, offset {offset}")
    via_modulator = solve_vc_given_modulator(g, modulator)
    via_dp = solve_vc(g, len(modulator))
    print(f"vertex cover with modulator: {via_modulator.size}; via decomposition: {via_dp.size}")
    print(f"hitting set + offset = {len(best) + offset}")


def refuted():
    # K_{4,4} needs 3 deletions to become chordal.  A small k may still get an
    # answer: the answer is exact either way, it just says nothing about the promise.
    g = Graph(8, [(u, v) for u in range(4) for v in range(4, 8)])
    for k in range(4):
        try:
            sol = solve_vc(g, k)
        except NoCvdConclusion as exc:
            print(f"k={k}: promise refuted ({exc})")
        else:
            print(f"k={k}: vertex cover of size {sol.size}")


if __name__ == "__main__":
    gadget()
    print()
    refuted()
