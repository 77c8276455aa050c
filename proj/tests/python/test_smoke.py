"""End-to-end smoke test for the plethy python bindings."""

import sys

import plethy


def check(label, got, want):
    if got != want:
        raise SystemExit(f"{label}: got {got!r}, want {want!r}")


def main():
    check("partitions of 4", plethy.enumerate_partitions(4, 4),
          [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])

    check("p_2((1,1))", plethy.count_pk([1, 1], 2), 2)
    check("q_2((0,0))", plethy.count_qk([0, 0], 2), 0)
    check("q_1((0,0))", plethy.count_qk([0, 0], 1), 1)
    check("p_3 off the lattice", plethy.count_pk([-1, 1], 3), 0)

    parts = plethy.enumerate_vector_partitions([1, 1])
    canonical = sorted(tuple(sorted(p)) for p in parts)
    check("partitions of (1,1)", canonical,
          sorted([((1, 1),), ((0, 1), (1, 0))]))

    check("chi^{(2,1)} at a 3-cycle", plethy.murnaghan_nakayama([2, 1], [3]), -1)
    check("chi^{(2,2)} at (2,2)", plethy.murnaghan_nakayama([2, 2], [2, 2]), 2)

    check("defining rep: trivial part",
          plethy.littlewood_restriction([1], [3]), 1)
    check("defining rep: standard part",
          plethy.littlewood_restriction([1], [2, 1]), 1)
    check("defining rep: sign part",
          plethy.littlewood_restriction([1], [1, 1, 1]), 0)

    check("staircase sum, trivial",
          plethy.corollary_trivial_multiplicity([2], 2), 2)
    check("staircase sum, sign",
          plethy.corollary_sign_multiplicity([1, 1], 2), 1)

    check("brute force table", plethy.brute_force_restriction([2], 2),
          {(2,): 2, (1, 1): 1})

    table = plethy.restriction_table(2, 2, route="brute")
    check("table entry", table[((2,), (2,))], 2)
    lw = plethy.restriction_table(2, 2)
    check("table routes agree", lw, table)

    h2 = plethy.plethysm("h", [2], 2, 2)
    check("h_2[H] at (1,1)", h2[(1, 1)], 2)
    conv = plethy.plethysm("h", [2], 2, 2, route="convolution")
    check("plethysm route agreement", h2, conv)

    ind = plethy.ch_ind("trivial", 2, n=2)
    check("induced dimension", ind["dimension"], 6)
    check("induced character term", ind["terms"][(1, 1)], 2)
    orbit = plethy.ch_ind("permutation", 1, mu=[2, 1], orbit=True)
    closed = plethy.ch_ind("permutation", 1, mu=[2, 1])
    check("orbit model agreement", orbit["terms"], closed["terms"])

    try:
        plethy.littlewood_restriction([1, 1, 1], [2])
    except ValueError:
        pass
    else:
        raise SystemExit("overlong shape was not rejected")

    print("ok")


if __name__ == "__main__":
    main()
