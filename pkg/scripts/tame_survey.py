#!/usr/bin/env python3
"""Survey tameness, Hopf-Galois verdicts and homology across instances.

Sweeps the builtin extension registry and prints one row per instance:
the hypothesis flags, the three verdicts of the field-case theorem and
whether the local-cocommutative equivalence applies.  A second table
shows semisimplicity of group algebras of order <= 8 over small primes.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hopfgal import actions, hopf, zoo
from hopfgal.linalg import GF


def yn(flag):
    return "yes" if flag else "no"


def main():
    print("extension registry")
    print(f"{'instance':24} {'ext':4} {'faith':5} {'rank':4} {'tame':4} "
          f"{'H-Gal':5} {'H0=0':4} {'local':5} {'equiv':5}")
    for name, d in sorted(zoo.extension_registry().items()):
        rep = actions.classify_extension(d)
        hom = actions.hopfological_homology_module(d.hopf, d.action)
        print(
            f"{name:24} {yn(rep.is_extension):4} {yn(rep.faithful):5} "
            f"{yn(rep.rank_equal):4} {yn(rep.tame):4} {yn(rep.hopf_galois):5} "
            f"{yn(hom.dim_h0 == 0):4} {yn(rep.hopf_local):5} {yn(rep.equivalence_applies):5}"
        )
        if rep.equivalence_applies:
            assert rep.tame == (hom.dim_h0 == 0) == rep.j_bijective

    print()
    print("group algebra semisimplicity over F_p (Maschke via the integral)")
    primes = (2, 3, 5, 7)
    header = "group".ljust(10) + "".join(f"p={p:<6}" for p in primes)
    print(header)
    for name in sorted(zoo.GROUP_TABLES, key=lambda n: (len(zoo.GROUP_TABLES[n]), n)):
        table = zoo.GROUP_TABLES[name]
        row = name.ljust(10)
        for p in primes:
            h = hopf.group_algebra(GF(p), table)
            flag = hopf.is_semisimple(h)
            assert flag == (len(table) % p != 0)
            row += ("ss" if flag else "-").ljust(7)
        print(row)


if __name__ == "__main__":
    main()
