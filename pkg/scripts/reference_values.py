#!/usr/bin/env python3
"""Print the worked reference values: a sample pattern, one branching component, rank-one Whittaker values, a Gauss table."""

from metaplectic.coefficients import gt_coefficient
from metaplectic.crystal import GTPattern, decorations, gamma_of, mu_components, weight_of
from metaplectic.gauss import GaussContext, gauss_gflat, gauss_hflat
from metaplectic.operators import whittaker_value


def main() -> None:
    p = GTPattern(((3, 1, 0), (3, 1), (2,)))
    print("pattern", p.render())
    print("  gamma", gamma_of(p).as_lists())
    print("  decorations", {f"{i}{j}": d for (i, j), d in sorted(decorations(p).items())})
    print("  weight", weight_of(p))
    for n in (1, 2):
        print(f"  coefficient n={n}:", gt_coefficient(p, n).render())

    print("\ncomponent mu=(3,0) of top row (3,1,0), n=1")
    for mu, verts in mu_components((3, 1, 0)):
        if mu == (3, 0):
            for v in verts:
                print(f"  {v.render():<14} wt={weight_of(v)}  coeff={gt_coefficient(v, 1).render()}")

    print("\nWhittaker values")
    for lam, n in [((1, 0), 1), ((0, 0), 1), ((1, 0), 2), ((1, 1, 0), 2)]:
        print(f"  lambda={lam} n={n}: {whittaker_value(lam, n).render()}")

    ctx = GaussContext(5, 2)
    print("\nGauss sums p=5 n=2")
    for a in range(5):
        g = gauss_gflat(a, ctx)
        print(f"  a={a}  gflat={g.real:+.12f}{g.imag:+.12f}i  hflat={gauss_hflat(a, ctx):.12f}")


if __name__ == "__main__":
    main()
