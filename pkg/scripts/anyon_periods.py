"""Quotient dimensions, anyon periods and minimal tori for the worked examples."""

import argparse

from toricgb.algebra import (
    factor_univariate,
    k_max,
    minimal_full_k_twisted,
    minimal_untwisted_torus,
    univariate_generator,
)
from toricgb.poly2 import parse, render

EXAMPLES = [
    ("toric code", "1 + x", "1 + y"),
    ("color code", "1 + x + x*y", "1 + y + x*y"),
    ("(3,3) bicycle", "1 + x + x^-1*y^3", "1 + y + x^3*y^-1"),
    ("(3,-3) bicycle", "1 + x + x^-1*y^-3", "1 + y + x^3*y^-1"),
    ("(4,-4) bicycle", "1 + x + x^-1*y^-4", "1 + y + x^4*y^-1"),
]


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--twist-max-beta", type=int, default=10**4, help="skip twisted tori with larger beta")
    args = p.parse_args(argv)
    for name, fs, gs in EXAMPLES:
        f, g = parse(fs), parse(gs)
        lx, ly = minimal_untwisted_torus(f, g)
        print(f"{name}: f = {fs}, g = {gs}")
        print(f"  k_max = {k_max(f, g)}, L_x = {lx}, L_y = {ly}")
        for var in ("y", "x"):
            h = univariate_generator(f, g, var)
            facs = " * ".join(f"({render(q)})" + (f"^{m}" if m > 1 else "") for q, m in factor_univariate(h, var).factors)
            print(f"  h({var}) = {render(h)} = {facs or '1'}")
        tw = minimal_full_k_twisted(f, g, max_beta=args.twist_max_beta)
        if tw is not None:
            print(f"  smallest twisted torus with full k: a1 = {tw.a1}, a2 = {tw.a2}, n = {tw.n}")


if __name__ == "__main__":
    main()
