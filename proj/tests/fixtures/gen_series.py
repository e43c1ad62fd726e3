#!/usr/bin/env python3
"""Regenerates series_fixtures.hpp with sympy. Run from this directory."""
import sympy as sp

u = sp.symbols("u")
S = lambda t: 2 * sp.sin(t * u / 2)


def expand(expr, order):
    shift = 8
    poly = sp.Poly(sp.expand(sp.series(expr, u, 0, order).removeO() * u**shift), u)
    return sorted((e - shift, str(c)) for (e,), c in poly.terms() if c != 0)


fixtures = []


def add(name, expr, order):
    fixtures.append((name, order, expand(expr, order)))


add("two_cos_half", 2 * sp.cos(u / 2), 6)
add("two_cos_one", 2 * sp.cos(u), 6)
for k in range(-6, 7):
    add(f"sin_pow_{k}".replace("-", "m"), S(1) ** k, 16)
for m in range(1, 9):
    add(f"sin_mult_{m}", S(m), 16)
add("rel_p2_d3", (10 + 2 * sp.cos(u)) * S(1), 16)
add("log_p2_d3", (10 + 2 * sp.cos(u)) * S(1) ** 7, 16)
add("vertex_2_empty", S(2) / 2, 16)
add("vertex_21_11", (S(2) / 2) * S(1) ** 3, 16)
add("vertex_3_22", (S(3) / 3) * (S(2) / 2) ** 2, 16)

with open("series_fixtures.hpp", "w") as f:
    f.write("// Generated by gen_series.py (sympy); do not edit.\n#pragma once\n\n")
    f.write("#include <utility>\n#include <vector>\n\nnamespace fixtures {\n\n")
    f.write("struct SeriesFixture {\n  const char* name;\n  int order;\n")
    f.write("  std::vector<std::pair<int, const char*>> terms;\n};\n\n")
    f.write("inline const std::vector<SeriesFixture>& series() {\n")
    f.write("  static const std::vector<SeriesFixture> all = {\n")
    for name, order, terms in fixtures:
        body = ", ".join(f'{{{e}, "{c}"}}' for e, c in terms)
        f.write(f'      {{"{name}", {order}, {{{body}}}}},\n')
    f.write("  };\n  return all;\n}\n\n}  // namespace fixtures\n")
