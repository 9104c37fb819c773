"""A small doubling experiment for the linear-time LexDFS+.

Times the compiled search and the naive label-based search on chordal
graphs of doubling size and prints the growth factor per step.  Pass
larger sizes on the command line, e.g. ``python3 demos/linearity.py 17``
for n up to 2**17.

    python3 demos/linearity.py
"""

import sys

from lexsearch.bench import format_table, growth_factors, run_bench

top = int(sys.argv[1]) if len(sys.argv) > 1 else 14
rows = run_bench(8, [2**e for e in range(10, top + 1)], seed=1, repeats=5, naive_max_n=4096, naive_repeats=3)
print(format_table(rows))
for (sg, tg), a in zip(growth_factors(rows), rows[1:]):
    print(f"  to n={a.n}: size x{sg:.2f}, time x{tg:.2f}")
for (sg, tg), a in zip(growth_factors(rows, naive=True), rows[1:]):
    print(f"  naive to n={a.n}: time x{tg:.2f}")
