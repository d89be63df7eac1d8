"""A complex iteration that explodes, rescued by the double Newton step.

The bundled map has a double root of z - u(z) at z = 2.  Plain iteration
from 1.9+0.1i leaves the basin immediately and overflows within four
steps; the accelerated step walks straight in.
"""

from fpaccel import corpus_lookup, iterate, standard_step
from fpaccel.cli import run_experiment, render

prob = corpus_lookup("kvb_complex")

exp = run_experiment(prob, ["plain", "standard"], max_iter=5)
print(render(exp, "markdown"))
print()

tr = iterate(lambda z: standard_step(z, prob.map.at(z)), prob.x0, 8)
final = tr.last()
print(f"accelerated run: {tr.stop_reason.value} after {len(tr.points) - 1} steps")
print(f"final point {final:.17g}, distance to 2: {abs(final - 2.0):.3e}")
