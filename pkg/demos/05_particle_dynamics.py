"""The interacting particle picture and its Monte Carlo sampler.

In the stochastic regime the vertex weights are transition probabilities:
reading the lattice from the top, particles enter on the left of each
Gamma row, jump rightward, bounce (or are absorbed/emitted) at the caps,
and jump leftward along the Delta row below.  The partition function with
bottom boundary lambda is precisely the probability of ending in lambda
without ever leaving past column L.

The sampler is counter-based and seeded: outcome histograms are exact
functions of (spec, seed, num_samples).
"""

from fractions import Fraction as F

from symplectic_ice import (LatticeSpec, Model, Partition,
                            SamplerConfig, SignedPermutation,
                            compare_empirical_to_exact,
                            exact_outcome_probabilities,
                            exhaustive_distribution, run_sampler,
                            sample_configuration,
                            trajectory_from_configuration, render_state)
from symplectic_ice import ParamPoint
from symplectic_ice.cli import outcome_str

point = ParamPoint((F(3, 4), F(3, 4)), F(1, 2))

spec = LatticeSpec(Model.COLORED_SIGNED, 2, 4, Partition((0, 0)), point,
                   SignedPermutation.identity(2), SignedPermutation.identity(2))

# ------------------------------------------------------------------
# one sample, drawn reproducibly, with its trajectory
# ------------------------------------------------------------------
out = sample_configuration(SamplerConfig(spec, seed=12, num_samples=1), index=5)
print("outcome:", outcome_str(out.key), "escaped" if out.escaped else "")
print(render_state(out.config, "ascii"))
print("positions (column, color) at times t = 0..2n:")
for t, layer in enumerate(trajectory_from_configuration(out.config)):
    print(f"  t={t}: {layer}")
print()

# ------------------------------------------------------------------
# the sampler's law is exactly the family of partition functions:
# for a small system, sum over every branch of the process
# ------------------------------------------------------------------
small = LatticeSpec(Model.UNCOLORED_REFLECTING, 1, 2, Partition((0,)),
                    ParamPoint((F(3, 4),), F(1, 2)))
dist = exhaustive_distribution(small)
print("exact sampler law, reflecting n=1 L=2:")
for key, p in sorted(dist.items(), key=repr):
    print(f"  {outcome_str(key):<14} {p}")
print("  total:", sum(dist.values()))
print()

# ------------------------------------------------------------------
# empirical frequencies against the exact probabilities
# ------------------------------------------------------------------
summary = run_sampler(SamplerConfig(spec, seed=12, num_samples=20000))
report = compare_empirical_to_exact(summary, exact_outcome_probabilities(spec))
print(f"20000 colored samples: escapes = {summary.escape_count}")
print(f"{'outcome':<28} {'count':>7} {'exact p':>12} {'z':>7}")
for row in sorted(report.rows, key=lambda r: -float(r.probability)):
    print(f"{outcome_str(row.key):<28} {row.count:>7} "
          f"{float(row.probability):>12.6f} {row.z_score:>7.2f}")
print(f"chi2 = {report.chi2_stat:.3f} on {report.dof} dof "
      f"(0.999 quantile {report.chi2_quantile:.1f}); max z = {report.max_z:.2f}")
