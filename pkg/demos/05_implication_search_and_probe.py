"""
Monte Carlo implication search and sharpness probes
===================================================

Two eigenvalue thresholds on the second-kind operator control classical
positivity: strict 4.5-positivity forces positive isotropic curvature,
and strict (n+(n-2)/n)-positivity forces positive Ricci curvature. The
harness samples random tensors, boosts each into the hypothesis class by
adding a round-sphere multiple, and checks the conclusion on every
sample. A deliberately weakened hypothesis shows what a counterexample
report looks like, and interpolation probes confirm both boundary
models sit exactly on their thresholds.
"""

import curvop
from curvop.harness import implication_trial, replay_counterexample, sharpness_probe

# Strict 4.5-positivity => positive isotropic curvature, sampled over
# orthonormal 4-frames. Every boosted sample must pass.
report = implication_trial(4, "k4a0.5strict", "pic", trials=40, seed=0)
print(f"4.5-positive => PIC (n=4): {report.trials_passing}/{report.trials_attempted}"
      f" passing, verdict {report.verdict}")

# Strict (n+(n-2)/n)-positivity => positive Ricci, here n = 5 so the
# predicate is k5 with alpha = 3/5.
report = implication_trial(5, "k5a0.6strict", "ric", trials=40, seed=0)
print(f"(5+3/5)-positive => Ric > 0 (n=5): {report.trials_passing}/{report.trials_attempted}"
      f" passing, verdict {report.verdict}")

# Weakening the hypothesis to bare trace positivity (all nine eigenvalues
# summed, no slack) breaks the implication immediately.
report = implication_trial(4, "k9a0strict", "ric", trials=10, seed=123)
print(f"trace-positive => Ric > 0 (n=4): verdict {report.verdict},"
      f" {len(report.counterexamples)} counterexamples")
worst = report.counterexamples[0]
print(f"  first: hypothesis value {worst.hypothesis_value:+.6f},"
      f" Ricci minimum {worst.conclusion_value:+.6f}")

# Counterexamples replay exactly from their logged seed material.
tensor = replay_counterexample(report, 0)
print("  replayed Ricci minimum:", f"{curvop.ricci_min(tensor):+.6f}")

# Sharpness probe 1: walk from CP^2 toward the flat tensor. At t = 0 the
# threshold alpha_star(4) must equal 1/2 and the sampled isotropic
# minimum must vanish - CP^2 is 4.5-nonnegative but not PIC.
probe = sharpness_probe("cp2", "flat:n=4", steps=4, seed=0, iso_trials=10)
print("\nprobe cp2 -> flat: boundary ok =", probe.boundary_ok)
for row in probe.rows:
    star = f"{row.alpha_star:.6f}" if isinstance(row.alpha_star, float) else row.alpha_star
    print(f"  t={row.t:.3f}  alphaStar={star}  isoMin={row.iso_min:.2e}"
          f"  ricciMin={row.ricci_min:+.4f}")

# Sharpness probe 2: a unit S^4 x flat line in dimension five sits on the
# Ricci threshold - alpha_star(5) = 3/5 with Ricci minimum exactly zero.
probe = sharpness_probe("product:(sphere:n=4,k=1)x(flat:n=1)", "flat:n=5",
                        steps=2, seed=0, iso_trials=10)
print("probe S^4 x R -> flat: boundary ok =", probe.boundary_ok)
for name, (expected, actual, ok) in probe.boundary.items():
    print(f"  {name}: expected {expected}, actual {actual:.12g} [{'ok' if ok else 'FAIL'}]")
