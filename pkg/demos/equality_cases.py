#!/usr/bin/env python3
"""Where the classical estimates for w(A) become equalities.

    ||A|| / 2 <= w(A) <= ||A||,   ||A*A + AA*|| / 4 <= w(A)^2 <= ||A*A + AA*|| / 2

The left ends are attained when A^2 = 0 and the right end of the first chain
when A is normal. Square-zero matrices are drawn as [[0, X], [0, 0]]; normal
ones as U diag(z) U* with a Haar unitary U.
"""

from radius_lab import EnsembleSpec, run_verification


def show(kind, ids, dim=4, trials=200):
    report = run_verification(EnsembleSpec(kind, dim, trials, seed=1), ids)
    print(f"\n{kind} ensemble, dim {dim}, {trials} trials")
    for bound_id in ids:
        st = report.per_bound[bound_id]
        print(
            f"  {bound_id:10s} tight in {st.tightness_hits:3d}/{st.trials} trials, "
            f"min slack {st.min_slack:.2e}, mean slack {st.mean_slack:.2e}"
        )


def main():
    print("Equality cases of the norm estimates")
    show("nilpotent2", ["eqv.lower", "k5.lower", "eqv.upper"])
    show("normal", ["eqv.upper", "eqv.lower"], dim=5)
    print("\nFor comparison, generic matrices are never tight:")
    show("general", ["eqv.lower", "k5.lower", "eqv.upper"])


if __name__ == "__main__":
    main()
